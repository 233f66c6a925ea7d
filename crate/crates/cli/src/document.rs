//! Input documents: TOML or JSON, tagged by `kind`.
//!
//! Loading resolves catalog names and embedding kinds into explicit data.
//! The resolved document, serialized again, is self-contained: groups are
//! inline, embeddings are explicit maps and the cutoff is filled in.

use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sullivan_core::criteria::formal_dimension;
use sullivan_core::models::{
    almost_free_quotient_model, DiagramSpec, GroupData, GroupDiagram, GroupFlags, RestrictionMap,
};
use sullivan_core::{Element, Generator, SullivanAlgebra};

use crate::catalog;
use crate::error::CliError;
use crate::examples;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
}

/// A Sullivan algebra without a cutoff, the space `X` of an action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
}

fn yes() -> bool {
    true
}

/// User-asserted topological flags. Only connectedness defaults to true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsSpec {
    #[serde(default = "yes")]
    pub connected: bool,
    #[serde(default)]
    pub pi1_torsion_free: bool,
    #[serde(default)]
    pub steinberg: bool,
}

impl Default for FlagsSpec {
    fn default() -> Self {
        FlagsSpec {
            connected: true,
            pi1_torsion_free: false,
            steinberg: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineGroup {
    pub name: String,
    pub rank: usize,
    pub dim: u32,
    pub degrees: Vec<u32>,
    /// Classifying generator names; `b1..b_rank` when omitted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default)]
    pub flags: FlagsSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(InlineGroup),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingSpec {
    pub source: String,
    pub target: String,
    /// A catalog embedding; needs both groups given by catalog name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default)]
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomogeneousDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(rename = "G")]
    pub g: GroupRef,
    #[serde(rename = "H")]
    pub h: GroupRef,
    /// One entry, `G_H`.
    pub embeddings: BTreeMap<String, EmbeddingSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiquotientDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(rename = "G")]
    pub g: GroupRef,
    #[serde(rename = "H")]
    pub h: GroupRef,
    /// `left` and `right`, both from `G` to `H`.
    pub embeddings: BTreeMap<String, EmbeddingSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(rename = "G")]
    pub g: GroupRef,
    #[serde(rename = "H")]
    pub h: GroupRef,
    #[serde(rename = "Kminus")]
    pub k_minus: GroupRef,
    #[serde(rename = "Kplus")]
    pub k_plus: GroupRef,
    /// `G_Kminus`, `G_Kplus` and optionally `Kminus_H`, `Kplus_H`.
    pub embeddings: BTreeMap<String, EmbeddingSpec>,
    /// Synthesize missing `K± -> H` maps by generator name.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub assume_surjective: bool,
    /// `(ℓ-, ℓ+)`; checked against the groups when given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sphere_dims: Option<[u32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlmostFreeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(rename = "X")]
    pub x: SpaceSpec,
    #[serde(rename = "G")]
    pub g: GroupRef,
    /// Twisted differentials of `X` generators, in `X` and `BG` generators.
    #[serde(default)]
    pub action: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Algebra(AlgebraDoc),
    Homogeneous(HomogeneousDoc),
    Biquotient(BiquotientDoc),
    Coho1(DiagramDoc),
    AlmostFree(AlmostFreeDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Homogeneous(_) => "homogeneous",
            Document::Biquotient(_) => "biquotient",
            Document::Coho1(_) => "coho1",
            Document::AlmostFree(_) => "almost_free",
        }
    }
}

/// Resolved mathematical content of a document.
#[derive(Debug, Clone)]
pub enum Input {
    Algebra(SullivanAlgebra),
    Homogeneous {
        g: GroupData,
        h: GroupData,
        rho: RestrictionMap,
    },
    Biquotient {
        g: GroupData,
        h: GroupData,
        left: RestrictionMap,
        right: RestrictionMap,
    },
    Coho1(Box<GroupDiagram>),
    AlmostFree {
        x: SullivanAlgebra,
        g: GroupData,
        action: Vec<(String, String)>,
        model: SullivanAlgebra,
    },
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub input: Input,
    pub cutoff: u32,
    /// The normalized, self-contained document.
    pub document: Document,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Toml,
    Json,
}

impl Format {
    pub fn guess(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Toml
        }
    }
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn typed<T: DeserializeOwned>(value: serde_json::Value) -> Result<T, CliError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        schema(path, e.into_inner().to_string())
    })
}

/// Parses a document without resolving it.
pub fn parse(text: &str, format: Format) -> Result<Document, CliError> {
    let value: serde_json::Value = match format {
        Format::Json => serde_json::from_str(text).map_err(|e| schema(".", e.to_string()))?,
        Format::Toml => toml::from_str(text).map_err(|e| schema(".", e.message().to_string()))?,
    };
    let serde_json::Value::Object(mut fields) = value else {
        return Err(schema(".", "expected a table"));
    };
    let kind = match fields.remove("kind") {
        Some(serde_json::Value::String(s)) => s,
        Some(_) => return Err(schema("kind", "expected a string")),
        None => return Err(schema("kind", "missing document kind")),
    };
    let rest = serde_json::Value::Object(fields);
    Ok(match kind.as_str() {
        "algebra" => Document::Algebra(typed(rest)?),
        "homogeneous" => Document::Homogeneous(typed(rest)?),
        "biquotient" => Document::Biquotient(typed(rest)?),
        "coho1" => Document::Coho1(typed(rest)?),
        "almost_free" => Document::AlmostFree(typed(rest)?),
        other => {
            return Err(schema(
                "kind",
                format!(
                    "unknown kind `{other}`, expected algebra, homogeneous, biquotient, coho1 or almost_free"
                ),
            ))
        }
    })
}

/// Reads `@name` as a built-in example, anything else as a file path.
pub fn read_source(source: &str) -> Result<String, CliError> {
    if let Some(name) = source.strip_prefix('@') {
        return examples::text(name)
            .ok_or_else(|| CliError::UnknownCatalogName(format!("example `{name}`")));
    }
    std::fs::read_to_string(source).map_err(|e| CliError::Io {
        path: source.to_string(),
        source: e,
    })
}

pub fn load_source(source: &str, cutoff: Option<u32>) -> Result<Loaded, CliError> {
    let text = read_source(source)?;
    let format = if source.ends_with(".json") {
        Format::Json
    } else {
        Format::guess(&text)
    };
    load(&text, format, cutoff)
}

/// Parses and resolves; `cutoff` overrides the document's.
pub fn load(text: &str, format: Format, cutoff: Option<u32>) -> Result<Loaded, CliError> {
    resolve(parse(text, format)?, cutoff)
}

pub fn serialize(doc: &Document, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            serde_json::to_string_pretty(doc).map_err(|e| CliError::Computation(e.to_string()))
        }
        Format::Toml => toml::to_string(doc).map_err(|e| CliError::Computation(e.to_string())),
    }
}

/// `serialize(load(text))`.
pub fn normalize(text: &str, format: Format, out: Format) -> Result<String, CliError> {
    serialize(&load(text, format, None)?.document, out)
}

fn resolve_group(r: &GroupRef) -> Result<GroupData, CliError> {
    match r {
        GroupRef::Name(name) => catalog::group(name),
        GroupRef::Inline(g) => {
            let gens = g
                .generators
                .clone()
                .unwrap_or_else(|| (1..=g.rank).map(|i| format!("b{i}")).collect());
            let flags = GroupFlags {
                connected: g.flags.connected,
                pi1_torsion_free: g.flags.pi1_torsion_free,
                steinberg: g.flags.steinberg,
            };
            Ok(GroupData::new(
                g.name.clone(),
                g.rank,
                g.dim,
                g.degrees.clone(),
                gens,
                flags,
            )?)
        }
    }
}

fn inline(g: &GroupData) -> GroupRef {
    GroupRef::Inline(InlineGroup {
        name: g.name.clone(),
        rank: g.rank,
        dim: g.dimension,
        degrees: g.exterior_degrees.clone(),
        generators: Some(g.generators.clone()),
        flags: FlagsSpec {
            connected: g.flags.connected,
            pi1_torsion_free: g.flags.pi1_torsion_free,
            steinberg: g.flags.steinberg,
        },
    })
}

struct Role<'a> {
    name: &'a str,
    group_ref: &'a GroupRef,
    data: GroupData,
}

fn take_embedding<'a>(
    embeddings: &'a BTreeMap<String, EmbeddingSpec>,
    key: &str,
    source: &Role,
    target: &Role,
) -> Option<Result<(&'a EmbeddingSpec, String), CliError>> {
    let spec = embeddings.get(key)?;
    let path = format!("embeddings.{key}");
    if spec.source != source.name || spec.target != target.name {
        return Some(Err(schema(
            path,
            format!(
                "expected source `{}` and target `{}`, found `{}` and `{}`",
                source.name, target.name, spec.source, spec.target
            ),
        )));
    }
    Some(Ok((spec, path)))
}

fn resolve_embedding(
    spec: &EmbeddingSpec,
    path: &str,
    source: &Role,
    target: &Role,
) -> Result<RestrictionMap, CliError> {
    match &spec.kind {
        Some(kind) => {
            if !spec.map.is_empty() {
                return Err(schema(path, "give either `kind` or `map`, not both"));
            }
            match (source.group_ref, target.group_ref) {
                (GroupRef::Name(a), GroupRef::Name(b)) => catalog::embedding(kind, a, b),
                _ => Err(CliError::Validation(format!(
                    "{path}: catalog embedding `{kind}` needs both groups given by catalog name"
                ))),
            }
        }
        None => {
            let pairs: Vec<(&str, &str)> = spec
                .map
                .iter()
                .map(|(k, v)| (k.as_str(), v.as_str()))
                .collect();
            RestrictionMap::from_strings(source.data.clone(), target.data.clone(), &pairs)
                .map_err(|e| CliError::Validation(format!("{path}: {e}")))
        }
    }
}

fn explicit(rho: &RestrictionMap, source: &str, target: &str) -> EmbeddingSpec {
    EmbeddingSpec {
        source: source.into(),
        target: target.into(),
        kind: None,
        map: rho.image_strings().into_iter().collect(),
    }
}

fn check_keys(
    embeddings: &BTreeMap<String, EmbeddingSpec>,
    allowed: &[&str],
) -> Result<(), CliError> {
    for key in embeddings.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(
                format!("embeddings.{key}"),
                format!(
                    "unexpected embedding, expected one of {}",
                    allowed.join(", ")
                ),
            ));
        }
    }
    Ok(())
}

fn required(
    embeddings: &BTreeMap<String, EmbeddingSpec>,
    key: &str,
    source: &Role,
    target: &Role,
) -> Result<RestrictionMap, CliError> {
    let (spec, path) = take_embedding(embeddings, key, source, target)
        .ok_or_else(|| schema(format!("embeddings.{key}"), "missing embedding"))??;
    resolve_embedding(spec, &path, source, target)
}

fn role<'a>(name: &'a str, group_ref: &'a GroupRef) -> Result<Role<'a>, CliError> {
    Ok(Role {
        name,
        group_ref,
        data: resolve_group(group_ref)?,
    })
}

fn build_space(
    generators: &[GeneratorSpec],
    differential: &BTreeMap<String, String>,
    cutoff: u32,
) -> Result<SullivanAlgebra, CliError> {
    let gens: Vec<Generator> = generators
        .iter()
        .map(|g| Generator::new(g.name.clone(), g.degree))
        .collect();
    let free = SullivanAlgebra::free(gens.clone(), cutoff)?;
    let mut diff = vec![Element::zero(); gens.len()];
    for (name, text) in differential {
        let i = free
            .generator_index(name)
            .ok_or_else(|| schema(format!("differential.{name}"), "not a generator"))?;
        diff[i] = free
            .parse(text)
            .map_err(|e| CliError::Validation(format!("differential.{name}: {e}")))?;
    }
    Ok(SullivanAlgebra::new(gens, diff, cutoff)?)
}

fn space_spec(a: &SullivanAlgebra) -> (Vec<GeneratorSpec>, BTreeMap<String, String>) {
    let gens = a
        .generators()
        .iter()
        .map(|g| GeneratorSpec {
            name: g.name.clone(),
            degree: g.degree,
        })
        .collect();
    let diff = a
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, _)| !a.d_generator(*i).is_zero())
        .map(|(i, g)| (g.name.clone(), a.format(a.d_generator(i))))
        .collect();
    (gens, diff)
}

fn nonnegative(fd: i64) -> u32 {
    fd.max(0) as u32
}

pub fn resolve(doc: Document, cutoff_override: Option<u32>) -> Result<Loaded, CliError> {
    match doc {
        Document::Algebra(a) => {
            // formal dimension only needs the generators
            let probe = build_space(&a.generators, &BTreeMap::new(), 0)?;
            let cutoff = cutoff_override
                .or(a.cutoff)
                .unwrap_or_else(|| nonnegative(formal_dimension(&probe)));
            let alg = build_space(&a.generators, &a.differential, cutoff)?;
            let (generators, differential) = space_spec(&alg);
            Ok(Loaded {
                document: Document::Algebra(AlgebraDoc {
                    cutoff: Some(cutoff),
                    generators,
                    differential,
                }),
                input: Input::Algebra(alg),
                cutoff,
            })
        }
        Document::Homogeneous(d) => {
            let g = role("G", &d.g)?;
            let h = role("H", &d.h)?;
            check_keys(&d.embeddings, &["G_H"])?;
            let rho = required(&d.embeddings, "G_H", &g, &h)?;
            let cutoff = cutoff_override
                .or(d.cutoff)
                .unwrap_or_else(|| g.data.dimension.saturating_sub(h.data.dimension));
            let document = Document::Homogeneous(HomogeneousDoc {
                cutoff: Some(cutoff),
                g: inline(&g.data),
                h: inline(&h.data),
                embeddings: BTreeMap::from([("G_H".to_string(), explicit(&rho, "G", "H"))]),
            });
            Ok(Loaded {
                input: Input::Homogeneous {
                    g: g.data,
                    h: h.data,
                    rho,
                },
                cutoff,
                document,
            })
        }
        Document::Biquotient(d) => {
            let g = role("G", &d.g)?;
            let h = role("H", &d.h)?;
            check_keys(&d.embeddings, &["left", "right"])?;
            let left = required(&d.embeddings, "left", &g, &h)?;
            let right = required(&d.embeddings, "right", &g, &h)?;
            let cutoff = cutoff_override
                .or(d.cutoff)
                .unwrap_or_else(|| g.data.dimension.saturating_sub(h.data.dimension));
            let document = Document::Biquotient(BiquotientDoc {
                cutoff: Some(cutoff),
                g: inline(&g.data),
                h: inline(&h.data),
                embeddings: BTreeMap::from([
                    ("left".to_string(), explicit(&left, "G", "H")),
                    ("right".to_string(), explicit(&right, "G", "H")),
                ]),
            });
            Ok(Loaded {
                input: Input::Biquotient {
                    g: g.data,
                    h: h.data,
                    left,
                    right,
                },
                cutoff,
                document,
            })
        }
        Document::Coho1(d) => {
            let g = role("G", &d.g)?;
            let h = role("H", &d.h)?;
            let km = role("Kminus", &d.k_minus)?;
            let kp = role("Kplus", &d.k_plus)?;
            check_keys(
                &d.embeddings,
                &["G_Kminus", "G_Kplus", "Kminus_H", "Kplus_H"],
            )?;
            let g_km = required(&d.embeddings, "G_Kminus", &g, &km)?;
            let g_kp = required(&d.embeddings, "G_Kplus", &g, &kp)?;
            let optional =
                |key: &str, src: &Role, tgt: &Role| -> Result<Option<RestrictionMap>, CliError> {
                    match take_embedding(&d.embeddings, key, src, tgt) {
                        None => Ok(None),
                        Some(r) => {
                            let (spec, path) = r?;
                            resolve_embedding(spec, &path, src, tgt).map(Some)
                        }
                    }
                };
            let km_h = optional("Kminus_H", &km, &h)?;
            let kp_h = optional("Kplus_H", &kp, &h)?;
            let diagram = GroupDiagram::new(DiagramSpec {
                g: g.data.clone(),
                h: h.data.clone(),
                k_minus: km.data.clone(),
                k_plus: kp.data.clone(),
                g_to_k_minus: g_km,
                g_to_k_plus: g_kp,
                k_minus_to_h: km_h,
                k_plus_to_h: kp_h,
                assume_surjective: d.assume_surjective,
            })?;
            let dims = [diagram.sphere_dims.0, diagram.sphere_dims.1];
            if let Some(given) = d.sphere_dims {
                if given != dims {
                    return Err(CliError::Validation(format!(
                        "sphere_dims {given:?} do not match the groups, which give {dims:?}"
                    )));
                }
            }
            let cutoff = cutoff_override
                .or(d.cutoff)
                .unwrap_or_else(|| diagram.default_cutoff());
            let embeddings = BTreeMap::from([
                (
                    "G_Kminus".to_string(),
                    explicit(&diagram.g_to_k_minus, "G", "Kminus"),
                ),
                (
                    "G_Kplus".to_string(),
                    explicit(&diagram.g_to_k_plus, "G", "Kplus"),
                ),
                (
                    "Kminus_H".to_string(),
                    explicit(&diagram.k_minus_to_h, "Kminus", "H"),
                ),
                (
                    "Kplus_H".to_string(),
                    explicit(&diagram.k_plus_to_h, "Kplus", "H"),
                ),
            ]);
            let document = Document::Coho1(DiagramDoc {
                cutoff: Some(cutoff),
                g: inline(&g.data),
                h: inline(&h.data),
                k_minus: inline(&km.data),
                k_plus: inline(&kp.data),
                embeddings,
                assume_surjective: false,
                sphere_dims: Some(dims),
            });
            Ok(Loaded {
                input: Input::Coho1(Box::new(diagram)),
                cutoff,
                document,
            })
        }
        Document::AlmostFree(d) => {
            let g = role("G", &d.g)?;
            let action: Vec<(String, String)> = d
                .action
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let pairs: Vec<(&str, &str)> = action
                .iter()
                .map(|(k, v)| (k.as_str(), v.as_str()))
                .collect();
            let x0 = build_space(&d.x.generators, &d.x.differential, 0)?;
            let probe = almost_free_quotient_model(&x0, &g.data, &pairs, 0)?;
            let cutoff = cutoff_override
                .or(d.cutoff)
                .unwrap_or_else(|| nonnegative(formal_dimension(&probe)));
            let x = x0.with_cutoff(cutoff);
            let model = almost_free_quotient_model(&x, &g.data, &pairs, cutoff)?;
            let (generators, differential) = space_spec(&x);
            let normalized_action = action
                .iter()
                .map(|(k, _)| {
                    let i = model.generator_index(k).expect("validated generator");
                    (k.clone(), model.format(model.d_generator(i)))
                })
                .collect();
            let document = Document::AlmostFree(AlmostFreeDoc {
                cutoff: Some(cutoff),
                x: SpaceSpec {
                    generators,
                    differential,
                },
                g: inline(&g.data),
                action: normalized_action,
            });
            Ok(Loaded {
                input: Input::AlmostFree {
                    x,
                    g: g.data,
                    action,
                    model,
                },
                cutoff,
                document,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S2: &str = r#"
kind = "homogeneous"
G = "SU2"
H = "S1"

[embeddings.G_H]
source = "G"
target = "H"
kind = "maxtorus"
"#;

    #[test]
    fn catalog_names_resolve() {
        let l = load(S2, Format::Toml, None).unwrap();
        assert_eq!(l.cutoff, 2);
        let Document::Homogeneous(d) = &l.document else {
            panic!("kind")
        };
        assert_eq!(d.embeddings["G_H"].map["p"], "t1^2");
        assert!(matches!(d.g, GroupRef::Inline(_)));
    }

    #[test]
    fn normalized_document_reloads_to_itself() {
        let l = load(S2, Format::Toml, None).unwrap();
        for f in [Format::Toml, Format::Json] {
            let text = serialize(&l.document, f).unwrap();
            let again = load(&text, f, None).unwrap();
            assert_eq!(again.document, l.document);
        }
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad = S2.replace("source = \"G\"", "source = \"G\"\nsorce = 1");
        match load(&bad, Format::Toml, None) {
            Err(CliError::Schema { path, .. }) => assert!(path.contains("embeddings"), "{path}"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            load("", Format::Toml, None),
            Err(CliError::Schema { .. })
        ));
        assert!(matches!(
            load("kind = \"torus\"", Format::Toml, None),
            Err(CliError::Schema { .. })
        ));
    }

    #[test]
    fn inline_groups_need_explicit_maps() {
        let text = r#"
kind = "homogeneous"
H = "e"
G = { name = "S3", rank = 1, dim = 3, degrees = [3] }
[embeddings.G_H]
source = "G"
target = "H"
kind = "trivial"
"#;
        assert!(matches!(
            load(text, Format::Toml, None),
            Err(CliError::Validation(_))
        ));
        let fixed = text.replace("kind = \"trivial\"", "map = { b1 = \"0\" }");
        let l = load(&fixed, Format::Toml, None).unwrap();
        assert_eq!(l.cutoff, 3);
    }

    #[test]
    fn algebra_default_cutoff_is_formal_dimension() {
        let text = r#"
kind = "algebra"
generators = [{ name = "x", degree = 2 }, { name = "y", degree = 5 }]
differential = { y = "x^3" }
"#;
        let l = load(text, Format::Toml, None).unwrap();
        assert_eq!(l.cutoff, 4);
        assert_eq!(load(text, Format::Toml, Some(9)).unwrap().cutoff, 9);
    }
}
