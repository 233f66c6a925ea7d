//! Built-in groups, standard embeddings and example inputs.
//!
//! Group names: a base name (`SU2`, `T3`, `G2`, ...) or a product of base
//! names joined by `x` with optional powers, e.g. `SU2^3` or `SU2xT1`. In a
//! product with more than one factor, each classifying generator gets the
//! factor position appended (`p` becomes `p1`, `t1` becomes `t1_2`).

use sullivan_core::cdga::{Element, SullivanAlgebra};
use sullivan_core::models::{GroupData, GroupFlags, RestrictionMap};

use crate::error::CliError;

struct Base {
    name: &'static str,
    degrees: &'static [u32],
    generators: &'static [&'static str],
    flags: GroupFlags,
    /// Images of the generators under restriction to the maximal torus,
    /// in `t1..t_rank`.
    torus: &'static [&'static str],
    about: &'static str,
}

const SIMPLY_CONNECTED: GroupFlags = GroupFlags {
    connected: true,
    pi1_torsion_free: true,
    steinberg: true,
};

const BASES: &[Base] = &[
    Base {
        name: "e",
        degrees: &[],
        generators: &[],
        flags: SIMPLY_CONNECTED,
        torus: &[],
        about: "trivial group",
    },
    Base {
        name: "SU2",
        degrees: &[3],
        generators: &["p"],
        flags: SIMPLY_CONNECTED,
        torus: &["t1^2"],
        about: "SU(2) = Sp(1) = S^3; p = -c2",
    },
    Base {
        name: "SU3",
        degrees: &[3, 5],
        generators: &["c2", "c3"],
        flags: SIMPLY_CONNECTED,
        torus: &["-t1^2-t1*t2-t2^2", "-t1^2*t2-t1*t2^2"],
        about: "SU(3) with Chern classes c2, c3",
    },
    Base {
        name: "SU4",
        degrees: &[3, 5, 7],
        generators: &["c2", "c3", "c4"],
        flags: SIMPLY_CONNECTED,
        torus: &[
            "-t1^2-t2^2-t3^2-t1*t2-t1*t3-t2*t3",
            "-t1^2*t2-t1^2*t3-t1*t2^2-t2^2*t3-t1*t3^2-t2*t3^2-2*t1*t2*t3",
            "-t1^2*t2*t3-t1*t2^2*t3-t1*t2*t3^2",
        ],
        about: "SU(4) with Chern classes c2, c3, c4",
    },
    Base {
        name: "SO3",
        degrees: &[3],
        generators: &["p1"],
        flags: GroupFlags {
            connected: true,
            pi1_torsion_free: false,
            steinberg: true,
        },
        torus: &["t1^2"],
        about: "SO(3); pi1 = Z/2",
    },
    Base {
        name: "SO4",
        degrees: &[3, 3],
        generators: &["a", "b"],
        flags: GroupFlags {
            connected: true,
            pi1_torsion_free: false,
            steinberg: false,
        },
        torus: &["t1^2+2*t1*t2+t2^2", "t1^2-2*t1*t2+t2^2"],
        about: "SO(4); a, b are the classes of the two SU(2) factors of the double cover",
    },
    Base {
        name: "Sp2",
        degrees: &[3, 7],
        generators: &["s1", "s2"],
        flags: SIMPLY_CONNECTED,
        torus: &["t1^2+t2^2", "t1^2*t2^2"],
        about: "Sp(2) with symplectic Pontryagin classes s1, s2",
    },
    Base {
        name: "G2",
        degrees: &[3, 11],
        generators: &["y4", "y12"],
        flags: SIMPLY_CONNECTED,
        torus: &["t1^2+t1*t2+t2^2", "t1^4*t2^2+2*t1^3*t2^3+t1^2*t2^4"],
        about: "exceptional group G2",
    },
];

/// `(group, subgroup, images)` for block embeddings between base groups.
const BLOCKS: &[(&str, &str, &[&str])] = &[
    ("SU3", "SU2", &["-p", "0"]),
    ("SU4", "SU2", &["-p", "0", "0"]),
    ("SU4", "SU3", &["c2", "c3", "0"]),
    ("G2", "SU3", &["-c2", "c3^2"]),
    (
        "G2",
        "SO4",
        &["1/4*a+3/4*b", "1/16*a^2*b-1/8*a*b^2+1/16*b^3"],
    ),
    ("Sp2", "SU2", &["p", "0"]),
];

const ALIASES: &[(&str, &str)] = &[("Sp1", "SU2"), ("S1", "T1"), ("U1", "T1"), ("SO2", "T1")];

fn canonical(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect()
}

fn resolve_alias(name: &str) -> String {
    ALIASES
        .iter()
        .find(|(a, _)| *a == name)
        .map(|(_, b)| b.to_string())
        .unwrap_or_else(|| name.to_string())
}

/// A single factor: a base group or a torus `Tn`.
#[derive(Debug, Clone)]
struct Factor {
    name: String,
    degrees: Vec<u32>,
    generators: Vec<String>,
    flags: GroupFlags,
    torus: Vec<String>,
}

fn factor(name: &str) -> Option<Factor> {
    let name = resolve_alias(name);
    if let Some(b) = BASES.iter().find(|b| b.name == name) {
        return Some(Factor {
            name,
            degrees: b.degrees.to_vec(),
            generators: b.generators.iter().map(|s| s.to_string()).collect(),
            flags: b.flags,
            torus: b.torus.iter().map(|s| s.to_string()).collect(),
        });
    }
    let n: usize = name.strip_prefix('T')?.parse().ok()?;
    if n == 0 {
        return factor("e");
    }
    let gens: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    Some(Factor {
        name,
        degrees: vec![1; n],
        generators: gens.clone(),
        flags: SIMPLY_CONNECTED,
        torus: gens,
    })
}

fn factors(name: &str) -> Result<Vec<Factor>, CliError> {
    let canon = canonical(name);
    let unknown = || CliError::UnknownCatalogName(name.to_string());
    if canon.is_empty() {
        return Err(unknown());
    }
    let mut out = Vec::new();
    for part in canon.split('x') {
        let (base, power) = match part.split_once('^') {
            Some((b, p)) => (b, p.parse::<usize>().map_err(|_| unknown())?),
            None => (part, 1),
        };
        let f = factor(base).ok_or_else(unknown)?;
        for _ in 0..power {
            out.push(f.clone());
        }
    }
    // the trivial group is a unit for products
    let nontrivial: Vec<Factor> = out
        .iter()
        .filter(|f| !f.degrees.is_empty())
        .cloned()
        .collect();
    if nontrivial.is_empty() {
        return Ok(vec![factor("e").expect("base")]);
    }
    Ok(nontrivial)
}

fn factor_generator(name: &str, i: usize, count: usize) -> String {
    if count == 1 {
        name.to_string()
    } else if name.ends_with(|c: char| c.is_ascii_digit()) {
        format!("{name}_{i}")
    } else {
        format!("{name}{i}")
    }
}

fn display_name(name: &str) -> String {
    let canon = canonical(name);
    canon
        .split('x')
        .map(|p| match p.split_once('^') {
            Some((b, k)) => format!("{}^{k}", resolve_alias(b)),
            None => resolve_alias(p),
        })
        .collect::<Vec<_>>()
        .join("x")
}

/// Looks up a base group, torus or product.
pub fn group(name: &str) -> Result<GroupData, CliError> {
    let fs = factors(name)?;
    let count = fs.len();
    let mut degrees = Vec::new();
    let mut gens = Vec::new();
    let mut flags = SIMPLY_CONNECTED;
    for (i, f) in fs.iter().enumerate() {
        degrees.extend(&f.degrees);
        gens.extend(
            f.generators
                .iter()
                .map(|g| factor_generator(g, i + 1, count)),
        );
        flags.connected &= f.flags.connected;
        flags.pi1_torsion_free &= f.flags.pi1_torsion_free;
        flags.steinberg &= f.flags.steinberg;
    }
    let dim = degrees.iter().sum();
    GroupData::new(display_name(name), degrees.len(), dim, degrees, gens, flags)
        .map_err(|e| CliError::Validation(e.to_string()))
}

/// Group names shipped with the catalog, for listing.
pub fn list() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = BASES
        .iter()
        .map(|b| (b.name.to_string(), b.about.to_string()))
        .collect();
    out.push((
        "Tn".into(),
        "n-torus, generators t1..tn (T1 = S1 = U1 = SO2)".into(),
    ));
    out.push(("Sp1".into(), "alias of SU2".into()));
    out.push(("AxB, A^k".into(), "products of the above".into()));
    out
}

pub const EMBEDDINGS: &[(&str, &str)] = &[
    ("maxtorus", "maximal torus T^rank of any catalog group"),
    (
        "diag",
        "diagonal F in F^k, or a circle diagonally in F^k for F of rank one",
    ),
    (
        "block",
        "SU2 ⊂ SU3, SU2 ⊂ SU4, SU3 ⊂ SU4, SU3 ⊂ G2, SO4 ⊂ G2, Sp1 ⊂ Sp2",
    ),
    ("factor<i>", "the i-th factor of a product"),
    ("trivial", "the trivial subgroup e"),
];

fn substitute(
    text: &str,
    ring: &SullivanAlgebra,
    width_map: &[usize],
    target: &SullivanAlgebra,
) -> Result<Element, CliError> {
    let e = ring
        .parse(text)
        .map_err(|err| CliError::Validation(err.to_string()))?;
    Ok(e.reindex(width_map, target.num_generators()))
}

fn torus_ring(n: usize) -> SullivanAlgebra {
    group(&format!("T{n}")).expect("torus").classifying_ring(64)
}

/// Restriction `H*(B group) -> H*(B subgroup)` for a standard embedding.
pub fn embedding(
    kind: &str,
    group_name: &str,
    subgroup_name: &str,
) -> Result<RestrictionMap, CliError> {
    let g = group(group_name)?;
    let h = group(subgroup_name)?;
    let fs = factors(group_name)?;
    let hf = factors(subgroup_name)?;
    let target = h.classifying_ring(64);
    let invalid = |why: &str| {
        CliError::Validation(format!(
            "embedding `{kind}` of {} in {}: {why}",
            h.name, g.name
        ))
    };
    let images: Vec<Element> = match kind {
        "trivial" => {
            if h.rank != 0 {
                return Err(invalid("subgroup must be trivial"));
            }
            vec![Element::zero(); g.rank]
        }
        "maxtorus" => {
            let is_torus = hf.iter().all(|f| f.name.starts_with('T'));
            if h.rank != g.rank || !is_torus {
                return Err(invalid("subgroup must be a torus of the same rank"));
            }
            let mut out = Vec::new();
            let mut offset = 0;
            for f in &fs {
                let k = f.degrees.len();
                let ring = torus_ring(k.max(1));
                let map: Vec<usize> = (offset..offset + k.max(1)).collect();
                for t in &f.torus {
                    out.push(substitute(t, &ring, &map, &target)?);
                }
                offset += k;
            }
            out
        }
        "diag" => {
            let first = &fs[0];
            if fs.iter().any(|f| f.name != first.name) {
                return Err(invalid("group must be a power of one factor"));
            }
            if hf.len() == 1 && hf[0].name == first.name {
                let mut out = Vec::new();
                for _ in &fs {
                    for j in 0..first.degrees.len() {
                        out.push(target.generator_element(j));
                    }
                }
                out
            } else if h.rank == 1 && hf[0].name.starts_with('T') && first.degrees.len() == 1 {
                let ring = torus_ring(1);
                let mut out = Vec::new();
                for _ in &fs {
                    out.push(substitute(&first.torus[0], &ring, &[0], &target)?);
                }
                out
            } else {
                return Err(invalid("unsupported diagonal"));
            }
        }
        "block" => {
            if fs.len() != 1 || hf.len() != 1 {
                return Err(invalid("block embeddings relate base groups"));
            }
            let (_, _, imgs) = BLOCKS
                .iter()
                .find(|(a, b, _)| *a == fs[0].name && *b == hf[0].name)
                .ok_or_else(|| invalid("no block embedding known"))?;
            imgs.iter()
                .map(|s| {
                    target
                        .parse(s)
                        .map_err(|e| CliError::Validation(e.to_string()))
                })
                .collect::<Result<_, _>>()?
        }
        k if k.starts_with("factor") => {
            let i: usize = k["factor".len()..]
                .parse()
                .map_err(|_| invalid("expected factor<i>"))?;
            if i == 0 || i > fs.len() || hf.len() != 1 || hf[0].name != fs[i - 1].name {
                return Err(invalid("subgroup must equal the chosen factor"));
            }
            let mut out = Vec::new();
            for (j, f) in fs.iter().enumerate() {
                for l in 0..f.degrees.len() {
                    out.push(if j + 1 == i {
                        target.generator_element(l)
                    } else {
                        Element::zero()
                    });
                }
            }
            out
        }
        _ => return Err(CliError::UnknownCatalogName(format!("embedding `{kind}`"))),
    };
    RestrictionMap::new(g, h, images).map_err(|e| CliError::Validation(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let su2 = group("SU(2)").unwrap();
        assert_eq!(
            (su2.rank, su2.dimension, su2.exterior_degrees.clone()),
            (1, 3, vec![3])
        );
        assert_eq!(group("SU4").unwrap().exterior_degrees, vec![3, 5, 7]);
        assert_eq!(group("G2").unwrap().dimension, 14);
        assert_eq!(group("Sp1").unwrap().generators, vec!["p"]);
        let p = group("SU2^3").unwrap();
        assert_eq!(p.generators, vec!["p1", "p2", "p3"]);
        assert_eq!(p.name, "SU2^3");
        let q = group("SU2xT1").unwrap();
        assert_eq!(q.generators, vec!["p1", "t1_2"]);
        assert!(!group("SO3").unwrap().flags.pi1_torsion_free);
        assert!(matches!(
            group("Spin7"),
            Err(CliError::UnknownCatalogName(_))
        ));
        assert_eq!(group("T0").unwrap().rank, 0);
    }

    #[test]
    fn embeddings_are_degree_preserving() {
        for (g, h, k) in [
            ("SU2", "S1", "maxtorus"),
            ("SU3", "T2", "maxtorus"),
            ("SU4", "T3", "maxtorus"),
            ("G2", "T2", "maxtorus"),
            ("Sp2", "T2", "maxtorus"),
            ("SO4", "T2", "maxtorus"),
            ("SU2^3", "T3", "maxtorus"),
            ("SU2xT1", "T2", "maxtorus"),
            ("SU2^2", "SU2", "diag"),
            ("SU2^3", "T1", "diag"),
            ("SU3", "SU2", "block"),
            ("G2", "SU3", "block"),
            ("G2", "SO4", "block"),
            ("SU2^2", "SU2", "factor2"),
            ("SU3", "e", "trivial"),
        ] {
            embedding(k, g, h).unwrap_or_else(|e| panic!("{k} {h} ⊂ {g}: {e}"));
        }
        assert!(embedding("maxtorus", "SU3", "T1").is_err());
        assert!(embedding("block", "SU2", "SU3").is_err());
    }

    #[test]
    fn block_maps_commute_with_tori() {
        // Restricting G2 -> SU3 -> T2 agrees with G2 -> T2 on y4 and y12.
        let g2_su3 = embedding("block", "G2", "SU3").unwrap();
        let su3_t = embedding("maxtorus", "SU3", "T2").unwrap();
        let g2_t = embedding("maxtorus", "G2", "T2").unwrap();
        let f = su3_t.as_morphism(12);
        for (a, b) in g2_su3.images.iter().zip(&g2_t.images) {
            assert_eq!(&f.apply(a), b);
        }
    }
}
