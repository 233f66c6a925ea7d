//! Sullivan models built from Lie group data: groups, classifying spaces,
//! biquotients, Borel constructions, almost free quotients and
//! cohomogeneity-one manifolds.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cdga::{CdgaError, CdgaMorphism, Degree, Element, Generator, Monomial, SullivanAlgebra};
use crate::linalg::{kernel_of_columns, Echelon, Rational, SparseQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("group {group}: {reason}")]
    InvalidDegrees { group: String, reason: String },
    #[error("map {map}: image of `{generator}` must have degree {expected}")]
    DegreeMismatch {
        map: String,
        generator: String,
        expected: u32,
    },
    #[error("map {map}: no image given for `{generator}`")]
    MissingImage { map: String, generator: String },
    #[error("map {map}: unknown generator `{generator}`")]
    UnknownGenerator { map: String, generator: String },
    #[error("map {found} used where a map {expected} is required")]
    MapMismatch { expected: String, found: String },
    #[error("{group}/{subgroup} has even dimension {ell}; only odd-dimensional sphere fibres are supported")]
    EvenSphere {
        group: String,
        subgroup: String,
        ell: i64,
    },
    #[error("group {0} must be connected")]
    DisconnectedGroup(String),
    #[error("rank condition violated: {0}")]
    RankCondition(String),
    #[error("no restriction {k} -> {h} given and surjectivity was not asserted")]
    MissingRestriction { k: String, h: String },
    #[error("cannot present H*(B{k}) over H*(B{h}): {reason}")]
    Presentation {
        k: String,
        h: String,
        reason: String,
    },
    #[error("the two halves of the diagram restrict differently to H on `{0}`")]
    InconsistentDiagram(String),
    #[error("invalid differential: {0}")]
    InvalidDifferential(String),
    #[error(transparent)]
    Cdga(#[from] CdgaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFlags {
    pub connected: bool,
    pub pi1_torsion_free: bool,
    pub steinberg: bool,
}

impl Default for GroupFlags {
    fn default() -> Self {
        GroupFlags {
            connected: true,
            pi1_torsion_free: true,
            steinberg: true,
        }
    }
}

/// Rational data of a compact Lie group: `H*(G) = Λ(q_1..q_r)` with odd
/// degrees, `H*(BG) = Q[x_1..x_r]` with `deg x_i = deg q_i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupData {
    pub name: String,
    pub rank: usize,
    pub dimension: u32,
    pub exterior_degrees: Vec<u32>,
    /// Names of the polynomial generators of `H*(BG)`.
    pub generators: Vec<String>,
    pub flags: GroupFlags,
}

impl GroupData {
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        dimension: u32,
        exterior_degrees: Vec<u32>,
        generators: Vec<String>,
        flags: GroupFlags,
    ) -> Result<Self, ModelError> {
        let name = name.into();
        let bad = |reason: String| ModelError::InvalidDegrees {
            group: name.clone(),
            reason,
        };
        if exterior_degrees.len() != rank {
            return Err(bad(format!(
                "{} exterior degrees for rank {rank}",
                exterior_degrees.len()
            )));
        }
        if let Some(d) = exterior_degrees.iter().find(|&&d| d % 2 == 0) {
            return Err(bad(format!("exterior degree {d} is even")));
        }
        let sum: u32 = exterior_degrees.iter().sum();
        if sum != dimension {
            return Err(bad(format!(
                "exterior degrees sum to {sum}, dimension is {dimension}"
            )));
        }
        if generators.len() != rank {
            return Err(bad(format!(
                "{} generator names for rank {rank}",
                generators.len()
            )));
        }
        Ok(GroupData {
            name,
            rank,
            dimension,
            exterior_degrees,
            generators,
            flags,
        })
    }

    /// A finite group: rationally a point.
    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    pub fn classifying_degrees(&self) -> Vec<u32> {
        self.exterior_degrees.iter().map(|d| d + 1).collect()
    }

    /// `Q[x_1..x_r]` with the catalog generator names.
    pub fn classifying_ring(&self, cutoff: u32) -> SullivanAlgebra {
        let gens = self
            .generators
            .iter()
            .zip(self.classifying_degrees())
            .map(|(n, d)| Generator::new(n.clone(), d))
            .collect();
        SullivanAlgebra::free(gens, cutoff).expect("group data has unique names")
    }

    fn ring_for_maps(&self) -> SullivanAlgebra {
        self.classifying_ring(self.classifying_degrees().into_iter().max().unwrap_or(0))
    }
}

/// `H*(Bj): H*(B source) -> H*(B target)` given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionMap {
    pub source: GroupData,
    pub target: GroupData,
    /// Images in the classifying ring of the target, by source generator.
    pub images: Vec<Element>,
}

impl RestrictionMap {
    fn label(source: &GroupData, target: &GroupData) -> String {
        format!("{} -> {}", source.name, target.name)
    }

    pub fn new(
        source: GroupData,
        target: GroupData,
        images: Vec<Element>,
    ) -> Result<Self, ModelError> {
        let ring = target.ring_for_maps();
        let label = Self::label(&source, &target);
        if images.len() != source.rank {
            return Err(ModelError::MissingImage {
                map: label,
                generator: source
                    .generators
                    .get(images.len())
                    .cloned()
                    .unwrap_or_default(),
            });
        }
        for ((g, d), img) in source
            .generators
            .iter()
            .zip(source.classifying_degrees())
            .zip(&images)
        {
            match ring.degree_of(img) {
                Degree::Zero => {}
                Degree::Homogeneous(k) if k == d => {}
                _ => {
                    return Err(ModelError::DegreeMismatch {
                        map: label,
                        generator: g.clone(),
                        expected: d,
                    })
                }
            }
        }
        Ok(RestrictionMap {
            source,
            target,
            images,
        })
    }

    /// Images given as `(source generator, polynomial in target generators)`.
    pub fn from_strings(
        source: GroupData,
        target: GroupData,
        images: &[(&str, &str)],
    ) -> Result<Self, ModelError> {
        let ring = target.ring_for_maps();
        let label = Self::label(&source, &target);
        let mut out: Vec<Option<Element>> = vec![None; source.rank];
        for (name, text) in images {
            let i = source
                .generators
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| ModelError::UnknownGenerator {
                    map: label.clone(),
                    generator: name.to_string(),
                })?;
            out[i] = Some(ring.parse(text)?);
        }
        let images = out
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| ModelError::MissingImage {
                    map: label.clone(),
                    generator: source.generators[i].clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, images)
    }

    /// The zero map (restriction to a finite group, or the trivial side of
    /// a homogeneous space).
    pub fn zero(source: GroupData, target: GroupData) -> Self {
        let images = vec![Element::zero(); source.rank];
        RestrictionMap {
            source,
            target,
            images,
        }
    }

    /// Images as strings in the target's generator names.
    pub fn image_strings(&self) -> Vec<(String, String)> {
        let ring = self.target.ring_for_maps();
        self.source
            .generators
            .iter()
            .zip(&self.images)
            .map(|(g, e)| (g.clone(), ring.format(e)))
            .collect()
    }

    fn check_endpoints(&self, source: &GroupData, target: &GroupData) -> Result<(), ModelError> {
        if self.source.generators != source.generators
            || self.target.generators != target.generators
            || self.source.exterior_degrees != source.exterior_degrees
            || self.target.exterior_degrees != target.exterior_degrees
        {
            return Err(ModelError::MapMismatch {
                expected: Self::label(source, target),
                found: Self::label(&self.source, &self.target),
            });
        }
        Ok(())
    }

    /// As a morphism of classifying rings (both with zero differential).
    pub fn as_morphism(&self, cutoff: u32) -> CdgaMorphism {
        CdgaMorphism::new(
            self.source.classifying_ring(cutoff),
            self.target.classifying_ring(cutoff),
            self.images.clone(),
        )
        .expect("degree-checked map between rings with zero differential")
    }
}

/// Names of the exterior generators of `H*(G)` in built models.
pub fn exterior_names(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| format!("q{i}")).collect()
}

/// `(ΛV_G, 0)`: exterior algebra on the odd degrees.
pub fn lie_group_model(g: &GroupData, cutoff: u32) -> Result<SullivanAlgebra, ModelError> {
    if let Some(d) = g.exterior_degrees.iter().find(|&&d| d % 2 == 0) {
        return Err(ModelError::InvalidDegrees {
            group: g.name.clone(),
            reason: format!("exterior degree {d} is even"),
        });
    }
    let gens = exterior_names(g.rank)
        .into_iter()
        .zip(&g.exterior_degrees)
        .map(|(n, &d)| Generator::new(n, d))
        .collect();
    Ok(SullivanAlgebra::free(gens, cutoff)?)
}

/// `(H*(BG), 0)`.
pub fn classifying_space_model(g: &GroupData, cutoff: u32) -> SullivanAlgebra {
    g.classifying_ring(cutoff)
}

/// Reindex map from a classifying ring of `h` into a model whose first
/// generators are those of `h`.
fn leading_embedding(h: &GroupData) -> Vec<usize> {
    (0..h.rank).collect()
}

/// `(H*(BH) ⊗ Λ(q_i), dq_i = left(x_i) - right(x_i))` for `H ⊆ G x G`.
pub fn biquotient_model(
    g: &GroupData,
    h: &GroupData,
    left: &RestrictionMap,
    right: &RestrictionMap,
    cutoff: u32,
) -> Result<SullivanAlgebra, ModelError> {
    left.check_endpoints(g, h)?;
    right.check_endpoints(g, h)?;
    let width = h.rank + g.rank;
    let mut gens: Vec<Generator> = h
        .generators
        .iter()
        .zip(h.classifying_degrees())
        .map(|(n, d)| Generator::new(n.clone(), d))
        .collect();
    gens.extend(
        exterior_names(g.rank)
            .into_iter()
            .zip(&g.exterior_degrees)
            .map(|(n, &d)| Generator::new(n, d)),
    );
    let embed = leading_embedding(h);
    let mut diff = vec![Element::zero(); h.rank];
    for i in 0..g.rank {
        let l = left.images[i].reindex(&embed, width);
        let r = right.images[i].reindex(&embed, width);
        diff.push(l.sub(&r));
    }
    Ok(SullivanAlgebra::new(gens, diff, cutoff)?)
}

/// `G/H` as the biquotient with left map the restriction and trivial right
/// map, so `dq_i = ρ(x_i)`.
pub fn homogeneous_model(
    g: &GroupData,
    h: &GroupData,
    restriction: &RestrictionMap,
    cutoff: u32,
) -> Result<SullivanAlgebra, ModelError> {
    let zero = RestrictionMap::zero(g.clone(), h.clone());
    biquotient_model(g, h, restriction, &zero, cutoff)
}

/// The inclusion `(H*(BH), 0) -> model`, which realizes `H*(BH) -> H*(G//H)`.
pub fn base_inclusion(h: &GroupData, model: &SullivanAlgebra) -> Result<CdgaMorphism, ModelError> {
    let base = h.classifying_ring(model.cutoff());
    let assignment = (0..h.rank).map(|i| model.generator_element(i)).collect();
    Ok(CdgaMorphism::new(base, model.clone(), assignment)?)
}

/// Borel model of `G/H`: `(H*(BH), 0)` and its inclusion into the model of
/// `G/H`.
pub fn borel_model_homogeneous(
    g: &GroupData,
    h: &GroupData,
    restriction: &RestrictionMap,
    cutoff: u32,
) -> Result<(SullivanAlgebra, CdgaMorphism), ModelError> {
    let model = homogeneous_model(g, h, restriction, cutoff)?;
    let f = base_inclusion(h, &model)?;
    Ok((f.source().clone(), f))
}

/// Borel model of a biquotient: `(H*(BH), 0)` including into the model.
pub fn borel_model_biquotient(
    g: &GroupData,
    h: &GroupData,
    left: &RestrictionMap,
    right: &RestrictionMap,
    cutoff: u32,
) -> Result<(SullivanAlgebra, CdgaMorphism), ModelError> {
    let model = biquotient_model(g, h, left, right, cutoff)?;
    let f = base_inclusion(h, &model)?;
    Ok((f.source().clone(), f))
}

/// `(ΛV_X ⊗ H*(BG), d)`: X generators first, then the classifying
/// generators. `action` overrides `d` on named X generators with
/// polynomials in all generators; the override must reduce to the
/// differential of X when the classifying generators are set to zero.
pub fn almost_free_quotient_model(
    x: &SullivanAlgebra,
    g: &GroupData,
    action: &[(&str, &str)],
    cutoff: u32,
) -> Result<SullivanAlgebra, ModelError> {
    let nx = x.num_generators();
    let width = nx + g.rank;
    let mut gens: Vec<Generator> = x.generators().to_vec();
    gens.extend(
        g.generators
            .iter()
            .zip(g.classifying_degrees())
            .map(|(n, d)| Generator::new(n.clone(), d)),
    );
    let free = SullivanAlgebra::free(gens.clone(), cutoff)?;
    let embed: Vec<usize> = (0..nx).collect();
    let mut diff: Vec<Element> = (0..nx)
        .map(|i| x.d_generator(i).reindex(&embed, width))
        .collect();
    diff.extend(std::iter::repeat_n(Element::zero(), g.rank));
    for (name, text) in action {
        let i = x.generator_index(name).ok_or_else(|| {
            ModelError::InvalidDifferential(format!("`{name}` is not a generator of X"))
        })?;
        diff[i] = free.parse(text)?;
    }
    let model = SullivanAlgebra::new(gens, diff, cutoff)
        .map_err(|e| ModelError::InvalidDifferential(e.to_string()))?;
    let projection = fibre_projection(x, &model)?;
    for i in 0..nx {
        let reduced = projection.apply(model.d_generator(i));
        if &reduced != x.d_generator(i) {
            return Err(ModelError::InvalidDifferential(format!(
                "d({}) does not restrict to the differential of X",
                x.generators()[i].name
            )));
        }
    }
    Ok(model)
}

/// The quotient morphism `model -> X` killing the classifying generators.
pub fn fibre_projection(
    x: &SullivanAlgebra,
    model: &SullivanAlgebra,
) -> Result<CdgaMorphism, ModelError> {
    let nx = x.num_generators();
    let x = x.with_cutoff(model.cutoff());
    let assignment = (0..model.num_generators())
        .map(|i| {
            if i < nx {
                x.generator_element(i)
            } else {
                Element::zero()
            }
        })
        .collect();
    // d on the X part may involve classifying generators, so only the
    // projected differential is required to match.
    CdgaMorphism::new(model.clone(), x, assignment).map_err(|e| match e {
        CdgaError::NotAChainMap(g) => ModelError::InvalidDifferential(format!(
            "d({g}) does not restrict to the differential of X"
        )),
        other => other.into(),
    })
}

/// The inclusion `H*(BG) -> (ΛV_X ⊗ H*(BG), d)`.
pub fn quotient_base_inclusion(
    x: &SullivanAlgebra,
    g: &GroupData,
    model: &SullivanAlgebra,
) -> Result<CdgaMorphism, ModelError> {
    let nx = x.num_generators();
    let base = g.classifying_ring(model.cutoff());
    let assignment = (0..g.rank)
        .map(|i| model.generator_element(nx + i))
        .collect();
    Ok(CdgaMorphism::new(base, model.clone(), assignment)?)
}

/// `H*(BK) ≅ H*(BH)[e]` for `K/H` an odd sphere, realized in
/// `Q[h_1..h_r, e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePresentation {
    /// `Q[h_1..h_r, e]`.
    pub ring: SullivanAlgebra,
    /// Each generator of `H*(BK)` as a polynomial in `ring`.
    pub inverse: Vec<Element>,
    /// Each `h_j` lifted to `H*(BK)`.
    pub lifts: Vec<Element>,
    /// The kernel generator in `H*(BK)`.
    pub euler_class: Element,
    pub euler_degree: u32,
}

fn coordinates_in(e: &Element, index: &HashMap<Monomial, usize>) -> SparseQ {
    let mut v: SparseQ = e.terms().map(|(m, c)| (index[m], c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

fn solve_in_span(columns: &[SparseQ], target: &SparseQ) -> Option<SparseQ> {
    let mut ech = Echelon::new();
    for (j, c) in columns.iter().enumerate() {
        ech.insert_sparse_tracked(c, j);
    }
    ech.coordinates(target)
}

impl SpherePresentation {
    pub fn compute(psi: &RestrictionMap) -> Result<Self, ModelError> {
        let k = &psi.source;
        let h = &psi.target;
        let fail = |reason: String| ModelError::Presentation {
            k: k.name.clone(),
            h: h.name.clone(),
            reason,
        };
        let top = k
            .classifying_degrees()
            .into_iter()
            .chain(h.classifying_degrees())
            .max()
            .unwrap_or(0);
        let ring_k = k.classifying_ring(top);
        let ring_h = h.classifying_ring(top);
        let f = psi.as_morphism(top);

        let mut lifts = Vec::with_capacity(h.rank);
        for (j, d) in h.classifying_degrees().into_iter().enumerate() {
            let basis_k = ring_k.basis_unchecked(d);
            let basis_h = ring_h.basis_unchecked(d);
            let index_h: HashMap<Monomial, usize> = basis_h
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let columns: Vec<SparseQ> = basis_k
                .iter()
                .map(|m| {
                    coordinates_in(
                        &f.apply(&Element::from_monomial(
                            m.clone(),
                            Rational::from_integer(1.into()),
                        )),
                        &index_h,
                    )
                })
                .collect();
            let target = coordinates_in(&ring_h.generator_element(j), &index_h);
            let coords = solve_in_span(&columns, &target)
                .ok_or_else(|| fail(format!("`{}` is not in the image", h.generators[j])))?;
            lifts.push(ring_k.element_from_coordinates(&basis_k, &coords));
        }

        let mut degrees: Vec<u32> = k.classifying_degrees();
        degrees.sort_unstable();
        degrees.dedup();
        let mut euler = None;
        for d in degrees {
            let basis_k = ring_k.basis_unchecked(d);
            let basis_h = ring_h.basis_unchecked(d);
            let index_h: HashMap<Monomial, usize> = basis_h
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let columns: Vec<SparseQ> = basis_k
                .iter()
                .map(|m| {
                    coordinates_in(
                        &f.apply(&Element::from_monomial(
                            m.clone(),
                            Rational::from_integer(1.into()),
                        )),
                        &index_h,
                    )
                })
                .collect();
            let kernel = kernel_of_columns(&columns);
            if kernel.is_empty() {
                continue;
            }
            if kernel.len() > 1 {
                return Err(fail(format!(
                    "kernel in degree {d} has dimension {}",
                    kernel.len()
                )));
            }
            euler = Some((ring_k.element_from_coordinates(&basis_k, &kernel[0]), d));
            break;
        }
        let (euler_class, euler_degree) =
            euler.ok_or_else(|| fail("the restriction is injective".into()))?;

        let mut expected: Vec<u32> = h.classifying_degrees();
        expected.push(euler_degree);
        expected.sort_unstable();
        let mut actual = k.classifying_degrees();
        actual.sort_unstable();
        if expected != actual {
            return Err(fail(format!(
                "generator degrees {actual:?} differ from {expected:?}"
            )));
        }

        let mut gens: Vec<Generator> = h
            .generators
            .iter()
            .zip(h.classifying_degrees())
            .map(|(n, d)| Generator::new(n.clone(), d))
            .collect();
        gens.push(Generator::new(euler_name(h), euler_degree));
        let ring = SullivanAlgebra::free(gens, top)?;
        let mut phi_images = lifts.clone();
        phi_images.push(euler_class.clone());
        let phi = CdgaMorphism::new(ring.clone(), ring_k.clone(), phi_images)?;

        let mut inverse = Vec::with_capacity(k.rank);
        for (i, d) in k.classifying_degrees().into_iter().enumerate() {
            let basis_s = ring.basis_unchecked(d);
            let basis_k = ring_k.basis_unchecked(d);
            let index_k: HashMap<Monomial, usize> = basis_k
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            let columns: Vec<SparseQ> = basis_s
                .iter()
                .map(|m| {
                    coordinates_in(
                        &phi.apply(&Element::from_monomial(
                            m.clone(),
                            Rational::from_integer(1.into()),
                        )),
                        &index_k,
                    )
                })
                .collect();
            let target = coordinates_in(&ring_k.generator_element(i), &index_k);
            let coords = solve_in_span(&columns, &target).ok_or_else(|| {
                fail(format!(
                    "`{}` is not a polynomial in the lifts and e",
                    k.generators[i]
                ))
            })?;
            inverse.push(ring.element_from_coordinates(&basis_s, &coords));
        }
        Ok(SpherePresentation {
            ring,
            inverse,
            lifts,
            euler_class,
            euler_degree,
        })
    }

    /// Rewrites an element of `H*(BK)` in `Q[h, e]`.
    pub fn express(&self, k: &GroupData, x: &Element) -> Element {
        let ring_k = k.classifying_ring(self.ring.cutoff());
        let f = CdgaMorphism::new(ring_k, self.ring.clone(), self.inverse.clone())
            .expect("inverse is degree-preserving");
        f.apply(x)
    }

    /// Sets `e = 0`, which is the restriction to `H*(BH)`.
    pub fn restrict_to_h(&self, x: &Element) -> Element {
        let e = self.ring.num_generators() - 1;
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            if m.exponents()[e] == 0 {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

fn euler_name(h: &GroupData) -> String {
    let mut name = "e".to_string();
    while h.generators.contains(&name) {
        name.push('_');
    }
    name
}

/// Synthesizes `H*(BK) -> H*(BH)` when `K` has the generators of `H` plus
/// exactly one more: shared names map to themselves, the extra one to zero.
pub fn assumed_restriction(k: &GroupData, h: &GroupData) -> Result<RestrictionMap, ModelError> {
    let missing = || ModelError::MissingRestriction {
        k: k.name.clone(),
        h: h.name.clone(),
    };
    if k.rank != h.rank + 1 {
        return Err(missing());
    }
    let ring = h.ring_for_maps();
    let mut images = Vec::with_capacity(k.rank);
    let mut extra = 0;
    for (name, d) in k.generators.iter().zip(k.classifying_degrees()) {
        match h.generators.iter().position(|x| x == name) {
            Some(j) if h.classifying_degrees()[j] == d => images.push(ring.generator_element(j)),
            Some(_) => return Err(missing()),
            None => {
                extra += 1;
                images.push(Element::zero());
            }
        }
    }
    if extra != 1 {
        return Err(missing());
    }
    RestrictionMap::new(k.clone(), h.clone(), images)
}

/// A cohomogeneity-one group diagram `H ⊆ K± ⊆ G` with `K±/H` odd spheres.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDiagram {
    pub g: GroupData,
    pub h: GroupData,
    pub k_minus: GroupData,
    pub k_plus: GroupData,
    pub g_to_k_minus: RestrictionMap,
    pub g_to_k_plus: RestrictionMap,
    pub k_minus_to_h: RestrictionMap,
    pub k_plus_to_h: RestrictionMap,
    /// `(ℓ₋, ℓ₊)` with `K±/H ≅ S^ℓ±`.
    pub sphere_dims: (u32, u32),
    pub presentation_minus: SpherePresentation,
    pub presentation_plus: SpherePresentation,
}

/// Inputs for [`GroupDiagram::new`].
#[derive(Debug, Clone)]
pub struct DiagramSpec {
    pub g: GroupData,
    pub h: GroupData,
    pub k_minus: GroupData,
    pub k_plus: GroupData,
    pub g_to_k_minus: RestrictionMap,
    pub g_to_k_plus: RestrictionMap,
    pub k_minus_to_h: Option<RestrictionMap>,
    pub k_plus_to_h: Option<RestrictionMap>,
    /// Permits synthesizing omitted `K± -> H` maps by generator names.
    pub assume_surjective: bool,
}

impl GroupDiagram {
    pub fn new(spec: DiagramSpec) -> Result<Self, ModelError> {
        let DiagramSpec {
            g,
            h,
            k_minus,
            k_plus,
            g_to_k_minus,
            g_to_k_plus,
            k_minus_to_h,
            k_plus_to_h,
            assume_surjective,
        } = spec;
        for grp in [&g, &k_minus, &k_plus] {
            if !grp.flags.connected {
                return Err(ModelError::DisconnectedGroup(grp.name.clone()));
            }
        }
        if !h.flags.connected && !h.is_finite() {
            return Err(ModelError::DisconnectedGroup(h.name.clone()));
        }
        let ell = |k: &GroupData| -> Result<u32, ModelError> {
            let l = k.dimension as i64 - h.dimension as i64;
            if l <= 0 || l % 2 == 0 {
                return Err(ModelError::EvenSphere {
                    group: k.name.clone(),
                    subgroup: h.name.clone(),
                    ell: l,
                });
            }
            if k.rank != h.rank + 1 {
                return Err(ModelError::RankCondition(format!(
                    "rk {} = {} but rk {} = {}",
                    k.name, k.rank, h.name, h.rank
                )));
            }
            Ok(l as u32)
        };
        let l_minus = ell(&k_minus)?;
        let l_plus = ell(&k_plus)?;
        g_to_k_minus.check_endpoints(&g, &k_minus)?;
        g_to_k_plus.check_endpoints(&g, &k_plus)?;
        let resolve =
            |given: Option<RestrictionMap>, k: &GroupData| -> Result<RestrictionMap, ModelError> {
                match given {
                    Some(m) => {
                        m.check_endpoints(k, &h)?;
                        Ok(m)
                    }
                    None if assume_surjective => assumed_restriction(k, &h),
                    None => Err(ModelError::MissingRestriction {
                        k: k.name.clone(),
                        h: h.name.clone(),
                    }),
                }
            };
        let k_minus_to_h = resolve(k_minus_to_h, &k_minus)?;
        let k_plus_to_h = resolve(k_plus_to_h, &k_plus)?;
        let presentation_minus = SpherePresentation::compute(&k_minus_to_h)?;
        let presentation_plus = SpherePresentation::compute(&k_plus_to_h)?;
        for (p, l, k) in [
            (&presentation_minus, l_minus, &k_minus),
            (&presentation_plus, l_plus, &k_plus),
        ] {
            if p.euler_degree != l + 1 {
                return Err(ModelError::Presentation {
                    k: k.name.clone(),
                    h: h.name.clone(),
                    reason: format!(
                        "kernel generator has degree {}, expected {} for a sphere of dimension {l}",
                        p.euler_degree,
                        l + 1
                    ),
                });
            }
        }
        let diagram = GroupDiagram {
            g,
            h,
            k_minus,
            k_plus,
            g_to_k_minus,
            g_to_k_plus,
            k_minus_to_h,
            k_plus_to_h,
            sphere_dims: (l_minus, l_plus),
            presentation_minus,
            presentation_plus,
        };
        diagram.dq_images()?;
        Ok(diagram)
    }

    /// `dim M = dim G - dim H + 1`.
    pub fn manifold_dimension(&self) -> u32 {
        self.g.dimension - self.h.dimension + 1
    }

    /// Finite nontrivial isotropy lies outside the connectedness hypotheses
    /// of the structural theorems; it is accepted rationally.
    pub fn has_finite_disconnected_isotropy(&self) -> bool {
        !self.h.flags.connected
    }

    fn layout(&self) -> (usize, Vec<usize>, Vec<usize>) {
        let r = self.h.rank;
        let plus: Vec<usize> = (0..r).chain(std::iter::once(r)).collect();
        let minus: Vec<usize> = (0..r).chain(std::iter::once(r + 1)).collect();
        (r, plus, minus)
    }

    /// `ρ₊(x) + ρ₋(x) - a(x)` in `Q[h, e₊, e₋]`, where `a` is the common
    /// restriction to `H*(BH)`. This is the fibre-product element over
    /// `H*(BH)` that restricts to `ρ±(x)` on each side.
    fn dq_images(&self) -> Result<Vec<Element>, ModelError> {
        let (r, plus, minus) = self.layout();
        let width = r + 2;
        let mut out = Vec::with_capacity(self.g.rank);
        for i in 0..self.g.rank {
            let rp = self
                .presentation_plus
                .express(&self.k_plus, &self.g_to_k_plus.images[i]);
            let rm = self
                .presentation_minus
                .express(&self.k_minus, &self.g_to_k_minus.images[i]);
            let ap = self.presentation_plus.restrict_to_h(&rp);
            let am = self.presentation_minus.restrict_to_h(&rm);
            if ap != am {
                return Err(ModelError::InconsistentDiagram(
                    self.g.generators[i].clone(),
                ));
            }
            let v = rp
                .reindex(&plus, width)
                .add(&rm.reindex(&minus, width))
                .sub(&ap.reindex(&plus, width));
            out.push(v);
        }
        Ok(out)
    }

    fn even_generators(&self) -> Vec<Generator> {
        let mut gens: Vec<Generator> = self
            .h
            .generators
            .iter()
            .zip(self.h.classifying_degrees())
            .map(|(n, d)| Generator::new(n.clone(), d))
            .collect();
        gens.push(Generator::new("e_plus", self.sphere_dims.1 + 1));
        gens.push(Generator::new("e_minus", self.sphere_dims.0 + 1));
        gens
    }

    fn n_generator(&self) -> Generator {
        Generator::new("n", self.sphere_dims.0 + self.sphere_dims.1 + 1)
    }

    fn e_product(&self, width: usize) -> Element {
        let r = self.h.rank;
        let mut e = vec![0; width];
        e[r] = 1;
        e[r + 1] = 1;
        Element::from_monomial(Monomial(e), Rational::from_integer(1.into()))
    }

    pub fn default_cutoff(&self) -> u32 {
        self.manifold_dimension()
    }
}

/// `(H*(BH)[e₊,e₋] ⊗ Λ(q_i) ⊗ Λ(n), d)` with `dn = e₊e₋` and `dq_i` the
/// fibre-product image of `x_i`.
pub fn cohomogeneity_one_model(
    d: &GroupDiagram,
    cutoff: u32,
) -> Result<SullivanAlgebra, ModelError> {
    let r = d.h.rank;
    let k = d.g.rank;
    let width = r + 2 + k + 1;
    let mut gens = d.even_generators();
    gens.extend(
        exterior_names(k)
            .into_iter()
            .zip(&d.g.exterior_degrees)
            .map(|(n, &deg)| Generator::new(n, deg)),
    );
    gens.push(d.n_generator());
    let embed: Vec<usize> = (0..r + 2).collect();
    let mut diff = vec![Element::zero(); r + 2];
    for v in d.dq_images()? {
        diff.push(v.reindex(&embed, width));
    }
    diff.push(d.e_product(width));
    Ok(SullivanAlgebra::new(gens, diff, cutoff)?)
}

/// `(H*(BH)[e₊,e₋] ⊗ Λ(n), dn = e₊e₋)`, whose cohomology is
/// `H*(BH)[e₊,e₋]/(e₊e₋)`, with its map into the model of `M`.
pub fn borel_model_cohomogeneity_one(
    d: &GroupDiagram,
    cutoff: u32,
) -> Result<(SullivanAlgebra, CdgaMorphism), ModelError> {
    let target = cohomogeneity_one_model(d, cutoff)?;
    let r = d.h.rank;
    let width = r + 3;
    let mut gens = d.even_generators();
    gens.push(d.n_generator());
    let mut diff = vec![Element::zero(); r + 2];
    diff.push(d.e_product(width));
    let source = SullivanAlgebra::new(gens, diff, cutoff)?;
    let n_index = target.num_generators() - 1;
    let assignment = (0..r + 2)
        .map(|i| target.generator_element(i))
        .chain(std::iter::once(target.generator_element(n_index)))
        .collect();
    let f = CdgaMorphism::new(source.clone(), target, assignment)?;
    Ok((source, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::CohomologyTable;

    fn su2() -> GroupData {
        GroupData::new(
            "SU2",
            1,
            3,
            vec![3],
            vec!["p".into()],
            GroupFlags::default(),
        )
        .unwrap()
    }

    fn circle(name: &str, gen: &str) -> GroupData {
        GroupData::new(name, 1, 1, vec![1], vec![gen.into()], GroupFlags::default()).unwrap()
    }

    fn trivial() -> GroupData {
        GroupData::new("e", 0, 0, vec![], vec![], GroupFlags::default()).unwrap()
    }

    #[test]
    fn group_data_validation() {
        assert!(
            GroupData::new("X", 1, 4, vec![4], vec!["x".into()], GroupFlags::default()).is_err()
        );
        assert!(
            GroupData::new("X", 2, 4, vec![3], vec!["x".into()], GroupFlags::default()).is_err()
        );
        assert!(
            GroupData::new("X", 1, 5, vec![3], vec!["x".into()], GroupFlags::default()).is_err()
        );
    }

    #[test]
    fn lie_and_classifying_models() {
        let m = lie_group_model(&su2(), 3).unwrap();
        assert_eq!(m.generators(), &[Generator::new("q1", 3)]);
        let b = classifying_space_model(&su2(), 8);
        assert_eq!(b.generators(), &[Generator::new("p", 4)]);
    }

    #[test]
    fn s2_as_homogeneous_space() {
        let s1 = circle("S1", "u");
        let rho = RestrictionMap::from_strings(su2(), s1.clone(), &[("p", "u^2")]).unwrap();
        let m = homogeneous_model(&su2(), &s1, &rho, 2).unwrap();
        assert!(m.is_pure());
        assert_eq!(m.homotopy_euler_characteristic(), 0);
        assert_eq!(CohomologyTable::compute(&m).betti_numbers(), vec![1, 0, 1]);
        let (base, f) = borel_model_homogeneous(&su2(), &s1, &rho, 2).unwrap();
        assert_eq!(base.num_generators(), 1);
        assert_eq!(f.target(), &m);
    }

    #[test]
    fn diagonal_su2_quotient_is_s3() {
        let g = GroupData::new(
            "SU2^2",
            2,
            6,
            vec![3, 3],
            vec!["p1".into(), "p2".into()],
            GroupFlags::default(),
        )
        .unwrap();
        let rho =
            RestrictionMap::from_strings(g.clone(), su2(), &[("p1", "p"), ("p2", "p")]).unwrap();
        let m = homogeneous_model(&g, &su2(), &rho, 3).unwrap();
        assert_eq!(
            CohomologyTable::compute(&m).betti_numbers(),
            vec![1, 0, 0, 1]
        );
    }

    #[test]
    fn degree_mismatch_rejected() {
        let s1 = circle("S1", "u");
        assert!(matches!(
            RestrictionMap::from_strings(su2(), s1.clone(), &[("p", "u")]),
            Err(ModelError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            RestrictionMap::from_strings(su2(), s1, &[]),
            Err(ModelError::MissingImage { .. })
        ));
    }

    fn cp2_diagram() -> GroupDiagram {
        let h = trivial();
        let km = circle("S1-", "u");
        let kp = circle("S1+", "v");
        GroupDiagram::new(DiagramSpec {
            g: su2(),
            h: h.clone(),
            k_minus: km.clone(),
            k_plus: kp.clone(),
            g_to_k_minus: RestrictionMap::from_strings(su2(), km.clone(), &[("p", "u^2")]).unwrap(),
            g_to_k_plus: RestrictionMap::from_strings(su2(), kp.clone(), &[("p", "v^2")]).unwrap(),
            k_minus_to_h: Some(RestrictionMap::zero(km, h.clone())),
            k_plus_to_h: Some(RestrictionMap::zero(kp, h)),
            assume_surjective: false,
        })
        .unwrap()
    }

    #[test]
    fn cp2_cp2bar_from_diagram() {
        let d = cp2_diagram();
        assert_eq!(d.sphere_dims, (1, 1));
        let m = cohomogeneity_one_model(&d, 4).unwrap();
        assert!(m.is_pure());
        assert_eq!(m.format(m.d_generator(2)), "e_plus^2+e_minus^2");
        assert_eq!(m.format(m.d_generator(3)), "e_plus*e_minus");
        let t = CohomologyTable::compute(&m);
        assert_eq!(t.betti_numbers(), vec![1, 0, 2, 0, 1]);
        let (src, _) = borel_model_cohomogeneity_one(&d, 8).unwrap();
        let ts = CohomologyTable::compute(&src);
        assert_eq!(ts.betti_numbers(), vec![1, 0, 2, 0, 2, 0, 2, 0, 2]);
    }

    #[test]
    fn even_sphere_rejected() {
        let h = trivial();
        let err = GroupDiagram::new(DiagramSpec {
            g: su2(),
            h: h.clone(),
            k_minus: h.clone(),
            k_plus: h.clone(),
            g_to_k_minus: RestrictionMap::zero(su2(), h.clone()),
            g_to_k_plus: RestrictionMap::zero(su2(), h.clone()),
            k_minus_to_h: None,
            k_plus_to_h: None,
            assume_surjective: true,
        })
        .unwrap_err();
        assert!(matches!(err, ModelError::EvenSphere { ell: 0, .. }));
    }

    #[test]
    fn omitted_restriction_needs_assertion() {
        let h = trivial();
        let km = circle("S1-", "u");
        let spec = DiagramSpec {
            g: su2(),
            h: h.clone(),
            k_minus: km.clone(),
            k_plus: km.clone(),
            g_to_k_minus: RestrictionMap::from_strings(su2(), km.clone(), &[("p", "u^2")]).unwrap(),
            g_to_k_plus: RestrictionMap::from_strings(su2(), km.clone(), &[("p", "u^2")]).unwrap(),
            k_minus_to_h: None,
            k_plus_to_h: None,
            assume_surjective: false,
        };
        assert!(matches!(
            GroupDiagram::new(spec.clone()),
            Err(ModelError::MissingRestriction { .. })
        ));
        let ok = GroupDiagram::new(DiagramSpec {
            assume_surjective: true,
            ..spec
        });
        assert!(ok.is_ok());
    }

    #[test]
    fn hopf_quotient() {
        let s3 = lie_group_model(&su2(), 3).unwrap();
        let s1 = circle("S1", "u");
        let m = almost_free_quotient_model(&s3, &s1, &[("q1", "u^2")], 2).unwrap();
        assert_eq!(CohomologyTable::compute(&m).betti_numbers(), vec![1, 0, 1]);
        let bad = almost_free_quotient_model(&s3, &s1, &[("q1", "u")], 2);
        assert!(bad.is_err());
    }

    #[test]
    fn trivial_action_returns_input() {
        let s3 = lie_group_model(&su2(), 3).unwrap();
        let m = almost_free_quotient_model(&s3, &trivial(), &[], 3).unwrap();
        assert_eq!(m, s3);
    }
}
