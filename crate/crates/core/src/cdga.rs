//! Free graded-commutative algebras over Q with a differential.
//!
//! Monomials are exponent vectors indexed by generator position. Odd
//! generators inside a monomial are always read in declaration order, so a
//! monomial has exactly one canonical sign and products carry the Koszul
//! sign of the shuffle that restores that order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{Rational, SparseQ};
use crate::poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CdgaError {
    #[error("generator `{0}` must have positive degree")]
    NonPositiveDegree(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("elements belong to algebras with different generator sets")]
    ForeignElement,
    #[error("d({generator}) must be homogeneous of degree {expected}")]
    DifferentialDegree { generator: String, expected: u32 },
    #[error("d(d({0})) != 0")]
    DSquaredNonzero(String),
    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    CutoffExceeded { degree: u32, cutoff: u32 },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("odd generator `{0}` has exponent above 1")]
    OddExponent(String),
    #[error("morphism must assign every source generator: {0}")]
    IncompleteAssignment(String),
    #[error("image of `{generator}` must have degree {expected}")]
    MorphismDegree { generator: String, expected: u32 },
    #[error("morphism does not commute with the differentials on `{0}`")]
    NotAChainMap(String),
    #[error(transparent)]
    Parse(#[from] poly::ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Exponent vector over the generators of one algebra.
///
/// Ordered lexicographically with larger exponents of earlier generators
/// first, so `x^2 < x*y < y^2` for generators declared as `x, y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Homogeneity of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    /// The zero element, homogeneous of every degree.
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// A Q-linear combination of monomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Number of generators the monomials are indexed over, if nonzero.
    fn width(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.0.len())
    }

    /// Re-indexes the monomials: generator `i` becomes generator `map[i]`
    /// of an algebra with `width` generators.
    ///
    /// `map` must preserve the relative order of odd generators, otherwise
    /// the canonical signs would change.
    pub fn reindex(&self, map: &[usize], width: usize) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            let mut e = vec![0; width];
            for (i, &x) in m.0.iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

/// A Sullivan-type algebra `(ΛV, d)` truncated at a cutoff.
///
/// Cohomology is reported in degrees `0..=cutoff`; bases and differentials
/// are available one degree further so that the top cohomology group is
/// well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SullivanAlgebra {
    generators: Vec<Generator>,
    differential: Vec<Element>,
    cutoff: u32,
    index: HashMap<String, usize>,
}

impl SullivanAlgebra {
    /// Validates degrees, names, homogeneity of `d` and `d∘d = 0`.
    pub fn new(
        generators: Vec<Generator>,
        differential: Vec<Element>,
        cutoff: u32,
    ) -> Result<Self, CdgaError> {
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(CdgaError::NonPositiveDegree(g.name.clone()));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(CdgaError::DuplicateGenerator(g.name.clone()));
            }
        }
        assert_eq!(generators.len(), differential.len());
        let alg = SullivanAlgebra {
            generators,
            differential,
            cutoff,
            index,
        };
        for (i, g) in alg.generators.iter().enumerate() {
            let dg = &alg.differential[i];
            alg.check_element(dg)?;
            match alg.degree_of(dg) {
                Degree::Zero => {}
                Degree::Homogeneous(k) if k == g.degree + 1 => {}
                _ => {
                    return Err(CdgaError::DifferentialDegree {
                        generator: g.name.clone(),
                        expected: g.degree + 1,
                    })
                }
            }
        }
        if let Some(bad) = alg.first_d_squared_failure() {
            return Err(CdgaError::DSquaredNonzero(bad));
        }
        Ok(alg)
    }

    pub fn builder(cutoff: u32) -> AlgebraBuilder {
        AlgebraBuilder {
            cutoff,
            generators: Vec::new(),
            differentials: Vec::new(),
        }
    }

    /// The polynomial / exterior algebra on the generators with `d = 0`.
    pub fn free(generators: Vec<Generator>, cutoff: u32) -> Result<Self, CdgaError> {
        let n = generators.len();
        Self::new(generators, vec![Element::zero(); n], cutoff)
    }

    /// The unit algebra Q.
    pub fn unit(cutoff: u32) -> Self {
        Self::free(Vec::new(), cutoff).expect("empty algebra is valid")
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Same algebra with another cutoff.
    pub fn with_cutoff(&self, cutoff: u32) -> Self {
        SullivanAlgebra {
            cutoff,
            ..self.clone()
        }
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn generator_element(&self, i: usize) -> Element {
        Element::from_monomial(
            Monomial::generator(self.num_generators(), i),
            Rational::one(),
        )
    }

    pub fn named(&self, name: &str) -> Result<Element, CdgaError> {
        self.generator_index(name)
            .map(|i| self.generator_element(i))
            .ok_or_else(|| CdgaError::UnknownGenerator(name.to_string()))
    }

    pub fn one(&self) -> Element {
        Element::from_monomial(Monomial::one(self.num_generators()), Rational::one())
    }

    /// `d` on the i-th generator.
    pub fn d_generator(&self, i: usize) -> &Element {
        &self.differential[i]
    }

    pub fn parse(&self, text: &str) -> Result<Element, CdgaError> {
        Ok(poly::parse(text, self)?)
    }

    pub fn format(&self, e: &Element) -> String {
        poly::format(e, self)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.0.iter()
            .zip(&self.generators)
            .map(|(&e, g)| e * g.degree)
            .sum()
    }

    /// Number of odd generators in `m` (its odd word length).
    pub fn odd_length(&self, m: &Monomial) -> u32 {
        m.0.iter()
            .zip(&self.generators)
            .filter(|(_, g)| g.is_odd())
            .map(|(&e, _)| e)
            .sum()
    }

    pub fn degree_of(&self, e: &Element) -> Degree {
        let mut degs = e.terms().map(|(m, _)| self.monomial_degree(m));
        match degs.next() {
            None => Degree::Zero,
            Some(d) => {
                if degs.all(|x| x == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Mixed
                }
            }
        }
    }

    pub(crate) fn check_element(&self, e: &Element) -> Result<(), CdgaError> {
        for (m, _) in e.terms() {
            if m.0.len() != self.num_generators() {
                return Err(CdgaError::ForeignElement);
            }
            for (i, &x) in m.0.iter().enumerate() {
                if x > 1 && self.generators[i].is_odd() {
                    return Err(CdgaError::OddExponent(self.generators[i].name.clone()));
                }
            }
        }
        Ok(())
    }

    /// All monomials of exactly `degree`, in monomial order.
    pub fn monomial_basis(&self, degree: u32) -> Result<Vec<Monomial>, CdgaError> {
        if degree > self.cutoff + 1 {
            return Err(CdgaError::CutoffExceeded {
                degree,
                cutoff: self.cutoff,
            });
        }
        Ok(self.basis_unchecked(degree))
    }

    pub(crate) fn basis_unchecked(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.num_generators()];
        self.enumerate(0, degree, &mut exps, &mut out);
        out
    }

    fn enumerate(&self, i: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.generators.len() {
            if remaining == 0 {
                out.push(Monomial(exps.clone()));
            }
            return;
        }
        let g = &self.generators[i];
        let max = if g.is_odd() {
            (remaining / g.degree).min(1)
        } else {
            remaining / g.degree
        };
        // Larger exponents of earlier generators come first.
        for e in (0..=max).rev() {
            exps[i] = e;
            self.enumerate(i + 1, remaining - e * g.degree, exps, out);
        }
        exps[i] = 0;
    }

    /// Product of monomials with its Koszul sign, or `None` if an odd
    /// generator would repeat.
    pub fn monomial_product(&self, a: &Monomial, b: &Monomial) -> Option<(Monomial, bool)> {
        let mut negative = false;
        // Count pairs (odd i in a, odd j in b) with j < i: each one is a
        // transposition of two odd letters.
        let mut odd_in_b_before = 0u32;
        let mut exps = Vec::with_capacity(a.0.len());
        for (i, g) in self.generators.iter().enumerate() {
            let (x, y) = (a.0[i], b.0[i]);
            if g.is_odd() {
                if x > 0 && y > 0 {
                    return None;
                }
                if x > 0 && odd_in_b_before % 2 == 1 {
                    negative = !negative;
                }
                odd_in_b_before += y;
            }
            exps.push(x + y);
        }
        Some((Monomial(exps), negative))
    }

    /// Graded-commutative product.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, CdgaError> {
        if let (Some(wa), Some(wb)) = (a.width(), b.width()) {
            if wa != wb || wa != self.num_generators() {
                return Err(CdgaError::ForeignElement);
            }
        }
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((m, neg)) = self.monomial_product(ma, mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn power(&self, a: &Element, k: u32) -> Element {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul_unchecked(&out, a);
        }
        out
    }

    /// `d` of an element via the graded Leibniz rule.
    ///
    /// Accepts elements up to degree `cutoff`, whose differential lands in
    /// the last tracked degree.
    pub fn apply_differential(&self, e: &Element) -> Result<Element, CdgaError> {
        self.check_element(e)?;
        for (m, _) in e.terms() {
            let deg = self.monomial_degree(m);
            if deg > self.cutoff {
                return Err(CdgaError::CutoffExceeded {
                    degree: deg,
                    cutoff: self.cutoff,
                });
            }
        }
        Ok(self.d_unchecked(e))
    }

    pub(crate) fn d_unchecked(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.terms() {
            let dm = self.d_monomial(m);
            for (mm, cc) in dm.terms() {
                out.add_term(mm.clone(), cc * c);
            }
        }
        out
    }

    /// `d(g_1^{e_1} ... g_n^{e_n}) = Σ (-1)^{|prefix|} prefix · d(g_i^{e_i}) · suffix`.
    pub fn d_monomial(&self, m: &Monomial) -> Element {
        let n = self.num_generators();
        let mut out = Element::zero();
        let mut prefix_degree = 0u32;
        for i in 0..n {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let g = &self.generators[i];
            let dg = &self.differential[i];
            if !dg.is_zero() {
                let mut prefix = vec![0; n];
                prefix[..i].copy_from_slice(&m.0[..i]);
                let mut suffix = vec![0; n];
                suffix[i + 1..].copy_from_slice(&m.0[i + 1..]);
                // d(g^e) = e g^{e-1} dg for even g (all factors commute past
                // the even power); d(g) = dg for odd g.
                let mut factor = vec![0; n];
                factor[i] = e - 1;
                let coeff = Rational::from_integer(e.into());
                let sign = if prefix_degree % 2 == 1 {
                    -coeff
                } else {
                    coeff
                };
                let left = Element::from_monomial(Monomial(prefix), sign);
                let middle = self.mul_unchecked(
                    &Element::from_monomial(Monomial(factor), Rational::one()),
                    dg,
                );
                let right = Element::from_monomial(Monomial(suffix), Rational::one());
                let term = self.mul_unchecked(&self.mul_unchecked(&left, &middle), &right);
                out = out.add(&term);
            }
            prefix_degree += e * g.degree;
        }
        out
    }

    /// `d(V^even) = 0` and `d(V^odd) ⊆ Λ(V^even)`.
    pub fn is_pure(&self) -> bool {
        self.generators
            .iter()
            .zip(&self.differential)
            .all(|(g, dg)| {
                if g.is_odd() {
                    dg.terms().all(|(m, _)| self.odd_length(m) == 0)
                } else {
                    dg.is_zero()
                }
            })
    }

    /// Same generators; `d_σ = 0` on even generators and `d_σ v` is the
    /// component of `d v` lying in `Λ(V^even)` for odd `v`.
    pub fn associated_pure(&self) -> SullivanAlgebra {
        let differential = self
            .generators
            .iter()
            .zip(&self.differential)
            .map(|(g, dg)| {
                let mut out = Element::zero();
                if g.is_odd() {
                    for (m, c) in dg.terms() {
                        if self.odd_length(m) == 0 {
                            out.add_term(m.clone(), c.clone());
                        }
                    }
                }
                out
            })
            .collect();
        SullivanAlgebra::new(self.generators.clone(), differential, self.cutoff)
            .expect("a pure-shaped differential always squares to zero")
    }

    /// `dim V^odd - dim V^even`.
    pub fn homotopy_euler_characteristic(&self) -> i64 {
        self.generators
            .iter()
            .map(|g| if g.is_odd() { 1 } else { -1 })
            .sum()
    }

    pub fn verify_d_squared(&self) -> bool {
        self.first_d_squared_failure().is_none()
    }

    fn first_d_squared_failure(&self) -> Option<String> {
        self.generators
            .iter()
            .zip(&self.differential)
            .find(|(_, dg)| !self.d_unchecked(dg).is_zero())
            .map(|(g, _)| g.name.clone())
    }

    pub fn even_generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_generators()).filter(|&i| !self.generators[i].is_odd())
    }

    pub fn odd_generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_generators()).filter(|&i| self.generators[i].is_odd())
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// Coordinates of a homogeneous element over `basis`.
    pub fn coordinates(&self, e: &Element, basis_index: &HashMap<Monomial, usize>) -> SparseQ {
        let mut out: Vec<(usize, Rational)> = e
            .terms()
            .map(|(m, c)| (basis_index[m], c.clone()))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn element_from_coordinates(
        &self,
        basis: &[Monomial],
        coords: &[(usize, Rational)],
    ) -> Element {
        let mut e = Element::zero();
        for (i, c) in coords {
            e.add_term(basis[*i].clone(), c.clone());
        }
        e
    }
}

impl fmt::Display for SullivanAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| format!("{}[{}]", g.name, g.degree))
            .collect();
        write!(f, "Λ({})", gens.join(", "))?;
        for (g, dg) in self.generators.iter().zip(&self.differential) {
            if !dg.is_zero() {
                write!(f, ", d{} = {}", g.name, self.format(dg))?;
            }
        }
        Ok(())
    }
}

/// Declares generators first, then differentials by name.
pub struct AlgebraBuilder {
    cutoff: u32,
    generators: Vec<Generator>,
    differentials: Vec<(String, String)>,
}

impl AlgebraBuilder {
    pub fn generator(mut self, name: &str, degree: u32) -> Self {
        self.generators.push(Generator::new(name, degree));
        self
    }

    pub fn differential(mut self, name: &str, value: &str) -> Self {
        self.differentials
            .push((name.to_string(), value.to_string()));
        self
    }

    pub fn build(self) -> Result<SullivanAlgebra, CdgaError> {
        let free = SullivanAlgebra::free(self.generators.clone(), self.cutoff)?;
        let mut diff = vec![Element::zero(); self.generators.len()];
        for (name, value) in &self.differentials {
            let i = free
                .generator_index(name)
                .ok_or_else(|| CdgaError::UnknownGenerator(name.clone()))?;
            diff[i] = free.parse(value)?;
        }
        SullivanAlgebra::new(self.generators, diff, self.cutoff)
    }
}

/// A morphism of commutative cochain algebras given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdgaMorphism {
    source: SullivanAlgebra,
    target: SullivanAlgebra,
    assignment: Vec<Element>,
}

impl CdgaMorphism {
    /// Validates degrees and `φ(dg) = d(φ(g))` on every generator up to the
    /// smaller cutoff.
    pub fn new(
        source: SullivanAlgebra,
        target: SullivanAlgebra,
        assignment: Vec<Element>,
    ) -> Result<Self, CdgaError> {
        if assignment.len() != source.num_generators() {
            return Err(CdgaError::IncompleteAssignment(format!(
                "expected {} images, got {}",
                source.num_generators(),
                assignment.len()
            )));
        }
        for (g, img) in source.generators().iter().zip(&assignment) {
            target.check_element(img)?;
            match target.degree_of(img) {
                Degree::Zero => {}
                Degree::Homogeneous(k) if k == g.degree => {}
                _ => {
                    return Err(CdgaError::MorphismDegree {
                        generator: g.name.clone(),
                        expected: g.degree,
                    })
                }
            }
        }
        let f = CdgaMorphism {
            source,
            target,
            assignment,
        };
        let limit = f.source.cutoff().min(f.target.cutoff());
        for (i, g) in f.source.generators().iter().enumerate() {
            if g.degree > limit {
                continue;
            }
            let lhs = f.apply(f.source.d_generator(i));
            let rhs = f.target.d_unchecked(&f.assignment[i]);
            if lhs != rhs {
                return Err(CdgaError::NotAChainMap(g.name.clone()));
            }
        }
        Ok(f)
    }

    /// Assignment given by name → polynomial string in the target.
    pub fn from_strings(
        source: SullivanAlgebra,
        target: SullivanAlgebra,
        images: &[(&str, &str)],
    ) -> Result<Self, CdgaError> {
        let mut assignment = vec![None; source.num_generators()];
        for (name, value) in images {
            let i = source
                .generator_index(name)
                .ok_or_else(|| CdgaError::UnknownGenerator(name.to_string()))?;
            assignment[i] = Some(target.parse(value)?);
        }
        let assignment = assignment
            .into_iter()
            .enumerate()
            .map(|(i, a)| {
                a.ok_or_else(|| {
                    CdgaError::IncompleteAssignment(source.generators()[i].name.clone())
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(source, target, assignment)
    }

    pub fn identity(a: &SullivanAlgebra) -> Self {
        let assignment = (0..a.num_generators())
            .map(|i| a.generator_element(i))
            .collect();
        CdgaMorphism {
            source: a.clone(),
            target: a.clone(),
            assignment,
        }
    }

    pub fn source(&self) -> &SullivanAlgebra {
        &self.source
    }

    pub fn target(&self) -> &SullivanAlgebra {
        &self.target
    }

    pub fn assignment(&self) -> &[Element] {
        &self.assignment
    }

    /// Image of a source element.
    pub fn apply(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.terms() {
            let mut img = self.target.one();
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    let p = self.target.power(&self.assignment[i], k);
                    img = self.target.mul_unchecked(&img, &p);
                }
            }
            out = out.add(&img.scale(c));
        }
        out
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CdgaMorphism) -> Result<CdgaMorphism, CdgaError> {
        if other.source.generators() != self.target.generators() {
            return Err(CdgaError::ForeignElement);
        }
        let assignment = self.assignment.iter().map(|e| other.apply(e)).collect();
        CdgaMorphism::new(self.source.clone(), other.target.clone(), assignment)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    pub(crate) fn cp2_cp2bar() -> SullivanAlgebra {
        SullivanAlgebra::builder(6)
            .generator("x", 2)
            .generator("y", 2)
            .generator("n", 3)
            .generator("m", 3)
            .differential("n", "x^2+y^2")
            .differential("m", "x*y")
            .build()
            .unwrap()
    }

    fn s2() -> SullivanAlgebra {
        SullivanAlgebra::builder(6)
            .generator("u", 2)
            .generator("q", 3)
            .differential("q", "u^2")
            .build()
            .unwrap()
    }

    #[test]
    fn basis_examples() {
        let a = SullivanAlgebra::free(vec![Generator::new("u", 2)], 6).unwrap();
        assert_eq!(a.monomial_basis(4).unwrap(), vec![Monomial(vec![2])]);
        let b = SullivanAlgebra::free(vec![Generator::new("q", 3)], 6).unwrap();
        assert_eq!(b.monomial_basis(3).unwrap().len(), 1);
        assert!(b.monomial_basis(6).unwrap().is_empty());
        let c = cp2_cp2bar();
        let basis: Vec<String> = c
            .monomial_basis(5)
            .unwrap()
            .into_iter()
            .map(|m| c.format(&Element::from_monomial(m, q(1))))
            .collect();
        assert_eq!(basis, vec!["x*n", "x*m", "y*n", "y*m"]);
    }

    #[test]
    fn basis_beyond_tracked_range_fails() {
        let c = cp2_cp2bar();
        assert!(c.monomial_basis(7).is_ok());
        assert_eq!(
            c.monomial_basis(8),
            Err(CdgaError::CutoffExceeded {
                degree: 8,
                cutoff: 6
            })
        );
    }

    #[test]
    fn product_signs() {
        let a =
            SullivanAlgebra::free(vec![Generator::new("p", 3), Generator::new("q", 3)], 6).unwrap();
        let p = a.named("p").unwrap();
        let qq = a.named("q").unwrap();
        assert!(a.multiply(&qq, &qq).unwrap().is_zero());
        let pq = a.multiply(&p, &qq).unwrap();
        let qp = a.multiply(&qq, &p).unwrap();
        assert_eq!(pq, qp.scale(&q(-1)));
        let b =
            SullivanAlgebra::free(vec![Generator::new("x", 2), Generator::new("y", 2)], 4).unwrap();
        let lhs = b
            .multiply(&b.parse("x+y").unwrap(), &b.parse("x-y").unwrap())
            .unwrap();
        assert_eq!(lhs, b.parse("x^2-y^2").unwrap());
    }

    #[test]
    fn foreign_elements_rejected() {
        let a = s2();
        let b = cp2_cp2bar();
        assert_eq!(
            a.multiply(&a.named("u").unwrap(), &b.named("x").unwrap()),
            Err(CdgaError::ForeignElement)
        );
    }

    #[test]
    fn differential_examples() {
        let c = cp2_cp2bar();
        let nm = c.parse("n*m").unwrap();
        let expected = c.parse("x^2*m+y^2*m-x*y*n").unwrap();
        assert_eq!(c.apply_differential(&nm).unwrap(), expected);
        let s = s2();
        assert!(s
            .apply_differential(&s.parse("u^2").unwrap())
            .unwrap()
            .is_zero());
        assert_eq!(
            s.apply_differential(&s.parse("u*q").unwrap()).unwrap(),
            s.parse("u^3").unwrap()
        );
        assert!(s.verify_d_squared());
    }

    #[test]
    fn differential_respects_cutoff() {
        let s = s2();
        let u4 = s.parse("u^4").unwrap();
        assert!(matches!(
            s.apply_differential(&u4),
            Err(CdgaError::CutoffExceeded { .. })
        ));
    }

    #[test]
    fn bad_differentials_rejected() {
        let wrong_degree = SullivanAlgebra::builder(6)
            .generator("x", 2)
            .generator("n", 3)
            .differential("n", "x")
            .build();
        assert!(matches!(
            wrong_degree,
            Err(CdgaError::DifferentialDegree { .. })
        ));
        // dy = x*z with dz = x^2 gives d(dy) = -x^3 != 0
        let not_closed = SullivanAlgebra::builder(8)
            .generator("x", 2)
            .generator("z", 3)
            .generator("y", 4)
            .differential("z", "x^2")
            .differential("y", "x*z")
            .build();
        assert_eq!(not_closed, Err(CdgaError::DSquaredNonzero("y".into())));
        let dup = SullivanAlgebra::builder(4)
            .generator("x", 2)
            .generator("x", 3)
            .build();
        assert_eq!(dup, Err(CdgaError::DuplicateGenerator("x".into())));
    }

    #[test]
    fn purity() {
        assert!(s2().is_pure());
        assert!(cp2_cp2bar().is_pure());
        // dz = w*q*qq with q, qq odd
        let a = SullivanAlgebra::builder(10)
            .generator("w", 2)
            .generator("q", 3)
            .generator("qq", 3)
            .generator("z", 7)
            .differential("z", "w*q*qq")
            .build()
            .unwrap();
        assert!(!a.is_pure());
    }

    #[test]
    fn associated_pure_projects() {
        let c = cp2_cp2bar();
        assert_eq!(c.associated_pure(), c);
        // dv = u^2 + w*z*z' projects to u^2
        let a = SullivanAlgebra::builder(12)
            .generator("u", 4)
            .generator("w", 2)
            .generator("z", 3)
            .generator("zz", 3)
            .generator("v", 7)
            .differential("v", "u^2+w*z*zz")
            .build()
            .unwrap();
        let p = a.associated_pure();
        assert!(p.is_pure());
        assert_eq!(p.d_generator(4), &p.parse("u^2").unwrap());
        assert_eq!(
            p.homotopy_euler_characteristic(),
            a.homotopy_euler_characteristic()
        );
    }

    #[test]
    fn homotopy_euler() {
        let b = SullivanAlgebra::free(vec![Generator::new("q", 3)], 3).unwrap();
        assert_eq!(b.homotopy_euler_characteristic(), 1);
        assert_eq!(cp2_cp2bar().homotopy_euler_characteristic(), 0);
        assert_eq!(SullivanAlgebra::unit(3).homotopy_euler_characteristic(), 0);
    }

    #[test]
    fn unit_algebra_operations() {
        let u = SullivanAlgebra::unit(4);
        assert_eq!(u.monomial_basis(0).unwrap().len(), 1);
        assert!(u.monomial_basis(2).unwrap().is_empty());
        assert!(u.is_pure());
        assert!(u.verify_d_squared());
        assert_eq!(u.multiply(&u.one(), &u.one()).unwrap(), u.one());
    }

    #[test]
    fn morphism_checks_chain_condition() {
        let src = SullivanAlgebra::free(vec![Generator::new("u", 2)], 4).unwrap();
        let f = CdgaMorphism::from_strings(src.clone(), s2(), &[("u", "u")]);
        assert!(f.is_ok());
        // q -> 0 from Λ(u,q) with dq = u^2 to Q[u] is not a chain map
        let g = CdgaMorphism::from_strings(s2(), src, &[("u", "u"), ("q", "0")]);
        assert_eq!(g, Err(CdgaError::NotAChainMap("q".into())));
    }
}
