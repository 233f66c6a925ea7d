//! Exact cohomology of truncated Sullivan algebras.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use thiserror::Error;

use crate::cdga::{CdgaError, CdgaMorphism, Degree, Element, Monomial, SullivanAlgebra};
use crate::linalg::{
    dense_from_sparse, kernel_of_columns, rank, sparse_from_dense, Echelon, Rational,
    RationalMatrix, SparseQ, SubspaceBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Cdga(#[from] CdgaError),
    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    CutoffExceeded { degree: u32, cutoff: u32 },
    #[error("element of degree {0} is not a cocycle")]
    NotACocycle(u32),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("the algebra is not pure")]
    NotPure,
    #[error("table was computed for a different algebra")]
    WrongAlgebra,
    #[error("class vector has length {found}, expected {expected}")]
    ClassLength { expected: usize, found: usize },
}

#[derive(Debug, Clone)]
struct DegreeData {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Cocycles whose classes form a basis of H^n.
    representatives: Vec<SparseQ>,
    /// Boundaries (untracked) followed by the representatives (tracked).
    reducer: Echelon,
}

/// `H^n` for `0 <= n <= cutoff` with chosen cocycle representatives.
#[derive(Debug, Clone)]
pub struct CohomologyTable {
    algebra: SullivanAlgebra,
    degrees: Vec<DegreeData>,
}

/// A cohomology class as coordinates over the table's basis of `H^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: u32,
    pub coordinates: Vec<Rational>,
}

fn index_of(basis: &[Monomial]) -> HashMap<Monomial, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}

fn sparse_of(e: &Element, index: &HashMap<Monomial, usize>) -> SparseQ {
    let mut v: SparseQ = e.terms().map(|(m, c)| (index[m], c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Columns of `d : C^n -> C^{n+1}` over the monomial bases.
fn differential_columns(
    alg: &SullivanAlgebra,
    basis: &[Monomial],
    next_index: &HashMap<Monomial, usize>,
) -> Vec<SparseQ> {
    basis
        .iter()
        .map(|m| sparse_of(&alg.d_monomial(m), next_index))
        .collect()
}

impl CohomologyTable {
    pub fn compute(alg: &SullivanAlgebra) -> Self {
        let cutoff = alg.cutoff();
        let bases: Vec<Vec<Monomial>> = (0..=cutoff + 1).map(|n| alg.basis_unchecked(n)).collect();
        let indices: Vec<HashMap<Monomial, usize>> = bases.iter().map(|b| index_of(b)).collect();
        let mut degrees = Vec::with_capacity(cutoff as usize + 1);
        let mut previous: Vec<SparseQ> = Vec::new();
        for n in 0..=cutoff as usize {
            let columns = differential_columns(alg, &bases[n], &indices[n + 1]);
            let cycles = kernel_of_columns(&columns);
            let mut reducer = Echelon::new();
            for b in &previous {
                reducer.insert_sparse(b);
            }
            let mut representatives = Vec::new();
            for z in cycles {
                if reducer
                    .insert_sparse_tracked(&z, representatives.len())
                    .is_none()
                {
                    representatives.push(z);
                }
            }
            degrees.push(DegreeData {
                basis: bases[n].clone(),
                index: indices[n].clone(),
                representatives,
                reducer,
            });
            previous = columns;
        }
        CohomologyTable {
            algebra: alg.clone(),
            degrees,
        }
    }

    pub fn algebra(&self) -> &SullivanAlgebra {
        &self.algebra
    }

    pub fn cutoff(&self) -> u32 {
        self.algebra.cutoff()
    }

    fn data(&self, n: u32) -> Result<&DegreeData, CohomologyError> {
        self.degrees
            .get(n as usize)
            .ok_or(CohomologyError::CutoffExceeded {
                degree: n,
                cutoff: self.cutoff(),
            })
    }

    pub fn betti(&self, n: u32) -> Result<usize, CohomologyError> {
        Ok(self.data(n)?.representatives.len())
    }

    /// Betti numbers `b_0 ..= b_cutoff`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees
            .iter()
            .map(|d| d.representatives.len())
            .collect()
    }

    pub fn total_dimension(&self) -> usize {
        self.betti_numbers().iter().sum()
    }

    /// Alternating sum of the Betti numbers through the cutoff.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti_numbers()
            .iter()
            .enumerate()
            .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Highest degree with nonzero cohomology.
    pub fn top_degree(&self) -> Option<u32> {
        self.betti_numbers()
            .iter()
            .rposition(|&b| b > 0)
            .map(|n| n as u32)
    }

    pub fn representative(&self, n: u32, i: usize) -> Result<Element, CohomologyError> {
        let d = self.data(n)?;
        let v = d
            .representatives
            .get(i)
            .ok_or(CohomologyError::ClassLength {
                expected: d.representatives.len(),
                found: i + 1,
            })?;
        Ok(self.algebra.element_from_coordinates(&d.basis, v))
    }

    /// Cocycle representing a class.
    pub fn element_of(&self, c: &CohomologyClass) -> Result<Element, CohomologyError> {
        let d = self.data(c.degree)?;
        if c.coordinates.len() != d.representatives.len() {
            return Err(CohomologyError::ClassLength {
                expected: d.representatives.len(),
                found: c.coordinates.len(),
            });
        }
        let mut dense = vec![Rational::zero(); d.basis.len()];
        for (coef, rep) in c.coordinates.iter().zip(&d.representatives) {
            for (j, x) in rep {
                dense[*j] += coef * x;
            }
        }
        Ok(self
            .algebra
            .element_from_coordinates(&d.basis, &sparse_from_dense(&dense)))
    }

    /// Class of a homogeneous cocycle of the table's algebra.
    pub fn class_of(&self, e: &Element) -> Result<CohomologyClass, CohomologyError> {
        self.algebra.check_element(e)?;
        let n = match self.algebra.degree_of(e) {
            Degree::Zero => 0,
            Degree::Homogeneous(n) => n,
            Degree::Mixed => return Err(CohomologyError::NotHomogeneous),
        };
        if e.is_zero() {
            return Ok(CohomologyClass {
                degree: 0,
                coordinates: vec![Rational::zero(); self.betti(0)?],
            });
        }
        self.class_in_degree(n, e)
    }

    fn class_in_degree(&self, n: u32, e: &Element) -> Result<CohomologyClass, CohomologyError> {
        let d = self.data(n)?;
        let v = sparse_of(e, &d.index);
        let coords = d
            .reducer
            .coordinates(&v)
            .ok_or(CohomologyError::NotACocycle(n))?;
        Ok(CohomologyClass {
            degree: n,
            coordinates: dense_from_sparse(&coords, d.representatives.len()),
        })
    }

    /// Zero-safe variant of [`class_of`](Self::class_of) with a known degree.
    pub fn class_of_degree(&self, n: u32, e: &Element) -> Result<CohomologyClass, CohomologyError> {
        self.algebra.check_element(e)?;
        match self.algebra.degree_of(e) {
            Degree::Zero => Ok(CohomologyClass {
                degree: n,
                coordinates: vec![Rational::zero(); self.betti(n)?],
            }),
            Degree::Homogeneous(k) if k == n => self.class_in_degree(n, e),
            _ => Err(CohomologyError::NotHomogeneous),
        }
    }

    pub fn cup_product(
        &self,
        a: &CohomologyClass,
        b: &CohomologyClass,
    ) -> Result<CohomologyClass, CohomologyError> {
        let n = a.degree + b.degree;
        if n > self.cutoff() {
            return Err(CohomologyError::CutoffExceeded {
                degree: n,
                cutoff: self.cutoff(),
            });
        }
        let x = self.element_of(a)?;
        let y = self.element_of(b)?;
        let p = self.algebra.mul_unchecked(&x, &y);
        self.class_of_degree(n, &p)
    }

    /// Image of `H_0 = Λ(V^even) / (d V^odd)` in `H^n`, as a subspace of
    /// class coordinates.
    pub fn h0_image(&self, n: u32) -> Result<SubspaceBasis, CohomologyError> {
        if !self.algebra.is_pure() {
            return Err(CohomologyError::NotPure);
        }
        let d = self.data(n)?;
        let b = d.representatives.len();
        let mut vectors = Vec::new();
        for m in &d.basis {
            if self.algebra.odd_length(m) == 0 {
                let e = Element::from_monomial(m.clone(), Rational::from_integer(1.into()));
                vectors.push(self.class_in_degree(n, &e)?.coordinates);
            }
        }
        Ok(SubspaceBasis::span_of(b, &vectors).expect("vectors have the ambient length"))
    }

    /// Whether `H^n` is Poincaré-dual of formal dimension `fd`: `H^fd = Q`,
    /// vanishing above `fd`, and a nondegenerate cup pairing
    /// `H^k x H^{fd-k} -> H^fd`. Requires `fd <= cutoff`.
    pub fn poincare_duality_holds(&self, fd: u32) -> Result<bool, CohomologyError> {
        if fd > self.cutoff() {
            return Err(CohomologyError::CutoffExceeded {
                degree: fd,
                cutoff: self.cutoff(),
            });
        }
        let betti = self.betti_numbers();
        if betti[fd as usize] != 1 || betti[fd as usize + 1..].iter().any(|&b| b > 0) {
            return Ok(false);
        }
        for k in 0..=fd {
            let (bk, bl) = (betti[k as usize], betti[(fd - k) as usize]);
            if bk != bl {
                return Ok(false);
            }
            if bk == 0 {
                continue;
            }
            let mut rows = Vec::with_capacity(bk);
            for i in 0..bk {
                let mut row = Vec::with_capacity(bl);
                for j in 0..bl {
                    let p = self.cup_product(&unit_class(k, bk, i), &unit_class(fd - k, bl, j))?;
                    row.push(p.coordinates[0].clone());
                }
                rows.push(row);
            }
            let m = RationalMatrix::from_rows(rows).expect("rectangular");
            if rank(&m) != bk {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn unit_class(degree: u32, dim: usize, i: usize) -> CohomologyClass {
    let mut coordinates = vec![Rational::zero(); dim];
    coordinates[i] = Rational::from_integer(1.into());
    CohomologyClass {
        degree,
        coordinates,
    }
}

/// Dimensions of `H_{n,i}` of a pure algebra, graded by degree `n` and odd
/// word length `i`. The differential lowers `i` by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerGradedTable {
    pub cutoff: u32,
    /// `(n, i) -> dim H_{n,i}`; only nonzero entries are stored.
    pub dims: BTreeMap<(u32, u32), usize>,
}

impl LowerGradedTable {
    pub fn compute(alg: &SullivanAlgebra) -> Result<Self, CohomologyError> {
        if !alg.is_pure() {
            return Err(CohomologyError::NotPure);
        }
        let cutoff = alg.cutoff();
        let split = |n: u32| -> BTreeMap<u32, Vec<Monomial>> {
            let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
            for m in alg.basis_unchecked(n) {
                out.entry(alg.odd_length(&m)).or_default().push(m);
            }
            out
        };
        // rank of d on C_{n,i} for every tracked (n, i)
        let mut ranks: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        let mut dims: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        let blocks: Vec<BTreeMap<u32, Vec<Monomial>>> = (0..=cutoff + 1).map(split).collect();
        for n in 0..=cutoff {
            for (&i, basis) in &blocks[n as usize] {
                let r = if i == 0 {
                    0
                } else {
                    let target = blocks[n as usize + 1]
                        .get(&(i - 1))
                        .map(|b| index_of(b))
                        .unwrap_or_default();
                    let columns = differential_columns(alg, basis, &target);
                    let mut ech = Echelon::new();
                    columns.iter().filter(|c| ech.insert_sparse(c)).count()
                };
                ranks.insert((n, i), r);
            }
        }
        for n in 0..=cutoff {
            for (&i, basis) in &blocks[n as usize] {
                let cycles = basis.len() - ranks[&(n, i)];
                let boundaries = if n == 0 {
                    0
                } else {
                    ranks.get(&(n - 1, i + 1)).copied().unwrap_or(0)
                };
                let h = cycles - boundaries;
                if h > 0 {
                    dims.insert((n, i), h);
                }
            }
        }
        Ok(LowerGradedTable { cutoff, dims })
    }

    pub fn dim(&self, n: u32, i: u32) -> usize {
        self.dims.get(&(n, i)).copied().unwrap_or(0)
    }

    /// `dim H^n = Σ_i dim H_{n,i}`.
    pub fn total(&self, n: u32) -> usize {
        self.dims
            .iter()
            .filter(|((m, _), _)| *m == n)
            .map(|(_, &d)| d)
            .sum()
    }
}

/// Outcome of a degreewise surjectivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivityReport {
    pub surjective: bool,
    /// Degrees (within the checked range) where the map is not onto.
    pub failing_degrees: Vec<u32>,
    pub checked_through: u32,
}

/// Matrix of `H^n(f)`: target classes by source classes.
pub fn induced_map(
    f: &CdgaMorphism,
    source: &CohomologyTable,
    target: &CohomologyTable,
    n: u32,
) -> Result<RationalMatrix, CohomologyError> {
    if source.algebra().generators() != f.source().generators()
        || target.algebra().generators() != f.target().generators()
    {
        return Err(CohomologyError::WrongAlgebra);
    }
    let bs = source.betti(n)?;
    let bt = target.betti(n)?;
    let mut columns = Vec::with_capacity(bs);
    for i in 0..bs {
        let img = f.apply(&source.representative(n, i)?);
        columns.push(target.class_of_degree(n, &img)?.coordinates);
    }
    Ok(RationalMatrix::from_columns(bt, &columns).expect("columns have target length"))
}

fn surjectivity_where(
    f: &CdgaMorphism,
    source: &CohomologyTable,
    target: &CohomologyTable,
    keep: impl Fn(u32) -> bool,
) -> Result<SurjectivityReport, CohomologyError> {
    let top = target.cutoff();
    if source.cutoff() < top {
        return Err(CohomologyError::CutoffExceeded {
            degree: top,
            cutoff: source.cutoff(),
        });
    }
    let mut failing = Vec::new();
    for n in (0..=top).filter(|&n| keep(n)) {
        let bt = target.betti(n)?;
        if bt == 0 {
            continue;
        }
        let m = induced_map(f, source, target, n)?;
        if rank(&m) < bt {
            failing.push(n);
        }
    }
    Ok(SurjectivityReport {
        surjective: failing.is_empty(),
        failing_degrees: failing,
        checked_through: top,
    })
}

/// Whether `H^n(f)` is onto for every even `n` through the target cutoff.
pub fn even_degree_surjectivity(
    f: &CdgaMorphism,
    source: &CohomologyTable,
    target: &CohomologyTable,
) -> Result<SurjectivityReport, CohomologyError> {
    surjectivity_where(f, source, target, |n| n % 2 == 0)
}

/// Whether `H^n(f)` is onto for every odd `n` through the target cutoff.
pub fn odd_degree_surjectivity(
    f: &CdgaMorphism,
    source: &CohomologyTable,
    target: &CohomologyTable,
) -> Result<SurjectivityReport, CohomologyError> {
    surjectivity_where(f, source, target, |n| n % 2 == 1)
}

/// Whether `H^n(f)` is onto in every degree through the target cutoff.
pub fn full_surjectivity(
    f: &CdgaMorphism,
    source: &CohomologyTable,
    target: &CohomologyTable,
) -> Result<SurjectivityReport, CohomologyError> {
    surjectivity_where(f, source, target, |_| true)
}
