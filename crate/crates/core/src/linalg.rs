//! Exact linear algebra over the rationals.
//!
//! Every routine funnels through [`Echelon`], an incremental fraction-free
//! row reducer working on sparse primitive integer rows. Rational input is
//! scaled to integers on entry, and each elimination step
//! `r <- b*r - a*p` is followed by division by the row content, so entries
//! stay small on the sparse, structured matrices produced by differentials.
//! Pivots are the first nonzero column of each row and rows are processed in
//! input order, so all returned bases are deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the ambient span")]
    NotASubspace,
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
}

/// Dense matrix of exact rationals, row-major.
///
/// `BigRational` keeps every entry in lowest terms with a positive
/// denominator, which is the only normal form used here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    /// Builds a `rows x cols` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Multiplies every entry by `factor`.
    pub fn scaled(&self, factor: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }
}

/// An independent family of vectors in `Q^ambient_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<Vec<Rational>>,
}

impl SubspaceBasis {
    /// Validates lengths and linear independence.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut ech = Echelon::new();
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if !ech.insert_dense(v) {
                return Err(LinalgError::LinearlyDependent);
            }
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors,
        })
    }

    /// Spans `vectors`, dropping those dependent on earlier ones.
    pub fn span_of(ambient_dim: usize, vectors: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut ech = Echelon::new();
        let mut kept = Vec::new();
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if ech.insert_dense(v) {
                kept.push(v.clone());
            }
        }
        Ok(SubspaceBasis {
            ambient_dim,
            vectors: kept,
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    /// The standard basis of `Q^n`.
    pub fn full(n: usize) -> Self {
        let vectors = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        SubspaceBasis {
            ambient_dim: n,
            vectors,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }
}

/// Exact rank over Q.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut ech = Echelon::new();
    (0..m.rows())
        .filter(|&i| ech.insert_dense(m.row(i)))
        .count()
}

/// Basis of `{v : m v = 0}`, one vector per non-pivot column.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let columns: Vec<SparseQ> = (0..m.cols())
        .map(|j| sparse_from_dense(&m.column(j)))
        .collect();
    let vectors = kernel_of_columns(&columns)
        .into_iter()
        .map(|k| dense_from_sparse(&k, m.cols()))
        .collect();
    SubspaceBasis {
        ambient_dim: m.cols(),
        vectors,
    }
}

/// Membership of `v` in the span of `basis`, with its coordinates.
pub fn image_membership(
    basis: &SubspaceBasis,
    v: &[Rational],
) -> Result<Option<Vec<Rational>>, LinalgError> {
    if v.len() != basis.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.ambient_dim,
            found: v.len(),
        });
    }
    let mut ech = Echelon::new();
    for (id, b) in basis.vectors.iter().enumerate() {
        ech.insert_sparse_tracked(&sparse_from_dense(b), id);
    }
    Ok(ech
        .coordinates(&sparse_from_dense(v))
        .map(|c| dense_from_sparse(&c, basis.dim())))
}

/// Representatives of a complement of `sub` inside `ambient`.
///
/// The representatives are drawn from `ambient`'s own vectors, in order.
pub fn quotient_basis(
    sub: &SubspaceBasis,
    ambient: &SubspaceBasis,
) -> Result<SubspaceBasis, LinalgError> {
    if sub.ambient_dim != ambient.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient.ambient_dim,
            found: sub.ambient_dim,
        });
    }
    let mut amb = Echelon::new();
    for v in &ambient.vectors {
        amb.insert_dense(v);
    }
    for v in &sub.vectors {
        if !amb.contains(&sparse_from_dense(v)) {
            return Err(LinalgError::NotASubspace);
        }
    }
    let mut ech = Echelon::new();
    for v in &sub.vectors {
        ech.insert_dense(v);
    }
    let vectors = ambient
        .vectors
        .iter()
        .filter(|v| ech.insert_dense(v))
        .cloned()
        .collect();
    Ok(SubspaceBasis {
        ambient_dim: ambient.ambient_dim,
        vectors,
    })
}

/// Sparse rational vector: `(index, value)` pairs, indices strictly increasing,
/// no zero values.
pub type SparseQ = Vec<(usize, Rational)>;

/// Sparse integer vector in the same layout as [`SparseQ`].
type SparseZ = Vec<(usize, BigInt)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseQ {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseQ, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Kernel of the linear map whose columns are `columns`, as sparse vectors
/// over column indices. Each kernel vector has its largest index at a
/// distinct non-pivot column.
pub fn kernel_of_columns(columns: &[SparseQ]) -> Vec<SparseQ> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Some(dep) = ech.insert_sparse_tracked(col, j) {
            out.push(dep);
        }
    }
    out
}

/// Incremental row echelon form with optional tracking of how each stored
/// row combines the tracked input vectors.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    // pivot column -> row whose first nonzero entry sits in that column
    rows: BTreeMap<usize, Row>,
}

#[derive(Debug, Clone)]
struct Row {
    entries: SparseZ,
    // den * entries = sum_i comb_i * tracked_i
    comb: SparseZ,
    den: BigInt,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Inserts an untracked vector; returns whether it raised the rank.
    pub fn insert_dense(&mut self, v: &[Rational]) -> bool {
        self.insert_sparse(&sparse_from_dense(v))
    }

    pub fn insert_sparse(&mut self, v: &SparseQ) -> bool {
        let row = Row::from_rational(v, None);
        let row = self.reduce_row(row);
        match row.entries.first() {
            None => false,
            Some(&(lead, _)) => {
                self.rows.insert(lead, row);
                true
            }
        }
    }

    /// Inserts `v` tagged with `id`. If `v` is dependent on what is already
    /// stored, nothing is inserted and the dependency is returned as the
    /// primitive combination `c` with `sum c_i * tracked_i = 0`, `c_id != 0`.
    pub fn insert_sparse_tracked(&mut self, v: &SparseQ, id: usize) -> Option<SparseQ> {
        let row = Row::from_rational(v, Some(id));
        let row = self.reduce_row(row);
        match row.entries.first() {
            None => {
                let g = content(&row.comb);
                Some(
                    row.comb
                        .iter()
                        .map(|(i, c)| (*i, Rational::from_integer(c / &g)))
                        .collect(),
                )
            }
            Some(&(lead, _)) => {
                self.rows.insert(lead, row);
                None
            }
        }
    }

    pub fn contains(&self, v: &SparseQ) -> bool {
        self.reduce_row(Row::from_rational(v, None))
            .entries
            .is_empty()
    }

    /// Coordinates of `v` over the tracked vectors, if `v` is in the span.
    ///
    /// Untracked rows act as a subspace to reduce modulo: the coordinates
    /// then describe `v` modulo that subspace.
    pub fn coordinates(&self, v: &SparseQ) -> Option<SparseQ> {
        // Track the query itself under a sentinel id.
        let sentinel = usize::MAX;
        let row = self.reduce_row(Row::from_rational(v, Some(sentinel)));
        if !row.entries.is_empty() {
            return None;
        }
        // 0 = s * v + sum c_i t_i  =>  v = -sum c_i / s * t_i
        let s = row
            .comb
            .iter()
            .find(|(i, _)| *i == sentinel)
            .map(|(_, c)| c.clone())
            .expect("sentinel coefficient never vanishes");
        Some(
            row.comb
                .iter()
                .filter(|(i, _)| *i != sentinel)
                .map(|(i, c)| (*i, -Rational::new(c.clone(), s.clone())))
                .collect(),
        )
    }

    fn reduce_row(&self, mut row: Row) -> Row {
        // Leading entries are eliminated left to right; a row whose lead has
        // no pivot skips to its next entry only when fully reducing, which we
        // do not need: the first unmatched lead makes the row a new pivot.
        while let Some(&(lead, _)) = row.entries.first() {
            match self.rows.get(&lead) {
                Some(pivot) => row.eliminate_with(pivot),
                None => break,
            }
        }
        row
    }
}

impl Row {
    fn from_rational(v: &SparseQ, id: Option<usize>) -> Row {
        // den * entries = comb, with entries = lcm * v
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
        let entries: SparseZ = v
            .iter()
            .map(|(i, x)| (*i, x.numer() * (&lcm / x.denom())))
            .collect();
        let comb = match id {
            Some(id) => vec![(id, lcm)],
            None => Vec::new(),
        };
        let mut row = Row {
            entries,
            comb,
            den: BigInt::one(),
        };
        row.normalize();
        row
    }

    /// `self <- b*self - a*pivot` with `a`, `b` the two leading entries.
    fn eliminate_with(&mut self, pivot: &Row) {
        let a = &self.entries[0].1;
        let b = &pivot.entries[0].1;
        let g = a.gcd(b);
        let a = a / &g;
        let b = b / &g;
        self.entries = combine(&b, &self.entries, &a, &pivot.entries);
        if !(self.comb.is_empty() && pivot.comb.is_empty()) {
            // den_s*s = C_s, den_p*p = C_p
            // den_s*den_p*(b s - a p) = b*den_p*C_s - a*den_s*C_p
            let bs = &b * &pivot.den;
            let ap = &a * &self.den;
            self.comb = combine(&bs, &self.comb, &ap, &pivot.comb);
            self.den = &self.den * &pivot.den;
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        let g = content(&self.entries);
        if !g.is_one() && !g.is_zero() {
            for (_, x) in self.entries.iter_mut() {
                *x = &*x / &g;
            }
            if !self.comb.is_empty() {
                self.den *= &g;
            }
        }
        if self.comb.is_empty() {
            self.den = BigInt::one();
            return;
        }
        let h = content(&self.comb).gcd(&self.den);
        if !h.is_one() {
            for (_, x) in self.comb.iter_mut() {
                *x = &*x / &h;
            }
            self.den = &self.den / &h;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for (_, x) in self.comb.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

fn content(v: &SparseZ) -> BigInt {
    let mut g = BigInt::zero();
    for (_, x) in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `a*x - b*y` on sparse vectors.
fn combine(a: &BigInt, x: &SparseZ, b: &BigInt, y: &SparseZ) -> SparseZ {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(2)), 2);
        assert_eq!(rank(&RationalMatrix::zeros(3, 4)), 0);
        let m = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(rank(&m), 1);
        assert_eq!(rank(&RationalMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RationalMatrix::from_rows(vec![
            vec![q_frac(1, 2), q_frac(1, 3)],
            vec![q_frac(3, 2), q(1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RationalMatrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&RationalMatrix::zeros(2, 3)).dim(), 3);
        let m = RationalMatrix::from_i64_rows(&[&[1, 1]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        let v = &k.vectors()[0];
        // up to scale (1, -1)
        assert_eq!(&v[0] + &v[1], q(0));
        assert!(!v[0].is_zero());
        assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn membership_examples() {
        let b = SubspaceBasis::new(2, vec![qv(&[1, 0])]).unwrap();
        assert_eq!(image_membership(&b, &qv(&[2, 0])).unwrap(), Some(qv(&[2])));
        assert_eq!(image_membership(&b, &qv(&[0, 1])).unwrap(), None);
        let b = SubspaceBasis::new(2, vec![qv(&[1, 1]), qv(&[1, -1])]).unwrap();
        assert_eq!(
            image_membership(&b, &qv(&[3, 1])).unwrap(),
            Some(qv(&[2, 1]))
        );
        assert_eq!(
            image_membership(&b, &qv(&[1, 2, 3])),
            Err(LinalgError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn quotient_examples() {
        let full2 = SubspaceBasis::full(2);
        assert_eq!(
            quotient_basis(&SubspaceBasis::zero(2), &full2)
                .unwrap()
                .dim(),
            2
        );
        assert!(quotient_basis(&full2, &full2).unwrap().is_empty());
        let sub = SubspaceBasis::new(3, vec![qv(&[1, 1, 0])]).unwrap();
        let reps = quotient_basis(&sub, &SubspaceBasis::full(3)).unwrap();
        assert_eq!(reps.dim(), 2);
        // reps together with sub span Q^3
        let mut all = sub.vectors().to_vec();
        all.extend(reps.vectors().iter().cloned());
        assert_eq!(SubspaceBasis::span_of(3, &all).unwrap().dim(), 3);
    }

    #[test]
    fn quotient_rejects_non_subspace() {
        let sub = SubspaceBasis::new(2, vec![qv(&[0, 1])]).unwrap();
        let amb = SubspaceBasis::new(2, vec![qv(&[1, 0])]).unwrap();
        assert_eq!(quotient_basis(&sub, &amb), Err(LinalgError::NotASubspace));
    }

    #[test]
    fn dependent_basis_rejected() {
        assert_eq!(
            SubspaceBasis::new(2, vec![qv(&[1, 2]), qv(&[2, 4])]),
            Err(LinalgError::LinearlyDependent)
        );
    }

    #[test]
    fn coordinates_modulo_untracked_rows() {
        let mut ech = Echelon::new();
        ech.insert_sparse(&sparse_from_dense(&qv(&[1, 1, 0])));
        ech.insert_sparse_tracked(&sparse_from_dense(&qv(&[0, 1, 0])), 0);
        // (2, 5, 0) = 2*(1,1,0) + 3*(0,1,0)
        let c = ech
            .coordinates(&sparse_from_dense(&qv(&[2, 5, 0])))
            .unwrap();
        assert_eq!(c, vec![(0, q(3))]);
        assert!(ech
            .coordinates(&sparse_from_dense(&qv(&[0, 0, 1])))
            .is_none());
    }
}
