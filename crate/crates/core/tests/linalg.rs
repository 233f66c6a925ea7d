use num_traits::{One, Zero};
use proptest::prelude::*;
use sullivan_core::linalg::{
    image_membership, kernel_basis, q, quotient_basis, rank, RationalMatrix, SubspaceBasis,
};
use sullivan_core::Rational;

/// Textbook row reduction on a dense copy, sharing nothing with the library.
#[allow(clippy::needless_range_loop)]
fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] -= sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn matrix(rows: &[Vec<i64>]) -> RationalMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    RationalMatrix::from_i64_rows(&refs).unwrap()
}

fn mat_vec(m: &RationalMatrix, v: &[Rational]) -> Vec<Rational> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j) * &v[j]).sum())
        .collect()
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

#[test]
fn rank_of_dependent_rows() {
    // second row is twice the first
    assert_eq!(rank(&matrix(&[vec![1, 2], vec![2, 4]])), 1);
}

#[test]
fn kernel_of_a_row() {
    let k = kernel_basis(&matrix(&[vec![1, 1]]));
    assert_eq!(k.dim(), 1);
    let v = &k.vectors()[0];
    assert_eq!(&v[0] + &v[1], Rational::zero());
    assert!(!v[0].is_zero());
}

#[test]
fn membership_with_coordinates() {
    let b = SubspaceBasis::span_of(2, &[vec![q(1), q(1)], vec![q(1), q(-1)]]).unwrap();
    // (3, 1) = 2 (1, 1) + 1 (1, -1)
    let c = image_membership(&b, &[q(3), q(1)]).unwrap().unwrap();
    assert_eq!(c, vec![q(2), q(1)]);
    let line = SubspaceBasis::span_of(2, &[vec![q(1), q(1)]]).unwrap();
    assert_eq!(image_membership(&line, &[q(1), q(0)]).unwrap(), None);
}

#[test]
fn complement_in_three_space() {
    let sub = SubspaceBasis::span_of(3, &[vec![q(1), q(1), q(0)]]).unwrap();
    let quot = quotient_basis(&sub, &SubspaceBasis::full(3)).unwrap();
    assert_eq!(quot.dim(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_matches_oracle(rows in small_matrix()) {
        prop_assert_eq!(rank(&matrix(&rows)), oracle_rank(&rows));
    }

    #[test]
    fn rank_nullity(rows in small_matrix()) {
        let m = matrix(&rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        for v in k.vectors() {
            prop_assert!(mat_vec(&m, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_ignores_permutations(rows in small_matrix(), seed in any::<u64>()) {
        let mut permuted = rows.clone();
        let n = permuted.len();
        permuted.rotate_left((seed as usize) % n);
        let cols = permuted[0].len();
        let shift = (seed as usize / 7) % cols;
        for r in &mut permuted {
            r.rotate_left(shift);
        }
        prop_assert_eq!(rank(&matrix(&rows)), rank(&matrix(&permuted)));
    }

    #[test]
    fn rank_ignores_scaling(rows in small_matrix(), s in prop_oneof![-5i64..=-1, 1i64..=5]) {
        let scaled: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
        let (a, b) = (matrix(&rows), matrix(&scaled));
        prop_assert_eq!(rank(&a), rank(&b));
        prop_assert_eq!(kernel_basis(&a).dim(), kernel_basis(&b).dim());
    }

    #[test]
    fn complement_completes_the_subspace(
        sub in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..4),
    ) {
        let to_q = |v: &Vec<i64>| v.iter().map(|&x| q(x)).collect::<Vec<_>>();
        let s = SubspaceBasis::span_of(4, &sub.iter().map(to_q).collect::<Vec<_>>()).unwrap();
        let quot = quotient_basis(&s, &SubspaceBasis::full(4)).unwrap();
        prop_assert_eq!(s.dim() + quot.dim(), 4);
        let mut all = s.vectors().to_vec();
        all.extend(quot.vectors().iter().cloned());
        let joined = SubspaceBasis::span_of(4, &all).unwrap();
        prop_assert_eq!(joined.dim(), 4);
    }
}

#[test]
fn identity_has_full_rank() {
    let m = RationalMatrix::identity(5);
    assert_eq!(rank(&m), 5);
    assert!(m.get(2, 2).is_one());
}
