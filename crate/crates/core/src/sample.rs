//! Random Sullivan algebras for property suites.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cdga::{CdgaMorphism, Element, Generator, Monomial, SullivanAlgebra};
use crate::cohomology::CohomologyTable;
use crate::criteria::{formal_dimension, pure_ellipticity_certificate, top_window_vanishes};
use crate::linalg::{kernel_of_columns, q, Rational};

/// Bounds on generated algebras.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_even: usize,
    pub max_odd: usize,
    pub max_degree: u32,
    pub max_cutoff: u32,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_even: 3,
            max_odd: 4,
            max_degree: 8,
            max_cutoff: 24,
        }
    }
}

fn coefficient<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return Rational::from_integer(c.into());
        }
    }
}

fn even_degrees(max: u32) -> Vec<u32> {
    (2..=max).step_by(2).collect()
}

fn odd_degrees(max: u32) -> Vec<u32> {
    (3..=max).step_by(2).collect()
}

fn pick<R: Rng>(rng: &mut R, from: &[u32], n: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n)
        .map(|_| *from.choose(rng).expect("degrees"))
        .collect();
    v.sort_unstable();
    v
}

/// A pure algebra with random integer differentials on the odd generators,
/// cut off one window past its formal dimension. `None` when the shape
/// forces a negative formal dimension or a cutoff above the bound.
pub fn random_pure<R: Rng>(rng: &mut R, shape: &Shape) -> Option<SullivanAlgebra> {
    let n_even = rng.gen_range(0..=shape.max_even);
    let n_odd = rng.gen_range(n_even.max(1)..=shape.max_odd);
    let ev = pick(rng, &even_degrees(shape.max_degree), n_even);
    let od = pick(rng, &odd_degrees(shape.max_degree), n_odd);
    let mut gens: Vec<Generator> = ev
        .iter()
        .enumerate()
        .map(|(i, &d)| Generator::new(format!("x{}", i + 1), d))
        .collect();
    gens.extend(
        od.iter()
            .enumerate()
            .map(|(i, &d)| Generator::new(format!("y{}", i + 1), d)),
    );
    let free = SullivanAlgebra::free(gens.clone(), shape.max_degree + 1).ok()?;
    let mut diff = vec![Element::zero(); n_even];
    for &d in &od {
        let mut e = Element::zero();
        for m in free.basis_unchecked(d + 1) {
            if free.odd_length(&m) == 0 && rng.gen_bool(0.7) {
                e.add_term(m, coefficient(rng, 3));
            }
        }
        diff.push(e);
    }
    let fd = formal_dimension(&free);
    if fd < 0 {
        return None;
    }
    let cutoff = fd as u32 + free.max_generator_degree();
    if cutoff > shape.max_cutoff {
        return None;
    }
    SullivanAlgebra::new(gens, diff, cutoff).ok()
}

/// Draws until a pure algebra passes the top-window test, returning it
/// with its cohomology.
pub fn random_pure_elliptic<R: Rng>(
    rng: &mut R,
    shape: &Shape,
) -> (SullivanAlgebra, CohomologyTable) {
    loop {
        if let Some(a) = random_pure(rng, shape) {
            let t = CohomologyTable::compute(&a);
            if top_window_vanishes(&t) {
                return (a, t);
            }
        }
    }
}

/// Basis of the cocycles of `a` in `degree`, as elements.
fn cocycles(a: &SullivanAlgebra, degree: u32) -> Vec<Element> {
    let basis = a.basis_unchecked(degree);
    let target = a.basis_unchecked(degree + 1);
    let index: HashMap<Monomial, usize> = target
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let columns: Vec<_> = basis
        .iter()
        .map(|m| a.coordinates(&a.d_monomial(m), &index))
        .collect();
    kernel_of_columns(&columns)
        .iter()
        .map(|k| a.element_from_coordinates(&basis, k))
        .collect()
}

/// `(Q[W] ⊗ ΛV, d)` with `d = 0` on `W`, built one generator at a time in
/// degree order: each new `d v` is a random integer combination of the
/// cocycles of the algebra generated so far, so `d² = 0` holds by
/// construction. Returns the algebra, with `W` first, and `dim W`.
pub fn random_relative<R: Rng>(rng: &mut R, shape: &Shape) -> Option<(SullivanAlgebra, usize)> {
    let n_w = rng.gen_range(1..=2.min(shape.max_even.max(1)));
    let n_even = rng.gen_range(0..=shape.max_even.saturating_sub(n_w));
    let n_odd = rng.gen_range((n_w + n_even).min(shape.max_odd)..=shape.max_odd);
    let mut gens: Vec<Generator> = pick(rng, &even_degrees(shape.max_degree.min(4)), n_w)
        .into_iter()
        .enumerate()
        .map(|(i, d)| Generator::new(format!("w{}", i + 1), d))
        .collect();
    let mut rest: Vec<Generator> = pick(rng, &even_degrees(shape.max_degree), n_even)
        .into_iter()
        .enumerate()
        .map(|(i, d)| Generator::new(format!("x{}", i + 1), d))
        .collect();
    rest.extend(
        pick(rng, &odd_degrees(shape.max_degree), n_odd)
            .into_iter()
            .enumerate()
            .map(|(i, d)| Generator::new(format!("y{}", i + 1), d)),
    );
    rest.sort_by_key(|g| g.degree);
    let mut diff = vec![Element::zero(); n_w];
    for g in rest {
        let width = gens.len();
        let identity: Vec<usize> = (0..width).collect();
        let widened: Vec<Element> = diff.iter().map(|e| e.reindex(&identity, width)).collect();
        let so_far = SullivanAlgebra::new(gens.clone(), widened, g.degree + 1).ok()?;
        let z = cocycles(&so_far, g.degree + 1);
        let mut dv = Element::zero();
        for c in &z {
            if rng.gen_bool(0.6) {
                dv = dv.add(&c.scale(&coefficient(rng, 2)));
            }
        }
        gens.push(g);
        diff.push(dv);
    }
    let width = gens.len();
    let identity: Vec<usize> = (0..width).collect();
    let diff: Vec<Element> = diff.iter().map(|e| e.reindex(&identity, width)).collect();
    let probe = SullivanAlgebra::free(gens.clone(), 0).ok()?;
    let fd = formal_dimension(&probe);
    if fd < 0 {
        return None;
    }
    let cutoff = fd as u32 + probe.max_generator_degree();
    if cutoff > shape.max_cutoff {
        return None;
    }
    let a = SullivanAlgebra::new(gens, diff, cutoff).ok()?;
    // elliptic iff the associated pure algebra is
    matches!(
        pure_ellipticity_certificate(&a.associated_pure()),
        Ok(Some(_))
    )
    .then_some((a, n_w))
}

/// Adjoins `z` (even) and `u` (odd) with `dz = d(y_i y_j)` and
/// `du = z - y_i y_j` for odd generators `y_i`, `y_j`. This is the image
/// of a contractible pair under the automorphism `z ↦ z + y_i y_j`, so the
/// cohomology is unchanged while `d u` has a component of odd length two.
pub fn adjoin_twisted_pair(a: &SullivanAlgebra, i: usize, j: usize) -> Option<SullivanAlgebra> {
    let gens = a.generators();
    if i == j || !gens[i].is_odd() || !gens[j].is_odd() {
        return None;
    }
    let k = gens[i].degree + gens[j].degree;
    let n = a.num_generators();
    let wide = a.with_cutoff(a.cutoff().max(k + 1));
    let product = wide
        .multiply(&wide.generator_element(i), &wide.generator_element(j))
        .ok()?;
    let d_product = wide.apply_differential(&product).ok()?;
    let width = n + 2;
    let identity: Vec<usize> = (0..n).collect();
    let mut new_gens = gens.to_vec();
    new_gens.push(Generator::new("z", k));
    new_gens.push(Generator::new("u", k - 1));
    let mut diff: Vec<Element> = (0..n)
        .map(|g| a.d_generator(g).reindex(&identity, width))
        .collect();
    diff.push(d_product.reindex(&identity, width));
    let mut z = vec![0; width];
    z[n] = 1;
    let du = Element::from_monomial(Monomial(z), q(1)).sub(&product.reindex(&identity, width));
    diff.push(du);
    SullivanAlgebra::new(new_gens, diff, a.cutoff()).ok()
}

/// A pure elliptic algebra with a twisted pair adjoined on two random odd
/// generators. The result is never pure.
pub fn random_twisted<R: Rng>(rng: &mut R, shape: &Shape) -> SullivanAlgebra {
    loop {
        let (a, _) = random_pure_elliptic(rng, shape);
        let odd: Vec<usize> = a.odd_generators().collect();
        if odd.len() < 2 {
            continue;
        }
        let pair: Vec<&usize> = odd.choose_multiple(rng, 2).collect();
        if let Some(t) = adjoin_twisted_pair(&a, *pair[0], *pair[1]) {
            return t;
        }
    }
}

/// Indices of the even generators with `d = 0`.
pub fn closed_even_generators(a: &SullivanAlgebra) -> Vec<usize> {
    a.even_generators()
        .filter(|&i| a.d_generator(i).is_zero())
        .collect()
}

/// `Q[w] -> a` sending each listed generator to itself. The generators
/// must be closed even ones of `a`.
pub fn inclusion_of(a: &SullivanAlgebra, w: &[usize]) -> Option<CdgaMorphism> {
    let gens = w.iter().map(|&i| a.generators()[i].clone()).collect();
    let src = SullivanAlgebra::free(gens, a.cutoff()).ok()?;
    let assignment = w.iter().map(|&i| a.generator_element(i)).collect();
    CdgaMorphism::new(src, a.clone(), assignment).ok()
}
