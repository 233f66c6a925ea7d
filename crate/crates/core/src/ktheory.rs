//! Rational K-theory read off from cohomology through the Chern character.

use serde::Serialize;

use crate::cohomology::CohomologyTable;
use crate::criteria::{cite, SurjectivityVerdict};
use crate::models::{GroupData, GroupDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KDimensions {
    pub k0_dim: usize,
    pub k1_dim: usize,
    pub ko_dim: usize,
}

/// `K^0 ⊗ Q`, `K^1 ⊗ Q` and `KO ⊗ Q` dimensions from Betti numbers.
pub fn rational_k_dimensions(t: &CohomologyTable) -> KDimensions {
    k_dimensions_from_betti(&t.betti_numbers())
}

pub fn k_dimensions_from_betti(betti: &[usize]) -> KDimensions {
    let sum = |f: &dyn Fn(usize) -> bool| -> usize {
        betti
            .iter()
            .enumerate()
            .filter(|(n, _)| f(*n))
            .map(|(_, &b)| b)
            .sum()
    };
    KDimensions {
        k0_dim: sum(&|n| n % 2 == 0),
        k1_dim: sum(&|n| n % 2 == 1),
        ko_dim: sum(&|n| n % 4 == 0),
    }
}

/// Some `H^{4i}` with `i > 0` is nonzero.
pub fn stable_class_infinitude(t: &CohomologyTable) -> bool {
    stable_classes_from_betti(&t.betti_numbers())
}

pub fn stable_classes_from_betti(betti: &[usize]) -> bool {
    betti
        .iter()
        .enumerate()
        .any(|(n, &b)| n > 0 && n % 4 == 0 && b > 0)
}

/// Rational forgetful maps `K^0_G -> K^0` and `K^1_G -> K^1` are onto iff
/// the Borel maps are onto in even and odd degrees respectively.
pub fn forgetful_surjectivity_translation(v: &SurjectivityVerdict) -> (bool, bool) {
    (v.direct_check, v.odd_direct_check)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilizationConclusion {
    /// `E ⊕ C^k` is a G-bundle for every complex bundle `E`.
    IntegralFromFlags,
    /// `qE ⊕ R^k` comes from a G-bundle for every real bundle `E`.
    RationalQAndK,
    None,
}

/// Whether the integral surjectivity results apply, by flags and ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralHypotheses {
    pub holds: bool,
    pub citation: String,
}

/// Carlson's conditions for a cohomogeneity-one diagram.
pub fn integral_hypotheses_diagram(d: &GroupDiagram) -> IntegralHypotheses {
    let connected = [&d.g, &d.h, &d.k_minus, &d.k_plus]
        .iter()
        .all(|g| g.flags.connected);
    let holds = connected
        && d.g.flags.pi1_torsion_free
        && d.k_minus.flags.steinberg
        && d.k_plus.flags.steinberg
        && d.g.rank == d.k_minus.rank.max(d.k_plus.rank);
    IntegralHypotheses {
        holds,
        citation: cite::CARLSON.to_string(),
    }
}

/// Pittie's conditions for `G/H`.
pub fn integral_hypotheses_homogeneous(g: &GroupData, h: &GroupData) -> IntegralHypotheses {
    IntegralHypotheses {
        holds: g.flags.connected
            && g.flags.pi1_torsion_free
            && h.flags.connected
            && g.rank == h.rank,
        citation: cite::PITTIE.to_string(),
    }
}

/// Hypotheses that never apply (biquotients, almost free quotients).
pub fn no_integral_hypotheses() -> IntegralHypotheses {
    IntegralHypotheses {
        holds: false,
        citation: String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalKReport {
    pub k0_dim: usize,
    pub k1_dim: usize,
    pub ko_dim: usize,
    pub forgetful_even_surjective: bool,
    pub forgetful_odd_surjective: bool,
    pub infinite_stable_classes: bool,
    pub stabilization_conclusion: StabilizationConclusion,
    /// The integers `q`, `k` are only known to exist.
    pub citations: Vec<String>,
}

pub fn stabilization_report(
    t: &CohomologyTable,
    verdict: &SurjectivityVerdict,
    integral: &IntegralHypotheses,
) -> RationalKReport {
    let dims = rational_k_dimensions(t);
    let (even, odd) = forgetful_surjectivity_translation(verdict);
    let stable = stable_class_infinitude(t);
    let mut citations = vec![
        cite::CHERN_CHARACTER.to_string(),
        cite::FORGETFUL_TRANSLATION.to_string(),
        cite::REALIFICATION.to_string(),
    ];
    if stable {
        citations.push(cite::STABLE_CLASSES.to_string());
    }
    let conclusion = if integral.holds {
        citations.push(integral.citation.clone());
        citations.push(cite::INTEGRAL_STABILIZATION.to_string());
        StabilizationConclusion::IntegralFromFlags
    } else if even {
        citations.push(verdict.citation.clone());
        citations.push(cite::RATIONAL_STABILIZATION.to_string());
        StabilizationConclusion::RationalQAndK
    } else {
        StabilizationConclusion::None
    };
    RationalKReport {
        k0_dim: dims.k0_dim,
        k1_dim: dims.k1_dim,
        ko_dim: dims.ko_dim,
        forgetful_even_surjective: even,
        forgetful_odd_surjective: odd,
        infinite_stable_classes: stable,
        stabilization_conclusion: conclusion,
        citations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_examples() {
        // G2/SO(4): rational Betti numbers 1, 0, 0, 0, 1, 0, 0, 0, 1
        let g2so4 = [1, 0, 0, 0, 1, 0, 0, 0, 1];
        assert_eq!(
            k_dimensions_from_betti(&g2so4),
            KDimensions {
                k0_dim: 3,
                k1_dim: 0,
                ko_dim: 3
            }
        );
        assert!(stable_classes_from_betti(&g2so4));
        let s2 = [1, 0, 1];
        assert_eq!(
            k_dimensions_from_betti(&s2),
            KDimensions {
                k0_dim: 2,
                k1_dim: 0,
                ko_dim: 1
            }
        );
        assert!(!stable_classes_from_betti(&s2));
        assert_eq!(
            k_dimensions_from_betti(&[1, 0, 0, 1]),
            KDimensions {
                k0_dim: 1,
                k1_dim: 1,
                ko_dim: 1
            }
        );
    }
}
