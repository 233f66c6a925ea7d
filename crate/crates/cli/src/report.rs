//! Analyses run on a loaded document, and their text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sullivan_core::cohomology::{CohomologyTable, LowerGradedTable};
use sullivan_core::criteria::{
    almost_free_surjectivity, biquotient_surjectivity, cohomogeneity_one_surjectivity,
    euler_characteristic_relations, formal_dimension, h0_comparison, homogeneous_surjectivity,
    pure_ellipticity_certificate, pure_formality, stabilization_clauses, EulerReport,
    FormalityVerdict, H0Comparison, StabilizationClauses, SurjectivityVerdict,
};
use sullivan_core::ktheory::{
    integral_hypotheses_diagram, integral_hypotheses_homogeneous, k_dimensions_from_betti,
    no_integral_hypotheses, stabilization_report, stable_classes_from_betti, KDimensions,
    RationalKReport,
};
use sullivan_core::models::{
    borel_model_biquotient, borel_model_cohomogeneity_one, borel_model_homogeneous,
    quotient_base_inclusion,
};
use sullivan_core::SullivanAlgebra;

use crate::document::{Document, GeneratorSpec, Input, Loaded};
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelSummary {
    pub generators: Vec<GeneratorSpec>,
    pub differential: BTreeMap<String, String>,
    pub pure: bool,
    pub chi_pi: i64,
}

impl ModelSummary {
    pub fn of(a: &SullivanAlgebra) -> Self {
        ModelSummary {
            generators: a
                .generators()
                .iter()
                .map(|g| GeneratorSpec {
                    name: g.name.clone(),
                    degree: g.degree,
                })
                .collect(),
            differential: a
                .generators()
                .iter()
                .enumerate()
                .filter(|(i, _)| !a.d_generator(*i).is_zero())
                .map(|(i, g)| (g.name.clone(), a.format(a.d_generator(i))))
                .collect(),
            pure: a.is_pure(),
            chi_pi: a.homotopy_euler_characteristic(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelsOutput {
    pub input: Document,
    /// `space` is the model of the manifold or quotient, `borel` the
    /// source of the Borel map when there is one.
    pub models: BTreeMap<String, ModelSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologySummary {
    pub cutoff: u32,
    pub betti: Vec<usize>,
    pub euler_characteristic: i64,
    pub total_dimension: usize,
    pub top_degree: Option<u32>,
    pub formal_dimension: i64,
    /// Checked when the expected top degree lies within the cutoff.
    pub poincare_duality: Option<bool>,
    /// Cocycle representatives of a basis, per nonzero degree.
    pub representatives: BTreeMap<u32, Vec<String>>,
    /// `dim H_{n,i}` for pure models, keyed `"n,i"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_grading: Option<BTreeMap<String, usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KOutput {
    pub k_dimensions: KDimensions,
    pub infinite_stable_classes: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<RationalKReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub kind: String,
    pub input: Document,
    pub models: BTreeMap<String, ModelSummary>,
    pub cohomology: CohomologySummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<SurjectivityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0: Option<H0Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formality: Option<FormalityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler: Option<EulerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clauses: Option<StabilizationClauses>,
    pub k: KOutput,
    pub citations: Vec<String>,
    pub notes: Vec<String>,
}

/// Largest monomial basis in a single degree that the tool will reduce.
pub const BASIS_BUDGET: u64 = 250_000;

/// Refuses models whose bases through `cutoff + 1` exceed [`BASIS_BUDGET`],
/// counted from the Poincaré series of the free algebra.
fn check_budget(a: &SullivanAlgebra) -> Result<(), CliError> {
    let top = a.cutoff() as usize + 1;
    let mut series = vec![0u64; top + 1];
    series[0] = 1;
    for g in a.generators() {
        let d = g.degree as usize;
        if g.is_odd() {
            for k in (d..=top).rev() {
                series[k] = series[k].saturating_add(series[k - d]);
            }
        } else {
            for k in d..=top {
                series[k] = series[k].saturating_add(series[k - d]);
            }
        }
    }
    match series.iter().position(|&n| n > BASIS_BUDGET) {
        Some(n) => Err(CliError::Computation(format!(
            "degree {n} has more than {BASIS_BUDGET} basis monomials; lower the cutoff"
        ))),
        None => Ok(()),
    }
}

/// The space model, and the Borel source when the input has one.
pub fn models(l: &Loaded) -> Result<(SullivanAlgebra, Option<SullivanAlgebra>), CliError> {
    let (space, borel) = build(l)?;
    check_budget(&space)?;
    if let Some(b) = &borel {
        check_budget(b)?;
    }
    Ok((space, borel))
}

fn build(l: &Loaded) -> Result<(SullivanAlgebra, Option<SullivanAlgebra>), CliError> {
    let c = l.cutoff;
    Ok(match &l.input {
        Input::Algebra(a) => (a.clone(), None),
        Input::Homogeneous { g, h, rho } => {
            let (src, f) = borel_model_homogeneous(g, h, rho, c)?;
            (f.target().clone(), Some(src))
        }
        Input::Biquotient { g, h, left, right } => {
            let (src, f) = borel_model_biquotient(g, h, left, right, c)?;
            (f.target().clone(), Some(src))
        }
        Input::Coho1(d) => {
            let (src, f) = borel_model_cohomogeneity_one(d, c)?;
            (f.target().clone(), Some(src))
        }
        Input::AlmostFree { x, g, model, .. } => {
            let f = quotient_base_inclusion(x, g, model)?;
            (model.clone(), Some(f.source().clone()))
        }
    })
}

pub fn build_models(l: &Loaded) -> Result<ModelsOutput, CliError> {
    let (space, borel) = models(l)?;
    let mut out = BTreeMap::from([("space".to_string(), ModelSummary::of(&space))]);
    if let Some(b) = borel {
        out.insert("borel".into(), ModelSummary::of(&b));
    }
    Ok(ModelsOutput {
        input: l.document.clone(),
        models: out,
    })
}

/// Degree in which the space should satisfy Poincaré duality.
fn expected_top(l: &Loaded, space: &SullivanAlgebra) -> i64 {
    match &l.input {
        Input::Homogeneous { g, h, .. } | Input::Biquotient { g, h, .. } => {
            g.dimension as i64 - h.dimension as i64
        }
        Input::Coho1(d) => d.manifold_dimension() as i64,
        Input::Algebra(_) | Input::AlmostFree { .. } => formal_dimension(space),
    }
}

pub fn summarize(t: &CohomologyTable, fd: i64) -> Result<CohomologySummary, CliError> {
    let a = t.algebra();
    let mut representatives = BTreeMap::new();
    for n in 0..=t.cutoff() {
        let b = t.betti(n)?;
        if b > 0 {
            let reps = (0..b)
                .map(|i| t.representative(n, i).map(|e| a.format(&e)))
                .collect::<Result<Vec<_>, _>>()?;
            representatives.insert(n, reps);
        }
    }
    let poincare_duality = if fd >= 0 && fd as u32 <= t.cutoff() {
        Some(t.poincare_duality_holds(fd as u32)?)
    } else {
        None
    };
    let lower_grading = if a.is_pure() {
        let lg = LowerGradedTable::compute(a)?;
        Some(
            lg.dims
                .iter()
                .filter(|(_, &v)| v > 0)
                .map(|((n, i), v)| (format!("{n},{i}"), *v))
                .collect(),
        )
    } else {
        None
    };
    Ok(CohomologySummary {
        cutoff: t.cutoff(),
        betti: t.betti_numbers(),
        euler_characteristic: t.euler_characteristic(),
        total_dimension: t.total_dimension(),
        top_degree: t.top_degree(),
        formal_dimension: fd,
        poincare_duality,
        representatives,
        lower_grading,
    })
}

pub fn cohomology(l: &Loaded) -> Result<CohomologySummary, CliError> {
    let (space, _) = models(l)?;
    let t = CohomologyTable::compute(&space);
    summarize(&t, expected_top(l, &space))
}

fn verdict(l: &Loaded) -> Result<Option<SurjectivityVerdict>, CliError> {
    let c = Some(l.cutoff);
    Ok(match &l.input {
        Input::Algebra(_) => None,
        Input::Homogeneous { g, h, rho } => Some(homogeneous_surjectivity(g, h, rho, c)?),
        Input::Biquotient { g, h, left, right } => {
            Some(biquotient_surjectivity(g, h, left, right, c)?)
        }
        Input::Coho1(d) => Some(cohomogeneity_one_surjectivity(d, c)?),
        Input::AlmostFree { x, g, model, .. } => Some(almost_free_surjectivity(x, g, model)?),
    })
}

/// `H_0` and formality on a copy of a pure model whose cutoff covers the
/// certified top degree and one window beyond it.
fn pure_checks(
    space: &SullivanAlgebra,
    notes: &mut Vec<String>,
) -> (Option<H0Comparison>, Option<FormalityVerdict>) {
    if !space.is_pure() {
        notes.push("H_0 and formality checks apply to pure models only".into());
        return (None, None);
    }
    let w = space.max_generator_degree().max(1);
    let fd = formal_dimension(space).max(0) as u32;
    let wide = space.with_cutoff(space.cutoff().max(fd) + w);
    match pure_ellipticity_certificate(&wide) {
        Ok(Some(_)) => {}
        Ok(None) => {
            notes.push("model is not elliptic; H_0 and formality checks skipped".into());
            return (None, None);
        }
        Err(e) => {
            notes.push(format!("ellipticity check failed: {e}"));
            return (None, None);
        }
    }
    let t = CohomologyTable::compute(&wide);
    let h0 = match h0_comparison(&t) {
        Ok(v) => Some(v),
        Err(e) => {
            notes.push(format!("H_0 comparison failed: {e}"));
            None
        }
    };
    let formality = match pure_formality(&wide) {
        Ok(v) => Some(v),
        Err(e) => {
            notes.push(format!("formality check failed: {e}"));
            None
        }
    };
    (h0, formality)
}

pub fn analyze(l: &Loaded) -> Result<Report, CliError> {
    let (space, borel) = models(l)?;
    let mut model_map = BTreeMap::from([("space".to_string(), ModelSummary::of(&space))]);
    if let Some(b) = &borel {
        model_map.insert("borel".into(), ModelSummary::of(b));
    }
    let table = CohomologyTable::compute(&space);
    let fd = expected_top(l, &space);
    let cohomology = summarize(&table, fd)?;
    let mut notes = Vec::new();
    let verdict = verdict(l)?;
    if let Some(v) = &verdict {
        if let Some(d) = &v.diagnostic {
            notes.push(d.clone());
        }
        if !v.hypotheses_hold {
            notes.push(
                "hypotheses of the rank criterion do not hold; the rank side is informational"
                    .into(),
            );
        }
        if fd >= 0 && v.checked_through < fd as u32 {
            notes.push(format!(
                "surjectivity checked through degree {} only, below the top degree {fd}",
                v.checked_through
            ));
        }
    }
    if matches!(l.input, Input::Biquotient { .. }) {
        notes.push("freeness of the two-sided action is assumed, not checked".into());
    }
    let (h0, formality) = pure_checks(&space, &mut notes);
    let (euler, clauses) = match &l.input {
        Input::Coho1(d) => (
            Some(euler_characteristic_relations(
                d,
                Some(l.cutoff.max(d.default_cutoff())),
            )?),
            Some(stabilization_clauses(d)),
        ),
        _ => (None, None),
    };
    let integral = match &l.input {
        Input::Homogeneous { g, h, .. } => integral_hypotheses_homogeneous(g, h),
        Input::Coho1(d) => integral_hypotheses_diagram(d),
        _ => no_integral_hypotheses(),
    };
    let betti = table.betti_numbers();
    let k_report = verdict
        .as_ref()
        .map(|v| stabilization_report(&table, v, &integral));
    if k_report.is_some() {
        notes.push(
            "the integers q and k of the stabilization statements are only shown to exist".into(),
        );
    }
    let k = KOutput {
        k_dimensions: k_dimensions_from_betti(&betti),
        infinite_stable_classes: stable_classes_from_betti(&betti),
        report: k_report,
    };
    let mut citations: Vec<String> = Vec::new();
    if let Some(v) = &verdict {
        citations.push(v.citation.clone());
    }
    if let Some(h) = &h0 {
        citations.push(h.citation.clone());
    }
    if let Some(f) = &formality {
        citations.push(f.citation.clone());
    }
    if let Some(e) = &euler {
        citations.extend(e.citations.iter().cloned());
    }
    if let Some(r) = &k.report {
        citations.extend(r.citations.iter().cloned());
    }
    citations.retain(|c| !c.is_empty());
    citations.sort();
    citations.dedup();
    Ok(Report {
        kind: l.document.kind().to_string(),
        input: l.document.clone(),
        models: model_map,
        cohomology,
        verdict,
        h0,
        formality,
        euler,
        clauses,
        k,
        citations,
        notes,
    })
}

/// K-theory from a document; the stabilization part needs a group action.
pub fn ktheory(l: &Loaded) -> Result<KOutput, CliError> {
    Ok(analyze(l)?.k)
}

pub fn ktheory_from_betti(betti: &[usize]) -> KOutput {
    KOutput {
        k_dimensions: k_dimensions_from_betti(betti),
        infinite_stable_classes: stable_classes_from_betti(betti),
        report: None,
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn render_model(out: &mut String, label: &str, m: &ModelSummary) {
    let gens: Vec<String> = m
        .generators
        .iter()
        .map(|g| format!("{}({})", g.name, g.degree))
        .collect();
    let _ = writeln!(out, "{label}: generators {}", join(&gens, " "));
    for (g, d) in &m.differential {
        let _ = writeln!(out, "  d {g} = {d}");
    }
    let _ = writeln!(out, "  pure: {}, chi_pi: {}", m.pure, m.chi_pi);
}

pub fn render_models(m: &ModelsOutput) -> String {
    let mut out = String::new();
    for (label, s) in &m.models {
        render_model(&mut out, label, s);
    }
    out
}

pub fn render_cohomology(c: &CohomologySummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cutoff: {}", c.cutoff);
    let _ = writeln!(out, "betti: {}", join(&c.betti, " "));
    let _ = writeln!(out, "euler characteristic: {}", c.euler_characteristic);
    let _ = writeln!(out, "total dimension: {}", c.total_dimension);
    if let Some(p) = c.poincare_duality {
        let _ = writeln!(
            out,
            "poincare duality in degree {}: {p}",
            c.formal_dimension
        );
    }
    for (n, reps) in &c.representatives {
        let _ = writeln!(out, "  H^{n}: {}", join(reps, ", "));
    }
    out
}

pub fn render_k(k: &KOutput) -> String {
    let mut out = String::new();
    let d = &k.k_dimensions;
    let _ = writeln!(
        out,
        "K^0 ⊗ Q: {}, K^1 ⊗ Q: {}, KO ⊗ Q: {}",
        d.k0_dim, d.k1_dim, d.ko_dim
    );
    let _ = writeln!(
        out,
        "infinitely many stable classes: {}",
        k.infinite_stable_classes
    );
    if let Some(r) = &k.report {
        let _ = writeln!(
            out,
            "forgetful maps onto: even {}, odd {}",
            r.forgetful_even_surjective, r.forgetful_odd_surjective
        );
        let _ = writeln!(out, "stabilization: {:?}", r.stabilization_conclusion);
    }
    out
}

pub fn render_report(r: &Report) -> String {
    let mut out = format!("kind: {}\n", r.kind);
    for (label, m) in &r.models {
        render_model(&mut out, label, m);
    }
    out += &render_cohomology(&r.cohomology);
    if let Some(v) = &r.verdict {
        let _ = writeln!(
            out,
            "verdict: rank criterion {}, direct check {} (through degree {}), odd degrees {}",
            v.rank_criterion, v.direct_check, v.checked_through, v.odd_direct_check
        );
        let _ = writeln!(out, "  rank gap {}, chi_pi {}", v.rank_gap, v.chi_pi);
        if !v.failing_degrees.is_empty() {
            let _ = writeln!(out, "  fails in degrees {}", join(&v.failing_degrees, " "));
        }
    }
    if let Some(h) = &r.h0 {
        let _ = writeln!(
            out,
            "H_0 = H^even: {} (chi_pi {} <= 1: {})",
            h.h0_equals_heven, h.chi_pi, h.chi_pi_at_most_one
        );
    }
    if let Some(f) = &r.formality {
        let _ = writeln!(
            out,
            "formal: {} (mu {}, even generators {}, split spheres {})",
            f.formal, f.minimal_generators_mu, f.even_generators, f.split_k
        );
    }
    if let Some(e) = &r.euler {
        let _ = writeln!(
            out,
            "euler: chi(M) {} = {} + {} - {}: {}",
            e.chi_m, e.chi_g_k_minus, e.chi_g_k_plus, e.chi_g_h, e.identity_holds
        );
    }
    if let Some(c) = &r.clauses {
        let _ = writeln!(
            out,
            "stabilization clauses: integral {}, rational {}",
            c.integral_clause, c.rational_clause
        );
    }
    out += &render_k(&r.k);
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    for c in &r.citations {
        let _ = writeln!(out, "see: {c}");
    }
    out
}
