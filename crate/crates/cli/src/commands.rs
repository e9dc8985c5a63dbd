//! Subcommand implementations. Each returns its report and an exit code.

use anyhow::{bail, Result};
use serde_json::{json, Value};
use trace_products_core::applications::{
    irreducible_with_prescribed, pn_trace_square_sweep, trace_semifield_bound_check, DEFAULT_SEMIFIELD_BUDGET,
};
use trace_products_core::curves::{count_club_curve, count_product_curve, CountReport, CurveKind};
use trace_products_core::linear_sets::{club_meet_check, disjoint_clubs_exist, LinearizedPoly};
use trace_products_core::trace_sets::{decide, element_with_trace, survey, DivergenceKind, SurveyMethod};
use trace_products_core::{Elem, Error, TowerCtx};

use crate::encoding::{build_tower, format_element, parse_element, parse_scalar};
use crate::output::{Format, Output};
use crate::suites::{run_suite, SuiteOptions, DEFAULT_MEET_BUDGET, SUITES};

/// Flags shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: String,
    pub field: Option<String>,
    pub tower_tag: Option<String>,
    pub seed: u64,
    pub budget: Option<u64>,
    pub format: Format,
}

/// Exit codes: 0 success or member, 1 failure or non-member, 2 error.
pub struct Outcome {
    pub output: Output,
    pub exit: u8,
}

impl RunConfig {
    fn tower(&self, q: u64, n: u32) -> Result<TowerCtx> {
        build_tower(q, n, self.field.as_deref(), self.tower_tag.as_deref())
    }

    fn echo(&self, tower: Option<&TowerCtx>) -> Value {
        let mut v = json!({
            "command": self.command,
            "seed": self.seed,
            "budget": self.budget,
        });
        if let Some(t) = tower {
            v["q"] = json!(t.q());
            v["n"] = json!(t.n());
            v["minpoly"] = json!(t.minpoly());
            v["tower_tag"] = json!(t.tag().name());
        }
        v
    }
}

fn done(report: Value, rows: Option<Vec<Value>>, exit: u8) -> Outcome {
    Outcome { output: Output { report, rows }, exit }
}

fn divergence_json(t: &TowerCtx, kind: &DivergenceKind) -> Value {
    match kind {
        DivergenceKind::WitnessFailed { label, x, y, trace_x, trace_y, product } => json!({
            "kind": "witness-failed", "label": label, "x": format_element(t, *x), "y": format_element(t, *y),
            "trace_x": trace_x, "trace_y": trace_y, "product": format_element(t, *product),
        }),
        DivergenceKind::VerdictMismatch { claimed } => json!({"kind": "verdict-mismatch", "claimed": claimed}),
        DivergenceKind::Uncovered { label } => json!({"kind": "uncovered", "label": label}),
    }
}

pub fn solve(cfg: &RunConfig, q: u64, n: u32, a: &str, b: &str, beta: &str) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let (a, b) = (parse_scalar(t.base(), a)?, parse_scalar(t.base(), b)?);
    let beta = parse_element(&t, beta)?;
    let v = decide(&t, a, b, beta)?;
    let certificate = v.certificate.map(|c| {
        json!({"x": format_element(&t, c.x()), "y": format_element(&t, c.y()), "source": match c.provenance() {
            trace_products_core::trace_sets::Provenance::Oracle => "oracle".to_string(),
            trace_products_core::trace_sets::Provenance::ClosedForm(c) => c.id().to_string(),
        }})
    });
    let report = json!({
        "config": cfg.echo(Some(&t)),
        "a": a,
        "b": b,
        "beta": format_element(&t, beta),
        "member": v.member,
        "criterion": v.criterion.id(),
        "certificate": certificate,
        "divergences": v.divergences.iter().map(|d| divergence_json(&t, &d.kind)).collect::<Vec<_>>(),
    });
    Ok(done(report, None, if v.member { 0 } else { 1 }))
}

pub fn survey_cmd(cfg: &RunConfig, q: u64, n: u32, a: &str, b: &str, method: SurveyMethod) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let (a, b) = (parse_scalar(t.base(), a)?, parse_scalar(t.base(), b)?);
    let s = survey(&t, a, b, method)?;
    let rows: Vec<Value> = s
        .rows
        .iter()
        .map(|r| json!({"beta": format_element(&t, r.beta), "member": r.member, "criterion": r.criterion.id()}))
        .collect();
    let non_members: Vec<String> = s.non_members().iter().map(|&x| format_element(&t, x)).collect();
    let report = json!({
        "config": cfg.echo(Some(&t)),
        "a": a,
        "b": b,
        "method": match method { SurveyMethod::Oracle => "oracle", SurveyMethod::ClosedForm => "closed-form" },
        "members": s.members(),
        "non_members": non_members,
        "divergences": s.divergences.len(),
        "rows": rows,
    });
    Ok(done(report, Some(rows), 0))
}

pub fn verify(cfg: &RunConfig, suite: &str) -> Result<Outcome> {
    let opts = SuiteOptions { seed: cfg.seed, budget: cfg.budget };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        match run_suite(name, &opts) {
            Some(r) => reports.push(r),
            None => bail!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", ")),
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    let rows: Vec<Value> = reports
        .iter()
        .flat_map(|r| {
            r.claims.iter().map(|c| {
                json!({"suite": r.suite, "claim": c.id, "asserted": c.asserted, "passed": c.passed, "description": c.description})
            })
        })
        .collect();
    let report = json!({"config": cfg.echo(None), "passed": passed, "suites": reports});
    Ok(done(report, Some(rows), if passed { 0 } else { 1 }))
}

fn count_json(t: &TowerCtx, r: &CountReport) -> Value {
    let kind = match &r.kind {
        CurveKind::Product { alpha, beta_a, beta_b } => json!({
            "curve": "product", "alpha": format_element(t, *alpha),
            "beta_a": format_element(t, *beta_a), "beta_b": format_element(t, *beta_b),
        }),
        CurveKind::Club { f, beta1 } => json!({
            "curve": "club", "f": f.coeffs().iter().map(|&c| format_element(t, c)).collect::<Vec<_>>(),
            "beta1": format_element(t, *beta1),
        }),
    };
    json!({
        "q": r.q, "n": r.n, "kind": kind, "genus": r.genus, "N": r.affine_count, "pole_count": r.pole_count,
        "bounds": [r.hw_lower, r.hw_upper], "slack": r.slack, "within_bound": r.within_bound,
    })
}

pub fn curve_product(cfg: &RunConfig, q: u64, n: u32, alpha: &str, a: &str, b: &str) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let alpha = parse_element(&t, alpha)?;
    let (a, b) = (parse_scalar(t.base(), a)?, parse_scalar(t.base(), b)?);
    let r = count_product_curve(&t, alpha, element_with_trace(&t, a), element_with_trace(&t, b))?;
    let mut report = count_json(&t, &r);
    report["config"] = cfg.echo(Some(&t));
    report["a"] = json!(a);
    report["b"] = json!(b);
    Ok(done(report, None, 0))
}

pub fn curve_club(cfg: &RunConfig, q: u64, n: u32, coeffs: &[String], beta1: Option<&str>) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let coeffs = coeffs.iter().map(|c| parse_element(&t, c)).collect::<Result<Vec<Elem>>>()?;
    let beta1 = match beta1 {
        Some(s) => parse_element(&t, s)?,
        None => element_with_trace(&t, 1),
    };
    let r = count_club_curve(&t, &LinearizedPoly::new(&coeffs), beta1)?;
    let mut report = count_json(&t, &r);
    report["config"] = cfg.echo(Some(&t));
    Ok(done(report, None, 0))
}

pub fn clubs(cfg: &RunConfig, q: u64, n: u32, meet_degree: Option<u32>) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let r = disjoint_clubs_exist(&t)?;
    let mut report = json!({
        "config": cfg.echo(Some(&t)),
        "q": r.q,
        "n": r.n,
        "exists": r.exists,
        "witness_alpha": r.witness.map(|w| format_element(&t, w)),
        "witness_verified": r.witness_verified,
        "non_members": r.non_members,
        "mismatches": r.mismatches.iter().map(|&x| format_element(&t, x)).collect::<Vec<_>>(),
    });
    if let Some(d) = meet_degree {
        let m = club_meet_check(&t, d, cfg.budget.unwrap_or(DEFAULT_MEET_BUDGET), cfg.seed)?;
        report["meet"] = json!({
            "d_max": m.d_max,
            "domain": format!("{:?}", m.domain),
            "checked": m.checked,
            "violations": m.violations.iter().map(|f| f.iter().map(|&c| format_element(&t, c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "curve_mismatches": m.curve_mismatches,
            "degree_zero": {"checked": m.degree_zero.checked, "meets": m.degree_zero.meets, "disagreements": m.degree_zero.disagreements},
        });
    }
    Ok(done(report, None, 0))
}

pub fn pn(cfg: &RunConfig, q: u64, n: u32) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let r = pn_trace_square_sweep(&t);
    let enc = |v: &[Elem]| v.iter().map(|&x| format_element(&t, x)).collect::<Vec<_>>();
    let report = json!({
        "config": cfg.echo(Some(&t)),
        "planar": enc(&r.planar),
        "criterion_planar": enc(&r.criterion_planar),
        "equivalence_checked": r.equivalence_checked,
        "mismatches": enc(&r.mismatches),
        "second_family_planar": enc(&r.second_family_planar),
        "factorizations_checked": r.factorizations_checked,
        "factorization_failures": r.factorization_failures,
    });
    let ok = r.mismatches.is_empty() && r.factorization_failures == 0;
    Ok(done(report, None, if ok { 0 } else { 1 }))
}

pub fn semifield(cfg: &RunConfig, q: u64, n: u32, direct_limit: u64) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let r = trace_semifield_bound_check(&t, cfg.budget.unwrap_or(DEFAULT_SEMIFIELD_BUDGET), cfg.seed, direct_limit)?;
    let report = json!({
        "config": cfg.echo(Some(&t)),
        "d": r.d,
        "domain": format!("{:?}", r.domain),
        "checked": r.checked,
        "counterexamples": r.counterexamples.iter().map(|f| f.iter().map(|&c| format_element(&t, c)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "direct_checked": r.direct_checked,
        "route_disagreements": r.route_disagreements,
        "degenerate": {
            "zero_map_presemifield": r.degenerate.zero_map_presemifield,
            "degree_zero_checked": r.degenerate.degree_zero_checked,
            "degree_zero_presemifields": r.degenerate.degree_zero_presemifields,
            "degree_zero_disagreements": r.degenerate.degree_zero_disagreements,
        },
    });
    let ok = r.counterexamples.is_empty() && r.route_disagreements == 0;
    Ok(done(report, None, if ok { 0 } else { 1 }))
}

pub fn prescribe(cfg: &RunConfig, q: u64, n: u32, a: &str, b: &str) -> Result<Outcome> {
    let t = cfg.tower(q, n)?;
    let (a, b) = (parse_scalar(t.base(), a)?, parse_scalar(t.base(), b)?);
    match irreducible_with_prescribed(&t, a, b) {
        Ok(r) => {
            let report = json!({
                "config": cfg.echo(Some(&t)),
                "q": r.q, "n": r.n, "a": r.a, "b": r.b,
                "guaranteed": r.guaranteed,
                "alpha": format_element(&t, r.alpha),
                "leading_order": r.leading_order,
                "constant_first": r.constant_first,
                "verified": r.verify(&t),
            });
            Ok(done(report, None, 0))
        }
        Err(Error::NoWitnessFound) => {
            let report = json!({"config": cfg.echo(Some(&t)), "a": a, "b": b, "found": false});
            Ok(done(report, None, 1))
        }
        Err(e) => Err(e.into()),
    }
}
