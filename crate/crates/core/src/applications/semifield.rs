use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Result;
use crate::field::{Elem, TowerCtx};
use crate::linear_sets::{CoefficientDomain, LinearMap, LinearizedPoly, SAMPLE_COUNT};

/// Exhaustive sweeps are used up to this many coefficient vectors.
pub const DEFAULT_SEMIFIELD_BUDGET: u64 = 1 << 20;

/// Whether L₁(x)L₂(y) − xy ≠ 0 for all x, y ≠ 0, scanning rows x first.
pub fn is_presemifield(tower: &TowerCtx, l1: &LinearMap, l2: &LinearMap) -> bool {
    let l2_table: Vec<Elem> = (1..tower.size()).map(|y| l2.eval(tower, y)).collect();
    (1..tower.size()).all(|x| {
        let lx = l1.eval(tower, x);
        (1..tower.size()).zip(&l2_table).all(|(y, &ly)| tower.mul(lx, ly) != tower.mul(x, y))
    })
}

/// [`is_presemifield`] scanning columns y first.
pub fn is_presemifield_by_columns(tower: &TowerCtx, l1: &LinearMap, l2: &LinearMap) -> bool {
    let l1_table: Vec<Elem> = (1..tower.size()).map(|x| l1.eval(tower, x)).collect();
    (1..tower.size()).all(|y| {
        let ly = l2.eval(tower, y);
        (1..tower.size()).zip(&l1_table).all(|(x, &lx)| tower.mul(lx, ly) != tower.mul(x, y))
    })
}

/// With L₁ = Tr, x∘y = 0 has a solution iff Tr(L₂(y)/y) = 1 for some y ≠ 0.
fn trace_form_presemifield(tower: &TowerCtx, l2: &LinearizedPoly) -> bool {
    (1..tower.size()).all(|y| tower.trace(tower.div(l2.eval(tower, y), y).expect("nonzero")) != 1)
}

/// L₂ of q-degree ≤ 0, outside the bound statement.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegenerateSummary {
    /// L₂ = 0 gives x∘y = −xy.
    pub zero_map_presemifield: bool,
    pub degree_zero_checked: u64,
    pub degree_zero_presemifields: u64,
    /// c₀ where the result disagrees with Tr(c₀) ≠ 1.
    pub degree_zero_disagreements: u64,
}

/// Search for presemifields Tr(x)L₂(y) − xy with L₂ of small q-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemifieldReport {
    pub q: u32,
    pub n: u32,
    /// Largest q-degree d = ⌈n/2⌉ − 2 below n/2 − 1.
    pub d: u32,
    pub domain: CoefficientDomain,
    /// L₂ of q-degree 1..=d that were tested.
    pub checked: u64,
    /// Coefficients of L₂ giving a presemifield.
    pub counterexamples: Vec<Vec<Elem>>,
    /// L₂ also decided by the full double loop in both scan orders.
    pub direct_checked: u64,
    /// L₂ where the trace test, row scan or column scan disagree.
    pub route_disagreements: u64,
    pub degenerate: DegenerateSummary,
}

/// Sweeps L₂ of q-degree ≤ ⌈n/2⌉ − 2, exhaustively when q^{n(d+1)} ≤ `budget`
/// and otherwise over a seeded sample. The first `direct_limit` polynomials
/// are also decided by the double loop.
pub fn trace_semifield_bound_check(tower: &TowerCtx, budget: u64, seed: u64, direct_limit: u64) -> Result<SemifieldReport> {
    let n = tower.n();
    let d = n.div_ceil(2).saturating_sub(2);
    let size = tower.size() as u64;
    let len = d as usize + 1;
    let space = (size as u128).pow(len as u32);
    let trace = LinearMap::ScaledTrace(1);
    let zero = LinearMap::Poly(LinearizedPoly::new(&[]));
    let mut report = SemifieldReport {
        q: tower.q(),
        n,
        d,
        domain: CoefficientDomain::Exhaustive,
        checked: 0,
        counterexamples: Vec::new(),
        direct_checked: 0,
        route_disagreements: 0,
        degenerate: DegenerateSummary {
            zero_map_presemifield: is_presemifield(tower, &trace, &zero)
                && is_presemifield_by_columns(tower, &trace, &zero),
            ..DegenerateSummary::default()
        },
    };
    let visit = |coeffs: &[Elem], report: &mut SemifieldReport| {
        let l2 = LinearizedPoly::new(coeffs);
        let Some(deg) = l2.q_degree() else { return };
        let fast = trace_form_presemifield(tower, &l2);
        let seen = report.checked + report.degenerate.degree_zero_checked;
        if seen < direct_limit {
            let map = LinearMap::Poly(l2.clone());
            report.direct_checked += 1;
            let rows = is_presemifield(tower, &trace, &map);
            let cols = is_presemifield_by_columns(tower, &trace, &map);
            if rows != fast || cols != fast {
                report.route_disagreements += 1;
            }
        }
        if deg == 0 {
            let dz = &mut report.degenerate;
            dz.degree_zero_checked += 1;
            dz.degree_zero_presemifields += fast as u64;
            if fast != (tower.trace(coeffs[0]) != 1) {
                dz.degree_zero_disagreements += 1;
            }
        } else {
            report.checked += 1;
            if fast {
                report.counterexamples.push(l2.coeffs().to_vec());
            }
        }
    };
    let mut coeffs = alloc::vec![0 as Elem; len];
    if space <= budget as u128 {
        for k in 0..space as u64 {
            let mut r = k;
            for c in coeffs.iter_mut() {
                *c = (r % size) as Elem;
                r /= size;
            }
            visit(&coeffs, &mut report);
        }
    } else {
        let samples = SAMPLE_COUNT;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            for c in coeffs.iter_mut() {
                *c = (rng.next_u64() % size) as Elem;
            }
            visit(&coeffs, &mut report);
        }
        report.domain = CoefficientDomain::Sampled { seed, samples };
    }
    Ok(report)
}
