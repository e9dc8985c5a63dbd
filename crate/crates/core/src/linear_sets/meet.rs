use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::{LinearizedPoly, ProjPoint};
use crate::curves::count_club_curve;
use crate::error::{Error, Result};
use crate::field::{Elem, TowerCtx};
use crate::trace_sets::element_with_trace;

/// Number of sampled polynomials when the coefficient space is too large.
pub const SAMPLE_COUNT: u64 = 10_000;

/// How the linearized polynomials were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientDomain {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

/// Polynomials c₀y, where Γ̄ meets the club iff Tr(c₀) = 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DegreeZeroSummary {
    pub checked: u64,
    pub meets: u64,
    /// c₀ for which the direct test disagrees with Tr(c₀) = 1.
    pub disagreements: u64,
}

/// Whether {(f(y), y)} meets the club {(z, Tr z)} for every f of small q-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeetReport {
    pub q: u32,
    pub n: u32,
    pub d_max: u32,
    pub domain: CoefficientDomain,
    /// Polynomials of q-degree at least one that were tested.
    pub checked: u64,
    /// Coefficient lists of polynomials whose set misses the club.
    pub violations: Vec<Vec<Elem>>,
    /// Polynomials where meeting disagrees with a positive club-curve count.
    pub curve_mismatches: u64,
    pub degree_zero: DegreeZeroSummary,
}

/// Tests every linearized f of q-degree ≤ d_max, or a seeded random sample
/// of [`SAMPLE_COUNT`] polynomials when q^{n(d_max+1)} exceeds `budget`.
/// Requires d_max < n/2 − 1.
pub fn club_meet_check(tower: &TowerCtx, d_max: u32, budget: u64, seed: u64) -> Result<MeetReport> {
    let n = tower.n();
    if 2 * (d_max + 1) >= n {
        return Err(Error::Precondition("d_max must be below n/2 − 1"));
    }
    let size = tower.size() as u64;
    let len = d_max as usize + 1;
    let space = (size as u128).pow(len as u32);
    let club_points = club_bitmap(tower);
    let beta1 = element_with_trace(tower, 1);
    let mut report = MeetReport {
        q: tower.q(),
        n,
        d_max,
        domain: CoefficientDomain::Exhaustive,
        checked: 0,
        violations: Vec::new(),
        curve_mismatches: 0,
        degree_zero: DegreeZeroSummary::default(),
    };
    let mut coeffs = alloc::vec![0 as Elem; len];
    let visit = |coeffs: &[Elem], report: &mut MeetReport| {
        let f = LinearizedPoly::new(coeffs);
        match f.q_degree() {
            None => {}
            Some(0) => {
                let met = meets(tower, &club_points, &f);
                let dz = &mut report.degree_zero;
                dz.checked += 1;
                dz.meets += met as u64;
                if met != (tower.trace(coeffs[0]) == 1) {
                    dz.disagreements += 1;
                }
            }
            Some(_) => {
                report.checked += 1;
                let met = meets(tower, &club_points, &f);
                if !met {
                    report.violations.push(f.coeffs().to_vec());
                }
                let by_curve = count_club_curve(tower, &f, beta1).map(|r| r.affine_count > 0).unwrap_or(false);
                if by_curve != met {
                    report.curve_mismatches += 1;
                }
            }
        }
    };
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

fn club_bitmap(tower: &TowerCtx) -> Vec<bool> {
    let mut hit = alloc::vec![false; tower.size() as usize + 1];
    for z in 1..tower.size() {
        hit[ProjPoint::new(tower, z, tower.trace(z)).expect("z ≠ 0").index(tower)] = true;
    }
    hit
}

fn meets(tower: &TowerCtx, club_points: &[bool], f: &LinearizedPoly) -> bool {
    (1..tower.size()).any(|y| {
        ProjPoint::new(tower, f.eval(tower, y), y).is_some_and(|p| club_points[p.index(tower)])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn exhaustive_over_f32() {
        let t = default_tower(2, 1, 5).unwrap();
        let r = club_meet_check(&t, 1, 1 << 15, 0).unwrap();
        assert_eq!(r.domain, CoefficientDomain::Exhaustive);
        assert_eq!(r.checked, 32 * 31);
        assert!(r.violations.is_empty());
        assert_eq!(r.curve_mismatches, 0);
        assert_eq!(r.degree_zero.checked, 31);
        assert_eq!(r.degree_zero.meets, 16);
        assert_eq!(r.degree_zero.disagreements, 0);
    }

    #[test]
    fn precondition_and_sampling() {
        let t = default_tower(2, 1, 4).unwrap();
        assert!(matches!(club_meet_check(&t, 1, 1 << 15, 0), Err(Error::Precondition(_))));
        let t = default_tower(2, 1, 6).unwrap();
        let a = club_meet_check(&t, 1, 100, 7).unwrap();
        let b = club_meet_check(&t, 1, 100, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.domain, CoefficientDomain::Sampled { seed: 7, samples: SAMPLE_COUNT });
    }
}
