//! Affine point counts on the Artin–Schreier curves z^q − z = g(t) attached
//! to trace products and to clubs, with Hasse–Weil envelopes.

use crate::error::{Error, Result};
use crate::field::{Elem, TowerCtx};
use crate::linear_sets::LinearizedPoly;

/// Which curve was counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveKind {
    /// z^q − z = α/(t^q − t + β_b) − β_a.
    Product { alpha: Elem, beta_a: Elem, beta_b: Elem },
    /// z^q − z = f(y)/y − β₁.
    Club { f: LinearizedPoly, beta1: Elem },
}

/// Affine count of an Artin–Schreier curve over F_{q^n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub q: u32,
    pub n: u32,
    pub kind: CurveKind,
    pub genus: u64,
    /// Affine points (t, z) with the right-hand side defined.
    pub affine_count: u64,
    /// Values of t at which the right-hand side has a pole.
    pub pole_count: u64,
    pub hw_lower: i128,
    pub hw_upper: i128,
    /// Points the affine model may miss relative to the projective curve.
    pub slack: i128,
    pub within_bound: bool,
}

impl CountReport {
    fn new(tower: &TowerCtx, kind: CurveKind, genus: u64, affine_count: u64, pole_count: u64) -> Self {
        let (q, n) = (tower.q(), tower.n());
        let (hw_lower, hw_upper) = hasse_weil_envelope(q, n, genus);
        let slack = 2 * q as i128;
        let count = affine_count as i128;
        let within_bound = hw_lower - slack <= count && count <= hw_upper + slack;
        CountReport { q, n, kind, genus, affine_count, pole_count, hw_lower, hw_upper, slack, within_bound }
    }
}

/// (⌈Q + 1 − 2g√Q⌉, ⌊Q + 1 + 2g√Q⌋) for Q = q^n, in exact integers.
pub fn hasse_weil_envelope(q: u32, n: u32, genus: u64) -> (i128, i128) {
    let big_q = (q as u128).pow(n);
    let g = genus as u128;
    // ⌊2g√Q⌋ = ⌊√(4g²Q)⌋.
    let spread = (4 * g * g * big_q).isqrt() as i128;
    let centre = big_q as i128 + 1;
    (centre - spread, centre + spread)
}

/// Points on z^q − z = α/(t^q − t + β_b) − β_a.
///
/// z^q − z = c has q solutions when Tr(c) = 0 and none otherwise.
pub fn count_product_curve(tower: &TowerCtx, alpha: Elem, beta_a: Elem, beta_b: Elem) -> Result<CountReport> {
    for e in [alpha, beta_a, beta_b] {
        if !tower.contains(e) {
            return Err(Error::InvalidElement);
        }
    }
    if alpha == 0 {
        return Err(Error::ZeroTarget);
    }
    let q = tower.q() as u64;
    let (mut solvable, mut poles) = (0u64, 0u64);
    for t in tower.elements() {
        let w = tower.add(tower.sub(tower.frobenius(t, 1), t), beta_b);
        if w == 0 {
            poles += 1;
            continue;
        }
        let c = tower.sub(tower.div(alpha, w).expect("nonzero"), beta_a);
        if tower.trace(c) == 0 {
            solvable += 1;
        }
    }
    let genus = (q - 1) * (q - 1);
    let kind = CurveKind::Product { alpha, beta_a, beta_b };
    Ok(CountReport::new(tower, kind, genus, q * solvable, poles))
}

/// Points on z^q − z = f(y)/y − β₁ with y ≠ 0, where Tr(β₁) = 1.
pub fn count_club_curve(tower: &TowerCtx, f: &LinearizedPoly, beta1: Elem) -> Result<CountReport> {
    if !tower.contains(beta1) || f.coeffs().iter().any(|&c| !tower.contains(c)) {
        return Err(Error::InvalidElement);
    }
    let d = match f.q_degree() {
        Some(d) if d >= 1 && !f.vanishes(tower) => d,
        _ => return Err(Error::DegenerateF),
    };
    if tower.trace(beta1) != 1 {
        return Err(Error::Precondition("Tr(β₁) must be 1"));
    }
    let q = tower.q() as u64;
    let mut solvable = 0u64;
    for y in 1..tower.size() {
        let c = tower.sub(tower.div(f.eval(tower, y), y).expect("nonzero"), beta1);
        if tower.trace(c) == 0 {
            solvable += 1;
        }
    }
    let genus = (q.pow(d) - 2) * (q - 1) / 2;
    let kind = CurveKind::Club { f: f.clone(), beta1 };
    Ok(CountReport::new(tower, kind, genus, q * solvable, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;
    use crate::trace_sets::{element_with_trace, TraceFiber};

    #[test]
    fn envelopes() {
        assert_eq!(hasse_weil_envelope(5, 3, 0), (126, 126));
        assert_eq!(hasse_weil_envelope(3, 4, 4), (82 - 72, 82 + 72));
        // 2√32 = 11.31…
        assert_eq!(hasse_weil_envelope(2, 5, 1), (33 - 11, 33 + 11));
    }

    #[test]
    fn artin_schreier_dichotomy() {
        for (p, h, n) in [(2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2)] {
            let t = default_tower(p, h, n).unwrap();
            let mut hits = alloc::vec![0u32; t.size() as usize];
            for z in t.elements() {
                hits[t.sub(t.frobenius(z, 1), z) as usize] += 1;
            }
            for c in t.elements() {
                let expected = if t.trace(c) == 0 { t.q() } else { 0 };
                assert_eq!(hits[c as usize], expected);
            }
        }
    }

    #[test]
    fn product_count_matches_fiber_enumeration() {
        for (p, h, n) in [(2, 1, 5), (3, 1, 4), (2, 1, 4), (3, 1, 3)] {
            let t = default_tower(p, h, n).unwrap();
            let q = t.q();
            for a in 0..q {
                for b in 0..q {
                    let (ba, bb) = (element_with_trace(&t, a), element_with_trace(&t, b));
                    for alpha in [1, t.alpha(), t.size() - 1] {
                        let r = count_product_curve(&t, alpha, ba, bb).unwrap();
                        let direct = TraceFiber::new(&t, b)
                            .filter(|&y| y != 0 && t.trace(t.div(alpha, y).unwrap()) == a)
                            .count() as u64;
                        assert_eq!(r.affine_count, (q as u64).pow(2) * direct);
                        assert_eq!(r.pole_count, if b == 0 { q as u64 } else { 0 });
                        assert_eq!(r.affine_count % q as u64, 0);
                        assert!(r.within_bound, "{r:?}");
                        if n >= 5 || (n == 4 && q <= 3) {
                            assert!(r.affine_count > 2 * q as u64);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn club_curve_over_f32() {
        let t = default_tower(2, 1, 5).unwrap();
        let f = LinearizedPoly::monomial(1);
        let r = count_club_curve(&t, &f, element_with_trace(&t, 1)).unwrap();
        assert!(r.affine_count > 1);
        assert_eq!(r.genus, 0);
        assert_eq!(r.affine_count % 2, 0);
        assert_eq!(count_product_curve(&t, 0, 1, 1), Err(Error::ZeroTarget));
        assert_eq!(count_club_curve(&t, &LinearizedPoly::new(&[3]), 1), Err(Error::DegenerateF));
        assert_eq!(count_club_curve(&t, &LinearizedPoly::new(&[]), 1), Err(Error::DegenerateF));
    }
}
