//! Quadratic extensions F_q(α), α² + a₁α + a₂ = 0.

use super::{Attempt, Case, Criterion, Verdict};
use crate::error::{Error, Result};
use crate::field::{Elem, TowerCtx};

struct Quadratic {
    a1: u32,
    a2: u32,
    b0: u32,
    b1: u32,
}

fn setup(tower: &TowerCtx, beta: Elem) -> Result<Quadratic> {
    if tower.n() != 2 {
        return Err(Error::WrongDegree { expected: 2, got: tower.n() });
    }
    let m = tower.minpoly();
    let c = tower.coords(beta);
    Ok(Quadratic { a1: m[1], a2: m[0], b0: c[0], b1: c[1] })
}

/// Decides the canonical case `case` for β in a degree-2 tower.
pub fn decide(tower: &TowerCtx, case: Case, beta: Elem) -> Result<Verdict> {
    let qd = setup(tower, beta)?;
    if tower.p() == 2 {
        if qd.a1 == 0 {
            return Err(Error::InseparableTower);
        }
        return Ok(match case {
            Case::T0T0 => char2_t0t0(tower, &qd, beta),
            Case::T0T1 => char2_t0t1(tower, &qd, beta),
            Case::T1T1 => char2_t1t1(tower, &qd, beta, Criterion::Deg2Char2T1T1Trace),
        });
    }
    Ok(match case {
        Case::T0T0 => odd_t0t0(tower, &qd, beta),
        Case::T0T1 => odd_t0t1(tower, &qd, beta),
        Case::T1T1 => odd_t1t1(tower, &qd, beta),
    })
}

/// T_1T_1 in characteristic 2 decided by solving the quadratic directly
/// rather than by the absolute-trace test.
pub fn char2_t1t1_by_quadratic(tower: &TowerCtx, beta: Elem) -> Result<Verdict> {
    let qd = setup(tower, beta)?;
    if tower.p() != 2 {
        return Err(Error::CriterionUnavailable);
    }
    if qd.a1 == 0 {
        return Err(Error::InseparableTower);
    }
    if beta == 0 {
        return super::decide_canonical(tower, Case::T1T1, 0);
    }
    Ok(char2_t1t1(tower, &qd, beta, Criterion::Deg2Char2T1T1Quadratic))
}

/// δ = a₁/2 + α, which has trace 0 and δ² = a₁²/4 − a₂.
fn delta(tower: &TowerCtx, a1: u32) -> (Elem, u32) {
    let f = tower.base();
    let half = f.inv(2).expect("odd characteristic");
    let a1_half = f.mul(a1, half);
    let d = tower.compose(&[a1_half, 1]);
    (d, f.sub(f.mul(a1_half, a1_half), tower.minpoly()[0]))
}

fn odd_t0t0(tower: &TowerCtx, qd: &Quadratic, beta: Elem) -> Verdict {
    let mut at = Attempt::new(tower, Case::T0T0, beta, Criterion::Deg2T0T0);
    if qd.b1 != 0 {
        return at.non_member();
    }
    let f = tower.base();
    let (d, dd) = delta(tower, qd.a1);
    let y = tower.scalar_mul(f.div(qd.b0, dd).expect("irreducible"), d);
    let cert = at.try_pair(d, y, Some("delta"));
    at.member(cert)
}

fn odd_t0t1(tower: &TowerCtx, qd: &Quadratic, beta: Elem) -> Verdict {
    let mut at = Attempt::new(tower, Case::T0T1, beta, Criterion::Deg2T0T1);
    if qd.b1 == 0 {
        return at.non_member();
    }
    let f = tower.base();
    let half = f.inv(2).expect("odd characteristic");
    let (d, dd) = delta(tower, qd.a1);
    let x1 = f.mul(2, qd.b1);
    let num = f.sub(qd.b0, f.mul(qd.b1, f.mul(qd.a1, half)));
    let y1 = f.div(num, f.mul(x1, dd)).expect("nonzero");
    let x = tower.scalar_mul(x1, d);
    let y = tower.add(half, tower.scalar_mul(y1, d));
    let cert = at.try_pair(x, y, Some("delta"));
    at.member(cert)
}

/// ((a₁b₁+1)² − 4(b₀ + a₂b₁²)) / (a₁² − 4a₂).
pub fn odd_t1t1_discriminant(tower: &TowerCtx, beta: Elem) -> Result<u32> {
    let qd = setup(tower, beta)?;
    let f = tower.base();
    let four = f.from_int(4);
    let s = f.add(f.mul(qd.a1, qd.b1), 1);
    let num = f.sub(f.mul(s, s), f.mul(four, f.add(qd.b0, f.mul(qd.a2, f.mul(qd.b1, qd.b1)))));
    let den = f.sub(f.mul(qd.a1, qd.a1), f.mul(four, qd.a2));
    f.div(num, den)
}

fn odd_t1t1(tower: &TowerCtx, qd: &Quadratic, beta: Elem) -> Verdict {
    let mut at = Attempt::new(tower, Case::T1T1, beta, Criterion::Deg2T1T1);
    let f = tower.base();
    let disc = odd_t1t1_discriminant(tower, beta).expect("degree 2");
    if !f.is_square(disc) {
        return at.non_member();
    }
    // x = 1/2 + x₁δ, y = 1/2 + y₁δ with x₁ + y₁ = 2b₁ and x₁y₁ = P.
    let half = f.inv(2).expect("odd characteristic");
    let quarter = f.mul(half, half);
    let (d, dd) = delta(tower, qd.a1);
    let num = f.sub(f.sub(qd.b0, quarter), f.mul(f.mul(qd.a1, qd.b1), half));
    let p = f.div(num, dd).expect("irreducible");
    let roots = f.solve_quadratic(1, f.neg(f.mul(2, qd.b1)), p).expect("monic");
    let cert = roots.first().and_then(|&y1| {
        let x1 = f.sub(f.mul(2, qd.b1), y1);
        let x = tower.add(half, tower.scalar_mul(x1, d));
        let y = tower.add(half, tower.scalar_mul(y1, d));
        at.try_pair(x, y, Some("half-plus-delta"))
    });
    at.member(cert)
}

fn char2_t0t0(tower: &TowerCtx, qd: &Quadratic, beta: Elem) -> Verdict {
    let mut at = Attempt::new(tower, Case::T0T0, beta, Criterion::Deg2Char2T0T0);
    if qd.b1 != 0 {
        return at.non_member();
    }
    let cert = at.try_pair(1, beta, Some("one"));
    at.member(cert)
}

fn char2_t0t1(tower: &TowerCtx, qd: &Quadratic, beta: Elem) -> Verdict {
    let mut at = Attempt::new(tower, Case::T0T1, beta, Criterion::Deg2Char2T0T1);
    if qd.b1 == 0 {
        return at.non_member();
    }
    let f = tower.base();
    let x0 = f.mul(qd.a1, qd.b1);
    let a1_inv = f.inv(qd.a1).expect("separable");
    let y = tower.compose(&[f.div(qd.b0, x0).expect("nonzero"), a1_inv]);
    let cert = at.try_pair(x0, y, Some("scalar"));
    at.member(cert)
}

/// Coefficients (B, C) of X² + BX + C whose roots are the constant
/// coordinates of a T_1T_1 factorization.
fn char2_quadratic(tower: &TowerCtx, qd: &Quadratic) -> (u32, u32) {
    let f = tower.base();
    let b = f.add(f.mul(qd.a1, qd.b1), 1);
    let c = f.add(f.div(qd.a2, f.mul(qd.a1, qd.a1)).expect("separable"), qd.b0);
    (b, c)
}

fn char2_t1t1(tower: &TowerCtx, qd: &Quadratic, beta: Elem, criterion: Criterion) -> Verdict {
    let mut at = Attempt::new(tower, Case::T1T1, beta, criterion);
    let f = tower.base();
    let (b, c) = char2_quadratic(tower, qd);
    let roots = f.solve_quadratic(1, b, c).expect("monic");
    let member = match criterion {
        Criterion::Deg2Char2T1T1Trace => {
            b == 0 || f.abs_trace(f.div(c, f.mul(b, b)).expect("nonzero")) == 0
        }
        _ => !roots.is_empty(),
    };
    if !member {
        return at.non_member();
    }
    let a1_inv = f.inv(qd.a1).expect("separable");
    let cert = roots.first().and_then(|&x0| {
        let x = tower.compose(&[x0, a1_inv]);
        let y = tower.compose(&[f.add(b, x0), a1_inv]);
        at.try_pair(x, y, Some("quadratic-roots"))
    });
    at.member(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{default_tower, FieldCtx, TowerCtx};
    use crate::trace_sets::oracle;

    fn check_all(t: &TowerCtx) {
        for case in Case::ALL {
            let (a, b) = case.traces();
            for beta in t.elements() {
                let v = crate::trace_sets::decide_canonical(t, case, beta).unwrap();
                assert_eq!(v.member, oracle(t, a, b, beta).member, "q={} {case:?} β={beta}", t.q());
                assert!(v.divergences.is_empty(), "{:?}", v.divergences);
                if v.member {
                    assert!(!v.criterion.is_oracle());
                    assert!(v.certificate.unwrap().validates(t));
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_oracle() {
        for (p, h) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            check_all(&default_tower(p, h, 2).unwrap());
        }
    }

    #[test]
    fn f9_over_f3_with_x2_plus_1() {
        let t = TowerCtx::new(FieldCtx::new(3, 1, None).unwrap(), 2, Some(&[1, 0, 1]), None).unwrap();
        // a₁ = 0, a₂ = 1, β = 1: (1 − 4)/(−4) = 3/4 = 0 in F_3, a square.
        assert_eq!(odd_t1t1_discriminant(&t, 1).unwrap(), 0);
        let v = decide(&t, Case::T1T1, 1).unwrap();
        assert_eq!(v.member, oracle(&t, 1, 1, 1).member);
        check_all(&t);
    }

    #[test]
    fn quadratic_route_agrees_with_trace_route() {
        let t = default_tower(2, 3, 2).unwrap();
        for beta in t.elements() {
            let a = char2_t1t1_by_quadratic(&t, beta).unwrap();
            let b = decide(&t, Case::T1T1, beta).unwrap();
            assert_eq!(a.member, b.member);
        }
    }

    #[test]
    fn odd_char_statements() {
        let t = default_tower(5, 1, 2).unwrap();
        for beta in 1..5 {
            assert!(decide(&t, Case::T0T0, beta).unwrap().member);
            assert!(!decide(&t, Case::T0T1, beta).unwrap().member);
        }
    }

    #[test]
    fn wrong_degree() {
        let t = default_tower(3, 1, 3).unwrap();
        assert_eq!(decide(&t, Case::T0T0, 1), Err(Error::WrongDegree { expected: 2, got: 3 }));
    }
}
