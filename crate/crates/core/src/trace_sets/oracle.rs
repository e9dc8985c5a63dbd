use alloc::vec;
use alloc::vec::Vec;

use super::{fiber::TraceFiber, zero_verdict, Certificate, Criterion, Provenance, Verdict};
use crate::field::{Elem, TowerCtx};

/// Exhaustive decision: scans x ∈ T_a and tests Tr(β/x) = b.
pub fn oracle(tower: &TowerCtx, a: u32, b: u32, beta: Elem) -> Verdict {
    if beta == 0 {
        let mut v = zero_verdict(tower, a, b);
        v.criterion = Criterion::Oracle;
        return v;
    }
    oracle_in_fiber(tower, TraceFiber::new(tower, a), a, b, beta)
}

/// [`oracle`] over a caller-supplied enumeration of T_a.
pub fn oracle_in_fiber(tower: &TowerCtx, fiber: impl IntoIterator<Item = Elem>, a: u32, b: u32, beta: Elem) -> Verdict {
    if beta == 0 {
        let mut v = zero_verdict(tower, a, b);
        v.criterion = Criterion::Oracle;
        return v;
    }
    for x in fiber {
        if x == 0 {
            continue;
        }
        let y = tower.mul(beta, tower.inv(x).expect("nonzero"));
        if tower.trace(y) == b {
            let cert = Certificate::new(tower, x, y, a, b, beta, Provenance::Oracle);
            debug_assert!(cert.is_some());
            return Verdict { member: true, certificate: cert, criterion: Criterion::Oracle, divergences: Vec::new() };
        }
    }
    Verdict { member: false, certificate: None, criterion: Criterion::Oracle, divergences: Vec::new() }
}

/// Membership bitmap of T_aT_b, built by multiplying out both fibers.
pub fn product_set(tower: &TowerCtx, a: u32, b: u32) -> Vec<bool> {
    let mut hit = vec![false; tower.size() as usize];
    let ys: Vec<Elem> = TraceFiber::new(tower, b).collect();
    for x in TraceFiber::new(tower, a) {
        for &y in &ys {
            hit[tower.mul(x, y) as usize] = true;
        }
    }
    hit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn oracle_matches_product_set() {
        for (p, h, n) in [(2, 1, 3), (3, 1, 2), (3, 1, 3), (2, 2, 2), (2, 1, 4)] {
            let t = default_tower(p, h, n).unwrap();
            for a in t.base().elements() {
                for b in t.base().elements() {
                    let set = product_set(&t, a, b);
                    for beta in t.elements() {
                        let v = oracle(&t, a, b, beta);
                        assert_eq!(v.member, set[beta as usize]);
                        assert_eq!(v.member, v.certificate.is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn main_theorem_examples() {
        let t = default_tower(2, 1, 5).unwrap();
        assert!(oracle(&t, 1, 1, 1).member);
        assert!(!oracle(&t, 1, 1, 0).member);
        let v = oracle(&t, 0, 1, 0);
        assert!(v.member);
        let c = v.certificate.unwrap();
        assert_eq!((c.x(), t.trace(c.y())), (0, 1));
    }
}
