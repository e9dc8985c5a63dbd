use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{digits, poly, Elem, TowerCtx};
use crate::trace_sets::TraceFiber;

/// Monic irreducible X^n + c₁X^{n−1} + … + c_n with c₁ = a and c_{n−1}/c_n = b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrescribedPoly {
    pub q: u32,
    pub n: u32,
    pub a: u32,
    pub b: u32,
    /// A root, with Tr(α) = −a and Tr(1/α) = −b.
    pub alpha: Elem,
    /// Whether n ∉ {2, 3} and n² ≠ ab, so that a root is known to exist.
    pub guaranteed: bool,
    /// c₁, …, c_n.
    pub leading_order: Vec<u32>,
    /// Coefficients of X⁰, …, X^n.
    pub constant_first: Vec<u32>,
}

impl PrescribedPoly {
    /// Irreducibility and both prescribed coefficients, rechecked from the list.
    pub fn verify(&self, tower: &TowerCtx) -> bool {
        let f = tower.base();
        let c = &self.leading_order;
        let n = self.n as usize;
        self.constant_first.len() == n + 1
            && self.constant_first[n] == 1
            && poly::is_irreducible(f, &self.constant_first)
            && c[0] == self.a
            && f.div(c[n - 2], c[n - 1]) == Ok(self.b)
    }
}

/// Finds α ∉ F_q with Tr(α) = −a and Tr(1/α) = −b and returns its minimal
/// polynomial. The degree n of the tower must be prime.
pub fn irreducible_with_prescribed(tower: &TowerCtx, a: u32, b: u32) -> Result<PrescribedPoly> {
    let f = tower.base();
    let n = tower.n();
    if !digits::is_prime(n as u64) {
        return Err(Error::Precondition("the extension degree must be prime"));
    }
    if !f.contains(a) || !f.contains(b) {
        return Err(Error::InvalidElement);
    }
    let n_sq = f.from_int((n as i64) * (n as i64));
    let guaranteed = n > 3 && n_sq != f.mul(a, b);
    let target = f.neg(b);
    let alpha = TraceFiber::new(tower, f.neg(a))
        .find(|&x| !tower.in_base(x) && tower.trace(tower.inv(x).expect("outside F_q")) == target)
        .ok_or(Error::NoWitnessFound)?;
    let constant_first = tower.minimal_polynomial(alpha);
    let leading_order = (1..=n as usize).map(|i| constant_first[n as usize - i]).collect();
    let out = PrescribedPoly { q: tower.q(), n, a, b, alpha, guaranteed, leading_order, constant_first };
    debug_assert!(out.verify(tower));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn all_guaranteed_pairs() {
        for (p, n) in [(2, 5), (3, 5), (2, 7), (5, 3)] {
            let t = default_tower(p, 1, n).unwrap();
            for a in 0..t.q() {
                for b in 0..t.q() {
                    match irreducible_with_prescribed(&t, a, b) {
                        Ok(r) => {
                            assert!(r.verify(&t));
                            assert_eq!(r.leading_order[0], a);
                        }
                        Err(e) => {
                            assert_eq!(e, Error::NoWitnessFound);
                            let n_sq = t.base().from_int((n * n) as i64);
                            assert!(n <= 3 || n_sq == t.base().mul(a, b), "{p} {n} {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn listed_requests() {
        let t = default_tower(3, 1, 5).unwrap();
        let r = irreducible_with_prescribed(&t, 0, 0).unwrap();
        assert!(r.guaranteed);
        assert_eq!((r.leading_order[0], r.leading_order[3]), (0, 0));
        assert!(!irreducible_with_prescribed(&t, 1, 1).map(|r| r.guaranteed).unwrap_or(false));
        let t = default_tower(2, 1, 5).unwrap();
        assert!(irreducible_with_prescribed(&t, 1, 0).unwrap().guaranteed);
        let t = default_tower(2, 1, 4).unwrap();
        assert!(matches!(irreducible_with_prescribed(&t, 0, 0), Err(Error::Precondition(_))));
    }
}
