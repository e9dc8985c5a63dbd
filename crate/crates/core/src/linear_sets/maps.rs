use alloc::vec::Vec;

use crate::field::{Elem, TowerCtx};

/// x ↦ Σ c_i x^{q^i} with coefficients in F_{q^n}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearizedPoly {
    coeffs: Vec<Elem>,
}

impl LinearizedPoly {
    /// Trailing zero coefficients are dropped.
    pub fn new(coeffs: &[Elem]) -> Self {
        let mut coeffs = coeffs.to_vec();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        LinearizedPoly { coeffs }
    }

    /// x^{q^k}.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = alloc::vec![0; k + 1];
        coeffs[k] = 1;
        LinearizedPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Largest i with c_i ≠ 0, or `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, tower: &TowerCtx, x: Elem) -> Elem {
        self.coeffs.iter().enumerate().fold(0, |acc, (i, &c)| {
            if c == 0 {
                acc
            } else {
                tower.add(acc, tower.mul(c, tower.frobenius(x, i as u32)))
            }
        })
    }

    /// Whether the map vanishes on all of F_{q^n}.
    pub fn vanishes(&self, tower: &TowerCtx) -> bool {
        (0..tower.n()).all(|j| self.eval(tower, basis_element(tower, j)) == 0)
    }
}

/// An F_q-linear map F_{q^n} → F_{q^n}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LinearMap {
    Identity,
    Poly(LinearizedPoly),
    /// x ↦ γ·Tr(x).
    ScaledTrace(Elem),
}

impl LinearMap {
    pub fn eval(&self, tower: &TowerCtx, x: Elem) -> Elem {
        match self {
            LinearMap::Identity => x,
            LinearMap::Poly(f) => f.eval(tower, x),
            LinearMap::ScaledTrace(g) => tower.scalar_mul(tower.trace(x), *g),
        }
    }

    /// Values at every element, in index order.
    pub fn table(&self, tower: &TowerCtx) -> Vec<Elem> {
        tower.elements().map(|x| self.eval(tower, x)).collect()
    }
}

/// α^j, the j-th power-basis vector.
pub(crate) fn basis_element(tower: &TowerCtx, j: u32) -> Elem {
    tower.q().pow(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn evaluation_is_linear() {
        let t = default_tower(3, 1, 4).unwrap();
        let f = LinearizedPoly::new(&[5, 0, 17, 0, 0]);
        assert_eq!(f.q_degree(), Some(2));
        for x in t.elements().step_by(5) {
            for y in t.elements().step_by(7) {
                for c in 0..3 {
                    let lhs = f.eval(&t, t.add(t.scalar_mul(c, x), y));
                    let rhs = t.add(t.scalar_mul(c, f.eval(&t, x)), f.eval(&t, y));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn trace_polynomial_matches_scaled_trace() {
        let t = default_tower(2, 2, 3).unwrap();
        let tr = LinearizedPoly::new(&[1, 1, 1]);
        for x in t.elements() {
            assert_eq!(tr.eval(&t, x), LinearMap::ScaledTrace(1).eval(&t, x));
        }
        assert!(!tr.vanishes(&t));
        assert!(LinearizedPoly::new(&[1, 3]).q_degree() == Some(1));
        let frob_minus_id = LinearizedPoly::new(&[t.neg(1), 1]);
        assert!(!frob_minus_id.vanishes(&t));
        assert!(LinearizedPoly::new(&[t.neg(1), 0, 0, 1]).vanishes(&t));
        assert!(LinearizedPoly::new(&[0, 0]).is_zero());
    }
}
