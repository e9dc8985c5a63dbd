use alloc::vec;
use alloc::vec::Vec;

use super::tower::{Elem, TowerCtx};

impl TowerCtx {
    /// The distinct conjugates x, x^q, x^{q^2}, ... of `x`.
    pub fn conjugates(&self, x: Elem) -> Vec<Elem> {
        let mut out = vec![x];
        let mut y = self.frobenius(x, 1);
        while y != x {
            out.push(y);
            y = self.frobenius(y, 1);
        }
        out
    }

    /// Minimal polynomial of `x` over F_q, monic, constant term first.
    pub fn minimal_polynomial(&self, x: Elem) -> Vec<u32> {
        let mut acc: Vec<Elem> = vec![1];
        for c in self.conjugates(x) {
            let mut next = vec![0; acc.len() + 1];
            for (i, &a) in acc.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], a);
                next[i] = self.sub(next[i], self.mul(c, a));
            }
            acc = next;
        }
        debug_assert!(acc.iter().all(|&c| self.in_base(c)));
        acc
    }
}
