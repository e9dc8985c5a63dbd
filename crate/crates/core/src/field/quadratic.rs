//! Squares, square roots and quadratic equations in F_q.

use alloc::vec;
use alloc::vec::Vec;

use super::base::FieldCtx;
use super::linalg;
use crate::error::{Error, Result};

impl FieldCtx {
    /// Whether `c` is a square. Always true in characteristic 2.
    pub fn is_square(&self, c: u32) -> bool {
        if c == 0 || self.p() == 2 {
            return true;
        }
        self.pow(c, (self.q() as u64 - 1) / 2) == 1
    }

    /// A square root of `c`, if one exists.
    pub fn sqrt(&self, c: u32) -> Option<u32> {
        if c == 0 {
            return Some(0);
        }
        if self.p() == 2 {
            return Some(self.pow(c, self.q() as u64 / 2));
        }
        if !self.is_square(c) {
            return None;
        }
        // Tonelli-Shanks with q - 1 = 2^s t.
        let mut t = self.q() as u64 - 1;
        let mut s = 0u32;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        let mut m = s;
        let mut c_ = self.pow(self.nonsquare(), t);
        let mut x = self.pow(c, t);
        let mut r = self.pow(c, t.div_ceil(2));
        while x != 1 {
            let mut i = 0;
            let mut y = x;
            while y != 1 {
                y = self.mul(y, y);
                i += 1;
            }
            let b = self.pow(c_, 1u64 << (m - i - 1));
            m = i;
            c_ = self.mul(b, b);
            x = self.mul(x, c_);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// Tr_{F_q/F_p}(c) as an element of the prime field.
    pub fn abs_trace(&self, c: u32) -> u32 {
        let mut acc = 0;
        let mut y = c;
        for _ in 0..self.h() {
            acc = self.add(acc, y);
            y = self.pow(y, self.p() as u64);
        }
        acc
    }

    /// All distinct roots of A X^2 + B X + C in F_q, in increasing index order.
    pub fn solve_quadratic(&self, a: u32, b: u32, c: u32) -> Result<Vec<u32>> {
        if a == 0 {
            return Err(Error::NotAField);
        }
        let mut roots = if self.p() == 2 {
            self.solve_quadratic_char2(a, b, c)
        } else {
            let four_ac = self.mul(self.from_int(4), self.mul(a, c));
            let disc = self.sub(self.mul(b, b), four_ac);
            match self.sqrt(disc) {
                None => Vec::new(),
                Some(s) => {
                    let den = self.inv(self.mul(2, a)).expect("odd characteristic");
                    let nb = self.neg(b);
                    vec![self.mul(self.add(nb, s), den), self.mul(self.sub(nb, s), den)]
                }
            }
        };
        roots.sort_unstable();
        roots.dedup();
        Ok(roots)
    }

    fn solve_quadratic_char2(&self, a: u32, b: u32, c: u32) -> Vec<u32> {
        let a_inv = self.inv(a).expect("nonzero");
        if b == 0 {
            return vec![self.sqrt(self.mul(c, a_inv)).expect("char 2")];
        }
        // X = (B/A) Z turns the equation into Z^2 + Z = CA/B^2.
        let rhs = self.div(self.mul(c, a), self.mul(b, b)).expect("nonzero");
        match self.artin_schreier_root(rhs) {
            None => Vec::new(),
            Some(z) => {
                let scale = self.mul(b, a_inv);
                vec![self.mul(scale, z), self.mul(scale, self.add(z, 1))]
            }
        }
    }

    /// A root of Z^2 + Z = c in characteristic 2, found by linear algebra over F_2.
    pub(crate) fn artin_schreier_root(&self, c: u32) -> Option<u32> {
        debug_assert_eq!(self.p(), 2);
        let cols: Vec<u32> = (0..self.h()).map(|j| {
            let e = 1u32 << j;
            self.mul(e, e) ^ e
        }).collect();
        linalg::solve_gf2(&cols, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_mod_5() {
        let f = FieldCtx::new(5, 1, None).unwrap();
        assert!(f.is_square(0) && f.is_square(1) && f.is_square(4));
        assert!(!f.is_square(2) && !f.is_square(3));
    }

    #[test]
    fn every_element_of_f16_is_a_square() {
        let f = FieldCtx::new(2, 4, None).unwrap();
        for c in f.elements() {
            let s = f.sqrt(c).unwrap();
            assert_eq!(f.mul(s, s), c);
        }
    }

    #[test]
    fn sqrt_odd_fields() {
        for (p, h) in [(3, 1), (5, 1), (13, 1), (3, 2), (5, 2), (17, 1), (3, 4)] {
            let f = FieldCtx::new(p, h, None).unwrap();
            let squares: Vec<u32> = f.elements().map(|x| f.mul(x, x)).collect();
            for c in f.elements() {
                match f.sqrt(c) {
                    Some(s) => assert_eq!(f.mul(s, s), c),
                    None => assert!(!squares.contains(&c)),
                }
            }
        }
    }

    #[test]
    fn quadratic_examples() {
        let f2 = FieldCtx::new(2, 1, None).unwrap();
        assert_eq!(f2.solve_quadratic(1, 0, 0).unwrap(), [0]);
        assert_eq!(f2.solve_quadratic(1, 1, 1).unwrap(), Vec::<u32>::new());
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f5.solve_quadratic(1, 0, 4).unwrap(), [1, 4]);
        assert_eq!(f5.solve_quadratic(0, 1, 1), Err(Error::NotAField));
    }

    #[test]
    fn quadratic_roots_match_enumeration() {
        for (p, h) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (7, 1), (2, 4)] {
            let f = FieldCtx::new(p, h, None).unwrap();
            for a in 1..f.q() {
                for b in f.elements() {
                    for c in f.elements() {
                        let brute: Vec<u32> = f
                            .elements()
                            .filter(|&x| f.add(f.add(f.mul(a, f.mul(x, x)), f.mul(b, x)), c) == 0)
                            .collect();
                        assert_eq!(f.solve_quadratic(a, b, c).unwrap(), brute);
                    }
                }
            }
        }
    }

    #[test]
    fn absolute_trace_lands_in_prime_field() {
        let f = FieldCtx::new(3, 3, None).unwrap();
        let mut counts = [0u32; 3];
        for c in f.elements() {
            let t = f.abs_trace(c);
            assert!(t < 3);
            counts[t as usize] += 1;
        }
        assert_eq!(counts, [9, 9, 9]);
    }
}
