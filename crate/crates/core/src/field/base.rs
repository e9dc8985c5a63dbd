use alloc::vec;
use alloc::vec::Vec;

use super::digits;
use super::poly;
use crate::error::{Error, Result};

/// Largest number of elements any context may have.
pub const ELEMENT_BUDGET: u64 = 1 << 31;

const MUL_TABLE_MAX_Q: u32 = 256;
const INV_TABLE_MAX_Q: u32 = 1 << 16;

/// The field F_q = F_p[u]/(g).
///
/// Elements are `u32` indices: the coefficient of u^j is the j-th base-p digit.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u32,
    h: u32,
    q: u32,
    modulus: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    inv_table: Option<Vec<u32>>,
    nonsquare: u32,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds F_{p^h}. Without a modulus the first monic irreducible in
    /// enumeration order is used (see [`poly::first_irreducible`]).
    pub fn new(p: u64, h: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !digits::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if h == 0 {
            return Err(Error::BadModulus { expected_degree: 0 });
        }
        let q = checked_pow(p, h).filter(|&q| q <= ELEMENT_BUDGET);
        let Some(q) = q else {
            return Err(Error::SizeBudgetExceeded { p, h, n: 1 });
        };
        let p = p as u32;
        let prime = Self::prime(p);
        if h == 1 {
            if let Some(m) = modulus {
                if m.len() != 2 || m[1] != 1 || m[0] >= p {
                    return Err(Error::BadModulus { expected_degree: 1 });
                }
            }
            return Ok(prime);
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != h as usize + 1 || m[h as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus { expected_degree: h });
                }
                if !poly::is_irreducible(&prime, m) {
                    return Err(Error::Reducible);
                }
                m.to_vec()
            }
            None => poly::first_irreducible(&prime, h as usize),
        };
        let mut ctx = FieldCtx {
            p,
            h,
            q: q as u32,
            modulus,
            mul_table: None,
            inv_table: None,
            nonsquare: 0,
        };
        ctx.precompute();
        Ok(ctx)
    }

    /// The prime field F_p with modulus X.
    pub(crate) fn prime(p: u32) -> Self {
        let mut ctx = FieldCtx {
            p,
            h: 1,
            q: p,
            modulus: vec![0, 1],
            mul_table: None,
            inv_table: None,
            nonsquare: 0,
        };
        ctx.precompute();
        ctx
    }

    fn precompute(&mut self) {
        let q = self.q;
        if self.h > 1 && q <= MUL_TABLE_MAX_Q {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in a..q {
                    let c = self.mul_slow(a, b);
                    t[(a * q + b) as usize] = c;
                    t[(b * q + a) as usize] = c;
                }
            }
            self.mul_table = Some(t);
        }
        if q <= INV_TABLE_MAX_Q && q > 2 {
            let g = self.primitive_element();
            let mut powers = vec![0u32; (q - 1) as usize];
            let mut x = 1;
            for slot in powers.iter_mut() {
                *slot = x;
                x = self.mul(x, g);
            }
            let mut inv = vec![0u32; q as usize];
            for k in 0..(q - 1) as usize {
                inv[powers[k] as usize] = powers[(q as usize - 1 - k) % (q as usize - 1)];
            }
            self.inv_table = Some(inv);
        }
        if self.p != 2 {
            let half = (q as u64 - 1) / 2;
            let minus_one = self.neg(1);
            self.nonsquare = (2..q).find(|&z| self.pow(z, half) == minus_one).unwrap_or(0);
        }
    }

    /// The first element (in index order) that generates F_q^*.
    pub fn primitive_element(&self) -> u32 {
        if self.q == 2 {
            return 1;
        }
        let order = self.q as u64 - 1;
        let factors = digits::prime_factors(order);
        (2..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow(g, order / r) != 1))
            .expect("multiplicative group is cyclic")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining polynomial over F_p, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.h == 1 {
            let s = a as u64 + b as u64;
            let p = self.p as u64;
            return if s >= p { (s - p) as u32 } else { s as u32 };
        }
        digits::add(self.p, a, b)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.h == 1 {
            return if a >= b { a - b } else { (a as u64 + self.p as u64 - b as u64) as u32 };
        }
        digits::sub(self.p, a, b)
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.h == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        digits::neg(self.p, a)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.h == 1 {
            return (a as u64 * b as u64 % self.p as u64) as u32;
        }
        if let Some(t) = &self.mul_table {
            return t[(a * self.q + b) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let h = self.h as usize;
        let p = self.p as u64;
        let mut da = [0u32; 32];
        let mut db = [0u32; 32];
        digits::decode(self.p, a, &mut da[..h]);
        digits::decode(self.p, b, &mut db[..h]);
        let mut prod = [0u64; 64];
        for i in 0..h {
            if da[i] == 0 {
                continue;
            }
            for j in 0..h {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (h..2 * h - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..h {
                let t = c * self.modulus[i] as u64 % p;
                prod[k - h + i] = (prod[k - h + i] + p - t) % p;
            }
        }
        let mut out = 0u64;
        for k in (0..h).rev() {
            out = out * p + prod[k];
        }
        out as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.inv_table {
            return Ok(t[a as usize]);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplies by an element of the prime field.
    #[inline]
    pub fn scale(&self, c: u32, a: u32) -> u32 {
        if self.h == 1 {
            return self.mul(c, a);
        }
        digits::scale(self.p, c, a)
    }

    pub fn elements(&self) -> core::ops::Range<u32> {
        0..self.q
    }

    /// A fixed non-square, or 0 in characteristic 2.
    pub(crate) fn nonsquare(&self) -> u32 {
        self.nonsquare
    }
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > ELEMENT_BUDGET {
            return Some(acc);
        }
    }
    Some(acc)
}

pub(crate) fn checked_size(q: u64, n: u32) -> Option<u64> {
    checked_pow(q, n).filter(|&s| s <= ELEMENT_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_f2() {
        let f = FieldCtx::new(2, 1, None).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn f9_with_x2_plus_1() {
        let f = FieldCtx::new(3, 2, Some(&[1, 0, 1])).unwrap();
        // u is index 3; u*u = -1 = 2.
        assert_eq!(f.mul(3, 3), 2);
        for a in 1..9 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            assert_eq!(f.pow(a, 8), 1);
        }
    }

    #[test]
    fn f4_default_modulus() {
        let f = FieldCtx::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FieldCtx::new(4, 1, None), Err(Error::NotPrime(4)));
        assert_eq!(FieldCtx::new(3, 2, Some(&[2, 0, 1])), Err(Error::Reducible));
        assert_eq!(
            FieldCtx::new(2, 32, None),
            Err(Error::SizeBudgetExceeded { p: 2, h: 32, n: 1 })
        );
        assert!(matches!(FieldCtx::new(3, 2, Some(&[1, 0, 2])), Err(Error::BadModulus { .. })));
    }

    #[test]
    fn inverse_zero_fails() {
        let f = FieldCtx::new(5, 1, None).unwrap();
        assert_eq!(f.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn slow_and_table_multiplication_agree() {
        let f = FieldCtx::new(2, 4, None).unwrap();
        for a in 0..16 {
            for b in 0..16 {
                assert_eq!(f.mul(a, b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn large_extension_inverse_by_power() {
        let f = FieldCtx::new(2, 17, None).unwrap();
        for a in [1u32, 2, 3, 77, 99_999, (1 << 17) - 1] {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }
}
