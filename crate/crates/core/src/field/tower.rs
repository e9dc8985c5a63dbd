use alloc::vec;
use alloc::vec::Vec;

use super::base::{checked_size, FieldCtx};
use super::digits;
use super::poly;
use super::special::TowerTag;
use crate::error::{Error, Result};

/// An element of F_{q^n}: the coefficient of α^i is the i-th base-q digit,
/// and each digit is an F_q index.
pub type Elem = u32;

const INV_TABLE_MAX: u32 = 1 << 16;

/// The extension F_{q^n} = F_q[α]/(m).
///
/// Elements of F_q embed as the indices `0..q`.
#[derive(Clone, Debug)]
pub struct TowerCtx {
    base: FieldCtx,
    n: usize,
    minpoly: Vec<u32>,
    tag: TowerTag,
    size: u32,
    /// `frob[k][i]` is (α^i)^{q^k}.
    frob: Vec<Vec<Elem>>,
    basis_trace: Vec<u32>,
    inv_table: Option<Vec<Elem>>,
    /// Set when q = 2: the minimal polynomial as a bit mask without its leading term.
    binary_reduction: Option<u64>,
}

impl PartialEq for TowerCtx {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.minpoly == other.minpoly
    }
}

impl Eq for TowerCtx {}

impl TowerCtx {
    /// Builds F_{q^n} over `base`. Without `minpoly` the first monic
    /// irreducible of degree `n` in enumeration order is used. Without `tag`
    /// the tag is read off the minimal polynomial.
    pub fn new(base: FieldCtx, n: u32, minpoly: Option<&[u32]>, tag: Option<TowerTag>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadModulus { expected_degree: 0 });
        }
        let Some(size) = checked_size(base.q() as u64, n) else {
            return Err(Error::SizeBudgetExceeded { p: base.p() as u64, h: base.h(), n });
        };
        let nu = n as usize;
        let minpoly = match minpoly {
            Some(m) => {
                if m.len() != nu + 1 || m[nu] != 1 || m.iter().any(|&c| c >= base.q()) {
                    return Err(Error::BadModulus { expected_degree: n });
                }
                if !poly::is_irreducible(&base, m) {
                    return Err(Error::Reducible);
                }
                m.to_vec()
            }
            None => poly::first_irreducible(&base, nu),
        };
        let detected = TowerTag::detect(&base, &minpoly);
        let tag = match tag {
            None => detected,
            Some(TowerTag::General) => TowerTag::General,
            Some(t) if t == detected => t,
            Some(_) => return Err(Error::TagMismatch),
        };
        Ok(Self::assemble(base, minpoly, tag, size as u32))
    }

    /// Builds a tower from a minimal polynomial already known to be irreducible.
    pub(crate) fn assemble(base: FieldCtx, minpoly: Vec<u32>, tag: TowerTag, size: u32) -> Self {
        let n = minpoly.len() - 1;
        let binary_reduction = (base.q() == 2).then(|| {
            minpoly[..n]
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i))
        });
        let mut t = TowerCtx {
            base,
            n,
            minpoly,
            tag,
            size,
            frob: Vec::new(),
            basis_trace: Vec::new(),
            inv_table: None,
            binary_reduction,
        };
        t.precompute();
        t
    }

    fn precompute(&mut self) {
        let n = self.n;
        let q = self.base.q() as u64;
        let mut powers = vec![1 as Elem; n];
        let alpha = self.alpha();
        for i in 1..n {
            powers[i] = self.mul(powers[i - 1], alpha);
        }
        let first: Vec<Elem> = powers.iter().map(|&a| self.pow(a, q)).collect();
        let mut frob = vec![powers];
        if n > 1 {
            frob.push(first);
        }
        for k in 2..n {
            let next: Vec<Elem> = frob[k - 1].iter().map(|&v| self.apply_linear(&frob[1], v)).collect();
            frob.push(next);
        }
        self.frob = frob;
        self.basis_trace = (0..n)
            .map(|i| {
                let t = (0..n).fold(0, |acc, k| self.add(acc, self.frob[k][i]));
                debug_assert!(t < self.base.q());
                t
            })
            .collect();
        if self.size <= INV_TABLE_MAX && self.size > 2 {
            let g = self.primitive_element();
            let order = self.size as usize - 1;
            let mut powers = vec![0 as Elem; order];
            let mut x = 1;
            for slot in powers.iter_mut() {
                *slot = x;
                x = self.mul(x, g);
            }
            let mut inv = vec![0 as Elem; self.size as usize];
            for k in 0..order {
                inv[powers[k] as usize] = powers[(order - k) % order];
            }
            self.inv_table = Some(inv);
        }
    }

    /// Evaluates the F_q-linear map sending α^i to `images[i]`.
    fn apply_linear(&self, images: &[Elem], v: Elem) -> Elem {
        let mut c = [0u32; 32];
        self.decode(v, &mut c);
        let mut acc = 0;
        for i in 0..self.n {
            if c[i] != 0 {
                acc = self.add(acc, self.scalar_mul(c[i], images[i]));
            }
        }
        acc
    }

    pub fn base(&self) -> &FieldCtx {
        &self.base
    }

    pub fn n(&self) -> u32 {
        self.n as u32
    }

    pub fn q(&self) -> u32 {
        self.base.q()
    }

    pub fn p(&self) -> u32 {
        self.base.p()
    }

    /// Number of elements, q^n.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Minimal polynomial of α over F_q, constant term first.
    pub fn minpoly(&self) -> &[u32] {
        &self.minpoly
    }

    pub fn tag(&self) -> TowerTag {
        self.tag
    }

    /// Tr(α^i) for i < n.
    pub fn basis_traces(&self) -> &[u32] {
        &self.basis_trace
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.size
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.size
    }

    /// The generator α of the power basis.
    pub fn alpha(&self) -> Elem {
        if self.n == 1 {
            self.base.neg(self.minpoly[0])
        } else {
            self.base.q()
        }
    }

    /// True iff `x` lies in the subfield F_q.
    pub fn in_base(&self, x: Elem) -> bool {
        x < self.base.q()
    }

    #[inline]
    pub fn decode(&self, x: Elem, out: &mut [u32]) {
        digits::decode(self.base.q(), x, &mut out[..self.n]);
    }

    /// Coordinates (x_0, ..., x_{n-1}) in the power basis.
    pub fn coords(&self, x: Elem) -> Vec<u32> {
        let mut out = vec![0; self.n];
        self.decode(x, &mut out);
        out
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<Elem> {
        if coords.len() != self.n || coords.iter().any(|&c| c >= self.base.q()) {
            return Err(Error::InvalidElement);
        }
        Ok(digits::encode(self.base.q(), coords))
    }

    /// Sum of c_i α^i for a short coordinate list; missing entries are zero.
    pub(crate) fn compose(&self, coords: &[u32]) -> Elem {
        let mut full = [0u32; 32];
        full[..coords.len()].copy_from_slice(coords);
        digits::encode(self.base.q(), &full[..self.n])
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        digits::add(self.base.p(), x, y)
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        digits::sub(self.base.p(), x, y)
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        digits::neg(self.base.p(), x)
    }

    /// Product of an F_q scalar with a tower element.
    pub fn scalar_mul(&self, c: u32, x: Elem) -> Elem {
        if c == 0 || x == 0 {
            return 0;
        }
        if c == 1 {
            return x;
        }
        let mut d = [0u32; 32];
        self.decode(x, &mut d);
        for v in d[..self.n].iter_mut() {
            *v = self.base.mul(c, *v);
        }
        digits::encode(self.base.q(), &d[..self.n])
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        if x == 0 || y == 0 {
            return 0;
        }
        if let Some(red) = self.binary_reduction {
            return self.mul_binary(x, y, red);
        }
        let n = self.n;
        let f = &self.base;
        let mut a = [0u32; 32];
        let mut b = [0u32; 32];
        self.decode(x, &mut a);
        self.decode(y, &mut b);
        let mut prod = [0u32; 64];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] != 0 {
                    prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
                }
            }
        }
        for k in (n..2 * n - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..n {
                let m = self.minpoly[i];
                if m != 0 {
                    prod[k - n + i] = f.sub(prod[k - n + i], f.mul(c, m));
                }
            }
        }
        digits::encode(f.q(), &prod[..n])
    }

    fn mul_binary(&self, x: Elem, y: Elem, red: u64) -> Elem {
        let n = self.n;
        let mut prod: u64 = 0;
        let (x, mut y) = (x as u64, y as u64);
        let mut i = 0;
        while y != 0 {
            if y & 1 == 1 {
                prod ^= x << i;
            }
            y >>= 1;
            i += 1;
        }
        for k in (n..2 * n - 1).rev() {
            if prod >> k & 1 == 1 {
                prod ^= 1 << k;
                prod ^= red << (k - n);
            }
        }
        prod as Elem
    }

    pub fn square(&self, x: Elem) -> Elem {
        self.mul(x, x)
    }

    pub fn pow(&self, x: Elem, mut e: u64) -> Elem {
        let mut base = x;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.inv_table {
            return Ok(t[x as usize]);
        }
        Ok(self.pow(x, self.size as u64 - 2))
    }

    pub fn div(&self, x: Elem, y: Elem) -> Result<Elem> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// x^{q^i}.
    pub fn frobenius(&self, x: Elem, i: u32) -> Elem {
        let k = i as usize % self.n;
        if k == 0 {
            return x;
        }
        self.apply_linear(&self.frob[k], x)
    }

    /// x^{q^i} by repeated q-th powering.
    pub fn frobenius_by_powering(&self, x: Elem, i: u32) -> Elem {
        let q = self.base.q() as u64;
        (0..i).fold(x, |acc, _| self.pow(acc, q))
    }

    /// Tr_{F_{q^n}/F_q}(x) from the precomputed traces of the basis.
    pub fn trace(&self, x: Elem) -> u32 {
        let f = &self.base;
        let mut c = [0u32; 32];
        self.decode(x, &mut c);
        let mut acc = 0;
        for i in 0..self.n {
            if c[i] != 0 && self.basis_trace[i] != 0 {
                acc = f.add(acc, f.mul(c[i], self.basis_trace[i]));
            }
        }
        acc
    }

    /// Tr(x) as the sum of the conjugates.
    pub fn trace_by_frobenius(&self, x: Elem) -> Elem {
        (0..self.n as u32).fold(0, |acc, k| self.add(acc, self.frobenius(x, k)))
    }

    /// N_{F_{q^n}/F_q}(x), the product of the conjugates.
    pub fn norm(&self, x: Elem) -> u32 {
        (0..self.n as u32).fold(1, |acc, k| self.mul(acc, self.frobenius(x, k)))
    }

    /// The first element (in index order) that generates the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        if self.size == 2 {
            return 1;
        }
        let order = self.size as u64 - 1;
        let factors = digits::prime_factors(order);
        (2..self.size)
            .find(|&g| factors.iter().all(|&r| self.pow(g, order / r) != 1))
            .expect("multiplicative group is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(p: u64, h: u32, n: u32) -> TowerCtx {
        TowerCtx::new(FieldCtx::new(p, h, None).unwrap(), n, None, None).unwrap()
    }

    #[test]
    fn f4_over_f2_frobenius_of_omega() {
        let t = tower(2, 1, 2);
        let w = t.alpha();
        assert_eq!(t.frobenius(w, 1), t.add(w, 1));
        assert_eq!(t.frobenius(w, 2), w);
    }

    #[test]
    fn binary_and_generic_multiplication_agree() {
        let t = tower(2, 1, 5);
        let mut generic = t.clone();
        generic.binary_reduction = None;
        for x in t.elements() {
            for y in t.elements() {
                assert_eq!(t.mul(x, y), generic.mul(x, y));
            }
        }
    }

    #[test]
    fn trace_routes_agree() {
        for (p, h, n) in [(2, 1, 5), (3, 1, 4), (2, 2, 3), (5, 1, 3), (3, 2, 2)] {
            let t = tower(p, h, n);
            for x in t.elements() {
                assert_eq!(t.trace(x), t.trace_by_frobenius(x));
                assert_eq!(t.frobenius(x, 1), t.frobenius_by_powering(x, 1));
            }
        }
    }

    #[test]
    fn inverse_and_norm() {
        let t = tower(3, 1, 5);
        for x in 1..t.size() {
            assert_eq!(t.mul(x, t.inv(x).unwrap()), 1);
            let nx = t.norm(x);
            assert!(t.in_base(nx) && nx != 0);
            assert_eq!(nx, t.pow(x, (t.size() as u64 - 1) / 2));
        }
        assert_eq!(t.norm(0), 0);
        assert_eq!(t.inv(0), Err(Error::DivisionByZero));
    }

    #[test]
    fn budget() {
        let f = FieldCtx::new(2, 1, None).unwrap();
        assert_eq!(
            TowerCtx::new(f, 32, None, None).unwrap_err(),
            Error::SizeBudgetExceeded { p: 2, h: 1, n: 32 }
        );
    }

    #[test]
    fn coords_roundtrip() {
        let t = tower(2, 2, 3);
        let x = t.from_coords(&[3, 0, 2]).unwrap();
        assert_eq!(x, 3 + 2 * 16);
        assert_eq!(t.coords(x), [3, 0, 2]);
        assert_eq!(t.from_coords(&[4, 0, 0]), Err(Error::InvalidElement));
    }
}
