//! Dense polynomials over a [`FieldCtx`], stored constant term first.

use alloc::vec;
use alloc::vec::Vec;

use super::base::FieldCtx;
use super::digits;

pub fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn add(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = f.add(x, y);
    }
    trim(&mut out);
    out
}

pub fn sub(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = f.sub(x, y);
    }
    trim(&mut out);
    out
}

pub fn mul(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub fn rem(f: &FieldCtx, a: &[u32], m: &[u32]) -> Vec<u32> {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = f.inv(m[dm]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        for i in 0..=dm {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, m[i]));
        }
        trim(&mut r);
    }
    r
}

pub fn mulmod(f: &FieldCtx, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod(f: &FieldCtx, a: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut base = rem(f, a, m);
    let mut acc = rem(f, &[1], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        e >>= 1;
        if e > 0 {
            base = mulmod(f, &base, &base, m);
        }
    }
    acc
}

/// Monic greatest common divisor (empty for gcd(0, 0)).
pub fn gcd(f: &FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = f.inv(x[d]).expect("nonzero leading coefficient");
        for c in x.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    x
}

pub fn eval(f: &FieldCtx, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Rabin's test: `a` of degree n is irreducible iff X^{q^n} = X mod a and
/// gcd(X^{q^{n/r}} - X, a) = 1 for every prime r dividing n.
pub fn is_irreducible(f: &FieldCtx, a: &[u32]) -> bool {
    let Some(n) = degree(a) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let q = f.q() as u64;
    let x = [0, 1];
    let mut frob = vec![rem(f, &x, a)];
    for k in 1..=n {
        let next = powmod(f, &frob[k - 1], q, a);
        frob.push(next);
    }
    if frob[n] != rem(f, &x, a) {
        return false;
    }
    digits::prime_factors(n as u64).into_iter().all(|r| {
        let k = n / r as usize;
        let diff = sub(f, &frob[k], &x);
        degree(&gcd(f, &diff, a)) == Some(0)
    })
}

/// The first monic irreducible of degree `n` when candidates
/// X^n + c_{n-1}X^{n-1} + ... + c_0 are ordered by the integer
/// sum c_i q^i.
pub fn first_irreducible(f: &FieldCtx, n: usize) -> Vec<u32> {
    let q = f.q();
    let mut cand = vec![0u32; n + 1];
    cand[n] = 1;
    let mut k: u64 = 0;
    loop {
        let mut rest = k;
        for c in cand.iter_mut().take(n) {
            *c = (rest % q as u64) as u32;
            rest /= q as u64;
        }
        if is_irreducible(f, &cand) {
            return cand;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_has_factor(f: &FieldCtx, a: &[u32]) -> bool {
        // Any reducible polynomial of degree <= 5 has a monic factor of degree <= 2.
        let q = f.q();
        for c0 in 0..q {
            if eval(f, a, c0) == 0 {
                return true;
            }
            for c1 in 0..q {
                if degree(a).unwrap_or(0) < 4 {
                    break;
                }
                let g = [c0, c1, 1];
                if rem(f, a, &g).is_empty() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn rabin_matches_factor_search_over_f3() {
        let f = FieldCtx::prime(3);
        for n in 2..=5usize {
            let total = 3u32.pow(n as u32);
            for k in 0..total {
                let mut a = vec![0u32; n + 1];
                a[n] = 1;
                let mut rest = k;
                for c in a.iter_mut().take(n) {
                    *c = rest % 3;
                    rest /= 3;
                }
                assert_eq!(is_irreducible(&f, &a), !brute_has_factor(&f, &a), "{a:?}");
            }
        }
    }

    #[test]
    fn reducible_quadratic_times_cubic_is_rejected() {
        let f = FieldCtx::prime(2);
        let a = mul(&f, &[1, 1, 1], &[1, 1, 0, 1]);
        assert_eq!(degree(&a), Some(5));
        assert!(!is_irreducible(&f, &a));
    }

    #[test]
    fn first_irreducibles_over_f2() {
        let f = FieldCtx::prime(2);
        assert_eq!(first_irreducible(&f, 2), [1, 1, 1]);
        assert_eq!(first_irreducible(&f, 3), [1, 1, 0, 1]);
        assert_eq!(first_irreducible(&f, 4), [1, 1, 0, 0, 1]);
    }

    #[test]
    fn gcd_is_monic() {
        let f = FieldCtx::prime(5);
        let a = mul(&f, &[1, 1], &[2, 3]);
        let b = mul(&f, &[1, 1], &[2, 0, 1]);
        assert_eq!(gcd(&f, &a, &b), [1, 1]);
    }
}
