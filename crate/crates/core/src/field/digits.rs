//! Digit-wise arithmetic on packed base-p integers.
//!
//! Every element in the crate is a `u32` whose base-p digits are its
//! coordinates over the prime field, so addition never needs to know how the
//! digits are grouped into coordinates over an intermediate field.

pub(crate) fn add(p: u32, a: u32, b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let p = p as u64;
    let (mut a, mut b) = (a as u64, b as u64);
    let mut out = 0u64;
    let mut place = 1u64;
    while a != 0 || b != 0 {
        let d = (a % p + b % p) % p;
        out += d * place;
        place *= p;
        a /= p;
        b /= p;
    }
    out as u32
}

pub(crate) fn neg(p: u32, a: u32) -> u32 {
    if p == 2 {
        return a;
    }
    let p = p as u64;
    let mut a = a as u64;
    let mut out = 0u64;
    let mut place = 1u64;
    while a != 0 {
        let d = a % p;
        if d != 0 {
            out += (p - d) * place;
        }
        place *= p;
        a /= p;
    }
    out as u32
}

pub(crate) fn sub(p: u32, a: u32, b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let p = p as u64;
    let (mut a, mut b) = (a as u64, b as u64);
    let mut out = 0u64;
    let mut place = 1u64;
    while a != 0 || b != 0 {
        let d = (a % p + p - b % p) % p;
        out += d * place;
        place *= p;
        a /= p;
        b /= p;
    }
    out as u32
}

/// Multiplies every digit by the prime-field scalar `c`.
pub(crate) fn scale(p: u32, c: u32, a: u32) -> u32 {
    let p = p as u64;
    let c = c as u64 % p;
    let mut a = a as u64;
    let mut out = 0u64;
    let mut place = 1u64;
    while a != 0 {
        out += (a % p * c % p) * place;
        place *= p;
        a /= p;
    }
    out as u32
}

/// Splits `x` into `out.len()` base-`radix` digits, least significant first.
#[inline]
pub(crate) fn decode(radix: u32, mut x: u32, out: &mut [u32]) {
    if radix.is_power_of_two() {
        let shift = radix.trailing_zeros();
        let mask = radix - 1;
        for d in out.iter_mut() {
            *d = x & mask;
            x >>= shift;
        }
    } else {
        for d in out.iter_mut() {
            *d = x % radix;
            x /= radix;
        }
    }
}

#[inline]
pub(crate) fn encode(radix: u32, digits: &[u32]) -> u32 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * radix as u64 + d as u64;
    }
    out as u32
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> alloc::vec::Vec<u64> {
    let mut out = alloc::vec::Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
