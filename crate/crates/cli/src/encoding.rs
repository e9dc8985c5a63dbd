//! Text encodings of field specifications and elements.
//!
//! An element of F_{q^n}, q = p^h, is written as n·h base-p digits (0-9,
//! then a-z), least significant first: the h digits of the α⁰ coefficient,
//! then those of α¹, and so on. The same element may instead be written as n
//! comma-separated decimal coefficients, each an F_q element in packed form
//! Σ d_j p^j. A single decimal whose length differs from n·h is read as an
//! element of F_q. Scalars in F_q are always decimal packed values.

use anyhow::{anyhow, bail, Context, Result};
use trace_products_core::field::{find_irreducible_special, FieldCtx, SpecialForm};
use trace_products_core::{Elem, TowerCtx};

/// Splits a prime power q into (p, h).
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        bail!("{q} is not a prime power");
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q ≥ 2");
    let (mut rest, mut h) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        h += 1;
    }
    if rest != 1 {
        bail!("{q} is not a prime power");
    }
    Ok((p, h))
}

/// Parses a tower shape name.
pub fn parse_form(name: &str) -> Result<Option<SpecialForm>> {
    Ok(match name {
        "general" => None,
        "pure-cubic" => Some(SpecialForm::PureCubic),
        "pure-quartic" => Some(SpecialForm::PureQuartic),
        "biquadratic" => Some(SpecialForm::Biquadratic),
        "artin-schreier-cubic" => Some(SpecialForm::ArtinSchreierCubic),
        _ => bail!("unknown tower tag {name:?}"),
    })
}

/// Builds F_{q^n}: from an explicit minimal polynomial (comma-separated F_q
/// coefficients, constant first), from a special shape, or the default.
pub fn build_tower(q: u64, n: u32, modulus: Option<&str>, tag: Option<&str>) -> Result<TowerCtx> {
    let (p, h) = prime_power(q)?;
    let base = FieldCtx::new(p, h, None)?;
    let form = tag.map(parse_form).transpose()?.flatten();
    match (modulus, form) {
        (Some(_), Some(_)) => bail!("--field and --tower-tag are mutually exclusive"),
        (Some(m), None) => {
            let coeffs = m
                .split(',')
                .map(|c| c.trim().parse::<u32>().with_context(|| format!("bad coefficient {c:?}")))
                .collect::<Result<Vec<_>>>()?;
            Ok(TowerCtx::new(base, n, Some(&coeffs), None)?)
        }
        (None, Some(form)) => {
            if form.degree() != n {
                bail!("{} towers have degree {}", form.name(), form.degree());
            }
            Ok(find_irreducible_special(&base, form)?)
        }
        (None, None) => Ok(TowerCtx::new(base, n, None, None)?),
    }
}

fn digit_value(c: char, p: u32) -> Result<u32> {
    let d = c.to_digit(36).ok_or_else(|| anyhow!("bad digit {c:?}"))?;
    if d >= p {
        bail!("digit {c:?} out of range for p = {p}");
    }
    Ok(d)
}

/// Parses an F_q scalar.
pub fn parse_scalar(f: &FieldCtx, s: &str) -> Result<u32> {
    let v: u32 = s.trim().parse().with_context(|| format!("bad scalar {s:?}"))?;
    if !f.contains(v) {
        bail!("scalar {v} is not in F_{}", f.q());
    }
    Ok(v)
}

/// Parses an element of the tower.
pub fn parse_element(tower: &TowerCtx, s: &str) -> Result<Elem> {
    let s = s.trim();
    let n = tower.n() as usize;
    let h = tower.base().h() as usize;
    let p = tower.p();
    if !s.contains(',') && s.chars().count() != n * h {
        return parse_scalar(tower.base(), s);
    }
    if s.contains(',') {
        let coeffs = s
            .split(',')
            .map(|c| parse_scalar(tower.base(), c))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != n {
            bail!("expected {n} coefficients, got {}", coeffs.len());
        }
        return Ok(tower.from_coords(&coeffs)?);
    }
    let digits: Vec<char> = s.chars().collect();
    if digits.len() != n * h {
        bail!("expected {} base-{p} digits, got {:?}", n * h, s);
    }
    let mut value: u64 = 0;
    for &c in digits.iter().rev() {
        value = value * p as u64 + digit_value(c, p)? as u64;
    }
    Ok(value as Elem)
}

/// Formats an element in the digit form when p ≤ 36, else the list form.
pub fn format_element(tower: &TowerCtx, x: Elem) -> String {
    let p = tower.p();
    if p > 36 {
        return tower.coords(x).iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    }
    let len = (tower.n() * tower.base().h()) as usize;
    let mut out = String::with_capacity(len);
    let mut v = x;
    for _ in 0..len {
        out.push(char::from_digit(v % p, 36).expect("digit below 36"));
        v /= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trace_products_core::default_tower;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(2).unwrap(), (2, 1));
        assert!(prime_power(12).is_err());
        assert!(prime_power(1).is_err());
    }

    #[test]
    fn round_trip() {
        for (p, h, n) in [(2, 1, 5), (3, 2, 2), (13, 1, 2), (2, 3, 2)] {
            let t = default_tower(p, h, n).unwrap();
            for x in t.elements() {
                let s = format_element(&t, x);
                assert_eq!(parse_element(&t, &s).unwrap(), x);
                let list = t.coords(x).iter().map(u32::to_string).collect::<Vec<_>>().join(",");
                assert_eq!(parse_element(&t, &list).unwrap(), x);
            }
        }
    }

    #[test]
    fn alpha_power_order() {
        let t = default_tower(2, 1, 5).unwrap();
        assert_eq!(parse_element(&t, "00001").unwrap(), t.pow(t.alpha(), 4));
        assert_eq!(parse_element(&t, "01000").unwrap(), t.alpha());
        assert_eq!(parse_element(&t, "1").unwrap(), 1);
        assert!(parse_element(&t, "0002").is_err());
        assert!(parse_element(&t, "00002").is_err());
    }

    #[test]
    fn towers() {
        let t = build_tower(7, 3, None, Some("pure-cubic")).unwrap();
        assert_eq!(t.tag().name(), "pure-cubic");
        assert!(build_tower(7, 2, None, Some("pure-cubic")).is_err());
        let t = build_tower(3, 2, Some("1,0,1"), None).unwrap();
        assert_eq!(t.minpoly(), &[1, 0, 1]);
        assert!(build_tower(3, 2, Some("2,0,1"), None).is_err());
        assert!(build_tower(3, 2, Some("0,0,1"), None).is_err());
    }
}
