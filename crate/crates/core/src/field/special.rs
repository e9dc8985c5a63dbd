//! Towers whose minimal polynomial has one of the shapes with closed-form
//! trace formulas.

use alloc::vec;
use alloc::vec::Vec;

use super::base::{checked_size, FieldCtx};
use super::poly;
use super::tower::TowerCtx;
use crate::error::{Error, Result};

/// Shape of a tower's minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TowerTag {
    General,
    /// X^3 - d.
    PureCubic(u32),
    /// X^4 - d.
    PureQuartic(u32),
    /// X^4 + X^2 + d.
    Biquadratic(u32),
    /// X^3 - X + a, characteristic 3.
    ArtinSchreierCubic(u32),
}

/// Shape requested from [`find_irreducible_special`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialForm {
    PureCubic,
    PureQuartic,
    Biquadratic,
    ArtinSchreierCubic,
}

impl TowerTag {
    /// The minimal polynomial this tag stands for, or `None` for `General`.
    pub fn polynomial(self, f: &FieldCtx) -> Option<Vec<u32>> {
        match self {
            TowerTag::General => None,
            TowerTag::PureCubic(d) => Some(vec![f.neg(d), 0, 0, 1]),
            TowerTag::PureQuartic(d) => Some(vec![f.neg(d), 0, 0, 0, 1]),
            TowerTag::Biquadratic(d) => Some(vec![d, 0, 1, 0, 1]),
            TowerTag::ArtinSchreierCubic(a) => Some(vec![a, f.neg(1), 0, 1]),
        }
    }

    /// Reads the tag off a minimal polynomial.
    pub fn detect(f: &FieldCtx, m: &[u32]) -> TowerTag {
        let candidates = match m.len() {
            4 => [
                TowerTag::PureCubic(f.neg(m[0])),
                TowerTag::ArtinSchreierCubic(m[0]),
            ],
            5 => [TowerTag::PureQuartic(f.neg(m[0])), TowerTag::Biquadratic(m[0])],
            _ => return TowerTag::General,
        };
        for t in candidates {
            if matches!(t, TowerTag::ArtinSchreierCubic(_)) && f.p() != 3 {
                continue;
            }
            if t.polynomial(f).as_deref() == Some(m) {
                return t;
            }
        }
        TowerTag::General
    }

    /// The parameter d (or a) of the special form.
    pub fn parameter(self) -> Option<u32> {
        match self {
            TowerTag::General => None,
            TowerTag::PureCubic(d)
            | TowerTag::PureQuartic(d)
            | TowerTag::Biquadratic(d)
            | TowerTag::ArtinSchreierCubic(d) => Some(d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TowerTag::General => "general",
            TowerTag::PureCubic(_) => "pure-cubic",
            TowerTag::PureQuartic(_) => "pure-quartic",
            TowerTag::Biquadratic(_) => "biquadratic",
            TowerTag::ArtinSchreierCubic(_) => "artin-schreier-cubic",
        }
    }
}

impl SpecialForm {
    pub fn degree(self) -> u32 {
        match self {
            SpecialForm::PureCubic | SpecialForm::ArtinSchreierCubic => 3,
            SpecialForm::PureQuartic | SpecialForm::Biquadratic => 4,
        }
    }

    fn tag(self, d: u32) -> TowerTag {
        match self {
            SpecialForm::PureCubic => TowerTag::PureCubic(d),
            SpecialForm::PureQuartic => TowerTag::PureQuartic(d),
            SpecialForm::Biquadratic => TowerTag::Biquadratic(d),
            SpecialForm::ArtinSchreierCubic => TowerTag::ArtinSchreierCubic(d),
        }
    }

    pub fn name(self) -> &'static str {
        self.tag(0).name()
    }
}

/// The tower of the requested shape with the smallest parameter in index order.
pub fn find_irreducible_special(base: &FieldCtx, form: SpecialForm) -> Result<TowerCtx> {
    let q = base.q();
    let n = form.degree();
    let exists = match form {
        SpecialForm::PureCubic => q % 3 == 1,
        SpecialForm::PureQuartic => q % 4 == 1,
        SpecialForm::Biquadratic => base.p() != 2,
        SpecialForm::ArtinSchreierCubic => base.p() == 3,
    };
    if !exists {
        return Err(Error::NoSuchForm);
    }
    let Some(size) = checked_size(q as u64, n) else {
        return Err(Error::SizeBudgetExceeded { p: base.p() as u64, h: base.h(), n });
    };
    for d in base.elements() {
        if form == SpecialForm::Biquadratic {
            let one_minus_4d = base.sub(1, base.mul(base.from_int(4), d));
            if base.is_square(one_minus_4d) {
                continue;
            }
        }
        let tag = form.tag(d);
        let m = tag.polynomial(base).expect("special form");
        if poly::is_irreducible(base, &m) {
            return Ok(TowerCtx::assemble(base.clone(), m, tag, size as u32));
        }
    }
    Err(Error::NoSuchForm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, h: u32) -> FieldCtx {
        FieldCtx::new(p, h, None).unwrap()
    }

    #[test]
    fn pure_cubic_existence_follows_q_mod_3() {
        assert_eq!(find_irreducible_special(&field(2, 1), SpecialForm::PureCubic), Err(Error::NoSuchForm));
        assert_eq!(find_irreducible_special(&field(5, 1), SpecialForm::PureCubic), Err(Error::NoSuchForm));
        let t = find_irreducible_special(&field(2, 2), SpecialForm::PureCubic).unwrap();
        let TowerTag::PureCubic(d) = t.tag() else { panic!() };
        // Non-cubes of F_4 are exactly the elements other than 0 and 1.
        assert!(d > 1);
        let t7 = find_irreducible_special(&field(7, 1), SpecialForm::PureCubic).unwrap();
        assert_eq!(t7.tag(), TowerTag::PureCubic(2));
        assert_eq!(t7.minpoly(), &[5, 0, 0, 1]);
    }

    #[test]
    fn biquadratic_over_f3() {
        let t = find_irreducible_special(&field(3, 1), SpecialForm::Biquadratic).unwrap();
        let TowerTag::Biquadratic(d) = t.tag() else { panic!() };
        let f = t.base();
        // 1 - 4d must be a non-square mod 3, i.e. equal to 2.
        assert_eq!(f.sub(1, f.mul(4 % 3, d)), 2);
        // Brute force: no root and no monic quadratic factor.
        let m = t.minpoly();
        for r in 0..3 {
            assert_ne!(poly::eval(f, m, r), 0);
        }
        for c0 in 0..3 {
            for c1 in 0..3 {
                assert!(!poly::rem(f, m, &[c0, c1, 1]).is_empty());
            }
        }
    }

    #[test]
    fn biquadratic_skips_reducible_candidate() {
        // Over F_5, d = 1 satisfies the square-class condition but
        // X^4 + X^2 + 1 = (X^2 + X + 1)(X^2 - X + 1).
        let f = field(5, 1);
        assert!(!f.is_square(f.sub(1, f.mul(4, 1))));
        assert!(!poly::is_irreducible(&f, &[1, 0, 1, 0, 1]));
        let t = find_irreducible_special(&f, SpecialForm::Biquadratic).unwrap();
        assert_ne!(t.tag(), TowerTag::Biquadratic(1));
        assert!(poly::is_irreducible(&f, t.minpoly()));
    }

    #[test]
    fn artin_schreier_and_quartic() {
        let t = find_irreducible_special(&field(3, 1), SpecialForm::ArtinSchreierCubic).unwrap();
        assert_eq!(t.tag(), TowerTag::ArtinSchreierCubic(1));
        assert_eq!(find_irreducible_special(&field(2, 1), SpecialForm::ArtinSchreierCubic), Err(Error::NoSuchForm));
        let t = find_irreducible_special(&field(5, 1), SpecialForm::PureQuartic).unwrap();
        assert_eq!(t.tag(), TowerTag::PureQuartic(2));
        assert_eq!(find_irreducible_special(&field(3, 1), SpecialForm::PureQuartic), Err(Error::NoSuchForm));
    }

    #[test]
    fn tags_are_detected_and_checked() {
        let f = field(7, 1);
        let t = TowerCtx::new(f.clone(), 3, Some(&[4, 0, 0, 1]), None).unwrap();
        assert_eq!(t.tag(), TowerTag::PureCubic(3));
        assert_eq!(
            TowerCtx::new(f.clone(), 3, Some(&[4, 0, 0, 1]), Some(TowerTag::PureCubic(2))).unwrap_err(),
            Error::TagMismatch
        );
        let g = TowerCtx::new(f, 3, Some(&[4, 0, 0, 1]), Some(TowerTag::General)).unwrap();
        assert_eq!(g.tag(), TowerTag::General);
    }
}
