use super::Case;
use crate::error::{Error, Result};
use crate::field::FieldCtx;

/// Whether 1 ∈ T_0T_0, T_0T_1 or T_1T_1 for F_{q^n}/F_q, from q and n alone.
///
/// Cases without a closed answer return [`Error::UnsupportedCase`].
pub fn one_in(base: &FieldCtx, n: u32, case: Case) -> Result<bool> {
    let q = base.q();
    let p = base.p();
    match (n, case) {
        (0, _) => Err(Error::Precondition("extension degree must be positive")),
        (1, c) => Ok(c == Case::T1T1),
        (2, Case::T0T0) => Ok(true),
        (2, Case::T0T1) => Ok(false),
        // β = 1 in the degree-2 T_1T_1 criteria. The discriminant of the
        // minimal polynomial is a non-square, so in odd characteristic 1 is a
        // member iff −3 is zero or a non-square. In characteristic 2 the
        // quadratic X² + X + a₂/a₁² + 1 is solvable iff q is an odd power of 2.
        (2, Case::T1T1) => Ok(if p == 2 {
            base.h() % 2 == 1
        } else {
            p == 3 || !base.is_square(base.from_int(-3))
        }),
        (3, Case::T0T0) => Ok(q % 3 != 2),
        (3, Case::T0T1) if q % 3 == 1 => Ok(true),
        (3, Case::T0T1) => Err(Error::UnsupportedCase),
        (3, Case::T1T1) => Ok(p == 2),
        (4, _) if q <= 3 => Ok(true),
        (4, Case::T0T0) => Ok(true),
        (4, Case::T0T1) if p != 2 => Ok(true),
        (4, _) => Err(Error::UnsupportedCase),
        _ => Ok(true),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;
    use crate::trace_sets::oracle;

    #[test]
    fn agrees_with_oracle() {
        for (p, h) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)] {
            for n in 1..=5u32 {
                let t = default_tower(p, h, n);
                let Ok(t) = t else { continue };
                if t.size() > 1 << 14 {
                    continue;
                }
                for case in Case::ALL {
                    let (a, b) = case.traces();
                    if let Ok(claim) = one_in(t.base(), n, case) {
                        assert_eq!(claim, oracle(&t, a, b, 1).member, "{p}^{h} n={n} {case:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn listed_values() {
        let f5 = FieldCtx::new(5, 1, None).unwrap();
        let f3 = FieldCtx::new(3, 1, None).unwrap();
        assert!(one_in(&f5, 2, Case::T0T0).unwrap());
        assert!(!one_in(&f5, 3, Case::T0T0).unwrap());
        assert!(!one_in(&f3, 3, Case::T1T1).unwrap());
        assert_eq!(one_in(&f5, 4, Case::T1T1), Err(Error::UnsupportedCase));
    }
}
