//! Arithmetic in F_p, F_q = F_p[u]/(g) and F_{q^n} = F_q[α]/(m).

mod base;
pub(crate) mod digits;
pub mod linalg;
mod minpoly;
pub mod poly;
mod quadratic;
mod special;
mod tower;

pub use base::{FieldCtx, ELEMENT_BUDGET};
pub use special::{find_irreducible_special, SpecialForm, TowerTag};
pub use tower::{Elem, TowerCtx};

/// Convenience constructor for F_{(p^h)^n} with default moduli.
pub fn default_tower(p: u64, h: u32, n: u32) -> crate::Result<TowerCtx> {
    TowerCtx::new(FieldCtx::new(p, h, None)?, n, None, None)
}
