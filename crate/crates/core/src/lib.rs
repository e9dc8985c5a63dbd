//! Products of elements with prescribed trace in finite field extensions.
//!
//! The crate decides whether β ∈ F_{q^n} can be written as x·y with
//! Tr(x) = a and Tr(y) = b, builds validated witnesses, counts points on the
//! associated Artin–Schreier curves and applies the results to linear sets,
//! planar functions, presemifields and irreducible polynomials.
#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod applications;
pub mod curves;
pub mod linear_sets;
pub mod trace_sets;

pub use error::{Error, Result};
pub use field::{default_tower, Elem, FieldCtx, TowerCtx, TowerTag};
