//! Planar functions, presemifields of the form L₁(x)L₂(y) − xy and
//! irreducible polynomials with two prescribed coefficients.

mod planar;
mod prescribed;
mod semifield;

pub use planar::{pn_trace_square_sweep, trace_one_by_normalization, FunctionTable, PnReport};
pub use prescribed::{irreducible_with_prescribed, PrescribedPoly};
pub use semifield::{
    is_presemifield, is_presemifield_by_columns, trace_semifield_bound_check, DegenerateSummary, SemifieldReport,
    DEFAULT_SEMIFIELD_BUDGET,
};
