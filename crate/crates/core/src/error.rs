use core::fmt;

/// Errors produced by field construction, deciders and sweeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested characteristic is not prime.
    NotPrime(u64),
    /// A modulus or minimal polynomial is not irreducible.
    Reducible,
    /// A modulus or minimal polynomial is not monic of the expected degree.
    BadModulus { expected_degree: u32 },
    /// q^n exceeds the 2^31 element budget.
    SizeBudgetExceeded { p: u64, h: u32, n: u32 },
    /// Inversion of zero.
    DivisionByZero,
    /// Leading coefficient of a quadratic is zero.
    NotAField,
    /// No irreducible polynomial of the requested special form exists over this field.
    NoSuchForm,
    /// An operation was called on a tower of the wrong degree.
    WrongDegree { expected: u32, got: u32 },
    /// The tower is inseparable for the requested criterion.
    InseparableTower,
    /// No closed-form criterion applies to this tower/case.
    CriterionUnavailable,
    /// `one_in` has no closed form for this (q, n, case).
    UnsupportedCase,
    /// A curve count was requested for alpha = 0.
    ZeroTarget,
    /// A linearized polynomial of q-degree 0 (or identically zero) was given where a curve is needed.
    DegenerateF,
    /// A club was requested with gamma = 0.
    ZeroGamma,
    /// A tower tag does not match its minimal polynomial.
    TagMismatch,
    /// An element index or coordinate is out of range for its context.
    InvalidElement,
    /// A documented precondition does not hold.
    Precondition(&'static str),
    /// The prescribed-coefficient search found no admissible element.
    NoWitnessFound,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Reducible => write!(f, "polynomial is reducible"),
            Error::BadModulus { expected_degree } => {
                write!(f, "modulus must be monic of degree {expected_degree}")
            }
            Error::SizeBudgetExceeded { p, h, n } => {
                write!(f, "field of order ({p}^{h})^{n} exceeds the 2^31 budget")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotAField => write!(f, "leading coefficient is zero"),
            Error::NoSuchForm => write!(f, "no irreducible polynomial of that form exists"),
            Error::WrongDegree { expected, got } => {
                write!(f, "expected extension degree {expected}, got {got}")
            }
            Error::InseparableTower => write!(f, "extension is inseparable"),
            Error::CriterionUnavailable => write!(f, "no closed-form criterion for this case"),
            Error::UnsupportedCase => write!(f, "unsupported case"),
            Error::ZeroTarget => write!(f, "target element is zero"),
            Error::DegenerateF => write!(f, "linearized polynomial has q-degree 0"),
            Error::ZeroGamma => write!(f, "club parameter is zero"),
            Error::TagMismatch => write!(f, "tower tag does not match the minimal polynomial"),
            Error::InvalidElement => write!(f, "element out of range"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::NoWitnessFound => write!(f, "no witness found"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
