//! Membership of β in T_aT_b = {x·y : Tr(x) = a, Tr(y) = b}.
//!
//! Every decision reduces to one of three canonical cases: T_0T_0, T_0T_1
//! and T_1T_1. The closed-form deciders for degrees 2, 3 and 4 live in the
//! `deg*` modules; [`oracle`] is the exhaustive ground truth.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Elem, TowerCtx};

pub mod deg2;
pub mod deg3;
pub mod deg4;
mod fiber;
mod one;
mod oracle;
mod survey;

pub use fiber::{element_with_trace, TraceFiber};
pub use one::one_in;
pub use oracle::{oracle, oracle_in_fiber, product_set};
pub use survey::{survey, survey_row, Survey, SurveyMethod, SurveyRow};

/// The three canonical membership questions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    T0T0,
    T0T1,
    T1T1,
}

impl Case {
    /// The trace pair (a, b) this case stands for.
    pub fn traces(self) -> (u32, u32) {
        match self {
            Case::T0T0 => (0, 0),
            Case::T0T1 => (0, 1),
            Case::T1T1 => (1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::T0T0 => "T0T0",
            Case::T0T1 => "T0T1",
            Case::T1T1 => "T1T1",
        }
    }

    pub const ALL: [Case; 3] = [Case::T0T0, Case::T0T1, Case::T1T1];
}

/// A trace pair together with its canonical case.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TracePair {
    pub a: u32,
    pub b: u32,
    pub case: Case,
    /// ab when both traces are nonzero, else 1.
    pub scale: u32,
}

/// Maps (a, b, β) to its canonical case and rescaled target, preserving membership.
pub fn normalize(tower: &TowerCtx, a: u32, b: u32, beta: Elem) -> (TracePair, Elem) {
    let f = tower.base();
    let (case, scale) = match (a == 0, b == 0) {
        (true, true) => (Case::T0T0, 1),
        (true, false) | (false, true) => (Case::T0T1, 1),
        (false, false) => (Case::T1T1, f.mul(a, b)),
    };
    let inv = f.inv(scale).expect("nonzero scale");
    let beta = tower.scalar_mul(inv, beta);
    (TracePair { a, b, case, scale }, beta)
}

/// Which argument produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    Oracle,
    /// β = 0 lies in T_aT_b iff a = 0 or b = 0.
    ZeroProduct,
    /// Degree n ≥ 5, or n = 4 with q ∈ {2, 3}: every nonzero β is a member.
    MainTheorem,
    /// Degree 1: T_aT_b = {ab}.
    TrivialExtension,
    Deg2T0T0,
    Deg2T0T1,
    Deg2T1T1,
    Deg2Char2T0T0,
    Deg2Char2T0T1,
    Deg2Char2T1T1Quadratic,
    Deg2Char2T1T1Trace,
    PureCubicT0T0,
    PureCubicT0T0Char2,
    ArtinSchreierT0T0,
    CyclicGaloisForm,
    CyclicGaloisPrinted,
    PureCubicT0T1,
    PureCubicT1T1,
    GenericCubic,
    BiquadraticT0T0,
    BiquadraticT0T1,
    PureQuarticT0T0,
    PureQuarticT0T1,
}

impl Criterion {
    pub fn id(self) -> &'static str {
        match self {
            Criterion::Oracle => "oracle",
            Criterion::ZeroProduct => "zero-product",
            Criterion::MainTheorem => "main-theorem",
            Criterion::TrivialExtension => "trivial-extension",
            Criterion::Deg2T0T0 => "deg2-t0t0",
            Criterion::Deg2T0T1 => "deg2-t0t1",
            Criterion::Deg2T1T1 => "deg2-t1t1",
            Criterion::Deg2Char2T0T0 => "deg2-char2-t0t0",
            Criterion::Deg2Char2T0T1 => "deg2-char2-t0t1",
            Criterion::Deg2Char2T1T1Quadratic => "deg2-char2-t1t1-quadratic",
            Criterion::Deg2Char2T1T1Trace => "deg2-char2-t1t1-trace",
            Criterion::PureCubicT0T0 => "pure-cubic-t0t0",
            Criterion::PureCubicT0T0Char2 => "pure-cubic-t0t0-char2",
            Criterion::ArtinSchreierT0T0 => "artin-schreier-t0t0",
            Criterion::CyclicGaloisForm => "cyclic-galois-form",
            Criterion::CyclicGaloisPrinted => "cyclic-galois-printed",
            Criterion::PureCubicT0T1 => "pure-cubic-t0t1",
            Criterion::PureCubicT1T1 => "pure-cubic-t1t1-curve",
            Criterion::GenericCubic => "generic-cubic-form",
            Criterion::BiquadraticT0T0 => "biquadratic-t0t0",
            Criterion::BiquadraticT0T1 => "biquadratic-t0t1",
            Criterion::PureQuarticT0T0 => "pure-quartic-t0t0",
            Criterion::PureQuarticT0T1 => "pure-quartic-t0t1",
        }
    }

    pub fn is_oracle(self) -> bool {
        self == Criterion::Oracle
    }
}

/// Where a certificate's witness came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm(Criterion),
    Oracle,
}

/// A validated factorization β = x·y with Tr(x) = a and Tr(y) = b.
///
/// The only constructor checks all three equations, so a value of this
/// type is always a correct witness for the tower it was built in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    x: Elem,
    y: Elem,
    a: u32,
    b: u32,
    beta: Elem,
    provenance: Provenance,
}

impl Certificate {
    /// Returns a certificate iff Tr(x) = a, Tr(y) = b and x·y = β.
    pub fn new(tower: &TowerCtx, x: Elem, y: Elem, a: u32, b: u32, beta: Elem, provenance: Provenance) -> Option<Self> {
        let ok = tower.contains(x)
            && tower.contains(y)
            && tower.trace(x) == a
            && tower.trace(y) == b
            && tower.mul(x, y) == beta;
        ok.then_some(Certificate { x, y, a, b, beta, provenance })
    }

    /// Rechecks the three defining equations in `tower`.
    pub fn validates(&self, tower: &TowerCtx) -> bool {
        Certificate::new(tower, self.x, self.y, self.a, self.b, self.beta, self.provenance).is_some()
    }

    pub fn x(&self) -> Elem {
        self.x
    }

    pub fn y(&self) -> Elem {
        self.y
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn beta(&self) -> Elem {
        self.beta
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// A closed-form witness or verdict that did not survive checking.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub criterion: Criterion,
    pub case: Case,
    pub beta: Elem,
    pub kind: DivergenceKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivergenceKind {
    /// A printed witness failed; `trace_x`, `trace_y` and `product` are what it actually gives.
    WitnessFailed {
        label: &'static str,
        x: Elem,
        y: Elem,
        trace_x: u32,
        trace_y: u32,
        product: Elem,
    },
    /// The criterion claimed membership but no witness exists.
    VerdictMismatch { claimed: bool },
    /// No closed-form witness covers this β; the oracle supplied one.
    Uncovered { label: &'static str },
}

/// Outcome of a membership decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub member: bool,
    pub certificate: Option<Certificate>,
    pub criterion: Criterion,
    pub divergences: Vec<Divergence>,
}

/// Collects witness attempts for one canonical decision.
pub(crate) struct Attempt<'t> {
    tower: &'t TowerCtx,
    case: Case,
    beta: Elem,
    criterion: Criterion,
    divergences: Vec<Divergence>,
}

impl<'t> Attempt<'t> {
    pub(crate) fn new(tower: &'t TowerCtx, case: Case, beta: Elem, criterion: Criterion) -> Self {
        Attempt { tower, case, beta, criterion, divergences: Vec::new() }
    }

    /// Tries a witness; failed witnesses are recorded when `label` is given.
    pub(crate) fn try_pair(&mut self, x: Elem, y: Elem, label: Option<&'static str>) -> Option<Certificate> {
        let (a, b) = self.case.traces();
        let cert = Certificate::new(
            self.tower,
            x,
            y,
            a,
            b,
            self.beta,
            Provenance::ClosedForm(self.criterion),
        );
        if cert.is_none() {
            if let Some(label) = label {
                self.divergences.push(Divergence {
                    criterion: self.criterion,
                    case: self.case,
                    beta: self.beta,
                    kind: DivergenceKind::WitnessFailed {
                        label,
                        x,
                        y,
                        trace_x: self.tower.trace(x),
                        trace_y: self.tower.trace(y),
                        product: self.tower.mul(x, y),
                    },
                });
            }
        }
        cert
    }

    pub(crate) fn uncovered(&mut self, label: &'static str) {
        self.divergences.push(Divergence {
            criterion: self.criterion,
            case: self.case,
            beta: self.beta,
            kind: DivergenceKind::Uncovered { label },
        });
    }

    /// Verdict "member"; without a witness the oracle supplies one or overrules.
    pub(crate) fn member(mut self, cert: Option<Certificate>) -> Verdict {
        if let Some(c) = cert {
            return Verdict { member: true, certificate: Some(c), criterion: self.criterion, divergences: self.divergences };
        }
        let (a, b) = self.case.traces();
        let fallback = oracle(self.tower, a, b, self.beta);
        if !fallback.member {
            self.divergences.push(Divergence {
                criterion: self.criterion,
                case: self.case,
                beta: self.beta,
                kind: DivergenceKind::VerdictMismatch { claimed: true },
            });
            return Verdict { member: false, certificate: None, criterion: Criterion::Oracle, divergences: self.divergences };
        }
        Verdict { member: true, certificate: fallback.certificate, criterion: self.criterion, divergences: self.divergences }
    }

    pub(crate) fn non_member(self) -> Verdict {
        Verdict { member: false, certificate: None, criterion: self.criterion, divergences: self.divergences }
    }
}

/// Decides β ∈ T_aT_b in the canonical case `case`, using the closed forms
/// that apply to the tower and the oracle otherwise.
pub fn decide_canonical(tower: &TowerCtx, case: Case, beta: Elem) -> Result<Verdict> {
    if !tower.contains(beta) {
        return Err(Error::InvalidElement);
    }
    let (a, b) = case.traces();
    if beta == 0 {
        return Ok(zero_verdict(tower, a, b));
    }
    match tower.n() {
        1 => {
            let mut at = Attempt::new(tower, case, beta, Criterion::TrivialExtension);
            if beta == tower.base().mul(a, b) {
                let cert = at.try_pair(a, b, None);
                Ok(at.member(cert))
            } else {
                Ok(at.non_member())
            }
        }
        2 => deg2::decide(tower, case, beta),
        3 => deg3::decide(tower, case, beta),
        4 => deg4::decide(tower, case, beta),
        _ => {
            let at = Attempt::new(tower, case, beta, Criterion::MainTheorem);
            Ok(at.member(None))
        }
    }
}

/// Decides β ∈ T_aT_b for arbitrary traces.
pub fn decide(tower: &TowerCtx, a: u32, b: u32, beta: Elem) -> Result<Verdict> {
    let f = tower.base();
    if !f.contains(a) || !f.contains(b) || !tower.contains(beta) {
        return Err(Error::InvalidElement);
    }
    if beta == 0 {
        return Ok(zero_verdict(tower, a, b));
    }
    let (pair, scaled) = normalize(tower, a, b, beta);
    let mut v = decide_canonical(tower, pair.case, scaled)?;
    v.certificate = v.certificate.map(|c| lift(tower, &pair, beta, &c));
    Ok(v)
}

/// Transports a canonical certificate back to the original trace pair.
fn lift(tower: &TowerCtx, pair: &TracePair, beta: Elem, c: &Certificate) -> Certificate {
    let f = tower.base();
    let (x, y) = match (pair.a == 0, pair.b == 0) {
        (true, true) => (c.x, c.y),
        (true, false) => {
            let inv = f.inv(pair.b).expect("nonzero");
            (tower.scalar_mul(inv, c.x), tower.scalar_mul(pair.b, c.y))
        }
        (false, true) => {
            let inv = f.inv(pair.a).expect("nonzero");
            (tower.scalar_mul(pair.a, c.y), tower.scalar_mul(inv, c.x))
        }
        (false, false) => (tower.scalar_mul(pair.a, c.x), tower.scalar_mul(pair.b, c.y)),
    };
    Certificate::new(tower, x, y, pair.a, pair.b, beta, c.provenance).expect("lifting preserves validity")
}

fn zero_verdict(tower: &TowerCtx, a: u32, b: u32) -> Verdict {
    let certificate = if a == 0 {
        Certificate::new(tower, 0, element_with_trace(tower, b), a, b, 0, Provenance::ClosedForm(Criterion::ZeroProduct))
    } else if b == 0 {
        Certificate::new(tower, element_with_trace(tower, a), 0, a, b, 0, Provenance::ClosedForm(Criterion::ZeroProduct))
    } else {
        None
    };
    Verdict {
        member: certificate.is_some(),
        certificate,
        criterion: Criterion::ZeroProduct,
        divergences: Vec::new(),
    }
}
