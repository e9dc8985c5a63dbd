//! Cubic extensions: pure cubics X³ − d, Artin–Schreier cubics X³ − X + a
//! in characteristic 3, normal-basis forms and the generic quadratic-form
//! criterion for arbitrary cubic towers.

use alloc::vec;
use alloc::vec::Vec;

use super::{oracle, Attempt, Case, Criterion, TraceFiber, Verdict};
use crate::error::{Error, Result};
use crate::field::{linalg, Elem, FieldCtx, TowerCtx, TowerTag};

fn check_degree(tower: &TowerCtx) -> Result<()> {
    if tower.n() != 3 {
        return Err(Error::WrongDegree { expected: 3, got: tower.n() });
    }
    Ok(())
}

/// Decides the canonical case `case` for β in a degree-3 tower.
pub fn decide(tower: &TowerCtx, case: Case, beta: Elem) -> Result<Verdict> {
    check_degree(tower)?;
    if beta == 0 {
        return super::decide_canonical(tower, case, 0);
    }
    Ok(match (tower.tag(), case) {
        (TowerTag::PureCubic(d), Case::T0T0) => pure_t0t0(tower, d, beta),
        (TowerTag::PureCubic(d), Case::T0T1) => pure_t0t1(tower, d, beta),
        (TowerTag::PureCubic(_), Case::T1T1) => pure_t1t1(tower, beta),
        (TowerTag::ArtinSchreierCubic(_), Case::T0T0) => artin_schreier_t0t0(tower, beta),
        (_, Case::T0T0) => generic(tower, Case::T0T0, beta),
        (_, Case::T0T1) => generic(tower, Case::T0T1, beta),
        (_, Case::T1T1) => oracle(tower, 1, 1, beta),
    })
}

/// C_β(x) = Tr(β·x^q·x^{q²}) = N(x)·Tr(β/x).
pub fn cubic_form(tower: &TowerCtx, beta: Elem, x: Elem) -> u32 {
    let conj = tower.mul(tower.frobenius(x, 1), tower.frobenius(x, 2));
    tower.trace(tower.mul(beta, conj))
}

/// β ∈ T_0T_ε iff C_β vanishes at some nonzero x of trace ε.
pub fn generic(tower: &TowerCtx, case: Case, beta: Elem) -> Verdict {
    let mut at = Attempt::new(tower, case, beta, Criterion::GenericCubic);
    let eps = match case {
        Case::T0T0 => 0,
        Case::T0T1 => 1,
        Case::T1T1 => return oracle(tower, 1, 1, beta),
    };
    let zero = TraceFiber::new(tower, eps).find(|&x| x != 0 && cubic_form(tower, beta, x) == 0);
    match zero {
        None => at.non_member(),
        Some(x) => {
            let cert = at.try_pair(tower.div(beta, x).expect("nonzero"), x, Some("form-zero"));
            at.member(cert)
        }
    }
}

/// Coordinates (b₀, b₁, b₂) and the parameter d of a pure cubic.
fn pure_coords(tower: &TowerCtx, beta: Elem) -> [u32; 3] {
    let c = tower.coords(beta);
    [c[0], c[1], c[2]]
}

/// The pure-cubic T_0T_0 criterion for β ≠ 0: b₀² − 4db₁b₂ a square
/// (characteristic ≠ 2), or b₀ = 0 or Tr(db₁b₂/b₀²) = 0 (characteristic 2).
pub fn pure_t0t0_criterion(tower: &TowerCtx, beta: Elem) -> Result<bool> {
    check_degree(tower)?;
    let TowerTag::PureCubic(d) = tower.tag() else {
        return Err(Error::CriterionUnavailable);
    };
    let f = tower.base();
    let [b0, b1, b2] = pure_coords(tower, beta);
    let db1b2 = f.mul(d, f.mul(b1, b2));
    Ok(if f.p() == 2 {
        b0 == 0 || f.abs_trace(f.div(db1b2, f.mul(b0, b0)).expect("nonzero")) == 0
    } else {
        f.is_square(f.sub(f.mul(b0, b0), f.mul(f.from_int(4), db1b2)))
    })
}

fn pure_t0t0(tower: &TowerCtx, d: u32, beta: Elem) -> Verdict {
    let f = tower.base();
    let criterion = if f.p() == 2 { Criterion::PureCubicT0T0Char2 } else { Criterion::PureCubicT0T0 };
    let mut at = Attempt::new(tower, Case::T0T0, beta, criterion);
    if !pure_t0t0_criterion(tower, beta).expect("pure cubic") {
        return at.non_member();
    }
    // A nonzero zero of b₁x₁² − b₀x₁x₂ + db₂x₂² gives x = x₁α + x₂α².
    let [b0, b1, b2] = pure_coords(tower, beta);
    let point = if b1 == 0 {
        Some((1, 0))
    } else {
        let roots = f.solve_quadratic(b1, f.neg(b0), f.mul(d, b2)).expect("b1 nonzero");
        roots.first().map(|&x1| (x1, 1))
    };
    let cert = point.and_then(|(x1, x2)| {
        let x = tower.compose(&[0, x1, x2]);
        let y = tower.div(beta, x).expect("nonzero");
        at.try_pair(x, y, Some("form-zero"))
    });
    at.member(cert)
}

fn pure_t0t1(tower: &TowerCtx, d: u32, beta: Elem) -> Verdict {
    let f = tower.base();
    let mut at = Attempt::new(tower, Case::T0T1, beta, Criterion::PureCubicT0T1);
    // Some v ∈ {α, α², α + α²} has C_β(v) ≠ 0; then x = Tr(β/v)·v.
    let [b0, b1, b2] = pure_coords(tower, beta);
    let form = |x1: u32, x2: u32| {
        let t = f.sub(f.mul(b1, f.mul(x1, x1)), f.mul(b0, f.mul(x1, x2)));
        f.add(t, f.mul(d, f.mul(b2, f.mul(x2, x2))))
    };
    let cert = [(1, 0), (0, 1), (1, 1)]
        .into_iter()
        .find(|&(x1, x2)| form(x1, x2) != 0)
        .and_then(|(x1, x2)| {
            let v = tower.compose(&[0, x1, x2]);
            let t = tower.trace(tower.div(beta, v).expect("nonzero"));
            let x = tower.scalar_mul(t, v);
            let y = tower.div(beta, x).ok()?;
            at.try_pair(x, y, Some("scaled-trace-zero"))
        });
    at.member(cert)
}

/// Left minus right side of the T_1T_1 equation for x = 1/3 + x₁α + x₂α²:
/// b₀/3 + 3d(b₁x₁² − b₀x₁x₂ − (b₁x₂ + b₂x₁)/3) + 3d²b₂x₂² − (1/27 + dx₁³ + d²x₂³ − dx₁x₂).
fn pure_t1t1_equation(f: &FieldCtx, d: u32, b: [u32; 3], x1: u32, x2: u32) -> u32 {
    let [b0, b1, b2] = b;
    let three = f.from_int(3);
    let third = f.inv(three).expect("characteristic is not 3");
    let inner = f.sub(
        f.sub(f.mul(b1, f.mul(x1, x1)), f.mul(b0, f.mul(x1, x2))),
        f.mul(third, f.add(f.mul(b1, x2), f.mul(b2, x1))),
    );
    let d2 = f.mul(d, d);
    let lhs = f.add(
        f.add(f.mul(b0, third), f.mul(f.mul(three, d), inner)),
        f.mul(f.mul(three, d2), f.mul(b2, f.mul(x2, x2))),
    );
    let rhs = f.sub(
        f.add(
            f.add(f.pow(third, 3), f.mul(d, f.pow(x1, 3))),
            f.mul(d2, f.pow(x2, 3)),
        ),
        f.mul(d, f.mul(x1, x2)),
    );
    f.sub(lhs, rhs)
}

/// The first (x₁, x₂) in index order solving the pure-cubic T_1T_1 equation.
pub fn pure_t1t1_solution(tower: &TowerCtx, beta: Elem) -> Result<Option<(u32, u32)>> {
    check_degree(tower)?;
    let TowerTag::PureCubic(d) = tower.tag() else {
        return Err(Error::CriterionUnavailable);
    };
    let f = tower.base();
    let b = pure_coords(tower, beta);
    Ok(f.elements()
        .flat_map(|x2| f.elements().map(move |x1| (x1, x2)))
        .find(|&(x1, x2)| pure_t1t1_equation(f, d, b, x1, x2) == 0))
}

fn pure_t1t1(tower: &TowerCtx, beta: Elem) -> Verdict {
    let f = tower.base();
    let mut at = Attempt::new(tower, Case::T1T1, beta, Criterion::PureCubicT1T1);
    let Some((x1, x2)) = pure_t1t1_solution(tower, beta).expect("pure cubic") else {
        return at.non_member();
    };
    let third = f.inv(f.from_int(3)).expect("characteristic is not 3");
    let x = tower.compose(&[third, x1, x2]);
    let cert = tower
        .div(beta, x)
        .ok()
        .and_then(|y| at.try_pair(x, y, Some("one-third-offset")));
    at.member(cert)
}

/// Characteristic 3, m = X³ − X + a: T_0 = {c₀ + c₁α}, so β ∈ T_0T_0 iff
/// b₂Y² + b₁Y + b₀ splits, i.e. b₁² − b₀b₂ is a square.
fn artin_schreier_t0t0(tower: &TowerCtx, beta: Elem) -> Verdict {
    let f = tower.base();
    let mut at = Attempt::new(tower, Case::T0T0, beta, Criterion::ArtinSchreierT0T0);
    let [b0, b1, b2] = pure_coords(tower, beta);
    if b2 == 0 {
        let cert = at.try_pair(beta, 1, Some("beta-times-one"));
        return at.member(cert);
    }
    if !f.is_square(f.sub(f.mul(b1, b1), f.mul(b0, b2))) {
        return at.non_member();
    }
    let roots = f.solve_quadratic(b2, b1, b0).expect("b2 nonzero");
    let r1 = roots[0];
    let r2 = *roots.last().expect("a root exists");
    let x = tower.scalar_mul(b2, tower.compose(&[f.neg(r1), 1]));
    let y = tower.compose(&[f.neg(r2), 1]);
    let cert = at.try_pair(x, y, Some("linear-factors"));
    at.member(cert)
}

/// The T_0T_0 quadratic form of a cubic tower written in a normal basis
/// α₀, α₁ = α₀^q, α₂ = α₀^{q²}.
#[derive(Clone, Debug)]
pub struct NormalBasisForm<'t> {
    tower: &'t TowerCtx,
    basis: [Elem; 3],
    /// Tr(α₀³), Tr(α₀²α₁), Tr(α₀α₁²), Tr(α₀α₁α₂).
    traces: [u32; 4],
    lambda: u32,
    mu: u32,
}

impl<'t> NormalBasisForm<'t> {
    /// Uses the first normal element in index order. Odd characteristic only.
    pub fn new(tower: &'t TowerCtx) -> Result<Self> {
        check_degree(tower)?;
        if tower.p() == 2 {
            return Err(Error::CriterionUnavailable);
        }
        let f = tower.base();
        let a0 = tower
            .elements()
            .find(|&x| {
                let rows: Vec<Vec<u32>> = (0..3).map(|i| tower.coords(tower.frobenius(x, i))).collect();
                linalg::rank(f, rows) == 3
            })
            .expect("normal elements exist");
        let a1 = tower.frobenius(a0, 1);
        let a2 = tower.frobenius(a0, 2);
        let tr = |x: Elem| tower.trace(x);
        let traces = [
            tr(tower.pow(a0, 3)),
            tr(tower.mul(tower.square(a0), a1)),
            tr(tower.mul(a0, tower.square(a1))),
            tr(tower.mul(a0, tower.mul(a1, a2))),
        ];
        let lambda = tr(a0);
        let mu = tr(tower.mul(a0, a1));
        Ok(NormalBasisForm { tower, basis: [a0, a1, a2], traces, lambda, mu })
    }

    pub fn basis(&self) -> [Elem; 3] {
        self.basis
    }

    /// (b₀, b₁, b₂) with β = b₀α₀ + b₁α₁ + b₂α₂.
    pub fn coordinates(&self, beta: Elem) -> [u32; 3] {
        let t = self.tower;
        let cols: Vec<Vec<u32>> = self.basis.iter().map(|&a| t.coords(a)).collect();
        let rows: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|j| cols[j][i]).collect()).collect();
        let z = linalg::solve(t.base(), &rows, &t.coords(beta)).expect("basis");
        [z[0], z[1], z[2]]
    }

    /// Coefficients of x₀², x₀x₁, x₁² in Tr(β·x^{q+q²}) for x = x₀α₀ + x₁α₁ − (x₀+x₁)α₂.
    pub fn coefficients(&self, b: [u32; 3]) -> [u32; 3] {
        let f = self.tower.base();
        let [a, bb, c, d] = self.traces;
        let lin = |k: [i64; 4]| {
            [a, bb, c, d]
                .iter()
                .zip(k)
                .fold(0, |acc, (&v, k)| f.add(acc, f.mul(f.from_int(k), v)))
        };
        let comb = |k0: [i64; 4], k1: [i64; 4], k2: [i64; 4]| {
            f.add(f.add(f.mul(b[0], lin(k0)), f.mul(b[1], lin(k1))), f.mul(b[2], lin(k2)))
        };
        // Index order of k: A, B, C, D.
        let p_bd_2c = [0, 1, -2, 1];
        let p_bc_ad = [-1, 1, 1, -1];
        let p_cd_2b = [0, -2, 1, 1];
        [
            comb(p_bd_2c, p_bc_ad, p_cd_2b),
            comb([-1, 4, -2, -1], [-1, -2, 4, -1], [1, -2, -2, 3]),
            comb(p_bc_ad, p_cd_2b, p_bd_2c),
        ]
    }

    /// The same coefficients read off by evaluating the form directly.
    pub fn numeric_coefficients(&self, beta: Elem) -> [u32; 3] {
        let f = self.tower.base();
        let q = |x0: u32, x1: u32| cubic_form(self.tower, beta, self.element(x0, x1));
        let a = q(1, 0);
        let c = q(0, 1);
        let b = f.sub(f.sub(q(1, 1), a), c);
        [a, b, c]
    }

    /// x₀α₀ + x₁α₁ − (x₀+x₁)α₂, the general element of T_0.
    pub fn element(&self, x0: u32, x1: u32) -> Elem {
        let t = self.tower;
        let f = t.base();
        let [a0, a1, a2] = self.basis;
        let x2 = f.neg(f.add(x0, x1));
        t.add(t.add(t.scalar_mul(x0, a0), t.scalar_mul(x1, a1)), t.scalar_mul(x2, a2))
    }

    /// (λ² − 2μ)Σb_i² − 2(λ² − 4μ)Σb_ib_j with λ = Tr α₀ and μ = Tr(α₀α₁).
    pub fn printed_value(&self, b: [u32; 3]) -> u32 {
        let f = self.tower.base();
        let l2 = f.mul(self.lambda, self.lambda);
        let s2 = b.iter().fold(0, |acc, &x| f.add(acc, f.mul(x, x)));
        let sp = f.add(f.add(f.mul(b[0], b[1]), f.mul(b[0], b[2])), f.mul(b[1], b[2]));
        let k1 = f.sub(l2, f.mul(2, self.mu));
        let k2 = f.sub(l2, f.mul(f.from_int(4), self.mu));
        f.sub(f.mul(k1, s2), f.mul(f.mul(2, k2), sp))
    }

    /// Membership claimed by the printed closed form.
    pub fn printed_member(&self, beta: Elem) -> bool {
        beta == 0 || self.tower.base().is_square(self.printed_value(self.coordinates(beta)))
    }

    /// Decides β ∈ T_0T_0 from the discriminant of the binary form.
    pub fn decide(&self, beta: Elem) -> Verdict {
        let t = self.tower;
        if beta == 0 {
            return super::decide_canonical(t, Case::T0T0, 0).expect("degree 3");
        }
        let f = t.base();
        let mut at = Attempt::new(t, Case::T0T0, beta, Criterion::CyclicGaloisForm);
        let [a, b, c] = self.coefficients(self.coordinates(beta));
        let point = if a == 0 {
            Some((1, 0))
        } else {
            let disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), f.mul(a, c)));
            if !f.is_square(disc) {
                return at.non_member();
            }
            f.solve_quadratic(a, b, c).expect("a nonzero").first().map(|&x0| (x0, 1))
        };
        let cert = point.and_then(|(x0, x1)| {
            let x = self.element(x0, x1);
            let y = t.div(beta, x).ok()?;
            at.try_pair(x, y, Some("form-zero"))
        });
        at.member(cert)
    }
}

/// Outcome of checking the pure-cubic T_1T_1 equation for every β.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCharT1T1Report {
    pub q: u32,
    pub d: u32,
    pub total: u32,
    pub solvable: u32,
    /// Nonzero β for which the equation has no solution.
    pub counterexamples: Vec<Elem>,
}

impl EvenCharT1T1Report {
    pub fn all_solvable(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Solves the pure-cubic T_1T_1 equation for every nonzero β of a
/// characteristic-2 pure-cubic tower.
///
/// For fixed (x₁, x₂) the equation is affine-linear in (b₀, b₁, b₂), so
/// each pair marks a plane of solvable β.
pub fn even_char_t1t1_experiment(tower: &TowerCtx) -> Result<EvenCharT1T1Report> {
    check_degree(tower)?;
    let TowerTag::PureCubic(d) = tower.tag() else {
        return Err(Error::NoSuchForm);
    };
    let f = tower.base();
    if f.p() != 2 {
        return Err(Error::CriterionUnavailable);
    }
    let q = f.q();
    let mut solvable = vec![false; tower.size() as usize];
    for x2 in f.elements() {
        for x1 in f.elements() {
            // Coefficients of b₀, b₁, b₂ and the constant: in characteristic 2, 3 = 1/3 = 1.
            let e = |b: [u32; 3]| pure_t1t1_equation(f, d, b, x1, x2);
            let k = e([0, 0, 0]);
            let c = [f.sub(e([1, 0, 0]), k), f.sub(e([0, 1, 0]), k), f.sub(e([0, 0, 1]), k)];
            let j = (0..3).rev().find(|&j| c[j] != 0).expect("the form is nonzero");
            let inv = f.inv(c[j]).expect("nonzero");
            let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
            for u in f.elements() {
                for v in f.elements() {
                    let mut b = [0u32; 3];
                    b[others[0]] = u;
                    b[others[1]] = v;
                    let rest = f.add(f.add(k, f.mul(c[others[0]], u)), f.mul(c[others[1]], v));
                    b[j] = f.mul(f.neg(rest), inv);
                    solvable[tower.compose(&b) as usize] = true;
                }
            }
        }
    }
    let counterexamples: Vec<Elem> = (1..tower.size()).filter(|&beta| !solvable[beta as usize]).collect();
    let total = tower.size() - 1;
    Ok(EvenCharT1T1Report { q, d, total, solvable: total - counterexamples.len() as u32, counterexamples })
}
