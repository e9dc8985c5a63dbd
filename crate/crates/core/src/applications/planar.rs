use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Elem, TowerCtx};
use crate::trace_sets::product_set;

/// A function F_{q^n} → F_{q^n} given by its values in index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    values: Vec<Elem>,
}

impl FunctionTable {
    pub fn from_fn(tower: &TowerCtx, f: impl Fn(Elem) -> Elem) -> Self {
        FunctionTable { values: tower.elements().map(f).collect() }
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn eval(&self, x: Elem) -> Elem {
        self.values[x as usize]
    }

    /// Whether x ↦ F(x + y) − F(x) − F(y) is a bijection for every y ≠ 0.
    pub fn is_planar(&self, tower: &TowerCtx) -> bool {
        let mut seen = vec![u32::MAX; tower.size() as usize];
        for y in 1..tower.size() {
            let fy = self.eval(y);
            for x in tower.elements() {
                let d = tower.sub(tower.sub(self.eval(tower.add(x, y)), self.eval(x)), fy);
                if seen[d as usize] == y {
                    return false;
                }
                seen[d as usize] = y;
            }
        }
        true
    }
}

/// Planarity of Tr(x)² + ax² over every a, against −a⁻¹ ∉ T_1T_1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnReport {
    pub q: u32,
    pub n: u32,
    /// a for which Tr(x)² + ax² is planar.
    pub planar: Vec<Elem>,
    /// a ≠ 0 with −a⁻¹ ∉ T_1T_1.
    pub criterion_planar: Vec<Elem>,
    /// Whether the two lists are compared (odd characteristic only).
    pub equivalence_checked: bool,
    /// a where planarity and the criterion disagree.
    pub mismatches: Vec<Elem>,
    /// a for which x(Tr(x) + ax) is planar, recorded as data.
    pub second_family_planar: Vec<Elem>,
    /// b with Tr(b) ≠ 0 for which (Tr x − bx)(Tr x + bx) was compared with Tr(x)² − b²x².
    pub factorizations_checked: u64,
    pub factorization_failures: u64,
}

impl PnReport {
    pub fn no_planar(&self) -> bool {
        self.planar.is_empty()
    }
}

/// Tests Tr(x)² + ax² for every a ∈ F_{q^n}.
pub fn pn_trace_square_sweep(tower: &TowerCtx) -> PnReport {
    let t = tower;
    let traces: Vec<Elem> = t.elements().map(|x| t.trace(x)).collect();
    let trace_sq: Vec<Elem> = traces.iter().map(|&c| t.mul(c, c)).collect();
    let t1t1 = product_set(t, 1, 1);
    let odd = t.p() != 2;
    let mut report = PnReport {
        q: t.q(),
        n: t.n(),
        planar: Vec::new(),
        criterion_planar: Vec::new(),
        equivalence_checked: odd,
        mismatches: Vec::new(),
        second_family_planar: Vec::new(),
        factorizations_checked: 0,
        factorization_failures: 0,
    };
    for a in t.elements() {
        let f = FunctionTable::from_fn(t, |x| t.add(trace_sq[x as usize], t.mul(a, t.square(x))));
        let planar = f.is_planar(t);
        if planar {
            report.planar.push(a);
        }
        if a != 0 {
            let target = t.neg(t.inv(a).expect("nonzero"));
            let by_criterion = !t1t1[target as usize];
            if by_criterion {
                report.criterion_planar.push(a);
            }
            if odd && planar != by_criterion {
                report.mismatches.push(a);
            }
        }
        let g = FunctionTable::from_fn(t, |x| t.mul(x, t.add(traces[x as usize], t.mul(a, x))));
        if g.is_planar(t) {
            report.second_family_planar.push(a);
        }
    }
    for b in t.elements().filter(|&b| traces[b as usize] != 0) {
        report.factorizations_checked += 1;
        let a = t.neg(t.square(b));
        let ok = t.elements().all(|x| {
            let tr = traces[x as usize];
            let bx = t.mul(b, x);
            t.mul(t.sub(tr, bx), t.add(tr, bx)) == t.add(trace_sq[x as usize], t.mul(a, t.square(x)))
        });
        if !ok {
            report.factorization_failures += 1;
        }
    }
    report
}

/// Whether {x/Tr(x) : Tr(x) ≠ 0} is exactly T_1.
pub fn trace_one_by_normalization(tower: &TowerCtx) -> bool {
    let mut hit = vec![false; tower.size() as usize];
    for x in tower.elements() {
        let c = tower.trace(x);
        if c != 0 {
            hit[tower.div(x, c).expect("nonzero") as usize] = true;
        }
    }
    tower.elements().all(|u| hit[u as usize] == (tower.trace(u) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn squares() {
        let f9 = default_tower(3, 1, 2).unwrap();
        assert!(FunctionTable::from_fn(&f9, |x| f9.square(x)).is_planar(&f9));
        let f4 = default_tower(2, 1, 2).unwrap();
        assert!(!FunctionTable::from_fn(&f4, |x| f4.square(x)).is_planar(&f4));
    }

    #[test]
    fn sweep_small() {
        for (p, n) in [(3, 2), (3, 3), (5, 2), (2, 3)] {
            let t = default_tower(p, 1, n).unwrap();
            let r = pn_trace_square_sweep(&t);
            assert!(!r.planar.contains(&0));
            assert!(r.mismatches.is_empty(), "{p} {n}: {r:?}");
            assert_eq!(r.factorization_failures, 0);
            if p == 2 {
                assert!(r.planar.is_empty());
            }
            assert!(trace_one_by_normalization(&t));
        }
    }
}
