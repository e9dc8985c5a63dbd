use crate::field::{digits, Elem, TowerCtx};

/// Lowest power-basis index j with Tr(α^j) ≠ 0.
fn pivot(tower: &TowerCtx) -> usize {
    tower
        .basis_traces()
        .iter()
        .position(|&t| t != 0)
        .expect("the trace is surjective")
}

/// The first element of T_a in fiber order: (a / Tr(α^j)) α^j.
pub fn element_with_trace(tower: &TowerCtx, a: u32) -> Elem {
    let j = pivot(tower);
    let f = tower.base();
    let c = f.div(a, tower.basis_traces()[j]).expect("nonzero pivot trace");
    let mut coords = [0u32; 32];
    coords[j] = c;
    tower.compose(&coords[..tower.n() as usize])
}

/// Enumerates T_a = {x : Tr(x) = a}.
///
/// The coordinates other than the pivot run as a base-q counter with the
/// lowest free coordinate fastest; the pivot coordinate is then solved for.
#[derive(Clone, Debug)]
pub struct TraceFiber<'t> {
    tower: &'t TowerCtx,
    a: u32,
    pivot: usize,
    pivot_inv: u32,
    next: u64,
    total: u64,
}

impl<'t> TraceFiber<'t> {
    pub fn new(tower: &'t TowerCtx, a: u32) -> Self {
        let j = pivot(tower);
        let pivot_inv = tower.base().inv(tower.basis_traces()[j]).expect("nonzero pivot trace");
        let total = tower.size() as u64 / tower.q() as u64;
        TraceFiber { tower, a, pivot: j, pivot_inv, next: 0, total }
    }

    /// Element number `k` of the fiber.
    pub fn nth_element(&self, k: u64) -> Elem {
        let t = self.tower;
        let f = t.base();
        let n = t.n() as usize;
        let mut free = [0u32; 32];
        digits::decode(t.q(), k as u32, &mut free[..n - 1]);
        let mut coords = [0u32; 32];
        let mut s = 0;
        let traces = t.basis_traces();
        let mut src = 0;
        for (i, c) in coords[..n].iter_mut().enumerate() {
            if i == self.pivot {
                continue;
            }
            *c = free[src];
            src += 1;
            if *c != 0 && traces[i] != 0 {
                s = f.add(s, f.mul(*c, traces[i]));
            }
        }
        coords[self.pivot] = f.mul(f.sub(self.a, s), self.pivot_inv);
        digits::encode(t.q(), &coords[..n])
    }
}

impl Iterator for TraceFiber<'_> {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.next >= self.total {
            return None;
        }
        let x = self.nth_element(self.next);
        self.next += 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for TraceFiber<'_> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;
    use alloc::vec::Vec;

    #[test]
    fn fibers_partition_the_field() {
        for (p, h, n) in [(2, 1, 4), (3, 1, 3), (2, 2, 3), (5, 1, 2), (3, 1, 5)] {
            let t = default_tower(p, h, n).unwrap();
            let mut seen = alloc::vec![false; t.size() as usize];
            for a in t.base().elements() {
                let fiber: Vec<Elem> = TraceFiber::new(&t, a).collect();
                assert_eq!(fiber.len() as u32, t.size() / t.q());
                assert_eq!(fiber[0], element_with_trace(&t, a));
                for x in fiber {
                    assert_eq!(t.trace(x), a);
                    assert!(!seen[x as usize]);
                    seen[x as usize] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }
}
