//! F_q-linear sets of rank n on the projective line PG(1, q^n), clubs and
//! their intersections with graphs of linearized polynomials.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{linalg, Elem, TowerCtx};

mod clubs;
mod maps;
mod meet;

pub use clubs::{club_pair_disjoint, disjoint_clubs_exist, ClubReport};
pub use maps::{LinearMap, LinearizedPoly};
pub use meet::{club_meet_check, SAMPLE_COUNT, CoefficientDomain, DegreeZeroSummary, MeetReport};

/// A point of PG(1, q^n), stored as (1, y) or (0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    x: Elem,
    y: Elem,
}

impl ProjPoint {
    /// Normalizes (x, y); `None` when both are zero.
    pub fn new(tower: &TowerCtx, x: Elem, y: Elem) -> Option<Self> {
        if x == 0 {
            return (y != 0).then_some(ProjPoint { x: 0, y: 1 });
        }
        Some(ProjPoint { x: 1, y: tower.div(y, x).expect("nonzero") })
    }

    pub fn coords(&self) -> (Elem, Elem) {
        (self.x, self.y)
    }

    /// Slot in a bitmap of all q^n + 1 points: y for (1, y), q^n for (0, 1).
    pub fn index(&self, tower: &TowerCtx) -> usize {
        if self.x == 0 {
            tower.size() as usize
        } else {
            self.y as usize
        }
    }
}

/// How a linear set was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSetSource {
    /// {(x, f(x))}.
    Gamma(LinearMap),
    /// {(f(x), x)}.
    GammaBar(LinearMap),
    /// {(z, γTr(z))}.
    Club(Elem),
    /// {(A(x), B(x))}.
    Pair(LinearMap, LinearMap),
}

/// The points {(A(x), B(x)) : x ∈ F_{q^n}*} with their weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSet {
    source: LinearSetSource,
    rank: u32,
    /// (point, weight, number of x ≠ 0 mapping to the point), sorted by point.
    points: Vec<(ProjPoint, u32, u32)>,
}

impl LinearSet {
    /// The linear set of U = {(A(x), B(x))}; A and B must have no common kernel.
    pub fn from_maps(tower: &TowerCtx, a: &LinearMap, b: &LinearMap, source: LinearSetSource) -> Result<Self> {
        let mut fibers: Vec<(ProjPoint, u32)> = Vec::new();
        let mut counts = vec![0u32; tower.size() as usize + 1];
        for x in 1..tower.size() {
            let Some(p) = ProjPoint::new(tower, a.eval(tower, x), b.eval(tower, x)) else {
                return Err(Error::Precondition("the maps share a nonzero kernel vector"));
            };
            let slot = &mut counts[p.index(tower)];
            if *slot == 0 {
                fibers.push((p, 0));
            }
            *slot += 1;
        }
        fibers.sort_unstable();
        let points = fibers
            .into_iter()
            .map(|(p, _)| (p, weight(tower, a, b, p), counts[p.index(tower)]))
            .collect();
        Ok(LinearSet { source, rank: tower.n(), points })
    }

    pub fn source(&self) -> &LinearSetSource {
        &self.source
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in sorted order.
    pub fn points(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        self.points.iter().map(|&(p, _, _)| p)
    }

    /// (point, weight) pairs in sorted order.
    pub fn weighted_points(&self) -> impl Iterator<Item = (ProjPoint, u32)> + '_ {
        self.points.iter().map(|&(p, w, _)| (p, w))
    }

    pub fn weight_of(&self, p: &ProjPoint) -> Option<u32> {
        self.points.binary_search_by(|(x, _, _)| x.cmp(p)).ok().map(|i| self.points[i].1)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.weight_of(p).is_some()
    }

    /// Every kernel-dimension weight w agrees with the fiber count q^w − 1.
    pub fn weights_match_fibers(&self, q: u32) -> bool {
        self.points.iter().all(|&(_, w, c)| q.pow(w) - 1 == c)
    }

    /// Σ_P (q^{w(P)} − 1) = q^rank − 1.
    pub fn weight_partition_holds(&self, q: u32) -> bool {
        let total: u64 = self.points.iter().map(|&(_, w, _)| (q as u64).pow(w) - 1).sum();
        total == (q as u64).pow(self.rank) - 1
    }

    /// Whether all points have weight at most one.
    pub fn is_scattered(&self) -> bool {
        self.points.iter().all(|&(_, w, _)| w <= 1)
    }
}

/// dim_{F_q} {x : (A(x), B(x)) ∈ ⟨(p₀, p₁)⟩} = n − rank(x ↦ p₁A(x) − p₀B(x)).
pub fn weight(tower: &TowerCtx, a: &LinearMap, b: &LinearMap, p: ProjPoint) -> u32 {
    let (p0, p1) = p.coords();
    let rows: Vec<Vec<u32>> = (0..tower.n())
        .map(|j| {
            let e = maps::basis_element(tower, j);
            let v = tower.sub(tower.mul(p1, a.eval(tower, e)), tower.mul(p0, b.eval(tower, e)));
            tower.coords(v)
        })
        .collect();
    tower.n() - linalg::rank(tower.base(), rows) as u32
}

/// Γ_f = {(x, f(x)) : x ≠ 0}.
pub fn gamma(tower: &TowerCtx, f: &LinearMap) -> LinearSet {
    LinearSet::from_maps(tower, &LinearMap::Identity, f, LinearSetSource::Gamma(f.clone())).expect("identity is injective")
}

/// Γ̄_f = {(f(x), x) : x ≠ 0}.
pub fn gamma_bar(tower: &TowerCtx, f: &LinearMap) -> LinearSet {
    LinearSet::from_maps(tower, f, &LinearMap::Identity, LinearSetSource::GammaBar(f.clone())).expect("identity is injective")
}

/// The club {(z, γTr(z)) : z ≠ 0} with head (1, 0).
pub fn club(tower: &TowerCtx, gamma: Elem) -> Result<LinearSet> {
    if gamma == 0 {
        return Err(Error::ZeroGamma);
    }
    if !tower.contains(gamma) {
        return Err(Error::InvalidElement);
    }
    LinearSet::from_maps(tower, &LinearMap::Identity, &LinearMap::ScaledTrace(gamma), LinearSetSource::Club(gamma))
}

/// Whether the two sets share no point.
pub fn disjoint(l1: &LinearSet, l2: &LinearSet) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < l1.points.len() && j < l2.points.len() {
        match l1.points[i].0.cmp(&l2.points[j].0) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn identity_collapses_to_one_point() {
        let t = default_tower(2, 1, 3).unwrap();
        let g = gamma(&t, &LinearMap::Identity);
        assert_eq!(g.len(), 1);
        assert_eq!(g.weighted_points().next().unwrap(), (ProjPoint::new(&t, 1, 1).unwrap(), 3));
    }

    #[test]
    fn frobenius_graph_is_scattered() {
        let t = default_tower(2, 1, 3).unwrap();
        let g = gamma(&t, &LinearMap::Poly(LinearizedPoly::monomial(1)));
        assert_eq!(g.len(), 7);
        assert!(g.is_scattered());
        assert!(g.weights_match_fibers(2));
    }

    #[test]
    fn club_shape() {
        for (p, h, n) in [(2, 1, 3), (3, 1, 3), (2, 2, 3), (3, 1, 4), (5, 1, 2)] {
            let t = default_tower(p, h, n).unwrap();
            let q = t.q();
            let c = club(&t, 1).unwrap();
            assert_eq!(c.len() as u32, q.pow(n - 1) + 1);
            let head = ProjPoint::new(&t, 1, 0).unwrap();
            assert_eq!(c.weight_of(&head), Some(n - 1));
            assert_eq!(c.weighted_points().filter(|&(_, w)| w == n - 1).count(), if n > 2 { 1 } else { c.len() });
            assert!(c.weight_partition_holds(q));
            assert!(c.weights_match_fibers(q));
        }
        let t = default_tower(2, 1, 3).unwrap();
        assert_eq!(club(&t, 0), Err(Error::ZeroGamma));
    }

    #[test]
    fn disjointness() {
        let t = default_tower(2, 1, 5).unwrap();
        let c = club(&t, 1).unwrap();
        assert!(!disjoint(&c, &c));
        let s = gamma_bar(&t, &LinearMap::Poly(LinearizedPoly::monomial(1)));
        assert!(!disjoint(&c, &s));
    }

    #[test]
    fn normalization() {
        let t = default_tower(3, 1, 2).unwrap();
        let p = ProjPoint::new(&t, 4, 8).unwrap();
        assert_eq!(p.coords().0, 1);
        assert_eq!(t.mul(p.coords().1, 4), 8);
        assert_eq!(ProjPoint::new(&t, 0, 5).unwrap().coords(), (0, 1));
        assert!(ProjPoint::new(&t, 0, 0).is_none());
    }
}
