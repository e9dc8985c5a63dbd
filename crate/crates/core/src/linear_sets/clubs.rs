use alloc::vec;
use alloc::vec::Vec;

use super::{club, disjoint, LinearMap, LinearSet, LinearSetSource, ProjPoint};
use crate::error::Result;
use crate::field::{Elem, TowerCtx};
use crate::trace_sets::product_set;

/// Search for a pair of disjoint clubs {(x, Tr x)} and {(αTr y, y)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClubReport {
    pub q: u32,
    pub n: u32,
    pub exists: bool,
    /// The first nonzero α ∉ T_1T_1, in index order.
    pub witness: Option<Elem>,
    /// Whether the witness pair was confirmed disjoint as linear sets.
    pub witness_verified: bool,
    /// Number of nonzero α outside T_1T_1.
    pub non_members: u64,
    /// α for which direct disjointness and α ∉ T_1T_1 disagree.
    pub mismatches: Vec<Elem>,
}

/// Membership bitmap of the club {(z, Tr z)} over all q^n + 1 points.
fn trace_club_bitmap(tower: &TowerCtx) -> Vec<bool> {
    let mut hit = vec![false; tower.size() as usize + 1];
    for z in 1..tower.size() {
        let p = ProjPoint::new(tower, z, tower.trace(z)).expect("z ≠ 0");
        hit[p.index(tower)] = true;
    }
    hit
}

fn pair_disjoint_with(tower: &TowerCtx, c1: &[bool], alpha: Elem) -> bool {
    (1..tower.size()).all(|y| {
        let p = ProjPoint::new(tower, tower.scalar_mul(tower.trace(y), alpha), y).expect("y ≠ 0");
        !c1[p.index(tower)]
    })
}

/// Whether {(x, Tr x)} and {(αTr y, y)} share no point, by direct enumeration.
pub fn club_pair_disjoint(tower: &TowerCtx, alpha: Elem) -> bool {
    pair_disjoint_with(tower, &trace_club_bitmap(tower), alpha)
}

/// Looks for α ∉ T_1T_1 and confirms the corresponding clubs are disjoint.
///
/// Every α ∈ F_{q^n}* is also tested directly, and any disagreement between
/// the two descriptions is listed in `mismatches`.
pub fn disjoint_clubs_exist(tower: &TowerCtx) -> Result<ClubReport> {
    let members = product_set(tower, 1, 1);
    let c1_bitmap = trace_club_bitmap(tower);
    let mut witness = None;
    let mut non_members = 0;
    let mut mismatches = Vec::new();
    for alpha in 1..tower.size() {
        let outside = !members[alpha as usize];
        if outside {
            non_members += 1;
            witness.get_or_insert(alpha);
        }
        if pair_disjoint_with(tower, &c1_bitmap, alpha) != outside {
            mismatches.push(alpha);
        }
    }
    let witness_verified = match witness {
        Some(alpha) => {
            let c1 = club(tower, 1)?;
            let c2 = LinearSet::from_maps(
                tower,
                &LinearMap::ScaledTrace(alpha),
                &LinearMap::Identity,
                LinearSetSource::Pair(LinearMap::ScaledTrace(alpha), LinearMap::Identity),
            )?;
            let is_club = c2.weighted_points().filter(|&(_, w)| w == tower.n() - 1).count() >= 1;
            is_club && disjoint(&c1, &c2)
        }
        None => false,
    };
    Ok(ClubReport {
        q: tower.q(),
        n: tower.n(),
        exists: witness.is_some(),
        witness,
        witness_verified,
        non_members,
        mismatches,
    })
}
