use alloc::vec::Vec;

use super::{decide, oracle, Criterion, Divergence};
use crate::error::{Error, Result};
use crate::field::{Elem, TowerCtx};

/// How each β is decided in a survey.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurveyMethod {
    Oracle,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub beta: Elem,
    pub member: bool,
    pub criterion: Criterion,
}

/// Membership of every β ∈ F_{q^n} in T_aT_b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Survey {
    pub a: u32,
    pub b: u32,
    pub method: SurveyMethod,
    pub rows: Vec<SurveyRow>,
    pub divergences: Vec<Divergence>,
}

impl Survey {
    /// Assembles a survey from rows in β order.
    pub fn from_rows(a: u32, b: u32, method: SurveyMethod, rows: Vec<SurveyRow>, divergences: Vec<Divergence>) -> Self {
        Survey { a, b, method, rows, divergences }
    }

    pub fn members(&self) -> usize {
        self.rows.iter().filter(|r| r.member).count()
    }

    pub fn non_members(&self) -> Vec<Elem> {
        self.rows.iter().filter(|r| !r.member).map(|r| r.beta).collect()
    }

    /// T_aT_b ⊇ F_{q^n}*, i.e. the non-members are {0} when ab ≠ 0 and none otherwise.
    pub fn covers_all_nonzero(&self) -> bool {
        let expected: &[Elem] = if self.a != 0 && self.b != 0 { &[0] } else { &[] };
        self.non_members() == expected
    }
}

/// Decides a single β.
pub fn survey_row(tower: &TowerCtx, a: u32, b: u32, beta: Elem, method: SurveyMethod) -> Result<(SurveyRow, Vec<Divergence>)> {
    let v = match method {
        SurveyMethod::Oracle => {
            if !tower.base().contains(a) || !tower.base().contains(b) || !tower.contains(beta) {
                return Err(Error::InvalidElement);
            }
            oracle(tower, a, b, beta)
        }
        SurveyMethod::ClosedForm => decide(tower, a, b, beta)?,
    };
    Ok((SurveyRow { beta, member: v.member, criterion: v.criterion }, v.divergences))
}

/// Decides every β of the tower in index order.
pub fn survey(tower: &TowerCtx, a: u32, b: u32, method: SurveyMethod) -> Result<Survey> {
    let mut rows = Vec::with_capacity(tower.size() as usize);
    let mut divergences = Vec::new();
    for beta in tower.elements() {
        let (row, div) = survey_row(tower, a, b, beta, method)?;
        rows.push(row);
        divergences.extend(div);
    }
    Ok(Survey::from_rows(a, b, method, rows, divergences))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::default_tower;

    #[test]
    fn main_theorem_surveys() {
        let t = default_tower(2, 1, 5).unwrap();
        let s = survey(&t, 1, 1, SurveyMethod::Oracle).unwrap();
        assert_eq!(s.non_members(), [0]);
        assert!(s.covers_all_nonzero());
        assert!(survey(&t, 0, 1, SurveyMethod::Oracle).unwrap().non_members().is_empty());
        let t = default_tower(3, 1, 4).unwrap();
        let s = survey(&t, 1, 1, SurveyMethod::ClosedForm).unwrap();
        assert_eq!(s.non_members(), [0]);
    }

    #[test]
    fn methods_agree() {
        let t = default_tower(5, 1, 3).unwrap();
        for (a, b) in [(0, 0), (0, 2), (3, 4)] {
            let o = survey(&t, a, b, SurveyMethod::Oracle).unwrap();
            let c = survey(&t, a, b, SurveyMethod::ClosedForm).unwrap();
            assert_eq!(o.non_members(), c.non_members());
            assert!(c.divergences.is_empty());
        }
    }
}
