use serde::Serialize;

use super::search::min_m_search;
use crate::bounds::{lower_bound_m, Method};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundForm {
    Finite,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditStatus {
    Ok,
    /// An asymptotic bound (without its `1+o(1)`) above `M_min`; expected at tiny `n`.
    Informational,
    /// A finite-form bound above the searched `M_min`.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub method: Method,
    pub form: BoundForm,
    pub lower_bound: f64,
    pub m_min: u64,
    pub baseline_m: u64,
    pub status: AuditStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundAudit {
    pub n: usize,
    pub k: usize,
    pub m_min: u64,
    pub exhaustive: bool,
    pub baseline_m: u64,
    pub rows: Vec<AuditRow>,
}

impl BoundAudit {
    pub fn violations(&self) -> impl Iterator<Item = &AuditRow> {
        self.rows.iter().filter(|r| r.status == AuditStatus::Violation)
    }
}

/// Compares every lower bound at `(n, k)` with the searched `M_min`.
///
/// Only exhaustive searches can produce violations; with a partial search
/// `m_min` is just the baseline upper bound.
pub fn bound_vs_search_report(n: usize, k: usize, budget: u64) -> Result<BoundAudit> {
    let outcome = min_m_search(n, k, budget)?;
    let baseline_m = super::construct::baseline_construction(n, k)?.bound();
    let m_min = outcome.m_min;
    let mut rows = Vec::new();
    for method in Method::ALL {
        let report = lower_bound_m::<f64>(n as u32, k as u32, method)?;
        let forms = [
            (BoundForm::Finite, report.finite_bound),
            (BoundForm::Asymptotic, report.asymptotic_bound),
        ];
        for (form, bound) in forms {
            let Some(lower_bound) = bound else { continue };
            let status = if lower_bound <= m_min as f64 {
                AuditStatus::Ok
            } else if form == BoundForm::Finite && outcome.exhaustive {
                AuditStatus::Violation
            } else {
                AuditStatus::Informational
            };
            rows.push(AuditRow { method, form, lower_bound, m_min, baseline_m, status });
        }
    }
    Ok(BoundAudit { n, k, m_min, exhaustive: outcome.exhaustive, baseline_m, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::DEFAULT_SEARCH_BUDGET;

    #[test]
    fn three_and_five_in_one_dimension() {
        for (n, m) in [(3, 4), (5, 13)] {
            let audit = bound_vs_search_report(n, 1, DEFAULT_SEARCH_BUDGET).unwrap();
            assert_eq!(audit.m_min, m);
            assert!(audit.exhaustive);
            assert_eq!(audit.violations().count(), 0);
            assert_eq!(audit.rows.len(), 5);
            assert!(audit.baseline_m >= m);
        }
    }

    #[test]
    fn single_element_first_moment_is_tight() {
        let audit = bound_vs_search_report(1, 1, DEFAULT_SEARCH_BUDGET).unwrap();
        let first = audit
            .rows
            .iter()
            .find(|r| r.method == Method::FirstMoment && r.form == BoundForm::Finite)
            .unwrap();
        assert_eq!(first.lower_bound, 1.0);
        assert_eq!(first.status, AuditStatus::Ok);
    }
}
