//! Concrete sequences: verification, exhaustive minimal-`M` search and the
//! comparison of searched values against the lower bounds.

mod construct;
mod report;
mod search;
mod seq;
mod verify;

pub use construct::baseline_construction;
pub use report::{bound_vs_search_report, AuditRow, AuditStatus, BoundAudit, BoundForm};
pub use search::{
    is_canonical, min_m_search, search_level, LevelResult, SearchOutcome, DEFAULT_SEARCH_BUDGET,
    SEARCH_MAX_K,
};
pub use seq::VectorSequence;
pub use verify::{
    gray_sums, mask_indices, verify_distinct, verify_distinct_by_sorting, Collision, GrayWalk,
    Packing, Verdict, Word, VERIFY_MAX_N,
};
