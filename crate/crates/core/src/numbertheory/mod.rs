//! Exact arithmetic behind the non-integrality results: 2-adic valuations
//! and Kürschák certificates, exact fraction sums, exhaustive and sampled
//! counterexample searches, the bounding inequalities for the
//! arithmetic-progression sum, and Bézout witnesses.

mod bezout;
mod checks;
mod nagell;
mod rational;
mod search;
mod valuation;

use thiserror::Error;

pub use bezout::bezout_witness;
pub use checks::{Check, CheckOutcome, CheckParams, CheckRegistry, CheckResult, Harmonic, Nagell, PhiSearch};
pub use nagell::{nagell_major_bound, nagell_major_sides, nagell_small_m_bound, nagell_small_m_sides};
pub use rational::{fraction_sum, is_integer, nagell_sum, Rational};
pub use search::{
    phi_instance_quotient, search_nagell_counterexample, search_phi_counterexample, NagellCounterexample,
    NagellSearchParams, NagellSearchReport, PhiCounterexample, PhiSearchConfig, PhiSearchParams, PhiSearchReport,
    SearchMode,
};
pub use valuation::{kurschak_certificate, lcm_range, unique_max_valuation, v2, KurschakCertificate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NtError {
    #[error("{0}")]
    Domain(String),
    #[error("precondition failed at index {index}: {reason}")]
    Precondition { index: usize, reason: String },
    #[error("precondition failed: {0}")]
    Bound(String),
}
