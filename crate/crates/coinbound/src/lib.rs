//! Exact toolkit for the two-coin change-counting problem with limited coin
//! supplies: how many values `a*m + b*n` with `0 <= a <= A`, `0 <= b <= B`
//! are reachable, which ones are not, and a witness for any single value.
//!
//! The closed-form answers (`closed_form`), the structural gap enumeration
//! and witness search (`representation`), and a brute-force bitset
//! reachability oracle (`oracle`) are deliberately independent computation
//! routes; the `verify` CLI command and the test suite pit them against each
//! other over exhaustive sweeps.
//!
//! All arithmetic is exact 64-bit with checked operations; see
//! [`domain::Error`] for the failure taxonomy.

pub mod cli;
pub mod closed_form;
pub mod domain;
pub mod oracle;
pub mod representation;

pub use closed_form::{count_gaps, count_representable, frobenius_number, sylvester_count, ClassicSummary};
pub use domain::{
    gcd, BoundedInstance, CaseTag, DenominationPair, Error, GapReport, ReachableSet,
    Representation,
};
pub use oracle::{GeneralInstance, DEFAULT_CAPACITY};
pub use representation::{
    bounded_gaps, bounded_gaps_with_capacity, find_representation, reflect, unbounded_gaps,
    UnboundedGapSet,
};
