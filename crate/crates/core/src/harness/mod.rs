//! Hyperplane configurations, balanced pair collections, and evaluators for
//! both sides of each inequality in the Second Main Theorem chain.

mod combinatorics;
mod hyperplanes;
mod profile;
mod report;
mod verify;

pub use combinatorics::{
    balanced_check, distance_one_collection, telescoping_identity, BalanceCertificate, PairCollection,
};
pub use hyperplanes::HyperplaneConfig;
pub use profile::{two_row_terms, Evaluator, RadialProfile, TwoRowTerms};
pub use report::{check_radii, exceptional_set, log_spaced, ExceptionalSet, MarginReport, RadiusRecord, SweepReport};
pub use verify::{
    mcquillan_monitor, sweep, verify_cartan, verify_height_growth, verify_identities, verify_second_difference,
    verify_second_differences, verify_two_row, CartanRecord, GrowthRecord, IdentityRecord, McQuillanRecord,
    SecondDifferenceRecord,
};
