//! Weighted elections over a societal axis, with top-truncated ballots.
//!
//! This crate implements winner determination for positional scoring rules
//! (with the round-up, round-down and average truncation schemes), scoring
//! elimination rules (eliminate(veto) and Baldwin), Copeland^alpha and a
//! square-weighted positional rule ([`rules::avr_scores`]), all with exact
//! rational arithmetic. On top of the rules it provides:
//!
//! - single-peakedness analysis for complete and top-truncated ballots
//!   ([`sp`]), including maverick counting and exhaustive ballot enumeration;
//! - constructive coalitional weighted manipulation (CWCM) solvers: an exact
//!   brute-force oracle plus the known polynomial algorithms for restricted
//!   rule/domain combinations ([`manipulation`]);
//! - weighted-bribery solvers, again oracle plus polynomial case analyses
//!   ([`bribery`]);
//! - generators for hardness reduction instances built from Partition,
//!   Partition' and Fixed-Difference Subset Sum sources, together with a
//!   verifier that cross-checks each reduction's yes/no equivalence by brute
//!   force ([`reductions`]);
//! - a line-oriented election file format and a batch CLI ([`format`],
//!   [`cli`]).
//!
//! Everything is a pure function over immutable values; no floats are used
//! anywhere in score computation.

pub mod bribery;
pub mod cli;
mod engine;
pub mod format;
pub mod manipulation;
pub mod model;
pub mod pairwise;
pub mod rational;
pub mod reductions;
pub mod rules;
pub mod sp;

pub use model::{Axis, Ballot, CandidateId, Error, Profile, Result, WeightedBallot};
pub use rational::Rational;
pub use rules::{RuleKind, RuleSpec, ScoringVector, TieBreakPolicy, TruncationScheme, WinnerModel};
