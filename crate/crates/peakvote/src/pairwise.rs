//! Weighted pairwise majorities and weak-Condorcet winners.

use crate::model::{CandidateId, Error, Profile, Result};
use std::collections::BTreeSet;

/// Total weight of votes ranking `r` strictly above `s` minus the total
/// weight ranking `s` strictly above `r`. A vote where both candidates are
/// unranked contributes nothing.
pub fn pairwise_margin(profile: &Profile, r: &CandidateId, s: &CandidateId) -> Result<i128> {
    if r == s {
        return Err(Error::Invalid(format!(
            "pairwise margin needs two distinct candidates, got {r} twice"
        )));
    }
    for c in [r, s] {
        if !profile.candidates().contains(c) {
            return Err(Error::UnknownCandidate(c.as_str().to_owned()));
        }
    }
    let mut margin: i128 = 0;
    for vote in profile.votes() {
        if vote.ballot.prefers(r, s) {
            margin += vote.weight as i128;
        } else if vote.ballot.prefers(s, r) {
            margin -= vote.weight as i128;
        }
    }
    Ok(margin)
}

/// Candidates preferred over every other candidate by at least half of the
/// voter weight, i.e. with a non-negative margin against everyone.
///
/// Complete-ballot single-peaked profiles always have one (the median-voter
/// property); top-truncated profiles may have none.
pub fn weak_condorcet_winners(profile: &Profile) -> BTreeSet<CandidateId> {
    let mut winners = BTreeSet::new();
    'outer: for c in profile.candidates() {
        for d in profile.candidates() {
            if c != d && pairwise_margin(profile, c, d).expect("validated candidates") < 0 {
                continue 'outer;
            }
        }
        winners.insert(c.clone());
    }
    winners
}
