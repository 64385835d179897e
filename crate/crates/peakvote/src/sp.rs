//! Single-peakedness with respect to a societal axis.
//!
//! A complete ballot is single-peaked when preferences fall off monotonically
//! with axis distance from the voter's peak. For a top-truncated ballot we
//! use the interval reading: walking the ranking from the peak, every next
//! candidate must extend a contiguous interval of the axis by one adjacent
//! position. On complete ballots this coincides with the classic condition
//! on axis triples; the unit tests check that equivalence exhaustively.

use crate::model::{Axis, Ballot, CandidateId, Error, Profile, Result};

/// Whether an enumeration is restricted to complete ballots or may produce
/// every truncation length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BallotShape {
    Complete,
    Top,
}

/// True iff `ballot` is single-peaked with respect to `axis`.
///
/// Errors if the ballot ranks a candidate that is not on the axis.
pub fn is_single_peaked(ballot: &Ballot, axis: &Axis) -> Result<bool> {
    let mut positions = Vec::with_capacity(ballot.len());
    for c in ballot.ranked() {
        positions.push(axis.position(c)?);
    }
    Ok(walk_is_contiguous(&positions))
}

/// The interval walk over axis positions; the first entry is the peak.
fn walk_is_contiguous(positions: &[usize]) -> bool {
    let mut lo = positions[0];
    let mut hi = positions[0];
    for &p in &positions[1..] {
        if p + 1 == lo {
            lo = p;
        } else if p == hi + 1 {
            hi = p;
        } else {
            return false;
        }
    }
    true
}

/// Number of votes in the profile (counted per vote, not per weight unit)
/// whose ballot is not single-peaked w.r.t. the profile's axis.
pub fn maverick_count(profile: &Profile) -> Result<usize> {
    let axis = profile.require_axis()?;
    let mut count = 0;
    for vote in profile.votes() {
        if !is_single_peaked(&vote.ballot, axis)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Exhaustive, duplicate-free list of all single-peaked ballots over `axis`.
///
/// With [`BallotShape::Complete`] only full-length ballots are produced
/// (there are `2^(m-1)` of them); with [`BallotShape::Top`] every truncation
/// length from 1 to m appears.
pub fn enumerate_sp_ballots(axis: &Axis, shape: BallotShape) -> Vec<Ballot> {
    let m = axis.len();
    let mut out = Vec::new();
    let mut seq: Vec<usize> = Vec::with_capacity(m);
    for peak in 0..m {
        seq.push(peak);
        grow(axis, &mut seq, peak, peak, shape, &mut out);
        seq.pop();
    }
    out
}

fn grow(
    axis: &Axis,
    seq: &mut Vec<usize>,
    lo: usize,
    hi: usize,
    shape: BallotShape,
    out: &mut Vec<Ballot>,
) {
    let m = axis.len();
    if shape == BallotShape::Top || seq.len() == m {
        let ranked = seq.iter().map(|&i| axis.order()[i].clone()).collect();
        out.push(Ballot::new(ranked).expect("walk yields valid ballots"));
    }
    if seq.len() == m {
        return;
    }
    if lo > 0 {
        seq.push(lo - 1);
        grow(axis, seq, lo - 1, hi, shape, out);
        seq.pop();
    }
    if hi + 1 < m {
        seq.push(hi + 1);
        grow(axis, seq, lo, hi + 1, shape, out);
        seq.pop();
    }
}

/// All complete single-peaked ballots whose top candidate is `p`.
///
/// If `p` sits at 1-based axis position `i`, there are `C(m-1, i-1)` such
/// ballots (the interleavings of the two axis sides).
pub fn enumerate_sp_orders_with_peak(axis: &Axis, p: &CandidateId) -> Result<Vec<Ballot>> {
    let peak = axis.position(p)?;
    let mut out = Vec::new();
    let mut seq = vec![peak];
    grow(axis, &mut seq, peak, peak, BallotShape::Complete, &mut out);
    Ok(out)
}

/// All ballots a voter may cast in an unrestricted domain: every strict
/// ranking of every non-empty candidate subset (or only the complete ones).
pub fn enumerate_unrestricted_ballots(
    candidates: &[CandidateId],
    shape: BallotShape,
) -> Vec<Ballot> {
    use itertools::Itertools;
    let m = candidates.len();
    let lengths: Vec<usize> = match shape {
        BallotShape::Complete => vec![m],
        BallotShape::Top => (1..=m).collect(),
    };
    let mut out = Vec::new();
    for k in lengths {
        for perm in candidates.iter().cloned().permutations(k) {
            out.push(Ballot::new(perm).expect("permutations are valid ballots"));
        }
    }
    out
}
