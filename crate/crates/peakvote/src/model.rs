//! Candidates, axes, ballots and weighted profiles.

use std::collections::BTreeSet;
use std::fmt;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid candidate token {0:?} (must be non-empty, with no whitespace, '>' or ':')")]
    InvalidToken(String),
    #[error("unknown candidate {0:?}")]
    UnknownCandidate(String),
    #[error("duplicate candidate {0:?}")]
    DuplicateCandidate(String),
    #[error("a ballot must rank at least one candidate")]
    EmptyBallot,
    #[error("axis must list every candidate exactly once")]
    InvalidAxis,
    #[error("operation requires a societal axis, but the profile has none")]
    MissingAxis,
    #[error("scoring vector has {got} entries but the profile has {expected} candidates")]
    VectorLength { got: usize, expected: usize },
    #[error("scoring vector entries must be non-increasing")]
    VectorNotMonotone,
    #[error("copeland alpha must lie in [0, 1]")]
    AlphaOutOfRange,
    #[error("solver not applicable: {0}")]
    NotApplicable(String),
    #[error("enumeration would need {needed} evaluations, over the cap of {cap}")]
    ResourceLimit { needed: u128, cap: u128 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// A candidate, identified by a short token.
///
/// Tokens are compared and ordered lexicographically; that order is also the
/// default tie-break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateId(String);

impl CandidateId {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c == '>' || c == ':') {
            return Err(Error::InvalidToken(token));
        }
        Ok(CandidateId(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CandidateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The societal order `L`: a permutation of the candidate set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Axis {
    order: Vec<CandidateId>,
}

impl Axis {
    pub fn new(order: Vec<CandidateId>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for c in &order {
            if !seen.insert(c.clone()) {
                return Err(Error::DuplicateCandidate(c.as_str().to_owned()));
            }
        }
        Ok(Axis { order })
    }

    pub fn order(&self) -> &[CandidateId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Zero-based position of `c` on the axis.
    pub fn position(&self, c: &CandidateId) -> Result<usize> {
        self.order
            .iter()
            .position(|x| x == c)
            .ok_or_else(|| Error::UnknownCandidate(c.as_str().to_owned()))
    }

    pub fn contains(&self, c: &CandidateId) -> bool {
        self.order.iter().any(|x| x == c)
    }
}

/// A top-truncated ballot: a strict ranking of a non-empty candidate subset,
/// best first. Candidates not listed are tied with each other and sit
/// strictly below every ranked candidate. The ballot is complete when it
/// ranks the whole candidate set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ballot {
    ranked: Vec<CandidateId>,
}

impl Ballot {
    pub fn new(ranked: Vec<CandidateId>) -> Result<Self> {
        if ranked.is_empty() {
            return Err(Error::EmptyBallot);
        }
        let mut seen = BTreeSet::new();
        for c in &ranked {
            if !seen.insert(c.clone()) {
                return Err(Error::DuplicateCandidate(c.as_str().to_owned()));
            }
        }
        Ok(Ballot { ranked })
    }

    /// Convenience constructor from string tokens.
    pub fn from_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ballot::new(
            tokens
                .into_iter()
                .map(CandidateId::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn ranked(&self) -> &[CandidateId] {
        &self.ranked
    }

    pub fn len(&self) -> usize {
        self.ranked.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    pub fn top(&self) -> &CandidateId {
        &self.ranked[0]
    }

    /// Rank of `c` (0-based) if ranked.
    pub fn rank_of(&self, c: &CandidateId) -> Option<usize> {
        self.ranked.iter().position(|x| x == c)
    }

    /// True iff this ballot ranks `r` strictly above `s`: either both are
    /// ranked with `r` earlier, or `r` is ranked and `s` is not. Two
    /// unranked candidates are tied.
    pub fn prefers(&self, r: &CandidateId, s: &CandidateId) -> bool {
        match (self.rank_of(r), self.rank_of(s)) {
            (Some(i), Some(j)) => i < j,
            (Some(_), None) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Ballot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.ranked.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A ballot together with its voter's non-negative integer weight.
///
/// Zero-weight voters are legal; they contribute nothing to any score or
/// margin but still count as votes (for example in maverick counts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBallot {
    pub ballot: Ballot,
    pub weight: u64,
}

impl WeightedBallot {
    pub fn new(ballot: Ballot, weight: u64) -> Self {
        WeightedBallot { ballot, weight }
    }
}

/// An election: a candidate set, an optional societal axis, and a sequence
/// of weighted ballots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    candidates: BTreeSet<CandidateId>,
    axis: Option<Axis>,
    votes: Vec<WeightedBallot>,
}

impl Profile {
    pub fn new(
        candidates: impl IntoIterator<Item = CandidateId>,
        axis: Option<Axis>,
        votes: Vec<WeightedBallot>,
    ) -> Result<Self> {
        let candidates: BTreeSet<CandidateId> = candidates.into_iter().collect();
        if let Some(axis) = &axis {
            if axis.len() != candidates.len() || !axis.order().iter().all(|c| candidates.contains(c))
            {
                return Err(Error::InvalidAxis);
            }
        }
        for vote in &votes {
            for c in vote.ballot.ranked() {
                if !candidates.contains(c) {
                    return Err(Error::UnknownCandidate(c.as_str().to_owned()));
                }
            }
        }
        Ok(Profile {
            candidates,
            axis,
            votes,
        })
    }

    pub fn candidates(&self) -> &BTreeSet<CandidateId> {
        &self.candidates
    }

    /// Number of candidates, usually written `m`.
    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    pub fn axis(&self) -> Option<&Axis> {
        self.axis.as_ref()
    }

    pub fn require_axis(&self) -> Result<&Axis> {
        self.axis.as_ref().ok_or(Error::MissingAxis)
    }

    pub fn votes(&self) -> &[WeightedBallot] {
        &self.votes
    }

    pub fn total_weight(&self) -> u128 {
        self.votes.iter().map(|v| v.weight as u128).sum()
    }

    /// Candidates in display order: axis order when an axis is present,
    /// lexicographic otherwise.
    pub fn display_order(&self) -> Vec<CandidateId> {
        match &self.axis {
            Some(axis) => axis.order().to_vec(),
            None => self.candidates.iter().cloned().collect(),
        }
    }

    /// A copy of this profile with extra votes appended (used to replay
    /// manipulation certificates and bribery plans).
    pub fn with_extra_votes(&self, extra: &[WeightedBallot]) -> Result<Profile> {
        let mut votes = self.votes.clone();
        votes.extend_from_slice(extra);
        Profile::new(self.candidates.iter().cloned(), self.axis.clone(), votes)
    }

    /// A copy with the ballots of selected voters replaced.
    pub fn with_replacements(
        &self,
        edits: &std::collections::BTreeMap<usize, Ballot>,
    ) -> Result<Profile> {
        let mut votes = self.votes.clone();
        for (&i, ballot) in edits {
            let slot = votes
                .get_mut(i)
                .ok_or_else(|| Error::Invalid(format!("no voter with index {i}")))?;
            slot.ballot = ballot.clone();
        }
        Profile::new(self.candidates.iter().cloned(), self.axis.clone(), votes)
    }
}

/// Builds candidate ids from tokens, failing on the first invalid one.
pub fn candidates<I, S>(tokens: I) -> Result<Vec<CandidateId>>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    tokens.into_iter().map(CandidateId::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cid(s: &str) -> CandidateId {
        CandidateId::new(s).unwrap()
    }

    #[test]
    fn token_validation() {
        assert!(CandidateId::new("c1").is_ok());
        assert!(CandidateId::new("").is_err());
        assert!(CandidateId::new("a b").is_err());
        assert!(CandidateId::new("a>b").is_err());
        assert!(CandidateId::new("a:b").is_err());
    }

    #[test]
    fn ballot_rejects_duplicates_and_empty() {
        assert!(Ballot::from_tokens(["p", "p"]).is_err());
        assert!(Ballot::new(vec![]).is_err());
        let b = Ballot::from_tokens(["p", "a"]).unwrap();
        assert_eq!(b.len(), 2);
        assert_eq!(b.to_string(), "p > a");
    }

    #[test]
    fn prefers_treats_unranked_as_tied_below() {
        let b = Ballot::from_tokens(["p"]).unwrap();
        assert!(b.prefers(&cid("p"), &cid("a")));
        assert!(!b.prefers(&cid("a"), &cid("b")));
        assert!(!b.prefers(&cid("a"), &cid("p")));
    }

    #[test]
    fn profile_validates_ballots_and_axis() {
        let cands = candidates(["a", "b", "p"]).unwrap();
        let axis = Axis::new(candidates(["a", "p", "b"]).unwrap()).unwrap();
        let vote = WeightedBallot::new(Ballot::from_tokens(["p", "a"]).unwrap(), 3);
        assert!(Profile::new(cands.clone(), Some(axis), vec![vote.clone()]).is_ok());

        let short_axis = Axis::new(candidates(["a", "p"]).unwrap()).unwrap();
        assert!(matches!(
            Profile::new(cands.clone(), Some(short_axis), vec![]),
            Err(Error::InvalidAxis)
        ));

        let stranger = WeightedBallot::new(Ballot::from_tokens(["z"]).unwrap(), 1);
        assert!(matches!(
            Profile::new(cands, None, vec![stranger]),
            Err(Error::UnknownCandidate(_))
        ));
    }
}
