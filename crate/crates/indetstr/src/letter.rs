use crate::error::{Error, Result};

/// A single entry of a string: the don't-care, one character, or a set of
/// at least two characters, stored as strictly ascending 1-based ranks
/// (normal form).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Matches every letter of the alphabet; encoded as code 0.
    DontCare,
    /// Exactly one character (scope 1).
    Regular(u32),
    /// Two or more characters, strictly ascending.
    Indeterminate(Vec<u32>),
}

impl Letter {
    pub fn regular(rank: u32) -> Self {
        Letter::Regular(rank)
    }

    /// Builds a letter from character ranks, normalizing to ascending order.
    /// A single rank yields a regular letter; duplicates and rank 0 are
    /// rejected.
    pub fn from_ranks<I: IntoIterator<Item = u32>>(ranks: I) -> Result<Self> {
        let mut ranks: Vec<u32> = ranks.into_iter().collect();
        if ranks.is_empty() {
            return Err(Error::EmptyLetter);
        }
        ranks.sort_unstable();
        for pair in ranks.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateRank { rank: pair[0] });
            }
        }
        if ranks[0] == 0 {
            return Err(Error::RankOutOfRange { rank: 0, sigma: 0 });
        }
        if ranks.len() == 1 {
            Ok(Letter::Regular(ranks[0]))
        } else {
            Ok(Letter::Indeterminate(ranks))
        }
    }

    pub fn is_dont_care(&self) -> bool {
        matches!(self, Letter::DontCare)
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, Letter::Regular(_))
    }

    pub fn is_indeterminate(&self) -> bool {
        matches!(self, Letter::Indeterminate(_))
    }

    /// Number of characters the letter stands for. The don't-care counts as
    /// the whole alphabet, so a string containing one always has scope
    /// `sigma`.
    pub fn scope(&self, sigma: u32) -> u32 {
        match self {
            Letter::DontCare => sigma,
            Letter::Regular(_) => 1,
            Letter::Indeterminate(ranks) => ranks.len() as u32,
        }
    }

    pub fn contains(&self, rank: u32) -> bool {
        match self {
            Letter::DontCare => true,
            Letter::Regular(r) => *r == rank,
            Letter::Indeterminate(ranks) => ranks.binary_search(&rank).is_ok(),
        }
    }

    /// Largest rank mentioned explicitly; `None` for the don't-care.
    pub fn max_rank(&self) -> Option<u32> {
        match self {
            Letter::DontCare => None,
            Letter::Regular(r) => Some(*r),
            Letter::Indeterminate(ranks) => ranks.last().copied(),
        }
    }
}

/// The match relation: nonempty intersection of character sets, with the
/// don't-care matching everything (including another don't-care).
pub fn letters_match(a: &Letter, b: &Letter) -> bool {
    match (a, b) {
        (Letter::DontCare, _) | (_, Letter::DontCare) => true,
        (Letter::Regular(x), Letter::Regular(y)) => x == y,
        (Letter::Regular(x), Letter::Indeterminate(v))
        | (Letter::Indeterminate(v), Letter::Regular(x)) => v.binary_search(x).is_ok(),
        (Letter::Indeterminate(u), Letter::Indeterminate(v)) => sorted_intersect(u, v),
    }
}

/// Linear merge over two strictly ascending rank lists.
pub(crate) fn sorted_intersect(u: &[u32], v: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < u.len() && j < v.len() {
        match u[i].cmp(&v[j]) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    false
}
