//! The nested depth-interval system and the height function driving it.
//!
//! `h(1) = 3`, `h(l) = 2 + 2 h(l-1)`, equivalently `h(l) = 5 * 2^(l-1) - 2`.
//! The system for parameter `l` holds `(1, h(l))` plus two shifted copies of
//! the system for `l - 1`, one shifted by 1 and one by `h(l-1) + 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest parameter for which `h` is exactly representable.
pub const MAX_HEIGHT_PARAM: u32 = 60;

/// Closed form of the height function.
pub fn h(ell: u32) -> Result<u64> {
    if ell == 0 {
        return Err(Error::Domain("h is defined for ell >= 1".into()));
    }
    if ell > MAX_HEIGHT_PARAM {
        return Err(Error::Overflow(format!(
            "h({ell}) exceeds the supported width"
        )));
    }
    1u64.checked_shl(ell - 1)
        .and_then(|p| p.checked_mul(5))
        .and_then(|v| v.checked_sub(2))
        .ok_or_else(|| Error::Overflow(format!("h({ell})")))
}

/// The height function evaluated by its recurrence. Kept separate from [`h`]
/// so the two can be checked against each other.
pub fn h_recurrence(ell: u32) -> Result<u64> {
    if ell == 0 {
        return Err(Error::Domain("h is defined for ell >= 1".into()));
    }
    let mut value: u64 = 3;
    for _ in 1..ell {
        value = value
            .checked_mul(2)
            .and_then(|v| v.checked_add(2))
            .ok_or_else(|| Error::Overflow(format!("h({ell}) by recurrence")))?;
    }
    Ok(value)
}

/// Inverse of `h`: the rank whose height equals `len`, if any.
pub fn rank_of_length(len: u64) -> Option<u32> {
    (1..=MAX_HEIGHT_PARAM).find(|&a| h(a) == Ok(len))
}

/// A depth interval `(lo, hi)` with `hi = lo + h(rank) - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
    pub rank: u32,
}

impl Interval {
    /// Builds an interval, deriving its rank from its length.
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo == 0 || hi <= lo {
            return Err(Error::Domain(format!(
                "({lo}, {hi}) is not a valid interval"
            )));
        }
        let rank = rank_of_length(hi - lo + 1).ok_or_else(|| {
            Error::Contract(format!("length of ({lo}, {hi}) is not a value of h"))
        })?;
        Ok(Interval { lo, hi, rank })
    }

    /// Whether `d` lies strictly between the endpoints.
    pub fn contains_strictly(&self, d: u64) -> bool {
        self.lo < d && d < self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Translates every interval by `by`, preserving ranks.
pub fn shift(intervals: &[Interval], by: u64) -> Vec<Interval> {
    intervals
        .iter()
        .map(|iv| Interval {
            lo: iv.lo + by,
            hi: iv.hi + by,
            rank: iv.rank,
        })
        .collect()
}

/// The interval system for one parameter value, sorted by `lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSystem {
    ell: u32,
    intervals: Vec<Interval>,
}

impl IntervalSystem {
    /// Wraps an arbitrary interval list. No validation happens here; see
    /// [`validate`].
    pub fn from_parts(ell: u32, mut intervals: Vec<Interval>) -> Self {
        intervals.sort();
        IntervalSystem { ell, intervals }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// The interval starting at depth `d`, if any.
    pub fn starting_at(&self, d: u64) -> Option<&Interval> {
        self.intervals_with_lo(d).first()
    }

    /// All intervals with `lo == d`. Distinct endpoints make this at most one.
    pub fn intervals_with_lo(&self, d: u64) -> &[Interval] {
        let start = self.intervals.partition_point(|iv| iv.lo < d);
        let end = self.intervals.partition_point(|iv| iv.lo <= d);
        &self.intervals[start..end]
    }

    /// The interval `(lo, hi)` if it belongs to the system.
    pub fn find(&self, lo: u64, hi: u64) -> Option<&Interval> {
        self.intervals_with_lo(lo).iter().find(|iv| iv.hi == hi)
    }
}

/// Builds the system for `ell` by the recursive definition.
pub fn build_intervals(ell: u32) -> Result<IntervalSystem> {
    if ell == 0 {
        return Err(Error::Domain(
            "interval systems are defined for ell >= 1".into(),
        ));
    }
    if ell > 30 {
        return Err(Error::Resource(format!(
            "interval system for ell = {ell} has 2^{ell} - 1 members"
        )));
    }
    let mut current = vec![Interval::new(1, 3)?];
    for level in 2..=ell {
        let prev_height = h(level - 1)?;
        let mut next = Vec::with_capacity(2 * current.len() + 1);
        next.push(Interval::new(1, h(level)?)?);
        next.extend(shift(&current, 1));
        next.extend(shift(&current, prev_height + 1));
        current = next;
    }
    Ok(IntervalSystem::from_parts(ell, current))
}

/// Lists every structural property the system violates. Empty means valid.
pub fn validate(sys: &IntervalSystem) -> Vec<String> {
    let mut violations = Vec::new();
    let ivs = sys.intervals();

    let expected = 1u64.checked_shl(sys.ell()).map(|p| p - 1);
    if expected != Some(ivs.len() as u64) {
        violations.push(format!(
            "cardinality {} differs from 2^{} - 1",
            ivs.len(),
            sys.ell()
        ));
    }

    match h(sys.ell()) {
        Ok(top) => {
            for iv in ivs {
                if iv.lo < 1 || iv.hi > top {
                    violations.push(format!("{iv} leaves the range [1, {top}]"));
                }
            }
        }
        Err(e) => violations.push(format!("height of the system undefined: {e}")),
    }

    for iv in ivs {
        if iv.hi <= iv.lo {
            violations.push(format!("{iv} is empty or reversed"));
            continue;
        }
        let ok = h(iv.rank).is_ok_and(|len| iv.hi - iv.lo + 1 == len && iv.rank <= sys.ell());
        if !ok {
            violations.push(format!(
                "{iv} does not have the shape (i, i + h(a) - 1) for its rank {}",
                iv.rank
            ));
        }
    }

    let mut endpoints: Vec<u64> = ivs.iter().flat_map(|iv| [iv.lo, iv.hi]).collect();
    endpoints.sort_unstable();
    for w in endpoints.windows(2) {
        if w[0] == w[1] {
            violations.push(format!("endpoint {} is shared", w[0]));
        }
    }

    for a in ivs {
        for b in ivs {
            if a.lo < b.lo && b.lo < a.hi && a.hi < b.hi {
                violations.push(format!("{a} crosses {b}"));
            }
        }
    }
    violations
}
