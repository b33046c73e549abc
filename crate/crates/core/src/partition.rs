//! The partition value type and its per-partition statistics.
//!
//! A [`Partition`] is stored as a weakly decreasing list of positive parts
//! together with its cached weight. The multiplicity form `(a^m, ...)` is a
//! projection computed on demand ([`MultiplicityView`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition: parts weakly decreasing and strictly positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// The unique partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Sorts arbitrary positive entries into canonical (weakly decreasing) form.
    pub fn canonicalize(raw: &[i64]) -> Result<Self> {
        let mut parts = Vec::with_capacity(raw.len());
        for &x in raw {
            if x < 1 || x > u32::MAX as i64 {
                return Err(Error::NonPositivePart(x));
            }
            parts.push(x as u32);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from any multiset of positive parts.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// Builds a partition from parts already in weakly decreasing order.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        let weight = parts.iter().sum();
        Self { parts, weight }
    }

    /// Expands `(part, multiplicity)` pairs in any order; zero multiplicities are skipped.
    pub fn from_multiplicities<I: IntoIterator<Item = (u32, u32)>>(entries: I) -> Self {
        let mut parts = Vec::new();
        for (part, mult) in entries {
            parts.extend(std::iter::repeat(part).take(mult as usize));
        }
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    pub fn multiplicities(&self) -> MultiplicityView {
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match entries.last_mut() {
                Some((size, m)) if *size == p => *m += 1,
                _ => entries.push((p, 1)),
            }
        }
        MultiplicityView { entries }
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Self::from_sorted(parts)
    }

    /// Splits into (parts satisfying `pred`, the rest), both in canonical order.
    pub fn split_by(&self, pred: impl Fn(u32) -> bool) -> (Partition, Partition) {
        let (yes, no): (Vec<u32>, Vec<u32>) = self.parts.iter().partition(|&&p| pred(p));
        (Self::from_sorted(yes), Self::from_sorted(no))
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let Some(largest) = self.largest() else {
            return Partition::empty();
        };
        let mut conj = Vec::with_capacity(largest as usize);
        let mut rows = self.parts.len();
        for j in 1..=largest {
            while rows > 0 && self.parts[rows - 1] < j {
                rows -= 1;
            }
            conj.push(rows as u32);
        }
        Self::from_sorted(conj)
    }

    /// Side of the Durfee square, `max{i : λ_i >= i}`; 0 for the empty partition.
    pub fn order(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// Number of distinct even part sizes.
    pub fn distinct_even_part_count(&self) -> usize {
        self.multiplicities()
            .entries()
            .iter()
            .filter(|(size, _)| size % 2 == 0)
            .count()
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Text form using exponent shorthand, e.g. `4,2^2,1^2`.
    pub fn to_shorthand(&self) -> String {
        if self.is_empty() {
            return "()".to_string();
        }
        self.multiplicities()
            .entries()
            .iter()
            .map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Expanded text form, e.g. `4,2,2,1,1`; the empty partition prints as `()`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `part(^mult)?(,part(^mult)?)*` with parts weakly decreasing.
/// An empty string or `()` is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let s = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let mut parts = Vec::new();
        for raw in s.split(',') {
            let token = raw.trim();
            let bad = |reason: &str| Error::Parse {
                token: token.to_string(),
                reason: reason.to_string(),
            };
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (p.trim(), Some(m.trim())),
                None => (token, None),
            };
            let part: u32 = part.parse().map_err(|_| bad("part is not a positive integer"))?;
            if part == 0 {
                return Err(bad("parts must be positive"));
            }
            let mult: u32 = match mult {
                Some(m) => m.parse().map_err(|_| bad("multiplicity is not an integer"))?,
                None => 1,
            };
            if mult == 0 {
                return Err(bad("multiplicity must be positive"));
            }
            if parts.last().is_some_and(|&prev| prev < part) {
                return Err(bad("parts must be weakly decreasing"));
            }
            parts.extend(std::iter::repeat(part).take(mult as usize));
        }
        Ok(Partition::from_sorted(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(size, multiplicity)` pairs with sizes strictly decreasing and multiplicities positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityView {
    entries: Vec<(u32, u32)>,
}

impl MultiplicityView {
    /// Drops zero-multiplicity entries and merges repeated sizes.
    pub fn new(entries: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut entries: Vec<(u32, u32)> = entries.into_iter().filter(|&(_, m)| m > 0).collect();
        entries.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(entries.len());
        for (size, m) in entries {
            match merged.last_mut() {
                Some((s, acc)) if *s == size => *acc += m,
                _ => merged.push((size, m)),
            }
        }
        Self { entries: merged }
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|&(s, m)| s * m).sum()
    }

    pub fn expand(&self) -> Partition {
        Partition::from_multiplicities(self.entries.iter().copied())
    }
}
