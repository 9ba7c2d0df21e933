//! Multisets of sizes written in the `k×s` notation, e.g. `5×4, 22×5`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Counts of items per size. Ordering is lexicographic over `(size, count)`
/// pairs in ascending size, which sorts `30×3, 10×4` before `31×3, 8×4, 1×5`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SizeCounts(BTreeMap<usize, usize>);

/// Face sizes of a plane graph (`F_i` faces of size `i`).
pub type FaceSequence = SizeCounts;
/// Vertex degrees of a graph.
pub type DegreeSequence = SizeCounts;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse size sequence `{0}`")]
pub struct ParseSequenceError(pub String);

impl SizeCounts {
    pub fn new() -> Self {
        SizeCounts::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut s = SizeCounts::new();
        for (count, size) in pairs {
            s.add(size, count);
        }
        s
    }

    pub fn add(&mut self, size: usize, count: usize) {
        if count > 0 {
            *self.0.entry(size).or_insert(0) += count;
        }
    }

    pub fn count(&self, size: usize) -> usize {
        self.0.get(&size).copied().unwrap_or(0)
    }

    /// Total number of items.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Sum of `size * count`.
    pub fn weighted_sum(&self) -> usize {
        self.0.iter().map(|(s, c)| s * c).sum()
    }

    pub fn min_size(&self) -> Option<usize> {
        self.0.keys().next().copied()
    }

    pub fn max_size(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    /// `(size, count)` pairs in ascending size.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|(&s, &c)| (s, c))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<usize> for SizeCounts {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = SizeCounts::new();
        for size in iter {
            s.add(size, 1);
        }
        s
    }
}

impl fmt::Display for SizeCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (size, count)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{count}×{size}")?;
        }
        Ok(())
    }
}

impl FromStr for SizeCounts {
    type Err = ParseSequenceError;

    /// Accepts `×`, `x` or `*` as the separator.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseSequenceError(s.to_string());
        let mut out = SizeCounts::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (count, size) = part
                .split_once('×')
                .or_else(|| part.split_once('x'))
                .or_else(|| part.split_once('*'))
                .ok_or_else(err)?;
            let count: usize = count.trim().parse().map_err(|_| err())?;
            let size: usize = size.trim().parse().map_err(|_| err())?;
            out.add(size, count);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_like_the_tables() {
        let s: SizeCounts = [5, 4, 5, 4, 4].into_iter().collect();
        assert_eq!(s.to_string(), "3×4, 2×5");
        let t: SizeCounts = "5×4, 22×5".parse().unwrap();
        assert_eq!(t.count(4), 5);
        assert_eq!(t.count(5), 22);
        assert_eq!(t.total(), 27);
        assert_eq!(t.weighted_sum(), 130);
        assert_eq!("5x4,22x5".parse::<SizeCounts>().unwrap(), t);
        assert!("5y4".parse::<SizeCounts>().is_err());
    }

    #[test]
    fn ordering_matches_table_rows() {
        let rows: Vec<SizeCounts> = [
            "33×3, 4×4, 3×5",
            "30×3, 10×4",
            "32×3, 6×4, 2×5",
            "31×3, 8×4, 1×5",
        ]
        .iter()
        .map(|r| r.parse().unwrap())
        .collect();
        let mut sorted = rows.clone();
        sorted.sort();
        let text: Vec<String> = sorted.iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            ["30×3, 10×4", "31×3, 8×4, 1×5", "32×3, 6×4, 2×5", "33×3, 4×4, 3×5"]
        );
    }
}
