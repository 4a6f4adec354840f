use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on the colors 1..=6, stored as `mapping[c - 1]` = image of `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColorPermutation([u8; 6]);

impl ColorPermutation {
    pub fn new(mapping: [u8; 6]) -> Result<Self> {
        let mut seen = 0u8;
        for &c in &mapping {
            if !(1..=6).contains(&c) || seen & (1 << c) != 0 {
                return Err(Error::InvalidPermutation(mapping));
            }
            seen |= 1 << c;
        }
        Ok(ColorPermutation(mapping))
    }

    pub fn identity() -> Self {
        ColorPermutation([1, 2, 3, 4, 5, 6])
    }

    pub fn mapping(&self) -> &[u8; 6] {
        &self.0
    }

    pub fn apply(&self, color: u8) -> u8 {
        self.0[color as usize - 1]
    }

    /// `self` after `other`: `c -> self(other(c))`.
    pub fn compose(&self, other: &ColorPermutation) -> ColorPermutation {
        ColorPermutation(other.0.map(|c| self.apply(c)))
    }

    pub fn inverse(&self) -> ColorPermutation {
        let mut out = [0u8; 6];
        for (i, &c) in self.0.iter().enumerate() {
            out[c as usize - 1] = i as u8 + 1;
        }
        ColorPermutation(out)
    }

    /// All 720 permutations in ascending lexicographic order.
    pub fn all() -> Vec<ColorPermutation> {
        use itertools::Itertools;
        (1..=6u8)
            .permutations(6)
            .map(|p| ColorPermutation(p.try_into().unwrap()))
            .collect()
    }

    /// Cycle lengths, longest first, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 6];
        let mut lengths = Vec::new();
        for start in 0..6 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for ColorPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // cycle notation, fixed points omitted
        let mut seen = [false; 6];
        let mut any = false;
        for start in 0..6 {
            if seen[start] || self.0[start] as usize - 1 == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize - 1;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
