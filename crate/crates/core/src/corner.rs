use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Three distinct colors around a cube corner, stored as the least of their
/// three cyclic rotations. Ordering matches the numeric value (`123 < 132`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CornerNumber([u8; 3]);

impl CornerNumber {
    /// Canonicalize a clockwise triple of colors.
    pub fn new(triple: [u8; 3]) -> Result<Self> {
        let [a, b, c] = triple;
        if a == b || b == c || a == c || [a, b, c].iter().any(|v| !(1..=6).contains(v)) {
            return Err(Error::InvalidCorner(triple));
        }
        let rotations = [[a, b, c], [b, c, a], [c, a, b]];
        Ok(CornerNumber(rotations.into_iter().min().unwrap()))
    }

    pub fn from_value(value: u16) -> Result<Self> {
        if value >= 1000 {
            return Err(Error::InvalidCorner([0, 0, 0]));
        }
        let digits = [
            (value / 100) as u8,
            (value / 10 % 10) as u8,
            (value % 10) as u8,
        ];
        let c = CornerNumber::new(digits)?;
        if c.0 != digits {
            // Not already in least rotation; the table only ever stores canonical forms.
            return Err(Error::InvalidCorner(digits));
        }
        Ok(c)
    }

    pub fn digits(self) -> [u8; 3] {
        self.0
    }

    pub fn value(self) -> u16 {
        self.0[0] as u16 * 100 + self.0[1] as u16 * 10 + self.0[2] as u16
    }

    /// The same colors read the other way round.
    pub fn reversed(self) -> CornerNumber {
        let [a, b, c] = self.0;
        CornerNumber::new([c, b, a]).unwrap()
    }

    pub fn recolored(self, perm: &[u8; 6]) -> CornerNumber {
        CornerNumber::new(self.0.map(|c| perm[c as usize - 1])).unwrap()
    }

    /// All 40 corner numbers in ascending order.
    pub fn all() -> &'static [CornerNumber; 40] {
        static ALL: OnceLock<[CornerNumber; 40]> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut v = Vec::new();
            for a in 1..=6 {
                for b in 1..=6 {
                    for c in 1..=6 {
                        if let Ok(cn) = CornerNumber::new([a, b, c]) {
                            v.push(cn);
                        }
                    }
                }
            }
            v.sort();
            v.dedup();
            v.try_into().expect("40 corner numbers over six colors")
        })
    }

    /// Position in [`CornerNumber::all`], used as a bit index.
    pub fn index(self) -> usize {
        Self::all()
            .binary_search(&self)
            .expect("canonical corner number")
    }

    pub fn bit(self) -> u64 {
        1u64 << self.index()
    }
}

impl fmt::Display for CornerNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for CornerNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.len() != 3 || !bytes.iter().all(u8::is_ascii_digit) {
            return Err(Error::InvalidCorner([0, 0, 0]));
        }
        CornerNumber::new([bytes[0] - b'0', bytes[1] - b'0', bytes[2] - b'0'])
    }
}

impl TryFrom<String> for CornerNumber {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CornerNumber> for String {
    fn from(c: CornerNumber) -> String {
        c.to_string()
    }
}
