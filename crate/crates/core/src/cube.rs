use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corner::CornerNumber;
use crate::error::{Error, Result};
use crate::geometry::FaceColoring;

/// Stable index 0..30 of a cube in tableau reading order (Ab = 0, ..., Fe = 29).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CubeId(u8);

impl CubeId {
    pub const COUNT: usize = 30;

    pub fn new(id: usize) -> Option<CubeId> {
        (id < Self::COUNT).then_some(CubeId(id as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = CubeId> {
        (0..Self::COUNT as u8).map(CubeId)
    }

    pub fn name(self) -> CubeName {
        CubeName::from_id(self)
    }
}

/// Row letter A-F and column letter a-f of a cube in Conway's tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CubeName {
    row: u8,
    col: u8,
}

impl CubeName {
    pub fn new(row: u8, col: u8) -> Result<CubeName> {
        if row >= 6 || col >= 6 || row == col {
            return Err(Error::InvalidName(format!("row {row} col {col}")));
        }
        Ok(CubeName { row, col })
    }

    pub fn row(self) -> u8 {
        self.row
    }

    pub fn col(self) -> u8 {
        self.col
    }

    pub fn id(self) -> CubeId {
        let col = if self.col < self.row {
            self.col
        } else {
            self.col - 1
        };
        CubeId(self.row * 5 + col)
    }

    pub fn from_id(id: CubeId) -> CubeName {
        let row = id.0 / 5;
        let mut col = id.0 % 5;
        if col >= row {
            col += 1;
        }
        CubeName { row, col }
    }

    /// Xy -> Yx.
    pub fn mirror(self) -> CubeName {
        CubeName {
            row: self.col,
            col: self.row,
        }
    }
}

impl fmt::Display for CubeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            (b'A' + self.row) as char,
            (b'a' + self.col) as char
        )
    }
}

impl FromStr for CubeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<CubeName> {
        let bad = || Error::InvalidName(s.to_string());
        let b = s.trim().as_bytes();
        if b.len() != 2 || !(b'A'..=b'F').contains(&b[0]) || !(b'a'..=b'f').contains(&b[1]) {
            return Err(bad());
        }
        CubeName::new(b[0] - b'A', b[1] - b'a').map_err(|_| bad())
    }
}

impl TryFrom<String> for CubeName {
    type Error = Error;

    fn try_from(s: String) -> Result<CubeName> {
        s.parse()
    }
}

impl From<CubeName> for String {
    fn from(n: CubeName) -> String {
        n.to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cube {
    pub id: CubeId,
    pub name: CubeName,
    /// Least rotation of the face coloring.
    pub coloring: FaceColoring,
    /// Sorted ascending.
    pub corners: [CornerNumber; 8],
    /// Bit `i` set iff `CornerNumber::all()[i]` is a corner of this cube.
    pub corner_mask: u64,
}

impl Cube {
    pub fn has_corner(&self, corner: CornerNumber) -> bool {
        self.corner_mask & corner.bit() != 0
    }

    pub fn usable_corner_count(&self, target: &Cube) -> u32 {
        (self.corner_mask & target.corner_mask).count_ones()
    }
}

pub(crate) fn corner_mask(corners: &[CornerNumber]) -> u64 {
    corners.iter().fold(0, |m, c| m | c.bit())
}
