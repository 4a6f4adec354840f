use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("color {0} is outside 1..=6")]
    InvalidColor(u8),

    #[error("face coloring {0:?} is not a bijection onto the six colors")]
    InvalidColoring([u8; 6]),

    #[error("corner triple {0:?} repeats a color")]
    InvalidCorner([u8; 3]),

    #[error("'{0}' is not a cube name (expected row A-F then a different column a-f)")]
    InvalidName(String),

    #[error("color permutation {0:?} is not a bijection on 1..=6")]
    InvalidPermutation([u8; 6]),

    #[error("coloring {0:?} matches no row of the reference corner table")]
    UnknownCube([u8; 6]),

    #[error("reference corner table mismatch under both corner reading conventions: {0}")]
    Bootstrap(String),

    #[error("collection has {found} cubes, expected {expected}")]
    CollectionSize { expected: usize, found: usize },

    #[error("cube set has {0} cubes, at least 8 are required")]
    SetTooSmall(usize),

    #[error("duplicate cube {0} in collection")]
    DuplicateCube(String),

    #[error("cube {cube} has no corner {corner}")]
    NoOrientation { cube: String, corner: String },

    #[error("invalid five-target rule: {0}")]
    InvalidRule(String),

    #[error("oracle disagreement: {0}")]
    OracleMismatch(String),

    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
