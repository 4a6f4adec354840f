//! Exact solution numbers for the MacMahon colored-cube 2x2x2 target puzzle.

pub mod arrangement;
pub mod combinations;
pub mod corner;
pub mod cube;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod oracle;
pub mod recolor;
mod reference;
pub mod set;
pub mod solver;
pub mod tableau;
pub mod universal;

pub use corner::CornerNumber;
pub use cube::{Cube, CubeId, CubeName};
pub use error::{Error, Result};
pub use geometry::{Color, Corner, Face, FaceColoring, Rotation};
pub use recolor::ColorPermutation;
pub use set::{Collection, CubeSet};
pub use solver::solution_number;
pub use tableau::Tableau;
