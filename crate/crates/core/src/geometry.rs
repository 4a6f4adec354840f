//! Face colorings of a single cube and the rotation group acting on them.
//!
//! Faces are indexed Up, Down, North, East, South, West. Up/Down lie on the
//! z axis, North/South on y and East/West on x, so every corner of the cube
//! is a sign triple `(sx, sy, sz)` and touches exactly one face per axis.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Color(u8);

impl Color {
    pub fn new(value: u8) -> Result<Self> {
        if (1..=6).contains(&value) {
            Ok(Color(value))
        } else {
            Err(Error::InvalidColor(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for Color {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Color::new(value)
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Face {
    Up = 0,
    Down = 1,
    North = 2,
    East = 3,
    South = 4,
    West = 5,
}

impl Face {
    pub const ALL: [Face; 6] = [
        Face::Up,
        Face::Down,
        Face::North,
        Face::East,
        Face::South,
        Face::West,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        ['U', 'D', 'N', 'E', 'S', 'W'][self.index()]
    }

    /// Outward unit normal in (x, y, z).
    pub fn normal(self) -> [i8; 3] {
        match self {
            Face::Up => [0, 0, 1],
            Face::Down => [0, 0, -1],
            Face::North => [0, 1, 0],
            Face::East => [1, 0, 0],
            Face::South => [0, -1, 0],
            Face::West => [-1, 0, 0],
        }
    }

    pub fn from_normal(n: [i8; 3]) -> Face {
        match n {
            [0, 0, 1] => Face::Up,
            [0, 0, -1] => Face::Down,
            [0, 1, 0] => Face::North,
            [1, 0, 0] => Face::East,
            [0, -1, 0] => Face::South,
            [-1, 0, 0] => Face::West,
            _ => unreachable!("not an axis unit vector: {n:?}"),
        }
    }

    /// The face on `axis` (0 = x, 1 = y, 2 = z) pointing in the direction of `positive`.
    pub fn on_axis(axis: usize, positive: bool) -> Face {
        match (axis, positive) {
            (0, true) => Face::East,
            (0, false) => Face::West,
            (1, true) => Face::North,
            (1, false) => Face::South,
            (2, true) => Face::Up,
            (2, false) => Face::Down,
            _ => unreachable!("axis out of range"),
        }
    }
}

/// Colors on the six faces, indexed by [`Face`]. Always a bijection onto 1..=6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceColoring([u8; 6]);

impl FaceColoring {
    pub fn new(faces: [u8; 6]) -> Result<Self> {
        let mut seen = 0u8;
        for &c in &faces {
            if !(1..=6).contains(&c) || seen & (1 << c) != 0 {
                return Err(Error::InvalidColoring(faces));
            }
            seen |= 1 << c;
        }
        Ok(FaceColoring(faces))
    }

    pub fn colors(&self) -> [u8; 6] {
        self.0
    }

    pub fn color(&self, face: Face) -> Color {
        Color(self.0[face.index()])
    }

    /// Every assignment of the six colors to the six faces, 720 in total.
    pub fn all() -> impl Iterator<Item = FaceColoring> {
        use itertools::Itertools;
        (1..=6u8).permutations(6).map(|p| {
            let mut faces = [0u8; 6];
            faces.copy_from_slice(&p);
            FaceColoring(faces)
        })
    }

    pub fn rotated(&self, rotation: &Rotation) -> FaceColoring {
        let mut out = [0u8; 6];
        for f in 0..6 {
            out[rotation.face_map[f] as usize] = self.0[f];
        }
        FaceColoring(out)
    }

    /// Apply a color relabelling `c -> perm[c - 1]` to every face.
    pub fn recolored(&self, perm: &[u8; 6]) -> FaceColoring {
        FaceColoring(self.0.map(|c| perm[c as usize - 1]))
    }

    /// Least of the 24 rotated variants under lexicographic order.
    pub fn canonical(&self) -> FaceColoring {
        Rotation::all()
            .iter()
            .map(|r| self.rotated(r))
            .min()
            .expect("rotation group is non-empty")
    }

    /// Colors at one corner, read clockwise as seen from outside the cube.
    pub fn corner_colors(&self, corner: Corner, convention: Chirality) -> [u8; 3] {
        let faces = corner.clockwise_faces(convention);
        faces.map(|f| self.0[f.index()])
    }
}

impl fmt::Display for FaceColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (face, c) in Face::ALL.iter().zip(self.0) {
            write!(f, "{}{}", face.letter(), c)?;
        }
        Ok(())
    }
}

/// A proper rotation of the cube, stored as the image of each face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rotation {
    face_map: [u8; 6],
}

impl Rotation {
    pub fn identity() -> Rotation {
        Rotation {
            face_map: [0, 1, 2, 3, 4, 5],
        }
    }

    /// Where `face` ends up after the rotation.
    pub fn apply(&self, face: Face) -> Face {
        Face::ALL[self.face_map[face.index()] as usize]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Rotation) -> Rotation {
        let mut face_map = [0u8; 6];
        for (f, slot) in face_map.iter_mut().enumerate() {
            *slot = self.face_map[other.face_map[f] as usize];
        }
        Rotation { face_map }
    }

    pub fn inverse(&self) -> Rotation {
        let mut face_map = [0u8; 6];
        for (f, &g) in self.face_map.iter().enumerate() {
            face_map[g as usize] = f as u8;
        }
        Rotation { face_map }
    }

    /// The 24 rotations: signed permutation matrices of determinant +1.
    pub fn all() -> &'static [Rotation; 24] {
        static ROTATIONS: OnceLock<[Rotation; 24]> = OnceLock::new();
        ROTATIONS.get_or_init(|| {
            let mut out = Vec::with_capacity(24);
            let perms = [
                [0, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ];
            for axes in perms {
                for signs in 0..8u8 {
                    let s = [0, 1, 2].map(|i| if signs >> i & 1 == 1 { -1i8 } else { 1 });
                    // Row i of the matrix has s[i] in column axes[i].
                    let mut m = [[0i8; 3]; 3];
                    for i in 0..3 {
                        m[i][axes[i]] = s[i];
                    }
                    if det3(&m) != 1 {
                        continue;
                    }
                    let mut face_map = [0u8; 6];
                    for f in Face::ALL {
                        let n = f.normal();
                        let image = [0, 1, 2].map(|i| (0..3).map(|j| m[i][j] * n[j]).sum::<i8>());
                        face_map[f.index()] = Face::from_normal(image) as u8;
                    }
                    out.push(Rotation { face_map });
                }
            }
            out.try_into().expect("exactly 24 proper rotations")
        })
    }
}

fn det3(m: &[[i8; 3]; 3]) -> i8 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Which cyclic order of a corner's three faces counts as clockwise.
///
/// `Standard` is clockwise for a right-handed frame viewed from outside;
/// `Flipped` reads every corner the other way round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Standard,
    Flipped,
}

/// One of the 8 corners of a cube, identified by the sign of each coordinate.
/// Doubles as a position `(x, y, z) in {0,1}^3` in the 2x2x2 model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    positive: [bool; 3],
}

impl Corner {
    pub fn all() -> [Corner; 8] {
        std::array::from_fn(|i| Corner {
            positive: [i & 1 != 0, i & 2 != 0, i & 4 != 0],
        })
    }

    pub fn from_position(xyz: [u8; 3]) -> Corner {
        Corner {
            positive: xyz.map(|v| v != 0),
        }
    }

    pub fn position(&self) -> [u8; 3] {
        self.positive.map(u8::from)
    }

    pub fn index(&self) -> usize {
        self.positive
            .iter()
            .enumerate()
            .map(|(i, &p)| usize::from(p) << i)
            .sum()
    }

    /// The three faces meeting here, one per axis in x, y, z order.
    pub fn faces(&self) -> [Face; 3] {
        [0, 1, 2].map(|axis| Face::on_axis(axis, self.positive[axis]))
    }

    /// The three faces of this corner in clockwise order seen from outside.
    pub fn clockwise_faces(&self, convention: Chirality) -> [Face; 3] {
        let [x, y, z] = self.faces();
        let odd_negatives = self.positive.iter().filter(|p| !**p).count() % 2 == 1;
        // Looking down the diagonal at a corner whose sign product is +1,
        // x -> y -> z turns counter-clockwise.
        let standard = if odd_negatives { [x, y, z] } else { [x, z, y] };
        match convention {
            Chirality::Standard => standard,
            Chirality::Flipped => [standard[0], standard[2], standard[1]],
        }
    }
}
