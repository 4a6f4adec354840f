//! The 30 MacMahon cubes arranged in Conway's tableau, rebuilt from the 720
//! face colorings and checked against the reference corner table.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::corner::CornerNumber;
use crate::cube::{corner_mask, Cube, CubeId, CubeName};
use crate::error::{Error, Result};
use crate::geometry::{Chirality, Corner, FaceColoring};
use crate::recolor::ColorPermutation;
use crate::reference::CORNER_TABLE;
use crate::set::CubeSet;

#[derive(Debug)]
pub struct Tableau {
    cubes: Vec<Cube>,
    by_coloring: HashMap<FaceColoring, CubeId>,
    chirality: Chirality,
    permutations: Vec<ColorPermutation>,
    /// `recolor[p][c]` is the id of cube `c` after color permutation `p`.
    recolor: Vec<[u8; 30]>,
}

impl Tableau {
    /// Shared instance. Panics if the reference table cannot be reproduced,
    /// which means the corner geometry itself is wrong.
    pub fn global() -> &'static Tableau {
        static TABLEAU: OnceLock<Tableau> = OnceLock::new();
        TABLEAU.get_or_init(|| match Tableau::build() {
            Ok(t) => t,
            Err(e) => panic!("cube tableau bootstrap failed: {e}"),
        })
    }

    /// Try the standard clockwise reading first, then the mirrored one.
    pub fn build() -> Result<Tableau> {
        match Tableau::build_with(Chirality::Standard) {
            Ok(t) => Ok(t),
            Err(first) => Tableau::build_with(Chirality::Flipped)
                .map_err(|second| Error::Bootstrap(format!("{first}; flipped: {second}"))),
        }
    }

    pub fn build_with(chirality: Chirality) -> Result<Tableau> {
        let reference: HashMap<u64, CubeId> = reference_masks()?
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, CubeId::new(i).unwrap()))
            .collect();
        if reference.len() != 30 {
            return Err(Error::Bootstrap(
                "reference rows are not pairwise distinct".into(),
            ));
        }

        let mut classes: HashMap<FaceColoring, Vec<FaceColoring>> = HashMap::new();
        for c in FaceColoring::all() {
            classes.entry(c.canonical()).or_default().push(c);
        }
        if classes.len() != 30 || classes.values().any(|v| v.len() != 24) {
            return Err(Error::Bootstrap(format!(
                "{} rotation classes",
                classes.len()
            )));
        }

        let mut slots: Vec<Option<Cube>> = vec![None; 30];
        let mut by_coloring = HashMap::with_capacity(720);
        for (canonical, members) in &classes {
            let corners = corner_numbers_with(canonical, chirality);
            let mask = corner_mask(&corners);
            let id = *reference
                .get(&mask)
                .ok_or(Error::UnknownCube(canonical.colors()))?;
            if slots[id.index()].is_some() {
                return Err(Error::Bootstrap(format!(
                    "two colorings claim {}",
                    id.name()
                )));
            }
            slots[id.index()] = Some(Cube {
                id,
                name: id.name(),
                coloring: *canonical,
                corners,
                corner_mask: mask,
            });
            for m in members {
                by_coloring.insert(*m, id);
            }
        }
        let cubes: Vec<Cube> = slots.into_iter().map(Option::unwrap).collect();

        let permutations = ColorPermutation::all();
        let recolor = permutations
            .iter()
            .map(|p| {
                let mut row = [0u8; 30];
                for cube in &cubes {
                    let image = cube.coloring.recolored(p.mapping());
                    row[cube.id.index()] = by_coloring[&image].index() as u8;
                }
                row
            })
            .collect();

        let t = Tableau {
            cubes,
            by_coloring,
            chirality,
            permutations,
            recolor,
        };
        t.check_structure()?;
        Ok(t)
    }

    fn check_structure(&self) -> Result<()> {
        let full = (1u64 << 40) - 1;
        for line in 0..6u8 {
            let row = self.row_set(line);
            let col = self.column_set(line);
            for (what, set) in [("row", row), ("column", col)] {
                let mut union = 0u64;
                for id in set.iter() {
                    let m = self.cube(id).corner_mask;
                    if union & m != 0 {
                        return Err(Error::Bootstrap(format!("{what} {line} repeats a corner")));
                    }
                    union |= m;
                }
                if union != full {
                    return Err(Error::Bootstrap(format!("{what} {line} misses a corner")));
                }
            }
        }
        for cube in &self.cubes {
            let mirror = self.cube(cube.name.mirror().id());
            let reversed: Vec<CornerNumber> = cube.corners.iter().map(|c| c.reversed()).collect();
            if corner_mask(&reversed) != mirror.corner_mask {
                return Err(Error::Bootstrap(format!(
                    "{} and its mirror are not reversed",
                    cube.name
                )));
            }
        }
        Ok(())
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn cube(&self, id: CubeId) -> &Cube {
        &self.cubes[id.index()]
    }

    pub fn by_name(&self, name: CubeName) -> &Cube {
        self.cube(name.id())
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    /// The 8 corner numbers of a coloring, sorted ascending.
    pub fn corner_numbers(&self, coloring: &FaceColoring) -> [CornerNumber; 8] {
        corner_numbers_with(coloring, self.chirality)
    }

    pub fn corner_number_at(&self, coloring: &FaceColoring, corner: Corner) -> CornerNumber {
        CornerNumber::new(coloring.corner_colors(corner, self.chirality)).unwrap()
    }

    /// The cube a coloring represents, independent of its orientation.
    pub fn canonicalize(&self, coloring: &FaceColoring) -> Result<&Cube> {
        self.by_coloring
            .get(coloring)
            .map(|id| self.cube(*id))
            .ok_or(Error::UnknownCube(coloring.colors()))
    }

    pub fn row_set(&self, row: u8) -> CubeSet {
        CubeId::all().filter(|id| id.name().row() == row).collect()
    }

    pub fn column_set(&self, col: u8) -> CubeSet {
        CubeId::all().filter(|id| id.name().col() == col).collect()
    }

    pub fn permutations(&self) -> &[ColorPermutation] {
        &self.permutations
    }

    pub fn recolor(&self, perm: &ColorPermutation, cube: CubeId) -> CubeId {
        let p = self.permutation_index(perm);
        CubeId::new(self.recolor[p][cube.index()] as usize).unwrap()
    }

    /// Recolor by index into [`Tableau::permutations`].
    pub fn recolor_by_index(&self, perm_index: usize, cube: CubeId) -> CubeId {
        CubeId::new(self.recolor[perm_index][cube.index()] as usize).unwrap()
    }

    pub fn recolor_set(&self, perm_index: usize, set: CubeSet) -> CubeSet {
        set.iter()
            .map(|c| self.recolor_by_index(perm_index, c))
            .collect()
    }

    pub fn permutation_index(&self, perm: &ColorPermutation) -> usize {
        self.permutations
            .binary_search(perm)
            .expect("permutation list holds all of S6")
    }

    /// SHA-256 over the reference corner table, as lowercase hex.
    pub fn data_hash() -> String {
        let mut text = String::new();
        for (name, corners) in CORNER_TABLE {
            let _ = write!(text, "{name}");
            for c in corners {
                let _ = write!(text, ",{c}");
            }
            text.push('\n');
        }
        Sha256::digest(text.as_bytes())
            .iter()
            .fold(String::new(), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            })
    }
}

fn corner_numbers_with(coloring: &FaceColoring, chirality: Chirality) -> [CornerNumber; 8] {
    let mut out =
        Corner::all().map(|k| CornerNumber::new(coloring.corner_colors(k, chirality)).unwrap());
    out.sort();
    out
}

fn reference_masks() -> Result<Vec<u64>> {
    CORNER_TABLE
        .iter()
        .map(|(name, values)| {
            name.parse::<CubeName>()?;
            let corners = values
                .iter()
                .map(|&v| CornerNumber::from_value(v))
                .collect::<Result<Vec<_>>>()?;
            let mask = corner_mask(&corners);
            if mask.count_ones() != 8 {
                return Err(Error::Bootstrap(format!("row {name} repeats a corner")));
            }
            Ok(mask)
        })
        .collect()
}
