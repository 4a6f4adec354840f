//! Concrete 2x2x2 models: which cube sits where, and how it is turned.
//!
//! Positions are `(x, y, z) in {0,1}^3`; coordinate 1 is the East, North or
//! Up side. A small cube at a position shows three faces on the outside of
//! the model, the faces pointing the same way as that corner of the target.

use serde::Serialize;

use crate::corner::CornerNumber;
use crate::cube::{Cube, CubeId};
use crate::error::{Error, Result};
use crate::geometry::{Corner, Face, FaceColoring, Rotation};
use crate::graph::TargetGraph;
use crate::set::Collection;
use crate::tableau::Tableau;

/// The three exterior faces of one model position and the colors they must show.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerFrame {
    pub position: Corner,
    pub faces: [Face; 3],
    pub colors: [u8; 3],
    pub corner: CornerNumber,
}

impl CornerFrame {
    /// The frame a target imposes at `position`.
    pub fn from_target(target: &Cube, position: Corner) -> CornerFrame {
        let faces = position.faces();
        let colors = faces.map(|f| target.coloring.color(f).value());
        let corner = Tableau::global().corner_number_at(&target.coloring, position);
        CornerFrame {
            position,
            faces,
            colors,
            corner,
        }
    }

    /// A frame at `position` showing `corner` read clockwise from its first digit.
    pub fn for_corner(corner: CornerNumber, position: Corner) -> CornerFrame {
        let faces = position.clockwise_faces(Tableau::global().chirality());
        CornerFrame {
            position,
            faces,
            colors: corner.digits(),
            corner,
        }
    }
}

/// The unique rotation of `cube` showing the frame's colors face for face.
pub fn orient_cube(cube: &Cube, frame: &CornerFrame) -> Result<FaceColoring> {
    let mut found = Rotation::all()
        .iter()
        .map(|r| cube.coloring.rotated(r))
        .filter(|c| {
            frame
                .faces
                .iter()
                .zip(frame.colors)
                .all(|(f, want)| c.color(*f).value() == want)
        });
    let first = found.next().ok_or_else(|| Error::NoOrientation {
        cube: cube.name.to_string(),
        corner: frame.corner.to_string(),
    })?;
    debug_assert!(found.next().is_none(), "corner orientation must be unique");
    Ok(first)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub vertex: u8,
    pub corner: CornerNumber,
    pub position: Corner,
    pub cube: CubeId,
    pub orientation: FaceColoring,
}

/// A solution of the target puzzle, placements indexed by target vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pub target: CubeId,
    pub placements: [Placement; 8],
}

impl Arrangement {
    pub fn orientation_at(&self, position: Corner) -> &FaceColoring {
        &self
            .placements
            .iter()
            .find(|p| p.position == position)
            .expect("every position is filled")
            .orientation
    }

    /// All 12 pairs of touching interior faces carry equal colors.
    pub fn interior_matches(&self) -> bool {
        interior_adjacencies().all(|(lo, hi, axis)| {
            let a = self.orientation_at(lo).color(Face::on_axis(axis, true));
            let b = self.orientation_at(hi).color(Face::on_axis(axis, false));
            a == b
        })
    }

    /// Re-check the arrangement from scratch against the target's coloring.
    pub fn validate(&self, collection: Collection) -> Result<()> {
        let t = Tableau::global();
        let target = t.cube(self.target);
        let mut used = crate::set::CubeSet::default();
        let mut positions = 0u8;
        for p in &self.placements {
            let cube = t.canonicalize(&p.orientation)?;
            let frame = CornerFrame::from_target(target, p.position);
            let shows = frame
                .faces
                .iter()
                .zip(frame.colors)
                .all(|(f, c)| p.orientation.color(*f).value() == c);
            if cube.id != p.cube || !shows || !collection.contains(p.cube) {
                return Err(Error::OracleMismatch(format!(
                    "{} at {:?} does not show {}",
                    p.cube.name(),
                    p.position.position(),
                    frame.corner
                )));
            }
            used = used.with(p.cube);
            positions |= 1 << p.position.index();
        }
        if used != collection.set() || positions != 0xff {
            return Err(Error::OracleMismatch("placement is not a bijection".into()));
        }
        Ok(())
    }
}

/// `(lower, upper, axis)` for each pair of positions sharing an interior face.
pub fn interior_adjacencies() -> impl Iterator<Item = (Corner, Corner, usize)> {
    (0..3).flat_map(|axis| {
        Corner::all().into_iter().filter_map(move |c| {
            let mut p = c.position();
            if p[axis] == 1 {
                return None;
            }
            p[axis] = 1;
            Some((c, Corner::from_position(p), axis))
        })
    })
}

/// Every solution of the target puzzle for this collection, in
/// lexicographic order of the vertex -> cube id assignment.
pub fn enumerate_arrangements(collection: Collection, target: CubeId) -> Vec<Arrangement> {
    let t = Tableau::global();
    let graph = TargetGraph::for_target(target);
    let target_cube = t.cube(target);
    if collection.mask() & graph.unusable.mask() != 0 {
        return Vec::new();
    }

    let mut frames: [Option<CornerFrame>; 8] = [None; 8];
    for position in Corner::all() {
        let frame = CornerFrame::from_target(target_cube, position);
        let v = graph
            .vertex(frame.corner)
            .expect("target shows its own corners");
        frames[v] = Some(frame);
    }
    let frames = frames.map(Option::unwrap);

    let cubes = collection.ids();
    let candidates: [Vec<CubeId>; 8] = std::array::from_fn(|v| {
        cubes
            .iter()
            .copied()
            .filter(|id| t.cube(*id).has_corner(graph.vertices[v]))
            .collect()
    });

    let mut out = Vec::new();
    let mut chosen = [cubes[0]; 8];
    assign(0, 0, &candidates, &mut chosen, &mut |assignment| {
        let placements = std::array::from_fn(|v| {
            let frame = &frames[v];
            let cube = t.cube(assignment[v]);
            Placement {
                vertex: v as u8,
                corner: frame.corner,
                position: frame.position,
                cube: cube.id,
                orientation: orient_cube(cube, frame).expect("candidate has the corner"),
            }
        });
        out.push(Arrangement { target, placements });
    });
    out
}

fn assign(
    vertex: usize,
    used: u32,
    candidates: &[Vec<CubeId>; 8],
    chosen: &mut [CubeId; 8],
    emit: &mut dyn FnMut(&[CubeId; 8]),
) {
    if vertex == 8 {
        emit(chosen);
        return;
    }
    for &id in &candidates[vertex] {
        let bit = 1 << id.index();
        if used & bit == 0 {
            chosen[vertex] = id;
            assign(vertex + 1, used | bit, candidates, chosen, emit);
        }
    }
}

pub fn interior_matching_count(collection: Collection, target: CubeId) -> usize {
    enumerate_arrangements(collection, target)
        .iter()
        .filter(|a| a.interior_matches())
        .count()
}

/// Serialized form of one placement.
#[derive(Debug, Clone, Serialize)]
pub struct PlacementRecord {
    pub corner: CornerNumber,
    pub position: [u8; 3],
    pub cube: crate::cube::CubeName,
    pub faces: FaceColors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct FaceColors {
    pub U: u8,
    pub D: u8,
    pub N: u8,
    pub E: u8,
    pub S: u8,
    pub W: u8,
}

impl From<&FaceColoring> for FaceColors {
    fn from(c: &FaceColoring) -> FaceColors {
        let [u, d, n, e, s, w] = c.colors();
        FaceColors {
            U: u,
            D: d,
            N: n,
            E: e,
            S: s,
            W: w,
        }
    }
}

impl Arrangement {
    pub fn records(&self) -> Vec<PlacementRecord> {
        self.placements
            .iter()
            .map(|p| PlacementRecord {
                corner: p.corner,
                position: p.position.position(),
                cube: p.cube.name(),
                faces: (&p.orientation).into(),
            })
            .collect()
    }
}
