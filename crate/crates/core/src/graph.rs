//! Closed-form solution numbers from the target graph.
//!
//! For a fixed target the eight target corners are vertices and every other
//! usable cube, which shares exactly two corners with the target, is an edge
//! between them. A collection selects a subgraph; the solution number
//! depends only on how that subgraph splits into trees and unicyclic
//! components and on whether the target itself is in the collection.

use std::sync::OnceLock;

use arrayvec::ArrayVec;
use serde::Serialize;

use crate::corner::CornerNumber;
use crate::cube::{Cube, CubeId};
use crate::set::{Collection, CubeSet};
use crate::tableau::Tableau;

/// What one cube contributes to a fixed target's graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Unusable,
    Edge(u8, u8),
    Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// Joins two corners along a cube edge.
    Standard,
    /// Joins two opposite corners through the center.
    Diagonal,
}

#[derive(Debug, Clone)]
pub struct TargetGraph {
    pub target: CubeId,
    /// Target corners in ascending order; vertex `i` is `vertices[i]`.
    pub vertices: [CornerNumber; 8],
    pub slots: [Slot; 30],
    pub kinds: [Option<EdgeKind>; 30],
    pub unusable: CubeSet,
    pub standard: CubeSet,
    pub diagonal: CubeSet,
}

impl TargetGraph {
    pub fn build(target: &Cube, tableau: &Tableau) -> TargetGraph {
        let vertices = target.corners;
        let vertex_of = |c: CornerNumber| vertices.iter().position(|v| *v == c).unwrap() as u8;
        let mirror = target.name.mirror();
        let mut slots = [Slot::Unusable; 30];
        let mut kinds = [None; 30];
        let mut unusable = CubeSet::default();
        let mut standard = CubeSet::default();
        let mut diagonal = CubeSet::default();
        for cube in tableau.cubes() {
            let shared: Vec<CornerNumber> = cube
                .corners
                .iter()
                .copied()
                .filter(|c| target.has_corner(*c))
                .collect();
            let i = cube.id.index();
            match shared.len() {
                0 => {
                    unusable = unusable.with(cube.id);
                }
                8 => slots[i] = Slot::Target,
                2 => {
                    slots[i] = Slot::Edge(vertex_of(shared[0]), vertex_of(shared[1]));
                    let on_mirror_line =
                        cube.name.row() == mirror.row() || cube.name.col() == mirror.col();
                    let kind = if on_mirror_line {
                        diagonal = diagonal.with(cube.id);
                        EdgeKind::Diagonal
                    } else {
                        standard = standard.with(cube.id);
                        EdgeKind::Standard
                    };
                    kinds[i] = Some(kind);
                }
                n => unreachable!(
                    "usable corner count {n} between {} and {}",
                    cube.name, target.name
                ),
            }
        }
        TargetGraph {
            target: target.id,
            vertices,
            slots,
            kinds,
            unusable,
            standard,
            diagonal,
        }
    }

    /// Cached graphs for all 30 targets, indexed by target id.
    pub fn all() -> &'static [TargetGraph] {
        static GRAPHS: OnceLock<Vec<TargetGraph>> = OnceLock::new();
        GRAPHS.get_or_init(|| {
            let t = Tableau::global();
            t.cubes().iter().map(|c| TargetGraph::build(c, t)).collect()
        })
    }

    pub fn for_target(target: CubeId) -> &'static TargetGraph {
        &Self::all()[target.index()]
    }

    pub fn vertex(&self, corner: CornerNumber) -> Option<usize> {
        self.vertices.iter().position(|v| *v == corner)
    }

    pub fn edges(&self) -> impl Iterator<Item = (CubeId, u8, u8)> + '_ {
        self.slots.iter().enumerate().filter_map(|(i, s)| match *s {
            Slot::Edge(u, v) => Some((CubeId::new(i).unwrap(), u, v)),
            _ => None,
        })
    }

    /// Summary of the subgraph a collection selects.
    pub fn classify(&self, collection: Collection) -> CollectionSubgraph {
        let mut parent = [0u8, 1, 2, 3, 4, 5, 6, 7];
        let mut edge_list = ArrayVec::new();
        let mut target_in_collection = false;
        let mut unusable_count = 0;
        for id in collection.iter() {
            match self.slots[id.index()] {
                Slot::Unusable => unusable_count += 1,
                Slot::Target => target_in_collection = true,
                Slot::Edge(u, v) => {
                    edge_list.push((u, v));
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru as usize] = rv;
                    }
                }
            }
        }
        let mut vertices = [0u8; 8];
        let mut edges = [0u8; 8];
        for v in 0..8u8 {
            vertices[find(&mut parent, v) as usize] += 1;
        }
        for &(u, _) in &edge_list {
            edges[find(&mut parent, u) as usize] += 1;
        }
        let components = (0..8)
            .filter(|&r| vertices[r] > 0)
            .map(|r| ComponentSummary {
                vertices: vertices[r],
                edges: edges[r],
            })
            .collect();
        CollectionSubgraph {
            target_in_collection,
            edge_list,
            unusable_count,
            components,
        }
    }

    pub fn solution_number(&self, collection: Collection) -> u32 {
        if collection.mask() & self.unusable.mask() != 0 {
            return 0;
        }
        solution_number_formula(&self.classify(collection))
    }
}

fn find(parent: &mut [u8; 8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub vertices: u8,
    pub edges: u8,
}

impl ComponentSummary {
    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.vertices
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollectionSubgraph {
    pub target_in_collection: bool,
    pub edge_list: ArrayVec<(u8, u8), 8>,
    pub unusable_count: u8,
    /// One entry per connected component over all 8 vertices.
    pub components: ArrayVec<ComponentSummary, 8>,
}

impl CollectionSubgraph {
    pub fn trees(&self) -> impl Iterator<Item = &ComponentSummary> {
        self.components.iter().filter(|c| c.is_tree())
    }
}

/// Solution number from the component structure alone.
///
/// Without the target every component must carry exactly one cycle, each
/// contributing two traversal directions. With the target exactly one tree
/// of `k` edges is allowed; the target may sit at any of its `k + 1`
/// corners and the remaining `n - 1` cyclic components contribute `2` each.
pub fn solution_number_formula(sub: &CollectionSubgraph) -> u32 {
    if sub.unusable_count > 0 {
        return 0;
    }
    let n = sub.components.len() as u32;
    let trees: ArrayVec<&ComponentSummary, 8> = sub.trees().collect();
    if !sub.target_in_collection {
        if sub.edge_list.len() != 8 || !trees.is_empty() {
            return 0;
        }
        return 1 << n;
    }
    match trees.as_slice() {
        [tree] => (1 << (n - 1)) * (tree.edges as u32 + 1),
        _ => 0,
    }
}
