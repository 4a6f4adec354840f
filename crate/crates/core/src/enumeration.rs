//! Exhaustive sweeps over all C(30, 8) collections, and the five-target
//! construction.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::combinations::{binomial, par_fold};
use crate::cube::{CubeId, CubeName};
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, TargetGraph};
use crate::set::{Collection, CubeSet};

pub const TOTAL_COLLECTIONS: u64 = 5_852_925;

/// Histogram keyed by solution number or by number of buildable targets.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolutionDistribution {
    pub counts: BTreeMap<u32, u64>,
    pub total: u64,
}

impl SolutionDistribution {
    pub fn add(&mut self, key: u32) {
        *self.counts.entry(key).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn merge(mut self, other: SolutionDistribution) -> SolutionDistribution {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self.total += other.total;
        self
    }

    pub fn get(&self, key: u32) -> u64 {
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn from_pairs(pairs: &[(u32, u64)]) -> SolutionDistribution {
        SolutionDistribution {
            counts: pairs.iter().copied().collect(),
            total: pairs.iter().map(|p| p.1).sum(),
        }
    }

    /// Drop zero-count entries so sparse and dense histograms compare equal.
    pub fn nonzero(&self) -> SolutionDistribution {
        SolutionDistribution {
            counts: self
                .counts
                .iter()
                .filter(|(_, v)| **v > 0)
                .map(|(k, v)| (*k, *v))
                .collect(),
            total: self.total,
        }
    }
}

/// Nonzero solution numbers of every collection for one target.
pub fn distribution_for_target(target: CubeId) -> SolutionDistribution {
    let graph = TargetGraph::for_target(target);
    par_fold(
        30,
        8,
        SolutionDistribution::default,
        |acc, mask| {
            let s = graph.solution_number(Collection::from_mask_unchecked(mask));
            if s > 0 {
                acc.add(s);
            }
        },
        SolutionDistribution::merge,
    )
}

/// Collections reaching solution number 16 for `target`, found by sweep.
pub fn max_collections_by_sweep(target: CubeId) -> Vec<Collection> {
    let graph = TargetGraph::for_target(target);
    let mut found = par_fold(
        30,
        8,
        Vec::new,
        |acc, mask| {
            let c = Collection::from_mask_unchecked(mask);
            if graph.solution_number(c) == 16 {
                acc.push(c);
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    found.sort();
    found
}

/// The two hand-built families of solution-16 collections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFamilies {
    /// The four diagonal 2-cycles, and the 8 variants with one cube swapped for the target.
    pub two_cycles: Vec<Collection>,
    /// Target + two diagonal 2-cycles + a 3-edge path spanning the other four corners.
    pub paths: Vec<Collection>,
    /// Spanning paths found for each choice of two 2-cycles.
    pub paths_per_choice: Vec<usize>,
}

impl MaxFamilies {
    pub fn count(&self) -> usize {
        self.two_cycles.len() + self.paths.len()
    }

    pub fn union(&self) -> Vec<Collection> {
        let mut all: Vec<Collection> = self.two_cycles.iter().chain(&self.paths).copied().collect();
        all.sort();
        all.dedup();
        all
    }
}

/// Diagonal cubes grouped into the pairs that join the same two corners.
pub fn diagonal_pairs(graph: &TargetGraph) -> Vec<(CubeId, CubeId, (u8, u8))> {
    let mut by_edge: BTreeMap<(u8, u8), Vec<CubeId>> = BTreeMap::new();
    for (id, u, v) in graph.edges() {
        if graph.kinds[id.index()] == Some(EdgeKind::Diagonal) {
            by_edge.entry((u.min(v), u.max(v))).or_default().push(id);
        }
    }
    by_edge
        .into_iter()
        .map(|(e, ids)| {
            assert_eq!(ids.len(), 2, "diagonal edges come in parallel pairs");
            (ids[0], ids[1], e)
        })
        .collect()
}

pub fn constructive_max_collections(target: CubeId) -> MaxFamilies {
    let graph = TargetGraph::for_target(target);
    let pairs = diagonal_pairs(graph);

    let cycles: CubeSet = pairs.iter().flat_map(|p| [p.0, p.1]).collect();
    let mut two_cycles = vec![Collection::new(cycles).expect("four pairs")];
    for id in cycles.iter() {
        two_cycles.push(Collection::new(cycles.without(id).with(target)).unwrap());
    }

    let mut paths = Vec::new();
    let mut paths_per_choice = Vec::new();
    for chosen in pairs.iter().combinations(2) {
        let covered: u8 = chosen.iter().fold(0, |m, p| m | 1 << p.2 .0 | 1 << p.2 .1);
        let rest = !covered;
        let inside: Vec<(CubeId, u8, u8)> = graph
            .edges()
            .filter(|&(_, u, v)| rest >> u & 1 == 1 && rest >> v & 1 == 1)
            .collect();
        let base: CubeSet = chosen
            .iter()
            .flat_map(|p| [p.0, p.1])
            .collect::<CubeSet>()
            .with(target);
        let mut n = 0;
        for triple in inside.iter().combinations(3) {
            if is_spanning_path(&triple, rest) {
                n += 1;
                let set = triple.iter().fold(base, |s, e| s.with(e.0));
                paths.push(Collection::new(set).unwrap());
            }
        }
        paths_per_choice.push(n);
    }
    MaxFamilies {
        two_cycles,
        paths,
        paths_per_choice,
    }
}

fn is_spanning_path(edges: &[&(CubeId, u8, u8)], vertices: u8) -> bool {
    let mut degree = [0u8; 8];
    let mut parent = [0u8, 1, 2, 3, 4, 5, 6, 7];
    fn find(p: &mut [u8; 8], mut x: u8) -> u8 {
        while p[x as usize] != x {
            x = p[x as usize];
        }
        x
    }
    for &&(_, u, v) in edges {
        degree[u as usize] += 1;
        degree[v as usize] += 1;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a as usize] = b;
    }
    let members: Vec<u8> = (0..8).filter(|v| vertices >> v & 1 == 1).collect();
    let root = find(&mut parent, members[0]);
    members.iter().all(|&v| {
        degree[v as usize] >= 1 && degree[v as usize] <= 2 && find(&mut parent, v) == root
    })
}

/// Targets with a nonzero solution number for this collection.
pub fn buildable_targets(collection: Collection) -> CubeSet {
    TargetGraph::all()
        .iter()
        .filter(|g| g.solution_number(collection) > 0)
        .map(|g| g.target)
        .collect()
}

/// Result of the all-targets sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildableSweep {
    pub distribution: SolutionDistribution,
    /// Collections that build five targets, sorted.
    pub five_target_collections: Vec<Collection>,
}

/// Number of buildable targets for every collection. All 30 targets are
/// evaluated for each collection.
pub fn distribution_buildable() -> Result<BuildableSweep> {
    let graphs = TargetGraph::all();
    let (distribution, mut five, max) = par_fold(
        30,
        8,
        || (SolutionDistribution::default(), Vec::new(), 0u32),
        |acc, mask| {
            let c = Collection::from_mask_unchecked(mask);
            let n = graphs.iter().filter(|g| g.solution_number(c) > 0).count() as u32;
            acc.0.add(n);
            if n == 5 {
                acc.1.push(c);
            }
            acc.2 = acc.2.max(n);
        },
        |mut a, b| {
            a.0 = a.0.merge(b.0);
            a.1.extend(b.1);
            a.2 = a.2.max(b.2);
            a
        },
    );
    if max > 5 {
        return Err(Error::OracleMismatch(format!(
            "a collection builds {max} targets"
        )));
    }
    debug_assert_eq!(distribution.total, binomial(30, 8));
    five.sort();
    Ok(BuildableSweep {
        distribution,
        five_target_collections: five,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleOrientation {
    /// Pick three columns, then four rows.
    ColumnsFirst,
    /// Pick three rows, then four columns.
    RowsFirst,
}

/// Selection rule producing one five-target collection. Letters are 0..6
/// for a..f / A..F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiveTargetRule {
    pub orientation: RuleOrientation,
    /// The three lines chosen first (`P`).
    pub first: [u8; 3],
    /// The four lines chosen second: two with letters in `first`, two without.
    pub second: [u8; 4],
}

impl FiveTargetRule {
    pub fn new(orientation: RuleOrientation, first: [u8; 3], second: [u8; 4]) -> Result<Self> {
        let rule = FiveTargetRule {
            orientation,
            first,
            second,
        };
        rule.validate()?;
        Ok(rule)
    }

    pub fn validate(&self) -> Result<()> {
        let p = letters(&self.first);
        let q = letters(&self.second);
        if p.count_ones() != 3
            || q.count_ones() != 4
            || self.first.iter().chain(&self.second).any(|&l| l >= 6)
        {
            return Err(Error::InvalidRule(format!(
                "{self:?}: lines must be distinct letters a-f"
            )));
        }
        if (p & q).count_ones() != 2 {
            return Err(Error::InvalidRule(format!(
                "{self:?}: exactly two of the four second lines must share a letter with the first three"
            )));
        }
        Ok(())
    }

    /// (collection, five targets).
    pub fn build(&self) -> (Collection, CubeSet) {
        let p = letters(&self.first);
        let q = letters(&self.second);
        // (row letters, column letters) of the chosen lines
        let (rows, cols) = match self.orientation {
            RuleOrientation::ColumnsFirst => (q, p),
            RuleOrientation::RowsFirst => (p, q),
        };
        let in_lines = |id: CubeId| {
            let n = id.name();
            rows >> n.row() & 1 == 1 || cols >> n.col() & 1 == 1
        };
        let in_both = |id: CubeId| {
            let n = id.name();
            rows >> n.row() & 1 == 1 && cols >> n.col() & 1 == 1
        };
        let targets: CubeSet = CubeId::all().filter(|id| !in_lines(*id)).collect();
        let mirrors: CubeSet = targets.iter().map(|t| t.name().mirror().id()).collect();
        let collection: CubeSet = CubeId::all()
            .filter(|id| in_both(*id))
            .collect::<CubeSet>()
            .difference(mirrors);
        (
            Collection::new(collection).expect("rule yields eight cubes"),
            targets,
        )
    }

    /// All 360 valid rules.
    pub fn all() -> Vec<FiveTargetRule> {
        let mut out = Vec::with_capacity(360);
        for orientation in [RuleOrientation::ColumnsFirst, RuleOrientation::RowsFirst] {
            for first in (0..6u8).combinations(3) {
                let first: [u8; 3] = first.try_into().unwrap();
                let p = letters(&first);
                let inside: Vec<u8> = (0..6).filter(|l| p >> l & 1 == 1).collect();
                let outside: Vec<u8> = (0..6).filter(|l| p >> l & 1 == 0).collect();
                for a in inside.iter().combinations(2) {
                    for b in outside.iter().combinations(2) {
                        let mut second = [*a[0], *a[1], *b[0], *b[1]];
                        second.sort();
                        out.push(FiveTargetRule {
                            orientation,
                            first,
                            second,
                        });
                    }
                }
            }
        }
        out
    }
}

fn letters(ls: &[u8]) -> u8 {
    ls.iter()
        .fold(0, |m, &l| m | 1u8.checked_shl(l as u32).unwrap_or(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiveTargetRecord {
    pub rule: FiveTargetRule,
    pub collection: Collection,
    pub targets: Vec<CubeName>,
    pub solution_numbers: Vec<u32>,
}

/// Generate the 360 records and verify each builds exactly its five targets.
pub fn five_target_records() -> Result<Vec<FiveTargetRecord>> {
    FiveTargetRule::all()
        .into_iter()
        .map(|rule| {
            let (collection, targets) = rule.build();
            let built = buildable_targets(collection);
            if built != targets || targets.len() != 5 {
                return Err(Error::OracleMismatch(format!(
                    "rule {rule:?}: collection {collection} builds {built}, expected {targets}"
                )));
            }
            Ok(FiveTargetRecord {
                rule,
                collection,
                targets: targets.names(),
                solution_numbers: targets
                    .iter()
                    .map(|t| TargetGraph::for_target(t).solution_number(collection))
                    .collect(),
            })
        })
        .collect()
}
