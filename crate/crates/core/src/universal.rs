//! Sets of more than eight cubes: how many targets they can build, the ten
//! conjectured minimum universal 12-sets, random sampling, and a
//! checkpointed exhaustive scan over all 12-subsets.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinations::{binomial, par_fold, par_fold_range};
use crate::cube::{CubeId, CubeName};
use crate::enumeration::SolutionDistribution;
use crate::error::{Error, Result};
use crate::graph::TargetGraph;
use crate::set::{Collection, CubeSet};
use crate::tableau::Tableau;

/// Whether some 8-subset of `set` has a nonzero solution number for `target`.
pub fn can_build(set: CubeSet, target: CubeId) -> bool {
    let graph = TargetGraph::for_target(target);
    let usable = set.difference(graph.unusable);
    if usable.len() < 8 {
        return false;
    }
    usable
        .subsets(8)
        .any(|c| graph.solution_number(Collection::from_mask_unchecked(c.mask())) > 0)
}

pub fn buildable_set(set: CubeSet) -> Result<CubeSet> {
    if set.len() < 8 {
        return Err(Error::SetTooSmall(set.len()));
    }
    Ok(CubeId::all().filter(|t| can_build(set, *t)).collect())
}

/// Number of targets buildable from some 8-subset of `set`.
pub fn buildable_count(set: CubeSet) -> Result<usize> {
    buildable_set(set).map(CubeSet::len)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalCandidate {
    pub set: CubeSet,
    /// Column letters x < y (1..6 for b..f) of the generating pair {Ax, Ay}.
    pub generator: (u8, u8),
}

impl UniversalCandidate {
    /// {Ax, Ay, Xa, Ya, Xy, Yx} plus every cube over the other three letters.
    pub fn from_pair(x: u8, y: u8) -> UniversalCandidate {
        assert!(
            0 < x && x < y && y < 6,
            "generator letters must be distinct and in b..f"
        );
        let name = |r: u8, c: u8| CubeName::new(r, c).unwrap().id();
        let mut set: CubeSet = [
            name(0, x),
            name(0, y),
            name(x, 0),
            name(y, 0),
            name(x, y),
            name(y, x),
        ]
        .into_iter()
        .collect();
        let rest: Vec<u8> = (1..6).filter(|&l| l != x && l != y).collect();
        for (&r, &c) in rest.iter().cartesian_product(&rest) {
            if r != c {
                set = set.with(name(r, c));
            }
        }
        UniversalCandidate {
            set,
            generator: (x, y),
        }
    }

    pub fn generator_names(&self) -> (CubeName, CubeName) {
        (
            CubeName::new(0, self.generator.0).unwrap(),
            CubeName::new(0, self.generator.1).unwrap(),
        )
    }
}

/// The ten sets obtained from each pair of cubes among Ab..Af.
pub fn conjecture_sets() -> Vec<UniversalCandidate> {
    (1..6u8)
        .tuple_combinations()
        .map(|(x, y)| UniversalCandidate::from_pair(x, y))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetSolution {
    pub collection: Collection,
    pub solution_number: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetAnalysis {
    pub target: CubeName,
    pub target_in_set: bool,
    /// Set members sharing no corner with the target.
    pub unusable: Vec<CubeName>,
    /// Every 8-subset of the remaining members.
    pub collections: Vec<SubsetSolution>,
}

impl TargetAnalysis {
    pub fn solution_histogram(&self) -> BTreeMap<u32, usize> {
        self.collections
            .iter()
            .map(|c| c.solution_number)
            .counts()
            .into_iter()
            .collect()
    }
}

pub fn per_target_analysis(set: CubeSet) -> Vec<TargetAnalysis> {
    TargetGraph::all()
        .iter()
        .map(|graph| {
            let unusable = set.intersection(graph.unusable);
            let usable = set.difference(graph.unusable);
            let collections = usable
                .subsets(8)
                .map(|s| {
                    let c = Collection::from_mask_unchecked(s.mask());
                    SubsetSolution {
                        collection: c,
                        solution_number: graph.solution_number(c),
                    }
                })
                .collect();
            TargetAnalysis {
                target: graph.target.name(),
                target_in_set: set.contains(graph.target),
                unusable: unusable.names(),
                collections,
            }
        })
        .collect()
}

/// Histogram of buildable counts over all k-subsets of `set`.
pub fn subset_build_distribution(set: CubeSet, k: usize) -> Result<SolutionDistribution> {
    if k < 8 {
        return Err(Error::SetTooSmall(k));
    }
    let subsets: Vec<CubeSet> = set.subsets(k).collect();
    let counts: Vec<usize> = subsets
        .par_iter()
        .map(|s| buildable_count(*s))
        .collect::<Result<_>>()?;
    let mut d = SolutionDistribution::default();
    for c in counts {
        d.add(c as u32);
    }
    Ok(d)
}

/// Histogram of buildable counts over every k-subset of the 30 cubes.
/// C(30, k) sets: seconds for k = 8, tens of seconds for k = 9, minutes beyond.
pub fn census(k: usize) -> Result<SolutionDistribution> {
    if !(8..=30).contains(&k) {
        return Err(Error::SetTooSmall(k));
    }
    Ok(par_fold(
        30,
        k,
        SolutionDistribution::default,
        |acc, mask| {
            let n = buildable_count(CubeSet::from_mask(mask)).expect("k >= 8");
            acc.add(n as u32);
        },
        SolutionDistribution::merge,
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleStats {
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub mean: f64,
    /// Sample standard deviation (n - 1 denominator).
    pub std_dev: f64,
    pub min: usize,
    pub max: usize,
    pub histogram: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub index: u64,
    pub set: CubeSet,
    pub buildable: usize,
}

/// The `index`-th random k-subset for `seed`: a partial Fisher-Yates shuffle
/// of the 30 ids driven by its own ChaCha stream.
pub fn random_subset(seed: u64, index: u64, k: usize) -> CubeSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut ids: Vec<u8> = (0..30).collect();
    let (chosen, _) = ids.partial_shuffle(&mut rng, k);
    chosen
        .iter()
        .map(|&i| CubeId::new(i as usize).unwrap())
        .collect()
}

pub fn draw_samples(k: usize, n: usize, seed: u64) -> Result<Vec<Sample>> {
    if !(8..=30).contains(&k) {
        return Err(Error::SetTooSmall(k));
    }
    (0..n as u64)
        .into_par_iter()
        .map(|index| {
            let set = random_subset(seed, index, k);
            Ok(Sample {
                index,
                set,
                buildable: buildable_count(set)?,
            })
        })
        .collect()
}

pub fn summarize(k: usize, seed: u64, samples: &[Sample]) -> SampleStats {
    let n = samples.len();
    let values: Vec<f64> = samples.iter().map(|s| s.buildable as f64).collect();
    let mean = values.iter().sum::<f64>() / n.max(1) as f64;
    let var = if n > 1 {
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64
    } else {
        0.0
    };
    SampleStats {
        k,
        samples: n,
        seed,
        mean,
        std_dev: var.sqrt(),
        min: samples.iter().map(|s| s.buildable).min().unwrap_or(0),
        max: samples.iter().map(|s| s.buildable).max().unwrap_or(0),
        histogram: samples
            .iter()
            .map(|s| s.buildable)
            .counts()
            .into_iter()
            .collect(),
    }
}

pub fn sample_distribution(k: usize, n: usize, seed: u64) -> Result<SampleStats> {
    Ok(summarize(k, seed, &draw_samples(k, n, seed)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerSummary {
    pub set: CubeSet,
    pub order: usize,
    /// Cycle type (as e.g. "3+3") -> number of stabilizer elements.
    pub cycle_types: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    /// Indices into the input list, one inner list per orbit.
    pub orbits: Vec<Vec<usize>>,
    pub stabilizers: Vec<StabilizerSummary>,
}

/// Orbit partition of `sets` under recoloring, with each set's stabilizer.
pub fn orbit_and_stabilizer(sets: &[CubeSet]) -> OrbitReport {
    let t = Tableau::global();
    let perms = t.permutations();
    let images: Vec<Vec<CubeSet>> = sets
        .iter()
        .map(|s| (0..perms.len()).map(|p| t.recolor_set(p, *s)).collect())
        .collect();

    let mut orbit_of: Vec<Option<usize>> = vec![None; sets.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..sets.len() {
        if orbit_of[i].is_some() {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        for j in i..sets.len() {
            if orbit_of[j].is_none() && images[i].contains(&sets[j]) {
                orbit_of[j] = Some(id);
                members.push(j);
            }
        }
        orbits.push(members);
    }

    let stabilizers = sets
        .iter()
        .zip(&images)
        .map(|(s, imgs)| {
            let fixing: Vec<usize> = (0..perms.len()).filter(|&p| imgs[p] == *s).collect();
            let cycle_types = fixing
                .iter()
                .map(|&p| {
                    let ct: Vec<String> = perms[p]
                        .cycle_type()
                        .into_iter()
                        .filter(|&l| l > 1)
                        .map(|l| l.to_string())
                        .collect();
                    if ct.is_empty() {
                        "1".to_string()
                    } else {
                        ct.join("+")
                    }
                })
                .counts()
                .into_iter()
                .collect();
            StabilizerSummary {
                set: *s,
                order: fixing.len(),
                cycle_types,
            }
        })
        .collect();
    OrbitReport {
        orbits,
        stabilizers,
    }
}

/// Whether every one of the 30 targets is buildable, checking targets in
/// the given order and stopping at the first failure.
pub fn is_universal(set: CubeSet, order: &[CubeId]) -> bool {
    order.iter().all(|t| can_build(set, *t))
}

/// Targets ordered by how often they fail on random 12-sets, most often first.
pub fn failure_order(seed: u64, probes: usize) -> Vec<CubeId> {
    let mut failures = [0usize; 30];
    for i in 0..probes as u64 {
        let set = random_subset(seed, i, 12);
        for t in CubeId::all() {
            if !can_build(set, t) {
                failures[t.index()] += 1;
            }
        }
    }
    let mut order: Vec<CubeId> = CubeId::all().collect();
    order.sort_by_key(|t| (std::cmp::Reverse(failures[t.index()]), *t));
    order
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Maximum number of sets to examine in this run.
    pub budget: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Read on start (if present) and rewritten after every block.
    pub checkpoint: Option<PathBuf>,
    /// Sets per block between checkpoints; defaults to 2^20.
    pub block: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchState {
    /// Colex rank of the next 12-subset to examine.
    pub next_rank: u64,
    pub found: Vec<CubeSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub state: SearchState,
    pub total: u64,
    pub scanned_this_run: u64,
    pub complete: bool,
}

impl SearchState {
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut text = format!("next_rank {}\n", self.next_rank);
        for s in &self.found {
            text.push_str(&format!("found {:08x}\n", s.mask()));
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text).map_err(|e| Error::Checkpoint(format!("{}: {e}", tmp.display())))?;
        fs::rename(&tmp, path).map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<SearchState> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        let mut state = SearchState {
            next_rank: 0,
            found: Vec::new(),
        };
        let mut saw_rank = false;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let bad = || Error::Checkpoint(format!("malformed line '{line}'"));
            match line.split_once(' ') {
                Some(("next_rank", v)) => {
                    state.next_rank = v.trim().parse().map_err(|_| bad())?;
                    saw_rank = true;
                }
                Some(("found", v)) => {
                    let mask = u32::from_str_radix(v.trim(), 16).map_err(|_| bad())?;
                    state.found.push(CubeSet::from_mask(mask));
                }
                _ => return Err(bad()),
            }
        }
        if !saw_rank {
            return Err(Error::Checkpoint("missing next_rank".into()));
        }
        Ok(state)
    }
}

/// Scan 12-subsets of the 30 cubes in colex order for universal sets.
pub fn exhaustive_search(options: &SearchOptions) -> Result<SearchOutcome> {
    let total = binomial(30, 12);
    let mut state = match &options.checkpoint {
        Some(p) if p.exists() => SearchState::load(p)?,
        _ => SearchState {
            next_rank: 0,
            found: Vec::new(),
        },
    };
    let order = failure_order(0x5eed, 2000);
    let block = options.block.unwrap_or(1 << 20).max(1);
    let start = Instant::now();
    let mut scanned = 0u64;
    while state.next_rank < total {
        let mut this_block = block.min(total - state.next_rank);
        if let Some(b) = options.budget {
            if scanned >= b {
                break;
            }
            this_block = this_block.min(b - scanned);
        }
        if options.time_limit.is_some_and(|l| start.elapsed() >= l) {
            break;
        }
        let lo = state.next_rank;
        let mut found = par_fold_range(
            30,
            12,
            lo,
            lo + this_block,
            Vec::new,
            |acc, mask| {
                let set = CubeSet::from_mask(mask);
                if is_universal(set, &order) {
                    acc.push(set);
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        found.sort();
        state.found.extend(found);
        state.next_rank = lo + this_block;
        scanned += this_block;
        if let Some(p) = &options.checkpoint {
            state.save(p)?;
        }
    }
    Ok(SearchOutcome {
        complete: state.next_rank >= total,
        state,
        total,
        scanned_this_run: scanned,
    })
}
