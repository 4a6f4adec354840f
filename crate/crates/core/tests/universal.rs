use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use madness_core::set::ALL_CUBES;
use madness_core::universal::{
    buildable_count, census, conjecture_sets, draw_samples, exhaustive_search, failure_order,
    is_universal, orbit_and_stabilizer, per_target_analysis, random_subset, sample_distribution,
    subset_build_distribution, SearchOptions, SearchState,
};
use madness_core::{CubeId, CubeSet, Error};

#[test]
fn conjecture_sets_are_universal() {
    let sets = conjecture_sets();
    assert_eq!(sets.len(), 10);
    for c in &sets {
        assert_eq!(buildable_count(c.set).unwrap(), 30, "{}", c.set);
    }
    let bc = sets.iter().find(|c| c.generator == (1, 2)).unwrap();
    assert_eq!(
        bc.set,
        CubeSet::parse_list("Ab,Ac,Ba,Ca,Bc,Cb,De,Df,Ed,Ef,Fd,Fe").unwrap()
    );
}

#[test]
fn per_target_analysis_of_every_conjecture_set() {
    for c in conjecture_sets() {
        let analysis = per_target_analysis(c.set);
        assert_eq!(analysis.len(), 30);
        let (inside, outside): (Vec<_>, Vec<_>) = analysis.iter().partition(|a| a.target_in_set);
        assert_eq!((inside.len(), outside.len()), (12, 18));
        for a in &inside {
            assert_eq!(a.unusable.len(), 3);
            assert_eq!(a.collections.len(), 9);
            assert_eq!(
                a.solution_histogram().into_iter().collect::<Vec<_>>(),
                [(2, 7), (8, 2)]
            );
        }
        for a in &outside {
            assert_eq!(a.unusable.len(), 4);
            assert_eq!(
                a.solution_histogram().into_iter().collect::<Vec<_>>(),
                [(4, 1)]
            );
        }
        // unusable members are exactly those in the target's row, column or mirror position
        for a in &analysis {
            for u in &a.unusable {
                assert!(
                    u.row() == a.target.row()
                        || u.col() == a.target.col()
                        || *u == a.target.mirror()
                );
            }
        }
    }
}

#[test]
fn eight_subsets_of_a_conjecture_set_build_at_most_three() {
    let set = conjecture_sets()[3].set;
    for s in set.subsets(8) {
        assert!(buildable_count(s).unwrap() <= 3);
    }
}

#[test]
fn figure_seven_for_every_conjecture_set() {
    let expected: [(usize, &[(u32, u64)]); 4] = [
        (8, &[(0, 441), (1, 18), (3, 36)]),
        (9, &[(0, 36), (1, 72), (3, 112)]),
        (10, &[(3, 12), (6, 6), (8, 36), (9, 12)]),
        (11, &[(18, 12)]),
    ];
    for c in conjecture_sets() {
        for (k, hist) in expected {
            let d = subset_build_distribution(c.set, k).unwrap();
            let got: Vec<(u32, u64)> = d.counts.into_iter().collect();
            assert_eq!(got, hist, "k={k} for {}", c.set);
            assert_eq!(d.total, madness_core::combinations::binomial(12, k as u64));
        }
    }
}

#[test]
fn one_orbit_of_ten() {
    let sets: Vec<CubeSet> = conjecture_sets().iter().map(|c| c.set).collect();
    let report = orbit_and_stabilizer(&sets);
    assert_eq!(report.orbits, vec![(0..10).collect::<Vec<_>>()]);
    for s in &report.stabilizers {
        assert_eq!(s.order, 72);
        assert!(s.cycle_types.contains_key("3") || s.cycle_types.contains_key("3+3"));
    }
}

#[test]
fn buildable_count_is_monotone_along_random_chains() {
    (0..1000u64).into_par_iter().for_each(|chain| {
        let mut rng = ChaCha8Rng::seed_from_u64(chain);
        let mut sequence: Vec<CubeId> = CubeId::all().collect();
        sequence.shuffle(&mut rng);
        sequence.truncate(12);
        let mut set: CubeSet = sequence[..8].iter().copied().collect();
        let mut last = buildable_count(set).unwrap();
        for &next in &sequence[8..] {
            set = set.with(next);
            let now = buildable_count(set).unwrap();
            assert!(now >= last, "{set}: {now} < {last}");
            last = now;
        }
    });
}

#[test]
fn sampling_is_seeded_and_ten_sets_always_build_something() {
    let a = sample_distribution(10, 2000, 42).unwrap();
    let b = sample_distribution(10, 2000, 42).unwrap();
    assert_eq!(a, b);
    assert!(a.min >= 1);
    let samples = draw_samples(10, 2000, 42).unwrap();
    assert!(samples.iter().all(|s| s.buildable >= 1));
    assert!(samples.iter().all(|s| s.set.len() == 10));
    assert_ne!(sample_distribution(10, 2000, 43).unwrap(), a);
}

#[test]
fn sampling_identical_across_thread_counts() {
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let four = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let a = one.install(|| draw_samples(11, 500, 5).unwrap());
    let b = four.install(|| draw_samples(11, 500, 5).unwrap());
    assert_eq!(a, b);
}

#[test]
fn small_sets_rejected() {
    let s = CubeSet::parse_list("Ab,Ac,Ad,Ae,Af,Ba,Bc").unwrap();
    assert_eq!(buildable_count(s), Err(Error::SetTooSmall(7)));
    assert!(matches!(draw_samples(7, 1, 0), Err(Error::SetTooSmall(7))));
}

#[test]
fn random_twelve_sets_are_not_universal() {
    let order = failure_order(0x5eed, 500);
    let conjectured: Vec<CubeSet> = conjecture_sets().iter().map(|c| c.set).collect();
    let universal = (0..1_000_000u64)
        .into_par_iter()
        .map(|i| random_subset(0xface, i, 12))
        .filter(|s| !conjectured.contains(s))
        .filter(|s| is_universal(*s, &order))
        .count();
    assert_eq!(universal, 0);
}

#[test]
fn missing_a_whole_row_is_not_universal() {
    let order: Vec<CubeId> = CubeId::all().collect();
    for row in 0..6u8 {
        let without_row: CubeSet = ALL_CUBES
            .iter()
            .filter(|id| id.name().row() != row)
            .collect();
        // a 12-subset drawn from outside the row
        let members: Vec<CubeId> = without_row.iter().collect();
        let set: CubeSet = random_subset(row as u64, 0, members.len())
            .iter()
            .filter(|i| i.index() < members.len())
            .take(12)
            .map(|i| members[i.index()])
            .collect();
        assert_eq!(set.len(), 12);
        assert!(!is_universal(set, &order), "{set}");
    }
}

#[test]
fn exhaustive_search_resumes_from_checkpoint() {
    let dir = tempdir();
    let path = dir.join("scan.ckpt");
    let opts = SearchOptions {
        budget: Some(3000),
        checkpoint: Some(path.clone()),
        block: Some(1000),
        ..Default::default()
    };
    let first = exhaustive_search(&opts).unwrap();
    assert!(!first.complete);
    assert_eq!(first.scanned_this_run, 3000);
    assert_eq!(SearchState::load(&path).unwrap().next_rank, 3000);
    let second = exhaustive_search(&opts).unwrap();
    assert_eq!(second.state.next_rank, 6000);

    let straight = exhaustive_search(&SearchOptions {
        budget: Some(6000),
        block: Some(6000),
        ..Default::default()
    })
    .unwrap();
    assert_eq!(straight.state, second.state);
    std::fs::remove_dir_all(dir).unwrap();
}

fn tempdir() -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("madness-universal-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn census_of_eight_and_nine_subsets() {
    let eight = census(8).unwrap();
    assert_eq!(
        eight,
        madness_core::enumeration::distribution_buildable()
            .unwrap()
            .distribution
    );

    // Exact over all 14,307,150 nine-subsets: nothing reaches ten targets,
    // and twenty sets build nine.
    let nine = census(9).unwrap();
    assert_eq!(nine.total, 14_307_150);
    assert_eq!(nine.get(0), 253_320);
    assert_eq!(nine.get(8), 5_640);
    assert_eq!(nine.get(9), 20);
    assert_eq!(nine.counts.keys().last(), Some(&9));
}
