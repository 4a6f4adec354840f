//! Published values that `--check` compares against.

/// Solution number -> collections, for any single target.
pub const TABLE1: [(u32, u64); 7] = [
    (2, 93_000),
    (4, 19_860),
    (6, 15_987),
    (8, 2_664),
    (10, 792),
    (12, 1_296),
    (16, 81),
];

pub const TABLE1_TOTAL: u64 = 133_680;

/// Buildable targets -> collections.
pub const TABLE2: [(u32, u64); 6] = [
    (0, 2_774_940),
    (1, 2_256_390),
    (2, 720_405),
    (3, 91_920),
    (4, 8_910),
    (5, 360),
];

pub const FIVE_TARGET_COLLECTIONS: usize = 360;
pub const MAX_COLLECTIONS: u64 = 81;
pub const UNIVERSAL_SETS: usize = 10;

/// Buildable count -> subsets of a universal set, for k = 8..=11.
pub fn figure7(k: usize) -> Option<&'static [(u32, u64)]> {
    match k {
        8 => Some(&[(0, 441), (1, 18), (3, 36)]),
        9 => Some(&[(0, 36), (1, 72), (3, 112)]),
        10 => Some(&[(3, 12), (6, 6), (8, 36), (9, 12)]),
        11 => Some(&[(18, 12)]),
        _ => None,
    }
}

/// Mean and standard deviation of buildable counts for random k-sets.
pub fn figure6(k: usize) -> Option<(f64, f64)> {
    match k {
        9 => Some((3.0, 1.34)),
        10 => Some((7.3, 1.7)),
        11 => Some((12.8, 2.1)),
        12 => Some((18.2, 2.7)),
        _ => None,
    }
}

/// Absolute tolerance on the sampled mean and standard deviation.
pub const FIGURE6_TOLERANCE: f64 = 0.1;

/// Compare a histogram against expected rows, ignoring zero counts.
pub fn diff_histogram(label: &str, got: &[(u32, u64)], want: &[(u32, u64)]) -> Vec<String> {
    let got: Vec<(u32, u64)> = got.iter().copied().filter(|r| r.1 > 0).collect();
    let mut problems = Vec::new();
    for &(k, v) in want {
        let found = got.iter().find(|r| r.0 == k).map_or(0, |r| r.1);
        if found != v {
            problems.push(format!("{label}: {k} -> {found}, expected {v}"));
        }
    }
    for &(k, v) in &got {
        if !want.iter().any(|r| r.0 == k) {
            problems.push(format!("{label}: unexpected {k} -> {v}"));
        }
    }
    problems
}
