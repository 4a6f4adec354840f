//! Brute-force solution numbers that do not look at the graph structure.
//!
//! Both count the bijections corner -> cube in which every cube shows the
//! corner it is assigned to. One is a bitmask DP over used cubes, the other
//! walks the full Cartesian product of candidate cubes per corner and tags
//! cubes with distinct primes, accepting a tuple when the product of its
//! primes is divisible by all eight.

use serde::Serialize;

use crate::corner::CornerNumber;
use crate::cube::CubeId;
use crate::set::Collection;
use crate::tableau::Tableau;

pub const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
pub const PRIMORIAL: u64 = 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19;

/// `rows[i]` has bit `j` set iff cube `j` of the collection has target corner `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: [u8; 8],
}

impl IncidenceMatrix {
    pub fn new(collection: Collection, target: CubeId) -> IncidenceMatrix {
        let t = Tableau::global();
        let target = t.cube(target);
        let cubes = collection.ids().map(|id| t.cube(id));
        let mut rows = [0u8; 8];
        for (i, corner) in target.corners.iter().enumerate() {
            for (j, cube) in cubes.iter().enumerate() {
                if cube.has_corner(*corner) {
                    rows[i] |= 1 << j;
                }
            }
        }
        IncidenceMatrix { rows }
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.rows[row] >> col & 1 == 1
    }

    /// Number of permutations `s` with every `A[i][s(i)]` set, by DP over the
    /// set of columns already used by rows `0..i`.
    pub fn permanent(&self) -> u64 {
        let mut ways = [0u64; 256];
        ways[0] = 1;
        for mask in 0usize..256 {
            let w = ways[mask];
            if w == 0 {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == 8 {
                continue;
            }
            let mut free = self.rows[row] as usize & !mask;
            while free != 0 {
                let bit = free & free.wrapping_neg();
                ways[mask | bit] += w;
                free &= free - 1;
            }
        }
        ways[255]
    }
}

pub fn solution_number_permanent(collection: Collection, target: CubeId) -> u64 {
    IncidenceMatrix::new(collection, target).permanent()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerCount {
    pub corner: CornerNumber,
    pub multiplicity: usize,
    pub primes: Vec<u64>,
}

/// For each target corner: how many collection cubes have it, and their
/// prime indices. Cubes are indexed in the listed collection order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerCountVector(pub Vec<CornerCount>);

impl CornerCountVector {
    pub fn new(cubes: &[CubeId; 8], target: CubeId) -> CornerCountVector {
        let t = Tableau::global();
        let target = t.cube(target);
        CornerCountVector(
            target
                .corners
                .iter()
                .map(|&corner| {
                    let primes: Vec<u64> = cubes
                        .iter()
                        .zip(PRIMES)
                        .filter(|(id, _)| t.cube(**id).has_corner(corner))
                        .map(|(_, p)| p)
                        .collect();
                    CornerCount {
                        corner,
                        multiplicity: primes.len(),
                        primes,
                    }
                })
                .collect(),
        )
    }
}

/// Count tuples in the Cartesian product of per-corner prime lists whose
/// product is divisible by 2*3*5*...*19.
pub fn prime_scan(vector: &CornerCountVector) -> u64 {
    let lists: Vec<&[u64]> = vector.0.iter().map(|c| c.primes.as_slice()).collect();
    if lists.iter().any(|l| l.is_empty()) {
        return 0;
    }
    let mut odometer = vec![0usize; lists.len()];
    let mut count = 0;
    loop {
        let product: u64 = odometer.iter().zip(&lists).map(|(&i, l)| l[i]).product();
        if product.is_multiple_of(PRIMORIAL) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == odometer.len() {
                return count;
            }
            odometer[pos] += 1;
            if odometer[pos] < lists[pos].len() {
                break;
            }
            odometer[pos] = 0;
            pos += 1;
        }
    }
}

pub fn solution_number_prime_scan(collection: Collection, target: CubeId) -> u64 {
    prime_scan(&CornerCountVector::new(&collection.ids(), target))
}
