//! k-subsets of `{0..n}` as bitmasks in colexicographic order.
//!
//! In colex order the masks are simply increasing integers with `k` bits
//! set, so the successor is Gosper's hack and a rank can be turned back
//! into a mask with the combinatorial number system. Both together let a
//! sweep be cut into independent contiguous ranges.

use rayon::prelude::*;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Next larger integer with the same number of set bits.
#[inline]
pub fn next_colex(mask: u64) -> u64 {
    let lowest = mask & mask.wrapping_neg();
    let ripple = mask + lowest;
    ripple | (((mask ^ ripple) >> 2) / lowest)
}

/// The mask of colex rank `rank` among k-subsets.
pub fn unrank_colex(mut rank: u64, k: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=k as u64).rev() {
        // Largest c with C(c, i) <= rank.
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        mask |= 1 << c;
    }
    mask
}

pub fn rank_colex(mask: u64) -> u64 {
    let mut rank = 0;
    let mut m = mask;
    let mut i = 1;
    while m != 0 {
        let c = m.trailing_zeros() as u64;
        rank += binomial(c, i);
        m &= m - 1;
        i += 1;
    }
    rank
}

/// Iterator over the k-subsets of `{0..n}`.
#[derive(Debug, Clone)]
pub struct Combinations {
    next: u64,
    remaining: u64,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Combinations {
        Combinations::range(n, k, 0, binomial(n as u64, k as u64))
    }

    /// Ranks `start..end`, clamped to the number of subsets.
    pub fn range(n: usize, k: usize, start: u64, end: u64) -> Combinations {
        let total = binomial(n as u64, k as u64);
        let end = end.min(total);
        let start = start.min(end);
        Combinations {
            next: unrank_colex(start, k),
            remaining: end - start,
        }
    }
}

impl Iterator for Combinations {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.next;
        self.remaining -= 1;
        if self.remaining > 0 {
            self.next = next_colex(out);
        }
        Some(out as u32)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

const CHUNK: u64 = 1 << 16;

/// Fold every k-subset of `{0..n}` in rank range `start..end` into an
/// accumulator, in parallel over contiguous chunks, and merge the partial
/// results. `merge` must be associative; results are then independent of
/// scheduling.
pub fn par_fold_range<A, F, M>(
    n: usize,
    k: usize,
    start: u64,
    end: u64,
    init: impl Fn() -> A + Sync + Send,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    F: Fn(&mut A, u32) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let total = binomial(n as u64, k as u64);
    let end = end.min(total);
    let start = start.min(end);
    let chunks = (end - start).div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = start + c * CHUNK;
            let hi = (lo + CHUNK).min(end);
            let mut acc = init();
            for mask in Combinations::range(n, k, lo, hi) {
                fold(&mut acc, mask);
            }
            acc
        })
        .reduce(&init, &merge)
}

pub fn par_fold<A, F, M>(
    n: usize,
    k: usize,
    init: impl Fn() -> A + Sync + Send,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    F: Fn(&mut A, u32) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    par_fold_range(n, k, 0, u64::MAX, init, fold, merge)
}
