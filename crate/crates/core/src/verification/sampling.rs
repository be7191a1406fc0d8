//! Counter-based sampling.
//!
//! Output `w` of the stream for `seed` is the `w`-th `u64` drawn from
//! `ChaCha8Rng::seed_from_u64(seed)` (stream word position `2w`). Sample `s`
//! of a draw needing `k` values per sample reads outputs `s·k .. s·k + k`, so
//! every value is a pure function of `(seed, index)` and results do not
//! depend on how samples are split across workers.
//!
//! A value `u` becomes the coordinate `(u >> 11) / 2^53`, an exact dyadic
//! rational in `[0, 1)`.

use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::exact::{RatVec, Rational};

pub const COORD_BITS: u32 = 53;
pub const COORD_DENOM: u64 = 1 << COORD_BITS;

/// Samples per parallel work unit.
pub const CHUNK: u64 = 4096;

/// Sequential reader of sample numerators starting at a given sample index.
pub struct SampleStream {
    rng: ChaCha8Rng,
    width: usize,
}

impl SampleStream {
    pub fn new(seed: u64, first_sample: u64, width: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_word_pos(2 * first_sample as u128 * width as u128);
        SampleStream { rng, width }
    }

    /// Fills `out` (length `width`) with the next sample's numerators in `[0, 2^53)`.
    pub fn next_into(&mut self, out: &mut [u64]) {
        debug_assert_eq!(out.len(), self.width);
        for x in out.iter_mut() {
            *x = self.rng.next_u64() >> (64 - COORD_BITS);
        }
    }
}

/// Numerators of sample `index` for a draw of `width` values per sample.
pub fn numerators(seed: u64, index: u64, width: usize) -> Vec<u64> {
    let mut out = vec![0; width];
    SampleStream::new(seed, index, width).next_into(&mut out);
    out
}

pub fn to_rational(num: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(COORD_DENOM))
}

pub fn cube_point(nums: &[u64]) -> RatVec {
    RatVec::new(nums.iter().map(|&u| to_rational(u)).collect())
}

/// Uniform point of the `n`-simplex from `n` uniform numerators: the
/// spacings of the sorted values together with `0` and `2^53`. Returns the
/// `n + 1` integer spacings, which sum to `2^53`.
pub fn simplex_spacings(nums: &[u64]) -> Vec<u64> {
    let mut cuts = nums.to_vec();
    cuts.sort_unstable();
    let mut prev = 0;
    let mut out = Vec::with_capacity(nums.len() + 1);
    for c in cuts.into_iter().chain([COORD_DENOM]) {
        out.push(c - prev);
        prev = c;
    }
    out
}

pub fn distinct(nums: &[u64]) -> bool {
    let mut v = nums.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// `[start, end)` sample ranges of at most `CHUNK` samples.
pub fn chunks(samples: u64) -> Vec<(u64, u64)> {
    (0..samples.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(samples)))
        .collect()
}
