use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sampling::{chunks, SampleStream};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub estimate: f64,
    pub stderr: f64,
    pub samples: u64,
    pub seed: u64,
}

impl MCEstimate {
    /// `|estimate - exact| <= k·stderr`.
    pub fn within(&self, exact: f64, k: f64) -> bool {
        (self.estimate - exact).abs() <= k * self.stderr
    }
}

/// Fraction of uniform cube samples accepted by `inside`. The predicate sees
/// the integer numerators over the common denominator `2^53`, so coordinate
/// comparisons are exact.
pub fn mc_estimate<F>(d: usize, samples: u64, seed: u64, inside: F) -> MCEstimate
where
    F: Fn(&[u64]) -> bool + Sync,
{
    let hits: u64 = chunks(samples)
        .into_par_iter()
        .map(|(start, end)| {
            let mut stream = SampleStream::new(seed, start, d);
            let mut buf = vec![0u64; d];
            (start..end)
                .filter(|_| {
                    stream.next_into(&mut buf);
                    inside(&buf)
                })
                .count() as u64
        })
        .sum();
    let p = if samples == 0 {
        0.0
    } else {
        hits as f64 / samples as f64
    };
    MCEstimate {
        estimate: p,
        stderr: (p * (1.0 - p) / samples.max(1) as f64).sqrt(),
        samples,
        seed,
    }
}

/// Monte Carlo volume of the region `Py^i` in the `d`-cube.
pub fn mc_volume(i: usize, d: usize, samples: u64, seed: u64) -> MCEstimate {
    mc_estimate(d, samples, seed, |x| {
        (1..=d).contains(&i) && x.iter().all(|c| *c <= x[i - 1])
    })
}
