use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::binomial_tolerance;
use super::regions::{assign_region, pyramid_equals_region, region_membership, region_vertices};
use super::sampling::{chunks, cube_point, distinct, SampleStream};
use crate::constructions::{pyramid, VPolytope};
use crate::decomposition::{chain_volume, pyramid_chain, rotate_chain};
use crate::exact::{serde_rational, Rational};
use crate::symmetry::{apply_to_polytope, theta};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TessellationReport {
    pub n: usize,
    pub dim: usize,
    pub seed: u64,
    #[serde(with = "serde_rational")]
    pub exact_volume_each: Rational,
    #[serde(with = "serde_rational::vec")]
    pub region_volumes: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub volume_sum: Rational,
    pub pyramid_equals_region: bool,
    /// Indexed by region `i = 1..=dim`: `Θ^i(pyramid)` has the extreme
    /// points of `Py^i` as its vertex set.
    pub orbit_match: Vec<bool>,
    pub sample_count: u64,
    /// Samples with a repeated coordinate, excluded from the partition check.
    pub tie_samples: u64,
    pub cover_violations: u64,
    pub multi_assignment_count: u64,
    pub assign_mismatches: u64,
    pub per_region_hits: Vec<u64>,
    pub expected_hits: f64,
    pub hit_tolerance: f64,
    pub hits_within_tolerance: bool,
}

impl TessellationReport {
    pub fn passed(&self) -> bool {
        let each = Rational::new(1.into(), (self.dim as i64).into());
        self.region_volumes.iter().all(|v| *v == each)
            && self.volume_sum.is_one()
            && self.pyramid_equals_region
            && self.orbit_match.iter().all(|&m| m)
            && self.cover_violations == 0
            && self.multi_assignment_count == 0
            && self.assign_mismatches == 0
    }
}

#[derive(Default)]
struct Counts {
    evaluated: u64,
    ties: u64,
    uncovered: u64,
    multi: u64,
    mismatched: u64,
    hits: Vec<u64>,
}

impl Counts {
    fn merge(mut self, other: Counts) -> Counts {
        self.evaluated += other.evaluated;
        self.ties += other.ties;
        self.uncovered += other.uncovered;
        self.multi += other.multi;
        self.mismatched += other.mismatched;
        if self.hits.len() < other.hits.len() {
            self.hits.resize(other.hits.len(), 0);
        }
        for (a, b) in self.hits.iter_mut().zip(other.hits) {
            *a += b;
        }
        self
    }
}

fn sample_regions(d: usize, samples: u64, seed: u64) -> Counts {
    chunks(samples)
        .into_par_iter()
        .map(|(start, end)| {
            let mut c = Counts {
                hits: vec![0; d],
                ..Counts::default()
            };
            let mut stream = SampleStream::new(seed, start, d);
            let mut buf = vec![0u64; d];
            for _ in start..end {
                stream.next_into(&mut buf);
                c.evaluated += 1;
                if !distinct(&buf) {
                    c.ties += 1;
                    continue;
                }
                let x = cube_point(&buf);
                let inside: Vec<usize> = (1..=d).filter(|&i| region_membership(&x, i)).collect();
                match inside.as_slice() {
                    [] => c.uncovered += 1,
                    [i] => {
                        c.hits[i - 1] += 1;
                        if assign_region(&x).ok() != Some(*i) {
                            c.mismatched += 1;
                        }
                    }
                    _ => c.multi += 1,
                }
            }
            c
        })
        .reduce(Counts::default, Counts::merge)
}

/// Checks that the `n + 1` rotated pyramids tessellate the `(n+1)`-cube:
/// exact volumes of every rotated pyramid chain, vertex sets of the rotated
/// pyramids against the regions `Py^i`, and a sampled partition check.
pub fn verify_tessellation(n: usize, samples: u64, seed: u64) -> TessellationReport {
    let d = n + 1;
    let r = theta(d);
    let base = pyramid_chain(n);
    let region_volumes: Vec<Rational> = (1..=d)
        .into_par_iter()
        .map(|i| {
            let chain = rotate_chain(&base, &r, i).expect("same dimension");
            chain_volume(&chain).expect("full-dimensional simplices")
        })
        .collect();
    let volume_sum = region_volumes.iter().sum();

    let pyr = pyramid(n);
    let orbit_match = (1..=d)
        .map(|i| {
            let img = apply_to_polytope(&r, &pyr, i).expect("same dimension");
            let region = VPolytope::new("region", d, region_vertices(i, d));
            img.same_vertices(&region) && img.vertices.iter().all(|v| region_membership(v, i))
        })
        .collect();

    let counts = sample_regions(d, samples, seed);
    let p = 1.0 / d as f64;
    let hits = if counts.hits.is_empty() {
        vec![0; d]
    } else {
        counts.hits
    };
    let expected_hits = samples as f64 * p;
    let hit_tolerance = binomial_tolerance(samples, p);
    TessellationReport {
        n,
        dim: d,
        seed,
        exact_volume_each: region_volumes[0].clone(),
        volume_sum,
        region_volumes,
        pyramid_equals_region: pyramid_equals_region(n),
        orbit_match,
        sample_count: counts.evaluated,
        tie_samples: counts.ties,
        cover_violations: counts.uncovered,
        multi_assignment_count: counts.multi,
        assign_mismatches: counts.mismatched,
        hits_within_tolerance: hits
            .iter()
            .all(|&h| (h as f64 - expected_hits).abs() <= hit_tolerance),
        per_region_hits: hits,
        expected_hits,
        hit_tolerance,
    }
}
