use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::regions::region_membership;
use super::sampling::{chunks, cube_point, simplex_spacings, SampleStream};
use crate::constructions::{cuboid, IndexSet, VPolytope};
use crate::exact::{convex_combination_exists, rat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingReport {
    pub n: usize,
    pub seed: u64,
    pub sample_count: u64,
    /// Samples whose largest coordinate is not unique.
    pub tie_samples: u64,
    /// Samples not found in their own cuboid `D_n[argmax]`.
    pub membership_violations: u64,
    /// Samples also found in a cuboid other than their own.
    pub exclusivity_violations: u64,
    pub centroid_in_all_cuboids: bool,
    /// Every vertex of `D_n[n+1]` lies in the region `Py^{n+1}`.
    pub top_cuboid_in_pyramid: bool,
    pub vertex_counts: Vec<usize>,
    /// Inclusion-pair edges `p_J — p_{J ∪ {j}}` per cuboid.
    pub edge_counts: Vec<usize>,
    pub expected_vertex_count: usize,
    pub expected_edge_count: usize,
}

impl TilingReport {
    pub fn violations(&self) -> u64 {
        let structural = !self.centroid_in_all_cuboids as u64
            + !self.top_cuboid_in_pyramid as u64
            + self
                .vertex_counts
                .iter()
                .filter(|&&c| c != self.expected_vertex_count)
                .count() as u64
            + self
                .edge_counts
                .iter()
                .filter(|&&c| c != self.expected_edge_count)
                .count() as u64;
        self.membership_violations + self.exclusivity_violations + structural
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }
}

fn inclusion_edges(i: usize, ambient: usize) -> usize {
    IndexSet::all(ambient)
        .filter(|j| j.contains(i))
        .map(|j| (1..=ambient).filter(|&k| !j.contains(k)).count())
        .sum()
}

/// Checks that the cuboids `D_n[i]` tile the simplex `S_n`: sampled points
/// with a unique largest coordinate `i` belong to `D_n[i]` and to no other
/// cuboid, decided by exact LP membership.
pub fn verify_cuboid_tiling(n: usize, samples: u64, seed: u64) -> TilingReport {
    let d = n + 1;
    let cuboids: Vec<VPolytope> = (1..=d)
        .map(|i| cuboid(i, n).expect("index in range"))
        .collect();

    let (ties, own_missing, foreign) = chunks(samples)
        .into_par_iter()
        .map(|(start, end)| {
            let mut stream = SampleStream::new(seed, start, n);
            let mut buf = vec![0u64; n];
            let mut acc = (0u64, 0u64, 0u64);
            for _ in start..end {
                stream.next_into(&mut buf);
                let spacings = simplex_spacings(&buf);
                let max = *spacings.iter().max().expect("n + 1 coordinates");
                let argmaxes: Vec<usize> = (0..d).filter(|&k| spacings[k] == max).collect();
                if argmaxes.len() != 1 {
                    acc.0 += 1;
                    continue;
                }
                let own = argmaxes[0];
                let u = cube_point(&spacings);
                for (k, c) in cuboids.iter().enumerate() {
                    let member = convex_combination_exists(&u, &c.vertices);
                    if k == own && !member {
                        acc.1 += 1;
                    } else if k != own && member {
                        acc.2 += 1;
                    }
                }
            }
            acc
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));

    let centroid = RatVec::new(vec![rat(1, d as i64); d]);
    TilingReport {
        n,
        seed,
        sample_count: samples,
        tie_samples: ties,
        membership_violations: own_missing,
        exclusivity_violations: foreign,
        centroid_in_all_cuboids: cuboids
            .iter()
            .all(|c| convex_combination_exists(&centroid, &c.vertices)),
        top_cuboid_in_pyramid: cuboids[d - 1]
            .vertices
            .iter()
            .all(|v| region_membership(v, d) && v.sum() == rat(1, 1)),
        vertex_counts: cuboids.iter().map(|c| c.vertices.len()).collect(),
        edge_counts: (1..=d).map(|i| inclusion_edges(i, d)).collect(),
        expected_vertex_count: 1 << n,
        expected_edge_count: if n == 0 { 0 } else { n << (n - 1) },
    }
}
