use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::constructions::{pyramid, subset_vertex, IndexSet};
use crate::exact::{RatVec, Rational};
use crate::{Error, Result};

/// `Py^i = { x ∈ [0,1]^d : x_j <= x_i for all j }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub index: usize,
    pub ambient: usize,
}

impl Region {
    pub fn contains(&self, x: &RatVec) -> bool {
        x.dim() == self.ambient && region_membership(x, self.index)
    }
}

fn in_cube(x: &RatVec) -> bool {
    x.iter()
        .all(|c| *c >= Rational::zero() && *c <= Rational::one())
}

/// Closed membership in `Py^i`; points outside the cube are never members.
pub fn region_membership(x: &RatVec, i: usize) -> bool {
    if i == 0 || i > x.dim() || !in_cube(x) {
        return false;
    }
    let top = &x[i - 1];
    x.iter().all(|c| c <= top)
}

/// The smallest index attaining the maximum coordinate.
pub fn assign_region(x: &RatVec) -> Result<usize> {
    if x.dim() == 0 {
        return Err(Error::Invalid("zero-dimensional point".into()));
    }
    if !in_cube(x) {
        return Err(Error::OutsideCube);
    }
    let mut best = 0;
    for k in 1..x.dim() {
        if x[k] > x[best] {
            best = k;
        }
    }
    Ok(best + 1)
}

/// Extreme points of `Py^i`: the origin and every `e_J` with `i ∈ J`.
pub fn region_vertices(i: usize, d: usize) -> Vec<RatVec> {
    IndexSet::all(d)
        .filter(|j| j.contains(i))
        .map(|j| subset_vertex(&j))
        .chain([RatVec::zeros(d)])
        .collect()
}

/// `Py_{n+1} = Py^{n+1}`: the pyramid's vertices lie in the region and the
/// region's extreme points are exactly the pyramid's vertices.
pub fn pyramid_equals_region(n: usize) -> bool {
    let d = n + 1;
    let p = pyramid(n);
    let candidates = region_vertices(d, d);
    p.vertices.iter().all(|v| region_membership(v, d))
        && candidates.iter().all(|c| region_membership(c, d))
        && candidates.len() == p.vertices.len()
        && candidates.iter().all(|c| p.contains_vertex(c))
}
