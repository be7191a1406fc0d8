//! Vertex sets and special points: cube corners `e_J`, the pyramid, the
//! standard simplex, barycenters `p_J`, face simplices and the cuboids
//! `D_n[i]` that tile the simplex.
//!
//! Vertex order is canonical. Subsets are enumerated in binary-counter order
//! (bit `k` of the counter is element `k + 1`), and the pyramid lists its
//! apex `e_∅` last.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{int, RatVec, Rational};
use crate::{Error, Result};

/// A subset `J` of `{1, ..., ambient}`, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet {
    members: Vec<usize>,
    ambient: usize,
}

impl IndexSet {
    pub fn new(members: impl IntoIterator<Item = usize>, ambient: usize) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&j| j == 0 || j > ambient) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                ambient,
            });
        }
        Ok(IndexSet {
            members: set.into_iter().collect(),
            ambient,
        })
    }

    pub fn empty(ambient: usize) -> Self {
        IndexSet {
            members: Vec::new(),
            ambient,
        }
    }

    pub fn full(ambient: usize) -> Self {
        IndexSet {
            members: (1..=ambient).collect(),
            ambient,
        }
    }

    /// Subset with bit `k` of `mask` standing for element `k + 1`.
    pub fn from_mask(mask: u64, ambient: usize) -> Self {
        IndexSet {
            members: (0..ambient)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| k + 1)
                .collect(),
            ambient,
        }
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, j| m | 1 << (j - 1))
    }

    /// All subsets of `{1, ..., ambient}` in binary-counter order.
    pub fn all(ambient: usize) -> impl Iterator<Item = IndexSet> {
        (0..1u64 << ambient).map(move |m| IndexSet::from_mask(m, ambient))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    pub fn with(&self, j: usize) -> Result<IndexSet> {
        IndexSet::new(self.members.iter().copied().chain([j]), self.ambient)
    }

    /// Same members viewed inside a larger ambient index range.
    pub fn widen(&self, ambient: usize) -> Result<IndexSet> {
        IndexSet::new(self.members.iter().copied(), ambient)
    }
}

/// A polytope given by its vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolytope {
    pub label: String,
    pub ambient: usize,
    pub vertices: Vec<RatVec>,
}

impl VPolytope {
    pub fn new(label: impl Into<String>, ambient: usize, vertices: Vec<RatVec>) -> Self {
        VPolytope {
            label: label.into(),
            ambient,
            vertices,
        }
    }

    pub fn vertex_set(&self) -> BTreeSet<&RatVec> {
        self.vertices.iter().collect()
    }

    /// Equality of vertex sets, ignoring order and label.
    pub fn same_vertices(&self, other: &VPolytope) -> bool {
        self.ambient == other.ambient && self.vertex_set() == other.vertex_set()
    }

    pub fn contains_vertex(&self, v: &RatVec) -> bool {
        self.vertices.contains(v)
    }
}

/// A point tagged with the subset it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPoint {
    pub coords: RatVec,
    pub subset: IndexSet,
}

/// The 0/1 vector `e_J`; `e_∅` is the origin.
pub fn subset_vertex(j: &IndexSet) -> RatVec {
    let mut e = vec![Rational::zero(); j.ambient()];
    for &k in j.members() {
        e[k - 1] = Rational::one();
    }
    RatVec::new(e)
}

/// The unit `d`-cube. `d = 0` gives the single point of `R^0`.
pub fn cube(d: usize) -> VPolytope {
    VPolytope::new(
        "cube",
        d,
        IndexSet::all(d).map(|j| subset_vertex(&j)).collect(),
    )
}

/// `Py_{n+1}`: the cone from the origin over the ceiling facet `x_{n+1} = 1`.
pub fn pyramid(n: usize) -> VPolytope {
    let ambient = n + 1;
    let mut vertices: Vec<RatVec> = IndexSet::all(n)
        .map(|j| subset_vertex(&j.with_top(ambient)))
        .collect();
    vertices.push(RatVec::zeros(ambient));
    VPolytope::new("pyramid", ambient, vertices)
}

impl IndexSet {
    /// `J ∪ {ambient}` for a subset of `{1, ..., ambient - 1}`.
    fn with_top(&self, ambient: usize) -> IndexSet {
        IndexSet {
            members: self.members.iter().copied().chain([ambient]).collect(),
            ambient,
        }
    }
}

/// `S_n`: the hull of `e_1, ..., e_{n+1}`.
pub fn simplex(n: usize) -> VPolytope {
    let ambient = n + 1;
    VPolytope::new(
        "simplex",
        ambient,
        (1..=ambient).map(|j| RatVec::basis(ambient, j)).collect(),
    )
}

/// `p_J = (1/|J|) Σ_{j∈J} e_j`, the center of the face of the simplex spanned by `J`.
pub fn barycenter(j: &IndexSet) -> Result<LabeledPoint> {
    if j.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let w = Rational::new(1.into(), (j.len() as i64).into());
    Ok(LabeledPoint {
        coords: subset_vertex(j).scale(&w),
        subset: j.clone(),
    })
}

pub fn face_simplex(j: &IndexSet) -> Result<VPolytope> {
    if j.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    Ok(VPolytope::new(
        "face-simplex",
        j.ambient(),
        j.members()
            .iter()
            .map(|&k| RatVec::basis(j.ambient(), k))
            .collect(),
    ))
}

/// Where the pyramid edge `t ↦ t·e_{J∪{n+1}}` meets the face simplex of
/// `J ∪ {n+1}`: at `t = 1/(k+1)`, the point `(e_J + e_{n+1})/(k+1)`.
///
/// `j` is a subset of `{1, ..., n}` and may be given with ambient `n` or
/// `n + 1`; it must not contain `n + 1`.
pub fn edge_simplex_intersection(j: &IndexSet, n: usize) -> Result<LabeledPoint> {
    let ambient = n + 1;
    if j.ambient() != n && j.ambient() != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: j.ambient(),
        });
    }
    if j.contains(ambient) {
        return Err(Error::Invalid(format!(
            "index set already contains the apex coordinate {ambient}"
        )));
    }
    let widened = j.widen(ambient)?;
    let t = Rational::new(1.into(), ((j.len() + 1) as i64).into());
    let ray = &subset_vertex(&widened) + &RatVec::basis(ambient, ambient);
    Ok(LabeledPoint {
        coords: ray.scale(&t),
        subset: widened.with_top(ambient),
    })
}

/// `D_n[i]`: hull of the barycenters `p_J` with `i ∈ J ⊆ {1, ..., n+1}`.
pub fn cuboid(i: usize, n: usize) -> Result<VPolytope> {
    let ambient = n + 1;
    if i == 0 || i > ambient {
        return Err(Error::IndexOutOfRange { index: i, ambient });
    }
    let vertices = IndexSet::all(ambient)
        .filter(|j| j.contains(i))
        .map(|j| barycenter(&j).map(|p| p.coords))
        .collect::<Result<Vec<_>>>()?;
    Ok(VPolytope::new(format!("cuboid[{i}]"), ambient, vertices))
}

/// `(t, ..., t)` in dimension `d`, for `0 <= t <= 1`.
pub fn main_diagonal_point(t: &Rational, d: usize) -> Result<RatVec> {
    if *t < int(0) || *t > int(1) {
        return Err(Error::ParameterOutOfRange {
            name: "t",
            value: t.to_string(),
            lo: "0".into(),
            hi: "1".into(),
        });
    }
    Ok(RatVec::new(vec![t.clone(); d]))
}
