use crate::constructions::{barycenter, subset_vertex, IndexSet};
use crate::exact::RatVec;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementClass {
    CubeEdge,
    BaseHighlight,
    ConeEdge,
    SimplexEdge,
    CuboidStick,
    BarycenterDot,
    OriginDot,
}

impl ElementClass {
    pub fn name(self) -> &'static str {
        match self {
            ElementClass::CubeEdge => "cube-edge",
            ElementClass::BaseHighlight => "base-highlight",
            ElementClass::ConeEdge => "cone-edge",
            ElementClass::SimplexEdge => "simplex-edge",
            ElementClass::CuboidStick => "cuboid-stick",
            ElementClass::BarycenterDot => "barycenter-dot",
            ElementClass::OriginDot => "origin-dot",
        }
    }
}

/// Wireframe elements in exact coordinates of `R^m`, `m = n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    pub ambient: usize,
    pub points: Vec<(RatVec, ElementClass)>,
    pub edges: Vec<(RatVec, RatVec, ElementClass)>,
}

impl Scene {
    pub fn count_edges(&self, class: ElementClass) -> usize {
        self.edges.iter().filter(|e| e.2 == class).count()
    }

    pub fn count_points(&self, class: ElementClass) -> usize {
        self.points.iter().filter(|p| p.1 == class).count()
    }
}

/// The cube wireframe, the cone from the origin to the ceiling facet, the
/// simplex edges, the cuboid sticks `p_J — p_{J∪{j}}` (with `m ∈ J`), the
/// barycenter dots `p_J` (with `m ∈ J`) and the origin.
pub fn build_scene(n: usize) -> Result<Scene> {
    let m = n + 1;
    if m < 2 {
        return Err(Error::Invalid("scene needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for j in IndexSet::all(m) {
        for i in (1..=m).filter(|&i| !j.contains(i)) {
            edges.push((
                subset_vertex(&j),
                subset_vertex(&j.with(i)?),
                ElementClass::CubeEdge,
            ));
        }
    }
    let origin = RatVec::zeros(m);
    for j in IndexSet::all(n) {
        let top = j.widen(m)?.with(m)?;
        edges.push((origin.clone(), subset_vertex(&top), ElementClass::ConeEdge));
    }
    for a in 1..=m {
        for b in a + 1..=m {
            edges.push((
                RatVec::basis(m, a),
                RatVec::basis(m, b),
                ElementClass::SimplexEdge,
            ));
        }
    }
    let top_sets: Vec<IndexSet> = IndexSet::all(m).filter(|j| j.contains(m)).collect();
    for j in &top_sets {
        for k in (1..=m).filter(|&k| !j.contains(k)) {
            edges.push((
                barycenter(j)?.coords,
                barycenter(&j.with(k)?)?.coords,
                ElementClass::CuboidStick,
            ));
        }
    }
    let mut points = top_sets
        .iter()
        .map(|j| Ok((barycenter(j)?.coords, ElementClass::BarycenterDot)))
        .collect::<Result<Vec<_>>>()?;
    points.push((origin, ElementClass::OriginDot));
    Ok(Scene {
        ambient: m,
        points,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ElementClass::*;

    fn counts(n: usize) -> [usize; 6] {
        let s = build_scene(n).unwrap();
        [
            s.count_edges(CubeEdge),
            s.count_edges(ConeEdge),
            s.count_edges(SimplexEdge),
            s.count_edges(CuboidStick),
            s.count_points(BarycenterDot),
            s.count_points(OriginDot),
        ]
    }

    #[test]
    fn scene_counts_examples() {
        assert_eq!(counts(2), [12, 4, 3, 4, 4, 1]);
        assert_eq!(counts(3), [32, 8, 6, 12, 8, 1]);
        assert_eq!(counts(1), [4, 2, 1, 1, 2, 1]);
        assert!(build_scene(0).is_err());
    }

    #[test]
    fn scene_counts_closed_form() {
        for n in 1..=6usize {
            let m = n + 1;
            let expected = [
                m << (m - 1),
                1 << n,
                m * (m - 1) / 2,
                n << (n - 1),
                1 << n,
                1,
            ];
            assert_eq!(counts(n), expected, "n = {n}");
        }
    }
}
