//! The cyclic coordinate rotation `Θ_d: (x_1, ..., x_d) ↦ (x_d, x_1, ..., x_{d-1})`
//! and its action on subsets, points and polytopes.

use serde::{Deserialize, Serialize};

use crate::constructions::{subset_vertex, IndexSet, VPolytope};
use crate::exact::{determinant, signum, RatMat, RatVec};
use crate::{Error, Result};

/// `Θ_d` together with its order `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicRotation {
    matrix: RatMat,
    order: usize,
}

/// One element of the orbit of a polytope under `Θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitImage {
    pub power: usize,
    pub polytope: VPolytope,
    /// `det(Θ)^power`; `-1` marks an orientation-reversing image.
    pub sign: i8,
}

pub fn theta(d: usize) -> CyclicRotation {
    // e_j -> e_{j+1}, so row i picks coordinate i-1 (row 1 picks x_d).
    let rows = (1..=d)
        .map(|i| RatVec::basis(d, if i == 1 { d } else { i - 1 }))
        .collect();
    CyclicRotation {
        matrix: RatMat::from_rows(rows).expect("rows share dimension"),
        order: d,
    }
}

impl CyclicRotation {
    pub fn matrix(&self) -> &RatMat {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.order
    }

    pub fn power(&self, times: usize) -> RatMat {
        self.matrix
            .pow(times % self.order.max(1))
            .expect("rotation matrix is square")
    }

    /// `Θ^times x`, computed as a coordinate shift.
    pub fn apply_point(&self, x: &RatVec, times: usize) -> Result<RatVec> {
        if x.dim() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: x.dim(),
            });
        }
        let d = self.order;
        let s = times % d.max(1);
        Ok(RatVec::new(
            (0..d).map(|k| x[(k + d - s) % d].clone()).collect(),
        ))
    }

    pub fn determinant_sign(&self) -> i8 {
        signum(&determinant(&self.matrix).expect("square"))
    }

    pub fn orbit_sign(&self, times: usize) -> i8 {
        if self.determinant_sign() < 0 && times % 2 == 1 {
            -1
        } else {
            1
        }
    }

    /// Every image `Θ^k P` for `k = 0 .. order`.
    pub fn orbit(&self, p: &VPolytope) -> Result<Vec<OrbitImage>> {
        (0..self.order)
            .map(|k| {
                Ok(OrbitImage {
                    power: k,
                    polytope: apply_to_polytope(self, p, k)?,
                    sign: self.orbit_sign(k),
                })
            })
            .collect()
    }
}

/// `J + i`: each member shifted by `i` and reduced into `1..=ambient`.
pub fn shift_subset(j: &IndexSet, i: i64) -> IndexSet {
    let m = j.ambient() as i64;
    if m == 0 {
        return j.clone();
    }
    IndexSet::new(
        j.members()
            .iter()
            .map(|&k| ((k as i64 - 1 + i).rem_euclid(m) + 1) as usize),
        j.ambient(),
    )
    .expect("shifted members stay in range")
}

/// The vertex-wise image `Θ^times P`, computed with the exact matrix power.
pub fn apply_to_polytope(r: &CyclicRotation, p: &VPolytope, times: usize) -> Result<VPolytope> {
    if p.ambient != r.dim() {
        return Err(Error::DimensionMismatch {
            expected: r.dim(),
            found: p.ambient,
        });
    }
    let m = r.power(times);
    let vertices = p
        .vertices
        .iter()
        .map(|v| m.apply(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(VPolytope::new(
        format!("{}^theta{}", p.label, times),
        p.ambient,
        vertices,
    ))
}

/// A facet `x_axis = 1` of the cube, one of the pieces of the link of the
/// origin, with the ordered direction frame that spans it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkFacet {
    pub axis: usize,
    pub dim: usize,
    pub frame: Vec<RatVec>,
    pub vertices: Vec<RatVec>,
}

/// The `d` facets of the `d`-cube that avoid the origin.
///
/// Facet `x_j = 1` carries the frame `(e_{j+1}, ..., e_d, e_1, ..., e_{j-1})`;
/// for `j = d` this is `(e_1, ..., e_{d-1})`, and `Θ` carries each frame to the
/// next facet's frame.
pub fn link_of_origin(d: usize) -> Vec<LinkFacet> {
    (1..=d)
        .map(|axis| {
            let frame = (1..d)
                .map(|k| RatVec::basis(d, (axis - 1 + k) % d + 1))
                .collect();
            let vertices = IndexSet::all(d)
                .filter(|j| j.contains(axis))
                .map(|j| subset_vertex(&j))
                .collect();
            LinkFacet {
                axis,
                dim: d - 1,
                frame,
                vertices,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{barycenter, cuboid, pyramid, simplex};
    use crate::exact::{int, rat};

    fn set(m: &[usize], a: usize) -> IndexSet {
        IndexSet::new(m.iter().copied(), a).unwrap()
    }

    #[test]
    fn theta_examples() {
        let t2 = theta(2);
        assert_eq!(
            *t2.matrix(),
            RatMat::from_rows(vec![RatVec::from_ints(&[0, 1]), RatVec::from_ints(&[1, 0])])
                .unwrap()
        );
        let t3 = theta(3);
        assert_eq!(
            t3.matrix().apply(&RatVec::basis(3, 1)).unwrap(),
            RatVec::basis(3, 2)
        );
        assert_eq!(
            t3.matrix().apply(&RatVec::basis(3, 2)).unwrap(),
            RatVec::basis(3, 3)
        );
        assert_eq!(
            t3.matrix().apply(&RatVec::basis(3, 3)).unwrap(),
            RatVec::basis(3, 1)
        );
        let x = RatVec::new(vec![rat(1, 2), rat(1, 3), rat(1, 5)]);
        assert_eq!(
            t3.matrix().apply(&x).unwrap(),
            RatVec::new(vec![rat(1, 5), rat(1, 2), rat(1, 3)])
        );
        assert!(theta(4).matrix().pow(4).unwrap().is_identity());
    }

    #[test]
    fn apply_point_matches_matrix() {
        let r = theta(5);
        let x = RatVec::from_ints(&[1, 2, 3, 4, 5]);
        for k in 0..7 {
            assert_eq!(r.apply_point(&x, k).unwrap(), r.power(k).apply(&x).unwrap());
        }
    }

    #[test]
    fn permutation_matrix_shape() {
        for d in 1..=8 {
            let m = theta(d);
            for i in 0..d {
                let row_ones = (0..d).filter(|&j| *m.matrix().get(i, j) == int(1)).count();
                let col_ones = (0..d).filter(|&j| *m.matrix().get(j, i) == int(1)).count();
                let zeros = (0..d).filter(|&j| *m.matrix().get(i, j) == int(0)).count();
                assert_eq!((row_ones, col_ones, zeros), (1, 1, d - 1));
            }
        }
    }

    #[test]
    fn determinant_parity() {
        for n in 0..=10usize {
            let det = determinant(theta(n + 1).matrix()).unwrap();
            assert_eq!(det, int(if n % 2 == 0 { 1 } else { -1 }), "n = {n}");
        }
    }

    #[test]
    fn shifts() {
        assert_eq!(shift_subset(&set(&[3], 3), 1), set(&[1], 3));
        assert_eq!(shift_subset(&set(&[1, 3], 3), 1), set(&[1, 2], 3));
        assert_eq!(shift_subset(&IndexSet::empty(4), 3), IndexSet::empty(4));
        assert_eq!(shift_subset(&set(&[1], 4), -1), set(&[4], 4));
    }

    #[test]
    fn theta_moves_barycenters() {
        for n in 0..=6usize {
            let d = n + 1;
            let r = theta(d);
            for j in IndexSet::all(d).filter(|j| !j.is_empty()) {
                let p = barycenter(&j).unwrap().coords;
                for i in 0..=d {
                    let lhs = r.power(i).apply(&p).unwrap();
                    let rhs = barycenter(&shift_subset(&j, i as i64)).unwrap().coords;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn simplex_is_invariant() {
        for n in 0..=6 {
            let s = simplex(n);
            let img = apply_to_polytope(&theta(n + 1), &s, 1).unwrap();
            assert!(img.same_vertices(&s));
        }
    }

    #[test]
    fn kites_rotate() {
        let r = theta(3);
        let d3 = cuboid(3, 2).unwrap();
        assert!(apply_to_polytope(&r, &d3, 1)
            .unwrap()
            .same_vertices(&cuboid(1, 2).unwrap()));
        assert!(apply_to_polytope(&r, &d3, 2)
            .unwrap()
            .same_vertices(&cuboid(2, 2).unwrap()));
        assert!(apply_to_polytope(&r, &d3, 3).unwrap().same_vertices(&d3));
    }

    #[test]
    fn cuboids_cycle() {
        for n in 0..=5usize {
            let r = theta(n + 1);
            for i in 1..=n + 1 {
                let img = apply_to_polytope(&r, &cuboid(i, n).unwrap(), 1).unwrap();
                assert!(img.same_vertices(&cuboid(i % (n + 1) + 1, n).unwrap()));
            }
        }
    }

    #[test]
    fn pyramid_base_rotates_to_x1_face() {
        let img = apply_to_polytope(&theta(3), &pyramid(2), 1).unwrap();
        assert_eq!(img.label, "pyramid^theta1");
        let base: Vec<_> = img.vertices.iter().filter(|v| v[0] == int(1)).collect();
        assert_eq!(base.len(), 4);
        assert!(img.contains_vertex(&RatVec::zeros(3)));
    }

    #[test]
    fn apply_dimension_mismatch() {
        assert!(apply_to_polytope(&theta(3), &pyramid(3), 1).is_err());
    }

    #[test]
    fn orbit_signs() {
        for d in 1..=7usize {
            let r = theta(d);
            let orbit = r.orbit(&pyramid(d - 1)).unwrap();
            assert_eq!(orbit.len(), d);
            for img in orbit {
                let flipped = d % 2 == 0 && img.power % 2 == 1;
                assert_eq!(img.sign, if flipped { -1 } else { 1 });
            }
        }
    }

    #[test]
    fn link_facets() {
        let link = link_of_origin(4);
        assert_eq!(link.len(), 4);
        assert!(link
            .iter()
            .all(|f| f.dim == 3 && f.vertices.len() == 8 && f.frame.len() == 3));
        let top = &link[3];
        assert_eq!(
            top.frame,
            vec![
                RatVec::basis(4, 1),
                RatVec::basis(4, 2),
                RatVec::basis(4, 3)
            ]
        );
        let r = theta(4);
        for k in 0..4 {
            let next = &link[(k + 3 + 1) % 4];
            let here = &link[(k + 3) % 4];
            let moved: Vec<_> = here
                .frame
                .iter()
                .map(|v| r.apply_point(v, 1).unwrap())
                .collect();
            assert_eq!(moved, next.frame);
        }
        let one = link_of_origin(1);
        assert_eq!(one.len(), 1);
        assert_eq!((one[0].axis, one[0].dim), (1, 0));
        assert!(one[0].frame.is_empty());
    }
}
