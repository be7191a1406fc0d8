//! Simplex chains: the Kuhn triangulation of the cube, cones over it that
//! fill the pyramid, and the `d!`-simplex decomposition of the whole cube
//! obtained by rotating the pyramid cone with `Θ_d`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact::{determinant, signum, RatMat, RatVec, Rational};
use crate::symmetry::{theta, CyclicRotation};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedSimplex {
    pub orientation: i8,
    pub vertices: Vec<RatVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexChain {
    pub label: String,
    pub ambient: usize,
    pub simplices: Vec<OrientedSimplex>,
}

impl OrientedSimplex {
    /// Builds a simplex and records the sign of its edge determinant.
    /// Lower-dimensional simplices (fewer than `ambient + 1` vertices) keep
    /// `fallback` as their orientation.
    fn build(vertices: Vec<RatVec>, fallback: i8) -> Result<Self> {
        if !affinely_independent(&vertices)? {
            return Err(Error::Degenerate(format!(
                "vertices {vertices:?} are affinely dependent"
            )));
        }
        let ambient = vertices.first().map_or(0, RatVec::dim);
        let orientation = if vertices.len() == ambient + 1 {
            signum(&edge_determinant(&vertices)?)
        } else {
            fallback
        };
        Ok(OrientedSimplex {
            orientation,
            vertices,
        })
    }

    /// Squared pairwise vertex distances, sorted.
    pub fn distance_profile(&self) -> Vec<Rational> {
        let v = &self.vertices;
        let mut out: Vec<Rational> = (0..v.len())
            .flat_map(|a| (a + 1..v.len()).map(move |b| (a, b)))
            .map(|(a, b)| v[a].squared_distance(&v[b]).expect("shared dimension"))
            .collect();
        out.sort();
        out
    }
}

fn edge_vectors(vertices: &[RatVec]) -> Vec<RatVec> {
    vertices[1..].iter().map(|v| v - &vertices[0]).collect()
}

/// `det(v_1 - v_0, ..., v_d - v_0)`.
fn edge_determinant(vertices: &[RatVec]) -> Result<Rational> {
    determinant(&RatMat::from_rows(edge_vectors(vertices))?)
}

/// Nonzero Gram determinant of the edge vectors.
fn affinely_independent(vertices: &[RatVec]) -> Result<bool> {
    if vertices.len() <= 1 {
        return Ok(true);
    }
    let edges = edge_vectors(vertices);
    let gram = edges
        .iter()
        .map(|a| {
            edges
                .iter()
                .map(|b| a.dot(b))
                .collect::<Result<Vec<_>>>()
                .map(RatVec::new)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(!determinant(&RatMat::from_rows(gram)?)?.is_zero())
}

/// Permutations of `0..d` in lexicographic order.
fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..d).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..d).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..d)
            .rev()
            .find(|&j| p[j] > p[i - 1])
            .expect("pivot exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// The `d!` order simplices of the unit `d`-cube: for each permutation `π`,
/// the path `0, e_{π(1)}, e_{π(1)} + e_{π(2)}, ..., (1, ..., 1)`.
/// With `d = 0` the single point of `R^0` is returned.
pub fn kuhn_triangulation(d: usize) -> SimplexChain {
    let simplices = permutations(d)
        .into_iter()
        .map(|perm| {
            let mut v = RatVec::zeros(d);
            let mut vertices = vec![v.clone()];
            for &axis in &perm {
                v = &v + &RatVec::basis(d, axis + 1);
                vertices.push(v.clone());
            }
            OrientedSimplex::build(vertices, 1).expect("Kuhn simplices are nondegenerate")
        })
        .collect();
    SimplexChain {
        label: "kuhn".into(),
        ambient: d,
        simplices,
    }
}

/// Embeds a chain of `R^d` into the ceiling hyperplane `x_{d+1} = 1`.
pub fn lift_to_ceiling(chain: &SimplexChain) -> SimplexChain {
    SimplexChain {
        label: format!("{}-ceiling", chain.label),
        ambient: chain.ambient + 1,
        simplices: chain
            .simplices
            .iter()
            .map(|s| OrientedSimplex {
                orientation: s.orientation,
                vertices: s
                    .vertices
                    .iter()
                    .map(|v| v.extended(Rational::one()))
                    .collect(),
            })
            .collect(),
    }
}

/// Adjoins `apex` to every simplex of a chain lying in `x_d = 1`.
pub fn cone_chain(base: &SimplexChain, apex: &RatVec) -> Result<SimplexChain> {
    let d = base.ambient;
    if apex.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: apex.dim(),
        });
    }
    let one = Rational::one();
    if d == 0 || apex[d - 1] == one {
        return Err(Error::Degenerate("apex lies in the base hyperplane".into()));
    }
    if let Some(v) = base
        .simplices
        .iter()
        .flat_map(|s| &s.vertices)
        .find(|v| v.dim() != d || v[d - 1] != one)
    {
        return Err(Error::Invalid(format!(
            "base vertex {v} is not on x_{d} = 1"
        )));
    }
    let simplices = base
        .simplices
        .iter()
        .map(|s| {
            let mut vertices = s.vertices.clone();
            vertices.push(apex.clone());
            OrientedSimplex::build(vertices, s.orientation)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplexChain {
        label: "cone".into(),
        ambient: d,
        simplices,
    })
}

/// The `n!` simplices filling `Py_{n+1}`: the Kuhn triangulation of the
/// ceiling `n`-cube coned from the origin.
pub fn pyramid_chain(n: usize) -> SimplexChain {
    let base = lift_to_ceiling(&kuhn_triangulation(n));
    let mut chain = cone_chain(&base, &RatVec::zeros(n + 1)).expect("origin is off the ceiling");
    chain.label = "pyramid".into();
    chain
}

/// Image of a chain under `Θ^times`, with orientations recomputed.
pub fn rotate_chain(
    chain: &SimplexChain,
    r: &CyclicRotation,
    times: usize,
) -> Result<SimplexChain> {
    let simplices = chain
        .simplices
        .iter()
        .map(|s| {
            let vertices = s
                .vertices
                .iter()
                .map(|v| r.apply_point(v, times))
                .collect::<Result<Vec<_>>>()?;
            OrientedSimplex::build(vertices, s.orientation * r.orbit_sign(times))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplexChain {
        label: format!("{}^theta{}", chain.label, times),
        ambient: chain.ambient,
        simplices,
    })
}

/// The `d!` simplices of the unit `d`-cube: `d` rotated copies of the
/// pyramid chain, each with `(d-1)!` simplices.
pub fn cube_chain(d: usize) -> SimplexChain {
    assert!(d >= 1, "cube_chain needs d >= 1");
    let pyr = pyramid_chain(d - 1);
    let r = theta(d);
    let simplices = (0..d)
        .flat_map(|k| {
            rotate_chain(&pyr, &r, k)
                .expect("rotation preserves dimension")
                .simplices
        })
        .collect();
    SimplexChain {
        label: "cube".into(),
        ambient: d,
        simplices,
    }
}

pub fn factorial(d: usize) -> BigInt {
    (1..=d).fold(BigInt::one(), |acc, k| acc * k)
}

/// `|det(v_1 - v_0, ..., v_d - v_0)| / d!`.
pub fn simplex_volume(s: &OrientedSimplex, ambient: usize) -> Result<Rational> {
    if s.vertices.len() != ambient + 1 {
        return Err(Error::VertexCount {
            expected: ambient + 1,
            found: s.vertices.len(),
        });
    }
    Ok(edge_determinant(&s.vertices)?.abs() / Rational::from_integer(factorial(ambient)))
}

/// Sum of exact simplex volumes; per-simplex determinants run in parallel.
pub fn chain_volume(c: &SimplexChain) -> Result<Rational> {
    c.simplices
        .par_iter()
        .map(|s| simplex_volume(s, c.ambient))
        .try_reduce(Rational::zero, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::pyramid;
    use crate::exact::{int, rat};

    #[test]
    fn permutation_counts() {
        for d in 0..=6 {
            let ps = permutations(d);
            assert_eq!(BigInt::from(ps.len()), factorial(d));
            let mut sorted = ps.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, ps);
        }
    }

    #[test]
    fn kuhn_square() {
        let k = kuhn_triangulation(2);
        assert_eq!(k.simplices.len(), 2);
        let target: std::collections::BTreeSet<RatVec> = [[0, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| RatVec::from_ints(v))
            .collect();
        assert!(k.simplices.iter().any(|s| s
            .vertices
            .iter()
            .cloned()
            .collect::<std::collections::BTreeSet<_>>()
            == target));
    }

    #[test]
    fn kuhn_cube3_volumes() {
        let k = kuhn_triangulation(3);
        assert_eq!(k.simplices.len(), 6);
        for s in &k.simplices {
            assert_eq!(simplex_volume(s, 3).unwrap(), rat(1, 6));
        }
        assert_eq!(chain_volume(&k).unwrap(), int(1));
    }

    #[test]
    fn kuhn_interval() {
        let k = kuhn_triangulation(1);
        assert_eq!(k.simplices.len(), 1);
        assert_eq!(
            k.simplices[0].vertices,
            vec![RatVec::from_ints(&[0]), RatVec::from_ints(&[1])]
        );
    }

    #[test]
    fn cone_over_split_square_fills_py3() {
        let c = pyramid_chain(2);
        assert_eq!(c.simplices.len(), 2);
        assert_eq!(chain_volume(&c).unwrap(), rat(1, 3));
        let verts: std::collections::BTreeSet<&RatVec> =
            c.simplices.iter().flat_map(|s| &s.vertices).collect();
        assert_eq!(verts, pyramid(2).vertex_set());
    }

    #[test]
    fn cone_over_point() {
        let base = SimplexChain {
            label: "pt".into(),
            ambient: 1,
            simplices: vec![OrientedSimplex {
                orientation: 1,
                vertices: vec![RatVec::from_ints(&[1])],
            }],
        };
        let c = cone_chain(&base, &RatVec::zeros(1)).unwrap();
        assert_eq!(chain_volume(&c).unwrap(), int(1));
        assert_eq!(pyramid_chain(0).simplices, c.simplices);
    }

    #[test]
    fn cone_errors() {
        let base = lift_to_ceiling(&kuhn_triangulation(2));
        assert!(cone_chain(&base, &RatVec::from_ints(&[0, 0, 1])).is_err());
        assert!(cone_chain(&base, &RatVec::zeros(2)).is_err());
        let off = kuhn_triangulation(3);
        assert!(cone_chain(&off, &RatVec::zeros(3)).is_err());
    }

    #[test]
    fn wrong_vertex_count_is_rejected() {
        let c = lift_to_ceiling(&kuhn_triangulation(2));
        assert!(matches!(chain_volume(&c), Err(Error::VertexCount { .. })));
    }

    #[test]
    fn pyramid_volumes() {
        for n in 0..=6usize {
            let c = pyramid_chain(n);
            assert_eq!(BigInt::from(c.simplices.len()), factorial(n));
            assert_eq!(chain_volume(&c).unwrap(), rat(1, n as i64 + 1), "n = {n}");
        }
    }

    #[test]
    fn cube_chains() {
        assert_eq!(cube_chain(2).simplices.len(), 2);
        for d in 1..=5usize {
            let c = cube_chain(d);
            let f = factorial(d);
            assert_eq!(BigInt::from(c.simplices.len()), f);
            let each = Rational::new(BigInt::one(), f);
            for s in &c.simplices {
                assert_eq!(simplex_volume(s, d).unwrap(), each);
            }
            assert_eq!(chain_volume(&c).unwrap(), int(1));
        }
    }

    #[test]
    fn cube_chain_is_congruent() {
        for d in 1..=5 {
            let c = cube_chain(d);
            let first = c.simplices[0].distance_profile();
            assert!(c.simplices.iter().all(|s| s.distance_profile() == first));
        }
    }

    /// Recovers the axis order of an order simplex from consecutive vertices.
    fn axis_order(s: &OrientedSimplex) -> Option<Vec<usize>> {
        let mut vs = s.vertices.clone();
        vs.sort_by_key(|v| v.iter().filter(|x| **x == int(1)).count());
        vs.windows(2)
            .map(|w| {
                let diff = &w[1] - &w[0];
                let ones: Vec<usize> = (0..diff.dim()).filter(|&k| diff[k] == int(1)).collect();
                (ones.len() == 1 && diff.sum() == int(1)).then(|| ones[0])
            })
            .collect()
    }

    #[test]
    fn cube_chain_simplices_are_order_simplices() {
        for d in 1..=5 {
            let mut orders: Vec<_> = cube_chain(d)
                .simplices
                .iter()
                .map(|s| axis_order(s).expect("order simplex"))
                .collect();
            orders.sort();
            assert_eq!(orders, permutations(d));
        }
    }

    #[test]
    fn kuhn_simplices_are_interior_disjoint() {
        // Points with distinct coordinates lie in exactly the simplex whose
        // axis order sorts them decreasingly.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state >> 11
        };
        for d in [2usize, 3, 4] {
            let chain = kuhn_triangulation(d);
            let orders: Vec<Vec<usize>> = chain
                .simplices
                .iter()
                .map(|s| axis_order(s).unwrap())
                .collect();
            for _ in 0..10_000 {
                let x: Vec<u64> = (0..d).map(|_| next()).collect();
                let mut uniq = x.clone();
                uniq.sort();
                uniq.dedup();
                if uniq.len() < d {
                    continue;
                }
                let hits = orders
                    .iter()
                    .filter(|o| o.windows(2).all(|w| x[w[0]] >= x[w[1]]))
                    .count();
                assert_eq!(hits, 1);
            }
        }
    }

    #[test]
    fn chain_json_shape() {
        let v = serde_json::to_value(pyramid_chain(1)).unwrap();
        assert_eq!(v["label"], "pyramid");
        assert_eq!(v["ambient"], 2);
        assert_eq!(
            v["simplices"][0]["orientation"].as_i64().map(i64::abs),
            Some(1)
        );
        assert_eq!(v["simplices"][0]["vertices"].as_array().unwrap().len(), 3);
    }
}
