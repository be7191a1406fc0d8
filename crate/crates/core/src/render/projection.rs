use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A 2×m or 3×m linear map to the picture space.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionMatrix {
    rows: Vec<Vec<f64>>,
}

impl ProjectionMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        if !(2..=3).contains(&rows.len()) {
            return Err(Error::Invalid(format!(
                "projection must have 2 or 3 rows, got {}",
                rows.len()
            )));
        }
        let m = rows[0].len();
        if let Some(r) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: r.len(),
            });
        }
        Ok(ProjectionMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Largest singular value; closed form for two rows, Frobenius bound otherwise.
    pub fn operator_norm(&self) -> f64 {
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        if self.rows.len() == 2 {
            let (a, b, c) = (
                dot(&self.rows[0], &self.rows[0]),
                dot(&self.rows[0], &self.rows[1]),
                dot(&self.rows[1], &self.rows[1]),
            );
            let half = (a - c) / 2.0;
            ((a + c) / 2.0 + (half * half + b * b).sqrt()).sqrt()
        } else {
            self.rows.iter().map(|r| dot(r, r)).sum::<f64>().sqrt()
        }
    }
}

/// Coordinate axis `j` goes to the `j`-th `m`-th root of unity.
pub fn projection_roots2d(m: usize) -> Result<ProjectionMatrix> {
    if m < 2 {
        return Err(Error::Invalid(format!("roots2d needs m >= 2, got {m}")));
    }
    let angle = |j: usize| 2.0 * PI * j as f64 / m as f64;
    ProjectionMatrix::new(vec![
        (0..m).map(|j| angle(j).cos()).collect(),
        (0..m).map(|j| angle(j).sin()).collect(),
    ])
}

/// The octahedral view of the 4-cube: axes to `(0,1)`, `(1,1)/√2`, `(1,0)`, `(1,-1)/√2`.
pub fn projection_octahedral4() -> ProjectionMatrix {
    ProjectionMatrix {
        rows: vec![
            vec![0.0, FRAC_1_SQRT_2, 1.0, FRAC_1_SQRT_2],
            vec![1.0, FRAC_1_SQRT_2, 0.0, -FRAC_1_SQRT_2],
        ],
    }
}

/// Roots of unity in the plane plus a constant `1/√m` height.
pub fn projection_roots3d(m: usize) -> Result<ProjectionMatrix> {
    let mut rows = projection_roots2d(m)?.rows;
    rows.push(vec![1.0 / (m as f64).sqrt(); m]);
    ProjectionMatrix::new(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxesVariant {
    /// Keep the first three coordinates.
    Squash,
    /// First two coordinates, then `x_3 + x_m`.
    Favorite,
}

pub fn projection_axes3d(m: usize, variant: AxesVariant) -> Result<ProjectionMatrix> {
    if m < 3 {
        return Err(Error::Invalid(format!("axes3d needs m >= 3, got {m}")));
    }
    let e = |k: usize| {
        (0..m)
            .map(|j| if j == k { 1.0 } else { 0.0 })
            .collect::<Vec<f64>>()
    };
    let mut third = e(2);
    if variant == AxesVariant::Favorite {
        third[m - 1] += 1.0;
    }
    ProjectionMatrix::new(vec![e(0), e(1), third])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionKind {
    Roots2d,
    Octahedral,
    Roots3d,
    Axes3dSquash,
    Axes3dFavorite,
}

impl ProjectionKind {
    pub const ALL: [ProjectionKind; 5] = [
        ProjectionKind::Roots2d,
        ProjectionKind::Octahedral,
        ProjectionKind::Roots3d,
        ProjectionKind::Axes3dSquash,
        ProjectionKind::Axes3dFavorite,
    ];

    pub fn matrix(self, m: usize) -> Result<ProjectionMatrix> {
        match self {
            ProjectionKind::Roots2d => projection_roots2d(m),
            ProjectionKind::Octahedral if m == 4 => Ok(projection_octahedral4()),
            ProjectionKind::Octahedral => Err(Error::Invalid(format!(
                "octahedral projection is defined for m = 4 only, got {m}"
            ))),
            ProjectionKind::Roots3d => projection_roots3d(m),
            ProjectionKind::Axes3dSquash => projection_axes3d(m, AxesVariant::Squash),
            ProjectionKind::Axes3dFavorite => projection_axes3d(m, AxesVariant::Favorite),
        }
    }

    pub fn output_rows(self) -> usize {
        match self {
            ProjectionKind::Roots2d | ProjectionKind::Octahedral => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ProjectionKind::Roots2d => "roots2d",
            ProjectionKind::Octahedral => "octahedral",
            ProjectionKind::Roots3d => "roots3d",
            ProjectionKind::Axes3dSquash => "axes3d-squash",
            ProjectionKind::Axes3dFavorite => "axes3d-favorite",
        }
    }
}

impl fmt::Display for ProjectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProjectionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ProjectionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown projection {s:?}")))
    }
}
