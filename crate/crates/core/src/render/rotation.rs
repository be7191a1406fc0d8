use std::f64::consts::PI;

use crate::{Error, Result};

pub type FloatMat = Vec<Vec<f64>>;

pub fn identity(m: usize) -> FloatMat {
    (0..m)
        .map(|i| (0..m).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

pub fn mat_mul(a: &FloatMat, b: &FloatMat) -> FloatMat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Rotation by `angle` in the coordinate plane `(a, b)`, 1-based `a < b`:
/// `(a,a) = (b,b) = cos`, `(a,b) = sin`, `(b,a) = -sin`.
pub fn plane_rotation(m: usize, a: usize, b: usize, angle: f64) -> Result<FloatMat> {
    if a == 0 || a >= b || b > m {
        return Err(Error::Invalid(format!(
            "rotation plane ({a}, {b}) needs 1 <= a < b <= {m}"
        )));
    }
    let (s, c) = angle.sin_cos();
    let mut r = identity(m);
    r[a - 1][a - 1] = c;
    r[b - 1][b - 1] = c;
    r[a - 1][b - 1] = s;
    r[b - 1][a - 1] = -s;
    Ok(r)
}

/// Coordinate planes in lexicographic order `(1,2), (1,3), ..., (m-1,m)`.
pub fn rotation_pairs(m: usize) -> Vec<(usize, usize)> {
    (1..m)
        .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
        .collect()
}

/// The time-`t` rotation of the sweep: `[0, 1]` is split into `C = m(m-1)/2`
/// equal intervals, and during interval `j` the `j`-th plane turns through a
/// full revolution while the others stay fixed.
pub fn rotation_schedule(m: usize, t: f64) -> Result<FloatMat> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::ParameterOutOfRange {
            name: "t",
            value: t.to_string(),
            lo: "0".into(),
            hi: "1".into(),
        });
    }
    let pairs = rotation_pairs(m);
    let c = pairs.len();
    if c == 0 {
        return Ok(identity(m));
    }
    let scaled = c as f64 * t;
    let j = ((scaled.floor() as usize) + 1).min(c);
    let (a, b) = pairs[j - 1];
    plane_rotation(m, a, b, 2.0 * PI * (scaled - j as f64 + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_diff(a: &FloatMat, b: &FloatMat) -> f64 {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }

    fn transpose(a: &FloatMat) -> FloatMat {
        (0..a[0].len())
            .map(|j| a.iter().map(|r| r[j]).collect())
            .collect()
    }

    #[test]
    fn plane_rotation_examples() {
        assert_eq!(plane_rotation(3, 1, 3, 0.0).unwrap(), identity(3));
        let half = plane_rotation(2, 1, 2, PI).unwrap();
        assert!(max_diff(&half, &vec![vec![-1.0, 0.0], vec![0.0, -1.0]]) < 1e-15);
        let quarter = plane_rotation(3, 1, 2, PI / 2.0).unwrap();
        let first_col: Vec<f64> = quarter.iter().map(|r| r[0]).collect();
        assert!(first_col
            .iter()
            .zip([0.0, -1.0, 0.0])
            .all(|(x, y)| (x - y).abs() < 1e-15));
        assert!(plane_rotation(3, 2, 2, 1.0).is_err());
        assert!(plane_rotation(3, 2, 1, 1.0).is_err());
        assert!(plane_rotation(3, 1, 4, 1.0).is_err());
    }

    #[test]
    fn schedule_endpoints() {
        for m in 2..=6 {
            assert!(max_diff(&rotation_schedule(m, 0.0).unwrap(), &identity(m)) < 1e-12);
            assert!(max_diff(&rotation_schedule(m, 1.0).unwrap(), &identity(m)) < 1e-12);
        }
        assert!(rotation_schedule(3, 1.5).is_err());
        assert!(rotation_schedule(3, -0.1).is_err());
    }

    #[test]
    fn schedule_mid_interval() {
        // C = 6 for m = 4; t = 1/12 is halfway through the (1,2) turn.
        let r = rotation_schedule(4, 1.0 / 12.0).unwrap();
        let expected = plane_rotation(4, 1, 2, PI).unwrap();
        assert!(max_diff(&r, &expected) < 1e-12);
        // t = 1/6 starts the second plane at angle 0.
        let r = rotation_schedule(4, 1.0 / 6.0).unwrap();
        assert!(max_diff(&r, &identity(4)) < 1e-12);
        let r = rotation_schedule(4, 0.25).unwrap();
        assert!(max_diff(&r, &plane_rotation(4, 1, 3, PI).unwrap()) < 1e-12);
    }

    #[test]
    fn schedule_is_orthogonal() {
        let mut t = 0.123_456_f64;
        for k in 0..100 {
            t = (t * 997.0 + 0.271_828).fract();
            let m = 2 + k % 6;
            let r = rotation_schedule(m, t).unwrap();
            assert!(max_diff(&mat_mul(&transpose(&r), &r), &identity(m)) < 1e-12);
        }
    }

    #[test]
    fn pair_order() {
        assert_eq!(
            rotation_pairs(4),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
        assert!(rotation_pairs(1).is_empty());
    }
}
