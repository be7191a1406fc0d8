//! Arbitrary-precision rational scalars, vectors and matrices.
//!
//! Rationals are `BigRational`, which keeps every value reduced with a
//! positive denominator, so equality is structural. On the wire a rational is
//! the pair of decimal strings `["num", "den"]`.

mod lp;
pub mod serde_rational;

use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use lp::convex_combination_exists;

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A point or direction with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatVec(#[serde(with = "serde_rational::vec")] Vec<Rational>);

impl RatVec {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVec(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec(vec![Rational::zero(); dim])
    }

    pub fn from_ints(values: &[i64]) -> Self {
        RatVec(values.iter().map(|&v| int(v)).collect())
    }

    /// Standard basis vector `e_j`, 1-based.
    pub fn basis(dim: usize, j: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[j - 1] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn dot(&self, other: &RatVec) -> Result<Rational> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn scale(&self, s: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|x| x * s).collect())
    }

    pub fn squared_distance(&self, other: &RatVec) -> Result<Rational> {
        let d = self - other;
        d.dot(&d)
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: Rational) -> RatVec {
        let mut e = self.0.clone();
        e.push(last);
        RatVec(e)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(to_f64).collect()
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(v: Vec<Rational>) -> Self {
        RatVec(v)
    }
}

impl<'a> Add<&'a RatVec> for &'a RatVec {
    type Output = RatVec;
    fn add(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a RatVec> for &'a RatVec {
    type Output = RatVec;
    fn sub(self, rhs: &RatVec) -> RatVec {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense rectangular matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RatMat {
    rows: Vec<RatVec>,
    ncols: usize,
}

impl RatMat {
    pub fn from_rows(rows: Vec<RatVec>) -> Result<Self> {
        let ncols = rows.first().map_or(0, RatVec::dim);
        for r in &rows {
            check_dim(ncols, r.dim())?;
        }
        Ok(RatMat { rows, ncols })
    }

    pub fn identity(n: usize) -> Self {
        RatMat {
            rows: (1..=n).map(|j| RatVec::basis(n, j)).collect(),
            ncols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[RatVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> RatMat {
        let rows = (0..self.ncols)
            .map(|j| RatVec::new(self.rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        RatMat {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn apply(&self, v: &RatVec) -> Result<RatVec> {
        mat_apply(self, v)
    }

    pub fn mul(&self, other: &RatMat) -> Result<RatMat> {
        check_dim(self.ncols, other.nrows())?;
        let cols = other.transpose();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                cols.rows
                    .iter()
                    .map(|c| r.dot(c))
                    .collect::<Result<Vec<_>>>()
                    .map(RatVec::new)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RatMat {
            rows,
            ncols: other.ncols,
        })
    }

    pub fn pow(&self, mut exp: usize) -> Result<RatMat> {
        if self.nrows() != self.ncols {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols,
            });
        }
        let mut base = self.clone();
        let mut acc = RatMat::identity(self.ncols);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        *self == RatMat::identity(self.ncols) && self.nrows() == self.ncols
    }
}

impl Mul<&RatVec> for &RatMat {
    type Output = RatVec;
    fn mul(self, v: &RatVec) -> RatVec {
        mat_apply(self, v).expect("matrix-vector dimension mismatch")
    }
}

/// Exact matrix-vector product.
pub fn mat_apply(m: &RatMat, v: &RatVec) -> Result<RatVec> {
    check_dim(m.ncols(), v.dim())?;
    m.rows
        .iter()
        .map(|r| r.dot(v))
        .collect::<Result<Vec<_>>>()
        .map(RatVec::new)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators; the
/// integer determinant is divided by the product of those scales at the end.
pub fn determinant(m: &RatMat) -> Result<Rational> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::NotSquare {
            rows: n,
            cols: m.ncols(),
        });
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    Ok(Rational::new(bareiss(&mut a), scale))
}

/// Integer determinant; destroys `a`.
pub(crate) fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Sign (+1, 0, -1) of a rational.
pub fn signum(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
