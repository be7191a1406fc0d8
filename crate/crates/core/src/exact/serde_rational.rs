//! `["num", "den"]` string-pair encoding for rationals.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    [r.numer().to_string(), r.denom().to_string()].serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let [num, den] = <[String; 2]>::deserialize(d)?;
    let num: BigInt = num.parse().map_err(D::Error::custom)?;
    let den: BigInt = den.parse().map_err(D::Error::custom)?;
    if den.is_zero() {
        return Err(D::Error::custom("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

#[derive(Serialize, Deserialize)]
struct Wire(#[serde(with = "self")] Rational);

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| Wire(r.clone())))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Ok(Vec::<Wire>::deserialize(d)?
            .into_iter()
            .map(|w| w.0)
            .collect())
    }
}
