//! Exact membership grades and the `k` parameter.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `"p/q"`, an integer, or a plain decimal such as `"0.875"`, exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::BadRational(text.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if frac.len() > 17 {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let numer: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    let denom = 10i64.pow(frac.len() as u32);
    let r = Ratio::new(numer, denom);
    Ok(if negative { -r } else { r })
}

fn write_ratio(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// A membership grade: an exact rational in `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(Rational);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(Error::GradeOutOfRange(format!(
                "{}/{}",
                value.numer(),
                value.denom()
            )));
        }
        Ok(Grade(value))
    }

    pub fn ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::BadRational(format!("{p}/{q}")));
        }
        Self::new(Ratio::new(p, q))
    }

    #[inline]
    pub fn value(self) -> Rational {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Grade::new(parse_rational(s)?)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.0)
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.0)
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `k ∈ [0, 1)` together with its threshold `(1 - k) / 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KParam {
    k: Rational,
    half: Rational,
}

impl KParam {
    pub fn new(k: Rational) -> Result<Self> {
        if k < Rational::zero() || k >= Rational::one() {
            return Err(Error::KOutOfRange(format!("{}/{}", k.numer(), k.denom())));
        }
        Ok(KParam {
            k,
            half: (Rational::one() - k) / 2,
        })
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero()).expect("0 is admissible")
    }

    pub fn ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::BadRational(format!("{p}/{q}")));
        }
        Self::new(Ratio::new(p, q))
    }

    #[inline]
    pub fn k(self) -> Rational {
        self.k
    }

    /// `(1 - k) / 2`, always in `(0, 1/2]`.
    #[inline]
    pub fn half(self) -> Rational {
        self.half
    }

    pub fn half_grade(self) -> Grade {
        Grade(self.half)
    }
}

impl FromStr for KParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KParam::new(parse_rational(s)?)
    }
}

impl fmt::Display for KParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ratio(f, &self.k)
    }
}

impl fmt::Debug for KParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k=")?;
        write_ratio(f, &self.k)
    }
}

impl Serialize for KParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_rational("0.8").unwrap(), Ratio::new(4, 5));
        assert_eq!(parse_rational("0.875").unwrap(), Ratio::new(7, 8));
        assert_eq!(parse_rational("1").unwrap(), Ratio::new(1, 1));
        assert_eq!(parse_rational(".5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_rational("3/6").unwrap(), Ratio::new(1, 2));
        for bad in ["", ".", "1/0", "a", "0.x", "1.2.3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn grade_range() {
        assert!("3/2".parse::<Grade>().is_err());
        assert!("-0.1".parse::<Grade>().is_err());
        assert_eq!("0.5".parse::<Grade>().unwrap().to_string(), "1/2");
        assert_eq!(Grade::ONE.to_string(), "1/1");
        assert_eq!(Grade::ZERO.to_string(), "0/1");
    }

    #[test]
    fn k_range_and_threshold() {
        assert!("1".parse::<KParam>().is_err());
        assert!("-1/2".parse::<KParam>().is_err());
        let k = "1/2".parse::<KParam>().unwrap();
        assert_eq!(k.half(), Ratio::new(1, 4));
        assert_eq!(KParam::zero().half(), Ratio::new(1, 2));
        let k = "9/10".parse::<KParam>().unwrap();
        assert_eq!(k.half(), Ratio::new(1, 20));
    }

    proptest! {
        #[test]
        fn display_reparses(p in 0i64..1000, q in 1i64..1000) {
            prop_assume!(p <= q);
            let g = Grade::ratio(p, q).unwrap();
            prop_assert_eq!(g.to_string().parse::<Grade>().unwrap(), g);
        }
    }
}
