//! Exact rational helpers shared by the character and linear-algebra code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `"p/q"` in lowest terms, or just `"p"` for integers.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

pub fn parse(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient with the convention `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// Newton forward-difference interpolant through `values[i]` at `base + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPoly {
    base: i64,
    diffs: Vec<Rational>,
}

impl NewtonPoly {
    pub fn interpolate(base: i64, values: &[Rational]) -> Self {
        let mut row = values.to_vec();
        let mut diffs = Vec::with_capacity(values.len());
        while let Some(first) = row.first() {
            diffs.push(first.clone());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        while diffs.last().is_some_and(|d| d.is_zero()) {
            diffs.pop();
        }
        NewtonPoly { base, diffs }
    }

    /// Degree, `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.diffs.len() as i64 - 1
    }

    pub fn eval(&self, n: i64) -> Rational {
        let x = int(n - self.base);
        let mut acc = Rational::zero();
        let mut basis = Rational::one();
        for (k, d) in self.diffs.iter().enumerate() {
            acc += d * &basis;
            basis = basis * (&x - int(k as i64)) / int(k as i64 + 1);
        }
        acc
    }
}

pub mod serde_rational {
    //! Serializes rationals as `"p/q"` strings.
    use super::Rational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        super::parse(&raw).ok_or_else(|| D::Error::custom(format!("bad rational {raw:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_lowest_terms() {
        assert_eq!(format(&frac(6, 4)), "3/2");
        assert_eq!(format(&frac(4, 2)), "2");
        assert_eq!(format(&frac(-1, 3)), "-1/3");
        assert_eq!(parse("-6/4"), Some(frac(-3, 2)));
        assert_eq!(parse("x"), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 5), 0);
        assert_eq!(binom(4, -1), 0);
        assert_eq!(binom(0, 0), 1);
        assert_eq!(binom(40, 20), 137846528820);
    }

    #[test]
    fn newton_interpolation() {
        let values: Vec<Rational> = (3..9).map(|n| int(n * (n - 3) / 2)).collect();
        let p = NewtonPoly::interpolate(3, &values);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(2), int(-1));
        assert_eq!(p.eval(20), int(170));
        assert_eq!(NewtonPoly::interpolate(0, &[int(0), int(0)]).degree(), -1);
    }
}
