//! Character polynomials: polynomials in the cycle-count functions `X_j`.
//!
//! The canonical form is an expanded sum of monomials with exact rational
//! coefficients. `X_j(σ)` is the number of `j`-cycles of `σ` and `X_j` has
//! weight `j` for [`CharPoly::degree`]. The binomial basis
//! `∏_j C(X_j, e_j)` is a presentation layer on top of that form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::partition::{partitions_of, Characteristic, Partition};
use crate::symchar::ClassFunction;

/// Exponent vector `(e_1, …, e_m)`, no trailing zeros.
pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<TermRepr>", into = "Vec<TermRepr>")]
pub struct CharPoly {
    terms: BTreeMap<Exponents, Rational>,
}

/// Weighted degree; the zero polynomial has degree `-∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl CharPoly {
    pub fn zero() -> Self {
        CharPoly::default()
    }

    pub fn one() -> Self {
        CharPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        CharPoly { terms }
    }

    pub fn int(c: i64) -> Self {
        CharPoly::constant(exact::int(c))
    }

    /// `X_j` for `j >= 1`.
    pub fn var(j: usize) -> Self {
        assert!(j >= 1, "variables are indexed from 1");
        let mut e = vec![0; j];
        e[j - 1] = 1;
        CharPoly::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Exponents, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(trim(exponents), coeff);
        }
        CharPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(&trim(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rational) -> CharPoly {
        if c.is_zero() {
            return CharPoly::zero();
        }
        CharPoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// `C(P, a) = P (P-1) ⋯ (P-a+1) / a!`.
    pub fn binomial(p: &CharPoly, a: usize) -> CharPoly {
        let mut acc = CharPoly::one();
        for m in 0..a {
            acc = &acc * &(p - &CharPoly::int(m as i64));
        }
        acc.scale(&Rational::new(BigInt::one(), exact::factorial(a)))
    }

    /// `P(a_1(λ), a_2(λ), …)` with `λ` read as a cycle type.
    pub fn evaluate(&self, lambda: &Partition) -> Rational {
        let counts = lambda.part_counts();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut value = c.clone();
            for (j, &power) in e.iter().enumerate() {
                if power == 0 {
                    continue;
                }
                let a = counts.get(&(j + 1)).copied().unwrap_or(0);
                value *= Rational::from_integer(BigInt::from(a).pow(power));
                if value.is_zero() {
                    break;
                }
            }
            acc += value;
        }
        acc
    }

    /// Evaluates on every cycle type of `S_n`.
    pub fn to_class_function(&self, n: usize) -> ClassFunction {
        ClassFunction::from_fn(n, |lambda| self.evaluate(lambda))
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|e| weight(e))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Highest `j` with `X_j` present.
    pub fn max_variable(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Coefficients in the basis `∏_j C(X_j, e_j)`.
    pub fn to_binomial_basis(&self) -> BTreeMap<Exponents, Rational> {
        let mut out = CharPoly::zero();
        for (e, c) in &self.terms {
            // x^p = Σ_k S(p, k) k! C(x, k), one variable at a time
            let mut partial: BTreeMap<Exponents, Rational> = BTreeMap::from([(Vec::new(), c.clone())]);
            for (j, &power) in e.iter().enumerate() {
                let expansion = power_in_binomials(power);
                let mut next = BTreeMap::new();
                for (key, v) in &partial {
                    for (k, w) in &expansion {
                        let mut key = key.clone();
                        key.resize(j + 1, 0);
                        key[j] = *k;
                        let slot = next.entry(key).or_insert_with(Rational::zero);
                        *slot += v * Rational::from_integer(w.clone());
                    }
                }
                partial = next;
            }
            for (key, v) in partial {
                out.insert_add(key, v);
            }
        }
        out.terms
    }

    /// Inverse of [`CharPoly::to_binomial_basis`].
    pub fn from_binomial_basis(coeffs: &BTreeMap<Exponents, Rational>) -> CharPoly {
        let mut acc = CharPoly::zero();
        for (e, c) in coeffs {
            let mut term = CharPoly::constant(c.clone());
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &CharPoly::binomial(&CharPoly::var(j + 1), k as usize);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Renders the binomial-basis form, heaviest terms first and, within a
    /// weight, by the cycle shape in lexicographically decreasing order.
    pub fn render_binomial(&self) -> String {
        let mut entries: Vec<(Exponents, Rational)> = self.to_binomial_basis().into_iter().collect();
        entries.sort_by(|(a, _), (b, _)| compare_terms(a, b));
        render_terms(entries.iter().map(|(e, c)| (render_binomial_factor(e), c)))
    }

    /// Renders the expanded monomial form.
    pub fn render_monomial(&self) -> String {
        let mut entries: Vec<(&Exponents, &Rational)> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| compare_terms(a, b));
        render_terms(entries.into_iter().map(|(e, c)| (render_monomial_factor(e), c)))
    }

    /// Replaces every `X_j^e` by the falling factorial `X_j (X_j - 1) ⋯ (X_j - e + 1)`.
    pub fn umbral_down(&self) -> CharPoly {
        let mut acc = CharPoly::zero();
        for (e, c) in &self.terms {
            let mut term = CharPoly::constant(c.clone());
            for (j, &power) in e.iter().enumerate() {
                term = &term * &falling(&CharPoly::var(j + 1), power as usize);
            }
            acc = &acc + &term;
        }
        acc
    }
}

fn weight(e: &[u32]) -> usize {
    e.iter().enumerate().map(|(j, &p)| (j + 1) * p as usize).sum()
}

/// Cycle shape `1^{e_1} 2^{e_2} ⋯` as a partition.
fn shape(e: &[u32]) -> Partition {
    let mut parts = Vec::new();
    for (j, &p) in e.iter().enumerate().rev() {
        parts.extend(std::iter::repeat_n(j + 1, p as usize));
    }
    Partition::from_unsorted(parts)
}

fn compare_terms(a: &[u32], b: &[u32]) -> Ordering {
    weight(b).cmp(&weight(a)).then_with(|| shape(b).cmp(&shape(a)))
}

fn falling(x: &CharPoly, e: usize) -> CharPoly {
    (0..e).fold(CharPoly::one(), |acc, m| &acc * &(x - &CharPoly::int(m as i64)))
}

// x^p = Σ_k S(p,k) k! C(x,k)
fn power_in_binomials(p: u32) -> Vec<(u32, BigInt)> {
    let p = p as usize;
    let mut stirling = vec![vec![BigInt::zero(); p + 1]; p + 1];
    stirling[0][0] = BigInt::one();
    for n in 1..=p {
        for k in 1..=n {
            stirling[n][k] = &stirling[n - 1][k - 1] + BigInt::from(k) * &stirling[n - 1][k];
        }
    }
    (0..=p)
        .filter(|&k| !stirling[p][k].is_zero())
        .map(|k| (k as u32, &stirling[p][k] * exact::factorial(k)))
        .collect()
}

fn render_binomial_factor(e: &[u32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &k)| k > 0)
        .map(|(j, &k)| {
            if k == 1 {
                format!("X{}", j + 1)
            } else {
                format!("binom(X{},{})", j + 1, k)
            }
        })
        .collect();
    factors.join("*")
}

fn render_monomial_factor(e: &[u32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &k)| k > 0)
        .map(|(j, &k)| {
            if k == 1 {
                format!("X{}", j + 1)
            } else {
                format!("X{}^{}", j + 1, k)
            }
        })
        .collect();
    factors.join("*")
}

fn render_terms<'a>(terms: impl Iterator<Item = (String, &'a Rational)>) -> String {
    let mut out = String::new();
    for (i, (factor, c)) in terms.enumerate() {
        let negative = c.is_negative();
        let magnitude = c.abs();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if factor.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&factor);
        } else {
            out.push_str(&format!("{magnitude}*{factor}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_monomial())
    }
}

impl Add for &CharPoly {
    type Output = CharPoly;

    fn add(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CharPoly {
    type Output = CharPoly;

    fn sub(self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &CharPoly {
    type Output = CharPoly;

    fn neg(self) -> CharPoly {
        self.scale(&-Rational::one())
    }
}

fn add_exponents(e1: &[u32], e2: &[u32]) -> Exponents {
    let len = e1.len().max(e2.len());
    (0..len)
        .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
        .collect()
}

impl Mul for &CharPoly {
    type Output = CharPoly;

    fn mul(self, rhs: &CharPoly) -> CharPoly {
        let mut out = CharPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_add(add_exponents(e1, e2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CharPoly {
            type Output = CharPoly;
            fn $m(self, rhs: CharPoly) -> CharPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponents: Exponents,
    #[serde(with = "exact::serde_rational")]
    coeff: Rational,
}

impl From<CharPoly> for Vec<TermRepr> {
    fn from(p: CharPoly) -> Self {
        p.terms
            .into_iter()
            .map(|(exponents, coeff)| TermRepr { exponents, coeff })
            .collect()
    }
}

impl TryFrom<Vec<TermRepr>> for CharPoly {
    type Error = Error;

    fn try_from(terms: Vec<TermRepr>) -> Result<Self> {
        let mut p = CharPoly::zero();
        for t in terms {
            p.insert_add(t.exponents, t.coeff);
        }
        Ok(p)
    }
}

/// Coefficient field context for character polynomials.
///
/// In characteristic `p > 0` the variables `X_j` with `p | j` do not exist.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CharContext {
    pub characteristic: Characteristic,
}

impl CharContext {
    pub fn new(characteristic: Characteristic) -> Self {
        CharContext { characteristic }
    }

    pub fn variable(&self, j: usize) -> Result<CharPoly> {
        if j == 0 || self.characteristic.divides(j) {
            return Err(Error::DisallowedVariable {
                index: j,
                characteristic: self.characteristic.get(),
            });
        }
        Ok(CharPoly::var(j))
    }

    /// The polynomial `Σ_r Σ_{λ ⊢ r} χ_{W_r}(λ) C(X_1 - h - 1, a_1(λ)) ∏_{j≥2} C(X_j, a_j(λ))`.
    ///
    /// `w[r]` must be a class function on `S_r`. In positive characteristic,
    /// cycle types with a part divisible by `p` contribute nothing.
    pub fn def_poly(&self, w: &[ClassFunction], h: i64) -> Result<CharPoly> {
        let shifted_x1 = &CharPoly::var(1) - &CharPoly::int(h + 1);
        let mut acc = CharPoly::zero();
        for (r, wr) in w.iter().enumerate() {
            if wr.degree() != r {
                return Err(Error::SizeMismatch {
                    left: wr.degree(),
                    right: r,
                });
            }
            for lambda in partitions_of(r) {
                if lambda.parts().iter().any(|&j| self.characteristic.divides(j)) {
                    continue;
                }
                let chi = wr.value(&lambda);
                if chi.is_zero() {
                    continue;
                }
                let mut term = CharPoly::constant(chi);
                for (j, a) in lambda.part_counts() {
                    let base = if j == 1 { shifted_x1.clone() } else { self.variable(j)? };
                    term = &term * &CharPoly::binomial(&base, a);
                }
                acc = &acc + &term;
            }
        }
        Ok(acc)
    }
}

/// [`CharContext::def_poly`] in characteristic 0.
pub fn def_poly(w: &[ClassFunction], h: i64) -> Result<CharPoly> {
    CharContext::default().def_poly(w, h)
}

fn check_series(order: usize, caps: &Caps) -> Result<()> {
    if order > caps.series {
        return Err(Error::SeriesCapExceeded {
            value: order,
            cap: caps.series,
        });
    }
    Ok(())
}

/// Coefficients of `t^0..t^J` in `∏_{i ≤ J} Σ_a C(X_i + shift + a, a) t^{ai}`.
fn product_series(order: usize, shift: i64) -> Vec<CharPoly> {
    let mut series = vec![CharPoly::zero(); order + 1];
    series[0] = CharPoly::one();
    for i in 1..=order {
        let x = CharPoly::var(i);
        let factor: Vec<(usize, CharPoly)> = (0..=order / i)
            .map(|a| {
                let top = &x + &CharPoly::int(shift + a as i64);
                (a * i, CharPoly::binomial(&top, a))
            })
            .collect();
        let mut next = vec![CharPoly::zero(); order + 1];
        for (deg, coeff) in series.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (step, f) in &factor {
                if deg + step > order {
                    break;
                }
                next[deg + step] = &next[deg + step] + &(coeff * f);
            }
        }
        series = next;
    }
    series
}

/// `S^(0..=J)` from `∏_i (1 - t^i)^{-X_i}`.
pub fn sym_series(order: usize, caps: &Caps) -> Result<Vec<CharPoly>> {
    check_series(order, caps)?;
    Ok(product_series(order, -1))
}

/// `C^(0..=J)` from `∏_i (1 - t^i)^{1 - X_i}`.
pub fn coinv_series(order: usize, caps: &Caps) -> Result<Vec<CharPoly>> {
    check_series(order, caps)?;
    Ok(product_series(order, -2))
}

/// Free-function form of [`CharPoly::umbral_down`].
pub fn umbral_down(p: &CharPoly) -> CharPoly {
    p.umbral_down()
}
