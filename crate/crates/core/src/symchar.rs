//! Ordinary characters of symmetric groups.
//!
//! Characters are computed with the Murnaghan–Nakayama rule on beta-sets and
//! class functions are decomposed with the standard inner product. Everything
//! is exact; a non-integral multiplicity is reported, never rounded.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::partition::{partitions_of, Partition};

/// A class function on `S_n`, keyed by cycle type. Missing cycle types are 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ClassFunctionRepr", into = "ClassFunctionRepr")]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: BTreeMap::new(),
        }
    }

    /// Builds a class function from explicit values; every key must be a
    /// partition of `n`.
    pub fn new(n: usize, values: BTreeMap<Partition, Rational>) -> Result<Self> {
        if let Some(bad) = values.keys().find(|k| k.size() != n) {
            return Err(Error::InvalidCycleType(bad.to_string()));
        }
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = partitions_of(n)
            .into_iter()
            .map(|p| {
                let v = f(&p);
                (p, v)
            })
            .filter(|(_, v)| !v.is_zero())
            .collect();
        ClassFunction { n, values }
    }

    pub fn trivial(n: usize) -> Self {
        ClassFunction::from_fn(n, |_| exact::int(1))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> Rational {
        self.values.get(cycle_type).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value at the identity, i.e. the dimension for a genuine character.
    pub fn at_identity(&self) -> Rational {
        self.value(&Partition::new(vec![1; self.n]).expect("all-ones is a partition"))
    }

    /// Nonzero entries in cycle-type order.
    pub fn nonzero_values(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut values = self.values.clone();
        for (k, v) in &other.values {
            let slot = values.entry(k.clone()).or_insert_with(Rational::zero);
            *slot += v;
        }
        ClassFunction::new(self.n, values)
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        ClassFunction { n: self.n, values }
    }

    /// `⟨f, g⟩ = (1/n!) Σ_λ |C_λ| f(λ) g(λ)` (characters here are real).
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Rational> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut acc = Rational::zero();
        for (lambda, v) in &self.values {
            let w = other.value(lambda);
            if !w.is_zero() {
                acc += v * w * Rational::from_integer(BigInt::from(class_size(lambda)));
            }
        }
        Ok(acc / Rational::from_integer(exact::factorial(self.n)))
    }
}

#[derive(Serialize, Deserialize)]
struct ClassFunctionRepr {
    n: usize,
    values: Vec<ValueRepr>,
}

#[derive(Serialize, Deserialize)]
struct ValueRepr {
    cycle_type: Partition,
    #[serde(with = "exact::serde_rational")]
    value: Rational,
}

impl From<ClassFunction> for ClassFunctionRepr {
    fn from(f: ClassFunction) -> Self {
        ClassFunctionRepr {
            n: f.n,
            values: f
                .values
                .into_iter()
                .map(|(cycle_type, value)| ValueRepr { cycle_type, value })
                .collect(),
        }
    }
}

impl TryFrom<ClassFunctionRepr> for ClassFunction {
    type Error = Error;

    fn try_from(r: ClassFunctionRepr) -> Result<Self> {
        let mut values = BTreeMap::new();
        for v in r.values {
            values.insert(v.cycle_type, v.value);
        }
        ClassFunction::new(r.n, values)
    }
}

/// `z_λ = ∏_j j^{a_j} a_j!`.
pub fn centralizer_order(lambda: &Partition) -> u64 {
    lambda
        .part_counts()
        .into_iter()
        .map(|(j, a)| (j as u64).pow(a as u32) * (1..=a as u64).product::<u64>())
        .product()
}

/// Size of the conjugacy class of cycle type `λ` in `S_|λ|`.
pub fn class_size(lambda: &Partition) -> u64 {
    let n_fact = exact::factorial(lambda.size());
    (n_fact / BigInt::from(centralizer_order(lambda)))
        .to_u64()
        .expect("class size overflows u64")
}

/// `χ^μ(λ)` by the Murnaghan–Nakayama rule.
pub fn specht_character(mu: &Partition, lambda: &Partition) -> Result<i64> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    let len = mu.len();
    let beta: Vec<usize> = mu.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    Ok(mn(beta, lambda.parts()))
}

// `beta` is strictly decreasing; each step strips a rim hook of length
// `cycles[0]` by sliding one bead down.
fn mn(beta: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn(next, rest);
    }
    total
}

/// `χ^μ` as a class function.
pub fn specht_class_function(mu: &Partition) -> ClassFunction {
    ClassFunction::from_fn(mu.size(), |lambda| {
        exact::int(specht_character(mu, lambda).expect("sizes agree"))
    })
}

/// Multiplicities `m(μ)` with `f = Σ m(μ) χ^μ`.
pub fn decompose_class_function(f: &ClassFunction, caps: &Caps) -> Result<BTreeMap<Partition, i64>> {
    caps::check("symmetric group degree", f.degree(), caps.oracle)?;
    let mut out = BTreeMap::new();
    for mu in partitions_of(f.degree()) {
        let m = f.inner_product(&specht_class_function(&mu))?;
        let Some(m_int) = exact::to_i64(&m) else {
            return Err(Error::NotVirtualCharacter {
                partition: mu.to_string(),
                value: exact::format(&m),
            });
        };
        if m_int != 0 {
            out.insert(mu, m_int);
        }
    }
    Ok(out)
}

/// `Σ m(μ) χ^μ`.
pub fn recompose(n: usize, multiplicities: &BTreeMap<Partition, i64>) -> Result<ClassFunction> {
    let mut acc = ClassFunction::zero(n);
    for (mu, &m) in multiplicities {
        if mu.size() != n {
            return Err(Error::SizeMismatch {
                left: mu.size(),
                right: n,
            });
        }
        acc = acc.add(&specht_class_function(mu).scale(&exact::int(m)))?;
    }
    Ok(acc)
}

/// A permutation of `{0, …, n-1}` with cycle type `λ`, cycles on consecutive points.
pub fn permutation_of_type(lambda: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(lambda.size());
    let mut start = 0;
    for &len in lambda.parts() {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

/// Permutation character of `S_n` on `g`-element subsets, by direct enumeration.
pub fn induced_trivial_character(g: usize, n: usize, caps: &Caps) -> Result<ClassFunction> {
    caps::check("symmetric group degree", n, caps.oracle)?;
    if g > n {
        return Err(Error::InvalidParams(format!("g = {g} exceeds n = {n}")));
    }
    let subsets: Vec<u64> = (0u64..(1u64 << n)).filter(|s| s.count_ones() as usize == g).collect();
    Ok(ClassFunction::from_fn(n, |lambda| {
        let perm = permutation_of_type(lambda);
        let fixed = subsets
            .iter()
            .filter(|&&s| {
                let image = (0..n)
                    .filter(|&i| s >> i & 1 == 1)
                    .fold(0u64, |acc, i| acc | 1 << perm[i]);
                image == s
            })
            .count();
        exact::int(fixed as i64)
    }))
}
