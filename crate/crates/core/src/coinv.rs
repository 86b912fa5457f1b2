//! Diagonal invariants and coinvariant algebras of `S_n`.
//!
//! Variables are `x_{b,i}` for a label `b` in `0..|B|` and a point `i` in
//! `0..n`; `S_n` permutes the points. A multidegree `J` records the degree in
//! each label.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::linalg::{Echelon, SparseRow};
use crate::partition::{partitions_of, partitions_with_at_most, syt_major_counts};
use crate::symchar::{specht_class_function, ClassFunction};

/// Degree per variable label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct MultiDegree(Vec<usize>);

impl MultiDegree {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidParams("a multidegree needs at least one label".into()));
        }
        Ok(MultiDegree(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn labels(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Every multidegree with `labels` labels and total degree `<= bound`.
    pub fn all_up_to(labels: usize, bound: usize) -> Vec<MultiDegree> {
        let mut out = Vec::new();
        let mut current = vec![0; labels];
        fn rec(pos: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<MultiDegree>) {
            if pos == current.len() {
                out.push(MultiDegree(current.clone()));
                return;
            }
            for d in 0..=left {
                current[pos] = d;
                rec(pos + 1, left - d, current, out);
            }
            current[pos] = 0;
        }
        if labels > 0 {
            rec(0, bound, &mut current, &mut out);
        }
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for MultiDegree {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        MultiDegree::new(v)
    }
}

impl From<MultiDegree> for Vec<usize> {
    fn from(j: MultiDegree) -> Self {
        j.0
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exponent vector of length `|B| * n`, index `b * n + i`.
type Monomial = Vec<u8>;

/// Ways to write `total` as an ordered sum of `slots` non-negative parts.
fn compositions(total: usize, slots: usize) -> Vec<Vec<u8>> {
    if slots == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut current = vec![0u8; slots];
    fn rec(pos: usize, left: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos + 1 == current.len() {
            current[pos] = left as u8;
            out.push(current.clone());
            return;
        }
        for d in (0..=left).rev() {
            current[pos] = d as u8;
            rec(pos + 1, left - d, current, out);
        }
    }
    rec(0, total, &mut current, &mut out);
    out
}

/// Every monomial of multidegree `j` in `n` points.
fn monomials(j: &[usize], n: usize) -> Vec<Monomial> {
    let mut out = vec![Vec::with_capacity(j.len() * n)];
    for &d in j {
        let comps = compositions(d, n);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                comps.iter().map(move |c| {
                    let mut m = prefix.clone();
                    m.extend_from_slice(c);
                    m
                })
            })
            .collect();
    }
    out
}

/// Sorted multiset of per-point exponent columns: the `S_n`-orbit label.
fn orbit_key(m: &[u8], labels: usize, n: usize) -> Vec<Vec<u8>> {
    let mut cols: Vec<Vec<u8>> = (0..n).map(|i| (0..labels).map(|b| m[b * n + i]).collect()).collect();
    cols.sort();
    cols
}

/// The orbit sums of multidegree `j`, each as its list of monomials.
fn orbit_sums(j: &[usize], n: usize) -> Vec<Vec<Monomial>> {
    let mut orbits: BTreeMap<Vec<Vec<u8>>, Vec<Monomial>> = BTreeMap::new();
    for m in monomials(j, n) {
        orbits.entry(orbit_key(&m, j.len(), n)).or_default().push(m);
    }
    orbits.into_values().collect()
}

/// Number of `S_n`-orbits of monomials of multidegree `J`.
pub fn orbit_count(j: &MultiDegree, n: usize, caps: &Caps) -> Result<u64> {
    caps::check("total degree", j.total(), caps.orbit)?;
    caps::check("n", n, caps.orbit)?;
    let keys: BTreeSet<Vec<Vec<u8>>> = monomials(j.degrees(), n)
        .iter()
        .map(|m| orbit_key(m, j.labels(), n))
        .collect();
    Ok(keys.len() as u64)
}

/// Partitions of `j` into at most `n` parts.
pub fn univariate_invariant_dim(j: usize, n: usize) -> u64 {
    partitions_with_at_most(j, n).len() as u64
}

fn check_coinv_caps(n: usize, labels: usize, bound: usize, caps: &Caps) -> Result<()> {
    caps::check("n", n, caps.coinv_n)?;
    caps::check("number of variable sets", labels, caps.coinv_vars)?;
    let total_cap = if labels <= 1 {
        caps.coinv_total_univariate
    } else {
        caps.coinv_total_diagonal
    };
    caps::check("total degree bound", bound, total_cap)
}

/// Degree-`J` piece of the Hilbert ideal in reduced echelon form.
struct IdealPiece {
    monomials: Vec<Monomial>,
    echelon: Echelon,
}

impl IdealPiece {
    fn quotient_dim(&self) -> u64 {
        (self.echelon.ncols() - self.echelon.rank()) as u64
    }
}

/// The degree-`J` piece of the ideal generated by positive-degree invariants.
///
/// This is the span of `(monomial of degree J - I) * (orbit sum of degree I)`
/// over `0 != I <= J`. It is built as the orbit sums of degree `J` together
/// with `x_{b,i}` times the pieces of degree `J - e_b`, which span the same
/// space and keep every stored row short.
fn ideal_piece(j: &MultiDegree, n: usize, lower: &BTreeMap<MultiDegree, IdealPiece>) -> IdealPiece {
    let labels = j.labels();
    let basis = monomials(j.degrees(), n);
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let mut echelon = Echelon::new(basis.len());
    if j.total() > 0 {
        for orbit in orbit_sums(j.degrees(), n) {
            echelon.insert(orbit.iter().map(|m| (index[m], Rational::one())).collect());
        }
    }
    'outer: for b in 0..labels {
        if j.degrees()[b] == 0 || echelon.is_full() {
            continue;
        }
        let mut smaller = j.degrees().to_vec();
        smaller[b] -= 1;
        let Some(piece) = lower.get(&MultiDegree(smaller)) else {
            continue;
        };
        for row in piece.echelon.rows() {
            for i in 0..n {
                let var = b * n + i;
                let shifted: SparseRow = row
                    .iter()
                    .map(|(&k, v)| {
                        let mut m = piece.monomials[k].clone();
                        m[var] += 1;
                        (index[&m], v.clone())
                    })
                    .collect();
                echelon.insert(shifted);
                if echelon.is_full() {
                    break 'outer;
                }
            }
        }
    }
    IdealPiece {
        monomials: basis,
        echelon,
    }
}

/// Graded dimensions of the coinvariant algebra in `|B|` sets of `n`
/// variables, for every multidegree of total degree `<= bound`.
///
/// Each dimension is `dim Sym^J` minus the rank of the degree-`J` piece of
/// the Hilbert ideal, computed by exact rational row reduction.
pub fn coinv_graded_dims(n: usize, labels: usize, bound: usize, caps: &Caps) -> Result<BTreeMap<MultiDegree, u64>> {
    if labels == 0 {
        return Err(Error::InvalidParams("need at least one set of variables".into()));
    }
    check_coinv_caps(n, labels, bound, caps)?;
    let all = MultiDegree::all_up_to(labels, bound);
    let mut dims = BTreeMap::new();
    let mut lower: BTreeMap<MultiDegree, IdealPiece> = BTreeMap::new();
    for total in 0..=bound {
        let layer: BTreeMap<MultiDegree, IdealPiece> = all
            .iter()
            .filter(|j| j.total() == total)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|j| (j.clone(), ideal_piece(j, n, &lower)))
            .collect();
        for (j, piece) in &layer {
            dims.insert(j.clone(), piece.quotient_dim());
        }
        lower = layer;
    }
    Ok(dims)
}

/// `Σ_μ u^j(μ) χ^μ`: the character of the degree-`j` coinvariants of `S_n`.
pub fn coinv_character_univariate(j: usize, n: usize, caps: &Caps) -> Result<ClassFunction> {
    caps::check("symmetric group degree", n, caps.oracle)?;
    let mut acc = ClassFunction::zero(n);
    for mu in partitions_of(n) {
        let u = syt_major_counts(&mu, caps)?.get(&j).copied().unwrap_or(0);
        if u > 0 {
            acc = acc.add(&specht_class_function(&mu).scale(&exact::int(u as i64)))?;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[usize]) -> MultiDegree {
        MultiDegree::new(v.to_vec()).unwrap()
    }

    #[test]
    fn orbits() {
        let caps = Caps::default();
        assert_eq!(orbit_count(&md(&[2, 1]), 1, &caps).unwrap(), 1);
        assert_eq!(orbit_count(&md(&[2, 1]), 2, &caps).unwrap(), 3);
        assert_eq!(orbit_count(&md(&[2, 1]), 3, &caps).unwrap(), 4);
        assert_eq!(orbit_count(&md(&[0]), 0, &caps).unwrap(), 1);
        assert_eq!(orbit_count(&md(&[1]), 0, &caps).unwrap(), 0);
        assert!(orbit_count(&md(&[9]), 2, &caps).is_err());
    }

    #[test]
    fn invariant_dims() {
        assert_eq!(univariate_invariant_dim(4, 5), 5);
        assert_eq!(univariate_invariant_dim(3, 1), 1);
        assert_eq!(univariate_invariant_dim(4, 2), 3);
    }

    #[test]
    fn small_coinvariants() {
        let caps = Caps::default();
        let d = coinv_graded_dims(1, 1, 3, &caps).unwrap();
        assert_eq!(d.values().copied().collect::<Vec<_>>(), vec![1, 0, 0, 0]);
        let d = coinv_graded_dims(3, 1, 4, &caps).unwrap();
        assert_eq!(d.values().copied().collect::<Vec<_>>(), vec![1, 2, 2, 1, 0]);
        assert!(coinv_graded_dims(6, 1, 2, &caps).is_err());
        assert!(coinv_graded_dims(3, 2, 7, &caps).is_err());
    }

    #[test]
    fn characters() {
        let caps = Caps::default();
        assert_eq!(
            coinv_character_univariate(0, 4, &caps).unwrap(),
            ClassFunction::trivial(4)
        );
        let mu = crate::partition::Partition::new(vec![2, 1]).unwrap();
        assert_eq!(
            coinv_character_univariate(1, 3, &caps).unwrap(),
            specht_class_function(&mu)
        );
        assert_eq!(
            coinv_character_univariate(2, 3, &caps).unwrap().at_identity(),
            exact::int(2)
        );
    }

    #[test]
    fn multidegree_json() {
        let j = md(&[2, 1]);
        assert_eq!(serde_json::to_string(&j).unwrap(), "[2,1]");
        assert!(serde_json::from_str::<MultiDegree>("[]").is_err());
    }
}
