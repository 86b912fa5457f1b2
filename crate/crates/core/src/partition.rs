//! Integer partitions and standard Young tableaux.
//!
//! A [`Partition`] stores only its positive parts in weakly decreasing order,
//! so two partitions are equal exactly when their part lists are. Enumeration
//! order is lexicographically decreasing: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::caps::{self, Caps};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing.
    /// Trailing zeros are dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "{parts:?} is not a weakly decreasing list of positive parts"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and strips zeros; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// `a_j(λ)`: the number of parts of each size that occurs.
    pub fn part_counts(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// Number of parts equal to `j`.
    pub fn count_of(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// Drops the first row: the inverse of [`pad`] on partitions of the form `λ[n]`.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// `|λ| + λ₁`, the smallest `n` for which `λ[n]` is defined.
    pub fn pad_threshold(&self) -> usize {
        self.size() + self.first()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j - 1 + conj.0[j] - i - 1 + 1);
            }
        }
        hooks
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Characteristic of the coefficient field: 0 or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Characteristic(u32);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u32) -> Result<Self> {
        if p == 0 || is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(Error::InvalidCharacteristic(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True when `j` is divisible by a positive characteristic.
    pub fn divides(self, j: usize) -> bool {
        self.0 != 0 && j.is_multiple_of(self.0 as usize)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` with at most `max_len` parts.
pub fn partitions_with_at_most(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.len() <= max_len).collect()
}

/// `λ[n] = (n - |λ|, λ₁, λ₂, …)`.
pub fn pad(lambda: &Partition, n: usize) -> Result<Partition> {
    let needed = lambda.pad_threshold();
    if n < needed {
        return Err(Error::PadTooSmall {
            size: lambda.size(),
            first: lambda.first(),
            n,
            needed,
        });
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    let head = n - lambda.size();
    if head > 0 {
        parts.push(head);
    }
    parts.extend_from_slice(lambda.parts());
    Ok(Partition(parts))
}

/// Whether every part multiplicity is below the characteristic.
pub fn is_regular(lambda: &Partition, p: u32) -> Result<bool> {
    let ch = Characteristic::new(p)?;
    if ch.is_zero() {
        return Ok(true);
    }
    Ok(lambda.part_counts().values().all(|&m| m < p as usize))
}

/// `a_j(λ)` for every part size `j` that occurs.
pub fn part_counts(lambda: &Partition) -> BTreeMap<usize, usize> {
    lambda.part_counts()
}

/// Dimension of the Specht module `S^μ` via the hook length formula.
///
/// Panics if the dimension does not fit in a `u64` (|μ| well above 20).
pub fn specht_dim(mu: &Partition) -> u64 {
    let mut num = BigUint::one();
    for k in 2..=mu.size() {
        num *= k;
    }
    let den = mu.hooks().into_iter().fold(BigUint::one(), |acc, h| acc * h);
    (num / den).to_u64().expect("Specht dimension overflows u64")
}

/// `u^j(μ)`: number of standard tableaux of shape `μ` with major index `j`.
///
/// Only indices with a nonzero count appear in the map.
pub fn syt_major_counts(mu: &Partition, caps: &Caps) -> Result<BTreeMap<usize, u64>> {
    caps::check("partition size for tableau enumeration", mu.size(), caps.syt)?;
    let mut memo = HashMap::new();
    let start = vec![0usize; mu.len()];
    let poly = grow(mu.parts(), &start, None, &mut memo);
    Ok(poly.into_iter().enumerate().filter(|&(_, c)| c > 0).collect())
}

type GrowMemo = HashMap<(Vec<usize>, Option<usize>), Vec<u64>>;

// Generating polynomial in q (by major index) of all ways to finish filling
// `target` from `shape`, given the row holding the largest entry so far.
fn grow(target: &[usize], shape: &[usize], last_row: Option<usize>, memo: &mut GrowMemo) -> Vec<u64> {
    if shape == target {
        return vec![1];
    }
    let key = (shape.to_vec(), last_row);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let placed: usize = shape.iter().sum();
    let mut total: Vec<u64> = Vec::new();
    let mut next = shape.to_vec();
    for r in 0..target.len() {
        let addable = shape[r] < target[r] && (r == 0 || shape[r - 1] > shape[r]);
        if !addable {
            continue;
        }
        next[r] += 1;
        let sub = grow(target, &next, Some(r), memo);
        next[r] -= 1;
        // entry `placed` is a descent when `placed + 1` lands strictly lower
        let shift = match last_row {
            Some(prev) if r > prev => placed,
            _ => 0,
        };
        if total.len() < sub.len() + shift {
            total.resize(sub.len() + shift, 0);
        }
        for (i, c) in sub.into_iter().enumerate() {
            total[i + shift] += c;
        }
    }
    memo.insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(7).len(), 15);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn padding() {
        assert_eq!(pad(&p(&[2, 1]), 6).unwrap(), p(&[3, 2, 1]));
        assert_eq!(pad(&Partition::empty(), 5).unwrap(), p(&[5]));
        assert_eq!(pad(&Partition::empty(), 0).unwrap(), Partition::empty());
        assert!(matches!(pad(&p(&[3]), 5), Err(Error::PadTooSmall { needed: 6, .. })));
        // boundary: first part ties with λ₁
        assert_eq!(pad(&p(&[3]), 6).unwrap(), p(&[3, 3]));
    }

    #[test]
    fn regularity() {
        assert!(is_regular(&p(&[1, 1, 1]), 0).unwrap());
        assert!(!is_regular(&p(&[1, 1]), 2).unwrap());
        assert!(is_regular(&p(&[2, 1]), 2).unwrap());
        assert!(is_regular(&p(&[1, 1]), 3).unwrap());
        assert_eq!(is_regular(&p(&[1]), 4), Err(Error::InvalidCharacteristic(4)));
        assert_eq!(is_regular(&p(&[1]), 1), Err(Error::InvalidCharacteristic(1)));
    }

    #[test]
    fn counts_parts() {
        assert_eq!(part_counts(&p(&[3, 1, 1])), BTreeMap::from([(1, 2), (3, 1)]));
        assert!(part_counts(&Partition::empty()).is_empty());
        assert_eq!(part_counts(&p(&[2, 2, 2])), BTreeMap::from([(2, 3)]));
    }

    #[test]
    fn hook_length_dimensions() {
        assert_eq!(specht_dim(&p(&[2, 2])), 2);
        assert_eq!(specht_dim(&p(&[5])), 1);
        assert_eq!(specht_dim(&p(&[2, 1])), 2);
        assert_eq!(specht_dim(&p(&[4, 2])), 9);
        assert_eq!(specht_dim(&Partition::empty()), 1);
    }

    #[test]
    fn major_index_counts() {
        let caps = Caps::default();
        assert_eq!(
            syt_major_counts(&p(&[2, 1]), &caps).unwrap(),
            BTreeMap::from([(1, 1), (2, 1)])
        );
        assert_eq!(syt_major_counts(&p(&[4]), &caps).unwrap(), BTreeMap::from([(0, 1)]));
        let two_rows = syt_major_counts(&p(&[3, 3]), &caps).unwrap();
        assert!(two_rows.get(&3).copied().unwrap_or(0) >= 1);
        assert!(syt_major_counts(&p(&[13]), &caps).is_err());
        assert!(syt_major_counts(&p(&[13]), &Caps::lifted()).is_ok());
    }

    #[test]
    fn json_is_a_plain_array() {
        let json = serde_json::to_string(&p(&[3, 2, 1])).unwrap();
        assert_eq!(json, "[3,2,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p(&[3, 2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
