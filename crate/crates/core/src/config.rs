//! Formulas for ordered configuration spaces of manifolds.
//!
//! The topological input is asserted by the caller: `d` is the manifold
//! dimension, `u` its connectivity, and `plane_exception` states that
//! `d = 2` and the manifold is not a 2-sphere minus a closed set.
//!
//! Special cases of [`config_delta`]:
//! * `u = 0` gives `δ_k = k` for `d >= 3` and `2k` for `d = 2`.
//! * a highly connected manifold with `d = 2u + 2` has `2(u + 1) = d`, so the
//!   second and third cases apply.
//! * `ℝ^d` with `u = d - 2` and `k = i(d - 1)` gives `δ_k = 2i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::binom;
use crate::ranges::{doubled, StableRanges};

/// Largest `r` counted by permutation enumeration in [`derangement_count`].
pub const DERANGEMENT_ENUMERATION_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConfigParams {
    pub d: u64,
    pub u: u64,
    pub k: u64,
    pub plane_exception: bool,
}

impl ConfigParams {
    pub fn new(d: u64, u: u64, k: u64, plane_exception: bool) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidParams(format!("need d >= 2, got d = {d}")));
        }
        if u > d - 2 {
            return Err(Error::InvalidParams(format!("need u <= d - 2, got d = {d}, u = {u}")));
        }
        if plane_exception && d != 2 {
            return Err(Error::InvalidParams(format!(
                "the plane exception needs d = 2, got d = {d}"
            )));
        }
        Ok(ConfigParams {
            d,
            u,
            k,
            plane_exception,
        })
    }
}

/// Generation degree `δ_k` of `H^k` of the ordered configuration spaces.
///
/// With `k = q (d - 1) + r`, `0 <= r < d - 1`:
/// `⌊k/(u+1)⌋` if `2(u+1) < d`, else `2q + 1` if `u + 1 <= r`, else `2q`.
/// The plane exception resets it to `2k - 1`.
pub fn config_delta(p: ConfigParams) -> Result<u64> {
    let ConfigParams {
        d,
        u,
        k,
        plane_exception,
    } = ConfigParams::new(p.d, p.u, p.k, p.plane_exception)?;
    if k < d - 1 {
        return Err(Error::LowDegreeRegime { k, bound: d - 1 });
    }
    if plane_exception {
        return Ok(2 * k - 1);
    }
    let (q, r) = (k / (d - 1), k % (d - 1));
    Ok(if 2 * (u + 1) < d {
        k / (u + 1)
    } else if u < r {
        2 * q + 1
    } else {
        2 * q
    })
}

/// `(2δ, 2δ + 1, 2δ - 1, 2δ - 2, δ, 2δ)` with `δ = δ_k`.
pub fn config_ranges(p: ConfigParams) -> Result<StableRanges> {
    Ok(doubled(config_delta(p)? as i64))
}

/// Fixed-point-free permutations of `r` letters with exactly `l` cycles.
///
/// Counted by enumerating `S_r` for `r <= 9` and by
/// `D(r, l) = (r - 1)(D(r - 2, l - 1) + D(r - 1, l))` above.
pub fn derangement_count(r: usize, l: usize) -> u64 {
    if r <= DERANGEMENT_ENUMERATION_CAP {
        derangements_by_enumeration(r, l)
    } else {
        derangements_by_recurrence(r, l)
    }
}

pub fn derangements_by_enumeration(r: usize, l: usize) -> u64 {
    let mut perm: Vec<usize> = (0..r).collect();
    let mut count = 0;
    loop {
        if (0..r).all(|i| perm[i] != i) && cycle_count(&perm) == l {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return count;
        }
    }
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn derangements_by_recurrence(r: usize, l: usize) -> u64 {
    let mut table = vec![vec![0u64; l + 1]; r + 1];
    table[0][0] = 1;
    for m in 2..=r {
        for c in 1..=l {
            table[m][c] = (m as u64 - 1) * (table[m - 2][c - 1] + table[m - 1][c]);
        }
    }
    table[r][l]
}

/// `Σ_{r=i+1}^{2i} D(r, r - i) C(n, r)`: the dimension of `H^{i(d-1)}` of
/// the ordered configuration space of `n` points in `ℝ^d`.
pub fn hersh_reiner_dim(i: usize, n: usize) -> u64 {
    (i + 1..=2 * i)
        .map(|r| derangement_count(r, r - i) * binom(n as i64, r as i64) as u64)
        .sum()
}

/// `C(n - 1, 2) - 1` for `n >= 3`, else 0.
pub fn sphere_dim(n: usize) -> u64 {
    if n < 3 {
        0
    } else {
        binom(n as i64 - 1, 2) as u64 - 1
    }
}

/// Stable ranges of `H^{i(d-1)}` for `ℝ^d`, all sharp.
pub fn euclidean_sharp_ranges(i: u64, d: u64) -> Result<StableRanges> {
    if i < 1 || d < 2 {
        return Err(Error::InvalidParams(format!(
            "need i >= 1 and d >= 2, got i = {i}, d = {d}"
        )));
    }
    let i = i as i64;
    let m = if d % 2 == 1 { 3 * i } else { 3 * i + 1 };
    StableRanges::new(2 * i, -1, 4 * i - 1, -1, 2 * i, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(d: u64, u: u64, k: u64, plane: bool) -> ConfigParams {
        ConfigParams {
            d,
            u,
            k,
            plane_exception: plane,
        }
    }

    #[test]
    fn delta_cases() {
        assert_eq!(config_delta(params(5, 0, 7, false)).unwrap(), 7);
        assert_eq!(config_delta(params(2, 0, 3, true)).unwrap(), 5);
        assert_eq!(config_delta(params(4, 2, 3, false)).unwrap(), 2);
        assert_eq!(config_delta(params(2, 0, 3, false)).unwrap(), 6);
        assert!(matches!(
            config_delta(params(4, 2, 2, false)),
            Err(Error::LowDegreeRegime { k: 2, bound: 3 })
        ));
        assert!(matches!(
            config_delta(params(4, 3, 5, false)),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            config_delta(params(3, 0, 5, true)),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn ranges() {
        assert_eq!(
            config_ranges(params(4, 2, 3, false)).unwrap().as_array(),
            [4, 5, 3, 2, 2, 4]
        );
        assert_eq!(
            config_ranges(params(3, 1, 2, false)).unwrap().as_array(),
            [4, 5, 3, 2, 2, 4]
        );
        assert_eq!(
            config_ranges(params(2, 0, 1, true)).unwrap().as_array(),
            [2, 3, 1, 0, 1, 2]
        );
    }

    #[test]
    fn derangements() {
        assert_eq!(derangement_count(2, 1), 1);
        assert_eq!(derangement_count(4, 2), 3);
        assert_eq!(derangement_count(6, 4), 0);
        assert_eq!(derangement_count(0, 0), 1);
        for r in 0..=8 {
            for l in 0..=r {
                assert_eq!(
                    derangements_by_enumeration(r, l),
                    derangements_by_recurrence(r, l),
                    "{r} {l}"
                );
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(hersh_reiner_dim(1, 5), 10);
        assert_eq!(hersh_reiner_dim(2, 4), 11);
        assert_eq!(hersh_reiner_dim(2, 2), 0);
        assert_eq!(sphere_dim(4), 2);
        assert_eq!(sphere_dim(3), 0);
        assert_eq!(sphere_dim(6), 9);
        assert_eq!(sphere_dim(1), 0);
    }

    #[test]
    fn euclidean_fixtures() {
        assert_eq!(euclidean_sharp_ranges(1, 3).unwrap().as_array(), [2, -1, 3, -1, 2, 3]);
        assert_eq!(euclidean_sharp_ranges(1, 2).unwrap().as_array(), [2, -1, 3, -1, 2, 4]);
    }
}
