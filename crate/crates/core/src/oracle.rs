//! Independent brute-force oracles used to cross-check the main algorithms.
//!
//! Nothing here calls the code it is meant to check: characters come from
//! the Jacobi–Trudi determinant over Young permutation characters, tableaux
//! are listed one by one, and the generating functions are plain integer
//! series.

use std::collections::HashMap;

use crate::exact::binom;
use crate::partition::{partitions_of, Partition};
use crate::symchar::class_size;

/// Number of ways to place the cycles of `lambda` into blocks of sizes `blocks`.
///
/// This is the value at `lambda` of the permutation character on ordered
/// set partitions with block sizes `blocks`.
pub fn young_permutation_character(blocks: &[usize], lambda: &Partition) -> u64 {
    fn rec(cycles: &[usize], left: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
        let Some((&first, rest)) = cycles.split_first() else {
            return u64::from(left.iter().all(|&b| b == 0));
        };
        let key = (cycles.len(), left.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for b in 0..left.len() {
            if left[b] >= first {
                left[b] -= first;
                total += rec(rest, left, memo);
                left[b] += first;
            }
        }
        memo.insert(key, total);
        total
    }
    if blocks.iter().sum::<usize>() != lambda.size() {
        return 0;
    }
    rec(lambda.parts(), &mut blocks.to_vec(), &mut HashMap::new())
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // inserting the largest letter at `pos` adds `len - pos` inversions
            let s = if (p.len() - pos) % 2 == 0 { sign } else { -sign };
            out.push((q, s));
        }
    }
    out
}

fn sign_of_type(lambda: &Partition) -> i64 {
    let even_cycles = lambda.parts().iter().filter(|&&p| p % 2 == 0).count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `χ^μ(λ)` from the Jacobi–Trudi determinant `det(h_{μ_i - i + j})`.
pub fn jacobi_trudi_character(mu: &Partition, lambda: &Partition) -> i64 {
    if mu.len() > mu.first() {
        return sign_of_type(lambda) * jacobi_trudi_character(&mu.conjugate(), lambda);
    }
    let l = mu.len();
    let mut total = 0i64;
    for (sigma, sign) in permutations(l) {
        let blocks: Option<Vec<usize>> = (0..l)
            .map(|i| {
                let v = mu.parts()[i] as i64 - i as i64 + sigma[i] as i64;
                (v >= 0).then_some(v as usize)
            })
            .collect();
        if let Some(blocks) = blocks {
            total += sign * young_permutation_character(&blocks, lambda) as i64;
        }
    }
    total
}

/// Every standard Young tableau of shape `mu`, as the row of each entry `1..=n`.
pub fn standard_tableaux(mu: &Partition) -> Vec<Vec<usize>> {
    fn rec(shape: &mut Vec<usize>, rows_of: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if shape.iter().all(|&r| r == 0) {
            let mut t = rows_of.clone();
            t.reverse();
            out.push(t);
            return;
        }
        // remove the largest entry from an outer corner
        for r in 0..shape.len() {
            let len = shape[r];
            if len > 0 && shape.get(r + 1).is_none_or(|&below| below < len) {
                shape[r] -= 1;
                rows_of.push(r);
                rec(shape, rows_of, out);
                rows_of.pop();
                shape[r] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut mu.parts().to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Major index: the sum of the `i` whose successor `i + 1` sits in a lower row.
pub fn major_index(rows_of: &[usize]) -> usize {
    (1..rows_of.len()).filter(|&i| rows_of[i] > rows_of[i - 1]).sum()
}

/// `u^j(μ)` for every `j` by listing tableaux.
pub fn major_index_counts(mu: &Partition) -> Vec<u64> {
    let n = mu.size();
    let mut counts = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
    for t in standard_tableaux(mu) {
        counts[major_index(&t)] += 1;
    }
    counts
}

/// Coefficients of `t^0..=t^order` in `∏_i (1 - t^i)^{-a_i(λ)}`.
pub fn cycle_series(lambda: &Partition, order: usize) -> Vec<i64> {
    let mut series = vec![0i64; order + 1];
    series[0] = 1;
    for &cycle in lambda.parts() {
        for k in cycle..=order {
            series[k] += series[k - cycle];
        }
    }
    series
}

/// Coefficients of `[n]_q! = ∏_{i=1}^n (1 + q + ⋯ + q^{i-1})`.
pub fn q_factorial(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for i in 1..=n {
        let mut next = vec![0u64; poly.len() + i - 1];
        for (k, &c) in poly.iter().enumerate() {
            for s in 0..i {
                next[k + s] += c;
            }
        }
        poly = next;
    }
    poly
}

/// `[t^i] ∏_{m=1}^{n-1} (1 + m t)`, an unsigned Stirling number of the first kind.
pub fn stirling_product(i: usize, n: usize) -> u64 {
    let mut poly = vec![1u64];
    for m in 1..n as u64 {
        let mut next = vec![0u64; poly.len() + 1];
        for (k, &c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] += m * c;
        }
        poly = next;
    }
    poly.get(i).copied().unwrap_or(0)
}

/// Derangements with `l` cycles as a sum of class sizes over cycle types.
pub fn derangements_by_cycle_type(r: usize, l: usize) -> u64 {
    partitions_of(r)
        .iter()
        .filter(|p| p.len() == l && p.parts().iter().all(|&c| c >= 2))
        .map(class_size)
        .sum()
}

/// Monomials of degree `j` in `n` variables: `C(n + j - 1, j)`.
pub fn stars_and_bars(n: usize, j: usize) -> u64 {
    if n == 0 {
        return u64::from(j == 0);
    }
    binom((n + j - 1) as i64, j as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn characters_of_s3() {
        let classes = [part(&[1, 1, 1]), part(&[2, 1]), part(&[3])];
        let table: Vec<Vec<i64>> = [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
            .iter()
            .map(|mu| classes.iter().map(|l| jacobi_trudi_character(mu, l)).collect())
            .collect();
        assert_eq!(table, vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]]);
    }

    #[test]
    fn tableaux() {
        assert_eq!(standard_tableaux(&part(&[3, 2])).len(), 5);
        assert_eq!(major_index_counts(&part(&[2, 1])), vec![0, 1, 1, 0]);
        assert_eq!(major_index_counts(&part(&[1, 1, 1])), vec![0, 0, 0, 1]);
    }

    #[test]
    fn series() {
        assert_eq!(cycle_series(&part(&[1, 1, 1]), 2), vec![1, 3, 6]);
        assert_eq!(q_factorial(3), vec![1, 2, 2, 1]);
        assert_eq!(q_factorial(0), vec![1]);
        assert_eq!(stirling_product(1, 5), 10);
        assert_eq!(stirling_product(2, 4), 11);
        assert_eq!(derangements_by_cycle_type(4, 2), 3);
        assert_eq!(stars_and_bars(3, 2), 6);
    }
}
