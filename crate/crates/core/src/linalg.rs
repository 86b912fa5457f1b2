//! Sparse exact row reduction.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Zero};

use crate::exact::Rational;

pub type SparseRow = BTreeMap<usize, Rational>;

/// Incrementally built reduced row-echelon form over the rationals.
///
/// Every stored row has coefficient 1 in its pivot column and no entries in
/// other pivot columns. The pivot of a new row is its lowest column.
#[derive(Debug, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
    // non-pivot column -> pivots of the rows that use it
    users: HashMap<usize, HashSet<usize>>,
}

fn axpy(target: &mut SparseRow, factor: &Rational, source: &SparseRow) {
    for (&k, v) in source {
        let slot = target.entry(k).or_insert_with(Rational::zero);
        *slot -= factor * v;
        if slot.is_zero() {
            target.remove(&k);
        }
    }
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            ..Echelon::default()
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols
    }

    /// The stored rows, ordered by pivot.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<usize> = row.keys().copied().filter(|c| self.pivots.contains_key(c)).collect();
        for col in hits {
            if let Some(factor) = row.get(&col).cloned() {
                axpy(&mut row, &factor, &self.pivots[&col]);
            }
        }
        let Some((&col, lead)) = row.iter().next() else {
            return false;
        };
        debug_assert!(col < self.ncols);
        let inv = Rational::one() / lead;
        if !inv.is_one() {
            for v in row.values_mut() {
                *v *= &inv;
            }
        }
        // clear the new pivot column from the stored rows
        for p in self.users.remove(&col).unwrap_or_default() {
            let stored = self.pivots.get_mut(&p).expect("user of a live pivot");
            let factor = stored[&col].clone();
            let before: Vec<usize> = stored.keys().copied().collect();
            axpy(stored, &factor, &row);
            for k in before {
                if k != p && !stored.contains_key(&k) {
                    if let Some(set) = self.users.get_mut(&k) {
                        set.remove(&p);
                    }
                }
            }
            for &k in stored.keys() {
                if k != p {
                    self.users.entry(k).or_default().insert(p);
                }
            }
        }
        for &k in row.keys() {
            if k != col {
                self.users.entry(k).or_default().insert(col);
            }
        }
        self.pivots.insert(col, row);
        true
    }
}

/// Rank of a list of sparse rows.
pub fn rank(ncols: usize, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new(ncols);
    for row in rows {
        e.insert(row);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}
