//! Enumeration caps for the brute-force paths.
//!
//! Every cap is a plain number checked before work starts. [`Caps::lifted`]
//! disables all of them for callers that accept the cost.

use crate::error::{Error, Result};

/// Largest partition size for standard-tableau enumeration.
pub const SYT_CAP: usize = 12;
/// Largest symmetric-group degree for the character oracle.
pub const ORACLE_CAP: usize = 8;
/// Largest order for the character-polynomial generating functions.
pub const SERIES_CAP: usize = 12;
/// Largest total degree and number of points for orbit enumeration.
pub const ORBIT_CAP: usize = 8;
/// Largest n for the coinvariant row-reduction oracle.
pub const COINV_N_CAP: usize = 5;
/// Largest number of variable sets for the coinvariant oracle.
pub const COINV_VARS_CAP: usize = 2;
/// Largest total degree for the coinvariant oracle with one variable set.
pub const COINV_TOTAL_CAP_UNIVARIATE: usize = 10;
/// Largest total degree for the coinvariant oracle with two variable sets.
pub const COINV_TOTAL_CAP_DIAGONAL: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub syt: usize,
    pub oracle: usize,
    pub series: usize,
    pub orbit: usize,
    pub coinv_n: usize,
    pub coinv_vars: usize,
    pub coinv_total_univariate: usize,
    pub coinv_total_diagonal: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            syt: SYT_CAP,
            oracle: ORACLE_CAP,
            series: SERIES_CAP,
            orbit: ORBIT_CAP,
            coinv_n: COINV_N_CAP,
            coinv_vars: COINV_VARS_CAP,
            coinv_total_univariate: COINV_TOTAL_CAP_UNIVARIATE,
            coinv_total_diagonal: COINV_TOTAL_CAP_DIAGONAL,
        }
    }
}

impl Caps {
    /// No caps at all.
    pub fn lifted() -> Self {
        Caps {
            syt: usize::MAX,
            oracle: usize::MAX,
            series: usize::MAX,
            orbit: usize::MAX,
            coinv_n: usize::MAX,
            coinv_vars: usize::MAX,
            coinv_total_univariate: usize::MAX,
            coinv_total_diagonal: usize::MAX,
        }
    }
}

pub(crate) fn check(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::SizeCapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
