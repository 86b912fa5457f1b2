//! Closed-form regularity bounds and six-coordinate stable-range tuples.
//!
//! A tuple `(t0, t1, A, hmax, delta, M)` reads: the module is generated in
//! degrees `<= t0` and related in degrees `<= t1`; its dimensions decompose
//! additively for `n >= A`; its characters agree with a character polynomial
//! of degree `delta` for `n >= hmax + 1`; its Specht decomposition is
//! stable for `n >= M`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Characteristic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RangesRepr", into = "RangesRepr")]
pub struct StableRanges {
    pub t0: i64,
    pub t1: i64,
    pub a: i64,
    pub hmax: i64,
    pub delta: i64,
    pub m: i64,
}

impl StableRanges {
    /// Checks the coordinate invariants, in particular `A >= max(0, 2 delta - 1)`.
    pub fn new(t0: i64, t1: i64, a: i64, hmax: i64, delta: i64, m: i64) -> Result<Self> {
        let r = StableRanges {
            t0,
            t1,
            a,
            hmax,
            delta,
            m,
        };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<()> {
        if [self.t0, self.t1, self.hmax, self.delta].iter().any(|&v| v < -1) {
            return Err(Error::InvalidParams(format!("coordinate below -1 in {self}")));
        }
        if self.m < 0 {
            return Err(Error::InvalidParams(format!("M < 0 in {self}")));
        }
        if self.a < 0.max(2 * self.delta - 1) {
            return Err(Error::InvalidParams(format!("A < max(0, 2 delta - 1) in {self}")));
        }
        Ok(())
    }

    pub fn as_array(&self) -> [i64; 6] {
        [self.t0, self.t1, self.a, self.hmax, self.delta, self.m]
    }

    fn tuple(t: [i64; 6]) -> Self {
        let r = StableRanges {
            t0: t[0],
            t1: t[1],
            a: t[2],
            hmax: t[3],
            delta: t[4],
            m: t[5],
        };
        debug_assert!(r.validate().is_ok(), "{r}");
        r
    }
}

impl fmt::Display for StableRanges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.t0, self.t1, self.a, self.hmax, self.delta, self.m
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RangesRepr {
    t0: i64,
    t1: i64,
    #[serde(rename = "A")]
    a: i64,
    hmax: i64,
    delta: i64,
    #[serde(rename = "M")]
    m: Option<i64>,
}

impl From<StableRanges> for RangesRepr {
    fn from(r: StableRanges) -> Self {
        RangesRepr {
            t0: r.t0,
            t1: r.t1,
            a: r.a,
            hmax: r.hmax,
            delta: r.delta,
            m: Some(r.m),
        }
    }
}

impl TryFrom<RangesRepr> for StableRanges {
    type Error = Error;

    fn try_from(r: RangesRepr) -> Result<Self> {
        let m = r.m.ok_or_else(|| Error::InvalidParams("M is undetermined".into()))?;
        StableRanges::new(r.t0, r.t1, r.a, r.hmax, r.delta, m)
    }
}

/// A literature tuple whose `M` may be undetermined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RangesRepr", into = "RangesRepr")]
pub struct LiteratureRanges {
    pub t0: i64,
    pub t1: i64,
    pub a: i64,
    pub hmax: i64,
    pub delta: i64,
    pub m: Option<i64>,
}

impl LiteratureRanges {
    /// The coordinates `(t0, t1, A, hmax, delta)`.
    pub fn determined(&self) -> [i64; 5] {
        [self.t0, self.t1, self.a, self.hmax, self.delta]
    }
}

impl fmt::Display for LiteratureRanges {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.m.map_or_else(|| "undetermined".to_string(), |m| m.to_string());
        write!(
            f,
            "({}, {}, {}, {}, {}, {m})",
            self.t0, self.t1, self.a, self.hmax, self.delta
        )
    }
}

impl From<RangesRepr> for LiteratureRanges {
    fn from(r: RangesRepr) -> Self {
        LiteratureRanges {
            t0: r.t0,
            t1: r.t1,
            a: r.a,
            hmax: r.hmax,
            delta: r.delta,
            m: r.m,
        }
    }
}

impl From<LiteratureRanges> for RangesRepr {
    fn from(r: LiteratureRanges) -> Self {
        RangesRepr {
            t0: r.t0,
            t1: r.t1,
            a: r.a,
            hmax: r.hmax,
            delta: r.delta,
            m: r.m,
        }
    }
}

/// Local degree `c` and stable degree `g`, both `>= -1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HypTriple {
    pub c: i64,
    pub g: i64,
}

impl HypTriple {
    pub fn new(c: i64, g: i64) -> Result<Self> {
        if c < -1 || g < -1 {
            return Err(Error::InvalidParams(format!("need c, g >= -1, got c = {c}, g = {g}")));
        }
        Ok(HypTriple { c, g })
    }
}

fn ceil_half(c: i64) -> i64 {
    debug_assert!(c >= 0);
    (c + 1) / 2
}

fn floor_half(c: i64) -> i64 {
    debug_assert!(c >= 0);
    c / 2
}

fn nonneg(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        return Err(Error::InvalidParams(format!("{name} must be >= 0, got {v}")));
    }
    Ok(())
}

/// Worst regularity of a module generated in degrees `<= b` and related in degrees `<= a`.
pub fn max_regularity(a: i64, b: i64) -> Result<i64> {
    nonneg("a", a)?;
    nonneg("b", b)?;
    Ok(if a < b { a + b - 1 } else { 2 * b - 2 })
}

pub fn regularity_bound(t: HypTriple) -> i64 {
    let HypTriple { c, g } = t;
    if c == -1 {
        -2
    } else if g == -1 {
        c
    } else if g <= ceil_half(c) {
        c + 1
    } else {
        g + floor_half(c) + 1
    }
}

/// Bounds on `(t0, t1)`.
pub fn t_bounds(t: HypTriple) -> (i64, i64) {
    let HypTriple { c, g } = t;
    if c == -1 {
        (g, -1)
    } else if g == -1 {
        (c, c + 1)
    } else if g <= ceil_half(c) {
        (c + 1, c + 2)
    } else {
        (g + floor_half(c) + 1, g + floor_half(c) + 2)
    }
}

/// Generation degree of `H_k` for an `H_0`-acyclic complex with generation
/// degrees `g_prev` and `g_k` in homological degrees `k - 1` and `k`.
pub fn complex_generation_bound(g_prev: i64, g_k: i64) -> Result<i64> {
    nonneg("g_prev", g_prev)?;
    nonneg("g_k", g_k)?;
    Ok(if g_k > g_prev { g_prev + g_k + 1 } else { 2 * g_k })
}

pub fn ranges_from_cg(t: HypTriple) -> StableRanges {
    let HypTriple { c, g } = t;
    StableRanges::tuple(if c == -1 {
        [g, -1, 0.max(2 * g - 1), -1, g, 0.max(2 * g)]
    } else if g == -1 {
        [c, c + 1, c + 1, c, -1, c + 1]
    } else if g <= ceil_half(c) {
        [c + 1, c + 2, c + 1, c, g, c + 1]
    } else {
        let base = g + floor_half(c);
        [base + 1, base + 2, 2 * g - 1, c, g, 2 * g]
    })
}

/// Bounds on the invariants of `H_k` of a complex with hyperhomology
/// generation degrees `theta_k`, `theta_k1` in degrees `k`, `k + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HyperInvariants {
    pub is_zero: bool,
    /// `max(theta_k, theta_k1)`.
    pub n_k: i64,
    pub delta_bound: i64,
    pub t0_bound: i64,
    pub hmax_bound: i64,
    pub reg_bound: i64,
}

impl HyperInvariants {
    /// Bound on the `j`-th local cohomology degree `h^j`.
    pub fn h_bound(&self, j: usize) -> i64 {
        if self.is_zero {
            return -1;
        }
        let n = self.n_k;
        match j {
            0 => (-1).max(2 * n - 2),
            1 => (-1).max(2 * n - 4),
            _ => (-1).max(2 * self.delta_bound - 2 * j as i64 + 2),
        }
    }
}

pub fn hyper_invariants(theta_k: i64, theta_k1: i64) -> Result<HyperInvariants> {
    if theta_k < -1 || theta_k1 < -1 {
        return Err(Error::InvalidParams(format!(
            "need theta_k, theta_k+1 >= -1, got {theta_k}, {theta_k1}"
        )));
    }
    if theta_k == -1 {
        return Ok(HyperInvariants {
            is_zero: true,
            n_k: theta_k1.max(-1),
            delta_bound: -1,
            t0_bound: -1,
            hmax_bound: -1,
            reg_bound: -2,
        });
    }
    let n = theta_k.max(theta_k1);
    let reg_bound = if theta_k == 0 {
        2 * n - 2
    } else {
        (2 * theta_k).max(2 * n - 2)
    };
    Ok(HyperInvariants {
        is_zero: false,
        n_k: n,
        delta_bound: theta_k,
        t0_bound: 2 * theta_k,
        hmax_bound: (-1).max(2 * n - 2),
        reg_bound,
    })
}

/// Ranges of `H_k` from the hyperhomology generation degrees in degrees `k`, `k + 1`.
///
/// The input `(0, -1)` falls under the first case, since `theta_k1 <= -1`
/// implies `theta_k1 <= 0`.
pub fn ranges_from_hyper(theta_k: i64, theta_k1: i64) -> Result<StableRanges> {
    nonneg("theta_k", theta_k)?;
    if theta_k1 < -1 {
        return Err(Error::InvalidParams(format!("theta_k+1 must be >= -1, got {theta_k1}")));
    }
    let t = theta_k;
    Ok(StableRanges::tuple(if t == 0 && theta_k1 <= 0 {
        [0, -1, 0, -1, 0, 0]
    } else if t >= 1.max(theta_k1) {
        [2 * t, 2 * t + 1, 2 * t - 1, 2 * t - 2, t, 2 * t]
    } else {
        let s = theta_k1;
        [2 * t, 2 * s - 1, 2 * s - 1, 2 * s - 2, t, 2 * s - 1]
    }))
}

/// Ranges of `H_k` for a strictly increasing sequence of hyperhomology generation degrees.
pub fn ranges_from_hyper_chain(theta: &[i64], k: usize) -> Result<StableRanges> {
    if theta.first().is_none_or(|&t| t < 0) || theta.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(format!("{theta:?}")));
    }
    if k + 1 >= theta.len() {
        return Err(Error::InvalidParams(format!(
            "k = {k} needs theta_(k+1), but only {} values were given",
            theta.len()
        )));
    }
    let (tk, next) = (theta[k], theta[k + 1]);
    Ok(StableRanges::tuple(if 2 * tk + 1 < next {
        let s = 2 * tk + next;
        [2 * tk, next, s, s - 1, tk, s]
    } else if k == 0 {
        [next - 1, next, 2 * next - 1, 2 * next - 2, tk, 2 * next - 1]
    } else {
        [2 * tk, 2 * tk + 1, 2 * next - 1, 2 * next - 2, tk, 2 * next - 1]
    }))
}

/// Ranges of a coinvariant piece of total degree `|J| >= 1`.
pub fn ranges_coinv(total_degree: i64) -> Result<StableRanges> {
    if total_degree == 0 {
        return Err(Error::ZeroDegree);
    }
    nonneg("total degree", total_degree)?;
    Ok(doubled(total_degree))
}

/// `(2d, 2d + 1, 2d - 1, 2d - 2, d, 2d)`.
pub(crate) fn doubled(d: i64) -> StableRanges {
    StableRanges::tuple([2 * d, 2 * d + 1, 2 * d - 1, 2 * d - 2, d, 2 * d])
}

/// Ranges of `H_k` of a congruence subgroup over a ring of stable rank `s`.
///
/// `k = 0` gives the constant module.
pub fn ranges_congruence(s: i64, k: i64) -> Result<StableRanges> {
    if s < 1 {
        return Err(Error::InvalidParams(format!("stable rank must be >= 1, got {s}")));
    }
    nonneg("k", k)?;
    Ok(StableRanges::tuple(match k {
        0 => [0, -1, 0, -1, 0, 0],
        1 => [s + 1, s + 3, 2 * s + 4, 2 * s + 3, 2, 2 * s + 4],
        2 => [2 * s + 5, 2 * s + 6, 2 * s + 9, 2 * s + 8, 4, 2 * s + 9],
        _ => {
            let b = 4 * k + 2 * s;
            [b - 2, b - 1, b + 1, b, 2 * k, b + 1]
        }
    }))
}

fn determined_from(field: Option<Characteristic>, threshold: i64) -> bool {
    field.is_some_and(|p| p.is_zero() || i64::from(p.get()) >= threshold)
}

/// Previously known ranges under the `(c, g)` hypothesis.
///
/// `M` is known only over a field of characteristic 0 or at least
/// `2g + 4c + 5`. `A` and `M` are raised to the floors of the tuple
/// invariants at the degenerate corners `c = -1`.
pub fn literature_cg(t: HypTriple, field: Option<Characteristic>) -> LiteratureRanges {
    let HypTriple { c, g } = t;
    let m = determined_from(field, 2 * g + 4 * c + 5).then(|| (2 * g + 4 * c + 4).max(0));
    LiteratureRanges {
        t0: g + c + 1,
        t1: g + 2 * c + 2,
        a: (2 * g + 4 * c + 3).max(0.max(2 * g - 1)),
        hmax: c,
        delta: g,
        m,
    }
}

/// Previously known ranges for congruence subgroups.
pub fn literature_congruence(s: i64, k: i64, field: Option<Characteristic>) -> Result<LiteratureRanges> {
    if s < 1 || k < 1 {
        return Err(Error::InvalidParams(format!(
            "need s >= 1 and k >= 1, got s = {s}, k = {k}"
        )));
    }
    let (t, m, threshold) = match k {
        1 => ([s + 1, s + 3, 2 * s + 5, 2 * s + 3, 2], 2 * s + 7, 2 * s + 8),
        2 => (
            [2 * s + 5, 2 * s + 6, 4 * s + 11, 4 * s + 10, 4],
            4 * s + 13,
            4 * s + 14,
        ),
        _ => (
            [
                4 * k + 2 * s - 1,
                4 * k + 2 * s + 4,
                8 * k + 4 * s + 7,
                8 * k + 4 * s + 2,
                2 * k,
            ],
            8 * k + 4 * s + 9,
            8 * k + 4 * s + 10,
        ),
    };
    Ok(LiteratureRanges {
        t0: t[0],
        t1: t[1],
        a: t[2],
        hmax: t[3],
        delta: t[4],
        m: determined_from(field, threshold).then_some(m),
    })
}
