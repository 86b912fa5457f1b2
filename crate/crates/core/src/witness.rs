//! The witness families `I(g)`, `T(c)`, `S(c)`, `V(g)` and the sum `S(c) ⊕ I(g)`.
//!
//! A family is represented by its dimension sequence, its characters and its
//! homological profile; transition maps are never built.
//!
//! * `I(g)_n` is spanned by the `g`-subsets of `[n]`.
//! * `T(c)` is the trivial representation in degree `c` only.
//! * `S(c)` is the trivial representation in every degree `> c`.
//! * `V(g)_n` is the Specht module `S^(n-g,g)` for `n >= 2g`, zero for `g <= 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::caps::{self, Caps};
use crate::error::{Error, Result};
use crate::exact::{self, NewtonPoly, Rational};
use crate::partition::{pad, Partition};
use crate::ranges::{HypTriple, StableRanges};
use crate::symchar::{decompose_class_function, induced_trivial_character, specht_class_function, ClassFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessKind {
    I,
    T,
    S,
    V,
}

impl FromStr for WitnessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" => Ok(WitnessKind::I),
            "T" | "t" => Ok(WitnessKind::T),
            "S" | "s" => Ok(WitnessKind::S),
            "V" | "v" => Ok(WitnessKind::V),
            _ => Err(Error::InvalidParams(format!("unknown witness family {s:?}"))),
        }
    }
}

/// One of the four primitive families, or the derived sum `S(c) ⊕ I(g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Witness {
    Family { kind: WitnessKind, param: i64 },
    SumSI { c: i64, g: i64 },
}

impl Witness {
    pub fn new(kind: WitnessKind, param: i64) -> Result<Self> {
        if param < -1 {
            return Err(Error::InvalidParams(format!(
                "witness parameter must be >= -1, got {param}"
            )));
        }
        Ok(Witness::Family { kind, param })
    }

    pub fn i(g: i64) -> Self {
        Witness::Family {
            kind: WitnessKind::I,
            param: g,
        }
    }

    pub fn t(c: i64) -> Self {
        Witness::Family {
            kind: WitnessKind::T,
            param: c,
        }
    }

    pub fn s(c: i64) -> Self {
        Witness::Family {
            kind: WitnessKind::S,
            param: c,
        }
    }

    pub fn v(g: i64) -> Self {
        Witness::Family {
            kind: WitnessKind::V,
            param: g,
        }
    }

    /// `S(c) ⊕ I(g)`, defined for `c >= 0` and `0 <= g <= ⌈c/2⌉`.
    pub fn sum_si(c: i64, g: i64) -> Result<Self> {
        if c < 0 || g < 0 || g > (c + 1) / 2 {
            return Err(Error::ParamOutOfTheoremRange(format!(
                "S(c) + I(g) needs c >= 0 and 0 <= g <= ceil(c/2), got c = {c}, g = {g}"
            )));
        }
        Ok(Witness::SumSI { c, g })
    }

    /// `dim W_n`.
    pub fn dim(&self, n: usize) -> u64 {
        let n_i = n as i64;
        match *self {
            Witness::Family { kind, param } => match kind {
                WitnessKind::I => exact::binom(n_i, param) as u64,
                WitnessKind::T => u64::from(n_i == param),
                WitnessKind::S => u64::from(n_i > param),
                WitnessKind::V => {
                    let g = param;
                    if g <= 0 || n_i <= 2 * g - 2 {
                        0
                    } else {
                        let num = (n_i - (2 * g - 1)) as i128 * exact::binom(n_i, g - 1) as i128;
                        debug_assert_eq!(num % g as i128, 0);
                        (num / g as i128) as u64
                    }
                }
            },
            Witness::SumSI { c, g } => Witness::s(c).dim(n) + Witness::i(g).dim(n),
        }
    }

    /// The character of `W_n`.
    pub fn character(&self, n: usize, caps: &Caps) -> Result<ClassFunction> {
        caps::check("symmetric group degree", n, caps.oracle)?;
        let n_i = n as i64;
        Ok(match *self {
            Witness::Family { kind, param } => match kind {
                WitnessKind::I if param < 0 || param > n_i => ClassFunction::zero(n),
                WitnessKind::I => induced_trivial_character(param as usize, n, caps)?,
                WitnessKind::T if n_i == param => ClassFunction::trivial(n),
                WitnessKind::S if n_i > param => ClassFunction::trivial(n),
                WitnessKind::V if param >= 1 && n_i >= 2 * param => {
                    let g = param as usize;
                    specht_class_function(&Partition::new(vec![n - g, g])?)
                }
                _ => ClassFunction::zero(n),
            },
            Witness::SumSI { c, g } => Witness::s(c)
                .character(n, caps)?
                .add(&Witness::i(g).character(n, caps)?)?,
        })
    }

    /// The generation, presentation and higher homological degrees, the
    /// `(c, g)` hypothesis and the stable ranges, all of which are sharp.
    pub fn profile(&self) -> Result<WitnessProfile> {
        let out_of_range = |why: &str| Err(Error::ParamOutOfTheoremRange(format!("{self}: {why}")));
        let (t0, t_shift, regularity, triple, ranges) = match *self {
            Witness::Family { kind, param } => match kind {
                WitnessKind::I => {
                    let g = param;
                    if g < -1 {
                        return out_of_range("needs g >= -1");
                    }
                    (g, None, -2, (-1, g), [g, -1, 0.max(2 * g - 1), -1, g, 0.max(2 * g)])
                }
                WitnessKind::T => {
                    let c = param;
                    if c < 0 {
                        return out_of_range("needs c >= 0");
                    }
                    (c, Some(c), c, (c, -1), [c, c + 1, c + 1, c, -1, c + 1])
                }
                WitnessKind::S => {
                    let c = param;
                    if c < 0 {
                        return out_of_range("needs c >= 0");
                    }
                    (c + 1, Some(c + 1), c + 1, (c, 0), [c + 1, c + 2, c + 1, c, 0, c + 1])
                }
                WitnessKind::V => {
                    let g = param;
                    if g < 1 {
                        return out_of_range("needs g >= 1");
                    }
                    let t = [2 * g, 2 * g + 1, 2 * g - 1, 2 * g - 2, g, 2 * g];
                    (2 * g, Some(2 * g), 2 * g, (2 * g - 2, g), t)
                }
            },
            Witness::SumSI { c, g } => (c + 1, Some(c + 1), c + 1, (c, g), [c + 1, c + 2, c + 1, c, g, c + 1]),
        };
        Ok(WitnessProfile {
            witness: *self,
            t0,
            t_shift,
            regularity,
            hyp_triple: HypTriple::new(triple.0, triple.1)?,
            stable_ranges: StableRanges::new(ranges[0], ranges[1], ranges[2], ranges[3], ranges[4], ranges[5])?,
            sharp: [true; 6],
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Family { kind, param } => write!(f, "{kind:?}({param})"),
            Witness::SumSI { c, g } => write!(f, "S({c}) + I({g})"),
        }
    }
}

/// Homological data of a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessProfile {
    pub witness: Witness,
    pub t0: i64,
    /// `t_i = i + shift` for `i >= 1`; `None` means `t_i = -1`.
    pub t_shift: Option<i64>,
    pub regularity: i64,
    pub hyp_triple: HypTriple,
    pub stable_ranges: StableRanges,
    /// Sharpness flags for `(t0, t1, A, hmax, delta, M)`.
    pub sharp: [bool; 6],
}

impl WitnessProfile {
    pub fn t(&self, i: usize) -> i64 {
        match (i, self.t_shift) {
            (0, _) => self.t0,
            (_, Some(s)) => i as i64 + s,
            (_, None) => -1,
        }
    }

    pub fn t_formula(&self) -> String {
        match self.t_shift {
            Some(0) => "t_i = i".to_string(),
            Some(s) => format!("t_i = i+{s}"),
            None => "t_i = -1".to_string(),
        }
    }

    /// `max_{i >= 1} (t_i - i)` over `1 <= i <= imax`.
    pub fn regularity_from_t(&self, imax: usize) -> i64 {
        (1..=imax.max(1)).map(|i| self.t(i) - i as i64).max().unwrap_or(-2)
    }
}

/// One verified coordinate of a sharpness report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessCheck {
    pub coordinate: &'static str,
    pub claimed: i64,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharpnessReport {
    pub witness: String,
    pub checks: Vec<SharpnessCheck>,
    pub passed: bool,
}

fn check(coordinate: &'static str, claimed: i64, passed: bool, detail: String) -> SharpnessCheck {
    SharpnessCheck {
        coordinate,
        claimed,
        passed,
        detail,
    }
}

/// Decomposition with the first row dropped from every label.
fn stable_pattern(decomp: &BTreeMap<Partition, i64>) -> BTreeMap<Partition, i64> {
    decomp.iter().map(|(mu, &m)| (mu.tail(), m)).collect()
}

/// Whether `decomp` equals `pattern` padded to `n`.
fn matches_pattern(pattern: &BTreeMap<Partition, i64>, decomp: &BTreeMap<Partition, i64>, n: usize) -> bool {
    let mut padded = BTreeMap::new();
    for (mu, &m) in pattern {
        match pad(mu, n) {
            Ok(p) => {
                padded.insert(p, m);
            }
            Err(_) => return false,
        }
    }
    &padded == decomp
}

/// Verifies every coordinate of the profile from the dimensions and characters.
///
/// Dimensions are fitted by a polynomial on `hmax + 1 ..= 2 hmax + 2 delta + 4`
/// and Specht decompositions are computed up to the character oracle cap.
pub fn sharpness_check(w: &Witness, caps: &Caps) -> Result<SharpnessReport> {
    let profile = w.profile()?;
    let r = profile.stable_ranges;
    let dims = |n: i64| -> i64 {
        if n < 0 {
            0
        } else {
            w.dim(n as usize) as i64
        }
    };
    let mut checks = Vec::new();

    // generators: the first nonzero degree must carry generators
    let (gen_source, gen_t0, gen_t1) = match *w {
        Witness::SumSI { c, .. } => {
            let s = Witness::s(c);
            let p = s.profile()?;
            (s, p.t0, p.t(1))
        }
        _ => (*w, r.t0, r.t1),
    };
    let first_nonzero = (0..=gen_t0.max(0) + 1).find(|&n| gen_source.dim(n as usize) > 0);
    let t0_ok = match first_nonzero {
        Some(e) => e == gen_t0,
        None => gen_t0 == -1,
    };
    checks.push(check(
        "t0",
        r.t0,
        t0_ok,
        match first_nonzero {
            Some(e) => format!("{gen_source} first nonzero in degree {e}"),
            None => format!("{gen_source} is zero"),
        },
    ));

    // relations: fewer dimensions than the free module on the generators
    let t1_ok = if gen_t1 == -1 {
        true
    } else {
        let e = gen_t0;
        let next = gen_source.dim((e + 1) as usize);
        let free = (e + 1) as u64 * gen_source.dim(e as usize);
        gen_t1 == e + 1 && next < free
    };
    checks.push(check(
        "t1",
        r.t1,
        t1_ok,
        format!("{gen_source} has relations in degree {gen_t1}"),
    ));

    let start = r.hmax + 1;
    let horizon = (2 * r.hmax + 2 * r.delta + 4).max(start + r.delta + 2);
    let values: Vec<Rational> = (start..=horizon).map(|n| exact::int(dims(n))).collect();
    let poly = NewtonPoly::interpolate(start, &values);
    let fitted = poly.degree();
    let confirmed = fitted < values.len() as i64 - 1;

    let below = r.hmax;
    let (h_ok, h_detail) = if below < 0 {
        (confirmed, "polynomial in every degree".to_string())
    } else {
        let at = poly.eval(below);
        let fails = at != exact::int(dims(below));
        let detail = if at.is_negative() {
            format!("polynomial is {at} < 0 at n = {below}")
        } else {
            format!("polynomial is {at} at n = {below}, dimension {}", dims(below))
        };
        (confirmed && fails, detail)
    };
    checks.push(check("hmax", r.hmax, h_ok, h_detail));
    checks.push(check(
        "delta",
        r.delta,
        confirmed && fitted == r.delta,
        format!("fitted degree {fitted} on {start}..={horizon}"),
    ));

    // additive form Σ d_r (C(n,r) - C(n,r-1)) with integer d_r
    let (a_ok, a_detail) = additive_check(&poly, r, &dims, horizon);
    checks.push(check("A", r.a, confirmed && a_ok, a_detail));

    let (m_ok, m_detail) = specht_stability(w, r.m, caps)?;
    checks.push(check("M", r.m, m_ok, m_detail));

    let passed = checks.iter().all(|c| c.passed);
    Ok(SharpnessReport {
        witness: w.to_string(),
        checks,
        passed,
    })
}

fn additive_check(poly: &NewtonPoly, r: StableRanges, dims: &dyn Fn(i64) -> i64, horizon: i64) -> (bool, String) {
    let delta = r.delta.max(-1);
    // b_k = Δ^k p(0), then d_k = b_k + d_{k+1}
    let mut d = vec![Rational::zero(); (delta + 2) as usize];
    for k in (0..=delta).rev() {
        let bk = (0..=k).fold(Rational::zero(), |acc, i| {
            let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
            acc + exact::int(sign * exact::binom(k, i)) * poly.eval(i)
        });
        d[k as usize] = &bk + &d[k as usize + 1];
    }
    let integral = d.iter().all(|x| x.is_integer());
    let expr = |n: i64| -> Rational {
        (0..=delta).fold(Rational::zero(), |acc, k| {
            acc + &d[k as usize] * exact::int(exact::binom(n, k) - exact::binom(n, k - 1))
        })
    };
    let holds = (r.a..=horizon).all(|n| expr(n) == exact::int(dims(n)));
    let floor = 0.max(2 * r.delta - 1);
    let fails_below = r.a >= 1 && expr(r.a - 1) != exact::int(dims(r.a - 1));
    let coeffs: Vec<String> = d[..(delta + 1) as usize].iter().map(exact::format).collect();
    (
        integral && holds && (fails_below || r.a == floor),
        format!(
            "d = [{}]; fails at A-1: {fails_below}; A at floor {floor}: {}",
            coeffs.join(", "),
            r.a == floor
        ),
    )
}

fn specht_stability(w: &Witness, m: i64, caps: &Caps) -> Result<(bool, String)> {
    let top = caps.oracle;
    caps::check("Specht stability threshold", m as usize, top)?;
    let from = (m - 1).max(0) as usize;
    let mut decomps = BTreeMap::new();
    for n in from..=top {
        decomps.insert(n, decompose_class_function(&w.character(n, caps)?, caps)?);
    }
    let pattern = stable_pattern(&decomps[&(m as usize)]);
    let stable = (m as usize..=top).all(|n| matches_pattern(&pattern, &decomps[&n], n));
    let breaks = m == 0 || !matches_pattern(&pattern, &decomps[&(m as usize - 1)], m as usize - 1);
    let shown: Vec<String> = pattern.iter().map(|(mu, c)| format!("{mu}[n]:{c}")).collect();
    Ok((
        stable && breaks,
        format!(
            "{{{}}} for {m} <= n <= {top}; differs at n = {}: {breaks}",
            shown.join(", "),
            m - 1
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(Witness::v(2).dim(4), 2);
        assert_eq!(Witness::v(2).dim(2), 0);
        assert_eq!(Witness::v(0).dim(5), 0);
        assert_eq!(Witness::i(3).dim(5), 10);
        assert_eq!(Witness::i(-1).dim(5), 0);
        assert_eq!(Witness::t(2).dim(2), 1);
        assert_eq!(Witness::t(2).dim(3), 0);
        assert_eq!(Witness::s(2).dim(2), 0);
        assert_eq!(Witness::s(2).dim(3), 1);
        assert_eq!(Witness::sum_si(3, 2).unwrap().dim(4), 7);
        assert!(Witness::sum_si(2, 2).is_err());
    }

    #[test]
    fn characters() {
        let caps = Caps::default();
        let nat = Witness::i(1).character(3, &caps).unwrap();
        let values: Vec<i64> = ["(3)", "(2,1)", "(1,1,1)"]
            .iter()
            .zip([vec![3], vec![2, 1], vec![1, 1, 1]])
            .map(|(_, p)| exact::to_i64(&nat.value(&Partition::new(p).unwrap())).unwrap())
            .collect();
        assert_eq!(values, vec![0, 1, 3]);
        assert!(Witness::s(2).character(1, &caps).unwrap().is_zero());
        let v = Witness::v(2).character(4, &caps).unwrap();
        assert_eq!(v, specht_class_function(&Partition::new(vec![2, 2]).unwrap()));
        assert!(Witness::v(2).character(9, &caps).is_err());
    }

    #[test]
    fn profiles() {
        let p = Witness::v(2).profile().unwrap();
        assert_eq!((p.t(3), p.regularity, p.hyp_triple), (7, 4, HypTriple { c: 2, g: 2 }));
        assert_eq!(p.stable_ranges.as_array(), [4, 5, 3, 2, 2, 4]);
        let p = Witness::t(3).profile().unwrap();
        assert_eq!(p.stable_ranges.as_array(), [3, 4, 4, 3, -1, 4]);
        assert_eq!(p.t_formula(), "t_i = i+3");
        let p = Witness::i(0).profile().unwrap();
        assert_eq!((p.t(0), p.t(1), p.t(5), p.regularity), (0, -1, -1, -2));
        assert_eq!(p.regularity_from_t(6), -2);
        assert!(matches!(Witness::v(0).profile(), Err(Error::ParamOutOfTheoremRange(_))));
        assert!(matches!(
            Witness::t(-1).profile(),
            Err(Error::ParamOutOfTheoremRange(_))
        ));
    }

    #[test]
    fn sharp_v2() {
        let report = sharpness_check(&Witness::v(2), &Caps::default()).unwrap();
        assert!(report.passed, "{report:?}");
        let h = report.checks.iter().find(|c| c.coordinate == "hmax").unwrap();
        assert!(h.detail.contains("-1 < 0"), "{}", h.detail);
    }

    #[test]
    fn all_small_families_sharp() {
        let caps = Caps::default();
        let mut witnesses: Vec<Witness> = (-1..=4).map(Witness::i).collect();
        witnesses.extend((0..=4).map(Witness::t));
        witnesses.extend((0..=4).map(Witness::s));
        witnesses.extend((1..=4).map(Witness::v));
        for c in 0..=4 {
            for g in 0..=(c + 1) / 2 {
                witnesses.push(Witness::sum_si(c, g).unwrap());
            }
        }
        for w in witnesses {
            let report = sharpness_check(&w, &caps).unwrap();
            assert!(report.passed, "{report:#?}");
        }
    }
}
