//! Minimum distance of `C_(u,v)`.
//!
//! A word `sum_i c_i x^(t_i)` is a codeword iff it vanishes at `pi^u` and
//! `pi^v`, i.e. `sum c_i y_i^u = 0` and `sum c_i y_i^v = 0` with
//! `y_i = pi^(t_i)`. The structured searches below solve these systems in
//! `O(3^m)` per coefficient pattern, using that `y^u = y` for squares and
//! `y^u = -y` otherwise. [`brute_force_min_weight`] enumerates supports
//! directly and serves as the independent oracle on small lengths.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{sphere_packing_max_d, CyclicCode};
use crate::enumerator::{macwilliams_prefix, WeightEnumerator};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Gf3Element};
use crate::poly::Trit;

/// Which equations a search imposes. `UOnly` drops the `v` equation and
/// exists to show the searches are not vacuous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum System {
    Full,
    UOnly,
}

/// A low-weight word: coefficient `coefficients[i]` at `support[i]`.
/// Supports are sorted; ordering is lexicographic on (weight, support,
/// coefficients).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Witness {
    pub weight: usize,
    pub support: Vec<u64>,
    pub coefficients: Vec<Trit>,
}

impl Witness {
    fn new(mut pairs: Vec<(u64, Trit)>) -> Self {
        pairs.sort_unstable();
        Witness {
            weight: pairs.len(),
            support: pairs.iter().map(|p| p.0).collect(),
            coefficients: pairs.iter().map(|p| p.1).collect(),
        }
    }

    /// Full word of length `n`.
    pub fn to_word(&self, n: usize) -> Vec<Trit> {
        let mut w = vec![0; n];
        for (&pos, &c) in self.support.iter().zip(&self.coefficients) {
            w[pos as usize] = c;
        }
        w
    }
}

/// Default oracle budget in syndrome checks.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// All `y` with `y^u = s`. For odd `m`, `-1` is a nonsquare, so these are
/// `s` (if `s` is a square) and `-s` (if `-s` is a nonsquare): both or
/// neither.
pub fn u_power_preimages(s: Gf3Element, ctx: &FieldCtx) -> Vec<Gf3Element> {
    if s.is_zero() {
        return vec![Gf3Element::ZERO];
    }
    let mut out = Vec::with_capacity(2);
    if ctx.is_square(s).expect("s != 0") {
        out.push(s);
    }
    let t = s.neg();
    if !ctx.is_square(t).expect("t != 0") {
        out.push(t);
    }
    out
}

/// Weight-1 codewords would need `c pi^(u t) = 0`.
pub fn weight1_search(code: &CyclicCode<'_>) -> Option<Witness> {
    let ctx = code.ctx();
    (0..ctx.order())
        .find(|&t| ctx.exp(code.u() * t).is_zero() && ctx.exp(code.v() * t).is_zero())
        .map(|t| Witness::new(vec![(t, 1)]))
}

/// Weight-2 words `1 + c x^t`: solves `c d^u = -1` (and `c d^v = -1`) over
/// `d = pi^t != 1`.
pub fn weight2_search(code: &CyclicCode<'_>) -> Option<Witness> {
    weight2_search_with(code, System::Full)
}

pub fn weight2_search_with(code: &CyclicCode<'_>, system: System) -> Option<Witness> {
    let ctx = code.ctx();
    let minus_one = Gf3Element::ONE.neg();
    for t in 1..ctx.order() {
        for c in [1u8, 2] {
            let du = ctx.exp(code.u() * t).scale(c);
            if du != minus_one {
                continue;
            }
            if system == System::Full && ctx.exp(code.v() * t).scale(c) != minus_one {
                continue;
            }
            return Some(Witness::new(vec![(0, 1), (t, c)]));
        }
    }
    None
}

/// Weight-3 words `1 + c1 x^t1 + c2 x^t2` after normalizing the third
/// position to 0 and its coefficient to 1. For every `(c1, c2)` and every
/// `y1 != 1`, the `u` equation fixes `y2^u`, which has at most two roots;
/// each is tested against the `v` equation.
pub fn weight3_search(code: &CyclicCode<'_>) -> Option<Witness> {
    let ctx = code.ctx();
    let n = ctx.order();
    let (u, v) = (code.u(), code.v());
    let patterns = [(1u8, 1u8), (1, 2), (2, 1), (2, 2)];
    (1..n)
        .into_par_iter()
        .filter_map(|t1| {
            let y1 = ctx.exp(t1);
            let mut best: Option<Witness> = None;
            for &(c1, c2) in &patterns {
                // c2 y2^u = -(c1 y1^u + 1); c2 is its own inverse
                let s = ctx.pow(y1, u).scale(c1).add(Gf3Element::ONE).neg().scale(c2);
                for y2 in u_power_preimages(s, ctx) {
                    let Some(t2) = ctx.log(y2) else { continue };
                    if t2 == 0 || t2 == t1 {
                        continue;
                    }
                    let lhs = ctx
                        .exp(v * t1)
                        .scale(c1)
                        .add(ctx.exp(v * t2).scale(c2))
                        .add(Gf3Element::ONE);
                    if lhs.is_zero() {
                        let w = Witness::new(vec![(0, 1), (t1, c1), (t2, c2)]);
                        if best.as_ref().is_none_or(|b| w < *b) {
                            best = Some(w);
                        }
                    }
                }
            }
            best
        })
        .min()
}

/// First weight-4 codeword `1 + c1 x^t1 + c2 x^t2 + c3 x^t3` found by
/// scanning `t1` upward; `t2 > t1` is scanned in full and `t3` solved from
/// the `u` equation. Deterministic; stops at the first `t1` with a solution.
pub fn weight4_search(code: &CyclicCode<'_>) -> Option<Witness> {
    let ctx = code.ctx();
    let n = ctx.order();
    let (u, v) = (code.u(), code.v());
    for t1 in 1..n {
        let found = (t1 + 1..n)
            .into_par_iter()
            .filter_map(|t2| {
                let mut best: Option<Witness> = None;
                for c1 in [1u8, 2] {
                    for c2 in [1u8, 2] {
                        let partial = ctx
                            .exp(u * t1)
                            .scale(c1)
                            .add(ctx.exp(u * t2).scale(c2))
                            .add(Gf3Element::ONE);
                        let partial_v = ctx
                            .exp(v * t1)
                            .scale(c1)
                            .add(ctx.exp(v * t2).scale(c2))
                            .add(Gf3Element::ONE);
                        for c3 in [1u8, 2] {
                            let s = partial.neg().scale(c3);
                            for y3 in u_power_preimages(s, ctx) {
                                let Some(t3) = ctx.log(y3) else { continue };
                                if t3 == 0 || t3 == t1 || t3 == t2 {
                                    continue;
                                }
                                if partial_v.add(ctx.exp(v * t3).scale(c3)).is_zero() {
                                    let w =
                                        Witness::new(vec![(0, 1), (t1, c1), (t2, c2), (t3, c3)]);
                                    if best.as_ref().is_none_or(|b| w < *b) {
                                        best = Some(w);
                                    }
                                }
                            }
                        }
                    }
                }
                best
            })
            .min();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn binomial_u128(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Syndrome checks needed to enumerate all supports of size `<= wmax` with
/// first coefficient fixed to 1.
pub fn brute_force_work(n: u64, wmax: usize) -> u128 {
    (1..=wmax as u128)
        .map(|w| binomial_u128(u128::from(n), w).saturating_mul(1 << (w - 1)))
        .fold(0u128, u128::saturating_add)
}

/// Lightest nonzero codeword of weight `<= wmax`, by enumerating supports in
/// lexicographic order and all coefficient patterns with leading coefficient
/// 1. Returns the lexicographically smallest witness of the smallest weight.
pub fn brute_force_min_weight(
    code: &CyclicCode<'_>,
    wmax: usize,
    budget: u128,
) -> Result<Option<Witness>> {
    brute_force_min_weight_with(code, wmax, budget, System::Full)
}

pub fn brute_force_min_weight_with(
    code: &CyclicCode<'_>,
    wmax: usize,
    budget: u128,
    system: System,
) -> Result<Option<Witness>> {
    let ctx = code.ctx();
    let n = ctx.order();
    let estimate = brute_force_work(n, wmax);
    if estimate > budget {
        return Err(Error::BudgetExceeded { estimate, budget });
    }
    let su: Vec<Gf3Element> = (0..n).map(|t| ctx.exp(code.u() * t)).collect();
    let sv: Vec<Gf3Element> = (0..n).map(|t| ctx.exp(code.v() * t)).collect();
    let check_v = system == System::Full;
    for w in 1..=wmax {
        let found = (0..n as usize).into_par_iter().find_map_first(|first| {
            let mut rest = Vec::with_capacity(w - 1);
            search_supports(&su, &sv, check_v, first, w, &mut rest)
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Supports starting at `first`, of size `w`, in lexicographic order.
fn search_supports(
    su: &[Gf3Element],
    sv: &[Gf3Element],
    check_v: bool,
    first: usize,
    w: usize,
    rest: &mut Vec<usize>,
) -> Option<Witness> {
    if rest.len() + 1 == w {
        let k = rest.len();
        // patterns over the non-leading positions, lexicographic in {1,2}^k
        for pattern in 0..(1u32 << k) {
            let coeff = |i: usize| -> Trit { if pattern >> (k - 1 - i) & 1 == 1 { 2 } else { 1 } };
            let mut acc_u = su[first];
            let mut acc_v = sv[first];
            for (i, &pos) in rest.iter().enumerate() {
                acc_u = acc_u.add(su[pos].scale(coeff(i)));
                if check_v {
                    acc_v = acc_v.add(sv[pos].scale(coeff(i)));
                }
            }
            if acc_u.is_zero() && (!check_v || acc_v.is_zero()) {
                let mut pairs = vec![(first as u64, 1)];
                pairs.extend(rest.iter().enumerate().map(|(i, &p)| (p as u64, coeff(i))));
                return Some(Witness::new(pairs));
            }
        }
        return None;
    }
    let start = rest.last().map_or(first + 1, |&p| p + 1);
    for pos in start..su.len() {
        rest.push(pos);
        let hit = search_supports(su, sv, check_v, first, w, rest);
        rest.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

#[derive(Debug, Clone, Default)]
pub struct DistanceOptions {
    /// Oracle budget in syndrome checks; the oracle is skipped when its
    /// estimated work is larger.
    pub budget: Option<u128>,
    /// Dual weight enumerator, when available, for a MacWilliams cross-check.
    pub dual_enumerator: Option<WeightEnumerator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub wmax: usize,
    pub witness: Option<Witness>,
}

/// Outcome of the distance verification. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub d: usize,
    pub sphere_packing_ceiling: u64,
    pub weight_le3_witness: Option<Witness>,
    pub weight4_support: Option<Vec<u64>>,
    pub weight4_coefficients: Option<Vec<Trit>>,
    pub n: usize,
    pub k: usize,
    pub weight1_found: bool,
    pub weight2_found: bool,
    pub weight3_found: bool,
    pub oracle: Option<OracleResult>,
    /// Code weight counts `A_0..A_4` from the MacWilliams transform of the
    /// dual enumerator, as decimal strings.
    pub macwilliams_low_weights: Option<Vec<String>>,
}

/// Runs the structured searches for weights 1 to 4, the sphere-packing
/// bound, and the oracle and MacWilliams cross-checks when available.
pub fn conclude_distance(code: &CyclicCode<'_>, opts: &DistanceOptions) -> Result<DistanceReport> {
    let w1 = weight1_search(code);
    let w2 = weight2_search(code);
    let w3 = weight3_search(code);
    let ceiling = sphere_packing_max_d(code.n() as u64, code.k() as u64, 3);
    let structured = w1.clone().or_else(|| w2.clone()).or_else(|| w3.clone());
    for w in [&w1, &w2, &w3].into_iter().flatten() {
        if !code.is_codeword(&w.to_word(code.n()))? {
            return Err(Error::Inconsistent(format!("witness {w:?} is not a codeword")));
        }
    }

    let budget = opts.budget.unwrap_or(DEFAULT_BUDGET);
    let oracle = if brute_force_work(code.n() as u64, 3) <= budget {
        let witness = brute_force_min_weight(code, 3, budget)?;
        if witness.as_ref().map(|w| w.weight) != structured.as_ref().map(|w| w.weight) {
            return Err(Error::Inconsistent(format!(
                "structured search found {structured:?}, oracle found {witness:?}"
            )));
        }
        Some(OracleResult { wmax: 3, witness })
    } else {
        None
    };

    let macwilliams_low = match &opts.dual_enumerator {
        Some(dual) => Some(macwilliams_prefix(dual, 3, 4)?),
        None => None,
    };
    if let (Some(low), None) = (&macwilliams_low, &structured) {
        if (1..=3).any(|w| !low.count(w).is_zero()) {
            return Err(Error::Inconsistent(
                "MacWilliams transform reports codewords of weight <= 3".into(),
            ));
        }
    }

    let w4 = if structured.is_none() { weight4_search(code) } else { None };
    if let Some(w) = &w4 {
        if !code.is_codeword(&w.to_word(code.n()))? {
            return Err(Error::Inconsistent(format!("witness {w:?} is not a codeword")));
        }
    }

    let d = match &structured {
        Some(w) => w.weight,
        None => {
            let a4_positive = macwilliams_low.as_ref().is_some_and(|l| !l.count(4).is_zero());
            if w4.is_none() && !a4_positive {
                return Err(Error::Inconsistent("no codeword of weight 4 found".into()));
            }
            4
        }
    };
    if d as u64 > ceiling {
        return Err(Error::Inconsistent(format!(
            "distance {d} exceeds the sphere-packing ceiling {ceiling}"
        )));
    }

    Ok(DistanceReport {
        d,
        sphere_packing_ceiling: ceiling,
        weight_le3_witness: structured,
        weight4_support: w4.as_ref().map(|w| w.support.clone()),
        weight4_coefficients: w4.as_ref().map(|w| w.coefficients.clone()),
        n: code.n(),
        k: code.k(),
        weight1_found: w1.is_some(),
        weight2_found: w2.is_some(),
        weight3_found: w3.is_some(),
        oracle,
        macwilliams_low_weights: macwilliams_low
            .map(|l| (0..=4).map(|w| l.count(w).to_string()).collect()),
    })
}
