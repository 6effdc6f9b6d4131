//! Exhaustive check that `(x^(3^ell) + e)(x^(3^ell) - x) = 1` has no solution
//! `x != 0` for `e in {1, 2}`.

use serde::Serialize;

use crate::field::{FieldCtx, Gf3Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(into = "u8")]
pub enum Epsilon {
    One,
    Two,
}

impl Epsilon {
    pub const ALL: [Epsilon; 2] = [Epsilon::One, Epsilon::Two];

    pub fn trit(self) -> u8 {
        match self {
            Epsilon::One => 1,
            Epsilon::Two => 2,
        }
    }

    pub fn from_trit(t: u8) -> Option<Self> {
        match t {
            1 => Some(Epsilon::One),
            2 => Some(Epsilon::Two),
            _ => None,
        }
    }
}

impl From<Epsilon> for u8 {
    fn from(e: Epsilon) -> u8 {
        e.trit()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub m: u32,
    pub epsilon: Epsilon,
    pub solutions: Vec<Gf3Element>,
    pub scanned: u64,
}

impl LemmaReport {
    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

#[derive(Serialize)]
struct LemmaJson {
    m: u32,
    epsilon: u8,
    solution_count: usize,
    scanned: u64,
}

/// `{"m", "epsilon", "solution_count", "scanned"}`.
impl Serialize for LemmaReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LemmaJson {
            m: self.m,
            epsilon: self.epsilon.trit(),
            solution_count: self.solutions.len(),
            scanned: self.scanned,
        }
        .serialize(s)
    }
}

/// `(x^(3^ell) + e)(x^(3^ell) - x)` for `x = pi^k`, with the Frobenius power
/// taken in the log domain.
#[inline]
fn lemma_lhs(ctx: &FieldCtx, k: u64, eps: Gf3Element, frob: u64) -> Gf3Element {
    let x = ctx.exp(k);
    let y = ctx.exp(k * frob);
    ctx.mul(y.add(eps), y.sub(x))
}

/// Scans every nonzero `x` and collects those where the left side equals 1.
pub fn lemma_check(ctx: &FieldCtx, epsilon: Epsilon) -> LemmaReport {
    let frob = 3u64.pow(ctx.ell()) % ctx.order();
    let eps = Gf3Element::from_trit(epsilon.trit());
    let solutions = (0..ctx.order())
        .filter(|&k| lemma_lhs(ctx, k, eps, frob) == Gf3Element::ONE)
        .map(|k| ctx.exp(k))
        .collect();
    LemmaReport { m: ctx.m(), epsilon, solutions, scanned: ctx.order() }
}

/// Number of nonzero `x` mapped to each right-hand side `c`, indexed like
/// [`FieldCtx::index`].
pub fn preimage_counts(ctx: &FieldCtx, epsilon: Epsilon) -> Vec<u64> {
    let frob = 3u64.pow(ctx.ell()) % ctx.order();
    let eps = Gf3Element::from_trit(epsilon.trit());
    let mut counts = vec![0u64; ctx.size()];
    for k in 0..ctx.order() {
        counts[ctx.index(lemma_lhs(ctx, k, eps, frob))] += 1;
    }
    counts
}

/// True when `x^(3^ell)` by `ell` repeated cubings matches the log-domain
/// shortcut for every nonzero `x`.
pub fn frobenius_routes_agree(ctx: &FieldCtx) -> bool {
    let frob = 3u64.pow(ctx.ell()) % ctx.order();
    (0..ctx.order()).all(|k| {
        let x = ctx.exp(k);
        let cubed = (0..ctx.ell()).fold(x, |y, _| ctx.mul(ctx.mul(y, y), y));
        cubed == ctx.exp(k * frob)
    })
}
