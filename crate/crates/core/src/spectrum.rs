//! Weight enumerator of the dual code `{ c(a,b) : a, b in GF(3^m) }` with
//! `c(a,b)_i = tr(a pi^(-u i) + b pi^(-v i))`.
//!
//! Two independent routes are provided. [`direct_enumerator`] evaluates every
//! codeword from its definition. [`spectral_enumerator`] uses the Fourier
//! transform of `x^v`,
//!
//! ```text
//! f(lambda) = sum_x omega^(tr(x^v - lambda x)),
//! ```
//!
//! and the fact that for `a, b != 0` the weight of `c(a,b)` is
//! `2 * 3^(m-1) - (f(lambda) + f(-lambda)) / 3` with `lambda = a c`, where
//! `c^v = b^-1`. All character sums are exact Eisenstein integers.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;

use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, Gf3Element};

/// `p + q w` with `w` a primitive cube root of unity, `w^2 = -1 - w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    pub p: i64,
    pub q: i64,
}

impl EisensteinInt {
    pub const ZERO: EisensteinInt = EisensteinInt { p: 0, q: 0 };
    pub const ONE: EisensteinInt = EisensteinInt { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Self {
        EisensteinInt { p, q }
    }

    /// `w^e`.
    pub fn omega_pow(e: u8) -> Self {
        match e % 3 {
            0 => EisensteinInt::new(1, 0),
            1 => EisensteinInt::new(0, 1),
            _ => EisensteinInt::new(-1, -1),
        }
    }

    /// `N0 + N1 w + N2 w^2` for counts of trace values 0, 1, 2.
    pub fn from_trace_counts(counts: [i64; 3]) -> Self {
        EisensteinInt::new(counts[0] - counts[2], counts[1] - counts[2])
    }

    /// Multiplication by `w`: `(p + q w) w = -q + (p - q) w`.
    #[inline]
    pub fn mul_omega(self) -> Self {
        EisensteinInt::new(-self.q, self.p - self.q)
    }

    /// Multiplication by `w^2 = w^-1`.
    #[inline]
    pub fn mul_omega2(self) -> Self {
        self.mul_omega().mul_omega()
    }

    pub fn is_real(self) -> bool {
        self.q == 0
    }

    /// `|z|^2 = p^2 - p q + q^2`.
    pub fn norm(self) -> i64 {
        self.p * self.p - self.p * self.q + self.q * self.q
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        EisensteinInt::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        EisensteinInt::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        EisensteinInt::new(-self.p, -self.q)
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}w", self.p, self.q)
    }
}

/// Weight of `c(a,b)`, by evaluating every coordinate.
pub fn dual_codeword_weight(a: Gf3Element, b: Gf3Element, ctx: &FieldCtx) -> usize {
    let n = ctx.order();
    let (u, v) = ctx.welch_exponents();
    let (u, v) = (u % n, v % n);
    let mut zeros = 0;
    for i in 0..n {
        // pi^(-u i) = pi^(n - u i mod n)
        let xu = ctx.exp(n - (u * i) % n);
        let xv = ctx.exp(n - (v * i) % n);
        if ctx.trace(ctx.mul(a, xu).add(ctx.mul(b, xv))) == 0 {
            zeros += 1;
        }
    }
    (n - zeros) as usize
}

/// `f(lambda) = sum_x omega^(tr(x^v - lambda x))`, summed over every field
/// element with full field arithmetic.
pub fn fhat(lambda: Gf3Element, ctx: &FieldCtx) -> EisensteinInt {
    let (_, v) = ctx.welch_exponents();
    let mut counts = [0i64; 3];
    for x in ctx.elements() {
        let t = ctx.trace(ctx.pow(x, v).sub(ctx.mul(lambda, x)));
        counts[t as usize] += 1;
    }
    EisensteinInt::from_trace_counts(counts)
}

/// `f(lambda)` for every `lambda`, indexed like [`FieldCtx::index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierSpectrum {
    values: Vec<EisensteinInt>,
}

impl FourierSpectrum {
    pub fn at(&self, lambda: Gf3Element, ctx: &FieldCtx) -> EisensteinInt {
        self.values[ctx.index(lambda)]
    }

    /// Values in base-3 index order of `lambda`.
    pub fn values(&self) -> &[EisensteinInt] {
        &self.values
    }

    /// `sum_lambda |f(lambda)|^2`.
    pub fn parseval_sum(&self) -> i128 {
        self.values.iter().map(|z| i128::from(z.norm())).sum()
    }
}

/// All `f(lambda)` through a radix-3 Walsh transform of `omega^(tr(x^v))`.
///
/// Writing `x = sum_j x_j pi^j`, the linear form `tr(lambda x)` equals
/// `sum_j x_j tr(lambda pi^j)`, so `f(lambda)` is the transform evaluated at
/// the trit vector `(tr(lambda pi^j))_j`. Cost `O(m 3^m)`.
pub fn fhat_table(ctx: &FieldCtx) -> FourierSpectrum {
    let n = ctx.order();
    let (_, v) = ctx.welch_exponents();
    let size = ctx.size();
    let mut w = vec![EisensteinInt::ZERO; size];
    w[0] = EisensteinInt::ONE;
    for k in 0..n {
        let idx = ctx.index(ctx.exp(k));
        w[idx] = EisensteinInt::omega_pow(ctx.trace_of_power(k * v));
    }
    let mut stride = 1;
    while stride < size {
        for block in w.chunks_mut(3 * stride) {
            let (a0, rest) = block.split_at_mut(stride);
            let (a1, a2) = rest.split_at_mut(stride);
            for i in 0..stride {
                let (x0, x1, x2) = (a0[i], a1[i], a2[i]);
                a0[i] = x0 + x1 + x2;
                a1[i] = x0 + x1.mul_omega2() + x2.mul_omega();
                a2[i] = x0 + x1.mul_omega() + x2.mul_omega2();
            }
        }
        stride *= 3;
    }
    let m = u64::from(ctx.m());
    let mut values = vec![EisensteinInt::ZERO; size];
    values[0] = w[0];
    for lam_log in 0..n {
        let widx: usize = (0..m)
            .rev()
            .fold(0, |acc, j| acc * 3 + ctx.trace_of_power(lam_log + j) as usize);
        values[ctx.index(ctx.exp(lam_log))] = w[widx];
    }
    FourierSpectrum { values }
}

/// All `f(lambda)` by summing over `x` separately for every `lambda`.
/// Cost `3^(2m)`; parallel over `lambda`.
pub fn fhat_table_direct(ctx: &FieldCtx) -> FourierSpectrum {
    let n = ctx.order();
    let (_, v) = ctx.welch_exponents();
    let tr_xv: Vec<u8> = (0..n).map(|k| ctx.trace_of_power(k * v)).collect();
    let values = (0..ctx.size())
        .into_par_iter()
        .map(|idx| {
            let lambda = ctx.element_at(idx);
            // x = 0 contributes omega^0
            let mut counts = [1i64, 0, 0];
            match ctx.log(lambda) {
                None => {
                    for &t in &tr_xv {
                        counts[t as usize] += 1;
                    }
                }
                Some(l) => {
                    for (k, &t) in tr_xv.iter().enumerate() {
                        let s = ctx.trace_of_power(l + k as u64);
                        counts[((t + 3 - s) % 3) as usize] += 1;
                    }
                }
            }
            EisensteinInt::from_trace_counts(counts)
        })
        .collect();
    FourierSpectrum { values }
}

/// `v^-1 mod (3^m - 1)`.
fn v_inverse(ctx: &FieldCtx) -> u64 {
    let n = ctx.order() as i64;
    let (_, v) = ctx.welch_exponents();
    let e = (v as i64).extended_gcd(&n);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(n) as u64
}

/// `lambda(a, b) = a c` with `c^v = b^-1`; requires `b != 0`.
pub fn spectral_class(a: Gf3Element, b: Gf3Element, ctx: &FieldCtx) -> Result<Gf3Element> {
    let b_inv = ctx.inv(b)?;
    let c = ctx.pow(b_inv, v_inverse(ctx));
    Ok(ctx.mul(a, c))
}

/// `{0} ∪ {2·3^(m-1), 2·3^(m-1) ± 3^ell, 2·3^(m-1) ± 2·3^ell}`.
pub fn weight_value_set(m: u32) -> BTreeSet<u64> {
    let ell = (m - 1) / 2;
    let mid = 2 * 3u64.pow(m - 1);
    let s = 3u64.pow(ell);
    [0, mid - 2 * s, mid - s, mid, mid + s, mid + 2 * s].into_iter().collect()
}

/// Largest degree accepted by [`direct_enumerator`].
pub const DIRECT_MAX_DEGREE: u32 = 5;

/// Enumerates every `c(a,b)` and tallies weights. Only for `m <= 5`.
pub fn direct_enumerator(ctx: &FieldCtx) -> Result<WeightEnumerator> {
    let n = ctx.order();
    if ctx.m() > DIRECT_MAX_DEGREE {
        let size = u128::from(n + 1);
        return Err(Error::BudgetExceeded {
            estimate: size * size * u128::from(n),
            budget: 3u128.pow(2 * DIRECT_MAX_DEGREE) * u128::from(3u64.pow(DIRECT_MAX_DEGREE) - 1),
        });
    }
    let len = n as usize;
    let partial = (0..ctx.size())
        .into_par_iter()
        .map(|ai| {
            let a = ctx.element_at(ai);
            let mut hist = vec![0u64; len + 1];
            for b in ctx.elements() {
                hist[dual_codeword_weight(a, b, ctx)] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u64; len + 1],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(s, t)| *s += t);
                x
            },
        );
    Ok(WeightEnumerator::from_counts(
        len,
        partial.into_iter().enumerate().filter(|(_, c)| *c > 0),
    ))
}

/// Weight shared by every `c(a,b)` with `a, b != 0` in the class of `lambda`.
pub fn class_weight(lambda: Gf3Element, spectrum: &FourierSpectrum, ctx: &FieldCtx) -> Result<u64> {
    let s = spectrum.at(lambda, ctx) + spectrum.at(lambda.neg(), ctx);
    let bad = || Error::NonIntegralWeight(ctx.log(lambda).unwrap_or(0));
    if !s.is_real() || s.p % 3 != 0 {
        return Err(bad());
    }
    let mid = 2 * 3i64.pow(ctx.m() - 1);
    let w = mid - s.p / 3;
    if w < 0 || w as u64 > ctx.order() {
        return Err(bad());
    }
    Ok(w as u64)
}

/// Assembles the dual enumerator from a precomputed spectrum.
pub fn enumerator_from_spectrum(
    spectrum: &FourierSpectrum,
    ctx: &FieldCtx,
) -> Result<WeightEnumerator> {
    let n = ctx.order();
    let mid = 2 * 3u64.pow(ctx.m() - 1);
    let mut hist = vec![0u64; n as usize + 1];
    hist[0] = 1;
    hist[mid as usize] += 2 * n;
    for k in 0..n {
        let w = class_weight(ctx.exp(k), spectrum, ctx)?;
        hist[w as usize] += n;
    }
    Ok(WeightEnumerator::from_counts(
        n as usize,
        hist.into_iter().enumerate().filter(|(_, c)| *c > 0).map(|(w, c)| (w, BigUint::from(c))),
    ))
}

/// Dual enumerator from the Fourier spectrum of `x^v`.
pub fn spectral_enumerator(ctx: &FieldCtx) -> Result<WeightEnumerator> {
    enumerator_from_spectrum(&fhat_table(ctx), ctx)
}
