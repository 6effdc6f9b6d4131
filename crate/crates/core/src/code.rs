//! The cyclic code of length `3^m - 1` generated by `m_u(x) m_v(x)` with
//! `u = (3^m + 1)/2` and the Welch-type exponent `v = 2 * 3^ell + 1`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclotomic::{cyclotomic_coset, minimal_polynomial};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{TernaryPoly, Trit};

#[derive(Debug, Clone)]
pub struct CyclicCode<'a> {
    ctx: &'a FieldCtx,
    n: usize,
    u: u64,
    v: u64,
    gen: TernaryPoly,
    k: usize,
}

/// Builds `C_(u,v)` over the given field.
pub fn build_code(ctx: &FieldCtx) -> Result<CyclicCode<'_>> {
    let m = ctx.m();
    let (u, v) = ctx.welch_exponents();
    let cu = cyclotomic_coset(u, m)?;
    let cv = cyclotomic_coset(v, m)?;
    if !cu.is_disjoint(&cv) {
        return Err(Error::CosetCollision);
    }
    if cu.len() != m as usize || cv.len() != m as usize {
        return Err(Error::Inconsistent(format!(
            "coset sizes {} and {} differ from m = {m}",
            cu.len(),
            cv.len()
        )));
    }
    let gen = minimal_polynomial(u, ctx)?.mul(&minimal_polynomial(v, ctx)?);
    let n = ctx.order() as usize;
    let k = n - gen.degree().expect("product of minimal polynomials is nonzero");
    Ok(CyclicCode { ctx, n, u, v, gen, k })
}

impl<'a> CyclicCode<'a> {
    pub fn ctx(&self) -> &'a FieldCtx {
        self.ctx
    }

    pub fn m(&self) -> u32 {
        self.ctx.m()
    }

    /// Length `3^m - 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension `n - deg g`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> u64 {
        self.u
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn generator(&self) -> &TernaryPoly {
        &self.gen
    }

    /// True iff the word's polynomial is a multiple of the generator.
    pub fn is_codeword(&self, word: &[Trit]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: word.len() });
        }
        if word.iter().any(|&t| t > 2) {
            return Err(Error::Parse(format!("{word:?}")));
        }
        Ok(TernaryPoly::new(word.to_vec()).rem(&self.gen)?.is_zero())
    }

    /// Codeword of `message * g(x)`; the message must have degree below `k`.
    pub fn encode(&self, message: &TernaryPoly) -> Result<Vec<Trit>> {
        if message.degree().is_some_and(|d| d >= self.k) {
            return Err(Error::LengthMismatch { expected: self.k, got: message.coeffs().len() });
        }
        let c = message.mul(&self.gen);
        let mut word = c.coeffs().to_vec();
        word.resize(self.n, 0);
        Ok(word)
    }

    /// Word with coefficient `coeffs[i]` at position `support[i]`.
    pub fn word_from_support(&self, support: &[u64], coeffs: &[Trit]) -> Vec<Trit> {
        let mut word = vec![0; self.n];
        for (&pos, &c) in support.iter().zip(coeffs) {
            word[pos as usize] = c;
        }
        word
    }

    pub fn summary(&self) -> CodeSummary {
        CodeSummary {
            m: self.m(),
            n: self.n,
            k: self.k,
            u: self.u,
            v: self.v,
            modulus: self.ctx.modulus().clone(),
            generator: self.gen.clone(),
        }
    }
}

/// Serialized form of a constructed code; field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CodeSummary {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub u: u64,
    pub v: u64,
    pub modulus: TernaryPoly,
    pub generator: TernaryPoly,
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Largest `d` allowed by the Hamming bound for an `[n, k]` code over GF(q),
/// additionally capped by the Singleton bound `n - k + 1`.
pub fn sphere_packing_max_d(n: u64, k: u64, q: u64) -> u64 {
    assert!(k >= 1 && k <= n && q >= 2);
    let capacity = BigUint::from(q).pow((n - k) as u32);
    let q1 = BigUint::from(q - 1);
    let mut volume = BigUint::zero();
    let mut radius = None;
    for t in 0..=n {
        volume += binomial(n, t) * q1.pow(t as u32);
        if volume > capacity {
            break;
        }
        radius = Some(t);
    }
    let t = radius.expect("the radius-0 ball always fits");
    // floor((d - 1) / 2) <= t  <=>  d <= 2t + 2
    (2 * t + 2).min(n - k + 1).min(n)
}
