//! 3-cyclotomic cosets modulo `3^m - 1` and minimal polynomials of powers of
//! the field generator.

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Gf3Element};
use crate::poly::TernaryPoly;

/// Orbit of `base` under multiplication by 3 modulo `3^m - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    base: u64,
    members: Vec<u64>,
    m: u32,
}

impl CyclotomicCoset {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Sorted, distinct.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest member.
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    pub fn is_disjoint(&self, other: &CyclotomicCoset) -> bool {
        self.members.iter().all(|j| !other.contains(*j))
    }
}

pub fn cyclotomic_coset(j: u64, m: u32) -> Result<CyclotomicCoset> {
    let n = 3u64.pow(m) - 1;
    if j >= n {
        return Err(Error::OutOfRange { j, max: n - 1 });
    }
    let mut members = Vec::with_capacity(m as usize);
    let mut cur = j;
    for _ in 0..m {
        members.push(cur);
        cur = (cur * 3) % n;
    }
    members.sort_unstable();
    members.dedup();
    Ok(CyclotomicCoset { base: j, members, m })
}

/// Canonical representatives (coset minima) in increasing order.
pub fn coset_representatives(m: u32) -> Vec<u64> {
    let n = 3u64.pow(m) - 1;
    let mut seen = vec![false; n as usize];
    let mut reps = Vec::new();
    for j in 0..n {
        if seen[j as usize] {
            continue;
        }
        reps.push(j);
        let mut cur = j;
        while !seen[cur as usize] {
            seen[cur as usize] = true;
            cur = (cur * 3) % n;
        }
    }
    reps
}

/// `prod_{i in C_j} (X - pi^i)`, expanded over GF(3^m) and checked to have
/// every coefficient in GF(3).
pub fn minimal_polynomial(j: u64, ctx: &FieldCtx) -> Result<TernaryPoly> {
    let coset = cyclotomic_coset(j, ctx.m())?;
    // coefficients in ascending order, starting from the constant 1
    let mut acc: Vec<Gf3Element> = vec![Gf3Element::ONE];
    for &i in coset.members() {
        let root = ctx.exp(i);
        let mut next = vec![Gf3Element::ZERO; acc.len() + 1];
        for (d, &c) in acc.iter().enumerate() {
            next[d + 1] = next[d + 1].add(c);
            next[d] = next[d].sub(ctx.mul(root, c));
        }
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| c.as_base_trit().ok_or(Error::CoefficientNotInBaseField(j)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TernaryPoly::new(coeffs))
}

/// Evaluates a GF(3) polynomial at a field element (Horner).
pub fn evaluate(f: &TernaryPoly, at: Gf3Element, ctx: &FieldCtx) -> Gf3Element {
    f.coeffs()
        .iter()
        .rev()
        .fold(Gf3Element::ZERO, |acc, &c| ctx.mul(acc, at).add(Gf3Element::from_trit(c)))
}
