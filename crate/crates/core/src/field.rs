//! Arithmetic in GF(3^m) for odd `3 <= m <= 13`.
//!
//! Elements are kept in polynomial basis `1, x, ..., x^(m-1)` modulo a monic
//! primitive polynomial. Each trit is bit-sliced across two masks so that
//! addition is a handful of word operations; multiplication goes through the
//! discrete-log tables built at construction. The generator `pi` is always
//! the residue class of `x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{TernaryPoly, Trit};

/// Largest extension degree whose tables are materialized.
pub const MAX_DEGREE: u32 = 13;

/// Sentinel stored in the log table for the zero element.
const NO_LOG: u32 = u32::MAX;

/// Built-in moduli. The ones for m = 5, 7, 9 are the published examples.
pub fn default_modulus(m: u32) -> Option<TernaryPoly> {
    let coeffs: &[u8] = match m {
        3 => &[1, 2, 0, 1],
        5 => &[1, 2, 0, 0, 0, 1],
        7 => &[1, 0, 2, 0, 0, 0, 0, 1],
        9 => &[1, 1, 2, 2, 0, 0, 0, 0, 0, 1],
        11 => &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        13 => &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        _ => return None,
    };
    Some(TernaryPoly::new(coeffs))
}

/// Element of GF(3^m). Bit `i` of `lo` is set when the coefficient of `x^i`
/// is 1, bit `i` of `hi` when it is 2; the two masks never overlap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf3Element {
    lo: u16,
    hi: u16,
}

impl Gf3Element {
    pub const ZERO: Gf3Element = Gf3Element { lo: 0, hi: 0 };
    pub const ONE: Gf3Element = Gf3Element { lo: 1, hi: 0 };

    /// Builds an element from ascending trits. Entries must be 0, 1 or 2 and
    /// there may be at most [`MAX_DEGREE`] of them.
    pub fn from_trits(trits: &[Trit]) -> Result<Self> {
        if trits.len() > MAX_DEGREE as usize {
            return Err(Error::ForeignElement);
        }
        let mut e = Gf3Element::ZERO;
        for (i, &t) in trits.iter().enumerate() {
            match t {
                0 => {}
                1 => e.lo |= 1 << i,
                2 => e.hi |= 1 << i,
                _ => return Err(Error::ForeignElement),
            }
        }
        Ok(e)
    }

    /// Embeds a base-field constant.
    pub fn from_trit(t: Trit) -> Self {
        match t % 3 {
            0 => Gf3Element::ZERO,
            1 => Gf3Element::ONE,
            _ => Gf3Element { lo: 0, hi: 1 },
        }
    }

    /// Coefficient of `x^i`.
    pub fn trit(self, i: usize) -> Trit {
        if i >= 16 {
            return 0;
        }
        ((self.lo >> i) & 1) as u8 | ((((self.hi >> i) & 1) as u8) << 1)
    }

    pub fn is_zero(self) -> bool {
        self.lo == 0 && self.hi == 0
    }

    /// The constant term when the element lies in GF(3).
    pub fn as_base_trit(self) -> Option<Trit> {
        if (self.lo | self.hi) & !1 == 0 {
            Some(self.trit(0))
        } else {
            None
        }
    }

    pub fn neg(self) -> Self {
        Gf3Element { lo: self.hi, hi: self.lo }
    }

    #[inline]
    pub fn add(self, other: Self) -> Self {
        let t = (self.lo | other.hi) ^ (self.hi | other.lo);
        Gf3Element {
            lo: (self.hi | other.hi) ^ t,
            hi: (self.lo | other.lo) ^ t,
        }
    }

    #[inline]
    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    /// Scalar multiple by a base-field constant.
    pub fn scale(self, c: Trit) -> Self {
        match c % 3 {
            0 => Gf3Element::ZERO,
            1 => self,
            _ => self.neg(),
        }
    }

    fn highest_bit(self) -> u32 {
        16 - (self.lo | self.hi).leading_zeros()
    }
}

impl fmt::Debug for Gf3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.highest_bit().max(1) as usize;
        let trits = (0..len).map(|i| self.trit(i).to_string()).collect::<Vec<_>>();
        write!(f, "[{}]", trits.join(","))
    }
}

/// Immutable GF(3^m) context with exp, log and trace tables.
pub struct FieldCtx {
    m: u32,
    modulus: TernaryPoly,
    order: u64,
    exp: Vec<Gf3Element>,
    /// Indexed by the base-3 value of an element; [`NO_LOG`] at zero.
    log: Vec<u32>,
    /// Indexed by the base-3 value of an element.
    trace: Vec<Trit>,
    /// `trace_by_log[k] = tr(pi^k)`.
    trace_by_log: Vec<Trit>,
    /// Base-3 value of the positions set in a bit mask.
    mask_value: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("order", &self.order)
            .finish()
    }
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Builds a field context. With `modulus = None` the built-in polynomial for
/// `m` is used.
pub fn make_field(m: u32, modulus: Option<&TernaryPoly>) -> Result<FieldCtx> {
    FieldCtx::new(m, modulus)
}

impl FieldCtx {
    pub fn new(m: u32, modulus: Option<&TernaryPoly>) -> Result<Self> {
        if m < 3 || m.is_multiple_of(2) {
            return Err(Error::EvenDegree(m));
        }
        if m > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(m));
        }
        let modulus = match modulus {
            Some(f) => f.clone(),
            None => default_modulus(m).expect("every supported degree has a default"),
        };
        if modulus.degree() != Some(m as usize) || !modulus.is_monic() {
            return Err(Error::BadModulus(modulus.to_trit_list(), m));
        }
        if !modulus.is_irreducible() {
            return Err(Error::NotIrreducible(modulus.to_trit_list()));
        }
        let order = 3u64.pow(m) - 1;
        let x = TernaryPoly::monomial(1, 1);
        let mut x_order = order;
        for q in distinct_prime_factors(order) {
            while x_order.is_multiple_of(q) && x.pow_mod(x_order / q, &modulus)?.is_one() {
                x_order /= q;
            }
        }
        if x_order != order {
            return Err(Error::NotPrimitive {
                modulus: modulus.to_trit_list(),
                m,
                order: x_order,
            });
        }

        let size = 3usize.pow(m);
        let mask_value = (0..1u32 << m)
            .map(|mask| {
                (0..m)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| 3u32.pow(i))
                    .sum()
            })
            .collect::<Vec<u32>>();

        // x^m = -(lower part of the modulus)
        let lower = Gf3Element::from_trits(&modulus.coeffs()[..m as usize])?;
        let top = 1u16 << m;
        let n = order as usize;
        let mut exp = Vec::with_capacity(n);
        let mut cur = Gf3Element::ONE;
        for _ in 0..n {
            exp.push(cur);
            let mut next = Gf3Element { lo: cur.lo << 1, hi: cur.hi << 1 };
            if next.lo & top != 0 {
                next.lo &= !top;
                next = next.sub(lower);
            } else if next.hi & top != 0 {
                next.hi &= !top;
                next = next.add(lower);
            }
            cur = next;
        }
        if cur != Gf3Element::ONE {
            return Err(Error::Inconsistent("pi^(3^m-1) != 1".into()));
        }

        let mut ctx = FieldCtx {
            m,
            modulus,
            order,
            exp,
            log: vec![NO_LOG; size],
            trace: vec![0; size],
            trace_by_log: vec![0; n],
            mask_value,
        };
        for k in 0..n {
            let idx = ctx.index(ctx.exp[k]);
            if ctx.log[idx] != NO_LOG {
                return Err(Error::Inconsistent(format!("pi^{k} repeats an earlier power")));
            }
            ctx.log[idx] = k as u32;
        }
        let frob_steps = (0..m).map(|i| 3u64.pow(i) % order).collect::<Vec<_>>();
        for k in 0..n {
            let sum = frob_steps.iter().fold(Gf3Element::ZERO, |acc, &step| {
                acc.add(ctx.exp[((k as u64 * step) % order) as usize])
            });
            let t = sum
                .as_base_trit()
                .ok_or_else(|| Error::Inconsistent(format!("trace of pi^{k} not in GF(3)")))?;
            ctx.trace_by_log[k] = t;
            let idx = ctx.index(ctx.exp[k]);
            ctx.trace[idx] = t;
        }
        Ok(ctx)
    }

    /// Extension degree.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// `ell` with `m = 2 ell + 1`.
    pub fn ell(&self) -> u32 {
        (self.m - 1) / 2
    }

    pub fn modulus(&self) -> &TernaryPoly {
        &self.modulus
    }

    /// Multiplicative group order `3^m - 1`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of field elements `3^m`.
    pub fn size(&self) -> usize {
        self.order as usize + 1
    }

    /// The generator, i.e. the class of `x`.
    pub fn pi(&self) -> Gf3Element {
        self.exp[1]
    }

    /// Position of an element in base-3 order: sum of `trit(i) * 3^i`.
    #[inline]
    pub fn index(&self, a: Gf3Element) -> usize {
        (self.mask_value[a.lo as usize] + 2 * self.mask_value[a.hi as usize]) as usize
    }

    /// Inverse of [`FieldCtx::index`].
    pub fn element_at(&self, mut idx: usize) -> Gf3Element {
        let mut e = Gf3Element::ZERO;
        for i in 0..self.m {
            match idx % 3 {
                1 => e.lo |= 1 << i,
                2 => e.hi |= 1 << i,
                _ => {}
            }
            idx /= 3;
        }
        e
    }

    /// All elements in base-3 order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Gf3Element> + '_ {
        (0..self.size()).map(|i| self.element_at(i))
    }

    pub fn contains(&self, a: Gf3Element) -> bool {
        a.lo & a.hi == 0 && (a.lo | a.hi) >> self.m == 0
    }

    /// Canonical length-`m` trit sequence.
    pub fn trits(&self, a: Gf3Element) -> Vec<Trit> {
        (0..self.m as usize).map(|i| a.trit(i)).collect()
    }

    /// Reduces a polynomial modulo the field modulus.
    pub fn element_from_poly(&self, f: &TernaryPoly) -> Gf3Element {
        let r = f.rem(&self.modulus).expect("modulus is nonzero");
        Gf3Element::from_trits(r.coeffs()).expect("remainder has degree < m")
    }

    pub fn element_to_poly(&self, a: Gf3Element) -> TernaryPoly {
        TernaryPoly::new(self.trits(a))
    }

    /// `pi^k` for any `k`, reduced mod `3^m - 1`.
    #[inline]
    pub fn exp(&self, k: u64) -> Gf3Element {
        self.exp[(k % self.order) as usize]
    }

    /// Discrete log base `pi`; `None` at zero.
    #[inline]
    pub fn log(&self, a: Gf3Element) -> Option<u64> {
        match self.log[self.index(a)] {
            NO_LOG => None,
            k => Some(u64::from(k)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Gf3Element, b: Gf3Element) -> Gf3Element {
        match (self.log(a), self.log(b)) {
            (Some(i), Some(j)) => self.exp(i + j),
            _ => Gf3Element::ZERO,
        }
    }

    pub fn inv(&self, a: Gf3Element) -> Result<Gf3Element> {
        let k = self.log(a).ok_or(Error::ZeroInverse)?;
        Ok(self.exp(self.order - k))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Gf3Element, e: u64) -> Gf3Element {
        match self.log(a) {
            Some(k) => {
                let e = e % self.order;
                self.exp(((u128::from(k) * u128::from(e)) % u128::from(self.order)) as u64)
            }
            None if e == 0 => Gf3Element::ONE,
            None => Gf3Element::ZERO,
        }
    }

    /// `a^(3^k)`.
    pub fn frobenius(&self, a: Gf3Element, k: u32) -> Gf3Element {
        self.pow(a, 3u64.pow(k % self.m))
    }

    /// Absolute trace to GF(3).
    #[inline]
    pub fn trace(&self, a: Gf3Element) -> Trit {
        self.trace[self.index(a)]
    }

    /// `tr(pi^k)`.
    #[inline]
    pub fn trace_of_power(&self, k: u64) -> Trit {
        self.trace_by_log[(k % self.order) as usize]
    }

    pub fn is_square(&self, a: Gf3Element) -> Result<bool> {
        let k = self.log(a).ok_or(Error::ZeroInput)?;
        Ok(k % 2 == 0)
    }

    /// `(u, v) = ((3^m + 1) / 2, 2 * 3^ell + 1)`.
    pub fn welch_exponents(&self) -> (u64, u64) {
        welch_exponents(self.m)
    }
}

/// `(u, v) = ((3^m + 1) / 2, 2 * 3^ell + 1)` for odd `m`.
pub fn welch_exponents(m: u32) -> (u64, u64) {
    let ell = (m - 1) / 2;
    (3u64.pow(m).div_ceil(2), 2 * 3u64.pow(ell) + 1)
}
