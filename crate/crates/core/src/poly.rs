//! Polynomials over GF(3) in ascending coefficient order.
//!
//! The text form used by fixtures, JSON and the command line is the ascending
//! coefficient list joined by commas: `x^5 + 2x + 1` is `"1,2,0,0,0,1"`. The
//! zero polynomial is written `"0"`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of GF(3) stored as 0, 1 or 2.
pub type Trit = u8;

#[inline]
pub(crate) fn trit_add(a: Trit, b: Trit) -> Trit {
    (a + b) % 3
}

#[inline]
pub(crate) fn trit_neg(a: Trit) -> Trit {
    (3 - a) % 3
}

#[inline]
pub(crate) fn trit_mul(a: Trit, b: Trit) -> Trit {
    (a * b) % 3
}

/// Polynomial over GF(3). Trailing zeros are never stored, so two polynomials
/// are equal exactly when their coefficient vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TernaryPoly {
    coeffs: Vec<Trit>,
}

impl TernaryPoly {
    /// Builds a polynomial from ascending coefficients, reducing each mod 3.
    pub fn new(coeffs: impl Into<Vec<u8>>) -> Self {
        let mut coeffs: Vec<Trit> = coeffs.into();
        for c in coeffs.iter_mut() {
            *c %= 3;
        }
        let mut p = TernaryPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        TernaryPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TernaryPoly { coeffs: vec![1] }
    }

    /// `c * x^degree`.
    pub fn monomial(degree: usize, c: Trit) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c % 3;
        TernaryPoly::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 2;
        coeffs[n] = 1;
        TernaryPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Trit] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Trit {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> Trit {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &TernaryPoly) -> TernaryPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| trit_add(self.coeff(i), other.coeff(i)))
            .collect::<Vec<_>>();
        TernaryPoly::new(coeffs)
    }

    pub fn sub(&self, other: &TernaryPoly) -> TernaryPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| trit_add(self.coeff(i), trit_neg(other.coeff(i))))
            .collect::<Vec<_>>();
        TernaryPoly::new(coeffs)
    }

    pub fn scale(&self, c: Trit) -> TernaryPoly {
        TernaryPoly::new(self.coeffs.iter().map(|&a| trit_mul(a, c % 3)).collect::<Vec<_>>())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &TernaryPoly) -> TernaryPoly {
        if self.is_zero() || other.is_zero() {
            return TernaryPoly::zero();
        }
        let mut acc = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += u32::from(a * b);
            }
        }
        TernaryPoly::new(acc.into_iter().map(|c| (c % 3) as u8).collect::<Vec<_>>())
    }

    /// Quotient and remainder of long division by `divisor`.
    pub fn div_rem(&self, divisor: &TernaryPoly) -> Result<(TernaryPoly, TernaryPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let Some(sd) = self.degree() else {
            return Ok((TernaryPoly::zero(), TernaryPoly::zero()));
        };
        if sd < dd {
            return Ok((TernaryPoly::zero(), self.clone()));
        }
        // 1 and 2 are their own inverses in GF(3).
        let lead_inv = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; sd - dd + 1];
        for shift in (0..=sd - dd).rev() {
            let c = rem[shift + dd];
            if c == 0 {
                continue;
            }
            let q = trit_mul(c, lead_inv);
            quot[shift] = q;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = trit_add(rem[shift + i], trit_neg(trit_mul(q, d)));
            }
        }
        rem.truncate(dd);
        Ok((TernaryPoly::new(quot), TernaryPoly::new(rem)))
    }

    /// Remainder of division by `divisor`.
    pub fn rem(&self, divisor: &TernaryPoly) -> Result<TernaryPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &TernaryPoly) -> Result<TernaryPoly> {
        let mut base = self.rem(modulus)?;
        let mut acc = TernaryPoly::one().rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over GF(3) by trial division with every monic
    /// polynomial of degree at most half the degree. Constants are not
    /// irreducible.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = 3usize.pow(d as u32);
            for tail in 0..count {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut t = tail;
                for _ in 0..d {
                    coeffs.push((t % 3) as u8);
                    t /= 3;
                }
                coeffs.push(1);
                let divisor = TernaryPoly { coeffs };
                if self.rem(&divisor).map(|r| r.is_zero()).unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }

    /// Ascending comma-separated trit list.
    pub fn to_trit_list(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Product of two polynomials.
pub fn poly_mul(f: &TernaryPoly, g: &TernaryPoly) -> TernaryPoly {
    f.mul(g)
}

/// Remainder of `f` divided by `g`.
pub fn poly_mod(f: &TernaryPoly, g: &TernaryPoly) -> Result<TernaryPoly> {
    f.rem(g)
}

impl FromStr for TernaryPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse(s.to_string()));
        }
        let coeffs = trimmed
            .split(',')
            .map(|tok| match tok.trim() {
                "0" => Ok(0),
                "1" => Ok(1),
                "2" => Ok(2),
                _ => Err(Error::Parse(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(TernaryPoly::new(coeffs))
    }
}

impl fmt::Display for TernaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let lead = if c == 2 { "2" } else { "" };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{lead}x")?,
                _ => write!(f, "{lead}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryPoly({self})")
    }
}

impl serde::Serialize for TernaryPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_trit_list())
    }
}

impl<'de> serde::Deserialize<'de> for TernaryPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
