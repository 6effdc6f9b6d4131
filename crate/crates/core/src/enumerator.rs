//! Exact weight enumerators and the MacWilliams transform.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::error::{Error, Result};

/// Map from Hamming weight to codeword count for a code of length `n`.
/// Weights with zero count are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
    total: BigUint,
}

impl WeightEnumerator {
    pub fn new(n: usize) -> Self {
        WeightEnumerator { n, counts: BTreeMap::new(), total: BigUint::zero() }
    }

    pub fn from_counts<I, C>(n: usize, counts: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigUint>,
    {
        let mut e = WeightEnumerator::new(n);
        for (w, c) in counts {
            e.add(w, c.into());
        }
        e
    }

    pub fn add(&mut self, weight: usize, count: BigUint) {
        assert!(weight <= self.n, "weight {weight} exceeds length {}", self.n);
        if count.is_zero() {
            return;
        }
        self.total += &count;
        *self.counts.entry(weight).or_default() += count;
    }

    /// Adds every count of `other` (same length) into `self`.
    pub fn merge(&mut self, other: &WeightEnumerator) {
        assert_eq!(self.n, other.n);
        for (&w, c) in &other.counts {
            self.add(w, c.clone());
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn count(&self, weight: usize) -> BigUint {
        self.counts.get(&weight).cloned().unwrap_or_default()
    }

    /// Count as `u64`; panics if it does not fit.
    pub fn count_u64(&self, weight: usize) -> u64 {
        self.count(weight).to_u64().expect("count fits in u64")
    }

    /// Nonzero entries in increasing weight order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    /// Weights with nonzero count.
    pub fn support(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    /// `sum_w w * A_w`.
    pub fn first_moment(&self) -> BigUint {
        self.counts.iter().map(|(&w, c)| BigUint::from(w) * c).sum()
    }

    /// Smallest nonzero weight, if any codeword besides zero exists.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// Renders `1 + 2420z^144 + ...`.
    pub fn to_polynomial_string(&self) -> String {
        self.counts
            .iter()
            .map(|(&w, c)| if w == 0 { c.to_string() } else { format!("{c}z^{w}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses the JSON object produced by serialization. Counts may be JSON
    /// numbers or decimal strings.
    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let bad = || Error::Parse(v.to_string());
        let n = v.get("n").and_then(|x| x.as_u64()).ok_or_else(bad)? as usize;
        let counts = v.get("counts").and_then(|x| x.as_object()).ok_or_else(bad)?;
        let mut e = WeightEnumerator::new(n);
        for (w, c) in counts {
            let w: usize = w.parse().map_err(|_| bad())?;
            if w > n {
                return Err(bad());
            }
            let digits = match c {
                serde_json::Value::Number(num) => num.to_string(),
                serde_json::Value::String(s) => s.clone(),
                _ => return Err(bad()),
            };
            e.add(w, digits.parse::<BigUint>().map_err(|_| bad())?);
        }
        Ok(e)
    }
}

fn raw_number(x: &BigUint) -> Box<RawValue> {
    RawValue::from_string(x.to_string()).expect("decimal digits are valid JSON")
}

struct Counts<'a>(&'a BTreeMap<usize, BigUint>);

impl Serialize for Counts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (w, c) in self.0 {
            map.serialize_entry(&w.to_string(), &raw_number(c))?;
        }
        map.end()
    }
}

/// `{"n": .., "total": .., "counts": {"<weight>": <count>, ..}}` with weights
/// in numeric order and counts as exact integers.
impl Serialize for WeightEnumerator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("total", &raw_number(&self.total))?;
        map.serialize_entry("counts", &Counts(&self.counts))?;
        map.end()
    }
}

/// Krawtchouk values `K_k(x)` for `k = 0..=kmax`, by the three-term
/// recurrence in `k`.
fn krawtchouk_column(n: usize, q: u64, x: usize, kmax: usize) -> Vec<BigInt> {
    let q = BigInt::from(q);
    let q1 = &q - 1;
    let nn = BigInt::from(n);
    let xx = BigInt::from(x);
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(BigInt::one());
    if kmax == 0 {
        return out;
    }
    out.push(&q1 * &nn - &q * &xx);
    for k in 1..kmax {
        let kk = BigInt::from(k);
        let lhs: BigInt = (&kk + &q1 * (&nn - &kk) - &q * &xx) * &out[k]
            - &q1 * (&nn - &kk + 1u32) * &out[k - 1];
        let (quot, rem) = lhs.div_rem(&(&kk + 1u32));
        debug_assert!(rem.is_zero());
        out.push(quot);
    }
    out
}

/// Weight enumerator of the dual code, for weights `0..=wmax` only.
pub fn macwilliams_prefix(
    input: &WeightEnumerator,
    q: u64,
    wmax: usize,
) -> Result<WeightEnumerator> {
    let n = input.n;
    let wmax = wmax.min(n);
    if input.total.is_zero() {
        return Err(Error::NonIntegerOutput(0));
    }
    let mut sums = vec![BigInt::zero(); wmax + 1];
    for (&i, a) in &input.counts {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (w, kv) in krawtchouk_column(n, q, i, wmax).into_iter().enumerate() {
            sums[w] += &a * kv;
        }
    }
    let size = BigInt::from_biguint(Sign::Plus, input.total.clone());
    let mut out = WeightEnumerator::new(n);
    for (w, s) in sums.into_iter().enumerate() {
        let (quot, rem) = s.div_rem(&size);
        if !rem.is_zero() || quot.sign() == Sign::Minus {
            return Err(Error::NonIntegerOutput(w));
        }
        out.add(w, quot.to_biguint().expect("nonnegative"));
    }
    Ok(out)
}

/// Weight enumerator of the dual of a linear code of length `n` over GF(q),
/// via `B_w = |C|^-1 sum_i A_i K_w(i)`.
pub fn macwilliams(input: &WeightEnumerator, q: u64) -> Result<WeightEnumerator> {
    macwilliams_prefix(input, q, input.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> BigUint {
        (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn zero_code_transforms_to_full_space() {
        let n = 12;
        let zero = WeightEnumerator::from_counts(n, [(0, 1u32)]);
        let full = macwilliams(&zero, 3).unwrap();
        for w in 0..=n {
            assert_eq!(full.count(w), binom(n as u64, w as u64) * BigUint::from(2u32).pow(w as u32));
        }
        assert_eq!(full.total(), &BigUint::from(3u32).pow(n as u32));
    }

    #[test]
    fn involution() {
        // ternary [4,2,3] tetracode: 1 + 8 z^3
        let tetra = WeightEnumerator::from_counts(4, [(0, 1u32), (3, 8)]);
        let dual = macwilliams(&tetra, 3).unwrap();
        assert_eq!(dual, tetra, "tetracode is self-dual");
        let e = WeightEnumerator::from_counts(26, [(0, 1u32), (15, 312), (18, 260), (21, 156)]);
        assert_eq!(macwilliams(&macwilliams(&e, 3).unwrap(), 3).unwrap(), e);
    }

    #[test]
    fn rejects_invalid_input() {
        let bogus = WeightEnumerator::from_counts(5, [(0, 1u32), (1, 1)]);
        assert!(matches!(macwilliams(&bogus, 3), Err(Error::NonIntegerOutput(_))));
    }

    #[test]
    fn prefix_matches_full() {
        let e = WeightEnumerator::from_counts(26, [(0, 1u32), (15, 312), (18, 260), (21, 156)]);
        let full = macwilliams(&e, 3).unwrap();
        let prefix = macwilliams_prefix(&e, 3, 6).unwrap();
        for w in 0..=6 {
            assert_eq!(full.count(w), prefix.count(w));
        }
    }

    #[test]
    fn json_shape() {
        let e = WeightEnumerator::from_counts(26, [(21, 156u32), (0, 1), (15, 312), (18, 260)]);
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(
            s,
            r#"{"n":26,"total":729,"counts":{"0":1,"15":312,"18":260,"21":156}}"#
        );
        let back = WeightEnumerator::from_json_value(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, e);
        assert_eq!(e.to_polynomial_string(), "1 + 312z^15 + 260z^18 + 156z^21");
    }
}
