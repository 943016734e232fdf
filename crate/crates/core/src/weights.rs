//! Exact non-negative vertex weights.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Renders a rational as `p/q`, keeping the denominator even when it is 1.
pub fn ratio_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_ratio<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ratio_string(r))
}

/// Parses an integer, a `p/q` fraction or a terminating decimal exactly.
pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty number".into());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| format!("bad numerator in {t:?}"))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| format!("bad denominator in {t:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {t:?}"));
        }
        return Ok(Rational::new(p, q));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("not a number: {t:?}"));
    }
    let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(format!("not a number: {t:?}"));
    }
    let all: String = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(&all).map_err(|_| format!("not a number: {t:?}"))?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    let r = Rational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

/// The vertex weight function `w`, one exact non-negative rational per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        for (vertex, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::NegativeWeight { vertex, value: ratio_string(w) });
            }
        }
        Ok(Self { weights })
    }

    pub fn from_integers<I: IntoIterator<Item = u64>>(values: I) -> Self {
        Self {
            weights: values
                .into_iter()
                .map(|v| Rational::from_integer(BigInt::from(v)))
                .collect(),
        }
    }

    pub fn uniform(n: usize, value: u64) -> Self {
        Self::from_integers(std::iter::repeat_n(value, n))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.weights.iter()
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    pub fn block_weight(&self, block: &[usize]) -> Rational {
        block.iter().fold(Rational::zero(), |acc, &v| acc + &self.weights[v])
    }

    /// Vertex indices sorted by weight descending, index ascending on ties.
    pub fn descending_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.weights[b].cmp(&self.weights[a]).then(a.cmp(&b)));
        order
    }

    /// Returns a new vector with `perm[i]` receiving weight `i`'s value, i.e.
    /// `out[perm[i]] = self[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = vec![Rational::zero(); self.len()];
        for (i, &target) in perm.iter().enumerate() {
            out[target] = self.weights[i].clone();
        }
        Self { weights: out }
    }

    pub fn scale(&self, factor: &Rational) -> Result<Self> {
        Self::new(self.weights.iter().map(|w| w * factor).collect())
    }

    /// Integer images of the weights after multiplying by the LCM of all
    /// denominators. Returns `(scaled, lcm)`.
    pub fn scaled_integers(&self) -> (Vec<BigInt>, BigInt) {
        let lcm = self
            .weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scaled = self
            .weights
            .iter()
            .map(|w| (w * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        (scaled, lcm)
    }

    /// Parses the weight file format: one weight per line (integer, `p/q` or
    /// terminating decimal). Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut weights = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let w = parse_rational(line).map_err(|msg| Error::Parse { line: i + 1, msg })?;
            if w.is_negative() {
                return Err(Error::Parse { line: i + 1, msg: format!("negative weight {line}") });
            }
            weights.push(w);
        }
        Self::new(weights)
    }

    pub fn to_text(&self) -> String {
        self.weights.iter().map(|w| format!("{w}\n")).collect()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.weights.iter().map(ratio_string))
    }
}
