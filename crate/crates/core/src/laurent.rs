//! Truncated Laurent series `Σ c_s ξ^{−s}` in descending powers of ξ.
//!
//! Only nonnegative exponents are representable. `valid_to` bounds the
//! exponents whose coefficients are trusted; anything beyond it is unknown.

use crate::combinatorics::Algebra;
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `valid_to` of a series that is exact in every order.
pub const EXACT: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries {
    terms: BTreeMap<usize, Complex64>,
    valid_to: usize,
}

impl LaurentSeries {
    /// Builds a series, discarding zero coefficients and exponents above `valid_to`.
    pub fn new(terms: impl IntoIterator<Item = (usize, Complex64)>, valid_to: usize) -> Self {
        let mut map = BTreeMap::new();
        for (s, c) in terms {
            if s <= valid_to {
                *map.entry(s).or_insert(Complex64::new(0.0, 0.0)) += c;
            }
        }
        map.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        Self { terms: map, valid_to }
    }

    pub fn zero_to(valid_to: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            valid_to,
        }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new([(0, c)], EXACT)
    }

    /// Exact monomial `c·ξ^{−s}`.
    pub fn monomial(c: Complex64, s: usize) -> Self {
        Self::new([(s, c)], EXACT)
    }

    pub fn valid_to(&self) -> usize {
        self.valid_to
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn coeff(&self, s: usize) -> Complex64 {
        self.terms.get(&s).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; for a zero series, the
    /// first untrusted order `valid_to + 1`.
    pub fn min_exponent(&self) -> usize {
        self.terms
            .keys()
            .next()
            .copied()
            .unwrap_or(self.valid_to.saturating_add(1))
    }

    /// Lowers `valid_to` to at most `order`, dropping the terms above it.
    pub fn truncate(&self, order: usize) -> Self {
        let valid_to = self.valid_to.min(order);
        Self::new(self.terms(), valid_to)
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn differentiate(&self) -> Self {
        Self::new(
            self.terms().map(|(s, c)| (s + 1, c * -(s as f64))),
            self.valid_to.saturating_add(1),
        )
    }

    /// `∫_ξ^∞ a(t) dt` along any ray; requires every term to decay like `t^{−2}` or faster.
    pub fn ray_tail_integral(&self) -> Result<Self> {
        if let Some((&s, _)) = self.terms.iter().find(|(&s, _)| s <= 1) {
            return Err(Error::NonIntegrableTerm { exp: s });
        }
        let valid_to = if self.valid_to == EXACT {
            EXACT
        } else {
            self.valid_to.saturating_sub(1)
        };
        Ok(Self::new(
            self.terms().map(|(s, c)| (s - 1, c / (s - 1) as f64)),
            valid_to,
        ))
    }

    /// Sums from the highest exponent down.
    pub fn evaluate(&self, xi: Complex64) -> Result<Complex64> {
        if xi == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroPoint);
        }
        let inv = xi.inv();
        Ok(self
            .terms
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (&s, &c)| acc + c * inv.powu(s as u32)))
    }
}

impl Algebra for LaurentSeries {
    fn zero() -> Self {
        Self::zero_to(EXACT)
    }

    fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    fn add(&self, other: &Self) -> Self {
        let valid_to = self.valid_to.min(other.valid_to);
        Self::new(self.terms().chain(other.terms()), valid_to)
    }

    fn mul(&self, other: &Self) -> Self {
        let valid_to = self
            .valid_to
            .saturating_add(other.min_exponent())
            .min(other.valid_to.saturating_add(self.min_exponent()));
        let mut out: BTreeMap<usize, Complex64> = BTreeMap::new();
        for (&s, &a) in &self.terms {
            for (&t, &b) in &other.terms {
                if s + t > valid_to {
                    break;
                }
                *out.entry(s + t).or_default() += a * b;
            }
        }
        Self::new(out, valid_to)
    }

    fn scale(&self, c: Complex64) -> Self {
        Self::new(self.terms().map(|(s, a)| (s, a * c)), self.valid_to)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    valid_to: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for LaurentSeries {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            valid_to: self.valid_to,
            terms: self
                .terms()
                .map(|(exp, c)| TermRepr {
                    exp,
                    re: c.re,
                    im: c.im,
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentSeries {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(de)?;
        if let Some(t) = repr.terms.iter().find(|t| t.exp > repr.valid_to) {
            return Err(serde::de::Error::custom(format!(
                "term exponent {} exceeds valid_to {}",
                t.exp, repr.valid_to
            )));
        }
        Ok(Self::new(
            repr.terms.into_iter().map(|t| (t.exp, Complex64::new(t.re, t.im))),
            repr.valid_to,
        ))
    }
}
