//! Potential tables `ψ_{k,m}(ξ)` and the closed-form nth-order Airy family.

use crate::combinatorics::{binomial_f64, partial_bell, pochhammer};
use crate::error::{Error, Result};
use crate::laurent::{LaurentSeries, EXACT};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Order `n`, decay exponent `ρ` and the Laurent table `ψ_{k,m}` for
/// `0 ≤ k ≤ n−2`, `1 ≤ m ≤ max_order`. Absent entries are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSpec {
    pub n: usize,
    pub rho: f64,
    pub max_order: usize,
    psi: BTreeMap<(usize, usize), LaurentSeries>,
}

impl PotentialSpec {
    pub fn new(n: usize, max_order: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("order n = {n} must be at least 2")));
        }
        Ok(Self {
            n,
            rho: 1.0,
            max_order,
            psi: BTreeMap::new(),
        })
    }

    pub fn with_rho(mut self, rho: f64) -> Self {
        self.rho = rho;
        self
    }

    /// Stores `ψ_{k,m}`; zero series are not stored.
    pub fn set(&mut self, k: usize, m: usize, series: LaurentSeries) -> Result<()> {
        if k + 2 > self.n {
            return Err(Error::Precondition(format!("k = {k} exceeds n - 2 = {}", self.n - 2)));
        }
        if m == 0 || m > self.max_order {
            return Err(Error::Precondition(format!("m = {m} outside 1..={}", self.max_order)));
        }
        if series.is_empty() {
            self.psi.remove(&(k, m));
        } else {
            self.psi.insert((k, m), series);
        }
        Ok(())
    }

    pub fn psi(&self, k: usize, m: usize) -> LaurentSeries {
        self.psi
            .get(&(k, m))
            .cloned()
            .unwrap_or_else(|| LaurentSeries::zero_to(EXACT))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &LaurentSeries)> {
        self.psi.iter().map(|(&key, s)| (key, s))
    }
}

/// Monomial coefficient of `ψ_{k,n−k}` for the Airy-type family.
pub fn airy_coefficient(n: usize, k: usize) -> f64 {
    let nf = n as f64;
    let shift = Complex64::new(0.5 - 0.5 / nf, 0.0);
    let args: Vec<Complex64> = (0..=n).map(|i| pochhammer(Complex64::new(-1.0 / nf, 0.0), i)).collect();
    let mut sum = Complex64::new(0.0, 0.0);
    for p in k..=n {
        let bell = partial_bell(p, k, &args).expect("argument list covers p - k + 1 entries");
        sum += binomial_f64(n, p) * pochhammer(shift, n - p) * bell;
    }
    -(-nf / (nf + 1.0)).powi((n - k) as i32) * sum.re
}

/// The potentials of `(−dⁿ/dzⁿ + uⁿz) w = 0` after the Liouville-type change of
/// variables; only `ψ_{k,n−k}` is nonzero. Entries with `n−k > M` are omitted.
pub fn airy_family(n: usize, max_order: usize) -> Result<PotentialSpec> {
    let mut spec = PotentialSpec::new(n, max_order)?;
    for k in 0..=n - 2 {
        let m = n - k;
        if m <= max_order {
            let c = Complex64::new(airy_coefficient(n, k), 0.0);
            spec.set(k, m, LaurentSeries::monomial(c, m))?;
        }
    }
    Ok(spec)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntryReport {
    pub k: usize,
    pub m: usize,
    pub min_exponent: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub entries: Vec<EntryReport>,
    pub violations: Vec<EntryReport>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every stored `ψ_{k,m}` must decay at least like `ξ^{−2}`.
pub fn validate(spec: &PotentialSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    for ((k, m), series) in spec.entries() {
        let entry = EntryReport {
            k,
            m,
            min_exponent: series.min_exponent(),
        };
        if entry.min_exponent < 2 {
            report.violations.push(entry.clone());
        }
        report.entries.push(entry);
    }
    report
}

#[derive(Serialize, Deserialize)]
struct PsiEntry {
    k: usize,
    m: usize,
    series: LaurentSeries,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    n: usize,
    rho: f64,
    max_order: usize,
    psi: Vec<PsiEntry>,
}

impl Serialize for PotentialSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        SpecRepr {
            n: self.n,
            rho: self.rho,
            max_order: self.max_order,
            psi: self
                .entries()
                .map(|((k, m), s)| PsiEntry {
                    k,
                    m,
                    series: s.clone(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for PotentialSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = SpecRepr::deserialize(de)?;
        let mut spec = PotentialSpec::new(repr.n, repr.max_order)
            .map_err(serde::de::Error::custom)?
            .with_rho(repr.rho);
        for e in repr.psi {
            spec.set(e.k, e.m, e.series).map_err(serde::de::Error::custom)?;
        }
        Ok(spec)
    }
}
