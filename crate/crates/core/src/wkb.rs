//! Exponent `X_j`, the coefficient recurrence for `A_{j,m}`, and empirical
//! Gevrey diagnostics of the resulting series.

use crate::combinatorics::{binomial_f64, complete_bell_table, Algebra};
use crate::error::{Error, Result};
use crate::frak_a::frak_a;
use crate::laurent::LaurentSeries;
use crate::phase::unit_root;
use crate::potential::{validate, PotentialSpec};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableMeta {
    /// FNV-1a digest of the potential's JSON encoding.
    pub spec_hash: String,
    pub budget: usize,
}

/// `A_{j,0..=M}` together with `X_j`; `A[0]` is the constant 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub j: usize,
    pub n: usize,
    #[serde(rename = "M")]
    pub order: usize,
    #[serde(rename = "X")]
    pub x: LaurentSeries,
    #[serde(rename = "A")]
    pub a: Vec<LaurentSeries>,
    pub meta: TableMeta,
}

impl CoefficientTable {
    /// `A_{j,m}(ξ)`.
    pub fn value(&self, m: usize, xi: Complex64) -> Result<Complex64> {
        let series = self.a.get(m).ok_or(Error::OrderOverflow {
            requested: m,
            available: self.order,
        })?;
        series.evaluate(xi)
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

pub fn spec_hash(spec: &PotentialSpec) -> String {
    let text = serde_json::to_string(spec).expect("potential serializes");
    format!("{:016x}", fnv1a(text.as_bytes()))
}

fn check_spec(spec: &PotentialSpec, j: usize) -> Result<()> {
    if j >= spec.n {
        return Err(Error::IndexOutOfRange { index: j, n: spec.n });
    }
    let report = validate(spec);
    if let Some(bad) = report.violations.first() {
        return Err(Error::NonIntegrableTerm { exp: bad.min_exponent });
    }
    Ok(())
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `X_j(ξ) = −(1/n) ∫_ξ^∞ Σ_k e^{2πij(k+1)/n} ψ_{k,1}(t) dt`.
pub fn compute_x(spec: &PotentialSpec, j: usize) -> Result<LaurentSeries> {
    check_spec(spec, j)?;
    let n = spec.n;
    let mut integrand = LaurentSeries::zero();
    for k in 0..=n - 2 {
        let psi = spec.psi(k, 1);
        if !psi.is_zero() {
            integrand = integrand.add(&psi.scale(unit_root((j * (k + 1)) as i64, n)));
        }
    }
    Ok(integrand.ray_tail_integral()?.scale(real(-1.0 / n as f64)))
}

/// Successive derivatives `a, a′, …, a^{(count−1)}`.
fn derivatives(a: &LaurentSeries, count: usize) -> Vec<LaurentSeries> {
    let mut out = Vec::with_capacity(count);
    let mut cur = a.clone();
    for _ in 0..count {
        let next = cur.differentiate();
        out.push(cur);
        cur = next;
    }
    out
}

/// Runs the tail-integral recurrence for `A_{j,1..=M}`.
///
/// Every input series is truncated to `budget`, which must leave headroom of
/// at least `M + n + 4` orders.
pub fn compute_coefficients(spec: &PotentialSpec, j: usize, order: usize, budget: usize) -> Result<CoefficientTable> {
    let n = spec.n;
    if order < 1 {
        return Err(Error::Precondition("at least one coefficient must be requested".into()));
    }
    if budget < order + n + 4 {
        return Err(Error::Precondition(format!(
            "budget {budget} below required headroom {}",
            order + n + 4
        )));
    }
    check_spec(spec, j)?;

    let psi = |k: usize, m: usize| -> LaurentSeries {
        if m > spec.max_order {
            LaurentSeries::zero()
        } else {
            spec.psi(k, m).truncate(budget)
        }
    };
    let inv_n = 1.0 / n as f64;
    let phase = |e: usize| unit_root((j * e) as i64, n);

    let x = compute_x(spec, j)?.truncate(budget);
    let x_derivs: Vec<LaurentSeries> = derivatives(&x, n + 1).into_iter().skip(1).collect();
    let bell = complete_bell_table(n, &x_derivs)?;
    let psi1: Vec<LaurentSeries> = (0..=n - 2).map(|k| psi(k, 1)).collect();

    // da[q][r] = d^r A_{j,q} / dξ^r for r ≤ n
    let mut a = vec![LaurentSeries::one()];
    let mut da = vec![derivatives(&a[0], n + 1)];

    for m in 1..=order {
        let mut integrand = LaurentSeries::zero();
        let mut accumulate = |coef: Complex64, bell_index: usize, factor: &LaurentSeries, deriv: &LaurentSeries| {
            let b = &bell[bell_index];
            if b.is_zero() || factor.is_zero() || deriv.is_zero() {
                return;
            }
            let term = b.mul(factor).mul(deriv).scale(coef);
            integrand = integrand.add(&term);
        };

        let one = LaurentSeries::one();
        for p in 2..=n.min(m + 1) {
            let outer = binomial_f64(n, p) * inv_n * phase(n - p + 1);
            for r in 0..=p {
                let coef = outer * binomial_f64(p, r);
                accumulate(coef, p - r, &one, &da[m + 1 - p][r]);
            }
        }
        for k in 0..=n - 2 {
            for p in 1..=m.min(k) {
                let outer = -binomial_f64(k, p) * inv_n * phase(k - p + 1);
                for r in 0..=p {
                    let coef = outer * binomial_f64(p, r);
                    accumulate(coef, p - r, &psi1[k], &da[m - p][r]);
                }
            }
        }
        for k in 0..=n - 2 {
            for q in 0..m {
                let potential = psi(k, m - q + 1);
                if potential.is_zero() {
                    continue;
                }
                for p in 0..=k.min(q) {
                    let outer = -binomial_f64(k, p) * inv_n * phase(k - p + 1);
                    for r in 0..=p {
                        let coef = outer * binomial_f64(p, r);
                        accumulate(coef, p - r, &potential, &da[q - p][r]);
                    }
                }
            }
        }

        let am = integrand.ray_tail_integral()?.truncate(budget);
        if am.valid_to() < m {
            return Err(Error::TruncationExhausted {
                order: m,
                valid_to: am.valid_to(),
            });
        }
        da.push(derivatives(&am, n + 1));
        a.push(am);
    }

    Ok(CoefficientTable {
        j,
        n,
        order,
        x,
        a,
        meta: TableMeta {
            spec_hash: spec_hash(spec),
            budget,
        },
    })
}

/// Default truncation budget for `M` coefficients of an order-`n` equation.
pub fn default_budget(n: usize, order: usize) -> usize {
    order + n + 4
}

/// Growth diagnostics of `b_m = A_{m+1}(ξ)/m!`.
#[derive(Debug, Clone, PartialEq)]
pub struct GevreyReport {
    /// `|A_{m+1}(ξ)/A_m(ξ)|/(m+1)` for `m ≥ 1`.
    pub ratios: Vec<f64>,
    /// Estimated distance from the origin to the nearest Borel-plane singularity.
    pub radius: f64,
    /// Fitted power-law exponent of the envelope `|b_m| ≈ C·m^β·R^{−m}`.
    pub power: f64,
    /// Indices of `b_m` used in the envelope fit.
    pub envelope: Vec<usize>,
    /// Guaranteed convergence radius `𝔞ₙ·d`.
    pub guaranteed_radius: f64,
    pub super_factorial: bool,
}

/// Least-squares fit of `log|b_m|` over the given columns; returns the coefficients.
fn envelope_fit(log_b: &[f64], idx: &[usize], with_superlinear: bool) -> Option<Vec<f64>> {
    let cols = if with_superlinear { 4 } else { 3 };
    if idx.len() < cols {
        return None;
    }
    let design = DMatrix::from_fn(idx.len(), cols, |row, col| {
        let m = idx[row] as f64;
        match col {
            0 => 1.0,
            1 => (m + 1.0).ln(),
            2 => m,
            _ => m * (m + 1.0).ln(),
        }
    });
    let rhs = DVector::from_iterator(idx.len(), idx.iter().map(|&i| log_b[i]));
    let sol = design.svd(true, true).solve(&rhs, 1e-12).ok()?;
    Some(sol.iter().copied().collect())
}

/// Estimates the Borel radius from the coefficient envelope.
///
/// For `n ≥ 3` the nearest singularities come in conjugate pairs and `|b_m|`
/// oscillates, so the fit uses the local maxima of `log|b_m|` in the upper
/// three quarters of the sequence.
pub fn gevrey_diagnostics(table: &CoefficientTable, xi: Complex64, d: f64) -> Result<GevreyReport> {
    if table.order < 5 {
        return Err(Error::Precondition("at least five coefficients are required".into()));
    }
    let values: Vec<Complex64> = (0..=table.order).map(|m| table.value(m, xi)).collect::<Result<_>>()?;
    if values[1..].iter().all(|v| v.norm() == 0.0) {
        return Err(Error::Degenerate);
    }
    let mut log_fact = 0.0;
    let mut log_b = Vec::with_capacity(table.order);
    for m in 0..table.order {
        if m > 0 {
            log_fact += (m as f64).ln();
        }
        log_b.push(values[m + 1].norm().ln() - log_fact);
    }
    let ratios = (1..table.order)
        .map(|m| (values[m + 1] / values[m]).norm() / (m + 1) as f64)
        .collect();

    let count = log_b.len();
    let finite = |i: usize| log_b[i].is_finite();
    let mut envelope: Vec<usize> = (count / 4..count - 1)
        .filter(|&i| i > 0 && finite(i) && log_b[i] >= log_b[i - 1] && log_b[i] >= log_b[i + 1])
        .collect();
    if envelope.len() < 3 {
        envelope = (count / 2..count).filter(|&i| finite(i)).collect();
    }
    let fit = envelope_fit(&log_b, &envelope, false).ok_or(Error::Degenerate)?;
    let radius = (-fit[2]).exp();
    let super_factorial = envelope_fit(&log_b, &envelope, true)
        .map(|c| c[3] > 0.5)
        .unwrap_or(false);

    Ok(GevreyReport {
        ratios,
        radius,
        power: fit[1],
        envelope,
        guaranteed_radius: frak_a(table.n).value * d,
        super_factorial,
    })
}
