//! Independent ground truth for the Airy-type equation `y⁽ⁿ⁾ = x·y`:
//! exact Perron coefficients and saddle-point quadrature of the integral
//! representation.

use crate::error::{Error, Result};
use crate::geometry::SheetPoint;
use crate::potential::airy_family;
use crate::quadrature::{adaptive, Tolerance};
use crate::summation::{self, Method, QuadConfig, SummationResult};
use crate::wkb::{compute_coefficients, default_budget};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

/// Steepest-descent coefficients `a_0, …, a_M` of the Airy-type integral.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronTable {
    pub n: usize,
    pub exact: Vec<BigRational>,
    pub a: Vec<f64>,
}

type Series = Vec<BigRational>;

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn series_mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![BigRational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1/a` for `a(0) ≠ 0`.
fn series_inv(a: &Series, len: usize) -> Series {
    let mut out = vec![BigRational::zero(); len];
    out[0] = a[0].recip();
    for k in 1..len {
        let mut acc = BigRational::zero();
        for i in 1..=k.min(a.len() - 1) {
            acc += &a[i] * &out[k - i];
        }
        out[k] = -acc * &out[0];
    }
    out
}

/// `log a` for `a(0) = 1`, via `(log a)′ = a′/a`.
fn series_log(a: &Series, len: usize) -> Series {
    let deriv: Series = (1..len)
        .map(|i| a.get(i).cloned().unwrap_or_default() * rat(i as i64))
        .collect();
    let quotient = series_mul(&deriv, &series_inv(a, len), len);
    let mut out = vec![BigRational::zero(); len];
    for i in 1..len {
        out[i] = &quotient[i - 1] / rat(i as i64);
    }
    out
}

/// `exp s` for `s(0) = 0`, via `E′ = s′E`.
fn series_exp(s: &Series, len: usize) -> Series {
    let mut out = vec![BigRational::zero(); len];
    out[0] = BigRational::one();
    for k in 1..len {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            if !s[i].is_zero() {
                acc += &s[i] * &out[k - i] * rat(i as i64);
            }
        }
        out[k] = acc / rat(k as i64);
    }
    out
}

/// Exact Perron coefficients from a power series in `x = s − 1` of depth `depth`.
pub fn perron_coeff_with_depth(n: usize, order: usize, depth: usize) -> Result<PerronTable> {
    if n < 2 {
        return Err(Error::Precondition(format!("order n = {n} must be at least 2")));
    }
    let needed = 2 * order + 1;
    if needed > depth {
        return Err(Error::SeriesDepth {
            needed,
            available: depth,
        });
    }
    // s^{n+1} − (n+1)s + n = x² Σ_{i=0}^{n−1} C(n+1, i+2) xⁱ
    let quotient: Series = (0..n)
        .map(|i| {
            let c = crate::combinatorics::binomial((n + 1) as u64, (i + 2) as u64);
            BigRational::from_integer(BigInt::from(c))
        })
        .collect();
    let lead = quotient[0].clone();
    let normalized: Series = quotient.iter().map(|c| c / &lead).collect();
    // log h = −log(q/q(0)), so h(1) = 1
    let log_h: Series = series_log(&normalized, depth).into_iter().map(|c| -c).collect();

    let mut exact = Vec::with_capacity(order + 1);
    let mut fact = BigInt::one();
    let mut two_m_fact = BigInt::one();
    let mut base_pow = BigInt::one();
    for m in 0..=order {
        if m > 0 {
            fact *= m;
            two_m_fact *= (2 * m - 1) * (2 * m);
            base_pow *= 2 * n + 2;
        }
        let len = 2 * m + 1;
        let power = BigRational::new(BigInt::from(2 * m + 1), BigInt::from(2));
        let scaled: Series = log_h[..len].iter().map(|c| c * &power).collect();
        let coeff = series_exp(&scaled, len).pop().expect("len >= 1");
        let factor = BigRational::new(two_m_fact.clone(), &base_pow * &fact);
        exact.push(coeff * factor);
    }
    let a = exact.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    Ok(PerronTable { n, exact, a })
}

pub fn perron_coeff(n: usize, order: usize) -> Result<PerronTable> {
    perron_coeff_with_depth(n, order, 2 * order + 1)
}

/// Margin kept from the ends of the steepest-descent validity sector.
pub const SECTOR_MARGIN: f64 = 0.1;

/// Admissible `arg ζ` interval `(−π/n + δ, (2n+1)π/n − δ)`.
pub fn zeta_sector(n: usize) -> (f64, f64) {
    let nf = n as f64;
    (-PI / nf + SECTOR_MARGIN, (2.0 * nf + 1.0) * PI / nf - SECTOR_MARGIN)
}

fn check_zeta(n: usize, zeta: SheetPoint) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("order n = {n} must be at least 2")));
    }
    if zeta.modulus < 1.0 {
        return Err(Error::Precondition(format!(
            "|ζ| = {} must be at least 1",
            zeta.modulus
        )));
    }
    let (lo, hi) = zeta_sector(n);
    if !(zeta.arg > lo && zeta.arg < hi) {
        return Err(Error::SectorViolation { arg: zeta.arg, lo, hi });
    }
    Ok(())
}

/// How the path through the saddle `s = 1` is laid out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Contour {
    /// Per half, a straight descent ray when it runs out inside the target valley
    /// with `Re(ζg)` increasing, otherwise [`Contour::Polyline`] with the full knee.
    Auto,
    /// Each half leaves the saddle along the descent direction to a knee, then
    /// follows the asymptotic valley direction. The knee sits where `Re(ζg)`
    /// peaks on the descent ray, scaled by `knee_fraction`.
    Polyline { knee_fraction: f64 },
}

/// `g(s) = s^{n+1}/n − (n+1)s/n + 1`, with a double zero at the saddle `s = 1`.
fn phase_fn(n: usize, s: Complex64) -> Complex64 {
    let nf = n as f64;
    s.powu(n as u32 + 1) / nf - s * ((nf + 1.0) / nf) + 1.0
}

/// Level of `Re(ζg)` at which a path is cut; `e^{−45}` is below `1e−19`.
const CUTOFF_LEVEL: f64 = 45.0;
const KNEE_SAMPLES: usize = 300;
const KNEE_SPAN: f64 = 1.5;

struct Half {
    descent: Complex64,
    valley: Complex64,
}

fn halves(n: usize, zeta: SheetPoint) -> [Half; 2] {
    let arg = zeta.arg;
    let nf1 = n as f64 + 1.0;
    // Listed in traversal order: from the valley at angle (2π − arg ζ)/(n+1)
    // into the saddle, then out to the valley at −arg ζ/(n+1).
    [
        Half {
            descent: Complex64::from_polar(1.0, PI - arg / 2.0),
            valley: Complex64::from_polar(1.0, (TAU - arg) / nf1),
        },
        Half {
            descent: Complex64::from_polar(1.0, -arg / 2.0),
            valley: Complex64::from_polar(1.0, -arg / nf1),
        },
    ]
}

fn level(n: usize, zeta: Complex64, s: Complex64) -> f64 {
    (zeta * phase_fn(n, s)).re
}

/// Straight ray from the saddle, or `None` if it does not run out inside the
/// target valley or `Re(ζg)` stops increasing before the cut-off.
fn straight_half(n: usize, zeta: Complex64, half: &Half) -> Option<Vec<Complex64>> {
    // Valleys of e^{−ζs^{n+1}} have half-width π/(2(n+1)) about their centres.
    if (half.descent / half.valley).arg().abs() >= PI / (2.0 * (n as f64 + 1.0)) {
        return None;
    }
    let saddle = Complex64::new(1.0, 0.0);
    let step = 0.01;
    let mut prev = 0.0;
    let mut sigma = 0.0;
    while sigma < 1e4 {
        sigma += step;
        let v = level(n, zeta, saddle + half.descent * sigma);
        if v < prev {
            return None;
        }
        if v > CUTOFF_LEVEL {
            return Some(vec![saddle, saddle + half.descent * sigma]);
        }
        prev = v;
    }
    None
}

fn polyline_half(n: usize, zeta: Complex64, half: &Half, knee_fraction: f64) -> Vec<Complex64> {
    let saddle = Complex64::new(1.0, 0.0);
    let (mut best, mut best_len) = (f64::NEG_INFINITY, KNEE_SPAN);
    for i in 1..=KNEE_SAMPLES {
        let len = KNEE_SPAN * i as f64 / KNEE_SAMPLES as f64;
        let v = level(n, zeta, saddle + half.descent * len);
        if v > best {
            best = v;
            best_len = len;
        }
    }
    let knee = saddle + half.descent * (best_len * knee_fraction);
    let mut tau = 1.0;
    while level(n, zeta, knee + half.valley * tau) < CUTOFF_LEVEL {
        tau *= 1.5;
    }
    vec![saddle, knee, knee + half.valley * tau]
}

/// Vertices from the saddle outwards for one half of the path.
fn half_path(n: usize, zeta: Complex64, half: &Half, contour: Contour) -> Vec<Complex64> {
    match contour {
        Contour::Auto => straight_half(n, zeta, half).unwrap_or_else(|| polyline_half(n, zeta, half, 1.0)),
        Contour::Polyline { knee_fraction } => polyline_half(n, zeta, half, knee_fraction),
    }
}

/// `∫ s^k e^{−ζg(s)} ds` from the `(2π − arg ζ)/(n+1)` valley to the
/// `−arg ζ/(n+1)` valley through the saddle.
fn saddle_integral(n: usize, zeta: SheetPoint, k: usize, contour: Contour) -> Complex64 {
    let z = zeta.value();
    let integrand = |s: Complex64| s.powu(k as u32) * (-z * phase_fn(n, s)).exp();
    let expected = (TAU / ((n as f64 + 1.0) * zeta.modulus)).sqrt();
    let tol = Tolerance {
        relative: 1e-15,
        absolute: 1e-17 * expected,
        max_depth: 40,
    };
    let [incoming, outgoing] = halves(n, zeta);
    let mut vertices: Vec<Complex64> = half_path(n, z, &incoming, contour).into_iter().rev().collect();
    vertices.extend(half_path(n, z, &outgoing, contour).into_iter().skip(1));
    vertices
        .windows(2)
        .map(|w| adaptive(&integrand, w[0], w[1], tol).value)
        .sum()
}

/// `√(n/2π)`.
fn norm_const(n: usize) -> f64 {
    (n as f64 / TAU).sqrt()
}

/// `((n+1)ζ/n)^{1/(n+1)}` on ζ's sheet; its nth power is `x`.
fn saddle_scale(n: usize, zeta: SheetPoint) -> Complex64 {
    zeta.scale((n as f64 + 1.0) / n as f64).powf(1.0 / (n as f64 + 1.0))
}

pub fn y0_quadrature_with(n: usize, zeta: SheetPoint, contour: Contour) -> Result<Complex64> {
    check_zeta(n, zeta)?;
    let c = saddle_scale(n, zeta);
    Ok(norm_const(n) * c * zeta.value().exp() * saddle_integral(n, zeta, 0, contour))
}

/// `y₀(ζ) = y(x)` with `ζ = n x^{1+1/n}/(n+1)`, evaluated on ζ's sheet.
pub fn y0_quadrature(n: usize, zeta: SheetPoint) -> Result<Complex64> {
    y0_quadrature_with(n, zeta, Contour::Auto)
}

/// `ζ` for a given `x`, choosing the representative of `arg x` that puts
/// `arg ζ` inside the validity sector.
pub fn zeta_from_x(n: usize, x: Complex64) -> Result<SheetPoint> {
    if x == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    let nf = n as f64;
    let ratio = (nf + 1.0) / nf;
    let (lo, hi) = zeta_sector(n);
    let base = x.arg();
    let candidates = [base, base + TAU, base - TAU];
    let arg = candidates
        .iter()
        .copied()
        .find(|&a| {
            let z = a * ratio;
            z > lo && z < hi
        })
        .ok_or(Error::SectorViolation {
            arg: base * ratio,
            lo,
            hi,
        })?;
    Ok(SheetPoint::new(nf / (nf + 1.0) * x.norm().powf(ratio), arg * ratio))
}

/// `y^{(k)}(x) = √(n/2π) ∫ t^k exp(−t^{n+1}/(n+1) + xt) dt` over the same contour.
pub fn y_derivative_quadrature(n: usize, x: Complex64, k: usize) -> Result<Complex64> {
    if k > n {
        return Err(Error::Precondition(format!("derivative order {k} exceeds n = {n}")));
    }
    let zeta = zeta_from_x(n, x)?;
    check_zeta(n, zeta)?;
    let c = saddle_scale(n, zeta);
    Ok(norm_const(n) * c.powu(k as u32 + 1) * zeta.value().exp() * saddle_integral(n, zeta, k, Contour::Auto))
}

/// `ζ = uξ` with `arg u ∈ (−π/2, π/2)` and ξ's explicit argument.
fn zeta_of(u: Complex64, xi: SheetPoint) -> Result<SheetPoint> {
    if u.re <= 0.0 {
        return Err(Error::Precondition(format!("Re(u) = {} must be positive", u.re)));
    }
    if xi.modulus == 0.0 {
        return Err(Error::ZeroPoint);
    }
    Ok(SheetPoint::new(u.norm() * xi.modulus, u.arg() + xi.arg))
}

/// `W₀(u, ξ) = u^{1/2−1/(n+1)} z^{(1−1/n)/2} y₀(uξ)` with `z = ((n+1)ξ/n)^{n/(n+1)}`.
pub fn w0_oracle(n: usize, u: Complex64, xi: SheetPoint) -> Result<Complex64> {
    let zeta = zeta_of(u, xi)?;
    let nf = n as f64;
    let u_sheet = SheetPoint::new(u.norm(), u.arg());
    let z = xi.scale((nf + 1.0) / nf).powf(nf / (nf + 1.0));
    let z_sheet = SheetPoint::new(z.norm(), xi.arg * nf / (nf + 1.0));
    let prefactor = u_sheet.powf(0.5 - 1.0 / (nf + 1.0)) * z_sheet.powf((1.0 - 1.0 / nf) / 2.0);
    Ok(prefactor * y0_quadrature(n, zeta)?)
}

/// `η` from the oracle: `W₀e^{−uξ} − 1`, formed without the exponential.
pub fn eta_oracle(n: usize, u: Complex64, xi: SheetPoint) -> Result<Complex64> {
    let zeta = zeta_of(u, xi)?;
    check_zeta(n, zeta)?;
    let root = zeta.scale((n as f64 + 1.0) / TAU).powf(0.5);
    Ok(root * saddle_integral(n, zeta, 0, Contour::Auto) - 1.0)
}

/// Options shared by the resummation pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOptions {
    pub orders: usize,
    pub pade_order: usize,
    /// Spacing of the factorial series; `None` selects the default.
    pub omega: Option<f64>,
    /// Number of terms kept by truncation; `None` selects the smallest term.
    pub truncate_terms: Option<usize>,
    pub quad: QuadConfig,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        Self {
            orders: 60,
            pade_order: 20,
            omega: None,
            truncate_terms: None,
            quad: QuadConfig::default(),
        }
    }
}

/// `η_j` for the Airy-type family on sheet `j` by the given method.
pub fn airy_eta(
    n: usize,
    j: usize,
    u: Complex64,
    xi: SheetPoint,
    method: Method,
    opts: &PipelineOptions,
) -> Result<SummationResult> {
    let spec = airy_family(n, n)?;
    let table = compute_coefficients(&spec, j, opts.orders, default_budget(n, opts.orders))?;
    summation::resum(&table, u, xi, method, opts)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub method: Method,
    pub outcome: Result<ComparisonValue>,
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonValue {
    /// Assembled `W₀ = e^{uξ}(1+η)`.
    pub value: Complex64,
    pub deviation: f64,
    pub error_estimate: f64,
}

/// Runs each method on `W₀` and reports its relative deviation from the oracle.
pub fn compare(
    n: usize,
    u: Complex64,
    xi: SheetPoint,
    methods: &[Method],
    opts: &PipelineOptions,
) -> Vec<ComparisonRow> {
    let reference = w0_oracle(n, u, xi);
    methods
        .iter()
        .map(|&method| {
            let start = Instant::now();
            let outcome = reference.clone().and_then(|oracle| {
                let r = airy_eta(n, 0, u, xi, method, opts)?;
                let value = (u * xi.value()).exp() * (1.0 + r.value);
                Ok(ComparisonValue {
                    value,
                    deviation: (value - oracle).norm() / oracle.norm(),
                    error_estimate: r.error_estimate,
                })
            });
            ComparisonRow {
                method,
                outcome,
                wall_time: start.elapsed(),
            }
        })
        .collect()
}
