//! Evaluation of `η_j(u, ξ)`: optimal-truncation partial sums, Laplace
//! integrals of a Padé-continued Borel transform, and factorial series.

use crate::combinatorics::stirling_first_row;
use crate::error::{Error, Result};
use crate::frak_a::frak_a;
use crate::geometry::{boundary_distance, SheetPoint};
use crate::phase::unit_root;
use crate::quadrature::{adaptive, Tolerance};
use crate::wkb::{gevrey_diagnostics, CoefficientTable};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::f64::consts::PI;
use std::fmt;

/// Taylor data `b_m = A_{j,m+1}(ξ)/m!` of the Borel transform at fixed ξ.
#[derive(Debug, Clone, PartialEq)]
pub struct BorelSample {
    pub xi: Complex64,
    pub b: Vec<Complex64>,
    /// Estimated distance to the nearest Borel-plane singularity.
    pub radius_hint: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Truncate,
    BorelPade,
    Factorial,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Truncate => "truncate",
            Method::BorelPade => "borel_pade",
            Method::Factorial => "factorial",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummationResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub method: Method,
    /// False when the method's own stopping criterion was not met.
    pub converged: bool,
    pub diagnostics: Vec<String>,
}

fn require_right_half_plane(u: Complex64) -> Result<()> {
    if u.re > 0.0 {
        Ok(())
    } else {
        Err(Error::Precondition(format!("Re(u) = {} must be positive", u.re)))
    }
}

pub fn borel_taylor(table: &CoefficientTable, xi: Complex64) -> Result<BorelSample> {
    if xi == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    if table.order < 2 {
        return Err(Error::Precondition("the table needs at least two coefficients".into()));
    }
    let mut b = Vec::with_capacity(table.order);
    let mut fact = 1.0;
    for m in 0..table.order {
        if m > 0 {
            fact *= m as f64;
        }
        b.push(table.value(m + 1, xi)? / fact);
    }
    let radius_hint = match gevrey_diagnostics(table, xi, 1.0) {
        Ok(report) if report.radius.is_finite() && report.radius > 0.0 => report.radius,
        _ => xi.norm(),
    };
    Ok(BorelSample { xi, b, radius_hint })
}

/// `Σ_{m=1}^{N−1} A_m(ξ)/u^m` with the first omitted term as error estimate.
pub fn truncated_asymptotic(
    table: &CoefficientTable,
    u: Complex64,
    xi: Complex64,
    terms: usize,
) -> Result<SummationResult> {
    require_right_half_plane(u)?;
    if terms > table.order {
        return Err(Error::OrderOverflow {
            requested: terms,
            available: table.order,
        });
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut upow = Complex64::new(1.0, 0.0);
    for m in 1..terms {
        upow *= u;
        value += table.value(m, xi)? / upow;
    }
    let error_estimate = if terms == 0 {
        0.0
    } else {
        (table.value(terms, xi)? / (upow * u)).norm()
    };
    Ok(SummationResult {
        value,
        error_estimate,
        method: Method::Truncate,
        converged: true,
        diagnostics: vec![format!("terms={terms}")],
    })
}

/// Truncation order minimising the first omitted term, `1 ≤ N ≤ M`.
pub fn optimal_truncation(table: &CoefficientTable, u: Complex64, xi: Complex64) -> Result<usize> {
    let mut best = (f64::INFINITY, 1);
    let mut upow = Complex64::new(1.0, 0.0);
    for m in 1..=table.order {
        upow *= u;
        let size = (table.value(m, xi)? / upow).norm();
        if size < best.0 {
            best = (size, m);
        }
    }
    Ok(best.1)
}

/// Settings for the Laplace integral of the Padé approximant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    /// Nominal cut-off `T` has `e^{−Re(u)T}` below this value; the path is extended
    /// while the estimated tail exceeds it relative to the integral.
    pub tail: f64,
    pub tolerance: Tolerance,
    /// Move the path off the real axis when a pole sits on it.
    pub nudge: bool,
    /// Distance of the shifted path from the real axis; defaults to half the radius hint.
    pub nudge_height: Option<f64>,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            tail: 1e-16,
            tolerance: Tolerance::default(),
            nudge: true,
            nudge_height: None,
        }
    }
}

const POLE_CLEARANCE: f64 = 1e-6;
/// Cap on how far past the nominal cut-off the Laplace path may be extended, in units of that cut-off.
const MAX_EXTENSION: f64 = 4.0;

/// Diagonal Padé approximant `p(τ)/q(τ)` in the scaled variable `τ = t/scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct Pade {
    pub numer: Vec<Complex64>,
    pub denom: Vec<Complex64>,
    pub scale: f64,
}

fn horner(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

impl Pade {
    /// `[L/M]` approximant from the coefficients `c_0, …, c_{L+M}`.
    pub fn new(coeffs: &[Complex64], numer_deg: usize, denom_deg: usize, scale: f64) -> Result<Pade> {
        let needed = numer_deg + denom_deg + 1;
        if coeffs.len() < needed {
            return Err(Error::InsufficientArguments {
                needed,
                got: coeffs.len(),
            });
        }
        let mut pow = 1.0;
        let c: Vec<Complex64> = coeffs[..needed]
            .iter()
            .map(|&b| {
                let v = b * pow;
                pow *= scale;
                v
            })
            .collect();
        let at = |i: isize| {
            if i >= 0 {
                c[i as usize]
            } else {
                Complex64::new(0.0, 0.0)
            }
        };
        let mut denom = vec![Complex64::new(1.0, 0.0)];
        if denom_deg > 0 {
            let l = numer_deg as isize;
            let system = DMatrix::from_fn(denom_deg, denom_deg, |i, j| at(l + i as isize - j as isize));
            let rhs = DVector::from_fn(denom_deg, |i, _| -at(l + 1 + i as isize));
            let q = system.lu().solve(&rhs).ok_or(Error::SingularPade)?;
            if q.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
                return Err(Error::SingularPade);
            }
            denom.extend(q.iter());
        }
        let numer = (0..=numer_deg)
            .map(|i| (0..=i.min(denom_deg)).map(|k| denom[k] * c[i - k]).sum())
            .collect();
        Ok(Pade { numer, denom, scale })
    }

    /// `[order/order]` approximant; if its linear system is singular the
    /// denominator degree is lowered, keeping `2·order + 1` coefficients in use.
    pub fn diagonal(coeffs: &[Complex64], order: usize, scale: f64) -> Result<Pade> {
        let mut last = Error::SingularPade;
        for denom_deg in (0..=order).rev() {
            match Pade::new(coeffs, 2 * order - denom_deg, denom_deg, scale) {
                Ok(p) => return Ok(p),
                Err(e) => last = e,
            }
        }
        Err(last)
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        let tau = t / self.scale;
        horner(&self.numer, tau) / horner(&self.denom, tau)
    }

    /// Zeros of the denominator in the unscaled variable.
    pub fn poles(&self) -> Vec<Complex64> {
        let mut q = self.denom.clone();
        while q.len() > 1 && q.last().is_some_and(|c| c.norm() == 0.0) {
            q.pop();
        }
        let deg = q.len() - 1;
        if deg == 0 {
            return Vec::new();
        }
        let lead = q[deg];
        let companion = DMatrix::from_fn(deg, deg, |i, j| {
            if i == 0 {
                -q[deg - 1 - j] / lead
            } else if j + 1 == i {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        match companion.schur().eigenvalues() {
            Some(ev) => ev.iter().map(|&z| z * self.scale).collect(),
            None => Vec::new(),
        }
    }
}

/// Distance from `p` to the segment `[a, b]`.
fn distance_to_segment(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let s = ((p - a) * d.conj()).re / d.norm_sqr();
    (p - (a + d * s.clamp(0.0, 1.0))).norm()
}

/// Laplace integral along a polyline, panel length `1/Re(u)`.
fn laplace_along<F: Fn(Complex64) -> Complex64>(
    f: &F,
    u: Complex64,
    path: &[Complex64],
    tol: Tolerance,
) -> (Complex64, f64) {
    let integrand = |t: Complex64| (-u * t).exp() * f(t);
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for w in path.windows(2) {
        let panels = ((w[1] - w[0]).norm() * u.re).ceil().max(1.0) as usize;
        let step = (w[1] - w[0]) / panels as f64;
        for i in 0..panels {
            let lo = w[0] + step * i as f64;
            let r = adaptive(&integrand, lo, lo + step, tol);
            value += r.value;
            error += r.error;
        }
    }
    (value, error)
}

/// Laplace transform `∫_0^∞ e^{−ut} F(t) dt` of the `[P/P]` Borel–Padé approximant.
pub fn borel_pade_sum(
    sample: &BorelSample,
    u: Complex64,
    pade_order: usize,
    quad: QuadConfig,
) -> Result<SummationResult> {
    require_right_half_plane(u)?;
    let needed = 2 * pade_order + 1;
    if sample.b.len() < needed {
        return Err(Error::Precondition(format!(
            "Padé order {pade_order} needs {needed} Borel coefficients, have {}",
            sample.b.len()
        )));
    }
    let mut diagnostics = Vec::new();
    if sample.b.iter().all(|b| b.norm() == 0.0) {
        return Ok(SummationResult {
            value: Complex64::new(0.0, 0.0),
            error_estimate: 0.0,
            method: Method::BorelPade,
            converged: true,
            diagnostics: vec!["zero Borel transform".into()],
        });
    }
    let scale = if sample.radius_hint > 0.0 {
        sample.radius_hint
    } else {
        1.0
    };
    let (value, quad_error, tail) = pade_laplace(sample, u, pade_order, scale, quad, &mut diagnostics)?;

    // Lower-order approximant as a consistency check on the continuation.
    let mut error_estimate = quad_error + tail;
    if pade_order >= 3 {
        let mut scratch = Vec::new();
        match pade_laplace(sample, u, pade_order - 2, scale, quad, &mut scratch) {
            Ok((lower, _, _)) => error_estimate += (value - lower).norm(),
            Err(e) => diagnostics.push(format!("lower-order check failed: {e}")),
        }
    }
    Ok(SummationResult {
        value,
        error_estimate,
        method: Method::BorelPade,
        converged: true,
        diagnostics,
    })
}

fn pade_laplace(
    sample: &BorelSample,
    u: Complex64,
    order: usize,
    scale: f64,
    quad: QuadConfig,
    diagnostics: &mut Vec<String>,
) -> Result<(Complex64, f64, f64)> {
    let pade = Pade::diagonal(&sample.b, order, scale)?;
    let cutoff = -quad.tail.ln() / u.re;
    let origin = Complex64::new(0.0, 0.0);
    let end = Complex64::new(cutoff, 0.0);
    let poles = pade.poles();
    let near: Vec<Complex64> = poles
        .iter()
        .copied()
        .filter(|&p| distance_to_segment(p, origin, end) < POLE_CLEARANCE)
        .collect();

    let path = if near.is_empty() {
        vec![origin, end]
    } else {
        let p = near[0];
        if !quad.nudge {
            return Err(Error::PoleOnAxis { re: p.re, im: p.im });
        }
        let h = quad.nudge_height.unwrap_or(0.5 * scale);
        let candidates = [h, -h].map(|height| {
            let lift = Complex64::new(0.0, height);
            vec![origin, lift, end + lift]
        });
        let clearance = |path: &Vec<Complex64>| {
            path.windows(2)
                .flat_map(|w| poles.iter().map(move |&p| distance_to_segment(p, w[0], w[1])))
                .fold(f64::INFINITY, f64::min)
        };
        let best = candidates
            .into_iter()
            .max_by(|a, b| clearance(a).total_cmp(&clearance(b)))
            .expect("two candidates");
        if clearance(&best) < POLE_CLEARANCE {
            return Err(Error::PoleOnAxis { re: p.re, im: p.im });
        }
        diagnostics.push(format!(
            "pole {:.6}{:+.6}i on the real axis; path shifted to Im t = {}",
            p.re, p.im, best[1].im
        ));
        best
    };
    let f = |t: Complex64| pade.eval(t);
    let (mut value, mut error) = laplace_along(&f, u, &path, quad.tolerance);
    let mut last = *path.last().expect("nonempty path");
    let tail_at = |t: Complex64| (f(t) * (-u * t).exp()).norm() / u.re;
    // Polynomial growth of F can outlast e^{−Re(u)T}; extend until the tail is relatively small.
    let step = Complex64::new(1.0 / u.re, 0.0);
    let limit = last.re + MAX_EXTENSION * cutoff;
    while tail_at(last) > quad.tail * value.norm() && last.re < limit {
        let (v, e) = laplace_along(&f, u, &[last, last + step], quad.tolerance);
        value += v;
        error += e;
        last += step;
    }
    Ok((value, error, tail_at(last)))
}

/// `B_m = Σ_r ω^{m−r} |s(m, r)| A_{r+1}(ξ)` for `0 ≤ m ≤ M`.
pub fn factorial_coeffs(table: &CoefficientTable, omega: f64, xi: Complex64, count: usize) -> Result<Vec<Complex64>> {
    if count + 1 > table.order {
        return Err(Error::OrderOverflow {
            requested: count + 1,
            available: table.order,
        });
    }
    let a: Vec<Complex64> = (1..=count + 1).map(|m| table.value(m, xi)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(count + 1);
    for m in 0..=count {
        let row = stirling_first_row(m);
        let mut sum = Complex64::new(0.0, 0.0);
        for (r, s) in row.iter().enumerate() {
            let s = s.to_f64().unwrap_or(f64::INFINITY);
            if s != 0.0 {
                sum += omega.powi((m - r) as i32) * s * a[r];
            }
        }
        out.push(sum);
    }
    Ok(out)
}

const FACTORIAL_RTOL: f64 = 1e-14;

/// `Σ_m B_m / (u(u+ω)⋯(u+mω))`.
///
/// Running out of terms while the increments still shrink is reported through
/// `converged`; increments that grow over the second half are an error.
pub fn factorial_sum(coeffs: &[Complex64], u: Complex64, omega: f64) -> Result<SummationResult> {
    require_right_half_plane(u)?;
    if !(omega > 0.0) {
        return Err(Error::Precondition("omega must be positive".into()));
    }
    let mut diagnostics = Vec::new();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut denom = Complex64::new(1.0, 0.0);
    let mut last = 0.0;
    let mut converged = false;
    let mut increments = Vec::with_capacity(coeffs.len());
    for (m, &b) in coeffs.iter().enumerate() {
        denom *= u + m as f64 * omega;
        let inc = b / denom;
        sum += inc;
        last = inc.norm();
        increments.push(last);
        if m > 0 && last <= FACTORIAL_RTOL * sum.norm() {
            converged = true;
            break;
        }
    }
    if !converged {
        let tail = &increments[increments.len() / 2..];
        if tail.len() > 1 && tail.first() <= tail.last() {
            return Err(Error::NonConvergence(format!(
                "factorial series increments grow ({:e} to {last:e}); try a larger omega",
                tail[0]
            )));
        }
        diagnostics.push(format!("stopping tolerance not reached within {} terms", coeffs.len()));
    }
    Ok(SummationResult {
        value: sum,
        error_estimate: last,
        method: Method::Factorial,
        converged,
        diagnostics,
    })
}

/// `π/(2𝔞ₙd)`, the spacing above which the factorial series is guaranteed to converge.
pub fn factorial_threshold(n: usize, d: f64) -> f64 {
    PI / (2.0 * frak_a(n).value * d)
}

/// Spacing `1.1·π/(2𝔞ₙd̂)` with `d̂` the distance from ξ to the boundary of `Γ_j`.
pub fn default_omega(n: usize, j: usize, xi: SheetPoint) -> f64 {
    1.1 * factorial_threshold(n, boundary_distance(n, j, xi))
}

/// `W_j = exp(e^{2πij/n}uξ + X_j(ξ))(1+η)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AssembledW {
    pub value: Complex64,
    /// `log|W|`, reported when the exponential leaves the double range.
    pub log_magnitude: Option<f64>,
}

const EXP_GUARD: f64 = 700.0;

pub fn assemble_w(table: &CoefficientTable, u: Complex64, xi: Complex64, eta: Complex64) -> Result<AssembledW> {
    if xi == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroPoint);
    }
    let linear = unit_root(table.j as i64, table.n) * u * xi;
    let exponent = linear + table.x.evaluate(xi)?;
    let factor = Complex64::new(1.0, 0.0) + eta;
    let value = exponent.exp() * factor;
    let log_magnitude = (linear.re.abs() > EXP_GUARD).then(|| exponent.re + factor.norm().ln());
    Ok(AssembledW { value, log_magnitude })
}

/// Evaluates `η_j` from a coefficient table by the chosen method.
///
/// `xi` carries the argument used to place ξ relative to the sector boundary
/// when choosing the default spacing and the shifted Laplace path.
pub fn resum(
    table: &CoefficientTable,
    u: Complex64,
    xi: SheetPoint,
    method: Method,
    opts: &crate::oracle::PipelineOptions,
) -> Result<SummationResult> {
    let point = xi.value();
    let distance = boundary_distance(table.n, table.j, xi);
    match method {
        Method::Truncate => {
            let terms = match opts.truncate_terms {
                Some(t) => t,
                None => optimal_truncation(table, u, point)?,
            };
            truncated_asymptotic(table, u, point, terms)
        }
        Method::BorelPade => {
            let sample = borel_taylor(table, point)?;
            let mut quad = opts.quad;
            if quad.nudge_height.is_none() {
                quad.nudge_height = Some(0.5 * frak_a(table.n).value * distance);
            }
            borel_pade_sum(&sample, u, opts.pade_order, quad)
        }
        Method::Factorial => {
            let omega = opts.omega.unwrap_or_else(|| default_omega(table.n, table.j, xi));
            let count = table.order.saturating_sub(1).min(opts.orders.saturating_sub(1));
            let coeffs = factorial_coeffs(table, omega, point, count)?;
            let mut result = factorial_sum(&coeffs, u, omega)?;
            let threshold = factorial_threshold(table.n, distance);
            if omega <= threshold {
                result.diagnostics.push(format!(
                    "omega {omega} is not above the convergence threshold {threshold}"
                ));
            }
            Ok(result)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentSeries;
    use crate::potential::airy_family;
    use crate::wkb::{compute_coefficients, default_budget};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn airy_table(n: usize, order: usize) -> CoefficientTable {
        let spec = airy_family(n, n).unwrap();
        compute_coefficients(&spec, 0, order, default_budget(n, order)).unwrap()
    }

    #[test]
    fn borel_coefficients_for_cubic() {
        let s = borel_taylor(&airy_table(3, 8), c(-3.0)).unwrap();
        assert!((s.b[0] - c(7.0 / 48.0 / -3.0)).norm() < 1e-16);
        assert!((s.b[1] - c(385.0 / 4608.0 / 9.0)).norm() < 1e-16);
    }

    #[test]
    fn truncation_arithmetic() {
        let t = airy_table(3, 6);
        let r = truncated_asymptotic(&t, c(10.0), c(-3.0), 3).unwrap();
        let expected = -7.0 / 48.0 / 30.0 + 385.0 / 4608.0 / 900.0;
        assert!((r.value - c(expected)).norm() < 1e-16);
        assert!(((c(1.0) + r.value).re - 0.9952317).abs() < 1e-7);
        let empty = truncated_asymptotic(&t, c(10.0), c(-3.0), 1).unwrap();
        assert_eq!(empty.value, c(0.0));
        assert!((empty.error_estimate - 7.0 / 48.0 / 30.0).abs() < 1e-16);
        assert!(truncated_asymptotic(&t, c(10.0), c(-3.0), 7).is_err());
    }

    #[test]
    fn laplace_of_simple_transforms() {
        let quadratic = BorelSample {
            xi: c(1.0),
            b: vec![c(0.0), c(0.0), c(0.5), c(0.0), c(0.0)],
            radius_hint: 1.0,
        };
        let r = borel_pade_sum(&quadratic, c(2.0), 2, QuadConfig::default()).unwrap();
        assert!((r.value - c(0.125)).norm() < 1e-14);
        let constant = BorelSample {
            xi: c(1.0),
            b: vec![c(1.0), c(0.0), c(0.0)],
            radius_hint: 1.0,
        };
        let r = borel_pade_sum(&constant, c(4.0), 1, QuadConfig::default()).unwrap();
        assert!((r.value - c(0.25)).norm() < 1e-15);
    }

    #[test]
    fn pole_on_axis_is_reported_or_avoided() {
        // F(t) = 1/(1 − t/2) has a pole at t = 2.
        let b: Vec<Complex64> = (0..9).map(|m| c(0.5f64.powi(m))).collect();
        let sample = BorelSample {
            xi: c(1.0),
            b,
            radius_hint: 2.0,
        };
        let strict = QuadConfig {
            nudge: false,
            ..QuadConfig::default()
        };
        assert!(matches!(
            borel_pade_sum(&sample, c(3.0), 2, strict),
            Err(Error::PoleOnAxis { .. })
        ));
        let r = borel_pade_sum(&sample, c(3.0), 2, QuadConfig::default()).unwrap();
        assert!(r.diagnostics.iter().any(|d| d.contains("shifted")));
        assert!(r.value.re.is_finite());
    }

    #[test]
    fn factorial_coefficient_examples() {
        let mut t = airy_table(2, 4);
        t.a[1] = LaurentSeries::constant(c(1.0));
        t.a[2] = LaurentSeries::constant(c(2.0));
        t.a[3] = LaurentSeries::constant(c(3.0));
        let b = factorial_coeffs(&t, 1.0, c(1.0), 2).unwrap();
        assert_eq!(b[0], c(1.0));
        assert_eq!(b[1], c(2.0));
        assert_eq!(b[2], c(5.0));
        let b = factorial_coeffs(&t, 0.3, c(1.0), 1).unwrap();
        assert_eq!(b[1], c(2.0));
        assert!(factorial_coeffs(&t, 1.0, c(1.0), 4).is_err());
    }

    #[test]
    fn factorial_sum_examples() {
        let r = factorial_sum(&[c(2.0)], c(4.0), 1.0).unwrap();
        assert_eq!(r.value, c(0.5));
        let r = factorial_sum(&[c(1.0), c(1.0)], c(1.0), 1.0).unwrap();
        assert_eq!(r.value, c(1.5));
    }

    #[test]
    fn assembly() {
        let t = airy_table(3, 2);
        let w = assemble_w(&t, c(2.0), c(-1.0), c(0.0)).unwrap();
        assert!((w.value - c((-2.0f64).exp())).norm() < 1e-16);
        let mut t1 = t.clone();
        t1.j = 1;
        let w = assemble_w(&t1, c(2.0), c(1.0), c(0.0)).unwrap();
        let expected = (2.0 * unit_root(1, 3)).exp();
        assert!((w.value - expected).norm() < 1e-15);
        let big = assemble_w(&t, c(800.0), c(1.0), c(0.0)).unwrap();
        assert_eq!(big.log_magnitude, Some(800.0));
    }
}
