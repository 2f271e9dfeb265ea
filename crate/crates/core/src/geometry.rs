//! Stokes-type angles `θ_{j,ℓ}`, `θ_j` and the sector domains `Γ_j(d)` of the
//! Airy-type family.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

/// A nonzero complex number with an explicitly chosen argument, so that
/// fractional powers can be taken on a definite sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SheetPoint {
    pub modulus: f64,
    pub arg: f64,
}

impl SheetPoint {
    pub fn new(modulus: f64, arg: f64) -> Self {
        Self { modulus, arg }
    }

    /// Uses the argument in `(0, 2π]`, the sheet on which `Γ_0(d)` is cut.
    pub fn from_complex(z: Complex64) -> Self {
        let mut arg = z.arg();
        if arg <= 0.0 {
            arg += TAU;
        }
        Self { modulus: z.norm(), arg }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.modulus, self.arg)
    }

    /// `z^p` on this sheet.
    pub fn powf(&self, p: f64) -> Complex64 {
        Complex64::from_polar(self.modulus.powf(p), p * self.arg)
    }

    pub fn mul(&self, other: &SheetPoint) -> SheetPoint {
        SheetPoint::new(self.modulus * other.modulus, self.arg + other.arg)
    }

    pub fn rotate(&self, angle: f64) -> SheetPoint {
        SheetPoint::new(self.modulus, self.arg + angle)
    }

    pub fn scale(&self, factor: f64) -> SheetPoint {
        SheetPoint::new(self.modulus * factor, self.arg)
    }
}

/// Parameters of `Γ_j(d)`: order, sheet index, clearance and puncture radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainSpec {
    pub n: usize,
    pub j: usize,
    pub d: f64,
    pub eps: f64,
}

impl DomainSpec {
    pub fn new(n: usize, j: usize, d: f64, eps: f64) -> Result<Self> {
        check_order(n)?;
        check_index(j, n)?;
        if !(d > 0.0 && eps > 0.0) {
            return Err(Error::Precondition("d and eps must be positive".into()));
        }
        Ok(Self { n, j, d, eps })
    }
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Precondition(format!("order n = {n} must be at least 2")));
    }
    Ok(())
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

/// Integer numerator `N` of `θ_{j,ℓ} = N·π/(2n)` before the common shift.
fn theta_numerator(n: usize, j: usize, l: usize) -> i64 {
    let (n, j, l) = (n as i64, j as i64, l as i64);
    let sgn = (j - l).signum();
    (2 - sgn) * n - 2 * (j + l)
}

/// Common multiple of 2π that places `θ_j` in `[0, 2π)`; applying it to every
/// `θ_{j,ℓ}` keeps their spread intact.
fn window_shift(n: usize, j: usize) -> f64 {
    let mid = PI - TAU * j as f64 / n as f64;
    if mid < 0.0 {
        TAU
    } else {
        0.0
    }
}

pub fn theta_jl(n: usize, j: usize, l: usize) -> Result<f64> {
    check_order(n)?;
    check_index(j, n)?;
    check_index(l, n)?;
    if j == l {
        return Err(Error::EqualIndices(j));
    }
    let raw = theta_numerator(n, j, l) as f64 * PI / (2 * n) as f64;
    Ok(raw + window_shift(n, j))
}

/// Midpoint of the extreme angles `θ_{j,ℓ}`; the direction of `𝒫_j(ξ)`.
pub fn theta_j(n: usize, j: usize) -> Result<f64> {
    check_order(n)?;
    check_index(j, n)?;
    let nums = (0..n).filter(|&l| l != j).map(|l| theta_numerator(n, j, l));
    let (lo, hi) = nums.fold((i64::MAX, i64::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
    Ok((lo + hi) as f64 * PI / (4 * n) as f64 + window_shift(n, j))
}

/// All `θ_{j,ℓ}` for `ℓ ≠ j`, in increasing `ℓ`.
pub fn theta_row(n: usize, j: usize) -> Result<Vec<f64>> {
    (0..n).filter(|&l| l != j).map(|l| theta_jl(n, j, l)).collect()
}

/// `ξ + t·e^{iθ}`.
pub fn ray_point(xi: Complex64, theta: f64, t: f64) -> Complex64 {
    xi + Complex64::from_polar(t, theta)
}

/// Boundary-ray directions `((n−2)π/(2n), (3n+2)π/(2n))` of `Γ_0(d)`.
pub fn sector_bounds(n: usize) -> (f64, f64) {
    let nf = n as f64;
    ((nf - 2.0) * PI / (2.0 * nf), (3.0 * nf + 2.0) * PI / (2.0 * nf))
}

/// Euclidean distance from `w` to the closed half-line from 0 in direction `beta`.
fn distance_to_ray(w: Complex64, beta: f64) -> f64 {
    let local = w * Complex64::from_polar(1.0, -beta);
    if local.re <= 0.0 {
        w.norm()
    } else {
        local.im.abs()
    }
}

/// Representative of `ξ·e^{2πij/n}` in `Γ_0`'s argument window.
fn rotate_to_principal(n: usize, j: usize, xi: SheetPoint) -> SheetPoint {
    if j == 0 {
        return xi;
    }
    let (lo, _) = sector_bounds(n);
    let mut arg = (xi.arg + TAU * j as f64 / n as f64 - lo).rem_euclid(TAU) + lo;
    if arg == lo {
        arg += TAU;
    }
    SheetPoint::new(xi.modulus, arg)
}

/// Distance from `ξ` to the boundary rays of `Γ_j`, ignoring the puncture.
pub fn boundary_distance(n: usize, j: usize, xi: SheetPoint) -> f64 {
    let w = rotate_to_principal(n, j, xi).value();
    let (lo, hi) = sector_bounds(n);
    distance_to_ray(w, lo).min(distance_to_ray(w, hi))
}

pub fn airy_domain_contains(spec: &DomainSpec, xi: SheetPoint) -> Result<bool> {
    if xi.modulus == 0.0 {
        return Err(Error::ZeroPoint);
    }
    if xi.modulus <= spec.eps {
        return Ok(false);
    }
    let rotated = rotate_to_principal(spec.n, spec.j, xi);
    let (lo, hi) = sector_bounds(spec.n);
    if !(rotated.arg > lo && rotated.arg < hi) {
        return Ok(false);
    }
    Ok(boundary_distance(spec.n, spec.j, xi) > spec.d + spec.eps)
}
