//! Gauss–Legendre rules and adaptive panel quadrature for complex integrands
//! along straight segments of the complex plane.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Nodes and weights of the `k`-point Gauss–Legendre rule on `[−1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(k: usize) -> Self {
        assert!(k >= 1);
        let mut nodes = vec![0.0; k];
        let mut weights = vec![0.0; k];
        for i in 0..k.div_ceil(2) {
            // Tricomi initial guess, then Newton on P_k.
            let mut x = (PI * (i as f64 + 0.75) / (k as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(k, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(k, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[k - 1 - i] = x;
            weights[i] = w;
            weights[k - 1 - i] = w;
        }
        if k % 2 == 1 {
            nodes[k / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    /// Shared 32-point rule.
    pub fn standard() -> &'static GaussLegendre {
        static RULE: OnceLock<GaussLegendre> = OnceLock::new();
        RULE.get_or_init(|| GaussLegendre::new(32))
    }

    /// `∫_a^b f(z) dz` along the straight segment from `a` to `b`.
    pub fn segment<F: Fn(Complex64) -> Complex64>(&self, f: &F, a: Complex64, b: Complex64) -> Complex64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let sum = self
            .nodes
            .iter()
            .zip(&self.weights)
            .fold(Complex64::new(0.0, 0.0), |acc, (&x, &w)| acc + w * f(mid + half * x));
        sum * half
    }

    /// Equal-panel composite rule on the segment `[a, b]`.
    pub fn composite<F: Fn(Complex64) -> Complex64>(
        &self,
        f: &F,
        a: Complex64,
        b: Complex64,
        panels: usize,
    ) -> Complex64 {
        let step = (b - a) / panels as f64;
        (0..panels).fold(Complex64::new(0.0, 0.0), |acc, i| {
            let lo = a + step * i as f64;
            acc + self.segment(f, lo, lo + step)
        })
    }
}

/// `(P_k(x), P_k′(x))` by the three-term recurrence.
fn legendre(k: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for i in 2..=k {
        let p2 = ((2 * i - 1) as f64 * x * p1 - (i - 1) as f64 * p0) / i as f64;
        p0 = p1;
        p1 = p2;
    }
    if k == 0 {
        return (1.0, 0.0);
    }
    let d = k as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Stopping rule for [`adaptive`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub relative: f64,
    /// Absolute floor; panels below it are accepted regardless.
    pub absolute: f64,
    pub max_depth: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            relative: 1e-14,
            absolute: 0.0,
            max_depth: 40,
        }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: Complex64,
    pub error: f64,
    /// True if some panel hit the depth cap without meeting the tolerance.
    pub depth_exhausted: bool,
}

/// Adaptive bisection of `[a, b]`, accepting a panel when it agrees with its
/// two halves to within `tol.relative·|total|` (estimated from a coarse pass)
/// or `tol.absolute`.
pub fn adaptive<F: Fn(Complex64) -> Complex64>(f: &F, a: Complex64, b: Complex64, tol: Tolerance) -> Integral {
    let rule = GaussLegendre::standard();
    let coarse = rule.composite(f, a, b, 8);
    let scale = coarse.norm();
    let mut out = Integral {
        value: Complex64::new(0.0, 0.0),
        error: 0.0,
        depth_exhausted: false,
    };
    let mut stack = vec![(a, b, rule.segment(f, a, b), 0usize)];
    // Panels are processed left to right so the summation order is fixed.
    while let Some((lo, hi, whole, depth)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = rule.segment(f, lo, mid);
        let right = rule.segment(f, mid, hi);
        let refined = left + right;
        let diff = (refined - whole).norm();
        let budget = (tol.relative * scale).max(tol.absolute);
        if diff <= budget || depth >= tol.max_depth {
            if diff > budget {
                out.depth_exhausted = true;
            }
            out.value += refined;
            out.error += diff;
        } else {
            stack.push((mid, hi, right, depth + 1));
            stack.push((lo, mid, left, depth + 1));
        }
    }
    out
}
