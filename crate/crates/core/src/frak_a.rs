//! The root `𝔞ₙ` of `(1+x)ⁿ = 1 + 2nx` and its limit constant.

/// `𝔞ₙ` with its certified bracket and defining-equation residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrakAEntry {
    pub n: usize,
    pub value: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    /// `|(1+x)ⁿ − (1+2nx)| / (1+2nx)` at the returned value.
    pub residual: f64,
}

const BISECTION_STEPS: usize = 20;
const NEWTON_STEPS: usize = 5;

/// `f(x) = n·log(1+x) − log(1+2nx)`; same positive root, better scaled for large `n`.
fn log_gap(n: f64, x: f64) -> f64 {
    n * x.ln_1p() - (2.0 * n * x).ln_1p()
}

fn log_gap_slope(n: f64, x: f64) -> f64 {
    n / (1.0 + x) - 2.0 * n / (1.0 + 2.0 * n * x)
}

/// Positive root of `e^a = 1 + 2a`.
pub fn limit_constant() -> f64 {
    let (mut lo, mut hi) = (1.0_f64, 1.5_f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if mid.exp() - (1.0 + 2.0 * mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut a = 0.5 * (lo + hi);
    for _ in 0..NEWTON_STEPS {
        let step = (a.exp() - 1.0 - 2.0 * a) / (a.exp() - 2.0);
        a -= step;
        if step.abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
    }
    a
}

/// Solves for `𝔞ₙ` on the bracket `[a/n, 2/(n−1)]`.
///
/// # Panics
/// If `n < 2`.
pub fn frak_a(n: usize) -> FrakAEntry {
    assert!(n >= 2, "frak_a requires n >= 2");
    let nf = n as f64;
    let lower_bound = limit_constant() / nf;
    let upper_bound = 2.0 / (nf - 1.0);
    let value = {
        let (mut lo, mut hi) = (lower_bound, upper_bound);
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if log_gap(nf, mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..NEWTON_STEPS {
            let step = log_gap(nf, x) / log_gap_slope(nf, x);
            let next = (x - step).clamp(lo, hi);
            let done = (next - x).abs() <= 2.0 * f64::EPSILON * x;
            x = next;
            if done {
                break;
            }
        }
        ulp_polish(n, x, lo, hi)
    };
    FrakAEntry {
        n,
        value,
        lower_bound,
        upper_bound,
        residual: residual(n, value),
    }
}

/// Steps to an adjacent double while that lowers the residual.
fn ulp_polish(n: usize, mut x: f64, lo: f64, hi: f64) -> f64 {
    for _ in 0..4 {
        let here = residual(n, x);
        let best = [x.next_down(), x.next_up()]
            .into_iter()
            .filter(|c| (lo..=hi).contains(c))
            .map(|c| (residual(n, c), c))
            .min_by(|a, b| a.0.total_cmp(&b.0));
        match best {
            Some((r, c)) if r < here => x = c,
            _ => break,
        }
    }
    x
}

fn residual(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    // (1+x)ⁿ − 1 − 2nx = −nx + Σ_{k≥2} C(n,k)xᵏ; the binomial terms decay
    // factorially near the root, so the sum stops once they fall below rounding.
    let mut term = nf * x;
    let mut sum = -term;
    for k in 2..=n {
        term *= (nf - k as f64 + 1.0) / k as f64 * x;
        sum += term;
        if term.abs() <= 1e-18 * nf * x {
            break;
        }
    }
    sum.abs() / (1.0 + 2.0 * nf * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(frak_a(2).value, 2.0);
        let quadratic_root = (-3.0 + 21f64.sqrt()) / 2.0;
        assert!((frak_a(3).value - quadratic_root).abs() < 1e-15);
        let e10 = frak_a(10);
        assert!(e10.value >= limit_constant() / 10.0 && e10.value <= 2.0 / 9.0);
    }

    #[test]
    fn limit_constant_value() {
        let a = limit_constant();
        assert!((a - 1.2564312086).abs() < 1e-9);
        assert!((a.exp() - 1.0 - 2.0 * a).abs() < 1e-12);
        assert!((std::f64::consts::TAU / a - 5.0008191965).abs() < 1e-9);
    }
}
