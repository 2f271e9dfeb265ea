use borelwkb::geometry::boundary_distance;
use borelwkb::oracle::{eta_oracle, PipelineOptions};
use borelwkb::potential::airy_family;
use borelwkb::quadrature::{adaptive, Tolerance};
use borelwkb::summation::{
    assemble_w, borel_pade_sum, borel_taylor, default_omega, factorial_coeffs, factorial_sum, factorial_threshold,
    optimal_truncation, resum, truncated_asymptotic, BorelSample, Method, QuadConfig,
};
use borelwkb::wkb::{compute_coefficients, default_budget};
use borelwkb::{CoefficientTable, Complex64, SheetPoint};
use std::f64::consts::{PI, TAU};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn airy_table(n: usize, j: usize, order: usize) -> CoefficientTable {
    let spec = airy_family(n, n).unwrap();
    compute_coefficients(&spec, j, order, default_budget(n, order)).unwrap()
}

const GRID_N: [usize; 2] = [2, 3];
const GRID_U: [f64; 2] = [5.0, 10.0];
const GRID_XI: [f64; 3] = [-2.0, -3.0, -5.0];

fn on_negative_axis(x: f64) -> SheetPoint {
    SheetPoint::new(x.abs(), PI)
}

#[test]
fn laplace_kernel_is_exact_termwise() {
    let tol = Tolerance {
        relative: 1e-14,
        ..Tolerance::default()
    };
    for u in [c(2.0, 0.0), c(5.0, 1.0)] {
        let mut fact = 1.0;
        for m in 0..=10 {
            if m > 0 {
                fact *= m as f64;
            }
            let f = |t: Complex64| (-u * t).exp() * t.powu(m as u32) / fact;
            let upper = -(1e-16f64).ln() / u.re + 40.0 / u.re;
            let got = adaptive(&f, c(0.0, 0.0), c(upper, 0.0), tol).value;
            let expected = u.powi(-(m as i32) - 1);
            assert!((got - expected).norm() <= 1e-12 * expected.norm(), "u={u} m={m}");

            // Same identity through the Padé pipeline with a pure monomial transform.
            let mut b = vec![c(0.0, 0.0); 2 * m + 3];
            b[m] = c(1.0 / fact, 0.0);
            let sample = BorelSample {
                xi: c(1.0, 0.0),
                b,
                radius_hint: 1.0,
            };
            let r = borel_pade_sum(&sample, u, m + 1, QuadConfig::default()).unwrap();
            assert!(
                (r.value - expected).norm() <= 1e-12 * expected.norm(),
                "pade u={u} m={m}: {}",
                r.value
            );
        }
    }
}

#[test]
fn methods_agree_on_grid() {
    let opts = PipelineOptions::default();
    for n in GRID_N {
        let table = airy_table(n, 0, opts.orders);
        for u in GRID_U {
            for x in GRID_XI {
                let xi = on_negative_axis(x);
                let u = c(u, 0.0);
                let pade = resum(&table, u, xi, Method::BorelPade, &opts).unwrap();
                let fact = resum(&table, u, xi, Method::Factorial, &opts).unwrap();
                let oracle = eta_oracle(n, u, xi).unwrap();
                let scale = (c(1.0, 0.0) + pade.value).norm();
                assert!((pade.value - fact.value).norm() <= 1e-6 * scale, "n={n} u={u} xi={x}");
                assert!((pade.value - oracle).norm() <= 1e-6 * scale, "n={n} u={u} xi={x}");
                assert!(pade.error_estimate >= 0.0 && fact.error_estimate >= 0.0);
            }
        }
    }
}

/// Deviations below this are indistinguishable from rounding in `1 + η`.
const ROUNDING_FLOOR: f64 = 1e-14;

#[test]
fn truncation_error_estimate_is_consistent() {
    let opts = PipelineOptions::default();
    let (mut good, mut total) = (0, 0);
    for n in GRID_N {
        let table = airy_table(n, 0, opts.orders);
        for u in GRID_U {
            for x in GRID_XI {
                let (u, xi) = (c(u, 0.0), on_negative_axis(x));
                let terms = optimal_truncation(&table, u, xi.value()).unwrap();
                let trunc = truncated_asymptotic(&table, u, xi.value(), terms).unwrap();
                let pade = resum(&table, u, xi, Method::BorelPade, &opts).unwrap();
                let actual = (trunc.value - pade.value).norm();
                let bound = 10.0 * trunc.error_estimate.max(ROUNDING_FLOOR);
                eprintln!(
                    "n={n} u={u} xi={x} N={terms} est={:e} actual={actual:e}",
                    trunc.error_estimate
                );
                total += 1;
                if actual <= bound {
                    good += 1;
                }
            }
        }
    }
    assert!(
        good * 5 >= total * 4,
        "{good} of {total} grid points within a factor of 10"
    );
}

#[test]
fn factorial_increments_decrease() {
    for n in GRID_N {
        let table = airy_table(n, 0, 60);
        for u in GRID_U {
            for x in GRID_XI {
                let xi = on_negative_axis(x);
                let omega = default_omega(n, 0, xi);
                assert!(omega > factorial_threshold(n, boundary_distance(n, 0, xi)));
                let coeffs = factorial_coeffs(&table, omega, xi.value(), 59).unwrap();
                let result = factorial_sum(&coeffs, c(u, 0.0), omega).unwrap();
                let mut denom = c(1.0, 0.0);
                let increments: Vec<f64> = coeffs
                    .iter()
                    .enumerate()
                    .map(|(m, b)| {
                        denom *= c(u + m as f64 * omega, 0.0);
                        (b / denom).norm()
                    })
                    .collect();
                // Past the rounding floor the increments carry no information.
                let floor = 1e-17 * result.value.norm();
                for m in 5..increments.len() - 1 {
                    if increments[m + 1] <= floor {
                        break;
                    }
                    assert!(
                        increments[m + 1] < increments[m],
                        "n={n} u={u} xi={x} m={m}: {:?}",
                        &increments[m..m + 2]
                    );
                }
            }
        }
    }
}

fn truncation_errors(n: usize, u: f64, x: f64, order: usize) -> Vec<f64> {
    let table = airy_table(n, 0, order);
    (1..=order)
        .map(|k| {
            truncated_asymptotic(&table, c(u, 0.0), c(x, 0.0), k)
                .unwrap()
                .error_estimate
        })
        .collect()
}

fn assert_valley(seq: &[f64], label: &str) {
    let best = seq
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap();
    assert!(best > 1 && best + 2 < seq.len(), "{label}: minimum at edge ({best})");
    assert!(
        seq[..=best].windows(2).all(|w| w[1] <= w[0]),
        "{label}: not decreasing before the minimum"
    );
    assert!(
        seq[best..].windows(2).all(|w| w[1] >= w[0]),
        "{label}: not increasing after the minimum"
    );
}

#[test]
fn truncation_error_decreases_then_increases() {
    for (u, x) in [(1.5, -3.0), (1.0, -5.0), (2.0, -2.0)] {
        let errs = truncation_errors(2, u, x, 50);
        assert_valley(&errs, &format!("n=2 u={u} xi={x}"));
        let table = airy_table(2, 0, 50);
        let best = optimal_truncation(&table, c(u, 0.0), c(x, 0.0)).unwrap();
        assert_eq!(errs[best - 1], errs.iter().cloned().fold(f64::INFINITY, f64::min));
    }
    // For n ≥ 3 the nearest Borel singularities are a conjugate pair and the terms
    // oscillate with period close to 6, so the envelope over blocks of 6 is checked.
    for (u, x) in [(5.0, -3.0), (4.0, -2.0)] {
        let errs = truncation_errors(3, u, x, 60);
        let blocks: Vec<f64> = errs.chunks(6).map(|b| b.iter().cloned().fold(0.0, f64::max)).collect();
        assert_valley(&blocks, &format!("n=3 u={u} xi={x}"));
    }
}

#[test]
fn factorial_coefficients_examples() {
    let table = airy_table(3, 0, 8);
    let xi = c(-3.0, 0.0);
    let coeffs = factorial_coeffs(&table, 0.7, xi, 4).unwrap();
    assert_eq!(coeffs[0], table.value(1, xi).unwrap());
    assert_eq!(coeffs[1], table.value(2, xi).unwrap());
    let a: Vec<Complex64> = (1..=4).map(|m| table.value(m, xi).unwrap()).collect();
    // |s(3,1)| = 2, |s(3,2)| = 3, |s(3,3)| = 1
    let b3 = 0.7 * 0.7 * 2.0 * a[1] + 0.7 * 3.0 * a[2] + a[3];
    assert!((coeffs[3] - b3).norm() <= 1e-15 * b3.norm());
    assert!(factorial_coeffs(&table, 0.7, xi, 8).is_err());
    let r = factorial_sum(&[c(1.0, 0.0), c(1.0, 0.0)], c(1.0, 0.0), 1.0).unwrap();
    assert_eq!(r.value, c(1.5, 0.0));
    assert_eq!(r.method, Method::Factorial);
    let single = factorial_sum(&[c(3.0, 0.0)], c(2.0, 0.0), 1.0).unwrap();
    assert_eq!(single.value, c(1.5, 0.0));
}

#[test]
fn borel_samples_and_zero_potential() {
    let s = borel_taylor(&airy_table(3, 0, 10), c(-3.0, 0.0)).unwrap();
    assert!((s.b[0].re + 0.048_611_111_111_111_11).abs() < 1e-16);
    assert!((s.b[1].re - 0.009_283_371_913_580_247).abs() < 1e-16);
    let zero = compute_coefficients(&borelwkb::PotentialSpec::new(3, 4).unwrap(), 0, 8, 20).unwrap();
    let z = borel_taylor(&zero, c(-3.0, 0.0)).unwrap();
    assert!(z.b.iter().all(|b| b.norm() == 0.0));
    assert!(z.radius_hint > 0.0);
}

#[test]
fn assembly_of_solutions() {
    let table = airy_table(3, 1, 4);
    let w = assemble_w(&table, c(2.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
    let expected = (Complex64::from_polar(2.0, TAU / 3.0)).exp();
    assert!((w.value - expected).norm() < 1e-15);
    assert!(w.log_magnitude.is_none());
    let base = airy_table(3, 0, 4);
    let big = assemble_w(&base, c(800.0, 0.0), c(-1.0, 0.0), c(0.5, 0.0)).unwrap();
    assert!((big.log_magnitude.unwrap() - (-800.0 + 1.5f64.ln())).abs() < 1e-12);
}

#[test]
fn pole_on_axis_shifts_the_path() {
    // The transform 2/(2 − t) has a real pole at t = 2.
    let b: Vec<Complex64> = (0..9).map(|m| c(0.5f64.powi(m), 0.0)).collect();
    let sample = BorelSample {
        xi: c(1.0, 0.0),
        b,
        radius_hint: 2.0,
    };
    let u = c(4.0, 0.0);
    let nudged = borel_pade_sum(&sample, u, 4, QuadConfig::default()).unwrap();
    assert!(
        nudged.diagnostics.iter().any(|d| d.contains("shifted")),
        "{:?}",
        nudged.diagnostics
    );
    // Lateral Laplace transform of 2/(2 − t) below the pole, from 30-digit quadrature.
    let expected = c(0.295_461_996_746_801_99, -0.002_107_773_854_744_915_2);
    assert!(
        (nudged.value - expected).norm() < 1e-10 * expected.norm(),
        "{}",
        nudged.value
    );
    let strict = QuadConfig {
        nudge: false,
        ..QuadConfig::default()
    };
    assert!(borel_pade_sum(&sample, u, 4, strict).is_err());
}

#[test]
fn factorial_series_reports_growth_and_exhaustion() {
    // B_m = m!·10^m with ω = 0.1: the increments grow like (100 m ω/(u + m ω))^m.
    let mut b = c(1.0, 0.0);
    let growing: Vec<Complex64> = (0..30)
        .map(|m| {
            if m > 0 {
                b *= 10.0 * m as f64;
            }
            b
        })
        .collect();
    let err = factorial_sum(&growing, c(1.0, 0.0), 0.1).unwrap_err();
    assert!(matches!(err, borelwkb::Error::NonConvergence(_)), "{err}");
    assert_eq!(err.kind(), borelwkb::error::ErrorKind::Numerical);

    // Geometric decay that is too slow to reach the tolerance in ten terms.
    let slow: Vec<Complex64> = (0..10)
        .map(|m| c(0.9f64.powi(m) * (1..=m).product::<i32>() as f64, 0.0))
        .collect();
    let r = factorial_sum(&slow, c(1.0, 0.0), 1.0).unwrap();
    assert!(!r.converged);
    assert!(
        r.diagnostics.iter().any(|d| d.contains("10 terms")),
        "{:?}",
        r.diagnostics
    );
}
