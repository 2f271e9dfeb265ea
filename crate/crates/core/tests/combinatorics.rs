use borelwkb::combinatorics::{
    binomial, complete_bell, complete_bell_table, factorial, partial_bell, stirling_first_row, Algebra,
};
use borelwkb::Complex64;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Dense polynomial in z, used as an exact test algebra.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<Complex64>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
            self.0.pop();
        }
        self
    }
    fn derivative(&self) -> Self {
        Poly(self.0.iter().enumerate().skip(1).map(|(i, &c)| c * i as f64).collect()).trim()
    }
}

impl Algebra for Poly {
    fn zero() -> Self {
        Poly(vec![])
    }
    fn one() -> Self {
        Poly(vec![Complex64::new(1.0, 0.0)])
    }
    fn add(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).copied().unwrap_or_default();
        Poly((0..len).map(|i| get(self, i) + get(other, i)).collect()).trim()
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trim()
    }
    fn scale(&self, c: Complex64) -> Self {
        Poly(self.0.iter().map(|a| a * c).collect()).trim()
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

fn rel_close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1e-300)
}

#[test]
fn stirling_row_sums_are_factorials() {
    for m in 0..=15 {
        let sum: BigUint = stirling_first_row(m).iter().sum();
        assert_eq!(sum, factorial(m as u64), "m = {m}");
    }
}

#[test]
fn complete_bell_is_sum_of_partials() {
    let xs: Vec<Complex64> = (1..=8)
        .map(|i| Complex64::new(0.3 * i as f64, -0.1 * i as f64))
        .collect();
    for p in 0..=8 {
        let total = (0..=p).fold(Complex64::new(0.0, 0.0), |acc, r| {
            acc + partial_bell(p, r, &xs).unwrap()
        });
        assert!(rel_close(total, complete_bell(p, &xs).unwrap(), 1e-13), "p = {p}");
    }
}

/// Σ_q C(α,q)(γ+q)!(α+β−γ−q)! = (α+β+1)!/((β+1)·C(β,γ)), cross-multiplied.
#[test]
fn factorial_convolution_identity() {
    for alpha in 0..=8u64 {
        for beta in 0..=8u64 {
            for gamma in 0..=beta {
                let lhs: BigUint = (0..=alpha)
                    .map(|q| binomial(alpha, q) * factorial(gamma + q) * factorial(alpha + beta - gamma - q))
                    .sum();
                let scaled = lhs * (beta + 1) * binomial(beta, gamma);
                assert_eq!(scaled, factorial(alpha + beta + 1), "α={alpha} β={beta} γ={gamma}");
            }
        }
    }
}

fn f(k: u64) -> BigRational {
    BigRational::from_integer(factorial(k).into())
}

fn r(k: u64) -> BigRational {
    BigRational::from_integer(k.into())
}

#[test]
fn factorial_product_inequalities() {
    for alpha in 0..=30u64 {
        for beta in 0..=30u64 {
            assert!(factorial(alpha) * factorial(beta) <= factorial(alpha + beta));
            if alpha >= 1 && beta >= 1 {
                assert!(factorial(alpha) * factorial(beta) <= factorial(alpha + beta - 1));
            }
        }
    }
    for alpha in 1..=30u64 {
        let s3: BigUint = (0..alpha).map(|q| factorial(alpha - q) * factorial(q + 1)).sum();
        assert!(s3 <= factorial(alpha) * 4u32, "α={alpha}");
        let s4: BigUint = (1..=alpha).map(|q| factorial(alpha - q) * factorial(q)).sum();
        assert!(s4 <= factorial(alpha) * 2u32, "α={alpha}");
        for beta in 2..=30u64 {
            let term = |q: u64| f(alpha - q) * f(q + beta) / r(q + 1);
            let bound = f(alpha + beta) / r(alpha + 1);
            let s5: BigRational = (0..alpha).map(term).fold(BigRational::zero(), |a, b| a + b);
            let s6: BigRational = (1..=alpha).map(term).fold(BigRational::zero(), |a, b| a + b);
            assert!(s5 <= &bound * r(2), "α={alpha} β={beta}");
            assert!(s6 <= &bound * r(3), "α={alpha} β={beta}");
        }
    }
}

/// d/dz B_{p,r}(x(z)) = Σ_q C(p,q) x_q′(z) B_{p−q,r−1}(x(z)), with exact integer polynomials.
#[test]
fn bell_derivative_identity() {
    let xs: Vec<Poly> = (0..7)
        .map(|i| {
            Poly(
                (0..4)
                    .map(|k| Complex64::new(((i * 7 + k * 3) % 5) as f64 - 2.0, 0.0))
                    .collect(),
            )
            .trim()
        })
        .collect();
    for p in 1..=6 {
        for r in 1..=p {
            let lhs = partial_bell(p, r, &xs).unwrap().derivative();
            let mut rhs = Poly::zero();
            for q in 1..=(p - r + 1) {
                let c = Complex64::new(binomial(p as u64, q as u64).to_string().parse().unwrap(), 0.0);
                let term = xs[q - 1]
                    .derivative()
                    .mul(&partial_bell(p - q, r - 1, &xs).unwrap())
                    .scale(c);
                rhs = rhs.add(&term);
            }
            assert_eq!(lhs, rhs, "p={p} r={r}");
        }
    }
}

/// Taylor coefficients of exp(x(z)) by the ODE recurrence E′ = x′E.
fn exp_series(x: &[Complex64], len: usize) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); len];
    e[0] = x[0].exp();
    for k in 1..len {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 1..=k.min(x.len() - 1) {
            acc += x[i] * i as f64 * e[k - i];
        }
        e[k] = acc / k as f64;
    }
    e
}

proptest! {
    #[test]
    fn bell_homogeneity(alpha in cplx(), beta in cplx(), xs in prop::collection::vec(cplx(), 10), p in 1usize..=10, r_off in 0usize..10) {
        let r = 1 + r_off % p;
        let scaled: Vec<Complex64> = xs.iter().enumerate().map(|(i, &x)| alpha * beta.powu(i as u32 + 1) * x).collect();
        let lhs = partial_bell(p, r, &scaled).unwrap();
        let rhs = alpha.powu(r as u32) * beta.powu(p as u32) * partial_bell(p, r, &xs).unwrap();
        // Relative to the size of the summands so cancellation does not inflate the tolerance.
        let size: f64 = partial_bell(p, r, &scaled.iter().map(|x| Complex64::new(x.norm(), 0.0)).collect::<Vec<_>>()).unwrap().re;
        prop_assert!((lhs - rhs).norm() <= 1e-12 * size.max(1e-300));
    }

    #[test]
    fn faa_di_bruno(coeffs in prop::collection::vec(cplx(), 11)) {
        let x: Vec<Complex64> = coeffs.iter().map(|c| c * 0.5).collect();
        let series = exp_series(&x, 11);
        // x^{(k)}(0) = k!·x_k
        let mut fact = 1.0;
        let derivs: Vec<Complex64> = (1..=10).map(|k| { fact *= k as f64; x[k] * fact }).collect();
        let bell = complete_bell_table(10, &derivs).unwrap();
        let mut pf = 1.0;
        for p in 0..=10 {
            if p > 0 { pf *= p as f64; }
            let expected = x[0].exp() * bell[p] / pf;
            prop_assert!(rel_close(series[p], expected, 1e-10) || (series[p] - expected).norm() < 1e-13);
        }
    }

    #[test]
    fn stirling_recurrence(m in 1usize..40) {
        let prev = stirling_first_row(m - 1);
        let row = stirling_first_row(m);
        for rr in 1..=m {
            let left = if rr - 1 < prev.len() { prev[rr - 1].clone() } else { BigUint::zero() };
            let right = if rr < prev.len() { prev[rr].clone() * (m - 1) } else { BigUint::zero() };
            prop_assert_eq!(&row[rr], &(left + right));
        }
        prop_assert!(row[0].is_zero() || m == 0);
        prop_assert!(row[m].is_one());
    }
}
