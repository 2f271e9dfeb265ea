//! Exact integer kernels and Bell polynomials over a generic commutative algebra.

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

/// Commutative algebra over the complex numbers.
///
/// Implemented for `Complex64` and [`crate::LaurentSeries`]; Bell polynomials
/// are written once against this interface.
pub trait Algebra: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: Complex64) -> Self;
    fn is_zero(&self) -> bool;
}

impl Algebra for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: Complex64) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    assert!(k <= n, "binomial requires k <= n");
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient as a float; exact while the value fits in 53 bits.
pub fn binomial_f64(n: usize, k: usize) -> f64 {
    binomial(n as u64, k as u64).to_f64().unwrap_or(f64::INFINITY)
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// Rising factorial `w(w+1)…(w+m−1)`.
pub fn pochhammer(w: Complex64, m: usize) -> Complex64 {
    (0..m).fold(Complex64::new(1.0, 0.0), |acc, i| acc * (w + i as f64))
}

/// Row `m` of the unsigned Stirling numbers of the first kind, indexed by `r`.
pub fn stirling_first_row(m: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for i in 0..m {
        let mut next = vec![BigUint::zero(); i + 2];
        for (r, v) in row.iter().enumerate() {
            next[r + 1] += v;
            next[r] += v * BigUint::from(i);
        }
        row = next;
    }
    row
}

pub fn stirling_first_unsigned(m: usize, r: usize) -> BigUint {
    assert!(r <= m, "stirling_first_unsigned requires r <= m");
    stirling_first_row(m).swap_remove(r)
}

/// Partial exponential Bell polynomial `B_{p,r}(x₁, …, x_{p−r+1})`.
pub fn partial_bell<T: Algebra>(p: usize, r: usize, xs: &[T]) -> Result<T> {
    if r > p {
        return Ok(T::zero());
    }
    if r == 0 {
        return Ok(if p == 0 { T::one() } else { T::zero() });
    }
    let needed = p - r + 1;
    if xs.len() < needed {
        return Err(Error::InsufficientArguments { needed, got: xs.len() });
    }
    // tri[i][s] = B_{i,s}; only s <= r and i - s <= p - r are ever needed.
    let mut tri: Vec<Vec<T>> = vec![vec![T::zero(); r + 1]; p + 1];
    tri[0][0] = T::one();
    for s in 0..r {
        for i in s..=(s + p - r) {
            let mut acc = T::zero();
            for q in 0..=(i - s) {
                let prev = &tri[i - q][s];
                if prev.is_zero() || xs[q].is_zero() {
                    continue;
                }
                let c = Complex64::new(binomial_f64(i, q), 0.0);
                acc = acc.add(&xs[q].mul(prev).scale(c));
            }
            tri[i + 1][s + 1] = acc;
        }
    }
    Ok(tri[p][r].clone())
}

/// Complete Bell polynomials `B_0, …, B_p`.
pub fn complete_bell_table<T: Algebra>(p: usize, xs: &[T]) -> Result<Vec<T>> {
    if xs.len() < p {
        return Err(Error::InsufficientArguments {
            needed: p,
            got: xs.len(),
        });
    }
    let mut out = Vec::with_capacity(p + 1);
    out.push(T::one());
    for i in 0..p {
        let mut acc = T::zero();
        for q in 0..=i {
            if out[i - q].is_zero() || xs[q].is_zero() {
                continue;
            }
            let c = Complex64::new(binomial_f64(i, q), 0.0);
            acc = acc.add(&xs[q].mul(&out[i - q]).scale(c));
        }
        out.push(acc);
    }
    Ok(out)
}

pub fn complete_bell<T: Algebra>(p: usize, xs: &[T]) -> Result<T> {
    Ok(complete_bell_table(p, xs)?.swap_remove(p))
}
