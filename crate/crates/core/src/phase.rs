use num_complex::Complex64;
use std::f64::consts::TAU;

/// `exp(2πi·k/n)` with `k` reduced modulo `n` first, so equal residues give
/// bit-identical phases.
pub(crate) fn unit_root(k: i64, n: usize) -> Complex64 {
    let r = k.rem_euclid(n as i64) as usize;
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * r == n {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == n {
        return Complex64::new(0.0, 1.0);
    }
    if 4 * r == 3 * n {
        return Complex64::new(0.0, -1.0);
    }
    Complex64::from_polar(1.0, TAU * r as f64 / n as f64)
}
