//! Matrix exponential by scaling and squaring with a Taylor kernel.
//!
//! This is deliberately a different algorithm from the spectral route
//! `H(t) = sum_r exp(i theta_r t) E_r`; the two are cross-checked against
//! each other everywhere, so this one must not share code with the
//! eigensolver.

use super::CMat;
use num_complex::Complex64;
use num_traits::Float;

/// Taylor degree used after scaling the one-norm below 1/2. With
/// `||B|| <= 0.5` the degree-24 tail is below 1e-26, far under the
/// squaring-amplified target of 1e-12.
const TAYLOR_DEGREE: usize = 24;

/// Compute `exp(B)` for a square complex matrix.
pub fn expm(b: &CMat) -> CMat {
    let n = b.nrows();
    assert_eq!(n, b.ncols(), "expm requires a square matrix");
    if n == 0 {
        return CMat::zeros(0, 0);
    }

    let norm = b.one_norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = b.scale(Complex64::new(libm::exp2(-(squarings as f64)), 0.0));

    // Horner evaluation of the degree-TAYLOR_DEGREE Taylor polynomial.
    let mut acc = CMat::identity(n);
    for k in (1..=TAYLOR_DEGREE).rev() {
        acc = scaled.matmul(&acc.scale(Complex64::new(1.0 / k as f64, 0.0)));
        for i in 0..n {
            acc[(i, i)] += Complex64::new(1.0, 0.0);
        }
    }

    let mut result = acc;
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn exp_of_zero_is_identity() {
        let z = CMat::zeros(3, 3);
        assert!(expm(&z).max_norm_diff(&CMat::identity(3)) < 1e-15);
    }

    #[test]
    fn exp_of_i_pi_swap() {
        // exp(i t S) for the swap S at t = pi/2 is [[0, i], [i, 0]].
        let mut b = CMat::zeros(2, 2);
        b[(0, 1)] = Complex64::new(0.0, PI / 2.0);
        b[(1, 0)] = Complex64::new(0.0, PI / 2.0);
        let e = expm(&b);
        assert!((e[(0, 0)]).norm() < 1e-14);
        assert!((e[(0, 1)] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
        assert!((e[(1, 0)] - Complex64::new(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn large_time_stays_unitary() {
        let mut b = CMat::zeros(3, 3);
        for (i, j) in [(0usize, 1usize), (1, 2)] {
            b[(i, j)] = Complex64::new(0.0, 37.5);
            b[(j, i)] = Complex64::new(0.0, 37.5);
        }
        let e = expm(&b);
        assert!(e.unitarity_residual() < 1e-11);
    }
}
