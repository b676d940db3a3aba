//! Central finite differences with one Richardson extrapolation.
//!
//! All derivative consumers in the crate work on real-valued functions of
//! the flattened real coordinates `(Re z₁, Im z₁, …)`; Wirtinger
//! coefficients are recovered by linear combination afterwards.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Central difference `∂f/∂x_i` with Richardson extrapolation
/// (`(4 A(h/2) − A(h)) / 3`).
pub fn partial<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], i: usize, h: f64) -> f64 {
    let d = |step: f64| {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[i] += step;
        xm[i] -= step;
        (f(&xp) - f(&xm)) / (2.0 * step)
    };
    (4.0 * d(h / 2.0) - d(h)) / 3.0
}

/// Full real gradient.
pub fn gradient<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], h: f64) -> Vec<f64> {
    (0..x.len()).map(|i| partial(f, x, i, h)).collect()
}

fn second_at<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], i: usize, j: usize, h: f64) -> f64 {
    let eval = |di: f64, dj: f64| {
        let mut y = x.to_vec();
        y[i] += di;
        y[j] += dj;
        f(&y)
    };
    if i == j {
        let d = |s: f64| (eval(s, 0.0) - 2.0 * f(x) + eval(-s, 0.0)) / (s * s);
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    } else {
        let d = |s: f64| (eval(s, s) - eval(s, -s) - eval(-s, s) + eval(-s, -s)) / (4.0 * s * s);
        (4.0 * d(h / 2.0) - d(h)) / 3.0
    }
}

/// Full real Hessian (symmetrized).
pub fn hessian<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], h: f64) -> DMatrix<f64> {
    let n = x.len();
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = second_at(f, x, i, j, h);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

/// Wirtinger second derivatives extracted from a real Hessian.
///
/// With coordinates `z_k = x_k + i y_k` stored as `(x₁, y₁, x₂, …)`:
/// `∂²/∂z_i∂z_j   = ¼ (H_{x_i x_j} − H_{y_i y_j}) − i·¼ (H_{x_i y_j} + H_{y_i x_j})`
/// `∂²/∂z_i∂z̄_j  = ¼ (H_{x_i x_j} + H_{y_i y_j}) + i·¼ (H_{x_i y_j} − H_{y_i x_j})`
pub struct WirtingerSecond {
    /// `∂²f/∂z_i ∂z_j` (symmetric part, "holomorphic" coefficients)
    pub zz: DMatrix<Complex64>,
    /// `∂²f/∂z_i ∂z̄_j` (Hermitian part)
    pub zzbar: DMatrix<Complex64>,
}

pub fn wirtinger_second(h: &DMatrix<f64>) -> WirtingerSecond {
    let n = h.nrows() / 2;
    let xi = |i: usize| 2 * i;
    let yi = |i: usize| 2 * i + 1;
    let mut zz = DMatrix::zeros(n, n);
    let mut zzbar = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let xx = h[(xi(i), xi(j))];
            let yy = h[(yi(i), yi(j))];
            let xy = h[(xi(i), yi(j))];
            let yx = h[(yi(i), xi(j))];
            zz[(i, j)] = 0.25 * Complex64::new(xx - yy, -(xy + yx));
            zzbar[(i, j)] = 0.25 * Complex64::new(xx + yy, xy - yx);
        }
    }
    WirtingerSecond { zz, zzbar }
}

/// Wirtinger gradient `∂f/∂z_i = ½(∂/∂x_i − i ∂/∂y_i)` from a real gradient.
pub fn wirtinger_gradient(g: &[f64]) -> Vec<Complex64> {
    g.chunks_exact(2)
        .map(|ab| 0.5 * Complex64::new(ab[0], -ab[1]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_exact() {
        // f(x, y) = 3x² + xy − 2y² + x
        let f = |p: &[f64]| 3.0 * p[0] * p[0] + p[0] * p[1] - 2.0 * p[1] * p[1] + p[0];
        let x = [0.3, -0.7];
        let g = gradient(&f, &x, 1e-5);
        assert!((g[0] - (6.0 * x[0] + x[1] + 1.0)).abs() < 1e-9);
        assert!((g[1] - (x[0] - 4.0 * x[1])).abs() < 1e-9);
        let h = hessian(&f, &x, 1e-4);
        assert!((h[(0, 0)] - 6.0).abs() < 1e-7);
        assert!((h[(0, 1)] - 1.0).abs() < 1e-7);
        assert!((h[(1, 1)] + 4.0).abs() < 1e-7);
    }

    #[test]
    fn wirtinger_of_known_form() {
        // f(z) = |z|² + Re(a z²) with a = 2 − i:
        // ∂²/∂z∂z̄ = 1, ∂²/∂z∂z = a
        let a = Complex64::new(2.0, -1.0);
        let f = |p: &[f64]| {
            let z = Complex64::new(p[0], p[1]);
            z.norm_sqr() + (a * z * z).re
        };
        let h = hessian(&f, &[0.1, 0.2], 1e-4);
        let w = wirtinger_second(&h);
        assert!((w.zzbar[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-7);
        assert!((w.zz[(0, 0)] - a).norm() < 1e-7);
    }
}
