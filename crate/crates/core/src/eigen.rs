//! Cyclic-by-row Jacobi eigenvalues for dense symmetric matrices.

use alloc::vec::Vec;

use crate::{Error, Result};

pub(crate) const MAX_SWEEPS: usize = 64;
const REL_TOL: f64 = 1e-12;

/// Eigenvalues (unsorted) of the symmetric `n x n` row-major matrix `a`.
///
/// Sweeps run until the off-diagonal Frobenius norm drops to
/// `REL_TOL * ||A||_F`. Only the upper triangle is updated and read.
pub(crate) fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>> {
    debug_assert_eq!(a.len(), n * n);
    let total = libm::sqrt(a.iter().map(|x| x * x).sum::<f64>());
    let target = REL_TOL * total;

    let at = |i: usize, j: usize| if i <= j { i * n + j } else { j * n + i };

    for sweep in 0..=MAX_SWEEPS {
        let off = libm::sqrt(
            2.0 * (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| a[i * n + j] * a[i * n + j])
                .sum::<f64>(),
        );
        if off <= target {
            return Ok((0..n).map(|i| a[i * n + i]).collect());
        }
        if sweep == MAX_SWEEPS {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if libm::fabs(tau) > 1e150 {
                    0.5 / tau
                } else {
                    let s = if tau >= 0.0 { 1.0 } else { -1.0 };
                    s / (libm::fabs(tau) + libm::sqrt(1.0 + tau * tau))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[at(k, p)];
                    let akq = a[at(k, q)];
                    a[at(k, p)] = c * akp - s * akq;
                    a[at(k, q)] = s * akp + c * akq;
                }
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    #[test]
    fn two_by_two() {
        let ev = sorted(symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap());
        assert!((ev[0] - 3.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_and_zero_matrices() {
        assert_eq!(
            symmetric_eigenvalues(vec![0.0; 9], 3).unwrap(),
            vec![0.0; 3]
        );
        let ev = symmetric_eigenvalues(vec![5.0, 0.0, 0.0, -1.0], 2).unwrap();
        assert_eq!(ev, vec![5.0, -1.0]);
    }

    #[test]
    fn tridiagonal_known_spectrum() {
        // tridiag(-1, 2, -1) of order n: eigenvalues 2 - 2 cos(k pi / (n + 1)).
        let n = 9;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 2.0;
            if i + 1 < n {
                a[i * n + i + 1] = -1.0;
                a[(i + 1) * n + i] = -1.0;
            }
        }
        let ev = sorted(symmetric_eigenvalues(a, n).unwrap());
        let mut expect: Vec<f64> = (1..=n)
            .map(|k| 2.0 - 2.0 * libm::cos(k as f64 * core::f64::consts::PI / (n + 1) as f64))
            .collect();
        expect = sorted(expect);
        for (x, y) in ev.iter().zip(&expect) {
            assert!((x - y).abs() < 1e-12, "{x} vs {y}");
        }
    }
}
