/// Sweeps allowed before giving up; cyclic Jacobi converges quadratically, so
/// real inputs finish in well under 20.
pub(crate) const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a dense symmetric matrix (row-major, order `n`) by cyclic
/// Jacobi rotations. Stops once the off-diagonal Frobenius norm falls to
/// `rel_tol · ‖A‖_F`. Returns `None` without convergence.
pub(crate) fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize, rel_tol: f64) -> Option<Vec<f64>> {
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = rel_tol * norm;
    let diag = |a: &[f64]| (0..n).map(|i| a[i * n + i]).collect::<Vec<_>>();
    if norm == 0.0 {
        return Some(diag(&a));
    }

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= threshold {
            return Some(diag(&a));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
            }
        }
    }
    None
}
