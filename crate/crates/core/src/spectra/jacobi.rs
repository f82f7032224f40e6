use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

pub const MAX_SWEEPS: usize = 64;
pub const RELATIVE_TOLERANCE: f64 = 1e-12;

/// Eigenvalues in ascending order with optional aligned eigenvectors
/// (`vectors[j]` belongs to `values[j]`).
#[derive(Debug, Clone)]
pub struct RawEigen {
    pub values: Vec<f64>,
    pub vectors: Option<Vec<Vec<f64>>>,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi eigensolver.
///
/// Sweeps rotate every off-diagonal pair `(p, q)`, `p < q`, in row order and
/// stop once the off-diagonal Frobenius norm drops below `1e-12 · ‖M‖_F`.
/// Failing that within [`MAX_SWEEPS`] sweeps is an error carrying the residual.
pub fn eig_sym(m: &SymMatrix, want_vectors: bool) -> Result<RawEigen> {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });
    let target = RELATIVE_TOLERANCE * m.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a, n);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
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
                    let g = a[k * n + p];
                    let h = a[k * n + q];
                    let new_p = c * g - s * h;
                    let new_q = s * g + c * h;
                    a[k * n + p] = new_p;
                    a[p * n + k] = new_p;
                    a[k * n + q] = new_q;
                    a[q * n + k] = new_q;
                }
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let g = v[k * n + p];
                        let h = v[k * n + q];
                        v[k * n + p] = c * g - s * h;
                        v[k * n + q] = s * g + c * h;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = v.map(|v| {
        order
            .iter()
            .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
            .collect()
    });
    Ok(RawEigen { values, vectors })
}
