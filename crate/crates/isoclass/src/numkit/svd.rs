//! One-sided Jacobi SVD.
//!
//! Chosen over a Gram-matrix route because tiny singular values must be
//! resolved well below sqrt(eps) for the rank decisions that drive the
//! elliptic/parabolic/hyperbolic branches.

use super::Matrix;

/// Thin SVD of an m x n matrix: singular values (descending) and the
/// right singular vectors as columns of `v` (n x n, orthogonal).
#[derive(Debug, Clone)]
pub struct Svd {
    pub singular_values: Vec<f64>,
    pub v: Matrix,
    /// Left singular vectors for the nonzero part, columns of an m x n
    /// matrix; columns beyond the rank are zero.
    pub u: Matrix,
}

impl Svd {
    pub fn sigma_max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    /// Orthogonalizes the columns of `m` by plane rotations; singular
    /// values are the resulting column norms.
    pub fn compute(m: &Matrix) -> Svd {
        let rows = m.rows();
        let cols = m.cols();
        let mut b = m.clone();
        let mut v = Matrix::identity(cols);

        let max_sweeps = 60;
        for _ in 0..max_sweeps {
            let mut rotated = false;
            for p in 0..cols {
                for q in (p + 1)..cols {
                    let mut app = 0.0;
                    let mut aqq = 0.0;
                    let mut apq = 0.0;
                    for i in 0..rows {
                        app += b[(i, p)] * b[(i, p)];
                        aqq += b[(i, q)] * b[(i, q)];
                        apq += b[(i, p)] * b[(i, q)];
                    }
                    if apq.abs() <= f64::EPSILON * (app * aqq).sqrt() || apq == 0.0 {
                        continue;
                    }
                    rotated = true;
                    let tau = (aqq - app) / (2.0 * apq);
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = c * t;
                    for i in 0..rows {
                        let bip = b[(i, p)];
                        let biq = b[(i, q)];
                        b[(i, p)] = c * bip - s * biq;
                        b[(i, q)] = s * bip + c * biq;
                    }
                    for i in 0..cols {
                        let vip = v[(i, p)];
                        let viq = v[(i, q)];
                        v[(i, p)] = c * vip - s * viq;
                        v[(i, q)] = s * vip + c * viq;
                    }
                }
            }
            if !rotated {
                break;
            }
        }

        // Column norms are the singular values; sort descending.
        let mut order: Vec<usize> = (0..cols).collect();
        let mut sigmas: Vec<f64> = (0..cols)
            .map(|j| (0..rows).map(|i| b[(i, j)] * b[(i, j)]).sum::<f64>().sqrt())
            .collect();
        order.sort_by(|&a, &bq| sigmas[bq].partial_cmp(&sigmas[a]).unwrap());

        let mut v_sorted = Matrix::zeros(cols, cols);
        let mut u = Matrix::zeros(rows, cols);
        let mut s_sorted = Vec::with_capacity(cols);
        for (new_j, &old_j) in order.iter().enumerate() {
            let s = sigmas[old_j];
            s_sorted.push(s);
            for i in 0..cols {
                v_sorted[(i, new_j)] = v[(i, old_j)];
            }
            if s > 0.0 {
                for i in 0..rows {
                    u[(i, new_j)] = b[(i, old_j)] / s;
                }
            }
        }
        sigmas.clear();

        Svd { singular_values: s_sorted, v: v_sorted, u }
    }
}

/// Least-squares solve via the pseudo-inverse, truncating singular values
/// below `rel_tol * sigma_max`.
pub fn solve_least_squares(m: &Matrix, rhs: &[f64], rel_tol: f64) -> Vec<f64> {
    let svd = Svd::compute(m);
    let cutoff = rel_tol * svd.sigma_max().max(1.0);
    let mut x = vec![0.0; m.cols()];
    for (j, &s) in svd.singular_values.iter().enumerate() {
        if s <= cutoff {
            continue;
        }
        let mut coeff = 0.0;
        for i in 0..m.rows() {
            coeff += svd.u[(i, j)] * rhs[i];
        }
        coeff /= s;
        for i in 0..m.cols() {
            x[i] += coeff * svd.v[(i, j)];
        }
    }
    x
}
