//! Euclidean normal forms and Segre classification for `I(E^n) = Euc(n)`.
//!
//! Matrices use the affine convention: `(n+1) x (n+1)`, last row
//! `(0, ..., 0, 1)`, upper-left `n x n` block orthogonal. The normal form
//! splits `V = V_R (+) V_1` along the fixed space of the linear part,
//! moves the base point to kill the translation off the fixed space, and
//! reads the translation length off what remains.

use crate::error::{Error, Result};
use crate::forms::{Block, ConjugationResult, NormalForm};
use crate::numkit::{self, dot, rank_kernel, Matrix, Tolerance};
use crate::sampling::euclidean_inverse;
use crate::segre::{EuclideanKind, EuclideanSegre, SphericalSegre};
use crate::spherical::{orthogonal_parts, symbol_of_form};

/// Validates the affine shape and the orthogonality of the linear part.
pub fn ensure_euclidean(m: &Matrix, tol: &Tolerance) -> Result<()> {
    if !m.is_square() || m.rows() < 2 {
        return Err(Error::UnsupportedDimension {
            space: "euclidean (affine matrices are at least 2x2)",
            n: m.rows() as i64 - 1,
        });
    }
    let n = m.rows() - 1;
    let bound = tol.residual_at(m.norm_inf());
    for j in 0..n {
        if m[(n, j)].abs() > bound {
            return Err(Error::NotInGroup { group: "Euc(n)", residual: m[(n, j)].abs() });
        }
    }
    if (m[(n, n)] - 1.0).abs() > bound {
        return Err(Error::NotInGroup { group: "Euc(n)", residual: (m[(n, n)] - 1.0).abs() });
    }
    let a = linear_part(m);
    let res = a.transpose().mul(&a).sub(&Matrix::identity(n)).norm_inf();
    if res > bound {
        return Err(Error::NotInGroup { group: "Euc(n)", residual: res });
    }
    Ok(())
}

pub(crate) fn linear_part(m: &Matrix) -> Matrix {
    let n = m.rows() - 1;
    Matrix::from_fn(n, n, |i, j| m[(i, j)])
}

fn translation_part(m: &Matrix) -> Vec<f64> {
    let n = m.rows() - 1;
    (0..n).map(|i| m[(i, n)]).collect()
}

struct Split {
    /// Translation length; zero in the elliptic case.
    length: f64,
    /// Unit direction of the translation axis (hyperbolic case only).
    axis: Option<Vec<f64>>,
    /// Base point in `E^n` moved onto the invariant axis / fixed space.
    base_point: Vec<f64>,
    /// Orthonormal basis of the fixed space `Ker(A - I)`.
    fixed: Vec<Vec<f64>>,
    /// Orthonormal basis of its complement `V_R`.
    moving: Vec<Vec<f64>>,
    elliptic: bool,
}

/// Splits off the unipotent part: conjugating by the translation that
/// solves `(A - I) c = -b` on the complement of the fixed space leaves a
/// pure translation inside the fixed space, whose norm is the translation
/// length.
fn split(m: &Matrix, tol: &Tolerance) -> Result<Split> {
    let n = m.rows() - 1;
    let a = linear_part(m);
    let b = translation_part(m);
    let id = Matrix::identity(n);

    let (_, fixed) = rank_kernel(&a.sub(&id), tol);
    let r = fixed.len();

    // Elliptic/hyperbolic branch from the kernel dimensions d and r.
    let (_, full_kernel) = rank_kernel(&m.sub(&Matrix::identity(n + 1)), tol);
    let d = full_kernel.len();
    if d != r && d != r + 1 {
        return Err(Error::InternalInconsistency(format!(
            "kernel dimensions d = {d}, r = {r} violate the d in {{r, r+1}} dichotomy; \
             the tolerances are likely mis-set for this input"
        )));
    }
    let elliptic = d == r + 1;

    let moving: Vec<Vec<f64>> = if r == n {
        Vec::new()
    } else if r == 0 {
        Matrix::identity(n).columns()
    } else {
        let stack = Matrix::from_rows(&fixed)?;
        let (_, complement) = rank_kernel(&stack, tol);
        complement
    };

    // Solve (A_R - I) x = -C^T b on the complement and move the origin.
    let mut c_point = vec![0.0; n];
    if !moving.is_empty() {
        let cmat = Matrix::from_columns(&moving);
        let a_r = cmat.transpose().mul(&a).mul(&cmat);
        let rhs: Vec<f64> = {
            let ctb = cmat.transpose().mul_vec(&b);
            ctb.iter().map(|x| -x).collect()
        };
        let k = moving.len();
        let sys = a_r.sub(&Matrix::identity(k));
        let x = numkit::svd::solve_least_squares(&sys, &rhs, tol.rank_tol);
        c_point = cmat.mul_vec(&x);
    }

    // Residual translation lives in the fixed space.
    let shifted: Vec<f64> = {
        let ac = a.mul_vec(&c_point);
        (0..n).map(|i| b[i] + ac[i] - c_point[i]).collect()
    };
    let b_fixed: Vec<f64> = {
        // Projection onto the fixed space.
        let mut p = vec![0.0; n];
        for w in &fixed {
            let coeff = dot(&shifted, w);
            for i in 0..n {
                p[i] += coeff * w[i];
            }
        }
        p
    };
    let leak: f64 = shifted
        .iter()
        .zip(&b_fixed)
        .map(|(s, p)| (s - p).abs())
        .fold(0.0, f64::max);
    if leak > tol.residual_at(m.norm_inf()).max(1e-12) * 1e3 {
        return Err(Error::InternalInconsistency(format!(
            "translation residual off the fixed space: {leak:.3e}"
        )));
    }

    let length = dot(&b_fixed, &b_fixed).sqrt();
    if elliptic {
        Ok(Split { length: 0.0, axis: None, base_point: c_point, fixed, moving, elliptic })
    } else {
        if length <= 0.0 {
            return Err(Error::InternalInconsistency(
                "hyperbolic branch with vanishing translation length".into(),
            ));
        }
        let axis: Vec<f64> = b_fixed.iter().map(|x| x / length).collect();
        Ok(Split { length, axis: Some(axis), base_point: c_point, fixed, moving, elliptic })
    }
}

/// Computes the Euclidean normal form of an affine isometry matrix, with
/// a conjugator of the same affine shape.
pub fn euclidean_normal_form(m: &Matrix, tol: &Tolerance) -> Result<ConjugationResult> {
    ensure_euclidean(m, tol)?;
    let n = m.rows() - 1;
    let s = split(m, tol)?;
    let a = linear_part(m);

    // Canonical blocks of the orthogonal part A_R (no +1 eigenvalues).
    let mut blocks: Vec<Block> = Vec::new();
    let mut lin_cols: Vec<Vec<f64>> = Vec::new();
    let mut diagnostics = Vec::new();
    if !s.moving.is_empty() {
        let cmat = Matrix::from_columns(&s.moving);
        let a_r = cmat.transpose().mul(&a).mul(&cmat);
        let parts = orthogonal_parts(&a_r, tol)?;
        if parts.blocks.iter().any(|b| matches!(b, Block::PosId(_))) {
            return Err(Error::InternalInconsistency(
                "fixed directions leaked into the moving part".into(),
            ));
        }
        for col in &parts.basis {
            lin_cols.push(cmat.mul_vec(col));
        }
        blocks.extend(parts.blocks);
        diagnostics.extend(parts.diagnostics);
    }

    let r = s.fixed.len();
    if s.elliptic {
        blocks.push(Block::PosId(r + 1));
        lin_cols.extend(s.fixed.iter().cloned());
    } else {
        let axis = s.axis.clone().expect("hyperbolic split carries an axis");
        // Fixed-space directions orthogonal to the axis come first, the
        // axis itself pairs with the affine coordinate in the Trans block.
        let mut perp: Vec<Vec<f64>> = Vec::new();
        for w in &s.fixed {
            let mut w2 = w.clone();
            let c = dot(&w2, &axis);
            for i in 0..n {
                w2[i] -= c * axis[i];
            }
            // Orthonormalize against previously kept directions.
            for p in &perp {
                let c = dot(&w2, p);
                for i in 0..n {
                    w2[i] -= c * p[i];
                }
            }
            let norm = dot(&w2, &w2).sqrt();
            if norm > 1e-8 {
                perp.push(w2.iter().map(|x| x / norm).collect());
            }
        }
        if perp.len() != r - 1 {
            return Err(Error::InternalInconsistency(format!(
                "axis complement inside the fixed space has dimension {}, expected {}",
                perp.len(),
                r - 1
            )));
        }
        if r > 1 {
            blocks.push(Block::PosId(r - 1));
        }
        blocks.push(Block::Trans(s.length));
        lin_cols.extend(perp);
        lin_cols.push(axis);
    }

    // Assemble the affine conjugator: linear columns plus the base point.
    let mut q = Matrix::identity(n + 1);
    for (j, col) in lin_cols.iter().enumerate() {
        for i in 0..n {
            q[(i, j)] = col[i];
        }
    }
    for i in 0..n {
        q[(i, n)] = s.base_point[i];
    }

    let form = NormalForm::proper(blocks);
    let form_matrix = form.matrix();
    let residual = euclidean_inverse(&q).mul(m).mul(&q).sub(&form_matrix).norm_inf();
    Ok(ConjugationResult { form, form_matrix, conjugator: q, residual, diagnostics })
}

/// Reads the Euclidean Segre symbol off a normal form.
pub fn symbol_of_euclidean_form(form: &NormalForm) -> Result<EuclideanSegre> {
    let mut a_part: Vec<Block> = Vec::new();
    let mut tail_pos: usize = 0;
    let mut trans: Option<f64> = None;
    for b in &form.blocks {
        match b {
            Block::Rot { .. } | Block::NegId(_) => a_part.push(b.clone()),
            Block::PosId(k) => tail_pos += k,
            Block::Trans(x) => trans = Some(*x),
            _ => {
                return Err(Error::InvariantViolation(
                    "Euclidean forms contain only rotation, +-identity and translation blocks".into(),
                ))
            }
        }
    }
    let sigma: SphericalSegre = symbol_of_form(&NormalForm::proper(a_part))?;
    match trans {
        None => {
            if tail_pos == 0 {
                return Err(Error::InvariantViolation(
                    "an elliptic Euclidean form fixes at least the affine coordinate".into(),
                ));
            }
            EuclideanSegre::new(EuclideanKind::Elliptic, tail_pos - 1, sigma)
        }
        Some(_) => EuclideanSegre::new(EuclideanKind::Hyperbolic, tail_pos + 1, sigma),
    }
}

/// Classifies a Euclidean isometry by its Segre symbol: kind from the
/// `d = r + 1` (elliptic) versus `d = r` (hyperbolic) dichotomy, `r` the
/// fixed-space dimension of the linear part, sigma the symbol of the
/// non-unit part.
pub fn classify_euclidean(m: &Matrix, tol: &Tolerance) -> Result<EuclideanSegre> {
    let nf = euclidean_normal_form(m, tol)?;
    symbol_of_euclidean_form(&nf.form)
}
