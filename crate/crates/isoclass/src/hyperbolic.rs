//! Lorentz normal forms and Segre classification for `I(H^n) = PO(1,n)`:
//! space-time decomposition, elliptic/parabolic/hyperbolic detection, the
//! Theta-block construction, and improper-input handling.
//!
//! The eigenvalue-1 primary component is taken as `Ker((T - I)^3)` (its
//! Jordan blocks have size 1 or 3 in signature (1, n)), which is robust
//! where raw eigenvalues of the defective parabolic block scatter like
//! eps^(1/3). Everything away from eigenvalue 1 is semisimple and handled
//! through the spectrum of the restricted map.

use crate::error::{Error, Result};
use crate::forms::{Block, ConjugationResult, NormalForm};
use crate::numkit::{
    dot, general_eigenvalues, orthonormalize, rank_kernel, symmetric_eigen, BilinearForm, Matrix,
    Svd, Tolerance,
};
use crate::sampling::lorentz_inverse;
use crate::segre::{HyperbolicKind, HyperbolicSegre, SphericalSegre};
use crate::spherical::{orthogonal_parts, symbol_of_form};

fn lorentz_j(size: usize) -> Matrix {
    let mut j = Matrix::identity(size);
    j[(0, 0)] = -1.0;
    j
}

/// Validates membership in `O(1,n)`; the threshold scales with the square
/// of the matrix norm since the defect `T^t J T - J` is quadratic in `T`.
pub fn ensure_lorentz(t: &Matrix, tol: &Tolerance) -> Result<()> {
    if !t.is_square() || t.rows() < 2 {
        return Err(Error::UnsupportedDimension {
            space: "hyperbolic (Lorentz matrices are at least 2x2)",
            n: t.rows() as i64 - 1,
        });
    }
    let j = lorentz_j(t.rows());
    let res = t.transpose().mul(&j).mul(t).sub(&j).norm_inf();
    let scale = t.norm_inf().max(1.0);
    if res > tol.residual_tol * scale * scale {
        return Err(Error::NotInGroup { group: "O(1,n)", residual: res });
    }
    Ok(())
}

/// A Lorentz matrix is proper (preserves `H^n`) iff its upper-left entry
/// is positive; on `O(1,n)` that entry never lies in `(-1, 1)`.
pub fn is_proper(t: &Matrix) -> bool {
    t[(0, 0)] > 0.0
}

/// Temporal kind of the space-time decomposition: `V_t = V_1` (unit) or
/// `V_t = V_lambda (+) V_{1/lambda}` (boost pair).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TemporalKind {
    Unit,
    BoostPair { lambda: f64 },
}

/// Space-time decomposition of the ambient Lorentz space with respect to
/// a proper isometry.
#[derive(Debug, Clone)]
pub struct SpaceTimeSplit {
    pub temporal_basis: Vec<Vec<f64>>,
    pub spatial_basis: Vec<Vec<f64>>,
    pub temporal_kind: TemporalKind,
}

impl SpaceTimeSplit {
    pub fn temporal_dim(&self) -> usize {
        self.temporal_basis.len()
    }
}

/// Kernel of `(T - I)^k`. The power is scaled down when its norm exceeds
/// one (so boosts with large parameters do not drown the rank threshold)
/// but never scaled up: a power that is pure round-off noise must stay
/// below the absolute floor of the rank decision.
fn unit_kernel(t: &Matrix, k: usize, tol: &Tolerance) -> Vec<Vec<f64>> {
    let n = t.rows();
    let mut p = t.sub(&Matrix::identity(n)).pow(k);
    let norm = p.norm_inf();
    if norm > 1.0 {
        p = p.scale(1.0 / norm);
    }
    let (_, kernel) = rank_kernel(&p, tol);
    kernel
}

/// Signature of the restricted Lorentz form on the span of `basis`
/// (columns Euclidean-orthonormal): (negatives, positives). A numerically
/// null direction is reported as `DegenerateSpan`.
fn restricted_signature(basis: &[Vec<f64>], tol: &Tolerance) -> Result<(usize, usize)> {
    let b = Matrix::from_columns(basis);
    let j = lorentz_j(b.rows());
    let gram = b.transpose().mul(&j).mul(&b);
    let (vals, _) = symmetric_eigen(&gram);
    let thr = tol.rank_tol * vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut neg = 0;
    let mut pos = 0;
    for v in vals {
        if v < -thr {
            neg += 1;
        } else if v > thr {
            pos += 1;
        } else {
            return Err(Error::DegenerateSpan {
                context: "restricted Lorentz form has a numerically null direction",
            });
        }
    }
    Ok((neg, pos))
}

/// Decomposes the ambient space into the sum of the space-like primary
/// components and the rest. Requires a proper input; callers handle the
/// improper case through the +-normal-form corollary.
pub fn space_time_split(t: &Matrix, tol: &Tolerance) -> Result<SpaceTimeSplit> {
    ensure_lorentz(t, tol)?;
    if !is_proper(t) {
        return Err(Error::NotProper { entry: t[(0, 0)] });
    }
    let size = t.rows();
    let j = lorentz_j(size);

    let v1 = unit_kernel(t, 3, tol);
    let unit_is_temporal = if v1.is_empty() {
        false
    } else {
        let (neg, _) = restricted_signature(&v1, tol)?;
        if neg > 1 {
            return Err(Error::InternalInconsistency(
                "eigenvalue-1 component carries more than one time-like direction".into(),
            ));
        }
        neg == 1
    };

    let (temporal, kind) = if unit_is_temporal {
        (v1, TemporalKind::Unit)
    } else {
        // Boost pair: the largest real eigenvalue and its inverse.
        let eigs = general_eigenvalues(t)?;
        let mut reals: Vec<f64> = eigs.iter().filter(|e| e.1 == 0.0).map(|e| e.0).collect();
        reals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        let lambda = reals.first().copied().unwrap_or(1.0);
        if lambda <= 1.0 + 1e-8 {
            return Err(Error::InternalInconsistency(
                "no time-like primary component found (neither unit nor boost pair)".into(),
            ));
        }
        let mu = reals
            .iter()
            .copied()
            .min_by(|a, b| {
                (a - 1.0 / lambda).abs().partial_cmp(&(b - 1.0 / lambda).abs()).unwrap()
            })
            .unwrap();
        let eigenvector = |val: f64| -> Result<Vec<f64>> {
            let mut shifted = t.clone();
            for i in 0..size {
                shifted[(i, i)] -= val;
            }
            let (_, kernel) = rank_kernel(&shifted, tol);
            if kernel.len() != 1 {
                return Err(Error::InternalInconsistency(format!(
                    "boost eigenvalue {val} has eigenspace of dimension {}",
                    kernel.len()
                )));
            }
            Ok(kernel.into_iter().next().unwrap())
        };
        let u = eigenvector(lambda)?;
        let v = eigenvector(mu)?;
        (vec![u, v], TemporalKind::BoostPair { lambda })
    };

    // Spatial part: the J-orthogonal complement of the temporal span.
    let spatial = if temporal.len() == size {
        Vec::new()
    } else {
        let tb = Matrix::from_columns(&temporal);
        let rows = tb.transpose().mul(&j);
        let (_, complement) = rank_kernel(&rows, tol);
        if complement.len() + temporal.len() != size {
            return Err(Error::InternalInconsistency(
                "temporal complement has the wrong dimension".into(),
            ));
        }
        let (neg, pos) = restricted_signature(&complement, tol)?;
        if neg != 0 || pos != complement.len() {
            return Err(Error::InternalInconsistency(
                "spatial part is not space-like".into(),
            ));
        }
        complement
    };

    Ok(SpaceTimeSplit { temporal_basis: temporal, spatial_basis: spatial, temporal_kind: kind })
}

fn lorentz_form_value(u: &[f64], v: &[f64]) -> f64 {
    dot(u, v) - 2.0 * u[0] * v[0]
}

/// Temporal blocks and Lorentz-orthonormal basis columns for the unit
/// case (`T_t` unipotent): either the identity, or Theta plus identity
/// via the light-like chain construction.
fn unit_temporal_parts(
    t: &Matrix,
    v1: &[Vec<f64>],
    tol: &Tolerance,
) -> Result<(Vec<Block>, Vec<Vec<f64>>, HyperbolicKind)> {
    let r = v1.len();
    let size = t.rows();
    let r1 = unit_kernel(t, 1, tol).len();
    let form = BilinearForm::lorentz(size);

    if r1 == r {
        // T_t = I_r: any Lorentz-orthonormal basis of V_1 will do.
        let mut cols = orthonormalize(v1, &form, tol)?;
        if lorentz_form_value(&cols[0], &cols[0]) > 0.0 {
            return Err(Error::InternalInconsistency(
                "unit temporal part lost its time-like direction".into(),
            ));
        }
        if cols[0][0] < 0.0 {
            cols[0] = cols[0].iter().map(|x| -x).collect();
        }
        return Ok((vec![Block::PosId(r)], cols, HyperbolicKind::Elliptic));
    }

    // Parabolic: a single size-3 Jordan chain plus fixed directions, so
    // the kernels of (T - I)^k must grow as r-2, r-1, r.
    let r2 = unit_kernel(t, 2, tol).len();
    if r1 != r - 2 || r2 != r - 1 {
        return Err(Error::DegenerateSpan {
            context: "kernel growth of (T - I)^k does not match a single size-3 chain; \
                      adjusting rank_tol may separate it",
        });
    }

    // Work in V_1 coordinates.
    let b1 = Matrix::from_columns(v1);
    let t1 = b1.transpose().mul(t).mul(&b1);
    let j = lorentz_j(size);
    let g1 = b1.transpose().mul(&j).mul(&b1);
    let n1 = t1.sub(&Matrix::identity(r));
    let n1sq = n1.mul(&n1);

    // w: direction surviving two applications of the nilpotent part.
    let svd = Svd::compute(&n1sq);
    if svd.sigma_max() <= tol.rank_tol {
        return Err(Error::DegenerateSpan {
            context: "nilpotent square vanished; the parabolic chain is below tolerance",
        });
    }
    let mut w = svd.v.col(0);
    let mut v = n1.mul_vec(&w);
    let mut u = n1.mul_vec(&v);

    let q = |x: &[f64], y: &[f64]| -> f64 {
        let gy = g1.mul_vec(y);
        dot(x, &gy)
    };

    let qv = q(&v, &v);
    if qv <= 0.0 {
        return Err(Error::InternalInconsistency(
            "chain vector v is not space-like".into(),
        ));
    }
    let s = 1.0 / qv.sqrt();
    for x in [&mut w, &mut v, &mut u] {
        for xi in x.iter_mut() {
            *xi *= s;
        }
    }

    // Invariants of the construction: u light-like, u orthogonal to v,
    // q(w, u) = -1; all follow from the isometry identity.
    let checks = [q(&u, &u), q(&u, &v), q(&w, &u) + 1.0];
    let chk_tol = 1e3 * tol.residual_at(t.norm_inf());
    if checks.iter().any(|c| c.abs() > chk_tol) {
        return Err(Error::InternalInconsistency(format!(
            "parabolic chain invariants violated: q(u)={:.2e}, q(u,v)={:.2e}, q(w,u)+1={:.2e}",
            checks[0], checks[1], checks[2]
        )));
    }

    // Kill q(w) by adding a multiple of u.
    let alpha = q(&w, &w) / 2.0;
    for i in 0..r {
        w[i] += alpha * u[i];
    }

    // Change of basis taking the chain basis {u, v, w} (Gram G) to a
    // Lorentz-orthonormal basis: P^t G P = J on the 3x3 chain space.
    let p = Matrix::from_rows(&[
        vec![3.0 / 8.0, 0.0, 5.0 / 8.0],
        vec![0.5, 1.0, -0.5],
        vec![1.0, 0.0, -1.0],
    ])
    .unwrap();
    let chain = Matrix::from_columns(&[u.clone(), v.clone(), w.clone()]);
    let e = chain.mul(&p); // columns e0, e1, e2 in V_1 coordinates
    let mut e_cols: Vec<Vec<f64>> = (0..3).map(|k| b1.mul_vec(&e.col(k))).collect();
    if e_cols[0][0] < 0.0 {
        for col in e_cols.iter_mut() {
            for x in col.iter_mut() {
                *x = -*x;
            }
        }
    }

    let mut blocks = vec![Block::Theta];
    let mut cols = e_cols;

    if r > 3 {
        // Fixed directions: the Q-orthogonal complement of the chain
        // inside V_1; T acts as the identity there.
        let rows = Matrix::from_rows(&[
            g1.mul_vec(&u),
            g1.mul_vec(&v),
            g1.mul_vec(&w),
        ])?;
        let (_, complement) = rank_kernel(&rows, tol);
        if complement.len() != r - 3 {
            return Err(Error::InternalInconsistency(format!(
                "parabolic fixed part has dimension {}, expected {}",
                complement.len(),
                r - 3
            )));
        }
        let ambient: Vec<Vec<f64>> = complement.iter().map(|x| b1.mul_vec(x)).collect();
        let fixed = orthonormalize(&ambient, &BilinearForm::lorentz(size), tol)?;
        blocks.push(Block::PosId(r - 3));
        cols.extend(fixed);
    }

    Ok((blocks, cols, HyperbolicKind::Parabolic))
}

/// Temporal block and basis for the boost case: light-like eigenvectors
/// scaled to `Q(u, v) = -1` give the Lorentz-orthonormal pair
/// `(u + v)/sqrt(2), (u - v)/sqrt(2)` on which `T` acts as `Omega_t`,
/// `t = log(lambda) > 0`.
fn boost_temporal_parts(
    split: &SpaceTimeSplit,
    lambda: f64,
    tol: &Tolerance,
    scale: f64,
) -> Result<(Vec<Block>, Vec<Vec<f64>>)> {
    let mut u = split.temporal_basis[0].clone();
    let v_raw = &split.temporal_basis[1];
    if u[0] < 0.0 {
        for x in u.iter_mut() {
            *x = -*x;
        }
    }
    let s = lorentz_form_value(&u, v_raw);
    if s.abs() <= tol.rank_tol {
        return Err(Error::DegenerateSpan {
            context: "light-like boost eigenvectors are numerically orthogonal",
        });
    }
    let v: Vec<f64> = v_raw.iter().map(|x| -x / s).collect();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut e0: Vec<f64> = u.iter().zip(&v).map(|(a, b)| (a + b) * inv_sqrt2).collect();
    let mut e1: Vec<f64> = u.iter().zip(&v).map(|(a, b)| (a - b) * inv_sqrt2).collect();
    if e0[0] < 0.0 {
        for x in e0.iter_mut() {
            *x = -*x;
        }
        for x in e1.iter_mut() {
            *x = -*x;
        }
    }
    let chk_tol = 1e3 * tol.residual_at(scale);
    let ortho = [
        lorentz_form_value(&e0, &e0) + 1.0,
        lorentz_form_value(&e1, &e1) - 1.0,
        lorentz_form_value(&e0, &e1),
    ];
    if ortho.iter().any(|c| c.abs() > chk_tol) {
        return Err(Error::InternalInconsistency(
            "boost plane basis failed Lorentz orthonormality".into(),
        ));
    }
    Ok((vec![Block::Boost(lambda.ln())], vec![e0, e1]))
}

/// Computes the Lorentzian normal form with a conjugator in `O(1,n)`.
/// Improper inputs are normalized as minus the normal form of `-T`, with
/// the result's `improper` flag set.
pub fn lorentz_normal_form(t: &Matrix, tol: &Tolerance) -> Result<ConjugationResult> {
    ensure_lorentz(t, tol)?;
    if !is_proper(t) {
        let inner = lorentz_normal_form(&t.scale(-1.0), tol)?;
        let form = NormalForm { blocks: inner.form.blocks, improper: true };
        let form_matrix = form.matrix();
        let residual = lorentz_inverse(&inner.conjugator)
            .mul(t)
            .mul(&inner.conjugator)
            .sub(&form_matrix)
            .norm_inf();
        return Ok(ConjugationResult {
            form,
            form_matrix,
            conjugator: inner.conjugator,
            residual,
            diagnostics: inner.diagnostics,
        });
    }

    let split = space_time_split(t, tol)?;
    let size = t.rows();

    let (mut blocks, mut cols, kind) = match split.temporal_kind {
        TemporalKind::Unit => unit_temporal_parts(t, &split.temporal_basis, tol)?,
        TemporalKind::BoostPair { lambda } => {
            let (b, c) = boost_temporal_parts(&split, lambda, tol, t.norm_inf())?;
            (b, c, HyperbolicKind::Hyperbolic)
        }
    };

    let mut diagnostics = Vec::new();
    if !split.spatial_basis.is_empty() {
        // J-orthonormalize the spatial complement and classify the
        // restricted orthogonal map.
        let form = BilinearForm::lorentz(size);
        let spatial = orthonormalize(&split.spatial_basis, &form, tol)?;
        let cmat = Matrix::from_columns(&spatial);
        let j = lorentz_j(size);
        let x = cmat.transpose().mul(&j).mul(t).mul(&cmat);
        let parts = orthogonal_parts(&x, tol)?;
        if kind != HyperbolicKind::Hyperbolic
            && parts.blocks.iter().any(|b| matches!(b, Block::PosId(_)))
        {
            return Err(Error::InternalInconsistency(
                "spatial part of a unit temporal decomposition has +1 eigenvalues".into(),
            ));
        }
        for col in &parts.basis {
            cols.push(cmat.mul_vec(col));
        }
        blocks.extend(parts.blocks);
        diagnostics.extend(parts.diagnostics);
    }

    let q = Matrix::from_columns(&cols);
    let form = NormalForm::proper(blocks);
    let form_matrix = form.matrix();
    let residual = lorentz_inverse(&q).mul(t).mul(&q).sub(&form_matrix).norm_inf();
    Ok(ConjugationResult { form, form_matrix, conjugator: q, residual, diagnostics })
}

/// Reads the hyperbolic Segre symbol off a proper Lorentz normal form.
pub fn symbol_of_hyperbolic_form(form: &NormalForm) -> Result<HyperbolicSegre> {
    if form.improper {
        return Err(Error::InvariantViolation(
            "improper forms have no hyperbolic Segre symbol; classify the proper part".into(),
        ));
    }
    let mut blocks = form.blocks.iter();
    let (kind, mut r) = match blocks.clone().next() {
        Some(Block::Theta) => (HyperbolicKind::Parabolic, 3),
        Some(Block::Boost(_)) => (HyperbolicKind::Hyperbolic, 2),
        _ => (HyperbolicKind::Elliptic, 0),
    };
    if kind != HyperbolicKind::Elliptic {
        blocks.next();
    }
    let mut spatial: Vec<Block> = Vec::new();
    for b in blocks {
        match (kind, b) {
            // In the unit cases every +1 block belongs to the temporal part.
            (HyperbolicKind::Elliptic | HyperbolicKind::Parabolic, Block::PosId(m)) => r += m,
            (HyperbolicKind::Hyperbolic, Block::PosId(m)) => spatial.push(Block::PosId(*m)),
            (_, Block::Rot { .. }) | (_, Block::NegId(_)) => spatial.push(b.clone()),
            _ => {
                return Err(Error::InvariantViolation(format!(
                    "unexpected block {b:?} in a Lorentz normal form"
                )))
            }
        }
    }
    let sigma: SphericalSegre = symbol_of_form(&NormalForm::proper(spatial))?;
    HyperbolicSegre::new(kind, r, sigma)
}

/// Classifies a proper Lorentz matrix by its Segre symbol.
pub fn classify_hyperbolic(t: &Matrix, tol: &Tolerance) -> Result<HyperbolicSegre> {
    if t.is_square() && t.rows() >= 2 && !is_proper(t) {
        return Err(Error::NotProper { entry: t[(0, 0)] });
    }
    let nf = lorentz_normal_form(t, tol)?;
    symbol_of_hyperbolic_form(&nf.form)
}
