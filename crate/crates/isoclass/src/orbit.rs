//! Isotropy-subgroup dimensions per Segre class, orbit-type equality, and
//! an independent numeric centralizer oracle.
//!
//! The isotropy group of a matrix under conjugation is its centralizer in
//! the group; its dimension has a closed form per Segre class. The oracle
//! recomputes it as the nullity of `X -> M X M^-1 - X` on the group's
//! tangent space at the identity, so the formula and the numerics check
//! each other.

use crate::error::{Error, Result};
use crate::euclidean::{classify_euclidean, ensure_euclidean};
use crate::hyperbolic::{classify_hyperbolic, ensure_lorentz, is_proper};
use crate::numkit::{rank_kernel, Matrix, Tolerance};
use crate::sampling::{euclidean_inverse, lorentz_inverse};
use crate::segre::{
    EuclideanKind, HyperbolicKind, SegreSymbol, Space, SphericalSegre,
};
use crate::spherical::{classify_spherical, ensure_orthogonal};

/// Isotropy dimension, ambient group dimension and the resulting orbit
/// dimension of a Segre class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsotropyInfo {
    pub isotropy_dim: usize,
    pub group_dim: usize,
    pub orbit_dim: usize,
}

/// Centralizer dimension of an orthogonal normal form:
/// `sum n_i^2 + sum m_i (m_i - 1) / 2` (a unitary group per rotation
/// angle, an orthogonal group per real eigenvalue).
fn spherical_isotropy(sym: &SphericalSegre) -> usize {
    let rot: usize = sym.rotation_mults().iter().map(|&p| p * p).sum();
    let reals: usize = sym.real_mults().iter().map(|&m| m * (m - 1) / 2).sum();
    rot + reals
}

/// Closed-form isotropy dimension of a Segre class, with the orbit
/// dimension `dim G - isotropy` (all three groups have dimension
/// `n (n + 1) / 2`).
pub fn isotropy_dimension(symbol: &SegreSymbol) -> Result<IsotropyInfo> {
    symbol.validate()?;
    let n = symbol.n();
    let group_dim = n * (n + 1) / 2;
    let isotropy_dim = match symbol {
        SegreSymbol::Spherical { sym, .. } => spherical_isotropy(sym),
        SegreSymbol::Euclidean { sym, .. } => {
            // Centralizers split along the orthogonal and unipotent parts;
            // the unipotent factor contributes the full Euclidean group of
            // the fixed space (elliptic) or the stabilizer of a translation
            // axis (hyperbolic).
            let unipotent = match sym.kind {
                EuclideanKind::Elliptic => sym.r * (sym.r + 1) / 2,
                EuclideanKind::Hyperbolic => sym.r * (sym.r - 1) / 2 + 1,
            };
            spherical_isotropy(&sym.sigma) + unipotent
        }
        SegreSymbol::Hyperbolic { sym, .. } => {
            let temporal = match sym.kind {
                HyperbolicKind::Elliptic => sym.r * (sym.r - 1) / 2,
                HyperbolicKind::Parabolic => 1 + (sym.r - 3) * (sym.r - 2) / 2,
                HyperbolicKind::Hyperbolic => 1,
            };
            spherical_isotropy(&sym.sigma) + temporal
        }
    };
    if isotropy_dim > group_dim {
        return Err(Error::InvariantViolation(format!(
            "isotropy dimension {isotropy_dim} exceeds the group dimension {group_dim}"
        )));
    }
    Ok(IsotropyInfo { isotropy_dim, group_dim, orbit_dim: group_dim - isotropy_dim })
}

/// Basis of the tangent space at the identity of the group acting on the
/// given matrix size: skew-symmetric matrices for `O(m)`, affine pairs
/// (skew, vector) for `Euc(n)`, and `J`-skew matrices for `O(1,n)`.
fn tangent_basis(space: Space, size: usize) -> Vec<Matrix> {
    let mut basis = Vec::new();
    match space {
        Space::Spherical => {
            for i in 0..size {
                for j in (i + 1)..size {
                    let mut b = Matrix::zeros(size, size);
                    b[(i, j)] = 1.0;
                    b[(j, i)] = -1.0;
                    basis.push(b);
                }
            }
        }
        Space::Euclidean => {
            let n = size - 1;
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut b = Matrix::zeros(size, size);
                    b[(i, j)] = 1.0;
                    b[(j, i)] = -1.0;
                    basis.push(b);
                }
            }
            for i in 0..n {
                let mut b = Matrix::zeros(size, size);
                b[(i, n)] = 1.0;
                basis.push(b);
            }
        }
        Space::Hyperbolic => {
            // X^t J + J X = 0 means X = J S with S skew.
            for i in 0..size {
                for j in (i + 1)..size {
                    let mut b = Matrix::zeros(size, size);
                    let si = if i == 0 { -1.0 } else { 1.0 };
                    let sj = if j == 0 { -1.0 } else { 1.0 };
                    b[(i, j)] = si;
                    b[(j, i)] = -sj;
                    basis.push(b);
                }
            }
        }
    }
    basis
}

fn group_inverse(space: Space, m: &Matrix) -> Matrix {
    match space {
        Space::Spherical => m.transpose(),
        Space::Euclidean => euclidean_inverse(m),
        Space::Hyperbolic => lorentz_inverse(m),
    }
}

fn ensure_in_group(space: Space, m: &Matrix, tol: &Tolerance) -> Result<()> {
    match space {
        Space::Spherical => ensure_orthogonal(m, tol),
        Space::Euclidean => ensure_euclidean(m, tol),
        Space::Hyperbolic => {
            ensure_lorentz(m, tol)?;
            if !is_proper(m) {
                return Err(Error::NotProper { entry: m[(0, 0)] });
            }
            Ok(())
        }
    }
}

/// Nullity of `X -> M X M^-1 - X` on the group's tangent space, computed
/// through `rank_kernel` on the vectorized system. Independent of the
/// closed formulas in [`isotropy_dimension`].
pub fn centralizer_dimension_numeric(m: &Matrix, space: Space, tol: &Tolerance) -> Result<usize> {
    ensure_in_group(space, m, tol)?;
    let size = m.rows();
    let basis = tangent_basis(space, size);
    let minv = group_inverse(space, m);
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(basis.len());
    for b in &basis {
        let image = m.mul(b).mul(&minv).sub(b);
        let mut col = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                col.push(image[(i, j)]);
            }
        }
        columns.push(col);
    }
    let system = Matrix::from_columns(&columns);
    let (rank, _) = rank_kernel(&system, tol);
    Ok(basis.len() - rank)
}

/// Two group elements have the same orbit type exactly when their Segre
/// symbols agree.
pub fn same_orbit_type(a: &Matrix, b: &Matrix, space: Space, tol: &Tolerance) -> Result<bool> {
    Ok(match space {
        Space::Spherical => classify_spherical(a, tol)? == classify_spherical(b, tol)?,
        Space::Euclidean => classify_euclidean(a, tol)? == classify_euclidean(b, tol)?,
        Space::Hyperbolic => classify_hyperbolic(a, tol)? == classify_hyperbolic(b, tol)?,
    })
}
