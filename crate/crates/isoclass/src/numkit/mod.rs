//! Small dense real linear-algebra kernels shared by all classifiers:
//! eigenstructure, rank decisions, and orthonormalization with respect to
//! either the Euclidean or the Lorentz bilinear form.
//!
//! Everything here is sized for classification work (matrices up to
//! [`EIGEN_SIZE_CAP`]), not for general-purpose numerics.

mod schur;
pub mod svd;
mod symeig;

pub use schur::general_eigenvalues;
pub use svd::{solve_least_squares, Svd};
pub use symeig::symmetric_eigen;

use crate::error::{Error, Result};

/// Largest matrix size accepted by [`eigen_structure`].
pub const EIGEN_SIZE_CAP: usize = 64;

/// Dense real matrix, row-major.
///
/// Construction rejects non-finite entries; all downstream code may assume
/// finite data.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i];
        }
        m
    }

    /// Builds a matrix from nested rows, validating shape and finiteness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvariantViolation("matrix must be at least 1x1".into()));
        }
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::InvariantViolation("ragged matrix rows".into()));
            }
            for &x in r {
                if !x.is_finite() {
                    return Err(Error::InvariantViolation("matrix entries must be finite".into()));
                }
                data.push(x);
            }
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<f64>]) -> Self {
        assert!(!cols.is_empty() && !cols[0].is_empty());
        let mut m = Matrix::zeros(cols[0].len(), cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), m.rows);
            for i in 0..m.rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<f64>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)]).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - other[(i, j)])
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| s * self[(i, j)])
    }

    pub fn neg(&self) -> Matrix {
        self.scale(-1.0)
    }

    /// Largest absolute entry. Used as the scale in all residual contracts.
    pub fn norm_inf(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> f64 {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = 1.0;
        for k in 0..n {
            let mut p = k;
            for i in k + 1..n {
                if a[(i, k)].abs() > a[(p, k)].abs() {
                    p = i;
                }
            }
            if a[(p, k)] == 0.0 {
                return 0.0;
            }
            if p != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(p, j)];
                    a[(p, j)] = t;
                }
                det = -det;
            }
            det *= a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / a[(k, k)];
                for j in k..n {
                    a[(i, j)] -= f * a[(k, j)];
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    /// Panics on singular input; callers use it on group elements and
    /// explicit well-conditioned basis changes only.
    pub fn inverse(&self) -> Matrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for k in 0..n {
            let mut p = k;
            for i in k + 1..n {
                if a[(i, k)].abs() > a[(p, k)].abs() {
                    p = i;
                }
            }
            assert!(a[(p, k)] != 0.0, "singular matrix in inverse()");
            if p != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(p, j)];
                    a[(p, j)] = t;
                    let t = inv[(k, j)];
                    inv[(k, j)] = inv[(p, j)];
                    inv[(p, j)] = t;
                }
            }
            let d = a[(k, k)];
            for j in 0..n {
                a[(k, j)] /= d;
                inv[(k, j)] /= d;
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[(i, k)];
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[(i, j)] -= f * a[(k, j)];
                    inv[(i, j)] -= f * inv[(k, j)];
                }
            }
        }
        inv
    }

    /// `self` raised to a small nonnegative integer power.
    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Embeds `block` with its upper-left corner at `(at, at)`.
    pub fn set_block(&mut self, at: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(at + i, at + j)] = block[(i, j)];
            }
        }
    }

    /// Block-diagonal assembly.
    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(n, n);
        let mut at = 0;
        for b in blocks {
            assert!(b.is_square());
            out.set_block(at, b);
            at += b.rows;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Numerical thresholds shared by every classifier.
///
/// `rank_tol` is relative to the largest singular value (floored at 1),
/// `angle_tol` is an absolute gap in radians below which two rotation
/// angles are considered equal, and `residual_tol` bounds all residual
/// contracts. The Segre symbol is discontinuous at eigenvalue collisions,
/// so `angle_tol` is deliberately a user-facing knob.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub rank_tol: f64,
    pub angle_tol: f64,
    pub residual_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { rank_tol: 1e-12, angle_tol: 1e-7, residual_tol: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(rank_tol: f64, angle_tol: f64, residual_tol: f64) -> Result<Self> {
        if rank_tol <= 0.0 || angle_tol <= 0.0 || residual_tol <= 0.0 {
            return Err(Error::InvariantViolation("tolerances must be strictly positive".into()));
        }
        Ok(Tolerance { rank_tol, angle_tol, residual_tol })
    }

    /// Residual threshold for a computation at the given scale.
    pub fn residual_at(&self, scale: f64) -> f64 {
        self.residual_tol * scale.max(1.0)
    }
}

/// The two bilinear forms in play: the Euclidean dot product and the
/// Lorentz form with matrix `J = diag(-1, 1, ..., 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    Euclidean,
    Lorentz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BilinearForm {
    pub kind: FormKind,
    pub dim: usize,
}

impl BilinearForm {
    pub fn euclidean(dim: usize) -> Self {
        BilinearForm { kind: FormKind::Euclidean, dim }
    }

    pub fn lorentz(dim: usize) -> Self {
        BilinearForm { kind: FormKind::Lorentz, dim }
    }

    /// The Gram matrix of the form in the canonical basis.
    pub fn matrix(&self) -> Matrix {
        match self.kind {
            FormKind::Euclidean => Matrix::identity(self.dim),
            FormKind::Lorentz => {
                let mut j = Matrix::identity(self.dim);
                j[(0, 0)] = -1.0;
                j
            }
        }
    }

    pub fn apply(&self, u: &[f64], v: &[f64]) -> f64 {
        debug_assert_eq!(u.len(), self.dim);
        debug_assert_eq!(v.len(), self.dim);
        let mut s = 0.0;
        for i in 0..self.dim {
            s += u[i] * v[i];
        }
        if self.kind == FormKind::Lorentz {
            s -= 2.0 * u[0] * v[0];
        }
        s
    }
}

/// Descriptor of an eigenvalue cluster. Complex-conjugate pairs are kept
/// real-friendly as (modulus, angle) with the angle canonicalized to
/// (0, pi), since rotations by opposite angles are conjugate inside O(2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EigenDescriptor {
    RealVal(f64),
    ComplexPair { modulus: f64, angle: f64 },
}

/// One primary component: descriptor, algebraic multiplicity and an
/// orthonormal basis of the generalized eigenspace.
#[derive(Debug, Clone)]
pub struct EigenCluster {
    pub descriptor: EigenDescriptor,
    pub multiplicity: usize,
    /// Columns form an orthonormal basis of the primary component.
    pub basis: Matrix,
}

/// Primary decomposition of the ambient space with respect to a matrix.
#[derive(Debug, Clone)]
pub struct EigenStructure {
    pub dim: usize,
    pub clusters: Vec<EigenCluster>,
}

impl EigenStructure {
    /// Sum of cluster multiplicities; equals `dim` on valid output.
    pub fn total_multiplicity(&self) -> usize {
        self.clusters.iter().map(|c| c.multiplicity).sum()
    }
}

/// Rank and kernel of a rectangular matrix.
///
/// Singular values below `rank_tol * max(1, sigma_max)` are treated as
/// zero. The kernel basis vectors are orthonormal and satisfy
/// `|M v|_inf <= residual_tol * max(1, |M|_inf)`.
pub fn rank_kernel(m: &Matrix, tol: &Tolerance) -> (usize, Vec<Vec<f64>>) {
    let svd = Svd::compute(m);
    let threshold = tol.rank_tol * svd.sigma_max().max(1.0);
    let mut kernel: Vec<Vec<f64>> = Vec::new();
    let mut rank = 0;
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s > threshold {
            rank += 1;
        } else {
            kernel.push(svd.v.col(i));
        }
    }
    (rank, kernel)
}

/// Gram–Schmidt orthonormalization with respect to a bilinear form, with
/// pivoting on the largest |form(v, v)| at each step.
///
/// For the Euclidean form this is plain modified Gram–Schmidt. For the
/// Lorentz form the span must be space-like or time-like; a span on which
/// the restricted form is singular within tolerance is rejected with
/// `DegenerateSpan`. On time-like spans exactly one output vector has
/// form value -1 and it is listed first.
pub fn orthonormalize(vectors: &[Vec<f64>], form: &BilinearForm, tol: &Tolerance) -> Result<Vec<Vec<f64>>> {
    let k = vectors.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let scale = vectors
        .iter()
        .flat_map(|v| v.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0);
    let mut work: Vec<Vec<f64>> = vectors.to_vec();
    let mut out: Vec<(f64, Vec<f64>)> = Vec::with_capacity(k);
    let floor = (tol.rank_tol * scale * scale).max(f64::MIN_POSITIVE);
    for _ in 0..k {
        // Pivot on the vector with the largest |form value| after
        // projecting out what has already been produced.
        let mut best: Option<(usize, f64)> = None;
        for (idx, w) in work.iter().enumerate() {
            let q = form.apply(w, w);
            if best.is_none_or(|(_, bq)| q.abs() > bq.abs()) {
                best = Some((idx, q));
            }
        }
        let (mut idx, mut q) = best.unwrap();
        if q.abs() <= floor && work.len() > 1 {
            // Every remaining vector is numerically isotropic. On a
            // nondegenerate span some pair has form(v_i, v_j) away from
            // zero, so a sum v_i + v_j serves as a pivot.
            let mut pair: Option<(usize, usize, f64)> = None;
            for i in 0..work.len() {
                for jj in (i + 1)..work.len() {
                    let c = form.apply(&work[i], &work[jj]);
                    if pair.is_none_or(|(_, _, bc)| c.abs() > bc.abs()) {
                        pair = Some((i, jj, c));
                    }
                }
            }
            if let Some((i, jj, c)) = pair {
                if c.abs() > floor {
                    let combined: Vec<f64> =
                        work[i].iter().zip(&work[jj]).map(|(a, b)| a + b).collect();
                    work[i] = combined;
                    idx = i;
                    q = form.apply(&work[i], &work[i]);
                }
            }
        }
        let v = work.swap_remove(idx);
        let norm2 = q.abs();
        if norm2 <= floor {
            return Err(Error::DegenerateSpan {
                context: "restricted bilinear form is singular on the given span",
            });
        }
        let sign = q.signum();
        let inv = 1.0 / norm2.sqrt();
        let u: Vec<f64> = v.iter().map(|x| x * inv).collect();
        // Project the produced direction out of the remaining vectors.
        for w in work.iter_mut() {
            let c = form.apply(w, &u) * sign;
            for (wi, ui) in w.iter_mut().zip(u.iter()) {
                *wi -= c * ui;
            }
        }
        out.push((sign, u));
    }
    if form.kind == FormKind::Lorentz {
        let negs = out.iter().filter(|(s, _)| *s < 0.0).count();
        if negs > 1 {
            return Err(Error::DegenerateSpan {
                context: "span carries more than one time-like direction",
            });
        }
        // Time-like vector first.
        out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    }
    Ok(out.into_iter().map(|(_, u)| u).collect())
}

/// Eigenvalue clustering radius for real eigenvalues: `rank_tol`-scaled,
/// floored at cbrt(eps) to absorb the scatter of defective eigenvalues.
fn real_cluster_radius(tol: &Tolerance, scale: f64) -> f64 {
    (tol.rank_tol.max(f64::EPSILON.cbrt())) * scale.max(1.0)
}

/// Full primary decomposition: eigenvalues via Hessenberg + shifted QR,
/// clustered by descriptor, with primary-component bases obtained as
/// kernels of powers of the annihilating factors. Matrices up to
/// [`EIGEN_SIZE_CAP`] are accepted; see [`eigen_structure_with_cap`] to
/// raise the cap.
pub fn eigen_structure(m: &Matrix, tol: &Tolerance) -> Result<EigenStructure> {
    eigen_structure_with_cap(m, tol, EIGEN_SIZE_CAP)
}

/// [`eigen_structure`] with an explicit size cap.
pub fn eigen_structure_with_cap(
    m: &Matrix,
    tol: &Tolerance,
    size_cap: usize,
) -> Result<EigenStructure> {
    if !m.is_square() {
        return Err(Error::InvariantViolation("eigen_structure requires a square matrix".into()));
    }
    let n = m.rows();
    if n > size_cap {
        return Err(Error::UnsupportedDimension {
            space: "eigen_structure (size cap exceeded)",
            n: n as i64,
        });
    }
    let scale = m.norm_inf().max(1.0);
    let eigs = general_eigenvalues(m)?;

    // Canonicalize: fold complex pairs with angle within angle_tol of 0 or
    // pi into real eigenvalues; otherwise keep (modulus, angle in (0, pi)).
    #[derive(Clone, Copy)]
    enum Raw {
        Real(f64),
        Pair(f64, f64), // modulus, angle
    }
    let mut raws: Vec<Raw> = Vec::new();
    let mut i = 0;
    while i < eigs.len() {
        let (re, im) = eigs[i];
        if im.abs() == 0.0 {
            raws.push(Raw::Real(re));
            i += 1;
        } else {
            // Pairs are emitted adjacently by the solver.
            let modulus = re.hypot(im);
            let angle = im.abs().atan2(re);
            if angle <= tol.angle_tol || angle >= std::f64::consts::PI - tol.angle_tol {
                raws.push(Raw::Real(re));
                raws.push(Raw::Real(re));
            } else {
                raws.push(Raw::Pair(modulus, angle));
            }
            i += 2;
        }
    }

    // Greedy clustering.
    let radius = real_cluster_radius(tol, scale);
    let mut real_vals: Vec<f64> = raws
        .iter()
        .filter_map(|r| if let Raw::Real(x) = r { Some(*x) } else { None })
        .collect();
    real_vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut clusters: Vec<(EigenDescriptor, usize)> = Vec::new();
    let mut idx = 0;
    while idx < real_vals.len() {
        let mut j = idx + 1;
        while j < real_vals.len() && real_vals[j] - real_vals[j - 1] <= radius {
            j += 1;
        }
        let members = &real_vals[idx..j];
        let mean = members.iter().sum::<f64>() / members.len() as f64;
        clusters.push((EigenDescriptor::RealVal(mean), members.len()));
        idx = j;
    }
    let mut pairs: Vec<(f64, f64)> = raws
        .iter()
        .filter_map(|r| if let Raw::Pair(m, a) = r { Some((*a, *m)) } else { None })
        .collect();
    pairs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut pidx = 0;
    while pidx < pairs.len() {
        let mut j = pidx + 1;
        while j < pairs.len()
            && pairs[j].0 - pairs[j - 1].0 <= tol.angle_tol
            && (pairs[j].1 - pairs[pidx].1).abs() <= radius
        {
            j += 1;
        }
        let members = &pairs[pidx..j];
        let angle = members.iter().map(|p| p.0).sum::<f64>() / members.len() as f64;
        let modulus = members.iter().map(|p| p.1).sum::<f64>() / members.len() as f64;
        clusters.push((EigenDescriptor::ComplexPair { modulus, angle }, 2 * members.len()));
        pidx = j;
    }

    // Primary component bases: kernel of the annihilating factor raised to
    // the multiplicity, normalized before the rank decision.
    let mut out_clusters = Vec::with_capacity(clusters.len());
    for (descriptor, mult) in clusters {
        let factor = match descriptor {
            EigenDescriptor::RealVal(x) => {
                let mut f = m.clone();
                for d in 0..n {
                    f[(d, d)] -= x;
                }
                f
            }
            EigenDescriptor::ComplexPair { modulus, angle } => {
                // x^2 - 2 rho cos(theta) x + rho^2 applied to m.
                let mm = m.mul(m);
                let lin = m.scale(-2.0 * modulus * angle.cos());
                let mut f = mm.add(&lin);
                for d in 0..n {
                    f[(d, d)] += modulus * modulus;
                }
                f
            }
        };
        let power = match descriptor {
            EigenDescriptor::RealVal(_) => mult,
            EigenDescriptor::ComplexPair { .. } => mult / 2,
        };
        // Scale down so large factors do not drown the relative rank
        // threshold, but never scale up: when the factor annihilates the
        // whole space its power is round-off noise, which must stay below
        // the absolute floor of the rank decision.
        let mut p = factor.pow(power.max(1));
        let pn = p.norm_inf();
        if pn > 1.0 {
            p = p.scale(1.0 / pn);
        }
        let (rank, kernel) = rank_kernel(&p, tol);
        let kdim = n - rank;
        if kdim != mult {
            return Err(Error::InternalInconsistency(format!(
                "primary component of {descriptor:?} has kernel dimension {kdim}, expected multiplicity {mult}"
            )));
        }
        out_clusters.push(EigenCluster {
            descriptor,
            multiplicity: mult,
            basis: Matrix::from_columns(&kernel),
        });
    }

    // The union of primary bases must span the ambient space.
    let all: Vec<Vec<f64>> = out_clusters
        .iter()
        .flat_map(|c| (0..c.multiplicity).map(|j| c.basis.col(j)).collect::<Vec<_>>())
        .collect();
    if all.len() != n {
        return Err(Error::InternalInconsistency(
            "primary component multiplicities do not sum to the ambient dimension".into(),
        ));
    }
    let assembled = Matrix::from_columns(&all);
    let (rank, _) = rank_kernel(&assembled, tol);
    if rank != n {
        return Err(Error::InternalInconsistency(
            "union of primary component bases is not a basis".into(),
        ));
    }

    Ok(EigenStructure { dim: n, clusters: out_clusters })
}

/// Dot product of two equally long slices.
pub fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}
