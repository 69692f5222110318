//! Orthogonal normal forms and Segre classification for `I(S^n) = O(n+1)`.
//!
//! Invariant rotation planes are found through the symmetric matrix
//! `A + A^T` (eigenvalue `2 cos(theta)`), avoiding complex arithmetic;
//! the +-1 eigenspaces come from `rank_kernel(A -+ I)`. Orthogonal
//! matrices are normal, so this classical route is numerically benign.

use crate::error::{Error, Result};
use crate::forms::{Block, ConjugationResult, Diagnostic, NormalForm};
use crate::numkit::{dot, rank_kernel, symmetric_eigen, Matrix, Svd, Tolerance};
use crate::segre::SphericalSegre;

/// Validates membership in `O(m)` within the residual tolerance.
pub fn ensure_orthogonal(a: &Matrix, tol: &Tolerance) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotInGroup { group: "O(n+1)", residual: f64::INFINITY });
    }
    let res = a.transpose().mul(a).sub(&Matrix::identity(a.rows())).norm_inf();
    if res > tol.residual_at(a.norm_inf()) {
        return Err(Error::NotInGroup { group: "O(n+1)", residual: res });
    }
    Ok(())
}

/// Output of the block machinery shared with the Euclidean and Lorentz
/// classifiers: canonical blocks plus the orthonormal basis columns that
/// realize them, in matching order.
pub(crate) struct OrthogonalParts {
    pub blocks: Vec<Block>,
    pub basis: Vec<Vec<f64>>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Canonical block decomposition of an orthogonal matrix: rotation blocks
/// sorted by descending pair-count then descending angle, then the +1
/// eigenspace, then the -1 eigenspace.
pub(crate) fn orthogonal_parts(a: &Matrix, tol: &Tolerance) -> Result<OrthogonalParts> {
    let m = a.rows();
    let id = Matrix::identity(m);
    let (_, fixed) = rank_kernel(&a.sub(&id), tol);
    let (_, flipped) = rank_kernel(&a.add(&id), tol);
    let m_pos = fixed.len();
    let m_neg = flipped.len();

    let mut blocks: Vec<Block> = Vec::new();
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut diagnostics = Vec::new();

    let rot_dim = m - m_pos - m_neg;
    if rot_dim > 0 {
        // Rotation subspace: orthogonal complement of the +-1 eigenspaces.
        let c = if m_pos + m_neg == 0 {
            Matrix::identity(m)
        } else {
            let mut rows: Vec<Vec<f64>> = Vec::new();
            rows.extend(fixed.iter().cloned());
            rows.extend(flipped.iter().cloned());
            let stack = Matrix::from_rows(&rows)?;
            let (_, complement) = rank_kernel(&stack, tol);
            if complement.len() != rot_dim {
                return Err(Error::InternalInconsistency(format!(
                    "rotation subspace has dimension {} but {} expected",
                    complement.len(),
                    rot_dim
                )));
            }
            Matrix::from_columns(&complement)
        };
        let a_u = c.transpose().mul(a).mul(&c);
        let sym = a_u.add(&a_u.transpose()).scale(0.5);
        let (vals, vecs) = symmetric_eigen(&sym);

        // Angles in (0, pi), ascending with the eigenvalues descending.
        let mut angles: Vec<(f64, usize)> = vals
            .iter()
            .enumerate()
            .map(|(i, &v)| (v.clamp(-1.0, 1.0).acos(), i))
            .collect();
        angles.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());

        // Greedy clustering with the angle tolerance.
        let mut clusters: Vec<(f64, Vec<usize>)> = Vec::new();
        let mut i = 0;
        while i < angles.len() {
            let mut j = i + 1;
            while j < angles.len() && angles[j].0 - angles[j - 1].0 <= tol.angle_tol {
                j += 1;
            }
            let members: Vec<usize> = angles[i..j].iter().map(|p| p.1).collect();
            let mean = angles[i..j].iter().map(|p| p.0).sum::<f64>() / (j - i) as f64;
            clusters.push((mean, members));
            i = j;
        }
        for w in clusters.windows(2) {
            if w[1].0 - w[0].0 <= 10.0 * tol.angle_tol {
                diagnostics.push(Diagnostic::AmbiguousCluster { angle_a: w[0].0, angle_b: w[1].0 });
            }
        }

        let mut rot_blocks: Vec<(usize, f64, Vec<Vec<f64>>)> = Vec::new();
        for (theta, members) in clusters {
            if members.len() % 2 != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "rotation angle cluster at {theta} has odd dimension {}",
                    members.len()
                )));
            }
            let pairs = members.len() / 2;
            let plane_cols = extract_planes(&a_u, theta, &members, &vecs)?;
            // Lift from rotation-subspace coordinates to ambient ones.
            let ambient: Vec<Vec<f64>> = plane_cols.iter().map(|u| c.mul_vec(u)).collect();
            rot_blocks.push((pairs, theta, ambient));
        }
        rot_blocks.sort_by(|x, y| {
            y.0.cmp(&x.0).then(y.1.partial_cmp(&x.1).unwrap())
        });
        for (pairs, angle, cols) in rot_blocks {
            blocks.push(Block::Rot { angle, pairs });
            basis.extend(cols);
        }
    }

    if m_pos > 0 {
        blocks.push(Block::PosId(m_pos));
        basis.extend(fixed);
    }
    if m_neg > 0 {
        blocks.push(Block::NegId(m_neg));
        basis.extend(flipped);
    }

    Ok(OrthogonalParts { blocks, basis, diagnostics })
}

/// Splits a `2p`-dimensional angle-cluster eigenspace of `A + A^T` into
/// invariant planes; returns the `(u, v)` columns with `A u = cos t u +
/// sin t v`, so each plane carries the rotation with angle in `(0, pi)`.
fn extract_planes(
    a_u: &Matrix,
    theta: f64,
    members: &[usize],
    vecs: &Matrix,
) -> Result<Vec<Vec<f64>>> {
    let dim = a_u.rows();
    let (c, s) = (theta.cos(), theta.sin());
    if s == 0.0 {
        return Err(Error::InternalInconsistency(
            "rotation cluster collapsed onto a real eigenvalue".into(),
        ));
    }
    let mut remaining: Vec<Vec<f64>> = members.iter().map(|&i| vecs.col(i)).collect();
    let mut out: Vec<Vec<f64>> = Vec::new();
    while !remaining.is_empty() {
        let u = normalize(remaining[0].clone());
        let au = a_u.mul_vec(&u);
        let mut v: Vec<f64> = au.iter().zip(&u).map(|(x, y)| (x - c * y) / s).collect();
        let proj = dot(&v, &u);
        for (vi, ui) in v.iter_mut().zip(&u) {
            *vi -= proj * ui;
        }
        let v = normalize(v);
        out.push(u.clone());
        out.push(v.clone());
        if remaining.len() == 2 {
            break;
        }
        // Project the plane out of the rest of the cluster and keep an
        // orthonormal spanning set; the singular values come out as 1
        // (kept) and one 0 (dropped), so the 0.5 cut is unambiguous.
        let mut projected: Vec<Vec<f64>> = Vec::new();
        for w in remaining.iter().skip(1) {
            let mut w2 = w.clone();
            let cu = dot(&w2, &u);
            let cv = dot(&w2, &v);
            for i in 0..dim {
                w2[i] -= cu * u[i] + cv * v[i];
            }
            projected.push(w2);
        }
        let svd = Svd::compute(&Matrix::from_columns(&projected));
        let mut next: Vec<Vec<f64>> = Vec::new();
        for (k, &sv) in svd.singular_values.iter().enumerate() {
            if sv > 0.5 {
                next.push(svd.u.col(k));
            }
        }
        if next.len() != remaining.len() - 2 {
            return Err(Error::InternalInconsistency(
                "rotation plane extraction lost track of the cluster space".into(),
            ));
        }
        remaining = next;
    }
    Ok(out)
}

fn normalize(v: Vec<f64>) -> Vec<f64> {
    let n = dot(&v, &v).sqrt();
    v.into_iter().map(|x| x / n).collect()
}

/// Computes the orthogonal normal form of `A` together with an orthogonal
/// conjugator `Q` such that `Q^T A Q` equals the form matrix.
pub fn orthogonal_normal_form(a: &Matrix, tol: &Tolerance) -> Result<ConjugationResult> {
    ensure_orthogonal(a, tol)?;
    let parts = orthogonal_parts(a, tol)?;
    let q = Matrix::from_columns(&parts.basis);
    let form = NormalForm::proper(parts.blocks);
    let form_matrix = form.matrix();
    let residual = q.transpose().mul(a).mul(&q).sub(&form_matrix).norm_inf();
    Ok(ConjugationResult { form, form_matrix, conjugator: q, residual, diagnostics: parts.diagnostics })
}

/// Reads the Segre symbol off a spherical normal form.
pub fn symbol_of_form(form: &NormalForm) -> Result<SphericalSegre> {
    let mut rot: Vec<usize> = Vec::new();
    let mut reals: Vec<usize> = Vec::new();
    for b in &form.blocks {
        match b {
            Block::Rot { pairs, .. } => rot.push(*pairs),
            Block::PosId(m) | Block::NegId(m) => reals.push(*m),
            _ => {
                return Err(Error::InvariantViolation(
                    "spherical forms contain only rotation and +-identity blocks".into(),
                ))
            }
        }
    }
    rot.sort_unstable_by(|x, y| y.cmp(x));
    reals.sort_unstable_by(|x, y| y.cmp(x));
    SphericalSegre::new(rot, reals)
}

/// Classifies an orthogonal matrix by its Segre symbol.
pub fn classify_spherical(a: &Matrix, tol: &Tolerance) -> Result<SphericalSegre> {
    let nf = orthogonal_normal_form(a, tol)?;
    symbol_of_form(&nf.form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::random_orthogonal;
    use crate::segre::{render, SegreSymbol};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn rot2(theta: f64) -> Matrix {
        Block::Rot { angle: theta, pairs: 1 }.matrix()
    }

    fn sym_text(sym: &SphericalSegre, n: usize) -> String {
        render(&SegreSymbol::Spherical { n, sym: sym.clone() })
    }

    #[test]
    fn identity_is_already_normal() {
        let res = orthogonal_normal_form(&Matrix::identity(3), &tol()).unwrap();
        assert_eq!(res.form.blocks, vec![Block::PosId(3)]);
        assert!(res.conjugator.sub(&Matrix::identity(3)).norm_inf() < 1e-12);
        assert!(res.residual < 1e-12);
    }

    #[test]
    fn recovers_constructed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let target = Matrix::block_diag(&[rot2(PI / 3.0), Matrix::diagonal(&[-1.0])]);
        let q0 = random_orthogonal(3, &mut rng);
        let a = q0.mul(&target).mul(&q0.transpose());
        let res = orthogonal_normal_form(&a, &tol()).unwrap();
        assert_eq!(res.form.blocks.len(), 2);
        match &res.form.blocks[0] {
            Block::Rot { angle, pairs } => {
                assert_eq!(*pairs, 1);
                assert!((angle - PI / 3.0).abs() < 1e-10);
            }
            other => panic!("unexpected leading block {other:?}"),
        }
        assert_eq!(res.form.blocks[1], Block::NegId(1));
        assert!(res.residual <= tol().residual_at(a.norm_inf()));
        // Conjugator is orthogonal.
        let qtq = res.conjugator.transpose().mul(&res.conjugator);
        assert!(qtq.sub(&Matrix::identity(3)).norm_inf() < 1e-12);
    }

    #[test]
    fn equal_angle_planes_merge() {
        let a = Matrix::block_diag(&[rot2(1.0), rot2(1.0)]);
        let res = orthogonal_normal_form(&a, &tol()).unwrap();
        assert_eq!(res.form.blocks.len(), 1);
        match &res.form.blocks[0] {
            Block::Rot { angle, pairs } => {
                assert_eq!(*pairs, 2);
                assert!((angle - 1.0).abs() < 1e-12);
            }
            other => panic!("unexpected block {other:?}"),
        }
        assert!(res.residual < 1e-12);
    }

    #[test]
    fn classify_examples() {
        let t = tol();
        let a = Matrix::block_diag(&[rot2(0.9), Matrix::identity(2)]);
        assert_eq!(sym_text(&classify_spherical(&a, &t).unwrap(), 3), "[(1 1),2]");

        let neg = Matrix::identity(4).scale(-1.0);
        assert_eq!(sym_text(&classify_spherical(&neg, &t).unwrap(), 3), "[4]");

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let target = Matrix::block_diag(&[rot2(0.7), rot2(0.7), Matrix::identity(1)]);
        let q0 = random_orthogonal(5, &mut rng);
        let a = q0.mul(&target).mul(&q0.transpose());
        assert_eq!(sym_text(&classify_spherical(&a, &t).unwrap(), 4), "[(2 2),1]");
    }

    #[test]
    fn angle_canonicalized_to_zero_pi() {
        // R_{-0.4} is conjugate to R_{0.4} inside O(2); the form must
        // report the positive angle.
        let a = rot2(-0.4);
        let res = orthogonal_normal_form(&a, &tol()).unwrap();
        match &res.form.blocks[0] {
            Block::Rot { angle, .. } => assert!((angle - 0.4).abs() < 1e-12),
            other => panic!("unexpected block {other:?}"),
        }
        assert!(res.residual < 1e-12);
    }

    #[test]
    fn idempotent_on_form_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let target = Matrix::block_diag(&[
            rot2(2.2),
            rot2(1.1),
            Matrix::identity(1),
            Matrix::diagonal(&[-1.0, -1.0]),
        ]);
        let q0 = random_orthogonal(7, &mut rng);
        let a = q0.mul(&target).mul(&q0.transpose());
        let first = orthogonal_normal_form(&a, &tol()).unwrap();
        let second = orthogonal_normal_form(&first.form_matrix, &tol()).unwrap();
        assert!(first.form.approx_eq(&second.form, 1e-9));
    }

    #[test]
    fn determinant_consistency() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a = random_orthogonal(5, &mut rng);
            let res = orthogonal_normal_form(&a, &tol()).unwrap();
            assert!((res.form_matrix.det() - a.det()).abs() < 1e-9);
        }
    }

    #[test]
    fn conjugation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = tol();
        let target = Matrix::block_diag(&[rot2(0.3), Matrix::identity(1)]);
        let base = classify_spherical(&target, &t).unwrap();
        for _ in 0..50 {
            let q0 = random_orthogonal(3, &mut rng);
            let a = q0.mul(&target).mul(&q0.transpose());
            assert_eq!(classify_spherical(&a, &t).unwrap(), base);
        }
    }

    #[test]
    fn rejects_non_orthogonal() {
        let a = Matrix::from_rows(&[vec![1.0, 0.5], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            orthogonal_normal_form(&a, &tol()),
            Err(Error::NotInGroup { .. })
        ));
    }

    #[test]
    fn block_permutations_share_one_canonical_form() {
        // Two forms with the same blocks in different orders canonicalize
        // identically.
        let t = tol();
        let a = Matrix::block_diag(&[
            Matrix::diagonal(&[-1.0]),
            rot2(0.5),
            Matrix::identity(2),
            rot2(1.4),
        ]);
        let b = Matrix::block_diag(&[
            rot2(1.4),
            Matrix::identity(1),
            rot2(0.5),
            Matrix::identity(1),
            Matrix::diagonal(&[-1.0]),
        ]);
        let fa = orthogonal_normal_form(&a, &t).unwrap();
        let fb = orthogonal_normal_form(&b, &t).unwrap();
        assert!(fa.form.approx_eq(&fb.form, 1e-12));
        assert_eq!(
            fa.form.blocks.iter().map(Block::size).collect::<Vec<_>>(),
            vec![2, 2, 2, 1]
        );
    }

    #[test]
    fn near_angle_collision_warns() {
        let t = Tolerance { angle_tol: 1e-7, ..Tolerance::default() };
        let a = Matrix::block_diag(&[rot2(1.0), rot2(1.0 + 5e-7)]);
        let res = orthogonal_normal_form(&a, &t).unwrap();
        assert!(matches!(res.diagnostics.as_slice(), [Diagnostic::AmbiguousCluster { .. }]));
        // Two distinct clusters are still reported.
        assert_eq!(res.form.blocks.len(), 2);
    }
}
