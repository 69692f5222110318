//! One-call classification reports: normal form, conjugator, symbol,
//! isotropy data and continuous parameters for a matrix in any of the
//! three isometry groups.

use crate::error::{Error, Result};
use crate::euclidean::{euclidean_normal_form, symbol_of_euclidean_form};
use crate::forms::ConjugationResult;
use crate::hyperbolic::{is_proper, lorentz_normal_form, symbol_of_hyperbolic_form};
use crate::numkit::{Matrix, Tolerance};
use crate::orbit::{isotropy_dimension, IsotropyInfo};
use crate::segre::{EuclideanKind, HyperbolicKind, SegreSymbol, Space};
use crate::spherical::{orthogonal_normal_form, symbol_of_form};

/// Everything a caller typically wants to know about one isometry.
#[derive(Debug, Clone)]
pub struct Report {
    pub space: Space,
    pub n: usize,
    pub symbol: SegreSymbol,
    /// Fixed-point type: elliptic/hyperbolic (spherical and Euclidean) or
    /// elliptic/parabolic/hyperbolic (hyperbolic space). For spherical
    /// isometries this is a property of the matrix, not of the class: the
    /// symbol is sign-blind while fixed points require eigenvalue +1.
    pub kind: &'static str,
    pub conjugation: ConjugationResult,
    pub isotropy: IsotropyInfo,
    /// Present for Lorentz inputs; `false` means the matrix reverses the
    /// time orientation and the classification refers to its negative.
    pub proper: Option<bool>,
}

/// Classifies an `(n+1) x (n+1)` matrix as an isometry of the given
/// space. Improper Lorentz matrices are reported through their proper
/// negatives with `proper = Some(false)`.
pub fn classify_matrix(space: Space, n: usize, m: &Matrix, tol: &Tolerance) -> Result<Report> {
    if m.rows() != n + 1 || m.cols() != n + 1 {
        return Err(Error::InvariantViolation(format!(
            "expected a {s} x {s} matrix for n = {n}, got {r} x {c}",
            s = n + 1,
            r = m.rows(),
            c = m.cols()
        )));
    }
    match space {
        Space::Spherical => {
            let conjugation = orthogonal_normal_form(m, tol)?;
            let sym = symbol_of_form(&conjugation.form)?;
            let kind = if conjugation
                .form
                .blocks
                .iter()
                .any(|b| matches!(b, crate::forms::Block::PosId(_)))
            {
                "elliptic"
            } else {
                "hyperbolic"
            };
            let symbol = SegreSymbol::Spherical { n, sym };
            let isotropy = isotropy_dimension(&symbol)?;
            Ok(Report { space, n, symbol, kind, conjugation, isotropy, proper: None })
        }
        Space::Euclidean => {
            let conjugation = euclidean_normal_form(m, tol)?;
            let sym = symbol_of_euclidean_form(&conjugation.form)?;
            let kind = match sym.kind {
                EuclideanKind::Elliptic => "elliptic",
                EuclideanKind::Hyperbolic => "hyperbolic",
            };
            let symbol = SegreSymbol::Euclidean { n, sym };
            let isotropy = isotropy_dimension(&symbol)?;
            Ok(Report { space, n, symbol, kind, conjugation, isotropy, proper: None })
        }
        Space::Hyperbolic => {
            let proper = is_proper(m);
            let conjugation = lorentz_normal_form(m, tol)?;
            let proper_form = crate::forms::NormalForm {
                blocks: conjugation.form.blocks.clone(),
                improper: false,
            };
            let sym = symbol_of_hyperbolic_form(&proper_form)?;
            let kind = match sym.kind {
                HyperbolicKind::Elliptic => "elliptic",
                HyperbolicKind::Parabolic => "parabolic",
                HyperbolicKind::Hyperbolic => "hyperbolic",
            };
            let symbol = SegreSymbol::Hyperbolic { n, sym };
            let isotropy = isotropy_dimension(&symbol)?;
            Ok(Report { space, n, symbol, kind, conjugation, isotropy, proper: Some(proper) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::Block;
    use crate::segre::render;

    #[test]
    fn report_carries_everything() {
        let t = Tolerance::default();
        let m = Matrix::block_diag(&[Matrix::diagonal(&[-1.0]), Block::Trans(1.5).matrix()]);
        let rep = classify_matrix(Space::Euclidean, 2, &m, &t).unwrap();
        assert_eq!(render(&rep.symbol), "[h;1;1]");
        assert_eq!(rep.kind, "hyperbolic");
        assert_eq!(rep.isotropy.group_dim, 3);
        assert!((rep.conjugation.form.translation_length().unwrap() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn improper_lorentz_reports_proper_flag() {
        let t = Tolerance::default();
        let m = Matrix::block_diag(&[
            Matrix::identity(1),
            Block::Rot { angle: 0.4, pairs: 1 }.matrix(),
        ])
        .scale(-1.0);
        let rep = classify_matrix(Space::Hyperbolic, 2, &m, &t).unwrap();
        assert_eq!(rep.proper, Some(false));
        assert_eq!(render(&rep.symbol), "[e;1;(1 1)]");
    }

    #[test]
    fn antipodal_map_is_fixed_point_free() {
        let t = Tolerance::default();
        let rep =
            classify_matrix(Space::Spherical, 2, &Matrix::identity(3).scale(-1.0), &t).unwrap();
        assert_eq!(rep.kind, "hyperbolic");
        assert_eq!(render(&rep.symbol), "[3]");
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let t = Tolerance::default();
        assert!(matches!(
            classify_matrix(Space::Spherical, 3, &Matrix::identity(3), &t),
            Err(Error::InvariantViolation(_))
        ));
    }
}
