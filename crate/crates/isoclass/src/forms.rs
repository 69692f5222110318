//! Canonical block normal forms shared by the three classifiers, and the
//! conjugation result bundle they all return.

use crate::numkit::Matrix;

/// One canonical block of a normal form.
///
/// `Rot` is a stack of `pairs` copies of the 2x2 rotation by `angle`
/// (canonicalized to `(0, pi)`), `Trans` is the trailing Euclidean
/// translation block `[[1, a], [0, 1]]` (which includes the affine
/// coordinate), `Theta` the 3x3 parabolic Lorentz block, and `Boost` the
/// 2x2 Lorentz boost with parameter `t > 0`.
#[derive(Debug, Clone, PartialEq)]
pub enum Block {
    Rot { angle: f64, pairs: usize },
    PosId(usize),
    NegId(usize),
    Trans(f64),
    Theta,
    Boost(f64),
}

impl Block {
    pub fn size(&self) -> usize {
        match self {
            Block::Rot { pairs, .. } => 2 * pairs,
            Block::PosId(m) | Block::NegId(m) => *m,
            Block::Trans(_) => 2,
            Block::Theta => 3,
            Block::Boost(_) => 2,
        }
    }

    pub fn matrix(&self) -> Matrix {
        match self {
            Block::Rot { angle, pairs } => {
                let r = Matrix::from_rows(&[
                    vec![angle.cos(), -angle.sin()],
                    vec![angle.sin(), angle.cos()],
                ])
                .unwrap();
                Matrix::block_diag(&vec![r; *pairs])
            }
            Block::PosId(m) => Matrix::identity(*m),
            Block::NegId(m) => Matrix::identity(*m).scale(-1.0),
            Block::Trans(a) => Matrix::from_rows(&[vec![1.0, *a], vec![0.0, 1.0]]).unwrap(),
            Block::Theta => Matrix::from_rows(&[
                vec![1.5, 1.0, -0.5],
                vec![1.0, 1.0, -1.0],
                vec![0.5, 1.0, 0.5],
            ])
            .unwrap(),
            Block::Boost(t) => Matrix::from_rows(&[
                vec![t.cosh(), t.sinh()],
                vec![t.sinh(), t.cosh()],
            ])
            .unwrap(),
        }
    }
}

/// An ordered list of canonical blocks. For Lorentz forms `improper`
/// marks that the represented matrix is the negative of the block
/// diagonal (every element of `O(1,n)` is conjugate to plus or minus a
/// proper normal form).
#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm {
    pub blocks: Vec<Block>,
    pub improper: bool,
}

impl NormalForm {
    pub fn proper(blocks: Vec<Block>) -> Self {
        NormalForm { blocks, improper: false }
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Block::size).sum()
    }

    pub fn matrix(&self) -> Matrix {
        let blocks: Vec<Matrix> = self.blocks.iter().map(Block::matrix).collect();
        let m = Matrix::block_diag(&blocks);
        if self.improper {
            m.scale(-1.0)
        } else {
            m
        }
    }

    /// Rotation parameters as (angle, pairs), in block order.
    pub fn rotation_angles(&self) -> Vec<(f64, usize)> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Block::Rot { angle, pairs } => Some((*angle, *pairs)),
                _ => None,
            })
            .collect()
    }

    pub fn translation_length(&self) -> Option<f64> {
        self.blocks.iter().find_map(|b| match b {
            Block::Trans(a) => Some(*a),
            _ => None,
        })
    }

    pub fn boost_parameter(&self) -> Option<f64> {
        self.blocks.iter().find_map(|b| match b {
            Block::Boost(t) => Some(*t),
            _ => None,
        })
    }

    pub fn has_theta(&self) -> bool {
        self.blocks.iter().any(|b| matches!(b, Block::Theta))
    }

    /// Structural equality with angles, translation lengths and boost
    /// parameters compared within `eps`. Used for idempotence checks.
    pub fn approx_eq(&self, other: &NormalForm, eps: f64) -> bool {
        if self.improper != other.improper || self.blocks.len() != other.blocks.len() {
            return false;
        }
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| match (a, b) {
            (Block::Rot { angle: x, pairs: p }, Block::Rot { angle: y, pairs: q }) => {
                p == q && (x - y).abs() <= eps
            }
            (Block::PosId(p), Block::PosId(q)) | (Block::NegId(p), Block::NegId(q)) => p == q,
            (Block::Trans(x), Block::Trans(y)) => (x - y).abs() <= eps,
            (Block::Boost(x), Block::Boost(y)) => (x - y).abs() <= eps,
            (Block::Theta, Block::Theta) => true,
            _ => false,
        })
    }
}

/// Warnings attached to a classification that still produced a result.
#[derive(Debug, Clone, PartialEq)]
pub enum Diagnostic {
    /// Two distinct rotation-angle clusters are closer than ten times the
    /// angle tolerance; the symbol is discontinuous at such collisions.
    AmbiguousCluster { angle_a: f64, angle_b: f64 },
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diagnostic::AmbiguousCluster { angle_a, angle_b } => write!(
                f,
                "rotation angles {angle_a:.9} and {angle_b:.9} are nearly coincident; \
                 the symbol is sensitive to angle_tol here"
            ),
        }
    }
}

/// Normal form, its matrix, an explicit conjugator in the relevant group,
/// and the conjugation residual `|Q^-1 A Q - form_matrix|_inf`.
#[derive(Debug, Clone)]
pub struct ConjugationResult {
    pub form: NormalForm,
    pub form_matrix: Matrix,
    pub conjugator: Matrix,
    pub residual: f64,
    pub diagnostics: Vec<Diagnostic>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_sizes_and_matrices() {
        let nf = NormalForm::proper(vec![
            Block::Rot { angle: 1.0, pairs: 2 },
            Block::PosId(1),
            Block::NegId(2),
        ]);
        assert_eq!(nf.size(), 7);
        let m = nf.matrix();
        assert_eq!(m.rows(), 7);
        assert!((m[(0, 0)] - 1.0f64.cos()).abs() < 1e-15);
        assert!((m[(4, 4)] - 1.0).abs() < 1e-15);
        assert!((m[(5, 5)] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn theta_block_is_lorentzian() {
        let th = Block::Theta.matrix();
        let j = Matrix::diagonal(&[-1.0, 1.0, 1.0]);
        let res = th.transpose().mul(&j).mul(&th).sub(&j);
        assert!(res.norm_inf() < 1e-15);
    }

    #[test]
    fn improper_negates() {
        let nf = NormalForm { blocks: vec![Block::PosId(2)], improper: true };
        assert!((nf.matrix()[(0, 0)] + 1.0).abs() < 1e-15);
    }
}
