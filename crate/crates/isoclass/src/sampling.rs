//! Random group elements and generic class representatives, used by the
//! randomized invariance tests, the isotropy oracle and the CLI examples.
//!
//! Representatives are built directly from canonical blocks, independent
//! of the classifiers, so round-trip tests compare two genuinely separate
//! constructions.

use rand::Rng;

use crate::error::Result;
use crate::forms::{Block, NormalForm};
use crate::numkit::{dot, Matrix};
use crate::segre::{EuclideanKind, HyperbolicKind, SegreSymbol};

/// Standard normal deviate by Box-Muller.
fn gauss<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Haar-ish random element of `O(m)`: Gaussian matrix orthonormalized by
/// modified Gram-Schmidt with re-orthogonalization.
pub fn random_orthogonal<R: Rng>(m: usize, rng: &mut R) -> Matrix {
    loop {
        let g = Matrix::from_fn(m, m, |_, _| gauss(rng));
        if let Some(q) = mgs(&g) {
            return q;
        }
    }
}

fn mgs(g: &Matrix) -> Option<Matrix> {
    let m = g.rows();
    let mut cols: Vec<Vec<f64>> = g.columns();
    for i in 0..m {
        for _pass in 0..2 {
            for j in 0..i {
                let c = dot(&cols[i], &cols[j]);
                for k in 0..m {
                    cols[i][k] -= c * cols[j][k];
                }
            }
        }
        let n = dot(&cols[i], &cols[i]).sqrt();
        if n < 1e-8 {
            return None;
        }
        for k in 0..m {
            cols[i][k] /= n;
        }
    }
    Some(Matrix::from_columns(&cols))
}

/// Random element of `Euc(n)`: orthogonal linear part plus a Gaussian
/// translation, in the affine (n+1) x (n+1) convention.
pub fn random_euclidean<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    let o = random_orthogonal(n, rng);
    let mut m = Matrix::identity(n + 1);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = o[(i, j)];
        }
        m[(i, n)] = gauss(rng);
    }
    m
}

/// Random proper element of `O(1,n)`: a boost in the leading plane
/// sandwiched between two spatial rotations. Properness is preserved by
/// each factor, so by the product.
pub fn random_proper_lorentz<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    let s: f64 = rng.gen_range(-1.5..1.5);
    let mut boost = Matrix::identity(n + 1);
    boost[(0, 0)] = s.cosh();
    boost[(0, 1)] = s.sinh();
    boost[(1, 0)] = s.sinh();
    boost[(1, 1)] = s.cosh();
    let embed = |o: &Matrix| {
        let mut m = Matrix::identity(n + 1);
        for i in 0..n {
            for j in 0..n {
                m[(i + 1, j + 1)] = o[(i, j)];
            }
        }
        m
    };
    let o1 = embed(&random_orthogonal(n, rng));
    let o2 = embed(&random_orthogonal(n, rng));
    o1.mul(&boost).mul(&o2)
}

/// Continuous parameters of a class representative.
#[derive(Debug, Clone)]
pub struct RepresentativeParams {
    /// One angle per distinct rotation cluster, listed in block order
    /// (sorted descending).
    pub angles: Vec<f64>,
    pub translation: f64,
    pub boost: f64,
}

/// Minimal pairwise angle separation enforced by the generic sampler, in
/// units of `angle_tol`.
pub const GENERIC_ANGLE_GAP_FACTOR: f64 = 100.0;

/// Samples generic parameters: pairwise angle gaps above one hundred
/// times the default angle tolerance, translation length and boost
/// parameter bounded away from zero.
pub fn generic_params<R: Rng>(num_angles: usize, rng: &mut R) -> RepresentativeParams {
    let min_gap = GENERIC_ANGLE_GAP_FACTOR * 1e-7;
    let mut angles: Vec<f64>;
    loop {
        angles = (0..num_angles)
            .map(|_| rng.gen_range(0.2..std::f64::consts::PI - 0.2))
            .collect();
        angles.sort_by(|a, b| b.partial_cmp(a).unwrap());
        if angles.windows(2).all(|w| w[0] - w[1] > min_gap) {
            break;
        }
    }
    RepresentativeParams {
        angles,
        translation: rng.gen_range(0.5..2.5),
        boost: rng.gen_range(0.3..2.0),
    }
}

/// Canonical block list of the normal-form representative of a symbol,
/// with the given continuous parameters. First real block takes sign +1.
pub fn canonical_blocks(symbol: &SegreSymbol, params: &RepresentativeParams) -> Result<Vec<Block>> {
    symbol.validate()?;
    let spherical_blocks = |sym: &crate::segre::SphericalSegre,
                            angles: &[f64],
                            neg_only: bool|
     -> Vec<Block> {
        let mut blocks = Vec::new();
        for (i, &pairs) in sym.rotation_mults().iter().enumerate() {
            blocks.push(Block::Rot { angle: angles[i], pairs });
        }
        let reals = sym.real_mults();
        if neg_only {
            if let Some(&m) = reals.first() {
                blocks.push(Block::NegId(m));
            }
        } else {
            if let Some(&m) = reals.first() {
                blocks.push(Block::PosId(m));
            }
            if reals.len() > 1 {
                blocks.push(Block::NegId(reals[1]));
            }
        }
        blocks
    };

    Ok(match symbol {
        SegreSymbol::Spherical { sym, .. } => spherical_blocks(sym, &params.angles, false),
        SegreSymbol::Euclidean { sym, .. } => {
            let mut blocks = spherical_blocks(&sym.sigma, &params.angles, true);
            match sym.kind {
                EuclideanKind::Elliptic => blocks.push(Block::PosId(sym.r + 1)),
                EuclideanKind::Hyperbolic => {
                    if sym.r > 1 {
                        blocks.push(Block::PosId(sym.r - 1));
                    }
                    blocks.push(Block::Trans(params.translation));
                }
            }
            blocks
        }
        SegreSymbol::Hyperbolic { sym, .. } => {
            let mut blocks: Vec<Block> = Vec::new();
            match sym.kind {
                HyperbolicKind::Elliptic => {
                    blocks.push(Block::PosId(sym.r));
                    blocks.extend(spherical_blocks(&sym.sigma, &params.angles, true));
                }
                HyperbolicKind::Parabolic => {
                    blocks.push(Block::Theta);
                    if sym.r > 3 {
                        blocks.push(Block::PosId(sym.r - 3));
                    }
                    blocks.extend(spherical_blocks(&sym.sigma, &params.angles, true));
                }
                HyperbolicKind::Hyperbolic => {
                    blocks.push(Block::Boost(params.boost));
                    blocks.extend(spherical_blocks(&sym.sigma, &params.angles, false));
                }
            }
            blocks
        }
    })
}

/// Normal-form representative matrix of a symbol.
pub fn representative(symbol: &SegreSymbol, params: &RepresentativeParams) -> Result<Matrix> {
    Ok(NormalForm::proper(canonical_blocks(symbol, params)?).matrix())
}

/// Number of distinct rotation angles a representative of `symbol` needs.
pub fn num_angles(symbol: &SegreSymbol) -> usize {
    match symbol {
        SegreSymbol::Spherical { sym, .. } => sym.num_angles(),
        SegreSymbol::Euclidean { sym, .. } => sym.sigma.num_angles(),
        SegreSymbol::Hyperbolic { sym, .. } => sym.sigma.num_angles(),
    }
}

/// A generic representative of the class, conjugated by a random element
/// of the relevant group. Returns the conjugated matrix together with the
/// parameters used.
pub fn conjugated_representative<R: Rng>(
    symbol: &SegreSymbol,
    rng: &mut R,
) -> Result<(Matrix, RepresentativeParams)> {
    let params = generic_params(num_angles(symbol), rng);
    let rep = representative(symbol, &params)?;
    let n = symbol.n();
    let conjugated = match symbol {
        SegreSymbol::Spherical { .. } => {
            let q = random_orthogonal(n + 1, rng);
            q.mul(&rep).mul(&q.transpose())
        }
        SegreSymbol::Euclidean { .. } => {
            let q = random_euclidean(n, rng);
            let qinv = euclidean_inverse(&q);
            q.mul(&rep).mul(&qinv)
        }
        SegreSymbol::Hyperbolic { .. } => {
            let q = random_proper_lorentz(n, rng);
            let qinv = lorentz_inverse(&q);
            q.mul(&rep).mul(&qinv)
        }
    };
    Ok((conjugated, params))
}

/// Exact group inverse of a Euclidean matrix: `[[A^T, -A^T b], [0, 1]]`.
pub fn euclidean_inverse(m: &Matrix) -> Matrix {
    let n = m.rows() - 1;
    let mut inv = Matrix::identity(n + 1);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = m[(j, i)];
        }
    }
    for i in 0..n {
        let mut s = 0.0;
        for j in 0..n {
            s += m[(j, i)] * m[(j, n)];
        }
        inv[(i, n)] = -s;
    }
    inv
}

/// Exact group inverse of a Lorentz matrix: `J M^T J`.
pub fn lorentz_inverse(m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut j = Matrix::identity(n);
    j[(0, 0)] = -1.0;
    j.mul(&m.transpose()).mul(&j)
}
