//! Eigenvalues of a general real matrix: Householder reduction to
//! Hessenberg form followed by the Francis implicit double-shift QR
//! iteration. Only eigenvalues are produced; primary components are
//! recovered separately from kernels of annihilating factors.

use super::Matrix;
use crate::error::{Error, Result};

/// Eigenvalues as `(re, im)` pairs. Complex-conjugate pairs are emitted
/// adjacently as `(re, +im), (re, -im)` with `im > 0` first.
pub fn general_eigenvalues(m: &Matrix) -> Result<Vec<(f64, f64)>> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 1 {
        return Ok(vec![(m[(0, 0)], 0.0)]);
    }
    let mut h = hessenberg(m);
    francis_eigenvalues(&mut h)
}

/// In-place Householder similarity reduction to upper Hessenberg form.
fn hessenberg(m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut a = m.clone();
    for k in 0..n.saturating_sub(2) {
        // Householder vector for column k, rows k+1..n.
        let mut alpha = 0.0;
        for i in (k + 1)..n {
            alpha += a[(i, k)] * a[(i, k)];
        }
        alpha = alpha.sqrt();
        if alpha == 0.0 {
            continue;
        }
        if a[(k + 1, k)] > 0.0 {
            alpha = -alpha;
        }
        let mut v = vec![0.0; n];
        v[k + 1] = a[(k + 1, k)] - alpha;
        for i in (k + 2)..n {
            v[i] = a[(i, k)];
        }
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        // A <- (I - beta v v^T) A
        for j in 0..n {
            let mut s = 0.0;
            for i in (k + 1)..n {
                s += v[i] * a[(i, j)];
            }
            s *= beta;
            for i in (k + 1)..n {
                a[(i, j)] -= s * v[i];
            }
        }
        // A <- A (I - beta v v^T)
        for i in 0..n {
            let mut s = 0.0;
            for j in (k + 1)..n {
                s += a[(i, j)] * v[j];
            }
            s *= beta;
            for j in (k + 1)..n {
                a[(i, j)] -= s * v[j];
            }
        }
        for i in (k + 2)..n {
            a[(i, k)] = 0.0;
        }
        a[(k + 1, k)] = alpha;
    }
    a
}

fn eig2x2(a: f64, b: f64, c: f64, d: f64) -> [(f64, f64); 2] {
    let tr = a + d;
    let mid = 0.5 * tr;
    let disc = 0.25 * (a - d) * (a - d) + b * c;
    if disc >= 0.0 {
        let root = disc.sqrt();
        // Stable split of the real pair.
        let l1 = if mid >= 0.0 { mid + root } else { mid - root };
        let det = a * d - b * c;
        let l2 = if l1 != 0.0 { det / l1 } else { mid - root.copysign(mid) };
        [(l1, 0.0), (l2, 0.0)]
    } else {
        let im = (-disc).sqrt();
        [(mid, im), (mid, -im)]
    }
}

fn francis_eigenvalues(h: &mut Matrix) -> Result<Vec<(f64, f64)>> {
    let n = h.rows();
    let mut eigs: Vec<(f64, f64)> = Vec::with_capacity(n);
    let mut hi = n; // active block is rows/cols [lo, hi)
    let mut iter_since_deflation = 0usize;
    let mut total_iters = 0usize;
    let cap = 60 * n.max(1);
    // Absolute deflation floor: subdiagonal noise in a matrix whose
    // eigenvalues coincide (e.g. a conjugated identity) never drops below
    // a few ulps of the matrix scale, so a purely relative criterion
    // would stall the iteration.
    let floor = 32.0 * n as f64 * f64::EPSILON * h.norm_inf().max(f64::MIN_POSITIVE);

    while hi > 0 {
        // Zero out negligible subdiagonals.
        for i in 1..hi {
            let small = (f64::EPSILON * (h[(i - 1, i - 1)].abs() + h[(i, i)].abs())).max(floor);
            if h[(i, i - 1)].abs() <= small {
                h[(i, i - 1)] = 0.0;
            }
        }
        // Find the start of the unreduced block ending at hi.
        let mut lo = hi - 1;
        while lo > 0 && h[(lo, lo - 1)] != 0.0 {
            lo -= 1;
        }
        let size = hi - lo;
        if size == 1 {
            eigs.push((h[(hi - 1, hi - 1)], 0.0));
            hi -= 1;
            iter_since_deflation = 0;
            continue;
        }
        if size == 2 {
            let [e1, e2] = eig2x2(
                h[(hi - 2, hi - 2)],
                h[(hi - 2, hi - 1)],
                h[(hi - 1, hi - 2)],
                h[(hi - 1, hi - 1)],
            );
            eigs.push(e1);
            eigs.push(e2);
            hi -= 2;
            iter_since_deflation = 0;
            continue;
        }

        total_iters += 1;
        iter_since_deflation += 1;
        if total_iters > cap {
            return Err(Error::ConvergenceFailure { iterations: total_iters });
        }

        // Double shift from the trailing 2x2, with exceptional shifts
        // centered near the stalled corner when progress stops.
        let (mut trace, mut det);
        if iter_since_deflation > 0 && iter_since_deflation.is_multiple_of(12) {
            let s = h[(hi - 1, hi - 2)].abs() + h[(hi - 2, hi - 3)].abs();
            let d = h[(hi - 1, hi - 1)];
            trace = 2.0 * d + 1.5 * s;
            det = (d + 0.75 * s) * (d + 0.75 * s) - 0.4375 * s * s;
        } else {
            let a = h[(hi - 2, hi - 2)];
            let b = h[(hi - 2, hi - 1)];
            let c = h[(hi - 1, hi - 2)];
            let d = h[(hi - 1, hi - 1)];
            trace = a + d;
            det = a * d - b * c;
        }
        if !trace.is_finite() || !det.is_finite() {
            trace = 0.0;
            det = 0.0;
        }

        // First column of (H - s1 I)(H - s2 I).
        let mut x = h[(lo, lo)] * h[(lo, lo)] + h[(lo, lo + 1)] * h[(lo + 1, lo)]
            - trace * h[(lo, lo)]
            + det;
        let mut y = h[(lo + 1, lo)] * (h[(lo, lo)] + h[(lo + 1, lo + 1)] - trace);
        let mut z = h[(lo + 1, lo)] * h[(lo + 2, lo + 1)];

        // Bulge chase.
        for k in lo..hi - 2 {
            let (v, beta) = householder3(x, y, z);
            if beta != 0.0 {
                let jlo = if k > lo { k - 1 } else { lo };
                // Apply P from the left to rows k..k+3.
                for j in jlo..n {
                    let s = beta * (v[0] * h[(k, j)] + v[1] * h[(k + 1, j)] + v[2] * h[(k + 2, j)]);
                    h[(k, j)] -= s * v[0];
                    h[(k + 1, j)] -= s * v[1];
                    h[(k + 2, j)] -= s * v[2];
                }
                // Apply P from the right to columns k..k+3.
                let iend = (k + 4).min(hi);
                for i in 0..iend {
                    let s = beta * (v[0] * h[(i, k)] + v[1] * h[(i, k + 1)] + v[2] * h[(i, k + 2)]);
                    h[(i, k)] -= s * v[0];
                    h[(i, k + 1)] -= s * v[1];
                    h[(i, k + 2)] -= s * v[2];
                }
            }
            x = h[(k + 1, k)];
            y = h[(k + 2, k)];
            z = if k + 3 < hi { h[(k + 3, k)] } else { 0.0 };
        }
        // Final 2x1 Givens at the bottom of the block.
        let (c, s) = givens(x, y);
        let k = hi - 2;
        for j in k.saturating_sub(1)..n {
            let t1 = h[(k, j)];
            let t2 = h[(k + 1, j)];
            h[(k, j)] = c * t1 + s * t2;
            h[(k + 1, j)] = -s * t1 + c * t2;
        }
        for i in 0..hi {
            let t1 = h[(i, k)];
            let t2 = h[(i, k + 1)];
            h[(i, k)] = c * t1 + s * t2;
            h[(i, k + 1)] = -s * t1 + c * t2;
        }
    }

    // Emitted from the bottom up; restore natural order and normalize
    // conjugate pairs to (+im, -im) adjacency.
    eigs.reverse();
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < eigs.len() {
        if eigs[i].1 != 0.0 {
            let (re, im) = eigs[i];
            out.push((re, im.abs()));
            out.push((re, -im.abs()));
            i += 2;
        } else {
            out.push(eigs[i]);
            i += 1;
        }
    }
    Ok(out)
}

fn householder3(x: f64, y: f64, z: f64) -> ([f64; 3], f64) {
    let alpha = (x * x + y * y + z * z).sqrt();
    if alpha == 0.0 {
        return ([0.0; 3], 0.0);
    }
    let alpha = if x > 0.0 { -alpha } else { alpha };
    let v0 = x - alpha;
    let v = [v0, y, z];
    let vnorm2 = v0 * v0 + y * y + z * z;
    if vnorm2 == 0.0 {
        return ([0.0; 3], 0.0);
    }
    (v, 2.0 / vnorm2)
}

fn givens(a: f64, b: f64) -> (f64, f64) {
    if b == 0.0 {
        return (1.0, 0.0);
    }
    let r = a.hypot(b);
    (a / r, b / r)
}
