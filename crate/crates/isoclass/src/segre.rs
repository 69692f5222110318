//! The Segre-symbol data model for all three geometries, the canonical
//! text grammar, exhaustive enumeration per dimension, and the closed-form
//! class counts.
//!
//! A spherical symbol `[(n1 n1), ..., (ns ns), m1, m2]` records the
//! pair-counts of the rotation blocks (one entry per distinct angle) and
//! the multiplicities of the two possible real eigenvalues. The symbol is
//! deliberately sign-blind: `I_a (+) -I_b` and `-I_a (+) I_b` share one
//! symbol. Euclidean and hyperbolic symbols wrap a spherical symbol with
//! the isometry type and the dimension `r` of the unit / temporal part.

use crate::error::{Error, Result};

/// Which space form a symbol or matrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl Space {
    pub fn name(&self) -> &'static str {
        match self {
            Space::Spherical => "spherical",
            Space::Euclidean => "euclidean",
            Space::Hyperbolic => "hyperbolic",
        }
    }
}

impl std::str::FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spherical" => Ok(Space::Spherical),
            "euclidean" => Ok(Space::Euclidean),
            "hyperbolic" => Ok(Space::Hyperbolic),
            _ => Err(Error::SyntaxError {
                position: 0,
                message: format!("unknown space `{s}` (expected spherical, euclidean or hyperbolic)"),
            }),
        }
    }
}

/// Orthogonal Segre symbol: rotation pair-counts (descending) and real
/// eigenvalue multiplicities (descending, at most two).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphericalSegre {
    rotation_mults: Vec<usize>,
    real_mults: Vec<usize>,
}

impl SphericalSegre {
    pub fn new(rotation_mults: Vec<usize>, real_mults: Vec<usize>) -> Result<Self> {
        if rotation_mults.contains(&0) || real_mults.contains(&0) {
            return Err(Error::InvariantViolation("zero multiplicities are not allowed".into()));
        }
        if rotation_mults.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvariantViolation("rotation multiplicities must be descending".into()));
        }
        if real_mults.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvariantViolation("real multiplicities must be descending".into()));
        }
        if real_mults.len() > 2 {
            return Err(Error::InvariantViolation(
                "at most two real eigenvalue multiplicities (eigenvalues are +-1)".into(),
            ));
        }
        Ok(SphericalSegre { rotation_mults, real_mults })
    }

    pub fn empty() -> Self {
        SphericalSegre { rotation_mults: vec![], real_mults: vec![] }
    }

    pub fn rotation_mults(&self) -> &[usize] {
        &self.rotation_mults
    }

    pub fn real_mults(&self) -> &[usize] {
        &self.real_mults
    }

    /// Linear dimension occupied by the symbol: `2 sum(n_i) + sum(m_i)`.
    pub fn linear_dim(&self) -> usize {
        2 * self.rotation_mults.iter().sum::<usize>() + self.real_mults.iter().sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.rotation_mults.is_empty() && self.real_mults.is_empty()
    }

    /// Number of distinct rotation angles.
    pub fn num_angles(&self) -> usize {
        self.rotation_mults.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EuclideanKind {
    Elliptic,
    Hyperbolic,
}

/// Euclidean Segre symbol `[t; r; sigma_R]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EuclideanSegre {
    pub kind: EuclideanKind,
    /// Dimension of the fixed space of the linear part.
    pub r: usize,
    /// Symbol of the restriction to the non-unit part; eigenvalue +1 is
    /// excluded there, so at most one real multiplicity (the -1 block).
    pub sigma: SphericalSegre,
}

impl EuclideanSegre {
    pub fn new(kind: EuclideanKind, r: usize, sigma: SphericalSegre) -> Result<Self> {
        if sigma.real_mults().len() > 1 {
            return Err(Error::InvariantViolation(
                "the non-unit part of a Euclidean symbol carries at most the -1 eigenvalue".into(),
            ));
        }
        if kind == EuclideanKind::Hyperbolic && r == 0 {
            return Err(Error::InvariantViolation(
                "a hyperbolic Euclidean symbol requires r >= 1".into(),
            ));
        }
        Ok(EuclideanSegre { kind, r, sigma })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperbolicKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Hyperbolic Segre symbol `[t; r; sigma_s]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperbolicSegre {
    pub kind: HyperbolicKind,
    /// Dimension of the temporal part `V_t`.
    pub r: usize,
    /// Symbol of the spatial component.
    pub sigma: SphericalSegre,
}

impl HyperbolicSegre {
    pub fn new(kind: HyperbolicKind, r: usize, sigma: SphericalSegre) -> Result<Self> {
        match kind {
            HyperbolicKind::Elliptic => {
                if r < 1 {
                    return Err(Error::InvariantViolation("elliptic hyperbolic symbol needs r >= 1".into()));
                }
                if sigma.real_mults().len() > 1 {
                    return Err(Error::InvariantViolation(
                        "the spatial part of an elliptic symbol has no +1 blocks".into(),
                    ));
                }
            }
            HyperbolicKind::Parabolic => {
                if r < 3 {
                    return Err(Error::InvariantViolation("parabolic symbol needs r >= 3".into()));
                }
                if sigma.real_mults().len() > 1 {
                    return Err(Error::InvariantViolation(
                        "the spatial part of a parabolic symbol has no +1 blocks".into(),
                    ));
                }
            }
            HyperbolicKind::Hyperbolic => {
                if r != 2 {
                    return Err(Error::InvariantViolation("a boost symbol has r = 2".into()));
                }
            }
        }
        Ok(HyperbolicSegre { kind, r, sigma })
    }
}

/// A Segre symbol together with the ambient space dimension `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SegreSymbol {
    Spherical { n: usize, sym: SphericalSegre },
    Euclidean { n: usize, sym: EuclideanSegre },
    Hyperbolic { n: usize, sym: HyperbolicSegre },
}

impl SegreSymbol {
    pub fn space(&self) -> Space {
        match self {
            SegreSymbol::Spherical { .. } => Space::Spherical,
            SegreSymbol::Euclidean { .. } => Space::Euclidean,
            SegreSymbol::Hyperbolic { .. } => Space::Hyperbolic,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            SegreSymbol::Spherical { n, .. }
            | SegreSymbol::Euclidean { n, .. }
            | SegreSymbol::Hyperbolic { n, .. } => *n,
        }
    }

    /// Checks the dimension bookkeeping identity of the variant.
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            SegreSymbol::Spherical { n, sym } => sym.linear_dim() == n + 1,
            SegreSymbol::Euclidean { n, sym } => sym.sigma.linear_dim() + sym.r == *n,
            SegreSymbol::Hyperbolic { n, sym } => {
                sym.sigma.linear_dim() + sym.r == n + 1
                    && match sym.kind {
                        HyperbolicKind::Elliptic | HyperbolicKind::Parabolic => sym.r <= n + 1,
                        HyperbolicKind::Hyperbolic => true,
                    }
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvariantViolation(format!(
                "dimension bookkeeping fails for {} in dimension {}",
                render(self),
                self.n()
            )))
        }
    }
}

impl std::fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render(self))
    }
}

// ---------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------

/// Number of partitions of `k`, by dynamic programming over part sizes.
pub fn partition_count(k: usize) -> u64 {
    let mut dp = vec![0u64; k + 1];
    dp[0] = 1;
    for part in 1..=k {
        for s in part..=k {
            dp[s] += dp[s - part];
        }
    }
    dp[k]
}

/// All partitions of `k` in descending-lexicographic order, each written
/// with descending parts. `partitions(0)` is the single empty partition.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k.max(1), &mut Vec::new(), &mut out);
    out
}

/// Number of Segre classes of `I(S^n)`:
/// `s(n) = sum_{j=0}^{[(n+1)/2]} p(j) ([(n+1)/2] - j + 1)`.
///
/// Defined for `n >= -1`; the formula itself yields `s(-1) = s(0) = 1`
/// (the empty orthogonal symbol is a single class), which is the boundary
/// convention the hyperbolic count relies on.
pub fn spherical_count(n: i64) -> u64 {
    if n < -1 {
        return 0;
    }
    let half = ((n + 1) / 2) as usize;
    (0..=half).map(|j| partition_count(j) * (half - j + 1) as u64).sum()
}

/// Number of elliptic Segre classes of `I(E^n)` (also the elliptic count
/// for `I(H^n)` with `n+1` replaced by `n`):
/// `sum_{j=0}^{[n/2]} p(j) (n - 2j + 1)`, zero for negative `n`.
fn elliptic_count(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    (0..=n / 2).map(|j| partition_count(j) * (n - 2 * j + 1) as u64).sum()
}

/// Per-type class counts for one space and dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassCount {
    Spherical { total: u64 },
    Euclidean { total: u64, elliptic: u64, hyperbolic: u64 },
    Hyperbolic { total: u64, elliptic: u64, parabolic: u64, hyperbolic: u64 },
}

impl ClassCount {
    pub fn total(&self) -> u64 {
        match self {
            ClassCount::Spherical { total }
            | ClassCount::Euclidean { total, .. }
            | ClassCount::Hyperbolic { total, .. } => *total,
        }
    }
}

fn check_range(space: Space, n: i64) -> Result<()> {
    let ok = match space {
        Space::Spherical => n >= 0,
        Space::Euclidean | Space::Hyperbolic => n >= 1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { space: space.name(), n })
    }
}

/// Evaluates the closed class-count formulas exactly.
pub fn count_classes(space: Space, n: i64) -> Result<ClassCount> {
    check_range(space, n)?;
    Ok(match space {
        Space::Spherical => ClassCount::Spherical { total: spherical_count(n) },
        Space::Euclidean => {
            let elliptic = elliptic_count(n);
            let hyperbolic = elliptic_count(n - 1);
            ClassCount::Euclidean { total: elliptic + hyperbolic, elliptic, hyperbolic }
        }
        Space::Hyperbolic => {
            let elliptic = elliptic_count(n);
            let parabolic = elliptic_count(n - 2);
            let hyperbolic = spherical_count(n - 2);
            ClassCount::Hyperbolic {
                total: elliptic + parabolic + hyperbolic,
                elliptic,
                parabolic,
                hyperbolic,
            }
        }
    })
}

// ---------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------

/// Inner spherical symbols of total linear dimension `dim`, with the real
/// multiplicities restricted to at most `max_reals` entries. Emitted in
/// the fixed table order: total rotation size ascending, then rotation
/// multiplicities descending-lexicographic, then real multiplicities
/// descending-lexicographic.
fn spherical_symbols_of_dim(dim: usize, max_reals: usize) -> Vec<SphericalSegre> {
    let mut out = Vec::new();
    for j in 0..=dim / 2 {
        let rem = dim - 2 * j;
        for rot in partitions(j) {
            let mut reals_options: Vec<Vec<usize>> = Vec::new();
            match max_reals {
                1 => {
                    if rem == 0 {
                        reals_options.push(vec![]);
                    } else {
                        reals_options.push(vec![rem]);
                    }
                }
                _ => {
                    // m1 >= m2 >= 0 with m1 + m2 = rem, m1 descending.
                    let mut m1 = rem;
                    loop {
                        let m2 = rem - m1;
                        if m2 > m1 {
                            break;
                        }
                        let mut v = vec![];
                        if m1 > 0 {
                            v.push(m1);
                        }
                        if m2 > 0 {
                            v.push(m2);
                        }
                        reals_options.push(v);
                        if m1 == 0 {
                            break;
                        }
                        m1 -= 1;
                    }
                }
            }
            for reals in reals_options {
                out.push(SphericalSegre::new(rot.clone(), reals).expect("generated symbols are valid"));
            }
        }
    }
    out
}

/// Enumerates every Segre symbol of the given space and dimension, in the
/// canonical order used by the golden tables: type (elliptic, hyperbolic,
/// parabolic), then `r` descending, then the inner spherical order of
/// [`spherical_symbols_of_dim`].
pub fn enumerate_symbols(space: Space, n: i64) -> Result<Vec<SegreSymbol>> {
    check_range(space, n)?;
    let n = n as usize;
    let mut out: Vec<SegreSymbol> = Vec::new();
    match space {
        Space::Spherical => {
            for sym in spherical_symbols_of_dim(n + 1, 2) {
                out.push(SegreSymbol::Spherical { n, sym });
            }
        }
        Space::Euclidean => {
            for r in (0..=n).rev() {
                for sigma in spherical_symbols_of_dim(n - r, 1) {
                    out.push(SegreSymbol::Euclidean {
                        n,
                        sym: EuclideanSegre::new(EuclideanKind::Elliptic, r, sigma).unwrap(),
                    });
                }
            }
            for r in (1..=n).rev() {
                for sigma in spherical_symbols_of_dim(n - r, 1) {
                    out.push(SegreSymbol::Euclidean {
                        n,
                        sym: EuclideanSegre::new(EuclideanKind::Hyperbolic, r, sigma).unwrap(),
                    });
                }
            }
        }
        Space::Hyperbolic => {
            for r in (1..=n + 1).rev() {
                for sigma in spherical_symbols_of_dim(n + 1 - r, 1) {
                    out.push(SegreSymbol::Hyperbolic {
                        n,
                        sym: HyperbolicSegre::new(HyperbolicKind::Elliptic, r, sigma).unwrap(),
                    });
                }
            }
            for sigma in spherical_symbols_of_dim(n - 1, 2) {
                out.push(SegreSymbol::Hyperbolic {
                    n,
                    sym: HyperbolicSegre::new(HyperbolicKind::Hyperbolic, 2, sigma).unwrap(),
                });
            }
            for r in (3..=n + 1).rev() {
                for sigma in spherical_symbols_of_dim(n + 1 - r, 1) {
                    out.push(SegreSymbol::Hyperbolic {
                        n,
                        sym: HyperbolicSegre::new(HyperbolicKind::Parabolic, r, sigma).unwrap(),
                    });
                }
            }
        }
    }
    for sym in &out {
        sym.validate()?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Text grammar
// ---------------------------------------------------------------------

fn render_inner(sym: &SphericalSegre) -> String {
    if sym.is_empty() {
        return "0".to_string();
    }
    let mut items: Vec<String> = Vec::new();
    for &p in sym.rotation_mults() {
        items.push(format!("({p} {p})"));
    }
    for &m in sym.real_mults() {
        items.push(m.to_string());
    }
    items.join(",")
}

/// Canonical ASCII rendering of a symbol, e.g. `[(1 1),2]` or `[h;1;0]`.
pub fn render(symbol: &SegreSymbol) -> String {
    match symbol {
        SegreSymbol::Spherical { sym, .. } => format!("[{}]", render_inner(sym)),
        SegreSymbol::Euclidean { sym, .. } => {
            let t = match sym.kind {
                EuclideanKind::Elliptic => "e",
                EuclideanKind::Hyperbolic => "h",
            };
            format!("[{t};{};{}]", sym.r, render_inner(&sym.sigma))
        }
        SegreSymbol::Hyperbolic { sym, .. } => {
            let t = match sym.kind {
                HyperbolicKind::Elliptic => "e",
                HyperbolicKind::Parabolic => "p",
                HyperbolicKind::Hyperbolic => "h",
            };
            format!("[{t};{};{}]", sym.r, render_inner(&sym.sigma))
        }
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            got => Err(Error::SyntaxError {
                position: self.pos.saturating_sub(1),
                message: format!(
                    "expected `{}`, found {}",
                    c as char,
                    got.map_or("end of input".to_string(), |g| format!("`{}`", g as char))
                ),
            }),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::SyntaxError { position: start, message: "expected a number".into() });
        }
        self.text[start..self.pos].parse().map_err(|_| Error::SyntaxError {
            position: start,
            message: "number out of range".into(),
        })
    }
}

/// Parses an inner spherical item list up to (not consuming) `closer`.
fn parse_inner(cur: &mut Cursor, closer: u8) -> Result<SphericalSegre> {
    if cur.peek() == Some(b'0') {
        let save = cur.pos;
        cur.bump();
        if cur.peek() == Some(closer) {
            return Ok(SphericalSegre::empty());
        }
        cur.pos = save;
    }
    let mut rot: Vec<usize> = Vec::new();
    let mut reals: Vec<usize> = Vec::new();
    loop {
        match cur.peek() {
            Some(b'(') => {
                cur.bump();
                let a = cur.number()?;
                cur.expect(b' ')?;
                let b = cur.number()?;
                cur.expect(b')')?;
                if a != b {
                    return Err(Error::SyntaxError {
                        position: cur.pos,
                        message: format!("rotation pair must repeat its multiplicity, got ({a} {b})"),
                    });
                }
                if a == 0 {
                    return Err(Error::SyntaxError {
                        position: cur.pos,
                        message: "zero rotation multiplicity".into(),
                    });
                }
                rot.push(a);
            }
            Some(b'0'..=b'9') => {
                let m = cur.number()?;
                if m == 0 {
                    return Err(Error::SyntaxError {
                        position: cur.pos,
                        message: "zero real multiplicity".into(),
                    });
                }
                reals.push(m);
            }
            _ => {
                return Err(Error::SyntaxError {
                    position: cur.pos,
                    message: "expected a rotation pair or a multiplicity".into(),
                })
            }
        }
        if cur.peek() == Some(b',') {
            cur.bump();
            continue;
        }
        break;
    }
    SphericalSegre::new(rot, reals)
}

/// Parses the canonical rendering back into a symbol, validating the type
/// invariants and the dimension bookkeeping against `space` and `n`.
pub fn parse(text: &str, space: Space, n: usize) -> Result<SegreSymbol> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect(b'[')?;
    let symbol = match space {
        Space::Spherical => {
            let sym = parse_inner(&mut cur, b']')?;
            SegreSymbol::Spherical { n, sym }
        }
        Space::Euclidean | Space::Hyperbolic => {
            let t = cur.bump().ok_or(Error::SyntaxError {
                position: cur.pos,
                message: "expected a type letter".into(),
            })?;
            cur.expect(b';')?;
            let r = cur.number()?;
            cur.expect(b';')?;
            let sigma = parse_inner(&mut cur, b']')?;
            match space {
                Space::Euclidean => {
                    let kind = match t {
                        b'e' => EuclideanKind::Elliptic,
                        b'h' => EuclideanKind::Hyperbolic,
                        _ => {
                            return Err(Error::SyntaxError {
                                position: 1,
                                message: format!("unknown Euclidean type `{}`", t as char),
                            })
                        }
                    };
                    SegreSymbol::Euclidean { n, sym: EuclideanSegre::new(kind, r, sigma)? }
                }
                _ => {
                    let kind = match t {
                        b'e' => HyperbolicKind::Elliptic,
                        b'p' => HyperbolicKind::Parabolic,
                        b'h' => HyperbolicKind::Hyperbolic,
                        _ => {
                            return Err(Error::SyntaxError {
                                position: 1,
                                message: format!("unknown hyperbolic type `{}`", t as char),
                            })
                        }
                    };
                    SegreSymbol::Hyperbolic { n, sym: HyperbolicSegre::new(kind, r, sigma)? }
                }
            }
        }
    };
    cur.expect(b']')?;
    if cur.pos != text.len() {
        return Err(Error::SyntaxError {
            position: cur.pos,
            message: "trailing input after symbol".into(),
        });
    }
    symbol.validate()?;
    Ok(symbol)
}
