//! Varieties of invariant totally geodesic submanifolds: decomposition
//! into disjoint unions of products of Grassmannians, dimension vectors,
//! and reconstruction of the Segre symbol from those vectors.
//!
//! The composition rules per space:
//!
//! * spherical: invariant k-subspheres correspond to invariant (k+1)-planes,
//!   and the linear variety splits across primary components into complex
//!   and real Grassmannian factors;
//! * Euclidean: a product of the linear variety of the non-unit part with
//!   the affine Grassmannian of the fixed space, the latter shifted by one
//!   degree for hyperbolic isometries (no fixed points);
//! * hyperbolic: a hyperbolic-Grassmannian factor over the temporal part
//!   (elliptic), an affine factor starting at degree two (parabolic), or a
//!   pure spatial variety shifted by one degree (boost).

use crate::error::{Error, Result};
use crate::segre::{
    enumerate_symbols, EuclideanKind, HyperbolicKind, SegreSymbol, Space, SphericalSegre,
};

/// One Grassmannian factor of a connected component.
///
/// `RealGr(k, m)` is the Grassmannian of k-planes in R^m (dimension
/// `k (m - k)`), `ComplexGr` its complex analogue (real dimension
/// `2 k (m - k)`), while `AffineGr(k, m)` and `HyperbolicGr(k, m)` are the
/// generalized Grassmannians of totally geodesic `E^k` in `E^m` and `H^k`
/// in `H^m`, both of dimension `(k + 1)(m - k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrKind {
    RealGr,
    ComplexGr,
    AffineGr,
    HyperbolicGr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianFactor {
    pub kind: GrKind,
    pub sub: usize,
    pub ambient: usize,
}

impl GrassmannianFactor {
    pub fn new(kind: GrKind, sub: usize, ambient: usize) -> Option<Self> {
        if sub > ambient {
            return None;
        }
        Some(GrassmannianFactor { kind, sub, ambient })
    }

    pub fn real_dim(&self) -> usize {
        let (k, m) = (self.sub, self.ambient);
        match self.kind {
            GrKind::RealGr => k * (m - k),
            GrKind::ComplexGr => 2 * k * (m - k),
            GrKind::AffineGr | GrKind::HyperbolicGr => (k + 1) * (m - k),
        }
    }

    pub fn is_point(&self) -> bool {
        self.real_dim() == 0
    }

    /// Compact rendering close to the usual notation: projective spaces
    /// and model spaces get their short names, points are `*`.
    pub fn render(&self) -> String {
        let (k, m) = (self.sub, self.ambient);
        match self.kind {
            GrKind::RealGr => {
                if self.is_point() {
                    "*".to_string()
                } else if k == 1 || k + 1 == m {
                    format!("P{}", m - 1)
                } else {
                    format!("Gr({k},R{m})")
                }
            }
            GrKind::ComplexGr => {
                if self.is_point() {
                    "*".to_string()
                } else if k == 1 || k + 1 == m {
                    format!("PC{}", m - 1)
                } else {
                    format!("Gr({k},C{m})")
                }
            }
            GrKind::AffineGr => {
                if self.is_point() {
                    "*".to_string()
                } else if k == 0 {
                    format!("E{m}")
                } else {
                    format!("Ga({k},{m})")
                }
            }
            GrKind::HyperbolicGr => {
                if self.is_point() {
                    "*".to_string()
                } else if k == 0 {
                    format!("H{m}")
                } else {
                    format!("Gh({k},{m})")
                }
            }
        }
    }
}

/// One connected component: a product of Grassmannian factors.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub factors: Vec<GrassmannianFactor>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.factors.iter().map(GrassmannianFactor::real_dim).sum()
    }

    /// Product rendering with point factors dropped; a product of points
    /// is a point `*`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .filter(|f| !f.is_point())
            .map(GrassmannianFactor::render)
            .collect();
        if parts.is_empty() {
            "*".to_string()
        } else {
            parts.join("x")
        }
    }

    fn product(mut self, other: &Component) -> Component {
        self.factors.extend(other.factors.iter().copied());
        self
    }
}

/// The variety of invariant submanifolds of one degree, as a disjoint
/// union of components. An empty component list is the empty variety.
#[derive(Debug, Clone, PartialEq)]
pub struct VarietyDescription {
    pub degree: usize,
    pub components: Vec<Component>,
}

impl VarietyDescription {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Component dimensions, descending (the `d_k` entry of the tables).
    pub fn dims(&self) -> Vec<i64> {
        if self.components.is_empty() {
            return vec![-1];
        }
        let mut d: Vec<i64> = self.components.iter().map(|c| c.dim() as i64).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Deterministic rendering: components sorted by dimension descending
    /// then by text, joined as a disjoint union; the empty variety is `0`.
    pub fn render(&self) -> String {
        if self.components.is_empty() {
            return "0".to_string();
        }
        let mut parts: Vec<(usize, String)> =
            self.components.iter().map(|c| (c.dim(), c.render())).collect();
        parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        parts.into_iter().map(|p| p.1).collect::<Vec<_>>().join(" u ")
    }

    fn sorted(mut self) -> Self {
        self.components.sort_by(|a, b| {
            b.dim().cmp(&a.dim()).then_with(|| a.render().cmp(&b.render()))
        });
        self
    }
}

/// Variety of invariant linear subspaces of dimension `k` for an
/// orthogonal map with the given symbol: one component per index tuple
/// `(k_1..k_s, r_1..r_t)` with `2 sum k_i + sum r_i = k`, the factors
/// complex Grassmannians on rotation components and real ones on the
/// +-1 eigenspaces.
pub fn linear_invariant_variety(sph: &SphericalSegre, k: usize) -> Result<VarietyDescription> {
    let ambient = sph.linear_dim();
    if k > ambient {
        return Err(Error::RangeError(format!(
            "degree {k} exceeds the ambient linear dimension {ambient}"
        )));
    }
    let rot = sph.rotation_mults();
    let reals = sph.real_mults();
    let mut components: Vec<Component> = Vec::new();
    // Enumerate rotation index tuples by remaining budget.
    fn rec(
        rot: &[usize],
        reals: &[usize],
        idx: usize,
        budget: usize,
        factors: &mut Vec<GrassmannianFactor>,
        out: &mut Vec<Component>,
    ) {
        if idx < rot.len() {
            let cap = rot[idx].min(budget / 2);
            for ki in 0..=cap {
                factors.push(GrassmannianFactor::new(GrKind::ComplexGr, ki, rot[idx]).unwrap());
                rec(rot, reals, idx + 1, budget - 2 * ki, factors, out);
                factors.pop();
            }
            return;
        }
        let ridx = idx - rot.len();
        if ridx < reals.len() {
            let cap = reals[ridx].min(budget);
            for ri in 0..=cap {
                factors.push(GrassmannianFactor::new(GrKind::RealGr, ri, reals[ridx]).unwrap());
                rec(rot, reals, idx + 1, budget - ri, factors, out);
                factors.pop();
            }
            return;
        }
        if budget == 0 {
            out.push(Component { factors: factors.clone() });
        }
    }
    rec(rot, reals, 0, k, &mut Vec::new(), &mut components);
    Ok(VarietyDescription { degree: k, components }.sorted())
}

/// Cartesian product of two varieties at a fixed degree.
fn product(a: &VarietyDescription, b: &VarietyDescription, degree: usize) -> VarietyDescription {
    let mut components = Vec::with_capacity(a.components.len() * b.components.len());
    for ca in &a.components {
        for cb in &b.components {
            components.push(ca.clone().product(cb));
        }
    }
    VarietyDescription { degree, components }
}

fn single_factor(degree: usize, factor: Option<GrassmannianFactor>) -> VarietyDescription {
    VarietyDescription {
        degree,
        components: factor.map(|f| Component { factors: vec![f] }).into_iter().collect(),
    }
}

/// Variety of invariant totally geodesic `M^k` submanifolds for the
/// isometry class of `symbol`, for `0 <= k <= n`.
pub fn invariant_variety(symbol: &SegreSymbol, k: usize) -> Result<VarietyDescription> {
    symbol.validate()?;
    let n = symbol.n();
    if k > n {
        return Err(Error::RangeError(format!(
            "degree {k} exceeds the space dimension {n}"
        )));
    }
    let out = match symbol {
        SegreSymbol::Spherical { sym, .. } => linear_invariant_variety(sym, k + 1)?,
        SegreSymbol::Euclidean { sym, .. } => {
            let shift = match sym.kind {
                EuclideanKind::Elliptic => 0,
                EuclideanKind::Hyperbolic => 1,
            };
            let mut components = Vec::new();
            for k2 in 0..=k {
                let k1 = k - k2;
                if k2 < shift {
                    continue;
                }
                if sym.r < shift {
                    continue;
                }
                let affine =
                    GrassmannianFactor::new(GrKind::AffineGr, k2 - shift, sym.r - shift);
                let Some(affine) = affine else { continue };
                if k1 > sym.sigma.linear_dim() {
                    continue;
                }
                let linear = linear_invariant_variety(&sym.sigma, k1)?;
                let affine_var = single_factor(k2, Some(affine));
                components.extend(product(&linear, &affine_var, k).components);
            }
            VarietyDescription { degree: k, components }.sorted()
        }
        SegreSymbol::Hyperbolic { sym, .. } => match sym.kind {
            HyperbolicKind::Elliptic => {
                let mut components = Vec::new();
                for k1 in 0..=k {
                    let k2 = k - k1;
                    let hyper = GrassmannianFactor::new(GrKind::HyperbolicGr, k1, sym.r - 1);
                    let Some(hyper) = hyper else { continue };
                    if k2 > sym.sigma.linear_dim() {
                        continue;
                    }
                    let linear = linear_invariant_variety(&sym.sigma, k2)?;
                    components.extend(product(&single_factor(k1, Some(hyper)), &linear, k).components);
                }
                VarietyDescription { degree: k, components }.sorted()
            }
            HyperbolicKind::Parabolic => {
                if k < 2 {
                    VarietyDescription { degree: k, components: vec![] }
                } else {
                    let mut components = Vec::new();
                    for k1 in 0..=(k - 2) {
                        let k2 = k - 2 - k1;
                        let affine = GrassmannianFactor::new(GrKind::AffineGr, k1, sym.r - 3);
                        let Some(affine) = affine else { continue };
                        if k2 > sym.sigma.linear_dim() {
                            continue;
                        }
                        let linear = linear_invariant_variety(&sym.sigma, k2)?;
                        components
                            .extend(product(&single_factor(k1, Some(affine)), &linear, k).components);
                    }
                    VarietyDescription { degree: k, components }.sorted()
                }
            }
            HyperbolicKind::Hyperbolic => {
                if k == 0 {
                    VarietyDescription { degree: 0, components: vec![] }
                } else {
                    let mut v = linear_invariant_variety(&sym.sigma, k - 1)?;
                    v.degree = k;
                    v
                }
            }
        },
    };
    // Component dimensions are sums of factor dimensions by construction.
    debug_assert!(out
        .components
        .iter()
        .all(|c| c.dim() == c.factors.iter().map(|f| f.real_dim()).sum::<usize>()));
    Ok(out)
}

/// Per-degree component dimensions, sorted descending, `[-1]` encoding an
/// empty variety (the tables' convention).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVector {
    pub per_degree: Vec<Vec<i64>>,
}

impl DimensionVector {
    /// Table rendering: degrees separated by `;`, component dimensions by
    /// `,`, multi-component degrees parenthesized.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .per_degree
            .iter()
            .map(|d| {
                if d.len() == 1 {
                    d[0].to_string()
                } else {
                    format!(
                        "({})",
                        d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    )
                }
            })
            .collect();
        format!("[{}]", parts.join(";"))
    }

    /// Parses `d0;d1;...` with each degree either a number or a
    /// comma-separated list, optionally parenthesized; `-1` is the empty
    /// variety. Surrounding brackets are accepted.
    pub fn parse(text: &str) -> Result<DimensionVector> {
        let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
        if trimmed.is_empty() {
            return Err(Error::SyntaxError {
                position: 0,
                message: "empty dimension vector".into(),
            });
        }
        let mut per_degree = Vec::new();
        for part in trimmed.split(';') {
            let clean = part.trim().trim_start_matches('(').trim_end_matches(')');
            let mut dims = Vec::new();
            for tok in clean.split(',') {
                let v: i64 = tok.trim().parse().map_err(|_| Error::SyntaxError {
                    position: 0,
                    message: format!("bad dimension entry `{tok}`"),
                })?;
                if v < -1 {
                    return Err(Error::SyntaxError {
                        position: 0,
                        message: format!("dimension entry {v} below the -1 sentinel"),
                    });
                }
                dims.push(v);
            }
            if dims.contains(&-1) && dims.len() > 1 {
                return Err(Error::SyntaxError {
                    position: 0,
                    message: "the -1 sentinel must be the only entry of its degree".into(),
                });
            }
            dims.sort_unstable_by(|a, b| b.cmp(a));
            per_degree.push(dims);
        }
        Ok(DimensionVector { per_degree })
    }
}

/// Dimension vector of a symbol for degrees `0..=upto`.
pub fn dimension_vector(symbol: &SegreSymbol, upto: usize) -> Result<DimensionVector> {
    let n = symbol.n();
    if upto > n {
        return Err(Error::RangeError(format!(
            "dimension vector degree {upto} exceeds the space dimension {n}"
        )));
    }
    let mut per_degree = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        per_degree.push(invariant_variety(symbol, k)?.dims());
    }
    Ok(DimensionVector { per_degree })
}

/// Number of leading degrees that determine the symbol: `k = 0..=t` with
/// `t = 1, 3, 4` for the spherical, Euclidean and hyperbolic spaces
/// (capped at `n - 1`).
pub fn determining_degrees(space: Space, n: usize) -> usize {
    let t = match space {
        Space::Spherical => 1,
        Space::Euclidean => 3,
        Space::Hyperbolic => 4,
    };
    t.min(n.saturating_sub(1))
}

/// Recovers the symbol from dimension vectors by exhaustive matching over
/// the enumerated classes; the theorems guarantee the match is unique
/// once degrees `0..=determining_degrees` are supplied.
pub fn reconstruct_symbol(space: Space, n: usize, dvecs: &DimensionVector) -> Result<SegreSymbol> {
    let required = determining_degrees(space, n) + 1;
    if dvecs.per_degree.len() < required {
        return Err(Error::RangeError(format!(
            "need dimension vectors for degrees 0..{} (got {})",
            required - 1,
            dvecs.per_degree.len()
        )));
    }
    let use_len = dvecs.per_degree.len().min(n);
    let candidates = enumerate_symbols(space, n as i64)?;
    let mut matches: Vec<SegreSymbol> = Vec::new();
    for sym in candidates {
        let dv = dimension_vector(&sym, use_len - 1)?;
        if dv.per_degree[..use_len] == dvecs.per_degree[..use_len] {
            matches.push(sym);
        }
    }
    match matches.len() {
        0 => Err(Error::NoMatch),
        1 => Ok(matches.into_iter().next().unwrap()),
        c => Err(Error::AmbiguousMatch { count: c }),
    }
}
