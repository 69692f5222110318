//! Machine-readable classification tables: one record per Segre class
//! with a symbolic normal-form descriptor, the per-degree variety
//! decompositions and the dimension vector.
//!
//! Everything here is integer/symbolic, so the output is byte-identical
//! across runs and platforms.

use crate::error::Result;
use crate::segre::{
    enumerate_symbols, render, EuclideanKind, HyperbolicKind, SegreSymbol, Space, SphericalSegre,
};
use crate::varieties::{dimension_vector, invariant_variety, DimensionVector, VarietyDescription};

/// One table row.
#[derive(Debug, Clone)]
pub struct TableRecord {
    pub symbol: SegreSymbol,
    pub symbol_text: String,
    /// Symbolic normal-form descriptor, e.g. `R(th)+eI(2)` or `Th+I(1)`.
    pub descriptor: String,
    /// Varieties of invariant submanifolds for degrees `0..=n-1`.
    pub varieties: Vec<VarietyDescription>,
    pub dvec: DimensionVector,
}

fn angle_name(index: usize, total: usize) -> String {
    if total <= 1 {
        "th".to_string()
    } else {
        format!("th{}", index + 1)
    }
}

/// Descriptor atoms of a spherical symbol. With `sign_blind` the real
/// blocks print as `eI`/`-eI` (the class fixes only the multiplicities);
/// otherwise the single real block is the literal `-I` of a non-unit
/// part.
fn spherical_atoms(sym: &SphericalSegre, sign_blind: bool) -> Vec<String> {
    let mut atoms = Vec::new();
    let total = sym.num_angles();
    for (i, &pairs) in sym.rotation_mults().iter().enumerate() {
        let name = angle_name(i, total);
        if pairs == 1 {
            atoms.push(format!("R({name})"));
        } else {
            atoms.push(format!("R({name})^{pairs}"));
        }
    }
    let reals = sym.real_mults();
    if sign_blind {
        if let Some(&m) = reals.first() {
            atoms.push(format!("eI({m})"));
        }
        if reals.len() > 1 {
            atoms.push(format!("-eI({})", reals[1]));
        }
    } else if let Some(&m) = reals.first() {
        atoms.push(format!("-I({m})"));
    }
    atoms
}

/// Symbolic normal-form descriptor of a class representative.
pub fn normal_form_descriptor(symbol: &SegreSymbol) -> String {
    let atoms: Vec<String> = match symbol {
        SegreSymbol::Spherical { sym, .. } => spherical_atoms(sym, true),
        SegreSymbol::Euclidean { sym, .. } => {
            let mut a = spherical_atoms(&sym.sigma, false);
            match sym.kind {
                EuclideanKind::Elliptic => a.push(format!("I({})", sym.r + 1)),
                EuclideanKind::Hyperbolic => {
                    if sym.r > 1 {
                        a.push(format!("I({})", sym.r - 1));
                    }
                    a.push("T(a)".to_string());
                }
            }
            a
        }
        SegreSymbol::Hyperbolic { sym, .. } => {
            let mut a = Vec::new();
            match sym.kind {
                HyperbolicKind::Elliptic => {
                    a.push(format!("I({})", sym.r));
                    a.extend(spherical_atoms(&sym.sigma, false));
                }
                HyperbolicKind::Parabolic => {
                    a.push("Th".to_string());
                    if sym.r > 3 {
                        a.push(format!("I({})", sym.r - 3));
                    }
                    a.extend(spherical_atoms(&sym.sigma, false));
                }
                HyperbolicKind::Hyperbolic => {
                    a.push("Om(t)".to_string());
                    a.extend(spherical_atoms(&sym.sigma, true));
                }
            }
            a
        }
    };
    atoms.join("+")
}

/// All records of the classification table for one space and dimension,
/// in the canonical enumeration order.
pub fn table_records(space: Space, n: usize) -> Result<Vec<TableRecord>> {
    let mut out = Vec::new();
    for symbol in enumerate_symbols(space, n as i64)? {
        let varieties: Vec<VarietyDescription> =
            (0..n).map(|k| invariant_variety(&symbol, k)).collect::<Result<_>>()?;
        let dvec = dimension_vector(&symbol, n - 1)?;
        out.push(TableRecord {
            symbol_text: render(&symbol),
            descriptor: normal_form_descriptor(&symbol),
            varieties,
            dvec,
            symbol,
        });
    }
    Ok(out)
}

/// Golden-file rendering of one table: `#`-prefixed header, then one
/// tab-separated record per class: symbol, normal-form descriptor,
/// dimension vector.
pub fn golden_table(space: Space, n: usize) -> Result<String> {
    let mut lines = Vec::new();
    lines.push(format!("# {} n={}", space.name(), n));
    lines.push("# symbol\tnormal form\td-vector".to_string());
    if space == Space::Spherical && n == 3 {
        lines.push(
            "# note: for [4] the varieties at degrees 0 and 2 are P3 of dimension 3, \
             so d = [3;4;3]; some printings of this table list [2;4;2]."
                .to_string(),
        );
    }
    for rec in table_records(space, n)? {
        lines.push(format!("{}\t{}\t{}", rec.symbol_text, rec.descriptor, rec.dvec.render()));
    }
    lines.push(String::new());
    Ok(lines.join("\n"))
}
