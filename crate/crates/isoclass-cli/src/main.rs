//! Command-line interface for the isometry classifier.
//!
//! Matrices are supplied as a JSON document
//! `{"space": "spherical|euclidean|hyperbolic", "n": 2, "matrix": [[...]]}`:
//! the matrix is (n+1) x (n+1) in all three cases (the orthogonal matrix,
//! the affine matrix with last row (0,...,0,1), or the Lorentz matrix for
//! the form diag(-1, 1, ..., 1)).
//!
//! Exit codes: 0 success, 2 input errors, 3 not-in-group, 4
//! tolerance-diagnosed ambiguity or numerical failure.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use isoclass::classify::{classify_matrix, Report};
use isoclass::error::Error;
use isoclass::forms::Block;
use isoclass::numkit::{Matrix, Tolerance};
use isoclass::segre::{
    count_classes, enumerate_symbols, parse as parse_symbol, render, ClassCount, Space,
};
use isoclass::tables::golden_table;
use isoclass::varieties::{
    dimension_vector, invariant_variety, reconstruct_symbol, DimensionVector,
};

#[derive(Parser)]
#[command(
    name = "isoclass",
    about = "Classify isometries of spherical, Euclidean and hyperbolic space forms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Spherical => Space::Spherical,
            SpaceArg::Euclidean => Space::Euclidean,
            SpaceArg::Hyperbolic => Space::Hyperbolic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputMode {
    Human,
    Json,
}

#[derive(Args)]
struct TolArgs {
    /// Relative rank threshold (default 1e-12).
    #[arg(long = "tol")]
    rank_tol: Option<f64>,
    /// Rotation-angle clustering tolerance in radians (default 1e-7).
    #[arg(long = "angle-tol")]
    angle_tol: Option<f64>,
    /// Residual tolerance for group membership and conjugation
    /// (default 1e-9).
    #[arg(long = "residual-tol")]
    residual_tol: Option<f64>,
}

impl TolArgs {
    fn build(&self) -> Result<Tolerance, Error> {
        let d = Tolerance::default();
        Tolerance::new(
            self.rank_tol.unwrap_or(d.rank_tol),
            self.angle_tol.unwrap_or(d.angle_tol),
            self.residual_tol.unwrap_or(d.residual_tol),
        )
    }
}

#[derive(Args)]
struct MatrixInput {
    /// Path to the JSON input document (`-` for stdin, the default).
    #[arg(long, short = 'i')]
    input: Option<PathBuf>,
    /// Inline JSON input document.
    #[arg(long)]
    inline: Option<String>,
    /// Space (may also come from the input document).
    #[arg(long, value_enum)]
    space: Option<SpaceArg>,
    /// Space dimension n (may also come from the input document).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a matrix: Segre symbol, type, isotropy and orbit
    /// dimensions, normal form, conjugator and parameters.
    Classify {
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long, value_enum, default_value = "human")]
        output: OutputMode,
    },
    /// Compute the normal form and conjugator only.
    NormalForm {
        #[command(flatten)]
        input: MatrixInput,
        #[command(flatten)]
        tol: TolArgs,
        #[arg(long, value_enum, default_value = "human")]
        output: OutputMode,
    },
    /// Count Segre classes (total and per type).
    Count {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "human")]
        output: OutputMode,
    },
    /// Enumerate every Segre symbol of a space and dimension.
    Enumerate {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "human")]
        output: OutputMode,
    },
    /// Decompose the varieties of invariant totally geodesic submanifolds
    /// of a Segre class into products of Grassmannians.
    Varieties {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: usize,
        /// Segre symbol, e.g. "[e;1;2]" or "[(1 1),2]".
        #[arg(long)]
        symbol: String,
        /// Highest degree to report (default n-1).
        #[arg(long)]
        upto: Option<usize>,
        #[arg(long, value_enum, default_value = "human")]
        output: OutputMode,
    },
    /// Recover the Segre symbol from dimension vectors.
    Reconstruct {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long)]
        n: usize,
        /// Dimension vectors: degrees separated by `;`, component
        /// dimensions by `,`, -1 for an empty variety, e.g. "-1;0;1".
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, value_enum, default_value = "human")]
        output: OutputMode,
    },
    /// Regenerate the classification tables as golden TSV files.
    Tables {
        /// Restrict to one space (default: all three).
        #[arg(long, value_enum)]
        space: Option<SpaceArg>,
        /// Restrict to one dimension (default: 1, 2 and 3).
        #[arg(long)]
        n: Option<usize>,
        /// Write one file per table into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> ExitCode {
    match e {
        Error::SyntaxError { .. }
        | Error::InvariantViolation(_)
        | Error::RangeError(_)
        | Error::UnsupportedDimension { .. }
        | Error::NoMatch => ExitCode::from(2),
        Error::NotInGroup { .. } | Error::NotProper { .. } => ExitCode::from(3),
        Error::DegenerateSpan { .. }
        | Error::AmbiguousMatch { .. }
        | Error::ConvergenceFailure { .. }
        | Error::InternalInconsistency(_) => ExitCode::from(4),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Classify { input, tol, output } => {
            let (space, n, matrix) = read_matrix_input(&input)?;
            let tol = tol.build()?;
            let report = classify_matrix(space, n, &matrix, &tol)?;
            let ambiguous = !report.conjugation.diagnostics.is_empty();
            match output {
                OutputMode::Human => print_report_human(&report, true),
                OutputMode::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report_to_json(&report)).unwrap()
                ),
            }
            Ok(if ambiguous { ExitCode::from(4) } else { ExitCode::SUCCESS })
        }
        Command::NormalForm { input, tol, output } => {
            let (space, n, matrix) = read_matrix_input(&input)?;
            let tol = tol.build()?;
            let report = classify_matrix(space, n, &matrix, &tol)?;
            let ambiguous = !report.conjugation.diagnostics.is_empty();
            match output {
                OutputMode::Human => print_report_human(&report, false),
                OutputMode::Json => {
                    let c = &report.conjugation;
                    let doc = json!({
                        "space": report.space.name(),
                        "n": report.n,
                        "blocks": blocks_to_json(&c.form.blocks),
                        "improper": c.form.improper,
                        "normal_form": matrix_to_json(&c.form_matrix),
                        "conjugator": matrix_to_json(&c.conjugator),
                        "residual": c.residual,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(if ambiguous { ExitCode::from(4) } else { ExitCode::SUCCESS })
        }
        Command::Count { space, n, output } => {
            let count = count_classes(space.into(), n)?;
            match output {
                OutputMode::Human => match count {
                    ClassCount::Spherical { total } => println!("total {total}"),
                    ClassCount::Euclidean { total, elliptic, hyperbolic } => {
                        println!("total {total} (elliptic {elliptic}, hyperbolic {hyperbolic})")
                    }
                    ClassCount::Hyperbolic { total, elliptic, parabolic, hyperbolic } => println!(
                        "total {total} (elliptic {elliptic}, parabolic {parabolic}, hyperbolic {hyperbolic})"
                    ),
                },
                OutputMode::Json => {
                    let doc = match count {
                        ClassCount::Spherical { total } => {
                            json!({"space": "spherical", "n": n, "total": total})
                        }
                        ClassCount::Euclidean { total, elliptic, hyperbolic } => json!({
                            "space": "euclidean", "n": n, "total": total,
                            "elliptic": elliptic, "hyperbolic": hyperbolic
                        }),
                        ClassCount::Hyperbolic { total, elliptic, parabolic, hyperbolic } => json!({
                            "space": "hyperbolic", "n": n, "total": total,
                            "elliptic": elliptic, "parabolic": parabolic, "hyperbolic": hyperbolic
                        }),
                    };
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { space, n, output } => {
            let syms = enumerate_symbols(space.into(), n)?;
            match output {
                OutputMode::Human => {
                    for s in &syms {
                        println!("{}", render(s));
                    }
                }
                OutputMode::Json => {
                    let list: Vec<String> = syms.iter().map(render).collect();
                    let doc = json!({
                        "space": Space::from(space).name(),
                        "n": n,
                        "count": list.len(),
                        "symbols": list,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Varieties { space, n, symbol, upto, output } => {
            let space: Space = space.into();
            let sym = parse_symbol(&symbol, space, n)?;
            let upto = upto.unwrap_or(n.saturating_sub(1));
            let dvec = dimension_vector(&sym, upto)?;
            match output {
                OutputMode::Human => {
                    for k in 0..=upto {
                        let v = invariant_variety(&sym, k)?;
                        println!("Gamma({k}) = {}", v.render());
                    }
                    println!("d = {}", dvec.render());
                }
                OutputMode::Json => {
                    let mut degrees = Vec::new();
                    for k in 0..=upto {
                        let v = invariant_variety(&sym, k)?;
                        let comps: Vec<Value> = v
                            .components
                            .iter()
                            .map(|c| {
                                json!({
                                    "dim": c.dim(),
                                    "render": c.render(),
                                    "factors": c.factors.iter().map(|f| json!({
                                        "kind": format!("{:?}", f.kind),
                                        "sub": f.sub,
                                        "ambient": f.ambient,
                                        "dim": f.real_dim(),
                                    })).collect::<Vec<_>>(),
                                })
                            })
                            .collect();
                        degrees.push(json!({
                            "k": k,
                            "components": comps,
                            "dims": v.dims(),
                        }));
                    }
                    let doc = json!({
                        "space": space.name(),
                        "n": n,
                        "symbol": render(&sym),
                        "varieties": degrees,
                        "d": dvec.render(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reconstruct { space, n, d, output } => {
            let dvec = DimensionVector::parse(&d)?;
            let sym = reconstruct_symbol(space.into(), n, &dvec)?;
            match output {
                OutputMode::Human => println!("{}", render(&sym)),
                OutputMode::Json => {
                    let doc = json!({
                        "space": Space::from(space).name(),
                        "n": n,
                        "d": dvec.render(),
                        "symbol": render(&sym),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables { space, n, out } => {
            let spaces: Vec<Space> = match space {
                Some(s) => vec![s.into()],
                None => vec![Space::Spherical, Space::Euclidean, Space::Hyperbolic],
            };
            let dims: Vec<usize> = match n {
                Some(k) => vec![k],
                None => vec![1, 2, 3],
            };
            for space in &spaces {
                for &n in &dims {
                    let text = golden_table(*space, n)?;
                    match &out {
                        Some(dir) => {
                            fs::create_dir_all(dir).map_err(io_error)?;
                            let path = dir.join(format!("table_{}_{}.tsv", space.name(), n));
                            fs::write(&path, &text).map_err(io_error)?;
                            println!("wrote {}", path.display());
                        }
                        None => print!("{text}"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::InvariantViolation(format!("i/o failure: {e}"))
}

/// Reads and validates the matrix input document, merging the envelope's
/// `space`/`n` fields with the command-line flags; a disagreement between
/// the two is an error.
fn read_matrix_input(input: &MatrixInput) -> Result<(Space, usize, Matrix), Error> {
    let text = match (&input.inline, &input.input) {
        (Some(inline), None) => inline.clone(),
        (None, Some(path)) => {
            if path.as_os_str() == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).map_err(io_error)?;
                buf
            } else {
                fs::read_to_string(path).map_err(io_error)?
            }
        }
        (None, None) => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(io_error)?;
            buf
        }
        (Some(_), Some(_)) => {
            return Err(Error::InvariantViolation(
                "give either --input or --inline, not both".into(),
            ))
        }
    };
    let doc: Value = serde_json::from_str(&text).map_err(|e| Error::SyntaxError {
        position: e.column(),
        message: format!("invalid JSON: {e}"),
    })?;

    let env_space = match doc.get("space") {
        Some(Value::String(s)) => Some(s.parse::<Space>()?),
        None => None,
        Some(other) => {
            return Err(Error::SyntaxError {
                position: 0,
                message: format!("`space` must be a string, got {other}"),
            })
        }
    };
    let env_n = match doc.get("n") {
        Some(Value::Number(num)) => Some(num.as_u64().ok_or(Error::SyntaxError {
            position: 0,
            message: "`n` must be a nonnegative integer".into(),
        })? as usize),
        None => None,
        Some(other) => {
            return Err(Error::SyntaxError {
                position: 0,
                message: format!("`n` must be a number, got {other}"),
            })
        }
    };
    let flag_space: Option<Space> = input.space.map(Into::into);
    let space = match (env_space, flag_space) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::InvariantViolation(format!(
                "space mismatch: document says {}, flag says {}",
                a.name(),
                b.name()
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::InvariantViolation(
                "no space given (use --space or the document's `space` field)".into(),
            ))
        }
    };
    let n = match (env_n, input.n) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::InvariantViolation(format!(
                "dimension mismatch: document says n = {a}, flag says n = {b}"
            )))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(Error::InvariantViolation(
                "no dimension given (use --n or the document's `n` field)".into(),
            ))
        }
    };

    let rows_json = doc.get("matrix").and_then(Value::as_array).ok_or(Error::SyntaxError {
        position: 0,
        message: "`matrix` must be an array of rows".into(),
    })?;
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(rows_json.len());
    for row in rows_json {
        let row = row.as_array().ok_or(Error::SyntaxError {
            position: 0,
            message: "matrix rows must be arrays".into(),
        })?;
        let mut out = Vec::with_capacity(row.len());
        for x in row {
            out.push(x.as_f64().ok_or(Error::SyntaxError {
                position: 0,
                message: "matrix entries must be numbers".into(),
            })?);
        }
        rows.push(out);
    }
    let matrix = Matrix::from_rows(&rows)?;
    Ok((space, n, matrix))
}

fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|r| Value::Array(r.into_iter().map(|x| json!(x)).collect()))
            .collect(),
    )
}

fn blocks_to_json(blocks: &[Block]) -> Value {
    Value::Array(
        blocks
            .iter()
            .map(|b| match b {
                Block::Rot { angle, pairs } => {
                    json!({"kind": "rot", "angle": angle, "pairs": pairs})
                }
                Block::PosId(m) => json!({"kind": "pos_id", "size": m}),
                Block::NegId(m) => json!({"kind": "neg_id", "size": m}),
                Block::Trans(a) => json!({"kind": "trans", "length": a}),
                Block::Theta => json!({"kind": "theta"}),
                Block::Boost(t) => json!({"kind": "boost", "t": t}),
            })
            .collect(),
    )
}

fn report_to_json(report: &Report) -> Value {
    let c = &report.conjugation;
    let angles: Vec<Value> = c
        .form
        .rotation_angles()
        .into_iter()
        .map(|(angle, pairs)| json!({"angle": angle, "pairs": pairs}))
        .collect();
    let mut doc = json!({
        "space": report.space.name(),
        "n": report.n,
        "type": report.kind,
        "segre": render(&report.symbol),
        "isotropy_dim": report.isotropy.isotropy_dim,
        "orbit_dim": report.isotropy.orbit_dim,
        "group_dim": report.isotropy.group_dim,
        "normal_form": {
            "blocks": blocks_to_json(&c.form.blocks),
            "improper": c.form.improper,
            "matrix": matrix_to_json(&c.form_matrix),
        },
        "conjugator": matrix_to_json(&c.conjugator),
        "residual": c.residual,
        "parameters": {
            "angles": angles,
            "translation_length": c.form.translation_length(),
            "boost": c.form.boost_parameter(),
        },
        "warnings": c.diagnostics.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    });
    if let Some(proper) = report.proper {
        doc["proper"] = json!(proper);
    }
    doc
}

fn print_matrix_human(m: &Matrix) {
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>12.6}")).collect();
        println!("    [{}]", cells.join(", "));
    }
}

fn print_report_human(report: &Report, full: bool) {
    let c = &report.conjugation;
    if full {
        println!("space: {} (n = {})", report.space.name(), report.n);
        println!("segre: {}", render(&report.symbol));
        println!("type: {}", report.kind);
        if let Some(proper) = report.proper {
            println!("proper: {proper}");
        }
        println!(
            "isotropy dim: {}   orbit dim: {}   group dim: {}",
            report.isotropy.isotropy_dim, report.isotropy.orbit_dim, report.isotropy.group_dim
        );
        let angles = c.form.rotation_angles();
        if !angles.is_empty() {
            let list: Vec<String> = angles
                .iter()
                .map(|(a, p)| if *p > 1 { format!("{a:.6} (x{p})") } else { format!("{a:.6}") })
                .collect();
            println!("angles: {}", list.join(", "));
        }
        if let Some(a) = c.form.translation_length() {
            println!("translation length: {a:.6}");
        }
        if let Some(t) = c.form.boost_parameter() {
            println!("boost: {t:.6}");
        }
    }
    println!(
        "normal form ({} blocks{}):",
        c.form.blocks.len(),
        if c.form.improper { ", improper: matrix is minus the block diagonal" } else { "" }
    );
    print_matrix_human(&c.form_matrix);
    println!("conjugator:");
    print_matrix_human(&c.conjugator);
    println!("residual: {:.3e}", c.residual);
    for w in &c.diagnostics {
        println!("warning: {w}");
    }
}
