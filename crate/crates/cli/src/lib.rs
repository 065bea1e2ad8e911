//! Batch front end for `sgb-core`: reads a JSON system and runs one
//! subcommand. [`run`] returns the process exit code.

pub mod system;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sgb_core::rational::format_rational;
use sgb_core::ring::homogenize_at;
use sgb_core::{
    default_order, mixed_volume, newton_polytope, normalize_translations, weighted_minkowski_lattice_points,
    IntegerPolytope, LatticePoint, LaurentPolynomial, MonomialOrder, MultiDegree, PolytopeFamily, SystemContext,
    TorusSolver,
};
use thiserror::Error;

use system::{system_of, OrderSpec, SystemFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("cannot read {0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] sgb_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_assumption_violation() => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "sgb", version, about = "Gröbner bases over polytope semigroup algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gröbner basis at a multidegree, with a stability verdict.
    Gb(Options),
    /// Gröbner basis of the saturated ideal of a square system.
    Solve(Options),
    /// Multiplication matrix of one variable.
    Mulmat(Options),
    /// Mixed volume of the Newton polytopes.
    Mixvol(Options),
    /// Lattice points of a weighted Minkowski sum.
    Points(Options),
    /// Instrumentation counters of the Gröbner basis run.
    Stats(Options),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct Options {
    /// JSON system file.
    #[arg(long)]
    input: PathBuf,
    /// Multidegree, comma separated.
    #[arg(long, value_delimiter = ',')]
    degree: Option<Vec<u32>>,
    /// `lex-default`, `lex`, `grevlex`, or `matrix FILE`.
    #[arg(long, num_args = 1..=2, value_names = ["ORDER", "FILE"])]
    order: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Variable name for `mulmat`.
    #[arg(long)]
    var: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum OrderChoice {
    Default,
    Grevlex,
    Matrix(Vec<Vec<i64>>),
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output. Diagnostics go to `err`.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(_) => 1,
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<String, CliError> {
    match command {
        Command::Gb(o) => gb(&o),
        Command::Solve(o) => solve(&o),
        Command::Mulmat(o) => mulmat(&o),
        Command::Mixvol(o) => mixvol(&o),
        Command::Points(o) => points(&o),
        Command::Stats(o) => stats(&o),
    }
}

fn load(o: &Options) -> Result<SystemFile, CliError> {
    let text = std::fs::read_to_string(&o.input).map_err(|e| CliError::Io(format!("{}: {e}", o.input.display())))?;
    SystemFile::parse(&text)
}

fn order_choice(o: &Options, file: &SystemFile) -> Result<OrderChoice, CliError> {
    if let Some(flag) = &o.order {
        return match flag.iter().map(String::as_str).collect::<Vec<_>>().as_slice() {
            ["lex-default"] | ["lex"] => Ok(OrderChoice::Default),
            ["grevlex"] => Ok(OrderChoice::Grevlex),
            ["matrix", path] => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
                let rows: Vec<Vec<i64>> = serde_json::from_str(&text).map_err(|e| CliError::Json(e.to_string()))?;
                Ok(OrderChoice::Matrix(rows))
            }
            ["matrix"] => Err(CliError::Usage("--order matrix needs a FILE".into())),
            other => Err(CliError::Usage(format!("unknown order {:?}", other.join(" ")))),
        };
    }
    match &file.order {
        None => Ok(OrderChoice::Default),
        Some(OrderSpec::Named(name)) => match name.as_str() {
            "lex-default" | "lex" => Ok(OrderChoice::Default),
            "grevlex" => Ok(OrderChoice::Grevlex),
            other => Err(CliError::Input(format!("unknown order {other:?}"))),
        },
        Some(OrderSpec::Matrix { matrix }) => Ok(OrderChoice::Matrix(matrix.clone())),
    }
}

fn exponent_forms(choice: &OrderChoice, dim: usize) -> Option<Vec<Vec<i64>>> {
    match choice {
        OrderChoice::Default => None,
        OrderChoice::Grevlex => Some(MonomialOrder::grevlex(dim).exponent_forms().to_vec()),
        OrderChoice::Matrix(rows) => Some(rows.clone()),
    }
}

fn ambient_order(choice: &OrderChoice, family: &PolytopeFamily) -> Result<MonomialOrder, CliError> {
    Ok(match exponent_forms(choice, family.dim()) {
        None => default_order(family)?,
        Some(rows) => MonomialOrder::from_weight_matrix(rows, family)?,
    })
}

/// Order on `K[x]` used as the FGLM target.
fn target_order(choice: &OrderChoice, n: usize) -> Result<MonomialOrder, CliError> {
    Ok(match choice {
        OrderChoice::Default => MonomialOrder::lex(n),
        OrderChoice::Grevlex => MonomialOrder::grevlex(n),
        OrderChoice::Matrix(rows) => {
            let units: Vec<LatticePoint> = (0..n).map(|i| LatticePoint::unit(n, i)).collect();
            MonomialOrder::new(Vec::new(), rows.clone(), &units)?
        }
    })
}

fn requested_degree(o: &Options, file: &SystemFile) -> Option<Vec<u32>> {
    o.degree.clone().or_else(|| file.degree.clone())
}

fn compositions(total: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Family and per-polynomial degrees.
///
/// Explicit `polytopes` in the file win. Otherwise a requested degree with
/// one more entry than there are polynomials selects the family
/// `(simplex, NP(f_1), ...)`; anything else selects `(NP(f_1), ...)`. In the
/// latter two cases `f_i` sits in its own slot with a unit degree.
fn family_of(
    file: &SystemFile,
    polys: &[LaurentPolynomial],
    degree: Option<&[u32]>,
) -> Result<(PolytopeFamily, Vec<MultiDegree>), CliError> {
    let n = file.variables.len();
    let k = polys.len();
    if let Some(explicit) = &file.polytopes {
        let polytopes = explicit
            .iter()
            .map(|gens| IntegerPolytope::new(gens.iter().map(|g| LatticePoint::new(g.clone()))))
            .collect::<Result<Vec<_>, _>>()?;
        let family = normalize_translations(polytopes)?;
        let degrees = match &file.degrees {
            Some(ds) => {
                if ds.len() != k || ds.iter().any(|d| d.len() != family.len()) {
                    return Err(CliError::Dimension(format!(
                        "expected {k} degrees with {} entries each",
                        family.len()
                    )));
                }
                ds.iter().cloned().map(MultiDegree::new).collect()
            }
            None => {
                let order = default_order(&family)?;
                polys
                    .iter()
                    .enumerate()
                    .map(|(i, p)| {
                        (0..=32)
                            .flat_map(|t| compositions(t, family.len()))
                            .map(MultiDegree::new)
                            .find(|d| homogenize_at(p, d, &family, &order).is_ok())
                            .ok_or_else(|| {
                                CliError::Input(format!("polynomial {} does not fit the given polytopes", i + 1))
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
        };
        return Ok((family, degrees));
    }
    let with_simplex = degree.is_some_and(|d| d.len() == k + 1);
    let mut polytopes = Vec::new();
    if with_simplex {
        polytopes.push(IntegerPolytope::standard_simplex(n));
    }
    for p in polys {
        polytopes.push(newton_polytope(p.support().cloned())?);
    }
    let family = normalize_translations(polytopes)?;
    let offset = usize::from(with_simplex);
    let degrees = (0..k).map(|i| MultiDegree::unit(family.len(), i + offset)).collect();
    Ok((family, degrees))
}

fn context(o: &Options, file: &SystemFile) -> Result<(SystemContext, MultiDegree), CliError> {
    let polys = file.laurent_polynomials()?;
    let degree = requested_degree(o, file);
    let (family, degrees) = family_of(file, &polys, degree.as_deref())?;
    let order = ambient_order(&order_choice(o, file)?, &family)?;
    let gens = polys
        .iter()
        .zip(&degrees)
        .map(|(p, d)| homogenize_at(p, d, &family, &order))
        .collect::<Result<Vec<_>, _>>()?;
    let ctx = SystemContext::new(family, order, gens)?;
    let d = match degree {
        Some(d) if d.len() != ctx.family().len() => {
            return Err(CliError::Dimension(format!(
                "degree {d:?} has {} entries for a family of {} polytopes",
                d.len(),
                ctx.family().len()
            )))
        }
        Some(d) => MultiDegree::new(d),
        None => ctx.degree_sum(),
    };
    Ok((ctx, d))
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn coords(points: &[LatticePoint]) -> Vec<Vec<i64>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

#[derive(Serialize)]
struct GbOutput {
    degree: Vec<u32>,
    next_degree: Vec<u32>,
    stable: bool,
    translations: Vec<Vec<i64>>,
    leading: Vec<Vec<i64>>,
    element_degrees: Vec<Option<Vec<u32>>>,
    basis: SystemFile,
}

fn gb(o: &Options) -> Result<String, CliError> {
    let file = load(o)?;
    let (mut ctx, d) = context(o, &file)?;
    let report = ctx.gb_stability_check(&d)?;
    let basis = &report.basis;
    let element_degrees = basis
        .elements()
        .iter()
        .map(|e| ctx.minimal_degree(e, 32).map(|d| d.map(|d| d.as_slice().to_vec())))
        .collect::<Result<Vec<_>, _>>()?;
    let out = GbOutput {
        degree: d.as_slice().to_vec(),
        next_degree: report.next_degree.as_slice().to_vec(),
        stable: report.stable,
        translations: coords(ctx.family().translations()),
        leading: coords(basis.leading_exponents()),
        element_degrees,
        basis: system_of(&file.variables, basis.elements(), basis.order()),
    };
    Ok(match o.output {
        Format::Json => render(&out),
        Format::Text => {
            let mut s = format!(
                "degree {:?}: {}\n",
                out.degree,
                if out.stable { "stable" } else { "increase degree" }
            );
            for e in basis.elements() {
                s.push_str(&e.to_infix(&file.variables, basis.order()));
                s.push('\n');
            }
            s
        }
    })
}

#[derive(Serialize)]
struct SolveOutput {
    l_size: usize,
    mixed_volume: u64,
    warnings: Vec<String>,
    basis: SystemFile,
}

fn solver_for(o: &Options, file: &SystemFile, ambient: bool) -> Result<TorusSolver, CliError> {
    let polys = file.laurent_polynomials()?;
    let forms = if ambient {
        exponent_forms(&order_choice(o, file)?, file.variables.len())
    } else {
        None
    };
    Ok(TorusSolver::with_exponent_forms(&polys, forms)?)
}

fn solve(o: &Options) -> Result<String, CliError> {
    let file = load(o)?;
    let target = target_order(&order_choice(o, &file)?, file.variables.len())?;
    let mut solver = solver_for(o, &file, false)?;
    let sol = solver.zero_dim_gb(&target)?;
    let out = SolveOutput {
        l_size: sol.l_size,
        mixed_volume: sol.mixed_volume,
        warnings: sol.warnings.clone(),
        basis: system_of(&file.variables, sol.basis.elements(), &target),
    };
    Ok(match o.output {
        Format::Json => render(&out),
        Format::Text => {
            let mut s = String::new();
            for e in sol.basis.elements() {
                s.push_str(&e.to_infix(&file.variables, &target));
                s.push('\n');
            }
            s.push_str(&format!("basis size {}, mixed volume {}\n", out.l_size, out.mixed_volume));
            for w in &out.warnings {
                s.push_str(&format!("warning: {w}\n"));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct MulmatOutput {
    variable: String,
    basis: Vec<Vec<i64>>,
    matrix: Vec<Vec<String>>,
}

fn mulmat(o: &Options) -> Result<String, CliError> {
    let file = load(o)?;
    let name = o
        .var
        .as_deref()
        .ok_or_else(|| CliError::Usage("mulmat needs --var NAME".into()))?;
    let var = file.variable_index(name)?;
    let mut solver = solver_for(o, &file, true)?;
    let map = solver.multiplication_matrix(var)?;
    let out = MulmatOutput {
        variable: name.to_string(),
        basis: coords(&solver.basis().monomials),
        matrix: map
            .matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect(),
    };
    Ok(match o.output {
        Format::Json => render(&out),
        Format::Text => out.matrix.iter().map(|r| r.join(" ") + "\n").collect(),
    })
}

fn mixvol(o: &Options) -> Result<String, CliError> {
    let file = load(o)?;
    let polytopes = file
        .laurent_polynomials()?
        .iter()
        .map(|p| newton_polytope(p.support().cloned()))
        .collect::<Result<Vec<_>, _>>()?;
    let mv = mixed_volume(&polytopes)?;
    Ok(match o.output {
        Format::Json => render(&serde_json::json!({ "mixed_volume": mv })),
        Format::Text => format!("{mv}\n"),
    })
}

#[derive(Serialize)]
struct PointsOutput {
    degree: Vec<u32>,
    count: usize,
    points: Vec<Vec<i64>>,
}

fn points(o: &Options) -> Result<String, CliError> {
    let file = load(o)?;
    let degree = requested_degree(o, &file).ok_or_else(|| CliError::Usage("points needs --degree".into()))?;
    let polys = file.laurent_polynomials()?;
    let (family, _) = family_of(&file, &polys, Some(&degree))?;
    if degree.len() != family.len() {
        return Err(CliError::Dimension(format!(
            "degree {degree:?} has {} entries for a family of {} polytopes",
            degree.len(),
            family.len()
        )));
    }
    let pts = weighted_minkowski_lattice_points(&family, &MultiDegree::new(degree.clone()))?;
    let out = PointsOutput {
        degree,
        count: pts.len(),
        points: coords(&pts),
    };
    Ok(match o.output {
        Format::Json => render(&out),
        Format::Text => {
            let mut s = format!("{}\n", out.count);
            for p in &pts {
                s.push_str(&format!("{p:?}\n"));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct LatticeCount {
    degree: Vec<u32>,
    points: usize,
}

#[derive(Serialize)]
struct StatsOutput {
    degree: Vec<u32>,
    rows_built: usize,
    zero_reductions: usize,
    eliminations: usize,
    cache_hits: usize,
    lattice_counts: Vec<LatticeCount>,
    matrices: Vec<sgb_core::MatrixRecord>,
}

fn stats(o: &Options) -> Result<String, CliError> {
    let file = load(o)?;
    let (mut ctx, d) = context(o, &file)?;
    ctx.compute_gb(&d)?;
    let st = ctx.stats();
    let out = StatsOutput {
        degree: d.as_slice().to_vec(),
        rows_built: st.rows_built,
        zero_reductions: st.zero_reductions,
        eliminations: st.eliminations,
        cache_hits: st.cache_hits,
        lattice_counts: st
            .lattice_counts
            .iter()
            .map(|(d, &n)| LatticeCount {
                degree: d.as_slice().to_vec(),
                points: n,
            })
            .collect(),
        matrices: st.matrices.clone(),
    };
    Ok(match o.output {
        Format::Json => render(&out),
        Format::Text => {
            let mut s = format!(
                "rows built {}, zero reductions {}, eliminations {}, cache hits {}\n",
                out.rows_built, out.zero_reductions, out.eliminations, out.cache_hits
            );
            for c in &out.lattice_counts {
                s.push_str(&format!("P({:?}) = {}\n", c.degree, c.points));
            }
            for m in &out.matrices {
                let rank = m.rank.map_or_else(|| "-".to_string(), |r| r.to_string());
                s.push_str(&format!(
                    "{:?} k={} d={:?}: {}x{} rank {rank}\n",
                    m.kind, m.generators, m.degree, m.rows, m.cols
                ));
            }
            s
        }
    })
}
