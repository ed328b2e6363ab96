//! Front end for `liepi`: argument parsing, file loading, reports and exit
//! codes. [`run_command`] does all the work and returns the text to print, so
//! tests can drive it without spawning a process.

pub mod files;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use liepi::codim::{
    cocharacter_multiplicities, codimension, growth_report, hook_dim, RankMode, DEFAULT_BUDGET,
};
use liepi::exponent::{certify_dprime, structural_exponent, Verdict};
use liepi::linalg::format_rational;
use liepi::structure::{
    h_simple_grouping, levi_subalgebra, quotient_algebra, simple_decomposition, solvable_radical,
};
use liepi::{ActionAlgebra, Error, ErrorKind, LieAlgebra, Subspace};
use serde::Serialize;

use files::{matrix_rows, subspace_rows, InputError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "liepi",
    version,
    about = "PI exponents and codimensions of finite-dimensional Lie algebras with an action"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Algebra file.
    pub algebra: PathBuf,
    /// Action file; the trivial action when omitted.
    #[arg(long)]
    pub action: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Engine {
    /// Cap on matrix entries of the evaluation problem.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Exact rational ranks throughout.
    #[arg(long, conflicts_with = "two_prime")]
    pub exact: bool,
    /// Ranks modulo two primes, exact recomputation on disagreement (default).
    #[arg(long)]
    pub two_prime: bool,
}

impl Engine {
    fn mode(&self) -> RankMode {
        if self.exact {
            RankMode::Exact
        } else {
            RankMode::TwoPrime
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra file.
    Check {
        algebra: PathBuf,
        /// Print the algebra back in canonical form.
        #[arg(long)]
        emit: bool,
    },
    /// Solvable radical and nilpotency degree.
    Radical { algebra: PathBuf },
    /// Levi subalgebra and section (nilpotent radical only).
    Levi { algebra: PathBuf },
    /// Simple components of the semisimple quotient.
    Simples {
        #[command(flatten)]
        input: Input,
    },
    /// Structural exponent.
    Piexp {
        #[command(flatten)]
        input: Input,
    },
    /// Check an ideal certificate; the value is a certified lower-bound witness for d'.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Codimension c_n.
    Codim {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        engine: Engine,
    },
    /// Cocharacter multiplicities in degree n.
    Cochar {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Codimensions up to nmax next to the structural exponent.
    Growth {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        engine: Engine,
    },
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Core(e) => match e.kind() {
                ErrorKind::Input => EXIT_INPUT,
                ErrorKind::Refusal | ErrorKind::Internal => EXIT_REFUSAL,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(e) => format!("error: {e}"),
            Failure::Usage(m) => format!("usage error: {m}"),
            Failure::Core(e) if e.kind() == ErrorKind::Input => format!("error: {e}"),
            Failure::Core(e) if e.kind() == ErrorKind::Internal => format!("internal error: {e}"),
            Failure::Core(e) => format!("refused: {e}"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run_command(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run_command(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code(),
            stdout: String::new(),
            stderr: f.message() + "\n",
        },
    }
}

fn load(input: &Input) -> Result<(LieAlgebra, ActionAlgebra), Failure> {
    let l = files::parse_algebra_file(&input.algebra)?;
    let a = load_action(input.action.as_deref(), &l)?;
    Ok((l, a))
}

fn load_action(path: Option<&Path>, l: &LieAlgebra) -> Result<ActionAlgebra, Failure> {
    Ok(match path {
        Some(p) => files::parse_action_file(p, l)?,
        None => ActionAlgebra::trivial(l.dim()),
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn positive(n: usize, flag: &str) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage(format!("{flag} must be at least 1")));
    }
    Ok(())
}

fn dispatch(cfg: &RunConfig) -> Result<String, Failure> {
    let json = cfg.json;
    match &cfg.command {
        Command::Check { algebra, emit } => {
            let l = files::parse_algebra_file(algebra)?;
            if *emit {
                return Ok(to_json(&files::algebra_to_file(&l)));
            }
            Ok(if json {
                to_json(&CheckReport {
                    name: l.name(),
                    dim: l.dim(),
                    valid: true,
                })
            } else {
                format!("{}: dimension {}, valid Lie algebra\n", l.name(), l.dim())
            })
        }
        Command::Radical { algebra } => radical(&files::parse_algebra_file(algebra)?, json),
        Command::Levi { algebra } => levi(&files::parse_algebra_file(algebra)?, json),
        Command::Simples { input } => {
            let (l, a) = load(input)?;
            simples(&l, &a, json)
        }
        Command::Piexp { input } => {
            let (l, a) = load(input)?;
            piexp(&l, &a, json)
        }
        Command::Certify { input, cert } => {
            let (l, a) = load(input)?;
            let c = files::parse_certificate_file(cert, &l)?;
            let v = certify_dprime(&l, &a, &c)?;
            Ok(if json {
                to_json(&CertifyReport {
                    value: v.value,
                    q: v.q,
                    annihilator: subspace_rows(&v.annihilator),
                })
            } else {
                format!(
                    "certified lower-bound witness for d': {}\nchain lengths q = {:?}\nannihilator dimension {}\n",
                    v.value,
                    v.q,
                    v.annihilator.dim()
                )
            })
        }
        Command::Codim { input, n, engine } => {
            positive(*n, "--n")?;
            let (l, a) = load(input)?;
            let r = codimension(&l, &a, *n, engine.mode(), engine.budget)?;
            Ok(if json {
                to_json(&CodimReport {
                    n: r.n,
                    codim: r.value,
                    mode: mode_name(r.mode),
                    action_dim: r.action_basis_size,
                    primes: r.primes.map(|p| p.to_vec()),
                    exact_fallback: r.exact_fallback,
                })
            } else {
                format!("{}\n", r.value)
            })
        }
        Command::Cochar { input, n, budget } => {
            positive(*n, "--n")?;
            let (l, a) = load(input)?;
            let r = cocharacter_multiplicities(&l, &a, *n, *budget)?;
            Ok(if json {
                to_json(&CocharReport {
                    n: r.n,
                    codim: r.codim,
                    multiplicities: r
                        .multiplicities
                        .iter()
                        .map(|(p, m)| Multiplicity {
                            lambda: p.parts().to_vec(),
                            m: *m,
                        })
                        .collect(),
                })
            } else {
                let rows: Vec<[String; 3]> = r
                    .multiplicities
                    .iter()
                    .map(|(p, m)| [p.to_string(), m.to_string(), hook_dim(p).to_string()])
                    .collect();
                let mut out = table(&["lambda", "m", "dim"], &rows);
                let _ = writeln!(out, "codim c_{} = {}", r.n, r.codim);
                out
            })
        }
        Command::Growth {
            input,
            nmax,
            engine,
        } => {
            positive(*nmax, "--nmax")?;
            let (l, a) = load(input)?;
            let rows = growth_report(&l, &a, *nmax, engine.mode(), engine.budget)?;
            Ok(if json {
                let rows: Vec<GrowthJson> = rows
                    .iter()
                    .map(|r| GrowthJson {
                        n: r.n,
                        codim: r.codim,
                        root: format!("{:.4}", r.root),
                        d: r.d,
                    })
                    .collect();
                to_json(&rows)
            } else {
                let d = rows
                    .first()
                    .and_then(|r| r.d)
                    .map_or("-".to_string(), |d| d.to_string());
                let cells: Vec<[String; 4]> = rows
                    .iter()
                    .map(|r| {
                        [
                            r.n.to_string(),
                            r.codim.to_string(),
                            format!("{:.4}", r.root),
                            d.clone(),
                        ]
                    })
                    .collect();
                table(&["n", "c_n", "c_n^(1/n)", "d"], &cells)
            })
        }
    }
}

fn mode_name(m: RankMode) -> &'static str {
    match m {
        RankMode::Exact => "exact",
        RankMode::TwoPrime => "two-prime",
    }
}

fn table<const N: usize>(head: &[&str; N], rows: &[[String; N]]) -> String {
    let mut width = head.map(str::len);
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(head.to_vec());
    for r in rows {
        out += &line(r.iter().map(String::as_str).collect());
    }
    out
}

fn format_subspace(l: &LieAlgebra, u: &Subspace) -> String {
    if u.is_zero() {
        return "0".into();
    }
    let vs: Vec<String> = u
        .basis_vectors()
        .map(|v| format_element(l.labels(), v))
        .collect();
    format!("span{{{}}}", vs.join(", "))
}

fn format_element(labels: &[String], v: &[liepi::Rational]) -> String {
    let mut out = String::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_integer() && c.to_integer() == 0.into() {
            continue;
        }
        let s = format_rational(c);
        let (sign, mag) = match s.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", s),
        };
        if out.is_empty() {
            out.push_str(if sign == "-" { "-" } else { "" });
        } else {
            let _ = write!(out, " {sign} ");
        }
        if mag != "1" {
            let _ = write!(out, "{mag} ");
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn radical(l: &LieAlgebra, json: bool) -> Result<String, Failure> {
    let r = solvable_radical(l)?;
    if json {
        return Ok(to_json(&RadicalReport {
            dim: r.radical.dim(),
            basis: subspace_rows(&r.radical),
            nilpotent: r.is_nilpotent,
            p: r.nilpotency,
            lower_central_dims: r.lower_central.iter().map(Subspace::dim).collect(),
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "radical: dimension {}", r.radical.dim());
    let _ = writeln!(out, "basis: {}", format_subspace(l, &r.radical));
    match r.nilpotency {
        Some(p) => {
            let _ = writeln!(out, "nilpotent: yes, p = {p}");
        }
        None => {
            let _ = writeln!(out, "nilpotent: no");
        }
    }
    Ok(out)
}

fn levi(l: &LieAlgebra, json: bool) -> Result<String, Failure> {
    let r = solvable_radical(l)?;
    let d = levi_subalgebra(l, &r)?;
    if json {
        return Ok(to_json(&LeviReport {
            dim: d.levi.dim(),
            levi: subspace_rows(&d.levi),
            kappa: matrix_rows(&d.kappa),
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "Levi subalgebra: dimension {}", d.levi.dim());
    let _ = writeln!(out, "basis: {}", format_subspace(l, &d.levi));
    for (c, label) in d.quotient.labels().iter().enumerate() {
        let _ = writeln!(
            out,
            "kappa({label}) = {}",
            format_element(l.labels(), &d.kappa.column(c))
        );
    }
    Ok(out)
}

fn simples(l: &LieAlgebra, a: &ActionAlgebra, json: bool) -> Result<String, Failure> {
    let r = solvable_radical(l)?;
    let q = quotient_algebra(l, &r.radical)?;
    let dec = simple_decomposition(&q.algebra)?;
    let induced = a
        .induced(&q.subquotient)
        .ok_or(Error::RadicalNotInvariant)?;
    let groups = h_simple_grouping(&dec, &induced)?;
    if json {
        return Ok(to_json(&SimplesReport {
            quotient_dim: q.algebra.dim(),
            components: dec
                .components
                .iter()
                .zip(&dec.centroid_dims)
                .map(|(c, &centroid)| ComponentJson {
                    dim: c.dim(),
                    basis: subspace_rows(c),
                    centroid_dim: centroid,
                })
                .collect(),
            groups: groups.clone(),
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "semisimple quotient: dimension {}", q.algebra.dim());
    for (k, c) in dec.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {k}: dimension {} {}",
            c.dim(),
            format_subspace(&q.algebra, c)
        );
    }
    let gs: Vec<String> = groups.iter().map(|g| format!("{g:?}")).collect();
    let _ = writeln!(out, "H-simple groups: {}", gs.join(" "));
    Ok(out)
}

fn piexp(l: &LieAlgebra, a: &ActionAlgebra, json: bool) -> Result<String, Failure> {
    let r = structural_exponent(l, a)?;
    let nilpotent = r.verdict == Verdict::Nilpotent;
    if json {
        return Ok(to_json(&PiexpReport {
            d: r.d,
            verdict: if nilpotent { "nilpotent" } else { "exponent" },
            witness_components: r.witness_components.clone(),
            witness_q: r.witness_q.clone(),
            component_dims: r.components.iter().map(|c| c.dim).collect(),
            p: r.nilpotency,
            warnings: r.warnings.clone(),
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "d = {}", r.d);
    if nilpotent {
        let _ = writeln!(
            out,
            "verdict: nilpotent (nilpotency degree {})",
            r.nilpotency
        );
    } else {
        let _ = writeln!(out, "witness components: {:?}", r.witness_components);
        let _ = writeln!(out, "witness q: {:?}", r.witness_q);
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    Ok(out)
}

#[derive(Serialize)]
struct CheckReport<'a> {
    name: &'a str,
    dim: usize,
    valid: bool,
}

#[derive(Serialize)]
struct RadicalReport {
    dim: usize,
    basis: Vec<Vec<String>>,
    nilpotent: bool,
    p: Option<usize>,
    lower_central_dims: Vec<usize>,
}

#[derive(Serialize)]
struct LeviReport {
    dim: usize,
    levi: Vec<Vec<String>>,
    kappa: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct ComponentJson {
    dim: usize,
    basis: Vec<Vec<String>>,
    centroid_dim: usize,
}

#[derive(Serialize)]
struct SimplesReport {
    quotient_dim: usize,
    components: Vec<ComponentJson>,
    groups: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct PiexpReport {
    d: usize,
    verdict: &'static str,
    witness_components: Vec<usize>,
    witness_q: Vec<usize>,
    component_dims: Vec<usize>,
    p: usize,
    warnings: Vec<String>,
}

#[derive(Serialize)]
struct CertifyReport {
    value: usize,
    q: Vec<usize>,
    annihilator: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct CodimReport {
    n: usize,
    codim: usize,
    mode: &'static str,
    action_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    primes: Option<Vec<u64>>,
    exact_fallback: bool,
}

#[derive(Serialize)]
struct Multiplicity {
    lambda: Vec<usize>,
    m: u64,
}

#[derive(Serialize)]
struct CocharReport {
    n: usize,
    codim: usize,
    multiplicities: Vec<Multiplicity>,
}

#[derive(Serialize)]
struct GrowthJson {
    n: usize,
    codim: usize,
    root: String,
    d: Option<usize>,
}
