//! Command-line front end: element arithmetic, representations, equation solving,
//! Fibonacci elements and the verification battery, all with exact JSON output.
//!
//! Coefficients are always given in basis order `1, x, x^2, y, y^2, xy, x^2y^2, x^2y, xy^2`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use symalg::fibonacci::{self, lemmas};
use symalg::fixtures::FixtureFile;
use symalg::json::{element_from_json, matrix_to_json, ElementJson, SolutionSetJson};
use symalg::repr::{gamma_mat, lambda_mat, vec_rep};
use symalg::solver;
use symalg::verify::{self, Suite};
use symalg::{AlgebraParams, CycQ, SymbolElement};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Algebra(#[from] symalg::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use symalg::Error as E;
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Algebra(E::Parse(_) | E::ZeroParameter | E::Fixture(_) | E::Dimension(_)) => 2,
            CliError::Algebra(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "symalg", version, about = "Exact arithmetic in degree-3 symbol algebras over Q(w)")]
struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Params {
    /// Value of x^3.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: String,
    /// Value of y^3.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    b: String,
}

#[derive(Debug, Args)]
struct First {
    /// Element JSON file.
    #[arg(long = "in", conflicts_with = "coeffs")]
    input: Option<PathBuf>,
    /// Nine comma-separated scalars in basis order.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Debug, Args)]
struct Second {
    /// Second operand as an element JSON file.
    #[arg(long = "in2", conflicts_with = "coeffs2")]
    input2: Option<PathBuf>,
    /// Second operand as nine comma-separated scalars.
    #[arg(long, allow_hyphen_values = true)]
    coeffs2: Option<String>,
}

#[derive(Debug, Args)]
struct Third {
    /// Third operand as an element JSON file.
    #[arg(long = "in3", conflicts_with = "coeffs3")]
    input3: Option<PathBuf>,
    /// Third operand as nine comma-separated scalars.
    #[arg(long, allow_hyphen_values = true)]
    coeffs3: Option<String>,
}

#[derive(Debug, Args)]
struct Unary {
    #[command(flatten)]
    params: Params,
    #[command(flatten)]
    first: First,
}

#[derive(Debug, Args)]
struct Binary {
    #[command(flatten)]
    params: Params,
    #[command(flatten)]
    first: First,
    #[command(flatten)]
    second: Second,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReprKind {
    /// Matrix of left multiplication.
    Left,
    /// Matrix of right multiplication.
    Right,
    /// Coordinate vector.
    Vector,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Equation {
    /// AZ = ZA
    Commute,
    /// AZ = ZB, B from the second operand
    Intertwine,
    /// AZ - ZA = C, C from the second operand
    Commutator,
    /// AZ - ZB = C, B second and C third operand
    Sylvester,
    /// The two explicit solutions of AZ = ZB for zero-norm pure parts
    Structured,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Representations,
    Equations,
    Fibonacci,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Representations => Suite::Representations,
            SuiteArg::Equations => Suite::Equations,
            SuiteArg::Fibonacci => Suite::Fibonacci,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Product of two elements.
    Mul(Binary),
    /// Sum of two elements.
    Add(Binary),
    /// Reduced norm.
    Norm(Unary),
    /// Reduced trace.
    Trace(Unary),
    /// Coefficients of the characteristic polynomial.
    Charpoly(Unary),
    /// Adjoint z* with z z* = eta(z).
    Adjoint(Unary),
    /// Inverse; fails with exit code 1 when the norm vanishes.
    Inverse(Unary),
    /// Scale the y-degree-j block by w^(jk).
    Twist {
        #[command(flatten)]
        el: Unary,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        k: u32,
    },
    /// Left or right matrix, or coordinate vector.
    Repr {
        #[command(flatten)]
        el: Unary,
        #[arg(long, value_enum, default_value = "left")]
        kind: ReprKind,
    },
    /// Linear equations in the algebra.
    Solve {
        #[arg(long, value_enum)]
        equation: Equation,
        #[command(flatten)]
        ops: Binary,
        #[command(flatten)]
        third: Third,
    },
    /// Fibonacci elements: one element, one invertibility entry, or a full report.
    Fib {
        #[arg(long, conflicts_with = "nmax")]
        n: Option<u64>,
        /// Report norms and invertibility for 0..=nmax plus the lemma table.
        #[arg(long)]
        nmax: Option<u64>,
        /// With --n, print {n, eta, invertible} at a = b = 1 instead of the element.
        #[arg(long, requires = "n")]
        check_invertible: bool,
        #[command(flatten)]
        params: Params,
    },
    /// Run the identity battery; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 30)]
        nmax: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Printed-matrix fixture file; defaults to the built-in one.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

fn parse_params(p: &Params) -> Result<AlgebraParams> {
    Ok(AlgebraParams::new(p.a.parse()?, p.b.parse()?)?)
}

fn parse_coeffs(text: &str, params: &AlgebraParams) -> Result<SymbolElement> {
    let coeffs = text.split(',').map(|c| c.parse()).collect::<symalg::Result<Vec<CycQ>>>()?;
    Ok(SymbolElement::from_vec(params, coeffs)?)
}

fn operand(file: &Option<PathBuf>, coeffs: &Option<String>, params: &Params, which: &str) -> Result<SymbolElement> {
    match (file, coeffs) {
        (Some(path), _) => Ok(element_from_json(&fs::read_to_string(path)?)?),
        (None, Some(text)) => parse_coeffs(text, &parse_params(params)?),
        (None, None) => Err(CliError::Usage(format!("missing {which} operand (give a file or coefficients)"))),
    }
}

impl Unary {
    fn element(&self) -> Result<SymbolElement> {
        operand(&self.first.input, &self.first.coeffs, &self.params, "first")
    }
}

impl Binary {
    fn elements(&self) -> Result<(SymbolElement, SymbolElement)> {
        let u = operand(&self.first.input, &self.first.coeffs, &self.params, "first")?;
        let v = operand(&self.second.input2, &self.second.coeffs2, &self.params, "second")?;
        Ok((u, v))
    }
}

fn element_value(z: &SymbolElement) -> serde_json::Value {
    serde_json::to_value(ElementJson::from(z)).expect("strings serialize")
}

#[derive(Serialize)]
struct LemmaRow {
    id: &'static str,
    lhs: String,
    holds_as_printed: bool,
    failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    corrected_factor: Option<[String; 2]>,
    corrected_constants: Vec<serde_json::Value>,
    verified: bool,
}

fn lemma_table(nmax: u64) -> Vec<LemmaRow> {
    lemmas::lemma_suite(nmax)
        .into_iter()
        .map(|o| {
            let corr = o.correction.as_ref();
            LemmaRow {
                id: o.id,
                holds_as_printed: o.holds_as_printed(),
                failures: o.failures.len(),
                corrected_factor: corr.and_then(|c| c.left.as_ref()).map(|[u, v]| [u.to_string(), v.to_string()]),
                corrected_constants: corr
                    .map(|c| {
                        c.changes
                            .iter()
                            .map(|ch| {
                                json!({"index": ch.index, "printed": ch.printed.to_string(), "corrected": ch.corrected.to_string()})
                            })
                            .collect()
                    })
                    .unwrap_or_default(),
                verified: o.verified,
                lhs: o.lhs,
            }
        })
        .collect()
}

/// Runs one command. Returns the JSON text and whether the command's own verdict is a
/// success (only `verify` can report failure without an error).
fn execute(cmd: &Command) -> Result<(String, bool)> {
    let compact = |v: serde_json::Value| (v.to_string(), true);
    Ok(match cmd {
        Command::Mul(ops) => {
            let (u, v) = ops.elements()?;
            compact(element_value(&u.try_mul(&v)?))
        }
        Command::Add(ops) => {
            let (u, v) = ops.elements()?;
            compact(element_value(&u.try_add(&v)?))
        }
        Command::Norm(el) => compact(json!({"eta": el.element()?.reduced_norm().to_string()})),
        Command::Trace(el) => compact(json!({"tau": el.element()?.reduced_trace().to_string()})),
        Command::Charpoly(el) => {
            let c = el.element()?.char_poly();
            compact(json!({"tau": c.tau.to_string(), "pi": c.pi.to_string(), "eta": c.eta.to_string()}))
        }
        Command::Adjoint(el) => compact(element_value(&el.element()?.adjoint())),
        Command::Inverse(el) => compact(element_value(&el.element()?.inverse()?)),
        Command::Twist { el, k } => compact(element_value(&el.element()?.twist(*k))),
        Command::Repr { el, kind } => {
            let z = el.element()?;
            let text = match kind {
                ReprKind::Left => matrix_to_json(&lambda_mat(&z)),
                ReprKind::Right => matrix_to_json(&gamma_mat(&z)),
                ReprKind::Vector => {
                    let v: Vec<String> = vec_rep(&z).as_slice().iter().map(ToString::to_string).collect();
                    serde_json::to_string(&v).expect("strings serialize")
                }
            };
            (text, true)
        }
        Command::Solve { equation, ops, third } => {
            let a = operand(&ops.first.input, &ops.first.coeffs, &ops.params, "first")?;
            let second = || operand(&ops.second.input2, &ops.second.coeffs2, &ops.params, "second");
            let set = match equation {
                Equation::Commute => solver::solve_commute(&a),
                Equation::Intertwine => solver::solve_intertwine(&a, &second()?)?.solutions,
                Equation::Commutator => solver::solve_commutator(&a, &second()?)?,
                Equation::Sylvester => {
                    let c = operand(&third.input3, &third.coeffs3, &ops.params, "third")?;
                    solver::solve_sylvester(&a, &second()?, &c)?
                }
                Equation::Structured => {
                    let pair = solver::structured_solutions(&a, &second()?)?;
                    return Ok(compact(json!({"x1": element_value(&pair.x1), "x2": element_value(&pair.x2)})));
                }
            };
            (serde_json::to_string(&SolutionSetJson::from(&set)).expect("strings serialize"), true)
        }
        Command::Fib { n, nmax, check_invertible, params } => match (n, nmax) {
            (Some(n), _) if *check_invertible => {
                let e = fibonacci::scan_entry(*n);
                compact(json!({"n": e.n, "eta": e.eta.to_string(), "invertible": e.invertible}))
            }
            (Some(n), _) => compact(element_value(&fibonacci::fib_element(*n, &parse_params(params)?))),
            (None, Some(nmax)) => {
                let scan = fibonacci::invertibility_scan(*nmax);
                let entries: Vec<_> = scan
                    .entries
                    .iter()
                    .map(|e| json!({"n": e.n, "eta": e.eta.to_string(), "invertible": e.invertible}))
                    .collect();
                let report = json!({
                    "nmax": nmax,
                    "entries": entries,
                    "all_invertible": scan.all_invertible,
                    "lemmas": lemma_table((*nmax).min(30).max(1)),
                });
                (serde_json::to_string_pretty(&report).expect("values serialize"), scan.all_invertible)
            }
            (None, None) => return Err(CliError::Usage("fib needs --n or --nmax".into())),
        },
        Command::Verify { suite, nmax, samples, seed, fixtures } => {
            let fixtures = match fixtures {
                Some(path) => FixtureFile::parse(&fs::read_to_string(path)?)?,
                None => FixtureFile::builtin(),
            };
            let cfg = verify::Config { suite: (*suite).into(), nmax: *nmax, samples: *samples, seed: *seed, fixtures };
            let report = verify::run(&cfg);
            (serde_json::to_string_pretty(&report).expect("report serializes"), report.passed())
        }
    })
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            let _ = writeln!(stderr, "error: {line}");
            return 2;
        }
    };
    let outcome = execute(&cli.command).and_then(|(text, ok)| {
        match &cli.out {
            Some(path) => fs::write(path, format!("{text}\n"))?,
            None => writeln!(stdout, "{text}")?,
        }
        Ok(ok)
    });
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.to_string().replace('\n', " "));
            e.exit_code()
        }
    }
}
