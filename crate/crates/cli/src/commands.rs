use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use snk1_core::algebra::{ideal_level, to_split};
use snk1_core::battery::invariant_batteries;
use snk1_core::group::{
    as_matrix, factor_theta_elementary, gen_mu, gen_theta, identity_suite, CheckOutcome, CornerMatrix,
};
use snk1_core::index::{full, IndexSet};
use snk1_core::k1::{bdet, decompose, deg_nij, det_i, is_elementary_product, k1_report, K1Case};
use snk1_core::laurent::{laurent_reduce, LaurentUnit};
use snk1_core::{Error, QCornerMatrix, QElement, Q};

use crate::matrix::{matrix_to_json, parse_matrix};
use crate::parse::{parse_expr, ReadError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "snk1", version, about = "Exact computations in S_n, GL(S_n) and K1")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression.
    Eval {
        #[arg(long = "n")]
        n: Option<usize>,
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        #[arg(long = "n")]
        n: Option<usize>,
        a: String,
        b: String,
    },
    /// The expression in the split basis.
    Split {
        #[arg(long = "n")]
        n: Option<usize>,
        expr: String,
    },
    /// Reduction to the Laurent ring of the given components (all by default).
    Laurent {
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        drop: Option<Vec<usize>>,
        expr: String,
    },
    /// Largest s with the expression in a_{n,s}.
    Level {
        #[arg(long = "n")]
        n: Option<usize>,
        expr: String,
    },
    /// det of the Laurent reduction of a unit (expression or matrix JSON).
    Bdet {
        #[arg(long = "n")]
        n: Option<usize>,
        input: String,
    },
    /// det_I of a unit u with u - 1 in a_{n,|I|}.
    #[command(name = "detI")]
    DetI {
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        expr: String,
    },
    /// deg_{n,I,j}: the x_j-degree of det_I.
    Deg {
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(long)]
        j: usize,
        expr: String,
    },
    /// theta_ij(J).
    Theta {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        i: usize,
        j: usize,
    },
    /// mu_I(lambda).
    Mu {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Theta, mu and elementary parts of a congruence unit.
    Decompose {
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        support: Vec<usize>,
        input: String,
    },
    /// Whether a congruence unit is a product of p-elementary matrices.
    IsElementary {
        #[arg(long = "n")]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        support: Vec<usize>,
        input: String,
    },
    /// Elementary word for diag(theta_ij(J), 1) over S_{n-1}.
    FactorTheta {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        i: usize,
        j: usize,
    },
    /// Structure of K1(S_{n-1}) or of K1(S_{n-1}, p).
    K1 {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        support: Option<Vec<usize>>,
    },
    /// Replays every identity and invariant battery.
    VerifyPaper,
}

/// A failed command: exit code and message.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimensionMismatch { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidIndexSet(_)
            | Error::ZeroScalar
            | Error::UnknownVariable(_)
            | Error::InvalidArgument(_) => EXIT_USER,
            _ => EXIT_COMPUTATION,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<ReadError> for CliError {
    fn from(e: ReadError) -> Self {
        match e {
            ReadError::Syntax(p) => user(p.to_string()),
            ReadError::Core(c) => c.into(),
        }
    }
}

fn user(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USER, message: message.into() }
}

type Out = Result<(String, Value, i32), CliError>;

fn ok(text: String, value: Value) -> Out {
    Ok((text, value, EXIT_OK))
}

fn index_set(items: &[usize]) -> IndexSet {
    items.iter().copied().collect()
}

/// Parses an expression in `S_n`, inferring `n` from the expression and
/// `at_least` when not given.
fn read(text: &str, n: Option<usize>, at_least: usize) -> Result<QElement, CliError> {
    let e = parse_expr(text).map_err(|p| user(p.to_string()))?;
    let n = n.unwrap_or_else(|| e.max_index().max(at_least).max(1));
    Ok(e.eval(n)?)
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn read_matrix(text: &str) -> Result<QCornerMatrix, CliError> {
    parse_matrix(text).map_err(|e| user(e.to_string()))
}

/// A unit given as matrix JSON or as an expression in `S_n`.
fn read_unit(text: &str, n: Option<usize>, at_least: usize) -> Result<QElement, CliError> {
    if looks_like_json(text) {
        Ok(read_matrix(text)?.as_element())
    } else {
        read(text, n, at_least)
    }
}

fn unit_json(u: &LaurentUnit<Q>) -> Value {
    let expo: serde_json::Map<String, Value> =
        u.vars.iter().zip(&u.expo).map(|(v, e)| (format!("x{v}"), json!(e))).collect();
    json!({"unit": u.to_string(), "coeff": u.coeff.to_string(), "exponents": expo})
}

fn parse_scalar(text: &str) -> Result<Q, CliError> {
    let e = parse_expr(text).map_err(|p| user(p.to_string()))?;
    let v = e.eval(1)?;
    v.as_scalar().ok_or_else(|| user(format!("{text} is not a scalar")))
}

fn outcome_json(c: &CheckOutcome) -> Value {
    json!({
        "id": c.id,
        "equation_label": c.label,
        "status": if c.passed { "pass" } else { "fail" },
        "detail": c.detail,
    })
}

fn execute(command: Command) -> Out {
    match command {
        Command::Eval { n, expr } => {
            let a = read(&expr, n, 1)?;
            ok(a.to_string(), json!({"element": a.to_string()}))
        }
        Command::Mul { n, a, b } => {
            let n = match n {
                Some(n) => n,
                None => {
                    let m = |t: &str| parse_expr(t).map(|e| e.max_index()).map_err(|p| user(p.to_string()));
                    m(&a)?.max(m(&b)?).max(1)
                }
            };
            let p = read(&a, Some(n), 1)?.nf_mul(&read(&b, Some(n), 1)?)?;
            ok(p.to_string(), json!({"element": p.to_string()}))
        }
        Command::Split { n, expr } => {
            let s = to_split(&read(&expr, n, 1)?);
            ok(s.to_string(), json!({"split": s.to_string()}))
        }
        Command::Laurent { n, drop, expr } => {
            let a = read(&expr, n, drop.iter().flatten().copied().max().unwrap_or(1))?;
            let drop = drop.map(|d| index_set(&d)).unwrap_or_else(|| full(a.n()));
            let l = laurent_reduce(&a, &drop)?;
            ok(l.to_string(), json!({"laurent": l.to_string()}))
        }
        Command::Level { n, expr } => {
            let k = ideal_level(&read(&expr, n, 1)?);
            ok(k.to_string(), json!({"level": k}))
        }
        Command::Bdet { n, input } => {
            let m = if looks_like_json(&input) {
                read_matrix(&input)?
            } else {
                as_matrix(&read(&input, n, 2)?)?
            };
            let d = bdet(&m)?;
            ok(d.to_string(), unit_json(&d))
        }
        Command::DetI { n, set, expr } => {
            let at_least = set.iter().copied().max().unwrap_or(1) + 1;
            let d = det_i(&read(&expr, n, at_least)?, &index_set(&set))?;
            ok(d.to_string(), unit_json(&d))
        }
        Command::Deg { n, set, j, expr } => {
            let at_least = set.iter().copied().max().unwrap_or(1).max(j);
            let d = deg_nij(&read(&expr, n, at_least)?, &index_set(&set), j)?;
            ok(d.to_string(), json!({"degree": d}))
        }
        Command::Theta { n, set, i, j } => {
            let t = gen_theta::<Q>(n, i, j, &index_set(&set))?;
            ok(t.to_string(), json!({"element": t.to_string()}))
        }
        Command::Mu { n, set, lambda } => {
            let m = gen_mu(n, &index_set(&set), &parse_scalar(&lambda)?)?;
            ok(m.to_string(), json!({"element": m.to_string()}))
        }
        Command::Decompose { n, support, input } => {
            let at_least = support.iter().copied().max().unwrap_or(1) + 1;
            let a = read_unit(&input, n, at_least)?;
            let r = decompose(&a, &index_set(&support), a.n())?;
            let mut lines: Vec<String> = Vec::new();
            for ((i, j), k) in &r.n_ij {
                lines.push(format!("n_{i}{j} = {k}"));
            }
            for (k, l) in &r.lambda_k {
                lines.push(format!("lambda_{k} = {l}"));
            }
            lines.push(format!("residual = {}", r.residual));
            lines.push(format!("elementary = {}", r.is_elementary));
            let value = json!({
                "n_ij": r.n_ij.iter().map(|((i, j), k)| json!({"i": i, "j": j, "value": k})).collect::<Vec<_>>(),
                "lambda": r.lambda_k.iter().map(|(k, l)| json!({"k": k, "value": l.to_string()})).collect::<Vec<_>>(),
                "residual": r.residual.to_string(),
                "is_elementary": r.is_elementary,
            });
            ok(lines.join("\n"), value)
        }
        Command::IsElementary { n, support, input } => {
            let at_least = support.iter().copied().max().unwrap_or(1) + 1;
            let a = read_unit(&input, n, at_least)?;
            let b = is_elementary_product(&a, &index_set(&support), a.n())?;
            ok(b.to_string(), json!({"is_elementary": b}))
        }
        Command::FactorTheta { n, set, i, j } => {
            let j_set = index_set(&set);
            let w = factor_theta_elementary::<Q>(n, i, j, &j_set)?;
            let target = CornerMatrix::diag(n, &[gen_theta(n - 1, i, j, &j_set)?])?;
            let passed = w.is_elementary() && w.eval()? == target;
            let text = format!("{w}\nletters: {}\ncheck: {}", w.len(), if passed { "pass" } else { "FAIL" });
            let value = json!({
                "word": w.to_string(),
                "letters": w.len(),
                "target": matrix_to_json(&target),
                "check": passed,
            });
            Ok((text, value, if passed { EXIT_OK } else { EXIT_VERIFICATION }))
        }
        Command::K1 { n, support } => {
            let support = support.map(|s| index_set(&s));
            let r = k1_report::<Q>(n, support.as_ref())?;
            let value = json!({
                "case": match r.case { K1Case::Full => "full", K1Case::Congruence(_) => "congruence" },
                "support": support.map(|s| s.into_iter().collect::<Vec<_>>()),
                "structure": r.structure,
                "generator_count": r.generator_count,
                "generators": r.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "mu_families": r.mu_families.iter().map(|s| s.iter().copied().collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            ok(r.to_string().trim_end().to_string(), value)
        }
        Command::VerifyPaper => {
            let mut checks = identity_suite();
            checks.extend(invariant_batteries());
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut lines: Vec<String> = checks
                .iter()
                .map(|c| {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    let detail = if c.detail.is_empty() { String::new() } else { format!(" ({})", c.detail) };
                    format!("{status}  {:<34} {}{detail}", c.id, c.label)
                })
                .collect();
            lines.push(format!("{} checks, {failed} failed", checks.len()));
            let value = Value::Array(checks.iter().map(outcome_json).collect());
            Ok((lines.join("\n"), value, if failed == 0 { EXIT_OK } else { EXIT_VERIFICATION }))
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code; normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, value, code)) => {
            let _ = if cli.json { writeln!(out, "{value}") } else { writeln!(out, "{text}") };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
