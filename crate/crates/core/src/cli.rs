//! Command-line front end. Exit codes: 0 success, 1 verification or
//! consistency failure, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::ExactInteger;
use crate::engine::{self, CoeffTableND, Method, MultiIndex};
use crate::error::Error;
use crate::matrix::{build_factorization, det_c, inertia, log_concavity_of, InertiaReport, LineFamily};
use crate::oracle::{count_ranking_tables, covering_selections};
use crate::output::{to_csv, to_text, Cache, OutputDocument, Provenance, CACHE_DIR_ENV};
use crate::verify::{run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Default cap on `k` for tables, spot queries and analysis.
pub const DEFAULT_K_CAP: usize = 16;
/// Default cap on the number of grid cells for enumeration.
pub const DEFAULT_CELL_CAP: usize = 16;
/// Listing selections is only allowed for grids this small.
pub const LIST_CELL_CAP: usize = 9;

#[derive(Debug, Parser)]
#[command(
    name = "factoprod",
    version,
    about = "Exact coefficients expanding falling factorial powers of products"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Stirling,
    Recurrence,
    InclusionExclusion,
    Mobius,
    All,
}

impl MethodArg {
    fn single(self) -> Option<Method> {
        match self {
            MethodArg::Stirling => Some(Method::Stirling),
            MethodArg::Recurrence => Some(Method::Recurrence),
            MethodArg::InclusionExclusion => Some(Method::InclusionExclusion),
            MethodArg::Mobius => Some(Method::Mobius),
            MethodArg::All => None,
        }
    }

    fn name(self) -> &'static str {
        self.single().map_or("all", Method::name)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the table of coefficients for degree k.
    Table {
        k: usize,
        /// Number of variables.
        #[arg(short = 'n', long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = MethodArg::Recurrence)]
        method: MethodArg,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = CACHE_DIR_ENV)]
        cache_dir: Option<PathBuf>,
        /// Add a header line to CSV output.
        #[arg(long)]
        header: bool,
        /// Omit the provenance block from JSON output.
        #[arg(long)]
        no_provenance: bool,
        #[arg(long, default_value_t = DEFAULT_K_CAP)]
        k_cap: usize,
    },
    /// Print a single coefficient c(k; l_1, ..., l_n).
    Coeff {
        k: usize,
        #[arg(required = true, num_args = 1..)]
        index: Vec<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Stirling)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_K_CAP)]
        k_cap: usize,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        #[arg(long, default_value_t = crate::matrix::PASCAL_CHECK_CAP)]
        pascal_cap: usize,
        #[arg(long, default_value_t = DEFAULT_K_CAP)]
        k_cap: usize,
    },
    /// Determinant, inertia, factorization and log-concavity of C(k).
    Analyze {
        k: usize,
        #[arg(long, default_value_t = DEFAULT_K_CAP)]
        k_cap: usize,
    },
    /// Count ranking tables by enumeration and compare with the engine.
    Oracle {
        k: usize,
        #[arg(required = true, num_args = 1..)]
        shape: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_CELL_CAP)]
        max_cells: usize,
        /// Also print every covering selection (two-variable grids of at
        /// most nine cells).
        #[arg(long)]
        show: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroDegree | Error::EmptyIndex | Error::IndexOutOfRange { .. } | Error::Limit(_) => {
                CliError::Usage(e.to_string())
            }
            Error::Divisibility { .. } | Error::Consistency(_) | Error::Document(_) | Error::Io(_) => {
                CliError::Failure(e.to_string())
            }
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

fn check_k(k: usize, cap: usize) -> CliResult {
    if k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    if k > cap {
        return Err(CliError::Usage(format!(
            "k = {k} exceeds the cap {cap} (raise it with --k-cap)"
        )));
    }
    Ok(())
}

/// Parse `args` (including the program name) and run the command, writing
/// normal output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "failure: {msg}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Table {
            k,
            n,
            format,
            method,
            out: path,
            cache_dir,
            header,
            no_provenance,
            k_cap,
        } => {
            check_k(k, k_cap)?;
            if n == 0 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            let cache = cache_dir.map(Cache::new);
            let table = build_table(k, n, method, cache.as_ref())?;
            let rendered = match format {
                Format::Json => {
                    let provenance = (!no_provenance).then(|| Provenance::now(method.name(), method == MethodArg::All));
                    OutputDocument::new(method.name(), table, provenance).to_json()
                }
                Format::Csv => to_csv(&table, header),
                Format::Text => to_text(&table),
            };
            match path {
                Some(p) => std::fs::write(p, rendered)?,
                None => out.write_all(rendered.as_bytes())?,
            }
            Ok(())
        }
        Command::Coeff {
            k,
            index,
            method,
            k_cap,
        } => {
            check_k(k, k_cap)?;
            let idx = MultiIndex::new(index)?;
            idx.check_range(k)?;
            let value = match method.single() {
                Some(m) => engine::coefficient(k, &idx, m)?,
                None => {
                    let values: Vec<ExactInteger> = Method::ALL
                        .into_iter()
                        .map(|m| engine::coefficient(k, &idx, m))
                        .collect::<Result<_, _>>()?;
                    if values.windows(2).any(|w| w[0] != w[1]) {
                        return Err(CliError::Failure(format!("methods disagree: {values:?}")));
                    }
                    values.into_iter().next().unwrap()
                }
            };
            writeln!(out, "{value}")?;
            Ok(())
        }
        Command::Verify {
            k_max,
            n_max,
            pascal_cap,
            k_cap,
        } => {
            check_k(k_max, k_cap)?;
            if n_max == 0 || n_max > 6 {
                return Err(CliError::Usage("--n-max must lie in 1..=6".into()));
            }
            let results = run_suite(&SuiteConfig {
                k_max,
                n_max,
                pascal_cap,
            });
            for r in &results {
                writeln!(out, "{r}")?;
            }
            match results.iter().find(|r| !r.passed) {
                Some(first) => Err(CliError::Failure(format!("check `{}` failed", first.name))),
                None => {
                    writeln!(out, "all {} checks passed", results.len())?;
                    Ok(())
                }
            }
        }
        Command::Analyze { k, k_cap } => {
            check_k(k, k_cap)?;
            let (report, failed) = analyze(k)?;
            out.write_all(report.as_bytes())?;
            match failed {
                Some(claim) => Err(CliError::Failure(format!("{claim} does not hold for k = {k}"))),
                None => Ok(()),
            }
        }
        Command::Oracle {
            k,
            shape,
            max_cells,
            show,
        } => {
            if shape.contains(&0) {
                return Err(CliError::Usage("shape components must be at least 1".into()));
            }
            let cells: usize = shape.iter().product();
            if cells > max_cells {
                return Err(CliError::Usage(format!(
                    "grid has {cells} cells, over the enumeration cap {max_cells} (raise it with --max-cells)"
                )));
            }
            if k == 0 {
                return Err(CliError::Usage("k must be at least 1".into()));
            }
            let count = count_ranking_tables(k, &shape)?;
            let idx = MultiIndex::new(shape.clone())?;
            let implied = &count / idx.factorial();
            if &implied * idx.factorial() != count {
                return Err(CliError::Failure(format!("{count} is not divisible by L!")));
            }
            writeln!(out, "count {count}")?;
            writeln!(out, "c {implied}")?;
            if idx.check_range(k).is_ok() {
                let engine_value = engine::coefficient(k, &idx, Method::Stirling)?;
                if engine_value != implied {
                    return Err(CliError::Failure(format!(
                        "enumeration implies c = {implied} but the engine gives {engine_value}"
                    )));
                }
                writeln!(out, "engine agrees")?;
            } else if !implied.eq(&ExactInteger::from(0)) {
                return Err(CliError::Failure("nonzero count for a shape wider than k".into()));
            }
            if show {
                if shape.len() != 2 || cells > LIST_CELL_CAP {
                    return Err(CliError::Usage(format!(
                        "--show needs a two-variable shape with at most {LIST_CELL_CAP} cells"
                    )));
                }
                for (i, sel) in covering_selections(k, &shape)?.iter().enumerate() {
                    writeln!(out, "selection {}", i + 1)?;
                    for row in sel.chunks(shape[1]) {
                        let line: Vec<&str> = row.iter().map(|&b| if b == 1 { "1" } else { "." }).collect();
                        writeln!(out, "  {}", line.join(" "))?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn build_table(k: usize, n: usize, method: MethodArg, cache: Option<&Cache>) -> Result<CoeffTableND, CliError> {
    let Some(single) = method.single() else {
        let t = if n == 2 {
            engine::table_2d_cross_checked(k)?.into()
        } else {
            engine::table_nd_cross_checked(k, n)?
        };
        return Ok(t);
    };
    if let Some(t) = cache.and_then(|c| c.load(k, n)) {
        return Ok(t);
    }
    let t = if n == 2 {
        engine::table_2d(k, single)?.into()
    } else {
        engine::table_nd(k, n, single)?
    };
    if let Some(c) = cache {
        c.store(&t)?;
    }
    Ok(t)
}

/// Human-readable analysis of `C(k)` and the first proven claim that failed,
/// if any.
fn analyze(k: usize) -> Result<(String, Option<&'static str>), CliError> {
    let mut s = String::new();
    let mut failed = None;
    writeln!(s, "k = {k}").unwrap();

    match det_c(k) {
        Ok(d) => writeln!(
            s,
            "determinant: {} (product formula) = {} (elimination)",
            d.formula, d.elimination
        )
        .unwrap(),
        Err(e) => {
            writeln!(s, "determinant: FAILED ({e})").unwrap();
            failed.get_or_insert("determinant");
        }
    }

    let got = inertia(k)?;
    let expect = InertiaReport::expected_for(k);
    let verdict = if got == expect { "as expected" } else { "UNEXPECTED" };
    writeln!(s, "inertia: {got} ({verdict})").unwrap();
    if got != expect {
        failed.get_or_insert("inertia");
    }

    match build_factorization(k) {
        Ok(_) => writeln!(s, "factorization C = S2 Sigma S2^T: holds").unwrap(),
        Err(e) => {
            writeln!(s, "factorization C = S2 Sigma S2^T: FAILED ({e})").unwrap();
            failed.get_or_insert("factorization");
        }
    }

    if k < 2 {
        writeln!(s, "log-concavity: no sequences of length 3").unwrap();
    } else {
        let report = log_concavity_of(&engine::table_recurrence(k)?);
        writeln!(s, "log-concavity:").unwrap();
        for (family, lines) in [
            (LineFamily::AntiDiagonal, &report.anti_diagonals),
            (LineFamily::Row, &report.rows),
            (LineFamily::Diagonal, &report.diagonals),
        ] {
            let holding = lines.iter().filter(|v| v.holds()).count();
            let unimodal = lines.iter().filter(|v| v.unimodal).count();
            writeln!(
                s,
                "  {family}s: {holding}/{} log-concave, {unimodal}/{} unimodal",
                lines.len(),
                lines.len()
            )
            .unwrap();
            for v in lines.iter().filter(|v| !v.holds()) {
                let (i, triple) = v.violation.as_ref().unwrap();
                let tag = if family == LineFamily::AntiDiagonal {
                    "VIOLATION"
                } else {
                    "conjecture counterexample"
                };
                writeln!(
                    s,
                    "    {tag}: {family} {} at {:?}: {} * {} > {}^2",
                    v.label, v.positions[*i], triple[0], triple[2], triple[1]
                )
                .unwrap();
            }
        }
        if !report.failures(LineFamily::AntiDiagonal).is_empty() {
            failed.get_or_insert("anti-diagonal log-concavity");
        }
    }
    Ok((s, failed))
}
