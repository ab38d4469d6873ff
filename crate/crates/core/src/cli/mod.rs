//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and the standard streams.
//!
//! Exit codes: 0 success, 1 computation or input error, 2 invalid gluing
//! data, 64 usage error.

mod file;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

pub use file::{parse_manifold, FileError, ManifoldFile};
pub use report::{format_complex, format_f64};

use crate::exact::format_rational;
use crate::homology::homology_profile;
use crate::linking::{is_nondegenerate, linking_matrix};
use crate::partition::{
    admissible_grid, free_mode_grid_oracle, gauss_sum_oracle, z_bf, z_bf_closed_form, z_cs,
    PhaseSum,
};
use crate::splitting::{relation_report, GluingData, SplittingError};
use report::{big, digest};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable read when `--threads` is absent.
pub const THREADS_ENV: &str = "HEEGAARD_CS_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "heegaard-cs",
    version,
    about = "U(1) Chern-Simons and BF partition functions from Heegaard gluing data"
)]
struct Cli {
    /// Worker threads for partition sums (0 = rayon default).
    #[arg(long, global = true, env = THREADS_ENV)]
    threads: Option<usize>,
    /// Add wall-clock timing to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the six gluing relations.
    Validate { file: PathBuf },
    /// First Betti number, invariant factors and torsion order.
    Homology { file: PathBuf },
    /// Linking form on the Smith generators of the torsion.
    Linking { file: PathBuf },
    /// Exact partition function as a phase sum.
    Partition {
        file: PathBuf,
        #[arg(long, value_enum)]
        theory: Theory,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        #[arg(long)]
        numeric: bool,
    },
    /// Write a catalog manifold.
    Catalog {
        #[command(subcommand)]
        entry: CatalogEntry,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Connected sum of two manifolds.
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Connected sum with the genus-1 sphere.
    Stabilize {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Seeded random splitting.
    Random {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        genus: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Cross-check the partition functions against independent oracles.
    Oracle {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        /// Grid size for the free-mode oracle (default: smallest admissible size).
        #[arg(long)]
        grid: Option<u64>,
        /// Curvature label window for the free-mode oracle.
        #[arg(long, default_value_t = 2)]
        window: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogEntry {
    /// Lens space L(P, Q).
    Lens {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    S3,
    S1xs2,
}

#[derive(Args, Debug)]
struct OutArg {
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theory {
    Cs,
    Bf,
}

impl Theory {
    fn name(self) -> &'static str {
        match self {
            Theory::Cs => "cs",
            Theory::Bf => "bf",
        }
    }
}

/// A failed command: exit code plus a structured message for standard error.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
    detail: Option<Value>,
}

impl Failure {
    fn error(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_ERROR,
            kind,
            message: message.into(),
            detail: None,
        }
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        match &e {
            FileError::Invalid(SplittingError::Relations(report)) => Failure {
                code: EXIT_INVALID,
                kind: "invalid_gluing",
                message: e.to_string(),
                detail: Some(Value::Array(
                    report
                        .violations
                        .iter()
                        .map(|v| json!(v.to_string()))
                        .collect(),
                )),
            },
            FileError::Malformed(_) => Failure::error("malformed_input", e.to_string()),
            _ => Failure::error("bad_dimensions", e.to_string()),
        }
    }
}

/// Parses `argv` (program name first) and runs the command, writing the JSON
/// report to `stdout` and errors to `stderr`. Returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return emit_failure(stderr, Failure::error("thread_pool", e.to_string())),
    };
    let started = Instant::now();
    let outcome = pool.install(|| execute(&cli.command));
    match outcome {
        Ok((code, mut body)) => {
            body.insert("argv".into(), json!(echo));
            if cli.timing {
                body.insert(
                    "elapsed_ms".into(),
                    json!(started.elapsed().as_secs_f64() * 1e3),
                );
            }
            let mut text =
                serde_json::to_string_pretty(&Value::Object(body)).expect("report serializes");
            text.push('\n');
            if stdout.write_all(text.as_bytes()).is_err() {
                return EXIT_ERROR;
            }
            code
        }
        Err(failure) => emit_failure(stderr, failure),
    }
}

fn emit_failure(stderr: &mut dyn Write, f: Failure) -> i32 {
    let mut error = Map::new();
    error.insert("kind".into(), json!(f.kind));
    error.insert("message".into(), json!(f.message));
    if let Some(detail) = f.detail {
        error.insert("violations".into(), detail);
    }
    let _ = writeln!(stderr, "{}", json!({ "error": error }));
    f.code
}

type Outcome = Result<(i32, Map<String, Value>), Failure>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::error("io", format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(Vec<u8>, GluingData), Failure> {
    let bytes = read(path)?;
    let (_, g) = parse_manifold(&bytes)?;
    Ok((bytes, g))
}

fn report(command: &str, inputs: &[&[u8]]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert(
        "input_digests".into(),
        json!(inputs.iter().map(|b| digest(b)).collect::<Vec<_>>()),
    );
    m
}

fn execute(command: &Command) -> Outcome {
    match command {
        Command::Validate { file } => validate_cmd(file),
        Command::Homology { file } => {
            let (bytes, g) = load(file)?;
            let mut out = report("homology", &[&bytes]);
            out.insert("genus".into(), json!(g.genus()));
            out.insert("homology".into(), homology_json(&g));
            Ok((EXIT_OK, out))
        }
        Command::Linking { file } => {
            let (bytes, g) = load(file)?;
            let lm = linking_matrix(&g);
            let mut out = report("linking", &[&bytes]);
            let generators: Vec<Vec<String>> = lm
                .generators
                .iter()
                .map(|t| t.theta.iter().map(format_rational).collect())
                .collect();
            let gram: Vec<Vec<String>> = lm
                .gram
                .iter()
                .map(|row| row.iter().map(|p| p.to_string()).collect())
                .collect();
            out.insert("generators".into(), json!(generators));
            out.insert("orders".into(), json!(lm.orders));
            out.insert("gram".into(), json!(gram));
            out.insert("symmetric".into(), json!(lm.is_symmetric()));
            out.insert("nondegenerate".into(), json!(is_nondegenerate(&g)));
            Ok((EXIT_OK, out))
        }
        Command::Partition {
            file,
            theory,
            level,
            numeric,
        } => {
            let (bytes, g) = load(file)?;
            let sum = match theory {
                Theory::Cs => z_cs(&g, *level),
                Theory::Bf => z_bf(&g, *level),
            };
            let mut out = report("partition", &[&bytes]);
            out.insert("theory".into(), json!(theory.name()));
            out.insert("level".into(), json!(level));
            out.insert("phases".into(), phases_json(&sum));
            if *numeric {
                out.insert("numeric".into(), format_complex(sum.eval_numeric()));
            }
            Ok((EXIT_OK, out))
        }
        Command::Catalog { entry, out } => {
            let (g, name) = match entry {
                CatalogEntry::Lens { p, q } => {
                    let g = GluingData::lens(*p, *q)
                        .map_err(|e| Failure::error("catalog", e.to_string()))?;
                    (g, format!("L({p},{q})"))
                }
                CatalogEntry::S3 => (GluingData::sphere(), "S3".to_string()),
                CatalogEntry::S1xs2 => (GluingData::s1_x_s2(), "S1xS2".to_string()),
            };
            write_manifold("catalog", &[], &g, Some(name), out.as_deref())
        }
        Command::Sum { first, second, out } => {
            let (a_bytes, a) = load(first)?;
            let (b_bytes, b) = load(second)?;
            write_manifold(
                "sum",
                &[&a_bytes, &b_bytes],
                &a.connected_sum(&b),
                None,
                out.out.as_deref(),
            )
        }
        Command::Stabilize { file, out } => {
            let (bytes, g) = load(file)?;
            write_manifold(
                "stabilize",
                &[&bytes],
                &g.stabilize(),
                None,
                out.out.as_deref(),
            )
        }
        Command::Random {
            genus,
            seed,
            length,
            out,
        } => {
            let g = GluingData::random_splitting(*genus as usize, *seed, *length)
                .map_err(|e| Failure::error("random", e.to_string()))?;
            let name = format!("random(genus={genus},seed={seed},length={length})");
            write_manifold("random", &[], &g, Some(name), out.out.as_deref())
        }
        Command::Oracle {
            file,
            level,
            grid,
            window,
        } => oracle_cmd(file, *level, *grid, *window),
    }
}

fn validate_cmd(path: &Path) -> Outcome {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|e| Failure::error("malformed_input", e.to_string()))?;
    let file: ManifoldFile =
        serde_json::from_str(text).map_err(|e| Failure::error("malformed_input", e.to_string()))?;
    let [r, p, s, q] = file.blocks()?;
    let relations = relation_report(&r, &p, &s, &q)
        .map_err(|e| Failure::error("bad_dimensions", e.to_string()))?;
    let m = crate::exact::IntMatrix::block_2x2(&r, &p, &s, &q).expect("square blocks");
    let det = m.determinant().expect("square");
    let sign = if file.genus.is_even() {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };

    let mut out = report("validate", &[&bytes]);
    out.insert("genus".into(), json!(file.genus));
    out.insert("valid".into(), json!(relations.is_valid()));
    out.insert(
        "violations".into(),
        json!(relations
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()),
    );
    out.insert("determinant".into(), big(&det));
    out.insert("determinant_is_sign_of_genus".into(), json!(det == sign));
    let code = if relations.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVALID
    };
    Ok((code, out))
}

fn homology_json(g: &GluingData) -> Value {
    let h = homology_profile(g);
    json!({
        "b1": h.b1,
        "invariant_factors": h.invariant_factors.iter().map(big).collect::<Vec<_>>(),
        "torsion_order": big(&h.torsion_order),
    })
}

/// `[[phase, multiplicity], ...]` in ascending phase order.
fn phases_json(sum: &PhaseSum) -> Value {
    Value::Array(
        sum.terms()
            .iter()
            .map(|(phase, mult)| json!([phase.to_string(), mult]))
            .collect(),
    )
}

fn write_manifold(
    command: &str,
    inputs: &[&[u8]],
    g: &GluingData,
    name: Option<String>,
    out: Option<&Path>,
) -> Outcome {
    let file = ManifoldFile::from_gluing(g, name)
        .map_err(|e| Failure::error("overflow", e.to_string()))?;
    let text = file.to_canonical_string();
    let mut body = report(command, inputs);
    match out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::error("io", format!("{}: {e}", path.display())))?;
            body.insert("output".into(), json!(path.display().to_string()));
            body.insert("output_digest".into(), json!(digest(text.as_bytes())));
        }
        None => {
            body.insert(
                "manifold".into(),
                serde_json::to_value(&file).expect("plain data"),
            );
        }
    }
    Ok((EXIT_OK, body))
}

const ORACLE_TOLERANCE: f64 = 1e-6;

fn oracle_cmd(path: &Path, level: u64, grid: Option<u64>, window: u64) -> Outcome {
    let (bytes, g) = load(path)?;
    let cs = z_cs(&g, level).eval_numeric();
    let bf = z_bf(&g, level).eval_numeric();
    let mut checks = Map::new();
    let mut worst = 0.0f64;
    let mut record = |name: &str, value: Value, deviation: f64| {
        worst = worst.max(deviation);
        checks.insert(
            name.into(),
            json!({ "oracle": value, "deviation": format_f64(deviation), "agree": deviation <= ORACLE_TOLERANCE }),
        );
    };

    if g.genus() == 1 && !g.p()[(0, 0)].is_zero() {
        let p = &g.p()[(0, 0)];
        let q = &g.q()[(0, 0)] * p.signum();
        match (p.abs().to_u64(), q.to_i64()) {
            (Some(p), Some(q)) => {
                let value = gauss_sum_oracle(p, q, level);
                record("gauss_sum", format_complex(value), (value - cs).norm());
            }
            _ => return Err(Failure::error("overflow", "lens parameters exceed 64 bits")),
        }
    }

    match z_bf_closed_form(&g, level) {
        Ok(value) => {
            let expected = value.to_f64().unwrap_or(f64::INFINITY);
            record("bf_closed_form", big(&value), (bf - expected).norm());
        }
        Err(e) => return Err(Failure::error("oracle", e.to_string())),
    }

    let grid_n = grid.unwrap_or_else(|| admissible_grid(&g, level, window));
    let value = free_mode_grid_oracle(&g, level, grid_n, window)
        .map_err(|e| Failure::error("oracle", e.to_string()))?;
    record("free_mode_grid", format_complex(value), (value - cs).norm());

    let mut out = report("oracle", &[&bytes]);
    out.insert("level".into(), json!(level));
    out.insert("grid".into(), json!(grid_n));
    out.insert("window".into(), json!(window));
    out.insert("z_cs".into(), format_complex(cs));
    out.insert("z_bf".into(), format_complex(bf));
    out.insert("checks".into(), Value::Object(checks));
    out.insert("max_abs_deviation".into(), format_f64(worst));
    out.insert("all_agree".into(), json!(worst <= ORACLE_TOLERANCE));
    Ok((EXIT_OK, out))
}
