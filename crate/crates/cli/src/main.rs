//! `spinforge` — compute the exact products and matrices, test group
//! membership, sample group/manifold elements, audit the electromagnetic
//! field matrices, and run the identity verification suite.
//!
//! Exit codes: 0 = requested checks passed (or the command is non-checking),
//! 1 = at least one check failed or a domain operation refused, 2 = usage or
//! parse error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use spinforge::error::Error;
use spinforge::iso;
use spinforge::manifold::{self, PointOnM};
use spinforge::oct::Oct;
use spinforge::rep::{self, GroupTag, RepSource};
use spinforge::rng::SeededRng;
use spinforge::scalar::Scalar;
use spinforge::vec6::{ProductVariant, Vec6};
use spinforge::verify;
use spinforge::{em, Exact};

/// Seed precedence: `--seed` flag, then the SPINFORGE_SEED environment
/// variable, then the built-in default.
const SEED_ENV: &str = "SPINFORGE_SEED";

/// Exit status a process killed by SIGPIPE reports; used when stdout's reader
/// goes away (`spinforge verify | head`) so a truncated run never exits 0.
const PIPE_CLOSED: i32 = 141;

macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(PIPE_CLOSED);
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(PIPE_CLOSED);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "spinforge",
    version,
    about = "Exact-arithmetic products on R^6/R^8, their matrix representations, and a verification harness"
)]
struct Cli {
    /// Evaluate in f64 floating point instead of exact rationals.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct SeedArg {
    /// RNG seed (falls back to $SPINFORGE_SEED, then 42).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Star product of two octets: prints x*y as 8 comma-separated values.
    Product {
        #[arg(long)]
        variant: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Outer product of two 6-vectors: prints a x b as 6 comma-separated values.
    Bracket {
        #[arg(long)]
        variant: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// 8x8 left-multiplication matrix of an octet (derived or displayed form).
    Rep {
        #[arg(long)]
        variant: String,
        #[arg(long)]
        source: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Group membership test: prints true/false; exits 1 on false.
    Member {
        #[arg(long)]
        group: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Sample a group element; refuses (exit 1) when the group's sampler
    /// fails its pullback audit.
    Sample {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Operations on the 4-dimensional submanifold of R^6.
    Manifold {
        #[command(subcommand)]
        command: ManifoldCmd,
    },
    /// Electromagnetic field matrices and their antisymmetry audit.
    Em {
        #[command(subcommand)]
        command: EmCmd,
    },
    /// Run the identity suite and emit the verification report (JSON on
    /// stdout; exit 0 iff every gate identity passes).
    Verify {
        /// Product variant whose identity suite gates the exit code.
        #[arg(long, default_value = "spin4")]
        variant: String,
        #[command(flatten)]
        seed: SeedArg,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print the human-readable summary instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Micro-benchmark: median ns/op composing group elements per encoding
    /// (informational only).
    Bench {
        /// Comma-separated subset of {mat8, mat4c, quatpair}.
        #[arg(long, value_delimiter = ',', default_value = "mat8,mat4c,quatpair")]
        encodings: Vec<String>,
        /// Compositions per measurement.
        #[arg(long, default_value_t = 1_000_000)]
        n: u64,
        #[command(flatten)]
        seed: SeedArg,
    },
}

#[derive(Subcommand)]
enum ManifoldCmd {
    /// Newton-project a 6-vector onto the manifold; prints the projected point.
    Project {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 50)]
        max_iter: usize,
    },
    /// Sample a point on the manifold (exactly rational by default).
    Sample {
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Orthogonal tangent basis at a point already on the manifold (4 rows).
    Tangent {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Apply the almost complex structure J_x(v) = x x v to a tangent vector.
    J {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
}

#[derive(Subcommand)]
enum EmCmd {
    /// 4x4 field matrix of "E1,E2,E3,B1,B2,B3[,E0,B0]" (verbatim layout).
    F {
        #[arg(allow_hyphen_values = true)]
        field: String,
        /// Negate the last-row electric entries so the matrix is antisymmetric.
        #[arg(long)]
        antisymmetrize: bool,
    },
    /// 4x4 complex spin matrix of the field (verbatim layout).
    Spin {
        #[arg(allow_hyphen_values = true)]
        field: String,
        /// Use the derived value -B1 - i*B0 at row 3, column 2.
        #[arg(long)]
        corrected: bool,
    },
    /// Squared antisymmetry defect ||F + F^T||^2 of the field matrix.
    Defect { field: String },
}

fn effective_seed(arg: &SeedArg) -> Result<u64, Error> {
    if let Some(s) = arg.seed {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("{SEED_ENV} must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(verify::DEFAULT_SEED),
    }
}

fn run<S: Scalar>(cmd: &Cmd) -> Result<i32, Error> {
    match cmd {
        Cmd::Product { variant, x, y } => {
            let v = ProductVariant::parse(variant)?;
            let x: Oct<S> = Oct::parse(x)?;
            let y: Oct<S> = Oct::parse(y)?;
            outln!("{}", x.star(&y, v));
            Ok(0)
        }
        Cmd::Bracket { variant, a, b } => {
            let v = ProductVariant::parse(variant)?;
            let a: Vec6<S> = Vec6::parse(a)?;
            let b: Vec6<S> = Vec6::parse(b)?;
            outln!("{}", a.cross(&b, v));
            Ok(0)
        }
        Cmd::Rep { variant, source, a } => {
            let v = ProductVariant::parse(variant)?;
            let source = RepSource::parse(source)?;
            let a: Oct<S> = Oct::parse(a)?;
            outln!("{}", rep::rep_matrix(&a, v, source));
            Ok(0)
        }
        Cmd::Member { group, a } => {
            let g = GroupTag::parse(group)?;
            let a: Oct<S> = Oct::parse(a)?;
            let member = rep::is_group_member(&a, g);
            outln!("{member}");
            Ok(if member { 0 } else { 1 })
        }
        Cmd::Sample { group, seed } => {
            let g = GroupTag::parse(group)?;
            let seed = effective_seed(seed)?;
            let a: Oct<S> = rep::sample_group_element(g, seed)?;
            outln!("{a}");
            Ok(0)
        }
        Cmd::Manifold { command } => run_manifold::<S>(command),
        Cmd::Em { command } => run_em::<S>(command),
        Cmd::Verify {
            variant,
            seed,
            json,
            text,
        } => {
            if !S::EXACT {
                return Err(Error::Parse(
                    "verify runs in exact arithmetic; drop --float".into(),
                ));
            }
            let gate = ProductVariant::parse(variant)?;
            let seed = effective_seed(seed)?;
            let report = verify::build_report::<S>(gate, seed);
            let rendered = verify::render_json(&report);
            if let Some(path) = json {
                std::fs::write(path, &rendered)
                    .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
            }
            if *text {
                out!("{}", verify::render_text(&report));
            } else {
                out!("{rendered}");
            }
            Ok(verify::report_exit_code(&report))
        }
        Cmd::Bench { encodings, n, seed } => {
            let seed = effective_seed(seed)?;
            for enc in encodings {
                let ns = bench_encoding(enc, *n, seed)?;
                outln!("{enc}: median {ns:.1} ns/op over {n} compositions");
            }
            Ok(0)
        }
    }
}

fn run_manifold<S: Scalar>(cmd: &ManifoldCmd) -> Result<i32, Error> {
    match cmd {
        ManifoldCmd::Project { x, tol, max_iter } => {
            let x0: Vec6<S> = Vec6::parse(x)?;
            let (p, iters) = manifold::project_to_manifold(&x0, *tol, *max_iter)?;
            outln!("{}", p.x());
            eprintln!("converged in {iters} Newton iterations");
            Ok(0)
        }
        ManifoldCmd::Sample { seed } => {
            let seed = effective_seed(seed)?;
            let mut rng = SeededRng::new(seed);
            let (p, retries) = manifold::sample_manifold::<S>(&mut rng)?;
            outln!("{}", p.x());
            if retries > 0 {
                eprintln!("used {retries} retries");
            }
            Ok(0)
        }
        ManifoldCmd::Tangent { x } => {
            let p = point_on_manifold::<S>(x)?;
            for t in manifold::tangent_basis(&p) {
                outln!("{t}");
            }
            Ok(0)
        }
        ManifoldCmd::J { x, v } => {
            let p = point_on_manifold::<S>(x)?;
            let v: Vec6<S> = Vec6::parse(v)?;
            outln!("{}", manifold::almost_complex_j(&p, &v)?);
            Ok(0)
        }
    }
}

fn point_on_manifold<S: Scalar>(x: &str) -> Result<PointOnM<S>, Error> {
    PointOnM::try_from_vec(Vec6::parse(x)?)
}

fn run_em<S: Scalar>(cmd: &EmCmd) -> Result<i32, Error> {
    match cmd {
        EmCmd::F {
            field,
            antisymmetrize,
        } => {
            let f = em::EmField::<S>::parse(field)?;
            if *antisymmetrize {
                outln!("{}", em::field_matrix_antisymmetric(&f));
            } else {
                outln!("{}", em::field_matrix(&f));
            }
            Ok(0)
        }
        EmCmd::Spin { field, corrected } => {
            let f = em::EmField::<S>::parse(field)?;
            if *corrected {
                outln!("{}", em::spin_field_matrix_corrected(&f));
            } else {
                outln!("{}", em::spin_field_matrix(&f));
            }
            Ok(0)
        }
        EmCmd::Defect { field } => {
            let f = em::EmField::<S>::parse(field)?;
            outln!("{}", em::antisymmetry_defect_sq(&em::field_matrix(&f)));
            Ok(0)
        }
    }
}

/// Composes pre-sampled rotation-group elements in the requested encoding
/// and reports the median per-operation time across 5 measurement rounds.
fn bench_encoding(encoding: &str, n: u64, seed: u64) -> Result<f64, Error> {
    const POOL: usize = 64;
    const ROUNDS: usize = 5;
    let mut rng = SeededRng::new(seed);
    let octets: Vec<Oct<f64>> = (0..POOL)
        .map(|_| {
            let q1 = rng.unit_quaternion::<f64>();
            let q2 = rng.unit_quaternion::<f64>();
            iso::from_quat_pair(&q1, &q2)
        })
        .collect();

    let mut per_op: Vec<f64> = match encoding {
        "mat8" => {
            let pool: Vec<_> = octets
                .iter()
                .map(|a| rep::rep_matrix(a, ProductVariant::Spin4, RepSource::Derived))
                .collect();
            (0..ROUNDS)
                .map(|_| {
                    let mut acc = pool[0].clone();
                    let start = Instant::now();
                    for i in 0..n {
                        acc = acc.mul(&pool[(i as usize + 1) % POOL]);
                    }
                    let dt = start.elapsed();
                    std::hint::black_box(&acc);
                    dt.as_nanos() as f64 / n as f64
                })
                .collect()
        }
        "mat4c" => {
            let pool: Vec<_> = octets
                .iter()
                .map(|a| rep::complex_rep(a).expect("spin4 octets are block structured"))
                .collect();
            (0..ROUNDS)
                .map(|_| {
                    let mut acc = pool[0].clone();
                    let start = Instant::now();
                    for i in 0..n {
                        acc = acc.mul(&pool[(i as usize + 1) % POOL]);
                    }
                    let dt = start.elapsed();
                    std::hint::black_box(&acc);
                    dt.as_nanos() as f64 / n as f64
                })
                .collect()
        }
        "quatpair" => {
            let pool: Vec<_> = octets.iter().map(iso::to_quat_pair).collect();
            (0..ROUNDS)
                .map(|_| {
                    let mut acc = pool[0].clone();
                    let start = Instant::now();
                    for i in 0..n {
                        let (q1, q2) = &pool[(i as usize + 1) % POOL];
                        acc = (acc.0.mul(q1), q2.mul(&acc.1));
                    }
                    let dt = start.elapsed();
                    std::hint::black_box(&acc);
                    dt.as_nanos() as f64 / n as f64
                })
                .collect()
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown encoding {other:?} (expected mat8|mat4c|quatpair)"
            )))
        }
    };
    per_op.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    Ok(per_op[per_op.len() / 2])
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = if cli.float {
        run::<f64>(&cli.command)
    } else {
        run::<Exact>(&cli.command)
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
