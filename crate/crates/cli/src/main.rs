//! `jamesloop`: homology of cubical complexes, directed loops in their
//! suspensions, and the James construction, all in exact arithmetic.
//!
//! Results go to standard output as JSON. Exit status is 0 on success, 1 when
//! a well formed input violates a precondition, 2 when an input cannot be
//! read or parsed.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jamesloop_core::cubical::{standard, suspension_model, CubicalSet};
use jamesloop_core::homology::{betti, FieldSpec};
use jamesloop_core::io;
use jamesloop_core::loop_algebra::loop_space_homology;
use jamesloop_core::path::{EndpointClass, MoorePath, Neighborhood, Sign, Suspension, XStructure};
use jamesloop_core::rational::{self, Rational};
use jamesloop_core::straighten::even_samples;
use jamesloop_core::Error;
use jamesloop_suite::{run_all, RunConfig};

#[derive(Parser)]
#[command(name = "jamesloop", version, about = "Directed loops on suspensions of cubical complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the cubical face relations of a complex.
    Validate { complex: String },
    /// Betti numbers over a field.
    Homology {
        complex: String,
        /// `q` or `zp:<p>`
        #[arg(long, default_value = "q")]
        field: String,
        /// Reduced homology.
        #[arg(long)]
        reduced: bool,
    },
    /// The cubical model of the suspension and its homology.
    Suspension {
        complex: String,
        /// `q` or `zp:<p>`
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Hilbert series of the homology of the directed loop space of the suspension.
    LoopHomology {
        complex: String,
        /// `q` or `zp:<p>`
        #[arg(long, default_value = "q")]
        field: String,
        /// Last degree of the series.
        #[arg(long, default_value_t = 10)]
        degree: usize,
    },
    /// The word of height-0 crossings of a loop.
    Sec {
        path: String,
        #[arg(long)]
        complex: String,
    },
    /// Deform a loop to a concatenation of β loops.
    Straighten {
        path: String,
        #[arg(long)]
        complex: String,
        /// Number of evenly spaced sample times per stage.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Continue to the constant loop.
        #[arg(long)]
        contract: bool,
    },
    /// Deform a loop to the constant loop.
    Contract {
        path: String,
        #[arg(long)]
        complex: String,
        /// Number of evenly spaced sample times per stage.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Operations on a single path.
    Path {
        #[command(subcommand)]
        op: PathOp,
    },
    /// Print a built-in complex: point, circle, interval, wedge, torus, square, two-components.
    Standard { name: String },
    /// Run the acceptance suite and print a pass/fail table.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct PathInput {
    path: String,
    #[arg(long)]
    complex: String,
}

#[derive(Subcommand)]
enum PathOp {
    /// Point at a time.
    Eval {
        #[command(flatten)]
        input: PathInput,
        #[arg(long)]
        at: String,
    },
    /// Report duration, loop and directedness properties.
    Verify {
        #[command(flatten)]
        input: PathInput,
        #[arg(long, value_enum, default_value_t = XArg::Directed)]
        x_structure: XArg,
    },
    /// Apply `φ±_t(h) = (t+1)h ∓ t` to the heights.
    Phi {
        #[command(flatten)]
        input: PathInput,
        #[arg(long, value_enum)]
        sign: SignArg,
        #[arg(long)]
        t: String,
    },
    /// Make a directed loop strictly increasing.
    Increase {
        #[command(flatten)]
        input: PathInput,
        #[arg(long, default_value = "1/4")]
        epsilon: String,
    },
    /// Moore truncation: the part up to a fraction `s` of the duration.
    Truncate {
        #[command(flatten)]
        input: PathInput,
        #[arg(long)]
        at: String,
    },
    /// Replace excursions lying near `*` by pauses at `*`.
    Trim {
        #[command(flatten)]
        input: PathInput,
        /// `model`, or a height margin `δ` (points with |h| > 1 - δ).
        #[arg(long, default_value = "model")]
        near: String,
    },
    /// The loop J(β')(w) of a word; letters may be points or `{"interval":"t"}`.
    Beta {
        /// JSON word file.
        word: String,
        #[arg(long)]
        complex: String,
    },
    /// Which cone the end of a path from `*` lies in.
    Classify {
        #[command(flatten)]
        input: PathInput,
    },
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = RunConfig::default().seed)]
    seed: u64,
    /// Extra field for the loop-space homology check.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, default_value_t = RunConfig::default().degree)]
    degree: usize,
    /// Extra ε for the make_increasing check.
    #[arg(long, default_value = "1/4")]
    epsilon: String,
    /// Number of evenly spaced sample times per homotopy stage.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = XArg::Directed)]
    x_structure: XArg,
    /// Emit the results as JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum XArg {
    Directed,
    Total,
}

impl From<XArg> for XStructure {
    fn from(x: XArg) -> Self {
        match x {
            XArg::Directed => XStructure::Directed,
            XArg::Total => XStructure::Total,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    Minus,
    Plus,
}

/// Failure of a command: the message and whether the input was malformed.
struct Failure {
    message: String,
    malformed: bool,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { malformed: e.is_malformed(), message: e.to_string() }
    }
}

type Outcome = Result<Value, Failure>;

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { message: format!("{path}: {e}"), malformed: true })
}

fn load_complex(path: &str) -> Result<CubicalSet, Failure> {
    Ok(io::parse_complex(&read(path)?)?)
}

fn load_path(input: &PathInput) -> Result<(Suspension, MoorePath), Failure> {
    let s = Suspension::new(load_complex(&input.complex)?);
    let p = io::parse_path(&s, &read(&input.path)?)?;
    Ok((s, p))
}

fn load(path: &str, complex: &str) -> Result<(Suspension, MoorePath), Failure> {
    load_path(&PathInput { path: path.into(), complex: complex.into() })
}

fn q(s: &str) -> Result<Rational, Failure> {
    Ok(rational::parse(s)?)
}

fn paths(s: &Suspension, ps: &[MoorePath]) -> Value {
    Value::Array(ps.iter().map(|p| io::path_to_value(s, p)).collect())
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { complex } => {
            let k = load_complex(&complex)?;
            let violations = k.validate();
            let listed: Vec<Value> = violations
                .iter()
                .map(|v| json!({"cube": k.name(v.cube), "i": v.i, "j": v.j, "eps": v.eps, "eta": v.eta}))
                .collect();
            let out = json!({"valid": violations.is_empty(), "counts": k.counts(), "violations": listed});
            if let Some(v) = violations.first() {
                println!("{out}");
                return Err(Failure {
                    message: format!(
                        "cube {:?}: d^{}_{} d^{}_{} != d^{}_{} d^{}_{}",
                        k.name(v.cube),
                        v.eps,
                        v.i,
                        v.eta,
                        v.j,
                        v.eta,
                        v.j - 1,
                        v.eps,
                        v.i
                    ),
                    malformed: false,
                });
            }
            Ok(out)
        }
        Command::Homology { complex, field, reduced } => {
            let k = load_complex(&complex)?;
            let h = betti(&k, FieldSpec::parse(&field)?);
            let h = if reduced { h.reduced() } else { h };
            Ok(json!(h))
        }
        Command::Suspension { complex, field } => {
            let k = load_complex(&complex)?;
            let model = suspension_model(&k);
            let h = betti(&model.complex, FieldSpec::parse(&field)?);
            Ok(json!({"complex": io::complex_to_value(&model.complex), "homology": h}))
        }
        Command::LoopHomology { complex, field, degree } => {
            let k = load_complex(&complex)?;
            let series = loop_space_homology(&k, FieldSpec::parse(&field)?, degree)?;
            Ok(json!({"series": series.coefficients()}))
        }
        Command::Sec { path, complex } => {
            let (s, p) = load(&path, &complex)?;
            Ok(io::word_to_value(s.base(), &s.sec(&p)?))
        }
        Command::Straighten { path, complex, samples, contract } => {
            let (s, p) = load(&path, &complex)?;
            let times = even_samples(samples)?;
            let st = s.full_straighten(&p, &times)?;
            let mut out = json!({
                "result": io::path_to_value(&s, &st.result),
                "frames": paths(&s, &st.frames),
                "sec": io::word_to_value(s.base(), &s.sec(&st.result)?),
            });
            if contract {
                out["contraction"] = paths(&s, &s.contract_to_constant(&p, &times)?);
            }
            Ok(out)
        }
        Command::Contract { path, complex, samples } => {
            let (s, p) = load(&path, &complex)?;
            let frames = s.contract_to_constant(&p, &even_samples(samples)?)?;
            Ok(json!({"frames": paths(&s, &frames)}))
        }
        Command::Path { op } => path_op(op),
        Command::Standard { name } => {
            let k = match name.as_str() {
                "point" => standard::point(),
                "circle" => standard::circle(),
                "interval" => standard::interval(),
                "wedge" => standard::wedge_of_circles(),
                "torus" => standard::torus(),
                "square" => standard::square(),
                "two-components" => standard::two_components(),
                _ => return Err(Failure { message: format!("no built-in complex {name:?}"), malformed: true }),
            };
            Ok(io::complex_to_value(&k))
        }
        Command::Selftest(args) => selftest(args),
    }
}

fn path_op(op: PathOp) -> Outcome {
    match op {
        PathOp::Eval { input, at } => {
            let (s, p) = load_path(&input)?;
            Ok(io::suspension_point_to_value(&s, &s.evaluate(&p, &q(&at)?)?))
        }
        PathOp::Verify { input, x_structure } => {
            let (s, p) = load_path(&input)?;
            let directed = s.verify_directed(&p, x_structure.into());
            let is_loop = s.is_loop(&p);
            Ok(json!({
                "duration": rational::format(&p.duration()),
                "loop": is_loop,
                "directed": directed,
                "strictly_increasing": directed && s.is_strictly_increasing(&p),
            }))
        }
        PathOp::Phi { input, sign, t } => {
            let (s, p) = load_path(&input)?;
            let sign = match sign {
                SignArg::Minus => Sign::Minus,
                SignArg::Plus => Sign::Plus,
            };
            Ok(io::path_to_value(&s, &s.apply_phi(&p, sign, &q(&t)?)?))
        }
        PathOp::Increase { input, epsilon } => {
            let (s, p) = load_path(&input)?;
            Ok(io::path_to_value(&s, &s.make_increasing(&p, &q(&epsilon)?)?))
        }
        PathOp::Truncate { input, at } => {
            let (s, p) = load_path(&input)?;
            Ok(io::path_to_value(&s, &s.truncate_moore(&p, &q(&at)?)?))
        }
        PathOp::Trim { input, near } => {
            let (s, p) = load_path(&input)?;
            let n = if near == "model" { Neighborhood::Model } else { Neighborhood::Height(q(&near)?) };
            Ok(io::path_to_value(&s, &s.truncate_near_basepoint(&p, &n)?))
        }
        PathOp::Beta { word, complex } => {
            let s = Suspension::new(load_complex(&complex)?);
            let w = io::xprime_word_from_value(s.base(), &io::parse_value(&read(&word)?)?)?;
            Ok(io::path_to_value(&s, &s.j_beta_prime(&w)?))
        }
        PathOp::Classify { input } => {
            let (s, p) = load_path(&input)?;
            let e = s.classify_endpoint(&p)?;
            let class = match e.class {
                EndpointClass::Star => "star",
                EndpointClass::Zero => "zero",
                EndpointClass::Minus => "minus",
                EndpointClass::Plus => "plus",
            };
            Ok(json!({
                "class": class,
                "in_minus": e.in_minus,
                "in_plus": e.in_plus,
                "end": io::suspension_point_to_value(&s, &e.end),
            }))
        }
    }
}

fn selftest(args: SelftestArgs) -> Outcome {
    let cfg = RunConfig {
        field: FieldSpec::parse(&args.field)?,
        degree: args.degree,
        epsilon: q(&args.epsilon)?,
        samples: even_samples(args.samples)?,
        x_structure: args.x_structure.into(),
        seed: args.seed,
    };
    cfg.validate()?;
    let results = run_all(&cfg);
    let failed = results.iter().filter(|r| !r.passed).count();
    if args.json {
        let rows: Vec<Value> = results
            .iter()
            .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}))
            .collect();
        println!("{}", json!({"seed": cfg.seed, "results": rows}));
    } else {
        for r in &results {
            println!("{:>2}  {}  {:<50}  {}", r.id, if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
        }
        println!("{} of {} criteria passed", results.len() - failed, results.len());
    }
    if failed > 0 {
        return Err(Failure { message: format!("{failed} criteria failed"), malformed: false });
    }
    Ok(Value::Null)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Value::Null) => ExitCode::SUCCESS,
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(if f.malformed { 2 } else { 1 })
        }
    }
}
