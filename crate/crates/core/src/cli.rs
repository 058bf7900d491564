//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 when `--expect certified` is not
//! met, 2 on input errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constructions::{self, pencil_compression_witness};
use crate::criticality::{rnd_multiplicities, MultiplicityReport};
use crate::lie::classical::{irreducible_sl3_rep, sl, so, sp, symmetric_power_poly_rep};
use crate::lie::octonion::{f4_module_26, g2, g2_module_27, g2_module_7};
use crate::lie::{LieAlgebra, Representation};
use crate::poly::{self, MPoly};
use crate::space::{self, certify_rank_critical, generic_rank, MatrixSpace, SamplingOptions};
use crate::{rat, Error, Matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CERTIFIED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rankcrit", version, about = "Generic rank and rank-criticality certificates for matrix spaces")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Coefficient bound for random combinations.
    #[arg(long, global = true, default_value_t = 100)]
    pub height: u64,
    /// Consecutive samples without progress before stopping.
    #[arg(long, global = true, default_value_t = 5)]
    pub stabilize: usize,
    /// Extra samples per highest weight row beyond its dimension.
    #[arg(long, global = true, default_value_t = 3)]
    pub oversample: usize,
    /// Screen ranks modulo this prime before exact arithmetic.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub expect: Option<Expect>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    Certified,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operations on a matrix space file.
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Emit a matrix space from a standard construction.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Representations: build the module or certify its image.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Polynomial identities behind the symmetric power computations.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Lie algebra files.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
}

#[derive(Subcommand, Debug)]
pub enum SpaceCmd {
    Rank { file: PathBuf },
    Rnd { file: PathBuf },
    Certify { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum ConstructCmd {
    /// Maps sending span(e_1..e_k) into span(e_1..e_{k-1}).
    Compression {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Skew {
        #[arg(long)]
        n: usize,
    },
    /// Paré space for the standard skew basis of size n.
    Pare {
        #[arg(long)]
        n: usize,
    },
    /// Compression witness for a singular pencil given as a 2-dim space file.
    PencilWitness { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    #[command(subcommand)]
    Build(RepSource),
    #[command(subcommand)]
    Certify(RepSource),
}

#[derive(Subcommand, Debug, Clone)]
pub enum RepSource {
    /// S^k of the standard module of sl_m.
    SlSym {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    Adjoint {
        /// slN, soN, spN or g2.
        #[arg(long)]
        algebra: String,
    },
    #[command(name = "g2-7")]
    G27,
    #[command(name = "g2-27")]
    G227,
    Sl3Irrep {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    #[command(name = "f4-26")]
    F426,
    FromFile { file: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// P_{d,e}(alpha, beta, gamma).
    Pde {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
    },
    /// Compare the Q_d sum against its closed form for e <= e-max.
    VerifyQd {
        #[arg(long, default_value_t = 10)]
        e_max: u32,
    },
    /// Compare the operator coefficient computed from (x_3 d/dx_1)^d against
    /// the formula.
    VerifyBrute {
        #[arg(long, default_value_t = 3)]
        e_max: u32,
        #[arg(long, default_value_t = 6)]
        d_max: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    Validate { file: PathBuf },
}

struct Outcome {
    json: Value,
    text: String,
    certified: Option<bool>,
}

impl Outcome {
    fn plain(json: Value, text: String) -> Self {
        Outcome {
            json,
            text,
            certified: None,
        }
    }
}

#[derive(Debug)]
struct CliError {
    context: String,
    err: Error,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.context.is_empty() {
            write!(f, "{}", self.err)
        } else {
            write!(f, "{}: {}", self.context, self.err)
        }
    }
}

fn at(context: impl Into<String>) -> impl FnOnce(Error) -> CliError {
    let context = context.into();
    move |err| CliError { context, err }
}

fn bare(err: Error) -> CliError {
    CliError {
        context: String::new(),
        err,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let body = match cli.global.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&out.json).expect("json serializes");
                    s.push('\n');
                    s
                }
                Format::Text => out.text,
            };
            if let Err(e) = emit(cli.global.output.as_deref(), &body) {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
            match (cli.global.expect, out.certified) {
                (Some(Expect::Certified), Some(false)) => EXIT_NOT_CERTIFIED,
                _ => EXIT_OK,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn emit(path: Option<&Path>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, body),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn sampling(g: &GlobalOpts) -> SamplingOptions {
    SamplingOptions {
        height: g.height.max(1),
        seed: g.seed,
        stabilization: g.stabilize,
        prime: g.prime,
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Space(cmd) => run_space(cmd, g),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Rep(RepCmd::Build(src)) => {
            let rho = build_rep(src)?;
            let text = format!(
                "{}: dim {}, algebra dim {}\n",
                rho.label(),
                rho.dim(),
                rho.algebra().dim()
            );
            Ok(Outcome::plain(rho.to_json(), text))
        }
        Command::Rep(RepCmd::Certify(src)) => {
            let rho = build_rep(src)?;
            let report: MultiplicityReport =
                rnd_multiplicities(&rho, &sampling(g), g.oversample).map_err(at(rho.label()))?;
            Ok(Outcome {
                json: report.to_json(),
                text: report.to_text(),
                certified: Some(report.is_certified()),
            })
        }
        Command::Poly(cmd) => run_poly(cmd),
        Command::Algebra(AlgebraCmd::Validate { file }) => {
            let v = read_json(file)?;
            let alg = LieAlgebra::from_json(&v).map_err(at(file.display().to_string()))?;
            alg.validate().map_err(at(file.display().to_string()))?;
            let text = format!("{}: valid Lie algebra, dim {}, rank {}\n", file.display(), alg.dim(), alg.rank());
            Ok(Outcome::plain(
                json!({"valid": true, "dim": alg.dim(), "cartan": alg.cartan()}),
                text,
            ))
        }
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let ctx = path.display().to_string();
    let s = fs::read_to_string(path).map_err(|e| CliError {
        context: ctx.clone(),
        err: Error::InvalidInput(e.to_string()),
    })?;
    serde_json::from_str(&s).map_err(|e| CliError {
        context: ctx,
        err: Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())),
    })
}

fn read_space(path: &Path) -> Result<MatrixSpace, CliError> {
    let v = read_json(path)?;
    MatrixSpace::from_json(&v).map_err(at(path.display().to_string()))
}

fn run_space(cmd: &SpaceCmd, g: &GlobalOpts) -> Result<Outcome, CliError> {
    let opts = sampling(g);
    match cmd {
        SpaceCmd::Rank { file } => {
            let a = read_space(file)?;
            if a.dim() == 0 {
                return Err(CliError {
                    context: file.display().to_string(),
                    err: Error::InvalidInput("matrix space has an empty basis".into()),
                });
            }
            let (r, prov) = generic_rank(&a, &opts);
            Ok(Outcome::plain(
                json!({"n": a.n(), "dim": a.dim(), "generic_rank": r, "rank_provenance": prov, "seed": opts.seed}),
                format!("n {} dim {} generic rank {}\n", a.n(), a.dim(), r),
            ))
        }
        SpaceCmd::Rnd { file } => {
            let a = read_space(file)?;
            let comp = space::rnd(&a, None, &opts).map_err(at(file.display().to_string()))?;
            let mats: Vec<Value> = comp
                .rnd
                .basis_vectors()
                .iter()
                .map(|v| Matrix::from_flat(a.n(), v).to_json())
                .collect();
            let text = format!(
                "n {} dim {} generic rank {} rnd dim {} ({} samples)\n",
                a.n(),
                a.dim(),
                comp.generic_rank,
                comp.rnd.dim(),
                comp.samples_used
            );
            Ok(Outcome::plain(
                json!({
                    "n": a.n(),
                    "dim": a.dim(),
                    "generic_rank": comp.generic_rank,
                    "rank_provenance": comp.provenance,
                    "rnd_dim": comp.rnd.dim(),
                    "rnd_basis": mats,
                    "samples_used": comp.samples_used,
                    "seed": opts.seed,
                }),
                text,
            ))
        }
        SpaceCmd::Certify { file } => {
            let a = read_space(file)?;
            let cert = certify_rank_critical(&a, &opts).map_err(at(file.display().to_string()))?;
            let text = format!(
                "n {} dim {} generic rank {} rnd dim {}: {:?}\n",
                a.n(),
                a.dim(),
                cert.generic_rank,
                cert.rnd.dim(),
                cert.status
            );
            Ok(Outcome {
                json: cert.to_json(),
                text,
                certified: Some(cert.is_certified()),
            })
        }
    }
}

fn space_outcome(a: MatrixSpace) -> Outcome {
    let text = format!("n {} dim {}\n", a.n(), a.dim());
    Outcome::plain(a.to_json(), text)
}

fn run_construct(cmd: &ConstructCmd) -> Result<Outcome, CliError> {
    match cmd {
        ConstructCmd::Compression { n, k } => constructions::standard_compression_space(*n, *k)
            .map(space_outcome)
            .map_err(at("compression")),
        ConstructCmd::Skew { n } => Ok(space_outcome(constructions::skew_space(*n))),
        ConstructCmd::Pare { n } => constructions::pare_standard(*n)
            .map(space_outcome)
            .map_err(at("pare")),
        ConstructCmd::PencilWitness { file } => {
            let a = read_space(file)?;
            let ctx = file.display().to_string();
            if a.dim() != 2 {
                return Err(CliError {
                    context: ctx,
                    err: Error::NotTwoDimensional,
                });
            }
            let (p, q) = (&a.basis()[0], &a.basis()[1]);
            let w = pencil_compression_witness(p, q).map_err(at(ctx))?;
            let vecs = |s: &crate::Subspace| -> Vec<Vec<String>> {
                s.basis_vectors()
                    .iter()
                    .map(|v| v.iter().map(rat::to_string).collect())
                    .collect()
            };
            let text = format!(
                "U dim {}, W dim {}, kernel vector degree {}\n",
                w.u.dim(),
                w.w.dim(),
                w.chain.len() - 1
            );
            Ok(Outcome::plain(
                json!({"n": a.n(), "u": vecs(&w.u), "w": vecs(&w.w), "degree": w.chain.len() - 1}),
                text,
            ))
        }
    }
}

fn parse_algebra_name(name: &str) -> Result<(Representation, String), CliError> {
    let err = || CliError {
        context: format!("--algebra {name:?}"),
        err: Error::InvalidInput("unknown algebra; expected slN, soN, spN or g2".into()),
    };
    if name == "g2" {
        let (alg, _) = g2().map_err(at("g2"))?;
        return Ok((Representation::adjoint(alg), "g2".into()));
    }
    let (family, digits) = name.split_at(name.len().min(2));
    let n: usize = digits.parse().map_err(|_| err())?;
    let (alg, _) = match family {
        "sl" if n >= 2 => sl(n),
        "so" => so(n).map_err(at(name))?,
        "sp" => sp(n).map_err(at(name))?,
        _ => return Err(err()),
    };
    Ok((Representation::adjoint(alg), name.to_string()))
}

fn build_rep(src: &RepSource) -> Result<Representation, CliError> {
    let rho = match src {
        RepSource::SlSym { m, k } => {
            if *m < 2 || *k < 1 {
                return Err(bare(Error::InvalidInput(format!(
                    "sl-sym needs m >= 2 and k >= 1, got m = {m}, k = {k}"
                ))));
            }
            symmetric_power_poly_rep(*m, *k).with_label(format!("S^{k}(sl{m})"))
        }
        RepSource::Adjoint { algebra } => {
            let (rho, name) = parse_algebra_name(algebra)?;
            rho.with_label(format!("ad {name}"))
        }
        RepSource::G27 => g2_module_7().map_err(at("g2-7"))?.with_label("g2 7"),
        RepSource::G227 => g2_module_27().map_err(at("g2-27"))?.with_label("g2 27"),
        RepSource::Sl3Irrep { a, b } => irreducible_sl3_rep(*a, *b)
            .map_err(at("sl3-irrep"))?
            .with_label(format!("sl3 [{a},{b}]")),
        RepSource::F426 => f4_module_26().map_err(at("f4-26"))?.with_label("f4 26"),
        RepSource::FromFile { file } => {
            let v = read_json(file)?;
            Representation::from_json(&v).map_err(at(file.display().to_string()))?
        }
    };
    Ok(rho)
}

fn poly_outcome(p: &MPoly, extra: Value) -> Outcome {
    let mut j = p.to_json();
    if let (Value::Object(m), Value::Object(x)) = (&mut j, extra) {
        m.extend(x);
    }
    Outcome::plain(j, format!("{p}\n"))
}

fn run_poly(cmd: &PolyCmd) -> Result<Outcome, CliError> {
    match cmd {
        PolyCmd::Pde { d, e } => {
            let p = poly::p_de(*d, *e);
            let div = poly::divisible_by_sigma1(&p);
            Ok(poly_outcome(&p, json!({"d": d, "e": e, "divisible_by_sigma1": div})))
        }
        PolyCmd::VerifyQd { e_max } => {
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for e in 1..=*e_max {
                for d in 1..=2 * e + 1 {
                    let (s, c) = (poly::q_d_sum(d, e), poly::q_d_closed(d, e));
                    ok &= s == c;
                    text.push_str(&format!(
                        "e {e} d {d}: sum {} closed {}{}\n",
                        rat::to_string(&s),
                        rat::to_string(&c),
                        if s == c { "" } else { "  MISMATCH" }
                    ));
                    rows.push(json!({"e": e, "d": d, "sum": rat::to_string(&s), "closed": rat::to_string(&c)}));
                }
            }
            Ok(Outcome {
                json: json!({"agree": ok, "rows": rows}),
                text,
                certified: Some(ok),
            })
        }
        PolyCmd::VerifyBrute { e_max, d_max } => {
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for e in 1..=*e_max {
                for d in 0..=*d_max {
                    let brute = poly::brute_operator_coefficient(d, e, 3);
                    let formula = poly::operator_coefficient_formula(d, e);
                    let scaled = poly::p_de(d, e).scale(&crate::Rat::from_integer(rat::factorial(d as u64)));
                    let agree = brute == formula && brute == scaled;
                    ok &= agree;
                    text.push_str(&format!("e {e} d {d}: {}\n", if agree { "agree" } else { "MISMATCH" }));
                    rows.push(json!({"e": e, "d": d, "agree": agree}));
                }
            }
            Ok(Outcome {
                json: json!({"agree": ok, "rows": rows}),
                text,
                certified: Some(ok),
            })
        }
    }
}
