use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partdeg::aided_rank::{cw2_upper_cert, cw_lower_bound, cw_upper_cert, min_rank_obstruction};
use partdeg::degeneration::{cert_zoo, verify_cert};
use partdeg::interpolation::{aided_interpolation, teleport_restriction, unit_interpolation, AidedVariant, UnitVariant};
use partdeg::io::{cert_to_json, load_cert, load_tensor, save_cert, save_tensor, tensor_to_json, Certificate};
use partdeg::orbits::{orbit_report, prehom_test, GroupSpec};
use partdeg::suite::run_suite;
use partdeg::tensor::zoo;
use partdeg::Error;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "partdeg", version, about = "Exact certificates for tensor restriction, degeneration and aided rank")]
struct Cli {
    /// Seed for every randomized fixture.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named tensor.
    Zoo {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a named degeneration certificate (w, strassen q, pencil k m, prop333, random-partial r).
    CertZoo {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a certificate file; exit 0 iff it holds.
    Verify { cert: PathBuf },
    /// Approximation and error degree of a degeneration certificate.
    Degrees { cert: PathBuf },
    /// Turn a degeneration certificate into a restriction.
    Interpolate {
        cert: PathBuf,
        #[arg(long, value_enum)]
        method: InterpMethod,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Restriction T^■(u₃v₃) ≥ S through the bipartite flattenings.
    Teleport {
        t: PathBuf,
        s: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Aided-rank certificates and bounds.
    AidedRank {
        #[command(subcommand)]
        action: AidedAction,
    },
    /// Orbit dimension under a product of general linear groups.
    OrbitDim {
        tensor: PathBuf,
        /// Factors acted on: 23 or 123.
        #[arg(long, default_value = "123")]
        group: String,
    },
    /// Whether GL(U₂)×GL(U₃) has a dense orbit in U₁⊗U₂⊗U₃.
    Prehom { u1: usize, u2: usize, u3: usize },
    /// Run the acceptance battery.
    Suite,
}

#[derive(Subcommand)]
enum AidedAction {
    /// Check a spanning certificate.
    Verify { cert: PathBuf },
    /// Substitution-method lower bound for CW_q.
    CwLower { q: usize, p: usize },
    /// Spanning certificate for CW_q.
    CwUpper {
        q: usize,
        p: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Spanning certificate for CW_q ⊠ CW_q at aiding rank p².
    Cw2Upper {
        q: usize,
        p: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Determinant obstruction R^■p(T) > u₁.
    Obstruction { tensor: PathBuf, p: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum InterpMethod {
    UnitE,
    #[value(name = "unit-2d")]
    Unit2d,
    AidedD,
    AidedE,
}

/// Named report fields in insertion order, plus the exit status.
struct Report {
    fields: Vec<(String, Value)>,
    ok: bool,
}

impl Report {
    fn new() -> Self {
        Report { fields: Vec::new(), ok: true }
    }

    fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    fn status(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    fn print(&self, as_json: bool) {
        if self.fields.is_empty() {
            return;
        }
        if as_json {
            let map: Map<String, Value> = self.fields.iter().cloned().collect();
            println!("{}", serde_json::to_string_pretty(&Value::Object(map)).expect("plain values"));
        } else {
            for (k, v) in &self.fields {
                match v {
                    Value::String(s) => println!("{k}: {s}"),
                    other => println!("{k}: {other}"),
                }
            }
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) | Error::Precondition(_) => 1,
        _ => 2,
    }
}

fn emit_text(output: Option<&Path>, text: &str) -> partdeg::Result<Report> {
    match output {
        Some(p) => {
            std::fs::write(p, text)?;
            Ok(Report::new().field("written", p.display().to_string()))
        }
        None => {
            print!("{text}");
            Ok(Report::new())
        }
    }
}

fn emit_cert(output: Option<&Path>, cert: &Certificate) -> partdeg::Result<Report> {
    match output {
        Some(p) => {
            save_cert(p, cert)?;
            Ok(Report::new().field("written", p.display().to_string()))
        }
        None => emit_text(None, &cert_to_json(cert)),
    }
}

fn verdict_report(cert: &Certificate) -> Report {
    let v = cert.verify();
    let mut r = Report::new().field("kind", v.kind).field("ok", v.ok);
    for (k, val) in v.fields {
        r = r.field(&k, val);
    }
    r.status(v.ok)
}

fn group(spec: &str) -> partdeg::Result<GroupSpec> {
    let factors: Vec<usize> = spec
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::InvalidParameter(format!("bad group {spec:?}"))))
        .collect::<partdeg::Result<_>>()?;
    GroupSpec::new(&factors)
}

fn run(cli: &Cli) -> partdeg::Result<Report> {
    let seed = cli.seed;
    match &cli.command {
        Command::Zoo { name, params, output } => {
            let t = zoo::by_name(name, params, seed)?;
            match output {
                Some(p) => {
                    save_tensor(p, &t)?;
                    Ok(Report::new().field("dims", format!("{:?}", t.dims())).field("written", p.display().to_string()))
                }
                None => emit_text(None, &tensor_to_json(&t)),
            }
        }
        Command::CertZoo { name, params, output } => {
            emit_cert(output.as_deref(), &Certificate::Degeneration(cert_zoo::by_name(name, params, seed)?))
        }
        Command::Verify { cert } => Ok(verdict_report(&load_cert(cert)?)),
        Command::Degrees { cert } => {
            let Certificate::Degeneration(c) = load_cert(cert)? else {
                return Err(Error::InvalidParameter("degrees needs a degeneration certificate".into()));
            };
            let r = verify_cert(&c).map_err(|f| Error::Verification(f.to_string()))?;
            Ok(Report::new().field("d", r.d).field("e", r.e).field("is_partial", r.is_partial).field("rank_A1", r.rank_a1))
        }
        Command::Interpolate { cert, method, output } => {
            let Certificate::Degeneration(c) = load_cert(cert)? else {
                return Err(Error::InvalidParameter("interpolate needs a degeneration certificate".into()));
            };
            let r = match method {
                InterpMethod::UnitE => unit_interpolation(&c, UnitVariant::E)?,
                InterpMethod::Unit2d => unit_interpolation(&c, UnitVariant::TwoD)?,
                InterpMethod::AidedD => aided_interpolation(&c, AidedVariant::D)?,
                InterpMethod::AidedE => aided_interpolation(&c, AidedVariant::E)?,
            };
            emit_cert(output.as_deref(), &Certificate::Restriction(r))
        }
        Command::Teleport { t, s, output } => match teleport_restriction(&load_tensor(t)?, &load_tensor(s)?)? {
            Some(r) => emit_cert(output.as_deref(), &Certificate::Restriction(r)),
            None => Ok(Report::new().field("restriction", "none: first flattening rank of S exceeds that of T").status(false)),
        },
        Command::AidedRank { action } => match action {
            AidedAction::Verify { cert } => match load_cert(cert)? {
                c @ Certificate::Spanning(_) => Ok(verdict_report(&c)),
                _ => Err(Error::InvalidParameter("expected a spanning certificate".into())),
            },
            AidedAction::CwLower { q, p } => {
                let r = cw_lower_bound(*q, *p)?;
                Ok(Report::new().field("q", r.q).field("p", r.p).field("steps", r.steps.len()).field("lower_bound", r.bound))
            }
            AidedAction::CwUpper { q, p, output } => emit_cert(output.as_deref(), &Certificate::Spanning(cw_upper_cert(*q, *p)?)),
            AidedAction::Cw2Upper { q, p, output } => emit_cert(output.as_deref(), &Certificate::Spanning(cw2_upper_cert(*q, *p)?)),
            AidedAction::Obstruction { tensor, p } => {
                let t = load_tensor(tensor)?;
                let holds = min_rank_obstruction(&t, *p)?;
                Ok(Report::new().field("obstruction", holds).field("exceeds", t.dims()[0]).status(holds))
            }
        },
        Command::OrbitDim { tensor, group: g } => {
            let r = orbit_report(&load_tensor(tensor)?, &group(g)?);
            Ok(Report::new().field("group", g.as_str()).field("dimension", r.dimension).field("dense", r.is_dense))
        }
        Command::Prehom { u1, u2, u3 } => Ok(Report::new().field("prehomogeneous", prehom_test(*u1, *u2, *u3)?)),
        Command::Suite => {
            let report = run_suite(seed);
            let mut r = Report::new().field("seed", seed);
            for c in &report.criteria {
                let checks: Vec<Value> = c.checks.iter().map(|x| json!({ "check": x.label, "passed": x.passed })).collect();
                let key = format!("criterion {:02}", c.id);
                r = if cli.json {
                    r.field(&key, json!({ "title": c.title, "passed": c.passed(), "checks": checks }))
                } else {
                    r.field(&key, format!("{} {}", if c.passed() { "PASS" } else { "FAIL" }, c.title))
                };
            }
            Ok(r.field("all_passed", report.passed()).status(report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            report.print(cli.json);
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
