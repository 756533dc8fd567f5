//! Command-line frontend for `flt-lab-core`.
//!
//! Exit codes: 0 success (or the claim holds up to its bound), 1 usage
//! error, 2 runtime error, 3 solutions or a counterexample found.

pub mod checkpoint;
pub mod driver;
pub mod error;
pub mod output;
pub mod poly_expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use flt_lab_core::claims::{list_claims, ClaimId, ClaimParams, ClaimStatus, ParamKind, Profile};
use flt_lab_core::diophantine::{
    EulerProduct, FermatTriples, PairSystemSearch, ProductForm, ProductSquares, QuadraticScan, Quadruple,
    QuadrupleMode, RangeSearch, Ring, SearchBounds, Sys3,
};
use flt_lab_core::polysplit::{analyze, extract_fermat_witness, extract_powersum_identity, Extraction};
use flt_lab_core::powersum::{verify_appendix, CoprimeMode, EqualSumsSearch};
use serde_json::{json, Map, Value};

use driver::{drive_claim, run_search, DriveOptions, Driven};
use error::{CliError, EXIT_FOUND, EXIT_OK, EXIT_RUNTIME};

#[derive(Debug, Parser)]
#[command(name = "flt-lab", version, about = "Bounded exact searches for Fermat-type Diophantine claims")]
struct Cli {
    /// Emit JSON lines on standard output
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV with a header row (solutions, outcomes, appendix lines)
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads
    #[arg(long, global = true, env = "FLT_LAB_JOBS", default_value = "1", value_parser = parse_jobs)]
    jobs: usize,
    /// No progress on standard error
    #[arg(short, long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer, got {s:?}")),
        Ok(n) => Ok(n),
    }
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Registered claims
    #[command(subcommand)]
    Claim(ClaimCmd),
    /// Run one search family directly
    Search(SearchArgs),
    /// Polynomial tools
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Check the embedded table of published power-sum identities
    VerifyAppendix,
}

#[derive(Debug, Subcommand)]
enum ClaimCmd {
    /// List claims with their parameters
    List,
    /// Run one claim
    Run {
        id: String,
        /// Override a parameter (repeatable); `n=V` sets n_min and n_max
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
        /// Resume from and save progress to this file
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Stop after this many work units (the run can be resumed)
        #[arg(long, hide = true)]
        max_units: Option<u64>,
        /// Minimum time between checkpoint writes
        #[arg(long, hide = true, default_value_t = 1000)]
        checkpoint_interval_ms: u64,
    },
    /// Run every claim at a profile's defaults
    Suite {
        #[arg(long)]
        profile: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Fermat,
    PairSystem,
    Quadruple,
    Sys3,
    ProductForm,
    ProductSquares,
    EulerProduct,
    Quadratic,
    EqualSums,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoprimeArg {
    None,
    Pairwise,
    /// gcd(x, y) = gcd(z, u) = 1 (quadruple only)
    Pairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Z,
    Zi,
}

#[derive(Debug, clap::Args)]
struct SearchArgs {
    family: Family,
    /// Per-variable bound (a norm bound for Z[i], a_max for quadratic)
    #[arg(long)]
    bound: u64,
    /// Exponent (n_max for quadratic, k for equal_sums)
    #[arg(long)]
    exponent: Option<u32>,
    #[arg(long, value_enum, default_value = "pairwise")]
    coprime: CoprimeArg,
    /// Ring for product_squares
    #[arg(long, value_enum, default_value = "z")]
    ring: RingArg,
    /// Left-hand term count for equal_sums
    #[arg(long, default_value_t = 3)]
    h: u32,
    /// Right-hand term count for equal_sums
    #[arg(long, default_value_t = 1)]
    l: u32,
    /// Require xy = zu (quadruple)
    #[arg(long)]
    xy_eq_zu: bool,
}

#[derive(Debug, Subcommand)]
enum PolyCmd {
    /// Factor over Q into integer roots and a root-free cofactor
    Analyze {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also try to read off a Fermat witness with this exponent
        #[arg(long)]
        fermat_n: Option<u32>,
        /// Also try to read off a power-sum identity with this exponent
        #[arg(long)]
        powersum_k: Option<u32>,
    },
}

struct Ctx<'a> {
    json: bool,
    csv: bool,
    csv_header_done: bool,
    jobs: usize,
    quiet: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, json: &Value, text: &str) -> Result<(), CliError> {
        if self.csv {
            return Err(CliError::Usage("this command has no CSV form; use --json".into()));
        }
        if self.json {
            self.out.write_all(output::line(json).as_bytes())?;
        } else {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }

    fn emit_row(&mut self, json: &Value, text: &str, row: output::CsvRow) -> Result<(), CliError> {
        if !self.csv {
            return self.emit(json, text);
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        let header_done = std::mem::replace(&mut self.csv_header_done, true);
        let io = |e: csv::Error| CliError::Runtime(e.to_string());
        if !header_done {
            w.write_record(&row.header).map_err(io)?;
        }
        w.write_record(&row.values).map_err(io)?;
        let bytes = w.into_inner().map_err(|e| CliError::Runtime(e.to_string()))?;
        self.out.write_all(&bytes)?;
        Ok(())
    }
}

/// Parses `args` (including the program name), writes results to `out`
/// and diagnostics to standard error; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { error::EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut ctx = Ctx { json: cli.json, csv: cli.csv, csv_header_done: false, jobs: cli.jobs, quiet: cli.quiet, out };
    let result = match cli.cmd {
        Cmd::Claim(c) => claim(&mut ctx, c),
        Cmd::Search(a) => search(&mut ctx, a),
        Cmd::Poly(PolyCmd::Analyze { expr, fermat_n, powersum_k }) => poly(&mut ctx, &expr, fermat_n, powersum_k),
        Cmd::VerifyAppendix => appendix(&mut ctx),
    };
    let _ = ctx.out.flush();
    match result {
        Ok(code) => code,
        Err(CliError::BrokenPipe) => EXIT_RUNTIME,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn parse_claim_id(s: &str) -> Result<ClaimId, CliError> {
    s.parse().map_err(|_| {
        let ids: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
        CliError::UsageWithHelp(format!("unknown claim {s:?}"), format!("known claims:\n  {}", ids.join("\n  ")))
    })
}

fn status_code(status: &ClaimStatus) -> i32 {
    match status {
        ClaimStatus::CounterexampleFound(_) => EXIT_FOUND,
        ClaimStatus::HoldsUpToBound | ClaimStatus::Inapplicable(_) => EXIT_OK,
    }
}

fn claim(ctx: &mut Ctx, cmd: ClaimCmd) -> Result<i32, CliError> {
    match cmd {
        ClaimCmd::List => {
            for info in list_claims() {
                let params: Vec<Value> = info
                    .params
                    .iter()
                    .map(|p| {
                        let (kind, range) = match p.kind {
                            ParamKind::Int { min, max } => ("int", json!([min.to_string(), max.to_string()])),
                            ParamKind::Flag => ("flag", Value::Null),
                        };
                        let dflt = |prof: Profile| {
                            info.defaults(prof).iter().find(|(n, _)| *n == p.name).map(|(_, v)| v.to_string())
                        };
                        json!({"name": p.name, "kind": kind, "range": range, "smoke": dflt(Profile::Smoke),
                               "desk": dflt(Profile::Desk), "help": p.help})
                    })
                    .collect();
                let mut m = Map::new();
                m.insert("schema".into(), json!(output::SCHEMA));
                m.insert("type".into(), json!("claim_info"));
                m.insert("claim".into(), json!(info.id.as_str()));
                m.insert("statement".into(), json!(info.statement));
                m.insert("params".into(), Value::Array(params));
                let names: Vec<&str> = info.params.iter().map(|p| p.name).collect();
                let text = format!("{:<20} {}\n{:<20} params: {}", info.id.as_str(), info.statement, "", names.join(", "));
                ctx.emit(&Value::Object(m), &text)?;
            }
            Ok(EXIT_OK)
        }
        ClaimCmd::Run { id, params, checkpoint, max_units, checkpoint_interval_ms } => {
            let id = parse_claim_id(&id)?;
            let mut pairs = Vec::new();
            for p in &params {
                let Some((k, v)) = p.split_once('=') else {
                    return Err(CliError::UsageWithHelp(
                        format!("--param expects NAME=VALUE, got {p:?}"),
                        output::schema_help(id),
                    ));
                };
                pairs.push((k.to_string(), v.to_string()));
            }
            let cp = ClaimParams::parse(id, &pairs).map_err(|e| match e {
                flt_lab_core::Error::Usage(m) => CliError::UsageWithHelp(m, output::schema_help(id)),
                other => other.into(),
            })?;
            let opts = DriveOptions {
                jobs: ctx.jobs,
                checkpoint,
                max_units,
                checkpoint_interval: Duration::from_millis(checkpoint_interval_ms),
                progress: !ctx.quiet,
            };
            match drive_claim(&cp, &opts)? {
                Driven::Complete(o) => {
                    ctx.emit_row(&output::outcome(&o), &output::outcome_text(&o), output::outcome_csv(&o))?;
                    Ok(status_code(&o.status))
                }
                Driven::Interrupted { completed, total } => {
                    eprintln!("stopped after {completed} of {total} units; rerun with the same --checkpoint to resume");
                    Ok(EXIT_RUNTIME)
                }
            }
        }
        ClaimCmd::Suite { profile } => {
            let profile: Profile = profile.parse()?;
            let opts = DriveOptions { jobs: ctx.jobs, progress: !ctx.quiet, ..DriveOptions::default() };
            let mut code = EXIT_OK;
            let mut failed = false;
            for &id in ClaimId::ALL {
                match drive_claim(&ClaimParams::defaults(id, profile), &opts) {
                    Ok(Driven::Complete(o)) => {
                        ctx.emit_row(&output::outcome(&o), &output::outcome_text(&o), output::outcome_csv(&o))?;
                        code = code.max(status_code(&o.status));
                    }
                    Ok(Driven::Interrupted { .. }) => unreachable!("suite runs are never capped"),
                    Err(e) => {
                        eprintln!("{id}: {e}");
                        failed = true;
                    }
                }
            }
            Ok(if failed { EXIT_RUNTIME } else { code })
        }
    }
}

fn search(ctx: &mut Ctx, a: SearchArgs) -> Result<i32, CliError> {
    let exponent = |name: &str| {
        a.exponent.ok_or_else(|| CliError::Usage(format!("{name} needs --exponent")))
    };
    let intrinsic = |name: &str| -> Result<(), CliError> {
        match a.coprime {
            CoprimeArg::Pairwise => Ok(()),
            _ => Err(CliError::Usage(format!("{name} always requires coprime terms; use --coprime pairwise"))),
        }
    };
    let plain_or_pairwise = |name: &str| -> Result<bool, CliError> {
        match a.coprime {
            CoprimeArg::None => Ok(false),
            CoprimeArg::Pairwise => Ok(true),
            CoprimeArg::Pairs => Err(CliError::Usage(format!("--coprime pairs applies to quadruple only, not {name}"))),
        }
    };
    let bounds = |name: &str| -> Result<SearchBounds, CliError> { Ok(SearchBounds::new(a.bound, exponent(name)?)?) };
    let s: Box<dyn RangeSearch> = match a.family {
        Family::Fermat => Box::new(FermatTriples { bounds: bounds("fermat")?, primitive_only: plain_or_pairwise("fermat")? }),
        Family::PairSystem => {
            intrinsic("pair_system")?;
            Box::new(PairSystemSearch { bounds: bounds("pair_system")? })
        }
        Family::Quadruple => {
            let mode = match a.coprime {
                CoprimeArg::Pairwise => QuadrupleMode::FullyPairwise,
                CoprimeArg::Pairs => QuadrupleMode::PairsXyZu,
                CoprimeArg::None => {
                    return Err(CliError::Usage("quadruple needs --coprime pairs or --coprime pairwise".into()))
                }
            };
            Box::new(Quadruple { bounds: bounds("quadruple")?, mode, require_xy_eq_zu: a.xy_eq_zu })
        }
        Family::Sys3 => {
            intrinsic("sys3")?;
            Box::new(Sys3 { bounds: bounds("sys3")? })
        }
        Family::ProductForm => {
            intrinsic("product_form")?;
            Box::new(ProductForm { bounds: bounds("product_form")? })
        }
        Family::ProductSquares => {
            intrinsic("product_squares")?;
            let ring = match a.ring {
                RingArg::Z => Ring::Z,
                RingArg::Zi => Ring::GaussianZ,
            };
            Box::new(ProductSquares::new(a.bound, ring)?)
        }
        Family::EulerProduct => {
            intrinsic("euler_product")?;
            Box::new(EulerProduct { bounds: bounds("euler_product")? })
        }
        Family::Quadratic => {
            intrinsic("quadratic")?;
            Box::new(QuadraticScan::new(a.bound, exponent("quadratic")?)?)
        }
        Family::EqualSums => {
            let mode = if plain_or_pairwise("equal_sums")? { CoprimeMode::Pairwise } else { CoprimeMode::None };
            Box::new(EqualSumsSearch::new(a.h, a.l, exponent("equal_sums")?, a.bound, mode)?)
        }
    };
    let result = run_search(s.as_ref(), ctx.jobs)?;
    for r in &result.records {
        ctx.emit_row(&output::solution(r.id(), r), &output::record_text(r), output::solution_csv(r.id(), r))?;
    }
    if !ctx.json && !ctx.csv {
        writeln!(
            ctx.out,
            "{} solutions; {} candidates, {} failed coprimality",
            result.records.len(),
            result.candidates,
            result.filtered
        )?;
    }
    Ok(if result.records.is_empty() { EXIT_OK } else { EXIT_FOUND })
}

fn poly(ctx: &mut Ctx, expr: &str, fermat_n: Option<u32>, powersum_k: Option<u32>) -> Result<i32, CliError> {
    let parsed = poly_expr::parse_poly(expr).map_err(|e| CliError::Usage(format!("cannot parse {expr:?}: {e}")))?;
    let p = &parsed.poly;
    let report = analyze(p)?;
    let mut m = Map::new();
    m.insert("schema".into(), json!(output::SCHEMA));
    m.insert("type".into(), json!("poly_analysis"));
    m.insert("claim".into(), json!("poly"));
    m.insert("poly".into(), json!(p.to_string()));
    m.insert("coefficients".into(), output::ints(p.coeffs()));
    m.insert("integer_roots".into(), output::ints(&report.integer_roots));
    m.insert("split_type".into(), json!(format!("{:?}", report.split_type)));
    m.insert("residual_factor".into(), report.residual_factor.as_ref().map_or(Value::Null, |r| json!(r.to_string())));
    let mut text = format!(
        "{p}\n  split: {:?}\n  integer roots: [{}]\n",
        report.split_type,
        output::strs(&report.integer_roots)
    );
    if let Some(r) = &report.residual_factor {
        text.push_str(&format!("  residual factor: {r}\n"));
    }
    let mut found = false;
    if let Some(n) = fermat_n {
        let v = match extract_fermat_witness(p, n) {
            Ok(Extraction::Found(w)) => {
                found = true;
                text.push_str(&format!("  witness: {}^{n} + {}^{n} = {}^{n}\n", w.p(), w.q(), w.r()));
                json!({"n": n.to_string(), "found": true, "p": w.p().to_string(), "q": w.q().to_string(),
                       "r": w.r().to_string()})
            }
            Ok(Extraction::Absent(why)) => {
                text.push_str(&format!("  no witness: {}\n", why.code()));
                json!({"n": n.to_string(), "found": false, "reason": why.code()})
            }
            Err(flt_lab_core::Error::Usage(msg)) => {
                text.push_str(&format!("  witness hypotheses fail: {msg}\n"));
                json!({"n": n.to_string(), "found": false, "reason": "hypothesis", "detail": msg})
            }
            Err(e) => return Err(e.into()),
        };
        m.insert("fermat".into(), v);
    }
    if let Some(k) = powersum_k {
        let v = match extract_powersum_identity(p, k) {
            Ok(Extraction::Found(inst)) => {
                found = true;
                text.push_str(&format!("  identity: {inst}\n"));
                json!({"k": k.to_string(), "found": true, "lhs": output::ints(inst.lhs()),
                       "rhs": output::ints(inst.rhs())})
            }
            Ok(Extraction::Absent(why)) => {
                text.push_str(&format!("  no identity: {}\n", why.code()));
                json!({"k": k.to_string(), "found": false, "reason": why.code()})
            }
            Err(flt_lab_core::Error::Usage(msg)) => {
                text.push_str(&format!("  identity hypotheses fail: {msg}\n"));
                json!({"k": k.to_string(), "found": false, "reason": "hypothesis", "detail": msg})
            }
            Err(e) => return Err(e.into()),
        };
        m.insert("powersum".into(), v);
    }
    ctx.emit(&Value::Object(m), text.trim_end())?;
    Ok(if found { EXIT_FOUND } else { EXIT_OK })
}

fn appendix(ctx: &mut Ctx) -> Result<i32, CliError> {
    for r in verify_appendix()? {
        ctx.emit_row(&output::appendix_line(&r), output::appendix_text(&r).trim_end(), output::appendix_csv(&r))?;
    }
    Ok(EXIT_OK)
}
