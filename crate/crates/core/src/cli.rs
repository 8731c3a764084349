//! JSON command-line front end. [`run`] never panics on bad input: errors are
//! printed as `{"error": {"code", "message"}}` and mapped to exit codes
//! (2 out of family, 3 parse, 4 internal).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alexander::{
    alexander_of_bridge, alexander_poly, determinant, is_monic, lspace_form, lspace_surgery_verdict,
};
use crate::certify::{
    certify, mutation_suite, Check, SampleBudget, Verdict, DEFAULT_SEED, SCHEMA_VERSION, SEED_ENV,
};
use crate::cfrac::{double_branched_cover, even_expansion, genus, is_fibered, knot_params, TwoBridgeParams};
use crate::error::{Error, Result};
use crate::groups::{g1_bc_presentation, presentations, FreeWord};
use crate::orders::field::{min_poly_two_cos, NumberField};
use crate::orders::{family_is_positive, ConeOracle, G1Order, G1Realization, G2Order, OrderFamilySpec};

#[derive(Parser, Debug)]
#[command(name = "knotorder", version, about = "Two-bridge knot invariants and left-order certificates for 2*c2 surgery")]
struct Cli {
    /// Write the JSON result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continued fraction, lens space, genus, Alexander polynomial, L-space verdict.
    KnotInfo(KnotArgs),
    /// Presentations of G1, G2 and the amalgam, with the gluing map.
    Presentation(PresentationArgs),
    /// Sign of a word under a member of the G1 or G2 order family.
    OrderSign(OrderSignArgs),
    /// `order sign ...`, same as `order-sign`.
    Order {
        #[command(subcommand)]
        command: OrderCommand,
    },
    /// Run the certificate checks; exit 0 iff certified.
    Certify(CertifyArgs),
    /// Fixtures, exact identities and harness mutation tests.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum OrderCommand {
    Sign(OrderSignArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct KnotArgs {
    #[arg(long, allow_hyphen_values = true)]
    c1: i64,
    #[arg(long, allow_hyphen_values = true)]
    c2: i64,
}

#[derive(Args, Debug)]
struct PresentationArgs {
    #[command(flatten)]
    knot: KnotArgs,
    /// Also give G1 over the generators b, c = b a^-1.
    #[arg(long)]
    bc: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum GroupArg {
    G1,
    G2,
}

#[derive(Args, Debug)]
struct OrderSignArgs {
    #[arg(long, value_enum)]
    group: GroupArg,
    #[command(flatten)]
    knot: KnotArgs,
    /// Conjugator g: w is positive iff g^-1 w g is positive in the base order.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    conjugator: String,
    /// Use the opposite positive cone.
    #[arg(long)]
    reversed: bool,
    /// G2 only: reverse the order on ker π, keeping the quotient order.
    #[arg(long)]
    kernel_reversed: bool,
    /// The word, e.g. "b^-1 a a".
    #[arg(allow_hyphen_values = true)]
    word: String,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum CheckArg {
    NormalForms,
    Cone,
    Navas,
    Restrict,
    Compat,
    All,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[command(flatten)]
    knot: KnotArgs,
    #[arg(long, default_value_t = 5)]
    radius: usize,
    #[arg(long, default_value_t = 4)]
    conj_len: usize,
    #[arg(long, default_value_t = 5)]
    peripheral_box: i64,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 200)]
    members: usize,
    /// Defaults to $KNOTORDER_SEED, then to the built-in seed.
    #[arg(long)]
    seed: Option<u64>,
    /// May be repeated.
    #[arg(long, value_enum, default_value = "all")]
    check: Vec<CheckArg>,
}

/// Parses `argv` (including the program name), runs the command and writes
/// JSON to standard output or `--out`. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_with(argv, &mut lock)
}

/// [`run`] with an explicit output sink.
pub fn run_with<I, T>(argv: I, sink: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(sink, "{e}");
                return 0;
            }
            let err = Error::Parse(e.render().to_string().trim().to_string());
            emit(sink, &error_json(&err));
            return err.exit_code();
        }
    };
    match dispatch(&cli.command) {
        Ok((value, code)) => {
            if let Err(e) = emit_checked(sink, cli.out.as_ref(), &value) {
                emit(sink, &error_json(&e));
                return e.exit_code();
            }
            code
        }
        Err(e) => {
            emit(sink, &error_json(&e));
            e.exit_code()
        }
    }
}

fn error_json(e: &Error) -> Value {
    json!({ "error": { "code": e.code_name(), "message": e.to_string() } })
}

fn emit(sink: &mut dyn Write, value: &Value) {
    let _ = writeln!(sink, "{}", serde_json::to_string_pretty(value).expect("JSON value"));
}

fn emit_checked(sink: &mut dyn Write, out: Option<&PathBuf>, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("JSON value");
    match out {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            let _ = writeln!(sink, "{text}");
            Ok(())
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn dispatch(cmd: &Command) -> Result<(Value, i32)> {
    match cmd {
        Command::KnotInfo(k) => Ok((knot_info(&knot_params(k.c1, k.c2)?)?, 0)),
        Command::Presentation(a) => Ok((presentation(&knot_params(a.knot.c1, a.knot.c2)?, a.bc), 0)),
        Command::OrderSign(a) | Command::Order { command: OrderCommand::Sign(a) } => Ok((order_sign(a)?, 0)),
        Command::Certify(a) => certify_cmd(a),
        Command::Selftest => Ok(selftest()),
    }
}

/// The `knot-info` object.
pub fn knot_info(params: &TwoBridgeParams) -> Result<Value> {
    let delta = alexander_poly(params)?;
    let (p, q) = double_branched_cover(params);
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "c1": params.c1,
        "c2": params.c2,
        "b1": params.b1,
        "b2": params.b2,
        "mirrored": params.mirrored,
        "p": params.p,
        "q": params.q,
        "slope": params.slope,
        "fibered": is_fibered(params),
        "genus": genus(params),
        "lens": [p, q],
        "even_expansion": even_expansion(params).entries(),
        "alexander": delta.to_string(),
        "alexander_coeffs": to_value(&delta),
        "determinant": determinant(&delta) as u64,
        "monic": is_monic(&delta),
        "lspace_form": to_value(&lspace_form(&delta)?),
        "verdict": to_value(&lspace_surgery_verdict(params)?),
    }))
}

fn presentation(params: &TwoBridgeParams, bc: bool) -> Value {
    let pres = presentations(params);
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "c1": params.c1,
        "c2": params.c2,
        "g1": to_value(&pres.g1),
        "g2": to_value(&pres.g2),
        "amalgam": to_value(&pres.amalgam),
        "gluing": { "mu": "y", "h": "z x^2" },
    });
    if bc {
        v["g1_bc"] = to_value(&g1_bc_presentation(params));
    }
    v
}

fn order_sign(a: &OrderSignArgs) -> Result<Value> {
    let params = knot_params(a.knot.c1, a.knot.c2)?;
    let word = FreeWord::parse(&a.word)?;
    let conjugator = FreeWord::parse(&a.conjugator)?;
    let spec = OrderFamilySpec { conjugator: conjugator.clone(), reversed: a.reversed };
    let oracle: Box<dyn ConeOracle> = match a.group {
        GroupArg::G1 if a.kernel_reversed => {
            return Err(Error::Parse("--kernel-reversed applies to g2 only".into()))
        }
        GroupArg::G1 => Box::new(G1Order::new(&params)?),
        GroupArg::G2 => Box::new(G2Order::with_kernel_reversed(&params, a.kernel_reversed)),
    };
    word.check_alphabet(oracle.alphabet())?;
    conjugator.check_alphabet(oracle.alphabet())?;
    let d = family_is_positive(oracle.as_ref(), &spec, &word)?;
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "group": to_value(&oracle.group()),
        "c1": params.c1,
        "c2": params.c2,
        "word": word.to_string(),
        "conjugator": conjugator.to_string(),
        "reversed": a.reversed,
        "kernel_reversed": a.kernel_reversed,
        "sign": to_value(&d.sign),
        "trace": to_value(&d.trace),
    }))
}

/// `--seed`, else `$KNOTORDER_SEED`, else [`DEFAULT_SEED`].
fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV}={v} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn certify_cmd(a: &CertifyArgs) -> Result<(Value, i32)> {
    let params = knot_params(a.knot.c1, a.knot.c2)?;
    let budget = SampleBudget {
        radius: a.radius,
        conj_len: a.conj_len,
        peripheral_box: a.peripheral_box,
        samples: a.samples,
        members: a.members,
        seed: resolve_seed(a.seed)?,
    };
    let mut checks = Vec::new();
    for c in &a.check {
        match c {
            CheckArg::All => checks.extend(Check::ALL),
            CheckArg::NormalForms => checks.push(Check::NormalForms),
            CheckArg::Cone => checks.push(Check::Cone),
            CheckArg::Navas => checks.push(Check::Navas),
            CheckArg::Restrict => checks.push(Check::Restrict),
            CheckArg::Compat => checks.push(Check::Compat),
        }
    }
    let report = certify(&params, &budget, &checks)?;
    let code = match report.verdict {
        Verdict::Certified => 0,
        Verdict::Refuted => 1,
        Verdict::Error => 4,
    };
    Ok((to_value(&report), code))
}

#[derive(Serialize)]
struct SelftestItem {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn item(name: &'static str, check: impl FnOnce() -> Result<String>) -> SelftestItem {
    match check() {
        Ok(detail) => SelftestItem { name, passed: true, detail },
        Err(e) => SelftestItem { name, passed: false, detail: e.to_string() },
    }
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InternalCheckFailed(msg.into()))
    }
}

/// Fixtures, exact identities and a reduced harness run. Exit 0 iff all pass.
fn selftest() -> (Value, i32) {
    let mut items = Vec::new();
    items.push(item("alexander b(3,1)", || {
        let d = alexander_of_bridge(3, 1)?;
        ensure(d.to_string() == "t - 1 + t^-1", format!("got {d}"))?;
        Ok(d.to_string())
    }));
    items.push(item("alexander b(5,3)", || {
        let d = alexander_of_bridge(5, 3)?;
        ensure(determinant(&d) == 5, format!("|Δ(-1)| = {}", determinant(&d)))?;
        Ok(d.to_string())
    }));
    items.push(item("lifted relations b1 = 1..5", || {
        for b1 in 1..=5 {
            // construction checks ã^2 = T_1, b̃^n = T_1 and μ̃(p_0) = p_0 exactly
            G1Realization::new(&knot_params(2 * b1 + 1, 4)?)?;
        }
        Ok("ã^2 = b̃^n = T_1 exactly".into())
    }));
    items.push(item("corrupted minimal polynomial", || {
        let mut bad = min_poly_two_cos(7);
        bad[0] += 1;
        let approx = 2.0 * (std::f64::consts::PI / 7.0).cos();
        match NumberField::with_min_poly(bad, approx) {
            Err(Error::ConstructionFailed(m)) => Ok(format!("rejected: {m}")),
            Err(e) => Err(Error::InternalCheckFailed(format!("wrong error {e}"))),
            Ok(_) => Err(Error::InternalCheckFailed("accepted a corrupted polynomial".into())),
        }
    }));
    let small = SampleBudget { radius: 3, conj_len: 2, peripheral_box: 3, samples: 300, members: 16, seed: DEFAULT_SEED };
    items.push(item("mutation tests (3,4)", || {
        let outcomes = mutation_suite(&knot_params(3, 4)?, &small)?;
        let missed: Vec<&str> = outcomes.iter().filter(|m| !m.detected).map(|m| m.mutation.name()).collect();
        ensure(missed.is_empty(), format!("undetected: {missed:?}"))?;
        Ok(format!("{} of {} corruptions detected", outcomes.len(), outcomes.len()))
    }));
    items.push(item("small certificate (3,4)", || {
        let r = certify(&knot_params(3, 4)?, &small, &Check::ALL)?;
        ensure(r.is_certified(), format!("verdict {:?}", r.verdict))?;
        Ok(format!("{} cases", r.total_cases()))
    }));
    let passed = items.iter().all(|i| i.passed);
    let value = json!({ "schema_version": SCHEMA_VERSION, "passed": passed, "checks": to_value(&items) });
    (value, if passed { 0 } else { 4 })
}
