mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Emitter, Format, Kind, OutputRecord};
use stieltjes_core::hurwitz::CauchyRingParams;
use stieltjes_core::identities::{identity_names, matches_filter, run_suite, ParamGrid, RAMANUJAN_DEFAULT_TERMS};
use stieltjes_core::oracle::{default_j_max, stieltjes_cauchy, stieltjes_hasse, StieltjesIndex, StieltjesResult};
use stieltjes_core::rational::{stieltjes_at_one, stieltjes_rational_bell, stieltjes_rational_cck};
use stieltjes_core::{make_context, BigReal, Error, PrecisionContext, RationalArg};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "stieltjes", version, about = "Generalized Stieltjes constants γ_n(x) at arbitrary precision")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one γ_n(x).
    Compute(ComputeArgs),
    /// Tabulate γ_m(p/q) for 0 <= m <= n-max and every reduced p/q.
    Table(TableArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// Target significant digits.
    #[arg(long, env = "STIELTJES_DEFAULT_DIGITS", default_value_t = 30)]
    digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Bell,
    Cck,
    Hasse,
    Cauchy,
    All,
}

#[derive(Args)]
struct ComputeArgs {
    /// Stieltjes index.
    #[arg(long)]
    n: u32,
    #[arg(long, requires = "q", conflicts_with = "x")]
    p: Option<u64>,
    #[arg(long, requires = "p", conflicts_with = "x")]
    q: Option<u64>,
    /// Decimal argument x > 0.
    #[arg(long, required_unless_present = "p")]
    x: Option<String>,
    /// Defaults to bell for p/q and cauchy for a decimal x.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    Bell,
    Cck,
    Cauchy,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    n_max: u32,
    #[arg(long)]
    q: u64,
    #[arg(long, value_enum, default_value_t = TableMethod::Bell)]
    method: TableMethod,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name, glob (`prop-*`), comma-separated list, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 5)]
    q_max: u64,
    /// Series terms for ramanujan-cos-sum.
    #[arg(long, default_value_t = RAMANUJAN_DEFAULT_TERMS)]
    terms: u64,
    #[command(flatten)]
    common: Common,
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ZeroDigits
            | Error::InvalidRational { .. }
            | Error::IndexCap { .. }
            | Error::UnknownIdentity(_)
            | Error::MissingParameter { .. }
            | Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_NUMERIC,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_NUMERIC,
            message: format!("output error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn err_text(v: &BigReal) -> String {
    v.to_sci(3)
}

fn value_record(kind: Kind, ctx: &PrecisionContext, n: u32, r: &StieltjesResult) -> OutputRecord {
    let mut rec = OutputRecord::new(kind, ctx.target_digits());
    rec.n = Some(n);
    rec.method = Some(r.method.as_str().to_string());
    rec.value = Some(ctx.fmt(&r.value));
    rec.err_estimate = Some(err_text(&r.err_estimate));
    rec
}

enum Arg {
    Rational(RationalArg),
    Decimal(String, BigReal),
}

fn compute_one(method: MethodArg, n: u32, arg: &Arg, ctx: &PrecisionContext) -> Result<StieltjesResult, Failure> {
    let idx = StieltjesIndex::new(n)?;
    let x = match arg {
        Arg::Rational(a) => a.to_real(ctx),
        Arg::Decimal(_, v) => v.clone(),
    };
    let r = match (method, arg) {
        (MethodArg::Bell, Arg::Rational(a)) => stieltjes_rational_bell(n, *a, ctx)?,
        (MethodArg::Cck, Arg::Rational(a)) => stieltjes_rational_cck(n, *a, ctx)?,
        (MethodArg::Bell | MethodArg::Cck, Arg::Decimal(..)) => {
            return Err(usage("closed-form methods need --p and --q"));
        }
        (MethodArg::Hasse, _) => stieltjes_hasse(idx, &x, ctx, default_j_max(ctx))?,
        (MethodArg::Cauchy, _) => stieltjes_cauchy(idx, &x, ctx, &CauchyRingParams::default_for(ctx))?,
        (MethodArg::All, _) => unreachable!("expanded by the caller"),
    };
    Ok(r)
}

fn cmd_compute(args: ComputeArgs) -> Result<u8, Failure> {
    let ctx = make_context(args.common.digits)?;
    let arg = match (args.p, args.q, &args.x) {
        (Some(p), Some(q), _) => Arg::Rational(RationalArg::new(p, q)?),
        (_, _, Some(x)) => {
            let v = ctx.parse(x)?;
            if v.is_negative() || v.is_zero() {
                return Err(usage("--x must be positive"));
            }
            Arg::Decimal(x.trim().to_string(), v)
        }
        _ => return Err(usage("give --p and --q, or --x")),
    };
    let method = args.method.unwrap_or(match arg {
        Arg::Rational(_) => MethodArg::Bell,
        Arg::Decimal(..) => MethodArg::Cauchy,
    });
    let methods: Vec<MethodArg> = match (method, &arg) {
        (MethodArg::All, Arg::Rational(_)) => vec![MethodArg::Bell, MethodArg::Cck, MethodArg::Hasse, MethodArg::Cauchy],
        (MethodArg::All, Arg::Decimal(..)) => vec![MethodArg::Hasse, MethodArg::Cauchy],
        (m, _) => vec![m],
    };
    let mut results = Vec::with_capacity(methods.len());
    for m in methods {
        results.push(compute_one(m, args.n, &arg, &ctx)?);
    }
    if let (MethodArg::All, Arg::Rational(a)) = (method, &arg) {
        if a.p() == a.q() {
            results.push(stieltjes_at_one(args.n, &ctx)?);
        }
    }
    let mut deviation: Option<(BigReal, bool)> = None;
    if results.len() > 1 {
        let mut worst = ctx.zero();
        let mut agree = true;
        for (i, a) in results.iter().enumerate() {
            for b in &results[i + 1..] {
                let d = (&a.value - &b.value).abs();
                let budget = &(&a.err_estimate + &b.err_estimate) + ctx.tolerance();
                agree &= d <= budget;
                if d > worst {
                    worst = d;
                }
            }
        }
        deviation = Some((worst, agree));
    }
    let stdout = io::stdout();
    let mut em = Emitter::new(args.common.format, stdout.lock());
    for r in &results {
        let mut rec = value_record(Kind::Value, &ctx, args.n, r);
        match &arg {
            Arg::Rational(a) => {
                rec.p = Some(a.p());
                rec.q = Some(a.q());
                rec.x = Some(a.to_string());
            }
            Arg::Decimal(s, _) => rec.x = Some(s.clone()),
        }
        rec.max_deviation = deviation.as_ref().map(|(d, _)| err_text(d));
        em.emit(&rec)?;
    }
    if let Some((d, agree)) = &deviation {
        em.note(&format!(
            "max pairwise deviation {} ({})",
            err_text(d),
            if *agree { "within combined error estimates" } else { "EXCEEDS combined error estimates" }
        ))?;
        if !agree {
            return Ok(EXIT_FAILED);
        }
    }
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<u8, Failure> {
    if args.q == 0 {
        return Err(usage("--q must be positive"));
    }
    StieltjesIndex::new(args.n_max)?;
    let ctx = make_context(args.common.digits)?;
    let ring = CauchyRingParams::default_for(&ctx);
    let stdout = io::stdout();
    let mut em = Emitter::new(args.common.format, stdout.lock());
    let q = args.q;
    let mut ps: Vec<u64> = (1..q).filter(|&p| num_integer::gcd(p, q) == 1).collect();
    ps.push(q);
    for m in 0..=args.n_max {
        for &p in &ps {
            let a = RationalArg::new(p, q)?;
            let r = match args.method {
                TableMethod::Cauchy => stieltjes_cauchy(StieltjesIndex::new(m)?, &a.to_real(&ctx), &ctx, &ring)?,
                _ if p == q => stieltjes_at_one(m, &ctx)?,
                TableMethod::Bell => stieltjes_rational_bell(m, a, &ctx)?,
                TableMethod::Cck => stieltjes_rational_cck(m, a, &ctx)?,
            };
            let mut rec = value_record(Kind::TableRow, &ctx, m, &r);
            rec.p = Some(p);
            rec.q = Some(q);
            rec.x = Some(if p == q { String::from("1") } else { format!("{p}/{q}") });
            em.emit(&rec)?;
        }
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let names: Vec<&str> = identity_names().filter(|n| matches_filter(&args.suite, n)).collect();
    if names.is_empty() {
        return Err(Error::UnknownIdentity(args.suite.clone()).into());
    }
    let ctx = make_context(args.common.digits)?;
    let grid = ParamGrid {
        q_max: args.q_max,
        ramanujan_terms: args.terms,
    };
    let stdout = io::stdout();
    let mut em = Emitter::new(args.common.format, stdout.lock());
    let (mut total, mut passed) = (0usize, 0usize);
    for name in names {
        for r in run_suite(Some(name), &grid, &ctx)? {
            total += 1;
            passed += usize::from(r.pass);
            let mut rec = OutputRecord::new(Kind::Identity, ctx.target_digits());
            rec.name = Some(r.name.clone());
            rec.params = Some(r.params.to_string());
            rec.n = r.params.n;
            rec.p = r.params.p;
            rec.q = r.params.q;
            rec.x = r.params.x.map(|x| x.to_string());
            rec.value = Some(ctx.fmt(&r.lhs));
            rec.residual = Some(err_text(&r.residual));
            rec.tolerance = Some(err_text(&r.tolerance));
            rec.pass = Some(r.pass);
            em.emit(&rec)?;
        }
    }
    em.note(&format!("summary: {passed}/{total} passed"))?;
    Ok(if passed == total { 0 } else { EXIT_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = io::stdout().flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
