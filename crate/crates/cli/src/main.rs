use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use valueset_core::artin::{family_polynomial, l_degree_table_of, ramification_profile_of};
use valueset_core::bounds::{c_of_d, CVariant};
use valueset_core::curves::{count_t2, count_t3, count_t4};
use valueset_core::sweep::{run_sweep, summarize, write_csv};
use valueset_core::valueset::{
    bsd_identity_check, classical_bounds, cycle_type_census, genericity_test, normalized_deviation,
};
use valueset_core::*;

const EXIT_IDENTITY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "valueset", version, about = "Value sets of polynomials over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Preimage spectrum, N_f, classical bounds and the BSD identity
    Spectrum(PolyArgs),
    /// N_f for x^4 + ax^2 + bx over every prime up to --pmax, as CSV
    Sweep(SweepArgs),
    /// Representation table, L-degrees and the sqrt(q) constant
    Bound(BoundArgs),
    /// Point counts on the curve T_r
    Curve(CurveArgs),
    /// L-polynomial of T_2 from counts over F_p and F_p^2
    Zeta(QuarticArgs),
    /// Multiplicities m_{rho,r} and characters of S_d
    Repr(DegreeArg),
    /// Ramification and tame L-degrees for the degree-d family
    Ldeg(LdegArgs),
    /// Factorization shapes of f(x) - y and the genericity verdict
    Census(PolyArgs),
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic
    #[arg(short)]
    p: u64,
    /// Extension degree
    #[arg(short, default_value_t = 1)]
    m: usize,
}

#[derive(Args)]
struct PolyArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Coefficients, low degree first, comma separated
    #[arg(short, allow_hyphen_values = true)]
    f: String,
}

#[derive(Args)]
struct QuarticArgs {
    #[arg(short)]
    p: u64,
    #[arg(short, allow_hyphen_values = true, default_value_t = 1)]
    a: i64,
    #[arg(short, allow_hyphen_values = true, default_value_t = -1)]
    b: i64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(short, allow_hyphen_values = true, default_value_t = 1)]
    a: i64,
    #[arg(short, allow_hyphen_values = true, default_value_t = -1)]
    b: i64,
    #[arg(long, default_value_t = 37830)]
    pmax: u64,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// CSV destination; standard output when absent
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(short)]
    d: usize,
    #[arg(short)]
    p: Option<u64>,
    #[arg(short, allow_hyphen_values = true, default_value_t = 1)]
    a: i64,
    #[arg(short, allow_hyphen_values = true, default_value_t = -1)]
    b: i64,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(short, default_value_t = 2)]
    r: usize,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(short, allow_hyphen_values = true, default_value_t = 1)]
    a: i64,
    #[arg(short, allow_hyphen_values = true, default_value_t = -1)]
    b: i64,
}

#[derive(Args)]
struct DegreeArg {
    #[arg(short)]
    d: usize,
}

#[derive(Args)]
struct LdegArgs {
    #[arg(short, default_value_t = 4)]
    d: usize,
    #[arg(short)]
    p: u64,
    #[arg(short, allow_hyphen_values = true, default_value_t = 1)]
    a: i64,
    #[arg(short, allow_hyphen_values = true, default_value_t = -1)]
    b: i64,
}

enum Failure {
    Usage(String),
    Domain(Error),
    Identity(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_)
            | Error::UnsupportedDegree(_)
            | Error::InvalidDegree(_)
            | Error::InvalidInput(_) => Failure::Usage(e.to_string()),
            Error::InternalInconsistency(msg) => Failure::Identity(msg),
            other => Failure::Domain(other),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Bound(args) => cmd_bound(&args),
        Command::Curve(args) => cmd_curve(&args),
        Command::Zeta(args) => cmd_zeta(&args),
        Command::Repr(args) => cmd_repr(&args),
        Command::Ldeg(args) => cmd_ldeg(&args),
        Command::Census(args) => cmd_census(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Identity(msg)) => {
            eprintln!("identity failure: {msg}");
            ExitCode::from(EXIT_IDENTITY)
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn seed() -> std::result::Result<u64, Failure> {
    match std::env::var("VALUESET_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("VALUESET_SEED must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(0),
    }
}

fn field(args: &FieldArgs) -> std::result::Result<FieldCtx, Failure> {
    if args.m == 1 {
        Ok(make_prime_field(args.p)?)
    } else {
        Ok(make_extension(args.p, args.m, seed()?)?)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn cmd_spectrum(args: &PolyArgs) -> Outcome {
    let ctx = field(&args.field)?;
    let f = UniPoly::parse(&ctx, &args.f)?;
    let s = preimage_spectrum(&ctx, &f)?;
    let b = classical_bounds(&s);
    println!("{}", s.render());
    println!("N_f = {}", s.n_f);
    println!("permutation: {}", if b.is_permutation { "yes" } else { "no" });
    println!("wan bound: {}", if b.is_permutation { "vacuous" } else { yes_no(b.wan_ok) });
    println!("trivial bound: {}", yes_no(b.trivial_ok));
    let n: Vec<String> = tuple_counts(&s).iter().map(u128::to_string).collect();
    println!("n_r' = {}", n.join(" "));
    if let (4, Ok(v)) = (s.d, quartic_verdict(s.q, s.n_f)) {
        let (exact, d_f) = normalized_deviation(&s)?;
        println!("N_f - 5q/8 = {exact}, d_f = {d_f:.6}, quartic bound: {v}");
    }
    if !bsd_identity_check(&s) {
        println!("bsd identity: FAIL");
        return Err(Failure::Identity("sum (-1)^r n_r'/r! != q - N_f".into()));
    }
    println!("bsd identity: ok");
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Outcome {
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let rows = run_sweep(args.a, args.b, args.pmax, jobs)?;
    let summary = summarize(&rows).render();
    match &args.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_csv(&mut w, &rows)?;
            w.flush()?;
            print!("{summary}");
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            write_csv(&mut w, &rows)?;
            w.flush()?;
            eprint!("{summary}");
        }
    }
    Ok(())
}

fn family_profile(d: usize, p: u64, a: i64, b: i64) -> std::result::Result<(FieldCtx, RamificationProfile), Failure> {
    let ctx = make_prime_field(p)?;
    let (ea, eb) = (ctx.from_i64(a), ctx.from_i64(b));
    let prof = if d == 4 {
        ramification_profile(&ctx, &ea, &eb)?
    } else {
        ramification_profile_of(&ctx, &family_polynomial(&ctx, d, &ea, &eb)?)?
    };
    Ok((ctx, prof))
}

fn degree_table(d: usize, p: u64, a: i64, b: i64) -> std::result::Result<LDegreeTable, Failure> {
    if d == 4 {
        let ctx = make_prime_field(p)?;
        return Ok(l_degree_table(&ctx, &ctx.from_i64(a), &ctx.from_i64(b))?);
    }
    let (_, prof) = family_profile(d, p, a, b)?;
    Ok(l_degree_table_of(&prof)?)
}

fn cmd_bound(args: &BoundArgs) -> Outcome {
    let table = repr_table(args.d)?;
    print!("{}", table.render());
    let Some(p) = args.p else {
        println!("mu_{} = {}", args.d, mu(args.d)?);
        for (name, v) in [
            ("hyperplane", CVariant::Hyperplane),
            ("singular", CVariant::Singular),
            ("theorem", CVariant::Theorem),
        ] {
            println!("C({}) {name} = {:.6}", args.d, c_of_d(args.d, v)?);
        }
        return Ok(());
    };
    let degs = degree_table(args.d, p, args.a, args.b)?;
    println!();
    print!("{}", degs.render());
    println!();
    print!("{}", theorem_constant(&table, &degs)?.render());
    Ok(())
}

fn cmd_curve(args: &CurveArgs) -> Outcome {
    let ctx = field(&args.field)?;
    let (a, b) = (ctx.from_i64(args.a), ctx.from_i64(args.b));
    let counts = match args.r {
        2 => count_t2(&ctx, &a, &b)?,
        3 => count_t3(&ctx, &a, &b)?,
        4 => count_t4(&ctx, &a, &b)?,
        r => return Err(Failure::Usage(format!("r must be 2, 3 or 4, got {r}"))),
    };
    println!("{}", counts.render());
    let f = UniPoly::from_ints(&ctx, &[0, args.b, args.a, 0, 1]);
    let n = tuple_counts(&preimage_spectrum(&ctx, &f)?)[args.r - 2];
    if counts.off_diagonal() as u128 != n {
        return Err(Failure::Identity(format!(
            "affine - diagonal = {} but n_{}' = {n}",
            counts.off_diagonal(),
            args.r
        )));
    }
    println!("n_{}' = {n}: cross-check ok", args.r);
    Ok(())
}

fn cmd_zeta(args: &QuarticArgs) -> Outcome {
    let lp = t2_l_polynomial(args.p, args.a, args.b)?;
    println!("{}", lp.render());
    println!("c_2 = q: ok, c_1^2 <= 4q: ok");
    Ok(())
}

fn cmd_repr(args: &DegreeArg) -> Outcome {
    print!("{}", repr_table(args.d)?.render());
    Ok(())
}

fn cmd_ldeg(args: &LdegArgs) -> Outcome {
    let (ctx, prof) = family_profile(args.d, args.p, args.a, args.b)?;
    print!("{}", prof.render(&ctx));
    println!();
    print!("{}", degree_table(args.d, args.p, args.a, args.b)?.render());
    Ok(())
}

fn cmd_census(args: &PolyArgs) -> Outcome {
    let ctx = field(&args.field)?;
    let f = UniPoly::parse(&ctx, &args.f)?;
    let census = cycle_type_census(&ctx, &f)?;
    print!("{}", census.render());
    print!("{}", genericity_test(&census, ctx.q())?.render());
    Ok(())
}
