//! Command-line front end: tables, bounds, zero enclosures and the
//! recurrence-versus-series checks.
//!
//! Exit codes: 0 success, 1 a check ran and failed, 2 bad input or unmet
//! precondition, 3 pole or degenerate parameters.

pub mod record;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rayleigh::arith::parse_rat;
use rayleigh::bounds::{euler_rayleigh_sequence, RealZeros};
use rayleigh::oracle::{chf_sums_from_series, sigma_oracle_table, tau_oracle_table};
use rayleigh::zeros::{find_zeros, partial_sum_enclosure, ZeroFunction};
use rayleigh::{
    derive_pqr, s_table, sigma_table, tau_table, verify_ode, BigRat, ChfParams, Error, MercerParams,
    NuMode, SumsTable,
};

use record::{family_params, OutputRecord, ZerosRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

fn rational(s: &str) -> Result<BigRat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn nu_mode(s: &str) -> Result<NuMode, String> {
    NuMode::parse(s).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "rayleigh", version, about = "Exact power sums of reciprocal zeros")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tables of power sums from the Riccati recurrences.
    Sums {
        #[command(subcommand)]
        family: SumsFamily,
    },
    /// Euler–Rayleigh brackets for the smallest squared zero.
    Bounds(BoundsArgs),
    /// Certified enclosures of the first positive zeros in t = z².
    Zeros(ZerosArgs),
    /// Compare the recurrence table with the series oracle entry by entry.
    Verify(VerifyArgs),
    /// Check that the Mercer combination satisfies its second-order ODE.
    OdeCheck(OdeArgs),
}

#[derive(Subcommand, Debug)]
enum SumsFamily {
    /// σₙ(ν) for J_ν.
    Sigma {
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// τₙ(ν) for az²J_ν″ + bzJ_ν′ + cJ_ν.
    Tau {
        #[command(flatten)]
        mercer: MercerArgs,
        #[command(flatten)]
        table: TableArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// S_p for ₁F₁(a; b; z), p = 2..=order.
    Chf {
        #[command(flatten)]
        chf: ChfArgs,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct TableArgs {
    /// A rational p/q or integer, or "symbolic".
    #[arg(long, allow_hyphen_values = true, value_parser = nu_mode)]
    nu: NuMode,
    #[arg(long)]
    order: usize,
}

#[derive(Args, Debug)]
struct MercerArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a: BigRat,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    b: BigRat,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    c: BigRat,
}

#[derive(Args, Debug)]
struct ChfArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a: BigRat,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    b: BigRat,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
    Csv,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Print values as decimals with this many digits, rounded from the exact value.
    #[arg(long)]
    decimal: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Sigma,
    Tau,
    Chf,
}

/// Family selection with optional parameters, validated per family.
#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    a: Option<BigRat>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    b: Option<BigRat>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    c: Option<BigRat>,
    #[arg(long, allow_hyphen_values = true, value_parser = nu_mode)]
    nu: Option<NuMode>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Largest n; the table is built through n + 1.
    #[arg(long)]
    order: usize,
    /// Width of the enclosure of each lower bound.
    #[arg(long, value_parser = rational, default_value = "1/1000000000000")]
    precision: BigRat,
    /// Vouch that all zeros are real and positive (needed for tau and chf).
    #[arg(long)]
    assert_real_zeros: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    count: usize,
    #[arg(long, value_parser = rational, default_value = "1/100000000")]
    precision: BigRat,
    #[arg(long)]
    assert_real_zeros: bool,
    /// Also enclose Σ ζ_k^{-n} for this n (repeatable).
    #[arg(long = "sum")]
    sums: Vec<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    order: usize,
}

#[derive(Args, Debug)]
struct OdeArgs {
    #[command(flatten)]
    mercer: MercerArgs,
    #[arg(long, allow_hyphen_values = true, value_parser = nu_mode)]
    nu: NuMode,
    /// Highest power of t = z² checked.
    #[arg(long)]
    order: usize,
}

/// Failure of a command: either a library error or a usage problem found
/// after parsing.
enum Failure {
    Math(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the CLI on `argv` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_degenerate() {
                EXIT_DEGENERATE
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Sums { family } => sums(family, out),
        Command::Bounds(args) => bounds(args, out),
        Command::Zeros(args) => zeros(args, out),
        Command::Verify(args) => verify(args, out),
        Command::OdeCheck(args) => ode_check(args, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("records serialize") + "\n"
}

fn write_table(table: &SumsTable, output: &OutputArgs, out: &mut dyn Write) -> Outcome {
    let record = OutputRecord::from_table(table, output.decimal)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let text = match output.format {
        Format::Plain => render::plain(table, &record, output.decimal),
        Format::Json => to_json(&record),
        Format::Latex => render::latex(table, output.decimal),
        Format::Csv => render::csv(table, output.decimal)
            .map_err(|e| Failure::Usage(format!("csv: {e}")))?,
    };
    emit(out, &text)
}

fn sums(family: SumsFamily, out: &mut dyn Write) -> Outcome {
    match family {
        SumsFamily::Sigma { table, output } => {
            write_table(&sigma_table(table.order, &table.nu)?, &output, out)
        }
        SumsFamily::Tau {
            mercer,
            table,
            output,
        } => {
            let params = derive_pqr(mercer.a, mercer.b, mercer.c, table.nu);
            write_table(&tau_table(&params, table.order)?, &output, out)
        }
        SumsFamily::Chf { chf, order, output } => {
            let params = ChfParams::new(chf.a, chf.b)?;
            write_table(&s_table(&params, order)?, &output, out)
        }
    }
}

/// The parameters of one family, checked for presence.
enum Selected {
    Sigma(NuMode),
    Tau(MercerParams),
    Chf(ChfParams),
}

impl FamilyArgs {
    fn select(self) -> Result<Selected, Failure> {
        let need = |v: Option<BigRat>, flag: &str| {
            v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for this family")))
        };
        let nu = || {
            self.nu
                .clone()
                .ok_or_else(|| Failure::Usage("--nu is required for this family".into()))
        };
        Ok(match self.family {
            FamilyName::Sigma => Selected::Sigma(nu()?),
            FamilyName::Tau => {
                let mode = nu()?;
                Selected::Tau(derive_pqr(
                    need(self.a, "a")?,
                    need(self.b, "b")?,
                    need(self.c, "c")?,
                    mode,
                ))
            }
            FamilyName::Chf => {
                if self.c.is_some() || self.nu.is_some() {
                    return Err(Failure::Usage("chf takes only --a and --b".into()));
                }
                Selected::Chf(ChfParams::new(need(self.a, "a")?, need(self.b, "b")?)?)
            }
        })
    }
}

fn riccati_table(selected: &Selected, order: usize) -> rayleigh::Result<SumsTable> {
    match selected {
        Selected::Sigma(mode) => sigma_table(order, mode),
        Selected::Tau(params) => tau_table(params, order),
        Selected::Chf(params) => s_table(params, order),
    }
}

fn bounds(args: BoundsArgs, out: &mut dyn Write) -> Outcome {
    let selected = args.family.select()?;
    if let Selected::Sigma(NuMode::Symbolic) | Selected::Tau(MercerParams { mode: NuMode::Symbolic, .. }) =
        &selected
    {
        return Err(Failure::Usage("bounds need a rational --nu".into()));
    }
    let table = riccati_table(&selected, args.order + 1)?;
    let regime = if args.assert_real_zeros {
        RealZeros::Asserted
    } else {
        RealZeros::Unasserted
    };
    let brackets = euler_rayleigh_sequence(&table, args.order, regime, &args.precision)?;
    let record = OutputRecord::from_table(&table, args.output.decimal)
        .map_err(|e| Failure::Usage(e.to_string()))?
        .with_brackets(&brackets, args.output.decimal);
    let text = match args.output.format {
        Format::Json => to_json(&record),
        Format::Plain => render::plain(&table, &record, args.output.decimal),
        Format::Latex | Format::Csv => {
            return Err(Failure::Usage("bounds support --format plain or json".into()))
        }
    };
    emit(out, &text)
}

fn zeros(args: ZerosArgs, out: &mut dyn Write) -> Outcome {
    let regime = if args.assert_real_zeros {
        RealZeros::Asserted
    } else {
        RealZeros::Unasserted
    };
    let selected = args.family.select()?;
    let (function, name, params) = match selected {
        Selected::Sigma(NuMode::Fixed(nu)) => (ZeroFunction::Bessel { nu }, "sigma", Default::default()),
        Selected::Tau(p) => {
            let nu = p
                .mode
                .fixed()
                .cloned()
                .ok_or_else(|| Failure::Usage("zeros need a rational --nu".into()))?;
            let params = family_params(&p.family());
            (
                ZeroFunction::Mercer {
                    a: p.a,
                    b: p.b,
                    c: p.c,
                    nu,
                },
                "tau",
                params,
            )
        }
        Selected::Sigma(NuMode::Symbolic) => {
            return Err(Failure::Usage("zeros need a rational --nu".into()))
        }
        Selected::Chf(_) => {
            return Err(Failure::Usage(
                "zeros of the confluent function are complex in general; not searched".into(),
            ))
        }
    };
    let found = find_zeros(&function, args.count, &args.precision, regime)?;
    let sums = args
        .sums
        .iter()
        .map(|&n| partial_sum_enclosure(&found, n))
        .collect::<rayleigh::Result<Vec<_>>>()?;
    let record = ZerosRecord::new(name, params, function.nu(), &found, &sums, args.output.decimal);
    let text = match args.output.format {
        Format::Json => to_json(&record),
        Format::Plain => {
            let mut lines = vec![format!("zeros of {name} in t = z^2, nu = {}", record.nu)];
            for z in &record.zeros {
                lines.push(format!("t_{} in [{}, {}]", z.k, z.lo, z.hi));
            }
            for s in &record.sums {
                lines.push(format!(
                    "sum of t_k^-{} in [{}, {}] (M = {}, tail {})",
                    s.n, s.lower, s.upper, s.count, s.tail
                ));
            }
            lines.join("\n") + "\n"
        }
        Format::Latex | Format::Csv => {
            return Err(Failure::Usage("zeros support --format plain or json".into()))
        }
    };
    emit(out, &text)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let selected = args.family.select()?;
    let riccati = riccati_table(&selected, args.order)?;
    let oracle = match &selected {
        Selected::Sigma(mode) => sigma_oracle_table(args.order, mode)?,
        Selected::Tau(params) => tau_oracle_table(params, args.order)?,
        Selected::Chf(params) => chf_sums_from_series(params, args.order)?,
    };
    let (matched, total) = riccati.agreement(&oracle);
    let pass = matched == total && total == riccati.entries.len();
    let mut text = format!(
        "{}: riccati = series-oracle: {} ({matched}/{total})\n",
        riccati.family.name(),
        if pass { "PASS" } else { "FAIL" }
    );
    if let Some((n, _)) = riccati
        .indexed()
        .zip(&oracle.entries)
        .find(|((_, a), b)| a != b)
        .map(|(x, _)| x)
    {
        text.push_str(&format!("first mismatch at n = {n}\n"));
    }
    emit(out, &text)?;
    Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn ode_check(args: OdeArgs, out: &mut dyn Write) -> Outcome {
    let params = derive_pqr(args.mercer.a, args.mercer.b, args.mercer.c, args.nu);
    let report = verify_ode(&params, args.order)?;
    let text = match report.first_nonzero() {
        None => format!(
            "ODE residual vanishes through t^{} ({} coefficients)\n",
            args.order,
            report.coefficients.len()
        ),
        Some(i) => format!(
            "ODE residual nonzero at t^{i}: {}\n",
            report.coefficients[i]
        ),
    };
    emit(out, &text)?;
    Ok(if report.vanishes() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
