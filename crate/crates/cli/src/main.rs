//! Command line front end over the exact tables and verification sweeps.
//!
//! Every subcommand prints JSON by default and CSV on request, writes to a
//! file with --output, and keeps its bytes identical across runs. Exit code 0
//! means success, 1 means a verification failed, 2 means the request itself
//! was bad.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerchi::{
    alternating_power_sum, character, check_fermionic, default_truncation, enumerate_characters,
    euler_numbers, euler_polynomials, parse_rational, sweep_eq13, sweep_recurrence, sweep_tchi,
    sweep_theorem1, sweep_theorem2, CharFilter, Character, CycloRational, FermionicReport,
    GenEulerTable, IdentityId, TchiReport, VerificationReport, XPoly,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "eulerchi",
    version,
    about = "Exact Euler numbers and polynomials twisted by Dirichlet characters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the classical numbers and polynomials
    Euler(EulerArgs),
    /// List the characters of an odd modulus
    Characters(CharactersArgs),
    /// Tabulate the numbers and polynomials attached to one character
    GenEuler(GenEulerArgs),
    /// Evaluate one alternating power sum
    PowerSum(PowerSumArgs),
    /// Compare one truncated alternating-measure sum with its limit
    Fermionic(FermionicArgs),
    /// Sweep one identity family over a parameter grid
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EulerArgs {
    /// Largest index to tabulate [default: EULERCHI_TRUNCATION or 16]
    #[arg(long)]
    max: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CharactersArgs {
    /// Odd modulus whose characters to list
    #[arg(long)]
    modulus: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct GenEulerArgs {
    /// Odd modulus of the character
    #[arg(long)]
    modulus: u64,
    /// Index of the character within its modulus
    #[arg(long)]
    char_index: u64,
    /// Largest index to tabulate [default: EULERCHI_TRUNCATION or 16]
    #[arg(long)]
    max: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PowerSumArgs {
    /// Odd modulus of the character
    #[arg(long)]
    modulus: u64,
    /// Index of the character within its modulus
    #[arg(long)]
    char_index: u64,
    /// Power each summand is raised to
    #[arg(long)]
    k: usize,
    /// Largest summand
    #[arg(long)]
    n: u64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct FermionicArgs {
    /// Odd modulus of the character
    #[arg(long)]
    modulus: u64,
    /// Index of the character within its modulus
    #[arg(long)]
    char_index: u64,
    /// Moment degree
    #[arg(long)]
    k: usize,
    /// Odd prime coprime to the modulus
    #[arg(long)]
    p: u64,
    /// Truncation level: the sum runs over one period of length d * p^n
    #[arg(long)]
    n: u32,
    /// Rational shift, written as a/b or a
    #[arg(long, default_value = "0")]
    x: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity family to sweep
    #[arg(long, value_parser = parse_identity)]
    identity: IdentityId,
    /// Moduli to sweep
    #[arg(long = "modulus", num_args = 1.., default_values_t = vec![1u64, 3, 5, 7, 9])]
    moduli: Vec<u64>,
    /// Character filter: all, primitive, or an index
    #[arg(long = "chars", default_value = "all", value_parser = parse_filter)]
    chars: CharFilter,
    /// First weights
    #[arg(long, num_args = 1.., default_values_t = vec![1u64, 3, 5])]
    w1: Vec<u64>,
    /// Second weights
    #[arg(long, num_args = 1.., default_values_t = vec![1u64, 3, 5])]
    w2: Vec<u64>,
    /// Largest term degree [default: 12, or 10 for eq13, 8 for recurrence]
    #[arg(long)]
    max_l: Option<usize>,
    /// Odd shifts for eq13
    #[arg(long = "shift", num_args = 1.., default_values_t = vec![1u64, 3, 5])]
    shifts: Vec<u64>,
    /// How many random polynomials the recurrence sweep draws
    #[arg(long, default_value_t = 50)]
    count: usize,
    /// Seed for the recurrence sweep
    #[arg(long, default_value_t = 24301)]
    seed: u64,
    /// Largest shift the recurrence sweep uses
    #[arg(long, default_value_t = 6)]
    max_shift: u64,
    #[command(flatten)]
    out: OutputArgs,
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse()
}

fn parse_filter(s: &str) -> Result<CharFilter, String> {
    s.parse()
}

#[derive(Serialize)]
struct EulerRow {
    n: usize,
    number: String,
    polynomial: Vec<String>,
}

#[derive(Serialize)]
struct CharacterRow {
    modulus: u64,
    index: u64,
    order: u64,
    conductor: u64,
    primitive: bool,
    values: Vec<CycloRational>,
}

impl CharacterRow {
    fn new(chi: &Character) -> Self {
        CharacterRow {
            modulus: chi.modulus(),
            index: chi.index(),
            order: chi.order(),
            conductor: chi.conductor(),
            primitive: chi.is_primitive(),
            values: chi.values().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct GenEulerOut {
    character: CharacterRow,
    numbers: Vec<CycloRational>,
    polynomials: Vec<XPoly>,
}

#[derive(Serialize)]
struct PowerSumOut {
    modulus: u64,
    index: u64,
    k: usize,
    n: u64,
    value: CycloRational,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Euler(args) => {
            let text = render_euler(&args);
            emit(&args.out, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Characters(args) => {
            let text = render_characters(&args)?;
            emit(&args.out, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::GenEuler(args) => {
            let text = render_gen_euler(&args)?;
            emit(&args.out, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::PowerSum(args) => {
            let text = render_power_sum(&args)?;
            emit(&args.out, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fermionic(args) => {
            let (text, passed) = render_fermionic(&args)?;
            emit(&args.out, text)?;
            Ok(exit_for(passed))
        }
        Command::Verify(args) => {
            let (text, passed) = render_verify(&args)?;
            emit(&args.out, text)?;
            Ok(exit_for(passed))
        }
    }
}

fn exit_for(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit(out: &OutputArgs, mut text: String) -> Result<(), String> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &out.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

/// One polynomial as a single CSV cell: coefficient strings joined by
/// semicolons, constant term first, empty for the zero polynomial.
fn poly_cell(p: &XPoly) -> String {
    let cells: Vec<String> = p.coeffs().iter().map(CycloRational::to_coeff_string).collect();
    cells.join(";")
}

fn opt_cell<T: std::fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

fn render_euler(args: &EulerArgs) -> String {
    let max = args.max.unwrap_or_else(default_truncation);
    let numbers = euler_numbers(max);
    let polynomials = euler_polynomials(max);
    let rows: Vec<EulerRow> = numbers
        .iter()
        .zip(&polynomials)
        .enumerate()
        .map(|(n, (number, poly))| EulerRow {
            n,
            number: number.to_string(),
            polynomial: poly
                .coeffs()
                .iter()
                .map(|c| {
                    c.as_rational()
                        .expect("classical coefficients are rational")
                        .to_string()
                })
                .collect(),
        })
        .collect();
    match args.out.format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut text = String::from("n,number,polynomial\n");
            for row in &rows {
                text.push_str(&format!("{},{},{}\n", row.n, row.number, row.polynomial.join("|")));
            }
            text
        }
    }
}

fn character_csv(rows: &[CharacterRow]) -> String {
    let mut text = String::from("modulus,index,order,conductor,primitive,values\n");
    for row in rows {
        let values: Vec<String> = row.values.iter().map(CycloRational::to_coeff_string).collect();
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.modulus,
            row.index,
            row.order,
            row.conductor,
            row.primitive,
            values.join(";")
        ));
    }
    text
}

fn render_characters(args: &CharactersArgs) -> Result<String, String> {
    let chars = enumerate_characters(args.modulus).map_err(|e| e.to_string())?;
    let rows: Vec<CharacterRow> = chars.iter().map(CharacterRow::new).collect();
    Ok(match args.out.format {
        Format::Json => to_json(&rows),
        Format::Csv => character_csv(&rows),
    })
}

fn render_gen_euler(args: &GenEulerArgs) -> Result<String, String> {
    let chi = character(args.modulus, args.char_index).map_err(|e| e.to_string())?;
    let max = args.max.unwrap_or_else(default_truncation);
    let table = GenEulerTable::new(&chi, max);
    let out = GenEulerOut {
        character: CharacterRow::new(&chi),
        numbers: table.numbers().to_vec(),
        polynomials: table.polys().to_vec(),
    };
    Ok(match args.out.format {
        Format::Json => to_json(&out),
        Format::Csv => {
            let mut text = String::from("modulus,index,n,number,polynomial\n");
            for (n, (number, poly)) in out.numbers.iter().zip(&out.polynomials).enumerate() {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    args.modulus,
                    args.char_index,
                    n,
                    number.to_coeff_string(),
                    poly_cell(poly)
                ));
            }
            text
        }
    })
}

fn render_power_sum(args: &PowerSumArgs) -> Result<String, String> {
    let chi = character(args.modulus, args.char_index).map_err(|e| e.to_string())?;
    let out = PowerSumOut {
        modulus: args.modulus,
        index: args.char_index,
        k: args.k,
        n: args.n,
        value: alternating_power_sum(&chi, args.k, args.n),
    };
    Ok(match args.out.format {
        Format::Json => to_json(&out),
        Format::Csv => format!(
            "modulus,index,k,n,value\n{},{},{},{},{}\n",
            out.modulus,
            out.index,
            out.k,
            out.n,
            out.value.to_coeff_string()
        ),
    })
}

fn fermionic_csv(report: &FermionicReport) -> String {
    let mut text = String::from(
        "modulus,index,k,p,steps,x,partial_sum,limit,doubled_sum_identity_passed,\
         difference_valuation,required_valuation,congruence_passed,passed\n",
    );
    text.push_str(&format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        report.modulus,
        report.index,
        report.k,
        report.p,
        report.steps,
        report.x,
        report.partial_sum.to_coeff_string(),
        report.limit.to_coeff_string(),
        report.doubled_sum_identity_passed,
        report.difference_valuation,
        report.required_valuation,
        report.congruence_passed,
        report.passed
    ));
    text
}

fn render_fermionic(args: &FermionicArgs) -> Result<(String, bool), String> {
    let chi = character(args.modulus, args.char_index).map_err(|e| e.to_string())?;
    let x = parse_rational(&args.x)
        .ok_or_else(|| format!("invalid rational {:?} for --x", args.x))?;
    let table = GenEulerTable::new(&chi, args.k);
    let report = check_fermionic(&table, args.k, args.p, args.n, &x).map_err(|e| e.to_string())?;
    let text = match args.out.format {
        Format::Json => to_json(&report),
        Format::Csv => fermionic_csv(&report),
    };
    Ok((text, report.passed))
}

fn report_csv(reports: &[VerificationReport]) -> String {
    let mut text = String::from("identity,modulus,index,degree,w1,w2,shift,lhs,rhs,discrepancy,passed\n");
    for r in reports {
        text.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.identity,
            opt_cell(&r.params.modulus),
            opt_cell(&r.params.index),
            opt_cell(&r.params.degree),
            opt_cell(&r.params.w1),
            opt_cell(&r.params.w2),
            opt_cell(&r.params.shift),
            poly_cell(&r.lhs),
            poly_cell(&r.rhs),
            poly_cell(&r.discrepancy),
            r.passed
        ));
    }
    text
}

fn tchi_csv(reports: &[TchiReport]) -> String {
    let mut text = String::from(
        "identity,modulus,index,degree,w1,w2,expansion1,expansion2,expansion3,expansion4,passed\n",
    );
    for r in reports {
        let cells: Vec<String> = r.expansions.iter().map(poly_cell).collect();
        text.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.identity,
            opt_cell(&r.params.modulus),
            opt_cell(&r.params.index),
            opt_cell(&r.params.degree),
            opt_cell(&r.params.w1),
            opt_cell(&r.params.w2),
            cells.join(","),
            r.passed
        ));
    }
    text
}

fn render_verify(args: &VerifyArgs) -> Result<(String, bool), String> {
    let format = args.out.format;
    let plain = |reports: Vec<VerificationReport>| -> (String, bool) {
        let passed = reports.iter().all(|r| r.passed);
        let text = match format {
            Format::Json => to_json(&reports),
            Format::Csv => report_csv(&reports),
        };
        (text, passed)
    };
    Ok(match args.identity {
        IdentityId::Recurrence => plain(sweep_recurrence(
            args.count,
            args.seed,
            args.max_l.unwrap_or(8),
            args.max_shift,
        )),
        IdentityId::Eq13 => plain(
            sweep_eq13(&args.moduli, args.max_l.unwrap_or(10), &args.shifts, args.chars)
                .map_err(|e| e.to_string())?,
        ),
        IdentityId::Theorem1 => plain(
            sweep_theorem1(
                &args.moduli,
                &args.w1,
                &args.w2,
                args.max_l.unwrap_or(12),
                args.chars,
            )
            .map_err(|e| e.to_string())?,
        ),
        IdentityId::Theorem2 => plain(
            sweep_theorem2(
                &args.moduli,
                &args.w1,
                &args.w2,
                args.max_l.unwrap_or(12),
                args.chars,
            )
            .map_err(|e| e.to_string())?,
        ),
        IdentityId::TchiAll => {
            let reports = sweep_tchi(
                &args.moduli,
                &args.w1,
                &args.w2,
                args.max_l.unwrap_or(12),
                args.chars,
            )
            .map_err(|e| e.to_string())?;
            let passed = reports.iter().all(|r| r.passed);
            let text = match format {
                Format::Json => to_json(&reports),
                Format::Csv => tchi_csv(&reports),
            };
            (text, passed)
        }
    })
}
