//! `sniep`: decide and realize five-element spectra, replay the verification
//! reports and dump the reproduced sub-range tables.
//!
//! Exit codes: 0 realizable or verified, 1 not realizable or a failed check,
//! 2 out of region, 3 input error.

mod emit;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sniep_core::exact::{format_decimal, parse_rational, Rational};
use sniep_core::pattern_c::{self, tables};
use sniep_core::pattern_h;
use sniep_core::poly::isolate_real_roots;
use sniep_core::report::Report;
use sniep_core::sniep::{self, SpectrumList};
use sniep_core::{Error, UniPoly};

use emit::{Emit, Output};

/// Exit code for malformed input.
const INPUT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "sniep", version, about = "Symmetric nonnegative realizability of five-element spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text, global = true)]
    emit: Emit,
    /// Decimal digits for roots (default 10) and table rounding (default 2).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..=12))]
    digits: Option<u32>,
    /// Seed for `sample`.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    /// Number of samples for `sample`.
    #[arg(long, default_value_t = 10_000, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    /// Worker threads for `sample`.
    #[arg(long, default_value_t = 1, global = true, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide realizability from the necessary conditions.
    Check(SpectrumInput),
    /// Decide and, when realizable, build a certificate matrix.
    Realize(SpectrumInput),
    /// Replay a verification report.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Real roots of a polynomial given by ascending coefficients.
    Roots {
        /// Coefficients `c0, c1, ...` of `c0 + c1 x + ...`.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Recompute every sub-range table row.
    Tables,
    /// Check `lambda_3 <= trace` on random matrices with spectral radius at most 1.
    Sample {
        #[arg(long, value_enum, default_value_t = Family::Random)]
        family: Family,
    },
}

#[derive(clap::Args, Debug)]
struct SpectrumInput {
    /// Five values separated by commas or spaces.
    #[arg(allow_hyphen_values = true, required_unless_present = "file", conflicts_with = "file")]
    spectrum: Option<String>,
    /// One spectrum per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    AppendixA,
    AppendixB,
    AppendixC,
    AppendixD,
    Identities,
    IdentitiesH,
    IdentitiesC,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum Family {
    /// General nonnegative symmetric matrices with trace 1/2.
    Random,
    /// Diagonal `(1/2 - t - s, 0, t, s, 0)` pattern.
    H,
    /// Pattern with five off-diagonal zeros.
    C,
}

fn spectra(input: &SpectrumInput) -> Result<Vec<SpectrumList>, Error> {
    match (&input.spectrum, &input.file) {
        (Some(text), _) => Ok(vec![SpectrumList::parse(text)?]),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(SpectrumList::parse)
                .collect()
        }
        (None, None) => Err(Error::Input("no spectrum given".into())),
    }
}

/// Verdicts for a batch; the exit code is the largest over the batch.
fn verdicts(input: &SpectrumInput, certify: bool, emit: Emit) -> Result<Output, Error> {
    let lists = spectra(input)?;
    let mut rows = Vec::with_capacity(lists.len());
    for s in &lists {
        let v = if certify { sniep::decide(s)? } else { sniep::check_conditions(s) };
        rows.push((s, v));
    }
    let code = rows.iter().map(|(_, v)| v.exit_code()).max().unwrap_or(0) as u8;
    Ok(Output { body: emit::verdicts(&rows, emit)?, code })
}

fn report_for(target: Target, digits: u32) -> Report {
    match target {
        Target::AppendixA => pattern_h::verify_appendix_a(),
        Target::AppendixB => pattern_h::verify_appendix_b(),
        Target::AppendixC => pattern_c::verify_appendix_c(),
        Target::AppendixD => pattern_c::verify_appendix_d(digits).report,
        Target::IdentitiesH => pattern_h::verify_h_identities(),
        Target::IdentitiesC => pattern_c::verify_c_identities(),
        Target::Identities => {
            let mut r = pattern_h::verify_h_identities();
            r.extend(pattern_c::verify_c_identities());
            r.title = "polynomial identities".into();
            r
        }
    }
}

fn roots(coeffs: &str, digits: u32, emit: Emit) -> Result<Output, Error> {
    let cs = coeffs
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| parse_rational(s).map_err(|e| Error::Input(e.to_string())))
        .collect::<Result<Vec<Rational>, Error>>()?;
    if cs.is_empty() {
        return Err(Error::Input("no coefficients given".into()));
    }
    let p = UniPoly::new(cs);
    let found = isolate_real_roots(&p, digits).map_err(|e| Error::Input(e.to_string()))?;
    let texts: Vec<String> = found.iter().map(|iv| format_decimal(&iv.midpoint(), digits)).collect();
    Ok(Output { body: emit::roots(&texts, emit)?, code: 0 })
}

fn tables(digits: u32, emit: Emit) -> Result<Output, Error> {
    let v = pattern_c::verify_appendix_d(digits);
    let body = match emit {
        Emit::Text => tables::render_text(&v.results),
        Emit::Csv => tables::render_csv(&v.results),
        Emit::Json => emit::json(&tables::rows_json(&v.results))?,
    };
    Ok(Output { body, code: u8::from(!v.passed()) })
}

fn sample(cli: &Cli, family: Family) -> Result<Output, Error> {
    let jobs = cli.jobs as usize;
    let summary = match family {
        Family::Random => sniep::sweep_random(&sniep_core::exact::rat(1, 2), cli.count, cli.seed, jobs)?,
        Family::H => sniep::sweep_pattern_h(cli.count, cli.seed, jobs)?,
        Family::C => sniep::sweep_pattern_c(cli.count, cli.seed, jobs)?,
    };
    let code = u8::from(summary.violations > 0);
    Ok(Output { body: emit::sweep(family, cli.seed, &summary, cli.emit)?, code })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Check(input) => verdicts(input, false, cli.emit),
        Command::Realize(input) => verdicts(input, true, cli.emit),
        Command::Verify { target } => {
            let r = report_for(*target, cli.digits.unwrap_or(2));
            Ok(Output { body: emit::report(&r, cli.emit)?, code: u8::from(!r.all_passed()) })
        }
        Command::Roots { coeffs } => roots(coeffs, cli.digits.unwrap_or(10), cli.emit),
        Command::Tables => tables(cli.digits.unwrap_or(2), cli.emit),
        Command::Sample { family } => sample(cli, *family),
    }
}

fn write_out(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(INPUT_ERROR);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = write_out(&cli, &out.body) {
                eprintln!("sniep: cannot write output: {e}");
                return ExitCode::from(INPUT_ERROR);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("sniep: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

