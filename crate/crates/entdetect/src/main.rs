//! Command-line front end: state generation, criterion evaluation,
//! moment export, threshold search, grid sweeps and the built-in
//! reference scenarios.
//!
//! Exit codes report computational success only; entanglement verdicts
//! live in the structured output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use entdetect::criteria::{run_all, CriteriaParams, CriterionConfig, CriterionKind};
use entdetect::explorer::{bisect_threshold, sweep, Axis, BetaRule};
use entdetect::io::{load_state, save_state};
use entdetect::moments::A0Convention;
use entdetect::reproduce::{reproduce, EX3_BETA};
use entdetect::state::{DensityMatrix, StateFamily};

/// Parses plain decimals, exact rationals like `1/729`, and the named
/// constant `ex3` (= 1/(16 sqrt 2)).
fn parse_number(s: &str) -> Result<f64, String> {
    if s == "ex3" {
        return Ok(EX3_BETA);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: f64 = num.trim().parse().map_err(|e| format!("bad numerator in '{s}': {e}"))?;
        let d: f64 = den.trim().parse().map_err(|e| format!("bad denominator in '{s}': {e}"))?;
        if d == 0.0 {
            return Err(format!("zero denominator in '{s}'"));
        }
        return Ok(n / d);
    }
    s.parse().map_err(|e| format!("bad number '{s}': {e}"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyTag {
    BellNoise,
    Werner,
    IsotropicB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// State family tag.
    #[arg(long, value_enum)]
    family: FamilyTag,
    /// Subsystem dimension for families that take one.
    #[arg(long, default_value_t = 2)]
    d: usize,
}

impl FamilyArgs {
    fn family(&self) -> StateFamily {
        match self.family {
            FamilyTag::BellNoise => StateFamily::BellNoise,
            FamilyTag::Werner => StateFamily::Werner { d: self.d },
            FamilyTag::IsotropicB => StateFamily::IsotropicB,
        }
    }
}

/// A state comes either from a file or from a family plus parameter.
#[derive(Debug, Args)]
struct StateSource {
    /// Path to a JSON state file (validated on load).
    #[arg(long, conflicts_with_all = ["family", "p"])]
    state: Option<PathBuf>,
    #[arg(long, value_enum, requires = "p")]
    family: Option<FamilyTag>,
    /// Family parameter.
    #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
    p: Option<f64>,
    #[arg(long, default_value_t = 2)]
    d: usize,
}

impl StateSource {
    fn load(&self) -> entdetect::Result<DensityMatrix> {
        match (&self.state, self.family, self.p) {
            (Some(path), _, _) => load_state(path),
            (None, Some(tag), Some(p)) => {
                let family = match tag {
                    FamilyTag::BellNoise => StateFamily::BellNoise,
                    FamilyTag::Werner => StateFamily::Werner { d: self.d },
                    FamilyTag::IsotropicB => StateFamily::IsotropicB,
                };
                family.state_at(p)
            }
            _ => Err(entdetect::Error::ParameterOutOfRange(
                "exactly one state source required: --state or --family with --p".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
struct BorderArgs {
    #[arg(long, value_parser = parse_number, default_value = "1/729", allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, value_parser = parse_number, default_value = "1/729", allow_hyphen_values = true)]
    beta: f64,
    /// Border size.
    #[arg(long, default_value_t = 1)]
    l: usize,
}

#[derive(Debug, Parser)]
#[command(name = "entdetect", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a state file from a named family.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Family parameter.
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        p: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate separability criteria against a state.
    Detect {
        #[command(flatten)]
        source: StateSource,
        /// Criterion name or `all`.
        #[arg(long, default_value = "all")]
        criterion: String,
        #[command(flatten)]
        border: BorderArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the moment sequence of the bordered realignment matrix.
    Moments {
        #[command(flatten)]
        source: StateSource,
        #[command(flatten)]
        border: BorderArgs,
        /// Highest moment order; defaults to what the largest Hankel
        /// matrices require.
        #[arg(long)]
        k: Option<usize>,
        /// a_0 convention.
        #[arg(long, value_enum, default_value_t = A0Flag::DimensionProduct)]
        a0: A0Flag,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bisect a criterion's detection threshold along a family.
    Threshold {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_parser = parse_criterion)]
        criterion: CriterionKind,
        #[command(flatten)]
        border: BorderArgs,
        /// Bracket low end; defaults to the family range.
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        lo: Option<f64>,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        hi: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a criterion discriminant over a (p, alpha) grid.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "theorem1", value_parser = parse_criterion)]
        criterion: CriterionKind,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        p_min: f64,
        #[arg(long, value_parser = parse_number, allow_hyphen_values = true)]
        p_max: f64,
        #[arg(long, default_value_t = 21)]
        p_steps: usize,
        #[arg(long, value_parser = parse_number)]
        alpha_min: f64,
        #[arg(long, value_parser = parse_number)]
        alpha_max: f64,
        #[arg(long, default_value_t = 21)]
        alpha_steps: usize,
        /// `alpha` for beta = alpha, `c*alpha` with a constant, or a
        /// fixed numeric value.
        #[arg(long, default_value = "alpha")]
        beta_rule: String,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run a built-in reference scenario (1, 2 or 3) and compare
    /// against its published thresholds.
    Reproduce {
        example: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum A0Flag {
    DimensionProduct,
    MatrixDimension,
}

fn parse_beta_rule(s: &str) -> Result<BetaRule, String> {
    if s == "alpha" {
        return Ok(BetaRule::EqualAlpha);
    }
    if let Some(c) = s.strip_suffix("*alpha") {
        return Ok(BetaRule::Proportional(parse_number(c)?));
    }
    Ok(BetaRule::Fixed(parse_number(s)?))
}

fn parse_criterion(s: &str) -> Result<CriterionKind, String> {
    s.parse()
}

fn emit(text: &str, out: &Option<PathBuf>) -> entdetect::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None if text.ends_with('\n') => print!("{text}"),
        None => println!("{text}"),
    }
    Ok(())
}

fn run() -> entdetect::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { family, p, out } => {
            let rho = family.family().state_at(p)?;
            save_state(&rho, &out)?;
        }
        Command::Detect {
            source,
            criterion,
            border,
            out,
        } => {
            let rho = source.load()?;
            let reports = if criterion == "all" {
                run_all(
                    &rho,
                    &CriteriaParams {
                        alpha: border.alpha,
                        beta: border.beta,
                        l: border.l,
                        max_order_h: None,
                        max_order_b: None,
                    },
                )?
            } else {
                let kind: CriterionKind = criterion
                    .parse()
                    .map_err(entdetect::Error::ParameterOutOfRange)?;
                let config = CriterionConfig {
                    kind,
                    alpha: border.alpha,
                    beta: border.beta,
                    l: border.l,
                    max_order_h: None,
                    max_order_b: None,
                };
                vec![config.evaluate(&rho)?]
            };
            emit(&serde_json::to_string_pretty(&reports)?, &out)?;
        }
        Command::Moments {
            source,
            border,
            k,
            a0,
            format,
            out,
        } => {
            let rho = source.load()?;
            let b = entdetect::realign::bordered_realignment(&rho, border.alpha, border.beta, border.l)?;
            let n = b.singular_value_count();
            let k = k.unwrap_or(entdetect::moments::default_moment_count(n));
            let convention = match a0 {
                A0Flag::DimensionProduct => A0Convention::DimensionProduct,
                A0Flag::MatrixDimension => A0Convention::MatrixDimension,
            };
            let seq = entdetect::moments::moments(&b, k, convention)?;
            match format {
                Format::Json => emit(&serde_json::to_string_pretty(&seq)?, &out)?,
                Format::Csv => emit(&seq.to_csv(), &out)?,
            }
        }
        Command::Threshold {
            family,
            criterion,
            border,
            lo,
            hi,
            tol,
            out,
        } => {
            let fam = family.family();
            let (range_lo, range_hi) = fam.param_range();
            let config = CriterionConfig {
                kind: criterion,
                alpha: border.alpha,
                beta: border.beta,
                l: border.l,
                max_order_h: None,
                max_order_b: None,
            };
            let res = bisect_threshold(
                &fam,
                &config,
                lo.unwrap_or(range_lo),
                hi.unwrap_or(range_hi),
                tol,
            )?;
            emit(&serde_json::to_string_pretty(&res)?, &out)?;
        }
        Command::Sweep {
            family,
            criterion,
            p_min,
            p_max,
            p_steps,
            alpha_min,
            alpha_max,
            alpha_steps,
            beta_rule,
            l,
            format,
            out,
        } => {
            let fam = family.family();
            let rule = parse_beta_rule(&beta_rule)
                .map_err(entdetect::Error::ParameterOutOfRange)?;
            let config = CriterionConfig {
                kind: criterion,
                alpha: alpha_min,
                beta: rule.beta(alpha_min),
                l,
                max_order_h: None,
                max_order_b: None,
            };
            let grid = sweep(
                &fam,
                &config,
                Axis::new("p", p_min, p_max, p_steps)?,
                Axis::new("alpha", alpha_min, alpha_max, alpha_steps)?,
                rule,
            )?;
            match format {
                Format::Csv => emit(&grid.to_csv(), &out)?,
                Format::Json => emit(&serde_json::to_string_pretty(&grid)?, &out)?,
            }
        }
        Command::Reproduce { example, out } => {
            let report = reproduce(example)?;
            for check in &report.checks {
                eprintln!(
                    "{}: computed {:.6} reference {:.6} -> {}",
                    check.label,
                    check.computed,
                    check.reference,
                    if check.pass { "PASS" } else { "FAIL" }
                );
            }
            emit(&serde_json::to_string_pretty(&report)?, &out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
