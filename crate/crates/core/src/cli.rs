//! Command-line front end.
//!
//! Exit codes: 0 when every asserted invariant holds, 1 for usage and
//! parse errors, 2 when a resource cap or budget is hit, 3 when a genuine
//! bound violation is found.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::affine::AffineSpace;
use crate::characters::{CharacterTable, DEFAULT_DLOG_CAP};
use crate::error::Error;
use crate::ff::poly::{format_coeffs, parse_coeffs};
use crate::ff::{Element, Field};
use crate::knormal::{self, OrderContext, SearchOutcome};
use crate::primitive::{self, ElementSelection, PrimitiveOracle, SpaceSelection};
use crate::report::{render, Format};
use crate::rng::derive_seed;
use crate::sums::{self, Population};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "charsum", version, about = "Character sums over affine spaces and primitive element scans")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every character-sum bound over a population of sets.
    VerifyBounds(BoundsArgs),
    /// Count primitive elements in affine spaces and test the characterization.
    ScanPrimitive(ScanArgs),
    /// k-normal census, or a primitive k-normal search with --k.
    Knormal(KnormalArgs),
    /// Primitive elements with prescribed digits.
    Digits(DigitsArgs),
    /// Largest dimension of a primitive-free subspace.
    Grassmann(GrassmannArgs),
    /// The Artin-Schreier root in F_{p^p}, or with --q the scan of F_{q^p}.
    ArtinSchreier(ArtinArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Args)]
struct Common {
    /// Root seed for every random choice.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FieldArg {
    /// Field as p,k,n: F_q with q = p^k, extended to degree n.
    #[arg(long, value_parser = parse_field_spec)]
    field: FieldSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub k: usize,
    pub n: usize,
}

fn parse_field_spec(text: &str) -> std::result::Result<FieldSpec, String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected p,k,n, found {text:?}"));
    }
    let num = |s: &str| s.parse::<u64>().map_err(|_| format!("not a nonnegative integer: {s:?}"));
    Ok(FieldSpec { p: num(parts[0])?, k: num(parts[1])? as usize, n: num(parts[2])? as usize })
}

#[derive(Debug, Args)]
struct PopulationArgs {
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    /// Draws in sampled mode.
    #[arg(long, default_value_t = 100)]
    samples: u64,
    /// Largest amount of work exhaustive mode may take on.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[command(flatten)]
    field: FieldArg,
    #[command(flatten)]
    population: PopulationArgs,
    /// Cap on the multiplicative group order for the discrete-log table.
    #[arg(long, default_value_t = DEFAULT_DLOG_CAP)]
    dlog_cap: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    field: FieldArg,
    #[command(flatten)]
    population: PopulationArgs,
    /// Dimensions to scan.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    dims: Vec<usize>,
    /// A single space as u=<coeffs>;V=<coeffs>|<coeffs>…
    #[arg(long, conflicts_with = "translate")]
    space: Option<String>,
    /// Check the translate property instead.
    #[arg(long)]
    translate: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct KnormalArgs {
    #[command(flatten)]
    field: FieldArg,
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct DigitsArgs {
    #[command(flatten)]
    field: FieldArg,
    /// Basis as <coeffs>|<coeffs>|…; defaults to 1, x, …, x^{n-1}.
    #[arg(long, conflicts_with = "sharpness")]
    basis: Option<String>,
    /// Prescribed digits as pos=value,… with 0-based positions.
    #[arg(long, default_value = "", conflicts_with = "sharpness")]
    prescribe: String,
    /// Use the subfield-adapted basis with every digit past the subfield zeroed.
    #[arg(long)]
    sharpness: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct GrassmannArgs {
    #[command(flatten)]
    field: FieldArg,
    /// Most subspaces to examine.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct ArtinArgs {
    #[arg(long)]
    p: u64,
    /// Constant term; defaults to the least primitive root mod p.
    #[arg(long)]
    a: Option<u64>,
    /// Scan F_{q^p} for primitive k-normal elements instead.
    #[arg(long)]
    q: Option<u64>,
    #[command(flatten)]
    common: Common,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DlogCapExceeded { .. } | Error::BudgetExceeded { .. } | Error::FieldTooLarge { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

struct Output {
    text: String,
    violation: bool,
}

impl Output {
    fn new<T: Serialize>(records: &[T], format: Format, violation: bool) -> Self {
        Self { text: render(records, format), violation }
    }
}

/// Runs the CLI on `args` (including the program name), writing the
/// report to `stdout` or `--out` and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (common, result) = match &cli.command {
        Command::VerifyBounds(a) => (&a.common, verify_bounds(a)),
        Command::ScanPrimitive(a) => (&a.common, scan_primitive(a)),
        Command::Knormal(a) => (&a.common, knormal_cmd(a)),
        Command::Digits(a) => (&a.common, digits(a)),
        Command::Grassmann(a) => (&a.common, grassmann(a)),
        Command::ArtinSchreier(a) => (&a.common, artin_schreier(a)),
    };
    match result {
        Ok(out) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display())),
                None => stdout.write_all(out.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_USAGE;
            }
            if out.violation {
                let _ = writeln!(stderr, "violation found");
                EXIT_VIOLATION
            } else {
                EXIT_OK
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn build_field(spec: FieldSpec, seed: u64) -> Result<Field, Failure> {
    Ok(Field::build(spec.p, spec.k, spec.n, derive_seed(seed, "field.modulus", 0))?)
}

fn verify_bounds(a: &BoundsArgs) -> Result<Output, Failure> {
    let seed = a.common.seed;
    let field = build_field(a.field.field, seed)?;
    let table = CharacterTable::build_with_cap(&field, derive_seed(seed, "characters.generator", 0), a.dlog_cap)?;
    let population = match a.population.mode {
        Mode::Exhaustive => Population::Exhaustive { budget: a.population.budget },
        Mode::Sampled => Population::Sampled { samples: sample_count(a.population.samples)?, seed },
    };
    let reports = sums::verify_bounds(&table, population)?;
    let violation = reports.iter().any(|r| r.is_violation());
    Ok(Output::new(&reports, a.common.format, violation))
}

fn sample_count(samples: u64) -> Result<u64, Failure> {
    if samples == 0 {
        return Err(usage("sampled mode needs --samples >= 1"));
    }
    Ok(samples)
}

fn scan_primitive(a: &ScanArgs) -> Result<Output, Failure> {
    let seed = a.common.seed;
    let field = build_field(a.field.field, seed)?;
    if a.translate {
        let selection = match a.population.mode {
            Mode::Exhaustive => ElementSelection::Exhaustive,
            Mode::Sampled => ElementSelection::Sampled { samples: sample_count(a.population.samples)?, seed },
        };
        let report = primitive::translate_check(&field, selection)?;
        return Ok(Output::new(&[report], a.common.format, false));
    }
    let results = match &a.space {
        Some(text) => {
            let space = AffineSpace::parse(&field, text)?;
            vec![primitive::count_primitive(&PrimitiveOracle::new(&field), &space)]
        }
        None => {
            let selection = match a.population.mode {
                Mode::Exhaustive => SpaceSelection::Exhaustive { budget: a.population.budget },
                Mode::Sampled => SpaceSelection::Sampled { samples: sample_count(a.population.samples)?, seed },
            };
            primitive::characterization_scan(&field, &a.dims, selection)?.results
        }
    };
    // Necessity is unconditional only when n <= q; the sieve bound always.
    let guaranteed = field.n() as u64 <= field.q();
    let violation = results.iter().any(|r| !r.sieve_holds() || (guaranteed && r.is_necessity_violation()));
    Ok(Output::new(&results, a.common.format, violation))
}

#[derive(Serialize)]
struct NoDivisorReport {
    field: String,
    k: usize,
    candidates: [(); 0],
    result: SearchOutcome,
}

fn knormal_cmd(a: &KnormalArgs) -> Result<Output, Failure> {
    let field = build_field(a.field.field, a.common.seed)?;
    let ctx = OrderContext::new(&field);
    match a.k {
        None => {
            let rows = knormal::knormal_census(&ctx);
            let violation = rows.iter().any(|r| r.count != r.phi_q);
            Ok(Output::new(&rows, a.common.format, violation))
        }
        Some(k) => match knormal::primitive_knormal_search(&ctx, k) {
            Ok(search) => Ok(Output::new(&[search], a.common.format, false)),
            Err(Error::NoDivisorOfDegree { degree, .. }) => {
                let report =
                    NoDivisorReport { field: field.tag(), k, candidates: [], result: SearchOutcome::NoDivisor { degree } };
                Ok(Output::new(&[report], a.common.format, false))
            }
            Err(e) => Err(e.into()),
        },
    }
}

fn parse_prescription(text: &str) -> Result<BTreeMap<usize, u64>, Failure> {
    let mut out = BTreeMap::new();
    let mut offset = 0;
    for part in text.split(',') {
        if !part.trim().is_empty() {
            let (pos, value) = part.split_once('=').ok_or_else(|| {
                Failure::from(Error::Parse { offset, message: format!("expected pos=value, found {part:?}") })
            })?;
            let pos = parse_coeffs(pos, offset)?[0] as usize;
            let value = parse_coeffs(value, offset + part.find('=').unwrap() + 1)?[0];
            if out.insert(pos, value).is_some() {
                return Err(Error::Parse { offset, message: format!("position {pos} given twice") }.into());
            }
        }
        offset += part.len() + 1;
    }
    Ok(out)
}

fn parse_basis(field: &Field, text: &str) -> Result<Vec<Element>, Failure> {
    let mut out = Vec::new();
    let mut offset = 0;
    for chunk in text.split('|') {
        let coeffs = parse_coeffs(chunk, offset)?;
        out.push(field.from_coeffs(&coeffs).map_err(|e| Error::Parse { offset, message: e.to_string() })?);
        offset += chunk.len() + 1;
    }
    Ok(out)
}

fn digits(a: &DigitsArgs) -> Result<Output, Failure> {
    let field = build_field(a.field.field, a.common.seed)?;
    let (basis, prescription) = if a.sharpness {
        primitive::digit_sharpness_example(&field)?
    } else {
        let basis = match &a.basis {
            Some(text) => parse_basis(&field, text)?,
            None => (0..field.n()).map(|i| field.monomial(i)).collect(),
        };
        (basis, parse_prescription(&a.prescribe)?)
    };
    let result = primitive::digit_search(&field, &basis, &prescription)?;
    #[derive(Serialize)]
    struct Row {
        basis: String,
        #[serde(flatten)]
        result: primitive::DigitResult,
    }
    let basis = basis.iter().map(|b| format_coeffs(b.coeffs())).collect::<Vec<_>>().join("|");
    Ok(Output::new(&[Row { basis, result }], a.common.format, false))
}

fn grassmann(a: &GrassmannArgs) -> Result<Output, Failure> {
    let field = build_field(a.field.field, a.common.seed)?;
    let result = primitive::grassmann_threshold(&field, a.budget)?;
    Ok(Output::new(&[result], a.common.format, false))
}

fn artin_schreier(a: &ArtinArgs) -> Result<Output, Failure> {
    if let Some(q) = a.q {
        let scan = knormal::fqp_knormal_scan(q, a.p, derive_seed(a.common.seed, "field.modulus", 0))?;
        return Ok(Output::new(&[scan], a.common.format, false));
    }
    let c = match a.a {
        Some(c) => c,
        None => knormal::smallest_primitive_root(a.p)?,
    };
    let report = knormal::artin_schreier_check(a.p, c)?;
    let violation = !report.order_is_square_of_x_minus_1 || report.low_normal_count > report.low_normal_bound;
    Ok(Output::new(&[report], a.common.format, violation))
}
