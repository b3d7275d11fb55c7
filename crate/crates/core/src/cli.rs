//! The `autjac` command line.
//!
//! Exit codes: 0 success, 1 inadmissible or impossible input, 2 internal
//! verification failure, 64 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::exactpoly::Poly;
use crate::oracle::{realizations, survey_range, OracleError, VerificationReport};
use crate::spectrum::{factored_display, profile_from_poly, CyclotomicProfile, SpectrumError};
use crate::theorem::{
    charpoly_cases_with, classify, inertia_options, quotient_genus, CaseTag, CharClass,
    CharPolyResult, GenusFloor, Parity, RamConfig, TheoremError, Triple,
};

pub const SCHEMA: &str = "autjac/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "autjac",
    version,
    about = "Characteristic polynomials of hyperelliptic curve automorphisms on the Jacobian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Candidate characteristic polynomials for (g, n, nbar)
    Charpoly {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        order: u64,
        #[arg(long = "reduced-order")]
        reduced_order: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Accept genus 1
        #[arg(long)]
        allow_genus_one: bool,
    },
    /// All admissible (n, nbar) for a genus
    Classify {
        #[arg(long)]
        genus: u64,
        /// Mark which entries a rotation model realizes
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// The genus-2 table of (n, nbar) and polynomials
    #[command(name = "table-genus2")]
    TableGenus2 {
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Genus of the quotient by a cyclic group not containing the involution
    #[command(name = "quotient-genus")]
    QuotientGenus {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        order: u64,
        #[arg(long = "common-ram")]
        common_ram: u8,
        #[arg(long = "char", value_enum)]
        char_class: CharArg,
    },
    /// Possible inertia groups
    Inertia {
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long = "char", value_enum)]
        char_class: CharArg,
    },
    /// Compare the fixed-point oracle against the closed forms
    Verify {
        #[arg(long = "from")]
        from: u64,
        #[arg(long = "to")]
        to: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Factored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CharArg {
    NotTwo,
    Two,
}

impl From<CharArg> for CharClass {
    fn from(c: CharArg) -> Self {
        match c {
            CharArg::NotTwo => CharClass::NotTwo,
            CharArg::Two => CharClass::Two,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

/// Output of `charpoly`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolyRecord {
    pub schema: String,
    pub genus: u64,
    pub order: u64,
    pub reduced_order: u64,
    pub case: CaseTag,
    pub ambiguous: bool,
    pub candidates: Vec<Poly>,
    /// Per candidate, `[d, exponent of Φ_d]` pairs.
    pub factored: Vec<Vec<(u64, u64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profiles: Option<Vec<CyclotomicProfile>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyEntry {
    pub order: u64,
    pub reduced_order: u64,
    pub case: CaseTag,
    pub candidates: Vec<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnessed: Option<bool>,
}

/// Output of `classify` and `table-genus2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub schema: String,
    pub genus: u64,
    pub entries: Vec<ClassifyEntry>,
}

impl ClassifyEntry {
    pub fn from_result(r: &CharPolyResult) -> Self {
        ClassifyEntry {
            order: r.triple.n,
            reduced_order: r.triple.nbar,
            case: r.case.tag,
            candidates: r.candidates.clone(),
            witnessed: None,
        }
    }
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    schema: &'a str,
    error: String,
}

#[derive(Serialize)]
struct QuotientGenusRecord<'a> {
    schema: &'a str,
    h: u64,
}

#[derive(Serialize)]
struct InertiaRecord<'a> {
    schema: &'a str,
    groups: Vec<String>,
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    schema: &'a str,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<TheoremError> for Failure {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Formula(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<SpectrumError> for Failure {
    fn from(e: SpectrumError) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let text = serde_json::to_string(value).expect("records serialize");
    writeln!(out, "{text}")
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = dispatch(cli.command, out);
    match result {
        Ok(Ok(code)) => code,
        Ok(Err(failure)) => {
            let (code, message) = match failure {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            let _ = json_line(
                out,
                &ErrorRecord {
                    schema: SCHEMA,
                    error: message,
                },
            );
            code
        }
        Err(io) => {
            let _ = writeln!(err, "autjac: {io}");
            EXIT_INTERNAL
        }
    }
}

type Outcome = std::io::Result<Result<i32, Failure>>;

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Charpoly {
            genus,
            order,
            reduced_order,
            format,
            allow_genus_one,
        } => {
            let floor = if allow_genus_one {
                GenusFloor::Relaxed
            } else {
                GenusFloor::Hyperelliptic
            };
            charpoly(out, genus, order, reduced_order, format, floor)
        }
        Command::Classify {
            genus,
            witness,
            format,
        } => classify_cmd(out, genus, witness, format),
        Command::TableGenus2 { format } => classify_cmd(out, 2, false, format),
        Command::QuotientGenus {
            genus,
            order,
            common_ram,
            char_class,
        } => {
            let h = RamConfig::new(genus, order, common_ram, char_class.into())
                .and_then(|cfg| quotient_genus(&cfg));
            match h {
                Ok(h) => {
                    json_line(out, &QuotientGenusRecord { schema: SCHEMA, h })?;
                    Ok(Ok(EXIT_OK))
                }
                Err(e) => Ok(Err(e.into())),
            }
        }
        Command::Inertia { parity, char_class } => {
            match inertia_options(parity.into(), char_class.into()) {
                Ok(groups) => {
                    let groups = groups.iter().map(ToString::to_string).collect();
                    json_line(
                        out,
                        &InertiaRecord {
                            schema: SCHEMA,
                            groups,
                        },
                    )?;
                    Ok(Ok(EXIT_OK))
                }
                Err(e) => Ok(Err(e.into())),
            }
        }
        Command::Verify { from, to, jobs } => {
            if from > to {
                return Ok(Err(Failure::Input(format!(
                    "empty genus range {from}..={to}"
                ))));
            }
            let report = survey_range(from, to, jobs);
            json_line(
                out,
                &VerifyRecord {
                    schema: SCHEMA,
                    report: &report,
                },
            )?;
            Ok(Ok(if report.is_clean() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }))
        }
    }
}

/// Builds the `charpoly` record, checking that every candidate is cyclotomic.
/// `with_profiles` adds the `{"order", "counts"}` profile of each candidate.
pub fn charpoly_record(
    result: &CharPolyResult,
    with_profiles: bool,
) -> Result<CharpolyRecord, SpectrumError> {
    let profiles = result
        .candidates
        .iter()
        .map(|f| profile_from_poly(f, result.triple.n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CharpolyRecord {
        schema: SCHEMA.to_string(),
        genus: result.triple.g,
        order: result.triple.n,
        reduced_order: result.triple.nbar,
        case: result.case.tag,
        ambiguous: result.is_ambiguous(),
        candidates: result.candidates.clone(),
        factored: profiles.iter().map(CyclotomicProfile::exponents).collect(),
        profiles: with_profiles.then_some(profiles),
    })
}

fn charpoly(
    out: &mut dyn Write,
    g: u64,
    n: u64,
    nbar: u64,
    format: Format,
    floor: GenusFloor,
) -> Outcome {
    let result = match charpoly_cases_with(g, n, nbar, floor) {
        Ok(r) => r,
        Err(e) => return Ok(Err(e.into())),
    };
    let record = match charpoly_record(&result, format == Format::Factored) {
        Ok(r) => r,
        Err(e) => return Ok(Err(e.into())),
    };
    match format {
        Format::Json | Format::Factored => json_line(out, &record)?,
        Format::Text => {
            let c = result.case;
            let class = match c.congruence_class {
                0 => "2g = 0".to_string(),
                k => format!("2g = {k}"),
            };
            writeln!(
                out,
                "{}: case {} ({class} mod {nbar}){}",
                result.triple,
                c.tag,
                if result.is_ambiguous() {
                    ", ambiguous"
                } else {
                    ""
                }
            )?;
            for f in &result.candidates {
                let prof = profile_from_poly(f, n).expect("checked above");
                writeln!(out, "  {} = {}", factored_display(&prof), f)?;
            }
        }
    }
    Ok(Ok(EXIT_OK))
}

fn classify_cmd(out: &mut dyn Write, g: u64, witness: bool, format: ListFormat) -> Outcome {
    let results = classify(g);
    let witnessed: Option<Vec<Triple>> = if witness {
        match realizations(g) {
            Ok(rs) => Some(rs.into_iter().map(|r| r.triple).collect()),
            Err(e) => return Ok(Err(e.into())),
        }
    } else {
        None
    };
    let entries: Vec<ClassifyEntry> = results
        .iter()
        .map(|r| {
            let mut e = ClassifyEntry::from_result(r);
            e.witnessed = witnessed.as_ref().map(|w| w.contains(&r.triple));
            e
        })
        .collect();
    match format {
        ListFormat::Json => json_line(
            out,
            &ClassifyRecord {
                schema: SCHEMA.to_string(),
                genus: g,
                entries,
            },
        )?,
        ListFormat::Text => {
            writeln!(out, "genus {g}")?;
            writeln!(out, "{:<12}{:<6}f", "(n, nbar)", "case")?;
            for (r, e) in results.iter().zip(&entries) {
                let forms: Vec<String> = r
                    .candidates
                    .iter()
                    .map(|f| match profile_from_poly(f, r.triple.n) {
                        Ok(p) => factored_display(&p),
                        Err(_) => f.to_string(),
                    })
                    .collect();
                let mark = match e.witnessed {
                    Some(true) => "  [witnessed]",
                    Some(false) => "  [not witnessed]",
                    None => "",
                };
                writeln!(
                    out,
                    "{:<12}{:<6}{}{mark}",
                    format!("({}, {})", r.triple.n, r.triple.nbar),
                    r.case.tag.to_string(),
                    forms.join("  or  ")
                )?;
            }
        }
    }
    Ok(Ok(EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("autjac").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn charpoly_json() {
        let (code, out, _) = run_str(&[
            "charpoly",
            "--genus",
            "2",
            "--order",
            "8",
            "--reduced-order",
            "4",
        ]);
        assert_eq!(code, 0);
        let rec: CharpolyRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(rec.candidates, vec![Poly::from_i64s(&[1, 0, 0, 0, 1])]);
        assert_eq!(rec.factored, vec![vec![(8, 1)]]);
        assert!(!rec.ambiguous);
    }

    #[test]
    fn usage_errors_exit_64() {
        let (code, _, err) = run_str(&["charpoly", "--genus", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!err.is_empty());
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["inertia", "--parity", "seven", "--char", "two"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("charpoly"));
    }

    #[test]
    fn relaxed_genus_one() {
        let args = [
            "charpoly",
            "--genus",
            "1",
            "--order",
            "2",
            "--reduced-order",
            "1",
        ];
        assert_eq!(run_str(&args).0, EXIT_INPUT);
        let mut relaxed = args.to_vec();
        relaxed.push("--allow-genus-one");
        let (code, out, _) = run_str(&relaxed);
        assert_eq!(code, 0);
        assert!(out.contains("[[1,2,1]]"));
    }

    #[test]
    fn empty_verify_range_is_input_error() {
        assert_eq!(
            run_str(&["verify", "--from", "5", "--to", "3"]).0,
            EXIT_INPUT
        );
    }
}
