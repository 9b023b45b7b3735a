//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the captured output, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 internal inconsistency, 2 invalid input,
//! 3 symmetric input where a non-symmetric one is required.

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classify::{self, ClassificationRecord, ScanOptions, ScanReport};
use crate::error::Error;
use crate::herzog::{self, Branch};
use crate::semigroup::Semigroup;
use crate::simple;

#[derive(Debug, Parser)]
#[command(
    name = "numsg",
    version,
    about = "Invariants and classification of numerical semigroups"
)]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frobenius number, genus, pseudo-Frobenius numbers, type, symmetry.
    Info {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        /// Include the full list of gaps.
        #[arg(long)]
        gaps: bool,
    },
    /// Exponents of the monomial matrix of a non-symmetric <a, b, c>.
    ///
    /// The order of a, b, c is kept as given: an odd permutation of the
    /// generators yields different exponents.
    Matrix {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
    },
    /// Pseudo-symmetric <a, b, c> with Frobenius number F.
    Classify {
        #[arg(allow_negative_numbers = true)]
        f: i64,
        /// Also list rejected and duplicate candidates with their verdicts.
        #[arg(long)]
        all_records: bool,
    },
    /// Classify every even F in [LO, HI].
    Scan {
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
        /// Only report F with no semigroup.
        #[arg(long)]
        only_empty: bool,
        /// Only visit multiples of 12.
        #[arg(long)]
        mult12: bool,
    },
    /// Delta values, simplicity, and the pseudo-Frobenius formula.
    Simple {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HerzogSection {
    pub order: [i64; 3],
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
    pub f: i64,
    pub f_prime: i64,
    pub branch: Branch,
    pub genus_gap: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleSection {
    /// Aligned with `minimal_generators`.
    pub deltas: Vec<i64>,
    pub is_simple: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pf: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pf_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub generators: Vec<i64>,
    pub minimal_generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<i64>>,
    pub pf: Vec<i64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub herzog: Option<HerzogSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple: Option<SimpleSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub f: i64,
    pub accepted: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<ClassificationRecord>>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(err: &Error) -> Self {
        Self {
            code: exit_code(err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SymmetricInput => 3,
        Error::Inconsistent(_) | Error::NonUniqueDecomposition(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Info { generators, gaps } => {
            cmd_info(generators, *gaps).map(|r| Rendered::Record(Box::new(r)))
        }
        Command::Matrix { a, b, c } => {
            cmd_matrix([*a, *b, *c]).map(|r| Rendered::Record(Box::new(r)))
        }
        Command::Classify { f, all_records } => {
            cmd_classify(*f, *all_records).map(Rendered::Classify)
        }
        Command::Scan {
            lo,
            hi,
            only_empty,
            mult12,
        } => cmd_scan(*lo, *hi, *only_empty, *mult12).map(Rendered::Scan),
        Command::Simple { generators } => {
            cmd_simple(generators).map(|r| Rendered::Record(Box::new(r)))
        }
    };
    match result {
        Ok(out) => Outcome::ok(if cli.json { out.json() } else { out.text() }),
        Err(e) => Outcome::failure(&e),
    }
}

enum Rendered {
    Record(Box<OutputRecord>),
    Classify(ClassifyOutput),
    Scan(ScanReport),
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl Rendered {
    fn json(&self) -> String {
        let mut s = match self {
            Rendered::Record(r) => serde_json::to_string_pretty(r),
            Rendered::Classify(c) => serde_json::to_string_pretty(c),
            Rendered::Scan(s) => serde_json::to_string_pretty(s),
        }
        .expect("output types serialize");
        s.push('\n');
        s
    }

    fn text(&self) -> String {
        match self {
            Rendered::Record(r) => record_text(r),
            Rendered::Classify(c) => classify_text(c),
            Rendered::Scan(s) => scan_text(s),
        }
    }
}

fn record_text(r: &OutputRecord) -> String {
    let mut out = String::new();
    let mut line = |k: &str, v: String| {
        let _ = writeln!(out, "{k}: {v}");
    };
    line("generators", join(&r.generators));
    line("minimal_generators", join(&r.minimal_generators));
    line("frobenius", r.frobenius.to_string());
    line("genus", r.genus.to_string());
    if let Some(gaps) = &r.gaps {
        line("gaps", join(gaps));
    }
    line("pf", join(&r.pf));
    line("type", r.semigroup_type.to_string());
    line("symmetric", r.symmetric.to_string());
    line("pseudo_symmetric", r.pseudo_symmetric.to_string());
    if let Some(h) = &r.herzog {
        line("order", join(&h.order));
        line(
            "exponents",
            join(&[h.alpha, h.beta, h.gamma, h.alpha_p, h.beta_p, h.gamma_p]),
        );
        line("f", h.f.to_string());
        line("f_prime", h.f_prime.to_string());
        line("branch", h.branch.as_str().to_string());
        line("genus_gap", h.genus_gap.to_string());
    }
    if let Some(s) = &r.simple {
        line("simple", s.is_simple.to_string());
        line("deltas", join(&s.deltas));
        if let Some(pf) = &s.pf {
            line("simple_pf", join(pf));
        }
        if let Some(agrees) = s.pf_agrees {
            line("pf_agrees", agrees.to_string());
        }
    }
    out
}

fn classify_text(c: &ClassifyOutput) -> String {
    let mut out = String::new();
    match &c.records {
        Some(records) => {
            for r in records {
                let _ = writeln!(
                    out,
                    "{} -> {} {}: {}",
                    join(&r.triple),
                    join(&r.candidate),
                    r.verdict,
                    r.reason
                );
            }
        }
        None => {
            for g in &c.accepted {
                let _ = writeln!(out, "{}", join(g));
            }
        }
    }
    out
}

fn scan_text(report: &ScanReport) -> String {
    let mut out = String::new();
    for e in &report.per_f {
        let _ = write!(out, "{}: {}", e.f, e.count);
        for g in &e.semigroups {
            let _ = write!(out, " [{}]", join(g));
        }
        out.push('\n');
    }
    out
}

fn base_record(s: &Semigroup) -> Result<OutputRecord, Error> {
    let pf = if s.is_whole() {
        Vec::new()
    } else {
        s.pseudo_frobenius()?.values
    };
    let frobenius = s.frobenius();
    if pf.last().copied().unwrap_or(-1) != frobenius {
        return Err(Error::Inconsistent(format!(
            "largest pseudo-Frobenius number differs from F = {frobenius}"
        )));
    }
    let mut generators = s.generators().to_vec();
    generators.sort_unstable();
    Ok(OutputRecord {
        generators,
        minimal_generators: s.minimal_generators().to_vec(),
        frobenius,
        genus: s.genus(),
        gaps: None,
        semigroup_type: pf.len(),
        pf,
        symmetric: s.is_symmetric(),
        pseudo_symmetric: s.is_pseudo_symmetric(),
        herzog: None,
        simple: None,
    })
}

pub fn cmd_info(generators: &[i64], with_gaps: bool) -> Result<OutputRecord, Error> {
    let s = Semigroup::new(generators)?;
    let mut record = base_record(&s)?;
    if with_gaps {
        let gaps = s.gaps();
        if gaps.len() as i64 != record.genus {
            return Err(Error::Inconsistent("gap count differs from genus".into()));
        }
        record.gaps = Some(gaps);
    }
    Ok(record)
}

pub fn cmd_matrix(order: [i64; 3]) -> Result<OutputRecord, Error> {
    let s = Semigroup::new(&order)?;
    let e = herzog::solve_exponents(&s, order)?;
    let pf = herzog::pf_from_exponents(&e, order)?;
    let genus_gap = herzog::genus_gap(&e, order)?;
    let mut record = base_record(&s)?;
    let mut pair = [pf.f, pf.f_prime];
    pair.sort_unstable();
    if pair[..] != record.pf[..] {
        return Err(Error::Inconsistent(format!(
            "exponent PF {pair:?} differs from direct PF {:?}",
            record.pf
        )));
    }
    if genus_gap != 2 * record.genus - (record.frobenius + 1) {
        return Err(Error::Inconsistent(
            "genus gap differs from 2g - (F + 1)".into(),
        ));
    }
    record.herzog = Some(HerzogSection {
        order,
        alpha: e.alpha,
        beta: e.beta,
        gamma: e.gamma,
        alpha_p: e.alpha_p,
        beta_p: e.beta_p,
        gamma_p: e.gamma_p,
        f: pf.f,
        f_prime: pf.f_prime,
        branch: pf.branch,
        genus_gap,
    });
    Ok(record)
}

pub fn cmd_classify(f: i64, all_records: bool) -> Result<ClassifyOutput, Error> {
    let records = classify::classify_pseudo_symmetric(f)?;
    Ok(ClassifyOutput {
        f,
        accepted: classify::accepted(&records),
        records: all_records.then_some(records),
    })
}

pub fn cmd_scan(lo: i64, hi: i64, only_empty: bool, mult12: bool) -> Result<ScanReport, Error> {
    let opts = ScanOptions {
        mult12_only: mult12,
        ..Default::default()
    };
    let mut report = classify::scan_with(lo, hi, opts)?;
    if only_empty {
        report.per_f.retain(|e| e.count == 0);
    }
    Ok(report)
}

pub fn cmd_simple(generators: &[i64]) -> Result<OutputRecord, Error> {
    let s = Semigroup::new(generators)?;
    let profile = simple::delta_profile(&s)?;
    let is_simple = s.minimal_generators()[0] == profile.simple_bound();
    let mut record = base_record(&s)?;
    let (pf, pf_agrees) = if is_simple {
        let formula = simple::simple_pf(&s)?.values;
        let agrees = formula == record.pf;
        if !agrees {
            return Err(Error::Inconsistent(format!(
                "simple PF {formula:?} differs from direct PF {:?}",
                record.pf
            )));
        }
        (Some(formula), Some(agrees))
    } else {
        (None, None)
    };
    record.simple = Some(SimpleSection {
        deltas: profile.deltas,
        is_simple,
        pf,
        pf_agrees,
    });
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("numsg").chain(args.iter().copied()))
    }

    #[test]
    fn info_text() {
        let out = run_args(&["info", "4", "11", "13"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("frobenius: 18\n"));
        assert!(out.stdout.contains("genus: 10\n"));
        assert!(out.stdout.contains("pf: 9 18\n"));
        assert!(out.stdout.contains("pseudo_symmetric: true\n"));
        assert!(!out.stdout.contains("gaps:"));
    }

    #[test]
    fn info_whole_semigroup() {
        let r = cmd_info(&[1], true).unwrap();
        assert_eq!((r.frobenius, r.genus, r.semigroup_type), (-1, 0, 0));
        assert_eq!(r.gaps, Some(vec![]));
    }

    #[test]
    fn info_rejects_common_factor() {
        let out = run_args(&["info", "2", "4"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("gcd > 1"));
        assert_eq!(run_args(&["info", "-3", "5"]).code, 2);
        assert_eq!(run_args(&["info"]).code, 2);
    }

    #[test]
    fn matrix_command() {
        let r = cmd_matrix([4, 11, 13]).unwrap();
        let h = r.herzog.unwrap();
        assert_eq!(
            [h.alpha, h.beta, h.gamma, h.alpha_p, h.beta_p, h.gamma_p],
            [5, 2, 1, 1, 1, 1]
        );
        assert_eq!((h.f, h.f_prime, h.genus_gap), (18, 9, 1));
        let h = cmd_matrix([3, 5, 7]).unwrap().herzog.unwrap();
        assert_eq!(
            [h.alpha, h.beta, h.gamma, h.alpha_p, h.beta_p, h.gamma_p],
            [1, 1, 1, 3, 1, 1]
        );
        assert_eq!(run_args(&["matrix", "4", "6", "9"]).code, 3);
        assert_eq!(run_args(&["matrix", "2", "3", "4"]).code, 2);
    }

    #[test]
    fn classify_text_output() {
        assert_eq!(run_args(&["classify", "18"]).stdout, "4 11 13\n5 7 16\n");
        let empty = run_args(&["classify", "12"]);
        assert_eq!((empty.code, empty.stdout.as_str()), (0, ""));
        assert_eq!(run_args(&["classify", "48"]).stdout, "7 11 31\n");
        assert_eq!(run_args(&["classify", "17"]).code, 2);
    }

    #[test]
    fn scan_text_output() {
        assert_eq!(run_args(&["scan", "4", "4"]).stdout, "4: 1 [3 5 7]\n");
        assert_eq!(run_args(&["scan", "1596", "1596"]).stdout, "1596: 0\n");
        assert_eq!(run_args(&["scan", "10", "4"]).code, 2);
    }

    #[test]
    fn simple_command() {
        let out = run_args(&["simple", "4", "11", "13"]);
        assert!(out.stdout.contains("simple: true\n"));
        assert!(out.stdout.contains("deltas: 6 3 2\n"));
        assert!(out.stdout.contains("simple_pf: 9 18\n"));
        assert!(run_args(&["simple", "2", "3"])
            .stdout
            .contains("simple: true\n"));
        assert!(run_args(&["simple", "3", "5", "7"])
            .stdout
            .contains("simple_pf: 2 4\n"));
        assert_eq!(run_args(&["simple", "1"]).code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("matrix"));
    }
}
