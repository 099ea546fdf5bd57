//! Front end for the `splitkit` binary.
//!
//! [`run`] does all the work and returns the text and exit code, so the
//! binary only has to print them.

pub mod input;
pub mod report;

use std::fmt::Write as _;

use splitkit::oracle::{EnumerationBudget, Oracle, OracleError};
use splitkit::{
    digraph_splittance, is_digraphic, is_split_sequence, repair, split_partitions, splittance_matrix,
    verify_split_partition, IntegerPairSequence,
};

pub use input::{parse, InputDocument, ParseError};
pub use report::Format;

/// Exit codes shared by every command.
pub mod exit {
    /// Split, or the command succeeded.
    pub const OK: u8 = 0;
    /// Valid input that is not split.
    pub const NOT_SPLIT: u8 = 1;
    /// Malformed input or wrong input kind for the command.
    pub const USAGE: u8 = 2;
    /// Out-of-range or negative degrees, or not digraphic where required.
    pub const INVALID: u8 = 3;
    /// `--oracle` found a disagreement.
    pub const ORACLE: u8 = 4;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Matrix,
    Partitions,
    Repair,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub format: Option<Format>,
    pub oracle: bool,
    /// Append the slack and maximal-sequence rows to `matrix`.
    pub extras: bool,
    pub budget: EnumerationBudget,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn fail(code: u8, message: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), code }
    }
}

/// Budget from `SPLITKIT_ORACLE_MAX_N`, or the default when unset.
pub fn budget_from_env() -> Result<EnumerationBudget, String> {
    match std::env::var("SPLITKIT_ORACLE_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map(|n| EnumerationBudget::default().with_max_vertices(n))
            .map_err(|_| format!("SPLITKIT_ORACLE_MAX_N must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(EnumerationBudget::default()),
    }
}

pub fn run(command: Command, text: &str, opts: &Options) -> Outcome {
    let doc = match input::parse(text) {
        Ok(doc) => doc,
        Err(e) => return Outcome::fail(exit::USAGE, e),
    };
    let d = match doc.sequence() {
        Ok(d) => d,
        Err(e) if command == Command::Check => {
            let format = opts.format.unwrap_or(Format::Kv);
            return Outcome {
                stdout: report::check_report(format, false, None),
                stderr: format!("error: {e}\n"),
                code: exit::INVALID,
            };
        }
        Err(e) => return Outcome::fail(exit::INVALID, e),
    };
    let mut out = match command {
        Command::Check => check(&d, opts),
        Command::Matrix => matrix(&d, opts),
        Command::Partitions => partitions(&d, opts),
        Command::Repair => match doc.digraph() {
            Some(g) => repair_cmd(g, opts),
            None => return Outcome::fail(exit::USAGE, "repair needs a `digraph` input"),
        },
    };
    if opts.oracle && out.code != exit::USAGE && out.code != exit::INVALID {
        let oracle = Oracle::new(opts.budget);
        match cross_check(command, &doc, &d, &oracle) {
            Ok(()) => {}
            Err(Disagreement::Skipped(e)) => {
                let _ = writeln!(out.stderr, "oracle: skipped, {e}");
            }
            Err(Disagreement::Found(msg)) => {
                let _ = writeln!(out.stderr, "oracle: DISAGREEMENT: {msg}");
                out.code = exit::ORACLE;
            }
        }
    }
    out
}

fn check(d: &IntegerPairSequence, opts: &Options) -> Outcome {
    let format = opts.format.unwrap_or(Format::Kv);
    if !is_digraphic(d) {
        return Outcome {
            stdout: report::check_report(format, false, None),
            stderr: "error: sequence is not digraphic\n".into(),
            code: exit::INVALID,
        };
    }
    let split = is_split_sequence(d).expect("digraphic");
    let splittance = digraph_splittance(d).ok();
    Outcome {
        stdout: report::check_report(format, true, Some((split, splittance))),
        stderr: String::new(),
        code: if split { exit::OK } else { exit::NOT_SPLIT },
    }
}

fn matrix(d: &IntegerPairSequence, opts: &Options) -> Outcome {
    let format = opts.format.unwrap_or(Format::Csv);
    let sigma = splittance_matrix(d);
    let mut stdout = report::matrix(format, &sigma);
    if opts.extras {
        stdout.push_str(&report::matrix_extras(format, d));
    }
    Outcome { stdout, stderr: String::new(), code: exit::OK }
}

fn partitions(d: &IntegerPairSequence, opts: &Options) -> Outcome {
    let format = opts.format.unwrap_or(Format::Kv);
    let splits = match split_partitions(d) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(exit::INVALID, e),
    };
    Outcome {
        stdout: report::partitions(format, &splits),
        stderr: String::new(),
        code: if splits.is_empty() { exit::NOT_SPLIT } else { exit::OK },
    }
}

fn repair_cmd(g: &splitkit::Digraph, opts: &Options) -> Outcome {
    let format = opts.format.unwrap_or(Format::Kv);
    match repair(g) {
        Ok(r) => Outcome { stdout: report::edit_script(format, &r.edits), stderr: String::new(), code: exit::OK },
        Err(e) => Outcome::fail(exit::INVALID, e),
    }
}

enum Disagreement {
    Skipped(OracleError),
    Found(String),
}

impl From<OracleError> for Disagreement {
    fn from(e: OracleError) -> Self {
        Disagreement::Skipped(e)
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), Disagreement> {
    if ok {
        Ok(())
    } else {
        Err(Disagreement::Found(msg()))
    }
}

fn cross_check(
    command: Command,
    doc: &InputDocument,
    d: &IntegerPairSequence,
    oracle: &Oracle,
) -> Result<(), Disagreement> {
    match command {
        Command::Check | Command::Matrix => {
            let realizable = oracle.brute_realize(d)?.is_some();
            ensure(realizable == is_digraphic(d), || {
                format!("digraphic={} but realization search says {realizable}", is_digraphic(d))
            })?;
            let fast = splittance_matrix(d);
            let slow = splitkit::splittance::splittance_matrix_by_cells(d);
            ensure(fast == slow, || "fast and cell-wise splittance matrices differ".into())?;
            if realizable && !d.is_empty() {
                let brute = oracle.brute_min_partition_measure(d)?;
                let ours = digraph_splittance(d).expect("digraphic and non-empty") as i64;
                ensure(brute == ours, || format!("splittance {ours}, partition search {brute}"))?;
            }
            if let (Some(g), false) = (doc.digraph(), d.is_empty()) {
                let brute = oracle.brute_splittance(g)? as i64;
                let ours = digraph_splittance(d).expect("realized") as i64;
                ensure(brute == ours, || format!("splittance {ours}, edit search {brute}"))?;
            }
            Ok(())
        }
        Command::Partitions => {
            let splits = split_partitions(d).map_err(|e| Disagreement::Found(e.to_string()))?;
            for s in &splits {
                let m = splitkit::partition_measure(d, &s.partition);
                ensure(m == 0 && s.partition.is_nontrivial(), || {
                    format!("partition at ({},{}) has measure {m}", s.k, s.l)
                })?;
            }
            if splits.is_empty() && !d.is_empty() {
                let brute = oracle.brute_min_partition_measure(d)?;
                ensure(brute > 0, || "no partitions listed but a measure-0 partition exists".into())?;
            }
            Ok(())
        }
        Command::Repair => {
            let g = doc.digraph().expect("repair input is a digraph");
            let r = repair(g).map_err(|e| Disagreement::Found(e.to_string()))?;
            let fixed = r.edits.apply(g);
            ensure(verify_split_partition(&fixed, &r.partition), || "repaired digraph violates its partition".into())?;
            ensure(oracle.is_split_digraph(&fixed), || "repaired digraph is not split".into())?;
            let brute = oracle.brute_splittance(g)?;
            ensure(brute == r.edits.len() as u64, || format!("{} edits, edit search needs {brute}", r.edits.len()))
        }
    }
}
