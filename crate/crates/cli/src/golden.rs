//! Golden session scripts with their expected (timing-masked) JSON reports
//! and exit codes.

use crate::exec::{execute, ExecOptions};
use crate::session::parse_session;

pub struct GoldenCase {
    pub name: &'static str,
    pub script: &'static str,
    pub expected_json: &'static str,
    pub exit_code: i32,
}

macro_rules! case {
    ($name:literal, $code:expr) => {
        GoldenCase {
            name: $name,
            script: include_str!(concat!("../tests/golden/", $name, ".fg")),
            expected_json: include_str!(concat!("../tests/golden/", $name, ".json")),
            exit_code: $code,
        }
    };
}

pub const CASES: &[GoldenCase] = &[
    case!("basic", 0),
    case!("lex_f3", 0),
    case!("product", 0),
    case!("counterexample", 0),
    case!("verdict_fail", 1),
    case!("rejected", 2),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenOutcome {
    pub name: &'static str,
    /// Two runs gave byte-identical masked JSON.
    pub deterministic: bool,
    pub matches_expected: bool,
    pub exit_code_ok: bool,
}

impl GoldenOutcome {
    pub fn pass(&self) -> bool {
        self.deterministic && self.matches_expected && self.exit_code_ok
    }
}

/// Runs every golden case twice with default options.
pub fn run_golden() -> Vec<GoldenOutcome> {
    CASES
        .iter()
        .map(|case| {
            let opts = ExecOptions::default();
            match parse_session(case.script) {
                Ok(script) => {
                    let first = execute(&script, &opts);
                    let second = execute(&script, &opts);
                    let json = first.masked_json();
                    GoldenOutcome {
                        name: case.name,
                        deterministic: json == second.masked_json(),
                        matches_expected: json == case.expected_json,
                        exit_code_ok: first.exit_code() == case.exit_code,
                    }
                }
                Err(_) => GoldenOutcome {
                    name: case.name,
                    deterministic: false,
                    matches_expected: false,
                    exit_code_ok: false,
                },
            }
        })
        .collect()
}
