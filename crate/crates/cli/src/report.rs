//! Suite execution and report rendering.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use qlab_core::exec::{par_map_range, Execution};
use serde::Serialize;

use crate::checks::{registry, Check, Verdict, SUITES};
use crate::gen::Gen;
use crate::CliError;

/// Separator between the inputs of one case.
pub const INPUT_SEPARATOR: &str = " | ";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub id: String,
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

/// Per-check tally, shown in text reports only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckSummary {
    pub id: String,
    pub cases: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub checks: Vec<CheckSummary>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Settings shared by every check of a run.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    /// Overrides the case count of randomly generated checks.
    pub cases: Option<usize>,
    pub max_degree: usize,
    pub exec: Execution,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, cases: None, max_degree: 3, exec: Execution::Parallel }
    }
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "unknown panic".to_string())
}

/// Runs `verify` on `inputs`; a panic becomes `Err` with its message.
pub fn guarded_verify(check: &Check, inputs: &[String]) -> Result<qlab_core::Result<Verdict>, String> {
    let refs: Vec<&str> = inputs.iter().map(String::as_str).collect();
    catch_unwind(AssertUnwindSafe(|| (check.verify)(&refs))).map_err(panic_message)
}

/// Runs `verify` on `inputs`, turning errors and panics into failures.
pub fn run_case(check: &Check, inputs: &[String]) -> Verdict {
    match guarded_verify(check, inputs) {
        Ok(Ok(v)) => v,
        Ok(Err(e)) => Verdict::Fail { expected: "no error".to_string(), got: format!("error: {e}") },
        Err(p) => Verdict::Fail { expected: "no panic".to_string(), got: format!("panic: {p}") },
    }
}

/// Runs every case of one check in case order.
pub fn run_check(check: &Check, opts: &RunOptions) -> (CheckSummary, Vec<Failure>) {
    let id = check.id();
    let n = check.case_count(opts.cases);
    let failures: Vec<Failure> = par_map_range(opts.exec, n, |k| {
        let mut gen = Gen::for_case(opts.seed, &id, k, opts.max_degree);
        let inputs = (check.generate)(&mut gen, k);
        match run_case(check, &inputs) {
            Verdict::Pass => None,
            Verdict::Fail { expected, got } => {
                Some(Failure { id: format!("{id}#{k}"), inputs: inputs.join(INPUT_SEPARATOR), expected, got })
            }
        }
    })
    .into_iter()
    .flatten()
    .collect();
    (CheckSummary { passed: n - failures.len(), cases: n, id }, failures)
}

/// Runs a named suite, or every suite for `all`.
pub fn run_suite(name: &str, opts: &RunOptions) -> Result<SuiteReport, CliError> {
    if name != "all" && !SUITES.contains(&name) {
        return Err(CliError::Usage(format!("unknown suite '{name}'; expected one of {}, all", SUITES.join(", "))));
    }
    let mut report = SuiteReport { suite: name.to_string(), cases: 0, passed: 0, failures: Vec::new(), checks: Vec::new() };
    for check in registry().iter().filter(|c| name == "all" || c.suite == name) {
        let (summary, failures) = run_check(check, opts);
        report.cases += summary.cases;
        report.passed += summary.passed;
        report.failures.extend(failures);
        report.checks.push(summary);
    }
    Ok(report)
}

pub fn render_json(report: &SuiteReport) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize")
}

/// Check tallies, then failures, then totals, then `PASS` or `FAIL`.
pub fn render_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    let width = report.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in &report.checks {
        let mark = if c.passed == c.cases { "ok" } else { "FAILED" };
        let _ = writeln!(out, "{:width$}  {:>4}/{:<4} {mark}", c.id, c.passed, c.cases);
    }
    for f in &report.failures {
        let _ = writeln!(out, "\ncounterexample {}\n  inputs:   {}\n  expected: {}\n  got:      {}", f.id, f.inputs, f.expected, f.got);
    }
    let _ = writeln!(out, "\nsuite {}: {} of {} cases passed", report.suite, report.passed, report.cases);
    out.push_str(if report.ok() { "PASS\n" } else { "FAIL\n" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(failures: Vec<Failure>) -> SuiteReport {
        let passed = 3 - failures.len();
        SuiteReport { suite: "topology".into(), cases: 3, passed, failures, checks: vec![] }
    }

    #[test]
    fn empty_failure_list_is_an_empty_array() {
        let json = render_json(&sample(vec![]));
        assert!(json.contains("\"failures\": []"));
        assert!(!json.contains("checks"));
        assert!(render_text(&sample(vec![])).ends_with("PASS\n"));
    }

    #[test]
    fn failures_carry_inputs() {
        let f = Failure { id: "topology/x#0".into(), inputs: "(0,1/2)".into(), expected: "a".into(), got: "b".into() };
        let r = sample(vec![f]);
        let v: serde_json::Value = serde_json::from_str(&render_json(&r)).unwrap();
        assert_eq!(v["failures"][0]["inputs"], "(0,1/2)");
        assert_eq!(v["passed"], 2);
        assert!(render_text(&r).ends_with("FAIL\n"));
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        assert!(matches!(run_suite("nope", &RunOptions::default()), Err(CliError::Usage(_))));
    }

    #[test]
    fn topology_suite_is_deterministic() {
        let opts = RunOptions { seed: 3, cases: Some(20), ..RunOptions::default() };
        let a = run_suite("topology", &opts).unwrap();
        let b = run_suite("topology", &RunOptions { exec: Execution::Sequential, ..opts }).unwrap();
        assert_eq!(render_json(&a), render_json(&b));
        assert!(a.ok(), "{}", render_text(&a));
        assert_eq!(a.cases, 41);
    }
}
