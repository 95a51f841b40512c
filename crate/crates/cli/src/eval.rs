//! `qlab eval`: parse one expression and apply an operation.

use qlab_core::finalg::{all_ideals, ideal_predicates, isomorphism, q_max, ring_predicates, stone_duality, FinBoolAlg};
use qlab_core::limits::{cyl_norm, parse_cylinder};
use qlab_core::parse::{parse_algebraic, parse_function, parse_set};
use qlab_core::pwfun::{pi_value, Norm};
use qlab_core::quotient::{idempotent_of, parse_qelement, step_approx, unit_decomposition};
use qlab_core::exactnum::rational::render;

use crate::checks::{find, parse_ring, Verdict};
use crate::report::guarded_verify;
use crate::CliError;

/// Operations accepted by `--op`, besides `check:<name>`.
pub const OPS: [&str; 20] = [
    "show", "regularize", "closure", "interior", "reg-complement", "is-regular", "idempotent", "pi", "norm", "cozero",
    "zero-set", "quasi-inverse", "unit-decomp", "step-approx", "domain", "qmax", "ideals", "predicates", "stone",
    "cyl-norm",
];

/// Rendered result and whether it reports success.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalOutput {
    pub text: String,
    pub ok: bool,
}

impl EvalOutput {
    fn ok(text: impl Into<String>) -> Self {
        EvalOutput { text: text.into(), ok: true }
    }
}

fn norm_text(n: &Norm) -> String {
    match n {
        Norm::Finite(v) => v.render(),
        Norm::Infinite => "unbounded".to_string(),
    }
}

/// Canonical form of whatever `text` parses as: cylinder, ring, set,
/// algebraic number, function or quotient element, tried in that order.
fn show(text: &str) -> Result<String, CliError> {
    let t = text.trim();
    if t.starts_with("cyl") {
        return Ok(parse_cylinder(t)?.render());
    }
    if let Ok(r) = parse_ring(t) {
        return Ok(r.to_string());
    }
    if let Ok(s) = parse_set(t) {
        return Ok(s.render());
    }
    if let Ok(a) = parse_algebraic(t) {
        return Ok(a.render());
    }
    if let Ok(f) = parse_function(t) {
        return Ok(f.render());
    }
    Ok(parse_qelement(t)?.render())
}

pub fn eval(op: &str, n: Option<u32>, text: &str) -> Result<EvalOutput, CliError> {
    if let Some(name) = op.strip_prefix("check:") {
        let check = find(name).ok_or_else(|| CliError::Usage(format!("unknown check '{name}'")))?;
        let inputs: Vec<String> = text.split('|').map(|s| s.trim().to_string()).collect();
        return match guarded_verify(&check, &inputs) {
            Ok(Ok(Verdict::Pass)) => Ok(EvalOutput::ok("PASS")),
            Ok(Ok(Verdict::Fail { expected, got })) => {
                Ok(EvalOutput { text: format!("FAIL\nexpected: {expected}\ngot: {got}"), ok: false })
            }
            Ok(Err(e)) => Err(e.into()),
            Err(p) => Ok(EvalOutput { text: format!("FAIL\npanic: {p}"), ok: false }),
        };
    }
    let out = match op {
        "show" => show(text)?,
        "regularize" => parse_set(text)?.regularize()?.render(),
        "closure" => parse_set(text)?.closure().render(),
        "interior" => parse_set(text)?.interior().render(),
        "reg-complement" => {
            let s = parse_set(text)?;
            s.require_open()?;
            s.reg_complement().render()
        }
        "is-regular" => parse_set(text)?.is_regular_open().to_string(),
        "idempotent" => idempotent_of(&parse_set(text)?)?.render(),
        "pi" => pi_value(&parse_function(text)?).render(),
        "norm" => norm_text(&parse_function(text)?.sup_norm()),
        "cozero" => parse_function(text)?.cozero_set().render(),
        "zero-set" => parse_function(text)?.zero_set().render(),
        "quasi-inverse" => parse_qelement(text)?.quasi_inverse().render(),
        "domain" => parse_qelement(text)?.domain().render(),
        "unit-decomp" => {
            let d = unit_decomposition(&parse_qelement(text)?)?;
            format!("c = {}\nf = {}\ne = {}\nu = {}\nu^-1 = {}", d.c, d.f, d.e, d.u, d.u_inverse)
        }
        "step-approx" => {
            let n = n.ok_or_else(|| CliError::Usage("step-approx needs --n <k>".to_string()))?;
            let g = parse_qelement(text)?;
            let t = step_approx(&g, n)?;
            let mut lines = vec![format!("s = {}", t.step.rep())];
            lines.extend(t.parts.iter().map(|(v, s)| format!("{} on {}", render(v), s)));
            lines.push(format!("sup |g - s| = {}", norm_text(&g.sub(&t.step.to_q()).rep().sup_norm())));
            lines.join("\n")
        }
        "qmax" => {
            let r = parse_ring(text)?;
            let q = q_max(&r)?;
            match isomorphism(&q.ring, &r) {
                Some(_) => format!("isomorphic to {}", r.name()),
                None => format!("order {}\n{}", q.ring.order(), q.ring),
            }
        }
        "ideals" => {
            let r = parse_ring(text)?;
            let lines: Vec<String> = all_ideals(&r)
                .into_iter()
                .map(|i| {
                    let f = ideal_predicates(&r, i);
                    format!("{} dense={} large={}", i.render(&r), f.dense, f.large)
                })
                .collect();
            lines.join("\n")
        }
        "predicates" => {
            let p = ring_predicates(&parse_ring(text)?);
            format!("semi-prime: {}\nsemi-simple: {}\nregular: {}", p.semi_prime, p.semi_simple, p.regular)
        }
        "stone" => {
            let b = FinBoolAlg::from_idempotents(&parse_ring(text)?)?;
            let s = stone_duality(&b);
            let verdict = if s.report.ok() { "ok".to_string() } else { s.report.failures.join("; ") };
            format!("atoms {}, maximal ideals {}, pairs {}: {verdict}", s.atoms, s.max_ideals, s.pairs)
        }
        "cyl-norm" => render(&cyl_norm(&parse_cylinder(text)?)),
        _ => return Err(CliError::Usage(format!("unknown operation '{op}'; expected one of {}, check:<name>", OPS.join(", ")))),
    };
    Ok(EvalOutput::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(op: &str, text: &str) -> String {
        eval(op, None, text).unwrap().text
    }

    #[test]
    fn documented_examples() {
        assert_eq!(run("regularize", "(0,1/2)"), "[0,1/2)");
        assert_eq!(run("norm", "piece([0,1], x*(1-x))"), "1/4");
        assert_eq!(run("qmax", "Z6"), "isomorphic to Z6");
        assert_eq!(run("pi", "x - 1/2"), run("show", "abs(x - 1/2)"));
        assert_eq!(run("show", "root(4*x^2 - 1, 0, 1)"), "1/2");
        assert_eq!(run("show", "cyl(2; 0, 0, 1, 1)"), "cyl(1; 0, 1)");
    }

    #[test]
    fn step_approximation_needs_n() {
        assert!(matches!(eval("step-approx", None, "x"), Err(CliError::Usage(_))));
        let t = eval("step-approx", Some(2), "x").unwrap().text;
        assert!(t.ends_with("sup |g - s| = 1/2"), "{t}");
    }

    #[test]
    fn errors_are_classified() {
        assert_eq!(eval("regularize", None, "(0,").unwrap_err().exit_code(), 2);
        assert_eq!(eval("reg-complement", None, "[0,1/2]").unwrap_err().exit_code(), 1);
        assert_eq!(eval("frobnicate", None, "x").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn checks_replay() {
        assert_eq!(eval("check:join_of_halves", None, "[0,1/2) | (1/2,1]").unwrap(), EvalOutput::ok("PASS"));
        let fail = eval("check:join_of_halves", None, "[0,1/2) | (1/3,1]").unwrap();
        assert!(!fail.ok && fail.text.starts_with("FAIL"));
        assert_eq!(eval("check:step_approx", None, "1/x | 2").unwrap_err().exit_code(), 1);
        assert_eq!(eval("check:step_approx", None, "x | two").unwrap_err().exit_code(), 2);
    }
}
