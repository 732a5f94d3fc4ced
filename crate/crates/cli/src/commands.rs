use std::collections::BTreeMap;

use paminus::axioms::{export_problem, ProblemFile};
use paminus::generators::{nu, phi};
use paminus::logic::{parse_formula, print_formula};
use paminus::models::{EvalBudget, ModelRegistry, TruthValue3};
use paminus::numbertheory::{kurschak_certificate, CheckOutcome, CheckParams, CheckRegistry};
use serde_json::{json, Value};

use crate::report::Outcome;
use crate::{CheckArgs, Family, Format, ModelAction, ModelArgs};

/// A failed command: exit code 2, with an optional report for parse failures.
pub struct UsageError {
    pub message: String,
    pub report: Option<Box<Output>>,
}

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        Self {
            message: e.to_string(),
            report: None,
        }
    }
}

pub struct Output {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub outcome: Outcome,
    pub details: Value,
    /// Plain-text rendering used instead of the report when `--json` is off.
    pub text: Option<String>,
}

impl Output {
    fn new(command: &str, params: BTreeMap<String, Value>, outcome: Outcome, details: Value) -> Self {
        Self {
            command: command.to_string(),
            params,
            outcome,
            details,
            text: None,
        }
    }
}

fn params<const N: usize>(entries: [(&str, Value); N]) -> BTreeMap<String, Value> {
    entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

pub fn gen(family: Family, k: u64, format: Format, with_axioms: bool) -> Result<Output, UsageError> {
    let (name, f) = match family {
        Family::Phi => ("phi", phi(k)?),
        Family::Nu => ("nu", nu(k)?),
    };
    let text = match format {
        Format::Native => print_formula(&f),
        Format::Prover => {
            let conj = format!("{name}_{k}");
            let problem = if with_axioms {
                ProblemFile::with_pa_minus(conj, f)
            } else {
                ProblemFile::new(conj, f)
            };
            export_problem(&problem)?.trim_end().to_string()
        }
    };
    let format_name = match format {
        Format::Native => "native",
        Format::Prover => "prover",
    };
    let mut out = Output::new(
        &format!("gen {name}"),
        params([
            ("k", json!(k)),
            ("format", json!(format_name)),
            ("with_axioms", json!(with_axioms)),
        ]),
        Outcome::Pass,
        json!({ "text": text }),
    );
    out.text = Some(text);
    Ok(out)
}

pub fn check(args: &CheckArgs, seed: u64) -> Result<Output, UsageError> {
    let registry = CheckRegistry::builtin();
    let name = args.kind.name();
    let check = registry.get(name).ok_or_else(|| format!("unknown check {name}"))?;
    let p = CheckParams {
        n: args.n,
        k: args.k,
        m: args.m.clone(),
        n_max: args.n_max,
        m_max: args.m_max,
        exhaustive: args.exhaustive,
        samples: args.samples,
        cap: args.cap,
        seed,
    };
    let result = check.run(&p)?;
    let outcome = match result.outcome {
        CheckOutcome::Pass => Outcome::Pass,
        CheckOutcome::Fail => Outcome::Fail,
    };
    Ok(Output::new(
        &format!("check {name}"),
        result.params,
        outcome,
        result.details,
    ))
}

pub fn kurschak(n: u64, k: u64) -> Result<Output, UsageError> {
    let cert = kurschak_certificate(n, k)?;
    let outcome = if cert.verify() { Outcome::Pass } else { Outcome::Fail };
    Ok(Output::new(
        "kurschak",
        params([("n", json!(n)), ("k", json!(k))]),
        outcome,
        serde_json::to_value(&cert)?,
    ))
}

pub fn model(args: &ModelArgs, seed: u64, budget: EvalBudget) -> Result<Output, UsageError> {
    let registry = ModelRegistry::builtin();
    let driver = registry.get(&args.model)?;
    let element = || -> Result<String, UsageError> {
        match (&args.element, driver.nonstandard_example()) {
            (Some(e), _) => Ok(e.clone()),
            (None, Some(x)) => Ok(x),
            (None, None) => Err(format!("the {} model needs --element", args.model).into()),
        }
    };
    let mut p = params([("model", json!(args.model))]);
    match args.action {
        ModelAction::CheckAxioms => {
            let samples = args.samples.unwrap_or(500);
            p.insert("samples".into(), json!(samples));
            p.insert("seed".into(), json!(seed));
            p.insert("max_witness".into(), json!(budget.max_witness));
            let report = driver.check_axioms(samples, budget, seed)?;
            let outcome = if report.failures() > 0 {
                Outcome::Fail
            } else if report.unknowns() > 0 {
                Outcome::Unknown
            } else {
                Outcome::Pass
            };
            Ok(Output::new(
                "model check-axioms",
                p,
                outcome,
                serde_json::to_value(&report)?,
            ))
        }
        ModelAction::ParityDemo => {
            let e = element()?;
            p.insert("element".into(), json!(e));
            p.insert("max_witness".into(), json!(budget.max_witness));
            let report = driver.parity_demo(&e, budget)?;
            let outcome = if report.even == TruthValue3::Unknown || report.odd == TruthValue3::Unknown {
                Outcome::Unknown
            } else {
                Outcome::Pass
            };
            Ok(Output::new(
                "model parity-demo",
                p,
                outcome,
                serde_json::to_value(&report)?,
            ))
        }
        ModelAction::BelowNumeral => {
            let e = element()?;
            let k = args.k.ok_or("below-numeral needs --k")?;
            p.insert("element".into(), json!(e));
            p.insert("k".into(), json!(k));
            let report = driver.below_numeral(&e, k)?;
            Ok(Output::new(
                "model below-numeral",
                p,
                Outcome::Pass,
                serde_json::to_value(&report)?,
            ))
        }
    }
}

pub fn parse(path: &std::path::Path) -> Result<Output, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let p = params([("file", json!(path.display().to_string()))]);
    match parse_formula(&text) {
        Ok(f) => {
            let printed = print_formula(&f);
            let round_trip = parse_formula(&printed).map(|g| g == f).unwrap_or(false);
            let outcome = if round_trip { Outcome::Pass } else { Outcome::Fail };
            Ok(Output::new(
                "parse",
                p,
                outcome,
                json!({
                    "printed": printed,
                    "round_trip": round_trip,
                    "sentence": f.is_sentence(),
                    "size": f.size(),
                }),
            ))
        }
        Err(e) => {
            let details = json!({
                "error": e.to_string(),
                "offset": e.offset,
                "expected": e.expected,
                "found": e.found,
            });
            Err(UsageError {
                message: e.to_string(),
                report: Some(Box::new(Output::new("parse", p, Outcome::Fail, details))),
            })
        }
    }
}
