//! Named checks over the number-theoretic searches, selectable at runtime.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use super::{fraction_sum, search_nagell_counterexample, search_phi_counterexample, NtError, PhiSearchConfig};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub m: Option<Vec<u64>>,
    pub n_max: Option<u64>,
    pub m_max: Option<u64>,
    pub exhaustive: bool,
    pub samples: Option<u64>,
    pub cap: Option<u64>,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub outcome: CheckOutcome,
    /// The parameters actually used, defaults filled in.
    pub params: BTreeMap<String, Value>,
    pub details: Value,
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, params: &CheckParams) -> Result<CheckResult, NtError>;
}

fn required(v: Option<u64>, name: &str) -> Result<u64, NtError> {
    v.ok_or_else(|| NtError::Domain(format!("missing parameter {name}")))
}

fn outcome(fail: bool) -> CheckOutcome {
    if fail {
        CheckOutcome::Fail
    } else {
        CheckOutcome::Pass
    }
}

/// Exact value of one fraction sum (unit numerators unless `m` is given),
/// or of the harmonic sums for every `n <= n_max`.
pub struct Harmonic;

impl Check for Harmonic {
    fn name(&self) -> &'static str {
        "harmonic"
    }

    fn run(&self, p: &CheckParams) -> Result<CheckResult, NtError> {
        let k = required(p.k, "k")?;
        let mut params = BTreeMap::from([("k".to_string(), json!(k))]);
        if let Some(n_max) = p.n_max {
            params.insert("n_max".into(), json!(n_max));
            let hit = (1..=n_max).find_map(|n| {
                let q = fraction_sum(n, k, &vec![1; k as usize + 1]).ok()?;
                q.is_integer().then(|| json!({"n": n, "value": q}))
            });
            return Ok(CheckResult {
                outcome: outcome(hit.is_some()),
                params,
                details: json!({"instances_checked": n_max, "counterexample": hit}),
            });
        }
        let n = required(p.n, "n")?;
        let m = p.m.clone().unwrap_or_else(|| vec![1; k as usize + 1]);
        params.insert("n".into(), json!(n));
        params.insert("m".into(), json!(m));
        let value = fraction_sum(n, k, &m)?;
        Ok(CheckResult {
            outcome: outcome(value.is_integer()),
            params,
            details: json!({"value": value, "is_integer": value.is_integer()}),
        })
    }
}

pub struct Nagell;

impl Check for Nagell {
    fn name(&self) -> &'static str {
        "nagell"
    }

    fn run(&self, p: &CheckParams) -> Result<CheckResult, NtError> {
        let k = required(p.k, "k")?;
        let report = search_nagell_counterexample(k, p.m_max.unwrap_or(100), p.n_max.unwrap_or(100))?;
        Ok(CheckResult {
            outcome: outcome(report.counterexample.is_some()),
            params: to_map(&report.params),
            details: serde_json::to_value(&report).expect("serializable"),
        })
    }
}

pub struct PhiSearch;

impl Check for PhiSearch {
    fn name(&self) -> &'static str {
        "phi-search"
    }

    fn run(&self, p: &CheckParams) -> Result<CheckResult, NtError> {
        let k = required(p.k, "k")?;
        let defaults = PhiSearchConfig::default();
        let config = PhiSearchConfig {
            exhaustive_m: p.exhaustive,
            cap: p.cap.unwrap_or(defaults.cap),
            samples: p.samples.unwrap_or(defaults.samples),
            seed: p.seed,
        };
        let report = search_phi_counterexample(k, p.n_max.unwrap_or(100), &config)?;
        Ok(CheckResult {
            outcome: outcome(report.counterexample.is_some()),
            params: to_map(&report.params),
            details: serde_json::to_value(&report).expect("serializable"),
        })
    }
}

fn to_map<T: Serialize>(v: &T) -> BTreeMap<String, Value> {
    match serde_json::to_value(v).expect("serializable") {
        Value::Object(map) => map.into_iter().collect(),
        other => BTreeMap::from([("value".to_string(), other)]),
    }
}

pub struct CheckRegistry {
    checks: Vec<Box<dyn Check>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    /// `harmonic`, `nagell` and `phi-search`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Harmonic));
        r.register(Box::new(Nagell));
        r.register(Box::new(PhiSearch));
        r
    }

    pub fn register(&mut self, check: Box<dyn Check>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Check> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}
