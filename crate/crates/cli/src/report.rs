use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Unknown,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass | Outcome::Unknown => 0,
            Outcome::Fail => 1,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub outcome: Outcome,
    pub details: Value,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.outcome);
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        let details = serde_json::to_string_pretty(&self.details).expect("reports serialize");
        out.push_str(&format!("{details}\n"));
        out.push_str(&format!("({} ms)", self.elapsed_ms));
        out
    }
}
