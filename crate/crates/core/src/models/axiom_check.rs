use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::axioms::all_axioms;

use super::eval::Evaluator;
use super::{Assignment, EvalBudget, Model, ModelError, TruthValue3};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomRow {
    pub axiom: String,
    pub samples: u64,
    pub pass: u64,
    pub fail: u64,
    pub unknown: u64,
    /// The lowest-numbered failing assignment, variable name to element text.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub model: String,
    pub seed: u64,
    pub samples: u64,
    pub axioms: Vec<AxiomRow>,
}

impl AxiomReport {
    pub fn failures(&self) -> u64 {
        self.axioms.iter().map(|r| r.fail).sum()
    }

    pub fn unknowns(&self) -> u64 {
        self.axioms.iter().map(|r| r.unknown).sum()
    }

    pub fn row(&self, axiom: &str) -> Option<&AxiomRow> {
        self.axioms.iter().find(|r| r.axiom == axiom)
    }
}

/// Per-sample generator. Each (axiom, sample) pair owns a ChaCha stream, so
/// results do not depend on how samples are spread across threads.
fn sample_rng(seed: u64, axiom: u8, sample: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(axiom) << 48) | sample);
    rng
}

/// Evaluates the matrix of every axiom under `samples` random assignments
/// to its universally quantified variables.
///
/// Runs on the ambient rayon pool. A13's existential is settled by the
/// difference-witness procedure rather than by enumeration.
pub fn check_axioms<M: Model>(
    model: &M,
    samples: u64,
    budget: EvalBudget,
    seed: u64,
) -> Result<AxiomReport, ModelError> {
    if samples == 0 {
        return Err(ModelError::Domain("check_axioms needs at least one sample".into()));
    }
    let ev = Evaluator::new(model, budget);
    let mut rows = Vec::with_capacity(15);
    for (id, axiom) in all_axioms() {
        let (vars, matrix) = axiom.universal_prefix();
        let outcomes = (0..samples)
            .into_par_iter()
            .map(|i| {
                let mut rng = sample_rng(seed, id.index(), i);
                let mut asg = Assignment::new();
                for v in &vars {
                    asg.bind((*v).clone(), model.sample(&mut rng));
                }
                ev.eval(&asg, matrix).map(|value| (value, asg))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut row = AxiomRow {
            axiom: id.to_string(),
            samples,
            pass: 0,
            fail: 0,
            unknown: 0,
            counterexample: None,
        };
        for (value, asg) in outcomes {
            match value {
                TruthValue3::True => row.pass += 1,
                TruthValue3::Unknown => row.unknown += 1,
                TruthValue3::False => {
                    row.fail += 1;
                    if row.counterexample.is_none() {
                        row.counterexample =
                            Some(asg.iter().map(|(v, e)| (v.name().to_string(), e.to_string())).collect());
                    }
                }
            }
        }
        rows.push(row);
    }
    Ok(AxiomReport {
        model: model.name().to_string(),
        seed,
        samples,
        axioms: rows,
    })
}
