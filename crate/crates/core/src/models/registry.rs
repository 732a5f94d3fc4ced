//! Models selectable by name at runtime.

use num_bigint::BigUint;
use serde::Serialize;

use crate::logic::{parse_formula, print_formula, Variable};

use super::{
    below_numeral, check_axioms, eval_formula, Assignment, AxiomReport, EvalBudget, Model, ModelError, TruthValue3,
};
use super::{PolyElement, PolyModel, StandardModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BelowNumeralReport {
    pub model: String,
    pub element: String,
    pub k: u64,
    /// The standard value of the element when it lies below the numeral.
    pub value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityDemoReport {
    pub model: String,
    pub element: String,
    pub even_formula: String,
    pub even: TruthValue3,
    pub odd_formula: String,
    pub odd: TruthValue3,
}

/// Text-level access to a [`Model`], so the front end can pick one by name.
pub trait ModelDriver: Send + Sync {
    fn name(&self) -> &'static str;

    /// An element exceeding every numeral, if the carrier has one.
    fn nonstandard_example(&self) -> Option<String>;

    fn check_axioms(&self, samples: u64, budget: EvalBudget, seed: u64) -> Result<AxiomReport, ModelError>;

    fn below_numeral(&self, element: &str, k: u64) -> Result<BelowNumeralReport, ModelError>;

    /// Evaluates `exists y (x = 2*y)` and `exists y (x = 2*y + 1)` at `x = element`.
    fn parity_demo(&self, element: &str, budget: EvalBudget) -> Result<ParityDemoReport, ModelError>;

    fn is_standard(&self, element: &str) -> Result<Option<BigUint>, ModelError>;
}

/// Extra information a model exposes to demonstrations.
pub trait Demonstrable: Model {
    fn nonstandard_example(&self) -> Option<Self::Elem>;
}

impl Demonstrable for StandardModel {
    fn nonstandard_example(&self) -> Option<BigUint> {
        None
    }
}

impl Demonstrable for PolyModel {
    fn nonstandard_example(&self) -> Option<PolyElement> {
        Some(PolyElement::x())
    }
}

const EVEN: &str = "(exists y (x = ((1 + 1) * y)))";
const ODD: &str = "(exists y (x = (((1 + 1) * y) + 1)))";

impl<M: Demonstrable + Send> ModelDriver for M {
    fn name(&self) -> &'static str {
        Model::name(self)
    }

    fn nonstandard_example(&self) -> Option<String> {
        Demonstrable::nonstandard_example(self).map(|e| e.to_string())
    }

    fn check_axioms(&self, samples: u64, budget: EvalBudget, seed: u64) -> Result<AxiomReport, ModelError> {
        check_axioms(self, samples, budget, seed)
    }

    fn below_numeral(&self, element: &str, k: u64) -> Result<BelowNumeralReport, ModelError> {
        let e = self.parse_element(element)?;
        let value = below_numeral(self, &e, k)?;
        Ok(BelowNumeralReport {
            model: Model::name(self).to_string(),
            element: e.to_string(),
            k,
            value: value.map(|v| v.to_string()),
        })
    }

    fn parity_demo(&self, element: &str, budget: EvalBudget) -> Result<ParityDemoReport, ModelError> {
        let e = self.parse_element(element)?;
        let asg = Assignment::new().with("x", e.clone());
        let even_f = parse_formula(EVEN).expect("built-in formula parses");
        let odd_f = parse_formula(ODD).expect("built-in formula parses");
        debug_assert!(even_f.free_vars().into_iter().eq([Variable::named("x")]));
        Ok(ParityDemoReport {
            model: Model::name(self).to_string(),
            element: e.to_string(),
            even: eval_formula(self, &asg, &even_f, budget)?,
            even_formula: print_formula(&even_f),
            odd: eval_formula(self, &asg, &odd_f, budget)?,
            odd_formula: print_formula(&odd_f),
        })
    }

    fn is_standard(&self, element: &str) -> Result<Option<BigUint>, ModelError> {
        let e = self.parse_element(element)?;
        Ok(Model::is_standard(self, &e))
    }
}

pub struct ModelRegistry {
    drivers: Vec<Box<dyn ModelDriver>>,
}

impl ModelRegistry {
    pub fn empty() -> Self {
        Self { drivers: Vec::new() }
    }

    /// `standard` and `poly`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(StandardModel::new()));
        r.register(Box::new(PolyModel::new()));
        r
    }

    /// Adds a driver, replacing any existing one with the same name.
    pub fn register(&mut self, driver: Box<dyn ModelDriver>) {
        self.drivers.retain(|d| d.name() != driver.name());
        self.drivers.push(driver);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ModelDriver, ModelError> {
        self.drivers
            .iter()
            .find(|d| d.name() == name)
            .map(|d| d.as_ref())
            .ok_or_else(|| ModelError::UnknownModel(name.to_string()))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.drivers.iter().map(|d| d.name()).collect()
    }
}

impl Default for ModelRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}
