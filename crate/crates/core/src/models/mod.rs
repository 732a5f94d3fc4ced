//! Evaluation of terms and formulas in models of PA-.
//!
//! A [`Model`] supplies the carrier and the interpretation of `0, 1, +, *, <`.
//! Two carriers are built in: [`StandardModel`] (the naturals) and
//! [`PolyModel`] (the nonnegative part of `Z[x]` ordered by the sign of the
//! leading coefficient, where `x` exceeds every numeral). Quantifiers range
//! over infinite carriers, so evaluation is three-valued with an explicit
//! [`EvalBudget`]; a few formula shapes are decided exactly by
//! [`DecisionProcedure`]s instead of by search.

mod axiom_check;
mod decide;
mod eval;
mod poly;
mod registry;
mod standard;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::logic::Variable;

pub use axiom_check::{check_axioms, AxiomReport, AxiomRow};
pub use decide::{BezoutPattern, DecisionProcedure, DifferenceWitness, LinearDivisibility};
pub use eval::{eval_formula, eval_term, Evaluator};
pub use poly::{divides_in_poly, PolyElement, PolyModel};
pub use registry::{BelowNumeralReport, Demonstrable, ModelDriver, ModelRegistry, ParityDemoReport};
pub use standard::StandardModel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("variable `{0}` has no value in the assignment")]
    UnboundVariable(Variable),
    #[error("cannot read `{text}` as an element of the {model} model: {reason}")]
    BadElement {
        model: &'static str,
        text: String,
        reason: String,
    },
    #[error("{0}")]
    Domain(String),
    #[error("unknown model `{0}`")]
    UnknownModel(String),
}

/// A structure for the language `{+, *, 0, 1, <}` whose elements can be
/// enumerated, sampled and parsed.
pub trait Model: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn name(&self) -> &'static str;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    /// Value of the numeral for `u`.
    fn from_natural(&self, u: &BigUint) -> Self::Elem;

    /// The standard value of `a`, if `a` is the value of some numeral.
    fn is_standard(&self, a: &Self::Elem) -> Option<BigUint>;

    /// The `d` with `a + d = b`, when `a <= b`.
    fn difference(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// The `q` with `a = m * q`, when one exists in the carrier. `m >= 1`.
    fn divide_by_natural(&self, a: &Self::Elem, m: &BigUint) -> Option<Self::Elem>;

    /// The canonical witness stream searched by quantifiers. Every element
    /// of the carrier appears at some finite position.
    fn witnesses(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_>;

    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;

    fn parse_element(&self, text: &str) -> Result<Self::Elem, ModelError>;
}

/// If `a` lies below the numeral for `k`, the standard number it equals.
///
/// In any model of PA- an element below a numeral is itself a numeral, so a
/// `Less` comparison without a standard value would mean the model is not a
/// model of PA-.
pub fn below_numeral<M: Model>(model: &M, a: &M::Elem, k: u64) -> Result<Option<BigUint>, ModelError> {
    if k == 0 {
        return Err(ModelError::Domain("below_numeral needs k >= 1".into()));
    }
    if model.compare(a, &model.from_natural(&BigUint::from(k))) != Ordering::Less {
        return Ok(None);
    }
    let value = model
        .is_standard(a)
        .unwrap_or_else(|| panic!("{a} is below {k} in the {} model but is not standard", model.name()));
    Ok(Some(value))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TruthValue3 {
    True,
    False,
    Unknown,
}

impl TruthValue3 {
    pub fn not(self) -> Self {
        match self {
            Self::True => Self::False,
            Self::False => Self::True,
            Self::Unknown => Self::Unknown,
        }
    }

    pub fn and(self, other: Self) -> Self {
        match (self, other) {
            (Self::False, _) | (_, Self::False) => Self::False,
            (Self::True, Self::True) => Self::True,
            _ => Self::Unknown,
        }
    }

    pub fn or(self, other: Self) -> Self {
        self.not().and(other.not()).not()
    }

    pub fn implies(self, other: Self) -> Self {
        self.not().or(other)
    }
}

impl From<bool> for TruthValue3 {
    fn from(b: bool) -> Self {
        if b {
            Self::True
        } else {
            Self::False
        }
    }
}

impl fmt::Display for TruthValue3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::True => "true",
            Self::False => "false",
            Self::Unknown => "unknown",
        })
    }
}

/// Limits on quantifier search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalBudget {
    /// Candidate witnesses tried per quantifier. At least 1.
    pub max_witness: usize,
    /// Deepest nesting of quantifiers that are searched by enumeration.
    pub max_depth: usize,
}

impl EvalBudget {
    pub fn new(max_witness: usize, max_depth: usize) -> Result<Self, ModelError> {
        if max_witness == 0 {
            return Err(ModelError::Domain("max_witness must be at least 1".into()));
        }
        Ok(Self { max_witness, max_depth })
    }
}

impl Default for EvalBudget {
    fn default() -> Self {
        Self {
            max_witness: 100,
            max_depth: 4,
        }
    }
}

/// Values for variables. Later bindings shadow earlier ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Assignment<E> {
    bindings: Vec<(Variable, E)>,
}

impl<E> Default for Assignment<E> {
    fn default() -> Self {
        Self { bindings: Vec::new() }
    }
}

impl<E> Assignment<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: E) -> Self {
        self.bind(Variable::named(name), value);
        self
    }

    pub fn bind(&mut self, v: Variable, value: E) {
        self.bindings.push((v, value));
    }

    pub fn get(&self, v: &Variable) -> Option<&E> {
        self.bindings.iter().rev().find(|(w, _)| w == v).map(|(_, e)| e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &E)> {
        self.bindings.iter().map(|(v, e)| (v, e))
    }

    pub fn pop(&mut self) {
        self.bindings.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TruthValue3::*;

    #[test]
    fn kleene_tables() {
        let all = [True, False, Unknown];
        for a in all {
            for b in all {
                let and = a.and(b);
                let or = a.or(b);
                assert_eq!(and == False, a == False || b == False);
                assert_eq!(and == True, a == True && b == True);
                assert_eq!(or == True, a == True || b == True);
                assert_eq!(or == False, a == False && b == False);
                assert_eq!(a.implies(b), a.not().or(b));
            }
        }
    }

    #[test]
    fn budget_requires_a_witness() {
        assert!(EvalBudget::new(0, 3).is_err());
        assert!(EvalBudget::new(1, 0).is_ok());
    }

    #[test]
    fn assignment_shadowing() {
        let mut a = Assignment::new().with("x", 1).with("y", 2);
        a.bind(Variable::named("x"), 3);
        assert_eq!(a.get(&Variable::named("x")), Some(&3));
        a.pop();
        assert_eq!(a.get(&Variable::named("x")), Some(&1));
    }
}
