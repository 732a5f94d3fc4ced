use std::cmp::Ordering;

use crate::logic::{Formula, Term, TermOp};

use super::decide::{BezoutPattern, DecisionProcedure, DifferenceWitness, LinearDivisibility};
use super::{Assignment, EvalBudget, Model, ModelError, TruthValue3};

pub fn eval_term<M: Model>(model: &M, asg: &Assignment<M::Elem>, t: &Term) -> Result<M::Elem, ModelError> {
    t.fold(
        |leaf| match leaf {
            Term::Zero => Ok(model.zero()),
            Term::One => Ok(model.one()),
            Term::Var(v) => asg
                .get(v)
                .cloned()
                .ok_or_else(|| ModelError::UnboundVariable(v.clone())),
            Term::Add(..) | Term::Mul(..) => unreachable!("fold only hands out leaves"),
        },
        |op, a, b| {
            Ok(match op {
                TermOp::Add => model.add(&a, &b),
                TermOp::Mul => model.mul(&a, &b),
            })
        },
    )
}

/// Evaluates `f` with the built-in decision procedures enabled.
pub fn eval_formula<M: Model>(
    model: &M,
    asg: &Assignment<M::Elem>,
    f: &Formula,
    budget: EvalBudget,
) -> Result<TruthValue3, ModelError> {
    Evaluator::new(model, budget).eval(asg, f)
}

/// Three-valued (strong Kleene) evaluator.
///
/// A quantifier is first offered to each registered [`DecisionProcedure`]
/// in order. If none decides it, the first `max_witness` elements of the
/// model's witness stream are tried: a witness settles `exists` as true and
/// a counterexample settles `forall` as false; otherwise the result is
/// `Unknown`, since the carriers are infinite.
pub struct Evaluator<'m, M: Model> {
    model: &'m M,
    budget: EvalBudget,
    procedures: Vec<Box<dyn DecisionProcedure<M> + 'm>>,
}

impl<'m, M: Model> Evaluator<'m, M> {
    pub fn new(model: &'m M, budget: EvalBudget) -> Self {
        let mut ev = Self::enumerative(model, budget);
        ev.register(Box::new(LinearDivisibility));
        ev.register(Box::new(BezoutPattern));
        ev.register(Box::new(DifferenceWitness));
        ev
    }

    /// An evaluator that decides quantifiers by enumeration only.
    pub fn enumerative(model: &'m M, budget: EvalBudget) -> Self {
        Self {
            model,
            budget,
            procedures: Vec::new(),
        }
    }

    pub fn register(&mut self, procedure: Box<dyn DecisionProcedure<M> + 'm>) {
        self.procedures.push(procedure);
    }

    pub fn procedure_names(&self) -> Vec<&'static str> {
        self.procedures.iter().map(|p| p.name()).collect()
    }

    pub fn model(&self) -> &M {
        self.model
    }

    pub fn budget(&self) -> EvalBudget {
        self.budget
    }

    pub fn term(&self, asg: &Assignment<M::Elem>, t: &Term) -> Result<M::Elem, ModelError> {
        eval_term(self.model, asg, t)
    }

    pub fn eval(&self, asg: &Assignment<M::Elem>, f: &Formula) -> Result<TruthValue3, ModelError> {
        let mut scratch = asg.clone();
        self.eval_at_depth(&mut scratch, f, 0)
    }

    /// Evaluates `f` under `asg`, where `depth` enumerating quantifiers are
    /// already open. `asg` is restored before returning.
    pub fn eval_at_depth(
        &self,
        asg: &mut Assignment<M::Elem>,
        f: &Formula,
        depth: usize,
    ) -> Result<TruthValue3, ModelError> {
        use TruthValue3::*;
        Ok(match f {
            Formula::Eq(a, b) => {
                let (a, b) = (self.term(asg, a)?, self.term(asg, b)?);
                (self.model.compare(&a, &b) == Ordering::Equal).into()
            }
            Formula::Lt(a, b) => {
                let (a, b) = (self.term(asg, a)?, self.term(asg, b)?);
                (self.model.compare(&a, &b) == Ordering::Less).into()
            }
            Formula::Not(g) => self.eval_at_depth(asg, g, depth)?.not(),
            Formula::And(a, b) => match self.eval_at_depth(asg, a, depth)? {
                False => False,
                lhs => lhs.and(self.eval_at_depth(asg, b, depth)?),
            },
            Formula::Or(a, b) => match self.eval_at_depth(asg, a, depth)? {
                True => True,
                lhs => lhs.or(self.eval_at_depth(asg, b, depth)?),
            },
            Formula::Implies(a, b) => match self.eval_at_depth(asg, a, depth)? {
                False => True,
                lhs => lhs.implies(self.eval_at_depth(asg, b, depth)?),
            },
            Formula::ForAll(v, body) | Formula::Exists(v, body) => {
                for p in &self.procedures {
                    if let Some(value) = p.decide(self, asg, f, depth)? {
                        return Ok(value);
                    }
                }
                if depth >= self.budget.max_depth {
                    return Ok(Unknown);
                }
                let universal = matches!(f, Formula::ForAll(..));
                let decisive = if universal { False } else { True };
                for w in self.model.witnesses().take(self.budget.max_witness) {
                    asg.bind(v.clone(), w);
                    let value = self.eval_at_depth(asg, body, depth + 1);
                    asg.pop();
                    if value? == decisive {
                        return Ok(decisive);
                    }
                }
                Unknown
            }
        })
    }
}
