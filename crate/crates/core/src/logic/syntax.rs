//! Terms and formulas over the signature `{+, *, 0, 1, <, =}`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::LogicError;

/// Words of the concrete syntax that can never be used as variable names.
pub const RESERVED: [&str; 5] = ["not", "and", "or", "forall", "exists"];

/// A variable name matching `[a-z][a-z0-9_]*`, excluding the reserved words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Result<Self, LogicError> {
        let name = name.into();
        if is_identifier(&name) && !RESERVED.contains(&name.as_str()) {
            Ok(Self(name))
        } else {
            Err(LogicError::InvalidVariable(name))
        }
    }

    /// Builds a variable from a name known to be valid.
    ///
    /// Panics if `name` is not a valid identifier; intended for the fixed
    /// names used by the formula generators.
    pub fn named(name: &str) -> Self {
        Self::new(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_lowercase() => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

#[derive(Debug)]
pub enum Term {
    Zero,
    One,
    Var(Variable),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

/// Binary term constructors, as seen by [`Term::fold`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TermOp {
    Add,
    Mul,
}

impl Term {
    pub fn var(name: &str) -> Self {
        Term::Var(Variable::named(name))
    }

    pub fn add(lhs: Term, rhs: Term) -> Self {
        Term::Add(Box::new(lhs), Box::new(rhs))
    }

    pub fn mul(lhs: Term, rhs: Term) -> Self {
        Term::Mul(Box::new(lhs), Box::new(rhs))
    }

    pub fn binary(op: TermOp, lhs: Term, rhs: Term) -> Self {
        match op {
            TermOp::Add => Term::add(lhs, rhs),
            TermOp::Mul => Term::mul(lhs, rhs),
        }
    }

    /// Bottom-up fold with an explicit stack.
    ///
    /// Numerals are left spines with one node per unit, so every traversal
    /// of a term goes through here instead of recursing.
    pub fn fold<R, E>(
        &self,
        mut leaf: impl FnMut(&Term) -> Result<R, E>,
        mut node: impl FnMut(TermOp, R, R) -> Result<R, E>,
    ) -> Result<R, E> {
        enum Step<'a> {
            Visit(&'a Term),
            Combine(TermOp),
        }
        let mut work = vec![Step::Visit(self)];
        let mut values: Vec<R> = Vec::new();
        while let Some(step) = work.pop() {
            match step {
                Step::Visit(t) => match t {
                    Term::Add(a, b) => {
                        work.push(Step::Combine(TermOp::Add));
                        work.push(Step::Visit(b));
                        work.push(Step::Visit(a));
                    }
                    Term::Mul(a, b) => {
                        work.push(Step::Combine(TermOp::Mul));
                        work.push(Step::Visit(b));
                        work.push(Step::Visit(a));
                    }
                    leaf_term => values.push(leaf(leaf_term)?),
                },
                Step::Combine(op) => {
                    let rhs = values.pop().expect("fold stack underflow");
                    let lhs = values.pop().expect("fold stack underflow");
                    values.push(node(op, lhs, rhs)?);
                }
            }
        }
        Ok(values.pop().expect("fold produced no value"))
    }

    fn fold_infallible<R>(&self, mut leaf: impl FnMut(&Term) -> R, mut node: impl FnMut(TermOp, R, R) -> R) -> R {
        match self.fold::<R, std::convert::Infallible>(|t| Ok(leaf(t)), |op, a, b| Ok(node(op, a, b))) {
            Ok(r) => r,
            Err(never) => match never {},
        }
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        self.fold_infallible(|_| 1, |_, a, b| 1 + a + b)
    }

    /// Number of `One` leaves.
    pub fn count_ones(&self) -> usize {
        self.fold_infallible(|t| usize::from(matches!(t, Term::One)), |_, a, b| a + b)
    }

    /// Number of `Zero` leaves.
    pub fn count_zeros(&self) -> usize {
        self.fold_infallible(|t| usize::from(matches!(t, Term::Zero)), |_, a, b| a + b)
    }

    pub fn vars(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.fold_infallible(
            |t| {
                if let Term::Var(v) = t {
                    out.insert(v.clone());
                }
            },
            |_, _, _| (),
        );
        out
    }

    pub fn contains_var(&self, v: &Variable) -> bool {
        self.fold_infallible(|t| matches!(t, Term::Var(w) if w == v), |_, a, b| a || b)
    }

    pub fn substitute(&self, v: &Variable, t: &Term) -> Term {
        self.fold_infallible(
            |leaf| match leaf {
                Term::Var(w) if w == v => t.clone(),
                other => other.clone_leaf(),
            },
            Term::binary,
        )
    }

    fn clone_leaf(&self) -> Term {
        match self {
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Var(v) => Term::Var(v.clone()),
            Term::Add(..) | Term::Mul(..) => unreachable!("clone_leaf on an interior node"),
        }
    }

    /// Evaluates a closed term over the naturals; `None` if the term has a variable.
    pub fn closed_value(&self) -> Option<BigUint> {
        self.fold(
            |t| match t {
                Term::Zero => Ok(BigUint::zero()),
                Term::One => Ok(BigUint::one()),
                _ => Err(()),
            },
            |op, a, b| {
                Ok(match op {
                    TermOp::Add => a + b,
                    TermOp::Mul => a * b,
                })
            },
        )
        .ok()
    }
}

impl Clone for Term {
    fn clone(&self) -> Self {
        self.fold_infallible(Term::clone_leaf, Term::binary)
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        let mut pairs = vec![(self, other)];
        while let Some((a, b)) = pairs.pop() {
            match (a, b) {
                (Term::Zero, Term::Zero) | (Term::One, Term::One) => {}
                (Term::Var(x), Term::Var(y)) if x == y => {}
                (Term::Add(a1, a2), Term::Add(b1, b2)) | (Term::Mul(a1, a2), Term::Mul(b1, b2)) => {
                    pairs.push((a2, b2));
                    pairs.push((a1, b1));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Term {}

impl Drop for Term {
    fn drop(&mut self) {
        let mut pending: Vec<Box<Term>> = Vec::new();
        if let Term::Add(a, b) | Term::Mul(a, b) = self {
            pending.push(std::mem::replace(a, Box::new(Term::Zero)));
            pending.push(std::mem::replace(b, Box::new(Term::Zero)));
        }
        while let Some(mut t) = pending.pop() {
            if let Term::Add(a, b) | Term::Mul(a, b) = t.as_mut() {
                pending.push(std::mem::replace(a, Box::new(Term::Zero)));
                pending.push(std::mem::replace(b, Box::new(Term::Zero)));
            }
        }
    }
}

/// The numeral for `u`: `Zero` for 0, otherwise `((..((1+1)+1)..)+1)` with `u` ones.
pub fn numeral(u: u64) -> Term {
    if u == 0 {
        return Term::Zero;
    }
    let mut t = Term::One;
    for _ in 1..u {
        t = Term::add(t, Term::One);
    }
    t
}

/// Inverse of [`numeral`]: recognizes exactly the left-associated numeral shape.
pub fn numeral_value(t: &Term) -> Option<u64> {
    match t {
        Term::Zero => Some(0),
        _ => {
            let mut count = 0u64;
            let mut cur = t;
            loop {
                match cur {
                    Term::One => return Some(count + 1),
                    Term::Add(lhs, rhs) if matches!(**rhs, Term::One) => {
                        count += 1;
                        cur = lhs;
                    }
                    _ => return None,
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Formula {
    Eq(Term, Term),
    Lt(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(Variable, Box<Formula>),
    Exists(Variable, Box<Formula>),
}

impl Formula {
    pub fn eq(lhs: Term, rhs: Term) -> Self {
        Formula::Eq(lhs, rhs)
    }

    pub fn lt(lhs: Term, rhs: Term) -> Self {
        Formula::Lt(lhs, rhs)
    }

    /// `lhs > rhs`, stored as `rhs < lhs`.
    pub fn gt(lhs: Term, rhs: Term) -> Self {
        Formula::Lt(rhs, lhs)
    }

    /// `lhs != rhs`, stored as `not (lhs = rhs)`.
    pub fn ne(lhs: Term, rhs: Term) -> Self {
        Formula::not(Formula::Eq(lhs, rhs))
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Self {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Self {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Self {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn forall(v: &str, body: Formula) -> Self {
        Formula::ForAll(Variable::named(v), Box::new(body))
    }

    pub fn exists(v: &str, body: Formula) -> Self {
        Formula::Exists(Variable::named(v), Box::new(body))
    }

    /// Left-associated disjunction of a nonempty list.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Option<Self> {
        parts.into_iter().reduce(Formula::or)
    }

    /// Prefixes `vars` as universal quantifiers, outermost first.
    pub fn close_universally<'a>(vars: impl IntoIterator<Item = &'a str>, body: Formula) -> Self {
        let vars: Vec<&str> = vars.into_iter().collect();
        vars.into_iter().rev().fold(body, |acc, v| Formula::forall(v, acc))
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => 1 + a.size() + b.size(),
            Formula::Not(f) | Formula::ForAll(_, f) | Formula::Exists(_, f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Variable> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Variable>, out: &mut BTreeSet<Variable>) {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                for v in a.vars().into_iter().chain(b.vars()) {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::ForAll(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Eq(..) | Formula::Lt(..) => true,
            Formula::Not(f) => f.is_quantifier_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_quantifier_free() && b.is_quantifier_free()
            }
            Formula::ForAll(..) | Formula::Exists(..) => false,
        }
    }

    /// Capture-avoiding substitution of `t` for the free occurrences of `v`.
    ///
    /// Fails with [`LogicError::Capture`] when a free occurrence of `v` sits
    /// under a binder for one of the variables of `t`; the caller has to
    /// rename that binder first.
    pub fn substitute(&self, v: &Variable, t: &Term) -> Result<Formula, LogicError> {
        let tvars = t.vars();
        self.subst_inner(v, t, &tvars, &mut Vec::new())
    }

    fn subst_inner(
        &self,
        v: &Variable,
        t: &Term,
        tvars: &BTreeSet<Variable>,
        binders: &mut Vec<Variable>,
    ) -> Result<Formula, LogicError> {
        let atom = |a: &Term, binders: &[Variable]| -> Result<Term, LogicError> {
            if a.contains_var(v) {
                if let Some(b) = binders.iter().find(|b| tvars.contains(*b)) {
                    return Err(LogicError::Capture {
                        var: v.clone(),
                        binder: b.clone(),
                    });
                }
            }
            Ok(a.substitute(v, t))
        };
        Ok(match self {
            Formula::Eq(a, b) => Formula::Eq(atom(a, binders)?, atom(b, binders)?),
            Formula::Lt(a, b) => Formula::Lt(atom(a, binders)?, atom(b, binders)?),
            Formula::Not(f) => Formula::not(f.subst_inner(v, t, tvars, binders)?),
            Formula::And(a, b) => Formula::and(
                a.subst_inner(v, t, tvars, binders)?,
                b.subst_inner(v, t, tvars, binders)?,
            ),
            Formula::Or(a, b) => Formula::or(
                a.subst_inner(v, t, tvars, binders)?,
                b.subst_inner(v, t, tvars, binders)?,
            ),
            Formula::Implies(a, b) => Formula::implies(
                a.subst_inner(v, t, tvars, binders)?,
                b.subst_inner(v, t, tvars, binders)?,
            ),
            Formula::ForAll(w, _) | Formula::Exists(w, _) if w == v => self.clone(),
            Formula::ForAll(w, f) => {
                binders.push(w.clone());
                let body = f.subst_inner(v, t, tvars, binders);
                binders.pop();
                Formula::ForAll(w.clone(), Box::new(body?))
            }
            Formula::Exists(w, f) => {
                binders.push(w.clone());
                let body = f.subst_inner(v, t, tvars, binders);
                binders.pop();
                Formula::Exists(w.clone(), Box::new(body?))
            }
        })
    }

    /// Flattens a left- or right-nested `Or` chain into its disjuncts.
    pub fn disjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::Or(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                other => out.push(other),
            }
        }
        walk(self, &mut out);
        out
    }

    /// Splits off the leading block of universal quantifiers.
    pub fn universal_prefix(&self) -> (Vec<&Variable>, &Formula) {
        let mut vars = Vec::new();
        let mut cur = self;
        while let Formula::ForAll(v, body) = cur {
            vars.push(v);
            cur = body;
        }
        (vars, cur)
    }
}
