//! Exact decisions for quantifier shapes whose truth in a model of PA- can
//! be computed without search.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::logic::{Formula, Term, Variable};

use super::eval::Evaluator;
use super::{Assignment, Model, ModelError, TruthValue3};

/// A decision for some quantified formula shapes.
///
/// `decide` is offered every quantifier node before enumeration starts.
/// It returns `Ok(None)` for shapes it does not recognize or cannot settle.
pub trait DecisionProcedure<M: Model>: Send + Sync {
    fn name(&self) -> &'static str;

    fn decide(
        &self,
        ev: &Evaluator<'_, M>,
        asg: &mut Assignment<M::Elem>,
        f: &Formula,
        depth: usize,
    ) -> Result<Option<TruthValue3>, ModelError>;
}

/// `exists y (s = c*y + r)` with `s`, `c`, `r` free of `y` and `c` standard.
///
/// With `c = m >= 1` a solution exists iff `r <= s` and `s - r` is divisible
/// by `m` in the carrier; with `m = 0` iff `s = r`. Accepts `y`, `y*c`,
/// `c*y`, and any of those plus `r` on either side, on either side of `=`.
pub struct LinearDivisibility;

struct Linear<'a> {
    coeff: Option<&'a Term>,
    offset: Option<&'a Term>,
}

fn linear_in<'a>(t: &'a Term, y: &Variable) -> Option<Linear<'a>> {
    let scaled = |t: &'a Term| -> Option<Option<&'a Term>> {
        match t {
            Term::Var(v) if v == y => Some(None),
            Term::Mul(a, b) => match (a.as_ref(), b.as_ref()) {
                (Term::Var(v), c) | (c, Term::Var(v)) if v == y && !c.contains_var(y) => Some(Some(c)),
                _ => None,
            },
            _ => None,
        }
    };
    if let Some(coeff) = scaled(t) {
        return Some(Linear { coeff, offset: None });
    }
    if let Term::Add(a, b) = t {
        if !b.contains_var(y) {
            if let Some(coeff) = scaled(a) {
                return Some(Linear { coeff, offset: Some(b) });
            }
        }
        if !a.contains_var(y) {
            if let Some(coeff) = scaled(b) {
                return Some(Linear { coeff, offset: Some(a) });
            }
        }
    }
    None
}

impl<M: Model> DecisionProcedure<M> for LinearDivisibility {
    fn name(&self) -> &'static str {
        "linear-divisibility"
    }

    fn decide(
        &self,
        ev: &Evaluator<'_, M>,
        asg: &mut Assignment<M::Elem>,
        f: &Formula,
        _depth: usize,
    ) -> Result<Option<TruthValue3>, ModelError> {
        let Formula::Exists(y, body) = f else {
            return Ok(None);
        };
        let Formula::Eq(lhs, rhs) = body.as_ref() else {
            return Ok(None);
        };
        let (fixed, lin) = match (lhs.contains_var(y), rhs.contains_var(y)) {
            (false, true) => (lhs, rhs),
            (true, false) => (rhs, lhs),
            _ => return Ok(None),
        };
        let Some(Linear { coeff, offset }) = linear_in(lin, y) else {
            return Ok(None);
        };
        let model = ev.model();
        let coeff = match coeff {
            Some(c) => ev.term(asg, c)?,
            None => model.one(),
        };
        let Some(m) = model.is_standard(&coeff) else {
            return Ok(None);
        };
        let offset = match offset {
            Some(r) => ev.term(asg, r)?,
            None => model.zero(),
        };
        let target = ev.term(asg, fixed)?;
        let solvable = if m.is_zero() {
            model.compare(&target, &offset) == Ordering::Equal
        } else {
            model
                .difference(&offset, &target)
                .is_some_and(|d| model.divide_by_natural(&d, &m).is_some())
        };
        Ok(Some(solvable.into()))
    }
}

/// `forall a forall b not (mt*a = ct*b + 1)` and its dual
/// `exists a exists b (mt*a = ct*b + 1)`, for standard values of `mt`, `ct`.
///
/// A solution exists iff `gcd(mt, ct) = 1`. In the polynomial cone the
/// constant coefficients must already satisfy the equation and the higher
/// ones can be taken to be zero, so the same criterion applies.
pub struct BezoutPattern;

fn bezout_equation<'a>(f: &'a Formula, a: &Variable, b: &Variable) -> Option<(&'a Term, &'a Term)> {
    let Formula::Eq(Term::Mul(mt, av), Term::Add(cb, one)) = f else {
        return None;
    };
    let (Term::Var(av), Term::Mul(ct, bv), Term::One) = (av.as_ref(), cb.as_ref(), one.as_ref()) else {
        return None;
    };
    let Term::Var(bv) = bv.as_ref() else {
        return None;
    };
    let clean = |t: &Term| !t.contains_var(a) && !t.contains_var(b);
    (av == a && bv == b && a != b && clean(mt) && clean(ct)).then_some((mt, ct))
}

impl<M: Model> DecisionProcedure<M> for BezoutPattern {
    fn name(&self) -> &'static str {
        "bezout"
    }

    fn decide(
        &self,
        ev: &Evaluator<'_, M>,
        asg: &mut Assignment<M::Elem>,
        f: &Formula,
        _depth: usize,
    ) -> Result<Option<TruthValue3>, ModelError> {
        let (universal, a, b, matrix) = match f {
            Formula::ForAll(a, inner) => match inner.as_ref() {
                Formula::ForAll(b, m) => match m.as_ref() {
                    Formula::Not(eq) => (true, a, b, eq.as_ref()),
                    _ => return Ok(None),
                },
                _ => return Ok(None),
            },
            Formula::Exists(a, inner) => match inner.as_ref() {
                Formula::Exists(b, eq) => (false, a, b, eq.as_ref()),
                _ => return Ok(None),
            },
            _ => return Ok(None),
        };
        let Some((mt, ct)) = bezout_equation(matrix, a, b) else {
            return Ok(None);
        };
        let model = ev.model();
        let (Some(m), Some(c)) = (
            model.is_standard(&ev.term(asg, mt)?),
            model.is_standard(&ev.term(asg, ct)?),
        ) else {
            return Ok(None);
        };
        let solvable = !m.is_zero() && m.gcd(&c) == BigUint::one();
        Ok(Some(if universal { !solvable } else { solvable }.into()))
    }
}

/// `exists z (s < t -> s + z = t)`: the witness is `t - s` when `s < t`
/// and `0` otherwise.
pub struct DifferenceWitness;

impl<M: Model> DecisionProcedure<M> for DifferenceWitness {
    fn name(&self) -> &'static str {
        "difference-witness"
    }

    fn decide(
        &self,
        ev: &Evaluator<'_, M>,
        asg: &mut Assignment<M::Elem>,
        f: &Formula,
        depth: usize,
    ) -> Result<Option<TruthValue3>, ModelError> {
        let Formula::Exists(z, body) = f else {
            return Ok(None);
        };
        let Formula::Implies(premise, conclusion) = body.as_ref() else {
            return Ok(None);
        };
        let (Formula::Lt(s, t), Formula::Eq(Term::Add(s2, zv), t2)) = (premise.as_ref(), conclusion.as_ref()) else {
            return Ok(None);
        };
        if !matches!(zv.as_ref(), Term::Var(v) if v == z)
            || s2.as_ref() != s
            || t2 != t
            || s.contains_var(z)
            || t.contains_var(z)
        {
            return Ok(None);
        }
        let model = ev.model();
        let (sv, tv) = (ev.term(asg, s)?, ev.term(asg, t)?);
        let witness = if model.compare(&sv, &tv) == Ordering::Less {
            match model.difference(&sv, &tv) {
                Some(d) => d,
                None => return Ok(None),
            }
        } else {
            model.zero()
        };
        asg.bind(z.clone(), witness);
        let value = ev.eval_at_depth(asg, body, depth);
        asg.pop();
        Ok((value? == TruthValue3::True).then_some(TruthValue3::True))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{numeral, parse_formula};
    use crate::models::{EvalBudget, PolyElement, PolyModel, StandardModel};

    fn decide_with<M: Model>(
        model: &M,
        p: &dyn DecisionProcedure<M>,
        asg: &Assignment<M::Elem>,
        src: &str,
    ) -> Option<TruthValue3> {
        let ev = Evaluator::enumerative(model, EvalBudget::default());
        let f = parse_formula(src).unwrap();
        p.decide(&ev, &mut asg.clone(), &f, 0).unwrap()
    }

    #[test]
    fn linear_shapes() {
        let std = StandardModel::new();
        let asg = Assignment::new().with("s", BigUint::from(9u8));
        let p = &LinearDivisibility;
        assert_eq!(
            decide_with(&std, p, &asg, "(exists y (s = ((1 + 1) * y)))"),
            Some(TruthValue3::False)
        );
        assert_eq!(
            decide_with(&std, p, &asg, "(exists y (s = (((1 + 1) * y) + 1)))"),
            Some(TruthValue3::True)
        );
        assert_eq!(
            decide_with(&std, p, &asg, "(exists y ((1 + (y * ((1 + 1) + 1))) = s))"),
            Some(TruthValue3::False)
        );
        assert_eq!(
            decide_with(&std, p, &asg, "(exists y (s = (y * ((1 + 1) + 1))))"),
            Some(TruthValue3::True)
        );
        assert_eq!(
            decide_with(&std, p, &asg, "(exists y (s = (y + s)))"),
            Some(TruthValue3::True)
        );
        assert_eq!(
            decide_with(&std, p, &asg, "(exists y ((s + 1) = (y * 0)))"),
            Some(TruthValue3::False)
        );
        // not linear
        assert_eq!(decide_with(&std, p, &asg, "(exists y (s = (y * y)))"), None);
        assert_eq!(decide_with(&std, p, &asg, "(forall y (s = (y * y)))"), None);
    }

    #[test]
    fn linear_refuses_nonstandard_coefficients() {
        let poly = PolyModel::new();
        let asg = Assignment::new().with("n", PolyElement::x());
        assert_eq!(
            decide_with(&poly, &LinearDivisibility, &asg, "(exists y ((n * n) = (n * y)))"),
            None
        );
        assert_eq!(
            decide_with(&poly, &LinearDivisibility, &asg, "(exists y (n = (((1 + 1) * y) + 1)))"),
            Some(TruthValue3::False)
        );
        assert_eq!(
            decide_with(&poly, &LinearDivisibility, &asg, "(exists y ((n + 1) = (y + n)))"),
            Some(TruthValue3::True)
        );
    }

    #[test]
    fn bezout_standard_values() {
        let std = StandardModel::new();
        let asg = Assignment::new();
        let forall = |m: u64, c: u64| {
            let f = crate::generators::coprime_subformula(numeral(m), numeral(c)).unwrap();
            let ev = Evaluator::enumerative(&std, EvalBudget::default());
            BezoutPattern.decide(&ev, &mut asg.clone(), &f, 0).unwrap()
        };
        assert_eq!(forall(3, 5), Some(TruthValue3::False));
        assert_eq!(forall(2, 4), Some(TruthValue3::True));
        assert_eq!(forall(0, 1), Some(TruthValue3::True));
        assert_eq!(forall(1, 0), Some(TruthValue3::False));
    }

    #[test]
    fn bezout_is_undecided_for_nonstandard_values() {
        let poly = PolyModel::new();
        let asg = Assignment::new().with("n", PolyElement::x());
        let f = "(forall a (forall b (not ((n * a) = ((1 + 1) * b) + 1))))";
        assert!(parse_formula(f).is_err());
        let f = "(forall a (forall b (not ((n * a) = (((1 + 1) * b) + 1)))))";
        assert_eq!(decide_with(&poly, &BezoutPattern, &asg, f), None);
        let g = "(exists a (exists b (((1 + 1) * a) = ((((1 + 1) + 1) * b) + 1))))";
        assert_eq!(decide_with(&poly, &BezoutPattern, &asg, g), Some(TruthValue3::True));
    }

    #[test]
    fn difference_witness_in_both_models() {
        let f = "(exists z ((x < y) -> ((x + z) = y)))";
        let std = StandardModel::new();
        for (x, y) in [(3u8, 7u8), (7, 3), (4, 4)] {
            let asg = Assignment::new()
                .with("x", BigUint::from(x))
                .with("y", BigUint::from(y));
            assert_eq!(decide_with(&std, &DifferenceWitness, &asg, f), Some(TruthValue3::True));
        }
        let poly = PolyModel::new();
        let asg = Assignment::new()
            .with("x", PolyElement::from_i64s(&[5]).unwrap())
            .with("y", PolyElement::from_i64s(&[-3, 0, 2]).unwrap());
        assert_eq!(decide_with(&poly, &DifferenceWitness, &asg, f), Some(TruthValue3::True));
        assert_eq!(
            decide_with(&poly, &DifferenceWitness, &asg, "(exists z ((x < y) -> ((z + x) = y)))"),
            None
        );
    }
}
