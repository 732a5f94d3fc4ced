//! Construction of the sentence families `phi_k` (coprime numerators over
//! consecutive denominators) and `nu_k` (unit numerators over an arithmetic
//! progression), and of the shifted product `(n+1)(n+2)...(n+k)`.
//!
//! Sums and products are left-associated in index order. Bound variables
//! `a`, `b` are reused in every coprimality disjunct; the printers keep them.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::logic::{numeral, Formula, Term, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("k must be at least 1, got {0}")]
    BadK(u64),
    #[error("variable `{0}` occurs free in an argument of the coprimality formula")]
    VariableClash(Variable),
    #[error("{k}! = {value} exceeds the numeral cap of {cap} ones")]
    LimitExceeded { k: u64, value: BigUint, cap: u64 },
}

/// Largest numeral, in `One` leaves, that [`kfactorial_numeral`] will build.
pub const DEFAULT_NUMERAL_CAP: u64 = 1_000_000;

fn check_k(k: u64) -> Result<(), GenError> {
    if k == 0 {
        Err(GenError::BadK(k))
    } else {
        Ok(())
    }
}

fn product(factors: impl IntoIterator<Item = Term>) -> Term {
    factors
        .into_iter()
        .reduce(Term::mul)
        .expect("products here are nonempty")
}

fn sum(terms: impl IntoIterator<Item = Term>) -> Term {
    terms.into_iter().reduce(Term::add).expect("sums here are nonempty")
}

/// `forall a forall b not (mt*a = ct*b + 1)`: true in the naturals exactly
/// when `mt` and `ct` are not coprime.
pub fn coprime_subformula(mt: Term, ct: Term) -> Result<Formula, GenError> {
    for name in ["a", "b"] {
        let v = Variable::named(name);
        if mt.contains_var(&v) || ct.contains_var(&v) {
            return Err(GenError::VariableClash(v));
        }
    }
    Ok(Formula::forall(
        "a",
        Formula::forall(
            "b",
            Formula::ne(
                Term::mul(mt, Term::var("a")),
                Term::add(Term::mul(ct, Term::var("b")), Term::One),
            ),
        ),
    ))
}

fn m_name(i: u64) -> String {
    format!("m_{i}")
}

/// `n` for `i = 0`, otherwise `n + i`.
fn shifted_n(i: u64) -> Term {
    if i == 0 {
        Term::var("n")
    } else {
        Term::add(Term::var("n"), numeral(i))
    }
}

/// The sentence
///
/// ```text
/// forall n forall m_0 ... forall m_k forall p
///   OR_i coprime(m_i, n+i)  or  OR_i (n+i < m_i)
///   or  not (SUM_i m_i * PROD_{j != i} (n+j) = p * PROD_j (n+j))
/// ```
pub fn phi(k: u64) -> Result<Formula, GenError> {
    check_k(k)?;
    let m = |i: u64| Term::var(&m_name(i));
    let mut disjuncts = Vec::with_capacity(2 * k as usize + 3);
    for i in 0..=k {
        disjuncts.push(coprime_subformula(m(i), shifted_n(i))?);
    }
    for i in 0..=k {
        disjuncts.push(Formula::lt(shifted_n(i), m(i)));
    }
    let lhs = sum((0..=k).map(|i| Term::mul(m(i), product((0..=k).filter(|&j| j != i).map(shifted_n)))));
    let rhs = Term::mul(Term::var("p"), product((0..=k).map(shifted_n)));
    disjuncts.push(Formula::ne(lhs, rhs));
    let matrix = Formula::disjunction(disjuncts).expect("nonempty");

    let names: Vec<String> = std::iter::once("n".to_string())
        .chain((0..=k).map(m_name))
        .chain(std::iter::once("p".to_string()))
        .collect();
    Ok(Formula::close_universally(names.iter().map(String::as_str), matrix))
}

/// `m` for `j = 0`, otherwise `m + j*n`.
fn progression(j: u64) -> Term {
    if j == 0 {
        Term::var("m")
    } else {
        Term::add(Term::var("m"), Term::mul(numeral(j), Term::var("n")))
    }
}

/// The sentence
///
/// ```text
/// forall m forall n forall p
///   (0 < m and 0 < n) -> not (SUM_i PROD_{j != i} (m + j*n) = p * PROD_j (m + j*n))
/// ```
pub fn nu(k: u64) -> Result<Formula, GenError> {
    check_k(k)?;
    let lhs = sum((0..=k).map(|i| product((0..=k).filter(|&j| j != i).map(progression))));
    let rhs = Term::mul(Term::var("p"), product((0..=k).map(progression)));
    let matrix = Formula::implies(
        Formula::and(
            Formula::gt(Term::var("m"), Term::Zero),
            Formula::gt(Term::var("n"), Term::Zero),
        ),
        Formula::ne(lhs, rhs),
    );
    Ok(Formula::close_universally(["m", "n", "p"], matrix))
}

/// Coefficients of `(n+1)(n+2)...(n+k)` as a polynomial in `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedProductExpansion {
    pub k: u64,
    /// `coeffs[i]` multiplies `n^i`; length `k + 1`, `coeffs[0] = k!`, `coeffs[k] = 1`.
    pub coeffs: Vec<BigUint>,
}

impl ShiftedProductExpansion {
    /// The constant term, `k!`.
    pub fn free_term(&self) -> &BigUint {
        &self.coeffs[0]
    }

    /// Coefficients of `r` in `(n+1)...(n+k) = n*r + k!`.
    pub fn quotient_by_n(&self) -> &[BigUint] {
        &self.coeffs[1..]
    }

    pub fn eval(&self, n: &BigUint) -> BigUint {
        self.coeffs.iter().rev().fold(BigUint::default(), |acc, c| acc * n + c)
    }
}

pub fn expand_shifted_product(k: u64) -> Result<ShiftedProductExpansion, GenError> {
    check_k(k)?;
    let mut coeffs = vec![BigUint::one()];
    for j in 1..=k {
        // multiply by (n + j)
        let mut next = vec![BigUint::default(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c * j;
            next[i + 1] += c;
        }
        coeffs = next;
    }
    Ok(ShiftedProductExpansion { k, coeffs })
}

/// The numeral for `k!`, refused when it would need more than `cap` ones.
pub fn kfactorial_numeral(k: u64, cap: u64) -> Result<Term, GenError> {
    check_k(k)?;
    let value: BigUint = (1..=k).map(BigUint::from).product();
    match value.to_u64() {
        Some(v) if v <= cap => Ok(numeral(v)),
        _ => Err(GenError::LimitExceeded { k, value, cap }),
    }
}
