//! The fifteen axioms of PA- and export of axiom/conjecture problems in a
//! TPTP-style first-order form.

mod tptp;

use std::fmt;

use thiserror::Error;

use crate::logic::{Formula, Term};

pub use tptp::{export_formula, export_term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("axiom index {0} is outside 1..=15")]
    BadIndex(u32),
    #[error("formula `{name}` has free variables: {vars}")]
    NotASentence { name: String, vars: String },
    #[error("`{0}` is not a valid problem-file name")]
    InvalidName(String),
}

/// Index of one of the axioms A1..A15.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AxiomId(u8);

impl AxiomId {
    pub const COUNT: u8 = 15;

    pub fn new(index: u32) -> Result<Self, AxiomError> {
        if (1..=Self::COUNT as u32).contains(&index) {
            Ok(Self(index as u8))
        } else {
            Err(AxiomError::BadIndex(index))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = AxiomId> {
        (1..=Self::COUNT).map(AxiomId)
    }

    /// Lower-case name used in exported problem files, e.g. `a13`.
    pub fn file_name(self) -> String {
        format!("a{}", self.0)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0)
    }
}

fn x() -> Term {
    Term::var("x")
}
fn y() -> Term {
    Term::var("y")
}
fn z() -> Term {
    Term::var("z")
}

fn add(a: Term, b: Term) -> Term {
    Term::add(a, b)
}

fn mul(a: Term, b: Term) -> Term {
    Term::mul(a, b)
}

/// The universally closed axiom. Quantifiers bind `x`, `y`, `z` outermost
/// first; A13 keeps its existential directly around the implication.
pub fn axiom_formula(id: AxiomId) -> Formula {
    let closed = |vars: &[&str], body| Formula::close_universally(vars.iter().copied(), body);
    let xyz = ["x", "y", "z"];
    match id.0 {
        1 => closed(&xyz, Formula::eq(add(add(x(), y()), z()), add(x(), add(y(), z())))),
        2 => closed(&xyz[..2], Formula::eq(add(x(), y()), add(y(), x()))),
        3 => closed(&xyz, Formula::eq(mul(mul(x(), y()), z()), mul(x(), mul(y(), z())))),
        4 => closed(&xyz[..2], Formula::eq(mul(x(), y()), mul(y(), x()))),
        5 => closed(
            &xyz,
            Formula::eq(mul(x(), add(y(), z())), add(mul(x(), y()), mul(x(), z()))),
        ),
        6 => closed(
            &xyz[..1],
            Formula::and(
                Formula::eq(add(x(), Term::Zero), x()),
                Formula::eq(mul(x(), Term::Zero), Term::Zero),
            ),
        ),
        7 => closed(&xyz[..1], Formula::eq(mul(x(), Term::One), x())),
        8 => closed(
            &xyz,
            Formula::implies(
                Formula::and(Formula::lt(x(), y()), Formula::lt(y(), z())),
                Formula::lt(x(), z()),
            ),
        ),
        9 => closed(&xyz[..1], Formula::not(Formula::lt(x(), x()))),
        10 => closed(
            &xyz[..2],
            Formula::or(
                Formula::or(Formula::lt(x(), y()), Formula::eq(x(), y())),
                Formula::lt(y(), x()),
            ),
        ),
        11 => closed(
            &xyz,
            Formula::implies(Formula::lt(x(), y()), Formula::lt(add(x(), z()), add(y(), z()))),
        ),
        12 => closed(
            &xyz,
            Formula::implies(
                Formula::and(Formula::lt(Term::Zero, z()), Formula::lt(x(), y())),
                Formula::lt(mul(x(), z()), mul(y(), z())),
            ),
        ),
        13 => closed(
            &xyz[..2],
            Formula::exists(
                "z",
                Formula::implies(Formula::lt(x(), y()), Formula::eq(add(x(), z()), y())),
            ),
        ),
        14 => closed(
            &xyz[..1],
            Formula::and(
                Formula::lt(Term::Zero, Term::One),
                Formula::implies(
                    Formula::gt(x(), Term::Zero),
                    Formula::or(Formula::gt(x(), Term::One), Formula::eq(x(), Term::One)),
                ),
            ),
        ),
        15 => closed(
            &xyz[..1],
            Formula::or(Formula::gt(x(), Term::Zero), Formula::eq(x(), Term::Zero)),
        ),
        _ => unreachable!("AxiomId is validated on construction"),
    }
}

pub fn all_axioms() -> Vec<(AxiomId, Formula)> {
    AxiomId::all().map(|id| (id, axiom_formula(id))).collect()
}

/// Axioms plus one conjecture, ready for export.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub axioms: Vec<(String, Formula)>,
    pub conjecture: (String, Formula),
}

impl ProblemFile {
    pub fn new(conjecture_name: impl Into<String>, conjecture: Formula) -> Self {
        Self {
            axioms: Vec::new(),
            conjecture: (conjecture_name.into(), conjecture),
        }
    }

    /// The conjecture together with A1..A15 named `a1`..`a15`.
    pub fn with_pa_minus(conjecture_name: impl Into<String>, conjecture: Formula) -> Self {
        Self {
            axioms: all_axioms().into_iter().map(|(id, f)| (id.file_name(), f)).collect(),
            conjecture: (conjecture_name.into(), conjecture),
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Renders `p` as `fof(<name>, <role>, <formula>).` lines, axioms first.
pub fn export_problem(p: &ProblemFile) -> Result<String, AxiomError> {
    let entries = p.axioms.iter().map(|(n, f)| (n, "axiom", f)).chain(std::iter::once((
        &p.conjecture.0,
        "conjecture",
        &p.conjecture.1,
    )));
    let mut out = String::new();
    for (name, role, f) in entries {
        if !valid_name(name) {
            return Err(AxiomError::InvalidName(name.clone()));
        }
        let free = f.free_vars();
        if !free.is_empty() {
            let vars = free.iter().map(|v| v.name()).collect::<Vec<_>>().join(", ");
            return Err(AxiomError::NotASentence {
                name: name.clone(),
                vars,
            });
        }
        out.push_str(&format!("fof({name}, {role}, {}).\n", export_formula(f)));
    }
    Ok(out)
}
