//! Fully parenthesized concrete syntax. Sugar (`!=`, `>`, `>=`) is never emitted.

use std::fmt::{self, Write};

use super::syntax::{Formula, Term};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self)
    }
}

pub fn print_term(t: &Term) -> String {
    let mut s = String::new();
    write_term(&mut s, t).expect("writing to a String cannot fail");
    s
}

pub fn print_formula(f: &Formula) -> String {
    let mut s = String::new();
    write_formula(&mut s, f).expect("writing to a String cannot fail");
    s
}

// Iterative over left spines: numerals and generated sums are deeply left-nested.
fn write_term<W: Write>(out: &mut W, t: &Term) -> fmt::Result {
    match t {
        Term::Zero => out.write_char('0'),
        Term::One => out.write_char('1'),
        Term::Var(v) => out.write_str(v.name()),
        Term::Add(..) | Term::Mul(..) => {
            let mut spine = Vec::new();
            let mut cur = t;
            loop {
                match cur {
                    Term::Add(a, b) => {
                        spine.push(('+', b.as_ref()));
                        cur = a;
                    }
                    Term::Mul(a, b) => {
                        spine.push(('*', b.as_ref()));
                        cur = a;
                    }
                    _ => break,
                }
            }
            for _ in 0..spine.len() {
                out.write_char('(')?;
            }
            write_term(out, cur)?;
            for (op, rhs) in spine.into_iter().rev() {
                write!(out, " {op} ")?;
                write_term(out, rhs)?;
                out.write_char(')')?;
            }
            Ok(())
        }
    }
}

fn write_formula<W: Write>(out: &mut W, f: &Formula) -> fmt::Result {
    match f {
        Formula::Eq(a, b) => write_atom(out, a, "=", b),
        Formula::Lt(a, b) => write_atom(out, a, "<", b),
        Formula::Not(g) => {
            out.write_str("(not ")?;
            write_formula(out, g)?;
            out.write_char(')')
        }
        Formula::And(..) | Formula::Or(..) | Formula::Implies(..) => {
            let mut spine = Vec::new();
            let mut cur = f;
            loop {
                match cur {
                    Formula::And(a, b) => {
                        spine.push(("and", b.as_ref()));
                        cur = a;
                    }
                    Formula::Or(a, b) => {
                        spine.push(("or", b.as_ref()));
                        cur = a;
                    }
                    Formula::Implies(a, b) => {
                        spine.push(("->", b.as_ref()));
                        cur = a;
                    }
                    _ => break,
                }
            }
            for _ in 0..spine.len() {
                out.write_char('(')?;
            }
            write_formula(out, cur)?;
            for (op, rhs) in spine.into_iter().rev() {
                write!(out, " {op} ")?;
                write_formula(out, rhs)?;
                out.write_char(')')?;
            }
            Ok(())
        }
        Formula::ForAll(v, g) => {
            write!(out, "(forall {v} ")?;
            write_formula(out, g)?;
            out.write_char(')')
        }
        Formula::Exists(v, g) => {
            write!(out, "(exists {v} ")?;
            write_formula(out, g)?;
            out.write_char(')')
        }
    }
}

fn write_atom<W: Write>(out: &mut W, a: &Term, op: &str, b: &Term) -> fmt::Result {
    out.write_char('(')?;
    write_term(out, a)?;
    write!(out, " {op} ")?;
    write_term(out, b)?;
    out.write_char(')')
}
