//! TPTP-style rendering: `plus/2`, `times/2`, `zero`, `one`, `$less/2`,
//! upper-cased variables and fully parenthesized connectives.

use std::fmt::Write;

use crate::logic::{Formula, Term, Variable};

fn upper(v: &Variable) -> String {
    v.name().to_ascii_uppercase()
}

pub fn export_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t);
    out
}

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Zero => out.push_str("zero"),
        Term::One => out.push_str("one"),
        Term::Var(v) => out.push_str(&upper(v)),
        Term::Add(..) | Term::Mul(..) => {
            let mut spine = Vec::new();
            let mut cur = t;
            loop {
                match cur {
                    Term::Add(a, b) => {
                        spine.push(("plus(", b.as_ref()));
                        cur = a;
                    }
                    Term::Mul(a, b) => {
                        spine.push(("times(", b.as_ref()));
                        cur = a;
                    }
                    _ => break,
                }
            }
            for (head, _) in &spine {
                out.push_str(head);
            }
            write_term(out, cur);
            for (_, rhs) in spine.into_iter().rev() {
                out.push(',');
                write_term(out, rhs);
                out.push(')');
            }
        }
    }
}

pub fn export_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f);
    out
}

fn write_formula(out: &mut String, f: &Formula) {
    match f {
        Formula::Eq(a, b) => {
            let _ = write!(out, "({} = {})", export_term(a), export_term(b));
        }
        Formula::Not(inner) if matches!(**inner, Formula::Eq(..)) => {
            let Formula::Eq(a, b) = &**inner else { unreachable!() };
            let _ = write!(out, "({} != {})", export_term(a), export_term(b));
        }
        Formula::Lt(a, b) => {
            let _ = write!(out, "$less({},{})", export_term(a), export_term(b));
        }
        Formula::Not(g) => {
            out.push_str("(~ ");
            write_formula(out, g);
            out.push(')');
        }
        Formula::And(a, b) => binary(out, a, "&", b),
        Formula::Or(a, b) => binary(out, a, "|", b),
        Formula::Implies(a, b) => binary(out, a, "=>", b),
        Formula::ForAll(v, g) => {
            let _ = write!(out, "(![{}]: ", upper(v));
            write_formula(out, g);
            out.push(')');
        }
        Formula::Exists(v, g) => {
            let _ = write!(out, "(?[{}]: ", upper(v));
            write_formula(out, g);
            out.push(')');
        }
    }
}

fn binary(out: &mut String, a: &Formula, op: &str, b: &Formula) {
    out.push('(');
    write_formula(out, a);
    let _ = write!(out, " {op} ");
    write_formula(out, b);
    out.push(')');
}
