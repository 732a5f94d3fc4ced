//! Parser for the concrete syntax.
//!
//! ```text
//! term := "0" | "1" | ident | "(" term "+" term ")" | "(" term "*" term ")"
//! atom := "(" term "=" term ")" | "(" term "<" term ")"
//! fml  := atom | "(" "not" fml ")" | "(" fml "and" fml ")" | "(" fml "or" fml ")"
//!       | "(" fml "->" fml ")" | "(" "forall" ident fml ")" | "(" "exists" ident fml ")"
//! ```
//!
//! Also accepted on input: `(s != t)` for `(not (s = t))`, `(s > t)` for
//! `(t < s)` and `(s >= t)` for `(not (s < t))`.
//!
//! The parser keeps an explicit frame stack, so nesting depth is bounded by
//! memory rather than by the call stack.

use std::fmt;

use super::syntax::{is_identifier, Formula, Term, TermOp, Variable, RESERVED};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token, or the input length at end of input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    /// The token found instead; `None` at end of input.
    pub found: Option<String>,
}

impl ParseError {
    pub fn is_end_of_input(&self) -> bool {
        self.found.is_none()
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.found {
            None => write!(f, "unexpected end of input at offset {}", self.offset)?,
            Some(tok) => write!(f, "unexpected `{tok}` at offset {}", self.offset)?,
        }
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok<'a> {
    LParen,
    RParen,
    Zero,
    One,
    Ident(&'a str),
    Keyword(&'a str),
    Op(&'static str),
    Bad(&'a str),
}

impl Tok<'_> {
    fn text(&self) -> String {
        match self {
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Zero => "0".into(),
            Tok::One => "1".into(),
            Tok::Ident(s) | Tok::Keyword(s) | Tok::Bad(s) => (*s).into(),
            Tok::Op(s) => (*s).into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Returns the next token and its offset without consuming it.
    fn peek(&mut self) -> Option<(usize, Tok<'a>, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let first = rest.chars().next()?;
        let (tok, len) = match first {
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '0' => (Tok::Zero, 1),
            '1' => (Tok::One, 1),
            '+' => (Tok::Op("+"), 1),
            '*' => (Tok::Op("*"), 1),
            '=' => (Tok::Op("="), 1),
            '<' => (Tok::Op("<"), 1),
            '-' if rest.starts_with("->") => (Tok::Op("->"), 2),
            '!' if rest.starts_with("!=") => (Tok::Op("!="), 2),
            '>' if rest.starts_with(">=") => (Tok::Op(">="), 2),
            '>' => (Tok::Op(">"), 1),
            c if c.is_ascii_lowercase() => {
                let len = rest
                    .bytes()
                    .take_while(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || *b == b'_')
                    .count();
                let word = &rest[..len];
                debug_assert!(is_identifier(word));
                if RESERVED.contains(&word) {
                    (Tok::Keyword(word), len)
                } else {
                    (Tok::Ident(word), len)
                }
            }
            c => (Tok::Bad(&rest[..c.len_utf8()]), c.len_utf8()),
        };
        Some((start, tok, start + len))
    }

    fn next(&mut self) -> Option<(usize, Tok<'a>)> {
        let (start, tok, end) = self.peek()?;
        self.pos = end;
        Some((start, tok))
    }
}

enum Node {
    Term(Term),
    Formula(Formula),
}

#[derive(Clone, Copy)]
enum Connective {
    Term(TermOp),
    Eq,
    Lt,
    Ne,
    Gt,
    Ge,
    And,
    Or,
    Implies,
}

enum Frame {
    Not,
    Quant { universal: bool, var: Variable },
    Binary { lhs: Option<Node>, op: Option<Connective> },
}

const ITEM: [&str; 4] = ["0", "1", "identifier", "("];
const FORMULA_START: [&str; 1] = ["("];
const TERM_OPS: [&str; 2] = ["+", "*"];
const REL_OPS: [&str; 5] = ["+", "*", "=", "<", "!="];
const BOOL_OPS: [&str; 3] = ["and", "or", "->"];

pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    match Parser::new(src).run()? {
        (Node::Formula(f), _) => Ok(f),
        (Node::Term(_), offset) => Err(ParseError {
            offset,
            expected: FORMULA_START.to_vec(),
            found: Some("term".into()),
        }),
    }
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    match Parser::new(src).run()? {
        (Node::Term(t), _) => Ok(t),
        (Node::Formula(_), offset) => Err(ParseError {
            offset,
            expected: ITEM.to_vec(),
            found: Some("formula".into()),
        }),
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    frames: Vec<Frame>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            lex: Lexer { src, pos: 0 },
            frames: Vec::new(),
        }
    }

    fn error(&mut self, offset: usize, found: Option<Tok<'_>>, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset,
            expected: expected.to_vec(),
            found: found.map(|t| t.text()),
        }
    }

    fn eof_offset(&mut self) -> usize {
        self.lex.skip_ws();
        self.lex.pos
    }

    fn expect_next(&mut self, expected: &[&'static str]) -> Result<(usize, Tok<'a>), ParseError> {
        match self.lex.next() {
            Some(t) => Ok(t),
            None => {
                let offset = self.eof_offset();
                Err(self.error(offset, None, expected))
            }
        }
    }

    /// Returns the top-level node and its starting offset.
    fn run(mut self) -> Result<(Node, usize), ParseError> {
        let root_offset = {
            self.lex.skip_ws();
            self.lex.pos
        };
        loop {
            // Read one item: either a leaf or an opening parenthesis.
            let (offset, tok) = self.expect_next(&ITEM)?;
            let mut node = match tok {
                Tok::Zero => Node::Term(Term::Zero),
                Tok::One => Node::Term(Term::One),
                Tok::Ident(name) => Node::Term(Term::Var(Variable::named(name))),
                Tok::LParen => {
                    let frame = match self.lex.peek() {
                        Some((_, Tok::Keyword("not"), _)) => {
                            self.lex.next();
                            Frame::Not
                        }
                        Some((_, Tok::Keyword(q @ ("forall" | "exists")), _)) => {
                            self.lex.next();
                            let (voff, vtok) = self.expect_next(&["identifier"])?;
                            let Tok::Ident(name) = vtok else {
                                return Err(self.error(voff, Some(vtok), &["identifier"]));
                            };
                            Frame::Quant {
                                universal: q == "forall",
                                var: Variable::named(name),
                            }
                        }
                        _ => Frame::Binary { lhs: None, op: None },
                    };
                    self.frames.push(frame);
                    continue;
                }
                other => return Err(self.error(offset, Some(other), &ITEM)),
            };

            // Deliver the finished node upward until some frame needs another item.
            loop {
                let Some(frame) = self.frames.last_mut() else {
                    if let Some((off, tok, _)) = self.lex.peek() {
                        return Err(self.error(off, Some(tok), &["end of input"]));
                    }
                    return Ok((node, root_offset));
                };
                match frame {
                    Frame::Not | Frame::Quant { .. } => {
                        let Node::Formula(body) = node else {
                            let off = self.lex.pos;
                            let found = self.lex.peek().map(|(_, t, _)| t);
                            return Err(self.error(off, found, &REL_OPS));
                        };
                        let (off, tok) = self.expect_next(&[")"])?;
                        if tok != Tok::RParen {
                            return Err(self.error(off, Some(tok), &[")"]));
                        }
                        node = match self.frames.pop() {
                            Some(Frame::Not) => Node::Formula(Formula::not(body)),
                            Some(Frame::Quant { universal: true, var }) => {
                                Node::Formula(Formula::ForAll(var, Box::new(body)))
                            }
                            Some(Frame::Quant { universal: false, var }) => {
                                Node::Formula(Formula::Exists(var, Box::new(body)))
                            }
                            _ => unreachable!(),
                        };
                    }
                    Frame::Binary { lhs: None, .. } => {
                        let allowed: &[&'static str] = match node {
                            Node::Term(_) => &["+", "*", "=", "<", "!=", ">", ">="],
                            Node::Formula(_) => &BOOL_OPS,
                        };
                        let (off, tok) = self.expect_next(allowed)?;
                        let conn = match (&node, &tok) {
                            (Node::Term(_), Tok::Op("+")) => Connective::Term(TermOp::Add),
                            (Node::Term(_), Tok::Op("*")) => Connective::Term(TermOp::Mul),
                            (Node::Term(_), Tok::Op("=")) => Connective::Eq,
                            (Node::Term(_), Tok::Op("<")) => Connective::Lt,
                            (Node::Term(_), Tok::Op("!=")) => Connective::Ne,
                            (Node::Term(_), Tok::Op(">")) => Connective::Gt,
                            (Node::Term(_), Tok::Op(">=")) => Connective::Ge,
                            (Node::Formula(_), Tok::Keyword("and")) => Connective::And,
                            (Node::Formula(_), Tok::Keyword("or")) => Connective::Or,
                            (Node::Formula(_), Tok::Op("->")) => Connective::Implies,
                            _ => return Err(self.error(off, Some(tok), allowed)),
                        };
                        if let Some(Frame::Binary { lhs, op }) = self.frames.last_mut() {
                            *lhs = Some(node);
                            *op = Some(conn);
                        }
                        break;
                    }
                    Frame::Binary { lhs: Some(_), .. } => {
                        let Some(Frame::Binary {
                            lhs: Some(lhs),
                            op: Some(op),
                        }) = self.frames.pop()
                        else {
                            unreachable!()
                        };
                        let wants_term = matches!(
                            op,
                            Connective::Term(_)
                                | Connective::Eq
                                | Connective::Lt
                                | Connective::Ne
                                | Connective::Gt
                                | Connective::Ge
                        );
                        let rhs_ok = matches!((&node, wants_term), (Node::Term(_), true) | (Node::Formula(_), false));
                        if !rhs_ok {
                            let off = self.lex.pos;
                            let found = self.lex.peek().map(|(_, t, _)| t);
                            let expected: &[&'static str] = if wants_term { &TERM_OPS } else { &REL_OPS };
                            return Err(self.error(off, found, expected));
                        }
                        let (off, tok) = self.expect_next(&[")"])?;
                        if tok != Tok::RParen {
                            return Err(self.error(off, Some(tok), &[")"]));
                        }
                        node = combine(lhs, op, node);
                    }
                }
            }
        }
    }
}

fn combine(lhs: Node, op: Connective, rhs: Node) -> Node {
    match (lhs, rhs) {
        (Node::Term(a), Node::Term(b)) => match op {
            Connective::Term(op) => Node::Term(Term::binary(op, a, b)),
            Connective::Eq => Node::Formula(Formula::Eq(a, b)),
            Connective::Lt => Node::Formula(Formula::Lt(a, b)),
            Connective::Ne => Node::Formula(Formula::ne(a, b)),
            Connective::Gt => Node::Formula(Formula::gt(a, b)),
            Connective::Ge => Node::Formula(Formula::not(Formula::Lt(a, b))),
            _ => unreachable!("boolean connective between terms"),
        },
        (Node::Formula(a), Node::Formula(b)) => Node::Formula(match op {
            Connective::And => Formula::and(a, b),
            Connective::Or => Formula::or(a, b),
            Connective::Implies => Formula::implies(a, b),
            _ => unreachable!("term connective between formulas"),
        }),
        _ => unreachable!("operand kinds checked before combining"),
    }
}
