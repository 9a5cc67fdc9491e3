//! Minimal arithmetic-expression evaluator for user-supplied stored-energy
//! laws.
//!
//! Grammar: `+ - * / ^` with parentheses, the stretch variable `F`, and
//! numeric literals (decimal, optional exponent). `^` is right-associative
//! and binds tighter than unary minus, so `-F^2 == -(F^2)`.
//!
//! Input is untrusted (config files pass expression strings straight
//! through), so the parser is total: every byte sequence either yields an
//! [`Expr`] or an [`ExprError`] with a byte offset, and nesting depth is
//! capped.

use std::fmt;

use thiserror::Error;

/// Maximum parenthesis/operator nesting depth accepted by the parser.
const MAX_DEPTH: usize = 200;

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expression parse error at byte {offset}: {message}")]
pub struct ExprError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Num(f64),
    Var,
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Neg(Box<Node>),
}

/// A parsed closed-form expression in the single variable `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    root: Node,
    source: String,
}

impl Expr {
    /// Parse `src` into an expression tree.
    pub fn parse(src: &str) -> Result<Expr, ExprError> {
        let tokens = lex(src)?;
        let mut p = Parser { tokens, pos: 0 };
        let root = p.expression(0)?;
        if p.pos < p.tokens.len() {
            return Err(ExprError {
                offset: p.tokens[p.pos].offset,
                message: "unexpected trailing input".into(),
            });
        }
        Ok(Expr { root, source: src.to_string() })
    }

    /// Evaluate at stretch `f`. Division by zero and overflow follow IEEE
    /// semantics (inf/NaN), which callers treat as out-of-domain.
    pub fn eval(&self, f: f64) -> f64 {
        eval_node(&self.root, f)
    }

    /// The original source text.
    pub fn source(&self) -> &str {
        &self.source
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(&self.source)
    }
}

fn eval_node(node: &Node, f: f64) -> f64 {
    match node {
        Node::Num(v) => *v,
        Node::Var => f,
        Node::Add(a, b) => eval_node(a, f) + eval_node(b, f),
        Node::Sub(a, b) => eval_node(a, f) - eval_node(b, f),
        Node::Mul(a, b) => eval_node(a, f) * eval_node(b, f),
        Node::Div(a, b) => eval_node(a, f) / eval_node(b, f),
        Node::Pow(a, b) => eval_node(a, f).powf(eval_node(b, f)),
        Node::Neg(a) => -eval_node(a, f),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'F' => Tok::Var,
            b'0'..=b'9' | b'.' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let value: f64 = text.parse().map_err(|_| ExprError {
                    offset: start,
                    message: format!("malformed number `{text}`"),
                })?;
                out.push(Token { tok: Tok::Num(value), offset: start });
                continue;
            }
            _ => {
                return Err(ExprError {
                    offset: i,
                    message: format!("unexpected character `{}`", &src[i..].chars().next().map(String::from).unwrap_or_default()),
                })
            }
        };
        out.push(Token { tok, offset: i });
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.offset).unwrap_or(usize::MAX)
    }

    fn expression(&mut self, depth: usize) -> Result<Node, ExprError> {
        self.check_depth(depth)?;
        let mut lhs = self.term(depth + 1)?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term(depth + 1)?;
                    lhs = Node::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term(depth + 1)?;
                    lhs = Node::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Node, ExprError> {
        self.check_depth(depth)?;
        let mut lhs = self.unary(depth + 1)?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary(depth + 1)?;
                    lhs = Node::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.unary(depth + 1)?;
                    lhs = Node::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self, depth: usize) -> Result<Node, ExprError> {
        self.check_depth(depth)?;
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.unary(depth + 1)?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary(depth + 1)
            }
            _ => self.power(depth + 1),
        }
    }

    fn power(&mut self, depth: usize) -> Result<Node, ExprError> {
        self.check_depth(depth)?;
        let base = self.atom(depth + 1)?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            // Right-associative; the exponent may carry a unary sign.
            let exp = self.unary(depth + 1)?;
            return Ok(Node::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self, depth: usize) -> Result<Node, ExprError> {
        self.check_depth(depth)?;
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Node::Num(v))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                Ok(Node::Var)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expression(depth + 1)?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(ExprError { offset: self.offset(), message: "expected `)`".into() }),
                }
            }
            Some(_) => Err(ExprError { offset, message: "expected number, `F`, or `(`".into() }),
            None => Err(ExprError {
                offset: usize::MAX,
                message: "unexpected end of expression".into(),
            }),
        }
    }

    fn check_depth(&self, depth: usize) -> Result<(), ExprError> {
        if depth > MAX_DEPTH {
            Err(ExprError { offset: self.offset(), message: "expression too deeply nested".into() })
        } else {
            Ok(())
        }
    }
}
