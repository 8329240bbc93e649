//! A small compiler for the tabulated closed-form formulas.
//!
//! Formulas use the variables `x`, `y`, `k`, the constant `pi`, the binary
//! operators `+ - * / ^`, unary minus, `abs(..)` and juxtaposition as
//! multiplication (`2 k x` is `2*k*x`). The subexpressions `(-1)^k` and
//! `(-1)^(k+c)` compile to a parity sign supplied at evaluation time, so a
//! formula can be evaluated at real `k` inside one parity class.

use std::fmt;

use crate::error::{Error, Result};

const MAX_STACK: usize = 64;

/// Values bound to the formula variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vars {
    pub x: f64,
    pub y: f64,
    pub k: f64,
    /// Value of `(-1)^k`.
    pub sign: f64,
}

impl Vars {
    /// Point without a digit.
    pub fn point(x: f64, y: f64) -> Self {
        Vars { x, y, k: 0.0, sign: 1.0 }
    }

    /// Point with an integer digit; the parity sign is derived from `k`.
    pub fn digit(x: f64, y: f64, k: u64) -> Self {
        Vars {
            x,
            y,
            k: k as f64,
            sign: if k % 2 == 0 { 1.0 } else { -1.0 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Op {
    Const(f64),
    X,
    Y,
    K,
    /// `(-1)^(k+c)`: pushes `sign` for even `c`, `-sign` for odd `c`.
    Parity(bool),
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowI(i32),
    Pow,
    Abs,
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Num(f64),
    X,
    Y,
    K,
    Parity(bool),
    Neg(Box<Node>),
    Abs(Box<Node>),
    Bin(char, Box<Node>, Box<Node>),
}

/// A compiled formula.
#[derive(Clone)]
pub struct Formula {
    source: String,
    ops: Vec<Op>,
    parity: bool,
    uses_k: bool,
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Formula({})", self.source)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl Formula {
    /// Parses and compiles `source`.
    pub fn compile(source: &str) -> Result<Self> {
        let tokens = tokenize(source)?;
        let mut parser = Parser { tokens: &tokens, pos: 0, source };
        let node = parser.expr()?;
        if parser.pos != tokens.len() {
            return Err(parser.error("trailing input"));
        }
        let mut ops = Vec::new();
        emit(&node, &mut ops);
        let depth = stack_depth(&ops);
        if depth > MAX_STACK {
            return Err(Error::Parse(format!("formula too deep: {source}")));
        }
        let parity = ops.iter().any(|op| matches!(op, Op::Parity(_)));
        let uses_k = parity || ops.iter().any(|op| matches!(op, Op::K));
        Ok(Formula { source: source.to_string(), ops, parity, uses_k })
    }

    /// Source text of the formula.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// True if the formula contains `(-1)^k`.
    pub fn has_parity(&self) -> bool {
        self.parity
    }

    /// True if the formula depends on the digit.
    pub fn uses_k(&self) -> bool {
        self.uses_k
    }

    /// Evaluates the formula.
    #[inline]
    pub fn eval(&self, v: &Vars) -> f64 {
        let mut stack = [0.0f64; MAX_STACK];
        let mut sp = 0usize;
        for op in &self.ops {
            match *op {
                Op::Const(c) => {
                    stack[sp] = c;
                    sp += 1;
                }
                Op::X => {
                    stack[sp] = v.x;
                    sp += 1;
                }
                Op::Y => {
                    stack[sp] = v.y;
                    sp += 1;
                }
                Op::K => {
                    stack[sp] = v.k;
                    sp += 1;
                }
                Op::Parity(odd) => {
                    stack[sp] = if odd { -v.sign } else { v.sign };
                    sp += 1;
                }
                Op::Neg => stack[sp - 1] = -stack[sp - 1],
                Op::Abs => stack[sp - 1] = stack[sp - 1].abs(),
                Op::PowI(n) => stack[sp - 1] = stack[sp - 1].powi(n),
                Op::Add | Op::Sub | Op::Mul | Op::Div | Op::Pow => {
                    sp -= 1;
                    let b = stack[sp];
                    let a = stack[sp - 1];
                    stack[sp - 1] = match *op {
                        Op::Add => a + b,
                        Op::Sub => a - b,
                        Op::Mul => a * b,
                        Op::Div => a / b,
                        _ => a.powf(b),
                    };
                }
            }
        }
        debug_assert_eq!(sp, 1);
        stack[0]
    }

    /// Evaluates at a point, ignoring the digit.
    #[inline]
    pub fn at(&self, x: f64, y: f64) -> f64 {
        self.eval(&Vars::point(x, y))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad number {text:?} in {src:?}")))?;
            out.push(Tok::Num(value));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Tok],
    pos: usize,
    source: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.source))
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Node::Bin('+', Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Node::Bin('-', Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Node::Bin('*', Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Node::Bin('/', Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(
                self.peek(),
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('('))
            ) {
                lhs = Node::Bin('*', Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Node> {
        if self.eat('-') {
            Ok(Node::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let exponent = if self.eat('-') {
            Node::Neg(Box::new(self.atom()?))
        } else {
            self.atom()?
        };
        if is_minus_one(&base) {
            return match parity_offset(&exponent) {
                Some(odd) => Ok(Node::Parity(odd)),
                None => Err(self.error("(-1) raised to a non-digit exponent")),
            };
        }
        Ok(Node::Bin('^', Box::new(base), Box::new(exponent)))
    }

    fn atom(&mut self) -> Result<Node> {
        let tok = self.peek().cloned().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Node::Num(v)),
            Tok::Ident(name) => match name.as_str() {
                "x" => Ok(Node::X),
                "y" => Ok(Node::Y),
                "k" => Ok(Node::K),
                "pi" => Ok(Node::Num(std::f64::consts::PI)),
                "abs" => {
                    if !self.eat('(') {
                        return Err(self.error("expected '(' after abs"));
                    }
                    let inner = self.expr()?;
                    if !self.eat(')') {
                        return Err(self.error("expected ')'"));
                    }
                    Ok(Node::Abs(Box::new(inner)))
                }
                _ => Err(self.error(&format!("unknown identifier {name:?}"))),
            },
            Tok::Sym('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Tok::Sym(c) => Err(self.error(&format!("unexpected {c:?}"))),
        }
    }
}

fn is_minus_one(node: &Node) -> bool {
    match node {
        Node::Num(v) => *v == -1.0,
        Node::Neg(inner) => matches!(**inner, Node::Num(v) if v == 1.0),
        _ => false,
    }
}

/// Recognizes `k`, `k+c` and `k-c` for integer `c`; returns whether `c` is odd.
fn parity_offset(node: &Node) -> Option<bool> {
    let int_odd = |v: f64| (v.fract() == 0.0).then(|| (v as i64).rem_euclid(2) == 1);
    match node {
        Node::K => Some(false),
        Node::Bin('+', a, b) | Node::Bin('-', a, b) => match (&**a, &**b) {
            (Node::K, Node::Num(c)) | (Node::Num(c), Node::K) => int_odd(*c),
            _ => None,
        },
        _ => None,
    }
}

fn emit(node: &Node, ops: &mut Vec<Op>) {
    match node {
        Node::Num(v) => ops.push(Op::Const(*v)),
        Node::X => ops.push(Op::X),
        Node::Y => ops.push(Op::Y),
        Node::K => ops.push(Op::K),
        Node::Parity(odd) => ops.push(Op::Parity(*odd)),
        Node::Neg(inner) => {
            emit(inner, ops);
            ops.push(Op::Neg);
        }
        Node::Abs(inner) => {
            emit(inner, ops);
            ops.push(Op::Abs);
        }
        Node::Bin('^', base, exponent) => {
            emit(base, ops);
            match **exponent {
                Node::Num(n) if n.fract() == 0.0 && n.abs() <= 64.0 => ops.push(Op::PowI(n as i32)),
                _ => {
                    emit(exponent, ops);
                    ops.push(Op::Pow);
                }
            }
        }
        Node::Bin(c, a, b) => {
            emit(a, ops);
            emit(b, ops);
            ops.push(match c {
                '+' => Op::Add,
                '-' => Op::Sub,
                '*' => Op::Mul,
                _ => Op::Div,
            });
        }
    }
}

fn stack_depth(ops: &[Op]) -> usize {
    let mut depth = 0usize;
    let mut max = 0usize;
    for op in ops {
        match op {
            Op::Const(_) | Op::X | Op::Y | Op::K | Op::Parity(_) => depth += 1,
            Op::Neg | Op::Abs | Op::PowI(_) => {}
            _ => depth -= 1,
        }
        max = max.max(depth);
    }
    max
}
