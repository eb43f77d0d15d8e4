//! Parser for the plain-text model format. One grammar serves both algebra
//! kinds; a `lie` flag on the section header switches the differential
//! expressions to bracket mode.
//!
//! ```text
//! # comment
//! algebra Y
//!   x1 : 4
//!   x2 : 4
//!   y : 7
//!   d y = x1 * x2
//! end
//!
//! algebra L lie
//!   a : 3
//!   b : 7
//!   d b = [a, a]
//! end
//! ```
//!
//! Expressions are whitespace-insensitive: rational literals (`3`, `-1/2`),
//! generator names, `*`, `+`, `-`, `^` for powers, and `[x, y]` for brackets
//! in lie mode. Degree mismatches and a nonzero d squared are rejected at
//! load time with the offending generator named.

use crate::cdga::{Element, GeneratorSpec, Generators, SullivanAlgebra};
use crate::dgl::{FreeDgl, LieElement, LieGenerator};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

#[derive(Debug, Clone)]
pub enum SectionKind {
    Algebra(Arc<SullivanAlgebra>),
    Lie(Arc<FreeDgl>),
}

#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub kind: SectionKind,
    /// Normalized differential expressions per generator, for canonical
    /// printing of lie sections (algebra sections print from the elements).
    pub boundary_exprs: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default)]
pub struct ModelFile {
    pub sections: Vec<Section>,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<ModelFile, ParseError> {
        Parser::new(text).file()
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn first_algebra(&self) -> Option<&Section> {
        self.sections
            .iter()
            .find(|s| matches!(s.kind, SectionKind::Algebra(_)))
    }

    pub fn first_lie(&self) -> Option<&Section> {
        self.sections
            .iter()
            .find(|s| matches!(s.kind, SectionKind::Lie(_)))
    }
}

// ---- expression AST -------------------------------------------------------

#[derive(Debug, Clone)]
pub(crate) enum Expr {
    Rational(Rational),
    Name(String, usize, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32, usize, usize),
    Bracket(Box<Expr>, Box<Expr>, usize, usize),
}

impl Expr {
    /// Canonical rendering, re-parseable by the same grammar.
    pub(crate) fn render(&self) -> String {
        fn atom(e: &Expr, out: &mut String) {
            match e {
                Expr::Rational(c) => {
                    let _ = write!(out, "{c}");
                }
                Expr::Name(n, _, _) => out.push_str(n),
                Expr::Bracket(a, b, _, _) => {
                    out.push('[');
                    render_into(a, out);
                    out.push_str(", ");
                    render_into(b, out);
                    out.push(']');
                }
                other => {
                    out.push('(');
                    render_into(other, out);
                    out.push(')');
                }
            }
        }
        fn factor(e: &Expr, out: &mut String) {
            match e {
                Expr::Pow(b, n, _, _) => {
                    atom(b, out);
                    let _ = write!(out, "^{n}");
                }
                Expr::Mul(a, b) => {
                    factor(a, out);
                    out.push_str(" * ");
                    factor(b, out);
                }
                other => atom(other, out),
            }
        }
        fn render_into(e: &Expr, out: &mut String) {
            match e {
                Expr::Add(a, b) => {
                    render_into(a, out);
                    out.push_str(" + ");
                    factor(b, out);
                }
                Expr::Sub(a, b) => {
                    render_into(a, out);
                    out.push_str(" - ");
                    factor(b, out);
                }
                Expr::Neg(a) => {
                    out.push('-');
                    factor(a, out);
                }
                other => factor(other, out),
            }
        }
        let mut s = String::new();
        render_into(self, &mut s);
        s
    }
}

// ---- tokenizer ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn tokenize(s: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, col));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            '[' => {
                out.push((Tok::LBracket, col));
                i += 1;
            }
            ']' => {
                out.push((Tok::RBracket, col));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let n = BigInt::from_str(&lit)
                    .map_err(|_| ParseError::new(line, col + 1, "invalid integer literal"))?;
                out.push((Tok::Int(n), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col + 1,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    Ok(out)
}

// ---- expression parser ----------------------------------------------------

struct ExprParser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    lie: bool,
}

impl ExprParser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, c)| c + 1)
            .unwrap_or_else(|| self.toks.last().map(|&(_, c)| c + 2).unwrap_or(1))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(self.line, self.col(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = Expr::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            let col = self.col();
            self.pos += 1;
            if self.lie {
                return Err(ParseError::new(
                    self.line,
                    col,
                    "powers are not defined in lie mode",
                ));
            }
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp = u32::try_from(&n).map_err(|_| {
                        ParseError::new(self.line, col, "exponent out of range")
                    })?;
                    Ok(Expr::Pow(Box::new(base), exp, self.line, col))
                }
                _ => Err(ParseError::new(self.line, self.col(), "expected an exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Int(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            Ok(Expr::Rational(Rational::new(n, d)))
                        }
                        Some(Tok::Int(_)) =>

                            Err(ParseError::new(self.line, col, "zero denominator")),
                        _ => Err(ParseError::new(
                            self.line,
                            self.col(),
                            "expected a denominator",
                        )),
                    }
                } else {
                    Ok(Expr::Rational(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => Ok(Expr::Name(name, self.line, col)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::LBracket) => {
                if !self.lie {
                    return Err(ParseError::new(
                        self.line,
                        col,
                        "brackets are only available in lie mode",
                    ));
                }
                let a = self.expr()?;
                self.expect(&Tok::Comma, "`,`")?;
                let b = self.expr()?;
                self.expect(&Tok::RBracket, "`]`")?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b), self.line, col))
            }
            _ => Err(ParseError::new(self.line, col, "expected an expression")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            Err(ParseError::new(
                self.line,
                self.col(),
                "trailing tokens after expression",
            ))
        } else {
            Ok(())
        }
    }
}

pub(crate) fn parse_expression(
    text: &str,
    line: usize,
    col0: usize,
    lie: bool,
) -> Result<Expr, ParseError> {
    let toks = tokenize(text, line, col0)?;
    if toks.is_empty() {
        return Err(ParseError::new(line, col0 + 1, "empty expression"));
    }
    let mut p = ExprParser {
        toks,
        pos: 0,
        line,
        lie,
    };
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

// ---- evaluation -----------------------------------------------------------

pub(crate) fn eval_algebra_expr(expr: &Expr, gens: &Generators) -> Result<Element, ParseError> {
    match expr {
        Expr::Rational(c) => Ok(Element::scalar(c.clone())),
        Expr::Name(n, line, col) => {
            let id = gens
                .id_of(n)
                .ok_or_else(|| ParseError::new(*line, *col, format!("unknown generator `{n}`")))?;
            Ok(gens.generator(id))
        }
        Expr::Neg(a) => Ok(eval_algebra_expr(a, gens)?.neg()),
        Expr::Add(a, b) => Ok(eval_algebra_expr(a, gens)?.add(&eval_algebra_expr(b, gens)?)),
        Expr::Sub(a, b) => Ok(eval_algebra_expr(a, gens)?.sub(&eval_algebra_expr(b, gens)?)),
        Expr::Mul(a, b) => Ok(gens.mul(&eval_algebra_expr(a, gens)?, &eval_algebra_expr(b, gens)?)),
        Expr::Pow(a, n, _, _) => Ok(gens.pow(&eval_algebra_expr(a, gens)?, *n)),
        Expr::Bracket(_, _, line, col) => Err(ParseError::new(
            *line,
            *col,
            "brackets are only available in lie mode",
        )),
    }
}

enum LieValue {
    Scalar(Rational),
    Lie(LieElement),
}

pub(crate) fn eval_lie_expr(expr: &Expr, dgl: &Arc<FreeDgl>) -> Result<LieElement, ParseError> {
    match eval_lie_value(expr, dgl)? {
        LieValue::Lie(e) => Ok(e),
        LieValue::Scalar(c) if c.is_zero() => Ok(LieElement::zero()),
        LieValue::Scalar(_) => Err(ParseError::new(
            0,
            0,
            "a nonzero scalar is not a Lie element",
        )),
    }
}

fn eval_lie_value(expr: &Expr, dgl: &Arc<FreeDgl>) -> Result<LieValue, ParseError> {
    match expr {
        Expr::Rational(c) => Ok(LieValue::Scalar(c.clone())),
        Expr::Name(n, line, col) => {
            let id = dgl
                .id_of(n)
                .ok_or_else(|| ParseError::new(*line, *col, format!("unknown generator `{n}`")))?;
            Ok(LieValue::Lie(dgl.generator(id)))
        }
        Expr::Neg(a) => Ok(match eval_lie_value(a, dgl)? {
            LieValue::Scalar(c) => LieValue::Scalar(-c),
            LieValue::Lie(e) => LieValue::Lie(e.neg()),
        }),
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let negate = matches!(expr, Expr::Sub(_, _));
            let x = eval_lie_value(a, dgl)?;
            let y = eval_lie_value(b, dgl)?;
            match (x, y) {
                (LieValue::Lie(x), LieValue::Lie(y)) => {
                    Ok(LieValue::Lie(if negate { x.sub(&y) } else { x.add(&y) }))
                }
                (LieValue::Scalar(a), LieValue::Scalar(b)) => {
                    Ok(LieValue::Scalar(if negate { a - b } else { a + b }))
                }
                (LieValue::Lie(x), LieValue::Scalar(c)) | (LieValue::Scalar(c), LieValue::Lie(x)) => {
                    if c.is_zero() {
                        Ok(LieValue::Lie(x))
                    } else {
                        Err(ParseError::new(0, 0, "cannot add a scalar to a Lie element"))
                    }
                }
            }
        }
        Expr::Mul(a, b) => {
            let x = eval_lie_value(a, dgl)?;
            let y = eval_lie_value(b, dgl)?;
            match (x, y) {
                (LieValue::Scalar(c), LieValue::Lie(e)) | (LieValue::Lie(e), LieValue::Scalar(c)) => {
                    Ok(LieValue::Lie(e.scale(&c)))
                }
                (LieValue::Scalar(a), LieValue::Scalar(b)) => Ok(LieValue::Scalar(a * b)),
                (LieValue::Lie(_), LieValue::Lie(_)) => Err(ParseError::new(
                    0,
                    0,
                    "Lie elements multiply only through brackets; use [x, y]",
                )),
            }
        }
        Expr::Pow(_, _, line, col) => Err(ParseError::new(
            *line,
            *col,
            "powers are not defined in lie mode",
        )),
        Expr::Bracket(a, b, line, col) => {
            let x = eval_lie_expr(a, dgl)?;
            let y = eval_lie_expr(b, dgl)?;
            dgl.bracket(&x, &y)
                .map(LieValue::Lie)
                .map_err(|e| ParseError::new(*line, *col, e.to_string()))
        }
    }
}

// ---- file parser ----------------------------------------------------------

struct Parser<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let no_comment = match l.find('#') {
                    Some(k) => &l[..k],
                    None => l,
                };
                (i + 1, no_comment)
            })
            .collect();
        Parser { lines, pos: 0 }
    }

    fn next_content_line(&mut self) -> Option<(usize, &'a str)> {
        while self.pos < self.lines.len() {
            let (n, l) = self.lines[self.pos];
            self.pos += 1;
            if !l.trim().is_empty() {
                return Some((n, l));
            }
        }
        None
    }

    fn file(&mut self) -> Result<ModelFile, ParseError> {
        let mut sections = Vec::new();
        while let Some((line_no, line)) = self.next_content_line() {
            let trimmed = line.trim();
            let mut words = trimmed.split_whitespace();
            if words.next() != Some("algebra") {
                return Err(ParseError::new(
                    line_no,
                    line.len() - line.trim_start().len() + 1,
                    "expected `algebra <name> [lie]`",
                ));
            }
            let name = words
                .next()
                .ok_or_else(|| ParseError::new(line_no, 1, "missing section name"))?
                .to_string();
            let lie = match words.next() {
                None => false,
                Some("lie") => true,
                Some(other) => {
                    return Err(ParseError::new(
                        line_no,
                        1,
                        format!("unexpected token `{other}` in section header"),
                    ))
                }
            };
            if words.next().is_some() {
                return Err(ParseError::new(line_no, 1, "trailing tokens in section header"));
            }
            sections.push(self.section(name, lie, line_no)?);
        }
        Ok(ModelFile { sections })
    }

    fn section(&mut self, name: String, lie: bool, header_line: usize) -> Result<Section, ParseError> {
        let mut gens: Vec<(String, i64, usize)> = Vec::new();
        let mut dlines: Vec<(String, Expr, usize)> = Vec::new();
        loop {
            let Some((line_no, raw)) = self.next_content_line() else {
                return Err(ParseError::new(
                    header_line,
                    1,
                    format!("section `{name}` is missing its `end`"),
                ));
            };
            let line = raw.trim();
            if line == "end" {
                break;
            }
            if let Some(rest) = line.strip_prefix("d ").or_else(|| line.strip_prefix("d\t")) {
                let eq = rest.find('=').ok_or_else(|| {
                    ParseError::new(line_no, 1, "differential line needs `d <gen> = <expr>`")
                })?;
                let gen = rest[..eq].trim().to_string();
                if gen.is_empty() {
                    return Err(ParseError::new(line_no, 1, "missing generator in `d` line"));
                }
                let expr_text = &rest[eq + 1..];
                let col0 = raw.len() - raw.trim_start().len() + 2 + eq + 1;
                let expr = parse_expression(expr_text, line_no, col0, lie)?;
                dlines.push((gen, expr, line_no));
            } else {
                // generator declaration: name : degree
                let colon = line.find(':').ok_or_else(|| {
                    ParseError::new(line_no, 1, "expected `<name> : <degree>` or `d <gen> = <expr>`")
                })?;
                let gname = line[..colon].trim().to_string();
                let deg_text = line[colon + 1..].trim();
                let degree: i64 = deg_text.parse().map_err(|_| {
                    ParseError::new(line_no, 1, format!("invalid degree `{deg_text}`"))
                })?;
                if gname.is_empty()
                    || !gname
                        .chars()
                        .all(|c| c.is_ascii_alphanumeric() || c == '_')
                    || !gname.chars().next().unwrap().is_ascii_alphabetic()
                {
                    return Err(ParseError::new(
                        line_no,
                        1,
                        format!("invalid generator name `{gname}`"),
                    ));
                }
                gens.push((gname, degree, line_no));
            }
        }
        for (g, _, line_no) in &dlines {
            if !gens.iter().any(|(n, _, _)| n == g) {
                return Err(ParseError::new(
                    *line_no,
                    1,
                    format!("differential assigned to undeclared generator `{g}`"),
                ));
            }
        }
        if lie {
            let specs = gens
                .iter()
                .map(|(n, d, _)| LieGenerator::new(n.clone(), *d))
                .collect();
            let base = FreeDgl::abelian_boundary(specs)
                .map_err(|e| ParseError::new(header_line, 1, e.to_string()))?;
            let mut boundary = Vec::new();
            let mut rendered = Vec::new();
            for (g, expr, line_no) in &dlines {
                let e = eval_lie_expr(expr, &base).map_err(|pe| {
                    if pe.line == 0 {
                        ParseError::new(*line_no, 1, pe.message)
                    } else {
                        pe
                    }
                })?;
                boundary.push((g.clone(), e));
                rendered.push((g.clone(), expr.render()));
            }
            let dgl = base
                .with_boundary(boundary)
                .map_err(|e| ParseError::new(header_line, 1, e.to_string()))?;
            Ok(Section {
                name,
                kind: SectionKind::Lie(dgl),
                boundary_exprs: rendered,
            })
        } else {
            let specs = gens
                .iter()
                .map(|(n, d, _)| GeneratorSpec::new(n.clone(), *d))
                .collect();
            let table = Generators::new(specs)
                .map_err(|e| ParseError::new(header_line, 1, e.to_string()))?;
            let mut diffs = Vec::new();
            let mut rendered = Vec::new();
            for (g, expr, line_no) in &dlines {
                let e = eval_algebra_expr(expr, &table)?;
                let _ = line_no;
                diffs.push((g.clone(), e));
                rendered.push((g.clone(), expr.render()));
            }
            let alg = SullivanAlgebra::new(table, diffs)
                .map_err(|e| ParseError::new(header_line, 1, e.to_string()))?;
            Ok(Section {
                name,
                kind: SectionKind::Algebra(alg),
                boundary_exprs: rendered,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WEDGE: &str = "\
# two degree-4 classes with one relation
algebra Y
  x1 : 4
  x2 : 4
  y : 7
  d y = x1 * x2
end
";

    #[test]
    fn wedge_file_parses_to_the_model() {
        let f = ModelFile::parse(WEDGE).unwrap();
        assert_eq!(f.sections.len(), 1);
        let Section { name, kind, .. } = &f.sections[0];
        assert_eq!(name, "Y");
        let SectionKind::Algebra(alg) = kind else {
            panic!("expected an algebra section")
        };
        assert!(alg.is_minimal());
        let g = alg.gens();
        let y = g.id_of("y").unwrap();
        let expected = g.mul(
            &g.generator(g.id_of("x1").unwrap()),
            &g.generator(g.id_of("x2").unwrap()),
        );
        assert_eq!(alg.differential_of(y), &expected);
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let text = "algebra A\n  x1 : 4\n  y : 7\n  d y = x1\nend\n";
        let err = ModelFile::parse(text).unwrap_err();
        assert!(err.message.contains("degree 8"), "{}", err.message);
    }

    #[test]
    fn d_squared_violation_names_the_generator() {
        let text = "algebra A\n  a : 2\n  b : 3\n  c : 4\n  d b = a^2\n  d c = a * b\nend\n";
        let err = ModelFile::parse(text).unwrap_err();
        assert!(err.message.contains('c'), "{}", err.message);
    }

    #[test]
    fn empty_generator_list_is_the_unit_algebra() {
        let f = ModelFile::parse("algebra Unit\nend\n").unwrap();
        let SectionKind::Algebra(alg) = &f.sections[0].kind else {
            panic!()
        };
        assert_eq!(alg.gens().len(), 0);
        assert_eq!(alg.basis_in_degree(0).len(), 1);
    }

    #[test]
    fn lie_sections_parse_brackets() {
        let text = "algebra L lie\n  a : 3\n  b : 7\n  d b = [a, a]\nend\n";
        let f = ModelFile::parse(text).unwrap();
        let SectionKind::Lie(dgl) = &f.sections[0].kind else {
            panic!("expected a lie section")
        };
        assert!(dgl.is_minimal());
        let a = dgl.generator(dgl.id_of("a").unwrap());
        let aa = dgl.bracket(&a, &a).unwrap();
        assert_eq!(dgl.boundary_of(dgl.id_of("b").unwrap()), &aa);
    }

    #[test]
    fn error_positions_point_into_the_expression() {
        let text = "algebra A\n  x1 : 4\n  y : 7\n  d y = x1 * zz\nend\n";
        let err = ModelFile::parse(text).unwrap_err();
        assert_eq!(err.line, 4);
        assert!(err.col > 8);
        assert!(err.message.contains("zz"));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(128))]

        /// Formatted elements re-parse to the same element.
        #[test]
        fn element_formatting_round_trips(
            coeffs in proptest::collection::vec((-6i64..=6, 1i64..=4), 1..6)
        ) {
            let f = ModelFile::parse(WEDGE).unwrap();
            let SectionKind::Algebra(alg) = &f.sections[0].kind else { unreachable!() };
            let gens = alg.gens();
            // assemble an element from the degree-8 and degree-11 bases
            let mut e = crate::cdga::Element::zero();
            let basis: Vec<_> = gens
                .monomials_of_degree(8)
                .into_iter()
                .chain(gens.monomials_of_degree(11))
                .collect();
            for (i, &(num, den)) in coeffs.iter().enumerate() {
                let m = basis[i % basis.len()].clone();
                e = e.add(&crate::cdga::Element::from_monomial(
                    m,
                    crate::rational::ratio(num, den),
                ));
            }
            let text = gens.format_element(&e);
            let expr = parse_expression(&text, 1, 0, false).unwrap();
            let back = eval_algebra_expr(&expr, gens).unwrap();
            proptest::prop_assert_eq!(back, e);
        }
    }

    #[test]
    fn rational_coefficients_parse() {
        let text = "algebra A\n  x1 : 4\n  x2 : 4\n  y : 7\n  d y = 3/2 * x1 * x2 - x2 * x1\nend\n";
        let f = ModelFile::parse(text).unwrap();
        let SectionKind::Algebra(alg) = &f.sections[0].kind else {
            panic!()
        };
        let g = alg.gens();
        let x1x2 = g.mul(&g.generator(0), &g.generator(1));
        assert_eq!(
            alg.differential_of(g.id_of("y").unwrap()),
            &x1x2.scale(&crate::rational::ratio(1, 2))
        );
    }
}
