//! The line-oriented `.prob` text format.
//!
//! ```text
//! # comment
//! vars: x, y, z
//! qff: x^2 + y^2 - 1 = 0, x*y < z
//! qff: x - y > 0
//! ```
//!
//! Each constraint is `lhs relop rhs` and is stored as the single polynomial
//! `lhs - rhs` with denominators cleared and its sign normalized. Rational
//! coefficients are written with `/` by a nonzero constant.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::formula::{Constraint, Problem, Qff, Relop};
use crate::poly::{Polynomial, Var};

const MAX_EXPONENT: u32 = 1000;

#[derive(Debug, Clone)]
pub struct ProblemSource {
    pub text: String,
    pub origin: String,
}

impl ProblemSource {
    pub fn new(text: impl Into<String>, origin: impl Into<String>) -> Self {
        ProblemSource { text: text.into(), origin: origin.into() }
    }

    pub fn stdin(text: impl Into<String>) -> Self {
        Self::new(text, "<stdin>")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    UndeclaredVariable,
    EmptyQff,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::UndeclaredVariable => "undeclared variable",
            ParseErrorKind::EmptyQff => "empty QFF",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.column, self.kind, self.message)
    }
}

/// All errors found in one source, at most one per line.
#[derive(Debug, Clone, Error)]
pub struct ParseErrors {
    pub origin: String,
    pub errors: Vec<ParseError>,
}

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.errors.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}:{e}", self.origin)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Colon,
    Rel(Relop),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::Int(n) => format!("number {n}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Colon => "':'".into(),
            Tok::Rel(r) => format!("'{r}'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    col: usize,
}

struct LineError {
    col: usize,
    kind: ParseErrorKind,
    message: String,
}

impl LineError {
    fn syntax(col: usize, message: impl Into<String>) -> Self {
        LineError { col, kind: ParseErrorKind::Syntax, message: message.into() }
    }
}

fn lex(line: &str) -> Result<Vec<Spanned>, LineError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned { tok: Tok::Ident(chars[start..i].iter().collect()), col });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            let n: BigInt = digits.parse().expect("ascii digits");
            out.push(Spanned { tok: Tok::Int(n), col });
            continue;
        }
        let next = chars.get(i + 1).copied();
        let (tok, len) = match (c, next) {
            ('<', Some('=')) => (Tok::Rel(Relop::Le), 2),
            ('>', Some('=')) => (Tok::Rel(Relop::Ge), 2),
            ('!', Some('=')) => (Tok::Rel(Relop::Ne), 2),
            ('<', _) => (Tok::Rel(Relop::Lt), 1),
            ('>', _) => (Tok::Rel(Relop::Gt), 1),
            ('=', _) => (Tok::Rel(Relop::Eq), 1),
            ('+', _) => (Tok::Plus, 1),
            ('-', _) => (Tok::Minus, 1),
            ('*', _) => (Tok::Star, 1),
            ('/', _) => (Tok::Slash, 1),
            ('^', _) => (Tok::Caret, 1),
            ('(', _) => (Tok::LParen, 1),
            (')', _) => (Tok::RParen, 1),
            (',', _) => (Tok::Comma, 1),
            (':', _) => (Tok::Colon, 1),
            _ => {
                return Err(LineError {
                    col,
                    kind: ParseErrorKind::Lexical,
                    message: format!("unexpected character '{c}'"),
                })
            }
        };
        out.push(Spanned { tok, col });
        i += len;
    }
    Ok(out)
}

/// `num / den` with `den > 0`.
#[derive(Debug, Clone)]
struct Frac {
    num: Polynomial,
    den: BigInt,
}

impl Frac {
    fn reduce(num: Polynomial, den: BigInt) -> Frac {
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
        let g = num.integer_content().gcd(&den);
        if g.is_one() || g.is_zero() {
            return Frac { num, den };
        }
        Frac { num: num.div_integer(&g).expect("gcd divides"), den: den / g }
    }

    fn add(&self, o: &Frac) -> Frac {
        let num = &self.num.scale(&o.den) + &o.num.scale(&self.den);
        Frac::reduce(num, &self.den * &o.den)
    }

    fn neg(&self) -> Frac {
        Frac { num: -&self.num, den: self.den.clone() }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

struct ExprParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    end_col: usize,
    vars: &'a [String],
}

impl ExprParser<'_> {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map(|t| t.col).unwrap_or(self.end_col)
    }

    fn expr(&mut self) -> Result<Frac, LineError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Frac, LineError> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t.tok {
                Tok::Star => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    let col = t.col;
                    self.pos += 1;
                    let d = self.unary()?;
                    let Some(k) = d.num.constant_value() else {
                        return Err(LineError::syntax(col, "division by a non-constant"));
                    };
                    if k.is_zero() {
                        return Err(LineError::syntax(col, "division by zero"));
                    }
                    // (n/a) / (k/b) = (n*b) / (a*k)
                    acc = Frac::reduce(acc.num.scale(&d.den), &acc.den * &k);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Frac, LineError> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Frac, LineError> {
        let base = self.atom()?;
        if !matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: u32 = match u32::try_from(&n) {
                    Ok(e) if e <= MAX_EXPONENT => e,
                    _ => return Err(LineError::syntax(col, format!("exponent {n} too large"))),
                };
                Ok(Frac::reduce(base.num.pow(e), base.den.pow(e)))
            }
            Some(t) => Err(LineError::syntax(
                col,
                format!("expected a nonnegative integer exponent, found {}", t.describe()),
            )),
            None => Err(LineError::syntax(col, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Frac, LineError> {
        let col = self.col();
        let Some(t) = self.peek().cloned() else {
            return Err(LineError::syntax(col, "unexpected end of expression"));
        };
        self.pos += 1;
        match t.tok {
            Tok::Int(n) => Ok(Frac { num: Polynomial::constant(self.nvars(), n), den: BigInt::one() }),
            Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Frac { num: Polynomial::var(self.nvars(), Var(i)), den: BigInt::one() }),
                None => Err(LineError {
                    col,
                    kind: ParseErrorKind::UndeclaredVariable,
                    message: format!("'{name}' is not declared"),
                }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Spanned { tok: Tok::RParen, .. }) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(LineError::syntax(self.col(), "expected ')'")),
                }
            }
            other => Err(LineError::syntax(col, format!("unexpected {}", other.describe()))),
        }
    }
}

fn parse_polynomial_tokens(toks: &[Spanned], end_col: usize, vars: &[String]) -> Result<Frac, LineError> {
    let mut p = ExprParser { toks, pos: 0, end_col, vars };
    let v = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(LineError::syntax(t.col, format!("unexpected {}", t.tok.describe())));
    }
    Ok(v)
}

fn parse_constraint(toks: &[Spanned], end_col: usize, vars: &[String]) -> Result<Constraint, LineError> {
    let rels: Vec<usize> = toks
        .iter()
        .enumerate()
        .filter(|(_, t)| matches!(t.tok, Tok::Rel(_)))
        .map(|(i, _)| i)
        .collect();
    let start_col = toks.first().map(|t| t.col).unwrap_or(end_col);
    let split = match rels.as_slice() {
        [i] => *i,
        [] => return Err(LineError::syntax(start_col, "constraint has no relational operator")),
        [_, second, ..] => {
            return Err(LineError::syntax(toks[*second].col, "constraint has more than one relational operator"))
        }
    };
    let Tok::Rel(relop) = toks[split].tok else { unreachable!() };
    let rel_col = toks[split].col;
    if split == 0 {
        return Err(LineError::syntax(rel_col, "missing left-hand side"));
    }
    if split + 1 == toks.len() {
        return Err(LineError::syntax(end_col, "missing right-hand side"));
    }
    let lhs = parse_polynomial_tokens(&toks[..split], rel_col, vars)?;
    let rhs = parse_polynomial_tokens(&toks[split + 1..], end_col, vars)?;
    let diff = lhs.add(&rhs.neg());
    // diff.den > 0, so multiplying through keeps the relation.
    Constraint::new(diff.num, relop)
        .ok_or_else(|| LineError::syntax(start_col, "constraint polynomial is identically zero"))
}

enum LineKind {
    Vars(Vec<String>),
    Qff(Vec<Constraint>),
}

fn parse_line(toks: &[Spanned], end_col: usize, vars: Option<&[String]>) -> Result<LineKind, LineError> {
    let (keyword, kw_col) = match toks.first() {
        Some(Spanned { tok: Tok::Ident(s), col }) => (s.as_str(), *col),
        Some(t) => return Err(LineError::syntax(t.col, "expected 'vars:' or 'qff:'")),
        None => unreachable!("blank lines are skipped"),
    };
    if !matches!(toks.get(1), Some(Spanned { tok: Tok::Colon, .. })) {
        let col = toks.get(1).map(|t| t.col).unwrap_or(end_col);
        return Err(LineError::syntax(col, "expected ':' after keyword"));
    }
    let body = &toks[2..];
    match keyword {
        "vars" => {
            let mut names: Vec<String> = Vec::new();
            let mut expect_ident = true;
            for t in body {
                match (&t.tok, expect_ident) {
                    (Tok::Ident(name), true) => {
                        if names.contains(name) {
                            return Err(LineError::syntax(t.col, format!("duplicate variable '{name}'")));
                        }
                        names.push(name.clone());
                        expect_ident = false;
                    }
                    (Tok::Comma, false) => expect_ident = true,
                    (tok, true) => {
                        return Err(LineError::syntax(t.col, format!("expected variable name, found {}", tok.describe())))
                    }
                    (tok, false) => {
                        return Err(LineError::syntax(t.col, format!("expected ',', found {}", tok.describe())))
                    }
                }
            }
            if expect_ident {
                return Err(LineError::syntax(end_col, "expected variable name"));
            }
            Ok(LineKind::Vars(names))
        }
        "qff" => {
            let Some(vars) = vars else {
                return Err(LineError::syntax(kw_col, "'qff:' line before 'vars:' line"));
            };
            if body.is_empty() {
                return Err(LineError {
                    col: end_col,
                    kind: ParseErrorKind::EmptyQff,
                    message: "QFF has no constraints".into(),
                });
            }
            let mut constraints = Vec::new();
            let mut depth = 0i32;
            let mut start = 0;
            for (i, t) in body.iter().enumerate() {
                match t.tok {
                    Tok::LParen => depth += 1,
                    Tok::RParen => depth -= 1,
                    Tok::Comma if depth == 0 => {
                        if start == i {
                            return Err(LineError::syntax(t.col, "expected constraint before ','"));
                        }
                        constraints.push(parse_constraint(&body[start..i], t.col, vars)?);
                        start = i + 1;
                    }
                    _ => {}
                }
            }
            if start == body.len() {
                return Err(LineError::syntax(end_col, "expected constraint after ','"));
            }
            constraints.push(parse_constraint(&body[start..], end_col, vars)?);
            Ok(LineKind::Qff(constraints))
        }
        other => Err(LineError::syntax(kw_col, format!("unknown line keyword '{other}'"))),
    }
}

/// Parses a `.prob` source, reporting the first error of every bad line.
pub fn parse_problem(src: &ProblemSource) -> Result<Problem, ParseErrors> {
    let mut errors = Vec::new();
    let mut vars: Option<Vec<String>> = None;
    let mut vars_failed = false;
    let mut qffs = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in src.text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let end_col = content.chars().count() + 1;
        let toks = match lex(content) {
            Ok(t) => t,
            Err(e) => {
                errors.push(ParseError { line: line_no, column: e.col, kind: e.kind, message: e.message });
                continue;
            }
        };
        if toks.is_empty() {
            continue;
        }
        if vars_failed && matches!(toks.first(), Some(Spanned { tok: Tok::Ident(k), .. }) if k == "qff") {
            // Names are unknown after a broken vars line; skip rather than
            // cascade undeclared-variable errors.
            continue;
        }
        let is_vars = matches!(toks.first(), Some(Spanned { tok: Tok::Ident(k), .. }) if k == "vars");
        if is_vars && (vars.is_some() || vars_failed) {
            errors.push(ParseError {
                line: line_no,
                column: toks[0].col,
                kind: ParseErrorKind::Syntax,
                message: "duplicate 'vars:' line".into(),
            });
            continue;
        }
        match parse_line(&toks, end_col, vars.as_deref()) {
            Ok(LineKind::Vars(v)) => vars = Some(v),
            Ok(LineKind::Qff(cs)) => qffs.push(Qff::new(cs)),
            Err(e) => {
                if is_vars {
                    vars_failed = true;
                }
                errors.push(ParseError { line: line_no, column: e.col, kind: e.kind, message: e.message })
            }
        }
    }
    if vars.is_none() && !vars_failed {
        errors.push(ParseError {
            line: last_line.max(1),
            column: 1,
            kind: ParseErrorKind::Syntax,
            message: "missing 'vars:' line".into(),
        });
    }
    if errors.is_empty() && qffs.is_empty() {
        errors.push(ParseError {
            line: last_line.max(1),
            column: 1,
            kind: ParseErrorKind::Syntax,
            message: "no 'qff:' line".into(),
        });
    }
    if !errors.is_empty() {
        return Err(ParseErrors { origin: src.origin.clone(), errors });
    }
    let problem = Problem::new(vars.expect("checked"), qffs);
    debug_assert!(problem.validate().is_ok());
    Ok(problem)
}

/// Convenience wrapper for in-memory text.
pub fn parse_str(text: &str) -> Result<Problem, ParseErrors> {
    parse_problem(&ProblemSource::new(text, "<string>"))
}

/// Parses one polynomial expression over `vars`, keeping its sign.
/// Rational coefficients are cleared by the positive common denominator.
pub fn parse_polynomial<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial, ParseErrors> {
    let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
    let fail = |e: LineError| ParseErrors {
        origin: "<polynomial>".into(),
        errors: vec![ParseError { line: 1, column: e.col, kind: e.kind, message: e.message }],
    };
    let toks = lex(text).map_err(fail)?;
    let end_col = text.chars().count() + 1;
    if toks.is_empty() {
        return Err(fail(LineError::syntax(end_col, "empty expression")));
    }
    Ok(parse_polynomial_tokens(&toks, end_col, &names).map_err(fail)?.num)
}

/// Canonical text: one `qff:` line per QFF, constraints as `poly relop 0`.
pub fn print_problem(p: &Problem) -> String {
    let names = p.names();
    let mut out = String::new();
    let _ = writeln!(out, "vars: {}", names.join(", "));
    for q in &p.qffs {
        let parts: Vec<String> = q
            .constraints
            .iter()
            .map(|c| format!("{} {} 0", c.poly().display(&names), c.relop()))
            .collect();
        let _ = writeln!(out, "qff: {}", parts.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseErrors {
        parse_str(text).expect_err("should fail")
    }

    #[test]
    fn parses_basic_problem() {
        let p = parse_str("vars: x,y\nqff: x^2+y-1 = 0, x*y < 0\n").unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.qffs.len(), 1);
        assert_eq!(p.system_type(), "1");
    }

    #[test]
    fn double_caret_is_syntax_error_at_second_caret() {
        let e = err("vars: x\nqff: x^^2 = 0");
        assert_eq!(e.errors.len(), 1);
        let e = &e.errors[0];
        assert_eq!((e.line, e.column, e.kind), (2, 8, ParseErrorKind::Syntax));
    }

    #[test]
    fn undeclared_variable_reported() {
        let e = err("vars: x\nqff: x + y = 0");
        assert_eq!(e.errors[0].kind, ParseErrorKind::UndeclaredVariable);
        assert_eq!((e.errors[0].line, e.errors[0].column), (2, 10));
        assert!(e.to_string().contains("'y'"));
    }

    #[test]
    fn empty_qff_reported() {
        let e = err("vars: x\nqff:\nqff: x = 0");
        assert_eq!(e.errors[0].kind, ParseErrorKind::EmptyQff);
        assert_eq!(e.errors[0].line, 2);
    }

    #[test]
    fn lexical_error() {
        let e = err("vars: x\nqff: x $ 1 = 0");
        assert_eq!(e.errors[0].kind, ParseErrorKind::Lexical);
        assert_eq!(e.errors[0].column, 8);
    }

    #[test]
    fn one_error_per_line_and_continues() {
        let e = err("vars: x, y\nqff: x^^2 = 0 ^\nqff: y < \nqff: x = 0\nqff: z = 1");
        let lines: Vec<usize> = e.errors.iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![2, 3, 5]);
    }

    #[test]
    fn two_sided_constraints_and_rationals() {
        let p = parse_str("vars: x, y\nqff: x^2 < y, x/2 + 1/3 >= y/6").unwrap();
        let names = p.names();
        let c0 = &p.qffs[0].constraints[0];
        assert_eq!(c0.poly().display(&names).to_string(), "x^2-y");
        assert_eq!(c0.relop(), Relop::Lt);
        // x/2 + 1/3 - y/6 -> (3x - y + 2)/6
        let c1 = &p.qffs[0].constraints[1];
        assert_eq!(c1.poly().display(&names).to_string(), "3*x-y+2");
        assert_eq!(c1.relop(), Relop::Ge);
    }

    #[test]
    fn negative_leading_sign_flips_relation() {
        let p = parse_str("vars: x\nqff: 1 - x < 0").unwrap();
        let c = &p.qffs[0].constraints[0];
        assert_eq!(c.poly().display(&p.names()).to_string(), "x-1");
        assert_eq!(c.relop(), Relop::Gt);
    }

    #[test]
    fn precedence_and_parentheses() {
        let p = parse_str("vars: x, y\nqff: -x^2 + (x+y)^2 = 2*x*y").unwrap();
        assert_eq!(p.qffs[0].constraints[0].poly().display(&p.names()).to_string(), "y^2");
        let e = err("vars: x\nqff: (x + 1 = 0");
        assert_eq!(e.errors[0].kind, ParseErrorKind::Syntax);
        let e = err("vars: x\nqff: x / x = 1");
        assert!(e.errors[0].message.contains("non-constant"));
        let e = err("vars: x\nqff: x = x");
        assert!(e.errors[0].message.contains("identically zero"));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_str("# header\n\nvars: x, y # names\nqff: x = y # eq\n\n").unwrap();
        assert_eq!(p.qffs.len(), 1);
    }

    #[test]
    fn structural_errors() {
        assert!(err("qff: x = 0\nvars: x").errors.iter().any(|e| e.message.contains("before")));
        assert!(err("vars: x").errors[0].message.contains("no 'qff:'"));
        assert!(err("vars: x, x\nqff: x = 0").errors[0].message.contains("duplicate"));
        assert!(err("vars: x\nvars: x\nqff: x = 0").errors[0].message.contains("duplicate 'vars:'"));
        assert!(err("vars: x\nqff: x < 1 < 2").errors[0].message.contains("more than one"));
        assert!(err("vars: x\nqff: x + 1").errors[0].message.contains("no relational"));
    }

    #[test]
    fn print_format() {
        let p = parse_str("vars: x,y\nqff: x^2+y-1 = 0, x*y < 0\n").unwrap();
        assert_eq!(print_problem(&p), "vars: x, y\nqff: x^2+y-1 = 0, x*y < 0\n");
    }

    #[test]
    fn print_parse_round_trip() {
        let text = "vars: a, b, c\nqff: 3*a^2*b - c = 7, a != b\nqff: -c^3 <= a*b*c, (a-b)^3 > 1\n";
        let p = parse_str(text).unwrap();
        let printed = print_problem(&p);
        let q = parse_str(&printed).unwrap();
        assert_eq!(p, q);
        assert_eq!(print_problem(&q), printed);
    }

    #[test]
    fn single_polynomial_keeps_sign() {
        let f = parse_polynomial("-x^2/2 + y", &["x", "y"]).unwrap();
        assert_eq!(f.display(&["x", "y"]).to_string(), "-x^2+2*y");
        assert!(parse_polynomial("x + z", &["x"]).is_err());
        assert!(parse_polynomial("", &["x"]).is_err());
    }
}
