//! Text formats for rings, modules and ideal expressions.
//!
//! A ring file fixes a prime `p`, variables, relations and a truncation
//! degree `D`; the algebra it denotes is always
//! `GF(p)[vars] / ((rels) + m^D)`. Truncating keeps every ideal computation
//! inside finite-dimensional linear algebra, but it also means the caller
//! must pick `D` large enough when the exact quotient by `(rels)` is wanted
//! (for `(x^2, y^2)` any `D >= 3` works, since `m^3 ⊆ (x^2, y^2)`).
//!
//! ```text
//! # the QF ring k[x,y]/(x^2,y^2)
//! p = 2
//! vars = x, y
//! rels = x^2, y^2
//! trunc = 3
//! ```
//!
//! Fields are `key = value` pairs separated by any whitespace, so the same
//! ring can be written on one line: `p=2 vars=x,y rels=x^2,y^2 trunc=3`.
//! Module files use the keys `rank` and `rels`, where each relation is a
//! bracketed vector: `rank=2 rels=[x, y],[0, x]`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactla::{self, LinAlgError, MAX_PRIME};
use crate::ring::FiniteLocalAlgebra;

/// Names that ideal expressions reserve for themselves.
pub const RESERVED_NAMES: [&str; 4] = ["m", "R", "So", "Ann"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("relation {index} has nonzero constant term (line {line}, column {column}); the quotient would not be local")]
    ConstantTerm {
        index: usize,
        line: usize,
        column: usize,
    },
    #[error("modulus {0} is not prime")]
    NonPrime(u32),
    #[error("modulus {0} is prime but larger than the supported maximum {MAX_PRIME}")]
    UnsupportedPrime(u32),
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("relation vector {index} has length {found}, expected rank {expected}")]
    RankMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("missing field `{0}`")]
    MissingField(&'static str),
}

pub type Monomial = Vec<u32>;

pub fn degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Degree-lexicographic comparison; among equal degrees the earlier variable dominates.
pub fn cmp_deglex(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    (degree(a), a).cmp(&(degree(b), b))
}

/// A polynomial over GF(p) in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u8,
    nvars: usize,
    terms: BTreeMap<Monomial, u8>,
}

impl Poly {
    pub fn zero(p: u8, nvars: usize) -> Self {
        Self {
            p,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(p: u8, exps: Monomial, coeff: u8) -> Self {
        let mut poly = Self::zero(p, exps.len());
        poly.add_term(exps, coeff);
        poly
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Monomial, coeff: u8) {
        debug_assert_eq!(exps.len(), self.nvars);
        let c = coeff % self.p;
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = exactla::add(*entry, c, self.p);
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    /// Terms in descending degree-lexicographic order.
    pub fn terms(&self) -> Vec<(&Monomial, u8)> {
        let mut t: Vec<_> = self.terms.iter().map(|(m, &c)| (m, c)).collect();
        t.sort_by(|a, b| cmp_deglex(b.0, a.0));
        t
    }

    pub fn constant_term(&self) -> u8 {
        self.terms.get(&vec![0; self.nvars]).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.p, self.nvars);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let m = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(m, exactla::mul(ca, cb, self.p));
            }
        }
        out
    }

    pub fn display<'a>(&'a self, vars: &'a [String], style: PolyStyle) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            vars,
            style,
        }
    }
}

/// How monomials are rendered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyStyle {
    /// `2*x^2*y`, the input grammar.
    Canonical,
    /// `2x^2y` when every variable name is one character, else canonical.
    Compact,
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    vars: &'a [String],
    style: PolyStyle,
}

pub fn format_monomial(exps: &[u32], vars: &[String], style: PolyStyle) -> String {
    let compact = style == PolyStyle::Compact && vars.iter().all(|v| v.chars().count() == 1);
    let sep = if compact { "" } else { "*" };
    let factors: Vec<String> = exps
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(sep)
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let sep = match self.style {
            PolyStyle::Canonical => "*",
            PolyStyle::Compact => "",
        };
        for (i, (m, c)) in terms.into_iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            let mono = format_monomial(m, self.vars, self.style);
            match (c, degree(m)) {
                (_, 0) => write!(f, "{c}")?,
                (1, _) => write!(f, "{mono}")?,
                _ => write!(f, "{c}{sep}{mono}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub p: u8,
    pub vars: Vec<String>,
    pub rels: Vec<Poly>,
    pub trunc: u32,
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .rels
            .iter()
            .map(|r| r.display(&self.vars, PolyStyle::Canonical).to_string())
            .collect();
        write!(
            f,
            "p={} vars={} rels={} trunc={}",
            self.p,
            self.vars.join(","),
            rels.join(","),
            self.trunc
        )
    }
}

/// A module `R^free_rank / <relations>`; each relation is a vector of
/// `free_rank` ring elements in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    pub free_rank: usize,
    pub relations: Vec<Vec<Poly>>,
}

impl ModulePresentation {
    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        ModuleDisplay { pres: self, vars }
    }
}

struct ModuleDisplay<'a> {
    pres: &'a ModulePresentation,
    vars: &'a [String],
}

impl fmt::Display for ModuleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank={} rels=", self.pres.free_rank)?;
        if self.pres.relations.is_empty() {
            return write!(f, "[]");
        }
        for (i, rel) in self.pres.relations.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let entries: Vec<String> = rel
                .iter()
                .map(|e| e.display(self.vars, PolyStyle::Canonical).to_string())
                .collect();
            write!(f, "[{}]", entries.join(", "))?;
        }
        Ok(())
    }
}

/// Argument of `Ann(...)`: either an ideal expression or a module file path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnnArg {
    Ideal(Box<IdealExpr>),
    ModuleFile(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Gens(Vec<Poly>),
    Maximal,
    Unit,
    Zero,
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Colon(Box<IdealExpr>, Box<IdealExpr>),
    Power(Box<IdealExpr>, u32),
    Socle(Box<IdealExpr>),
    Ann(AnnArg),
}

impl IdealExpr {
    pub fn display<'a>(&'a self, vars: &'a [String]) -> impl fmt::Display + 'a {
        ExprDisplay { expr: self, vars }
    }

    fn precedence(&self) -> u8 {
        match self {
            IdealExpr::Colon(..) => 0,
            IdealExpr::Product(..) => 1,
            IdealExpr::Power(..) => 2,
            _ => 3,
        }
    }
}

struct ExprDisplay<'a> {
    expr: &'a IdealExpr,
    vars: &'a [String],
}

impl ExprDisplay<'_> {
    fn child(&self, e: &IdealExpr, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner = ExprDisplay { expr: e, vars: self.vars };
        if e.precedence() < min_prec {
            write!(f, "({inner})")
        } else {
            write!(f, "{inner}")
        }
    }
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.expr {
            IdealExpr::Gens(gens) => {
                let g: Vec<String> = gens
                    .iter()
                    .map(|p| p.display(self.vars, PolyStyle::Canonical).to_string())
                    .collect();
                write!(f, "({})", g.join(","))
            }
            IdealExpr::Maximal => write!(f, "m"),
            IdealExpr::Unit => write!(f, "R"),
            IdealExpr::Zero => write!(f, "0"),
            IdealExpr::Product(a, b) => {
                self.child(a, 1, f)?;
                write!(f, "*")?;
                self.child(b, 2, f)
            }
            IdealExpr::Colon(a, b) => {
                self.child(a, 0, f)?;
                write!(f, " : ")?;
                self.child(b, 1, f)
            }
            IdealExpr::Power(a, n) => {
                self.child(a, 3, f)?;
                write!(f, "^{n}")
            }
            IdealExpr::Socle(a) => write!(f, "So({})", ExprDisplay { expr: a, vars: self.vars }),
            IdealExpr::Ann(AnnArg::Ideal(a)) => {
                write!(f, "Ann({})", ExprDisplay { expr: a, vars: self.vars })
            }
            IdealExpr::Ann(AnnArg::ModuleFile(path)) => write!(f, "Ann({path})"),
        }
    }
}

// ---------------------------------------------------------------------------
// scanning

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.chars().count(), |i| before[i + 1..].chars().count()) + 1;
    (line, column)
}

fn syntax(text: &str, offset: usize, message: impl Into<String>) -> PresentationError {
    let (line, column) = line_col(text, offset);
    PresentationError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find('#') {
            Some(i) => format!("{}{}", &l[..i], " ".repeat(l.len() - i)),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

/// A `key = value` field; offsets index into the comment-stripped text.
struct Field {
    key: String,
    key_offset: usize,
    value_start: usize,
    value_end: usize,
}

fn split_fields(text: &str) -> Result<Vec<Field>, PresentationError> {
    let bytes = text.as_bytes();
    let mut keys: Vec<(String, usize, usize)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if is_ident_start(bytes[i]) && (i == 0 || !is_ident_char(bytes[i - 1])) {
            let start = i;
            let mut j = i;
            while j < bytes.len() && is_ident_char(bytes[j]) {
                j += 1;
            }
            let mut k = j;
            while k < bytes.len() && bytes[k].is_ascii_whitespace() {
                k += 1;
            }
            if k < bytes.len() && bytes[k] == b'=' {
                keys.push((text[start..j].to_string(), start, k + 1));
                i = k + 1;
                continue;
            }
            i = j;
        } else {
            i += 1;
        }
    }
    let first = keys.first().map_or(bytes.len(), |k| k.1);
    if let Some(off) = text[..first].find(|c: char| !c.is_whitespace()) {
        return Err(syntax(text, off, "expected `key = value`"));
    }
    if keys.is_empty() {
        return Err(syntax(text, 0, "empty input"));
    }
    let mut fields = Vec::new();
    for (idx, (key, key_offset, value_start)) in keys.iter().enumerate() {
        let value_end = keys.get(idx + 1).map_or(bytes.len(), |k| k.1);
        fields.push(Field {
            key: key.clone(),
            key_offset: *key_offset,
            value_start: *value_start,
            value_end,
        });
    }
    Ok(fields)
}

fn take_fields<'f>(
    text: &str,
    fields: &'f [Field],
    allowed: &[&'static str],
) -> Result<BTreeMap<&'static str, &'f Field>, PresentationError> {
    let mut out = BTreeMap::new();
    for f in fields {
        let Some(&key) = allowed.iter().find(|k| **k == f.key) else {
            return Err(syntax(text, f.key_offset, format!("unknown field `{}`", f.key)));
        };
        if out.insert(key, f).is_some() {
            return Err(syntax(text, f.key_offset, format!("duplicate field `{key}`")));
        }
    }
    Ok(out)
}

/// Byte cursor over a slice of the full text, reporting positions in the full text.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, start: usize, end: usize) -> Self {
        Self { text, pos: start, end }
    }

    fn skip_ws(&mut self) {
        let b = self.text.as_bytes();
        while self.pos < self.end && b[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        (self.pos < self.end).then(|| self.text.as_bytes()[self.pos])
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), PresentationError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn error(&self, message: impl Into<String>) -> PresentationError {
        syntax(self.text, self.pos, message)
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let b = self.text.as_bytes();
        if self.pos < self.end && is_ident_start(b[self.pos]) {
            let start = self.pos;
            while self.pos < self.end && is_ident_char(b[self.pos]) {
                self.pos += 1;
            }
            Some((self.text[start..self.pos].to_string(), start))
        } else {
            None
        }
    }

    fn integer(&mut self) -> Result<u64, PresentationError> {
        self.skip_ws();
        let b = self.text.as_bytes();
        let start = self.pos;
        while self.pos < self.end && b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| syntax(self.text, start, "integer out of range"))
    }
}

/// Splits `[start, end)` at top-level commas (not inside brackets or parentheses).
fn split_commas(text: &str, start: usize, end: usize) -> Vec<(usize, usize)> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut seg = start;
    for i in start..end {
        match b[i] {
            b'(' | b'[' => depth += 1,
            b')' | b']' => depth -= 1,
            b',' if depth == 0 => {
                out.push((seg, i));
                seg = i + 1;
            }
            _ => {}
        }
    }
    out.push((seg, end));
    out
}

fn is_blank(text: &str, start: usize, end: usize) -> bool {
    text[start..end].trim().is_empty()
}

fn parse_poly_at(
    text: &str,
    start: usize,
    end: usize,
    p: u8,
    vars: &[String],
) -> Result<Poly, PresentationError> {
    let mut cur = Cursor::new(text, start, end);
    let poly = parse_poly_cursor(&mut cur, p, vars)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input in polynomial"));
    }
    Ok(poly)
}

fn parse_poly_cursor(cur: &mut Cursor<'_>, p: u8, vars: &[String]) -> Result<Poly, PresentationError> {
    let mut poly = Poly::zero(p, vars.len());
    let mut negate = cur.eat(b'-');
    loop {
        let (mono, coeff) = parse_term(cur, p, vars)?;
        let coeff = if negate { exactla::neg(coeff, p) } else { coeff };
        poly.add_term(mono, coeff);
        if cur.eat(b'+') {
            negate = false;
        } else if cur.eat(b'-') {
            negate = true;
        } else {
            break;
        }
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor<'_>, p: u8, vars: &[String]) -> Result<(Monomial, u8), PresentationError> {
    let mut mono = vec![0u32; vars.len()];
    let mut coeff = 1u8;
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = cur.integer()?;
                coeff = exactla::mul(coeff, (n % p as u64) as u8, p);
            }
            Some(c) if is_ident_start(c) => {
                let (name, at) = cur.ident().expect("identifier");
                let Some(idx) = vars.iter().position(|v| *v == name) else {
                    let (line, column) = line_col(cur.text, at);
                    return Err(PresentationError::UnknownVariable { name, line, column });
                };
                let e = if cur.eat(b'^') { cur.integer()? } else { 1 };
                mono[idx] += u32::try_from(e).map_err(|_| cur.error("exponent too large"))?;
            }
            _ => return Err(cur.error("expected a coefficient or a variable")),
        }
        if !cur.eat(b'*') {
            break;
        }
    }
    Ok((mono, coeff))
}

/// Parses a polynomial over the given variables; `'+'`/`'-'` separate terms.
pub fn parse_poly(text: &str, p: u8, vars: &[String]) -> Result<Poly, PresentationError> {
    parse_poly_at(text, 0, text.len(), p, vars)
}

fn field_integer(text: &str, f: &Field) -> Result<u64, PresentationError> {
    let mut cur = Cursor::new(text, f.value_start, f.value_end);
    let n = cur.integer()?;
    if !cur.at_end() {
        return Err(cur.error("unexpected input after integer"));
    }
    Ok(n)
}

pub fn parse_ring(text: &str) -> Result<RingPresentation, PresentationError> {
    let text = strip_comments(text);
    let text = text.as_str();
    let fields = split_fields(text)?;
    let map = take_fields(text, &fields, &["p", "vars", "rels", "trunc"])?;

    let pf = map.get("p").ok_or(PresentationError::MissingField("p"))?;
    let p_raw = field_integer(text, pf)?;
    let p_raw = u32::try_from(p_raw).map_err(|_| PresentationError::NonPrime(u32::MAX))?;
    if !exactla::is_prime(p_raw) {
        return Err(PresentationError::NonPrime(p_raw));
    }
    let p = exactla::check_modulus(p_raw).map_err(|e| match e {
        LinAlgError::UnsupportedModulus(q) => PresentationError::UnsupportedPrime(q),
        _ => PresentationError::NonPrime(p_raw),
    })?;

    let vf = map.get("vars").ok_or(PresentationError::MissingField("vars"))?;
    let mut vars: Vec<String> = Vec::new();
    for (s, e) in split_commas(text, vf.value_start, vf.value_end) {
        let mut cur = Cursor::new(text, s, e);
        let Some((name, at)) = cur.ident() else {
            return Err(cur.error("expected a variable name"));
        };
        if !cur.at_end() {
            return Err(cur.error("unexpected input in variable list"));
        }
        if RESERVED_NAMES.contains(&name.as_str()) {
            return Err(syntax(text, at, format!("`{name}` is reserved")));
        }
        if vars.contains(&name) {
            return Err(syntax(text, at, format!("duplicate variable `{name}`")));
        }
        vars.push(name);
    }

    let tf = map.get("trunc").ok_or(PresentationError::MissingField("trunc"))?;
    let trunc = field_integer(text, tf)?;
    if trunc == 0 || trunc > 64 {
        return Err(syntax(text, tf.value_start, "trunc must be between 1 and 64"));
    }

    let mut rels = Vec::new();
    if let Some(rf) = map.get("rels") {
        if !is_blank(text, rf.value_start, rf.value_end) {
            for (index, (s, e)) in split_commas(text, rf.value_start, rf.value_end).into_iter().enumerate() {
                let poly = parse_poly_at(text, s, e, p, &vars)?;
                if poly.constant_term() != 0 {
                    let off = s + text[s..e].len() - text[s..e].trim_start().len();
                    let (line, column) = line_col(text, off);
                    return Err(PresentationError::ConstantTerm { index, line, column });
                }
                rels.push(poly);
            }
        }
    }

    Ok(RingPresentation {
        p,
        vars,
        rels,
        trunc: trunc as u32,
    })
}

/// Parses a module presentation and normal-forms its relation entries in `ring`.
pub fn parse_module(text: &str, ring: &FiniteLocalAlgebra) -> Result<ModulePresentation, PresentationError> {
    let text = strip_comments(text);
    let text = text.as_str();
    let fields = split_fields(text)?;
    let map = take_fields(text, &fields, &["rank", "rels"])?;
    let pres = ring.presentation();

    let rf = map.get("rank").ok_or(PresentationError::MissingField("rank"))?;
    let rank = field_integer(text, rf)? as usize;
    if rank == 0 {
        return Err(syntax(text, rf.value_start, "rank must be at least 1"));
    }

    let mut relations = Vec::new();
    if let Some(f) = map.get("rels") {
        let mut cur = Cursor::new(text, f.value_start, f.value_end);
        let empty_list = cur.eat(b'[') && cur.eat(b']') && cur.at_end();
        if !is_blank(text, f.value_start, f.value_end) && !empty_list {
            for (index, (s, e)) in split_commas(text, f.value_start, f.value_end).into_iter().enumerate() {
                let mut cur = Cursor::new(text, s, e);
                cur.expect(b'[')?;
                let open = cur.pos;
                let close = text[open..e]
                    .rfind(']')
                    .map(|i| open + i)
                    .ok_or_else(|| cur.error("missing `]`"))?;
                let mut tail = Cursor::new(text, close + 1, e);
                if !tail.at_end() {
                    return Err(tail.error("unexpected input after relation vector"));
                }
                let mut entries = Vec::new();
                if !is_blank(text, open, close) {
                    for (a, b) in split_commas(text, open, close) {
                        let poly = parse_poly_at(text, a, b, pres.p, &pres.vars)?;
                        entries.push(ring.normal_form(&poly));
                    }
                }
                if entries.len() != rank {
                    return Err(PresentationError::RankMismatch {
                        index,
                        expected: rank,
                        found: entries.len(),
                    });
                }
                relations.push(entries);
            }
        }
    }
    Ok(ModulePresentation {
        free_rank: rank,
        relations,
    })
}

/// Parses an ideal expression over the ring's variables.
///
/// Grammar: `expr := term (':' term)*`, `term := factor ('*' factor)*`,
/// `factor := atom ('^' n)*`, `atom := m | R | 0 | (f, g, ...) | (expr) |
/// So(expr) | Ann(expr) | Ann(module-file)`. Parenthesised text is read as a
/// generator list whenever it parses as polynomials.
pub fn parse_ideal(text: &str, ring: &RingPresentation) -> Result<IdealExpr, PresentationError> {
    let mut parser = ExprParser {
        text,
        p: ring.p,
        vars: &ring.vars,
    };
    let mut cur = Cursor::new(text, 0, text.len());
    let e = parser.expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(e)
}

struct ExprParser<'a> {
    text: &'a str,
    p: u8,
    vars: &'a [String],
}

impl ExprParser<'_> {
    fn expr(&mut self, cur: &mut Cursor<'_>) -> Result<IdealExpr, PresentationError> {
        let mut lhs = self.term(cur)?;
        while cur.eat(b':') {
            let rhs = self.term(cur)?;
            lhs = IdealExpr::Colon(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self, cur: &mut Cursor<'_>) -> Result<IdealExpr, PresentationError> {
        let mut lhs = self.factor(cur)?;
        while cur.eat(b'*') {
            let rhs = self.factor(cur)?;
            lhs = IdealExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self, cur: &mut Cursor<'_>) -> Result<IdealExpr, PresentationError> {
        let mut base = self.atom(cur)?;
        while cur.eat(b'^') {
            let n = cur.integer()?;
            let n = u32::try_from(n).map_err(|_| cur.error("exponent too large"))?;
            base = IdealExpr::Power(Box::new(base), n);
        }
        Ok(base)
    }

    /// Position of the `)` matching the `(` just consumed.
    fn matching_paren(&self, cur: &Cursor<'_>) -> Result<usize, PresentationError> {
        let b = self.text.as_bytes();
        let mut depth = 1;
        for i in cur.pos..cur.end {
            match b[i] {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(i);
                    }
                }
                _ => {}
            }
        }
        Err(cur.error("unbalanced parenthesis"))
    }

    fn atom(&mut self, cur: &mut Cursor<'_>) -> Result<IdealExpr, PresentationError> {
        match cur.peek() {
            Some(b'(') => {
                cur.pos += 1;
                let close = self.matching_paren(cur)?;
                let inner = (cur.pos, close);
                cur.pos = close + 1;
                let gens: Result<Vec<Poly>, _> = split_commas(self.text, inner.0, inner.1)
                    .into_iter()
                    .map(|(s, e)| parse_poly_at(self.text, s, e, self.p, self.vars))
                    .collect();
                if let Ok(gens) = gens {
                    return Ok(IdealExpr::Gens(gens));
                }
                let mut sub = Cursor::new(self.text, inner.0, inner.1);
                let e = self.expr(&mut sub)?;
                if !sub.at_end() {
                    return Err(sub.error("unexpected input inside parentheses"));
                }
                Ok(e)
            }
            Some(b'0') => {
                let at = cur.pos;
                let n = cur.integer()?;
                if n != 0 {
                    return Err(syntax(self.text, at, "only the constant 0 is an ideal symbol"));
                }
                Ok(IdealExpr::Zero)
            }
            Some(c) if is_ident_start(c) => {
                let (name, at) = cur.ident().expect("identifier");
                match name.as_str() {
                    "m" => Ok(IdealExpr::Maximal),
                    "R" => Ok(IdealExpr::Unit),
                    "So" => {
                        cur.expect(b'(')?;
                        let close = self.matching_paren(cur)?;
                        let mut sub = Cursor::new(self.text, cur.pos, close);
                        let e = self.expr(&mut sub)?;
                        if !sub.at_end() {
                            return Err(sub.error("unexpected input in So(...)"));
                        }
                        cur.pos = close + 1;
                        Ok(IdealExpr::Socle(Box::new(e)))
                    }
                    "Ann" => {
                        cur.expect(b'(')?;
                        let close = self.matching_paren(cur)?;
                        let mut sub = Cursor::new(self.text, cur.pos, close);
                        let parsed = self.expr(&mut sub).ok().filter(|_| sub.at_end());
                        let raw = self.text[cur.pos..close].trim().to_string();
                        cur.pos = close + 1;
                        match parsed {
                            Some(e) => Ok(IdealExpr::Ann(AnnArg::Ideal(Box::new(e)))),
                            None if !raw.is_empty() => Ok(IdealExpr::Ann(AnnArg::ModuleFile(raw))),
                            None => Err(syntax(self.text, at, "empty Ann(...)")),
                        }
                    }
                    _ => Err(syntax(
                        self.text,
                        at,
                        format!("unexpected `{name}`; generators must be parenthesised"),
                    )),
                }
            }
            _ => Err(cur.error("expected an ideal expression")),
        }
    }
}
