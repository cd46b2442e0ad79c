//! The `.efd` presentation document language: lexer, recursive-descent
//! parser, pretty-printer, and compilation of declarations into live
//! presentations.
//!
//! Grammar summary:
//!
//! ```text
//! field NAME { gens a, b; base { r, s } | base NAME; exp a = E;
//!              rel <expr> = 0; egg; }
//! tuple NAME = ( <expr>, ... );
//! khovanskii NAME { f1 = <expr>; ...; witness = (<expr>, ...);
//!                   coeffs = { a, b }; }
//! ```
//!
//! Expressions use `+ - * ^`, rational literals `p/q`, parentheses, and
//! `exp(...)` (the latter only inside khovanskii systems, whose
//! indeterminates are the reserved names X1…Xn).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exp_poly::{BaseAtom, ExpPoly};
use crate::field::FieldElement;
use crate::ideal::{GroebnerConfig, Ideal};
use crate::khovanskii::KhovanskiiCertificate;
use crate::poly::Poly;
use crate::presentation::EFieldPresentation;
use crate::rational::{rat, rat_display, Rat};

// ---------------------------------------------------------------- lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(Rat),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Eq,
    Comma,
    Semi,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

#[derive(Debug, Clone)]
struct SpannedTok {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<SpannedTok>> {
    let mut toks = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let mut chars = line.char_indices().peekable();
        while let Some(&(ci, c)) = chars.peek() {
            let (line_no, col_no) = (li + 1, ci + 1);
            match c {
                '#' => break, // comment to end of line
                c if c.is_whitespace() => {
                    chars.next();
                }
                '{' | '}' | '(' | ')' | '=' | ',' | ';' | '+' | '-' | '*' | '^' | '/' => {
                    chars.next();
                    let tok = match c {
                        '{' => Tok::LBrace,
                        '}' => Tok::RBrace,
                        '(' => Tok::LParen,
                        ')' => Tok::RParen,
                        '=' => Tok::Eq,
                        ',' => Tok::Comma,
                        ';' => Tok::Semi,
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '^' => Tok::Caret,
                        _ => Tok::Slash,
                    };
                    toks.push(SpannedTok { tok, line: line_no, col: col_no });
                }
                c if c.is_ascii_digit() => {
                    let mut s = String::new();
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            s.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let n: i64 = s.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        col: col_no,
                        msg: format!("integer literal {} out of range", s),
                    })?;
                    toks.push(SpannedTok {
                        tok: Tok::Num(rat(n)),
                        line: line_no,
                        col: col_no,
                    });
                }
                c if c.is_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_alphanumeric() || d == '_' {
                            s.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    toks.push(SpannedTok {
                        tok: Tok::Ident(s),
                        line: line_no,
                        col: col_no,
                    });
                }
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        col: col_no,
                        msg: format!("unexpected character {:?}", other),
                    });
                }
            }
        }
    }
    Ok(toks)
}

// ----------------------------------------------------------------- AST

/// An expression over identifiers and rational literals.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(Rat),
    Ident(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Exp(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum BaseRef {
    None,
    Named(String),
    Inline(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FieldDecl {
    pub name: String,
    pub gens: Vec<String>,
    pub base: BaseRef,
    pub exps: Vec<(String, String)>,
    pub rels: Vec<Expr>,
    pub egg: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TupleDecl {
    pub name: String,
    pub entries: Vec<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertDecl {
    pub name: String,
    pub system: Vec<Expr>,
    pub witness: Vec<Expr>,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub fields: Vec<FieldDecl>,
    pub tuples: Vec<TupleDecl>,
    pub certs: Vec<CertDecl>,
}

// --------------------------------------------------------------- parser

struct Parser {
    toks: Vec<SpannedTok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self
            .toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|t| (t.line, t.col))
            .unwrap_or((0, 0));
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Result<Tok> {
        let t = self
            .toks
            .get(self.pos)
            .map(|t| t.tok.clone())
            .ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        let got = self.next()?;
        if got != t {
            self.pos -= 1;
            return Err(self.err(format!("expected {:?}, found {:?}", t, got)));
        }
        Ok(())
    }

    fn ident(&mut self) -> Result<String> {
        match self.next()? {
            Tok::Ident(s) => Ok(s),
            other => {
                self.pos -= 1;
                Err(self.err(format!("expected identifier, found {:?}", other)))
            }
        }
    }

    // expression grammar: sum > product > unary > power > atom
    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next()? {
                Tok::Num(n) => {
                    let e = n
                        .to_integer()
                        .try_into()
                        .ok()
                        .filter(|_| n.is_integer())
                        .ok_or_else(|| self.err("exponent must be a small natural number"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => {
                    self.pos -= 1;
                    Err(self.err("expected integer exponent after ^"))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next()? {
            Tok::Num(n) => {
                // rational literal p/q
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.next()? {
                        Tok::Num(d) if !num_traits::Zero::is_zero(&d) => {
                            Ok(Expr::Num(n / d))
                        }
                        _ => {
                            self.pos -= 1;
                            Err(self.err("expected nonzero integer denominator"))
                        }
                    }
                } else {
                    Ok(Expr::Num(n))
                }
            }
            Tok::Ident(s) if s == "exp" => {
                self.expect(Tok::LParen)?;
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Exp(Box::new(inner)))
            }
            Tok::Ident(s) => Ok(Expr::Ident(s)),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            other => {
                self.pos -= 1;
                Err(self.err(format!("expected expression, found {:?}", other)))
            }
        }
    }

    fn ident_list(&mut self) -> Result<Vec<String>> {
        let mut ids = vec![self.ident()?];
        while let Some(Tok::Comma) = self.peek() {
            self.pos += 1;
            ids.push(self.ident()?);
        }
        Ok(ids)
    }

    fn field_decl(&mut self) -> Result<FieldDecl> {
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut decl = FieldDecl {
            name,
            gens: Vec::new(),
            base: BaseRef::None,
            exps: Vec::new(),
            rels: Vec::new(),
            egg: false,
        };
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Ident(kw)) => match kw.as_str() {
                    "gens" => {
                        self.pos += 1;
                        decl.gens = self.ident_list()?;
                        self.expect(Tok::Semi)?;
                    }
                    "base" => {
                        self.pos += 1;
                        if let Some(Tok::LBrace) = self.peek() {
                            self.pos += 1;
                            let ids = if let Some(Tok::RBrace) = self.peek() {
                                Vec::new()
                            } else {
                                self.ident_list()?
                            };
                            self.expect(Tok::RBrace)?;
                            decl.base = BaseRef::Inline(ids);
                        } else {
                            decl.base = BaseRef::Named(self.ident()?);
                        }
                        self.expect(Tok::Semi)?;
                    }
                    "exp" => {
                        self.pos += 1;
                        let a = self.ident()?;
                        self.expect(Tok::Eq)?;
                        let e = self.ident()?;
                        self.expect(Tok::Semi)?;
                        decl.exps.push((a, e));
                    }
                    "rel" => {
                        self.pos += 1;
                        let e = self.expr()?;
                        self.expect(Tok::Eq)?;
                        match self.next()? {
                            Tok::Num(z) if num_traits::Zero::is_zero(&z) => {}
                            _ => {
                                self.pos -= 1;
                                return Err(self.err("relation must end in = 0"));
                            }
                        }
                        self.expect(Tok::Semi)?;
                        decl.rels.push(e);
                    }
                    "egg" => {
                        self.pos += 1;
                        self.expect(Tok::Semi)?;
                        decl.egg = true;
                    }
                    other => {
                        return Err(self.err(format!("unknown field clause {}", other)));
                    }
                },
                _ => return Err(self.err("expected field clause or }")),
            }
        }
        Ok(decl)
    }

    fn tuple_decl(&mut self) -> Result<TupleDecl> {
        let name = self.ident()?;
        self.expect(Tok::Eq)?;
        self.expect(Tok::LParen)?;
        let mut entries = Vec::new();
        if !matches!(self.peek(), Some(Tok::RParen)) {
            entries.push(self.expr()?);
            while let Some(Tok::Comma) = self.peek() {
                self.pos += 1;
                entries.push(self.expr()?);
            }
        }
        self.expect(Tok::RParen)?;
        self.expect(Tok::Semi)?;
        Ok(TupleDecl { name, entries })
    }

    fn cert_decl(&mut self) -> Result<CertDecl> {
        let name = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut system = Vec::new();
        let mut witness = Vec::new();
        let mut coeffs = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Ident(kw)) if kw == "witness" => {
                    self.pos += 1;
                    self.expect(Tok::Eq)?;
                    self.expect(Tok::LParen)?;
                    witness.push(self.expr()?);
                    while let Some(Tok::Comma) = self.peek() {
                        self.pos += 1;
                        witness.push(self.expr()?);
                    }
                    self.expect(Tok::RParen)?;
                    self.expect(Tok::Semi)?;
                }
                Some(Tok::Ident(kw)) if kw == "coeffs" => {
                    self.pos += 1;
                    self.expect(Tok::Eq)?;
                    self.expect(Tok::LBrace)?;
                    if !matches!(self.peek(), Some(Tok::RBrace)) {
                        coeffs = self.ident_list()?;
                    }
                    self.expect(Tok::RBrace)?;
                    self.expect(Tok::Semi)?;
                }
                Some(Tok::Ident(kw)) if kw.starts_with('f') => {
                    // equation clause fK = <expr>;
                    let expected = format!("f{}", system.len() + 1);
                    if *kw != expected {
                        return Err(self.err(format!(
                            "equations must be named in order; expected {}",
                            expected
                        )));
                    }
                    self.pos += 1;
                    self.expect(Tok::Eq)?;
                    system.push(self.expr()?);
                    self.expect(Tok::Semi)?;
                }
                _ => return Err(self.err("expected khovanskii clause or }")),
            }
        }
        Ok(CertDecl {
            name,
            system,
            witness,
            coeffs,
        })
    }

    fn document(&mut self) -> Result<Document> {
        let mut doc = Document::default();
        while self.pos < self.toks.len() {
            match self.ident()?.as_str() {
                "field" => doc.fields.push(self.field_decl()?),
                "tuple" => doc.tuples.push(self.tuple_decl()?),
                "khovanskii" => doc.certs.push(self.cert_decl()?),
                other => {
                    self.pos -= 1;
                    return Err(self.err(format!(
                        "expected field, tuple, or khovanskii, found {}",
                        other
                    )));
                }
            }
        }
        // duplicate names
        for (i, f) in doc.fields.iter().enumerate() {
            if doc.fields[..i].iter().any(|g| g.name == f.name) {
                return Err(Error::Input(format!("duplicate field name {}", f.name)));
            }
        }
        Ok(doc)
    }
}

/// Parse a `.efd` document.
pub fn parse(src: &str) -> Result<Document> {
    let toks = lex(src)?;
    Parser { toks, pos: 0 }.document()
}

// ------------------------------------------------------- pretty printer

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let me = self.prec();
        if me < min {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(q) => write!(f, "{}", rat_display(q))?,
            Expr::Ident(s) => write!(f, "{}", s)?,
            Expr::Add(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 1)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 1)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, "*")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_prec(f, 2)?;
            }
            Expr::Pow(a, e) => {
                a.fmt_prec(f, 4)?;
                write!(f, "^{}", e)?;
            }
            Expr::Exp(a) => {
                write!(f, "exp(")?;
                a.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
        }
        if me < min {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fd in &self.fields {
            writeln!(f, "field {} {{", fd.name)?;
            if !fd.gens.is_empty() {
                writeln!(f, "  gens {};", fd.gens.join(", "))?;
            }
            match &fd.base {
                BaseRef::None => {}
                BaseRef::Named(n) => writeln!(f, "  base {};", n)?,
                BaseRef::Inline(ids) => writeln!(f, "  base {{ {} }};", ids.join(", "))?,
            }
            for (a, e) in &fd.exps {
                writeln!(f, "  exp {} = {};", a, e)?;
            }
            for r in &fd.rels {
                writeln!(f, "  rel {} = 0;", r)?;
            }
            if fd.egg {
                writeln!(f, "  egg;")?;
            }
            writeln!(f, "}}")?;
        }
        for t in &self.tuples {
            let entries: Vec<String> = t.entries.iter().map(|e| e.to_string()).collect();
            writeln!(f, "tuple {} = ({});", t.name, entries.join(", "))?;
        }
        for c in &self.certs {
            writeln!(f, "khovanskii {} {{", c.name)?;
            for (i, e) in c.system.iter().enumerate() {
                writeln!(f, "  f{} = {};", i + 1, e)?;
            }
            let w: Vec<String> = c.witness.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  witness = ({});", w.join(", "))?;
            writeln!(f, "  coeffs = {{ {} }};", c.coeffs.join(", "))?;
            writeln!(f, "}}")?;
        }
        Ok(())
    }
}

// ------------------------------------------------------------ compiling

/// Convert an expression to a polynomial over the named generators;
/// `exp(...)` is rejected here (it belongs to khovanskii systems only).
pub fn expr_to_poly(e: &Expr, gens: &[String]) -> Result<Poly> {
    let n = gens.len();
    Ok(match e {
        Expr::Num(q) => Poly::constant(n, q.clone()),
        Expr::Ident(s) => {
            let i = gens
                .iter()
                .position(|g| g == s)
                .ok_or_else(|| Error::Input(format!("unknown generator {}", s)))?;
            Poly::var(n, i)
        }
        Expr::Add(a, b) => expr_to_poly(a, gens)?.add(&expr_to_poly(b, gens)?),
        Expr::Sub(a, b) => expr_to_poly(a, gens)?.sub(&expr_to_poly(b, gens)?),
        Expr::Neg(a) => expr_to_poly(a, gens)?.neg(),
        Expr::Mul(a, b) => expr_to_poly(a, gens)?.mul(&expr_to_poly(b, gens)?),
        Expr::Pow(a, k) => expr_to_poly(a, gens)?.pow(*k),
        Expr::Exp(_) => {
            return Err(Error::Input(
                "exp(...) is not allowed in polynomial relations".into(),
            ))
        }
    })
}

/// Convert an expression to an exponential polynomial: the reserved
/// names X1…Xn are the indeterminates, all other identifiers become
/// coefficient symbols.
pub fn expr_to_exp_poly(e: &Expr, n: usize) -> Result<ExpPoly> {
    Ok(match e {
        Expr::Num(q) => ExpPoly::constant(n, q.clone()),
        Expr::Ident(s) => match reserved_indeterminate(s) {
            Some(i) if i < n => ExpPoly::var(n, i),
            Some(_) => {
                return Err(Error::Input(format!(
                    "indeterminate {} exceeds the system size {}",
                    s, n
                )))
            }
            None => ExpPoly::atom(n, BaseAtom::Sym(s.clone())),
        },
        Expr::Add(a, b) => expr_to_exp_poly(a, n)?.add(&expr_to_exp_poly(b, n)?),
        Expr::Sub(a, b) => expr_to_exp_poly(a, n)?.sub(&expr_to_exp_poly(b, n)?),
        Expr::Neg(a) => expr_to_exp_poly(a, n)?.neg(),
        Expr::Mul(a, b) => expr_to_exp_poly(a, n)?.mul(&expr_to_exp_poly(b, n)?),
        Expr::Pow(a, k) => expr_to_exp_poly(a, n)?.pow(*k),
        Expr::Exp(a) => expr_to_exp_poly(a, n)?.exp(),
    })
}

fn reserved_indeterminate(s: &str) -> Option<usize> {
    let rest = s.strip_prefix('X')?;
    let k: usize = rest.parse().ok()?;
    if k >= 1 {
        Some(k - 1)
    } else {
        None
    }
}

impl Document {
    pub fn field_decl(&self, name: &str) -> Result<&FieldDecl> {
        self.fields
            .iter()
            .find(|f| f.name == name)
            .ok_or_else(|| Error::Input(format!("no field named {}", name)))
    }

    pub fn tuple_decl(&self, name: &str) -> Option<&TupleDecl> {
        self.tuples.iter().find(|t| t.name == name)
    }

    pub fn cert_decl(&self, name: &str) -> Result<&CertDecl> {
        self.certs
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Input(format!("no khovanskii block named {}", name)))
    }

    /// Compile a field declaration into a presentation.
    pub fn compile_field(
        &self,
        name: &str,
        config: &GroebnerConfig,
    ) -> Result<Arc<EFieldPresentation>> {
        let decl = self.field_decl(name)?;
        let gens = &decl.gens;
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) {
                return Err(Error::Input(format!("duplicate generator {}", g)));
            }
        }
        let gen_index = |id: &str| -> Result<usize> {
            gens.iter()
                .position(|g| g == id)
                .ok_or_else(|| Error::Input(format!("unknown generator {}", id)))
        };
        let base_ids: Vec<String> = match &decl.base {
            BaseRef::None => Vec::new(),
            BaseRef::Inline(ids) => ids.clone(),
            BaseRef::Named(n) => self.field_decl(n)?.gens.clone(),
        };
        let base_gens: Vec<usize> = base_ids
            .iter()
            .map(|id| gen_index(id))
            .collect::<Result<_>>()?;
        let exp_graph: Vec<(usize, usize)> = decl
            .exps
            .iter()
            .map(|(a, e)| Ok((gen_index(a)?, gen_index(e)?)))
            .collect::<Result<_>>()?;
        let rels: Vec<Poly> = decl
            .rels
            .iter()
            .map(|e| expr_to_poly(e, gens))
            .collect::<Result<_>>()?;
        EFieldPresentation::new(
            decl.name.clone(),
            gens.clone(),
            Ideal::new(gens.len(), rels),
            exp_graph,
            base_gens,
            decl.egg,
            config.clone(),
        )
    }

    /// Resolve a tuple (named, or given as entries) in a presentation.
    pub fn resolve_entries(
        &self,
        entries: &[Expr],
        f: &Arc<EFieldPresentation>,
    ) -> Result<Vec<FieldElement>> {
        entries
            .iter()
            .map(|e| {
                let p = expr_to_poly(e, &f.names().to_vec())?;
                Ok(FieldElement::from_poly(f.ctx().clone(), p))
            })
            .collect()
    }

    /// Compile a khovanskii block against a presentation.
    pub fn compile_cert(
        &self,
        name: &str,
        f: &Arc<EFieldPresentation>,
    ) -> Result<KhovanskiiCertificate> {
        let decl = self.cert_decl(name)?;
        let n = decl.system.len();
        if n == 0 || decl.witness.len() != n {
            return Err(Error::Input(
                "khovanskii block needs n ≥ 1 equations and a witness of the same length".into(),
            ));
        }
        let system: Vec<ExpPoly> = decl
            .system
            .iter()
            .map(|e| expr_to_exp_poly(e, n))
            .collect::<Result<_>>()?;
        let witness = self.resolve_entries(&decl.witness, f)?;
        let coeff_gens: Vec<usize> = decl
            .coeffs
            .iter()
            .map(|id| {
                f.gen_index(id)
                    .ok_or_else(|| Error::Input(format!("unknown coefficient generator {}", id)))
            })
            .collect::<Result<_>>()?;
        Ok(KhovanskiiCertificate {
            system,
            witness,
            coeff_gens,
        })
    }
}
