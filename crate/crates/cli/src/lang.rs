//! The line-oriented definition language: parsing, name resolution and canonical serialization.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use semisplit::geometry::Symmetry;
use semisplit::linalg::scalar::{format_combination, format_scalar, parse_scalar};
use semisplit::linalg::{Matrix, Scalar, Vector};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LangError {
    #[error("{line}:{col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("{line}:{col}: duplicate name {name:?}")]
    DuplicateName { line: usize, col: usize, name: String },
    #[error("{line}:{col}: unresolved reference {name:?}")]
    UnresolvedReference { line: usize, col: usize, name: String },
    #[error("{line}:{col}: {text:?} is not an exact rational (write p/q)")]
    NonRational { line: usize, col: usize, text: String },
    #[error("{line}:{col}: {message}")]
    Invalid { line: usize, col: usize, message: String },
}

impl LangError {
    pub fn kind(&self) -> &'static str {
        match self {
            LangError::Parse { .. } => "ParseError",
            LangError::DuplicateName { .. } => "DuplicateName",
            LangError::UnresolvedReference { .. } => "UnresolvedReference",
            LangError::NonRational { .. } => "NonRational",
            LangError::Invalid { .. } => "Invalid",
        }
    }

    pub fn location(&self) -> (usize, usize) {
        match self {
            LangError::Parse { line, col, .. }
            | LangError::DuplicateName { line, col, .. }
            | LangError::UnresolvedReference { line, col, .. }
            | LangError::NonRational { line, col, .. }
            | LangError::Invalid { line, col, .. } => (*line, *col),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepAction {
    /// One `dim(target) x dim(target)` matrix per basis vector of the algebra.
    Matrices { target: String, matrices: Vec<Matrix> },
    Adjoint,
    Coadjoint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitDef {
    Semidirect { h: String, k: String, rep: String },
    Tangent(String),
    Cotangent(String),
}

/// One declaration with names resolved and coefficients evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Algebra { name: String, basis: Vec<String> },
    Bracket { algebra: String, left: usize, right: usize, value: Vector },
    Lsa { name: String, basis: Vec<String> },
    Product { lsa: String, left: usize, right: usize, value: Vector },
    /// Rows index the basis of `to`, columns the basis of `from`.
    Map { name: String, from: String, to: String, matrix: Matrix },
    Rep { name: String, algebra: String, action: RepAction },
    Form { name: String, on: String, symmetry: Symmetry, matrix: Matrix },
    Param { name: String, value: Scalar },
    Split { name: String, def: SplitDef },
}

impl Decl {
    pub fn name(&self) -> Option<&str> {
        match self {
            Decl::Algebra { name, .. }
            | Decl::Lsa { name, .. }
            | Decl::Map { name, .. }
            | Decl::Rep { name, .. }
            | Decl::Form { name, .. }
            | Decl::Param { name, .. }
            | Decl::Split { name, .. } => Some(name),
            Decl::Bracket { .. } | Decl::Product { .. } => None,
        }
    }
}

/// A parsed file. Equality is structural: source lines are ignored.
#[derive(Debug, Clone, Default)]
pub struct Document {
    decls: Vec<Decl>,
    lines: Vec<usize>,
}

impl PartialEq for Document {
    fn eq(&self, other: &Self) -> bool {
        self.decls == other.decls
    }
}

impl Eq for Document {}

impl Document {
    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    /// Source line of the i-th declaration.
    pub fn line_of(&self, i: usize) -> usize {
        self.lines[i]
    }

    pub fn find(&self, name: &str) -> Option<(usize, &Decl)> {
        self.decls.iter().enumerate().find(|(_, d)| d.name() == Some(name))
    }

    /// Basis labels of an algebra or LSA, and `h` then `k` labels of a split.
    pub fn basis_of(&self, name: &str) -> Option<Vec<String>> {
        match self.find(name)?.1 {
            Decl::Algebra { basis, .. } | Decl::Lsa { basis, .. } => Some(basis.clone()),
            Decl::Split { def, .. } => {
                let (h, k) = match def {
                    SplitDef::Semidirect { h, k, .. } => (self.basis_of(h)?, self.basis_of(k)?),
                    SplitDef::Tangent(h) | SplitDef::Cotangent(h) => {
                        let b = self.basis_of(h)?;
                        let n = b.len();
                        (b, semisplit::lie::labels("v", n))
                    }
                };
                Some(h.into_iter().chain(k).collect())
            }
            _ => None,
        }
    }

    /// Appends a declaration after validating it against the preceding ones.
    pub fn push(&mut self, decl: Decl) -> Result<(), LangError> {
        let line = self.lines.last().map_or(1, |l| l + 1);
        self.push_at(decl, line, 1)
    }

    fn push_at(&mut self, decl: Decl, line: usize, col: usize) -> Result<(), LangError> {
        let invalid = |message: String| LangError::Invalid { line, col, message };
        let unresolved = |name: &str| LangError::UnresolvedReference { line, col, name: name.to_string() };
        if let Some(name) = decl.name() {
            if self.find(name).is_some() {
                return Err(LangError::DuplicateName { line, col, name: name.to_string() });
            }
        }
        match &decl {
            Decl::Algebra { basis, .. } | Decl::Lsa { basis, .. } => {
                let mut seen = BTreeSet::new();
                for b in basis {
                    if !seen.insert(b) {
                        return Err(LangError::DuplicateName { line, col, name: b.clone() });
                    }
                }
            }
            Decl::Bracket { algebra: owner, left, right, value } | Decl::Product { lsa: owner, left, right, value } => {
                let is_bracket = matches!(decl, Decl::Bracket { .. });
                let n = match self.find(owner) {
                    Some((_, Decl::Algebra { basis, .. })) if is_bracket => basis.len(),
                    Some((_, Decl::Lsa { basis, .. })) if !is_bracket => basis.len(),
                    _ => return Err(unresolved(owner)),
                };
                if *left >= n || *right >= n || value.len() != n {
                    return Err(invalid("index out of range".into()));
                }
                if is_bracket && left == right && !value.iter().all(Zero::is_zero) {
                    return Err(invalid("a bracket [x,x] must be 0".into()));
                }
                let clash = self.decls.iter().any(|d| match d {
                    Decl::Bracket { algebra, left: l, right: r, .. } if is_bracket => {
                        algebra == owner && ((l, r) == (left, right) || (r, l) == (left, right))
                    }
                    Decl::Product { lsa, left: l, right: r, .. } if !is_bracket => lsa == owner && (l, r) == (left, right),
                    _ => false,
                });
                if clash {
                    return Err(invalid("this pair is already defined".into()));
                }
            }
            Decl::Map { from, to, matrix, .. } => {
                let f = self.basis_of(from).ok_or_else(|| unresolved(from))?;
                let t = self.basis_of(to).ok_or_else(|| unresolved(to))?;
                if matrix.rows() != t.len() || matrix.cols() != f.len() {
                    return Err(invalid(format!(
                        "matrix is {}x{}, expected {}x{} (rows index {to})",
                        matrix.rows(),
                        matrix.cols(),
                        t.len(),
                        f.len()
                    )));
                }
            }
            Decl::Rep { algebra, action, .. } => {
                let h = match self.find(algebra) {
                    Some((_, Decl::Algebra { basis, .. })) => basis.len(),
                    _ => return Err(unresolved(algebra)),
                };
                if let RepAction::Matrices { target, matrices } = action {
                    let k = match self.find(target) {
                        Some((_, Decl::Algebra { basis, .. })) => basis.len(),
                        _ => return Err(unresolved(target)),
                    };
                    if matrices.len() != h {
                        return Err(invalid(format!("{} matrices given, {algebra} has dimension {h}", matrices.len())));
                    }
                    if matrices.iter().any(|m| m.rows() != k || m.cols() != k) {
                        return Err(invalid(format!("matrices must be {k}x{k}")));
                    }
                }
            }
            Decl::Form { on, matrix, symmetry, .. } => {
                let n = self.basis_of(on).ok_or_else(|| unresolved(on))?.len();
                if matrix.rows() != n || matrix.cols() != n {
                    return Err(invalid(format!("form matrix must be {n}x{n}")));
                }
                let t = matrix.transpose();
                let ok = match symmetry {
                    Symmetry::Symmetric => t == *matrix,
                    Symmetry::Antisymmetric => t == matrix.neg(),
                };
                if !ok {
                    return Err(invalid(format!("matrix is not {symmetry}")));
                }
            }
            Decl::Param { .. } => {}
            Decl::Split { def, .. } => {
                let is_algebra = |n: &str| matches!(self.find(n), Some((_, Decl::Algebra { .. })));
                match def {
                    SplitDef::Semidirect { h, k, rep } => {
                        for n in [h, k] {
                            if !is_algebra(n) {
                                return Err(unresolved(n));
                            }
                        }
                        match self.find(rep) {
                            Some((_, Decl::Rep { algebra, action, .. })) => {
                                let target = match action {
                                    RepAction::Matrices { target, .. } => target,
                                    RepAction::Adjoint | RepAction::Coadjoint => algebra,
                                };
                                if algebra != h || target != k {
                                    return Err(invalid(format!("{rep} is not a representation of {h} on {k}")));
                                }
                            }
                            _ => return Err(unresolved(rep)),
                        }
                    }
                    SplitDef::Tangent(h) | SplitDef::Cotangent(h) => {
                        if !is_algebra(h) {
                            return Err(unresolved(h));
                        }
                    }
                }
            }
        }
        self.decls.push(decl);
        self.lines.push(line);
        Ok(())
    }

    fn param(&self, name: &str) -> Option<&Scalar> {
        self.decls.iter().find_map(|d| match d {
            Decl::Param { name: n, value } if n == name => Some(value),
            _ => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(Scalar),
    Sym(&'static str),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

const SYMBOLS: [&str; 11] = ["->", "[", "]", ",", ";", "=", "+", "-", "*", ":", "/"];

fn lex(line: usize, text: &str) -> Result<Vec<Token>, LangError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), col });
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || matches!(chars[i], '.' | '/' | '_')) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if word.contains('.') || word.contains(['e', 'E']) && word.chars().all(|c| c.is_ascii_digit() || "eE.".contains(c)) {
                return Err(LangError::NonRational { line, col, text: word });
            }
            let value = parse_scalar(&word).map_err(|_| LangError::Parse {
                line,
                col,
                message: format!("malformed number {word:?} (separate a coefficient from its basis vector by a space)"),
            })?;
            out.push(Token { tok: Tok::Num(value), col });
            continue;
        }
        match SYMBOLS.iter().find(|s| chars[i..].iter().take(s.len()).copied().eq(s.chars())) {
            Some(s) => {
                out.push(Token { tok: Tok::Sym(s), col });
                i += s.len();
            }
            None => return Err(LangError::Parse { line, col, message: format!("unexpected character {c:?}") }),
        }
    }
    Ok(out)
}

struct Cursor<'a> {
    doc: &'a Document,
    line: usize,
    end_col: usize,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn error(&self, message: impl Into<String>) -> LangError {
        LangError::Parse { line: self.line, col: self.col(), message: message.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + k).map(|t| &t.tok)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), LangError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected {s:?}")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, LangError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), LangError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected keyword {kw:?}"))),
        }
    }

    fn finish(&self) -> Result<(), LangError> {
        if self.pos < self.tokens.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }

    fn unresolved(&self, col: usize, name: &str) -> LangError {
        LangError::UnresolvedReference { line: self.line, col, name: name.to_string() }
    }

    /// `<rational>` or a declared parameter.
    fn atom(&mut self) -> Result<Scalar, LangError> {
        let col = self.col();
        match self.next() {
            Some(Tok::Num(v)) => Ok(v),
            Some(Tok::Ident(name)) => self.doc.param(&name).cloned().ok_or_else(|| self.unresolved(col, &name)),
            _ => {
                self.pos -= 1;
                Err(self.error("expected a rational number or parameter"))
            }
        }
    }

    /// `[-] atom (('*' | '/') atom)*`
    fn scalar(&mut self) -> Result<Scalar, LangError> {
        self.coefficient(&[])
    }

    /// A scalar; inside a combination `c * label` ends at the `*` when `label` is a basis vector.
    fn coefficient(&mut self, basis: &[String]) -> Result<Scalar, LangError> {
        let neg = self.eat("-");
        let mut v = self.atom()?;
        loop {
            let before_label = matches!(self.peek_at(1), Some(Tok::Ident(l)) if basis.contains(l) && self.doc.param(l).is_none());
            if self.is_sym("*") && before_label {
                self.pos += 1;
                break;
            }
            if self.eat("*") {
                v *= self.atom()?;
            } else if self.is_sym("/") {
                let col = self.col();
                self.pos += 1;
                let d = self.atom()?;
                if d.is_zero() {
                    return Err(LangError::Invalid { line: self.line, col, message: "division by zero".into() });
                }
                v /= d;
            } else {
                break;
            }
        }
        Ok(if neg { -v } else { v })
    }

    fn basis_index(&mut self, basis: &[String]) -> Result<usize, LangError> {
        let col = self.col();
        let name = self.ident("a basis vector")?;
        basis.iter().position(|b| *b == name).ok_or_else(|| self.unresolved(col, &name))
    }

    /// `0` or `[±] term (± term)*` with `term = [coef] basis`.
    fn combination(&mut self, basis: &[String]) -> Result<Vector, LangError> {
        let mut out = vec![Scalar::zero(); basis.len()];
        if matches!(self.peek(), Some(Tok::Num(v)) if v.is_zero()) && self.peek_at(1).is_none() {
            self.pos += 1;
            return Ok(out);
        }
        let mut sign = if self.eat("-") {
            -Scalar::from_integer(1.into())
        } else {
            self.eat("+");
            Scalar::from_integer(1.into())
        };
        loop {
            let coef_follows = match (self.peek(), self.peek_at(1)) {
                (Some(Tok::Num(_)), _) => true,
                (Some(Tok::Ident(a)), Some(Tok::Ident(_))) => self.doc.param(a).is_some() || !basis.contains(a),
                (Some(Tok::Ident(_)), Some(Tok::Sym("*" | "/"))) => true,
                _ => false,
            };
            let coef = if coef_follows { self.coefficient(basis)? } else { Scalar::from_integer(1.into()) };
            let idx = self.basis_index(basis)?;
            out[idx] += sign * coef;
            if self.eat("+") {
                sign = Scalar::from_integer(1.into());
            } else if self.eat("-") {
                sign = -Scalar::from_integer(1.into());
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn row(&mut self) -> Result<Vec<Scalar>, LangError> {
        self.expect("[")?;
        let mut row = Vec::new();
        if !self.is_sym("]") {
            row.push(self.scalar()?);
            while self.eat(",") {
                row.push(self.scalar()?);
            }
        }
        self.expect("]")?;
        Ok(row)
    }

    /// `[[r, ...], ...]`
    fn matrix(&mut self) -> Result<Matrix, LangError> {
        let col = self.col();
        self.expect("[")?;
        let mut rows = vec![self.row()?];
        while self.eat(",") {
            rows.push(self.row()?);
        }
        self.expect("]")?;
        Matrix::from_rows(rows).map_err(|_| LangError::Invalid { line: self.line, col, message: "rows differ in length".into() })
    }

    fn basis_list(&mut self, name: &str) -> Result<Vec<String>, LangError> {
        self.keyword("dim")?;
        let col = self.col();
        let n = match self.next() {
            Some(Tok::Num(v)) if v.is_integer() && v >= Scalar::zero() => v.to_integer().to_string().parse::<usize>().unwrap_or(usize::MAX),
            _ => return Err(LangError::Parse { line: self.line, col, message: "expected a dimension".into() }),
        };
        self.keyword("basis")?;
        let mut basis = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            basis.push(self.ident("a basis label")?);
        }
        if basis.len() != n {
            return Err(LangError::Invalid { line: self.line, col, message: format!("{name} has dim {n} but {} basis labels", basis.len()) });
        }
        Ok(basis)
    }

    fn owner_basis(&mut self, algebra: bool) -> Result<(String, Vec<String>), LangError> {
        let col = self.col();
        let name = self.ident("a name")?;
        match self.doc.find(&name) {
            Some((_, Decl::Algebra { basis, .. })) if algebra => Ok((name, basis.clone())),
            Some((_, Decl::Lsa { basis, .. })) if !algebra => Ok((name, basis.clone())),
            _ => Err(self.unresolved(col, &name)),
        }
    }

    fn declaration(&mut self) -> Result<Decl, LangError> {
        let kw = self.ident("a declaration keyword")?;
        let decl = match kw.as_str() {
            "algebra" | "lsa" => {
                let name = self.ident("a name")?;
                let basis = self.basis_list(&name)?;
                if kw == "algebra" {
                    Decl::Algebra { name, basis }
                } else {
                    Decl::Lsa { name, basis }
                }
            }
            "bracket" => {
                let (algebra, basis) = self.owner_basis(true)?;
                self.expect("[")?;
                let left = self.basis_index(&basis)?;
                self.expect(",")?;
                let right = self.basis_index(&basis)?;
                self.expect("]")?;
                self.expect("=")?;
                let value = self.combination(&basis)?;
                Decl::Bracket { algebra, left, right, value }
            }
            "product" => {
                let (lsa, basis) = self.owner_basis(false)?;
                let left = self.basis_index(&basis)?;
                self.expect("*")?;
                let right = self.basis_index(&basis)?;
                self.expect("=")?;
                let value = self.combination(&basis)?;
                Decl::Product { lsa, left, right, value }
            }
            "map" => {
                let name = self.ident("a name")?;
                self.expect(":")?;
                let from = self.ident("a source")?;
                self.expect("->")?;
                let to = self.ident("a target")?;
                self.keyword("matrix")?;
                Decl::Map { name, from, to, matrix: self.matrix()? }
            }
            "rep" => {
                let name = self.ident("a name")?;
                self.expect(":")?;
                let algebra = self.ident("an algebra")?;
                let action = match self.ident("'on', 'adjoint' or 'coadjoint'")?.as_str() {
                    "adjoint" => RepAction::Adjoint,
                    "coadjoint" => RepAction::Coadjoint,
                    "on" => {
                        let target = self.ident("an algebra")?;
                        self.keyword("matrices")?;
                        self.expect("[")?;
                        let mut matrices = Vec::new();
                        if !self.is_sym("]") {
                            matrices.push(self.matrix()?);
                            while self.eat(";") {
                                matrices.push(self.matrix()?);
                            }
                        }
                        self.expect("]")?;
                        RepAction::Matrices { target, matrices }
                    }
                    _ => {
                        self.pos -= 1;
                        return Err(self.error("expected 'on', 'adjoint' or 'coadjoint'"));
                    }
                };
                Decl::Rep { name, algebra, action }
            }
            "form" => {
                let name = self.ident("a name")?;
                self.keyword("on")?;
                let on = self.ident("an algebra")?;
                let symmetry = match self.ident("'sym' or 'antisym'")?.as_str() {
                    "sym" => Symmetry::Symmetric,
                    "antisym" => Symmetry::Antisymmetric,
                    _ => {
                        self.pos -= 1;
                        return Err(self.error("expected 'sym' or 'antisym'"));
                    }
                };
                self.keyword("matrix")?;
                Decl::Form { name, on, symmetry, matrix: self.matrix()? }
            }
            "param" => {
                let name = self.ident("a name")?;
                self.expect("=")?;
                Decl::Param { name, value: self.scalar()? }
            }
            "split" => {
                let name = self.ident("a name")?;
                self.expect("=")?;
                let def = match self.ident("'semidirect', 'tangent' or 'cotangent'")?.as_str() {
                    "semidirect" => SplitDef::Semidirect { h: self.ident("h")?, k: self.ident("k")?, rep: self.ident("a representation")? },
                    "tangent" => SplitDef::Tangent(self.ident("h")?),
                    "cotangent" => SplitDef::Cotangent(self.ident("h")?),
                    _ => {
                        self.pos -= 1;
                        return Err(self.error("expected 'semidirect', 'tangent' or 'cotangent'"));
                    }
                };
                Decl::Split { name, def }
            }
            other => {
                self.pos -= 1;
                return Err(self.error(format!("unknown declaration {other:?}")));
            }
        };
        self.finish()?;
        Ok(decl)
    }
}

pub fn parse(text: &str) -> Result<Document, LangError> {
    let mut doc = Document::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = lex(line, raw)?;
        if tokens.is_empty() {
            continue;
        }
        let decl = {
            let mut cur = Cursor { doc: &doc, line, end_col: raw.chars().count() + 1, tokens, pos: 0 };
            cur.declaration()?
        };
        doc.push_at(decl, line, 1)?;
    }
    Ok(doc)
}

fn matrix_literal(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(format_scalar).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Canonical text: one declaration per line in document order, values in lowest terms.
pub fn serialize(doc: &Document) -> String {
    let mut bases: BTreeMap<&str, &[String]> = BTreeMap::new();
    let mut out = String::new();
    for d in &doc.decls {
        let line = match d {
            Decl::Algebra { name, basis } | Decl::Lsa { name, basis } => {
                bases.insert(name, basis);
                let kw = if matches!(d, Decl::Algebra { .. }) { "algebra" } else { "lsa" };
                format!("{kw} {name} dim {} basis {}", basis.len(), basis.join(" "))
            }
            Decl::Bracket { algebra, left, right, value } => {
                let b = bases[algebra.as_str()];
                format!("bracket {algebra} [{},{}] = {}", b[*left], b[*right], format_combination(value, b))
            }
            Decl::Product { lsa, left, right, value } => {
                let b = bases[lsa.as_str()];
                format!("product {lsa} {}*{} = {}", b[*left], b[*right], format_combination(value, b))
            }
            Decl::Map { name, from, to, matrix } => format!("map {name} : {from} -> {to} matrix {}", matrix_literal(matrix)),
            Decl::Rep { name, algebra, action } => match action {
                RepAction::Adjoint => format!("rep {name} : {algebra} adjoint"),
                RepAction::Coadjoint => format!("rep {name} : {algebra} coadjoint"),
                RepAction::Matrices { target, matrices } => format!(
                    "rep {name} : {algebra} on {target} matrices [{}]",
                    matrices.iter().map(matrix_literal).collect::<Vec<_>>().join("; ")
                ),
            },
            Decl::Form { name, on, symmetry, matrix } => format!("form {name} on {on} {symmetry} matrix {}", matrix_literal(matrix)),
            Decl::Param { name, value } => format!("param {name} = {}", format_scalar(value)),
            Decl::Split { name, def } => match def {
                SplitDef::Semidirect { h, k, rep } => format!("split {name} = semidirect {h} {k} {rep}"),
                SplitDef::Tangent(h) => format!("split {name} = tangent {h}"),
                SplitDef::Cotangent(h) => format!("split {name} = cotangent {h}"),
            },
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use semisplit::linalg::{frac, int};

    #[test]
    fn parses_r3_minus1() {
        let doc = parse("algebra h dim 3 basis e1 e2 e3\nbracket h [e1,e2] = e2\nbracket h [e1,e3] = -1 e3\n").unwrap();
        assert_eq!(doc.decls().len(), 3);
        assert_eq!(doc.decls()[2], Decl::Bracket { algebra: "h".into(), left: 0, right: 2, value: vec![int(0), int(0), int(-1)] });
    }

    #[test]
    fn decimals_are_rejected() {
        let err = parse("algebra h dim 3 basis e1 e2 e3\nbracket h [e1,e2] = 0.5 e3").unwrap_err();
        assert_eq!(err, LangError::NonRational { line: 2, col: 21, text: "0.5".into() });
        assert!(matches!(parse("param a = 1e3"), Err(LangError::NonRational { .. })));
    }

    #[test]
    fn errors_carry_locations() {
        assert_eq!(
            parse("algebra h dim 2 basis x y\nalgebra h dim 1 basis z").unwrap_err(),
            LangError::DuplicateName { line: 2, col: 1, name: "h".into() }
        );
        assert_eq!(
            parse("algebra h dim 2 basis x y\nbracket h [x,w] = y").unwrap_err(),
            LangError::UnresolvedReference { line: 2, col: 14, name: "w".into() }
        );
        assert!(matches!(parse("algebra h dim 2 basis x"), Err(LangError::Invalid { line: 1, .. })));
        assert!(matches!(parse("frobnicate"), Err(LangError::Parse { line: 1, col: 1, .. })));
        assert!(matches!(parse("algebra h dim 2 basis x y\nbracket h [x,y] = y y"), Err(LangError::Parse { line: 2, .. })));
    }

    #[test]
    fn params_and_normalization() {
        let doc = parse("param a = 2/4\nalgebra h dim 2 basis x y\nbracket h [x,y] = a y - 1/3 x\n# comment\nmap j : h -> h matrix [[a, 0], [0, -a/2]]").unwrap();
        assert_eq!(
            serialize(&doc),
            "param a = 1/2\nalgebra h dim 2 basis x y\nbracket h [x,y] = -1/3 x + 1/2 y\nmap j : h -> h matrix [[1/2, 0], [0, -1/4]]\n"
        );
        assert_eq!(doc.line_of(3), 5);
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
        assert_eq!(doc.basis_of("h").unwrap(), vec!["x".to_string(), "y".to_string()]);
        let starred = parse("param a = 1/2\nalgebra h dim 2 basis x y\nbracket h [x,y] = 3*x - a*2*y").unwrap();
        assert_eq!(serialize(&starred).lines().last(), Some("bracket h [x,y] = 3 x - y"));
        let _ = frac(1, 2);
    }

    #[test]
    fn representations_and_splits() {
        let text = "algebra h dim 1 basis x\nalgebra k dim 2 basis u v\nrep pi : h on k matrices [[[1, 0], [0, -1]]]\nsplit g = semidirect h k pi\nsplit t = tangent h\nmap j : h -> k matrix [[1], [0]]\nform w on g antisym matrix [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]\n";
        let doc = parse(text).unwrap();
        assert_eq!(serialize(&doc), text);
        assert_eq!(doc.basis_of("t").unwrap(), vec!["x".to_string(), "v1".to_string()]);
        assert!(matches!(parse("algebra h dim 1 basis x\nrep pi : h on h matrices []"), Err(LangError::Invalid { .. })));
        assert!(matches!(parse("algebra h dim 1 basis x\nsplit g = semidirect h h pi"), Err(LangError::UnresolvedReference { .. })));
    }

    #[test]
    fn empty_brackets_mean_abelian() {
        let doc = parse("algebra a dim 2 basis p q").unwrap();
        assert_eq!(serialize(&doc), "algebra a dim 2 basis p q\n");
    }

    #[test]
    fn duplicate_pairs_rejected() {
        assert!(matches!(
            parse("algebra h dim 2 basis x y\nbracket h [x,y] = y\nbracket h [y,x] = x"),
            Err(LangError::Invalid { line: 3, .. })
        ));
    }
}
