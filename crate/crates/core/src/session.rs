//! The `.mgcm` session language: a line-oriented list of `;`-terminated
//! declarations and directives with `#` comments.
//!
//! ```text
//! ring A = poly(char=32003; a, b : deg=(0), weight=1);
//! ideal I1 = (a);
//! ideal I2 = (a, b);
//! module N = ring(A);
//! multirees M = rees(N; I1, I2);
//! verify lem41 M;
//! ```

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::cohomology::{cohomology_table, CohomologyEngine, TableKind, Window};
use crate::degree::{Degree, Multidegree};
use crate::error::{Error, Result};
use crate::expr::{parse_expr_at, Expr};
use crate::field::{Field, PrimeField, Rationals};
use crate::harness;
use crate::homological::{invariants_from, InvariantRecord};
use crate::module::Presentation;
use crate::poly::{MonoOrder, Vector};
use crate::rees::{diagonal_of, irrelevant_rees, rees_module_presentation, ReesModule};
use crate::report::{Verdict, VerificationReport};
use crate::ring::{GradedRing, Poly, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarGroup {
    pub names: Vec<String>,
    pub deg: Vec<i64>,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDef {
    Poly { char: u64, groups: Vec<VarGroup>, lex: bool },
    Quotient { ring: String, gens: Vec<Expr> },
}

/// A generator degree `(d_1, …, d_r)@w`; the weight defaults to the sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegLit {
    pub md: Vec<i64>,
    pub wt: Option<i64>,
}

impl DegLit {
    pub fn degree(&self) -> Degree {
        Degree::new(Multidegree(self.md.clone()), self.wt.unwrap_or_else(|| self.md.iter().sum()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    Ring(String),
    Cyclic(String, Vec<Expr>),
    Free(String, Vec<DegLit>),
    Coker(String, Vec<DegLit>, Vec<Vec<Expr>>),
    Shift(String, DegLit),
    Sum(Vec<String>),
    Irrelevant(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Invariants,
    Hilbert,
    Routes,
    Identity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Thm {
    Thm31,
    LemVanish,
    Lem41,
    Thm42,
    Lem44,
    Lem45,
    Thm46,
}

impl Thm {
    pub const ALL: [Thm; 7] = [Thm::Thm31, Thm::LemVanish, Thm::Lem41, Thm::Thm42, Thm::Lem44, Thm::Lem45, Thm::Thm46];

    pub fn as_str(&self) -> &'static str {
        match self {
            Thm::Thm31 => "thm31",
            Thm::LemVanish => "lem-vanish",
            Thm::Lem41 => "lem41",
            Thm::Thm42 => "thm42",
            Thm::Lem44 => "lem44",
            Thm::Lem45 => "lem45",
            Thm::Thm46 => "thm46",
        }
    }
}

impl std::str::FromStr for Thm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Thm::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| Error::Unsupported(format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOpts {
    pub window: Option<Window>,
    pub k: Option<(i64, i64)>,
    pub bound: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Ring { name: String, def: RingDef },
    Ideal { name: String, ring: String, gens: Vec<Expr> },
    Module { name: String, def: ModuleDef },
    Rees { name: String, base: String, ideals: Vec<String> },
    MultiRees { name: String, base: String, ideals: Vec<String> },
    Diagonal { name: String, of: String },
    Check { what: CheckKind, target: String },
    Table { kind: TableKind, target: String, i: (i64, i64), window: Option<Window> },
    Verify { thm: Thm, target: String, opts: VerifyOpts },
}

#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Session {
    pub stmts: Vec<Stmt>,
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Debug)]
enum Sym {
    /// A ring of the given grading rank; variable names when known.
    Ring(usize, Option<Vec<String>>),
    Ideal(String),
    /// A module over a ring of the given rank; `Some(r)` for Rees modules.
    Module(usize, Option<usize>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    line_starts: Vec<usize>,
    syms: HashMap<String, Sym>,
    current_ring: Option<String>,
    rees_rings: std::collections::HashSet<String>,
}

fn ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(src.bytes().enumerate().filter(|(_, c)| *c == b'\n').map(|(i, _)| i + 1));
        Parser { src: src.as_bytes(), pos: 0, line_starts, syms: HashMap::new(), current_ring: None, rees_rings: Default::default() }
    }

    fn loc(&self, pos: usize) -> (usize, usize) {
        let line = self.line_starts.partition_point(|&s| s <= pos);
        (line, pos - self.line_starts[line - 1] + 1)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let (line, col) = self.loc(pos);
        Error::Parse { line, col, msg: msg.into() }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b'#' => {
                    while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                c if c.is_ascii_whitespace() => self.pos += 1,
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |x| format!("`{}`", x as char));
            Err(self.err(format!("expected `{}`, found {found}", c as char)))
        }
    }

    fn word(&mut self, extra: &[u8]) -> Result<String> {
        self.ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(|&c| ident_start(c)) {
            return Err(self.err("expected a name"));
        }
        while self.src.get(self.pos).is_some_and(|&c| ident_char(c) || extra.contains(&c)) {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn ident(&mut self) -> Result<String> {
        self.word(&[])
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        let p = self.pos;
        let w = self.ident()?;
        if w == kw {
            Ok(())
        } else {
            Err(self.err_at(p, format!("expected `{kw}`, found `{w}`")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err_at(start, "expected an integer"))
    }

    /// Raw text up to the first of `stop` at bracket depth zero.
    fn raw(&mut self, stop: &[u8]) -> (usize, &'a str) {
        self.ws();
        let start = self.pos;
        let mut depth = 0i32;
        while let Some(&c) = self.src.get(self.pos) {
            if depth == 0 && stop.contains(&c) {
                break;
            }
            match c {
                b'(' | b'[' => depth += 1,
                b')' | b']' => depth -= 1,
                _ => {}
            }
            self.pos += 1;
        }
        (start, std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self, stop: &[u8], vars: Option<&[String]>) -> Result<Expr> {
        let (start, text) = self.raw(stop);
        let (line, col) = self.loc(start);
        if text.trim().is_empty() {
            return Err(self.err_at(start, format!("empty generator at line {line}")));
        }
        let e = parse_expr_at(text.trim_end(), line, col - 1)?;
        if let Some(vars) = vars {
            let mut used = Vec::new();
            e.vars(&mut used);
            if let Some(v) = used.iter().find(|v| !vars.contains(v)) {
                return Err(self.err_at(start, format!("unknown identifier `{v}`")));
            }
        }
        Ok(e)
    }

    /// Comma-separated expressions closed by `close`.
    fn expr_list(&mut self, close: u8, vars: Option<&[String]>) -> Result<Vec<Expr>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr(&[b',', close], vars)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn int_tuple(&mut self) -> Result<Vec<i64>> {
        self.expect(b'(')?;
        let mut out = Vec::new();
        if self.eat(b')') {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat(b')') {
                return Ok(out);
            }
            self.expect(b',')?;
        }
    }

    fn deg_lit(&mut self, rank: Option<usize>) -> Result<DegLit> {
        self.ws();
        let p = self.pos;
        let md = self.int_tuple()?;
        if let Some(r) = rank {
            if md.len() != r {
                return Err(self.err_at(p, format!("degree has {} entries, the ring has rank {r}", md.len())));
            }
        }
        let wt = if self.eat(b'@') { Some(self.int()?) } else { None };
        Ok(DegLit { md, wt })
    }

    fn range(&mut self) -> Result<(i64, i64)> {
        let a = self.int()?;
        if !self.eat_str("..") {
            return Err(self.err("expected `..`"));
        }
        Ok((a, self.int()?))
    }

    fn window(&mut self, rank: Option<usize>) -> Result<Window> {
        self.ws();
        let p = self.pos;
        let lo = self.int_tuple()?;
        if !self.eat_str("..") {
            return Err(self.err("expected `..`"));
        }
        let hi = self.int_tuple()?;
        if lo.len() != hi.len() || rank.is_some_and(|r| r != lo.len()) {
            return Err(self.err_at(p, "window corners do not match the ring's grading rank"));
        }
        let wt = if self.eat(b'@') { Some(self.range()?) } else { None };
        Ok(Window { lo: Multidegree(lo), hi: Multidegree(hi), wt })
    }

    fn fresh_name(&mut self) -> Result<(usize, String)> {
        self.ws();
        let p = self.pos;
        let name = self.ident()?;
        if self.syms.contains_key(&name) {
            return Err(self.err_at(p, format!("duplicate name `{name}`")));
        }
        Ok((p, name))
    }

    fn reference(&mut self) -> Result<(usize, String, Sym)> {
        self.ws();
        let p = self.pos;
        let name = self.ident()?;
        match self.syms.get(&name) {
            Some(s) => Ok((p, name, s.clone())),
            None => Err(self.err_at(p, format!("unknown identifier `{name}`"))),
        }
    }

    fn ring_ref(&mut self) -> Result<(String, usize, Option<Vec<String>>)> {
        let (p, name, sym) = self.reference()?;
        match sym {
            Sym::Ring(r, vars) => Ok((name, r, vars)),
            _ => Err(self.err_at(p, format!("`{name}` is not a ring"))),
        }
    }

    fn module_ref(&mut self) -> Result<(String, usize, Option<usize>)> {
        let (p, name, sym) = self.reference()?;
        match sym {
            Sym::Module(r, rees) => Ok((name, r, rees)),
            Sym::Ring(r, _) => Ok((name, r, None)),
            _ => Err(self.err_at(p, format!("`{name}` is not a module"))),
        }
    }

    fn ring_of_module(&self, name: &str) -> usize {
        match &self.syms[name] {
            Sym::Module(r, _) | Sym::Ring(r, _) => *r,
            Sym::Ideal(_) => 0,
        }
    }

    fn statement(&mut self) -> Result<Stmt> {
        self.ws();
        let start = self.pos;
        let (line, col) = self.loc(start);
        let kw = self.ident()?;
        let kind = match kw.as_str() {
            "ring" => self.ring_decl()?,
            "ideal" => self.ideal_decl()?,
            "module" => self.module_decl()?,
            "rees" | "multirees" => self.rees_decl(kw == "multirees")?,
            "diagonal" => {
                let (_, name) = self.fresh_name()?;
                self.expect(b'=')?;
                self.keyword("diagonal")?;
                self.expect(b'(')?;
                let (p, of, sym) = self.reference()?;
                let sym = match sym {
                    Sym::Module(_, Some(_)) => Sym::Module(1, Some(1)),
                    Sym::Ring(_, _) if matches!(self.syms.get(&of), Some(Sym::Ring(_, None))) => Sym::Ring(1, None),
                    _ => return Err(self.err_at(p, format!("`{of}` is not a Rees object"))),
                };
                self.expect(b')')?;
                self.syms.insert(name.clone(), sym);
                StmtKind::Diagonal { name, of }
            }
            "check" => {
                let p = self.pos;
                let what = match self.ident()?.as_str() {
                    "invariants" => CheckKind::Invariants,
                    "hilbert" => CheckKind::Hilbert,
                    "routes" => CheckKind::Routes,
                    "identity" => CheckKind::Identity,
                    w => return Err(self.err_at(p, format!("unknown check `{w}`"))),
                };
                let (target, _, _) = self.module_ref()?;
                StmtKind::Check { what, target }
            }
            "table" => {
                let p = self.pos;
                let kind = match self.ident()?.as_str() {
                    "sheaf" => TableKind::Sheaf,
                    "local" => TableKind::LocalIrrelevant,
                    "maximal" => TableKind::LocalMaximal,
                    w => return Err(self.err_at(p, format!("unknown table `{w}`"))),
                };
                let (target, rank, _) = self.module_ref()?;
                let mut i = (0, 0);
                let mut window = None;
                while self.peek().is_some_and(ident_start) {
                    let p = self.pos;
                    match self.ident()?.as_str() {
                        "i" => {
                            self.expect(b'=')?;
                            i = self.range()?;
                        }
                        "window" => {
                            self.expect(b'=')?;
                            window = Some(self.window(Some(rank))?);
                        }
                        w => return Err(self.err_at(p, format!("unknown option `{w}`"))),
                    }
                }
                StmtKind::Table { kind, target, i, window }
            }
            "verify" => {
                self.ws();
                let p = self.pos;
                let thm: Thm = self.word(b"-")?.parse().map_err(|e: Error| self.err_at(p, e.to_string()))?;
                self.ws();
                let p = self.pos;
                let (target, _, rees) = self.module_ref()?;
                let needs_rees = !matches!(thm, Thm::Thm31 | Thm::LemVanish);
                if needs_rees && rees.is_none() && !self.is_rees_ring(&target) {
                    return Err(self.err_at(p, format!("`{}` needs a Rees declaration, `{target}` is not one", thm.as_str())));
                }
                if thm == Thm::Lem44 && rees.is_some_and(|r| r != 1) {
                    return Err(self.err_at(p, "lem44 takes a Rees module of a single ideal"));
                }
                let rank = self.ring_of_module(&target);
                let mut opts = VerifyOpts::default();
                while self.peek().is_some_and(ident_start) {
                    let p = self.pos;
                    match self.ident()?.as_str() {
                        "window" => {
                            self.expect(b'=')?;
                            opts.window = Some(self.window(Some(rank))?);
                        }
                        "k" => {
                            self.expect(b'=')?;
                            opts.k = Some(self.range()?);
                        }
                        "bound" => {
                            self.expect(b'=')?;
                            let p = self.pos;
                            let b = self.int_tuple()?;
                            if rees.is_some_and(|r| r != b.len()) {
                                return Err(self.err_at(p, "bound has the wrong number of entries"));
                            }
                            opts.bound = Some(b);
                        }
                        w => return Err(self.err_at(p, format!("unknown option `{w}`"))),
                    }
                }
                StmtKind::Verify { thm, target, opts }
            }
            other => return Err(self.err_at(start, format!("unknown statement `{other}`"))),
        };
        self.expect(b';')?;
        Ok(Stmt { kind, line, col })
    }

    fn is_rees_ring(&self, name: &str) -> bool {
        self.rees_rings.contains(name)
    }

    fn ring_decl(&mut self) -> Result<StmtKind> {
        let (_, name) = self.fresh_name()?;
        self.expect(b'=')?;
        let p = self.pos;
        let def = match self.ident()?.as_str() {
            "poly" => {
                self.expect(b'(')?;
                self.keyword("char")?;
                self.expect(b'=')?;
                let c = self.int()?;
                if c < 0 {
                    return Err(self.err("characteristic must be nonnegative"));
                }
                let mut groups = Vec::new();
                let mut lex = false;
                let mut rank = None;
                while self.eat(b';') {
                    self.ws();
                    let gp = self.pos;
                    let first = self.ident()?;
                    if first == "order" && self.eat(b'=') {
                        let op = self.pos;
                        lex = match self.ident()?.as_str() {
                            "lex" => true,
                            "degrevlex" => false,
                            o => return Err(self.err_at(op, format!("unknown order `{o}`"))),
                        };
                        continue;
                    }
                    let mut names = vec![first];
                    while self.eat(b',') {
                        names.push(self.ident()?);
                    }
                    self.expect(b':')?;
                    self.keyword("deg")?;
                    self.expect(b'=')?;
                    let deg = self.int_tuple()?;
                    if *rank.get_or_insert(deg.len()) != deg.len() {
                        return Err(self.err_at(gp, "variable groups have degrees of different ranks"));
                    }
                    let mut weight = 1;
                    if self.eat(b',') {
                        self.keyword("weight")?;
                        self.expect(b'=')?;
                        weight = self.int()?;
                    }
                    groups.push(VarGroup { names, deg, weight });
                }
                self.expect(b')')?;
                let vars: Vec<String> = groups.iter().flat_map(|g| g.names.clone()).collect();
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return Err(self.err_at(p, format!("duplicate variable `{v}`")));
                    }
                }
                self.syms.insert(name.clone(), Sym::Ring(rank.unwrap_or(0), Some(vars)));
                RingDef::Poly { char: c as u64, groups, lex }
            }
            "quotient" => {
                self.expect(b'(')?;
                let (ring, rank, vars) = self.ring_ref()?;
                let mut gens = Vec::new();
                if self.eat(b';') {
                    gens = self.expr_list(b')', vars.as_deref())?;
                } else {
                    self.expect(b')')?;
                }
                self.syms.insert(name.clone(), Sym::Ring(rank, vars));
                RingDef::Quotient { ring, gens }
            }
            w => return Err(self.err_at(p, format!("unknown ring constructor `{w}`"))),
        };
        self.current_ring = Some(name.clone());
        Ok(StmtKind::Ring { name, def })
    }

    fn ideal_decl(&mut self) -> Result<StmtKind> {
        let (p, name) = self.fresh_name()?;
        self.expect(b'=')?;
        let save = self.pos;
        // the ring comes after the generators; look ahead for it first
        let _ = self.raw(b";");
        let mut ring = self.current_ring.clone();
        let tail = std::str::from_utf8(&self.src[save..self.pos]).unwrap();
        let mut explicit = None;
        if let Some(i) = tail.rfind(')') {
            let rest = tail[i + 1..].trim();
            if let Some(r) = rest.strip_prefix("in") {
                explicit = Some(r.trim().to_string());
            }
        }
        self.pos = save;
        if let Some(r) = explicit {
            ring = Some(r);
        }
        let Some(ring) = ring else {
            self.expect(b'(')?;
            self.expr_list(b')', None)?;
            return Err(self.err_at(p, "ideal declared before any ring"));
        };
        let vars = match self.syms.get(&ring) {
            Some(Sym::Ring(_, v)) => v.clone(),
            _ => return Err(self.err_at(p, format!("`{ring}` is not a ring"))),
        };
        self.expect(b'(')?;
        let gens = self.expr_list(b')', vars.as_deref())?;
        if self.peek() != Some(b';') {
            self.keyword("in")?;
            self.ring_ref()?;
        }
        self.syms.insert(name.clone(), Sym::Ideal(ring.clone()));
        Ok(StmtKind::Ideal { name, ring, gens })
    }

    fn module_decl(&mut self) -> Result<StmtKind> {
        let (_, name) = self.fresh_name()?;
        self.expect(b'=')?;
        let p = self.pos;
        let ctor = self.ident()?;
        self.expect(b'(')?;
        let (def, rank, rees) = match ctor.as_str() {
            "ring" => {
                let (r, rank, _) = self.ring_ref()?;
                (ModuleDef::Ring(r), rank, None)
            }
            "cyclic" => {
                let (r, rank, vars) = self.ring_ref()?;
                // the generator list consumes the closing parenthesis
                let gens = if self.eat(b';') {
                    self.expr_list(b')', vars.as_deref())?
                } else {
                    self.expect(b')')?;
                    Vec::new()
                };
                return Ok(self.finish_module(name, ModuleDef::Cyclic(r, gens), rank, None));
            }
            "free" => {
                let (r, rank, _) = self.ring_ref()?;
                self.expect(b';')?;
                let mut degs = vec![self.deg_lit(Some(rank))?];
                while self.eat(b',') {
                    degs.push(self.deg_lit(Some(rank))?);
                }
                (ModuleDef::Free(r, degs), rank, None)
            }
            "coker" => {
                let (r, rank, vars) = self.ring_ref()?;
                self.expect(b';')?;
                let mut degs = vec![self.deg_lit(Some(rank))?];
                while self.eat(b',') {
                    degs.push(self.deg_lit(Some(rank))?);
                }
                let mut cols = Vec::new();
                if self.eat(b';') {
                    loop {
                        self.ws();
                        let cp = self.pos;
                        self.expect(b'[')?;
                        let col = self.expr_list(b']', vars.as_deref())?;
                        if col.len() != degs.len() {
                            return Err(self.err_at(cp, format!("relation has {} entries, expected {}", col.len(), degs.len())));
                        }
                        cols.push(col);
                        if !self.eat(b',') {
                            break;
                        }
                    }
                }
                (ModuleDef::Coker(r, degs, cols), rank, None)
            }
            "shift" => {
                let (m, rank, rees) = self.module_ref()?;
                self.expect(b';')?;
                let d = self.deg_lit(Some(rank))?;
                (ModuleDef::Shift(m, d), rank, rees)
            }
            "sum" => {
                let (m, rank, _) = self.module_ref()?;
                let mut parts = vec![m];
                while self.eat(b',') {
                    let p = self.pos;
                    let (m, r2, _) = self.module_ref()?;
                    if r2 != rank {
                        return Err(self.err_at(p, "summands over rings of different rank"));
                    }
                    parts.push(m);
                }
                (ModuleDef::Sum(parts), rank, None)
            }
            "irrelevant" => {
                let (m, rank, _) = self.module_ref()?;
                (ModuleDef::Irrelevant(m), rank + 1, None)
            }
            w => return Err(self.err_at(p, format!("unknown module constructor `{w}`"))),
        };
        self.expect(b')')?;
        Ok(self.finish_module(name, def, rank, rees))
    }

    fn finish_module(&mut self, name: String, def: ModuleDef, rank: usize, rees: Option<usize>) -> StmtKind {
        self.syms.insert(name.clone(), Sym::Module(rank, rees));
        StmtKind::Module { name, def }
    }

    fn rees_decl(&mut self, multi: bool) -> Result<StmtKind> {
        let (_, name) = self.fresh_name()?;
        self.expect(b'=')?;
        self.keyword("rees")?;
        self.expect(b'(')?;
        let (p, base, sym) = self.reference()?;
        let base_ring = match (&sym, multi) {
            (Sym::Ring(_, _), _) => base.clone(),
            (Sym::Module(..), true) => String::new(),
            _ => return Err(self.err_at(p, format!("`{base}` cannot carry a Rees construction"))),
        };
        self.expect(b';')?;
        let mut ideals = Vec::new();
        loop {
            let (p, id, sym) = self.reference()?;
            match sym {
                Sym::Ideal(r) if base_ring.is_empty() || r == base_ring => {}
                Sym::Ideal(r) => return Err(self.err_at(p, format!("ideal `{id}` lives in `{r}`, not `{base_ring}`"))),
                _ => return Err(self.err_at(p, format!("`{id}` is not an ideal"))),
            }
            ideals.push(id);
            if !self.eat(b',') {
                break;
            }
        }
        self.expect(b')')?;
        let r = ideals.len();
        if multi {
            self.syms.insert(name.clone(), Sym::Module(r, Some(r)));
            Ok(StmtKind::MultiRees { name, base, ideals })
        } else {
            self.syms.insert(name.clone(), Sym::Ring(r, None));
            self.rees_rings.insert(name.clone());
            Ok(StmtKind::Rees { name, base, ideals })
        }
    }

    fn recover(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos] != b';' {
            self.pos += 1;
        }
        if self.pos < self.src.len() {
            self.pos += 1;
        }
    }
}

/// Parses and validates a session; on failure returns every diagnostic.
pub fn parse_session(text: &str) -> std::result::Result<Session, Vec<Error>> {
    let mut p = Parser::new(text);
    let mut stmts = Vec::new();
    let mut diags = Vec::new();
    while p.peek().is_some() {
        match p.statement() {
            Ok(s) => stmts.push(s),
            Err(e) => {
                diags.push(e);
                p.recover();
            }
        }
    }
    if diags.is_empty() {
        Ok(Session { stmts })
    } else {
        Err(diags)
    }
}

// --------------------------------------------------------------- printing

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn tuple(xs: &[i64]) -> String {
    format!("({})", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

impl fmt::Display for DegLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", tuple(&self.md))?;
        if let Some(w) = self.wt {
            write!(f, "@{w}")?;
        }
        Ok(())
    }
}

pub fn format_window(w: &Window) -> String {
    let mut s = format!("{}..{}", tuple(&w.lo.0), tuple(&w.hi.0));
    if let Some((a, b)) = w.wt {
        write!(s, "@{a}..{b}").unwrap();
    }
    s
}

/// Parses a window literal such as `(-3,-3)..(3,3)` or `(0)..(2)@0..6`.
pub fn parse_window(text: &str) -> Result<Window> {
    let mut p = Parser::new(text);
    let w = p.window(None)?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after window"));
    }
    Ok(w)
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StmtKind::Ring { name, def: RingDef::Poly { char, groups, lex } } => {
                write!(f, "ring {name} = poly(char={char}")?;
                for g in groups {
                    write!(f, "; {} : deg={}, weight={}", g.names.join(", "), tuple(&g.deg), g.weight)?;
                }
                if *lex {
                    write!(f, "; order=lex")?;
                }
                write!(f, ");")
            }
            StmtKind::Ring { name, def: RingDef::Quotient { ring, gens } } => {
                write!(f, "ring {name} = quotient({ring}; {});", join(gens))
            }
            StmtKind::Ideal { name, ring, gens } => write!(f, "ideal {name} = ({}) in {ring};", join(gens)),
            StmtKind::Module { name, def } => {
                write!(f, "module {name} = ")?;
                match def {
                    ModuleDef::Ring(r) => write!(f, "ring({r})"),
                    ModuleDef::Cyclic(r, g) if g.is_empty() => write!(f, "cyclic({r})"),
                    ModuleDef::Cyclic(r, g) => write!(f, "cyclic({r}; {})", join(g)),
                    ModuleDef::Free(r, d) => write!(f, "free({r}; {})", join(d)),
                    ModuleDef::Coker(r, d, cols) => {
                        write!(f, "coker({r}; {}", join(d))?;
                        if !cols.is_empty() {
                            let cs: Vec<String> = cols.iter().map(|c| format!("[{}]", join(c))).collect();
                            write!(f, "; {}", cs.join(", "))?;
                        }
                        write!(f, ")")
                    }
                    ModuleDef::Shift(m, d) => write!(f, "shift({m}; {d})"),
                    ModuleDef::Sum(ms) => write!(f, "sum({})", ms.join(", ")),
                    ModuleDef::Irrelevant(m) => write!(f, "irrelevant({m})"),
                }?;
                write!(f, ";")
            }
            StmtKind::Rees { name, base, ideals } => write!(f, "rees {name} = rees({base}; {});", ideals.join(", ")),
            StmtKind::MultiRees { name, base, ideals } => {
                write!(f, "multirees {name} = rees({base}; {});", ideals.join(", "))
            }
            StmtKind::Diagonal { name, of } => write!(f, "diagonal {name} = diagonal({of});"),
            StmtKind::Check { what, target } => {
                let w = match what {
                    CheckKind::Invariants => "invariants",
                    CheckKind::Hilbert => "hilbert",
                    CheckKind::Routes => "routes",
                    CheckKind::Identity => "identity",
                };
                write!(f, "check {w} {target};")
            }
            StmtKind::Table { kind, target, i, window } => {
                let k = match kind {
                    TableKind::Sheaf => "sheaf",
                    TableKind::LocalIrrelevant => "local",
                    TableKind::LocalMaximal => "maximal",
                };
                write!(f, "table {k} {target} i={}..{}", i.0, i.1)?;
                if let Some(w) = window {
                    write!(f, " window={}", format_window(w))?;
                }
                write!(f, ";")
            }
            StmtKind::Verify { thm, target, opts } => {
                write!(f, "verify {} {target}", thm.as_str())?;
                if let Some(w) = &opts.window {
                    write!(f, " window={}", format_window(w))?;
                }
                if let Some((a, b)) = opts.k {
                    write!(f, " k={a}..{b}")?;
                }
                if let Some(b) = &opts.bound {
                    write!(f, " bound={}", tuple(b))?;
                }
                write!(f, ";")
            }
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

// ------------------------------------------------------------- evaluation

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Overrides the characteristic of every ring.
    pub char: Option<u64>,
    /// Window for directives that do not give one.
    pub window: Option<Window>,
    pub margin: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { char: None, window: None, margin: 1 }
    }
}

impl RunOptions {
    /// Canonical text of the options, part of cache keys.
    pub fn fingerprint(&self) -> String {
        format!(
            "char={};window={};margin={}",
            self.char.map_or("-".into(), |c| c.to_string()),
            self.window.as_ref().map_or("-".into(), format_window),
            self.margin
        )
    }
}

impl Session {
    /// The characteristic shared by all polynomial rings.
    pub fn characteristic(&self, opts: &RunOptions) -> Result<u64> {
        if let Some(c) = opts.char {
            return Ok(c);
        }
        let mut found: Option<(u64, usize)> = None;
        for s in &self.stmts {
            if let StmtKind::Ring { def: RingDef::Poly { char, .. }, .. } = &s.kind {
                match found {
                    Some((c, _)) if c != *char => {
                        return Err(Error::Parse {
                            line: s.line,
                            col: s.col,
                            msg: format!("characteristic {char} differs from {c} declared earlier"),
                        })
                    }
                    _ => found = Some((*char, s.line)),
                }
            }
        }
        Ok(found.map_or(0, |f| f.0))
    }
}

/// A Rees base module with its ideals.
type ReesArgs<F> = (Presentation<F>, Vec<Vec<Poly<<F as Field>::Elem>>>);

#[allow(clippy::large_enum_variant)]
enum Val<F: Field> {
    Ring(Arc<GradedRing<F>>),
    Ideal(Arc<GradedRing<F>>, Vec<Poly<F::Elem>>),
    Module(Presentation<F>),
    Rees { base: Presentation<F>, ideals: Vec<Vec<Poly<F::Elem>>>, built: Result<ReesModule<F>> },
}

struct Env<F: Field> {
    field: F,
    vals: HashMap<String, Result<Val<F>>>,
}

fn at(s: &Stmt, e: Error) -> Error {
    match e {
        Error::Parse { line: 0, msg, .. } => Error::Parse { line: s.line, col: s.col, msg },
        e => e,
    }
}

impl<F: Field> Env<F> {
    fn get(&self, name: &str) -> Result<&Val<F>> {
        match self.vals.get(name) {
            Some(Ok(v)) => Ok(v),
            Some(Err(e)) => Err(e.clone()),
            None => Err(Error::Parse { line: 0, col: 0, msg: format!("unknown identifier `{name}`") }),
        }
    }

    fn ring(&self, name: &str) -> Result<Arc<GradedRing<F>>> {
        match self.get(name)? {
            Val::Ring(r) => Ok(Arc::clone(r)),
            Val::Rees { built, .. } => {
                let rm = built.as_ref().map_err(|e| e.clone())?;
                GradedRing::quotient(Arc::clone(&rm.rees.ring), rm.rees.defining_ideal.clone())
            }
            _ => Err(Error::Unsupported(format!("`{name}` is not a ring"))),
        }
    }

    fn module(&self, name: &str) -> Result<Presentation<F>> {
        match self.get(name)? {
            Val::Module(m) => Ok(m.clone()),
            Val::Ring(r) => Presentation::cyclic(Arc::clone(&r.poly), &r.ideal),
            Val::Rees { built, .. } => Ok(built.as_ref().map_err(|e| e.clone())?.module.clone()),
            Val::Ideal(..) => Err(Error::Unsupported(format!("`{name}` is an ideal, not a module"))),
        }
    }

    fn polys(&self, r: &PolyRing<F>, gens: &[Expr]) -> Result<Vec<Poly<F::Elem>>> {
        let out: Vec<_> = gens.iter().map(|g| r.from_expr(g)).collect::<Result<_>>()?;
        for p in &out {
            r.poly_degree(p)?;
        }
        Ok(out)
    }

    fn rees_inputs(&self, base: &str, ideals: &[String]) -> Result<ReesArgs<F>> {
        let n = self.module(base)?;
        let mut out = Vec::new();
        for id in ideals {
            match self.get(id)? {
                Val::Ideal(r, gens) => {
                    if !r.poly.same_shape(&n.ring) {
                        return Err(Error::RingMismatch);
                    }
                    out.push(gens.clone());
                }
                _ => return Err(Error::Unsupported(format!("`{id}` is not an ideal"))),
            }
        }
        Ok((n, out))
    }

    fn declare(&mut self, s: &Stmt) {
        let (name, val) = match &s.kind {
            StmtKind::Ring { name, def } => (name, self.ring_val(def)),
            StmtKind::Ideal { name, ring, gens } => (
                name,
                self.ring(ring).and_then(|r| {
                    let g = self.polys(&r.poly, gens)?;
                    Ok(Val::Ideal(r, g))
                }),
            ),
            StmtKind::Module { name, def } => (name, self.module_val(def).map(Val::Module)),
            StmtKind::Rees { name, base, ideals } | StmtKind::MultiRees { name, base, ideals } => (
                name,
                self.rees_inputs(base, ideals).map(|(n, ids)| {
                    let built = rees_module_presentation(&n, &ids);
                    Val::Rees { base: n, ideals: ids, built }
                }),
            ),
            StmtKind::Diagonal { name, of } => (
                name,
                match self.get(of) {
                    Ok(Val::Rees { built: Ok(rm), .. }) => diagonal_of(rm).map(|(d, _)| Val::Rees {
                        base: d.base_module.clone(),
                        ideals: d.rees.ideals.clone(),
                        built: Ok(d),
                    }),
                    Ok(Val::Rees { built: Err(e), .. }) => Err(e.clone()),
                    Ok(_) => Err(Error::Unsupported(format!("`{of}` is not a Rees object"))),
                    Err(e) => Err(e),
                },
            ),
            _ => return,
        };
        self.vals.insert(name.clone(), val.map_err(|e| at(s, e)));
    }

    fn ring_val(&self, def: &RingDef) -> Result<Val<F>> {
        match def {
            RingDef::Poly { groups, lex, .. } => {
                let vars = groups
                    .iter()
                    .flat_map(|g| g.names.iter().map(move |n| (n.clone(), Multidegree(g.deg.clone()), g.weight)))
                    .collect();
                let order = if *lex { MonoOrder::Lex } else { MonoOrder::Degrevlex };
                Ok(Val::Ring(GradedRing::free(Arc::new(PolyRing::new(self.field.clone(), vars, order)?))))
            }
            RingDef::Quotient { ring, gens } => {
                let r = self.ring(ring)?;
                let mut ideal = r.ideal.clone();
                ideal.extend(self.polys(&r.poly, gens)?);
                Ok(Val::Ring(GradedRing::quotient(Arc::clone(&r.poly), ideal)?))
            }
        }
    }

    fn module_val(&self, def: &ModuleDef) -> Result<Presentation<F>> {
        match def {
            ModuleDef::Ring(r) => {
                let r = self.ring(r)?;
                Presentation::cyclic(Arc::clone(&r.poly), &r.ideal)
            }
            ModuleDef::Cyclic(r, gens) => {
                let r = self.ring(r)?;
                let mut ideal = r.ideal.clone();
                ideal.extend(self.polys(&r.poly, gens)?);
                Presentation::cyclic(Arc::clone(&r.poly), &ideal)
            }
            ModuleDef::Free(r, degs) => {
                let r = self.ring(r)?;
                Presentation::over_quotient(&r, degs.iter().map(DegLit::degree).collect(), Vec::new())
            }
            ModuleDef::Coker(r, degs, cols) => {
                let r = self.ring(r)?;
                let mut rels = Vec::new();
                for col in cols {
                    let mut v = Vector::zero();
                    for (c, e) in col.iter().enumerate() {
                        let p = r.poly.from_expr(e)?;
                        let ctx = r.poly.ctx();
                        v.terms.extend(ctx.resort(&p).terms.into_iter().map(|mut t| {
                            t.comp = c as u32;
                            t
                        }));
                    }
                    rels.push(v);
                }
                Presentation::over_quotient(&r, degs.iter().map(DegLit::degree).collect(), rels)
            }
            ModuleDef::Shift(m, d) => Ok(self.module(m)?.shift_up(&d.degree())),
            ModuleDef::Sum(ms) => {
                let mut acc = self.module(&ms[0])?;
                for m in &ms[1..] {
                    acc = acc.direct_sum(&self.module(m)?)?;
                }
                Ok(acc)
            }
            ModuleDef::Irrelevant(m) => Ok(irrelevant_rees(&self.module(m)?)?.module),
        }
    }

    fn rees_args(&self, name: &str) -> Result<ReesArgs<F>> {
        match self.get(name)? {
            Val::Rees { base, ideals, .. } => Ok((base.clone(), ideals.clone())),
            _ => Err(Error::Unsupported(format!("`{name}` is not a Rees declaration"))),
        }
    }

    fn directive(&self, s: &Stmt, opts: &RunOptions) -> Result<VerificationReport> {
        let margin = opts.margin;
        match &s.kind {
            StmtKind::Check { what, target } => {
                let m = self.module(target)?;
                match what {
                    CheckKind::Invariants => invariants_report(&m, target),
                    CheckKind::Hilbert => {
                        let mut rep = VerificationReport::new("hilbert", target, self.field.characteristic());
                        let rm = match self.get(target)? {
                            Val::Rees { built, .. } => built.clone()?,
                            _ => return Err(Error::Unsupported(format!("`{target}` is not a Rees module"))),
                        };
                        let res = rm.hilbert_certificate(2, 4);
                        rep.window = Some("n=[0,2] weights=[w0,w0+4]".into());
                        let ok = rep.record("hilbert", None, None, res.is_ok(), true, "certificate");
                        if let Err(e) = res {
                            rep.note = Some(e.to_string());
                        }
                        rep.verdict = if ok { Verdict::Pass } else { Verdict::Violated };
                        Ok(rep)
                    }
                    CheckKind::Routes => harness::verify_dual_routes(&m, target, opts.window.as_ref(), margin),
                    CheckKind::Identity => harness::verify_identity(&m, target, opts.window.as_ref(), margin),
                }
            }
            StmtKind::Table { kind, target, i, window } => {
                let m = self.module(target)?;
                let engine = CohomologyEngine::new(&m, margin);
                let win = window
                    .clone()
                    .or_else(|| opts.window.clone())
                    .unwrap_or_else(|| crate::cohomology::default_window(&engine));
                let t = cohomology_table(&engine, *kind, i.0..=i.1, &win)?;
                let mut rep = VerificationReport::new("table", target, self.field.characteristic());
                rep.window = Some(win.describe());
                let check = match kind {
                    TableKind::Sheaf => "sheaf",
                    TableKind::LocalIrrelevant => "local-irrelevant",
                    TableKind::LocalMaximal => "local-maximal",
                };
                rep.add_mode(t.mode.as_str());
                for ((i, sel), cell) in &t.entries {
                    rep.record(check, Some(*i), Some(sel.to_csv()), cell.dim, cell.dim, t.mode.as_str());
                }
                Ok(rep)
            }
            StmtKind::Verify { thm, target, opts: vo } => {
                let window = vo.window.as_ref().or(opts.window.as_ref());
                match thm {
                    Thm::Thm31 => harness::verify_main_theorem(&self.module(target)?, target, window, margin),
                    Thm::LemVanish => {
                        let (a, b) = vo.k.unwrap_or((0, 2));
                        harness::verify_t_vanishing(&self.module(target)?, target, window, a..=b, margin)
                    }
                    Thm::Lem41 => {
                        let (n, ids) = self.rees_args(target)?;
                        harness::verify_rees_a(&n, &ids, target)
                    }
                    Thm::Thm42 => {
                        let (n, ids) = self.rees_args(target)?;
                        harness::verify_rees_transfer(&n, &ids, target)
                    }
                    Thm::Lem44 => {
                        let (n, ids) = self.rees_args(target)?;
                        harness::verify_ell_vanishing(&n, &ids[0], target, margin)
                    }
                    Thm::Lem45 => {
                        let (n, ids) = self.rees_args(target)?;
                        let bound = vo.bound.clone().unwrap_or_else(|| vec![2; ids.len()]);
                        harness::verify_colon_identities(&n, &ids, &Multidegree(bound), target)
                    }
                    Thm::Thm46 => {
                        let (n, ids) = self.rees_args(target)?;
                        harness::verify_theorem46(&n, &ids, target)
                    }
                }
            }
            _ => unreachable!("declarations are not directives"),
        }
    }
}

fn invariants_report<F: Field>(m: &Presentation<F>, target: &str) -> Result<VerificationReport> {
    let engine = CohomologyEngine::new(m, 1);
    let rec = invariants_from(&engine.module, &engine.res)?;
    let mut rep = VerificationReport::new("invariants", target, rec.characteristic);
    let show = |x: &Option<Multidegree>| x.as_ref().map_or("empty".to_string(), |d| d.to_csv());
    let pd = InvariantRecord::render_opt(&rec.pd);
    let depth = InvariantRecord::render_opt(&rec.depth);
    let dim = InvariantRecord::render_opt(&rec.dim);
    for (k, v) in [
        ("dim", dim),
        ("depth", depth),
        ("pd", pd),
        ("cohen-macaulay", rec.cm.to_string()),
        ("v", show(&rec.v)),
        ("a", show(&rec.a)),
    ] {
        rep.record(k, None, None, &v, &v, "invariant");
    }
    if let (Some(d), Some(p)) = (rec.depth, rec.pd) {
        let n = m.ring.nvars() as i64;
        rep.record("auslander-buchsbaum", None, None, d + p, n, "invariant");
    }
    for ((i, deg), b) in engine.res.betti() {
        rep.record("betti", Some(i as i64), Some(DegSelLike(&deg).to_string()), b, b, "resolution");
    }
    Ok(rep)
}

struct DegSelLike<'a>(&'a Degree);

impl fmt::Display for DegSelLike<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.0.md.to_csv(), self.0.wt)
    }
}

fn run_with<F: Field>(field: F, session: &Session, opts: &RunOptions) -> Vec<VerificationReport> {
    let mut env = Env { field, vals: HashMap::new() };
    let ch = env.field.characteristic();
    let mut reports = Vec::new();
    for s in &session.stmts {
        match &s.kind {
            StmtKind::Check { target, .. } | StmtKind::Table { target, .. } | StmtKind::Verify { target, .. } => {
                let theorem = match &s.kind {
                    StmtKind::Verify { thm, .. } => thm.as_str().to_string(),
                    StmtKind::Table { .. } => "table".into(),
                    _ => "check".into(),
                };
                let rep = env.directive(s, opts).unwrap_or_else(|e| {
                    let e = at(s, e);
                    let mut rep = VerificationReport::error(&theorem, target, ch, &e);
                    if let Error::Gate(w) = &e {
                        rep.verdict = Verdict::HypothesisNotMet;
                        rep.hypotheses.push(crate::report::Hypothesis::checked("gate", false, Some(w.clone())));
                    }
                    rep
                });
                reports.push(rep);
            }
            _ => env.declare(s),
        }
    }
    reports
}

/// Evaluates every directive in order. Declaration errors surface in the
/// reports of the directives that use them.
pub fn run_session(session: &Session, opts: &RunOptions) -> Result<Vec<VerificationReport>> {
    match session.characteristic(opts)? {
        0 => Ok(run_with(Rationals, session, opts)),
        p => Ok(run_with(PrimeField::new(p)?, session, opts)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PIPELINE: &str = "\
ring A = poly(char=0; a,b : deg=(0), weight=1);
ideal I1 = (a);
ideal I2 = (a, b);
module N = ring(A);
multirees M = rees(N; I1, I2); verify thm42 M;
";

    #[test]
    fn spec_examples_parse() {
        assert!(parse_session("ring A = poly(char=0; a,b : deg=(0), weight=1);").is_ok());
        assert!(parse_session(PIPELINE).is_ok());
        let diags = parse_session("ring A = poly(char=0; a,b : deg=(0), weight=1);\nideal I = (a, );").unwrap_err();
        assert_eq!(diags.len(), 1);
        assert!(diags[0].to_string().contains("empty generator at line 2"), "{}", diags[0]);
        let diags = parse_session("ideal I = (a, );").unwrap_err();
        assert!(diags[0].to_string().contains("line 1"));
    }

    #[test]
    fn diagnostics() {
        let src = "ring A = poly(char=0; a,b : deg=(0));\nideal I = (c);\nideal I = (a);\nmodule N = free(A; (0,1));\nverify lem41 A2;\n";
        let diags = parse_session(src).unwrap_err();
        let msgs: Vec<String> = diags.iter().map(|d| d.to_string()).collect();
        assert_eq!(msgs.len(), 3, "{msgs:?}");
        assert!(msgs[0].contains("2:") && msgs[0].contains("unknown identifier `c`"));
        assert!(msgs[1].contains("4:") && msgs[1].contains("rank 1"));
        assert!(msgs[2].contains("5:") && msgs[2].contains("unknown identifier `A2`"));
        let dup = parse_session("ring A = poly(char=0; a : deg=(0));\nring A = poly(char=0; b : deg=(0));").unwrap_err();
        assert!(dup[0].to_string().contains("duplicate name"));
    }

    #[test]
    fn round_trip() {
        let src = "\
# comment
ring S = poly(char=32003; x0, x1 : deg=(1,0); y0,y1 : deg=(0,1); order=lex);
ring Q = quotient(S; x0*y0 - x1*y1);
module M = shift(ring(S); (1,1));
";
        assert!(parse_session(src).is_err());
        let src = "\
ring S = poly(char=32003; x0, x1 : deg=(1,0); y0,y1 : deg=(0,1); order=lex);
ring Q = quotient(S; x0*y0 - x1*y1);
module O = ring(S);
module M = shift(O; (1,1));
module D = sum(O, M);
module C = coker(S; (0,0), (1,0)@1; [x0, -y0^2]);
module K = cyclic(Q; x0^2, (x1 + y0)*3);
module Z = cyclic(Q);
ideal E = () in S;
table sheaf M i=0..2 window=(-1,-1)..(1,1);
verify thm31 D window=(0,0)..(2,2)@0..4;
verify lem-vanish O k=0..1;
";
        let s = parse_session(src).unwrap();
        let printed = s.to_string();
        let again = parse_session(&printed).unwrap();
        assert_eq!(s, again);
        assert_eq!(printed, again.to_string());
    }

    #[test]
    fn run_pipeline() {
        let s = parse_session(PIPELINE).unwrap();
        let reps = run_session(&s, &RunOptions { char: Some(32003), ..Default::default() }).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].verdict, Verdict::Pass);
        let s = parse_session(
            "ring A = poly(char=0; a,b : deg=(0));\nideal I = (1);\nmultirees M = rees(ring(A); I);\n",
        );
        assert!(s.is_err());
    }
}
