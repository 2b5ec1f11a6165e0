use std::collections::HashSet;
use std::fmt;

use habw_core::exactalg::{OrderKind, PrimeField, MAX_VARS};
use num_bigint::BigUint;

use crate::ast::*;
use crate::lexer::{tokenize, Token, TokenKind};

/// A parse or validation error at a source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: u32,
    pub col: u32,
    pub message: String,
    /// Tokens that would have been accepted here; empty for semantic errors.
    pub expected: Vec<String>,
}

impl Diagnostic {
    pub fn new(pos: Pos, message: String, expected: Vec<String>) -> Self {
        Diagnostic {
            line: pos.line,
            col: pos.col,
            message,
            expected,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

pub const MODULE_KEYS: &[&str] = &["depth", "gclass", "gdim", "pd"];
pub const RING_KEYS: &[&str] = &["cm", "depth", "dim", "gorenstein", "irreducible", "socle"];

const KEYWORDS: &[&str] = &[
    "GF", "QQ", "ab", "by", "check", "coker", "degrees", "depth_ses", "dirlim", "dual", "expect", "false", "fpid",
    "free", "gorenstein", "horseshoe", "ideal", "in", "infinite", "irreducible", "module", "order", "quotient",
    "residue", "ring", "rxses", "chgrings", "sum", "syzygy", "true", "undetermined",
];

const MAX_EXPONENT: u32 = 1000;
const MAX_NESTING: usize = 200;
const MAX_RANK: usize = 64;

/// Parses and validates a source file.
pub fn parse(src: &str) -> Result<SourceFile, Diagnostic> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        at: 0,
        vars: Vec::new(),
        ring_name: String::new(),
        modules: HashSet::new(),
        nesting: 0,
    };
    p.file()
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    vars: Vec<String>,
    ring_name: String,
    modules: HashSet<String>,
    nesting: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn pos(&self) -> Pos {
        self.peek().pos
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> PResult<T> {
        let t = self.peek();
        Err(Diagnostic::new(
            t.pos,
            format!("unexpected {}", t.kind.describe()),
            expected.iter().map(|s| s.to_string()).collect(),
        ))
    }

    fn semantic<T>(&self, pos: Pos, message: String) -> PResult<T> {
        Err(Diagnostic::new(pos, message, Vec::new()))
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().kind == TokenKind::Sym(c)
    }

    fn at_kw(&self, kw: &str) -> bool {
        matches!(&self.peek().kind, TokenKind::Ident(s) if s == kw)
    }

    fn sym(&mut self, c: char) -> PResult<()> {
        if self.at_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    fn kw(&mut self, kw: &str) -> PResult<()> {
        if self.at_kw(kw) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("`{kw}`")])
        }
    }

    /// A non-keyword identifier.
    fn name(&mut self, what: &str) -> PResult<(String, Pos)> {
        let pos = self.pos();
        match &self.peek().kind {
            TokenKind::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                self.bump();
                Ok((s, pos))
            }
            TokenKind::Ident(s) => {
                let s = s.clone();
                self.semantic(pos, format!("`{s}` is a keyword and cannot be used as {what}"))
            }
            _ => self.fail(&[what]),
        }
    }

    fn uint(&mut self, what: &str, max: u64) -> PResult<u64> {
        let pos = self.pos();
        match &self.peek().kind {
            TokenKind::Int(s) => {
                let s = s.clone();
                self.bump();
                match s.parse::<u64>() {
                    Ok(v) if v <= max => Ok(v),
                    _ => self.semantic(pos, format!("{what} {s} is out of range (at most {max})")),
                }
            }
            _ => self.fail(&[what]),
        }
    }

    fn int(&mut self, what: &str) -> PResult<i64> {
        let neg = if self.at_sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let v = self.uint(what, i32::MAX as u64)? as i64;
        Ok(if neg { -v } else { v })
    }

    fn file(&mut self) -> PResult<SourceFile> {
        if !self.at_kw("ring") {
            return self.fail(&["`ring`"]);
        }
        let ring = self.ring_decl()?;
        let mut items = Vec::new();
        loop {
            if self.peek().kind == TokenKind::Eof {
                break;
            }
            if self.at_kw("module") {
                items.push(Item::Module(self.module_decl()?));
            } else if self.at_kw("expect") {
                items.push(Item::Expect(self.expect_block()?));
            } else if self.at_kw("check") {
                items.push(Item::Check(self.check()?));
            } else if self.at_kw("ring") {
                return self.semantic(self.pos(), "only one ring may be declared per file".into());
            } else {
                return self.fail(&["`module`", "`expect`", "`check`", "end of input"]);
            }
        }
        Ok(SourceFile { ring, items })
    }

    fn ring_decl(&mut self) -> PResult<RingDecl> {
        let pos = self.pos();
        self.kw("ring")?;
        let (name, _) = self.name("a ring name")?;
        self.sym('=')?;
        let field = if self.at_kw("QQ") {
            self.bump();
            FieldSpec::Rationals
        } else if self.at_kw("GF") {
            self.bump();
            self.sym('(')?;
            let ppos = self.pos();
            let p = self.uint("a prime", u64::MAX)?;
            if let Err(e) = PrimeField::new(p) {
                return self.semantic(ppos, e.to_string().replace("invalid coefficient field: ", ""));
            }
            self.sym(')')?;
            FieldSpec::Prime(p)
        } else {
            return self.fail(&["`GF`", "`QQ`"]);
        };
        self.sym('[')?;
        let mut vars = Vec::new();
        loop {
            let (v, vpos) = self.name("a variable name")?;
            if vars.contains(&v) {
                return self.semantic(vpos, format!("duplicate variable `{v}`"));
            }
            if v == name {
                return self.semantic(vpos, format!("variable `{v}` shadows the ring name"));
            }
            vars.push(v);
            if vars.len() > MAX_VARS {
                return self.semantic(vpos, format!("at most {MAX_VARS} variables are supported"));
            }
            if self.at_sym(',') {
                self.bump();
            } else if self.at_sym(']') {
                self.bump();
                break;
            } else {
                return self.fail(&["`,`", "`]`"]);
            }
        }
        self.vars = vars.clone();
        self.ring_name = name.clone();
        let ideal = if self.at_sym('/') {
            self.bump();
            self.sym('(')?;
            let polys = self.poly_list()?;
            self.sym(')')?;
            polys
        } else {
            Vec::new()
        };
        let order = if self.at_kw("order") {
            self.bump();
            let opos = self.pos();
            match &self.peek().kind {
                TokenKind::Ident(s) => {
                    let s = s.clone();
                    if OrderKind::from_name(&s).is_none() {
                        return self.semantic(opos, format!("unknown monomial order `{s}`"));
                    }
                    self.bump();
                    Some(s)
                }
                _ => return self.fail(&["`degrevlex`", "`deglex`", "`lex`"]),
            }
        } else {
            None
        };
        if !self.at_sym(';') {
            let mut exp = vec!["`;`", "`order`"];
            if ideal.is_empty() {
                exp.insert(0, "`/`");
            }
            return self.fail(&exp);
        }
        self.bump();
        Ok(RingDecl {
            name,
            field,
            vars,
            ideal,
            order,
            pos,
        })
    }

    fn declared(&self, pos: Pos, name: &str) -> PResult<()> {
        if self.modules.contains(name) {
            Ok(())
        } else {
            self.semantic(pos, format!("unknown module `{name}`"))
        }
    }

    fn module_ref(&mut self) -> PResult<String> {
        let (n, pos) = self.name("a module name")?;
        self.declared(pos, &n)?;
        Ok(n)
    }

    fn module_decl(&mut self) -> PResult<ModuleDecl> {
        let pos = self.pos();
        self.kw("module")?;
        let (name, npos) = self.name("a module name")?;
        if self.modules.contains(&name) {
            return self.semantic(npos, format!("module `{name}` is already declared"));
        }
        if name == self.ring_name || self.vars.contains(&name) {
            return self.semantic(npos, format!("module name `{name}` clashes with the ring"));
        }
        self.sym('=')?;
        let kpos = self.pos();
        let kind = match &self.peek().kind {
            TokenKind::Ident(s) => s.clone(),
            _ => String::new(),
        };
        let expr = match kind.as_str() {
            "coker" => {
                self.bump();
                self.sym('[')?;
                let mut rows = vec![self.poly_list()?];
                while self.at_sym(';') {
                    self.bump();
                    rows.push(self.poly_list()?);
                }
                self.sym(']')?;
                let width = rows[0].len();
                if rows.iter().any(|r| r.len() != width) {
                    return self.semantic(kpos, "matrix rows have different lengths".into());
                }
                if rows.len() > MAX_RANK {
                    return self.semantic(kpos, format!("at most {MAX_RANK} generators are supported"));
                }
                let degrees = self.degrees(rows.len())?;
                ModuleExpr::Coker { rows, degrees }
            }
            "free" => {
                self.bump();
                let rank = self.uint("a rank", MAX_RANK as u64)? as usize;
                let degrees = self.degrees(rank)?;
                ModuleExpr::Free { rank, degrees }
            }
            "quotient" | "ideal" => {
                self.bump();
                self.sym('(')?;
                let polys = self.poly_list()?;
                self.sym(')')?;
                if kind == "quotient" {
                    ModuleExpr::Quotient(polys)
                } else {
                    ModuleExpr::Ideal(polys)
                }
            }
            "residue" => {
                self.bump();
                ModuleExpr::Residue
            }
            "dual" => {
                self.bump();
                ModuleExpr::Dual(self.module_ref()?)
            }
            "syzygy" => {
                self.bump();
                let m = self.module_ref()?;
                let n = self.uint("a syzygy index", MAX_RANK as u64)? as usize;
                ModuleExpr::Syzygy(m, n)
            }
            "sum" => {
                self.bump();
                let a = self.module_ref()?;
                let b = self.module_ref()?;
                ModuleExpr::Sum(a, b)
            }
            _ => {
                return self.fail(&[
                    "`coker`",
                    "`free`",
                    "`quotient`",
                    "`ideal`",
                    "`residue`",
                    "`dual`",
                    "`syzygy`",
                    "`sum`",
                ])
            }
        };
        self.sym(';')?;
        self.modules.insert(name.clone());
        Ok(ModuleDecl { name, expr, pos })
    }

    fn degrees(&mut self, count: usize) -> PResult<Option<Vec<i32>>> {
        if !self.at_kw("degrees") {
            return Ok(None);
        }
        let pos = self.pos();
        self.bump();
        self.sym('(')?;
        let mut out = Vec::new();
        if !self.at_sym(')') {
            loop {
                out.push(self.int("a degree")? as i32);
                if self.at_sym(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.sym(')')?;
        if out.len() != count {
            return self.semantic(pos, format!("{} degrees given for {count} generators", out.len()));
        }
        Ok(Some(out))
    }

    fn expect_block(&mut self) -> PResult<ExpectBlock> {
        let pos = self.pos();
        self.kw("expect")?;
        let (target, tpos) = self.name("a module or ring name")?;
        let is_ring = target == self.ring_name;
        if !is_ring && !self.modules.contains(&target) {
            return self.semantic(tpos, format!("unknown module `{target}`"));
        }
        let keys = if is_ring { RING_KEYS } else { MODULE_KEYS };
        self.sym('{')?;
        let mut items: Vec<Expectation> = Vec::new();
        while !self.at_sym('}') {
            let kpos = self.pos();
            let key = match &self.peek().kind {
                TokenKind::Ident(s) if keys.contains(&s.as_str()) => s.clone(),
                _ => {
                    let mut exp: Vec<String> = keys.iter().map(|k| format!("`{k}`")).collect();
                    exp.push("`}`".into());
                    let exp: Vec<&str> = exp.iter().map(|s| s.as_str()).collect();
                    return self.fail(&exp);
                }
            };
            self.bump();
            if items.iter().any(|e| e.key == key) {
                return self.semantic(kpos, format!("`{key}` is given twice"));
            }
            self.sym('=')?;
            let vpos = self.pos();
            let value = self.value()?;
            check_value(&key, value).map_err(|m| Diagnostic::new(vpos, m, Vec::new()))?;
            if !self.at_sym('@') {
                return self.semantic(self.pos(), format!("expected value for `{key}` lacks a source tag `@<tag>`"));
            }
            self.bump();
            let (tag, _) = match &self.peek().kind {
                TokenKind::Ident(s) => {
                    let s = s.clone();
                    let p = self.pos();
                    self.bump();
                    (s, p)
                }
                _ => return self.fail(&["a source tag"]),
            };
            self.sym(';')?;
            items.push(Expectation {
                key,
                value,
                tag,
                pos: kpos,
            });
        }
        self.bump();
        Ok(ExpectBlock { target, items, pos })
    }

    fn value(&mut self) -> PResult<Value> {
        match &self.peek().kind {
            TokenKind::Ident(s) => {
                let v = match s.as_str() {
                    "infinite" => Value::Infinite,
                    "undetermined" => Value::Undetermined,
                    "true" => Value::Bool(true),
                    "false" => Value::Bool(false),
                    _ => return self.fail(&["an integer", "`infinite`", "`undetermined`", "`true`", "`false`"]),
                };
                self.bump();
                Ok(v)
            }
            TokenKind::Int(_) | TokenKind::Sym('-') => Ok(Value::Int(self.int("an integer")?)),
            _ => self.fail(&["an integer", "`infinite`", "`undetermined`", "`true`", "`false`"]),
        }
    }

    fn check(&mut self) -> PResult<Check> {
        let pos = self.pos();
        self.kw("check")?;
        let kind = match &self.peek().kind {
            TokenKind::Ident(s) => s.clone(),
            _ => String::new(),
        };
        let directive = match kind.as_str() {
            "ab" => {
                self.bump();
                Directive::Ab(self.module_ref()?)
            }
            "horseshoe" | "depth_ses" => {
                self.bump();
                let mut names = vec![self.module_ref()?];
                if !self.at_sym(';') {
                    names.push(self.module_ref()?);
                }
                if kind == "horseshoe" {
                    Directive::Horseshoe(names)
                } else {
                    Directive::DepthSes(names)
                }
            }
            "chgrings" => {
                self.bump();
                let module = self.module_ref()?;
                self.kw("by")?;
                let element = self.poly()?;
                Directive::ChangeOfRings { module, element }
            }
            "gorenstein" => {
                self.bump();
                if self.at_kw("by") {
                    self.bump();
                    Directive::Gorenstein(Some(self.poly()?))
                } else {
                    Directive::Gorenstein(None)
                }
            }
            "fpid" => {
                self.bump();
                Directive::Fpid
            }
            "irreducible" => {
                self.bump();
                Directive::Irreducible
            }
            "rxses" => {
                self.bump();
                let module = self.module_ref()?;
                self.kw("in")?;
                let vpos = self.pos();
                let (var, _) = self.name("a variable name")?;
                if !self.vars.contains(&var) {
                    return self.semantic(vpos, format!("unknown variable `{var}`"));
                }
                Directive::RxSes { module, var }
            }
            "dirlim" => {
                self.bump();
                let n = self.uint("a family size", MAX_VARS as u64)? as usize;
                Directive::DirectLimit(n)
            }
            _ => {
                return self.fail(&[
                    "`ab`",
                    "`horseshoe`",
                    "`depth_ses`",
                    "`chgrings`",
                    "`gorenstein`",
                    "`fpid`",
                    "`irreducible`",
                    "`rxses`",
                    "`dirlim`",
                ])
            }
        };
        self.sym(';')?;
        Ok(Check { directive, pos })
    }

    fn poly_list(&mut self) -> PResult<Vec<Expr>> {
        let mut out = vec![self.poly()?];
        while self.at_sym(',') {
            self.bump();
            out.push(self.poly()?);
        }
        Ok(out)
    }

    /// `poly := term (('+' | '-') term)*`
    fn poly(&mut self) -> PResult<Expr> {
        self.nesting += 1;
        if self.nesting > MAX_NESTING {
            return self.semantic(self.pos(), "expression nested too deeply".into());
        }
        let mut e = self.term()?;
        loop {
            if self.at_sym('+') {
                self.bump();
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.at_sym('-') {
                self.bump();
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                break;
            }
        }
        self.nesting -= 1;
        Ok(e)
    }

    /// `term := unary ('*' unary)*`
    fn term(&mut self) -> PResult<Expr> {
        let mut e = self.unary()?;
        while self.at_sym('*') {
            self.bump();
            e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    /// `unary := '-' unary | power`
    fn unary(&mut self) -> PResult<Expr> {
        if self.at_sym('-') {
            self.nesting += 1;
            if self.nesting > MAX_NESTING {
                return self.semantic(self.pos(), "expression nested too deeply".into());
            }
            self.bump();
            let e = Expr::Neg(Box::new(self.unary()?));
            self.nesting -= 1;
            return Ok(e);
        }
        self.power()
    }

    /// `power := atom ('^' INT)?`
    fn power(&mut self) -> PResult<Expr> {
        let base = self.atom()?;
        if self.at_sym('^') {
            self.bump();
            let e = self.uint("an exponent", MAX_EXPONENT as u64)? as u32;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        match &self.peek().kind {
            TokenKind::Int(s) => {
                let v: BigUint = s.parse().expect("lexer yields digits");
                self.bump();
                Ok(Expr::Int(v))
            }
            TokenKind::Ident(s) => {
                let s = s.clone();
                if !self.vars.contains(&s) {
                    return self.semantic(pos, format!("unknown variable `{s}`"));
                }
                self.bump();
                Ok(Expr::Var(s))
            }
            TokenKind::Sym('(') => {
                self.bump();
                let e = self.poly()?;
                self.sym(')')?;
                Ok(e)
            }
            _ => {
                let mut exp: Vec<String> = vec!["an integer".into(), "`(`".into(), "`-`".into()];
                exp.extend(self.vars.iter().map(|v| format!("`{v}`")));
                let exp: Vec<&str> = exp.iter().map(|s| s.as_str()).collect();
                self.fail(&exp)
            }
        }
    }
}

fn check_value(key: &str, v: Value) -> Result<(), String> {
    let ok = match key {
        "depth" | "dim" | "socle" => matches!(v, Value::Int(n) if n >= 0),
        "pd" | "gdim" => matches!(v, Value::Int(n) if n >= 0) || matches!(v, Value::Infinite | Value::Undetermined),
        _ => matches!(v, Value::Bool(_) | Value::Undetermined),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("value not allowed for `{key}`"))
    }
}
