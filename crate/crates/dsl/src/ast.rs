use num_bigint::BigUint;

/// 1-based line and column of a token.
///
/// Positions never take part in equality, so a reparsed pretty-print
/// compares equal to the original.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigUint),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub ideal: Vec<Expr>,
    pub order: Option<String>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    /// Rows are generators, columns are relations.
    Coker { rows: Vec<Vec<Expr>>, degrees: Option<Vec<i32>> },
    Free { rank: usize, degrees: Option<Vec<i32>> },
    Quotient(Vec<Expr>),
    Ideal(Vec<Expr>),
    Residue,
    Dual(String),
    Syzygy(String, usize),
    Sum(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecl {
    pub name: String,
    pub expr: ModuleExpr,
    pub pos: Pos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Infinite,
    Undetermined,
    Bool(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub key: String,
    pub value: Value,
    /// Where the value comes from, e.g. `derived` or `oracle`.
    pub tag: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectBlock {
    /// A module name or the ring name.
    pub target: String,
    pub items: Vec<Expectation>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Directive {
    Ab(String),
    /// One module: its cover sequence. Two: the split sequence.
    Horseshoe(Vec<String>),
    DepthSes(Vec<String>),
    ChangeOfRings { module: String, element: Expr },
    Gorenstein(Option<Expr>),
    Fpid,
    Irreducible,
    RxSes { module: String, var: String },
    DirectLimit(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub directive: Directive,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Module(ModuleDecl),
    Expect(ExpectBlock),
    Check(Check),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceFile {
    pub ring: RingDecl,
    pub items: Vec<Item>,
}

impl SourceFile {
    pub fn modules(&self) -> impl Iterator<Item = &ModuleDecl> {
        self.items.iter().filter_map(|i| match i {
            Item::Module(m) => Some(m),
            _ => None,
        })
    }

    pub fn expects(&self) -> impl Iterator<Item = &ExpectBlock> {
        self.items.iter().filter_map(|i| match i {
            Item::Expect(e) => Some(e),
            _ => None,
        })
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.items.iter().filter_map(|i| match i {
            Item::Check(c) => Some(c),
            _ => None,
        })
    }
}
