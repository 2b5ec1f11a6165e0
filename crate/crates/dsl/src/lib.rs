//! The `.habw` input language.
//!
//! A file declares one ring, any number of modules over it, expectation
//! blocks and theorem-check directives:
//!
//! ```text
//! ring R = GF(32003)[x,y]/(x^2, x*y);
//! module M = quotient (x, y);
//! expect M { depth = 0 @derived; gdim = infinite @derived; }
//! check ab M;
//! ```

mod ast;
mod elaborate;
mod lexer;
mod parser;
mod pretty;

pub use ast::{Check, Directive, Expectation, ExpectBlock, Expr, FieldSpec, Item, ModuleDecl, ModuleExpr, Pos, RingDecl, SourceFile, Value};
pub use elaborate::{elaborate, to_polynomial, Elaborated};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, Diagnostic, MODULE_KEYS, RING_KEYS};
pub use pretty::pretty;
