use std::fmt::{self, Write};

use crate::ast::*;

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 0)
    }
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(_) | Expr::Var(_) => 5,
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        f.write_char('(')?;
        write_expr(f, e, 0)?;
        return f.write_char(')');
    }
    match e {
        Expr::Int(v) => write!(f, "{v}"),
        Expr::Var(v) => f.write_str(v),
        Expr::Neg(a) => {
            f.write_char('-')?;
            write_expr(f, a, 3)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            write_expr(f, a, 1)?;
            f.write_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " })?;
            write_expr(f, b, 2)
        }
        Expr::Mul(a, b) => {
            write_expr(f, a, 2)?;
            f.write_char('*')?;
            write_expr(f, b, 3)
        }
        Expr::Pow(a, k) => {
            write_expr(f, a, 5)?;
            write!(f, "^{k}")
        }
    }
}

fn join(es: &[Expr]) -> String {
    es.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
}

fn degrees(d: &Option<Vec<i32>>) -> String {
    match d {
        None => String::new(),
        Some(d) => format!(" degrees ({})", d.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")),
    }
}

fn value(v: &Value) -> String {
    match v {
        Value::Int(n) => n.to_string(),
        Value::Infinite => "infinite".into(),
        Value::Undetermined => "undetermined".into(),
        Value::Bool(b) => b.to_string(),
    }
}

/// Canonical source text; reparses to an equal [`SourceFile`].
pub fn pretty(file: &SourceFile) -> String {
    let mut out = String::new();
    let r = &file.ring;
    let field = match r.field {
        FieldSpec::Prime(p) => format!("GF({p})"),
        FieldSpec::Rationals => "QQ".into(),
    };
    let _ = write!(out, "ring {} = {}[{}]", r.name, field, r.vars.join(","));
    if !r.ideal.is_empty() {
        let _ = write!(out, "/({})", join(&r.ideal));
    }
    if let Some(o) = &r.order {
        let _ = write!(out, " order {o}");
    }
    out.push_str(";\n");
    for item in &file.items {
        match item {
            Item::Module(m) => {
                let body = match &m.expr {
                    ModuleExpr::Coker { rows, degrees: d } => {
                        let rows: Vec<String> = rows.iter().map(|r| join(r)).collect();
                        format!("coker [{}]{}", rows.join("; "), degrees(d))
                    }
                    ModuleExpr::Free { rank, degrees: d } => format!("free {rank}{}", degrees(d)),
                    ModuleExpr::Quotient(g) => format!("quotient ({})", join(g)),
                    ModuleExpr::Ideal(g) => format!("ideal ({})", join(g)),
                    ModuleExpr::Residue => "residue".into(),
                    ModuleExpr::Dual(n) => format!("dual {n}"),
                    ModuleExpr::Syzygy(n, k) => format!("syzygy {n} {k}"),
                    ModuleExpr::Sum(a, b) => format!("sum {a} {b}"),
                };
                let _ = writeln!(out, "module {} = {};", m.name, body);
            }
            Item::Expect(b) => {
                let _ = writeln!(out, "expect {} {{", b.target);
                for e in &b.items {
                    let _ = writeln!(out, "  {} = {} @{};", e.key, value(&e.value), e.tag);
                }
                out.push_str("}\n");
            }
            Item::Check(c) => {
                let body = match &c.directive {
                    Directive::Ab(m) => format!("ab {m}"),
                    Directive::Horseshoe(ns) => format!("horseshoe {}", ns.join(" ")),
                    Directive::DepthSes(ns) => format!("depth_ses {}", ns.join(" ")),
                    Directive::ChangeOfRings { module, element } => format!("chgrings {module} by {element}"),
                    Directive::Gorenstein(None) => "gorenstein".into(),
                    Directive::Gorenstein(Some(x)) => format!("gorenstein by {x}"),
                    Directive::Fpid => "fpid".into(),
                    Directive::Irreducible => "irreducible".into(),
                    Directive::RxSes { module, var } => format!("rxses {module} in {var}"),
                    Directive::DirectLimit(n) => format!("dirlim {n}"),
                };
                let _ = writeln!(out, "check {body};");
            }
        }
    }
    out
}
