use std::sync::Arc;

use habw_core::exactalg::{Field, GradedMatrix, MonomialOrder, OrderKind, PolyRing, Polynomial, Ring};
use habw_core::homology::syzygy;
use habw_core::modcalc::Module;
use habw_core::AlgebraError;
use num_bigint::BigInt;

use crate::ast::*;
use crate::parser::Diagnostic;

const MAX_DEGREE: u64 = 1000;

/// A source file turned into a ring and its modules, in declaration order.
pub struct Elaborated<F: Field> {
    pub ring: Arc<Ring<F>>,
    pub modules: Vec<(String, Module<F>)>,
}

impl<F: Field> Elaborated<F> {
    pub fn module(&self, name: &str) -> Option<&Module<F>> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }
}

fn degree_bound(e: &Expr) -> u64 {
    match e {
        Expr::Int(_) => 0,
        Expr::Var(_) => 1,
        Expr::Neg(a) => degree_bound(a),
        Expr::Add(a, b) | Expr::Sub(a, b) => degree_bound(a).max(degree_bound(b)),
        Expr::Mul(a, b) => degree_bound(a).saturating_add(degree_bound(b)),
        Expr::Pow(a, k) => degree_bound(a).saturating_mul(*k as u64),
    }
}

/// Evaluates an expression in `poly`; variables are looked up by name.
pub fn to_polynomial<F: Field>(poly: &PolyRing<F>, e: &Expr) -> Result<Polynomial<F>, AlgebraError> {
    if degree_bound(e) > MAX_DEGREE {
        return Err(AlgebraError::Malformed(format!("degree of `{e}` exceeds {MAX_DEGREE}")));
    }
    eval(poly, e)
}

fn eval<F: Field>(poly: &PolyRing<F>, e: &Expr) -> Result<Polynomial<F>, AlgebraError> {
    Ok(match e {
        Expr::Int(v) => {
            let c = poly.field().from_ratio(&BigInt::from(v.clone()), &BigInt::from(1))?;
            poly.constant(c)
        }
        Expr::Var(v) => {
            let i = poly
                .var_index(v)
                .ok_or_else(|| AlgebraError::Malformed(format!("unknown variable `{v}`")))?;
            poly.var(i)
        }
        Expr::Neg(a) => poly.neg(&eval(poly, a)?),
        Expr::Add(a, b) => poly.add(&eval(poly, a)?, &eval(poly, b)?),
        Expr::Sub(a, b) => poly.sub(&eval(poly, a)?, &eval(poly, b)?),
        Expr::Mul(a, b) => poly.mul(&eval(poly, a)?, &eval(poly, b)?),
        Expr::Pow(a, k) => poly.pow(&eval(poly, a)?, *k),
    })
}

fn at(pos: Pos) -> impl Fn(AlgebraError) -> Diagnostic {
    move |e| Diagnostic::new(pos, e.to_string(), Vec::new())
}

/// Builds the ring over `field` (which overrides the declared one) and every module.
pub fn elaborate<F: Field>(file: &SourceFile, field: F) -> Result<Elaborated<F>, Diagnostic> {
    let r = &file.ring;
    let kind = r
        .order
        .as_deref()
        .map(|o| OrderKind::from_name(o).expect("validated by the parser"))
        .unwrap_or(OrderKind::DegRevLex);
    let poly = PolyRing::new(field, r.vars.clone(), MonomialOrder::new(kind)).map_err(at(r.pos))?;
    let gens = r
        .ideal
        .iter()
        .map(|e| to_polynomial(&poly, e))
        .collect::<Result<Vec<_>, _>>()
        .map_err(at(r.pos))?;
    let ring = Ring::new(poly, gens).map_err(at(r.pos))?;
    let mut out = Elaborated {
        ring: ring.clone(),
        modules: Vec::new(),
    };
    for decl in file.modules() {
        let m = module(&out, &decl.expr).map_err(at(decl.pos))?;
        out.modules.push((decl.name.clone(), m));
    }
    Ok(out)
}

fn polys<F: Field>(ring: &Ring<F>, es: &[Expr]) -> Result<Vec<Polynomial<F>>, AlgebraError> {
    es.iter().map(|e| to_polynomial(ring.poly(), e)).collect()
}

fn module<F: Field>(env: &Elaborated<F>, e: &ModuleExpr) -> Result<Module<F>, AlgebraError> {
    let ring = &env.ring;
    let get = |n: &str| {
        env.module(n)
            .cloned()
            .ok_or_else(|| AlgebraError::Malformed(format!("unknown module `{n}`")))
    };
    Ok(match e {
        ModuleExpr::Coker { rows, degrees } => {
            let twists = degrees.clone().unwrap_or_else(|| vec![0; rows.len()]);
            let table: Vec<Vec<Polynomial<F>>> = rows
                .iter()
                .map(|r| polys(ring, r).map(|ps| ps.iter().map(|p| ring.reduce(p)).collect()))
                .collect::<Result<_, _>>()?;
            let ncols = table[0].len();
            let mut source = Vec::with_capacity(ncols);
            for j in 0..ncols {
                let mut deg = None;
                for (i, row) in table.iter().enumerate() {
                    let p = &row[j];
                    if p.is_zero() {
                        continue;
                    }
                    let d = p
                        .homogeneous_degree()
                        .ok_or_else(|| AlgebraError::NotHomogeneous(ring.format(p)))? as i32
                        + twists[i];
                    match deg {
                        None => deg = Some(d),
                        Some(d0) if d0 != d => {
                            return Err(AlgebraError::NotHomogeneous(format!("column {} mixes degrees {d0} and {d}", j + 1)))
                        }
                        _ => {}
                    }
                }
                source.push(deg.unwrap_or(0));
            }
            Module::coker(ring, GradedMatrix::from_rows(ring, twists, source, &table)?)
        }
        ModuleExpr::Free { rank, degrees } => Module::free(ring, &degrees.clone().unwrap_or_else(|| vec![0; *rank])),
        ModuleExpr::Quotient(g) => Module::cyclic(ring, &polys(ring, g)?)?,
        ModuleExpr::Ideal(g) => Module::ideal(ring, &polys(ring, g)?)?,
        ModuleExpr::Residue => Module::residue_field(ring),
        ModuleExpr::Dual(n) => get(n)?.dual(),
        ModuleExpr::Syzygy(n, k) => syzygy(&get(n)?, *k),
        ModuleExpr::Sum(a, b) => get(a)?.direct_sum(&get(b)?)?,
    })
}
