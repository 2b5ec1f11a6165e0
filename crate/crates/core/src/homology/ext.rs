//! `Ext^i(N, M)` from the minimal resolution of `N`.

use crate::exactalg::{Field, GradedMatrix};
use crate::modcalc::Module;

use super::complex::Subquotient;
use super::resolution::free_resolution;

fn spot<F: Field>(n: &Module<F>, m: &Module<F>, i: usize) -> Option<Subquotient<F>> {
    let res = free_resolution(n, i + 1);
    if i > res.length() || res.rank(i) == 0 {
        return None;
    }
    let ring = n.ring();
    let field = ring.field();
    let order = ring.poly().term_order();
    let dual = |d: &GradedMatrix<F>| d.transpose(field, order);
    let ci: Vec<i32> = res.twists(i).iter().map(|t| -t).collect();
    let incoming = (i >= 1).then(|| dual(res.differential(i)));
    let outgoing = (i < res.length()).then(|| dual(res.differential(i + 1)));
    Some(Subquotient::new(m, &ci, incoming.as_ref(), outgoing.as_ref()))
}

/// `Ext^i(N, M) = H^i(Hom(F_•, M))`.
pub fn ext_between<F: Field>(n: &Module<F>, m: &Module<F>, i: usize) -> Module<F> {
    match spot(n, m, i) {
        None => Module::zero(m.ring()),
        Some(s) => s.module(),
    }
}

pub fn ext_between_vanishes<F: Field>(n: &Module<F>, m: &Module<F>, i: usize) -> bool {
    spot(n, m, i).is_none_or(|s| s.is_zero())
}

/// `Ext^i(M, R)`.
pub fn ext<F: Field>(m: &Module<F>, i: usize) -> Module<F> {
    ext_between(m, &Module::free(m.ring(), &[0]), i)
}

pub fn ext_vanishes<F: Field>(m: &Module<F>, i: usize) -> bool {
    ext_between_vanishes(m, &Module::free(m.ring(), &[0]), i)
}

/// `Ext^i(k, M)` for the residue field `k`.
pub fn ext_from_residue_field<F: Field>(m: &Module<F>, i: usize) -> Module<F> {
    ext_between(&Module::residue_field(m.ring()), m, i)
}
