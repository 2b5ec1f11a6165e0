//! Homology of `C ⊗ M` at one spot, for a complex `C` of graded free modules.

use crate::exactalg::{syzygies, Field, GradedMatrix, SubmoduleBasis, Vector};
use crate::modcalc::Module;

/// Cycles and boundaries of `C_j ⊗ M` inside the free module `C_j ⊗ F_0`.
pub(crate) struct Subquotient<F: Field> {
    module: Module<F>,
    ambient: Vec<i32>,
    cycles: Vec<Vector<F>>,
    boundaries: Vec<Vector<F>>,
}

/// `I_C ⊗ A`: copies of the relations of `M` in every block of `C ⊗ F_0`.
fn block_relations<F: Field>(m: &Module<F>, blocks: usize) -> Vec<Vector<F>> {
    let ring = m.ring();
    let n = m.num_generators() as u32;
    let field = ring.field();
    let order = ring.poly().term_order();
    let mut out = Vec::new();
    for b in 0..blocks as u32 {
        for a in m.relations().cols() {
            out.push(a.map_comps(field, order, |c| Some(b * n + c)));
        }
    }
    out
}

fn tensor_twists(c: &[i32], f: &[i32]) -> Vec<i32> {
    c.iter().flat_map(|&a| f.iter().map(move |&t| a + t)).collect()
}

impl<F: Field> Subquotient<F> {
    /// Homology at `C_j` of `C' -incoming-> C_j -outgoing-> C''` tensored
    /// with `m`. `None` stands for a map from or to the zero module.
    pub fn new(
        m: &Module<F>,
        c_twists: &[i32],
        incoming: Option<&GradedMatrix<F>>,
        outgoing: Option<&GradedMatrix<F>>,
    ) -> Self {
        let ring = m.ring();
        let field = ring.field();
        let order = ring.poly().term_order();
        let ft = m.twists();
        let ambient = tensor_twists(c_twists, ft);
        let size = ambient.len() as u32;
        let cycles: Vec<Vector<F>> = match outgoing {
            Some(d) if d.nrows() > 0 && size > 0 => {
                let dk = d.kron_identity(field, order, ft);
                let rel = block_relations(m, d.nrows());
                let relm = GradedMatrix::from_columns(dk.target().to_vec(), rel, 0).expect("homogeneous relations");
                let big = dk.hconcat(&relm).expect("same target");
                syzygies(ring, &big)
                    .into_iter()
                    .map(|s| s.map_comps(field, order, |c| (c < size).then_some(c)))
                    .filter(|s| !s.is_zero())
                    .collect()
            }
            _ => (0..size).map(|i| Vector::unit(field, i)).collect(),
        };
        let mut boundaries = block_relations(m, c_twists.len());
        if let Some(d) = incoming {
            if d.ncols() > 0 && size > 0 {
                boundaries.extend(d.kron_identity(field, order, ft).into_cols());
            }
        }
        let boundaries: Vec<Vector<F>> = boundaries
            .into_iter()
            .map(|b| ring.reduce_vector(b))
            .filter(|b| !b.is_zero())
            .collect();
        Subquotient {
            module: m.clone(),
            ambient,
            cycles,
            boundaries,
        }
    }

    pub fn is_zero(&self) -> bool {
        if self.cycles.is_empty() {
            return true;
        }
        let sb = SubmoduleBasis::new(self.module.ring(), &self.ambient, &self.boundaries);
        self.cycles.iter().all(|z| sb.contains(z))
    }

    pub fn module(&self) -> Module<F> {
        Module::subquotient(self.module.ring(), &self.ambient, &self.cycles, &self.boundaries).0
    }
}
