//! Three-valued certified answers.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    True,
    False,
    Undetermined,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::True => "TRUE",
            Status::False => "FALSE",
            Status::Undetermined => "UNDETERMINED",
        }
    }
}

/// A checkable reason for a negative answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `Ext^i(M, R) != 0`.
    ExtNonzero { i: usize },
    /// `Ext^i(M*, R) != 0`.
    DualExtNonzero { i: usize },
    BidualityNotInjective,
    BidualityNotSurjective,
    /// The `j`-th syzygy fails membership for the inner reason.
    Syzygy { j: usize, inner: Box<Witness> },
    /// `Ext^i(R/I, R) != 0` for the listed generators of `I`.
    Ideal { generators: Vec<String>, i: usize },
    /// `dim_k (0 : m)`.
    Socle { dimension: usize },
    /// `G-dim k` is infinite.
    ResidueFieldGdimInfinite { witness: Box<Witness> },
    /// `depth R < dim R`.
    DepthBelowDimension { depth: usize, dimension: i64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ExtNonzero { i } => write!(f, "Ext^{i}(M,R) != 0"),
            Witness::DualExtNonzero { i } => write!(f, "Ext^{i}(M*,R) != 0"),
            Witness::BidualityNotInjective => write!(f, "M -> M** not injective"),
            Witness::BidualityNotSurjective => write!(f, "M -> M** not surjective"),
            Witness::Syzygy { j, inner } => write!(f, "syzygy {j}: {inner}"),
            Witness::Ideal { generators, i } => write!(f, "Ext^{i}(R/({}),R) != 0", generators.join(",")),
            Witness::Socle { dimension } => write!(f, "socle dimension {dimension}"),
            Witness::ResidueFieldGdimInfinite { witness } => write!(f, "Gdim k infinite ({witness})"),
            Witness::DepthBelowDimension { depth, dimension } => write!(f, "depth {depth} < dim {dimension}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    /// The search bound, for answers that depend on one.
    pub bound: Option<usize>,
}

impl Verdict {
    pub fn yes(bound: Option<usize>) -> Self {
        Verdict {
            status: Status::True,
            witness: None,
            bound,
        }
    }

    pub fn no(witness: Witness, bound: Option<usize>) -> Self {
        Verdict {
            status: Status::False,
            witness: Some(witness),
            bound,
        }
    }

    pub fn undetermined(bound: usize) -> Self {
        Verdict {
            status: Status::Undetermined,
            witness: None,
            bound: Some(bound),
        }
    }

    pub fn is_true(&self) -> bool {
        self.status == Status::True
    }

    pub fn is_false(&self) -> bool {
        self.status == Status::False
    }

    pub fn is_determined(&self) -> bool {
        self.status != Status::Undetermined
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status.name())?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        if self.status == Status::Undetermined {
            if let Some(b) = self.bound {
                write!(f, " at bound {b}")?;
            }
        }
        Ok(())
    }
}
