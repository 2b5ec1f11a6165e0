use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// `depth M + Gdim M = depth R`.
    Ab,
    /// `Gdim_{R/(x)} M = Gdim_R M - 1` when `xM = 0`.
    ChangeOfRings1,
    /// `Gdim_R M/xM = Gdim_R M + 1` for `x` regular on `M`.
    ChangeOfRings3,
    Horseshoe,
    /// `Gdim K = Gdim M - 1` for `0 -> K -> G -> M -> 0` with `G` in the G-class.
    GdimSes,
    SesDepth,
    GorensteinModx,
    GorensteinFpid,
    Irreducible,
    RxSes,
    DirectLimit,
}

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Ab => "AB",
            TheoremId::ChangeOfRings1 => "CHG-RINGS-1",
            TheoremId::ChangeOfRings3 => "CHG-RINGS-3",
            TheoremId::Horseshoe => "HORSESHOE",
            TheoremId::GdimSes => "GDIM-SES",
            TheoremId::SesDepth => "SES-DEPTH",
            TheoremId::GorensteinModx => "GOR-MODX",
            TheoremId::GorensteinFpid => "GOR-FPID",
            TheoremId::Irreducible => "IRRED",
            TheoremId::RxSes => "RX-SES",
            TheoremId::DirectLimit => "DIRLIM",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The numbers that disagree.
    Fail(String),
    /// Why nothing could be concluded.
    Skipped(String),
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail(_) => "FAIL",
            Outcome::Skipped(_) => "SKIPPED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub theorem: TheoremId,
    pub instance: String,
    pub outcome: Outcome,
    /// The certified values the outcome rests on.
    pub detail: String,
}

impl TheoremCheck {
    pub fn new(theorem: TheoremId, instance: impl Into<String>, outcome: Outcome, detail: impl Into<String>) -> Self {
        TheoremCheck {
            theorem,
            instance: instance.into(),
            outcome,
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped(_))
    }
}

impl fmt::Display for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", self.outcome.name(), self.theorem, self.instance)?;
        match &self.outcome {
            Outcome::Pass if self.detail.is_empty() => Ok(()),
            Outcome::Pass => write!(f, ": {}", self.detail),
            Outcome::Fail(why) | Outcome::Skipped(why) => write!(f, ": {why}"),
        }
    }
}
