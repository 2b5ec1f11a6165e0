//! Monomials with packed exponent vectors and the three supported orders.

use std::cmp::Ordering;
use std::fmt;

/// Upper bound on the number of ring variables.
pub const MAX_VARS: usize = 12;

/// A monomial `x^a` with `a` stored in a fixed array; unused slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            m.deg += e as u32;
        }
        m
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.exps[i] > 0)
    }

    /// Largest exponent; used to guard against overflow in repeated products.
    pub fn max_exponent(&self) -> u16 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.deg == 0 {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate() {
            match self.exps[i] {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    /// All monomials of total degree `d` in `nvars` variables, in lex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u16; MAX_VARS];
        fn rec(i: usize, nvars: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur[i] = left as u16;
                out.push(Monomial::from_exponents(&cur[..nvars]));
                cur[i] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, nvars, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::ONE);
            }
            return out;
        }
        rec(0, nvars, d, &mut cur, &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "x{:?}", &self.exps[..last])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    DegLex,
    Lex,
}

impl OrderKind {
    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::DegLex => "deglex",
            OrderKind::Lex => "lex",
        }
    }

    pub fn from_name(s: &str) -> Option<OrderKind> {
        match s {
            "degrevlex" | "grevlex" | "dp" => Some(OrderKind::DegRevLex),
            "deglex" | "Dp" => Some(OrderKind::DegLex),
            "lex" | "lp" => Some(OrderKind::Lex),
            _ => None,
        }
    }
}

/// A monomial order together with a variable permutation: variable
/// `perm[0]` is treated as the most significant one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::new(OrderKind::DegRevLex)
    }
}

impl MonomialOrder {
    pub fn new(kind: OrderKind) -> Self {
        MonomialOrder { kind, perm: None }
    }

    /// `perm` must be a permutation of `0..perm.len()`; the identity is normalized away.
    pub fn with_permutation(kind: OrderKind, perm: Vec<usize>) -> Self {
        let identity = perm.iter().enumerate().all(|(i, &p)| i == p);
        MonomialOrder {
            kind,
            perm: if identity { None } else { Some(perm) },
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn permutation(&self) -> Option<&[usize]> {
        self.perm.as_deref()
    }

    #[inline]
    fn slot(&self, i: usize) -> usize {
        match &self.perm {
            None => i,
            Some(p) => {
                if i < p.len() {
                    p[i]
                } else {
                    i
                }
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::DegRevLex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => {
                    for i in (0..MAX_VARS).rev() {
                        let s = self.slot(i);
                        match a.exps[s].cmp(&b.exps[s]) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            OrderKind::DegLex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => self.lex(a, b),
                o => o,
            },
            OrderKind::Lex => self.lex(a, b),
        }
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for i in 0..MAX_VARS {
            let s = self.slot(i);
            match a.exps[s].cmp(&b.exps[s]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}
