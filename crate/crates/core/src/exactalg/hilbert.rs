//! Standard-monomial combinatorics of monomial ideals: Hilbert functions and
//! Krull dimension read off leading terms.

use super::monomial::Monomial;

/// Number of monomials of degree `d` in `nvars` variables divisible by none
/// of `lts`. Negative degrees count zero.
pub fn standard_monomial_count(nvars: usize, lts: &[Monomial], d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if lts.iter().any(|m| m.is_one()) {
        return 0;
    }
    Monomial::all_of_degree(nvars, d as u32)
        .iter()
        .filter(|m| !lts.iter().any(|l| l.divides(m)))
        .count() as u64
}

/// Krull dimension of `k[x]/J` for the monomial ideal `J = (lts)`: the size of
/// the largest variable subset that supports no generator. Returns -1 when
/// `J` is the unit ideal.
pub fn monomial_quotient_dimension(nvars: usize, lts: &[Monomial]) -> i64 {
    if lts.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = lts
        .iter()
        .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0i64;
    for mask in 0u32..(1u32 << nvars) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        // Y = mask is independent iff no generator's support lies inside it
        if supports.iter().all(|&s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

/// Whether `k[x]/J` is finite-dimensional: every variable has a pure power in `J`.
pub fn is_artinian_monomial(nvars: usize, lts: &[Monomial]) -> bool {
    monomial_quotient_dimension(nvars, lts) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn counts_standard_monomials() {
        // k[x,y]/(xy): degree 3 has x^3, y^3
        assert_eq!(standard_monomial_count(2, &[m(&[1, 1])], 3), 2);
        assert_eq!(standard_monomial_count(1, &[m(&[2])], 2), 0);
        assert_eq!(standard_monomial_count(2, &[], 1), 2);
        assert_eq!(standard_monomial_count(2, &[], -1), 0);
    }

    #[test]
    fn dimension_from_supports() {
        assert_eq!(monomial_quotient_dimension(3, &[]), 3);
        assert_eq!(monomial_quotient_dimension(2, &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]), 0);
        assert_eq!(monomial_quotient_dimension(3, &[m(&[1, 1, 0])]), 2);
        assert_eq!(monomial_quotient_dimension(2, &[m(&[0, 0])]), -1);
    }
}
