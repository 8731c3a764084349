//! Magnus bi-order on a free group.
//!
//! Each basis letter `g` maps to `1 + X_g` in noncommuting power series. For
//! `w != 1` the image is `1 + P_d + (higher)`, `P_d != 0` homogeneous of
//! degree `d`; `w` is positive iff the coefficient of the lexicographically
//! least monomial in the support of `P_d` is positive. The truncation degree
//! is doubled until `P_d` is found.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Sign;

/// Generalized binomial coefficients `C(e, k)`, `k = 0..=max_k`.
fn binomials(e: i64, max_k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut c = BigInt::one();
    for k in 1..=max_k {
        c = c * BigInt::from(e - (k as i64 - 1)) / BigInt::from(k as i64);
        out.push(c.clone());
    }
    out
}

/// Series truncated above `max_deg`, keyed by monomials over local indices.
fn expand(word: &[(u32, i64)], max_deg: usize) -> HashMap<Vec<u32>, BigInt> {
    let mut series: HashMap<Vec<u32>, BigInt> = HashMap::new();
    series.insert(Vec::new(), BigInt::one());
    for &(g, e) in word {
        let coeffs = binomials(e, max_deg);
        let mut next: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(series.len() * 2);
        for (mono, c) in &series {
            for (k, b) in coeffs.iter().enumerate().take(max_deg - mono.len() + 1) {
                if b.is_zero() {
                    continue;
                }
                let mut m = mono.clone();
                m.extend(std::iter::repeat_n(g, k));
                let entry = next.entry(m).or_insert_with(BigInt::zero);
                *entry += c * b;
            }
        }
        next.retain(|_, c| !c.is_zero());
        series = next;
    }
    series
}

/// Sign of a freely reduced word under the Magnus order, together with the
/// degree of the deciding homogeneous component. Letters are compared by `Ord`.
pub fn magnus_sign<G: Ord + Clone>(word: &[(G, i64)]) -> (Sign, usize) {
    if word.is_empty() {
        return (Sign::Identity, 0);
    }
    let mut keys: Vec<G> = word.iter().map(|(g, _)| g.clone()).collect();
    keys.sort();
    keys.dedup();
    let local: Vec<(u32, i64)> = word
        .iter()
        .map(|(g, e)| (keys.binary_search(g).unwrap() as u32, *e))
        .collect();
    let mut max_deg = 2;
    loop {
        let series = expand(&local, max_deg);
        let lowest = series
            .iter()
            .filter(|(m, _)| !m.is_empty())
            .min_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        if let Some((mono, c)) = lowest {
            let sign = if c.is_positive() { Sign::Positive } else { Sign::Negative };
            return (sign, mono.len());
        }
        // the Magnus map is injective, so a nonempty reduced word has a nonzero term
        assert!(max_deg < 1 << 16, "Magnus expansion did not terminate");
        max_deg *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sign(w: &[(char, i64)]) -> (Sign, usize) {
        magnus_sign(w)
    }

    #[test]
    fn binomial_table() {
        let b: Vec<i64> = binomials(-2, 4).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(b, vec![1, -2, 3, -4, 5]);
        let b: Vec<i64> = binomials(3, 5).iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(b, vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn degree_one_is_abelianization() {
        assert_eq!(sign(&[('a', 1)]), (Sign::Positive, 1));
        assert_eq!(sign(&[('a', -3), ('b', 5)]), (Sign::Negative, 1));
        assert_eq!(sign(&[('a', 2), ('b', 1), ('a', -2)]), (Sign::Positive, 1));
    }

    #[test]
    fn commutators() {
        // [a,b] = a b a^-1 b^-1 = 1 + (X_a X_b - X_b X_a) + ...
        let ab = [('a', 1), ('b', 1), ('a', -1), ('b', -1)];
        assert_eq!(sign(&ab), (Sign::Positive, 2));
        let ba = [('b', 1), ('a', 1), ('b', -1), ('a', -1)];
        assert_eq!(sign(&ba), (Sign::Negative, 2));
        // [[a,b],a] lives in degree 3
        let mut w: Vec<(char, i64)> = ab.to_vec();
        w.push(('a', 1));
        w.extend(ba.iter().copied());
        w.push(('a', -1));
        let reduced = crate::groups::free_reduce(w);
        assert_eq!(magnus_sign(reduced.syllables()).1, 3);
    }
}
