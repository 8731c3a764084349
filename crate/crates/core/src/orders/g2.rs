//! Layered left-order on `G2` built from two short exact sequences.
//!
//! 1. `π: G2 -> Z` (exponent sum of `x`): positive `π` is positive.
//! 2. On `K = ker π`, `t: K -> Z`, `z_i -> (-1)^i` (so `t(y) = b2`).
//! 3. On `ker t`, which meets every conjugate of every `<z_i>` trivially and is
//!    therefore free: Reidemeister–Schreier rewriting into a fixed free basis,
//!    then the Magnus order.
//!
//! `kernel_reversed` replaces the order on `K` by its opposite; the order on
//! the quotient `Z` is unchanged.

use serde::Serialize;

use super::magnus::magnus_sign;
use super::{ConeOracle, Decision, GroupTag, Sign, Trace};
use crate::cfrac::TwoBridgeParams;
use crate::error::{Error, Result};
use crate::groups::{FreeWord, G2Element, G2, G2_ALPHABET};

/// Free generator of `ker t`: the Schreier generator `γ(j, i)` for coset
/// `j = k·(-1)^i mod |b2|`, `i != 0`, `0 <= k <= |b2| - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchreierGen {
    pub index: i64,
    pub k: i64,
}

/// Rewrites a `ker t` element of `ker π` over the free basis of `ker t`.
///
/// Works in `Q = K / <y> = *_i Z/m` (`m = |b2|`), which `ker t` embeds into as
/// the kernel of `t mod m`. Transversal `τ_j = z_0^j`; Schreier generators
/// `γ(j, i) = τ_j z_i τ_(j + (-1)^i)^-1` are trivial for `i = 0`, and for each
/// `i != 0` the `m` generators satisfy the single relation
/// `γ(0,i) γ(ε,i) ... γ((m-1)ε,i) = 1`, `ε = (-1)^i`, used to eliminate the last.
pub fn kernel_free_word(b2: i64, nf: &G2Element) -> Vec<(SchreierGen, i64)> {
    let m = b2.abs();
    let mut coset = 0i64;
    let mut raw: Vec<(SchreierGen, i64)> = Vec::new();
    for syl in &nf.tail {
        let eps = if syl.index.rem_euclid(2) == 0 { 1 } else { -1 };
        for _ in 0..syl.power {
            if syl.index != 0 {
                let k = (coset * eps).rem_euclid(m);
                if k <= m - 2 {
                    raw.push((SchreierGen { index: syl.index, k }, 1));
                } else {
                    raw.extend((0..=m - 2).rev().map(|k| (SchreierGen { index: syl.index, k }, -1)));
                }
            }
            coset = (coset + eps).rem_euclid(m);
        }
    }
    debug_assert_eq!(coset, 0, "element is not in ker t");
    let mut out: Vec<(SchreierGen, i64)> = Vec::new();
    for (g, e) in raw {
        match out.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct G2Order {
    g2: G2,
    kernel_reversed: bool,
}

impl G2Order {
    pub fn new(params: &TwoBridgeParams) -> Self {
        Self::with_kernel_reversed(params, false)
    }

    pub fn with_kernel_reversed(params: &TwoBridgeParams, kernel_reversed: bool) -> Self {
        Self { g2: G2::new(params.b2), kernel_reversed }
    }

    pub fn group(&self) -> &G2 {
        &self.g2
    }

    pub fn kernel_reversed(&self) -> bool {
        self.kernel_reversed
    }

    fn kernel_sign(&self, s: Sign) -> Sign {
        if self.kernel_reversed {
            s.flip()
        } else {
            s
        }
    }
}

impl ConeOracle for G2Order {
    fn group(&self) -> GroupTag {
        GroupTag::G2
    }

    fn alphabet(&self) -> &'static [char] {
        &G2_ALPHABET
    }

    fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        self.g2.is_identity(w)
    }

    fn decide(&self, w: &FreeWord) -> Result<Decision> {
        let nf = self.g2.normal_form(w)?;
        if nf.is_identity() {
            return Ok(Decision { sign: Sign::Identity, trace: Trace::NormalForm });
        }
        if nf.xpow != 0 {
            return Ok(Decision {
                sign: Sign::from_i64(nf.xpow),
                trace: Trace::Projection { pi: nf.xpow },
            });
        }
        let t = self.g2.kernel_t(&nf);
        if t != 0 {
            return Ok(Decision {
                sign: self.kernel_sign(Sign::from_i64(t)),
                trace: Trace::KernelT { t },
            });
        }
        let free = kernel_free_word(self.g2.b2(), &nf);
        if free.is_empty() {
            return Err(Error::InternalCheckFailed(format!(
                "nontrivial element {w} rewrote to the empty word in ker t"
            )));
        }
        let (sign, degree) = magnus_sign(&free);
        Ok(Decision { sign: self.kernel_sign(sign), trace: Trace::Magnus { degree } })
    }
}

/// `γ` letters as a displayable word, for traces and examples.
pub fn schreier_word_string(word: &[(SchreierGen, i64)]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|(g, e)| format!("g[{},{}]^{}", g.index, g.k, e))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::knot_params;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn layer_examples() {
        for (c1, c2) in [(3, 4), (3, -4), (5, 6)] {
            let k = knot_params(c1, c2).unwrap();
            let o = G2Order::new(&k);
            let d = o.decide(&w("z x^2")).unwrap();
            assert_eq!((d.sign, d.trace), (Sign::Positive, Trace::Projection { pi: 2 }));
            let d = o.decide(&w("y")).unwrap();
            assert_eq!(d.sign, Sign::from_i64(k.b2));
            assert_eq!(d.trace, Trace::KernelT { t: k.b2 });
            let d = o.decide(&w("z x^-1 z x z^-1 x^-1 z^-1 x")).unwrap();
            assert!(matches!(d.trace, Trace::Magnus { .. }));
            assert_ne!(d.sign, Sign::Identity);
        }
    }

    #[test]
    fn kernel_words_in_ker_t() {
        let k = knot_params(3, 6).unwrap();
        let g2 = G2::new(k.b2);
        // z_0 z_1: t = 1 - 1 = 0; z_1 is read at coset 1, i.e. k = 2 = m - 1, the
        // eliminated generator
        let nf = g2.normal_form(&w("z x^-1 z x")).unwrap();
        let free = kernel_free_word(k.b2, &nf);
        let g = |k| SchreierGen { index: 1, k };
        assert_eq!(free, vec![(g(1), -1), (g(0), -1)]);
        // z_1 z_0 is read with z_1 at coset 0
        let nf = g2.normal_form(&w("x^-1 z x z")).unwrap();
        assert_eq!(kernel_free_word(k.b2, &nf), vec![(g(0), 1)]);
        let nf = g2.normal_form(&w("x^-1 z^2 x z^-2")).unwrap();
        assert_eq!(g2.kernel_t(&nf), -4);
    }

    #[test]
    fn reversed_kernel_flips_only_kernel() {
        let k = knot_params(3, 4).unwrap();
        let (o, r) = (G2Order::new(&k), G2Order::with_kernel_reversed(&k, true));
        assert_eq!(o.sign(&w("x")).unwrap(), r.sign(&w("x")).unwrap());
        assert_eq!(o.sign(&w("y")).unwrap(), r.sign(&w("y")).unwrap().flip());
    }
}
