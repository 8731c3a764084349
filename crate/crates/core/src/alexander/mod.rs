//! Alexander polynomials of two-bridge knots via Fox calculus, and the
//! L-space-knot form test that rules out L-space surgeries on the family.

mod laurent;

pub use laurent::LaurentPoly;

use serde::Serialize;

use crate::cfrac::{genus, is_fibered, TwoBridgeParams};
use crate::error::{Error, Result};

/// Generator of the two-bridge presentation `<u, v | W u W^-1 v^-1>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Meridian {
    U,
    V,
}

/// Relator `W u W^-1 v^-1` of the Schubert presentation of `b(p, q)`, as a
/// letter sequence, where `W = u^e1 v^e2 u^e3 ... v^e(p-1)` and
/// `e_i = (-1)^floor(i*q/p)`.
fn schubert_relator(p: i64, q: i64) -> Vec<(Meridian, i8)> {
    let w: Vec<(Meridian, i8)> = (1..p)
        .map(|i| {
            let gen = if i % 2 == 1 { Meridian::U } else { Meridian::V };
            let sign = if (i * q).div_euclid(p) % 2 == 0 { 1 } else { -1 };
            (gen, sign)
        })
        .collect();
    let mut rel = w.clone();
    rel.push((Meridian::U, 1));
    rel.extend(w.iter().rev().map(|&(g, e)| (g, -e)));
    rel.push((Meridian::V, -1));
    rel
}

/// Abelianized Fox derivative (all generators sent to `t`).
fn fox_derivative(word: &[(Meridian, i8)], wrt: Meridian) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut prefix = 0i64;
    for &(g, e) in word {
        if e > 0 {
            if g == wrt {
                out.add_term(prefix, 1);
            }
            prefix += 1;
        } else {
            prefix -= 1;
            if g == wrt {
                out.add_term(prefix, -1);
            }
        }
    }
    out
}

/// Alexander polynomial of the two-bridge knot `b(p, q)` for any odd `p` and
/// `gcd(p, q) = 1`, symmetric-normalized with positive top coefficient.
///
/// Checks `|Δ(-1)| = p` and `Δ(1) = ±1`.
pub fn alexander_of_bridge(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 1 || p % 2 == 0 || num_integer::gcd(p, q) != 1 {
        return Err(Error::InternalCheckFailed(format!("b({p},{q}) is not a knot")));
    }
    // the alternating-sign word needs an odd representative of q mod p
    let q = q.rem_euclid(p);
    let rel = schubert_relator(p, if q % 2 == 0 { q - p } else { q });
    let raw = fox_derivative(&rel, Meridian::U);
    let delta = raw.symmetric_normalize().ok_or_else(|| {
        Error::InternalCheckFailed(format!("Fox derivative {raw} has odd span"))
    })?;
    if delta.eval(-1).unsigned_abs() != p as u128 {
        return Err(Error::InternalCheckFailed(format!(
            "|Δ(-1)| = {} but p = {p}",
            delta.eval(-1).abs()
        )));
    }
    if delta.eval(1).abs() != 1 {
        return Err(Error::InternalCheckFailed(format!("Δ(1) = {}", delta.eval(1))));
    }
    Ok(delta)
}

/// Alexander polynomial of `K[c1, c2]`; additionally checks span = 2 * genus.
pub fn alexander_poly(params: &TwoBridgeParams) -> Result<LaurentPoly> {
    let delta = alexander_of_bridge(params.p, params.q)?;
    if delta.span() != 2 * genus(params) {
        return Err(Error::InternalCheckFailed(format!(
            "span {} != 2 * genus {}",
            delta.span(),
            genus(params)
        )));
    }
    Ok(delta)
}

/// `|Δ(-1)|`.
pub fn determinant(poly: &LaurentPoly) -> u128 {
    poly.eval(-1).unsigned_abs()
}

/// Top coefficient is `±1`.
pub fn is_monic(poly: &LaurentPoly) -> bool {
    matches!(poly.top_coeff(), Some(1) | Some(-1))
}

/// Outcome of matching `(-1)^k + Σ_j (-1)^(k-j) (t^n_j + t^-n_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LSpaceFormReport {
    pub matches: bool,
    pub k: usize,
    /// `n_1 < ... < n_k`; empty unless `matches`.
    pub exponents: Vec<i64>,
}

/// Builds the polynomial of L-space form with the given strictly increasing
/// positive exponents.
pub fn lspace_form_poly(exponents: &[i64]) -> LaurentPoly {
    let k = exponents.len();
    let sign = |n: usize| if n.is_multiple_of(2) { 1 } else { -1 };
    let mut p = LaurentPoly::monomial(0, sign(k));
    for (j, &n) in exponents.iter().enumerate() {
        let s = sign(k - (j + 1));
        p.add_term(n, s);
        p.add_term(-n, s);
    }
    p
}

pub fn lspace_form(poly: &LaurentPoly) -> Result<LSpaceFormReport> {
    if poly.is_zero() || !poly.is_symmetric() || poly.top_coeff().unwrap_or(0) < 0 {
        return Err(Error::NotNormalized(poly.to_string()));
    }
    let exponents: Vec<i64> = poly.terms().map(|(e, _)| e).filter(|&e| e > 0).collect();
    let k = exponents.len();
    let matches = lspace_form_poly(&exponents) == *poly;
    Ok(LSpaceFormReport {
        matches,
        k: if matches { k } else { 0 },
        exponents: if matches { exponents } else { Vec::new() },
    })
}

/// Which branch of the obstruction applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum NoLSpaceReason {
    /// Non-fibered knots have no L-space surgeries.
    NotFibered,
    /// Fibered case `b1 = 1, b2 > 0`: `|Δ(-1)| = 6*b2 - 1` exceeds the bound
    /// `2*genus + 1 = 2*b2 + 1` that an L-space knot would satisfy.
    DeterminantExceedsGenusBound { determinant: i64, bound: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LSpaceVerdict {
    pub admits: bool,
    pub reason: NoLSpaceReason,
}

pub fn lspace_surgery_verdict(params: &TwoBridgeParams) -> Result<LSpaceVerdict> {
    if !is_fibered(params) {
        return Ok(LSpaceVerdict {
            admits: false,
            reason: NoLSpaceReason::NotFibered,
        });
    }
    let b2 = params.b2;
    let determinant = 6 * b2 - 1;
    let bound = 2 * genus(params) + 1;
    let delta = alexander_poly(params)?;
    if self::determinant(&delta) != determinant as u128 {
        return Err(Error::InternalCheckFailed(format!(
            "determinant {} != 6*b2 - 1 = {determinant}",
            self::determinant(&delta)
        )));
    }
    if determinant <= bound || bound != 2 * b2 + 1 {
        return Err(Error::InternalCheckFailed(format!(
            "expected {determinant} > {bound} = 2*b2 + 1"
        )));
    }
    if lspace_form(&delta)?.matches {
        return Err(Error::InternalCheckFailed(format!("{delta} has L-space form")));
    }
    Ok(LSpaceVerdict {
        admits: false,
        reason: NoLSpaceReason::DeterminantExceedsGenusBound { determinant, bound },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::knot_params;

    /// Independent route: Hartley's alternating-sum formula
    /// `Δ(t) = Σ_{i=0}^{p-1} (-1)^i t^(σ_i)`, `σ_i = e_1 + ... + e_i`.
    fn hartley(p: i64, q: i64) -> LaurentPoly {
        let q = if q % 2 == 0 { q - p } else { q };
        let mut sigma = 0;
        let mut out = LaurentPoly::monomial(0, 1);
        for i in 1..p {
            sigma += if (i * q).div_euclid(p) % 2 == 0 { 1 } else { -1 };
            out.add_term(sigma, if i % 2 == 0 { 1 } else { -1 });
        }
        out.symmetric_normalize().unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn fixtures_outside_family() {
        // b(3,1): trefoil, b(5,3): figure eight
        assert_eq!(alexander_of_bridge(3, 1).unwrap(), poly(&[(1, 1), (0, -1), (-1, 1)]));
        let fig8 = alexander_of_bridge(5, 3).unwrap();
        assert_eq!(fig8, poly(&[(1, -1), (0, 3), (-1, -1)]).symmetric_normalize().unwrap());
        assert_eq!(determinant(&fig8), 5);
    }

    #[test]
    fn six_two() {
        let k = knot_params(3, 4).unwrap();
        let d = alexander_poly(&k).unwrap();
        assert_eq!(d, poly(&[(2, 1), (1, -3), (0, 3), (-1, -3), (-2, 1)]));
        assert_eq!(determinant(&d), 11);
        assert_eq!(d.span(), 4);
    }

    #[test]
    fn fox_agrees_with_hartley_on_grid() {
        for b1 in 1..=5i64 {
            for b2 in (-6..=6i64).filter(|b| b.abs() >= 2) {
                let k = knot_params(2 * b1 + 1, 2 * b2).unwrap();
                let fox = alexander_poly(&k).unwrap();
                assert_eq!(fox, hartley(k.p, k.q), "K[{},{}]", k.c1, k.c2);
                assert_eq!(determinant(&fox), (k.c1 * k.c2 - 1).unsigned_abs() as u128);
                assert_eq!(is_monic(&fox), is_fibered(&k));
            }
        }
    }

    #[test]
    fn lspace_forms() {
        let r = lspace_form(&poly(&[(1, 1), (0, -1), (-1, 1)])).unwrap();
        assert_eq!((r.matches, r.k, r.exponents.as_slice()), (true, 1, &[1][..]));
        let r = lspace_form(&LaurentPoly::one()).unwrap();
        assert_eq!((r.matches, r.k), (true, 0));
        let six_two = poly(&[(2, 1), (1, -3), (0, 3), (-1, -3), (-2, 1)]);
        assert!(!lspace_form(&six_two).unwrap().matches);
        // T(2,5): t^2 - t + 1 - t^-1 + t^-2
        let r = lspace_form(&poly(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])).unwrap();
        assert_eq!((r.k, r.exponents), (2, vec![1, 2]));
    }

    #[test]
    fn lspace_form_rejects_unnormalized() {
        assert!(matches!(
            lspace_form(&poly(&[(1, 1), (0, -1)])),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            lspace_form(&poly(&[(1, -1), (0, 1), (-1, -1)])),
            Err(Error::NotNormalized(_))
        ));
        assert!(lspace_form(&LaurentPoly::zero()).is_err());
    }

    #[test]
    fn verdicts() {
        let v = |c1, c2| lspace_surgery_verdict(&knot_params(c1, c2).unwrap()).unwrap();
        assert_eq!(v(5, 4).reason, NoLSpaceReason::NotFibered);
        assert_eq!(v(3, -4).reason, NoLSpaceReason::NotFibered);
        assert_eq!(
            v(3, 4).reason,
            NoLSpaceReason::DeterminantExceedsGenusBound { determinant: 11, bound: 5 }
        );
        assert_eq!(
            v(3, 6).reason,
            NoLSpaceReason::DeterminantExceedsGenusBound { determinant: 17, bound: 7 }
        );
        assert!(!v(3, 4).admits);
    }
}
