use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// Integer Laurent polynomial in one variable `t`. No zero coefficients are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between the top and bottom exponents; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn top_coeff(&self) -> Option<i64> {
        self.terms.values().next_back().copied()
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + by, c)).collect(),
        }
    }

    pub fn eval(&self, t: i64) -> i128 {
        // t = +-1 is the only use; other values may overflow for large exponents
        self.terms
            .iter()
            .map(|(&e, &c)| {
                let tt = t as i128;
                let pow = if e >= 0 {
                    tt.pow(e as u32)
                } else {
                    assert!(tt == 1 || tt == -1, "negative powers need t = +-1");
                    tt.pow((-e) as u32)
                };
                c as i128 * pow
            })
            .sum()
    }

    /// `p(t) = p(t^-1)`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Symmetric representative of the class `+-t^k p`, with positive top coefficient.
    /// Returns `None` when the span is odd (no symmetric representative exists).
    pub fn symmetric_normalize(&self) -> Option<Self> {
        let (lo, hi) = (self.min_exp()?, self.max_exp()?);
        if (hi - lo) % 2 != 0 {
            return None;
        }
        let mut p = self.shift(-(lo + hi) / 2);
        if p.top_coeff()? < 0 {
            p = -p;
        }
        Some(p)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs.clone())
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (mag, e) {
                (m, 0) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, e) => write!(f, "t^{e}")?,
                (m, 1) => write!(f, "{m}t")?,
                (m, e) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    /// Serialized as `{"coeffs": [[exp, coeff], ...]}` in increasing exponent order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<[i64; 2]>,
        }
        Repr {
            coeffs: self.terms().map(|(e, c)| [e, c]).collect(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(p.to_string(), "t - 1 + t^-1");
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "t^2 - 2t + 3 - 2t^-1 + t^-2");
        assert!((&p - &p).is_zero());
        assert_eq!(p.eval(-1), -3);
        assert_eq!(p.eval(1), 1);
    }

    #[test]
    fn normalization() {
        let p = LaurentPoly::from_terms([(5, -1), (6, 1), (7, -1)]);
        let n = p.symmetric_normalize().unwrap();
        assert_eq!(n, LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]));
        assert!(n.is_symmetric());
        assert!(LaurentPoly::from_terms([(0, 1), (1, 1)]).symmetric_normalize().is_none());
    }
}
