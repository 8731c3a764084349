//! Subtractive continued fractions and the parameters of `K[c1, c2]`.
//!
//! `[c1, ..., cm]^- = 1 / (c1 - [c2, ..., cm]^-)` with `[c]^- = 1/c`. All
//! arithmetic is exact over big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite sequence of nonzero integers read as a subtractive continued fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ContinuedFraction(Vec<i64>);

impl ContinuedFraction {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Parse("continued fraction needs at least one entry".into()));
        }
        if entries.contains(&0) {
            return Err(Error::Parse("continued fraction entries must be nonzero".into()));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Exact value of the subtractive continued fraction, evaluated from the tail.
pub fn eval_cf(cf: &ContinuedFraction) -> Result<BigRational> {
    let mut tail = BigRational::zero();
    for &c in cf.entries().iter().rev() {
        let denom = BigRational::from_integer(BigInt::from(c)) - &tail;
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        tail = denom.recip();
    }
    Ok(tail)
}

/// Normalized parameters of `K[c1, c2]` with `c1 = 2*b1 + 1`, `c2 = 2*b2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoBridgeParams {
    pub c1: i64,
    pub c2: i64,
    pub b1: i64,
    pub b2: i64,
    /// `|c1*c2 - 1|`, the order of the first homology of the double branched cover.
    pub p: i64,
    /// `c2` reduced into `(0, p)`.
    pub q: i64,
    /// The exceptional surgery slope `2*c2 = 4*b2`.
    pub slope: i64,
    /// Set when the input had `c1 < 0` and was replaced by `(-c1, -c2)`.
    pub mirrored: bool,
}

/// Validates and normalizes `(c1, c2)`.
///
/// Rejects even `c1`, odd `c2`, and `|c1| <= 2` or `|c2| <= 2` (the twist knots).
pub fn knot_params(c1: i64, c2: i64) -> Result<TwoBridgeParams> {
    if c1.rem_euclid(2) != 1 {
        return Err(Error::OutOfFamily(format!("c1 = {c1} must be odd")));
    }
    if c2.rem_euclid(2) != 0 {
        return Err(Error::OutOfFamily(format!("c2 = {c2} must be even")));
    }
    if c1.unsigned_abs() <= 2 || c2.unsigned_abs() <= 2 {
        return Err(Error::OutOfFamily(format!(
            "need |c1|, |c2| > 2, got ({c1}, {c2})"
        )));
    }
    // keep p representable with room for the Fox calculus
    if c1.unsigned_abs() > 1 << 20 || c2.unsigned_abs() > 1 << 20 {
        return Err(Error::OutOfFamily(format!("({c1}, {c2}) is too large")));
    }
    let mirrored = c1 < 0;
    let (c1, c2) = if mirrored { (-c1, -c2) } else { (c1, c2) };
    let (p, q) = lens_normalize(c1 * c2 - 1, c2);
    Ok(TwoBridgeParams {
        c1,
        c2,
        b1: (c1 - 1) / 2,
        b2: c2 / 2,
        p,
        q,
        slope: 2 * c2,
        mirrored,
    })
}

fn lens_normalize(p: i64, q: i64) -> (i64, i64) {
    let p = p.abs();
    (p, q.rem_euclid(p))
}

impl TwoBridgeParams {
    /// `[c1, c2]` as a continued fraction.
    pub fn continued_fraction(&self) -> ContinuedFraction {
        ContinuedFraction(vec![self.c1, self.c2])
    }

    /// `c2 / (c1*c2 - 1)`, the value of `[c1, c2]^-`.
    pub fn fraction(&self) -> BigRational {
        BigRational::new(BigInt::from(self.c2), BigInt::from(self.c1 * self.c2 - 1))
    }
}

/// The all-even expansion of `[c1, c2]`, read off as a plumbing of one twisted
/// annulus with Hopf bands.
pub fn even_expansion(params: &TwoBridgeParams) -> ContinuedFraction {
    let TwoBridgeParams { b1, b2, .. } = *params;
    let mut entries = Vec::with_capacity(2 * b2.unsigned_abs() as usize);
    if b2 > 0 {
        entries.push(2 * b1);
        entries.extend(std::iter::repeat_n(-2, (2 * b2 - 1) as usize));
    } else {
        entries.push(2 * b1 + 2);
        entries.extend(std::iter::repeat_n(2, (-2 * b2 - 1) as usize));
    }
    ContinuedFraction(entries)
}

pub fn is_fibered(params: &TwoBridgeParams) -> bool {
    params.b1 == 1 && params.b2 > 0
}

/// Genus, as half the length of the even expansion.
pub fn genus(params: &TwoBridgeParams) -> i64 {
    even_expansion(params).len() as i64 / 2
}

/// `(p, q)` of the lens space `L(c1*c2 - 1, c2)`, normalized to `p > 0`, `0 < q < p`.
pub fn double_branched_cover(params: &TwoBridgeParams) -> (i64, i64) {
    lens_normalize(params.c1 * params.c2 - 1, params.c2)
}

/// `a / b` as an exact rational, for tests and examples.
pub fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}
