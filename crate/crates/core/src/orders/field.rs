//! Exact arithmetic in `Q(λ)`, `λ = 2 cos(π/n)` for odd `n >= 3`.
//!
//! Elements are coordinate vectors in the power basis `1, λ, ..., λ^(d-1)`.
//! Zero testing is exact; signs are decided by evaluating on a dyadic isolating
//! interval of `λ`, bisecting until the value interval excludes zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients from degree 0 upward.
pub type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division by a monic divisor; panics on a nonzero remainder.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd).max(1)];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dd] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k - dd + i] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(&mut quot);
    quot
}

/// The cyclotomic polynomial `Φ_m`.
pub fn cyclotomic(m: u32) -> IntPoly {
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = poly_div_exact(&num, &cyclotomic(d));
    }
    num
}

/// Minimal polynomial of `2 cos(π/n)`, from the palindromic `Φ_2n` via
/// `x^k + x^-k = D_k(x + 1/x)`.
pub fn min_poly_two_cos(n: u32) -> IntPoly {
    let phi = cyclotomic(2 * n);
    let d = (phi.len() - 1) / 2;
    // D_0 = 2, D_1 = y, D_(k+1) = y D_k - D_(k-1)
    let mut dk: Vec<IntPoly> = vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]];
    for k in 1..d {
        let mut next = vec![BigInt::zero()];
        next.extend(dk[k].iter().cloned());
        for (i, c) in dk[k - 1].iter().enumerate() {
            next[i] -= c;
        }
        dk.push(next);
    }
    let mut psi = vec![BigInt::zero(); d + 1];
    psi[0] += &phi[d];
    for k in 1..=d {
        for (i, c) in dk[k].iter().enumerate() {
            psi[i] += &phi[d + k] * c;
        }
    }
    trim(&mut psi);
    psi
}

fn eval_rat(p: &[BigInt], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn rat_poly(p: &[BigInt]) -> Vec<BigRational> {
    p.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let c = r.last().unwrap().clone() / b[db].clone();
        let shift = r.len() - 1 - db;
        for (i, x) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - c.clone() * x;
        }
        r.pop();
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

fn rat_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Number of distinct real roots of a squarefree `p` in `(lo, hi]`.
pub fn sturm_count(p: &[BigInt], lo: &BigRational, hi: &BigRational) -> usize {
    let p0 = rat_poly(p);
    let p1: Vec<BigRational> = p0
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let mut seq = vec![p0, p1];
    while seq.last().is_some_and(|q| q.len() > 1) {
        let n = seq.len();
        let r = rat_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    let variations = |x: &BigRational| {
        let signs: Vec<i8> = seq
            .iter()
            .map(|q| rat_eval(q, x))
            .filter(|v| !v.is_zero())
            .map(|v| if v.is_positive() { 1 } else { -1 })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    variations(lo).saturating_sub(variations(hi))
}

/// Field descriptor: minimal polynomial and a dyadic isolating interval
/// `[lo/2^k, hi/2^k]` of the chosen positive real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberField {
    min_poly: IntPoly,
    lo: BigInt,
    hi: BigInt,
    scale: u32,
}

const INITIAL_BITS: u32 = 64;

impl NumberField {
    /// `Q(2 cos(π/n))` for odd `n >= 3`.
    pub fn two_cos_pi_over(n: u32) -> Result<Arc<NumberField>> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::ConstructionFailed(format!("n = {n} must be odd and >= 3")));
        }
        let approx = 2.0 * (std::f64::consts::PI / n as f64).cos();
        Self::with_min_poly(min_poly_two_cos(n), approx)
    }

    /// Builds the field of the root of `min_poly` nearest `approx`. Fails if
    /// `min_poly` is not monic or has no unique root in a small window around `approx`.
    pub fn with_min_poly(mut min_poly: IntPoly, approx: f64) -> Result<Arc<NumberField>> {
        trim(&mut min_poly);
        if min_poly.len() < 2 || !min_poly.last().unwrap().is_one() {
            return Err(Error::ConstructionFailed("minimal polynomial must be monic of degree >= 1".into()));
        }
        let scale = 24u32;
        let centre = (approx * f64::from(1u32 << scale)).round() as i64;
        // window of half-width 2^-10 around the estimate
        let (lo, hi) = (BigInt::from(centre - (1 << 14)), BigInt::from(centre + (1 << 14)));
        let to_rat = |v: &BigInt, s: u32| BigRational::new(v.clone(), BigInt::one() << s);
        if lo <= BigInt::zero() {
            return Err(Error::ConstructionFailed("root must be positive".into()));
        }
        let count = sturm_count(&min_poly, &to_rat(&lo, scale), &to_rat(&hi, scale));
        if count != 1 {
            return Err(Error::ConstructionFailed(format!(
                "minimal polynomial has {count} roots near {approx}, expected exactly one"
            )));
        }
        let mut field = NumberField { min_poly, lo, hi, scale };
        if field.degree() > 1 {
            while field.scale < INITIAL_BITS {
                field.bisect();
            }
        }
        Ok(Arc::new(field))
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// Halves the isolating interval in place.
    fn bisect(&mut self) {
        let lo = &self.lo << 1u32;
        let hi = &self.hi << 1u32;
        let mid = (&lo + &hi) >> 1u32;
        self.scale += 1;
        let at = |v: &BigInt, s: u32| eval_rat(&self.min_poly, &BigRational::new(v.clone(), BigInt::one() << s));
        let f_lo = at(&lo, self.scale);
        let f_mid = at(&mid, self.scale);
        if f_mid.is_zero() {
            // a rational root: only possible in degree 1
            self.lo = mid.clone();
            self.hi = mid;
        } else if f_lo.is_zero() || (f_lo.is_positive() != f_mid.is_positive()) {
            self.lo = lo;
            self.hi = mid;
        } else {
            self.lo = mid;
            self.hi = hi;
        }
    }

    /// Floating-point value of `λ`, for display only.
    pub fn approx(&self) -> f64 {
        let num = (&self.lo + &self.hi).to_f64().unwrap_or(f64::NAN);
        num / 2f64.powi(self.scale as i32 + 1)
    }

    pub fn zero(self: &Arc<Self>) -> Nf {
        Nf { field: Arc::clone(self), coords: vec![BigRational::zero(); self.degree()] }
    }

    pub fn from_int(self: &Arc<Self>, v: i64) -> Nf {
        let mut e = self.zero();
        e.coords[0] = BigRational::from_integer(BigInt::from(v));
        e
    }

    /// The generator `λ`.
    pub fn lambda(self: &Arc<Self>) -> Nf {
        let mut e = self.zero();
        if self.degree() == 1 {
            e.coords[0] = BigRational::from_integer(-self.min_poly[0].clone());
        } else {
            e.coords[1] = BigRational::one();
        }
        e
    }

    pub fn from_coords(self: &Arc<Self>, coords: Vec<BigRational>) -> Nf {
        assert_eq!(coords.len(), self.degree());
        Nf { field: Arc::clone(self), coords }
    }

    fn reduce(&self, mut prod: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                prod[k - d + i] -= &c * &self.min_poly[i];
            }
        }
        prod.truncate(d);
        prod
    }

    /// Sign of `Σ c_i λ^i` for integer `c`, not all zero.
    fn sign_of_integral(&self, coeffs: &[BigInt]) -> Ordering {
        if self.degree() == 1 {
            return coeffs[0].cmp(&BigInt::zero());
        }
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let mut scale = self.scale;
        loop {
            // scaled by 2^(scale*(d-1)); λ > 0 so positive and negative parts are monotone
            let d = coeffs.len();
            let eval = |x: &BigInt, positive: bool| -> BigInt {
                let mut acc = BigInt::zero();
                for (i, c) in coeffs.iter().enumerate().rev() {
                    acc *= x;
                    let keep = if positive { c.is_positive() } else { c.is_negative() };
                    if keep {
                        acc += c.abs() << (scale as usize * (d - 1 - i));
                    }
                }
                acc
            };
            let lower = eval(&lo, true) - eval(&hi, false);
            if lower.is_positive() {
                return Ordering::Greater;
            }
            let upper = eval(&hi, true) - eval(&lo, false);
            if upper.is_negative() {
                return Ordering::Less;
            }
            let mut f = NumberField { min_poly: self.min_poly.clone(), lo, hi, scale };
            f.bisect();
            lo = f.lo;
            hi = f.hi;
            scale = f.scale;
        }
    }
}

/// An element of `Q(λ)`.
#[derive(Clone)]
pub struct Nf {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl Nf {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Exact sign; terminates because a nonzero coordinate vector of length
    /// `d` is a nonzero value at `λ`.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let denom = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coords
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        self.field.sign_of_integral(&ints)
    }

    /// Gcd of the numerators when all coordinates are integral, else `None`.
    pub fn integral_content(&self) -> Option<BigInt> {
        if self.coords.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(self.coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer())))
    }

    /// Divides every coordinate by a nonzero integer.
    pub fn div_int(&self, k: &BigInt) -> Nf {
        let k = BigRational::from_integer(k.clone());
        Nf {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c / &k).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let lam = self.field.approx();
        self.coords
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * lam + c.to_f64().unwrap_or(f64::NAN))
    }

    fn same_field(&self, other: &Nf) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixing number fields"
        );
    }
}

impl PartialEq for Nf {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for Nf {}

impl fmt::Debug for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nf{:?}", self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl Add for &Nf {
    type Output = Nf;
    fn add(self, rhs: &Nf) -> Nf {
        self.same_field(rhs);
        Nf {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Nf {
    type Output = Nf;
    fn sub(self, rhs: &Nf) -> Nf {
        self.same_field(rhs);
        Nf {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Nf {
    type Output = Nf;
    fn neg(self) -> Nf {
        Nf {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Nf {
    type Output = Nf;
    fn mul(self, rhs: &Nf) -> Nf {
        self.same_field(rhs);
        let d = self.field.degree();
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Nf {
            field: Arc::clone(&self.field),
            coords: self.field.reduce(prod),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(10), ints(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic(18), ints(&[1, 0, 0, -1, 0, 0, 1]));
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(min_poly_two_cos(3), ints(&[-1, 1]));
        assert_eq!(min_poly_two_cos(5), ints(&[-1, -1, 1]));
        assert_eq!(min_poly_two_cos(7), ints(&[1, -2, -1, 1]));
        assert_eq!(min_poly_two_cos(9), ints(&[-1, -3, 0, 1]));
        for n in [3u32, 5, 7, 9, 11, 13, 15] {
            let p = min_poly_two_cos(n);
            let x = 2.0 * (std::f64::consts::PI / n as f64).cos();
            let v: f64 = p.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap());
            assert!(v.abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn sturm_counts_roots() {
        // (y-1)(y-2)(y+3)
        let p = ints(&[6, -7, 0, 1]);
        let r = |a: i64, b: i64| (BigRational::from_integer(a.into()), BigRational::from_integer(b.into()));
        let (lo, hi) = r(0, 3);
        assert_eq!(sturm_count(&p, &lo, &hi), 2);
        let (lo, hi) = r(-5, 5);
        assert_eq!(sturm_count(&p, &lo, &hi), 3);
    }

    #[test]
    fn golden_ratio_arithmetic() {
        let k = NumberField::two_cos_pi_over(5).unwrap();
        let phi = k.lambda();
        // φ^2 = φ + 1
        assert_eq!(&phi * &phi, &phi + &k.from_int(1));
        assert_eq!(phi.sign(), Ordering::Greater);
        // F(k)φ - F(k+1) has sign (-1)^(k+1)
        let lin = |a: i64, b: i64| &(&k.from_int(a) * &phi) + &k.from_int(b);
        assert_eq!(lin(1, -2).sign(), Ordering::Less);
        assert_eq!(lin(5, -8).sign(), Ordering::Greater);
        assert_eq!(lin(13, -21).sign(), Ordering::Greater);
        assert_eq!(lin(21, -34).sign(), Ordering::Less);
        // far beyond the initial interval precision: F(61) φ - F(62)
        let (f61, f62) = (2_504_730_781_961i64, 4_052_739_537_881i64);
        assert_eq!(lin(f61, -f62).sign(), Ordering::Greater);
        assert_eq!(lin(0, 0).sign(), Ordering::Equal);
    }

    #[test]
    fn rational_lambda() {
        let k = NumberField::two_cos_pi_over(3).unwrap();
        assert_eq!(k.degree(), 1);
        assert_eq!(k.lambda(), k.from_int(1));
    }

    #[test]
    fn signs_match_floating_point() {
        let k = NumberField::two_cos_pi_over(7).unwrap();
        let lam = k.lambda();
        let lam2 = &lam * &lam;
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                for c in -4..=4i64 {
                    let e = &(&(&k.from_int(a) * &lam2) + &(&k.from_int(b) * &lam)) + &k.from_int(c);
                    let f = e.to_f64();
                    let expected = if e.is_zero() { Ordering::Equal } else { f.partial_cmp(&0.0).unwrap() };
                    assert_eq!(e.sign(), expected, "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn corrupted_polynomial_rejected() {
        let mut bad = min_poly_two_cos(7);
        bad[0] += 1;
        assert!(matches!(
            NumberField::with_min_poly(bad, 2.0 * (std::f64::consts::PI / 7.0).cos()),
            Err(Error::ConstructionFailed(_))
        ));
    }
}
