//! A left-order on `G1` from an exact lifted boundary action.
//!
//! `G1 / <h> = Z/2 * Z/n` is realized in the Hecke group generated by
//! `S = [[0,-1],[1,0]]` and `B' = [[0,-1],[1,λ']]`, `λ' = 2 cos(b1 π/n)`, a
//! Galois conjugate of `λ = 2 cos(π/n)` (so `λ' ∈ Q(λ)` and the representation
//! is still faithful). `a -> S` and `b -> B = -(B')^-2`, which rotates `RP^1`
//! by `1/n` of a turn and makes `μ̄ = B^-b1 S = (B')^-1 S` parabolic. Both act
//! as rotations in the positive direction, so they have unique lifts `ã`, `b̃`
//! to the line displacing every point forward by less than one turn; then
//! `ã^2 = b̃^n = T_1`, and `h` acts as the deck translation.
//!
//! The order compares `w̃(p_i)` with `p_i` along the sequence `p_0, .., p_3`,
//! where `p_0` is the winding-zero lift of the parabolic fixed point of the
//! meridian `μ̄ = B^-b1 S`, and `p_1, p_2, p_3` are `[1:0]`, `[0:1]`, `[1:1]`.
//! Three distinct projective points pin down a projective map and `p_0`
//! pins the winding, so only the identity fixes all four.

use std::cmp::Ordering;
use std::sync::Arc;

use super::field::NumberField;
use super::lifted::{Drift, LiftedBoundaryPoint, LiftedMap, Mat2, ProjPoint};
use super::{ConeOracle, Decision, GroupTag, Sign, Trace};
use crate::cfrac::TwoBridgeParams;
use crate::error::{Error, Result};
use crate::groups::{FreeWord, G1Element, G1Letter, G1, G1_ALPHABET};

/// Exact lifted action `{ã, b̃}` of `G1` on the line.
#[derive(Clone, Debug)]
pub struct G1Realization {
    field: Arc<NumberField>,
    g1: G1,
    lift_a: LiftedMap,
    /// `b̃^j` for `j = 0..n`; index 0 unused.
    lift_b_pow: Vec<LiftedMap>,
    mu_matrix: Mat2,
    test_points: Vec<LiftedBoundaryPoint>,
}

impl G1Realization {
    pub fn new(params: &TwoBridgeParams) -> Result<Self> {
        let n = 2 * params.b1 + 1;
        let field = NumberField::two_cos_pi_over(n as u32)?;
        Self::with_field(params, field)
    }

    /// Builds the realization over an explicitly supplied field; all relations
    /// are re-checked exactly so a wrong field is reported, not used.
    pub fn with_field(params: &TwoBridgeParams, field: Arc<NumberField>) -> Result<Self> {
        let g1 = G1::new(params.b1);
        let n = g1.n() as u32;
        let k = &field;
        let s = Mat2::new(k.from_int(0), k.from_int(-1), k.from_int(1), k.from_int(0));
        // λ' = 2cos(b1 π/n) = D_b1(λ), with D_0 = 2, D_1 = λ, D_(j+1) = λ D_j - D_(j-1)
        let lam = k.lambda();
        let (mut d0, mut d1) = (k.from_int(2), lam.clone());
        for _ in 1..params.b1 {
            let next = &(&lam * &d1) - &d0;
            d0 = std::mem::replace(&mut d1, next);
        }
        let hecke = Mat2::new(k.from_int(0), k.from_int(-1), k.from_int(1), d1);
        // b -> -(B')^-2 rotates by 1/n of a turn and makes b^-b1 a parabolic
        let b = hecke.adjugate().pow(2).neg();
        let minus_one = Mat2::identity(k).neg();
        if s.pow(2) != minus_one {
            return Err(Error::ConstructionFailed("S^2 != -I".into()));
        }
        if b.pow(n) != minus_one {
            return Err(Error::ConstructionFailed(format!("B^{n} != -I over the supplied field")));
        }
        let lift_a = LiftedMap { matrix: s.clone(), drift: Drift::Forward };
        let lift_b_pow: Vec<LiftedMap> = (0..n)
            .map(|j| LiftedMap { matrix: b.pow(j), drift: Drift::Forward })
            .collect();

        // μ̄ = B^-b1 S is parabolic: trace ±2
        let mu_matrix = b.adjugate().pow(params.b1 as u32).mul(&s);
        let tr = mu_matrix.trace();
        if tr != k.from_int(2) && tr != k.from_int(-2) {
            return Err(Error::ConstructionFailed(format!("trace of μ̄ is {tr:?}, not ±2")));
        }
        let fixed = parabolic_fixed_point(&mu_matrix);
        let test_points = vec![
            LiftedBoundaryPoint::new(fixed, 0),
            LiftedBoundaryPoint::new(ProjPoint::from_ints(k, 1, 0), 0),
            LiftedBoundaryPoint::new(ProjPoint::from_ints(k, 0, 1), 0),
            LiftedBoundaryPoint::new(ProjPoint::from_ints(k, 1, 1), 0),
        ];
        let real = G1Realization { field: Arc::clone(k), g1, lift_a, lift_b_pow, mu_matrix, test_points };
        real.check_relations()?;
        Ok(real)
    }

    fn check_relations(&self) -> Result<()> {
        let b1 = &self.lift_b_pow[1];
        for p in &self.test_points {
            let aa = self.lift_a.apply(&self.lift_a.apply(p));
            if aa != p.translate(1) {
                return Err(Error::ConstructionFailed("ã^2 != T_1".into()));
            }
            let mut q = p.clone();
            for _ in 0..self.g1.n() {
                q = b1.apply(&q);
            }
            if q != p.translate(1) {
                return Err(Error::ConstructionFailed(format!("b̃^{} != T_1", self.g1.n())));
            }
        }
        // the lift of μ fixes p_0: the meridian has translation number zero
        let p0 = &self.test_points[0];
        let mu = self.g1.normal_form(&self.g1.meridian())?;
        if self.act(&mu, p0) != *p0 {
            return Err(Error::ConstructionFailed("μ̃ does not fix its lifted fixed point".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn group(&self) -> &G1 {
        &self.g1
    }

    pub fn meridian_matrix(&self) -> &Mat2 {
        &self.mu_matrix
    }

    pub fn test_points(&self) -> &[LiftedBoundaryPoint] {
        &self.test_points
    }

    /// Image of a lifted point under the element with normal form `nf`.
    pub fn act(&self, nf: &G1Element, p: &LiftedBoundaryPoint) -> LiftedBoundaryPoint {
        let mut q = p.translate(nf.central);
        for letter in nf.delta.iter().rev() {
            q = match *letter {
                G1Letter::A => self.lift_a.apply(&q),
                G1Letter::B(j) => self.lift_b_pow[j as usize].apply(&q),
            };
        }
        q
    }
}

/// Fixed point of a parabolic `[[a,b],[c,d]]`: `[a-d : 2c]`, or `[1:0]` when `c = 0`.
fn parabolic_fixed_point(m: &Mat2) -> ProjPoint {
    if m.c.is_zero() {
        ProjPoint::new(m.a.field().from_int(1), m.a.field().zero())
    } else {
        ProjPoint::new(&m.a - &m.d, &m.c + &m.c)
    }
}

/// Positive cone on `G1` decided by first displacement along the test sequence.
#[derive(Clone, Debug)]
pub struct G1Order {
    realization: G1Realization,
}

impl G1Order {
    pub fn new(params: &TwoBridgeParams) -> Result<Self> {
        Ok(Self { realization: G1Realization::new(params)? })
    }

    pub fn from_realization(realization: G1Realization) -> Self {
        Self { realization }
    }

    pub fn realization(&self) -> &G1Realization {
        &self.realization
    }
}

impl ConeOracle for G1Order {
    fn group(&self) -> GroupTag {
        GroupTag::G1
    }

    fn alphabet(&self) -> &'static [char] {
        &G1_ALPHABET
    }

    fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        self.realization.g1.is_identity(w)
    }

    fn decide(&self, w: &FreeWord) -> Result<Decision> {
        let nf = self.realization.g1.normal_form(w)?;
        if nf.is_identity() {
            return Ok(Decision { sign: Sign::Identity, trace: Trace::NormalForm });
        }
        for (index, p) in self.realization.test_points.iter().enumerate() {
            match self.realization.act(&nf, p).cmp(p) {
                Ordering::Equal => continue,
                ord => {
                    return Ok(Decision { sign: Sign::from_ordering(ord), trace: Trace::TestPoint { index } })
                }
            }
        }
        Err(Error::InternalCheckFailed(format!("nontrivial element {w} fixes every test point")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::knot_params;
    use crate::orders::field::min_poly_two_cos;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn builds_for_grid() {
        for b1 in 1..=5 {
            let k = knot_params(2 * b1 + 1, 4).unwrap();
            let r = G1Realization::new(&k).unwrap();
            assert_eq!(r.field().degree() as i64, match b1 { 1 => 1, 2 => 2, 3 => 3, 4 => 3, _ => 5 });
        }
    }

    #[test]
    fn trefoil_realization() {
        let k = knot_params(3, 4).unwrap();
        let r = G1Realization::new(&k).unwrap();
        // μ̄ = (B')^-1 S = [[1,-λ'],[0,1]], fixed point ∞
        let f = r.field();
        let mu = r.meridian_matrix();
        assert_eq!(mu.a, f.from_int(1));
        assert_eq!(mu.b, f.from_int(-1));
        assert!(mu.c.is_zero());
        assert!(r.test_points()[0].point.same_point(&ProjPoint::from_ints(f, 1, 0)));
    }

    #[test]
    fn wrong_field_rejected() {
        let k = knot_params(7, 4).unwrap();
        // Q(2cos(π/5)) instead of Q(2cos(π/7))
        let f = NumberField::with_min_poly(min_poly_two_cos(5), 1.618).unwrap();
        assert!(matches!(G1Realization::with_field(&k, f), Err(Error::ConstructionFailed(_))));
    }

    #[test]
    fn fiber_positive_and_meridian_nontrivial() {
        let k = knot_params(5, -4).unwrap();
        let o = G1Order::new(&k).unwrap();
        assert_eq!(o.sign(&w("a^2")).unwrap(), Sign::Positive);
        assert_eq!(o.sign(&w("b^5")).unwrap(), Sign::Positive);
        assert_eq!(o.sign(&w("a^-2")).unwrap(), Sign::Negative);
        let mu = o.realization().group().meridian();
        let s = o.sign(&mu).unwrap();
        assert_ne!(s, Sign::Identity);
        assert_eq!(o.sign(&mu.inverse()).unwrap(), s.flip());
        assert_eq!(o.sign(&w("b a^2 b^-1 a^-2")).unwrap(), Sign::Identity);
    }
}
