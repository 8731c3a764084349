//! Points of the universal cover of `RP^1` and the lifted action of `SL(2)`
//! matrices over `Q(λ)`.
//!
//! A projective point is stored as a vector `(u, v)` normalized to `v > 0`, or
//! `v = 0, u > 0`, so its angle `θ = arg(u + iv)` lies in `[0, π)`. A lifted
//! point `(p, w)` stands for the angle `θ(p) + wπ` on the line. The deck
//! translation `T_1` adds one to the winding.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::One;

use super::field::{Nf, NumberField};

/// A point of `RP^1` with coordinates in `Q(λ)`, in canonical sign.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    u: Nf,
    v: Nf,
}

impl ProjPoint {
    /// Panics if both coordinates vanish.
    pub fn new(u: Nf, v: Nf) -> Self {
        let flip = match v.sign() {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match u.sign() {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => panic!("(0, 0) is not a projective point"),
            },
        };
        let (u, v) = if flip { (-&u, -&v) } else { (u, v) };
        // strip integer content so coordinates do not grow along long words
        match (u.integral_content(), v.integral_content()) {
            (Some(a), Some(b)) => {
                let g = num_integer::Integer::gcd(&a, &b);
                if g > One::one() {
                    return ProjPoint { u: u.div_int(&g), v: v.div_int(&g) };
                }
                ProjPoint { u, v }
            }
            _ => ProjPoint { u, v },
        }
    }

    pub fn from_ints(field: &Arc<NumberField>, u: i64, v: i64) -> Self {
        Self::new(field.from_int(u), field.from_int(v))
    }

    pub fn u(&self) -> &Nf {
        &self.u
    }

    pub fn v(&self) -> &Nf {
        &self.v
    }

    /// `u_self v_other - v_self u_other`.
    fn cross(&self, other: &ProjPoint) -> Nf {
        &(&self.u * &other.v) - &(&self.v * &other.u)
    }

    /// Compares angles in `[0, π)`.
    pub fn angle_cmp(&self, other: &ProjPoint) -> Ordering {
        // both angles lie in [0, π), so sin(θ_other - θ_self) has the sign of the cross product
        other.cross(self).sign()
    }

    pub fn same_point(&self, other: &ProjPoint) -> bool {
        self.cross(other).is_zero()
    }

    pub fn approx_angle(&self) -> f64 {
        self.v.to_f64().atan2(self.u.to_f64())
    }
}

/// A point on the line covering `RP^1`: angle `θ(point) + winding·π`.
#[derive(Clone, Debug)]
pub struct LiftedBoundaryPoint {
    pub point: ProjPoint,
    pub winding: i64,
}

impl LiftedBoundaryPoint {
    pub fn new(point: ProjPoint, winding: i64) -> Self {
        Self { point, winding }
    }

    pub fn translate(&self, k: i64) -> Self {
        Self { point: self.point.clone(), winding: self.winding + k }
    }

    /// Position on the line, for display.
    pub fn approx(&self) -> f64 {
        self.point.approx_angle() / std::f64::consts::PI + self.winding as f64
    }
}

impl PartialEq for LiftedBoundaryPoint {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for LiftedBoundaryPoint {}

impl PartialOrd for LiftedBoundaryPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LiftedBoundaryPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.winding
            .cmp(&other.winding)
            .then_with(|| self.point.angle_cmp(&other.point))
    }
}

/// A 2x2 matrix over `Q(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub a: Nf,
    pub b: Nf,
    pub c: Nf,
    pub d: Nf,
}

impl Mat2 {
    pub fn new(a: Nf, b: Nf, c: Nf, d: Nf) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity(field: &Arc<NumberField>) -> Self {
        Self::new(field.from_int(1), field.zero(), field.zero(), field.from_int(1))
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    pub fn pow(&self, n: u32) -> Mat2 {
        let mut out = Mat2::identity(self.a.field());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Inverse of a determinant-one matrix.
    pub fn adjugate(&self) -> Mat2 {
        Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn det(&self) -> Nf {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> Nf {
        &self.a + &self.d
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(
            &(&self.a * p.u()) + &(&self.b * p.v()),
            &(&self.c * p.u()) + &(&self.d * p.v()),
        )
    }
}

/// Direction in which a fixed-point-free lifted map displaces every point by
/// strictly less than one turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Drift {
    Forward,
    Backward,
}

/// Lift of a fixed-point-free projective map, pinned by its drift direction.
#[derive(Clone, Debug)]
pub struct LiftedMap {
    pub matrix: Mat2,
    pub drift: Drift,
}

impl LiftedMap {
    pub fn apply(&self, p: &LiftedBoundaryPoint) -> LiftedBoundaryPoint {
        let image = self.matrix.apply(&p.point);
        let winding = match (self.drift, image.angle_cmp(&p.point)) {
            (Drift::Forward, Ordering::Greater) => p.winding,
            (Drift::Forward, _) => p.winding + 1,
            (Drift::Backward, Ordering::Less) => p.winding,
            (Drift::Backward, _) => p.winding - 1,
        };
        LiftedBoundaryPoint { point: image, winding }
    }

    pub fn inverse(&self) -> LiftedMap {
        LiftedMap {
            matrix: self.matrix.adjugate(),
            drift: match self.drift {
                Drift::Forward => Drift::Backward,
                Drift::Backward => Drift::Forward,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turn_lift() {
        let k = NumberField::two_cos_pi_over(3).unwrap();
        let s = Mat2::new(k.from_int(0), k.from_int(-1), k.from_int(1), k.from_int(0));
        let lift = LiftedMap { matrix: s, drift: Drift::Forward };
        let p = LiftedBoundaryPoint::new(ProjPoint::from_ints(&k, 1, 0), 0);
        let q = lift.apply(&p);
        assert_eq!(q.winding, 0);
        assert!(q.point.same_point(&ProjPoint::from_ints(&k, 0, 1)));
        let r = lift.apply(&q);
        assert_eq!(r, p.translate(1));
        assert_eq!(lift.inverse().apply(&r), q);
    }

    #[test]
    fn lifted_order() {
        let k = NumberField::two_cos_pi_over(5).unwrap();
        let pt = |u, v, w| LiftedBoundaryPoint::new(ProjPoint::from_ints(&k, u, v), w);
        assert!(pt(1, 0, 0) < pt(1, 1, 0));
        assert!(pt(1, 1, 0) < pt(0, 1, 0));
        assert!(pt(0, 1, 0) < pt(-1, 1, 0));
        assert!(pt(-1, 1, 0) < pt(1, 0, 1));
        assert_eq!(pt(2, 2, 3), pt(-1, -1, 3));
        assert!(pt(5, -1, -1) < pt(1, 0, 0));
    }
}
