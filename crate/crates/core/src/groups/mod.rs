//! Words, presentations and normal forms for the two JSJ pieces of the surgered
//! manifold and for the amalgam presentation of its fundamental group.
//!
//! `G1` (the torus-knot exterior group, also written `Γ_{2b1}`) and `G2`
//! each have a total normal form; the amalgam `π1(M)` is only represented by
//! its presentation and the gluing of the peripheral subgroups.

mod g1;
mod g2;
mod word;

pub use g1::{G1Element, G1Letter, G1, G1_ALPHABET};
pub use g2::{G2Element, ZSyllable, G2, G2_ALPHABET};
pub use word::{free_reduce, FreeWord};

use serde::Serialize;

use crate::cfrac::TwoBridgeParams;
use crate::error::Result;

/// A finite presentation. Relators are freely reduced and nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<char>,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    fn new(generators: &[char], relators: &[&str]) -> Self {
        let relators = relators
            .iter()
            .map(|r| FreeWord::parse(r).expect("relator syntax"))
            .collect::<Vec<_>>();
        debug_assert!(relators.iter().all(|r| !r.is_empty()));
        Self {
            generators: generators.to_vec(),
            relators,
        }
    }
}

/// Which side of the gluing torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    G1,
    G2,
}

/// `μ^r h^s` on the `G1` side, `y^r (z x^2)^s` on the `G2` side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PeripheralVector {
    pub r: i64,
    pub s: i64,
}

impl PeripheralVector {
    pub fn new(r: i64, s: i64) -> Self {
        Self { r, s }
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.s == 0
    }

    /// All nonzero vectors with `|r|, |s| <= bound`, in a fixed order.
    pub fn nonzero_box(bound: i64) -> impl Iterator<Item = PeripheralVector> {
        (-bound..=bound)
            .flat_map(move |s| (-bound..=bound).map(move |r| PeripheralVector { r, s }))
            .filter(|v| !v.is_zero())
    }
}

pub fn peripheral_word(params: &TwoBridgeParams, side: Side, v: PeripheralVector) -> FreeWord {
    match side {
        Side::G1 => {
            let g = G1::new(params.b1);
            g.meridian().pow(v.r).mul(&g.fiber().pow(v.s))
        }
        Side::G2 => FreeWord::gen('y').pow(v.r).mul(&G2::new(params.b2).fiber_image().pow(v.s)),
    }
}

/// The gluing `φ: μ -> y, h -> z x^2`, the identity in the bases `(μ, h)` and `(y, z x^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GluingMap;

impl GluingMap {
    pub fn apply(&self, v: PeripheralVector) -> PeripheralVector {
        v
    }

    /// Image of an arbitrary peripheral element as a `G2` word.
    pub fn image_word(&self, params: &TwoBridgeParams, v: PeripheralVector) -> FreeWord {
        peripheral_word(params, Side::G2, self.apply(v))
    }

    /// Checks `φ(μ) = y` and `φ(h) = z x^2` by `G2` normal forms.
    pub fn verify(&self, params: &TwoBridgeParams) -> Result<bool> {
        let g2 = G2::new(params.b2);
        let mu_ok = g2.equal(&self.image_word(params, PeripheralVector::new(1, 0)), &FreeWord::gen('y'))?;
        let h_ok = g2.equal(
            &self.image_word(params, PeripheralVector::new(0, 1)),
            &FreeWord::parse("z x^2")?,
        )?;
        Ok(mu_ok && h_ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentations {
    pub g1: GroupPresentation,
    pub g2: GroupPresentation,
    pub amalgam: GroupPresentation,
    pub gluing: GluingMap,
}

/// `P1 = <a,b : a^2 = b^(2b1+1)>`, `P2 = <x,y,z : x^-1 y x = y^-1, y = z^b2>`
/// and the amalgam with `b^-b1 a = y`, `a^2 = z x^2`.
pub fn presentations(params: &TwoBridgeParams) -> Presentations {
    let (n, b1, b2) = (2 * params.b1 + 1, params.b1, params.b2);
    let r_g1 = format!("a^2 b^{}", -n);
    let r_kb = "x^-1 y x y".to_string();
    let r_cable = format!("y z^{}", -b2);
    let r_mu = format!("b^{} a y^-1", -b1);
    let r_h = "a^2 x^-2 z^-1".to_string();
    Presentations {
        g1: GroupPresentation::new(&['a', 'b'], &[&r_g1]),
        g2: GroupPresentation::new(&['x', 'y', 'z'], &[&r_kb, &r_cable]),
        amalgam: GroupPresentation::new(
            &['x', 'y', 'z', 'a', 'b'],
            &[&r_kb, &r_cable, &r_g1, &r_mu, &r_h],
        ),
        gluing: GluingMap,
    }
}

/// `G1 = <b, c : b = c b^(2b1) c>` via the Tietze move `c = b a^-1`.
pub fn g1_bc_presentation(params: &TwoBridgeParams) -> GroupPresentation {
    GroupPresentation::new(&['b', 'c'], &[&format!("b^-1 c b^{} c", 2 * params.b1)])
}

/// `a -> c^-1 b`: rewrites a `{a, b}` word over `{b, c}`.
pub fn to_bc(w: &FreeWord) -> FreeWord {
    w.substitute(|g| match g {
        'a' => FreeWord::parse("c^-1 b").unwrap(),
        other => FreeWord::gen(other),
    })
}

/// `c -> b a^-1`: rewrites a `{b, c}` word over `{a, b}`.
pub fn from_bc(w: &FreeWord) -> FreeWord {
    w.substitute(|g| match g {
        'c' => FreeWord::parse("b a^-1").unwrap(),
        other => FreeWord::gen(other),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::knot_params;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn amalgam_presentation_of_six_two() {
        let p = presentations(&knot_params(3, 4).unwrap());
        let expected: Vec<FreeWord> = ["x^-1 y x y", "y z^-2", "a^2 b^-3", "b^-1 a y^-1", "a^2 x^-2 z^-1"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(p.amalgam.relators, expected);
        let p = presentations(&knot_params(5, -4).unwrap());
        assert_eq!(p.amalgam.relators[3], w("b^-2 a y^-1"));
        assert_eq!(p.g2.relators[1], w("y z^2"));
    }

    #[test]
    fn bc_presentation_round_trip() {
        for b1 in 1..=4 {
            let k = knot_params(2 * b1 + 1, 4).unwrap();
            let g1 = G1::new(b1);
            let rel = &g1_bc_presentation(&k).relators[0];
            // the {b,c} relator holds in G1
            assert!(g1.is_identity(&from_bc(rel)).unwrap());
            // and a^2 b^-n maps to a consequence of it: the Tietze maps are mutually inverse
            for u in ["a", "b", "a b^-2 a^3"] {
                assert_eq!(from_bc(&to_bc(&w(u))), w(u));
            }
        }
    }

    #[test]
    fn peripheral_words() {
        let k = knot_params(5, 4).unwrap();
        assert_eq!(peripheral_word(&k, Side::G1, PeripheralVector::new(1, 0)), w("b^-2 a"));
        assert_eq!(peripheral_word(&k, Side::G2, PeripheralVector::new(0, 1)), w("z x^2"));
        assert!(peripheral_word(&k, Side::G1, PeripheralVector::new(0, 0)).is_empty());
        assert!(GluingMap.verify(&k).unwrap());
    }

    #[test]
    fn peripheral_faithfulness() {
        for (c1, c2) in [(3, 4), (3, -4), (5, 4), (7, -6)] {
            let k = knot_params(c1, c2).unwrap();
            let (g1, g2) = (G1::new(k.b1), G2::new(k.b2));
            for r in -6..=6 {
                for s in -6..=6 {
                    let v = PeripheralVector::new(r, s);
                    let t1 = g1.is_identity(&peripheral_word(&k, Side::G1, v)).unwrap();
                    let t2 = g2.is_identity(&peripheral_word(&k, Side::G2, v)).unwrap();
                    assert_eq!(t1, v.is_zero());
                    assert_eq!(t2, v.is_zero());
                }
            }
        }
    }

    #[test]
    fn peripheral_subgroups_are_abelian() {
        let k = knot_params(7, -6).unwrap();
        let (g1, g2) = (G1::new(k.b1), G2::new(k.b2));
        let (mu, h) = (g1.meridian(), g1.fiber());
        assert!(g1.equal(&mu.mul(&h), &h.mul(&mu)).unwrap());
        let (y, zx2) = (w("y"), g2.fiber_image());
        assert!(g2.equal(&y.mul(&zx2), &zx2.mul(&y)).unwrap());
    }
}
