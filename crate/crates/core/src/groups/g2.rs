//! Word problem in `G2 = <x, y, z | x^-1 y x = y^-1, y = z^b2>`.
//!
//! Eliminating `y` gives the HNN extension `<x, z | x^-1 z^b2 x = z^-b2>`. With
//! `π` the exponent sum of `x`, the kernel is generated by `z_i = x^-i z x^i`
//! subject to `z_i^b2 = z_(i+1)^-b2`. All these relations identify the single
//! element `y = z_0^b2 = z_i^(±b2)`, which is therefore central in `ker π`, and
//! `ker π / <y>` is the free product of the cyclic groups `<z_i> / <z_i^b2>`.
//!
//! Canonical form: `x^xpow · z_(i1)^(r1) ... z_(ik)^(rk) · y^central` with
//! adjacent indices distinct and `0 < r < |b2|`. Every block `z_i^(|b2|)` is
//! absorbed into the central `y`-exponent as `y^(sign(b2) (-1)^i)`.

use serde::Serialize;

use super::word::{free_reduce, FreeWord};
use crate::error::Result;

/// One syllable `z_index^power` of the kernel part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ZSyllable {
    pub index: i64,
    pub power: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct G2Element {
    /// Image under `π: x -> 1, y, z -> 0`.
    pub xpow: i64,
    /// Alternating kernel word with `0 < power < |b2|`.
    pub tail: Vec<ZSyllable>,
    /// Exponent of the central kernel element `y`.
    pub central: i64,
}

impl G2Element {
    pub fn is_identity(&self) -> bool {
        self.xpow == 0 && self.tail.is_empty() && self.central == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct G2 {
    b2: i64,
}

pub const G2_ALPHABET: [char; 3] = ['x', 'y', 'z'];

impl G2 {
    pub fn new(b2: i64) -> Self {
        assert!(b2.abs() >= 2, "|b2| must be at least 2");
        Self { b2 }
    }

    pub fn b2(&self) -> i64 {
        self.b2
    }

    /// Peripheral generator `z x^2`, the image of the fiber `h`.
    pub fn fiber_image(&self) -> FreeWord {
        FreeWord::parse("z x^2").unwrap()
    }

    pub fn normal_form(&self, w: &FreeWord) -> Result<G2Element> {
        w.check_alphabet(&G2_ALPHABET)?;
        // z-syllables tagged with minus the x-exponent of their prefix
        let mut prefix = 0i64;
        let mut raw = Vec::new();
        for &(g, e) in w.syllables() {
            match g {
                'x' => prefix += e,
                'y' => raw.push((-prefix, self.b2 * e)),
                _ => raw.push((-prefix, e)),
            }
        }
        let mut nf = G2Element { xpow: prefix, ..Default::default() };
        for (index, e) in raw {
            self.push_z(&mut nf, index + prefix, e);
        }
        Ok(nf)
    }

    /// Right-multiplies the kernel part by `z_index^e`.
    fn push_z(&self, nf: &mut G2Element, index: i64, e: i64) {
        let m = self.b2.abs();
        // z_i^m = y^(sign(b2) (-1)^i)
        let block = self.b2.signum() * if index.rem_euclid(2) == 0 { 1 } else { -1 };
        nf.central += block * e.div_euclid(m);
        let r = e.rem_euclid(m);
        if r == 0 {
            return;
        }
        match nf.tail.last_mut() {
            Some(last) if last.index == index => {
                let mut sum = last.power + r;
                if sum >= m {
                    sum -= m;
                    nf.central += block;
                }
                if sum == 0 {
                    nf.tail.pop();
                } else {
                    last.power = sum;
                }
            }
            _ => nf.tail.push(ZSyllable { index, power: r }),
        }
    }

    /// Canonical word `x^xpow Π (x^-i z^r x^i) y^central`.
    pub fn word(&self, nf: &G2Element) -> FreeWord {
        let mut raw = vec![('x', nf.xpow)];
        for s in &nf.tail {
            raw.extend([('x', -s.index), ('z', s.power), ('x', s.index)]);
        }
        raw.push(('y', nf.central));
        free_reduce(raw)
    }

    /// The homomorphism `t: ker π -> Z`, `z_i -> (-1)^i`, so `t(y) = b2`.
    /// Only meaningful when `xpow == 0`.
    pub fn kernel_t(&self, nf: &G2Element) -> i64 {
        let tail: i64 = nf
            .tail
            .iter()
            .map(|s| if s.index.rem_euclid(2) == 0 { s.power } else { -s.power })
            .sum();
        tail + self.b2 * nf.central
    }

    pub fn equal(&self, u: &FreeWord, v: &FreeWord) -> Result<bool> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    pub fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }
}
