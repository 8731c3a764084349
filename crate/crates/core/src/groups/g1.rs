//! Word problem in the torus-knot group `G1 = <a, b | a^2 = b^n>`, `n = 2*b1 + 1`.
//!
//! `h = a^2 = b^n` is central and `G1 / <h>` is the free product `Z/2 * Z/n`.
//! Every element is uniquely `s(δ) h^k` with `δ` an alternating word in `a` and
//! `b^j` (`1 <= j < n`) and `s` the section lifting letters to `a`, `b^j`.

use serde::Serialize;

use super::word::FreeWord;
use crate::error::Result;

/// Letter of the alternating quotient word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum G1Letter {
    A,
    /// `b^j` with `1 <= j < n`.
    B(u32),
}

/// Normal form `(δ, k)` of an element `s(δ) h^k`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct G1Element {
    pub delta: Vec<G1Letter>,
    pub central: i64,
}

impl G1Element {
    pub fn is_identity(&self) -> bool {
        self.delta.is_empty() && self.central == 0
    }
}

/// The group `G1` for a fixed `b1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct G1 {
    b1: i64,
}

pub const G1_ALPHABET: [char; 2] = ['a', 'b'];

impl G1 {
    pub fn new(b1: i64) -> Self {
        assert!(b1 >= 1, "b1 must be positive");
        Self { b1 }
    }

    pub fn b1(&self) -> i64 {
        self.b1
    }

    /// Order `n = 2*b1 + 1` of `b` modulo the center.
    pub fn n(&self) -> i64 {
        2 * self.b1 + 1
    }

    /// Meridian `μ = b^-b1 a`.
    pub fn meridian(&self) -> FreeWord {
        FreeWord::parse(&format!("b^{} a", -self.b1)).unwrap()
    }

    /// Regular fiber `h = a^2`.
    pub fn fiber(&self) -> FreeWord {
        FreeWord::power('a', 2)
    }

    pub fn normal_form(&self, w: &FreeWord) -> Result<G1Element> {
        w.check_alphabet(&G1_ALPHABET)?;
        let mut nf = G1Element::default();
        for &(g, e) in w.syllables() {
            match g {
                'a' => self.push_a(&mut nf, e),
                _ => self.push_b(&mut nf, e),
            }
        }
        Ok(nf)
    }

    fn push_a(&self, nf: &mut G1Element, e: i64) {
        nf.central += e.div_euclid(2);
        if e.rem_euclid(2) == 1 {
            if nf.delta.last() == Some(&G1Letter::A) {
                nf.delta.pop();
                nf.central += 1;
            } else {
                nf.delta.push(G1Letter::A);
            }
        }
    }

    fn push_b(&self, nf: &mut G1Element, e: i64) {
        let n = self.n();
        nf.central += e.div_euclid(n);
        let r = e.rem_euclid(n);
        if r == 0 {
            return;
        }
        if let Some(G1Letter::B(j)) = nf.delta.last_mut() {
            let mut sum = *j as i64 + r;
            if sum >= n {
                sum -= n;
                nf.central += 1;
            }
            if sum == 0 {
                nf.delta.pop();
            } else {
                *j = sum as u32;
            }
        } else {
            nf.delta.push(G1Letter::B(r as u32));
        }
    }

    /// The canonical word `s(δ) a^(2k)` of a normal form.
    pub fn word(&self, nf: &G1Element) -> FreeWord {
        let delta = nf.delta.iter().map(|l| match *l {
            G1Letter::A => ('a', 1),
            G1Letter::B(j) => ('b', j as i64),
        });
        super::word::free_reduce(delta.chain(std::iter::once(('a', 2 * nf.central))))
    }

    pub fn equal(&self, u: &FreeWord, v: &FreeWord) -> Result<bool> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }

    pub fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        Ok(self.normal_form(w)?.is_identity())
    }
}
