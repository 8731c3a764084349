//! Positive-cone oracles.
//!
//! A [`ConeOracle`] decides, for every word, whether the element is positive,
//! negative or the identity. Families of orders are generated from a base
//! oracle by conjugation and reversal, see [`FamilyMember`].
//!
//! Conjugation follows `a <^g b  <=>  a g < b g`, so `w` is positive under
//! `<^g` iff `g^-1 w g` is positive under `<`. [`OrderFamilySpec::conjugator`]
//! stores this `g`.

pub mod field;
mod g1;
mod g2;
pub mod lifted;
mod magnus;

pub use g1::{G1Order, G1Realization};
pub use g2::{kernel_free_word, schreier_word_string, G2Order, SchreierGen};
pub use magnus::magnus_sign;

use std::cmp::Ordering;

use serde::Serialize;

use crate::cfrac::TwoBridgeParams;
use crate::error::Result;
use crate::groups::{peripheral_word, FreeWord, PeripheralVector, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Positive,
    Negative,
    Identity,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
            Sign::Identity => Sign::Identity,
        }
    }

    pub fn from_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Greater => Sign::Positive,
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Identity,
        }
    }

    pub fn from_i64(v: i64) -> Sign {
        Sign::from_ordering(v.cmp(&0))
    }

    /// `Positive -> 1`, `Negative -> -1`, `Identity -> 0`.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
            Sign::Identity => 0,
        }
    }
}

/// What settled a decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "layer")]
pub enum Trace {
    /// The word is trivial by the group's normal form.
    NormalForm,
    /// `G1`: first test point moved by the lifted action.
    TestPoint { index: usize },
    /// `G2` layer 1: `π(w) != 0`.
    Projection { pi: i64 },
    /// `G2` layer 2: `t(w) != 0`.
    KernelT { t: i64 },
    /// `G2` layer 3: Magnus order on `ker t`, decided in this degree.
    Magnus { degree: usize },
    /// A test double overrode the answer.
    Injected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub sign: Sign,
    pub trace: Trace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupTag {
    G1,
    G2,
}

/// A total decision procedure for a positive cone `P`: exactly one of
/// `w ∈ P`, `w^-1 ∈ P`, `w = 1` holds, and `P` is closed under products.
pub trait ConeOracle: Send + Sync {
    fn group(&self) -> GroupTag;

    fn alphabet(&self) -> &'static [char];

    fn decide(&self, w: &FreeWord) -> Result<Decision>;

    /// Word-problem oracle independent of the order.
    fn is_identity(&self, w: &FreeWord) -> Result<bool>;

    fn sign(&self, w: &FreeWord) -> Result<Sign> {
        Ok(self.decide(w)?.sign)
    }
}

impl<T: ConeOracle + ?Sized> ConeOracle for &T {
    fn group(&self) -> GroupTag {
        (**self).group()
    }
    fn alphabet(&self) -> &'static [char] {
        (**self).alphabet()
    }
    fn decide(&self, w: &FreeWord) -> Result<Decision> {
        (**self).decide(w)
    }
    fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        (**self).is_identity(w)
    }
}

impl<T: ConeOracle + ?Sized> ConeOracle for Box<T> {
    fn group(&self) -> GroupTag {
        (**self).group()
    }
    fn alphabet(&self) -> &'static [char] {
        (**self).alphabet()
    }
    fn decide(&self, w: &FreeWord) -> Result<Decision> {
        (**self).decide(w)
    }
    fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        (**self).is_identity(w)
    }
}

/// A member of the normal family generated by a base order: conjugate by
/// `conjugator`, then take the opposite cone if `reversed`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrderFamilySpec {
    pub conjugator: FreeWord,
    pub reversed: bool,
}

impl OrderFamilySpec {
    pub fn base() -> Self {
        Self { conjugator: FreeWord::identity(), reversed: false }
    }

    pub fn conjugate(conjugator: FreeWord) -> Self {
        Self { conjugator, reversed: false }
    }
}

/// Sign of `w` under the family member `spec` of `oracle`.
pub fn family_is_positive<O: ConeOracle + ?Sized>(
    oracle: &O,
    spec: &OrderFamilySpec,
    w: &FreeWord,
) -> Result<Decision> {
    let d = oracle.decide(&w.conjugate_by(&spec.conjugator))?;
    Ok(if spec.reversed { Decision { sign: d.sign.flip(), ..d } } else { d })
}

/// A family member packaged as an oracle in its own right.
#[derive(Debug, Clone)]
pub struct FamilyMember<O> {
    pub base: O,
    pub spec: OrderFamilySpec,
}

impl<O: ConeOracle> ConeOracle for FamilyMember<O> {
    fn group(&self) -> GroupTag {
        self.base.group()
    }
    fn alphabet(&self) -> &'static [char] {
        self.base.alphabet()
    }
    fn decide(&self, w: &FreeWord) -> Result<Decision> {
        family_is_positive(&self.base, &self.spec, w)
    }
    fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        self.base.is_identity(w)
    }
}

/// The two lexicographic orders on the peripheral `Z^2 = {(r, s)}`, both
/// with the second coordinate dominant and positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Z2Order {
    /// `(r, s) > 0` iff `s > 0`, or `s = 0` and `r > 0`.
    PlusFirst,
    /// `(r, s) > 0` iff `s > 0`, or `s = 0` and `r < 0`.
    MinusFirst,
}

pub fn z2_is_positive(order: Z2Order, v: PeripheralVector) -> Sign {
    if v.s != 0 {
        return Sign::from_i64(v.s);
    }
    match order {
        Z2Order::PlusFirst => Sign::from_i64(v.r),
        Z2Order::MinusFirst => Sign::from_i64(-v.r),
    }
}

/// Which of the two `Z^2` orders an oracle induces on the peripheral subgroup
/// of `side`, tested on the box `|r|, |s| <= bound`. `None` if neither matches.
pub fn restriction_variant<O: ConeOracle + ?Sized>(
    oracle: &O,
    params: &TwoBridgeParams,
    side: Side,
    bound: i64,
) -> Result<Option<Z2Order>> {
    let mut plus = true;
    let mut minus = true;
    for v in PeripheralVector::nonzero_box(bound) {
        let s = oracle.sign(&peripheral_word(params, side, v))?;
        plus &= s == z2_is_positive(Z2Order::PlusFirst, v);
        minus &= s == z2_is_positive(Z2Order::MinusFirst, v);
        if !plus && !minus {
            return Ok(None);
        }
    }
    Ok(match (plus, minus) {
        (true, false) => Some(Z2Order::PlusFirst),
        (false, true) => Some(Z2Order::MinusFirst),
        _ => None,
    })
}
