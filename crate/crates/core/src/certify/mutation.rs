//! Deliberately corrupted oracles; the harness must refute each of them.

use serde::Serialize;

use crate::error::Result;
use crate::groups::FreeWord;
use crate::orders::{ConeOracle, Decision, GroupTag, Sign, Trace};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "word")]
pub enum Mutation {
    /// Flip the sign of one specific word (but not of its inverse).
    FlipOnWord(FreeWord),
    /// Report the identity as positive.
    IdentityAsPositive,
    /// Every nontrivial element is positive.
    ConstantPositive,
    /// `G2`: flip the quotient layer `π` only; still a left-order, but the
    /// fiber image `z x^2` becomes negative.
    FlipProjection,
    /// The opposite cone; still a left-order, but `h` becomes negative.
    Reverse,
}

impl Mutation {
    pub fn name(&self) -> &'static str {
        match self {
            Mutation::FlipOnWord(_) => "flip-on-word",
            Mutation::IdentityAsPositive => "identity-as-positive",
            Mutation::ConstantPositive => "constant-positive",
            Mutation::FlipProjection => "flip-projection",
            Mutation::Reverse => "reverse",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Mutant<O> {
    pub inner: O,
    pub mutation: Mutation,
}

impl<O: ConeOracle> ConeOracle for Mutant<O> {
    fn group(&self) -> GroupTag {
        self.inner.group()
    }

    fn alphabet(&self) -> &'static [char] {
        self.inner.alphabet()
    }

    fn is_identity(&self, w: &FreeWord) -> Result<bool> {
        self.inner.is_identity(w)
    }

    fn decide(&self, w: &FreeWord) -> Result<Decision> {
        let d = self.inner.decide(w)?;
        let injected = |sign| Ok(Decision { sign, trace: Trace::Injected });
        match &self.mutation {
            Mutation::FlipOnWord(target) if target == w => injected(d.sign.flip()),
            Mutation::IdentityAsPositive if d.sign == Sign::Identity => injected(Sign::Positive),
            Mutation::ConstantPositive if d.sign == Sign::Negative => injected(Sign::Positive),
            Mutation::FlipProjection if matches!(d.trace, Trace::Projection { .. }) => {
                injected(d.sign.flip())
            }
            Mutation::Reverse => injected(d.sign.flip()),
            _ => Ok(d),
        }
    }
}
