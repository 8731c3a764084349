//! Exact invariants of the two-bridge knots `K[c1, c2]` (c1 odd, c2 even,
//! `|c1|, |c2| > 2`) and a desk-scale certificate that the fundamental group of
//! their `2*c2` surgery is left-orderable.
//!
//! The surgered manifold is a graph manifold whose group is the amalgam
//! `G1 *_{Z^2} G2` of a torus-knot group `G1 = <a, b | a^2 = b^(2b1+1)>` and
//! `G2 = <x, y, z | x^-1 y x = y^-1, y = z^b2>` glued along `mu -> y`,
//! `h -> z x^2`. The crate provides:
//!
//! * [`cfrac`]: subtractive continued fractions and the knot parameters.
//! * [`alexander`]: Fox-calculus Alexander polynomials and the L-space form test.
//! * [`groups`]: words, presentations and solved word problems in `G1` and `G2`.
//! * [`orders`]: exact positive-cone oracles for left-orders on `G1` and `G2`.
//! * [`certify`]: property harness checking the cone axioms and the
//!   compatibility of the gluing map with normal families of orders.
//! * [`cli`]: the JSON command-line front end used by the `knotorder` binary.

pub mod alexander;
pub mod certify;
pub mod cfrac;
pub mod cli;
pub mod error;
pub mod groups;
pub mod orders;

pub use error::{Error, Result};
