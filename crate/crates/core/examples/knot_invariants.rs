//! Continued fraction, lens space, genus and Alexander polynomial for a few
//! knots in the family, plus the L-space surgery verdict.
//!
//!     cargo run --example knot_invariants -- 3 4

use knotorder::alexander::{alexander_poly, determinant, is_monic, lspace_form, lspace_surgery_verdict};
use knotorder::cfrac::{double_branched_cover, eval_cf, even_expansion, genus, is_fibered, knot_params};

fn main() -> knotorder::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let knots = match args.as_slice() {
        [c1, c2] => vec![(*c1, *c2)],
        _ => vec![(3, 4), (3, -4), (5, 4), (7, -6), (3, 12)],
    };
    for (c1, c2) in knots {
        let k = knot_params(c1, c2)?;
        let even = even_expansion(&k);
        let delta = alexander_poly(&k)?;
        let (p, q) = double_branched_cover(&k);
        println!("K[{c1},{c2}]  b1={} b2={} slope={}", k.b1, k.b2, k.slope);
        println!("  [c1,c2]^- = {}   even expansion {:?} = {}", k.fraction(), even.entries(), eval_cf(&even)?);
        println!("  double branched cover L({p},{q}), genus {}, fibered {}", genus(&k), is_fibered(&k));
        println!("  Δ = {delta}");
        println!("  |Δ(-1)| = {}, monic {}", determinant(&delta), is_monic(&delta));
        println!("  L-space form {}", lspace_form(&delta)?.matches);
        println!("  verdict {:?}", lspace_surgery_verdict(&k)?);
    }
    Ok(())
}
