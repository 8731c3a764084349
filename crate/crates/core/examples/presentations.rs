//! The two piece groups, the amalgam and the gluing map, with a few normal
//! forms.

use knotorder::cfrac::knot_params;
use knotorder::groups::{
    peripheral_word, presentations, FreeWord, GluingMap, PeripheralVector, Side, G1, G2,
};

fn main() -> knotorder::Result<()> {
    let k = knot_params(5, -4)?;
    let pres = presentations(&k);
    for (name, p) in [("G1", &pres.g1), ("G2", &pres.g2), ("π1(M)", &pres.amalgam)] {
        let rels: Vec<String> = p.relators.iter().map(|r| r.to_string()).collect();
        println!("{name:6} <{:?} | {}>", p.generators, rels.join(", "));
    }
    println!("gluing verified: {}", GluingMap.verify(&k)?);

    let g1 = G1::new(k.b1);
    let g2 = G2::new(k.b2);
    for w in ["a^2 b^-5", "b a b^3 a^-1", "b^-2 a"] {
        let w = FreeWord::parse(w)?;
        println!("G1  {w:16} -> {:?}", g1.normal_form(&w)?);
    }
    for w in ["z x z x^-1", "x^-1 y x y", "z^-2 x z^2"] {
        let w = FreeWord::parse(w)?;
        let nf = g2.normal_form(&w)?;
        println!("G2  {w:16} -> {}   ({nf:?})", g2.word(&nf));
    }

    // peripheral subgroups: μ^r h^s and y^r (z x^2)^s
    let v = PeripheralVector::new(2, -1);
    println!("μ^2 h^-1   = {}", peripheral_word(&k, Side::G1, v));
    println!("φ(μ^2 h^-1) = {}", peripheral_word(&k, Side::G2, v));
    Ok(())
}
