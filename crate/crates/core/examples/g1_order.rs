//! The left-order on G1 = <a, b | a^2 = b^n>: signs, traces, and the
//! peripheral law for a few conjugates.

use knotorder::cfrac::knot_params;
use knotorder::groups::{peripheral_word, FreeWord, PeripheralVector, Side};
use knotorder::orders::{family_is_positive, ConeOracle, G1Order, OrderFamilySpec};

fn main() -> knotorder::Result<()> {
    let k = knot_params(7, -6)?;
    let o = G1Order::new(&k)?;
    let r = o.realization();
    println!("n = {}, field degree {}", r.group().n(), r.field().degree());
    println!("μ̄ = {:?}", r.meridian_matrix());
    for (i, p) in r.test_points().iter().enumerate() {
        println!("p{i} at {:.5}", p.approx());
    }

    for w in ["a^2", "b^7", "b^-3 a", "a b^-3", "a b a^-1 b^-1", "b a^2 b^-1 a^-2"] {
        let w = FreeWord::parse(w)?;
        let d = o.decide(&w)?;
        println!("{w:18} {:?} via {:?}", d.sign, d.trace);
    }

    // μ^r h^s under <^g: s > 0 wins, and for s = 0 the sign follows g^-1 μ g
    let mu = r.group().meridian();
    for g in ["1", "a", "b^2 a", "a b^-1 a"] {
        let spec = OrderFamilySpec::conjugate(FreeWord::parse(g)?);
        let mu_sign = family_is_positive(&o, &spec, &mu)?.sign;
        let row: Vec<String> = [(-3, 1), (5, -1), (2, 0), (-2, 0)]
            .iter()
            .map(|&(r_, s)| {
                let w = peripheral_word(&k, Side::G1, PeripheralVector::new(r_, s));
                format!("({r_},{s}):{:?}", family_is_positive(&o, &spec, &w).unwrap().sign)
            })
            .collect();
        println!("g = {g:9} μ {mu_sign:?}  {}", row.join(" "));
    }
    Ok(())
}
