//! The layered order on G2: projection to Z, the kernel character t, then the
//! Magnus order on the free group ker t.

use knotorder::cfrac::knot_params;
use knotorder::groups::{FreeWord, Side, G2};
use knotorder::orders::{
    kernel_free_word, magnus_sign, restriction_variant, schreier_word_string, ConeOracle, FamilyMember,
    G2Order, OrderFamilySpec,
};

fn main() -> knotorder::Result<()> {
    let k = knot_params(3, 6)?;
    let o = G2Order::new(&k);
    let g2 = G2::new(k.b2);
    for w in ["z x^2", "x^-1", "y", "z x^-1 z^-1 x", "z x^-1 z x z^-1 x^-1 z^-1 x", "x^-2 z^2 x^2 z^-1 x z^-1 x^-1"] {
        let w = FreeWord::parse(w)?;
        let d = o.decide(&w)?;
        let nf = g2.normal_form(&w)?;
        let free = if nf.xpow == 0 && g2.kernel_t(&nf) == 0 {
            schreier_word_string(&kernel_free_word(k.b2, &nf))
        } else {
            "-".into()
        };
        println!("{w:34} {:?} via {:?}   ker t: {free}", d.sign, d.trace);
    }

    // the Magnus order by itself
    println!("[a,b] {:?}", magnus_sign(&[('a', 1), ('b', 1), ('a', -1), ('b', -1)]));

    // restrictions to A = <y, z x^2>
    for (g, kr) in [("1", false), ("1", true), ("x", false), ("z x^-3", true)] {
        let base = G2Order::with_kernel_reversed(&k, kr);
        let m = FamilyMember { base, spec: OrderFamilySpec::conjugate(FreeWord::parse(g)?) };
        let v = restriction_variant(&m, &k, Side::G2, 5)?;
        let y = m.sign(&FreeWord::gen('y'))?;
        println!("g = {g:7} kernel_reversed = {kr:5}  y {y:?}  restriction {v:?}");
    }
    Ok(())
}
