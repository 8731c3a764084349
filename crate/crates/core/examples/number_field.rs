//! Exact arithmetic in Q(2cos(π/n)) and the lifted action on the line.

use std::cmp::Ordering;

use knotorder::orders::field::{min_poly_two_cos, NumberField};
use knotorder::orders::lifted::{Drift, LiftedBoundaryPoint, LiftedMap, Mat2, ProjPoint};

fn main() -> knotorder::Result<()> {
    for n in [3u32, 5, 7, 9, 11] {
        let p: Vec<String> = min_poly_two_cos(n).iter().map(|c| c.to_string()).collect();
        println!("n = {n:2}: min poly coefficients (low to high) {p:?}");
    }

    let k = NumberField::two_cos_pi_over(7)?;
    let lam = k.lambda();
    let cube = &(&lam * &lam) * &lam;
    // λ^3 = λ^2 + 2λ - 1
    println!("λ ≈ {:.12}, λ^3 in the power basis: {:?}", k.approx(), cube);
    let tiny = &(&lam * &k.from_int(1_000_003)) - &k.from_int(1_801_900);
    println!("1000003 λ - 1801900 ≈ {:.3e}, exact sign {:?}", tiny.to_f64(), tiny.sign());
    assert_ne!(tiny.sign(), Ordering::Equal);

    // B = [[0,-1],[1,λ]] rotates the circle by 1/7 of a turn
    let b = Mat2::new(k.from_int(0), k.from_int(-1), k.from_int(1), lam.clone());
    let lift = LiftedMap { matrix: b, drift: Drift::Forward };
    let mut p = LiftedBoundaryPoint::new(ProjPoint::from_ints(&k, 1, 0), 0);
    let start = p.clone();
    for i in 1..=7 {
        p = lift.apply(&p);
        println!("B̃^{i} (∞) at {:.4} turns", p.approx());
    }
    println!("B̃^7 = T_1: {}", p == start.translate(1));

    let mut bad = min_poly_two_cos(7);
    bad[1] += 1;
    println!("corrupted polynomial: {:?}", NumberField::with_min_poly(bad, 1.8).err());
    Ok(())
}
