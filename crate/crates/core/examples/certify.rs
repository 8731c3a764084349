//! A reduced certificate run and the mutation self-test.
//!
//!     cargo run --release --example certify -- 5 4

use knotorder::certify::{certify, mutation_suite, Check, SampleBudget};
use knotorder::cfrac::knot_params;

fn main() -> knotorder::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (c1, c2) = match args.as_slice() {
        [c1, c2] => (*c1, *c2),
        _ => (3, 4),
    };
    let k = knot_params(c1, c2)?;
    let budget = SampleBudget { radius: 4, conj_len: 3, samples: 2000, members: 60, ..SampleBudget::default() };

    let report = certify(&k, &budget, &Check::ALL)?;
    for c in &report.checks {
        println!(
            "{:13} {:>4} {:20} {:>7} cases {:>3} bad  {}",
            c.check.name(),
            c.group.map(|g| format!("{g:?}")).unwrap_or_default(),
            c.property,
            c.cases,
            c.violations + c.errors,
            c.member.as_deref().unwrap_or("")
        );
    }
    println!("verdict {:?}", report.verdict);

    for m in mutation_suite(&k, &budget)? {
        println!("mutation {:20} on {:?}: detected {} by {:?}", m.mutation.name(), m.group, m.detected, m.failing);
    }
    Ok(())
}
