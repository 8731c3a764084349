//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All thresholds live in the constants below; none may be relaxed.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use knotorder::alexander::{alexander_poly, determinant, is_monic, lspace_surgery_verdict, NoLSpaceReason};
use knotorder::certify::{
    audit_cone, certify, check_navas_law, check_normal_forms, check_restriction_law, mutation_suite,
    CertificateReport, Check, Oracles, SampleBudget, Verdict,
};
use knotorder::cfrac::{
    double_branched_cover, eval_cf, even_expansion, genus, is_fibered, knot_params, ratio, ContinuedFraction,
    TwoBridgeParams,
};
use knotorder::orders::{G1Order, G2Order};

/// Grid for criteria 1 and 2: `b1 in 1..=5`, `b2 in ±(2..=6)`.
const GRID_B1: std::ops::RangeInclusive<i64> = 1..=5;
const GRID_B2_ABS: std::ops::RangeInclusive<i64> = 2..=6;

/// `(c1, c2)` for criteria 3 to 7.
const KNOTS: [(i64, i64); 4] = [(3, 4), (3, -4), (5, 4), (7, -6)];

/// Relator insertions per group per knot.
const NORMAL_FORM_SAMPLES: usize = 10_000;
/// Trichotomy is exhaustive on balls of this radius.
const BALL_RADIUS: usize = 5;
/// Trichotomy ball size over two generators: `1 + 4 (3^5 - 1) / 2`.
const BALL_SIZE: u64 = 485;
/// Sampled positive pairs for the semigroup axiom, per family member.
const SEMIGROUP_PAIRS: usize = 10_000;
/// Conjugators `|g| <= 4` for the peripheral law.
const CONJ_LEN: usize = 4;
/// Peripheral box `|r|, |s| <= 5`.
const PERIPHERAL_BOX: i64 = 5;
/// G2 family members for the restriction law, and G1 conjugates for the
/// compatibility certificate.
const MIN_MEMBERS: usize = 200;
const MUTATIONS: usize = 5;

const LIMIT_ARITHMETIC: Duration = Duration::from_secs(5);
const LIMIT_ALEXANDER: Duration = Duration::from_secs(60);
const LIMIT_NORMAL_FORMS: Duration = Duration::from_secs(120);
const LIMIT_CONE_PER_KNOT: Duration = Duration::from_secs(300);
const LIMIT_NAVAS_PER_KNOT: Duration = Duration::from_secs(300);
const LIMIT_RESTRICT_PER_KNOT: Duration = Duration::from_secs(120);
const LIMIT_COMPAT_PER_KNOT: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn budget() -> SampleBudget {
    SampleBudget {
        radius: BALL_RADIUS,
        conj_len: CONJ_LEN,
        peripheral_box: PERIPHERAL_BOX,
        samples: SEMIGROUP_PAIRS.max(NORMAL_FORM_SAMPLES),
        members: MIN_MEMBERS,
        ..SampleBudget::default()
    }
}

fn grid() -> Vec<TwoBridgeParams> {
    let mut out = Vec::new();
    for b1 in GRID_B1 {
        for b2 in GRID_B2_ABS.flat_map(|b| [b, -b]) {
            out.push(knot_params(2 * b1 + 1, 2 * b2).expect("grid knot"));
        }
    }
    out
}

fn knots() -> Vec<TwoBridgeParams> {
    KNOTS.iter().map(|&(c1, c2)| knot_params(c1, c2).expect("representative knot")).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{label} took {:.1} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs()))
}

fn certified(report: &CertificateReport, what: &str) -> Result<(), String> {
    ensure(report.verdict == Verdict::Certified, || {
        let first = report.counterexamples.first().map(|c| format!("{c:?}")).unwrap_or_default();
        format!("{what}: {:?}, {} violations; first {first}", report.verdict, report.total_violations())
    })
}

fn arithmetic() -> Outcome {
    let start = Instant::now();
    let rows = grid();
    for k in &rows {
        let (c1, c2) = (k.c1, k.c2);
        let direct = eval_cf(&ContinuedFraction::new(vec![c1, c2]).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let even = eval_cf(&even_expansion(k)).map_err(|e| e.to_string())?;
        ensure(even == direct, || format!("({c1},{c2}): even expansion {even} != {direct}"))?;
        ensure(k.fraction() == ratio(c2, c1 * c2 - 1) && direct == k.fraction(), || {
            format!("({c1},{c2}): fraction {} != c2/(c1c2-1)", k.fraction())
        })?;
        let p = (c1 * c2 - 1).abs();
        ensure(double_branched_cover(k) == (p, c2.rem_euclid(p)), || {
            format!("({c1},{c2}): lens {:?}", double_branched_cover(k))
        })?;
        ensure(k.slope == 2 * c2 && k.slope == 4 * k.b2, || format!("({c1},{c2}): slope {}", k.slope))?;
    }
    within("grid", start.elapsed(), LIMIT_ARITHMETIC)?;
    Ok(format!("{} grid knots", rows.len()))
}

fn alexander_suite() -> Outcome {
    let start = Instant::now();
    let rows = grid();
    let mut fibered_rows = 0;
    for k in &rows {
        let (c1, c2) = (k.c1, k.c2);
        let d = alexander_poly(k).map_err(|e| e.to_string())?;
        let at_one = d.eval(1);
        ensure(at_one == 1 || at_one == -1, || format!("({c1},{c2}): Δ(1) = {at_one}"))?;
        ensure(d.is_symmetric(), || format!("({c1},{c2}): {d} not symmetric"))?;
        ensure(determinant(&d) == (c1 * c2 - 1).unsigned_abs() as u128, || {
            format!("({c1},{c2}): |Δ(-1)| = {} != |c1c2-1|", determinant(&d))
        })?;
        ensure(d.span() == 2 * k.b2.abs() && d.span() == 2 * genus(k), || {
            format!("({c1},{c2}): span {} vs 2|b2| = {} and genus {}", d.span(), 2 * k.b2.abs(), genus(k))
        })?;
        let fibered = k.b1 == 1 && k.b2 > 0;
        ensure(is_monic(&d) == fibered && is_fibered(k) == fibered, || {
            format!("({c1},{c2}): monic {} but b1 = 1 and b2 > 0 is {fibered}", is_monic(&d))
        })?;
        let v = lspace_surgery_verdict(k).map_err(|e| e.to_string())?;
        ensure(!v.admits, || format!("({c1},{c2}): verdict admits"))?;
        match (fibered, v.reason) {
            (false, NoLSpaceReason::NotFibered) => {}
            (true, NoLSpaceReason::DeterminantExceedsGenusBound { determinant, bound }) => {
                fibered_rows += 1;
                ensure(determinant == 6 * k.b2 - 1 && bound == 2 * k.b2 + 1 && determinant > bound, || {
                    format!("({c1},{c2}): {determinant} > {bound} expected as 6b2-1 > 2b2+1")
                })?;
            }
            (_, r) => return Err(format!("({c1},{c2}): wrong branch {r:?}")),
        }
    }
    within("grid", start.elapsed(), LIMIT_ALEXANDER)?;
    Ok(format!("{} grid knots, {fibered_rows} fibered rows with 6b2-1 > 2b2+1", rows.len()))
}

fn normal_forms() -> Outcome {
    let start = Instant::now();
    let b = budget();
    let mut total = 0;
    for k in knots() {
        let r = check_normal_forms(&k, &SampleBudget { samples: NORMAL_FORM_SAMPLES, ..b });
        certified(&r, &format!("({},{})", k.c1, k.c2))?;
        for c in r.checks.iter().filter(|c| c.property == "relator-insertion") {
            ensure(c.cases >= NORMAL_FORM_SAMPLES as u64, || format!("{:?}: only {} insertions", c.group, c.cases))?;
            total += c.cases;
        }
    }
    within("normal forms", start.elapsed(), LIMIT_NORMAL_FORMS)?;
    Ok(format!("{total} relator insertions, 0 mismatches"))
}

fn cone() -> Outcome {
    let b = SampleBudget { samples: SEMIGROUP_PAIRS, ..budget() };
    let mut worst = Duration::ZERO;
    let mut total = 0;
    for k in knots() {
        let start = Instant::now();
        let g1 = G1Order::new(&k).map_err(|e| e.to_string())?;
        let g2 = G2Order::new(&k);
        let g2r = G2Order::with_kernel_reversed(&k, true);
        for o in [&g1 as &dyn knotorder::orders::ConeOracle, &g2, &g2r] {
            let r = audit_cone(&k, o, &b);
            certified(&r, &format!("({},{}) {:?}", k.c1, k.c2, o.group()))?;
            for c in &r.checks {
                let need = if c.property == "trichotomy" { BALL_SIZE } else { SEMIGROUP_PAIRS as u64 };
                ensure(c.cases >= need, || format!("{} {}: {} cases < {need}", c.property, c.member.clone().unwrap_or_default(), c.cases))?;
                total += c.cases;
            }
        }
        let t = start.elapsed();
        within(&format!("({},{})", k.c1, k.c2), t, LIMIT_CONE_PER_KNOT)?;
        worst = worst.max(t);
    }
    Ok(format!("{total} cases, slowest knot {:.1} s", worst.as_secs_f64()))
}

fn navas() -> Outcome {
    let b = budget();
    let mut worst = Duration::ZERO;
    let mut total = 0;
    for k in knots() {
        let start = Instant::now();
        let g1 = G1Order::new(&k).map_err(|e| e.to_string())?;
        let r = check_navas_law(&k, &g1, &b);
        certified(&r, &format!("({},{})", k.c1, k.c2))?;
        // 161 conjugators times 120 nonzero vectors
        ensure(r.total_cases() >= 161 * 120, || format!("({},{}): {} cases", k.c1, k.c2, r.total_cases()))?;
        total += r.total_cases();
        let t = start.elapsed();
        within(&format!("({},{})", k.c1, k.c2), t, LIMIT_NAVAS_PER_KNOT)?;
        worst = worst.max(t);
    }
    Ok(format!("{total} cases, slowest knot {:.1} s", worst.as_secs_f64()))
}

fn restrict() -> Outcome {
    let b = budget();
    let mut worst = Duration::ZERO;
    for k in knots() {
        let start = Instant::now();
        let g1 = G1Order::new(&k).map_err(|e| e.to_string())?;
        let g2 = G2Order::new(&k);
        let g2r = G2Order::with_kernel_reversed(&k, true);
        let r = check_restriction_law(&k, &Oracles { g1: &g1, g2: &g2, g2_kernel_reversed: &g2r }, &b);
        certified(&r, &format!("({},{})", k.c1, k.c2))?;
        let c = &r.checks[0];
        ensure(c.cases >= MIN_MEMBERS as u64, || format!("({},{}): {} members", k.c1, k.c2, c.cases))?;
        let variants = c.variants_witnessed.clone().unwrap_or_default();
        ensure(variants.len() == 2, || format!("({},{}): witnessed {variants:?}", k.c1, k.c2))?;
        let t = start.elapsed();
        within(&format!("({},{})", k.c1, k.c2), t, LIMIT_RESTRICT_PER_KNOT)?;
        worst = worst.max(t);
    }
    Ok(format!("{MIN_MEMBERS} members per knot, both variants, slowest knot {:.1} s", worst.as_secs_f64()))
}

fn compat() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_knotorder");
    let mut worst = Duration::ZERO;
    // positive vectors in the nonzero box: s > 0, or s = 0 and one sign of r
    let positives = (2 * PERIPHERAL_BOX + 1) * PERIPHERAL_BOX + PERIPHERAL_BOX;
    for k in knots() {
        let start = Instant::now();
        let out = Command::new(bin)
            .args(["certify", "--check", "compat", "--members", &MIN_MEMBERS.to_string()])
            .arg(format!("--c1={}", k.c1))
            .arg(format!("--c2={}", k.c2))
            .output()
            .map_err(|e| format!("cannot run {bin}: {e}"))?;
        let code = out.status.code();
        ensure(code == Some(0), || format!("({},{}): exit code {code:?}", k.c1, k.c2))?;
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        ensure(report["verdict"] == "Certified", || format!("({},{}): verdict {}", k.c1, k.c2, report["verdict"]))?;
        let cases = report["checks"][0]["cases"].as_u64().unwrap_or(0);
        let need = MIN_MEMBERS as u64 * positives as u64;
        ensure(cases >= need, || format!("({},{}): {cases} cases < {need}", k.c1, k.c2))?;
        let t = start.elapsed();
        within(&format!("({},{})", k.c1, k.c2), t, LIMIT_COMPAT_PER_KNOT)?;
        worst = worst.max(t);
    }
    Ok(format!("{MIN_MEMBERS} conjugates per knot, exit 0, slowest knot {:.1} s", worst.as_secs_f64()))
}

fn mutations() -> Outcome {
    let k = knot_params(3, 4).map_err(|e| e.to_string())?;
    let outcomes = mutation_suite(&k, &budget()).map_err(|e| e.to_string())?;
    ensure(outcomes.len() == MUTATIONS, || format!("{} mutations run", outcomes.len()))?;
    for m in &outcomes {
        ensure(m.detected && m.verdict != Verdict::Certified, || {
            format!("{} on {:?} not detected ({:?})", m.mutation.name(), m.group, m.verdict)
        })?;
    }
    // the unmutated oracles pass the same budget
    let clean = certify(&k, &budget(), &[Check::Cone, Check::Navas, Check::Restrict, Check::Compat])
        .map_err(|e| e.to_string())?;
    certified(&clean, "unmutated")?;
    Ok(format!("{MUTATIONS}/{MUTATIONS} detected, unmutated run certified"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("arithmetic identities", arithmetic),
        ("alexander suite", alexander_suite),
        ("normal-form soundness", normal_forms),
        ("cone axioms", cone),
        ("peripheral law on G1", navas),
        ("restriction law on G2", restrict),
        ("compatibility certificate", compat),
        ("mutation self-tests", mutations),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.1} s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{secs:.1} s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
