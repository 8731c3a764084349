//! Property harness for the cone oracles and the gluing map.
//!
//! Every check enumerates exhaustively where the space is small (balls of
//! words, peripheral boxes, short conjugators) and samples with a seeded
//! ChaCha stream elsewhere. Cases are evaluated in parallel and merged in
//! index order, so a report depends only on `(params, budget)`.
//!
//! A refuted law is reported with counterexamples, never repaired.

mod mutation;
mod sample;

pub use mutation::{Mutant, Mutation};
pub use sample::{ball, random_word, random_word_between, split_at_letter};

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cfrac::TwoBridgeParams;
use crate::error::{Error, Result};
use crate::groups::{
    peripheral_word, presentations, FreeWord, PeripheralVector, Side, G1, G1_ALPHABET, G2, G2_ALPHABET,
};
use crate::orders::{
    family_is_positive, restriction_variant, ConeOracle, FamilyMember, G1Order, G2Order, GroupTag,
    OrderFamilySpec, Sign, Z2Order,
};

/// Seed used when neither `--seed` nor `KNOTORDER_SEED` is given.
pub const DEFAULT_SEED: u64 = 20_240_917;
/// Environment variable overriding [`DEFAULT_SEED`].
pub const SEED_ENV: &str = "KNOTORDER_SEED";
/// Counterexamples kept in a report; the rest are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 25;
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleBudget {
    /// Radius of the exhaustive trichotomy ball.
    pub radius: usize,
    /// Conjugators up to this length are enumerated exhaustively.
    pub conj_len: usize,
    /// Peripheral box `|r|, |s| <= peripheral_box`.
    pub peripheral_box: i64,
    /// Random positive pairs, and relator insertions, per group.
    pub samples: usize,
    /// Family members for the restriction and compatibility checks.
    pub members: usize,
    pub seed: u64,
}

impl Default for SampleBudget {
    fn default() -> Self {
        Self { radius: 5, conj_len: 4, peripheral_box: 5, samples: 10_000, members: 200, seed: DEFAULT_SEED }
    }
}

impl SampleBudget {
    pub fn validate(&self) -> Result<()> {
        if self.radius == 0
            || self.conj_len == 0
            || self.peripheral_box < 1
            || self.samples == 0
            || self.members == 0
        {
            return Err(Error::Parse("every budget bound must be >= 1".into()));
        }
        Ok(())
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    NormalForms,
    Cone,
    Navas,
    Restrict,
    Compat,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::NormalForms, Check::Cone, Check::Navas, Check::Restrict, Check::Compat];

    pub fn name(self) -> &'static str {
        match self {
            Check::NormalForms => "normal-forms",
            Check::Cone => "cone",
            Check::Navas => "navas",
            Check::Restrict => "restrict",
            Check::Compat => "compat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub group: Option<GroupTag>,
    pub property: String,
    pub member: Option<String>,
    pub cases: u64,
    pub violations: u64,
    pub errors: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variants_witnessed: Option<Vec<Z2Order>>,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.errors == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: Check,
    pub property: String,
    pub member: Option<String>,
    pub word: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Certified,
    Refuted,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub schema_version: u32,
    pub c1: i64,
    pub c2: i64,
    pub budget: SampleBudget,
    pub checks: Vec<CheckSummary>,
    pub counterexamples: Vec<Counterexample>,
    pub counterexamples_omitted: u64,
    pub verdict: Verdict,
}

impl CertificateReport {
    fn build(params: &TwoBridgeParams, budget: &SampleBudget, findings: Findings) -> Self {
        let mut report = CertificateReport {
            schema_version: SCHEMA_VERSION,
            c1: params.c1,
            c2: params.c2,
            budget: *budget,
            checks: findings.summaries,
            counterexamples: findings.examples,
            counterexamples_omitted: 0,
            verdict: Verdict::Certified,
        };
        report.finish();
        report
    }

    fn finish(&mut self) {
        if self.counterexamples.len() > MAX_COUNTEREXAMPLES {
            self.counterexamples_omitted += (self.counterexamples.len() - MAX_COUNTEREXAMPLES) as u64;
            self.counterexamples.truncate(MAX_COUNTEREXAMPLES);
        }
        self.verdict = if self.checks.iter().any(|c| c.errors > 0) {
            Verdict::Error
        } else if self.checks.iter().any(|c| c.violations > 0) {
            Verdict::Refuted
        } else {
            Verdict::Certified
        };
    }

    /// Concatenates reports over the same knot and budget.
    pub fn merge(reports: Vec<CertificateReport>) -> Option<CertificateReport> {
        let mut it = reports.into_iter();
        let mut out = it.next()?;
        for r in it {
            out.checks.extend(r.checks);
            out.counterexamples.extend(r.counterexamples);
            out.counterexamples_omitted += r.counterexamples_omitted;
        }
        out.finish();
        Some(out)
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    pub fn total_cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn total_violations(&self) -> u64 {
        self.checks.iter().map(|c| c.violations).sum()
    }
}

enum Outcome {
    Pass,
    Fail(Counterexample),
    Error(Counterexample),
}

#[derive(Default)]
struct Findings {
    summaries: Vec<CheckSummary>,
    examples: Vec<Counterexample>,
}

impl Findings {
    fn record(
        &mut self,
        check: Check,
        group: Option<GroupTag>,
        property: &str,
        member: Option<String>,
        outcomes: Vec<Outcome>,
    ) -> &mut CheckSummary {
        let mut summary = CheckSummary {
            check,
            group,
            property: property.to_string(),
            member,
            cases: outcomes.len() as u64,
            violations: 0,
            errors: 0,
            variants_witnessed: None,
        };
        for o in outcomes {
            match o {
                Outcome::Pass => {}
                Outcome::Fail(c) => {
                    summary.violations += 1;
                    self.examples.push(c);
                }
                Outcome::Error(c) => {
                    summary.errors += 1;
                    self.examples.push(c);
                }
            }
        }
        self.summaries.push(summary);
        self.summaries.last_mut().unwrap()
    }
}

/// Context shared by the cases of one property.
#[derive(Clone)]
struct Case<'a> {
    check: Check,
    property: &'a str,
    member: Option<String>,
}

impl Case<'_> {
    fn example(&self, word: &FreeWord, expected: impl ToString, got: impl ToString) -> Counterexample {
        Counterexample {
            check: self.check,
            property: self.property.to_string(),
            member: self.member.clone(),
            word: word.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    fn expect(&self, word: &FreeWord, expected: Sign, got: Result<Sign>) -> Outcome {
        match got {
            Ok(s) if s == expected => Outcome::Pass,
            Ok(s) => Outcome::Fail(self.example(word, format!("{expected:?}"), format!("{s:?}"))),
            Err(e) => Outcome::Error(self.example(word, format!("{expected:?}"), format!("error: {e}"))),
        }
    }

    fn error(&self, word: &FreeWord, e: Error) -> Outcome {
        Outcome::Error(self.example(word, "a decision", format!("error: {e}")))
    }
}

fn member_label(spec: &OrderFamilySpec) -> String {
    format!("conjugator={} reversed={}", spec.conjugator, spec.reversed)
}

fn g2_member_label(kernel_reversed: bool, conjugator: &FreeWord) -> String {
    format!("conjugator={conjugator} kernel_reversed={kernel_reversed}")
}

fn trichotomy_alphabet(group: GroupTag) -> &'static [char] {
    match group {
        GroupTag::G1 => &['a', 'b'],
        GroupTag::G2 => &['x', 'z'],
    }
}

fn group_stream(group: GroupTag) -> u64 {
    match group {
        GroupTag::G1 => 0,
        GroupTag::G2 => 1,
    }
}

/// Trichotomy on the radius ball (with identity agreeing with the normal
/// form), and the semigroup law on sampled positive pairs, for the base
/// order and three members of its normal family.
pub fn audit_cone(params: &TwoBridgeParams, oracle: &dyn ConeOracle, budget: &SampleBudget) -> CertificateReport {
    let group = oracle.group();
    let mut rng = budget.rng(0x100 + group_stream(group));
    let words = ball(trichotomy_alphabet(group), budget.radius);
    let g = random_word(&mut rng, oracle.alphabet(), budget.conj_len);
    let h = random_word(&mut rng, oracle.alphabet(), budget.conj_len);
    let specs = [
        OrderFamilySpec::base(),
        OrderFamilySpec { conjugator: FreeWord::identity(), reversed: true },
        OrderFamilySpec::conjugate(g),
        OrderFamilySpec { conjugator: h, reversed: true },
    ];
    let mut findings = Findings::default();
    for spec in specs {
        let member = FamilyMember { base: oracle, spec };
        let label = Some(member_label(&member.spec));
        let case = Case { check: Check::Cone, property: "trichotomy", member: label.clone() };
        let outcomes = words.par_iter().map(|w| trichotomy_case(&member, &case, w)).collect();
        findings.record(Check::Cone, Some(group), "trichotomy", label.clone(), outcomes);

        let case = Case { check: Check::Cone, property: "semigroup", member: label.clone() };
        // w if positive, w^-1 if negative; identities are dropped and replaced
        // by fresh draws until there are `samples` pairs
        let mut outcomes = Vec::new();
        let mut pos = Vec::new();
        let mut draws = budget.rng(0x180 + group_stream(group));
        for _ in 0..16 {
            let want = 2 * budget.samples - pos.len();
            if want == 0 {
                break;
            }
            let pool: Vec<FreeWord> = (0..want)
                .map(|_| random_word_between(&mut draws, oracle.alphabet(), 1, 2 * budget.radius))
                .collect();
            let signs: Vec<Result<Sign>> = pool.par_iter().map(|w| member.sign(w)).collect();
            for (w, r) in pool.into_iter().zip(signs) {
                match r {
                    Ok(Sign::Positive) => pos.push(w),
                    Ok(Sign::Negative) => pos.push(w.inverse()),
                    Ok(Sign::Identity) => {}
                    Err(e) => outcomes.push(case.error(&w, e)),
                }
            }
        }
        let pairs: Vec<(&FreeWord, &FreeWord)> = pos.chunks_exact(2).map(|c| (&c[0], &c[1])).collect();
        outcomes.par_extend(pairs.par_iter().map(|(u, v)| {
            let uv = u.mul(v);
            case.expect(&uv, Sign::Positive, member.sign(&uv))
        }));
        findings.record(Check::Cone, Some(group), "semigroup", label, outcomes);
    }
    CertificateReport::build(params, budget, findings)
}

fn trichotomy_case(oracle: &dyn ConeOracle, case: &Case, w: &FreeWord) -> Outcome {
    let run = || -> Result<Option<Counterexample>> {
        let s = oracle.sign(w)?;
        let t = oracle.sign(&w.inverse())?;
        let trivial = oracle.is_identity(w)?;
        let expected_identity = if trivial { Sign::Identity } else { s };
        if (s == Sign::Identity) != trivial {
            return Ok(Some(case.example(
                w,
                if trivial { "Identity (normal form is trivial)" } else { "non-identity (normal form is nontrivial)" },
                format!("{s:?}"),
            )));
        }
        if t != expected_identity.flip() {
            return Ok(Some(case.example(
                w,
                format!("sign(w) = {s:?} and sign(w^-1) = {:?}", s.flip()),
                format!("sign(w^-1) = {t:?}"),
            )));
        }
        Ok(None)
    };
    match run() {
        Ok(None) => Outcome::Pass,
        Ok(Some(c)) => Outcome::Fail(c),
        Err(e) => case.error(w, e),
    }
}

/// For every conjugator `|g| <= conj_len` and every nonzero `(r, s)` in the
/// box, `μ^r h^s` is positive under `<^g` iff `s > 0`, or `s = 0` and `r`
/// has the sign of `μ` under `<^g` (that is, of `g^-1 μ g` under `<`).
pub fn check_navas_law(params: &TwoBridgeParams, g1: &dyn ConeOracle, budget: &SampleBudget) -> CertificateReport {
    let conjugators = ball(&G1_ALPHABET, budget.conj_len);
    let vectors: Vec<PeripheralVector> = PeripheralVector::nonzero_box(budget.peripheral_box).collect();
    let mu = G1::new(params.b1).meridian();
    let outcomes: Vec<Outcome> = conjugators
        .par_iter()
        .flat_map_iter(|g| {
            let spec = OrderFamilySpec::conjugate(g.clone());
            let case = Case { check: Check::Navas, property: "peripheral-law", member: Some(member_label(&spec)) };
            let mu_sign = family_is_positive(g1, &spec, &mu).map(|d| d.sign);
            vectors
                .iter()
                .map(|&v| {
                    let w = peripheral_word(params, Side::G1, v);
                    let expected = if v.s != 0 {
                        Sign::from_i64(v.s)
                    } else {
                        match &mu_sign {
                            Ok(Sign::Identity) => {
                                return Outcome::Fail(case.example(&mu, "μ nontrivial", "Identity"))
                            }
                            Ok(m) => Sign::from_i64(v.r * m.as_i64()),
                            Err(e) => return case.error(&mu, e.clone()),
                        }
                    };
                    case.expect(&w, expected, family_is_positive(g1, &spec, &w).map(|d| d.sign))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut findings = Findings::default();
    findings.record(Check::Navas, Some(GroupTag::G1), "peripheral-law", None, outcomes);
    CertificateReport::build(params, budget, findings)
}

/// One member of the `G2` family: a conjugate of the base order or of the
/// base order with its kernel order reversed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct G2Member {
    pub kernel_reversed: bool,
    pub conjugator: FreeWord,
}

impl G2Member {
    fn oracle<'a>(&self, oracles: &Oracles<'a>) -> FamilyMember<&'a dyn ConeOracle> {
        let base = if self.kernel_reversed { oracles.g2_kernel_reversed } else { oracles.g2 };
        FamilyMember { base, spec: OrderFamilySpec::conjugate(self.conjugator.clone()) }
    }

    fn label(&self) -> String {
        g2_member_label(self.kernel_reversed, &self.conjugator)
    }
}

fn variant_of_y(sign: Sign) -> Option<Z2Order> {
    match sign {
        Sign::Positive => Some(Z2Order::PlusFirst),
        Sign::Negative => Some(Z2Order::MinusFirst),
        Sign::Identity => None,
    }
}

/// Each sampled member restricts on `A = <y, z x^2>` to exactly one of the two
/// `Z^2` orders, the one predicted by the sign of `y`; both occur.
pub fn check_restriction_law(params: &TwoBridgeParams, oracles: &Oracles, budget: &SampleBudget) -> CertificateReport {
    let mut rng = budget.rng(0x300);
    let mut members = vec![
        G2Member { kernel_reversed: false, conjugator: FreeWord::identity() },
        G2Member { kernel_reversed: true, conjugator: FreeWord::identity() },
    ];
    while members.len() < budget.members.max(2) {
        let kernel_reversed = members.len() % 2 == 1;
        let conjugator = random_word_between(&mut rng, &G2_ALPHABET, 1, 2 * budget.conj_len);
        members.push(G2Member { kernel_reversed, conjugator });
    }
    let y = FreeWord::gen('y');
    let results: Vec<(Outcome, Option<Z2Order>)> = members
        .par_iter()
        .map(|m| {
            let oracle = m.oracle(oracles);
            let case = Case { check: Check::Restrict, property: "restricts-to-one", member: Some(m.label()) };
            let run = || -> Result<(Option<Z2Order>, Option<Z2Order>)> {
                let predicted = variant_of_y(oracle.sign(&y)?);
                let found = restriction_variant(&oracle, params, Side::G2, budget.peripheral_box)?;
                Ok((predicted, found))
            };
            match run() {
                Ok((p, f)) if p.is_some() && p == f => (Outcome::Pass, f),
                Ok((p, f)) => (
                    Outcome::Fail(case.example(&y, format!("restriction {p:?}"), format!("restriction {f:?}"))),
                    f,
                ),
                Err(e) => (case.error(&y, e), None),
            }
        })
        .collect();
    let witnessed: BTreeSet<Z2Order> = results.iter().filter_map(|(_, v)| *v).collect();
    let mut outcomes: Vec<Outcome> = results.into_iter().map(|(o, _)| o).collect();
    if witnessed.len() < 2 {
        let case = Case { check: Check::Restrict, property: "both-variants", member: None };
        outcomes.push(Outcome::Fail(case.example(&y, "PlusFirst and MinusFirst", format!("{witnessed:?}"))));
    }
    let mut findings = Findings::default();
    let summary = findings.record(Check::Restrict, Some(GroupTag::G2), "restricts-to-one", None, outcomes);
    summary.variants_witnessed = Some(witnessed.into_iter().collect());
    CertificateReport::build(params, budget, findings)
}

/// Conjugators for the `G1` family: the whole ball of radius `conj_len`, topped
/// up with random longer words to `members`.
fn g1_conjugators(budget: &SampleBudget, rng: &mut ChaCha8Rng) -> Vec<FreeWord> {
    let mut out = ball(&G1_ALPHABET, budget.conj_len);
    while out.len() < budget.members {
        out.push(random_word_between(rng, &G1_ALPHABET, budget.conj_len + 1, 2 * budget.conj_len));
    }
    out
}

/// Picks the member restricting to `want` on `A`, starting from `start` and
/// conjugating once more by `x` if needed (which inverts `y`).
fn select_member(oracles: &Oracles, start: G2Member, want: Z2Order) -> Result<Option<G2Member>> {
    let y = FreeWord::gen('y');
    let mut m = start;
    for _ in 0..2 {
        if variant_of_y(m.oracle(oracles).sign(&y)?) == Some(want) {
            return Ok(Some(m));
        }
        m.conjugator = m.conjugator.mul(&FreeWord::gen('x'));
    }
    Ok(None)
}

/// The compatibility certificate: for each sampled `<^g` on `G1`, choose the
/// `G2` member restricting to `<_A` or `<'_A` by the sign of `μ`, and check
/// that every positive `μ^r h^s` maps to a positive `y^r (z x^2)^s`.
pub fn certify_compatibility(params: &TwoBridgeParams, oracles: &Oracles, budget: &SampleBudget) -> CertificateReport {
    let mut rng = budget.rng(0x400);
    let conjugators = g1_conjugators(budget, &mut rng);
    let starts: Vec<G2Member> = (0..conjugators.len())
        .map(|i| G2Member {
            kernel_reversed: i % 2 == 1,
            conjugator: random_word_between(&mut rng, &G2_ALPHABET, 0, 2 * budget.conj_len),
        })
        .collect();
    let vectors: Vec<PeripheralVector> = PeripheralVector::nonzero_box(budget.peripheral_box).collect();
    let mu = G1::new(params.b1).meridian();
    let outcomes: Vec<Outcome> = conjugators
        .par_iter()
        .zip(starts.par_iter())
        .flat_map_iter(|(g, start)| {
            let spec = OrderFamilySpec::conjugate(g.clone());
            let case = Case { check: Check::Compat, property: "positive-to-positive", member: Some(member_label(&spec)) };
            let g1_sign = |w: &FreeWord| family_is_positive(oracles.g1, &spec, w).map(|d| d.sign);
            let member = match g1_sign(&mu) {
                Ok(s) => match variant_of_y(s) {
                    Some(want) => match select_member(oracles, start.clone(), want) {
                        Ok(Some(m)) => m,
                        Ok(None) => {
                            return vec![Outcome::Fail(case.example(&mu, format!("a member restricting to {want:?}"), "none found"))]
                        }
                        Err(e) => return vec![case.error(&mu, e)],
                    },
                    None => return vec![Outcome::Fail(case.example(&mu, "μ nontrivial", "Identity"))],
                },
                Err(e) => return vec![case.error(&mu, e)],
            };
            let g2 = member.oracle(oracles);
            let case = Case { member: Some(format!("{} -> {}", member_label(&spec), member.label())), ..case };
            vectors
                .iter()
                .filter_map(|&v| {
                    let w1 = peripheral_word(params, Side::G1, v);
                    match g1_sign(&w1) {
                        Ok(Sign::Positive) => {
                            let w2 = peripheral_word(params, Side::G2, v);
                            Some(case.expect(&w2, Sign::Positive, g2.sign(&w2)))
                        }
                        Ok(_) => None,
                        Err(e) => Some(case.error(&w1, e)),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut findings = Findings::default();
    findings.record(Check::Compat, None, "positive-to-positive", None, outcomes);
    CertificateReport::build(params, budget, findings)
}

/// Normal forms are invariant under inserting conjugated relators anywhere,
/// and `nf(w1 w2) = nf(word(nf(w1)) word(nf(w2)))`.
pub fn check_normal_forms(params: &TwoBridgeParams, budget: &SampleBudget) -> CertificateReport {
    let pres = presentations(params);
    let g1 = G1::new(params.b1);
    let g2 = G2::new(params.b2);
    let mut findings = Findings::default();
    for group in [GroupTag::G1, GroupTag::G2] {
        let (alphabet, relators): (&[char], &[FreeWord]) = match group {
            GroupTag::G1 => (&G1_ALPHABET, &pres.g1.relators),
            GroupTag::G2 => (&G2_ALPHABET, &pres.g2.relators),
        };
        let equal = |u: &FreeWord, v: &FreeWord| match group {
            GroupTag::G1 => g1.equal(u, v),
            GroupTag::G2 => g2.equal(u, v),
        };
        let canonical = |w: &FreeWord| match group {
            GroupTag::G1 => g1.normal_form(w).map(|nf| g1.word(&nf)),
            GroupTag::G2 => g2.normal_form(w).map(|nf| g2.word(&nf)),
        };
        let mut rng = budget.rng(0x500 + group_stream(group));
        let insertions: Vec<(FreeWord, FreeWord)> = (0..budget.samples)
            .map(|_| {
                let w = random_word_between(&mut rng, alphabet, 0, 12);
                let g = random_word_between(&mut rng, alphabet, 0, 4);
                let r = relators.choose(&mut rng).expect("relators").pow(if rng.gen() { 1 } else { -1 });
                let at = rng.gen_range(0..=w.letter_len() as usize);
                let (u, v) = split_at_letter(&w, at);
                let w2 = u.mul(&r.conjugate_by(&g)).mul(&v);
                (w, w2)
            })
            .collect();
        let case = Case { check: Check::NormalForms, property: "relator-insertion", member: None };
        let outcomes = insertions
            .par_iter()
            .map(|(w, w2)| match equal(w, w2) {
                Ok(true) => Outcome::Pass,
                Ok(false) => Outcome::Fail(case.example(w, format!("same normal form as {w2}"), "different")),
                Err(e) => case.error(w, e),
            })
            .collect();
        findings.record(Check::NormalForms, Some(group), "relator-insertion", None, outcomes);

        let pairs: Vec<(FreeWord, FreeWord)> = (0..budget.samples)
            .map(|_| {
                (
                    random_word_between(&mut rng, alphabet, 0, 12),
                    random_word_between(&mut rng, alphabet, 0, 12),
                )
            })
            .collect();
        let case = Case { check: Check::NormalForms, property: "homomorphy", member: None };
        let outcomes = pairs
            .par_iter()
            .map(|(u, v)| {
                let run = || -> Result<bool> {
                    let rebuilt = canonical(u)?.mul(&canonical(v)?);
                    equal(&u.mul(v), &rebuilt)
                };
                let w = u.mul(v);
                match run() {
                    Ok(true) => Outcome::Pass,
                    Ok(false) => Outcome::Fail(case.example(&w, "nf(uv) = nf(nf(u) nf(v))", "different")),
                    Err(e) => case.error(&w, e),
                }
            })
            .collect();
        findings.record(Check::NormalForms, Some(group), "homomorphy", None, outcomes);
    }
    CertificateReport::build(params, budget, findings)
}

/// The oracles a certificate run is about.
#[derive(Clone, Copy)]
pub struct Oracles<'a> {
    pub g1: &'a dyn ConeOracle,
    pub g2: &'a dyn ConeOracle,
    pub g2_kernel_reversed: &'a dyn ConeOracle,
}

/// Runs the selected checks against the given oracles.
pub fn certify_with(
    params: &TwoBridgeParams,
    oracles: &Oracles,
    budget: &SampleBudget,
    checks: &[Check],
) -> CertificateReport {
    let selected: BTreeSet<Check> = checks.iter().copied().collect();
    let mut reports = Vec::new();
    for check in selected {
        match check {
            Check::NormalForms => reports.push(check_normal_forms(params, budget)),
            Check::Cone => {
                reports.push(audit_cone(params, oracles.g1, budget));
                reports.push(audit_cone(params, oracles.g2, budget));
                reports.push(audit_cone(params, oracles.g2_kernel_reversed, budget));
            }
            Check::Navas => reports.push(check_navas_law(params, oracles.g1, budget)),
            Check::Restrict => reports.push(check_restriction_law(params, oracles, budget)),
            Check::Compat => reports.push(certify_compatibility(params, oracles, budget)),
        }
    }
    CertificateReport::merge(reports)
        .unwrap_or_else(|| CertificateReport::build(params, budget, Findings::default()))
}

/// Runs the selected checks against the library's own oracles.
pub fn certify(params: &TwoBridgeParams, budget: &SampleBudget, checks: &[Check]) -> Result<CertificateReport> {
    budget.validate()?;
    let g1 = G1Order::new(params)?;
    let g2 = G2Order::new(params);
    let g2r = G2Order::with_kernel_reversed(params, true);
    let oracles = Oracles { g1: &g1, g2: &g2, g2_kernel_reversed: &g2r };
    Ok(certify_with(params, &oracles, budget, checks))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationOutcome {
    pub mutation: Mutation,
    pub group: GroupTag,
    pub verdict: Verdict,
    pub detected: bool,
    /// `check/property` of every failing summary.
    pub failing: Vec<String>,
}

/// The five corruptions the harness must catch.
pub fn standard_mutations() -> Vec<(Mutation, GroupTag)> {
    vec![
        (Mutation::FlipOnWord(FreeWord::parse("a b^-1").unwrap()), GroupTag::G1),
        (Mutation::IdentityAsPositive, GroupTag::G2),
        (Mutation::ConstantPositive, GroupTag::G1),
        (Mutation::FlipProjection, GroupTag::G2),
        (Mutation::Reverse, GroupTag::G1),
    ]
}

/// Runs every oracle-dependent check against each corrupted oracle.
pub fn mutation_suite(params: &TwoBridgeParams, budget: &SampleBudget) -> Result<Vec<MutationOutcome>> {
    budget.validate()?;
    let g1 = G1Order::new(params)?;
    let g2 = G2Order::new(params);
    let g2r = G2Order::with_kernel_reversed(params, true);
    let checks = [Check::Cone, Check::Navas, Check::Restrict, Check::Compat];
    let mut out = Vec::new();
    for (mutation, group) in standard_mutations() {
        fn wrap<'a>(inner: &'a dyn ConeOracle, mutation: &Mutation, group: GroupTag) -> Box<dyn ConeOracle + 'a> {
            if inner.group() == group {
                Box::new(Mutant { inner, mutation: mutation.clone() })
            } else {
                Box::new(inner)
            }
        }
        let m = |inner| wrap(inner, &mutation, group);
        let (mg1, mg2, mg2r) = (m(&g1), m(&g2), m(&g2r));
        let oracles = Oracles { g1: mg1.as_ref(), g2: mg2.as_ref(), g2_kernel_reversed: mg2r.as_ref() };
        let report = certify_with(params, &oracles, budget, &checks);
        let failing = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}/{}", c.check.name(), c.property))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        out.push(MutationOutcome {
            mutation,
            group,
            verdict: report.verdict,
            detected: report.verdict != Verdict::Certified,
            failing,
        });
    }
    Ok(out)
}
