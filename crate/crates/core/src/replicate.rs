//! Mechanical re-checks of every finitely checkable statement about
//! irreducibly square-free words, each reported as a [`ClaimResult`] with
//! a stable identifier.
//!
//! Statements about infinite words are sampled on finite prefixes and marked
//! `bounded`. Where a deletion site close to the right edge of such a prefix
//! could behave differently in the infinite word, sites within a quarter of
//! the prefix length from the edge are not used to falsify anything.

use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{
    self, verify_claim_a, verify_claim_b, verify_special_words, EXCLUDED_LENGTHS,
};
use crate::disposability::{
    delete_factor, disposable_sites, failing_ks, is_irreducibly_square_free, is_k_irreducible,
    DeletionSite,
};
use crate::enumerate::{
    census_range_with, census_with, exists_irreducible, square_free_class_count, SearchOptions,
};
use crate::error::{Error, Result};
use crate::morphism::{alignment_test, crochemore_test, procedure_i, procedure_i_k, Morphism};
use crate::square::find_square;
use crate::word::{word, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The check does not apply to the given input.
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Verdict {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub description: String,
    pub verdict: Verdict,
    pub witnesses: Value,
    pub bounded: bool,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Irreducibly square-free class counts for lengths 3 to 30, up to permutation and reversal.
pub const TABLE1: [u64; 28] = [
    1, 0, 0, 1, 0, 1, 1, 1, 3, 0, 3, 4, 4, 7, 9, 7, 12, 12, 16, 18, 23, 24, 34, 36, 48, 55, 69, 78,
];

pub const THUE_DEPTH_MIN: usize = 20;

/// Divisor of the prefix length giving the right-edge margin.
pub const EDGE_MARGIN_DIVISOR: usize = 4;

/// Named sub-checks collected into the witness payload.
#[derive(Default)]
struct Checks(Vec<Value>);

impl Checks {
    fn add(&mut self, id: &str, pass: bool, detail: Value) -> bool {
        self.0
            .push(json!({ "id": id, "pass": pass, "detail": detail }));
        pass
    }

    fn all_pass(&self) -> bool {
        self.0.iter().all(|c| c["pass"] == Value::Bool(true))
    }

    fn into_result(
        self,
        claim_id: &str,
        description: &str,
        bounded: bool,
        extra: Value,
    ) -> ClaimResult {
        let verdict = Verdict::from_bool(self.all_pass());
        let mut witnesses = json!({ "checks": self.0 });
        if let (Value::Object(w), Value::Object(e)) = (&mut witnesses, extra) {
            w.extend(e);
        }
        ClaimResult {
            claim_id: claim_id.to_string(),
            description: description.to_string(),
            verdict,
            witnesses,
            bounded,
        }
    }
}

fn thue_prefix(len: usize) -> Word {
    Morphism::tau()
        .fixed_point_prefix(Letter::ZERO, len)
        .expect("tau is prolongable on 0")
}

fn square_json(w: &[Letter], sq: Option<crate::square::SquareWitness>) -> Value {
    match sq {
        Some(sq) => json!({
            "start": sq.start,
            "half_length": sq.half_length,
            "square": Word::from(sq.slice(w)),
        }),
        None => Value::Null,
    }
}

/// The Thue word avoids 010, 212 and 1021, and deleting its third letter
/// leaves a square-free word.
pub fn replicate_example1(depth: usize) -> Result<ClaimResult> {
    if depth < THUE_DEPTH_MIN {
        return Err(Error::OutOfRange {
            what: "depth",
            value: depth,
            min: THUE_DEPTH_MIN,
            max: usize::MAX,
        });
    }
    let t = thue_prefix(depth);
    let mut checks = Checks::default();
    for factor in ["010", "212", "1021"] {
        let count = t.count_factor(&word(factor));
        checks.add(
            &format!("example1.avoids.{factor}"),
            count == 0,
            json!({ "occurrences": count }),
        );
    }
    let deleted = delete_factor(&t, DeletionSite::letter(2))?;
    let square = find_square(&deleted);
    checks.add(
        "example1.delete3.square-free",
        square.is_none(),
        json!({ "length": deleted.len(), "square": square_json(&deleted, square) }),
    );
    let head = Word::from(&deleted[..14]);
    checks.add(
        "example1.delete3.prefix",
        head == word("01021012102012"),
        json!({ "prefix": head }),
    );
    Ok(checks.into_result(
        "example1",
        "Thue word avoids 010, 212, 1021; deleting its third letter keeps it square-free",
        true,
        json!({ "depth": depth }),
    ))
}

fn deletion_square_check(checks: &mut Checks, id: &str, w: &Word, start: usize, expected: &str) {
    let deleted = delete_factor(w, DeletionSite::letter(start)).expect("interior site");
    let sq = find_square(&deleted);
    let found = sq.map(|s| Word::from(s.slice(&deleted)));
    checks.add(
        id,
        found.as_ref() == Some(&word(expected)),
        json!({ "site": start, "expected": expected, "square": square_json(&deleted, sq) }),
    );
}

/// The length-17 morphism certifies an infinite irreducibly square-free word.
pub fn replicate_theorem2() -> ClaimResult {
    let phi = Morphism::phi();
    let mut checks = Checks::default();
    let cro = crochemore_test(&phi);
    checks.add("thm2.crochemore", cro.pass, json!(cro));
    let align = alignment_test(&phi);
    checks.add("thm2.alignment", align.pass, json!(align));
    let cert = procedure_i(&phi).expect("phi images are longer than one letter");
    let failed_pairs: Vec<String> = cert
        .pair_checks
        .iter()
        .filter(|p| !p.verdict)
        .map(|p| format!("{}{}", p.a, p.b))
        .collect();
    checks.add(
        "thm2.procedure1",
        cert.procedure_pass,
        json!({ "failed_pairs": failed_pairs }),
    );
    let phi01 = phi.apply(&word("01"));
    let phi02 = phi.apply(&word("02"));
    deletion_square_check(&mut checks, "thm2.pair01.site16", &phi01, 16, "11");
    deletion_square_check(&mut checks, "thm2.pair02.site16", &phi02, 16, "02120212");
    deletion_square_check(&mut checks, "thm2.pair01.site17", &phi01, 17, "10201020");
    deletion_square_check(&mut checks, "thm2.pair02.site17", &phi02, 17, "00");
    for a in Letter::ALL {
        let image = phi.image(a);
        let report = is_irreducibly_square_free(image).expect("phi images are square-free");
        checks.add(
            &format!("thm2.phi{a}.irreducible"),
            report.verdict,
            json!({ "word": image, "first_disposable": report.first_disposable }),
        );
    }
    checks.into_result(
        "thm2",
        "phi preserves square-freeness, has the alignment property, and passes the pair checks",
        false,
        json!({}),
    )
}

/// Census of irreducibly square-free words of lengths 3 to 30.
pub fn replicate_table1(opts: &SearchOptions) -> Result<ClaimResult> {
    let rows = census_range_with(3, 30, false, opts)?;
    let observed: Vec<u64> = rows.iter().map(|r| r.irreducible_count_canonical).collect();
    let mut checks = Checks::default();
    let mismatches: Vec<Value> = rows
        .iter()
        .zip(TABLE1)
        .filter(|(r, e)| r.irreducible_count_canonical != *e)
        .map(|(r, e)| json!({ "length": r.length, "expected": e, "observed": r.irreducible_count_canonical }))
        .collect();
    checks.add(
        "table1.counts",
        mismatches.is_empty(),
        json!({ "mismatches": mismatches }),
    );
    Ok(checks.into_result(
        "table1",
        "irreducibly square-free words of lengths 3..30 up to isomorphism and reversal",
        false,
        json!({ "expected": TABLE1, "observed": observed }),
    ))
}

/// No irreducibly square-free words of lengths 4, 5, 7, 12.
pub fn replicate_nonexistence() -> Result<ClaimResult> {
    let mut checks = Checks::default();
    for n in EXCLUDED_LENGTHS {
        let exists = exists_irreducible(n)?;
        checks.add(
            &format!("nonexistence.length{n}"),
            !exists,
            json!({ "exists": exists }),
        );
    }
    Ok(checks.into_result(
        "nonexistence",
        "no irreducibly square-free words of lengths 4, 5, 7 and 12",
        false,
        json!({}),
    ))
}

/// 010212010 is the only class at length nine, and it is a palindrome.
pub fn replicate_length9(opts: &SearchOptions) -> Result<ClaimResult> {
    let row = census_with(9, true, opts)?;
    let reps = row.representatives.clone().unwrap_or_default();
    let mut checks = Checks::default();
    checks.add(
        "length9.unique",
        reps == vec![word("010212010")],
        json!({ "representatives": reps }),
    );
    checks.add(
        "length9.palindrome",
        reps.iter().all(|w| w.is_palindrome()),
        json!({}),
    );
    Ok(checks.into_result(
        "length9",
        "010212010 is the only irreducibly square-free word of length nine, a palindrome",
        false,
        json!({}),
    ))
}

/// 202 classes of square-free words of length 20, 12 of them irreducible.
pub fn replicate_classes20(opts: &SearchOptions) -> Result<ClaimResult> {
    let classes = square_free_class_count(20, opts);
    let irreducible = census_with(20, false, opts)?.irreducible_count_canonical;
    let mut checks = Checks::default();
    checks.add(
        "classes20.square-free",
        classes == 202,
        json!({ "observed": classes }),
    );
    checks.add(
        "classes20.irreducible",
        irreducible == 12,
        json!({ "observed": irreducible }),
    );
    Ok(checks.into_result(
        "classes20",
        "202 square-free words of length 20 up to isomorphism and reversal, 12 irreducible",
        false,
        json!({}),
    ))
}

/// Facts about powers of the Thue morphism behind its 2-irreducibility.
pub fn replicate_example2() -> ClaimResult {
    let tau = Morphism::tau();
    let mut checks = Checks::default();

    let tau2 = tau.power(2).expect("positive power");
    let tau2_images: Vec<String> = tau2.images().iter().map(|w| w.to_string()).collect();
    checks.add(
        "example2.tau2.images",
        tau2_images == ["012021", "0121", "02"],
        json!({ "images": tau2_images }),
    );

    for n in [4usize, 6] {
        let w = tau
            .power(n)
            .expect("positive power")
            .image(Letter::ZERO)
            .clone();
        let ends = w.ends_with(&word("121"));
        let site = DeletionSite::new(w.len() - 3, 2);
        let report = is_k_irreducible(&w, 2).expect("powers of tau on 0 are square-free");
        let disposable = report.witness_for(site).is_some_and(|s| s.is_disposable());
        checks.add(
            &format!("example2.tau{n}.suffix121"),
            ends && disposable && !report.verdict,
            json!({ "length": w.len(), "site": site, "disposable": disposable }),
        );
    }

    let tau5 = tau.power(5).expect("positive power");
    let lengths: Vec<usize> = Letter::ALL.iter().map(|&a| tau5.image_length(a)).collect();
    checks.add(
        "example2.tau5.lengths",
        lengths == [48, 32, 16],
        json!({ "lengths": lengths }),
    );
    checks.add(
        "example2.tau5.image2",
        tau5.image(Letter::TWO) == &word("0120210121020121"),
        json!({ "image": tau5.image(Letter::TWO) }),
    );
    let p = word("012021");
    let common = tau5.images().iter().all(|w| w.starts_with(&p));
    checks.add(
        "example2.tau5.common-prefix",
        common,
        json!({ "prefix": p }),
    );

    for a in [Letter::ONE, Letter::TWO] {
        let w = tau5.image(a).concat(&p);
        let report = is_k_irreducible(&w, 2).expect("tau5(a)p is square-free");
        checks.add(
            &format!("example2.tau5_{a}p.2-irreducible"),
            report.verdict,
            json!({ "first_disposable": report.first_disposable }),
        );
    }

    let w = tau5.image(Letter::ZERO).concat(&p);
    let p_start = tau5.image_length(Letter::ZERO);
    let sites = disposable_sites(&w, 2).expect("tau5(0)p is square-free");
    let found: Vec<Value> = sites
        .iter()
        .map(|s| json!({ "start": s.start, "factor": Word::from(&w[s.start..s.start + 2]) }))
        .collect();
    let all_in_p = sites.iter().all(|s| {
        let f = Word::from(&w[s.start..s.start + 2]).to_string();
        s.start >= p_start && (f == "20" || f == "02")
    });
    let mut factors: Vec<String> = sites
        .iter()
        .map(|s| Word::from(&w[s.start..s.start + 2]).to_string())
        .collect();
    factors.sort();
    checks.add(
        "example2.tau5_0p.disposable-pairs",
        all_in_p && factors == ["02", "20"],
        json!({ "sites": found }),
    );

    checks.into_result(
        "example2",
        "finite facts on powers of tau behind 2-irreducibility of the Thue word",
        false,
        json!({}),
    )
}

/// Deleting `u·a` from a prefix `a·u·a·w0` leaves the suffix `a·w0`, so
/// `k = |u| + 1` is a failing k.
pub fn replicate_section3_theorem(prefix: &[Letter], max_k: usize) -> Result<ClaimResult> {
    if let Some(sq) = find_square(prefix) {
        return Err(Error::NotSquareFree(sq));
    }
    let first = *prefix.first().ok_or(Error::NoRecurrence)?;
    let j = prefix[1..]
        .iter()
        .position(|&b| b == first)
        .map(|p| p + 1)
        .ok_or(Error::NoRecurrence)?;
    let site = DeletionSite::new(1, j);
    let description =
        "every square-free word beginning a·u·a·w0 loses k-irreducibility at k = |u| + 1";
    if !site.is_interior(prefix.len()) {
        return Ok(ClaimResult {
            claim_id: "sec3.theorem".into(),
            description: description.into(),
            verdict: Verdict::NotApplicable,
            witnesses: json!({
                "site": site,
                "reason": "w0 is empty in this prefix; a longer prefix is needed",
            }),
            bounded: true,
        });
    }
    let mut checks = Checks::default();
    let deleted = delete_factor(prefix, site)?;
    let square = find_square(&deleted);
    checks.add(
        "sec3.theorem.deletion",
        square.is_none() && deleted[..] == prefix[j..],
        json!({ "site": site, "k": j, "square": square_json(&deleted, square) }),
    );
    let ks = failing_ks(prefix, max_k)?;
    if j <= max_k {
        checks.add(
            "sec3.theorem.failing-ks",
            ks.contains(&j),
            json!({ "k": j }),
        );
    }
    let margin = prefix.len() / EDGE_MARGIN_DIVISOR;
    let horizon = prefix.len() - margin;
    let away_from_edge: Vec<usize> = ks
        .iter()
        .copied()
        .filter(|&k| {
            disposable_sites(prefix, k)
                .map(|sites| sites.iter().any(|s| s.start + s.length <= horizon))
                .unwrap_or(false)
        })
        .collect();
    Ok(checks.into_result(
        "sec3.theorem",
        description,
        true,
        json!({
            "prefix_length": prefix.len(),
            "max_k": max_k,
            "failing_ks": ks,
            "edge_margin": margin,
            "failing_ks_away_from_edge": away_from_edge,
        }),
    ))
}

/// The morphism alpha3 yields a 3-irreducibly square-free fixed point.
pub fn replicate_alpha3() -> ClaimResult {
    let m = Morphism::alpha3();
    let mut checks = Checks::default();
    checks.add(
        "alpha3.image0",
        m.image(Letter::ZERO) == &word("0121012"),
        json!({ "image": m.image(Letter::ZERO) }),
    );
    let cro = crochemore_test(&m);
    checks.add("alpha3.crochemore", cro.pass, json!(cro));
    checks.add(
        "alpha3.prolongable",
        m.is_prolongable_on(Letter::ZERO),
        json!({}),
    );
    let cert = procedure_i_k(&m, 3).expect("alpha3 images are longer than one letter");
    for p in &cert.pair_checks {
        checks.add(
            &format!("alpha3.pair{}{}.3-irreducible", p.a, p.b),
            p.verdict,
            json!({ "word": p.word }),
        );
    }
    checks.into_result(
        "alpha3",
        "alpha3 preserves square-freeness and alpha3(ab) is 3-irreducibly square-free",
        false,
        json!({}),
    )
}

pub fn replicate_claim_a(depth: usize) -> Result<ClaimResult> {
    let report = verify_claim_a(depth)?;
    let mut checks = Checks::default();
    for c in &report.checks {
        checks.add(
            &format!("claimA.phi{}.suffix{}", c.source, c.check.prefix.len()),
            c.check.pass,
            json!({ "suffix": c.check.prefix, "square": c.check.square }),
        );
    }
    Ok(checks.into_result(
        "claimA",
        "w·Phi is square-free for every nonempty proper suffix w of phi(1) and phi(2)",
        true,
        json!({ "depth": depth }),
    ))
}

pub fn replicate_claim_b(depth: usize) -> Result<ClaimResult> {
    let report = verify_claim_b(depth)?;
    let mut checks = Checks::default();
    for c in &report.checks {
        checks.add(
            &format!("claimB.{}", c.prefix),
            c.pass,
            json!({ "square": c.square }),
        );
    }
    checks.add(
        "claimB.lead",
        report.lead == word("01020120") && !report.lead_occurs_in_phi,
        json!({ "lead": report.lead, "occurs_in_phi": report.lead_occurs_in_phi }),
    );
    Ok(checks.into_result(
        "claimB",
        "121·Phi and 0102·Phi are square-free",
        true,
        json!({ "depth": depth }),
    ))
}

pub fn replicate_special_words(depth: usize) -> Result<ClaimResult> {
    let report = verify_special_words(depth)?;
    let mut checks = Checks::default();
    for e in &report.entries {
        checks.add(
            &format!("special.w{}", e.i),
            e.length_matches && e.square_free && e.extension.pass && e.irreducible_with_phi0,
            json!({
                "word": e.word,
                "length_matches": e.length_matches,
                "extension_square_free": e.extension.pass,
                "irreducible_with_phi0": e.irreducible_with_phi0,
            }),
        );
    }
    Ok(checks.into_result(
        "special-words",
        "special words have length i, extend square-freely by Phi, and w_i·phi(0) is irreducible",
        true,
        json!({ "depth": depth }),
    ))
}

pub fn replicate_prefix_gap() -> ClaimResult {
    let report = construct::phi_prefix_gap_check();
    let mut checks = Checks::default();
    checks.add(
        "phi-prefix-gap.length17",
        report.phi0_irreducible,
        json!({}),
    );
    for e in &report.entries {
        checks.add(
            &format!("phi-prefix-gap.length{}", e.n),
            !e.verdict,
            json!({ "first_disposable": e.first_disposable }),
        );
    }
    checks.into_result(
        "phi-prefix-gap",
        "no prefix of Phi of length 19..29 is irreducibly square-free",
        false,
        json!({}),
    )
}

/// Upper length for the construction sweep in [`replicate_all`].
pub const CONSTRUCT_SWEEP_MAX: usize = 300;

/// Irreducibly square-free words of all lengths `3..=max_len` except 4, 5, 7, 12.
pub fn replicate_theorem3(max_len: usize) -> ClaimResult {
    let mut checks = Checks::default();
    let mut failures = Vec::new();
    for n in 3..=max_len {
        match construct::construct(n) {
            Ok(t) if t.verified && t.result.len() == n => {}
            Err(Error::NoSuchLength(m)) if EXCLUDED_LENGTHS.contains(&m) => {}
            Ok(_) => failures.push(json!({ "n": n })),
            Err(e) => failures.push(json!({ "n": n, "error": e.to_string() })),
        }
    }
    checks.add(
        "thm3.construct",
        failures.is_empty(),
        json!({ "failures": failures }),
    );
    checks.into_result(
        "thm3",
        "verified irreducibly square-free words of every length except 4, 5, 7, 12",
        false,
        json!({ "max_length": max_len }),
    )
}

/// Prefix of the Thue word used for the failing-k check.
pub const SECTION3_PREFIX: usize = 30;
pub const SECTION3_MAX_K: usize = 10;

/// Runs every claim in a fixed order.
pub fn replicate_all(depth: usize, opts: &SearchOptions) -> Result<Vec<ClaimResult>> {
    if depth < construct::PHI_LENGTH {
        return Err(Error::OutOfRange {
            what: "depth",
            value: depth,
            min: construct::PHI_LENGTH,
            max: usize::MAX,
        });
    }
    let thue_depth = depth.max(THUE_DEPTH_MIN);
    Ok(vec![
        replicate_example1(thue_depth)?,
        replicate_theorem2(),
        replicate_table1(opts)?,
        replicate_nonexistence()?,
        replicate_length9(opts)?,
        replicate_classes20(opts)?,
        replicate_prefix_gap(),
        replicate_claim_a(depth)?,
        replicate_claim_b(depth)?,
        replicate_special_words(depth)?,
        replicate_theorem3(CONSTRUCT_SWEEP_MAX),
        replicate_example2(),
        replicate_section3_theorem(&thue_prefix(SECTION3_PREFIX), SECTION3_MAX_K)?,
        replicate_alpha3(),
    ])
}

pub fn all_pass(results: &[ClaimResult]) -> bool {
    results.iter().all(ClaimResult::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example1_small() {
        let r = replicate_example1(100).unwrap();
        assert!(r.passed(), "{:#}", r.witnesses);
        assert!(r.bounded);
        assert!(replicate_example1(19).is_err());
    }

    #[test]
    fn theorem2_passes() {
        let r = replicate_theorem2();
        assert!(r.passed(), "{:#}", r.witnesses);
        assert!(!r.bounded);
    }

    #[test]
    fn example2_passes() {
        let r = replicate_example2();
        assert!(r.passed(), "{:#}", r.witnesses);
    }

    #[test]
    fn alpha3_passes() {
        assert!(replicate_alpha3().passed());
    }

    #[test]
    fn section3_on_thue_prefix() {
        let r = replicate_section3_theorem(&thue_prefix(30), 10).unwrap();
        assert!(r.passed(), "{:#}", r.witnesses);
        assert!(!r.witnesses["failing_ks"].as_array().unwrap().is_empty());
    }

    #[test]
    fn section3_boundary_cases() {
        let r = replicate_section3_theorem(&word("010"), 1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        let r = replicate_section3_theorem(&word("0120"), 2).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert_eq!(
            replicate_section3_theorem(&word("012"), 1),
            Err(Error::NoRecurrence)
        );
        assert!(matches!(
            replicate_section3_theorem(&word("0110"), 1),
            Err(Error::NotSquareFree(_))
        ));
    }

    #[test]
    fn prefix_gap_passes() {
        assert!(replicate_prefix_gap().passed());
    }

    #[test]
    fn failure_propagates_to_aggregate() {
        let mut results = vec![replicate_alpha3(), replicate_prefix_gap()];
        assert!(all_pass(&results));
        results[1].verdict = Verdict::Fail;
        assert!(!all_pass(&results));
    }
}
