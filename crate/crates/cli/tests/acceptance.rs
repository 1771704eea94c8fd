//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line (plus indented detail), and the
//! process exits non-zero if any criterion fails.

#[path = "../../core/tests/support/nichols_oracle.rs"]
mod nichols_oracle;
mod support;

use std::collections::{HashMap, HashSet, VecDeque};
use std::time::{Duration, Instant};

use weyl_racks::conjugacy::{are_conjugate, representatives};
use weyl_racks::nichols::{centralizer, characters, check_braid_equation, graded_dims, yd_cocycle, Ambient, Budget, BraidedSpace, Cocycle, YdData};
use weyl_racks::rack::{sq, FiniteRack, SearchOptions};
use weyl_racks::selftest::transposition_rack;
use weyl_racks::verify::{
    audit, class_sweep, commuting_sq_criterion, involution_sq_criterion, AuditContext, CriterionInput, SubrackReading,
    SweepOptions, SweepOutcome, SweepReport, WitnessId,
};
use weyl_racks::{GroupSpec, Permutation, SignVector, SignedElement};

use support::weylrack;

struct Verdict {
    passed: bool,
    summary: String,
    details: Vec<String>,
}

impl Verdict {
    fn new(passed: bool, summary: impl Into<String>) -> Self {
        Verdict {
            passed,
            summary: summary.into(),
            details: Vec::new(),
        }
    }

    fn within(mut self, elapsed: Duration, budget: Duration) -> Self {
        if elapsed > budget {
            self.passed = false;
            self.details.push(format!("over budget: {elapsed:.1?} > {budget:?}"));
        }
        self
    }
}

fn mul(x: &SignedElement, y: &SignedElement) -> SignedElement {
    x.compose(y).unwrap()
}

/// Closed-form conjugation against the multiplied-out product.
fn formula_consistency() -> Verdict {
    let elems: Vec<SignedElement> = GroupSpec::b(3).elements().collect();
    let id = SignedElement::identity(3);
    let bad_inverses = elems
        .iter()
        .filter(|g| mul(g, &g.inverse()) != id || mul(&g.inverse(), g) != id)
        .count();
    let mut pairs = 0;
    let mut mismatches = Vec::new();
    for g in &elems {
        for x in &elems {
            pairs += 1;
            if g.conjugate(x).unwrap() != mul(&mul(g, x), &g.inverse()) {
                mismatches.push(format!("{g} on {x}"));
            }
        }
    }
    let mut v = Verdict::new(
        elems.len() == 48 && pairs == 2304 && mismatches.is_empty() && bad_inverses == 0,
        format!("{pairs} pairs, {} mismatches; {} elements, {bad_inverses} bad inverses", mismatches.len(), elems.len()),
    );
    v.details.extend(mismatches.into_iter().take(5));
    v
}

fn commuting_pairs(n: usize, involutions_only: bool) -> Vec<(Permutation, Permutation)> {
    let perms: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| !involutions_only || p.pow(2).is_identity())
        .collect();
    let mut out = Vec::new();
    for s in &perms {
        for t in &perms {
            if s.compose(t).unwrap() == t.compose(s).unwrap() {
                out.push((s.clone(), t.clone()));
            }
        }
    }
    out
}

/// The commuting-pair `sq` criterion against direct `sq`, and its involution
/// form against the general form.
fn sq_equivalence() -> Verdict {
    let mut cases = 0;
    let mut failures = Vec::new();
    for (s, t) in commuting_pairs(3, false) {
        for a in SignVector::all(3) {
            for b in SignVector::all(3) {
                let x = SignedElement::new(a, s.clone()).unwrap();
                let y = SignedElement::new(b, t.clone()).unwrap();
                cases += 1;
                let input = CriterionInput::new(x.clone(), y.clone()).unwrap();
                if commuting_sq_criterion(&input) != (sq(&x, &y) == y) {
                    failures.push(format!("commuting form at ({x}, {y})"));
                }
            }
        }
    }
    let general = cases;
    for (s, t) in commuting_pairs(4, true) {
        for a in SignVector::all(4) {
            for b in SignVector::all(4) {
                let x = SignedElement::new(a, s.clone()).unwrap();
                let y = SignedElement::new(b, t.clone()).unwrap();
                cases += 1;
                let input = CriterionInput::new(x.clone(), y.clone()).unwrap();
                let inv = involution_sq_criterion(&input).unwrap();
                if inv != commuting_sq_criterion(&input) || inv != (sq(&x, &y) == y) {
                    failures.push(format!("involution form at ({x}, {y})"));
                }
            }
        }
    }
    let mut v = Verdict::new(
        failures.is_empty(),
        format!("{general} S3 cases, {} S4 involution cases, {} failures", cases - general, failures.len()),
    );
    v.details.extend(failures.into_iter().take(5));
    v
}

/// Orbit partition by breadth-first conjugation under the group generators.
fn orbit_ids(spec: GroupSpec) -> HashMap<SignedElement, usize> {
    let gens = spec.generators();
    let mut id = HashMap::new();
    let mut next = 0;
    for g in spec.elements() {
        if id.contains_key(&g) {
            continue;
        }
        id.insert(g.clone(), next);
        let mut queue = VecDeque::from([g]);
        while let Some(x) = queue.pop_front() {
            for h in &gens {
                let y = mul(&mul(h, &x), &h.inverse());
                if !id.contains_key(&y) {
                    id.insert(y.clone(), next);
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    id
}

fn conjugacy_oracle() -> Verdict {
    let mut details = Vec::new();
    let mut passed = true;
    for spec in [GroupSpec::b(4), GroupSpec::d(4)] {
        let ids = orbit_ids(spec);
        let classes: HashSet<usize> = ids.values().copied().collect();
        let elems: Vec<&SignedElement> = ids.keys().collect();
        let mut mismatches = 0;
        for g in &elems {
            for h in &elems {
                if are_conjugate(spec, g, h).unwrap() != (ids[*g] == ids[*h]) {
                    mismatches += 1;
                }
            }
        }
        let reps = representatives(spec).len();
        passed &= mismatches == 0 && reps == classes.len();
        details.push(format!(
            "{spec}: order {}, {} orbits, {reps} representatives, {} pairs, {mismatches} mismatches",
            elems.len(),
            classes.len(),
            elems.len() * elems.len()
        ));
    }
    Verdict {
        passed,
        summary: "invariant test against breadth-first orbits".into(),
        details,
    }
}

fn witness_audits() -> Verdict {
    let runs = [
        (WitnessId::DoubleTranspositionDegree5, 5),
        (WitnessId::DoubleTranspositionDegree6, 6),
        (WitnessId::TripleTransposition, 6),
        (WitnessId::ThreeCycle, 6),
        (WitnessId::ThreeCycle, 7),
        (WitnessId::QuadrupleTransposition, 8),
    ];
    let ctx = AuditContext::new(SearchOptions::default());
    let mut passed = true;
    let mut details = Vec::new();
    let mut total_rows = 0;
    for (witness, n) in runs {
        for spec in [GroupSpec::b(n), GroupSpec::d(n)] {
            let report = audit(witness, spec, &ctx).unwrap();
            let readings_present = report.rows.iter().all(|r| {
                [SubrackReading::Exact, SubrackReading::Cyclic]
                    .iter()
                    .all(|k| r.decomposition.iter().any(|d| d.reading == *k))
            });
            let certificates_ok = report.rows.iter().all(|r| match &r.class_verdict.certificate {
                Some(c) => c.is_valid() && r.class_verdict.certificate_validated == Some(true),
                None => r.class_verdict.certificate_validated.is_none(),
            });
            let enough = witness != WitnessId::QuadrupleTransposition || report.rows.len() + report.uncovered.len() >= 100;
            let ok = readings_present && certificates_ok && report.complete && enough;
            passed &= ok;
            total_rows += report.rows.len();
            let s = &report.summary;
            details.push(format!(
                "{} {spec}: {} rows ({} uncovered a); conjugate {}, sq moves {}, exact reading {}, cyclic reading {}, \
                 witness holds {}; class type D {}, certificates validated {}/{}{}",
                witness,
                s.rows,
                s.uncovered,
                s.conjugate,
                s.sq_differs,
                s.exact_reading_valid,
                s.cyclic_reading_valid,
                s.witness_holds,
                s.class_type_d,
                s.certificates_validated,
                s.certificates_validated + s.certificates_invalid,
                if ok { "" } else { "  <-- verdict missing or invalid" }
            ));
        }
    }
    Verdict {
        passed,
        summary: format!("{total_rows} witness rows audited, every certificate re-validated"),
        details,
    }
}

fn sweep(spec: GroupSpec) -> SweepReport {
    class_sweep(spec, &SweepOptions::for_degree(spec.degree).unwrap()).unwrap()
}

fn sweep_ground_truth() -> Verdict {
    let mut passed = true;
    let mut details = Vec::new();
    for spec in [GroupSpec::b(5), GroupSpec::d(5)] {
        let report = sweep(spec);
        let missing: Vec<String> = report
            .rows
            .iter()
            .filter(|r| r.sigma_type != [2, 3] && r.sigma_type != [1, 1, 3])
            .filter(|r| r.outcome != SweepOutcome::Certificate)
            .map(|r| format!("{} (sigma type {:?})", r.representative, r.sigma_type))
            .collect();
        let ok = missing.is_empty() && report.invalid_certificates == 0 && report.complete;
        passed &= ok;
        details.push(format!(
            "{spec}: {} classes, {} certificates, {} invalid, complete {}; {} classes outside (2,3) and (1^2,3) without a certificate",
            report.rows.len(),
            report.rows.len() - report.exception_list.len(),
            report.invalid_certificates,
            report.complete,
            missing.len()
        ));
        details.extend(missing.into_iter().map(|m| format!("  no certificate: {m}")));
    }
    for spec in [GroupSpec::b(6), GroupSpec::d(6)] {
        let report = sweep(spec);
        let flagged = report.rows.iter().filter(|r| r.exception.is_exception()).count();
        let ok = report.complete && report.invalid_certificates == 0;
        passed &= ok;
        details.push(format!(
            "{spec}: {} classes, {} exhausted, predicate flags {flagged}, {} exhausted outside the predicted shapes, complete {}",
            report.rows.len(),
            report.exception_list.len(),
            report.disagreements.len(),
            report.complete
        ));
    }
    Verdict {
        passed,
        summary: "exhaustive (representative, s) scans at degrees 5 and 6".into(),
        details,
    }
}

fn dims_of(rack: FiniteRack, q: i8, max: usize) -> Vec<u64> {
    let n = rack.size();
    let space = BraidedSpace::new(rack, Cocycle::constant(n, q).unwrap()).unwrap();
    graded_dims(&space, max, &Budget::default()).unwrap().dims()
}

fn nichols_probe() -> Verdict {
    let mut details = Vec::new();

    let mut cocycles = 0;
    let mut braid_failures = Vec::new();
    for n in 1..=4 {
        for spec in [GroupSpec::b(n), GroupSpec::d(n)] {
            for (label, rep) in representatives(spec) {
                let cent = centralizer(Ambient::Weyl(spec), &rep).unwrap();
                for chi in characters(&cent) {
                    cocycles += 1;
                    let name = chi.name.clone();
                    let ok = YdData::new(Ambient::Weyl(spec), rep.clone(), chi)
                        .and_then(|d| {
                            let q = yd_cocycle(&d)?;
                            BraidedSpace::new(d.rack().rack().clone(), q)
                        })
                        .map(|space| check_braid_equation(&space))
                        .unwrap_or(false);
                    if !ok {
                        braid_failures.push(format!("{spec} {label} {name}"));
                    }
                }
            }
        }
    }
    let a = braid_failures.is_empty();
    details.push(format!("(a) braid equation on {cocycles} YD cocycles, {} failures", braid_failures.len()));
    details.extend(braid_failures.into_iter().take(5));

    let minus = dims_of(FiniteRack::singleton(), -1, 2);
    let plus = dims_of(FiniteRack::singleton(), 1, 3);
    let b = minus == [1, 1, 0] && plus == [1, 1, 1, 1];
    details.push(format!("(b) singleton: q=-1 {minus:?}, q=+1 {plus:?}"));

    let expected = vec![1, 3, 4, 3, 1, 0];
    let oracle = nichols_oracle::oracle_dims(&transposition_rack(), -1, 5);
    let main = dims_of(transposition_rack(), -1, 5);
    let c = oracle == expected && main == oracle;
    details.push(format!("(c) 3-point transpositions, q=-1: oracle {oracle:?}, main path {main:?}"));

    Verdict {
        passed: a && b && c,
        summary: format!("(a) {} (b) {} (c) {}", ok_word(a), ok_word(b), ok_word(c)),
        details,
    }
}

fn ok_word(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "failed"
    }
}

fn determinism() -> Verdict {
    let args = ["sweep", "--family", "B", "--degree", "5"];
    let first = weylrack(&args);
    let second = weylrack(&args);
    let one = weylrack(&[&["--jobs", "1"][..], &args].concat());
    let eight = weylrack(&[&["--jobs", "8"][..], &args].concat());
    let codes = [first.code, second.code, one.code, eight.code];
    let repeat = first.stdout == second.stdout;
    let jobs = one.stdout == eight.stdout && one.stdout == first.stdout;
    Verdict {
        passed: codes == [0; 4] && repeat && jobs && !first.stdout.is_empty(),
        summary: format!(
            "repeat run {}, --jobs 1 vs --jobs 8 {}, exit codes {codes:?}, {} bytes",
            if repeat { "identical" } else { "differs" },
            if jobs { "identical" } else { "differs" },
            first.stdout.len()
        ),
        details: Vec::new(),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Verdict, Duration); 7] = [
        ("formula consistency", formula_consistency, Duration::from_secs(1)),
        ("sq criterion equivalence", sq_equivalence, Duration::from_secs(10)),
        ("conjugacy oracle agreement", conjugacy_oracle, Duration::from_secs(60)),
        ("witness audits complete", witness_audits, Duration::from_secs(600)),
        ("sweep ground truth", sweep_ground_truth, Duration::from_secs(30 * 60)),
        ("Nichols probe", nichols_probe, Duration::from_secs(60)),
        ("determinism", determinism, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let elapsed_verdict = run();
        let elapsed = start.elapsed();
        let v = elapsed_verdict.within(elapsed, budget);
        if !v.passed {
            failed += 1;
        }
        println!(
            "{} criterion {} ({name}): {} [{elapsed:.2?}]",
            if v.passed { "PASS" } else { "FAIL" },
            i + 1,
            v.summary
        );
        for d in &v.details {
            println!("    {d}");
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
