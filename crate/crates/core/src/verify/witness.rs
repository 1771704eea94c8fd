//! Rebuilds the explicit witness pairs `(aσ, bτ)` used to argue that certain
//! classes are of type D, and audits each one against ground truth.
//!
//! The case tables only constrain parities of `b`; free components are filled
//! with the smallest packed value (bit `i - 1` for `bᵢ`). The subsets
//! `R`, `S` are built under two readings of "elements of the class over σ":
//! permutation part exactly `σ`, or permutation part in `⟨σ⟩`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use super::criteria::{commuting_sq_criterion, six_component_form, CriterionInput};
use crate::conjugacy::{same_lengths_and_total_parity, total_parity_counterexamples, ClassCache, ClassLabel, ConjClass};
use crate::error::{Error, Result};
use crate::rack::{sq, type_d_certificate, validate_decomposition, DecompositionReport, DecompositionWitness, SearchOptions, TypeDCertificate, TypeDSearch};
use crate::weyl::{GroupSpec, Permutation, SignVector, SignedElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WitnessId {
    /// `σ = (1 2)(3 4)` in degree 5.
    #[serde(rename = "double-transposition-5")]
    DoubleTranspositionDegree5,
    /// `σ = (1 2)(3 4)` in degree 6.
    #[serde(rename = "double-transposition-6")]
    DoubleTranspositionDegree6,
    /// `σ = (1 2)(3 4)(5 6)`.
    #[serde(rename = "triple-transposition")]
    TripleTransposition,
    /// `σ = (1 2)(3 4)(5 6)(7 8)`.
    #[serde(rename = "quadruple-transposition")]
    QuadrupleTransposition,
    /// `σ = (1 2 3)`, `τ = (4 5 6)`, degree at least 6.
    #[serde(rename = "three-cycle")]
    ThreeCycle,
}

impl WitnessId {
    pub const ALL: [WitnessId; 5] = [
        WitnessId::DoubleTranspositionDegree5,
        WitnessId::DoubleTranspositionDegree6,
        WitnessId::TripleTransposition,
        WitnessId::QuadrupleTransposition,
        WitnessId::ThreeCycle,
    ];

    pub fn code(self) -> &'static str {
        match self {
            WitnessId::DoubleTranspositionDegree5 => "double-transposition-5",
            WitnessId::DoubleTranspositionDegree6 => "double-transposition-6",
            WitnessId::TripleTransposition => "triple-transposition",
            WitnessId::QuadrupleTransposition => "quadruple-transposition",
            WitnessId::ThreeCycle => "three-cycle",
        }
    }

    /// The fixed degree, or `None` when any degree `>= 6` is allowed.
    pub fn fixed_degree(self) -> Option<usize> {
        match self {
            WitnessId::DoubleTranspositionDegree5 => Some(5),
            WitnessId::DoubleTranspositionDegree6 | WitnessId::TripleTransposition => Some(6),
            WitnessId::QuadrupleTransposition => Some(8),
            WitnessId::ThreeCycle => None,
        }
    }

    pub fn default_degree(self) -> usize {
        self.fixed_degree().unwrap_or(6)
    }

    fn check_degree(self, n: usize) -> Result<()> {
        let ok = match self.fixed_degree() {
            Some(d) => d == n,
            None => n >= 6,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{} is not defined in degree {n}", self.code())))
        }
    }

    fn cycles(self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        match self {
            WitnessId::DoubleTranspositionDegree5 | WitnessId::DoubleTranspositionDegree6 => {
                (vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]])
            }
            WitnessId::TripleTransposition => (
                vec![vec![1, 2], vec![3, 4], vec![5, 6]],
                vec![vec![1, 3], vec![2, 4], vec![5, 6]],
            ),
            WitnessId::QuadrupleTransposition => (
                vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![7, 8]],
                vec![vec![1, 3], vec![2, 4], vec![5, 6], vec![7, 8]],
            ),
            WitnessId::ThreeCycle => (vec![vec![1, 2, 3]], vec![vec![4, 5, 6]]),
        }
    }

    /// `(σ, τ)` in degree `n`.
    pub fn permutations(self, n: usize) -> Result<(Permutation, Permutation)> {
        self.check_degree(n)?;
        let (s, t) = self.cycles();
        Ok((Permutation::from_cycles(n, &s)?, Permutation::from_cycles(n, &t)?))
    }
}

impl fmt::Display for WitnessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for WitnessId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WitnessId::ALL
            .into_iter()
            .find(|p| p.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Invalid(format!("unknown witness construction {s:?}")))
    }
}

/// A parity constraint `Σ_{i ∈ positions} bᵢ ≡ parity`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Constraint {
    positions: Vec<usize>,
    parity: u8,
}

fn range(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

/// The case row for `a`: parity constraints on `b`.
fn case_row(witness: WitnessId, a: &SignVector) -> Result<Vec<Constraint>> {
    let n = a.degree();
    let flip = |positions: Vec<usize>| {
        let parity = 1 ^ a.parity_on(positions.iter().copied());
        Constraint { positions, parity }
    };
    Ok(match witness {
        // a₅ = 1 ↦ b₅ = 0 and a₅ = 0 ↦ b₅ = 1; Σ₁..₄ b has the other parity
        WitnessId::DoubleTranspositionDegree5 => vec![flip(range(1, 4)), flip(vec![5])],
        // both Σ₁..₄ and b₅ + b₆ switch parity
        WitnessId::DoubleTranspositionDegree6 | WitnessId::TripleTransposition => {
            vec![flip(range(1, 4)), flip(vec![5, 6])]
        }
        WitnessId::QuadrupleTransposition => vec![flip(range(1, 4)), flip(range(5, 8))],
        WitnessId::ThreeCycle => {
            let head: [u8; 3] = match (a.get(4), a.get(5), a.get(6)) {
                (0, 0, 0) => [1, 0, 0],
                (1, 0, 0) => [0, 0, 0],
                (1, 1, 0) => [1, 0, 0],
                (1, 1, 1) => [1, 1, 0],
                _ => return Err(Error::NoCaseRow(a.to_string())),
            };
            let rest = (1..=n).filter(|i| !(4..=6).contains(i));
            let tail_parity = 1 ^ a.parity_on(rest);
            let mut out: Vec<Constraint> = head
                .iter()
                .enumerate()
                .map(|(i, &v)| Constraint {
                    positions: vec![i + 1],
                    parity: v,
                })
                .collect();
            out.push(Constraint {
                positions: range(4, n),
                parity: tail_parity,
            });
            out
        }
    })
}

fn smallest_solution(spec: GroupSpec, constraints: &[Constraint]) -> Option<SignVector> {
    SignVector::all(spec.degree).find(|b| {
        spec.contains_sign(b)
            && constraints
                .iter()
                .all(|c| b.parity_on(c.positions.iter().copied()) == c.parity)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubrackReading {
    /// Permutation part exactly `σ` (resp. `τ`).
    Exact,
    /// Permutation part in `⟨σ⟩` (resp. `⟨τ⟩`).
    Cyclic,
}

#[derive(Clone, Debug)]
pub struct ReadingSets {
    pub reading: SubrackReading,
    pub r_set: Vec<SignedElement>,
    pub s_set: Vec<SignedElement>,
}

#[derive(Clone, Debug)]
pub struct WitnessConstruction {
    pub witness: WitnessId,
    pub spec: GroupSpec,
    pub a: SignVector,
    pub sigma: Permutation,
    pub tau: Permutation,
    pub b: SignVector,
    pub a_sigma: SignedElement,
    pub b_tau: SignedElement,
    /// The class of `aσ`.
    pub class: Arc<ConjClass>,
    pub readings: Vec<ReadingSets>,
}

fn cyclic_group(p: &Permutation) -> Vec<Permutation> {
    (0..p.order()).map(|k| p.pow(k)).collect()
}

fn build_readings(class: &ConjClass, sigma: &Permutation, tau: &Permutation) -> Vec<ReadingSets> {
    let over = |perms: &[Permutation]| -> Vec<SignedElement> {
        class
            .elements()
            .iter()
            .filter(|g| perms.contains(g.perm()))
            .cloned()
            .collect()
    };
    vec![
        ReadingSets {
            reading: SubrackReading::Exact,
            r_set: over(std::slice::from_ref(sigma)),
            s_set: over(std::slice::from_ref(tau)),
        },
        ReadingSets {
            reading: SubrackReading::Cyclic,
            r_set: over(&cyclic_group(sigma)),
            s_set: over(&cyclic_group(tau)),
        },
    ]
}

/// Builds the witness for `a` following the construction's case table.
pub fn witness_construction(witness: WitnessId, spec: GroupSpec, a: &SignVector) -> Result<WitnessConstruction> {
    witness_construction_cached(witness, spec, a, &ClassCache::new())
}

pub fn witness_construction_cached(
    witness: WitnessId,
    spec: GroupSpec,
    a: &SignVector,
    cache: &ClassCache,
) -> Result<WitnessConstruction> {
    let (sigma, tau) = witness.permutations(spec.degree)?;
    if a.degree() != spec.degree {
        return Err(Error::DegreeMismatch {
            left: spec.degree,
            right: a.degree(),
        });
    }
    let a_sigma = SignedElement::new(*a, sigma.clone())?;
    spec.require_member(&a_sigma)?;
    let constraints = case_row(witness, a)?;
    let b = smallest_solution(spec, &constraints).ok_or_else(|| Error::NoCaseRow(a.to_string()))?;
    let b_tau = SignedElement::new(b, tau.clone())?;
    let class = cache.class_of(spec, &a_sigma)?;
    let readings = build_readings(&class, &sigma, &tau);
    Ok(WitnessConstruction {
        witness,
        spec,
        a: *a,
        sigma,
        tau,
        b,
        a_sigma,
        b_tau,
        class,
        readings,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReadingVerdict {
    pub reading: SubrackReading,
    pub report: DecompositionReport,
}

/// Type D search on the whole class of `aσ`, independent of the witness.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassVerdict {
    pub label: ClassLabel,
    pub class_size: usize,
    pub type_d: bool,
    pub complete: bool,
    pub certificate: Option<TypeDCertificate>,
    /// The certificate's decomposition was rebuilt and validated.
    pub certificate_validated: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditRow {
    pub a: String,
    pub b: String,
    pub a_sigma: SignedElement,
    pub b_tau: SignedElement,
    /// `bτ` lies in the conjugation orbit of `aσ`.
    pub conjugate: bool,
    /// Signed cycle types agree.
    pub signed_cycle_types_agree: bool,
    /// Equal cycle lengths and equal total sign parity.
    pub total_parity_test_predicts_conjugate: bool,
    /// `sq(aσ, bτ) ≠ bτ` by direct computation.
    pub sq_differs: bool,
    /// The commuting-pair criterion predicts `sq(aσ, bτ) = bτ`.
    pub criterion_predicts_sq_fixed: bool,
    /// The six-component form, for the three-cycle witness only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub six_component_form_holds: Option<bool>,
    pub decomposition: Vec<ReadingVerdict>,
    pub class_verdict: ClassVerdict,
}

impl AuditRow {
    /// The witness does what it is meant to: conjugate, `sq` moves, and the
    /// decomposition validates under at least one reading.
    pub fn witness_holds(&self) -> bool {
        self.conjugate && self.sq_differs && self.decomposition.iter().any(|d| d.report.passed)
    }
}

fn class_verdict(class: &ConjClass, label: ClassLabel, search: &TypeDSearch) -> ClassVerdict {
    let certificate = search.certificate().cloned();
    let certificate_validated = certificate
        .as_ref()
        .map(TypeDCertificate::is_valid);
    ClassVerdict {
        label,
        class_size: class.size(),
        type_d: certificate.is_some(),
        complete: search.complete,
        certificate,
        certificate_validated,
    }
}

/// Memo of type D searches per class, shared across audit rows.
#[derive(Default)]
pub struct AuditContext {
    pub classes: ClassCache,
    searches: Mutex<HashMap<(GroupSpec, ClassLabel), Arc<TypeDSearch>>>,
    pub search: SearchOptions,
}

impl AuditContext {
    pub fn new(search: SearchOptions) -> Self {
        AuditContext {
            search,
            ..Default::default()
        }
    }

    fn search_for(&self, spec: GroupSpec, label: &ClassLabel) -> Arc<TypeDSearch> {
        let key = (spec, label.clone());
        if let Some(s) = self.searches.lock().unwrap().get(&key) {
            return Arc::clone(s);
        }
        let class = self.classes.get(spec, label);
        let result = Arc::new(type_d_certificate(&class, self.search));
        Arc::clone(self.searches.lock().unwrap().entry(key).or_insert(result))
    }
}

/// Three independent verdicts for one witness, plus a class-level search.
pub fn audit_witness(w: &WitnessConstruction, ctx: &AuditContext) -> Result<AuditRow> {
    let conjugate = w.class.contains(&w.b_tau);
    let sq_differs = sq(&w.a_sigma, &w.b_tau) != w.b_tau;
    let criterion = CriterionInput::new(w.a_sigma.clone(), w.b_tau.clone())?;
    let criterion_predicts_sq_fixed = commuting_sq_criterion(&criterion);
    if criterion_predicts_sq_fixed == sq_differs {
        return Err(Error::InvariantViolated(format!(
            "commuting criterion disagrees with sq for {} {}",
            w.a_sigma, w.b_tau
        )));
    }
    let six_component_form_holds = match w.witness {
        WitnessId::ThreeCycle => Some(six_component_form(&w.a, &w.b)?),
        _ => None,
    };
    let decomposition = w
        .readings
        .iter()
        .map(|r| ReadingVerdict {
            reading: r.reading,
            report: validate_decomposition(&DecompositionWitness {
                r_set: r.r_set.clone(),
                s_set: r.s_set.clone(),
                a: w.a_sigma.clone(),
                b: w.b_tau.clone(),
            }),
        })
        .collect();
    let label = crate::conjugacy::label_of(w.spec, &w.a_sigma)?;
    let search = ctx.search_for(w.spec, &label);
    let class = ctx.classes.get(w.spec, &label);
    Ok(AuditRow {
        a: w.a.to_string(),
        b: w.b.to_string(),
        a_sigma: w.a_sigma.clone(),
        b_tau: w.b_tau.clone(),
        conjugate,
        signed_cycle_types_agree: w.a_sigma.sign_cycle_type() == w.b_tau.sign_cycle_type(),
        total_parity_test_predicts_conjugate: same_lengths_and_total_parity(&w.a_sigma, &w.b_tau),
        sq_differs,
        criterion_predicts_sq_fixed,
        six_component_form_holds,
        decomposition,
        class_verdict: class_verdict(&class, label, &search),
    })
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditSummary {
    pub rows: usize,
    pub uncovered: usize,
    pub conjugate: usize,
    pub sq_differs: usize,
    pub exact_reading_valid: usize,
    pub cyclic_reading_valid: usize,
    pub witness_holds: usize,
    pub class_type_d: usize,
    pub class_exhausted: usize,
    pub certificates_validated: usize,
    pub certificates_invalid: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub witness: WitnessId,
    pub family: crate::weyl::Family,
    pub degree: usize,
    pub sigma: Permutation,
    pub tau: Permutation,
    pub rows: Vec<AuditRow>,
    /// Admissible `a` for which no case row exists.
    pub uncovered: Vec<String>,
    /// Distinct classes that the total-parity test would call conjugate.
    pub total_parity_counterexamples: usize,
    pub summary: AuditSummary,
    pub complete: bool,
}

/// Audits every admissible `a` for the construction in `spec`.
pub fn audit(witness: WitnessId, spec: GroupSpec, ctx: &AuditContext) -> Result<AuditReport> {
    let (sigma, tau) = witness.permutations(spec.degree)?;
    let candidates: Vec<SignVector> = SignVector::all(spec.degree).filter(|a| spec.contains_sign(a)).collect();
    let results: Vec<Result<Option<AuditRow>>> = candidates
        .par_iter()
        .map(|a| match witness_construction_cached(witness, spec, a, &ctx.classes) {
            Ok(w) => audit_witness(&w, ctx).map(Some),
            Err(Error::NoCaseRow(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    let mut rows = Vec::new();
    let mut uncovered = Vec::new();
    for (a, r) in candidates.iter().zip(results) {
        match r? {
            Some(row) => rows.push(row),
            None => uncovered.push(a.to_string()),
        }
    }
    let mut summary = AuditSummary {
        rows: rows.len(),
        uncovered: uncovered.len(),
        ..Default::default()
    };
    let mut complete = true;
    for row in &rows {
        summary.conjugate += row.conjugate as usize;
        summary.sq_differs += row.sq_differs as usize;
        for d in &row.decomposition {
            if d.report.passed {
                match d.reading {
                    SubrackReading::Exact => summary.exact_reading_valid += 1,
                    SubrackReading::Cyclic => summary.cyclic_reading_valid += 1,
                }
            }
        }
        summary.witness_holds += row.witness_holds() as usize;
        let cv = &row.class_verdict;
        complete &= cv.complete;
        if cv.type_d {
            summary.class_type_d += 1;
        } else {
            summary.class_exhausted += 1;
        }
        match cv.certificate_validated {
            Some(true) => summary.certificates_validated += 1,
            Some(false) => summary.certificates_invalid += 1,
            None => {}
        }
    }
    Ok(AuditReport {
        witness,
        family: spec.family,
        degree: spec.degree,
        sigma,
        tau,
        rows,
        uncovered,
        total_parity_counterexamples: total_parity_counterexamples(spec).len(),
        summary,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignVector {
        SignVector::from_slice(&s.bytes().map(|b| b - b'0').collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn degree5_witness_example() {
        let w = witness_construction(WitnessId::DoubleTranspositionDegree5, GroupSpec::b(5), &sv("00001")).unwrap();
        assert_eq!(w.b, sv("10000"));
        assert_eq!(w.tau.to_string(), "(1 3)(2 4)");
        assert_eq!(w.sigma.to_string(), "(1 2)(3 4)");
    }

    #[test]
    fn three_cycle_witness_example() {
        let w = witness_construction(WitnessId::ThreeCycle, GroupSpec::b(6), &sv("000000")).unwrap();
        assert_eq!(&w.b.to_vec()[..3], &[1, 0, 0]);
        assert_eq!(w.b.parity_on(4..=6), 1);
        assert_eq!(w.b, sv("100100"));
        // (a₄, a₅, a₆) = (1, 0, 0), Σ over the rest odd
        let w = witness_construction(WitnessId::ThreeCycle, GroupSpec::b(6), &sv("100100")).unwrap();
        assert_eq!(&w.b.to_vec()[..3], &[0, 0, 0]);
        assert_eq!(w.b.parity_on(4..=6), 0);
    }

    #[test]
    fn three_cycle_rejects_uncovered_patterns() {
        let err = witness_construction(WitnessId::ThreeCycle, GroupSpec::b(6), &sv("000010")).unwrap_err();
        assert!(matches!(err, Error::NoCaseRow(_)));
    }

    #[test]
    fn triple_transposition_permutations() {
        let (s, t) = WitnessId::TripleTransposition.permutations(6).unwrap();
        assert_eq!(s.to_string(), "(1 2)(3 4)(5 6)");
        assert_eq!(t.to_string(), "(1 3)(2 4)(5 6)");
        assert!(WitnessId::TripleTransposition.permutations(7).is_err());
        assert!(WitnessId::ThreeCycle.permutations(5).is_err());
    }

    #[test]
    fn d_family_b_stays_in_kn() {
        let spec = GroupSpec::d(5);
        for a in SignVector::all(5).filter(|a| a.parity() == 0) {
            let w = witness_construction(WitnessId::DoubleTranspositionDegree5, spec, &a).unwrap();
            assert_eq!(w.b.parity(), 0);
        }
        assert!(witness_construction(WitnessId::DoubleTranspositionDegree5, spec, &sv("10000")).is_err());
    }

    #[test]
    fn audit_reports_fixed_point_parity_mismatch() {
        let ctx = AuditContext::default();
        let w = witness_construction(WitnessId::DoubleTranspositionDegree5, GroupSpec::b(5), &sv("00001")).unwrap();
        let row = audit_witness(&w, &ctx).unwrap();
        // fixed point 5 carries sign 1 in aσ and 0 in bτ
        assert!(!row.signed_cycle_types_agree);
        assert!(!row.conjugate);
        assert!(row.total_parity_test_predicts_conjugate);
        assert!(row.class_verdict.type_d);
        assert_eq!(row.class_verdict.certificate_validated, Some(true));
    }

    #[test]
    fn readings_are_subsets_of_the_class() {
        let w = witness_construction(WitnessId::DoubleTranspositionDegree6, GroupSpec::d(6), &sv("000000")).unwrap();
        for r in &w.readings {
            assert!(r.r_set.iter().chain(&r.s_set).all(|g| w.class.contains(g)));
        }
        let exact = &w.readings[0];
        assert!(exact.r_set.iter().all(|g| g.perm() == &w.sigma));
        assert!(exact.r_set.contains(&w.a_sigma));
    }
}
