//! Exhaustive type D sweep over the classes of `W(Bₙ)` / `W(Dₙ)`, compared
//! against the list of exceptional cycle shapes.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::conjugacy::{enumerate_class, representatives, ClassLabel};
use crate::error::{Error, Result};
use crate::rack::{conjugate_within_generated, sq, type_d_certificate, ScanLog, SearchOptions, TypeDCertificate};
use crate::weyl::{Family, GroupSpec, SignedElement};

/// Which exceptional shape, if any, a non-identity element falls under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExceptionKind {
    #[serde(rename = "none")]
    None,
    /// `σ` of type `(2, 3)`.
    T23,
    /// `σ` of type `(1², 3)`.
    T1_2_3,
    /// `σ` of type `(1ⁿ⁻², 2)`, `n > 5`, all fixed points carrying equal signs.
    T1n2_2,
}

impl ExceptionKind {
    pub fn is_exception(self) -> bool {
        self != ExceptionKind::None
    }
}

pub fn exception_predicate(g: &SignedElement) -> Result<ExceptionKind> {
    if g.perm().is_identity() {
        return Err(Error::Precondition("identity permutation part".into()));
    }
    let n = g.degree();
    let lengths = g.perm().cycle_type();
    if lengths == [2, 3] {
        return Ok(ExceptionKind::T23);
    }
    if lengths == [1, 1, 3] {
        return Ok(ExceptionKind::T1_2_3);
    }
    let transposition = lengths.len() == n - 1 && lengths[n - 2] == 2;
    if n > 5 && transposition {
        let mut fixed = (1..=n).filter(|&i| g.perm().image(i) == i).map(|i| g.sign().get(i));
        let first = fixed.next().expect("n > 5 leaves fixed points");
        if fixed.all(|v| v == first) {
            return Ok(ExceptionKind::T1n2_2);
        }
    }
    Ok(ExceptionKind::None)
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub search: SearchOptions,
    /// Cycle types of `σ` to visit (ascending lengths, fixed points included).
    /// `None` visits every class.
    pub restrict_to: Option<Vec<Vec<usize>>>,
    /// Record wall-clock time per class. Makes reports non-reproducible.
    pub timings: bool,
}

impl SweepOptions {
    /// Exhaustive at degrees 5 and 6; at 7 and 8 only `(1ⁿ⁻³, 3)` and `(2⁴)`.
    pub fn for_degree(n: usize) -> Result<Self> {
        let restrict_to = match n {
            5 | 6 => None,
            7 => Some(vec![vec![1, 1, 1, 1, 3]]),
            8 => Some(vec![vec![1, 1, 1, 1, 1, 3], vec![2, 2, 2, 2]]),
            _ => return Err(Error::Precondition(format!("sweep degree {n} outside 5..=8"))),
        };
        Ok(SweepOptions {
            search: SearchOptions::default(),
            restrict_to,
            timings: false,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepOutcome {
    Certificate,
    Exhausted,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub label: ClassLabel,
    pub representative: SignedElement,
    pub sigma_type: Vec<usize>,
    pub class_size: usize,
    pub outcome: SweepOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<TypeDCertificate>,
    /// The certificate's decomposition was rebuilt and validated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate_validated: Option<bool>,
    pub scan: ScanLog,
    pub complete: bool,
    pub exception: ExceptionKind,
    /// Exhausted classes must fall under an exceptional shape.
    pub consistent_with_list: bool,
    pub interpretation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub family: Family,
    pub degree: usize,
    pub scope: String,
    pub restricted_to: Option<Vec<Vec<usize>>>,
    pub subgroup_cap: usize,
    pub rows: Vec<SweepRow>,
    /// Labels of classes with no certificate.
    pub exception_list: Vec<ClassLabel>,
    /// Labels of classes that fall under an exceptional shape.
    pub predicted_exceptions: Vec<ClassLabel>,
    /// Exhausted classes outside every exceptional shape.
    pub disagreements: Vec<ClassLabel>,
    pub invalid_certificates: usize,
    pub complete: bool,
}

const TYPE_D: &str = "type D: dim B(O, rho) is infinite for every rho";
const NOT_TYPE_D: &str = "no (r, s) pair: not of type D; Nichols dimension not decided here";

pub fn class_sweep(spec: GroupSpec, opts: &SweepOptions) -> Result<SweepReport> {
    if !(5..=8).contains(&spec.degree) {
        return Err(Error::Precondition(format!("sweep degree {} outside 5..=8", spec.degree)));
    }
    let reps: Vec<(ClassLabel, SignedElement)> = representatives(spec)
        .into_iter()
        .filter(|(_, g)| !g.perm().is_identity())
        .filter(|(_, g)| {
            opts.restrict_to
                .as_ref()
                .map_or(true, |types| types.contains(&g.perm().cycle_type()))
        })
        .collect();
    let rows: Vec<Result<SweepRow>> = reps
        .par_iter()
        .map(|(label, rep)| sweep_class(spec, label, rep, opts))
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;

    let scope = match &opts.restrict_to {
        None => format!("exhaustive: every class of {spec} with non-identity permutation part"),
        Some(types) => format!("restricted to permutation cycle types {types:?} of {spec}"),
    };
    let pick = |f: &dyn Fn(&SweepRow) -> bool| rows.iter().filter(|r| f(r)).map(|r| r.label.clone()).collect::<Vec<_>>();
    Ok(SweepReport {
        family: spec.family,
        degree: spec.degree,
        scope,
        restricted_to: opts.restrict_to.clone(),
        subgroup_cap: opts.search.subgroup_cap,
        exception_list: pick(&|r| r.outcome == SweepOutcome::Exhausted),
        predicted_exceptions: pick(&|r| r.exception.is_exception()),
        disagreements: pick(&|r| !r.consistent_with_list),
        invalid_certificates: rows.iter().filter(|r| r.certificate_validated == Some(false)).count(),
        complete: rows.iter().all(|r| r.complete),
        rows,
    })
}

fn sweep_class(spec: GroupSpec, label: &ClassLabel, rep: &SignedElement, opts: &SweepOptions) -> Result<SweepRow> {
    let start = Instant::now();
    let class = enumerate_class(spec, rep)?;
    let search = type_d_certificate(&class, opts.search);
    let exception = exception_predicate(rep)?;
    let certificate = search.certificate().cloned();
    let certificate_validated = certificate
        .as_ref()
        .map(TypeDCertificate::is_valid);
    let outcome = if certificate.is_some() {
        SweepOutcome::Certificate
    } else {
        SweepOutcome::Exhausted
    };
    Ok(SweepRow {
        label: label.clone(),
        representative: rep.clone(),
        sigma_type: rep.perm().cycle_type(),
        class_size: class.size(),
        outcome,
        certificate,
        certificate_validated,
        scan: search.log,
        complete: search.complete,
        exception,
        consistent_with_list: outcome == SweepOutcome::Certificate || exception.is_exception(),
        interpretation: if outcome == SweepOutcome::Certificate { TYPE_D } else { NOT_TYPE_D },
        runtime_ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Re-derives an `exhausted` verdict: every `s` in the class either has
/// `sq(r, s) = s` or is conjugate to `r` in `⟨r, s⟩`.
pub fn recheck_exhausted(spec: GroupSpec, representative: &SignedElement) -> Result<bool> {
    let class = enumerate_class(spec, representative)?;
    let r = class.representative();
    Ok(class
        .elements()
        .iter()
        .all(|s| sq(r, s) == *s || conjugate_within_generated(r, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> SignedElement {
        s.parse().unwrap()
    }

    #[test]
    fn predicate_examples() {
        assert_eq!(exception_predicate(&el("10101:(1 2)(3 4 5)")).unwrap(), ExceptionKind::T23);
        assert_eq!(exception_predicate(&el("00000:(3 4 5)")).unwrap(), ExceptionKind::T1_2_3);
        assert_eq!(exception_predicate(&el("001111:(1 2)")).unwrap(), ExceptionKind::T1n2_2);
        assert_eq!(exception_predicate(&el("001000:(1 2)")).unwrap(), ExceptionKind::None);
        // the transposition shape only counts above degree 5
        assert_eq!(exception_predicate(&el("00000:(1 2)")).unwrap(), ExceptionKind::None);
        assert!(exception_predicate(&el("10000:()")).is_err());
    }

    #[test]
    fn sweep_degree_bounds() {
        assert!(SweepOptions::for_degree(4).is_err());
        assert!(class_sweep(GroupSpec::b(4), &SweepOptions::for_degree(5).unwrap()).is_err());
    }

    #[test]
    fn restricted_sweep_visits_only_named_types() {
        let opts = SweepOptions::for_degree(7).unwrap();
        let report = class_sweep(GroupSpec::d(7), &opts).unwrap();
        assert!(!report.rows.is_empty());
        assert!(report.rows.iter().all(|r| r.sigma_type == [1, 1, 1, 1, 3]));
    }
}
