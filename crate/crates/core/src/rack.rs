//! Racks, subrack decompositions and type D certification.
//!
//! A class `O` is certified of type D by a pair `(r, s)` in `O` with
//! `sq(r, s) ≠ s` that is not conjugate inside `H = ⟨r, s⟩`. The two
//! `H`-classes of `r` and `s` then form an explicit subrack decomposition,
//! which is rebuilt and validated for every certificate.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::conjugacy::ConjClass;
use crate::error::{Error, Result};
use crate::weyl::SignedElement;

/// `x ▷ y = x y x⁻¹`.
pub fn rack_op(x: &SignedElement, y: &SignedElement) -> SignedElement {
    assert_eq!(x.degree(), y.degree(), "degree mismatch in rack operation");
    x.conjugate_unchecked(y)
}

/// `sq(x, y) = x ▷ (y ▷ (x ▷ y))`.
pub fn sq(x: &SignedElement, y: &SignedElement) -> SignedElement {
    let xy = rack_op(x, y);
    let yxy = rack_op(y, &xy);
    rack_op(x, &yxy)
}

/// A rack on `{0, ..., size-1}` given by its operation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRack {
    size: usize,
    table: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RackAxiomReport {
    pub size: usize,
    pub passed: bool,
    /// `x` with `x ▷ x ≠ x`.
    pub idempotence_violation: Option<usize>,
    /// `x` whose left translation is not a bijection.
    pub bijectivity_violation: Option<usize>,
    /// `(x, y, z)` with `x ▷ (y ▷ z) ≠ (x ▷ y) ▷ (x ▷ z)`.
    pub distributivity_violation: Option<(usize, usize, usize)>,
}

impl FiniteRack {
    /// `table[x * size + y] = x ▷ y`. Axioms are not checked here.
    pub fn from_table(size: usize, table: Vec<u32>) -> Result<Self> {
        if size == 0 || table.len() != size * size {
            return Err(Error::Invalid(format!(
                "table of length {} for {size} points",
                table.len()
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v as usize >= size) {
            return Err(Error::Invalid(format!("table entry {bad} out of range")));
        }
        Ok(FiniteRack { size, table })
    }

    /// The trivial one-point rack.
    pub fn singleton() -> Self {
        FiniteRack {
            size: 1,
            table: vec![0],
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y] as usize
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Inverse left translations: `result[x * size + z] = y` with `x ▷ y = z`.
    /// Only meaningful when every translation is bijective.
    pub fn inverse_table(&self) -> Vec<u32> {
        let n = self.size;
        let mut inv = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                inv[x * n + self.op(x, y)] = y as u32;
            }
        }
        inv
    }

    pub fn check_axioms(&self) -> RackAxiomReport {
        let n = self.size;
        let mut report = RackAxiomReport {
            size: n,
            ..Default::default()
        };
        report.idempotence_violation = (0..n).find(|&x| self.op(x, x) != x);
        report.bijectivity_violation = (0..n).find(|&x| {
            let mut hit = vec![false; n];
            (0..n).any(|y| std::mem::replace(&mut hit[self.op(x, y)], true))
        });
        'outer: for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(x, self.op(y, z)) != self.op(xy, self.op(x, z)) {
                        report.distributivity_violation = Some((x, y, z));
                        break 'outer;
                    }
                }
            }
        }
        report.passed = report.idempotence_violation.is_none()
            && report.bijectivity_violation.is_none()
            && report.distributivity_violation.is_none();
        report
    }

    /// The rack transported along `relabel`: point `i` becomes `relabel[i]`.
    pub fn relabeled(&self, relabel: &[usize]) -> Result<Self> {
        let n = self.size;
        if relabel.len() != n || relabel.iter().collect::<HashSet<_>>().len() != n || relabel.iter().any(|&p| p >= n) {
            return Err(Error::Invalid("relabeling is not a bijection".into()));
        }
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[relabel[x] * n + relabel[y]] = relabel[self.op(x, y)] as u32;
            }
        }
        Ok(FiniteRack { size: n, table })
    }
}

/// A finite set of group elements closed under conjugation, with its table.
#[derive(Clone, Debug)]
pub struct ConjugationRack {
    elements: Vec<SignedElement>,
    index: HashMap<SignedElement, usize>,
    rack: FiniteRack,
}

impl ConjugationRack {
    pub fn new(elements: Vec<SignedElement>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Invalid("empty rack".into()));
        }
        let degree = elements[0].degree();
        if let Some(bad) = elements.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        let index: HashMap<_, _> = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::Invalid("repeated rack element".into()));
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                let z = x.conjugate_unchecked(y);
                table.push(*index.get(&z).ok_or(Error::NotClosed)? as u32);
            }
        }
        Ok(ConjugationRack {
            elements,
            index,
            rack: FiniteRack { size: n, table },
        })
    }

    pub fn from_class(class: &ConjClass) -> Self {
        ConjugationRack::new(class.elements().to_vec()).expect("classes are closed under conjugation")
    }

    /// Elements of the class with zero sign vector, i.e. the `Sₙ` part.
    pub fn zero_sign_subrack(class: &ConjClass) -> Result<Self> {
        ConjugationRack::new(
            class
                .elements()
                .iter()
                .filter(|g| g.sign().is_zero())
                .cloned()
                .collect(),
        )
    }

    pub fn elements(&self) -> &[SignedElement] {
        &self.elements
    }

    pub fn rack(&self) -> &FiniteRack {
        &self.rack
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn position(&self, g: &SignedElement) -> Result<usize> {
        self.index
            .get(g)
            .copied()
            .ok_or_else(|| Error::ForeignElement(g.to_string()))
    }

    pub fn op(&self, x: &SignedElement, y: &SignedElement) -> Result<SignedElement> {
        let (i, j) = (self.position(x)?, self.position(y)?);
        Ok(self.elements[self.rack.op(i, j)].clone())
    }

    pub fn sq(&self, x: &SignedElement, y: &SignedElement) -> Result<SignedElement> {
        let (i, j) = (self.position(x)?, self.position(y)?);
        let r = &self.rack;
        Ok(self.elements[r.op(i, r.op(j, r.op(i, j)))].clone())
    }
}

/// Candidate data for a subrack decomposition `R ⊔ S` with `a ∈ R`, `b ∈ S`.
#[derive(Clone, Debug)]
pub struct DecompositionWitness {
    pub r_set: Vec<SignedElement>,
    pub s_set: Vec<SignedElement>,
    pub a: SignedElement,
    pub b: SignedElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionReport {
    pub passed: bool,
    pub a_in_r: bool,
    pub b_in_s: bool,
    pub disjoint: bool,
    pub r_subrack: bool,
    pub s_subrack: bool,
    /// `R ▷ S ⊆ S`.
    pub r_acts_on_s: bool,
    /// `S ▷ R ⊆ R`.
    pub s_acts_on_r: bool,
    pub union_subrack: bool,
    /// `sq(a, b) ≠ b`.
    pub sq_moves: bool,
    pub r_size: usize,
    pub s_size: usize,
}

fn closed_into(from: &[SignedElement], onto: &[SignedElement], target: &HashSet<&SignedElement>) -> bool {
    from.iter()
        .all(|x| onto.iter().all(|y| target.contains(&rack_op(x, y))))
}

pub fn validate_decomposition(w: &DecompositionWitness) -> DecompositionReport {
    let r: HashSet<&SignedElement> = w.r_set.iter().collect();
    let s: HashSet<&SignedElement> = w.s_set.iter().collect();
    let union: HashSet<&SignedElement> = r.union(&s).copied().collect();
    let a_in_r = r.contains(&w.a);
    let b_in_s = s.contains(&w.b);
    let disjoint = r.is_disjoint(&s) && !w.r_set.is_empty() && !w.s_set.is_empty();
    let r_subrack = closed_into(&w.r_set, &w.r_set, &r);
    let s_subrack = closed_into(&w.s_set, &w.s_set, &s);
    let r_acts_on_s = closed_into(&w.r_set, &w.s_set, &s);
    let s_acts_on_r = closed_into(&w.s_set, &w.r_set, &r);
    let all: Vec<SignedElement> = w.r_set.iter().chain(&w.s_set).cloned().collect();
    let union_subrack = closed_into(&all, &all, &union);
    let sq_moves = sq(&w.a, &w.b) != w.b;
    DecompositionReport {
        passed: a_in_r
            && b_in_s
            && disjoint
            && r_subrack
            && s_subrack
            && r_acts_on_s
            && s_acts_on_r
            && union_subrack
            && sq_moves,
        a_in_r,
        b_in_s,
        disjoint,
        r_subrack,
        s_subrack,
        r_acts_on_s,
        s_acts_on_r,
        union_subrack,
        sq_moves,
        r_size: r.len(),
        s_size: s.len(),
    }
}

/// Subgroup generated by `gens`, or `CapExceeded` once it passes `cap` elements.
pub fn generated_subgroup(gens: &[SignedElement], cap: usize) -> Result<Vec<SignedElement>> {
    let Some(first) = gens.first() else {
        return Err(Error::Invalid("no generators".into()));
    };
    let id = SignedElement::identity(first.degree());
    let mut seen = HashSet::from([id.clone()]);
    let mut order = vec![id];
    let mut head = 0;
    while head < order.len() {
        for g in gens {
            let y = &order[head] * g;
            if seen.insert(y.clone()) {
                if order.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                order.push(y);
            }
        }
        head += 1;
    }
    Ok(order)
}

/// `⟨r, s⟩`.
pub fn subgroup_closure(r: &SignedElement, s: &SignedElement, cap: usize) -> Result<Vec<SignedElement>> {
    if r.degree() != s.degree() {
        return Err(Error::DegreeMismatch {
            left: r.degree(),
            right: s.degree(),
        });
    }
    generated_subgroup(&[r.clone(), s.clone()], cap)
}

/// Orbit of `x` under conjugation by the group generated by `gens`.
pub fn conjugation_orbit_under(x: &SignedElement, gens: &[SignedElement]) -> Vec<SignedElement> {
    let mut seen = HashSet::from([x.clone()]);
    let mut orbit = vec![x.clone()];
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for g in gens {
            let z = g.conjugate_unchecked(&y);
            if seen.insert(z.clone()) {
                orbit.push(z.clone());
                queue.push_back(z);
            }
        }
    }
    orbit
}

/// Whether `s` is conjugate to `r` inside `⟨r, s⟩`.
pub fn conjugate_within_generated(r: &SignedElement, s: &SignedElement) -> bool {
    let gens = [r.clone(), s.clone()];
    let mut seen = HashSet::from([r.clone()]);
    let mut queue = VecDeque::from([r.clone()]);
    while let Some(y) = queue.pop_front() {
        for g in &gens {
            let z = g.conjugate_unchecked(&y);
            if &z == s {
                return true;
            }
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    false
}

/// The decomposition carried by a pair: the `⟨r, s⟩`-classes of `r` and `s`.
pub fn pair_witness(r: &SignedElement, s: &SignedElement) -> DecompositionWitness {
    let gens = [r.clone(), s.clone()];
    DecompositionWitness {
        r_set: conjugation_orbit_under(r, &gens),
        s_set: conjugation_orbit_under(s, &gens),
        a: r.clone(),
        b: s.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    pub sq: bool,
    pub nonconjugate: bool,
    pub decomposition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TypeDCertificate {
    pub r: SignedElement,
    pub s: SignedElement,
    pub subgroup_order: usize,
    pub checks: CertificateChecks,
}

impl TypeDCertificate {
    pub fn is_valid(&self) -> bool {
        self.checks.sq && self.checks.nonconjugate && self.checks.decomposition
    }

    pub fn witness(&self) -> DecompositionWitness {
        pair_witness(&self.r, &self.s)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub subgroup_cap: usize,
    /// Candidates evaluated per parallel batch; results merge in scan order.
    pub batch: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            subgroup_cap: 200_000,
            batch: 64,
        }
    }
}

/// How the scan over candidates `s` went.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanLog {
    pub scanned: usize,
    pub sq_fixed: usize,
    pub conjugate_in_subgroup: usize,
    pub cap_skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Certificate(TypeDCertificate),
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDSearch {
    pub outcome: SearchOutcome,
    /// False when no certificate was found and some candidate was skipped
    /// because `⟨r, s⟩` exceeded the cap.
    pub complete: bool,
    pub log: ScanLog,
}

impl TypeDSearch {
    pub fn certificate(&self) -> Option<&TypeDCertificate> {
        match &self.outcome {
            SearchOutcome::Certificate(c) => Some(c),
            SearchOutcome::Exhausted => None,
        }
    }
}

enum Verdict {
    SqFixed,
    Conjugate,
    CapSkipped,
    Found(usize),
}

fn evaluate(r: &SignedElement, s: &SignedElement, cap: usize) -> Verdict {
    if sq(r, s) == *s {
        return Verdict::SqFixed;
    }
    if conjugate_within_generated(r, s) {
        return Verdict::Conjugate;
    }
    match subgroup_closure(r, s, cap) {
        Ok(h) => Verdict::Found(h.len()),
        Err(_) => Verdict::CapSkipped,
    }
}

/// Builds the certificate for an accepted pair, validating its decomposition.
fn certify(r: &SignedElement, s: &SignedElement, subgroup_order: usize) -> TypeDCertificate {
    let report = validate_decomposition(&pair_witness(r, s));
    TypeDCertificate {
        r: r.clone(),
        s: s.clone(),
        subgroup_order,
        checks: CertificateChecks {
            sq: true,
            nonconjugate: true,
            decomposition: report.passed,
        },
    }
}

/// Candidates in text order, the deterministic scan order.
fn scan_order(elements: &[SignedElement]) -> Vec<&SignedElement> {
    let mut keyed: Vec<(String, &SignedElement)> = elements.iter().map(|g| (g.to_string(), g)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Scans `s` over the rack for a certificate with `r` fixed.
///
/// Inner automorphisms act transitively on a conjugacy class, so fixing `r`
/// loses nothing there; `Exhausted` with `complete` decides the search form
/// negatively for the whole class.
pub fn type_d_certificate_from(rack: &[SignedElement], r: &SignedElement, opts: SearchOptions) -> TypeDSearch {
    let candidates = scan_order(rack);
    let mut log = ScanLog::default();
    for batch in candidates.chunks(opts.batch.max(1)) {
        let verdicts: Vec<Verdict> = batch
            .par_iter()
            .map(|s| evaluate(r, s, opts.subgroup_cap))
            .collect();
        for (s, v) in batch.iter().zip(verdicts) {
            log.scanned += 1;
            match v {
                Verdict::SqFixed => log.sq_fixed += 1,
                Verdict::Conjugate => log.conjugate_in_subgroup += 1,
                Verdict::CapSkipped => log.cap_skipped += 1,
                Verdict::Found(order) => {
                    return TypeDSearch {
                        outcome: SearchOutcome::Certificate(certify(r, s, order)),
                        // a certificate settles the class whatever was skipped
                        complete: true,
                        log,
                    }
                }
            }
        }
    }
    TypeDSearch {
        outcome: SearchOutcome::Exhausted,
        complete: log.cap_skipped == 0,
        log,
    }
}

/// Certificate search on a class, with `r` its representative.
pub fn type_d_certificate(class: &ConjClass, opts: SearchOptions) -> TypeDSearch {
    type_d_certificate_from(class.elements(), class.representative(), opts)
}

/// Scans every `r` as well as every `s`. Quadratic; for cross-checks only.
pub fn type_d_any_pair(rack: &[SignedElement], opts: SearchOptions) -> Option<TypeDCertificate> {
    scan_order(rack).into_iter().find_map(|r| {
        type_d_certificate_from(rack, r, opts).certificate().cloned()
    })
}
