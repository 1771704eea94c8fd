//! Exhaustive small-degree invariant suites, callable at run time.
//!
//! Each suite returns a [`SelfCheck`] rather than panicking so that the
//! command-line front end and the acceptance tests can report every result.

use std::collections::HashMap;

use serde::Serialize;

use crate::conjugacy::{are_conjugate, enumerate_class, representatives};
use crate::nichols::{
    centralizer, characters, check_braid_equation, graded_dims, yd_cocycle, Ambient, Budget, BraidedSpace, Cocycle, YdData,
};
use crate::rack::{sq, ConjugationRack, FiniteRack};
use crate::verify::{commuting_sq_criterion, involution_sq_criterion, CriterionInput};
use crate::weyl::{GroupSpec, Permutation, SignVector, SignedElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfCheck {
    pub name: String,
    pub passed: bool,
    /// Number of individual cases examined.
    pub cases: u64,
    pub detail: String,
}

impl SelfCheck {
    fn new(name: &str, cases: u64, failure: Option<String>) -> Self {
        SelfCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            cases,
            detail: failure.unwrap_or_else(|| "ok".into()),
        }
    }
}

fn small_specs(max: usize) -> Vec<GroupSpec> {
    (1..=max)
        .flat_map(|n| [GroupSpec::b(n), GroupSpec::d(n)])
        .collect()
}

fn all_elements(spec: GroupSpec) -> Vec<SignedElement> {
    spec.elements().collect()
}

/// Closed-form conjugation equals `g x g⁻¹` multiplied out, and the inverse
/// formula gives two-sided inverses, on all of `W(B₃)`.
pub fn conjugation_formula() -> SelfCheck {
    let elems = all_elements(GroupSpec::b(3));
    let mut cases = 0;
    let mut failure = None;
    for g in &elems {
        let id = SignedElement::identity(3);
        if &(g * &g.inverse()) != &id || &(&g.inverse() * g) != &id {
            failure.get_or_insert(format!("inverse of {g}"));
        }
        for x in &elems {
            cases += 1;
            if g.conjugate(x).unwrap() != g.conjugate_by_product(x).unwrap() {
                failure.get_or_insert(format!("conjugate {g} on {x}"));
            }
        }
    }
    SelfCheck::new("conjugation closed form on W(B3)", cases, failure)
}

/// The generators close up to the whole group for every degree `<= 4`.
pub fn generator_closure() -> SelfCheck {
    let mut failure = None;
    let specs = small_specs(4);
    for spec in &specs {
        let got = spec.closure_of_generators().len() as u128;
        if Some(got) != spec.order() {
            failure.get_or_insert(format!("{spec}: closure of generators has {got} elements"));
        }
    }
    SelfCheck::new("generators close to the full group", specs.len() as u64, failure)
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

/// The commuting-pair criterion agrees with `sq` on all of `S₃`, and the
/// involution form agrees with both on commuting involutions of `S₄`.
pub fn sq_criteria() -> SelfCheck {
    let mut cases = 0;
    let mut failure = None;
    for (s, t) in commuting_pairs(3, false) {
        for a in SignVector::all(3) {
            for b in SignVector::all(3) {
                let x = SignedElement::new(a, s.clone()).unwrap();
                let y = SignedElement::new(b, t.clone()).unwrap();
                let input = CriterionInput::new(x.clone(), y.clone()).unwrap();
                cases += 1;
                if commuting_sq_criterion(&input) != (sq(&x, &y) == y) {
                    failure.get_or_insert(format!("commuting criterion at ({x}, {y})"));
                }
            }
        }
    }
    for (s, t) in commuting_pairs(4, true) {
        for a in SignVector::all(4) {
            for b in SignVector::all(4) {
                let x = SignedElement::new(a, s.clone()).unwrap();
                let y = SignedElement::new(b, t.clone()).unwrap();
                let input = CriterionInput::new(x.clone(), y.clone()).unwrap();
                let inv = involution_sq_criterion(&input).unwrap();
                cases += 1;
                if inv != commuting_sq_criterion(&input) || inv != (sq(&x, &y) == y) {
                    failure.get_or_insert(format!("involution criterion at ({x}, {y})"));
                }
            }
        }
    }
    SelfCheck::new("sq criteria on S3 and involutions of S4", cases, failure)
}

/// Orbit partition of the group, computed by breadth-first search only.
fn orbit_partition(spec: GroupSpec) -> HashMap<SignedElement, usize> {
    let mut part = HashMap::new();
    let mut next = 0;
    for g in spec.elements() {
        if part.contains_key(&g) {
            continue;
        }
        for h in enumerate_class(spec, &g).unwrap().elements() {
            part.insert(h.clone(), next);
        }
        next += 1;
    }
    part
}

/// `are_conjugate` agrees with orbit membership on every pair of the group.
pub fn conjugacy_oracle(spec: GroupSpec) -> SelfCheck {
    let part = orbit_partition(spec);
    let elems = all_elements(spec);
    let mut cases = 0;
    let mut failure = None;
    for g in &elems {
        for h in &elems {
            cases += 1;
            if are_conjugate(spec, g, h).unwrap() != (part[g] == part[h]) {
                failure.get_or_insert(format!("{g} vs {h}"));
            }
        }
    }
    SelfCheck::new(&format!("conjugacy test matches orbits on {spec}"), cases, failure)
}

/// Every class of every group of degree `<= 4` satisfies the rack axioms.
pub fn rack_axioms() -> SelfCheck {
    let mut cases = 0;
    let mut failure = None;
    for spec in small_specs(4) {
        for (label, rep) in representatives(spec) {
            let class = enumerate_class(spec, &rep).unwrap();
            let report = ConjugationRack::from_class(&class).rack().check_axioms();
            cases += 1;
            if !report.passed {
                failure.get_or_insert(format!("{spec} class {label}: {report:?}"));
            }
        }
    }
    SelfCheck::new("rack axioms on classes of degree <= 4", cases, failure)
}

/// `sq(x, y) = y` exactly when `(xy)² = (yx)²`, on all of `W(B₃)`.
pub fn sq_fixed_points() -> SelfCheck {
    let elems = all_elements(GroupSpec::b(3));
    let mut cases = 0;
    let mut failure = None;
    for x in &elems {
        for y in &elems {
            cases += 1;
            let xy = x * y;
            let yx = y * x;
            if (sq(x, y) == *y) != (&xy * &xy == &yx * &yx) {
                failure.get_or_insert(format!("({x}, {y})"));
            }
        }
    }
    SelfCheck::new("sq fixed points are commuting squares on W(B3)", cases, failure)
}

/// `|Gˢ| · |O_s| = |G|` for every class of degree `<= 4`.
pub fn orbit_stabilizer() -> SelfCheck {
    let mut cases = 0;
    let mut failure = None;
    for spec in small_specs(4) {
        let order = spec.order().unwrap();
        for (label, rep) in representatives(spec) {
            let c = centralizer(Ambient::Weyl(spec), &rep).unwrap().len() as u128;
            let o = enumerate_class(spec, &rep).unwrap().size() as u128;
            cases += 1;
            if c * o != order {
                failure.get_or_insert(format!("{spec} class {label}: {c} * {o} != {order}"));
            }
        }
    }
    SelfCheck::new("orbit-stabilizer on degree <= 4", cases, failure)
}

/// Every ±1 character of every centralizer at degree `<= 4` yields a cocycle
/// satisfying the braid equation.
pub fn yd_braid_equation() -> SelfCheck {
    let mut cases = 0;
    let mut failure = None;
    for spec in small_specs(4) {
        for (label, rep) in representatives(spec) {
            let cent = centralizer(Ambient::Weyl(spec), &rep).unwrap();
            for chi in characters(&cent) {
                cases += 1;
                let name = chi.name.clone();
                let outcome = YdData::new(Ambient::Weyl(spec), rep.clone(), chi).and_then(|d| yd_cocycle(&d));
                if let Err(e) = outcome {
                    failure.get_or_insert(format!("{spec} class {label} {name}: {e}"));
                }
            }
        }
    }
    SelfCheck::new("braid equation for all YD cocycles of degree <= 4", cases, failure)
}

/// The 3-point transposition rack inside `W(B₃)`.
pub fn transposition_rack() -> FiniteRack {
    let class = enumerate_class(GroupSpec::b(3), &"000:(1 2)".parse().unwrap()).unwrap();
    ConjugationRack::zero_sign_subrack(&class).unwrap().rack().clone()
}

/// Singleton and 3-point transposition rack graded dimensions.
pub fn nichols_small() -> SelfCheck {
    let budget = Budget::default();
    let dims = |rack: FiniteRack, q: i8, max: usize| {
        let n = rack.size();
        let space = BraidedSpace::new(rack, Cocycle::constant(n, q).unwrap()).unwrap();
        assert!(check_braid_equation(&space));
        graded_dims(&space, max, &budget).unwrap().dims()
    };
    let cases = [
        (dims(FiniteRack::singleton(), -1, 2), vec![1, 1, 0]),
        (dims(FiniteRack::singleton(), 1, 3), vec![1, 1, 1, 1]),
        (dims(transposition_rack(), -1, 5), vec![1, 3, 4, 3, 1, 0]),
    ];
    let failure = cases
        .iter()
        .find(|(got, want)| got != want)
        .map(|(got, want)| format!("dims {got:?}, expected {want:?}"));
    SelfCheck::new("graded dimensions of small braided spaces", cases.len() as u64, failure)
}

pub fn run_all() -> Vec<SelfCheck> {
    vec![
        conjugation_formula(),
        generator_closure(),
        sq_criteria(),
        conjugacy_oracle(GroupSpec::b(4)),
        conjugacy_oracle(GroupSpec::d(4)),
        rack_axioms(),
        sq_fixed_points(),
        orbit_stabilizer(),
        yd_braid_equation(),
        nichols_small(),
    ]
}
