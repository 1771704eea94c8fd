//! Conjugacy classes of `W(Bₙ)` and `W(Dₙ)`.
//!
//! The breadth-first orbit under conjugation by the generators is the ground
//! truth. Signed cycle types give a fast path that is tested against it: in
//! the B family they are a complete invariant; in the D family a B-class whose
//! cycles are all even with all parities zero splits in two, and those cases
//! are decided by the orbit.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::error::Result;
use crate::weyl::{Family, GroupSpec, Permutation, SignVector, SignedCycleType, SignedElement};

/// A materialized conjugacy class.
#[derive(Clone, Debug)]
pub struct ConjClass {
    spec: GroupSpec,
    representative: SignedElement,
    /// Breadth-first discovery order, starting at the representative.
    elements: Vec<SignedElement>,
    /// `conjugators[i] ▷ representative = elements[i]`.
    conjugators: Vec<SignedElement>,
    index: HashMap<SignedElement, usize>,
}

impl ConjClass {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn representative(&self) -> &SignedElement {
        &self.representative
    }

    pub fn elements(&self) -> &[SignedElement] {
        &self.elements
    }

    pub fn conjugators(&self) -> &[SignedElement] {
        &self.conjugators
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &SignedElement) -> bool {
        self.index.contains_key(g)
    }

    pub fn position(&self, g: &SignedElement) -> Option<usize> {
        self.index.get(g).copied()
    }
}

/// Full orbit of `g` under conjugation, with a conjugator for each element.
pub fn enumerate_class(spec: GroupSpec, g: &SignedElement) -> Result<ConjClass> {
    spec.require_member(g)?;
    let gens = spec.generators();
    let mut elements = vec![g.clone()];
    let mut conjugators = vec![SignedElement::identity(spec.degree)];
    let mut index = HashMap::from([(g.clone(), 0usize)]);
    let mut head = 0;
    while head < elements.len() {
        for h in &gens {
            let t = h.conjugate_unchecked(&elements[head]);
            if !index.contains_key(&t) {
                index.insert(t.clone(), elements.len());
                let w = h * &conjugators[head];
                elements.push(t);
                conjugators.push(w);
            }
        }
        head += 1;
    }
    Ok(ConjClass {
        spec,
        representative: g.clone(),
        elements,
        conjugators,
        index,
    })
}

/// Orbit-membership oracle: is `h` in the conjugation orbit of `g`?
pub fn conjugate_by_orbit(spec: GroupSpec, g: &SignedElement, h: &SignedElement) -> Result<bool> {
    spec.require_member(g)?;
    spec.require_member(h)?;
    if g == h {
        return Ok(true);
    }
    let gens = spec.generators();
    let mut seen = HashSet::from([g.clone()]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = s.conjugate_unchecked(&x);
            if &y == h {
                return Ok(true);
            }
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(false)
}

/// Conjugacy test: signed cycle types, with the orbit oracle for D-split types.
pub fn are_conjugate(spec: GroupSpec, g: &SignedElement, h: &SignedElement) -> Result<bool> {
    spec.require_member(g)?;
    spec.require_member(h)?;
    let tg = g.sign_cycle_type();
    if tg != h.sign_cycle_type() {
        return Ok(false);
    }
    match spec.family {
        Family::D if tg.splits_in_d() => conjugate_by_orbit(spec, g, h),
        _ => Ok(true),
    }
}

/// The weaker test "same cycle lengths and same total sign parity".
pub fn same_lengths_and_total_parity(g: &SignedElement, h: &SignedElement) -> bool {
    g.degree() == h.degree()
        && g.perm().cycle_type() == h.perm().cycle_type()
        && g.sign().parity() == h.sign().parity()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitTag {
    None,
    Plus,
    Minus,
}

/// Signed cycle type plus a tag separating the two halves of a D-split class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassLabel {
    #[serde(rename = "type")]
    pub cycle_type: SignedCycleType,
    pub split: SplitTag,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.split {
            SplitTag::None => write!(f, "{}", self.cycle_type),
            SplitTag::Plus => write!(f, "{}+", self.cycle_type),
            SplitTag::Minus => write!(f, "{}-", self.cycle_type),
        }
    }
}

/// All signed cycle types of degree `n`, in increasing order.
pub fn signed_cycle_types(n: usize) -> Vec<SignedCycleType> {
    fn extend(
        remaining: usize,
        min: (usize, u8),
        current: &mut Vec<(usize, u8)>,
        out: &mut Vec<SignedCycleType>,
    ) {
        if remaining == 0 {
            out.push(SignedCycleType::new(current.clone()));
            return;
        }
        for len in min.0..=remaining {
            for parity in 0..=1u8 {
                if (len, parity) < min {
                    continue;
                }
                current.push((len, parity));
                extend(remaining - len, (len, parity), current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, (1, 0), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Canonical element of a signed cycle type: longest cycles first on
/// consecutive points, a negative cycle carrying its sign on its first point.
pub fn canonical_element(cycle_type: &SignedCycleType) -> SignedElement {
    let n = cycle_type.degree();
    let mut cycles = Vec::new();
    let mut bits = 0u64;
    let mut next = 1;
    for &(len, parity) in cycle_type.entries().iter().rev() {
        if parity == 1 {
            bits |= 1 << (next - 1);
        }
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    SignedElement::new(
        SignVector::from_bits(n, bits).unwrap(),
        Permutation::from_cycles(n, &cycles).unwrap(),
    )
    .unwrap()
}

/// One representative per conjugacy class, ordered by label.
pub fn representatives(spec: GroupSpec) -> Vec<(ClassLabel, SignedElement)> {
    let n = spec.degree;
    let flip = SignedElement::from_sign(SignVector::unit(n, 1));
    let mut out = Vec::new();
    for t in signed_cycle_types(n) {
        match spec.family {
            Family::B => out.push((
                ClassLabel {
                    cycle_type: t.clone(),
                    split: SplitTag::None,
                },
                canonical_element(&t),
            )),
            Family::D => {
                if t.total_parity() != 0 {
                    continue;
                }
                let rep = canonical_element(&t);
                if t.splits_in_d() {
                    let minus = flip.conjugate_unchecked(&rep);
                    out.push((
                        ClassLabel {
                            cycle_type: t.clone(),
                            split: SplitTag::Plus,
                        },
                        rep,
                    ));
                    out.push((
                        ClassLabel {
                            cycle_type: t,
                            split: SplitTag::Minus,
                        },
                        minus,
                    ));
                } else {
                    out.push((
                        ClassLabel {
                            cycle_type: t,
                            split: SplitTag::None,
                        },
                        rep,
                    ));
                }
            }
        }
    }
    out
}

/// Label of the class containing `g`.
pub fn label_of(spec: GroupSpec, g: &SignedElement) -> Result<ClassLabel> {
    spec.require_member(g)?;
    let t = g.sign_cycle_type();
    let split = match spec.family {
        Family::D if t.splits_in_d() => {
            if conjugate_by_orbit(spec, &canonical_element(&t), g)? {
                SplitTag::Plus
            } else {
                SplitTag::Minus
            }
        }
        _ => SplitTag::None,
    };
    Ok(ClassLabel {
        cycle_type: t,
        split,
    })
}

/// Canonical representative for a label.
pub fn representative_for(spec: GroupSpec, label: &ClassLabel) -> SignedElement {
    let rep = canonical_element(&label.cycle_type);
    match label.split {
        SplitTag::Minus => {
            SignedElement::from_sign(SignVector::unit(spec.degree, 1)).conjugate_unchecked(&rep)
        }
        _ => rep,
    }
}

/// Memo of materialized classes keyed by `(spec, label)`.
///
/// Classes are built outside the lock; concurrent misses on the same key may
/// build twice and the first insert wins. Each entry holds every element plus
/// a conjugator, so the largest class at degree 8 (order 10 321 920 group,
/// minimal centralizer 16) costs roughly 645 120 × 2 elements.
#[derive(Default)]
pub struct ClassCache {
    classes: RwLock<HashMap<(GroupSpec, ClassLabel), Arc<ConjClass>>>,
}

impl ClassCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The class with the given label, represented by its canonical element.
    pub fn get(&self, spec: GroupSpec, label: &ClassLabel) -> Arc<ConjClass> {
        let key = (spec, label.clone());
        if let Some(c) = self.classes.read().unwrap().get(&key) {
            return Arc::clone(c);
        }
        let class = Arc::new(
            enumerate_class(spec, &representative_for(spec, label))
                .expect("canonical representatives are members"),
        );
        Arc::clone(self.classes.write().unwrap().entry(key).or_insert(class))
    }

    pub fn class_of(&self, spec: GroupSpec, g: &SignedElement) -> Result<Arc<ConjClass>> {
        let label = label_of(spec, g)?;
        Ok(self.get(spec, &label))
    }

    pub fn len(&self) -> usize {
        self.classes.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Pairs of distinct classes that share cycle lengths and total sign parity,
/// i.e. where "equal lengths and equal total parity" would wrongly predict
/// conjugacy.
pub fn total_parity_counterexamples(spec: GroupSpec) -> Vec<(ClassLabel, SignedElement, ClassLabel, SignedElement)> {
    let reps = representatives(spec);
    let mut out = Vec::new();
    for (i, (la, ga)) in reps.iter().enumerate() {
        for (lb, gb) in &reps[i + 1..] {
            if same_lengths_and_total_parity(ga, gb) {
                out.push((la.clone(), ga.clone(), lb.clone(), gb.clone()));
            }
        }
    }
    out
}
