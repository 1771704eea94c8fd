//! Rank-one Yetter-Drinfeld data `M(O_s, χ)` and the ±1 cocycles they induce.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::{check_braid_equation, BraidedSpace, Cocycle};
use crate::error::{Error, Result};
use crate::rack::{generated_subgroup, ConjugationRack};
use crate::weyl::{GroupSpec, Permutation, SignedElement};

/// Largest degree for which centralizers are found by filtering the group.
const MAX_CENTRALIZER_DEGREE: usize = 6;
/// Above this centralizer size the homomorphism check runs on generator
/// edges instead of all products.
const FULL_PRODUCT_CHECK: usize = 2000;

/// The group hosting the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Ambient {
    Weyl(GroupSpec),
    /// `Sₙ` embedded as the signed permutations with zero signs.
    Symmetric(usize),
}

impl Ambient {
    pub fn degree(&self) -> usize {
        match self {
            Ambient::Weyl(spec) => spec.degree,
            Ambient::Symmetric(n) => *n,
        }
    }

    pub fn contains(&self, g: &SignedElement) -> Result<bool> {
        match self {
            Ambient::Weyl(spec) => spec.member(g),
            Ambient::Symmetric(n) => Ok(g.degree() == *n && g.sign().is_zero()),
        }
    }

    pub fn generators(&self) -> Vec<SignedElement> {
        match self {
            Ambient::Weyl(spec) => spec.generators(),
            Ambient::Symmetric(n) => (1..*n)
                .map(|i| SignedElement::from_perm(Permutation::from_cycles(*n, &[vec![i, i + 1]]).unwrap()))
                .collect(),
        }
    }

    fn elements(&self) -> Result<Vec<SignedElement>> {
        let n = self.degree();
        if n > MAX_CENTRALIZER_DEGREE {
            return Err(Error::BudgetExceeded(format!(
                "centralizers are computed up to degree {MAX_CENTRALIZER_DEGREE}, got {n}"
            )));
        }
        Ok(match self {
            Ambient::Weyl(spec) => spec.elements().collect(),
            Ambient::Symmetric(n) => Permutation::all(*n).into_iter().map(SignedElement::from_perm).collect(),
        })
    }

    pub fn order(&self) -> u128 {
        match self {
            Ambient::Weyl(spec) => spec.order().expect("small degree"),
            Ambient::Symmetric(n) => (1..=*n as u128).product(),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Weyl(spec) => write!(f, "{spec}"),
            Ambient::Symmetric(n) => write!(f, "S{n}"),
        }
    }
}

/// `{g : gs = sg}`, in the ambient's enumeration order.
pub fn centralizer(ambient: Ambient, s: &SignedElement) -> Result<Vec<SignedElement>> {
    if !ambient.contains(s)? {
        return Err(Error::Invalid(format!("{s} is not in {ambient}")));
    }
    Ok(ambient.elements()?.into_iter().filter(|g| g.commutes_with(s)).collect())
}

/// Greedy generating set: each element not yet generated is added.
fn greedy_generators(group: &[SignedElement]) -> Vec<SignedElement> {
    let mut gens: Vec<SignedElement> = Vec::new();
    let mut covered: HashSet<SignedElement> = HashSet::from([SignedElement::identity(group[0].degree())]);
    for g in group {
        if !covered.contains(g) {
            gens.push(g.clone());
            covered = generated_subgroup(&gens, usize::MAX).unwrap().into_iter().collect();
        }
    }
    gens
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedCharacter {
    Trivial,
    /// Sign of the permutation part.
    PermSign,
    /// `(-1)^{Σ aᵢ}`.
    SignParity,
    /// `PermSign · SignParity`.
    Product,
}

impl NamedCharacter {
    pub const ALL: [NamedCharacter; 4] = [
        NamedCharacter::Trivial,
        NamedCharacter::PermSign,
        NamedCharacter::SignParity,
        NamedCharacter::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedCharacter::Trivial => "trivial",
            NamedCharacter::PermSign => "perm-sign",
            NamedCharacter::SignParity => "sign-parity",
            NamedCharacter::Product => "product",
        }
    }

    pub fn eval(self, g: &SignedElement) -> i8 {
        let perm = || {
            let swaps = g.degree() - g.perm().cycles().len();
            if swaps % 2 == 0 { 1 } else { -1 }
        };
        let parity = || if g.sign().parity() == 0 { 1 } else { -1 };
        match self {
            NamedCharacter::Trivial => 1,
            NamedCharacter::PermSign => perm(),
            NamedCharacter::SignParity => parity(),
            NamedCharacter::Product => perm() * parity(),
        }
    }
}

impl std::str::FromStr for NamedCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedCharacter::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown character {s:?}")))
    }
}

/// A map `χ : Gˢ → {±1}` given by its value table.
#[derive(Clone, Debug)]
pub struct Character {
    pub name: String,
    values: HashMap<SignedElement, i8>,
}

impl Character {
    pub fn from_table(name: impl Into<String>, values: HashMap<SignedElement, i8>) -> Result<Self> {
        if let Some((g, v)) = values.iter().find(|(_, &v)| v != 1 && v != -1) {
            return Err(Error::Invalid(format!("χ({g}) = {v} is not ±1")));
        }
        Ok(Character {
            name: name.into(),
            values,
        })
    }

    pub fn named(kind: NamedCharacter, group: &[SignedElement]) -> Self {
        Character {
            name: kind.name().to_string(),
            values: group.iter().map(|g| (g.clone(), kind.eval(g))).collect(),
        }
    }

    pub fn value(&self, g: &SignedElement) -> Option<i8> {
        self.values.get(g).copied()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.values().all(|&v| v == 1)
    }

    /// `χ(gh) = χ(g)χ(h)` over `group`: on every product when the group is
    /// small, otherwise for `h` ranging over a generating set (which, with
    /// the table covering `group`, forces multiplicativity).
    pub fn check_homomorphism(&self, group: &[SignedElement]) -> Result<()> {
        let lookup = |g: &SignedElement| {
            self.value(g)
                .ok_or_else(|| Error::Invalid(format!("character {} undefined at {g}", self.name)))
        };
        let right: Vec<SignedElement> = if group.len() <= FULL_PRODUCT_CHECK {
            group.to_vec()
        } else {
            greedy_generators(group)
        };
        for g in group {
            let vg = lookup(g)?;
            for h in &right {
                if lookup(&(g * h))? != vg * lookup(h)? {
                    return Err(Error::Invalid(format!("character {} is not multiplicative at ({g}, {h})", self.name)));
                }
            }
        }
        Ok(())
    }
}

/// Every homomorphism `group → {±1}`, trivial first.
pub fn characters(group: &[SignedElement]) -> Vec<Character> {
    if group.is_empty() {
        return Vec::new();
    }
    let gens = greedy_generators(group);
    let id = SignedElement::identity(group[0].degree());
    let mut out = Vec::new();
    'assignment: for bits in 0u32..(1 << gens.len()) {
        let gen_values: Vec<i8> = (0..gens.len()).map(|k| if bits >> k & 1 == 1 { -1 } else { 1 }).collect();
        let mut values = HashMap::from([(id.clone(), 1i8)]);
        let mut queue = VecDeque::from([id.clone()]);
        while let Some(x) = queue.pop_front() {
            let vx = values[&x];
            for (g, &vg) in gens.iter().zip(&gen_values) {
                let y = &x * g;
                match values.get(&y) {
                    Some(&vy) if vy != vx * vg => continue 'assignment,
                    Some(_) => {}
                    None => {
                        values.insert(y.clone(), vx * vg);
                        queue.push_back(y);
                    }
                }
            }
        }
        let label = gens
            .iter()
            .zip(&gen_values)
            .map(|(g, v)| format!("{g}->{v}"))
            .collect::<Vec<_>>()
            .join(",");
        out.push(Character {
            name: format!("chi[{label}]"),
            values,
        });
    }
    out
}

/// Numerated class `t₁ = s, t₂, …` with section `gᵢ ▷ s = tᵢ`, centralizer
/// `Gˢ` and a character of `Gˢ`.
#[derive(Clone, Debug)]
pub struct YdData {
    pub ambient: Ambient,
    pub s: SignedElement,
    pub class: Vec<SignedElement>,
    pub section: Vec<SignedElement>,
    pub centralizer: Vec<SignedElement>,
    pub character: Character,
}

impl YdData {
    pub fn new(ambient: Ambient, s: SignedElement, character: Character) -> Result<Self> {
        let centralizer = centralizer(ambient, &s)?;
        character.check_homomorphism(&centralizer)?;
        let (class, section) = orbit_with_section(&ambient.generators(), &s);
        if centralizer.len() as u128 * class.len() as u128 != ambient.order() {
            return Err(Error::InvariantViolated(format!(
                "|Gˢ| · |O| = {} · {} differs from |G| = {}",
                centralizer.len(),
                class.len(),
                ambient.order()
            )));
        }
        Ok(YdData {
            ambient,
            s,
            class,
            section,
            centralizer,
            character,
        })
    }

    pub fn named(ambient: Ambient, s: SignedElement, kind: NamedCharacter) -> Result<Self> {
        let c = centralizer(ambient, &s)?;
        Self::new(ambient, s, Character::named(kind, &c))
    }

    pub fn rack(&self) -> ConjugationRack {
        ConjugationRack::new(self.class.clone()).expect("conjugacy classes are racks")
    }
}

/// Breadth-first conjugation orbit with conjugators, as in class enumeration.
fn orbit_with_section(gens: &[SignedElement], s: &SignedElement) -> (Vec<SignedElement>, Vec<SignedElement>) {
    let mut class = vec![s.clone()];
    let mut section = vec![SignedElement::identity(s.degree())];
    let mut index = HashSet::from([s.clone()]);
    let mut head = 0;
    while head < class.len() {
        for h in gens {
            let t = h.conjugate_unchecked(&class[head]);
            if index.insert(t.clone()) {
                section.push(h * &section[head]);
                class.push(t);
            }
        }
        head += 1;
    }
    (class, section)
}

/// `q(i, j) = χ(ν_j(tᵢ))` with `tᵢ g_j = g_{j'} ν_j(tᵢ)` and `tᵢ ▷ t_j = t_{j'}`.
/// The braid equation is checked before returning.
pub fn yd_cocycle(data: &YdData) -> Result<Cocycle> {
    let rack = data.rack();
    let m = rack.size();
    let mut values = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let jp = rack.rack().op(i, j);
            let nu = &(&data.section[jp].inverse() * &data.class[i]) * &data.section[j];
            if !nu.commutes_with(&data.s) {
                return Err(Error::InvariantViolated(format!("ν = {nu} is not in the centralizer of {}", data.s)));
            }
            values.push(
                data.character
                    .value(&nu)
                    .ok_or_else(|| Error::InvariantViolated(format!("character undefined at {nu}")))?,
            );
        }
    }
    let cocycle = Cocycle::from_values(m, values)?;
    let space = BraidedSpace::new(rack.rack().clone(), cocycle.clone())?;
    if !check_braid_equation(&space) {
        return Err(Error::InvariantViolated(format!("cocycle of {} fails the braid equation", data.s)));
    }
    Ok(cocycle)
}
