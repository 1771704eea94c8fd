//! Signed permutations and the Weyl groups `W(Bₙ) = Z₂ⁿ ⋊ Sₙ` and
//! `W(Dₙ) = Kₙ ⋊ Sₙ`, where `Kₙ` is the even-parity sign subgroup.

mod element;
mod grammar;
mod perm;
mod signs;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use element::SignedElement;
pub use grammar::parse_element;
pub use perm::Permutation;
pub use signs::{act, SignVector};

use crate::error::{Error, Result};

/// Largest supported degree; sign vectors are packed into a `u64`.
pub const MAX_DEGREE: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::D => 'D',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Invalid(format!("unknown family {other:?}"))),
        }
    }
}

/// Family tag plus degree: `W(Bₙ)` or `W(Dₙ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: Family,
    pub degree: usize,
}

impl GroupSpec {
    pub fn new(family: Family, degree: usize) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        Ok(GroupSpec { family, degree })
    }

    pub fn b(degree: usize) -> Self {
        GroupSpec::new(Family::B, degree).unwrap()
    }

    pub fn d(degree: usize) -> Self {
        GroupSpec::new(Family::D, degree).unwrap()
    }

    /// Group order, `None` if it overflows `u128`.
    pub fn order(&self) -> Option<u128> {
        let fact = (1..=self.degree as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?;
        let signs = match self.family {
            Family::B => 1u128.checked_shl(self.degree as u32)?,
            Family::D => 1u128.checked_shl(self.degree as u32 - 1)?,
        };
        fact.checked_mul(signs)
    }

    /// Whether `g` lies in `Hₙ ⋊ Sₙ`: always for B, even sign parity for D.
    pub fn member(&self, g: &SignedElement) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(self.contains_sign(g.sign()))
    }

    pub(crate) fn contains_sign(&self, a: &SignVector) -> bool {
        match self.family {
            Family::B => true,
            Family::D => a.parity() == 0,
        }
    }

    pub(crate) fn require_member(&self, g: &SignedElement) -> Result<()> {
        if self.member(g)? {
            Ok(())
        } else {
            Err(Error::NotMember {
                element: g.to_string(),
                family: self.family.letter(),
                degree: self.degree,
            })
        }
    }

    /// Adjacent transpositions with zero signs, plus `(e₁, id)` for B or
    /// `(e₁ + e₂, id)` for D.
    pub fn generators(&self) -> Vec<SignedElement> {
        let n = self.degree;
        let mut gens: Vec<SignedElement> = (1..n)
            .map(|i| {
                SignedElement::from_perm(Permutation::from_cycles(n, &[vec![i, i + 1]]).unwrap())
            })
            .collect();
        match self.family {
            Family::B => gens.push(SignedElement::from_sign(SignVector::unit(n, 1))),
            Family::D if n >= 2 => gens.push(SignedElement::from_sign(
                SignVector::unit(n, 1) + SignVector::unit(n, 2),
            )),
            Family::D => {}
        }
        gens
    }

    /// All group elements, permutation-major. Only sensible at small degree.
    pub fn elements(&self) -> impl Iterator<Item = SignedElement> + '_ {
        assert!(self.degree <= 10, "refusing to enumerate W({}{})", self.family, self.degree);
        Permutation::all(self.degree).into_iter().flat_map(move |p| {
            SignVector::all(self.degree)
                .filter(move |a| self.contains_sign(a))
                .map(move |a| SignedElement::new(a, p.clone()).unwrap())
        })
    }

    /// Breadth-first closure of the generators under right multiplication.
    pub fn closure_of_generators(&self) -> HashSet<SignedElement> {
        let gens = self.generators();
        let id = SignedElement::identity(self.degree);
        let mut seen = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = &x * g;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({}{})", self.family, self.degree)
    }
}

/// Multiset of `(cycle length, sign parity)` pairs, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    entries: Vec<(usize, u8)>,
}

impl SignedCycleType {
    pub fn new(mut entries: Vec<(usize, u8)>) -> Self {
        entries.sort_unstable();
        SignedCycleType { entries }
    }

    pub fn entries(&self) -> &[(usize, u8)] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|e| e.0).sum()
    }

    /// Cycle lengths of the underlying permutation, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn total_parity(&self) -> u8 {
        self.entries.iter().fold(0, |acc, e| acc ^ e.1)
    }

    /// All cycles even and all parities zero: the B-class splits in D.
    pub fn splits_in_d(&self) -> bool {
        self.entries.iter().all(|&(len, p)| len % 2 == 0 && p == 0)
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (len, p)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({len},{p})")?;
        }
        f.write_str("]")
    }
}

impl Serialize for SignedCycleType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}
