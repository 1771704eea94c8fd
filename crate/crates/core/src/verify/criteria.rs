//! Closed-form tests for `sq(aσ, bτ) = bτ` when `σ` and `τ` commute.

use crate::error::{Error, Result};
use crate::weyl::{act, Permutation, SignVector, SignedElement};

/// A pair `aσ`, `bτ` whose permutation parts commute.
#[derive(Clone, Debug)]
pub struct CriterionInput {
    a_sigma: SignedElement,
    b_tau: SignedElement,
}

impl CriterionInput {
    pub fn new(a_sigma: SignedElement, b_tau: SignedElement) -> Result<Self> {
        if a_sigma.degree() != b_tau.degree() {
            return Err(Error::DegreeMismatch {
                left: a_sigma.degree(),
                right: b_tau.degree(),
            });
        }
        let (s, t) = (a_sigma.perm(), b_tau.perm());
        if s.compose(t)? != t.compose(s)? {
            return Err(Error::Precondition(format!("{s} and {t} do not commute")));
        }
        Ok(CriterionInput { a_sigma, b_tau })
    }

    pub fn a_sigma(&self) -> &SignedElement {
        &self.a_sigma
    }

    pub fn b_tau(&self) -> &SignedElement {
        &self.b_tau
    }

    /// `σ² = τ² = id`.
    pub fn is_involutive(&self) -> bool {
        self.a_sigma.perm().pow(2).is_identity() && self.b_tau.perm().pow(2).is_identity()
    }
}

fn sum(terms: &[SignVector]) -> SignVector {
    terms[1..].iter().fold(terms[0], |acc, &t| acc + t)
}

fn acted(p: &Permutation, a: &SignVector) -> SignVector {
    act(p, a).expect("degrees checked on construction")
}

/// `a + στ(a) + στ²(a) + τ(a) = b + σ(b) + σ²τ(b) + στ(b)` (mod 2), which holds
/// exactly when `sq(aσ, bτ) = bτ`.
pub fn commuting_sq_criterion(input: &CriterionInput) -> bool {
    let (a, s) = (input.a_sigma.sign(), input.a_sigma.perm());
    let (b, t) = (input.b_tau.sign(), input.b_tau.perm());
    let st = s.compose(t).unwrap();
    let stt = st.compose(t).unwrap();
    let sst = s.compose(&st).unwrap();
    let lhs = sum(&[*a, acted(&st, a), acted(&stt, a), acted(t, a)]);
    let rhs = sum(&[*b, acted(s, b), acted(&sst, b), acted(&st, b)]);
    lhs == rhs
}

/// `a + στ(a) + σ(a) + τ(a) = b + σ(b) + τ(b) + στ(b)` for commuting involutions.
pub fn involution_sq_criterion(input: &CriterionInput) -> Result<bool> {
    if !input.is_involutive() {
        return Err(Error::Precondition("σ² = τ² = id required".into()));
    }
    let (a, s) = (input.a_sigma.sign(), input.a_sigma.perm());
    let (b, t) = (input.b_tau.sign(), input.b_tau.perm());
    let st = s.compose(t).unwrap();
    let lhs = sum(&[*a, acted(&st, a), acted(s, a), acted(t, a)]);
    let rhs = sum(&[*b, acted(s, b), acted(t, b), acted(&st, b)]);
    Ok(lhs == rhs)
}

/// Components one to six of the commuting criterion for `σ = (1 2 3)`,
/// `τ = (4 5 6)`: `(0,0,0,a₄+a₆,a₄+a₅,a₅+a₆) = (b₁+b₃,b₁+b₂,b₂+b₃,0,0,0)`.
pub fn six_component_form(a: &SignVector, b: &SignVector) -> Result<bool> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    if a.degree() < 6 {
        return Err(Error::Precondition(format!("degree {} < 6", a.degree())));
    }
    let lhs = [0, 0, 0, a.get(4) ^ a.get(6), a.get(4) ^ a.get(5), a.get(5) ^ a.get(6)];
    let rhs = [b.get(1) ^ b.get(3), b.get(1) ^ b.get(2), b.get(2) ^ b.get(3), 0, 0, 0];
    Ok(lhs == rhs)
}
