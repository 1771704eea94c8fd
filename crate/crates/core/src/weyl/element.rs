use std::fmt;
use std::ops::Mul;

use super::signs::act_unchecked;
use super::{Permutation, SignVector, SignedCycleType};
use crate::error::{Error, Result};

/// An element `(a, σ)` of `Z₂ⁿ ⋊ Sₙ`.
///
/// The product is `(a, σ)(b, τ) = (a + σ(b), στ)`, which makes
/// `(a, σ)⁻¹ = (σ⁻¹(a), σ⁻¹)` and the closed-form conjugation hold verbatim.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedElement {
    sign: SignVector,
    perm: Permutation,
}

impl SignedElement {
    pub fn new(sign: SignVector, perm: Permutation) -> Result<Self> {
        if sign.degree() != perm.degree() {
            return Err(Error::DegreeMismatch {
                left: sign.degree(),
                right: perm.degree(),
            });
        }
        Ok(SignedElement { sign, perm })
    }

    pub fn identity(degree: usize) -> Self {
        SignedElement {
            sign: SignVector::zero(degree),
            perm: Permutation::identity(degree),
        }
    }

    pub fn from_sign(sign: SignVector) -> Self {
        let perm = Permutation::identity(sign.degree());
        SignedElement { sign, perm }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        let sign = SignVector::zero(perm.degree());
        SignedElement { sign, perm }
    }

    #[inline]
    pub fn sign(&self) -> &SignVector {
        &self.sign
    }

    #[inline]
    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.sign.is_zero() && self.perm.is_identity()
    }

    pub fn compose(&self, other: &SignedElement) -> Result<SignedElement> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &SignedElement) -> SignedElement {
        SignedElement {
            sign: self.sign + act_unchecked(&self.perm, &other.sign),
            perm: self.perm.compose_unchecked(&other.perm),
        }
    }

    /// `(σ⁻¹(a), σ⁻¹)`; the minus sign vanishes mod 2.
    pub fn inverse(&self) -> SignedElement {
        let inv = self.perm.inverse();
        SignedElement {
            sign: act_unchecked(&inv, &self.sign),
            perm: inv,
        }
    }

    /// `g x g⁻¹` via the closed form
    /// `(b, τ)(a, σ)(b, τ)⁻¹ = (b + τ(a) + τστ⁻¹(b), τστ⁻¹)`.
    pub fn conjugate(&self, x: &SignedElement) -> Result<SignedElement> {
        self.check_degree(x)?;
        Ok(self.conjugate_unchecked(x))
    }

    #[inline]
    pub(crate) fn conjugate_unchecked(&self, x: &SignedElement) -> SignedElement {
        let tau = &self.perm;
        let conj_perm = tau.compose_unchecked(&x.perm).compose_unchecked(&tau.inverse());
        let sign = self.sign + act_unchecked(tau, &x.sign) + act_unchecked(&conj_perm, &self.sign);
        SignedElement {
            sign,
            perm: conj_perm,
        }
    }

    /// `g x g⁻¹` by explicit multiplication.
    pub fn conjugate_by_product(&self, x: &SignedElement) -> Result<SignedElement> {
        Ok(self.compose(x)?.compose(&self.inverse())?)
    }

    pub fn pow(&self, exp: usize) -> SignedElement {
        let mut acc = SignedElement::identity(self.degree());
        for _ in 0..exp {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    pub fn commutes_with(&self, other: &SignedElement) -> bool {
        self * other == other * self
    }

    /// One `(length, parity)` entry per cycle of the permutation part,
    /// fixed points included.
    pub fn sign_cycle_type(&self) -> SignedCycleType {
        SignedCycleType::new(
            self.perm
                .cycles()
                .into_iter()
                .map(|c| (c.len(), self.sign.parity_on(c.iter().copied())))
                .collect(),
        )
    }

    fn check_degree(&self, other: &SignedElement) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

impl Mul for &SignedElement {
    type Output = SignedElement;

    /// Panics on degree mismatch; use [`SignedElement::compose`] for a checked product.
    fn mul(self, rhs: &SignedElement) -> SignedElement {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.sign, self.perm)
    }
}

impl fmt::Debug for SignedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for SignedElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{Family, GroupSpec};

    fn el(s: &str) -> SignedElement {
        s.parse().unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let h = el("10:(1 2)");
        assert_eq!(SignedElement::identity(2).compose(&h).unwrap(), h);
        assert_eq!(h.compose(&SignedElement::identity(2)).unwrap(), h);
    }

    #[test]
    fn hand_multiplied_square() {
        let g = el("10:(1 2)");
        assert_eq!(g.compose(&g).unwrap(), el("11:()"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(el("000:()").inverse(), el("000:()"));
        assert_eq!(el("100:(1 2 3)").inverse(), el("001:(1 3 2)"));
        // σ² = id and a + σ(a) = 0
        let inv = el("11:(1 2)");
        assert_eq!(inv.inverse(), inv);
    }

    #[test]
    fn conjugation_example() {
        let g = el("000:(2 3)");
        let x = el("100:(1 2)");
        assert_eq!(g.conjugate(&x).unwrap(), el("100:(1 3)"));
        assert_eq!(g.conjugate_by_product(&x).unwrap(), el("100:(1 3)"));
    }

    #[test]
    fn group_axioms_on_b3_and_d3() {
        for family in [Family::B, Family::D] {
            let spec = GroupSpec::new(family, 3).unwrap();
            let all: Vec<_> = spec.elements().collect();
            let id = SignedElement::identity(3);
            for g in &all {
                assert_eq!(g.compose(&g.inverse()).unwrap(), id);
                assert_eq!(g.inverse().compose(g).unwrap(), id);
                assert_eq!(&id * g, *g);
            }
            for (i, a) in all.iter().enumerate().step_by(5) {
                for b in all.iter().skip(i % 7).step_by(3) {
                    for c in all.iter().step_by(11) {
                        assert_eq!(&(a * b) * c, a * &(b * c));
                    }
                }
            }
        }
    }

    #[test]
    fn sign_cycle_type_examples() {
        let t = SignedElement::identity(3).sign_cycle_type();
        assert_eq!(t.entries(), &[(1, 0), (1, 0), (1, 0)]);
        let t = el("1100:(1 2)(3 4)").sign_cycle_type();
        assert_eq!(t.entries(), &[(2, 0), (2, 0)]);
        let t = el("10101:(1 2)(3 4)").sign_cycle_type();
        assert_eq!(t.entries(), &[(1, 1), (2, 1), (2, 1)]);
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let a = el("10:(1 2)");
        let b = el("100:()");
        assert!(a.compose(&b).is_err());
        assert!(a.conjugate(&b).is_err());
    }
}
