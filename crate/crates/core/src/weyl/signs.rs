use std::fmt;
use std::ops::Add;

use super::{Permutation, MAX_DEGREE};
use crate::error::{Error, Result};

/// A vector in `Z₂ⁿ`, packed into one word. Bit `i - 1` holds `aᵢ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    bits: u64,
    degree: u8,
}

impl SignVector {
    pub fn zero(degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree));
        SignVector {
            bits: 0,
            degree: degree as u8,
        }
    }

    /// Builds from a packed word; bits at positions `>= degree` must be clear.
    pub fn from_bits(degree: usize, bits: u64) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        if degree < 64 && bits >> degree != 0 {
            return Err(Error::MalformedBits(format!(
                "bits {bits:#x} exceed degree {degree}"
            )));
        }
        Ok(SignVector {
            bits,
            degree: degree as u8,
        })
    }

    pub fn from_slice(values: &[u8]) -> Result<Self> {
        let mut bits = 0u64;
        for (i, &v) in values.iter().enumerate() {
            match v {
                0 => {}
                1 => bits |= 1 << i,
                _ => return Err(Error::MalformedBits(format!("entry {v} not in {{0,1}}"))),
            }
        }
        SignVector::from_bits(values.len(), bits)
    }

    /// The unit vector `eᵢ` (1-indexed).
    pub fn unit(degree: usize, i: usize) -> Self {
        assert!((1..=degree).contains(&i));
        SignVector::from_bits(degree, 1 << (i - 1)).unwrap()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `aᵢ` for 1-indexed `i`.
    pub fn get(&self, i: usize) -> u8 {
        ((self.bits >> (i - 1)) & 1) as u8
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (1..=self.degree()).map(|i| self.get(i)).collect()
    }

    pub fn parity(&self) -> u8 {
        (self.bits.count_ones() & 1) as u8
    }

    /// Parity of the entries at the given 1-indexed positions.
    pub fn parity_on(&self, positions: impl IntoIterator<Item = usize>) -> u8 {
        positions.into_iter().fold(0, |acc, i| acc ^ self.get(i))
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Every vector of the given degree, in increasing packed order.
    pub fn all(degree: usize) -> impl Iterator<Item = SignVector> {
        assert!(degree <= 20, "enumerating 2^{degree} sign vectors");
        (0u64..1 << degree).map(move |bits| SignVector {
            bits,
            degree: degree as u8,
        })
    }

    pub fn checked_add(&self, other: &SignVector) -> Result<SignVector> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(*self + *other)
    }
}

/// The left action `σ(a) = (a_{σ⁻¹(1)}, ..., a_{σ⁻¹(n)})`.
pub fn act(sigma: &Permutation, a: &SignVector) -> Result<SignVector> {
    if sigma.degree() != a.degree() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: a.degree(),
        });
    }
    Ok(act_unchecked(sigma, a))
}

#[inline]
pub(crate) fn act_unchecked(sigma: &Permutation, a: &SignVector) -> SignVector {
    // component σ(i) of the result is aᵢ
    let mut out = 0u64;
    let mut rest = a.bits;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << sigma.raw()[i];
    }
    SignVector {
        bits: out,
        degree: a.degree,
    }
}

impl Add for SignVector {
    type Output = SignVector;

    /// Componentwise sum mod 2; also serves as subtraction.
    fn add(self, rhs: SignVector) -> SignVector {
        assert_eq!(self.degree, rhs.degree, "sign vector degree mismatch");
        SignVector {
            bits: self.bits ^ rhs.bits,
            degree: self.degree,
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.degree() {
            f.write_str(if self.get(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
