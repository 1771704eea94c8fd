use std::fmt;

use smallvec::SmallVec;

use super::MAX_DEGREE;
use crate::error::{Error, Result};

pub(crate) type Images = SmallVec<[u8; 16]>;

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Positions are 1-indexed at the API boundary; storage is 0-indexed.
/// Products read right to left: `(σ∘τ)(i) = σ(τ(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(
            (1..=MAX_DEGREE).contains(&degree),
            "degree {degree} outside 1..={MAX_DEGREE}"
        );
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from 1-indexed images `[σ(1), ..., σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut seen = 0u64;
        let mut out = Images::with_capacity(n);
        for &img in images {
            if !(1..=n).contains(&img) {
                return Err(Error::IndexOutOfRange {
                    index: img,
                    degree: n,
                });
            }
            let bit = 1u64 << (img - 1);
            if seen & bit != 0 {
                return Err(Error::InvalidPermutation {
                    degree: n,
                    detail: format!("image {img} repeated"),
                });
            }
            seen |= bit;
            out.push((img - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds a permutation of degree `degree` from disjoint 1-indexed cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        let mut images: Images = (0..degree as u8).collect();
        let mut seen = 0u64;
        for cycle in cycles {
            for &i in cycle {
                if !(1..=degree).contains(&i) {
                    return Err(Error::IndexOutOfRange { index: i, degree });
                }
                let bit = 1u64 << (i - 1);
                if seen & bit != 0 {
                    return Err(Error::RepeatedIndex(i));
                }
                seen |= bit;
            }
            for (k, &i) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                images[i - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_raw(images: Images) -> Self {
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-indexed `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-indexed one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out: Images = SmallVec::from_elem(0, self.degree());
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Permutation { images: out }
    }

    pub fn pow(&self, exp: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..exp {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// element, ordered by that element. 1-indexed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..n {
            if seen & (1 << start) != 0 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while seen & (1 << j) == 0 {
                seen |= 1 << j;
                cycle.push(j + 1);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths (fixed points included), sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycle_type()
            .into_iter()
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// All permutations of the given degree in lexicographic one-line order.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..degree as u8).collect();
        let mut out = vec![Permutation::from_raw(cur.iter().copied().collect())];
        // Narayana's next-permutation
        loop {
            let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..degree).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Permutation::from_raw(cur.iter().copied().collect()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
