//! Braided vector spaces `(ℂX, c_q)` over finite racks with ±1 cocycles,
//! rank-one Yetter-Drinfeld data and graded Nichols algebra dimensions.

mod linalg;
mod symmetrizer;
mod yd;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rack::FiniteRack;

pub use linalg::{rank, IntMatrix};
pub use symmetrizer::{graded_dims, hurwitz_orbits, symmetrizer, Budget, DegreeRow, GradedReport};
pub use yd::{centralizer, characters, yd_cocycle, Ambient, Character, NamedCharacter, YdData};

/// Values `q(x, y) ∈ {+1, -1}` on `X × X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    size: usize,
    values: Vec<i8>,
}

impl Cocycle {
    pub fn constant(size: usize, value: i8) -> Result<Self> {
        Self::from_values(size, vec![value; size * size])
    }

    /// `values[x * size + y] = q(x, y)`.
    pub fn from_values(size: usize, values: Vec<i8>) -> Result<Self> {
        if values.len() != size * size {
            return Err(Error::Invalid(format!("{} cocycle values for {size} points", values.len())));
        }
        if let Some(v) = values.iter().find(|&&v| v != 1 && v != -1) {
            return Err(Error::Invalid(format!("cocycle value {v} is not ±1")));
        }
        Ok(Cocycle { size, values })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i8 {
        self.values[x * self.size + y]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn is_constant(&self) -> Option<i8> {
        let first = self.values[0];
        self.values.iter().all(|&v| v == first).then_some(first)
    }

    /// The same cocycle with `q(x, y)` negated.
    pub fn flipped(&self, x: usize, y: usize) -> Self {
        let mut out = self.clone();
        out.values[x * self.size + y] *= -1;
        out
    }

    /// The cocycle after rescaling basis vectors `x ↦ λ_x x`:
    /// `q'(x, y) = q(x, y) λ_y / λ_{x ▷ y}`. Braided spaces related this way
    /// are isomorphic.
    pub fn gauged(&self, rack: &FiniteRack, lambda: &[i8]) -> Result<Self> {
        if rack.size() != self.size || lambda.len() != self.size {
            return Err(Error::Invalid("gauge of the wrong size".into()));
        }
        let n = self.size;
        let values = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                self.get(x, y) * lambda[y] * lambda[rack.op(x, y)]
            })
            .collect();
        Cocycle::from_values(n, values)
    }

    /// Rows of the table, for reports.
    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.values.chunks(self.size).map(<[i8]>::to_vec).collect()
    }
}

/// `ℂX` with braiding `c(x ⊗ y) = q(x, y) (x ▷ y) ⊗ x`.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    rack: FiniteRack,
    cocycle: Cocycle,
    inverse: Vec<u32>,
}

impl BraidedSpace {
    pub fn new(rack: FiniteRack, cocycle: Cocycle) -> Result<Self> {
        if rack.size() != cocycle.size() {
            return Err(Error::DegreeMismatch {
                left: rack.size(),
                right: cocycle.size(),
            });
        }
        if let Some(x) = rack.check_axioms().bijectivity_violation {
            return Err(Error::Invalid(format!("left translation by {x} is not bijective")));
        }
        let inverse = rack.inverse_table();
        Ok(BraidedSpace { rack, cocycle, inverse })
    }

    pub fn dimension(&self) -> usize {
        self.rack.size()
    }

    pub fn rack(&self) -> &FiniteRack {
        &self.rack
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    /// `c(x ⊗ y) = sign · u ⊗ v`.
    #[inline]
    pub fn apply_c(&self, x: usize, y: usize) -> (i8, usize, usize) {
        (self.cocycle.get(x, y), self.rack.op(x, y), x)
    }

    /// `c⁻¹(u ⊗ v) = q(v, y) · v ⊗ y` where `v ▷ y = u`.
    #[inline]
    pub fn apply_c_inv(&self, u: usize, v: usize) -> (i8, usize, usize) {
        let y = self.inverse[v * self.dimension() + u] as usize;
        (self.cocycle.get(v, y), v, y)
    }

    /// The same braided space transported along a bijection of points.
    pub fn relabeled(&self, relabel: &[usize]) -> Result<Self> {
        let n = self.dimension();
        let rack = self.rack.relabeled(relabel)?;
        let mut values = vec![0i8; n * n];
        for x in 0..n {
            for y in 0..n {
                values[relabel[x] * n + relabel[y]] = self.cocycle.get(x, y);
            }
        }
        BraidedSpace::new(rack, Cocycle::from_values(n, values)?)
    }
}

/// The braiding on `V ⊗ V` in the basis `x ⊗ y ↦ x * |X| + y`.
pub fn braiding_matrix(space: &BraidedSpace) -> IntMatrix {
    let n = space.dimension();
    let mut m = IntMatrix::zeros(n * n, n * n);
    for x in 0..n {
        for y in 0..n {
            let (s, u, v) = space.apply_c(x, y);
            m.set(u * n + v, x * n + y, s as i64);
        }
    }
    m
}

/// `(c ⊗ id)(id ⊗ c)(c ⊗ id) = (id ⊗ c)(c ⊗ id)(id ⊗ c)` on every basis
/// vector of `V^{⊗3}`.
pub fn check_braid_equation(space: &BraidedSpace) -> bool {
    first_braid_violation(space).is_none()
}

/// A basis triple on which the braid equation fails.
pub fn first_braid_violation(space: &BraidedSpace) -> Option<(usize, usize, usize)> {
    let n = space.dimension();
    let c1 = |(s, x, y, z): (i8, usize, usize, usize)| {
        let (t, u, v) = space.apply_c(x, y);
        (s * t, u, v, z)
    };
    let c2 = |(s, x, y, z): (i8, usize, usize, usize)| {
        let (t, u, v) = space.apply_c(y, z);
        (s * t, x, u, v)
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = (1, x, y, z);
                if c1(c2(c1(w))) != c2(c1(c2(w))) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjugacy::enumerate_class;
    use crate::rack::ConjugationRack;
    use crate::weyl::GroupSpec;

    pub(crate) fn transposition_rack() -> FiniteRack {
        let class = enumerate_class(GroupSpec::b(3), &"000:(1 2)".parse().unwrap()).unwrap();
        ConjugationRack::zero_sign_subrack(&class).unwrap().rack().clone()
    }

    #[test]
    fn singleton_braiding() {
        for q in [1, -1] {
            let space = BraidedSpace::new(FiniteRack::singleton(), Cocycle::constant(1, q).unwrap()).unwrap();
            let m = braiding_matrix(&space);
            assert_eq!(m.get(0, 0), q as i64);
            assert!(check_braid_equation(&space));
        }
    }

    #[test]
    fn transposition_rack_braiding_is_signed_permutation() {
        let space = BraidedSpace::new(transposition_rack(), Cocycle::constant(3, -1).unwrap()).unwrap();
        let m = braiding_matrix(&space);
        assert_eq!((m.rows(), m.cols()), (9, 9));
        assert!(m.is_signed_permutation());
        assert!(check_braid_equation(&space));
    }

    #[test]
    fn inverse_braiding_undoes_braiding() {
        let space = BraidedSpace::new(transposition_rack(), Cocycle::constant(3, -1).unwrap()).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let (s, u, v) = space.apply_c(x, y);
                let (t, a, b) = space.apply_c_inv(u, v);
                assert_eq!((s * t, a, b), (1, x, y));
            }
        }
    }

    #[test]
    fn constant_cocycles_on_small_classes_braid() {
        for spec in [GroupSpec::b(3), GroupSpec::d(4)] {
            for (_, rep) in crate::conjugacy::representatives(spec) {
                let class = enumerate_class(spec, &rep).unwrap();
                let rack = ConjugationRack::from_class(&class).rack().clone();
                for q in [1, -1] {
                    let n = rack.size();
                    let space = BraidedSpace::new(rack.clone(), Cocycle::constant(n, q).unwrap()).unwrap();
                    assert!(check_braid_equation(&space), "{rep} q={q}");
                }
            }
        }
    }

    #[test]
    fn flipped_cocycle_is_detected() {
        let rack = transposition_rack();
        let base = Cocycle::constant(3, -1).unwrap();
        let caught = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y)
            .any(|(x, y)| !check_braid_equation(&BraidedSpace::new(rack.clone(), base.flipped(x, y)).unwrap()));
        assert!(caught);
    }

    #[test]
    fn rejects_bad_cocycles() {
        assert!(Cocycle::from_values(1, vec![2]).is_err());
        assert!(Cocycle::from_values(2, vec![1]).is_err());
        assert!(BraidedSpace::new(FiniteRack::singleton(), Cocycle::constant(2, 1).unwrap()).is_err());
    }
}
