//! Exact computations on racks coming from conjugacy classes of the
//! hyperoctahedral Weyl groups `W(Bₙ)` and `W(Dₙ)`.
//!
//! * [`weyl`]: signed permutations and group arithmetic.
//! * [`conjugacy`]: orbit enumeration, conjugacy tests and class representatives.
//! * [`rack`]: racks, the `sq` map, subrack decompositions and type D certificates.
//! * [`verify`]: re-checks of the type D witness constructions and the exceptional list.
//! * [`nichols`]: braided vector spaces, quantum symmetrizers and graded dimensions.

pub mod conjugacy;
pub mod error;
pub mod nichols;
pub mod rack;
pub mod selftest;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use weyl::{Family, GroupSpec, Permutation, SignVector, SignedCycleType, SignedElement};
