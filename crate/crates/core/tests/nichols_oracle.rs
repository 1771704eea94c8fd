//! The brute-force oracle against the blocked product-formula path.

#[path = "support/nichols_oracle.rs"]
mod oracle;

use oracle::{oracle_dims, oracle_matrix, rational_rank};
use weyl_racks::nichols::{graded_dims, symmetrizer, Budget, BraidedSpace, Cocycle};
use weyl_racks::rack::FiniteRack;
use weyl_racks::selftest::transposition_rack;

#[test]
fn oracle_reproduces_transposition_rack_dims() {
    let rack = transposition_rack();
    let oracle = oracle_dims(&rack, -1, 5);
    assert_eq!(oracle, vec![1, 3, 4, 3, 1, 0]);
    let space = BraidedSpace::new(rack, Cocycle::constant(3, -1).unwrap()).unwrap();
    assert_eq!(graded_dims(&space, 5, &Budget::default()).unwrap().dims(), oracle);
}

#[test]
fn oracle_matrix_equals_product_formula() {
    let rack = transposition_rack();
    let space = BraidedSpace::new(rack.clone(), Cocycle::constant(3, -1).unwrap()).unwrap();
    for m in 2..=4 {
        let oracle = oracle_matrix(&rack, &|_, _| -1, m);
        let main = symmetrizer(&space, m, &Budget::default()).unwrap();
        for (r, row) in oracle.iter().enumerate() {
            assert_eq!(row.as_slice(), main.row(r), "degree {m}, row {r}");
        }
    }
}

#[test]
fn oracle_agrees_on_singletons_and_plus_one() {
    assert_eq!(oracle_dims(&FiniteRack::singleton(), -1, 3), vec![1, 1, 0, 0]);
    assert_eq!(oracle_dims(&FiniteRack::singleton(), 1, 3), vec![1, 1, 1, 1]);
    let rack = transposition_rack();
    let space = BraidedSpace::new(rack.clone(), Cocycle::constant(3, 1).unwrap()).unwrap();
    assert_eq!(
        graded_dims(&space, 4, &Budget::default()).unwrap().dims(),
        oracle_dims(&rack, 1, 4)
    );
}

#[test]
fn degree_two_rank() {
    // S_2 = id + C⁻¹ on the 3-point rack with q = -1: three diagonal words
    // vanish, the six off-diagonal words split into two 3-cycles of rank 2
    let rack = transposition_rack();
    assert_eq!(rational_rank(&oracle_matrix(&rack, &|_, _| -1, 2)), 4);
}
