//! Walks one degree-5 idempotent permutation through every
//! representation: inverse, idempotent map, associatively permuted form,
//! and sorted multiset.
//!
//! ```bash
//! cargo run -p idemperm --example transform_chain
//! ```

use idemperm::array::{decompose, KeyArray, SemanticState};
use idemperm::bits::BitScratch;
use idemperm::transforms::{self, TagMode};

fn show(label: &str, v: &[i64]) {
    println!("{label:<22} {v:?}");
}

fn main() {
    let pi = vec![3i64, -1, 6, 8, -4, 7, -5, -9, -10, 2];
    show("pi (rank permutation)", &pi);

    // class structure: tagged positions A, tagged magnitudes C, class sizes
    let d = decompose(
        &KeyArray::from_vec(pi.clone()).unwrap(),
        SemanticState::IdempotentPerm,
    )
    .unwrap();
    println!(
        "{:<22} k={} A={:?} C={:?} c'={:?}",
        "decomposition", d.k, d.fixed_indices, d.boundaries, d.cardinalities
    );

    // the sign bit carries the tags, so in-place inversion borrows n bits
    let mut inv = pi.clone();
    let mut scratch = BitScratch::new(inv.len());
    transforms::invert_inplace(inv.as_mut_slice(), TagMode::BitTag, Some(&mut scratch)).unwrap();
    show("pi^- (inverse)", &inv);

    // the idempotent map, recovered two independent ways
    let mut iota = vec![0i64; pi.len()];
    transforms::map_from_inverse(inv.as_slice(), iota.as_mut_slice());
    show("iota (from inverse)", &iota);
    let mut iota2 = pi.clone();
    transforms::perm_to_map_quadratic(iota2.as_mut_slice());
    assert_eq!(iota, iota2);
    show("iota (in place)", &iota2);

    // associative permuting inverts the tagged cells while permuting the
    // idle cells, in linear time with three scalar words
    let mut gamma = pi.clone();
    transforms::associative_permute(gamma.as_mut_slice());
    show("gamma", &gamma);

    // both gamma and the inverse fill forward to the sorted multiset
    let mut m = gamma.clone();
    transforms::fill_forward_inplace(m.as_mut_slice());
    show("m (sorted multiset)", &m);

    let mut streamed = Vec::new();
    transforms::multiset_stream(inv.as_slice(), |v| streamed.push(v));
    assert_eq!(streamed, m);

    // re-encoding the map ranks idle duplicates in position order
    let mut stable = iota;
    transforms::map_to_perm(stable.as_mut_slice());
    show("pi' (canonical ranks)", &stable);
}
