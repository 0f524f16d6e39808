//! Why the stable pipelines are stable: equal keys keep their original
//! order, demonstrated with satellite data.
//!
//! ```bash
//! cargo run -p idemperm --example stability
//! ```

use idemperm::sorting::sort_stable_keyed;
use idemperm::transforms;

fn main() {
    // rows carry a payload; sort by key, payload rides along
    let mut rows = vec![
        (3i64, 100i64),
        (1, 200),
        (3, 300),
        (2, 400),
        (1, 500),
        (3, 600),
    ];
    println!("unsorted rows: {rows:?}");
    sort_stable_keyed(&mut rows).unwrap();
    println!("sorted rows:   {rows:?}");
    assert_eq!(
        rows,
        vec![(1, 200), (1, 500), (2, 400), (3, 100), (3, 300), (3, 600)]
    );

    // the mechanism: the rank permutation sends the first occurrence of
    // each value to its own cell and later duplicates to free cells in
    // scan order, so ranks within a class ascend with original position
    let f = vec![3i64, 1, 3];
    let mut sigma = vec![0i64; 3];
    transforms::stable_rank_permutation(f.as_slice(), sigma.as_mut_slice());
    println!("\nf = {f:?}");
    println!("sigma = {sigma:?}  (iota(i) = f(sigma(i)))");

    let mut iota = f.clone();
    let mut s = sigma.clone();
    transforms::apply_forward(iota.as_mut_slice(), s.as_mut_slice());
    println!("iota = {iota:?}, sigma consumed to {s:?}");

    let mut ranks = iota.clone();
    transforms::map_to_perm(ranks.as_mut_slice());
    println!("ranks = {ranks:?}  (the two 3s keep their input order)");
}
