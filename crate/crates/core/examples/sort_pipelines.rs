//! The three sorting pipelines side by side.
//!
//! ```bash
//! cargo run -p idemperm --example sort_pipelines
//! ```

use idemperm::sorting::{self, Algorithm};

fn main() {
    let input = vec![2i64, 2, 7, 7, 5, 7, 7, 8, 9, 2];
    println!("input: {input:?}\n");

    // fully in-place, constant scalar space, unstable
    let mut a = input.clone();
    sorting::sort_unstable_inplace(a.as_mut_slice()).unwrap();
    println!("unstable in-place:  {a:?}");

    // stable, one auxiliary array of n words
    let mut b = input.clone();
    let mut aux = vec![0i64; b.len()];
    sorting::sort_stable_aux(b.as_mut_slice(), aux.as_mut_slice()).unwrap();
    println!("stable with aux:    {b:?}");

    // stable, and the keys themselves are only ever moved, never rewritten
    let mut c = input.clone();
    let mut aux = vec![0i64; c.len()];
    sorting::sort_stable_preserving(c.as_mut_slice(), aux.as_mut_slice()).unwrap();
    println!("stable preserving:  {c:?}");

    // the generic entry point allocates the aux buffer when needed
    let mut d = input.clone();
    sorting::sort_with(d.as_mut_slice(), Algorithm::StablePreserving).unwrap();
    assert_eq!(c, d);

    // out-of-range keys are rejected before anything is touched
    let mut bad = vec![1i64, 99, 2];
    let err = sorting::sort_unstable_inplace(bad.as_mut_slice()).unwrap_err();
    println!("\nrejection example:  {err}");
}
