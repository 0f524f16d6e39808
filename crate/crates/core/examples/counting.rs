//! Exact counts of the combinatorial families, cross-checked against
//! exhaustive enumeration for small n.
//!
//! ```bash
//! cargo run -p idemperm --example counting
//! ```

use idemperm::oracle::{
    binomial, cardinality_idempotent, cardinality_multiset, enumerate_idempotent_maps,
    enumerate_idempotent_perms,
};

fn main() {
    println!("idempotent maps / permutations, count = C(n,k) * k^(n-k):");
    for n in 1..=8usize {
        let per_k: Vec<String> = (1..=n)
            .map(|k| cardinality_idempotent(n, k).unwrap().to_string())
            .collect();
        let total: num_bigint::BigUint =
            (1..=n).map(|k| cardinality_idempotent(n, k).unwrap()).sum();
        println!("  n={n}: total={total}  per-k=[{}]", per_k.join(", "));
    }

    println!("\nn-element multisets over [1,n], count = C(n,k) * C(n-1,k-1):");
    for n in 1..=8usize {
        let total: num_bigint::BigUint =
            (1..=n).map(|k| cardinality_multiset(n, k).unwrap()).sum();
        println!(
            "  n={n}: total={total}  (equals C(2n-1, n) = {})",
            binomial(2 * n - 1, n)
        );
    }

    println!("\nenumeration cross-check:");
    for n in 1..=6usize {
        let maps = enumerate_idempotent_maps(n).unwrap().len();
        let perms = enumerate_idempotent_perms(n).unwrap().len();
        let formula: num_bigint::BigUint =
            (1..=n).map(|k| cardinality_idempotent(n, k).unwrap()).sum();
        let ok = num_bigint::BigUint::from(maps) == formula && maps == perms;
        println!(
            "  n={n}: {maps} maps, {perms} rank encodings, formula {formula} -> {}",
            if ok { "MATCH" } else { "MISMATCH" }
        );
    }

    println!("\nthe three idempotent maps on two points and their encodings:");
    for m in enumerate_idempotent_maps(2).unwrap() {
        let mut p = m.clone();
        idemperm::transforms::map_to_perm(p.as_mut_slice());
        println!("  {m:?} <-> {p:?}");
    }
}
