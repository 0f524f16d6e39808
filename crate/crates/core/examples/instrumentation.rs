//! Measuring the linear-time claims: element-access counts across doubling
//! sizes, and wall-clock for a million keys.
//!
//! ```bash
//! cargo run --release -p idemperm --example instrumentation
//! ```

use std::time::Instant;

use idemperm::bench::{access_counts_suite, bench_sort_once, Distribution};
use idemperm::sorting::Algorithm;

fn main() {
    println!("element accesses per operation (uniform keys, seed 77):\n");
    let sizes: Vec<usize> = (10..=16).map(|k| 1usize << k).collect();
    let mut table: std::collections::BTreeMap<String, Vec<u64>> = Default::default();
    for &n in &sizes {
        for (op, accesses) in access_counts_suite(n, 77) {
            table.entry(op).or_default().push(accesses);
        }
    }
    print!("{:<18}", "op");
    for n in &sizes {
        print!("{n:>10}");
    }
    println!();
    for (op, counts) in &table {
        print!("{op:<18}");
        for c in counts {
            print!("{c:>10}");
        }
        let ratio = counts[counts.len() - 1] as f64 / counts[counts.len() - 2] as f64;
        println!("   (last doubling ratio {ratio:.2})");
    }

    println!("\ninstrumented sorts at n = 1,000,000:");
    for algo in [
        Algorithm::UnstableInPlace,
        Algorithm::StableAux,
        Algorithm::StablePreserving,
    ] {
        let start = Instant::now();
        let report = bench_sort_once(algo, 1_000_000, Distribution::Uniform, 1);
        println!(
            "  {} -> {} (harness total {:?})",
            algo.as_str(),
            report,
            start.elapsed()
        );
    }
}
