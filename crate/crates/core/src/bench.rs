//! Deterministic input distributions and the instrumented bench driver.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{measure, TransformReport};
use crate::sorting::Algorithm;
use crate::{sorting, transforms};

/// Key distributions for generated workloads; all keys stay in [1, n].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    Uniform,
    Constant,
    Sorted,
    ReverseSorted,
    FewDistinct,
}

impl FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "constant" => Ok(Distribution::Constant),
            "sorted" => Ok(Distribution::Sorted),
            "reverse-sorted" => Ok(Distribution::ReverseSorted),
            "few-distinct" => Ok(Distribution::FewDistinct),
            other => Err(format!("unknown distribution `{other}`")),
        }
    }
}

impl Distribution {
    pub fn as_str(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Constant => "constant",
            Distribution::Sorted => "sorted",
            Distribution::ReverseSorted => "reverse-sorted",
            Distribution::FewDistinct => "few-distinct",
        }
    }
}

/// Keys in [1, n] drawn per the distribution, reproducible from the seed.
pub fn generate_keys(n: usize, dist: Distribution, seed: u64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match dist {
        Distribution::Uniform => (0..n).map(|_| rng.gen_range(1..=n as i64)).collect(),
        Distribution::Constant => vec![1.max(n as i64 / 2); n],
        Distribution::Sorted => (1..=n as i64).collect(),
        Distribution::ReverseSorted => (1..=n as i64).rev().collect(),
        Distribution::FewDistinct => {
            let m = 16.min(n.max(1)) as i64;
            (0..n).map(|_| rng.gen_range(1..=m)).collect()
        }
    }
}

/// One instrumented sort over generated keys; panics if the output is not
/// the reference-sorted rearrangement.
pub fn bench_sort_once(
    algo: Algorithm,
    n: usize,
    dist: Distribution,
    seed: u64,
) -> TransformReport {
    let mut keys = generate_keys(n, dist, seed);
    let expected = crate::oracle::reference_sort(&keys);
    let report = match algo {
        Algorithm::UnstableInPlace => measure("sort-unstable", &mut keys, 0, |s| {
            sorting::sort_unstable_inplace(s).expect("keys validated by generator");
        }),
        Algorithm::StableAux => {
            let mut aux = vec![0i64; n];
            measure("sort-stable-aux", &mut keys, 0, |s| {
                sorting::sort_stable_aux(s, aux.as_mut_slice())
                    .expect("keys validated by generator");
            })
        }
        Algorithm::StablePreserving => {
            let mut aux = vec![0i64; n];
            measure("sort-stable-preserving", &mut keys, 0, |s| {
                sorting::sort_stable_preserving(s, aux.as_mut_slice())
                    .expect("keys validated by generator");
            })
        }
    };
    assert_eq!(keys, expected, "bench output failed reference check");
    report
}

/// Access counts for each O(n) operation on a seeded input of size n.
/// Deterministic, so linearity can be asserted as exact count ratios.
pub fn access_counts_suite(n: usize, seed: u64) -> Vec<(String, u64)> {
    let mut out = Vec::new();

    let keys = generate_keys(n, Distribution::Uniform, seed);

    let mut a = keys.clone();
    let r = measure("to-idempotent", &mut a, 0, |s| {
        transforms::to_idempotent_unstable(s)
    });
    out.push((r.operation.clone(), r.accesses()));
    let iota = a.clone();

    let mut sig = vec![0i64; n];
    let r = measure("stable-rank", &mut keys.clone(), 0, |s| {
        transforms::stable_rank_permutation(s, sig.as_mut_slice())
    });
    out.push((r.operation.clone(), r.accesses()));

    let mut b = keys.clone();
    let r = measure("apply-forward", &mut b, 0, |s| {
        transforms::apply_forward(s, sig.as_mut_slice())
    });
    out.push((r.operation.clone(), r.accesses()));

    let mut pi = iota.clone();
    let r = measure("to-perm", &mut pi, 0, |s| transforms::map_to_perm(s));
    out.push((r.operation.clone(), r.accesses()));

    let mut out_ranks = vec![0i64; n];
    let r = measure("to-perm-out", &mut iota.clone(), 0, |s| {
        transforms::map_to_perm_out(s, out_ranks.as_mut_slice())
    });
    out.push((r.operation.clone(), r.accesses()));

    let mut c = keys.clone();
    let mut ranks2 = out_ranks.clone();
    let r = measure("apply-inverse", &mut c, 0, |s| {
        transforms::apply_inverse(s, ranks2.as_mut_slice())
    });
    out.push((r.operation.clone(), r.accesses()));

    let mut inv = pi.clone();
    let mut scratch = crate::bits::BitScratch::new(n);
    let r = measure("invert-bit", &mut inv, n, |s| {
        transforms::invert_inplace(s, transforms::TagMode::BitTag, Some(&mut scratch)).unwrap()
    });
    out.push((r.operation.clone(), r.accesses()));

    let mut m_out = vec![0i64; n];
    let r = measure("map-from-inverse", &mut inv.clone(), 0, |s| {
        transforms::map_from_inverse(s, m_out.as_mut_slice())
    });
    out.push((r.operation.clone(), r.accesses()));

    let r = measure("multiset-stream", &mut inv.clone(), 0, |s| {
        let mut sink = 0i64;
        transforms::multiset_stream(s, |v| sink ^= v);
        std::hint::black_box(sink);
    });
    out.push((r.operation.clone(), r.accesses()));

    let mut gamma = pi.clone();
    let r = measure("assoc-permute", &mut gamma, 0, |s| {
        transforms::associative_permute(s)
    });
    out.push((r.operation.clone(), r.accesses()));

    let r = measure("fill-forward", &mut gamma, 0, |s| {
        transforms::fill_forward_inplace(s)
    });
    out.push((r.operation.clone(), r.accesses()));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributions_stay_in_range() {
        for dist in [
            Distribution::Uniform,
            Distribution::Constant,
            Distribution::Sorted,
            Distribution::ReverseSorted,
            Distribution::FewDistinct,
        ] {
            let keys = generate_keys(100, dist, 1);
            assert_eq!(keys.len(), 100);
            assert!(keys.iter().all(|&k| (1..=100).contains(&k)), "{dist:?}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            generate_keys(64, Distribution::Uniform, 9),
            generate_keys(64, Distribution::Uniform, 9)
        );
        assert_ne!(
            generate_keys(64, Distribution::Uniform, 9),
            generate_keys(64, Distribution::Uniform, 10)
        );
    }

    #[test]
    fn bench_once_checks_output() {
        for algo in [
            Algorithm::UnstableInPlace,
            Algorithm::StableAux,
            Algorithm::StablePreserving,
        ] {
            let r = bench_sort_once(algo, 512, Distribution::Uniform, 1);
            assert_eq!(r.n, 512);
            assert!(r.reads >= 512);
        }
    }
}
