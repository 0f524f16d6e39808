//! Brute-force ground truth: exact cardinalities, exhaustive enumeration
//! of the small combinatorial families, naive reference implementations
//! for every transform, and the composition check.
//!
//! Everything here favours obvious correctness over speed; the in-place
//! algorithms are tested against these references exhaustively for small n.

use num_bigint::BigUint;

use crate::array::{validate_idempotent_perm, KeyArray};
use crate::error::OracleError;

/// Hard guard for the exhaustive enumerations.
pub const MAX_ENUM_N: usize = 8;

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut num = BigUint::from(1u32);
    for i in 0..k {
        num *= BigUint::from(n - i);
        num /= BigUint::from(i + 1);
    }
    num
}

/// Number of idempotent maps (equally, idempotent permutations) of degree
/// k on n points: C(n, k) * k^(n-k).
pub fn cardinality_idempotent(n: usize, k: usize) -> Result<BigUint, OracleError> {
    if k < 1 || k > n {
        return Err(OracleError::DegreeOutOfRange { k, n });
    }
    Ok(binomial(n, k) * BigUint::from(k).pow((n - k) as u32))
}

/// Number of n-element multisets over [1, n] with k distinct values:
/// C(n, k) * C(n-1, k-1).
pub fn cardinality_multiset(n: usize, k: usize) -> Result<BigUint, OracleError> {
    if k < 1 || k > n {
        return Err(OracleError::DegreeOutOfRange { k, n });
    }
    Ok(binomial(n, k) * binomial(n - 1, k - 1))
}

/// Per-degree counts plus total for one of the counted families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub rows: Vec<(usize, BigUint)>,
    pub total: BigUint,
    pub source: CountSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountSource {
    Formula,
    Enumeration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountFamily {
    Idempotent,
    Multiset,
}

impl CountTable {
    pub fn from_formula(n: usize, family: CountFamily) -> Self {
        let mut rows = Vec::with_capacity(n);
        let mut total = BigUint::from(0u32);
        for k in 1..=n {
            let c = match family {
                CountFamily::Idempotent => cardinality_idempotent(n, k),
                CountFamily::Multiset => cardinality_multiset(n, k),
            }
            .expect("k in range");
            total += &c;
            rows.push((k, c));
        }
        CountTable {
            n,
            rows,
            total,
            source: CountSource::Formula,
        }
    }
}

fn guard(n: usize) -> Result<(), OracleError> {
    if n > MAX_ENUM_N {
        return Err(OracleError::TooLarge { n, max: MAX_ENUM_N });
    }
    Ok(())
}

/// Every idempotent map on [1, n], in lexicographic order.
///
/// Constructive: choose the fixed set, then assign every idle position any
/// fixed value. n is capped at [`MAX_ENUM_N`].
pub fn enumerate_idempotent_maps(n: usize) -> Result<Vec<Vec<i64>>, OracleError> {
    guard(n)?;
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let fixed: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let idle: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let k = fixed.len();
        let mut assign = vec![0usize; idle.len()];
        loop {
            let mut map = vec![0i64; n];
            for &f in &fixed {
                map[f] = (f + 1) as i64;
            }
            for (slot, &pos) in idle.iter().enumerate() {
                map[pos] = (fixed[assign[slot]] + 1) as i64;
            }
            out.push(map);
            // odometer over assignments
            let mut carry = 0usize;
            loop {
                if carry == assign.len() {
                    break;
                }
                assign[carry] += 1;
                if assign[carry] < k {
                    break;
                }
                assign[carry] = 0;
                carry += 1;
            }
            if carry == assign.len() {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every canonically arranged sign-tagged idempotent permutation on [1, n],
/// in lexicographic order.
///
/// Constructive: choose the tagged positions and a class label for every
/// idle position; within a class, idle ranks ascend with position. This is
/// exactly the image of [`enumerate_idempotent_maps`] under the rank
/// re-encoding, so the per-degree counts match the idempotent formula.
pub fn enumerate_idempotent_perms(n: usize) -> Result<Vec<Vec<i64>>, OracleError> {
    guard(n)?;
    let maps = enumerate_idempotent_maps(n)?;
    let mut out: Vec<Vec<i64>> = maps
        .into_iter()
        .map(|mut m| {
            crate::transforms::map_to_perm(m.as_mut_slice());
            m
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Every sign-tagged array accepted by the idempotent-permutation
/// validator, idle arrangements free. Strictly larger than the canonical
/// family for n >= 3; used to stress the transforms on inputs like the
/// ones with descending idle ranks.
pub fn enumerate_valid_perms_free(n: usize) -> Result<Vec<Vec<i64>>, OracleError> {
    if n > 6 {
        return Err(OracleError::TooLarge { n, max: 6 });
    }
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    let mut perm: Vec<i64> = (1..=n as i64).collect();
    permute_all(&mut perm, 0, &mut |p| {
        for mask in 0u32..(1u32 << n) {
            let candidate: Vec<i64> = p
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            if let Ok(arr) = KeyArray::from_vec(candidate.clone()) {
                if validate_idempotent_perm(&arr) {
                    out.push(candidate);
                }
            }
        }
    });
    out.sort();
    out.dedup();
    Ok(out)
}

fn permute_all(v: &mut Vec<i64>, start: usize, f: &mut impl FnMut(&[i64])) {
    if start == v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permute_all(v, start + 1, f);
        v.swap(start, i);
    }
}

/// All n^n self-maps, for filter-based cross-checks. n capped at 6.
pub fn enumerate_all_maps(n: usize) -> Result<Vec<Vec<i64>>, OracleError> {
    if n > 6 {
        return Err(OracleError::TooLarge { n, max: 6 });
    }
    if n == 0 {
        return Ok(vec![vec![]]);
    }
    let mut out = Vec::new();
    let mut cur = vec![1i64; n];
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            cur[i] += 1;
            if cur[i] <= n as i64 {
                break;
            }
            cur[i] = 1;
            i += 1;
        }
    }
}

/// Positionwise composition x(i) = m(|p(i)|) of a sorted multiset with an
/// idempotent permutation.
pub fn compose(m: &[i64], p: &[i64]) -> Result<Vec<i64>, OracleError> {
    if m.len() != p.len() {
        return Err(OracleError::LengthMismatch { a: m.len(), b: p.len() });
    }
    Ok(p.iter()
        .map(|&v| m[(v.unsigned_abs() as usize) - 1])
        .collect())
}

/// Naive sort, the ground truth for every pipeline.
pub fn reference_sort(a: &[i64]) -> Vec<i64> {
    let mut v = a.to_vec();
    v.sort();
    v
}

/// Naive stable sort of (key, tag) pairs by key.
pub fn reference_stable_sort(pairs: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut v = pairs.to_vec();
    v.sort_by_key(|p| p.0);
    v
}

/// Definitional inversion: the value at position x moves to position
/// |p(x)|, keeping the sign of p(x). Allocates a fresh array.
pub fn reference_invert(p: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; p.len()];
    for (idx, &v) in p.iter().enumerate() {
        let x = (idx + 1) as i64;
        out[(v.unsigned_abs() as usize) - 1] = if v < 0 { -x } else { x };
    }
    out
}

/// Reference rank re-encoding of an idempotent map: within each class the
/// fixed element takes the first rank, idle duplicates follow in position
/// order. Computed through a full sort.
pub fn reference_map_to_perm(a: &[i64]) -> Vec<i64> {
    let n = a.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (a[i], a[i] != (i + 1) as i64, i));
    let mut out = vec![0i64; n];
    for (rank0, &pos) in order.iter().enumerate() {
        let rank = (rank0 + 1) as i64;
        let fixed = a[pos] == (pos + 1) as i64;
        out[pos] = if fixed { -rank } else { rank };
    }
    out
}

/// Deterministically samples a sign-tagged idempotent permutation with
/// free idle arrangement.
pub fn random_idempotent_perm(rng: &mut impl rand::Rng, n: usize) -> Vec<i64> {
    use rand::seq::SliceRandom;
    if n == 0 {
        return vec![];
    }
    let k = rng.gen_range(1..=n);
    // tagged positions and boundaries
    let mut positions: Vec<usize> = (1..=n).collect();
    positions.shuffle(rng);
    let mut fixed: Vec<usize> = positions[..k].to_vec();
    fixed.sort_unstable();
    let mut bounds: Vec<usize> = (2..=n).collect();
    bounds.shuffle(rng);
    let mut c: Vec<usize> = bounds[..k - 1].to_vec();
    c.push(1);
    c.sort_unstable();
    let mut out = vec![0i64; n];
    for (i, &pos) in fixed.iter().enumerate() {
        out[pos - 1] = -(c[i] as i64);
    }
    let mut idle_ranks: Vec<i64> = (1..=n as i64).filter(|r| !c.contains(&(*r as usize))).collect();
    idle_ranks.shuffle(rng);
    let mut next = 0usize;
    for slot in out.iter_mut() {
        if *slot == 0 {
            *slot = idle_ranks[next];
            next += 1;
        }
    }
    out
}
