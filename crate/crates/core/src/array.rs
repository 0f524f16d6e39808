//! The key-array substrate, the semantic states it can be in, and a
//! validator plus class decomposition for each state.
//!
//! Values are 1-based throughout: an array of length `n` holds values whose
//! magnitudes lie in `[1, n]`. Negative entries are sign tags marking the
//! fixed elements of the state at hand (the implicit characteristic
//! function); storage indexing is an implementation detail of [`Store`].

use std::fmt;
use std::str::FromStr;

use crate::bits::CharacteristicBits;
use crate::error::ArrayError;
use crate::store::Store;

/// Maximum supported length: one sign bit spare on 64-bit cells.
pub const MAX_LEN: usize = 1 << 62;

/// Contiguous sequence of non-zero signed values with magnitudes in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyArray {
    data: Vec<i64>,
}

impl KeyArray {
    /// Validates magnitude bounds and takes ownership of `data`.
    pub fn from_vec(data: Vec<i64>) -> Result<Self, ArrayError> {
        let n = data.len();
        if n > MAX_LEN {
            return Err(ArrayError::LengthOverflow { len: n });
        }
        for (idx, &v) in data.iter().enumerate() {
            if v == 0 {
                return Err(ArrayError::ZeroElement { pos: idx + 1 });
            }
            if v.unsigned_abs() > n as u64 {
                return Err(ArrayError::OutOfRange {
                    pos: idx + 1,
                    value: v,
                    n,
                });
            }
        }
        Ok(Self { data })
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [i64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.data
    }
}

impl Store for KeyArray {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn get(&self, i: usize) -> i64 {
        self.data[i - 1]
    }

    fn set(&mut self, i: usize, v: i64) {
        self.data[i - 1] = v;
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.data.swap(i - 1, j - 1);
    }
}

impl fmt::Display for KeyArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.data {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// All-positive permutation of `[1, n]`, used to rearrange other arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankPermutation {
    data: Vec<i64>,
}

impl RankPermutation {
    /// Checks that `data` holds every value in `[1, n]` exactly once.
    pub fn from_vec(data: Vec<i64>) -> Result<Self, ArrayError> {
        let n = data.len();
        if n > MAX_LEN {
            return Err(ArrayError::LengthOverflow { len: n });
        }
        let mut seen = vec![false; n];
        for (idx, &v) in data.iter().enumerate() {
            if v <= 0 || v as u64 > n as u64 {
                return Err(ArrayError::OutOfRange {
                    pos: idx + 1,
                    value: v,
                    n,
                });
            }
            let slot = (v - 1) as usize;
            if seen[slot] {
                return Err(ArrayError::OutOfRange {
                    pos: idx + 1,
                    value: v,
                    n,
                });
            }
            seen[slot] = true;
        }
        Ok(Self { data })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            data: (1..=n as i64).collect(),
        }
    }

    /// Uninitialised output buffer for algorithms that fill a permutation.
    pub fn zeroed(n: usize) -> Vec<i64> {
        vec![0; n]
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [i64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.data
    }
}

impl Store for RankPermutation {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn get(&self, i: usize) -> i64 {
        self.data[i - 1]
    }

    fn set(&mut self, i: usize, v: i64) {
        self.data[i - 1] = v;
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.data.swap(i - 1, j - 1);
    }
}

/// The semantic states a key array can be in. Carried as metadata by the
/// CLI and tests, never trusted: every consumer re-validates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemanticState {
    RawMap,
    IdempotentMap,
    IdempotentPerm,
    InverseIdempotentPerm,
    Gamma,
    SortedMultiset,
    RankPerm,
}

impl SemanticState {
    pub fn as_str(self) -> &'static str {
        match self {
            SemanticState::RawMap => "raw-map",
            SemanticState::IdempotentMap => "idempotent-map",
            SemanticState::IdempotentPerm => "idempotent-perm",
            SemanticState::InverseIdempotentPerm => "inverse-perm",
            SemanticState::Gamma => "gamma",
            SemanticState::SortedMultiset => "sorted-multiset",
            SemanticState::RankPerm => "rank-perm",
        }
    }
}

impl fmt::Display for SemanticState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SemanticState {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw-map" => Ok(SemanticState::RawMap),
            "idempotent-map" => Ok(SemanticState::IdempotentMap),
            "idempotent-perm" => Ok(SemanticState::IdempotentPerm),
            "inverse-perm" => Ok(SemanticState::InverseIdempotentPerm),
            "gamma" => Ok(SemanticState::Gamma),
            "sorted-multiset" => Ok(SemanticState::SortedMultiset),
            "rank-perm" => Ok(SemanticState::RankPerm),
            other => Err(format!("unknown state `{other}`")),
        }
    }
}

/// First violated condition when an array fails a state validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateViolation {
    pub condition: String,
}

impl fmt::Display for StateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.condition)
    }
}

fn violation(msg: impl Into<String>) -> Result<(), StateViolation> {
    Err(StateViolation {
        condition: msg.into(),
    })
}

/// True iff every element is in `[1, n]`: an arbitrary self-map.
pub fn validate_raw_map(a: &KeyArray) -> bool {
    check_raw_map(a).is_ok()
}

pub fn check_raw_map(a: &KeyArray) -> Result<(), StateViolation> {
    let n = a.len() as i64;
    for (idx, &v) in a.as_slice().iter().enumerate() {
        if v < 1 || v > n {
            return violation(format!("f({}) = {} is outside [1, {}]", idx + 1, v, n));
        }
    }
    Ok(())
}

/// True iff the array is a self-map with `a(a(x)) = a(x)` for every `x`.
pub fn validate_idempotent_map(a: &KeyArray) -> bool {
    check_idempotent_map(a).is_ok()
}

pub fn check_idempotent_map(a: &KeyArray) -> Result<(), StateViolation> {
    check_raw_map(a)?;
    let s = a.as_slice();
    for x in 1..=s.len() {
        let y = s[x - 1] as usize;
        if s[y - 1] != y as i64 {
            return violation(format!("iota(iota({x})) != iota({x})"));
        }
    }
    Ok(())
}

/// True iff magnitudes form a permutation, at least one element is
/// sign-tagged, tagged magnitudes strictly increase along positions, and
/// the smallest tagged magnitude is 1.
pub fn validate_idempotent_perm(a: &KeyArray) -> bool {
    check_idempotent_perm(a).is_ok()
}

pub fn check_idempotent_perm(a: &KeyArray) -> Result<(), StateViolation> {
    check_magnitude_permutation(a)?;
    let s = a.as_slice();
    if s.is_empty() {
        return Ok(());
    }
    let mut last_fixed: Option<i64> = None;
    for (idx, &v) in s.iter().enumerate() {
        if v < 0 {
            let m = -v;
            match last_fixed {
                None => {
                    if m != 1 {
                        return violation(format!(
                            "first fixed element has magnitude {m}, expected 1"
                        ));
                    }
                }
                Some(prev) if m <= prev => {
                    return violation(format!(
                        "fixed magnitudes not increasing at position {} ({} after {})",
                        idx + 1,
                        m,
                        prev
                    ));
                }
                _ => {}
            }
            last_fixed = Some(m);
        }
    }
    if last_fixed.is_none() {
        return violation("no fixed (negative) element present");
    }
    Ok(())
}

/// True iff magnitudes form a permutation, position 1 is sign-tagged, and
/// tagged magnitudes strictly increase along positions.
pub fn validate_inverse_idempotent_perm(a: &KeyArray) -> bool {
    check_inverse_idempotent_perm(a).is_ok()
}

pub fn check_inverse_idempotent_perm(a: &KeyArray) -> Result<(), StateViolation> {
    check_magnitude_permutation(a)?;
    let s = a.as_slice();
    if s.is_empty() {
        return Ok(());
    }
    if s[0] >= 0 {
        return violation("position 1 is not fixed (negative)");
    }
    let mut prev = -s[0];
    for (idx, &v) in s.iter().enumerate().skip(1) {
        if v < 0 {
            let m = -v;
            if m <= prev {
                return violation(format!(
                    "fixed magnitudes not increasing at position {} ({} after {})",
                    idx + 1,
                    m,
                    prev
                ));
            }
            prev = m;
        }
    }
    Ok(())
}

/// True iff all elements are positive and non-decreasing.
pub fn validate_sorted_multiset(a: &KeyArray) -> bool {
    check_sorted_multiset(a).is_ok()
}

pub fn check_sorted_multiset(a: &KeyArray) -> Result<(), StateViolation> {
    check_raw_map(a)?;
    let s = a.as_slice();
    for idx in 1..s.len() {
        if s[idx] < s[idx - 1] {
            return violation(format!(
                "elements decrease at position {} ({} after {})",
                idx + 1,
                s[idx],
                s[idx - 1]
            ));
        }
    }
    Ok(())
}

fn check_magnitude_permutation(a: &KeyArray) -> Result<(), StateViolation> {
    let n = a.len();
    // Validators are test/CLI-side; an owned n-bit scratch keeps them
    // non-destructive.
    let mut seen = vec![false; n];
    for (idx, &v) in a.as_slice().iter().enumerate() {
        let m = v.unsigned_abs() as usize;
        if m < 1 || m > n {
            return violation(format!(
                "magnitude of element at position {} is outside [1, {}]",
                idx + 1,
                n
            ));
        }
        if seen[m - 1] {
            return violation(format!("magnitude {m} occurs more than once"));
        }
        seen[m - 1] = true;
    }
    Ok(())
}

pub fn check_state(a: &KeyArray, state: SemanticState) -> Result<(), StateViolation> {
    match state {
        SemanticState::RawMap => check_raw_map(a),
        SemanticState::IdempotentMap => check_idempotent_map(a),
        SemanticState::IdempotentPerm => check_idempotent_perm(a),
        SemanticState::InverseIdempotentPerm => check_inverse_idempotent_perm(a),
        SemanticState::SortedMultiset => check_sorted_multiset(a),
        SemanticState::Gamma => check_gamma(a),
        SemanticState::RankPerm => match RankPermutation::from_vec(a.as_slice().to_vec()) {
            Ok(_) => Ok(()),
            Err(e) => violation(e.to_string()),
        },
    }
}

/// Shape produced by associative permuting: idle positions hold their own
/// index, tagged positions hold the fixed indices with strictly increasing
/// magnitudes, starting at position 1 when non-empty.
pub fn check_gamma(a: &KeyArray) -> Result<(), StateViolation> {
    let s = a.as_slice();
    if s.is_empty() {
        return Ok(());
    }
    if s[0] >= 0 {
        return violation("position 1 is not fixed (negative)");
    }
    let mut prev = 0i64;
    for (idx, &v) in s.iter().enumerate() {
        let pos = (idx + 1) as i64;
        if v >= 0 {
            if v != pos {
                return violation(format!("idle position {pos} holds {v}, expected {pos}"));
            }
        } else {
            let m = -v;
            if m <= prev {
                return violation(format!(
                    "fixed magnitudes not increasing at position {pos}"
                ));
            }
            prev = m;
        }
    }
    Ok(())
}

/// The triple (A, C, c'): fixed indices, class boundaries with an implicit
/// sentinel `n + 1`, and class cardinalities summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecomposition {
    pub k: usize,
    pub fixed_indices: Vec<usize>,
    pub boundaries: Vec<usize>,
    pub cardinalities: Vec<usize>,
}

impl ClassDecomposition {
    fn from_a_c(n: usize, fixed_indices: Vec<usize>, boundaries: Vec<usize>) -> Self {
        let k = fixed_indices.len();
        let mut cardinalities = Vec::with_capacity(k);
        for i in 0..k {
            let next = if i + 1 < k { boundaries[i + 1] } else { n + 1 };
            cardinalities.push(next - boundaries[i]);
        }
        Self {
            k,
            fixed_indices,
            boundaries,
            cardinalities,
        }
    }
}

/// Extracts (k, A, C, c') from an array in one of the idempotent states.
///
/// The array must validate for `state`; the offending condition is returned
/// otherwise.
pub fn decompose(a: &KeyArray, state: SemanticState) -> Result<ClassDecomposition, StateViolation> {
    let n = a.len();
    match state {
        SemanticState::IdempotentMap => {
            check_idempotent_map(a)?;
            let s = a.as_slice();
            let fixed: Vec<usize> = (1..=n).filter(|&x| s[x - 1] == x as i64).collect();
            let mut mult = vec![0usize; fixed.len()];
            for &v in s {
                let pos = fixed.binary_search(&(v as usize)).expect("image is fixed");
                mult[pos] += 1;
            }
            let mut boundaries = Vec::with_capacity(fixed.len());
            let mut acc = 1usize;
            for &m in &mult {
                boundaries.push(acc);
                acc += m;
            }
            Ok(ClassDecomposition {
                k: fixed.len(),
                fixed_indices: fixed,
                boundaries,
                cardinalities: mult,
            })
        }
        SemanticState::IdempotentPerm => {
            check_idempotent_perm(a)?;
            let s = a.as_slice();
            let mut fixed = Vec::new();
            let mut bounds = Vec::new();
            for (idx, &v) in s.iter().enumerate() {
                if v < 0 {
                    fixed.push(idx + 1);
                    bounds.push((-v) as usize);
                }
            }
            Ok(ClassDecomposition::from_a_c(n, fixed, bounds))
        }
        SemanticState::InverseIdempotentPerm => {
            check_inverse_idempotent_perm(a)?;
            let s = a.as_slice();
            let mut fixed = Vec::new();
            let mut bounds = Vec::new();
            for (idx, &v) in s.iter().enumerate() {
                if v < 0 {
                    bounds.push(idx + 1);
                    fixed.push((-v) as usize);
                }
            }
            Ok(ClassDecomposition::from_a_c(n, fixed, bounds))
        }
        other => Err(StateViolation {
            condition: format!("state {other} has no class decomposition"),
        }),
    }
}

/// Splits a sign-tagged array into its all-positive magnitudes plus an
/// explicit characteristic function.
pub fn to_explicit(a: &KeyArray) -> (KeyArray, CharacteristicBits) {
    let mut bits = CharacteristicBits::new(a.len());
    let mut plain = Vec::with_capacity(a.len());
    for (idx, &v) in a.as_slice().iter().enumerate() {
        if v < 0 {
            bits.set(idx + 1, true);
        }
        plain.push(v.abs());
    }
    (
        KeyArray::from_vec(plain).expect("magnitudes stay in range"),
        bits,
    )
}

/// Re-embeds an explicit characteristic function as sign tags.
pub fn to_implicit(a: &KeyArray, bits: &CharacteristicBits) -> Result<KeyArray, ArrayError> {
    assert_eq!(a.len(), bits.len(), "array and bits must have equal length");
    let mut out = Vec::with_capacity(a.len());
    for (idx, &v) in a.as_slice().iter().enumerate() {
        out.push(if bits.get(idx + 1) { -v.abs() } else { v.abs() });
    }
    KeyArray::from_vec(out)
}
