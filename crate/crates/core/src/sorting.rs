//! Three O(n) sorting pipelines for n integer keys in [1, n], composed
//! from the transformations in [`crate::transforms`].
//!
//! All three validate the key range up front: sign tagging is only sound
//! when the input never uses the sign bit, so out-of-range keys are
//! rejected rather than corrupting the run.

use crate::error::SortError;
use crate::store::Store;
use crate::transforms;

fn check_keys<S: Store + ?Sized>(a: &S) -> Result<(), SortError> {
    let n = a.len() as i64;
    for i in 1..=a.len() {
        let v = a.get(i);
        if v < 1 || v > n {
            return Err(SortError::KeyOutOfRange {
                pos: i,
                value: v,
                n: a.len(),
            });
        }
    }
    Ok(())
}

fn check_aux<S: Store + ?Sized, B: Store + ?Sized>(a: &S, aux: &B) -> Result<(), SortError> {
    if aux.len() != a.len() {
        return Err(SortError::AuxLengthMismatch {
            got: aux.len(),
            want: a.len(),
        });
    }
    Ok(())
}

/// Sorts in-place and unstably using a constant number of scalar words.
///
/// Pipeline: rearrange into an idempotent map, re-encode as the rank
/// permutation, associatively permute, fill forward. Intermediate values
/// range over [-n, n].
pub fn sort_unstable_inplace<S: Store + ?Sized>(a: &mut S) -> Result<(), SortError> {
    check_keys(a)?;
    transforms::to_idempotent_unstable(a);
    transforms::map_to_perm(a);
    transforms::associative_permute(a);
    transforms::fill_forward_inplace(a);
    Ok(())
}

/// Sorts stably using one length-n auxiliary buffer (destroyed).
///
/// Pipeline: compute the stable rank permutation into `aux`, pull the keys
/// into idempotent-map order, then the unstable tail, whose rank encoding
/// preserves the position order of equal keys. Intermediate key values
/// range over [-n, n].
pub fn sort_stable_aux<S, B>(a: &mut S, aux: &mut B) -> Result<(), SortError>
where
    S: Store + ?Sized,
    B: Store + ?Sized,
{
    check_keys(a)?;
    check_aux(a, aux)?;
    transforms::stable_rank_permutation(a, aux);
    transforms::apply_forward(a, aux);
    transforms::map_to_perm(a);
    transforms::associative_permute(a);
    transforms::fill_forward_inplace(a);
    Ok(())
}

/// Sorts stably without ever rewriting a key: keys are only moved. Uses
/// one length-n auxiliary buffer (destroyed).
///
/// Pipeline: stable rank permutation, pull into idempotent-map order,
/// compute the destination ranks out-of-place into `aux`, then push each
/// key to its rank cell.
pub fn sort_stable_preserving<S, B>(a: &mut S, aux: &mut B) -> Result<(), SortError>
where
    S: Store + ?Sized,
    B: Store + ?Sized,
{
    check_keys(a)?;
    check_aux(a, aux)?;
    transforms::stable_rank_permutation(a, aux);
    transforms::apply_forward(a, aux);
    transforms::map_to_perm_out(a, aux);
    transforms::apply_inverse(a, aux);
    Ok(())
}

/// Which pipeline a caller wants; the CLI and benches dispatch on this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    UnstableInPlace,
    StableAux,
    StablePreserving,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::UnstableInPlace => "unstable",
            Algorithm::StableAux => "stable-aux",
            Algorithm::StablePreserving => "stable-preserving",
        }
    }

    pub fn needs_aux(self) -> bool {
        !matches!(self, Algorithm::UnstableInPlace)
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unstable" => Ok(Algorithm::UnstableInPlace),
            "stable-aux" => Ok(Algorithm::StableAux),
            "stable-preserving" => Ok(Algorithm::StablePreserving),
            other => Err(format!("unknown algorithm `{other}`")),
        }
    }
}

/// Runs the chosen pipeline, allocating the auxiliary buffer when needed.
pub fn sort_with<S: Store + ?Sized>(a: &mut S, algo: Algorithm) -> Result<(), SortError> {
    match algo {
        Algorithm::UnstableInPlace => sort_unstable_inplace(a),
        Algorithm::StableAux => {
            let mut aux = vec![0i64; a.len()];
            sort_stable_aux(a, aux.as_mut_slice())
        }
        Algorithm::StablePreserving => {
            let mut aux = vec![0i64; a.len()];
            sort_stable_preserving(a, aux.as_mut_slice())
        }
    }
}

/// Stable sort of `(key, satellite)` pairs, one satellite word per key.
///
/// Convenience for demos: sorts the keys through the stable pipeline and
/// carries the satellites along with an index permutation. Allocates.
pub fn sort_stable_keyed(pairs: &mut [(i64, i64)]) -> Result<(), SortError> {
    let n = pairs.len();
    let mut keys: Vec<i64> = pairs.iter().map(|p| p.0).collect();
    let mut sigma = vec![0i64; n];
    check_keys(keys.as_slice())?;
    transforms::stable_rank_permutation(keys.as_slice(), sigma.as_mut_slice());
    // ranks of the stably rearranged map tell each source row its target
    let mut order = sigma.clone();
    transforms::apply_forward(keys.as_mut_slice(), order.as_mut_slice());
    let mut ranks = vec![0i64; n];
    transforms::map_to_perm_out(keys.as_slice(), ranks.as_mut_slice());
    // source row sigma(i) lands at rank(i)
    let mut out: Vec<(i64, i64)> = vec![(0, 0); n];
    for i in 1..=n {
        let src = sigma[i - 1] as usize;
        let dst = ranks[i - 1] as usize;
        out[dst - 1] = pairs[src - 1];
    }
    pairs.copy_from_slice(&out);
    Ok(())
}
