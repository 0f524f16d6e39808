//! In-place, linear-time transformations between integer self-maps,
//! idempotent maps, sign-tagged idempotent permutations, their inverses,
//! and sorted multisets — composed into three O(n)-time sorting pipelines
//! for n keys in [1, n] that need only a constant number of scalar words.
//!
//! An idempotent map satisfies `iota(iota(x)) = iota(x)`: its image
//! elements are fixed points and every other element repeats one of them.
//! Re-encoding each element by the rank of its value (idle duplicates
//! ranked in position order) yields a permutation whose sign-tagged fixed
//! entries increase left to right, starting with 1. That rank permutation,
//! its inverse, and the associatively permuted form all determine the map
//! and its sorted arrangement, and every conversion among them runs in
//! linear (or, for two class-by-class variants, O(kn)) time in place.
//!
//! Quick tour:
//!
//! ```
//! use idemperm::{sorting, transforms};
//!
//! // the unstable pipeline: map -> idempotent map -> rank permutation
//! // -> associative permute -> fill forward
//! let mut keys = vec![3i64, 1, 3];
//! sorting::sort_unstable_inplace(keys.as_mut_slice()).unwrap();
//! assert_eq!(keys, vec![1, 3, 3]);
//!
//! // the stages are exposed individually
//! let mut a = vec![2i64, 2, 7, 7, 5, 7, 7, 8, 9, 2];
//! transforms::map_to_perm(a.as_mut_slice());
//! assert_eq!(a, vec![2, -1, 6, 7, -4, 8, -5, -9, -10, 3]);
//! ```
//!
//! The `examples/` directory holds one runnable program per capability;
//! the `idemperm` binary wraps the same functionality as subcommands.

pub mod alloc_counter;
pub mod array;
pub mod bench;
pub mod bits;
pub mod cli;
pub mod error;
pub mod io;
pub mod oracle;
pub mod report;
pub mod sorting;
pub mod store;
pub mod transforms;

pub use array::{
    decompose, validate_idempotent_map, validate_idempotent_perm,
    validate_inverse_idempotent_perm, validate_raw_map, validate_sorted_multiset,
    ClassDecomposition, KeyArray, RankPermutation, SemanticState,
};
pub use bits::{BitScratch, CharacteristicBits};
pub use error::{ArrayError, OracleError, SortError, TransformError};
pub use sorting::Algorithm;
pub use store::{CountingStore, GuardStore, Store};
