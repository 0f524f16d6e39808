//! Command implementations behind the `idemperm` binary.
//!
//! Exit-code contract: 0 success, 1 validation failure, 2 i/o error,
//! 3 usage error. The binary maps these onto process exits so scripts can
//! rely on them.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::array::{
    check_state, decompose, KeyArray, SemanticState,
};
use crate::bench::{bench_sort_once, Distribution};
use crate::bits::BitScratch;
use crate::error::TransformError;
use crate::io::{read_file, write_binary, write_text, FileError};
use crate::oracle::{
    enumerate_idempotent_maps, CountFamily, CountTable,
};
use crate::report::TransformReport;
use crate::sorting::{self, Algorithm};
use crate::transforms::{self, TagMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Failures carrying their target exit code.
#[derive(Debug)]
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

impl CmdError {
    fn validation(msg: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_VALIDATION,
            message: msg.into(),
        }
    }

    fn io(msg: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_IO,
            message: msg.into(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        CmdError {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }
}

impl From<FileError> for CmdError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Io(_) => CmdError::io(e.to_string()),
            _ => CmdError::validation(e.to_string()),
        }
    }
}

type CmdResult = Result<(), CmdError>;

fn load_array(path: &Path) -> Result<KeyArray, CmdError> {
    let data = read_file(path)?;
    KeyArray::from_vec(data.values).map_err(|e| CmdError::validation(e.to_string()))
}

fn emit(path: &Path, values: &[i64], binary: bool) -> CmdResult {
    let r = if binary {
        write_binary(path, values)
    } else {
        write_text(path, values)
    };
    r.map_err(|e| CmdError::io(e.to_string()))
}

fn want_binary(path: &Path) -> bool {
    path.extension().map(|e| e == "bin").unwrap_or(false)
}

/// `sort --algo ... --in FILE --out FILE [--report FILE]`
pub fn cmd_sort(
    algo: Algorithm,
    input: &Path,
    output: &Path,
    report_path: Option<&Path>,
) -> CmdResult {
    let mut arr = load_array(input)?;
    check_state(&arr, SemanticState::RawMap)
        .map_err(|v| CmdError::validation(format!("input is not a raw map: {v}")))?;
    let n = arr.len();
    let start = Instant::now();
    let (reads, writes) = {
        let mut counting = crate::store::CountingStore::new(arr.as_mut_slice());
        sorting::sort_with(&mut counting, algo)
            .map_err(|e| CmdError::validation(e.to_string()))?;
        (counting.reads(), counting.writes())
    };
    let wall_ns = start.elapsed().as_nanos();
    check_state(&arr, SemanticState::SortedMultiset)
        .map_err(|v| CmdError::validation(format!("postcondition violated: {v}")))?;
    emit(output, arr.as_slice(), want_binary(output))?;
    if let Some(rp) = report_path {
        let report = TransformReport {
            operation: format!("sort-{}", algo.as_str()),
            n,
            wall_ns,
            reads,
            writes,
            aux_words: 4,
            scratch_bits: 0,
        };
        std::fs::write(rp, format!("{report}\n")).map_err(|e| CmdError::io(e.to_string()))?;
    }
    Ok(())
}

/// Operations exposed by `transform --op`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformOp {
    ToIdempotent,
    ToPerm,
    ToPermQuadratic,
    ToMap,
    Invert,
    AssocPermute,
    FillForward,
    MapFromInverse,
    MultisetStream,
}

impl std::str::FromStr for TransformOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "to-idempotent" => Ok(Self::ToIdempotent),
            "to-perm" => Ok(Self::ToPerm),
            "to-perm-quadratic" => Ok(Self::ToPermQuadratic),
            "to-map" => Ok(Self::ToMap),
            "invert" => Ok(Self::Invert),
            "assoc-permute" => Ok(Self::AssocPermute),
            "fill-forward" => Ok(Self::FillForward),
            "map-from-inverse" => Ok(Self::MapFromInverse),
            "multiset-stream" => Ok(Self::MultisetStream),
            other => Err(format!("unknown op `{other}`")),
        }
    }
}

impl TransformOp {
    /// Input state the operation requires.
    fn pre_state(self, arr: &KeyArray) -> Result<SemanticState, CmdError> {
        let s = match self {
            Self::ToIdempotent => SemanticState::RawMap,
            Self::ToPerm | Self::ToPermQuadratic => SemanticState::IdempotentMap,
            Self::ToMap | Self::AssocPermute => SemanticState::IdempotentPerm,
            Self::MapFromInverse | Self::MultisetStream => SemanticState::InverseIdempotentPerm,
            Self::FillForward => {
                // accepts either the inverse permutation or the
                // associative-permute output
                if check_state(arr, SemanticState::InverseIdempotentPerm).is_ok() {
                    return Ok(SemanticState::InverseIdempotentPerm);
                }
                SemanticState::Gamma
            }
            Self::Invert => {
                // sign-tagged input in either direction, or a plain
                // all-positive permutation
                if arr.as_slice().iter().all(|&v| v > 0) {
                    return Ok(SemanticState::RankPerm);
                }
                if check_state(arr, SemanticState::IdempotentPerm).is_ok() {
                    return Ok(SemanticState::IdempotentPerm);
                }
                SemanticState::InverseIdempotentPerm
            }
        };
        Ok(s)
    }

    fn post_state(self, pre: SemanticState) -> Option<SemanticState> {
        match self {
            Self::ToIdempotent => Some(SemanticState::IdempotentMap),
            Self::ToPerm | Self::ToPermQuadratic => Some(SemanticState::IdempotentPerm),
            Self::ToMap | Self::MapFromInverse => Some(SemanticState::IdempotentMap),
            Self::AssocPermute => Some(SemanticState::Gamma),
            Self::FillForward => Some(SemanticState::SortedMultiset),
            Self::MultisetStream => None,
            Self::Invert => Some(match pre {
                SemanticState::IdempotentPerm => SemanticState::InverseIdempotentPerm,
                SemanticState::InverseIdempotentPerm => SemanticState::IdempotentPerm,
                _ => SemanticState::RankPerm,
            }),
        }
    }
}

/// `transform --op ... --in FILE --out FILE`
pub fn cmd_transform(
    op: TransformOp,
    input: &Path,
    output: Option<&Path>,
    stdout: &mut impl Write,
) -> CmdResult {
    let mut arr = load_array(input)?;
    let pre = op.pre_state(&arr)?;
    check_state(&arr, pre)
        .map_err(|v| CmdError::validation(format!("input is not a valid {pre}: {v}")))?;

    let result: Vec<i64> = match op {
        TransformOp::ToIdempotent => {
            transforms::to_idempotent_unstable(&mut arr);
            arr.into_vec()
        }
        TransformOp::ToPerm => {
            transforms::map_to_perm(&mut arr);
            arr.into_vec()
        }
        TransformOp::ToPermQuadratic => {
            transforms::map_to_perm_quadratic(&mut arr);
            arr.into_vec()
        }
        TransformOp::ToMap => {
            transforms::perm_to_map_quadratic(&mut arr);
            arr.into_vec()
        }
        TransformOp::AssocPermute => {
            transforms::associative_permute(&mut arr);
            arr.into_vec()
        }
        TransformOp::FillForward => {
            transforms::fill_forward_inplace(&mut arr);
            arr.into_vec()
        }
        TransformOp::MapFromInverse => {
            let mut out = vec![0i64; arr.len()];
            transforms::map_from_inverse(&arr, out.as_mut_slice());
            out
        }
        TransformOp::Invert => {
            let r = if pre == SemanticState::RankPerm {
                transforms::invert_inplace(&mut arr, TagMode::SignTag, None)
            } else {
                let mut scratch = BitScratch::new(arr.len());
                transforms::invert_inplace(&mut arr, TagMode::BitTag, Some(&mut scratch))
            };
            match r {
                Ok(()) => arr.into_vec(),
                Err(TransformError::NeedsBitTag) => {
                    return Err(CmdError::validation(
                        "sign-tagged input requires bit-tagged inversion".to_string(),
                    ))
                }
                Err(e) => return Err(CmdError::validation(e.to_string())),
            }
        }
        TransformOp::MultisetStream => {
            // streams one value per line; never buffers the whole output
            let mut w = std::io::BufWriter::new(stdout);
            let mut failed = None;
            transforms::multiset_stream(&arr, |v| {
                if failed.is_none() {
                    if let Err(e) = writeln!(w, "{v}") {
                        failed = Some(e);
                    }
                }
            });
            w.flush().map_err(|e| CmdError::io(e.to_string()))?;
            if let Some(e) = failed {
                return Err(CmdError::io(e.to_string()));
            }
            return Ok(());
        }
    };

    if let Some(post) = op.post_state(pre) {
        let out_arr = KeyArray::from_vec(result.clone())
            .map_err(|e| CmdError::validation(format!("postcondition violated: {e}")))?;
        check_state(&out_arr, post)
            .map_err(|v| CmdError::validation(format!("postcondition violated: {v}")))?;
    }

    match output {
        Some(path) => emit(path, &result, want_binary(path))?,
        None => {
            let mut w = std::io::BufWriter::new(stdout);
            crate::io::write_text_to(&mut w, &result).map_err(|e| CmdError::io(e.to_string()))?;
        }
    }
    Ok(())
}

/// `verify --state ... --in FILE`: prints the class decomposition on
/// success, the first violated condition on failure.
pub fn cmd_verify(state: SemanticState, input: &Path, stdout: &mut impl Write) -> CmdResult {
    let arr = load_array(input)?;
    check_state(&arr, state).map_err(|v| CmdError::validation(v.to_string()))?;
    let line = match state {
        SemanticState::IdempotentMap
        | SemanticState::IdempotentPerm
        | SemanticState::InverseIdempotentPerm => {
            let d = decompose(&arr, state).map_err(|v| CmdError::validation(v.to_string()))?;
            format!(
                "k={} A={} C={} c'={}",
                d.k,
                join(&d.fixed_indices),
                join(&d.boundaries),
                join(&d.cardinalities)
            )
        }
        other => format!("valid {} n={}", other, arr.len()),
    };
    writeln!(stdout, "{line}").map_err(|e| CmdError::io(e.to_string()))?;
    Ok(())
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `count --n N [--k K] [--family ...] [--enumerate]`
pub fn cmd_count(
    n: usize,
    k: Option<usize>,
    family: CountFamily,
    enumerate: bool,
    stdout: &mut impl Write,
) -> CmdResult {
    if n < 1 {
        return Err(CmdError::usage("--n must be at least 1"));
    }
    let table = CountTable::from_formula(n, family);
    let io_err = |e: std::io::Error| CmdError::io(e.to_string());
    match k {
        Some(k) => {
            let row = table
                .rows
                .iter()
                .find(|(kk, _)| *kk == k)
                .ok_or_else(|| CmdError::usage(format!("--k must be in [1, {n}]")))?;
            writeln!(stdout, "n={} k={} count={}", n, k, row.1).map_err(io_err)?;
        }
        None => {
            for (kk, c) in &table.rows {
                writeln!(stdout, "n={n} k={kk} count={c}").map_err(io_err)?;
            }
            writeln!(stdout, "n={} total={}", n, table.total).map_err(io_err)?;
        }
    }
    if enumerate {
        if n > crate::oracle::MAX_ENUM_N {
            return Err(CmdError::usage(format!(
                "--enumerate requires n <= {}",
                crate::oracle::MAX_ENUM_N
            )));
        }
        let brute = match family {
            CountFamily::Idempotent => enumerate_idempotent_maps(n)
                .map_err(|e| CmdError::usage(e.to_string()))?
                .len(),
            CountFamily::Multiset => count_multisets_brute(n),
        };
        let verdict = if num_bigint::BigUint::from(brute) == table.total {
            "MATCH"
        } else {
            "MISMATCH"
        };
        writeln!(stdout, "enumerated={brute} {verdict}").map_err(io_err)?;
    }
    Ok(())
}

fn count_multisets_brute(n: usize) -> usize {
    // non-decreasing sequences over [1, n] of length n
    fn rec(n: usize, len: usize, min: usize) -> usize {
        if len == 0 {
            return 1;
        }
        (min..=n).map(|v| rec(n, len - 1, v)).sum()
    }
    rec(n, n, 1)
}

/// `bench --n N --trials T --algo ... [--dist ...] [--seed S]`
pub fn cmd_bench(
    n: usize,
    trials: usize,
    algo: Algorithm,
    dist: Distribution,
    seed: u64,
    stdout: &mut impl Write,
) -> CmdResult {
    if n < 1 {
        return Err(CmdError::usage("--n must be at least 1"));
    }
    let io_err = |e: std::io::Error| CmdError::io(e.to_string());
    let mut total_ns: u128 = 0;
    let mut total_accesses: u64 = 0;
    for t in 0..trials.max(1) {
        let before = crate::alloc_counter::allocated_bytes();
        let report = bench_sort_once(algo, n, dist, seed.wrapping_add(t as u64));
        let grew = crate::alloc_counter::allocated_bytes().saturating_sub(before);
        // the harness itself allocates the input and auxiliary buffers;
        // anything beyond a small multiple of that breaks the space contract
        let budget = (4 * n as u64 + 4096) * 8;
        if algo == Algorithm::UnstableInPlace && grew > budget {
            return Err(CmdError::validation(format!(
                "allocation budget exceeded: {grew} bytes for n={n}"
            )));
        }
        writeln!(stdout, "trial={t} {report} dist={}", dist.as_str()).map_err(io_err)?;
        total_ns += report.wall_ns;
        total_accesses += report.accesses();
    }
    let trials = trials.max(1) as u64;
    writeln!(
        stdout,
        "aggregate algo={} n={} trials={} mean_wall_ns={} mean_accesses={}",
        algo.as_str(),
        n,
        trials,
        total_ns / trials as u128,
        total_accesses / trials
    )
    .map_err(io_err)?;
    Ok(())
}

/// Convenience used by tests: run a closure against a fresh temp dir.
pub fn with_temp_dir<T>(f: impl FnOnce(&Path) -> T) -> T {
    use std::sync::atomic::{AtomicU64, Ordering};
    static NEXT: AtomicU64 = AtomicU64::new(0);
    let dir = std::env::temp_dir().join(format!(
        "idemperm-{}-{}",
        std::process::id(),
        NEXT.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).expect("create temp dir");
    let r = f(&dir);
    std::fs::remove_dir_all(&dir).ok();
    r
}

/// Resolves a CLI path argument.
pub fn path_arg(s: &str) -> PathBuf {
    PathBuf::from(s)
}
