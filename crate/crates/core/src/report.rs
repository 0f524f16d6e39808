//! Instrumentation record emitted by the bench and verify commands.

use std::fmt;
use std::time::Instant;

use crate::store::CountingStore;
use crate::transforms::aux_scalar_words;

/// One measured run of a named operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformReport {
    pub operation: String,
    pub n: usize,
    pub wall_ns: u128,
    pub reads: u64,
    pub writes: u64,
    pub aux_words: u32,
    pub scratch_bits: usize,
}

impl TransformReport {
    pub fn accesses(&self) -> u64 {
        self.reads + self.writes
    }
}

impl fmt::Display for TransformReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "op={} n={} wall_ns={} reads={} writes={} aux_words={} scratch_bits={}",
            self.operation,
            self.n,
            self.wall_ns,
            self.reads,
            self.writes,
            self.aux_words,
            self.scratch_bits
        )
    }
}

/// Runs `f` over a counting wrapper of `data` and collects a report.
pub fn measure(
    operation: &str,
    data: &mut [i64],
    scratch_bits: usize,
    f: impl FnOnce(&mut CountingStore<'_>),
) -> TransformReport {
    let n = data.len();
    let mut store = CountingStore::new(data);
    let start = Instant::now();
    f(&mut store);
    let wall_ns = start.elapsed().as_nanos();
    TransformReport {
        operation: operation.to_string(),
        n,
        wall_ns,
        reads: store.reads(),
        writes: store.writes(),
        aux_words: aux_scalar_words(operation),
        scratch_bits,
    }
}
