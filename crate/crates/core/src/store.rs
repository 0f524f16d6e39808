//! Storage abstraction used by every in-place algorithm.
//!
//! All array algorithms in this crate are written against [`Store`], a
//! 1-indexed cell accessor, so the same code runs on a plain `[i64]` with
//! zero overhead and on instrumented wrappers that count element accesses
//! or enforce move-only contracts in tests and benchmarks.

use std::cell::Cell;
use std::collections::HashSet;

/// 1-indexed random-access storage over `i64` cells.
///
/// Positions run over `1..=len()`, matching the convention used by the
/// transformation algorithms, which treat cell values as positions.
pub trait Store {
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Reads the cell at 1-based position `i`.
    fn get(&self, i: usize) -> i64;

    /// Writes the cell at 1-based position `i`.
    fn set(&mut self, i: usize, v: i64);

    fn swap(&mut self, i: usize, j: usize) {
        let a = self.get(i);
        let b = self.get(j);
        self.set(i, b);
        self.set(j, a);
    }
}

impl Store for [i64] {
    #[inline(always)]
    fn len(&self) -> usize {
        <[i64]>::len(self)
    }

    #[inline(always)]
    fn get(&self, i: usize) -> i64 {
        self[i - 1]
    }

    #[inline(always)]
    fn set(&mut self, i: usize, v: i64) {
        self[i - 1] = v;
    }

    #[inline(always)]
    fn swap(&mut self, i: usize, j: usize) {
        <[i64]>::swap(self, i - 1, j - 1);
    }
}

impl Store for Vec<i64> {
    #[inline(always)]
    fn len(&self) -> usize {
        <[i64]>::len(self)
    }

    #[inline(always)]
    fn get(&self, i: usize) -> i64 {
        self[i - 1]
    }

    #[inline(always)]
    fn set(&mut self, i: usize, v: i64) {
        self[i - 1] = v;
    }

    #[inline(always)]
    fn swap(&mut self, i: usize, j: usize) {
        <[i64]>::swap(self, i - 1, j - 1);
    }
}

/// Wrapper that counts every element read and write.
///
/// Counters live in `Cell`s so reads can be tallied through `&self`.
pub struct CountingStore<'a> {
    data: &'a mut [i64],
    reads: Cell<u64>,
    writes: Cell<u64>,
}

impl<'a> CountingStore<'a> {
    pub fn new(data: &'a mut [i64]) -> Self {
        Self {
            data,
            reads: Cell::new(0),
            writes: Cell::new(0),
        }
    }

    pub fn reads(&self) -> u64 {
        self.reads.get()
    }

    pub fn writes(&self) -> u64 {
        self.writes.get()
    }

    pub fn accesses(&self) -> u64 {
        self.reads.get() + self.writes.get()
    }
}

impl Store for CountingStore<'_> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn get(&self, i: usize) -> i64 {
        self.reads.set(self.reads.get() + 1);
        self.data[i - 1]
    }

    fn set(&mut self, i: usize, v: i64) {
        self.writes.set(self.writes.get() + 1);
        self.data[i - 1] = v;
    }
}

/// Wrapper that enforces a move-only contract: every value written must have
/// been read from the same array earlier. Used to certify pipelines that are
/// not allowed to rewrite keys, only relocate them.
pub struct GuardStore<'a> {
    data: &'a mut [i64],
    seen: HashSet<i64>,
    violations: u64,
}

impl<'a> GuardStore<'a> {
    pub fn new(data: &'a mut [i64]) -> Self {
        Self {
            data,
            seen: HashSet::new(),
            violations: 0,
        }
    }

    /// Number of writes whose value was never read from the array.
    pub fn violations(&self) -> u64 {
        self.violations
    }
}

impl Store for GuardStore<'_> {
    fn len(&self) -> usize {
        self.data.len()
    }

    fn get(&self, i: usize) -> i64 {
        // Interior mutability is deliberately avoided here; reads are
        // recorded lazily in `set` by consulting the current array content.
        self.data[i - 1]
    }

    fn set(&mut self, i: usize, v: i64) {
        // A value is legitimate if it was observable in the array at some
        // point. Track everything ever stored plus the initial content.
        if self.seen.is_empty() {
            for &x in self.data.iter() {
                self.seen.insert(x);
            }
        }
        if !self.seen.contains(&v) {
            self.violations += 1;
        }
        self.data[i - 1] = v;
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.data.swap(i - 1, j - 1);
    }
}
