//! Packed bit sequences: the explicit characteristic function and the
//! caller-provided scratch bitmap required by bit-tagged inversion.

/// A length-n scratch bitmap, zeroed on entry and on exit of every
/// operation that borrows it.
#[derive(Debug, Clone)]
pub struct BitScratch {
    words: Vec<u64>,
    len: usize,
}

impl BitScratch {
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit for 1-based position `i`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        let b = i - 1;
        (self.words[b / 64] >> (b % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        let b = i - 1;
        self.words[b / 64] |= 1 << (b % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        let b = i - 1;
        self.words[b / 64] &= !(1 << (b % 64));
    }

    pub fn is_zeroed(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn zero(&mut self) {
        self.words.fill(0);
    }
}

/// Explicit characteristic function: one bit per position, set exactly at
/// the tagged (fixed) entries of the object it annotates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicBits {
    bits: BitScratch,
}

impl CharacteristicBits {
    pub fn new(len: usize) -> Self {
        Self {
            bits: BitScratch::new(len),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits.get(i)
    }

    pub fn set(&mut self, i: usize, on: bool) {
        if on {
            self.bits.set(i);
        } else {
            self.bits.clear(i);
        }
    }

    /// Number of set bits; equals the degree of the annotated object.
    pub fn popcount(&self) -> usize {
        self.bits.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl PartialEq for BitScratch {
    fn eq(&self, other: &Self) -> bool {
        self.len == other.len && self.words == other.words
    }
}

impl Eq for BitScratch {}
