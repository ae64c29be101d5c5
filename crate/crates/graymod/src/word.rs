//! Binary words of fixed length and coordinate permutations acting on them.
//!
//! Words are written leftmost position first; a serialized word like `0111`
//! has a `0` in position 0. Lengths are capped at 64 so a word fits in one
//! machine word.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Maximum supported word length.
pub const MAX_WORD_LEN: usize = 64;

/// A fixed-length vector over {0,1} with XOR as the group operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    len: usize,
    bits: u64,
}

impl BinaryWord {
    /// The all-zero word of the given length.
    pub fn zero(len: usize) -> Self {
        assert!((1..=MAX_WORD_LEN).contains(&len), "word length out of range");
        BinaryWord { len, bits: 0 }
    }

    /// Builds a word from its bits, leftmost first.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let mut len = 0;
        let mut packed = 0u64;
        for (p, b) in bits.into_iter().enumerate() {
            if p >= MAX_WORD_LEN {
                return Err(Error::OutOfRange(format!(
                    "word longer than {MAX_WORD_LEN} bits"
                )));
            }
            if b {
                packed |= 1 << p;
            }
            len = p + 1;
        }
        if len == 0 {
            return Err(Error::OutOfRange("empty word".into()));
        }
        Ok(BinaryWord { len, bits: packed })
    }

    /// Parses a string of `0`/`1` characters, leftmost position first.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::InvalidInput(format!(
                        "invalid bit character {other:?} in {s:?}"
                    )))
                }
            }
        }
        Self::from_bits(bits)
    }

    /// The word of length `len` whose bit pattern is the binary expansion of
    /// `index`, most significant bit leftmost. Enumerating `0..2^len` yields
    /// all words in lexicographic order.
    pub fn from_lex_index(index: u64, len: usize) -> Self {
        assert!((1..=MAX_WORD_LEN).contains(&len));
        assert!(len == 64 || index < (1u64 << len));
        let mut w = BinaryWord::zero(len);
        for p in 0..len {
            if (index >> (len - 1 - p)) & 1 == 1 {
                w.bits |= 1 << p;
            }
        }
        w
    }

    /// Iterates over all words of the given length in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BinaryWord> {
        assert!((1..MAX_WORD_LEN).contains(&len));
        (0..1u64 << len).map(move |i| BinaryWord::from_lex_index(i, len))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// The bit at position `p`, leftmost position being 0.
    pub fn bit(&self, p: usize) -> bool {
        assert!(p < self.len);
        (self.bits >> p) & 1 == 1
    }

    pub fn set_bit(&mut self, p: usize, value: bool) {
        assert!(p < self.len);
        if value {
            self.bits |= 1 << p;
        } else {
            self.bits &= !(1 << p);
        }
    }

    /// A copy with the bit at `p` flipped.
    pub fn with_flipped(&self, p: usize) -> Self {
        assert!(p < self.len);
        BinaryWord {
            len: self.len,
            bits: self.bits ^ (1 << p),
        }
    }

    /// Number of ones.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinatewise XOR.
    pub fn xor(&self, other: &BinaryWord) -> Result<BinaryWord> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len, other.len));
        }
        Ok(BinaryWord {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    /// Hamming distance: the number of positions where the words differ.
    pub fn distance(&self, other: &BinaryWord) -> Result<u32> {
        Ok(self.xor(other)?.weight())
    }

    /// All bits flipped.
    pub fn complement(&self) -> BinaryWord {
        let mask = if self.len == 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        };
        BinaryWord {
            len: self.len,
            bits: self.bits ^ mask,
        }
    }

    /// Concatenation, `self` occupying the leftmost positions.
    pub fn concat(&self, other: &BinaryWord) -> Result<BinaryWord> {
        let len = self.len + other.len;
        if len > MAX_WORD_LEN {
            return Err(Error::OutOfRange(format!(
                "concatenation of {} and {} bits exceeds {MAX_WORD_LEN}",
                self.len, other.len
            )));
        }
        Ok(BinaryWord {
            len,
            bits: self.bits | (other.bits << self.len),
        })
    }

    /// The sub-word covering positions `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> BinaryWord {
        assert!(len >= 1 && start + len <= self.len);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        BinaryWord {
            len,
            bits: (self.bits >> start) & mask,
        }
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |p| self.bit(p))
    }

    /// Key under which lexicographic word order equals integer order.
    fn lex_key(&self) -> u64 {
        self.bits.reverse_bits() >> (64 - self.len)
    }

    /// Packed bits, position p at bit p. Stable index into 0..2^len tables.
    pub(crate) fn raw_bits(&self) -> u64 {
        self.bits
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then(self.lex_key().cmp(&other.lex_key()))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter_bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A bijection on coordinate positions `0..n`.
///
/// `images[p]` is the destination of position `p`; applying a permutation to
/// a word moves the bit at `p` to `images[p]`. Composition `a.compose(&b)`
/// applies `b` first, then `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty permutation".into()));
        }
        let mut seen = vec![false; n];
        for &q in &images {
            if q >= n || seen[q] {
                return Err(Error::InvalidInput(format!(
                    "images {images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[q] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds the permutation from a single cycle `(c_0 c_1 … c_t)`,
    /// sending `c_0` to `c_1`, …, `c_t` back to `c_0`.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &p) in cycle.iter().enumerate() {
            if p >= n {
                return Err(Error::OutOfRange(format!("cycle entry {p} >= {n}")));
            }
            images[p] = cycle[(i + 1) % cycle.len()];
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Destination of position `p`.
    pub fn image_of(&self, p: usize) -> usize {
        self.images[p]
    }

    /// Applies the permutation to a word: the output has `w[p]` at `images[p]`.
    pub fn apply(&self, w: &BinaryWord) -> Result<BinaryWord> {
        if w.len() != self.images.len() {
            return Err(Error::LengthMismatch(self.images.len(), w.len()));
        }
        let mut out = BinaryWord::zero(w.len());
        for p in 0..w.len() {
            if w.bit(p) {
                out.set_bit(self.images[p], true);
            }
        }
        Ok(out)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(Permutation {
            images: (0..self.len())
                .map(|p| self.images[other.images[p]])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Permutation { images }
    }

    /// The `e`-th power under composition (`e = 0` gives the identity).
    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.len());
        for _ in 0..e {
            acc = self.compose(&acc).expect("equal lengths");
        }
        acc
    }

    /// Block-diagonal assembly: each permutation acts inside its own block of
    /// consecutive positions, blocks in the given order.
    pub fn block_diagonal(blocks: &[Permutation]) -> Permutation {
        let mut images = Vec::new();
        let mut offset = 0;
        for b in blocks {
            images.extend(b.images.iter().map(|&q| q + offset));
            offset += b.len();
        }
        Permutation { images }
    }
}
