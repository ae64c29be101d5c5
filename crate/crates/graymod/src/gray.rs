//! The distance-preserving Gray map from Z_2k onto length-k binary words,
//! together with its shift permutations and vector/mixed extensions.
//!
//! For a fixed k the map sends
//!
//! ```text
//! j       -> 0…0 1…1      (k - j zeros, then j ones)        for j < k
//! j + k   -> complement of the image of j                   for j < k
//! ```
//!
//! so for k = 2 the table is the classical quaternary Gray map
//! `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`. Images of cyclically consecutive
//! residues differ in exactly one bit, and the Hamming weight of the image
//! of `j` equals the Lee weight of `j`.
//!
//! Each residue `j` also carries the permutation `sigma(j, k)`: `j` cyclic
//! left shifts of the k positions. The pair realizes the group product
//! `image(i) XOR sigma(i)(image(j)) = image(i + j)`.

use std::collections::HashMap;

use crate::algebra::ZkVector;
use crate::error::{Error, Result};
use crate::word::{BinaryWord, Permutation};

/// Largest supported k for a single table (a word must fit in 64 bits).
pub const MAX_K: usize = 64;

/// The cached Gray table for one k: all 2k images and the inverse lookup.
#[derive(Debug, Clone)]
pub struct GrayTable {
    k: usize,
    entries: Vec<BinaryWord>,
    index: HashMap<BinaryWord, u32>,
}

impl GrayTable {
    pub fn new(k: usize) -> Result<Self> {
        if !(1..=MAX_K).contains(&k) {
            return Err(Error::OutOfRange(format!("k must be in 1..={MAX_K}, got {k}")));
        }
        let mut entries = Vec::with_capacity(2 * k);
        for j in 0..k {
            let mut w = BinaryWord::zero(k);
            for p in (k - j)..k {
                w.set_bit(p, true);
            }
            entries.push(w);
        }
        for j in 0..k {
            entries.push(entries[j].complement());
        }
        let index = entries
            .iter()
            .enumerate()
            .map(|(j, w)| (*w, j as u32))
            .collect();
        Ok(GrayTable { k, entries, index })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        2 * self.k as u32
    }

    /// The image of `j`.
    pub fn phi(&self, j: u32) -> Result<BinaryWord> {
        self.entries
            .get(j as usize)
            .copied()
            .ok_or_else(|| Error::OutOfRange(format!("{j} not in [0, {})", 2 * self.k)))
    }

    /// The unique preimage of `w`, if `w` is an image word.
    pub fn phi_inverse(&self, w: &BinaryWord) -> Result<u32> {
        if w.len() != self.k {
            return Err(Error::LengthMismatch(self.k, w.len()));
        }
        self.index
            .get(w)
            .copied()
            .ok_or_else(|| Error::NotInImage(w.to_string()))
    }

    pub fn entries(&self) -> &[BinaryWord] {
        &self.entries
    }

    /// Image of a vector: per-coordinate images concatenated in order.
    pub fn big_phi(&self, v: &ZkVector) -> Result<BinaryWord> {
        if v.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch(self.modulus(), v.modulus()));
        }
        let mut out = self.phi(v.coords()[0])?;
        for &c in &v.coords()[1..] {
            out = out.concat(&self.phi(c)?)?;
        }
        Ok(out)
    }

    /// Inverse of [`GrayTable::big_phi`]: splits `w` into length-k blocks and
    /// inverts each one.
    pub fn big_phi_inverse(&self, w: &BinaryWord) -> Result<ZkVector> {
        if !w.len().is_multiple_of(self.k) {
            return Err(Error::LengthMismatch(self.k, w.len()));
        }
        let n = w.len() / self.k;
        let mut coords = Vec::with_capacity(n);
        for r in 0..n {
            coords.push(self.phi_inverse(&w.slice(r * self.k, self.k))?);
        }
        ZkVector::new(self.modulus(), coords)
    }

    /// The permutation carried by the image of `v`: `sigma(j_r)` inside the
    /// r-th block of k positions. Blocks never mix.
    pub fn pi(&self, v: &ZkVector) -> Result<Permutation> {
        if v.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch(self.modulus(), v.modulus()));
        }
        let blocks: Vec<Permutation> =
            v.coords().iter().map(|&j| sigma(j, self.k)).collect();
        Ok(Permutation::block_diagonal(&blocks))
    }
}

/// `j` cyclic left shifts on `k` positions: the bit at position `p` moves to
/// position `p - j (mod k)`. The shift of order one is the cycle sending
/// position 0 to k-1, k-1 to k-2, …, 1 to 0; `sigma(j, k)` is its j-th power,
/// so only `j mod k` matters.
pub fn sigma(j: u32, k: usize) -> Permutation {
    assert!(k >= 1);
    let s = j as usize % k;
    Permutation::new((0..k).map(|p| (p + k - s) % k).collect()).expect("bijection")
}

/// Blockwise image of a mixed vector: each block is mapped through its own
/// modulus table and the binary blocks are concatenated in order.
pub fn mixed_phi(blocks: &[ZkVector]) -> Result<BinaryWord> {
    if blocks.is_empty() {
        return Err(Error::InvalidInput("mixed vector needs at least one block".into()));
    }
    let mut out: Option<BinaryWord> = None;
    for b in blocks {
        let table = GrayTable::new(b.half_modulus() as usize)?;
        let img = table.big_phi(b)?;
        out = Some(match out {
            None => img,
            Some(acc) => acc.concat(&img)?,
        });
    }
    Ok(out.expect("nonempty"))
}

/// Blockwise permutation of a mixed vector: `sigma(j)` on each coordinate's
/// segment, using that block's half-modulus as the segment length.
pub fn mixed_pi(blocks: &[ZkVector]) -> Result<Permutation> {
    if blocks.is_empty() {
        return Err(Error::InvalidInput("mixed vector needs at least one block".into()));
    }
    let mut parts = Vec::new();
    for b in blocks {
        let k = b.half_modulus() as usize;
        for &j in b.coords() {
            parts.push(sigma(j, k));
        }
    }
    Ok(Permutation::block_diagonal(&parts))
}
