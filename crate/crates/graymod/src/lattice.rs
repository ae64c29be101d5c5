//! Codes spanned by generators inside a product of cyclic groups of even
//! order, their binary images, distance parameters, information rates and
//! minimal block types.
//!
//! A *shape* fixes the ambient product: an ordered list of blocks, each a
//! power of one even-order cyclic group. Vectors are stored flat, block
//! coordinates concatenated in declaration order.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::ZkVector;
use crate::error::{Error, Result};
use crate::gray::{mixed_phi, mixed_pi};
use crate::propelinear::PropelinearCode;
use crate::word::BinaryWord;

/// One block of the ambient product: `length` coordinates modulo `modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockShape {
    pub modulus: u32,
    pub length: usize,
}

/// The ordered block structure of the ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupShape {
    blocks: Vec<BlockShape>,
}

impl GroupShape {
    pub fn new(blocks: Vec<BlockShape>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidInput("shape needs at least one block".into()));
        }
        for b in &blocks {
            if b.modulus < 2 || b.modulus % 2 != 0 {
                return Err(Error::InvalidInput(format!(
                    "block modulus must be even and >= 2, got {}",
                    b.modulus
                )));
            }
            if b.length == 0 {
                return Err(Error::InvalidInput("block length must be >= 1".into()));
            }
        }
        Ok(GroupShape { blocks })
    }

    /// Single-block shape: n coordinates modulo 2k.
    pub fn single(modulus: u32, length: usize) -> Result<Self> {
        GroupShape::new(vec![BlockShape { modulus, length }])
    }

    pub fn blocks(&self) -> &[BlockShape] {
        &self.blocks
    }

    pub fn total_coords(&self) -> usize {
        self.blocks.iter().map(|b| b.length).sum()
    }

    /// Length of the binary image: half-modulus times length, summed.
    pub fn binary_length(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| (b.modulus as usize / 2) * b.length)
            .sum()
    }

    /// Order of the full ambient group.
    pub fn ambient_order(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| u128::from(b.modulus).pow(b.length as u32))
            .product()
    }

    /// Modulus of the flat coordinate at `idx`.
    pub fn coord_modulus(&self, idx: usize) -> u32 {
        let mut rem = idx;
        for b in &self.blocks {
            if rem < b.length {
                return b.modulus;
            }
            rem -= b.length;
        }
        panic!("coordinate index {idx} out of range");
    }

    /// Flat coordinate range of block `i`.
    pub fn block_coord_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..i].iter().map(|b| b.length).sum();
        start..start + self.blocks[i].length
    }

    /// Binary position range of block `i` in the image.
    pub fn block_binary_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..i]
            .iter()
            .map(|b| (b.modulus as usize / 2) * b.length)
            .sum();
        start..start + (self.blocks[i].modulus as usize / 2) * self.blocks[i].length
    }

    fn validate_coords(&self, coords: &[u32]) -> Result<()> {
        if coords.len() != self.total_coords() {
            return Err(Error::LengthMismatch(self.total_coords(), coords.len()));
        }
        for (idx, &c) in coords.iter().enumerate() {
            let m = self.coord_modulus(idx);
            if c >= m {
                return Err(Error::OutOfRange(format!(
                    "coordinate {idx} is {c}, must be in [0, {m})"
                )));
            }
        }
        Ok(())
    }

    /// Splits a flat coordinate vector into one vector per block.
    pub fn split(&self, coords: &[u32]) -> Result<Vec<ZkVector>> {
        self.validate_coords(coords)?;
        let mut out = Vec::with_capacity(self.blocks.len());
        for (i, b) in self.blocks.iter().enumerate() {
            let range = self.block_coord_range(i);
            out.push(ZkVector::new(b.modulus, coords[range].to_vec())?);
        }
        Ok(out)
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(idx, (x, y))| (x + y) % self.coord_modulus(idx))
            .collect()
    }

    fn lee_weight(&self, coords: &[u32]) -> u32 {
        coords
            .iter()
            .enumerate()
            .map(|(idx, &c)| {
                let m = self.coord_modulus(idx);
                c.min(m - c)
            })
            .sum()
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z{}^{}", b.modulus, b.length)?;
        }
        Ok(())
    }
}

/// Generators of a code inside a fixed shape; each generator is a flat
/// coordinate vector.
#[derive(Debug, Clone)]
pub struct GeneratorSpec {
    shape: GroupShape,
    generators: Vec<Vec<u32>>,
}

impl GeneratorSpec {
    pub fn new(shape: GroupShape, generators: Vec<Vec<u32>>) -> Result<Self> {
        for g in &generators {
            shape.validate_coords(g)?;
        }
        Ok(GeneratorSpec { shape, generators })
    }

    pub fn shape(&self) -> &GroupShape {
        &self.shape
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }
}

/// An ordered block type: the result of per-block modulus minimization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedGroupType {
    pub blocks: Vec<BlockShape>,
}

impl MixedGroupType {
    /// Binary length of the type: half-modulus times length, summed.
    pub fn binary_length(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| (b.modulus as usize / 2) * b.length)
            .sum()
    }

    /// True when every block modulus is among `allowed`.
    pub fn moduli_within(&self, allowed: &[u32]) -> bool {
        self.blocks.iter().all(|b| allowed.contains(&b.modulus))
    }
}

impl fmt::Display for MixedGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "Z{}^{}", b.modulus, b.length)?;
        }
        Ok(())
    }
}

/// How one block's modulus was reduced. `scale` divides every coordinate of
/// the block; dividing by it embeds the block in `Z_reduced_modulus`.
/// `evenness_restored` flags blocks whose natural reduction was odd and was
/// multiplied back to the smallest admissible even modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockReduction {
    pub block_index: usize,
    pub original_modulus: u32,
    pub reduced_modulus: u32,
    pub length: usize,
    pub scale: u32,
    pub evenness_restored: bool,
}

/// Per-block modulus minimization of a spanned code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeReduction {
    pub blocks: Vec<BlockReduction>,
}

impl TypeReduction {
    pub fn group_type(&self) -> MixedGroupType {
        MixedGroupType {
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockShape {
                    modulus: b.reduced_modulus,
                    length: b.length,
                })
                .collect(),
        }
    }
}

/// Information rates of a single-modulus code: `rate` over the Z_2k
/// alphabet, `rate_binary` over the binary image. The two are tied by
/// `rate_binary = (1 + log2 k) / k * rate`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct InfoRates {
    pub rate: f64,
    pub rate_binary: f64,
}

/// The additive closure of a generator set: a finite subgroup of the ambient
/// product, enumerated in lexicographic order.
#[derive(Debug, Clone)]
pub struct SpannedCode {
    shape: GroupShape,
    codewords: Vec<Vec<u32>>,
    decomposable: bool,
}

/// Default cap on closure size.
pub const DEFAULT_SIZE_LIMIT: usize = 1_000_000;

/// Spans the smallest subgroup containing all generators by breadth-first
/// closure from the zero vector. Fails with `SizeLimitExceeded` once the
/// closure grows past `size_limit`.
pub fn span(spec: &GeneratorSpec, size_limit: usize) -> Result<SpannedCode> {
    let shape = spec.shape().clone();
    let zero = vec![0u32; shape.total_coords()];
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(current) = frontier.pop() {
        for g in spec.generators() {
            let next = shape.add(&current, g);
            if seen.insert(next.clone()) {
                if seen.len() > size_limit {
                    return Err(Error::SizeLimitExceeded(size_limit));
                }
                frontier.push(next);
            }
        }
    }
    let codewords: Vec<Vec<u32>> = seen.into_iter().collect();
    let decomposable = product_of_projections(&shape, &codewords);
    Ok(SpannedCode {
        shape,
        codewords,
        decomposable,
    })
}

/// True when the code equals the product of its per-block projections.
fn product_of_projections(shape: &GroupShape, codewords: &[Vec<u32>]) -> bool {
    let mut product: u128 = 1;
    for i in 0..shape.blocks().len() {
        let range = shape.block_coord_range(i);
        let projection: BTreeSet<&[u32]> =
            codewords.iter().map(|w| &w[range.clone()]).collect();
        product = product.saturating_mul(projection.len() as u128);
    }
    product == codewords.len() as u128
}

impl SpannedCode {
    pub fn shape(&self) -> &GroupShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn codewords(&self) -> &[Vec<u32>] {
        &self.codewords
    }

    pub fn contains(&self, coords: &[u32]) -> bool {
        self.codewords.binary_search_by(|w| w.as_slice().cmp(coords)).is_ok()
    }

    /// Whether the code is the direct product of its block projections.
    pub fn is_decomposable(&self) -> bool {
        self.decomposable
    }

    /// The set of block-`i` parts appearing among codewords.
    pub fn block_projection(&self, i: usize) -> BTreeSet<Vec<u32>> {
        let range = self.shape.block_coord_range(i);
        self.codewords
            .iter()
            .map(|w| w[range.clone()].to_vec())
            .collect()
    }

    /// Minimum Lee weight over nonzero codewords; the code is a group, so
    /// this is the minimum Lee distance.
    pub fn min_lee_distance(&self) -> Result<u32> {
        if self.size() < 2 {
            return Err(Error::DegenerateCode(
                "minimum distance needs at least two codewords".into(),
            ));
        }
        Ok(self
            .codewords
            .iter()
            .filter(|w| w.iter().any(|&c| c != 0))
            .map(|w| self.shape.lee_weight(w))
            .min()
            .expect("nonzero codeword exists"))
    }

    /// Binary image of one codeword.
    pub fn binary_word(&self, coords: &[u32]) -> Result<BinaryWord> {
        mixed_phi(&self.shape.split(coords)?)
    }

    /// Binary images of all codewords, in codeword order.
    pub fn binary_words(&self) -> Result<Vec<BinaryWord>> {
        self.codewords.iter().map(|w| self.binary_word(w)).collect()
    }

    /// Minimum Hamming weight over nonzero image words; equals the minimum
    /// Hamming distance of the image since the image is a group code.
    pub fn min_hamming_distance_binary(&self) -> Result<u32> {
        if self.size() < 2 {
            return Err(Error::DegenerateCode(
                "minimum distance needs at least two codewords".into(),
            ));
        }
        let mut best = u32::MAX;
        for w in &self.codewords {
            if w.iter().any(|&c| c != 0) {
                best = best.min(self.binary_word(w)?.weight());
            }
        }
        Ok(best)
    }

    /// Information rates; defined for single-block codes only.
    pub fn info_rates(&self) -> Result<InfoRates> {
        if self.shape.blocks().len() != 1 {
            return Err(Error::InvalidInput(
                "information rates are defined for single-modulus codes".into(),
            ));
        }
        if self.size() < 1 {
            return Err(Error::DegenerateCode("empty code has no rate".into()));
        }
        let block = self.shape.blocks()[0];
        let n = block.length as f64;
        let k = f64::from(block.modulus / 2);
        let log2_n_words = (self.size() as f64).log2();
        Ok(InfoRates {
            rate: log2_n_words / (n * f64::from(block.modulus).log2()),
            rate_binary: log2_n_words / (k * n),
        })
    }

    /// Per-block modulus minimization: divide out the gcd of all block
    /// coordinates with the modulus; if the quotient is odd, multiply back
    /// by two (the smallest factor restoring evenness).
    pub fn minimize_type(&self) -> TypeReduction {
        let blocks = self
            .shape
            .blocks()
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let range = self.shape.block_coord_range(i);
                let mut t = b.modulus;
                for w in &self.codewords {
                    for &c in &w[range.clone()] {
                        t = gcd(t, c);
                    }
                }
                let mut reduced = b.modulus / t;
                let mut scale = t;
                let evenness_restored = reduced % 2 != 0;
                if evenness_restored {
                    reduced *= 2;
                    scale /= 2;
                }
                BlockReduction {
                    block_index: i,
                    original_modulus: b.modulus,
                    reduced_modulus: reduced,
                    length: b.length,
                    scale,
                    evenness_restored,
                }
            })
            .collect();
        TypeReduction { blocks }
    }

    /// The binary image together with its per-codeword permutations: shift
    /// by the coordinate value inside each coordinate's segment.
    pub fn propelinear_image(&self) -> Result<PropelinearCode> {
        let mut assignments = Vec::with_capacity(self.size());
        for w in &self.codewords {
            let parts = self.shape.split(w)?;
            assignments.push((mixed_phi(&parts)?, mixed_pi(&parts)?));
        }
        PropelinearCode::new(assignments)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
