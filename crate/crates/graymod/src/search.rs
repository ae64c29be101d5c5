//! Exhaustive enumeration of Gray maps from Z_r into length-m binary words
//! and the filters that single out the canonical one.
//!
//! A Gray map here is an injective image sequence whose cyclically
//! consecutive entries differ in exactly one bit. This module is the one
//! place where odd r is admitted: counting the maps that exist for odd r
//! (none) is part of what the searcher verifies.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gray::GrayTable;
use crate::word::{BinaryWord, Permutation};

/// Largest m the searcher enumerates over (the orbit computation walks all
/// m! coordinate permutations).
pub const MAX_SEARCH_M: usize = 6;

/// An injective sequence of r image words with cyclic unit steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CandidateGrayMap {
    pub r: usize,
    pub m: usize,
    pub images: Vec<BinaryWord>,
}

impl CandidateGrayMap {
    /// Validates injectivity and the cyclic adjacency condition.
    pub fn new(m: usize, images: Vec<BinaryWord>) -> Result<Self> {
        let r = images.len();
        if r < 2 {
            return Err(Error::InvalidInput("a Gray map needs r >= 2 images".into()));
        }
        for w in &images {
            if w.len() != m {
                return Err(Error::LengthMismatch(m, w.len()));
            }
        }
        for i in 0..r {
            for j in 0..i {
                if images[i] == images[j] {
                    return Err(Error::InvalidInput(format!(
                        "images {j} and {i} coincide ({})",
                        images[i]
                    )));
                }
            }
            let next = &images[(i + 1) % r];
            if images[i].distance(next)? != 1 {
                return Err(Error::InvalidInput(format!(
                    "images {i} and its successor differ in more than one bit"
                )));
            }
        }
        Ok(CandidateGrayMap { r, m, images })
    }

    /// The map with each image's coordinates permuted by `mu`.
    pub fn permute_coordinates(&self, mu: &Permutation) -> Result<CandidateGrayMap> {
        Ok(CandidateGrayMap {
            r: self.r,
            m: self.m,
            images: self
                .images
                .iter()
                .map(|w| mu.apply(w))
                .collect::<Result<_>>()?,
        })
    }

    /// Lexicographically least image sequence over all coordinate
    /// permutations: a canonical orbit representative.
    pub fn orbit_canonical_form(&self) -> Vec<BinaryWord> {
        (0..self.m)
            .permutations(self.m)
            .map(|images| {
                let mu = Permutation::new(images).expect("permutation of 0..m");
                self.permute_coordinates(&mu)
                    .expect("equal lengths")
                    .images
            })
            .min()
            .expect("at least the identity permutation")
    }
}

/// The table map for k, as a candidate: images in residue order.
pub fn canonical_map(k: usize) -> Result<CandidateGrayMap> {
    let table = GrayTable::new(k)?;
    CandidateGrayMap::new(k, table.entries().to_vec())
}

/// All Gray maps from Z_r into length-m words, by backtracking over image
/// sequences in lexicographic order. Returns the empty list when r exceeds
/// 2^m; fails with `LimitExceeded` once more than `limit` maps are found.
pub fn enumerate_gray_maps(r: usize, m: usize, limit: usize) -> Result<Vec<CandidateGrayMap>> {
    if r < 2 {
        return Err(Error::OutOfRange(format!("r must be >= 2, got {r}")));
    }
    if !(1..=MAX_SEARCH_M).contains(&m) {
        return Err(Error::OutOfRange(format!(
            "m must be in 1..={MAX_SEARCH_M}, got {m}"
        )));
    }
    if r > 1 << m {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut sequence: Vec<BinaryWord> = Vec::with_capacity(r);
    let mut used = vec![false; 1 << m];
    for first in BinaryWord::all(m) {
        sequence.push(first);
        used[first_index(&first)] = true;
        extend(r, m, &mut sequence, &mut used, &mut out, limit)?;
        used[first_index(&first)] = false;
        sequence.pop();
    }
    Ok(out)
}

fn first_index(w: &BinaryWord) -> usize {
    // the raw packing is a stable index into 0..2^m
    w.iter_bits()
        .enumerate()
        .map(|(p, b)| usize::from(b) << p)
        .sum()
}

fn extend(
    r: usize,
    m: usize,
    sequence: &mut Vec<BinaryWord>,
    used: &mut [bool],
    out: &mut Vec<CandidateGrayMap>,
    limit: usize,
) -> Result<()> {
    if sequence.len() == r {
        if sequence[r - 1].distance(&sequence[0])? == 1 {
            if out.len() >= limit {
                return Err(Error::LimitExceeded(limit));
            }
            out.push(CandidateGrayMap {
                r,
                m,
                images: sequence.clone(),
            });
        }
        return Ok(());
    }
    let last = sequence[sequence.len() - 1];
    let mut neighbors: Vec<BinaryWord> = (0..m).map(|p| last.with_flipped(p)).collect();
    neighbors.sort();
    for next in neighbors {
        let idx = first_index(&next);
        if !used[idx] {
            used[idx] = true;
            sequence.push(next);
            extend(r, m, sequence, used, out, limit)?;
            sequence.pop();
            used[idx] = false;
        }
    }
    Ok(())
}

/// The condition the uniqueness argument consumes: with the group product
/// transported from Z_r, `d(images[i], images[i+j]) = wt(images[j])` for all
/// i, j (indices mod r). Only even r carries the product.
pub fn is_hamming_compatible_map(cand: &CandidateGrayMap) -> Result<bool> {
    if !cand.r.is_multiple_of(2) {
        return Err(Error::ParityError(format!(
            "the transported product needs even r, got {}",
            cand.r
        )));
    }
    for i in 0..cand.r {
        for j in 0..cand.r {
            let d = cand.images[i].distance(&cand.images[(i + j) % cand.r])?;
            if d != cand.images[j].weight() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of orbits under coordinate permutation of the images.
pub fn orbit_count(maps: &[CandidateGrayMap]) -> usize {
    maps.iter()
        .map(CandidateGrayMap::orbit_canonical_form)
        .collect::<std::collections::BTreeSet<_>>()
        .len()
}

/// Counts from the exhaustive uniqueness search at r = 2k, m = k.
#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    pub r: usize,
    pub m: usize,
    pub total: usize,
    pub compatible: usize,
    pub orbits: usize,
    /// Whether the survivors are exactly the coordinate permutations of the
    /// table map, both inclusions checked extensionally.
    pub matches_canonical: bool,
    pub survivors: Vec<CandidateGrayMap>,
}

/// Enumerates all Gray maps at r = 2k, m = k, filters the compatible ones,
/// partitions them into coordinate-permutation orbits, and compares the
/// survivor set with the coordinate permutations of the table map.
pub fn uniqueness_report(k: usize, limit: usize) -> Result<UniquenessReport> {
    if !(1..=5).contains(&k) {
        return Err(Error::OutOfRange(format!("k must be in 1..=5, got {k}")));
    }
    let all = enumerate_gray_maps(2 * k, k, limit)?;
    let survivors: Vec<CandidateGrayMap> = all
        .iter()
        .filter(|cand| is_hamming_compatible_map(cand).expect("even r"))
        .cloned()
        .collect();
    let orbits = orbit_count(&survivors);

    let canonical = canonical_map(k)?;
    let expected: std::collections::BTreeSet<Vec<BinaryWord>> = (0..k)
        .permutations(k)
        .map(|images| {
            let mu = Permutation::new(images).expect("permutation of 0..k");
            canonical
                .permute_coordinates(&mu)
                .expect("equal lengths")
                .images
        })
        .collect();
    let found: std::collections::BTreeSet<Vec<BinaryWord>> =
        survivors.iter().map(|s| s.images.clone()).collect();

    Ok(UniquenessReport {
        r: 2 * k,
        m: k,
        total: all.len(),
        compatible: survivors.len(),
        orbits,
        matches_canonical: expected == found,
        survivors,
    })
}

/// Gray map counts for one odd r across image lengths 1..=m_max; the
/// expected count is zero everywhere.
#[derive(Debug, Clone, Serialize)]
pub struct ParityReport {
    pub r: usize,
    pub counts: Vec<ParityCount>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParityCount {
    pub m: usize,
    pub gray_maps: usize,
}

pub fn parity_report(r: usize, m_max: usize) -> Result<ParityReport> {
    if r.is_multiple_of(2) {
        return Err(Error::ParityError(format!(
            "parity counts are for odd r, got {r}"
        )));
    }
    if m_max > MAX_SEARCH_M {
        return Err(Error::OutOfRange(format!(
            "m_max must be <= {MAX_SEARCH_M}, got {m_max}"
        )));
    }
    let mut counts = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        counts.push(ParityCount {
            m,
            gray_maps: enumerate_gray_maps(r, m, usize::MAX)?.len(),
        });
    }
    Ok(ParityReport { r, counts })
}
