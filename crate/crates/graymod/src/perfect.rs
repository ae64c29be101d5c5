//! 1-perfectness of binary codes and the structural obstruction that rules
//! out perfect images of codes with a block modulus above 4.
//!
//! A binary code of length n is 1-perfect when every ambient word lies
//! within Hamming distance 1 of exactly one codeword; equivalently, the
//! minimum distance is at least 3 and `N * (n + 1) = 2^n`. The criteria
//! path decides from those two facts; a direct covering scan is available
//! as a cross-check for n <= 24.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::SpannedCode;
use crate::word::BinaryWord;

/// Codes at most this large get the exact pairwise minimum-distance scan;
/// larger codes must contain zero and use the minimum nonzero weight, which
/// agrees for group codes.
const PAIRWISE_CAP: usize = 4096;

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PerfectnessWitness {
    /// Two codewords closer than distance 3.
    ClosePair {
        a: BinaryWord,
        b: BinaryWord,
        distance: u32,
    },
    /// An ambient word covered by the wrong number of radius-1 balls.
    CoverageDefect { word: BinaryWord, covered_by: usize },
}

/// Verdict and evidence for the 1-perfectness of a binary code.
#[derive(Debug, Clone, Serialize)]
pub struct PerfectnessReport {
    pub code_size: usize,
    pub length: usize,
    pub sphere_packing_holds: bool,
    /// Minimum distance; absent for single-word codes (no pairs).
    pub min_distance: Option<u32>,
    pub covering_radius_checked: bool,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PerfectnessWitness>,
}

fn validate_code(words: &[BinaryWord]) -> Result<usize> {
    let first = words.first().ok_or(Error::EmptyCode)?;
    let n = first.len();
    for w in words {
        if w.len() != n {
            return Err(Error::LengthMismatch(n, w.len()));
        }
    }
    // distinctness scan skipped for very large codes
    if words.len() <= 1 << 20 {
        let distinct: BTreeSet<&BinaryWord> = words.iter().collect();
        if distinct.len() != words.len() {
            return Err(Error::InvalidInput("duplicate codewords".into()));
        }
    }
    Ok(n)
}

fn min_distance(words: &[BinaryWord]) -> Result<Option<(u32, BinaryWord, BinaryWord)>> {
    if words.len() < 2 {
        return Ok(None);
    }
    if words.len() <= PAIRWISE_CAP {
        let mut best: Option<(u32, BinaryWord, BinaryWord)> = None;
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let d = a.distance(b)?;
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, *a, *b));
                }
            }
        }
        Ok(best)
    } else {
        // group-code fast path: distances from zero are the nonzero weights
        let n = words[0].len();
        let zero = BinaryWord::zero(n);
        if !words.iter().any(|w| w.is_zero()) {
            return Err(Error::InvalidInput(
                "codes beyond the pairwise cap must contain the all-zero word".into(),
            ));
        }
        let (w, d) = words
            .iter()
            .filter(|w| !w.is_zero())
            .map(|w| (w, w.weight()))
            .min_by_key(|&(_, d)| d)
            .expect("len >= 2");
        Ok(Some((d, zero, *w)))
    }
}

/// Decides 1-perfectness from the minimum distance and the sphere-packing
/// count.
pub fn is_one_perfect(words: &[BinaryWord]) -> Result<PerfectnessReport> {
    let n = validate_code(words)?;
    let packing_holds =
        (words.len() as u128) * (n as u128 + 1) == 1u128 << n;
    let min_d = min_distance(words)?;
    let distance_ok = min_d.is_none_or(|(d, _, _)| d >= 3);
    let witness = match min_d {
        Some((d, a, b)) if d < 3 => Some(PerfectnessWitness::ClosePair { a, b, distance: d }),
        _ => None,
    };
    Ok(PerfectnessReport {
        code_size: words.len(),
        length: n,
        sphere_packing_holds: packing_holds,
        min_distance: min_d.map(|(d, _, _)| d),
        covering_radius_checked: false,
        verdict: packing_holds && distance_ok,
        witness,
    })
}

/// Largest length admitted by the direct covering scan.
pub const COVERING_SCAN_MAX_LEN: usize = 24;

/// Like [`is_one_perfect`], additionally scanning the whole ambient space
/// and verifying that every word is covered by exactly one radius-1 ball.
/// The scan verdict always agrees with the criteria verdict; when it finds a
/// defect it supplies the witness.
pub fn is_one_perfect_with_covering(words: &[BinaryWord]) -> Result<PerfectnessReport> {
    let mut report = is_one_perfect(words)?;
    let n = report.length;
    if n > COVERING_SCAN_MAX_LEN {
        return Err(Error::OutOfRange(format!(
            "covering scan supports length <= {COVERING_SCAN_MAX_LEN}, got {n}"
        )));
    }
    let mut counts = vec![0u8; 1 << n];
    for w in words {
        counts[w.raw_bits() as usize] = counts[w.raw_bits() as usize].saturating_add(1);
        for p in 0..n {
            let idx = w.with_flipped(p).raw_bits() as usize;
            counts[idx] = counts[idx].saturating_add(1);
        }
    }
    let defect = counts.iter().position(|&c| c != 1);
    report.covering_radius_checked = true;
    debug_assert_eq!(report.verdict, defect.is_none());
    if report.witness.is_none() {
        if let Some(idx) = defect {
            let mut word = BinaryWord::zero(n);
            for p in 0..n {
                if (idx >> p) & 1 == 1 {
                    word.set_bit(p, true);
                }
            }
            report.witness = Some(PerfectnessWitness::CoverageDefect {
                word,
                covered_by: counts[idx] as usize,
            });
        }
    }
    Ok(report)
}

/// The binary Hamming code of redundancy r: all words of length `2^r - 1`
/// whose positions, read as integers 1..=n, XOR to zero over the set
/// positions. `2^(n - r)` codewords with minimum distance 3.
pub fn hamming_code(r: u32) -> Result<Vec<BinaryWord>> {
    if !(2..=5).contains(&r) {
        return Err(Error::OutOfRange(format!(
            "hamming code supported for r in 2..=5, got {r}"
        )));
    }
    let n = (1usize << r) - 1;
    let message_positions: Vec<usize> =
        (1..=n).filter(|p| !p.is_power_of_two()).collect();
    let mut words = Vec::with_capacity(1 << message_positions.len());
    for msg in 0u32..1 << message_positions.len() {
        let mut word = BinaryWord::zero(n);
        let mut syndrome = 0usize;
        for (bit, &p) in message_positions.iter().enumerate() {
            if (msg >> bit) & 1 == 1 {
                word.set_bit(p - 1, true);
                syndrome ^= p;
            }
        }
        for i in 0..r {
            if (syndrome >> i) & 1 == 1 {
                word.set_bit((1usize << i) - 1, true);
            }
        }
        words.push(word);
    }
    Ok(words)
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ObstructionCase {
    /// A word supported on both ends of a large segment: no codeword of
    /// weight at least 3 lies within distance 1 of it.
    UncoverableWord {
        witness: BinaryWord,
        nearest_admissible_distance: Option<u32>,
    },
    /// Two words each forcing a unique admissible neighbor; the neighbors
    /// sit at distance 2, which no code of minimum distance 3 allows.
    ForcedClosePair {
        u: BinaryWord,
        v: BinaryWord,
        u_neighbors: Vec<BinaryWord>,
        v_neighbors: Vec<BinaryWord>,
        #[serde(skip_serializing_if = "Option::is_none")]
        neighbor_distance: Option<u32>,
    },
}

/// Why a code whose type keeps a modulus of 6 or more cannot be 1-perfect.
#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    /// Flat index of the coordinate carrying the obstruction.
    pub coordinate: usize,
    /// Declared modulus of that coordinate.
    pub modulus: u32,
    pub case: ObstructionCase,
}

impl ObstructionReport {
    /// True when the recorded evidence rules out 1-perfectness.
    pub fn valid(&self) -> bool {
        match &self.case {
            ObstructionCase::UncoverableWord {
                nearest_admissible_distance,
                ..
            } => nearest_admissible_distance.is_none_or(|d| d >= 2),
            ObstructionCase::ForcedClosePair {
                u_neighbors,
                v_neighbors,
                neighbor_distance,
                ..
            } => {
                u_neighbors.len() == 1
                    && v_neighbors.len() == 1
                    && neighbor_distance.is_some_and(|d| d < 3)
            }
        }
    }
}

fn coordinate_reduced_modulus(code: &SpannedCode, idx: usize) -> u32 {
    let modulus = code.shape().coord_modulus(idx);
    let mut t = modulus;
    for w in code.codewords() {
        t = gcd(t, w[idx]);
    }
    let reduced = modulus / t;
    if !reduced.is_multiple_of(2) {
        reduced * 2
    } else {
        reduced
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Binary position range of flat coordinate `idx`.
fn coordinate_binary_range(code: &SpannedCode, idx: usize) -> std::ops::Range<usize> {
    let shape = code.shape();
    let mut coord = idx;
    for (i, b) in shape.blocks().iter().enumerate() {
        if coord < b.length {
            let start = shape.block_binary_range(i).start + coord * (b.modulus as usize / 2);
            return start..start + b.modulus as usize / 2;
        }
        coord -= b.length;
    }
    unreachable!("coordinate index checked by caller");
}

/// True when every coordinate segment of `w` is a valid image word for its
/// modulus.
fn blockwise_valid(code: &SpannedCode, w: &BinaryWord) -> bool {
    let shape = code.shape();
    for idx in 0..shape.total_coords() {
        let range = coordinate_binary_range(code, idx);
        let seg = w.slice(range.start, range.end - range.start);
        let k = seg.len();
        // image words are 0^a 1^b or their complements: at most one 01 and
        // one 10 transition, arranged as a suffix run or a prefix run
        let mut valid = false;
        for j in 0..=k {
            let mut cand = BinaryWord::zero(k);
            for p in (k - j)..k {
                cand.set_bit(p, true);
            }
            if seg == cand || seg == cand.complement() {
                valid = true;
                break;
            }
        }
        if !valid {
            return false;
        }
    }
    true
}

/// Words of weight at least 3 that every 1-perfect code of this shape could
/// contain, within distance 1 of `w`.
fn admissible_neighbors(code: &SpannedCode, w: &BinaryWord) -> Vec<BinaryWord> {
    let mut out = Vec::new();
    let mut push_if_admissible = |cand: BinaryWord| {
        if cand.weight() >= 3 && blockwise_valid(code, &cand) {
            out.push(cand);
        }
    };
    push_if_admissible(*w);
    for p in 0..w.len() {
        push_if_admissible(w.with_flipped(p));
    }
    out.sort();
    out
}

/// Reproduces the nonexistence argument on a concrete code whose type keeps
/// a coordinate modulus of 6 or more.
///
/// For a declared modulus above 6 the word with both segment ends set has no
/// admissible codeword within distance 1. For modulus exactly 6 with the
/// full cyclic group on the coordinate, two padded words each force a unique
/// admissible neighbor and the two neighbors collide at distance 2. Returns
/// `NotApplicable` when no coordinate qualifies (every large block reduces
/// to modulus 2 or 4) or when the code is not a product of its projections.
pub fn large_modulus_obstruction(code: &SpannedCode) -> Result<ObstructionReport> {
    if !code.is_decomposable() {
        return Err(Error::NotApplicable(
            "code is not the product of its block projections".into(),
        ));
    }
    let shape = code.shape();
    let target = (0..shape.total_coords()).find(|&idx| {
        shape.coord_modulus(idx) >= 6 && coordinate_reduced_modulus(code, idx) >= 6
    });
    let Some(idx) = target else {
        return Err(Error::NotApplicable(
            "no coordinate keeps a modulus of 6 or more after reduction".into(),
        ));
    };

    let modulus = shape.coord_modulus(idx);
    let seg = coordinate_binary_range(code, idx);
    let n = shape.binary_length();
    let image = code.binary_words()?;

    if modulus > 6 {
        // both ends of the segment set, zero elsewhere
        let mut x = BinaryWord::zero(n);
        x.set_bit(seg.start, true);
        x.set_bit(seg.end - 1, true);
        let nearest = image
            .iter()
            .filter(|w| w.weight() >= 3)
            .map(|w| w.distance(&x).expect("equal lengths"))
            .min();
        return Ok(ObstructionReport {
            coordinate: idx,
            modulus,
            case: ObstructionCase::UncoverableWord {
                witness: x,
                nearest_admissible_distance: nearest,
            },
        });
    }

    // modulus 6: does the coordinate carry the full cyclic group?
    let full: BTreeSet<u32> = code.codewords().iter().map(|w| w[idx]).collect();
    if full.len() < 6 {
        // proper subgroup keeping modulus 6 ({0,2,4}): the segment word 101
        // has no weight-3 codeword within distance 1
        let mut x = BinaryWord::zero(n);
        x.set_bit(seg.start, true);
        x.set_bit(seg.start + 2, true);
        let nearest = image
            .iter()
            .filter(|w| w.weight() >= 3)
            .map(|w| w.distance(&x).expect("equal lengths"))
            .min();
        return Ok(ObstructionReport {
            coordinate: idx,
            modulus,
            case: ObstructionCase::UncoverableWord {
                witness: x,
                nearest_admissible_distance: nearest,
            },
        });
    }

    // full cyclic group on the coordinate: pad the 101 segment with outside
    // positions where a lone bit is still a valid image segment (the bare
    // segment word itself forces a unique neighbor too, so one outside
    // position is enough)
    let mut base = BinaryWord::zero(n);
    base.set_bit(seg.start, true);
    base.set_bit(seg.start + 2, true);
    let mut outside = (0..n).filter(|&p| {
        if seg.contains(&p) {
            return false;
        }
        let mut lone = BinaryWord::zero(n);
        lone.set_bit(p, true);
        blockwise_valid(code, &lone)
    });
    let (u, v) = match (outside.next(), outside.next()) {
        (Some(p1), Some(p2)) => (base.with_flipped(p1), base.with_flipped(p2)),
        (Some(p1), None) => (base.with_flipped(p1), base),
        (None, _) => {
            return Err(Error::NotApplicable(
                "the forced-pair construction needs a binary position outside the segment".into(),
            ))
        }
    };
    let u_neighbors = admissible_neighbors(code, &u);
    let v_neighbors = admissible_neighbors(code, &v);
    let neighbor_distance = match (u_neighbors.as_slice(), v_neighbors.as_slice()) {
        ([a], [b]) => Some(a.distance(b).expect("equal lengths")),
        _ => None,
    };
    Ok(ObstructionReport {
        coordinate: idx,
        modulus,
        case: ObstructionCase::ForcedClosePair {
            u,
            v,
            u_neighbors,
            v_neighbors,
            neighbor_distance,
        },
    })
}

/// Binary and quaternary coordinate counts of a type whose moduli all lie
/// in {2, 4}.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TypeParams {
    pub binary_coords: usize,
    pub quaternary_coords: usize,
}

/// Joint perfectness verdict and minimized type, with the structural
/// consequence checked: a 1-perfect image must minimize to moduli 2 and 4
/// only.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub perfectness: PerfectnessReport,
    pub minimized_type: crate::lattice::MixedGroupType,
    pub decomposable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type_params: Option<TypeParams>,
    /// Set when a 1-perfect decomposable code keeps a modulus outside
    /// {2, 4}; the test suite treats this as a build-stopping error.
    pub theorem_violation: bool,
}

/// Runs the perfectness test on the binary image and, when it passes,
/// checks that the minimized type stays within moduli {2, 4}.
pub fn classify_if_perfect(code: &SpannedCode) -> Result<Classification> {
    let words = code.binary_words()?;
    let n = code.shape().binary_length();
    let perfectness = if n <= 20 {
        is_one_perfect_with_covering(&words)?
    } else {
        is_one_perfect(&words)?
    };
    let minimized = code.minimize_type().group_type();
    let within = minimized.moduli_within(&[2, 4]);
    let type_params = if perfectness.verdict && within {
        Some(TypeParams {
            binary_coords: minimized
                .blocks
                .iter()
                .filter(|b| b.modulus == 2)
                .map(|b| b.length)
                .sum(),
            quaternary_coords: minimized
                .blocks
                .iter()
                .filter(|b| b.modulus == 4)
                .map(|b| b.length)
                .sum(),
        })
    } else {
        None
    };
    Ok(Classification {
        theorem_violation: perfectness.verdict && code.is_decomposable() && !within,
        perfectness,
        minimized_type: minimized,
        decomposable: code.is_decomposable(),
        type_params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{span, BlockShape, GeneratorSpec, GroupShape, DEFAULT_SIZE_LIMIT};

    fn w(s: &str) -> BinaryWord {
        BinaryWord::parse(s).unwrap()
    }

    /// Independent covering oracle: count codewords within distance 1 of
    /// every ambient word by direct distance evaluation.
    fn covering_oracle(words: &[BinaryWord]) -> bool {
        let n = words[0].len();
        BinaryWord::all(n).all(|v| {
            words
                .iter()
                .filter(|c| c.distance(&v).unwrap() <= 1)
                .count()
                == 1
        })
    }

    fn spanned(blocks: &[(u32, usize)], gens: &[&[u32]]) -> SpannedCode {
        let shape = GroupShape::new(
            blocks
                .iter()
                .map(|&(modulus, length)| BlockShape { modulus, length })
                .collect(),
        )
        .unwrap();
        let spec =
            GeneratorSpec::new(shape, gens.iter().map(|g| g.to_vec()).collect()).unwrap();
        span(&spec, DEFAULT_SIZE_LIMIT).unwrap()
    }

    #[test]
    fn hamming_code_parameters() {
        let h2 = hamming_code(2).unwrap();
        assert_eq!(h2, vec![w("000"), w("111")]);

        let h3 = hamming_code(3).unwrap();
        assert_eq!(h3.len(), 16);
        let mut min_d = u32::MAX;
        for (i, a) in h3.iter().enumerate() {
            for b in &h3[i + 1..] {
                min_d = min_d.min(a.distance(b).unwrap());
            }
        }
        assert_eq!(min_d, 3);

        let h4 = hamming_code(4).unwrap();
        assert_eq!(h4.len(), 2048);
        assert_eq!(h4.len() * 16, 1 << 15);

        assert!(hamming_code(1).is_err());
        assert!(hamming_code(6).is_err());
    }

    #[test]
    fn hamming_codes_are_one_perfect() {
        for r in 2..=4u32 {
            let code = hamming_code(r).unwrap();
            let report = is_one_perfect(&code).unwrap();
            assert!(report.verdict, "r={r}");
            assert!(report.sphere_packing_holds);
            assert_eq!(report.min_distance, Some(3));
        }
    }

    #[test]
    fn covering_scan_agrees_with_criteria() {
        for r in 2..=3u32 {
            let code = hamming_code(r).unwrap();
            let report = is_one_perfect_with_covering(&code).unwrap();
            assert!(report.verdict && report.covering_radius_checked);
            assert!(covering_oracle(&code));
        }
        // negative case with a coverage witness
        let trivial = vec![BinaryWord::zero(4)];
        let report = is_one_perfect_with_covering(&trivial).unwrap();
        assert!(!report.verdict);
        assert!(!report.sphere_packing_holds);
        assert!(matches!(
            report.witness,
            Some(PerfectnessWitness::CoverageDefect { .. })
        ));
        assert!(!covering_oracle(&trivial));
    }

    #[test]
    fn repetition_image_is_one_perfect() {
        let code = spanned(&[(6, 1)], &[&[3]]);
        let words = code.binary_words().unwrap();
        assert_eq!(words, vec![w("000"), w("111")]);
        let report = is_one_perfect_with_covering(&words).unwrap();
        assert!(report.verdict);
        assert!(covering_oracle(&words));
    }

    #[test]
    fn trivial_code_is_not_perfect() {
        for n in [2usize, 5, 10] {
            let report = is_one_perfect(&[BinaryWord::zero(n)]).unwrap();
            assert!(!report.verdict);
            assert!(!report.sphere_packing_holds);
            assert_eq!(report.min_distance, None);
        }
        assert!(matches!(is_one_perfect(&[]), Err(Error::EmptyCode)));
    }

    #[test]
    fn close_pair_witness() {
        let words = vec![w("0000"), w("0011")];
        let report = is_one_perfect(&words).unwrap();
        assert!(!report.verdict);
        match report.witness {
            Some(PerfectnessWitness::ClosePair { distance, .. }) => assert_eq!(distance, 2),
            other => panic!("expected close pair, got {other:?}"),
        }
    }

    #[test]
    fn obstruction_full_z6_with_zero_tails() {
        let code = spanned(&[(6, 1), (2, 4)], &[&[1, 0, 0, 0, 0]]);
        let report = large_modulus_obstruction(&code).unwrap();
        assert_eq!(report.coordinate, 0);
        assert_eq!(report.modulus, 6);
        match &report.case {
            ObstructionCase::ForcedClosePair {
                u,
                v,
                u_neighbors,
                v_neighbors,
                neighbor_distance,
            } => {
                assert_eq!(*u, w("1011000"));
                assert_eq!(*v, w("1010100"));
                assert_eq!(u_neighbors, &vec![w("1111000")]);
                assert_eq!(v_neighbors, &vec![w("1110100")]);
                assert_eq!(*neighbor_distance, Some(2));
            }
            other => panic!("expected forced pair, got {other:?}"),
        }
        assert!(report.valid());
        assert!(!is_one_perfect(&code.binary_words().unwrap()).unwrap().verdict);
    }

    #[test]
    fn obstruction_modulus_eight() {
        let code = spanned(&[(8, 1)], &[&[1]]);
        let report = large_modulus_obstruction(&code).unwrap();
        match &report.case {
            ObstructionCase::UncoverableWord {
                witness,
                nearest_admissible_distance,
            } => {
                assert_eq!(*witness, w("1001"));
                assert_eq!(*nearest_admissible_distance, Some(2));
            }
            other => panic!("expected uncoverable word, got {other:?}"),
        }
        assert!(report.valid());
    }

    #[test]
    fn obstruction_modulus_twelve_with_tail() {
        let code = spanned(&[(12, 1), (2, 2)], &[&[1, 0, 0], &[0, 1, 0]]);
        let report = large_modulus_obstruction(&code).unwrap();
        assert_eq!(report.modulus, 12);
        assert!(report.valid());
        assert!(!is_one_perfect(&code.binary_words().unwrap()).unwrap().verdict);
    }

    #[test]
    fn obstruction_proper_subgroup_of_z6() {
        // {0,2,4} keeps modulus 6 but never contains the forced neighbor
        let code = spanned(&[(6, 1), (2, 1)], &[&[2, 0], &[0, 1]]);
        let report = large_modulus_obstruction(&code).unwrap();
        match &report.case {
            ObstructionCase::UncoverableWord {
                witness,
                nearest_admissible_distance,
            } => {
                assert_eq!(*witness, w("1010"));
                assert!(nearest_admissible_distance.is_none_or(|d| d >= 2));
            }
            other => panic!("expected uncoverable word, got {other:?}"),
        }
        assert!(report.valid());
    }

    #[test]
    fn obstruction_not_applicable_cases() {
        // moduli 2 and 4 only
        let code = spanned(&[(2, 2), (4, 1)], &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(matches!(
            large_modulus_obstruction(&code),
            Err(Error::NotApplicable(_))
        ));

        // declared 6 but the subgroup {0,3} reduces to modulus 2
        let code = spanned(&[(6, 1)], &[&[3]]);
        assert!(matches!(
            large_modulus_obstruction(&code),
            Err(Error::NotApplicable(_))
        ));

        // non-decomposable input is out of scope for the block argument
        let code = spanned(&[(2, 1), (2, 1)], &[&[1, 1]]);
        assert!(matches!(
            large_modulus_obstruction(&code),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn obstruction_and_perfectness_never_disagree() {
        let corpus = [
            spanned(&[(6, 1), (2, 4)], &[&[1, 0, 0, 0, 0]]),
            spanned(&[(6, 1), (2, 1)], &[&[1, 0], &[0, 1]]),
            spanned(&[(8, 1)], &[&[1]]),
            spanned(&[(12, 1), (2, 2)], &[&[1, 0, 0], &[0, 1, 0]]),
            spanned(&[(6, 2)], &[&[1, 0], &[0, 1]]),
            spanned(&[(10, 1), (4, 1)], &[&[1, 0], &[0, 1]]),
        ];
        for code in corpus {
            let report = large_modulus_obstruction(&code).unwrap();
            assert!(report.valid(), "{report:?}");
            assert!(!is_one_perfect(&code.binary_words().unwrap()).unwrap().verdict);
        }
    }

    #[test]
    fn classify_repetition_image() {
        let code = spanned(&[(6, 1)], &[&[3]]);
        let c = classify_if_perfect(&code).unwrap();
        assert!(c.perfectness.verdict);
        assert_eq!(c.minimized_type.to_string(), "Z2^1");
        let params = c.type_params.unwrap();
        assert_eq!(params.binary_coords, 1);
        assert_eq!(params.quaternary_coords, 0);
        assert!(!c.theorem_violation);
    }

    #[test]
    fn classify_hamming_as_binary_type() {
        let gens = hamming_code(3).unwrap();
        let gen_vecs: Vec<Vec<u32>> = gens
            .iter()
            .map(|word| word.iter_bits().map(u32::from).collect())
            .collect();
        let shape = GroupShape::single(2, 7).unwrap();
        let spec = GeneratorSpec::new(shape, gen_vecs).unwrap();
        let code = span(&spec, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(code.size(), 16);
        let c = classify_if_perfect(&code).unwrap();
        assert!(c.perfectness.verdict);
        let params = c.type_params.unwrap();
        assert_eq!(params.binary_coords, 7);
        assert_eq!(params.quaternary_coords, 0);
    }

    #[test]
    fn classify_full_z6_not_perfect() {
        let code = spanned(&[(6, 1)], &[&[1]]);
        let c = classify_if_perfect(&code).unwrap();
        assert!(!c.perfectness.verdict);
        assert!(c.type_params.is_none());
        assert!(!c.theorem_violation);
    }
}
