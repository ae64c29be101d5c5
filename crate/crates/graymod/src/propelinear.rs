//! Binary codes carrying one coordinate permutation per codeword, the group
//! action `x ⋆ v = x XOR pi_x(v)`, and checkers for the structural
//! properties a well-formed assignment must satisfy.
//!
//! Construction deliberately does not enforce the group axioms: a code with
//! an arbitrary permutation assignment can be built and fed to
//! [`check_propelinear`], which reports each axiom separately with a first
//! counterexample. Mathematical failures are report content, never errors.

use std::collections::HashMap;

use rand_chacha::rand_core::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{BinaryWord, Permutation};

/// A finite set of equal-length binary words, each with an assigned
/// coordinate permutation.
#[derive(Debug, Clone)]
pub struct PropelinearCode {
    length: usize,
    words: Vec<BinaryWord>,
    perms: Vec<Permutation>,
    index: HashMap<BinaryWord, usize>,
}

impl PropelinearCode {
    /// Builds a code from explicit (codeword, permutation) pairs. Words must
    /// be distinct and all lengths must agree; the axioms are not checked
    /// here. Codewords are kept in lexicographic order.
    pub fn new(assignments: Vec<(BinaryWord, Permutation)>) -> Result<Self> {
        if assignments.is_empty() {
            return Err(Error::EmptyCode);
        }
        let length = assignments[0].0.len();
        let mut assignments = assignments;
        assignments.sort_by_key(|a| a.0);
        let mut words = Vec::with_capacity(assignments.len());
        let mut perms = Vec::with_capacity(assignments.len());
        let mut index = HashMap::with_capacity(assignments.len());
        for (w, p) in assignments {
            if w.len() != length {
                return Err(Error::LengthMismatch(length, w.len()));
            }
            if p.len() != length {
                return Err(Error::LengthMismatch(length, p.len()));
            }
            if index.insert(w, words.len()).is_some() {
                return Err(Error::InvalidInput(format!("duplicate codeword {w}")));
            }
            words.push(w);
            perms.push(p);
        }
        Ok(PropelinearCode {
            length,
            words,
            perms,
            index,
        })
    }

    /// A linear code viewed as propelinear: every permutation is the
    /// identity.
    pub fn linear(words: Vec<BinaryWord>) -> Result<Self> {
        let n = words.first().ok_or(Error::EmptyCode)?.len();
        Self::new(
            words
                .into_iter()
                .map(|w| (w, Permutation::identity(n)))
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn word_length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        self.index.contains_key(w)
    }

    pub fn perm_of(&self, w: &BinaryWord) -> Option<&Permutation> {
        self.index.get(w).map(|&i| &self.perms[i])
    }

    /// `x ⋆ v = x XOR pi_x(v)`; `x` must be a codeword, `v` may be any word
    /// of the right length.
    pub fn star(&self, x: &BinaryWord, v: &BinaryWord) -> Result<BinaryWord> {
        let p = self
            .perm_of(x)
            .ok_or_else(|| Error::NotACodeword(x.to_string()))?;
        x.xor(&p.apply(v)?)
    }

    /// The ⋆-inverse of a codeword: `pi_x^{-1}(x)`, the unique word with
    /// `x ⋆ inverse = 0`.
    pub fn codeword_inverse(&self, x: &BinaryWord) -> Result<BinaryWord> {
        let p = self
            .perm_of(x)
            .ok_or_else(|| Error::NotACodeword(x.to_string()))?;
        p.inverse().apply(x)
    }
}

/// Outcome of one axiom check with a first counterexample on failure.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        AxiomCheck {
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Per-axiom verdicts for a candidate propelinear structure.
#[derive(Debug, Clone, Serialize)]
pub struct PropelinearReport {
    pub identity: AxiomCheck,
    pub closure: AxiomCheck,
    pub coherence: AxiomCheck,
    pub inverses: AxiomCheck,
    pub associativity: AxiomCheck,
}

impl PropelinearReport {
    pub fn all_passed(&self) -> bool {
        self.identity.passed
            && self.closure.passed
            && self.coherence.passed
            && self.inverses.passed
            && self.associativity.passed
    }
}

/// Cap on the number of triples scanned by the direct associativity check.
/// Coherence plus closure already imply associativity, so the direct scan is
/// a cross-check at desk scale.
const ASSOCIATIVITY_TRIPLE_CAP: usize = 1_000_000;

/// Checks the propelinear axioms on a finite code: the all-zero word is a
/// codeword with the identity permutation, `x ⋆ y` stays in the code, the
/// permutation of `x ⋆ y` is `pi_x ∘ pi_y`, every codeword has a ⋆-inverse
/// in the code, and ⋆ is associative on codewords.
pub fn check_propelinear(code: &PropelinearCode) -> PropelinearReport {
    let zero = BinaryWord::zero(code.word_length());

    let identity = match code.perm_of(&zero) {
        None => AxiomCheck::fail("the all-zero word is not a codeword".into()),
        Some(p) if !p.is_identity() => AxiomCheck::fail(format!(
            "the all-zero word carries a non-identity permutation ({:?})",
            (0..p.len()).map(|i| p.image_of(i)).collect::<Vec<_>>()
        )),
        Some(_) => AxiomCheck::pass(),
    };

    let mut closure = AxiomCheck::pass();
    let mut coherence = AxiomCheck::pass();
    'outer: for x in code.words() {
        for y in code.words() {
            let z = code.star(x, y).expect("codewords have permutations");
            if !code.contains(&z) {
                closure = AxiomCheck::fail(format!("x={x} y={y} gives x*y={z}, not in the code"));
                break 'outer;
            }
            if coherence.passed {
                let composed = code
                    .perm_of(x)
                    .unwrap()
                    .compose(code.perm_of(y).unwrap())
                    .expect("equal lengths");
                if *code.perm_of(&z).unwrap() != composed {
                    coherence = AxiomCheck::fail(format!(
                        "x={x} y={y}: permutation of x*y={z} differs from pi_x o pi_y"
                    ));
                }
            }
        }
    }

    let mut inverses = AxiomCheck::pass();
    for x in code.words() {
        let inv = code.codeword_inverse(x).expect("codeword");
        if !code.contains(&inv) {
            inverses = AxiomCheck::fail(format!("inverse {inv} of x={x} is not in the code"));
            break;
        }
        debug_assert!(code.star(x, &inv).unwrap().is_zero());
    }

    let mut associativity = AxiomCheck::pass();
    if closure.passed {
        let n = code.size();
        let mut scanned = 0usize;
        'triples: for x in code.words() {
            for y in code.words() {
                let xy = code.star(x, y).unwrap();
                for z in code.words() {
                    if scanned >= ASSOCIATIVITY_TRIPLE_CAP {
                        break 'triples;
                    }
                    scanned += 1;
                    let lhs = code.star(&xy, z).unwrap();
                    let yz = code.star(y, z).unwrap();
                    let rhs = code.star(x, &yz).unwrap();
                    if lhs != rhs {
                        associativity = AxiomCheck::fail(format!(
                            "x={x} y={y} z={z}: (x*y)*z={lhs} but x*(y*z)={rhs}"
                        ));
                        break 'triples;
                    }
                }
            }
        }
        let _ = n;
    } else {
        associativity = AxiomCheck::fail("skipped: closure already fails".into());
    }

    PropelinearReport {
        identity,
        closure,
        coherence,
        inverses,
        associativity,
    }
}

/// How whole-space quantifiers are evaluated: exhaustively while the ambient
/// space has at most `exhaustive_limit` words, otherwise on a deterministic
/// pseudorandom sample.
#[derive(Debug, Clone, Copy)]
pub struct Sampling {
    pub exhaustive_limit: u64,
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            exhaustive_limit: 1 << 20,
            sample_size: 100_000,
            seed: 0,
        }
    }
}

impl Sampling {
    fn ambient_is_exhaustive(&self, n: usize) -> bool {
        n < 64 && (1u64 << n) <= self.exhaustive_limit
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> BinaryWord {
    let v = rng.next_u64();
    BinaryWord::from_bits((0..n).map(|p| (v >> p) & 1 == 1)).expect("n >= 1")
}

#[derive(Debug, Clone, Serialize)]
pub struct HammingWitness {
    pub codeword: BinaryWord,
    pub vector: BinaryWord,
    pub distance: u32,
    pub weight: u32,
}

/// Result of checking `d(x, x ⋆ v) = wt(v)` over codewords `x` and ambient
/// words `v`.
#[derive(Debug, Clone, Serialize)]
pub struct HammingCompatReport {
    pub passed: bool,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<HammingWitness>,
}

/// Verifies `d(x, x ⋆ v) = wt(v)` for every codeword `x`, quantifying `v`
/// over the whole space when it is small enough and over a seeded sample
/// otherwise.
pub fn check_hamming_compatible(code: &PropelinearCode, sampling: &Sampling) -> HammingCompatReport {
    let n = code.word_length();
    let exhaustive = sampling.ambient_is_exhaustive(n);

    let check = |v: &BinaryWord| -> Option<HammingWitness> {
        for x in code.words() {
            let moved = code.star(x, v).expect("codeword");
            let d = x.distance(&moved).expect("equal lengths");
            if d != v.weight() {
                return Some(HammingWitness {
                    codeword: *x,
                    vector: *v,
                    distance: d,
                    weight: v.weight(),
                });
            }
        }
        None
    };

    let witness = if exhaustive {
        BinaryWord::all(n).find_map(|v| check(&v))
    } else {
        let mut rng = sampling.rng();
        (0..sampling.sample_size).find_map(|_| check(&random_word(&mut rng, n)))
    };

    HammingCompatReport {
        passed: witness.is_none(),
        exhaustive,
        seed: if exhaustive { None } else { Some(sampling.seed) },
        witness,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TranslationWitness {
    pub x: BinaryWord,
    pub y: BinaryWord,
    pub u: BinaryWord,
    pub distance_before: u32,
    pub distance_after: u32,
}

/// Verdict of the translation-invariance check.
#[derive(Debug, Clone, Serialize)]
pub struct TranslationReport {
    pub invariant: bool,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TranslationWitness>,
}

/// Evaluates the translation identity on one triple: returns the witness
/// when `d(x, y) != d(x ⋆ u, y ⋆ u)`. Both `x` and `y` must be codewords.
pub fn translation_defect(
    code: &PropelinearCode,
    x: &BinaryWord,
    y: &BinaryWord,
    u: &BinaryWord,
) -> Result<Option<TranslationWitness>> {
    let before = x.distance(y)?;
    let after = code.star(x, u)?.distance(&code.star(y, u)?)?;
    Ok(if before != after {
        Some(TranslationWitness {
            x: *x,
            y: *y,
            u: *u,
            distance_before: before,
            distance_after: after,
        })
    } else {
        None
    })
}

fn translation_violation(
    code: &PropelinearCode,
    x: &BinaryWord,
    y: &BinaryWord,
    u: &BinaryWord,
) -> Option<TranslationWitness> {
    translation_defect(code, x, y, u).expect("codewords of equal length")
}

/// Checks `d(x, y) = d(x ⋆ u, y ⋆ u)` for all codewords `x, y` and ambient
/// words `u`; exhaustive over `u` while the space is small, sampled with the
/// recorded seed otherwise.
pub fn check_translation_invariant(code: &PropelinearCode, sampling: &Sampling) -> TranslationReport {
    let n = code.word_length();
    let exhaustive = sampling.ambient_is_exhaustive(n);

    let witness = if exhaustive {
        let mut found = None;
        'scan: for x in code.words() {
            for y in code.words() {
                for u in BinaryWord::all(n) {
                    if let Some(w) = translation_violation(code, x, y, &u) {
                        found = Some(w);
                        break 'scan;
                    }
                }
            }
        }
        found
    } else {
        let mut rng = sampling.rng();
        let size = code.size() as u64;
        (0..sampling.sample_size).find_map(|_| {
            let x = &code.words()[(rng.next_u64() % size) as usize];
            let y = &code.words()[(rng.next_u64() % size) as usize];
            let u = random_word(&mut rng, n);
            translation_violation(code, x, y, &u)
        })
    };

    TranslationReport {
        invariant: witness.is_none(),
        exhaustive,
        seed: if exhaustive { None } else { Some(sampling.seed) },
        witness,
    }
}

/// The length-k word `1 0…0 1`: a guaranteed translation-invariance
/// violation for the image of the full cyclic code when k > 2.
pub fn two_ones_witness(k: usize) -> Result<BinaryWord> {
    if k <= 2 {
        return Err(Error::OutOfRange(format!(
            "the two-ones witness needs k > 2, got {k}"
        )));
    }
    let mut w = BinaryWord::zero(k);
    w.set_bit(0, true);
    w.set_bit(k - 1, true);
    Ok(w)
}
