//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime. Run with `cargo test -p graymod --test acceptance --
//! --nocapture` to see the lines.

use std::process::Command;
use std::time::{Duration, Instant};

use graymod::algebra::Residue;
use graymod::gray::GrayTable;
use itertools::Itertools;
use graymod::lattice::{span, BlockShape, GeneratorSpec, GroupShape, SpannedCode, DEFAULT_SIZE_LIMIT};
use graymod::perfect::{
    hamming_code, is_one_perfect, is_one_perfect_with_covering, large_modulus_obstruction,
    ObstructionCase,
};
use graymod::propelinear::{
    check_hamming_compatible, check_propelinear, check_translation_invariant, Sampling,
};
use graymod::search::{canonical_map, uniqueness_report, parity_report};
use graymod::word::{BinaryWord, Permutation};

fn pass(criterion: u32, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {criterion}: exceeded budget {budget:?} (took {elapsed:?})"
    );
    println!("criterion {criterion:2} PASS  {what}  [{elapsed:?} <= {budget:?}]");
}

fn w(s: &str) -> BinaryWord {
    BinaryWord::parse(s).unwrap()
}

fn single_span(modulus: u32, gens: &[&[u32]]) -> SpannedCode {
    let length = gens[0].len();
    let spec = GeneratorSpec::new(
        GroupShape::single(modulus, length).unwrap(),
        gens.iter().map(|g| g.to_vec()).collect(),
    )
    .unwrap();
    span(&spec, DEFAULT_SIZE_LIMIT).unwrap()
}

/// The corpus of spanned codes quantified over by several criteria.
fn corpus() -> Vec<(&'static str, SpannedCode)> {
    vec![
        ("span{(1,2)} in Z4^2", single_span(4, &[&[1, 2]])),
        ("full Z6^2", single_span(6, &[&[1, 0], &[0, 1]])),
        ("span{(2,3)} in Z8^2", single_span(8, &[&[2, 3]])),
        ("span{(3)} in Z6", single_span(6, &[&[3]])),
    ]
}

#[test]
fn criterion_01_gray_table_exactness() {
    let started = Instant::now();
    let table = GrayTable::new(2).unwrap();
    let words: Vec<String> = table.entries().iter().map(|e| e.to_string()).collect();
    assert_eq!(words, ["00", "01", "11", "10"]);
    pass(1, "k=2 table is (00, 01, 11, 10)", started, Duration::from_millis(1));
}

#[test]
fn criterion_02_distance_and_weight_preservation() {
    let started = Instant::now();
    for k in 1..=8usize {
        let table = GrayTable::new(k).unwrap();
        let m = 2 * k as u32;
        for i in 0..m {
            let ri = Residue::new(i.into(), m).unwrap();
            assert_eq!(table.phi(i).unwrap().weight(), ri.lee_weight(), "k={k} i={i}");
            for j in 0..m {
                let rj = Residue::new(j.into(), m).unwrap();
                assert_eq!(
                    table.phi(i).unwrap().distance(&table.phi(j).unwrap()).unwrap(),
                    ri.lee_distance(&rj).unwrap(),
                    "k={k} i={i} j={j}"
                );
            }
        }
    }
    pass(2, "image metrics equal Lee metrics for k <= 8", started, Duration::from_millis(10));
}

#[test]
fn criterion_03_power_law_and_homomorphism() {
    let started = Instant::now();
    // power law: the i-fold star product of the image of 1 is the image of i
    for k in 1..=8usize {
        let code = single_span(2 * k as u32, &[&[1]]);
        let image = code.propelinear_image().unwrap();
        let table = GrayTable::new(k).unwrap();
        let one = table.phi(1).unwrap();
        let mut acc = BinaryWord::zero(k);
        for i in 0..2 * k as u32 {
            assert_eq!(acc, table.phi(i).unwrap(), "k={k} i={i}");
            acc = image.star(&acc, &one).unwrap();
        }
        assert!(acc.is_zero());
    }
    // homomorphism over every pair of codewords in the corpus
    for (name, code) in corpus() {
        assert!(code.size() <= 10_000);
        let image = code.propelinear_image().unwrap();
        for u in code.codewords() {
            for v in code.codewords() {
                let sum: Vec<u32> = u
                    .iter()
                    .zip(v)
                    .enumerate()
                    .map(|(i, (a, b))| (a + b) % code.shape().coord_modulus(i))
                    .collect();
                assert_eq!(
                    code.binary_word(&sum).unwrap(),
                    image
                        .star(&code.binary_word(u).unwrap(), &code.binary_word(v).unwrap())
                        .unwrap(),
                    "{name}"
                );
            }
        }
    }
    pass(3, "power law and image homomorphism on the corpus", started, Duration::from_secs(5));
}

#[test]
fn criterion_04_propelinear_axioms() {
    let started = Instant::now();
    for (name, code) in corpus() {
        let report = check_propelinear(&code.propelinear_image().unwrap());
        assert!(report.all_passed(), "{name}: {report:?}");
        assert!(report.coherence.passed, "{name}");
    }
    pass(4, "axioms incl. permutation coherence on the corpus", started, Duration::from_secs(5));
}

#[test]
fn criterion_05_hamming_compatibility_exhaustive() {
    let started = Instant::now();
    let sampling = Sampling::default();
    for (name, code) in corpus() {
        assert!(code.shape().binary_length() <= 16, "{name}");
        let report = check_hamming_compatible(&code.propelinear_image().unwrap(), &sampling);
        assert!(report.exhaustive, "{name} must scan the whole space");
        assert!(report.passed, "{name}: {:?}", report.witness);
    }
    pass(5, "d(x, x*v) = wt(v) over the whole space, corpus", started, Duration::from_secs(5));
}

#[test]
fn criterion_06_translation_invariance_boundary() {
    let started = Instant::now();
    let sampling = Sampling::default();
    for k in 3..=6usize {
        let table = GrayTable::new(k).unwrap();
        let code = single_span(2 * k as u32, &[&[1]]);
        let image = code.propelinear_image().unwrap();
        let mut z = BinaryWord::zero(k);
        z.set_bit(0, true);
        z.set_bit(k - 1, true);
        let zero = BinaryWord::zero(k);
        let moved_zero = image.star(&zero, &z).unwrap();
        let moved_one = image.star(&table.phi(1).unwrap(), &z).unwrap();
        assert_eq!(moved_zero.distance(&moved_one).unwrap(), 3, "k={k}");
        assert_eq!(zero.distance(&table.phi(1).unwrap()).unwrap(), 1);
        let report = check_translation_invariant(&image, &sampling);
        assert!(!report.invariant, "k={k} must not be translation invariant");
    }
    for k in 1..=2usize {
        let code = single_span(2 * k as u32, &[&[1]]);
        let report = check_translation_invariant(&code.propelinear_image().unwrap(), &sampling);
        assert!(report.invariant, "k={k} must be translation invariant");
    }
    pass(6, "two-ones witness for k=3..6; k=1,2 invariant", started, Duration::from_secs(5));
}

#[test]
fn criterion_07_rate_relation() {
    let started = Instant::now();
    for (name, code) in corpus() {
        let rates = code.info_rates().unwrap();
        let k = f64::from(code.shape().blocks()[0].modulus / 2);
        let relation = (1.0 + k.log2()) / k * rates.rate;
        assert!(
            (rates.rate_binary - relation).abs() < 1e-12,
            "{name}: rate relation violated"
        );
        if k >= 3.0 && code.size() >= 2 {
            assert!(rates.rate_binary < rates.rate, "{name}: strict inequality");
        }
        if (k - 2.0).abs() < f64::EPSILON {
            assert_eq!(rates.rate, rates.rate_binary, "{name}: k=2 equality");
        }
    }
    pass(7, "binary rate relation on the corpus", started, Duration::from_secs(1));
}

#[test]
fn criterion_08_uniqueness_search() {
    let started = Instant::now();
    let r2 = uniqueness_report(2, usize::MAX).unwrap();
    assert_eq!(r2.total, 8);
    assert_eq!(r2.compatible, 2);
    assert_eq!(r2.orbits, 1);
    assert!(r2.matches_canonical);

    let r3 = uniqueness_report(3, usize::MAX).unwrap();
    assert_eq!(r3.compatible, 6);
    assert_eq!(r3.orbits, 1);
    assert!(r3.matches_canonical);
    // each survivor is a coordinate permutation of the table map
    let canonical = canonical_map(3).unwrap();
    for survivor in &r3.survivors {
        let found = (0..3usize).permutations(3).any(|perm| {
            let mu = Permutation::new(perm).unwrap();
            canonical.permute_coordinates(&mu).unwrap().images == survivor.images
        });
        assert!(found, "survivor {:?} is not a coordinate permutation", survivor.images);
    }
    pass(8, "k=2: 8/2/1; k=3: 6 survivors, 1 orbit, extensional", started, Duration::from_secs(30));
}

#[test]
fn criterion_09_parity_lemma() {
    let started = Instant::now();
    for (r, m_max) in [(3usize, 5usize), (5, 5), (7, 4)] {
        let report = parity_report(r, m_max).unwrap();
        for count in &report.counts {
            assert_eq!(count.gray_maps, 0, "r={r} m={}", count.m);
        }
    }
    pass(9, "no Gray maps for r in {3,5,7}", started, Duration::from_secs(60));
}

#[test]
fn criterion_10_perfectness_positive_controls() {
    let started = Instant::now();
    let expectations = [(2u32, 2usize, 3usize), (3, 16, 7), (4, 2048, 15)];
    for (r, size, n) in expectations {
        let code = hamming_code(r).unwrap();
        assert_eq!(code.len(), size);
        let report = if r <= 3 {
            is_one_perfect_with_covering(&code).unwrap()
        } else {
            is_one_perfect(&code).unwrap()
        };
        assert!(report.verdict, "r={r}");
        assert!(report.sphere_packing_holds);
        assert_eq!(report.code_size as u128 * (n as u128 + 1), 1u128 << n);
        assert_eq!(report.covering_radius_checked, r <= 3);
    }
    pass(10, "Hamming controls r=2,3,4 with exact counts", started, Duration::from_secs(10));
}

#[test]
fn criterion_11_large_modulus_obstruction() {
    let started = Instant::now();
    // full Z6 extended with zero tails to binary length 7
    let shape = GroupShape::new(vec![
        BlockShape { modulus: 6, length: 1 },
        BlockShape { modulus: 2, length: 4 },
    ])
    .unwrap();
    let spec = GeneratorSpec::new(shape, vec![vec![1, 0, 0, 0, 0]]).unwrap();
    let code = span(&spec, DEFAULT_SIZE_LIMIT).unwrap();
    assert_eq!(code.shape().binary_length(), 7);
    let report = large_modulus_obstruction(&code).unwrap();
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
            assert_eq!(u_neighbors.as_slice(), &[w("1111000")]);
            assert_eq!(v_neighbors.as_slice(), &[w("1110100")]);
            assert_eq!(*neighbor_distance, Some(2));
        }
        other => panic!("expected the forced pair, got {other:?}"),
    }
    assert!(report.valid());
    assert!(!is_one_perfect(&code.binary_words().unwrap()).unwrap().verdict);

    // the repetition preimage minimizes to modulus 2
    let rep = single_span(6, &[&[3]]);
    let minimized = rep.minimize_type().group_type();
    assert_eq!(minimized.to_string(), "Z2^1");

    // every 1-perfect code in the corpus keeps moduli within {2, 4}
    for (name, code) in corpus() {
        let words = code.binary_words().unwrap();
        if is_one_perfect(&words).unwrap().verdict {
            let t = code.minimize_type().group_type();
            assert!(t.moduli_within(&[2, 4]), "{name}: type {t}");
        }
    }
    assert!(is_one_perfect(&rep.binary_words().unwrap()).unwrap().verdict);
    assert!(rep.minimize_type().group_type().moduli_within(&[2, 4]));
    pass(11, "forced pair at length 7; perfect types stay in {2,4}", started, Duration::from_secs(5));
}

#[test]
fn criterion_12_metric_identity() {
    let started = Instant::now();
    for (name, code) in corpus() {
        assert_eq!(
            code.min_lee_distance().unwrap(),
            code.min_hamming_distance_binary().unwrap(),
            "{name}"
        );
    }
    pass(12, "image min distance equals Lee min distance", started, Duration::from_secs(1));
}

// ---------------------------------------------------------------------------
// criterion 13: CLI byte stability
// ---------------------------------------------------------------------------

struct CliRun {
    stdout: Vec<u8>,
    status: i32,
}

fn run_cli(args: &[&str]) -> CliRun {
    let output = Command::new(env!("CARGO_BIN_EXE_graymod"))
        .args(args)
        .output()
        .expect("binary runs");
    CliRun {
        stdout: output.stdout,
        status: output.status.code().expect("exit code"),
    }
}

/// Runs twice with the stability flags and asserts byte-identical output.
fn run_stable(args: &[&str], expect_exit: i32) -> serde_json::Value {
    let mut full: Vec<&str> = args.to_vec();
    full.extend(["--json", "--seed", "0", "--threads", "1"]);
    let first = run_cli(&full);
    let second = run_cli(&full);
    assert_eq!(first.stdout, second.stdout, "unstable output for {args:?}");
    assert_eq!(first.status, expect_exit, "exit code for {args:?}");
    serde_json::from_slice(&first.stdout).expect("JSON report")
}

fn write_spec(dir: &std::path::Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn criterion_13_cli_stability() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let z6_full = write_spec(
        dir.path(),
        "z6_full.json",
        r#"{"blocks": [{"modulus": 6, "length": 1}], "generators": [[1]]}"#,
    );
    let z6_span2 = write_spec(
        dir.path(),
        "z6_span2.json",
        r#"{"blocks": [{"modulus": 6, "length": 1}], "generators": [[2]]}"#,
    );
    let z6_rep3 = write_spec(
        dir.path(),
        "z6_rep3.json",
        r#"{"blocks": [{"modulus": 6, "length": 1}], "generators": [[3]]}"#,
    );
    let z4_full = write_spec(
        dir.path(),
        "z4_full.json",
        r#"{"blocks": [{"modulus": 4, "length": 1}], "generators": [[1]]}"#,
    );
    let z4_sq = write_spec(
        dir.path(),
        "z4_sq.json",
        r#"{"blocks": [{"modulus": 4, "length": 2}], "generators": [[1, 2]]}"#,
    );
    let z6_padded = write_spec(
        dir.path(),
        "z6_padded.json",
        r#"{"blocks": [{"modulus": 6, "length": 1}, {"modulus": 2, "length": 4}], "generators": [[1, 0, 0, 0, 0]]}"#,
    );

    // gray tables
    let report = run_stable(&["gray", "--k", "2"], 0);
    let words: Vec<&str> = report["values"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["word"].as_str().unwrap())
        .collect();
    assert_eq!(words, ["00", "01", "11", "10"]);

    let report = run_stable(&["gray", "--k", "1"], 0);
    let words: Vec<&str> = report["values"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["word"].as_str().unwrap())
        .collect();
    assert_eq!(words, ["0", "1"]);

    let report = run_stable(&["gray", "--k", "3"], 0);
    let row4 = &report["values"]["rows"].as_array().unwrap()[4];
    assert_eq!(row4["word"], "110");
    assert_eq!(row4["lee_weight"], 2);

    // map and unmap
    let report = run_stable(&["map", "--k", "2", "--vector", "1,2"], 0);
    assert_eq!(report["values"]["word"], "0111");

    let report = run_stable(&["unmap", "--k", "2", "--bits", "1001"], 0);
    assert_eq!(report["values"]["vector"], serde_json::json!([3, 1]));

    let fail = run_cli(&["unmap", "--k", "3", "--bits", "010", "--json"]);
    assert_eq!(fail.status, 3);

    // analyze
    let report = run_stable(&["analyze", &z6_span2], 0);
    assert_eq!(report["values"]["code_size"], 3);
    assert_eq!(report["values"]["min_lee_distance"], 2);
    assert_eq!(report["values"]["min_hamming_distance"], 2);
    assert!((report["values"]["rate"].as_f64().unwrap() - 0.6131).abs() < 1e-4);
    assert!((report["values"]["rate_binary"].as_f64().unwrap() - 0.5283).abs() < 1e-4);

    let report = run_stable(&["analyze", &z6_rep3], 0);
    let minimized = &report["values"]["minimized_type"]["blocks"][0];
    assert_eq!(minimized["reduced_modulus"], 2);
    assert_eq!(minimized["length"], 1);

    let report = run_stable(&["analyze", &z4_full], 0);
    assert_eq!(report["values"]["rate"].as_f64().unwrap(), 1.0);
    assert_eq!(report["values"]["rate_binary"].as_f64().unwrap(), 1.0);

    // verify
    let report = run_stable(&["verify", &z6_full, "--property", "translation"], 1);
    assert_eq!(report["verdict"], false);
    assert_eq!(report["witnesses"][0]["u"], "101");

    let report = run_stable(&["verify", &z6_full, "--property", "propelinear"], 0);
    assert_eq!(report["verdict"], true);
    let report = run_stable(&["verify", &z4_sq, "--property", "propelinear"], 0);
    assert_eq!(report["verdict"], true);

    let report = run_stable(&["verify", &z4_sq, "--property", "hamming"], 0);
    assert_eq!(report["verdict"], true);
    assert_eq!(report["values"]["exhaustive"], true);

    // perfect
    let report = run_stable(&["perfect", &z6_rep3], 0);
    assert_eq!(report["verdict"], true);
    assert_eq!(
        report["values"]["classification"]["minimized_type"]["blocks"][0]["modulus"],
        2
    );

    let report = run_stable(&["perfect", &z6_padded], 1);
    assert_eq!(report["verdict"], false);
    let case = &report["values"]["obstruction"]["case"];
    assert_eq!(case["kind"], "forced_close_pair");
    assert_eq!(case["u"], "1011000");
    assert_eq!(case["v"], "1010100");

    let report = run_stable(&["perfect", "--hamming", "3"], 0);
    assert_eq!(report["verdict"], true);

    // search
    let report = run_stable(&["search", "--r", "4", "--m", "2", "--orbits"], 0);
    assert_eq!(report["values"]["total"], 8);
    assert_eq!(report["values"]["compatible"], 2);
    assert_eq!(report["values"]["orbits"], 1);

    let report = run_stable(&["search", "--r", "3", "--m", "3"], 0);
    assert_eq!(report["values"]["total"], 0);

    let report = run_stable(
        &["search", "--r", "6", "--m", "3", "--compatible-only"],
        0,
    );
    let maps = report["values"]["maps"].as_array().unwrap();
    assert_eq!(maps.len(), 6);
    let canonical = canonical_map(3).unwrap();
    for listed in maps {
        let images: Vec<BinaryWord> = listed
            .as_array()
            .unwrap()
            .iter()
            .map(|s| BinaryWord::parse(s.as_str().unwrap()).unwrap())
            .collect();
        let found = (0..3usize).permutations(3).any(|perm| {
            let mu = Permutation::new(perm).unwrap();
            canonical.permute_coordinates(&mu).unwrap().images == images
        });
        assert!(found, "listed map {listed} is not a coordinate permutation");
    }

    pass(13, "every CLI example byte-stable and as stated", started, Duration::from_secs(60));
}
