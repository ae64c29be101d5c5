//! Batch command frontend: mapping, spanning, analysis, structural checks,
//! perfectness and Gray map search, each with a human table and a
//! byte-stable JSON report.
//!
//! Exit codes: 0 success, 1 property violated (with witness), 2 input
//! error, 3 not in image, 4 resource cap.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::ZkVector;
use crate::error::{Error, Result};
use crate::gray::GrayTable;
use crate::lattice::{
    span, BlockShape, GeneratorSpec, GroupShape, SpannedCode, DEFAULT_SIZE_LIMIT,
};
use crate::perfect::{
    classify_if_perfect, hamming_code, is_one_perfect, is_one_perfect_with_covering,
    large_modulus_obstruction, Classification, COVERING_SCAN_MAX_LEN,
};
use crate::propelinear::{
    check_hamming_compatible, check_propelinear, check_translation_invariant,
    translation_defect, PropelinearCode, Sampling, TranslationWitness,
};
use crate::search::{enumerate_gray_maps, is_hamming_compatible_map, orbit_count};
use crate::word::BinaryWord;

const SEARCH_MAP_LIMIT: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "graymod",
    version,
    about = "Z_2k codes as binary propelinear codes: Gray tables, code analysis, structural checks, perfectness and map search"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit the JSON report instead of the human table
    #[arg(long, global = true)]
    json: bool,

    /// Seed for sampled whole-space checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Upper bound on worker threads (1 keeps reports byte-stable)
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Largest ambient-space size that is scanned exhaustively
    #[arg(long, global = true, default_value_t = 1 << 20)]
    exhaustive_limit: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Gray table for one k: residue, image word, Lee weight
    Gray {
        #[arg(long)]
        k: usize,
    },
    /// Map a vector over Z_2k to its binary image
    Map {
        #[arg(long)]
        k: usize,
        /// Comma-separated coordinates, e.g. 1,2
        #[arg(long)]
        vector: String,
    },
    /// Invert a binary image word back to its vector
    Unmap {
        #[arg(long)]
        k: usize,
        /// Bit string, leftmost position first, e.g. 1001
        #[arg(long)]
        bits: String,
    },
    /// Span the code of a spec file and report size, type, distances, rates
    Analyze {
        /// JSON code spec: {"blocks": [{"modulus": M, "length": L}, ...],
        /// "generators": [[...], ...]}
        spec: PathBuf,
    },
    /// Check a structural property of the binary image of a spec
    Verify {
        spec: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// 1-perfectness report for a spec file or a Hamming control code
    Perfect {
        spec: Option<PathBuf>,
        /// Use the Hamming code of this redundancy (2..=5) instead of a spec
        #[arg(long, value_name = "R", conflicts_with = "spec")]
        hamming: Option<u32>,
    },
    /// Enumerate Gray maps from Z_r into length-m words
    Search {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
        /// Also count orbits under coordinate permutation
        #[arg(long)]
        orbits: bool,
        /// List the compatible maps
        #[arg(long)]
        compatible_only: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    /// Group axioms of the permutation assignment
    Propelinear,
    /// d(x, x*v) = wt(v) over the ambient space
    Hamming,
    /// d(x, y) = d(x*u, y*u) over the ambient space
    Translation,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Propelinear => "propelinear",
            Property::Hamming => "hamming",
            Property::Translation => "translation",
        }
    }
}

/// The JSON report emitted by every command under `--json`.
#[derive(Serialize)]
struct ReportDocument {
    command: String,
    input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<bool>,
    values: Value,
    witnesses: Vec<Value>,
    notes: Vec<String>,
}

struct Output {
    report: ReportDocument,
    human: String,
    exit: i32,
}

/// Parses argv, runs the selected command and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    run_cli(cli)
}

fn run_cli(cli: Cli) -> i32 {
    if cli.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return 2;
    }
    let sampling = Sampling {
        exhaustive_limit: cli.exhaustive_limit,
        sample_size: 100_000,
        seed: cli.seed,
    };
    let result = match &cli.command {
        Command::Gray { k } => cmd_gray(*k),
        Command::Map { k, vector } => cmd_map(*k, vector),
        Command::Unmap { k, bits } => cmd_unmap(*k, bits),
        Command::Analyze { spec } => cmd_analyze(spec),
        Command::Verify { spec, property } => cmd_verify(spec, *property, &sampling),
        Command::Perfect { spec, hamming } => cmd_perfect(spec.as_ref(), *hamming),
        Command::Search {
            r,
            m,
            orbits,
            compatible_only,
        } => cmd_search(*r, *m, *orbits, *compatible_only),
    };
    match result {
        Ok(output) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&output.report).expect("serializable report")
                );
            } else {
                print!("{}", output.human);
            }
            output.exit
        }
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::NotInImage(_) => 3,
                Error::SizeLimitExceeded(_) | Error::LimitExceeded(_) => 4,
                _ => 2,
            }
        }
    }
}

fn digest_str(data: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(data);
    let out = hasher.finalize();
    let mut hex = String::with_capacity(2 * out.len() + 7);
    hex.push_str("sha256:");
    for b in out {
        write!(hex, "{b:02x}").expect("write to string");
    }
    hex
}

fn cmd_gray(k: usize) -> Result<Output> {
    if !(1..=16).contains(&k) {
        return Err(Error::InvalidInput(format!(
            "--k must be in 1..=16, got {k}"
        )));
    }
    let table = GrayTable::new(k)?;
    let j_width = if k >= 5 { 2 } else { 1 };
    let word_width = k.max(5);
    let mut rows = Vec::with_capacity(2 * k);
    let mut human = format!("{:>j_width$}  {:<word_width$}  lee\n", "j", "image");
    for (j, word) in table.entries().iter().enumerate() {
        let lee = word.weight();
        rows.push(json!({ "j": j, "word": word, "lee_weight": lee }));
        let rendered = word.to_string();
        let _ = writeln!(human, "{j:>j_width$}  {rendered:<word_width$}  {lee}");
    }
    Ok(Output {
        report: ReportDocument {
            command: "gray".into(),
            input_digest: digest_str(format!("gray k={k}").as_bytes()),
            seed: None,
            verdict: None,
            values: json!({ "k": k, "rows": rows }),
            witnesses: vec![],
            notes: vec![],
        },
        human,
        exit: 0,
    })
}

fn parse_vector(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad coordinate {part:?}")))
        })
        .collect()
}

fn cmd_map(k: usize, vector: &str) -> Result<Output> {
    let coords = parse_vector(vector)?;
    let table = GrayTable::new(k)?;
    let v = ZkVector::new(table.modulus(), coords.clone())?;
    let word = table.big_phi(&v)?;
    Ok(Output {
        report: ReportDocument {
            command: "map".into(),
            input_digest: digest_str(format!("map k={k} vector={vector}").as_bytes()),
            seed: None,
            verdict: None,
            values: json!({ "k": k, "vector": coords, "word": word }),
            witnesses: vec![],
            notes: vec![],
        },
        human: format!("{word}\n"),
        exit: 0,
    })
}

fn cmd_unmap(k: usize, bits: &str) -> Result<Output> {
    let word = BinaryWord::parse(bits)?;
    let table = GrayTable::new(k)?;
    let v = table.big_phi_inverse(&word)?;
    let rendered = v
        .coords()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(Output {
        report: ReportDocument {
            command: "unmap".into(),
            input_digest: digest_str(format!("unmap k={k} bits={bits}").as_bytes()),
            seed: None,
            verdict: None,
            values: json!({ "k": k, "word": word, "vector": v.coords() }),
            witnesses: vec![],
            notes: vec![],
        },
        human: format!("{rendered}\n"),
        exit: 0,
    })
}

/// On-disk code spec: block structure plus flat generators.
#[derive(Deserialize)]
struct SpecDocument {
    blocks: Vec<SpecBlock>,
    generators: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
struct SpecBlock {
    modulus: u32,
    length: usize,
}

fn load_spec(path: &PathBuf) -> Result<(GeneratorSpec, String)> {
    let bytes = fs::read(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let doc: SpecDocument = serde_json::from_slice(&bytes)
        .map_err(|e| Error::InvalidInput(format!("malformed spec {}: {e}", path.display())))?;
    let shape = GroupShape::new(
        doc.blocks
            .iter()
            .map(|b| BlockShape {
                modulus: b.modulus,
                length: b.length,
            })
            .collect(),
    )?;
    Ok((
        GeneratorSpec::new(shape, doc.generators)?,
        digest_str(&bytes),
    ))
}

fn cmd_analyze(path: &PathBuf) -> Result<Output> {
    let (spec, digest) = load_spec(path)?;
    let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
    let reduction = code.minimize_type();
    let minimized = reduction.group_type();

    let min_lee = code.min_lee_distance().ok();
    let min_hamming = code.min_hamming_distance_binary().ok();
    let rates = code.info_rates().ok();

    let mut notes = Vec::new();
    if code.size() < 2 {
        notes.push("degenerate code: minimum distances need at least two codewords".into());
    }
    if code.shape().blocks().len() > 1 {
        notes.push("information rates are defined for single-modulus codes only".into());
    }
    for b in &reduction.blocks {
        if b.evenness_restored {
            notes.push(format!(
                "block {}: natural reduction was odd; modulus restored to {}",
                b.block_index, b.reduced_modulus
            ));
        }
    }

    let mut human = String::new();
    let _ = writeln!(human, "codewords             {}", code.size());
    let _ = writeln!(human, "declared type         {}", code.shape());
    let _ = writeln!(human, "minimized type        {minimized}");
    let _ = writeln!(
        human,
        "product decomposable  {}",
        if code.is_decomposable() { "yes" } else { "no" }
    );
    if let Some(d) = min_lee {
        let _ = writeln!(human, "min lee distance      {d}");
    }
    if let Some(d) = min_hamming {
        let _ = writeln!(human, "min hamming distance  {d}");
    }
    if let Some(r) = rates {
        let _ = writeln!(human, "rate                  {:.6}", r.rate);
        let _ = writeln!(human, "rate binary           {:.6}", r.rate_binary);
    }
    for note in &notes {
        let _ = writeln!(human, "note: {note}");
    }

    Ok(Output {
        report: ReportDocument {
            command: "analyze".into(),
            input_digest: digest,
            seed: None,
            verdict: None,
            values: json!({
                "code_size": code.size(),
                "binary_length": code.shape().binary_length(),
                "declared_type": code.shape().blocks(),
                "minimized_type": reduction,
                "product_decomposable": code.is_decomposable(),
                "min_lee_distance": min_lee,
                "min_hamming_distance": min_hamming,
                "rate": rates.map(|r| r.rate),
                "rate_binary": rates.map(|r| r.rate_binary),
            }),
            witnesses: vec![],
            notes,
        },
        human,
        exit: 0,
    })
}

/// The canonical two-ones violation triple, when the code carries a
/// coordinate of half-modulus at least 3 whose unit vector is a codeword.
fn canonical_translation_witness(
    code: &SpannedCode,
    image: &PropelinearCode,
) -> Result<Option<TranslationWitness>> {
    let shape = code.shape();
    let n = shape.binary_length();
    let mut offset = 0usize;
    let mut coord = 0usize;
    for block in shape.blocks() {
        let k = block.modulus as usize / 2;
        for _ in 0..block.length {
            if k >= 3 {
                let mut unit = vec![0u32; shape.total_coords()];
                unit[coord] = 1;
                if code.contains(&unit) {
                    let mut u = BinaryWord::zero(n);
                    u.set_bit(offset, true);
                    u.set_bit(offset + k - 1, true);
                    let x = BinaryWord::zero(n);
                    let y = code.binary_word(&unit)?;
                    if let Some(witness) = translation_defect(image, &x, &y, &u)? {
                        return Ok(Some(witness));
                    }
                }
            }
            offset += k;
            coord += 1;
        }
    }
    Ok(None)
}

fn cmd_verify(path: &PathBuf, property: Property, sampling: &Sampling) -> Result<Output> {
    let (spec, digest) = load_spec(path)?;
    let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
    let image = code.propelinear_image()?;

    let (holds, values, witnesses, seed) = match property {
        Property::Propelinear => {
            let report = check_propelinear(&image);
            let holds = report.all_passed();
            let witnesses = [
                ("identity", &report.identity),
                ("closure", &report.closure),
                ("coherence", &report.coherence),
                ("inverses", &report.inverses),
                ("associativity", &report.associativity),
            ]
            .iter()
            .filter(|(_, check)| !check.passed)
            .map(|(axiom, check)| json!({ "axiom": axiom, "witness": check.witness }))
            .collect();
            (
                holds,
                json!({ "property": "propelinear", "axioms": report, "code_size": image.size() }),
                witnesses,
                None,
            )
        }
        Property::Hamming => {
            let report = check_hamming_compatible(&image, sampling);
            let witnesses = report
                .witness
                .iter()
                .map(|w| serde_json::to_value(w).expect("serializable witness"))
                .collect();
            (
                report.passed,
                json!({
                    "property": "hamming",
                    "exhaustive": report.exhaustive,
                    "code_size": image.size(),
                }),
                witnesses,
                report.seed,
            )
        }
        Property::Translation => {
            // surface the canonical two-ones witness when it applies
            if let Some(witness) = canonical_translation_witness(&code, &image)? {
                (
                    false,
                    json!({
                        "property": "translation",
                        "exhaustive": true,
                        "code_size": image.size(),
                    }),
                    vec![serde_json::to_value(&witness).expect("serializable witness")],
                    None,
                )
            } else {
                let report = check_translation_invariant(&image, sampling);
                let witnesses = report
                    .witness
                    .iter()
                    .map(|w| serde_json::to_value(w).expect("serializable witness"))
                    .collect();
                (
                    report.invariant,
                    json!({
                        "property": "translation",
                        "exhaustive": report.exhaustive,
                        "code_size": image.size(),
                    }),
                    witnesses,
                    report.seed,
                )
            }
        }
    };

    let mut human = format!(
        "property {}: {}\n",
        property.name(),
        if holds { "holds" } else { "VIOLATED" }
    );
    for w in &witnesses {
        let _ = writeln!(human, "witness: {w}");
    }

    Ok(Output {
        report: ReportDocument {
            command: "verify".into(),
            input_digest: digest,
            seed,
            verdict: Some(holds),
            values,
            witnesses,
            notes: vec![],
        },
        human,
        exit: i32::from(!holds),
    })
}

fn render_perfectness(human: &mut String, report: &crate::perfect::PerfectnessReport) {
    let _ = writeln!(human, "code size             {}", report.code_size);
    let _ = writeln!(human, "binary length         {}", report.length);
    let _ = writeln!(
        human,
        "sphere packing        {}",
        if report.sphere_packing_holds { "holds" } else { "fails" }
    );
    match report.min_distance {
        Some(d) => {
            let _ = writeln!(human, "min distance          {d}");
        }
        None => {
            let _ = writeln!(human, "min distance          n/a (single codeword)");
        }
    }
    let _ = writeln!(
        human,
        "covering scan         {}",
        if report.covering_radius_checked { "ran" } else { "skipped" }
    );
    let _ = writeln!(
        human,
        "1-perfect             {}",
        if report.verdict { "yes" } else { "no" }
    );
}

fn cmd_perfect(path: Option<&PathBuf>, hamming: Option<u32>) -> Result<Output> {
    match (path, hamming) {
        (None, Some(r)) => {
            let words = hamming_code(r)?;
            let report = if words[0].len() <= COVERING_SCAN_MAX_LEN && words.len() <= 1 << 16 {
                is_one_perfect_with_covering(&words)?
            } else {
                is_one_perfect(&words)?
            };
            let mut human = format!("hamming control r={r}\n");
            render_perfectness(&mut human, &report);
            let verdict = report.verdict;
            Ok(Output {
                report: ReportDocument {
                    command: "perfect".into(),
                    input_digest: digest_str(format!("perfect hamming={r}").as_bytes()),
                    seed: None,
                    verdict: Some(verdict),
                    values: json!({ "hamming_r": r, "perfectness": report }),
                    witnesses: vec![],
                    notes: vec![],
                },
                human,
                exit: i32::from(!verdict),
            })
        }
        (Some(path), None) => {
            let (spec, digest) = load_spec(path)?;
            let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
            let classification: Classification = classify_if_perfect(&code)?;
            let obstruction = match large_modulus_obstruction(&code) {
                Ok(report) => Some(report),
                Err(Error::NotApplicable(_)) => None,
                Err(other) => return Err(other),
            };

            let mut notes = Vec::new();
            if classification.theorem_violation {
                notes.push(
                    "THEOREM VIOLATION: 1-perfect image with a minimized modulus outside {2, 4}"
                        .into(),
                );
            }
            let mut witnesses = Vec::new();
            if let Some(w) = &classification.perfectness.witness {
                witnesses.push(serde_json::to_value(w).expect("serializable witness"));
            }
            if let Some(o) = &obstruction {
                witnesses.push(serde_json::to_value(o).expect("serializable witness"));
            }

            let mut human = String::new();
            render_perfectness(&mut human, &classification.perfectness);
            let _ = writeln!(
                human,
                "minimized type        {}",
                classification.minimized_type
            );
            if let Some(params) = &classification.type_params {
                let _ = writeln!(
                    human,
                    "type parameters       {} binary, {} quaternary coordinates",
                    params.binary_coords, params.quaternary_coords
                );
            }
            if let Some(o) = &obstruction {
                let _ = writeln!(
                    human,
                    "obstruction           coordinate {} (modulus {}), {}",
                    o.coordinate,
                    o.modulus,
                    if o.valid() { "valid" } else { "INVALID" }
                );
            }
            for note in &notes {
                let _ = writeln!(human, "note: {note}");
            }

            let verdict = classification.perfectness.verdict;
            Ok(Output {
                report: ReportDocument {
                    command: "perfect".into(),
                    input_digest: digest,
                    seed: None,
                    verdict: Some(verdict),
                    values: json!({
                        "classification": classification,
                        "obstruction": obstruction,
                    }),
                    witnesses,
                    notes,
                },
                human,
                exit: i32::from(!verdict),
            })
        }
        _ => Err(Error::InvalidInput(
            "provide either a spec file or --hamming R".into(),
        )),
    }
}

fn cmd_search(r: usize, m: usize, orbits: bool, compatible_only: bool) -> Result<Output> {
    if r > 12 {
        return Err(Error::InvalidInput(format!("--r must be <= 12, got {r}")));
    }
    if m > 6 {
        return Err(Error::InvalidInput(format!("--m must be <= 6, got {m}")));
    }
    let maps = enumerate_gray_maps(r, m, SEARCH_MAP_LIMIT)?;
    let total = maps.len();

    let compatible: Option<Vec<_>> = if r.is_multiple_of(2) {
        Some(
            maps.iter()
                .filter(|cand| is_hamming_compatible_map(cand).expect("even r"))
                .cloned()
                .collect(),
        )
    } else {
        None
    };
    let compatible_count = compatible.as_ref().map(Vec::len);

    let orbit_total = if orbits {
        Some(match &compatible {
            Some(survivors) => orbit_count(survivors),
            None => orbit_count(&maps),
        })
    } else {
        None
    };

    let listed: Option<Vec<Vec<String>>> = if compatible_only {
        let source = compatible.as_deref().unwrap_or(&maps);
        Some(
            source
                .iter()
                .map(|cand| cand.images.iter().map(|w| w.to_string()).collect())
                .collect(),
        )
    } else {
        None
    };

    let mut notes = Vec::new();
    if !r.is_multiple_of(2) {
        notes.push("compatibility is defined for even r only".into());
    }

    let mut human = format!("r={r} m={m}\ntotal       {total}\n");
    if let Some(c) = compatible_count {
        let _ = writeln!(human, "compatible  {c}");
    }
    if let Some(o) = orbit_total {
        let _ = writeln!(human, "orbits      {o}");
    }
    if let Some(listed) = &listed {
        for images in listed {
            let _ = writeln!(human, "map: {}", images.join(" "));
        }
    }
    for note in &notes {
        let _ = writeln!(human, "note: {note}");
    }

    Ok(Output {
        report: ReportDocument {
            command: "search".into(),
            input_digest: digest_str(
                format!("search r={r} m={m} orbits={orbits} compatible_only={compatible_only}")
                    .as_bytes(),
            ),
            seed: None,
            verdict: None,
            values: json!({
                "r": r,
                "m": m,
                "total": total,
                "compatible": compatible_count,
                "orbits": orbit_total,
                "maps": listed,
            }),
            witnesses: vec![],
            notes,
        },
        human,
        exit: 0,
    })
}
