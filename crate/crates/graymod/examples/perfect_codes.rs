//! 1-perfectness: Hamming controls, the length-3 repetition image, and the
//! obstruction that blocks perfect images over moduli above 4.
//!
//! ```bash
//! cargo run -p graymod --example perfect_codes
//! ```

use graymod::lattice::{span, BlockShape, GeneratorSpec, GroupShape, DEFAULT_SIZE_LIMIT};
use graymod::perfect::{
    classify_if_perfect, hamming_code, is_one_perfect_with_covering, large_modulus_obstruction,
    ObstructionCase,
};

fn main() -> graymod::Result<()> {
    for r in 2..=4u32 {
        let words = hamming_code(r)?;
        let n = words[0].len();
        let report = if n <= 20 {
            is_one_perfect_with_covering(&words)?
        } else {
            graymod::perfect::is_one_perfect(&words)?
        };
        println!(
            "hamming r={r}: {} codewords of length {n}, 1-perfect = {}",
            report.code_size, report.verdict
        );
    }

    // the image of span{(3)} in Z_6 is the repetition code of length 3
    let spec = GeneratorSpec::new(GroupShape::single(6, 1)?, vec![vec![3]])?;
    let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
    let classification = classify_if_perfect(&code)?;
    println!(
        "\nrepetition image: 1-perfect = {}, minimized type {}",
        classification.perfectness.verdict, classification.minimized_type
    );

    // a full Z_6 block padded with binary tails cannot be 1-perfect
    let shape = GroupShape::new(vec![
        BlockShape { modulus: 6, length: 1 },
        BlockShape { modulus: 2, length: 4 },
    ])?;
    let spec = GeneratorSpec::new(shape, vec![vec![1, 0, 0, 0, 0]])?;
    let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
    let obstruction = large_modulus_obstruction(&code)?;
    println!("\nobstruction on Z_6 x Z_2^4 (valid = {}):", obstruction.valid());
    match obstruction.case {
        ObstructionCase::ForcedClosePair {
            u,
            v,
            u_neighbors,
            v_neighbors,
            neighbor_distance,
        } => {
            println!("  {u} forces {}", u_neighbors[0]);
            println!("  {v} forces {}", v_neighbors[0]);
            println!(
                "  the forced neighbors are at distance {} < 3",
                neighbor_distance.unwrap()
            );
        }
        ObstructionCase::UncoverableWord {
            witness,
            nearest_admissible_distance,
        } => {
            println!("  {witness} has no admissible codeword within distance 1 (nearest: {nearest_admissible_distance:?})");
        }
    }
    Ok(())
}
