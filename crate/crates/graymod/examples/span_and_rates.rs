//! Span codes from generators, then read off sizes, distances, rates and
//! minimal types.
//!
//! ```bash
//! cargo run -p graymod --example span_and_rates
//! ```

use graymod::lattice::{span, GeneratorSpec, GroupShape, DEFAULT_SIZE_LIMIT};

fn main() -> graymod::Result<()> {
    let cases: Vec<(&str, u32, Vec<Vec<u32>>)> = vec![
        ("span{(2)} in Z_6", 6, vec![vec![2]]),
        ("span{(3)} in Z_6", 6, vec![vec![3]]),
        ("span{(1,2)} in Z_4^2", 4, vec![vec![1, 2]]),
        ("span{(2,3)} in Z_8^2", 8, vec![vec![2, 3]]),
    ];

    for (name, modulus, generators) in cases {
        let length = generators[0].len();
        let spec = GeneratorSpec::new(GroupShape::single(modulus, length)?, generators)?;
        let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
        let rates = code.info_rates()?;
        let reduction = code.minimize_type();

        println!("{name}");
        println!("  codewords       {}", code.size());
        println!("  min lee dist    {}", code.min_lee_distance()?);
        println!("  min binary dist {}", code.min_hamming_distance_binary()?);
        println!("  rate            {:.6}", rates.rate);
        println!("  rate (binary)   {:.6}", rates.rate_binary);
        println!("  minimized type  {}", reduction.group_type());
        for b in &reduction.blocks {
            if b.evenness_restored {
                println!("    block {}: odd reduction, evenness restored", b.block_index);
            }
        }
        println!();
    }
    Ok(())
}
