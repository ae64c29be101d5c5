//! The translation-invariance boundary: images of Z_2 and Z_4 codes are
//! translation invariant, images over larger moduli are not, and the
//! two-ones word pins the violation.
//!
//! ```bash
//! cargo run -p graymod --example translation_invariance
//! ```

use graymod::lattice::{span, GeneratorSpec, GroupShape, DEFAULT_SIZE_LIMIT};
use graymod::propelinear::{check_translation_invariant, two_ones_witness, Sampling};

fn main() -> graymod::Result<()> {
    let sampling = Sampling::default();
    for k in 1..=6usize {
        let spec = GeneratorSpec::new(GroupShape::single(2 * k as u32, 1)?, vec![vec![1]])?;
        let image = span(&spec, DEFAULT_SIZE_LIMIT)?.propelinear_image()?;
        let report = check_translation_invariant(&image, &sampling);
        print!("k = {k}: translation invariant = {}", report.invariant);
        match report.witness {
            Some(w) => println!(
                "   witness x={} y={} u={} (distances {} vs {})",
                w.x, w.y, w.u, w.distance_before, w.distance_after
            ),
            None => println!(),
        }
    }

    println!("\nguaranteed witness words:");
    for k in 3..=6usize {
        println!("  k = {k}: {}", two_ones_witness(k)?);
    }
    Ok(())
}
