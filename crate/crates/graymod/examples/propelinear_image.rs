//! Build the binary image of a spanned code with its per-codeword
//! permutations, multiply codewords with the star product, and check the
//! group axioms.
//!
//! ```bash
//! cargo run -p graymod --example propelinear_image
//! ```

use graymod::lattice::{span, GeneratorSpec, GroupShape, DEFAULT_SIZE_LIMIT};
use graymod::propelinear::{check_hamming_compatible, check_propelinear, Sampling};

fn main() -> graymod::Result<()> {
    let spec = GeneratorSpec::new(GroupShape::single(6, 1)?, vec![vec![1]])?;
    let code = span(&spec, DEFAULT_SIZE_LIMIT)?;
    let image = code.propelinear_image()?;

    println!("image of the full Z_6 code:");
    for word in image.words() {
        let inverse = image.codeword_inverse(word)?;
        println!("  {word}   inverse {inverse}");
    }

    // star multiplication mirrors addition upstairs
    let a = code.binary_word(&[2])?;
    let b = code.binary_word(&[3])?;
    println!("\n{a} * {b} = {}", image.star(&a, &b)?);

    let report = check_propelinear(&image);
    println!("\naxioms:");
    println!("  identity      {}", report.identity.passed);
    println!("  closure       {}", report.closure.passed);
    println!("  coherence     {}", report.coherence.passed);
    println!("  inverses      {}", report.inverses.passed);
    println!("  associativity {}", report.associativity.passed);

    let compat = check_hamming_compatible(&image, &Sampling::default());
    println!("\nd(x, x*v) = wt(v) over the whole space: {}", compat.passed);
    Ok(())
}
