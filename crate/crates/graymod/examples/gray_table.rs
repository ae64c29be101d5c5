//! Print Gray tables for small k and demonstrate that the map preserves
//! the Lee metric.
//!
//! ```bash
//! cargo run -p graymod --example gray_table
//! ```

use graymod::algebra::Residue;
use graymod::gray::GrayTable;

fn main() -> graymod::Result<()> {
    for k in 1..=4usize {
        let table = GrayTable::new(k)?;
        let modulus = table.modulus();
        println!("k = {k} (Z_{modulus} -> binary words of length {k})");
        for (j, word) in table.entries().iter().enumerate() {
            println!("  {j} -> {word}   weight {}", word.weight());
        }
        println!();
    }

    // the image metric is the Lee metric
    let k = 4usize;
    let table = GrayTable::new(k)?;
    let modulus = table.modulus();
    println!("distance preservation at k = {k}:");
    for (i, j) in [(1u32, 5u32), (0, 4), (2, 7)] {
        let lee = Residue::new(i.into(), modulus)?.lee_distance(&Residue::new(j.into(), modulus)?)?;
        let hamming = table.phi(i)?.distance(&table.phi(j)?)?;
        assert_eq!(lee, hamming);
        println!("  d_lee({i}, {j}) = {lee} = d({}, {})", table.phi(i)?, table.phi(j)?);
    }
    Ok(())
}
