//! Enumerate all Gray maps at small parameters: none exist for odd r, and
//! the compatible ones form a single orbit under coordinate permutation.
//!
//! ```bash
//! cargo run -p graymod --example search_gray_maps
//! ```

use graymod::search::{enumerate_gray_maps, parity_report, uniqueness_report};

fn main() -> graymod::Result<()> {
    println!("maps from Z_4 into two-bit words:");
    for cand in enumerate_gray_maps(4, 2, usize::MAX)? {
        let images: Vec<String> = cand.images.iter().map(|w| w.to_string()).collect();
        println!("  {}", images.join(" "));
    }

    println!("\nodd r admits no Gray map:");
    for r in [3usize, 5, 7] {
        let report = parity_report(r, 4)?;
        let counts: Vec<String> = report
            .counts
            .iter()
            .map(|c| format!("m={}: {}", c.m, c.gray_maps))
            .collect();
        println!("  r={r}  {}", counts.join("  "));
    }

    println!("\nuniqueness up to coordinate permutation:");
    for k in 1..=3usize {
        let report = uniqueness_report(k, usize::MAX)?;
        println!(
            "  k={k}: {} maps, {} compatible, {} orbit(s), canonical set matched = {}",
            report.total, report.compatible, report.orbits, report.matches_canonical
        );
    }
    Ok(())
}
