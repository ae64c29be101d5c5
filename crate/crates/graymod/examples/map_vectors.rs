//! Map vectors to binary words blockwise and invert the images.
//!
//! ```bash
//! cargo run -p graymod --example map_vectors
//! ```

use graymod::algebra::ZkVector;
use graymod::gray::{mixed_phi, GrayTable};
use graymod::word::BinaryWord;

fn main() -> graymod::Result<()> {
    // single modulus: each coordinate becomes one length-k segment
    let table = GrayTable::new(2)?;
    let v = ZkVector::new(4, vec![1, 2])?;
    let image = table.big_phi(&v)?;
    println!("(1,2) over Z_4  ->  {image}");
    assert_eq!(table.big_phi_inverse(&image)?, v);

    let back = table.big_phi_inverse(&BinaryWord::parse("1001")?)?;
    println!("1001 over Z_4   <-  {:?}", back.coords());

    // words outside the image are rejected
    match GrayTable::new(3)?.big_phi_inverse(&BinaryWord::parse("010")?) {
        Err(e) => println!("010 at k=3      ->  {e}"),
        Ok(_) => unreachable!(),
    }

    // mixed blocks concatenate per-modulus images
    let blocks = vec![ZkVector::new(2, vec![1])?, ZkVector::new(4, vec![1])?];
    println!("(1 | 1) over Z_2 x Z_4  ->  {}", mixed_phi(&blocks)?);

    let blocks = vec![ZkVector::new(6, vec![3])?];
    println!("(3) over Z_6            ->  {}", mixed_phi(&blocks)?);
    Ok(())
}
