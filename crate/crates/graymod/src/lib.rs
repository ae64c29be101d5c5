//! Codes over Z_2k realized as binary propelinear codes.
//!
//! An additive code over Z_2k (or over a product of cyclic groups of even
//! order) maps onto a binary code through a Gray map that sends each
//! residue to a length-k word, turning the Lee metric upstairs into the
//! Hamming metric downstairs. Each image codeword carries a cyclic-shift
//! permutation, and the induced star product makes the image a propelinear
//! code isomorphic to the original. This crate builds those objects and
//! verifies their structural properties exhaustively at small parameters:
//! the group axioms of the image, Hamming compatibility of the action, the
//! translation-invariance boundary at modulus 4, 1-perfectness, and the
//! uniqueness of the Gray map itself.
//!
//! ```
//! use graymod::algebra::ZkVector;
//! use graymod::gray::GrayTable;
//!
//! let table = GrayTable::new(2)?;
//! assert_eq!(table.phi(3)?.to_string(), "10");
//!
//! let v = ZkVector::new(4, vec![1, 2])?;
//! let image = table.big_phi(&v)?;
//! assert_eq!(image.to_string(), "0111");
//! assert_eq!(image.weight(), v.lee_weight());
//! # Ok::<(), graymod::Error>(())
//! ```
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p graymod --example gray_table             # tables and metric preservation
//! cargo run -p graymod --example map_vectors            # vector images and inverses
//! cargo run -p graymod --example span_and_rates         # spanning, distances, rates, types
//! cargo run -p graymod --example propelinear_image      # star products and axiom checks
//! cargo run -p graymod --example translation_invariance # the modulus-4 boundary
//! cargo run -p graymod --example perfect_codes          # 1-perfect controls and obstructions
//! cargo run -p graymod --example search_gray_maps       # exhaustive map enumeration
//! ```
//!
//! ## Command line
//!
//! The `graymod` binary exposes the same operations as batch subcommands
//! (`gray`, `map`, `unmap`, `analyze`, `verify`, `perfect`, `search`) with
//! byte-stable JSON reports under `--json`; see the README for the full
//! interface.
//!
//! ## Layout
//!
//! - [`algebra`]: residues and vectors modulo 2k with the Lee metric
//! - [`word`]: binary words and coordinate permutations
//! - [`gray`]: the Gray table, shift permutations, vector and mixed images
//! - [`propelinear`]: codes with permutation structure and their checkers
//! - [`lattice`]: spanned codes, distances, rates, type minimization
//! - [`perfect`]: 1-perfectness and the large-modulus obstruction
//! - [`search`]: exhaustive Gray map enumeration, parity and uniqueness
//! - [`cli`]: the subcommand frontend
//!
//! Everything is exact integer arithmetic except the information rates;
//! all values are immutable after construction and safe to share across
//! threads.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod gray;
pub mod lattice;
pub mod perfect;
pub mod propelinear;
pub mod search;
pub mod word;

pub use error::{Error, Result};
pub use word::{BinaryWord, Permutation};
