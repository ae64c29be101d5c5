//! Exact arithmetic in Z_2k and its n-fold product, with the Lee metric.
//!
//! Values are kept canonical in `[0, modulus)`. Moduli must be even and at
//! least 2; everything is plain integer arithmetic.

use crate::error::{Error, Result};

fn check_modulus(modulus: u32) -> Result<()> {
    if modulus < 2 || !modulus.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "modulus must be even and >= 2, got {modulus}"
        )));
    }
    Ok(())
}

/// An element of Z_2k, stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

impl Residue {
    /// Reduces `value` into `[0, modulus)`. The modulus must be even.
    pub fn new(value: u64, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Residue {
            value: (value % u64::from(modulus)) as u32,
            modulus,
        })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        Ok(Residue {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn negate(&self) -> Residue {
        Residue {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Lee weight: the smallest absolute value over all integer
    /// representatives, `min(v, modulus - v)`.
    pub fn lee_weight(&self) -> u32 {
        self.value.min(self.modulus - self.value)
    }

    /// Lee distance, the Lee weight of the difference.
    pub fn lee_distance(&self, other: &Residue) -> Result<u32> {
        Ok(self.add(&other.negate())?.lee_weight())
    }
}

/// A vector over Z_2k with a fixed modulus shared by all coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZkVector {
    modulus: u32,
    coords: Vec<u32>,
}

impl ZkVector {
    /// Coordinates must already lie in `[0, modulus)`; out-of-range input is
    /// rejected rather than silently reduced.
    pub fn new(modulus: u32, coords: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        if coords.is_empty() {
            return Err(Error::InvalidInput("vector must have length >= 1".into()));
        }
        for &c in &coords {
            if c >= modulus {
                return Err(Error::OutOfRange(format!(
                    "coordinate {c} not in [0, {modulus})"
                )));
            }
        }
        Ok(ZkVector { modulus, coords })
    }

    pub fn zero(modulus: u32, len: usize) -> Result<Self> {
        ZkVector::new(modulus, vec![0; len])
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// Half the modulus; the per-coordinate binary image length.
    pub fn half_modulus(&self) -> u32 {
        self.modulus / 2
    }

    pub fn add(&self, other: &ZkVector) -> Result<ZkVector> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::LengthMismatch(self.coords.len(), other.coords.len()));
        }
        Ok(ZkVector {
            modulus: self.modulus,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| (a + b) % self.modulus)
                .collect(),
        })
    }

    pub fn negate(&self) -> ZkVector {
        ZkVector {
            modulus: self.modulus,
            coords: self
                .coords
                .iter()
                .map(|&c| (self.modulus - c) % self.modulus)
                .collect(),
        }
    }

    /// Sum of the coordinatewise Lee weights.
    pub fn lee_weight(&self) -> u32 {
        self.coords
            .iter()
            .map(|&c| c.min(self.modulus - c))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}
