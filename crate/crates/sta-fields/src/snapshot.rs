//! Flat binary lattice snapshots.
//!
//! Layout (little-endian): magic `STADHE1\0`, u32 payload width, u32 reserved, u64 cell count,
//! f64 spacing, f64 time, then `cells × width` f64 values.

use std::io::{Read, Write};

use sta_core::Mv;

use crate::{FieldError, SnapshotError};

pub const MAGIC: &[u8; 8] = b"STADHE1\0";
const HEADER: usize = 8 + 4 + 4 + 8 + 8 + 8;

#[derive(Clone, Debug, PartialEq)]
pub struct Snapshot {
    pub width: u32,
    pub dz: f64,
    pub t: f64,
    pub data: Vec<f64>,
}

impl Snapshot {
    pub fn from_cells(dz: f64, t: f64, cells: &[Mv]) -> Self {
        Self { width: 16, dz, t, data: cells.iter().flat_map(|c| *c.coeffs()).collect() }
    }

    pub fn ncells(&self) -> usize {
        self.data.len() / self.width as usize
    }

    pub fn cells(&self) -> Result<Vec<Mv>, FieldError> {
        if self.width != 16 {
            return Err(FieldError::InvalidLattice(format!("payload width {} is not a multivector", self.width)));
        }
        Ok(self.data.chunks_exact(16).map(|c| Mv::from_coeffs(c.try_into().expect("chunk of 16"))).collect())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER + 8 * self.data.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&self.width.to_le_bytes());
        out.extend_from_slice(&0u32.to_le_bytes());
        out.extend_from_slice(&(self.ncells() as u64).to_le_bytes());
        out.extend_from_slice(&self.dz.to_le_bytes());
        out.extend_from_slice(&self.t.to_le_bytes());
        for x in &self.data {
            out.extend_from_slice(&x.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, SnapshotError> {
        if bytes.len() < HEADER {
            return Err(SnapshotError::Truncated { expected: HEADER, found: bytes.len() });
        }
        if &bytes[..8] != MAGIC {
            return Err(SnapshotError::BadMagic);
        }
        let u32_at = |i: usize| u32::from_le_bytes(bytes[i..i + 4].try_into().expect("4 bytes"));
        let f64_at = |i: usize| f64::from_le_bytes(bytes[i..i + 8].try_into().expect("8 bytes"));
        let width = u32_at(8);
        if width == 0 {
            return Err(SnapshotError::Width(width));
        }
        let ncells = u64::from_le_bytes(bytes[16..24].try_into().expect("8 bytes")) as usize;
        let expected = HEADER + 8 * ncells * width as usize;
        if bytes.len() != expected {
            return Err(SnapshotError::Truncated { expected, found: bytes.len() });
        }
        let data = (0..ncells * width as usize).map(|k| f64_at(HEADER + 8 * k)).collect();
        Ok(Self { width, dz: f64_at(24), t: f64_at(32), data })
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<(), SnapshotError> {
        w.write_all(&self.to_bytes())?;
        Ok(())
    }

    pub fn read_from(mut r: impl Read) -> Result<Self, SnapshotError> {
        let mut buf = Vec::new();
        r.read_to_end(&mut buf)?;
        Self::from_bytes(&buf)
    }
}
