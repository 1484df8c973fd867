//! On-disk cache of orthogonal irrep generators, one file per `(n, λ)`.
//!
//! Layout, all integers `u32` little-endian:
//!
//! ```text
//! magic "SRIR" | version | n | ℓ(λ) | λ_1 … λ_ℓ | d_λ
//! then n−1 matrices of d_λ × d_λ f64 little-endian, row-major,
//! one per adjacent transposition (i i+1)
//! ```

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use nalgebra::DMatrix;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::charfin::{IrrepMatrices, LevelTables};
use crate::error::{Error, Result};
use crate::perm::Partition;

const MAGIC: &[u8; 4] = b"SRIR";
pub const FORMAT_VERSION: u32 = 1;

pub fn file_name(lambda: &Partition) -> String {
    let parts: Vec<String> = lambda.parts().iter().map(|p| p.to_string()).collect();
    let label = if parts.is_empty() { "empty".to_string() } else { parts.join("_") };
    format!("irrep-n{}-{label}.bin", lambda.weight())
}

pub fn encode(irrep: &IrrepMatrices) -> Vec<u8> {
    let lambda = irrep.partition();
    let d = irrep.dim();
    let mut out = Vec::with_capacity(24 + 4 * lambda.len() + 8 * d * d * irrep.generators().len());
    out.extend_from_slice(MAGIC);
    let mut push = |x: usize| out.extend_from_slice(&(x as u32).to_le_bytes());
    push(FORMAT_VERSION as usize);
    push(lambda.weight());
    push(lambda.len());
    for &p in lambda.parts() {
        push(p);
    }
    push(d);
    for g in irrep.generators() {
        for r in 0..d {
            for c in 0..d {
                out.extend_from_slice(&g[(r, c)].to_le_bytes());
            }
        }
    }
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take(&mut self, len: usize) -> Result<&[u8]> {
        let end = self.pos + len;
        let slice = self
            .bytes
            .get(self.pos..end)
            .ok_or_else(|| Error::Cache(format!("truncated at byte {}", self.pos)))?;
        self.pos = end;
        Ok(slice)
    }

    fn u32(&mut self) -> Result<usize> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes(b.try_into().expect("4 bytes")) as usize)
    }

    fn f64(&mut self) -> Result<f64> {
        let b = self.take(8)?;
        Ok(f64::from_le_bytes(b.try_into().expect("8 bytes")))
    }
}

pub fn decode(bytes: &[u8]) -> Result<IrrepMatrices> {
    let mut r = Reader { bytes, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err(Error::Cache("bad magic".into()));
    }
    let version = r.u32()?;
    if version != FORMAT_VERSION as usize {
        return Err(Error::Cache(format!("unsupported format version {version}")));
    }
    let n = r.u32()?;
    let len = r.u32()?;
    let parts = (0..len).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
    let lambda = Partition::new(parts)?;
    if lambda.weight() != n {
        return Err(Error::WeightMismatch { expected: n, found: lambda.weight() });
    }
    let d = r.u32()?;
    if d as u64 != lambda.hook_dimension() {
        return Err(Error::Cache(format!("dimension {d} does not match {lambda}")));
    }
    let mut generators = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let mut m = DMatrix::zeros(d, d);
        for row in 0..d {
            for col in 0..d {
                m[(row, col)] = r.f64()?;
            }
        }
        generators.push(m);
    }
    if r.pos != bytes.len() {
        return Err(Error::Cache(format!("{} trailing bytes", bytes.len() - r.pos)));
    }
    IrrepMatrices::from_generators(lambda, generators)
}

/// Largest violation of the Coxeter relations `s_i² = 1`,
/// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`, `s_i s_j = s_j s_i` (`|i−j| > 1`).
pub fn coxeter_defect(irrep: &IrrepMatrices) -> f64 {
    let gens = irrep.generators();
    let d = irrep.dim();
    let id = DMatrix::<f64>::identity(d, d);
    let mut worst: f64 = 0.0;
    for (i, a) in gens.iter().enumerate() {
        worst = worst.max((a * a - &id).norm());
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            let defect = if j == i + 1 { (a * b * a - b * a * b).norm() } else { (a * b - b * a).norm() };
            worst = worst.max(defect);
        }
    }
    worst
}

pub fn write_irrep(dir: &Path, irrep: &IrrepMatrices) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(file_name(irrep.partition()));
    fs::write(&path, encode(irrep))?;
    Ok(path)
}

pub fn read_irrep(path: &Path) -> Result<IrrepMatrices> {
    decode(&fs::read(path)?)
}

/// Tables for level `n` backed by `dir`: missing files are built and
/// written, present ones are loaded and checked against the Coxeter
/// relations. The loaded tables are installed as the shared ones. Returns
/// the SHA-256 of all files concatenated in partition order.
pub fn load_level(dir: &Path, n: usize) -> Result<(Arc<LevelTables>, String)> {
    let loaded = Partition::all(n)
        .par_iter()
        .map(|lambda| {
            let path = dir.join(file_name(lambda));
            let bytes = if path.exists() {
                fs::read(&path)?
            } else {
                let irrep = IrrepMatrices::new(lambda);
                write_irrep(dir, &irrep)?;
                encode(&irrep)
            };
            let irrep = decode(&bytes)?;
            if irrep.partition() != lambda {
                return Err(Error::Cache(format!("{} holds {}", path.display(), irrep.partition())));
            }
            let defect = coxeter_defect(&irrep);
            if defect > 1e-9 {
                return Err(Error::Cache(format!("{} violates Coxeter relations by {defect:e}", path.display())));
            }
            Ok((irrep, bytes))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut hasher = Sha256::new();
    let mut irreps = Vec::with_capacity(loaded.len());
    for (irrep, bytes) in loaded {
        hasher.update(&bytes);
        irreps.push(irrep);
    }
    let tables = LevelTables::install(LevelTables::from_irreps(n, irreps)?);
    Ok((tables, hex::encode(hasher.finalize())))
}
