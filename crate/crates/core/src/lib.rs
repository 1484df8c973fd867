//! Computable finite truncations of the stable representation theory of the
//! infinite symmetric group `S_N`.
//!
//! The crate is organized bottom-up:
//!
//! - [`perm`]: finitely supported permutations, cycle types, partitions and
//!   the dense finite levels `S_n`.
//! - [`charfin`]: characters (Murnaghan–Nakayama) and Young's orthogonal form.
//! - [`fourier`]: Fourier blocks on `S_n`, the dual norm of `C*(S_n)*` and
//!   positive-definiteness certificates.
//! - [`thoma`]: Thoma characters, the type II_1 / II_∞ rule and recovery of
//!   Thoma parameters from cycle values.
//! - [`stable`]: canonical partially central states, asymptotic characters,
//!   central depth and classification up to quasi-equivalence.
//! - [`stability`]: orbit maps under inner automorphisms, the truncated
//!   metric and stability profiles.
//! - [`gns`]: GNS triples, double commutants, support projections, the
//!   standard form with its modular conjugation, and the biregular
//!   representation of `S_k × S_k`; induced characters.
//! - [`cache`] and [`cli`]: the on-disk irrep cache and the batch interface.

pub mod cache;
pub mod charfin;
pub mod cli;
pub mod error;
pub mod fourier;
pub mod gns;
pub mod linalg;
pub mod perm;
pub mod stability;
pub mod stable;
pub mod thoma;

pub use error::{Error, Result};
pub use perm::{CycleType, Partition, Permutation, SymmetricGroup};
