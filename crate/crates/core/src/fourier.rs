//! Noncommutative Fourier analysis on `S_n`.
//!
//! A function `f` on `S_n` is a functional on the group algebra via
//! `⟨f, a⟩ = Σ_g f(g) a(g)`. Under `C*(S_n) ≅ ⊕_λ M_{d_λ}` the dual norm is
//!
//! ```text
//! ‖f‖_n = Σ_λ (d_λ / n!) · ‖Σ_g f(g) ρ_λ(g⁻¹)‖_trace
//! ```
//!
//! and `f` is positive definite iff every block `Σ_g f(g) ρ_λ(g)` is
//! positive semidefinite.

use std::sync::Arc;

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::charfin::LevelTables;
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix, C64};
use crate::perm::{Partition, Permutation};

/// Default tolerance on the minimal block eigenvalue.
pub const PSD_TOLERANCE: f64 = 1e-9;
/// Default tolerance for `f(g⁻¹) = conj f(g)`.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;

/// A complex function on the finite level `S_n`, stored densely in the
/// element order of [`LevelTables`].
#[derive(Clone, Debug)]
pub struct StateFunction {
    tables: Arc<LevelTables>,
    values: Vec<C64>,
}

impl PartialEq for StateFunction {
    fn eq(&self, other: &Self) -> bool {
        self.level() == other.level() && self.values == other.values
    }
}

impl StateFunction {
    pub fn zeros(n: usize) -> Self {
        let tables = LevelTables::get(n);
        let values = vec![C64::default(); tables.order()];
        Self { tables, values }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Permutation) -> C64) -> Self {
        let tables = LevelTables::get(n);
        let values = tables.group.elements().map(|g| f(&g)).collect();
        Self { tables, values }
    }

    pub fn from_real_fn(n: usize, mut f: impl FnMut(&Permutation) -> f64) -> Self {
        Self::from_fn(n, |g| c(f(g)))
    }

    /// Values given on some elements, zero elsewhere.
    pub fn from_sparse<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, C64)>,
    {
        let mut f = Self::zeros(n);
        for (g, v) in entries {
            let idx = f.tables.group.index_of(&g).ok_or(Error::LevelTooLarge {
                requested: g.level(),
                available: n,
            })?;
            f.values[idx] = v;
        }
        Ok(f)
    }

    /// Indicator of the identity, the regular character.
    pub fn delta_e(n: usize) -> Self {
        let mut f = Self::zeros(n);
        f.values[0] = c(1.0);
        f
    }

    pub fn level(&self) -> usize {
        self.tables.n
    }

    pub fn tables(&self) -> &Arc<LevelTables> {
        &self.tables
    }

    /// Values indexed like `self.tables().group`.
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn value(&self, g: &Permutation) -> Option<C64> {
        self.tables.group.index_of(g).map(|i| self.values[i])
    }

    pub fn value_at_index(&self, idx: usize) -> C64 {
        self.values[idx]
    }

    /// Largest `|f(g⁻¹) − conj f(g)|`.
    pub fn hermitian_defect(&self) -> f64 {
        (0..self.values.len())
            .map(|i| (self.values[self.tables.group.inverse(i)] - self.values[i].conj()).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    /// Literal restriction of the value table to the subgroup `S_m`.
    pub fn restrict(&self, m: usize) -> Result<StateFunction> {
        if m > self.level() {
            return Err(Error::LevelTooLarge { requested: m, available: self.level() });
        }
        let tables = LevelTables::get(m);
        let values = tables
            .group
            .elements()
            .map(|g| self.value(&g).expect("S_m ⊂ S_n"))
            .collect();
        Ok(StateFunction { tables, values })
    }

    pub fn scale(&self, z: C64) -> StateFunction {
        StateFunction {
            tables: Arc::clone(&self.tables),
            values: self.values.iter().map(|v| v * z).collect(),
        }
    }

    /// `self − other`; both must live on the same level.
    pub fn sub(&self, other: &StateFunction) -> Result<StateFunction> {
        if self.level() != other.level() {
            return Err(Error::LevelTooLarge {
                requested: other.level().max(self.level()),
                available: other.level().min(self.level()),
            });
        }
        Ok(StateFunction {
            tables: Arc::clone(&self.tables),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    /// `Σ_g f(g) a(g)`.
    pub fn pairing(&self, a: &StateFunction) -> C64 {
        self.values.iter().zip(&a.values).map(|(x, y)| x * y).sum()
    }

    /// Gram matrix `G[g, h] = f(g⁻¹ h)` in element order.
    pub fn gram_matrix(&self) -> CMatrix {
        let group = &self.tables.group;
        let size = group.order();
        CMatrix::from_fn(size, size, |g, h| self.values[group.multiply(group.inverse(g), h)])
    }
}

/// One complex `d_λ × d_λ` block per `λ ⊢ n`, in [`Partition::all`] order.
#[derive(Clone, Debug)]
pub struct FourierBlocks {
    pub n: usize,
    pub blocks: Vec<(Partition, CMatrix)>,
}

impl FourierBlocks {
    pub fn block(&self, lambda: &Partition) -> Option<&CMatrix> {
        self.blocks.iter().find(|(l, _)| l == lambda).map(|(_, m)| m)
    }
}

/// `block(λ) = Σ_g f(g) ρ_λ(g)`.
pub fn fourier(f: &StateFunction) -> FourierBlocks {
    let tables = &f.tables;
    let blocks = tables
        .irreps
        .par_iter()
        .map(|irrep| {
            let d = irrep.dim();
            let mut re = DMatrix::<f64>::zeros(d, d);
            let mut im = DMatrix::<f64>::zeros(d, d);
            irrep.for_each_element(&tables.group, |idx, m| {
                let v = f.values[idx];
                if v.re != 0.0 {
                    re += m * v.re;
                }
                if v.im != 0.0 {
                    im += m * v.im;
                }
            });
            let block = CMatrix::from_fn(d, d, |i, j| C64::new(re[(i, j)], im[(i, j)]));
            (irrep.partition().clone(), block)
        })
        .collect();
    FourierBlocks { n: tables.n, blocks }
}

/// Inverse transform: `a(g) = Σ_λ (d_λ/n!) tr(ρ_λ(g⁻¹) â(λ))`.
pub fn inverse_fourier(blocks: &FourierBlocks) -> StateFunction {
    let tables = LevelTables::get(blocks.n);
    let order = tables.order() as f64;
    let mut values = vec![C64::default(); tables.order()];
    for (irrep, (lambda, block)) in tables.irreps.iter().zip(&blocks.blocks) {
        debug_assert_eq!(irrep.partition(), lambda);
        let weight = irrep.dim() as f64 / order;
        irrep.for_each_element(&tables.group, |idx, m| {
            // tr(ρ(g)ᵀ B) = Σ_ij ρ(g)_ij B_ij
            let tr: C64 = m.iter().zip(block.iter()).map(|(&r, &b)| b * r).sum();
            values[idx] += tr * weight;
        });
    }
    StateFunction { tables, values }
}

/// Norm of `f` as an element of `C*(S_n)*`.
pub fn dual_norm(f: &StateFunction) -> f64 {
    let order = f.tables.order() as f64;
    // ‖Σ f(g) ρ(g⁻¹)‖_tr = ‖(Σ f(g) ρ(g))ᵀ‖_tr
    fourier(f)
        .blocks
        .iter()
        .map(|(_, b)| b.nrows() as f64 / order * linalg::trace_norm(b))
        .sum()
}

/// An element `a` of the unit ball of `C*(S_n)` attaining `⟨f, a⟩ = ‖f‖_n`.
pub fn dual_norm_optimizer(f: &StateFunction) -> StateFunction {
    let blocks = fourier(f);
    // F_λ = Σ f(g) ρ(g⁻¹) = blockᵀ; with F = U Σ Vᴴ take â = V Uᴴ.
    let optimal = blocks
        .blocks
        .into_iter()
        .map(|(l, b)| (l, linalg::polar_unitary(&b.transpose()).adjoint()))
        .collect();
    inverse_fourier(&FourierBlocks { n: blocks.n, blocks: optimal })
}

/// Operator norm of `a` in `C*(S_n)`: the largest block operator norm.
pub fn cstar_norm(a: &StateFunction) -> f64 {
    fourier(a).blocks.iter().map(|(_, b)| linalg::operator_norm(b)).fold(0.0, f64::max)
}

/// Outcome of a positive-definiteness test.
#[derive(Clone, Debug, Serialize)]
pub struct PsdCertificate {
    pub positive_definite: bool,
    pub min_eigenvalue: f64,
    /// Minimal eigenvalue per block, in [`Partition::all`] order.
    pub block_min_eigenvalues: Vec<(Partition, f64)>,
}

pub fn is_positive_definite(f: &StateFunction) -> Result<PsdCertificate> {
    positive_definiteness(f, PSD_TOLERANCE)
}

/// Certifies `f` positive definite when every Fourier block has minimal
/// eigenvalue `>= -tol`. Non-hermitian input is rejected.
pub fn positive_definiteness(f: &StateFunction, tol: f64) -> Result<PsdCertificate> {
    let defect = f.hermitian_defect();
    if defect > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian { defect });
    }
    let block_min_eigenvalues: Vec<(Partition, f64)> = fourier(f)
        .blocks
        .into_iter()
        .map(|(l, b)| (l, linalg::min_hermitian_eigenvalue(&b)))
        .collect();
    let min_eigenvalue = block_min_eigenvalues
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::INFINITY, f64::min);
    Ok(PsdCertificate {
        positive_definite: min_eigenvalue >= -tol,
        min_eigenvalue,
        block_min_eigenvalues,
    })
}

/// `‖f|_{S_n} − h|_{S_n}‖_n` for functions on a common level `K >= n`.
pub fn restricted_distance(f: &StateFunction, h: &StateFunction, n: usize) -> Result<f64> {
    let diff = f.restrict(n)?.sub(&h.restrict(n)?)?;
    Ok(dual_norm(&diff))
}
