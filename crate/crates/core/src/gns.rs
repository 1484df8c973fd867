//! Finite-dimensional von Neumann algebra machinery for states on `S_k`:
//! GNS triples, double commutants and centers, support projections, the
//! standard form with its modular conjugation, the biregular
//! representation, and induced characters of `S_n × S_{m−n}`.
//!
//! Antilinear maps are stored as real matrices acting on coordinates
//! `[Re c; Im c]` with respect to an orthonormal basis.

use std::collections::HashMap;

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::charfin::{character_table, mn_character, LevelTables};
use crate::error::{Error, Result};
use crate::fourier::{StateFunction, HERMITIAN_TOLERANCE, PSD_TOLERANCE};
use crate::linalg::{
    c, commutant, complexify, hermitian_eigen, hermitian_fn, hermitian_part, orthonormalize,
    project_onto, realify, subspace_distance, CMatrix, C64,
};
use crate::perm::{factorial, CycleType, Partition, Permutation, SymmetricGroup};

/// Relative cutoff for numerical rank and null spaces.
pub const RANK_TOLERANCE: f64 = 1e-9;
/// Weight of the normalized trace mixed into a state to make it faithful.
pub const FAITHFUL_MIX: f64 = 1e-3;

/// `(H, π, ξ)` for a state on `S_k`; `pi[i]` represents the group element
/// with index `i`.
#[derive(Clone, Debug)]
pub struct GnsTriple {
    pub level: usize,
    pub pi: Vec<CMatrix>,
    pub xi: DVector<C64>,
    pub dim: usize,
}

impl GnsTriple {
    /// Images of the adjacent transpositions, which generate `π(S_k)''`.
    pub fn generators(&self) -> Vec<CMatrix> {
        let group = SymmetricGroup::new(self.level);
        (1..self.level)
            .map(|i| {
                let idx = group.index_of(&Permutation::transposition(i, i + 1)).expect("in S_k");
                self.pi[idx].clone()
            })
            .collect()
    }

    /// `max_g |⟨π(g)ξ, ξ⟩ − f(g)|`.
    pub fn coefficient_defect(&self, f: &StateFunction) -> f64 {
        self.pi
            .iter()
            .zip(f.values())
            .map(|(p, v)| (self.xi.dotc(&(p * &self.xi)) - v).norm())
            .fold(0.0, f64::max)
    }

    /// `max ‖π(a)π(b) − π(ab)‖` over all pairs, and `max ‖π(g)*π(g) − I‖`.
    pub fn homomorphism_defect(&self) -> (f64, f64) {
        let group = SymmetricGroup::new(self.level);
        let order = group.order();
        let id = CMatrix::identity(self.dim, self.dim);
        let hom = (0..order)
            .into_par_iter()
            .map(|a| {
                (0..order)
                    .map(|b| (&self.pi[a] * &self.pi[b] - &self.pi[group.multiply(a, b)]).norm())
                    .fold(0.0, f64::max)
            })
            .reduce(|| 0.0, f64::max);
        let unitary =
            self.pi.iter().map(|p| (p.adjoint() * p - &id).norm()).fold(0.0, f64::max);
        (hom, unitary)
    }
}

/// GNS construction from the Gram matrix `G[g, h] = f(g⁻¹h)`: the carrier is
/// its column space and `π(g)` permutes columns.
pub fn gns(f: &StateFunction) -> Result<GnsTriple> {
    let defect = f.hermitian_defect();
    if defect > HERMITIAN_TOLERANCE {
        return Err(Error::NotHermitian { defect });
    }
    let at_e = f.value_at_index(0);
    if (at_e - c(1.0)).norm() > HERMITIAN_TOLERANCE {
        return Err(Error::NotNormalized { value: at_e.re });
    }
    let group = &f.tables().group;
    let order = group.order();
    let (values, vectors) = hermitian_eigen(&f.gram_matrix());
    let scale = values.last().copied().unwrap_or(0.0).abs().max(1.0);
    if values[0] < -PSD_TOLERANCE * scale {
        return Err(Error::NotPositive { min_eigenvalue: values[0] });
    }
    let kept: Vec<usize> = (0..order).filter(|&i| values[i] > RANK_TOLERANCE * scale).collect();
    let dim = kept.len();
    // W = Λ^{1/2} V_rᴴ maps e_g to the class of g; W⁺ = V_r Λ^{-1/2}
    let w = CMatrix::from_fn(dim, order, |r, g| {
        vectors[(g, kept[r])].conj() * values[kept[r]].sqrt()
    });
    let w_plus = CMatrix::from_fn(order, dim, |g, r| vectors[(g, kept[r])] / values[kept[r]].sqrt());
    let pi = (0..order)
        .into_par_iter()
        .map(|x| {
            let mut moved = CMatrix::zeros(order, dim);
            for g in 0..order {
                moved.set_row(group.multiply(x, g), &w_plus.row(g));
            }
            &w * moved
        })
        .collect();
    let xi = w.column(0).into_owned();
    Ok(GnsTriple { level: f.level(), pi, xi, dim })
}

/// HS-orthonormal basis of `{A}''`, the algebra generated by the operators.
pub fn double_commutant(ops: &[CMatrix], d: usize) -> Vec<CMatrix> {
    let first = commutant(ops, d, RANK_TOLERANCE);
    commutant(&first, d, RANK_TOLERANCE)
}

/// `Z(M) = M ∩ M'` for the algebra spanned by `basis`.
pub fn center(basis: &[CMatrix], d: usize) -> Vec<CMatrix> {
    let mut both = basis.to_vec();
    both.extend(commutant(basis, d, RANK_TOLERANCE));
    commutant(&both, d, RANK_TOLERANCE)
}

#[derive(Clone, Debug)]
pub struct SupportProjection {
    pub projection: CMatrix,
    /// Density of the restriction to `M`, an element of `M`.
    pub density: CMatrix,
}

/// Smallest projection `E ∈ M` with `ψ(I − E) = 0` for `ψ = tr(ρ ·)`.
pub fn support_projection(density: &CMatrix, basis: &[CMatrix]) -> Result<SupportProjection> {
    let basis = orthonormalize(basis, 1e-10);
    let restricted = hermitian_part(&project_onto(&basis, density));
    let (values, vectors) = hermitian_eigen(&restricted);
    let scale = values.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    if let Some(&min) = values.first() {
        if min < -PSD_TOLERANCE * scale {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
    }
    let d = density.nrows();
    let mut projection = CMatrix::zeros(d, d);
    for (i, &v) in values.iter().enumerate() {
        if v > RANK_TOLERANCE * scale {
            let col = vectors.column(i);
            projection += col * col.adjoint();
        }
    }
    Ok(SupportProjection { projection, density: restricted })
}

/// `M` acting on itself by left multiplication, with cyclic vector
/// `ξ̃ = ρ^{1/2}` for a faithful density `ρ ∈ M`.
#[derive(Clone, Debug)]
pub struct StandardForm {
    /// HS-orthonormal basis of `M ⊂ M_d`; also the basis of the carrier.
    pub basis: Vec<CMatrix>,
    pub density: CMatrix,
    pub xi: DVector<C64>,
    /// `S̃: mξ̃ ↦ m*ξ̃`, realified.
    pub s: DMatrix<f64>,
    /// Phase of the polar decomposition of `S̃`, realified.
    pub j: DMatrix<f64>,
    /// `M̃`: left multiplications by the basis elements.
    pub algebra: Vec<CMatrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardFormResiduals {
    pub j_squared: f64,
    pub j_isometry: f64,
    pub j_fixes_xi: f64,
    pub jmj_commutant: f64,
    /// Distance of `J̃` from `X ↦ X*` on the carrier.
    pub j_adjoint_map: f64,
}

fn realify_vector(v: &DVector<C64>) -> DVector<f64> {
    let n = v.len();
    DVector::from_fn(2 * n, |i, _| if i < n { v[i].re } else { v[i - n].im })
}

fn complexify_vector(v: &DVector<f64>) -> DVector<C64> {
    let n = v.len() / 2;
    DVector::from_fn(n, |i, _| C64::new(v[i], v[i + n]))
}

impl StandardForm {
    pub fn new(basis: &[CMatrix], density: &CMatrix) -> Result<Self> {
        let basis = orthonormalize(basis, 1e-10);
        let rho = hermitian_part(&project_onto(&basis, density));
        let (values, _) = hermitian_eigen(&rho);
        let min = values.first().copied().unwrap_or(0.0);
        if min <= RANK_TOLERANCE {
            return Err(Error::NotFaithful { min_eigenvalue: min });
        }
        let root = hermitian_fn(&rho, f64::sqrt);
        let inv_root = hermitian_fn(&rho, |v| 1.0 / v.sqrt());
        let dim = basis.len();
        let coords = |x: &CMatrix| DVector::from_iterator(dim, basis.iter().map(|b| b.dotc(x)));
        let mut s = DMatrix::zeros(2 * dim, 2 * dim);
        for (j, b) in basis.iter().enumerate() {
            for (col, x) in [(j, b.clone()), (j + dim, b * C64::i())] {
                let image = realify_vector(&coords(&(&inv_root * x.adjoint() * &root)));
                s.set_column(col, &image);
            }
        }
        let svd = s.clone().svd(true, true);
        let j = svd.u.expect("requested U") * svd.v_t.expect("requested V^T");
        let xi = coords(&root);
        let algebra = basis.iter().map(|b| Self::left_in(&basis, b)).collect();
        Ok(Self { basis, density: rho, xi, s, j, algebra })
    }

    fn left_in(basis: &[CMatrix], m: &CMatrix) -> CMatrix {
        let dim = basis.len();
        CMatrix::from_fn(dim, dim, |i, j| basis[i].dotc(&(m * &basis[j])))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, x: &CMatrix) -> DVector<C64> {
        DVector::from_iterator(self.dim(), self.basis.iter().map(|b| b.dotc(x)))
    }

    /// `X ↦ mX` in carrier coordinates.
    pub fn left(&self, m: &CMatrix) -> CMatrix {
        Self::left_in(&self.basis, m)
    }

    /// `X ↦ Xm` in carrier coordinates.
    pub fn right(&self, m: &CMatrix) -> CMatrix {
        let dim = self.dim();
        CMatrix::from_fn(dim, dim, |i, j| self.basis[i].dotc(&(&self.basis[j] * m)))
    }

    pub fn apply_j(&self, v: &DVector<C64>) -> DVector<C64> {
        complexify_vector(&(&self.j * realify_vector(v)))
    }

    /// `J̃ A J̃⁻¹` for a complex-linear `A`.
    pub fn conjugate_by_j(&self, a: &CMatrix) -> CMatrix {
        complexify(&(&self.j * realify(a) * &self.j)).0
    }

    pub fn residuals(&self) -> StandardFormResiduals {
        let n = self.j.nrows();
        let id = DMatrix::<f64>::identity(n, n);
        let j_squared = (&self.j * &self.j - &id).norm();
        let j_isometry = (self.j.transpose() * &self.j - &id).norm();
        let j_fixes_xi = (self.apply_j(&self.xi) - &self.xi).norm();
        let conjugated: Vec<CMatrix> = self.algebra.iter().map(|a| self.conjugate_by_j(a)).collect();
        let prime = commutant(&self.algebra, self.dim(), RANK_TOLERANCE);
        let jmj_commutant = subspace_distance(&conjugated, &prime);
        let mut adjoint = DMatrix::zeros(n, n);
        let dim = self.dim();
        for (j, b) in self.basis.iter().enumerate() {
            for (col, x) in [(j, b.clone()), (j + dim, b * C64::i())] {
                adjoint.set_column(col, &realify_vector(&self.coords(&x.adjoint())));
            }
        }
        let j_adjoint_map = (&self.j - adjoint).norm();
        StandardFormResiduals { j_squared, j_isometry, j_fixes_xi, jmj_commutant, j_adjoint_map }
    }
}

/// Standard form of the algebra generated by the GNS representation of `f`,
/// for the faithful state `(1 − ε)⟨· ξ, ξ⟩ + ε tr/d`.
pub fn standard_form_of(triple: &GnsTriple, epsilon: f64) -> Result<StandardForm> {
    let d = triple.dim;
    let basis = double_commutant(&triple.generators(), d);
    let vector_state = &triple.xi * triple.xi.adjoint();
    let trace = CMatrix::identity(d, d) / c(d as f64);
    let density = vector_state * c(1.0 - epsilon) + trace * c(epsilon);
    StandardForm::new(&basis, &density)
}

/// `Π̃((g, h)) = π̃(g) J̃ π̃(h) J̃⁻¹`, stored as its left and right factors.
#[derive(Clone, Debug)]
pub struct BiregularRep {
    pub level: usize,
    pub left: Vec<CMatrix>,
    pub right: Vec<CMatrix>,
}

impl BiregularRep {
    pub fn new(sf: &StandardForm, pi: &[CMatrix], level: usize) -> Self {
        let left: Vec<CMatrix> = pi.iter().map(|p| sf.left(p)).collect();
        let right = left.iter().map(|l| sf.conjugate_by_j(l)).collect();
        Self { level, left, right }
    }

    pub fn pair(&self, g: usize, h: usize) -> CMatrix {
        &self.left[g] * &self.right[h]
    }

    /// `Π̃((g, g))`, implementing `Ad g`.
    pub fn a_pi(&self, g: usize) -> CMatrix {
        self.pair(g, g)
    }

    /// Largest homomorphism defect over the given pairs of pairs.
    pub fn homomorphism_defect(&self, quads: &[(usize, usize, usize, usize)]) -> f64 {
        let group = SymmetricGroup::new(self.level);
        quads
            .par_iter()
            .map(|&(g1, h1, g2, h2)| {
                let lhs = self.pair(g1, h1) * self.pair(g2, h2);
                let rhs = self.pair(group.multiply(g1, g2), group.multiply(h1, h2));
                (lhs - rhs).norm()
            })
            .reduce(|| 0.0, f64::max)
    }

    /// `max ‖[Π̃((g, e)), Π̃((e, h))]‖`.
    pub fn commutation_defect(&self) -> f64 {
        let n = self.left.len();
        (0..n)
            .into_par_iter()
            .map(|g| {
                (0..n)
                    .map(|h| (&self.left[g] * &self.right[h] - &self.right[h] * &self.left[g]).norm())
                    .fold(0.0, f64::max)
            })
            .reduce(|| 0.0, f64::max)
    }

    /// `max ‖a_π(g) π̃(x) a_π(g)* − π̃(gxg⁻¹)‖` over all `g, x`.
    pub fn ad_defect(&self) -> f64 {
        let group = SymmetricGroup::new(self.level);
        let n = self.left.len();
        (0..n)
            .into_par_iter()
            .map(|g| {
                let a = self.a_pi(g);
                let g_inv = group.inverse(g);
                (0..n)
                    .map(|x| {
                        let target = group.multiply(group.multiply(g, x), g_inv);
                        (&a * &self.left[x] * a.adjoint() - &self.left[target]).norm()
                    })
                    .fold(0.0, f64::max)
            })
            .reduce(|| 0.0, f64::max)
    }

    /// Distance between the center of the algebra generated by `Π̃` and the
    /// center of `M̃`.
    pub fn center_distance(&self, sf: &StandardForm) -> f64 {
        let d = sf.dim();
        let group = SymmetricGroup::new(self.level);
        let gens: Vec<CMatrix> = (1..self.level)
            .flat_map(|i| {
                let idx = group.index_of(&Permutation::transposition(i, i + 1)).expect("in S_k");
                [self.left[idx].clone(), self.right[idx].clone()]
            })
            .collect();
        let generated = double_commutant(&gens, d);
        distance_of_centers(&generated, &sf.algebra, d)
    }
}

fn distance_of_centers(a: &[CMatrix], b: &[CMatrix], d: usize) -> f64 {
    subspace_distance(&center(a, d), &center(b, d))
}

/// Irreducible constituents `λ` of a representation of `S_k` given on every
/// element, with multiplicities.
pub fn irreducible_labels(reps: &[CMatrix], level: usize) -> Vec<(Partition, usize)> {
    let group = SymmetricGroup::new(level);
    let traces: Vec<(CycleType, f64)> =
        group.elements().zip(reps).map(|(g, r)| (g.cycle_type(), r.trace().re)).collect();
    let order = group.order() as f64;
    Partition::all(level)
        .into_iter()
        .filter_map(|lambda| {
            let inner: f64 = traces
                .iter()
                .map(|(ct, t)| t * mn_character(&lambda, ct).expect("weight k") as f64)
                .sum();
            let mult = (inner / order).round() as usize;
            (mult > 0).then_some((lambda, mult))
        })
        .collect()
}

/// Quasi-equivalence at finite level: equal sets of irreducible constituents.
pub fn quasi_equivalent_reps(a: &[CMatrix], b: &[CMatrix], level: usize) -> bool {
    let labels = |r: &[CMatrix]| -> Vec<Partition> {
        irreducible_labels(r, level).into_iter().map(|(l, _)| l).collect()
    };
    labels(a) == labels(b)
}

#[derive(Clone, Debug, Serialize)]
pub struct GnsReport {
    pub level: usize,
    pub carrier_dim: usize,
    pub algebra_dim: usize,
    pub coefficient_defect: f64,
    pub homomorphism_defect: f64,
    pub unitarity_defect: f64,
    pub standard_form: StandardFormResiduals,
    pub biregular_pairs_checked: usize,
    pub biregular_homomorphism_defect: f64,
    pub biregular_commutation_defect: f64,
    pub ad_defect: f64,
    pub center_distance: f64,
    pub left_factor_quasi_equivalent: bool,
    pub labels: Vec<(Partition, usize)>,
}

impl GnsReport {
    pub fn passes(&self, tol: f64) -> bool {
        let r = &self.standard_form;
        [
            self.coefficient_defect,
            self.homomorphism_defect,
            self.unitarity_defect,
            r.j_squared,
            r.j_isometry,
            r.j_fixes_xi,
            r.jmj_commutant,
            self.biregular_homomorphism_defect,
            self.biregular_commutation_defect,
            self.ad_defect,
            self.center_distance,
        ]
        .iter()
        .all(|&x| x < tol)
            && self.left_factor_quasi_equivalent
    }
}

/// Runs the whole finite-level pipeline on a state: GNS, standard form,
/// biregular representation. All pairs of pairs are swept for `k <= 3`;
/// otherwise `samples` seeded random ones.
pub fn verify_state(f: &StateFunction, samples: usize, seed: u64) -> Result<GnsReport> {
    let triple = gns(f)?;
    let (homomorphism_defect, unitarity_defect) = triple.homomorphism_defect();
    let sf = standard_form_of(&triple, FAITHFUL_MIX)?;
    let bi = BiregularRep::new(&sf, &triple.pi, triple.level);
    let order = triple.pi.len();
    let quads: Vec<(usize, usize, usize, usize)> = if triple.level <= 3 {
        let all = 0..order;
        all.clone()
            .flat_map(|a| all.clone().map(move |b| (a, b)))
            .flat_map(|(a, b)| (0..order).flat_map(move |x| (0..order).map(move |y| (a, b, x, y))))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                (
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                )
            })
            .collect()
    };
    let left: Vec<CMatrix> = bi.left.clone();
    Ok(GnsReport {
        level: triple.level,
        carrier_dim: triple.dim,
        algebra_dim: sf.dim(),
        coefficient_defect: triple.coefficient_defect(f),
        homomorphism_defect,
        unitarity_defect,
        standard_form: sf.residuals(),
        biregular_pairs_checked: quads.len(),
        biregular_homomorphism_defect: bi.homomorphism_defect(&quads),
        biregular_commutation_defect: bi.commutation_defect(),
        ad_defect: bi.ad_defect(),
        center_distance: bi.center_distance(&sf),
        left_factor_quasi_equivalent: quasi_equivalent_reps(&left, &triple.pi, triple.level),
        labels: irreducible_labels(&triple.pi, triple.level),
    })
}

/// Character of `Ind_{S_n × S_{m−n}}^{S_m} (χ_λ ⊗ χ_μ)`, one value per class
/// in character-table column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedCharacter {
    pub m: usize,
    /// Cycle types, as partitions of `m`.
    pub classes: Vec<Partition>,
    pub values: Vec<i64>,
}

pub fn induced_character(lambda: &Partition, mu: &Partition, m: usize) -> Result<InducedCharacter> {
    let n = lambda.weight();
    if n + mu.weight() != m {
        return Err(Error::WeightMismatch { expected: m - n.min(m), found: mu.weight() });
    }
    let mut chi_lambda: HashMap<CycleType, i64> = HashMap::new();
    for p in Partition::all(n) {
        let ct = CycleType::from(&p);
        chi_lambda.insert(ct.clone(), mn_character(lambda, &ct)?);
    }
    let mut chi_mu: HashMap<CycleType, i64> = HashMap::new();
    for p in Partition::all(m - n) {
        let ct = CycleType::from(&p);
        chi_mu.insert(ct.clone(), mn_character(mu, &ct)?);
    }
    let table = character_table(m);
    let group = SymmetricGroup::new(m);
    let elements: Vec<Permutation> = group.elements().collect();
    let subgroup_order = (factorial(n) * factorial(m - n)) as i64;
    let values = table
        .classes
        .par_iter()
        .map(|ct| {
            let s = CycleType::from(ct).representative();
            let total: i64 = elements
                .iter()
                .filter_map(|t| {
                    let (h1, h2) = t.inverse().conjugate(&s).split_product(n)?;
                    Some(chi_lambda[&h1.cycle_type()] * chi_mu[&h2.cycle_type()])
                })
                .sum();
            debug_assert_eq!(total % subgroup_order, 0);
            total / subgroup_order
        })
        .collect();
    Ok(InducedCharacter { m, classes: table.classes.clone(), values })
}

impl InducedCharacter {
    /// `⟨χ_Ind, χ_ν⟩` for every `ν ⊢ m`, in [`Partition::all`] order.
    pub fn multiplicities(&self) -> Vec<(Partition, i64)> {
        let table = character_table(self.m);
        let order = factorial(self.m) as i128;
        table
            .irreps
            .iter()
            .zip(&table.values)
            .map(|(nu, row)| {
                let sum: i128 = row
                    .iter()
                    .zip(&self.values)
                    .zip(&table.class_sizes)
                    .map(|((&chi, &ind), &size)| chi as i128 * ind as i128 * size as i128)
                    .sum();
                debug_assert_eq!(sum % order, 0);
                (nu.clone(), (sum / order) as i64)
            })
            .collect()
    }
}

/// Convenience: irrep blocks of `S_k` as a full representation, one
/// complex matrix per element, for `λ`.
pub fn irrep_rep(lambda: &Partition) -> Result<Vec<CMatrix>> {
    let tables = LevelTables::get(lambda.weight());
    let irrep = tables.irrep(lambda)?;
    let mut out = vec![CMatrix::zeros(0, 0); tables.order()];
    irrep.for_each_element(&tables.group, |i, m| out[i] = m.map(c));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfin::normalized_character;
    use crate::stable::{canonical_table, CanonicalStateSpec};
    use crate::thoma::ThomaParams;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn char_state(lambda: &Partition) -> StateFunction {
        let l = lambda.clone();
        StateFunction::from_real_fn(l.weight(), move |g| normalized_character(&l, &g.cycle_type()).unwrap())
    }

    #[test]
    fn gns_examples() {
        let regular = gns(&StateFunction::delta_e(3)).unwrap();
        assert_eq!(regular.dim, 6);
        let trivial = gns(&StateFunction::from_real_fn(3, |_| 1.0)).unwrap();
        assert_eq!(trivial.dim, 1);
        assert!(trivial.pi.iter().all(|p| (p[(0, 0)] - c(1.0)).norm() < 1e-12));
        let chi = char_state(&part(&[2, 1]));
        let triple = gns(&chi).unwrap();
        assert_eq!(triple.dim, 4);
        assert!(triple.coefficient_defect(&chi) < 1e-9);
        let (hom, unit) = triple.homomorphism_defect();
        assert!(hom < 1e-9 && unit < 1e-9);
    }

    #[test]
    fn gns_rejects_bad_input() {
        let swap = Permutation::transposition(1, 2);
        let bad = StateFunction::from_real_fn(2, |g| if *g == swap { 2.0 } else { 1.0 });
        assert!(matches!(gns(&bad), Err(Error::NotPositive { .. })));
        let unnormalized = StateFunction::from_real_fn(2, |_| 2.0);
        assert!(matches!(gns(&unnormalized), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn double_commutant_examples() {
        let regular = gns(&StateFunction::delta_e(3)).unwrap();
        assert_eq!(double_commutant(&regular.generators(), 6).len(), 6);
        let irrep = irrep_rep(&part(&[2, 1])).unwrap();
        let group = SymmetricGroup::new(3);
        let gens: Vec<CMatrix> = [Permutation::transposition(1, 2), Permutation::transposition(2, 3)]
            .iter()
            .map(|t| irrep[group.index_of(t).unwrap()].clone())
            .collect();
        assert_eq!(double_commutant(&gens, 2).len(), 4);
        let s2 = gns(&StateFunction::delta_e(2)).unwrap();
        assert_eq!(double_commutant(&s2.generators(), 2).len(), 2);
    }

    #[test]
    fn algebra_is_closed() {
        let triple = gns(&canonical_table(
            &CanonicalStateSpec::new(1, part(&[1]), ThomaParams::new(vec![0.5], vec![0.3]).unwrap()).unwrap(),
            3,
        ))
        .unwrap();
        let basis = double_commutant(&triple.generators(), triple.dim);
        for a in &basis {
            let adj = a.adjoint();
            assert!((project_onto(&basis, &adj) - &adj).norm() < 1e-9);
            for b in &basis {
                let p = a * b;
                assert!((project_onto(&basis, &p) - &p).norm() < 1e-9);
            }
        }
    }

    fn central_projection(lambda: &Partition, pi: &[CMatrix]) -> CMatrix {
        let k = lambda.weight();
        let d = lambda.hook_dimension() as f64;
        let group = SymmetricGroup::new(k);
        let scale = d / factorial(k) as f64;
        group
            .elements()
            .zip(pi)
            .map(|(g, p)| p * c(scale * mn_character(lambda, &g.cycle_type()).unwrap() as f64))
            .fold(CMatrix::zeros(pi[0].nrows(), pi[0].ncols()), |acc, m| acc + m)
    }

    #[test]
    fn support_projection_examples() {
        let regular = gns(&StateFunction::delta_e(3)).unwrap();
        let basis = double_commutant(&regular.generators(), 6);
        let id = CMatrix::identity(6, 6);
        let faithful = support_projection(&(&id / c(6.0)), &basis).unwrap();
        assert!((faithful.projection - &id).norm() < 1e-9);
        let zero = support_projection(&CMatrix::zeros(6, 6), &basis).unwrap();
        assert_eq!(zero.projection.norm(), 0.0);
        for lambda in Partition::all(3) {
            let z = central_projection(&lambda, &regular.pi);
            let psi = &z / c(z.trace().re);
            let e = support_projection(&psi, &basis).unwrap().projection;
            assert!((e - &z).norm() < 1e-8, "{lambda}");
        }
        // vector state of ξ: not supported on a single block
        let vector = &regular.xi * regular.xi.adjoint();
        let e = support_projection(&vector, &basis).unwrap();
        assert!(((&e.projection * &e.projection) - &e.projection).norm() < 1e-9);
        assert!((c(1.0) - (&e.density * &e.projection).trace()).norm() < 1e-9);
        let neg = support_projection(&(-&id), &basis);
        assert!(matches!(neg, Err(Error::NotPositive { .. })));
    }

    #[test]
    fn standard_form_of_full_matrix_algebra_is_adjoint() {
        let irrep = irrep_rep(&part(&[2, 1])).unwrap();
        let basis = double_commutant(&irrep, 2);
        let sf = StandardForm::new(&basis, &(CMatrix::identity(2, 2) / c(2.0))).unwrap();
        let r = sf.residuals();
        assert!(r.j_adjoint_map < 1e-9);
        assert!(r.j_squared < 1e-9 && r.j_fixes_xi < 1e-9 && r.jmj_commutant < 1e-8);
    }

    #[test]
    fn standard_form_of_abelian_algebra_is_conjugation() {
        let s2 = gns(&StateFunction::delta_e(2)).unwrap();
        let basis = double_commutant(&s2.generators(), 2);
        let density = CMatrix::from_diagonal(&DVector::from_vec(vec![c(0.7), c(0.3)]));
        let density = project_onto(&orthonormalize(&basis, 1e-10), &density);
        let sf = StandardForm::new(&basis, &density).unwrap();
        // minimal projections of M give a basis in which J̃ is plain conjugation
        let e1 = (CMatrix::identity(2, 2) + &s2.pi[1]) / c(2.0);
        let e2 = (CMatrix::identity(2, 2) - &s2.pi[1]) / c(2.0);
        for e in [e1, e2] {
            let root = hermitian_fn(&sf.density, f64::sqrt);
            let v = sf.coords(&(&e * &root));
            let jv = sf.apply_j(&(&v * C64::new(0.3, 0.8)));
            assert!((jv - &v * C64::new(0.3, -0.8)).norm() < 1e-9);
        }
        assert!(sf.residuals().j_squared < 1e-9);
    }

    #[test]
    fn standard_form_rejects_non_faithful() {
        let s2 = gns(&StateFunction::delta_e(2)).unwrap();
        let basis = double_commutant(&s2.generators(), 2);
        let e1 = (CMatrix::identity(2, 2) + &s2.pi[1]) / c(2.0);
        assert!(matches!(StandardForm::new(&basis, &e1), Err(Error::NotFaithful { .. })));
    }

    #[test]
    fn tracial_biregular_is_two_sided_translation() {
        let f = StateFunction::delta_e(3);
        let triple = gns(&f).unwrap();
        let sf = standard_form_of(&triple, FAITHFUL_MIX).unwrap();
        let bi = BiregularRep::new(&sf, &triple.pi, 3);
        let group = SymmetricGroup::new(3);
        let delta = |x: usize| sf.coords(&(&triple.pi[x] / c(6f64.sqrt())));
        for g in 0..6 {
            for h in 0..6 {
                let p = bi.pair(g, h);
                for x in 0..6 {
                    let target = group.multiply(group.multiply(g, x), group.inverse(h));
                    assert!((&p * delta(x) - delta(target)).norm() < 1e-9);
                }
            }
        }
        let id = 0;
        for g in 0..6 {
            assert!((bi.pair(g, id) - sf.left(&triple.pi[g])).norm() < 1e-9);
        }
    }

    #[test]
    fn pipeline_on_canonical_states() {
        for (n, l, a, b) in [(0, vec![], vec![0.5], vec![0.3]), (1, vec![1], vec![0.6], vec![]), (2, vec![1, 1], vec![], vec![0.4])] {
            let spec = CanonicalStateSpec::new(n, part(&l), ThomaParams::new(a, b).unwrap()).unwrap();
            let report = verify_state(&canonical_table(&spec, 3), 0, 0).unwrap();
            assert_eq!(report.biregular_pairs_checked, 1296);
            assert!(report.passes(1e-8), "{spec}: {report:?}");
        }
    }

    #[test]
    fn induced_examples() {
        let l = part(&[2, 1]);
        let same = induced_character(&l, &Partition::empty(), 3).unwrap();
        let table = character_table(3);
        assert_eq!(same.values, table.values[table.row_of(&l).unwrap()]);
        let regular = induced_character(&part(&[1]), &part(&[1]), 2).unwrap();
        assert_eq!(regular.values, vec![2, 0]);
        assert_eq!(regular.multiplicities(), vec![(part(&[2]), 1), (part(&[1, 1]), 1)]);
        assert!(induced_character(&l, &part(&[1]), 5).is_err());
    }
}
