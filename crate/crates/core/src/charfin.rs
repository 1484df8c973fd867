//! Characters and orthogonal matrix models of the irreducible
//! representations of the finite symmetric groups `S_n`.
//!
//! Characters are exact integers (Murnaghan–Nakayama rule on beta-sets);
//! matrices use Young's orthogonal form, so every `ρ_λ(g)` is real
//! orthogonal and `ρ_λ(g⁻¹) = ρ_λ(g)ᵀ`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{class_size, factorial, CycleType, Partition, Permutation, SymmetricGroup};

/// Unnormalized character `χ_λ` on the class with the given cycle type.
///
/// The cycle type is completed with fixed points to weight `|λ|`; it is an
/// error if it moves more than `|λ|` points.
pub fn mn_character(lambda: &Partition, cycle_type: &CycleType) -> Result<i64> {
    let mu = cycle_type.to_partition(lambda.weight())?;
    let beads = beta_set(lambda);
    Ok(mn_recurse(&beads, mu.parts()))
}

/// Normalized character `χ_λ / d_λ`.
pub fn normalized_character(lambda: &Partition, cycle_type: &CycleType) -> Result<f64> {
    Ok(mn_character(lambda, cycle_type)? as f64 / lambda.hook_dimension() as f64)
}

fn beta_set(lambda: &Partition) -> Vec<bool> {
    let len = lambda.len();
    let top = lambda.row(0) + len;
    let mut beads = vec![false; top];
    for (i, &part) in lambda.parts().iter().enumerate() {
        beads[part + len - 1 - i] = true;
    }
    beads
}

// Removing a rim hook of length k = sliding a bead from b to b - k into an
// empty slot; the sign counts the beads jumped over.
fn mn_recurse(beads: &[bool], rest: &[usize]) -> i64 {
    let Some((&k, tail)) = rest.split_first() else {
        return 1;
    };
    let mut total = 0;
    let mut beads = beads.to_vec();
    for b in k..beads.len() {
        if beads[b] && !beads[b - k] {
            let jumped = beads[b - k + 1..b].iter().filter(|&&x| x).count();
            beads[b] = false;
            beads[b - k] = true;
            let value = mn_recurse(&beads, tail);
            beads[b - k] = false;
            beads[b] = true;
            total += if jumped % 2 == 0 { value } else { -value };
        }
    }
    total
}

/// Character table of `S_n`: rows indexed by `λ ⊢ n` in [`Partition::all`]
/// order, columns by cycle types in the reverse order (identity class first).
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub irreps: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
}

/// Default bound on `n` for [`character_table`].
pub const CHARACTER_TABLE_BOUND: usize = 8;

pub fn character_table(n: usize) -> CharacterTable {
    let irreps = Partition::all(n);
    let mut classes = Partition::all(n);
    classes.reverse();
    let class_sizes = classes
        .iter()
        .map(|mu| class_size(n, &CycleType::from(mu)).expect("weight n"))
        .collect();
    let values = irreps
        .iter()
        .map(|lambda| {
            classes
                .iter()
                .map(|mu| mn_character(lambda, &CycleType::from(mu)).expect("weight n"))
                .collect()
        })
        .collect();
    CharacterTable { n, irreps, classes, class_sizes, values }
}

impl CharacterTable {
    pub fn row_of(&self, lambda: &Partition) -> Option<usize> {
        self.irreps.iter().position(|l| l == lambda)
    }

    pub fn column_of(&self, cycle_type: &CycleType) -> Option<usize> {
        let mu = cycle_type.to_partition(self.n).ok()?;
        self.classes.iter().position(|c| *c == mu)
    }

    pub fn value(&self, lambda: &Partition, cycle_type: &CycleType) -> Option<i64> {
        Some(self.values[self.row_of(lambda)?][self.column_of(cycle_type)?])
    }

    /// `Σ_c |c| χ_λ(c) χ_μ(c)`, which equals `n! δ_{λμ}`.
    pub fn weighted_inner(&self, a: usize, b: usize) -> i128 {
        self.class_sizes
            .iter()
            .zip(self.values[a].iter().zip(&self.values[b]))
            .map(|(&size, (&x, &y))| size as i128 * x as i128 * y as i128)
            .sum()
    }
}

/// Standard Young tableau stored as the `(row, col)` cell of each entry
/// `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau(pub Vec<(usize, usize)>);

impl Tableau {
    fn content(&self, entry: usize) -> i64 {
        let (r, c) = self.0[entry - 1];
        c as i64 - r as i64
    }
}

pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.weight();
    let mut out = Vec::new();
    let mut rows = vec![0usize; lambda.len()];
    let mut cells = Vec::with_capacity(n);
    grow_tableaux(lambda, &mut rows, &mut cells, &mut out);
    out
}

fn grow_tableaux(
    lambda: &Partition,
    rows: &mut [usize],
    cells: &mut Vec<(usize, usize)>,
    out: &mut Vec<Tableau>,
) {
    if cells.len() == lambda.weight() {
        out.push(Tableau(cells.clone()));
        return;
    }
    for r in 0..rows.len() {
        let fits = rows[r] < lambda.row(r) && (r == 0 || rows[r - 1] > rows[r]);
        if fits {
            cells.push((r, rows[r]));
            rows[r] += 1;
            grow_tableaux(lambda, rows, cells, out);
            rows[r] -= 1;
            cells.pop();
        }
    }
}

/// Sparse row of an adjacent-transposition matrix: the diagonal entry and
/// at most one off-diagonal partner.
#[derive(Clone, Copy, Debug)]
struct GeneratorRow {
    diag: f64,
    partner: Option<(usize, f64)>,
}

/// Young's orthogonal form of `T_λ`: one `d_λ × d_λ` matrix per adjacent
/// transposition `(i i+1)`, `1 <= i < n`.
#[derive(Clone, Debug)]
pub struct IrrepMatrices {
    partition: Partition,
    dim: usize,
    generators: Vec<DMatrix<f64>>,
    sparse: Vec<Vec<GeneratorRow>>,
}

impl IrrepMatrices {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let index: HashMap<&Tableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let n = lambda.weight();
        let dim = tableaux.len();
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut m = DMatrix::zeros(dim, dim);
            for (col, t) in tableaux.iter().enumerate() {
                let axial = t.content(i + 1) - t.content(i);
                let inv = 1.0 / axial as f64;
                m[(col, col)] = inv;
                if axial.abs() != 1 {
                    let mut swapped = t.clone();
                    swapped.0.swap(i - 1, i);
                    let row = index[&swapped];
                    m[(row, col)] = (1.0 - inv * inv).sqrt();
                }
            }
            generators.push(m);
        }
        Self::from_generators(lambda.clone(), generators).expect("consistent shapes")
    }

    /// Rebuilds the model from stored generator matrices.
    pub fn from_generators(partition: Partition, generators: Vec<DMatrix<f64>>) -> Result<Self> {
        let dim = partition.hook_dimension() as usize;
        let n = partition.weight();
        if generators.len() != n.saturating_sub(1)
            || generators.iter().any(|g| g.shape() != (dim, dim))
        {
            return Err(Error::Cache(format!(
                "generator shapes do not match {partition} (d = {dim})"
            )));
        }
        let sparse = generators
            .iter()
            .map(|g| {
                (0..dim)
                    .map(|r| {
                        let partner = (0..dim)
                            .find(|&c| c != r && g[(r, c)] != 0.0)
                            .map(|c| (c, g[(r, c)]));
                        GeneratorRow { diag: g[(r, r)], partner }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { partition, dim, generators, sparse })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `(i i+1)`, 1-based `i`.
    pub fn generator(&self, i: usize) -> &DMatrix<f64> {
        &self.generators[i - 1]
    }

    pub fn generators(&self) -> &[DMatrix<f64>] {
        &self.generators
    }

    /// `ρ(s_i) · m` using the sparsity of the generator.
    pub fn left_generator_mul(&self, i: usize, m: &DMatrix<f64>) -> DMatrix<f64> {
        let rows = &self.sparse[i - 1];
        let mut out = DMatrix::zeros(self.dim, m.ncols());
        for (r, row) in rows.iter().enumerate() {
            for c in 0..m.ncols() {
                let mut v = row.diag * m[(r, c)];
                if let Some((p, w)) = row.partner {
                    v += w * m[(p, c)];
                }
                out[(r, c)] = v;
            }
        }
        out
    }

    /// `ρ_λ(s)` for any `s` of level at most `n`, via a reduced word.
    pub fn matrix(&self, s: &Permutation) -> DMatrix<f64> {
        let n = self.partition.weight();
        assert!(s.level() <= n, "{s} is not in S_{n}");
        // Peel s = s_{i1} ∘ s_{i2} ∘ ... ∘ s_{ik}, then multiply from the right.
        let mut img = s.images(n);
        let mut word = Vec::new();
        loop {
            let mut pos = vec![0; n + 1];
            for (k, &v) in img.iter().enumerate() {
                pos[v] = k;
            }
            match (1..n).find(|&i| pos[i + 1] < pos[i]) {
                Some(i) => {
                    img.swap(pos[i], pos[i + 1]);
                    word.push(i);
                }
                None => break,
            }
        }
        let mut m = DMatrix::identity(self.dim, self.dim);
        for &i in word.iter().rev() {
            m = self.left_generator_mul(i, &m);
        }
        m
    }

    /// Visits `(index, ρ_λ(g))` for every element of `group`, walking the
    /// Coxeter spanning tree so each matrix costs one sparse product.
    pub fn for_each_element<F: FnMut(usize, &DMatrix<f64>)>(&self, group: &SymmetricGroup, mut f: F) {
        assert_eq!(group.degree(), self.partition.weight());
        let mut stack = vec![(0usize, DMatrix::identity(self.dim, self.dim))];
        while let Some((idx, m)) = stack.pop() {
            f(idx, &m);
            for &(i, child) in group.children(idx) {
                stack.push((child, self.left_generator_mul(i, &m)));
            }
        }
    }
}

/// Free-function form of [`IrrepMatrices::new`].
pub fn yor_matrices(lambda: &Partition) -> IrrepMatrices {
    IrrepMatrices::new(lambda)
}

/// Free-function form of [`IrrepMatrices::matrix`].
pub fn irrep_matrix(m: &IrrepMatrices, s: &Permutation) -> DMatrix<f64> {
    m.matrix(s)
}

/// Everything tabulated for one level `n`: the dense group, the partitions,
/// their orthogonal models and the character table.
#[derive(Debug)]
pub struct LevelTables {
    pub n: usize,
    pub group: SymmetricGroup,
    pub irreps: Vec<IrrepMatrices>,
    pub characters: CharacterTable,
}

impl LevelTables {
    pub fn build(n: usize) -> Self {
        let irreps = Partition::all(n).par_iter().map(IrrepMatrices::new).collect();
        Self::from_irreps(n, irreps).expect("freshly built tables are consistent")
    }

    /// Assembles tables around externally supplied matrices (e.g. a cache).
    pub fn from_irreps(n: usize, irreps: Vec<IrrepMatrices>) -> Result<Self> {
        let expected = Partition::all(n);
        let found: Vec<Partition> = irreps.iter().map(|m| m.partition().clone()).collect();
        if expected != found {
            return Err(Error::Cache(format!("irreps for level {n} are incomplete or out of order")));
        }
        Ok(Self { n, group: SymmetricGroup::new(n), irreps, characters: character_table(n) })
    }

    /// Shared tables for level `n`, built on first use.
    pub fn get(n: usize) -> Arc<LevelTables> {
        let registry = registry();
        if let Some(t) = registry.lock().expect("registry lock").get(&n) {
            return Arc::clone(t);
        }
        let built = Arc::new(LevelTables::build(n));
        let mut guard = registry.lock().expect("registry lock");
        Arc::clone(guard.entry(n).or_insert(built))
    }

    /// Installs tables (e.g. reloaded from disk) as the shared ones for their level.
    pub fn install(tables: LevelTables) -> Arc<LevelTables> {
        let tables = Arc::new(tables);
        registry().lock().expect("registry lock").insert(tables.n, Arc::clone(&tables));
        tables
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn irrep(&self, lambda: &Partition) -> Result<&IrrepMatrices> {
        self.irreps
            .iter()
            .find(|m| m.partition() == lambda)
            .ok_or_else(|| Error::UnknownPartition(lambda.clone()))
    }

    /// `|S_n| = n!`.
    pub fn group_order(&self) -> u64 {
        factorial(self.n)
    }
}

fn registry() -> &'static Mutex<HashMap<usize, Arc<LevelTables>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<LevelTables>>>> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=7 {
            let g = SymmetricGroup::new(n);
            let trivial = part(&[n]);
            let sign = part(&vec![1; n]);
            for s in g.elements() {
                assert_eq!(mn_character(&trivial, &s.cycle_type()).unwrap(), 1);
                assert_eq!(mn_character(&sign, &s.cycle_type()).unwrap(), s.sign());
            }
        }
    }

    #[test]
    fn standard_rep_of_s3_by_explicit_matrices() {
        // independent 2x2 model: S_3 acting on the sum-zero plane of R^3
        let g = SymmetricGroup::new(3);
        let basis = [[1.0, -1.0, 0.0], [0.0, 1.0, -1.0]];
        let mut by_class: HashMap<CycleType, f64> = HashMap::new();
        for s in g.elements() {
            // coordinates of s·b_j in the basis (b_0, b_1): solve by reading entries
            let mut trace = 0.0;
            for (j, b) in basis.iter().enumerate() {
                let mut moved = [0.0; 3];
                for (i, &x) in b.iter().enumerate() {
                    moved[s.apply(i + 1) - 1] = x;
                }
                // v = a b_0 + c b_1  =>  a = v_0, c = -v_2
                let coords = [moved[0], -moved[2]];
                trace += coords[j];
            }
            by_class.insert(s.cycle_type(), trace);
        }
        let lambda = part(&[2, 1]);
        for (ct, trace) in by_class {
            assert_eq!(mn_character(&lambda, &ct).unwrap() as f64, trace);
        }
        let values: Vec<i64> = [vec![], vec![2], vec![3]]
            .into_iter()
            .map(|l| mn_character(&lambda, &CycleType::from_lengths(l)).unwrap())
            .collect();
        assert_eq!(values, vec![2, 0, -1]);
    }

    #[test]
    fn mismatched_weight_rejected() {
        let err = mn_character(&part(&[2]), &CycleType::from_lengths([3]));
        assert!(matches!(err, Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn generators_are_orthogonal_involutions_with_braid_relations() {
        for n in 2..=6 {
            for lambda in Partition::all(n) {
                let m = IrrepMatrices::new(&lambda);
                let id = DMatrix::<f64>::identity(m.dim(), m.dim());
                for i in 1..n {
                    let s = m.generator(i);
                    assert!((s * s - &id).norm() < 1e-10);
                    assert!((s.transpose() * s - &id).norm() < 1e-10);
                    if i + 1 < n {
                        let t = m.generator(i + 1);
                        assert!((s * t * s - t * s * t).norm() < 1e-10, "braid {lambda} {i}");
                    }
                    for j in i + 2..n {
                        let t = m.generator(j);
                        assert!((s * t - t * s).norm() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn traces_match_characters_in_s4() {
        let g = SymmetricGroup::new(4);
        for lambda in Partition::all(4) {
            let m = IrrepMatrices::new(&lambda);
            for s in g.elements() {
                let chi = mn_character(&lambda, &s.cycle_type()).unwrap() as f64;
                assert!((m.matrix(&s).trace() - chi).abs() < 1e-10);
                let prod = m.matrix(&s) * m.matrix(&s.inverse());
                assert!((prod - DMatrix::identity(m.dim(), m.dim())).norm() < 1e-10);
            }
            assert_eq!(m.matrix(&Permutation::identity()), DMatrix::identity(m.dim(), m.dim()));
        }
    }

    #[test]
    fn tree_walk_agrees_with_reduced_words() {
        let g = SymmetricGroup::new(5);
        let m = IrrepMatrices::new(&part(&[3, 2]));
        let mut seen = 0;
        m.for_each_element(&g, |idx, mat| {
            seen += 1;
            assert!((mat - m.matrix(&g.element(idx))).norm() < 1e-10);
        });
        assert_eq!(seen, 120);
    }

    #[test]
    fn schur_orthogonality_of_coefficients() {
        for n in 1..=4 {
            let g = SymmetricGroup::new(n);
            let order = g.order() as f64;
            for lambda in Partition::all(n) {
                let m = IrrepMatrices::new(&lambda);
                let d = m.dim();
                let mats: Vec<_> = g.elements().map(|s| m.matrix(&s)).collect();
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            for l in 0..d {
                                let sum: f64 = mats.iter().map(|r| r[(i, j)] * r[(k, l)]).sum();
                                let expect = if i == k && j == l { 1.0 } else { 0.0 };
                                assert!((d as f64 / order * sum - expect).abs() < 1e-10);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_rows_are_orthogonal_and_first_column_is_dimension() {
        for n in 0..=6 {
            let t = character_table(n);
            let fact = factorial(n) as i128;
            for a in 0..t.irreps.len() {
                assert_eq!(t.values[a][t.column_of(&CycleType::default()).unwrap()],
                    t.irreps[a].hook_dimension() as i64);
                for b in 0..t.irreps.len() {
                    let expect = if a == b { fact } else { 0 };
                    assert_eq!(t.weighted_inner(a, b), expect);
                }
            }
        }
        assert_eq!(character_table(2).values, vec![vec![1, 1], vec![1, -1]]);
    }
}
