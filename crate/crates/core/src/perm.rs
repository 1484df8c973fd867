//! Finitely supported permutations of the positive integers, cycle types,
//! partitions, and the dense enumeration of the finite levels `S_n`.
//!
//! Composition convention: `p.compose(&q)` is "apply `q` first, then `p`",
//! i.e. `(p ∘ q)(i) = p(q(i))`. Every product in this crate follows it.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{1, 2, 3, ...}` moving finitely many points.
///
/// Stored as the sorted list of `(source, target)` pairs with
/// `source != target`, so elements of every level share one type and
/// trailing fixed points never affect equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    map: Vec<(usize, usize)>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self { map: Vec::new() }
    }

    /// Builds a permutation from one-line notation `images[i-1] = p(i)`.
    /// Images are 1-based.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Self::from_images_unchecked(images))
    }

    pub(crate) fn from_images_unchecked(images: &[usize]) -> Self {
        let map = images
            .iter()
            .enumerate()
            .filter_map(|(i, &t)| (i + 1 != t).then_some((i + 1, t)))
            .collect();
        Self { map }
    }

    /// Builds a permutation from disjoint cycles. Cycles of length one are
    /// accepted and ignored.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut map = Vec::new();
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 {
                    return Err(Error::InvalidPermutation(
                        "cycle entries must be positive integers".into(),
                    ));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in more than one cycle position"
                    )));
                }
            }
            if cycle.len() >= 2 {
                for (i, &x) in cycle.iter().enumerate() {
                    map.push((x, cycle[(i + 1) % cycle.len()]));
                }
            }
        }
        map.sort_unstable();
        Ok(Self { map })
    }

    /// The cycle `(a_1 a_2 ... a_k)`, mapping `a_i` to `a_{i+1}`.
    pub fn cycle(points: &[usize]) -> Result<Self> {
        Self::from_cycles(&[points])
    }

    /// The transposition `(a b)`.
    pub fn transposition(a: usize, b: usize) -> Self {
        Self::cycle(&[a, b]).expect("transposition of two positive points")
    }

    pub fn apply(&self, i: usize) -> usize {
        match self.map.binary_search_by(|&(s, _)| s.cmp(&i)) {
            Ok(pos) => self.map[pos].1,
            Err(_) => i,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.iter().map(|&(s, _)| s)
    }

    pub fn support_len(&self) -> usize {
        self.map.len()
    }

    /// Smallest `n` with support inside `{1..n}`.
    pub fn level(&self) -> usize {
        self.map.last().map_or(0, |&(s, _)| s)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let points: BTreeSet<usize> = self.support().chain(other.support()).collect();
        let map = points
            .into_iter()
            .filter_map(|i| {
                let t = self.apply(other.apply(i));
                (t != i).then_some((i, t))
            })
            .collect();
        Permutation { map }
    }

    pub fn inverse(&self) -> Permutation {
        let mut map: Vec<_> = self.map.iter().map(|&(s, t)| (t, s)).collect();
        map.sort_unstable();
        Permutation { map }
    }

    /// `self · s · self⁻¹`.
    pub fn conjugate(&self, s: &Permutation) -> Permutation {
        // t s t⁻¹ sends t(i) to t(s(i)).
        let mut map: Vec<_> = s
            .map
            .iter()
            .map(|&(i, j)| (self.apply(i), self.apply(j)))
            .collect();
        map.sort_unstable();
        Permutation { map }
    }

    /// Disjoint cycles in canonical order: each cycle starts at its smallest
    /// element and cycles are sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = BTreeSet::new();
        let mut out = Vec::new();
        for &(start, _) in &self.map {
            if visited.contains(&start) {
                continue;
            }
            let mut cycle = vec![start];
            visited.insert(start);
            let mut x = self.apply(start);
            while x != start {
                visited.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_lengths(self.cycles().iter().map(Vec::len))
    }

    /// `(-1)^{Σ (len - 1)}`.
    pub fn sign(&self) -> i64 {
        let odd = self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2;
        if odd == 0 {
            1
        } else {
            -1
        }
    }

    /// One-line notation on `{1..n}`; requires `n >= self.level()`.
    pub fn images(&self, n: usize) -> Vec<usize> {
        debug_assert!(n >= self.level());
        (1..=n).map(|i| self.apply(i)).collect()
    }

    /// True when the permutation fixes every point of `{1..n}`, i.e. it
    /// belongs to the subgroup `S_{N∖n}`.
    pub fn fixes_prefix(&self, n: usize) -> bool {
        self.map.first().is_none_or(|&(s, _)| s > n)
    }

    /// Factorization `s = s1 · s2` with `s1 ∈ S_n` and `s2 ∈ S_{N∖n}`.
    ///
    /// Exists exactly when `s` maps `{1..n}` onto itself; the factors have
    /// disjoint supports and commute.
    pub fn split_product(&self, n: usize) -> Option<(Permutation, Permutation)> {
        let mut low = Vec::new();
        let mut high = Vec::new();
        for &(s, t) in &self.map {
            match (s <= n, t <= n) {
                (true, true) => low.push((s, t)),
                (false, false) => high.push((s, t)),
                _ => return None,
            }
        }
        Some((Permutation { map: low }, Permutation { map: high }))
    }

    /// Shifts every point by `offset`: `i + offset ↦ p(i) + offset`.
    pub fn shifted(&self, offset: usize) -> Permutation {
        Permutation {
            map: self.map.iter().map(|&(s, t)| (s + offset, t + offset)).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.map.cmp(&other.map)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycles().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let cycles = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Permutation::from_cycles(&cycles).map_err(serde::de::Error::custom)
    }
}

/// Multiset of cycle lengths `>= 2`, stored in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    /// Lengths below 2 are dropped.
    pub fn from_lengths<I: IntoIterator<Item = usize>>(lengths: I) -> Self {
        let mut v: Vec<usize> = lengths.into_iter().filter(|&l| l >= 2).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(v)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Number of points moved.
    pub fn moved(&self) -> usize {
        self.0.iter().sum()
    }

    /// The full cycle type at level `n`, fixed points included as parts 1.
    pub fn to_partition(&self, n: usize) -> Result<Partition> {
        let moved = self.moved();
        if moved > n {
            return Err(Error::WeightMismatch { expected: n, found: moved });
        }
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, n - moved));
        Partition::new(parts)
    }

    /// A representative: consecutive cycles `(1 .. l_1)(l_1+1 ..)...`.
    pub fn representative(&self) -> Permutation {
        let mut next = 1;
        let cycles: Vec<Vec<usize>> = self
            .0
            .iter()
            .map(|&l| {
                let c = (next..next + l).collect();
                next += l;
                c
            })
            .collect();
        Permutation::from_cycles(&cycles).expect("consecutive disjoint cycles")
    }
}

impl From<&Partition> for CycleType {
    fn from(p: &Partition) -> Self {
        CycleType::from_lengths(p.parts().iter().copied())
    }
}

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length `i` (0-based), zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_dimension(&self) -> u64 {
        let n = self.weight() as u128;
        let conj = self.conjugate();
        let mut numer: u128 = (1..=n).product();
        let mut denom: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.row(j) - i - 1;
                denom *= (arm + leg + 1) as u128;
                let g = gcd(numer, denom);
                numer /= g;
                denom /= g;
            }
        }
        debug_assert_eq!(denom, 1);
        numer as u64
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }
}

fn fill_partitions(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    Partition::all(n)
}

/// Dense model of the finite level `S_n`: every element gets an index, and
/// products, inverses and the Coxeter spanning tree are tabulated.
///
/// Elements are listed in lexicographic order of their one-line notation,
/// so index 0 is the identity.
#[derive(Debug)]
pub struct SymmetricGroup {
    n: usize,
    images: Vec<Vec<u8>>,
    inverse: Vec<usize>,
    /// `(i, parent)` with `element = s_i ∘ parent`, `s_i = (i i+1)` 1-based,
    /// and `parent` one inversion shorter. `None` for the identity.
    parent: Vec<Option<(usize, usize)>>,
    children: Vec<Vec<(usize, usize)>>,
    /// Elements sorted by number of inversions.
    by_length: Vec<usize>,
}

impl SymmetricGroup {
    /// Enumerates `S_n`; `n <= 10`.
    pub fn new(n: usize) -> Self {
        assert!(n <= 10, "S_{n} is too large to enumerate");
        let mut images = Vec::new();
        let mut current: Vec<u8> = (1..=n as u8).collect();
        loop {
            images.push(current.clone());
            if !next_permutation(&mut current) {
                break;
            }
        }
        let size = images.len();
        let mut inverse = vec![0; size];
        let mut parent = vec![None; size];
        let mut lengths = vec![0usize; size];
        let mut scratch = vec![0u8; n];
        for (idx, img) in images.iter().enumerate() {
            for (i, &v) in img.iter().enumerate() {
                scratch[v as usize - 1] = i as u8 + 1;
            }
            inverse[idx] = rank(&scratch);
            lengths[idx] = inversions(img);
            // s_i ∘ g swaps the values i and i+1 in one-line notation; it is
            // shorter iff i+1 appears before i.
            let pos: Vec<usize> = {
                let mut p = vec![0; n + 1];
                for (i, &v) in img.iter().enumerate() {
                    p[v as usize] = i;
                }
                p
            };
            if let Some(i) = (1..n).find(|&i| pos[i + 1] < pos[i]) {
                let mut shorter = img.clone();
                shorter.swap(pos[i], pos[i + 1]);
                parent[idx] = Some((i, rank(&shorter)));
            }
        }
        let mut by_length: Vec<usize> = (0..size).collect();
        by_length.sort_by_key(|&i| (lengths[i], i));
        let mut children = vec![Vec::new(); size];
        for (idx, p) in parent.iter().enumerate() {
            if let Some((i, up)) = *p {
                children[up].push((i, idx));
            }
        }
        Self { n, images, inverse, parent, children, by_length }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// Index of a permutation of level `<= n`.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.level() > self.n {
            return None;
        }
        let img: Vec<u8> = (1..=self.n).map(|i| p.apply(i) as u8).collect();
        Some(rank(&img))
    }

    pub fn element(&self, idx: usize) -> Permutation {
        let img: Vec<usize> = self.images[idx].iter().map(|&v| v as usize).collect();
        Permutation::from_images_unchecked(&img)
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order()).map(|i| self.element(i))
    }

    pub fn images(&self, idx: usize) -> &[u8] {
        &self.images[idx]
    }

    pub fn inverse(&self, idx: usize) -> usize {
        self.inverse[idx]
    }

    /// Index of `a ∘ b`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let (ia, ib) = (&self.images[a], &self.images[b]);
        let img: Vec<u8> = ib.iter().map(|&x| ia[x as usize - 1]).collect();
        rank(&img)
    }

    /// Full multiplication table, `table[a * order + b] = a ∘ b`.
    pub fn multiplication_table(&self) -> Vec<usize> {
        let size = self.order();
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                table.push(self.multiply(a, b));
            }
        }
        table
    }

    pub fn parent(&self, idx: usize) -> Option<(usize, usize)> {
        self.parent[idx]
    }

    /// `(i, child)` pairs with `child = s_i ∘ idx`, the inverse of [`Self::parent`].
    pub fn children(&self, idx: usize) -> &[(usize, usize)] {
        &self.children[idx]
    }

    /// Element indices ordered so that every parent precedes its children.
    pub fn by_length(&self) -> &[usize] {
        &self.by_length
    }
}

/// Lexicographic rank of a permutation of `1..=n` in one-line notation.
fn rank(img: &[u8]) -> usize {
    let n = img.len();
    let mut r = 0;
    for i in 0..n {
        let smaller = img[i + 1..].iter().filter(|&&x| x < img[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

fn inversions(img: &[u8]) -> usize {
    let mut count = 0;
    for i in 0..img.len() {
        for j in i + 1..img.len() {
            if img[i] > img[j] {
                count += 1;
            }
        }
    }
    count
}

fn next_permutation(v: &mut [u8]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Number of elements of `S_n` with the given cycle type: `n! / z_μ`.
pub fn class_size(n: usize, cycle_type: &CycleType) -> Result<u64> {
    let mu = cycle_type.to_partition(n)?;
    let mut z: u128 = 1;
    let mut counts = std::collections::BTreeMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_insert(0u32) += 1;
        z *= p as u128;
    }
    for (_, c) in counts {
        z *= (1..=c as u128).product::<u128>();
    }
    let fact: u128 = (1..=n as u128).product();
    Ok((fact / z) as u64)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
