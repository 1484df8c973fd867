//! Thoma characters of `S_N`, the type rule for the associated factor
//! representations, and recovery of Thoma parameters from cycle values.
//!
//! On a `k`-cycle the character takes the value
//! `p_k(α, β) = Σ_i α_i^k + (−1)^{k+1} Σ_j β_j^k`, and it is multiplicative
//! over disjoint cycles.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::perm::CycleType;

/// Slack allowed on `Σα + Σβ <= 1` when validating parameters.
pub const SUM_SLACK: f64 = 1e-12;
/// `|Σα + Σβ − 1|` below this is treated as `Σ = 1` by [`type_classify`].
pub const TYPE_TOLERANCE: f64 = 1e-9;

/// Finitely supported Thoma parameters.
///
/// Both lists are weakly decreasing with entries in `(0, 1]`, and
/// `Σα + Σβ <= 1`. The deficit `γ = 1 − Σα − Σβ` is derived.
#[derive(Clone, Debug, PartialEq, Serialize, Default)]
pub struct ThomaParams {
    alpha: Vec<f64>,
    beta: Vec<f64>,
}

impl ThomaParams {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        for (name, list) in [("alpha", &alpha), ("beta", &beta)] {
            if let Some(x) = list.iter().find(|x| !(x.is_finite() && **x > 0.0 && **x <= 1.0)) {
                return Err(Error::InvalidThomaParams(format!("{name} entry {x} not in (0, 1]")));
            }
            if list.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidThomaParams(format!("{name} is not weakly decreasing")));
            }
        }
        let p = Self { alpha, beta };
        if p.sum() > 1.0 + SUM_SLACK {
            return Err(Error::InvalidThomaParams(format!("Σα + Σβ = {} exceeds 1", p.sum())));
        }
        Ok(p)
    }

    /// Sorts both lists decreasingly and drops zero entries before validating.
    pub fn from_unsorted(mut alpha: Vec<f64>, mut beta: Vec<f64>) -> Result<Self> {
        for list in [&mut alpha, &mut beta] {
            list.retain(|&x| x != 0.0);
            list.sort_by(|a, b| b.total_cmp(a));
        }
        Self::new(alpha, beta)
    }

    /// `α = (1)`: the trivial character.
    pub fn trivial() -> Self {
        Self { alpha: vec![1.0], beta: vec![] }
    }

    /// `β = (1)`: the sign character.
    pub fn sign() -> Self {
        Self { alpha: vec![], beta: vec![1.0] }
    }

    /// `α = β = ()`: the regular character `δ_e`.
    pub fn regular() -> Self {
        Self::default()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn sum(&self) -> f64 {
        self.alpha.iter().sum::<f64>() + self.beta.iter().sum::<f64>()
    }

    pub fn gamma(&self) -> f64 {
        1.0 - self.sum()
    }

    /// Value on a single `k`-cycle, `k >= 2`.
    pub fn cycle_value(&self, k: usize) -> f64 {
        power_sum_value(&self.alpha, &self.beta, k)
    }
}

impl<'de> Deserialize<'de> for ThomaParams {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            #[serde(default)]
            alpha: Vec<f64>,
            #[serde(default)]
            beta: Vec<f64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        ThomaParams::new(raw.alpha, raw.beta).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ThomaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α={:?}, β={:?}", self.alpha, self.beta)
    }
}

/// `Σ α_i^k + (−1)^{k+1} Σ β_j^k` over any numeric type, so exact
/// rational evaluation is available alongside `f64`.
pub fn power_sum_value<T>(alpha: &[T], beta: &[T], k: usize) -> T
where
    T: Clone + Zero + One + std::ops::Sub<Output = T>,
{
    let pow = |x: &T| (0..k).fold(T::one(), |acc, _| acc * x.clone());
    let a = alpha.iter().fold(T::zero(), |acc, x| acc + pow(x));
    let b = beta.iter().fold(T::zero(), |acc, x| acc + pow(x));
    if k.is_multiple_of(2) {
        a - b
    } else {
        a + b
    }
}

/// Generic form of [`thoma_character`] over explicit parameter lists.
pub fn thoma_character_with<T>(alpha: &[T], beta: &[T], cycle_type: &CycleType) -> T
where
    T: Clone + Zero + One + std::ops::Sub<Output = T>,
{
    cycle_type
        .lengths()
        .iter()
        .fold(T::one(), |acc, &k| acc * power_sum_value(alpha, beta, k))
}

/// `χ_{α,β}` on the class with the given cycle type.
pub fn thoma_character(params: &ThomaParams, cycle_type: &CycleType) -> f64 {
    thoma_character_with(&params.alpha, &params.beta, cycle_type)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorType {
    #[serde(rename = "II_1")]
    TypeII1,
    #[serde(rename = "II_inf")]
    TypeIIInfinity,
}

impl fmt::Display for FactorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorType::TypeII1 => write!(f, "II_1"),
            FactorType::TypeIIInfinity => write!(f, "II_inf"),
        }
    }
}

/// Type II_∞ when `Σα + Σβ = 1` (within [`TYPE_TOLERANCE`]), II_1 below.
pub fn type_classify(params: &ThomaParams) -> FactorType {
    type_classify_with(params, TYPE_TOLERANCE).expect("validated parameters sum to at most 1")
}

/// [`type_classify`] with an explicit tolerance; sums above `1 + tol` are rejected.
pub fn type_classify_with(params: &ThomaParams, tol: f64) -> Result<FactorType> {
    let sum = params.sum();
    if sum > 1.0 + tol.max(SUM_SLACK) {
        return Err(Error::InvalidThomaParams(format!("Σα + Σβ = {sum} exceeds 1")));
    }
    // a few ulps so that sums exactly on the boundary are not lost to rounding
    let rounding = 4.0 * f64::EPSILON * (params.alpha.len() + params.beta.len()).max(1) as f64;
    Ok(if (sum - 1.0).abs() <= tol + rounding { FactorType::TypeIIInfinity } else { FactorType::TypeII1 })
}

/// Maximum number of nonzero `α` and `β` entries to fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportBounds {
    pub alpha: usize,
    pub beta: usize,
}

impl SupportBounds {
    pub fn new(alpha: usize, beta: usize) -> Self {
        Self { alpha, beta }
    }

    fn total(&self) -> usize {
        self.alpha + self.beta
    }
}

#[derive(Clone, Debug)]
pub struct RecoveryOptions {
    pub seed: u64,
    /// Seeded random starts added to the deterministic corner starts.
    pub random_starts: usize,
    pub max_iterations: usize,
    /// Fits with residual above this are reported as failures.
    pub residual_threshold: f64,
    /// Fitted entries below this are dropped from the result.
    pub zero_threshold: f64,
}

impl Default for RecoveryOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            random_starts: 32,
            max_iterations: 3000,
            residual_threshold: 1e-10,
            zero_threshold: 1e-7,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Recovery {
    pub params: ThomaParams,
    /// `Σ_k (v_k − p_k(α, β))²` at the returned parameters.
    pub residual: f64,
    pub start_index: usize,
    pub iterations: usize,
}

/// Fits Thoma parameters to cycle values `k ↦ v_k` (`k >= 2`) by projected
/// Levenberg–Marquardt from several deterministic starts.
pub fn recover_params(
    values: &BTreeMap<usize, f64>,
    bounds: SupportBounds,
    options: &RecoveryOptions,
) -> Result<Recovery> {
    if let Some(&k) = values.keys().find(|&&k| k < 2) {
        return Err(Error::Recovery(format!("cycle length {k} is not a cycle (need k >= 2)")));
    }
    if values.len() < bounds.total() {
        return Err(Error::Recovery(format!(
            "{} cycle values cannot determine {} parameters",
            values.len(),
            bounds.total()
        )));
    }
    if bounds.total() == 0 {
        let residual = residual_of(values, &[], &[]);
        return finish(Vec::new(), Vec::new(), residual, 0, 0, options);
    }
    let problem = Problem { values: values.iter().map(|(&k, &v)| (k, v)).collect(), bounds };
    let starts = problem.starts(options);
    let fits: Vec<(Vec<f64>, f64, usize)> = starts
        .par_iter()
        .map(|x0| problem.solve_with_revival(x0.clone(), options))
        .collect();
    let (best, (x, _, iterations)) = fits
        .into_iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1).then(a.0.cmp(&b.0)))
        .expect("at least one start");
    let (alpha, beta) = problem.unpack(&x);
    let clean = |v: Vec<f64>| -> Vec<f64> {
        v.into_iter().filter(|&a| a >= options.zero_threshold).collect()
    };
    let (alpha, beta) = (clean(alpha), clean(beta));
    let residual = residual_of(values, &alpha, &beta);
    finish(alpha, beta, residual, best, iterations, options)
}

fn finish(
    alpha: Vec<f64>,
    beta: Vec<f64>,
    residual: f64,
    start_index: usize,
    iterations: usize,
    options: &RecoveryOptions,
) -> Result<Recovery> {
    if residual.is_nan() || residual > options.residual_threshold {
        return Err(Error::Recovery(format!(
            "best residual {residual:e} exceeds threshold {:e} (α={alpha:?}, β={beta:?})",
            options.residual_threshold
        )));
    }
    let params = ThomaParams::from_unsorted(
        alpha.into_iter().map(|a| a.min(1.0)).collect(),
        beta.into_iter().map(|b| b.min(1.0)).collect(),
    )?;
    Ok(Recovery { params, residual, start_index, iterations })
}

/// `Σ_k (v_k − p_k(α, β))²`.
pub fn residual_of(values: &BTreeMap<usize, f64>, alpha: &[f64], beta: &[f64]) -> f64 {
    values
        .iter()
        .map(|(&k, &v)| (v - power_sum_value(alpha, beta, k)).powi(2))
        .sum()
}

struct Problem {
    values: Vec<(usize, f64)>,
    bounds: SupportBounds,
}

impl Problem {
    fn unpack(&self, x: &[f64]) -> (Vec<f64>, Vec<f64>) {
        (x[..self.bounds.alpha].to_vec(), x[self.bounds.alpha..].to_vec())
    }

    fn cost(&self, x: &[f64]) -> f64 {
        let (a, b) = self.unpack(x);
        self.values.iter().map(|&(k, v)| (power_sum_value(&a, &b, k) - v).powi(2)).sum()
    }

    fn residuals_and_jacobian(&self, x: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
        let (a, b) = self.unpack(x);
        let m = self.values.len();
        let mut r = DVector::zeros(m);
        let mut j = DMatrix::zeros(m, x.len());
        for (row, &(k, v)) in self.values.iter().enumerate() {
            r[row] = power_sum_value(&a, &b, k) - v;
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            for (col, &xi) in x.iter().enumerate() {
                let d = k as f64 * xi.powi(k as i32 - 1);
                j[(row, col)] = if col < self.bounds.alpha { d } else { sign * d };
            }
        }
        (r, j)
    }

    /// Clip to `[0, 1]`, enforce `Σ <= 1` by Euclidean projection onto the
    /// simplex face, then sort each block decreasingly.
    fn project(&self, x: &mut [f64]) {
        for v in x.iter_mut() {
            *v = v.clamp(0.0, 1.0);
        }
        if x.iter().sum::<f64>() > 1.0 {
            project_to_simplex(x);
        }
        let (a, b) = x.split_at_mut(self.bounds.alpha);
        a.sort_by(|p, q| q.total_cmp(p));
        b.sort_by(|p, q| q.total_cmp(p));
    }

    fn starts(&self, options: &RecoveryOptions) -> Vec<Vec<f64>> {
        let (r, s) = (self.bounds.alpha, self.bounds.beta);
        // decreasing profile with total mass `mass` over `len` slots
        let profile = |len: usize, mass: f64| -> Vec<f64> {
            let denom = (len * (len + 1) / 2) as f64;
            (0..len).map(|i| mass * (len - i) as f64 / denom).collect()
        };
        let mut starts = Vec::new();
        for (ma, mb) in [(0.9, 0.05), (0.05, 0.9), (0.45, 0.45), (0.3, 0.3)] {
            let mut x = profile(r, if r > 0 { ma } else { 0.0 });
            x.extend(profile(s, if s > 0 { mb } else { 0.0 }));
            starts.push(x);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        for _ in 0..options.random_starts {
            let mut x: Vec<f64> = (0..r + s).map(|_| rng.random_range(0.01..1.0)).collect();
            let total: f64 = x.iter().sum();
            let mass = rng.random_range(0.2..1.0);
            x.iter_mut().for_each(|v| *v *= mass / total);
            starts.push(x);
        }
        for x in starts.iter_mut() {
            self.project(x);
        }
        starts
    }

    /// A coordinate clamped to 0 has a zero Jacobian column and can never
    /// leave; when a fit stalls above threshold, such coordinates are moved
    /// back into the interior and the fit is resumed.
    fn solve_with_revival(&self, x0: Vec<f64>, options: &RecoveryOptions) -> (Vec<f64>, f64, usize) {
        let (mut x, mut cost, mut iterations) = self.solve(x0, options.max_iterations);
        for _ in 0..self.bounds.total() {
            if cost <= options.residual_threshold {
                break;
            }
            let slack = 1.0 - x.iter().sum::<f64>();
            let mut revived = x.clone();
            let mut changed = false;
            for v in revived.iter_mut().filter(|v| **v < options.zero_threshold) {
                *v = (0.5 * slack).max(0.02);
                changed = true;
            }
            if !changed {
                break;
            }
            self.project(&mut revived);
            let (y, c, it) = self.solve(revived, options.max_iterations);
            iterations += it;
            if c < cost {
                (x, cost) = (y, c);
            } else {
                break;
            }
        }
        (x, cost, iterations)
    }

    fn solve(&self, mut x: Vec<f64>, max_iterations: usize) -> (Vec<f64>, f64, usize) {
        let mut cost = self.cost(&x);
        let mut mu = 1e-3;
        let mut iterations = 0;
        while iterations < max_iterations && cost > 0.0 && mu < 1e16 {
            iterations += 1;
            let (r, j) = self.residuals_and_jacobian(&x);
            let jt = j.transpose();
            let grad = &jt * &r;
            let h = &jt * &j;
            let mut damped = h.clone();
            for i in 0..x.len() {
                damped[(i, i)] += mu * (h[(i, i)] + 1e-12);
            }
            let Some(step) = damped.lu().solve(&(-grad)) else {
                mu *= 10.0;
                continue;
            };
            let mut candidate: Vec<f64> = x.iter().zip(step.iter()).map(|(a, d)| a + d).collect();
            self.project(&mut candidate);
            let new_cost = self.cost(&candidate);
            if new_cost < cost {
                let moved = x.iter().zip(&candidate).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                x = candidate;
                cost = new_cost;
                mu = (mu / 3.0).max(1e-15);
                if moved < 1e-17 {
                    break;
                }
            } else {
                mu *= 4.0;
            }
        }
        (x, cost, iterations)
    }
}

/// Euclidean projection onto `{x >= 0, Σx = 1}`.
fn project_to_simplex(x: &mut [f64]) {
    let mut sorted: Vec<f64> = x.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (i, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - 1.0) / (i + 1) as f64;
        if u - t > 0.0 {
            theta = t;
        }
    }
    for v in x.iter_mut() {
        *v = (*v - theta).max(0.0);
    }
}

/// Cycle values `k ↦ p_k(α, β)` for `k = 2..=max_k`.
pub fn cycle_values(params: &ThomaParams, max_k: usize) -> BTreeMap<usize, f64> {
    (2..=max_k).map(|k| (k, params.cycle_value(k))).collect()
}
