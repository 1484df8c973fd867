//! Canonical partially central states on `S_N` and the invariants that
//! classify stable factor representations up to quasi-equivalence.
//!
//! A canonical state is determined by a depth `n`, a diagram `λ ⊢ n` and
//! Thoma parameters `(α, β)`:
//!
//! ```text
//! f(s) = χ_λ(s1) / d_λ · χ_{α,β}(s2)   if s = s1 s2, s1 ∈ S_n, s2 ∈ S_{N∖n}
//! f(s) = 0                             otherwise
//! ```
//!
//! The classification pipeline inverts this: central depth from the
//! vanishing and invariance pattern, `λ` from the restriction to `S_n`, and
//! `(α, β)` from the asymptotic character on long cycles pushed to infinity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::charfin::{mn_character, LevelTables};
use crate::error::{Error, Result};
use crate::fourier::StateFunction;
use crate::linalg::c;
use crate::perm::{CycleType, Partition, Permutation};
use crate::thoma::{
    recover_params, thoma_character, type_classify, FactorType, RecoveryOptions, SupportBounds,
    ThomaParams,
};

/// A real-valued function on `S_N`, possibly known only up to a level.
pub trait State: Sync {
    fn value(&self, s: &Permutation) -> f64;

    /// Largest level on which values are available; `None` means all of `S_N`.
    fn max_level(&self) -> Option<usize> {
        None
    }
}

impl<F> State for F
where
    F: Fn(&Permutation) -> f64 + Sync,
{
    fn value(&self, s: &Permutation) -> f64 {
        self(s)
    }
}

/// The Thoma character `χ_{α,β}` as a state on all of `S_N`.
#[derive(Clone, Debug)]
pub struct ThomaState(pub ThomaParams);

impl State for ThomaState {
    fn value(&self, s: &Permutation) -> f64 {
        thoma_character(&self.0, &s.cycle_type())
    }
}

/// Real part of a value table on a finite level.
#[derive(Clone, Debug)]
pub struct TableState(pub StateFunction);

impl State for TableState {
    fn value(&self, s: &Permutation) -> f64 {
        self.0.value(s).map_or(0.0, |z| z.re)
    }

    fn max_level(&self) -> Option<usize> {
        Some(self.0.level())
    }
}

/// Tabulates a state on `S_k`.
pub fn to_table<S: State + ?Sized>(state: &S, k: usize) -> StateFunction {
    StateFunction::from_real_fn(k, |g| state.value(g))
}

/// `(n, λ, α, β)`: depth, diagram of weight `n`, and Thoma parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalStateSpec {
    pub n: usize,
    pub lambda: Partition,
    pub params: ThomaParams,
}

impl CanonicalStateSpec {
    pub fn new(n: usize, lambda: Partition, params: ThomaParams) -> Result<Self> {
        if lambda.weight() != n {
            return Err(Error::WeightMismatch { expected: n, found: lambda.weight() });
        }
        Ok(Self { n, lambda, params })
    }

    /// Depth 0 with the given parameters: the Thoma character itself.
    pub fn thoma(params: ThomaParams) -> Self {
        Self { n: 0, lambda: Partition::empty(), params }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    n: usize,
    lambda: Partition,
    #[serde(default)]
    alpha: Vec<f64>,
    #[serde(default)]
    beta: Vec<f64>,
}

impl Serialize for CanonicalStateSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawSpec {
            n: self.n,
            lambda: self.lambda.clone(),
            alpha: self.params.alpha().to_vec(),
            beta: self.params.beta().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CanonicalStateSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSpec::deserialize(deserializer)?;
        let params = ThomaParams::new(raw.alpha, raw.beta).map_err(serde::de::Error::custom)?;
        CanonicalStateSpec::new(raw.n, raw.lambda, params).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CanonicalStateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, λ={}, {})", self.n, self.lambda, self.params)
    }
}

/// Evaluator for a [`CanonicalStateSpec`] with the normalized character of
/// `λ` tabulated per class.
#[derive(Clone, Debug)]
pub struct CanonicalState {
    spec: CanonicalStateSpec,
    chi_lambda: HashMap<CycleType, f64>,
}

impl CanonicalState {
    pub fn new(spec: CanonicalStateSpec) -> Self {
        let d = spec.lambda.hook_dimension() as f64;
        let chi_lambda = Partition::all(spec.n)
            .iter()
            .map(|mu| {
                let ct = CycleType::from(mu);
                let chi = mn_character(&spec.lambda, &ct).expect("weight n") as f64;
                (ct, chi / d)
            })
            .collect();
        Self { spec, chi_lambda }
    }

    pub fn spec(&self) -> &CanonicalStateSpec {
        &self.spec
    }
}

impl State for CanonicalState {
    fn value(&self, s: &Permutation) -> f64 {
        match s.split_product(self.spec.n) {
            Some((s1, s2)) => {
                self.chi_lambda[&s1.cycle_type()] * thoma_character(&self.spec.params, &s2.cycle_type())
            }
            None => 0.0,
        }
    }
}

/// `f(s)` for the canonical state of `spec`. Builds the evaluator each call;
/// use [`CanonicalState`] for repeated evaluation.
pub fn evaluate(spec: &CanonicalStateSpec, s: &Permutation) -> f64 {
    CanonicalState::new(spec.clone()).value(s)
}

/// Conjugators `σ_m`, `m = start..=end`, pushing the support of `g` past `m`
/// with consecutive quotients supported above `m`.
#[derive(Clone, Debug)]
pub struct ShiftSequence {
    pub base: Permutation,
    pub start: usize,
    pub sigmas: Vec<Permutation>,
}

impl ShiftSequence {
    pub fn sigma(&self, m: usize) -> Option<&Permutation> {
        m.checked_sub(self.start).and_then(|i| self.sigmas.get(i))
    }

    /// `σ_m g σ_m⁻¹` for each `m`.
    pub fn shifted(&self) -> impl Iterator<Item = (usize, Permutation)> + '_ {
        self.sigmas
            .iter()
            .enumerate()
            .map(|(i, s)| (self.start + i, s.conjugate(&self.base)))
    }

    /// Both membership conditions: `σ_m g σ_m⁻¹ ∈ S_{N∖m}` and
    /// `σ_{m+1} σ_m⁻¹ ∈ S_{N∖m}`, for every `m` in range.
    pub fn verify(&self) -> bool {
        let shifted_ok = self.shifted().all(|(m, x)| x.fixes_prefix(m));
        let chain_ok = self.sigmas.windows(2).enumerate().all(|(i, w)| {
            let m = self.start + i;
            w[1].compose(&w[0].inverse()).fixes_prefix(m)
        });
        shifted_ok && chain_ok
    }
}

/// Builds `σ_{m0}` relocating `supp(g)` onto `{m0+1, …, m0+r}`, then
/// `σ_{m+1} = (m+1 m+2 … m+r+1) ∘ σ_m`.
pub fn shift_sequence(g: &Permutation, m0: usize, end: usize) -> Result<ShiftSequence> {
    if m0 < g.level() {
        return Err(Error::ShiftStart { m0, level: g.level() });
    }
    let r = g.support_len();
    let mut sigma = Permutation::identity();
    for (j, a) in g.support().enumerate() {
        sigma = Permutation::transposition(a, m0 + j + 1).compose(&sigma);
    }
    let mut sigmas = vec![sigma];
    for m in m0..end {
        let rotate = Permutation::cycle(&(m + 1..=m + r + 1).collect::<Vec<_>>())?;
        let next = rotate.compose(sigmas.last().expect("nonempty"));
        sigmas.push(next);
    }
    Ok(ShiftSequence { base: g.clone(), start: m0, sigmas })
}

/// Tolerances used by the classification pipeline.
#[derive(Clone, Debug)]
pub struct Thresholds {
    /// `|f(s)| <` this counts as vanishing.
    pub vanishing: f64,
    /// Consecutive asymptotic values closer than this count as equal.
    pub stabilization: f64,
    /// Character overlaps above this survive in [`recover_lambda`].
    pub overlap: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Self { vanishing: 1e-10, stabilization: 1e-12, overlap: 1e-8 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticValue {
    pub value: f64,
    /// Smallest `m` from which all later values agree.
    pub stabilized_at: usize,
    pub trace: Vec<(usize, f64)>,
}

/// Evaluates `state(σ_m g σ_m⁻¹)` for `m = level(g)..=horizon` and reports
/// the limit together with the index from which it is constant.
pub fn asymptotic_character<S: State + ?Sized>(
    state: &S,
    g: &Permutation,
    horizon: usize,
    stabilization: f64,
) -> Result<AsymptoticValue> {
    let start = g.level();
    if let Some(max) = state.max_level() {
        let needed = horizon + g.support_len();
        if needed > max {
            return Err(Error::LevelTooLarge { requested: needed, available: max });
        }
    }
    let seq = shift_sequence(g, start, horizon.max(start))?;
    let trace: Vec<(usize, f64)> = seq.shifted().map(|(m, x)| (m, state.value(&x))).collect();
    let agree = |a: f64, b: f64| (a - b).abs() <= stabilization;
    let last = trace.len() - 1;
    if trace.len() < 2 || !agree(trace[last - 1].1, trace[last].1) {
        return Err(Error::NotStabilized { trace });
    }
    let mut from = last;
    while from > 0 && agree(trace[from - 1].1, trace[from].1) {
        from -= 1;
    }
    Ok(AsymptoticValue { value: trace[last].1, stabilized_at: trace[from].0, trace })
}

/// The unique `λ ⊢ n` with `Σ_{g ∈ S_n} f(g) χ_λ(g) ≠ 0`.
pub fn recover_lambda<S: State + ?Sized>(state: &S, n: usize, overlap: f64) -> Result<Partition> {
    if n == 0 {
        return Ok(Partition::empty());
    }
    let tables = LevelTables::get(n);
    let chars = &tables.characters;
    let mut by_class = vec![0.0; chars.classes.len()];
    for g in tables.group.elements() {
        let col = chars.column_of(&g.cycle_type()).expect("class of S_n");
        by_class[col] += state.value(&g);
    }
    let survivors: Vec<&Partition> = chars
        .irreps
        .iter()
        .zip(&chars.values)
        .filter(|(_, row)| {
            let s: f64 = row.iter().zip(&by_class).map(|(&chi, &v)| chi as f64 * v).sum();
            s.abs() > overlap
        })
        .map(|(l, _)| l)
        .collect();
    match survivors.as_slice() {
        [one] => Ok((*one).clone()),
        [] => Err(Error::Classification(format!("no irreducible character of S_{n} survives"))),
        many => Err(Error::Classification(format!(
            "restriction to S_{n} mixes {} irreducible characters: {many:?}",
            many.len()
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CentralDepth {
    Exact(usize),
    /// No level up to the truncation satisfied both conditions.
    Exceeds(usize),
}

impl fmt::Display for CentralDepth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralDepth::Exact(n) => write!(f, "{n}"),
            CentralDepth::Exceeds(k) => write!(f, "> {k}"),
        }
    }
}

/// Smallest `n <= k` such that the state vanishes on `S_k ∖ S_n S_{N∖n}`
/// and is invariant under conjugation by the Coxeter generators of
/// `S_n × (S_{N∖n} ∩ S_k)`.
pub fn central_depth<S: State + ?Sized>(state: &S, k: usize, vanishing: f64) -> CentralDepth {
    let table = to_table(state, k);
    central_depth_of_table(&table, vanishing)
}

/// [`central_depth`] for a tabulated function (real parts are used).
pub fn central_depth_of_table(table: &StateFunction, vanishing: f64) -> CentralDepth {
    let k = table.level();
    let group = &table.tables().group;
    let elements: Vec<Permutation> = group.elements().collect();
    let values: Vec<f64> = table.values().iter().map(|z| z.re).collect();
    let conj_maps: Vec<Vec<usize>> = (1..k)
        .map(|i| {
            let t = Permutation::transposition(i, i + 1);
            elements
                .iter()
                .map(|s| group.index_of(&t.conjugate(s)).expect("S_k is normal in itself"))
                .collect()
        })
        .collect();
    for n in 0..=k {
        let vanishes = elements
            .iter()
            .zip(&values)
            .all(|(s, v)| s.split_product(n).is_some() || v.abs() < vanishing);
        if !vanishes {
            continue;
        }
        let invariant = (1..k).filter(|&i| i != n).all(|i| {
            let map = &conj_maps[i - 1];
            (0..values.len()).all(|s| (values[map[s]] - values[s]).abs() < vanishing)
        });
        if invariant {
            return CentralDepth::Exact(n);
        }
    }
    CentralDepth::Exceeds(k)
}

/// The complete quasi-equivalence datum `(n, λ, α, β)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassInvariant {
    pub n: usize,
    pub lambda: Partition,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

impl From<&CanonicalStateSpec> for ClassInvariant {
    fn from(spec: &CanonicalStateSpec) -> Self {
        Self {
            n: spec.n,
            lambda: spec.lambda.clone(),
            alpha: spec.params.alpha().to_vec(),
            beta: spec.params.beta().to_vec(),
        }
    }
}

impl ClassInvariant {
    pub fn to_spec(&self) -> Result<CanonicalStateSpec> {
        let params = ThomaParams::from_unsorted(self.alpha.clone(), self.beta.clone())?;
        CanonicalStateSpec::new(self.n, self.lambda.clone(), params)
    }
}

/// Equal depth, equal diagram, and parameter lists equal entrywise within
/// `tol` after sorting decreasingly (missing entries count as zero).
pub fn quasi_equivalent(a: &ClassInvariant, b: &ClassInvariant, tol: f64) -> bool {
    let close = |x: &[f64], y: &[f64]| {
        let sorted = |v: &[f64]| {
            let mut v = v.to_vec();
            v.sort_by(|p, q| q.total_cmp(p));
            v
        };
        let (x, y) = (sorted(x), sorted(y));
        (0..x.len().max(y.len())).all(|i| {
            let p = x.get(i).copied().unwrap_or(0.0);
            let q = y.get(i).copied().unwrap_or(0.0);
            (p - q).abs() <= tol
        })
    };
    a.n == b.n && a.lambda == b.lambda && close(&a.alpha, &b.alpha) && close(&a.beta, &b.beta)
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Level `K` on which central depth is decided.
    pub truncation: usize,
    /// Largest cycle length whose asymptotic value is fed to recovery;
    /// defaults to the truncation.
    pub max_cycle: Option<usize>,
    pub bounds: SupportBounds,
    pub thresholds: Thresholds,
    pub recovery: RecoveryOptions,
    /// Extra shifts beyond the stabilization point used to confirm it.
    pub extra_shifts: usize,
}

impl ClassifyOptions {
    pub fn new(truncation: usize, bounds: SupportBounds) -> Self {
        Self {
            truncation,
            max_cycle: None,
            bounds,
            thresholds: Thresholds::default(),
            recovery: RecoveryOptions::default(),
            extra_shifts: 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub invariant: ClassInvariant,
    pub factor_type: FactorType,
    pub cycle_values: BTreeMap<usize, f64>,
    pub stabilized_at: BTreeMap<usize, usize>,
    pub residual: f64,
    /// The depth is a finite proxy decided on `S_K`.
    pub truncation: usize,
}

/// Central depth, then `λ`, then `(α, β)` from asymptotic cycle values.
pub fn classify<S: State + ?Sized>(state: &S, options: &ClassifyOptions) -> Result<Classification> {
    let k = options.truncation;
    let n = match central_depth(state, k, options.thresholds.vanishing) {
        CentralDepth::Exact(n) => n,
        CentralDepth::Exceeds(k) => {
            return Err(Error::Classification(format!("central depth exceeds truncation {k}")))
        }
    };
    let lambda = recover_lambda(state, n, options.thresholds.overlap)?;
    let max_cycle = options.max_cycle.unwrap_or(k);
    let mut cycle_values = BTreeMap::new();
    let mut stabilized_at = BTreeMap::new();
    for len in 2..=max_cycle {
        let g = Permutation::cycle(&(1..=len).collect::<Vec<_>>())?;
        let horizon = n.max(len) + options.extra_shifts;
        let a = asymptotic_character(state, &g, horizon, options.thresholds.stabilization)?;
        cycle_values.insert(len, a.value);
        stabilized_at.insert(len, a.stabilized_at);
    }
    let recovery = recover_params(&cycle_values, options.bounds, &options.recovery)?;
    let factor_type = type_classify(&recovery.params);
    Ok(Classification {
        invariant: ClassInvariant {
            n,
            lambda,
            alpha: recovery.params.alpha().to_vec(),
            beta: recovery.params.beta().to_vec(),
        },
        factor_type,
        cycle_values,
        stabilized_at,
        residual: recovery.residual,
        truncation: k,
    })
}

/// Canonical state tabulated on `S_k` as a complex function.
pub fn canonical_table(spec: &CanonicalStateSpec, k: usize) -> StateFunction {
    let state = CanonicalState::new(spec.clone());
    StateFunction::from_fn(k, |g| c(state.value(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::is_positive_definite;
    use crate::perm::SymmetricGroup;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn spec(n: usize, l: &[usize], a: &[f64], b: &[f64]) -> CanonicalStateSpec {
        CanonicalStateSpec::new(n, part(l), ThomaParams::new(a.to_vec(), b.to_vec()).unwrap())
            .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let thoma = spec(0, &[], &[0.6, 0.3], &[0.1]);
        let state = CanonicalState::new(thoma.clone());
        for g in SymmetricGroup::new(5).elements() {
            assert_eq!(state.value(&g), thoma_character(&thoma.params, &g.cycle_type()));
        }
        let s = spec(2, &[1, 1], &[0.5], &[]);
        assert_eq!(evaluate(&s, &Permutation::transposition(1, 2)), -1.0);
        assert_eq!(evaluate(&s, &Permutation::identity()), 1.0);
        for l in [&[2][..], &[1, 1]] {
            assert_eq!(evaluate(&spec(2, l, &[0.5], &[]), &Permutation::transposition(2, 3)), 0.0);
        }
    }

    #[test]
    fn spec_json() {
        let s: CanonicalStateSpec =
            serde_json::from_str(r#"{"n":2,"lambda":[1,1],"alpha":[0.5,0.5],"beta":[]}"#).unwrap();
        assert_eq!(s, spec(2, &[1, 1], &[0.5, 0.5], &[]));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"n":2,"lambda":[1,1],"alpha":[0.5,0.5],"beta":[]}"#
        );
        assert!(serde_json::from_str::<CanonicalStateSpec>(r#"{"n":3,"lambda":[1,1]}"#).is_err());
    }

    #[test]
    fn shift_sequence_examples() {
        let g = Permutation::transposition(1, 2);
        let seq = shift_sequence(&g, 2, 6).unwrap();
        assert_eq!(seq.sigma(2).unwrap().conjugate(&g), Permutation::transposition(3, 4));
        let quotient = seq.sigma(3).unwrap().compose(&seq.sigma(2).unwrap().inverse());
        assert_eq!(quotient, Permutation::cycle(&[3, 4, 5]).unwrap());
        assert!(quotient.fixes_prefix(2));
        assert!(seq.verify());
        let e = shift_sequence(&Permutation::identity(), 0, 5).unwrap();
        assert!(e.sigmas.iter().all(Permutation::is_identity));
        assert!(matches!(shift_sequence(&g, 1, 4), Err(Error::ShiftStart { .. })));
    }

    #[test]
    fn asymptotic_examples() {
        let s = CanonicalState::new(spec(2, &[2], &[0.5, 0.5], &[]));
        let a = asymptotic_character(&s, &Permutation::transposition(1, 2), 6, 1e-12).unwrap();
        assert_eq!(a.value, 0.5);
        assert_eq!(a.stabilized_at, 2);
        let e = asymptotic_character(&s, &Permutation::identity(), 4, 1e-12).unwrap();
        assert_eq!(e.value, 1.0);

        let s3 = CanonicalState::new(spec(3, &[2, 1], &[0.4], &[0.2]));
        let g = Permutation::transposition(1, 2);
        let a = asymptotic_character(&s3, &g, 7, 1e-12).unwrap();
        assert_eq!(a.stabilized_at, 3);
        assert_eq!(a.value, thoma_character(&s3.spec().params, &g.cycle_type()));
        for &(m, v) in &a.trace {
            if m >= 3 {
                assert_eq!(v, a.value);
            }
        }
    }

    #[test]
    fn asymptotic_reports_non_stabilized_trace() {
        let wobbly = |s: &Permutation| s.level() as f64;
        let err = asymptotic_character(&wobbly, &Permutation::transposition(1, 2), 5, 1e-12);
        match err {
            Err(Error::NotStabilized { trace }) => assert_eq!(trace.len(), 4),
            other => panic!("expected NotStabilized, got {other:?}"),
        }
    }

    #[test]
    fn recover_lambda_examples() {
        let s = CanonicalState::new(spec(3, &[2, 1], &[0.3], &[0.3]));
        assert_eq!(recover_lambda(&s, 3, 1e-8).unwrap(), part(&[2, 1]));
        assert_eq!(recover_lambda(&s, 0, 1e-8).unwrap(), Partition::empty());
        let trivial = ThomaState(ThomaParams::trivial());
        assert_eq!(recover_lambda(&trivial, 2, 1e-8).unwrap(), part(&[2]));
        // δ_e restricted to S_2 mixes both characters
        let regular = ThomaState(ThomaParams::regular());
        assert!(recover_lambda(&regular, 2, 1e-8).is_err());
    }

    #[test]
    fn central_depth_examples() {
        let s = CanonicalState::new(spec(2, &[1, 1], &[0.5], &[0.2]));
        for k in 4..=6 {
            assert_eq!(central_depth(&s, k, 1e-10), CentralDepth::Exact(2));
        }
        let t = ThomaState(ThomaParams::new(vec![0.3], vec![0.3]).unwrap());
        assert_eq!(central_depth(&t, 5, 1e-10), CentralDepth::Exact(0));
        assert_eq!(central_depth(&ThomaState(ThomaParams::regular()), 5, 1e-10), CentralDepth::Exact(0));
        let delta_12 = |p: &Permutation| f64::from(*p == Permutation::transposition(1, 2));
        assert_eq!(central_depth(&delta_12, 4, 1e-10), CentralDepth::Exact(2));
        let rogue = |p: &Permutation| f64::from(*p == Permutation::transposition(1, 4));
        assert_eq!(central_depth(&rogue, 4, 1e-10), CentralDepth::Exceeds(4));
    }

    #[test]
    fn classify_examples() {
        let opts = ClassifyOptions::new(5, SupportBounds::new(2, 2));
        let trivial = classify(&ThomaState(ThomaParams::trivial()), &opts).unwrap();
        assert_eq!(trivial.invariant.n, 0);
        assert_eq!(trivial.invariant.lambda, Partition::empty());
        assert!((trivial.invariant.alpha[0] - 1.0).abs() < 1e-6);
        assert!(trivial.invariant.beta.is_empty());

        let sign = classify(&ThomaState(ThomaParams::sign()), &opts).unwrap();
        assert!(sign.invariant.alpha.is_empty());
        assert!((sign.invariant.beta[0] - 1.0).abs() < 1e-6);

        let original = spec(2, &[1, 1], &[0.5, 0.5], &[]);
        let got = classify(&CanonicalState::new(original.clone()), &opts).unwrap();
        assert!(quasi_equivalent(&got.invariant, &ClassInvariant::from(&original), 1e-6));
        assert_eq!(got.factor_type, FactorType::TypeIIInfinity);
    }

    #[test]
    fn quasi_equivalence_examples() {
        let a = ClassInvariant::from(&spec(2, &[2], &[0.6, 0.4], &[]));
        assert!(quasi_equivalent(&a, &a, 1e-9));
        let b = ClassInvariant::from(&spec(2, &[1, 1], &[0.6, 0.4], &[]));
        assert!(!quasi_equivalent(&a, &b, 1e-9));
        let swapped = ClassInvariant { alpha: vec![0.4, 0.6], ..a.clone() };
        assert!(quasi_equivalent(&a, &swapped, 1e-9));
    }

    #[test]
    fn canonical_states_are_positive_definite() {
        for s in [
            spec(1, &[1], &[0.5], &[0.5]),
            spec(2, &[1, 1], &[0.3], &[0.2]),
            spec(3, &[2, 1], &[], &[]),
        ] {
            let f = canonical_table(&s, 5);
            assert!(is_positive_definite(&f).unwrap().positive_definite, "{s}");
        }
    }
}
