//! Continuity probes for orbit maps under inner automorphisms: the metric
//! `ρ(f, h) = sup_n ‖f − h‖_n` (truncated), conjugated states, stability
//! profiles along the cut `S_{N∖m}`, and centrality defects.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier::{restricted_distance, StateFunction};
use crate::perm::{Permutation, SymmetricGroup};
use crate::stable::State;

/// `s ↦ f(t s t⁻¹)` on `S_k`, read from a table of `f` on a level
/// containing both `S_k` and `t`.
pub fn ad_orbit_to(f: &StateFunction, t: &Permutation, k: usize) -> Result<StateFunction> {
    let level = f.level();
    if t.level() > level || k > level {
        return Err(Error::LevelTooLarge { requested: t.level().max(k), available: level });
    }
    Ok(StateFunction::from_fn(k, |s| f.value(&t.conjugate(s)).expect("inside the table")))
}

/// `f ∘ Ad t` on the level of `f`.
pub fn ad_orbit_state(f: &StateFunction, t: &Permutation) -> Result<StateFunction> {
    ad_orbit_to(f, t, f.level())
}

/// Lazily conjugated state `s ↦ inner(t s t⁻¹)`.
pub struct Conjugated<'a, S: ?Sized> {
    pub inner: &'a S,
    pub by: Permutation,
}

impl<S: State + ?Sized> State for Conjugated<'_, S> {
    fn value(&self, s: &Permutation) -> f64 {
        self.inner.value(&self.by.conjugate(s))
    }

    fn max_level(&self) -> Option<usize> {
        self.inner.max_level()
    }
}

/// `max_{n ≤ k} ‖f|_{S_n} − h|_{S_n}‖_n`.
pub fn rho_distance(f: &StateFunction, h: &StateFunction, k: usize) -> Result<f64> {
    (0..=k)
        .map(|n| restricted_distance(f, h, n))
        .try_fold(0.0, |acc, d| d.map(|d| f64::max(acc, d)))
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfilePoint {
    pub m: usize,
    pub defect: f64,
    pub witness: Permutation,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityProfile {
    pub truncation: usize,
    pub points: Vec<ProfilePoint>,
}

impl StabilityProfile {
    /// `m,defect,witness` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,defect,witness\n");
        for p in &self.points {
            writeln!(out, "{},{},{}", p.m, p.defect, p.witness).expect("write to string");
        }
        out
    }

    pub fn defect(&self, m: usize) -> Option<f64> {
        self.points.iter().find(|p| p.m == m).map(|p| p.defect)
    }

    /// Smallest `m` from which every recorded defect is at most `tol`.
    pub fn vanishes_from(&self, tol: f64) -> Option<usize> {
        let mut from = None;
        for p in self.points.iter().rev() {
            if p.defect > tol {
                break;
            }
            from = Some(p.m);
        }
        from
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GeneratorSet {
    /// `(m+1 m+2)` and `(m+1 m+2 m+3)`.
    #[default]
    AboveCut,
    /// Every permutation of `{m+1, …, K'}`.
    Exhaustive,
}

fn probes(m: usize, top: usize, set: GeneratorSet) -> Vec<Permutation> {
    match set {
        GeneratorSet::AboveCut => [vec![m + 1, m + 2], vec![m + 1, m + 2, m + 3]]
            .into_iter()
            .filter(|c| c.last().is_some_and(|&x| x <= top))
            .map(|c| Permutation::cycle(&c).expect("distinct points"))
            .collect(),
        GeneratorSet::Exhaustive => {
            let width = top.saturating_sub(m);
            SymmetricGroup::new(width)
                .elements()
                .filter(|g| !g.is_identity())
                .map(|g| g.shifted(m))
                .collect()
        }
    }
}

/// Defect `max_g ρ(f ∘ Ad g, f)` over probes `g ∈ S_{N∖m}` inside the
/// table's level, for `m = 0..=max_m`, with `ρ` truncated at `k`.
pub fn stability_profile(
    f: &StateFunction,
    k: usize,
    max_m: usize,
    set: GeneratorSet,
) -> Result<StabilityProfile> {
    let top = f.level();
    if top < k + 2 {
        return Err(Error::LevelTooLarge { requested: k + 2, available: top });
    }
    if max_m + 2 > top {
        return Err(Error::LevelTooLarge { requested: max_m + 2, available: top });
    }
    let base = f.restrict(k)?;
    let points = (0..=max_m)
        .into_par_iter()
        .map(|m| {
            let mut best: Option<(f64, Permutation)> = None;
            for g in probes(m, top, set) {
                let moved = ad_orbit_to(f, &g, k)?;
                let d = rho_distance(&moved, &base, k)?;
                if best.as_ref().is_none_or(|(b, _)| d > *b) {
                    best = Some((d, g));
                }
            }
            let (defect, witness) = best.expect("at least one probe when m + 2 <= level");
            Ok(ProfilePoint { m, defect, witness })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StabilityProfile { truncation: k, points })
}

/// `max_t ρ(f ∘ Ad t, f)` over the Coxeter generators `t` of
/// `S_n × (S_{N∖n} ∩ S_k)`.
pub fn centrality_defect(f: &StateFunction, n: usize, k: usize) -> Result<f64> {
    if k > f.level() {
        return Err(Error::LevelTooLarge { requested: k, available: f.level() });
    }
    let base = f.restrict(k)?;
    (1..k)
        .filter(|&i| i != n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&i| {
            let moved = ad_orbit_to(f, &Permutation::transposition(i, i + 1), k)?;
            rho_distance(&moved, &base, k)
        })
        .collect::<Result<Vec<f64>>>()
        .map(|ds| ds.into_iter().fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::{dual_norm, is_positive_definite};
    use crate::perm::Partition;
    use crate::stable::{canonical_table, central_depth_of_table, CanonicalStateSpec, CentralDepth};
    use crate::thoma::{thoma_character, ThomaParams};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn spec(n: usize, l: &[usize], a: &[f64], b: &[f64]) -> CanonicalStateSpec {
        CanonicalStateSpec::new(
            n,
            Partition::new(l.to_vec()).unwrap(),
            ThomaParams::new(a.to_vec(), b.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn thoma_table(p: &ThomaParams, k: usize) -> StateFunction {
        StateFunction::from_real_fn(k, |g| thoma_character(p, &g.cycle_type()))
    }

    #[test]
    fn orbit_examples() {
        let f = canonical_table(&spec(2, &[1, 1], &[0.5], &[]), 4);
        assert_eq!(ad_orbit_state(&f, &Permutation::identity()).unwrap(), f);
        let t = Permutation::transposition(2, 3);
        let moved = ad_orbit_state(&f, &t).unwrap();
        let s = Permutation::transposition(1, 2);
        assert_eq!(moved.value(&s).unwrap().re, 0.0);
        assert_eq!(f.value(&s).unwrap().re, -1.0);
        assert_eq!(ad_orbit_state(&moved, &t.inverse()).unwrap(), f);

        let chi = thoma_table(&ThomaParams::new(vec![0.7], vec![0.2]).unwrap(), 4);
        for g in SymmetricGroup::new(4).elements() {
            assert_eq!(ad_orbit_state(&chi, &g).unwrap(), chi);
        }
    }

    #[test]
    fn orbit_preserves_states() {
        let f = canonical_table(&spec(2, &[2], &[0.4, 0.1], &[0.3]), 4);
        for t in SymmetricGroup::new(4).elements() {
            let g = ad_orbit_state(&f, &t).unwrap();
            assert!(is_positive_definite(&g).unwrap().positive_definite);
            assert!((dual_norm(&g) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rho_examples() {
        let delta = StateFunction::delta_e(2);
        let trivial = StateFunction::from_real_fn(2, |_| 1.0);
        assert!((rho_distance(&delta, &trivial, 2).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(rho_distance(&delta, &delta, 2).unwrap(), 0.0);
        assert_eq!(
            rho_distance(&delta, &trivial, 2).unwrap(),
            rho_distance(&trivial, &delta, 2).unwrap()
        );
    }

    fn random_state(rng: &mut ChaCha8Rng) -> StateFunction {
        let chi = ThomaParams::from_unsorted(
            vec![rng.random_range(0.0..0.5)],
            vec![rng.random_range(0.0..0.5)],
        )
        .unwrap();
        thoma_table(&chi, 4)
            .scale(crate::linalg::c(rng.random_range(0.0..1.0)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]
        #[test]
        fn rho_is_a_metric(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (a, b, c) = (random_state(&mut rng), random_state(&mut rng), random_state(&mut rng));
            let ab = rho_distance(&a, &b, 4).unwrap();
            let bc = rho_distance(&b, &c, 4).unwrap();
            let ac = rho_distance(&a, &c, 4).unwrap();
            prop_assert!(ab >= 0.0);
            prop_assert!((ab - rho_distance(&b, &a, 4).unwrap()).abs() < 1e-9);
            prop_assert!(ac <= ab + bc + 1e-9);
            prop_assert!(rho_distance(&a, &a, 4).unwrap() < 1e-9);
            prop_assert!(rho_distance(&a, &b, 3).unwrap() <= ab + 1e-12);
        }
    }

    #[test]
    fn profile_examples() {
        let s = spec(2, &[1, 1], &[0.5], &[0.2]);
        let f = canonical_table(&s, 6);
        let profile = stability_profile(&f, 4, 3, GeneratorSet::AboveCut).unwrap();
        assert!(profile.defect(1).unwrap() > 0.0);
        let t = Permutation::transposition(2, 3);
        let base = f.restrict(4).unwrap();
        assert!(rho_distance(&ad_orbit_to(&f, &t, 4).unwrap(), &base, 4).unwrap() > 0.0);
        assert!(profile.points[1].witness.fixes_prefix(1));
        for m in 2..=3 {
            assert_eq!(profile.defect(m).unwrap(), 0.0);
        }
        let depth = central_depth_of_table(&f, 1e-10);
        assert_eq!(depth, CentralDepth::Exact(profile.vanishes_from(0.0).unwrap()));

        let chi = thoma_table(&ThomaParams::new(vec![0.5, 0.2], vec![0.1]).unwrap(), 6);
        let flat = stability_profile(&chi, 4, 3, GeneratorSet::AboveCut).unwrap();
        assert!(flat.points.iter().all(|p| p.defect == 0.0));
        assert!(flat.to_csv().starts_with("m,defect,witness\n0,0,(1 2)\n"));
    }

    #[test]
    fn exhaustive_sweep_agrees_on_canonical_states() {
        let f = canonical_table(&spec(1, &[1], &[0.6], &[0.3]), 5);
        let quick = stability_profile(&f, 3, 3, GeneratorSet::AboveCut).unwrap();
        let full = stability_profile(&f, 3, 3, GeneratorSet::Exhaustive).unwrap();
        for (q, e) in quick.points.iter().zip(&full.points) {
            assert_eq!(q.defect == 0.0, e.defect == 0.0);
            assert!(q.defect <= e.defect + 1e-12);
        }
    }

    #[test]
    fn centrality_examples() {
        let f = canonical_table(&spec(2, &[1, 1], &[0.5], &[]), 5);
        assert_eq!(centrality_defect(&f, 2, 5).unwrap(), 0.0);
        assert!(centrality_defect(&f, 0, 5).unwrap() > 0.0);
        let delta = StateFunction::delta_e(5);
        for n in 0..=3 {
            assert_eq!(centrality_defect(&delta, n, 5).unwrap(), 0.0);
        }
    }
}
