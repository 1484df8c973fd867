//! Classification of a stable state up to quasi-equivalence, and the
//! invariant comparison.

use stablerep::stable::{
    classify, quasi_equivalent, CanonicalState, CanonicalStateSpec, ClassInvariant, ClassifyOptions,
};
use stablerep::thoma::{SupportBounds, ThomaParams};
use stablerep::Partition;

fn main() -> stablerep::Result<()> {
    let specs = [
        CanonicalStateSpec::new(2, Partition::new(vec![1, 1])?, ThomaParams::new(vec![0.5, 0.5], vec![])?)?,
        CanonicalStateSpec::new(3, Partition::new(vec![2, 1])?, ThomaParams::new(vec![0.4], vec![0.3])?)?,
        CanonicalStateSpec::new(1, Partition::new(vec![1])?, ThomaParams::new(vec![], vec![0.6, 0.2])?)?,
    ];
    let options = ClassifyOptions::new(6, SupportBounds::new(2, 2));
    let mut found = Vec::new();
    for spec in &specs {
        let c = classify(&CanonicalState::new(spec.clone()), &options)?;
        println!(
            "{spec} -> n = {}, λ = {}, α = {:?}, β = {:?}, {} (residual {:e})",
            c.invariant.n, c.invariant.lambda, c.invariant.alpha, c.invariant.beta, c.factor_type, c.residual
        );
        println!("  same class as input: {}", quasi_equivalent(&c.invariant, &ClassInvariant::from(spec), 1e-6));
        found.push(c.invariant);
    }
    println!("first two quasi-equivalent: {}", quasi_equivalent(&found[0], &found[1], 1e-6));
    Ok(())
}
