//! Canonical partially central states `(n, λ, α, β)`: evaluation, central
//! depth, restriction to `S_n`, and asymptotic characters.

use stablerep::stable::{
    asymptotic_character, central_depth, recover_lambda, CanonicalState, CanonicalStateSpec, State,
};
use stablerep::thoma::ThomaParams;
use stablerep::{Partition, Permutation};

fn main() -> stablerep::Result<()> {
    let spec = CanonicalStateSpec::new(
        2,
        Partition::new(vec![1, 1])?,
        ThomaParams::new(vec![0.5, 0.3], vec![0.1])?,
    )?;
    let state = CanonicalState::new(spec.clone());
    println!("state {spec}");
    for cycles in [vec![], vec![vec![1, 2]], vec![vec![2, 3]], vec![vec![1, 2], vec![3, 4]], vec![vec![3, 4, 5]]] {
        let s = Permutation::from_cycles(&cycles)?;
        println!("  f({s}) = {}", state.value(&s));
    }

    println!("central depth on S_6: {}", central_depth(&state, 6, 1e-10));
    println!("λ from the restriction to S_2: {}", recover_lambda(&state, 2, 1e-8)?);

    let g = Permutation::cycle(&[1, 2, 3])?;
    let a = asymptotic_character(&state, &g, 7, 1e-12)?;
    println!("asymptotic value on {g}: {} (constant from m = {})", a.value, a.stabilized_at);
    for (m, v) in &a.trace {
        println!("  m = {m}: {v}");
    }
    Ok(())
}
