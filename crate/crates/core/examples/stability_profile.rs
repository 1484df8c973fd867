//! Stability profile of a canonical state: the orbit defect under
//! conjugation by elements of `S_{N∖m}` as the cut `m` grows.

use stablerep::stability::{centrality_defect, stability_profile, GeneratorSet};
use stablerep::stable::{canonical_table, CanonicalStateSpec};
use stablerep::thoma::ThomaParams;
use stablerep::Partition;

fn main() -> stablerep::Result<()> {
    let spec = CanonicalStateSpec::new(2, Partition::new(vec![1, 1])?, ThomaParams::new(vec![0.5], vec![0.2])?)?;
    let table = canonical_table(&spec, 7);
    let profile = stability_profile(&table, 5, 4, GeneratorSet::AboveCut)?;
    print!("{}", profile.to_csv());
    for n in 0..=3 {
        println!("centrality defect at n = {n}: {:e}", centrality_defect(&table, n, 5)?);
    }
    Ok(())
}
