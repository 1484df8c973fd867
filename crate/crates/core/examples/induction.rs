//! Characters induced from `S_n × S_{m−n}` to `S_m` and their
//! decomposition into irreducibles.

use stablerep::gns::induced_character;
use stablerep::Partition;

fn main() -> stablerep::Result<()> {
    let lambda = Partition::new(vec![2])?;
    let mu = Partition::new(vec![1, 1])?;
    let ind = induced_character(&lambda, &mu, 4)?;
    println!("Ind (χ_{lambda} ⊗ χ_{mu}) to S_4:");
    for (class, value) in ind.classes.iter().zip(&ind.values) {
        println!("  {class}: {value}");
    }
    for (nu, mult) in ind.multiplicities() {
        if mult != 0 {
            println!("  χ_{nu} with multiplicity {mult}");
        }
    }
    Ok(())
}
