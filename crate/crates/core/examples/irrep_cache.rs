//! Writing and reloading the binary irrep-matrix cache.

use stablerep::cache::{load_level, read_irrep, write_irrep};
use stablerep::charfin::IrrepMatrices;
use stablerep::Partition;

fn main() -> stablerep::Result<()> {
    let dir = std::env::temp_dir().join("stablerep-cache-example");
    let (tables, hash) = load_level(&dir, 5)?;
    println!("level 5: {} irreps, sha256 {hash}", tables.irreps.len());

    let irrep = IrrepMatrices::new(&Partition::new(vec![3, 1, 1])?);
    let path = write_irrep(&dir, &irrep)?;
    let back = read_irrep(&path)?;
    let exact = irrep
        .generators()
        .iter()
        .zip(back.generators())
        .all(|(a, b)| a.iter().zip(b.iter()).all(|(x, y)| x.to_bits() == y.to_bits()));
    println!("{} reloaded bit-exactly: {exact}", path.display());
    Ok(())
}
