//! Characters of `S_n` by Murnaghan–Nakayama, checked against traces of
//! Young's orthogonal form.

use stablerep::charfin::{character_table, mn_character, IrrepMatrices};
use stablerep::{Partition, SymmetricGroup};

fn main() {
    let table = character_table(4);
    let header: Vec<String> = table.classes.iter().map(|c| c.to_string()).collect();
    println!("{:>10} {}", "", header.join(" "));
    for (lambda, row) in table.irreps.iter().zip(&table.values) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>5}")).collect();
        println!("{:>10} {}", lambda.to_string(), cells.join(" "));
    }

    let lambda = Partition::new(vec![3, 2]).expect("valid partition");
    let irrep = IrrepMatrices::new(&lambda);
    let group = SymmetricGroup::new(5);
    let mut worst: f64 = 0.0;
    irrep.for_each_element(&group, |idx, m| {
        let chi = mn_character(&lambda, &group.element(idx).cycle_type()).expect("weight 5");
        worst = worst.max((m.trace() - chi as f64).abs());
    });
    println!("d_{lambda} = {}, max |tr ρ(g) − χ(g)| over S_5 = {worst:e}", irrep.dim());
}
