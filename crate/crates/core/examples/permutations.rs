//! Finitely supported permutations: cycle notation, composition, the split
//! `S_n · S_{N∖n}`, and the shift sequence pushing a support to infinity.

use stablerep::stable::shift_sequence;
use stablerep::Permutation;

fn main() -> stablerep::Result<()> {
    let s = Permutation::from_cycles(&[vec![1, 2], vec![5, 6]])?;
    let t = Permutation::cycle(&[2, 3, 4])?;
    println!("s = {s}, t = {t}");
    println!("s∘t = {}, t s t⁻¹ = {}", s.compose(&t), t.conjugate(&s));
    println!("cycle type of s∘t: {:?}, sign {}", s.compose(&t).cycle_type().lengths(), s.compose(&t).sign());

    for n in [1, 2, 4] {
        match s.split_product(n) {
            Some((inner, outer)) => println!("n = {n}: s = {inner} · {outer}"),
            None => println!("n = {n}: s does not preserve {{1..{n}}}"),
        }
    }

    let g = Permutation::cycle(&[1, 2, 3])?;
    let seq = shift_sequence(&g, 3, 6)?;
    for (m, moved) in seq.shifted() {
        println!("σ_{m} g σ_{m}⁻¹ = {moved}");
    }
    println!("membership conditions hold: {}", seq.verify());
    Ok(())
}
