//! Thoma characters of `S_N`: evaluation, factor type, and recovery of the
//! parameters from cycle values.

use stablerep::thoma::{
    cycle_values, recover_params, thoma_character, type_classify, RecoveryOptions, SupportBounds,
    ThomaParams,
};
use stablerep::CycleType;

fn main() -> stablerep::Result<()> {
    let planted = ThomaParams::new(vec![0.45, 0.2], vec![0.25])?;
    println!("{planted}: γ = {:.2}, type {}", planted.gamma(), type_classify(&planted));
    for lengths in [vec![2], vec![3], vec![2, 2], vec![4, 3, 2]] {
        let ct = CycleType::from_lengths(lengths.clone());
        println!("  χ on cycle type {lengths:?} = {:.6}", thoma_character(&planted, &ct));
    }

    let values = cycle_values(&planted, 8);
    let recovery = recover_params(&values, SupportBounds::new(2, 1), &RecoveryOptions::default())?;
    println!(
        "recovered {} with residual {:e} after {} iterations",
        recovery.params, recovery.residual, recovery.iterations
    );

    let sub = ThomaParams::new(vec![0.3], vec![0.2])?;
    println!("{sub}: type {}", type_classify(&sub));
    Ok(())
}
