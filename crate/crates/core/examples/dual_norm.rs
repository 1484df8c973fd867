//! Fourier blocks, the dual norm on `C*(S_n)`, and positive-definiteness
//! certificates.

use stablerep::charfin::normalized_character;
use stablerep::fourier::{
    cstar_norm, dual_norm, dual_norm_optimizer, is_positive_definite, StateFunction,
};
use stablerep::linalg::c;
use stablerep::{Partition, Permutation};

fn main() -> stablerep::Result<()> {
    let delta = StateFunction::delta_e(4);
    println!("‖δ_e‖ on S_4 = {}", dual_norm(&delta));

    for lambda in Partition::all(4) {
        let l = lambda.clone();
        let chi = StateFunction::from_real_fn(4, move |g| normalized_character(&l, &g.cycle_type()).unwrap());
        println!("‖χ_{lambda}/d‖ = {:.12}", dual_norm(&chi));
    }

    let swap = StateFunction::from_sparse(3, [(Permutation::identity(), c(1.0)), (Permutation::transposition(1, 2), c(0.8))])?;
    let optimizer = dual_norm_optimizer(&swap);
    println!(
        "f = δ_e + 0.8 δ_(12): ‖f‖ = {:.6}, optimizer has C*-norm {:.6} and pairing {:.6}",
        dual_norm(&swap),
        cstar_norm(&optimizer),
        swap.pairing(&optimizer).re
    );
    let cert = is_positive_definite(&swap)?;
    println!("positive definite: {}, min eigenvalue {:.6}", cert.positive_definite, cert.min_eigenvalue);

    let too_big = StateFunction::from_sparse(2, [(Permutation::identity(), c(1.0)), (Permutation::transposition(1, 2), c(1.5))])?;
    let cert = is_positive_definite(&too_big)?;
    println!("δ_e + 1.5 δ_(12): positive definite: {}, min eigenvalue {}", cert.positive_definite, cert.min_eigenvalue);
    Ok(())
}
