//! GNS construction, the standard form with its modular conjugation, and
//! the biregular representation for a state on `S_3`.

use stablerep::gns::{gns, standard_form_of, verify_state, BiregularRep, FAITHFUL_MIX};
use stablerep::stable::{canonical_table, CanonicalStateSpec};
use stablerep::thoma::ThomaParams;
use stablerep::Partition;

fn main() -> stablerep::Result<()> {
    let spec = CanonicalStateSpec::new(1, Partition::new(vec![1])?, ThomaParams::new(vec![0.5], vec![0.25])?)?;
    let f = canonical_table(&spec, 3);
    let triple = gns(&f)?;
    println!("GNS carrier dimension {}, coefficient defect {:e}", triple.dim, triple.coefficient_defect(&f));

    let sf = standard_form_of(&triple, FAITHFUL_MIX)?;
    let r = sf.residuals();
    println!("dim M = {}", sf.dim());
    println!("‖J² − I‖ = {:e}, ‖Jξ − ξ‖ = {:e}", r.j_squared, r.j_fixes_xi);
    println!("dist(J M J, M') = {:e}, dist(J, X ↦ X*) = {:e}", r.jmj_commutant, r.j_adjoint_map);

    let bi = BiregularRep::new(&sf, &triple.pi, 3);
    println!("[Π(g,e), Π(e,h)] defect {:e}, Ad defect {:e}", bi.commutation_defect(), bi.ad_defect());

    let report = verify_state(&f, 0, 0)?;
    println!("labels {:?}; all checks pass: {}", report.labels, report.passes(1e-8));
    Ok(())
}
