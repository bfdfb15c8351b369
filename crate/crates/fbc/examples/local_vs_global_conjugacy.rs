//! Local conjugacy (in GL(2, Z/m) for every m) against genuine GL(2,Z)
//! conjugacy: Stebe's pair passes every modulus yet is not conjugate over
//! the integers, so the corresponding torus bundles have the same finite
//! quotients without being homeomorphic.
//!
//! ```bash
//! cargo run --example local_vs_global_conjugacy
//! ```

use fbc::gl2z::{is_conjugate_mod, is_conjugate_z, local_conjugacy, Mat2Z};
use fbc::mapping_torus::completion_compatible;

fn main() {
    let phi: Mat2Z = "188,275;121,177".parse().unwrap();
    let psi: Mat2Z = "188,11;3025,177".parse().unwrap();

    println!("phi = {}   psi = {}", phi, psi);
    println!("trace {}  det {}", phi.trace(), phi.det());

    let report = local_conjugacy(&phi, &psi, 200).unwrap();
    println!(
        "conjugate in GL(2, Z/m) for every m in [2, {}]: {}",
        report.modulus_bound, report.all_pass
    );

    let sample = is_conjugate_mod(&phi, &psi, 7).unwrap();
    println!(
        "sample witness mod 7: {}",
        sample.witness.map(|w| w.to_string()).unwrap_or_default()
    );

    let integral = is_conjugate_z(&phi, &psi);
    println!("conjugate in GL(2, Z): {}", integral.conjugate);

    println!(
        "profinite-invariant battery on the mapping tori: {}",
        completion_compatible(&phi, &psi)
    );

    // For contrast: a pair that fails already at small moduli.
    let fig8: Mat2Z = "2,1;1,1".parse().unwrap();
    let trefoil: Mat2Z = "1,-1;1,0".parse().unwrap();
    let contrast = local_conjugacy(&fig8, &trefoil, 10).unwrap();
    println!();
    println!(
        "{} vs {}: failures at moduli {:?}",
        fig8, trefoil, contrast.failures
    );
}
