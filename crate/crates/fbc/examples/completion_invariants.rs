//! The invariant battery for comparing profinite completions of
//! free-by-cyclic groups: homology, determinant, monodromy type, hyperbolic
//! trace, and Betti profiles. A `compatible` verdict means "not separated
//! by these invariants", never an isomorphism claim.
//!
//! ```bash
//! cargo run --example completion_invariants
//! ```

use fbc::gl2z::Mat2Z;
use fbc::mapping_torus::completion_compatible;

fn check(left: &str, right: &str, note: &str) {
    let phi: Mat2Z = left.parse().unwrap();
    let psi: Mat2Z = right.parse().unwrap();
    println!(
        "{:16} vs {:16}  {:32}  -> {}",
        phi.to_string(),
        psi.to_string(),
        note,
        completion_compatible(&phi, &psi)
    );
}

fn main() {
    check("2,1;1,1", "1,-1;1,0", "figure-eight vs trefoil");
    check("2,1;1,1", "1,1;1,0", "figure-eight vs Gieseking");
    check("2,1;1,1", "1,1;1,2", "a matrix vs its transpose");
    check(
        "2,1;1,1",
        "3,1;1,0",
        "hyperbolic, traces 3 vs 3, det 1 vs -1",
    );
    check("2,1;1,1", "5,2;2,1", "hyperbolic, traces 3 vs 6");
    check("1,1;0,1", "1,6;0,1", "parabolic, torsion Z/1 vs Z/6");
    check("0,1;1,0", "1,1;0,1", "order two vs parabolic: same H1");
    check(
        "188,275;121,177",
        "188,11;3025,177",
        "locally conjugate pair",
    );

    // The order-2 flip and the shear share H1 = Z^2; only the profile of
    // Betti numbers over powers tells them apart (b1 jumps to 3 at the
    // square of the flip).
    let flip: Mat2Z = "0,1;1,0".parse().unwrap();
    let shear: Mat2Z = "1,1;0,1".parse().unwrap();
    println!();
    println!(
        "flip profile  {:?}",
        fbc::mapping_torus::b1_profile(&flip, 4)
    );
    println!(
        "shear profile {:?}",
        fbc::mapping_torus::b1_profile(&shear, 4)
    );
}
