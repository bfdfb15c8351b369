//! First homology of mapping tori, Betti profiles over powers, and the
//! identification of the three monodromies with H1 = Z.
//!
//! ```bash
//! cargo run --example mapping_torus_homology
//! ```

use fbc::gl2z::Mat2Z;
use fbc::mapping_torus::{b1_profile, fingerprint, h1, identify_b1_one, PROFILE_DEPTH};

fn main() {
    let monodromies = [
        "2,1;1,1",  // figure-eight knot complement
        "1,-1;1,0", // trefoil knot complement
        "1,1;1,0",  // Gieseking manifold
        "1,0;0,1",  // trivial monodromy: T^2 x S^1 minus a curve
        "1,6;0,1",  // parabolic with torsion
        "0,1;1,0",  // order-2 flip
    ];
    for text in monodromies {
        let phi: Mat2Z = text.parse().unwrap();
        let f = fingerprint(&phi, PROFILE_DEPTH);
        println!("monodromy {}", phi);
        println!("  class       {}", f.class);
        println!("  H1          {}", f.h1);
        println!("  b1 profile  {:?}", b1_profile(&phi, 6));
        println!("  identity    {}", identify_b1_one(&phi));
        println!();
    }

    // The homology-Z mapping tori exist only for (trace, det) in
    // {(3, 1), (1, 1), (1, -1)}: sweep all small monodromies and collect
    // the ones with H1 = Z.
    let mut found = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                for d in -3i64..=3 {
                    let Ok(phi) = Mat2Z::from_i64(a, b, c, d) else {
                        continue;
                    };
                    let summary = h1(&phi);
                    if summary.b1 == 1 && summary.torsion.is_empty() {
                        found.push((phi.trace(), phi.det()));
                    }
                }
            }
        }
    }
    found.sort();
    found.dedup();
    println!("(trace, det) with H1 = Z in the [-3,3] sweep: {:?}", found);
}
