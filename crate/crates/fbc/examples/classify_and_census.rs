//! Classify monodromies and enumerate conjugacy classes by trace and
//! determinant.
//!
//! ```bash
//! cargo run --example classify_and_census
//! ```

use fbc::gl2z::{classify, enumerate_classes, CensusError, Mat2Z};

fn main() {
    let samples = [
        ("2,1;1,1", "figure-eight monodromy"),
        ("1,-1;1,0", "trefoil monodromy"),
        ("1,1;1,0", "Gieseking monodromy"),
        ("1,1;0,1", "unipotent shear"),
        ("0,1;1,0", "basis swap"),
        ("0,-1;1,0", "quarter turn"),
    ];
    println!("classification:");
    for (text, name) in samples {
        let phi: Mat2Z = text.parse().unwrap();
        println!("  {:10}  {:24}  {}", text, name, classify(&phi));
    }

    println!();
    println!("conjugacy classes per (trace, determinant):");
    for (tr, det) in [
        (3, 1),
        (1, 1),
        (1, -1),
        (0, -1),
        (4, 1),
        (5, 1),
        (6, 1),
        (3, -1),
    ] {
        match enumerate_classes(tr, det) {
            Ok(classes) => {
                let reps: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
                println!(
                    "  ({:2}, {:2})  {} class(es): {}",
                    tr,
                    det,
                    classes.len(),
                    reps.join("  ")
                );
            }
            Err(CensusError::InfiniteFamily { trace }) => {
                println!("  ({:2}, {:2})  infinite family (trace {})", tr, det, trace);
            }
            Err(e) => println!("  ({:2}, {:2})  {}", tr, det, e),
        }
    }

    // The smallest hyperbolic trace with determinant 1 admits exactly one
    // class; its representative is conjugate to the figure-eight monodromy.
    let unique = enumerate_classes(3, 1).unwrap();
    let fig8: Mat2Z = "2,1;1,1".parse().unwrap();
    assert_eq!(unique.len(), 1);
    assert!(fbc::gl2z::is_conjugate_z(&unique[0], &fig8).conjugate);
    println!();
    println!(
        "trace 3, determinant 1 is a single class; {} is conjugate to {}",
        unique[0], fig8
    );
}
