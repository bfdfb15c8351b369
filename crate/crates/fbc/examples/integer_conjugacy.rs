//! Deciding GL(2,Z) conjugacy exactly, with verified witnesses.
//!
//! ```bash
//! cargo run --example integer_conjugacy
//! ```

use fbc::gl2z::{is_conjugate_z, nielsen_decompose, word_to_string, Mat2Z};

fn decide(left: &str, right: &str) {
    let phi: Mat2Z = left.parse().unwrap();
    let psi: Mat2Z = right.parse().unwrap();
    let verdict = is_conjugate_z(&phi, &psi);
    print!("{} ~ {} ?  {}", phi, psi, verdict.conjugate);
    if let Some(g) = &verdict.witness {
        assert_eq!(g.mul(&phi).mul(&g.inverse()), psi);
        print!("   witness g = {}  (g phi g^-1 = psi checks)", g);
    }
    println!();
}

fn main() {
    // a matrix and its transpose
    decide("2,1;1,1", "1,1;1,2");
    // same trace and determinant, different classes
    decide("1,4;1,5", "3,4;2,3");
    // different trace: decided immediately
    decide("2,1;1,1", "1,1;0,1");
    // conjugate by construction
    let phi: Mat2Z = "1,1;1,0".parse().unwrap();
    let g: Mat2Z = "5,2;2,1".parse().unwrap();
    let psi = phi.conjugate_by(&g);
    decide(&phi.to_string(), &psi.to_string());

    // every unimodular matrix is a word in the elementary generators
    // R = (1 1; 0 1), L = (1 0; 1 1), S = (0 1; 1 0), E = (1 0; 0 -1)
    println!();
    for text in ["2,1;1,1", "1,-1;1,0", "188,275;121,177"] {
        let phi: Mat2Z = text.parse().unwrap();
        let word = nielsen_decompose(&phi);
        assert_eq!(fbc::gl2z::evaluate_word(&word), phi);
        let rendered = word_to_string(&word);
        let shown = if rendered.len() > 60 {
            format!("{}... ({} letters)", &rendered[..60], word.len())
        } else {
            rendered
        };
        println!("{}  =  {}", phi, shown);
    }
}
