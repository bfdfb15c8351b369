//! Mapping-torus presentations from monodromies, the presentation grammar,
//! and abelianization through the Smith normal form.
//!
//! ```bash
//! cargo run --example presentations
//! ```

use fbc::fpgroups::Presentation;
use fbc::gl2z::Mat2Z;
use fbc::mapping_torus::{h1, presentation_of};
use fbc::zlinalg::{smith_normal_form, IntMatrix};

fn main() {
    // Presentations of F2 ⋊_φ Z via the Nielsen lift of the monodromy.
    for text in ["1,1;0,1", "2,1;1,1", "1,-1;1,0"] {
        let phi: Mat2Z = text.parse().unwrap();
        let p = presentation_of(&phi);
        println!("monodromy {}", phi);
        println!("  presentation    {}", p);
        println!("  abelianization  {}", p.abelianization());
        assert_eq!(p.abelianization(), h1(&phi));
        println!();
    }

    // The grammar accepts `u = v` as sugar for the relator u v^-1.
    let parsed = Presentation::parse("a b | a a = b b b").unwrap();
    println!("parsed trefoil relator: {}", parsed);
    println!("abelianization: {}", parsed.abelianization());
    println!();

    // The underlying exact linear algebra: a Smith normal form with its
    // unimodular transforms.
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
    let snf = smith_normal_form(&a);
    println!("diagonal of the Smith normal form: {:?}", snf.diagonal());
    assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d);
    println!("u a v = d verified exactly");
}
