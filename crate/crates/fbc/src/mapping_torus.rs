//! Invariants of the free-by-cyclic group Γ_φ = F2 ⋊_φ Z determined by a
//! monodromy φ in GL(2,Z).
//!
//! Abelianizing the mapping-torus presentation splits H1(Γ_φ) as Z (from
//! the stable letter) plus Z² modulo the image of φ - I, so first homology,
//! its behaviour under powers of φ, and the derived fingerprint are all
//! exact Smith-normal-form computations. The fingerprint collects the
//! invariants of Γ_φ that depend only on the profinite completion:
//! determinant, trace (for hyperbolic monodromies), H1, the
//! elliptic/parabolic/hyperbolic type, and the Betti-number profile of
//! Γ_{φ^r} for r = 1..R.
//!
//! `completion_compatible` applies those invariants as necessary
//! conditions; `Compatible` only means "not separated here", never an
//! isomorphism claim.

use crate::fpgroups::{Presentation, Word};
use crate::gl2z::{classify, nielsen_decompose, Mat2Z, MatClass, NielsenGen};
use crate::zlinalg::{cokernel_invariants, HomologySummary};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// First homology of Γ_φ: the direct sum of Z and the cokernel of φ - I.
pub fn h1(phi: &Mat2Z) -> HomologySummary {
    let coker = cokernel_invariants(&phi.sub_identity());
    HomologySummary {
        b1: 1 + coker.b1,
        torsion: coker.torsion,
    }
}

/// First Betti numbers of Γ_{φ^r} for r = 1..=depth.
pub fn b1_profile(phi: &Mat2Z, depth: u32) -> Vec<usize> {
    assert!(depth >= 1, "profile depth must be at least 1");
    let mut profile = Vec::with_capacity(depth as usize);
    let mut power = phi.clone();
    for _ in 0..depth {
        profile.push(h1(&power).b1);
        power = power.mul(phi);
    }
    profile
}

/// Depth at which every non-hyperbolic monodromy shows itself: elliptic
/// orders divide 12, and trace -2 parabolics reach trace 2 by squaring.
pub const PROFILE_DEPTH: u32 = 12;

/// The invariant tuple attached to a monodromy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub det: BigInt,
    pub tr: BigInt,
    pub h1: HomologySummary,
    pub class: MatClass,
    pub b1_profile: Vec<usize>,
}

/// Assembles the fingerprint with a profile of the given depth, which must
/// be at least [`PROFILE_DEPTH`] so the profile separates the elliptic
/// orders and both parabolic traces.
pub fn fingerprint(phi: &Mat2Z, depth: u32) -> Fingerprint {
    assert!(depth >= PROFILE_DEPTH, "fingerprint depth must be >= 12");
    Fingerprint {
        det: phi.det(),
        tr: phi.trace(),
        h1: h1(phi),
        class: classify(phi),
        b1_profile: b1_profile(phi, depth),
    }
}

/// Why two monodromies have distinguishable completions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistinguishReason {
    Homology,
    Determinant,
    ClassKind,
    HyperbolicTrace,
    BettiProfile,
}

impl fmt::Display for DistinguishReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            DistinguishReason::Homology => "first homology differs",
            DistinguishReason::Determinant => "determinant differs",
            DistinguishReason::ClassKind => "monodromy type differs",
            DistinguishReason::HyperbolicTrace => "hyperbolic trace differs",
            DistinguishReason::BettiProfile => "Betti-number profile differs",
        };
        write!(f, "{}", text)
    }
}

/// Verdict of the necessary-condition battery. `Compatible` means no
/// implemented invariant separates the two groups; it is not a proof that
/// the completions agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatVerdict {
    Compatible,
    Distinguished(DistinguishReason),
}

impl CompatVerdict {
    pub fn is_compatible(&self) -> bool {
        matches!(self, CompatVerdict::Compatible)
    }
}

impl fmt::Display for CompatVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompatVerdict::Compatible => write!(f, "compatible"),
            CompatVerdict::Distinguished(reason) => write!(f, "distinguished: {}", reason),
        }
    }
}

/// Checks every implemented necessary condition for Γ_φ and Γ_ψ to have
/// isomorphic profinite completions: equal H1, equal determinant, equal
/// monodromy type, equal trace in the hyperbolic case, and equal
/// Betti-number profiles.
///
/// Since Γ_φ ≅ Γ_{φ^-1} (invert the stable letter) and inversion flips the
/// trace sign exactly when det φ = -1, the hyperbolic trace comparison for
/// determinant -1 is on absolute values.
pub fn completion_compatible(phi: &Mat2Z, psi: &Mat2Z) -> CompatVerdict {
    if h1(phi) != h1(psi) {
        return CompatVerdict::Distinguished(DistinguishReason::Homology);
    }
    if phi.det() != psi.det() {
        return CompatVerdict::Distinguished(DistinguishReason::Determinant);
    }
    let class_phi = classify(phi);
    let class_psi = classify(psi);
    if class_phi.kind() != class_psi.kind() {
        return CompatVerdict::Distinguished(DistinguishReason::ClassKind);
    }
    if class_phi.is_hyperbolic() {
        let same_trace = if phi.det().is_one() {
            phi.trace() == psi.trace()
        } else {
            phi.trace() == psi.trace() || phi.trace() == -psi.trace()
        };
        if !same_trace {
            return CompatVerdict::Distinguished(DistinguishReason::HyperbolicTrace);
        }
    }
    if b1_profile(phi, PROFILE_DEPTH) != b1_profile(psi, PROFILE_DEPTH) {
        return CompatVerdict::Distinguished(DistinguishReason::BettiProfile);
    }
    CompatVerdict::Compatible
}

/// The three monodromy classes whose mapping torus has H1 = Z: trace and
/// determinant (3, 1), (1, 1), (1, -1) give the figure-eight knot
/// complement, the trefoil knot complement, and the Gieseking manifold.
///
/// Determinant -1 classes come in inverse pairs with opposite traces and
/// isomorphic mapping tori; the Gieseking label follows the trace +1
/// normalization, so the inverse class (trace -1, determinant -1) reports
/// `NotB1One` even though its H1 is also Z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B1OneIdentity {
    FigureEight,
    Trefoil,
    Gieseking,
    NotB1One,
}

impl fmt::Display for B1OneIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            B1OneIdentity::FigureEight => "figure-eight",
            B1OneIdentity::Trefoil => "trefoil",
            B1OneIdentity::Gieseking => "gieseking",
            B1OneIdentity::NotB1One => "not-b1-one",
        };
        write!(f, "{}", text)
    }
}

pub fn identify_b1_one(phi: &Mat2Z) -> B1OneIdentity {
    let homology = h1(phi);
    if homology.b1 != 1 || !homology.torsion.is_empty() {
        return B1OneIdentity::NotB1One;
    }
    let tr = phi.trace();
    let det = phi.det();
    let (three, one) = (BigInt::from(3), BigInt::one());
    if tr == three && det == one {
        B1OneIdentity::FigureEight
    } else if tr == one && det == one {
        B1OneIdentity::Trefoil
    } else if tr == one && det == -&one {
        B1OneIdentity::Gieseking
    } else {
        B1OneIdentity::NotB1One
    }
}

/// Images of the two free generators under the elementary automorphisms
/// attached to the Nielsen letters, chosen so that the abelianized matrix
/// of the lift has the generator images in its columns:
///
/// * R fixes a and sends b to ba,
/// * L sends a to ab and fixes b,
/// * S swaps a and b,
/// * E fixes a and inverts b.
fn apply_generator(gen: NielsenGen, word: &Word) -> Word {
    let mut letters = Vec::with_capacity(2 * word.letters().len());
    for &l in word.letters() {
        let positive = l > 0;
        let idx = l.unsigned_abs() as i32;
        let image: &[i32] = match (gen, idx) {
            (NielsenGen::R, 1) => &[1],
            (NielsenGen::R, 2) => &[2, 1],
            (NielsenGen::L, 1) => &[1, 2],
            (NielsenGen::L, 2) => &[2],
            (NielsenGen::S, 1) => &[2],
            (NielsenGen::S, 2) => &[1],
            (NielsenGen::E, 1) => &[1],
            (NielsenGen::E, 2) => &[-2],
            _ => unreachable!("free group on two generators"),
        };
        if positive {
            letters.extend_from_slice(image);
        } else {
            letters.extend(image.iter().rev().map(|x| -x));
        }
    }
    Word::from_letters(letters)
}

/// Lifts φ to an automorphism of F2 along its Nielsen word (composing
/// right to left, so the word's product is the abelianized matrix) and
/// returns the images of a and b.
fn lift_to_automorphism(phi: &Mat2Z) -> (Word, Word) {
    let word = nielsen_decompose(phi);
    let mut image_a = Word::from_letters(vec![1]);
    let mut image_b = Word::from_letters(vec![2]);
    for gen in word.iter().rev() {
        image_a = apply_generator(*gen, &image_a);
        image_b = apply_generator(*gen, &image_b);
    }
    (image_a, image_b)
}

/// The mapping-torus presentation
/// `< a, b, t | t a t^-1 = φ*(a), t b t^-1 = φ*(b) >` on generators
/// a, b, t, with φ* the Nielsen lift of φ. Its abelianization equals
/// [`h1`] of φ.
pub fn presentation_of(phi: &Mat2Z) -> Presentation {
    let (image_a, image_b) = lift_to_automorphism(phi);
    let t = 3i32;
    let relator = |gen: i32, image: &Word| -> Word {
        let conj = Word::from_letters(vec![t, gen, -t]);
        conj.concat(&image.inverse())
    };
    Presentation::new(
        vec!["a".to_string(), "b".to_string(), "t".to_string()],
        vec![relator(1, &image_a), relator(2, &image_b)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::from_i64(a, b, c, d).unwrap()
    }

    fn fig8() -> Mat2Z {
        m(2, 1, 1, 1)
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1(&fig8()), HomologySummary::free(1));
        assert_eq!(h1(&Mat2Z::identity()), HomologySummary::free(3));
        let parabolic6 = h1(&m(1, 6, 0, 1));
        assert_eq!(parabolic6.b1, 2);
        assert_eq!(parabolic6.torsion, vec![BigInt::from(6)]);
        // trace 0, det -1: H1 = Z^2, matching the parabolic (1 1; 0 1)
        let swap = h1(&m(0, 1, 1, 0));
        assert_eq!(swap, HomologySummary::free(2));
    }

    #[test]
    fn torsion_order_matches_closed_form() {
        // |T| = |1 + det - tr| whenever b1 = 1
        for mat in [
            fig8(),
            m(1, 1, 1, 0),
            m(1, -1, 1, 0),
            m(0, -1, 1, 0),
            m(3, 1, 2, 1),
        ] {
            let summary = h1(&mat);
            let closed = (BigInt::one() + mat.det() - mat.trace()).abs();
            if summary.b1 == 1 {
                assert_eq!(summary.torsion_order(), closed, "{}", mat);
                assert!(!closed.is_zero());
            } else {
                assert!(closed.is_zero());
            }
        }
    }

    #[test]
    fn profile_examples() {
        assert_eq!(b1_profile(&fig8(), 4), vec![1, 1, 1, 1]);
        assert_eq!(b1_profile(&m(0, -1, 1, 0), 4), vec![1, 1, 1, 3]);
        assert_eq!(b1_profile(&m(1, 1, 0, 1), 3), vec![2, 2, 2]);
        assert_eq!(b1_profile(&m(0, 1, 1, 0), 2), vec![2, 3]);
    }

    #[test]
    fn fingerprint_examples() {
        let f = fingerprint(&fig8(), 12);
        assert_eq!(f.det, BigInt::one());
        assert_eq!(f.tr, BigInt::from(3));
        assert_eq!(f.h1, HomologySummary::free(1));
        assert_eq!(f.class, MatClass::Hyperbolic);
        assert!(f.b1_profile.iter().all(|&b| b == 1));

        let g = fingerprint(&m(1, 1, 1, 0), 12);
        assert_eq!(g.det, BigInt::from(-1));
        assert_eq!(g.tr, BigInt::one());
        assert_eq!(g.class, MatClass::Hyperbolic);
        assert_eq!(g.h1, HomologySummary::free(1));

        let s = fingerprint(&m(0, 1, 1, 0), 12);
        assert_eq!(s.class, MatClass::Elliptic { order: 2 });
        assert_eq!(s.h1.b1, 2);
        assert_eq!(s.b1_profile[1], 3);
    }

    #[test]
    fn compatible_examples() {
        // figure-eight vs trefoil monodromy: different type
        assert_eq!(
            completion_compatible(&fig8(), &m(1, -1, 1, 0)),
            CompatVerdict::Distinguished(DistinguishReason::ClassKind)
        );
        // conjugate monodromies are compatible
        let g = m(3, 2, 1, 1);
        assert!(completion_compatible(&fig8(), &fig8().conjugate_by(&g)).is_compatible());
        // the locally conjugate pair agrees on every implemented invariant
        let phi = m(188, 275, 121, 177);
        let psi = m(188, 11, 3025, 177);
        assert!(completion_compatible(&phi, &psi).is_compatible());
    }

    #[test]
    fn compatible_is_symmetric_and_respects_inversion() {
        let mats = [
            fig8(),
            m(1, 1, 1, 0),
            m(1, -1, 1, 0),
            m(1, 1, 0, 1),
            m(0, 1, 1, 0),
            m(5, 2, 2, 1),
        ];
        for a in &mats {
            assert!(completion_compatible(a, a).is_compatible());
            for b in &mats {
                let lr = completion_compatible(a, b);
                let rl = completion_compatible(b, a);
                assert_eq!(lr.is_compatible(), rl.is_compatible());
            }
            // Γ_φ ≅ Γ_{φ^-1}, so inverses must never be distinguished
            assert!(
                completion_compatible(a, &a.power(-1)).is_compatible(),
                "{} vs its inverse",
                a
            );
        }
    }

    #[test]
    fn identify_examples() {
        assert_eq!(identify_b1_one(&fig8()), B1OneIdentity::FigureEight);
        assert_eq!(identify_b1_one(&m(1, -1, 1, 0)), B1OneIdentity::Trefoil);
        assert_eq!(identify_b1_one(&m(1, 1, 1, 0)), B1OneIdentity::Gieseking);
        assert_eq!(identify_b1_one(&m(1, 1, 0, 1)), B1OneIdentity::NotB1One);
        // the inverse Gieseking class has H1 = Z but trace -1
        assert_eq!(identify_b1_one(&m(0, 1, 1, -1)), B1OneIdentity::NotB1One);
    }

    #[test]
    fn presentations_abelianize_to_h1() {
        let shear = presentation_of(&m(1, 1, 0, 1));
        assert_eq!(shear.to_text(), "a b t | t a T A, t b T A B");
        assert_eq!(shear.abelianization(), h1(&m(1, 1, 0, 1)));

        let trivial = presentation_of(&Mat2Z::identity());
        assert_eq!(trivial.to_text(), "a b t | t a T A, t b T B");
        assert_eq!(trivial.abelianization(), HomologySummary::free(3));

        let knot = presentation_of(&fig8());
        assert_eq!(knot.abelianization(), HomologySummary::free(1));
    }

    #[test]
    fn lift_abelianizes_to_the_matrix_columns() {
        for mat in [
            fig8(),
            m(1, -1, 1, 0),
            m(0, 1, 1, 0),
            m(-2, 1, 1, -1),
            m(3, -4, -2, 3),
        ] {
            let (image_a, image_b) = lift_to_automorphism(&mat);
            let sums_a = image_a.exponent_sums(2);
            let sums_b = image_b.exponent_sums(2);
            assert_eq!(BigInt::from(sums_a[0]), *mat.a11(), "{}", mat);
            assert_eq!(BigInt::from(sums_a[1]), *mat.a21(), "{}", mat);
            assert_eq!(BigInt::from(sums_b[0]), *mat.a12(), "{}", mat);
            assert_eq!(BigInt::from(sums_b[1]), *mat.a22(), "{}", mat);
        }
    }
}
