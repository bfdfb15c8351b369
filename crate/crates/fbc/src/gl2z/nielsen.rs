//! Decomposition of GL(2,Z) elements into elementary Nielsen generators.
//!
//! The four generators are
//!
//! ```text
//! R = (1 1; 0 1)   L = (1 0; 1 1)   S = (0 1; 1 0)   E = (1 0; 0 -1)
//! ```
//!
//! Every unimodular matrix is a product of these (as a monoid: negative
//! powers of R and L are rewritten via E R^k E = R^-k and E L^k E = L^-k).
//! Matrices with nonnegative entries decompose by Stern-Brocot peeling —
//! subtract the dominated row from the dominating one — which reproduces
//! the continued-fraction expansion; the general case runs a Euclidean
//! reduction on the first column.

use super::Mat2Z;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

/// One of the elementary generators R, L, S, E.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NielsenGen {
    R,
    L,
    S,
    E,
}

impl NielsenGen {
    pub fn matrix(&self) -> Mat2Z {
        match self {
            NielsenGen::R => Mat2Z::from_i64(1, 1, 0, 1).unwrap(),
            NielsenGen::L => Mat2Z::from_i64(1, 0, 1, 1).unwrap(),
            NielsenGen::S => Mat2Z::from_i64(0, 1, 1, 0).unwrap(),
            NielsenGen::E => Mat2Z::from_i64(1, 0, 0, -1).unwrap(),
        }
    }
}

impl fmt::Display for NielsenGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            NielsenGen::R => 'R',
            NielsenGen::L => 'L',
            NielsenGen::S => 'S',
            NielsenGen::E => 'E',
        };
        write!(f, "{}", c)
    }
}

/// Formats a word as space-separated letters, e.g. `R L`.
pub fn word_to_string(word: &[NielsenGen]) -> String {
    word.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Multiplies out a generator word (left to right).
pub fn evaluate_word(word: &[NielsenGen]) -> Mat2Z {
    word.iter()
        .fold(Mat2Z::identity(), |acc, g| acc.mul(&g.matrix()))
}

/// Left-peeled factors accumulated during reduction; `Rpow(q)` stands for
/// R^q with q of either sign.
enum Factor {
    Rpow(BigInt),
    Lpow(BigInt),
    S,
    E,
}

/// Writes `m` as a word in {R, L, S, E} whose product equals `m` exactly.
pub fn nielsen_decompose(m: &Mat2Z) -> Vec<NielsenGen> {
    let word = if is_nonneg(m) {
        stern_brocot(m)
    } else {
        let factors = euclid_first_column(m);
        expand(factors)
    };
    cancel_involutions(word)
}

fn is_nonneg(m: &Mat2Z) -> bool {
    m.entries().iter().all(|e| !e.is_negative())
}

/// Peeling for matrices with nonnegative entries: the unimodularity forces
/// one row to dominate the other componentwise until the matrix is I or S.
fn stern_brocot(m: &Mat2Z) -> Vec<NielsenGen> {
    let mut out = Vec::new();
    let mut a = m.clone();
    loop {
        if a.is_identity() {
            return out;
        }
        if a == NielsenGen::S.matrix() {
            out.push(NielsenGen::S);
            return out;
        }
        let row1_dominates = a.a11() >= a.a21() && a.a12() >= a.a22();
        if row1_dominates {
            out.push(NielsenGen::R);
            // R^-1 * a : row1 -= row2
            a = Mat2Z::new(
                a.a11() - a.a21(),
                a.a12() - a.a22(),
                a.a21().clone(),
                a.a22().clone(),
            )
            .expect("unimodularity is preserved by row operations");
        } else {
            debug_assert!(a.a21() >= a.a11() && a.a22() >= a.a12());
            out.push(NielsenGen::L);
            // L^-1 * a : row2 -= row1
            a = Mat2Z::new(
                a.a11().clone(),
                a.a12().clone(),
                a.a21() - a.a11(),
                a.a22() - a.a12(),
            )
            .expect("unimodularity is preserved by row operations");
        }
    }
}

/// Rounded division used by the Euclidean phase, |a - q b| <= |b| / 2.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = if b.is_negative() {
        (-a, -b)
    } else {
        (a.clone(), b.clone())
    };
    (BigInt::from(2) * &a + &b).div_floor(&(BigInt::from(2) * &b))
}

/// Euclidean reduction of the first column, then closed forms for the
/// resulting upper-triangular matrix.
fn euclid_first_column(m: &Mat2Z) -> Vec<Factor> {
    let mut factors = Vec::new();
    let mut a = m.clone();
    while !a.a21().is_zero() {
        if a.a11().abs() >= a.a21().abs() {
            let q = div_nearest(a.a11(), a.a21());
            // m = R^q * (R^-q m); row1 -= q * row2
            a = Mat2Z::new(
                a.a11() - &q * a.a21(),
                a.a12() - &q * a.a22(),
                a.a21().clone(),
                a.a22().clone(),
            )
            .unwrap();
            factors.push(Factor::Rpow(q));
        } else if a.a11().is_zero() {
            factors.push(Factor::S);
            a = NielsenGen::S.matrix().mul(&a);
        } else {
            let q = div_nearest(a.a21(), a.a11());
            a = Mat2Z::new(
                a.a11().clone(),
                a.a12().clone(),
                a.a21() - &q * a.a11(),
                a.a22() - &q * a.a12(),
            )
            .unwrap();
            factors.push(Factor::Lpow(q));
        }
    }
    // a = (e b; 0 f) with e*f = ±1
    let b = a.a12().clone();
    let e_pos = a.a11().is_positive();
    let f_pos = a.a22().is_positive();
    match (e_pos, f_pos) {
        (true, true) => factors.push(Factor::Rpow(b)),
        (true, false) => {
            // (1 b; 0 -1) = R^-b E
            factors.push(Factor::Rpow(-b));
            factors.push(Factor::E);
        }
        (false, true) => {
            // (-1 b; 0 1) = S E S R^-b
            factors.push(Factor::S);
            factors.push(Factor::E);
            factors.push(Factor::S);
            factors.push(Factor::Rpow(-b));
        }
        (false, false) => {
            // (-1 b; 0 -1) = S E S E R^-b
            factors.push(Factor::S);
            factors.push(Factor::E);
            factors.push(Factor::S);
            factors.push(Factor::E);
            factors.push(Factor::Rpow(-b));
        }
    }
    factors
}

fn expand(factors: Vec<Factor>) -> Vec<NielsenGen> {
    let mut out = Vec::new();
    for f in factors {
        match f {
            Factor::S => out.push(NielsenGen::S),
            Factor::E => out.push(NielsenGen::E),
            Factor::Rpow(q) => push_power(&mut out, NielsenGen::R, q),
            Factor::Lpow(q) => push_power(&mut out, NielsenGen::L, q),
        }
    }
    out
}

/// R^q for q >= 0 is q letters; R^-q = E R^q E (same for L).
fn push_power(out: &mut Vec<NielsenGen>, gen: NielsenGen, q: BigInt) {
    if q.is_zero() {
        return;
    }
    let negative = q.is_negative();
    if negative {
        out.push(NielsenGen::E);
    }
    let mut count = q.abs();
    while count.is_positive() {
        out.push(gen);
        count -= 1;
    }
    if negative {
        out.push(NielsenGen::E);
    }
}

/// Drops adjacent S S and E E pairs.
fn cancel_involutions(word: Vec<NielsenGen>) -> Vec<NielsenGen> {
    let mut out: Vec<NielsenGen> = Vec::with_capacity(word.len());
    for g in word {
        if matches!(g, NielsenGen::S | NielsenGen::E) && out.last() == Some(&g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2Z {
        Mat2Z::from_i64(a, b, c, d).unwrap()
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(word_to_string(&nielsen_decompose(&m(1, 1, 0, 1))), "R");
        assert_eq!(word_to_string(&nielsen_decompose(&m(0, 1, 1, 0))), "S");
        assert_eq!(word_to_string(&nielsen_decompose(&m(2, 1, 1, 1))), "R L");
        assert_eq!(word_to_string(&nielsen_decompose(&Mat2Z::identity())), "");
    }

    #[test]
    fn product_recovers_input() {
        let cases = [
            m(2, 1, 1, 1),
            m(1, -1, 1, 0),
            m(1, 1, 1, 0),
            m(0, -1, 1, 0),
            m(1, 0, -1, 1),
            m(-1, 0, 0, -1),
            m(-1, 0, 0, 1),
            m(1, 0, 0, -1),
            m(-3, -1, 7, 2),
            m(188, 275, 121, 177),
            m(188, 11, 3025, 177),
            m(-17, 12, 10, -7),
        ];
        for mat in cases {
            let word = nielsen_decompose(&mat);
            assert_eq!(
                evaluate_word(&word),
                mat,
                "word {:?}",
                word_to_string(&word)
            );
        }
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(NielsenGen::R.matrix(), m(1, 1, 0, 1));
        assert_eq!(NielsenGen::L.matrix(), m(1, 0, 1, 1));
        assert_eq!(NielsenGen::S.matrix(), m(0, 1, 1, 0));
        assert_eq!(NielsenGen::E.matrix(), m(1, 0, 0, -1));
    }
}
