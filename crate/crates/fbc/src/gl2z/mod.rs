//! Algebra and conjugacy theory of GL(2,Z).
//!
//! The central type is [`Mat2Z`], a 2x2 integer matrix of determinant ±1 —
//! a monodromy acting on the rank-2 lattice. On top of it this module
//! provides the elliptic/parabolic/hyperbolic classification, exact powers,
//! a terminating decision procedure for GL(2,Z)-conjugacy (with witness),
//! conjugacy of reductions mod m, a census of conjugacy classes with fixed
//! trace and determinant, and a decomposition into the elementary Nielsen
//! generators used to lift a matrix to a free-group automorphism.
//!
//! Everything is exact integer arithmetic; there are no floating-point
//! eigenvalues anywhere.

mod census;
mod conjugacy;
mod forms;
mod nielsen;

pub use census::{enumerate_classes, CensusError};
pub use conjugacy::{is_conjugate_mod, is_conjugate_z, local_conjugacy, ModMatrix, ModulusError};
pub use nielsen::{evaluate_word, nielsen_decompose, word_to_string, NielsenGen};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// A 2x2 integer matrix with determinant ±1, i.e. an element of GL(2,Z).
///
/// Unimodularity is checked at construction, so every value of this type
/// is a valid group element and all operations on it are total.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat2Z {
    a11: BigInt,
    a12: BigInt,
    a21: BigInt,
    a22: BigInt,
}

/// Returned when a would-be matrix has determinant other than ±1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotUnimodular {
    pub det: BigInt,
}

impl fmt::Display for NotUnimodular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix is not unimodular: determinant {}", self.det)
    }
}

impl std::error::Error for NotUnimodular {}

impl Mat2Z {
    pub fn new(a11: BigInt, a12: BigInt, a21: BigInt, a22: BigInt) -> Result<Self, NotUnimodular> {
        let det = &a11 * &a22 - &a12 * &a21;
        if det.abs() != BigInt::one() {
            return Err(NotUnimodular { det });
        }
        Ok(Mat2Z { a11, a12, a21, a22 })
    }

    pub fn from_i64(a11: i64, a12: i64, a21: i64, a22: i64) -> Result<Self, NotUnimodular> {
        Mat2Z::new(
            BigInt::from(a11),
            BigInt::from(a12),
            BigInt::from(a21),
            BigInt::from(a22),
        )
    }

    pub fn identity() -> Self {
        Mat2Z::from_i64(1, 0, 0, 1).unwrap()
    }

    pub fn a11(&self) -> &BigInt {
        &self.a11
    }

    pub fn a12(&self) -> &BigInt {
        &self.a12
    }

    pub fn a21(&self) -> &BigInt {
        &self.a21
    }

    pub fn a22(&self) -> &BigInt {
        &self.a22
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn trace(&self) -> BigInt {
        &self.a11 + &self.a22
    }

    pub fn mul(&self, other: &Mat2Z) -> Mat2Z {
        Mat2Z {
            a11: &self.a11 * &other.a11 + &self.a12 * &other.a21,
            a12: &self.a11 * &other.a12 + &self.a12 * &other.a22,
            a21: &self.a21 * &other.a11 + &self.a22 * &other.a21,
            a22: &self.a21 * &other.a12 + &self.a22 * &other.a22,
        }
    }

    /// Exact inverse: the adjugate divided by the determinant, which is ±1.
    pub fn inverse(&self) -> Mat2Z {
        let det = self.det();
        let adj = Mat2Z {
            a11: self.a22.clone(),
            a12: -self.a12.clone(),
            a21: -self.a21.clone(),
            a22: self.a11.clone(),
        };
        if det.is_one() {
            adj
        } else {
            Mat2Z {
                a11: -adj.a11,
                a12: -adj.a12,
                a21: -adj.a21,
                a22: -adj.a22,
            }
        }
    }

    /// `self^r` for any integer r; `r = 0` gives the identity and negative
    /// exponents use the exact inverse.
    pub fn power(&self, r: i64) -> Mat2Z {
        let base = if r < 0 { self.inverse() } else { self.clone() };
        let mut e = r.unsigned_abs();
        let mut acc = Mat2Z::identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// `g * self * g^-1`.
    pub fn conjugate_by(&self, g: &Mat2Z) -> Mat2Z {
        g.mul(self).mul(&g.inverse())
    }

    pub fn max_abs_entry(&self) -> BigInt {
        let mut m = self.a11.abs();
        for e in [&self.a12, &self.a21, &self.a22] {
            let a = e.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        self.a11.is_one() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_one()
    }

    fn is_minus_identity(&self) -> bool {
        let minus_one = -BigInt::one();
        self.a11 == minus_one && self.a12.is_zero() && self.a21.is_zero() && self.a22 == minus_one
    }

    /// The matrix `self - I` as a relation matrix for cokernel computations.
    pub fn sub_identity(&self) -> crate::zlinalg::IntMatrix {
        crate::zlinalg::IntMatrix::new(
            2,
            2,
            vec![
                &self.a11 - BigInt::one(),
                self.a12.clone(),
                self.a21.clone(),
                &self.a22 - BigInt::one(),
            ],
        )
    }

    pub(crate) fn entries(&self) -> [&BigInt; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }
}

impl fmt::Debug for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2Z[{}]", self)
    }
}

/// Text format `a11,a12;a21,a22` — the exact format accepted by `FromStr`.
impl fmt::Display for Mat2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a11, self.a12, self.a21, self.a22)
    }
}

/// Error from parsing the `a11,a12;a21,a22` matrix format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseMatrixError {
    Syntax(String),
    NotUnimodular(BigInt),
}

impl fmt::Display for ParseMatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseMatrixError::Syntax(msg) => write!(f, "bad matrix syntax: {}", msg),
            ParseMatrixError::NotUnimodular(det) => {
                write!(f, "matrix is not unimodular: determinant {}", det)
            }
        }
    }
}

impl std::error::Error for ParseMatrixError {}

impl FromStr for Mat2Z {
    type Err = ParseMatrixError;

    /// Parses `a11,a12;a21,a22` with optional spaces around the entries.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(ParseMatrixError::Syntax(format!(
                "expected 2 rows separated by ';', found {}",
                rows.len()
            )));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(ParseMatrixError::Syntax(format!(
                    "expected 2 entries separated by ',' in row '{}'",
                    row.trim()
                )));
            }
            for cell in cells {
                let cell = cell.trim();
                let value = BigInt::from_str(cell).map_err(|_| {
                    ParseMatrixError::Syntax(format!("'{}' is not an integer", cell))
                })?;
                entries.push(value);
            }
        }
        let mut it = entries.into_iter();
        let (a11, a12, a21, a22) = (
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        );
        Mat2Z::new(a11, a12, a21, a22).map_err(|e| ParseMatrixError::NotUnimodular(e.det))
    }
}

/// Trichotomy for elements of GL(2,Z): finite order, infinite order with
/// eigenvalues on the unit circle, or an eigenvalue of absolute value > 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatClass {
    Elliptic { order: u32 },
    Parabolic,
    Hyperbolic,
}

impl MatClass {
    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, MatClass::Hyperbolic)
    }

    /// The coarse kind, ignoring elliptic orders.
    pub fn kind(&self) -> &'static str {
        match self {
            MatClass::Elliptic { .. } => "elliptic",
            MatClass::Parabolic => "parabolic",
            MatClass::Hyperbolic => "hyperbolic",
        }
    }
}

impl fmt::Display for MatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatClass::Elliptic { order } => write!(f, "elliptic(order {})", order),
            MatClass::Parabolic => write!(f, "parabolic"),
            MatClass::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

/// Classifies a monodromy.
///
/// For determinant 1 the split is by trace: |tr| > 2 hyperbolic, |tr| <= 1
/// finite order, |tr| = 2 parabolic except for ±I, which have finite order
/// (1 and 2) and are classified elliptic. For determinant -1 the
/// characteristic polynomial is x^2 - tx - 1, so trace 0 squares to the
/// identity (elliptic of order 2) and any nonzero trace gives a real
/// eigenvalue of absolute value > 1 (hyperbolic).
pub fn classify(m: &Mat2Z) -> MatClass {
    let det = m.det();
    let tr = m.trace();
    let two = BigInt::from(2);
    if det.is_one() {
        if tr.abs() > two {
            MatClass::Hyperbolic
        } else if tr.abs() == two {
            if m.is_identity() || m.is_minus_identity() {
                MatClass::Elliptic {
                    order: elliptic_order(m),
                }
            } else {
                MatClass::Parabolic
            }
        } else {
            MatClass::Elliptic {
                order: elliptic_order(m),
            }
        }
    } else if tr.is_zero() {
        MatClass::Elliptic {
            order: elliptic_order(m),
        }
    } else {
        MatClass::Hyperbolic
    }
}

/// Least r >= 1 with m^r = I. Orders in GL(2,Z) divide 12, so the loop is
/// bounded; panics if the input has infinite order.
fn elliptic_order(m: &Mat2Z) -> u32 {
    let mut acc = m.clone();
    for r in 1..=12u32 {
        if acc.is_identity() {
            return r;
        }
        acc = acc.mul(m);
    }
    panic!("element of infinite order passed to elliptic_order");
}

/// Outcome of an integral conjugacy decision, with a verifying conjugator
/// when the answer is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjVerdict {
    pub conjugate: bool,
    pub witness: Option<Mat2Z>,
}

impl ConjVerdict {
    pub(crate) fn yes(witness: Mat2Z) -> Self {
        ConjVerdict {
            conjugate: true,
            witness: Some(witness),
        }
    }

    pub(crate) fn no() -> Self {
        ConjVerdict {
            conjugate: false,
            witness: None,
        }
    }
}

/// Result of testing conjugacy in GL(2,Z/m) for every modulus m in a range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalConjReport {
    pub modulus_bound: u64,
    pub failures: Vec<u64>,
    pub all_pass: bool,
}
