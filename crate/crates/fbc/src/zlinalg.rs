//! Exact integer linear algebra: Smith normal form with unimodular
//! transform witnesses.
//!
//! The Smith normal form of an integer matrix `a` is a diagonal matrix `d`
//! together with unimodular `u`, `v` such that `u * a * v = d`, the diagonal
//! entries are nonnegative, and each divides the next (zeros trail). The
//! nontrivial diagonal entries are the invariant factors of the abelian
//! group presented by `a`, which is all this crate ever needs them for:
//! cokernels of relation matrices.
//!
//! All arithmetic is exact over `BigInt`; intermediate entries during
//! elimination can grow well past machine words even for small inputs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense row-major matrix of unbounded integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries. Panics if the entry count
    /// does not match `rows * cols` or either dimension is zero.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        assert!(r >= 1);
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let lhs = self.at(i, k);
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = lhs * other.at(k, j);
                    *out.at_mut(i, j) += add;
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut w = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if w.at(k, k).is_zero() {
                let Some(pivot_row) = (k + 1..n).find(|&i| !w.at(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                w.swap_rows(k, pivot_row);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                    *w.at_mut(i, j) = num / &prev;
                }
                *w.at_mut(i, k) = BigInt::zero();
            }
            prev = w.at(k, k).clone();
        }
        sign * w.at(n - 1, n - 1).clone()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += c * row_j
    fn row_add_multiple(&mut self, i: usize, j: usize, c: &BigInt) {
        for col in 0..self.cols {
            let add = c * self.at(j, col);
            *self.at_mut(i, col) += add;
        }
    }

    /// col_i += c * col_j
    fn col_add_multiple(&mut self, i: usize, j: usize, c: &BigInt) {
        for row in 0..self.rows {
            let add = c * self.at(row, j);
            *self.at_mut(row, i) += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for col in 0..self.cols {
            let v = -self.at(i, col).clone();
            *self.at_mut(i, col) = v;
        }
    }
}

/// Smith normal form `u * a * v = d` with unimodular witnesses.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The diagonal of `d` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Diagonalizes `a` over the integers. The pivot at each step is the
/// remaining entry of minimal nonzero absolute value (first such in
/// row-major order), which bounds entry growth and makes `u`, `v`
/// reproducible.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let steps = a.rows().min(a.cols());
    for k in 0..steps {
        if !place_pivot(&mut d, &mut u, &mut v, k) {
            break; // remaining submatrix is zero
        }
        'fix: loop {
            loop {
                let col_changed = clear_pivot_col(&mut d, &mut u, k);
                let row_changed = clear_pivot_row(&mut d, &mut v, k);
                if !col_changed && !row_changed {
                    break;
                }
            }
            // The pivot must divide every remaining entry so that the
            // diagonal ends up in divisibility order.
            for i in k + 1..d.rows() {
                for j in k + 1..d.cols() {
                    if !(d.at(i, j) % d.at(k, k)).is_zero() {
                        let one = BigInt::one();
                        d.row_add_multiple(k, i, &one);
                        u.row_add_multiple(k, i, &one);
                        continue 'fix;
                    }
                }
            }
            break;
        }
    }
    for k in 0..steps {
        if d.at(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SnfResult { d, u, v }
}

/// Moves the minimal-absolute-value nonzero entry of `d[k.., k..]` to
/// position (k, k). Returns false if the submatrix is zero.
fn place_pivot(d: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, k: usize) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            if d.at(i, j).is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if d.at(i, j).abs() < d.at(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    let Some((pi, pj)) = best else { return false };
    d.swap_rows(k, pi);
    u.swap_rows(k, pi);
    d.swap_cols(k, pj);
    v.swap_cols(k, pj);
    true
}

fn clear_pivot_col(d: &mut IntMatrix, u: &mut IntMatrix, k: usize) -> bool {
    let mut changed = false;
    for i in k + 1..d.rows() {
        while !d.at(i, k).is_zero() {
            changed = true;
            let q = d.at(i, k) / d.at(k, k); // truncated, |rem| < |pivot|
            if !q.is_zero() {
                let neg_q = -q;
                d.row_add_multiple(i, k, &neg_q);
                u.row_add_multiple(i, k, &neg_q);
            }
            if d.at(i, k).is_zero() {
                break;
            }
            d.swap_rows(i, k);
            u.swap_rows(i, k);
        }
    }
    changed
}

fn clear_pivot_row(d: &mut IntMatrix, v: &mut IntMatrix, k: usize) -> bool {
    let mut changed = false;
    for j in k + 1..d.cols() {
        while !d.at(k, j).is_zero() {
            changed = true;
            let q = d.at(k, j) / d.at(k, k);
            if !q.is_zero() {
                let neg_q = -q;
                d.col_add_multiple(j, k, &neg_q);
                v.col_add_multiple(j, k, &neg_q);
            }
            if d.at(k, j).is_zero() {
                break;
            }
            d.swap_cols(j, k);
            v.swap_cols(j, k);
        }
    }
    changed
}

/// Invariants of a finitely generated abelian group: free rank and the
/// invariant factors greater than one, in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologySummary {
    pub b1: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologySummary {
    pub fn free(b1: usize) -> Self {
        HomologySummary {
            b1,
            torsion: Vec::new(),
        }
    }

    /// Order of the torsion subgroup (1 when torsion-free).
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, f| acc * f)
    }
}

impl std::fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.b1 {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{}", b)),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{}", t));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Invariants of `Z^rows / im(a)` where `a` maps `Z^cols -> Z^rows`:
/// free rank of the cokernel and its invariant factors `> 1`.
pub fn cokernel_invariants(a: &IntMatrix) -> HomologySummary {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let one = BigInt::one();
    let torsion = diag.into_iter().filter(|x| *x > one).collect();
    HomologySummary {
        b1: a.rows() - rank,
        torsion,
    }
}
