//! Deciding whether an integral binary quadratic form represents +1 or -1.
//!
//! A form (a, b, c) stands for q(x, y) = a x^2 + b xy + c y^2 with
//! discriminant D = b^2 - 4ac. The conjugacy decision reduces to the
//! question "does q take the value 1 or -1", which splits by discriminant:
//!
//! * D < 0: definite — only finitely many candidate (x, y), found by an
//!   exact bounded search.
//! * D = 0: 4a q = (2ax + by)^2 degenerates to a linear condition.
//! * D > 0 a square: q factors into integer linear forms; a divisor sweep.
//! * D > 0 not a square: the Gauss reduction cycle. A value m with
//!   |m| < sqrt(D)/2 is represented primitively iff it occurs as a leading
//!   coefficient in the cycle of reduced forms equivalent to q; ±1 always
//!   qualifies. The SL(2,Z) substitution is tracked through the reduction
//!   so the witness (x, y) comes out exactly.
//!
//! Everything is integer arithmetic; square roots are integer floor roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Finds (x, y) with q(x, y) = a x^2 + b xy + c y^2 in {1, -1}, if any.
pub(crate) fn represent_unit(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<(BigInt, BigInt)> {
    let content = a.abs().gcd(&b.abs()).gcd(&c.abs());
    if content != BigInt::one() {
        // Includes the zero form: every value of q is divisible by content.
        return None;
    }
    let delta: BigInt = b * b - BigInt::from(4) * a * c;
    let found = if delta.is_negative() {
        definite_search(a, b, c, &delta)
    } else if delta.is_zero() {
        degenerate_search(a, b, c)
    } else {
        let s = delta.sqrt();
        if &s * &s == delta {
            split_search(a, b, c, &s)
        } else {
            cycle_search(a, b, c, &delta, &s)
        }
    };
    if let Some((x, y)) = &found {
        let v = eval(a, b, c, x, y);
        assert!(v.abs().is_one(), "witness does not evaluate to a unit");
    }
    found
}

pub(crate) fn eval(a: &BigInt, b: &BigInt, c: &BigInt, x: &BigInt, y: &BigInt) -> BigInt {
    a * x * x + b * x * y + c * y * y
}

/// Definite case. With fa > 0 and q = 1: 4 fa q = (2 fa x + fb y)^2 + |D| y^2,
/// so |D| y^2 <= 4 fa bounds y; x comes from an exact quadratic solve.
fn definite_search(a: &BigInt, b: &BigInt, c: &BigInt, delta: &BigInt) -> Option<(BigInt, BigInt)> {
    debug_assert!(!a.is_zero(), "definite forms have a != 0");
    let (fa, fb, fc) = if a.is_positive() {
        (a.clone(), b.clone(), c.clone())
    } else {
        (-a, -b, -c)
    };
    let abs_delta = delta.abs();
    let four_fa = BigInt::from(4) * &fa;
    let mut y = BigInt::zero();
    while &abs_delta * &y * &y <= four_fa {
        // fa x^2 + (fb y) x + (fc y^2 - 1) = 0
        let disc = &fb * &fb * &y * &y - BigInt::from(4) * &fa * (&fc * &y * &y - BigInt::one());
        if !disc.is_negative() {
            let root = disc.sqrt();
            if &root * &root == disc {
                for r in [root.clone(), -root] {
                    let num = -(&fb * &y) + r;
                    let den = BigInt::from(2) * &fa;
                    if (&num % &den).is_zero() {
                        return Some((num / den, y));
                    }
                }
            }
        }
        y += 1;
    }
    None
}

/// D = 0: either q = c y^2 (when a = 0, forcing b = 0) or
/// 4a q = (2ax + by)^2, which pins |a| to a perfect square and reduces to a
/// linear Diophantine equation.
fn degenerate_search(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<(BigInt, BigInt)> {
    if a.is_zero() {
        debug_assert!(b.is_zero());
        if c.abs().is_one() {
            return Some((BigInt::zero(), BigInt::one()));
        }
        return None;
    }
    let m = a.abs().sqrt();
    if &m * &m != a.abs() {
        return None;
    }
    // 2a x + b y = 2m
    let (g, x0, y0) = extended_gcd(&(BigInt::from(2) * a), b);
    let target = BigInt::from(2) * &m;
    if !(&target % &g).is_zero() {
        return None;
    }
    let k = target / g;
    Some((x0 * &k, y0 * k))
}

/// D = s^2 > 0: (2ax + (b-s)y)(2ax + (b+s)y) = 4a q when a != 0, so a unit
/// value forces a factorization of ±4a; when a = 0, q = y (bx + cy).
fn split_search(a: &BigInt, b: &BigInt, c: &BigInt, s: &BigInt) -> Option<(BigInt, BigInt)> {
    let one = BigInt::one();
    if a.is_zero() {
        // b != 0 since D = b^2 > 0
        for y in [one.clone(), -&one] {
            for eps in [one.clone(), -&one] {
                // y (bx + cy) = eps  =>  bx = y*eps - c*y... with y^2 = 1:
                // bx + cy = eps / y = eps * y
                let num = &eps * &y - c * &y;
                if (&num % b).is_zero() {
                    return Some((num / b, y.clone()));
                }
            }
        }
        return None;
    }
    let two_s = BigInt::from(2) * s;
    let two_a = BigInt::from(2) * a;
    for eps in [one.clone(), -one] {
        let n = BigInt::from(4) * a * &eps;
        for u in signed_divisors(&n) {
            let v = &n / &u;
            let diff = &v - &u;
            if !(&diff % &two_s).is_zero() {
                continue;
            }
            let y = diff / &two_s;
            let num = &u - (b - s) * &y;
            if !(&num % &two_a).is_zero() {
                continue;
            }
            let x = num / &two_a;
            if eval(a, b, c, &x, &y).abs().is_one() {
                return Some((x, y));
            }
        }
    }
    None
}

/// All divisors of |n| with both signs, |n| > 0, in a deterministic order.
fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    let mut out = Vec::with_capacity(2 * (small.len() + large.len()));
    for d in small.into_iter().chain(large.into_iter().rev()) {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

/// gcd(a, b) = x a + y b with gcd > 0; b may be zero but not both.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let x = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x);
        let y = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// A form together with the SL(2,Z) substitution taking the original form
/// to it: current = original ∘ T.
struct TrackedForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    t11: BigInt,
    t12: BigInt,
    t21: BigInt,
    t22: BigInt,
}

impl TrackedForm {
    /// Leading coefficient is current(1, 0) = original(t11, t21).
    fn witness_if_unit(&self) -> Option<(BigInt, BigInt)> {
        if self.a.abs().is_one() {
            Some((self.t11.clone(), self.t21.clone()))
        } else {
            None
        }
    }

    /// Trailing coefficient is current(0, 1) = original(t12, t22).
    fn witness_if_trailing_unit(&self) -> Option<(BigInt, BigInt)> {
        if self.c.abs().is_one() {
            Some((self.t12.clone(), self.t22.clone()))
        } else {
            None
        }
    }

    /// One step (a, b, c) -> (c, b', c') via the substitution
    /// (x, y) -> (-y, x + m y), where b' = 2cm - b lies in the window
    /// dictated by the reduction rule and c' = (b'^2 - D)/(4c).
    fn rho(&mut self, delta: &BigInt, s: &BigInt) {
        debug_assert!(!self.c.is_zero(), "rho needs c != 0 (nonsquare D)");
        let two_abs_c = BigInt::from(2) * self.c.abs();
        let b_new = if self.c.abs() > *s {
            // window (-|c|, |c|]
            into_window(&-&self.b, &two_abs_c, &-self.c.abs())
        } else {
            // window (s - 2|c|, s]
            into_window(&-&self.b, &two_abs_c, &(s - &two_abs_c))
        };
        let m = (&b_new + &self.b) / (BigInt::from(2) * &self.c);
        let c_new = (&b_new * &b_new - delta) / (BigInt::from(4) * &self.c);
        let a_new = std::mem::replace(&mut self.c, c_new);
        self.a = a_new;
        self.b = b_new;
        // T <- T * (0 -1; 1 m)
        let t11 = self.t12.clone();
        let t12 = -&self.t11 + &self.t12 * &m;
        let t21 = self.t22.clone();
        let t22 = -&self.t21 + &self.t22 * &m;
        self.t11 = t11;
        self.t12 = t12;
        self.t21 = t21;
        self.t22 = t22;
    }

    fn triple(&self) -> (BigInt, BigInt, BigInt) {
        (self.a.clone(), self.b.clone(), self.c.clone())
    }
}

/// Unique value congruent to `v` mod `modulus` in (lo, lo + modulus].
fn into_window(v: &BigInt, modulus: &BigInt, lo: &BigInt) -> BigInt {
    let shifted = v - (lo + BigInt::one());
    shifted.mod_floor(modulus) + lo + BigInt::one()
}

/// Reduced in the indefinite sense: 0 < b < sqrt(D) and
/// sqrt(D) - 2|a| < b, expressed with the integer floor root s.
fn is_reduced(a: &BigInt, b: &BigInt, s: &BigInt) -> bool {
    b.is_positive()
        && b <= s
        && b + BigInt::from(2) * a.abs() > *s
        && BigInt::from(2) * a.abs() - b <= *s
}

/// Indefinite nonsquare discriminant: reduce into the cycle, then walk the
/// cycle once, checking leading coefficients for ±1.
fn cycle_search(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    delta: &BigInt,
    s: &BigInt,
) -> Option<(BigInt, BigInt)> {
    let mut f = TrackedForm {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        t11: BigInt::one(),
        t12: BigInt::zero(),
        t21: BigInt::zero(),
        t22: BigInt::one(),
    };
    if let Some(w) = f.witness_if_unit() {
        return Some(w);
    }
    if let Some(w) = f.witness_if_trailing_unit() {
        return Some(w);
    }
    // reduction phase
    let mut guard = 0usize;
    while !is_reduced(&f.a, &f.b, s) {
        f.rho(delta, s);
        if let Some(w) = f.witness_if_unit() {
            return Some(w);
        }
        guard += 1;
        assert!(guard < 100_000, "reduction failed to terminate");
    }
    // cycle phase
    let start = f.triple();
    let mut guard = 0usize;
    loop {
        f.rho(delta, s);
        if let Some(w) = f.witness_if_unit() {
            return Some(w);
        }
        if f.triple() == start {
            return None;
        }
        guard += 1;
        assert!(guard < 10_000_000, "cycle failed to close");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(a: i64, b: i64, c: i64) -> Option<(BigInt, BigInt)> {
        represent_unit(&BigInt::from(a), &BigInt::from(b), &BigInt::from(c))
    }

    fn value(a: i64, b: i64, c: i64, w: &(BigInt, BigInt)) -> i64 {
        let v = eval(
            &BigInt::from(a),
            &BigInt::from(b),
            &BigInt::from(c),
            &w.0,
            &w.1,
        );
        i64::try_from(v).unwrap()
    }

    #[test]
    fn pell_forms() {
        // x^2 - 2y^2 takes both 1 and -1
        let w = rep(1, 0, -2).unwrap();
        assert_eq!(value(1, 0, -2, &w).abs(), 1);
        // x^2 - 3y^2 takes 1; 2x^2 - 3y^2 takes -1 at (1, 1)
        let w = rep(1, 0, -3).unwrap();
        assert_eq!(value(1, 0, -3, &w).abs(), 1);
        let w = rep(2, 0, -3).unwrap();
        assert_eq!(value(2, 0, -3, &w).abs(), 1);
    }

    #[test]
    fn indefinite_non_representing() {
        // 3x^2 - 5y^2 = ±1 has no solutions (mod 3: -5y^2 = ±1 means
        // y^2 = ±1 mod 3, so y^2 = 1, giving ∓... exhaustive small check
        // confirms none; the cycle must come back empty).
        assert_eq!(rep(3, 0, -5), None);
        for x in -30i64..=30 {
            for y in -30i64..=30 {
                assert_ne!((3 * x * x - 5 * y * y).abs(), 1, "({}, {})", x, y);
            }
        }
    }

    #[test]
    fn definite_forms() {
        let w = rep(1, 0, 1).unwrap();
        assert_eq!(value(1, 0, 1, &w), 1);
        assert_eq!(rep(2, 0, 3), None);
        let w = rep(-1, 0, -2).unwrap();
        assert_eq!(value(-1, 0, -2, &w), -1);
        assert_eq!(rep(-2, -1, -3), None);
    }

    #[test]
    fn degenerate_forms() {
        // -x^2 (a = -1, b = 0, c = 0): represents -1
        let w = rep(-1, 0, 0).unwrap();
        assert_eq!(value(-1, 0, 0, &w), -1);
        // 2x^2 with content 2... content check: (2, 0, 0) has content 2 -> None
        assert_eq!(rep(2, 0, 0), None);
        // (x + y)^2 = x^2 + 2xy + y^2
        let w = rep(1, 2, 1).unwrap();
        assert_eq!(value(1, 2, 1, &w), 1);
        // y^2 only: (0, 0, 1)
        let w = rep(0, 0, 1).unwrap();
        assert_eq!(value(0, 0, 1, &w), 1);
    }

    #[test]
    fn split_discriminant_forms() {
        // x^2 - y^2, D = 4
        let w = rep(1, 0, -1).unwrap();
        assert_eq!(value(1, 0, -1, &w).abs(), 1);
        // 2x^2 + xy - y^2? D = 1 + 8 = 9; q(0,1) = -1
        let w = rep(2, 1, -1).unwrap();
        assert_eq!(value(2, 1, -1, &w).abs(), 1);
        // xy (a = 0, b = 1, c = 0): q(1,1) = 1
        let w = rep(0, 1, 0).unwrap();
        assert_eq!(value(0, 1, 0, &w).abs(), 1);
        // 3x^2 + 5xy + 2y^2 = (3x + 2y)(x + y), D = 1: q(1, -1) = 0... check
        // representability: x = -1, y = 2 gives (-3+4)(-1+2) = 1
        let w = rep(3, 5, 2).unwrap();
        assert_eq!(value(3, 5, 2, &w).abs(), 1);
        // 2x^2 + 3xy + y^2 = (2x + y)(x + y): q(1, -1) = (2-1)(1-1) = 0;
        // q(0, 1) = 1
        let w = rep(2, 3, 1).unwrap();
        assert_eq!(value(2, 3, 1, &w).abs(), 1);
        // 4x^2 - y^2 = (2x-y)(2x+y): needs 2x ∓ y = ±1 both, impossible
        // parity-wise... (2x-y)(2x+y) = ±1 forces both factors ±1, so
        // 4x = ±1 ± 1 ∈ {-2, 0, 2}: x = 0 won't do (y^2 = ∓1 gives y = ±1,
        // -y^2 = -1 works!). q(0, 1) = -1.
        let w = rep(4, 0, -1).unwrap();
        assert_eq!(value(4, 0, -1, &w).abs(), 1);
        // 4x^2 + 4xy ... content 4 -> None
        assert_eq!(rep(4, 4, 0), None);
        // 2x^2 + xy: a=2, b=1, c=0, D=1: q(x,y) = x(2x + y): x = 1, y = -1
        let w = rep(2, 1, 0).unwrap();
        assert_eq!(value(2, 1, 0, &w).abs(), 1);
        // 3x^2 + xy: x(3x + y) = ±1 needs x = ±1, 3x + y = ±1: y = -2 or -4
        let w = rep(3, 1, 0).unwrap();
        assert_eq!(value(3, 1, 0, &w).abs(), 1);
        // 9x^2 - y^2: factors (3x-y)(3x+y): both ±1 forces 6x ∈ {-2,0,2}:
        // x=0, y=±1 gives -1
        let w = rep(9, 0, -1).unwrap();
        assert_eq!(value(9, 0, -1, &w).abs(), 1);
        // 9x^2 + 3xy: content 3 -> None
        assert_eq!(rep(9, 3, 0), None);
        // 6x^2 + 5xy + y^2 = (3x+y)(2x+y): x=1: (3+y)(2+y) = ±1 -> none;
        // x=-1... brute: try (1,-2): (1)(0) = 0; (-1,4): (1)(2)=2;
        // (1,-4): (-1)(-2) = 2; (-1,2): (-1)(0)=0; (2,-5): (1)(-1) = -1 ✓
        let w = rep(6, 5, 1).unwrap();
        assert_eq!(value(6, 5, 1, &w).abs(), 1);
    }

    #[test]
    fn agrees_with_brute_force_on_small_forms() {
        for a in -6i64..=6 {
            for b in -6i64..=6 {
                for c in -6i64..=6 {
                    let ours = rep(a, b, c);
                    let mut brute = None;
                    'search: for x in -40i64..=40 {
                        for y in -40i64..=40 {
                            if (a * x * x + b * x * y + c * y * y).abs() == 1 {
                                brute = Some((x, y));
                                break 'search;
                            }
                        }
                    }
                    // The brute box is a one-sided oracle: a hit it finds
                    // must be found by the exact method too, while an exact
                    // witness outside the box is fine as long as it checks.
                    match (&ours, &brute) {
                        (Some(w), _) => {
                            assert_eq!(value(a, b, c, w).abs(), 1, "({},{},{})", a, b, c);
                        }
                        (None, Some(_)) => {
                            panic!("missed representation for ({}, {}, {})", a, b, c)
                        }
                        (None, None) => {}
                    }
                }
            }
        }
    }
}
