//! Exact Laurent polynomials with integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// `sum_k c_k v^k` with `c_k` in `Z`, stored densely from the lowest nonzero
/// exponent. No leading or trailing zero coefficients are stored; the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::monomial(1, 0)
    }

    /// `c v^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        LaurentPolynomial {
            low: k,
            coeffs: vec![c],
        }
        .normalized()
    }

    /// `sum_i coeffs[i] v^(low + i)`.
    pub fn from_coeffs(low: i32, coeffs: Vec<i64>) -> Self {
        LaurentPolynomial { low, coeffs }.normalized()
    }

    /// Builds `p(v^step) * v^shift` from the coefficient list of an ordinary
    /// polynomial `p`; e.g. `step = 2` turns a polynomial in `q` into one in
    /// `v` with `q = v^2`.
    pub fn from_q_coeffs(q_coeffs: &[i64], step: i32, shift: i32) -> Self {
        if step == 0 {
            let c = q_coeffs.iter().sum();
            return LaurentPolynomial::monomial(c, shift);
        }
        q_coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| LaurentPolynomial::monomial(c, step * i as i32 + shift))
            .fold(LaurentPolynomial::zero(), |acc, m| acc + m)
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => LaurentPolynomial::zero(),
            Some(first) => {
                let last = self.coeffs.iter().rposition(|&c| c != 0).unwrap();
                self.coeffs.truncate(last + 1);
                self.coeffs.drain(..first);
                self.low += first as i32;
                self
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let idx = k - self.low;
        if idx < 0 {
            0
        } else {
            self.coeffs.get(idx as usize).copied().unwrap_or(0)
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return LaurentPolynomial::zero();
        }
        let high = self.max_degree().unwrap();
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPolynomial { low: -high, coeffs }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, v: f64) -> f64 {
        self.terms().map(|(k, c)| c as f64 * v.powi(k)).sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            low: self.low,
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    /// Renders the polynomial in the named variable, e.g. `1+q` or
    /// `v^-1+2v`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.terms() {
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            out.push_str(sign);
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a == 1 {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}{mono}"));
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &LaurentPolynomial, sign: i64) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.scale(sign);
            return;
        }
        let low = self.low.min(other.low);
        let high = self.max_degree().unwrap().max(other.max_degree().unwrap());
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, 0);
        }
        let off = (other.low - self.low) as usize;
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i] += sign * c;
        }
        let tmp = std::mem::take(self);
        *self = tmp.normalized();
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("v"))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("v"))
    }
}

impl PartialOrd for LaurentPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        self.add_scaled(rhs, 1);
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        self.add_scaled(rhs, -1);
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self -= &rhs;
        self
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial {
            low: self.low + rhs.low,
            coeffs,
        }
        .normalized()
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        (-4i32..4, prop::collection::vec(-5i64..5, 0..6))
            .prop_map(|(low, coeffs)| LaurentPolynomial::from_coeffs(low, coeffs))
    }

    #[test]
    fn basic_arithmetic() {
        let v = LaurentPolynomial::monomial(1, 1);
        let vinv = LaurentPolynomial::monomial(1, -1);
        let quantum_two = &v + &vinv;
        assert_eq!((&quantum_two * &quantum_two).display_in("v"), "v^-2+2+v^2");
        assert!((&v - &v).is_zero());
        assert_eq!(quantum_two.bar(), quantum_two);
        assert_eq!(LaurentPolynomial::from_q_coeffs(&[1, 1], 2, 0).display_in("v"), "1+v^2");
        assert_eq!(LaurentPolynomial::from_q_coeffs(&[1, 1], 1, 0).display_in("q"), "1+q");
        assert_eq!(LaurentPolynomial::from_q_coeffs(&[1, 0, 2], 1, 0).eval_one(), 3);
        assert_eq!(LaurentPolynomial::monomial(-2, 3).display_in("v"), "-2v^3");
    }

    #[test]
    fn no_stored_zeros() {
        let p = LaurentPolynomial::from_coeffs(-2, vec![0, 0, 3, 0, 0]);
        assert_eq!(p.min_degree(), Some(0));
        assert_eq!(p.max_degree(), Some(0));
        let z = LaurentPolynomial::from_coeffs(5, vec![0, 0]);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPolynomial::zero());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn bar_is_an_involutive_ring_map(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }
    }
}
