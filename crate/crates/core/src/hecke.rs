//! The Hecke algebra of `S_n` over `Z[v, v^-1]` in the standard and
//! Kazhdan-Lusztig bases.
//!
//! Conventions: `(T_s - v)(T_s + v^-1) = 0`, i.e.
//! `T_s^2 = (v - v^-1) T_s + T_e`, and
//! `b_w = sum_{x <= w} v^{l(x) - l(w)} P_{x,w}(v^2) T_x`, so that
//! `b_s = T_s + v^-1 T_e` and every `b_w` is fixed by the bar involution.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Side, SymmetricGroup};
use crate::error::{Error, Result};
use crate::kl::KLTable;
use crate::laurent::LaurentPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Standard,
    Kl,
}

/// A finitely supported combination of basis elements indexed by dense
/// group indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub rank: usize,
    pub basis: Basis,
    pub coords: BTreeMap<usize, LaurentPolynomial>,
}

impl HeckeElement {
    pub fn zero(rank: usize, basis: Basis) -> Self {
        HeckeElement {
            rank,
            basis,
            coords: BTreeMap::new(),
        }
    }

    pub fn basis_vector(rank: usize, basis: Basis, w: usize) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(w, LaurentPolynomial::one());
        HeckeElement { rank, basis, coords }
    }

    pub fn coeff(&self, w: usize) -> LaurentPolynomial {
        self.coords.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPolynomial) {
        let entry = self.coords.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&w);
        }
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> HeckeElement {
        let mut out = HeckeElement::zero(self.rank, self.basis);
        for (&w, a) in &self.coords {
            out.add_term(w, &(a * c));
        }
        out
    }

    /// Coefficientwise evaluation at `v = 1`.
    pub fn at_one(&self) -> BTreeMap<usize, i64> {
        self.coords
            .iter()
            .map(|(&w, c)| (w, c.eval_one()))
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coords.values().all(|c| c.has_nonnegative_coeffs())
    }
}

type Dense = Vec<LaurentPolynomial>;

/// Multiplication context backed by a KL table.
#[derive(Debug, Clone)]
pub struct HeckeAlgebra {
    kl: Arc<KLTable>,
}

impl HeckeAlgebra {
    pub fn new(kl: Arc<KLTable>) -> Self {
        HeckeAlgebra { kl }
    }

    pub fn kl(&self) -> &Arc<KLTable> {
        &self.kl
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        self.kl.group()
    }

    fn rank(&self) -> usize {
        self.kl.rank()
    }

    fn check(&self, h: &HeckeElement) -> Result<()> {
        if h.rank != self.rank() {
            return Err(Error::RankMismatch {
                left: h.rank,
                right: self.rank(),
            });
        }
        Ok(())
    }

    pub fn standard(&self, w: usize) -> HeckeElement {
        HeckeElement::basis_vector(self.rank(), Basis::Standard, w)
    }

    /// `b_w`, held in the KL basis.
    pub fn kl_basis_element(&self, w: usize) -> HeckeElement {
        HeckeElement::basis_vector(self.rank(), Basis::Kl, w)
    }

    /// Expansion of `b_w` in the standard basis.
    pub fn kl_in_standard(&self, w: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.rank(), Basis::Standard);
        for x in self.group().bruhat_below(w).iter() {
            out.add_term(x, &self.kl.kl_coefficient(x, w));
        }
        out
    }

    fn to_dense(&self, h: &HeckeElement) -> Dense {
        let mut dense = vec![LaurentPolynomial::zero(); self.group().order()];
        for (&w, c) in &h.coords {
            dense[w] = c.clone();
        }
        dense
    }

    fn dense_to_element(&self, dense: Dense, basis: Basis) -> HeckeElement {
        let coords = dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        HeckeElement {
            rank: self.rank(),
            basis,
            coords,
        }
    }

    pub fn to_standard(&self, h: &HeckeElement) -> Result<HeckeElement> {
        self.check(h)?;
        match h.basis {
            Basis::Standard => Ok(h.clone()),
            Basis::Kl => {
                let mut dense = vec![LaurentPolynomial::zero(); self.group().order()];
                for (&w, c) in &h.coords {
                    for x in self.group().bruhat_below(w).iter() {
                        dense[x] += &(c * &self.kl.kl_coefficient(x, w));
                    }
                }
                Ok(self.dense_to_element(dense, Basis::Standard))
            }
        }
    }

    /// Triangular change of basis: peel off the longest remaining `T_w`
    /// (whose coefficient in `b_w` is `1`).
    pub fn to_kl(&self, h: &HeckeElement) -> Result<HeckeElement> {
        self.check(h)?;
        if h.basis == Basis::Kl {
            return Ok(h.clone());
        }
        let mut dense = self.to_dense(h);
        let mut out = vec![LaurentPolynomial::zero(); dense.len()];
        for w in (0..dense.len()).rev() {
            if dense[w].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[w]);
            for x in self.group().bruhat_below(w).iter() {
                if x != w {
                    dense[x] -= &(&c * &self.kl.kl_coefficient(x, w));
                }
            }
            out[w] = c;
        }
        Ok(self.dense_to_element(out, Basis::Kl))
    }

    /// `h * T_s` on dense standard coordinates.
    fn right_mul_generator(&self, h: &Dense, s: usize) -> Dense {
        let g = self.group();
        let v_minus = LaurentPolynomial::from_coeffs(-1, vec![-1, 0, 1]);
        let mut out = vec![LaurentPolynomial::zero(); h.len()];
        for (w, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ws = g.rmul(w, s);
            if g.length(ws) > g.length(w) {
                out[ws] += c;
            } else {
                out[w] += &(c * &v_minus);
                out[ws] += c;
            }
        }
        out
    }

    fn mul_standard_dense(&self, a: &Dense, b: &HeckeElement) -> Dense {
        let g = self.group().clone();
        // a * T_y, memoised along y = (y s) s with s a right descent
        let mut memo: HashMap<usize, Dense> = HashMap::new();
        memo.insert(0, a.clone());
        fn times_t(alg: &HeckeAlgebra, g: &SymmetricGroup, memo: &mut HashMap<usize, Dense>, y: usize) {
            if memo.contains_key(&y) {
                return;
            }
            let s = g.descents(y, Side::Right).iter().next().unwrap();
            let ys = g.rmul(y, s);
            times_t(alg, g, memo, ys);
            let next = alg.right_mul_generator(&memo[&ys], s);
            memo.insert(y, next);
        }
        let mut out = vec![LaurentPolynomial::zero(); a.len()];
        for (&y, c) in &b.coords {
            times_t(self, &g, &mut memo, y);
            for (w, d) in memo[&y].iter().enumerate() {
                if !d.is_zero() {
                    out[w] += &(c * d);
                }
            }
        }
        out
    }

    /// Exact product. Operands are converted to the standard basis; the
    /// result is returned in the KL basis if both operands were, otherwise
    /// in the standard basis.
    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.check(a)?;
        self.check(b)?;
        let sa = self.to_standard(a)?;
        let sb = self.to_standard(b)?;
        let prod = self.dense_to_element(self.mul_standard_dense(&self.to_dense(&sa), &sb), Basis::Standard);
        if a.basis == Basis::Kl && b.basis == Basis::Kl {
            self.to_kl(&prod)
        } else {
            Ok(prod)
        }
    }

    /// Product `b_{i1} b_{i2} ... b_{ik}` of generator KL elements, in the KL
    /// basis.
    pub fn generator_product(&self, letters: &[usize]) -> Result<HeckeElement> {
        let mut acc = self.kl_basis_element(0);
        for &s in letters {
            crate::coxeter::Permutation::simple(self.rank(), s)?;
            let bs = self.kl_basis_element(self.group().rmul(0, s));
            acc = self.multiply(&acc, &bs)?;
        }
        Ok(acc)
    }

    /// Same product as [`HeckeAlgebra::generator_product`], computed in the
    /// KL basis one generator at a time with the mu-rule.
    pub fn word_product_kl(&self, letters: &[usize]) -> Result<HeckeElement> {
        let mut acc = self.kl_basis_element(0);
        for &s in letters {
            crate::coxeter::Permutation::simple(self.rank(), s)?;
            let mut next = HeckeElement::zero(self.rank(), Basis::Kl);
            for (&w, c) in &acc.coords {
                for (z, d) in self.mul_generator_kl(s, w, Side::Right) {
                    next.add_term(z, &(c * &d));
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// `b_s b_w` (`Side::Left`) or `b_w b_s` (`Side::Right`) in the KL basis
    /// via the mu-function:
    ///
    /// * `(v + v^-1) b_w` if `s` is a descent of `w` on that side;
    /// * `b_{sw} + sum_{z < w, s descent of z} mu(z, w) b_z` otherwise.
    pub fn mul_generator_kl(&self, s: usize, w: usize, side: Side) -> Vec<(usize, LaurentPolynomial)> {
        let g = self.group();
        if g.descents(w, side).contains(s) {
            return vec![(w, LaurentPolynomial::from_coeffs(-1, vec![1, 0, 1]))];
        }
        let mut out = vec![(g.mul_simple(w, s, side), LaurentPolynomial::one())];
        for (z, m) in self.kl.mu_below(w) {
            if g.descents(z, side).contains(s) {
                out.push((z, LaurentPolynomial::monomial(m as i64, 0)));
            }
        }
        out.sort_by_key(|&(z, _)| z);
        out
    }

    /// Bar involution on an element in the standard basis:
    /// `v -> v^-1`, `T_w -> T_{w^-1}^{-1}`.
    pub fn bar(&self, h: &HeckeElement) -> Result<HeckeElement> {
        let sh = self.to_standard(h)?;
        let g = self.group().clone();
        let shift = LaurentPolynomial::from_coeffs(-1, vec![1, 0, -1]);
        let mut out = vec![LaurentPolynomial::zero(); g.order()];
        for (&w, c) in &sh.coords {
            // bar(T_w) = T_{s1}^-1 ... T_{sk}^-1 with T_s^-1 = T_s - (v - v^-1)
            let mut acc = vec![LaurentPolynomial::zero(); g.order()];
            acc[0] = LaurentPolynomial::one();
            for s in g.element(w).reduced_word() {
                let mut next = self.right_mul_generator(&acc, s);
                for (i, a) in acc.iter().enumerate() {
                    if !a.is_zero() {
                        next[i] += &(a * &shift);
                    }
                }
                acc = next;
            }
            let cb = c.bar();
            for (i, a) in acc.iter().enumerate() {
                if !a.is_zero() {
                    out[i] += &(&cb * a);
                }
            }
        }
        let res = self.dense_to_element(out, Basis::Standard);
        if h.basis == Basis::Kl {
            self.to_kl(&res)
        } else {
            Ok(res)
        }
    }
}
