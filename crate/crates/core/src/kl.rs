//! Kazhdan-Lusztig polynomials `P_{x,y}(q)` and the mu-function of `S_n`.

use std::collections::HashMap;
use std::sync::Arc;

use crate::coxeter::{Side, SymmetricGroup};
use crate::error::Result;
use crate::laurent::LaurentPolynomial;

/// Interned id of the zero polynomial.
const ZERO: u32 = 0;
/// Interned id of the constant polynomial `1`.
const ONE: u32 = 1;

/// Full table of KL polynomials for one rank.
///
/// Polynomials are interned: the table stores, for every ordered pair
/// `(x, y)` of dense indices, an id into a pool of distinct `q`-coefficient
/// lists. `P_{x,y} = 0` unless `x <= y`.
#[derive(Debug)]
pub struct KLTable {
    group: Arc<SymmetricGroup>,
    pool: Vec<Vec<i64>>,
    table: Vec<u32>,
    mu_below: Vec<Vec<(u32, u32)>>,
}

struct Interner {
    pool: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, u32>,
}

impl Interner {
    fn new() -> Self {
        let mut it = Interner {
            pool: Vec::new(),
            lookup: HashMap::new(),
        };
        it.intern(&[]);
        it.intern(&[1]);
        it
    }

    fn intern(&mut self, coeffs: &[i64]) -> u32 {
        if let Some(&id) = self.lookup.get(coeffs) {
            return id;
        }
        let id = self.pool.len() as u32;
        self.pool.push(coeffs.to_vec());
        self.lookup.insert(coeffs.to_vec(), id);
        id
    }
}

/// `acc += factor * q^shift * p`.
fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize, factor: i64) {
    if p.is_empty() {
        return;
    }
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += factor * c;
    }
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

impl KLTable {
    pub fn new(n: usize) -> Result<Self> {
        Ok(KLTable::build(SymmetricGroup::new(n)?))
    }

    /// Fills the table by the standard recursion. For `y` with left descent
    /// `s` and `v = s y`, with `c = 1` if `s x < x` and `0` otherwise,
    ///
    /// `P_{x,y} = q^{1-c} P_{sx,v} + q^c P_{x,v}
    ///            - sum_{z < v, sz < z} mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}`.
    ///
    /// Slice `y` only reads slices of strictly smaller length.
    pub fn build(group: Arc<SymmetricGroup>) -> Self {
        let order = group.order();
        let mut interner = Interner::new();
        let mut table = vec![ZERO; order * order];
        let mut mu_below: Vec<Vec<(u32, u32)>> = vec![Vec::new(); order];
        table[0] = ONE;
        let mut acc: Vec<i64> = Vec::new();

        for y in 1..order {
            let s = group.descents(y, Side::Left).iter().next().expect("y != e");
            let v = group.lmul(s, y);
            let ly = group.length(y);
            let corrections: Vec<(usize, i64, usize)> = mu_below[v]
                .iter()
                .map(|&(z, m)| (z as usize, m as i64))
                .filter(|&(z, _)| group.descents(z, Side::Left).contains(s))
                .map(|(z, m)| (z, m, (ly - group.length(z)) / 2))
                .collect();
            let below = group.bruhat_below(y).iter().collect::<Vec<_>>();
            // Descending so that P_{sx,y} is known when s x > x.
            for &x in below.iter().rev() {
                let sx = group.lmul(s, x);
                let id = if sx > x {
                    table[y * order + sx]
                } else {
                    acc.clear();
                    // here s x < x, so c = 1
                    add_shifted(&mut acc, &interner.pool[table[v * order + sx] as usize], 0, 1);
                    add_shifted(&mut acc, &interner.pool[table[v * order + x] as usize], 1, 1);
                    for &(z, m, k) in &corrections {
                        let pid = table[z * order + x];
                        if pid != ZERO {
                            add_shifted(&mut acc, &interner.pool[pid as usize], k, -m);
                        }
                    }
                    trim(&mut acc);
                    interner.intern(&acc)
                };
                table[y * order + x] = id;
            }
            let mut mus = Vec::new();
            for &x in &below {
                let gap = ly - group.length(x);
                if gap % 2 == 1 {
                    let p = &interner.pool[table[y * order + x] as usize];
                    let top = p.get((gap - 1) / 2).copied().unwrap_or(0);
                    if top != 0 {
                        mus.push((x as u32, top as u32));
                    }
                }
            }
            mu_below[y] = mus;
        }

        KLTable {
            group,
            pool: interner.pool,
            table,
            mu_below,
        }
    }

    /// Reassembles a table from explicit `(x, y, coefficients)` records, as
    /// read back from a cache file. Pairs not listed are zero.
    pub(crate) fn from_records(
        group: Arc<SymmetricGroup>,
        records: impl IntoIterator<Item = (usize, usize, Vec<i64>)>,
    ) -> Self {
        let order = group.order();
        let mut interner = Interner::new();
        let mut table = vec![ZERO; order * order];
        for (x, y, coeffs) in records {
            table[y * order + x] = interner.intern(&coeffs);
        }
        let mut mu_below = vec![Vec::new(); order];
        for (y, mus) in mu_below.iter_mut().enumerate() {
            let ly = group.length(y);
            for x in 0..y {
                let gap = ly as isize - group.length(x) as isize;
                if gap > 0 && gap % 2 == 1 {
                    let p = &interner.pool[table[y * order + x] as usize];
                    let top = p.get((gap as usize - 1) / 2).copied().unwrap_or(0);
                    if top != 0 {
                        mus.push((x as u32, top as u32));
                    }
                }
            }
        }
        KLTable {
            group,
            pool: interner.pool,
            table,
            mu_below,
        }
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// Coefficients of `P_{x,y}` in `q`, constant term first. Empty for zero.
    #[inline]
    pub fn coeffs(&self, x: usize, y: usize) -> &[i64] {
        &self.pool[self.table[y * self.group.order() + x] as usize]
    }

    /// `P_{x,y}` as a polynomial in `q`.
    pub fn kl_polynomial(&self, x: usize, y: usize) -> LaurentPolynomial {
        LaurentPolynomial::from_q_coeffs(self.coeffs(x, y), 1, 0)
    }

    /// `P_{x,y}(1)`.
    pub fn at_one(&self, x: usize, y: usize) -> i64 {
        self.coeffs(x, y).iter().sum()
    }

    /// Coefficient of `T_x` in the KL basis element `b_y`:
    /// `v^{l(x) - l(y)} P_{x,y}(v^2)`.
    pub fn kl_coefficient(&self, x: usize, y: usize) -> LaurentPolynomial {
        let shift = self.group.length(x) as i32 - self.group.length(y) as i32;
        LaurentPolynomial::from_q_coeffs(self.coeffs(x, y), 2, shift)
    }

    /// Elements `z < y` with `mu(z, y) != 0`, together with `mu(z, y)`.
    pub fn mu_below(&self, y: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.mu_below[y].iter().map(|&(z, m)| (z as usize, m as u64))
    }

    /// Symmetric mu-function: `mu(min, max)` for Bruhat-comparable pairs and
    /// `0` otherwise (including `x = y`).
    pub fn mu(&self, x: usize, y: usize) -> u64 {
        let (lo, hi) = if self.group.length(x) <= self.group.length(y) {
            (x, y)
        } else {
            (y, x)
        };
        if lo == hi {
            return 0;
        }
        self.mu_below[hi]
            .iter()
            .find(|&&(z, _)| z as usize == lo)
            .map_or(0, |&(_, m)| m as u64)
    }

    /// Number of distinct polynomials in the table (including `0` and `1`).
    pub fn distinct_polynomials(&self) -> usize {
        self.pool.len()
    }

    /// Nonzero records `(x, y, coefficients)` ordered by `(l(y), y, x)`;
    /// dense indices are length-sorted, so this is ordering by `(y, x)`.
    pub fn records(&self) -> impl Iterator<Item = (usize, usize, &[i64])> + '_ {
        let order = self.group.order();
        (0..order).flat_map(move |y| {
            (0..order).filter_map(move |x| {
                let c = self.coeffs(x, y);
                (!c.is_empty()).then_some((x, y, c))
            })
        })
    }
}

impl PartialEq for KLTable {
    fn eq(&self, other: &Self) -> bool {
        self.rank() == other.rank() && self.records().eq(other.records())
    }
}
