//! Independent reference implementations on raw one-line permutations.
//! Nothing here calls into the library except to translate indices.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use klcellkit::cells::CellData;
use klcellkit::characters::CategoryO;
use klcellkit::{Permutation, SymmetricGroup};

pub type OneLine = Vec<usize>;

pub fn category(n: usize) -> CategoryO {
    CategoryO::new(Arc::new(CellData::new(n).unwrap()))
}

pub fn all_one_line(n: usize) -> Vec<OneLine> {
    fn extend(prefix: &mut OneLine, n: usize, out: &mut Vec<OneLine>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, &mut out);
    out
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
        .sum()
}

/// `w s_i`: swap positions `i` and `i + 1` (1-based).
pub fn times_s(w: &[usize], i: usize) -> OneLine {
    let mut out = w.to_vec();
    out.swap(i - 1, i);
    out
}

pub fn right_descent(w: &[usize], i: usize) -> bool {
    w[i - 1] > w[i]
}

/// A reduced word by bubble sort: peel right descents.
pub fn bubble_word(w: &[usize]) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut letters = Vec::new();
    while let Some(i) = (1..w.len()).find(|&i| right_descent(&w, i)) {
        w = times_s(&w, i);
        letters.push(i);
    }
    letters.reverse();
    letters
}

pub fn evaluate(n: usize, letters: &[usize]) -> OneLine {
    letters.iter().fold((1..=n).collect(), |w, &i| times_s(&w, i))
}

/// Bruhat lower interval of `y` by the subword property: every subword of a
/// fixed reduced word of `y`, evaluated.
pub fn subword_interval(y: &[usize]) -> BTreeSet<OneLine> {
    let word = bubble_word(y);
    let n = y.len();
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            evaluate(n, &sub)
        })
        .collect()
}

/// q-polynomial as a coefficient vector with trailing zeros removed.
pub type QPoly = Vec<i64>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut QPoly, p: &[i64], shift: usize, sign: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, c) in p.iter().enumerate() {
        acc[k + shift] += sign * c;
    }
}

/// KL polynomials of `S_n` by the textbook recursion over a right descent,
/// with the Bruhat order taken from the subword oracle.
pub struct KlOracle {
    pub elements: Vec<OneLine>,
    index: HashMap<OneLine, usize>,
    below: Vec<BTreeSet<usize>>,
    table: Vec<Vec<QPoly>>,
}

impl KlOracle {
    pub fn new(n: usize) -> Self {
        let mut elements = all_one_line(n);
        elements.sort_by_key(|w| inversions(w));
        let index: HashMap<OneLine, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let below: Vec<BTreeSet<usize>> = elements
            .iter()
            .map(|y| subword_interval(y).iter().map(|x| index[x]).collect())
            .collect();
        let m = elements.len();
        let mut oracle = KlOracle {
            elements,
            index,
            below,
            table: vec![vec![Vec::new(); m]; m],
        };
        for y in 0..m {
            for x in 0..m {
                let p = oracle.compute(x, y);
                oracle.table[x][y] = p;
            }
        }
        oracle
    }

    pub fn idx(&self, w: &[usize]) -> usize {
        self.index[w]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(&x)
    }

    pub fn len(&self, w: usize) -> usize {
        inversions(&self.elements[w])
    }

    pub fn p(&self, x: usize, y: usize) -> &QPoly {
        &self.table[x][y]
    }

    /// Symmetric mu-function.
    pub fn mu(&self, x: usize, y: usize) -> i64 {
        let (x, y) = if self.len(x) <= self.len(y) { (x, y) } else { (y, x) };
        let (lx, ly) = (self.len(x), self.len(y));
        if x == y || !self.leq(x, y) || (ly - lx) % 2 == 0 {
            return 0;
        }
        self.table[x][y].get((ly - lx - 1) / 2).copied().unwrap_or(0)
    }

    fn compute(&self, x: usize, y: usize) -> QPoly {
        if !self.leq(x, y) {
            return Vec::new();
        }
        if x == y {
            return vec![1];
        }
        let yw = &self.elements[y];
        let s = (1..yw.len())
            .find(|&i| right_descent(yw, i))
            .expect("y is not the identity");
        let v = self.idx(&times_s(yw, s));
        let xw = &self.elements[x];
        let xs = self.idx(&times_s(xw, s));
        let c = usize::from(right_descent(xw, s));
        let mut acc = Vec::new();
        add_shifted(&mut acc, &self.table[xs][v], 1 - c, 1);
        add_shifted(&mut acc, &self.table[x][v], c, 1);
        for &z in &self.below[v] {
            if z == v || !right_descent(&self.elements[z], s) {
                continue;
            }
            let m = self.mu(z, v);
            if m != 0 {
                let shift = (self.len(y) - self.len(z)) / 2;
                let scaled: Vec<i64> = self.table[x][z].iter().map(|c| c * m).collect();
                add_shifted(&mut acc, &scaled, shift, -1);
            }
        }
        trim(acc)
    }
}

pub fn library_index(g: &SymmetricGroup, w: &[usize]) -> usize {
    g.index_of(&Permutation::from_one_line(w).unwrap()).unwrap()
}

/// Laurent polynomial in `v` as exponent to coefficient.
pub type VPoly = BTreeMap<i32, i64>;

/// Standard-basis Hecke product by the defining relations
/// `T_w T_s = T_{ws}` if `ws > w`, else `(v - v^-1) T_w + T_{ws}`.
pub fn standard_product(a: &[usize], b: &[usize]) -> BTreeMap<OneLine, VPoly> {
    let mut acc: BTreeMap<OneLine, VPoly> = BTreeMap::new();
    acc.insert(a.to_vec(), VPoly::from([(0, 1)]));
    for s in bubble_word(b) {
        let mut next: BTreeMap<OneLine, VPoly> = BTreeMap::new();
        for (w, c) in acc {
            let ws = times_s(&w, s);
            let add = |next: &mut BTreeMap<OneLine, VPoly>, key: &OneLine, shift: i32, sign: i64| {
                let entry = next.entry(key.clone()).or_default();
                for (&k, &m) in &c {
                    *entry.entry(k + shift).or_default() += sign * m;
                }
            };
            add(&mut next, &ws, 0, 1);
            if right_descent(&w, s) {
                add(&mut next, &w, 1, 1);
                add(&mut next, &w, -1, -1);
            }
        }
        for poly in next.values_mut() {
            poly.retain(|_, c| *c != 0);
        }
        next.retain(|_, p| !p.is_empty());
        acc = next;
    }
    acc
}
