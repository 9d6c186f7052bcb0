use std::sync::Arc;

use super::{GenSet, Permutation, Side};
use crate::error::{Error, Result};

/// Largest rank for which the whole group is enumerated into dense tables.
pub const MAX_DENSE_RANK: usize = 7;

/// A fixed-width bit set over dense element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1 << (i & 63);
    }

    pub fn union_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }
}

/// `S_n` enumerated and indexed densely.
///
/// Elements are sorted by length, then by one-line notation, so index `0` is
/// the identity, the last index is `w_0`, and the order is a linear extension
/// of the Bruhat order. All multiplication, descent and Bruhat data are
/// precomputed.
#[derive(Debug)]
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    lengths: Vec<u8>,
    by_lehmer: Vec<u32>,
    right_mul: Vec<u32>,
    left_mul: Vec<u32>,
    inverses: Vec<u32>,
    right_descents: Vec<GenSet>,
    left_descents: Vec<GenSet>,
    below: Vec<BitRow>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n > MAX_DENSE_RANK {
            return Err(Error::RankOutOfRange {
                rank: n,
                min: 1,
                max: MAX_DENSE_RANK,
            });
        }
        let mut elements = Vec::new();
        let mut image: Vec<u8> = (0..n as u8).collect();
        permute_all(&mut image, 0, &mut elements);
        elements.sort_by_key(|w| (w.length(), w.raw().to_vec()));

        let order = elements.len();
        let mut by_lehmer = vec![0u32; order];
        for (i, w) in elements.iter().enumerate() {
            by_lehmer[w.lehmer_rank()] = i as u32;
        }
        let gens = n - 1;
        let index = |w: &Permutation| by_lehmer[w.lehmer_rank()];
        let mut right_mul = vec![0u32; order * gens];
        let mut left_mul = vec![0u32; order * gens];
        for (i, w) in elements.iter().enumerate() {
            for s in 1..n {
                right_mul[i * gens + s - 1] = index(&w.mul_simple_right(s));
                left_mul[i * gens + s - 1] = index(&w.mul_simple_left(s));
            }
        }
        let inverses = elements.iter().map(|w| index(&w.inverse())).collect();
        let lengths = elements.iter().map(|w| w.length() as u8).collect();
        let right_descents = elements.iter().map(|w| w.descents(Side::Right)).collect();
        let left_descents = elements.iter().map(|w| w.descents(Side::Left)).collect();

        let mut group = SymmetricGroup {
            n,
            elements,
            lengths,
            by_lehmer,
            right_mul,
            left_mul,
            inverses,
            right_descents,
            left_descents,
            below: Vec::new(),
        };
        group.below = group.bruhat_rows();
        Ok(Arc::new(group))
    }

    // Lifting property: for a left descent s of y, x <= y iff min(x, sx) <= sy.
    fn bruhat_rows(&self) -> Vec<BitRow> {
        let order = self.order();
        let mut rows: Vec<BitRow> = Vec::with_capacity(order);
        for y in 0..order {
            let mut row = BitRow::new(order);
            match self.left_descents[y].iter().next() {
                None => row.set(y),
                Some(s) => {
                    let sy = self.lmul(s, y);
                    let prev = &rows[sy];
                    for x in 0..order {
                        let sx = self.lmul(s, x);
                        if prev.get(x.min(sx)) {
                            row.set(x);
                        }
                    }
                }
            }
            rows.push(row);
        }
        rows
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.order() - 1
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, w: &Permutation) -> Result<usize> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.n,
            });
        }
        Ok(self.by_lehmer[w.lehmer_rank()] as usize)
    }

    /// Dense index of a word or one-line string.
    pub fn parse(&self, text: &str) -> Result<usize> {
        self.index_of(&Permutation::parse(text, self.n)?)
    }

    #[inline]
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    /// `w * s`.
    #[inline]
    pub fn rmul(&self, i: usize, s: usize) -> usize {
        self.right_mul[i * (self.n - 1) + s - 1] as usize
    }

    /// `s * w`.
    #[inline]
    pub fn lmul(&self, s: usize, i: usize) -> usize {
        self.left_mul[i * (self.n - 1) + s - 1] as usize
    }

    pub fn mul_simple(&self, i: usize, s: usize, side: Side) -> usize {
        match side {
            Side::Right => self.rmul(i, s),
            Side::Left => self.lmul(s, i),
        }
    }

    #[inline]
    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    #[inline]
    pub fn descents(&self, i: usize, side: Side) -> GenSet {
        match side {
            Side::Right => self.right_descents[i],
            Side::Left => self.left_descents[i],
        }
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let mut w = a;
        for s in self.elements[b].reduced_word() {
            w = self.rmul(w, s);
        }
        w
    }

    pub fn multiply_word(&self, letters: &[usize]) -> usize {
        letters.iter().fold(0, |w, &s| self.rmul(w, s))
    }

    #[inline]
    pub fn bruhat_leq(&self, x: usize, y: usize) -> bool {
        self.below[y].get(x)
    }

    /// `{x : x <= y}` as a bit row.
    pub fn bruhat_below(&self, y: usize) -> &BitRow {
        &self.below[y]
    }

    pub fn is_involution(&self, i: usize) -> bool {
        self.inverse(i) == i
    }

    pub fn support(&self, i: usize) -> GenSet {
        self.elements[i].support()
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> {
        1..self.n
    }

    /// Image under the diagram automorphism `s_i -> s_{n-i}`, which is
    /// conjugation by `w_0`.
    pub fn flip(&self, i: usize) -> usize {
        let w0 = self.longest();
        self.multiply(self.multiply(w0, i), w0)
    }
}

fn permute_all(image: &mut Vec<u8>, k: usize, out: &mut Vec<Permutation>) {
    if k == image.len() {
        out.push(Permutation::from_image_unchecked(image.clone()));
        return;
    }
    for i in k..image.len() {
        image.swap(k, i);
        permute_all(image, k + 1, out);
        image.swap(k, i);
    }
}
