//! The symmetric group `S_n` as a Coxeter group of type `A_{n-1}`.

mod group;
mod partition;
mod permutation;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use group::{BitRow, SymmetricGroup, MAX_DENSE_RANK};
pub use partition::Partition;
pub use permutation::{GeneratorWord, Permutation};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A set of simple reflections `s_i`, `1 <= i <= 31`, as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSet(u32);

impl GenSet {
    pub const fn empty() -> Self {
        GenSet(0)
    }

    /// All generators of `S_n`.
    pub fn full(n: usize) -> Self {
        if n < 2 {
            GenSet(0)
        } else {
            GenSet(((1u64 << (n - 1)) - 1) as u32)
        }
    }

    pub const fn from_bits(bits: u32) -> Self {
        GenSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> GenSet {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=32).filter(move |&i| self.contains(i))
    }

    /// Maximal runs of consecutive generators, as inclusive `(first, last)`.
    pub fn blocks(self) -> Vec<(usize, usize)> {
        let mut blocks = Vec::new();
        let mut current: Option<(usize, usize)> = None;
        for i in self.iter() {
            current = match current {
                Some((a, b)) if b + 1 == i => Some((a, i)),
                Some(block) => {
                    blocks.push(block);
                    Some((i, i))
                }
                None => Some((i, i)),
            };
        }
        blocks.extend(current);
        blocks
    }

    /// Image under the diagram automorphism `s_i -> s_{n-i}`.
    pub fn flipped(self, n: usize) -> GenSet {
        self.iter().map(|i| n - i).collect()
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = GenSet::empty();
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Longest element `w_0^J` of the standard parabolic subgroup `W_J` of `S_n`.
pub fn longest_element(set: GenSet, n: usize) -> Permutation {
    let mut image: Vec<u8> = (0..n as u8).collect();
    for (a, b) in set.blocks() {
        // generators a..=b act on positions a..=b+1 (1-based)
        image[a - 1..=b].reverse();
    }
    Permutation::from_image_unchecked(image)
}

/// Parabolic decomposition with respect to `W_J`.
///
/// `Side::Left` returns `(z, u)` with `y = z u`, `u` in `W_J` and `z` the
/// shortest element of the coset `y W_J`. `Side::Right` returns `(z, u)` with
/// `y = u z` and `z` shortest in `W_J y`. Lengths add in both cases.
pub fn coset_decompose(y: &Permutation, set: GenSet, side: Side) -> (Permutation, Permutation) {
    let n = y.rank();
    let mut z = y.clone();
    let mut u_word = Vec::new();
    loop {
        // y = z u needs right descents of z, y = u z needs left descents
        let peel = match side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        let descent = set.iter().find(|&i| i < n && z.has_descent(i, peel));
        match descent {
            Some(i) => {
                z = match side {
                    Side::Right => z.mul_simple_left(i),
                    Side::Left => z.mul_simple_right(i),
                };
                u_word.push(i);
            }
            None => break,
        }
    }
    // For Side::Left we peeled y = z s_{ik} ... s_{i1}; the letters were
    // collected innermost-last, so the parabolic part reads reversed.
    let u = match side {
        Side::Left => {
            u_word.reverse();
            GeneratorWord::new(u_word).evaluate(n)
        }
        Side::Right => GeneratorWord::new(u_word).evaluate(n),
    };
    (z, u.expect("generators come from the rank-checked set"))
}

/// Whether `w` lies in `W_J`.
pub fn in_parabolic(w: &Permutation, set: GenSet) -> bool {
    w.support().is_subset(set)
}

/// The left descent set of `Side::Left`, right descent set for `Side::Right`.
pub fn descents(w: &Permutation, side: Side) -> GenSet {
    w.descents(side)
}

pub fn support(w: &Permutation) -> GenSet {
    w.support()
}

pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    x.bruhat_leq(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(word: &str, n: usize) -> Permutation {
        Permutation::parse(word, n).unwrap()
    }

    #[test]
    fn blocks_and_flip() {
        let set = GenSet::from_iter([1, 2, 4, 5]);
        assert_eq!(set.blocks(), vec![(1, 2), (4, 5)]);
        assert_eq!(GenSet::from_iter([1, 3]).flipped(6), GenSet::from_iter([5, 3]));
        assert!(GenSet::empty().blocks().is_empty());
    }

    #[test]
    fn longest_elements() {
        assert!(longest_element(GenSet::empty(), 4).is_identity());
        assert_eq!(longest_element(GenSet::from_iter([2]), 4), w("2", 4));
        assert_eq!(longest_element(GenSet::full(3), 3).one_line(), vec![3, 2, 1]);
        assert_eq!(longest_element(GenSet::from_iter([1, 2, 4, 5]), 6), w("121454", 6));
        let j = GenSet::from_iter([1, 3, 4]);
        let w0j = longest_element(j, 5);
        assert!(w0j.is_involution());
        assert_eq!(w0j.descents(Side::Right).intersection(j), j);
    }

    #[test]
    fn coset_decomposition_s3() {
        let j = GenSet::from_iter([1]);
        // w_0 = s1 s2 s1 = (s1 s2) s1, and s1 s2 has no right descent at 1
        let (z, u) = coset_decompose(&Permutation::longest(3), j, Side::Left);
        assert_eq!(z, w("12", 3));
        assert_eq!(u, w("1", 3));
        assert_eq!(z.compose(&u).unwrap(), Permutation::longest(3));

        let (z, u) = coset_decompose(&w("1", 3), j, Side::Left);
        assert!(z.is_identity());
        assert_eq!(u, w("1", 3));

        let (z, u) = coset_decompose(&w("12", 3), j, Side::Left);
        assert_eq!(z, w("12", 3));
        assert!(u.is_identity());
    }

    #[test]
    fn coset_decomposition_right_side() {
        let y = w("232432", 6);
        let j = GenSet::from_iter([2, 3]);
        let (z, u) = coset_decompose(&y, j, Side::Right);
        assert_eq!(u.compose(&z).unwrap(), y);
        assert!(z.descents(Side::Left).intersection(j).is_empty());
        assert_eq!(z.length() + u.length(), y.length());
    }
}
