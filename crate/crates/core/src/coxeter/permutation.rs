use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GenSet, Side};
use crate::error::{Error, Result};

/// An element of the symmetric group `S_n` in one-line notation.
///
/// Internally `image[i] = w(i + 1) - 1`; the public surface speaks 1-based
/// positions and values. Products follow `(a * b)(i) = a(b(i))`, so the word
/// `s_{i1} s_{i2} ... s_{ik}` is evaluated left to right and right
/// multiplication by `s_i` swaps the entries in positions `i` and `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(values: &[usize]) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > 64 {
            return Err(Error::InvalidPermutation(format!("unsupported size {n}")));
        }
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &v in values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a bijection of 1..{n}"
                )));
            }
            seen[v - 1] = true;
            image.push((v - 1) as u8);
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<u8>) -> Self {
        Permutation { image }
    }

    /// The simple reflection `s_i = (i, i+1)`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_generator(n, i)?;
        let mut w = Permutation::identity(n);
        w.image.swap(i - 1, i);
        Ok(w)
    }

    /// The longest element `w_0` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            image: (0..n as u8).rev().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.image.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.image
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u8; self.rank()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u8;
        }
        Permutation { image }
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &v)| self.image[v as usize] as usize == i)
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `w * s_i` (swap positions `i`, `i+1`).
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        let mut image = self.image.clone();
        image.swap(i - 1, i);
        Permutation { image }
    }

    /// `s_i * w` (swap values `i`, `i+1`).
    pub fn mul_simple_left(&self, i: usize) -> Permutation {
        let a = (i - 1) as u8;
        let b = i as u8;
        Permutation {
            image: self
                .image
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    pub fn has_descent(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Right => self.image[i - 1] > self.image[i],
            Side::Left => {
                let pos = |v: u8| self.image.iter().position(|&x| x == v).unwrap();
                pos((i - 1) as u8) > pos(i as u8)
            }
        }
    }

    pub fn descents(&self, side: Side) -> GenSet {
        let n = self.rank();
        (1..n).filter(|&i| self.has_descent(i, side)).collect()
    }

    /// Generators occurring in any reduced word: `i` is in the support iff
    /// `w` does not stabilise `{1, ..., i}`.
    pub fn support(&self) -> GenSet {
        let mut max = 0u8;
        let mut set = GenSet::empty();
        for i in 0..self.rank().saturating_sub(1) {
            max = max.max(self.image[i]);
            if max as usize > i {
                set.insert(i + 1);
            }
        }
        set
    }

    /// The lexicographically smallest reduced word, built by repeatedly
    /// stripping the smallest left descent. Letters are generator indices.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.rank()).find(|&i| w.has_descent(i, Side::Left)) {
            w = w.mul_simple_left(i);
            letters.push(i);
        }
        letters
    }

    /// All reduced words in lexicographic order.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.length());
        self.collect_reduced_words(&mut prefix, &mut out);
        out
    }

    /// Whether each simple reflection occurs at most once in a reduced word.
    pub fn letters_distinct(&self) -> bool {
        self.length() == self.support().len()
    }

    fn collect_reduced_words(&self, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if self.is_identity() {
            out.push(prefix.clone());
            return;
        }
        for i in (1..self.rank()).filter(|&i| self.has_descent(i, Side::Left)) {
            prefix.push(i);
            self.mul_simple_left(i).collect_reduced_words(prefix, out);
            prefix.pop();
        }
    }

    /// Bruhat order via the rank-matrix criterion: `x <= y` iff for all
    /// `i, j`, `#{a <= i : x(a) >= j} <= #{a <= i : y(a) >= j}`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        let n = self.rank();
        if n != other.rank() {
            return Err(Error::RankMismatch {
                left: n,
                right: other.rank(),
            });
        }
        let mut cx = vec![0i32; n + 1];
        let mut cy = vec![0i32; n + 1];
        for i in 0..n {
            // cx[j] = #{a <= i : x(a) >= j} for j in 0..n
            for c in &mut cx[..=self.image[i] as usize] {
                *c += 1;
            }
            for c in &mut cy[..=other.image[i] as usize] {
                *c += 1;
            }
            if (0..n).any(|j| cx[j] > cy[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lehmer-code rank in `0..n!`.
    pub(crate) fn lehmer_rank(&self) -> usize {
        let n = self.rank();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller = self.image[i + 1..].iter().filter(|&&v| v < self.image[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Word notation with digits, `e` for the identity (valid for `n <= 10`).
    pub fn word_string(&self) -> String {
        let word = self.reduced_word();
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| i.to_string()).collect()
        }
    }

    pub fn one_line_string(&self) -> String {
        self.one_line()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses either one-line notation (`"6,2,3,4,5,1"`) or a generator word
    /// (`"45231"`, `"e"`) in `S_n`.
    pub fn parse(text: &str, n: usize) -> Result<Permutation> {
        let text = text.trim();
        if text.contains(',') {
            let values = text
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPermutation(text.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let w = Permutation::from_one_line(&values)?;
            if w.rank() != n {
                return Err(Error::RankMismatch {
                    left: w.rank(),
                    right: n,
                });
            }
            Ok(w)
        } else {
            text.parse::<GeneratorWord>()?.evaluate(n)
        }
    }
}

pub(crate) fn check_generator(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::InvalidGenerator { index: i, rank: n })
    } else {
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

/// A word in the simple reflections, `s_{i1} s_{i2} ... s_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GeneratorWord {
    pub letters: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(letters: Vec<usize>) -> Self {
        GeneratorWord { letters }
    }

    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(n);
        for &i in &self.letters {
            check_generator(n, i)?;
            w.image.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.evaluate(n)?.length() == self.letters.len())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" || s == "id" {
            return Ok(GeneratorWord::default());
        }
        let letters = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidPermutation(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorWord { letters })
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for i in &self.letters {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                out.push(Permutation::from_one_line(&prefix).unwrap());
                continue;
            }
            for v in (1..=n).filter(|v| !prefix.contains(v)) {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
        out
    }

    fn w(word: &str, n: usize) -> Permutation {
        Permutation::parse(word, n).unwrap()
    }

    #[test]
    fn identity_laws() {
        let x = w("45231", 6);
        let e = Permutation::identity(6);
        assert_eq!(e.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&e).unwrap(), x);
        assert_eq!(x.compose(&x.inverse()).unwrap(), e);
        assert_eq!(x.inverse().inverse(), x);
    }

    #[test]
    fn word_evaluation_is_left_to_right_product() {
        let s1 = Permutation::simple(3, 1).unwrap();
        let s2 = Permutation::simple(3, 2).unwrap();
        assert_eq!(w("12", 3), s1.compose(&s2).unwrap());
        assert_eq!(s1.compose(&s2).unwrap().length(), 2);
        assert_eq!(w("12", 3).one_line(), vec![2, 3, 1]);
    }

    #[test]
    fn lengths_of_named_words() {
        assert_eq!(w("45231", 6).length(), 5);
        assert_eq!(w("345231", 6).length(), 6);
        assert_eq!(w("121454", 6).length(), 6);
        assert_eq!(Permutation::identity(5).length(), 0);
        assert_eq!(Permutation::longest(6).length(), 15);
    }

    #[test]
    fn descents_of_1343() {
        let y = w("1343", 6);
        let d = y.descents(Side::Right);
        assert!(d.contains(3));
        assert!(!d.contains(2));
        assert!(!d.contains(5));
        assert!(Permutation::identity(4).descents(Side::Right).is_empty());
        assert_eq!(Permutation::longest(4).descents(Side::Right), GenSet::full(4));
        assert_eq!(y.descents(Side::Left), y.inverse().descents(Side::Right));
    }

    #[test]
    fn support_examples() {
        assert!(Permutation::identity(6).support().is_empty());
        assert_eq!(w("45231", 6).support(), GenSet::full(6));
        assert_eq!(w("121454", 6).support(), GenSet::from_iter([1, 2, 4, 5]));
        assert_eq!(w("5231", 6).support(), GenSet::from_iter([1, 2, 3, 5]));
        assert_eq!(Permutation::longest(6).support(), GenSet::full(6));
    }

    #[test]
    fn reduced_word_round_trip() {
        for word in ["45231", "345231", "121454", "232432", "123454321", "e"] {
            let x = w(word, 6);
            let red = GeneratorWord::new(x.reduced_word());
            assert_eq!(red.evaluate(6).unwrap(), x);
            assert!(red.is_reduced(6).unwrap());
        }
        assert!(!GeneratorWord::new(vec![1, 1]).is_reduced(3).unwrap());
    }

    #[test]
    fn letters_distinct_is_word_independent() {
        assert!(Permutation::identity(4).letters_distinct());
        assert!(!Permutation::parse("121", 3).unwrap().letters_distinct());
        assert!(Permutation::parse("45231", 6).unwrap().letters_distinct());
        for n in 1..=5 {
            for w in all_permutations(n) {
                let words = w.reduced_words();
                let distinct = |word: &Vec<usize>| {
                    let mut seen = word.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    seen.len() == word.len()
                };
                assert!(words.iter().all(|word| distinct(word) == w.letters_distinct()), "{w}");
            }
        }
    }

    #[test]
    fn all_reduced_words() {
        assert_eq!(
            Permutation::longest(3).reduced_words(),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
        // staircase standard Young tableaux of shape (3,2,1)
        let words = Permutation::longest(4).reduced_words();
        assert_eq!(words.len(), 16);
        for word in &words {
            assert_eq!(
                GeneratorWord::new(word.clone()).evaluate(4).unwrap(),
                Permutation::longest(4)
            );
        }
        let x = w("45231", 6);
        let words = x.reduced_words();
        assert!(words.contains(&vec![4, 5, 2, 3, 1]));
        assert_eq!(words[0], x.reduced_word());
        assert_eq!(Permutation::identity(3).reduced_words(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(w("6,2,3,4,5,1", 6), w("123454321", 6));
        assert!(Permutation::parse("1,1,2", 3).is_err());
        assert!(Permutation::parse("7", 6).is_err());
        assert!(Permutation::parse("1,2", 3).is_err());
        assert_eq!(w("e", 4), Permutation::identity(4));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::RankMismatch { .. })));
    }
}
