use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, in reverse lexicographic order (dominance
    /// maximum `(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Dominance order: `self <= other` iff every prefix sum of `self` is at
    /// most the matching prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.parts.len().max(other.parts.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hook lengths in row-major order.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.parts[j] - i - 1) + 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux, `n! / prod(hooks)`.
    pub fn hook_count(&self) -> u64 {
        let n = self.size() as u64;
        let factorial: u128 = (1..=n as u128).product();
        let prod: u128 = self.hooks().iter().map(|&h| h as u128).product();
        (factorial / prod) as u64
    }

    /// `sum_i binom(conj_i, 2)`, Lusztig's a-value of the two-sided cell with
    /// this shape.
    pub fn a_value(&self) -> usize {
        self.conjugate()
            .parts
            .iter()
            .map(|&c| c * c.saturating_sub(1) / 2)
            .sum()
    }
}

impl fmt::Display for Partition {
    /// Exponential notation, e.g. `(3,2,1)`, `(3^2)`, `(2,1^4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => groups.push((p, 1)),
            }
        }
        let items: Vec<String> = groups
            .iter()
            .map(|&(p, k)| if k == 1 { p.to_string() } else { format!("{p}^{k}") })
            .collect();
        write!(f, "({})", items.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
