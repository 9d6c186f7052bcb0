//! Robinson-Schensted row insertion.

use serde::Serialize;

use crate::coxeter::{Partition, Permutation};

/// A standard tableau as rows of 1-based entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau(pub Vec<Vec<usize>>);

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.0.iter().map(Vec::len).collect()).expect("rows weakly decrease")
    }
}

/// Insertion tableau `P` and recording tableau `Q` of the one-line word
/// `w(1) w(2) ... w(n)`.
pub fn robinson_schensted(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, value) in w.one_line().into_iter().enumerate() {
        let mut carry = value;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&a| a > carry) {
                Some(pos) => {
                    carry = std::mem::replace(&mut p[row][pos], carry);
                    row += 1;
                }
                None => {
                    p[row].push(carry);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (Tableau(p), Tableau(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_swaps_tableaux() {
        let w = Permutation::from_one_line(&[4, 1, 5, 2, 6, 3]).unwrap();
        let (p, q) = robinson_schensted(&w);
        let (pi, qi) = robinson_schensted(&w.inverse());
        assert_eq!(p, qi);
        assert_eq!(q, pi);
    }

    #[test]
    fn shapes_of_extremes() {
        let (p, _) = robinson_schensted(&Permutation::identity(5));
        assert_eq!(p.shape().parts(), &[5]);
        let (p, _) = robinson_schensted(&Permutation::longest(5));
        assert_eq!(p.shape().parts(), &[1, 1, 1, 1, 1]);
        let w = Permutation::from_one_line(&[6, 2, 3, 4, 5, 1]).unwrap();
        assert_eq!(robinson_schensted(&w).0.shape().parts(), &[4, 1, 1]);
    }
}
