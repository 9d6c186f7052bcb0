use std::sync::Arc;

use klcellkit::coxeter::longest_element;
use klcellkit::{GenSet, HeckeAlgebra, KLTable, LaurentPolynomial};

fn algebra(n: usize) -> HeckeAlgebra {
    HeckeAlgebra::new(Arc::new(KLTable::new(n).unwrap()))
}

#[test]
fn rank_6_wall_crossing_factorizations() {
    let h = algebra(6);
    let g = h.group().clone();
    for (target, applied_first_to_last) in [("45231", [4, 5, 2, 3, 1].as_slice()), ("345231", &[3, 4, 5, 2, 3, 1])] {
        let w = g.parse(target).unwrap();
        let expected = h.kl_basis_element(w);
        assert_eq!(h.word_product_kl(applied_first_to_last).unwrap(), expected, "{target}");
        assert_eq!(
            h.generator_product(applied_first_to_last).unwrap(),
            expected,
            "{target}"
        );
        let reversed: Vec<usize> = applied_first_to_last.iter().rev().copied().collect();
        assert_eq!(
            h.generator_product(&reversed).unwrap(),
            h.kl_basis_element(g.inverse(w))
        );
    }
    assert_eq!(g.parse("345231").unwrap(), g.parse("321453").unwrap());
}

#[test]
fn longest_parabolic_squares() {
    for n in 2..=6 {
        let h = algebra(n);
        let g = h.group().clone();
        for bits in 0u32..1 << (n - 1) {
            let j = GenSet::from_bits(bits);
            let w0j = g.index_of(&longest_element(j, n)).unwrap();
            let levi: Vec<usize> = (0..g.order()).filter(|&w| g.support(w).is_subset(j)).collect();
            let b = h.kl_basis_element(w0j);
            let square = h.multiply(&b, &b).unwrap();
            let at_one = square.at_one();
            assert_eq!(at_one.len(), 1);
            assert_eq!(at_one[&w0j], levi.len() as i64, "n={n} J={bits:b}");
            let ell = g.length(w0j) as i32;
            let mut poincare = LaurentPolynomial::zero();
            for &w in &levi {
                poincare += &LaurentPolynomial::monomial(1, 2 * g.length(w) as i32 - ell);
            }
            assert_eq!(square.coeff(w0j), poincare);
        }
    }
}
