mod common;

use common::*;
use dendexp_core::tree::catalan;
use dendexp_core::{enumerate_trees, DendElem, Tree};

fn axioms_hold(a: &DendElem, b: &DendElem, c: &DendElem) -> bool {
    let ab_p = a.prec(b).unwrap();
    let ab_s = a.succ(b).unwrap();
    let bc_p = b.prec(c).unwrap();
    let bc_s = b.succ(c).unwrap();
    let first = ab_p.prec(c).unwrap() == a.prec(&bc_p.add(&bc_s).unwrap()).unwrap();
    let second = ab_s.prec(c).unwrap() == a.succ(&bc_p).unwrap();
    let third = ab_p.add(&ab_s).unwrap().succ(c).unwrap() == a.succ(&bc_s).unwrap();
    first && second && third
}

#[test]
fn axioms_on_all_basis_triples_to_degree_six() {
    let letters = ["x", "y", "z"];
    let bases: Vec<Vec<DendElem>> = (0..=4)
        .map(|d| if d == 0 { vec![] } else { basis(d, &letters) })
        .collect();
    let mut checked = 0usize;
    let mut expected = 0usize;
    for da in 1..=4 {
        for db in 1..=4 {
            for dc in 1..=4 {
                if da + db + dc > 6 {
                    continue;
                }
                expected += bases[da].len() * bases[db].len() * bases[dc].len();
                for a in &bases[da] {
                    for b in &bases[db] {
                        for c in &bases[dc] {
                            assert!(axioms_hold(a, b, c), "{a} | {b} | {c}");
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(checked, expected);
    assert_eq!(expected, 87_264);
}

#[test]
fn one_generator_span_has_catalan_dimension() {
    // Build degree-n products from the full degree-<n basis and compare
    // the rank of their span with the number of trees.
    let x = v("x");
    let mut basis_by_degree: Vec<Vec<DendElem>> = vec![vec![], vec![x.clone()]];
    for n in 2..=8 {
        let mut products = Vec::new();
        for i in 1..n {
            for a in &basis_by_degree[i] {
                for b in &basis_by_degree[n - i] {
                    products.push(a.prec(b).unwrap());
                    products.push(a.succ(b).unwrap());
                }
            }
        }
        assert_eq!(
            rank_mod_p(&products, 1_000_003) as u128,
            catalan(n),
            "n={n}"
        );
        basis_by_degree.push(basis(n, &["x"]));
    }
}

#[test]
fn power_is_sum_of_tree_monomials() {
    let x = v("x");
    for n in 1..=8 {
        let sum = enumerate_trees(n + 1)
            .unwrap()
            .iter()
            .map(|t| dendexp_core::dend::tree_power(&g("x"), t.clone(), Z).unwrap())
            .fold(DendElem::zero(Z), |acc, m| acc.add(&m).unwrap());
        assert_eq!(x.power_assoc(n).unwrap(), sum);
    }
}

#[test]
fn tau_on_full_low_degree_basis() {
    for d in 1..=5 {
        for a in basis(d, &["x", "y"]) {
            assert_eq!(a.tau().tau(), a);
        }
    }
    let t: Tree = "((||)(|(||)))".parse().unwrap();
    let a = DendElem::monomial(t, vec![g("a"), g("b"), g("c"), g("d")], Z).unwrap();
    let m = a.tau();
    let (shape, word) = m
        .terms()
        .next()
        .map(|(t, _)| (t.shape().encode(), t.word().to_vec()))
        .unwrap();
    assert_eq!(shape, "(((||)|)(||))");
    assert_eq!(word, vec![g("d"), g("c"), g("b"), g("a")]);
}
