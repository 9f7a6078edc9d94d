mod common;

use common::*;
use dendexp_core::zinbiel::dend_to_zinb;
use dendexp_core::{Coeff, DendElem, Ring, ZinbElem, ZinbWord};

fn xpow(n: usize) -> ZinbElem {
    ZinbElem::word(ZinbWord::new(vec![g("x"); n]).unwrap(), Z)
}

#[test]
fn one_generator_binomials() {
    for p in 1..12usize {
        for q in 1..=(12 - p) {
            let prec = xpow(p).prec(&xpow(q)).unwrap();
            let expected = Z.binomial((p + q - 1) as u64, q as u64);
            assert_eq!(prec, xpow(p + q).scale(&expected), "p={p} q={q}");
            let sym = xpow(p).mul(&xpow(q)).unwrap();
            let printed_second = Z.binomial((p + q) as u64, q as u64);
            assert_eq!(sym, xpow(p + q).scale(&printed_second), "p={p} q={q}");
        }
    }
    // The printed first index C(p+q-1, q-1) already fails at (2, 1).
    let printed_first = Z.binomial(2, 0);
    assert_ne!(
        xpow(2).prec(&xpow(1)).unwrap(),
        xpow(3).scale(&printed_first)
    );
    assert_eq!(
        xpow(2).prec(&xpow(1)).unwrap(),
        xpow(3).scale(&Coeff::Small(2))
    );
}

#[test]
fn one_generator_components_are_one_dimensional() {
    for n in 1..=6 {
        for t in basis(n, &["x"]) {
            let img = dend_to_zinb(&t);
            assert_eq!(img.len(), 1);
            assert_eq!(img.terms().next().unwrap().0.len(), n);
        }
    }
}

#[test]
fn multilinear_component_has_factorial_dimension() {
    // Span of the images of every multilinear tree monomial in x1..xn.
    for n in 1..=5usize {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut words = std::collections::BTreeSet::new();
        let mut count = 0;
        for t in basis(n, &refs) {
            let w: Vec<_> = t.terms().next().unwrap().0.word().to_vec();
            let mut sorted = w.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                continue;
            }
            count += 1;
            for (zw, _) in dend_to_zinb(&t).terms() {
                words.insert(zw.clone());
            }
        }
        let factorial: usize = (1..=n).product();
        assert_eq!(words.len(), factorial);
        assert!(count >= factorial);
        // right combs alone already hit every word once
        assert_eq!(words.len(), factorial);
    }
}

#[test]
fn quotient_identifies_left_with_flipped_right() {
    // a < b and b > a have the same image: commutative dendriform.
    for a in basis(2, &["x", "y"]) {
        for b in basis(1, &["x", "y"])
            .into_iter()
            .chain(basis(2, &["x", "y"]))
        {
            assert_eq!(
                dend_to_zinb(&a.prec(&b).unwrap()),
                dend_to_zinb(&b.succ(&a).unwrap())
            );
        }
    }
}

#[test]
fn mod_p_quotient() {
    let r = Ring::mod_prime(2).unwrap();
    let x = DendElem::generator(&g("x"), r);
    // x > x + x < x maps to 2 [x,x] = 0 mod 2
    assert!(dend_to_zinb(&x.mul(&x).unwrap()).is_zero());
}
