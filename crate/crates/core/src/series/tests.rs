use super::*;
use crate::dend::{prec_comb, succ_comb, DecoratedTree};
use crate::zinbiel::dend_to_zinb;

const Z: Ring = Ring::Integers;

fn g(n: &str) -> Generator {
    Generator::named(n)
}

fn v(n: &str) -> DendElem {
    DendElem::generator(&g(n), Z)
}

fn sv(n: &str, max: usize) -> DendSeries {
    DendSeries::generator(&g(n), max, Z).unwrap()
}

#[test]
fn embeddings_and_linear_structure() {
    let one = DendSeries::unit(5, Z).unwrap();
    assert!(one.unit_coeff().is_one());
    assert!(one.components().all(|(_, c)| c.is_zero()));
    let s = one.add(&sv("x", 5)).unwrap();
    assert_eq!(s.component(1), &v("x"));
    assert_eq!(
        DendSeries::unit(3, Z).unwrap().neg().unit_coeff(),
        &Coeff::Small(-1)
    );
    assert!(DendSeries::zero(0, Z).is_err());
    // terms above N are dropped silently
    let big = v("x").power_prec(4).unwrap();
    assert!(DendSeries::from_elem(&big, 3).unwrap().is_zero());
}

#[test]
fn unit_product_rule() {
    let p = DendSeries::unit(4, Z).unwrap().add(&sv("x", 4)).unwrap();
    let q = DendSeries::unit(4, Z).unwrap().add(&sv("y", 4)).unwrap();
    let r = p.mul(&q).unwrap();
    assert!(r.unit_coeff().is_one());
    assert_eq!(r.component(1), &v("x").add(&v("y")).unwrap());
    assert_eq!(r.component(2), &v("x").mul(&v("y")).unwrap());
    assert_eq!(p.mul(&DendSeries::unit(4, Z).unwrap()).unwrap(), p);
    assert!(matches!(
        p.prec(&q),
        Err(AlgebraError::UndefinedUnitProduct(_))
    ));
    assert!(matches!(
        p.succ(&q),
        Err(AlgebraError::UndefinedUnitProduct(_))
    ));
    // x < 1 = x, 1 < x = 0, x > 1 = 0, 1 > x = x
    let one = DendSeries::unit(4, Z).unwrap();
    let x = sv("x", 4);
    assert_eq!(x.prec(&one).unwrap(), x);
    assert!(one.prec(&x).unwrap().is_zero());
    assert!(x.succ(&one).unwrap().is_zero());
    assert_eq!(one.succ(&x).unwrap(), x);
    assert!(p.mul(&DendSeries::unit(5, Z).unwrap()).is_err());
    assert!(p
        .mul(&DendSeries::unit(4, Ring::ModPrime(3)).unwrap())
        .is_err());
}

#[test]
fn exponentials_are_combs() {
    let ex = sv("x", 3).exp_left().unwrap();
    let ex_r = sv("x", 3).exp_right().unwrap();
    for n in 1..=3 {
        assert_eq!(ex.component(n), &prec_comb(&g("x"), n, Z).unwrap());
        assert_eq!(ex_r.component(n), &succ_comb(&g("x"), n, Z).unwrap());
    }
    let ex8 = sv("x", 8).exp_left().unwrap();
    assert_eq!(ex8.tau(), sv("x", 8).exp_right().unwrap());
    assert!(DendSeries::unit(3, Z).unwrap().exp_left().is_err());
}

#[test]
fn exponential_inverses() {
    let n = 10;
    let ex = sv("x", n).exp_left().unwrap();
    let e_neg = sv("x", n).neg().exp_right().unwrap();
    let one = DendSeries::unit(n, Z).unwrap();
    assert_eq!(e_neg.mul(&ex).unwrap(), one);
    assert_eq!(ex.mul(&e_neg).unwrap(), one);
}

#[test]
fn logarithm() {
    let n = 10;
    let x = sv("x", n);
    let log = x.log_nd().unwrap();
    assert_eq!(log.component(2), &v("x").prec(&v("x")).unwrap().neg());
    for d in 1..=8 {
        assert_eq!(
            log.component(d),
            &log_component_closed_form(&g("x"), d, Z).unwrap()
        );
    }
    let e_minus_one = x.exp_left().unwrap().augmentation();
    assert_eq!(e_minus_one.log_nd().unwrap(), x);
    assert_eq!(log.exp_left().unwrap().augmentation(), x);
}

#[test]
fn extraction() {
    let n = 6;
    let ex = exp_left_gen(&g("x"), n, Z).unwrap();
    assert_eq!(ex.bch_extract().unwrap(), sv("x", n));
    let p = ex.mul(&exp_left_gen(&g("y"), n, Z).unwrap()).unwrap();
    let z = p.bch_extract().unwrap();
    assert_eq!(z.component(2), &v("x").prelie(&v("y")).unwrap());
    assert!(sv("x", n).bch_extract().is_err());
    assert!(DendSeries::scalar(Coeff::Small(2), n, Z)
        .unwrap()
        .bch_extract()
        .is_err());
}

#[test]
fn first_functional_equation() {
    let n = 7;
    let (x, y) = (sv("x", n), sv("y", n));
    let lhs = x.exp_left().unwrap().mul(&y.exp_left().unwrap()).unwrap();
    let arg = conjugated_sum_left(&x, &y).unwrap();
    assert_eq!(arg.exp_left().unwrap(), lhs);
    assert_eq!(lhs.bch_extract().unwrap(), arg);
}

#[test]
fn second_functional_equation() {
    let n = 7;
    let (x, y) = (sv("x", n), sv("y", n));
    let lhs = x.exp_right().unwrap().mul(&y.exp_right().unwrap()).unwrap();
    let transported = conjugated_sum_right(&x, &y).unwrap();
    assert_eq!(transported.exp_right().unwrap(), lhs);
    let printed = conjugated_sum_right_printed(&x, &y).unwrap();
    eprintln!(
        "printed form first differs at degree {:?}",
        printed.exp_right().unwrap().first_difference(&lhs).unwrap()
    );
}

#[test]
fn obstruction_components_are_braces() {
    let (x, y) = (g("x"), g("y"));
    assert_eq!(
        h_component(2, &x, &y, Z).unwrap(),
        v("x").prelie(&v("y")).unwrap()
    );
    for n in 2..=6 {
        let b = DendElem::brace(&vec![v("x"); n - 1], &v("y")).unwrap();
        let h = h_component(n, &x, &y, Z).unwrap();
        assert_eq!(h, b, "n={n}");
        assert!(dend_to_zinb(&h).is_zero());
    }
    assert!(h_component(1, &x, &y, Z).is_err());
}

#[test]
fn one_variable_combs() {
    let x = g("x");
    let vx = v("x");
    assert_eq!(h_onevar(2, &x, Z).unwrap(), vx.prelie(&vx).unwrap());
    for n in 2..=7 {
        let h = h_onevar(n, &x, Z).unwrap();
        assert_eq!(
            h,
            comb_grafting_sum(n, &x, Z, CombSign::Corrected).unwrap(),
            "n={n}"
        );
        assert_eq!(
            h.neg(),
            comb_grafting_sum(n, &x, Z, CombSign::Printed).unwrap()
        );
    }
    // n = 3 by hand
    let x2p = vx.prec(&vx).unwrap();
    let x2s = vx.succ(&vx).unwrap();
    let expected = x2p
        .succ(&vx)
        .unwrap()
        .sub(&vx.succ(&vx).unwrap().prec(&vx).unwrap())
        .unwrap()
        .add(&vx.prec(&x2s).unwrap())
        .unwrap();
    assert_eq!(h_onevar(3, &x, Z).unwrap(), expected);
}

#[test]
fn one_variable_functional_equation() {
    let n = 8;
    let x = sv("x", n);
    let ex = x.exp_left().unwrap();
    let mut arg = x.scale(&Coeff::Small(2));
    for d in 2..=n {
        arg = arg
            .add(&DendSeries::from_elem(&h_onevar(d, &g("x"), Z).unwrap(), n).unwrap())
            .unwrap();
    }
    assert_eq!(arg.exp_left().unwrap(), ex.mul(&ex).unwrap());
}

#[test]
fn multilinear_obstruction() {
    let gens = crate::dend::indexed_generators("x", 2);
    assert_eq!(
        h_multilinear(&gens, Z).unwrap(),
        v("x1")
            .succ(&v("x2"))
            .unwrap()
            .sub(&v("x2").prec(&v("x1")).unwrap())
            .unwrap()
    );
    let gens = crate::dend::indexed_generators("x", 3);
    let (a, b, c) = (v("x1"), v("x2"), v("x3"));
    let expected = a
        .succ(&b.succ(&c).unwrap())
        .unwrap()
        .sub(&a.succ(&c.prec(&b).unwrap()).unwrap())
        .unwrap()
        .sub(&b.succ(&c).unwrap().prec(&a).unwrap())
        .unwrap()
        .add(&c.prec(&b).unwrap().prec(&a).unwrap())
        .unwrap();
    assert_eq!(h_multilinear(&gens, Z).unwrap(), expected);
    for n in 2..=5 {
        let gens = crate::dend::indexed_generators("x", n);
        let h = h_multilinear(&gens, Z).unwrap();
        assert_eq!(h, iterated_prelie(&gens, Z).unwrap(), "n={n}");
        assert_eq!(h, prelie_shuffle_sum(&gens, Z).unwrap(), "n={n}");
    }
}

#[test]
fn distinct_letter_filter_matches_full_computation() {
    let gens = crate::dend::indexed_generators("x", 3);
    let mut full = DendSeries::unit(3, Z).unwrap();
    for gg in &gens {
        full = full.mul(&exp_left_gen(gg, 3, Z).unwrap()).unwrap();
    }
    let h_full = full
        .bch_extract()
        .unwrap()
        .component(3)
        .multilinear_part(&gens);
    assert_eq!(h_full, h_multilinear(&gens, Z).unwrap());
}

#[test]
fn mod_p_extraction() {
    let r = Ring::mod_prime(3).unwrap();
    let (x, y) = (g("x"), g("y"));
    let h = h_component(4, &x, &y, r).unwrap();
    let b = DendElem::brace(
        &vec![DendElem::generator(&x, r); 3],
        &DendElem::generator(&y, r),
    )
    .unwrap();
    assert_eq!(h, b);
    assert!(h
        .terms()
        .all(|(_, c)| *c == Coeff::ONE || *c == Coeff::Small(2)));
}

#[test]
fn render_series() {
    let s = exp_left_gen(&g("x"), 2, Z).unwrap();
    assert_eq!(s.render(), "1 + x + (x < x)");
    let l = sv("x", 2).log_nd().unwrap();
    assert_eq!(l.render(), "x - (x < x)");
    let _ = DecoratedTree::new(crate::tree::right_comb(2).unwrap(), vec![g("x")]).unwrap();
}
