//! Exponential, logarithm and obstruction identities on truncated series.

use dendexp_core::dend::indexed_generators;
use dendexp_core::series::{
    comb_grafting_sum, conjugated_sum_left, conjugated_sum_right, conjugated_sum_right_printed,
    h_multilinear, iterated_prelie, log_component_closed_form, prelie_shuffle_sum, CombSign,
};
use dendexp_core::zinbiel::dend_to_zinb;
use dendexp_core::{Coeff, DendElem, DendSeries, Generator, Result, Ring, ZinbElem};

use super::support::{gens, random_series, rng, Tally};
use super::{Check, SuiteConfig};

const RANDOM_SERIES: usize = 10;

fn var(name: &str, cfg: &SuiteConfig, n: usize) -> Result<DendSeries> {
    DendSeries::generator(&Generator::named(name), n, cfg.ring)
}

fn up_to(cfg: &SuiteConfig) -> String {
    format!("degrees 1..={}", cfg.max_degree)
}

pub(super) fn lemma_2_2(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("e'(-x) e(x) = 1", |cfg| {
            let x = var("x", cfg, cfg.max_degree)?;
            let mut t = Tally::new();
            t.series(
                &x.neg().exp_right()?.mul(&x.exp_left()?)?,
                &DendSeries::unit(cfg.max_degree, cfg.ring)?,
            )?;
            Ok(t.finish(up_to(cfg)))
        }),
        Check::new("e(x) e'(-x) = 1", |cfg| {
            let x = var("x", cfg, cfg.max_degree)?;
            let mut t = Tally::new();
            t.series(
                &x.exp_left()?.mul(&x.neg().exp_right()?)?,
                &DendSeries::unit(cfg.max_degree, cfg.ring)?,
            )?;
            Ok(t.finish(up_to(cfg)))
        }),
        Check::new("e'(-z) e(z) = 1 = e(z) e'(-z) for random z", |cfg| {
            let n = cfg.max_degree.min(6);
            let one = DendSeries::unit(n, cfg.ring)?;
            let mut r = rng(cfg.seed, "lemma-2-2");
            let mut t = Tally::new();
            for _ in 0..RANDOM_SERIES {
                let z = random_series(&mut r, &gens(&["x", "y"]), n, cfg.ring)?;
                let (e, e1) = (z.exp_left()?, z.neg().exp_right()?);
                t.series(&e1.mul(&e)?, &one)?;
                t.series(&e.mul(&e1)?, &one)?;
            }
            Ok(t.finish(format!("{RANDOM_SERIES} random series to degree {n}")))
        }),
        Check::new("x^{>i} > x^{<j} = x^{>(i+1)} < x^{<(j-1)}", |cfg| {
            let x = DendElem::generator(&Generator::named("x"), cfg.ring);
            let mut t = Tally::new();
            for i in 1..cfg.max_degree {
                for j in 2..=cfg.max_degree - i {
                    let lhs = x.power_succ(i)?.succ(&x.power_prec(j)?)?;
                    let rhs = x.power_succ(i + 1)?.prec(&x.power_prec(j - 1)?)?;
                    t.elems(&lhs, &rhs)?;
                }
            }
            Ok(t.finish(format!("i + j <= {}", cfg.max_degree)))
        }),
    ]
}

pub(super) fn prop_2_3(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("L(e(x) - 1) = x", |cfg| {
            let x = var("x", cfg, cfg.max_degree)?;
            let mut t = Tally::new();
            t.series(&x.exp_left()?.augmentation().log_nd()?, &x)?;
            Ok(t.finish(up_to(cfg)))
        }),
        Check::new("e(L(x)) - 1 = x", |cfg| {
            let x = var("x", cfg, cfg.max_degree)?;
            let mut t = Tally::new();
            t.series(&x.log_nd()?.exp_left()?.augmentation(), &x)?;
            Ok(t.finish(up_to(cfg)))
        }),
        Check::new("degree n part of L(x) = (-1)^(n-1) x < x^(n-1)", |cfg| {
            let cap = cfg.max_degree.min(8);
            let log = var("x", cfg, cap)?.log_nd()?;
            let mut t = Tally::new();
            for n in 1..=cap {
                t.elems(
                    log.component(n),
                    &log_component_closed_form(&Generator::named("x"), n, cfg.ring)?,
                )?;
            }
            Ok(t.finish(format!("n <= {cap}")))
        }),
        Check::new(
            "extract(e(z)) = z and e(extract(1 + u)) = 1 + u for random z, u",
            |cfg| {
                let n = cfg.max_degree.min(6);
                let mut r = rng(cfg.seed, "prop-2-3");
                let xy = gens(&["x", "y"]);
                let mut t = Tally::new();
                for _ in 0..RANDOM_SERIES {
                    let z = random_series(&mut r, &xy, n, cfg.ring)?;
                    t.series(&z.exp_left()?.bch_extract()?, &z)?;
                    let u = random_series(&mut r, &xy, n, cfg.ring)?.with_unit(Coeff::ONE);
                    t.series(&u.bch_extract()?.exp_left()?, &u)?;
                }
                Ok(t.finish(format!("{RANDOM_SERIES} random pairs to degree {n}")))
            },
        ),
    ]
}

fn xy_series(cfg: &SuiteConfig) -> Result<(DendSeries, DendSeries)> {
    Ok((
        var("x", cfg, cfg.max_degree)?,
        var("y", cfg, cfg.max_degree)?,
    ))
}

pub(super) fn thm_3_1(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("e(x) e(y) = e(x + e(x) > y < e'(-x))", |cfg| {
            let (x, y) = xy_series(cfg)?;
            let mut t = Tally::new();
            t.series(
                &x.exp_left()?.mul(&y.exp_left()?)?,
                &conjugated_sum_left(&x, &y)?.exp_left()?,
            )?;
            Ok(t.finish(up_to(cfg)))
        }),
        Check::expected_fail(
            "e'(x) e'(y) = e'(e'(-y) > x < e'(y) + y), as printed",
            |cfg| {
                let (x, y) = xy_series(cfg)?;
                let mut t = Tally::new();
                t.series(
                    &x.exp_right()?.mul(&y.exp_right()?)?,
                    &conjugated_sum_right_printed(&x, &y)?.exp_right()?,
                )?;
                Ok(t.finish(format!(
                    "{}; the left conjugating factor must be e(-y), the inverse of e'(y)",
                    up_to(cfg)
                )))
            },
        ),
        Check::new("e'(x) e'(y) = e'(e(-y) > x < e'(y) + y)", |cfg| {
            let (x, y) = xy_series(cfg)?;
            let mut t = Tally::new();
            t.series(
                &x.exp_right()?.mul(&y.exp_right()?)?,
                &conjugated_sum_right(&x, &y)?.exp_right()?,
            )?;
            Ok(t.finish(up_to(cfg)))
        }),
    ]
}

/// Components `2..=cap` of `extract(e(x) e(y))`.
fn obstructions(x: &str, y: &str, cap: usize, ring: Ring) -> Result<Vec<DendElem>> {
    let ex = DendSeries::generator(&Generator::named(x), cap, ring)?.exp_left()?;
    let ey = DendSeries::generator(&Generator::named(y), cap, ring)?.exp_left()?;
    let z = ex.mul(&ey)?.bch_extract()?;
    Ok((2..=cap).map(|n| z.component(n).clone()).collect())
}

fn unit_coefficient(c: &Coeff, ring: Ring) -> bool {
    let c = ring.normalize(c.clone());
    c == ring.from_i64(1) || c == ring.from_i64(-1)
}

fn y_degree(t: &dendexp_core::DecoratedTree) -> usize {
    t.word().iter().filter(|g| g.name() == "y").count()
}

pub(super) fn cor_3_2(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("H_n(x, y) = brace(x, ..., x; y)", |cfg| {
            let cap = cfg.max_degree.min(7);
            let x = DendElem::generator(&Generator::named("x"), cfg.ring);
            let y = DendElem::generator(&Generator::named("y"), cfg.ring);
            let mut t = Tally::new();
            for (k, h) in obstructions("x", "y", cap, cfg.ring)?.iter().enumerate() {
                let n = k + 2;
                t.elems(h, &DendElem::brace(&vec![x.clone(); n - 1], &y)?)?;
            }
            Ok(t.finish(format!("2 <= n <= {cap}")))
        }),
        Check::new(
            "H_n(x, y) has coefficients +1 and -1 and y-degree 1",
            |cfg| {
                let cap = cfg.max_degree.min(7);
                let mut t = Tally::new();
                for h in obstructions("x", "y", cap, cfg.ring)? {
                    for (term, c) in h.terms() {
                        let ok = unit_coefficient(c, cfg.ring) && y_degree(term) == 1;
                        t.check(ok, term.degree(), || format!("{c}*{}", term.render()));
                    }
                }
                Ok(t.finish(format!("2 <= n <= {cap}")))
            },
        ),
    ]
}

fn comb_check(sign: CombSign) -> impl Fn(&SuiteConfig) -> Result<super::Outcome> + Send + Sync {
    move |cfg| {
        let cap = cfg.max_degree.min(8);
        let x = Generator::named("x");
        let mut t = Tally::new();
        for (k, h) in obstructions("x", "x", cap, cfg.ring)?.iter().enumerate() {
            t.elems(h, &comb_grafting_sum(k + 2, &x, cfg.ring, sign)?)?;
        }
        Ok(t.finish(format!("2 <= n <= {cap}")))
    }
}

pub(super) fn cor_3_4(cfg: &SuiteConfig) -> Vec<Check> {
    let corrected = Check::new(
        "H_n(x, x) = sum (-1)^(j-1) (rc^i v lc^j)(x, ..., x)",
        comb_check(CombSign::Corrected),
    );
    let printed = if cfg.ring.characteristic() == 2 {
        // the two signs agree
        Check::new(
            "H_n(x, x) with the printed sign (-1)^j, equal in characteristic 2",
            comb_check(CombSign::Printed),
        )
    } else {
        Check::expected_fail(
            "H_n(x, x) with the printed sign (-1)^j",
            comb_check(CombSign::Printed),
        )
    };
    vec![corrected, printed]
}

pub(super) fn cor_3_4_literal_sign(_: &SuiteConfig) -> Vec<Check> {
    vec![Check::new(
        "H_n(x, x) = sum (-1)^j (rc^i v lc^j)(x, ..., x)",
        comb_check(CombSign::Printed),
    )]
}

pub(super) fn prop_3_6(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new(
            "multilinear H_n(x_1, ..., x_n) = {x_1, {x_2, ... {x_(n-1), x_n}}}",
            |cfg| {
                let cap = cfg.max_degree.min(6);
                let mut t = Tally::new();
                for n in 2..=cap {
                    let xs = indexed_generators("x", n);
                    t.elems(
                        &h_multilinear(&xs, cfg.ring)?,
                        &iterated_prelie(&xs, cfg.ring)?,
                    )?;
                }
                Ok(t.finish(format!("2 <= n <= {cap}")))
            },
        ),
        Check::new(
            "{x_1, {x_2, ... {x_(n-1), x_n}}} = signed shuffle sum",
            |cfg| {
                let cap = cfg.max_degree.min(6);
                let mut t = Tally::new();
                for n in 2..=cap {
                    let xs = indexed_generators("x", n);
                    t.elems(
                        &iterated_prelie(&xs, cfg.ring)?,
                        &prelie_shuffle_sum(&xs, cfg.ring)?,
                    )?;
                }
                Ok(t.finish(format!("2 <= n <= {cap}")))
            },
        ),
    ]
}

pub(super) fn zinbiel_additivity(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("phi(e(x) e(y) - e(x + y)) = 0", |cfg| {
            let cap = cfg.max_degree.min(7);
            let x = var("x", cfg, cap)?;
            let y = var("y", cfg, cap)?;
            let diff = x
                .exp_left()?
                .mul(&y.exp_left()?)?
                .sub(&x.add(&y)?.exp_left()?)?;
            let zero = ZinbElem::zero(cfg.ring);
            let mut t = Tally::new();
            for (_, c) in diff.components() {
                t.zinb(&dend_to_zinb(c), &zero)?;
            }
            Ok(t.finish(format!("degrees 1..={cap}")))
        }),
        Check::new("phi(H_n(x, y)) = 0", |cfg| {
            let cap = cfg.max_degree.min(7);
            let zero = ZinbElem::zero(cfg.ring);
            let mut t = Tally::new();
            for h in obstructions("x", "y", cap, cfg.ring)? {
                t.zinb(&dend_to_zinb(&h), &zero)?;
            }
            Ok(t.finish(format!("2 <= n <= {cap}")))
        }),
    ]
}

pub(super) fn y_linearity(_: &SuiteConfig) -> Vec<Check> {
    vec![Check::new(
        "extract(e(x) e(y)) - x is linear in y with coefficients +1 and -1",
        |cfg| {
            let cap = cfg.max_degree.min(8);
            let x = var("x", cfg, cap)?;
            let y = var("y", cfg, cap)?;
            let rest = x.exp_left()?.mul(&y.exp_left()?)?.bch_extract()?.sub(&x)?;
            let mut t = Tally::new();
            for (_, c) in rest.components() {
                for (term, k) in c.terms() {
                    let ok = unit_coefficient(k, cfg.ring) && y_degree(term) == 1;
                    t.check(ok, term.degree(), || format!("{k}*{}", term.render()));
                }
            }
            Ok(t.finish(format!("degrees 1..={cap}")))
        },
    )]
}
