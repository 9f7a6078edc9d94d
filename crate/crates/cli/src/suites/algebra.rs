//! Axioms and structural contracts on basis tuples and seeded random tuples.

use dendexp_core::dend::indexed_generators;
use dendexp_core::zinbiel::dend_to_zinb;
use dendexp_core::{DendElem, DendMatrix, DendSeries, Result, Ring, ZinbElem};

use super::support::{
    basis_tuples, dend_basis, gens, random_elem, random_series, random_zinb, rng, zinb_basis, Tally,
};
use super::{Check, SuiteConfig};

const RANDOM_TUPLES: usize = 200;
const BASIS_CAP: usize = 5;

fn basis_cap(cfg: &SuiteConfig) -> usize {
    cfg.max_degree.min(BASIS_CAP)
}

/// Basis tuples over `{x, y}` of total degree at most the cap, then
/// random tuples over `{x, y, z}` with factors of degree at most 2.
fn dend_tuples(cfg: &SuiteConfig, k: usize, stream: &str) -> Result<Vec<Vec<DendElem>>> {
    let xy = gens(&["x", "y"]);
    let mut out = basis_tuples(k, basis_cap(cfg), |d| dend_basis(d, &xy, cfg.ring))?;
    let xyz = gens(&["x", "y", "z"]);
    let mut r = rng(cfg.seed, stream);
    for _ in 0..RANDOM_TUPLES {
        out.push(
            (0..k)
                .map(|_| random_elem(&mut r, &xyz, 2, cfg.ring))
                .collect::<Result<_>>()?,
        );
    }
    Ok(out)
}

fn zinb_tuples(cfg: &SuiteConfig, k: usize, stream: &str) -> Result<Vec<Vec<ZinbElem>>> {
    let xy = gens(&["x", "y"]);
    let mut out = basis_tuples(k, basis_cap(cfg), |d| zinb_basis(d, &xy, cfg.ring))?;
    let xyz = gens(&["x", "y", "z"]);
    let mut r = rng(cfg.seed, stream);
    for _ in 0..RANDOM_TUPLES {
        out.push(
            (0..k)
                .map(|_| random_zinb(&mut r, &xyz, 2, cfg.ring))
                .collect::<Result<_>>()?,
        );
    }
    Ok(out)
}

fn describe(cfg: &SuiteConfig) -> String {
    format!(
        "basis to total degree {} and {RANDOM_TUPLES} random",
        basis_cap(cfg)
    )
}

type Relation = fn(&DendElem, &DendElem, &DendElem) -> Result<(DendElem, DendElem)>;

fn first_relation(a: &DendElem, b: &DendElem, c: &DendElem) -> Result<(DendElem, DendElem)> {
    Ok((a.prec(b)?.prec(c)?, a.prec(&b.mul(c)?)?))
}

fn second_relation(a: &DendElem, b: &DendElem, c: &DendElem) -> Result<(DendElem, DendElem)> {
    Ok((a.succ(b)?.prec(c)?, a.succ(&b.prec(c)?)?))
}

fn third_relation(a: &DendElem, b: &DendElem, c: &DendElem) -> Result<(DendElem, DendElem)> {
    Ok((a.mul(b)?.succ(c)?, a.succ(&b.succ(c)?)?))
}

const RELATIONS: [(&str, Relation); 3] = [
    ("(a < b) < c = a < (b * c)", first_relation),
    ("(a > b) < c = a > (b < c)", second_relation),
    ("(a * b) > c = a > (b > c)", third_relation),
];

pub(super) fn dend_axioms(_: &SuiteConfig) -> Vec<Check> {
    let mut checks: Vec<Check> = RELATIONS
        .iter()
        .map(|&(name, rel)| {
            Check::new(name, move |cfg| {
                let mut t = Tally::new();
                for abc in dend_tuples(cfg, 3, "dend-axioms")? {
                    let (l, r) = rel(&abc[0], &abc[1], &abc[2])?;
                    t.elems(&l, &r)?;
                }
                Ok(t.finish(describe(cfg)))
            })
        })
        .collect();
    checks.push(Check::new("(a * b) * c = a * (b * c)", |cfg| {
        let mut t = Tally::new();
        for abc in dend_tuples(cfg, 3, "dend-axioms")? {
            let (a, b, c) = (&abc[0], &abc[1], &abc[2]);
            t.elems(&a.mul(b)?.mul(c)?, &a.mul(&b.mul(c)?)?)?;
        }
        Ok(t.finish(describe(cfg)))
    }));
    checks
}

pub(super) fn zinb_axiom(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("(a < b) < c = a < (b < c + c < b)", |cfg| {
            let mut t = Tally::new();
            for abc in zinb_tuples(cfg, 3, "zinb-axiom")? {
                let (a, b, c) = (&abc[0], &abc[1], &abc[2]);
                t.zinb(&a.prec(b)?.prec(c)?, &a.prec(&b.mul(c)?)?)?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("a b = b a", |cfg| {
            let mut t = Tally::new();
            for ab in zinb_tuples(cfg, 2, "zinb-axiom/commutative")? {
                t.zinb(&ab[0].mul(&ab[1])?, &ab[1].mul(&ab[0])?)?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("(a b) c = a (b c)", |cfg| {
            let mut t = Tally::new();
            for abc in zinb_tuples(cfg, 3, "zinb-axiom")? {
                let (a, b, c) = (&abc[0], &abc[1], &abc[2]);
                t.zinb(&a.mul(b)?.mul(c)?, &a.mul(&b.mul(c)?)?)?;
            }
            Ok(t.finish(describe(cfg)))
        }),
    ]
}

fn associator(a: &DendElem, b: &DendElem, c: &DendElem) -> Result<DendElem> {
    a.prelie(b)?.prelie(c)?.sub(&a.prelie(&b.prelie(c)?)?)
}

pub(super) fn prelie_brace(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new(
            "pre-Lie associator is symmetric in its first two arguments",
            |cfg| {
                let mut t = Tally::new();
                for abc in dend_tuples(cfg, 3, "prelie-brace")? {
                    let (a, b, c) = (&abc[0], &abc[1], &abc[2]);
                    t.elems(&associator(a, b, c)?, &associator(b, a, c)?)?;
                }
                Ok(t.finish(describe(cfg)))
            },
        ),
        Check::new("brace(a; b) = prelie(a, b)", |cfg| {
            let mut t = Tally::new();
            for ab in dend_tuples(cfg, 2, "prelie-brace/one")? {
                t.elems(&DendElem::brace(&ab[..1], &ab[1])?, &ab[0].prelie(&ab[1])?)?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("braces vanish in the Zinbiel quotient", |cfg| {
            let cap = cfg.max_degree.min(7);
            let mut t = Tally::new();
            let zero = ZinbElem::zero(cfg.ring);
            let g = |n: &dendexp_core::Generator| DendElem::generator(n, cfg.ring);
            let y = g(&dendexp_core::Generator::named("y"));
            let x = g(&dendexp_core::Generator::named("x"));
            for k in 1..cap {
                let distinct: Vec<DendElem> = indexed_generators("x", k).iter().map(g).collect();
                t.zinb(&dend_to_zinb(&DendElem::brace(&distinct, &y)?), &zero)?;
                t.zinb(
                    &dend_to_zinb(&DendElem::brace(&vec![x.clone(); k], &y)?),
                    &zero,
                )?;
            }
            Ok(t.finish(format!("brace arity 1..{}", cap - 1)))
        }),
    ]
}

pub(super) fn quotient_morphism(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("phi(a < b) = phi(a) < phi(b)", |cfg| {
            let mut t = Tally::new();
            for ab in dend_tuples(cfg, 2, "quotient-morphism")? {
                let (a, b) = (&ab[0], &ab[1]);
                t.zinb(
                    &dend_to_zinb(&a.prec(b)?),
                    &dend_to_zinb(a).prec(&dend_to_zinb(b))?,
                )?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("phi(a > b) = phi(b) < phi(a)", |cfg| {
            let mut t = Tally::new();
            for ab in dend_tuples(cfg, 2, "quotient-morphism")? {
                let (a, b) = (&ab[0], &ab[1]);
                t.zinb(
                    &dend_to_zinb(&a.succ(b)?),
                    &dend_to_zinb(b).prec(&dend_to_zinb(a))?,
                )?;
            }
            Ok(t.finish(describe(cfg)))
        }),
    ]
}

pub(super) fn tau_contract(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("tau(a < b) = tau(b) > tau(a)", |cfg| {
            let mut t = Tally::new();
            for ab in dend_tuples(cfg, 2, "tau-contract")? {
                let (a, b) = (&ab[0], &ab[1]);
                t.elems(&a.prec(b)?.tau(), &b.tau().succ(&a.tau())?)?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("tau(a > b) = tau(b) < tau(a)", |cfg| {
            let mut t = Tally::new();
            for ab in dend_tuples(cfg, 2, "tau-contract")? {
                let (a, b) = (&ab[0], &ab[1]);
                t.elems(&a.succ(b)?.tau(), &b.tau().prec(&a.tau())?)?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("tau(tau(a)) = a", |cfg| {
            let mut t = Tally::new();
            for a in dend_tuples(cfg, 1, "tau-contract/involution")? {
                t.elems(&a[0].tau().tau(), &a[0])?;
            }
            Ok(t.finish(describe(cfg)))
        }),
        Check::new("tau(e(z)) = e'(tau(z))", |cfg| {
            let n = cfg.max_degree.min(6);
            let xy = gens(&["x", "y"]);
            let mut r = rng(cfg.seed, "tau-contract/exp");
            let mut t = Tally::new();
            for _ in 0..20 {
                let z: DendSeries = random_series(&mut r, &xy, n, cfg.ring)?;
                t.series(&z.exp_left()?.tau(), &z.tau().exp_right()?)?;
            }
            Ok(t.finish(format!("20 random series to degree {n}")))
        }),
    ]
}

const MATRIX_SAMPLES: usize = 50;

fn random_matrix(
    r: &mut rand_chacha::ChaCha8Rng,
    max_degree: usize,
    ring: Ring,
) -> Result<DendMatrix> {
    use rand::Rng;
    let xy = gens(&["x", "y"]);
    let mut rows = Vec::with_capacity(2);
    for _ in 0..2 {
        let mut row = Vec::with_capacity(2);
        for _ in 0..2 {
            // about one entry in four is zero
            row.push(if r.gen_range(0..4) == 0 {
                DendElem::zero(ring)
            } else {
                random_elem(r, &xy, max_degree, ring)?
            });
        }
        rows.push(row);
    }
    DendMatrix::from_rows(rows, ring)
}

pub(super) fn matrix_axioms(_: &SuiteConfig) -> Vec<Check> {
    type MatrixRelation =
        fn(&DendMatrix, &DendMatrix, &DendMatrix) -> Result<(DendMatrix, DendMatrix)>;
    let relations: [(&str, MatrixRelation); 3] = [
        ("(A < B) < C = A < (B * C)", |a, b, c| {
            Ok((a.prec(b)?.prec(c)?, a.prec(&b.mul(c)?)?))
        }),
        ("(A > B) < C = A > (B < C)", |a, b, c| {
            Ok((a.succ(b)?.prec(c)?, a.succ(&b.prec(c)?)?))
        }),
        ("(A * B) > C = A > (B > C)", |a, b, c| {
            Ok((a.mul(b)?.succ(c)?, a.succ(&b.succ(c)?)?))
        }),
    ];
    relations
        .into_iter()
        .map(|(name, rel)| {
            Check::new(name, move |cfg| {
                let d = cfg.max_degree.min(2);
                let mut r = rng(cfg.seed, "matrix-axioms");
                let mut t = Tally::new();
                for _ in 0..MATRIX_SAMPLES {
                    let a = random_matrix(&mut r, d, cfg.ring)?;
                    let b = random_matrix(&mut r, d, cfg.ring)?;
                    let c = random_matrix(&mut r, d, cfg.ring)?;
                    let (l, rhs) = rel(&a, &b, &c)?;
                    for i in 0..2 {
                        for j in 0..2 {
                            t.elems(l.get(i, j), rhs.get(i, j))?;
                        }
                    }
                }
                Ok(t.finish(format!(
                    "{MATRIX_SAMPLES} random 2x2 triples, entries of degree at most {d}"
                )))
            })
        })
        .collect()
}
