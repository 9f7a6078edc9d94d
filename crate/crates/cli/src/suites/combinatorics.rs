//! One-generator combinatorics: tree powers, quotient fibers, Zinbiel
//! binomials and the characteristic p logarithm.

use dendexp_core::charp::{compose_check, CharPSeries};
use dendexp_core::dend::tree_power;
use dendexp_core::zinbiel::phi_fiber_count;
use dendexp_core::{enumerate_trees, Coeff, DendElem, Generator, Result, Ring, Tree, ZinbElem};

use super::support::Tally;
use super::{Check, SuiteConfig};

pub(super) fn power_sum(_: &SuiteConfig) -> Vec<Check> {
    vec![Check::new("x^n = sum over t in PBT_(n+1) of x^t", |cfg| {
        let cap = cfg.max_degree.min(8);
        let x = Generator::named("x");
        let xe = DendElem::generator(&x, cfg.ring);
        let mut t = Tally::new();
        for n in 1..=cap {
            let mut sum = DendElem::zero(cfg.ring);
            for shape in enumerate_trees(n + 1)?.iter() {
                sum = sum.add(&tree_power(&x, shape.clone(), cfg.ring)?)?;
            }
            t.elems(&xe.power_assoc(n)?, &sum)?;
        }
        Ok(t.finish(format!("n <= {cap}")))
    })]
}

/// Number of internal vertices below and including each internal vertex.
fn subtree_sizes(t: &Tree, out: &mut Vec<u64>) -> u64 {
    match t.split() {
        None => 0,
        Some((l, r)) => {
            let s = 1 + subtree_sizes(l, out) + subtree_sizes(r, out);
            out.push(s);
            s
        }
    }
}

/// Orderings of the vertices with every vertex before its descendants:
/// `n! / prod of subtree sizes`. Exact for `n <= 20`.
fn heap_orderings(t: &Tree) -> Coeff {
    let mut sizes = Vec::new();
    subtree_sizes(t, &mut sizes);
    let n = t.degree() as u64;
    let num: u64 = (1..=n).product();
    let den: u64 = sizes.iter().product();
    Coeff::from(num / den)
}

pub(super) fn fibers(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new("sum over t in PBT_(n+1) of #phi^-1(t) = n!", |cfg| {
            let cap = cfg.max_degree.min(8);
            let mut t = Tally::new();
            for n in 1..=cap {
                let mut total = Coeff::ZERO;
                for shape in enumerate_trees(n + 1)?.iter() {
                    total = total.add(&phi_fiber_count(shape)?);
                }
                let expected = Ring::Integers.factorial(n as u64);
                t.check(total == expected, n, || {
                    format!("sum {total}, expected {expected}")
                });
            }
            Ok(t.finish(format!("n <= {cap}")))
        }),
        Check::new("#phi^-1(t) = n! / product of subtree sizes", |cfg| {
            let cap = cfg.max_degree.min(8);
            let mut t = Tally::new();
            for n in 1..=cap {
                for shape in enumerate_trees(n + 1)?.iter() {
                    let got = phi_fiber_count(shape)?;
                    let want = heap_orderings(shape);
                    t.check(got == want, n, || {
                        format!("{shape}: {got}, expected {want}")
                    });
                }
            }
            Ok(t.finish(format!("n <= {cap}")))
        }),
        Check::new("fibers over PBT_4 are {1, 1, 1, 1, 2}", |_| {
            let mut counts: Vec<Coeff> = enumerate_trees(4)?
                .iter()
                .map(phi_fiber_count)
                .collect::<Result<_>>()?;
            counts.sort();
            let want: Vec<Coeff> = [1i64, 1, 1, 1, 2].into_iter().map(Coeff::from).collect();
            let mut t = Tally::new();
            t.check(counts == want, 3, || format!("{counts:?}"));
            Ok(t.finish(""))
        }),
    ]
}

/// `x^{<n} = x < x^{<(n-1)}` computed in the Zinbiel algebra.
fn zinb_powers(cap: usize, ring: Ring) -> Result<Vec<ZinbElem>> {
    let x = ZinbElem::generator(&Generator::named("x"), ring);
    let mut out = vec![ZinbElem::zero(ring), x.clone()];
    for n in 2..=cap {
        let next = x.prec(&out[n - 1])?;
        out.push(next);
    }
    Ok(out)
}

type Binomial = fn(u64, u64) -> (u64, u64);

fn binomial_check(
    product: &'static str,
    binom: Binomial,
) -> impl Fn(&SuiteConfig) -> Result<super::Outcome> + Send + Sync {
    move |cfg| {
        let cap = cfg.max_degree.min(12);
        let pw = zinb_powers(cap, cfg.ring)?;
        let mut t = Tally::new();
        for p in 1..cap {
            for q in 1..=cap - p {
                let lhs = if product == "<" {
                    pw[p].prec(&pw[q])?
                } else {
                    pw[p].mul(&pw[q])?
                };
                let (n, k) = binom(p as u64, q as u64);
                t.zinb(&lhs, &pw[p + q].scale(&cfg.ring.binomial(n, k)))?;
            }
        }
        Ok(t.finish(format!("p + q <= {cap}")))
    }
}

pub(super) fn example_1_4(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new(
            "x^{<p} < x^{<q} = C(p+q-1, q) x^{<(p+q)}",
            binomial_check("<", |p, q| (p + q - 1, q)),
        ),
        Check::new(
            "x^{<p} x^{<q} = C(p+q, q) x^{<(p+q)}",
            binomial_check("*", |p, q| (p + q, q)),
        ),
        Check::expected_fail(
            "x^{<p} < x^{<q} = C(p+q-1, q-1) x^{<(p+q)}, as printed",
            binomial_check("<", |p, q| (p + q - 1, q - 1)),
        ),
    ]
}

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn primes(cfg: &SuiteConfig) -> Vec<u64> {
    match cfg.ring {
        Ring::ModPrime(p) => vec![p],
        Ring::Integers => PRIMES.to_vec(),
    }
}

/// `(-1)^(p-1) (p-1)!` reduced mod p by direct multiplication.
fn top_coefficient(p: u64) -> u64 {
    let f = (1..p).fold(1u64, |acc, i| acc * i % p);
    if p.is_multiple_of(2) {
        (p - f) % p
    } else {
        f
    }
}

pub(super) fn charp_2_6(_: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::new(
            "L mod p has p nonzero terms, the last (-1)^(p-1)(p-1)! x^{<p}",
            |cfg| {
                let mut t = Tally::new();
                for p in primes(cfg) {
                    let n = 3 * p as usize;
                    let log = CharPSeries::log(p, n)?;
                    let support: Vec<(usize, u64)> = log.nonzero().collect();
                    let top = top_coefficient(p);
                    let ok = support.len() == p as usize
                        && support.iter().all(|&(d, _)| d <= p as usize)
                        && log.coeff(p as usize) == top;
                    t.check(ok, p as usize, || {
                        format!("p={p}: {support:?}, expected top {top}")
                    });
                }
                Ok(t.finish(format!("p in {:?}", primes(cfg))))
            },
        ),
        Check::new("L = 1 1/2-log + (-1)^(p-1)(p-1)! gamma(x)", |cfg| {
            let mut t = Tally::new();
            for p in primes(cfg) {
                let n = 3 * p as usize;
                let rhs = CharPSeries::one_and_half_log(p, n)?
                    .add(&CharPSeries::divided_power(p, n)?.scale(top_coefficient(p)))?;
                let lhs = CharPSeries::log(p, n)?;
                let first = (1..=n).find(|&d| lhs.coeff(d) != rhs.coeff(d));
                t.check(first.is_none(), first.unwrap_or(0), || format!("p={p}"));
            }
            Ok(t.finish(format!("p in {:?}", primes(cfg))))
        }),
        Check::new("E(L(x)) = x = L(E(x)) to degree 3p", |cfg| {
            let mut t = Tally::new();
            for p in primes(cfg) {
                t.check(compose_check(p, 3 * p as usize)?, 3 * p as usize, || {
                    format!("p={p}")
                });
            }
            Ok(t.finish(format!("p in {:?}", primes(cfg))))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_orderings_small() {
        let t: Tree = "((||)(||))".parse().unwrap();
        assert_eq!(heap_orderings(&t), Coeff::from(2i64));
        let comb: Tree = "(|(|(||)))".parse().unwrap();
        assert_eq!(heap_orderings(&comb), Coeff::from(1i64));
    }

    #[test]
    fn wilson() {
        // (p-1)! = -1 mod p, and the sign only matters at p = 2 where -1 = 1
        for p in PRIMES {
            assert_eq!(top_coefficient(p), p - 1);
        }
        assert_eq!(top_coefficient(2), 1);
    }
}
