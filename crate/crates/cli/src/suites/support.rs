//! Comparison tallies and seeded random inputs shared by the suites.

use dendexp_core::{
    enumerate_trees, Coeff, DecoratedTree, DendElem, DendSeries, Generator, Result, Ring, ZinbElem,
    ZinbWord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Outcome;

/// Accumulates comparisons and keeps the lowest-degree failure.
#[derive(Default)]
pub(crate) struct Tally {
    cases: usize,
    failure: Option<(usize, String)>,
}

impl Tally {
    pub fn new() -> Tally {
        Tally::default()
    }

    fn record(&mut self, degree: usize, witness: impl FnOnce() -> String) {
        if self.failure.as_ref().is_none_or(|(d, _)| degree < *d) {
            self.failure = Some((degree, witness()));
        }
    }

    pub fn elems(&mut self, lhs: &DendElem, rhs: &DendElem) -> Result<()> {
        self.cases += 1;
        let diff = lhs.sub(rhs)?;
        if let Some((t, c)) = diff.terms().next() {
            self.record(t.degree(), || {
                DendElem::from_term(t.clone(), c.clone(), diff.ring()).render()
            });
        }
        Ok(())
    }

    pub fn zinb(&mut self, lhs: &ZinbElem, rhs: &ZinbElem) -> Result<()> {
        self.cases += 1;
        let diff = lhs.sub(rhs)?;
        if let Some((w, c)) = diff.terms().next() {
            self.record(w.len(), || {
                ZinbElem::from_terms(diff.ring(), [(w.clone(), c.clone())]).render()
            });
        }
        Ok(())
    }

    pub fn series(&mut self, lhs: &DendSeries, rhs: &DendSeries) -> Result<()> {
        self.cases += 1;
        let diff = lhs.sub(rhs)?;
        if !diff.unit_coeff().is_zero() {
            self.record(0, || diff.unit_coeff().to_string());
            return Ok(());
        }
        if let Some(d) = lhs.first_difference(rhs)? {
            let comp = diff.component(d);
            let (t, c) = comp.terms().next().expect("nonzero component");
            self.record(d, || {
                DendElem::from_term(t.clone(), c.clone(), diff.ring()).render()
            });
        }
        Ok(())
    }

    pub fn check(&mut self, holds: bool, degree: usize, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds {
            self.record(degree, witness);
        }
    }

    pub fn finish(self, what: impl Into<String>) -> Outcome {
        let what = what.into();
        let cases = match self.cases {
            1 => "1 case".to_string(),
            n => format!("{n} cases"),
        };
        let detail = if what.is_empty() {
            cases
        } else {
            format!("{what}, {cases}")
        };
        match self.failure {
            None => Outcome {
                holds: true,
                failing_degree: None,
                counterexample: None,
                detail,
            },
            Some((d, w)) => Outcome {
                holds: false,
                failing_degree: Some(d),
                counterexample: Some(w),
                detail,
            },
        }
    }
}

pub(crate) fn gens(names: &[&str]) -> Vec<Generator> {
    names.iter().map(|n| Generator::named(n)).collect()
}

pub(crate) fn words(len: usize, letters: &[Generator]) -> Vec<Vec<Generator>> {
    let mut out: Vec<Vec<Generator>> = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(l.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// All monomials of degree `d` over `letters`.
pub(crate) fn dend_basis(d: usize, letters: &[Generator], ring: Ring) -> Result<Vec<DendElem>> {
    let ws = words(d, letters);
    let mut out = Vec::new();
    for t in enumerate_trees(d + 1)?.iter() {
        for w in &ws {
            out.push(DendElem::monomial(t.clone(), w.clone(), ring)?);
        }
    }
    Ok(out)
}

pub(crate) fn zinb_basis(d: usize, letters: &[Generator], ring: Ring) -> Result<Vec<ZinbElem>> {
    words(d, letters)
        .into_iter()
        .map(|w| Ok(ZinbElem::word(ZinbWord::new(w)?, ring)))
        .collect()
}

/// Degree compositions `(d_1, ..., d_k)` with every part at least 1 and sum at most `max`.
pub(crate) fn compositions(k: usize, max: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=max.saturating_sub(k - 1) {
        for mut rest in compositions(k - 1, max - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every basis `k`-tuple with total degree at most `max`.
pub(crate) fn basis_tuples<T: Clone>(
    k: usize,
    max: usize,
    basis: impl Fn(usize) -> Result<Vec<T>>,
) -> Result<Vec<Vec<T>>> {
    let per_degree: Vec<Vec<T>> = (0..=max)
        .map(|d| if d == 0 { Ok(vec![]) } else { basis(d) })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for degrees in compositions(k, max) {
        let mut partial: Vec<Vec<T>> = vec![vec![]];
        for d in degrees {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    per_degree[d].iter().map(move |b| {
                        let mut p = p.clone();
                        p.push(b.clone());
                        p
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    Ok(out)
}

/// Deterministic generator for one named check.
pub(crate) fn rng(seed: u64, stream: &str) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    // FNV-1a of the stream name
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
    }
    r.set_stream(h);
    r
}

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Coeff {
    let c: i64 = rng.gen_range(1..=3);
    Coeff::Small(if rng.gen_bool(0.5) { c } else { -c })
}

/// One to three random terms, each of degree between 1 and `max_degree`.
pub(crate) fn random_elem(
    rng: &mut ChaCha8Rng,
    letters: &[Generator],
    max_degree: usize,
    ring: Ring,
) -> Result<DendElem> {
    let count = rng.gen_range(1..=3);
    let mut terms = Vec::with_capacity(count);
    for _ in 0..count {
        let d = rng.gen_range(1..=max_degree);
        let trees = enumerate_trees(d + 1)?;
        let shape = trees[rng.gen_range(0..trees.len())].clone();
        let word = (0..d)
            .map(|_| letters[rng.gen_range(0..letters.len())].clone())
            .collect();
        terms.push((DecoratedTree::new(shape, word)?, nonzero_coeff(rng)));
    }
    let e = DendElem::from_terms(ring, terms);
    if e.is_zero() {
        random_elem(rng, letters, max_degree, ring)
    } else {
        Ok(e)
    }
}

pub(crate) fn random_zinb(
    rng: &mut ChaCha8Rng,
    letters: &[Generator],
    max_degree: usize,
    ring: Ring,
) -> Result<ZinbElem> {
    let count = rng.gen_range(1..=3);
    let mut terms = Vec::with_capacity(count);
    for _ in 0..count {
        let d = rng.gen_range(1..=max_degree);
        let word = (0..d)
            .map(|_| letters[rng.gen_range(0..letters.len())].clone())
            .collect();
        terms.push((ZinbWord::new(word)?, nonzero_coeff(rng)));
    }
    let e = ZinbElem::from_terms(ring, terms);
    if e.is_zero() {
        random_zinb(rng, letters, max_degree, ring)
    } else {
        Ok(e)
    }
}

/// Random series without constant term, truncated at `max_degree`.
pub(crate) fn random_series(
    rng: &mut ChaCha8Rng,
    letters: &[Generator],
    max_degree: usize,
    ring: Ring,
) -> Result<DendSeries> {
    let e = random_elem(rng, letters, max_degree.min(3), ring)?;
    DendSeries::from_elem(&e, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert_eq!(compositions(2, 4).len(), 6);
        let tuples = basis_tuples(2, 3, |d| Ok(vec![d; d])).unwrap();
        // (1,1): 1, (1,2): 2, (2,1): 2
        assert_eq!(tuples.len(), 5);
    }

    #[test]
    fn streams_are_independent_and_reproducible() {
        let a: u64 = rng(0, "a").gen();
        let b: u64 = rng(0, "b").gen();
        assert_ne!(a, b);
        assert_eq!(a, rng(0, "a").gen::<u64>());
        assert_ne!(a, rng(1, "a").gen::<u64>());
    }

    #[test]
    fn tally_keeps_lowest_degree() {
        let mut t = Tally::new();
        t.check(false, 4, || "four".into());
        t.check(false, 2, || "two".into());
        t.check(true, 1, || unreachable!());
        let o = t.finish("");
        assert_eq!(o.failing_degree, Some(2));
        assert_eq!(o.counterexample.as_deref(), Some("two"));
        assert_eq!(o.detail, "3 cases");
    }
}
