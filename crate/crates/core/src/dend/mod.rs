//! The free dendriform algebra on named generators.
//!
//! A basis element is a [`DecoratedTree`]: a planar binary tree with `n + 1`
//! leaves together with a word of `n` generators, one per internal vertex
//! read left to right. Products act on the shape and concatenate the
//! words, since the dendriform operad is nonsymmetric.

pub mod matrix;
pub mod shape;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::ring::{Coeff, Ring};
use crate::tree::{left_comb, right_comb, Tree};

/// A variable name such as `x`, `y` or `x1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: &str) -> Result<Generator> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric());
        if ok {
            Ok(Generator(Arc::from(name)))
        } else {
            Err(AlgebraError::invalid(format!(
                "generator name {name:?} must match [a-zA-Z][a-zA-Z0-9]*"
            )))
        }
    }

    /// Like [`Generator::new`] for names known to be valid.
    ///
    /// # Panics
    /// On a malformed name.
    pub fn named(name: &str) -> Generator {
        Generator::new(name).expect("valid generator name")
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Generators `x1, ..., xn`.
pub fn indexed_generators(prefix: &str, n: usize) -> Vec<Generator> {
    (1..=n)
        .map(|i| Generator::named(&format!("{prefix}{i}")))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DecoratedTree {
    shape: Tree,
    word: Vec<Generator>,
}

impl DecoratedTree {
    pub fn new(shape: Tree, word: Vec<Generator>) -> Result<DecoratedTree> {
        if word.is_empty() || word.len() + 1 != shape.leaf_count() {
            return Err(AlgebraError::invalid(format!(
                "tree {} has {} internal vertices but the word has {} letters",
                shape,
                shape.degree(),
                word.len()
            )));
        }
        Ok(DecoratedTree { shape, word })
    }

    pub fn shape(&self) -> &Tree {
        &self.shape
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Mirror the shape and reverse the word.
    pub fn tau(&self) -> DecoratedTree {
        let mut word = self.word.clone();
        word.reverse();
        DecoratedTree {
            shape: self.shape.mirror(),
            word,
        }
    }

    /// Split at the root into left part, root letter and right part; an
    /// absent side is the unit.
    pub fn split(&self) -> (Option<DecoratedTree>, &Generator, Option<DecoratedTree>) {
        let (l, r) = self
            .shape
            .split()
            .expect("decorated trees have degree >= 1");
        let k = l.degree();
        let left = (!l.is_leaf()).then(|| DecoratedTree {
            shape: l.clone(),
            word: self.word[..k].to_vec(),
        });
        let right = (!r.is_leaf()).then(|| DecoratedTree {
            shape: r.clone(),
            word: self.word[k + 1..].to_vec(),
        });
        (left, &self.word[k], right)
    }

    /// Graft with root decorated by `root`; `None` sides are leaves.
    pub fn graft(
        left: Option<&DecoratedTree>,
        root: Generator,
        right: Option<&DecoratedTree>,
    ) -> DecoratedTree {
        let mut word = Vec::new();
        let ls = left.map_or(Tree::Leaf, |l| {
            word.extend_from_slice(&l.word);
            l.shape.clone()
        });
        word.push(root);
        let rs = right.map_or(Tree::Leaf, |r| {
            word.extend_from_slice(&r.word);
            r.shape.clone()
        });
        DecoratedTree {
            shape: Tree::graft(ls, rs),
            word,
        }
    }

    /// Fully parenthesized text form, `<` for the left and `>` for the right product.
    pub fn render(&self) -> String {
        fn go(shape: &Tree, word: &[Generator], out: &mut String) {
            let (l, r) = shape.split().expect("nonunit");
            let k = l.degree();
            let root = &word[k];
            match (l.is_leaf(), r.is_leaf()) {
                (true, true) => out.push_str(root.name()),
                (true, false) => {
                    out.push('(');
                    out.push_str(root.name());
                    out.push_str(" < ");
                    go(r, &word[k + 1..], out);
                    out.push(')');
                }
                (false, true) => {
                    out.push('(');
                    go(l, &word[..k], out);
                    out.push_str(" > ");
                    out.push_str(root.name());
                    out.push(')');
                }
                (false, false) => {
                    out.push_str("((");
                    go(l, &word[..k], out);
                    out.push_str(" > ");
                    out.push_str(root.name());
                    out.push_str(") < ");
                    go(r, &word[k + 1..], out);
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        go(&self.shape, &self.word, &mut out);
        out
    }
}

impl Ord for DecoratedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.shape.cmp(&other.shape))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for DecoratedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DecoratedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.shape, self.word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Product {
    Prec,
    Succ,
    Star,
}

/// Predicate on the concatenated word of a candidate product term.
pub type WordFilter = fn(&[Generator]) -> bool;

/// Keeps only words whose letters are pairwise distinct.
pub fn distinct_letters(word: &[Generator]) -> bool {
    word.iter().enumerate().all(|(i, g)| !word[..i].contains(g))
}

/// Finite linear combination of decorated trees with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct DendElem {
    ring: Ring,
    terms: BTreeMap<DecoratedTree, Coeff>,
}

// Below this many basis-pair products a parallel split costs more than it saves.
const PAR_THRESHOLD: usize = 4096;

impl DendElem {
    pub fn zero(ring: Ring) -> DendElem {
        DendElem {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(g: &Generator, ring: Ring) -> DendElem {
        let term = DecoratedTree {
            shape: Tree::graft(Tree::Leaf, Tree::Leaf),
            word: vec![g.clone()],
        };
        DendElem::from_term(term, Coeff::ONE, ring)
    }

    pub fn monomial(shape: Tree, word: Vec<Generator>, ring: Ring) -> Result<DendElem> {
        Ok(DendElem::from_term(
            DecoratedTree::new(shape, word)?,
            Coeff::ONE,
            ring,
        ))
    }

    pub fn from_term(term: DecoratedTree, c: Coeff, ring: Ring) -> DendElem {
        DendElem::from_terms(ring, std::iter::once((term, c)))
    }

    /// Sums up repeated terms and drops zeros.
    pub fn from_terms(
        ring: Ring,
        terms: impl IntoIterator<Item = (DecoratedTree, Coeff)>,
    ) -> DendElem {
        let mut out = DendElem::zero(ring);
        for (t, c) in terms {
            out.add_term(t, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, t: DecoratedTree, c: Coeff) {
        use std::collections::btree_map::Entry;
        let c = self.ring.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.ring.add(o.get(), &c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&DecoratedTree, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &DecoratedTree) -> Coeff {
        self.terms.get(t).cloned().unwrap_or(Coeff::ZERO)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(DecoratedTree::degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(DecoratedTree::degree)
    }

    pub fn degree_part(&self, d: usize) -> DendElem {
        self.filter(|t| t.degree() == d)
    }

    pub fn filter(&self, mut keep: impl FnMut(&DecoratedTree) -> bool) -> DendElem {
        DendElem {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms whose word is a permutation of `gens`.
    pub fn multilinear_part(&self, gens: &[Generator]) -> DendElem {
        let mut sorted = gens.to_vec();
        sorted.sort();
        self.filter(|t| {
            let mut w = t.word.clone();
            w.sort();
            w == sorted
        })
    }

    pub fn add(&self, other: &DendElem) -> Result<DendElem> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DendElem) -> Result<DendElem> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DendElem {
        self.scale(&Coeff::Small(-1))
    }

    pub fn scale(&self, c: &Coeff) -> DendElem {
        let c = self.ring.normalize(c.clone());
        DendElem {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter_map(|(t, a)| {
                    let v = self.ring.mul(a, &c);
                    (!v.is_zero()).then(|| (t.clone(), v))
                })
                .collect(),
        }
    }

    pub fn prec(&self, other: &DendElem) -> Result<DendElem> {
        self.product(other, Product::Prec, None)
    }

    pub fn succ(&self, other: &DendElem) -> Result<DendElem> {
        self.product(other, Product::Succ, None)
    }

    /// The associative product `a < b + a > b`.
    pub fn mul(&self, other: &DendElem) -> Result<DendElem> {
        self.product(other, Product::Star, None)
    }

    pub(crate) fn product(
        &self,
        other: &DendElem,
        op: Product,
        keep: Option<WordFilter>,
    ) -> Result<DendElem> {
        self.ring.ensure_same(&other.ring)?;
        let ring = self.ring;
        if self.is_zero() || other.is_zero() {
            return Ok(DendElem::zero(ring));
        }
        let left = shape_groups(&self.terms);
        let right = shape_groups(&other.terms);

        let group_product = |(ts, lw): &(&Tree, Vec<(&[Generator], &Coeff)>)| {
            let mut acc: Vec<(DecoratedTree, Coeff)> = Vec::new();
            for (ss, rw) in &right {
                let shapes = match op {
                    Product::Prec => shape::prec(ts, ss),
                    Product::Succ => shape::succ(ts, ss),
                    Product::Star => shape::star(ts, ss),
                };
                for (wa, ca) in lw {
                    for (wb, cb) in rw {
                        let mut word = Vec::with_capacity(wa.len() + wb.len());
                        word.extend_from_slice(wa);
                        word.extend_from_slice(wb);
                        if let Some(keep) = keep {
                            if !keep(&word) {
                                continue;
                            }
                        }
                        let c = ring.mul(ca, cb);
                        for s in &shapes {
                            acc.push((
                                DecoratedTree {
                                    shape: s.clone(),
                                    word: word.clone(),
                                },
                                c.clone(),
                            ));
                        }
                    }
                }
            }
            acc
        };

        let mut out = DendElem::zero(ring);
        if self.len() * other.len() >= PAR_THRESHOLD && left.len() > 1 {
            let parts: Vec<Vec<(DecoratedTree, Coeff)>> =
                left.par_iter().map(group_product).collect();
            for part in parts {
                for (t, c) in part {
                    out.add_term(t, c);
                }
            }
        } else {
            for g in &left {
                for (t, c) in group_product(g) {
                    out.add_term(t, c);
                }
            }
        }
        Ok(out)
    }

    /// The involution mirroring shapes and reversing words. It exchanges the
    /// two products: `tau(a < b) = tau(b) > tau(a)`.
    pub fn tau(&self) -> DendElem {
        DendElem::from_terms(
            self.ring,
            self.terms.iter().map(|(t, c)| (t.tau(), c.clone())),
        )
    }

    /// Left pre-Lie product `a > b - b < a`.
    pub fn prelie(&self, other: &DendElem) -> Result<DendElem> {
        self.succ(other)?.sub(&other.prec(self)?)
    }

    /// Brace product `{x_1, ..., x_n; y}`:
    /// the sum over `i` of `(-1)^(n-i) (x_1 < (... < x_i)) > y < ((x_{i+1} > ...) > x_n)`.
    pub fn brace(xs: &[DendElem], y: &DendElem) -> Result<DendElem> {
        if xs.is_empty() {
            return Err(AlgebraError::invalid(
                "brace needs at least one left argument",
            ));
        }
        let ring = y.ring;
        for x in xs {
            ring.ensure_same(&x.ring)?;
        }
        let n = xs.len();
        let mut total = DendElem::zero(ring);
        for i in 0..=n {
            let left = right_nested_prec(&xs[..i])?;
            let right = left_nested_succ(&xs[i..])?;
            let mut term = match left {
                Some(l) => l.succ(y)?,
                None => y.clone(),
            };
            if let Some(r) = right {
                term = term.prec(&r)?;
            }
            if (n - i) % 2 == 1 {
                term = term.neg();
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }

    /// `a^{<n} = a < a^{<(n-1)}`.
    pub fn power_prec(&self, n: usize) -> Result<DendElem> {
        self.power(n, |acc, a| a.prec(acc))
    }

    /// `a^{>n} = a^{>(n-1)} > a`.
    pub fn power_succ(&self, n: usize) -> Result<DendElem> {
        self.power(n, |acc, a| acc.succ(a))
    }

    pub fn power_assoc(&self, n: usize) -> Result<DendElem> {
        self.power(n, |acc, a| acc.mul(a))
    }

    fn power(
        &self,
        n: usize,
        step: impl Fn(&DendElem, &DendElem) -> Result<DendElem>,
    ) -> Result<DendElem> {
        if n == 0 {
            return Err(AlgebraError::invalid(
                "power 0 is the unit, which only exists in series",
            ));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = step(&acc, self)?;
        }
        Ok(acc)
    }

    /// Fully parenthesized text form.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (t, c)) in self.terms.iter().enumerate() {
            let body = t.render();
            let (neg, mag) = if c.is_negative() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&body);
        }
        out
    }
}

/// Terms sharing one shape: the shape and its `(word, coefficient)` pairs.
type ShapeGroup<'a> = (&'a Tree, Vec<(&'a [Generator], &'a Coeff)>);

fn shape_groups(terms: &BTreeMap<DecoratedTree, Coeff>) -> Vec<ShapeGroup<'_>> {
    let mut groups: Vec<ShapeGroup<'_>> = Vec::new();
    for (t, c) in terms {
        match groups.last_mut() {
            Some((s, ws)) if *s == &t.shape => ws.push((&t.word, c)),
            _ => groups.push((&t.shape, vec![(&t.word, c)])),
        }
    }
    groups
}

/// `x_1 < (x_2 < (... < x_k))`, `None` for the empty sequence.
fn right_nested_prec(xs: &[DendElem]) -> Result<Option<DendElem>> {
    let mut iter = xs.iter().rev();
    let Some(last) = iter.next() else {
        return Ok(None);
    };
    let mut acc = last.clone();
    for x in iter {
        acc = x.prec(&acc)?;
    }
    Ok(Some(acc))
}

/// `((x_1 > x_2) > ...) > x_k`, `None` for the empty sequence.
fn left_nested_succ(xs: &[DendElem]) -> Result<Option<DendElem>> {
    let mut iter = xs.iter();
    let Some(first) = iter.next() else {
        return Ok(None);
    };
    let mut acc = first.clone();
    for x in iter {
        acc = acc.succ(x)?;
    }
    Ok(Some(acc))
}

/// The one-generator tree monomial `x^t`.
pub fn tree_power(x: &Generator, shape: Tree, ring: Ring) -> Result<DendElem> {
    let n = shape.degree();
    DendElem::monomial(shape, vec![x.clone(); n], ring)
}

/// `x^{<(n)}` as a single basis element (a right comb).
pub fn prec_comb(x: &Generator, n: usize, ring: Ring) -> Result<DendElem> {
    tree_power(x, right_comb(n + 1)?, ring)
}

/// `x^{>(n)}` as a single basis element (a left comb).
pub fn succ_comb(x: &Generator, n: usize, ring: Ring) -> Result<DendElem> {
    tree_power(x, left_comb(n + 1)?, ring)
}

impl fmt::Display for DendElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for DendElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DendElem[{}]({})", self.ring, self.render())
    }
}
