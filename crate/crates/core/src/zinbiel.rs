//! The free Zinbiel algebra: nonempty words with the half-shuffle product.
//!
//! The word `v_1 v_2 ... v_n` stands for `v_1 < (v_2 < (... < v_n))`. The
//! half-shuffle of `u_1 ... u_p` with `w` keeps `u_1` in front and
//! shuffles `u_2 ... u_p` with `w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::dend::{DendElem, Generator};
use crate::error::{AlgebraError, Result};
use crate::ring::{Coeff, Ring};
use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZinbWord(Vec<Generator>);

impl ZinbWord {
    pub fn new(letters: Vec<Generator>) -> Result<ZinbWord> {
        if letters.is_empty() {
            return Err(AlgebraError::invalid("Zinbiel words are nonempty"));
        }
        Ok(ZinbWord(letters))
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Ord for ZinbWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZinbWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All shuffles of `a` and `b`, each listed once per shuffle permutation.
pub fn shuffles<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    fn go<T: Clone>(a: &[T], b: &[T], prefix: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        match (a.split_first(), b.split_first()) {
            (None, _) => {
                let mut w = prefix.clone();
                w.extend_from_slice(b);
                out.push(w);
            }
            (_, None) => {
                let mut w = prefix.clone();
                w.extend_from_slice(a);
                out.push(w);
            }
            (Some((ha, ta)), Some((hb, tb))) => {
                prefix.push(ha.clone());
                go(ta, b, prefix, out);
                prefix.pop();
                prefix.push(hb.clone());
                go(a, tb, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::with_capacity(a.len() + b.len()), &mut out);
    out
}

/// Half-shuffle on raw letter sequences; `a` must be nonempty.
pub fn half_shuffle_words<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let (head, tail) = a
        .split_first()
        .expect("left word of a half-shuffle is nonempty");
    shuffles(tail, b)
        .into_iter()
        .map(|s| {
            let mut w = Vec::with_capacity(s.len() + 1);
            w.push(head.clone());
            w.extend(s);
            w
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct ZinbElem {
    ring: Ring,
    terms: BTreeMap<ZinbWord, Coeff>,
}

impl ZinbElem {
    pub fn zero(ring: Ring) -> ZinbElem {
        ZinbElem {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: ZinbWord, ring: Ring) -> ZinbElem {
        let mut out = ZinbElem::zero(ring);
        out.add_term(w, Coeff::ONE);
        out
    }

    pub fn generator(g: &Generator, ring: Ring) -> ZinbElem {
        ZinbElem::word(ZinbWord(vec![g.clone()]), ring)
    }

    pub fn from_terms(ring: Ring, terms: impl IntoIterator<Item = (ZinbWord, Coeff)>) -> ZinbElem {
        let mut out = ZinbElem::zero(ring);
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: ZinbWord, c: Coeff) {
        use std::collections::btree_map::Entry;
        let c = self.ring.normalize(c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&ZinbWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &ZinbWord) -> Coeff {
        self.terms.get(w).cloned().unwrap_or(Coeff::ZERO)
    }

    pub fn add(&self, other: &ZinbElem) -> Result<ZinbElem> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> ZinbElem {
        self.scale(&Coeff::Small(-1))
    }

    pub fn sub(&self, other: &ZinbElem) -> Result<ZinbElem> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> ZinbElem {
        ZinbElem::from_terms(
            self.ring,
            self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))),
        )
    }

    /// Bilinear extension of the half-shuffle.
    pub fn prec(&self, other: &ZinbElem) -> Result<ZinbElem> {
        self.ring.ensure_same(&other.ring)?;
        let mut out = ZinbElem::zero(self.ring);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let c = self.ring.mul(ca, cb);
                for w in half_shuffle_words(&wa.0, &wb.0) {
                    out.add_term(ZinbWord(w), c.clone());
                }
            }
        }
        Ok(out)
    }

    /// The commutative product `a < b + b < a`, i.e. the shuffle product.
    pub fn mul(&self, other: &ZinbElem) -> Result<ZinbElem> {
        self.prec(other)?.add(&other.prec(self)?)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let letters: Vec<&str> = w.0.iter().map(Generator::name).collect();
                format!("{c}*[{}]", letters.join(","))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for ZinbElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZinbElem[{}]({})", self.ring, self.render())
    }
}

pub fn half_shuffle(a: &ZinbWord, b: &ZinbWord, ring: Ring) -> ZinbElem {
    ZinbElem::from_terms(
        ring,
        half_shuffle_words(&a.0, &b.0)
            .into_iter()
            .map(|w| (ZinbWord(w), Coeff::ONE)),
    )
}

/// Image of a tree shape as a sum over position words: the tree applied to
/// `(x_0, ..., x_{n-1})` in the Zinbiel algebra. `a > b` is read as `b < a`.
type PositionSum = BTreeMap<Vec<u16>, Coeff>;

fn position_prec(a: &PositionSum, b: &PositionSum) -> PositionSum {
    let mut out = PositionSum::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let c = ca.mul(cb);
            for w in half_shuffle_words(wa, wb) {
                let e = out.entry(w).or_insert(Coeff::ZERO);
                *e = e.add(&c);
            }
        }
    }
    out
}

fn shape_image_at(t: &Tree, offset: u16) -> PositionSum {
    let (l, r) = t.split().expect("nonunit");
    let root = offset + l.degree() as u16;
    let mut acc = PositionSum::from([(vec![root], Coeff::ONE)]);
    if !l.is_leaf() {
        acc = position_prec(&acc, &shape_image_at(l, offset));
    }
    if !r.is_leaf() {
        acc = position_prec(&acc, &shape_image_at(r, root + 1));
    }
    acc
}

static SHAPE_IMAGES: OnceLock<Mutex<HashMap<Tree, Arc<PositionSum>>>> = OnceLock::new();

fn shape_image(t: &Tree) -> Arc<PositionSum> {
    let cache = SHAPE_IMAGES.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(t) {
        return hit.clone();
    }
    let img = Arc::new(shape_image_at(t, 0));
    cache
        .lock()
        .expect("cache poisoned")
        .insert(t.clone(), img.clone());
    img
}

/// The quotient morphism onto the free Zinbiel algebra, identity on
/// generators, sending `a < b` to `a < b` and `a > b` to `b < a`.
pub fn dend_to_zinb(a: &DendElem) -> ZinbElem {
    let ring = a.ring();
    let mut out = ZinbElem::zero(ring);
    for (t, c) in a.terms() {
        let img = shape_image(t.shape());
        for (positions, k) in img.iter() {
            let word = positions
                .iter()
                .map(|&i| t.word()[i as usize].clone())
                .collect();
            out.add_term(ZinbWord(word), c.mul(k));
        }
    }
    out
}

/// `#phi^{-1}(t)`: the coefficient of `x^{<n}` in the Zinbiel image of the
/// one-generator tree monomial `x^t`.
pub fn phi_fiber_count(t: &Tree) -> Result<Coeff> {
    if t.is_leaf() {
        return Err(AlgebraError::invalid("the leaf has no fiber (degree 0)"));
    }
    Ok(shape_image(t)
        .values()
        .fold(Coeff::ZERO, |acc, k| acc.add(k)))
}
