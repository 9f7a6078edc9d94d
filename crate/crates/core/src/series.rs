//! Truncated graded series over the free dendriform algebra with a unit
//! adjoined.
//!
//! A [`DendSeries`] is `unit * 1 + a_1 + ... + a_N` with `a_d` homogeneous
//! of degree `d`; everything above `N` is dropped. Left and right products
//! with the unit follow `x < 1 = x`, `1 < x = 0`, `x > 1 = 0`, `1 > x = x`;
//! `1 < 1` and `1 > 1` are undefined and rejected.

use rayon::prelude::*;

use crate::dend::{distinct_letters, DendElem, Generator, Product, WordFilter};
use crate::error::{AlgebraError, Result};
use crate::ring::{Coeff, Ring};
use crate::tree::{graft, left_comb, right_comb};

/// Which terms a series keeps besides the degree cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TermFilter {
    #[default]
    All,
    /// Only words with pairwise distinct letters. Products concatenate
    /// words, so dropping the rest is a quotient by an ideal and lets
    /// multilinear parts be computed without the full expansion.
    DistinctLetters,
}

impl TermFilter {
    fn word_filter(self) -> Option<WordFilter> {
        match self {
            TermFilter::All => None,
            TermFilter::DistinctLetters => Some(distinct_letters),
        }
    }

    fn join(self, other: TermFilter) -> TermFilter {
        if self == TermFilter::All {
            other
        } else {
            self
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DendSeries {
    max_degree: usize,
    ring: Ring,
    unit: Coeff,
    components: Vec<DendElem>,
    filter: TermFilter,
}

impl DendSeries {
    pub fn zero(max_degree: usize, ring: Ring) -> Result<DendSeries> {
        if max_degree == 0 {
            return Err(AlgebraError::invalid(
                "truncation degree must be at least 1",
            ));
        }
        Ok(DendSeries {
            max_degree,
            ring,
            unit: Coeff::ZERO,
            components: vec![DendElem::zero(ring); max_degree],
            filter: TermFilter::All,
        })
    }

    pub fn unit(max_degree: usize, ring: Ring) -> Result<DendSeries> {
        DendSeries::scalar(Coeff::ONE, max_degree, ring)
    }

    pub fn scalar(c: Coeff, max_degree: usize, ring: Ring) -> Result<DendSeries> {
        let mut s = DendSeries::zero(max_degree, ring)?;
        s.unit = ring.normalize(c);
        Ok(s)
    }

    /// Embed an element; terms above the truncation degree are dropped.
    pub fn from_elem(a: &DendElem, max_degree: usize) -> Result<DendSeries> {
        let mut s = DendSeries::zero(max_degree, a.ring())?;
        for (t, c) in a.terms() {
            if t.degree() <= max_degree {
                s.components[t.degree() - 1].add_term(t.clone(), c.clone());
            }
        }
        Ok(s)
    }

    pub fn generator(g: &Generator, max_degree: usize, ring: Ring) -> Result<DendSeries> {
        DendSeries::from_elem(&DendElem::generator(g, ring), max_degree)
    }

    /// Switch to the distinct-letter quotient, dropping offending terms.
    pub fn with_filter(mut self, filter: TermFilter) -> DendSeries {
        self.filter = filter;
        if let Some(keep) = filter.word_filter() {
            for c in &mut self.components {
                *c = c.filter(|t| keep(t.word()));
            }
        }
        self
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn filter(&self) -> TermFilter {
        self.filter
    }

    pub fn unit_coeff(&self) -> &Coeff {
        &self.unit
    }

    /// Homogeneous component of degree `d`, `1 <= d <= N`.
    pub fn component(&self, d: usize) -> &DendElem {
        assert!(
            (1..=self.max_degree).contains(&d),
            "degree {d} outside 1..={}",
            self.max_degree
        );
        &self.components[d - 1]
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &DendElem)> {
        self.components.iter().enumerate().map(|(i, c)| (i + 1, c))
    }

    /// The positive-degree part as one element.
    pub fn augmentation_elem(&self) -> DendElem {
        let mut out = DendElem::zero(self.ring);
        for c in &self.components {
            for (t, k) in c.terms() {
                out.add_term(t.clone(), k.clone());
            }
        }
        out
    }

    /// The series with its unit coefficient set to zero.
    pub fn augmentation(&self) -> DendSeries {
        DendSeries {
            unit: Coeff::ZERO,
            ..self.clone()
        }
    }

    pub fn with_unit(&self, c: Coeff) -> DendSeries {
        DendSeries {
            unit: self.ring.normalize(c),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.components.iter().all(DendElem::is_zero)
    }

    /// Lowest degree at which the two series differ (0 for the unit).
    pub fn first_difference(&self, other: &DendSeries) -> Result<Option<usize>> {
        let diff = self.sub(other)?;
        if !diff.unit.is_zero() {
            return Ok(Some(0));
        }
        let first = diff
            .components()
            .find(|(_, c)| !c.is_zero())
            .map(|(d, _)| d);
        Ok(first)
    }

    fn compatible(&self, other: &DendSeries) -> Result<TermFilter> {
        self.ring.ensure_same(&other.ring)?;
        if self.max_degree != other.max_degree {
            return Err(AlgebraError::TruncationMismatch {
                left: self.max_degree,
                right: other.max_degree,
            });
        }
        Ok(self.filter.join(other.filter))
    }

    pub fn add(&self, other: &DendSeries) -> Result<DendSeries> {
        let filter = self.compatible(other)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(DendSeries {
            unit: self.ring.add(&self.unit, &other.unit),
            components,
            filter,
            ..*self
        }
        .refiltered())
    }

    pub fn neg(&self) -> DendSeries {
        self.scale(&Coeff::Small(-1))
    }

    pub fn sub(&self, other: &DendSeries) -> Result<DendSeries> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> DendSeries {
        DendSeries {
            unit: self.ring.mul(&self.unit, c),
            components: self.components.iter().map(|a| a.scale(c)).collect(),
            ..self.clone()
        }
    }

    fn refiltered(self) -> DendSeries {
        if self.filter == TermFilter::All {
            self
        } else {
            let f = self.filter;
            self.with_filter(f)
        }
    }

    fn elem_product(
        a: &DendElem,
        b: &DendElem,
        op: Product,
        filter: TermFilter,
    ) -> Result<DendElem> {
        a.product(b, op, filter.word_filter())
    }

    /// Sum over `i + j = d` of `op(self_i, other_j)` for every `d`, positive degrees only.
    fn graded_product(
        &self,
        other: &DendSeries,
        op: Product,
        filter: TermFilter,
    ) -> Result<Vec<DendElem>> {
        let n = self.max_degree;
        (1..=n)
            .into_par_iter()
            .map(|d| {
                let mut acc = DendElem::zero(self.ring);
                for i in 1..d {
                    let p = Self::elem_product(
                        &self.components[i - 1],
                        &other.components[d - i - 1],
                        op,
                        filter,
                    )?;
                    acc = acc.add(&p)?;
                }
                Ok(acc)
            })
            .collect()
    }

    /// `(a + A)(b + B) = ab + aB + bA + A < B + A > B`.
    pub fn mul(&self, other: &DendSeries) -> Result<DendSeries> {
        let filter = self.compatible(other)?;
        let mut components = self.graded_product(other, Product::Star, filter)?;
        for (d, c) in components.iter_mut().enumerate() {
            *c = c
                .add(&self.components[d].scale(&other.unit))?
                .add(&other.components[d].scale(&self.unit))?;
        }
        Ok(DendSeries {
            unit: self.ring.mul(&self.unit, &other.unit),
            components,
            filter,
            ..*self
        }
        .refiltered())
    }

    /// `(a + A) < (b + B) = bA + A < B`; undefined when both `a` and `b` are nonzero.
    pub fn prec(&self, other: &DendSeries) -> Result<DendSeries> {
        self.one_sided(other, Product::Prec)
    }

    /// `(a + A) > (b + B) = aB + A > B`; undefined when both `a` and `b` are nonzero.
    pub fn succ(&self, other: &DendSeries) -> Result<DendSeries> {
        self.one_sided(other, Product::Succ)
    }

    fn one_sided(&self, other: &DendSeries, op: Product) -> Result<DendSeries> {
        let filter = self.compatible(other)?;
        if !self.unit.is_zero() && !other.unit.is_zero() {
            return Err(AlgebraError::UndefinedUnitProduct(format!(
                "1 {} 1 is not defined",
                if op == Product::Prec { "<" } else { ">" }
            )));
        }
        let mut components = self.graded_product(other, op, filter)?;
        for (d, c) in components.iter_mut().enumerate() {
            let extra = match op {
                Product::Prec => self.components[d].scale(&other.unit),
                _ => other.components[d].scale(&self.unit),
            };
            *c = c.add(&extra)?;
        }
        Ok(DendSeries {
            unit: Coeff::ZERO,
            components,
            filter,
            ..*self
        }
        .refiltered())
    }

    pub fn tau(&self) -> DendSeries {
        DendSeries {
            components: self.components.iter().map(DendElem::tau).collect(),
            ..self.clone()
        }
    }

    fn require_zero_unit(&self, what: &str) -> Result<()> {
        if self.unit.is_zero() {
            Ok(())
        } else {
            Err(AlgebraError::invalid(format!(
                "{what} needs a series without constant term, got unit coefficient {}",
                self.unit
            )))
        }
    }

    /// `e(z)`: the fixed point of `S = 1 + z < S`, i.e. `1 + sum z^{<n}`.
    pub fn exp_left(&self) -> Result<DendSeries> {
        self.require_zero_unit("e")?;
        self.fixed_point(|s, z, d, f| {
            // degree d of z < S = z_d + sum_{i<d} z_i < S_{d-i}
            let mut acc = z.components[d - 1].clone();
            for i in 1..d {
                acc = acc.add(&Self::elem_product(
                    &z.components[i - 1],
                    &s[d - i - 1],
                    Product::Prec,
                    f,
                )?)?;
            }
            Ok(acc)
        })
    }

    /// `e'(z)`: the fixed point of `S = 1 + S > z`, i.e. `1 + sum z^{>n}`.
    pub fn exp_right(&self) -> Result<DendSeries> {
        self.require_zero_unit("e'")?;
        self.fixed_point(|s, z, d, f| {
            let mut acc = z.components[d - 1].clone();
            for j in 1..d {
                acc = acc.add(&Self::elem_product(
                    &s[j - 1],
                    &z.components[d - j - 1],
                    Product::Succ,
                    f,
                )?)?;
            }
            Ok(acc)
        })
    }

    /// Solve for a unital series degree by degree; `step` sees the
    /// components already computed.
    fn fixed_point(
        &self,
        step: impl Fn(&[DendElem], &DendSeries, usize, TermFilter) -> Result<DendElem>,
    ) -> Result<DendSeries> {
        let mut comps: Vec<DendElem> = Vec::with_capacity(self.max_degree);
        for d in 1..=self.max_degree {
            let c = step(&comps, self, d, self.filter)?;
            comps.push(c);
        }
        Ok(DendSeries {
            unit: Coeff::ONE,
            components: comps,
            ..self.clone()
        })
    }

    /// Logarithm without denominators: `L(u) = u < (1 - u + u^2 - ...)`,
    /// the compositional inverse of `e(z) - 1`.
    pub fn log_nd(&self) -> Result<DendSeries> {
        self.require_zero_unit("L")?;
        // G = sum_k (-u)^k is the solution of G = 1 - uG.
        let mut g: Vec<DendElem> = Vec::with_capacity(self.max_degree);
        for d in 1..=self.max_degree {
            let mut acc = self.components[d - 1].neg();
            for i in 1..d {
                let p = Self::elem_product(
                    &self.components[i - 1],
                    &g[d - i - 1],
                    Product::Star,
                    self.filter,
                )?;
                acc = acc.sub(&p)?;
            }
            g.push(acc);
        }
        let geometric = DendSeries {
            unit: Coeff::ONE,
            components: g,
            ..self.clone()
        };
        self.prec(&geometric)
    }

    /// The unique `Z` without constant term such that `e(Z) = self`.
    ///
    /// Computed twice, as `L(self - 1)` and by solving `P - 1 = Z < P`
    /// degree by degree; disagreement is an internal error.
    pub fn bch_extract(&self) -> Result<DendSeries> {
        if !self.unit.is_one() {
            return Err(AlgebraError::invalid(format!(
                "extraction needs unit coefficient 1, got {}",
                self.unit
            )));
        }
        let u = self.augmentation();
        let by_log = u.log_nd()?;

        let mut z: Vec<DendElem> = Vec::with_capacity(self.max_degree);
        for n in 1..=self.max_degree {
            let mut acc = u.components[n - 1].clone();
            for k in 1..n {
                let p = Self::elem_product(
                    &z[k - 1],
                    &u.components[n - k - 1],
                    Product::Prec,
                    self.filter,
                )?;
                acc = acc.sub(&p)?;
            }
            z.push(acc);
        }
        let by_recursion = DendSeries {
            unit: Coeff::ZERO,
            components: z,
            ..self.clone()
        };
        if by_log != by_recursion {
            let d = by_log.first_difference(&by_recursion)?.unwrap_or(0);
            return Err(AlgebraError::InternalConsistency(format!(
                "logarithm and recursive extraction disagree at degree {d}"
            )));
        }
        Ok(by_log)
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if !self.unit.is_zero() {
            parts.push(self.unit.to_string());
        }
        for c in &self.components {
            if !c.is_zero() {
                parts.push(c.render());
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }

    /// Split into per-degree parts for serialization.
    pub(crate) fn from_parts(
        max_degree: usize,
        ring: Ring,
        unit: Coeff,
        components: Vec<DendElem>,
    ) -> Result<DendSeries> {
        let mut s = DendSeries::scalar(unit, max_degree, ring)?;
        for (d, c) in components.into_iter().enumerate() {
            if d >= max_degree {
                break;
            }
            if c.terms().any(|(t, _)| t.degree() != d + 1) {
                return Err(AlgebraError::invalid(format!(
                    "component {} contains terms of another degree",
                    d + 1
                )));
            }
            s.components[d] = c;
        }
        Ok(s)
    }
}

/// `e(x)` for a generator.
pub fn exp_left_gen(x: &Generator, max_degree: usize, ring: Ring) -> Result<DendSeries> {
    DendSeries::generator(x, max_degree, ring)?.exp_left()
}

/// `e'(x)` for a generator.
pub fn exp_right_gen(x: &Generator, max_degree: usize, ring: Ring) -> Result<DendSeries> {
    DendSeries::generator(x, max_degree, ring)?.exp_right()
}

/// `x + e(x) > y < e'(-x)`, the argument making `e(x)e(y) = e(...)`.
pub fn conjugated_sum_left(x: &DendSeries, y: &DendSeries) -> Result<DendSeries> {
    let ex = x.exp_left()?;
    let e_neg = x.neg().exp_right()?;
    x.add(&ex.succ(y)?.prec(&e_neg)?)
}

/// `e'(-y) > x < e'(y) + y`, as printed for `e'(x)e'(y)`.
pub fn conjugated_sum_right_printed(x: &DendSeries, y: &DendSeries) -> Result<DendSeries> {
    let left = y.neg().exp_right()?;
    let right = y.exp_right()?;
    left.succ(x)?.prec(&right)?.add(y)
}

/// `y + e(-y) > x < e'(y)`: the image of [`conjugated_sum_left`] under tau
/// with the roles of `x` and `y` exchanged.
pub fn conjugated_sum_right(x: &DendSeries, y: &DendSeries) -> Result<DendSeries> {
    let left = y.neg().exp_left()?;
    let right = y.exp_right()?;
    y.add(&left.succ(x)?.prec(&right)?)
}

/// Degree-`n` part of the obstruction in `e(x)e(y) = e(x + y + H_2 + H_3 + ...)`.
pub fn h_component(n: usize, x: &Generator, y: &Generator, ring: Ring) -> Result<DendElem> {
    if n < 2 {
        return Err(AlgebraError::invalid(
            "obstruction components start at degree 2",
        ));
    }
    let p = exp_left_gen(x, n, ring)?.mul(&exp_left_gen(y, n, ring)?)?;
    Ok(p.bch_extract()?.component(n).clone())
}

/// Degree-`n` part of the obstruction in `e(x)e(x) = e(2x + H_2(x,x) + ...)`.
pub fn h_onevar(n: usize, x: &Generator, ring: Ring) -> Result<DendElem> {
    h_component(n, x, x, ring)
}

/// Sign convention for the comb expansion of the one-variable obstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombSign {
    /// `(-1)^(j-1)`, forced by the two-variable brace formula at `y = x`.
    Corrected,
    /// `(-1)^j`, which gives the negative at every degree.
    Printed,
}

/// `sum_{i+j=n+1, i,j>=1} sign(j) (rc^i v lc^j)(x, ..., x)`.
pub fn comb_grafting_sum(n: usize, x: &Generator, ring: Ring, sign: CombSign) -> Result<DendElem> {
    if n < 2 {
        return Err(AlgebraError::invalid(
            "the comb expansion starts at degree 2",
        ));
    }
    let mut terms = Vec::new();
    for i in 1..=n {
        let j = n + 1 - i;
        let shape = graft(right_comb(i)?, left_comb(j)?);
        let odd = match sign {
            CombSign::Corrected => (j - 1) % 2 == 1,
            CombSign::Printed => j % 2 == 1,
        };
        let c = if odd { Coeff::Small(-1) } else { Coeff::ONE };
        terms.push((
            crate::dend::DecoratedTree::new(shape, vec![x.clone(); n])?,
            c,
        ));
    }
    Ok(DendElem::from_terms(ring, terms))
}

/// Multilinear part of the degree-`n` obstruction in
/// `e(x_1) ... e(x_n) = e(x_1 + ... + x_n + ...)` for distinct generators.
pub fn h_multilinear(gens: &[Generator], ring: Ring) -> Result<DendElem> {
    let n = gens.len();
    if n < 2 {
        return Err(AlgebraError::invalid("need at least two generators"));
    }
    let mut product = DendSeries::unit(n, ring)?.with_filter(TermFilter::DistinctLetters);
    for g in gens {
        let e = DendSeries::generator(g, n, ring)?
            .with_filter(TermFilter::DistinctLetters)
            .exp_left()?;
        product = product.mul(&e)?;
    }
    Ok(product.bch_extract()?.component(n).multilinear_part(gens))
}

/// `{x_1, {x_2, ... {x_{n-1}, x_n}}}` with the pre-Lie product.
pub fn iterated_prelie(gens: &[Generator], ring: Ring) -> Result<DendElem> {
    let (last, init) = gens
        .split_last()
        .ok_or_else(|| AlgebraError::invalid("need at least one generator"))?;
    let mut acc = DendElem::generator(last, ring);
    for g in init.iter().rev() {
        acc = DendElem::generator(g, ring).prelie(&acc)?;
    }
    Ok(acc)
}

/// Closed form over splittings of `{1, ..., n-1}` into `I` and `J`:
/// `sum (-1)^|J| x_{i_1} > (... (x_{i_k} > x_n < x_{j_l}) ...) < x_{j_1}`.
pub fn prelie_shuffle_sum(gens: &[Generator], ring: Ring) -> Result<DendElem> {
    let (last, init) = gens
        .split_last()
        .ok_or_else(|| AlgebraError::invalid("need at least one generator"))?;
    let m = init.len();
    let mut total = DendElem::zero(ring);
    for mask in 0u64..(1u64 << m) {
        let mut term = DendElem::generator(last, ring);
        let mut right_count = 0;
        for idx in (0..m).rev() {
            let g = DendElem::generator(&init[idx], ring);
            if mask & (1 << idx) != 0 {
                term = g.succ(&term)?;
            } else {
                term = term.prec(&g)?;
                right_count += 1;
            }
        }
        if right_count % 2 == 1 {
            term = term.neg();
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

/// `(-1)^(n-1) x < x^(n-1)` with the associative power, the degree-`n`
/// part of `L(x)`.
pub fn log_component_closed_form(x: &Generator, n: usize, ring: Ring) -> Result<DendElem> {
    let xe = DendElem::generator(x, ring);
    if n == 1 {
        return Ok(xe);
    }
    let t = xe.prec(&xe.power_assoc(n - 1)?)?;
    Ok(if n.is_multiple_of(2) { t.neg() } else { t })
}

#[cfg(test)]
mod tests;
