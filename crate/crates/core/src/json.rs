//! JSON forms of elements and series.
//!
//! ```text
//! term    {"coeff": "-2", "tree": "(|(||))", "word": ["x", "y"]}
//! element [term, ...]                       (canonical order)
//! series  {"N": 7, "ring": "int", "unit": "1", "components": {"1": [...], ...}}
//! word    {"coeff": "3", "word": ["x", "x", "y"]}
//! char p  {"p": 3, "N": 6, "coeffs": {"1": 1, "2": 2}}
//! ```

use serde::{Deserialize, Serialize};

use crate::charp::CharPSeries;
use crate::dend::{DecoratedTree, DendElem, Generator};
use crate::error::{AlgebraError, Result};
use crate::ring::{Coeff, Ring};
use crate::series::DendSeries;
use crate::tree::Tree;
use crate::zinbiel::{ZinbElem, ZinbWord};

// serde_json is built with `preserve_order`, so its map keeps insertion order.
type OrderedMap<V> = serde_json::Map<String, V>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub tree: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub ring: Ring,
    pub unit: String,
    pub components: OrderedMap<serde_json::Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharPJson {
    pub p: u64,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    pub coeffs: OrderedMap<serde_json::Value>,
}

fn gens(names: &[String]) -> Result<Vec<Generator>> {
    names.iter().map(|n| Generator::new(n)).collect()
}

pub fn elem_to_terms(a: &DendElem) -> Vec<TermJson> {
    a.terms()
        .map(|(t, c)| TermJson {
            coeff: c.to_string(),
            tree: t.shape().encode(),
            word: t.word().iter().map(|g| g.name().to_string()).collect(),
        })
        .collect()
}

pub fn elem_from_terms(terms: &[TermJson], ring: Ring) -> Result<DendElem> {
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let shape = Tree::decode(&t.tree)?;
        parsed.push((
            DecoratedTree::new(shape, gens(&t.word)?)?,
            t.coeff.parse::<Coeff>()?,
        ));
    }
    Ok(DendElem::from_terms(ring, parsed))
}

pub fn elem_to_json(a: &DendElem) -> serde_json::Value {
    serde_json::to_value(elem_to_terms(a)).expect("terms serialize")
}

pub fn elem_from_json(v: &serde_json::Value, ring: Ring) -> Result<DendElem> {
    let terms: Vec<TermJson> = serde_json::from_value(v.clone()).map_err(json_err)?;
    elem_from_terms(&terms, ring)
}

pub fn zinb_to_json(a: &ZinbElem) -> serde_json::Value {
    let terms: Vec<WordTermJson> = a
        .terms()
        .map(|(w, c)| WordTermJson {
            coeff: c.to_string(),
            word: w.letters().iter().map(|g| g.name().to_string()).collect(),
        })
        .collect();
    serde_json::to_value(terms).expect("terms serialize")
}

pub fn zinb_from_json(v: &serde_json::Value, ring: Ring) -> Result<ZinbElem> {
    let terms: Vec<WordTermJson> = serde_json::from_value(v.clone()).map_err(json_err)?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        parsed.push((ZinbWord::new(gens(&t.word)?)?, t.coeff.parse::<Coeff>()?));
    }
    Ok(ZinbElem::from_terms(ring, parsed))
}

/// Only nonzero components are listed.
pub fn series_to_json(s: &DendSeries) -> SeriesJson {
    let mut components = OrderedMap::new();
    for (d, c) in s.components() {
        if !c.is_zero() {
            components.insert(d.to_string(), elem_to_json(c));
        }
    }
    SeriesJson {
        max_degree: s.max_degree(),
        ring: s.ring(),
        unit: s.unit_coeff().to_string(),
        components,
    }
}

pub fn series_from_json(j: &SeriesJson) -> Result<DendSeries> {
    let mut comps = vec![DendElem::zero(j.ring); j.max_degree];
    for (k, v) in &j.components {
        let d: usize = k
            .parse()
            .map_err(|_| AlgebraError::invalid(format!("bad degree key {k:?}")))?;
        if d == 0 || d > j.max_degree {
            return Err(AlgebraError::invalid(format!(
                "degree {d} outside 1..={}",
                j.max_degree
            )));
        }
        comps[d - 1] = elem_from_json(v, j.ring)?;
    }
    DendSeries::from_parts(j.max_degree, j.ring, j.unit.parse()?, comps)
}

pub fn charp_to_json(s: &CharPSeries) -> CharPJson {
    let mut coeffs = OrderedMap::new();
    for (n, c) in s.nonzero() {
        coeffs.insert(n.to_string(), serde_json::Value::from(c));
    }
    CharPJson {
        p: s.p(),
        max_degree: Some(s.max_degree()),
        coeffs,
    }
}

pub fn charp_from_json(j: &CharPJson) -> Result<CharPSeries> {
    let mut entries = Vec::new();
    for (k, v) in &j.coeffs {
        let n: usize = k
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| AlgebraError::invalid(format!("bad degree key {k:?}")))?;
        let c = v.as_i64().ok_or_else(|| {
            AlgebraError::invalid(format!("coefficient of degree {n} is not an integer"))
        })?;
        entries.push((n, c));
    }
    let top = entries.iter().map(|(n, _)| *n).max().unwrap_or(1);
    let max_degree = j.max_degree.unwrap_or(top);
    if top > max_degree {
        return Err(AlgebraError::invalid(
            "coefficient above the truncation degree",
        ));
    }
    let mut dense = vec![0i64; max_degree];
    for (n, c) in entries {
        dense[n - 1] = c;
    }
    CharPSeries::from_coeffs(j.p, max_degree, &dense)
}

fn json_err(e: serde_json::Error) -> AlgebraError {
    AlgebraError::invalid(format!("malformed JSON: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::exp_left_gen;
    use serde_json::json;

    #[test]
    fn term_form() {
        let x = DendElem::generator(&Generator::named("x"), Ring::Integers);
        let y = DendElem::generator(&Generator::named("y"), Ring::Integers);
        let v = elem_to_json(&x.prelie(&y).unwrap());
        assert_eq!(
            v,
            json!([
                {"coeff": "1", "tree": "((||)|)", "word": ["x", "y"]},
                {"coeff": "-1", "tree": "(|(||))", "word": ["y", "x"]}
            ])
        );
    }

    #[test]
    fn series_round_trip() {
        let s = exp_left_gen(&Generator::named("x"), 4, Ring::ModPrime(3)).unwrap();
        let j = series_to_json(&s);
        assert_eq!(j.ring, Ring::ModPrime(3));
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with(r#"{"N":4,"ring":"mod:3","unit":"1","components":{"1":"#));
        let back: SeriesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(series_from_json(&back).unwrap(), s);
    }

    #[test]
    fn bad_series_rejected() {
        let j: SeriesJson = serde_json::from_value(json!({
            "N": 2, "ring": "int", "unit": "0",
            "components": {"1": [{"coeff": "1", "tree": "(|(||))", "word": ["x", "y"]}]}
        }))
        .unwrap();
        assert!(series_from_json(&j).is_err());
        let bad_tree = json!([{"coeff": "1", "tree": "(|", "word": ["x"]}]);
        assert!(matches!(
            elem_from_json(&bad_tree, Ring::Integers),
            Err(AlgebraError::Parse { offset: 2, .. })
        ));
    }

    #[test]
    fn charp_form() {
        let l = CharPSeries::log(3, 6).unwrap();
        let j = charp_to_json(&l);
        assert_eq!(
            serde_json::to_value(&j).unwrap(),
            json!({"p": 3, "N": 6, "coeffs": {"1": 1, "2": 2, "3": 2}})
        );
        assert_eq!(charp_from_json(&j).unwrap(), l);
    }

    #[test]
    fn zinb_round_trip() {
        let x = ZinbElem::generator(&Generator::named("x"), Ring::Integers);
        let y = ZinbElem::generator(&Generator::named("y"), Ring::Integers);
        let a = x.mul(&y).unwrap().scale(&Coeff::Small(-4));
        assert_eq!(
            zinb_from_json(&zinb_to_json(&a), Ring::Integers).unwrap(),
            a
        );
    }
}
