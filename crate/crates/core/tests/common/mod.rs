#![allow(dead_code)]

use std::collections::HashMap;

use dendexp_core::{enumerate_trees, Coeff, DecoratedTree, DendElem, Generator, Ring};

pub const Z: Ring = Ring::Integers;

pub fn g(n: &str) -> Generator {
    Generator::named(n)
}

pub fn v(n: &str) -> DendElem {
    DendElem::generator(&g(n), Z)
}

pub fn words(len: usize, letters: &[&str]) -> Vec<Vec<Generator>> {
    let mut out: Vec<Vec<Generator>> = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(g(l));
                    w
                })
            })
            .collect();
    }
    out
}

/// Every basis monomial of degree `d` over `letters`.
pub fn basis(d: usize, letters: &[&str]) -> Vec<DendElem> {
    let ws = words(d, letters);
    enumerate_trees(d + 1)
        .unwrap()
        .iter()
        .flat_map(|t| {
            ws.iter()
                .map(move |w| DendElem::monomial(t.clone(), w.clone(), Z).unwrap())
        })
        .collect()
}

/// Rank over Z/pZ of a family of elements, by Gaussian elimination on
/// their coordinate vectors. Full rank mod p implies full rank over Q.
pub fn rank_mod_p(vectors: &[DendElem], p: u64) -> usize {
    let mut index: HashMap<DecoratedTree, usize> = HashMap::new();
    let mut rows: Vec<HashMap<usize, u64>> = Vec::new();
    for vec in vectors {
        let mut row = HashMap::new();
        for (t, c) in vec.terms() {
            let n = index.len();
            let col = *index.entry(t.clone()).or_insert(n);
            row.insert(col, c.rem_euclid(p));
        }
        row.retain(|_, c| *c != 0);
        rows.push(row);
    }
    let mut pivots: HashMap<usize, HashMap<usize, u64>> = HashMap::new();
    let mut rank = 0;
    for mut row in rows {
        while let Some(&col) = row.keys().min() {
            match pivots.get(&col) {
                None => {
                    let inv = pow_mod(row[&col], p - 2, p);
                    for c in row.values_mut() {
                        *c = *c * inv % p;
                    }
                    pivots.insert(col, row);
                    rank += 1;
                    break;
                }
                Some(pivot) => {
                    let f = row[&col];
                    for (k, pv) in pivot {
                        let e = row.entry(*k).or_insert(0);
                        *e = (*e + p - f * pv % p) % p;
                    }
                    row.retain(|_, c| *c != 0);
                }
            }
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn coeff_in_unit_range(c: &Coeff) -> bool {
    c.abs().is_one()
}
