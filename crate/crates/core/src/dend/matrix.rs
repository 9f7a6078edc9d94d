//! Square matrices with entries in the free dendriform algebra. Entrywise
//! `(M < N)_ij = sum_k M_ik < N_kj`, and likewise for `>`, make them a
//! dendriform algebra again.

use crate::dend::{DendElem, Product};
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendMatrix {
    size: usize,
    ring: Ring,
    entries: Vec<DendElem>,
}

impl DendMatrix {
    pub fn zero(size: usize, ring: Ring) -> Result<DendMatrix> {
        if size == 0 {
            return Err(AlgebraError::invalid("matrix size must be at least 1"));
        }
        Ok(DendMatrix {
            size,
            ring,
            entries: vec![DendElem::zero(ring); size * size],
        })
    }

    /// Row-major entries.
    pub fn from_rows(rows: Vec<Vec<DendElem>>, ring: Ring) -> Result<DendMatrix> {
        let size = rows.len();
        let mut m = DendMatrix::zero(size, ring)?;
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(AlgebraError::invalid("matrix must be square"));
            }
            for (j, e) in row.into_iter().enumerate() {
                m.set(i, j, e)?;
            }
        }
        Ok(m)
    }

    /// `E_ij(a)`: `a` in slot `(i, j)`, zero elsewhere.
    pub fn unit_entry(size: usize, i: usize, j: usize, a: DendElem) -> Result<DendMatrix> {
        let mut m = DendMatrix::zero(size, a.ring())?;
        m.set(i, j, a)?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &DendElem {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, a: DendElem) -> Result<()> {
        self.ring.ensure_same(&a.ring())?;
        if i >= self.size || j >= self.size {
            return Err(AlgebraError::invalid(format!(
                "index ({i}, {j}) out of range for a {0}x{0} matrix",
                self.size
            )));
        }
        self.entries[i * self.size + j] = a;
        Ok(())
    }

    fn check(&self, other: &DendMatrix) -> Result<()> {
        self.ring.ensure_same(&other.ring)?;
        if self.size != other.size {
            return Err(AlgebraError::invalid(format!(
                "matrix size mismatch: {} vs {}",
                self.size, other.size
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &DendMatrix) -> Result<DendMatrix> {
        self.check(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(DendMatrix { entries, ..*self })
    }

    pub fn prec(&self, other: &DendMatrix) -> Result<DendMatrix> {
        self.product(other, Product::Prec)
    }

    pub fn succ(&self, other: &DendMatrix) -> Result<DendMatrix> {
        self.product(other, Product::Succ)
    }

    pub fn mul(&self, other: &DendMatrix) -> Result<DendMatrix> {
        self.product(other, Product::Star)
    }

    fn product(&self, other: &DendMatrix, op: Product) -> Result<DendMatrix> {
        self.check(other)?;
        let n = self.size;
        let mut out = DendMatrix::zero(n, self.ring)?;
        for i in 0..n {
            for j in 0..n {
                let mut acc = DendElem::zero(self.ring);
                for k in 0..n {
                    let term = self.get(i, k).product(other.get(k, j), op, None)?;
                    acc = acc.add(&term)?;
                }
                out.entries[i * n + j] = acc;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dend::Generator;

    const Z: Ring = Ring::Integers;

    fn v(name: &str) -> DendElem {
        DendElem::generator(&Generator::named(name), Z)
    }

    #[test]
    fn one_by_one_reduces_to_entries() {
        let a = DendMatrix::from_rows(vec![vec![v("x")]], Z).unwrap();
        let b = DendMatrix::from_rows(vec![vec![v("y")]], Z).unwrap();
        assert_eq!(
            a.prec(&b).unwrap().get(0, 0),
            &v("x").prec(&v("y")).unwrap()
        );
        assert_eq!(
            a.succ(&b).unwrap().get(0, 0),
            &v("x").succ(&v("y")).unwrap()
        );
    }

    #[test]
    fn elementary_matrices() {
        let e12 = DendMatrix::unit_entry(2, 0, 1, v("x")).unwrap();
        let e21 = DendMatrix::unit_entry(2, 1, 0, v("y")).unwrap();
        let expected = DendMatrix::unit_entry(2, 0, 0, v("x").prec(&v("y")).unwrap()).unwrap();
        assert_eq!(e12.prec(&e21).unwrap(), expected);
        assert!(e21.prec(&e21).unwrap().get(1, 0).is_zero());
    }

    #[test]
    fn size_and_shape_errors() {
        let a = DendMatrix::zero(2, Z).unwrap();
        let b = DendMatrix::zero(3, Z).unwrap();
        assert!(a.prec(&b).is_err());
        assert!(DendMatrix::zero(0, Z).is_err());
        assert!(DendMatrix::from_rows(vec![vec![v("x"), v("y")]], Z).is_err());
        let m5 = DendMatrix::zero(2, Ring::ModPrime(5)).unwrap();
        assert!(matches!(
            a.succ(&m5),
            Err(AlgebraError::RingMismatch { .. })
        ));
    }
}
