//! One-generator Zinbiel series over `Z/pZ`, on the basis `x^{<n}`.
//!
//! In one generator the Zinbiel product is
//! `x^{<a} < x^{<b} = C(a+b-1, b) x^{<(a+b)}`, and `x^n = n! x^{<n}`.
//! Over a prime field the logarithm without denominators
//! `sum (-1)^(n-1) (n-1)! x^{<n}` stops at degree `p`: its part below
//! degree `p` is the 1 1/2-logarithm and its top coefficient multiplies
//! the divided power `x^{<p}`.

use crate::error::{AlgebraError, Result};
use crate::ring::{is_prime, Coeff, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPSeries {
    p: u64,
    max_degree: usize,
    /// Residue of `x^{<n}` at index `n - 1`.
    coeffs: Vec<u64>,
}

fn check(p: u64, max_degree: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(AlgebraError::invalid(format!("{p} is not prime")));
    }
    if max_degree == 0 {
        return Err(AlgebraError::invalid(
            "truncation degree must be at least 1",
        ));
    }
    Ok(())
}

impl CharPSeries {
    pub fn zero(p: u64, max_degree: usize) -> Result<CharPSeries> {
        check(p, max_degree)?;
        Ok(CharPSeries {
            p,
            max_degree,
            coeffs: vec![0; max_degree],
        })
    }

    /// Build from residues of `x^{<1}, x^{<2}, ...`; extra entries are truncated.
    pub fn from_coeffs(p: u64, max_degree: usize, coeffs: &[i64]) -> Result<CharPSeries> {
        let mut s = CharPSeries::zero(p, max_degree)?;
        for (i, c) in coeffs.iter().take(max_degree).enumerate() {
            s.coeffs[i] = Coeff::Small(*c).rem_euclid(p);
        }
        Ok(s)
    }

    /// The series `x`.
    pub fn identity(p: u64, max_degree: usize) -> Result<CharPSeries> {
        CharPSeries::from_coeffs(p, max_degree, &[1])
    }

    /// `E(x) = sum_{n>=1} x^{<n}`, the exponential without its unit.
    pub fn exp(p: u64, max_degree: usize) -> Result<CharPSeries> {
        check(p, max_degree)?;
        Ok(CharPSeries {
            p,
            max_degree,
            coeffs: vec![1 % p; max_degree],
        })
    }

    /// `L(x) = sum_{n>=1} (-1)^(n-1) (n-1)! x^{<n}` reduced mod p.
    pub fn log(p: u64, max_degree: usize) -> Result<CharPSeries> {
        let mut s = CharPSeries::zero(p, max_degree)?;
        let ring = Ring::ModPrime(p);
        for n in 1..=max_degree {
            let f = ring.factorial(n as u64 - 1);
            let c = if n % 2 == 1 { f } else { ring.neg(&f) };
            s.coeffs[n - 1] = c.rem_euclid(p);
        }
        Ok(s)
    }

    /// `sum_{i<p} (-1)^(i-1) x^i / i`, computed from `x^i = i! x^{<i}` with
    /// modular inverses.
    pub fn one_and_half_log(p: u64, max_degree: usize) -> Result<CharPSeries> {
        let mut s = CharPSeries::zero(p, max_degree)?;
        for i in 1..p.min(max_degree as u64 + 1) {
            let fact = Ring::ModPrime(p).factorial(i).rem_euclid(p);
            let inv = mod_inverse(i, p);
            let mut c = mulmod(fact, inv, p);
            if i % 2 == 0 {
                c = (p - c) % p;
            }
            s.coeffs[i as usize - 1] = c;
        }
        Ok(s)
    }

    /// The divided power `gamma(x) = x^{<p}`.
    pub fn divided_power(p: u64, max_degree: usize) -> Result<CharPSeries> {
        let mut s = CharPSeries::zero(p, max_degree)?;
        if (p as usize) <= max_degree {
            s.coeffs[p as usize - 1] = 1;
        }
        Ok(s)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coeff(&self, n: usize) -> u64 {
        if n == 0 || n > self.max_degree {
            0
        } else {
            self.coeffs[n - 1]
        }
    }

    /// `(degree, residue)` for every nonzero coefficient.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i + 1, c))
    }

    fn compatible(&self, other: &CharPSeries) -> Result<()> {
        if self.p != other.p {
            return Err(AlgebraError::RingMismatch {
                left: Ring::ModPrime(self.p),
                right: Ring::ModPrime(other.p),
            });
        }
        if self.max_degree != other.max_degree {
            return Err(AlgebraError::TruncationMismatch {
                left: self.max_degree,
                right: other.max_degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CharPSeries) -> Result<CharPSeries> {
        self.compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        Ok(CharPSeries { coeffs, ..*self })
    }

    pub fn scale(&self, c: u64) -> CharPSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| mulmod(*a, c % self.p, self.p))
            .collect();
        CharPSeries { coeffs, ..*self }
    }

    /// `a < b` using `x^{<i} < x^{<j} = C(i+j-1, j) x^{<(i+j)}`.
    pub fn prec(&self, other: &CharPSeries) -> Result<CharPSeries> {
        self.compatible(other)?;
        let ring = Ring::ModPrime(self.p);
        let mut out = CharPSeries::zero(self.p, self.max_degree)?;
        for (i, a) in self.nonzero() {
            for (j, b) in other.nonzero() {
                if i + j > self.max_degree {
                    continue;
                }
                let binom = ring
                    .binomial((i + j - 1) as u64, j as u64)
                    .rem_euclid(self.p);
                let c = mulmod(mulmod(a, b, self.p), binom, self.p);
                let slot = &mut out.coeffs[i + j - 1];
                *slot = (*slot + c) % self.p;
            }
        }
        Ok(out)
    }

    /// `outer(inner) = sum_n outer_n inner^{<n}` with `z^{<n} = z < z^{<(n-1)}`.
    pub fn compose(&self, inner: &CharPSeries) -> Result<CharPSeries> {
        self.compatible(inner)?;
        let mut out = CharPSeries::zero(self.p, self.max_degree)?;
        let mut power = inner.clone();
        for n in 1..=self.max_degree {
            if n > 1 {
                power = inner.prec(&power)?;
            }
            let c = self.coeff(n);
            if c != 0 {
                out = out.add(&power.scale(c))?;
            }
        }
        Ok(out)
    }
}

/// `E(L(x)) = x = L(E(x))` to degree `max_degree`.
pub fn compose_check(p: u64, max_degree: usize) -> Result<bool> {
    let e = CharPSeries::exp(p, max_degree)?;
    let l = CharPSeries::log(p, max_degree)?;
    let id = CharPSeries::identity(p, max_degree)?;
    Ok(e.compose(&l)? == id && l.compose(&e)? == id)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64 % p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}
