//! Exact coefficients and the ground ring they live in.
//!
//! [`Coeff`] is an arbitrary-precision integer with an inline `i64` fast
//! path. [`Ring`] is either the integers or a prime field; residues are
//! always kept in `[0, p)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Exact integer. The `Big` variant is only used for values outside `i64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(BigInt),
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0);
    pub const ONE: Coeff = Coeff::Small(1);

    pub fn from_bigint(v: BigInt) -> Coeff {
        match v.to_i64() {
            Some(s) => Coeff::Small(s),
            None => Coeff::Big(v),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(s) => BigInt::from(*s),
            Coeff::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(s) => Some(*s),
            Coeff::Big(_) => None,
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(s) = a.checked_add(*b) {
                return Coeff::Small(s);
            }
        }
        Coeff::from_bigint(self.to_bigint() + other.to_bigint())
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(s) = a.checked_sub(*b) {
                return Coeff::Small(s);
            }
        }
        Coeff::from_bigint(self.to_bigint() - other.to_bigint())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(s) = a.checked_mul(*b) {
                return Coeff::Small(s);
            }
        }
        Coeff::from_bigint(self.to_bigint() * other.to_bigint())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(s) => match s.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::from_bigint(-BigInt::from(*s)),
            },
            Coeff::Big(b) => Coeff::from_bigint(-b),
        }
    }

    /// Least non-negative residue modulo `m`.
    pub fn rem_euclid(&self, m: u64) -> u64 {
        match self {
            Coeff::Small(s) => (*s as i128).rem_euclid(m as i128) as u64,
            Coeff::Big(b) => b
                .mod_floor(&BigInt::from(m))
                .to_u64()
                .expect("residue fits"),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(s) => *s < 0,
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<u64> for Coeff {
    fn from(v: u64) -> Self {
        Coeff::from_bigint(BigInt::from(v))
    }
}

impl From<BigInt> for Coeff {
    fn from(v: BigInt) -> Self {
        Coeff::from_bigint(v)
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(s) => write!(f, "{s}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Coeff {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let v: BigInt = s
            .trim()
            .parse()
            .map_err(|_| AlgebraError::invalid(format!("not an integer: {s:?}")))?;
        Ok(Coeff::from_bigint(v))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Ground ring of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Ring {
    #[default]
    Integers,
    /// Prime field `Z/pZ`.
    ModPrime(u64),
}

impl Ring {
    pub fn mod_prime(p: u64) -> Result<Ring> {
        if is_prime(p) {
            Ok(Ring::ModPrime(p))
        } else {
            Err(AlgebraError::invalid(format!("modulus {p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Ring::Integers => 0,
            Ring::ModPrime(p) => *p,
        }
    }

    pub fn normalize(&self, c: Coeff) -> Coeff {
        match self {
            Ring::Integers => c,
            Ring::ModPrime(p) => match c {
                Coeff::Small(s) if s >= 0 && (s as u64) < *p => c,
                _ => Coeff::from(c.rem_euclid(*p)),
            },
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.normalize(Coeff::Small(v))
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a.add(b))
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a.sub(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a.mul(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.normalize(a.neg())
    }

    pub fn ensure_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch {
                left: *self,
                right: *other,
            })
        }
    }

    /// Binomial coefficient `C(n, k)` as an element of this ring.
    pub fn binomial(&self, n: u64, k: u64) -> Coeff {
        if k > n {
            return Coeff::ZERO;
        }
        let v: BigInt = num_integer::binomial(BigInt::from(n), BigInt::from(k));
        self.normalize(Coeff::from_bigint(v))
    }

    pub fn factorial(&self, n: u64) -> Coeff {
        let mut acc = BigInt::one();
        for i in 2..=n {
            acc *= i;
        }
        self.normalize(Coeff::from_bigint(acc))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("int"),
            Ring::ModPrime(p) => write!(f, "mod:{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" => Ok(Ring::Integers),
            _ => {
                let p = s
                    .strip_prefix("mod:")
                    .and_then(|rest| rest.parse::<u64>().ok())
                    .ok_or_else(|| {
                        AlgebraError::invalid(format!("ring must be `int` or `mod:P`, got {s:?}"))
                    })?;
                Ring::mod_prime(p)
            }
        }
    }
}

impl Serialize for Ring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
