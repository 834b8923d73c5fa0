//! Prime-field scalars.

use crate::error::{Error, Result};

/// The prime field `F_p`. Scalars are `u64` values kept in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

/// Largest admissible modulus (exclusive): products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::Domain(format!("modulus {p} outside [2, 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("p must be prime (got {p})")));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// Reduces an arbitrary-size decimal integer (as digits) into `[0, p)`.
    pub fn from_decimal(&self, digits: &str) -> u64 {
        digits
            .bytes()
            .fold(0u64, |acc, b| (acc * 10 + u64::from(b - b'0')) % self.p)
    }
}

/// Deterministic primality test by trial division; moduli are below 2^31.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut k = 3;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 2;
    }
    true
}
