//! Arithmetic of the residue ring `Z_n`: factorization, the Euler totient,
//! and the unit / non-unit split that drives unit-graph adjacency.
//!
//! Everything here is exact `u64` arithmetic. Factorization is trial
//! division, which is instant at the desk scale this crate targets
//! (n well below 2^40).

use crate::{Error, Result};

/// Greatest common divisor (binary-free classic Euclid; `gcd(0, 0) = 0`).
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization of a positive integer, sorted by prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factored integer.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs in increasing prime order; empty for n = 1.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct primes dividing n.
    pub fn distinct_prime_count(&self) -> usize {
        self.factors.len()
    }

    /// `φ(n)`, via the product formula over the factorization.
    pub fn euler_phi(&self) -> u64 {
        let mut phi = 1u64;
        for &(p, e) in &self.factors {
            phi *= p.pow(e - 1) * (p - 1);
        }
        phi
    }

    /// Whether 2 is a unit mod n, i.e. n is odd.
    pub fn two_is_unit(&self) -> bool {
        self.n % 2 == 1
    }

    /// True when n is a power of a single prime.
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }
}

/// Factor `n ≥ 1` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

/// `φ(n)` for `n ≥ 1`.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

/// The unit / non-unit partition of `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassification {
    n: u64,
    is_unit: Vec<bool>,
    unit_count: u64,
}

impl ResidueClassification {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Membership test; `x` must already be reduced mod n.
    pub fn is_unit(&self, x: u64) -> bool {
        self.is_unit[x as usize]
    }

    /// `|U(Z_n)| = φ(n)`.
    pub fn unit_count(&self) -> u64 {
        self.unit_count
    }

    /// Units in increasing order.
    pub fn units(&self) -> Vec<u64> {
        (0..self.n).filter(|&x| self.is_unit[x as usize]).collect()
    }

    /// Non-units in increasing order (always contains 0).
    pub fn non_units(&self) -> Vec<u64> {
        (0..self.n).filter(|&x| !self.is_unit[x as usize]).collect()
    }
}

/// Classify every residue of `Z_n` (`n ≥ 2`) as unit or non-unit.
///
/// A residue `x` is a unit exactly when `gcd(x, n) = 1`; the unit count
/// always equals `φ(n)`.
pub fn classify(n: u64) -> Result<ResidueClassification> {
    if n < 2 {
        return Err(if n == 0 {
            Error::ZeroModulus
        } else {
            Error::ModulusTooSmall
        });
    }
    let is_unit: Vec<bool> = (0..n).map(|x| gcd(x, n) == 1).collect();
    let unit_count = is_unit.iter().filter(|&&u| u).count() as u64;
    Ok(ResidueClassification {
        n,
        is_unit,
        unit_count,
    })
}
