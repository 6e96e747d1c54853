//! Positive integers kept as prime-exponent maps.
//!
//! Weyl group orders grow factorially, and the statements we care about are
//! divisibility statements, so orders are never multiplied out unless a
//! decimal rendering is explicitly requested. ℓ-valuations and exact
//! division are just exponent arithmetic.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, MulAssign};

use num_bigint::BigUint;

use crate::prime::{is_prime, Prime};

/// A positive integer stored as a map prime → exponent; the empty map is 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredOrder {
    factors: BTreeMap<u64, u32>,
}

impl FactoredOrder {
    /// The integer 1.
    pub fn one() -> Self {
        FactoredOrder::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Builds from (prime, exponent) pairs. Repeated primes accumulate.
    /// Rejects composite bases and zero exponents.
    pub fn from_factors(
        pairs: impl IntoIterator<Item = (u64, u32)>,
    ) -> Result<Self, FactoredOrderError> {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(FactoredOrderError::NotPrime(p));
            }
            if e == 0 {
                return Err(FactoredOrderError::ZeroExponent(p));
            }
            *factors.entry(p).or_insert(0) += e;
        }
        Ok(FactoredOrder { factors })
    }

    /// `p^k` (`k = 0` gives 1).
    pub fn prime_power(p: Prime, k: u32) -> Self {
        let mut factors = BTreeMap::new();
        if k > 0 {
            factors.insert(p.get(), k);
        }
        FactoredOrder { factors }
    }

    /// `n!` in factored form, by Legendre's formula over the primes ≤ n.
    pub fn factorial(n: u64) -> Self {
        let mut factors = BTreeMap::new();
        for p in primes_up_to(n) {
            let mut exp = 0u32;
            let mut q = p;
            loop {
                exp += (n / q) as u32;
                match q.checked_mul(p) {
                    Some(next) if next <= n => q = next,
                    _ => break,
                }
            }
            factors.insert(p, exp);
        }
        FactoredOrder { factors }
    }

    /// (prime, exponent) pairs in increasing prime order.
    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    /// Exponent of `p`; 0 if `p` does not divide the value.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// True iff `self` divides `other` (every exponent ≤).
    pub fn divides(&self, other: &FactoredOrder) -> bool {
        self.factors
            .iter()
            .all(|(p, &e)| other.valuation(*p) >= e)
    }

    /// Exact quotient `self / other`, or `None` when `other ∤ self`.
    pub fn checked_div(&self, other: &FactoredOrder) -> Option<FactoredOrder> {
        if !other.divides(self) {
            return None;
        }
        let mut factors = self.factors.clone();
        for (p, e) in &other.factors {
            let slot = factors.get_mut(p).expect("divisibility checked");
            *slot -= e;
            if *slot == 0 {
                factors.remove(p);
            }
        }
        Some(FactoredOrder { factors })
    }

    /// Multiplies out the factorization.
    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for (&p, &e) in &self.factors {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// Decimal rendering of the value.
    pub fn to_decimal(&self) -> String {
        self.to_biguint().to_string()
    }
}

impl MulAssign<&FactoredOrder> for FactoredOrder {
    // Exponents add when values multiply.
    #[allow(clippy::suspicious_op_assign_impl)]
    fn mul_assign(&mut self, rhs: &FactoredOrder) {
        for (&p, &e) in &rhs.factors {
            *self.factors.entry(p).or_insert(0) += e;
        }
    }
}

impl Mul<&FactoredOrder> for &FactoredOrder {
    type Output = FactoredOrder;

    fn mul(self, rhs: &FactoredOrder) -> FactoredOrder {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

/// Renders the factored form, e.g. `2^4 * 3^2 * 5`; the empty product is `1`.
impl fmt::Display for FactoredOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Errors from [`FactoredOrder::from_factors`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactoredOrderError {
    /// A factor base was not prime.
    NotPrime(u64),
    /// An exponent was 0.
    ZeroExponent(u64),
}

impl fmt::Display for FactoredOrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactoredOrderError::NotPrime(p) => write!(f, "factor base {p} is not prime"),
            FactoredOrderError::ZeroExponent(p) => write!(f, "exponent of {p} must be positive"),
        }
    }
}

impl core::error::Error for FactoredOrderError {}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            for q in (p * p..=n).step_by(p) {
                sieve[q] = false;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &keep)| keep.then_some(i as u64))
        .collect()
}
