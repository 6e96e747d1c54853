//! A validated prime characteristic.
//!
//! Every operation that depends on a characteristic ℓ takes a [`Prime`], so
//! the primality precondition is checked exactly once, at the API boundary.

use core::fmt;

/// A prime number. Construction via [`Prime::new`] is the only way to get
/// one, so holders can rely on primality without re-checking.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    /// Wraps `value` after a deterministic primality test. Rejects 0, 1 and
    /// composite numbers.
    pub fn new(value: u64) -> Result<Self, NotPrime> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(NotPrime(value))
        }
    }

    /// The underlying integer.
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Error for a value that failed the primality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotPrime(pub u64);

impl fmt::Display for NotPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not prime", self.0)
    }
}

impl core::error::Error for NotPrime {}

/// Deterministic Miller–Rabin, exact for all `u64` inputs with the witness
/// set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}.
pub(crate) fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_accepted() {
        for p in [2u64, 3, 5, 7, 11, 13, 97, 101] {
            assert!(Prime::new(p).is_ok(), "{p} should be prime");
        }
    }

    #[test]
    fn non_primes_rejected() {
        for n in [0u64, 1, 4, 6, 9, 15, 91, 1024] {
            assert_eq!(Prime::new(n), Err(NotPrime(n)));
        }
    }

    #[test]
    fn large_inputs() {
        // Mersenne prime 2^61 - 1 and a neighbouring composite.
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(2_305_843_009_213_693_953));
    }

    #[test]
    fn agrees_with_trial_division_below_10000() {
        fn trial(n: u64) -> bool {
            n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
        }
        for n in 0..10_000u64 {
            assert_eq!(is_prime(n), trial(n), "mismatch at {n}");
        }
    }
}
