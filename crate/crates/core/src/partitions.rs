//! Partition algebra: representation, conjugation, ℓ-regularity tests,
//! enumerations and base-ℓ helpers.
//!
//! A [`Partition`] is a weakly decreasing list of positive integers; the
//! empty partition (of 0) is a first-class value. Enumerations are returned
//! in reverse-lexicographic order so output is deterministic and suitable
//! for golden tests.
//!
//! The textual format used across the crate (CLI arguments, JSON fields) is
//! comma-separated decreasing parts, e.g. `4,2,1`, with the literal `0`
//! denoting the empty partition.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::prime::Prime;

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates and wraps a part list. Parts must be positive and weakly
    /// decreasing; an empty list is the partition of 0.
    pub fn new(parts: Vec<u64>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing);
        }
        Ok(Partition { parts })
    }

    /// The partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `j`-th part (0-based), with 0 past the end.
    pub fn part(&self, j: usize) -> u64 {
        self.parts.get(j).copied().unwrap_or(0)
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity(&self, v: u64) -> u64 {
        self.parts.iter().filter(|&&p| p == v).count() as u64
    }

    /// The conjugate partition: rows and columns of the Young diagram
    /// exchanged. An involution that preserves size.
    pub fn transpose(&self) -> Partition {
        let rows = match self.parts.first() {
            Some(&first) => first,
            None => return Partition::empty(),
        };
        let mut parts = Vec::with_capacity(rows as usize);
        for j in 1..=rows {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count() as u64);
        }
        Partition { parts }
    }

    /// True iff no part value occurs `ell` or more times.
    pub fn is_ell_regular(&self, ell: Prime) -> bool {
        let ell = ell.get();
        let mut run = 1u64;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= ell {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        true
    }

    /// True iff the transpose is ℓ-regular; equivalently every successive
    /// difference of parts (with a trailing 0 appended) is < `ell`.
    pub fn is_ell_restricted(&self, ell: Prime) -> bool {
        self.differences().into_iter().all(|d| d < ell.get())
    }

    /// The difference sequence `d_j = parts[j] - parts[j+1]` with a trailing
    /// 0 appended; empty for the empty partition.
    pub(crate) fn differences(&self) -> Vec<u64> {
        (0..self.parts.len())
            .map(|j| self.part(j) - self.part(j + 1))
            .collect()
    }

    /// Rebuilds a partition from a difference sequence (inverse of
    /// [`Partition::differences`] up to trailing zeros).
    pub(crate) fn from_differences(diffs: &[u64]) -> Partition {
        let mut parts: Vec<u64> = Vec::with_capacity(diffs.len());
        let mut acc = 0u64;
        for &d in diffs.iter().rev() {
            acc += d;
            parts.push(acc);
        }
        parts.reverse();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Multiplies every part by `c` (which must be positive).
    pub fn scale(&self, c: u64) -> Partition {
        assert!(c > 0, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * c).collect(),
        }
    }

    /// Componentwise sum of parts, zero-padding the shorter operand. The
    /// result of adding two weakly decreasing sequences is weakly
    /// decreasing, so no revalidation is needed.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.parts.len().max(other.parts.len());
        let parts: Vec<u64> = (0..len).map(|j| self.part(j) + other.part(j)).collect();
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }
}

/// Renders the textual format: `4,2,1`, or `0` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "0" {
            return Ok(Partition::empty());
        }
        let parse = |piece: &str| {
            piece
                .parse::<u64>()
                .map_err(|_| PartitionError::Parse(s.to_string()))
        };
        let parts = s.split(',').map(parse).collect::<Result<Vec<u64>, _>>()?;
        Partition::new(parts).map_err(|e| match e {
            PartitionError::ZeroPart | PartitionError::NotWeaklyDecreasing => {
                PartitionError::Parse(s.to_string())
            }
            other => other,
        })
    }
}

/// Errors from partition construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts were not weakly decreasing.
    NotWeaklyDecreasing,
    /// A part was 0.
    ZeroPart,
    /// `base_ell_partition` was asked for the expansion of 0.
    ZeroSize,
    /// Text did not match the `4,2,1` / `0` format.
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotWeaklyDecreasing => write!(f, "parts must be weakly decreasing"),
            PartitionError::ZeroPart => write!(f, "parts must be positive"),
            PartitionError::ZeroSize => write!(f, "expected a positive integer"),
            PartitionError::Parse(s) => write!(f, "invalid partition {s:?}"),
        }
    }
}

impl core::error::Error for PartitionError {}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first and
/// `(1,…,1)` last. `enumerate_partitions(0)` is `[()]`.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    out
}

fn descend(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// The ℓ-regular partitions of `n`: the filter of [`enumerate_partitions`]
/// by [`Partition::is_ell_regular`], order inherited.
pub fn enumerate_ell_regular(n: u64, ell: Prime) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.is_ell_regular(ell))
        .collect()
}

/// All partitions of `n` whose parts are powers of `ell` (including 1), in
/// reverse-lexicographic order.
pub fn enumerate_power_partitions(n: u64, ell: Prime) -> Vec<Partition> {
    let mut powers = Vec::new();
    let mut p = 1u64;
    loop {
        powers.push(p);
        match p.checked_mul(ell.get()) {
            Some(next) if next <= n => p = next,
            _ => break,
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend_powers(n, u64::MAX, &powers, &mut prefix, &mut out);
    out
}

fn descend_powers(
    remaining: u64,
    max_part: u64,
    powers: &[u64],
    prefix: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for &part in powers.iter().rev() {
        if part > remaining || part > max_part {
            continue;
        }
        prefix.push(part);
        descend_powers(remaining - part, part, powers, prefix, out);
        prefix.pop();
    }
}

/// The partition ν(n) whose parts are the powers ℓⁱ of the base-ℓ expansion
/// of `n`, each with multiplicity equal to the corresponding digit. It is
/// the unique partition of `n` into powers of ℓ with every multiplicity
/// < ℓ. Rejects `n = 0`.
pub fn base_ell_partition(n: u64, ell: Prime) -> Result<Partition, PartitionError> {
    if n == 0 {
        return Err(PartitionError::ZeroSize);
    }
    let mut digits = Vec::new(); // digits[i] = i-th base-ℓ digit
    let mut rest = n;
    while rest > 0 {
        digits.push(rest % ell.get());
        rest /= ell.get();
    }
    let mut parts = Vec::new();
    let mut power = ell.get().pow(digits.len() as u32 - 1);
    for &digit in digits.iter().rev() {
        for _ in 0..digit {
            parts.push(power);
        }
        power /= ell.get();
    }
    Ok(Partition { parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ell(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn construction_rejects_bad_lists() {
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotWeaklyDecreasing)
        );
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart));
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn transpose_basics() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        for n in 1..=30u64 {
            let col = p(&vec![1; n as usize]);
            assert_eq!(p(&[n]).transpose(), col);
            assert_eq!(col.transpose(), p(&[n]));
        }
    }

    #[test]
    fn ell_regular_examples() {
        assert!(!p(&[2, 2, 1]).is_ell_regular(ell(2)));
        assert!(p(&[3, 2, 1]).is_ell_regular(ell(2)));
        assert!(!p(&[1, 1, 1]).is_ell_regular(ell(3)));
        assert!(Partition::empty().is_ell_regular(ell(2)));
    }

    #[test]
    fn ell_restricted_examples() {
        assert!(p(&[2, 1]).is_ell_restricted(ell(2)));
        assert!(!p(&[3]).is_ell_restricted(ell(2)));
        assert!(Partition::empty().is_ell_restricted(ell(2)));
    }

    #[test]
    fn restricted_is_regular_of_transpose() {
        for n in 0..=12u64 {
            for lam in enumerate_partitions(n) {
                for l in [2u64, 3, 5] {
                    assert_eq!(
                        lam.is_ell_restricted(ell(l)),
                        lam.transpose().is_ell_regular(ell(l)),
                        "mismatch at {lam} with ell={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn enumerate_count_matches_recurrence_oracle() {
        // Independent count: p(n, k) = partitions of n into parts <= k.
        fn count(n: u64, k: u64) -> u64 {
            if n == 0 {
                return 1;
            }
            (1..=k.min(n)).map(|part| count(n - part, part)).sum()
        }
        for n in 0..=14u64 {
            assert_eq!(enumerate_partitions(n).len() as u64, count(n, n));
        }
        assert_eq!(enumerate_partitions(10).len(), 42);
    }

    #[test]
    fn enumerate_ell_regular_examples() {
        assert_eq!(enumerate_ell_regular(3, ell(2)), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(enumerate_ell_regular(2, ell(2)), vec![p(&[2])]);
        // ℓ > n: nothing can repeat ℓ times.
        assert_eq!(enumerate_ell_regular(4, ell(5)), enumerate_partitions(4));
    }

    #[test]
    fn enumerate_power_partitions_examples() {
        assert_eq!(
            enumerate_power_partitions(4, ell(2)),
            vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(
            enumerate_power_partitions(3, ell(2)),
            vec![p(&[2, 1]), p(&[1, 1, 1])]
        );
        for l in [2u64, 3, 5] {
            assert_eq!(enumerate_power_partitions(1, ell(l)), vec![p(&[1])]);
        }
    }

    #[test]
    fn power_partitions_match_filter() {
        for n in 0..=20u64 {
            for l in [2u64, 3, 5] {
                let filtered: Vec<Partition> = enumerate_partitions(n)
                    .into_iter()
                    .filter(|lam| {
                        lam.parts().iter().all(|&part| {
                            let mut v = part;
                            while v % l == 0 {
                                v /= l;
                            }
                            v == 1
                        })
                    })
                    .collect();
                assert_eq!(enumerate_power_partitions(n, ell(l)), filtered);
            }
        }
    }

    #[test]
    fn base_ell_examples() {
        assert_eq!(base_ell_partition(6, ell(2)), Ok(p(&[4, 2])));
        assert_eq!(base_ell_partition(7, ell(3)), Ok(p(&[3, 3, 1])));
        for n in 1..5u64 {
            assert_eq!(
                base_ell_partition(n, ell(5)),
                Ok(p(&vec![1; n as usize]))
            );
        }
        assert_eq!(base_ell_partition(0, ell(2)), Err(PartitionError::ZeroSize));
    }

    #[test]
    fn base_ell_is_the_low_multiplicity_power_partition() {
        for n in 1..=20u64 {
            for l in [2u64, 3, 5] {
                let nu = base_ell_partition(n, ell(l)).unwrap();
                let all = enumerate_power_partitions(n, ell(l));
                assert!(all.contains(&nu));
                let low_mult: Vec<&Partition> = all
                    .iter()
                    .filter(|cand| cand.parts().iter().all(|&v| cand.multiplicity(v) < l))
                    .collect();
                assert_eq!(low_mult, vec![&nu], "n={n}, ell={l}");
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let nu = p(&[4, 2, 2, 1]);
        assert_eq!(nu.multiplicity(2), 2);
        assert_eq!(nu.multiplicity(8), 0);
        for n in 0..=12u64 {
            for lam in enumerate_partitions(n) {
                let total: u64 = (1..=n).map(|v| v * lam.multiplicity(v)).sum();
                assert_eq!(total, lam.size());
            }
        }
    }

    #[test]
    fn scale_and_add_examples() {
        assert_eq!(p(&[2, 1]).scale(3), p(&[6, 3]));
        assert_eq!(p(&[2]).add(&p(&[1])), p(&[3]));
        assert_eq!(p(&[3, 1]).add(&p(&[2, 2])), p(&[5, 3]));
        assert_eq!(p(&[2, 1]).add(&Partition::empty()), p(&[2, 1]));
    }

    #[test]
    fn difference_round_trip() {
        for n in 0..=12u64 {
            for lam in enumerate_partitions(n) {
                assert_eq!(Partition::from_differences(&lam.differences()), lam);
            }
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(format!("{}", p(&[4, 2, 1])), "4,2,1");
        assert_eq!(format!("{}", Partition::empty()), "0");
        assert_eq!("4,2,1".parse::<Partition>(), Ok(p(&[4, 2, 1])));
        assert_eq!("0".parse::<Partition>(), Ok(Partition::empty()));
        for bad in ["", "1,2", "4,0", "a", "3,", " 3"] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?} should fail");
        }
    }
}
