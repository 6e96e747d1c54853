//! Distinguished nilpotent orbits for simply connected types B, C, D and
//! the characteristic-2 cuspidal classification.
//!
//! Orbits are Jordan-block partitions of the natural module (dimension
//! 2n+1 for B_n, 2n for C_n and D_n) subject to the usual parity
//! constraint. The distinguished ones are classified by a distinct-parts
//! rule; [`oracle_is_distinguished`] checks the same property through the
//! sl₂ weight grading instead, so the two routes verify each other. At
//! ℓ = 2, the cuspidal pairs are exactly the pairs (O, constant) on
//! distinguished orbits, which is what [`cuspidal_pairs_char2`] returns.

use alloc::vec::Vec;
use core::fmt;

use crate::partitions::Partition;
use crate::rootdata::{CartanType, Series};

/// A nilpotent orbit of a classical group, as the Jordan type of the
/// natural module. Construction enforces the type's parity condition:
/// even parts have even multiplicity for B/D, odd parts have even
/// multiplicity for C.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitPartition {
    ctype: CartanType,
    parts: Partition,
}

impl OrbitPartition {
    pub fn new(ctype: CartanType, parts: Partition) -> Result<Self, ClassicalError> {
        let expected = natural_dim(ctype)?;
        if parts.size() != expected {
            return Err(ClassicalError::WrongSize {
                expected,
                actual: parts.size(),
            });
        }
        let must_pair = |part: u64| match ctype.series() {
            Series::C => !part.is_multiple_of(2),
            _ => part.is_multiple_of(2),
        };
        for &part in parts.parts() {
            if must_pair(part) && !parts.multiplicity(part).is_multiple_of(2) {
                return Err(ClassicalError::ParityViolation { part });
            }
        }
        Ok(OrbitPartition { ctype, parts })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn parts(&self) -> &Partition {
        &self.parts
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts)
    }
}

/// Errors for orbit construction and classification queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalError {
    /// The type is not one of B, C, D.
    NotClassical(CartanType),
    /// The partition does not have the dimension of the natural module.
    WrongSize { expected: u64, actual: u64 },
    /// A part violates the type's multiplicity parity condition.
    ParityViolation { part: u64 },
}

impl fmt::Display for ClassicalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassicalError::NotClassical(t) => write!(f, "{t} is not of type B, C or D"),
            ClassicalError::WrongSize { expected, actual } => {
                write!(f, "partition of {actual}, expected {expected}")
            }
            ClassicalError::ParityViolation { part } => {
                write!(f, "part {part} must occur an even number of times")
            }
        }
    }
}

impl core::error::Error for ClassicalError {}

/// Dimension of the natural module: 2n+1 for B_n, 2n for C_n and D_n.
fn natural_dim(ctype: CartanType) -> Result<u64, ClassicalError> {
    let r = ctype.rank() as u64;
    match ctype.series() {
        Series::B => Ok(2 * r + 1),
        Series::C | Series::D => Ok(2 * r),
        _ => Err(ClassicalError::NotClassical(ctype)),
    }
}

/// The distinguished nilpotent orbits: partitions of the natural module
/// into distinct odd parts (B, D) or distinct even parts (C), in
/// reverse-lexicographic order. Gated on [`oracle_is_distinguished`] by
/// the test suite rather than trusted blindly.
pub fn distinguished_partitions(ctype: CartanType) -> Result<Vec<OrbitPartition>, ClassicalError> {
    let n = natural_dim(ctype)?;
    let parity = match ctype.series() {
        Series::C => 0,
        _ => 1,
    };
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    distinct_with_parity(n, u64::MAX, parity, &mut prefix, &mut out);
    Ok(out
        .into_iter()
        .map(|parts| OrbitPartition { ctype, parts })
        .collect())
}

fn distinct_with_parity(
    remaining: u64,
    max_part: u64,
    parity: u64,
    prefix: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::new(prefix.clone()).expect("strictly decreasing"));
        return;
    }
    let mut part = remaining.min(max_part);
    if part % 2 != parity {
        part = part.saturating_sub(1);
    }
    while part >= 1 {
        prefix.push(part);
        distinct_with_parity(remaining - part, part - 1, parity, prefix, out);
        prefix.pop();
        if part < 2 {
            break;
        }
        part -= 2;
    }
}

/// Independent distinguishedness test via the sl₂ weight grading. Each
/// Jordan block of size m contributes weights m−1, m−3, …, 1−m to the
/// natural module; the Lie algebra weights are the pairwise sums over
/// i < j (B, D: exterior square) or i ≤ j (C: symmetric square). The
/// orbit is distinguished iff the weight-0 and weight-2 multiplicities
/// agree.
pub fn oracle_is_distinguished(o: &OrbitPartition) -> bool {
    let mut h: Vec<i64> = Vec::new();
    for &m in o.parts.parts() {
        let m = m as i64;
        let mut w = m - 1;
        while w >= 1 - m {
            h.push(w);
            w -= 2;
        }
    }
    let diagonal = o.ctype.series() == Series::C;
    let mut zeros = 0u64;
    let mut twos = 0u64;
    for i in 0..h.len() {
        let start = if diagonal { i } else { i + 1 };
        for j in start..h.len() {
            match h[i] + h[j] {
                0 => zeros += 1,
                2 => twos += 1,
                _ => {}
            }
        }
    }
    zeros == twos
}

/// The cuspidal pairs of the simply connected group at ℓ = 2: one pair
/// (O, constant sheaf) for every distinguished orbit, and nothing else.
/// ℓ is fixed at 2; the classification at other primes is out of scope.
pub fn cuspidal_pairs_char2(ctype: CartanType) -> Result<Vec<OrbitPartition>, ClassicalError> {
    distinguished_partitions(ctype)
}
