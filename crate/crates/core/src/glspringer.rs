//! The modular generalized Springer correspondence for GL(n).
//!
//! Cuspidal data for GL(n) at a prime ℓ are indexed by the partitions of n
//! into powers of ℓ: ν stands for the Levi GL(ν₁) × GL(ν₂) × ⋯ carrying
//! the constant local system on its regular nilpotent orbit. The relative
//! Weyl group of ν is the product of symmetric groups permuting equal
//! blocks, its irreducible modular representations are tuples of ℓ-regular
//! partitions (one per block size), and [`induce`] sends such a tuple to
//! the nilpotent orbit it labels:
//!
//! ```text
//! lambda = sum_i  ell^i * transpose(label_i)
//! ```
//!
//! [`locate`] inverts this by base-ℓ expanding the difference sequence of
//! lambda; [`full_correspondence`] tabulates the whole bijection.

use alloc::vec::Vec;
use core::fmt;

use crate::partitions::{enumerate_ell_regular, enumerate_power_partitions, Partition};
use crate::prime::Prime;

/// A cuspidal datum for GL(n): a partition ν of n into powers of ℓ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CuspidalDatumGL {
    nu: Partition,
    ell: Prime,
}

impl CuspidalDatumGL {
    /// Wraps ν after checking that every part is a power of `ell`.
    pub fn new(nu: Partition, ell: Prime) -> Result<Self, GlSpringerError> {
        for &part in nu.parts() {
            let mut v = part;
            while v % ell.get() == 0 {
                v /= ell.get();
            }
            if v != 1 {
                return Err(GlSpringerError::NotPowerPart { part, ell: ell.get() });
            }
        }
        Ok(CuspidalDatumGL { nu, ell })
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn ell(&self) -> Prime {
        self.ell
    }

    /// Size of the partition, i.e. the n of GL(n).
    pub fn n(&self) -> u64 {
        self.nu.size()
    }

    /// Exponent of the largest part (0 for the empty datum).
    fn top_exponent(&self) -> usize {
        let mut i = 0;
        let mut v = self.nu.part(0);
        while v > 1 {
            v /= self.ell.get();
            i += 1;
        }
        i
    }
}

/// An irreducible label for a relative Weyl group: a tuple
/// (λ⁽⁰⁾, λ⁽¹⁾, …) of ℓ-regular partitions, entry i of size m_{ℓⁱ}(ν).
/// Trailing empty entries are normalized away so equal labels compare
/// equal; interior empty entries are meaningful and kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IrrTupleGL {
    labels: Vec<Partition>,
}

impl IrrTupleGL {
    pub fn new(mut labels: Vec<Partition>) -> Self {
        while labels.last().is_some_and(Partition::is_empty) {
            labels.pop();
        }
        IrrTupleGL { labels }
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }
}

/// A point of the GL(n) side of the correspondence: the nilpotent orbit
/// with Jordan blocks λ (the local system is always constant for GL(n)).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GLPair {
    lambda: Partition,
}

impl GLPair {
    pub fn new(lambda: Partition) -> Self {
        GLPair { lambda }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }
}

impl fmt::Display for GLPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lambda)
    }
}

/// One row of [`full_correspondence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceRow {
    pub datum: CuspidalDatumGL,
    pub tuple: IrrTupleGL,
    pub pair: GLPair,
}

/// Errors from datum construction and the correspondence operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlSpringerError {
    /// A part of ν was not a power of ℓ.
    NotPowerPart { part: u64, ell: u64 },
    /// A tuple entry has the wrong size for its datum.
    LabelSizeMismatch {
        index: usize,
        expected: u64,
        actual: u64,
    },
    /// A tuple entry is not ℓ-regular.
    LabelNotRegular { index: usize },
    /// `springer_principal` needs an ℓ-regular partition.
    NotEllRegular,
    /// `locate` needs a nonempty partition.
    EmptyPartition,
}

impl fmt::Display for GlSpringerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GlSpringerError::NotPowerPart { part, ell } => {
                write!(f, "part {part} is not a power of {ell}")
            }
            GlSpringerError::LabelSizeMismatch {
                index,
                expected,
                actual,
            } => write!(f, "label {index} has size {actual}, expected {expected}"),
            GlSpringerError::LabelNotRegular { index } => {
                write!(f, "label {index} is not ell-regular")
            }
            GlSpringerError::NotEllRegular => write!(f, "partition is not ell-regular"),
            GlSpringerError::EmptyPartition => write!(f, "the empty partition has no location"),
        }
    }
}

impl core::error::Error for GlSpringerError {}

/// The cuspidal data of GL(n) at ℓ, one per partition of n into powers of
/// ℓ, in reverse-lexicographic order of ν. The singleton ν = (n) occurs
/// iff n is a power of ℓ, i.e. iff GL(n) itself carries a cuspidal pair.
pub fn cuspidal_data(n: u64, ell: Prime) -> Vec<CuspidalDatumGL> {
    enumerate_power_partitions(n, ell)
        .into_iter()
        .map(|nu| CuspidalDatumGL { nu, ell })
        .collect()
}

/// The relative Weyl group N(L_ν)/L_ν as a product of symmetric groups:
/// pairs (ℓⁱ, m_{ℓⁱ}(ν)) for the powers appearing in ν, ascending.
pub fn relative_weyl(d: &CuspidalDatumGL) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for &part in d.nu.parts().iter().rev() {
        match out.last_mut() {
            Some((p, m)) if *p == part => *m += 1,
            _ => out.push((part, 1)),
        }
    }
    out
}

/// All irreducible labels of the relative Weyl group of `d`: the Cartesian
/// product over i of the ℓ-regular partitions of m_{ℓⁱ}(ν). The order is
/// deterministic — entry i = 0 is the most significant digit and each
/// factor runs in reverse-lexicographic order.
pub fn irr_labels(d: &CuspidalDatumGL) -> Vec<IrrTupleGL> {
    let mut power = 1u64;
    let mut factors: Vec<Vec<Partition>> = Vec::new();
    for _ in 0..=d.top_exponent() {
        factors.push(enumerate_ell_regular(d.nu.multiplicity(power), d.ell));
        power = power.saturating_mul(d.ell.get());
    }
    let mut out = Vec::new();
    let mut idx = alloc::vec![0usize; factors.len()];
    loop {
        let labels = idx
            .iter()
            .zip(&factors)
            .map(|(&k, f)| f[k].clone())
            .collect();
        out.push(IrrTupleGL::new(labels));
        let mut pos = factors.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < factors[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Evaluates the correspondence on one label:
/// λ = Σᵢ ℓⁱ · transpose(λ⁽ⁱ⁾), by componentwise partition addition.
/// Errors if the tuple does not fit the datum (entry sizes must match the
/// part multiplicities of ν and every entry must be ℓ-regular).
pub fn induce(d: &CuspidalDatumGL, t: &IrrTupleGL) -> Result<GLPair, GlSpringerError> {
    let empty = Partition::empty();
    let span = (d.top_exponent() + 1).max(t.labels.len());
    let mut lambda = Partition::empty();
    let mut power = 1u64;
    for i in 0..span {
        let label = t.labels.get(i).unwrap_or(&empty);
        let expected = d.nu.multiplicity(power);
        if label.size() != expected {
            return Err(GlSpringerError::LabelSizeMismatch {
                index: i,
                expected,
                actual: label.size(),
            });
        }
        if !label.is_ell_regular(d.ell) {
            return Err(GlSpringerError::LabelNotRegular { index: i });
        }
        if !label.is_empty() {
            lambda = lambda.add(&label.transpose().scale(power));
        }
        power = power.saturating_mul(d.ell.get());
    }
    debug_assert_eq!(lambda.size(), d.n());
    Ok(GLPair { lambda })
}

/// The unique preimage of λ under [`induce`]: base-ℓ expand the difference
/// sequence of λ; digit layer i, read back as a partition and transposed,
/// is λ⁽ⁱ⁾, and its size is the multiplicity of ℓⁱ in ν.
///
/// This inverse is validated against the brute-force forward enumeration
/// (see the round-trip tests); the layer partitions are ℓ-restricted by
/// construction, so their transposes are ℓ-regular as required.
pub fn locate(
    lambda: &Partition,
    ell: Prime,
) -> Result<(CuspidalDatumGL, IrrTupleGL), GlSpringerError> {
    if lambda.is_empty() {
        return Err(GlSpringerError::EmptyPartition);
    }
    let l = ell.get();
    let diffs = lambda.differences();
    let mut digit_rows: Vec<Vec<u64>> = Vec::new();
    for (j, &dj) in diffs.iter().enumerate() {
        let mut x = dj;
        let mut i = 0usize;
        while x > 0 {
            let digit = x % l;
            if digit > 0 {
                while digit_rows.len() <= i {
                    digit_rows.push(alloc::vec![0; diffs.len()]);
                }
                digit_rows[i][j] = digit;
            }
            x /= l;
            i += 1;
        }
    }
    let mut labels = Vec::with_capacity(digit_rows.len());
    let mut mults = Vec::with_capacity(digit_rows.len());
    for row in &digit_rows {
        let layer = Partition::from_differences(row);
        let label = layer.transpose();
        debug_assert!(label.is_ell_regular(ell));
        mults.push(label.size());
        labels.push(label);
    }
    let mut nu_parts = Vec::new();
    for i in (0..mults.len()).rev() {
        let power = l.pow(i as u32);
        for _ in 0..mults[i] {
            nu_parts.push(power);
        }
    }
    let nu = Partition::new(nu_parts).expect("powers listed in decreasing order");
    let datum = CuspidalDatumGL { nu, ell };
    Ok((datum, IrrTupleGL::new(labels)))
}

/// The whole correspondence for GL(n) at ℓ: one row per (datum, label),
/// primary key ν in reverse-lexicographic order, secondary key the label
/// in [`irr_labels`] order. The λ column is a permutation of the
/// partitions of n. Expect p(n) rows.
pub fn full_correspondence(n: u64, ell: Prime) -> Vec<CorrespondenceRow> {
    let mut rows = Vec::new();
    for datum in cuspidal_data(n, ell) {
        for tuple in irr_labels(&datum) {
            let pair = induce(&datum, &tuple).expect("irr_labels tuples fit their datum");
            rows.push(CorrespondenceRow {
                datum: datum.clone(),
                tuple,
                pair,
            });
        }
    }
    rows
}

/// The modular Springer correspondence on the principal series: the
/// irreducible labelled by an ℓ-regular μ corresponds to the orbit of the
/// transpose. Agrees with [`induce`] on the datum ν = (1,…,1).
pub fn springer_principal(mu: &Partition, ell: Prime) -> Result<GLPair, GlSpringerError> {
    if !mu.is_ell_regular(ell) {
        return Err(GlSpringerError::NotEllRegular);
    }
    Ok(GLPair {
        lambda: mu.transpose(),
    })
}
