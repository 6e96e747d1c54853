//! Curated data for exceptional types: cuspidal-pair counts for E6–E8,
//! F4, G2 at every prime, and the per-pair series assignments for G2.
//!
//! The numbers live in `data/exceptional.txt`, one record per line, and
//! are parsed on demand; nothing here is recomputed. The test suite
//! cross-checks the table against the computable side (Sylow criterion,
//! internal consistency of the G2 rows).

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::prime::Prime;
use crate::rootdata::CartanType;

const DATA: &str = include_str!("../data/exceptional.txt");

/// The five nilpotent orbits of G2, by Bala–Carter label, in closure order.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G2Orbit {
    Zero,
    A1,
    A1Tilde,
    G2A1,
    G2,
}

impl fmt::Display for G2Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            G2Orbit::Zero => "0",
            G2Orbit::A1 => "A1",
            G2Orbit::A1Tilde => "A1~",
            G2Orbit::G2A1 => "G2(a1)",
            G2Orbit::G2 => "G2",
        };
        write!(f, "{label}")
    }
}

impl FromStr for G2Orbit {
    type Err = TablesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "0" => Ok(G2Orbit::Zero),
            "A1" => Ok(G2Orbit::A1),
            "A1~" => Ok(G2Orbit::A1Tilde),
            "G2(a1)" => Ok(G2Orbit::G2A1),
            "G2" => Ok(G2Orbit::G2),
            _ => Err(TablesError::Parse(s.to_string())),
        }
    }
}

/// An irreducible equivariant local system on a G2 orbit, named by the
/// corresponding representation of the component group S3.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalSystem {
    Trivial,
    Sign,
    Reflection,
}

impl fmt::Display for LocalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            LocalSystem::Trivial => "triv",
            LocalSystem::Sign => "sign",
            LocalSystem::Reflection => "refln",
        };
        write!(f, "{label}")
    }
}

impl FromStr for LocalSystem {
    type Err = TablesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "triv" => Ok(LocalSystem::Trivial),
            "sign" => Ok(LocalSystem::Sign),
            "refln" => Ok(LocalSystem::Reflection),
            _ => Err(TablesError::Parse(s.to_string())),
        }
    }
}

/// An orbit/local-system pair for G2. Nontrivial local systems occur only
/// on G2(a1), the one orbit with component group S3.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct G2Pair {
    pub orbit: G2Orbit,
    pub local_system: LocalSystem,
}

/// Which induction series a G2 pair belongs to.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesLabel {
    Principal,
    Cuspidal,
    /// Series of the cuspidal datum on the long-root Levi GL(2).
    Gl2Long,
    /// Series of the cuspidal datum on the short-root Levi GL(2).
    Gl2Short,
}

impl fmt::Display for SeriesLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            SeriesLabel::Principal => "principal",
            SeriesLabel::Cuspidal => "cuspidal",
            SeriesLabel::Gl2Long => "GL2-long",
            SeriesLabel::Gl2Short => "GL2-short",
        };
        write!(f, "{label}")
    }
}

impl FromStr for SeriesLabel {
    type Err = TablesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "principal" => Ok(SeriesLabel::Principal),
            "cuspidal" => Ok(SeriesLabel::Cuspidal),
            "GL2-long" => Ok(SeriesLabel::Gl2Long),
            "GL2-short" => Ok(SeriesLabel::Gl2Short),
            _ => Err(TablesError::Parse(s.to_string())),
        }
    }
}

/// One row of the G2 correspondence: a pair and its series.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct SeriesAssignment {
    pub pair: G2Pair,
    pub series: SeriesLabel,
}

/// Errors from table lookups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TablesError {
    /// Counts are stored only for E6, E7, E8, F4, G2.
    NotExceptional(CartanType),
    /// A token in the data file did not parse (programming error in the
    /// shipped data; surfaced for completeness).
    Parse(alloc::string::String),
}

impl fmt::Display for TablesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TablesError::NotExceptional(t) => {
                write!(f, "{t} is not an exceptional type")
            }
            TablesError::Parse(s) => write!(f, "malformed table record {s:?}"),
        }
    }
}

impl core::error::Error for TablesError {}

/// Number of cuspidal pairs for the exceptional simply connected group of
/// type `t` in characteristic `ell`. Primes ≥ 7 all read the last column.
pub fn cuspidal_count_exceptional(t: CartanType, ell: Prime) -> Result<u32, TablesError> {
    if !t.is_exceptional() {
        return Err(TablesError::NotExceptional(t));
    }
    let column = match ell.get() {
        2 => "2",
        3 => "3",
        5 => "5",
        _ => "7+",
    };
    let ty = t.to_string();
    for line in records("count") {
        let [rec_ty, rec_col, rec_count] = line[..] else {
            panic!("malformed count record in exceptional data table");
        };
        if rec_ty == ty && rec_col == column {
            return Ok(rec_count.parse().expect("count is an integer"));
        }
    }
    panic!("missing count record for {ty} column {column}");
}

/// The series assignment of every element of the G2 correspondence in
/// characteristic `ell`: 7 pairs when ℓ ∉ {2, 3}, 6 pairs when ℓ ∈ {2, 3},
/// in closure order of the orbits.
pub fn g2_correspondence(ell: Prime) -> Vec<SeriesAssignment> {
    let class = match ell.get() {
        2 => "2",
        3 => "3",
        _ => "big",
    };
    let mut out = Vec::new();
    for line in records("g2") {
        let [rec_class, orbit, local, series] = line[..] else {
            panic!("malformed g2 record in exceptional data table");
        };
        if rec_class != class {
            continue;
        }
        let pair = G2Pair {
            orbit: orbit.parse().expect("known orbit label"),
            local_system: local.parse().expect("known local system"),
        };
        assert!(
            pair.local_system == LocalSystem::Trivial || pair.orbit == G2Orbit::G2A1,
            "nontrivial local system outside G2(a1)"
        );
        out.push(SeriesAssignment {
            pair,
            series: series.parse().expect("known series label"),
        });
    }
    assert!(!out.is_empty(), "missing g2 records for class {class}");
    out
}

/// Data lines of one record kind, tokenized, with the kind tag dropped.
fn records(kind: &str) -> impl Iterator<Item = Vec<&'static str>> + '_ {
    DATA.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect::<Vec<_>>())
        .filter(move |tokens| tokens.first() == Some(&kind))
        .map(|tokens| tokens[1..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn ell(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    fn count(ty: &str, l: u64) -> u32 {
        cuspidal_count_exceptional(t(ty), ell(l)).unwrap()
    }

    #[test]
    fn all_twenty_entries() {
        let expected: [(&str, [u32; 4]); 5] = [
            ("E6", [4, 3, 2, 2]),
            ("E7", [6, 3, 1, 1]),
            ("E8", [10, 8, 5, 1]),
            ("F4", [4, 3, 1, 1]),
            ("G2", [2, 2, 1, 1]),
        ];
        for (ty, row) in expected {
            for (l, want) in [2u64, 3, 5, 7].into_iter().zip(row) {
                assert_eq!(count(ty, l), want, "{ty} at ell = {l}");
            }
        }
    }

    #[test]
    fn large_primes_collapse_to_the_last_column() {
        for ty in ["E6", "E7", "E8", "F4", "G2"] {
            for l in [7u64, 11, 13, 101] {
                assert_eq!(count(ty, l), count(ty, 7), "{ty} at ell = {l}");
            }
        }
    }

    #[test]
    fn non_exceptional_rejected() {
        assert_eq!(
            cuspidal_count_exceptional(t("A3"), ell(2)),
            Err(TablesError::NotExceptional(t("A3")))
        );
        assert!(cuspidal_count_exceptional(t("B4"), ell(2)).is_err());
    }

    #[test]
    fn g2_pair_counts_per_characteristic() {
        assert_eq!(g2_correspondence(ell(2)).len(), 6);
        assert_eq!(g2_correspondence(ell(3)).len(), 6);
        for l in [5u64, 7, 11] {
            assert_eq!(g2_correspondence(ell(l)).len(), 7);
            assert_eq!(g2_correspondence(ell(l)), g2_correspondence(ell(5)));
        }
    }

    #[test]
    fn g2_assignments_at_two() {
        use G2Orbit::*;
        use LocalSystem::*;
        use SeriesLabel::*;
        let rows = g2_correspondence(ell(2));
        let expected = vec![
            (Zero, Trivial, Principal),
            (A1, Trivial, Gl2Long),
            (A1Tilde, Trivial, Principal),
            (G2A1, Trivial, Cuspidal),
            (G2A1, Reflection, Gl2Short),
            (G2, Trivial, Cuspidal),
        ];
        let got: Vec<(G2Orbit, LocalSystem, SeriesLabel)> = rows
            .iter()
            .map(|r| (r.pair.orbit, r.pair.local_system, r.series))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn g2_cuspidal_rows_match_the_count_table() {
        for l in [2u64, 3, 5, 7] {
            let cuspidal = g2_correspondence(ell(l))
                .iter()
                .filter(|r| r.series == SeriesLabel::Cuspidal)
                .count() as u32;
            assert_eq!(cuspidal, count("G2", l), "ell = {l}");
        }
    }

    #[test]
    fn g2_regular_orbit_cuspidal_exactly_at_bad_primes() {
        for l in [2u64, 3, 5, 7, 11] {
            let regular_cuspidal = g2_correspondence(ell(l)).iter().any(|r| {
                r.pair.orbit == G2Orbit::G2 && r.series == SeriesLabel::Cuspidal
            });
            assert_eq!(regular_cuspidal, l == 2 || l == 3, "ell = {l}");
        }
    }
}
