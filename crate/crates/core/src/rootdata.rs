//! Cartan types, Dynkin diagrams, parabolic subgroup orders, and the
//! Sylow criterion for the regular nilpotent pair.
//!
//! Node numbering follows Bourbaki and is pinned once, in
//! [`CartanType::diagram`]; every subset-valued answer is relative to that
//! numbering. Group orders are carried exclusively as [`FactoredOrder`]s:
//! the statements of interest are divisibility statements, and exponent
//! arithmetic keeps them exact at any rank.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::factored::FactoredOrder;
use crate::prime::Prime;

/// The seven series of simple Cartan types.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{letter}")
    }
}

/// A simple Cartan type: series plus rank, validated on construction
/// (A: rank ≥ 1, B: ≥ 2, C: ≥ 2, D: ≥ 3, E: 6–8, F: 4, G: 2).
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: u8,
}

impl CartanType {
    pub fn new(series: Series, rank: u8) -> Result<Self, RootDataError> {
        let admissible = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if admissible {
            Ok(CartanType { series, rank })
        } else {
            Err(RootDataError::InvalidRank { series, rank })
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> u8 {
        self.rank
    }

    /// E, F and G series.
    pub fn is_exceptional(self) -> bool {
        matches!(self.series, Series::E | Series::F | Series::G)
    }

    /// The Dynkin diagram in Bourbaki numbering.
    ///
    /// A_n is the chain 1—2—…—n. B_n/C_n end in a double bond between
    /// n−1 and n (short node n for B, long node n for C). D_n forks at
    /// n−2 into n−1 and n. E_n attaches node 2 to node 4 of the chain
    /// 1—3—4—…—n. F4 is 1—2⇒3—4 and G2 is 1⇐2 with a triple bond.
    pub fn diagram(self) -> DynkinDiagram {
        let r = self.rank;
        let mut edges = Vec::new();
        let single = |a: u8, b: u8| Edge { a, b, bond: 1 };
        match self.series {
            Series::A => {
                for i in 1..r {
                    edges.push(single(i, i + 1));
                }
            }
            Series::B => {
                for i in 1..r - 1 {
                    edges.push(single(i, i + 1));
                }
                edges.push(Edge { a: r - 1, b: r, bond: 2 });
            }
            Series::C => {
                for i in 1..r - 1 {
                    edges.push(single(i, i + 1));
                }
                edges.push(Edge { a: r, b: r - 1, bond: 2 });
            }
            Series::D => {
                for i in 1..r - 2 {
                    edges.push(single(i, i + 1));
                }
                edges.push(single(r - 2, r - 1));
                edges.push(single(r - 2, r));
            }
            Series::E => {
                edges.push(single(1, 3));
                edges.push(single(3, 4));
                edges.push(single(2, 4));
                for i in 4..r {
                    edges.push(single(i, i + 1));
                }
            }
            Series::F => {
                edges.push(single(1, 2));
                edges.push(Edge { a: 2, b: 3, bond: 2 });
                edges.push(single(3, 4));
            }
            Series::G => {
                edges.push(Edge { a: 2, b: 1, bond: 3 });
            }
        }
        DynkinDiagram { ctype: self, edges }
    }

    /// |W| in factored form, via the standard closed forms.
    pub fn weyl_order(self) -> FactoredOrder {
        let two = Prime::new(2).expect("2 is prime");
        let r = self.rank as u64;
        let known = |pairs: &[(u64, u32)]| {
            FactoredOrder::from_factors(pairs.iter().copied()).expect("pinned factorization")
        };
        match self.series {
            Series::A => FactoredOrder::factorial(r + 1),
            Series::B | Series::C => {
                &FactoredOrder::prime_power(two, self.rank as u32) * &FactoredOrder::factorial(r)
            }
            Series::D => {
                &FactoredOrder::prime_power(two, self.rank as u32 - 1)
                    * &FactoredOrder::factorial(r)
            }
            Series::G => known(&[(2, 2), (3, 1)]),
            Series::F => known(&[(2, 7), (3, 2)]),
            Series::E => match self.rank {
                6 => known(&[(2, 7), (3, 4), (5, 1)]),
                7 => known(&[(2, 10), (3, 4), (5, 1), (7, 1)]),
                8 => known(&[(2, 14), (3, 5), (5, 2), (7, 1)]),
                _ => unreachable!("rank validated at construction"),
            },
        }
    }
}

/// Renders as letter + rank, e.g. `E8`.
impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = || RootDataError::Parse(s.to_string());
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(parse_err()),
        };
        let rank: u8 = chars.as_str().parse().map_err(|_| parse_err())?;
        CartanType::new(series, rank)
    }
}

/// A Dynkin diagram: nodes 1..=rank in Bourbaki numbering plus bonds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    ctype: CartanType,
    edges: Vec<Edge>,
}

impl DynkinDiagram {
    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> u8 {
        self.ctype.rank
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// A bond between two nodes. For `bond >= 2` the arrow points from the
/// long root `a` to the short root `b`; for single bonds `a < b` and the
/// orientation is meaningless.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: u8,
    pub b: u8,
    pub bond: u8,
}

impl Edge {
    fn touches(&self, v: u8) -> bool {
        self.a == v || self.b == v
    }

    fn other(&self, v: u8) -> u8 {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// A set of node indices of a Dynkin diagram, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset {
    nodes: Vec<u8>,
}

impl SimpleSubset {
    pub fn new(nodes: impl IntoIterator<Item = u8>) -> Self {
        let mut nodes: Vec<u8> = nodes.into_iter().collect();
        nodes.sort_unstable();
        nodes.dedup();
        SimpleSubset { nodes }
    }

    pub fn empty() -> Self {
        SimpleSubset { nodes: Vec::new() }
    }

    /// All nodes 1..=rank.
    pub fn full(rank: u8) -> Self {
        SimpleSubset {
            nodes: (1..=rank).collect(),
        }
    }

    pub fn nodes(&self) -> &[u8] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, node: u8) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    pub fn is_subset_of(&self, other: &SimpleSubset) -> bool {
        self.nodes.iter().all(|&n| other.contains(n))
    }
}

/// Renders as a sorted node list, e.g. `[1,3,4]`; the empty set is `[]`.
impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, n) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "]")
    }
}

/// Errors from type construction, parsing and subset validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootDataError {
    /// The series/rank pair is not admissible.
    InvalidRank { series: Series, rank: u8 },
    /// Text did not match the letter+rank format.
    Parse(String),
    /// A subset node is outside 1..=rank.
    NodeOutOfRange { node: u8, rank: u8 },
}

impl fmt::Display for RootDataError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootDataError::InvalidRank { series, rank } => {
                write!(f, "no simple type {series}{rank}")
            }
            RootDataError::Parse(s) => write!(f, "invalid Cartan type {s:?}"),
            RootDataError::NodeOutOfRange { node, rank } => {
                write!(f, "node {node} outside the diagram (rank {rank})")
            }
        }
    }
}

impl core::error::Error for RootDataError {}

/// |W(t)| in factored form. Method alias kept as a free function to match
/// the rest of this module's interface.
pub fn weyl_order(t: CartanType) -> FactoredOrder {
    t.weyl_order()
}

/// Decomposes the induced subdiagram on `j` into connected components and
/// classifies each as a simple Cartan type, sorted by (series, rank).
///
/// Rank-1 components are reported as A1 and 3-node single-bond chains as
/// A3, so B1/C1/D2/D3 never appear. A rank-2 double bond is reported as
/// B2 (the same diagram as C2); for rank ≥ 3 the arrow direction fixes
/// B vs C.
pub fn subdiagram_components(
    d: &DynkinDiagram,
    j: &SimpleSubset,
) -> Result<Vec<CartanType>, RootDataError> {
    validate_subset(d, j)?;
    Ok(components_in(d, j))
}

/// |W_J| = product of the component Weyl orders; the empty subset gives 1.
pub fn parabolic_order(t: CartanType, j: &SimpleSubset) -> Result<FactoredOrder, RootDataError> {
    let d = t.diagram();
    validate_subset(&d, j)?;
    Ok(parabolic_order_in(&d, j))
}

/// All subsets `J`, minimal under inclusion, with ℓ ∤ |W|/|W_J| —
/// equivalently with W_J containing an ℓ-Sylow subgroup of W. Returned
/// sorted by node list.
///
/// The minimal subsets all represent one conjugacy class of Levi
/// subgroups; this function asserts the visible shadow of that fact,
/// namely that they share a single |W_J|.
///
/// Cost is exponential in the rank (every subset is inspected).
pub fn sylow_minimal_levis(t: CartanType, ell: Prime) -> Vec<SimpleSubset> {
    let rank = t.rank();
    assert!(rank < 64, "subset enumeration needs rank < 64");
    let d = t.diagram();
    let target = t.weyl_order().valuation(ell.get());
    let mut qualifying: Vec<u64> = Vec::new();
    for mask in 0u64..(1 << rank) {
        let j = subset_from_mask(mask);
        if parabolic_order_in(&d, &j).valuation(ell.get()) == target {
            qualifying.push(mask);
        }
    }
    let mut minimal: Vec<SimpleSubset> = qualifying
        .iter()
        .copied()
        .filter(|&m| !qualifying.iter().any(|&o| o != m && o & m == o))
        .map(subset_from_mask)
        .collect();
    minimal.sort();

    let mut orders = minimal.iter().map(|j| parabolic_order_in(&d, j));
    if let Some(first) = orders.next() {
        assert!(
            orders.all(|o| o == first),
            "minimal Sylow Levi subsets of {t} at ell = {ell} have unequal orders"
        );
    }
    minimal
}

/// True iff the regular nilpotent pair is cuspidal: no proper parabolic
/// subgroup of W contains an ℓ-Sylow, i.e. [`sylow_minimal_levis`] returns
/// exactly the full node set.
pub fn is_regular_pair_cuspidal(t: CartanType, ell: Prime) -> bool {
    let target = t.weyl_order().valuation(ell.get());
    if target == 0 {
        // The empty subset already qualifies.
        return false;
    }
    let d = t.diagram();
    // Qualification is monotone under inclusion, so it suffices to rule
    // out the maximal proper subsets.
    (1..=t.rank()).all(|omit| {
        let j = SimpleSubset::new((1..=t.rank()).filter(|&n| n != omit));
        parabolic_order_in(&d, &j).valuation(ell.get()) < target
    })
}

/// True iff the regular nilpotent pair lies in the principal series,
/// i.e. ℓ ∤ |W|.
pub fn is_regular_pair_principal(t: CartanType, ell: Prime) -> bool {
    t.weyl_order().valuation(ell.get()) == 0
}

fn validate_subset(d: &DynkinDiagram, j: &SimpleSubset) -> Result<(), RootDataError> {
    for &node in j.nodes() {
        if node == 0 || node > d.rank() {
            return Err(RootDataError::NodeOutOfRange {
                node,
                rank: d.rank(),
            });
        }
    }
    Ok(())
}

fn subset_from_mask(mask: u64) -> SimpleSubset {
    SimpleSubset {
        nodes: (0..64)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| i as u8 + 1)
            .collect(),
    }
}

fn parabolic_order_in(d: &DynkinDiagram, j: &SimpleSubset) -> FactoredOrder {
    let mut order = FactoredOrder::one();
    for component in components_in(d, j) {
        order *= &component.weyl_order();
    }
    order
}

fn components_in(d: &DynkinDiagram, j: &SimpleSubset) -> Vec<CartanType> {
    let edges: Vec<Edge> = d
        .edges()
        .iter()
        .filter(|e| j.contains(e.a) && j.contains(e.b))
        .copied()
        .collect();

    let mut seen: Vec<u8> = Vec::new();
    let mut components = Vec::new();
    for &start in j.nodes() {
        if seen.contains(&start) {
            continue;
        }
        let mut component = alloc::vec![start];
        let mut queue = alloc::vec![start];
        while let Some(v) = queue.pop() {
            for e in edges.iter().filter(|e| e.touches(v)) {
                let w = e.other(v);
                if !component.contains(&w) {
                    component.push(w);
                    queue.push(w);
                }
            }
        }
        component.sort_unstable();
        seen.extend_from_slice(&component);
        let local: Vec<Edge> = edges
            .iter()
            .filter(|e| component.contains(&e.a))
            .copied()
            .collect();
        components.push(classify_component(&component, &local));
    }
    components.sort();
    components
}

/// Classifies one connected induced subdiagram. Any connected induced
/// subdiagram of a finite-type diagram is again of finite type, so the
/// shape analysis below is exhaustive.
fn classify_component(nodes: &[u8], edges: &[Edge]) -> CartanType {
    let k = nodes.len() as u8;
    let ctype = |series, rank| CartanType::new(series, rank).expect("classified shape admissible");
    if k == 1 {
        return ctype(Series::A, 1);
    }
    if edges.iter().any(|e| e.bond == 3) {
        debug_assert_eq!(k, 2);
        return ctype(Series::G, 2);
    }
    if let Some(double) = edges.iter().find(|e| e.bond == 2) {
        if k == 2 {
            // B2 and C2 name the same rank-2 diagram; B2 is the canonical
            // report.
            return ctype(Series::B, 2);
        }
        let path = path_order(nodes, edges);
        let pos = (0..path.len() - 1)
            .find(|&i| double.touches(path[i]) && double.touches(path[i + 1]))
            .expect("double bond lies on the path");
        if pos == 0 || pos == path.len() - 2 {
            let end = if pos == 0 { path[0] } else { path[path.len() - 1] };
            if end == double.b {
                return ctype(Series::B, k); // short root at the end
            }
            return ctype(Series::C, k); // long root at the end
        }
        debug_assert_eq!(k, 4);
        return ctype(Series::F, 4);
    }
    // Simply laced: a chain or a single trivalent fork.
    let degree = |v: u8| edges.iter().filter(|e| e.touches(v)).count();
    match nodes.iter().copied().find(|&v| degree(v) == 3) {
        None => ctype(Series::A, k),
        Some(fork) => {
            let mut arms: Vec<u8> = edges
                .iter()
                .filter(|e| e.touches(fork))
                .map(|e| arm_length(e.other(fork), fork, edges))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => ctype(Series::D, k),
                [1, 2, 2] => ctype(Series::E, 6),
                [1, 2, 3] => ctype(Series::E, 7),
                [1, 2, 4] => ctype(Series::E, 8),
                _ => unreachable!("not a finite-type diagram component"),
            }
        }
    }
}

/// Orders a path component from one endpoint to the other.
fn path_order(nodes: &[u8], edges: &[Edge]) -> Vec<u8> {
    let degree = |v: u8| edges.iter().filter(|e| e.touches(v)).count();
    let start = nodes
        .iter()
        .copied()
        .find(|&v| degree(v) == 1)
        .expect("path endpoint exists");
    let mut order = alloc::vec![start];
    let mut prev = None;
    loop {
        let cur = *order.last().expect("nonempty");
        let next = edges
            .iter()
            .filter(|e| e.touches(cur))
            .map(|e| e.other(cur))
            .find(|&w| Some(w) != prev);
        match next {
            Some(w) => {
                prev = Some(cur);
                order.push(w);
            }
            None => break,
        }
    }
    order
}

/// Number of nodes reachable from `from` without passing through `fork`.
fn arm_length(from: u8, fork: u8, edges: &[Edge]) -> u8 {
    let mut seen = alloc::vec![fork, from];
    let mut queue = alloc::vec![from];
    let mut count = 1u8;
    while let Some(v) = queue.pop() {
        for e in edges.iter().filter(|e| e.touches(v)) {
            let w = e.other(v);
            if !seen.contains(&w) {
                seen.push(w);
                queue.push(w);
                count += 1;
            }
        }
    }
    count
}
