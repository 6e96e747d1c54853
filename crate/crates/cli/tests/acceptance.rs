//! Acceptance suite: one test per release criterion, each printing a PASS
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Expected values come from independent oracles computed here —
//! the pentagonal-number recurrence for p(n), permutation BFS for Coxeter
//! group orders, fundamental-degree products for the exceptional orders,
//! and the sl2-grading test for distinguished orbits.

use std::collections::HashSet;
use std::collections::VecDeque;
use std::process::Command;
use std::time::Instant;

use mgsc_core::classical::{cuspidal_pairs_char2, oracle_is_distinguished, OrbitPartition};
use mgsc_core::glspringer::{cuspidal_data, full_correspondence, induce, locate};
use mgsc_core::partitions::{base_ell_partition, enumerate_partitions, Partition};
use mgsc_core::rootdata::{
    is_regular_pair_cuspidal, is_regular_pair_principal, parabolic_order, subdiagram_components,
    sylow_minimal_levis, weyl_order, CartanType, Series,
};
use mgsc_core::tables::{
    cuspidal_count_exceptional, g2_correspondence, G2Orbit, LocalSystem, SeriesLabel,
};
use mgsc_core::Prime;

fn ell(v: u64) -> Prime {
    Prime::new(v).unwrap()
}

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn pn(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for i in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[i - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= i {
                total += sign * p[i - g2];
            }
            k += 1;
        }
        p[i] = total;
    }
    p[n] as u64
}

#[test]
fn criterion_1_gl_bijection() {
    let start = Instant::now();
    for l in [2u64, 3, 5] {
        for n in 1..=15u64 {
            let rows = full_correspondence(n, ell(l));
            assert_eq!(
                rows.len() as u64,
                pn(n as usize),
                "row count for n = {n}, ell = {l}"
            );
            let mut images: Vec<Vec<u64>> = rows
                .iter()
                .map(|r| r.pair.lambda().parts().to_vec())
                .collect();
            images.sort();
            let mut expected: Vec<Vec<u64>> = enumerate_partitions(n)
                .iter()
                .map(|p| p.parts().to_vec())
                .collect();
            expected.sort();
            assert_eq!(images, expected, "lambda column for n = {n}, ell = {l}");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "bijection sweep took {elapsed:?}, budget is 5 s"
    );
    println!("PASS criterion 1: GL bijection, n <= 15, ell in {{2,3,5}} ({elapsed:?})");
}

#[test]
fn criterion_2_gl_cuspidality() {
    for l in [2u64, 3, 5, 7] {
        for n in 1..=64u64 {
            let has_full_block = cuspidal_data(n, ell(l))
                .iter()
                .any(|d| d.nu().parts() == [n]);
            let mut m = n;
            while m.is_multiple_of(l) {
                m /= l;
            }
            assert_eq!(
                has_full_block,
                m == 1,
                "GL({n}) cuspidality at ell = {l}"
            );
        }
    }
    println!("PASS criterion 2: GL(n) cuspidal iff n is a power of ell, n <= 64, ell in {{2,3,5,7}}");
}

#[test]
fn criterion_3_sylow_cross_check() {
    for l in [2u64, 3, 5] {
        for n in 1..=12u64 {
            let nu = base_ell_partition(n, ell(l)).unwrap();
            let lambda = Partition::new(vec![n]).unwrap();
            let (datum, _) = locate(&lambda, ell(l)).unwrap();
            assert_eq!(datum.nu(), &nu, "locate((n)) datum for n = {n}, ell = {l}");

            if n >= 2 {
                let t = CartanType::new(Series::A, (n - 1) as u8).unwrap();
                for j in sylow_minimal_levis(t, ell(l)) {
                    let comps = subdiagram_components(&t.diagram(), &j).unwrap();
                    let mut sizes: Vec<u64> =
                        comps.iter().map(|c| c.rank() as u64 + 1).collect();
                    let ones = n - sizes.iter().sum::<u64>();
                    sizes.extend(std::iter::repeat_n(1, ones as usize));
                    sizes.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(
                        sizes,
                        nu.parts(),
                        "minimal Levi of A{} at ell = {l}",
                        n - 1
                    );
                }
            }
        }
    }
    println!("PASS criterion 3: locate((n)) = nu(n) and A-type minimal Levis match, n <= 12");
}

#[test]
fn criterion_4_g2_reproduction() {
    use G2Orbit::*;
    use LocalSystem::*;
    use SeriesLabel::*;

    assert!(is_regular_pair_cuspidal(ty("G2"), ell(2)));
    assert!(is_regular_pair_cuspidal(ty("G2"), ell(3)));
    assert!(is_regular_pair_principal(ty("G2"), ell(5)));
    assert!(is_regular_pair_principal(ty("G2"), ell(7)));

    let rows = |l: u64| -> Vec<(G2Orbit, LocalSystem, SeriesLabel)> {
        g2_correspondence(ell(l))
            .iter()
            .map(|r| (r.pair.orbit, r.pair.local_system, r.series))
            .collect()
    };
    assert_eq!(
        rows(2),
        vec![
            (Zero, Trivial, Principal),
            (A1, Trivial, Gl2Long),
            (A1Tilde, Trivial, Principal),
            (G2A1, Trivial, Cuspidal),
            (G2A1, Reflection, Gl2Short),
            (G2, Trivial, Cuspidal),
        ]
    );
    assert_eq!(
        rows(3),
        vec![
            (Zero, Trivial, Principal),
            (A1, Trivial, Principal),
            (A1Tilde, Trivial, Principal),
            (G2A1, Trivial, Principal),
            (G2A1, Sign, Cuspidal),
            (G2, Trivial, Cuspidal),
        ]
    );
    for l in [5u64, 7, 11] {
        assert_eq!(
            rows(l),
            vec![
                (Zero, Trivial, Principal),
                (A1, Trivial, Principal),
                (A1Tilde, Trivial, Principal),
                (G2A1, Trivial, Principal),
                (G2A1, Sign, Cuspidal),
                (G2A1, Reflection, Principal),
                (G2, Trivial, Principal),
            ]
        );
    }

    let counts: Vec<u32> = [2u64, 3, 5, 7]
        .iter()
        .map(|&l| cuspidal_count_exceptional(ty("G2"), ell(l)).unwrap())
        .collect();
    assert_eq!(counts, [2, 2, 1, 1]);
    println!("PASS criterion 4: G2 series assignments and counts reproduced");
}

#[test]
fn criterion_5_exceptional_count_table() {
    let expected: [(&str, [u32; 4]); 5] = [
        ("E6", [4, 3, 2, 2]),
        ("E7", [6, 3, 1, 1]),
        ("E8", [10, 8, 5, 1]),
        ("F4", [4, 3, 1, 1]),
        ("G2", [2, 2, 1, 1]),
    ];
    for (s, row) in expected {
        for (l, want) in [2u64, 3, 5, 7].into_iter().zip(row) {
            assert_eq!(
                cuspidal_count_exceptional(ty(s), ell(l)).unwrap(),
                want,
                "{s} at ell = {l}"
            );
        }
    }
    // Sylow cross-invariant: when the regular pair is cuspidal the count
    // must be positive.
    for s in ["E6", "E7", "E8", "F4", "G2"] {
        for l in [2u64, 3, 5, 7] {
            if is_regular_pair_cuspidal(ty(s), ell(l)) {
                assert!(
                    cuspidal_count_exceptional(ty(s), ell(l)).unwrap() >= 1,
                    "{s} at ell = {l}"
                );
            }
        }
    }
    println!("PASS criterion 5: all 20 exceptional count entries verbatim");
}

#[test]
fn criterion_6_classical_char2() {
    let parts = |orbits: Vec<OrbitPartition>| -> Vec<Vec<u64>> {
        orbits.iter().map(|o| o.parts().parts().to_vec()).collect()
    };
    assert_eq!(parts(cuspidal_pairs_char2(ty("B2")).unwrap()), [vec![5]]);
    assert_eq!(
        parts(cuspidal_pairs_char2(ty("C3")).unwrap()),
        [vec![6], vec![4, 2]]
    );
    assert_eq!(
        parts(cuspidal_pairs_char2(ty("D4")).unwrap()),
        [vec![7, 1], vec![5, 3]]
    );

    for series in ["B", "C", "D"] {
        let min_rank = if series == "D" { 3 } else { 2 };
        for rank in min_rank..=6u8 {
            let t: CartanType = format!("{series}{rank}").parse().unwrap();
            let dim = match series {
                "B" => 2 * rank as u64 + 1,
                _ => 2 * rank as u64,
            };
            let oracle_set: Vec<Vec<u64>> = enumerate_partitions(dim)
                .into_iter()
                .filter_map(|p| OrbitPartition::new(t, p).ok())
                .filter(oracle_is_distinguished)
                .map(|o| o.parts().parts().to_vec())
                .collect();
            assert_eq!(
                parts(cuspidal_pairs_char2(t).unwrap()),
                oracle_set,
                "oracle disagreement for {t}"
            );
        }
    }
    println!("PASS criterion 6: classical ell = 2 cuspidals equal the oracle-verified distinguished sets, rank <= 6");
}

#[test]
fn criterion_7_weyl_orders() {
    assert_eq!(ty("G2").weyl_order().to_decimal(), "12");

    // Closed forms vs. brute-force Coxeter BFS, classical rank <= 4.
    for s in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4"] {
        let t = ty(s);
        assert_eq!(
            t.weyl_order().to_decimal(),
            coxeter_order_bfs(t).to_string(),
            "{t}"
        );
    }

    // Exceptional orders vs. the product of the fundamental degrees.
    let degree_products: [(&str, u128); 5] = [
        ("G2", 2 * 6),
        ("F4", 2 * 6 * 8 * 12),
        ("E6", 2 * 5 * 6 * 8 * 9 * 12),
        ("E7", 2 * 6 * 8 * 10 * 12 * 14 * 18),
        ("E8", 2 * 8 * 12 * 14 * 18 * 20 * 24 * 30),
    ];
    for (s, product) in degree_products {
        assert_eq!(ty(s).weyl_order().to_decimal(), product.to_string(), "{s}");
    }
    println!("PASS criterion 7: Weyl orders match BFS (rank <= 4) and degree products (exceptional)");
}

#[test]
fn criterion_8_property_suite() {
    // Transpose is an involution; restricted <=> regular after transpose.
    for n in 0..=14u64 {
        for lam in enumerate_partitions(n) {
            assert_eq!(lam.transpose().transpose(), lam);
            for l in [2u64, 3, 5] {
                assert_eq!(
                    lam.is_ell_restricted(ell(l)),
                    lam.transpose().is_ell_regular(ell(l))
                );
            }
        }
    }

    // Counting identity and the induce/locate round trip.
    for l in [2u64, 3, 5] {
        for n in 1..=15u64 {
            let rows = full_correspondence(n, ell(l));
            assert_eq!(rows.len() as u64, pn(n as usize), "n = {n}, ell = {l}");
            for row in &rows {
                let (datum, tuple) = locate(row.pair.lambda(), ell(l)).unwrap();
                assert_eq!((&datum, &tuple), (&row.datum, &row.tuple));
                assert_eq!(induce(&datum, &tuple).unwrap(), row.pair);
            }
        }
    }

    // Minimal Sylow Levis carry the full ell-valuation, at equal orders.
    for t in all_types_up_to_rank(8) {
        for l in [2u64, 3, 5, 7] {
            let target = weyl_order(t).valuation(l);
            let minimal = sylow_minimal_levis(t, ell(l));
            assert!(!minimal.is_empty());
            let orders: Vec<_> = minimal
                .iter()
                .map(|j| parabolic_order(t, j).unwrap())
                .collect();
            for order in &orders {
                assert_eq!(order.valuation(l), target, "{t} at ell = {l}");
            }
            assert!(orders.windows(2).all(|w| w[0] == w[1]), "{t} at ell = {l}");
        }
    }

    // CLI determinism against the checked-in golden outputs.
    let goldens: Vec<(Vec<&str>, &str)> = vec![
        (vec!["weyl", "G2"], include_str!("golden/weyl_G2.txt")),
        (
            vec!["gl", "2", "--ell", "2", "--format", "json"],
            include_str!("golden/gl_2_ell2.json"),
        ),
        (
            vec!["exceptional", "G2", "--ell", "2"],
            include_str!("golden/exceptional_G2_ell2.txt"),
        ),
        (
            vec!["sylow", "G2", "--ell", "2"],
            include_str!("golden/sylow_G2_ell2.txt"),
        ),
    ];
    for (args, golden) in goldens {
        let run = || {
            let out = Command::new(env!("CARGO_BIN_EXE_mgsc"))
                .args(&args)
                .env_remove("MGSC_FORMAT")
                .output()
                .expect("binary runs");
            assert!(out.status.success());
            String::from_utf8(out.stdout).unwrap()
        };
        let first = run();
        assert_eq!(first, golden, "golden mismatch for {args:?}");
        assert_eq!(first, run(), "nondeterminism for {args:?}");
    }
    println!("PASS criterion 8: property suite (involutions, counting, round trips, valuations, CLI goldens)");
}

// ===========================================================================
// Oracles
// ===========================================================================

fn coxeter_order_bfs(t: CartanType) -> u64 {
    let r = t.rank() as usize;
    type Gen = Box<dyn Fn(&mut Vec<i8>)>;
    let swap = |i: usize| -> Gen { Box::new(move |v: &mut Vec<i8>| v.swap(i, i + 1)) };
    let mut dim = r;
    let mut gens: Vec<Gen> = Vec::new();
    match t.series() {
        Series::A => {
            dim = r + 1;
            gens.extend((0..r).map(swap));
        }
        Series::B | Series::C => {
            gens.extend((0..r - 1).map(swap));
            gens.push(Box::new(move |v: &mut Vec<i8>| v[r - 1] = -v[r - 1]));
        }
        Series::D => {
            gens.extend((0..r - 1).map(swap));
            gens.push(Box::new(move |v: &mut Vec<i8>| {
                let (a, b) = (v[r - 2], v[r - 1]);
                v[r - 2] = -b;
                v[r - 1] = -a;
            }));
        }
        _ => panic!("BFS oracle covers classical types only"),
    }
    let identity: Vec<i8> = (1..=dim as i8).collect();
    let mut seen = HashSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(state) = queue.pop_front() {
        for g in &gens {
            let mut next = state.clone();
            g(&mut next);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len() as u64
}

fn all_types_up_to_rank(max: u8) -> Vec<CartanType> {
    let mut out = Vec::new();
    for rank in 1..=max {
        for series in [Series::A, Series::B, Series::C, Series::D] {
            if let Ok(t) = CartanType::new(series, rank) {
                out.push(t);
            }
        }
    }
    for s in ["E6", "E7", "E8", "F4", "G2"] {
        let t = ty(s);
        if t.rank() <= max {
            out.push(t);
        }
    }
    out
}
