use std::collections::BTreeMap;

use num_bigint::BigInt;
use primo_core::dirichlet::DirichletEGF;
use primo_core::enumeration::{
    cycle_index_connected, labeled_counts, labeled_prime_counts, log_connected_dirichlet, prime_parts,
    primes_from_connected, run_report, unlabeled_connected_counts, unlabeled_prime_counts,
};
use primo_core::expcomp::exp_composition;
use primo_core::graphs::{species_cycle_index, SmallGraph};
use primo_core::symfunc::rat;
use primo_core::table1::{verify, PrimeTable};
use primo_core::{Partition, PowerSumPoly};

fn poly(terms: &[(&[u32], i64, i64)], n: u32) -> PowerSumPoly {
    PowerSumPoly::from_terms(
        terms
            .iter()
            .map(|(l, a, b)| (Partition::new(l.to_vec()).unwrap(), rat(*a, *b))),
        n,
    )
}

/// Known counts of unlabeled connected graphs on `n = 1..=16` vertices.
const CONNECTED_UNLABELED: [&str; 16] = [
    "1",
    "1",
    "2",
    "6",
    "21",
    "112",
    "853",
    "11117",
    "261080",
    "11716571",
    "1006700565",
    "164059830476",
    "50335907869219",
    "29003487462848061",
    "31397381142761241960",
    "63969560113225176176277",
];

fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

#[test]
fn prime_counts_through_sixteen() {
    let table = PrimeTable::embedded();
    let labeled = labeled_prime_counts(16).unwrap();
    let unlabeled = unlabeled_prime_counts(16).unwrap();
    assert_eq!(labeled[15].to_string(), "1328578958335783200943054119287117312");
    assert_eq!(unlabeled[15].to_string(), "63969560113225176165145");

    // The only disagreement with the reference table is its last unlabeled
    // entry, which is the computed value with the final digit missing.
    let report = verify(&table, &labeled, &unlabeled, 16);
    assert_eq!(report.comparisons, 30);
    assert_eq!(report.mismatches.len(), 1);
    let m = &report.mismatches[0];
    assert_eq!((m.n, m.column), (16, "p^u"));
    let found = m.found.as_ref().unwrap().to_string();
    assert_eq!(found[..found.len() - 1], m.expected.to_string());
    assert!(verify(&table, &labeled, &unlabeled, 15).passed());
}

#[test]
fn connected_counts_match_known_values() {
    let expected: Vec<BigInt> = CONNECTED_UNLABELED.iter().map(|s| big(s)).collect();
    assert_eq!(unlabeled_connected_counts(16).unwrap(), expected);
}

/// Unique factorization: connected graphs on `n` vertices are multisets of
/// primes whose sizes multiply to `n`, so `Σ c̃_n n^{-s} = Π_m (1 - m^{-s})^{-b_m}`.
#[test]
fn unlabeled_primes_rebuild_connected_counts() {
    let b = unlabeled_prime_counts(16).unwrap();
    let mut c = vec![BigInt::from(0); 17];
    c[1] = BigInt::from(1);
    for m in 2..=16usize {
        let mut next = vec![BigInt::from(0); 17];
        for (n, cn) in c.iter().enumerate().skip(1) {
            if *cn == BigInt::from(0) {
                continue;
            }
            // choose j copies from b_m kinds with repetition: C(b_m + j - 1, j)
            let mut choose = BigInt::from(1);
            let mut size = n;
            let mut j = 0u32;
            while size <= 16 {
                next[size] += cn * &choose;
                choose = choose * (&b[m - 1] + j) / (j + 1);
                j += 1;
                size *= m;
            }
        }
        c = next;
    }
    let expected: Vec<BigInt> = CONNECTED_UNLABELED.iter().map(|s| big(s)).collect();
    assert_eq!(c[1..].to_vec(), expected);
}

#[test]
fn connected_series_degree_six() {
    let z = cycle_index_connected(6).unwrap();
    let deg5 = poly(
        &[
            (&[1, 1, 1, 1, 1], 91, 15),
            (&[2, 1, 1, 1], 19, 3),
            (&[3, 1, 1], 4, 3),
            (&[2, 2, 1], 5, 1),
            (&[4, 1], 1, 1),
            (&[3, 2], 2, 3),
            (&[5], 3, 5),
        ],
        6,
    );
    assert_eq!(z.slice(5), deg5);
    let deg6 = poly(
        &[
            (&[1, 1, 1, 1, 1, 1], 1669, 45),
            (&[2, 1, 1, 1, 1], 91, 3),
            (&[3, 1, 1, 1], 38, 9),
            (&[2, 2, 1, 1], 43, 2),
            (&[4, 1, 1], 2, 1),
            (&[3, 2, 1], 8, 3),
            (&[5, 1], 4, 5),
            (&[2, 2, 2], 26, 3),
            (&[4, 2], 5, 2),
            (&[3, 3], 25, 18),
            (&[6], 5, 6),
        ],
        6,
    );
    assert_eq!(z.slice(6), deg6);
}

#[test]
fn prime_series_through_six() {
    let zc = cycle_index_connected(6).unwrap();
    let zp = primes_from_connected(&zc).unwrap();
    let deg5 = poly(
        &[
            (&[1, 1, 1, 1, 1], 91, 15),
            (&[2, 1, 1, 1], 19, 3),
            (&[3, 1, 1], 4, 3),
            (&[2, 2, 1], 5, 1),
            (&[4, 1], 1, 1),
            (&[3, 2], 2, 3),
            (&[5], 3, 5),
        ],
        6,
    );
    assert_eq!(zp.slice(5), deg5);
    let deg6 = poly(
        &[
            (&[1, 1, 1, 1, 1, 1], 1654, 45),
            (&[2, 1, 1, 1, 1], 91, 3),
            (&[3, 1, 1, 1], 38, 9),
            (&[2, 2, 1, 1], 21, 1),
            (&[4, 1, 1], 2, 1),
            (&[3, 2, 1], 8, 3),
            (&[5, 1], 4, 5),
            (&[2, 2, 2], 47, 6),
            (&[4, 2], 5, 2),
            (&[3, 3], 11, 9),
            (&[6], 2, 3),
        ],
        6,
    );
    assert_eq!(zp.slice(6), deg6);

    let c4 = poly(&[(&[1, 1, 1, 1], 1, 8), (&[2, 1, 1], 2, 8), (&[2, 2], 3, 8), (&[4], 2, 8)], 6);
    let k2p3 = poly(&[(&[1; 6], 1, 4), (&[2, 2, 1, 1], 1, 4), (&[2, 2, 2], 2, 4)], 6);
    let k2k3 = poly(
        &[(&[1; 6], 1, 12), (&[2, 2, 1, 1], 3, 12), (&[2, 2, 2], 4, 12), (&[3, 3], 2, 12), (&[6], 2, 12)],
        6,
    );
    let expected = PowerSumPoly::p(1, 6) + c4 + k2p3 + k2k3;
    assert_eq!(&zc - &zp, expected);
}

#[test]
fn labeled_connected_from_cycle_index() {
    let counts = labeled_counts(&cycle_index_connected(9).unwrap()).unwrap();
    let expected: Vec<BigInt> = [1i64, 1, 4, 38, 728, 26704, 1866256, 251548592, 66296291072]
        .into_iter()
        .map(BigInt::from)
        .collect();
    assert_eq!(counts, expected);
}

#[test]
fn square_of_edge_is_four_cycle() {
    let zc = cycle_index_connected(4).unwrap();
    let parts = prime_parts(&zc).unwrap();
    let only_edge = BTreeMap::from([(2u64, parts[&2].clone())]);
    let e = exp_composition(&only_edge, 4).unwrap();
    let c4 = species_cycle_index(&SmallGraph::cycle(4).unwrap()).unwrap();
    assert_eq!(e.slice(4), c4.with_truncation(4));
}

#[test]
fn dirichlet_of_exponential_composition() {
    let zc = cycle_index_connected(16).unwrap();
    let parts = prime_parts(&zc).unwrap();
    let composed = exp_composition(&parts, 16).unwrap();
    let lhs = DirichletEGF::from_sequence(labeled_counts(&composed).unwrap(), 16);
    let sum = parts.values().fold(PowerSumPoly::zero(16), |a, p| a + p.clone());
    let rhs = DirichletEGF::from_sequence(labeled_counts(&sum).unwrap(), 16).exp().unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn dirichlet_log_at_primes_and_semiprimes() {
    let c = unlabeled_connected_counts(15).unwrap();
    let d = log_connected_dirichlet(&c).unwrap();
    let b = unlabeled_prime_counts(15).unwrap();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let cp = primo_core::Rational::from_integer(c[p as usize - 1].clone());
        assert_eq!(d.coeff(p), cp, "p={p}");
        assert_eq!(primo_core::Rational::from_integer(b[p as usize - 1].clone()), cp);
    }
    for (p, q) in [(2u64, 3u64), (2, 5), (2, 7), (3, 5)] {
        let at = |n: u64| primo_core::Rational::from_integer(c[n as usize - 1].clone());
        assert_eq!(d.coeff(p * q), at(p * q) - at(p) * at(q), "n={}", p * q);
    }
}

#[test]
fn report_is_consistent_at_nine() {
    let r = run_report(9).unwrap();
    assert_eq!(r.labeled_prime.last().unwrap().to_string(), "66296210432");
    assert_eq!(r.unlabeled_prime.last().unwrap().to_string(), "261077");
}
