//! Reference counts of labeled and unlabeled prime graphs for `n ≤ 16`, and a
//! row-by-row comparison against computed values.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

/// `p^l_n` for `n = 1..=16`.
pub const LABELED_PRIMES: [&str; 16] = [
    "0",
    "1",
    "4",
    "35",
    "728",
    "26464",
    "1866256",
    "251518352",
    "66296210432",
    "34496477587456",
    "35641657548953344",
    "73354596197458024448",
    "301272202649664088951808",
    "2471648811030427594714599424",
    "40527680937730480229320939012096",
    "1328578958335783200943054119287117312",
];

/// `p^u_n` for `n = 1..=16`.
pub const UNLABELED_PRIMES: [&str; 16] = [
    "0",
    "1",
    "2",
    "5",
    "21",
    "110",
    "853",
    "11111",
    "261077",
    "11716550",
    "1006700565",
    "164059830354",
    "50335907869219",
    "29003487462847208",
    "31397381142761241918",
    "6396956011322517616514",
];

pub const TABLE_ROWS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTable {
    pub labeled: Vec<BigInt>,
    pub unlabeled: Vec<BigInt>,
}

impl PrimeTable {
    pub fn embedded() -> Self {
        let parse = |col: &[&str]| col.iter().map(|s| BigInt::from_str(s).expect("valid decimal")).collect();
        PrimeTable {
            labeled: parse(&LABELED_PRIMES),
            unlabeled: parse(&UNLABELED_PRIMES),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub column: &'static str,
    pub expected: BigInt,
    pub found: Option<BigInt>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.found {
            Some(v) => write!(f, "row {} column {}: expected {}, found {v}", self.n, self.column, self.expected),
            None => write!(f, "row {} column {}: expected {}, no value computed", self.n, self.column, self.expected),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub max_n: usize,
    /// Nonzero reference entries compared.
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares rows `1..=max_n` of `expected` with computed columns indexed from
/// `n = 1`. Every row is checked; only nonzero reference entries are counted.
pub fn verify(expected: &PrimeTable, labeled: &[BigInt], unlabeled: &[BigInt], max_n: usize) -> VerifyReport {
    let max_n = max_n.min(expected.labeled.len()).min(expected.unlabeled.len());
    let mut report = VerifyReport {
        max_n,
        comparisons: 0,
        mismatches: Vec::new(),
    };
    for (column, reference, computed) in [
        ("p^l", &expected.labeled, labeled),
        ("p^u", &expected.unlabeled, unlabeled),
    ] {
        for n in 1..=max_n {
            let want = &reference[n - 1];
            if !want.is_zero() {
                report.comparisons += 1;
            }
            let got = computed.get(n - 1);
            if got != Some(want) {
                report.mismatches.push(Mismatch {
                    n,
                    column,
                    expected: want.clone(),
                    found: got.cloned(),
                });
            }
        }
    }
    report.mismatches.sort_by_key(|m| m.n);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_table_verifies_against_itself() {
        let t = PrimeTable::embedded();
        let r = verify(&t, &t.labeled, &t.unlabeled, 16);
        assert!(r.passed());
        assert_eq!(r.comparisons, 30);
        let r = verify(&t, &t.labeled, &t.unlabeled, 1);
        assert!(r.passed());
        assert_eq!(r.comparisons, 0);
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let t = PrimeTable::embedded();
        let mut bad = t.clone();
        bad.unlabeled[7] += 1;
        let r = verify(&bad, &t.labeled, &t.unlabeled, 16);
        assert!(!r.passed());
        assert_eq!(r.mismatches.len(), 1);
        assert_eq!(r.mismatches[0].to_string(), "row 8 column p^u: expected 11112, found 11111");
        let r = verify(&t, &t.labeled[..3], &t.unlabeled, 5);
        assert_eq!(r.mismatches.len(), 2);
    }
}
