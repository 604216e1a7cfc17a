//! Integer partitions, cycle-type bookkeeping and the small amount of
//! elementary number theory the rest of the crate leans on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing sequence of positive parts.
///
/// Partitions are ordered first by weight and then in reverse-lexicographic
/// order of their parts, so `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
/// Every map keyed by `Partition` therefore iterates in canonical print order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts given in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] for callers that only ever pass positive parts.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        debug_assert!(!parts.contains(&0));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition from `(part, multiplicity)` pairs.
    pub fn from_multiplicities<I>(mults: I) -> Self
    where
        I: IntoIterator<Item = (u32, u64)>,
    {
        let mut parts = Vec::new();
        for (part, count) in mults {
            assert!(part > 0 || count == 0, "zero part in multiplicity map");
            parts.extend(std::iter::repeat_n(part, count as usize));
        }
        Partition::from_parts_unchecked(parts)
    }

    /// The single-part partition `(k)`.
    pub fn single(k: u32) -> Self {
        assert!(k > 0);
        Partition { parts: vec![k] }
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn ones(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The multiplicity view `i -> c_i`, only listing parts that occur.
    pub fn multiplicities(&self) -> BTreeMap<u32, u64> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// `c_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u64 {
        self.parts.iter().filter(|&&p| p == i).count() as u64
    }

    /// Multiset union of parts (the index of `p_λ · p_μ`).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::from_parts_unchecked(parts)
    }

    /// Every part multiplied by `k` (the index of `p_λ ∘ p_k`).
    pub fn scaled(&self, k: u32) -> Partition {
        assert!(k > 0);
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// `z_λ = Π i^{c_i} c_i!`, the order of the centralizer of a permutation of
/// cycle type `λ`.
pub fn z_of(lambda: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, c) in lambda.multiplicities() {
        for j in 1..=c {
            z *= BigUint::from(i) * BigUint::from(j);
        }
    }
    z
}

/// The Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Writes `n = r^e` with `e` as large as possible; `r` is then not itself a
/// perfect power.
pub fn root_and_exponent(n: u64) -> (u64, u32) {
    assert!(n >= 2, "root_and_exponent needs n >= 2");
    let max_e = 63 - n.leading_zeros();
    for e in (2..=max_e).rev() {
        if let Some(r) = exact_root(n, e) {
            return (r, e);
        }
    }
    (n, 1)
}

fn exact_root(n: u64, e: u32) -> Option<u64> {
    let guess = (n as f64).powf(1.0 / e as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1)
        .filter(|&r| r >= 2)
        .find(|&r| r.checked_pow(e) == Some(n))
}
