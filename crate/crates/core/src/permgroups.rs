//! Explicit small permutation groups.
//!
//! Groups are stored as their full, sorted element lists. Everything in
//! scope has order at most a few thousand (automorphism groups of 9-vertex
//! graphs aside), so cycle indices are plain sums over elements.
//!
//! Points are 0-indexed. Product sets are ranked row-major: `(i, j)` in
//! `[m] × [n]` is point `i·n + j`. A function `f: [m] → [n]` is point
//! `Σ_i f(i)·n^i` (mixed radix, `f(0)` least significant).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfunc::{PowerSumPoly, Rational, DEFAULT_TRUNCATION};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `[n]` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if x as usize >= n {
                    return Err(Error::NotAPermutation(cycle.to_vec()));
                }
                images[x as usize] = next;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_parts_unchecked(lengths)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Validates closure, identity and inverses before accepting `elements`.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        if elements.iter().any(|e| e.degree() != degree) {
            return Err(Error::NotAGroup("mixed degrees".into()));
        }
        let group = Self::from_trusted(degree, elements);
        group.check_axioms()?;
        Ok(group)
    }

    pub(crate) fn from_trusted(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        PermGroup { degree, elements }
    }

    /// The group generated by `gens` (closure under composition).
    pub fn generated_by(degree: usize, gens: &[Permutation]) -> Self {
        let id = Permutation::identity(degree);
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        Self::from_trusted(degree, seen.into_iter().collect())
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup {
            degree: n,
            elements: vec![Permutation::identity(n)],
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (0..n as u32).collect();
        permute_all(&mut current, 0, &mut out);
        Self::from_trusted(n, out.into_iter().map(|images| Permutation { images }).collect())
    }

    /// Cyclic group generated by the rotation `i ↦ i+1 mod n`.
    pub fn cyclic(n: usize) -> Self {
        let elements = (0..n.max(1))
            .map(|s| Permutation {
                images: (0..n).map(|i| ((i + s) % n.max(1)) as u32).collect(),
            })
            .collect();
        Self::from_trusted(n, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Closure under composition, presence of the identity and of inverses.
    pub fn check_axioms(&self) -> Result<()> {
        if !self.contains(&Permutation::identity(self.degree)) {
            return Err(Error::NotAGroup("missing identity".into()));
        }
        for a in &self.elements {
            if !self.contains(&a.inverse()) {
                return Err(Error::NotAGroup(format!("missing inverse of {a:?}")));
            }
            for b in &self.elements {
                if !self.contains(&a.compose(b)) {
                    return Err(Error::NotAGroup(format!("{a:?}∘{b:?} not in set")));
                }
            }
        }
        Ok(())
    }

    /// Pólya's cycle index `Z(G) = (1/|G|) Σ_σ p_{type(σ)}`.
    pub fn cycle_index_polynomial(&self) -> PowerSumPoly {
        let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
        for e in &self.elements {
            *counts.entry(e.cycle_type()).or_insert(0) += 1;
        }
        let order = BigInt::from(self.order());
        let truncation = DEFAULT_TRUNCATION.max(self.degree as u32);
        PowerSumPoly::from_terms(
            counts
                .into_iter()
                .map(|(l, c)| (l, Rational::new(BigInt::from(c), order.clone()))),
            truncation,
        )
    }

    /// Image of the group under a relabeling `i ↦ relabel[i]` of its points.
    pub fn relabeled(&self, relabel: &Permutation) -> PermGroup {
        let inv = relabel.inverse();
        let elements = self
            .elements
            .iter()
            .map(|g| relabel.compose(g).compose(&inv))
            .collect();
        Self::from_trusted(self.degree, elements)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, order {})", self.degree, self.order())
    }
}

fn permute_all(current: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k == current.len() {
        out.push(current.clone());
        return;
    }
    for i in k..current.len() {
        current.swap(k, i);
        permute_all(current, k + 1, out);
        current.swap(k, i);
    }
}

/// `A ∗ B` on `[m+n]`: `A` moves the first block, `B` the second.
pub fn sum_action(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree, b.degree);
    let mut elements = Vec::with_capacity(a.order() * b.order());
    for x in &a.elements {
        for y in &b.elements {
            let mut images = x.images.clone();
            images.extend(y.images.iter().map(|&j| j + m as u32));
            elements.push(Permutation { images });
        }
    }
    let g = PermGroup::from_trusted(m + n, elements);
    assert_eq!(g.order(), a.order() * b.order());
    g
}

/// `A × B` on `[m] × [n]` by `(a, b)(i, j) = (a(i), b(j))`.
pub fn product_action(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree, b.degree);
    let mut elements = Vec::with_capacity(a.order() * b.order());
    for x in &a.elements {
        for y in &b.elements {
            let mut images = vec![0u32; m * n];
            for i in 0..m {
                for j in 0..n {
                    images[i * n + j] = (x.apply(i) * n + y.apply(j)) as u32;
                }
            }
            elements.push(Permutation { images });
        }
    }
    let g = PermGroup::from_trusted(m * n, elements);
    if m > 0 && n > 0 {
        assert_eq!(g.order(), a.order() * b.order(), "product action not faithful");
    }
    g
}

/// All functions `[m] → B`, as index tuples into `b.elements`.
fn function_tuples(m: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..size).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// `B ≀ A` on `[m] × [n]` by `(α, τ)(i, j) = (α(i), τ(i)(j))`.
pub fn wreath_action(b: &PermGroup, a: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree, b.degree);
    let tuples = function_tuples(m, b.order());
    let mut elements = Vec::with_capacity(a.order() * tuples.len());
    for alpha in &a.elements {
        for tau in &tuples {
            let mut images = vec![0u32; m * n];
            for i in 0..m {
                let t = &b.elements[tau[i]];
                for j in 0..n {
                    images[i * n + j] = (alpha.apply(i) * n + t.apply(j)) as u32;
                }
            }
            elements.push(Permutation { images });
        }
    }
    let g = PermGroup::from_trusted(m * n, elements);
    if n > 0 {
        assert_eq!(g.order(), a.order() * tuples.len(), "wreath action not faithful");
    }
    g
}

/// `B^A` on the `n^m` functions `[m] → [n]` by
/// `((α, τ) f)(i) = τ(i)(f(α⁻¹(i)))`.
pub fn exponentiation_action(b: &PermGroup, a: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree, b.degree);
    let points = n.pow(m as u32);
    let tuples = function_tuples(m, b.order());
    let functions: Vec<Vec<usize>> = (0..points).map(|r| unrank_function(r, m, n)).collect();
    let mut elements = Vec::with_capacity(a.order() * tuples.len());
    for alpha in &a.elements {
        let alpha_inv = alpha.inverse();
        for tau in &tuples {
            let mut images = vec![0u32; points];
            for (r, f) in functions.iter().enumerate() {
                let g: Vec<usize> = (0..m)
                    .map(|i| b.elements[tau[i]].apply(f[alpha_inv.apply(i)]))
                    .collect();
                images[r] = rank_function(&g, n) as u32;
            }
            elements.push(Permutation { images });
        }
    }
    let g = PermGroup::from_trusted(points, elements);
    if n >= 2 {
        assert_eq!(g.order(), a.order() * tuples.len(), "exponentiation action not faithful");
    }
    g
}

/// Mixed-radix rank of `f: [m] → [n]`, `f(0)` least significant.
pub fn rank_function(f: &[usize], n: usize) -> usize {
    f.iter().rev().fold(0, |acc, &x| acc * n + x)
}

pub fn unrank_function(mut r: usize, m: usize, n: usize) -> Vec<usize> {
    (0..m)
        .map(|_| {
            let x = r % n;
            r /= n;
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64, i64)]) -> PowerSumPoly {
        PowerSumPoly::from_terms(terms.iter().map(|(l, a, b)| (part(l), rat(*a, *b))), 16)
    }

    fn z_c4_aut() -> PowerSumPoly {
        poly(&[(&[1, 1, 1, 1], 1, 8), (&[2, 1, 1], 2, 8), (&[2, 2], 3, 8), (&[4], 2, 8)])
    }

    fn dihedral4() -> PermGroup {
        let r = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let s = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
        PermGroup::generated_by(4, &[r, s])
    }

    #[test]
    fn permutation_basics() {
        let p = Permutation::new(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(p.cycle_type(), part(&[3, 1]));
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert_eq!(Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap().images(), &[1, 0, 3, 2]);
    }

    #[test]
    fn cycle_indices() {
        assert_eq!(PermGroup::trivial(3).cycle_index_polynomial(), poly(&[(&[1, 1, 1], 1, 1)]));
        assert_eq!(
            PermGroup::symmetric(2).cycle_index_polynomial(),
            poly(&[(&[1, 1], 1, 2), (&[2], 1, 2)])
        );
        let d4 = dihedral4();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.cycle_index_polynomial(), z_c4_aut());
    }

    #[test]
    fn axioms_are_checked() {
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert!(PermGroup::from_elements(3, vec![t.clone()]).is_err());
        assert!(PermGroup::from_elements(3, vec![Permutation::identity(3), t]).is_ok());
        for g in [PermGroup::symmetric(4), PermGroup::cyclic(5), dihedral4()] {
            g.check_axioms().unwrap();
        }
    }

    #[test]
    fn sum_actions() {
        let s1 = PermGroup::symmetric(1);
        assert_eq!(sum_action(&s1, &s1), PermGroup::trivial(2));
        let s2 = PermGroup::symmetric(2);
        let z = s2.cycle_index_polynomial();
        assert_eq!(sum_action(&s2, &s2).cycle_index_polynomial(), &z * &z);
        let g = sum_action(&s2, &PermGroup::symmetric(3));
        assert_eq!((g.degree(), g.order()), (5, 12));
    }

    #[test]
    fn product_actions() {
        let s2 = PermGroup::symmetric(2);
        let z = s2.cycle_index_polynomial();
        assert_eq!(product_action(&s2, &s2).cycle_index_polynomial(), z.boxtimes(&z));
        // trivial × B: B acting on each copy in lockstep
        let b = PermGroup::symmetric(3);
        let g = product_action(&PermGroup::trivial(2), &b);
        assert_eq!(g.order(), b.order());
        assert_eq!(
            g.cycle_index_polynomial(),
            poly(&[(&[1, 1], 1, 1)]).boxtimes(&b.cycle_index_polynomial())
        );
    }

    #[test]
    fn wreath_actions() {
        let s2 = PermGroup::symmetric(2);
        assert_eq!(wreath_action(&s2, &PermGroup::symmetric(1)), s2);
        let w = wreath_action(&s2, &s2);
        assert_eq!((w.degree(), w.order()), (4, 8));
        w.check_axioms().unwrap();
        assert_eq!(w.cycle_index_polynomial(), z_c4_aut());
    }

    #[test]
    fn exponentiation_actions() {
        let s2 = PermGroup::symmetric(2);
        let e = exponentiation_action(&s2, &s2);
        assert_eq!((e.degree(), e.order()), (4, 8));
        e.check_axioms().unwrap();
        assert_eq!(e.cycle_index_polynomial(), z_c4_aut());
        // |B^A| = |A|·|B|^m
        let e = exponentiation_action(&PermGroup::symmetric(3), &s2);
        assert_eq!((e.degree(), e.order()), (9, 72));
        e.check_axioms().unwrap();
    }

    #[test]
    fn function_ranking() {
        for r in 0..27 {
            assert_eq!(rank_function(&unrank_function(r, 3, 3), 3), r);
        }
        assert_eq!(unrank_function(5, 3, 2), vec![1, 0, 1]);
    }
}
