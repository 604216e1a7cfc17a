use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;

use super::{check_limit, encode_graph6, SmallGraph, AUT_LIMIT, CANONICAL_LIMIT};
use crate::error::Result;
use crate::permgroups::{PermGroup, Permutation};
use crate::symfunc::PowerSumPoly;

/// Relabeling search. Position `p` of the new labeling receives a vertex of
/// the `p`-th largest degree; among those labelings we keep the one whose
/// upper-triangle columns (column `j` = adjacency of `j` to `0..j`, earlier
/// vertices in higher bits) are lexicographically smallest.
struct CanonSearch<'a> {
    g: &'a SmallGraph,
    slot_degree: Vec<u32>,
    order: Vec<usize>,
    cols: Vec<u16>,
    best_order: Vec<usize>,
    best_cols: Vec<u16>,
    found: bool,
}

impl CanonSearch<'_> {
    /// Returns whether a new best labeling was recorded below this node.
    fn run(&mut self, pos: usize, used: u16, mut state: Ordering) -> bool {
        let n = self.g.order();
        if pos == n {
            if self.found && state != Ordering::Less {
                return false;
            }
            self.best_order.clone_from(&self.order);
            self.best_cols.clone_from(&self.cols);
            self.found = true;
            return true;
        }
        let mut improved = false;
        for v in 0..n {
            if used >> v & 1 == 1 || self.g.degree(v) != self.slot_degree[pos] {
                continue;
            }
            let col = self.order[..pos]
                .iter()
                .fold(0u16, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u16);
            let next = match (self.found, state) {
                (true, Ordering::Equal) => match col.cmp(&self.best_cols[pos]) {
                    Ordering::Greater => continue,
                    o => o,
                },
                _ => Ordering::Less,
            };
            self.order[pos] = v;
            self.cols[pos] = col;
            if self.run(pos + 1, used | 1 << v, next) {
                state = Ordering::Equal;
                improved = true;
            }
        }
        improved
    }
}

/// Canonical relabeling of `g` (`n ≤ 8`): returns the canonical graph and the
/// map `old vertex ↦ new vertex`. Isomorphic inputs give identical graphs.
pub fn canonical_labeling(g: &SmallGraph) -> Result<(SmallGraph, Vec<usize>)> {
    let n = g.order();
    check_limit(n, CANONICAL_LIMIT)?;
    let mut slot_degree: Vec<u32> = (0..n).map(|v| g.degree(v)).collect();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));
    let mut search = CanonSearch {
        g,
        slot_degree,
        order: vec![0; n],
        cols: vec![0; n],
        best_order: Vec::new(),
        best_cols: Vec::new(),
        found: false,
    };
    search.run(0, 0, Ordering::Equal);
    let mut relabel = vec![0; n];
    for (pos, &v) in search.best_order.iter().enumerate() {
        relabel[v] = pos;
    }
    Ok((g.relabeled(&relabel), relabel))
}

pub(crate) fn canonical_graph(g: &SmallGraph) -> Result<SmallGraph> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// The graph6 string of the canonical relabeling; equal strings exactly for
/// isomorphic graphs.
pub fn canonical_form(g: &SmallGraph) -> Result<String> {
    Ok(encode_graph6(&canonical_graph(g)?))
}

pub fn is_isomorphic(g: &SmallGraph, h: &SmallGraph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        check_limit(g.order().max(h.order()), CANONICAL_LIMIT)?;
        return Ok(false);
    }
    Ok(canonical_graph(g)? == canonical_graph(h)?)
}

fn for_each_automorphism(g: &SmallGraph, mut visit: impl FnMut(&[usize])) {
    fn extend(g: &SmallGraph, image: &mut Vec<usize>, used: u16, visit: &mut dyn FnMut(&[usize])) {
        let n = g.order();
        let i = image.len();
        if i == n {
            visit(image);
            return;
        }
        for w in 0..n {
            if used >> w & 1 == 1 || g.degree(w) != g.degree(i) {
                continue;
            }
            if (0..i).all(|j| g.has_edge(j, i) == g.has_edge(image[j], w)) {
                image.push(w);
                extend(g, image, used | 1 << w, visit);
                image.pop();
            }
        }
    }
    extend(g, &mut Vec::with_capacity(g.order()), 0, &mut visit);
}

/// `aut(g)` by exhaustive extension of partial maps (`n ≤ 9`).
pub fn aut_group(g: &SmallGraph) -> Result<PermGroup> {
    let n = g.order();
    check_limit(n, AUT_LIMIT)?;
    let mut elements = Vec::new();
    for_each_automorphism(g, |img| {
        let images = img.iter().map(|&v| v as u32).collect();
        elements.push(Permutation::new(images).expect("automorphisms are bijections"));
    });
    Ok(PermGroup::from_trusted(n, elements))
}

pub fn aut_order(g: &SmallGraph) -> Result<u64> {
    check_limit(g.order(), AUT_LIMIT)?;
    let mut count = 0u64;
    for_each_automorphism(g, |_| count += 1);
    Ok(count)
}

/// Number of labeled graphs on `[n]` isomorphic to `g`, `n!/|aut(g)|`.
pub fn labeled_count(g: &SmallGraph) -> Result<BigUint> {
    let aut = BigUint::from(aut_order(g)?);
    let fact: BigUint = (1..=g.order() as u64).fold(BigUint::one(), |acc, k| acc * k);
    assert!(
        (&fact % &aut).bits() == 0,
        "|aut| = {aut} does not divide {}!",
        g.order()
    );
    Ok(fact / aut)
}

/// Cycle index of the species of graphs isomorphic to `g`, i.e. `Z(aut(g))`.
pub fn species_cycle_index(g: &SmallGraph) -> Result<PowerSumPoly> {
    Ok(aut_group(g)?.cycle_index_polynomial())
}
