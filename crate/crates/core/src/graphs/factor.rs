use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::canon::canonical_graph;
use super::{cartesian_product, check_limit, encode_graph6, SmallGraph, CANONICAL_LIMIT, GENERATION_LIMIT};
use crate::error::{Error, Result};
use crate::partitions::divisors;

type Cache = [OnceLock<Vec<SmallGraph>>; GENERATION_LIMIT + 1];

static ALL: Cache = [const { OnceLock::new() }; GENERATION_LIMIT + 1];
static CONNECTED: Cache = [const { OnceLock::new() }; GENERATION_LIMIT + 1];

fn sorted_by_graph6(graphs: impl IntoIterator<Item = SmallGraph>) -> Vec<SmallGraph> {
    let mut out: Vec<(String, SmallGraph)> = graphs.into_iter().map(|g| (encode_graph6(&g), g)).collect();
    out.sort();
    out.into_iter().map(|(_, g)| g).collect()
}

/// Canonical graphs reached from `level` by adding one edge.
fn augment(level: &BTreeSet<SmallGraph>) -> BTreeSet<SmallGraph> {
    let level: Vec<&SmallGraph> = level.iter().collect();
    level
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.order();
            (0..n)
                .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .map(|(u, v)| {
                    let mut h = **g;
                    h.add_edge(u, v);
                    canonical_graph(&h).expect("within the canonical limit")
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// One canonical representative per isomorphism class of graphs on `n ≤ 7`
/// vertices, ordered by graph6 string.
pub fn all_unlabeled(n: usize) -> Result<&'static [SmallGraph]> {
    check_limit(n, GENERATION_LIMIT)?;
    Ok(ALL[n].get_or_init(|| {
        let mut level = BTreeSet::from([SmallGraph::empty(n).expect("n within limit")]);
        let mut all = Vec::new();
        while !level.is_empty() {
            let next = augment(&level);
            all.extend(level);
            level = next;
        }
        sorted_by_graph6(all)
    }))
}

/// Representatives of the connected graphs on `n ≤ 7` vertices.
pub fn connected_unlabeled(n: usize) -> Result<&'static [SmallGraph]> {
    check_limit(n, GENERATION_LIMIT)?;
    if let Some(cached) = CONNECTED[n].get() {
        return Ok(cached);
    }
    let connected = all_unlabeled(n)?.iter().filter(|g| g.is_connected()).copied().collect();
    Ok(CONNECTED[n].get_or_init(|| connected))
}

fn factor_canonical(c: &SmallGraph) -> Vec<SmallGraph> {
    let n = c.order();
    let mut found: Option<Vec<SmallGraph>> = None;
    for a in divisors(n as u64).into_iter().map(|a| a as usize) {
        let b = n / a;
        if a < 2 || a > b {
            continue;
        }
        let left = connected_unlabeled(a).expect("factor sizes stay below the generation limit");
        let right = connected_unlabeled(b).expect("factor sizes stay below the generation limit");
        for x in left {
            for y in right {
                if x.edge_count() * b + y.edge_count() * a != c.edge_count() {
                    continue;
                }
                let prod = cartesian_product(x, y).expect("product fits");
                if canonical_graph(&prod).expect("within the canonical limit") != *c {
                    continue;
                }
                let mut factors = factor_canonical(x);
                factors.extend(factor_canonical(y));
                let factors = sorted_by_graph6(factors);
                match &found {
                    None => found = Some(factors),
                    Some(prev) => assert_eq!(prev, &factors, "two different prime factorizations of {c:?}"),
                }
            }
        }
    }
    found.unwrap_or_else(|| vec![*c])
}

/// The multiset of prime factors of a connected graph on at most 8 vertices,
/// as canonical graphs ordered by graph6 string. `K_1` has no prime factors.
pub fn prime_factorize(g: &SmallGraph) -> Result<Vec<SmallGraph>> {
    check_limit(g.order(), CANONICAL_LIMIT)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    Ok(factor_canonical(&canonical_graph(g)?))
}

pub fn is_prime(g: &SmallGraph) -> Result<bool> {
    Ok(prime_factorize(g)?.len() == 1)
}
