//! Brute-force graph toolkit: small simple graphs, Cartesian products,
//! canonical forms, automorphism groups, unlabeled generation and prime
//! factorization.
//!
//! Everything here works by exhaustive search and is meant as ground truth
//! for the algebraic pipelines, so the size limits are deliberately small.

mod canon;
mod factor;
mod graph6;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{aut_group, aut_order, canonical_form, canonical_labeling, is_isomorphic, labeled_count, species_cycle_index};
pub use factor::{all_unlabeled, connected_unlabeled, is_prime, prime_factorize};
pub use graph6::{decode_graph6, encode_graph6};

/// Largest vertex count a [`SmallGraph`] can hold.
pub const MAX_VERTICES: usize = 16;
/// Largest vertex count accepted by canonical forms and factorization.
pub const CANONICAL_LIMIT: usize = 8;
/// Largest vertex count for which automorphism groups are enumerated.
pub const AUT_LIMIT: usize = 9;
/// Largest vertex count for which all unlabeled graphs are generated.
pub const GENERATION_LIMIT: usize = 7;

/// Simple undirected graph on the vertex set `{0, …, n-1}`, `n ≤ 16`,
/// stored as adjacency bit rows.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: u8,
    rows: [u16; MAX_VERTICES],
}

pub(crate) fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::TooManyVertices { n, limit })
    } else {
        Ok(())
    }
}

impl SmallGraph {
    pub fn empty(n: usize) -> Result<Self> {
        check_limit(n, MAX_VERTICES)?;
        Ok(SmallGraph {
            n: n as u8,
            rows: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) on {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut g = Self::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        Ok(g)
    }

    /// Star `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            g.add_edge(0, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bit set.
    pub fn neighbors(&self, v: usize) -> u16 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.order()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
            .collect()
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let all = if n == MAX_VERTICES { u16::MAX } else { (1u16 << n) - 1 };
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> SmallGraph {
        let mut out = SmallGraph {
            n: self.n,
            rows: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}; {:?})", self.n, self.edges())
    }
}

/// Cartesian product `g ⊙ h`; the pair `(u, v)` becomes vertex `u·l(h) + v`.
pub fn cartesian_product(g: &SmallGraph, h: &SmallGraph) -> Result<SmallGraph> {
    let (a, b) = (g.order(), h.order());
    check_limit(a * b, MAX_VERTICES)?;
    let mut out = SmallGraph::empty(a * b)?;
    for u in 0..a {
        for (v, w) in h.edges() {
            out.add_edge(u * b + v, u * b + w);
        }
    }
    for (u, w) in g.edges() {
        for v in 0..b {
            out.add_edge(u * b + v, w * b + v);
        }
    }
    Ok(out)
}

/// `g^{⊙k}`; `K_1` for `k = 0`.
pub fn cartesian_power(g: &SmallGraph, k: u32) -> Result<SmallGraph> {
    let mut out = SmallGraph::empty(1)?;
    for _ in 0..k {
        out = cartesian_product(&out, g)?;
    }
    Ok(out)
}
