//! Simple undirected graphs on up to 64 vertices.
//!
//! Adjacency is one `u64` bitmask per vertex, so degree is a popcount and
//! neighborhood algebra is word operations. Values are immutable once
//! constructed; operations that "modify" a graph return a new one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// All-ones mask over the first `n` bits.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::BadOrder(n));
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an explicit edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange(u, v));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Invariant-preserving mutation, for builders inside the crate.
    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    /// New graph with one extra vertex (index `n`) adjacent to `neighborhood`.
    pub(crate) fn extend_with_vertex(&self, neighborhood: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(neighborhood & !full_mask(self.n), 0);
        let mut g = self.clone();
        let v = g.n;
        g.n += 1;
        g.adj[v] = neighborhood;
        let mut rest = neighborhood;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[u] |= bit(v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        let total: u32 = self.adj[..self.n].iter().map(|w| w.count_ones()).sum();
        (total / 2) as usize
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n);
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        assert!(v < self.n);
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.neighbors_mask(v);
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(u)
            }
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let delta_min = degrees.iter().copied().min().unwrap_or(0);
        let delta_max = degrees.iter().copied().max().unwrap_or(0);
        let m = degrees.iter().sum::<usize>() / 2;
        DegreeProfile { degrees, delta_min, delta_max, m }
    }

    /// Edges as ordered pairs (u < v), ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !full_mask(u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Bitset BFS from vertex 0.
    pub fn is_connected(&self) -> bool {
        let all = full_mask(self.n);
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Vertex sets of the connected components, as bitmasks.
    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let all = full_mask(self.n);
        let mut unseen = all;
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0u64;
                let mut rest = frontier;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            unseen &= !comp;
        }
        out
    }

    /// Subgraph induced by the vertices in `mask`, labels compacted in
    /// ascending order of the original labels.
    pub(crate) fn induced(&self, mask: u64) -> Graph {
        debug_assert!(mask != 0 && mask & !full_mask(self.n) == 0);
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask & bit(v) != 0).collect();
        let mut g = Graph { n: verts.len(), adj: [0; MAX_VERTICES] };
        for (new_u, &old_u) in verts.iter().enumerate() {
            for (new_v, &old_v) in verts.iter().enumerate().skip(new_u + 1) {
                if self.adj[old_u] & bit(old_v) != 0 {
                    g.adj[new_u] |= bit(new_v);
                    g.adj[new_v] |= bit(new_u);
                }
            }
        }
        g
    }

    /// Removes `v` and compacts the labels of the surviving vertices
    /// (every label above `v` shifts down by one).
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(self.n >= 2, "cannot delete from a single-vertex graph");
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        let mut g = Graph { n: self.n - 1, adj: [0; MAX_VERTICES] };
        let low = full_mask(v);
        for old in 0..self.n {
            if old == v {
                continue;
            }
            let row = self.adj[old];
            let compacted = (row & low) | ((row & !low & !bit(v)) >> 1);
            let new = if old < v { old } else { old - 1 };
            g.adj[new] = compacted;
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// A star: one center adjacent to every other vertex, no other edges.
    pub fn is_star(&self) -> bool {
        if self.n < 2 || self.m() != self.n - 1 {
            return false;
        }
        let mut leaves = 0;
        let mut centers = 0;
        for v in 0..self.n {
            // center test first: at n = 2 both vertices qualify either way
            match self.degree(v) {
                d if d == self.n - 1 => centers += 1,
                1 => leaves += 1,
                _ => return false,
            }
        }
        centers >= 1 && centers + leaves == self.n
    }

    pub fn family(family: Family, n: usize) -> Result<Self> {
        let min = family.min_vertices();
        if n < min {
            return Err(Error::FamilyTooSmall { family: family.name(), min, n });
        }
        let mut g = Graph::empty(n)?;
        match family {
            Family::Complete => {
                for u in 0..n {
                    for v in u + 1..n {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            Family::Star => {
                for v in 1..n {
                    g.add_edge_unchecked(0, v);
                }
            }
            Family::Cycle => {
                for v in 0..n {
                    g.add_edge_unchecked(v, (v + 1) % n);
                }
            }
            Family::Path => {
                for v in 1..n {
                    g.add_edge_unchecked(v - 1, v);
                }
            }
            Family::StarPlusEdge => {
                for v in 1..n {
                    g.add_edge_unchecked(0, v);
                }
                g.add_edge_unchecked(1, 2);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges())
    }
}

/// Named constructible families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    Star,
    Cycle,
    Path,
    /// Star with one extra edge joining two leaves.
    StarPlusEdge,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::StarPlusEdge => "star_plus_edge",
        }
    }

    pub fn min_vertices(&self) -> usize {
        match self {
            Family::Complete | Family::Path => 1,
            Family::Star => 2,
            Family::Cycle => 3,
            Family::StarPlusEdge => 3,
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "cycle" => Ok(Family::Cycle),
            "path" => Ok(Family::Path),
            "star_plus_edge" => Ok(Family::StarPlusEdge),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Degree summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta_min: usize,
    pub delta_max: usize,
    pub m: usize,
}
