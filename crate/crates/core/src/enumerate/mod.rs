//! Exhaustive enumeration of connected graphs, one per isomorphism class.
//!
//! Orderly generation: canonical graphs on k+1 vertices are exactly the
//! canonical extensions of canonical graphs on k vertices by a new last
//! vertex (see [`canon`]). Intermediate graphs may be disconnected; the
//! final vertex must touch every component, which makes the output
//! connected without ever rejecting a finished graph after the fact.

pub mod canon;
pub mod graph6;
pub mod sample;

use std::ops::RangeInclusive;

pub use canon::is_canonical;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orders beyond this are refused: the class counts grow so fast that a
/// bit-string canonicity search stops being the right tool.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Restricts the enumeration by size and degree. Bounds on edges and
/// maximum degree prune the search tree (both are monotone under adding a
/// vertex); the minimum-degree window is only testable on finished graphs.
#[derive(Debug, Clone, Default)]
pub struct GraphFilter {
    pub edges: Option<RangeInclusive<usize>>,
    pub max_degree: Option<RangeInclusive<usize>>,
    pub min_degree: Option<RangeInclusive<usize>>,
}

impl GraphFilter {
    pub fn matches(&self, g: &Graph) -> bool {
        self.edges.as_ref().map_or(true, |r| r.contains(&g.m()))
            && self.max_degree.as_ref().map_or(true, |r| r.contains(&g.max_degree()))
            && self.min_degree.as_ref().map_or(true, |r| r.contains(&g.min_degree()))
    }

    /// True when no graph on `target` vertices extending `g` can match.
    fn rules_out_descendants(&self, g: &Graph, target: usize) -> bool {
        if let Some(r) = &self.edges {
            if g.m() > *r.end() {
                return true;
            }
            let headroom = (target * (target - 1) - g.n() * (g.n() - 1)) / 2;
            if g.m() + headroom < *r.start() {
                return true;
            }
        }
        if let Some(r) = &self.max_degree {
            if g.max_degree() > *r.end() {
                return true;
            }
        }
        false
    }
}

struct Frame {
    g: Graph,
    components: Vec<u64>,
    next_subset: u64,
    subset_end: u64,
}

impl Frame {
    fn new(g: Graph) -> Self {
        let components = g.component_masks();
        let subset_end = 1u64 << g.n();
        Frame { g, components, next_subset: 0, subset_end }
    }
}

/// Lazily yields one representative per isomorphism class of connected
/// graphs on `n` vertices, in a fixed deterministic order.
pub struct GraphStream {
    target: usize,
    filter: GraphFilter,
    stack: Vec<Frame>,
    seed_pending: bool,
}

pub fn enumerate_connected(n: usize, filter: GraphFilter) -> Result<GraphStream> {
    if n == 0 {
        return Err(Error::BadOrder(n));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationCap(n));
    }
    Ok(GraphStream { target: n, filter, stack: Vec::new(), seed_pending: true })
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.seed_pending {
            self.seed_pending = false;
            let k1 = Graph::empty(1).unwrap();
            if self.target == 1 {
                return self.filter.matches(&k1).then_some(k1);
            }
            self.stack.push(Frame::new(k1));
        }
        while let Some(frame) = self.stack.last_mut() {
            if frame.next_subset == frame.subset_end {
                self.stack.pop();
                continue;
            }
            let s = frame.next_subset;
            frame.next_subset += 1;
            let last_level = frame.g.n() + 1 == self.target;
            if last_level && frame.components.iter().any(|&c| s & c == 0) {
                continue;
            }
            let child = frame.g.extend_with_vertex(s);
            if self.filter.rules_out_descendants(&child, self.target) {
                continue;
            }
            if !is_canonical(&child) {
                continue;
            }
            if last_level {
                if self.filter.matches(&child) {
                    return Some(child);
                }
            } else {
                self.stack.push(Frame::new(child));
            }
        }
        None
    }
}
