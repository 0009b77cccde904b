//! Canonicity test for orderly generation.
//!
//! The canonical labeling of a graph is the one whose adjacency upper
//! triangle, read column by column, is lexicographically *minimal* as a bit
//! string. Minimality makes the form hereditary: deleting the last vertex
//! of a canonical graph leaves a canonical graph, because any cheaper
//! relabeling of the prefix would extend to a cheaper relabeling of the
//! whole. That is exactly the property the generator needs: every canonical
//! graph on k+1 vertices arises from a canonical graph on k vertices by
//! attaching a new last vertex.

use crate::graph::{bit, Graph};

/// The column-major upper-triangle bit string, packed most significant bit
/// first. Only defined for n <= 11 (55 bits).
pub fn labeled_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n * n.saturating_sub(1) / 2 <= 64, "code does not fit in 64 bits");
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | u64::from(g.has_edge(i, j));
        }
    }
    code
}

/// Does the identity labeling of `g` realize the minimal code?
///
/// The search walks partial labelings depth first. At depth j it compares
/// the candidate's column-j block against the graph's own block: a smaller
/// block proves non-canonicity immediately, a larger one prunes the branch,
/// and only equal blocks recurse. Vertices that are twins of an
/// already-tried candidate (same adjacency outside the pair) are skipped,
/// since swapping twins is an automorphism and cannot produce a new code.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.n();
    if n <= 2 {
        return true;
    }
    let own_blocks: Vec<u64> = (0..n)
        .map(|j| {
            let mut b = 0u64;
            for i in 0..j {
                b = (b << 1) | u64::from(g.has_edge(i, j));
            }
            b
        })
        .collect();
    let mut prefix = [0usize; 64];
    search(g, &own_blocks, &mut prefix, 0, 0)
}

/// Returns false as soon as some labeling beats the identity.
fn search(g: &Graph, own: &[u64], prefix: &mut [usize; 64], depth: usize, used: u64) -> bool {
    let n = g.n();
    if depth == n {
        return true;
    }
    let mut tried: u64 = 0;
    for u in 0..n {
        if used & bit(u) != 0 {
            continue;
        }
        // twin skip: u interchangeable with an already-tried w
        let mut skip = false;
        let mut t = tried;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if (g.neighbors_mask(u) & !bit(w)) == (g.neighbors_mask(w) & !bit(u)) {
                skip = true;
                break;
            }
        }
        if skip {
            continue;
        }
        tried |= bit(u);
        let mut block = 0u64;
        for &p in prefix[..depth].iter() {
            block = (block << 1) | u64::from(g.has_edge(u, p));
        }
        if block < own[depth] {
            return false;
        }
        if block == own[depth] {
            prefix[depth] = u;
            if !search(g, own, prefix, depth + 1, used | bit(u)) {
                return false;
            }
        }
        // block > own[depth]: this branch can only yield larger codes
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn code_matches_definition() {
        // triangle with a pendant on vertex 0: columns 1,2,3 give bits
        // [1], [1,1], [1,0,0] -> 111100
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(labeled_code(&g), 0b111100);
    }

    #[test]
    fn exactly_one_labeling_per_class_is_canonical() {
        // over all labeled connected graphs on n vertices, the number of
        // canonical ones must equal the number of isomorphism classes
        for n in 1..=6 {
            let (_, classes) = oracle::connected_classes_brute(n);
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let mut canonical = 0usize;
            for mask in 0u64..(1u64 << pairs.len()) {
                let mut g = Graph::empty(n).unwrap();
                let mut mm = mask;
                while mm != 0 {
                    let k = mm.trailing_zeros() as usize;
                    mm &= mm - 1;
                    g.add_edge_unchecked(pairs[k].0, pairs[k].1);
                }
                if g.is_connected() && is_canonical(&g) {
                    canonical += 1;
                }
            }
            assert_eq!(canonical, classes.len(), "n = {n}");
        }
    }

    #[test]
    fn canonical_code_is_minimal_over_all_permutations() {
        // spot check: for each canonical graph the identity code must be
        // the minimum over every relabeling
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut codes = Vec::new();
        oracle::for_each_permutation(5, |perm, _| {
            let mut h = Graph::empty(5).unwrap();
            for (u, v) in g.edges() {
                let (a, b) = (perm[u], perm[v]);
                if !h.has_edge(a, b) {
                    h.add_edge_unchecked(a, b);
                }
            }
            codes.push((labeled_code(&h), is_canonical(&h)));
        });
        let min = codes.iter().map(|&(c, _)| c).min().unwrap();
        for (c, canon) in codes {
            assert_eq!(canon, c == min);
        }
    }
}
