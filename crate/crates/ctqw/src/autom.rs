//! Exhaustive automorphism and isomorphism search by backtracking.
//!
//! Plain depth-first mapping with degree/distance invariants for pruning.
//! Intended as a test oracle for graphs on at most 16 vertices; the
//! transfer pipeline only consults it as an advisory filter.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::VertexPartition;
use alloc::vec;
use alloc::vec::Vec;

/// Hard vertex-count limit for the exhaustive search.
pub const AUTOMORPHISM_LIMIT: usize = 16;

/// Groups larger than this abort enumeration rather than fill memory.
const ENUMERATION_BUDGET: usize = 1 << 20;

/// Per-vertex invariant preserved by every isomorphism: the sorted list of
/// (distance, weight-bits) pairs over all other vertices.
fn vertex_invariant(g: &Graph, u: usize) -> Vec<(usize, u64)> {
    let dist = g.distances_from(u);
    let n = g.vertex_count();
    let mut inv: Vec<(usize, u64)> = (0..n)
        .filter(|&v| v != u)
        .map(|v| (dist[v].unwrap_or(usize::MAX), g.weight(u, v).to_bits()))
        .collect();
    inv.sort_unstable();
    inv
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    inv_g: Vec<Vec<(usize, u64)>>,
    inv_h: Vec<Vec<(usize, u64)>>,
    found: Vec<Vec<usize>>,
    first_only: bool,
    budget_hit: bool,
}

impl<'a> Search<'a> {
    fn run(&mut self, fixed: Option<(usize, usize)>) {
        let n = self.g.vertex_count();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if let Some((u, v)) = fixed {
            if self.inv_g[u] != self.inv_h[v] {
                return;
            }
            image[u] = v;
            used[v] = true;
        }
        self.extend(&mut image, &mut used, 0);
    }

    fn extend(&mut self, image: &mut [usize], used: &mut [bool], mut next: usize) {
        let n = image.len();
        while next < n && image[next] != usize::MAX {
            next += 1;
        }
        if next == n {
            if self.found.len() >= ENUMERATION_BUDGET {
                self.budget_hit = true;
                return;
            }
            self.found.push(image.to_vec());
            return;
        }
        for candidate in 0..n {
            if used[candidate] || self.inv_g[next] != self.inv_h[candidate] {
                continue;
            }
            // Consistency with everything already mapped.
            let ok = (0..n).all(|w| {
                image[w] == usize::MAX
                    || self.g.weight(next, w) == self.h.weight(candidate, image[w])
            });
            if !ok {
                continue;
            }
            image[next] = candidate;
            used[candidate] = true;
            self.extend(image, used, next + 1);
            image[next] = usize::MAX;
            used[candidate] = false;
            if self.budget_hit || (self.first_only && !self.found.is_empty()) {
                return;
            }
        }
    }
}

fn search_all(g: &Graph, h: &Graph, fixed: Option<(usize, usize)>) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > AUTOMORPHISM_LIMIT {
        return Err(Error::TooLarge { n, limit: AUTOMORPHISM_LIMIT });
    }
    let mut s = Search {
        g,
        h,
        inv_g: (0..n).map(|u| vertex_invariant(g, u)).collect(),
        inv_h: (0..n).map(|u| vertex_invariant(h, u)).collect(),
        found: Vec::new(),
        first_only: false,
        budget_hit: false,
    };
    s.run(fixed);
    if s.budget_hit {
        return Err(Error::SearchBudgetExceeded);
    }
    Ok(s.found)
}

/// All adjacency- and weight-preserving permutations of `graph`.
pub fn automorphisms(graph: &Graph) -> Result<Vec<Vec<usize>>> {
    search_all(graph, graph, None)
}

/// The stabilizer Aut(X)_u: automorphisms fixing `u`.
pub fn automorphisms_fixing(graph: &Graph, u: usize) -> Result<Vec<Vec<usize>>> {
    graph.check_vertex(u)?;
    search_all(graph, graph, Some((u, u)))
}

/// Weight-preserving isomorphism test; both graphs must obey the size
/// limit.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() {
        return Ok(false);
    }
    let n = g.vertex_count();
    if n > AUTOMORPHISM_LIMIT {
        return Err(Error::TooLarge { n, limit: AUTOMORPHISM_LIMIT });
    }
    let mut s = Search {
        g,
        h,
        inv_g: (0..n).map(|u| vertex_invariant(g, u)).collect(),
        inv_h: (0..n).map(|u| vertex_invariant(h, u)).collect(),
        found: Vec::new(),
        first_only: true,
        budget_hit: false,
    };
    s.run(None);
    Ok(!s.found.is_empty())
}

/// Orbit partition of a permutation set acting on `0..n`.
pub fn orbit_partition(perms: &[Vec<usize>], n: usize) -> VertexPartition {
    let mut representative: Vec<usize> = (0..n).collect();
    fn find(repr: &mut Vec<usize>, x: usize) -> usize {
        if repr[x] == x {
            x
        } else {
            let root = find(repr, repr[x]);
            repr[x] = root;
            root
        }
    }
    for p in perms {
        for v in 0..n {
            let (a, b) = (find(&mut representative, v), find(&mut representative, p[v]));
            if a != b {
                representative[a] = b;
            }
        }
    }
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let root = find(&mut representative, v);
        cells[root].push(v);
    }
    cells.retain(|c| !c.is_empty());
    VertexPartition::new(n, cells).unwrap()
}

/// Orbit of `u` under the full automorphism group.
pub fn vertex_orbit(graph: &Graph, u: usize) -> Result<Vec<usize>> {
    let autos = automorphisms(graph)?;
    let mut orbit: Vec<usize> = autos.iter().map(|p| p[u]).collect();
    orbit.sort_unstable();
    orbit.dedup();
    Ok(orbit)
}

/// Vertex-transitivity by exhaustive orbit computation.
pub fn is_vertex_transitive(graph: &Graph) -> Result<bool> {
    Ok(vertex_orbit(graph, 0)?.len() == graph.vertex_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::is_equitable;

    #[test]
    fn c4_has_dihedral_group_of_order_8() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(automorphisms(&c4).unwrap().len(), 8);
    }

    #[test]
    fn p5_stabilizers() {
        let p5 = Graph::path(5).unwrap();
        assert_eq!(automorphisms_fixing(&p5, 2).unwrap().len(), 2);
        assert_eq!(automorphisms_fixing(&p5, 0).unwrap().len(), 1);
        assert_eq!(automorphisms_fixing(&p5, 1).unwrap().len(), 1);
    }

    #[test]
    fn petersen_group_order_120() {
        assert_eq!(automorphisms(&Graph::petersen()).unwrap().len(), 120);
    }

    #[test]
    fn orbit_partition_is_equitable() {
        let g = Graph::path(4).unwrap().join(&Graph::empty(2).unwrap());
        let autos = automorphisms(&g).unwrap();
        let orbits = orbit_partition(&autos, g.vertex_count());
        assert!(is_equitable(&g, &orbits));
    }

    #[test]
    fn size_limit_enforced() {
        let g = Graph::cube(5).unwrap();
        assert!(matches!(automorphisms(&g), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn cube_is_vertex_transitive_path_is_not() {
        assert!(is_vertex_transitive(&Graph::cube(3).unwrap()).unwrap());
        assert!(!is_vertex_transitive(&Graph::path(3).unwrap()).unwrap());
    }

    #[test]
    fn weighted_graphs_distinguish_weights() {
        let g = Graph::from_edges(3, &[(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        // Path automorphism swapping ends would need to swap weights.
        assert_eq!(automorphisms(&g).unwrap().len(), 1);
    }
}
