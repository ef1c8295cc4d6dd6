//! Vertex partitions: equitable refinement, distance partitions, quotients.
//!
//! A partition is equitable when every vertex of a cell sees the same
//! weight-multiset in every other cell; the quotient walk on an equitable
//! partition inherits transfer behavior, which is why these show up in the
//! transfer pipeline.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Mat;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Max-norm threshold for `A Q Q^T = Q Q^T A` in `is_equitable`.
const EQUITABLE_TOL: f64 = 1e-10;

/// An ordered partition of the vertex set into disjoint cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<VertexPartition> {
        let mut seen = vec![false; n];
        let mut count = 0;
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::InvalidPartition);
            }
            for &v in cell {
                if v >= n || seen[v] {
                    return Err(Error::InvalidPartition);
                }
                seen[v] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidPartition);
        }
        let mut cells = cells;
        for cell in &mut cells {
            cell.sort_unstable();
        }
        Ok(VertexPartition { n, cells })
    }

    /// One cell holding everything.
    pub fn trivial(n: usize) -> VertexPartition {
        VertexPartition { n, cells: vec![(0..n).collect()] }
    }

    /// Every vertex its own cell.
    pub fn discrete(n: usize) -> VertexPartition {
        VertexPartition { n, cells: (0..n).map(|v| vec![v]).collect() }
    }

    /// `{{u}, V \ u}`.
    pub fn singleton_and_rest(n: usize, u: usize) -> VertexPartition {
        let rest: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        let cells = if rest.is_empty() { vec![vec![u]] } else { vec![vec![u], rest] };
        VertexPartition { n, cells }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cells.iter().position(|c| c.binary_search(&v).is_ok()).unwrap()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.n
    }

    /// n x |cells| matrix with unit columns supported on the cells.
    pub fn normalized_characteristic(&self) -> Mat {
        let mut q = Mat::zeros(self.n, self.cells.len());
        for (c, cell) in self.cells.iter().enumerate() {
            let scale = 1.0 / (cell.len() as f64).sqrt();
            for &v in cell {
                q[(v, c)] = scale;
            }
        }
        q
    }

    /// Equality as unordered partitions (the cells as a set).
    pub fn same_cells(&self, other: &VertexPartition) -> bool {
        if self.n != other.n || self.cells.len() != other.cells.len() {
            return false;
        }
        let mut a = self.cells.clone();
        let mut b = other.cells.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// True when every cell of `self` is contained in a cell of `coarser`.
    pub fn refines(&self, coarser: &VertexPartition) -> bool {
        self.cells.iter().all(|cell| {
            let target = coarser.cell_of(cell[0]);
            cell.iter().all(|&v| coarser.cell_of(v) == target)
        })
    }
}

/// Quotient of an equitable partition: the matrix `B` with `AQ = QB` for
/// the normalized characteristic matrix `Q`; symmetric, entries scaled by
/// square roots of cell-size ratios.
#[derive(Debug, Clone)]
pub struct QuotientMatrix {
    b: Mat,
    cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// The symmetric (normalized) quotient `Q^T A Q`.
    pub fn symmetric(&self) -> &Mat {
        &self.b
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    /// Unnormalized quotient: entry `(i, j)` is the weight from one vertex
    /// of cell `i` into all of cell `j`.
    pub fn counts(&self) -> Mat {
        let k = self.b.nrows();
        Mat::from_fn(k, k, |i, j| {
            self.b[(i, j)] * (self.cell_sizes[j] as f64 / self.cell_sizes[i] as f64).sqrt()
        })
    }
}

/// Partition of vertices by BFS distance from `u`; unreachable vertices, if
/// any, form one final cell.
pub fn distance_partition(graph: &Graph, u: usize) -> Result<VertexPartition> {
    graph.check_vertex(u)?;
    let dist = graph.distances_from(u);
    let max_d = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); max_d + 1];
    let mut unreachable = Vec::new();
    for (v, d) in dist.iter().enumerate() {
        match d {
            Some(d) => cells[*d].push(v),
            None => unreachable.push(v),
        }
    }
    if !unreachable.is_empty() {
        cells.push(unreachable);
    }
    VertexPartition::new(graph.vertex_count(), cells)
}

/// `A` commutes with `Q Q^T` up to 1e-10.
pub fn is_equitable(graph: &Graph, partition: &VertexPartition) -> bool {
    let a = graph.weights();
    let q = partition.normalized_characteristic();
    let qqt = q.matmul(&q.transpose());
    a.matmul(&qqt).max_norm_diff(&qqt.matmul(a)) <= EQUITABLE_TOL
}

/// Symmetric quotient `Q^T A Q`; errors when the partition is not
/// equitable.
pub fn quotient(graph: &Graph, partition: &VertexPartition) -> Result<QuotientMatrix> {
    if !is_equitable(graph, partition) {
        return Err(Error::NotEquitable);
    }
    let q = partition.normalized_characteristic();
    let b = q.transpose().matmul(graph.weights()).matmul(&q);
    Ok(QuotientMatrix { b, cell_sizes: partition.cell_sizes() })
}

/// Coarsest equitable refinement of `seed`, by iterated splitting on
/// sorted neighbor-weight multisets against every current cell.
pub fn coarsest_equitable_refinement(graph: &Graph, seed: &VertexPartition) -> VertexPartition {
    assert_eq!(seed.vertex_count(), graph.vertex_count());
    let n = graph.vertex_count();
    let mut cells: Vec<Vec<usize>> = seed.cells().to_vec();

    loop {
        let mut changed = false;
        'outer: for target in 0..cells.len() {
            for splitting in 0..cells.len() {
                // Signature of v against the splitting cell: sorted weight
                // multiset, compared bitwise (weights come from shared
                // constructor arithmetic).
                let signature = |v: usize| -> Vec<u64> {
                    let mut ws: Vec<f64> =
                        cells[splitting].iter().map(|&w| graph.weight(v, w)).collect();
                    ws.sort_unstable_by(f64::total_cmp);
                    ws.into_iter().map(f64::to_bits).collect()
                };
                let cell = &cells[target];
                if cell.len() <= 1 {
                    continue;
                }
                let first_sig = signature(cell[0]);
                let mut matching = Vec::new();
                let mut rest: Vec<(Vec<u64>, usize)> = Vec::new();
                for &v in cell {
                    let sig = signature(v);
                    if sig == first_sig {
                        matching.push(v);
                    } else {
                        rest.push((sig, v));
                    }
                }
                if rest.is_empty() {
                    continue;
                }
                // Group the rest by signature to split into all classes at
                // once.
                rest.sort();
                let mut new_cells: Vec<Vec<usize>> = vec![matching];
                let mut current_sig: Option<&[u64]> = None;
                for (sig, v) in &rest {
                    if current_sig != Some(sig.as_slice()) {
                        new_cells.push(Vec::new());
                        current_sig = Some(sig.as_slice());
                    }
                    new_cells.last_mut().unwrap().push(*v);
                }
                cells.remove(target);
                for (offset, c) in new_cells.into_iter().enumerate() {
                    cells.insert(target + offset, c);
                }
                changed = true;
                break 'outer;
            }
        }
        if !changed {
            break;
        }
    }
    for cell in &mut cells {
        cell.sort_unstable();
    }
    VertexPartition { n, cells }
}

/// Distance-regular: regular, and every distance partition is equitable.
pub fn is_distance_regular(graph: &Graph) -> bool {
    if graph.regularity().is_none() || !graph.is_connected() {
        return false;
    }
    (0..graph.vertex_count()).all(|u| {
        distance_partition(graph, u).map(|p| is_equitable(graph, &p)).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_partition_equitable_iff_regular() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(is_equitable(&c5, &VertexPartition::trivial(5)));
        let p4 = Graph::path(4).unwrap();
        assert!(!is_equitable(&p4, &VertexPartition::trivial(4)));
    }

    #[test]
    fn discrete_partition_always_equitable() {
        for g in [Graph::path(5).unwrap(), Graph::petersen()] {
            assert!(is_equitable(&g, &VertexPartition::discrete(g.vertex_count())));
        }
    }

    #[test]
    fn refinement_of_singleton_in_cube_is_distance_partition() {
        let q3 = Graph::cube(3).unwrap();
        let refined =
            coarsest_equitable_refinement(&q3, &VertexPartition::singleton_and_rest(8, 0));
        let dist = distance_partition(&q3, 0).unwrap();
        assert!(refined.same_cells(&dist));
        assert_eq!(refined.cell_sizes(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn refinement_on_regular_graph_keeps_trivial_seed() {
        let q3 = Graph::cube(3).unwrap();
        let refined = coarsest_equitable_refinement(&q3, &VertexPartition::trivial(8));
        assert_eq!(refined.cell_count(), 1);
    }

    #[test]
    fn distance_partition_examples() {
        let q3 = Graph::cube(3).unwrap();
        assert_eq!(distance_partition(&q3, 5).unwrap().cell_sizes(), vec![1, 3, 3, 1]);

        let p4 = Graph::path(4).unwrap();
        assert_eq!(distance_partition(&p4, 0).unwrap().cell_sizes(), vec![1, 1, 1, 1]);

        // K_{3,3} from any vertex: (1, 3, 2).
        let k33 = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap());
        assert_eq!(distance_partition(&k33, 0).unwrap().cell_sizes(), vec![1, 3, 2]);
    }

    #[test]
    fn quotient_of_cube_distance_partition_is_weighted_path() {
        let q3 = Graph::cube(3).unwrap();
        let pi = distance_partition(&q3, 0).unwrap();
        assert!(is_equitable(&q3, &pi));
        let b = quotient(&q3, &pi).unwrap();
        let s3 = 3.0f64.sqrt();
        let expect = Mat::from_rows(&[
            vec![0.0, s3, 0.0, 0.0],
            vec![s3, 0.0, 2.0, 0.0],
            vec![0.0, 2.0, 0.0, s3],
            vec![0.0, 0.0, s3, 0.0],
        ]);
        assert!(b.symmetric().max_norm_diff(&expect) < 1e-12);
    }

    #[test]
    fn join_partition_quotient_counts() {
        // X = C4 (2-regular on 4), Y = K3 (2-regular on 3).
        let z = Graph::cycle(4).unwrap().join(&Graph::complete(3).unwrap());
        let pi = VertexPartition::new(7, vec![(0..4).collect(), (4..7).collect()]).unwrap();
        assert!(is_equitable(&z, &pi));
        let q = quotient(&z, &pi).unwrap();
        let counts = q.counts();
        assert!((counts[(0, 0)] - 2.0).abs() < 1e-12);
        assert!((counts[(0, 1)] - 3.0).abs() < 1e-12);
        assert!((counts[(1, 0)] - 4.0).abs() < 1e-12);
        assert!((counts[(1, 1)] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn non_equitable_split_of_path() {
        let p4 = Graph::path(4).unwrap();
        let pi = VertexPartition::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
        assert!(!is_equitable(&p4, &pi));
        assert!(quotient(&p4, &pi).is_err());
    }

    #[test]
    fn normalized_characteristic_is_orthonormal() {
        let pi = VertexPartition::new(6, vec![vec![0, 2, 4], vec![1, 5], vec![3]]).unwrap();
        let q = pi.normalized_characteristic();
        let qtq = q.transpose().matmul(&q);
        assert!(qtq.max_norm_diff(&Mat::identity(3)) < 1e-12);
    }

    #[test]
    fn distance_regular_examples() {
        assert!(is_distance_regular(&Graph::cube(3).unwrap()));
        assert!(is_distance_regular(&Graph::petersen()));
        let k33 = Graph::empty(3).unwrap().join(&Graph::empty(3).unwrap());
        assert!(is_distance_regular(&k33));
        assert!(!is_distance_regular(&Graph::path(4).unwrap()));
    }

    #[test]
    fn invalid_partition_rejected() {
        assert!(VertexPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(VertexPartition::new(3, vec![vec![0], vec![1, 3]]).is_err());
    }
}
