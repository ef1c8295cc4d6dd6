//! Graph representation and constructors.
//!
//! A graph is a symmetric real weight matrix; simple graphs use 0/1 weights
//! and a zero diagonal, loops live on the diagonal. Symmetry is enforced at
//! construction and never re-checked downstream.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Float;

/// Which Hamiltonian drives the walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hamiltonian {
    Adjacency,
    Laplacian,
}

impl Hamiltonian {
    pub fn name(self) -> &'static str {
        match self {
            Hamiltonian::Adjacency => "adjacency",
            Hamiltonian::Laplacian => "laplacian",
        }
    }
}

/// A finite weighted graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    w: Mat,
    meta: Option<String>,
}

impl Graph {
    /// Wrap an explicit weight matrix. The matrix must be square and
    /// exactly symmetric; the diagonal carries loop weights.
    pub fn from_weight_matrix(w: Mat) -> Result<Graph> {
        if !w.is_square() || w.nrows() == 0 {
            return Err(Error::InvalidParameter("weight matrix must be square and non-empty".into()));
        }
        if !w.is_symmetric_exact() {
            return Err(Error::AsymmetricWeights);
        }
        Ok(Graph { n: w.nrows(), w, meta: None })
    }

    /// Build from an undirected edge list; `n` isolated vertices when the
    /// list is empty. Duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize, f64)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let mut w = Mat::zeros(n, n);
        for &(u, v, weight) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                if w[(u, u)] != 0.0 {
                    return Err(Error::InvalidParameter(format!("duplicate loop at {u}")));
                }
                w[(u, u)] = weight;
            } else {
                if w[(u, v)] != 0.0 {
                    return Err(Error::InvalidParameter(format!("duplicate edge {u}-{v}")));
                }
                w[(u, v)] = weight;
                w[(v, u)] = weight;
            }
        }
        Ok(Graph { n, w, meta: None })
    }

    pub fn with_meta(mut self, meta: impl Into<String>) -> Graph {
        self.meta = Some(meta.into());
        self
    }

    pub fn meta(&self) -> Option<&str> {
        self.meta.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Weight matrix, diagonal included.
    pub fn weights(&self) -> &Mat {
        &self.w
    }

    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.w[(u, v)]
    }

    /// Loop weights.
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.w[(i, i)]).collect()
    }

    /// Undirected edges `u < v` with nonzero weight.
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.w[(u, v)] != 0.0 {
                    out.push((u, v, self.w[(u, v)]));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, u: usize) -> Result<()> {
        if u < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: u, n: self.n })
        }
    }

    /// Neighbors in the unweighted support (nonzero off-diagonal weight).
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| v != u && self.w[(u, v)] != 0.0).collect()
    }

    /// Weighted degree: sum of off-diagonal weights in the row.
    pub fn degree(&self, u: usize) -> f64 {
        (0..self.n).filter(|&v| v != u).map(|v| self.w[(u, v)]).sum()
    }

    /// `Some(k)` when all weighted degrees equal `k`.
    pub fn regularity(&self) -> Option<f64> {
        let k = self.degree(0);
        (1..self.n).all(|u| (self.degree(u) - k).abs() < 1e-12).then_some(k)
    }

    pub fn has_integer_weights(&self) -> bool {
        self.w.data().iter().all(|&x| x == libm::round(x))
    }

    /// The chosen Hamiltonian as a dense matrix. The Laplacian is
    /// `diag(row sums) - W` over the off-diagonal weights; loops are
    /// ignored there.
    pub fn hamiltonian(&self, h: Hamiltonian) -> Mat {
        match h {
            Hamiltonian::Adjacency => self.w.clone(),
            Hamiltonian::Laplacian => {
                let mut l = Mat::zeros(self.n, self.n);
                for u in 0..self.n {
                    for v in 0..self.n {
                        if u != v {
                            l[(u, v)] = -self.w[(u, v)];
                            l[(u, u)] += self.w[(u, v)];
                        }
                    }
                }
                l
            }
        }
    }

    // ---- named constructors -------------------------------------------

    /// Path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Graph> {
        require(n >= 1, "path needs n >= 1")?;
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1.0)).collect();
        Ok(Graph::from_edges(n, &edges)?.with_meta(format!("path:{n}")))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        require(n >= 3, "cycle needs n >= 3")?;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n, 1.0)).collect();
        Ok(Graph::from_edges(n, &edges)?.with_meta(format!("cycle:{n}")))
    }

    /// Complete graph.
    pub fn complete(n: usize) -> Result<Graph> {
        require(n >= 1, "complete graph needs n >= 1")?;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v, 1.0));
            }
        }
        Ok(Graph::from_edges(n, &edges)?.with_meta(format!("complete:{n}")))
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        require(n >= 1, "empty graph needs n >= 1")?;
        Ok(Graph::from_edges(n, &[])?.with_meta(format!("empty:{n}")))
    }

    /// Hypercube `Q_d` on `2^d` vertices; vertices are bitmasks, adjacent
    /// when they differ in one bit. `Q_0` is a single vertex.
    pub fn cube(d: u32) -> Result<Graph> {
        require(d <= 16, "cube dimension capped at 16")?;
        let n = 1usize << d;
        let mut edges = Vec::new();
        for u in 0..n {
            for b in 0..d {
                let v = u ^ (1usize << b);
                if u < v {
                    edges.push((u, v, 1.0));
                }
            }
        }
        Ok(Graph::from_edges(n, &edges)?.with_meta(format!("cube:{d}")))
    }

    /// Folded (d+1)-cube on `2^d` vertices: `Q_d` plus an edge from each
    /// vertex to the unique vertex at distance `d` (its complement mask).
    /// `folded_cube(1)` degenerates to `K_2`, `folded_cube(2)` is `K_4`.
    pub fn folded_cube(d: u32) -> Result<Graph> {
        require((1..=16).contains(&d), "folded cube needs 1 <= d <= 16")?;
        let n = 1usize << d;
        let mask = n - 1;
        let mut g = Graph::cube(d)?;
        for u in 0..n {
            let v = u ^ mask;
            if u < v && g.w[(u, v)] == 0.0 {
                g.w[(u, v)] = 1.0;
                g.w[(v, u)] = 1.0;
            }
        }
        Ok(g.with_meta(format!("folded:{d}")))
    }

    /// Cocktail-party graph `K_{n x 2}`: the complete graph on `2n`
    /// vertices minus the perfect matching `i <-> i + n`.
    pub fn cocktail_party(n: usize) -> Result<Graph> {
        require(n >= 1, "cocktail-party graph needs n >= 1")?;
        let size = 2 * n;
        let mut edges = Vec::new();
        for u in 0..size {
            for v in (u + 1)..size {
                if v != u + n {
                    edges.push((u, v, 1.0));
                }
            }
        }
        Ok(Graph::from_edges(size, &edges)?.with_meta(format!("cocktail:{n}")))
    }

    /// Petersen graph: vertices are the 2-subsets of a 5-set, adjacent when
    /// disjoint. Used as a strongly-regular test case.
    pub fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .collect();
        let mut edges = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                if a != c && a != d && b != c && b != d {
                    edges.push((i, j, 1.0));
                }
            }
        }
        Graph::from_edges(10, &edges).unwrap().with_meta("petersen")
    }

    /// Dispatch by constructor name; the single entry point used by the
    /// expression parser.
    pub fn build_named(kind: &str, params: &[usize]) -> Result<Graph> {
        let one = |params: &[usize]| -> Result<usize> {
            if params.len() == 1 {
                Ok(params[0])
            } else {
                Err(Error::InvalidParameter(format!(
                    "constructor `{kind}` takes exactly one parameter"
                )))
            }
        };
        match kind {
            "path" => Graph::path(one(params)?),
            "cycle" => Graph::cycle(one(params)?),
            "complete" => Graph::complete(one(params)?),
            "empty" => Graph::empty(one(params)?),
            "cube" => Graph::cube(one(params)? as u32),
            "folded" => Graph::folded_cube(one(params)? as u32),
            "cocktail" => Graph::cocktail_party(one(params)?),
            "petersen" => {
                if params.is_empty() {
                    Ok(Graph::petersen())
                } else {
                    Err(Error::InvalidParameter("petersen takes no parameters".into()))
                }
            }
            _ => Err(Error::UnknownConstructor(kind.to_string())),
        }
    }

    // ---- composition ---------------------------------------------------

    /// Cartesian product; vertex `(x, y)` gets index `x * |V(Y)| + y` and
    /// `A = A(X) (x) I + I (x) A(Y)`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let a = self
            .w
            .kron(&Mat::identity(other.n))
            .add(&Mat::identity(self.n).kron(&other.w));
        Graph {
            n: self.n * other.n,
            w: a,
            meta: Some(format!("cartesian({},{})", self.meta_or_size(), other.meta_or_size())),
        }
    }

    /// Direct (tensor) product, `A = A(X) (x) A(Y)`.
    pub fn direct_product(&self, other: &Graph) -> Graph {
        Graph {
            n: self.n * other.n,
            w: self.w.kron(&other.w),
            meta: Some(format!("direct({},{})", self.meta_or_size(), other.meta_or_size())),
        }
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut w = Mat::zeros(n, n);
        for i in 0..self.n {
            for j in 0..self.n {
                w[(i, j)] = self.w[(i, j)];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                w[(self.n + i, self.n + j)] = other.w[(i, j)];
            }
        }
        for i in 0..self.n {
            for j in 0..other.n {
                w[(i, self.n + j)] = 1.0;
                w[(self.n + j, i)] = 1.0;
            }
        }
        Graph {
            n,
            w,
            meta: Some(format!("join({},{})", self.meta_or_size(), other.meta_or_size())),
        }
    }

    /// Disjoint union, parts keeping their internal vertex order.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut w = Mat::zeros(n, n);
        for i in 0..self.n {
            for j in 0..self.n {
                w[(i, j)] = self.w[(i, j)];
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                w[(self.n + i, self.n + j)] = other.w[(i, j)];
            }
        }
        Graph {
            n,
            w,
            meta: Some(format!("union({},{})", self.meta_or_size(), other.meta_or_size())),
        }
    }

    /// Simple complement: edges become non-edges and vice versa, loops
    /// dropped. Intended for 0/1 graphs; weighted input uses the support.
    pub fn complement(&self) -> Graph {
        let w = Mat::from_fn(self.n, self.n, |i, j| {
            if i == j {
                0.0
            } else if self.w[(i, j)] == 0.0 {
                1.0
            } else {
                0.0
            }
        });
        Graph { n: self.n, w, meta: Some(format!("complement({})", self.meta_or_size())) }
    }

    /// Complement within the complete bipartite graph given by a proper
    /// 2-coloring, computed by BFS. Edges inside a color class are
    /// rejected.
    pub fn bipartite_complement(&self) -> Result<Graph> {
        let colors = self.bipartition().ok_or(Error::NotBipartite)?;
        let w = Mat::from_fn(self.n, self.n, |i, j| {
            if colors[i] != colors[j] && self.w[(i, j)] == 0.0 {
                1.0
            } else {
                0.0
            }
        });
        Ok(Graph {
            n: self.n,
            w,
            meta: Some(format!("bipcomplement({})", self.meta_or_size())),
        })
    }

    // ---- structure -----------------------------------------------------

    /// Proper 2-coloring of the support when one exists. Isolated vertices
    /// go to the first class.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color = vec![None::<bool>; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// BFS distances on the unweighted support; `None` marks unreachable
    /// vertices.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Vertices of the connected component containing `u`, ascending.
    pub fn component_of(&self, u: usize) -> Vec<usize> {
        self.distances_from(u)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    fn meta_or_size(&self) -> String {
        self.meta.clone().unwrap_or_else(|| format!("graph:{}", self.n))
    }
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autom::are_isomorphic;

    #[test]
    fn path2_is_single_edge() {
        let g = Graph::path(2).unwrap();
        assert_eq!(g.weights().row(0), &[0.0, 1.0]);
        assert_eq!(g.weights().row(1), &[1.0, 0.0]);
    }

    #[test]
    fn cube2_is_a_4_cycle() {
        let q2 = Graph::cube(2).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert!(are_isomorphic(&q2, &c4).unwrap());
    }

    #[test]
    fn folded_cube_2_is_k4() {
        let g = Graph::folded_cube(2).unwrap();
        assert_eq!(g.weights(), Graph::complete(4).unwrap().weights());
    }

    #[test]
    fn folded_cube_1_degenerates_to_k2() {
        let g = Graph::folded_cube(1).unwrap();
        assert_eq!(g.weights(), Graph::complete(2).unwrap().weights());
    }

    #[test]
    fn cartesian_k2_k2_is_c4() {
        let k2 = Graph::complete(2).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert!(are_isomorphic(&k2.cartesian_product(&k2), &c4).unwrap());
    }

    #[test]
    fn cartesian_grid_edge_count() {
        let g = Graph::path(2).unwrap().cartesian_product(&Graph::path(3).unwrap());
        assert_eq!(g.edges().len(), 7);
    }

    #[test]
    fn cartesian_distances_add_per_factor() {
        let x = Graph::path(3).unwrap();
        let y = Graph::cycle(5).unwrap();
        let p = x.cartesian_product(&y);
        let ny = y.vertex_count();
        let dx = x.distances_from(1);
        let dy = y.distances_from(1);
        let dp = p.distances_from(ny + 1); // vertex (1, 1)
        for a in 0..x.vertex_count() {
            for b in 0..ny {
                assert_eq!(dp[a * ny + b], Some(dx[a].unwrap() + dy[b].unwrap()));
            }
        }
    }

    #[test]
    fn direct_k2_k2_is_two_disjoint_edges() {
        let k2 = Graph::complete(2).unwrap();
        let p = k2.direct_product(&k2);
        let mut edges = p.edges();
        edges.sort_unstable_by_key(|&(u, v, _)| (u, v));
        assert_eq!(edges.len(), 2);
        assert!(!p.is_connected());
    }

    #[test]
    fn direct_k2_c3_is_c6() {
        let g = Graph::complete(2).unwrap().direct_product(&Graph::cycle(3).unwrap());
        assert!(are_isomorphic(&g, &Graph::cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn direct_with_isolated_vertex_is_empty() {
        let g = Graph::cycle(4).unwrap().direct_product(&Graph::empty(1).unwrap());
        assert!(g.edges().is_empty());
    }

    #[test]
    fn join_of_empty_pairs_is_c4() {
        let e2 = Graph::empty(2).unwrap();
        assert!(are_isomorphic(&e2.join(&e2), &Graph::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn join_k2_k2_is_k4() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.join(&k2).weights(), Graph::complete(4).unwrap().weights());
    }

    #[test]
    fn wheel_from_hub_join_cycle() {
        let wheel = Graph::complete(1).unwrap().join(&Graph::cycle(5).unwrap());
        assert_eq!(wheel.degree(0), 5.0);
        assert!(wheel.neighbors(1).contains(&0));
        assert_eq!(wheel.edges().len(), 10);
    }

    #[test]
    fn complement_of_2k2_is_c4() {
        let two_k2 = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap());
        assert!(are_isomorphic(&two_k2.complement(), &Graph::cycle(4).unwrap()).unwrap());
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = Graph::empty(5).unwrap().complement();
        assert_eq!(g.weights(), Graph::complete(5).unwrap().weights());
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::petersen();
        assert_eq!(g.complement().complement().weights(), g.weights());
    }

    #[test]
    fn bipartite_complement_involution_and_error() {
        let g = Graph::path(4).unwrap();
        let bc = g.bipartite_complement().unwrap();
        assert_eq!(bc.bipartite_complement().unwrap().weights(), g.weights());
        assert_eq!(Graph::cycle(5).unwrap().bipartite_complement(), Err(Error::NotBipartite));
    }

    #[test]
    fn build_named_dispatch_and_errors() {
        assert!(Graph::build_named("cocktail", &[3]).is_ok());
        assert!(matches!(
            Graph::build_named("moebius", &[3]),
            Err(Error::UnknownConstructor(_))
        ));
        assert!(Graph::build_named("cycle", &[2]).is_err());
    }

    #[test]
    fn laplacian_row_sums_vanish() {
        let g = Graph::petersen();
        let l = g.hamiltonian(Hamiltonian::Laplacian);
        for i in 0..10 {
            assert!(l.row(i).iter().sum::<f64>().abs() < 1e-12);
        }
    }
}
