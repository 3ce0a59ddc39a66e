//! Simple undirected graphs with cached degree statistics.
//!
//! A [`Graph`] is immutable once built. Adjacency lives in a dense bit matrix,
//! and the degree sequence, extremal degrees and first Zagreb index are
//! computed once at construction.

mod family;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

pub use family::{FamilyParseError, GraphFamily};
pub use graph6::{parse_graph6, read_graph6_lines, write_graph6, Graph6Error, MAX_GRAPH6_ORDER};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge mask {mask:#x} has bits beyond the {pairs} vertex pairs of order {n}")]
    MaskOutOfRange { mask: u64, n: usize, pairs: usize },
}

const WORD: usize = 64;

/// Dense symmetric bit matrix with an empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
struct BitMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let stride = n.div_ceil(WORD);
        Self { n, stride, words: vec![0; n * stride] }
    }

    #[inline]
    fn get(&self, u: usize, v: usize) -> bool {
        self.words[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Sets both (u, v) and (v, u). Returns false if the pair was already set.
    fn set_pair(&mut self, u: usize, v: usize) -> bool {
        if self.get(u, v) {
            return false;
        }
        self.words[u * self.stride + v / WORD] |= 1 << (v % WORD);
        self.words[v * self.stride + u / WORD] |= 1 << (u % WORD);
        true
    }

    fn row_ones(&self, u: usize) -> usize {
        let row = &self.words[u * self.stride..(u + 1) * self.stride];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: BitMatrix,
    m: usize,
    degrees: Vec<usize>,
    min_degree: usize,
    max_degree: usize,
    zagreb: u64,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = BitMatrix::new(n);
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency.set_pair(u, v);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    /// Builds the graph whose edge set is the set bits of `mask`, where bit
    /// `k` is the `k`-th vertex pair in graph6 order
    /// `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let pairs = n * (n - 1) / 2;
        if pairs < 64 && mask >> pairs != 0 {
            return Err(GraphError::MaskOutOfRange { mask, n, pairs });
        }
        let mut adjacency = BitMatrix::new(n);
        for (k, (i, j)) in upper_pairs(n).take(64).enumerate() {
            if mask >> k & 1 == 1 {
                adjacency.set_pair(i, j);
            }
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: BitMatrix) -> Self {
        let n = adjacency.n;
        let degrees: Vec<usize> = (0..n).map(|u| adjacency.row_ones(u)).collect();
        let twice_m: usize = degrees.iter().sum();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let zagreb = degrees.iter().map(|&d| (d as u64) * (d as u64)).sum();
        Self { adjacency, m: twice_m / 2, degrees, min_degree, max_degree, zagreb }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// First Zagreb index, the sum of squared degrees.
    pub fn zagreb(&self) -> u64 {
        self.zagreb
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree == self.max_degree
    }

    /// True when every vertex has degree `n - 1`.
    pub fn is_complete(&self) -> bool {
        self.min_degree + 1 == self.order()
    }

    /// True when the edges form a perfect matching (every degree is 1).
    pub fn is_perfect_matching(&self) -> bool {
        self.min_degree == 1 && self.max_degree == 1
    }

    /// True for `K_{n/2, n/2}` under any labeling.
    pub fn is_balanced_complete_bipartite(&self) -> bool {
        let n = self.order();
        if n < 2 || n % 2 == 1 || self.min_degree != n / 2 || self.max_degree != n / 2 {
            return false;
        }
        // an n/2-regular graph is K_{n/2,n/2} iff the non-neighbours of 0 are independent
        let side: Vec<usize> = (0..n).filter(|&v| !self.has_edge(0, v)).collect();
        side.iter().all(|&u| side.iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u, v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).filter(move |&u| self.adjacency.get(v, u))
    }

    /// Edges `(i, j)` with `i < j`, in graph6 pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        upper_pairs(self.order()).filter(|&(i, j)| self.adjacency.get(i, j))
    }

    /// Breadth-first search from vertex 0.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == n
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self.edges().chain(other.edges().map(|(i, j)| (i + shift, j + shift)));
        Graph::new(shift + other.order(), edges).expect("shifted edges stay in range")
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        if let Some(&vertex) = perm.iter().find(|&&p| p >= n) {
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
        Graph::new(n, self.edges().map(|(i, j)| (perm[i], perm[j])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex pairs `(i, j)` with `i < j`, ordered by `j` then `i`.
pub fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_statistics() {
        let g = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!((g.min_degree(), g.max_degree()), (2, 2));
        assert_eq!(g.zagreb(), 12);
        assert!(g.is_complete());
    }

    #[test]
    fn single_edge() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.degrees(), &[1, 1]);
        assert_eq!(g.zagreb(), 2);
    }

    #[test]
    fn two_disjoint_edges() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.degrees(), &[1, 1, 1, 1]);
        assert_eq!(g.zagreb(), 4);
        assert!(g.is_perfect_matching());
        assert!(!g.is_connected());
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::Empty));
    }

    #[test]
    fn connectivity() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
        assert!(!Graph::new(2, []).unwrap().is_connected());
    }

    #[test]
    fn union_with_isolated_vertex() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let k1 = Graph::new(1, []).unwrap();
        let g = k2.disjoint_union(&k1);
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 1);
        assert_eq!(g.min_degree(), 0);
        assert_eq!(g.degrees(), &[1, 1, 0]);
    }

    #[test]
    fn edge_mask_follows_graph6_pair_order() {
        // bit 2 is the pair (1, 2)
        let g = Graph::from_edge_mask(3, 0b100).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert!(Graph::from_edge_mask(3, 0b1000).is_err());
    }

    #[test]
    fn balanced_bipartite_detection() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(c4.is_balanced_complete_bipartite());
        let k33 = Graph::new(6, [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert!(k33.relabel(&[4, 0, 2, 1, 5, 3]).unwrap().is_balanced_complete_bipartite());
        // 3-regular on 6 vertices with a triangle
        let prism = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!prism.is_balanced_complete_bipartite());
        assert!(Graph::new(2, [(0, 1)]).unwrap().is_balanced_complete_bipartite());
        assert!(!Graph::new(4, [(0, 1), (2, 3)]).unwrap().is_balanced_complete_bipartite());
    }
}
