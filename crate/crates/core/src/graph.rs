//! Simple undirected graphs: the 1-dimensional case of a pure complex, and
//! the carrier for links and random-graph experiments.

use crate::complex::{Complex, Face};
use crate::error::ComplexError;
use crate::matrix::SymMatrix;

/// A simple graph on vertices `0..n` with a sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Result<Self, ComplexError> {
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(ComplexError::RepeatedVertex { vertex: e.0 });
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
            if e.1 >= n {
                return Err(ComplexError::VertexOutOfRange { vertex: e.1, n });
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph { n, edges })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|u| (u, u + 1)).collect();
        edges.push((0, n - 1));
        Graph::new(n, edges).expect("cycle edges valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&e).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// The common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&d0) if d.iter().all(|&x| x == d0) => Some(d0),
            _ => None,
        }
    }

    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Graph { n: self.n, edges }
    }

    /// The usual 0/1 adjacency matrix.
    pub fn adjacency(&self) -> SymMatrix {
        let mut a = SymMatrix::zeros(self.n);
        for &(u, v) in &self.edges {
            a.set_sym(u, v, 1.0);
        }
        a
    }

    /// The graph viewed as a pure 1-dimensional complex on the same vertices.
    pub fn as_complex(&self) -> Complex {
        let faces = self
            .edges
            .iter()
            .map(|&(u, v)| Face::from_sorted(vec![u, v]));
        Complex::from_k_faces(self.n, 1, faces).expect("edges are valid 1-faces")
    }
}
