use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Simple undirected graph on the vertices `0..n`.
///
/// Immutable once built. Edges are stored as `(u, v)` with `u < v` in
/// lexicographic order and every neighbor list is sorted ascending, so all
/// iteration is canonical. Disconnected graphs can be built (the flag is
/// recorded) but every solver rejects them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    connected: bool,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let connected = bfs_order(&adj, 0).len() == n;
        Ok(Graph {
            n,
            edges: list,
            adj,
            connected,
        })
    }

    /// Builds a graph from edges that may repeat; duplicates are merged.
    /// Constructors that generate edges programmatically go through here.
    pub(crate) fn from_edge_soup(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut list: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.edges.len() + 1 == self.n
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices whose open neighborhood induces a complete graph.
    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| {
                let nb = &self.adj[v];
                nb.iter()
                    .enumerate()
                    .all(|(i, &a)| nb[i + 1..].iter().all(|&b| self.has_edge(a, b)))
            }),
        )
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Applies `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid(
                "permutation length differs from graph order",
            ));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        Graph::new(
            vertices.len(),
            self.edges
                .iter()
                .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
                .map(|&(u, v)| (index[u], index[v])),
        )
    }
}

fn bfs_order(adj: &[Vec<usize>], source: usize) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[source] = true;
    let mut order = vec![source];
    let mut i = 0;
    while i < order.len() {
        for &w in &adj[order[i]] {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

/// A vertex sequence. Paths handed out by the library are geodesics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.0.iter().copied())
    }

    /// Consecutive vertices adjacent and no vertex repeated.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut seen = VertexSet::empty(g.order());
        self.0.iter().all(|&v| seen.insert(v)) && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_small_graphs() {
        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!((p2.order(), p2.size()), (2, 1));
        assert!(p2.is_connected() && p2.is_complete() && p2.is_tree());

        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(c4.neighbors(0), &[1, 3]);

        let k4 = Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(k4.size(), 6);
        assert!(k4.is_complete());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(Error::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::Empty));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.require_connected(), Err(Error::Disconnected));
    }

    #[test]
    fn simplicial() {
        let k4 = Graph::new(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert_eq!(k4.simplicial_vertices().len(), 4);
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert!(c6.simplicial_vertices().is_empty());
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.simplicial_vertices().to_vec(), vec![0, 2]);
        let k1 = Graph::new(1, []).unwrap();
        assert_eq!(k1.simplicial_vertices().to_vec(), vec![0]);
    }

    #[test]
    fn path_validity() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(Path(vec![0, 1, 2]).is_path_in(&p3));
        assert!(!Path(vec![0, 2]).is_path_in(&p3));
        assert!(!Path(vec![0, 1, 0]).is_path_in(&p3));
        assert_eq!(Path(vec![0, 1, 2]).len(), 2);
    }
}
