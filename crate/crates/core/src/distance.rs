//! All-pairs hop distances by repeated breadth-first search.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Hop-distance table for an unweighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Raw marker stored for pairs with no connecting path.
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or `None` if they lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.d[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    /// Row of raw distances from `u`; unreachable entries hold [`Self::UNREACHABLE`].
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// True iff every pair is reachable (and `n >= 1`).
    pub fn is_connected(&self) -> bool {
        self.n > 0 && !self.d.contains(&Self::UNREACHABLE)
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&d| d != Self::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}

/// Distances from `source` to every vertex.
pub fn bfs(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![DistanceMatrix::UNREACHABLE; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == DistanceMatrix::UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs shortest path lengths via one BFS per vertex.
pub fn apsp(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs(g, s));
    }
    DistanceMatrix { n, d }
}
