//! Structural predicates: connectivity, bipartiteness, girth, odd girth,
//! biconnected blocks, and isometric cycles.

use std::collections::VecDeque;

use crate::distance::{bfs, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A shortest cycle (of some kind), or the marker for its absence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleInfo {
    Acyclic,
    /// Distinct vertices in cyclic order; consecutive entries (and the last
    /// and first) are adjacent.
    Cycle(Vec<usize>),
}

impl CycleInfo {
    pub fn length(&self) -> Option<usize> {
        match self {
            CycleInfo::Acyclic => None,
            CycleInfo::Cycle(c) => Some(c.len()),
        }
    }

    pub fn witness(&self) -> &[usize] {
        match self {
            CycleInfo::Acyclic => &[],
            CycleInfo::Cycle(c) => c,
        }
    }
}

/// Outcome of a 2-coloring attempt, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Color (0 or 1) per vertex; every edge joins different colors.
    Coloring(Vec<u8>),
    /// A simple odd cycle.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// Biconnected components; bridges appear as 2-vertex blocks and isolated
/// vertices as singleton blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    /// Blocks as sorted vertex lists, in lexicographic order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && bfs(g, 0).iter().all(|&d| d != DistanceMatrix::UNREACHABLE)
}

pub fn is_bipartite(g: &Graph) -> bool {
    bipartition(g).is_bipartite()
}

/// BFS 2-coloring of every component.
pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![NONE; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return Bipartition::OddCycle(tree_cycle(&parent, &depth, u, w));
                }
            }
        }
    }
    Bipartition::Coloring(color)
}

/// Simple cycle formed by the tree paths from `u` and `w` up to their lowest
/// common ancestor, closed by the non-tree edge `uw`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // both ends now hold the common ancestor
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Runs a BFS from every root and offers each non-tree edge `(u, w)` to
/// `accept`, which decides from the BFS depths whether the edge can close a
/// cycle worth extracting. The shortest extracted cycle wins.
fn shortest_cycle_by<F>(g: &Graph, accept: F) -> CycleInfo
where
    F: Fn(usize, usize) -> bool,
{
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut parent = vec![NONE; n];
    let mut depth = vec![NONE; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        parent.fill(NONE);
        depth.fill(NONE);
        depth[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = &best {
                if 2 * depth[u] + 1 > b.len() {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if depth[w] == NONE {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] && accept(depth[u], depth[w]) {
                    let bound = depth[u] + depth[w] + 1;
                    if best.as_ref().is_none_or(|b| bound < b.len()) {
                        let c = tree_cycle(&parent, &depth, u, w);
                        if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
    }
    best.map_or(CycleInfo::Acyclic, CycleInfo::Cycle)
}

/// Length and witness of a shortest cycle.
pub fn girth(g: &Graph) -> CycleInfo {
    shortest_cycle_by(g, |_, _| true)
}

/// Length and witness of a shortest odd cycle; `Acyclic` for bipartite graphs.
///
/// An edge joining two vertices of the same BFS layer closes an odd walk;
/// trimming the shared root path leaves a simple odd cycle.
pub fn odd_girth(g: &Graph) -> CycleInfo {
    shortest_cycle_by(g, |du, dw| du == dw)
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for &w in self.g.neighbors(u) {
            if self.disc[w] == NONE {
                self.stack.push((u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = self.stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Biconnected decomposition by DFS lowpoints.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut search = BlockSearch {
        g,
        disc: vec![NONE; n],
        low: vec![NONE; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if search.disc[v] == NONE {
            if g.degree(v) == 0 {
                search.disc[v] = search.time;
                search.time += 1;
                search.blocks.push(vec![v]);
            } else {
                search.visit(v, NONE);
            }
        }
    }
    let mut blocks = search.blocks;
    blocks.sort();
    BlockDecomposition { blocks }
}

/// Checks that `cycle` is a cycle of `g`.
pub fn validate_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return Err(Error::NotACycle);
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotACycle);
        }
    }
    if (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k])) {
        Ok(())
    } else {
        Err(Error::NotACycle)
    }
}

/// True iff distances along `cycle` agree with distances in `g` for every
/// pair of cycle vertices.
pub fn is_isometric_cycle(g: &Graph, dm: &DistanceMatrix, cycle: &[usize]) -> Result<bool> {
    validate_cycle(g, cycle)?;
    let k = cycle.len();
    for i in 0..k {
        for j in i + 1..k {
            let along = (j - i).min(k - (j - i));
            if dm.get(cycle[i], cycle[j]) != Some(along as u32) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
