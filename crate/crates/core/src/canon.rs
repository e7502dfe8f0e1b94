//! Canonical forms by exhaustive permutation search.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle adjacency bit string (graph6 column order) over all
//! relabelings of its vertices. The search assigns vertices to positions
//! one at a time; assigning position `j` fixes column `j` of the bit
//! string, so any branch whose prefix already exceeds the best string
//! found so far is cut.

use std::fmt;

use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 10;

/// Canonical graph6 string: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Wraps a graph already in canonical labeling.
    pub(crate) fn of_canonical(g: &Graph) -> Self {
        CanonicalForm(to_graph6(g))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

struct Search<'a> {
    n: usize,
    rows: &'a [u16],
    order: Vec<usize>,
    cols: Vec<u16>,
    best_cols: Vec<u16>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    /// `tight` means the current prefix equals the best prefix so far.
    /// Returns true if a strictly smaller string was recorded below; the
    /// current prefix is then a prefix of the new best, hence tight again.
    fn descend(&mut self, depth: usize, used: u16, mut tight: bool) -> bool {
        if depth == self.n {
            if !tight {
                self.best_cols.clone_from(&self.cols);
                self.best_order.clone_from(&self.order);
            }
            return !tight;
        }
        let mut improved = false;
        for v in 0..self.n {
            if used & (1 << v) != 0 {
                continue;
            }
            // Column `depth`: bit for each earlier position i, most significant first.
            let mut col = 0u16;
            for &u in &self.order[..depth] {
                col = (col << 1) | ((self.rows[u] >> v) & 1);
            }
            let next_tight = tight
                && match col.cmp(&self.best_cols[depth]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                };
            self.order.push(v);
            self.cols.push(col);
            if self.descend(depth + 1, used | (1 << v), next_tight) {
                improved = true;
                tight = true;
            }
            self.order.pop();
            self.cols.pop();
        }
        improved
    }
}

/// Minimal column sequence and a vertex order attaining it.
///
/// `order[p]` is the original vertex placed at position `p`.
fn minimal_columns(n: usize, rows: &[u16]) -> (Vec<u16>, Vec<usize>) {
    // the identity labeling seeds the bound
    let best_cols = (0..n)
        .map(|j| (0..j).fold(0u16, |col, i| (col << 1) | ((rows[i] >> j) & 1)))
        .collect();
    let mut search = Search {
        n,
        rows,
        order: Vec::with_capacity(n),
        cols: Vec::with_capacity(n),
        best_cols,
        best_order: (0..n).collect(),
    };
    search.descend(0, 0, true);
    (search.best_cols, search.best_order)
}

/// Canonical bit string packed into an integer (first bit most significant).
/// Only comparable between graphs with the same vertex count.
pub(crate) fn canonical_key(n: usize, rows: &[u16]) -> u64 {
    let (cols, _) = minimal_columns(n, rows);
    cols.iter()
        .enumerate()
        .fold(0u64, |acc, (j, &c)| (acc << j) | c as u64)
}

/// Rebuilds the canonical graph from a key produced by [`canonical_key`].
pub(crate) fn graph_from_key(n: usize, key: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (key >> (total - 1 - k)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("key encodes a simple graph")
}

/// The canonical relabeling of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    check_size(g.n())?;
    let (_, order) = minimal_columns(g.n(), &g.adjacency_rows());
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(CanonicalForm(to_graph6(&canonical_graph(g)?)))
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            max: MAX_CANONICAL_N,
        });
    }
    Ok(())
}
