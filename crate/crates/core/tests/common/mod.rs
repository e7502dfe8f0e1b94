//! Independent brute-force enumeration oracle shared by the test targets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use szeged::verifier::{Bipartiteness, UniverseFilter};
use szeged::{canonical_form, Graph};

fn slots(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn slot_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    for (k, &(i, j)) in slots(n).iter().enumerate() {
        idx[i][j] = k;
        idx[j][i] = k;
    }
    idx
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(n: usize, adj: &[Vec<bool>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn bipartite(n: usize, adj: &[Vec<bool>]) -> bool {
    (0u32..1 << n).any(|c| {
        (0..n).all(|u| (0..n).all(|v| !adj[u][v] || (c >> u) & 1 != (c >> v) & 1))
    })
}

/// No cycle of length 3 or 4.
fn girth_at_least_5(n: usize, adj: &[Vec<bool>]) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let distinct3 = a != b && b != c && a != c;
                if distinct3 && adj[a][b] && adj[b][c] && adj[c][a] {
                    return false;
                }
                for d in 0..n {
                    if distinct3
                        && d != a
                        && d != b
                        && d != c
                        && adj[a][b]
                        && adj[b][c]
                        && adj[c][d]
                        && adj[d][a]
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// One graph per isomorphism class matching the filter, as canonical forms.
/// Scans every edge subset; each new class marks its whole orbit as seen.
pub fn oracle(filter: &UniverseFilter) -> BTreeSet<String> {
    let n = filter.n;
    let pairs = slots(n);
    let idx = slot_index(n);
    let perms = permutations(n);
    let total = 1usize << pairs.len();
    let mut seen = vec![false; total];
    let mut classes = BTreeSet::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        for p in &perms {
            let image = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask & (1 << k) != 0)
                .fold(0usize, |acc, (_, &(i, j))| acc | (1 << idx[p[i]][p[j]]));
            seen[image] = true;
        }
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << k) != 0 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        let m = mask.count_ones() as usize;
        let ok = connected(n, &adj)
            && match filter.bipartite {
                Bipartiteness::Yes => bipartite(n, &adj),
                Bipartiteness::No => !bipartite(n, &adj),
                Bipartiteness::Any => true,
            }
            && filter.min_girth.is_none_or(|_| girth_at_least_5(n, &adj))
            && filter.min_edges.is_none_or(|k| m >= k);
        if ok {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask & (1 << k) != 0)
                .map(|(_, &e)| e);
            let g = Graph::new(n, edges).unwrap();
            classes.insert(canonical_form(&g).unwrap().into_string());
        }
    }
    classes
}
