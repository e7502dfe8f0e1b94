//! Extremal families for the three lower bounds, their closed-form bound
//! values, and structural equality predicates.
//!
//! | bound | hypothesis                              | equality family                  |
//! |-------|-----------------------------------------|----------------------------------|
//! | thm1  | nonbipartite, girth ≥ 5, n ≥ 5          | C5 + one tree, or two trees at adjacent cycle vertices |
//! | thm2  | bipartite, m ≥ n, n ≥ 4                 | C4 + one tree                    |
//! | thm3  | nonbipartite, n ≥ 4                     | C3 + one tree                    |
//!
//! The predicates here look only at structure (unicyclic, cycle length,
//! where trees hang). They never evaluate an index.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::IndexReport;
use crate::structure::{bipartition, girth, is_connected};

/// A rooted tree in parent-array form: vertex `k + 1` hangs from
/// `parents[k]`, which must be `<= k`. Vertex 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSpec {
    parents: Vec<usize>,
}

impl TreeSpec {
    pub fn new(parents: Vec<usize>) -> Result<Self> {
        if let Some((k, &p)) = parents.iter().enumerate().find(|&(k, &p)| p > k) {
            return Err(Error::InvalidTreeSpec(format!(
                "vertex {} has parent {p}, which is not an earlier vertex",
                k + 1
            )));
        }
        Ok(TreeSpec { parents })
    }

    /// The bare root.
    pub fn trivial() -> Self {
        TreeSpec { parents: vec![] }
    }

    /// A path of `size` vertices rooted at one end.
    pub fn path(size: usize) -> Result<Self> {
        check_size(size)?;
        Ok(TreeSpec {
            parents: (0..size - 1).collect(),
        })
    }

    /// A star of `size` vertices rooted at its center.
    pub fn star(size: usize) -> Result<Self> {
        check_size(size)?;
        Ok(TreeSpec {
            parents: vec![0; size - 1],
        })
    }

    /// Random recursive tree: each parent drawn uniformly from earlier vertices.
    pub fn random<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Result<Self> {
        check_size(size)?;
        Ok(TreeSpec {
            parents: (0..size - 1).map(|k| rng.gen_range(0..=k)).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.parents.len() + 1
    }

    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// Tree edges with non-root vertices renamed: tree vertex `k >= 1`
    /// becomes `offset + k - 1`, and the root becomes `root`.
    fn edges_at(&self, root: usize, offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let name = move |k: usize| if k == 0 { root } else { offset + k - 1 };
        self.parents
            .iter()
            .enumerate()
            .map(move |(k, &p)| (name(p), name(k + 1)))
    }
}

fn check_size(size: usize) -> Result<()> {
    if size == 0 {
        Err(Error::InvalidTreeSpec("a tree needs at least one vertex".into()))
    } else {
        Ok(())
    }
}

/// Cycle `0..len` with `tree`'s root identified with cycle vertex 0.
pub fn cycle_with_tree(len: usize, tree: &TreeSpec) -> Result<Graph> {
    if len < 3 {
        return Err(Error::InvalidCycleLength(len));
    }
    let n = len + tree.size() - 1;
    let cycle = (0..len).map(|i| (i, (i + 1) % len));
    Graph::new(n, cycle.chain(tree.edges_at(0, len)))
}

/// C5 with `t1` rooted at vertex 0 and `t2` rooted at the adjacent vertex 1.
pub fn c5_two_trees(t1: &TreeSpec, t2: &TreeSpec) -> Result<Graph> {
    let n = 5 + t1.size() + t2.size() - 2;
    let cycle = (0..5).map(|i| (i, (i + 1) % 5));
    let second = 5 + t1.size() - 1;
    Graph::new(
        n,
        cycle
            .chain(t1.edges_at(0, 5))
            .chain(t2.edges_at(1, second)),
    )
}

/// An exact bound `numerator / denominator` with denominator 1 or 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub numerator: i64,
    pub denominator: i64,
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `Sz − W ≥ 2n − 5` for nonbipartite graphs of girth at least 5.
    Thm1,
    /// `Sz − W ≥ 4n − 8` for bipartite graphs with `m ≥ n`.
    Thm2,
    /// `Sz* − W ≥ (n² + 4n − 6)/4` for nonbipartite graphs.
    Thm3,
}

impl Theorem {
    pub const ALL: [Theorem; 3] = [Theorem::Thm1, Theorem::Thm2, Theorem::Thm3];

    pub fn min_n(self) -> usize {
        match self {
            Theorem::Thm1 => 5,
            Theorem::Thm2 | Theorem::Thm3 => 4,
        }
    }

    pub fn bound(self, n: usize) -> Result<BoundValue> {
        match self {
            Theorem::Thm1 => bound_thm1(n),
            Theorem::Thm2 => bound_thm2(n),
            Theorem::Thm3 => bound_thm3(n),
        }
    }

    /// The gap this bound constrains, in units of `1 / bound.denominator`.
    pub fn scaled_gap(self, report: &IndexReport) -> i64 {
        match self {
            Theorem::Thm1 | Theorem::Thm2 => report.gap_sz,
            Theorem::Thm3 => report.gap_rsz_x4,
        }
    }

    /// Checks the hypothesis of the bound (not including the range of `n`,
    /// which [`Theorem::bound`] checks).
    pub fn check_hypothesis(self, g: &Graph) -> Result<()> {
        let violated = |what: &str| Err(Error::HypothesisViolated(format!("{self}: {what}")));
        if g.n() < self.min_n() {
            return violated(&format!("needs n >= {}, got {}", self.min_n(), g.n()));
        }
        if !is_connected(g) {
            return violated("graph is disconnected");
        }
        let bipartite = bipartition(g).is_bipartite();
        match self {
            Theorem::Thm1 => {
                if bipartite {
                    return violated("graph is bipartite");
                }
                if girth(g).length().is_some_and(|len| len < 5) {
                    return violated("girth is below 5");
                }
            }
            Theorem::Thm2 => {
                if !bipartite {
                    return violated("graph is not bipartite");
                }
                if g.m() < g.n() {
                    return violated("fewer edges than vertices");
                }
            }
            Theorem::Thm3 => {
                if bipartite {
                    return violated("graph is bipartite");
                }
            }
        }
        Ok(())
    }

    pub fn is_equality(self, g: &Graph) -> Result<bool> {
        match self {
            Theorem::Thm1 => is_equality_thm1(g),
            Theorem::Thm2 => is_equality_thm2(g),
            Theorem::Thm3 => is_equality_thm3(g),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Thm1 => "thm1",
            Theorem::Thm2 => "thm2",
            Theorem::Thm3 => "thm3",
        })
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "thm1" | "1" => Ok(Theorem::Thm1),
            "thm2" | "2" => Ok(Theorem::Thm2),
            "thm3" | "3" => Ok(Theorem::Thm3),
            _ => Err(format!("unknown theorem {s:?} (expected thm1, thm2 or thm3)")),
        }
    }
}

fn require_n(theorem: Theorem, n: usize) -> Result<()> {
    if n < theorem.min_n() {
        Err(Error::HypothesisViolated(format!(
            "{theorem}: needs n >= {}, got {n}",
            theorem.min_n()
        )))
    } else {
        Ok(())
    }
}

/// `2n − 5`, for `n >= 5`.
pub fn bound_thm1(n: usize) -> Result<BoundValue> {
    require_n(Theorem::Thm1, n)?;
    Ok(BoundValue {
        numerator: 2 * n as i64 - 5,
        denominator: 1,
    })
}

/// `4n − 8`, for `n >= 4`.
pub fn bound_thm2(n: usize) -> Result<BoundValue> {
    require_n(Theorem::Thm2, n)?;
    Ok(BoundValue {
        numerator: 4 * n as i64 - 8,
        denominator: 1,
    })
}

/// `(n² + 4n − 6) / 4`, for `n >= 4`.
pub fn bound_thm3(n: usize) -> Result<BoundValue> {
    require_n(Theorem::Thm3, n)?;
    let n = n as i64;
    Ok(BoundValue {
        numerator: n * n + 4 * n - 6,
        denominator: 4,
    })
}

/// For a connected unicyclic graph: the cycle vertices (the 2-core) and
/// which of them carry a nontrivial tree. `None` unless `m == n`.
fn unicyclic_shape(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if g.m() != g.n() || !is_connected(g) {
        return None;
    }
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.n()];
    let mut leaves: Vec<usize> = (0..g.n()).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    leaves.push(w);
                }
            }
        }
    }
    let cycle: Vec<usize> = (0..g.n()).filter(|&v| !removed[v]).collect();
    let rooted = cycle
        .iter()
        .copied()
        .filter(|&v| g.degree(v) > 2)
        .collect();
    Some((cycle, rooted))
}

/// Unicyclic with a C5 and trees hanging from at most two cycle vertices,
/// which must be adjacent when there are two.
pub fn is_equality_thm1(g: &Graph) -> Result<bool> {
    Theorem::Thm1.check_hypothesis(g)?;
    Ok(match unicyclic_shape(g) {
        Some((cycle, rooted)) if cycle.len() == 5 => match rooted.as_slice() {
            [] | [_] => true,
            &[a, b] => g.has_edge(a, b),
            _ => false,
        },
        _ => false,
    })
}

/// Unicyclic with a C4 and trees hanging from at most one cycle vertex.
pub fn is_equality_thm2(g: &Graph) -> Result<bool> {
    Theorem::Thm2.check_hypothesis(g)?;
    Ok(single_tree_on_cycle(g, 4))
}

/// Unicyclic with a C3 and trees hanging from at most one cycle vertex.
pub fn is_equality_thm3(g: &Graph) -> Result<bool> {
    Theorem::Thm3.check_hypothesis(g)?;
    Ok(single_tree_on_cycle(g, 3))
}

fn single_tree_on_cycle(g: &Graph, len: usize) -> bool {
    matches!(unicyclic_shape(g), Some((cycle, rooted)) if cycle.len() == len && rooted.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::IndexReport;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn pendant() -> TreeSpec {
        TreeSpec::path(2).unwrap()
    }

    #[test]
    fn tree_spec_validation() {
        assert!(TreeSpec::new(vec![0, 0, 1, 3]).is_ok());
        assert!(matches!(
            TreeSpec::new(vec![0, 2]),
            Err(Error::InvalidTreeSpec(_))
        ));
        assert!(TreeSpec::path(0).is_err());
        assert_eq!(TreeSpec::trivial().size(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = TreeSpec::random(12, &mut rng).unwrap();
        assert_eq!(t.size(), 12);
        assert!(TreeSpec::new(t.parents().to_vec()).is_ok());
    }

    #[test]
    fn cycle_with_trivial_tree_is_cycle() {
        assert_eq!(
            cycle_with_tree(5, &TreeSpec::trivial()).unwrap(),
            Graph::cycle(5).unwrap()
        );
        assert_eq!(
            cycle_with_tree(2, &TreeSpec::trivial()),
            Err(Error::InvalidCycleLength(2))
        );
    }

    #[test]
    fn c4_with_path() {
        let h = cycle_with_tree(4, &TreeSpec::path(3).unwrap()).unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(IndexReport::compute(&h).unwrap().gap_sz, 16);
    }

    #[test]
    fn c3_with_star() {
        let h = cycle_with_tree(3, &TreeSpec::star(3).unwrap()).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(IndexReport::compute(&h).unwrap().gap_rsz_x4, 39);
    }

    #[test]
    fn two_tree_family() {
        assert_eq!(
            c5_two_trees(&TreeSpec::trivial(), &TreeSpec::trivial()).unwrap(),
            Graph::cycle(5).unwrap()
        );
        let h = c5_two_trees(&pendant(), &pendant()).unwrap();
        assert_eq!(h.n(), 7);
        assert!(h.has_edge(0, 5) && h.has_edge(1, 6));
        assert_eq!(IndexReport::compute(&h).unwrap().gap_sz, 9);

        let h = c5_two_trees(&TreeSpec::path(4).unwrap(), &pendant()).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(IndexReport::compute(&h).unwrap().gap_sz, 13);
    }

    #[test]
    fn bounds() {
        assert_eq!(bound_thm1(5).unwrap().numerator, 5);
        assert_eq!(bound_thm2(4).unwrap().numerator, 8);
        let b = bound_thm3(4).unwrap();
        assert_eq!((b.numerator, b.denominator), (26, 4));
        assert_eq!(b.to_string(), "26/4");
        assert!(matches!(bound_thm1(4), Err(Error::HypothesisViolated(_))));
        assert!(matches!(bound_thm2(3), Err(Error::HypothesisViolated(_))));
        assert!(matches!(bound_thm3(3), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn thm1_predicate() {
        let path_at_one = cycle_with_tree(5, &TreeSpec::path(3).unwrap()).unwrap();
        assert_eq!(is_equality_thm1(&path_at_one), Ok(true));
        let adjacent = c5_two_trees(&pendant(), &pendant()).unwrap();
        assert_eq!(is_equality_thm1(&adjacent), Ok(true));
        let apart = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)]);
        assert_eq!(is_equality_thm1(&apart), Ok(false));
        // C7 is in the hypothesis class but not the family
        assert_eq!(is_equality_thm1(&Graph::cycle(7).unwrap()), Ok(false));
        assert!(matches!(
            is_equality_thm1(&Graph::cycle(6).unwrap()),
            Err(Error::HypothesisViolated(_))
        ));
        let paw = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]);
        assert!(is_equality_thm1(&paw).is_err());
    }

    #[test]
    fn thm2_predicate() {
        assert_eq!(is_equality_thm2(&Graph::cycle(4).unwrap()), Ok(true));
        let c4p = cycle_with_tree(4, &pendant()).unwrap();
        assert_eq!(is_equality_thm2(&c4p), Ok(true));
        let two = g(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]);
        assert_eq!(is_equality_thm2(&two), Ok(false));
        assert_eq!(is_equality_thm2(&Graph::cycle(6).unwrap()), Ok(false));
        assert!(is_equality_thm2(&Graph::path(5)).is_err());
        assert!(is_equality_thm2(&Graph::cycle(5).unwrap()).is_err());
    }

    #[test]
    fn thm3_predicate() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert_eq!(is_equality_thm3(&paw), Ok(true));
        let bull = g(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]);
        assert_eq!(is_equality_thm3(&bull), Ok(false));
        assert_eq!(is_equality_thm3(&Graph::complete(4)), Ok(false));
        assert!(is_equality_thm3(&Graph::cycle(3).unwrap()).is_err());
        assert!(is_equality_thm3(&Graph::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.to_string().parse::<Theorem>(), Ok(t));
        }
        assert!("thm4".parse::<Theorem>().is_err());
    }
}
