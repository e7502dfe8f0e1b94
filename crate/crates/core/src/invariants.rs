//! Distance-based indices: Wiener, Szeged and revised Szeged.
//!
//! The revised Szeged index has denominator 4, so it is carried as the
//! integer `4·Sz*` throughout. Every index requires a connected graph.
//!
//! [`szeged_via_mu`] sums the pair-straddling indicator over all edges and
//! pairs. It does not go through [`edge_partition`] and serves as an
//! independent check on [`szeged`].

use serde::Serialize;

use crate::distance::{apsp, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{bipartition, girth, odd_girth, BlockDecomposition};

/// Vertex counts on each side of an edge `(u, v)`: strictly closer to `u`,
/// strictly closer to `v`, and equidistant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub edge: (usize, usize),
    pub n_u: u64,
    pub n_v: u64,
    pub n_0: u64,
}

impl EdgePartition {
    pub fn szeged_term(&self) -> u64 {
        self.n_u * self.n_v
    }

    /// `4·(n_u + n_0/2)·(n_v + n_0/2)`.
    pub fn revised_term_x4(&self) -> u64 {
        (2 * self.n_u + self.n_0) * (2 * self.n_v + self.n_0)
    }
}

/// Edges `e` with `μ_{x,y}(e) = 1` and the excess `π(x, y)` of their count
/// over `d(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairContribution {
    pub pair: (usize, usize),
    pub distance: u32,
    pub mu_edges: Vec<(usize, usize)>,
    pub pi: i64,
}

/// Index values for one connected graph. Gaps are `Sz − W` and `4·Sz* − 4·W`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged_x4: u64,
    pub gap_sz: i64,
    pub gap_rsz_x4: i64,
    pub bipartite: bool,
    pub girth: Option<usize>,
    pub odd_girth: Option<usize>,
}

impl IndexReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let dm = apsp(g);
        Self::with_distances(g, &dm)
    }

    pub fn with_distances(g: &Graph, dm: &DistanceMatrix) -> Result<Self> {
        let wiener = wiener(g, dm)?;
        let (szeged, revised_szeged_x4) = partitions(g, dm)?
            .iter()
            .fold((0, 0), |(s, r), p| (s + p.szeged_term(), r + p.revised_term_x4()));
        Ok(IndexReport {
            n: g.n(),
            m: g.m(),
            wiener,
            szeged,
            revised_szeged_x4,
            gap_sz: szeged as i64 - wiener as i64,
            gap_rsz_x4: revised_szeged_x4 as i64 - 4 * wiener as i64,
            bipartite: bipartition(g).is_bipartite(),
            girth: girth(g).length(),
            odd_girth: odd_girth(g).length(),
        })
    }
}

fn require_connected(dm: &DistanceMatrix) -> Result<()> {
    if dm.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

fn require_edge(g: &Graph, (u, v): (usize, usize)) -> Result<()> {
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::NotAnEdge(u, v))
    }
}

fn require_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.n() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n: g.n() })
    }
}

fn partition_unchecked(dm: &DistanceMatrix, (u, v): (usize, usize)) -> EdgePartition {
    let (du, dv) = (dm.row(u), dm.row(v));
    let (mut n_u, mut n_v, mut n_0) = (0, 0, 0);
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => n_0 += 1,
        }
    }
    EdgePartition {
        edge: (u, v),
        n_u,
        n_v,
        n_0,
    }
}

/// Partition of the vertex set with respect to the edge `e = (u, v)`.
pub fn edge_partition(g: &Graph, dm: &DistanceMatrix, e: (usize, usize)) -> Result<EdgePartition> {
    require_connected(dm)?;
    require_edge(g, e)?;
    Ok(partition_unchecked(dm, e))
}

/// Partitions for every edge, in edge order.
pub fn partitions(g: &Graph, dm: &DistanceMatrix) -> Result<Vec<EdgePartition>> {
    require_connected(dm)?;
    Ok(g.edges().iter().map(|&e| partition_unchecked(dm, e)).collect())
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(g: &Graph, dm: &DistanceMatrix) -> Result<u64> {
    require_connected(dm)?;
    let n = g.n();
    Ok((0..n)
        .map(|u| dm.row(u)[u + 1..].iter().map(|&d| d as u64).sum::<u64>())
        .sum())
}

/// Σ over edges of `n_u · n_v`.
pub fn szeged(g: &Graph, dm: &DistanceMatrix) -> Result<u64> {
    Ok(partitions(g, dm)?.iter().map(EdgePartition::szeged_term).sum())
}

/// `4·Sz*`: Σ over edges of `(2·n_u + n_0)(2·n_v + n_0)`.
pub fn revised_szeged_x4(g: &Graph, dm: &DistanceMatrix) -> Result<u64> {
    Ok(partitions(g, dm)?
        .iter()
        .map(EdgePartition::revised_term_x4)
        .sum())
}

/// Σ over edges of `n_0(e)`.
pub fn n0_sum(g: &Graph, dm: &DistanceMatrix) -> Result<u64> {
    Ok(partitions(g, dm)?.iter().map(|p| p.n_0).sum())
}

fn straddles(dm: &DistanceMatrix, x: usize, y: usize, (u, v): (usize, usize)) -> bool {
    let (xu, xv) = (dm.row(x)[u], dm.row(x)[v]);
    let (yu, yv) = (dm.row(y)[u], dm.row(y)[v]);
    (xu < xv && yv < yu) || (xv < xu && yu < yv)
}

/// `μ_{x,y}(e)`: whether `x` and `y` are strictly closer to opposite ends of `e`.
pub fn mu(g: &Graph, dm: &DistanceMatrix, x: usize, y: usize, e: (usize, usize)) -> Result<bool> {
    require_vertex(g, x)?;
    require_vertex(g, y)?;
    if x == y {
        return Err(Error::SamePair(x));
    }
    require_edge(g, e)?;
    require_connected(dm)?;
    Ok(straddles(dm, x, y, e))
}

/// Szeged index as Σ_e Σ_{x<y} μ_{x,y}(e), evaluated naively in O(m·n²).
pub fn szeged_via_mu(g: &Graph, dm: &DistanceMatrix) -> Result<u64> {
    require_connected(dm)?;
    let n = g.n();
    let mut total = 0;
    for &e in g.edges() {
        for x in 0..n {
            for y in x + 1..n {
                total += straddles(dm, x, y, e) as u64;
            }
        }
    }
    Ok(total)
}

/// `π(x, y) = Σ_e μ_{x,y}(e) − d(x, y)`.
pub fn pi(g: &Graph, dm: &DistanceMatrix, x: usize, y: usize) -> Result<PairContribution> {
    require_vertex(g, x)?;
    require_vertex(g, y)?;
    if x == y {
        return Err(Error::SamePair(x));
    }
    require_connected(dm)?;
    let mu_edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| straddles(dm, x, y, e))
        .collect();
    let distance = dm.get(x, y).ok_or(Error::Disconnected)?;
    Ok(PairContribution {
        pair: (x, y),
        distance,
        pi: mu_edges.len() as i64 - distance as i64,
        mu_edges,
    })
}

/// π for every unordered pair `x < y`.
pub fn pi_table(g: &Graph, dm: &DistanceMatrix) -> Result<Vec<PairContribution>> {
    let n = g.n();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            out.push(pi(g, dm, x, y)?);
        }
    }
    Ok(out)
}

/// True iff every block induces a complete subgraph.
pub fn blocks_all_complete(g: &Graph, bd: &BlockDecomposition) -> bool {
    bd.blocks().iter().all(|block| {
        block
            .iter()
            .enumerate()
            .all(|(i, &a)| block[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::blocks;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn paw() -> Graph {
        // triangle a=0, b=1, c=2 with pendant d=3 at a
        g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)])
    }

    fn star3() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    fn c4_pendant() -> Graph {
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    }

    #[test]
    fn edge_partitions() {
        let c5 = Graph::cycle(5).unwrap();
        let dm = apsp(&c5);
        for &e in c5.edges() {
            let p = edge_partition(&c5, &dm, e).unwrap();
            assert_eq!((p.n_u, p.n_v, p.n_0), (2, 2, 1));
        }
        let paw = paw();
        let p = edge_partition(&paw, &apsp(&paw), (1, 2)).unwrap();
        assert_eq!((p.n_u, p.n_v, p.n_0), (1, 1, 2));
        let s = star3();
        let p = edge_partition(&s, &apsp(&s), (0, 2)).unwrap();
        assert_eq!((p.n_u, p.n_v, p.n_0), (3, 1, 0));
        // orientation follows the argument
        let p = edge_partition(&s, &apsp(&s), (2, 0)).unwrap();
        assert_eq!((p.n_u, p.n_v), (1, 3));
    }

    #[test]
    fn edge_partition_errors() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            edge_partition(&c5, &apsp(&c5), (0, 2)),
            Err(Error::NotAnEdge(0, 2))
        );
        let split = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            edge_partition(&split, &apsp(&split), (0, 1)),
            Err(Error::Disconnected)
        );
        assert_eq!(wiener(&split, &apsp(&split)), Err(Error::Disconnected));
        assert_eq!(szeged(&split, &apsp(&split)), Err(Error::Disconnected));
        assert_eq!(
            revised_szeged_x4(&split, &apsp(&split)),
            Err(Error::Disconnected)
        );
        assert_eq!(szeged_via_mu(&split, &apsp(&split)), Err(Error::Disconnected));
        assert_eq!(pi(&split, &apsp(&split), 0, 2), Err(Error::Disconnected));
    }

    #[test]
    fn wiener_values() {
        let k4 = Graph::complete(4);
        assert_eq!(wiener(&Graph::cycle(5).unwrap(), &apsp(&Graph::cycle(5).unwrap())), Ok(15));
        assert_eq!(wiener(&k4, &apsp(&k4)), Ok(6));
        assert_eq!(wiener(&Graph::cycle(4).unwrap(), &apsp(&Graph::cycle(4).unwrap())), Ok(8));
    }

    #[test]
    fn szeged_values() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(szeged(&c5, &apsp(&c5)), Ok(20));
        let h = c4_pendant();
        let r = IndexReport::compute(&h).unwrap();
        assert_eq!((r.szeged, r.wiener, r.gap_sz), (28, 16, 12));
        let t = g(6, &[(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]);
        let dm = apsp(&t);
        assert_eq!(szeged(&t, &dm), wiener(&t, &dm));
    }

    #[test]
    fn revised_values() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(revised_szeged_x4(&c3, &apsp(&c3)), Ok(27));
        let r = IndexReport::compute(&paw()).unwrap();
        assert_eq!(r.revised_szeged_x4, 58);
        assert_eq!(r.gap_rsz_x4, 26);
        let c4 = Graph::cycle(4).unwrap();
        let r = IndexReport::compute(&c4).unwrap();
        assert_eq!((r.revised_szeged_x4, r.szeged), (64, 16));
    }

    #[test]
    fn mu_values() {
        let p3 = Graph::path(3);
        assert_eq!(mu(&p3, &apsp(&p3), 0, 2, (1, 2)), Ok(true));
        // C5 labeled v1..v5 as 0..4
        let c5 = Graph::cycle(5).unwrap();
        let dm = apsp(&c5);
        assert_eq!(mu(&c5, &dm, 0, 2, (3, 4)), Ok(true));
        assert_eq!(mu(&c5, &dm, 0, 2, (2, 3)), Ok(false));
        assert_eq!(mu(&c5, &dm, 1, 1, (2, 3)), Err(Error::SamePair(1)));
        assert_eq!(mu(&c5, &dm, 0, 1, (0, 2)), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn szeged_via_mu_values() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(szeged_via_mu(&c5, &apsp(&c5)), Ok(20));
        assert_eq!(szeged_via_mu(&paw(), &apsp(&paw())), Ok(8));
        let t = g(8, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (0, 7)]);
        let dm = apsp(&t);
        assert_eq!(szeged_via_mu(&t, &dm), wiener(&t, &dm));
    }

    #[test]
    fn pi_values() {
        let t = star3();
        let dm = apsp(&t);
        for c in pi_table(&t, &dm).unwrap() {
            assert_eq!(c.pi, 0);
        }
        let c5 = Graph::cycle(5).unwrap();
        let dm = apsp(&c5);
        let far = pi(&c5, &dm, 0, 2).unwrap();
        assert_eq!((far.distance, far.mu_edges.len(), far.pi), (2, 3, 1));
        assert_eq!(pi(&c5, &dm, 0, 1).unwrap().pi, 0);
        assert_eq!(pi(&c5, &dm, 3, 3), Err(Error::SamePair(3)));
    }

    #[test]
    fn n0_sums() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(n0_sum(&c5, &apsp(&c5)), Ok(5));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(n0_sum(&c4, &apsp(&c4)), Ok(0));
        let paw = paw();
        let dm = apsp(&paw);
        let per_edge: Vec<_> = partitions(&paw, &dm).unwrap().iter().map(|p| p.n_0).collect();
        // edges in order ab, ac, ad, bc
        assert_eq!(per_edge, vec![1, 1, 0, 2]);
        assert_eq!(n0_sum(&paw, &dm), Ok(4));
    }

    #[test]
    fn block_completeness() {
        let t = g(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        assert!(blocks_all_complete(&t, &blocks(&t)));
        let paw = paw();
        assert!(blocks_all_complete(&paw, &blocks(&paw)));
        let r = IndexReport::compute(&paw).unwrap();
        assert_eq!((r.szeged, r.wiener), (8, 8));
        let c5 = Graph::cycle(5).unwrap();
        assert!(!blocks_all_complete(&c5, &blocks(&c5)));
    }

    #[test]
    fn report_structure_fields() {
        let r = IndexReport::compute(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((r.wiener, r.szeged, r.revised_szeged_x4), (15, 20, 125));
        assert_eq!((r.bipartite, r.girth, r.odd_girth), (false, Some(5), Some(5)));
        let r = IndexReport::compute(&Graph::path(4)).unwrap();
        assert_eq!((r.girth, r.odd_girth), (None, None));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"n":4,"m":3,"wiener":10,"szeged":10,"revised_szeged_x4":40,"gap_sz":0,"gap_rsz_x4":0,"bipartite":true,"girth":null,"odd_girth":null}"#
        );
    }
}
