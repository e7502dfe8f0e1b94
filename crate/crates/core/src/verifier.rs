//! Exhaustive enumeration of small connected graphs up to isomorphism, and
//! verification of the lower bounds and supporting lemmas over them.
//!
//! Connected graphs on `k + 1` vertices are generated from the connected
//! representatives on `k` vertices by adding one vertex with every nonempty
//! neighborhood: every connected graph has a vertex whose removal leaves it
//! connected, so nothing is missed. Candidates are deduplicated by
//! canonical form. Girth and bipartiteness are inherited by induced
//! subgraphs, so those filters prune every level, not just the last.

use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_key, graph_from_key, CanonicalForm};
use crate::distance::{apsp, bfs};
use crate::error::{Error, Result};
use crate::extremal::{BoundValue, Theorem};
use crate::graph::Graph;
use crate::invariants::{
    blocks_all_complete, partitions, pi, pi_table, szeged_via_mu, IndexReport,
};
use crate::structure::{bipartition, blocks, girth, is_connected, is_isometric_cycle, Bipartition};

/// Largest `n` for unrestricted enumeration.
pub const MAX_ENUMERATION_N: usize = 8;
/// Largest `n` when the girth filter is at least 5.
pub const MAX_ENUMERATION_N_GIRTH5: usize = 9;
/// Largest `n` accepted by [`verify_lemmas`].
pub const MAX_LEMMA_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bipartiteness {
    Yes,
    No,
    Any,
}

/// Which connected graphs on `n` vertices to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UniverseFilter {
    pub n: usize,
    pub bipartite: Bipartiteness,
    pub min_girth: Option<usize>,
    pub min_edges: Option<usize>,
}

impl UniverseFilter {
    pub fn connected(n: usize) -> Self {
        UniverseFilter {
            n,
            bipartite: Bipartiteness::Any,
            min_girth: None,
            min_edges: None,
        }
    }

    /// The hypothesis class of `theorem` on `n` vertices.
    pub fn for_theorem(theorem: Theorem, n: usize) -> Self {
        match theorem {
            Theorem::Thm1 => UniverseFilter {
                n,
                bipartite: Bipartiteness::No,
                min_girth: Some(5),
                min_edges: None,
            },
            Theorem::Thm2 => UniverseFilter {
                n,
                bipartite: Bipartiteness::Yes,
                min_girth: None,
                min_edges: Some(n),
            },
            Theorem::Thm3 => UniverseFilter {
                n,
                bipartite: Bipartiteness::No,
                min_girth: None,
                min_edges: None,
            },
        }
    }

    /// Post-hoc check using the general-purpose predicates.
    pub fn matches(&self, g: &Graph) -> bool {
        if g.n() != self.n || !is_connected(g) {
            return false;
        }
        let bip = bipartition(g).is_bipartite();
        let bip_ok = match self.bipartite {
            Bipartiteness::Yes => bip,
            Bipartiteness::No => !bip,
            Bipartiteness::Any => true,
        };
        let girth_ok = self
            .min_girth
            .is_none_or(|k| girth(g).length().is_none_or(|len| len >= k));
        bip_ok && girth_ok && self.min_edges.is_none_or(|k| g.m() >= k)
    }

    fn max_n(&self) -> usize {
        if self.min_girth.is_some_and(|k| k >= 5) {
            MAX_ENUMERATION_N_GIRTH5
        } else {
            MAX_ENUMERATION_N
        }
    }
}

/// Adjacency rows of a graph with at most 16 vertices.
type Rows = [u16; 16];

fn rows_of(g: &Graph) -> Rows {
    let mut rows = [0u16; 16];
    rows[..g.n()].copy_from_slice(&g.adjacency_rows());
    rows
}

/// Canonical keys of all one-vertex extensions of `parent` (on `k`
/// vertices) that respect the inherited filters.
fn extensions(parent: &Graph, filter: &UniverseFilter, out: &mut HashSet<u64>) {
    let k = parent.n();
    let base = rows_of(parent);
    let dist: Vec<Vec<u32>> = match filter.min_girth {
        Some(_) => (0..k).map(|v| bfs(parent, v)).collect(),
        None => Vec::new(),
    };
    let colors = match (filter.bipartite, bipartition(parent)) {
        (Bipartiteness::Yes, Bipartition::Coloring(c)) => Some(c),
        _ => None,
    };
    'subsets: for mask in 1u16..(1 << k) {
        let members = || (0..k).filter(move |&v| mask & (1 << v) != 0);
        if let Some(c) = &colors {
            let first = c[members().next().unwrap()];
            if members().any(|v| c[v] != first) {
                continue;
            }
        }
        if let Some(min_girth) = filter.min_girth {
            // a new vertex joined to a and b closes a cycle of length d(a,b) + 2
            for a in members() {
                for b in members().filter(|&b| b > a) {
                    if (dist[a][b] as usize) + 2 < min_girth {
                        continue 'subsets;
                    }
                }
            }
        }
        let mut rows = base;
        rows[k] = mask;
        for v in members() {
            rows[v] |= 1 << k;
        }
        out.insert(canonical_key(k + 1, &rows[..k + 1]));
    }
}

/// Enumerates one representative per isomorphism class of connected graphs
/// matching `filter`, in canonical labeling, sorted by canonical form.
pub fn enumerate_connected(filter: &UniverseFilter) -> Result<Vec<Graph>> {
    enumerate_connected_partitioned(filter, rayon::current_num_threads().max(1) * 4)
}

/// As [`enumerate_connected`], splitting each level's parents into `parts`
/// independent tasks whose results are merged by set union.
pub fn enumerate_connected_partitioned(
    filter: &UniverseFilter,
    parts: usize,
) -> Result<Vec<Graph>> {
    let n = filter.n;
    if n > filter.max_n() {
        return Err(Error::TooLarge {
            what: "enumeration",
            n,
            max: filter.max_n(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let parts = parts.max(1);
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let chunk = level.len().div_ceil(parts).max(1);
        let keys = level
            .par_chunks(chunk)
            .map(|parents| {
                let mut set = HashSet::new();
                for p in parents {
                    extensions(p, filter, &mut set);
                }
                set
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        let mut keys: Vec<u64> = keys.into_iter().collect();
        keys.sort_unstable();
        level = keys.into_iter().map(|key| graph_from_key(k + 1, key)).collect();
    }
    let mut out: Vec<Graph> = level.into_iter().filter(|g| filter.matches(g)).collect();
    // graph6 order; equal to key order for a fixed n
    out.sort_by_cached_key(CanonicalForm::of_canonical);
    Ok(out)
}

/// Outcome of checking one bound over one enumerated universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub filter: UniverseFilter,
    pub universe_size: usize,
    pub bound: BoundValue,
    /// Minimum gap in units of `1 / bound.denominator`; `None` for an empty universe.
    pub min_gap: Option<i64>,
    pub achievers: Vec<CanonicalForm>,
    pub counterexamples: Vec<CanonicalForm>,
    /// Graphs where the structural equality predicate disagrees with the gap.
    pub predicate_mismatches: Vec<CanonicalForm>,
    /// Graphs where the pair-sum formulas disagree with the edge-partition ones.
    pub oracle_mismatches: Vec<CanonicalForm>,
    pub elapsed_ms: u128,
}

#[derive(Serialize)]
struct VerificationJson<'a> {
    theorem: Theorem,
    n: usize,
    universe_size: usize,
    bound_num: i64,
    bound_den: i64,
    min_gap_num: Option<i64>,
    achievers: Vec<&'a str>,
    counterexamples: Vec<&'a str>,
    predicate_mismatches: Vec<&'a str>,
    oracle_mismatches: Vec<&'a str>,
    elapsed_ms: u128,
}

fn strs(v: &[CanonicalForm]) -> Vec<&str> {
    v.iter().map(CanonicalForm::as_str).collect()
}

impl VerificationReport {
    pub fn n(&self) -> usize {
        self.filter.n
    }

    /// No counterexample, no predicate mismatch, no oracle mismatch.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
            && self.predicate_mismatches.is_empty()
            && self.oracle_mismatches.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&VerificationJson {
            theorem: self.theorem,
            n: self.filter.n,
            universe_size: self.universe_size,
            bound_num: self.bound.numerator,
            bound_den: self.bound.denominator,
            min_gap_num: self.min_gap,
            achievers: strs(&self.achievers),
            counterexamples: strs(&self.counterexamples),
            predicate_mismatches: strs(&self.predicate_mismatches),
            oracle_mismatches: strs(&self.oracle_mismatches),
            elapsed_ms: self.elapsed_ms,
        })
        .expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let min = self
            .min_gap
            .map_or_else(|| "-".to_string(), |g| g.to_string());
        writeln!(
            f,
            "{} n={}: {} graphs, bound {}, min gap {}{}",
            self.theorem,
            self.filter.n,
            self.universe_size,
            self.bound,
            min,
            if self.bound.denominator == 1 {
                String::new()
            } else {
                format!("/{}", self.bound.denominator)
            }
        )?;
        writeln!(f, "  achievers: {}", strs(&self.achievers).join(" "))?;
        writeln!(
            f,
            "  counterexamples: {}, predicate mismatches: {}, oracle mismatches: {}",
            self.counterexamples.len(),
            self.predicate_mismatches.len(),
            self.oracle_mismatches.len()
        )?;
        write!(f, "  {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

struct GraphOutcome {
    form: CanonicalForm,
    gap: i64,
    predicate: bool,
    oracle_ok: bool,
}

/// Both pair-sum identities: Sz via μ, and Σ π = Sz − W.
fn oracle_agrees(g: &Graph, report: &IndexReport) -> Result<bool> {
    let dm = apsp(g);
    let via_mu = szeged_via_mu(g, &dm)?;
    let pi_sum: i64 = pi_table(g, &dm)?.iter().map(|c| c.pi).sum();
    Ok(via_mu == report.szeged && pi_sum == report.gap_sz)
}

/// Checks `theorem` on every graph of its hypothesis class with `n` vertices.
pub fn verify_theorem(theorem: Theorem, n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let bound = theorem.bound(n)?;
    let filter = UniverseFilter::for_theorem(theorem, n);
    let universe = enumerate_connected(&filter)?;
    let outcomes = universe
        .par_iter()
        .map(|g| {
            let report = IndexReport::compute(g)?;
            Ok(GraphOutcome {
                form: CanonicalForm::of_canonical(g),
                gap: theorem.scaled_gap(&report),
                predicate: theorem.is_equality(g)?,
                oracle_ok: oracle_agrees(g, &report)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let pick = |keep: &dyn Fn(&GraphOutcome) -> bool| -> Vec<CanonicalForm> {
        outcomes
            .iter()
            .filter(|o| keep(o))
            .map(|o| o.form.clone())
            .collect()
    };
    Ok(VerificationReport {
        theorem,
        filter,
        universe_size: universe.len(),
        bound,
        min_gap: outcomes.iter().map(|o| o.gap).min(),
        achievers: pick(&|o| o.gap == bound.numerator),
        counterexamples: pick(&|o| o.gap < bound.numerator),
        predicate_mismatches: pick(&|o| o.predicate != (o.gap == bound.numerator)),
        oracle_mismatches: pick(&|o| !o.oracle_ok),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Violation lists for the supporting lemmas over all connected graphs on
/// `n` vertices (graph6 canonical forms).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub universe_size: usize,
    pub cyclic: usize,
    pub nonbipartite: usize,
    /// Pair bounds on a shortest cycle, which must also be isometric.
    pub lemma2_violations: Vec<String>,
    /// `Sz = W` iff every block is complete.
    pub lemma3_violations: Vec<String>,
    /// `Σ n_0(e) >= n` for nonbipartite graphs with `n >= 4`.
    pub lemma4_sum_violations: Vec<String>,
    /// Every vertex is equidistant from the ends of some edge.
    pub lemma4_vertex_violations: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.lemma2_violations.is_empty()
            && self.lemma3_violations.is_empty()
            && self.lemma4_sum_violations.is_empty()
            && self.lemma4_vertex_violations.is_empty()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lemmas n={}: {} graphs ({} cyclic, {} nonbipartite); violations: lemma2 {}, lemma3 {}, lemma4 sum {}, lemma4 vertex {} => {}",
            self.n,
            self.universe_size,
            self.cyclic,
            self.nonbipartite,
            self.lemma2_violations.len(),
            self.lemma3_violations.len(),
            self.lemma4_sum_violations.len(),
            self.lemma4_vertex_violations.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Default)]
struct LemmaFlags {
    cyclic: bool,
    nonbipartite: bool,
    lemma2: bool,
    lemma3: bool,
    lemma4_sum: bool,
    lemma4_vertex: bool,
}

/// Lemma 2 on a shortest cycle `c`: even length gives `π(x,y) >= d_C(x,y)`,
/// odd length gives `π(x,y) >= 1` whenever `d_C(x,y) >= 2`.
fn shortest_cycle_pairs_ok(g: &Graph, c: &[usize]) -> Result<bool> {
    let dm = apsp(g);
    if !is_isometric_cycle(g, &dm, c)? {
        return Ok(false);
    }
    let k = c.len();
    for i in 0..k {
        for j in i + 1..k {
            let along = ((j - i).min(k - (j - i))) as i64;
            let p = pi(g, &dm, c[i], c[j])?.pi;
            let ok = if k.is_multiple_of(2) { p >= along } else { along < 2 || p >= 1 };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn lemma_flags(g: &Graph) -> Result<LemmaFlags> {
    let dm = apsp(g);
    let report = IndexReport::with_distances(g, &dm)?;
    let mut flags = LemmaFlags::default();
    if let Some(c) = match girth(g) {
        crate::structure::CycleInfo::Cycle(c) => Some(c),
        crate::structure::CycleInfo::Acyclic => None,
    } {
        flags.cyclic = true;
        flags.lemma2 = !shortest_cycle_pairs_ok(g, &c)?;
    }
    if g.n() >= 2 {
        let complete = blocks_all_complete(g, &blocks(g));
        flags.lemma3 = complete != (report.szeged == report.wiener);
    }
    flags.nonbipartite = !report.bipartite;
    if !report.bipartite && g.n() >= 4 {
        let parts = partitions(g, &dm)?;
        let total: u64 = parts.iter().map(|p| p.n_0).sum();
        flags.lemma4_sum = total < g.n() as u64;
        flags.lemma4_vertex = (0..g.n()).any(|u| {
            let row = dm.row(u);
            !g.edges().iter().any(|&(a, b)| row[a] == row[b])
        });
    }
    Ok(flags)
}

/// Checks the supporting lemmas over all connected graphs on `n` vertices.
pub fn verify_lemmas(n: usize) -> Result<LemmaReport> {
    if n > MAX_LEMMA_N {
        return Err(Error::TooLarge {
            what: "lemma verification",
            n,
            max: MAX_LEMMA_N,
        });
    }
    let universe = enumerate_connected(&UniverseFilter::connected(n))?;
    let flags = universe
        .par_iter()
        .map(lemma_flags)
        .collect::<Result<Vec<_>>>()?;
    let collect = |sel: fn(&LemmaFlags) -> bool| -> Vec<String> {
        universe
            .iter()
            .zip(&flags)
            .filter(|(_, f)| sel(f))
            .map(|(g, _)| CanonicalForm::of_canonical(g).into_string())
            .collect()
    };
    Ok(LemmaReport {
        n,
        universe_size: universe.len(),
        cyclic: flags.iter().filter(|f| f.cyclic).count(),
        nonbipartite: flags.iter().filter(|f| f.nonbipartite).count(),
        lemma2_violations: collect(|f| f.lemma2),
        lemma3_violations: collect(|f| f.lemma3),
        lemma4_sum_violations: collect(|f| f.lemma4_sum),
        lemma4_vertex_violations: collect(|f| f.lemma4_vertex),
    })
}
