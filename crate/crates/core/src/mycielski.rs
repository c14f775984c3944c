//! Mycielski graphs and the trimmed connector gadget `M'`.
//!
//! Numbering is fixed by iterating [`mycielskian`] from `K2 = {0, 1}`:
//! the shadow of vertex `i` is `n + i` and the universal vertex is `2n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::{decide_coloring, ColoringOutcome, ColoringProblem, Symmetry};
use crate::error::{Error, Result};
use crate::graph::{Connector, GraphBuilder, LabeledGraph, VertexKind, VertexTag};

pub const MAX_K: usize = 8;

/// Vertex of `M5` removed to obtain `M'`.
pub const REMOVED_VERTEX: usize = 16;
/// `t0..t3` in `M'` numbering.
pub const I_IDS: [usize; 4] = [1, 3, 10, 21];
/// `t0'..t3'` in `M'` numbering.
pub const I_PRIME_IDS: [usize; 4] = [19, 17, 11, 5];
pub const M_PRIME_VERTICES: usize = 22;

/// Shadow and universal vertices are appended; original tags are kept and
/// new vertices are tagged `mycielski`.
pub fn mycielskian(g: &LabeledGraph) -> LabeledGraph {
    let n = g.n();
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.add_vertex(*g.tag(v));
    }
    for _ in 0..=n {
        b.add_vertex(VertexTag::new(VertexKind::Mycielski));
    }
    for (i, j) in g.edges() {
        b.add_edge(i, j).unwrap();
        b.add_edge(i, n + j).unwrap();
        b.add_edge(n + i, j).unwrap();
    }
    for i in 0..n {
        b.add_edge(n + i, 2 * n).unwrap();
    }
    b.finish().expect("mycielskian of a valid graph")
}

/// `M_k = mu^(k-2)(K2)`, all vertices tagged `mycielski`.
pub fn build_mk(k: usize) -> Result<LabeledGraph> {
    if !(2..=MAX_K).contains(&k) {
        return Err(Error::SizeGuard(format!(
            "Mycielski order k = {k} outside 2..={MAX_K}"
        )));
    }
    let mut b = GraphBuilder::with_vertices(2, VertexTag::new(VertexKind::Mycielski));
    b.add_edge(0, 1)?;
    let mut g = b.finish()?;
    for _ in 2..k {
        g = mycielskian(&g);
    }
    Ok(g)
}

/// `M5` minus vertex 16 with the connector quadruples `I` and `I'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectorGadget {
    pub graph: LabeledGraph,
    pub i: [usize; 4],
    pub i_prime: [usize; 4],
}

pub fn build_m_prime() -> ConnectorGadget {
    let m5 = build_mk(5).expect("k = 5 within guard");
    let keep: Vec<usize> = (0..m5.n()).filter(|&v| v != REMOVED_VERTEX).collect();
    // order-preserving remap: u_j -> v_j below 16, v_{j-1} above
    let (trimmed, _) = m5.induced_subgraph(&keep).expect("ids in range");
    let mut b = GraphBuilder::from_graph(&trimmed);
    for (idx, (&t, &tp)) in I_IDS.iter().zip(&I_PRIME_IDS).enumerate() {
        b.set_tag(t, VertexTag::connector(Connector::I(idx as u8)));
        b.set_tag(tp, VertexTag::connector(Connector::IPrime(idx as u8)));
    }
    ConnectorGadget {
        graph: b.finish().expect("connector tags are unique"),
        i: I_IDS,
        i_prime: I_PRIME_IDS,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    /// Human-readable constraint, e.g. `t0=t1` or `t2!=t2'`.
    pub constraint: String,
    pub outcome: ColoringOutcome,
    pub nodes: u64,
}

impl PairCheck {
    fn infeasible(&self) -> bool {
        self.outcome == ColoringOutcome::NotColorable
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectorReport {
    pub vertices: usize,
    pub edges: usize,
    pub i_independent: bool,
    pub i_prime_independent: bool,
    /// `(i, j, has_edge)` for all 16 ordered pairs `t_i t_j'`.
    pub cross_edges: Vec<(usize, usize, bool)>,
    /// Forcing `t_i = t_j` (and `t_i' = t_j'`), 12 checks; each must be
    /// infeasible for the quadruples to be rainbow.
    pub rainbow_checks: Vec<PairCheck>,
    /// Forcing `t_i != t_i'`, 4 checks; each must be infeasible.
    pub matching_checks: Vec<PairCheck>,
    /// `M'` plus the edge `t_i t_j` (or `t_i' t_j'`), 12 checks. Recorded
    /// for completeness: an edge between vertices that always differ
    /// cannot destroy colorability, so these are expected colorable.
    pub within_edge_augmentations: Vec<PairCheck>,
    pub base: ColoringOutcome,
    pub base_nodes: u64,
}

impl ConnectorReport {
    pub fn cross_edges_ok(&self) -> bool {
        self.cross_edges.len() == 16 && self.cross_edges.iter().all(|&(i, j, e)| e == (i != j))
    }

    pub fn rainbow_ok(&self) -> bool {
        self.rainbow_checks.len() == 12 && self.rainbow_checks.iter().all(PairCheck::infeasible)
    }

    pub fn matching_ok(&self) -> bool {
        self.matching_checks.len() == 4 && self.matching_checks.iter().all(PairCheck::infeasible)
    }

    pub fn base_ok(&self) -> bool {
        matches!(self.base, ColoringOutcome::Colorable { .. })
    }

    pub fn budget_exhausted(&self) -> bool {
        self.rainbow_checks
            .iter()
            .chain(&self.matching_checks)
            .chain(&self.within_edge_augmentations)
            .any(|c| c.outcome == ColoringOutcome::BudgetExhausted)
            || self.base == ColoringOutcome::BudgetExhausted
    }

    pub fn holds(&self) -> bool {
        self.vertices == M_PRIME_VERTICES
            && self.i_independent
            && self.i_prime_independent
            && self.cross_edges_ok()
            && self.rainbow_ok()
            && self.matching_ok()
            && self.base_ok()
    }
}

fn independent(g: &LabeledGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(a, &u)| set[a + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

enum Constraint {
    Equal(usize, usize),
    Edge(usize, usize),
}

fn run_check(g: &LabeledGraph, label: String, c: Constraint, budget: &Budget) -> PairCheck {
    // Edge symmetry only: the connector pre-assignment would assume the
    // very property under test.
    let report = match c {
        Constraint::Equal(u, v) => {
            let merged = g
                .identify_vertices(u, v)
                .expect("connector vertices are non-adjacent");
            decide_coloring(
                &ColoringProblem::new(&merged, 4)
                    .unwrap()
                    .with_symmetry(Symmetry::Edge),
                budget,
            )
        }
        Constraint::Edge(u, v) => decide_coloring(
            &ColoringProblem::new(g, 4)
                .unwrap()
                .with_forced_distinct(vec![(u, v)])
                .unwrap()
                .with_symmetry(Symmetry::Edge),
            budget,
        ),
    };
    PairCheck {
        constraint: label,
        outcome: report.outcome,
        nodes: report.nodes,
    }
}

/// Checks the connector properties of `M'` with the exact 4-coloring solver.
pub fn verify_connector_properties(c: &ConnectorGadget, budget: &Budget) -> ConnectorReport {
    let g = &c.graph;
    let mut cross_edges = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            cross_edges.push((i, j, g.has_edge(c.i[i], c.i_prime[j])));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .collect();

    let mut rainbow = Vec::new();
    let mut within = Vec::new();
    for (quad, prime) in [(&c.i, ""), (&c.i_prime, "'")] {
        for &(i, j) in &pairs {
            rainbow.push((
                format!("t{i}{prime}=t{j}{prime}"),
                Constraint::Equal(quad[i], quad[j]),
            ));
            within.push((
                format!("t{i}{prime}!=t{j}{prime}"),
                Constraint::Edge(quad[i], quad[j]),
            ));
        }
    }
    let matching: Vec<_> = (0..4)
        .map(|i| {
            (
                format!("t{i}!=t{i}'"),
                Constraint::Edge(c.i[i], c.i_prime[i]),
            )
        })
        .collect();

    let run = |jobs: Vec<(String, Constraint)>| -> Vec<PairCheck> {
        jobs.into_par_iter()
            .map(|(label, con)| run_check(g, label, con, budget))
            .collect()
    };
    let base = decide_coloring(
        &ColoringProblem::new(g, 4)
            .unwrap()
            .with_symmetry(Symmetry::Edge),
        budget,
    );

    ConnectorReport {
        vertices: g.n(),
        edges: g.m(),
        i_independent: independent(g, &c.i),
        i_prime_independent: independent(g, &c.i_prime),
        cross_edges,
        rainbow_checks: run(rainbow),
        matching_checks: run(matching),
        within_edge_augmentations: run(within),
        base: base.outcome,
        base_nodes: base.nodes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub vertices: usize,
    pub edges: usize,
    pub triangle_free: bool,
    pub four_coloring: ColoringOutcome,
    pub four_coloring_nodes: u64,
    pub five_coloring: ColoringOutcome,
    pub five_coloring_nodes: u64,
    /// One outcome per edge of `M5` (ascending edge order), 4 colors.
    pub edge_deletions: Vec<ColoringOutcome>,
    pub edge_deletion_nodes: u64,
}

impl CriticalityReport {
    pub fn deletions_colorable(&self) -> usize {
        self.edge_deletions
            .iter()
            .filter(|o| matches!(o, ColoringOutcome::Colorable { .. }))
            .count()
    }

    pub fn budget_exhausted(&self) -> bool {
        std::iter::once(&self.four_coloring)
            .chain(std::iter::once(&self.five_coloring))
            .chain(&self.edge_deletions)
            .any(|o| *o == ColoringOutcome::BudgetExhausted)
    }

    /// `M5` is 5-chromatic and every single-edge deletion is 4-colorable.
    pub fn is_critical(&self) -> bool {
        self.four_coloring == ColoringOutcome::NotColorable
            && matches!(self.five_coloring, ColoringOutcome::Colorable { .. })
            && self.deletions_colorable() == self.edges
    }
}

pub fn verify_m5_critical(budget: &Budget) -> CriticalityReport {
    let m5 = build_mk(5).expect("k = 5 within guard");
    let decide =
        |g: &LabeledGraph, k: usize| decide_coloring(&ColoringProblem::new(g, k).unwrap(), budget);
    let edges: Vec<(usize, usize)> = m5.edges().collect();
    let deletions: Vec<_> = edges
        .par_iter()
        .map(|&(u, v)| {
            let mut b = GraphBuilder::from_graph(&m5);
            b.remove_edge(u, v);
            decide(&b.finish().unwrap(), 4)
        })
        .collect();
    let four = decide(&m5, 4);
    let five = decide(&m5, 5);
    CriticalityReport {
        vertices: m5.n(),
        edges: m5.m(),
        triangle_free: m5.is_triangle_free(),
        four_coloring: four.outcome,
        four_coloring_nodes: four.nodes,
        five_coloring: five.outcome,
        five_coloring_nodes: five.nodes,
        edge_deletion_nodes: deletions.iter().map(|r| r.nodes).sum(),
        edge_deletions: deletions.into_iter().map(|r| r.outcome).collect(),
    }
}
