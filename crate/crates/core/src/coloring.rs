//! Exact list-coloring decision by backtracking.
//!
//! Vertex selection is smallest-domain-first (ties: larger degree, then
//! lower id). Singleton domains are propagated to neighbors eagerly.
//! Color symmetry is broken either on the connector quadruple `I` (which is
//! rainbow in every 4-coloring of any graph containing the trimmed
//! Mycielski gadget) or on one edge at a vertex of maximum degree.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

pub const MAX_COLORS: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    /// Connector pre-assignment when `k = 4` and the full quadruple `I` is
    /// tagged, otherwise [`Symmetry::Edge`].
    #[default]
    Auto,
    /// Fix colors `0, 1` on an edge at a maximum-degree vertex.
    Edge,
    None,
}

#[derive(Clone, Debug)]
pub struct ColoringProblem<'g> {
    graph: &'g LabeledGraph,
    k: usize,
    lists: Option<Vec<u32>>,
    forced_distinct: Vec<(usize, usize)>,
    symmetry: Symmetry,
}

impl<'g> ColoringProblem<'g> {
    pub fn new(graph: &'g LabeledGraph, k: usize) -> Result<Self> {
        if k == 0 || k > MAX_COLORS {
            return Err(Error::InvalidQuery(format!(
                "k = {k} outside 1..={MAX_COLORS}"
            )));
        }
        Ok(ColoringProblem {
            graph,
            k,
            lists: None,
            forced_distinct: Vec::new(),
            symmetry: Symmetry::Auto,
        })
    }

    /// Admissible colors per vertex as bitmasks over `0..k`.
    pub fn with_lists(mut self, lists: Vec<u32>) -> Result<Self> {
        if lists.len() != self.graph.n() {
            return Err(Error::InvalidQuery(format!(
                "{} lists for {} vertices",
                lists.len(),
                self.graph.n()
            )));
        }
        let full = full_mask(self.k);
        if let Some(v) = lists.iter().position(|&l| l & full == 0 || l & !full != 0) {
            return Err(Error::InvalidQuery(format!(
                "list of vertex {v} is empty or mentions colors outside 0..{}",
                self.k
            )));
        }
        self.lists = Some(lists);
        Ok(self)
    }

    /// Extra vertex pairs that must receive distinct colors.
    pub fn with_forced_distinct(mut self, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let n = self.graph.n();
        for &(u, v) in &pairs {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { id: u.max(v), n });
            }
        }
        self.forced_distinct = pairs;
        Ok(self)
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn graph(&self) -> &LabeledGraph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn list(&self, v: usize) -> u32 {
        self.lists.as_ref().map_or(full_mask(self.k), |l| l[v])
    }

    /// Independent check that `colors` is proper, respects lists and
    /// forced pairs.
    pub fn is_valid_coloring(&self, colors: &[u8]) -> bool {
        colors.len() == self.graph.n()
            && colors
                .iter()
                .enumerate()
                .all(|(v, &c)| (c as usize) < self.k && self.list(v) >> c & 1 == 1)
            && self.graph.edges().all(|(u, v)| colors[u] != colors[v])
            && self
                .forced_distinct
                .iter()
                .all(|&(u, v)| colors[u] != colors[v])
    }
}

fn full_mask(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringWitness {
    pub colors: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ColoringOutcome {
    Colorable { witness: ColoringWitness },
    NotColorable,
    BudgetExhausted,
}

impl ColoringOutcome {
    pub fn is_colorable(&self) -> Option<bool> {
        match self {
            ColoringOutcome::Colorable { .. } => Some(true),
            ColoringOutcome::NotColorable => Some(false),
            ColoringOutcome::BudgetExhausted => None,
        }
    }

    pub fn witness(&self) -> Option<&ColoringWitness> {
        match self {
            ColoringOutcome::Colorable { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub outcome: ColoringOutcome,
    pub nodes: u64,
    pub elapsed: Duration,
}

struct Search<'a> {
    adj: Vec<Vec<usize>>,
    degree: Vec<usize>,
    budget: &'a Budget,
    deadline: Option<Instant>,
    nodes: u64,
    exhausted: bool,
}

impl Search<'_> {
    /// Removes the color of every singleton in `queue` from its neighbors.
    fn propagate(&self, dom: &mut [u32], mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            let c = dom[v];
            for &w in &self.adj[v] {
                if dom[w] & c != 0 {
                    dom[w] &= !c;
                    match dom[w].count_ones() {
                        0 => return false,
                        1 => queue.push(w),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m)
            || (self.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() > d))
        {
            self.exhausted = true;
        }
        !self.exhausted
    }

    fn solve(&mut self, dom: &mut Vec<u32>) -> bool {
        let pick = (0..dom.len())
            .filter(|&v| dom[v].count_ones() > 1)
            .min_by_key(|&v| (dom[v].count_ones(), std::cmp::Reverse(self.degree[v]), v));
        let Some(v) = pick else {
            return true;
        };
        let mut colors = dom[v];
        while colors != 0 {
            let c = colors & colors.wrapping_neg();
            colors &= !c;
            if !self.tick() {
                return false;
            }
            let mut next = dom.clone();
            next[v] = c;
            if self.propagate(&mut next, vec![v]) && self.solve(&mut next) {
                *dom = next;
                return true;
            }
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Decides whether `problem` has a proper coloring within `budget`.
pub fn decide_coloring(problem: &ColoringProblem<'_>, budget: &Budget) -> ColoringReport {
    let start = Instant::now();
    let g = problem.graph;
    let n = g.n();
    let mut adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    for &(u, v) in &problem.forced_distinct {
        adj[u].push(v);
        adj[v].push(u);
    }
    for ns in &mut adj {
        ns.sort_unstable();
        ns.dedup();
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut dom: Vec<u32> = (0..n).map(|v| problem.list(v)).collect();

    if problem.lists.is_none() {
        let mode = match problem.symmetry {
            Symmetry::Auto if problem.k == 4 && g.connector_quadruple().is_some() => Some(true),
            Symmetry::Auto | Symmetry::Edge => Some(false),
            Symmetry::None => None,
        };
        match mode {
            Some(true) => {
                for (i, t) in g.connector_quadruple().unwrap().into_iter().enumerate() {
                    dom[t] &= 1 << i;
                }
            }
            Some(false) => {
                if let Some(u) = (0..n)
                    .filter(|&v| degree[v] > 0)
                    .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
                {
                    let w = *adj[u]
                        .iter()
                        .max_by_key(|&&w| (degree[w], std::cmp::Reverse(w)))
                        .unwrap();
                    dom[u] &= 1;
                    dom[w] &= if problem.k >= 2 { 2 } else { 0 };
                }
            }
            None => {}
        }
    }

    let mut search = Search {
        adj,
        degree,
        budget,
        deadline: budget.deadline(start),
        nodes: 0,
        exhausted: false,
    };
    let singletons: Vec<usize> = (0..n).filter(|&v| dom[v].count_ones() == 1).collect();
    let feasible = dom.iter().all(|&d| d != 0)
        && search.propagate(&mut dom, singletons)
        && search.solve(&mut dom);

    let outcome = if feasible {
        let colors: Vec<u8> = dom.iter().map(|d| d.trailing_zeros() as u8).collect();
        assert!(
            problem.is_valid_coloring(&colors),
            "coloring solver produced an invalid witness"
        );
        ColoringOutcome::Colorable {
            witness: ColoringWitness { colors },
        }
    } else if search.exhausted {
        ColoringOutcome::BudgetExhausted
    } else {
        ColoringOutcome::NotColorable
    };
    ColoringReport {
        outcome,
        nodes: search.nodes,
        elapsed: start.elapsed(),
    }
}

/// Convenience wrapper: plain `k`-colorability with default symmetry.
pub fn k_colorable(g: &LabeledGraph, k: usize, budget: &Budget) -> Result<ColoringReport> {
    Ok(decide_coloring(&ColoringProblem::new(g, k)?, budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colorable(g: &LabeledGraph, k: usize) -> Option<bool> {
        k_colorable(g, k, &Budget::UNLIMITED)
            .unwrap()
            .outcome
            .is_colorable()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(colorable(&LabeledGraph::complete(2), 1), Some(false));
        assert_eq!(colorable(&LabeledGraph::complete(2), 2), Some(true));
        assert_eq!(colorable(&LabeledGraph::cycle(5), 2), Some(false));
        assert_eq!(colorable(&LabeledGraph::cycle(5), 3), Some(true));
        assert_eq!(colorable(&LabeledGraph::complete(5), 4), Some(false));
        assert_eq!(colorable(&LabeledGraph::path(1), 1), Some(true));
        assert_eq!(colorable(&LabeledGraph::path(0), 1), Some(true));
    }

    #[test]
    fn lists_are_respected() {
        let g = LabeledGraph::path(3);
        let p = ColoringProblem::new(&g, 3)
            .unwrap()
            .with_lists(vec![0b001, 0b011, 0b001])
            .unwrap();
        let r = decide_coloring(&p, &Budget::UNLIMITED);
        assert_eq!(r.outcome.witness().unwrap().colors, vec![0, 1, 0]);
        let p = ColoringProblem::new(&g, 3)
            .unwrap()
            .with_lists(vec![0b001, 0b001, 0b100])
            .unwrap();
        assert_eq!(
            decide_coloring(&p, &Budget::UNLIMITED).outcome,
            ColoringOutcome::NotColorable
        );
        assert!(ColoringProblem::new(&g, 3)
            .unwrap()
            .with_lists(vec![0, 1, 1])
            .is_err());
        assert!(ColoringProblem::new(&g, 2)
            .unwrap()
            .with_lists(vec![4, 1, 1])
            .is_err());
    }

    #[test]
    fn forced_pairs_act_as_edges() {
        let g = LabeledGraph::path(3);
        let p = ColoringProblem::new(&g, 2)
            .unwrap()
            .with_forced_distinct(vec![(0, 2)])
            .unwrap();
        assert_eq!(
            decide_coloring(&p, &Budget::UNLIMITED).outcome,
            ColoringOutcome::NotColorable
        );
        assert!(ColoringProblem::new(&g, 2)
            .unwrap()
            .with_forced_distinct(vec![(1, 1)])
            .is_err());
    }

    #[test]
    fn budget_exhaustion_is_not_a_no() {
        let g = LabeledGraph::complete(8);
        let r = k_colorable(&g, 7, &Budget::nodes(3)).unwrap();
        assert_eq!(r.outcome, ColoringOutcome::BudgetExhausted);
    }

    #[test]
    fn rejects_bad_k() {
        assert!(ColoringProblem::new(&LabeledGraph::path(2), 0).is_err());
        assert!(ColoringProblem::new(&LabeledGraph::path(2), 33).is_err());
    }
}
