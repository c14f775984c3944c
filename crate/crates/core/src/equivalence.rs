//! End-to-end check that `phi` is NAE-satisfiable iff `G(phi)` is
//! 4-colorable, on instances small enough for brute force.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coloring::{decide_coloring, ColoringOutcome, ColoringProblem};
use crate::error::Result;
use crate::gadgets::{build_reduction, nae_satisfiable, MnaeInstance};
use crate::graph::VertexKind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub num_vars: usize,
    pub num_clauses: usize,
    pub vertices: usize,
    pub edges: usize,
    pub nae_witness: Option<Vec<bool>>,
    pub coloring: ColoringOutcome,
    pub coloring_nodes: u64,
    /// For satisfiable instances: whether the coloring seeded from the NAE
    /// witness (`t_i -> i`, true -> 0, false -> 1 on x vertices) extends to
    /// all of `G(phi)`. Diagnostic only; the decision above is unseeded.
    pub seeded_extension: Option<bool>,
}

impl EquivalenceReport {
    pub fn nae_satisfiable(&self) -> bool {
        self.nae_witness.is_some()
    }

    /// `Some(true)` when both sides agree, `None` when the coloring side ran
    /// out of budget.
    pub fn consistent(&self) -> Option<bool> {
        self.coloring
            .is_colorable()
            .map(|c| c == self.nae_satisfiable())
    }
}

pub fn end_to_end_check(inst: &MnaeInstance, budget: &Budget) -> Result<EquivalenceReport> {
    let nae_witness = nae_satisfiable(inst)?;
    let g = build_reduction(inst);
    let report = decide_coloring(&ColoringProblem::new(&g, 4)?, budget);

    let seeded_extension = match &nae_witness {
        Some(assignment) => {
            let quad = g.connector_quadruple().expect("G(phi) contains M'");
            let xs = g.vertices_of_kind(VertexKind::X);
            let mut lists = vec![0b1111u32; g.n()];
            for (i, &t) in quad.iter().enumerate() {
                lists[t] = 1 << i;
            }
            for (&x, &value) in xs.iter().zip(assignment) {
                lists[x] = if value { 0b01 } else { 0b10 };
            }
            let seeded = decide_coloring(&ColoringProblem::new(&g, 4)?.with_lists(lists)?, budget);
            seeded.outcome.is_colorable()
        }
        None => None,
    };

    Ok(EquivalenceReport {
        num_vars: inst.num_vars(),
        num_clauses: inst.clauses().len(),
        vertices: g.n(),
        edges: g.m(),
        nae_witness,
        coloring: report.outcome,
        coloring_nodes: report.nodes,
        seeded_extension,
    })
}
