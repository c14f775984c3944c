//! Monotone NAE-3-SAT instances and the reduction graph `G(phi)`.
//!
//! Vertex layout of `G(phi)`: ids `0..22` are `M'`, then one `x` vertex per
//! variable, then per clause the gadget `H0` followed by `H1`, each laid out
//! as `a0 b0 a1 b1 a2 c0 c1 c2`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, LabeledGraph, VertexKind, VertexTag};
use crate::mycielski::{build_m_prime, I_IDS, I_PRIME_IDS, M_PRIME_VERTICES};

pub const MAX_BRUTE_FORCE_VARS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MnaeInstance {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl MnaeInstance {
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(&v) = c.iter().find(|&&v| v >= num_vars) {
                return Err(Error::InvalidInstance(format!(
                    "clause {j}: variable {v} out of range (num_vars = {num_vars})"
                )));
            }
            if c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(Error::InvalidInstance(format!(
                    "clause {j}: repeated variable"
                )));
            }
        }
        Ok(MnaeInstance { num_vars, clauses })
    }

    /// The seven lines of the Fano plane; not NAE-satisfiable.
    pub fn fano() -> Self {
        MnaeInstance::new(
            7,
            vec![
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    pub fn is_nae(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                let t = c.iter().filter(|&&v| assignment[v]).count();
                t == 1 || t == 2
            })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("mnae {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            writeln!(s, "{} {} {}", c[0], c[1], c[2]).unwrap();
        }
        s
    }
}

/// Parses the `.mnae` format: header `mnae <vars> <clauses>`, one clause of
/// three distinct indices per line, `#` comments.
pub fn parse_mnae(text: &str) -> Result<MnaeInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let (num_vars, num_clauses) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["mnae", n, m] => (
            n.parse::<usize>()
                .map_err(|_| Error::parse(hline, format!("bad variable count {n:?}")))?,
            m.parse::<usize>()
                .map_err(|_| Error::parse(hline, format!("bad clause count {m:?}")))?,
        ),
        _ => {
            return Err(Error::parse(
                hline,
                "expected header \"mnae <num_vars> <num_clauses>\"",
            ))
        }
    };
    let mut clauses = Vec::with_capacity(num_clauses);
    let mut last = hline;
    for (line, body) in lines {
        last = line;
        let vars: Vec<usize> = body
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::parse(line, format!("bad variable index {t:?}")))
            })
            .collect::<Result<_>>()?;
        let clause: [usize; 3] = vars.try_into().map_err(|v: Vec<usize>| {
            Error::parse(
                line,
                format!("clause has {} variables, expected 3", v.len()),
            )
        })?;
        if let Some(&v) = clause.iter().find(|&&v| v >= num_vars) {
            return Err(Error::parse(
                line,
                format!("variable {v} >= num_vars {num_vars}"),
            ));
        }
        if clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2] {
            return Err(Error::parse(line, "repeated variable in clause"));
        }
        clauses.push(clause);
    }
    if clauses.len() != num_clauses {
        return Err(Error::parse(
            last,
            format!("declared {num_clauses} clauses, found {}", clauses.len()),
        ));
    }
    MnaeInstance::new(num_vars, clauses)
}

/// Brute force over all `2^n` assignments; returns the first NAE witness in
/// binary counting order (variable 0 is the most significant bit, `1` = true).
pub fn nae_satisfiable(inst: &MnaeInstance) -> Result<Option<Vec<bool>>> {
    let n = inst.num_vars;
    if n > MAX_BRUTE_FORCE_VARS {
        return Err(Error::SizeGuard(format!(
            "{n} variables exceed the brute-force limit of {MAX_BRUTE_FORCE_VARS}"
        )));
    }
    let masks: Vec<u32> = inst
        .clauses
        .iter()
        .map(|c| c.iter().map(|&v| 1u32 << (n - 1 - v)).sum())
        .collect();
    for bits in (0..1u32 << n).rev() {
        if masks.iter().all(|&m| bits & m != 0 && bits & m != m) {
            return Ok(Some((0..n).map(|v| bits >> (n - 1 - v) & 1 == 1).collect()));
        }
    }
    Ok(None)
}

/// Position of a vertex inside a clause gadget `a0 b0 a1 b1 a2 c0 c1 c2`.
pub const GADGET_ORDER: [(VertexKind, usize); 8] = [
    (VertexKind::A, 0),
    (VertexKind::B, 0),
    (VertexKind::A, 1),
    (VertexKind::B, 1),
    (VertexKind::A, 2),
    (VertexKind::C, 0),
    (VertexKind::C, 1),
    (VertexKind::C, 2),
];

/// Internal edges of `H` as position pairs.
pub const GADGET_EDGES: [(usize, usize); 7] =
    [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (2, 6), (4, 7)];

pub fn a_position(h: usize) -> u8 {
    (2 * h) as u8
}

pub fn c_position(h: usize) -> u8 {
    (5 + h) as u8
}

/// The six kinds of ac-pair, named by the `I`-neighborhood of the `a` vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AcPairType {
    pub variant: u8,
    pub h: u8,
}

impl AcPairType {
    pub const ALL: [AcPairType; 6] = [
        AcPairType { variant: 0, h: 0 },
        AcPairType { variant: 0, h: 1 },
        AcPairType { variant: 0, h: 2 },
        AcPairType { variant: 1, h: 0 },
        AcPairType { variant: 1, h: 1 },
        AcPairType { variant: 1, h: 2 },
    ];

    /// Indices into `I` adjacent to the `a` vertex.
    pub fn i_neighbors(self) -> &'static [usize] {
        match (self.variant, self.h) {
            (0, 0) => &[0, 2],
            (0, 1) => &[0],
            (0, 2) => &[0, 3],
            (1, 0) => &[1, 2],
            (1, 1) => &[1],
            (1, 2) => &[1, 3],
            _ => unreachable!("invalid ac-pair type"),
        }
    }
}

/// Incremental builder for graphs made of `M'`, `x` vertices and gadgets.
/// Every attachment rule of the reduction lives here.
pub struct ReductionBuilder {
    b: GraphBuilder,
    xs: Vec<usize>,
    bs: Vec<usize>,
}

impl ReductionBuilder {
    /// Starts from `M'` plus `num_x` x-type vertices adjacent to `t2, t3`.
    pub fn new(num_x: usize) -> Self {
        let mut b = GraphBuilder::from_graph(&build_m_prime().graph);
        let xs: Vec<usize> = (0..num_x)
            .map(|_| {
                let x = b.add_vertex(VertexTag::new(VertexKind::X));
                b.add_edge(x, I_IDS[2]).unwrap();
                b.add_edge(x, I_IDS[3]).unwrap();
                x
            })
            .collect();
        ReductionBuilder {
            b,
            xs,
            bs: Vec::new(),
        }
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    fn add_a(&mut self, ty: AcPairType, copy: usize) -> usize {
        let a = self.b.add_vertex(VertexTag::gadget(
            VertexKind::A,
            copy,
            ty.variant,
            a_position(ty.h as usize),
        ));
        for &i in ty.i_neighbors() {
            self.b.add_edge(a, I_IDS[i]).unwrap();
        }
        a
    }

    fn add_c(&mut self, ty: AcPairType, copy: usize) -> usize {
        let c = self.b.add_vertex(VertexTag::gadget(
            VertexKind::C,
            copy,
            ty.variant,
            c_position(ty.h as usize),
        ));
        self.b.add_edge(c, I_PRIME_IDS[2]).unwrap();
        self.b.add_edge(c, I_PRIME_IDS[3]).unwrap();
        c
    }

    /// Adds a b-type vertex adjacent to `t0', t1'` and to `x_neighbors`.
    pub fn add_b(
        &mut self,
        copy: usize,
        variant: u8,
        position: u8,
        x_neighbors: &[usize],
    ) -> usize {
        let v = self
            .b
            .add_vertex(VertexTag::gadget(VertexKind::B, copy, variant, position));
        self.b.add_edge(v, I_PRIME_IDS[0]).unwrap();
        self.b.add_edge(v, I_PRIME_IDS[1]).unwrap();
        for &x in x_neighbors {
            self.b.add_edge(v, x).unwrap();
        }
        self.bs.push(v);
        v
    }

    /// Adds one ac-pair, the `c` vertex optionally joined to an x vertex.
    /// Returns `(a, c)`.
    pub fn add_ac_pair(&mut self, ty: AcPairType, copy: usize, x: Option<usize>) -> (usize, usize) {
        let a = self.add_a(ty, copy);
        let c = self.add_c(ty, copy);
        self.b.add_edge(a, c).unwrap();
        if let Some(x) = x {
            self.b.add_edge(c, x).unwrap();
        }
        (a, c)
    }

    /// Adds a full clause gadget `H_variant` in the order
    /// `a0 b0 a1 b1 a2 c0 c1 c2`. `c_x[h]` is the x neighbor of `c_h`;
    /// `b_x` are the x neighbors of both b vertices.
    pub fn add_gadget(
        &mut self,
        variant: u8,
        copy: usize,
        c_x: [Option<usize>; 3],
        b_x: &[usize],
    ) -> [usize; 8] {
        let mut ids = [0; 8];
        for (pos, &(kind, h)) in GADGET_ORDER.iter().enumerate() {
            let ty = AcPairType {
                variant,
                h: h as u8,
            };
            ids[pos] = match kind {
                VertexKind::A => self.add_a(ty, copy),
                VertexKind::B => self.add_b(copy, variant, pos as u8, b_x),
                VertexKind::C => {
                    let c = self.add_c(ty, copy);
                    if let Some(x) = c_x[h] {
                        self.b.add_edge(c, x).unwrap();
                    }
                    c
                }
                _ => unreachable!(),
            };
        }
        for &(p, q) in &GADGET_EDGES {
            self.b.add_edge(ids[p], ids[q]).unwrap();
        }
        ids
    }

    /// `H_variant` with both b vertices removed: three detached ac-pairs
    /// whose `c` vertices have no x neighbor.
    pub fn add_bless_gadget(&mut self, variant: u8, copy: usize) {
        for h in 0..3 {
            self.add_ac_pair(AcPairType { variant, h }, copy, None);
        }
    }

    pub fn finish(self) -> LabeledGraph {
        self.b.finish().expect("reduction graphs carry valid tags")
    }
}

/// Builds `G(phi)`.
pub fn build_reduction(inst: &MnaeInstance) -> LabeledGraph {
    let mut rb = ReductionBuilder::new(inst.num_vars);
    let xs = rb.xs().to_vec();
    let mut gadget_ids = Vec::with_capacity(2 * inst.clauses.len());
    for (j, clause) in inst.clauses.iter().enumerate() {
        let c_x = clause.map(|v| Some(xs[v]));
        for variant in 0..2 {
            // b vertices see every x vertex; edges are added once all
            // gadgets exist, so pass none here
            gadget_ids.push(rb.add_gadget(variant, j, c_x, &[]));
        }
    }
    let bs = rb.bs.clone();
    for b in bs {
        for &x in &xs {
            rb.b.add_edge(b, x).unwrap();
        }
    }
    debug_assert_eq!(gadget_ids.len(), 2 * inst.clauses.len());
    rb.finish()
}

/// Closed-form `(|V|, |E|)` of `G(phi)` for `n` variables, `m` clauses.
pub fn reduction_size(n: usize, m: usize) -> (usize, usize) {
    (
        M_PRIME_VERTICES + n + 16 * m,
        67 + 2 * n + 50 * m + 4 * n * m,
    )
}
