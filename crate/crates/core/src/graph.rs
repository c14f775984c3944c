//! Undirected simple graphs whose vertices carry a semantic tag.
//!
//! Vertex ids are contiguous from `0`. A [`LabeledGraph`] is immutable once
//! built; construction goes through [`GraphBuilder`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Role of a vertex inside a reduction graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// Untyped vertex of a graph that is not a reduction graph.
    Plain,
    Mycielski,
    X,
    A,
    B,
    C,
}

impl VertexKind {
    pub const ALL: [VertexKind; 6] = [
        VertexKind::Plain,
        VertexKind::Mycielski,
        VertexKind::X,
        VertexKind::A,
        VertexKind::B,
        VertexKind::C,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VertexKind::Plain => "plain",
            VertexKind::Mycielski => "mycielski",
            VertexKind::X => "x",
            VertexKind::A => "a",
            VertexKind::B => "b",
            VertexKind::C => "c",
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VertexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidTag(format!("unknown vertex kind {s:?}")))
    }
}

/// Membership in one of the two connector quadruples of the trimmed
/// Mycielski gadget: `I = (t0..t3)` or `I' = (t0'..t3')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connector {
    I(u8),
    IPrime(u8),
}

impl Connector {
    pub fn index(self) -> u8 {
        match self {
            Connector::I(i) | Connector::IPrime(i) => i,
        }
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connector::I(i) => write!(f, "t{i}"),
            Connector::IPrime(i) => write!(f, "t{i}'"),
        }
    }
}

impl FromStr for Connector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidTag(format!("bad connector {s:?}"));
        let rest = s.strip_prefix('t').ok_or_else(bad)?;
        let (digits, prime) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let idx: u8 = digits.parse().map_err(|_| bad())?;
        if idx > 3 || digits.len() != 1 {
            return Err(bad());
        }
        Ok(if prime {
            Connector::IPrime(idx)
        } else {
            Connector::I(idx)
        })
    }
}

/// Where a gadget vertex came from: clause (or gadget copy) index, the
/// gadget variant `eps`, and the position inside `a0 b0 a1 b1 a2 c0 c1 c2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Provenance {
    pub clause: usize,
    pub variant: u8,
    pub position: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexTag {
    pub kind: VertexKind,
    pub connector: Option<Connector>,
    pub provenance: Option<Provenance>,
}

impl VertexTag {
    pub const PLAIN: VertexTag = VertexTag::new(VertexKind::Plain);

    pub const fn new(kind: VertexKind) -> Self {
        VertexTag {
            kind,
            connector: None,
            provenance: None,
        }
    }

    pub const fn connector(c: Connector) -> Self {
        VertexTag {
            kind: VertexKind::Mycielski,
            connector: Some(c),
            provenance: None,
        }
    }

    pub const fn gadget(kind: VertexKind, clause: usize, variant: u8, position: u8) -> Self {
        VertexTag {
            kind,
            connector: None,
            provenance: Some(Provenance {
                clause,
                variant,
                position,
            }),
        }
    }

    /// Short label used in type strings of paths: `a`, `b`, `t3`, `t3'`, ...
    pub fn short_label(&self) -> String {
        match (self.kind, self.connector) {
            (_, Some(c)) => c.to_string(),
            (VertexKind::Mycielski, None) => "m".to_string(),
            (VertexKind::Plain, None) => "v".to_string(),
            (k, None) => k.as_str().to_string(),
        }
    }
}

impl Default for VertexTag {
    fn default() -> Self {
        VertexTag::PLAIN
    }
}

/// Finished, immutable labeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    tags: Vec<VertexTag>,
    adj: Vec<Vec<usize>>,
    rows: Vec<Vec<u64>>,
    edge_count: usize,
}

impl LabeledGraph {
    pub fn n(&self) -> usize {
        self.tags.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn tag(&self, v: usize) -> &VertexTag {
        &self.tags[v]
    }

    pub fn tags(&self) -> &[VertexTag] {
        &self.tags
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        self.tags[v].kind
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && (self.rows[u][v / 64] >> (v % 64)) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices_of_kind(&self, kind: VertexKind) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.kind(v) == kind).collect()
    }

    pub fn connector_vertex(&self, c: Connector) -> Option<usize> {
        self.tags.iter().position(|t| t.connector == Some(c))
    }

    /// `t0..t3` when the graph carries the complete quadruple `I`.
    pub fn connector_quadruple(&self) -> Option<[usize; 4]> {
        let mut out = [0; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.connector_vertex(Connector::I(i as u8))?;
        }
        Some(out)
    }

    fn check_id(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { id: v, n: self.n() });
        }
        Ok(())
    }

    /// Copy of the graph with the edge `{u, v}` added. Idempotent.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<LabeledGraph> {
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v)?;
        b.finish()
    }

    /// Graph obtained by merging `v` into `u`. The merged vertex keeps the
    /// tag of `u`; ids above `v` shift down by one.
    pub fn identify_vertices(&self, u: usize, v: usize) -> Result<LabeledGraph> {
        self.check_id(u)?;
        self.check_id(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::Construction(format!(
                "cannot identify adjacent vertices {u} and {v}"
            )));
        }
        let map = |w: usize| -> usize {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let mut b = GraphBuilder::new();
        for w in (0..self.n()).filter(|&w| w != v) {
            b.add_vertex(self.tags[w]);
        }
        for (a, c) in self.edges() {
            b.add_edge(map(a), map(c))?;
        }
        b.finish()
    }

    /// Subgraph induced by `set`, plus the order-preserving map from new ids
    /// to old ids.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(LabeledGraph, Vec<usize>)> {
        for &v in set {
            self.check_id(v)?;
        }
        let keep: Vec<usize> = set
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut new_id = vec![usize::MAX; self.n()];
        let mut b = GraphBuilder::new();
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
            b.add_vertex(self.tags[v]);
        }
        for (u, v) in self.edges() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                b.add_edge(new_id[u], new_id[v])?;
            }
        }
        Ok((b.finish()?, keep))
    }

    /// One triangle, if any. Scans each edge's endpoint rows.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let common =
                self.rows[u]
                    .iter()
                    .zip(&self.rows[v])
                    .enumerate()
                    .find_map(|(i, (a, b))| {
                        let w = a & b;
                        (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
                    });
            if let Some(w) = common {
                let mut t = [u, v, w];
                t.sort_unstable();
                return Some(t);
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    pub fn path(n: usize) -> LabeledGraph {
        let mut b = GraphBuilder::with_vertices(n, VertexTag::PLAIN);
        for i in 1..n {
            b.add_edge(i - 1, i).expect("valid path edge");
        }
        b.finish().expect("plain graph")
    }

    pub fn cycle(n: usize) -> LabeledGraph {
        let mut b = GraphBuilder::with_vertices(n, VertexTag::PLAIN);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n).expect("valid cycle edge");
        }
        b.finish().expect("plain graph")
    }

    pub fn complete(n: usize) -> LabeledGraph {
        let mut b = GraphBuilder::with_vertices(n, VertexTag::PLAIN);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("valid clique edge");
            }
        }
        b.finish().expect("plain graph")
    }
}

/// Mutable staging area for a [`LabeledGraph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    tags: Vec<VertexTag>,
    adj: Vec<BTreeSet<usize>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(n: usize, tag: VertexTag) -> Self {
        GraphBuilder {
            tags: vec![tag; n],
            adj: vec![BTreeSet::new(); n],
        }
    }

    pub fn from_graph(g: &LabeledGraph) -> Self {
        GraphBuilder {
            tags: g.tags.clone(),
            adj: g
                .adj
                .iter()
                .map(|ns| ns.iter().copied().collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.tags.len()
    }

    pub fn add_vertex(&mut self, tag: VertexTag) -> usize {
        self.tags.push(tag);
        self.adj.push(BTreeSet::new());
        self.tags.len() - 1
    }

    pub fn set_tag(&mut self, v: usize, tag: VertexTag) {
        self.tags[v] = tag;
    }

    pub fn tag(&self, v: usize) -> &VertexTag {
        &self.tags[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Adds `{u, v}`; returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for id in [u, v] {
            if id >= n {
                return Err(Error::VertexOutOfRange { id, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let had = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        had
    }

    /// Validates tag invariants and freezes the graph.
    pub fn finish(self) -> Result<LabeledGraph> {
        let mut seen = BTreeSet::new();
        for (v, t) in self.tags.iter().enumerate() {
            if let Some(c) = t.connector {
                if t.kind != VertexKind::Mycielski {
                    return Err(Error::InvalidTag(format!(
                        "vertex {v} of kind {} carries connector {c}",
                        t.kind
                    )));
                }
                if !seen.insert(c) {
                    return Err(Error::InvalidTag(format!("connector {c} assigned twice")));
                }
            }
        }
        let n = self.tags.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; n];
        let mut edge_count = 0;
        let adj: Vec<Vec<usize>> = self
            .adj
            .into_iter()
            .enumerate()
            .map(|(u, ns)| {
                for &v in &ns {
                    rows[u][v / 64] |= 1 << (v % 64);
                    if v > u {
                        edge_count += 1;
                    }
                }
                ns.into_iter().collect()
            })
            .collect();
        Ok(LabeledGraph {
            tags: self.tags,
            adj,
            rows,
            edge_count,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_edge_on_k2() {
        let mut b = GraphBuilder::with_vertices(2, VertexTag::PLAIN);
        assert!(b.add_edge(0, 1).unwrap());
        assert!(!b.add_edge(0, 1).unwrap());
        let g = b.finish().unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(1, 0));
        assert_eq!(g.with_edge(1, 0).unwrap().m(), 1);
    }

    #[test]
    fn add_edge_errors() {
        let g = GraphBuilder::with_vertices(2, VertexTag::PLAIN)
            .finish()
            .unwrap();
        assert_eq!(g.with_edge(0, 0), Err(Error::SelfLoop(0)));
        assert!(matches!(
            g.with_edge(0, 2),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        ));
        assert!(Error::SelfLoop(0).to_string().contains("self-loop"));
    }

    #[test]
    fn triangle_checks() {
        assert!(LabeledGraph::cycle(5).is_triangle_free());
        assert_eq!(LabeledGraph::complete(3).find_triangle(), Some([0, 1, 2]));
        assert!(!LabeledGraph::complete(4).is_triangle_free());
    }

    #[test]
    fn induced_subgraph_of_cycle() {
        let c5 = LabeledGraph::cycle(5);
        let (p3, remap) = c5.induced_subgraph(&[3, 1, 2]).unwrap();
        assert_eq!(remap, vec![1, 2, 3]);
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let (empty, remap) = c5.induced_subgraph(&[]).unwrap();
        assert_eq!((empty.n(), empty.m(), remap.len()), (0, 0, 0));
        assert!(c5.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn identify_merges_neighborhoods() {
        // P3 0-1-2: merging the two ends gives K2.
        let g = LabeledGraph::path(3).identify_vertices(0, 2).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(LabeledGraph::path(3).identify_vertices(0, 1).is_err());
    }

    #[test]
    fn connector_invariants_enforced() {
        let mut b = GraphBuilder::new();
        b.add_vertex(VertexTag::connector(Connector::I(0)));
        b.add_vertex(VertexTag::connector(Connector::I(0)));
        assert!(b.finish().is_err());
        let mut b = GraphBuilder::new();
        b.add_vertex(VertexTag {
            kind: VertexKind::A,
            connector: Some(Connector::I(1)),
            provenance: None,
        });
        assert!(b.finish().is_err());
    }

    #[test]
    fn connector_syntax() {
        assert_eq!("t2'".parse::<Connector>().unwrap(), Connector::IPrime(2));
        assert_eq!("t0".parse::<Connector>().unwrap(), Connector::I(0));
        assert!("t4".parse::<Connector>().is_err());
        assert!("x1".parse::<Connector>().is_err());
        assert_eq!(Connector::IPrime(3).to_string(), "t3'");
    }
}
