//! The nine fixed graphs whose P19-freeness carries the hardness argument.
//!
//! Every graph starts with `M'` on ids `0..22`, then its x vertices, then
//! gadget vertices in declaration order. Attachment rules are the ones of
//! [`ReductionBuilder`]; in particular x vertices always see `t2, t3` and
//! every b vertex sees `t0', t1'`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadgets::{AcPairType, ReductionBuilder};
use crate::graph::{Connector, LabeledGraph, VertexKind};
use crate::snake::is_induced_path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoreGraphId {
    /// `i` copies of `H0` and `5 - i` copies of `H1`.
    G0(u8),
    G1,
    G2,
    G3,
}

impl CoreGraphId {
    pub const ALL: [CoreGraphId; 9] = [
        CoreGraphId::G0(0),
        CoreGraphId::G0(1),
        CoreGraphId::G0(2),
        CoreGraphId::G0(3),
        CoreGraphId::G0(4),
        CoreGraphId::G0(5),
        CoreGraphId::G1,
        CoreGraphId::G2,
        CoreGraphId::G3,
    ];

    /// Stem of the golden file name, e.g. `g0_3` or `g2`.
    pub fn file_stem(self) -> String {
        match self {
            CoreGraphId::G0(i) => format!("g0_{i}"),
            CoreGraphId::G1 => "g1".into(),
            CoreGraphId::G2 => "g2".into(),
            CoreGraphId::G3 => "g3".into(),
        }
    }
}

impl fmt::Display for CoreGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreGraphId::G0(i) => write!(f, "G0,{i}"),
            CoreGraphId::G1 => f.write_str("G1"),
            CoreGraphId::G2 => f.write_str("G2"),
            CoreGraphId::G3 => f.write_str("G3"),
        }
    }
}

impl FromStr for CoreGraphId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CoreGraphId::ALL
            .into_iter()
            .find(|id| id.file_stem() == s || id.to_string() == s)
            .ok_or_else(|| Error::InvalidQuery(format!("unknown core graph {s:?}")))
    }
}

fn add_bless_block(rb: &mut ReductionBuilder, next_copy: &mut usize) {
    for variant in 0..2 {
        for _ in 0..4 {
            rb.add_bless_gadget(variant, *next_copy);
            *next_copy += 1;
        }
    }
}

pub fn build_core(id: CoreGraphId) -> Result<LabeledGraph> {
    let mut copy = 0;
    let g = match id {
        CoreGraphId::G0(i) => {
            if i > 5 {
                return Err(Error::InvalidQuery(format!("G0,{i} does not exist")));
            }
            let mut rb = ReductionBuilder::new(0);
            for k in 0..5u8 {
                let variant = u8::from(k >= i);
                rb.add_gadget(variant, k as usize, [None; 3], &[]);
            }
            rb.finish()
        }
        CoreGraphId::G1 => {
            let mut rb = ReductionBuilder::new(1);
            let v = rb.xs()[0];
            for ty in AcPairType::ALL {
                rb.add_ac_pair(ty, copy, Some(v));
                copy += 1;
            }
            for variant in 0..2 {
                rb.add_gadget(variant, copy, [None; 3], &[v]);
                copy += 1;
            }
            add_bless_block(&mut rb, &mut copy);
            rb.finish()
        }
        CoreGraphId::G2 => {
            let mut rb = ReductionBuilder::new(1);
            let v = rb.xs()[0];
            for variant in [0, 0, 1, 1] {
                rb.add_gadget(variant, copy, [None; 3], &[v]);
                copy += 1;
            }
            add_bless_block(&mut rb, &mut copy);
            rb.finish()
        }
        CoreGraphId::G3 => {
            let mut rb = ReductionBuilder::new(2);
            let xs = rb.xs().to_vec();
            for &x in &xs {
                for ty in AcPairType::ALL {
                    for _ in 0..2 {
                        rb.add_ac_pair(ty, copy, Some(x));
                        copy += 1;
                    }
                }
            }
            rb.add_b(copy, 0, 1, &xs);
            copy += 1;
            add_bless_block(&mut rb, &mut copy);
            rb.finish()
        }
    };
    Ok(g)
}

/// One step of a vertex-type pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternStep {
    Kind(VertexKind),
    Connector(Connector),
}

impl PatternStep {
    fn matches(self, g: &LabeledGraph, v: usize) -> bool {
        match self {
            PatternStep::Kind(k) => g.kind(v) == k && g.tag(v).connector.is_none(),
            PatternStep::Connector(c) => g.tag(v).connector == Some(c),
        }
    }
}

/// `ababa - t3 - ababac - t3' - cabab`
pub fn witness_pattern() -> Vec<PatternStep> {
    use PatternStep::{Connector as T, Kind as K};
    use VertexKind::{A, B, C};
    vec![
        K(A),
        K(B),
        K(A),
        K(B),
        K(A),
        T(Connector::I(3)),
        K(A),
        K(B),
        K(A),
        K(B),
        K(A),
        K(C),
        T(Connector::IPrime(3)),
        K(C),
        K(A),
        K(B),
        K(A),
        K(B),
    ]
}

/// First-fit embedding (by vertex id at every step) of `pattern` as an
/// induced path of `g`.
pub fn embed_induced_path(g: &LabeledGraph, pattern: &[PatternStep]) -> Option<Vec<usize>> {
    fn extend(g: &LabeledGraph, pattern: &[PatternStep], path: &mut Vec<usize>) -> bool {
        let Some(&step) = pattern.get(path.len()) else {
            return true;
        };
        let candidates: Vec<usize> = match path.last() {
            None => (0..g.n()).collect(),
            Some(&tail) => g.neighbors(tail).to_vec(),
        };
        for v in candidates {
            let fits = step.matches(g, v)
                && !path.contains(&v)
                && path[..path.len().saturating_sub(1)]
                    .iter()
                    .all(|&p| !g.has_edge(p, v));
            if fits {
                path.push(v);
                if extend(g, pattern, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let mut path = Vec::with_capacity(pattern.len());
    extend(g, pattern, &mut path).then_some(path)
}

/// The 18-vertex induced path of type `ababa-t3-ababac-t3'-cabab` in `G0,i`.
pub fn realize_witness_path(id: CoreGraphId) -> Result<Vec<usize>> {
    if !matches!(id, CoreGraphId::G0(_)) {
        return Err(Error::InvalidQuery(format!(
            "witness pattern is defined for G0,i only, not {id}"
        )));
    }
    let g = build_core(id)?;
    let path = embed_induced_path(&g, &witness_pattern())
        .ok_or_else(|| Error::Construction(format!("pattern does not embed in {id}")))?;
    if path.len() != 18 || !is_induced_path(&g, &path) {
        return Err(Error::Construction(format!(
            "embedded pattern in {id} is not an induced path"
        )));
    }
    Ok(path)
}

pub fn type_string(g: &LabeledGraph, path: &[usize]) -> Vec<String> {
    path.iter().map(|&v| g.tag(v).short_label()).collect()
}
