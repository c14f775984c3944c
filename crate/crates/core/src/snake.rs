//! Exact search for long induced paths ("snakes").
//!
//! Paths grow at their tail only. A vertex may extend the path iff it is
//! adjacent to the tail and non-adjacent to every other path vertex, so the
//! state is the tail plus the union `F` of closed neighborhoods of the
//! non-tail vertices. A subtree is cut when the path plus everything still
//! reachable outside `F` cannot reach the goal.
//!
//! Two symmetry reductions are applied, both preserving the decision:
//!
//! * **Twins.** Candidates in the same component copy with the same kind and
//!   the same neighborhood outside the new forbidden set lead to isomorphic
//!   subtrees; only the lowest id is expanded.
//! * **Interchangeable copies.** Components of `G - S` (`S` = Mycielski and
//!   x vertices) that are isomorphic with identical attachments to `S` form
//!   a class. Swapping two copies is an automorphism, so it suffices to enter
//!   the copies of a class in rank order.
//!
//! Top-level subtrees (start vertex, second vertex) are searched in
//! parallel. The reported witness is the one from the lowest-indexed
//! subtree, which makes decisions and witnesses independent of the thread
//! count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, VertexKind};

pub const NAIVE_MAX_VERTICES: usize = 20;
const MAX_VERTICES: usize = 512;
const MAX_COPY_SIZE: usize = 24;
const NO_COMP: u32 = u32::MAX;
const FLUSH_EVERY: u64 = 4096;

/// Validator independent of the search: distinct vertices, consecutive
/// pairs adjacent, all other pairs non-adjacent.
pub fn is_induced_path(g: &LabeledGraph, seq: &[usize]) -> bool {
    if seq.is_empty() || seq.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for (i, &u) in seq.iter().enumerate() {
        for (j, &v) in seq.iter().enumerate().skip(i + 1) {
            if u == v || g.has_edge(u, v) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

fn tag_count(g: &LabeledGraph, seq: &[usize], kind: VertexKind) -> usize {
    seq.iter().filter(|&&v| g.kind(v) == kind).count()
}

/// Which symmetry reductions the pruned search applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reductions {
    pub twins: bool,
    pub copies: bool,
}

impl Default for Reductions {
    fn default() -> Self {
        Reductions {
            twins: true,
            copies: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PathQuery<'g> {
    pub graph: &'g LabeledGraph,
    pub target: usize,
    /// Require at least `count` path vertices of the given kind.
    pub tag_at_least: Option<(VertexKind, usize)>,
    pub budget: Budget,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub reductions: Reductions,
}

impl<'g> PathQuery<'g> {
    pub fn new(graph: &'g LabeledGraph, target: usize) -> Self {
        PathQuery {
            graph,
            target,
            tag_at_least: None,
            budget: Budget::UNLIMITED,
            threads: None,
            reductions: Reductions::default(),
        }
    }

    pub fn with_tag(mut self, kind: VertexKind, count: usize) -> Self {
        self.tag_at_least = Some((kind, count));
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_reductions(mut self, reductions: Reductions) -> Self {
        self.reductions = reductions;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PathDecision {
    Found { witness: Vec<usize> },
    ExhaustedNo,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub decision: PathDecision,
    pub nodes: u64,
    pub elapsed: Duration,
    /// Longest induced path meeting the tag constraint seen during the run.
    pub max_order_found: usize,
}

impl SearchReport {
    pub fn found(&self) -> Option<bool> {
        match self.decision {
            PathDecision::Found { .. } => Some(true),
            PathDecision::ExhaustedNo => Some(false),
            PathDecision::BudgetExhausted => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match &self.decision {
            PathDecision::Found { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Decide(usize),
    Maximize,
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    /// Lowest task index holding a witness (decision mode).
    found: AtomicUsize,
    /// Best order meeting the tag constraint seen so far.
    best: AtomicUsize,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    flush_every: u64,
}

impl Shared {
    fn new(budget: &Budget, start: Instant) -> Self {
        Shared {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            found: AtomicUsize::new(usize::MAX),
            best: AtomicUsize::new(0),
            max_nodes: budget.max_nodes,
            deadline: budget.deadline(start),
            flush_every: budget
                .max_nodes
                .map_or(FLUSH_EVERY, |m| (m / 64).clamp(1, FLUSH_EVERY)),
        }
    }

    fn flush(&self, local: u64) {
        let total = self.nodes.fetch_add(local, Ordering::Relaxed) + local;
        if self.max_nodes.is_some_and(|m| total > m)
            || self.deadline.is_some_and(|d| Instant::now() > d)
        {
            self.stop.store(true, Ordering::Relaxed);
        }
    }
}

struct Prepared<const W: usize> {
    adj: Vec<Bits<W>>,
    all: Bits<W>,
    tagged: Bits<W>,
    kind: Vec<VertexKind>,
    comp: Vec<u32>,
    /// `(class, rank)` per component.
    class_rank: Vec<(u32, u32)>,
    num_classes: usize,
    start_order: Vec<usize>,
    reductions: Reductions,
}

impl<const W: usize> Prepared<W> {
    fn new(g: &LabeledGraph, tag: Option<VertexKind>, reductions: Reductions) -> Self {
        let n = g.n();
        let mut adj = vec![Bits::EMPTY; n];
        for (u, v) in g.edges() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let mut tagged = Bits::EMPTY;
        if let Some(k) = tag {
            for v in g.vertices_of_kind(k) {
                tagged.insert(v);
            }
        }
        let kind: Vec<VertexKind> = (0..n).map(|v| g.kind(v)).collect();
        let (comp, class_rank, num_classes) = copy_classes(&adj, &kind);
        let mut start_order: Vec<usize> = (0..n).collect();
        start_order.sort_by_key(|&v| (g.degree(v), v));
        Prepared {
            adj,
            all: Bits::prefix(n),
            tagged,
            kind,
            comp,
            class_rank,
            num_classes,
            start_order,
            reductions,
        }
    }

    /// Rank-order rule for entering `v`. Returns `Err(())` when `v` lies in
    /// a copy that may not be entered yet, `Ok(Some(class))` when `v`
    /// enters the next copy of `class`.
    fn copy_step(&self, touched: &[u32], v: usize) -> std::result::Result<Option<usize>, ()> {
        if !self.reductions.copies || self.comp[v] == NO_COMP {
            return Ok(None);
        }
        let (class, rank) = self.class_rank[self.comp[v] as usize];
        let t = touched[class as usize];
        match rank.cmp(&t) {
            std::cmp::Ordering::Less => Ok(None),
            std::cmp::Ordering::Equal => Ok(Some(class as usize)),
            std::cmp::Ordering::Greater => Err(()),
        }
    }
}

/// Components of `G - S` grouped into classes of interchangeable copies.
fn copy_classes<const W: usize>(
    adj: &[Bits<W>],
    kind: &[VertexKind],
) -> (Vec<u32>, Vec<(u32, u32)>, usize) {
    let n = adj.len();
    let in_sep = |v: usize| matches!(kind[v], VertexKind::Mycielski | VertexKind::X);
    let mut sep = Bits::<W>::EMPTY;
    for v in (0..n).filter(|&v| in_sep(v)) {
        sep.insert(v);
    }
    let mut comp = vec![NO_COMP; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if in_sep(s) || comp[s] != NO_COMP {
            continue;
        }
        let id = members.len() as u32;
        let mut stack = vec![s];
        let mut list = Vec::new();
        comp[s] = id;
        while let Some(v) = stack.pop() {
            list.push(v);
            for w in (adj[v] & !sep).iter() {
                if comp[w] == NO_COMP {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        list.sort_unstable();
        members.push(list);
    }

    let sig = |v: usize| (kind[v], adj[v] & sep, (adj[v] & !sep).len());
    let isomorphic = |a: &[usize], b: &[usize]| -> bool {
        if a.len() != b.len() || a.len() > MAX_COPY_SIZE {
            return false;
        }
        let mut sa: Vec<_> = a.iter().map(|&v| sig(v)).collect();
        let mut sb: Vec<_> = b.iter().map(|&v| sig(v)).collect();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
        fn extend<const W: usize>(
            i: usize,
            a: &[usize],
            b: &[usize],
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            adj: &[Bits<W>],
            sig: &dyn Fn(usize) -> (VertexKind, Bits<W>, usize),
        ) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if used[j] || sig(a[i]) != sig(b[j]) {
                    continue;
                }
                let consistent =
                    (0..i).all(|p| adj[a[p]].contains(a[i]) == adj[map[p]].contains(b[j]));
                if consistent {
                    used[j] = true;
                    map.push(b[j]);
                    if extend(i + 1, a, b, map, used, adj, sig) {
                        return true;
                    }
                    map.pop();
                    used[j] = false;
                }
            }
            false
        }
        extend(
            0,
            a,
            b,
            &mut Vec::new(),
            &mut vec![false; b.len()],
            adj,
            &sig,
        )
    };

    let mut reps: Vec<usize> = Vec::new();
    let mut class_sizes: Vec<u32> = Vec::new();
    let mut class_rank = Vec::with_capacity(members.len());
    for (c, list) in members.iter().enumerate() {
        match reps.iter().position(|&r| isomorphic(&members[r], list)) {
            Some(class) => {
                class_rank.push((class as u32, class_sizes[class]));
                class_sizes[class] += 1;
            }
            None => {
                class_rank.push((reps.len() as u32, 0));
                reps.push(c);
                class_sizes.push(1);
            }
        }
    }
    (comp, class_rank, reps.len())
}

struct Worker<'a, const W: usize> {
    p: &'a Prepared<W>,
    shared: &'a Shared,
    mode: Mode,
    min_tags: usize,
    task: usize,
    path: Vec<usize>,
    touched: Vec<u32>,
    local_nodes: u64,
    local_best: usize,
    witness: Option<Vec<usize>>,
}

impl<const W: usize> Worker<'_, W> {
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(self.shared.flush_every) {
            self.shared.flush(self.shared.flush_every);
        }
        !self.should_abort()
    }

    fn should_abort(&self) -> bool {
        self.shared.stop.load(Ordering::Relaxed)
            || (matches!(self.mode, Mode::Decide(_))
                && self.shared.found.load(Ordering::Relaxed) < self.task)
    }

    fn finish(&mut self) {
        self.shared
            .flush(self.local_nodes % self.shared.flush_every);
        self.shared
            .best
            .fetch_max(self.local_best, Ordering::Relaxed);
    }

    /// Explores all extensions of `self.path`. Returns `true` to unwind.
    fn dfs(&mut self, forbidden: Bits<W>, tags: usize) -> bool {
        let p = self.p;
        let len = self.path.len();
        let tail = *self.path.last().unwrap();
        let goal = match self.mode {
            Mode::Decide(t) => t,
            Mode::Maximize => {
                self.shared
                    .best
                    .load(Ordering::Relaxed)
                    .max(self.local_best)
                    + 1
            }
        };
        if tags >= self.min_tags && len > self.local_best {
            self.local_best = len;
            match self.mode {
                Mode::Decide(t) if len == t => {
                    self.witness = Some(self.path.clone());
                    self.shared.found.fetch_min(self.task, Ordering::Relaxed);
                    return true;
                }
                Mode::Maximize => {
                    self.witness = Some(self.path.clone());
                    self.shared.best.fetch_max(len, Ordering::Relaxed);
                }
                _ => {}
            }
        }
        if matches!(self.mode, Mode::Decide(t) if len >= t) {
            return false;
        }

        let mut tail_bit = Bits::EMPTY;
        tail_bit.insert(tail);
        let avail = p.all & !forbidden & !tail_bit;
        let cands = p.adj[tail] & avail;
        if cands.is_empty() {
            return false;
        }
        // vertices after the next one avoid N[tail]; bound by reachability
        let beyond = avail & !p.adj[tail];
        let mut reach = Bits::EMPTY;
        let mut frontier = cands;
        loop {
            let mut next = Bits::EMPTY;
            for v in frontier.iter() {
                next |= p.adj[v];
            }
            next &= beyond & !reach;
            if next.is_empty() {
                break;
            }
            reach |= next;
            frontier = next;
        }
        if len + 1 + reach.len() < goal {
            return false;
        }
        if self.min_tags > 0 {
            let first = usize::from(!(cands & p.tagged).is_empty());
            if tags + first + (reach & p.tagged).len() < self.min_tags {
                return false;
            }
        }

        let next_forbidden = forbidden | p.adj[tail] | tail_bit;
        let mut seen: Vec<(u32, VertexKind, Bits<W>)> = Vec::new();
        for v in cands.iter() {
            let Ok(entered) = p.copy_step(&self.touched, v) else {
                continue;
            };
            if p.reductions.twins {
                let key = (p.comp[v], p.kind[v], p.adj[v] & !next_forbidden);
                if seen.contains(&key) {
                    continue;
                }
                seen.push(key);
            }
            if !self.tick() {
                return true;
            }
            if let Some(c) = entered {
                self.touched[c] += 1;
            }
            self.path.push(v);
            let stop = self.dfs(next_forbidden, tags + usize::from(p.tagged.contains(v)));
            self.path.pop();
            if let Some(c) = entered {
                self.touched[c] -= 1;
            }
            if stop {
                return true;
            }
        }
        false
    }
}

struct RunOutcome {
    /// Witness from the lowest-indexed task (decision) or any best task (maximize).
    witness: Option<Vec<usize>>,
    best: usize,
    stopped: bool,
    nodes: u64,
}

fn run<const W: usize>(
    g: &LabeledGraph,
    mode: Mode,
    tag: Option<(VertexKind, usize)>,
    budget: &Budget,
    threads: Option<usize>,
    reductions: Reductions,
    start: Instant,
) -> Result<RunOutcome> {
    let p = Prepared::<W>::new(g, tag.map(|(k, _)| k), reductions);
    let min_tags = tag.map_or(0, |(_, c)| c);
    let shared = Shared::new(budget, start);

    // single-vertex paths and the (start, second) task list
    let mut tasks: Vec<(usize, usize)> = Vec::new();
    let mut single: Option<usize> = None;
    let touched0 = vec![0u32; p.num_classes];
    for &s in &p.start_order {
        let Ok(entered) = p.copy_step(&touched0, s) else {
            continue;
        };
        if usize::from(p.tagged.contains(s)) >= min_tags && single.is_none() {
            single = Some(s);
        }
        let mut touched = touched0.clone();
        if let Some(c) = entered {
            touched[c] += 1;
        }
        let forbidden = p.adj[s] | Bits::single(s);
        let mut seen: Vec<(u32, VertexKind, Bits<W>)> = Vec::new();
        for v in p.adj[s].iter() {
            if p.copy_step(&touched, v).is_err() {
                continue;
            }
            if reductions.twins {
                let key = (p.comp[v], p.kind[v], p.adj[v] & !forbidden);
                if seen.contains(&key) {
                    continue;
                }
                seen.push(key);
            }
            tasks.push((s, v));
        }
    }
    if let Some(s) = single {
        if mode == Mode::Decide(1) {
            return Ok(RunOutcome {
                witness: Some(vec![s]),
                best: 1,
                stopped: false,
                nodes: 0,
            });
        }
        shared.best.store(1, Ordering::Relaxed);
    }
    if mode == Mode::Decide(1) {
        return Ok(RunOutcome {
            witness: None,
            best: 0,
            stopped: false,
            nodes: 0,
        });
    }

    let solve = |(idx, &(s, v)): (usize, &(usize, usize))| -> (Option<Vec<usize>>, usize) {
        if shared.stop.load(Ordering::Relaxed)
            || (matches!(mode, Mode::Decide(_)) && shared.found.load(Ordering::Relaxed) < idx)
        {
            return (None, 0);
        }
        let mut touched = vec![0u32; p.num_classes];
        for u in [s, v] {
            if let Ok(Some(c)) = p.copy_step(&touched, u) {
                touched[c] += 1;
            }
        }
        let mut w = Worker {
            p: &p,
            shared: &shared,
            mode,
            min_tags,
            task: idx,
            path: vec![s, v],
            touched,
            local_nodes: 1,
            local_best: 0,
            witness: None,
        };
        let tags = usize::from(p.tagged.contains(s)) + usize::from(p.tagged.contains(v));
        w.dfs(p.adj[s] | Bits::single(s), tags);
        w.finish();
        (w.witness, w.local_best)
    };

    let results: Vec<(Option<Vec<usize>>, usize)> = match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::InvalidQuery(format!("thread pool: {e}")))?
            .install(|| tasks.par_iter().enumerate().map(solve).collect()),
        None => tasks.par_iter().enumerate().map(solve).collect(),
    };

    let best = results
        .iter()
        .map(|r| r.1)
        .max()
        .unwrap_or(0)
        .max(shared.best.load(Ordering::Relaxed));
    let witness = match mode {
        Mode::Decide(_) => results.into_iter().find_map(|r| r.0),
        Mode::Maximize => results
            .into_iter()
            .filter_map(|r| r.0)
            .max_by_key(Vec::len)
            .or_else(|| single.filter(|_| best == 1).map(|s| vec![s])),
    };
    Ok(RunOutcome {
        witness,
        best,
        stopped: shared.stop.load(Ordering::Relaxed),
        nodes: shared.nodes.load(Ordering::Relaxed),
    })
}

fn dispatch(
    g: &LabeledGraph,
    mode: Mode,
    tag: Option<(VertexKind, usize)>,
    budget: &Budget,
    threads: Option<usize>,
    reductions: Reductions,
    start: Instant,
) -> Result<RunOutcome> {
    match g.n() {
        0..=64 => run::<1>(g, mode, tag, budget, threads, reductions, start),
        65..=128 => run::<2>(g, mode, tag, budget, threads, reductions, start),
        129..=256 => run::<4>(g, mode, tag, budget, threads, reductions, start),
        257..=MAX_VERTICES => run::<8>(g, mode, tag, budget, threads, reductions, start),
        n => Err(Error::SizeGuard(format!(
            "induced-path search supports at most {MAX_VERTICES} vertices, graph has {n}"
        ))),
    }
}

fn check_witness(g: &LabeledGraph, w: &[usize], order: usize, tag: Option<(VertexKind, usize)>) {
    assert!(
        w.len() == order
            && is_induced_path(g, w)
            && tag.is_none_or(|(k, c)| tag_count(g, w, k) >= c),
        "induced-path search produced an invalid witness {w:?}"
    );
}

/// Decides whether `q.graph` contains an induced path on exactly
/// `q.target` vertices (meeting the tag constraint, if any).
pub fn has_induced_path(q: &PathQuery<'_>) -> Result<SearchReport> {
    let start = Instant::now();
    let g = q.graph;
    if q.target == 0 || q.target > g.n() {
        return Err(Error::InvalidQuery(format!(
            "target order {} outside 1..={}",
            q.target,
            g.n()
        )));
    }
    let out = dispatch(
        g,
        Mode::Decide(q.target),
        q.tag_at_least,
        &q.budget,
        q.threads,
        q.reductions,
        start,
    )?;
    let decision = match out.witness {
        Some(w) => {
            check_witness(g, &w, q.target, q.tag_at_least);
            PathDecision::Found { witness: w }
        }
        None if out.stopped => PathDecision::BudgetExhausted,
        None => PathDecision::ExhaustedNo,
    };
    let max_order_found = match decision {
        PathDecision::Found { .. } => q.target,
        _ => out.best.min(q.target),
    };
    Ok(SearchReport {
        decision,
        nodes: out.nodes,
        elapsed: start.elapsed(),
        max_order_found,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongestReport {
    /// Maximum order (exact when `exhaustive`, best-so-far otherwise).
    /// `None` when no induced path meets the tag constraint.
    pub order: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub exhaustive: bool,
    pub nodes: u64,
    pub elapsed: Duration,
}

fn maximize(
    g: &LabeledGraph,
    tag: Option<(VertexKind, usize)>,
    budget: &Budget,
    threads: Option<usize>,
    reductions: Reductions,
) -> Result<LongestReport> {
    let start = Instant::now();
    if g.n() == 0 {
        return Ok(LongestReport {
            order: None,
            witness: None,
            exhaustive: true,
            nodes: 0,
            elapsed: start.elapsed(),
        });
    }
    let out = dispatch(g, Mode::Maximize, tag, budget, threads, reductions, start)?;
    let mut nodes = out.nodes;
    let mut witness = out.witness;
    let exhaustive = !out.stopped;
    if exhaustive && out.best > 0 {
        // replay as a decision so the witness does not depend on scheduling
        let replay = dispatch(
            g,
            Mode::Decide(out.best),
            tag,
            &Budget::UNLIMITED,
            threads,
            reductions,
            start,
        )?;
        nodes += replay.nodes;
        witness = replay.witness;
    }
    let order = (out.best > 0).then_some(out.best);
    if let (Some(o), Some(w)) = (order, witness.as_ref()) {
        check_witness(g, w, o, tag);
    }
    Ok(LongestReport {
        order,
        witness: if order.is_some() { witness } else { None },
        exhaustive,
        nodes,
        elapsed: start.elapsed(),
    })
}

/// Longest induced path, with anytime best-so-far on budget exhaustion.
pub fn longest_induced_path(
    g: &LabeledGraph,
    budget: &Budget,
    threads: Option<usize>,
) -> Result<LongestReport> {
    maximize(g, None, budget, threads, Reductions::default())
}

/// Maximum order of an induced path containing at least `count` vertices
/// of `kind`; `order: None` when no such path exists.
pub fn max_order_with_tag_count(
    g: &LabeledGraph,
    kind: VertexKind,
    count: usize,
    budget: &Budget,
    threads: Option<usize>,
) -> Result<LongestReport> {
    maximize(
        g,
        Some((kind, count)),
        budget,
        threads,
        Reductions::default(),
    )
}

/// Unpruned enumeration of induced paths; the oracle for the search above.
pub fn naive_enumerate(g: &LabeledGraph, t: usize) -> Result<Option<Vec<usize>>> {
    if g.n() > NAIVE_MAX_VERTICES {
        return Err(Error::SizeGuard(format!(
            "naive enumeration limited to {NAIVE_MAX_VERTICES} vertices, graph has {}",
            g.n()
        )));
    }
    fn grow(g: &LabeledGraph, t: usize, path: &mut Vec<usize>) -> bool {
        if path.len() == t {
            return true;
        }
        let tail = *path.last().unwrap();
        for v in 0..g.n() {
            let ok = !path.contains(&v)
                && g.has_edge(tail, v)
                && path[..path.len() - 1].iter().all(|&u| !g.has_edge(u, v));
            if ok {
                path.push(v);
                if grow(g, t, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    if t == 0 {
        return Ok(Some(Vec::new()));
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if grow(g, t, &mut path) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, VertexTag};

    fn decide(g: &LabeledGraph, t: usize) -> Option<bool> {
        has_induced_path(&PathQuery::new(g, t)).unwrap().found()
    }

    #[test]
    fn validator() {
        let p = LabeledGraph::path(4);
        assert!(is_induced_path(&p, &[0, 1, 2, 3]));
        assert!(is_induced_path(&p, &[2, 1]));
        assert!(!is_induced_path(&p, &[0, 2]));
        assert!(!is_induced_path(&p, &[]));
        let c4 = LabeledGraph::cycle(4);
        assert!(!is_induced_path(&c4, &[0, 1, 2, 3]));
        assert!(is_induced_path(&c4, &[0, 1, 2]));
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(decide(&LabeledGraph::path(19), 19), Some(true));
        assert_eq!(decide(&LabeledGraph::cycle(5), 4), Some(true));
        assert_eq!(decide(&LabeledGraph::cycle(5), 5), Some(false));
        assert_eq!(decide(&LabeledGraph::complete(4), 3), Some(false));
        assert_eq!(decide(&LabeledGraph::complete(4), 1), Some(true));
        assert!(has_induced_path(&PathQuery::new(&LabeledGraph::path(3), 4)).is_err());
        assert!(has_induced_path(&PathQuery::new(&LabeledGraph::path(3), 0)).is_err());
    }

    #[test]
    fn longest_small() {
        let r = longest_induced_path(&LabeledGraph::path(7), &Budget::UNLIMITED, None).unwrap();
        assert_eq!(r.order, Some(7));
        assert!(r.exhaustive);
        let r = longest_induced_path(&LabeledGraph::cycle(9), &Budget::UNLIMITED, None).unwrap();
        assert_eq!(r.order, Some(8));
        let r = longest_induced_path(&LabeledGraph::path(0), &Budget::UNLIMITED, None).unwrap();
        assert_eq!(r.order, None);
    }

    #[test]
    fn tag_constraint() {
        // path 0..6 with x on 0, 3, 6
        let mut b = GraphBuilder::with_vertices(7, VertexTag::PLAIN);
        for v in [0, 3, 6] {
            b.set_tag(v, VertexTag::new(VertexKind::X));
        }
        for v in 1..7 {
            b.add_edge(v - 1, v).unwrap();
        }
        let g = b.finish().unwrap();
        let r = max_order_with_tag_count(&g, VertexKind::X, 3, &Budget::UNLIMITED, None).unwrap();
        assert_eq!(r.order, Some(7));
        let r = max_order_with_tag_count(&g, VertexKind::X, 4, &Budget::UNLIMITED, None).unwrap();
        assert_eq!((r.order, r.exhaustive), (None, true));
        let q = PathQuery::new(&g, 5).with_tag(VertexKind::X, 2);
        assert_eq!(has_induced_path(&q).unwrap().found(), Some(true));
        let q = PathQuery::new(&g, 3).with_tag(VertexKind::X, 2);
        assert_eq!(has_induced_path(&q).unwrap().found(), Some(false));
        let none = max_order_with_tag_count(
            &LabeledGraph::cycle(5),
            VertexKind::X,
            1,
            &Budget::UNLIMITED,
            None,
        )
        .unwrap();
        assert_eq!(none.order, None);
    }

    #[test]
    fn budget_exhaustion_reported() {
        let g = crate::core_family::build_core(crate::core_family::CoreGraphId::G3).unwrap();
        let q = PathQuery::new(&g, 19).with_budget(Budget::nodes(10));
        let r = has_induced_path(&q).unwrap();
        assert_eq!(r.decision, PathDecision::BudgetExhausted);
    }

    #[test]
    fn naive_oracle_basics() {
        assert!(naive_enumerate(&LabeledGraph::cycle(5), 4)
            .unwrap()
            .is_some());
        assert!(naive_enumerate(&LabeledGraph::cycle(5), 5)
            .unwrap()
            .is_none());
        assert!(naive_enumerate(&LabeledGraph::path(21), 3).is_err());
    }

    #[test]
    fn isolated_copies_share_a_class() {
        let g = GraphBuilder::with_vertices(4, VertexTag::PLAIN)
            .finish()
            .unwrap();
        let p = Prepared::<1>::new(&g, None, Reductions::default());
        assert_eq!(p.num_classes, 1);
        assert_eq!(p.class_rank, vec![(0, 0), (0, 1), (0, 2), (0, 3)]);
    }
}
