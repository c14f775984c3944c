//! The full verification pipeline behind `p19free verify-all`.

use std::time::{Duration, Instant};

use p19free_core::core_family::type_string;
use p19free_core::mycielski::verify_connector_properties;
use p19free_core::mycielski::verify_m5_critical;
use p19free_core::snake::PathDecision;
use p19free_core::{
    build_core, build_m_prime, build_reduction, end_to_end_check, has_induced_path,
    is_induced_path, max_order_with_tag_count, Budget, ColoringOutcome, CoreGraphId, LabeledGraph,
    PathQuery, VertexKind,
};
use rayon::prelude::*;

use crate::corpus::{self, NamedInstance};
use crate::report::{BudgetSettings, CheckRecord, Observation, VerificationReport, Witness};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub budget: Budget,
    pub threads: Option<usize>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: Budget::snake_default(),
            threads: None,
            seed: corpus::DEFAULT_SEED,
        }
    }
}

pub fn expected_order(id: CoreGraphId) -> usize {
    match id {
        CoreGraphId::G0(_) => 62,
        CoreGraphId::G1 => 99,
        CoreGraphId::G2 => 103,
        CoreGraphId::G3 => 121,
    }
}

pub fn outcome_label(o: &ColoringOutcome) -> &'static str {
    match o {
        ColoringOutcome::Colorable { .. } => "colorable",
        ColoringOutcome::NotColorable => "not-colorable",
        ColoringOutcome::BudgetExhausted => "budget-exhausted",
    }
}

pub fn decision_label(d: &PathDecision) -> &'static str {
    match d {
        PathDecision::Found { .. } => "found",
        PathDecision::ExhaustedNo => "exhausted-no",
        PathDecision::BudgetExhausted => "budget-exhausted",
    }
}

fn coloring_witness(o: &ColoringOutcome) -> Option<Witness> {
    o.witness().map(|w| Witness::Coloring {
        colors: w.colors.clone(),
    })
}

pub fn path_witness(g: &LabeledGraph, path: &[usize]) -> Witness {
    Witness::Path {
        vertices: path.to_vec(),
        types: type_string(g, path),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn mycielski_checks(opts: &VerifyOptions, checks: &mut Vec<CheckRecord>) {
    let (r, elapsed) = timed(|| verify_m5_critical(&opts.budget));
    let exhausted = |o: &ColoringOutcome| *o != ColoringOutcome::BudgetExhausted;
    checks.push(
        CheckRecord::new("m5/size", "M5", "23 vertices, 71 edges").decided(
            format!("{} vertices, {} edges", r.vertices, r.edges),
            Some((r.vertices, r.edges) == (23, 71)),
            true,
        ),
    );
    checks.push(
        CheckRecord::new("m5/triangle-free", "M5", "triangle-free").decided(
            if r.triangle_free {
                "triangle-free"
            } else {
                "has triangle"
            },
            Some(r.triangle_free),
            true,
        ),
    );
    checks.push(
        CheckRecord::new("m5/4-coloring", "M5", "not-colorable")
            .decided(
                outcome_label(&r.four_coloring),
                r.four_coloring.is_colorable().map(|c| !c),
                exhausted(&r.four_coloring),
            )
            .with_cost(r.four_coloring_nodes, Duration::ZERO),
    );
    checks.push(
        CheckRecord::new("m5/5-coloring", "M5", "colorable")
            .decided(
                outcome_label(&r.five_coloring),
                r.five_coloring.is_colorable(),
                exhausted(&r.five_coloring),
            )
            .with_witness(coloring_witness(&r.five_coloring))
            .with_cost(r.five_coloring_nodes, Duration::ZERO),
    );
    let complete = !r.edge_deletions.contains(&ColoringOutcome::BudgetExhausted);
    let colorable = r.deletions_colorable();
    let refuted = r.edge_deletions.contains(&ColoringOutcome::NotColorable);
    checks.push(
        CheckRecord::new(
            "m5/edge-criticality",
            "M5",
            "every single-edge deletion 4-colorable",
        )
        .decided(
            format!("{colorable}/{} deletions 4-colorable", r.edges),
            if refuted {
                Some(false)
            } else {
                complete.then_some(true)
            },
            complete,
        )
        .with_cost(r.edge_deletion_nodes, elapsed),
    );
}

fn connector_checks(
    opts: &VerifyOptions,
    checks: &mut Vec<CheckRecord>,
    observations: &mut Vec<Observation>,
) {
    let c = build_m_prime();
    let (r, elapsed) = timed(|| verify_connector_properties(&c, &opts.budget));
    checks.push(
        CheckRecord::new("m-prime/size", "M'", "22 vertices, 67 edges").decided(
            format!("{} vertices, {} edges", r.vertices, r.edges),
            Some((r.vertices, r.edges) == (22, 67)),
            true,
        ),
    );
    let indep = r.i_independent && r.i_prime_independent;
    checks.push(
        CheckRecord::new("m-prime/independence", "M'", "I and I' independent").decided(
            format!(
                "I independent: {}, I' independent: {}",
                r.i_independent, r.i_prime_independent
            ),
            Some(indep),
            true,
        ),
    );
    let good = r
        .cross_edges
        .iter()
        .filter(|&&(i, j, e)| e == (i != j))
        .count();
    checks.push(
        CheckRecord::new("m-prime/cross-edges", "M'", "t_i t_j' edge iff i != j").decided(
            format!("{good}/{} ordered pairs as expected", r.cross_edges.len()),
            Some(r.cross_edges_ok()),
            true,
        ),
    );

    let pair_record = |name: &str, expected: &str, list: &[p19free_core::mycielski::PairCheck]| {
        let complete = list
            .iter()
            .all(|p| p.outcome != ColoringOutcome::BudgetExhausted);
        let infeasible = list
            .iter()
            .filter(|p| p.outcome == ColoringOutcome::NotColorable)
            .count();
        let refuted = list.iter().any(|p| p.outcome.is_colorable() == Some(true));
        CheckRecord::new(name, "M'", expected)
            .decided(
                format!("{infeasible}/{} constraints infeasible", list.len()),
                if refuted {
                    Some(false)
                } else {
                    complete.then_some(true)
                },
                complete,
            )
            .with_cost(list.iter().map(|p| p.nodes).sum(), Duration::ZERO)
    };
    checks.push(pair_record(
        "m-prime/rainbow",
        "no 4-coloring repeats a color within I or within I'",
        &r.rainbow_checks,
    ));
    checks.push(pair_record(
        "m-prime/matching",
        "every 4-coloring gives t_i and t_i' the same color",
        &r.matching_checks,
    ));
    checks.push(
        CheckRecord::new("m-prime/4-coloring", "M'", "colorable")
            .decided(
                outcome_label(&r.base),
                r.base.is_colorable(),
                r.base != ColoringOutcome::BudgetExhausted,
            )
            .with_witness(coloring_witness(&r.base))
            .with_cost(r.base_nodes, elapsed),
    );
    let augmented = r
        .within_edge_augmentations
        .iter()
        .map(|p| format!("{}: {}", p.constraint, outcome_label(&p.outcome)))
        .collect::<Vec<_>>()
        .join(", ");
    observations.push(Observation {
        name: "m-prime/within-quadruple-edge-augmentations".to_string(),
        target: "M'".to_string(),
        detail: augmented,
    });
}

fn core_checks(opts: &VerifyOptions, checks: &mut Vec<CheckRecord>) {
    for id in CoreGraphId::ALL {
        let target = id.to_string();
        let built = build_core(id);
        let g = match built {
            Ok(g) => g,
            Err(e) => {
                checks.push(
                    CheckRecord::new("core/build", &target, "graph builds").decided(
                        e.to_string(),
                        Some(false),
                        true,
                    ),
                );
                continue;
            }
        };
        let want = expected_order(id);
        checks.push(
            CheckRecord::new("core/build", &target, format!("{want} vertices")).decided(
                format!("{} vertices, {} edges", g.n(), g.m()),
                Some(g.n() == want),
                true,
            ),
        );
        let tri = g.find_triangle();
        checks.push(
            CheckRecord::new("core/triangle-free", &target, "triangle-free").decided(
                match tri {
                    None => "triangle-free".to_string(),
                    Some(t) => format!("triangle {t:?}"),
                },
                Some(tri.is_none()),
                true,
            ),
        );
        if let CoreGraphId::G0(_) = id {
            checks.push(path_check(&g, &target, 18, true, opts));
        }
        checks.push(path_check(&g, &target, 19, false, opts));
    }
}

fn path_check(
    g: &LabeledGraph,
    target: &str,
    t: usize,
    want: bool,
    opts: &VerifyOptions,
) -> CheckRecord {
    let name = if want {
        format!("core/p{t}-witness")
    } else {
        format!("core/p{t}-free")
    };
    let expected = if want { "found" } else { "exhausted-no" };
    let record = CheckRecord::new(name, target, expected);
    let query = PathQuery::new(g, t)
        .with_budget(opts.budget)
        .with_threads(opts.threads);
    let report = match has_induced_path(&query) {
        Ok(r) => r,
        Err(e) => return record.decided(e.to_string(), Some(false), true),
    };
    let valid = report
        .witness()
        .is_none_or(|w| w.len() == t && is_induced_path(g, w));
    record
        .decided(
            decision_label(&report.decision),
            report.found().map(|f| f == want && valid),
            report.decision != PathDecision::BudgetExhausted,
        )
        .with_witness(report.witness().map(|w| path_witness(g, w)))
        .with_cost(report.nodes, report.elapsed)
}

fn equivalence_check(inst: &NamedInstance, opts: &VerifyOptions) -> CheckRecord {
    let expected = "NAE-satisfiable iff 4-colorable";
    let record = CheckRecord::new("reduction/equivalence", &inst.name, expected);
    let (r, elapsed) = timed(|| end_to_end_check(&inst.instance, &opts.budget));
    match r {
        Err(e) => record.decided(e.to_string(), Some(false), true),
        Ok(r) => {
            let nae = if r.nae_satisfiable() {
                "NAE-satisfiable"
            } else {
                "not NAE-satisfiable"
            };
            let witness = r
                .nae_witness
                .clone()
                .map(|values| Witness::Assignment { values })
                .or_else(|| coloring_witness(&r.coloring));
            record
                .decided(
                    format!(
                        "{nae}, G has {} vertices, {}",
                        r.vertices,
                        outcome_label(&r.coloring)
                    ),
                    r.consistent(),
                    r.coloring != ColoringOutcome::BudgetExhausted,
                )
                .with_witness(witness)
                .with_cost(r.coloring_nodes, elapsed)
        }
    }
}

fn x_count_checks(inst: &NamedInstance, opts: &VerifyOptions, checks: &mut Vec<CheckRecord>) {
    let g = build_reduction(&inst.instance);
    for (count, expected) in [(4, "none"), (3, "at most 15")] {
        let name = format!("reduction/paths-with-{count}-x");
        let record = CheckRecord::new(name, &inst.name, expected);
        let r = match max_order_with_tag_count(&g, VertexKind::X, count, &opts.budget, opts.threads)
        {
            Ok(r) => r,
            Err(e) => {
                checks.push(record.decided(e.to_string(), Some(false), true));
                continue;
            }
        };
        let holds = match (count, r.order) {
            (4, order) => order.is_none(),
            (_, order) => order.is_none_or(|o| o <= 15),
        };
        let valid = r.witness.as_deref().is_none_or(|w| is_induced_path(&g, w));
        let decision = match r.order {
            Some(o) => format!("longest such induced path has {o} vertices"),
            None => "none".to_string(),
        };
        // a violating witness refutes even when the search was cut short
        let verdict = if !holds || !valid {
            Some(false)
        } else {
            r.exhaustive.then_some(true)
        };
        checks.push(
            record
                .decided(decision, verdict, r.exhaustive)
                .with_witness(r.witness.as_deref().map(|w| path_witness(&g, w)))
                .with_cost(r.nodes, r.elapsed),
        );
    }
}

fn budget_settings(b: &Budget) -> BudgetSettings {
    BudgetSettings {
        max_nodes: b.max_nodes,
        max_seconds: b.max_time.map(|d| d.as_secs_f64()),
    }
}

/// Runs every check in a fixed order on a pool of `opts.threads` workers.
pub fn verify_all(opts: &VerifyOptions) -> VerificationReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.unwrap_or(0))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let start = Instant::now();
        let mut checks = Vec::new();
        let mut observations = Vec::new();
        mycielski_checks(opts, &mut checks);
        connector_checks(opts, &mut checks, &mut observations);
        core_checks(opts, &mut checks);

        let corpus = corpus::bundled(opts.seed);
        let equivalence: Vec<CheckRecord> = corpus
            .par_iter()
            .map(|inst| equivalence_check(inst, opts))
            .collect();
        checks.extend(equivalence);

        for inst in [corpus::single_clause(), corpus::two_clause_chain()] {
            x_count_checks(&inst, opts, &mut checks);
        }
        VerificationReport::new(
            opts.seed,
            budget_settings(&opts.budget),
            checks,
            observations,
            start.elapsed(),
        )
    })
}
