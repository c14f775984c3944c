//! Pruned solvers against unpruned oracles on seeded random inputs.

use p19free_core::coloring::{decide_coloring, ColoringProblem, Symmetry};
use p19free_core::snake::{
    has_induced_path, is_induced_path, longest_induced_path, naive_enumerate, PathQuery, Reductions,
};
use p19free_core::{build_m_prime, Budget, GraphBuilder, LabeledGraph, VertexKind, VertexTag};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> LabeledGraph {
    let mut b = GraphBuilder::with_vertices(n, VertexTag::PLAIN);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.finish().unwrap()
}

/// Brute-force k-colorability over all k^n assignments.
fn enumerate_colorable(g: &LabeledGraph, k: usize, extra: &[(usize, usize)]) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().chain(extra.iter().copied()).collect();
    let mut colors = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

fn brute_triangle_free(g: &LabeledGraph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn snake_matches_naive_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut disagreements = 0;
    for _ in 0..50 {
        let g = random_graph(&mut rng, 14, 0.2);
        for t in [5, 8, 11] {
            let naive = naive_enumerate(&g, t).unwrap().is_some();
            let report = has_induced_path(&PathQuery::new(&g, t)).unwrap();
            if report.found() != Some(naive) {
                disagreements += 1;
            }
            if let Some(w) = report.witness() {
                assert!(is_induced_path(&g, w) && w.len() == t);
            }
        }
    }
    assert_eq!(disagreements, 0);
}

#[test]
fn snake_matches_naive_on_cycle() {
    let c5 = LabeledGraph::cycle(5);
    for t in 1..=5 {
        let naive = naive_enumerate(&c5, t).unwrap().is_some();
        assert_eq!(
            has_induced_path(&PathQuery::new(&c5, t)).unwrap().found(),
            Some(naive),
            "t = {t}"
        );
    }
}

#[test]
fn snake_matches_naive_on_m_prime_subsets() {
    let m = build_m_prime().graph;
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..20 {
        let mut ids: Vec<usize> = (0..m.n()).collect();
        ids.shuffle(&mut rng);
        let (sub, _) = m.induced_subgraph(&ids[..18]).unwrap();
        let naive = naive_enumerate(&sub, 10).unwrap().is_some();
        assert_eq!(
            has_induced_path(&PathQuery::new(&sub, 10)).unwrap().found(),
            Some(naive)
        );
    }
}

/// Disjoint unions of a few small random pieces, repeated, so the
/// interchangeable-copy reduction actually fires.
#[test]
fn reductions_preserve_decisions_on_repeated_pieces() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..30 {
        let piece = random_graph(&mut rng, 4, 0.5);
        let mut b = GraphBuilder::new();
        let hub = b.add_vertex(VertexTag::new(VertexKind::Mycielski));
        for _ in 0..4 {
            let base = b.n();
            for _ in 0..piece.n() {
                b.add_vertex(VertexTag::PLAIN);
            }
            for (u, v) in piece.edges() {
                b.add_edge(base + u, base + v).unwrap();
            }
            b.add_edge(hub, base).unwrap();
        }
        let g = b.finish().unwrap();
        assert!(g.n() <= 20);
        for t in 2..=9 {
            let naive = naive_enumerate(&g, t).unwrap().is_some();
            for red in [
                Reductions::default(),
                Reductions {
                    twins: false,
                    copies: true,
                },
                Reductions {
                    twins: true,
                    copies: false,
                },
            ] {
                let got = has_induced_path(&PathQuery::new(&g, t).with_reductions(red)).unwrap();
                assert_eq!(got.found(), Some(naive), "t = {t}, {red:?}");
            }
        }
    }
}

#[test]
fn tagged_search_matches_filtered_enumeration() {
    fn best_with_tags(g: &LabeledGraph, c: usize) -> Option<usize> {
        fn grow(g: &LabeledGraph, c: usize, path: &mut Vec<usize>, best: &mut Option<usize>) {
            let x = path.iter().filter(|&&v| g.kind(v) == VertexKind::X).count();
            if x >= c {
                *best = Some(best.map_or(path.len(), |b: usize| b.max(path.len())));
            }
            let tail = *path.last().unwrap();
            for v in 0..g.n() {
                if !path.contains(&v)
                    && g.has_edge(tail, v)
                    && path[..path.len() - 1].iter().all(|&u| !g.has_edge(u, v))
                {
                    path.push(v);
                    grow(g, c, path, best);
                    path.pop();
                }
            }
        }
        let mut best = None;
        for s in 0..g.n() {
            grow(g, c, &mut vec![s], &mut best);
        }
        best
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let base = random_graph(&mut rng, 12, 0.25);
        let mut b = GraphBuilder::from_graph(&base);
        for v in 0..base.n() {
            if rng.gen_bool(0.3) {
                b.set_tag(v, VertexTag::new(VertexKind::X));
            }
        }
        let g = b.finish().unwrap();
        for c in 0..=3 {
            let r = p19free_core::max_order_with_tag_count(
                &g,
                VertexKind::X,
                c,
                &Budget::UNLIMITED,
                Some(2),
            )
            .unwrap();
            assert!(r.exhaustive);
            assert_eq!(r.order, best_with_tags(&g, c), "c = {c}");
        }
    }
}

#[test]
fn petersen_longest_induced_path() {
    let mut b = GraphBuilder::with_vertices(10, VertexTag::PLAIN);
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5).unwrap();
        b.add_edge(i, i + 5).unwrap();
        b.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
    }
    let petersen = b.finish().unwrap();
    assert_eq!(petersen.m(), 15);
    let oracle = (1..=10)
        .rev()
        .find(|&t| naive_enumerate(&petersen, t).unwrap().is_some());
    assert_eq!(oracle, Some(5));
    let r = longest_induced_path(&petersen, &Budget::UNLIMITED, None).unwrap();
    assert_eq!(r.order, oracle);
    assert!(is_induced_path(&petersen, r.witness.as_ref().unwrap()));
}

#[test]
fn longest_matches_naive_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let g = random_graph(&mut rng, 13, 0.3);
        let oracle = (1..=g.n())
            .rev()
            .find(|&t| naive_enumerate(&g, t).unwrap().is_some());
        let r = longest_induced_path(&g, &Budget::UNLIMITED, Some(3)).unwrap();
        assert_eq!(r.order, oracle);
    }
}

#[test]
fn coloring_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc010);
    let mut disagreements = 0;
    for case in 0..100 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.15..0.6);
        let g = random_graph(&mut rng, n, p);
        let k = 2 + case % 3;
        let expected = enumerate_colorable(&g, k, &[]);
        for sym in [Symmetry::Auto, Symmetry::None] {
            let problem = ColoringProblem::new(&g, k).unwrap().with_symmetry(sym);
            let r = decide_coloring(&problem, &Budget::UNLIMITED);
            if r.outcome.is_colorable() != Some(expected) {
                disagreements += 1;
            }
            if let Some(w) = r.outcome.witness() {
                assert!(g.edges().all(|(u, v)| w.colors[u] != w.colors[v]));
                assert!(w.colors.iter().all(|&c| (c as usize) < k));
            }
        }
    }
    assert_eq!(disagreements, 0);
}

#[test]
fn forced_pairs_match_added_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0);
    for _ in 0..50 {
        let n = rng.gen_range(4..=10);
        let g = random_graph(&mut rng, n, 0.35);
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        let k = rng.gen_range(2..=4);
        let forced = decide_coloring(
            &ColoringProblem::new(&g, k)
                .unwrap()
                .with_forced_distinct(vec![(u, v)])
                .unwrap(),
            &Budget::UNLIMITED,
        );
        let plus = g.with_edge(u, v).unwrap();
        let added = decide_coloring(&ColoringProblem::new(&plus, k).unwrap(), &Budget::UNLIMITED);
        assert_eq!(forced.outcome.is_colorable(), added.outcome.is_colorable());
        assert_eq!(
            forced.outcome.is_colorable(),
            Some(enumerate_colorable(&g, k, &[(u, v)]))
        );
    }
}

#[test]
fn list_coloring_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11);
    for _ in 0..40 {
        let n = rng.gen_range(2..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let k = 3;
        let lists: Vec<u32> = (0..n).map(|_| rng.gen_range(1..8)).collect();
        let r = decide_coloring(
            &ColoringProblem::new(&g, k)
                .unwrap()
                .with_lists(lists.clone())
                .unwrap(),
            &Budget::UNLIMITED,
        );
        let mut expected = false;
        for code in 0..3usize.pow(n as u32) {
            let colors: Vec<usize> = (0..n).map(|i| code / 3usize.pow(i as u32) % 3).collect();
            if (0..n).all(|v| lists[v] >> colors[v] & 1 == 1)
                && g.edges().all(|(a, b)| colors[a] != colors[b])
            {
                expected = true;
                break;
            }
        }
        assert_eq!(r.outcome.is_colorable(), Some(expected));
    }
}

#[test]
fn triangle_check_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3);
    for _ in 0..60 {
        let n = rng.gen_range(3..=60);
        let p = rng.gen_range(0.01..0.12);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(g.is_triangle_free(), brute_triangle_free(&g));
        if let Some([a, b, c]) = g.find_triangle() {
            assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c));
        }
    }
}
