//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use urvkit_core::audit::{audit_layout, grid_search, random_layout, refute_k5_random, SamplerConfig, SearchMode, SearchOutcome};
use urvkit_core::decompose::{classify_tree, linear_forest_bipartition, Forest, TreeClass};
use urvkit_core::extremal::{
    bounds, c_closed, dense_degree_profile, edges_closed, gen_dense_bipartite_layout, gen_dense_layout, gen_tbs, gen_trs,
    level_counts, level_counts_ab,
};
use urvkit_core::synth::{
    classify_kmn, complete_bipartite_graph, complete_graph, cycle_graph, layout_kmn, layout_linear_arb2, layout_tree,
    layout_tree_weak, KmnClass, KmnMode,
};
use urvkit_core::trees::{all_trees, random_tree};
use urvkit_core::{q, Axis, Graph, Layout, Rational, Square, Transform};

type Outcome = Result<String, String>;
type Criterion = Box<dyn FnOnce(&mut Vec<String>) -> Outcome>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn urvkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_urvkit")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn complete_on(n: usize) -> Graph {
    complete_graph(n)
}

fn round_trips(layout: &Layout, g: &Graph) -> bool {
    layout.validate().is_ok() && layout.extract_graph().map(|h| h.labeled_edges() == g.labeled_edges()).unwrap_or(false)
}

fn criterion_1() -> Outcome {
    let (code, layout, err) = urvkit(&["synth", "complete", "--n", "4"]);
    ensure!(code == 0, "synth complete --n 4 exited {code}: {err}");
    let l = Layout::from_text(&layout).map_err(|e| e.to_string())?;
    ensure!(round_trips(&l, &complete_on(4)), "K4 layout does not extract to K4");
    let (code, _, err) = urvkit(&["synth", "complete", "--n", "5"]);
    ensure!(code == 1 && err.contains("K5"), "K5 request: status {code}, message {err:?}");
    let start = Instant::now();
    let r = grid_search(&complete_on(5), q(1, 2), 6, SearchMode::Strong, 4).map_err(|e| e.to_string())?;
    let search_time = start.elapsed();
    ensure!(matches!(r.outcome, SearchOutcome::Exhausted), "grid search found a K5 layout");
    ensure!(search_time < Duration::from_secs(300), "K5 search took {search_time:?}");
    let refute = refute_k5_random(100_000, 2024);
    ensure!(refute.k5_found == 0 && refute.passed(), "refuter: {refute:?}");
    Ok(format!(
        "K4 round-trips, K5 refused, K5 grid search exhausted in {} nodes ({search_time:.2?}), 0 K5 in {} random layouts",
        r.nodes, refute.trials
    ))
}

/// Definitional check: max degree 3 and, after smoothing degree-2 vertices,
/// the branch vertices of each component induce a path.
fn caterpillar_oracle(g: &Graph) -> bool {
    if g.max_degree() > 3 {
        return false;
    }
    g.components().iter().all(|comp| {
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) == 3).collect();
        branch.iter().all(|&v| {
            // follow each edge through degree-2 vertices; count arrivals at branch vertices
            g.neighbors(v)
                .filter(|&first| {
                    let (mut prev, mut cur) = (v, first);
                    while g.degree(cur) == 2 {
                        let next = g.neighbors(cur).find(|&w| w != prev).unwrap();
                        (prev, cur) = (cur, next);
                    }
                    g.degree(cur) == 3
                })
                .count()
                <= 2
        })
    })
}

fn brute_force_urvg(t: &Graph) -> bool {
    let edges = t.edges();
    (0u32..1 << edges.len()).any(|mask| {
        let side = |bit| t.spanning_subgraph(edges.iter().enumerate().filter(|(i, _)| (mask >> i) & 1 == bit).map(|(_, &e)| e));
        caterpillar_oracle(&side(0)) && caterpillar_oracle(&side(1))
    })
}

fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (mut trees, mut urvg) = (0, 0);
    for n in 1..=10 {
        for t in all_trees(n) {
            trees += 1;
            let class = classify_tree(&t).map_err(|e| e.to_string())?;
            let expected = brute_force_urvg(&t);
            ensure!(matches!(class, TreeClass::Urvg(_)) == expected, "classification disagrees with the oracle on\n{}", t.to_text());
            if let TreeClass::Urvg(d) = class {
                urvg += 1;
                let l = layout_tree(&t, &d).map_err(|e| format!("{e} on\n{}", t.to_text()))?;
                ensure!(round_trips(&l, &t), "layout does not round-trip for\n{}", t.to_text());
                let split = l.split_xy().map_err(|e| e.to_string())?;
                ensure!(
                    split.gx.labeled_edges() == d.forest_graph(&t, Forest::F1).labeled_edges()
                        && split.gy.labeled_edges() == d.forest_graph(&t, Forest::F2).labeled_edges(),
                    "gx/gy differ from F1/F2 for\n{}",
                    t.to_text()
                );
            }
        }
    }
    ensure!(trees == 201, "enumerated {trees} trees, expected 201");
    ensure!(matches!(classify_tree(&star(6)), Ok(TreeClass::Urvg(_))), "K_{{1,6}} not classified URVG");
    ensure!(matches!(classify_tree(&star(7)), Ok(TreeClass::WeakOnly)), "K_{{1,7}} not classified weak-only");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("{trees} trees, {urvg} URVG all round-trip with gx/gy = F1/F2, K_{{1,6}} URVG, K_{{1,7}} weak only ({elapsed:.2?})"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let t = random_tree(rng.gen_range(1..=15), &mut rng);
        let l = layout_tree_weak(&t).map_err(|e| e.to_string())?;
        ensure!(l.validate().is_ok(), "weak layout overlaps for\n{}", t.to_text());
        let g = l.extract_graph().map_err(|e| e.to_string())?;
        ensure!(t.is_labeled_subgraph_of(&g), "weak layout misses a tree edge of\n{}", t.to_text());
    }
    Ok("100 random trees on <= 15 vertices: valid weak layouts containing the tree".into())
}

fn criterion_4() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = (3..=20).map(|n| (format!("C{n}"), cycle_graph(n))).collect();
    graphs.push(("K4".into(), complete_on(4)));
    for (name, g) in &graphs {
        let lf = linear_forest_bipartition(g).ok_or(format!("{name}: no split into two linear forests"))?;
        lf.verify(g).map_err(|e| format!("{name}: {e}"))?;
        let l = layout_linear_arb2(g, &lf).map_err(|e| format!("{name}: {e}"))?;
        ensure!(round_trips(&l, g), "{name} does not round-trip");
    }
    Ok("C3..C20 and K4 split into two linear forests and round-trip exactly".into())
}

fn expected_kmn(m: usize, n: usize) -> KmnClass {
    if (m <= 2 && n <= 6) || (m == 3 && n <= 4) {
        KmnClass::Urvg
    } else if m <= 2 {
        KmnClass::WeakOnly
    } else {
        KmnClass::NotWeak
    }
}

fn criterion_5() -> Outcome {
    for m in 1..=8 {
        for n in m..=8 {
            let got = classify_kmn(m, n).map_err(|e| e.to_string())?;
            ensure!(got == expected_kmn(m, n), "K_{{{m},{n}}} classified {got:?}");
        }
    }
    let strong: Vec<(usize, usize)> = (1..=2).flat_map(|m| (m..=6).map(move |n| (m, n))).chain((3..=4).map(|n| (3, n))).collect();
    for &(m, n) in &strong {
        let l = layout_kmn(m, n, KmnMode::Strong).map_err(|e| e.to_string())?.ok_or(format!("no layout of K_{{{m},{n}}}"))?;
        ensure!(round_trips(&l, &complete_bipartite_graph(m, n)), "K_{{{m},{n}}} does not round-trip");
    }
    let weak: Vec<(usize, usize)> = (2..=20).map(|n| (2, n)).chain((3..=4).map(|n| (3, n))).collect();
    for &(m, n) in &weak {
        let l = layout_kmn(m, n, KmnMode::Weak).map_err(|e| e.to_string())?.ok_or(format!("no weak layout of K_{{{m},{n}}}"))?;
        let g = l.extract_graph().map_err(|e| e.to_string())?;
        ensure!(l.validate().is_ok() && complete_bipartite_graph(m, n).is_labeled_subgraph_of(&g), "weak K_{{{m},{n}}} fails");
    }
    let mut nodes = Vec::new();
    for (m, n) in [(4, 4), (3, 5)] {
        let start = Instant::now();
        let r = grid_search(&complete_bipartite_graph(m, n), q(1, 2), 6, SearchMode::Weak, 4).map_err(|e| e.to_string())?;
        ensure!(matches!(r.outcome, SearchOutcome::Exhausted), "grid search found a weak K_{{{m},{n}}} layout");
        nodes.push(format!("K_{{{m},{n}}} {} nodes ({:.2?})", r.nodes, start.elapsed()));
    }
    Ok(format!(
        "table matches for 1 <= m <= n <= 8, {} strong and {} weak layouts verified, weak grid search exhausted: {}",
        strong.len(),
        weak.len(),
        nodes.join(", ")
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for (s, want) in (1..=6).zip([3, 8, 15, 24, 35, 48]) {
        let t = gen_tbs(s).map_err(|e| e.to_string())?;
        ensure!(t.tree.is_tree() && t.tree.size() == want, "TB_{s} has {} edges", t.tree.size());
    }
    let rec = level_counts(5);
    ensure!(rec.a[0] == 4 && rec.c[..3] == [6, 28, 128], "recurrence gives a={:?} c={:?}", rec.a, rec.c);
    ensure!(level_counts_ab(5) == rec, "the two recurrences disagree");
    for s in 1..=5 {
        let (t, d) = gen_trs(s).map_err(|e| e.to_string())?;
        let levels = t.level_sizes();
        ensure!(levels[1..] == rec.c[..s], "TR_{s} levels {levels:?}");
        d.verify(&t.tree).map_err(|e| e.to_string())?;
    }
    let exact = level_counts(20);
    let mut total = 0u64;
    for k in 1..=20u32 {
        let c = exact.c[k as usize - 1] as f64;
        total += exact.c[k as usize - 1];
        let (ec, es) = ((c_closed(k) - c).abs() / c, (edges_closed(k) - total as f64).abs() / total as f64);
        ensure!(ec < 1e-9 && es < 1e-9, "closed forms off at {k}: {ec:e}, {es:e}");
    }
    let (t, d) = gen_trs(2).map_err(|e| e.to_string())?;
    let l = layout_tree(&t.tree, &d).map_err(|e| e.to_string())?;
    ensure!(l.len() == 35 && round_trips(&l, &t.tree), "TR_2 layout does not round-trip");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("TB edges 3..48, TR levels follow the recurrence, closed forms within 1e-9 to index 20, TR_2 round-trips ({elapsed:.2?})"))
}

fn criterion_7(warnings: &mut Vec<String>) -> Outcome {
    let b64 = bounds(64).map_err(|e| e.to_string())?;
    ensure!((b64.urvg_bound, b64.dense_target) == (353, 294), "bounds(64) = {b64:?}");
    let b81 = bounds(81).map_err(|e| e.to_string())?;
    ensure!((b81.bipartite_bound, b81.dense_bipartite_target) == (311, 256), "bounds(81) = {b81:?}");
    let mut counts = Vec::new();
    for n in [64usize, 70, 81, 100] {
        let l = gen_dense_layout(n).map_err(|e| e.to_string())?;
        let b = bounds(n as u64).map_err(|e| e.to_string())?;
        let g = l.extract_graph().map_err(|e| e.to_string())?;
        let e = g.size() as i64;
        ensure!(l.len() == n && l.validate().is_ok(), "dense({n}) invalid");
        ensure!(b.dense_target <= e && e <= b.urvg_bound, "dense({n}) has {e} edges, outside [{}, {}]", b.dense_target, b.urvg_bound);
        counts.push(format!("{n}:{e}"));
        if n == 64 {
            let degrees: usize = (0..g.order()).map(|v| g.degree(v)).sum();
            ensure!(degrees == 588, "degree sum {degrees}");
            let mut profile = BTreeMap::new();
            for v in 0..g.order() {
                *profile.entry(g.degree(v)).or_insert(0u64) += 1;
            }
            if profile != dense_degree_profile(8) {
                warnings.push(format!("dense(64) degree multiset {profile:?} differs from {:?}", dense_degree_profile(8)));
            }
        }
    }
    let l = gen_dense_bipartite_layout(81).map_err(|e| e.to_string())?;
    let g = l.extract_graph().map_err(|e| e.to_string())?;
    ensure!(g.bipartition().is_some(), "dense bipartite(81) is not bipartite");
    ensure!((256..=311).contains(&g.size()), "dense bipartite(81) has {} edges", g.size());
    Ok(format!("bounds exact, dense edges {} within range, degree sum 588, bipartite(81) {} edges", counts.join(" "), g.size()))
}

/// Jittered patch of the staggered lattice, dense enough to reach degree 7+.
fn lattice_patch(rng: &mut ChaCha8Rng) -> Layout {
    let mut l = Layout::new();
    for _ in 0..rng.gen_range(1..=12) {
        let (i, j) = (rng.gen_range(0..4i128), rng.gen_range(0..4i128));
        let (jx, jy) = (rng.gen_range(-2..=2i128), rng.gen_range(-2..=2i128));
        let s = Square::new(l.len().to_string(), q(8 * i - 4 * j + jx, 6), q(4 * i + 8 * j + jy, 6));
        if l.squares().iter().all(|t| !t.interiors_overlap(&s)) {
            l.push(s).unwrap();
        }
    }
    l
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cfg = SamplerConfig::default();
    let cases = 2000;
    let mut max_degree = 0;
    for case in 0..cases {
        let l = if case % 2 == 0 { random_layout(rng.gen_range(1..=12), &cfg, &mut rng) } else { lattice_patch(&mut rng) };
        let g = l.extract_graph().map_err(|e| e.to_string())?;
        max_degree = max_degree.max(g.max_degree());
        for i in 0..l.len() {
            for j in 0..l.len() {
                for axis in [Axis::Horizontal, Axis::Vertical] {
                    ensure!(l.visible_idx(i, j, axis) == l.visible_idx(j, i, axis), "asymmetric visibility in\n{}", l.to_text());
                }
            }
        }
        let d = (q(rng.gen_range(-50..50), rng.gen_range(1..8)), q(rng.gen_range(-50..50), rng.gen_range(1..8)));
        for op in [Transform::Translate(d.0, d.1), Transform::ReflectX, Transform::ReflectY] {
            ensure!(l.transform(op).extract_graph().ok().as_ref() == Some(&g), "{op:?} changes the graph of\n{}", l.to_text());
        }
        let split = l.split_xy().map_err(|e| e.to_string())?;
        let disjoint = g.edges().iter().all(|&(a, b)| split.gx.has_edge(a, b) != split.gy.has_edge(a, b));
        ensure!(disjoint && split.gx.size() + split.gy.size() == g.size(), "split is not a partition for\n{}", l.to_text());
        let s = &l.squares()[rng.gen_range(0..l.len())];
        for (t, horizontal) in [(s.y, true), (s.y + Rational::ONE, true), (s.x, false), (s.x + Rational::ONE, false)] {
            let banded = if horizontal { l.insert_horizontal_band(t) } else { l.insert_vertical_band(t) };
            if let Ok(b) = banded {
                ensure!(b.extract_graph().ok().as_ref() == Some(&g), "band at {t} changes the graph of\n{}", l.to_text());
            }
        }
        ensure!(!g.contains_k5(), "K5 extracted from\n{}", l.to_text());
        let on_cycles = g.vertices_on_cycles();
        ensure!((0..g.order()).all(|v| g.degree(v) < 7 || on_cycles.contains(&v)), "degree-7 vertex off every cycle");
        let report = audit_layout(&l);
        ensure!(report.passed(), "audit fails on a random layout:\n{report}");
    }
    // every layout the toolkit produces
    let mut produced: Vec<Layout> = Vec::new();
    for _ in 0..200 {
        let t = random_tree(rng.gen_range(1..=12), &mut rng);
        produced.push(layout_tree_weak(&t).map_err(|e| e.to_string())?);
        if let TreeClass::Urvg(d) = classify_tree(&t).map_err(|e| e.to_string())? {
            produced.push(layout_tree(&t, &d).map_err(|e| e.to_string())?);
        }
    }
    for n in 3..=20 {
        let c = cycle_graph(n);
        produced.push(layout_linear_arb2(&c, &linear_forest_bipartition(&c).unwrap()).map_err(|e| e.to_string())?);
    }
    for m in 1..=3 {
        for n in m..=8 {
            for mode in [KmnMode::Strong, KmnMode::Weak] {
                produced.extend(layout_kmn(m, n, mode).map_err(|e| e.to_string())?);
            }
        }
    }
    produced.push(gen_dense_layout(70).map_err(|e| e.to_string())?);
    produced.push(gen_dense_bipartite_layout(90).map_err(|e| e.to_string())?);
    for l in &produced {
        let report = audit_layout(l);
        ensure!(report.passed(), "toolkit layout fails audit:\n{report}");
    }
    ensure!(max_degree >= 7, "random cases never reached degree 7 (max {max_degree})");
    Ok(format!("{cases} seeded random layouts (max degree {max_degree}) satisfy every invariant, {} toolkit layouts audit clean", produced.len()))
}

fn main() {
    let mut warnings = Vec::new();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("complete graphs", Box::new(|_| criterion_1())),
        ("trees", Box::new(|_| criterion_2())),
        ("weak trees", Box::new(|_| criterion_3())),
        ("linear arboricity 2", Box::new(|_| criterion_4())),
        ("complete bipartite graphs", Box::new(|_| criterion_5())),
        ("extremal trees", Box::new(|_| criterion_6())),
        ("edge bounds and dense layouts", Box::new(criterion_7)),
        ("universal invariants", Box::new(|_| criterion_8())),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut warnings))).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS [{elapsed:.2?}] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL [{elapsed:.2?}] {why}", k + 1);
            }
        }
    }
    for w in &warnings {
        println!("warning: {w}");
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
