//! Acceptance suite: one PASS/FAIL line per criterion, with pinned time
//! limits. Run with `cargo test -p amplify-cli --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use amplify_core::skew::finite_principal;
use amplify_core::{
    amplified_transitive_closure, build_reachability, check_lemma23, decide_gauge_iso,
    decide_stable_iso, enumerate_hereditary, normalize_lattice_iso, reconstruct,
    search_bounded_iso, t_move_fixpoint, unique_predecessor_elements, validate_lattice_iso,
    AmplifiedGraph, ClassifyError, Exec, LatticeIsoData, Lemma23Verdict, VHSpec, VertexId,
};
use amplify_testkit::{
    all_acyclic_graphs, all_graphs, automorphisms, bfs_components, brute_canonical_code,
    count_walks, graph_from_edges, preserves_adjacency, random_graph, random_permutation, relabel,
    walk_layers,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Longest exact path length checked against walk expansion.
const MAX_WALK_LEN: usize = 15;
/// Longest path length checked against explicit walk enumeration.
const MAX_ENUMERATED_LEN: usize = 7;
const LEVEL_RANGE: (i64, i64) = (-2, 2);
const SHIFT_RANGE: (i64, i64) = (-3, 3);
const ORACLE_BOUND: u32 = 2;

type Check = Result<String, String>;

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn criterion(id: u32, name: &str, limit: Duration, body: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let (ok, detail) = match result {
        Ok(detail) if elapsed <= limit => (true, detail),
        Ok(detail) => (false, format!("{detail}; over time limit")),
        Err(detail) => (false, detail),
    };
    println!(
        "{} [{id}] {name}: {detail} ({:.2} s, limit {} s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn connected(g: &AmplifiedGraph) -> bool {
    bfs_components(g).iter().all(|&c| c == 0)
}

fn reconstruction() -> Check {
    let mut graphs: Vec<AmplifiedGraph> = (1..=3).flat_map(all_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..500 {
        let n = rng.gen_range(4..=8);
        let density = rng.gen_range(0.05..0.8);
        graphs.push(random_graph(&mut rng, n, density));
    }
    let bad = Exec::Parallel.map(&graphs, |g| {
        let r = reconstruct(g).ok()?;
        let phi: Vec<usize> = r.iso.iter().map(|v| v.0).collect();
        let good = r.verified
            && r.ebar.vertex_count() == g.vertex_count()
            && phi.iter().all(|&x| x < g.vertex_count())
            && preserves_adjacency(g, &r.ebar, &phi);
        good.then_some(())
    });
    let failed = bad.iter().filter(|r| r.is_none()).count();
    ensure(failed == 0, || format!("{failed} graphs not reconstructed"))?;
    Ok(format!(
        "{exhaustive} exhaustive + {} random graphs reconstructed",
        graphs.len() - exhaustive
    ))
}

fn hvert() -> Check {
    let graphs: Vec<AmplifiedGraph> = (1..=5).flat_map(all_acyclic_graphs).collect();
    ensure(graphs.len() == 1 + 3 + 25 + 543 + 29281, || {
        format!("enumerated {} acyclic graphs", graphs.len())
    })?;
    let agree = Exec::Parallel.map(&graphs, |g| {
        let lattice = enumerate_hereditary(g).unwrap();
        let mut found = unique_predecessor_elements(&lattice);
        let mut principal: Vec<_> = g.vertices().map(|v| finite_principal(g, v)).collect();
        found.sort();
        principal.sort();
        found == principal
    });
    let failed = agree.iter().filter(|ok| !**ok).count();
    ensure(failed == 0, || format!("{failed} graphs disagree"))?;
    Ok(format!("{} acyclic graphs agree", graphs.len()))
}

/// Compares `exact_reach` with walk expansion for every `(v, w, k)`, and
/// with explicit enumeration for short lengths.
fn reach_agrees(g: &AmplifiedGraph, enumerate: bool) -> bool {
    let table = build_reachability(g).unwrap();
    let n = g.vertex_count();
    (0..n).all(|v| {
        let layers = walk_layers(g, v, MAX_WALK_LEN);
        (0..n).all(|w| {
            let (vv, ww) = (VertexId(v), VertexId(w));
            !table.exact_reach(vv, ww, -1)
                && (0..=MAX_WALK_LEN).all(|k| {
                    let fast = table.exact_reach(vv, ww, k as i64);
                    fast == layers[k][w]
                        && (!enumerate
                            || k > MAX_ENUMERATED_LEN
                            || fast == (count_walks(g, v, w, k) > 0))
                })
        })
    })
}

fn walks() -> Check {
    let exhaustive: Vec<AmplifiedGraph> = (1..=4).flat_map(all_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let random: Vec<AmplifiedGraph> = (0..300)
        .map(|_| {
            let n = rng.gen_range(5..=6);
            let density = rng.gen_range(0.1..0.5);
            random_graph(&mut rng, n, density)
        })
        .collect();
    let failed = Exec::Parallel
        .map(&exhaustive, |g| reach_agrees(g, g.vertex_count() <= 3))
        .into_iter()
        .chain(Exec::Parallel.map(&random, |g| reach_agrees(g, true)))
        .filter(|ok| !ok)
        .count();
    ensure(failed == 0, || format!("{failed} graphs disagree"))?;
    Ok(format!(
        "{} exhaustive + {} random graphs, k in 0..={MAX_WALK_LEN}",
        exhaustive.len(),
        random.len()
    ))
}

fn level_maps(n: usize) -> Vec<Vec<i64>> {
    let (lo, hi) = LEVEL_RANGE;
    let span = (hi - lo + 1) as usize;
    (0..span.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let l = lo + (code % span) as i64;
                    code /= span;
                    l
                })
                .collect()
        })
        .collect()
}

/// One connected graph per isomorphism class, classes found by brute force.
/// Level maps range over all assignments, so every labelled graph is
/// covered through its representative.
fn connected_representatives(n: usize) -> Vec<AmplifiedGraph> {
    let graphs: Vec<AmplifiedGraph> = all_graphs(n).filter(connected).collect();
    let codes = Exec::Parallel.map(&graphs, brute_canonical_code);
    let mut seen = std::collections::HashSet::new();
    graphs
        .into_iter()
        .zip(codes)
        .filter(|(_, c)| seen.insert(*c))
        .map(|(g, _)| g)
        .collect()
}

fn lemma() -> Check {
    let reps: Vec<AmplifiedGraph> = (1..=4).flat_map(connected_representatives).collect();
    let outcomes = Exec::Parallel.map(&reps, |g| -> Result<usize, String> {
        let maps = level_maps(g.vertex_count());
        for levels in &maps {
            let constant = levels.iter().all(|&l| l == levels[0]);
            match check_lemma23(g, &VHSpec::new(levels.clone())) {
                Ok(r) => match r.verdict {
                    Lemma23Verdict::Constant(c) if constant && c == levels[0] => {}
                    Lemma23Verdict::Violated if !constant => {}
                    v => return Err(format!("{g:?} {levels:?}: {v:?}")),
                },
                Err(ClassifyError::InternalInconsistency(m)) => {
                    return Err(format!("internal inconsistency: {m}"))
                }
                Err(e) => return Err(format!("{g:?} {levels:?}: {e}")),
            }
        }
        Ok(maps.len())
    });
    let mut checked = 0;
    for o in outcomes {
        checked += o?;
    }
    Ok(format!(
        "{} connected classes, {checked} level maps",
        reps.len()
    ))
}

fn carried() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let (mut instances, mut nontrivial) = (0, 0);
    while instances < 250 {
        let n = rng.gen_range(1..=6);
        let density = [0.1, 0.2, 0.35, 0.5][rng.gen_range(0..4)];
        let g = random_graph(&mut rng, n, density);
        let autos = automorphisms(&g);
        let phi = &autos[rng.gen_range(0..autos.len())];
        let comps = bfs_components(&g);
        let m = comps.iter().max().unwrap() + 1;
        let per: Vec<i64> = (0..m)
            .map(|_| rng.gen_range(SHIFT_RANGE.0..=SHIFT_RANGE.1))
            .collect();
        let rho = LatticeIsoData {
            vertex_map: phi.iter().copied().map(VertexId).collect(),
            shift: comps.iter().map(|&c| per[c]).collect(),
        };
        ensure(validate_lattice_iso(&g, &g, &rho).unwrap(), || {
            format!("{g:?} {rho:?} did not validate")
        })?;
        let normalized = normalize_lattice_iso(&g, &g, &rho).map_err(|e| format!("{g:?}: {e}"))?;
        ensure(
            normalized.iso.shift.iter().all(|&s| s == 0)
                && normalized.component_shifts == per
                && validate_lattice_iso(&g, &g, &normalized.iso).unwrap(),
            || format!("{g:?} {rho:?} normalized to {normalized:?}"),
        )?;
        instances += 1;
        if phi.iter().enumerate().any(|(v, &x)| v != x) {
            nontrivial += 1;
        }
    }
    Ok(format!(
        "{instances} instances normalized ({nontrivial} with a non-identity automorphism)"
    ))
}

fn corpus() -> Vec<AmplifiedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let base: Vec<AmplifiedGraph> = (0..50)
        .map(|_| {
            let n = rng.gen_range(1..=5);
            let density = rng.gen_range(0.15..0.6);
            random_graph(&mut rng, n, density)
        })
        .collect();
    let relabelled: Vec<AmplifiedGraph> = base
        .iter()
        .map(|g| relabel(g, &random_permutation(&mut rng, g.vertex_count())))
        .collect();
    base.into_iter().chain(relabelled).collect()
}

fn equivalence() -> Check {
    let graphs = corpus();
    let n = graphs.len();
    let results = Exec::Parallel.map_range(n * n, |i| {
        let (e, f) = (&graphs[i / n], &graphs[i % n]);
        let gauge = decide_gauge_iso(e, f).isomorphic;
        let search = search_bounded_iso(e, f, ORACLE_BOUND).map(|r| r.is_some());
        (gauge, search)
    });
    let mut iso_pairs = 0;
    for (i, (gauge, search)) in results.into_iter().enumerate() {
        let search = search.map_err(|e| format!("pair {i}: {e}"))?;
        ensure(gauge == search, || {
            format!(
                "pair ({}, {}): gauge {gauge}, search {search}",
                i / n,
                i % n
            )
        })?;
        iso_pairs += usize::from(gauge);
    }
    Ok(format!(
        "{} ordered pairs agree, {iso_pairs} isomorphic",
        n * n
    ))
}

fn stable() -> Check {
    let g3 = graph_from_edges(3, [(0, 1), (1, 2)]);
    let triangle = graph_from_edges(3, [(0, 1), (1, 2), (0, 2)]);
    ensure(decide_stable_iso(&g3, &triangle).isomorphic, || {
        "path and triangle not stably isomorphic".into()
    })?;
    ensure(!decide_gauge_iso(&g3, &triangle).isomorphic, || {
        "path and triangle gauge isomorphic".into()
    })?;
    let graphs = corpus();
    for g in &graphs {
        ensure(
            t_move_fixpoint(g).0 == amplified_transitive_closure(g),
            || format!("fixpoint differs from closure on {g:?}"),
        )?;
    }
    Ok(format!(
        "path vs triangle stable-only; {} fixpoints equal closures",
        graphs.len()
    ))
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn transcript(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_amplify"))
        .args(args)
        .current_dir(golden_dir())
        .output()
        .unwrap();
    let mut bytes = format!("exit: {}\n--- stdout\n", out.status.code().unwrap()).into_bytes();
    bytes.extend(out.stdout);
    bytes.extend(b"--- stderr\n");
    bytes.extend(out.stderr);
    bytes
}

fn determinism() -> Check {
    let cases = std::fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    let mut count = 0;
    for line in cases
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
    {
        let (name, args) = line.split_once('|').unwrap();
        let (name, args) = (name.trim(), args.split_whitespace().collect::<Vec<_>>());
        let (first, second) = (transcript(&args), transcript(&args));
        ensure(first == second, || format!("{name}: runs differ"))?;
        let golden = std::fs::read(golden_dir().join(format!("{name}.out")))
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(first == golden, || {
            format!("{name}: differs from golden file")
        })?;
        count += 1;
    }
    Ok(format!(
        "{count} golden cases byte-identical across two runs"
    ))
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "reconstruction", secs(10), reconstruction),
        criterion(2, "unique-predecessor sets are principal", secs(30), hvert),
        criterion(3, "exact-length reachability", secs(30), walks),
        criterion(4, "level checker", secs(60), lemma),
        criterion(5, "normalization", secs(30), carried),
        criterion(6, "gauge verdict vs bounded search", secs(300), equivalence),
        criterion(7, "stable classification", secs(10), stable),
        criterion(8, "cli determinism", secs(10), determinism),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
