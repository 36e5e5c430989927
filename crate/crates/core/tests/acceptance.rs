//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::alloc::{GlobalAlloc, Layout, System};
use std::collections::HashSet;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use domset::io::{
    complete_bipartite, complete_multipartite, disjoint_cliques, random_bipartite,
    random_rejection, sat_to_extension_instance, star, CnfFormula,
};
use domset::{
    compute_peeling, dedup, enum_mds_diamond_free, enum_mds_general, enum_mds_general_with,
    enum_mds_kt_plus_k2, enum_mds_paw_free, enum_mds_triangle_free, enum_mds_triangle_free_with,
    oracle_extension_with_cap, oracle_mds, BicoloredGraph, GeneralOptions, Graph, GraphClass,
    Probe, SolutionStream, VertexSet,
};
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Counting;

static LIVE: AtomicUsize = AtomicUsize::new(0);
static PEAK: AtomicUsize = AtomicUsize::new(0);

unsafe impl GlobalAlloc for Counting {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let p = System.alloc(layout);
        if !p.is_null() {
            let now = LIVE.fetch_add(layout.size(), Ordering::Relaxed) + layout.size();
            PEAK.fetch_max(now, Ordering::Relaxed);
        }
        p
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        LIVE.fetch_sub(layout.size(), Ordering::Relaxed);
    }
}

#[global_allocator]
static ALLOC: Counting = Counting;

/// Peak bytes allocated on top of the live baseline while `f` runs.
fn peak_during<T>(f: impl FnOnce() -> T) -> (T, usize) {
    let base = LIVE.load(Ordering::Relaxed);
    PEAK.store(base, Ordering::Relaxed);
    let out = f();
    (out, PEAK.load(Ordering::Relaxed).saturating_sub(base))
}

type Outcome = Result<String, String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_graph(r: &mut ChaCha8Rng, n: usize) -> Graph {
    let p = r.gen_range(0.15..0.85);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn random_subset(r: &mut ChaCha8Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| r.gen_bool(0.5)).collect()
}

/// Checks that `stream` lists exactly `truth` (sorted), each set once.
fn same_family(stream: &SolutionStream, truth: &[VertexSet]) -> Result<(), String> {
    let mut seen = HashSet::new();
    for item in stream.start() {
        let d = item.map_err(|e| format!("enumeration error: {e}"))?;
        if !seen.insert(d.clone()) {
            return Err(format!("duplicate {d:?}"));
        }
    }
    let mut got: Vec<VertexSet> = seen.into_iter().collect();
    got.sort();
    if got != truth {
        return Err(format!("got {} sets, expected {}", got.len(), truth.len()));
    }
    Ok(())
}

fn describe(g: &Graph, a: &VertexSet) -> String {
    format!(
        "n={} edges={:?} A={:?}",
        g.n(),
        g.edges().collect::<Vec<_>>(),
        a
    )
}

/// Records tree nodes per level and the largest candidate family.
#[derive(Default)]
struct TreeProbe {
    per_level: Mutex<Vec<usize>>,
    max_extensions: AtomicUsize,
}

impl Probe for TreeProbe {
    fn node(&self, level: usize, _d: &VertexSet) {
        let mut v = self.per_level.lock().unwrap();
        if v.len() <= level {
            v.resize(level + 1, 0);
        }
        v[level] += 1;
    }

    fn extensions_exhausted(&self, _level: usize, _d_star: &VertexSet, produced: usize) {
        self.max_extensions.fetch_max(produced, Ordering::Relaxed);
    }
}

#[derive(Default)]
struct SplitProbe {
    calls: AtomicUsize,
    violations: Mutex<Vec<(usize, usize, usize)>>,
}

impl Probe for SplitProbe {
    fn split_graph(&self, n: usize, split_solutions: usize, extensions: usize) {
        self.calls.fetch_add(1, Ordering::Relaxed);
        if split_solutions > n * extensions + 1 {
            self.violations
                .lock()
                .unwrap()
                .push((n, split_solutions, extensions));
        }
    }
}

/// Instances of criterion 1: every labeled graph up to five vertices, then
/// random graphs on six and seven; each with `A = V` and three random `A`.
fn criterion_one_instances() -> Vec<BicoloredGraph> {
    let mut r = rng(1);
    let mut graphs = Vec::new();
    for n in 0..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| pairs[k])
                .collect();
            graphs.push(Graph::new(n, &edges).unwrap());
        }
    }
    for k in 0..5000 {
        let n = 6 + k % 2;
        graphs.push(random_graph(&mut r, n));
    }
    let mut out = Vec::new();
    for g in graphs {
        let g = Arc::new(g);
        out.push(BicoloredGraph::full(Arc::clone(&g)));
        for _ in 0..3 {
            let a = random_subset(&mut r, g.n());
            out.push(BicoloredGraph::new(Arc::clone(&g), a).unwrap());
        }
    }
    out
}

struct CriterionOneReport {
    equivalence: Outcome,
    invariants: Outcome,
    /// Largest extra heap use of a count-only run, per vertex count.
    peak_by_n: Vec<usize>,
}

fn criterion_one() -> CriterionOneReport {
    let instances = criterion_one_instances();
    let mut peak_by_n = vec![0usize; 8];
    let mut eq_err = None;
    let mut inv_err = None;
    let mut nodes_checked = 0usize;
    let mut solutions = 0usize;
    for bg in &instances {
        let truth = oracle_mds(bg).unwrap();
        solutions += truth.len();
        let probe = Arc::new(TreeProbe::default());
        let opts = GeneralOptions {
            probe: Some(probe.clone()),
            triangle_free_base: false,
        };
        let stream = enum_mds_general_with(bg, opts);
        if let Err(e) = same_family(&stream, &truth) {
            eq_err.get_or_insert(format!("{e} on {}", describe(bg.graph(), bg.prescribed())));
        }

        // one full run happened per instance; the probe saw every node once
        let peeling = compute_peeling(bg);
        let per_level = probe.per_level.lock().unwrap().clone();
        let mut previous = 0usize;
        for (i, level) in peeling.levels().iter().enumerate() {
            let sub = BicoloredGraph::new(bg.shared_graph().clone(), level.clone()).unwrap();
            let size = oracle_mds(&sub).unwrap().len();
            let visited = per_level.get(i).copied().unwrap_or(0);
            if size < previous || visited != size {
                inv_err.get_or_insert(format!(
                    "level {i}: |D(G,V_i)|={size}, previous {previous}, visited {visited} on {}",
                    describe(bg.graph(), bg.prescribed())
                ));
            }
            previous = size;
            nodes_checked += visited;
        }
        let widest = probe.max_extensions.load(Ordering::Relaxed);
        if widest > truth.len() {
            inv_err.get_or_insert(format!(
                "{widest} candidate extensions but |D(G,A)|={} on {}",
                truth.len(),
                describe(bg.graph(), bg.prescribed())
            ));
        }

        let plain = enum_mds_general(bg);
        let (_, peak) = peak_during(|| plain.count().unwrap());
        let n = bg.n();
        peak_by_n[n] = peak_by_n[n].max(peak);
    }
    let count = instances.len();
    CriterionOneReport {
        equivalence: match eq_err {
            None => Ok(format!(
                "{count} instances, {solutions} solutions, exact match"
            )),
            Some(e) => Err(e),
        },
        invariants: match inv_err {
            None => Ok(format!(
                "{nodes_checked} tree nodes, level sizes monotone and equal to |D(G,V_i)|"
            )),
            Some(e) => Err(e),
        },
        peak_by_n,
    }
}

fn check_class(
    name: &str,
    cases: usize,
    mut make: impl FnMut(usize) -> BicoloredGraph,
    run: impl Fn(&BicoloredGraph) -> domset::Result<SolutionStream>,
) -> Result<usize, String> {
    let mut solutions = 0;
    for k in 0..cases {
        let bg = make(k);
        let truth = oracle_mds(&bg).unwrap();
        solutions += truth.len();
        let stream = run(&bg).map_err(|e| format!("{name}: {e}"))?;
        same_family(&stream, &truth)
            .map_err(|e| format!("{name}: {e} on {}", describe(bg.graph(), bg.prescribed())))?;
    }
    Ok(solutions)
}

/// Half of the instances keep `A = V`, the others draw `A` at random.
fn with_prescribed(r: &mut ChaCha8Rng, g: Graph, k: usize) -> BicoloredGraph {
    if k.is_multiple_of(2) {
        BicoloredGraph::full(g)
    } else {
        let a = random_subset(r, g.n());
        BicoloredGraph::new(g, a).unwrap()
    }
}

fn criterion_two_and_five() -> (Outcome, Outcome) {
    let split = Arc::new(SplitProbe::default());
    let outcome = (|| -> Outcome {
        let mut r = rng(2);
        let mut tf_inputs = |k: usize| {
            let n = r.gen_range(1..=9);
            let p = r.gen_range(0.2..0.8);
            let seed = r.gen();
            let g = if k < 1000 {
                random_bipartite(n, p, seed).unwrap()
            } else {
                random_rejection(GraphClass::TriangleFree, n, p * 0.6, seed).unwrap()
            };
            with_prescribed(&mut r, g, k)
        };
        let probe: Arc<dyn Probe> = split.clone();
        let tf = check_class("triangle-free", 2000, &mut tf_inputs, |bg| {
            enum_mds_triangle_free_with(bg, Some(probe.clone()))
        })?;

        let mut r = rng(3);
        let paw = check_class(
            "paw-free",
            1000,
            |k| {
                let n = r.gen_range(1..=9);
                let g = match k % 3 {
                    0 => {
                        let p = r.gen_range(0.1..0.35);
                        random_rejection(GraphClass::PawFree, n, p, r.gen()).unwrap()
                    }
                    1 => {
                        let parts = r.gen_range(1..=n);
                        let mut sizes = vec![1; parts];
                        for _ in parts..n {
                            sizes[r.gen_range(0..parts)] += 1;
                        }
                        complete_multipartite(&sizes)
                    }
                    _ => {
                        let parts = r.gen_range(1..=n);
                        let mut sizes = vec![1; parts];
                        for _ in parts..n {
                            sizes[r.gen_range(0..parts)] += 1;
                        }
                        disjoint_cliques(&sizes)
                    }
                };
                with_prescribed(&mut r, g, k / 3)
            },
            enum_mds_paw_free,
        )?;

        let mut r = rng(4);
        let diamond = check_class(
            "diamond-free",
            1000,
            |k| {
                let n = r.gen_range(1..=8);
                let p = r.gen_range(0.15..0.6);
                let g = random_rejection(GraphClass::DiamondFree, n, p, r.gen()).unwrap();
                with_prescribed(&mut r, g, k)
            },
            enum_mds_diamond_free,
        )?;

        let mut r = rng(5);
        let ktk2 = check_class(
            "ktk2",
            1000,
            |_| {
                let n = r.gen_range(1..=8);
                BicoloredGraph::full(random_graph(&mut r, n))
            },
            |bg| Ok(enum_mds_kt_plus_k2(bg.graph())),
        )?;
        Ok(format!(
            "solutions checked: triangle-free {tf}, paw-free {paw}, diamond-free {diamond}, ktk2 {ktk2}"
        ))
    })();

    let calls = split.calls.load(Ordering::Relaxed);
    let violations = split.violations.lock().unwrap().clone();
    let bound = if outcome.is_err() {
        Err("triangle-free runs did not complete".to_string())
    } else if let Some(&(n, h, c)) = violations.first() {
        Err(format!(
            "{} nodes break the bound, first: n={n} |D(H)|={h} |C|={c}",
            violations.len()
        ))
    } else if calls == 0 {
        Err("probe never fired".to_string())
    } else {
        Ok(format!("{calls} nodes, |D(H)| <= n*|C|+1 at each"))
    };
    (outcome, bound)
}

fn criterion_three() -> Outcome {
    for p in 2..=5 {
        for q in 2..=5 {
            let bg = BicoloredGraph::full(complete_bipartite(p, q));
            let expected = p * q + 2;
            let fast = enum_mds_triangle_free(&bg).unwrap().count().unwrap();
            let truth = oracle_mds(&bg).unwrap().len();
            if fast != expected || truth != expected {
                return Err(format!(
                    "K_{{{p},{q}}}: enumerator {fast}, oracle {truth}, expected {expected}"
                ));
            }
        }
    }
    Ok("K_{p,q} for 2<=p,q<=5 all give p*q+2".into())
}

/// Stream whose `k`-th item is `pattern[k]`, materialised on demand.
fn synthetic(pattern: Arc<Vec<u32>>) -> SolutionStream {
    SolutionStream::new(move || {
        let pattern = Arc::clone(&pattern);
        Box::new((0..pattern.len()).map(move |k| Ok(code_set(pattern[k]))))
    })
}

fn code_set(code: u32) -> VertexSet {
    (0..16).filter(|b| code >> b & 1 == 1).collect()
}

/// Stream of `len` items drawn from a small alphabet by a hash of the index;
/// nothing is stored.
fn hashed(len: usize) -> SolutionStream {
    SolutionStream::new(move || {
        Box::new((0..len).map(|k| {
            let code = (k as u32).wrapping_mul(2_654_435_761) >> 27;
            Ok(code_set(code))
        }))
    })
}

fn criterion_six() -> Outcome {
    let mut r = rng(6);
    let mut total = 0usize;
    for case in 0..1000 {
        let len = r.gen_range(0..200);
        let alphabet = r.gen_range(1..40u32);
        let pattern: Vec<u32> = match case % 4 {
            // blocks of repeats
            0 => (0..len).map(|k| (k as u32 / 5) % alphabet).collect(),
            // periodic
            1 => (0..len).map(|k| k as u32 % alphabet).collect(),
            // mirrored
            2 => {
                let half: Vec<u32> = (0..len / 2).map(|_| r.gen_range(0..alphabet)).collect();
                half.iter().chain(half.iter().rev()).copied().collect()
            }
            _ => (0..len).map(|_| r.gen_range(0..alphabet)).collect(),
        };
        let mut seen = HashSet::new();
        let expected: Vec<VertexSet> = pattern
            .iter()
            .filter(|&&c| seen.insert(c))
            .map(|&c| code_set(c))
            .collect();
        let got = dedup(synthetic(Arc::new(pattern)))
            .collect_vec()
            .map_err(|e| format!("case {case}: {e}"))?;
        if got != expected {
            return Err(format!("case {case}: wrong first-occurrence subsequence"));
        }
        total += got.len();
    }
    let (short, short_peak) = peak_during(|| dedup(hashed(200)).count().unwrap());
    let (long, long_peak) = peak_during(|| dedup(hashed(4000)).count().unwrap());
    if short != 32 || long != 32 {
        return Err(format!(
            "hashed streams gave {short} and {long} distinct items"
        ));
    }
    if long_peak > short_peak + 256 {
        return Err(format!(
            "peak heap grew from {short_peak} B to {long_peak} B with stream length"
        ));
    }
    Ok(format!(
        "1000 streams, {total} distinct items; peak heap {short_peak} B at length 200, {long_peak} B at length 4000"
    ))
}

/// Direct truth-table check, independent of the library.
fn satisfiable(vars: usize, clauses: &[Vec<i32>]) -> bool {
    (0u32..1 << vars).any(|t| {
        clauses.iter().all(|c| {
            c.iter()
                .any(|&l| (t >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
        })
    })
}

fn clause_pool(vars: usize) -> Vec<Vec<i32>> {
    let mut pool = Vec::new();
    for mask in 1u32..1 << vars {
        let chosen: Vec<i32> = (1..=vars as i32)
            .filter(|&x| mask >> (x - 1) & 1 == 1)
            .collect();
        for signs in 0u32..1 << chosen.len() {
            pool.push(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(k, &x)| if signs >> k & 1 == 1 { -x } else { x })
                    .collect(),
            );
        }
    }
    pool
}

fn subsets_up_to<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    (0..=max)
        .flat_map(|size| items.iter().cloned().combinations(size))
        .collect()
}

fn reduction_agrees(vars: usize, clauses: Vec<Vec<i32>>) -> Result<bool, String> {
    let expected = satisfiable(vars, &clauses);
    let f = CnfFormula::new(vars, clauses.clone()).map_err(|e| e.to_string())?;
    let inst = sat_to_extension_instance(&f);
    let got =
        oracle_extension_with_cap(&inst.graph, &inst.forced, 32).map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!(
            "{vars} vars {clauses:?}: extension {got}, satisfiable {expected}"
        ));
    }
    Ok(expected)
}

fn criterion_seven() -> Outcome {
    let mut formulas = 0usize;
    let mut unsat = 0usize;
    for vars in 1..=3 {
        for clauses in subsets_up_to(&clause_pool(vars), 4) {
            formulas += 1;
            if !reduction_agrees(vars, clauses)? {
                unsat += 1;
            }
        }
    }
    let mut r = rng(7);
    let mut random_unsat = 0usize;
    for _ in 0..200 {
        let m = r.gen_range(4..=14);
        let clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                let mut vars = vec![1, 2, 3, 4];
                vars.remove(r.gen_range(0..4));
                vars.into_iter()
                    .map(|x| if r.gen_bool(0.5) { -x } else { x })
                    .collect()
            })
            .collect();
        if !reduction_agrees(4, clauses)? {
            random_unsat += 1;
        }
    }
    Ok(format!(
        "{formulas} pool formulas ({unsat} unsatisfiable), 200 random 3-CNFs ({random_unsat} unsatisfiable)"
    ))
}

/// Least-squares slope of `ln y` against `ln x`.
fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn criterion_eight() -> Outcome {
    let mut points = Vec::new();
    let mut timings = Vec::new();
    for m in [10usize, 50, 100, 200] {
        let bg = BicoloredGraph::full(star(m));
        let mut best = Duration::MAX;
        for _ in 0..3 {
            let started = Instant::now();
            let count = enum_mds_general(&bg).count().unwrap();
            best = best.min(started.elapsed());
            if count != 2 {
                return Err(format!("K_1,{m} gave {count} solutions"));
            }
        }
        points.push((m as f64, best.as_secs_f64().max(1e-6)));
        timings.push(format!("m={m}: {:.1} ms", best.as_secs_f64() * 1e3));
    }
    let slope = log_log_slope(&points);
    let text = format!("log-log slope {slope:.2} ({})", timings.join(", "));
    if slope < 6.0 {
        Ok(text)
    } else {
        Err(text)
    }
}

fn criterion_nine(peak_by_n: &[usize]) -> Outcome {
    let points: Vec<(f64, f64)> = peak_by_n
        .iter()
        .enumerate()
        .filter(|&(n, &b)| n >= 2 && b > 0)
        .map(|(n, &b)| (n as f64, b as f64))
        .collect();
    let slope = log_log_slope(&points);
    // perfect matchings: 2^k solutions on 2k vertices, so a retained
    // solution list would show up as exponential growth
    let mut matching = Vec::new();
    for k in 2..=10usize {
        let edges: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        let bg = BicoloredGraph::full(Graph::new(2 * k, &edges).unwrap());
        let stream = enum_mds_general(&bg);
        let (count, peak) = peak_during(|| stream.count().unwrap());
        if count != 1 << k {
            return Err(format!("{k}K2 gave {count} solutions"));
        }
        matching.push(((2 * k) as f64, peak as f64));
    }
    let matching_slope = log_log_slope(&matching);
    let text = format!(
        "peak heap exponent {slope:.2} over criterion-1 runs (n<=7), {matching_slope:.2} on kK2 up to 1024 solutions"
    );
    if slope <= 4.0 && matching_slope <= 4.0 {
        Ok(text)
    } else {
        Err(text)
    }
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let started = Instant::now();
    let out = f();
    (out, started.elapsed())
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, title: &str, outcome: &Outcome, took: Duration| {
        let (tag, text) = match outcome {
            Ok(t) => ("PASS", t),
            Err(t) => {
                failed += 1;
                ("FAIL", t)
            }
        };
        println!(
            "criterion {id} [{tag}] {title}: {text} ({:.1}s)",
            took.as_secs_f64()
        );
    };

    let started = Instant::now();
    let one = criterion_one();
    let took_one = started.elapsed();
    report(1, "oracle equivalence", &one.equivalence, took_one);

    let started = Instant::now();
    let (two, five) = criterion_two_and_five();
    let took_two = started.elapsed();
    report(2, "class algorithms match the oracle", &two, took_two);

    let (three, took) = timed(criterion_three);
    report(3, "complete bipartite counts", &three, took);
    report(
        4,
        "ordered generation invariants",
        &one.invariants,
        took_one,
    );
    report(5, "split graph size bound", &five, took_two);
    let (six, took) = timed(criterion_six);
    report(6, "replay deduplication", &six, took);
    let (seven, took) = timed(criterion_seven);
    report(7, "SAT reduction", &seven, took);
    let (eight, took) = timed(criterion_eight);
    report(8, "star graph scaling", &eight, took);
    let (nine, took) = timed(|| criterion_nine(&one.peak_by_n));
    report(9, "polynomial space", &nine, took);

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
