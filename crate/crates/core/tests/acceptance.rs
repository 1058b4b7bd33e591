//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use effdom::gadgets::{split_square_gadget, xc_gadget};
use effdom::generate::{
    gen_alpha_acyclic, gen_chordal, gen_dually_chordal, gen_dually_chordal_with, gen_gnp,
    gen_hypertree, gen_hypertree_with, gen_random_hypergraph, SeededRng,
};
use effdom::oracles::{
    brute_ed, brute_eed, brute_exact_cover, brute_hyper_eed, brute_mwis, Found, OracleGate,
};
use effdom::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn gate() -> OracleGate {
    OracleGate {
        max_n: 64,
        max_m: 64,
        max_subset_bits: 64,
    }
}

/// Every labelled graph on `n` vertices, one per subset of the `n(n-1)/2`
/// possible edges.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

fn random_graph(rng: &mut SeededRng, lo: usize, hi: usize) -> Graph {
    let n = rng.between(lo, hi);
    let p = 0.1 + 0.6 * rng.unit();
    gen_gnp(n, p, rng)
}

fn ed_oracle_status(g: &Graph) -> bool {
    brute_ed(g, &gate()).unwrap().is_solution()
}

fn c1_ed_oracle() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0;
    let mut mismatches = 0;
    let mut bad_certs = 0;
    let mut feasible = 0;
    let mut check = |g: &Graph| {
        graphs += 1;
        let cert = solve_ed(g, MethodChoice::Auto).unwrap();
        let expected = ed_oracle_status(g);
        if (cert.status == Status::Solution) != expected || cert.status == Status::ResourceLimited {
            mismatches += 1;
        }
        if cert.status == Status::Solution {
            feasible += 1;
            if !verify_ed(g, &cert.set).unwrap() {
                bad_certs += 1;
            }
        }
    };
    for n in 0..=5 {
        all_graphs(n).for_each(|g| check(&g));
    }
    let mut rng = SeededRng::new(1);
    for _ in 0..2000 {
        check(&random_graph(&mut rng, 6, 10));
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && bad_certs == 0 && elapsed < Duration::from_secs(60),
        format!(
            "{graphs} graphs ({feasible} feasible), {mismatches} status mismatches, \
             {bad_certs} invalid certificates, {:.2}s",
            elapsed.as_secs_f64()
        ),
    )
}

fn small_dually_chordal(rng: &mut SeededRng, seed: u64) -> Graph {
    let n = rng.between(1, 12);
    let m = rng.below(n + 1);
    let size = rng.between(2, 5);
    gen_dually_chordal_with(n, m, size, seed)
}

fn c2_algorithm_paths() -> Outcome {
    let mut rng = SeededRng::new(2);
    let mut mismatches = 0;
    let mut bad_certs = 0;
    let mut feasible = 0;
    for seed in 0..1000 {
        let g = small_dually_chordal(&mut rng, seed);
        let dc = ed_dually_chordal(&g).unwrap();
        let sq = ed_via_square(&g);
        let brute = ed_oracle_status(&g);
        let solved = |s: Status| s == Status::Solution;
        if solved(dc.status) != brute || solved(sq.status) != brute || sq.method == Method::Brute {
            mismatches += 1;
        }
        for c in [&dc, &sq] {
            if solved(c.status) && !verify_ed(&g, &c.set).unwrap() {
                bad_certs += 1;
            }
        }
        feasible += brute as usize;
    }
    outcome(
        mismatches == 0 && bad_certs == 0,
        format!("1000 graphs ({feasible} feasible), {mismatches} mismatches, {bad_certs} invalid certificates"),
    )
}

fn mno_corpus() -> Vec<Graph> {
    let mut rng = SeededRng::new(3);
    (0..300)
        .map(|seed| {
            let n = rng.between(1, 60);
            let m = rng.below(n + 1);
            let size = rng.between(2, 6);
            gen_dually_chordal_with(n, m, size, 1000 + seed)
        })
        .collect()
}

fn c3_max_neighbor_adjacency() -> Outcome {
    let mut violations = 0;
    let mut pairs = 0u64;
    for g in mno_corpus() {
        let mno = compute_mno(&g).unwrap();
        let sq = square(&g);
        let s = &mno.sigma;
        for i in 0..s.len() {
            let mi = mno.max_neighbor[s[i]];
            for &vj in &s[i + 1..] {
                pairs += 1;
                let in_square = sq.has_edge(s[i], vj);
                let via_max = mi == vj || g.has_edge(mi, vj);
                if in_square != via_max {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("300 graphs, {pairs} ordered pairs, {violations} violations (m_i taken in N[v_j])"),
    )
}

fn c4_mno_is_square_peo() -> Outcome {
    let mut violations = 0;
    let mut fallback_failures = 0;
    for g in mno_corpus() {
        let mno = compute_mno(&g).unwrap();
        let sq = square(&g);
        if !is_peo(&sq, &mno.sigma).unwrap().valid {
            violations += 1;
            if !is_chordal(&sq).verdict {
                fallback_failures += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("300 graphs, {violations} orderings not a PEO of the square, {fallback_failures} fallback failures"),
    )
}

fn c5_closure() -> Outcome {
    let mut rng = SeededRng::new(5);
    let (mut sq_bad, mut lg_bad, mut sec_bad) = (0, 0, 0);
    for seed in 0..1000 {
        let g = small_dually_chordal(&mut rng, 5000 + seed);
        if !is_chordal(&square(&g)).verdict {
            sq_bad += 1;
        }
        let n = rng.between(1, 14);
        let m = rng.between(1, 14);
        let a = gen_alpha_acyclic(n, m, 6000 + seed);
        if !is_dually_chordal(&hyper_line_graph(&a).graph).verdict {
            lg_bad += 1;
        }
        let t = gen_hypertree(n, m, 7000 + seed);
        if !is_dually_chordal(&two_section(&t)).verdict {
            sec_bad += 1;
        }
    }
    outcome(
        sq_bad + lg_bad + sec_bad == 0,
        format!(
            "1000 instances per class; non-chordal squares {sq_bad}, \
             non-dually-chordal line graphs {lg_bad}, non-dually-chordal 2-sections {sec_bad}"
        ),
    )
}

fn c6_eed_oracle() -> Outcome {
    let mut graphs = 0;
    let mut mismatches = 0;
    let mut limited = 0;
    let mut feasible = 0;
    let mut class_disagreements = 0;
    let mut check = |g: &Graph| {
        graphs += 1;
        let cert = solve_eed(g, MethodChoice::Auto).unwrap();
        let oracle = brute_eed(g, &gate()).unwrap();
        if cert.status == Status::ResourceLimited {
            limited += 1;
        }
        if (cert.status == Status::Solution) != oracle.is_solution()
            || (cert.status == Status::Solution && !verify_eed(g, &cert.edges).unwrap())
        {
            mismatches += 1;
        }
        if oracle.is_solution() {
            feasible += 1;
            if is_chordal(g).verdict != is_dually_chordal(g).verdict {
                class_disagreements += 1;
            }
        }
    };
    for n in 0..=5 {
        all_graphs(n).for_each(|g| check(&g));
    }
    let mut rng = SeededRng::new(6);
    for _ in 0..2000 {
        check(&random_graph(&mut rng, 1, 9));
    }
    let mut rng = SeededRng::new(66);
    for seed in 0..500 {
        let n = rng.between(1, 12);
        check(&gen_chordal(n, 8000 + seed));
        check(&small_dually_chordal(&mut rng, 9000 + seed));
    }
    outcome(
        mismatches == 0 && class_disagreements == 0,
        format!(
            "{graphs} graphs ({feasible} feasible), {mismatches} mismatches \
             ({limited} resource-limited), {class_disagreements} chordal/dually chordal disagreements"
        ),
    )
}

fn alpha(g: &Graph) -> u64 {
    brute_mwis(g, &WeightMap::uniform(g.n(), 1), &gate())
        .unwrap()
        .1
}

fn c7_split_gadget() -> Outcome {
    let mut rng = SeededRng::new(7);
    let mut tried = 0;
    let mut mismatches = 0;
    while tried < 200 {
        let n = rng.between(2, 9);
        let g = gen_gnp(n, 0.15 + 0.35 * rng.unit(), &mut rng);
        if g.m() == 0 {
            continue;
        }
        tried += 1;
        let f = split_square_gadget(&g).unwrap();
        if alpha(&square(&f)) != alpha(&g) + 1 {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("{tried} graphs, {mismatches} mismatches"),
    )
}

fn c8_exact_cover() -> Outcome {
    let mut rng = SeededRng::new(8);
    let mut gadget_mismatches = 0;
    let mut feasible = 0;
    for _ in 0..200 {
        let n = rng.between(1, 8);
        let m = rng.between(0, 10);
        let h = gen_random_hypergraph(n, m, 4, &mut rng);
        let a = brute_exact_cover(&h, &gate()).unwrap().is_solution();
        let b = brute_exact_cover(&xc_gadget(&h), &gate())
            .unwrap()
            .is_solution();
        feasible += a as usize;
        if a != b {
            gadget_mismatches += 1;
        }
    }
    let mut tree_mismatches = 0;
    let mut brute_flags = 0;
    let mut tree_feasible = 0;
    for seed in 0..500 {
        let n = rng.between(1, 14);
        let m = rng.between(1, 12);
        let size = rng.between(1, 5);
        let h = gen_hypertree_with(n, m, size, 10_000 + seed);
        let cert = solve_exact_cover(&h, MethodChoice::Auto).unwrap();
        let oracle = brute_exact_cover(&h, &gate()).unwrap();
        if !cert.method.is_polynomial() {
            brute_flags += 1;
        }
        if (cert.status == Status::Solution) != oracle.is_solution() {
            tree_mismatches += 1;
        }
        tree_feasible += oracle.is_solution() as usize;
    }
    outcome(
        gadget_mismatches + tree_mismatches + brute_flags == 0,
        format!(
            "gadget: 200 hypergraphs ({feasible} coverable), {gadget_mismatches} mismatches; \
             hypertrees: 500 ({tree_feasible} coverable), {tree_mismatches} mismatches, \
             {brute_flags} exhaustive fallbacks"
        ),
    )
}

fn c9_duality() -> Outcome {
    let mut rng = SeededRng::new(9);
    let mut tried = 0;
    let mut mismatches = 0;
    let mut feasible = 0;
    while tried < 200 {
        let n = rng.between(1, 10);
        let m = rng.between(1, 10);
        let h = gen_random_hypergraph(n, m, 4, &mut rng);
        if !h.isolated_vertices().is_empty() {
            continue;
        }
        tried += 1;
        let sec = two_section(&h);
        let d = dual(&h).unwrap();
        let ed = brute_ed(&sec, &gate()).unwrap();
        let eed = brute_hyper_eed(&d, &gate()).unwrap();
        if ed.is_solution() != eed.is_solution() {
            mismatches += 1;
        }
        // Vertex v of H is hyperedge v of the dual, so certificates carry over
        // unchanged.
        if let Found::Solution(set) = &ed {
            feasible += 1;
            if !verify_hyper_eed(&d, set).unwrap() {
                mismatches += 1;
            }
        }
        if let Found::Solution(set) = &eed {
            if !verify_ed(&sec, set).unwrap() {
                mismatches += 1;
            }
        }
    }
    outcome(
        mismatches == 0,
        format!("{tried} hypergraphs ({feasible} feasible), {mismatches} mismatches"),
    )
}

fn c10_square_is_neighborhood_line_graph() -> Outcome {
    let mut rng = SeededRng::new(10);
    let mut mismatches = 0;
    for _ in 0..500 {
        let g = random_graph(&mut rng, 1, 8);
        let lg = hyper_line_graph(&closed_neighborhood_hypergraph(&g));
        if lg.graph != square(&g) {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("500 graphs, {mismatches} mismatches"),
    )
}

fn perf_instance(n: usize, seed: u64) -> Graph {
    // About 4.5 edges per vertex after duplicates collapse.
    gen_dually_chordal_with(n, 11 * n / 2, 5, seed)
}

fn median_time(g: &Graph) -> Duration {
    let mut times: Vec<Duration> = (0..5)
        .map(|_| {
            let start = Instant::now();
            let cert = solve_ed(g, MethodChoice::Dc).unwrap();
            let t = start.elapsed();
            assert_eq!(cert.method, Method::DuallyChordal);
            t
        })
        .collect();
    times.sort();
    times[2]
}

fn c11_performance() -> Outcome {
    let small = perf_instance(100_000, 11);
    let large = perf_instance(200_000, 12);
    let t1 = median_time(&small);
    let t2 = median_time(&large);
    let ratio = t2.as_secs_f64() / t1.as_secs_f64();
    outcome(
        t1 < Duration::from_secs(5) && ratio <= 2.5,
        format!(
            "(n, m) = ({}, {}): {:.3}s; ({}, {}): {:.3}s; ratio {ratio:.2}",
            small.n(),
            small.m(),
            t1.as_secs_f64(),
            large.n(),
            large.m(),
            t2.as_secs_f64()
        ),
    )
}

fn flag(flags: &mut Vec<String>, cell: &str, method: Method, status: Status) {
    if !method.is_polynomial() || status == Status::ResourceLimited {
        flags.push(cell.to_string());
    }
}

fn c12_dispatch_matrix() -> Outcome {
    let mut rng = SeededRng::new(12);
    let mut flags: Vec<String> = Vec::new();
    for seed in 0..300u64 {
        let n = rng.between(1, 30);
        let m = rng.between(1, 30);

        let g = gen_chordal(n, 20_000 + seed);
        let c = solve_eed(&g, MethodChoice::Auto).unwrap();
        flag(&mut flags, "chordal/eed", c.method, c.status);
        let c = solve_mim(&g, MethodChoice::Auto).unwrap();
        flag(&mut flags, "chordal/mim", c.method, c.status);

        let g = gen_dually_chordal(n, m, 21_000 + seed);
        let c = solve_ed(&g, MethodChoice::Auto).unwrap();
        flag(&mut flags, "dually-chordal/ed", c.method, c.status);
        if c.method != Method::DuallyChordal {
            flags.push("dually-chordal/ed not dc".into());
        }
        let c = solve_eed(&g, MethodChoice::Auto).unwrap();
        flag(&mut flags, "dually-chordal/eed", c.method, c.status);

        let a = gen_alpha_acyclic(n, m, 22_000 + seed);
        let c = solve_hyper_eed(&a, MethodChoice::Auto).unwrap();
        flag(&mut flags, "alpha-acyclic/eed", c.method, c.status);
        if c.method != Method::DuallyChordal {
            flags.push("alpha-acyclic/eed not dc".into());
        }
        let c = solve_hyper_mim(&a, MethodChoice::Auto).unwrap();
        flag(&mut flags, "alpha-acyclic/mim", c.method, c.status);

        let t = gen_hypertree(n, m, 23_000 + seed);
        let c = solve_hyper_ed(&t, MethodChoice::Auto).unwrap();
        flag(&mut flags, "hypertree/ed", c.method, c.status);
        if c.method != Method::DuallyChordal {
            flags.push("hypertree/ed not dc".into());
        }
        let c = solve_exact_cover(&t, MethodChoice::Auto).unwrap();
        flag(&mut flags, "hypertree/xc", c.method, c.status);
    }
    flags.sort();
    let mut summary: Vec<String> = Vec::new();
    for f in &flags {
        if !summary.iter().any(|s| s.starts_with(f.as_str())) {
            let count = flags.iter().filter(|g| *g == f).count();
            summary.push(format!("{f} x{count}"));
        }
    }
    outcome(
        flags.is_empty(),
        if flags.is_empty() {
            "300 instances per class, 8 cells, no exhaustive or resource-limited results"
                .to_string()
        } else {
            format!("flagged: {}", summary.join(", "))
        },
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("ED matches exhaustive search", c1_ed_oracle),
        (
            "dually chordal ED agrees with the square reduction and exhaustive search",
            c2_algorithm_paths,
        ),
        (
            "maximum neighbors decide adjacency in the square",
            c3_max_neighbor_adjacency,
        ),
        (
            "maximum neighborhood orderings are PEOs of the square",
            c4_mno_is_square_peo,
        ),
        (
            "class closure of squares, line graphs and 2-sections",
            c5_closure,
        ),
        (
            "EED matches exhaustive search; chordal iff dually chordal when solvable",
            c6_eed_oracle,
        ),
        (
            "split gadget raises the independence number of the square by one",
            c7_split_gadget,
        ),
        (
            "exact cover gadget and hypertree exact cover",
            c8_exact_cover,
        ),
        ("ED on the 2-section equals EED on the dual", c9_duality),
        (
            "square equals the line graph of the closed neighborhood hypergraph",
            c10_square_is_neighborhood_line_graph,
        ),
        ("linear-time ED scaling", c11_performance),
        (
            "class dispatch never falls back to exhaustive search",
            c12_dispatch_matrix,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} [{}; {:.1}s]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
