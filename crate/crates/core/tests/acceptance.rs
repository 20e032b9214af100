//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary so the lines reach the test log. The process
//! exits non-zero when a criterion fails, unless the failure is listed in
//! `KNOWN_FAILURES` and reproduces exactly as recorded there.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use avecc::conjectures::{lookup, refute_a100, scan, ScanReport, ScanRequest};
use avecc::enumeration::{
    enumerate_connected_graphs, enumerate_trees, enumerate_unicyclic, starlike_partitions, GraphClass,
};
use avecc::families::{closed_form_ecc, lollipop_kstar, make, FamilySpec};
use avecc::graph::distance::{average_eccentricity, eccentricities};
use avecc::rational::{int, ratio};
use avecc::transforms::{
    pendant_paths_at, pi_transform, preserves_eccentricities, removable_pendant, sigma_transform,
    IntegerPartitionPair,
};
use avecc::{bfs_distances, canonical_certificate, encode_graph6, Graph, Rational};

/// Criteria whose claims do not hold, with the exact outcome expected to
/// reproduce.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    12,
    "A.462-L connected_graphs: 4 violations [C^ C~ D~{ E~~w]; A.460-L connected_graphs: 1 violation [C~]",
)];

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn family(spec: FamilySpec) -> Graph {
    make(&spec).expect("valid family")
}

fn ecc(g: &Graph) -> Rational {
    average_eccentricity(g).expect("connected")
}

fn cert(g: &Graph) -> Vec<u8> {
    canonical_certificate(g)
}

fn trees(n: usize) -> Vec<Graph> {
    enumerate_trees(n).expect("within cap").collect()
}

fn c1_closed_forms() -> Outcome {
    let mut specs = Vec::new();
    for n in 1..=64 {
        specs.push(FamilySpec::complete(n));
        specs.push(FamilySpec::path(n));
        if n >= 3 {
            specs.push(FamilySpec::cycle(n));
            specs.push(FamilySpec::star(n));
        }
    }
    for a in 1..=16 {
        for b in 1..=16 {
            specs.push(FamilySpec::complete_bipartite(a, b));
        }
    }
    for n in 5..=64 {
        for delta in 3..=n - 2 {
            specs.push(FamilySpec::broom(n, delta));
        }
    }
    let mut mismatches = Vec::new();
    for spec in &specs {
        if closed_form_ecc(spec).expect("closed form") != ecc(&family(spec.clone())) {
            mismatches.push(spec.to_string());
        }
    }
    // Full profiles up to Q_12; Q_13..Q_16 are vertex-transitive, so one BFS
    // from vertex 0 gives every eccentricity.
    let mut cubes = 0;
    for d in 1..=16 {
        let q = hypercube(d);
        let avg = if d <= 12 {
            ecc(&q)
        } else {
            int(*bfs_distances(&q, 0).expect("vertex").iter().max().unwrap() as i64)
        };
        cubes += 1;
        if avg != int(d as i64) {
            mismatches.push(format!("hypercube d={d}"));
        }
    }
    outcome(
        mismatches.is_empty(),
        format!(
            "{} graphs + Q_1..Q_16 ({} cubes, BFS from one vertex for d >= 13), {} mismatches {:?}",
            specs.len(),
            cubes,
            mismatches.len(),
            mismatches
        ),
    )
}

fn hypercube(d: usize) -> Graph {
    if d <= 12 {
        return family(FamilySpec::hypercube(d));
    }
    let n = 1usize << d;
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|v| (0..d).map(move |b| (v, v ^ (1 << b))).filter(|&(v, u)| v < u)).collect();
    Graph::from_edges(n, &edges).expect("hypercube edges")
}

fn c2_pi() -> Outcome {
    let (mut applied, mut rejected, mut bad) = (0usize, 0usize, Vec::new());
    for n in 3..=12 {
        for t in trees(n) {
            let before = ecc(&t);
            for w in 0..n {
                let paths = pendant_paths_at(&t, w);
                for (i, longer) in paths.iter().enumerate() {
                    for (j, shorter) in paths.iter().enumerate() {
                        if i == j || longer.len() < shorter.len() {
                            continue;
                        }
                        match pi_transform(&t, w, longer, shorter) {
                            Ok(h) => {
                                applied += 1;
                                if !(h.is_tree() && h.n() == n && ecc(&h) > before) {
                                    bad.push(encode_graph6(&t));
                                }
                            }
                            Err(_) => rejected += 1,
                        }
                    }
                }
            }
        }
    }
    outcome(
        applied > 0 && bad.is_empty(),
        format!("{applied} transforms on trees n <= 12 ({rejected} inadmissible), {} exceptions", bad.len()),
    )
}

fn c3_broom_maximizer() -> Outcome {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 6..=14 {
        let all: Vec<(usize, Rational, Graph)> =
            trees(n).into_iter().map(|t| (t.max_degree(), ecc(&t), t)).collect();
        for delta in 3..=n - 2 {
            cases += 1;
            let class: Vec<&(usize, Rational, Graph)> = all.iter().filter(|(d, _, _)| *d == delta).collect();
            let best = class.iter().map(|(_, e, _)| *e).max().expect("class non-empty");
            let top: Vec<&Graph> = class.iter().filter(|(_, e, _)| *e == best).map(|(_, _, g)| g).collect();
            let broom = family(FamilySpec::broom(n, delta));
            if top.len() != 1 || cert(top[0]) != cert(&broom) {
                failures.push((n, delta));
            }
        }
    }
    outcome(failures.is_empty(), format!("{cases} (n, Δ) classes, failures {failures:?}"))
}

fn c4_sigma() -> Outcome {
    let (mut applied, mut bad) = (0usize, Vec::new());
    for n in 2..=8 {
        for g in enumerate_connected_graphs(n).expect("within cap") {
            let before = ecc(&g);
            for (u, v) in g.bridges() {
                for bridge in [(u, v), (v, u)] {
                    if let Ok(h) = sigma_transform(&g, bridge) {
                        applied += 1;
                        if !(h.n() == n && ecc(&h) < before) {
                            bad.push(encode_graph6(&g));
                        }
                    }
                }
            }
        }
    }
    outcome(
        applied > 0 && bad.is_empty(),
        format!("{applied} transforms on connected graphs n <= 8, {} exceptions", bad.len()),
    )
}

fn c5_starlike() -> Outcome {
    let (mut pairs, mut trees_seen) = (0usize, 0usize);
    let mut bad = Vec::new();
    for n in 3..=14 {
        for k in 2..n {
            let parts = starlike_partitions(n - 1, k);
            let values: Vec<Rational> =
                parts.iter().map(|p| ecc(&family(FamilySpec::starlike(p)))).collect();
            for (x, ex) in parts.iter().zip(&values) {
                for (y, ey) in parts.iter().zip(&values) {
                    if x == y {
                        continue;
                    }
                    let pair = IntegerPartitionPair::new(x.clone(), y.clone()).expect("same total");
                    if pair.majorizes() {
                        pairs += 1;
                        if ex < ey {
                            bad.push(format!("{x:?} ≻ {y:?}"));
                        }
                    }
                }
            }
            if k < 3 {
                continue;
            }
            let top = family(FamilySpec::broom(n, k));
            let bottom = family(FamilySpec::balanced_starlike(n, k));
            let (e_top, e_bottom) = (ecc(&top), ecc(&bottom));
            for (p, e) in parts.iter().zip(&values) {
                trees_seen += 1;
                let t = family(FamilySpec::starlike(p));
                let ok = *e <= e_top
                    && *e >= e_bottom
                    && (*e != e_top || cert(&t) == cert(&top))
                    && (*e != e_bottom || cert(&t) == cert(&bottom));
                if !ok {
                    bad.push(format!("sandwich {p:?}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{pairs} majorizing pairs, {trees_seen} starlike trees sandwiched, exceptions {bad:?}"),
    )
}

fn c6_pendant() -> Outcome {
    let (mut checked, mut bad) = (0usize, Vec::new());
    for n in 4..=14 {
        for t in trees(n) {
            if t.max_degree() <= 2 {
                continue;
            }
            checked += 1;
            let before = eccentricities(&t).expect("tree");
            let ok = removable_pendant(&t)
                .map(|v| t.degree(v) == 1 && preserves_eccentricities(&t, &before, v))
                .unwrap_or(false);
            if !ok {
                bad.push(encode_graph6(&t));
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} non-path trees, {} failures", bad.len()))
}

fn equality_certs(report: &ScanReport) -> BTreeMap<usize, BTreeSet<Vec<u8>>> {
    let mut out: BTreeMap<usize, BTreeSet<Vec<u8>>> = BTreeMap::new();
    for w in &report.equality_graphs {
        let g = avecc::decode_graph6(&w.graph6).expect("witness graph6");
        out.entry(w.n).or_default().insert(cert(&g));
    }
    out
}

fn c7_a478() -> Outcome {
    let spec = lookup("A.478-U").unwrap();
    let mut notes = Vec::new();
    let mut pass = true;
    for (class, hi) in [(GraphClass::Trees, 14), (GraphClass::ConnectedGraphs, 8)] {
        let report = scan(&spec, &ScanRequest::new(class, 4, hi)).expect("scan");
        let eq = equality_certs(&report);
        let mut wrong = Vec::new();
        for n in 4..=hi {
            let named = if n % 2 == 1 { FamilySpec::path(n) } else { FamilySpec::broom(n, 3) };
            let want: BTreeSet<Vec<u8>> = [cert(&family(named))].into();
            if eq.get(&n) != Some(&want) {
                wrong.push(n);
            }
        }
        pass &= report.violation_count() == 0 && wrong.is_empty();
        notes.push(format!(
            "{}: {} graphs, {} violations, equality-set mismatches {:?}",
            class.name(),
            report.graphs_scanned,
            report.violation_count(),
            wrong
        ));
    }
    outcome(pass, notes.join("; "))
}

fn c8_randic_upper() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for id in ["A.462-U", "A.464-U"] {
        let report = scan(&lookup(id).unwrap(), &ScanRequest::new(GraphClass::ConnectedGraphs, 4, 8)).expect("scan");
        let mut wrong = Vec::new();
        for o in &report.per_order {
            let path = cert(&family(FamilySpec::path(o.n)));
            let extremal: Vec<Vec<u8>> =
                o.extremal_graphs.iter().map(|s| cert(&avecc::decode_graph6(s).unwrap())).collect();
            if extremal != vec![path] {
                wrong.push(o.n);
            }
        }
        pass &= report.violation_count() == 0 && wrong.is_empty();
        notes.push(format!("{id}: {} violations, non-path extremal at {:?}", report.violation_count(), wrong));
    }
    outcome(pass, notes.join("; "))
}

fn c9_a100() -> Outcome {
    let main = refute_a100(&[20], &[20]).expect("grid");
    let row = &main.rows[0];
    let ks: Vec<usize> = (2..=20).step_by(2).collect();
    let deltas: Vec<usize> = (2..=20).collect();
    let grid = refute_a100(&ks, &deltas).expect("grid");
    let boundary = grid.rows.iter().find(|r| r.k == 10 && r.delta == 10).expect("boundary row");
    let pass = row.n == 422
        && row.bound == int(842)
        && row.violated
        && row.bfs_agrees
        && grid.rows.iter().all(|r| r.bfs_agrees)
        && boundary.criterion == 0;
    outcome(
        pass,
        format!(
            "PC(20,20): n={} δ·ecc={} > {} (margin {}); grid {} rows, {} violated; boundary (10,10) margin {} violated={}",
            row.n,
            row.product,
            row.bound,
            row.margin,
            grid.rows.len(),
            grid.violations,
            boundary.margin,
            boundary.violated
        ),
    )
}

fn c10_minimality() -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=14 {
        let star = cert(&family(FamilySpec::star(n)));
        let all: Vec<(Rational, Graph)> = trees(n).into_iter().map(|t| (ecc(&t), t)).collect();
        let best = all.iter().map(|(e, _)| *e).min().unwrap();
        let top: Vec<&Graph> = all.iter().filter(|(e, _)| *e == best).map(|(_, g)| g).collect();
        if top.len() != 1 || cert(top[0]) != star {
            bad.push(format!("trees n={n}"));
        }
    }
    for n in 4..=10 {
        let graphs = enumerate_unicyclic(n).expect("within cap");
        let best = graphs.iter().map(ecc).min().unwrap();
        let s_prime = family(FamilySpec::star_plus_edge(n));
        if best != int(2) - ratio(1, n as i64) || ecc(&s_prime) != best {
            bad.push(format!("unicyclic n={n}"));
        }
    }
    outcome(bad.is_empty(), format!("trees n <= 14, unicyclic 4 <= n <= 10, failures {bad:?}"))
}

fn c11_lollipop() -> Outcome {
    let mut exceptions = Vec::new();
    let mut bfs_checked = 0;
    for n in 10..=200 {
        let ks = lollipop_kstar(n).expect("n >= 4");
        for &k in &ks.argmax {
            if (k as f64 - ks.root).abs() > 1.0 {
                exceptions.push(format!("n={n} k={k} k*={:.3}", ks.root));
            }
        }
        if n <= 40 {
            for k in 2..n {
                let direct = ecc(&family(FamilySpec::lollipop(n, k))) * int(k as i64);
                assert_eq!(direct, avecc::families::lollipop_product(n, k).unwrap(), "LP({n},{k})");
                bfs_checked += 1;
            }
        }
    }
    outcome(
        exceptions.is_empty(),
        format!("191 orders, {} exceptions {:?}; product checked by BFS on {bfs_checked} lollipops", exceptions.len(), exceptions),
    )
}

fn c12_open() -> Outcome {
    let ids = [
        "A.462-L",
        "A.464-L-randic",
        "A.458-L",
        "A.460-L",
        "A.479-U",
        "A.492-U",
        "A.464-L-domination-corrected",
    ];
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for id in ids {
        let spec = lookup(id).unwrap();
        for (class, hi) in [(GraphClass::Trees, 14), (GraphClass::ConnectedGraphs, 8)] {
            let report = scan(&spec, &ScanRequest::new(class, 4, hi)).expect("scan");
            let count = report.violation_count();
            if count > 0 {
                let witnesses: Vec<&str> = report.violations.iter().map(|w| w.graph6.as_str()).collect();
                failures.push(format!("{id} {}: {count} violation{} [{}]", class.name(), if count == 1 { "" } else { "s" }, witnesses.join(" ")));
            }
        }
    }
    let original = scan(&lookup("domination-original").unwrap(), &ScanRequest::new(GraphClass::Trees, 4, 14)).expect("scan");
    let witness = original.violations.first().map(|w| format!("n={} {}", w.n, w.graph6));
    match &witness {
        Some(w) => notes.push(format!("original domination refuted on trees, {} witnesses, first {w}", original.violations.len())),
        None => failures.push("original domination: no witness".into()),
    }
    let summary = if failures.is_empty() { "7 open conjectures clean".to_string() } else { failures.join("; ") };
    outcome(failures.is_empty(), format!("{summary}; {}", notes.join("; ")))
}

fn c13_counts() -> Outcome {
    const TREES: [usize; 14] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];
    const GRAPHS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
    let mut bad = Vec::new();
    for n in 1..=14 {
        let got = enumerate_trees(n).unwrap().count();
        if got != TREES[n - 1] {
            bad.push(format!("trees n={n}: {got}"));
        }
    }
    for n in 1..=8 {
        let got = enumerate_connected_graphs(n).unwrap().len();
        if got != GRAPHS[n - 1] {
            bad.push(format!("graphs n={n}: {got}"));
        }
    }
    for n in 1..=6 {
        let (brute_graphs, brute_trees) = brute_force(n);
        let graphs: BTreeSet<Vec<u8>> = enumerate_connected_graphs(n).unwrap().iter().map(cert).collect();
        let tree_set: BTreeSet<Vec<u8>> = trees(n).iter().map(cert).collect();
        if graphs != brute_graphs || tree_set != brute_trees {
            bad.push(format!("brute force n={n}"));
        }
    }
    outcome(bad.is_empty(), format!("trees n <= 14, graphs n <= 8, brute force n <= 6; mismatches {bad:?}"))
}

fn brute_force(n: usize) -> (BTreeSet<Vec<u8>>, BTreeSet<Vec<u8>>) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let (mut graphs, mut trees) = (BTreeSet::new(), BTreeSet::new());
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            let c = cert(&g);
            if edges.len() + 1 == n {
                trees.insert(c.clone());
            }
            graphs.insert(c);
        }
    }
    (graphs, trees)
}

fn main() {
    let criteria: [(u32, &str, Check); 13] = [
        (1, "closed forms equal BFS", c1_closed_forms),
        (2, "π strictly increases ecc", c2_pi),
        (3, "B(n,Δ) unique maximizer", c3_broom_maximizer),
        (4, "σ strictly decreases ecc", c4_sigma),
        (5, "starlike majorization and sandwich", c5_starlike),
        (6, "removable pendant", c6_pendant),
        (7, "A.478-U scan", c7_a478),
        (8, "A.462-U / A.464-U scan", c8_randic_upper),
        (9, "A.100-U counterexample", c9_a100),
        (10, "star / unicyclic minimality", c10_minimality),
        (11, "lollipop k*", c11_lollipop),
        (12, "open-conjecture regression", c12_open),
        (13, "enumeration counts", c13_counts),
    ];
    let mut unexpected = 0;
    let mut failed = 0;
    let total = Instant::now();
    for (id, name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id);
        println!(
            "{} {id:>2} {name}: {} [{}]",
            if result.pass { "PASS" } else { "FAIL" },
            result.detail,
            seconds(elapsed)
        );
        if !result.pass {
            failed += 1;
            match known {
                Some((_, expected)) if result.detail.starts_with(expected) => {
                    println!("     known failure, reproduced as recorded");
                }
                _ => unexpected += 1,
            }
        } else if known.is_some() {
            println!("     listed as a known failure but passed");
            unexpected += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed ({unexpected} unexpected) in {}",
        13 - failed,
        seconds(total.elapsed())
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}

fn seconds(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}
