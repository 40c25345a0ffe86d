//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness; exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use bigeodetic::analysis::{classify, geodesic_counts, vertex_connectivity, GraphReport};
use bigeodetic::catalog::{self, known_biplanes, known_triplanes};
use bigeodetic::construct::star_construct;
use bigeodetic::design::{intersection_profile, verify_design, Design, DesignParams};
use bigeodetic::numbertheory::{
    brc_check, form_value, holzer_search, legendre_solvable, local_obstruction, reduce_form,
};
use bigeodetic::pattern::{biplane_params, pattern_scan};
use bigeodetic::search::{search_design, SearchBudget, SearchOutcome};
use bigeodetic::Graph;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn report_for(design: &Design) -> Result<(Graph, GraphReport), String> {
    let star = star_construct(design).map_err(|e| e.to_string())?;
    let report = classify(star.graph()).map_err(|e| e.to_string())?;
    Ok((star.graph().clone(), report))
}

fn catalog_report(name: &str) -> Result<(Design, GraphReport), String> {
    let entry = catalog::get_design(name).map_err(|e| e.to_string())?;
    let (_, report) = report_for(&entry.design)?;
    Ok((entry.design, report))
}

fn degrees(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

fn summary(r: &GraphReport) -> String {
    format!(
        "|V|={} |E|={} deg={:?} kappa={} index={} diam={}",
        r.n_vertices,
        r.n_edges,
        r.degree_multiset,
        r.vertex_connectivity,
        r.geodetic_index,
        r.diameter
    )
}

fn ac1() -> Check {
    let (_, r) = catalog_report("fig2")?;
    ensure!(
        r.n_vertices == 49 && r.n_edges == 84,
        "size {}",
        summary(&r)
    );
    ensure!(
        r.degree_multiset == degrees(&[(6, 7), (3, 42)]),
        "degrees {}",
        summary(&r)
    );
    ensure!(r.vertex_connectivity == 3, "connectivity {}", summary(&r));
    ensure!(r.geodetic_index <= 2, "index {}", summary(&r));
    ensure!(r.diameter == 5, "diameter {}", summary(&r));
    Ok(summary(&r))
}

fn ac2() -> Check {
    let (design, r) = catalog_report("fig1")?;
    ensure!(
        r.n_vertices == 36 && r.n_edges == 60,
        "size {}",
        summary(&r)
    );
    ensure!(
        r.degree_multiset == degrees(&[(5, 6), (3, 30)]),
        "degrees {}",
        summary(&r)
    );
    ensure!(r.vertex_connectivity == 3, "connectivity {}", summary(&r));
    ensure!(r.geodetic_index <= 2, "index {}", summary(&r));
    ensure!(r.diameter == 4, "diameter {}", summary(&r));
    let profile = intersection_profile(&design, 2).map_err(|e| e.to_string())?;
    ensure!(!profile.has_disjoint_pair, "fig1 has a disjoint block pair");
    Ok(format!("{}; every block pair intersects", summary(&r)))
}

fn ac3() -> Check {
    let (_, r3) = catalog_report("fig3")?;
    ensure!(r3.n_vertices == 16, "fig3 {}", summary(&r3));
    ensure!(
        r3.class_membership == Some((3, 3, 4)),
        "fig3 class {:?}",
        r3.class_membership
    );
    let (_, r4) = catalog_report("fig4")?;
    // (n² + n + 2)(n + 2)/2 with n = 3.
    ensure!(r4.n_vertices == 35, "fig4 {}", summary(&r4));
    ensure!(
        r4.class_membership == Some((4, 4, 4)),
        "fig4 class {:?}",
        r4.class_membership
    );
    Ok("fig3 in B(3,3,4) on 16 vertices, fig4 in B(4,4,4) on 35 vertices".into())
}

fn ac4() -> Check {
    let mut parts = Vec::new();
    for n in [4usize, 6, 7, 9] {
        let params = DesignParams::new(n * (n - 1) / 3, n, n - 1, 3, 2);
        let outcome = search_design(params, SearchBudget::default()).map_err(|e| e.to_string())?;
        let SearchOutcome::Found(design) = outcome.outcome else {
            return Err(format!("{params}: {:?}", outcome.outcome));
        };
        ensure!(
            verify_design(&design).map_err(|e| e.to_string())?.params == Some(params),
            "{params}: search result does not verify"
        );
        let (_, r) = report_for(&design)?;
        let expected = if n - 1 == 3 {
            degrees(&[(3, n * n)])
        } else {
            degrees(&[(n - 1, n), (3, n * (n - 1))])
        };
        ensure!(r.n_vertices == n * n, "n={n}: {}", summary(&r));
        ensure!(r.degree_multiset == expected, "n={n}: {}", summary(&r));
        ensure!(r.vertex_connectivity == 3, "n={n}: {}", summary(&r));
        ensure!(r.geodetic_index <= 2, "n={n}: {}", summary(&r));
        ensure!(matches!(r.diameter, 4 | 5), "n={n}: {}", summary(&r));
        parts.push(format!(
            "n={n}: {} nodes, diam {}",
            outcome.stats.explored, r.diameter
        ));
    }
    Ok(parts.join("; "))
}

fn ac5() -> Check {
    let rows = pattern_scan(12).map_err(|e| e.to_string())?;
    ensure!(rows.len() == 11, "{} rows", rows.len());
    let holds: Vec<u64> = rows
        .iter()
        .filter(|r| r.pattern_holds)
        .map(|r| r.n)
        .collect();
    ensure!(
        holds == [2, 3, 4, 5, 8, 10, 12],
        "pattern holds on {holds:?}"
    );
    let known = known_biplanes();
    for row in &rows {
        let params = biplane_params(row.n).map_err(|e| e.to_string())?;
        let brc = brc_check(params.0, params.1, params.2).map_err(|e| e.to_string())?;
        let in_list = known.contains(&params);
        ensure!(
            row.pattern_holds == brc.passes && brc.passes == in_list,
            "n={}: pattern {}, brc {}, known {}",
            row.n,
            row.pattern_holds,
            brc.passes,
            in_list
        );
    }
    Ok(format!(
        "pattern = BRC = known on 2..=12, holds on {holds:?}"
    ))
}

fn ac6() -> Check {
    let values: Vec<i64> = (-30..=30).filter(|&v| v != 0).collect();
    let (mut solvable, mut unsolvable) = (0u32, 0u32);
    for &a in &values {
        for &b in &values {
            for &c in &values {
                let form = reduce_form(a, b, c).map_err(|e| e.to_string())?;
                let local = local_obstruction(&form);
                let found = holzer_search(&form);
                ensure!(
                    local.is_none() == found.is_some(),
                    "({a}, {b}, {c}): local filter {local:?}, box search {found:?}"
                );
                let outcome = legendre_solvable(a, b, c).map_err(|e| e.to_string())?;
                ensure!(
                    outcome.solvable == found.is_some(),
                    "({a}, {b}, {c}): verdict mismatch"
                );
                if let Some(w) = outcome.witness {
                    ensure!(w != [0, 0, 0], "({a}, {b}, {c}): zero witness");
                    let value = form_value([a, b, c], w).map_err(|e| e.to_string())?;
                    ensure!(value == 0, "({a}, {b}, {c}): witness {w:?} gives {value}");
                    solvable += 1;
                } else {
                    unsolvable += 1;
                }
            }
        }
    }
    Ok(format!(
        "{solvable} solvable, {unsolvable} unsolvable, all agree"
    ))
}

fn geodesic_graphs() -> Vec<(String, Graph)> {
    let mut graphs: Vec<(String, Graph)> = common::random_graphs(0x5eed, 200, 30)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("random #{i}"), g))
        .collect();
    for name in catalog::names() {
        let g = common::star_of(name);
        if g.n_vertices() <= 50 {
            graphs.push((format!("star({name})"), g));
        }
    }
    graphs
}

fn ac7() -> Check {
    let graphs = geodesic_graphs();
    let mut pairs = 0usize;
    for (name, g) in &graphs {
        let fast = geodesic_counts(g).map_err(|e| format!("{name}: {e}"))?;
        let slow = common::enumerate_geodesics(g);
        for (u, row) in slow.iter().enumerate() {
            for (v, &expected) in row.iter().enumerate() {
                ensure!(
                    fast.get(u, v) == expected,
                    "{name}: pair ({u}, {v}) gives {:?}, enumeration {expected:?}",
                    fast.get(u, v)
                );
                pairs += 1;
            }
        }
    }
    Ok(format!("{} graphs, {pairs} ordered pairs", graphs.len()))
}

fn ac8() -> Check {
    let mut graphs = common::small_fixtures();
    graphs.extend(
        geodesic_graphs()
            .into_iter()
            .filter(|(_, g)| g.n_vertices() <= 20),
    );
    let two_triangles =
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    graphs.push(("two triangles".into(), two_triangles));
    for (name, g) in &graphs {
        let flow = vertex_connectivity(g).map_err(|e| format!("{name}: {e}"))?;
        let brute = common::brute_force_connectivity(g);
        ensure!(
            flow == brute,
            "{name}: max-flow {flow}, brute force {brute}"
        );
    }
    Ok(format!("{} graphs with at most 20 vertices", graphs.len()))
}

fn ac9() -> Check {
    let (_, r) = catalog_report("triplane-5")?;
    ensure!(r.n_vertices == 25, "triplane-5 {}", summary(&r));
    ensure!(
        r.degree_multiset == degrees(&[(4, 25)]),
        "triplane-5 {}",
        summary(&r)
    );
    ensure!(r.diameter == 4, "triplane-5 {}", summary(&r));
    ensure!(r.geodetic_index <= 3, "triplane-5 {}", summary(&r));

    let params = DesignParams::new(10, 5, 6, 3, 3);
    let outcome = search_design(params, SearchBudget::default()).map_err(|e| e.to_string())?;
    let SearchOutcome::Found(design) = outcome.outcome else {
        return Err(format!("{params}: {:?}", outcome.outcome));
    };
    let (_, s) = report_for(&design)?;
    ensure!(s.n_vertices == 35, "{params} {}", summary(&s));
    ensure!(s.geodetic_index <= 3, "{params} {}", summary(&s));
    Ok(format!(
        "triplane-5 index {}, searched {params} index {}",
        r.geodetic_index, s.geodetic_index
    ))
}

fn ac10() -> Check {
    let entries = catalog::entries();
    for entry in &entries {
        let report = verify_design(&entry.design).map_err(|e| e.to_string())?;
        ensure!(
            report.valid && report.params == Some(entry.params),
            "{} does not verify",
            entry.name
        );
    }
    let triples: Vec<_> = known_biplanes()
        .into_iter()
        .chain(known_triplanes())
        .collect();
    ensure!(triples.len() == 14, "{} known triples", triples.len());
    for (n, k, l) in &triples {
        let verdict = brc_check(*n, *k, *l).map_err(|e| e.to_string())?;
        ensure!(verdict.passes, "({n}, {k}, {l}): {verdict}");
    }
    Ok(format!(
        "{} designs verify, 14 known triples pass BRC",
        entries.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("fig2 star graph", ac1),
        ("fig1 star graph", ac2),
        ("fig3/fig4 class membership", ac3),
        ("searched 2-(n,3,2) designs", ac4),
        ("pattern scan to 12", ac5),
        ("Legendre local filter vs box search", ac6),
        ("geodesic counts vs path enumeration", ac7),
        ("max-flow vs brute-force connectivity", ac8),
        ("trigeodetic analogues", ac9),
        ("catalog integrity", ac10),
    ];
    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] AC{:<2} {title}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] AC{:<2} {title}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
