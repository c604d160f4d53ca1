//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use mgs_core::engine::{check_bridge_attachment, SearchGraph, SearchOptions};
use mgs_core::triangulation::{
    enumerate_triangulations, flip_mutation_square, mgs_endpoint_is_tau, peel_witnesses, Triangulation,
};
use mgs_core::typea::{cycle_count, minimal_mgs};
use mgs_core::{is_mgs, shortest_mgs, MutationSequence, Quiver, Seed};

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn from(failures: Vec<String>, detail: impl Into<String>) -> Self {
        Outcome {
            failures,
            detail: detail.into(),
        }
    }
}

fn corpus(ms: std::ops::RangeInclusive<usize>) -> Vec<Triangulation> {
    ms.flat_map(|m| enumerate_triangulations(m).expect("enumeration"))
        .collect()
}

fn name(t: &Triangulation) -> String {
    let arcs: Vec<String> = t.arcs().iter().map(|c| c.to_string()).collect();
    format!("{}-gon [{}]", t.m(), arcs.join(" "))
}

fn sequential() -> SearchOptions {
    SearchOptions::sequential()
}

// |minimal_mgs| = n + t = |shortest_mgs| on every triangulation with 4 <= m <= 11.
fn minimality() -> Outcome {
    let ts = corpus(4..=11);
    let failures: Vec<String> = ts
        .par_iter()
        .filter_map(|t| {
            let q = t.quiver();
            let expected = q.n() + cycle_count(&q);
            let built = minimal_mgs(&q).ok()?;
            let shortest = mgs_core::engine::shortest_mgs_with(&q, sequential()).ok()?;
            let ok = is_mgs(&q, &built) && built.len() == expected && shortest.len() == expected;
            (!ok).then(|| {
                format!(
                    "{}: built {} shortest {} n+t {}",
                    name(t),
                    built,
                    shortest.len(),
                    expected
                )
            })
        })
        .collect();
    Outcome::from(failures, format!("{} triangulations", ts.len()))
}

// Printed sequences from the worked examples verify.
fn printed_sequences() -> Outcome {
    let cases = [
        (
            "3-cycle",
            common::three_cycle(),
            MutationSequence::new(vec![1, 2, 3, 1]),
            4,
        ),
        (
            "13 vertices",
            common::six_triangles(),
            common::six_triangles_sequence(),
            19,
        ),
        ("25 vertices", common::twenty_five(), common::twenty_five_sequence(), 30),
    ];
    let failures = cases
        .iter()
        .filter(|(_, q, s, len)| !(is_mgs(q, s) && s.len() == *len))
        .map(|(n, ..)| n.to_string())
        .collect();
    Outcome::from(failures, "3 sequences")
}

// Longest MGS lengths of the two 9-vertex chains.
fn longest_lengths() -> Outcome {
    let mut failures = Vec::new();
    let mut detail = Vec::new();
    for (label, q, expected) in [
        ("first", common::chain_first(), 35),
        ("second", common::chain_second(), 37),
    ] {
        let start = Instant::now();
        let g = SearchGraph::build(&q, SearchOptions::default()).expect("search graph");
        let longest = g.longest_mgs_length().expect("longest");
        let shortest = g.shortest_mgs().expect("shortest").len();
        let took = start.elapsed();
        detail.push(format!("{label}: {longest} ({} seeds, {took:.1?})", g.node_count()));
        if longest != expected || took > Duration::from_secs(120) {
            failures.push(format!(
                "{label}: longest {longest}, expected {expected}, took {took:.1?}"
            ));
        }
        if shortest != 13 {
            failures.push(format!("{label}: shortest {shortest}, expected 13"));
        }
        if longest > 45 {
            failures.push(format!("{label}: longest {longest} exceeds n(n+1)/2 = 45"));
        }
    }
    Outcome::from(failures, detail.join("; "))
}

// Flipping along the constructed sequence ends at tau(T), m <= 10.
fn tau_endpoint() -> Outcome {
    let ts = corpus(3..=10);
    let failures = ts
        .par_iter()
        .filter(|t| {
            let s = minimal_mgs(&t.quiver()).expect("type A");
            !matches!(mgs_endpoint_is_tau(t, &s), Ok(true))
        })
        .map(name)
        .collect();
    Outcome::from(failures, format!("{} triangulations", ts.len()))
}

// Quiver of a flip equals the mutated quiver, m <= 9.
fn commuting_square() -> Outcome {
    let ts = corpus(4..=9);
    let mut checked = 0;
    let mut failures = Vec::new();
    for t in &ts {
        for label in 1..=t.n() {
            checked += 1;
            if !flip_mutation_square(t, label).expect("flip") {
                failures.push(format!("{} arc {label}", name(t)));
            }
        }
    }
    Outcome::from(failures, format!("{checked} (triangulation, arc) pairs"))
}

// Every MGS of every triangulation with m <= 8 has a doubly-mutated boundary
// arc on every inscribed polygon met while peeling; min length is n + t.
fn double_flip_witnesses() -> Outcome {
    let ts = corpus(4..=8);
    let results: Vec<(usize, Vec<String>)> = ts
        .par_iter()
        .map(|t| {
            let q = t.quiver();
            let expected = q.n() + cycle_count(&q);
            let g = SearchGraph::build(&q, sequential().labeled()).expect("search graph");
            let mut failures = Vec::new();
            let mut seen = 0usize;
            g.for_each_mgs(|s| {
                seen += 1;
                let s = MutationSequence::new(s.to_vec());
                match peel_witnesses(t, &s) {
                    Some(w) if w.len() == cycle_count(&q) && s.len() >= expected => {}
                    _ => failures.push(format!("{}: {}", name(t), s)),
                }
                failures.len() < 5
            })
            .expect("labeled graph");
            if g.spectrum().expect("spectrum")[0] != expected {
                failures.push(format!("{}: minimum length is not n + t", name(t)));
            }
            (seen, failures)
        })
        .collect();
    let total: usize = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    Outcome::from(failures, format!("{} triangulations, {total} sequences", ts.len()))
}

// Core properties on every triangulation quiver with m <= 9.
fn property_suites() -> Outcome {
    let ts = corpus(3..=9);
    let failures: Vec<String> = ts
        .par_iter()
        .flat_map_iter(|t| properties_of(t).into_iter().map(move |f| format!("{}: {f}", name(t))))
        .collect();
    Outcome::from(failures, format!("{} quivers", ts.len()))
}

fn properties_of(t: &Triangulation) -> Vec<String> {
    let q = t.quiver();
    let n = q.n();
    let mut failures = Vec::new();
    for k in 1..=n {
        let once = q.mutate(k).expect("mutate");
        if once.mutate(k).expect("mutate") != q {
            failures.push(format!("mutation at {k} is not an involution"));
        }
        if (1..=n).any(|i| once.b(i, i) != 0 || (1..=n).any(|j| once.b(i, j) != -once.b(j, i))) {
            failures.push(format!("mutation at {k} breaks skew-symmetry"));
        }
    }
    let g = match SearchGraph::build(&q, sequential()) {
        Ok(g) => g,
        Err(e) => return vec![format!("search failed: {e}")],
    };
    // Building the graph colours every seed, which fails on a mixed column.
    let coframed = Seed::coframed(&q);
    for &s in g.sinks() {
        if !g.seed(s).is_isomorphic_fixing_frozen(&coframed) {
            failures.push("an all-red seed is not isomorphic to the coframed seed".into());
        }
    }
    let spectrum = g.spectrum().expect("spectrum");
    if spectrum[0] < n {
        failures.push(format!("MGS of length {} < n", spectrum[0]));
    }
    if spectrum.windows(2).any(|w| w[1] != w[0] + 1) {
        failures.push(format!("spectrum {spectrum:?} has a gap"));
    }
    if n > 0 {
        let mgs_c = minimal_mgs(&q).expect("type A");
        let single = Quiver::empty(1);
        let a2 = Quiver::from_arrows(2, &[(1, 2)]).expect("A2");
        for i in 1..=n {
            for (d, j) in [(&single, 1), (&a2, 1), (&a2, 2)] {
                if !matches!(check_bridge_attachment(&q, d, (i, j), &mgs_c), Ok(true)) {
                    failures.push(format!("bridge from {i} to a {}-vertex quiver at {j} fails", d.n()));
                }
            }
        }
    }
    failures
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 minimality, 4 <= m <= 11", minimality, Duration::from_secs(300)),
        ("2 printed sequences verify", printed_sequences, Duration::from_secs(1)),
        ("3 longest lengths 35 and 37", longest_lengths, Duration::from_secs(240)),
        ("4 tau endpoint, m <= 10", tau_endpoint, Duration::MAX),
        ("5 flip/mutation square, m <= 9", commuting_square, Duration::MAX),
        ("6 double-flip witnesses, m <= 8", double_flip_witnesses, Duration::MAX),
        ("7 property suites, m <= 9", property_suites, Duration::MAX),
    ];
    // Sanity check that the shared fixtures still parse as expected.
    assert_eq!(shortest_mgs(&common::three_cycle()).expect("search").len(), 4);

    let mut all_ok = true;
    for (label, run, budget) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let ok = out.failures.is_empty() && took <= budget;
        all_ok &= ok;
        println!(
            "criterion {label}: {} ({}; {took:.2?})",
            if ok { "PASS" } else { "FAIL" },
            out.detail
        );
        if took > budget {
            println!("    exceeded time budget of {budget:?}");
        }
        for f in out.failures.iter().take(10) {
            println!("    {f}");
        }
        if out.failures.len() > 10 {
            println!("    ... {} more", out.failures.len() - 10);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
