//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Set `COXFORGE_E_TYPES=1` to include E6, E7 and E8 in the order table.

mod common;

use std::time::{Duration, Instant};

use coxforge::census::simplex_census;
use coxforge::census::{compare_census, maximal_cliques};
use coxforge::classify::{is_spherical, order_of, Order};
use coxforge::conjugacy::{are_conjugate_visual, conjugacy_class};
use coxforge::decompose::{
    apply_twist, build_lambda, c_minimal_classes, scan_vertex_sets, separating_subsets, twisted_separation, Separation,
    TwistData, TwistKind,
};
use coxforge::diagram::canonical_form;
use coxforge::matching::{blow_up, can_blow_up, find_bases, find_max_spherical_simplices, max_rank, verify_lineage, BaseOrder};
use coxforge::oracle::{enumerate_order, parabolic_order, BruteConjugacy, OracleConfig};
use coxforge::{CoxeterDiagram, Label, Subset};
use num_bigint::BigUint;

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

fn orders() -> Outcome {
    let mut cases: Vec<(&str, u128)> = Vec::new();
    let a = ["a1", "a2", "a3", "a4", "a5"];
    for (i, f) in a.iter().enumerate() {
        cases.push((f, factorial(i as u128 + 2)));
    }
    for (n, f) in [(2u32, "c2"), (3, "c3"), (4, "c4")] {
        cases.push((f, 2u128.pow(n) * factorial(n as u128)));
    }
    cases.push(("b4", 2u128.pow(3) * factorial(4)));
    let dih = ["d2_3", "d2_4", "d2_5", "d2_6", "d2_7", "d2_8"];
    for (k, f) in (3u128..=8).zip(dih) {
        cases.push((f, 2 * k));
    }
    cases.push(("f4", 1152));
    cases.push(("g3", 120));
    cases.push(("g4", 120 * 120));
    let e_types = std::env::var("COXFORGE_E_TYPES").is_ok_and(|v| v == "1");
    if e_types {
        cases.push(("e6", 51840));
        cases.push(("e7", 2903040));
        cases.push(("e8", 696729600));
    }
    let mut bad = Vec::new();
    for (f, want) in &cases {
        let d = load(f);
        let got = if f.starts_with('e') {
            parabolic_order(&d, d.all(), 1_000_000).unwrap()
        } else {
            enumerate_order(&d, d.all(), 1_000_000).unwrap() as u128
        };
        if got != *want {
            bad.push(format!("{f}: {got} != {want}"));
        }
    }
    let note = if e_types { "" } else { ", E types skipped" };
    ok(bad.is_empty(), format!("{}/{} coset counts exact{note} {}", cases.len() - bad.len(), cases.len(), bad.join("; ")))
}

fn blowups() -> Outcome {
    let mut r = rng(2);
    let mut cases: Vec<(String, CoxeterDiagram, Subset)> = Vec::new();
    for f in ["c3", "d2_6", "c5", "d2_10"] {
        let d = load(f);
        let all = d.all();
        cases.push((f.to_string(), d, all));
    }
    let shapes: Vec<(CoxeterDiagram, usize)> = vec![(load("c3"), 2), (load("c5"), 4), (load("d2_6"), 0), (load("d2_10"), 0)];
    for i in 0..20 {
        let (base, end) = &shapes[i % shapes.len()];
        let extra = 1 + i % 3;
        let d = decorated_base(&mut r, base, *end, extra);
        let b = Subset::full(base.rank());
        cases.push((format!("variant {i}"), d, b));
    }
    let mut bad = Vec::new();
    let mut checks = 0;
    for (name, d, b) in &cases {
        let Some(base) = find_bases(d).into_iter().find(|x| x.subset == *b) else {
            bad.push(format!("{name}: base missing"));
            continue;
        };
        let Some(plan) = can_blow_up(d, &base).unwrap() else {
            bad.push(format!("{name}: hypothesis rejected"));
            continue;
        };
        let l = blow_up(d, &plan).unwrap();
        let rep = verify_lineage(&l, OracleConfig::default()).unwrap();
        checks += rep.checks.len();
        if !rep.passed() || !rep.checks.iter().any(|c| c.what == "base order halves") {
            let f: Vec<String> = rep.failures().map(|c| format!("{} ({})", c.what, c.detail)).collect();
            bad.push(format!("{name}: {}", f.join(", ")));
        }
    }
    ok(bad.is_empty(), format!("{} lineages, {checks} oracle checks {}", cases.len(), bad.join("; ")))
}

fn max_rank_fixpoint() -> Outcome {
    let mut r = rng(3);
    // Heavy on 2 and inf so that neighbourhoods often satisfy the blow-up hypothesis.
    let mut labels: Vec<Label> = vec![fin(2); 5];
    labels.extend([Label::Infinity; 4]);
    labels.extend([fin(3), fin(3), fin(4), fin(4), fin(5), fin(6), fin(6), fin(6), fin(7), fin(8)]);
    let shapes: Vec<(CoxeterDiagram, usize)> = vec![(load("c3"), 2), (load("c4"), 3), (load("d2_6"), 0)];
    let mut bad = Vec::new();
    let mut steps = 0;
    for i in 0..200 {
        let d = if i % 2 == 0 {
            random_diagram(&mut r, 2 + i % 6, &labels)
        } else {
            let (base, end) = &shapes[(i / 2) % shapes.len()];
            decorated_base(&mut r, base, *end, 1 + i % 4)
        };
        match max_rank(&d, BaseOrder::Lexicographic) {
            Ok(run) => {
                steps += run.lineage.stages.len();
                if run.potentials.windows(2).any(|w| w[1] >= w[0]) {
                    bad.push(format!("#{i}: potential not decreasing"));
                }
                if !run.lineage.stages.is_empty() && !verify_lineage(&run.lineage, OracleConfig::default()).unwrap().passed() {
                    bad.push(format!("#{i}: lineage fails verification"));
                }
                let c = run.lineage.child();
                if find_bases(c).iter().any(|b| can_blow_up(c, b).unwrap().is_some()) {
                    bad.push(format!("#{i}: output still admits a blow-up"));
                }
            }
            Err(e) => bad.push(format!("#{i}: {e}")),
        }
    }
    ok(bad.is_empty(), format!("200 diagrams, {steps} blow-ups {}", bad.join("; ")))
}

fn nu_vs_brute() -> Outcome {
    let mut bad = Vec::new();
    let (mut diagrams, mut pairs) = (0, 0usize);
    for (name, d) in corpus() {
        if !is_spherical(&d, d.all()) {
            continue;
        }
        let small = matches!(order_of(&d, d.all()), Order::Finite(n) if n <= BigUint::from(10_000u32));
        if !small {
            continue;
        }
        diagrams += 1;
        let brute = BruteConjugacy::new(&d, 10_000).unwrap();
        for a in d.all().subsets() {
            let mut nu = conjugacy_class(&d, a).members;
            nu.sort();
            let bf = brute.class_of(a);
            pairs += 1 << d.rank();
            if nu != bf {
                bad.push(format!("{name} {}", d.format_subset(a)));
            }
        }
    }
    ok(bad.is_empty(), format!("{diagrams} diagrams, {pairs} subset pairs agree {}", bad.join("; ")))
}

fn rigidity() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, d) in corpus() {
        let mut sets = find_max_spherical_simplices(&d);
        sets.extend(maximal_cliques(&d));
        for a in sets {
            count += 1;
            if conjugacy_class(&d, a).members.len() != 1 {
                bad.push(format!("{name} {}", d.format_subset(a)));
            }
        }
    }
    ok(bad.is_empty(), format!("{count} maximal simplices and cliques are rigid {}", bad.join("; ")))
}

fn twists() -> Outcome {
    let mut r = rng(6);
    let mut bad = Vec::new();
    let mut oracle_checked = 0;
    for i in 0..100 {
        let n = 4 + i % 4;
        let tc = random_twist(&mut r, n, i % 2 == 0);
        let sep = Separation::new(&tc.d, tc.s1, tc.s2).unwrap();
        let data = TwistData { separation: sep, kind: TwistKind::Elementary { bullet: tc.bullet } };
        let l = apply_twist(&tc.d, &data).unwrap();
        let st = &l.stages[0];
        let sep2 = twisted_separation(st).unwrap();
        let child = l.child();
        let bullet2: Subset = tc.bullet.iter().map(|x| child.index_of(tc.d.name(x)).unwrap()).collect();
        let back = apply_twist(child, &TwistData { separation: sep2, kind: TwistKind::Elementary { bullet: bullet2 } }).unwrap();
        if canonical_form(back.child()).unwrap() != canonical_form(&tc.d).unwrap() {
            bad.push(format!("#{i}: round trip changed the diagram"));
        }
        let s2_small = matches!(order_of(&tc.d, tc.s2), Order::Finite(n) if n <= BigUint::from(10_000u32));
        if s2_small {
            oracle_checked += 1;
            let rep = verify_lineage(&l, OracleConfig::default()).unwrap();
            if !rep.passed() {
                bad.push(format!("#{i}: {}", rep.failures().next().unwrap().what));
            }
        }
    }
    ok(
        bad.is_empty() && oracle_checked >= 20,
        format!("100 round trips, {oracle_checked} oracle-checked {}", bad.join("; ")),
    )
}

fn decomposition() -> Outcome {
    let mut r = rng(7);
    let mut bad = Vec::new();
    let (mut classes, mut nontrivial) = (0, 0);
    let sparse = [fin(2), fin(2), fin(3), fin(3), fin(4), Label::Infinity];
    for i in 0..50 {
        let n = 3 + i % 6;
        let d = if i % 2 == 0 {
            random_incomplete(&mut r, n)
        } else {
            loop {
                let d = random_diagram(&mut r, n, &sparse);
                if !d.is_complete(d.all()) {
                    break d;
                }
            }
        };
        let seps = separating_subsets(&d);
        for c in c_minimal_classes(&d) {
            classes += 1;
            if !c.representative.is_empty() {
                nontrivial += 1;
            }
            let g = build_lambda(&d, c.representative).unwrap();
            if g.v_nodes != scan_vertex_sets(&d, &g.e_nodes) {
                bad.push(format!("#{i} {}: vertex sets differ", d.format_subset(c.representative)));
            }
            let mut want: Vec<Subset> = seps
                .iter()
                .copied()
                .filter(|&k| k == c.representative || are_conjugate_visual(&d, c.representative, k).is_some())
                .collect();
            want.sort_by(|a, b| a.lex_cmp(*b));
            if g.e_nodes != want {
                bad.push(format!("#{i} {}: edge sets differ", d.format_subset(c.representative)));
            }
        }
    }
    ok(bad.is_empty(), format!("50 diagrams, {classes} classes ({nontrivial} nonempty) {}", bad.join("; ")))
}

fn census_at_max_rank() -> Outcome {
    let mut r = rng(8);
    let mut labels: Vec<Label> = vec![fin(2); 5];
    labels.extend([Label::Infinity; 4]);
    labels.extend([fin(3), fin(3), fin(4), fin(4), fin(6), fin(6), fin(6), fin(10), fin(10)]);
    let shapes: Vec<(CoxeterDiagram, usize)> = vec![(load("c3"), 2), (load("c5"), 4), (load("d2_6"), 0), (load("d2_10"), 0)];
    let mut bad = Vec::new();
    let mut differing_paths = 0;
    for i in 0..100 {
        let d = if i % 2 == 0 {
            random_diagram(&mut r, 3 + i % 5, &labels)
        } else {
            let (base, end) = &shapes[(i / 2) % shapes.len()];
            decorated_base(&mut r, base, *end, 1 + i % 4)
        };
        let a = max_rank(&d, BaseOrder::Lexicographic).unwrap();
        let b = max_rank(&d, BaseOrder::ReverseLexicographic).unwrap();
        if a.lineage.stages.iter().map(|s| &s.step).ne(b.lineage.stages.iter().map(|s| &s.step)) {
            differing_paths += 1;
        }
        let diff = compare_census(&simplex_census(a.lineage.child()).unwrap(), &simplex_census(b.lineage.child()).unwrap());
        if !diff.is_empty() {
            bad.push(format!("#{i}: {} keys differ", diff.len()));
        }
    }
    for i in 0..20 {
        let tc = random_twist(&mut r, 4 + i % 3, i % 2 == 0);
        let sep = Separation::new(&tc.d, tc.s1, tc.s2).unwrap();
        let l = apply_twist(&tc.d, &TwistData { separation: sep, kind: TwistKind::Elementary { bullet: tc.bullet } }).unwrap();
        let a = max_rank(&tc.d, BaseOrder::Lexicographic).unwrap();
        let b = max_rank(l.child(), BaseOrder::Lexicographic).unwrap();
        let diff = compare_census(&simplex_census(a.lineage.child()).unwrap(), &simplex_census(b.lineage.child()).unwrap());
        if !diff.is_empty() {
            bad.push(format!("twist #{i}: {} keys differ", diff.len()));
        }
    }
    ok(
        bad.is_empty(),
        format!("100 order pairs ({differing_paths} with different paths) and 20 twist branches agree {}", bad.join("; ")),
    )
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 order reproduction", orders, Some(Duration::from_secs(60))),
        ("2 blow-up soundness", blowups, Some(Duration::from_secs(120))),
        ("3 max-rank termination and fixpoint", max_rank_fixpoint, None),
        ("4 visual conjugacy vs brute force", nu_vs_brute, None),
        ("5 maximal-subgroup rigidity", rigidity, None),
        ("6 twist correctness", twists, None),
        ("7 decomposition characterization", decomposition, None),
        ("8 census invariance at maximum rank", census_at_max_rank, None),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let t = Instant::now();
        let out = std::panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            ok(false, format!("panicked: {}", msg.unwrap_or_default()))
        });
        let el = t.elapsed();
        let in_time = limit.is_none_or(|l| el <= l);
        let pass = out.pass && in_time;
        if !pass {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" / {}s", l.as_secs())).unwrap_or_default();
        println!(
            "[{}] {name}: {} ({:.2}s{budget})",
            if pass { "PASS" } else { "FAIL" },
            out.detail.trim_end(),
            el.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
