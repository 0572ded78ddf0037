mod common;

use coxforge::classify::type_string;
use coxforge::decompose::{apply_twist, build_lambda, c_minimal_classes, equalize_edge_groups, realize_tree, Separation, TwistData, TwistKind};
use coxforge::matching::{is_base, match_bases, match_edge, max_rank, verify_lineage, BaseOrder, Lineage, Relation};
use coxforge::oracle::{reduce, OracleConfig};
use coxforge::{CoxeterDiagram, Error, Label, Subset, Word};

use common::*;

fn halved(dihedral: &str) -> String {
    let k: u32 = dihedral.trim_start_matches("D2(").trim_end_matches(')').parse().unwrap();
    match k / 2 {
        3 => "A2".into(),
        4 => "C2".into(),
        h => format!("D2({h})"),
    }
}

fn check_certificates(l: &Lineage) {
    let root = &l.root;
    let child = l.child();
    let fwd = l.composite_forward().unwrap();
    for c in match_bases(l).unwrap() {
        assert!(is_base(child, c.child_base), "{}", child.format_subset(c.child_base));
        assert_eq!(c.parent_base.len(), c.child_base.len());
        let (p, q) = (type_string(root, c.parent_base).unwrap(), type_string(child, c.child_base).unwrap());
        match c.relation {
            Relation::Isomorphic => assert_eq!(p, q),
            // B3 is recognized as A3.
            Relation::CToB => assert!(p.starts_with('C') && (q.starts_with('B') || q == "A3"), "{p} {q}"),
            Relation::D2Halving => assert_eq!(q, halved(&p)),
            other => panic!("unexpected relation {other}"),
        }
        if let (Relation::Isomorphic, Some(w)) = (c.relation, &c.conjugator) {
            let mut want: Vec<Word> =
                c.parent_base.iter().map(|s| reduce(root, &w.concat(&Word(vec![s])).concat(&w.inverse())).unwrap()).collect();
            let mut got: Vec<Word> = c.child_base.iter().map(|y| reduce(root, &fwd[y]).unwrap()).collect();
            want.sort();
            got.sort();
            assert_eq!(want, got);
        }
    }
}

#[test]
fn corpus_certificates() {
    for (name, d) in corpus() {
        if d.rank() > 8 {
            continue;
        }
        let run = max_rank(&d, BaseOrder::Lexicographic).unwrap();
        check_certificates(&run.lineage);
        let blown = run.lineage.blowup_count();
        let halved = match_bases(&run.lineage).unwrap().iter().filter(|c| c.relation != Relation::Isomorphic).count();
        assert_eq!(blown, halved, "{name}");
    }
}

#[test]
fn twist_then_blow_up() {
    // An A2 vertex group separates a C3 base from a leaf.
    let d = coxforge::parse_diagram(
        "gens x p q a b c\nedge p q 3\nedge x p 2\nedge x q 2\nedge a b 4\nedge b c 3\nedge a c 2\n\
         edge p a 2\nedge p b 2\nedge p c 2\nedge q a 2\nedge q b 2\nedge q c 2",
    )
    .unwrap();
    let s1 = d.subset_of(&["x", "p", "q"]).unwrap();
    let s2 = d.subset_of(&["p", "q", "a", "b", "c"]).unwrap();
    let sep = Separation::new(&d, s1, s2).unwrap();
    let bullet = d.subset_of(&["p", "q"]).unwrap();
    let mut l = apply_twist(&d, &TwistData { separation: sep, kind: TwistKind::Elementary { bullet } }).unwrap();
    let run = max_rank(l.child(), BaseOrder::Lexicographic).unwrap();
    l.extend(run.lineage).unwrap();
    assert_eq!(l.blowup_count(), 1);
    assert!(verify_lineage(&l, OracleConfig::default()).unwrap().passed());
    check_certificates(&l);
    assert!(match_bases(&l).unwrap().iter().any(|c| c.conjugator.is_some()));
}

#[test]
fn heavy_edges_are_matched() {
    let d = load("c3_tame");
    let l = max_rank(&d, BaseOrder::Lexicographic).unwrap().lineage;
    let child = l.child();
    let (a, b, c) = (d.index_of("a").unwrap(), d.index_of("b").unwrap(), d.index_of("c").unwrap());
    let m = match_edge(&l, (a, b)).unwrap();
    assert_eq!(m.relation, Relation::CToB);
    let (x, y) = m.edge;
    assert!(child.m(x, y).is_finite());
    assert!(matches!(match_edge(&l, (b, c)), Err(Error::NotHeavyEdge(_))));

    let d = load("d2_10");
    let l = max_rank(&d, BaseOrder::Lexicographic).unwrap().lineage;
    let m = match_edge(&l, (0, 1)).unwrap();
    assert_eq!(m.relation, Relation::D2Halving);
    assert_eq!(l.child().m(m.edge.0, m.edge.1), Label::Finite(5));
}

fn equalize_all(d: &CoxeterDiagram) -> usize {
    let mut twists = 0;
    for class in c_minimal_classes(d) {
        let g = build_lambda(d, class.representative).unwrap();
        let tree = realize_tree(&g);
        let (l, h) = equalize_edge_groups(d, &g).unwrap();
        assert!(l.stages.len() < tree.edges.len().max(1));
        twists += l.stages.len();
        let t2 = realize_tree(&h);
        if let Some(&(_, _, first)) = t2.edges.first() {
            assert!(t2.edges.iter().all(|&(_, _, e)| e == first));
        }
        assert!(verify_lineage(&l, OracleConfig::default()).unwrap().passed());
        let child = l.child();
        let union: Subset = h.v_nodes.iter().fold(Subset::EMPTY, |acc, &v| acc.union(v));
        assert_eq!(union, child.all());
    }
    twists
}

#[test]
fn equalized_edge_groups() {
    let mut total = 0;
    for name in ["hub", "amalgam", "square", "twist_a2", "path_inf", "mixed"] {
        total += equalize_all(&load(name));
    }
    let mut r = rng(31);
    for i in 0..30 {
        total += equalize_all(&random_incomplete(&mut r, 4 + i % 4));
    }
    assert!(total > 0);
}
