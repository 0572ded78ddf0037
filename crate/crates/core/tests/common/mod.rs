#![allow(dead_code)]

use std::path::PathBuf;

use coxforge::{parse_diagram, CoxeterDiagram, Label, Subset};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Every diagram under `data/`, sorted by file name.
pub fn corpus() -> Vec<(String, CoxeterDiagram)> {
    let mut out: Vec<(String, CoxeterDiagram)> = std::fs::read_dir(data_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.ok()?.path();
            (p.extension()? == "cox").then(|| {
                let name = p.file_stem().unwrap().to_string_lossy().into_owned();
                let d = parse_diagram(&std::fs::read_to_string(&p).unwrap()).unwrap();
                (name, d)
            })
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn load(name: &str) -> CoxeterDiagram {
    parse_diagram(&std::fs::read_to_string(data_dir().join(format!("{name}.cox"))).unwrap()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

/// Labels drawn from `labels`, with `inf` standing for infinity.
pub fn random_diagram(r: &mut ChaCha8Rng, n: usize, labels: &[Label]) -> CoxeterDiagram {
    let mut d = CoxeterDiagram::free(&names(n)).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            d.set(i, j, *labels.choose(r).unwrap()).unwrap();
        }
    }
    d
}

pub fn fin(k: u32) -> Label {
    Label::Finite(k)
}

/// 2..=8 and infinity, weighted towards 2, 3 and infinity.
pub fn wide_labels() -> Vec<Label> {
    let mut v = vec![fin(2), fin(2), fin(2), fin(3), fin(3), Label::Infinity, Label::Infinity];
    v.extend((4..=8).map(fin));
    v
}

/// A diagram with at least one infinite label.
pub fn random_incomplete(r: &mut ChaCha8Rng, n: usize) -> CoxeterDiagram {
    loop {
        let d = random_diagram(r, n, &wide_labels());
        if !d.is_complete(d.all()) {
            return d;
        }
    }
}

/// An isolated base of the given shape decorated by `extra` generators that
/// satisfy the blow-up hypothesis at the special end.
pub fn decorated_base(r: &mut ChaCha8Rng, base: &CoxeterDiagram, end: usize, extra: usize) -> CoxeterDiagram {
    let b = base.rank();
    let mut all: Vec<String> = base.names().to_vec();
    all.extend((0..extra).map(|i| format!("x{i}")));
    let mut d = CoxeterDiagram::free(&all).unwrap();
    for i in 0..b {
        for j in i + 1..b {
            d.set(i, j, base.m(i, j)).unwrap();
        }
    }
    let pool = [fin(2), fin(3), fin(4), fin(6), Label::Infinity];
    for s in b..b + extra {
        if r.gen_bool(0.5) {
            for t in 0..b {
                d.set(s, t, fin(2)).unwrap();
            }
        } else {
            for t in 0..b {
                let l = if t == end { Label::Infinity } else { *pool.choose(r).unwrap() };
                d.set(s, t, l).unwrap();
            }
        }
        for t in b..s {
            d.set(s, t, *pool.choose(r).unwrap()).unwrap();
        }
    }
    d
}

/// A diagram with a separation `(S1, S0, S2)` and an admissible `S•`.
pub struct TwistCase {
    pub d: CoxeterDiagram,
    pub s1: Subset,
    pub s2: Subset,
    pub bullet: Subset,
}

pub fn random_twist(r: &mut ChaCha8Rng, n: usize, small_labels: bool) -> TwistCase {
    loop {
        let k0 = r.gen_range(1..=3.min(n - 2));
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(r);
        let s0: Subset = idx[..k0].iter().copied().collect();
        let rest = &idx[k0..];
        let cut = r.gen_range(1..rest.len());
        let s1 = s0.union(rest[..cut].iter().copied().collect());
        let s2 = s0.union(rest[cut..].iter().copied().collect());
        let labels: Vec<Label> = if small_labels {
            vec![fin(2), fin(2), fin(3), fin(4), Label::Infinity]
        } else {
            wide_labels()
        };
        let inner = [fin(2), fin(2), fin(3), fin(4), fin(5), fin(6)];
        let mut d = CoxeterDiagram::free(&names(n)).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                let cross = (s1.contains(i) && !s2.contains(i) && s2.contains(j) && !s1.contains(j))
                    || (s1.contains(j) && !s2.contains(j) && s2.contains(i) && !s1.contains(i));
                let l = if cross {
                    Label::Infinity
                } else if s0.contains(i) && s0.contains(j) {
                    *inner.choose(r).unwrap()
                } else {
                    *labels.choose(r).unwrap()
                };
                d.set(i, j, l).unwrap();
            }
        }
        // S• is a union of C-components of S0 and must be finite.
        let comps = d.c_components(s0);
        let bullet: Subset = comps.iter().filter(|_| r.gen_bool(0.7)).fold(Subset::EMPTY, |a, c| a.union(*c));
        if coxforge::classify::is_spherical(&d, bullet) {
            return TwistCase { d, s1, s2, bullet };
        }
    }
}

/// A uniformly random permutation of the generators.
pub fn shuffled(r: &mut ChaCha8Rng, d: &CoxeterDiagram) -> CoxeterDiagram {
    let mut perm: Vec<usize> = (0..d.rank()).collect();
    perm.shuffle(r);
    d.permuted(&perm)
}
