//! Visual-subgroup conjugacy through ν-moves.
//!
//! For `s ∉ A` let `K` be the C-component of `A ∪ {s}` containing `s`. When
//! `<K>` is finite, `ν(s,A) = w_K w_{K-s}` conjugates `A` onto
//! `B = (A ∪ {s}) - {w_K s w_K}`. Reachability under these moves is exactly
//! conjugacy of visual subgroups, so a breadth-first search over subsets
//! decides it and yields shortest certificates.

use std::collections::{HashMap, VecDeque};

use crate::classify::{is_spherical, longest_auto};
use crate::diagram::{CoxeterDiagram, Subset};
use crate::error::{Error, Result};
use crate::oracle::{longest_word, reduce, Word};

/// The component `K` when `s` is `A`-admissible.
pub fn admissible(d: &CoxeterDiagram, a: Subset, s: usize) -> Option<Subset> {
    if a.contains(s) {
        return None;
    }
    let k = d.c_component_of(a.with(s), s);
    is_spherical(d, k).then_some(k)
}

/// One ν-move `A -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuMove {
    pub s: usize,
    pub a: Subset,
    pub k: Subset,
    pub t: usize,
    pub b: Subset,
    /// Indexed by generator; `x -> ν x ν^-1` on `A`, identity elsewhere.
    pub bijection: Vec<usize>,
}

impl NuMove {
    /// An idle move has `t = s` and `B = A`.
    pub fn is_idle(&self) -> bool {
        self.t == self.s
    }

    /// Reduced word for `w_K w_{K-s}`.
    pub fn word(&self, d: &CoxeterDiagram) -> Result<Word> {
        let wk = longest_word(d, self.k)?;
        let wks = longest_word(d, self.k.without(self.s))?;
        reduce(d, &wk.concat(&wks))
    }
}

pub fn nu_move(d: &CoxeterDiagram, a: Subset, s: usize) -> Result<NuMove> {
    let k = admissible(d, a, s).ok_or_else(|| Error::NotAdmissible(d.name(s).to_string()))?;
    let sigma_k = longest_auto(d, k)?;
    let sigma_ks = longest_auto(d, k.without(s))?;
    let t = sigma_k.apply(s);
    let b = a.with(s).without(t);
    let mut bijection: Vec<usize> = (0..d.rank()).collect();
    for x in a.intersection(k).iter() {
        bijection[x] = sigma_k.apply(sigma_ks.apply(x));
    }
    Ok(NuMove { s, a, k, t, b, bijection })
}

/// A chain of moves from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuPath {
    pub start: Subset,
    pub moves: Vec<NuMove>,
    pub end: Subset,
}

impl NuPath {
    pub fn trivial(a: Subset) -> NuPath {
        NuPath { start: a, moves: Vec::new(), end: a }
    }

    /// `ν_n ⋯ ν_1`, reduced.
    pub fn total_word(&self, d: &CoxeterDiagram) -> Result<Word> {
        let mut w = Word::empty();
        for m in &self.moves {
            w = m.word(d)?.concat(&w);
        }
        reduce(d, &w)
    }

    /// The composite bijection `start -> end` (indexed by generator).
    pub fn bijection(&self, rank: usize) -> Vec<usize> {
        let mut f: Vec<usize> = (0..rank).collect();
        for m in &self.moves {
            f = f.iter().map(|&x| m.bijection[x]).collect();
        }
        f
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// The ν-orbit of a subset with a BFS tree for certificates.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub start: Subset,
    /// Members in discovery order; `members[0]` is the start.
    pub members: Vec<Subset>,
    parent: HashMap<Subset, (Subset, usize)>,
}

impl ConjugacyClass {
    pub fn contains(&self, b: Subset) -> bool {
        b == self.start || self.parent.contains_key(&b)
    }

    /// Shortest move sequence from the start to `b`.
    pub fn path_to(&self, d: &CoxeterDiagram, b: Subset) -> Option<NuPath> {
        if !self.contains(b) {
            return None;
        }
        let mut steps = Vec::new();
        let mut cur = b;
        while cur != self.start {
            let (prev, s) = self.parent[&cur];
            steps.push((prev, s));
            cur = prev;
        }
        steps.reverse();
        let moves = steps
            .into_iter()
            .map(|(a, s)| nu_move(d, a, s).expect("recorded move is admissible"))
            .collect();
        Some(NuPath { start: self.start, moves, end: b })
    }
}

/// All subsets ν-reachable from `a`.
pub fn conjugacy_class(d: &CoxeterDiagram, a: Subset) -> ConjugacyClass {
    search(d, a, d.all(), |_| false).0
}

/// As [`conjugacy_class`], with moves restricted to generators of `ambient`.
pub fn conjugacy_class_within(d: &CoxeterDiagram, a: Subset, ambient: Subset) -> ConjugacyClass {
    search(d, a, ambient, |_| false).0
}

fn search(
    d: &CoxeterDiagram,
    a: Subset,
    ambient: Subset,
    stop: impl Fn(Subset) -> bool,
) -> (ConjugacyClass, Option<Subset>) {
    let mut class = ConjugacyClass { start: a, members: vec![a], parent: HashMap::new() };
    if stop(a) {
        return (class, Some(a));
    }
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for s in ambient.difference(x).iter() {
            let Some(k) = admissible(d, x, s) else { continue };
            let t = longest_auto(d, k).expect("admissible component is spherical").apply(s);
            if t == s {
                continue;
            }
            let b = x.with(s).without(t);
            if b == a || class.parent.contains_key(&b) {
                continue;
            }
            class.parent.insert(b, (x, s));
            class.members.push(b);
            if stop(b) {
                return (class, Some(b));
            }
            queue.push_back(b);
        }
    }
    (class, None)
}

/// A certificate that `<a>` and `<b>` are conjugate.
pub fn are_conjugate_visual(d: &CoxeterDiagram, a: Subset, b: Subset) -> Option<NuPath> {
    if a.len() != b.len() {
        return None;
    }
    let (class, hit) = search(d, a, d.all(), |x| x == b);
    hit.and_then(|h| class.path_to(d, h))
}

/// Some `c ⊆ b` reachable from `a`, certifying `<a>` lies in a conjugate of `<b>`.
pub fn conjugate_into(d: &CoxeterDiagram, a: Subset, b: Subset) -> Option<(Subset, NuPath)> {
    if a.len() > b.len() {
        return None;
    }
    let (class, hit) = search(d, a, d.all(), |x| x.is_subset_of(b));
    hit.map(|h| (h, class.path_to(d, h).unwrap()))
}

/// Lexicographically least member of the class (by sorted index vectors).
pub fn min_conjugates(d: &CoxeterDiagram, a: Subset) -> Subset {
    conjugacy_class(d, a)
        .members
        .into_iter()
        .min_by(|x, y| x.lex_cmp(*y))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;
    use crate::oracle::BruteConjugacy;

    fn dia(t: &str) -> CoxeterDiagram {
        parse_diagram(&format!("{t}\ndefault 2")).unwrap()
    }

    #[test]
    fn admissibility() {
        let d = parse_diagram("gens a b\nedge a b 3").unwrap();
        assert_eq!(admissible(&d, Subset::singleton(0), 1), Some(d.all()));
        let free = parse_diagram("gens a b").unwrap();
        assert_eq!(admissible(&free, Subset::singleton(0), 1), None);
        let comm = parse_diagram("gens a b\nedge a b 2").unwrap();
        assert_eq!(admissible(&comm, Subset::singleton(0), 1), Some(Subset::singleton(1)));
    }

    #[test]
    fn moves() {
        let a2 = dia("gens a b\nedge a b 3");
        let m = nu_move(&a2, Subset::singleton(0), 1).unwrap();
        assert_eq!((m.t, m.b), (0, Subset::singleton(1)));
        assert_eq!(m.word(&a2).unwrap().len(), 2);
        let c2 = dia("gens a b\nedge a b 4");
        let idle = nu_move(&c2, Subset::singleton(0), 1).unwrap();
        assert!(idle.is_idle());
        assert_eq!(idle.b, Subset::singleton(0));
        let d = dia("gens a b c\nedge a b 3");
        let ac = d.parse_subset("a,c").unwrap();
        let m = nu_move(&d, ac, 1).unwrap();
        assert_eq!((m.k, m.t, m.b), (d.parse_subset("a,b").unwrap(), 0, d.parse_subset("b,c").unwrap()));
        let brute = BruteConjugacy::new(&d, 100).unwrap();
        assert!(brute.conjugator(ac, m.b).is_some());
    }

    #[test]
    fn classes() {
        let a2 = dia("gens a b\nedge a b 3");
        let class = conjugacy_class(&a2, Subset::singleton(0));
        assert_eq!(class.members, vec![Subset::singleton(0), Subset::singleton(1)]);
        assert_eq!(conjugacy_class(&a2, a2.all()).members, vec![a2.all()]);
        assert_eq!(conjugacy_class(&a2, Subset::EMPTY).members, vec![Subset::EMPTY]);
        assert_eq!(min_conjugates(&a2, Subset::singleton(1)), Subset::singleton(0));
        let c2 = dia("gens a b\nedge a b 4");
        assert!(are_conjugate_visual(&c2, Subset::singleton(0), Subset::singleton(1)).is_none());
    }

    #[test]
    fn certificates_conjugate() {
        let a3 = dia("gens a b c\nedge a b 3\nedge b c 3");
        let path = are_conjugate_visual(&a3, Subset::singleton(0), Subset::singleton(2)).unwrap();
        let w = path.total_word(&a3).unwrap();
        let t = crate::oracle::todd_coxeter(&a3, a3.all(), Subset::EMPTY, 1000).unwrap();
        let lhs = t.act_word(0, &w.conjugate(&Word(vec![0])));
        assert_eq!(lhs, t.act(0, 2));
    }

    #[test]
    fn containment() {
        let sq = parse_diagram("gens a b c d\nedge a b 2\nedge b c 2\nedge c d 2\nedge d a 2").unwrap();
        let (c, _) = conjugate_into(&sq, Subset::singleton(0), sq.all()).unwrap();
        assert_eq!(c, Subset::singleton(0));
        let ab = sq.parse_subset("a,b").unwrap();
        let cd = sq.parse_subset("c,d").unwrap();
        assert!(conjugate_into(&sq, ab, cd).is_none());
    }
}
