//! Separations, twists and visual graph-of-groups decompositions.
//!
//! A separation `(S1, S0, S2)` splits `W` as `<S1> *_<S0> <S2>`. A twist
//! keeps `S1` and conjugates `S2` by an element `d` of `<S2>` that carries a
//! subset `S̄0` of `S2` onto `S0`. The elementary twist takes `d` to be the
//! longest element of a spherical `S• ⊆ S0`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::classify::{is_spherical, longest_auto};
use crate::conjugacy::{are_conjugate_visual, conjugacy_class, conjugacy_class_within, conjugate_into, nu_move, NuPath};
use crate::diagram::{CoxeterDiagram, Label, Subset};
use crate::error::{Error, Result};
use crate::matching::{fresh_name, Lineage, Stage, Step};
use crate::oracle::{longest_word, reduce, Word};

/// Whether removing `s0` disconnects the P-diagram.
pub fn separates(d: &CoxeterDiagram, s0: Subset) -> bool {
    d.p_components(d.all().difference(s0)).len() >= 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Separation {
    pub s1: Subset,
    pub s0: Subset,
    pub s2: Subset,
}

impl Separation {
    pub fn new(d: &CoxeterDiagram, s1: Subset, s2: Subset) -> Result<Separation> {
        let sep = Separation { s1, s0: s1.intersection(s2), s2 };
        sep.validate(d)?;
        Ok(sep)
    }

    pub fn validate(&self, d: &CoxeterDiagram) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidTwist(m.to_string()));
        if self.s1.union(self.s2) != d.all() || self.s1.intersection(self.s2) != self.s0 {
            return bad("S1 and S2 must cover S and meet in S0");
        }
        let (l, r) = (self.s1.difference(self.s0), self.s2.difference(self.s0));
        if l.is_empty() || r.is_empty() {
            return bad("both sides must extend beyond S0");
        }
        if l.iter().any(|x| r.iter().any(|y| d.m(x, y).is_finite())) {
            return bad("an edge joins S1-S0 to S2-S0");
        }
        Ok(())
    }
}

/// Every separation, with the component holding the least generator kept in `S1`.
/// Exponential in the rank.
pub fn find_separations(d: &CoxeterDiagram) -> Vec<Separation> {
    let mut out = Vec::new();
    for s0 in d.all().subsets() {
        let comps = d.p_components(d.all().difference(s0));
        let k = comps.len();
        if k < 2 {
            continue;
        }
        for mask in 1u64..(1u64 << (k - 1)) {
            let mut s1 = s0.union(comps[0]);
            let mut s2 = s0;
            for (i, c) in comps[1..].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s2 = s2.union(*c);
                } else {
                    s1 = s1.union(*c);
                }
            }
            out.push(Separation { s1, s0, s2 });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistKind {
    /// Conjugate `S2` by the longest element of `bullet ⊆ S0`.
    Elementary { bullet: Subset },
    /// Conjugate `S2` by the word of `path`, which runs inside `S2` from `s0_bar` to `S0`.
    Generalized { s0_bar: Subset, path: NuPath },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    pub separation: Separation,
    pub kind: TwistKind,
}

/// Applies a twist, producing a one-stage lineage.
pub fn apply_twist(d: &CoxeterDiagram, t: &TwistData) -> Result<Lineage> {
    let sep = t.separation;
    sep.validate(d)?;
    let n = d.rank();
    match &t.kind {
        TwistKind::Elementary { bullet } => {
            let b = *bullet;
            if !b.is_subset_of(sep.s0) {
                return Err(Error::InvalidTwist("S• must lie in S0".into()));
            }
            if !is_spherical(d, b) {
                return Err(Error::InvalidTwist("S• must be spherical".into()));
            }
            let rest = sep.s0.difference(b);
            if b.iter().any(|x| rest.iter().any(|y| d.m(x, y) != Label::Finite(2))) {
                return Err(Error::InvalidTwist("S• must commute with S0-S•".into()));
            }
            let sigma = longest_auto(d, b)?;
            let mut beta: Vec<usize> = (0..n).collect();
            for x in b.iter() {
                beta[x] = sigma.apply(x);
            }
            general_twist(d, sep, sep.s0, longest_word(d, b)?, &beta)
        }
        TwistKind::Generalized { s0_bar, path } => {
            let sb = *s0_bar;
            if !sb.is_subset_of(sep.s2) || path.start != sb || path.end != sep.s0 {
                return Err(Error::InvalidTwist("path must run from S̄0 ⊆ S2 to S0".into()));
            }
            let mut cur = sb;
            for m in &path.moves {
                if m.a != cur || !sep.s2.contains(m.s) || nu_move(d, m.a, m.s)? != *m {
                    return Err(Error::InvalidTwist("path is not a chain of moves inside S2".into()));
                }
                cur = m.b;
            }
            if cur != sep.s0 {
                return Err(Error::InvalidTwist("path does not end at S0".into()));
            }
            general_twist(d, sep, sb, path.total_word(d)?, &path.bijection(n))
        }
    }
}

/// `S* = S1 ∪ d(S2 - S̄0)d⁻¹`, with `β` carrying `S̄0` onto `S0`.
fn general_twist(d: &CoxeterDiagram, sep: Separation, s0_bar: Subset, w: Word, beta: &[usize]) -> Result<Lineage> {
    let n = d.rank();
    let moved = sep.s2.difference(s0_bar);
    let mut names: Vec<String> = Vec::with_capacity(n);
    let mut origin: Vec<(usize, bool)> = Vec::with_capacity(n);
    let mut taken: Vec<String> = d.names().to_vec();
    let star_name = |taken: &mut Vec<String>, i: usize| {
        let s = fresh_name(taken, &format!("{}'", d.name(i)));
        taken.push(s.clone());
        s
    };
    for i in 0..n {
        if sep.s1.contains(i) {
            names.push(d.name(i).to_string());
            origin.push((i, false));
        } else if moved.contains(i) {
            names.push(star_name(&mut taken, i));
            origin.push((i, true));
        }
    }
    for i in sep.s0.difference(s0_bar).iter() {
        names.push(star_name(&mut taken, i));
        origin.push((i, true));
    }
    let mut inv_beta: HashMap<usize, usize> = HashMap::new();
    for x in s0_bar.iter() {
        inv_beta.insert(beta[x], x);
    }
    let mut child = CoxeterDiagram::free(&names)?;
    for (ci, &(pi, si)) in origin.iter().enumerate() {
        for (cj, &(pj, sj)) in origin.iter().enumerate().skip(ci + 1) {
            let l = match (si, sj) {
                (false, false) => d.m(pi, pj),
                (true, true) => d.m(pi, pj),
                (false, true) | (true, false) => {
                    let (x, y) = if si { (pj, pi) } else { (pi, pj) };
                    match inv_beta.get(&x) {
                        Some(&xb) if sep.s0.contains(x) => d.m(xb, y),
                        _ => Label::Infinity,
                    }
                }
            };
            child.set(ci, cj, l)?;
        }
    }
    let child_of_s1: HashMap<usize, usize> =
        origin.iter().enumerate().filter(|(_, o)| !o.1).map(|(c, o)| (o.0, c)).collect();
    let child_of_star: HashMap<usize, usize> =
        origin.iter().enumerate().filter(|(_, o)| o.1).map(|(c, o)| (o.0, c)).collect();
    let forward: Vec<Word> = origin
        .iter()
        .map(|&(p, s)| if s { reduce(d, &w.conjugate(&Word(vec![p]))) } else { Ok(Word(vec![p])) })
        .collect::<Result<_>>()?;
    // Conjugation by d sends a letter of S2 to a child generator.
    let phi = |s: usize| -> usize {
        if s0_bar.contains(s) {
            child_of_s1[&beta[s]]
        } else {
            child_of_star[&s]
        }
    };
    let w_star = Word(w.0.iter().map(|&s| phi(s)).collect());
    let backward: Vec<Word> = (0..n)
        .map(|g| {
            if sep.s1.contains(g) {
                Word(vec![child_of_s1[&g]])
            } else {
                w_star.inverse().concat(&Word(vec![phi(g)])).concat(&w_star)
            }
        })
        .map(|x| reduce(&child, &x))
        .collect::<Result<_>>()?;
    let nm = |a: Subset| -> Vec<String> { a.iter().map(|i| d.name(i).to_string()).collect() };
    let images = sep.s2.iter().map(|s| (d.name(s).to_string(), child.name(phi(s)).to_string())).collect();
    let step = Step::Twist {
        s1: nm(sep.s1),
        s0: nm(sep.s0),
        s2: nm(sep.s2),
        s0_bar: nm(s0_bar),
        conjugator: w.0.iter().map(|&i| d.name(i).to_string()).collect(),
        images,
    };
    Ok(Lineage { root: d.clone(), stages: vec![Stage { parent: d.clone(), child, step, forward, backward }] })
}

fn twist_images(st: &Stage) -> HashMap<usize, usize> {
    match &st.step {
        Step::Twist { images, .. } => images
            .iter()
            .map(|(p, c)| (st.parent.index_of(p).unwrap(), st.child.index_of(c).unwrap()))
            .collect(),
        Step::BlowUp { .. } => HashMap::new(),
    }
}

/// `x` conjugated by the twist word (`x ⊆ S2`).
pub fn conjugated_subset(st: &Stage, x: Subset) -> Subset {
    let im = twist_images(st);
    x.iter().map(|i| im[&i]).collect()
}

/// `x` carried by name (`x ⊆ S1`).
pub fn renamed_subset(st: &Stage, x: Subset) -> Subset {
    x.iter().map(|i| st.child.index_of(st.parent.name(i)).unwrap()).collect()
}

/// The separation of the child induced by a twist stage.
pub fn twisted_separation(st: &Stage) -> Result<Separation> {
    let Step::Twist { s1, s2, .. } = &st.step else {
        return Err(Error::InvalidTwist("not a twist stage".into()));
    };
    let p = &st.parent;
    let s1: Subset = s1.iter().map(|n| p.index_of(n).unwrap()).collect();
    let s2: Subset = s2.iter().map(|n| p.index_of(n).unwrap()).collect();
    Separation::new(&st.child, renamed_subset(st, s1), conjugated_subset(st, s2))
}

/// Separating subsets ordered by size, then lexicographically.
pub fn separating_subsets(d: &CoxeterDiagram) -> Vec<Subset> {
    let mut v: Vec<Subset> = d.all().subsets().filter(|&s| separates(d, s)).collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
    v
}

/// A visual conjugacy class containing a separating subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatingClass {
    /// Least separating member.
    pub representative: Subset,
    pub members: Vec<Subset>,
    pub separating: Vec<Subset>,
}

pub fn separating_classes(d: &CoxeterDiagram) -> Vec<SeparatingClass> {
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    let mut out = Vec::new();
    for s in separating_subsets(d) {
        if seen.contains(&s) {
            continue;
        }
        let mut members = conjugacy_class(d, s).members;
        members.sort_by(|a, b| a.lex_cmp(*b));
        let separating: Vec<Subset> = members.iter().copied().filter(|&m| separates(d, m)).collect();
        seen.extend(separating.iter().copied());
        out.push(SeparatingClass { representative: separating[0], members, separating });
    }
    out
}

/// Classes minimal under conjugate containment.
pub fn c_minimal_classes(d: &CoxeterDiagram) -> Vec<SeparatingClass> {
    let classes = separating_classes(d);
    classes
        .iter()
        .filter(|c| {
            !classes.iter().any(|o| {
                o.representative.len() < c.representative.len()
                    && conjugate_into(d, o.representative, c.representative).is_some()
            })
        })
        .cloned()
        .collect()
}

pub fn is_c_minimal(d: &CoxeterDiagram, j: Subset) -> bool {
    separates(d, j)
        && !separating_subsets(d)
            .into_iter()
            .take_while(|k| k.len() < j.len())
            .any(|k| conjugate_into(d, k, j).is_some())
}

/// A visual graph of groups in flattened form: v-nodes and e-nodes joined by containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphOfGroups {
    pub v_nodes: Vec<Subset>,
    pub e_nodes: Vec<Subset>,
    /// `(v, e)` index pairs.
    pub incidence: Vec<(usize, usize)>,
    pub flattened: bool,
}

impl GraphOfGroups {
    pub fn flattened(mut v_nodes: Vec<Subset>, mut e_nodes: Vec<Subset>) -> GraphOfGroups {
        v_nodes.sort_by(|a, b| a.lex_cmp(*b));
        v_nodes.dedup();
        e_nodes.sort_by(|a, b| a.lex_cmp(*b));
        e_nodes.dedup();
        let mut incidence = Vec::new();
        for (vi, v) in v_nodes.iter().enumerate() {
            for (ei, e) in e_nodes.iter().enumerate() {
                if e.is_subset_of(*v) {
                    incidence.push((vi, ei));
                }
            }
        }
        GraphOfGroups { v_nodes, e_nodes, incidence, flattened: true }
    }

    pub fn to_dot(&self, d: &CoxeterDiagram) -> String {
        let mut s = String::from("graph lambda {\n");
        for (i, v) in self.v_nodes.iter().enumerate() {
            s.push_str(&format!("  v{i} [shape=box, label=\"{}\"];\n", d.format_subset(*v)));
        }
        for (i, e) in self.e_nodes.iter().enumerate() {
            s.push_str(&format!("  e{i} [shape=ellipse, label=\"{}\"];\n", d.format_subset(*e)));
        }
        for (v, e) in &self.incidence {
            s.push_str(&format!("  v{v} -- e{e};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Refines `{S}` by each separator; maximal pieces are the vertex sets.
fn vertex_sets(d: &CoxeterDiagram, e: &[Subset]) -> Vec<Subset> {
    let mut family = vec![d.all()];
    for &k in e {
        let comps = d.p_components(d.all().difference(k));
        let mut next = Vec::new();
        for l in family {
            for c in &comps {
                if !l.intersection(*c).is_empty() {
                    next.push(l.intersection(c.union(k)));
                }
            }
            if l.difference(k).is_empty() {
                next.push(l);
            }
        }
        family = maximal(next);
    }
    family
}

fn maximal(mut v: Vec<Subset>) -> Vec<Subset> {
    v.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
    v.dedup();
    let mut out: Vec<Subset> = Vec::new();
    for x in v {
        if !out.iter().any(|o| x.is_subset_of(*o)) {
            out.push(x);
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// Maximal subsets `L` such that no `K` in `e` leaves the P-diagram of
/// `L - K` disconnected, by scanning every subset.
pub fn scan_vertex_sets(d: &CoxeterDiagram, e: &[Subset]) -> Vec<Subset> {
    let ok: Vec<Subset> = d
        .all()
        .subsets()
        .filter(|l| !l.is_empty() && e.iter().all(|k| d.p_components(l.difference(*k)).len() <= 1))
        .collect();
    maximal(ok)
}

/// The flattened decomposition over separating conjugates of a c-minimal `j`.
pub fn build_lambda(d: &CoxeterDiagram, j: Subset) -> Result<GraphOfGroups> {
    if !is_c_minimal(d, j) {
        return Err(Error::NotCMinimal(d.format_subset(j)));
    }
    let e: Vec<Subset> = conjugacy_class(d, j).members.into_iter().filter(|&k| separates(d, k)).collect();
    Ok(GraphOfGroups::flattened(vertex_sets(d, &e), e))
}

/// A reduced tree reproducing a flattened decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeRealization {
    pub vertices: Vec<Subset>,
    /// `(u, v, edge group)`.
    pub edges: Vec<(usize, usize, Subset)>,
}

impl TreeRealization {
    pub fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() != n - 1 {
            return n == 0;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(u, v, _) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

/// Chains the v-nodes of each e-node, in index order.
pub fn realize_tree(g: &GraphOfGroups) -> TreeRealization {
    let mut edges = Vec::new();
    for (ei, e) in g.e_nodes.iter().enumerate() {
        let vs: Vec<usize> = g.incidence.iter().filter(|p| p.1 == ei).map(|p| p.0).collect();
        for w in vs.windows(2) {
            edges.push((w[0], w[1], *e));
        }
    }
    TreeRealization { vertices: g.v_nodes.clone(), edges }
}

/// Twists until every edge group of the realization is the same set.
///
/// Edges are visited breadth-first from vertex 0. All visited edges share a
/// label `E`; when the next edge `f` (joining `V` to the subtree at `U`)
/// carries `K ≠ E`, the side of `V` is conjugated inside itself so that `E`
/// becomes `K`.
pub fn equalize_edge_groups(d: &CoxeterDiagram, g: &GraphOfGroups) -> Result<(Lineage, GraphOfGroups)> {
    for e in g.e_nodes.iter().skip(1) {
        if are_conjugate_visual(d, g.e_nodes[0], *e).is_none() {
            return Err(Error::NonConjugateEdges(format!(
                "{} and {}",
                d.format_subset(g.e_nodes[0]),
                d.format_subset(*e)
            )));
        }
    }
    let mut lineage = Lineage::identity(d);
    let mut tree = realize_tree(g);
    if !tree.is_tree() {
        return Err(Error::Invalid("realization is not a tree".into()));
    }
    let nv = tree.vertices.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for (i, &(u, v, _)) in tree.edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    // BFS order and, for each edge, the far vertex.
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut seen = vec![false; nv];
    let mut queue = VecDeque::new();
    if nv > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(v) = queue.pop_front() {
        for &(u, ei) in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                order.push((u, ei));
                queue.push_back(u);
            }
        }
    }
    let subtree = |root: usize, via: usize| -> Vec<bool> {
        let mut inside = vec![false; nv];
        let mut stack = vec![root];
        inside[root] = true;
        while let Some(x) = stack.pop() {
            for &(y, ei) in &adj[x] {
                if ei != via && !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        inside
    };
    let mut common: Option<Subset> = None;
    for (u, ei) in order {
        let k = tree.edges[ei].2;
        let e = match common {
            None => {
                common = Some(k);
                continue;
            }
            Some(e) if e == k => continue,
            Some(e) => e,
        };
        let cur = lineage.child().clone();
        let far = subtree(u, ei);
        let side = |want: bool| -> Subset {
            (0..nv).filter(|&i| far[i] == want).fold(Subset::EMPTY, |a, i| a.union(tree.vertices[i]))
        };
        let sep = Separation::new(&cur, side(true), side(false))?;
        if sep.s0 != k {
            return Err(Error::Invalid("edge group does not separate its sides".into()));
        }
        let path = conjugacy_class_within(&cur, e, sep.s2)
            .path_to(&cur, k)
            .ok_or_else(|| Error::NonConjugateEdges("no conjugator inside the near side".into()))?;
        let step = apply_twist(&cur, &TwistData { separation: sep, kind: TwistKind::Generalized { s0_bar: e, path } })?;
        let st = &step.stages[0];
        for (v, &is_far) in tree.vertices.iter_mut().zip(&far) {
            *v = if is_far { renamed_subset(st, *v) } else { conjugated_subset(st, *v) };
        }
        for (j, edge) in tree.edges.iter_mut().enumerate() {
            let far_edge = j == ei || (far[edge.0] && far[edge.1]);
            edge.2 = if far_edge { renamed_subset(st, edge.2) } else { conjugated_subset(st, edge.2) };
        }
        common = Some(tree.edges[ei].2);
        lineage.extend(step)?;
    }
    let edges: Vec<Subset> = tree.edges.iter().map(|e| e.2).collect();
    Ok((lineage, GraphOfGroups::flattened(tree.vertices, edges)))
}
