//! Bases, blow-ups, the maximum-rank driver and matching across lineages.
//!
//! A base is a noncyclic, maximal, finite, irreducible visual subgroup. A
//! base of type `C_{2q+1}` or `D_2(4q+2)` whose neighbourhood is tame enough
//! can be blown up: the generator `a` at its special end is replaced by
//! `aba` and the central involution `z`, raising the rank by one and halving
//! the base. Repeating until no base admits a blow-up yields a generating
//! set of maximum rank.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;

use crate::classify::{components, is_spherical, order_of, Family, Layout, Order, Recognized, TypeTag};
use crate::diagram::{CoxeterDiagram, Label, Subset};
use crate::error::{Error, Result};
use crate::oracle::{
    element_order_in, longest_word, parabolic_order, reduce, todd_coxeter, CosetTable, OracleConfig, Word,
};

/// A base with its recognised type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Base {
    pub subset: Subset,
    pub tag: TypeTag,
    pub layout: Layout,
}

fn recognized(d: &CoxeterDiagram, a: Subset) -> Option<Recognized> {
    let cs = components(d, a)?;
    (cs.len() == 1).then(|| cs.into_iter().next().unwrap().1)
}

/// Nonempty irreducible spherical subsets, grown along C-edges.
fn irreducible_spherical(d: &CoxeterDiagram) -> Vec<Subset> {
    let mut seen: HashSet<Subset> = HashSet::new();
    let mut stack: Vec<Subset> = Vec::new();
    for v in 0..d.rank() {
        seen.insert(Subset::singleton(v));
        stack.push(Subset::singleton(v));
    }
    while let Some(x) = stack.pop() {
        for s in c_frontier(d, x).iter() {
            let y = x.with(s);
            if !seen.contains(&y) && is_spherical(d, y) {
                seen.insert(y);
                stack.push(y);
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

fn c_frontier(d: &CoxeterDiagram, x: Subset) -> Subset {
    x.iter().fold(Subset::EMPTY, |acc, i| acc.union(d.c_neighbors(i))).difference(x)
}

/// Whether `b` is a base: irreducible, spherical, rank at least 2 and not
/// extendable to a larger irreducible spherical subset.
pub fn is_base(d: &CoxeterDiagram, b: Subset) -> bool {
    b.len() >= 2
        && d.is_irreducible(b)
        && is_spherical(d, b)
        && c_frontier(d, b).iter().all(|s| !is_spherical(d, b.with(s)))
}

/// All bases, ordered by their index vectors.
pub fn find_bases(d: &CoxeterDiagram) -> Vec<Base> {
    irreducible_spherical(d)
        .into_iter()
        .filter(|&b| b.len() >= 2 && c_frontier(d, b).iter().all(|s| !is_spherical(d, b.with(s))))
        .map(|b| {
            let r = recognized(d, b).expect("spherical irreducible");
            Base { subset: b, tag: r.tag, layout: r.layout }
        })
        .collect()
}

/// Spherical subsets (all are cliques of the P-diagram) with no spherical
/// one-point extension.
pub fn find_max_spherical_simplices(d: &CoxeterDiagram) -> Vec<Subset> {
    let mut out = Vec::new();
    let mut stack = vec![(Subset::EMPTY, 0usize)];
    while let Some((x, from)) = stack.pop() {
        let ext: Vec<usize> = d.all().difference(x).iter().filter(|&s| is_spherical(d, x.with(s))).collect();
        if ext.is_empty() {
            out.push(x);
        }
        for s in ext.into_iter().filter(|&s| s >= from) {
            stack.push((x.with(s), s + 1));
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

/// The generators a blow-up rewrites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlowupKind {
    /// `C_{2q+1}` with `m(a,b) = 4`, `m(b,c) = 3`.
    C { a: usize, b: usize, c: usize },
    /// `D_2(4q+2)` on `{a, b}`, `a` the qualifying end.
    D { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupPlan {
    pub base: Subset,
    pub kind: BlowupKind,
}

impl BlowupPlan {
    pub fn end(&self) -> usize {
        match self.kind {
            BlowupKind::C { a, .. } | BlowupKind::D { a, .. } => a,
        }
    }
}

/// Every `s` outside `base` with `m(s,v) < inf` commutes with all of `to`.
fn tame(d: &CoxeterDiagram, base: Subset, v: usize, to: Subset) -> bool {
    d.all()
        .difference(base)
        .iter()
        .filter(|&s| d.m(s, v).is_finite())
        .all(|s| to.iter().all(|t| d.m(s, t) == Label::Finite(2)))
}

/// A blow-up plan for `base`, if its hypotheses hold.
pub fn can_blow_up(d: &CoxeterDiagram, base: &Base) -> Result<Option<BlowupPlan>> {
    if !is_base(d, base.subset) {
        return Err(Error::NotBase(d.format_subset(base.subset)));
    }
    let b = base.subset;
    match (base.tag.family, &base.layout) {
        (Family::C, Layout::Chain(p)) if base.tag.parameter % 2 == 1 => {
            let n = p.len();
            let (a, bb, c) = (p[n - 1], p[n - 2], p[n - 3]);
            Ok(tame(d, b, a, b).then_some(BlowupPlan { base: b, kind: BlowupKind::C { a, b: bb, c } }))
        }
        (Family::D2, Layout::Chain(p)) if base.tag.parameter % 4 == 2 => {
            let mut ends = [p[0], p[1]];
            ends.sort_by(|x, y| d.name(*x).cmp(d.name(*y)));
            for (i, &v) in ends.iter().enumerate() {
                if tame(d, b, v, b) {
                    return Ok(Some(BlowupPlan { base: b, kind: BlowupKind::D { a: v, b: ends[1 - i] } }));
                }
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

/// The rewrite recorded by one lineage stage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    BlowUp {
        base: Vec<String>,
        end: String,
        /// `'C'` or `'D'`.
        kind: char,
        /// The name of `aba` (`d` in the C-case, `c` in the D-case).
        new_gen: String,
        z: String,
        new_base: Vec<String>,
    },
    Twist {
        s1: Vec<String>,
        s0: Vec<String>,
        s2: Vec<String>,
        s0_bar: Vec<String>,
        /// The conjugating word, over the stage parent.
        conjugator: Vec<String>,
        /// Each parent generator of `S2` and the child generator it is conjugated to.
        images: Vec<(String, String)>,
    },
}

/// One rewrite with its substitutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub parent: CoxeterDiagram,
    pub child: CoxeterDiagram,
    pub step: Step,
    /// Per child generator, a word over the parent.
    pub forward: Vec<Word>,
    /// Per parent generator, a word over the child.
    pub backward: Vec<Word>,
}

/// A chain of rewrites from a root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lineage {
    pub root: CoxeterDiagram,
    pub stages: Vec<Stage>,
}

impl Lineage {
    pub fn identity(d: &CoxeterDiagram) -> Lineage {
        Lineage { root: d.clone(), stages: Vec::new() }
    }

    pub fn child(&self) -> &CoxeterDiagram {
        self.stages.last().map_or(&self.root, |s| &s.child)
    }

    pub fn push(&mut self, stage: Stage) -> Result<()> {
        if &stage.parent != self.child() {
            return Err(Error::ForeignLineage("stage parent differs from the current child".into()));
        }
        self.stages.push(stage);
        Ok(())
    }

    pub fn extend(&mut self, other: Lineage) -> Result<()> {
        if &other.root != self.child() {
            return Err(Error::ForeignLineage("appended lineage starts elsewhere".into()));
        }
        self.stages.extend(other.stages);
        Ok(())
    }

    pub fn blowup_count(&self) -> usize {
        self.stages.iter().filter(|s| matches!(s.step, Step::BlowUp { .. })).count()
    }

    /// Child generators as reduced words over the root.
    pub fn composite_forward(&self) -> Result<Vec<Word>> {
        let mut cur: Vec<Word> = (0..self.root.rank()).map(|i| Word(vec![i])).collect();
        for st in &self.stages {
            cur = st
                .forward
                .iter()
                .map(|w| reduce(&self.root, &w.substitute(&cur)))
                .collect::<Result<_>>()?;
        }
        Ok(cur)
    }

    /// Root generators as reduced words over the final child.
    pub fn composite_backward(&self) -> Result<Vec<Word>> {
        let mut cur: Vec<Word> = (0..self.root.rank()).map(|i| Word(vec![i])).collect();
        for st in &self.stages {
            cur = cur
                .iter()
                .map(|w| reduce(&st.child, &w.substitute(&st.backward)))
                .collect::<Result<_>>()?;
        }
        Ok(cur)
    }

    /// Rewrites a word over the parent of stage `i` as a word over the root.
    pub fn to_root(&self, i: usize, w: &Word) -> Result<Word> {
        let mut cur = w.clone();
        for st in self.stages[..i].iter().rev() {
            cur = cur.substitute(&st.forward);
        }
        reduce(&self.root, &cur)
    }
}

/// A name not yet used in `d`.
pub(crate) fn fresh_name(taken: &[String], base: &str) -> String {
    if !taken.iter().any(|t| t == base) {
        return base.to_string();
    }
    (2..).map(|k| format!("{base}{k}")).find(|c| !taken.iter().any(|t| t == c)).unwrap()
}

/// Applies a plan, producing a one-stage lineage.
pub fn blow_up(d: &CoxeterDiagram, plan: &BlowupPlan) -> Result<Lineage> {
    let base = Base {
        subset: plan.base,
        tag: recognized(d, plan.base).ok_or(Error::NotSpherical)?.tag,
        layout: recognized(d, plan.base).unwrap().layout,
    };
    match can_blow_up(d, &base)? {
        Some(p) if p.kind == plan.kind => {}
        Some(_) if matches!(plan.kind, BlowupKind::D { a, .. } if tame(d, plan.base, a, plan.base)) => {}
        _ => return Err(Error::BlowupHypothesis(format!("no valid plan for {}", d.format_subset(plan.base)))),
    }
    let n = d.rank();
    let b = plan.base;
    let a = plan.end();
    let mut names: Vec<String> = d.names().to_vec();
    let (kind, suffix) = match plan.kind {
        BlowupKind::C { .. } => ('C', "_d"),
        BlowupKind::D { .. } => ('D', "_c"),
    };
    let new_gen = fresh_name(&names, &format!("{}{}", d.name(a), suffix));
    names.push(new_gen.clone());
    let z = fresh_name(&names, &format!("{}_z", d.name(a)));
    names.pop();
    names[a] = new_gen.clone();
    names.push(z.clone());
    let zi = n;
    let mut child = CoxeterDiagram::free(&names)?;
    for i in 0..n {
        for j in i + 1..n {
            if i != a && j != a {
                child.set(i, j, d.m(i, j))?;
            }
        }
    }
    let two = Label::Finite(2);
    let (new_base_set, ell_child): (Subset, Word) = match plan.kind {
        BlowupKind::C { c, .. } => {
            for t in b.without(a).iter() {
                child.set(a, t, if t == c { Label::Finite(3) } else { two })?;
            }
            (b, longest_word(&child, b)?)
        }
        BlowupKind::D { b: bb, .. } => {
            let k = d.m(a, bb).value().unwrap();
            child.set(a, bb, Label::Finite(k / 2))?;
            let q = (k - 2) / 4;
            let mut ell = Vec::new();
            for _ in 0..q {
                ell.push(bb);
                ell.push(a);
            }
            ell.push(bb);
            (b, Word(ell))
        }
    };
    for t in new_base_set.iter() {
        child.set(zi, t, two)?;
    }
    for s in d.all().difference(b).iter() {
        let l = if d.m(s, a).is_finite() { two } else { Label::Infinity };
        child.set(s, a, l)?;
        child.set(s, zi, l)?;
    }
    let bb = match plan.kind {
        BlowupKind::C { b, .. } | BlowupKind::D { b, .. } => b,
    };
    let aba = Word(vec![a, bb, a]);
    let mut images: Vec<Word> = (0..n).map(|i| Word(vec![i])).collect();
    images[a] = aba.clone();
    let z_forward = reduce(d, &Word(vec![a]).concat(&ell_child.substitute(&images)))?;
    let mut forward: Vec<Word> = (0..n).map(|i| Word(vec![i])).collect();
    forward[a] = aba;
    forward.push(z_forward);
    let mut backward: Vec<Word> = (0..n).map(|i| Word(vec![i])).collect();
    backward[a] = Word(vec![zi]).concat(&ell_child);
    let step = Step::BlowUp {
        base: b.iter().map(|i| d.name(i).to_string()).collect(),
        end: d.name(a).to_string(),
        kind,
        new_gen,
        z,
        new_base: new_base_set.iter().map(|i| child.name(i).to_string()).collect(),
    };
    Ok(Lineage {
        root: d.clone(),
        stages: vec![Stage { parent: d.clone(), child, step, forward, backward }],
    })
}

/// Base selection order for [`max_rank`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOrder {
    Lexicographic,
    ReverseLexicographic,
}

/// Sum of base orders.
pub fn potential(d: &CoxeterDiagram) -> BigUint {
    find_bases(d).into_iter().map(|b| b.tag.order).sum()
}

#[derive(Clone, Debug)]
pub struct MaxRankRun {
    pub lineage: Lineage,
    /// Potential before each step and after the last.
    pub potentials: Vec<BigUint>,
}

/// Blows up until no base admits a plan.
pub fn max_rank(d: &CoxeterDiagram, order: BaseOrder) -> Result<MaxRankRun> {
    let mut lineage = Lineage::identity(d);
    let mut potentials = vec![potential(d)];
    loop {
        let cur = lineage.child().clone();
        let mut bases = find_bases(&cur);
        let key = |b: &Base| -> Vec<String> {
            let mut v: Vec<String> = b.subset.iter().map(|i| cur.name(i).to_string()).collect();
            v.sort();
            v
        };
        bases.sort_by_key(key);
        if order == BaseOrder::ReverseLexicographic {
            bases.reverse();
        }
        let mut plan = None;
        for base in &bases {
            if let Some(p) = can_blow_up(&cur, base)? {
                plan = Some(p);
                break;
            }
        }
        let Some(plan) = plan else { break };
        let step = blow_up(&cur, &plan)?;
        lineage.extend(step)?;
        let next = potential(lineage.child());
        if &next >= potentials.last().unwrap() {
            return Err(Error::Invalid("base-order potential failed to decrease".into()));
        }
        potentials.push(next);
        if lineage.child().rank() >= crate::diagram::MAX_RANK {
            return Err(Error::RankLimit { rank: lineage.child().rank(), limit: crate::diagram::MAX_RANK });
        }
    }
    Ok(MaxRankRun { lineage, potentials })
}

/// How a base relates to its match.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Isomorphic,
    BToC,
    CToB,
    D2Halving,
    D2Doubling,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Isomorphic => "isomorphic",
            Relation::BToC => "B-to-C",
            Relation::CToB => "C-to-B",
            Relation::D2Halving => "D2-halving",
            Relation::D2Doubling => "D2-doubling",
        })
    }
}

/// A base of the root matched with a base of the final child.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchCertificate {
    pub parent_base: Subset,
    pub child_base: Subset,
    /// A word over the root conjugating the tracked generators, when twists moved them.
    pub conjugator: Option<Word>,
    pub relation: Relation,
}

fn names_of(d: &CoxeterDiagram, a: Subset) -> Vec<String> {
    a.iter().map(|i| d.name(i).to_string()).collect()
}

fn subset_by_names(d: &CoxeterDiagram, names: &[String]) -> Result<Subset> {
    names
        .iter()
        .map(|n| d.index_of(n).ok_or_else(|| Error::ForeignLineage(format!("generator `{n}` missing"))))
        .collect()
}

fn check_chain(l: &Lineage) -> Result<()> {
    let mut cur = &l.root;
    for (i, st) in l.stages.iter().enumerate() {
        if &st.parent != cur {
            return Err(Error::ForeignLineage(format!("stage {i} does not continue its predecessor")));
        }
        if st.forward.len() != st.child.rank() || st.backward.len() != st.parent.rank() {
            return Err(Error::ForeignLineage(format!("stage {i} has malformed substitutions")));
        }
        cur = &st.child;
    }
    Ok(())
}

/// Carries a set that the stage does not rewrite. Returns the child set and
/// the conjugating word over the stage parent, if any.
fn carry(st: &Stage, x: Subset) -> Result<(Subset, Option<Word>)> {
    match &st.step {
        Step::BlowUp { end, .. } => {
            let a = st.parent.index_of(end).unwrap();
            if x.contains(a) {
                return Err(Error::ForeignLineage(format!("{} meets the rewritten generator", st.parent.format_subset(x))));
            }
            Ok((subset_by_names(&st.child, &names_of(&st.parent, x))?, None))
        }
        Step::Twist { s1, conjugator, images, .. } => {
            let s1 = subset_by_names(&st.parent, s1)?;
            if x.is_subset_of(s1) {
                return Ok((subset_by_names(&st.child, &names_of(&st.parent, x))?, None));
            }
            let map: HashMap<&str, &str> = images.iter().map(|(p, c)| (p.as_str(), c.as_str())).collect();
            let mut out = Subset::EMPTY;
            for i in x.iter() {
                let c = map
                    .get(st.parent.name(i))
                    .ok_or_else(|| Error::ForeignLineage(format!("{} straddles the twist", st.parent.format_subset(x))))?;
                out = out.with(st.child.index_of(c).unwrap());
            }
            let w = conjugator.iter().map(|n| st.parent.index_of(n).unwrap()).collect();
            Ok((out, Some(Word(w))))
        }
    }
}

/// Tracks one base of the root through every stage.
fn track_base(l: &Lineage, b: Subset) -> Result<MatchCertificate> {
    let mut x = b;
    let mut relation = Relation::Isomorphic;
    let mut conj: Option<Word> = None;
    for (i, st) in l.stages.iter().enumerate() {
        if let Step::BlowUp { base, kind, new_base, .. } = &st.step {
            if subset_by_names(&st.parent, base)? == x {
                x = subset_by_names(&st.child, new_base)?;
                relation = if *kind == 'C' { Relation::CToB } else { Relation::D2Halving };
                continue;
            }
        }
        let (y, w) = carry(st, x)?;
        if let Some(w) = w {
            let root_w = l.to_root(i, &w)?;
            conj = Some(match conj {
                None => root_w,
                Some(prev) => reduce(&l.root, &root_w.concat(&prev))?,
            });
        }
        x = y;
    }
    Ok(MatchCertificate { parent_base: b, child_base: x, conjugator: conj, relation })
}

/// Matches every base of the root with a base of the final child.
pub fn match_bases(l: &Lineage) -> Result<Vec<MatchCertificate>> {
    check_chain(l)?;
    find_bases(&l.root).into_iter().map(|b| track_base(l, b.subset)).collect()
}

/// A matched subbase; `xy_relation` marks the split-end case, where the
/// subbase is matched with `{x, y}` through `<xy>` rather than by type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubbaseMatch {
    pub subset: Subset,
    pub xy_relation: bool,
}

/// Matches a subbase `a` of `cert.parent_base` with a subbase of the child base.
pub fn match_subbase(l: &Lineage, cert: &MatchCertificate, a: Subset) -> Result<SubbaseMatch> {
    check_chain(l)?;
    let root = &l.root;
    if !a.is_subset_of(cert.parent_base) {
        return Err(Error::MatchPrecondition("subset lies outside the matched base".into()));
    }
    if a.len() < 2 || !root.is_irreducible(a) || !is_spherical(root, a) {
        return Err(Error::MatchPrecondition("not a subbase: needs an irreducible finite subset of rank at least 2".into()));
    }
    if cert.relation == Relation::Isomorphic {
        let r = recognized(root, cert.parent_base).ok_or(Error::NotSpherical)?;
        if r.tag.family == Family::A && r.tag.parameter == 5 {
            return Err(Error::A5Obstruction);
        }
    }
    let mut x = a;
    let mut base = cert.parent_base;
    let mut xy = false;
    for st in &l.stages {
        if let Step::BlowUp { base: bnames, end, new_gen, new_base, kind, .. } = &st.step {
            if subset_by_names(&st.parent, bnames)? == base {
                let p = &st.parent;
                let ai = p.index_of(end).unwrap();
                let child_base = subset_by_names(&st.child, new_base)?;
                if !x.contains(ai) {
                    x = subset_by_names(&st.child, &names_of(p, x))?;
                } else if x == base {
                    x = child_base;
                } else if *kind == 'C' {
                    let di = st.child.index_of(new_gen).unwrap();
                    let rest = subset_by_names(&st.child, &names_of(p, x.without(ai)))?;
                    x = rest.with(di);
                    xy = x.len() == 2;
                } else {
                    return Err(Error::MatchPrecondition("dihedral base has no proper subbase".into()));
                }
                base = child_base;
                continue;
            }
        }
        x = carry(st, x)?.0;
        base = carry(st, base)?.0;
    }
    Ok(SubbaseMatch { subset: x, xy_relation: xy })
}

/// Result of [`match_edge`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMatch {
    pub edge: (usize, usize),
    pub relation: Relation,
    pub xy_relation: bool,
}

/// Matches an edge with label at least 4 of the root with an edge of the child.
pub fn match_edge(l: &Lineage, e: (usize, usize)) -> Result<EdgeMatch> {
    let root = &l.root;
    let (x, y) = e;
    let heavy = x != y && x < root.rank() && y < root.rank() && matches!(root.m(x, y), Label::Finite(k) if k >= 4);
    if !heavy {
        return Err(Error::NotHeavyEdge(format!("{x},{y}")));
    }
    let es = Subset::from_indices([x, y]);
    let certs = match_bases(l)?;
    let cert = certs
        .iter()
        .find(|c| es.is_subset_of(c.parent_base))
        .ok_or_else(|| Error::MatchPrecondition("edge lies in no base".into()))?;
    let sub = if es == cert.parent_base {
        SubbaseMatch { subset: cert.child_base, xy_relation: false }
    } else {
        match_subbase(l, cert, es)?
    };
    let v = sub.subset.to_vec();
    if v.len() != 2 {
        return Err(Error::MatchPrecondition("matched subbase is not an edge".into()));
    }
    Ok(EdgeMatch { edge: (v[0], v[1]), relation: cert.relation, xy_relation: sub.xy_relation })
}

/// One verification outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub stage: usize,
    pub what: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// How far powers are tried when a label is infinite and no finite support exists.
pub const BOUNDED_POWERS: usize = 24;

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

struct OrderOracle<'a> {
    d: &'a CoxeterDiagram,
    cfg: OracleConfig,
    tables: HashMap<Subset, Option<CosetTable>>,
}

impl OrderOracle<'_> {
    /// Compares the order of `w` with `expected`; `Err` text describes a mismatch.
    fn check(&mut self, w: &Word, expected: Label) -> Result<std::result::Result<String, String>> {
        let support = w.support();
        let table = match self.tables.get(&support) {
            Some(t) => t.clone(),
            None => {
                let t = if is_spherical(self.d, support)
                    && matches!(order_of(self.d, support), Order::Finite(ref n) if *n <= BigUint::from(self.cfg.coset_cap / 4))
                {
                    Some(todd_coxeter(self.d, support, Subset::EMPTY, self.cfg.coset_cap)?)
                } else {
                    None
                };
                self.tables.insert(support, t.clone());
                t
            }
        };
        if let Some(t) = table {
            let got = element_order_in(&t, w);
            return Ok(match expected {
                Label::Finite(k) if k as usize == got => Ok(format!("order {got} by enumeration")),
                _ => Err(format!("order {got} by enumeration, label {expected}")),
            });
        }
        match expected {
            Label::Finite(k) => {
                if !reduce(self.d, &w.pow(k as usize))?.is_empty() {
                    return Ok(Err(format!("power {k} is not the identity")));
                }
                for p in prime_factors(k) {
                    if reduce(self.d, &w.pow((k / p) as usize))?.is_empty() {
                        return Ok(Err(format!("power {} is already the identity", k / p)));
                    }
                }
                Ok(Ok(format!("order {k} by reduction")))
            }
            Label::Infinity => {
                for j in 1..=BOUNDED_POWERS {
                    if reduce(self.d, &w.pow(j))?.is_empty() {
                        return Ok(Err(format!("power {j} is the identity, label inf")));
                    }
                }
                Ok(Ok(format!("no identity power up to {BOUNDED_POWERS}")))
            }
        }
    }
}

/// Checks each stage with the oracle: child labels against element orders
/// of the forward words, both round trips of the substitutions, and the
/// halving of the blown-up base.
pub fn verify_lineage(l: &Lineage, cfg: OracleConfig) -> Result<VerifyReport> {
    check_chain(l)?;
    let mut report = VerifyReport::default();
    for (si, st) in l.stages.iter().enumerate() {
        let (p, c) = (&st.parent, &st.child);
        let mut oracle = OrderOracle { d: p, cfg, tables: HashMap::new() };
        for i in 0..c.rank() {
            for j in i..c.rank() {
                let w = if i == j { st.forward[i].clone() } else { st.forward[i].concat(&st.forward[j]) };
                let expected = if i == j { Label::Finite(2) } else { c.m(i, j) };
                let what = if i == j {
                    format!("order of {}", c.name(i))
                } else {
                    format!("label {} {}", c.name(i), c.name(j))
                };
                let (ok, detail) = match oracle.check(&w, expected)? {
                    Ok(msg) => (true, msg),
                    Err(msg) => (false, msg),
                };
                report.checks.push(Check { stage: si, what, ok, detail });
            }
        }
        for g in 0..p.rank() {
            let w = reduce(p, &st.backward[g].substitute(&st.forward))?;
            let ok = w == Word(vec![g]);
            report.checks.push(Check {
                stage: si,
                what: format!("backward then forward on {}", p.name(g)),
                ok,
                detail: format!("reduces to {}", w.display(p)),
            });
        }
        for g in 0..c.rank() {
            let w = reduce(c, &st.forward[g].substitute(&st.backward))?;
            let ok = w == Word(vec![g]);
            report.checks.push(Check {
                stage: si,
                what: format!("forward then backward on {}", c.name(g)),
                ok,
                detail: format!("reduces to {}", w.display(c)),
            });
        }
        if let Step::BlowUp { base, new_base, .. } = &st.step {
            let b = subset_by_names(p, base)?;
            let nb = subset_by_names(c, new_base)?;
            let big = parabolic_order(p, b, cfg.coset_cap)?;
            let small = parabolic_order(c, nb, cfg.coset_cap)?;
            report.checks.push(Check {
                stage: si,
                what: "base order halves".into(),
                ok: big == 2 * small,
                detail: format!("{big} vs {small}"),
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn dia(t: &str) -> CoxeterDiagram {
        parse_diagram(&format!("{t}\ndefault 2")).unwrap()
    }

    #[test]
    fn bases_examples() {
        let d6 = parse_diagram("gens a b\nedge a b 6").unwrap();
        let bs = find_bases(&d6);
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].tag.to_string(), "D2(6)");
        let c3 = parse_diagram("gens a b c\nedge a b 4\nedge b c 3\nedge a c 2").unwrap();
        assert_eq!(find_bases(&c3)[0].tag.to_string(), "C3");
        let sq = parse_diagram("gens a b c d\nedge a b 2\nedge b c 2\nedge c d 2\nedge d a 2").unwrap();
        assert!(find_bases(&sq).is_empty());
        assert_eq!(find_max_spherical_simplices(&sq).len(), 4);
    }

    #[test]
    fn c3_blowup() {
        let d = dia("gens a b c\nedge a b 4\nedge b c 3");
        let base = find_bases(&d).remove(0);
        let plan = can_blow_up(&d, &base).unwrap().unwrap();
        assert_eq!(plan.end(), 0);
        let l = blow_up(&d, &plan).unwrap();
        let ch = l.child();
        assert_eq!(ch.names(), &["a_d", "b", "c", "a_z"]);
        assert_eq!(ch.m(1, 2), Label::Finite(3));
        assert_eq!(ch.m(0, 2), Label::Finite(3));
        assert_eq!(ch.m(0, 1), Label::Finite(2));
        assert!((0..3).all(|t| ch.m(3, t) == Label::Finite(2)));
        assert!(verify_lineage(&l, OracleConfig::default()).unwrap().passed());
        let certs = match_bases(&l).unwrap();
        assert_eq!(certs[0].relation, Relation::CToB);
        let e = match_edge(&l, (0, 1)).unwrap();
        assert!(e.xy_relation);
        assert_eq!(e.edge, (0, 1));
    }

    #[test]
    fn d26_blowup() {
        let d = parse_diagram("gens a b\nedge a b 6").unwrap();
        let run = max_rank(&d, BaseOrder::Lexicographic).unwrap();
        assert_eq!(run.lineage.stages.len(), 1);
        let ch = run.lineage.child();
        assert_eq!(ch.rank(), 3);
        assert_eq!(ch.m(0, 1), Label::Finite(3));
        assert_eq!(ch.m(0, 2), Label::Finite(2));
        assert!(verify_lineage(&run.lineage, OracleConfig::default()).unwrap().passed());
    }

    #[test]
    fn corrupted_lineage_is_caught() {
        let d = dia("gens a b c\nedge a b 4\nedge b c 3");
        let base = find_bases(&d).remove(0);
        let mut l = blow_up(&d, &can_blow_up(&d, &base).unwrap().unwrap()).unwrap();
        l.stages[0].forward[0] = Word(vec![0, 1]);
        assert!(!verify_lineage(&l, OracleConfig::default()).unwrap().passed());
    }

    #[test]
    fn hypothesis_failures() {
        let pendant = dia("gens a b c s\nedge a b 4\nedge b c 3\nedge s a 3");
        assert_eq!(max_rank(&pendant, BaseOrder::Lexicographic).unwrap().lineage.stages.len(), 0);
        let c5 = dia("gens e d c b a s\nedge e d 3\nedge d c 3\nedge c b 3\nedge b a 4\nedge s b 3");
        let base = find_bases(&c5).into_iter().find(|b| b.tag.to_string() == "C5").unwrap();
        assert!(can_blow_up(&c5, &base).unwrap().is_none());
    }
}
