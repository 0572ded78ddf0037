//! Coxeter matrices and their two graph views.
//!
//! A [`CoxeterDiagram`] stores the full label matrix `m(s,t)` over named
//! generators. The P-diagram has an edge wherever `m < inf`, the C-diagram
//! wherever `m > 2`. Subsets of generators are 64-bit masks ([`Subset`]).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest rank a diagram may have (one bit per generator).
pub const MAX_RANK: usize = 64;

/// Default rank cap for [`canonical_form`].
pub const CANONICAL_RANK_LIMIT: usize = 12;

/// An entry of the Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    pub fn value(self) -> Option<u32> {
        match self {
            Label::Finite(k) => Some(k),
            Label::Infinity => None,
        }
    }

    fn code(self) -> u32 {
        match self {
            Label::Finite(k) => k,
            Label::Infinity => u32::MAX,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(k) => write!(f, "{k}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        if s == "inf" || s == "∞" {
            return Ok(Label::Infinity);
        }
        let k: u32 = s
            .parse()
            .map_err(|_| Error::Invalid(format!("bad label `{s}`")))?;
        if k < 2 {
            return Err(Error::LabelTooSmall(k));
        }
        Ok(Label::Finite(k))
    }
}

/// A set of generator indices of one diagram.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Subset {
        if rank >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset(it.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, o: Subset) -> Subset {
        Subset(self.0 | o.0)
    }

    pub fn intersection(self, o: Subset) -> Subset {
        Subset(self.0 & o.0)
    }

    pub fn difference(self, o: Subset) -> Subset {
        Subset(self.0 & !o.0)
    }

    pub fn is_subset_of(self, o: Subset) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Lowest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares by the sorted index vectors, lexicographically.
    pub fn lex_cmp(self, o: Subset) -> std::cmp::Ordering {
        self.iter().cmp(o.iter())
    }

    /// All subsets of `self`, including `self` and the empty set.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let c = cur?;
            cur = if c == mask { None } else { Some((c.wrapping_sub(mask)) & mask) };
            Some(Subset(c))
        })
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        Subset::from_indices(it)
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Which graph to draw or traverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum View {
    /// Edges where `m < inf`.
    P,
    /// Edges where `m > 2`.
    C,
}

/// A Coxeter matrix over named generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    names: Vec<String>,
    m: Vec<Label>,
    p_adj: Vec<u64>,
    c_adj: Vec<u64>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.starts_with('#') && name.chars().all(|c| !c.is_whitespace() && !c.is_control())
}

impl CoxeterDiagram {
    /// A diagram with every off-diagonal label set to `fill`.
    pub fn with_fill<S: AsRef<str>>(names: &[S], fill: Label) -> Result<CoxeterDiagram> {
        let n = names.len();
        if n > MAX_RANK {
            return Err(Error::RankLimit { rank: n, limit: MAX_RANK });
        }
        let mut owned: Vec<String> = Vec::with_capacity(n);
        for name in names {
            let name = name.as_ref();
            if !valid_name(name) {
                return Err(Error::Invalid(format!("bad generator name `{name}`")));
            }
            if owned.iter().any(|o| o == name) {
                return Err(Error::DuplicateGenerator(name.to_string()));
            }
            owned.push(name.to_string());
        }
        if let Label::Finite(k) = fill {
            if k < 2 {
                return Err(Error::LabelTooSmall(k));
            }
        }
        let mut m = vec![fill; n * n];
        for i in 0..n {
            m[i * n + i] = Label::Finite(1);
        }
        let mut d = CoxeterDiagram { names: owned, m, p_adj: vec![0; n], c_adj: vec![0; n] };
        d.rebuild_masks();
        Ok(d)
    }

    /// A diagram with no finite edges.
    pub fn free<S: AsRef<str>>(names: &[S]) -> Result<CoxeterDiagram> {
        Self::with_fill(names, Label::Infinity)
    }

    fn rebuild_masks(&mut self) {
        let n = self.rank();
        for i in 0..n {
            let (mut p, mut c) = (0u64, 0u64);
            for j in 0..n {
                if i == j {
                    continue;
                }
                let l = self.m[i * n + j];
                if l.is_finite() {
                    p |= 1 << j;
                }
                if l != Label::Finite(2) {
                    c |= 1 << j;
                }
            }
            self.p_adj[i] = p;
            self.c_adj[i] = c;
        }
    }

    /// Sets `m(i,j) = m(j,i) = label`.
    pub fn set(&mut self, i: usize, j: usize, label: Label) -> Result<()> {
        if i == j {
            return Err(Error::Invalid(format!("diagonal entry of `{}` is fixed", self.names[i])));
        }
        if let Label::Finite(k) = label {
            if k < 2 {
                return Err(Error::LabelTooSmall(k));
            }
        }
        let n = self.rank();
        self.m[i * n + j] = label;
        self.m[j * n + i] = label;
        self.rebuild_masks();
        Ok(())
    }

    /// Builder form of [`CoxeterDiagram::set`] taking names.
    pub fn with_edge(mut self, a: &str, b: &str, label: Label) -> Result<CoxeterDiagram> {
        let i = self.index_of(a).ok_or_else(|| Error::UnknownGenerator(a.into()))?;
        let j = self.index_of(b).ok_or_else(|| Error::UnknownGenerator(b.into()))?;
        self.set(i, j, label)?;
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn m(&self, i: usize, j: usize) -> Label {
        self.m[i * self.rank() + j]
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.rank())
    }

    /// P-diagram neighbours of `i`.
    pub fn p_neighbors(&self, i: usize) -> Subset {
        Subset(self.p_adj[i])
    }

    /// C-diagram neighbours of `i`.
    pub fn c_neighbors(&self, i: usize) -> Subset {
        Subset(self.c_adj[i])
    }

    /// Parses a comma or whitespace separated list of generator names.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let i = self.index_of(tok).ok_or_else(|| Error::UnknownGenerator(tok.into()))?;
            s = s.with(i);
        }
        Ok(s)
    }

    pub fn subset_of(&self, names: &[&str]) -> Result<Subset> {
        names
            .iter()
            .map(|n| self.index_of(n).ok_or_else(|| Error::UnknownGenerator((*n).into())))
            .collect()
    }

    /// `{a,b,c}` in generator order.
    pub fn format_subset(&self, a: Subset) -> String {
        let parts: Vec<&str> = a.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Restriction of `m` to `a`, keeping generator order.
    pub fn induced(&self, a: Subset) -> CoxeterDiagram {
        let idx: Vec<usize> = a.iter().collect();
        let names: Vec<String> = idx.iter().map(|&i| self.names[i].clone()).collect();
        let k = idx.len();
        let mut m = Vec::with_capacity(k * k);
        for &i in &idx {
            for &j in &idx {
                m.push(self.m(i, j));
            }
        }
        let mut d = CoxeterDiagram { names, m, p_adj: vec![0; k], c_adj: vec![0; k] };
        d.rebuild_masks();
        d
    }

    /// The same diagram with generators renamed and reordered: position `i`
    /// of the result is generator `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> CoxeterDiagram {
        let n = self.rank();
        assert_eq!(perm.len(), n);
        let names = perm.iter().map(|&p| self.names[p].clone()).collect();
        let mut m = vec![Label::Finite(1); n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = self.m(perm[i], perm[j]);
            }
        }
        let mut d = CoxeterDiagram { names, m, p_adj: vec![0; n], c_adj: vec![0; n] };
        d.rebuild_masks();
        d
    }

    fn components(&self, a: Subset, adj: &[u64]) -> Vec<Subset> {
        let mut rest = a.0;
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let i = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = adj[i] & a.0 & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(Subset(comp));
        }
        out
    }

    /// Components of the C-diagram induced on `a` (the direct factors).
    pub fn c_components(&self, a: Subset) -> Vec<Subset> {
        self.components(a, &self.c_adj)
    }

    /// Components of the P-diagram induced on `a` (the free factors).
    pub fn p_components(&self, a: Subset) -> Vec<Subset> {
        self.components(a, &self.p_adj)
    }

    /// The C-component of `a` containing `s`.
    pub fn c_component_of(&self, a: Subset, s: usize) -> Subset {
        let mut comp = Subset::singleton(s);
        let mut frontier = comp.0;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.c_adj[i] & a.0 & !comp.0;
            comp.0 |= new;
            frontier |= new;
        }
        comp
    }

    /// Whether every pair in `a` has a finite label.
    pub fn is_complete(&self, a: Subset) -> bool {
        a.iter().all(|i| a.without(i).is_subset_of(self.p_neighbors(i)))
    }

    pub fn is_irreducible(&self, a: Subset) -> bool {
        !a.is_empty() && self.c_component_of(a, a.first().unwrap()) == a
    }

    /// Line-oriented text form; every finite pair is listed.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("gens");
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if let Label::Finite(k) = self.m(i, j) {
                    out.push_str(&format!("edge {} {} {}\n", self.names[i], self.names[j], k));
                }
            }
        }
        out
    }

    /// DOT rendering of one view, labels are the matrix entries.
    pub fn emit_dot(&self, view: View) -> String {
        let mut out = String::from("graph coxeter {\n");
        for n in &self.names {
            out.push_str(&format!("  {};\n", dot_quote(n)));
        }
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                let l = self.m(i, j);
                let shown = match view {
                    View::P => l.is_finite(),
                    View::C => l != Label::Finite(2),
                };
                if shown {
                    let text = match l {
                        Label::Finite(k) => k.to_string(),
                        Label::Infinity => "∞".to_string(),
                    };
                    out.push_str(&format!(
                        "  {} -- {} [label=\"{}\"];\n",
                        dot_quote(&self.names[i]),
                        dot_quote(&self.names[j]),
                        text
                    ));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

impl fmt::Display for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl FromStr for CoxeterDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoxeterDiagram> {
        parse_diagram(s)
    }
}

/// Reads the diagram file format.
///
/// ```text
/// # comment
/// gens a b c
/// default 2        # optional; unlisted pairs are inf otherwise
/// edge a b 4
/// edge b c inf
/// ```
pub fn parse_diagram(text: &str) -> Result<CoxeterDiagram> {
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, String, String, Label)> = Vec::new();
    let mut default = Label::Infinity;
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some((&head, rest)) = toks.split_first() else { continue };
        match head {
            "gens" => {
                if rest.is_empty() {
                    return Err(err(line, "`gens` needs at least one name".into()));
                }
                for &n in rest {
                    if names.iter().any(|o| o == n) {
                        return Err(Error::DuplicateGenerator(n.into()));
                    }
                    names.push(n.to_string());
                }
            }
            "edge" => {
                if rest.len() != 3 {
                    return Err(err(line, "expected `edge <a> <b> <label>`".into()));
                }
                let label: Label = rest[2].parse()?;
                edges.push((line, rest[0].to_string(), rest[1].to_string(), label));
            }
            "default" => {
                if rest.len() != 1 {
                    return Err(err(line, "expected `default <label>`".into()));
                }
                default = rest[0].parse()?;
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    let mut d = CoxeterDiagram::with_fill(&names, default)?;
    let n = d.rank();
    let mut seen: Vec<Option<Label>> = vec![None; n * n];
    for (line, a, b, label) in edges {
        let i = d.index_of(&a).ok_or(Error::UnknownGenerator(a.clone()))?;
        let j = d.index_of(&b).ok_or(Error::UnknownGenerator(b.clone()))?;
        if i == j {
            return Err(err(line, format!("self edge on `{a}`")));
        }
        match seen[i * n + j] {
            Some(prev) if prev != label => return Err(Error::ConflictingEdge(a, b)),
            _ => {}
        }
        seen[i * n + j] = Some(label);
        seen[j * n + i] = Some(label);
        let idx = i * n + j;
        d.m[idx] = label;
        d.m[j * n + i] = label;
    }
    d.rebuild_masks();
    Ok(d)
}

/// Permutation-minimal byte encoding of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn rank(&self) -> usize {
        u32::from_be_bytes(self.0[0..4].try_into().unwrap()) as usize
    }
}

/// Canonical form under the default rank limit.
pub fn canonical_form(d: &CoxeterDiagram) -> Result<CanonicalForm> {
    canonical_form_with_limit(d, CANONICAL_RANK_LIMIT)
}

/// Encoding: rank, then the lower triangle row by row (labels as u32, inf as
/// `u32::MAX`), all big-endian, minimized over vertex orders.
pub fn canonical_form_with_limit(d: &CoxeterDiagram, limit: usize) -> Result<CanonicalForm> {
    let n = d.rank();
    if n > limit {
        return Err(Error::RankLimit { rank: n, limit });
    }
    let code: Vec<u32> = d.m.iter().map(|l| l.code()).collect();
    let colors = refine_colors(n, &code);
    let mut search = Search {
        n,
        code: &code,
        colors: &colors,
        order: Vec::with_capacity(n),
        cur: Vec::with_capacity(n * n / 2),
        best: None,
        used: 0,
    };
    search.run();
    let best = search.best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(4 + 4 * best.len());
    bytes.extend_from_slice(&(n as u32).to_be_bytes());
    for v in best {
        bytes.extend_from_slice(&v.to_be_bytes());
    }
    Ok(CanonicalForm(bytes))
}

/// Isomorphism-invariant vertex colouring by iterated label-multiset refinement.
fn refine_colors(n: usize, code: &[u32]) -> Vec<usize> {
    let mut colors = vec![0usize; n];
    loop {
        let sigs: Vec<(usize, Vec<(u32, usize)>)> = (0..n)
            .map(|i| {
                let mut row: Vec<(u32, usize)> =
                    (0..n).filter(|&j| j != i).map(|j| (code[i * n + j], colors[j])).collect();
                row.sort_unstable();
                (colors[i], row)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        let after = distinct.len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

struct Search<'a> {
    n: usize,
    code: &'a [u32],
    colors: &'a [usize],
    order: Vec<usize>,
    cur: Vec<u32>,
    best: Option<Vec<u32>>,
    used: u64,
}

impl Search<'_> {
    fn run(&mut self) {
        let k = self.order.len();
        if k == self.n {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        // Vertices are placed in colour order, so the colour at position k is fixed.
        let mut sorted: Vec<usize> = self.colors.to_vec();
        sorted.sort_unstable();
        let want = sorted[k];
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colors[v] != want {
                continue;
            }
            // Unplaced twins give identical subtrees.
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mark = self.cur.len();
            for &u in &self.order {
                self.cur.push(self.code[v * self.n + u]);
            }
            if self.prefix_ok() {
                self.order.push(v);
                self.used |= 1 << v;
                self.run();
                self.used &= !(1 << v);
                self.order.pop();
            }
            self.cur.truncate(mark);
        }
    }

    fn prefix_ok(&self) -> bool {
        match &self.best {
            None => true,
            Some(b) => self.cur.as_slice() <= &b[..self.cur.len()],
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let n = self.n;
        (0..n).all(|x| x == u || x == v || self.code[u * n + x] == self.code[v * n + x])
    }
}
