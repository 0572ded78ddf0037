//! Independent verification: root-descent word problem, Todd–Coxeter coset
//! enumeration and brute-force conjugacy in small finite groups.
//!
//! Nothing here consults the classifier; orders and conjugacy come straight
//! from the presentation.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;

use crate::diagram::{CoxeterDiagram, Label, Subset};
use crate::error::{Error, Result};

/// Knobs for the oracle routes.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub coset_cap: usize,
    pub brute_cap: usize,
    pub tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { coset_cap: 1_000_000, brute_cap: 10_000, tol: 1e-9 }
    }
}

/// A product of generators, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The inverse word; every generator is an involution.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &Word) -> Word {
        self.concat(x).concat(&self.inverse())
    }

    /// Replaces each letter `i` by `images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        Word(self.0.iter().flat_map(|&i| images[i].0.iter().copied()).collect())
    }

    pub fn parse(d: &CoxeterDiagram, text: &str) -> Result<Word> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| d.index_of(t).ok_or_else(|| Error::UnknownGenerator(t.into())))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn display<'a>(&'a self, d: &'a CoxeterDiagram) -> WordDisplay<'a> {
        WordDisplay { w: self, d }
    }

    pub fn support(&self) -> Subset {
        self.0.iter().copied().collect()
    }
}

pub struct WordDisplay<'a> {
    w: &'a Word,
    d: &'a CoxeterDiagram,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.w.0.iter().map(|&i| self.d.name(i)).collect();
        f.write_str(&names.join(" "))
    }
}

/// `B(e_s, e_t)`.
pub fn bilinear_entry(d: &CoxeterDiagram, s: usize, t: usize) -> f64 {
    if s == t {
        return 1.0;
    }
    match d.m(s, t) {
        Label::Finite(2) => 0.0,
        Label::Finite(3) => -0.5,
        Label::Finite(k) => -(PI / k as f64).cos(),
        Label::Infinity => -1.0,
    }
}

/// Most small roots tolerated before giving up.
pub const SMALL_ROOT_CAP: usize = 200_000;

/// The small (elementary) roots of a diagram with their reflection table.
///
/// A positive root is small when it dominates no other positive root. There
/// are finitely many; they are the closure of the simple roots under
/// `a -> s(a)` for `-1 < B(a, e_s) < 0`. For a reduced word `r` with
/// `l(rs) < l(r)`, walking `e_s` backwards through `r` stays inside the
/// small roots until it meets the simple root of the letter to delete. So
/// descents and deletions are table lookups, and floating point is only used
/// on roots with bounded coefficients.
struct Roots {
    /// `step[a * n + s]`: index of `s(a)` when it is small, else `NONE`.
    step: Vec<u32>,
    n: usize,
}

const NONE: u32 = u32::MAX;

impl Roots {
    fn new(d: &CoxeterDiagram, tol: f64) -> Result<Roots> {
        let n = d.rank();
        let mut b = vec![0.0; n * n];
        for s in 0..n {
            for t in 0..n {
                b[s * n + t] = bilinear_entry(d, s, t);
            }
        }
        let key = |x: &[f64]| -> Vec<i64> { x.iter().map(|v| (v * 1e6).round() as i64).collect() };
        let form = |x: &[f64], s: usize| -> f64 { (0..n).map(|t| x[t] * b[t * n + s]).sum() };
        let mut roots: Vec<Vec<f64>> = Vec::new();
        let mut index: HashMap<Vec<i64>, u32> = HashMap::new();
        for s in 0..n {
            let mut e = vec![0.0; n];
            e[s] = 1.0;
            index.insert(key(&e), s as u32);
            roots.push(e);
        }
        let mut i = 0;
        while i < roots.len() {
            for s in 0..n {
                let f = form(&roots[i], s);
                if f < -tol && f > -1.0 + tol {
                    let mut y = roots[i].clone();
                    y[s] -= 2.0 * f;
                    let k = key(&y);
                    if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                        if roots.len() >= SMALL_ROOT_CAP {
                            return Err(Error::RootCap(SMALL_ROOT_CAP));
                        }
                        e.insert(roots.len() as u32);
                        roots.push(y);
                    }
                }
            }
            i += 1;
        }
        let mut step = vec![NONE; roots.len() * n];
        for (ai, x) in roots.iter().enumerate() {
            for s in 0..n {
                if ai == s {
                    continue;
                }
                let f = form(x, s);
                if f <= -1.0 + tol {
                    continue;
                }
                let mut y = x.clone();
                y[s] -= 2.0 * f;
                if let Some(&j) = index.get(&key(&y)) {
                    step[ai * n + s] = j;
                }
            }
        }
        Ok(Roots { step, n })
    }

    /// Position of the letter whose deletion realises `r s`, if `s` is a
    /// right descent of the reduced word `r`.
    fn exchange(&self, r: &[usize], s: usize) -> Option<usize> {
        let mut beta = s as u32;
        for j in (0..r.len()).rev() {
            if beta == r[j] as u32 {
                return Some(j);
            }
            beta = self.step[beta as usize * self.n + r[j]];
            if beta == NONE {
                return None;
            }
        }
        None
    }

    fn descent(&self, r: &[usize], s: usize) -> bool {
        self.exchange(r, s).is_some()
    }

    /// Appends `s` to the reduced word `r`, deleting a letter when `rs` is shorter.
    fn push(&self, r: &mut Vec<usize>, s: usize) {
        match self.exchange(r, s) {
            Some(j) => {
                r.remove(j);
            }
            None => r.push(s),
        }
    }
}

thread_local! {
    static ROOTS: std::cell::RefCell<Option<(CoxeterDiagram, f64, std::rc::Rc<Roots>)>> =
        const { std::cell::RefCell::new(None) };
}

fn roots_for(d: &CoxeterDiagram, tol: f64) -> Result<std::rc::Rc<Roots>> {
    ROOTS.with(|c| {
        if let Some((cd, ct, r)) = &*c.borrow() {
            if cd == d && *ct == tol {
                return Ok(r.clone());
            }
        }
        let r = std::rc::Rc::new(Roots::new(d, tol)?);
        *c.borrow_mut() = Some((d.clone(), tol, r.clone()));
        Ok(r)
    })
}

/// Whether `l(ws) < l(w)`.
pub fn is_descent(d: &CoxeterDiagram, w: &Word, s: usize) -> Result<bool> {
    let r = reduce(d, w)?;
    Ok(roots_for(d, OracleConfig::default().tol)?.descent(&r.0, s))
}

/// A reduced word for the same element.
pub fn reduce(d: &CoxeterDiagram, w: &Word) -> Result<Word> {
    reduce_with(d, w, OracleConfig::default().tol)
}

pub fn reduce_with(d: &CoxeterDiagram, w: &Word, tol: f64) -> Result<Word> {
    let roots = roots_for(d, tol)?;
    let mut r = Vec::with_capacity(w.len());
    for &s in &w.0 {
        roots.push(&mut r, s);
    }
    Ok(Word(r))
}

/// Whether the word is the identity element.
pub fn is_identity(d: &CoxeterDiagram, w: &Word) -> Result<bool> {
    Ok(reduce(d, w)?.is_empty())
}

/// Reduced word for the longest element of `<a>`, grown greedily by
/// appending non-descents. Errors if `<a>` turns out to be infinite
/// (detected by the word passing `limit` letters).
pub fn longest_word(d: &CoxeterDiagram, a: Subset) -> Result<Word> {
    longest_word_limited(d, a, 5_000)
}

pub fn longest_word_limited(d: &CoxeterDiagram, a: Subset, limit: usize) -> Result<Word> {
    let roots = roots_for(d, OracleConfig::default().tol)?;
    let mut r: Vec<usize> = Vec::new();
    'grow: loop {
        for s in a.iter() {
            if !roots.descent(&r, s) {
                r.push(s);
                if r.len() > limit {
                    return Err(Error::NotSpherical);
                }
                continue 'grow;
            }
        }
        return Ok(Word(r));
    }
}

const UNDEF: u32 = u32::MAX;

/// A complete coset table of `<H>` in `<A>`.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// Diagram indices of the columns.
    pub gens: Vec<usize>,
    rows: Vec<u32>,
}

impl CosetTable {
    pub fn size(&self) -> usize {
        if self.gens.is_empty() {
            1
        } else {
            self.rows.len() / self.gens.len()
        }
    }

    fn col(&self, g: usize) -> usize {
        self.gens.iter().position(|&x| x == g).expect("generator outside the table")
    }

    /// Image of coset `c` under generator `g` (a diagram index).
    pub fn act(&self, c: usize, g: usize) -> usize {
        self.rows[c * self.gens.len() + self.col(g)] as usize
    }

    pub fn act_word(&self, c: usize, w: &Word) -> usize {
        w.0.iter().fold(c, |c, &g| self.act(c, g))
    }

    /// Breadth-first shortest words reaching each coset from coset 0.
    pub fn bfs_words(&self) -> Vec<Word> {
        let k = self.gens.len();
        let n = self.size();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for j in 0..k {
                let e = self.rows[c * k + j] as usize;
                if !seen[e] {
                    seen[e] = true;
                    parent[e] = Some((c, self.gens[j]));
                    queue.push_back(e);
                }
            }
        }
        let mut words: Vec<Option<Word>> = vec![None; n];
        words[0] = Some(Word::empty());
        fn build(i: usize, parent: &[Option<(usize, usize)>], words: &mut Vec<Option<Word>>) -> Word {
            if let Some(w) = &words[i] {
                return w.clone();
            }
            let (p, g) = parent[i].unwrap();
            let mut w = build(p, parent, words);
            w.0.push(g);
            words[i] = Some(w.clone());
            w
        }
        (0..n).map(|i| build(i, &parent, &mut words)).collect()
    }
}

struct Enumerator {
    k: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: Vec<bool>,
    queue: Vec<u32>,
    defined: usize,
    cap: usize,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.k + x]
    }

    fn put(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.k + x] = v;
    }

    fn new_coset(&mut self) -> Result<u32> {
        self.defined += 1;
        if self.defined > self.cap {
            return Err(Error::CosetCap(self.cap));
        }
        let id = self.live.len() as u32;
        self.table.extend(std::iter::repeat_n(UNDEF, self.k));
        self.forward.push(id);
        self.live.push(true);
        Ok(id)
    }

    fn define(&mut self, c: u32, x: usize) -> Result<()> {
        let n = self.new_coset()?;
        self.put(c, x, n);
        self.put(n, x, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut c = c;
        while self.forward[c as usize] != r {
            let next = self.forward[c as usize];
            self.forward[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.forward[hi as usize] = lo;
        self.live[hi as usize] = false;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.k {
                let e = self.get(g, x);
                if e == UNDEF {
                    continue;
                }
                if self.get(e, x) == g {
                    self.put(e, x, UNDEF);
                }
                let (m, n) = (self.rep(g), self.rep(e));
                let mx = self.get(m, x);
                if mx != UNDEF {
                    self.merge(n, mx);
                    continue;
                }
                let nx = self.get(n, x);
                if nx != UNDEF {
                    self.merge(m, nx);
                    continue;
                }
                self.put(m, x, n);
                self.put(n, x, m);
            }
        }
    }

    /// Scans relator `r` at coset `c`, defining cosets as needed.
    fn scan_and_fill(&mut self, c: u32, r: &[usize]) -> Result<()> {
        let len = r.len();
        loop {
            let (mut f, mut i) = (c, 0usize);
            let (mut b, mut j) = (c, len);
            while i < j {
                let nx = self.get(f, r[i]);
                if nx == UNDEF {
                    break;
                }
                f = nx;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let nx = self.get(b, r[j - 1]);
                if nx == UNDEF {
                    break;
                }
                b = nx;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.put(f, r[i], b);
                self.put(b, r[i], f);
                return Ok(());
            }
            self.define(f, r[i])?;
        }
    }
}

/// Coset table of `<h>` in `<a>` by HLT enumeration.
pub fn todd_coxeter(d: &CoxeterDiagram, a: Subset, h: Subset, cap: usize) -> Result<CosetTable> {
    let gens: Vec<usize> = a.iter().collect();
    let k = gens.len();
    if k == 0 {
        return Ok(CosetTable { gens, rows: Vec::new() });
    }
    let local = |g: usize| gens.iter().position(|&x| x == g).unwrap();
    let mut relators: Vec<Vec<usize>> = Vec::new();
    for (x, &s) in gens.iter().enumerate() {
        for (y, &t) in gens.iter().enumerate().skip(x + 1) {
            if let Label::Finite(m) = d.m(s, t) {
                relators.push([x, y].repeat(m as usize));
            }
        }
    }
    let mut e = Enumerator {
        k,
        table: Vec::new(),
        forward: Vec::new(),
        live: Vec::new(),
        queue: Vec::new(),
        defined: 0,
        cap,
    };
    e.new_coset()?;
    for g in h.intersection(a).iter() {
        e.scan_and_fill(0, &[local(g)])?;
    }
    let mut c = 0u32;
    while (c as usize) < e.live.len() {
        for r in &relators {
            if !e.live[c as usize] {
                break;
            }
            e.scan_and_fill(c, r)?;
        }
        if e.live[c as usize] {
            for x in 0..k {
                if e.get(c, x) == UNDEF {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    // Compact to live cosets in order.
    let mut newid = vec![UNDEF; e.live.len()];
    let mut next = 0u32;
    for (i, &l) in e.live.iter().enumerate() {
        if l {
            newid[i] = next;
            next += 1;
        }
    }
    let mut rows = Vec::with_capacity(next as usize * k);
    for (i, &l) in e.live.iter().enumerate() {
        if l {
            for x in 0..k {
                let v = e.table[i * k + x];
                rows.push(newid[v as usize]);
            }
        }
    }
    Ok(CosetTable { gens, rows })
}

/// `|<a>|` by enumerating the regular action.
pub fn enumerate_order(d: &CoxeterDiagram, a: Subset, cap: usize) -> Result<usize> {
    Ok(todd_coxeter(d, a, Subset::EMPTY, cap)?.size())
}

/// `|<a>|` as a product of indices along a chain of parabolic subgroups,
/// `|<a>| = [<a> : <a - s>] * |<a - s>|`. Reaches groups far larger than the
/// regular enumeration can hold.
pub fn parabolic_order(d: &CoxeterDiagram, a: Subset, cap: usize) -> Result<u128> {
    let mut total: u128 = 1;
    let mut cur = a;
    while !cur.is_empty() {
        // Prefer removing a generator with few C-neighbours: indices stay small.
        let s = cur
            .iter()
            .min_by_key(|&s| (d.c_neighbors(s).intersection(cur).len(), std::cmp::Reverse(s)))
            .unwrap();
        let index = todd_coxeter(d, cur, cur.without(s), cap)?.size();
        total *= index as u128;
        cur = cur.without(s);
    }
    Ok(total)
}

/// Order of the element `w` of `<a>`.
pub fn element_order(d: &CoxeterDiagram, a: Subset, w: &Word, cap: usize) -> Result<usize> {
    let t = todd_coxeter(d, a, Subset::EMPTY, cap)?;
    Ok(element_order_in(&t, w))
}

/// Orbit length of coset 0 under `w`; in a regular table this is the order.
pub fn element_order_in(t: &CosetTable, w: &Word) -> usize {
    let mut c = t.act_word(0, w);
    let mut k = 1;
    while c != 0 {
        c = t.act_word(c, w);
        k += 1;
    }
    k
}

/// Conjugation data for a small finite Coxeter group, by exhaustion.
pub struct BruteConjugacy {
    rank: usize,
    words: Vec<Word>,
    /// `conj[g * rank + s]` = element id of `g s g^-1`.
    conj: Vec<u32>,
    gen_of: HashMap<u32, usize>,
}

impl BruteConjugacy {
    pub fn new(d: &CoxeterDiagram, cap: usize) -> Result<BruteConjugacy> {
        let all = d.all();
        let table = todd_coxeter(d, all, Subset::EMPTY, cap.saturating_mul(8).max(64)).map_err(|e| match e {
            Error::CosetCap(_) => Error::BruteCap(cap),
            other => other,
        })?;
        if table.size() > cap {
            return Err(Error::BruteCap(cap));
        }
        let words = table.bfs_words();
        let rank = d.rank();
        let mut conj = Vec::with_capacity(words.len() * rank);
        for w in &words {
            for s in 0..rank {
                let c = table.act_word(0, &w.conjugate(&Word(vec![s])));
                conj.push(c as u32);
            }
        }
        let gen_of = (0..rank).map(|s| (table.act(0, s) as u32, s)).collect();
        Ok(BruteConjugacy { rank, words, conj, gen_of })
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    /// Image of `a` under conjugation by element `g`, when it is a set of generators.
    fn image(&self, g: usize, a: Subset) -> Option<Subset> {
        let mut out = Subset::EMPTY;
        for s in a.iter() {
            out = out.with(*self.gen_of.get(&self.conj[g * self.rank + s])?);
        }
        Some(out)
    }

    /// Some `w` with `w a w^-1 = b` as sets.
    pub fn conjugator(&self, a: Subset, b: Subset) -> Option<Word> {
        if a.len() != b.len() {
            return None;
        }
        (0..self.order()).find(|&g| self.image(g, a) == Some(b)).map(|g| self.words[g].clone())
    }

    /// Every subset `w a w^-1` of generators.
    pub fn class_of(&self, a: Subset) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..self.order()).filter_map(|g| self.image(g, a)).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Some `w` with `w a w^-1 = b`, searched over the whole (finite) group.
pub fn brute_conjugate_subsets(d: &CoxeterDiagram, a: Subset, b: Subset, cap: usize) -> Result<Option<Word>> {
    Ok(BruteConjugacy::new(d, cap)?.conjugator(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;

    fn dia(t: &str) -> CoxeterDiagram {
        parse_diagram(t).unwrap()
    }

    #[test]
    fn bilinear_values() {
        let d = dia("gens a b c d\nedge a b 2\nedge b c 3");
        assert_eq!(bilinear_entry(&d, 0, 1).abs(), 0.0);
        assert!((bilinear_entry(&d, 1, 2) + 0.5).abs() < 1e-12);
        assert_eq!(bilinear_entry(&d, 0, 3), -1.0);
        assert_eq!(bilinear_entry(&d, 2, 2), 1.0);
    }

    #[test]
    fn descents() {
        let d = dia("gens a b\nedge a b 3");
        assert!(!is_descent(&d, &Word::empty(), 0).unwrap());
        assert!(is_descent(&d, &Word(vec![0]), 0).unwrap());
        let w0 = Word(vec![0, 1, 0]);
        assert!(is_descent(&d, &w0, 0).unwrap());
        assert!(is_descent(&d, &w0, 1).unwrap());
    }

    #[test]
    fn reductions() {
        let d = dia("gens a b\nedge a b 4");
        assert!(reduce(&d, &Word(vec![0, 0])).unwrap().is_empty());
        assert_eq!(reduce(&d, &Word(vec![0, 1, 0, 1])).unwrap().len(), 4);
        let r = reduce(&d, &Word(vec![1, 0, 1, 0, 1])).unwrap();
        assert_eq!(r.len(), 3);
        let t = todd_coxeter(&d, d.all(), Subset::EMPTY, 100).unwrap();
        assert_eq!(t.act_word(0, &r), t.act_word(0, &Word(vec![1, 0, 1, 0, 1])));
    }

    #[test]
    fn enumeration_sizes() {
        let a2 = dia("gens a b\nedge a b 3");
        assert_eq!(enumerate_order(&a2, a2.all(), 1000).unwrap(), 6);
        let f4 = dia("gens a b c d\nedge a b 3\nedge b c 4\nedge c d 3\ndefault 2\nedge a c 2");
        assert_eq!(enumerate_order(&f4, f4.all(), 100_000).unwrap(), 1152);
        let affine = dia("gens a b c\nedge a b 3\nedge b c 3\nedge a c 3");
        assert_eq!(enumerate_order(&affine, affine.all(), 5000).unwrap_err(), Error::CosetCap(5000));
        assert_eq!(parabolic_order(&f4, f4.all(), 100_000).unwrap(), 1152);
    }

    #[test]
    fn element_orders() {
        let c2 = dia("gens s t\nedge s t 4");
        assert_eq!(element_order(&c2, c2.all(), &Word(vec![0, 1]), 100).unwrap(), 4);
        assert_eq!(element_order(&c2, c2.all(), &Word(vec![0]), 100).unwrap(), 2);
        let a2 = dia("gens a b\nedge a b 3");
        let w0 = longest_word(&a2, a2.all()).unwrap();
        assert_eq!(w0.len(), 3);
        assert_eq!(element_order(&a2, a2.all(), &w0, 100).unwrap(), 2);
    }

    #[test]
    fn brute_force_classes() {
        let d3 = dia("gens a b\nedge a b 3");
        let w = brute_conjugate_subsets(&d3, Subset::singleton(0), Subset::singleton(1), 100).unwrap();
        assert!(w.is_some());
        let d4 = dia("gens a b\nedge a b 4");
        assert!(brute_conjugate_subsets(&d4, Subset::singleton(0), Subset::singleton(1), 100).unwrap().is_none());
        let same = brute_conjugate_subsets(&d4, Subset::singleton(0), Subset::singleton(0), 100).unwrap();
        assert_eq!(same, Some(Word::empty()));
        let big = dia("gens a b c d e f g\nedge a b 3\nedge b c 3\nedge c d 3\nedge d e 3\nedge e f 3\nedge f g 3\ndefault 2");
        assert!(matches!(BruteConjugacy::new(&big, 10_000), Err(Error::BruteCap(_))));
    }
}
