//! Text form of a [`Lineage`].
//!
//! ```text
//! lineage 1
//! parent <sha256 of the root diagram text>
//! diagram root
//! gens a b
//! edge a b 6
//! end
//! stage blowup base=a,b end=a kind=D new=a_c z=a_z newbase=a_c,b
//! def a_c = a b a
//! def a_z = a b a b a b
//! undef a = a_z b a_c b
//! diagram child
//! ...
//! end
//! ```
//!
//! `def` gives a child generator as a word over the parent and `undef` a
//! parent generator over the child; generators missing from either list
//! map to the same name. The empty word is written `1`.

use sha2::{Digest, Sha256};

use crate::diagram::{parse_diagram, CoxeterDiagram};
use crate::error::{Error, Result};
use crate::matching::{Lineage, Stage, Step};
use crate::oracle::Word;

pub fn diagram_digest(d: &CoxeterDiagram) -> String {
    hex::encode(Sha256::digest(d.serialize().as_bytes()))
}

fn list(v: &[String]) -> String {
    v.join(",")
}

fn word_text(d: &CoxeterDiagram, w: &Word) -> String {
    w.display(d).to_string()
}

pub fn write_lineage(l: &Lineage) -> String {
    let mut out = String::from("lineage 1\n");
    out.push_str(&format!("parent {}\n", diagram_digest(&l.root)));
    out.push_str("diagram root\n");
    out.push_str(&l.root.serialize());
    out.push_str("end\n");
    for st in &l.stages {
        match &st.step {
            Step::BlowUp { base, end, kind, new_gen, z, new_base } => out.push_str(&format!(
                "stage blowup base={} end={end} kind={kind} new={new_gen} z={z} newbase={}\n",
                list(base),
                list(new_base)
            )),
            Step::Twist { s1, s0, s2, s0_bar, conjugator, images } => {
                let im: Vec<String> = images.iter().map(|(p, c)| format!("{p}:{c}")).collect();
                out.push_str(&format!(
                    "stage twist s1={} s0={} s2={} sbar={} d={} images={}\n",
                    list(s1),
                    list(s0),
                    list(s2),
                    list(s0_bar),
                    list(conjugator),
                    im.join(",")
                ));
            }
        }
        let (p, c) = (&st.parent, &st.child);
        for (i, w) in st.forward.iter().enumerate() {
            if p.index_of(c.name(i)).map(|j| Word(vec![j])) != Some(w.clone()) {
                out.push_str(&format!("def {} = {}\n", c.name(i), word_text(p, w)));
            }
        }
        for (g, w) in st.backward.iter().enumerate() {
            if c.index_of(p.name(g)).map(|j| Word(vec![j])) != Some(w.clone()) {
                out.push_str(&format!("undef {} = {}\n", p.name(g), word_text(c, w)));
            }
        }
        out.push_str("diagram child\n");
        out.push_str(&c.serialize());
        out.push_str("end\n");
    }
    out
}

struct Lines<'a> {
    it: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.it.by_ref() {
            let t = l.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next().ok_or_else(|| Error::Parse { line: 0, msg: format!("unexpected end of file, wanted {what}") })
    }

    fn diagram(&mut self, tag: &str) -> Result<CoxeterDiagram> {
        let (line, head) = self.expect("diagram")?;
        if head != format!("diagram {tag}") {
            return Err(Error::Parse { line, msg: format!("expected `diagram {tag}`") });
        }
        let mut body = String::new();
        loop {
            let (_, l) = self.expect("end")?;
            if l == "end" {
                break;
            }
            body.push_str(l);
            body.push('\n');
        }
        parse_diagram(&body)
    }
}

fn fields(line: usize, rest: &str) -> Result<Vec<(&str, &str)>> {
    rest.split_whitespace()
        .map(|kv| kv.split_once('=').ok_or_else(|| Error::Parse { line, msg: format!("expected key=value, got `{kv}`") }))
        .collect()
}

fn field<'a>(line: usize, fs: &[(&'a str, &'a str)], key: &str) -> Result<&'a str> {
    fs.iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Parse { line, msg: format!("missing `{key}`") })
}

fn names(s: &str) -> Vec<String> {
    s.split(',').filter(|t| !t.is_empty()).map(str::to_string).collect()
}

fn parse_word(d: &CoxeterDiagram, text: &str) -> Result<Word> {
    if text.trim() == "1" {
        Ok(Word::empty())
    } else {
        Word::parse(d, text)
    }
}

/// Parses a lineage; `expected_root`, when given, must match the recorded root.
pub fn parse_lineage(text: &str, expected_root: Option<&CoxeterDiagram>) -> Result<Lineage> {
    let mut ls = Lines { it: text.lines().enumerate().peekable() };
    let (line, head) = ls.expect("header")?;
    if head != "lineage 1" {
        return Err(Error::Parse { line, msg: "expected `lineage 1`".into() });
    }
    let (line, ph) = ls.expect("parent")?;
    let digest = ph
        .strip_prefix("parent ")
        .ok_or_else(|| Error::Parse { line, msg: "expected `parent <digest>`".into() })?
        .trim()
        .to_string();
    let root = ls.diagram("root")?;
    if diagram_digest(&root) != digest {
        return Err(Error::ForeignLineage("root digest mismatch".into()));
    }
    if let Some(e) = expected_root {
        if diagram_digest(e) != digest {
            return Err(Error::ForeignLineage("lineage was built from a different diagram".into()));
        }
    }
    let mut lineage = Lineage::identity(&root);
    while let Some((line, head)) = ls.next() {
        let Some(rest) = head.strip_prefix("stage ") else {
            return Err(Error::Parse { line, msg: "expected `stage`".into() });
        };
        let (kind, rest) = rest.split_once(' ').unwrap_or((rest, ""));
        let fs = fields(line, rest)?;
        let step = match kind {
            "blowup" => Step::BlowUp {
                base: names(field(line, &fs, "base")?),
                end: field(line, &fs, "end")?.to_string(),
                kind: field(line, &fs, "kind")?.chars().next().unwrap_or('?'),
                new_gen: field(line, &fs, "new")?.to_string(),
                z: field(line, &fs, "z")?.to_string(),
                new_base: names(field(line, &fs, "newbase")?),
            },
            "twist" => Step::Twist {
                s1: names(field(line, &fs, "s1")?),
                s0: names(field(line, &fs, "s0")?),
                s2: names(field(line, &fs, "s2")?),
                s0_bar: names(field(line, &fs, "sbar")?),
                conjugator: names(field(line, &fs, "d")?),
                images: names(field(line, &fs, "images")?)
                    .into_iter()
                    .map(|p| {
                        p.split_once(':')
                            .map(|(a, b)| (a.to_string(), b.to_string()))
                            .ok_or_else(|| Error::Parse { line, msg: format!("bad image `{p}`") })
                    })
                    .collect::<Result<_>>()?,
            },
            other => return Err(Error::Parse { line, msg: format!("unknown stage kind `{other}`") }),
        };
        let mut defs: Vec<(String, String)> = Vec::new();
        let mut undefs: Vec<(String, String)> = Vec::new();
        loop {
            let peek = ls.it.peek().map(|(_, l)| l.trim().to_string());
            match peek {
                Some(l) if l.starts_with("def ") || l.starts_with("undef ") || l.is_empty() || l.starts_with('#') => {
                    let (line, l) = ls.next().unwrap();
                    let (lhs, rhs) =
                        l.split_once('=').ok_or_else(|| Error::Parse { line, msg: "expected `=`".into() })?;
                    let mut it = lhs.split_whitespace();
                    let (kw, name) = (it.next().unwrap(), it.next().unwrap_or("").to_string());
                    if kw == "def" {
                        defs.push((name, rhs.trim().to_string()));
                    } else {
                        undefs.push((name, rhs.trim().to_string()));
                    }
                }
                _ => break,
            }
        }
        let parent = lineage.child().clone();
        let child = ls.diagram("child")?;
        let mut forward = Vec::with_capacity(child.rank());
        for i in 0..child.rank() {
            let w = match defs.iter().find(|(n, _)| n == child.name(i)) {
                Some((_, t)) => parse_word(&parent, t)?,
                None => Word(vec![parent
                    .index_of(child.name(i))
                    .ok_or_else(|| Error::ForeignLineage(format!("no definition for `{}`", child.name(i))))?]),
            };
            forward.push(w);
        }
        let mut backward = Vec::with_capacity(parent.rank());
        for g in 0..parent.rank() {
            let w = match undefs.iter().find(|(n, _)| n == parent.name(g)) {
                Some((_, t)) => parse_word(&child, t)?,
                None => Word(vec![child
                    .index_of(parent.name(g))
                    .ok_or_else(|| Error::ForeignLineage(format!("no expression for `{}`", parent.name(g))))?]),
            };
            backward.push(w);
        }
        lineage.push(Stage { parent, child, step, forward, backward })?;
    }
    Ok(lineage)
}
