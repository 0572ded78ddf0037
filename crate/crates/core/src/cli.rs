//! The `coxforge` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{compare_census, simplex_census};
use crate::classify::{components, order_of, Order};
use crate::conjugacy::{are_conjugate_visual, conjugacy_class};
use crate::decompose::{apply_twist, build_lambda, c_minimal_classes, realize_tree, Separation, TwistData, TwistKind};
use crate::diagram::{parse_diagram, CoxeterDiagram, Subset, View};
use crate::error::{Error, Result};
use crate::lineage_file::{parse_lineage, write_lineage};
use crate::matching::{blow_up, can_blow_up, find_bases, max_rank, verify_lineage, BaseOrder, Lineage, Step};
use crate::oracle::{enumerate_order, reduce, OracleConfig, Word};

#[derive(Parser, Debug)]
#[command(name = "coxforge", version, about = "Coxeter diagrams, visual subgroups and rank-raising rewrites")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ViewArg {
    P,
    C,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Parse a diagram file and report its rank.
    Validate { file: PathBuf },
    /// Irreducible components and their types.
    Classify {
        file: PathBuf,
        #[arg(long)]
        subset: Option<String>,
    },
    /// Order of the group or of a visual subgroup.
    Order {
        file: PathBuf,
        #[arg(long)]
        subset: Option<String>,
        /// Count cosets instead of using the type formula.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Reduce a word.
    Reduce {
        file: PathBuf,
        /// Generator names, space or comma separated.
        word: Vec<String>,
    },
    /// Visual conjugacy: a certificate for two subsets, or the class of one.
    Conj {
        file: PathBuf,
        a: String,
        b: Option<String>,
    },
    /// Bases and whether each admits a blow-up.
    Bases { file: PathBuf },
    /// Blow up one base.
    Blowup {
        file: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Blow up until the rank is maximal.
    Maxrank {
        file: PathBuf,
        /// Visit bases in reverse lexicographic order.
        #[arg(long)]
        reverse: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a lineage file against its root diagram.
    Verify { file: PathBuf, lineage: PathBuf },
    /// Elementary twist along a separation.
    Twist {
        file: PathBuf,
        #[arg(long)]
        s1: String,
        #[arg(long)]
        s0: String,
        #[arg(long, default_value = "")]
        bullet: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// C-minimal separating classes and the flattened decomposition of each.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Counts of complete subsets by isomorphism type.
    Census {
        file: PathBuf,
        /// Compare with the census of another diagram.
        #[arg(long)]
        compare: Option<PathBuf>,
        /// Take the census after raising to maximum rank.
        #[arg(long)]
        maxrank: bool,
    },
    /// DOT rendering.
    Dot {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "p")]
        view: ViewArg,
    },
}

/// Failure that maps to exit code 1 without being a library error.
struct Failed(String);

enum CmdError {
    Lib(Error),
    Io(String),
    Failed(Failed),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Lib(e)
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        CmdError::Io(e.to_string())
    }
}

type CmdResult = std::result::Result<(), CmdError>;

fn load(path: &Path) -> std::result::Result<CoxeterDiagram, CmdError> {
    let text = fs::read_to_string(path).map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_diagram(&text)?)
}

fn subset_arg(d: &CoxeterDiagram, s: &Option<String>) -> Result<Subset> {
    match s {
        Some(t) => d.parse_subset(t),
        None => Ok(d.all()),
    }
}

fn names(d: &CoxeterDiagram, a: Subset) -> Vec<String> {
    a.iter().map(|i| d.name(i).to_string()).collect()
}

fn step_log(l: &Lineage) -> Vec<String> {
    l.stages
        .iter()
        .map(|st| match &st.step {
            Step::BlowUp { base, end, kind, new_gen, z, .. } => {
                format!("blow up {{{}}} ({kind}) at {end}: new {new_gen}, central {z}", base.join(","))
            }
            Step::Twist { s0, s2, conjugator, .. } => format!(
                "twist {{{}}} over {{{}}} by {}",
                s2.join(","),
                s0.join(","),
                if conjugator.is_empty() { "1".to_string() } else { conjugator.join(" ") }
            ),
        })
        .collect()
}

fn write_out(path: &Option<PathBuf>, l: &Lineage) -> CmdResult {
    if let Some(p) = path {
        fs::write(p, write_lineage(l))?;
    }
    Ok(())
}

fn emit(out: &mut dyn Write, json_mode: bool, v: Value, text: String) -> CmdResult {
    if json_mode {
        writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap())?;
    } else {
        write!(out, "{text}")?;
    }
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let js = cli.json;
    let cfg = OracleConfig::default();
    match cli.cmd {
        Cmd::Validate { file } => {
            let d = load(&file)?;
            emit(out, js, json!({"ok": true, "rank": d.rank()}), format!("ok: rank {}\n", d.rank()))
        }
        Cmd::Classify { file, subset } => {
            let d = load(&file)?;
            let a = subset_arg(&d, &subset)?;
            match components(&d, a) {
                Some(cs) => {
                    let mut text = String::new();
                    let mut arr = Vec::new();
                    for (s, r) in &cs {
                        text.push_str(&format!("{} {}\n", d.format_subset(*s), r.tag));
                        arr.push(json!({"subset": names(&d, *s), "type": r.tag.to_string(), "order": r.tag.order.to_string()}));
                    }
                    emit(out, js, json!({"finite": true, "components": arr}), text)
                }
                None => {
                    let comps: Vec<Vec<String>> = d.c_components(a).into_iter().map(|c| names(&d, c)).collect();
                    emit(out, js, json!({"finite": false, "components": comps}), "infinite\n".into())
                }
            }
        }
        Cmd::Order { file, subset, enumerate, cap } => {
            let d = load(&file)?;
            let a = subset_arg(&d, &subset)?;
            let text = if enumerate {
                enumerate_order(&d, a, cap)?.to_string()
            } else {
                match order_of(&d, a) {
                    Order::Finite(n) => n.to_string(),
                    Order::Infinite => "inf".into(),
                }
            };
            emit(out, js, json!({"order": text}), format!("{text}\n"))
        }
        Cmd::Reduce { file, word } => {
            let d = load(&file)?;
            let w = Word::parse(&d, &word.join(" "))?;
            let r = reduce(&d, &w)?;
            let shown = r.display(&d).to_string();
            emit(out, js, json!({"word": shown, "length": r.len()}), format!("{shown}\n"))
        }
        Cmd::Conj { file, a, b } => {
            let d = load(&file)?;
            let a = d.parse_subset(&a)?;
            match b {
                Some(b) => {
                    let b = d.parse_subset(&b)?;
                    match are_conjugate_visual(&d, a, b) {
                        Some(p) => {
                            let w = p.total_word(&d)?.display(&d).to_string();
                            emit(out, js, json!({"conjugate": true, "moves": p.len(), "word": w}), format!("conjugate by {w}\n"))
                        }
                        None => emit(out, js, json!({"conjugate": false}), "not conjugate\n".into()),
                    }
                }
                None => {
                    let members = conjugacy_class(&d, a).members;
                    let text: String = members.iter().map(|m| format!("{}\n", d.format_subset(*m))).collect();
                    let arr: Vec<Vec<String>> = members.iter().map(|m| names(&d, *m)).collect();
                    emit(out, js, json!({"class": arr}), text)
                }
            }
        }
        Cmd::Bases { file } => {
            let d = load(&file)?;
            let mut text = String::new();
            let mut arr = Vec::new();
            for b in find_bases(&d) {
                let ok = can_blow_up(&d, &b)?.is_some();
                text.push_str(&format!("{} {}{}\n", d.format_subset(b.subset), b.tag, if ok { " blow-up" } else { "" }));
                arr.push(json!({"base": names(&d, b.subset), "type": b.tag.to_string(), "blowup": ok}));
            }
            emit(out, js, json!({"bases": arr}), text)
        }
        Cmd::Blowup { file, base, out: path } => {
            let d = load(&file)?;
            let b = d.parse_subset(&base)?;
            let found = find_bases(&d).into_iter().find(|x| x.subset == b).ok_or_else(|| Error::NotBase(base.clone()))?;
            let plan = can_blow_up(&d, &found)?.ok_or_else(|| Error::BlowupHypothesis(base.clone()))?;
            let l = blow_up(&d, &plan)?;
            write_out(&path, &l)?;
            let child = l.child().serialize();
            emit(out, js, json!({"child": child, "steps": step_log(&l)}), child.clone())
        }
        Cmd::Maxrank { file, reverse, out: path } => {
            let d = load(&file)?;
            let order = if reverse { BaseOrder::ReverseLexicographic } else { BaseOrder::Lexicographic };
            let run = max_rank(&d, order)?;
            write_out(&path, &run.lineage)?;
            let child = run.lineage.child().serialize();
            let log = step_log(&run.lineage);
            let pots: Vec<String> = run.potentials.iter().map(|p| p.to_string()).collect();
            let mut text = child.clone();
            for (i, s) in log.iter().enumerate() {
                text.push_str(&format!("# step {}: {s} (potential {} -> {})\n", i + 1, pots[i], pots[i + 1]));
            }
            emit(out, js, json!({"child": child, "rank": run.lineage.child().rank(), "steps": log, "potentials": pots}), text)
        }
        Cmd::Verify { file, lineage } => {
            let d = load(&file)?;
            let text = fs::read_to_string(&lineage).map_err(|e| CmdError::Io(format!("{}: {e}", lineage.display())))?;
            let l = parse_lineage(&text, Some(&d))?;
            let rep = verify_lineage(&l, cfg)?;
            let fails: Vec<Value> = rep
                .failures()
                .map(|c| json!({"stage": c.stage, "check": c.what, "detail": c.detail}))
                .collect();
            let mut t = format!("{} checks, {} failed\n", rep.checks.len(), fails.len());
            for c in rep.failures() {
                t.push_str(&format!("stage {}: {}: {}\n", c.stage, c.what, c.detail));
            }
            emit(out, js, json!({"checks": rep.checks.len(), "failures": fails}), t)?;
            if rep.passed() {
                Ok(())
            } else {
                Err(CmdError::Failed(Failed("verification failed".into())))
            }
        }
        Cmd::Twist { file, s1, s0, bullet, out: path } => {
            let d = load(&file)?;
            let s1 = d.parse_subset(&s1)?;
            let s0 = d.parse_subset(&s0)?;
            let s2 = d.all().difference(s1).union(s0);
            let sep = Separation::new(&d, s1, s2)?;
            let b = if bullet.trim().is_empty() { Subset::EMPTY } else { d.parse_subset(&bullet)? };
            let l = apply_twist(&d, &TwistData { separation: sep, kind: TwistKind::Elementary { bullet: b } })?;
            write_out(&path, &l)?;
            let child = l.child().serialize();
            emit(out, js, json!({"child": child}), child.clone())
        }
        Cmd::Decompose { file, dot } => {
            let d = load(&file)?;
            let mut text = String::new();
            let mut arr = Vec::new();
            for c in c_minimal_classes(&d) {
                let g = build_lambda(&d, c.representative)?;
                let tree = realize_tree(&g);
                text.push_str(&format!("class of {}\n", d.format_subset(c.representative)));
                if dot {
                    text.push_str(&g.to_dot(&d));
                } else {
                    for v in &g.v_nodes {
                        text.push_str(&format!("  vertex {}\n", d.format_subset(*v)));
                    }
                    for e in &g.e_nodes {
                        text.push_str(&format!("  edge {}\n", d.format_subset(*e)));
                    }
                }
                arr.push(json!({
                    "representative": names(&d, c.representative),
                    "vertices": g.v_nodes.iter().map(|v| names(&d, *v)).collect::<Vec<_>>(),
                    "edges": g.e_nodes.iter().map(|e| names(&d, *e)).collect::<Vec<_>>(),
                    "tree": tree.edges.iter().map(|(u, v, _)| [u, v]).collect::<Vec<_>>(),
                }));
            }
            if arr.is_empty() {
                text.push_str("no separating subset\n");
            }
            emit(out, js, json!({"classes": arr}), text)
        }
        Cmd::Census { file, compare, maxrank } => {
            let prep = |d: CoxeterDiagram| -> Result<CoxeterDiagram> {
                if maxrank {
                    Ok(max_rank(&d, BaseOrder::Lexicographic)?.lineage.child().clone())
                } else {
                    Ok(d)
                }
            };
            let c = simplex_census(&prep(load(&file)?)?)?;
            match compare {
                None => {
                    if js {
                        writeln!(out, "{}", c.to_json())?;
                        return Ok(());
                    }
                    let text: String = c.entries.iter().map(|e| format!("{:>6}  {}\n", e.count, e.diagram)).collect();
                    emit(out, js, Value::Null, text)
                }
                Some(other) => {
                    let c2 = simplex_census(&prep(load(&other)?)?)?;
                    let diff = compare_census(&c, &c2);
                    let mut text = if diff.is_empty() { "censuses agree\n".to_string() } else { String::new() };
                    for e in &diff {
                        text.push_str(&format!("{}: {} vs {}\n", e.diagram, e.left, e.right));
                    }
                    emit(out, js, json!({"equal": diff.is_empty(), "diff": diff}), text)?;
                    if diff.is_empty() {
                        Ok(())
                    } else {
                        Err(CmdError::Failed(Failed("censuses differ".into())))
                    }
                }
            }
        }
        Cmd::Dot { file, view } => {
            let d = load(&file)?;
            let v = match view {
                ViewArg::P => View::P,
                ViewArg::C => View::C,
            };
            let dot = d.emit_dot(v);
            emit(out, js, json!({"dot": dot}), dot.clone())
        }
    }
}

/// Runs the command line on `args` (including the program name).
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(CmdError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CmdError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CmdError::Failed(Failed(m))) => {
            let _ = writeln!(err, "{m}");
            1
        }
    }
}

pub fn cli_main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(&args, &mut std::io::stdout(), &mut std::io::stderr())
}
