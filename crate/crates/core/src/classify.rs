//! Recognition of finite irreducible types.
//!
//! Recognition is a pattern match on the induced C-diagram: a finite
//! irreducible diagram is a chain or a tree with one branch vertex, with
//! labels restricted per family. Naming follows the convention
//! `A_n, B_n, C_n, D_2(k), E_6, E_7, E_8, F_4, G_3, G_4`, where `C_n` is the
//! hyperoctahedral group and `B_n` its index-two Y-shaped subgroup.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::diagram::{CoxeterDiagram, Subset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D2,
    E6,
    E7,
    E8,
    F4,
    G3,
    G4,
}

/// A recognised finite irreducible type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeTag {
    pub family: Family,
    /// Rank for A, B, C and the exceptionals; the edge label for D2.
    pub parameter: u32,
    pub order: BigUint,
    pub center_order: u8,
}

impl TypeTag {
    pub fn new(family: Family, parameter: u32) -> TypeTag {
        let n = parameter;
        let fact = |k: u32| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
        let pow2 = |k: u32| BigUint::one() << k;
        let (order, center) = match family {
            Family::A => (fact(n + 1), if n == 1 { 2 } else { 1 }),
            Family::B => (pow2(n - 1) * fact(n), if n.is_multiple_of(2) { 2 } else { 1 }),
            Family::C => (pow2(n) * fact(n), 2),
            Family::D2 => (BigUint::from(2 * n), if n.is_multiple_of(2) { 2 } else { 1 }),
            Family::E6 => (BigUint::from(51_840u32), 1),
            Family::E7 => (BigUint::from(2_903_040u32), 2),
            Family::E8 => (BigUint::from(696_729_600u32), 2),
            Family::F4 => (BigUint::from(1_152u32), 2),
            Family::G3 => (BigUint::from(120u32), 2),
            Family::G4 => (BigUint::from(14_400u32), 2),
        };
        TypeTag { family, parameter, order, center_order: center }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A | Family::B | Family::C => self.parameter as usize,
            Family::D2 => 2,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 => 4,
            Family::G3 => 3,
            Family::G4 => 4,
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.parameter),
            Family::B => write!(f, "B{}", self.parameter),
            Family::C => write!(f, "C{}", self.parameter),
            Family::D2 => write!(f, "D2({})", self.parameter),
            Family::E6 => f.write_str("E6"),
            Family::E7 => f.write_str("E7"),
            Family::E8 => f.write_str("E8"),
            Family::F4 => f.write_str("F4"),
            Family::G3 => f.write_str("G3"),
            Family::G4 => f.write_str("G4"),
        }
    }
}

/// Shape data for a recognised component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layout {
    /// Generators along the chain. For C, the label-4 end is last; for G3 and
    /// G4 the label-5 end is last.
    Chain(Vec<usize>),
    /// Branch vertex and its three arms (each listed from the centre outward),
    /// shortest arm first.
    Y { center: usize, arms: [Vec<usize>; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognized {
    pub tag: TypeTag,
    pub layout: Layout,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Finite(Recognized),
    Infinite,
}

/// Classifies an irreducible subset.
pub fn classify_irreducible(d: &CoxeterDiagram, a: Subset) -> Result<Classification> {
    if !d.is_irreducible(a) {
        return Err(Error::NotIrreducible);
    }
    Ok(recognize(d, a).map_or(Classification::Infinite, Classification::Finite))
}

fn recognize(d: &CoxeterDiagram, a: Subset) -> Option<Recognized> {
    let n = a.len();
    if n == 1 {
        let v = a.first().unwrap();
        return Some(Recognized { tag: TypeTag::new(Family::A, 1), layout: Layout::Chain(vec![v]) });
    }
    let deg = |v: usize| d.c_neighbors(v).intersection(a).len();
    let mut edges = 0;
    for v in a.iter() {
        for u in d.c_neighbors(v).intersection(a).iter() {
            if u > v {
                if !d.m(u, v).is_finite() {
                    return None;
                }
                edges += 1;
            }
        }
    }
    if edges != n - 1 {
        return None;
    }
    let branch: Vec<usize> = a.iter().filter(|&v| deg(v) >= 3).collect();
    let lab = |u: usize, v: usize| d.m(u, v).value().unwrap();
    if branch.is_empty() {
        let start = a.iter().find(|&v| deg(v) == 1).unwrap();
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) =
            d.c_neighbors(cur).intersection(a).iter().find(|&u| u != prev)
        {
            path.push(next);
            prev = cur;
            cur = next;
        }
        let labels: Vec<u32> = path.windows(2).map(|w| lab(w[0], w[1])).collect();
        return recognize_chain(path, labels);
    }
    if branch.len() > 1 {
        return None;
    }
    let center = branch[0];
    if deg(center) != 3 {
        return None;
    }
    let mut arms: Vec<Vec<usize>> = Vec::new();
    for first in d.c_neighbors(center).intersection(a).iter() {
        let mut arm = vec![first];
        let (mut prev, mut cur) = (center, first);
        while let Some(next) =
            d.c_neighbors(cur).intersection(a).iter().find(|&u| u != prev)
        {
            arm.push(next);
            prev = cur;
            cur = next;
        }
        arms.push(arm);
    }
    for v in a.iter() {
        for u in d.c_neighbors(v).intersection(a).iter() {
            if lab(u, v) != 3 {
                return None;
            }
        }
    }
    arms.sort_by_key(|arm| (arm.len(), arm[arm.len() - 1]));
    let lens = (arms[0].len(), arms[1].len(), arms[2].len());
    let tag = match lens {
        (1, 1, r) => TypeTag::new(Family::B, (r + 3) as u32),
        (1, 2, 2) => TypeTag::new(Family::E6, 6),
        (1, 2, 3) => TypeTag::new(Family::E7, 7),
        (1, 2, 4) => TypeTag::new(Family::E8, 8),
        _ => return None,
    };
    let [x, y, z]: [Vec<usize>; 3] = arms.try_into().unwrap();
    Some(Recognized { tag, layout: Layout::Y { center, arms: [x, y, z] } })
}

fn recognize_chain(mut path: Vec<usize>, labels: Vec<u32>) -> Option<Recognized> {
    let n = path.len() as u32;
    if n == 2 {
        if path[0] > path[1] {
            path.reverse();
        }
        let tag = match labels[0] {
            3 => TypeTag::new(Family::A, 2),
            4 => TypeTag::new(Family::C, 2),
            k => TypeTag::new(Family::D2, k),
        };
        return Some(Recognized { tag, layout: Layout::Chain(path) });
    }
    let count = |x: u32| labels.iter().filter(|&&l| l == x).count();
    let (threes, fours, fives) = (count(3), count(4), count(5));
    let k = labels.len();
    let (first, last) = (labels[0], labels[k - 1]);
    // Orientation: the special end goes last; symmetric chains start at the lower index.
    let (tag, reverse) = if threes == k {
        (TypeTag::new(Family::A, n), path[0] > path[k])
    } else if threes == k - 1 && fours == 1 && (first == 4 || last == 4) {
        (TypeTag::new(Family::C, n), first == 4)
    } else if labels == [3, 4, 3] {
        (TypeTag::new(Family::F4, 4), path[0] > path[3])
    } else if n <= 4 && threes == k - 1 && fives == 1 && (first == 5 || last == 5) {
        let family = if n == 3 { Family::G3 } else { Family::G4 };
        (TypeTag::new(family, n), first == 5)
    } else {
        return None;
    };
    if reverse {
        path.reverse();
    }
    Some(Recognized { tag, layout: Layout::Chain(path) })
}

/// Recognised components of `a`, or `None` if some component is infinite.
pub fn components(d: &CoxeterDiagram, a: Subset) -> Option<Vec<(Subset, Recognized)>> {
    d.c_components(a)
        .into_iter()
        .map(|c| recognize(d, c).map(|r| (c, r)))
        .collect()
}

/// Whether `<a>` is finite.
pub fn is_spherical(d: &CoxeterDiagram, a: Subset) -> bool {
    d.c_components(a).into_iter().all(|c| recognize(d, c).is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

/// Order of `<a>` as the product of its component orders.
pub fn order_of(d: &CoxeterDiagram, a: Subset) -> Order {
    match components(d, a) {
        Some(cs) => Order::Finite(cs.iter().fold(BigUint::one(), |acc, (_, r)| acc * &r.tag.order)),
        None => Order::Infinite,
    }
}

/// Component types, e.g. `A1 x C3`, or `None` when infinite.
pub fn type_string(d: &CoxeterDiagram, a: Subset) -> Option<String> {
    let cs = components(d, a)?;
    if cs.is_empty() {
        return Some("1".into());
    }
    let mut names: Vec<(TypeTag, String)> = cs.iter().map(|(_, r)| (r.tag.clone(), r.tag.to_string())).collect();
    names.sort_by_key(|x| (x.0.family, x.0.parameter));
    Some(names.into_iter().map(|(_, s)| s).collect::<Vec<_>>().join(" x "))
}

/// Conjugation by the longest element of `<A>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongestElementData {
    pub subset: Subset,
    /// Indexed by diagram generator; identity off `subset`.
    pub automorphism: Vec<usize>,
}

impl LongestElementData {
    pub fn apply(&self, s: usize) -> usize {
        self.automorphism[s]
    }

    /// A reduced word for the longest element, built on demand.
    pub fn word(&self, d: &CoxeterDiagram) -> Result<crate::oracle::Word> {
        crate::oracle::longest_word(d, self.subset)
    }
}

/// The permutation `s -> w_A s w_A` on a spherical subset.
pub fn longest_auto(d: &CoxeterDiagram, a: Subset) -> Result<LongestElementData> {
    let cs = components(d, a).ok_or(Error::NotSpherical)?;
    let mut perm: Vec<usize> = (0..d.rank()).collect();
    for (_, r) in cs {
        let swap = |perm: &mut Vec<usize>, x: usize, y: usize| {
            perm[x] = y;
            perm[y] = x;
        };
        match (&r.tag.family, &r.layout) {
            (Family::A, Layout::Chain(p)) => {
                let k = p.len();
                for i in 0..k {
                    perm[p[i]] = p[k - 1 - i];
                }
            }
            (Family::D2, Layout::Chain(p)) if r.tag.parameter % 2 == 1 => swap(&mut perm, p[0], p[1]),
            (Family::B, Layout::Y { arms, .. }) if r.tag.parameter % 2 == 1 => {
                swap(&mut perm, arms[0][0], arms[1][0])
            }
            (Family::E6, Layout::Y { arms, .. }) => {
                swap(&mut perm, arms[1][0], arms[2][0]);
                swap(&mut perm, arms[1][1], arms[2][1]);
            }
            _ => {}
        }
    }
    Ok(LongestElementData { subset: a, automorphism: perm })
}

/// The two split ends of a B-family (Y-shaped) base, or the chain ends of an
/// A3 viewed as B3.
///
/// For B4 every pair of leaves qualifies; `choice` picks a pair by leaf
/// indices, defaulting to the two lowest-index leaves.
pub fn split_ends(d: &CoxeterDiagram, b: Subset, choice: Option<(usize, usize)>) -> Result<(usize, usize)> {
    let r = match classify_irreducible(d, b)? {
        Classification::Finite(r) => r,
        Classification::Infinite => return Err(Error::WrongFamily("B")),
    };
    match (r.tag.family, &r.layout) {
        (Family::A, Layout::Chain(p)) if p.len() == 3 => Ok((p[0].min(p[2]), p[0].max(p[2]))),
        (Family::B, Layout::Y { arms, .. }) => {
            if r.tag.parameter == 4 {
                let mut leaves: Vec<usize> = arms.iter().map(|a| a[0]).collect();
                leaves.sort_unstable();
                if let Some((x, y)) = choice {
                    if x != y && leaves.contains(&x) && leaves.contains(&y) {
                        return Ok((x.min(y), x.max(y)));
                    }
                    return Err(Error::Invalid("split-end choice must name two leaves".into()));
                }
                Ok((leaves[0], leaves[1]))
            } else {
                let (x, y) = (arms[0][0], arms[1][0]);
                Ok((x.min(y), x.max(y)))
            }
        }
        _ => Err(Error::WrongFamily("B")),
    }
}

/// Labels of a chain, in layout order; helper for callers that need the
/// `c_1 .. c_n` reading of a C-type base.
pub fn chain_of(r: &Recognized) -> Option<&[usize]> {
    match &r.layout {
        Layout::Chain(p) => Some(p),
        Layout::Y { .. } => None,
    }
}
