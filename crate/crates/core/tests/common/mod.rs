//! Test-side oracles, independent of the library's own implementations.
#![allow(dead_code)]

use std::collections::BTreeMap;

use uindep::diagram::{catalog_names, Diagonal};
use uindep::indep::{IndependenceSystem, SweepOptions, UnknottingMap};
use uindep::{kauffman_bracket, load_catalog, CrossingSet, PlanarDiagram};

/// Exponent of `A` to coefficient.
pub type Poly = BTreeMap<i32, i64>;

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add_shifted(acc: &mut Poly, p: &Poly, shift: i32) {
    for (e, c) in p {
        *acc.entry(e + shift).or_insert(0) += c;
    }
    acc.retain(|_, c| *c != 0);
}

fn delta_pow(k: usize) -> Poly {
    let delta: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    (0..k).fold([(0, 1)].into_iter().collect(), |acc, _| mul(&acc, &delta))
}

/// Kauffman bracket by recursive skein expansion,
/// `<X> = A <X_A> + A^-1 <X_B>`, removing one crossing at a time. Arcs are
/// tracked by renaming edge labels when a smoothing joins two of them; a
/// smoothing that joins a label to itself closes a loop.
pub fn skein_bracket(d: &PlanarDiagram) -> Poly {
    let xs: Vec<([u32; 4], Diagonal)> = d.crossings().iter().map(|c| (c.edges, c.over)).collect();
    if xs.is_empty() {
        return [(0, 1)].into_iter().collect();
    }
    expand(xs, 0)
}

fn expand(mut xs: Vec<([u32; 4], Diagonal)>, loops: usize) -> Poly {
    let Some((edges, over)) = xs.pop() else {
        return delta_pow(loops - 1);
    };
    // The A-smoothing joins each under slot to the next slot counterclockwise.
    let (a_pairs, b_pairs) = match over {
        Diagonal::Odd => ([(0, 1), (2, 3)], [(1, 2), (3, 0)]),
        Diagonal::Even => ([(1, 2), (3, 0)], [(0, 1), (2, 3)]),
    };
    let mut out = Poly::new();
    for (pairs, shift) in [(a_pairs, 1), (b_pairs, -1)] {
        let mut rest = xs.clone();
        let mut e = edges;
        let mut closed = 0;
        for (p, q) in pairs {
            let (x, y) = (e[p], e[q]);
            if x == y {
                closed += 1;
                continue;
            }
            for slot in rest.iter_mut().flat_map(|c| c.0.iter_mut()).chain(e.iter_mut()) {
                if *slot == y {
                    *slot = x;
                }
            }
        }
        add_shifted(&mut out, &expand(rest, loops + closed), shift);
    }
    out
}

pub fn library_bracket(d: &PlanarDiagram) -> Poly {
    kauffman_bracket(d).unwrap().terms().collect()
}

/// Parses KnotInfo's polynomial syntax, e.g. `t^(-2)-t^(-1)+2-2*t+t^2`.
pub fn parse_knotinfo(s: &str) -> Poly {
    let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let mut out = Poly::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let mut sign = 1;
        if b[i] == b'+' || b[i] == b'-' {
            sign = if b[i] == b'-' { -1 } else { 1 };
            i += 1;
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start { s[start..i].parse().unwrap() } else { 1 };
        let mut exp = 0;
        if i < b.len() && b[i] == b't' {
            i += 1;
            exp = 1;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let paren = b[i] == b'(';
                if paren {
                    i += 1;
                }
                let st = i;
                if b[i] == b'-' {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                exp = s[st..i].parse().unwrap();
                if paren {
                    assert_eq!(b[i], b')');
                    i += 1;
                }
            }
        }
        *out.entry(exp).or_insert(0) += sign * coeff;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn knotinfo_jones() -> Vec<(String, Poly)> {
    include_str!("../data/knotinfo_jones.txt")
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, poly) = l.split_once(' ').unwrap();
            (name.to_string(), parse_knotinfo(poly))
        })
        .collect()
}

/// Catalog knots with at most `max` crossings.
pub fn catalog_upto(max: usize) -> Vec<(String, PlanarDiagram)> {
    catalog_names()
        .into_iter()
        .map(|n| (n.to_string(), load_catalog(n).unwrap()))
        .filter(|(_, d)| d.crossing_count() <= max)
        .collect()
}

pub fn system_of(d: &PlanarDiagram) -> (UnknottingMap, IndependenceSystem) {
    let m = UnknottingMap::compute(d, &SweepOptions::default()).unwrap();
    let s = IndependenceSystem::from_map(&m);
    (m, s)
}

/// Minimal unknotting sets straight from the definition, by scanning all
/// pairs of subsets.
pub fn brute_minimal(m: &UnknottingMap) -> Vec<CrossingSet> {
    let all: Vec<CrossingSet> = CrossingSet::full(m.ground_size()).subsets().collect();
    let mut out: Vec<CrossingSet> = all
        .iter()
        .copied()
        .filter(|&s| m.is_unknotting(s) && !all.iter().any(|&t| t.is_proper_subset(s) && m.is_unknotting(t)))
        .collect();
    out.sort();
    out
}

/// Every property of the independence system that holds for any diagram;
/// returns a description of the first violation.
pub fn check_system_properties(name: &str, d: &PlanarDiagram) -> Result<(), String> {
    let (m, sys) = system_of(d);
    let ground = CrossingSet::full(d.crossing_count());
    let minimal = sys.minimal_unknotting_sets();
    if minimal != brute_minimal(&m).as_slice() {
        return Err(format!("{name}: minimal unknotting sets differ from brute force"));
    }
    for (i, &a) in minimal.iter().enumerate() {
        for &b in &minimal[i + 1..] {
            if a.is_subset(b) || b.is_subset(a) {
                return Err(format!("{name}: minimal sets {a} and {b} are nested"));
            }
        }
    }
    for w in ground.subsets() {
        let literal = m.is_u_independent_literal(w);
        if literal != sys.is_u_independent(w) || literal != sys.is_independent(w) {
            return Err(format!("{name}: definition and antichain rule disagree on {w}"));
        }
        if sys.is_independent(w) && w.iter().any(|i| !sys.is_independent(w.remove(i))) {
            return Err(format!("{name}: {w} independent but a subset is not"));
        }
    }
    let maximal = sys.maximal_independent_sets();
    if let Some(s) = minimal.iter().find(|s| !s.is_empty() && !maximal.contains(s)) {
        return Err(format!("{name}: minimal unknotting set {s} is not maximal independent"));
    }
    Ok(())
}
