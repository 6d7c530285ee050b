//! Rational knots from integer Conway words.
//!
//! The word `(c1, ..., cj)` is built by twisting endpoints of the trivial
//! tangle: the last twist region is horizontal (twisting the two eastern
//! endpoints), the one before it vertical (twisting the two southern
//! endpoints), and so on alternately. The tangle fraction is
//! `cj + 1/(c(j-1) + ... + 1/c1)`; the knot is its numerator closure.

use std::fmt;
use std::str::FromStr;

use super::{Crossing, Diagonal, PlanarDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConwaySpec(Vec<i32>);

impl ConwaySpec {
    pub fn new(twists: Vec<i32>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::InvalidSpec("empty word".into()));
        }
        if twists.contains(&0) {
            return Err(Error::InvalidSpec("twist counts must be nonzero".into()));
        }
        Ok(Self(twists))
    }

    pub fn twists(&self) -> &[i32] {
        &self.0
    }

    pub fn crossing_count(&self) -> usize {
        self.0.iter().map(|c| c.unsigned_abs() as usize).sum()
    }

    /// Numerator and denominator of the tangle fraction, unreduced in sign.
    pub fn fraction(&self) -> (i64, i64) {
        // p/q = c_j + 1/(p'/q') = (c_j p' + q') / p'
        let (mut p, mut q) = (1i64, 0i64);
        for &c in &self.0 {
            (p, q) = (c as i64 * p + q, p);
        }
        (p, q)
    }
}

impl FromStr for ConwaySpec {
    type Err = Error;

    /// Accepts `5,1,4`, `5 1 4`, or `(5,1,4)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let twists = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::InvalidSpec(format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(twists)
    }
}

impl fmt::Display for ConwaySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

// Crossing ports in counterclockwise order.
const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum End {
    Port(usize, u8),
    // Endpoint of a crossingless arc of the starting tangle.
    Arc(usize, u8),
}

#[derive(Default)]
struct Builder {
    over: Vec<Diagonal>,
    labels: Vec<String>,
    links: Vec<(End, End)>,
}

impl Builder {
    fn crossing(&mut self, over: Diagonal, label: String) -> usize {
        self.over.push(over);
        self.labels.push(label);
        self.over.len() - 1
    }

    fn link(&mut self, a: End, b: End) {
        self.links.push((a, b));
    }
}

/// Boundary endpoints of a tangle: NW, NE, SW, SE.
struct Tangle {
    nw: End,
    ne: End,
    sw: End,
    se: End,
}

/// Builds the reduced diagram of the rational knot `(c1, ..., cj)`. Crossing
/// labels are `t<region>.<k>`, regions numbered from 1 in word order.
pub fn conway_to_pd(spec: &ConwaySpec) -> Result<PlanarDiagram> {
    let twists = spec.twists();
    let j = twists.len();
    let mut b = Builder::default();
    let horizontal = |i: usize| (j - 1 - i).is_multiple_of(2);

    // Start from the trivial tangle the first twist region does not kink.
    let mut t = if horizontal(0) {
        // 0 tangle: NW-NE and SW-SE
        Tangle { nw: End::Arc(0, 0), ne: End::Arc(0, 1), sw: End::Arc(1, 0), se: End::Arc(1, 1) }
    } else {
        // infinity tangle: NW-SW and NE-SE
        Tangle { nw: End::Arc(0, 0), sw: End::Arc(0, 1), ne: End::Arc(1, 0), se: End::Arc(1, 1) }
    };

    for (i, &c) in twists.iter().enumerate() {
        // Positive twists in both directions give an alternating diagram.
        let over = if c > 0 { Diagonal::Odd } else { Diagonal::Even };
        for k in 0..c.unsigned_abs() {
            let label = format!("t{}.{}", i + 1, k + 1);
            if horizontal(i) {
                let x = b.crossing(over, label);
                b.link(End::Port(x, NW), t.ne);
                b.link(End::Port(x, SW), t.se);
                t.ne = End::Port(x, NE);
                t.se = End::Port(x, SE);
            } else {
                let x = b.crossing(over, label);
                b.link(End::Port(x, NW), t.sw);
                b.link(End::Port(x, NE), t.se);
                t.sw = End::Port(x, SW);
                t.se = End::Port(x, SE);
            }
        }
    }
    // Numerator closure.
    b.link(t.nw, t.ne);
    b.link(t.sw, t.se);

    let neighbor = resolve_ports(&b)?;
    let n = b.over.len();

    // Walk the knot from crossing 0, port 0, numbering edges along the way.
    let mut edges = vec![[0u32; 4]; n];
    let start = (0usize, 0u8);
    let mut cur = start;
    let mut label = 1u32;
    let mut steps = 0;
    loop {
        edges[cur.0][cur.1 as usize] = label;
        let exit = (cur.0, (cur.1 + 2) % 4);
        label = label % (2 * n as u32) + 1;
        edges[exit.0][exit.1 as usize] = label;
        cur = neighbor[exit.0][exit.1 as usize];
        steps += 1;
        if cur == start || steps > 2 * n {
            break;
        }
    }
    if steps != 2 * n {
        // Numerator closures of rational tangles have at most two components.
        return Err(Error::MultiComponent(2));
    }

    let crossings = edges
        .into_iter()
        .zip(&b.over)
        .map(|(e, &over)| Crossing { edges: e, over })
        .collect();
    Ok(PlanarDiagram::new(crossings)?.with_labels(b.labels))
}

/// For every crossing port, the port at the other end of its edge.
fn resolve_ports(b: &Builder) -> Result<Vec<[(usize, u8); 4]>> {
    use std::collections::HashMap;
    let mut partner: HashMap<End, End> = HashMap::new();
    for &(x, y) in &b.links {
        partner.insert(x, y);
        partner.insert(y, x);
    }
    let n = b.over.len();
    let mut out = vec![[(0usize, 0u8); 4]; n];
    for (c, row) in out.iter_mut().enumerate() {
        for p in 0..4u8 {
            let mut e = partner[&End::Port(c, p)];
            let mut hops = 0;
            while let End::Arc(a, s) = e {
                e = partner[&End::Arc(a, 1 - s)];
                hops += 1;
                if hops > b.links.len() {
                    return Err(Error::MultiComponent(2));
                }
            }
            let End::Port(c2, p2) = e else { unreachable!() };
            row[p as usize] = (c2, p2);
        }
    }
    Ok(out)
}
