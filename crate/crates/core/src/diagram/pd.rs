use super::{Crossing, PlanarDiagram};
use crate::error::{Error, Result};

/// Parses a PD code: tokens `X[a,b,c,d]` separated by whitespace (commas
/// between tokens are tolerated). `#` starts a comment running to the end of
/// the line. Each tuple lists edges counterclockwise from the incoming
/// under-strand. Empty input is the 0-crossing unknot.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let mut crossings = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let mut rest = line;
        loop {
            rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
            if rest.is_empty() {
                break;
            }
            let Some(body) = rest.strip_prefix("X[") else {
                return Err(Error::Malformed(first_word(rest)));
            };
            let Some(close) = body.find(']') else {
                return Err(Error::Malformed(first_word(rest)));
            };
            let token = &rest[..close + 3];
            crossings.push(parse_tuple(token, &body[..close])?);
            rest = &body[close + 1..];
            if !(rest.is_empty() || rest.starts_with(|c: char| c.is_whitespace() || c == ',')) {
                return Err(Error::Malformed(format!("{token}{}", first_word(rest))));
            }
        }
    }
    PlanarDiagram::new(crossings)
}

fn parse_tuple(token: &str, inner: &str) -> Result<Crossing> {
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Error::Arity { token: token.to_string(), found: parts.len() });
    }
    let mut edges = [0u32; 4];
    for (slot, p) in edges.iter_mut().zip(&parts) {
        *slot = match p.parse::<u32>() {
            Ok(v) if v > 0 => v,
            _ => return Err(Error::Malformed(token.to_string())),
        };
    }
    Ok(Crossing::from_pd(edges))
}

fn first_word(s: &str) -> String {
    s.split_whitespace().next().unwrap_or("").to_string()
}
