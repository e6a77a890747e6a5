use std::collections::BTreeMap;

use super::candidate::{HomCandidate, LoadedCandidate, ScalarDomain};
use super::word::GenSymbol;
use crate::error::{Error, Result};
use crate::matrices::{IntMatrix, QuadMatrix};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_domain(s: &str, line: usize) -> Result<ScalarDomain> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "Z" {
        return Ok(ScalarDomain::Integer);
    }
    let radicand = s
        .strip_prefix("Q(sqrt(")
        .and_then(|r| r.strip_suffix("))"))
        .and_then(|r| r.parse::<i64>().ok())
        .ok_or_else(|| parse_err(line, format!("unknown domain {s:?}")))?;
    Ok(ScalarDomain::Quadratic(radicand))
}

/// Reads a candidate from its text form:
///
/// ```text
/// # comment
/// d = 3
/// domain = Q(sqrt(-7))
/// E 1 2 = 1,0,0;0,-1,0;0,0,-1
/// ```
///
/// Matrices use the `;`/`,` row format. Every `E i j` must appear once.
pub fn parse_candidate(text: &str) -> Result<LoadedCandidate> {
    let mut d: Option<usize> = None;
    let mut dom: Option<ScalarDomain> = None;
    let mut raw: BTreeMap<GenSymbol, (usize, String)> = BTreeMap::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let n = idx + 1;
        last_line = n;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| parse_err(n, "expected `key = value`"))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "d" => {
                let v = value.parse::<usize>().map_err(|_| parse_err(n, format!("bad dimension {value:?}")))?;
                if d.replace(v).is_some() {
                    return Err(parse_err(n, "duplicate `d`"));
                }
            }
            "domain" => {
                if dom.replace(parse_domain(value, n)?).is_some() {
                    return Err(parse_err(n, "duplicate `domain`"));
                }
            }
            _ => {
                let parts: Vec<&str> = key.split_whitespace().collect();
                let [e, i, j] = parts[..] else {
                    return Err(parse_err(n, format!("unknown key {key:?}")));
                };
                let (Ok(i), Ok(j)) = (i.parse::<usize>(), j.parse::<usize>()) else {
                    return Err(parse_err(n, format!("bad generator {key:?}")));
                };
                if e != "E" {
                    return Err(parse_err(n, format!("unknown key {key:?}")));
                }
                let dim = d.ok_or_else(|| parse_err(n, "`d` must precede the images"))?;
                let g = GenSymbol::new(i, j, dim).map_err(|e| parse_err(n, e.to_string()))?;
                if raw.insert(g, (n, value.to_string())).is_some() {
                    return Err(parse_err(n, format!("duplicate image for {g}")));
                }
            }
        }
    }
    let d = d.ok_or_else(|| parse_err(last_line, "missing `d`"))?;
    let dom = dom.ok_or_else(|| parse_err(last_line, "missing `domain`"))?;
    let complete = |keys: Vec<GenSymbol>| match GenSymbol::all(d).into_iter().find(|g| !keys.contains(g)) {
        Some(g) => Err(parse_err(last_line, format!("missing image for {g}"))),
        None => Ok(()),
    };
    let at = |n: usize| move |e: Error| parse_err(n, e.to_string());
    match dom {
        ScalarDomain::Integer => {
            let images = raw
                .into_iter()
                .map(|(g, (n, s))| IntMatrix::parse(&s).map(|m| (g, m.to_rational())).map_err(at(n)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            complete(images.keys().copied().collect())?;
            HomCandidate::new(d, dom, images).map(LoadedCandidate::Integer).map_err(at(last_line))
        }
        ScalarDomain::Quadratic(r) => {
            let images = raw
                .into_iter()
                .map(|(g, (n, s))| QuadMatrix::parse(&s, r).map(|m| (g, m)).map_err(at(n)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            complete(images.keys().copied().collect())?;
            HomCandidate::new(d, dom, images).map(LoadedCandidate::Quadratic).map_err(at(last_line))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steinberg::build_counterexample_rep;

    #[test]
    fn round_trip_text() {
        let h = HomCandidate::identity_candidate(3).unwrap();
        let parsed = parse_candidate(&h.to_string()).unwrap();
        assert_eq!(parsed, LoadedCandidate::Integer(h));
        let q = build_counterexample_rep();
        assert_eq!(parse_candidate(&q.to_string()).unwrap(), LoadedCandidate::Quadratic(q));
    }

    #[test]
    fn errors_carry_lines() {
        let text = "d = 3\ndomain = Z\nE 1 2 = 1,1;0,1\n";
        assert!(matches!(parse_candidate(text), Err(Error::Parse { .. })));
        let text = "d = 3\n# nothing\nfoo\n";
        assert_eq!(parse_candidate(text).unwrap_err(), parse_err(3, "expected `key = value`"));
        let text = "d = 3\ndomain = Q(sqrt(x))\n";
        assert!(matches!(parse_candidate(text), Err(Error::Parse { line: 2, .. })));
        let text = "d = 2\ndomain = Z\nE 1 2 = 1,1;0,1\nE 2 1 = 1,0;1,1\nE 1 3 = 1,0;0,1\n";
        assert!(matches!(parse_candidate(text), Err(Error::Parse { line: 5, .. })));
    }
}
