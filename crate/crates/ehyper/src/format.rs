//! Text formats for instances and witnesses.
//!
//! * Hypergraph: `k n m`, then `m` lines of `k` sorted ids.
//! * Colouring: `k n l`, then one line `v1 .. vk c` per `k`-set, in
//!   lexicographic order.
//! * Step-up colouring: `stepup k n`, then the base colouring.
//! * Bipartite graph: `bipartite a b m`; `A = 0..a`, `B = a..a+b`, then `m`
//!   lines `x y`.
//! * Tripartite system: `tripartite n1 n2 n3 [complete]`; parts are
//!   consecutive id ranges, then link edges as `12 x y`, `23 y z` or
//!   `31 z x` lines.
//!
//! Lines starting with `#` and blank lines are ignored wherever they
//! appear. Parse errors carry the 1-based line number.

use std::fmt::Write as _;

use ehyper_core::combin::binom;
use ehyper_core::hypergraph::TupleColouring;
use ehyper_core::stepup::StepUpColouring;
use ehyper_core::{BipartiteGraph, EdgeColouring, TripartiteSystem, UniformHypergraph};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

type Parsed<T> = Result<T, ParseError>;

fn err<T>(line: usize, msg: impl Into<String>) -> Parsed<T> {
    Err(ParseError { line, msg: msg.into() })
}

/// Non-comment lines with their 1-based numbers.
struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_line(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, l) in self.inner.by_ref() {
            let l = l.trim();
            self.last = i + 1;
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            return Some((i + 1, l.split_whitespace().collect()));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Parsed<(usize, Vec<&'a str>)> {
        match self.next_line() {
            Some(x) => Ok(x),
            None => err(self.last + 1, format!("unexpected end of input, expected {what}")),
        }
    }

    fn finish(&mut self) -> Parsed<()> {
        match self.next_line() {
            Some((n, _)) => err(n, "trailing content"),
            None => Ok(()),
        }
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Parsed<T> {
    tok.parse().or_else(|_| err(line, format!("{what}: cannot parse {tok:?}")))
}

fn header<const N: usize>(line: usize, toks: &[&str], names: [&str; N]) -> Parsed<[u64; N]> {
    if toks.len() != N {
        return err(line, format!("header needs {N} numbers ({})", names.join(" ")));
    }
    let mut out = [0u64; N];
    for (slot, (tok, name)) in out.iter_mut().zip(toks.iter().zip(names)) {
        *slot = num(line, tok, name)?;
    }
    Ok(out)
}

fn core_err<T>(line: usize, e: ehyper_core::Error) -> Parsed<T> {
    err(line, e.to_string())
}

pub fn parse_hypergraph(text: &str) -> Parsed<UniformHypergraph> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.expect("header `k n m`")?;
    let [k, n, m] = header(hl, &toks, ["k", "n", "m"])?;
    let k = k as usize;
    let n = u32::try_from(n).or_else(|_| err(hl, "n too large"))?;
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (ln, toks) = lines.expect("an edge line")?;
        if toks.len() != k {
            return err(ln, format!("edge needs {k} ids, found {}", toks.len()));
        }
        let e: Vec<u32> = toks.iter().map(|t| num(ln, t, "vertex")).collect::<Parsed<_>>()?;
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return err(ln, "edge ids must be strictly increasing");
        }
        if let Some(&v) = e.iter().find(|&&v| v >= n) {
            return err(ln, format!("vertex {v} out of range (n = {n})"));
        }
        edges.push(e);
    }
    lines.finish()?;
    UniformHypergraph::new(k, n, edges).or_else(|e| core_err(hl, e))
}

pub fn write_hypergraph(h: &UniformHypergraph, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        writeln!(s, "# {c}").unwrap();
    }
    writeln!(s, "{} {} {}", h.uniformity(), h.vertex_count(), h.edge_count()).unwrap();
    for e in h.edges() {
        writeln!(s, "{}", join(e)).unwrap();
    }
    s
}

fn join(ids: &[u32]) -> String {
    ids.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

/// Parses the colouring body after its header has been read.
fn colouring_body(lines: &mut Lines<'_>, hl: usize, toks: &[&str]) -> Parsed<EdgeColouring> {
    let [k, n, l] = header(hl, toks, ["k", "n", "l"])?;
    let k = k as usize;
    let n = u32::try_from(n).or_else(|_| err(hl, "n too large"))?;
    let l = u8::try_from(l).or_else(|_| err(hl, "too many colours"))?;
    if k == 0 || k as u64 > n as u64 || l < 1 {
        return err(hl, "need 1 <= k <= n and at least one colour");
    }
    let total = binom(n as u64, k as u64);
    let mut table = Vec::with_capacity(total as usize);
    let mut it = ehyper_core::combin::Combinations::new(n, k);
    while let Some(expected) = it.next_ref() {
        let (ln, toks) = lines.expect("a colour line")?;
        if toks.len() != k + 1 {
            return err(ln, format!("colour line needs {} numbers", k + 1));
        }
        let t: Vec<u32> = toks[..k].iter().map(|x| num(ln, x, "vertex")).collect::<Parsed<_>>()?;
        if t != expected {
            return err(ln, format!("expected tuple {} (lexicographic order)", join(expected)));
        }
        let c: u8 = num(ln, toks[k], "colour")?;
        if c >= l {
            return err(ln, format!("colour {c} out of range (l = {l})"));
        }
        table.push(c);
    }
    EdgeColouring::from_lex_table(k, n, l, &table).or_else(|e| core_err(hl, e))
}

pub fn parse_colouring(text: &str) -> Parsed<EdgeColouring> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.expect("header `k n l`")?;
    let c = colouring_body(&mut lines, hl, &toks)?;
    lines.finish()?;
    Ok(c)
}

pub fn write_colouring(c: &EdgeColouring, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(cm) = comment {
        writeln!(s, "# {cm}").unwrap();
    }
    writeln!(s, "{} {} {}", c.uniformity(), c.vertex_count(), c.colour_count()).unwrap();
    for (t, col) in c.lex_colours() {
        writeln!(s, "{} {col}", join(&t)).unwrap();
    }
    s
}

/// A 3-uniform instance given either as a hypergraph (colour 0 = edge) or
/// as a colouring; the first data line tells them apart.
pub fn parse_instance(text: &str) -> Parsed<EdgeColouring> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.expect("a header")?;
    let k: usize = match toks.first() {
        Some(t) => num(hl, t, "k")?,
        None => return err(hl, "empty header"),
    };
    let mut probe = Lines::new(text);
    probe.next_line();
    let is_colouring = probe.next_line().is_some_and(|(_, t)| t.len() == k + 1);
    if is_colouring {
        parse_colouring(text)
    } else {
        parse_hypergraph(text).map(|h| EdgeColouring::from_hypergraph(&h))
    }
}

pub fn parse_stepup(text: &str) -> Parsed<StepUpColouring> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.expect("header `stepup k n`")?;
    if toks.first() != Some(&"stepup") {
        return err(hl, "expected `stepup k n`");
    }
    let [k, n] = header(hl, &toks[1..], ["k", "n"])?;
    let (bl, btoks) = lines.expect("base colouring header")?;
    let base = colouring_body(&mut lines, bl, &btoks)?;
    lines.finish()?;
    if base.uniformity() as u64 != k || base.vertex_count() as u64 != n {
        return err(hl, "header disagrees with the base colouring");
    }
    StepUpColouring::new(base).or_else(|e| core_err(hl, e))
}

pub fn write_stepup(s: &StepUpColouring) -> String {
    let base = s.base();
    format!(
        "stepup {} {}\n{}",
        base.uniformity(),
        base.vertex_count(),
        write_colouring(base, None)
    )
}

pub fn parse_bipartite(text: &str) -> Parsed<BipartiteGraph> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.expect("header `bipartite a b m`")?;
    if toks.first() != Some(&"bipartite") {
        return err(hl, "expected `bipartite a b m`");
    }
    let [a, b, m] = header(hl, &toks[1..], ["a", "b", "m"])?;
    let (a, b) = (a as u32, b as u32);
    let mut edges = Vec::new();
    for _ in 0..m {
        let (ln, toks) = lines.expect("an edge line")?;
        let [x, y] = header(ln, &toks, ["x", "y"])?;
        if x >= a as u64 || y < a as u64 || y >= (a + b) as u64 {
            return err(ln, format!("edge {x} {y} does not join A = 0..{a} to B = {a}..{}", a + b));
        }
        edges.push((x as u32, y as u32));
    }
    lines.finish()?;
    BipartiteGraph::with_ranges(a, b, edges).or_else(|e| core_err(hl, e))
}

pub fn write_bipartite(g: &BipartiteGraph) -> String {
    let mut s = format!("bipartite {} {} {}\n", g.a().len(), g.b().len(), g.edge_count());
    for (x, y) in g.edges() {
        writeln!(s, "{x} {y}").unwrap();
    }
    s
}

pub fn parse_tripartite(text: &str) -> Parsed<TripartiteSystem> {
    let mut lines = Lines::new(text);
    let (hl, toks) = lines.expect("header `tripartite n1 n2 n3`")?;
    if toks.first() != Some(&"tripartite") {
        return err(hl, "expected `tripartite n1 n2 n3 [complete]`");
    }
    let complete = toks.last() == Some(&"complete");
    let nums = &toks[1..toks.len() - usize::from(complete)];
    let [n1, n2, n3] = header(hl, nums, ["n1", "n2", "n3"])?;
    let (n1, n2, n3) = (n1 as u32, n2 as u32, n3 as u32);
    let v1: Vec<u32> = (0..n1).collect();
    let v2: Vec<u32> = (n1..n1 + n2).collect();
    let v3: Vec<u32> = (n1 + n2..n1 + n2 + n3).collect();
    if complete {
        lines.finish()?;
        return TripartiteSystem::complete(&v1, &v2, &v3).or_else(|e| core_err(hl, e));
    }
    let mut e: [Vec<(u32, u32)>; 3] = Default::default();
    let ranges = [(&v1, &v2), (&v2, &v3), (&v3, &v1)];
    while let Some((ln, toks)) = lines.next_line() {
        if toks.len() != 3 {
            return err(ln, "link line needs `12|23|31 x y`");
        }
        let which = match toks[0] {
            "12" => 0,
            "23" => 1,
            "31" => 2,
            other => return err(ln, format!("unknown link {other:?}")),
        };
        let x: u32 = num(ln, toks[1], "x")?;
        let y: u32 = num(ln, toks[2], "y")?;
        let (p, q) = ranges[which];
        if p.binary_search(&x).is_err() || q.binary_search(&y).is_err() {
            return err(ln, format!("{x} {y} is not a {} pair", toks[0]));
        }
        e[which].push((x, y));
    }
    let [e12, e23, e31] = e;
    let sys = (|| {
        TripartiteSystem::new(
            BipartiteGraph::new(&v1, &v2, e12)?,
            BipartiteGraph::new(&v2, &v3, e23)?,
            BipartiteGraph::new(&v3, &v1, e31)?,
        )
    })();
    sys.or_else(|e| core_err(hl, e))
}

/// Parts must be the consecutive ranges the format describes.
pub fn write_tripartite(t: &TripartiteSystem) -> String {
    let [p1, p2, p3] = t.parts();
    let mut s = format!("tripartite {} {} {}\n", p1.len(), p2.len(), p3.len());
    for (tag, g) in [("12", t.g12()), ("23", t.g23()), ("31", t.g31())] {
        for (x, y) in g.edges() {
            writeln!(s, "{tag} {x} {y}").unwrap();
        }
    }
    s
}

/// Witness parts, one sorted id list per line.
pub fn write_parts(parts: &[Vec<u32>]) -> String {
    parts.iter().map(|p| format!("{}\n", join(p))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_errors_carry_line_numbers() {
        let e = parse_hypergraph("# c\n3 5 2\n0 1 2\n0 1\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_hypergraph("3 5 1\n2 1 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_hypergraph("3 5 2\n0 1 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_hypergraph("3 5 1\n0 1 9\n").is_err());
    }

    #[test]
    fn instance_detection() {
        let h = parse_instance("3 4 1\n0 1 2\n").unwrap();
        assert_eq!(h.colour(&[0, 1, 2]), 0);
        assert_eq!(h.colour(&[0, 1, 3]), 1);
        let c = parse_instance("3 3 2\n0 1 2 1\n").unwrap();
        assert_eq!(c.colour(&[0, 1, 2]), 1);
        let empty = parse_instance("3 4 0\n").unwrap();
        assert_eq!(empty.colour(&[1, 2, 3]), 1);
    }

    #[test]
    fn tripartite_round_trip() {
        let t = parse_tripartite("tripartite 2 1 2\n12 0 2\n12 1 2\n23 2 3\n31 3 0\n").unwrap();
        assert_eq!(t.triangle_count(), 1);
        assert_eq!(parse_tripartite(&write_tripartite(&t)).unwrap(), t);
        let c = parse_tripartite("tripartite 2 2 2 complete\n").unwrap();
        assert_eq!(c.triangle_count(), 8);
        assert_eq!(parse_tripartite("tripartite 1 1 1\n13 0 1\n").unwrap_err().line, 2);
    }
}
