//! Line-oriented text formats. `#` starts a comment; blank lines are
//! ignored.
//!
//! ```text
//! diagram 1      forest 2       1 3/2 5/2
//! S 1            S 1/2
//! M 1            E
//! ```

use std::fmt::Write as _;

use crate::diagram::{Event, StrandDiagram};
use crate::error::{Error, Result};
use crate::forest::{Component, ElementaryForest, WeightedComponent, WeightedForest};
use crate::generalized::GeneralizedStrandDiagram;
use crate::rational::{format_tuple, parse_rational, Rational};
use crate::stein::SignedForest;
use crate::thompson::Letter;

/// A significant line: 1-based line number and its tokens.
struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn count(line: &Line<'_>, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(line.number, format!("expected a {what}, found `{token}`")))
}

fn header(line: &Line<'_>, keyword: &str) -> Result<usize> {
    match line.tokens.as_slice() {
        [k, n] if *k == keyword => count(line, n, "count"),
        [k, n, ..] if *k == keyword => Err(Error::parse(
            line.number,
            format!("unexpected text after `{keyword} {n}`"),
        )),
        _ => Err(Error::parse(line.number, format!("expected `{keyword} <count>`"))),
    }
}

fn end_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn diagram_block(all: &[Line<'_>], eof: usize) -> Result<StrandDiagram> {
    let first = all.first().ok_or_else(|| Error::parse(eof, "missing `diagram <m>` header"))?;
    let sources = header(first, "diagram")?;
    let mut events = Vec::new();
    for line in &all[1..] {
        let event = match line.tokens.as_slice() {
            ["S", i] => Event::Split(count(line, i, "strand index")?),
            ["M", i] => Event::Merge(count(line, i, "strand index")?),
            _ => return Err(Error::parse(line.number, "expected `S <i>` or `M <i>`")),
        };
        events.push(event);
    }
    StrandDiagram::from_events(sources, events).map_err(|e| match e {
        Error::InvalidEvent { position, .. } => Error::parse(all[position].number, e.to_string()),
        other => Error::parse(first.number, other.to_string()),
    })
}

fn weight(line: &Line<'_>, token: &str) -> Result<Rational> {
    parse_rational(token).ok_or_else(|| Error::parse(line.number, format!("`{token}` is not a rational number")))
}

fn forest_block(all: &[Line<'_>], eof: usize) -> Result<WeightedForest> {
    let first = all.first().ok_or_else(|| Error::parse(eof, "missing `forest <l>` header"))?;
    let expected = header(first, "forest")?;
    let mut components = Vec::new();
    for line in &all[1..] {
        let c = match line.tokens.as_slice() {
            ["E"] => WeightedComponent::Edge,
            ["S", w] => WeightedComponent::Split(weight(line, w)?),
            ["M", w] => WeightedComponent::Merge(weight(line, w)?),
            _ => return Err(Error::parse(line.number, "expected `E`, `S <w>` or `M <w>`")),
        };
        components.push(c);
    }
    if components.len() != expected {
        return Err(Error::parse(
            first.number,
            format!("header announces {expected} component(s), found {}", components.len()),
        ));
    }
    WeightedForest::new(components).map_err(|e| Error::parse(first.number, e.to_string()))
}

pub fn parse_diagram(text: &str) -> Result<StrandDiagram> {
    diagram_block(&lines(text), end_line(text))
}

pub fn emit_diagram(d: &StrandDiagram) -> String {
    let word = d.to_slices();
    let mut out = format!("diagram {}\n", word.sources());
    for e in word.events() {
        writeln!(out, "{e}").expect("writing to a string");
    }
    out
}

pub fn parse_forest(text: &str) -> Result<WeightedForest> {
    forest_block(&lines(text), end_line(text))
}

pub fn emit_forest(f: &WeightedForest) -> String {
    let mut out = format!("forest {}\n", f.components().len());
    for c in f.components() {
        match c {
            WeightedComponent::Edge => out.push_str("E\n"),
            WeightedComponent::Split(w) => writeln!(out, "S {w}").expect("writing to a string"),
            WeightedComponent::Merge(w) => writeln!(out, "M {w}").expect("writing to a string"),
        }
    }
    out
}

/// A diagram block followed by a forest block.
pub fn parse_generalized(text: &str) -> Result<GeneralizedStrandDiagram> {
    let all = lines(text);
    let eof = end_line(text);
    let split = all
        .iter()
        .position(|l| l.tokens[0] == "forest")
        .ok_or_else(|| Error::parse(eof, "missing `forest <l>` block"))?;
    let base = diagram_block(&all[..split], eof)?;
    let forest = forest_block(&all[split..], eof)?;
    GeneralizedStrandDiagram::new(&base, forest).map_err(|e| Error::parse(all[split].number, e.to_string()))
}

pub fn emit_generalized(g: &GeneralizedStrandDiagram) -> String {
    emit_diagram(g.base()) + &emit_forest(g.forest())
}

/// Every token of the input, as one tuple.
pub fn parse_configuration(text: &str) -> Result<Vec<Rational>> {
    lines(text)
        .iter()
        .flat_map(|l| l.tokens.iter().map(move |t| (l, *t)))
        .map(|(l, t)| weight(l, t))
        .collect()
}

pub fn emit_configuration(t: &[Rational]) -> String {
    format_tuple(t) + "\n"
}

/// Whitespace-separated `a`, `A`, `b`, `B`.
pub fn parse_word(text: &str) -> Result<Vec<Letter>> {
    lines(text)
        .iter()
        .flat_map(|l| l.tokens.iter().map(move |t| (l, *t)))
        .map(|(l, t)| {
            t.parse::<Letter>()
                .map_err(|_| Error::parse(l.number, format!("unknown generator `{t}` (expected a, A, b or B)")))
        })
        .collect()
}

/// Consecutive forest blocks; `forest <l> inverse` marks a reflected move.
/// Weights are optional and ignored.
pub fn parse_moves(text: &str) -> Result<Vec<SignedForest>> {
    let all = lines(text);
    let mut moves = Vec::new();
    let mut i = 0;
    while i < all.len() {
        let head = &all[i];
        let (expected, inverse) = match head.tokens.as_slice() {
            ["forest", n] => (count(head, n, "count")?, false),
            ["forest", n, "inverse"] => (count(head, n, "count")?, true),
            _ => return Err(Error::parse(head.number, "expected `forest <l>` or `forest <l> inverse`")),
        };
        let mut components = Vec::new();
        i += 1;
        while i < all.len() && all[i].tokens[0] != "forest" {
            let line = &all[i];
            let c = match line.tokens.as_slice() {
                ["E"] => Component::Edge,
                ["S"] | ["S", _] => Component::SplitCaret,
                ["M"] | ["M", _] => Component::MergeCaret,
                _ => return Err(Error::parse(line.number, "expected `E`, `S` or `M`")),
            };
            components.push(c);
            i += 1;
        }
        if components.len() != expected {
            return Err(Error::parse(
                head.number,
                format!("header announces {expected} component(s), found {}", components.len()),
            ));
        }
        let forest = ElementaryForest::new(components).map_err(|e| Error::parse(head.number, e.to_string()))?;
        moves.push(SignedForest { forest, inverse });
    }
    Ok(moves)
}

pub fn emit_moves(moves: &[SignedForest]) -> String {
    let mut out = String::new();
    for m in moves {
        let suffix = if m.inverse { " inverse" } else { "" };
        writeln!(out, "forest {}{suffix}", m.forest.components().len()).expect("writing to a string");
        for c in m.forest.components() {
            out.push_str(match c {
                Component::Edge => "E\n",
                Component::SplitCaret => "S\n",
                Component::MergeCaret => "M\n",
            });
        }
    }
    out
}
