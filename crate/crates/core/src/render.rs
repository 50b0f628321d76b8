//! SVG, DOT and plain-text renderings. Output depends only on the input and
//! the render settings, so repeated runs are byte-identical.
//!
//! Strand diagrams are drawn with sources on top and sinks at the bottom.

use std::fmt::Write as _;

use crate::diagram::{Event, StrandDiagram};
use crate::error::{Error, Result};
use crate::forest::WeightedComponent;
use crate::format::{emit_configuration, emit_diagram, emit_generalized};
use crate::generalized::GeneralizedStrandDiagram;
use crate::rational::{to_f64, Rational};
use crate::stein::{Ball, QuotientBall};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Svg,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderSpec {
    pub format: Format,
    pub scale: f64,
    pub labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            format: Format::Svg,
            scale: 1.0,
            labels: true,
        }
    }
}

pub enum Renderable<'a> {
    Diagram(&'a StrandDiagram),
    Generalized(&'a GeneralizedStrandDiagram),
    Configuration(&'a [Rational]),
    Ball(&'a Ball),
    QuotientBall(&'a QuotientBall),
}

pub fn render(object: Renderable<'_>, spec: &RenderSpec) -> Result<String> {
    use Format::*;
    match (object, spec.format) {
        (Renderable::Diagram(d), Svg) => Ok(word_svg(d.to_slices().sources(), d.to_slices().events(), &[], spec)),
        (Renderable::Diagram(d), Dot) => Ok(word_dot(d.to_slices().sources(), d.to_slices().events(), &[])),
        (Renderable::Diagram(d), Text) => Ok(emit_diagram(d)),
        (Renderable::Generalized(g), Text) => Ok(emit_generalized(g)),
        (Renderable::Generalized(g), format) => {
            let (events, labels) = generalized_word(g);
            let sources = g.base().sources();
            Ok(match format {
                Svg => word_svg(sources, &events, &labels, spec),
                _ => word_dot(sources, &events, &labels),
            })
        }
        (Renderable::Configuration(t), Svg) => Ok(configuration_svg(t, spec)),
        (Renderable::Configuration(t), Text) => Ok(emit_configuration(t)),
        (Renderable::Ball(b), Text) => Ok(ball_text(b)),
        (Renderable::Ball(b), Dot) => Ok(ball_dot(b)),
        (Renderable::QuotientBall(b), Text) => Ok(quotient_text(b)),
        (Renderable::QuotientBall(b), Dot) => Ok(quotient_dot(b)),
        (Renderable::Configuration(_), Dot) => Err(Error::Unsupported("configurations render as svg or text".into())),
        (Renderable::Ball(_) | Renderable::QuotientBall(_), Svg) => {
            Err(Error::Unsupported("balls render as dot or text".into()))
        }
    }
}

/// The base word followed by the forest's carets, labelled with weights.
fn generalized_word(g: &GeneralizedStrandDiagram) -> (Vec<Event>, Vec<Option<String>>) {
    let mut events = g.base().to_slices().events().to_vec();
    let mut labels = vec![None; events.len()];
    let mut position = 1;
    for c in g.forest().components() {
        match c {
            WeightedComponent::Edge => {}
            WeightedComponent::Split(w) => {
                events.push(Event::Split(position));
                labels.push(Some(w.to_string()));
            }
            WeightedComponent::Merge(w) => {
                events.push(Event::Merge(position));
                labels.push(Some(w.to_string()));
            }
        }
        position += c.kind().sinks();
    }
    (events, labels)
}

fn counts(sources: usize, events: &[Event]) -> Vec<usize> {
    let mut out = vec![sources];
    for e in events {
        let c = *out.last().expect("nonempty");
        out.push(match e {
            Event::Split(_) => c + 1,
            Event::Merge(_) => c - 1,
        });
    }
    out
}

fn num(v: f64) -> String {
    format!("{v:.2}")
}

fn word_svg(sources: usize, events: &[Event], labels: &[Option<String>], spec: &RenderSpec) -> String {
    let s = spec.scale;
    let (margin, row, col) = (20.0 * s, 40.0 * s, 40.0 * s);
    let strand_counts = counts(sources, events);
    let widest = *strand_counts.iter().max().expect("nonempty") as f64;
    let width = widest * col;
    let x = |i: usize, c: usize| margin + width * (2 * i + 1) as f64 / (2 * c) as f64;
    let level = |k: usize| margin + row * (k as f64 + 0.5);

    let mut finished: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut live: Vec<Vec<(f64, f64)>> = (0..sources).map(|i| vec![(x(i, sources), margin), (x(i, sources), level(0))]).collect();
    let mut vertices = Vec::new();
    for (k, e) in events.iter().enumerate() {
        let (before, after) = (strand_counts[k], strand_counts[k + 1]);
        let mid = level(k) + row / 2.0;
        let mut next = Vec::with_capacity(after);
        match *e {
            Event::Split(i) => {
                let v = (x(i - 1, before), mid);
                for (j, mut w) in live.drain(..).enumerate() {
                    if j + 1 == i {
                        w.push(v);
                        finished.push(w);
                        next.push(vec![v]);
                        next.push(vec![v]);
                    } else {
                        next.push(w);
                    }
                }
                vertices.push((v, true, k));
            }
            Event::Merge(i) => {
                let v = ((x(i - 1, before) + x(i, before)) / 2.0, mid);
                for (j, mut w) in live.drain(..).enumerate() {
                    if j + 1 == i || j == i {
                        w.push(v);
                        finished.push(w);
                        if j == i {
                            next.push(vec![v]);
                        }
                    } else {
                        next.push(w);
                    }
                }
                vertices.push((v, false, k));
            }
        }
        for (j, w) in next.iter_mut().enumerate() {
            w.push((x(j, after), level(k + 1)));
        }
        live = next;
    }
    let last = level(events.len());
    let n = live.len();
    for (j, w) in live.iter_mut().enumerate() {
        w.push((x(j, n), last + row / 2.0));
    }
    finished.extend(live);

    let total_w = width + 2.0 * margin;
    let total_h = last + row / 2.0 + margin;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(total_w),
        num(total_h),
        num(total_w),
        num(total_h)
    )
    .unwrap();
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="{}">"#, num(1.5 * s)).unwrap();
    for w in &finished {
        let mut d = String::new();
        for (idx, (px, py)) in w.iter().enumerate() {
            let _ = write!(d, "{}{} {}", if idx == 0 { "M" } else { " L" }, num(*px), num(*py));
        }
        writeln!(out, r#"<path class="strand" d="{d}"/>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    for ((vx, vy), split, k) in &vertices {
        let fill = if *split { "black" } else { "white" };
        writeln!(
            out,
            r#"<circle class="{}" cx="{}" cy="{}" r="{}" fill="{fill}" stroke="black"/>"#,
            if *split { "split" } else { "merge" },
            num(*vx),
            num(*vy),
            num(4.0 * s)
        )
        .unwrap();
        if spec.labels {
            if let Some(Some(label)) = labels.get(*k) {
                writeln!(
                    out,
                    r#"<text x="{}" y="{}" font-size="{}" font-family="sans-serif">{label}</text>"#,
                    num(vx + 6.0 * s),
                    num(vy + 4.0 * s),
                    num(10.0 * s)
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "</svg>").unwrap();
    out
}

fn word_dot(sources: usize, events: &[Event], labels: &[Option<String>]) -> String {
    let mut out = String::from("digraph diagram {\n  rankdir=TB;\n");
    let mut live: Vec<(String, &str)> = Vec::new();
    for i in 0..sources {
        writeln!(out, "  src{i} [shape=point, label=\"\"];").unwrap();
        live.push((format!("src{i}"), ""));
    }
    let edge = |out: &mut String, from: &(String, &str), to: &str, head: &str| {
        let mut attrs = Vec::new();
        if !from.1.is_empty() {
            attrs.push(format!("taillabel=\"{}\"", from.1));
        }
        if !head.is_empty() {
            attrs.push(format!("headlabel=\"{head}\""));
        }
        if attrs.is_empty() {
            writeln!(out, "  {} -> {to};", from.0).unwrap();
        } else {
            writeln!(out, "  {} -> {to} [{}];", from.0, attrs.join(", ")).unwrap();
        }
    };
    for (k, e) in events.iter().enumerate() {
        let name = format!("v{k}");
        let label = labels.get(k).cloned().flatten().unwrap_or_default();
        match *e {
            Event::Split(i) => {
                writeln!(out, "  {name} [shape=triangle, label=\"{label}\"];").unwrap();
                let w = live.remove(i - 1);
                edge(&mut out, &w, &name, "");
                live.insert(i - 1, (name.clone(), "R"));
                live.insert(i - 1, (name, "L"));
            }
            Event::Merge(i) => {
                writeln!(out, "  {name} [shape=invtriangle, label=\"{label}\"];").unwrap();
                let right = live.remove(i);
                let left = live.remove(i - 1);
                edge(&mut out, &left, &name, "L");
                edge(&mut out, &right, &name, "R");
                live.insert(i - 1, (name, ""));
            }
        }
    }
    for (j, w) in live.iter().enumerate() {
        writeln!(out, "  snk{j} [shape=point, label=\"\"];").unwrap();
        edge(&mut out, w, &format!("snk{j}"), "");
    }
    out.push_str("}\n");
    out
}

fn configuration_svg(t: &[Rational], spec: &RenderSpec) -> String {
    let s = spec.scale;
    let (margin, unit) = (30.0 * s, 60.0 * s);
    let lo = t.first().map(to_f64).unwrap_or(0.0) - 0.5;
    let hi = t.last().map(to_f64).unwrap_or(0.0) + 0.5;
    let width = (hi - lo) * unit + 2.0 * margin;
    let height = 80.0 * s;
    let y = height / 2.0;
    let px = |v: &Rational| margin + (to_f64(v) - lo) * unit;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    )
    .unwrap();
    writeln!(
        out,
        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        num(margin / 2.0),
        num(y),
        num(width - margin / 2.0),
        num(y)
    )
    .unwrap();
    let mut i = 0;
    while i < t.len() {
        let mut multiplicity = 1;
        while i + multiplicity < t.len() && t[i + multiplicity] == t[i] {
            multiplicity += 1;
        }
        writeln!(
            out,
            r#"<circle class="point" cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(px(&t[i])),
            num(y),
            num(4.0 * s)
        )
        .unwrap();
        if spec.labels {
            let label = if multiplicity > 1 {
                format!("{} (x{multiplicity})", t[i])
            } else {
                t[i].to_string()
            };
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="{}" font-family="sans-serif" text-anchor="middle">{label}</text>"#,
                num(px(&t[i])),
                num(y - 10.0 * s),
                num(10.0 * s)
            )
            .unwrap();
        }
        i += multiplicity;
    }
    writeln!(out, "</svg>").unwrap();
    out
}

fn ball_text(b: &Ball) -> String {
    let mut out = String::new();
    if b.edges.is_empty() {
        for v in &b.vertices {
            writeln!(out, "{v}").unwrap();
        }
    }
    for &(x, y) in &b.edges {
        writeln!(out, "{} -- {}", b.vertices[x], b.vertices[y]).unwrap();
    }
    out
}

fn ball_dot(b: &Ball) -> String {
    let mut out = String::from("digraph ball {\n");
    for (i, v) in b.vertices.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{v}\"];").unwrap();
    }
    for &(x, y) in &b.edges {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn quotient_text(b: &QuotientBall) -> String {
    let mut out = String::new();
    if b.edges.is_empty() {
        for n in &b.sinks {
            writeln!(out, "n={n}").unwrap();
        }
    }
    for &(n, j) in &b.edges {
        writeln!(out, "n={n} -- n={} (split {j})", n + 1).unwrap();
    }
    out
}

fn quotient_dot(b: &QuotientBall) -> String {
    let mut out = String::from("digraph quotient {\n");
    for n in &b.sinks {
        writeln!(out, "  n{n} [label=\"n={n}\"];").unwrap();
    }
    for &(n, j) in &b.edges {
        writeln!(out, "  n{n} -> n{} [label=\"{j}\"];", n + 1).unwrap();
    }
    out.push_str("}\n");
    out
}
