use std::fmt::Write as _;

use arcstrata::posets::DiagramPoset;
use arcstrata::ArcDiagram;

const STEP: f64 = 40.0;
const MARGIN: f64 = 24.0;

/// Points are numbered right to left, so point `p` of `points` sits at
/// `MARGIN + (points − p)·STEP`.
fn px(points: u32, p: u32) -> f64 {
    MARGIN + f64::from(points - p) * STEP
}

/// An arc diagram: arcs as half ellipses above the baseline, poles as
/// arrows going up. Repeated arcs and poles are fanned out.
pub fn diagram(d: &ArcDiagram, points: u32) -> String {
    let points = points.max(d.max_point()).max(1);
    let width = 2.0 * MARGIN + f64::from(points - 1) * STEP;
    let top = 12.0 + STEP * 0.5 * f64::from(points);
    let base = top + 16.0;
    let height = base + 22.0;
    let mut s = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" class="diagram" viewBox="0 0 {width} {height}" width="{width}" height="{height}">"#
    );
    let _ = write!(
        s,
        r#"<line x1="{}" y1="{base}" x2="{}" y2="{base}" class="baseline"/>"#,
        MARGIN - 10.0,
        width - MARGIN + 10.0
    );
    let mut seen: Vec<(u32, u32)> = Vec::new();
    for a in d.arcs() {
        let copy = seen.iter().filter(|&&x| x == (a.source, a.target)).count() as f64;
        seen.push((a.source, a.target));
        let (x1, x2) = (px(points, a.source), px(points, a.target));
        let rx = (x2 - x1) / 2.0;
        let ry = rx * 0.8 + copy * 8.0;
        let _ = write!(s, r#"<path class="arc" d="M {x1} {base} A {rx} {ry} 0 0 1 {x2} {base}"/>"#);
    }
    let mut poles_seen: Vec<u32> = Vec::new();
    for &p in d.poles() {
        let copy = poles_seen.iter().filter(|&&x| x == p).count() as f64;
        poles_seen.push(p);
        let x = px(points, p) + copy * 6.0;
        let y = 6.0;
        let _ = write!(
            s,
            r#"<line class="pole" x1="{x}" y1="{base}" x2="{x}" y2="{y}"/><path class="pole-head" d="M {} {} L {x} {y} L {} {}"/>"#,
            x - 4.0,
            y + 7.0,
            x + 4.0,
            y + 7.0
        );
    }
    for p in 1..=points {
        let x = px(points, p);
        let _ = write!(
            s,
            r#"<circle class="point" cx="{x}" cy="{base}" r="3"/><text class="label" x="{x}" y="{}" text-anchor="middle">{p}</text>"#,
            base + 17.0
        );
    }
    s.push_str("</svg>");
    s
}

/// The Hasse diagram with the most crossings on top. Nodes carry
/// `data-index` so the page can react to clicks.
pub fn hasse(poset: &DiagramPoset) -> String {
    let n = poset.len();
    let top = (0..n).map(|i| poset.crossings(i)).max().unwrap_or(0);
    let levels: Vec<Vec<usize>> =
        (0..=top).map(|x| (0..n).filter(|&i| poset.crossings(i) == x).collect()).collect();
    let widest = levels.iter().map(Vec::len).max().unwrap_or(1).max(1);
    let (dx, dy) = (70.0, 70.0);
    let width = dx * widest as f64 + 40.0;
    let height = dy * (top + 1) as f64 + 20.0;
    let mut pos = vec![(0.0, 0.0); n];
    for (x, level) in levels.iter().enumerate() {
        let offset = (width - dx * level.len() as f64) / 2.0 + dx / 2.0;
        for (k, &i) in level.iter().enumerate() {
            pos[i] = (offset + dx * k as f64, 40.0 + dy * (top - x) as f64);
        }
    }
    let mut s = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" class="hasse" viewBox="0 0 {width} {height}" width="{width}" height="{height}">"#
    );
    for &(i, j) in poset.covers() {
        let ((x1, y1), (x2, y2)) = (pos[i], pos[j]);
        let _ = write!(s, r#"<line class="cover" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    for (i, &(x, y)) in pos.iter().enumerate() {
        let _ = write!(
            s,
            r#"<g class="node" data-index="{i}"><circle cx="{x}" cy="{y}" r="16"/><text x="{x}" y="{}" text-anchor="middle">{i}</text><title>x={} G{}</title></g>"#,
            y + 5.0,
            poset.crossings(i),
            poset.tableau(i).label()
        );
    }
    s.push_str("</svg>");
    s
}
