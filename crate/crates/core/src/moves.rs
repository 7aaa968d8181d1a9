//! The four local moves relating arc diagrams of the same type.
//!
//! Moves are described on pairs of strands in sequence coordinates. A
//! crossing pair `(s₁,t₁),(s₂,t₂)` with `t₂ < t₁ < s₂ < s₁` resolves in two
//! ways:
//!
//! * swapping sources gives the nested pair `(s₂,t₁),(s₁,t₂)`: kind A, or B
//!   when `s₁ = ∞` (a pole crossing an arc);
//! * repairing gives the stacked pair `(s₁,s₂),(t₁,t₂)`: kind C, or D when
//!   `s₁ = ∞`, in which case `(∞,s₂)` is a pole at `s₂`.
//!
//! Down-moves resolve a crossing, up-moves are their inverses.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arcs::{ArcDiagram, Source, Strand};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    A,
    B,
    C,
    D,
}

impl MoveKind {
    /// A and B exchange sources and keep the LR-tableau; C and D do not.
    pub fn is_source_swap(self) -> bool {
        matches!(self, MoveKind::A | MoveKind::B)
    }

    fn classify(swap: bool, infinite: bool) -> Self {
        match (swap, infinite) {
            (true, false) => MoveKind::A,
            (true, true) => MoveKind::B,
            (false, false) => MoveKind::C,
            (false, true) => MoveKind::D,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub direction: Direction,
    pub pairs_before: [Strand; 2],
    pub pairs_after: [Strand; 2],
}

impl Move {
    pub fn inverse(&self) -> Move {
        Move {
            kind: self.kind,
            direction: match self.direction {
                Direction::Up => Direction::Down,
                Direction::Down => Direction::Up,
            },
            pairs_before: self.pairs_after,
            pairs_after: self.pairs_before,
        }
    }

    /// Replaces one copy of each strand in `pairs_before`; `None` when the
    /// diagram lacks them.
    pub fn apply(&self, d: &ArcDiagram) -> Option<ArcDiagram> {
        let mut strands = d.strands();
        for s in &self.pairs_before {
            let at = strands.iter().position(|x| x == s)?;
            strands.swap_remove(at);
        }
        strands.extend(self.pairs_after);
        ArcDiagram::from_strands(strands).ok()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.pairs_before;
        let [c, d] = self.pairs_after;
        write!(f, "{} {a}{b} -> {c}{d}", self.kind)
    }
}

/// Orders a crossing pair as `(s₁,t₁),(s₂,t₂)` with `t₂ < t₁ < s₂ < s₁`.
fn as_crossing(a: Strand, b: Strand) -> Option<(Strand, Strand)> {
    if !a.crosses(&b) {
        return None;
    }
    Some(if a.source > b.source { (a, b) } else { (b, a) })
}

fn down_pair(a: Strand, b: Strand) -> Vec<Move> {
    let Some((outer, inner)) = as_crossing(a, b) else {
        return Vec::new();
    };
    let (s1, t1, t2) = (outer.source, outer.target, inner.target);
    let s2 = inner.source.finite().expect("the inner source of a crossing is finite");
    let infinite = s1.is_infinite();
    let swap = Move {
        kind: MoveKind::classify(true, infinite),
        direction: Direction::Down,
        pairs_before: [outer, inner],
        pairs_after: [Strand { source: inner.source, target: t1 }, Strand { source: s1, target: t2 }],
    };
    let repair = Move {
        kind: MoveKind::classify(false, infinite),
        direction: Direction::Down,
        pairs_before: [outer, inner],
        pairs_after: [Strand { source: s1, target: s2 }, Strand::arc(t1, t2)],
    };
    vec![swap, repair]
}

fn up_pair(a: Strand, b: Strand) -> Vec<Move> {
    let mut out = Vec::new();
    // nested: t₂ < t₁ < s₁ < s₂
    let (outer, inner) = if a.source > b.source { (a, b) } else { (b, a) };
    if outer.target < inner.target && inner.source.exceeds(inner.target) && inner.source < outer.source {
        out.push(Move {
            kind: MoveKind::classify(true, outer.source.is_infinite()),
            direction: Direction::Up,
            pairs_before: [outer, inner],
            pairs_after: [
                Strand { source: outer.source, target: inner.target },
                Strand { source: inner.source, target: outer.target },
            ],
        });
    }
    // stacked: (a,b),(c,d) with a > b > c > d
    let (hi, lo) = if a.target > b.target { (a, b) } else { (b, a) };
    if let Source::Finite(c) = lo.source {
        if hi.target > c {
            out.push(Move {
                kind: MoveKind::classify(false, hi.source.is_infinite()),
                direction: Direction::Up,
                pairs_before: [hi, lo],
                pairs_after: [Strand { source: hi.source, target: c }, Strand::arc(hi.target, lo.target)],
            });
        }
    }
    out
}

fn neighbours(d: &ArcDiagram, pair_moves: fn(Strand, Strand) -> Vec<Move>) -> Vec<(Move, ArcDiagram)> {
    let strands = d.strands();
    let mut found: BTreeMap<ArcDiagram, Move> = BTreeMap::new();
    for i in 0..strands.len() {
        for j in i + 1..strands.len() {
            for m in pair_moves(strands[i], strands[j]) {
                let next = m.apply(d).expect("move built from the diagram's own strands");
                found.entry(next).or_insert(m);
            }
        }
    }
    found.into_iter().map(|(next, m)| (m, next)).collect()
}

/// All diagrams one crossing-resolving move below `d`, deduplicated by
/// result and sorted by it.
pub fn down_moves(d: &ArcDiagram) -> Vec<(Move, ArcDiagram)> {
    neighbours(d, down_pair)
}

/// All diagrams one move above `d`, deduplicated and sorted.
pub fn up_moves(d: &ArcDiagram) -> Vec<(Move, ArcDiagram)> {
    neighbours(d, up_pair)
}
