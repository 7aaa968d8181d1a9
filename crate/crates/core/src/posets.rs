//! Posets of arc diagrams under the move order, and the coarser poset of
//! LR-tableaux.
//!
//! The order is reachability under up-moves inside the node set; covers are
//! its transitive reduction. A single move need not be a cover.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arcs::{diagrams_of_tableau, diagrams_of_type, ArcDiagram, Source};
use crate::dims::{dimension_report, DimensionReport};
use crate::error::{Error, Result};
use crate::moves::up_moves;
use crate::tableaux::{lr_enumerate, LrTableau, PartitionTriple};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn intersection_count(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }
}

/// Nodes sorted by crossing number, then by their sources (larger first),
/// then canonically. Index order is therefore a linear extension.
fn node_key(d: &ArcDiagram) -> (usize, Reverse<Vec<u32>>, ArcDiagram) {
    let mut sources: Vec<u32> = d.arcs().iter().map(|a| a.source).collect();
    sources.sort_unstable_by(|a, b| b.cmp(a));
    (d.crossings(), Reverse(sources), d.clone())
}

#[derive(Clone, Debug)]
pub struct DiagramPoset {
    triple: PartitionTriple,
    nodes: Vec<ArcDiagram>,
    crossings: Vec<usize>,
    tableaux: Vec<LrTableau>,
    variety_dim: i64,
    covers: Vec<(usize, usize)>,
    up: Vec<Bits>,
}

impl DiagramPoset {
    fn build(triple: PartitionTriple, nodes: Vec<ArcDiagram>, swaps_only: bool) -> Result<Self> {
        let mut keyed: Vec<_> = nodes.into_iter().map(|d| (node_key(&d), d)).collect();
        keyed.sort();
        keyed.dedup_by(|a, b| a.1 == b.1);
        let nodes: Vec<ArcDiagram> = keyed.into_iter().map(|(_, d)| d).collect();
        let n = nodes.len();
        let index: BTreeMap<&ArcDiagram, usize> = nodes.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let crossings: Vec<usize> = nodes.iter().map(ArcDiagram::crossings).collect();
        let tableaux = nodes
            .iter()
            .map(|d| d.lr_type(&triple.beta, &triple.gamma))
            .collect::<Result<Vec<_>>>()?;

        let mut edges: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, d) in nodes.iter().enumerate() {
            for (m, next) in up_moves(d) {
                if swaps_only && !m.kind.is_source_swap() {
                    continue;
                }
                // moves may leave the set of admissible diagrams
                if let Some(&j) = index.get(&next) {
                    if crossings[j] <= crossings[i] {
                        return Err(Error::Internal(format!("up-move {m} does not increase crossings")));
                    }
                    edges[i].push(j);
                }
            }
        }

        // edges go to strictly larger indices, so sweep downwards
        let mut up = vec![Bits::new(n); n];
        for i in (0..n).rev() {
            up[i].set(i);
            for &j in &edges[i] {
                let reach = up[j].clone();
                up[i].union_with(&reach);
            }
        }
        let mut down = vec![Bits::new(n); n];
        for (i, row) in up.iter().enumerate() {
            for (j, col) in down.iter_mut().enumerate() {
                if row.get(j) {
                    col.set(i);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if up[i].get(j) && up[i].intersection_count(&down[j]) == 2 {
                    covers.push((i, j));
                }
            }
        }
        let variety_dim = crate::dims::hall_degree(&triple) + crate::dims::aut_degree(&triple.alpha) as i64;
        Ok(DiagramPoset { triple, nodes, crossings, tableaux, variety_dim, covers, up })
    }

    pub fn triple(&self) -> &PartitionTriple {
        &self.triple
    }

    pub fn nodes(&self) -> &[ArcDiagram] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn crossings(&self, i: usize) -> usize {
        self.crossings[i]
    }

    pub fn dimension(&self, i: usize) -> i64 {
        self.variety_dim - self.crossings[i] as i64
    }

    pub fn tableau(&self, i: usize) -> &LrTableau {
        &self.tableaux[i]
    }

    pub fn index_of(&self, d: &ArcDiagram) -> Option<usize> {
        self.nodes.iter().position(|x| x == d)
    }

    /// `nodes[i] ≤ nodes[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].get(j)
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| (0..self.len()).all(|i| i == j || !self.leq(i, j))).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| i == j || !self.leq(i, j))).collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::NodeIndex { index: i, len: self.len() })
        }
    }

    fn cover_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for &(i, j) in &self.covers {
            out[i].push(j);
        }
        out
    }

    /// Every saturated chain from `from` to `to`, in lexicographic order.
    pub fn saturated_chains(&self, from: usize, to: usize) -> Result<Vec<Vec<usize>>> {
        self.check_index(from)?;
        self.check_index(to)?;
        if !self.leq(from, to) {
            return Err(Error::NotComparable { from, to });
        }
        let next = self.cover_lists();
        let mut out = Vec::new();
        let mut path = vec![from];
        self.extend_chains(&next, to, &mut path, &mut out);
        Ok(out)
    }

    fn extend_chains(&self, next: &[Vec<usize>], to: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("non-empty");
        if last == to {
            out.push(path.clone());
            return;
        }
        for &k in &next[last] {
            if self.leq(k, to) {
                path.push(k);
                self.extend_chains(next, to, path, out);
                path.pop();
            }
        }
    }

    /// Length of the longest chain.
    pub fn height(&self) -> usize {
        let mut best = vec![0usize; self.len()];
        for &(i, j) in &self.covers {
            // covers are sorted by source index, and sources precede targets
            best[j] = best[j].max(best[i] + 1);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Checks that all saturated chains between any two comparable nodes
    /// have the same length. The witness is the first failing pair in node
    /// order.
    pub fn is_graded(&self) -> GradedReport {
        let n = self.len();
        let next = self.cover_lists();
        for i in 0..n {
            let mut lengths: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
            lengths[i].insert(0);
            for k in i..n {
                if lengths[k].is_empty() {
                    continue;
                }
                let here: Vec<usize> = lengths[k].iter().map(|l| l + 1).collect();
                for &j in &next[k] {
                    lengths[j].extend(here.iter().copied());
                }
            }
            if let Some(j) = (i..n).find(|&j| lengths[j].len() > 1) {
                return GradedReport {
                    graded: false,
                    witness: Some(GradedWitness { from: i, to: j, lengths: lengths[j].iter().copied().collect() }),
                };
            }
        }
        GradedReport { graded: true, witness: None }
    }

    pub fn dimension_report(&self) -> Result<DimensionReport> {
        dimension_report(&self.triple, Some(&self.nodes))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (i, d) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"{i}: {d}\\nx={} dim={}\"];",
                self.crossings[i],
                self.dimension(i)
            );
        }
        for &(i, j) in &self.covers {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> PosetJson<DiagramNode> {
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, d)| DiagramNode {
                diagram: d.clone(),
                crossings: self.crossings[i],
                dimension: self.dimension(i),
                tableau: self.tableaux[i].label(),
            })
            .collect();
        PosetJson { nodes, covers: self.covers.iter().map(|&(i, j)| [i, j]).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramNode {
    #[serde(flatten)]
    pub diagram: ArcDiagram,
    pub crossings: usize,
    pub dimension: i64,
    pub tableau: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson<N> {
    pub nodes: Vec<N>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedWitness {
    pub from: usize,
    pub to: usize,
    pub lengths: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedReport {
    pub graded: bool,
    pub witness: Option<GradedWitness>,
}

/// Diagrams refining one LR-tableau, ordered by source swaps (A and B).
pub fn poset_of_tableau(g: &LrTableau) -> Result<DiagramPoset> {
    DiagramPoset::build(g.triple(), diagrams_of_tableau(g), true)
}

/// All diagrams of a type, ordered by all four moves.
pub fn poset_of_type(triple: &PartitionTriple) -> Result<DiagramPoset> {
    DiagramPoset::build(triple.clone(), diagrams_of_type(triple)?, false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruhatReport {
    /// Number of 1-entries, the size of the permutations.
    pub x: usize,
    pub nodes: usize,
    /// Permutation of each node, in node order, in one-line notation.
    pub permutations: Vec<Vec<u32>>,
    pub bijective: bool,
    pub isomorphic: bool,
    pub height: usize,
    pub bruhat_height: usize,
}

/// Row-local conditions 2 and 3 are checked before the global count 1, so a
/// tableau with a crowded row reports that row.
fn bruhat_conditions(g: &LrTableau) -> Result<()> {
    let (ones, twos) = g.row_counts();
    for row in 1..=g.rows() {
        if g.cells(row) > 1 {
            return Err(Error::BruhatCondition {
                condition: 2,
                detail: format!("row {row} has {} boxes", g.cells(row)),
            });
        }
    }
    let rows_with = |v: &[u32]| -> Vec<u32> { (1..=v.len() as u32).filter(|&r| v[r as usize - 1] > 0).collect() };
    let (one_rows, two_rows) = (rows_with(&ones), rows_with(&twos));
    if let (Some(&hi), Some(&lo)) = (one_rows.iter().max(), two_rows.iter().min()) {
        if lo <= hi {
            return Err(Error::BruhatCondition {
                condition: 3,
                detail: format!("row {lo} holds a 2 but row {hi} holds a 1"),
            });
        }
    }
    let x: u32 = ones.iter().sum();
    let t: u32 = twos.iter().sum();
    if t != x && t + 1 != x {
        return Err(Error::BruhatCondition { condition: 1, detail: format!("{x} ones but {t} twos") });
    }
    Ok(())
}

/// One-line permutation of a diagram: the rank of each source, read along
/// the source-target sequence; a pole ranks last.
pub fn source_permutation(d: &ArcDiagram) -> Vec<u32> {
    let sources: Vec<Source> = d.strands().iter().map(|s| s.source).collect();
    let mut sorted = sources.clone();
    sorted.sort();
    sources.iter().map(|s| sorted.iter().position(|t| t == s).expect("present") as u32 + 1).collect()
}

/// `#{a ≤ i : w(a) ≥ j}` for all `i, j`.
fn rank_matrix(w: &[u32]) -> Vec<Vec<u32>> {
    let n = w.len();
    let mut r = vec![vec![0; n + 2]; n + 1];
    for i in 1..=n {
        for j in 1..=n + 1 {
            r[i][j] = r[i - 1][j] + u32::from(w[i - 1] as usize >= j);
        }
    }
    r
}

/// Strong Bruhat order by the rank-matrix criterion.
pub fn bruhat_leq(u: &[u32], w: &[u32]) -> bool {
    let (ru, rw) = (rank_matrix(u), rank_matrix(w));
    ru.iter().zip(&rw).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y))
}

pub fn inversions(w: &[u32]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32 + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Compares the poset of a tableau satisfying the three conditions with the
/// Bruhat order of the symmetric group on its 1-entries.
pub fn bruhat_check(g: &LrTableau) -> Result<BruhatReport> {
    bruhat_conditions(g)?;
    let x = g.row_counts().0.iter().sum::<u32>() as usize;
    let poset = poset_of_tableau(g)?;
    let perms: Vec<Vec<u32>> = poset.nodes().iter().map(source_permutation).collect();
    let all = permutations(x);
    let distinct: BTreeSet<&Vec<u32>> = perms.iter().collect();
    let bijective = distinct.len() == perms.len() && perms.len() == all.len();
    let n = poset.len();
    let isomorphic = bijective
        && (0..n).all(|i| (0..n).all(|j| poset.leq(i, j) == bruhat_leq(&perms[i], &perms[j])));
    Ok(BruhatReport {
        x,
        nodes: n,
        permutations: perms,
        bijective,
        isomorphic,
        height: poset.height(),
        bruhat_height: all.iter().map(|w| inversions(w)).max().unwrap_or(0),
    })
}

/// The tableau of a pure permutation family: `x` arcs from the points
/// `x+1..=2x` to the points `1..=x`, one cell per row.
pub fn permutation_tableau(x: u32) -> LrTableau {
    let beta_star: Vec<u32> = (1..=2 * x).rev().collect();
    let gamma_star: Vec<u32> = (0..2 * x).rev().collect();
    let tilde: Vec<u32> = (0..2 * x as usize)
        .map(|i| if i < x as usize { beta_star[i] } else { gamma_star[i] })
        .collect();
    let p = |v: Vec<u32>| crate::partitions::Partition::new(v).expect("decreasing");
    LrTableau::new(p(beta_star), p(gamma_star), p(tilde)).expect("valid by construction")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauPoset {
    pub nodes: Vec<LrTableau>,
    pub covers: Vec<[usize; 2]>,
    /// `leq[a][b]` holds when `nodes[a] ≤ nodes[b]`.
    pub leq: Vec<Vec<bool>>,
    pub minimum: Option<usize>,
    pub maximum: Option<usize>,
}

impl TableauPoset {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tableaux {\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  t{i} [label=\"G{}\"];", t.label());
        }
        for [i, j] in &self.covers {
            let _ = writeln!(out, "  t{i} -> t{j};");
        }
        out.push_str("}\n");
        out
    }
}

fn closure(mut rel: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let n = rel.len();
    for k in 0..n {
        for i in 0..n {
            if rel[i][k] {
                for j in 0..n {
                    if rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    rel
}

/// The order on LR-tableaux of a type, computed from diagram comparisons,
/// from the box order on intermediate partitions, and as the quotient of the
/// diagram poset. Disagreement between the three is an internal error.
pub fn tableau_poset(triple: &PartitionTriple) -> Result<TableauPoset> {
    let tabs = lr_enumerate(triple)?;
    let n = tabs.len();
    let dp = poset_of_type(triple)?;
    let owner: Vec<usize> = (0..dp.len())
        .map(|i| tabs.iter().position(|t| t == dp.tableau(i)).expect("node of an enumerated tableau"))
        .collect();

    let mut via_diagrams = vec![vec![false; n]; n];
    for i in 0..dp.len() {
        for j in 0..dp.len() {
            if dp.leq(i, j) {
                via_diagrams[owner[i]][owner[j]] = true;
            }
        }
    }

    let mut via_boxes = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = (tabs[a].intermediate_partition(), tabs[b].intermediate_partition());
            via_boxes[a][b] = pa.box_chain(&pb)?.is_some();
        }
    }

    let mut quotient = vec![vec![false; n]; n];
    for (a, row) in quotient.iter_mut().enumerate() {
        row[a] = true;
    }
    for &(i, j) in dp.covers() {
        quotient[owner[i]][owner[j]] = true;
    }
    let quotient = closure(quotient);

    if via_diagrams != via_boxes || via_boxes != quotient {
        return Err(Error::Internal(format!("tableau order computations disagree for {triple}")));
    }
    let leq = via_boxes;
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && leq[a][b] && !(0..n).any(|k| k != a && k != b && leq[a][k] && leq[k][b]) {
                covers.push([a, b]);
            }
        }
    }
    let minimum = (0..n).find(|&a| (0..n).all(|b| leq[a][b]));
    let maximum = (0..n).find(|&b| (0..n).all(|a| leq[a][b]));
    Ok(TableauPoset { nodes: tabs, covers, leq, minimum, maximum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::tableaux::nonempty_triples;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn d(arcs: &[(u32, u32)], poles: &[u32]) -> ArcDiagram {
        ArcDiagram::new(arcs.iter().copied(), poles.iter().copied()).unwrap()
    }

    fn running() -> PartitionTriple {
        PartitionTriple::new(p("2,2,1,1"), p("4,3,3,2,2,1"), p("3,2,2,1,1"))
    }

    /// The ten diagrams of the running example as read off the Hasse figure.
    fn figure() -> BTreeMap<&'static str, ArcDiagram> {
        BTreeMap::from([
            ("43_0", d(&[(4, 3), (3, 2)], &[1, 2])),
            ("42_0", d(&[(4, 3), (2, 1)], &[3, 2])),
            ("33_0", d(&[(3, 2), (3, 2)], &[4, 1])),
            ("32_0", d(&[(3, 2), (2, 1)], &[4, 3])),
            ("43_1", d(&[(4, 2), (3, 2)], &[3, 1])),
            ("33_1", d(&[(3, 2), (3, 1)], &[4, 2])),
            ("43_2b", d(&[(4, 1), (3, 2)], &[2, 3])),
            ("43_2a", d(&[(4, 3), (3, 1)], &[2, 2])),
            ("42_2", d(&[(4, 2), (2, 1)], &[3, 3])),
            ("43_3", d(&[(4, 2), (3, 1)], &[2, 3])),
        ])
    }

    fn named_covers(poset: &DiagramPoset) -> BTreeSet<(String, String)> {
        let names = figure();
        let name = |i: usize| names.iter().find(|(_, x)| **x == poset.nodes()[i]).unwrap().0.to_string();
        poset.covers().iter().map(|&(i, j)| (name(i), name(j))).collect()
    }

    fn pairs(v: &[(&str, &str)]) -> BTreeSet<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn hasse_diagram_of_the_running_example() {
        let poset = poset_of_type(&running()).unwrap();
        assert_eq!(poset.len(), 10);
        let expected = pairs(&[
            ("43_0", "43_2a"),
            ("43_0", "43_1"),
            ("42_0", "43_2a"),
            ("42_0", "42_2"),
            ("33_0", "43_1"),
            ("33_0", "33_1"),
            ("32_0", "42_2"),
            ("32_0", "33_1"),
            ("43_1", "43_2b"),
            ("33_1", "43_2b"),
            ("43_2a", "43_3"),
            ("43_2b", "43_3"),
            ("42_2", "43_3"),
        ]);
        assert_eq!(named_covers(&poset), expected);
        let names = figure();
        let mins: Vec<&ArcDiagram> = poset.minimal().iter().map(|&i| &poset.nodes()[i]).collect();
        assert_eq!(mins, vec![&names["43_0"], &names["42_0"], &names["33_0"], &names["32_0"]]);
        assert_eq!(poset.maximal().len(), 1);
        assert_eq!(poset.nodes()[poset.maximal()[0]], names["43_3"]);
    }

    #[test]
    fn poset_of_one_tableau() {
        let tabs = lr_enumerate(&running()).unwrap();
        let g43 = tabs.iter().find(|t| t.label() == "43").unwrap();
        let poset = poset_of_tableau(g43).unwrap();
        assert_eq!(poset.len(), 5);
        let expected = pairs(&[
            ("43_0", "43_1"),
            ("43_0", "43_2a"),
            ("43_1", "43_2b"),
            ("43_2b", "43_3"),
            ("43_2a", "43_3"),
        ]);
        assert_eq!(named_covers(&poset), expected);
        assert_eq!(poset.minimal(), vec![0]);
        assert_eq!(poset.maximal(), vec![4]);

        let single = lr_enumerate(&PartitionTriple::new(p("1"), p("2,1"), p("2"))).unwrap();
        assert_eq!(poset_of_tableau(&single[0]).unwrap().len(), 1);
    }

    #[test]
    fn chains_and_gradedness() {
        let poset = poset_of_type(&running()).unwrap();
        let names = figure();
        let from = poset.index_of(&names["43_0"]).unwrap();
        let to = poset.index_of(&names["43_3"]).unwrap();
        let lengths: BTreeSet<usize> =
            poset.saturated_chains(from, to).unwrap().iter().map(|c| c.len() - 1).collect();
        assert_eq!(lengths, BTreeSet::from([2, 3]));
        assert_eq!(poset.saturated_chains(from, from).unwrap(), vec![vec![from]]);
        let other = poset.index_of(&names["42_0"]).unwrap();
        assert_eq!(poset.saturated_chains(from, other), Err(Error::NotComparable { from, to: other }));
        assert!(matches!(poset.saturated_chains(0, 99), Err(Error::NodeIndex { .. })));

        let report = poset.is_graded();
        assert!(!report.graded);
        let w = report.witness.unwrap();
        assert_eq!((w.from, w.to, w.lengths), (from, to, vec![2, 3]));
    }

    #[test]
    fn small_type_with_two_tableaux() {
        let poset = poset_of_type(&PartitionTriple::new(p("2,1"), p("3,2,1"), p("2,1"))).unwrap();
        assert_eq!(poset.len(), 3);
        assert_eq!(poset.minimal().len(), 2);
        assert_eq!(poset.maximal(), vec![2]);
        assert_eq!(poset.covers(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn minimal_elements_are_the_dominant_diagrams() {
        for triple in nonempty_triples(8) {
            let poset = poset_of_type(&triple).unwrap();
            let dominant: Vec<usize> = (0..poset.len()).filter(|&i| poset.crossings(i) == 0).collect();
            assert_eq!(poset.minimal(), dominant, "{triple}");
            assert_eq!(dominant.len(), lr_enumerate(&triple).unwrap().len());
            let max = poset.maximal();
            assert_eq!(max.len(), 1, "{triple}");
            let top = (0..poset.len()).map(|i| poset.crossings(i)).max().unwrap();
            assert_eq!(poset.crossings(max[0]), top);
        }
    }

    #[test]
    fn bruhat_comparison() {
        for x in 1..=4u32 {
            let report = bruhat_check(&permutation_tableau(x)).unwrap();
            let fact: usize = (1..=x as usize).product();
            assert_eq!(report.nodes, fact);
            assert!(report.bijective && report.isomorphic, "x={x}");
            assert_eq!(report.height, (x * (x - 1) / 2) as usize);
        }
        let tabs = lr_enumerate(&running()).unwrap();
        let g43 = tabs.iter().find(|t| t.label() == "43").unwrap();
        assert!(matches!(bruhat_check(g43), Err(Error::BruhatCondition { condition: 2, .. })));
    }

    #[test]
    fn bruhat_oracle_matches_covers_by_transpositions() {
        // in S_n, u < w covers iff w = u·(i j) with one more inversion
        for n in 1..=4 {
            let all = permutations(n);
            for u in &all {
                for w in &all {
                    let by_rank = bruhat_leq(u, w) && inversions(w) == inversions(u) + 1;
                    let diff: Vec<usize> = (0..n).filter(|&i| u[i] != w[i]).collect();
                    let by_transposition = diff.len() == 2 && inversions(w) == inversions(u) + 1;
                    assert_eq!(by_rank, by_transposition, "{u:?} {w:?}");
                }
            }
        }
    }

    #[test]
    fn coarse_poset_of_the_running_example() {
        let tp = tableau_poset(&running()).unwrap();
        let label = |i: usize| tp.nodes[i].label();
        let covers: BTreeSet<(String, String)> = tp.covers.iter().map(|&[a, b]| (label(a), label(b))).collect();
        assert_eq!(
            covers,
            pairs(&[("32", "42"), ("32", "33"), ("42", "43"), ("33", "43")])
        );
        assert_eq!(label(tp.minimum.unwrap()), "32");
        assert_eq!(label(tp.maximum.unwrap()), "43");

        let chain = tableau_poset(&PartitionTriple::new(p("2,1"), p("3,2,1"), p("2,1"))).unwrap();
        assert_eq!(chain.nodes.len(), 2);
        assert_eq!(chain.covers.len(), 1);
    }

    #[test]
    fn json_and_dot() {
        let poset = poset_of_type(&running()).unwrap();
        let json = serde_json::to_value(poset.to_json()).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), 10);
        assert_eq!(json["covers"].as_array().unwrap().len(), 13);
        let first: ArcDiagram = serde_json::from_value(json["nodes"][0].clone()).unwrap();
        assert_eq!(first, poset.nodes()[0]);
        let dot = poset.to_dot();
        assert_eq!(dot.matches("->").count(), 13);
        assert!(dot.starts_with("digraph"));
    }
}
