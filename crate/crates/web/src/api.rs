use arcstrata::bubblesort::{classical_bubble_sort, extended_bubble_sort};
use arcstrata::posets::poset_of_type;
use arcstrata::tableaux::PartitionTriple;
use arcstrata::{Partition, SourceTargetSeq};
use serde::Serialize;

use crate::svg;

pub type ApiResult = Result<String, String>;

fn partition(what: &str, s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e| format!("{what}: {e}"))
}

fn to_json(value: &impl Serialize) -> ApiResult {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct NodeView {
    index: usize,
    crossings: usize,
    dimension: i64,
    tableau: String,
    diagram: String,
    sequence: String,
    svg: String,
}

#[derive(Serialize)]
struct TypeView {
    triple: String,
    components: usize,
    variety_dim: i64,
    graded: bool,
    nodes: Vec<NodeView>,
    covers: Vec<[usize; 2]>,
    hasse: String,
}

/// All diagrams of a type with their Hasse diagram.
pub fn type_view(alpha: &str, beta: &str, gamma: &str) -> ApiResult {
    let triple = PartitionTriple::new(partition("alpha", alpha)?, partition("beta", beta)?, partition("gamma", gamma)?);
    triple.check().map_err(|e| e.to_string())?;
    let poset = poset_of_type(&triple).map_err(|e| e.to_string())?;
    let report = poset.dimension_report().map_err(|e| e.to_string())?;
    let points = triple.beta.largest();
    let nodes = poset
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, d)| NodeView {
            index: i,
            crossings: poset.crossings(i),
            dimension: poset.dimension(i),
            tableau: poset.tableau(i).label(),
            diagram: d.to_string(),
            sequence: d.to_sequence().to_string(),
            svg: svg::diagram(d, points),
        })
        .collect();
    to_json(&TypeView {
        triple: triple.to_string(),
        components: report.component_count,
        variety_dim: report.variety_dim,
        graded: poset.is_graded().graded,
        nodes,
        covers: poset.covers().iter().map(|&(i, j)| [i, j]).collect(),
        hasse: svg::hasse(&poset),
    })
}

#[derive(Serialize)]
struct SortState {
    sequence: String,
    crossings: usize,
    /// The move that produced this state; empty for the input.
    step: String,
    positions: Option<[usize; 2]>,
    svg: Option<String>,
}

#[derive(Serialize)]
struct SortView {
    states: Vec<SortState>,
    swaps: usize,
    phase_swaps: Vec<usize>,
}

/// Every intermediate sequence of a bubble sort, drawn when it is a valid
/// diagram. The input itself must be one.
pub fn sort_trace(sequence: &str, extended: bool) -> ApiResult {
    let seq: SourceTargetSeq = sequence.parse().map_err(|e: arcstrata::Error| e.to_string())?;
    if seq.is_empty() {
        return Err("the sequence is empty".into());
    }
    seq.to_diagram().map_err(|e| e.to_string())?;
    let (_, trace) = if extended {
        extended_bubble_sort(&seq).map_err(|e| e.to_string())?
    } else {
        classical_bubble_sort(&seq)
    };
    let points = seq.0.iter().filter_map(|s| s.source.finite()).chain(seq.0.iter().map(|s| s.target)).max().unwrap_or(1);
    let draw = |s: &SourceTargetSeq| s.to_diagram().ok().map(|d| svg::diagram(&d, points));
    let mut states = vec![SortState {
        sequence: seq.to_string(),
        crossings: seq.crossings(),
        step: String::new(),
        positions: None,
        svg: draw(&seq),
    }];
    for (state, step) in trace.replay(&seq).into_iter().zip(&trace.steps) {
        states.push(SortState {
            sequence: state.to_string(),
            crossings: state.crossings(),
            step: format!("{}: {}{} -> {}{}", step.kind, step.before[0], step.before[1], step.after[0], step.after[1]),
            positions: Some(step.positions),
            svg: draw(&state),
        });
    }
    to_json(&SortView { states, swaps: trace.swaps(), phase_swaps: trace.phases.iter().map(|p| p.swaps).collect() })
}

#[derive(Serialize)]
struct ChainView {
    below: bool,
    chain: Vec<String>,
}

/// A chain of box moves from `from` up to `to` in the degeneration order.
pub fn box_chain(from: &str, to: &str) -> ApiResult {
    let (a, b) = (partition("from", from)?, partition("to", to)?);
    let chain = a.box_chain(&b).map_err(|e| e.to_string())?;
    to_json(&ChainView {
        below: chain.is_some(),
        chain: chain.unwrap_or_default().iter().map(|p| format!("({p})")).collect(),
    })
}
