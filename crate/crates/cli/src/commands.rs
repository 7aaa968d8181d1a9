use std::fmt::Write as _;

use arcstrata::arcs::ArcDiagram;
use arcstrata::bubblesort::{classical_bubble_sort, extended_bubble_sort, SortTrace};
use arcstrata::fforacle::count_report;
use arcstrata::posets::{bruhat_check, permutation_tableau, poset_of_tableau, poset_of_type, tableau_poset, DiagramPoset};
use arcstrata::tableaux::{klein_enumerate, lr_enumerate, nonempty_triples, KleinTableau, LrTableau, PartitionTriple};
use arcstrata::{Partition, SourceTargetSeq};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::{read_input, Command, Failure, Format, OptionalType, TypeArgs};

type Out = Result<String, Failure>;

fn partition(what: &str, s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("{what}: {e}")))
}

fn triple(ty: &TypeArgs) -> Result<PartitionTriple, Failure> {
    let t = PartitionTriple::new(
        partition("alpha", &ty.alpha)?,
        partition("beta", &ty.beta)?,
        partition("gamma", &ty.gamma)?,
    );
    t.check()?;
    Ok(t)
}

fn optional_triple(ty: &OptionalType) -> Result<Option<PartitionTriple>, Failure> {
    match (&ty.alpha, &ty.beta, &ty.gamma) {
        (None, None, None) => Ok(None),
        (a, Some(b), g) => triple(&TypeArgs {
            alpha: a.clone().unwrap_or_default(),
            beta: b.clone(),
            gamma: g.clone().unwrap_or_default(),
        })
        .map(Some),
        _ => Err(Failure::Usage("a type needs at least --beta".into())),
    }
}

/// JSON output: the command, its arguments verbatim, and the result.
fn envelope(command: &str, argv: &[String], result: impl Serialize) -> Out {
    let value = json!({ "command": command, "argv": argv, "result": result });
    let mut s = serde_json::to_string_pretty(&value).map_err(|e| Failure::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn no_dot(command: &str) -> Failure {
    Failure::Usage(format!("`{command}` has no dot output; use text or json"))
}

fn pick(tabs: &[LrTableau], index: usize) -> Result<&LrTableau, Failure> {
    tabs.get(index)
        .ok_or_else(|| Failure::Usage(format!("tableau index {index} out of range ({} tableaux)", tabs.len())))
}

pub fn run(command: &Command, format: Format, argv: &[String]) -> Out {
    match command {
        Command::Lr(ty) => lr(&triple(ty)?, format, argv),
        Command::Klein { ty, tableau_index } => klein(&triple(ty)?, *tableau_index, format, argv),
        Command::Diagrams { ty, draw } => diagrams(&triple(ty)?, *draw, format, argv),
        Command::Poset { ty, tableau_index } => {
            let t = triple(ty)?;
            let poset = match tableau_index {
                Some(i) => poset_of_tableau(pick(&lr_enumerate(&t)?, *i)?)?,
                None => poset_of_type(&t)?,
            };
            poset_out("poset", &poset, false, format, argv)
        }
        Command::Hasse(ty) => poset_out("hasse", &poset_of_type(&triple(ty)?)?, true, format, argv),
        Command::Chains { ty, from, to } => chains(&triple(ty)?, from, to, format, argv),
        Command::Graded { ty, sample, max_beta, seed } => graded(optional_triple(ty)?, *sample, *max_beta, *seed, format, argv),
        Command::Bruhat { ty, tableau_index, x } => bruhat(ty, *tableau_index, *x, format, argv),
        Command::Sort { input, extended, trace } => sort(input, *extended, *trace, format, argv),
        Command::Dims(ty) => dims(&triple(ty)?, format, argv),
        Command::Verify { ty, primes, orbits, limit } => verify(&triple(ty)?, primes, *orbits, *limit, format, argv),
        Command::Dbar(ty) => dbar(&triple(ty)?, format, argv),
        Command::Boxchain { from, to } => boxchain(from, to, format, argv),
    }
}

#[derive(Serialize)]
struct TableauRow<'a> {
    index: usize,
    label: String,
    intermediate: String,
    #[serde(flatten)]
    tableau: &'a LrTableau,
}

fn lr(t: &PartitionTriple, format: Format, argv: &[String]) -> Out {
    let tabs = lr_enumerate(t)?;
    match format {
        Format::Json => {
            let rows: Vec<TableauRow> = tabs
                .iter()
                .enumerate()
                .map(|(index, tableau)| TableauRow {
                    index,
                    label: tableau.label(),
                    intermediate: tableau.intermediate_partition().to_string(),
                    tableau,
                })
                .collect();
            envelope("lr", argv, rows)
        }
        Format::Text => {
            let mut out = format!("{t}\nc = {}\n", tabs.len());
            for (i, tab) in tabs.iter().enumerate() {
                let _ = writeln!(out, "\n[{i}] G{}  intermediate ({})", tab.label(), tab.intermediate_partition());
                out.push_str(&tab.to_string());
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("lr")),
    }
}

#[derive(Serialize)]
struct KleinRow<'a> {
    tableau_index: usize,
    label: String,
    #[serde(flatten)]
    klein: &'a KleinTableau,
    diagram: ArcDiagram,
}

fn klein(t: &PartitionTriple, only: Option<usize>, format: Format, argv: &[String]) -> Out {
    let tabs = lr_enumerate(t)?;
    let chosen: Vec<usize> = match only {
        Some(i) => {
            pick(&tabs, i)?;
            vec![i]
        }
        None => (0..tabs.len()).collect(),
    };
    let ks: Vec<(usize, KleinTableau)> =
        chosen.iter().flat_map(|&i| klein_enumerate(&tabs[i]).into_iter().map(move |k| (i, k))).collect();
    match format {
        Format::Json => {
            let rows: Vec<KleinRow> = ks
                .iter()
                .map(|(i, k)| KleinRow {
                    tableau_index: *i,
                    label: tabs[*i].label(),
                    klein: k,
                    diagram: ArcDiagram::from_klein(k),
                })
                .collect();
            envelope("klein", argv, rows)
        }
        Format::Text => {
            let mut out = format!("{t}\n{} Klein tableaux\n", ks.len());
            for (i, k) in &ks {
                let subs: Vec<String> = k
                    .subscripts
                    .iter()
                    .map(|(row, s)| {
                        let list: Vec<String> = s.iter().map(u32::to_string).collect();
                        format!("row {row}: {}", list.join(","))
                    })
                    .collect();
                let _ = writeln!(out, "G{} [{i}]  {}  -> {}", tabs[*i].label(), subs.join("; "), ArcDiagram::from_klein(k));
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("klein")),
    }
}

#[derive(Serialize)]
struct DiagramRow<'a> {
    index: usize,
    #[serde(flatten)]
    diagram: &'a ArcDiagram,
    crossings: usize,
    dimension: i64,
    tableau: String,
    sequence: String,
}

fn diagram_rows(poset: &DiagramPoset) -> Vec<DiagramRow<'_>> {
    poset
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, d)| DiagramRow {
            index: i,
            diagram: d,
            crossings: poset.crossings(i),
            dimension: poset.dimension(i),
            tableau: poset.tableau(i).label(),
            sequence: d.to_sequence().to_string(),
        })
        .collect()
}

fn node_line(poset: &DiagramPoset, i: usize) -> String {
    format!(
        "[{i}] x={} dim={} G{}  {}",
        poset.crossings(i),
        poset.dimension(i),
        poset.tableau(i).label(),
        poset.nodes()[i]
    )
}

/// Diagrams are listed in the node order of the type's poset, so indices
/// agree with `poset`, `hasse` and `chains`.
fn diagrams(t: &PartitionTriple, draw: bool, format: Format, argv: &[String]) -> Out {
    let poset = poset_of_type(t)?;
    match format {
        Format::Json => envelope("diagrams", argv, diagram_rows(&poset)),
        Format::Text => {
            let mut out = format!("{t}\n{} diagrams\n", poset.len());
            for i in 0..poset.len() {
                let _ = writeln!(out, "{}", node_line(&poset, i));
                if draw {
                    out.push_str(&poset.nodes()[i].render_ascii(Some(t.beta.largest())));
                    out.push('\n');
                }
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("diagrams")),
    }
}

fn poset_out(command: &str, poset: &DiagramPoset, levels: bool, format: Format, argv: &[String]) -> Out {
    match format {
        Format::Dot => Ok(poset.to_dot()),
        Format::Json => envelope(command, argv, poset.to_json()),
        Format::Text => {
            let mut out = format!("{}\n{} nodes, {} covers, height {}\n", poset.triple(), poset.len(), poset.covers().len(), poset.height());
            if levels {
                let top = (0..poset.len()).map(|i| poset.crossings(i)).max().unwrap_or(0);
                for x in (0..=top).rev() {
                    let at: Vec<usize> = (0..poset.len()).filter(|&i| poset.crossings(i) == x).collect();
                    if at.is_empty() {
                        continue;
                    }
                    let _ = writeln!(out, "x = {x} (dim {})", poset.dimension(at[0]));
                    for i in at {
                        let ups: Vec<String> =
                            poset.covers().iter().filter(|c| c.0 == i).map(|c| c.1.to_string()).collect();
                        let _ = writeln!(out, "  {}  covered by [{}]", node_line(poset, i), ups.join(","));
                    }
                }
            } else {
                for i in 0..poset.len() {
                    let _ = writeln!(out, "{}", node_line(poset, i));
                }
                out.push_str("covers:\n");
                for (i, j) in poset.covers() {
                    let _ = writeln!(out, "  {i} -> {j}");
                }
            }
            let list = |v: Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let _ = writeln!(out, "minimal: {}\nmaximal: {}", list(poset.minimal()), list(poset.maximal()));
            Ok(out)
        }
    }
}

/// A node given as an index into the listing or as diagram JSON.
fn node(poset: &DiagramPoset, spec: &str) -> Result<usize, Failure> {
    if let Ok(i) = spec.trim().parse::<usize>() {
        if i >= poset.len() {
            return Err(arcstrata::Error::NodeIndex { index: i, len: poset.len() }.into());
        }
        return Ok(i);
    }
    let d: ArcDiagram =
        serde_json::from_str(spec).map_err(|e| Failure::Usage(format!("not an index or diagram JSON: {e}")))?;
    poset.index_of(&d).ok_or_else(|| Failure::Usage(format!("{d} is not a diagram of this type")))
}

fn chains(t: &PartitionTriple, from: &str, to: &str, format: Format, argv: &[String]) -> Out {
    let poset = poset_of_type(t)?;
    let (a, b) = (node(&poset, from)?, node(&poset, to)?);
    let chains = poset.saturated_chains(a, b)?;
    match format {
        Format::Json => envelope("chains", argv, json!({ "from": a, "to": b, "chains": chains })),
        Format::Text => {
            let mut out = format!("{} saturated chains from [{a}] to [{b}]\n", chains.len());
            for c in &chains {
                let steps: Vec<String> = c.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "length {}: {}", c.len() - 1, steps.join(" -> "));
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("chains")),
    }
}

#[derive(Serialize)]
struct GradedRow {
    alpha: String,
    beta: String,
    gamma: String,
    nodes: usize,
    #[serde(flatten)]
    report: arcstrata::posets::GradedReport,
}

fn graded(t: Option<PartitionTriple>, sample: usize, max_beta: u32, seed: u64, format: Format, argv: &[String]) -> Out {
    let triples = match t {
        Some(t) => vec![t],
        None => {
            let strips: Vec<PartitionTriple> =
                nonempty_triples(max_beta).into_iter().filter(PartitionTriple::is_vertical_strip).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            strips.choose_multiple(&mut rng, sample).cloned().collect()
        }
    };
    let mut rows = Vec::new();
    for t in &triples {
        let poset = poset_of_type(t)?;
        rows.push(GradedRow {
            alpha: t.alpha.to_string(),
            beta: t.beta.to_string(),
            gamma: t.gamma.to_string(),
            nodes: poset.len(),
            report: poset.is_graded(),
        });
    }
    match format {
        Format::Json => envelope("graded", argv, rows),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = write!(out, "alpha=({}) beta=({}) gamma=({}): ", r.alpha, r.beta, r.gamma);
                match &r.report.witness {
                    None => out.push_str("graded\n"),
                    Some(w) => {
                        let lengths: Vec<String> = w.lengths.iter().map(usize::to_string).collect();
                        let _ = writeln!(
                            out,
                            "not graded: saturated chains from [{}] to [{}] have lengths {}",
                            w.from,
                            w.to,
                            lengths.join(",")
                        );
                    }
                }
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("graded")),
    }
}

fn bruhat(ty: &OptionalType, index: Option<usize>, x: Option<u32>, format: Format, argv: &[String]) -> Out {
    let tableau = match (x, optional_triple(ty)?) {
        (Some(x), None) => permutation_tableau(x),
        (None, Some(t)) => {
            let tabs = lr_enumerate(&t)?;
            match index {
                Some(i) => pick(&tabs, i)?.clone(),
                None if tabs.len() == 1 => tabs[0].clone(),
                None => return Err(Failure::Usage(format!("the type has {} tableaux; pass --tableau-index", tabs.len()))),
            }
        }
        _ => return Err(Failure::Usage("pass either --x or a type".into())),
    };
    let report = bruhat_check(&tableau)?;
    match format {
        Format::Json => envelope("bruhat", argv, report),
        Format::Text => {
            let mut out = format!(
                "x = {}, {} diagrams, bijective: {}, isomorphic: {}, height {} (Bruhat {})\n",
                report.x, report.nodes, report.bijective, report.isomorphic, report.height, report.bruhat_height
            );
            for (i, w) in report.permutations.iter().enumerate() {
                let word: Vec<String> = w.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "[{i}] {}", word.join(""));
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("bruhat")),
    }
}

fn trace_lines(trace: &SortTrace) -> String {
    let mut out = String::new();
    for (n, s) in trace.steps.iter().enumerate() {
        let _ = writeln!(
            out,
            "step {}: {} at {},{}: {}{} -> {}{}, crossings {} -> {}",
            n + 1,
            s.kind,
            s.positions[0],
            s.positions[1],
            s.before[0],
            s.before[1],
            s.after[0],
            s.after[1],
            s.crossings_before,
            s.crossings_after
        );
    }
    out
}

fn sort(input: &str, extended: bool, trace: bool, format: Format, argv: &[String]) -> Out {
    let text = read_input(input)?;
    let seq: SourceTargetSeq = text.parse()?;
    let (sorted, steps) = if extended { extended_bubble_sort(&seq)? } else { classical_bubble_sort(&seq) };
    match format {
        Format::Json => {
            let mut result = json!({
                "input": seq.to_string(),
                "output": sorted.to_string(),
                "crossings": seq.crossings(),
                "swaps": steps.swaps(),
            });
            if trace {
                result["trace"] = serde_json::to_value(&steps).map_err(|e| Failure::Internal(e.to_string()))?;
            }
            envelope("sort", argv, result)
        }
        Format::Text => {
            let mut out = if trace { trace_lines(&steps) } else { String::new() };
            let _ = writeln!(out, "sorted: {sorted}");
            let _ = writeln!(out, "swaps: {}, crossings: {} -> {}", steps.swaps(), seq.crossings(), sorted.crossings());
            Ok(out)
        }
        Format::Dot => Err(no_dot("sort")),
    }
}

fn dims(t: &PartitionTriple, format: Format, argv: &[String]) -> Out {
    let poset = poset_of_type(t)?;
    let report = poset.dimension_report()?;
    match format {
        Format::Json => envelope("dims", argv, report),
        Format::Text => {
            let mut out = format!(
                "{t}\nhall degree n(beta)-n(alpha)-n(gamma) = {}\naut degree |alpha|+2n(alpha) = {}\nvariety dim = {}\ncomponents = {}{}\n",
                report.hall_degree,
                report.aut_degree,
                report.variety_dim,
                report.component_count,
                if report.empty { " (empty)" } else { "" }
            );
            for (i, s) in report.strata.iter().enumerate() {
                let _ = writeln!(out, "[{i}] x={} dim={}  {}", s.crossings, s.dim, s.diagram);
            }
            Ok(out)
        }
        Format::Dot => Err(no_dot("dims")),
    }
}

fn verify(t: &PartitionTriple, primes: &[u64], orbits: bool, limit: u64, format: Format, argv: &[String]) -> Out {
    let report = count_report(t, primes, orbits, limit)?;
    let ok = report.all_ok();
    let out = match format {
        Format::Json => envelope("verify", argv, json!({ "ok": ok, "report": report }))?,
        Format::Text => {
            let mut out = format!("{t}\n");
            for r in &report.rows {
                let _ = write!(
                    out,
                    "p={}: embeddings {} = |Aut| {} * submodules {}: {}",
                    r.p,
                    r.mono_count,
                    r.aut_alpha,
                    r.submodule_count,
                    if r.fibration { "ok" } else { "FAILS" }
                );
                if let Some(o) = r.orbit_count {
                    let _ = write!(out, ", orbits {o}");
                }
                out.push('\n');
            }
            if let Some(d) = report.diagram_count {
                let _ = writeln!(out, "arc diagrams: {d}");
            }
            if let Some(poly) = &report.polynomial {
                let _ = writeln!(
                    out,
                    "polynomial (constant term first): {}; expected degree {}, leading {}: {}",
                    poly.coefficients.join(" "),
                    poly.expected_degree,
                    poly.expected_leading,
                    if poly.matches { "ok" } else { "FAILS" }
                );
            }
            let _ = writeln!(out, "{}", if ok { "all identities hold" } else { "verification failed" });
            out
        }
        Format::Dot => return Err(no_dot("verify")),
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn dbar(t: &PartitionTriple, format: Format, argv: &[String]) -> Out {
    let tp = tableau_poset(t)?;
    match format {
        Format::Dot => Ok(tp.to_dot()),
        Format::Json => envelope("dbar", argv, &tp),
        Format::Text => {
            let mut out = format!("{t}\n");
            for (i, tab) in tp.nodes.iter().enumerate() {
                let _ = writeln!(out, "[{i}] G{}  intermediate ({})", tab.label(), tab.intermediate_partition());
            }
            out.push_str("covers:\n");
            for [i, j] in &tp.covers {
                let _ = writeln!(out, "  G{} -> G{}", tp.nodes[*i].label(), tp.nodes[*j].label());
            }
            let label = |i: Option<usize>| i.map_or("none".to_string(), |i| format!("G{}", tp.nodes[i].label()));
            let _ = writeln!(out, "minimum: {}\nmaximum: {}", label(tp.minimum), label(tp.maximum));
            Ok(out)
        }
    }
}

fn boxchain(from: &str, to: &str, format: Format, argv: &[String]) -> Out {
    let (lambda, mu) = (partition("from", from)?, partition("to", to)?);
    let chain = lambda.box_chain(&mu)?;
    match format {
        Format::Json => {
            let steps = chain.as_ref().map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>());
            envelope("boxchain", argv, json!({ "from": from, "to": to, "leq": chain.is_some(), "chain": steps }))
        }
        Format::Text => Ok(match chain {
            Some(c) => {
                let steps: Vec<String> = c.iter().map(|p| format!("({p})")).collect();
                format!("{}\n{} box moves\n", steps.join(" -> "), c.len() - 1)
            }
            None => format!("({lambda}) is not below ({mu}) in the degeneration order\n"),
        }),
        Format::Dot => Err(no_dot("boxchain")),
    }
}
