//! Bubble sorts on source-target sequences. Every swap exchanges two
//! neighbouring sources, which is a move of kind A or B on the diagram.

use serde::{Deserialize, Serialize};

use crate::arcs::{count_crossings, Source, SourceTargetSeq, Strand};
use crate::error::{Error, Result};
use crate::moves::MoveKind;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SortStep {
    /// 0-based indices of the two pairs in the full sequence. They are
    /// adjacent among the pairs not yet removed.
    pub positions: [usize; 2],
    pub before: [Strand; 2],
    pub after: [Strand; 2],
    pub crossings_before: usize,
    pub crossings_after: usize,
    pub kind: MoveKind,
}

/// One pass of steps (1)-(8) of the extended sort.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phase {
    /// Smallest source among the remaining pairs.
    pub min_source: Source,
    /// Full-sequence index where the sorted suffix starts.
    pub start: usize,
    pub swaps: usize,
    /// The remaining pairs from `start` on, after sorting.
    pub suffix: SourceTargetSeq,
    /// The pair settled and removed at the end of the phase.
    pub removed: Strand,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SortTrace {
    pub steps: Vec<SortStep>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phases: Vec<Phase>,
}

impl SortTrace {
    /// The sequence after each step, starting from `input`.
    pub fn replay(&self, input: &SourceTargetSeq) -> Vec<SourceTargetSeq> {
        let mut cur = input.0.clone();
        let mut out = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            cur[s.positions[0]] = s.after[0];
            cur[s.positions[1]] = s.after[1];
            out.push(SourceTargetSeq(cur.clone()));
        }
        out
    }

    pub fn swaps(&self) -> usize {
        self.steps.len()
    }
}

struct Sorter {
    seq: Vec<Strand>,
    steps: Vec<SortStep>,
}

impl Sorter {
    fn swap(&mut self, a: usize, b: usize) {
        let before = [self.seq[a], self.seq[b]];
        let crossings_before = count_crossings(&self.seq);
        let (ma, mb) = (self.seq[a].source, self.seq[b].source);
        self.seq[a].source = mb;
        self.seq[b].source = ma;
        let kind = if ma.is_infinite() { MoveKind::B } else { MoveKind::A };
        self.steps.push(SortStep {
            positions: [a, b],
            before,
            after: [self.seq[a], self.seq[b]],
            crossings_before,
            crossings_after: count_crossings(&self.seq),
            kind,
        });
    }

    /// Classical bubble sort on the listed positions, which are increasing
    /// indices into the full sequence.
    fn classical(&mut self, idx: &[usize]) -> usize {
        let start = self.steps.len();
        let x = idx.len();
        for y in (2..=x).rev() {
            for i in 0..y - 1 {
                let (a, b) = (idx[i], idx[i + 1]);
                if self.seq[b].source < self.seq[a].source {
                    self.swap(a, b);
                }
            }
        }
        self.steps.len() - start
    }
}

pub fn classical_bubble_sort(s: &SourceTargetSeq) -> (SourceTargetSeq, SortTrace) {
    let mut sorter = Sorter { seq: s.0.clone(), steps: Vec::new() };
    let idx: Vec<usize> = (0..s.len()).collect();
    sorter.classical(&idx);
    (SourceTargetSeq(sorter.seq), SortTrace { steps: sorter.steps, phases: Vec::new() })
}

/// Repeatedly settles the pair with the smallest source: the suffix starting
/// at the largest target below that source is bubble-sorted, after which its
/// first pair is crossing-free and is removed. Removed pairs keep their
/// places, so the output is the full sorted sequence.
pub fn extended_bubble_sort(s: &SourceTargetSeq) -> Result<(SourceTargetSeq, SortTrace)> {
    let mut sorter = Sorter { seq: s.0.clone(), steps: Vec::new() };
    let mut active: Vec<usize> = (0..s.len()).collect();
    let mut phases = Vec::new();
    loop {
        let current: Vec<Strand> = active.iter().map(|&i| sorter.seq[i]).collect();
        if count_crossings(&current) == 0 {
            break;
        }
        // (1) leftmost minimal source
        let j = (0..active.len())
            .min_by_key(|&t| (sorter.seq[active[t]].source, t))
            .expect("a crossing needs two pairs");
        let mj = sorter.seq[active[j]].source;
        // (2) first position holding the largest target below m_j
        let below = active.iter().map(|&i| sorter.seq[i].target).filter(|&n| mj.exceeds(n)).max();
        let Some(nk) = below else {
            return Err(Error::Internal(format!("no target lies below the source {mj}")));
        };
        let k = active.iter().position(|&i| sorter.seq[i].target == nk).expect("target present");
        // (3) sort the suffix
        let swaps = sorter.classical(&active[k..]);
        // (4) the settled pair carries m_j and crosses nothing
        let settled = sorter.seq[active[k]];
        let rest: Vec<Strand> = active.iter().map(|&i| sorter.seq[i]).collect();
        if settled.source != mj || rest.iter().any(|o| o.crosses(&settled)) {
            return Err(Error::Internal(format!("settled pair {settled} is not crossing-free")));
        }
        let suffix = SourceTargetSeq(rest[k..].to_vec());
        phases.push(Phase { min_source: mj, start: active[k], swaps, suffix, removed: settled });
        // (5)-(7)
        active.remove(k);
    }
    Ok((SourceTargetSeq(sorter.seq), SortTrace { steps: sorter.steps, phases }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arcs::diagrams_of_type;
    use crate::moves::{down_moves, Direction, Move};
    use crate::tableaux::nonempty_triples;

    fn seq(s: &str) -> SourceTargetSeq {
        s.parse().unwrap()
    }

    #[test]
    fn classical_run_matches_the_worked_example() {
        let input = seq("(inf,4),(6,3),(7,2),(5,1)");
        let (out, trace) = classical_bubble_sort(&input);
        assert_eq!(out, seq("(5,4),(6,3),(7,2),(inf,1)"));
        let states: Vec<String> = trace.replay(&input).iter().map(|s| s.to_string()).collect();
        assert_eq!(
            states,
            vec![
                "(6,4),(inf,3),(7,2),(5,1)",
                "(6,4),(7,3),(inf,2),(5,1)",
                "(6,4),(7,3),(5,2),(inf,1)",
                "(6,4),(5,3),(7,2),(inf,1)",
                "(5,4),(6,3),(7,2),(inf,1)",
            ]
        );
        let crossings: Vec<usize> = trace.steps.iter().map(|s| s.crossings_after).collect();
        assert_eq!(crossings, vec![4, 3, 2, 1, 0]);
    }

    #[test]
    fn classical_small_cases() {
        let sorted = seq("(5,3),(6,2),(7,1)");
        let (out, trace) = classical_bubble_sort(&sorted);
        assert_eq!((out, trace.swaps()), (sorted, 0));
        let (out, trace) = classical_bubble_sort(&seq("(7,2),(5,1)"));
        assert_eq!((out, trace.swaps()), (seq("(5,2),(7,1)"), 1));
        assert_eq!(trace.steps[0].kind, MoveKind::A);
    }

    #[test]
    fn extended_run_matches_the_worked_example() {
        let input =
            seq("(16,15),(17,14),(inf,13),(18,9),(10,8),(11,7),(inf,6),(inf,4),(5,3),(inf,2),(12,1)");
        let (out, trace) = extended_bubble_sort(&input).unwrap();
        assert_eq!(
            out,
            seq("(16,15),(17,14),(18,13),(10,9),(11,8),(12,7),(inf,6),(5,4),(inf,3),(inf,2),(inf,1)")
        );
        let swaps: Vec<usize> = trace.phases.iter().map(|p| p.swaps).collect();
        assert_eq!(swaps, vec![3, 4, 0, 0, 1]);
        assert_eq!(trace.swaps(), 8);
        assert_eq!(input.crossings(), 8);
        let suffixes: Vec<String> = trace.phases.iter().map(|p| p.suffix.to_string()).collect();
        assert_eq!(suffixes[0], "(5,4),(12,3),(inf,2),(inf,1)");
        assert_eq!(suffixes[1], "(10,9),(11,8),(12,7),(18,6),(inf,3),(inf,2),(inf,1)");
        assert_eq!(suffixes[4], "(16,15),(17,14),(18,13),(inf,6),(inf,3),(inf,2),(inf,1)");
        let states = trace.replay(&input);
        assert_eq!(states[2].0[7..].to_vec(), seq("(5,4),(12,3),(inf,2),(inf,1)").0);
        assert_eq!(states[6].0[3..].to_vec(), seq("(10,9),(11,8),(12,7),(18,6),(5,4),(inf,3),(inf,2),(inf,1)").0);
    }

    #[test]
    fn extended_small_cases() {
        let free = seq("(5,3),(6,2),(7,1)");
        let (out, trace) = extended_bubble_sort(&free).unwrap();
        assert_eq!((out, trace.swaps()), (free, 0));
        let input = seq("(inf,4),(6,3),(7,2),(5,1)");
        let (out, _) = extended_bubble_sort(&input).unwrap();
        assert_eq!(out, classical_bubble_sort(&input).0);
    }

    #[test]
    fn swaps_are_down_moves_and_reduce_by_one() {
        for triple in nonempty_triples(8) {
            for d in diagrams_of_type(&triple).unwrap() {
                let input = d.to_sequence();
                let (out, trace) = extended_bubble_sort(&input).unwrap();
                let result = out.to_diagram().unwrap();
                assert!(result.is_dominant());
                assert_eq!(result.lr_type(&triple.beta, &triple.gamma), d.lr_type(&triple.beta, &triple.gamma));
                let mut cur = d.clone();
                for step in &trace.steps {
                    let mv = Move { kind: step.kind, direction: Direction::Down, pairs_before: step.before, pairs_after: step.after };
                    let next = mv.apply(&cur).expect("swapped pairs are present");
                    if next == cur {
                        // equal targets: only possible with a repeated pole
                        assert!(!d.has_distinct_poles(), "{d}: {step:?}");
                        continue;
                    }
                    let found = down_moves(&cur).into_iter().any(|(m, x)| m.kind == step.kind && x == next);
                    assert!(found, "{d}: {step:?}");
                    cur = next;
                }
                assert_eq!(cur, result);
                if d.has_distinct_poles() {
                    assert!(trace.steps.iter().all(|s| s.crossings_before == s.crossings_after + 1), "{d}");
                    assert_eq!(trace.swaps(), d.crossings());
                }
            }
        }
    }
}
