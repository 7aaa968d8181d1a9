//! One PASS/FAIL line per acceptance criterion. Run with `--nocapture` to
//! see the lines.

use std::collections::BTreeSet;

use arcstrata::arcs::{diagrams_of_type, ArcDiagram, SourceTargetSeq};
use arcstrata::bubblesort::{classical_bubble_sort, extended_bubble_sort};
use arcstrata::dims::{aut_degree, dimension_report, hall_degree};
use arcstrata::fforacle::{
    aut_order, count_monos, count_submodules, interpolate_hall, orbit_count, DEFAULT_LIMIT,
};
use arcstrata::partitions::{partitions_of, Partition};
use arcstrata::posets::{bruhat_check, permutation_tableau, poset_of_type, tableau_poset};
use arcstrata::tableaux::{klein_enumerate, lr_enumerate, nonempty_triples, PartitionTriple};
use num_bigint::BigUint;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(a: &str, b: &str, g: &str) -> PartitionTriple {
    PartitionTriple::new(p(a), p(b), p(g))
}

fn running() -> PartitionTriple {
    t("2,2,1,1", "4,3,3,2,2,1", "3,2,2,1,1")
}

fn d(arcs: &[(u32, u32)], poles: &[u32]) -> ArcDiagram {
    ArcDiagram::new(arcs.iter().copied(), poles.iter().copied()).unwrap()
}

fn seq(s: &str) -> SourceTargetSeq {
    s.parse().unwrap()
}

fn running_example() -> Check {
    let triple = running();
    let tabs = lr_enumerate(&triple).map_err(|e| e.to_string())?;
    ensure!(tabs.len() == 4, "c = {}", tabs.len());
    let g43 = tabs.iter().find(|x| x.label() == "43").ok_or("no tableau 43")?;
    let subs: Vec<(Vec<u32>, Vec<u32>)> =
        klein_enumerate(g43).iter().map(|k| (k.subscripts_of(3).to_vec(), k.subscripts_of(4).to_vec())).collect();
    let expected: Vec<(Vec<u32>, Vec<u32>)> =
        vec![(vec![1], vec![2]), (vec![1], vec![3]), (vec![2], vec![1]), (vec![2], vec![2]), (vec![2], vec![3])];
    ensure!(subs == expected, "Klein refinements {subs:?}");
    let ds = diagrams_of_type(&triple).map_err(|e| e.to_string())?;
    ensure!(ds.len() == 10, "{} diagrams", ds.len());
    let mut xs: Vec<usize> = ds.iter().map(ArcDiagram::crossings).collect();
    xs.sort();
    ensure!(xs == [0, 0, 0, 0, 1, 1, 2, 2, 2, 3], "crossings {xs:?}");
    Ok(())
}

fn hasse() -> Check {
    let poset = poset_of_type(&running()).map_err(|e| e.to_string())?;
    ensure!(poset.minimal().len() == 4, "{} minimal", poset.minimal().len());
    let top = d(&[(4, 2), (3, 1)], &[2, 3]);
    let max = poset.maximal();
    ensure!(max.len() == 1 && poset.nodes()[max[0]] == top, "maximal {max:?}");
    let bottom = poset.index_of(&d(&[(4, 3), (3, 2)], &[1, 2])).ok_or("no 43_0")?;
    let lengths: BTreeSet<usize> =
        poset.saturated_chains(bottom, max[0]).map_err(|e| e.to_string())?.iter().map(|c| c.len() - 1).collect();
    ensure!(lengths == BTreeSet::from([2, 3]), "chain lengths {lengths:?}");
    let two_a = poset.index_of(&d(&[(4, 3), (3, 1)], &[2, 2])).ok_or("no 43_2a")?;
    ensure!(poset.covers().contains(&(bottom, two_a)), "43_0 -> 43_2a is not a cover");
    ensure!(poset.crossings(two_a) - poset.crossings(bottom) == 2, "crossing gap");
    ensure!(poset.dimension(bottom) - poset.dimension(two_a) == 2, "dimension gap");
    Ok(())
}

fn dimensions() -> Check {
    let triple = running();
    ensure!(hall_degree(&triple) == 8, "hall degree {}", hall_degree(&triple));
    ensure!(aut_degree(&triple.alpha) == 20, "aut degree {}", aut_degree(&triple.alpha));
    let ds = diagrams_of_type(&triple).map_err(|e| e.to_string())?;
    let r = dimension_report(&triple, Some(&ds)).map_err(|e| e.to_string())?;
    ensure!(r.variety_dim == 28, "variety dim {}", r.variety_dim);
    for s in &r.strata {
        ensure!(s.dim == 28 - s.crossings as i64, "stratum {} has dim {}", s.diagram, s.dim);
    }
    Ok(())
}

fn bubble_sorts() -> Check {
    let input = seq("(inf,4),(6,3),(7,2),(5,1)");
    let (out, trace) = classical_bubble_sort(&input);
    let states: Vec<String> = trace.replay(&input).iter().map(ToString::to_string).collect();
    let expected = [
        "(6,4),(inf,3),(7,2),(5,1)",
        "(6,4),(7,3),(inf,2),(5,1)",
        "(6,4),(7,3),(5,2),(inf,1)",
        "(6,4),(5,3),(7,2),(inf,1)",
        "(5,4),(6,3),(7,2),(inf,1)",
    ];
    ensure!(states == expected, "classical states {states:?}");
    ensure!(trace.swaps() == 5 && out == seq("(5,4),(6,3),(7,2),(inf,1)"), "classical output {out}");

    let input = seq("(16,15),(17,14),(inf,13),(18,9),(10,8),(11,7),(inf,6),(inf,4),(5,3),(inf,2),(12,1)");
    let (out, trace) = extended_bubble_sort(&input).map_err(|e| e.to_string())?;
    let phase = |i: usize| trace.phases[i].suffix.to_string();
    ensure!(trace.phases.len() == 5, "{} phases", trace.phases.len());
    ensure!(phase(0) == "(5,4),(12,3),(inf,2),(inf,1)", "first suffix {}", phase(0));
    ensure!(phase(1) == "(10,9),(11,8),(12,7),(18,6),(inf,3),(inf,2),(inf,1)", "second suffix {}", phase(1));
    ensure!(phase(4) == "(16,15),(17,14),(18,13),(inf,6),(inf,3),(inf,2),(inf,1)", "last suffix {}", phase(4));
    let final_seq = "(16,15),(17,14),(18,13),(10,9),(11,8),(12,7),(inf,6),(5,4),(inf,3),(inf,2),(inf,1)";
    ensure!(out == seq(final_seq), "extended output {out}");
    let nonzero: Vec<usize> = trace.phases.iter().map(|p| p.swaps).filter(|&s| s > 0).collect();
    ensure!(nonzero == [3, 4, 1], "phase swaps {nonzero:?}");
    Ok(())
}

fn by_one() -> Check {
    let mut checked = 0;
    for triple in nonempty_triples(9) {
        for d in diagrams_of_type(&triple).map_err(|e| e.to_string())? {
            if !d.has_distinct_poles() {
                continue;
            }
            let (_, trace) = extended_bubble_sort(&d.to_sequence()).map_err(|e| format!("{d}: {e}"))?;
            ensure!(trace.steps.iter().all(|s| s.crossings_before == s.crossings_after + 1), "{d}: a swap not by one");
            ensure!(trace.swaps() == d.crossings(), "{d}: {} swaps for {} crossings", trace.swaps(), d.crossings());
            checked += 1;
        }
    }
    ensure!(checked > 1000, "only {checked} diagrams");
    Ok(())
}

fn gradedness() -> Check {
    let strips: Vec<PartitionTriple> =
        nonempty_triples(10).into_iter().filter(PartitionTriple::is_vertical_strip).collect();
    ensure!(strips.len() >= 200, "only {} vertical strips", strips.len());
    for triple in &strips {
        let report = poset_of_type(triple).map_err(|e| e.to_string())?.is_graded();
        ensure!(report.graded, "{triple} is not graded: {:?}", report.witness);
    }
    let report = poset_of_type(&running()).map_err(|e| e.to_string())?.is_graded();
    ensure!(!report.graded, "running example reported graded");
    let w = report.witness.ok_or("no witness")?;
    ensure!(w.lengths == [2, 3], "witness lengths {:?}", w.lengths);
    Ok(())
}

fn bruhat() -> Check {
    for x in 2..=4u32 {
        let r = bruhat_check(&permutation_tableau(x)).map_err(|e| e.to_string())?;
        let fact: usize = (1..=x as usize).product();
        ensure!(r.nodes == fact, "x={x}: {} nodes", r.nodes);
        ensure!(r.bijective && r.isomorphic, "x={x}: not isomorphic");
        let h = (x * (x - 1) / 2) as usize;
        ensure!(r.height == h && r.bruhat_height == h, "x={x}: heights {} {}", r.height, r.bruhat_height);
    }
    Ok(())
}

fn coarse_poset() -> Check {
    let tp = tableau_poset(&running()).map_err(|e| e.to_string())?;
    let label = |i: usize| tp.nodes[i].label();
    let covers: BTreeSet<(String, String)> = tp.covers.iter().map(|&[a, b]| (label(a), label(b))).collect();
    let diamond: BTreeSet<(String, String)> = [("32", "42"), ("32", "33"), ("42", "43"), ("33", "43")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    ensure!(covers == diamond, "covers {covers:?}");
    let mut types = 0;
    for triple in nonempty_triples(8) {
        tableau_poset(&triple).map_err(|e| format!("{triple}: {e}"))?;
        types += 1;
    }
    ensure!(types > 100, "only {types} types");
    Ok(())
}

fn box_order() -> Check {
    for n in 0..=10 {
        let parts = partitions_of(n);
        for lambda in &parts {
            for mu in &parts {
                let leq = lambda.leq_deg(mu).map_err(|e| e.to_string())?;
                match lambda.box_chain(mu).map_err(|e| e.to_string())? {
                    None => ensure!(!leq, "{lambda:?} <= {mu:?} without a chain"),
                    Some(chain) => {
                        ensure!(leq, "chain for {lambda:?} -> {mu:?} outside the order");
                        ensure!(chain.first() == Some(lambda) && chain.last() == Some(mu), "endpoints");
                        for w in chain.windows(2) {
                            ensure!(w[0].is_box_move_to(&w[1]), "{:?} -> {:?} is not a box move", w[0], w[1]);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn finite_fields() -> Check {
    let err = |e: arcstrata::Error| e.to_string();
    let instances = [
        (t("1", "2,1", "2"), 2),
        (t("1", "2,1", "1,1"), 2),
        (t("1", "1,1,1", "1,1"), 2),
        (t("1", "1,1,1", "1,1"), 3),
        (t("1,1", "2,1,1", "2"), 2),
        (t("2,1", "3,2,1", "2,1"), 2),
        (t("2", "3,1", "2"), 3),
    ];
    for (triple, q) in &instances {
        let monos = count_monos(triple, *q, DEFAULT_LIMIT).map_err(err)?;
        let subs = count_submodules(triple, *q, DEFAULT_LIMIT).map_err(err)?;
        let aut = aut_order(&triple.alpha, *q).map_err(err)?;
        ensure!(BigUint::from(monos) == aut * BigUint::from(subs), "{triple} at {q}: fibration fails");
    }
    let two = count_submodules(&t("1", "2,1", "2"), 2, DEFAULT_LIMIT).map_err(err)?;
    ensure!(two == 2, "count {two} instead of 2");
    for (q, n) in [(2, 7), (3, 13), (5, 31)] {
        let got = count_submodules(&t("1", "1,1,1", "1,1"), q, DEFAULT_LIMIT).map_err(err)?;
        ensure!(got == n, "plane over F_{q}: {got} instead of {n}");
    }
    let primes = [2, 3, 5, 7];
    let mut tested = 0;
    let mut saw_two = false;
    let mut instances = vec![t("2,1", "3,2,1", "2,1")];
    instances.extend(nonempty_triples(5).into_iter().filter(|x| !x.alpha.is_empty() && hall_degree(x) > 0));
    for triple in instances {
        let deg = hall_degree(&triple);
        if tested == 12 || deg + 2 > primes.len() as i64 {
            continue;
        }
        let r = match interpolate_hall(&triple, &primes[..deg as usize + 2], DEFAULT_LIMIT) {
            Ok(r) => r,
            Err(arcstrata::Error::SearchLimit { .. }) => continue,
            Err(e) => return Err(e.to_string()),
        };
        ensure!(r.matches, "{triple}: {:?}", r.coefficients);
        saw_two |= r.expected_leading == 2;
        tested += 1;
    }
    ensure!(tested >= 10 && saw_two, "{tested} instances, c=2 seen: {saw_two}");
    Ok(())
}

fn orbits() -> Check {
    for (triple, expected) in
        [(t("1", "2,1", "2"), 1), (t("1", "2,1", "1,1"), 1), (t("2,1", "3,2,1", "2,1"), 3)]
    {
        let got = orbit_count(&triple, 2, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
        let diagrams = diagrams_of_type(&triple).map_err(|e| e.to_string())?.len();
        ensure!(got == expected && diagrams == expected, "{triple}: {got} orbits, {diagrams} diagrams");
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("running example tableaux and diagrams", running_example),
        ("Hasse diagram of the running example", hasse),
        ("dimension formulas", dimensions),
        ("classical and extended bubble sorts", bubble_sorts),
        ("swaps reduce crossings by one", by_one),
        ("gradedness of vertical strips", gradedness),
        ("Bruhat isomorphism", bruhat),
        ("coarse tableau poset", coarse_poset),
        ("box order and dominance", box_order),
        ("finite field counts", finite_fields),
        ("orbit counts", orbits),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                println!("FAIL {:>2} {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
