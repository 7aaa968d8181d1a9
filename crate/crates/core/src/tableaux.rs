//! LR-tableaux with entries at most 2 and their Klein refinements.
//!
//! Tableaux are drawn in the point-row convention: row `i` corresponds to
//! point `i` of an arc diagram and holds the cells in columns
//! `gamma_star_i + 1 ..= beta_star_i`, where `beta_star = β'` and
//! `gamma_star = γ'`. Entries `1` fill the left segment of a row up to
//! column `gamma_tilde_i`, entries `2` the remainder. So a tableau is the
//! triple `gamma_star ⊆ gamma_tilde ⊆ beta_star`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, subpartitions, Partition};

/// A partition triple `(α, β, γ)` with `α₁ ≤ 2`, describing embeddings
/// `N_α → N_β` with cokernel `N_γ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionTriple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl PartitionTriple {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Self {
        PartitionTriple { alpha, beta, gamma }
    }

    /// Checks the standing preconditions: parts of `α` at most 2,
    /// `|α| + |γ| = |β|` and `γ ⊆ β`.
    pub fn check(&self) -> Result<()> {
        if self.alpha.largest() > 2 {
            return Err(Error::AlphaTooWide(self.alpha.clone()));
        }
        let lhs = self.alpha.size() + self.gamma.size();
        if lhs != self.beta.size() {
            return Err(Error::WeightMismatch { lhs, rhs: self.beta.size() });
        }
        if !self.beta.contains(&self.gamma) {
            return Err(Error::NotContained { gamma: self.gamma.clone(), beta: self.beta.clone() });
        }
        Ok(())
    }

    /// `β∖γ` has at most one cell per row: `β'_i ≤ γ'_i + 1` for all `i`.
    pub fn is_vertical_strip(&self) -> bool {
        let (b, g) = (self.beta.conjugate(), self.gamma.conjugate());
        (0..b.len()).all(|i| b.get(i) <= g.get(i) + 1)
    }
}

impl fmt::Display for PartitionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha=({}) beta=({}) gamma=({})", self.alpha, self.beta, self.gamma)
    }
}

/// Every triple with `|β| ≤ max_beta` and `α₁ ≤ 2` that admits at least one
/// LR-tableau, in a fixed order.
pub fn nonempty_triples(max_beta: u32) -> Vec<PartitionTriple> {
    let mut out = Vec::new();
    for n in 0..=max_beta {
        for beta in partitions_of(n) {
            for gamma in subpartitions(&beta) {
                let k = n - gamma.size();
                for twos in 0..=k / 2 {
                    let mut parts = vec![2; twos as usize];
                    parts.extend(std::iter::repeat_n(1, (k - 2 * twos) as usize));
                    let alpha = Partition::new(parts).expect("decreasing");
                    let triple = PartitionTriple::new(alpha, beta.clone(), gamma.clone());
                    if lr_coefficient(&triple).unwrap_or(0) > 0 {
                        out.push(triple);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LrTableau {
    pub beta_star: Partition,
    pub gamma_star: Partition,
    pub gamma_tilde: Partition,
}

impl LrTableau {
    pub fn new(beta_star: Partition, gamma_star: Partition, gamma_tilde: Partition) -> Result<Self> {
        let t = LrTableau { beta_star, gamma_star, gamma_tilde };
        t.validate()?;
        Ok(t)
    }

    /// Number of rows, i.e. `β₁`; rows may be empty.
    pub fn rows(&self) -> u32 {
        self.beta_star.len() as u32
    }

    fn at(p: &Partition, row: u32) -> u32 {
        if row == 0 {
            return u32::MAX;
        }
        p.get(row as usize - 1)
    }

    /// Number of entries `1` in `row` (1-based).
    pub fn ones(&self, row: u32) -> u32 {
        Self::at(&self.gamma_tilde, row).saturating_sub(Self::at(&self.gamma_star, row))
    }

    /// Number of entries `2` in `row` (1-based).
    pub fn twos(&self, row: u32) -> u32 {
        Self::at(&self.beta_star, row).saturating_sub(Self::at(&self.gamma_tilde, row))
    }

    pub fn cells(&self, row: u32) -> u32 {
        Self::at(&self.beta_star, row).saturating_sub(Self::at(&self.gamma_star, row))
    }

    /// Per-row counts `(o_i, t_i)` of ones and twos.
    pub fn row_counts(&self) -> (Vec<u32>, Vec<u32>) {
        (1..=self.rows()).map(|r| (self.ones(r), self.twos(r))).unzip()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if !self.beta_star.contains(&self.gamma_tilde) || !self.gamma_tilde.contains(&self.gamma_star) {
            return bad(format!(
                "need gamma_star ({}) ⊆ gamma_tilde ({}) ⊆ beta_star ({})",
                self.gamma_star, self.gamma_tilde, self.beta_star
            ));
        }
        let (mut ones, mut twos) = (0u32, 0u32);
        for row in 1..=self.rows() {
            if row > 1 {
                if Self::at(&self.gamma_tilde, row) > Self::at(&self.gamma_star, row - 1) {
                    return bad(format!("two entries 1 in one column at rows {} and {row}", row - 1));
                }
                if Self::at(&self.beta_star, row) > Self::at(&self.gamma_tilde, row - 1) {
                    return bad(format!("entry 2 in row {row} below a 2 or outside the shape"));
                }
            }
            twos += self.twos(row);
            if twos > ones {
                return bad(format!("lattice condition fails at row {row}"));
            }
            ones += self.ones(row);
        }
        Ok(())
    }

    pub fn beta(&self) -> Partition {
        self.beta_star.conjugate()
    }

    pub fn gamma(&self) -> Partition {
        self.gamma_star.conjugate()
    }

    pub fn alpha(&self) -> Partition {
        let (o, t) = self.row_counts();
        let ones: u32 = o.iter().sum();
        let twos: u32 = t.iter().sum();
        Partition::new(vec![ones, twos]).expect("lattice condition gives ones >= twos").conjugate()
    }

    pub fn triple(&self) -> PartitionTriple {
        PartitionTriple::new(self.alpha(), self.beta(), self.gamma())
    }

    /// Rows holding entries `2`, with multiplicity, largest first.
    pub fn two_rows(&self) -> Vec<u32> {
        (1..=self.rows())
            .rev()
            .flat_map(|r| std::iter::repeat_n(r, self.twos(r) as usize))
            .collect()
    }

    /// The usual subscript label, e.g. `"43"` for twos in rows 4 and 3.
    pub fn label(&self) -> String {
        let rows = self.two_rows();
        if rows.iter().any(|&r| r > 9) {
            rows.iter().map(u32::to_string).collect::<Vec<_>>().join(".")
        } else {
            rows.iter().map(u32::to_string).collect()
        }
    }

    /// The intermediate partition in the row convention of `β`:
    /// `γ ⊆ conj(gamma_tilde) ⊆ β`, the cells between `γ` and it carrying 1.
    pub fn intermediate_partition(&self) -> Partition {
        self.gamma_tilde.conjugate()
    }

    /// Cells of `row` that carry a 2 and sit directly below a 1 of the
    /// previous row. Klein rule (b) forces their subscript to be `row - 1`.
    pub fn forced_subscripts(&self, row: u32) -> u32 {
        if row < 2 {
            return 0;
        }
        let two_lo = Self::at(&self.gamma_tilde, row);
        let two_hi = Self::at(&self.beta_star, row);
        let one_lo = Self::at(&self.gamma_star, row - 1);
        let one_hi = Self::at(&self.gamma_tilde, row - 1);
        two_hi.min(one_hi).saturating_sub(two_lo.max(one_lo))
    }
}

impl fmt::Display for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 1..=self.rows() {
            let empty = Self::at(&self.gamma_star, row);
            write!(f, "{:>3} ", row)?;
            for _ in 0..empty {
                f.write_str(". ")?;
            }
            for _ in 0..self.ones(row) {
                f.write_str("1 ")?;
            }
            for _ in 0..self.twos(row) {
                f.write_str("2 ")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All LR-tableaux of the given type, lexicographic in `gamma_tilde`.
pub fn lr_enumerate(triple: &PartitionTriple) -> Result<Vec<LrTableau>> {
    triple.check()?;
    let alpha_c = triple.alpha.conjugate();
    let (want_ones, want_twos) = (alpha_c.get(0), alpha_c.get(1));
    let beta_star = triple.beta.conjugate();
    let gamma_star = triple.gamma.conjugate();
    let rows = beta_star.len();

    struct Search<'a> {
        beta_star: &'a Partition,
        gamma_star: &'a Partition,
        rows: usize,
        want_ones: u32,
        want_twos: u32,
        tilde: Vec<u32>,
        out: Vec<LrTableau>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize, ones: u32, twos: u32) {
            if i == self.rows {
                if ones == self.want_ones && twos == self.want_twos {
                    let tilde = Partition::new(self.tilde.clone()).expect("strips keep rows decreasing");
                    self.out.push(LrTableau {
                        beta_star: self.beta_star.clone(),
                        gamma_star: self.gamma_star.clone(),
                        gamma_tilde: tilde,
                    });
                }
                return;
            }
            let lo = self.gamma_star.get(i);
            let hi = self.beta_star.get(i);
            for g in lo..=hi {
                let o = g - lo;
                let t = hi - g;
                if i > 0 && (g > self.gamma_star.get(i - 1) || hi > self.tilde[i - 1]) {
                    continue;
                }
                if ones + o > self.want_ones || twos + t > self.want_twos || twos + t > ones {
                    continue;
                }
                self.tilde.push(g);
                self.go(i + 1, ones + o, twos + t);
                self.tilde.pop();
            }
        }
    }

    let mut search = Search {
        beta_star: &beta_star,
        gamma_star: &gamma_star,
        rows,
        want_ones,
        want_twos,
        tilde: Vec::with_capacity(rows),
        out: Vec::new(),
    };
    search.go(0, 0, 0);
    Ok(search.out)
}

/// The LR-coefficient `c_{α,γ}^β` for `α₁ ≤ 2`.
pub fn lr_coefficient(triple: &PartitionTriple) -> Result<usize> {
    Ok(lr_enumerate(triple)?.len())
}

/// An LR-tableau whose entries `2` carry subscripts, stored per row as a
/// sorted multiset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KleinTableau {
    #[serde(flatten)]
    pub base: LrTableau,
    pub subscripts: BTreeMap<u32, Vec<u32>>,
}

impl KleinTableau {
    pub fn new(base: LrTableau, subscripts: BTreeMap<u32, Vec<u32>>) -> Result<Self> {
        let mut subscripts = subscripts;
        subscripts.retain(|_, v| !v.is_empty());
        for v in subscripts.values_mut() {
            v.sort_unstable();
        }
        let k = KleinTableau { base, subscripts };
        k.validate()?;
        Ok(k)
    }

    pub fn subscripts_of(&self, row: u32) -> &[u32] {
        self.subscripts.get(&row).map(Vec::as_slice).unwrap_or(&[])
    }

    /// How often subscript `r` occurs anywhere in the tableau.
    pub fn usage(&self, r: u32) -> u32 {
        self.subscripts.values().flatten().filter(|&&s| s == r).count() as u32
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        let t = &self.base;
        for (&row, subs) in &self.subscripts {
            if row > t.rows() || subs.len() as u32 != t.twos(row) {
                return Err(Error::InvalidTableau(format!(
                    "row {row} has {} subscripts for {} entries 2",
                    subs.len(),
                    t.twos(row)
                )));
            }
        }
        for row in 1..=t.rows() {
            let subs = self.subscripts_of(row);
            if subs.len() as u32 != t.twos(row) {
                return Err(Error::InvalidTableau(format!("row {row} lacks subscripts")));
            }
            if subs.iter().any(|&r| r < 1 || r >= row) {
                return Err(Error::KleinRule { rule: 'a', row });
            }
            let forced = t.forced_subscripts(row);
            if (subs.iter().filter(|&&r| r == row - 1).count() as u32) < forced {
                return Err(Error::KleinRule { rule: 'b', row });
            }
        }
        for r in 1..=t.rows() {
            if self.usage(r) > t.ones(r) {
                return Err(Error::KleinRule { rule: 'c', row: r });
            }
        }
        Ok(())
    }
}

/// All Klein tableaux refining `t`, ordered row by row, each row's
/// multisets in lexicographic order.
pub fn klein_enumerate(t: &LrTableau) -> Vec<KleinTableau> {
    let rows: Vec<u32> = (1..=t.rows()).filter(|&r| t.twos(r) > 0).collect();
    let ones: Vec<u32> = (0..=t.rows()).map(|r| if r == 0 { 0 } else { t.ones(r) }).collect();
    let mut used = vec![0u32; t.rows() as usize + 1];
    let mut chosen: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut out = Vec::new();

    fn multisets(size: u32, max: u32, prefix: &mut Vec<u32>, start: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() as u32 == size {
            out.push(prefix.clone());
            return;
        }
        for r in start..=max {
            prefix.push(r);
            multisets(size, max, prefix, r, out);
            prefix.pop();
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        t: &LrTableau,
        rows: &[u32],
        ones: &[u32],
        used: &mut [u32],
        chosen: &mut BTreeMap<u32, Vec<u32>>,
        out: &mut Vec<KleinTableau>,
    ) {
        let Some((&row, rest)) = rows.split_first() else {
            out.push(KleinTableau { base: t.clone(), subscripts: chosen.clone() });
            return;
        };
        let mut candidates = Vec::new();
        multisets(t.twos(row), row - 1, &mut Vec::new(), 1, &mut candidates);
        let forced = t.forced_subscripts(row);
        for subs in candidates {
            if (subs.iter().filter(|&&r| r == row - 1).count() as u32) < forced {
                continue;
            }
            for &r in &subs {
                used[r as usize] += 1;
            }
            if subs.iter().all(|&r| used[r as usize] <= ones[r as usize]) {
                chosen.insert(row, subs.clone());
                go(t, rest, ones, used, chosen, out);
                chosen.remove(&row);
            }
            for &r in &subs {
                used[r as usize] -= 1;
            }
        }
    }

    go(t, &rows, &ones, &mut used, &mut chosen, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn triple(a: &str, b: &str, g: &str) -> PartitionTriple {
        PartitionTriple::new(p(a), p(b), p(g))
    }

    fn running() -> PartitionTriple {
        triple("2,2,1,1", "4,3,3,2,2,1", "3,2,2,1,1")
    }

    /// Fills every row with every split point and keeps what passes the
    /// cell-level LR rules, independent of the pruned search.
    fn brute_force_count(tr: &PartitionTriple) -> usize {
        let bs = tr.beta.conjugate();
        let gs = tr.gamma.conjugate();
        let ac = tr.alpha.conjugate();
        let rows = bs.len();
        let mut count = 0;
        let mut tilde = vec![0u32; rows];
        let total: usize = (0..rows).map(|i| (bs.get(i) - gs.get(i) + 1) as usize).product();
        for mut code in 0..total {
            for i in 0..rows {
                let span = (bs.get(i) - gs.get(i) + 1) as usize;
                tilde[i] = gs.get(i) + (code % span) as u32;
                code /= span;
            }
            // cell grid: entry at (row, col) for col in gs..bs
            let entry = |r: usize, c: u32| -> u8 {
                if c < gs.get(r) || c >= bs.get(r) {
                    0
                } else if c < tilde[r] {
                    1
                } else {
                    2
                }
            };
            let mut ok = true;
            for r in 1..rows {
                for c in gs.get(r)..bs.get(r) {
                    let above = entry(r - 1, c);
                    let here = entry(r, c);
                    if c >= bs.get(r - 1) || (above != 0 && above >= here) {
                        ok = false;
                    }
                }
            }
            let ones: u32 = (0..rows).map(|r| tilde[r] - gs.get(r)).sum();
            let twos: u32 = (0..rows).map(|r| bs.get(r) - tilde[r]).sum();
            if ones != ac.get(0) || twos != ac.get(1) {
                ok = false;
            }
            // reading word: rows top to bottom, each right to left
            let (mut n1, mut n2) = (0, 0);
            for r in 0..rows {
                for c in (gs.get(r)..bs.get(r)).rev() {
                    match entry(r, c) {
                        1 => n1 += 1,
                        _ => n2 += 1,
                    }
                    if n2 > n1 {
                        ok = false;
                    }
                }
            }
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn running_example_has_four_tableaux() {
        let ts = lr_enumerate(&running()).unwrap();
        let labels: Vec<String> = ts.iter().map(LrTableau::label).collect();
        assert_eq!(ts.len(), 4);
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["32", "33", "42", "43"]);
        for t in &ts {
            t.validate().unwrap();
            assert_eq!(t.triple(), running());
        }
    }

    #[test]
    fn small_enumerations() {
        let ts = lr_enumerate(&triple("1", "2,1", "2")).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].row_counts(), (vec![1, 0], vec![0, 0]));

        let ts = lr_enumerate(&triple("2,1", "3,2,1", "2,1")).unwrap();
        let rows: Vec<Vec<u32>> = ts.iter().map(LrTableau::two_rows).collect();
        assert_eq!(rows, vec![vec![2], vec![3]]);

        assert_eq!(lr_coefficient(&triple("", "3,1", "3,1")).unwrap(), 1);
        assert_eq!(lr_coefficient(&running()).unwrap(), 4);
    }

    #[test]
    fn precondition_errors_are_distinct() {
        assert!(matches!(lr_enumerate(&triple("3", "3", "")), Err(Error::AlphaTooWide(_))));
        assert!(matches!(lr_enumerate(&triple("1", "3", "")), Err(Error::WeightMismatch { .. })));
        assert!(matches!(lr_enumerate(&triple("1", "2,1,1", "3")), Err(Error::NotContained { .. })));
        assert!(lr_enumerate(&triple("1", "2,1,1", "1,1,1")).is_ok());
    }

    #[test]
    fn row_counts_of_running_tableaux() {
        let ts = lr_enumerate(&running()).unwrap();
        let by_label = |l: &str| ts.iter().find(|t| t.label() == l).unwrap().clone();
        let g43 = by_label("43");
        assert_eq!(g43.gamma_tilde, p("6,5,2"));
        assert_eq!(g43.row_counts(), (vec![1, 2, 1, 0], vec![0, 0, 1, 1]));
        assert_eq!(by_label("33").row_counts(), (vec![1, 2, 0, 1], vec![0, 0, 2, 0]));
        let empty = lr_enumerate(&triple("", "", "")).unwrap();
        assert_eq!(empty[0].row_counts(), (vec![], vec![]));
    }

    #[test]
    fn klein_refinements_of_gamma_43() {
        let ts = lr_enumerate(&running()).unwrap();
        let g43 = ts.iter().find(|t| t.label() == "43").unwrap();
        let ks = klein_enumerate(g43);
        let subs: Vec<(Vec<u32>, Vec<u32>)> =
            ks.iter().map(|k| (k.subscripts_of(3).to_vec(), k.subscripts_of(4).to_vec())).collect();
        assert_eq!(
            subs,
            vec![
                (vec![1], vec![2]),
                (vec![1], vec![3]),
                (vec![2], vec![1]),
                (vec![2], vec![2]),
                (vec![2], vec![3]),
            ]
        );
        let total: usize = ts.iter().map(|t| klein_enumerate(t).len()).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn klein_edge_cases() {
        let t = &lr_enumerate(&triple("1", "2,1", "2")).unwrap()[0];
        let ks = klein_enumerate(t);
        assert_eq!(ks.len(), 1);
        assert!(ks[0].subscripts.is_empty());

        let ts = lr_enumerate(&triple("2,1", "3,2,1", "2,1")).unwrap();
        let ks = klein_enumerate(&ts[0]);
        assert_eq!(ks.len(), 1);
        assert_eq!(ks[0].subscripts_of(2), &[1]);
    }

    #[test]
    fn forced_subscript_rule() {
        // row 3 holds a 2 directly under the 1 of row 2
        let t = LrTableau::new(p("3,2,2,1"), p("2,1,1"), p("3,2,1")).unwrap();
        assert_eq!(t.forced_subscripts(3), 1);
        let ks = klein_enumerate(&t);
        assert_eq!(ks.len(), 1);
        assert_eq!(ks[0].subscripts_of(3), &[2]);
        assert_eq!(ks[0].subscripts_of(4), &[1]);
        let mut bad = ks[0].subscripts.clone();
        bad.insert(3, vec![1]);
        bad.insert(4, vec![2]);
        assert!(matches!(KleinTableau::new(t.clone(), bad), Err(Error::KleinRule { rule: 'b', row: 3 })));
        let mut bad = ks[0].subscripts.clone();
        bad.insert(4, vec![3]);
        assert!(matches!(KleinTableau::new(t, bad), Err(Error::KleinRule { rule: 'c', row: 3 })));
    }

    #[test]
    fn json_shapes() {
        let ts = lr_enumerate(&running()).unwrap();
        let g43 = ts.iter().find(|t| t.label() == "43").unwrap();
        let json = serde_json::to_value(g43).unwrap();
        assert_eq!(json, serde_json::json!({"beta_star":[6,5,3,1],"gamma_star":[5,3,1],"gamma_tilde":[6,5,2]}));
        let k = &klein_enumerate(g43)[0];
        let json = serde_json::to_value(k).unwrap();
        assert_eq!(json["subscripts"], serde_json::json!({"3":[1],"4":[2]}));
        let back: KleinTableau = serde_json::from_value(json).unwrap();
        assert_eq!(&back, k);
    }

    #[test]
    fn enumeration_matches_cell_level_brute_force() {
        for tr in nonempty_triples(7) {
            assert_eq!(lr_coefficient(&tr).unwrap(), brute_force_count(&tr), "{tr}");
        }
        // and types with c = 0 agree as well
        let tr = triple("2", "1,1", "");
        assert_eq!(lr_coefficient(&tr).unwrap(), 0);
        assert_eq!(brute_force_count(&tr), 0);
    }

    #[test]
    fn vertical_strip_predicate() {
        assert!(triple("1,1", "2,1,1", "1,1").is_vertical_strip());
        assert!(!running().is_vertical_strip());
    }
}
