//! Integer partitions: conjugation, moments, containment and the
//! degeneration (box) order.
//!
//! A partition is stored without trailing zeros, so two partitions are equal
//! exactly when their stored parts are equal. Indexing through
//! [`Partition::get`] is zero-based and returns `0` past the last part.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parts `n` copies of `1`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Zero-based part lookup, `0` beyond the stored parts.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let parts = (1..=width as u32)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// The moment `n(λ) = Σ (i-1) λ_i`.
    pub fn moment(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Componentwise containment `other ⊆ self` of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.get(i) <= self.get(i))
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    fn check_same_size(&self, other: &Partition) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.clone(), right: other.clone() });
        }
        Ok(())
    }

    /// Degeneration order of nilpotent operators: `N_self ≤_deg N_other`
    /// iff every prefix sum of `self'` is at most the corresponding prefix
    /// sum of `other'`.
    pub fn leq_deg(&self, other: &Partition) -> Result<bool> {
        self.check_same_size(other)?;
        let (a, b) = (self.conjugate(), other.conjugate());
        Ok(prefix_dominated(a.parts(), b.parts()))
    }

    /// An explicit chain of single box moves from `self` up to `other` in
    /// the box order, or `None` when `self` is not below `other`.
    ///
    /// The chain is built top-down from `other`: with `s` the first column
    /// where the conjugate prefix sums differ strictly and `t > s` the first
    /// column where `self'` exceeds the current conjugate, one cell moves
    /// from column `s` to column `t`. When that move would break the shape,
    /// `s` is advanced to the end of its run of equal columns and `t` pulled
    /// back to the start of its run; both stay inside `[s, t]`, where the
    /// prefix inequality is strict, so dominance is kept.
    pub fn box_chain(&self, other: &Partition) -> Result<Option<Vec<Partition>>> {
        if !self.leq_deg(other)? {
            return Ok(None);
        }
        let target = self.conjugate().0;
        let mut current = other.conjugate().0;
        let mut chain = vec![other.clone()];
        while current != target {
            let width = target.len().max(current.len()) + 1;
            target_resize(&mut current, width);
            let a = padded(&target, width);
            let (mut sa, mut sb) = (0u32, 0u32);
            let mut s = None;
            for i in 0..width {
                sa += a[i];
                sb += current[i];
                if sa < sb {
                    s = Some(i);
                    break;
                }
            }
            let s = s.expect("distinct partitions of equal size differ in some prefix");
            let t = (s + 1..width)
                .find(|&i| a[i] > current[i])
                .expect("prefix sums meet again at the total size");
            let mut s_star = s;
            while s_star + 1 < t && current[s_star + 1] == current[s] {
                s_star += 1;
            }
            let mut t_star = t;
            while t_star - 1 > s_star && current[t_star - 1] == current[t] {
                t_star -= 1;
            }
            current[s_star] -= 1;
            current[t_star] += 1;
            while current.last() == Some(&0) {
                current.pop();
            }
            let step = Partition::new(current.clone())
                .map_err(|_| Error::Internal(format!("box chain left the partitions: {current:?}")))?;
            chain.push(step.conjugate());
        }
        chain.reverse();
        Ok(Some(chain))
    }

    /// `self ↦_box other`: `other` arises from `self` by moving one cell
    /// from a higher row `i` down to a lower row `j > i`.
    pub fn is_box_move_to(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let diffs: Vec<(usize, i64)> = (0..n)
            .map(|k| (k, self.get(k) as i64 - other.get(k) as i64))
            .filter(|&(_, d)| d != 0)
            .collect();
        matches!(diffs.as_slice(), [(i, 1), (j, -1)] if i < j)
    }
}

fn padded(v: &[u32], width: usize) -> Vec<u32> {
    let mut out = v.to_vec();
    out.resize(width, 0);
    out
}

fn target_resize(v: &mut Vec<u32>, width: usize) {
    if v.len() < width {
        v.resize(width, 0);
    }
}

/// Prefix sums of `a` never exceed those of `b`.
fn prefix_dominated(a: &[u32], b: &[u32]) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0u64, 0u64);
    for i in 0..n {
        sa += a.get(i).copied().unwrap_or(0) as u64;
        sb += b.get(i).copied().unwrap_or(0) as u64;
        if sa > sb {
            return false;
        }
    }
    true
}

/// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions contained in `outer` (including the empty one and `outer`).
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &Partition, i: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::new(prefix.clone()).expect("decreasing by construction"));
            return;
        }
        for part in (0..=outer.get(i).min(cap)).rev() {
            prefix.push(part);
            rec(outer, i + 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer, 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::parse("partition", s)))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
