//! Arc diagrams and their source-target sequences.
//!
//! Points are positive integers numbered from right to left. An arc joins a
//! source `m` to a target `n < m`; a pole stands on a single point and is
//! treated as an arc whose source is infinitely far to the left.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{klein_enumerate, lr_enumerate, KleinTableau, LrTableau, PartitionTriple};

/// Left end of a strand: a point, or infinity for a pole.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    Finite(u32),
    Infinity,
}

impl Source {
    pub fn finite(self) -> Option<u32> {
        match self {
            Source::Finite(m) => Some(m),
            Source::Infinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Source::Infinity
    }

    /// `self > n` for a point `n`.
    pub fn exceeds(self, n: u32) -> bool {
        match self {
            Source::Finite(m) => m > n,
            Source::Infinity => true,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Finite(m) => write!(f, "{m}"),
            Source::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "oo" | "infinity" => Ok(Source::Infinity),
            t => t.parse().map(Source::Finite).map_err(|_| Error::parse("source", s)),
        }
    }
}

impl Serialize for Source {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Source::Finite(m) => ser.serialize_u32(*m),
            Source::Infinity => ser.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Source {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(m) => Ok(Source::Finite(m)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// One entry `(m, n)` of a source-target sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(Source, u32)", into = "(Source, u32)")]
pub struct Strand {
    pub source: Source,
    pub target: u32,
}

impl Strand {
    pub fn arc(source: u32, target: u32) -> Self {
        Strand { source: Source::Finite(source), target }
    }

    pub fn pole(target: u32) -> Self {
        Strand { source: Source::Infinity, target }
    }

    pub fn is_pole(&self) -> bool {
        self.source.is_infinite()
    }

    /// Two strands cross iff, up to swapping them, `r < n < k < m` for
    /// `(m, n)` and `(k, r)`. Shared endpoints never cross.
    pub fn crosses(&self, other: &Strand) -> bool {
        fn one_way(a: &Strand, b: &Strand) -> bool {
            b.target < a.target && b.source.exceeds(a.target) && b.source < a.source
        }
        one_way(self, other) || one_way(other, self)
    }

    /// Sequence order: targets descending, then sources ascending.
    pub fn sequence_cmp(&self, other: &Strand) -> Ordering {
        other.target.cmp(&self.target).then(self.source.cmp(&other.source))
    }
}

impl From<(Source, u32)> for Strand {
    fn from((source, target): (Source, u32)) -> Self {
        Strand { source, target }
    }
}

impl From<Strand> for (Source, u32) {
    fn from(s: Strand) -> Self {
        (s.source, s.target)
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.source, self.target)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Arc {
    pub source: u32,
    pub target: u32,
}

impl From<(u32, u32)> for Arc {
    fn from((source, target): (u32, u32)) -> Self {
        Arc { source, target }
    }
}

impl From<Arc> for (u32, u32) {
    fn from(a: Arc) -> Self {
        (a.source, a.target)
    }
}

/// A multiset of arcs and poles, kept in canonical order: arcs by target
/// descending then source ascending, poles ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ArcDiagram {
    arcs: Vec<Arc>,
    poles: Vec<u32>,
}

impl<'de> Deserialize<'de> for ArcDiagram {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(default)]
            arcs: Vec<(u32, u32)>,
            #[serde(default)]
            poles: Vec<u32>,
        }
        let raw = Raw::deserialize(de)?;
        ArcDiagram::new(raw.arcs, raw.poles).map_err(serde::de::Error::custom)
    }
}

impl ArcDiagram {
    pub fn new(arcs: impl IntoIterator<Item = (u32, u32)>, poles: impl IntoIterator<Item = u32>) -> Result<Self> {
        let arcs: Vec<Arc> = arcs.into_iter().map(Arc::from).collect();
        let poles: Vec<u32> = poles.into_iter().collect();
        if let Some(a) = arcs.iter().find(|a| a.source <= a.target || a.target == 0) {
            return Err(Error::InvalidArc { source_point: a.source, target: a.target });
        }
        if poles.contains(&0) {
            return Err(Error::parse("pole", "0"));
        }
        Ok(Self::canonical(arcs, poles))
    }

    fn canonical(mut arcs: Vec<Arc>, mut poles: Vec<u32>) -> Self {
        arcs.sort_by(|a, b| b.target.cmp(&a.target).then(a.source.cmp(&b.source)));
        poles.sort_unstable();
        ArcDiagram { arcs, poles }
    }

    /// Builds a diagram from strands; poles are strands with infinite source.
    pub fn from_strands(strands: impl IntoIterator<Item = Strand>) -> Result<Self> {
        let mut arcs = Vec::new();
        let mut poles = Vec::new();
        for s in strands {
            match s.source {
                Source::Infinity => poles.push(s.target),
                Source::Finite(m) => arcs.push((m, s.target)),
            }
        }
        ArcDiagram::new(arcs, poles)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn poles(&self) -> &[u32] {
        &self.poles
    }

    /// All arcs and poles as strands, in sequence order.
    pub fn strands(&self) -> Vec<Strand> {
        let mut out: Vec<Strand> = self
            .arcs
            .iter()
            .map(|a| Strand::arc(a.source, a.target))
            .chain(self.poles.iter().map(|&p| Strand::pole(p)))
            .collect();
        out.sort_by(Strand::sequence_cmp);
        out
    }

    pub fn max_point(&self) -> u32 {
        let a = self.arcs.iter().map(|a| a.source).max().unwrap_or(0);
        let p = self.poles.iter().copied().max().unwrap_or(0);
        a.max(p)
    }

    /// Number of arc ends and poles at `point`.
    pub fn degree(&self, point: u32) -> u32 {
        let ends = self.arcs.iter().filter(|a| a.source == point || a.target == point).count();
        let poles = self.poles.iter().filter(|&&p| p == point).count();
        (ends + poles) as u32
    }

    pub fn arcs_from(&self, point: u32) -> u32 {
        self.arcs.iter().filter(|a| a.source == point).count() as u32
    }

    pub fn crossings(&self) -> usize {
        count_crossings(&self.strands())
    }

    pub fn is_dominant(&self) -> bool {
        self.crossings() == 0
    }

    /// True when no point carries two poles.
    pub fn has_distinct_poles(&self) -> bool {
        self.poles.windows(2).all(|w| w[0] != w[1])
    }

    pub fn from_klein(k: &KleinTableau) -> Self {
        let mut arcs = Vec::new();
        for (&row, subs) in &k.subscripts {
            arcs.extend(subs.iter().map(|&r| Arc { source: row, target: r }));
        }
        let mut poles = Vec::new();
        for r in 1..=k.base.rows() {
            let free = k.base.ones(r) - k.usage(r);
            poles.extend(std::iter::repeat_n(r, free as usize));
        }
        Self::canonical(arcs, poles)
    }

    fn check_degrees(&self, beta: &Partition, gamma: &Partition) -> Result<()> {
        let (bs, gs) = (beta.conjugate(), gamma.conjugate());
        let top = self.max_point().max(bs.len() as u32);
        for point in 1..=top {
            let i = point as usize - 1;
            let expected = bs.get(i).saturating_sub(gs.get(i));
            let found = self.degree(point);
            if expected != found {
                return Err(Error::DegreeMismatch { point, expected, found });
            }
        }
        Ok(())
    }

    /// The LR-tableau recording how many arcs start at each point.
    pub fn lr_type(&self, beta: &Partition, gamma: &Partition) -> Result<LrTableau> {
        self.check_degrees(beta, gamma)?;
        let (bs, gs) = (beta.conjugate(), gamma.conjugate());
        let tilde: Vec<u32> = (0..bs.len())
            .map(|i| bs.get(i) - self.arcs_from(i as u32 + 1))
            .collect();
        let tilde = Partition::new(tilde).map_err(|_| {
            Error::InvalidTableau("arc sources do not leave a partition of ones".to_string())
        })?;
        LrTableau::new(bs, gs, tilde)
    }

    pub fn to_klein(&self, beta: &Partition, gamma: &Partition) -> Result<KleinTableau> {
        let base = self.lr_type(beta, gamma)?;
        let mut subscripts: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for a in &self.arcs {
            subscripts.entry(a.source).or_default().push(a.target);
        }
        KleinTableau::new(base, subscripts)
    }

    /// The type `(α, β, γ)` of the diagram within the context `(β, γ)`.
    pub fn type_of(&self, beta: &Partition, gamma: &Partition) -> Result<PartitionTriple> {
        self.check_degrees(beta, gamma)?;
        let twos = self.arcs.len() as u32;
        let ones = twos + self.poles.len() as u32;
        let alpha = Partition::new(vec![ones, twos]).expect("ones >= twos").conjugate();
        Ok(PartitionTriple::new(alpha, beta.clone(), gamma.clone()))
    }

    pub fn to_sequence(&self) -> SourceTargetSeq {
        SourceTargetSeq(self.strands())
    }

    /// Fixed-width drawing with points numbered right to left.
    /// `points` widens the baseline beyond the largest used point.
    pub fn render_ascii(&self, points: Option<u32>) -> String {
        render(self, points.unwrap_or(0).max(self.max_point()))
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("arcs {")?;
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", a.source, a.target)?;
        }
        f.write_str("} poles {")?;
        for (i, p) in self.poles.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

pub fn count_crossings(strands: &[Strand]) -> usize {
    let mut count = 0;
    for (i, a) in strands.iter().enumerate() {
        count += strands[i + 1..].iter().filter(|b| a.crosses(b)).count();
    }
    count
}

/// All diagrams refining one LR-tableau, in Klein enumeration order.
pub fn diagrams_of_tableau(t: &LrTableau) -> Vec<ArcDiagram> {
    klein_enumerate(t).iter().map(ArcDiagram::from_klein).collect()
}

/// All arc diagrams of a type: the images of its Klein tableaux, grouped by
/// LR-tableau in enumeration order.
pub fn diagrams_of_type(triple: &PartitionTriple) -> Result<Vec<ArcDiagram>> {
    Ok(lr_enumerate(triple)?.iter().flat_map(diagrams_of_tableau).collect())
}

/// An ordered list of `(source, target)` pairs. Bubble sorts move sources
/// between positions, so entries need not be valid arcs until converted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SourceTargetSeq(pub Vec<Strand>);

impl SourceTargetSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn crossings(&self) -> usize {
        count_crossings(&self.0)
    }

    /// Targets weakly decreasing; equal targets with ascending sources.
    pub fn is_canonical(&self) -> bool {
        self.0.windows(2).all(|w| w[0].sequence_cmp(&w[1]) != Ordering::Greater)
    }

    pub fn to_diagram(&self) -> Result<ArcDiagram> {
        for s in &self.0 {
            if let Source::Finite(m) = s.source {
                if m <= s.target {
                    return Err(Error::InvalidArc { source_point: m, target: s.target });
                }
            }
        }
        ArcDiagram::from_strands(self.0.iter().copied())
    }
}

impl fmt::Display for SourceTargetSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Accepts `"(inf,4),(6,3)"` on one line or one pair per line, with or
/// without parentheses (`"inf 4"`, `"6,3"`).
impl FromStr for SourceTargetSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let cleaned: String = s
            .chars()
            .map(|c| if c == '(' || c == ')' || c == '\n' || c == ';' { ' ' } else { c })
            .collect();
        let tokens: Vec<&str> = cleaned
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if !tokens.len().is_multiple_of(2) {
            return Err(Error::parse("source-target sequence", s));
        }
        for pair in tokens.chunks(2) {
            let source: Source = pair[0].parse()?;
            let target: u32 = pair[1].parse().map_err(|_| Error::parse("target", pair[1]))?;
            if target == 0 {
                return Err(Error::parse("target", pair[1]));
            }
            out.push(Strand { source, target });
        }
        Ok(SourceTargetSeq(out))
    }
}

fn render(d: &ArcDiagram, points: u32) -> String {
    let x = |p: u32| (4 * (points - p) + 2) as usize;
    let width = (4 * points + 1) as usize;

    // shortest arcs lowest; an arc sits above every earlier arc it overlaps
    let mut order: Vec<Arc> = d.arcs.clone();
    order.sort_by_key(|a| (a.source - a.target, std::cmp::Reverse(a.target)));
    let mut placed: Vec<(Arc, usize)> = Vec::new();
    for a in order {
        let level = placed
            .iter()
            .filter(|(b, _)| b.target <= a.source && a.target <= b.source)
            .map(|&(_, l)| l)
            .max()
            .unwrap_or(0)
            + 1;
        placed.push((a, level));
    }
    let top = placed.iter().map(|&(_, l)| l).max().unwrap_or(0) + 1;
    let base = top;
    let mut grid = vec![vec![' '; width]; base + 2];

    fn put(grid: &mut [Vec<char>], row: usize, col: usize, c: char) {
        let cur = grid[row][col];
        grid[row][col] = match (cur, c) {
            (' ', _) => c,
            ('|', '-') | ('-', '|') | ('+', _) => '+',
            ('.', '|') | ('|', '.') => '.',
            (_, c) => c,
        };
    }

    for &(a, level) in &placed {
        let row = base - level;
        let (l, r) = (x(a.source), x(a.target));
        for col in l + 1..r {
            put(&mut grid, row, col, '-');
        }
        put(&mut grid, row, l, '.');
        put(&mut grid, row, r, '.');
        for y in row + 1..base {
            put(&mut grid, y, l, '|');
            put(&mut grid, y, r, '|');
        }
    }
    let mut pole_count: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in &d.poles {
        *pole_count.entry(p).or_default() += 1;
    }
    for (&p, &n) in &pole_count {
        for y in 1..base {
            put(&mut grid, y, x(p), '|');
        }
        grid[0][x(p)] = if n > 1 { char::from_digit(n.min(9) as u32, 10).unwrap() } else { '^' };
    }
    for col in 0..width {
        grid[base][col] = '-';
    }
    for p in 1..=points {
        grid[base][x(p)] = '*';
        let label = p.to_string();
        let start = x(p) + 1 - label.len().min(x(p) + 1);
        for (k, ch) in label.chars().enumerate() {
            grid[base + 1][start + k] = ch;
        }
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
