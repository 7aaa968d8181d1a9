//! Brute-force counts over prime fields: embeddings `N_α → N_β` with a
//! given cokernel, their images, automorphism groups and orbits, and
//! interpolation of the resulting counts in `p`.
//!
//! `N_λ` has basis `(i, h)` for blocks `i` and heights `1 ≤ h ≤ λ_i`, with
//! `T(i, h) = (i, h − 1)` and `T(i, 1) = 0`. A homomorphism out of `N_α` is
//! fixed by the images of the block tops `(i, α_i)`, which may be any
//! vectors killed by `T^{α_i}`.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::tableaux::{lr_coefficient, PartitionTriple};

/// Default bound on the number of points of an enumerated space.
pub const DEFAULT_LIMIT: u64 = 1 << 24;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u64) -> Result<u32> {
    if !is_prime(p) || p > u16::MAX as u64 {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u32)
}

fn space_size(p: u64, exponent: u32, limit: u64) -> Result<u64> {
    match p.checked_pow(exponent) {
        Some(n) if n <= limit => Ok(n),
        _ => Err(Error::SearchLimit { p, exponent, limit }),
    }
}

fn inv(a: u32, p: u32) -> u32 {
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Row-reduces in place and returns the rank; rows end in reduced echelon
/// form, zero rows last.
fn rref(rows: &mut [Vec<u32>], p: u32) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][col], p) as u64;
        for v in rows[rank].iter_mut() {
            *v = (*v as u64 * scale % p as u64) as u32;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col] as u64;
                for c in 0..width {
                    let sub = f * rows[rank][c] as u64 % p as u64;
                    rows[r][c] = ((rows[r][c] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn rank_of(rows: &[Vec<u32>], p: u32) -> usize {
    rref(&mut rows.to_vec(), p)
}

/// `N_λ` over `F_p`.
#[derive(Clone, Debug)]
pub struct NilpotentModule {
    pub p: u32,
    pub lambda: Partition,
    offsets: Vec<usize>,
}

impl NilpotentModule {
    pub fn new(lambda: &Partition, p: u64) -> Result<Self> {
        let p = check_prime(p)?;
        let mut offsets = Vec::with_capacity(lambda.len());
        let mut at = 0;
        for &part in lambda.parts() {
            offsets.push(at);
            at += part as usize;
        }
        Ok(NilpotentModule { p, lambda: lambda.clone(), offsets })
    }

    pub fn dim(&self) -> usize {
        self.lambda.size() as usize
    }

    /// Coordinate of `(block, height)`, both 1-based.
    pub fn index(&self, block: usize, height: u32) -> usize {
        self.offsets[block - 1] + height as usize - 1
    }

    /// `T^k v`.
    pub fn shift(&self, v: &[u32], k: u32) -> Vec<u32> {
        let mut out = vec![0; v.len()];
        for (b, &part) in self.lambda.parts().iter().enumerate() {
            for h in k + 1..=part {
                out[self.index(b + 1, h - k)] = v[self.index(b + 1, h)];
            }
        }
        out
    }

    /// Jordan type of `T` on the quotient by the span of `sub`, which must
    /// be a `T`-stable subspace with independent spanning vectors.
    pub fn quotient_type(&self, sub: &[Vec<u32>]) -> Result<Partition> {
        let depth = self.lambda.largest();
        // r_k = dim of T^k on the quotient
        let ranks: Vec<usize> = (0..=depth)
            .map(|k| {
                let mut standard = 0;
                let mut outside = Vec::new();
                for (b, &part) in self.lambda.parts().iter().enumerate() {
                    for h in 1..=part {
                        if h + k <= part {
                            standard += 1;
                        } else {
                            outside.push(self.index(b + 1, h));
                        }
                    }
                }
                let projected: Vec<Vec<u32>> = sub.iter().map(|v| outside.iter().map(|&c| v[c]).collect()).collect();
                standard + rank_of(&projected, self.p) - sub.len()
            })
            .collect();
        let columns: Vec<u32> = ranks.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
        let conj = Partition::new(columns.clone())
            .map_err(|_| Error::Internal(format!("quotient ranks {ranks:?} are not a Jordan type")))?;
        Ok(conj.conjugate())
    }
}

/// Homomorphisms `N_α → N_β`, indexed by their free coordinates.
struct HomSpace {
    source: NilpotentModule,
    target: NilpotentModule,
    /// (generator block, target coordinate) pairs that may be nonzero.
    coords: Vec<(usize, usize)>,
}

impl HomSpace {
    fn new(alpha: &Partition, beta: &Partition, p: u64) -> Result<Self> {
        let source = NilpotentModule::new(alpha, p)?;
        let target = NilpotentModule::new(beta, p)?;
        let mut coords = Vec::new();
        for (i, &a) in alpha.parts().iter().enumerate() {
            for (j, &b) in beta.parts().iter().enumerate() {
                for h in 1..=a.min(b) {
                    coords.push((i + 1, target.index(j + 1, h)));
                }
            }
        }
        Ok(HomSpace { source, target, coords })
    }

    fn exponent(&self) -> u32 {
        self.coords.len() as u32
    }

    fn generator_images(&self, values: &[u32]) -> Vec<Vec<u32>> {
        let mut images = vec![vec![0; self.target.dim()]; self.source.lambda.len()];
        for (&(i, c), &v) in self.coords.iter().zip(values) {
            images[i - 1][c] = v;
        }
        images
    }

    /// Images of the basis `(i, h)` of `N_α`, i.e. the matrix columns.
    fn columns(&self, images: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut cols = vec![Vec::new(); self.source.dim()];
        for (i, &a) in self.source.lambda.parts().iter().enumerate() {
            for h in 1..=a {
                cols[self.source.index(i + 1, h)] = self.target.shift(&images[i], a - h);
            }
        }
        cols
    }

    /// Injective iff the socle `(i, 1)` maps to independent vectors.
    fn is_injective(&self, images: &[Vec<u32>]) -> bool {
        let socle: Vec<Vec<u32>> = self
            .source
            .lambda
            .parts()
            .iter()
            .zip(images)
            .map(|(&a, v)| self.target.shift(v, a - 1))
            .collect();
        rank_of(&socle, self.source.p) == socle.len()
    }

    fn for_each(&self, limit: u64, mut visit: impl FnMut(&[u32])) -> Result<()> {
        let p = self.source.p;
        space_size(p as u64, self.exponent(), limit)?;
        let mut values = vec![0u32; self.coords.len()];
        loop {
            visit(&values);
            let mut k = 0;
            loop {
                if k == values.len() {
                    return Ok(());
                }
                values[k] += 1;
                if values[k] < p {
                    break;
                }
                values[k] = 0;
                k += 1;
            }
        }
    }
}

type Matrix = Vec<u32>;

/// Row-major matrix of a homomorphism from its columns.
fn to_matrix(cols: &[Vec<u32>], rows: usize) -> Matrix {
    let mut m = vec![0; rows * cols.len()];
    for (c, col) in cols.iter().enumerate() {
        for r in 0..rows {
            m[r * cols.len() + c] = col[r];
        }
    }
    m
}

fn mat_mul(a: &[u32], b: &[u32], n: usize, k: usize, m: usize, p: u32) -> Matrix {
    let mut out = vec![0u32; n * m];
    for i in 0..n {
        for t in 0..k {
            let x = a[i * k + t] as u64;
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i * m + j] = ((out[i * m + j] as u64 + x * b[t * m + j] as u64) % p as u64) as u32;
            }
        }
    }
    out
}

struct Scan {
    monos: u64,
    submodules: HashSet<Vec<u32>>,
    kept: Vec<Matrix>,
}

fn scan(triple: &PartitionTriple, p: u64, limit: u64, keep: bool) -> Result<Scan> {
    let space = HomSpace::new(&triple.alpha, &triple.beta, p)?;
    let pf = space.source.p;
    let dim = space.target.dim();
    let mut out = Scan { monos: 0, submodules: HashSet::new(), kept: Vec::new() };
    if triple.alpha.size() + triple.gamma.size() != triple.beta.size() {
        space_size(p, space.exponent(), limit)?;
        return Ok(out);
    }
    let mut failure = None;
    space.for_each(limit, |values| {
        let images = space.generator_images(values);
        if !space.is_injective(&images) {
            return;
        }
        let cols = space.columns(&images);
        match space.target.quotient_type(&cols) {
            Ok(t) if t == triple.gamma => {}
            Ok(_) => return,
            Err(e) => {
                failure.get_or_insert(e);
                return;
            }
        }
        out.monos += 1;
        let mut rows = cols.clone();
        rref(&mut rows, pf);
        out.submodules.insert(rows.concat());
        if keep {
            out.kept.push(to_matrix(&cols, dim));
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Number of injective homomorphisms `N_α → N_β` with cokernel `N_γ`.
pub fn count_monos(triple: &PartitionTriple, p: u64, limit: u64) -> Result<u64> {
    Ok(scan(triple, p, limit, false)?.monos)
}

/// Number of submodules `U ⊆ N_β` with `U ≅ N_α` and `N_β/U ≅ N_γ`.
pub fn count_submodules(triple: &PartitionTriple, p: u64, limit: u64) -> Result<u64> {
    let s = scan(triple, p, limit, false)?;
    let subs = s.submodules.len() as u64;
    let aut = aut_order(&triple.alpha, p)?;
    if BigUint::from(s.monos) != aut * BigUint::from(subs) {
        return Err(Error::Internal(format!("{} monos do not split into {subs} submodules", s.monos)));
    }
    Ok(subs)
}

/// `|Aut N_λ(F_p)| = q^{|λ|+2n(λ)} ∏_i ∏_{j=1}^{m_i} (1 − q^{−j})`.
pub fn aut_order(lambda: &Partition, p: u64) -> Result<BigUint> {
    check_prime(p)?;
    let q = BigInt::from(p);
    let mut value = BigRational::from_integer(num_traits::pow(q.clone(), crate::dims::aut_degree(lambda) as usize));
    for part in 1..=lambda.largest() {
        for j in 1..=lambda.multiplicity(part) {
            let qj = BigRational::from_integer(num_traits::pow(q.clone(), j));
            value *= BigRational::one() - qj.recip();
        }
    }
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Internal(format!("automorphism count {value} is not a natural number")));
    }
    Ok(value.to_integer().to_biguint().expect("non-negative"))
}

/// Counts automorphisms by enumeration. Only the coordinates reaching the
/// socle decide invertibility, so those are enumerated and the remaining
/// ones contribute a power of `p`. Rows of the socle matrix are chosen one
/// at a time and each is reduced against the rows already chosen.
pub fn aut_order_brute(lambda: &Partition, p: u64, limit: u64) -> Result<BigUint> {
    let pf = check_prime(p)?;
    let parts = lambda.parts();
    let n = parts.len();
    // generator i reaches the socle of block j at height λ_i when λ_j ≥ λ_i
    let allowed: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| parts[j] >= parts[i]).collect()).collect();
    let socle: u32 = allowed.iter().map(|a| a.len() as u32).sum();
    let total: u32 = (0..n).flat_map(|i| (0..n).map(move |j| parts[i].min(parts[j]))).sum();
    space_size(p, socle, limit)?;

    struct Search<'a> {
        p: u32,
        allowed: &'a [Vec<usize>],
        n: usize,
        // echelon rows with their pivot column, pivot entry 1
        basis: Vec<(usize, Vec<u32>)>,
        count: u64,
    }
    impl Search<'_> {
        fn reduce(&self, v: &mut [u32]) -> Option<usize> {
            let p = self.p as u64;
            for (pivot, row) in &self.basis {
                let f = v[*pivot] as u64;
                if f != 0 {
                    for (x, &r) in v.iter_mut().zip(row) {
                        *x = ((*x as u64 + p - f * r as u64 % p) % p) as u32;
                    }
                }
            }
            v.iter().position(|&x| x != 0)
        }

        fn row(&mut self, i: usize) {
            if i == self.n {
                self.count += 1;
                return;
            }
            let cols = &self.allowed[i];
            let mut digits = vec![0u32; cols.len()];
            loop {
                let mut v = vec![0u32; self.n];
                for (&c, &d) in cols.iter().zip(&digits) {
                    v[c] = d;
                }
                if let Some(pivot) = self.reduce(&mut v) {
                    let scale = inv(v[pivot], self.p) as u64;
                    for x in v.iter_mut() {
                        *x = (*x as u64 * scale % self.p as u64) as u32;
                    }
                    self.basis.push((pivot, v));
                    self.row(i + 1);
                    self.basis.pop();
                }
                let mut k = 0;
                loop {
                    if k == digits.len() {
                        return;
                    }
                    digits[k] += 1;
                    if digits[k] < self.p {
                        break;
                    }
                    digits[k] = 0;
                    k += 1;
                }
            }
        }
    }

    let mut search = Search { p: pf, allowed: &allowed, n, basis: Vec::new(), count: 0 };
    search.row(0);
    Ok(BigUint::from(search.count) * num_traits::pow(BigUint::from(p), (total - socle) as usize))
}

/// All automorphisms of `N_λ` as row-major matrices.
fn aut_elements(lambda: &Partition, p: u64, limit: u64) -> Result<Vec<Matrix>> {
    let space = HomSpace::new(lambda, lambda, p)?;
    let dim = space.target.dim();
    let mut out = Vec::new();
    space.for_each(limit, |values| {
        let images = space.generator_images(values);
        if space.is_injective(&images) {
            out.push(to_matrix(&space.columns(&images), dim));
        }
    })?;
    Ok(out)
}

/// A subset of `group` generating it, chosen greedily in enumeration order.
fn generators(group: &[Matrix], n: usize, p: u32) -> Vec<Matrix> {
    let mut identity = vec![0; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    let mut closure: HashSet<Matrix> = HashSet::from([identity.clone()]);
    let mut gens: Vec<Matrix> = Vec::new();
    for g in group {
        if closure.len() == group.len() {
            break;
        }
        if closure.contains(g) {
            continue;
        }
        gens.push(g.clone());
        // old elements need the new generator, new elements need all of them
        let mut queue: VecDeque<(Matrix, bool)> = closure.iter().map(|x| (x.clone(), false)).collect();
        while let Some((x, fresh)) = queue.pop_front() {
            let apply: &[Matrix] = if fresh { &gens } else { &gens[gens.len() - 1..] };
            for s in apply {
                let y = mat_mul(&x, s, n, n, n, p);
                if closure.insert(y.clone()) {
                    queue.push_back((y, true));
                }
            }
        }
    }
    gens
}

/// Orbits of `Aut N_α × Aut N_β` acting on the embeddings by
/// `(g, h)·f = h f g⁻¹`.
pub fn orbit_count(triple: &PartitionTriple, p: u64, limit: u64) -> Result<usize> {
    let pf = check_prime(p)?;
    let monos = scan(triple, p, limit, true)?.kept;
    let (a, b) = (triple.alpha.size() as usize, triple.beta.size() as usize);
    let gens_a = generators(&aut_elements(&triple.alpha, p, limit)?, a, pf);
    let gens_b = generators(&aut_elements(&triple.beta, p, limit)?, b, pf);
    let index: HashMap<&Matrix, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut parent: Vec<usize> = (0..monos.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, f) in monos.iter().enumerate() {
        let moved = gens_a
            .iter()
            .map(|g| mat_mul(f, g, b, a, a, pf))
            .chain(gens_b.iter().map(|h| mat_mul(h, f, b, b, a, pf)));
        for y in moved {
            let j = *index
                .get(&y)
                .ok_or_else(|| Error::Internal("the group action leaves the embeddings".to_string()))?;
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    Ok((0..monos.len()).filter(|&i| find(&mut parent, i) == i).count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialReport {
    pub points: Vec<(u64, u64)>,
    /// Coefficients from the constant term up, as exact fractions.
    pub coefficients: Vec<String>,
    pub integral: bool,
    pub degree: Option<usize>,
    pub leading: Option<String>,
    pub expected_degree: i64,
    pub expected_leading: usize,
    pub matches: bool,
}

/// The interpolating polynomial through `points`, constant term first,
/// without trailing zero coefficients.
pub fn lagrange(points: &[(u64, u64)]) -> Vec<BigRational> {
    let mut total = vec![BigRational::zero(); points.len()];
    for (i, &(xi, yi)) in points.iter().enumerate() {
        // basis polynomial ∏_{j≠i} (t − x_j)/(x_i − x_j)
        let mut basis = vec![BigRational::one()];
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(BigInt::from(xi) - BigInt::from(xj));
            let shift = BigRational::from_integer(BigInt::from(xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c / &denom;
                next[k] -= c * &shift / &denom;
            }
            basis = next;
        }
        for (k, c) in basis.into_iter().enumerate() {
            total[k] += c * BigRational::from_integer(BigInt::from(yi));
        }
    }
    while total.last().is_some_and(Zero::is_zero) {
        total.pop();
    }
    total
}

/// Interpolates the submodule counts at the given primes and compares the
/// result with the predicted degree `n(β) − n(α) − n(γ)` and leading
/// coefficient `c`.
pub fn interpolate_hall(triple: &PartitionTriple, primes: &[u64], limit: u64) -> Result<PolynomialReport> {
    let expected_degree = crate::dims::hall_degree(triple);
    let expected_leading = lr_coefficient(triple)?;
    let needed = expected_degree.max(0) as usize + 1;
    let distinct: HashSet<&u64> = primes.iter().collect();
    if distinct.len() < needed || distinct.len() != primes.len() {
        return Err(Error::InsufficientPoints { needed, got: distinct.len() });
    }
    let points = primes
        .iter()
        .map(|&p| Ok((p, count_submodules(triple, p, limit)?)))
        .collect::<Result<Vec<_>>>()?;
    let poly = lagrange(&points);
    let integral = poly.iter().all(BigRational::is_integer);
    let degree = poly.len().checked_sub(1);
    let leading = poly.last().cloned();
    let matches = if expected_leading == 0 {
        poly.is_empty()
    } else {
        degree == Some(expected_degree as usize)
            && leading.as_ref().and_then(|c| c.to_integer().to_usize()) == Some(expected_leading)
            && leading.as_ref().is_some_and(BigRational::is_integer)
    };
    Ok(PolynomialReport {
        points,
        coefficients: poly.iter().map(ToString::to_string).collect(),
        integral,
        degree,
        leading: leading.map(|c| c.to_string()),
        expected_degree,
        expected_leading,
        matches: matches && integral,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub p: u64,
    pub mono_count: u64,
    pub submodule_count: u64,
    pub aut_alpha: String,
    pub aut_beta: String,
    /// `mono_count = |Aut N_α| · submodule_count`.
    pub fibration: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub rows: Vec<PrimeRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialReport>,
}

impl CountReport {
    /// Every checked identity holds.
    pub fn all_ok(&self) -> bool {
        let orbits_ok = self.rows.iter().all(|r| match (r.orbit_count, self.diagram_count) {
            (Some(o), Some(d)) => o == d,
            _ => true,
        });
        self.rows.iter().all(|r| r.fibration) && orbits_ok && self.polynomial.as_ref().is_none_or(|p| p.matches)
    }
}

pub fn count_report(triple: &PartitionTriple, primes: &[u64], orbits: bool, limit: u64) -> Result<CountReport> {
    triple.check()?;
    let mut rows = Vec::new();
    for &p in primes {
        let s = scan(triple, p, limit, false)?;
        let aut_alpha = aut_order(&triple.alpha, p)?;
        let submodule_count = s.submodules.len() as u64;
        rows.push(PrimeRow {
            p,
            mono_count: s.monos,
            submodule_count,
            fibration: BigUint::from(s.monos) == &aut_alpha * BigUint::from(submodule_count),
            aut_alpha: aut_alpha.to_string(),
            aut_beta: aut_order(&triple.beta, p)?.to_string(),
            orbit_count: if orbits { Some(orbit_count(triple, p, limit)?) } else { None },
        });
    }
    let needed = crate::dims::hall_degree(triple).max(0) as usize + 1;
    let polynomial = if primes.len() >= needed { Some(interpolate_hall(triple, primes, limit)?) } else { None };
    let diagram_count = if orbits { Some(crate::arcs::diagrams_of_type(triple)?.len()) } else { None };
    Ok(CountReport {
        alpha: triple.alpha.clone(),
        beta: triple.beta.clone(),
        gamma: triple.gamma.clone(),
        rows,
        diagram_count,
        polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(a: &str, b: &str, g: &str) -> PartitionTriple {
        PartitionTriple::new(p(a), p(b), p(g))
    }

    #[test]
    fn primes_and_limits() {
        assert!(is_prime(2) && is_prime(31) && !is_prime(1) && !is_prime(9));
        assert_eq!(count_monos(&t("1", "2,1", "2"), 4, DEFAULT_LIMIT), Err(Error::NotPrime(4)));
        assert_eq!(
            count_monos(&t("2,1", "3,2,1", "2,1"), 2, 100),
            Err(Error::SearchLimit { p: 2, exponent: 8, limit: 100 })
        );
    }

    #[test]
    fn quotient_types() {
        let m = NilpotentModule::new(&p("2,1"), 2).unwrap();
        // the span of (1,1) leaves blocks of sizes 1 and 1
        let mut v = vec![0; 3];
        v[m.index(1, 1)] = 1;
        assert_eq!(m.quotient_type(&[v]).unwrap(), p("1,1"));
        let mut w = vec![0; 3];
        w[m.index(2, 1)] = 1;
        assert_eq!(m.quotient_type(&[w]).unwrap(), p("2"));
        assert_eq!(m.quotient_type(&[]).unwrap(), p("2,1"));
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_monos(&t("1", "2,1", "2"), 2, DEFAULT_LIMIT).unwrap(), 2);
        assert_eq!(count_submodules(&t("1", "2,1", "2"), 2, DEFAULT_LIMIT).unwrap(), 2);
        assert_eq!(count_monos(&t("1", "1,1,1", "1,1"), 2, DEFAULT_LIMIT).unwrap(), 7);
        for (q, n) in [(2, 7), (3, 13), (5, 31)] {
            assert_eq!(count_submodules(&t("1", "1,1,1", "1,1"), q, DEFAULT_LIMIT).unwrap(), n);
        }
        assert_eq!(count_submodules(&t("1,1", "1,1,1", "1"), 2, DEFAULT_LIMIT).unwrap(), 7);
        assert_eq!(count_monos(&t("", "2,1", "2,1"), 3, DEFAULT_LIMIT).unwrap(), 1);
        assert_eq!(count_monos(&t("1", "2,1", "3"), 2, DEFAULT_LIMIT).unwrap(), 0);
    }

    #[test]
    fn automorphism_orders() {
        assert_eq!(aut_order(&p("1,1"), 2).unwrap(), BigUint::from(6u32));
        assert_eq!(aut_order(&p("1"), 7).unwrap(), BigUint::from(6u32));
        assert_eq!(aut_order(&p("2"), 2).unwrap(), BigUint::from(2u32));
        assert_eq!(aut_order(&p(""), 2).unwrap(), BigUint::from(1u32));
        assert_eq!(aut_elements(&p("1,1"), 2, DEFAULT_LIMIT).unwrap().len(), 6);
        let mut skipped = Vec::new();
        for n in 0..=5 {
            for lambda in partitions_of(n) {
                for q in [2, 3] {
                    match aut_order_brute(&lambda, q, 1 << 26) {
                        Ok(count) => assert_eq!(count, aut_order(&lambda, q).unwrap(), "{lambda:?} at {q}"),
                        Err(Error::SearchLimit { .. }) => skipped.push((lambda.clone(), q)),
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
        assert_eq!(skipped, vec![(p("1,1,1,1,1"), 3)]);
    }

    #[test]
    fn full_enumeration_matches_the_socle_count() {
        for lambda in ["2,1", "3,1", "2,2", "2,1,1"] {
            let lambda = p(lambda);
            let all = aut_elements(&lambda, 2, DEFAULT_LIMIT).unwrap().len();
            assert_eq!(BigUint::from(all), aut_order(&lambda, 2).unwrap());
        }
    }

    #[test]
    fn generated_subgroup_is_everything() {
        let group = aut_elements(&p("2,1"), 3, DEFAULT_LIMIT).unwrap();
        let gens = generators(&group, 3, 3);
        assert!(gens.len() < group.len());
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit_count(&t("1", "2,1", "2"), 2, DEFAULT_LIMIT).unwrap(), 1);
        assert_eq!(orbit_count(&t("1", "2,1", "1,1"), 2, DEFAULT_LIMIT).unwrap(), 1);
        assert_eq!(orbit_count(&t("", "2,1", "2,1"), 2, DEFAULT_LIMIT).unwrap(), 1);
        assert_eq!(orbit_count(&t("2,1", "3,2,1", "2,1"), 2, DEFAULT_LIMIT).unwrap(), 3);
    }

    #[test]
    fn interpolation() {
        let r = interpolate_hall(&t("1", "2,1", "2"), &[2, 3], DEFAULT_LIMIT).unwrap();
        assert_eq!(r.coefficients, vec!["0", "1"]);
        assert!(r.matches);
        let r = interpolate_hall(&t("1", "1,1,1", "1,1"), &[2, 3, 5], DEFAULT_LIMIT).unwrap();
        assert_eq!(r.coefficients, vec!["1", "1", "1"]);
        let r = interpolate_hall(&t("2,1", "3,2,1", "2,1"), &[2, 3, 5], DEFAULT_LIMIT).unwrap();
        assert_eq!((r.degree, r.leading.as_deref(), r.matches), (Some(2), Some("2"), true));
        assert_eq!(
            interpolate_hall(&t("1", "1,1,1", "1,1"), &[2, 3], DEFAULT_LIMIT),
            Err(Error::InsufficientPoints { needed: 3, got: 2 })
        );
    }

    #[test]
    fn lagrange_recovers_integer_polynomials() {
        let f = |x: u64| 3 * x * x * x + 2 * x + 7;
        let pts: Vec<(u64, u64)> = [2, 3, 5, 7, 11].iter().map(|&x| (x, f(x))).collect();
        let poly: Vec<String> = lagrange(&pts).iter().map(ToString::to_string).collect();
        assert_eq!(poly, vec!["7", "2", "0", "3"]);
    }
}
