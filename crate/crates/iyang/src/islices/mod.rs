//! Type AI islice combinatorics for `PGL_n`: the dictionary between pairs of
//! dominant coweights and pairs of partitions, orthogonal and symplectic
//! partitions, the epsilon-collapse, and the orbit data of an islice.
//!
//! Coweights of `PGL_n` are given by their pairing vectors
//! `(<λ, α_1>, ..., <λ, α_{n-1}>)`. A partition with at most `n` parts,
//! padded with zeros to `(λ_1 >= ... >= λ_n)`, has pairing vector
//! `<λ, α_k> = λ_k - λ_{k+1}`; this single rule gives both `π_1` (with
//! `λ_n = 0`) and `π_2` (with the total fixed to `N = Σ_i i 𝐰_i`).
//! Zero parts are trimmed on output and padded on input.

mod orbits;

pub use orbits::{
    jordan_type, nilpotent_representative, orbit_dimension, orbit_dimension_by_centralizer, NilpotentRepresentative,
    OrbitKind,
};

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::rootdata::{coroot_coordinates, gklo_integers, parity_condition, strata, Coweight, DynkinKind, SatakeDiagram};
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Validates weak decrease and positivity.
    pub fn new(parts: Vec<i64>) -> Result<Partition> {
        if parts.iter().any(|&p| p <= 0) {
            return Err(Error::Inconsistent(format!("partition {:?} has a non-positive part", parts)));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Inconsistent(format!("partition {:?} is not weakly decreasing", parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts the entries and drops zeros; negative entries are an error.
    pub fn from_unsorted(mut parts: Vec<i64>) -> Result<Partition> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Inconsistent(format!("negative part in {:?}", parts)));
        }
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// `N = Σ parts`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition of 0.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `k`-th part (zero-based), zero past the end.
    pub fn part(&self, k: usize) -> i64 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: i64) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as i64)
            .collect();
        Partition { parts }
    }

    /// Partial sums `λ_1, λ_1 + λ_2, ...` up to length `len`.
    fn prefix_sums(&self, len: usize) -> Vec<i64> {
        (0..len)
            .scan(0, |acc, k| {
                *acc += self.part(k);
                Some(*acc)
            })
            .collect()
    }

    /// `self ⊴ other`: equal sizes and every prefix sum of `self` is at most that of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        self.prefix_sums(len)
            .iter()
            .zip(other.prefix_sums(len))
            .all(|(a, b)| *a <= b)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// `pi ⊴ other` in the dominance order.
pub fn dominance(pi: &Partition, other: &Partition) -> bool {
    pi.dominated_by(other)
}

/// Orthogonal (`+`) or symplectic (`-`) context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsilonKind {
    /// `so_N`: even parts occur with even multiplicity.
    Plus,
    /// `sp_N`: odd parts occur with even multiplicity.
    Minus,
}

impl EpsilonKind {
    /// `"+"` or `"-"`.
    pub fn symbol(self) -> &'static str {
        match self {
            EpsilonKind::Plus => "+",
            EpsilonKind::Minus => "-",
        }
    }

    /// Remainder mod 2 of the parts that must occur with even multiplicity.
    fn paired_parity(self) -> i64 {
        match self {
            EpsilonKind::Plus => 0,
            EpsilonKind::Minus => 1,
        }
    }

    /// The opposite kind.
    pub fn flip(self) -> EpsilonKind {
        match self {
            EpsilonKind::Plus => EpsilonKind::Minus,
            EpsilonKind::Minus => EpsilonKind::Plus,
        }
    }
}

impl fmt::Display for EpsilonKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for EpsilonKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// `+` when every part is odd, `-` when every part is even.
///
/// The empty partition is reported as `+`.
pub fn epsilon_of(pi: &Partition) -> Result<EpsilonKind> {
    let odd = pi.parts.iter().filter(|&&p| p % 2 == 1).count();
    if odd == pi.len() {
        Ok(EpsilonKind::Plus)
    } else if odd == 0 {
        Ok(EpsilonKind::Minus)
    } else {
        Err(Error::MixedParity(pi.to_string()))
    }
}

/// Whether every part of the paired parity occurs with even multiplicity.
pub fn is_epsilon_partition(pi: &Partition, eps: EpsilonKind) -> bool {
    let mut k = 0;
    while k < pi.len() {
        let p = pi.parts[k];
        let m = pi.multiplicity(p);
        if p % 2 == eps.paired_parity() && m % 2 == 1 {
            return false;
        }
        k += m;
    }
    true
}

/// All parts of the single parity allowed for `eps` (odd for `+`, even for `-`).
pub fn is_diamond(pi: &Partition, eps: EpsilonKind) -> bool {
    pi.parts.iter().all(|&p| p % 2 != eps.paired_parity())
}

/// An orthogonal partition with only even parts, each of even multiplicity.
pub fn is_very_even(pi: &Partition) -> bool {
    !pi.is_empty() && pi.parts.iter().all(|&p| p % 2 == 0) && is_epsilon_partition(pi, EpsilonKind::Plus)
}

fn partitions_with_max(n: i64, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: prefix.clone() });
        return;
    }
    for p in (1..=max.min(n)).rev() {
        prefix.push(p);
        partitions_with_max(n - p, p, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn enumerate_partitions(n: i64) -> Vec<Partition> {
    if n <= 0 {
        return if n == 0 { vec![Partition::default()] } else { Vec::new() };
    }
    let chunks: Vec<Vec<Partition>> = (1..=n)
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut prefix = vec![first];
            partitions_with_max(n - first, first, &mut prefix, &mut out);
            out
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

/// `Par_ε(N)`, optionally restricted to at most `max_len` parts and to the single-parity subset.
pub fn enumerate_epsilon_partitions(n: i64, eps: EpsilonKind, max_len: Option<usize>, diamond: bool) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|p| is_epsilon_partition(p, eps))
        .filter(|p| max_len.map_or(true, |m| p.len() <= m))
        .filter(|p| !diamond || is_diamond(p, eps))
        .collect()
}

/// The dominance-maximal elements of `Par_ε(N)` lying below `pi`.
pub fn epsilon_maxima_below(pi: &Partition, eps: EpsilonKind) -> Vec<Partition> {
    let below: Vec<Partition> = enumerate_epsilon_partitions(pi.size(), eps, None, false)
        .into_iter()
        .filter(|q| q.dominated_by(pi))
        .collect();
    below
        .iter()
        .filter(|q| !below.iter().any(|r| r != *q && q.dominated_by(r)))
        .cloned()
        .collect()
}

/// The unique dominance-maximal `ε`-partition below `pi`, found by exhaustive search.
pub fn epsilon_collapse(pi: &Partition, eps: EpsilonKind) -> Result<Partition> {
    let mut maxima = epsilon_maxima_below(pi, eps);
    match maxima.len() {
        0 => Err(Error::NoEpsilonPartitionBelow(format!("{} for {}", pi, eps))),
        1 => Ok(maxima.remove(0)),
        _ => Err(Error::Mismatch(format!(
            "{} has {} maximal {}-partitions below it",
            pi,
            maxima.len(),
            eps
        ))),
    }
}

/// The iterative collapse: while some part `q` of the paired parity has odd
/// multiplicity, take the largest such `q`, lower its last occurrence by one
/// and raise the first later part smaller than `q - 1` by one (appending a
/// part `1` if there is none).
pub fn epsilon_collapse_fast(pi: &Partition, eps: EpsilonKind) -> Result<Partition> {
    if eps == EpsilonKind::Minus && pi.size() % 2 == 1 {
        return Err(Error::NoEpsilonPartitionBelow(format!("{} for {}", pi, eps)));
    }
    let mut parts = pi.parts.clone();
    loop {
        let bad = parts
            .iter()
            .copied()
            .filter(|&p| p % 2 == eps.paired_parity() && parts.iter().filter(|&&x| x == p).count() % 2 == 1)
            .max();
        let Some(q) = bad else {
            return Partition::new(parts);
        };
        let last = parts.iter().rposition(|&x| x == q).unwrap_or(0);
        parts[last] -= 1;
        match (last + 1..parts.len()).find(|&k| parts[k] < q - 1) {
            Some(k) => parts[k] += 1,
            None => parts.push(1),
        }
        parts.retain(|&p| p > 0);
    }
}

fn split_a(n: usize) -> Result<SatakeDiagram> {
    if n < 2 {
        return Err(Error::UnsupportedDiagram(format!("PGL_{} has no simple roots", n)));
    }
    SatakeDiagram::split(DynkinKind::A, n - 1)
}

/// The partition with at most `n` parts whose consecutive differences are the
/// pairings of `nu` and whose size is `total`.
pub fn partition_of_coweight(nu: &Coweight, n: usize, total: i64) -> Result<Partition> {
    if nu.0.len() + 1 != n {
        return Err(Error::Inconsistent(format!("coweight {:?} is not a PGL_{} coweight", nu.0, n)));
    }
    if !nu.is_dominant() {
        return Err(Error::NotDominated(format!("{:?} is not dominant", nu.0)));
    }
    let tail: Vec<i64> = (0..n).map(|k| nu.0[k..].iter().sum()).collect();
    let base = total - tail.iter().sum::<i64>();
    let nn = n as i64;
    if base < 0 || base % nn != 0 {
        return Err(Error::Inconsistent(format!(
            "no partition of {} with at most {} parts has pairings {:?}",
            total, n, nu.0
        )));
    }
    Partition::from_unsorted(tail.iter().map(|t| t + base / nn).collect())
}

/// The pairing vector of a partition with at most `n` parts.
pub fn coweight_of_partition(pi: &Partition, n: usize) -> Result<Coweight> {
    if pi.len() > n {
        return Err(Error::LengthViolation(format!("{} has more than {} parts", pi, n)));
    }
    Ok(Coweight((0..n - 1).map(|k| pi.part(k) - pi.part(k + 1)).collect()))
}

/// The partition pair of a pair of dominant coweights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionPair {
    /// `π_1`, with at most `n - 1` parts.
    pub pi1: Partition,
    /// `π_2`, with at most `n` parts.
    pub pi2: Partition,
    /// `N = Σ_i i <λ, α_i>`.
    pub total: i64,
}

/// `(λ, μ) ↦ (π_1, π_2, N)` for `PGL_n`, `λ >= μ` dominant.
pub fn coweights_to_partitions(n: usize, lam: &Coweight, mu: &Coweight) -> Result<PartitionPair> {
    let d = split_a(n)?;
    if lam.0.len() + 1 != n || mu.0.len() + 1 != n {
        return Err(Error::Inconsistent(format!("coweights must have {} pairings", n - 1)));
    }
    if !lam.is_dominant() || !mu.is_dominant() {
        return Err(Error::NotDominated(format!("{:?} or {:?} is not dominant", lam.0, mu.0)));
    }
    coroot_coordinates(lam, mu, &d)?;
    let total: i64 = lam.0.iter().enumerate().map(|(i, w)| (i as i64 + 1) * w).sum();
    let pi1 = partition_of_coweight(lam, n, total)?;
    let pi2 = partition_of_coweight(mu, n, total)?;
    Ok(PartitionPair { pi1, pi2, total })
}

/// `(π_1, π_2) ↦ (λ, μ)` for `PGL_n`.
pub fn partitions_to_coweights(pi1: &Partition, pi2: &Partition, n: usize) -> Result<(Coweight, Coweight)> {
    split_a(n)?;
    if pi1.len() + 1 > n {
        return Err(Error::LengthViolation(format!("{} has more than {} parts", pi1, n - 1)));
    }
    if pi1.size() != pi2.size() {
        return Err(Error::Inconsistent(format!("{} and {} have different sizes", pi1, pi2)));
    }
    if !pi2.dominated_by(pi1) {
        return Err(Error::NotDominated(format!("{} does not dominate {}", pi1, pi2)));
    }
    Ok((coweight_of_partition(pi1, n)?, coweight_of_partition(pi2, n)?))
}

/// One stratum `ν` of the slice and its partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumPartition {
    /// Pairing vector of `ν`.
    pub nu: Vec<i64>,
    /// Partition of `ν` with the slice's total `N`.
    pub partition: Partition,
    /// Whether the fixed-point stratum is non-empty, i.e. the partition is an `ε`-partition.
    pub fixed_nonempty: bool,
}

/// Everything recorded about a type AI islice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsliceOrbitData {
    /// `n` of `PGL_n`.
    pub n: usize,
    /// Pairings of `λ`.
    pub lam: Vec<i64>,
    /// Pairings of `μ`.
    pub mu: Vec<i64>,
    /// `N`.
    pub total: i64,
    /// Orthogonal or symplectic.
    pub eps: EpsilonKind,
    /// Partition of `λ`.
    pub pi1: Partition,
    /// Partition of `μ`.
    pub pi2: Partition,
    /// Whether the open stratum is non-empty, i.e. `π_1` is an `ε`-partition.
    pub nonempty_open_stratum: bool,
    /// The `ε`-collapse `π_1'` of `π_1`.
    pub collapse: Partition,
    /// Pairings of the coweight `λ'` whose stratum is dense.
    pub lam_collapse: Vec<i64>,
    /// `π_1'` is very even, so its orthogonal orbit has two components.
    pub very_even: bool,
    /// Coroot coordinates of `λ - μ`.
    pub v: Vec<i64>,
    /// `2 Σ 𝔳_i`.
    pub dim: i64,
    /// Whether the parity condition for the difference-operator chart holds.
    pub parity_condition: bool,
    /// `dim 𝕆^ε_{π_1'} - dim 𝕆^ε_{π_2}` from the partition formulas.
    pub orbit_dim: i64,
}

/// Partition data, non-emptiness, collapse and dimension of the type AI islice for `(λ, μ)`.
pub fn islice_orbit_data(n: usize, lam: &Coweight, mu: &Coweight) -> Result<IsliceOrbitData> {
    let pair = coweights_to_partitions(n, lam, mu)?;
    if !mu.is_even() {
        return Err(Error::MixedParity(format!("μ = {:?} is not even; π_2 = {}", mu.0, pair.pi2)));
    }
    let eps = epsilon_of(&pair.pi2)?;
    let collapse = epsilon_collapse(&pair.pi1, eps)?;
    let d = split_a(n)?;
    let g = gklo_integers(lam, mu, &d, None)?;
    let orbit_dim = orbit_dimension(&collapse, OrbitKind::Epsilon(eps))? - orbit_dimension(&pair.pi2, OrbitKind::Epsilon(eps))?;
    Ok(IsliceOrbitData {
        n,
        lam: lam.0.clone(),
        mu: mu.0.clone(),
        total: pair.total,
        eps,
        nonempty_open_stratum: is_epsilon_partition(&pair.pi1, eps),
        lam_collapse: coweight_of_partition(&collapse, n)?.0,
        very_even: eps == EpsilonKind::Plus && is_very_even(&collapse),
        v: g.v.clone(),
        dim: 2 * g.frak_v.iter().sum::<i64>(),
        parity_condition: parity_condition(&g, &d),
        orbit_dim,
        collapse,
        pi1: pair.pi1,
        pi2: pair.pi2,
    })
}

/// The dominant strata `μ <= ν <= λ` with their partitions, ordered as in [`strata`].
pub fn strata_partitions(n: usize, lam: &Coweight, mu: &Coweight) -> Result<Vec<StratumPartition>> {
    let pair = coweights_to_partitions(n, lam, mu)?;
    let eps = epsilon_of(&pair.pi2).ok();
    let d = split_a(n)?;
    strata(lam, mu, &d)?
        .into_iter()
        .map(|nu| {
            let partition = partition_of_coweight(&nu, n, pair.total)?;
            let fixed_nonempty = eps.map_or(false, |e| is_epsilon_partition(&partition, e));
            Ok(StratumPartition {
                nu: nu.0,
                partition,
                fixed_nonempty,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests;
