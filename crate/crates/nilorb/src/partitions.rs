//! Partitions, bipartitions and the orbit combinatorics of the classical types.
//!
//! Nilpotent orbits of `so(2n+1)`, `sp(2n)` and `so(2n)` are indexed by partitions of
//! `2n+1`, `2n` and `2n` subject to a parity condition on multiplicities (very even
//! orbits of `so(2n)` additionally carry a decoration).  This module implements those
//! partitions together with collapses, the order-reversing duality, special orbits and
//! the reduction map used to build markings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// One of the three classical Cartan types handled by the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    /// `so(2n+1)`.
    B,
    /// `sp(2n)`.
    C,
    /// `so(2n)`.
    D,
}

impl Letter {
    /// Langlands dual letter: `B ↔ C`, `D ↔ D`.
    pub fn dual(self) -> Letter {
        match self {
            Letter::B => Letter::C,
            Letter::C => Letter::B,
            Letter::D => Letter::D,
        }
    }

    /// Letter of the first factor of a maximal pseudo-Levi subalgebra: `D` for `B` and
    /// `D`, `C` for `C`.
    pub fn factor(self) -> Letter {
        match self {
            Letter::B | Letter::D => Letter::D,
            Letter::C => Letter::C,
        }
    }

    /// Size of the partitions indexing orbits of rank `rank`.
    pub fn partition_size(self, rank: usize) -> usize {
        match self {
            Letter::B => 2 * rank + 1,
            Letter::C | Letter::D => 2 * rank,
        }
    }

    /// Inverse of [`Letter::partition_size`].
    pub fn rank_of_size(self, size: usize) -> Option<usize> {
        match self {
            Letter::B if size % 2 == 1 => Some(size / 2),
            Letter::C | Letter::D if size % 2 == 0 => Some(size / 2),
            _ => None,
        }
    }

    /// The parity `ω_X`: `1` for `B` and `D`, `0` for `C`.
    pub fn omega(self) -> u32 {
        match self {
            Letter::B | Letter::D => 1,
            Letter::C => 0,
        }
    }

    /// Parity of the parts that must occur with even multiplicity.
    fn restricted_parity(self) -> u32 {
        1 - self.omega()
    }

    /// One-letter name.
    pub fn name(self) -> &'static str {
        match self {
            Letter::B => "B",
            Letter::C => "C",
            Letter::D => "D",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(Letter::B),
            "C" | "c" => Ok(Letter::C),
            "D" | "d" => Ok(Letter::D),
            other => Err(Error::Parse(format!("unknown type letter `{other}` (expected B, C or D)"))),
        }
    }
}

/// A classical Cartan type with its rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    /// Cartan letter.
    pub letter: Letter,
    /// Rank `n`.
    pub rank: usize,
}

impl LieType {
    /// Builds a type; rank 0 is accepted (the trivial group) and `D1` is treated like `A1`.
    pub fn new(letter: Letter, rank: usize) -> LieType {
        LieType { letter, rank }
    }

    /// Langlands dual type.
    pub fn dual(self) -> LieType {
        LieType { letter: self.letter.dual(), rank: self.rank }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// A partition: a finite weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) {
            return invalid(format!("partition {parts:?} has a zero part"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition {parts:?} is not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order; zero parts are discarded.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Largest part (0 for the empty partition).
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Smallest part (0 for the empty partition).
    pub fn smallest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity `m_λ(x)` of `x` as a part.
    pub fn multiplicity(&self, x: u32) -> usize {
        self.parts.iter().filter(|&&p| p == x).count()
    }

    /// Height `ht_λ(x)`: the number of parts that are at least `x`.
    pub fn height(&self, x: u32) -> usize {
        self.parts.iter().filter(|&&p| p >= x).count()
    }

    /// Distinct parts in decreasing order together with their multiplicities.
    pub fn distinct_parts(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Transpose (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        let largest = self.largest();
        let parts = (1..=largest).map(|j| self.height(j) as u32).collect();
        Partition { parts }
    }

    /// Multiset union `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Ordered union `λ ∪_≥ μ`, defined when every part of `λ` is at least every part of `μ`.
    pub fn ordered_union(&self, other: &Partition) -> Result<Partition> {
        if !self.is_empty() && !other.is_empty() && self.smallest() < other.largest() {
            return invalid(format!(
                "ordered union needs the smallest part of {self} to be at least the largest part of {other}"
            ));
        }
        Ok(self.union(other))
    }

    /// Whether `other` is a sub-multiset of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .distinct_parts()
            .into_iter()
            .all(|(v, m)| self.multiplicity(v) >= m)
    }

    /// Multiset difference `λ ∖ μ`; `μ` must be contained in `λ`.
    pub fn subtract(&self, other: &Partition) -> Result<Partition> {
        if !self.contains(other) {
            return invalid(format!("{other} is not contained in {self}"));
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &p in &other.parts {
            *counts.entry(p).or_default() += 1;
        }
        let mut parts = Vec::with_capacity(self.len() - other.len());
        for &p in &self.parts {
            match counts.get_mut(&p) {
                Some(c) if *c > 0 => *c -= 1,
                _ => parts.push(p),
            }
        }
        Ok(Partition { parts })
    }

    /// `λ^+`: the largest part raised by one (the empty partition becomes `(1)`).
    pub fn plus(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(p) => *p += 1,
            None => parts.push(1),
        }
        Partition { parts }
    }

    /// `λ^-`: the smallest part lowered by one; the empty partition is rejected.
    pub fn minus(&self) -> Result<Partition> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            Some(p) => *p -= 1,
            None => return invalid("cannot lower a part of the empty partition"),
        }
        Ok(Partition::from_unsorted(parts))
    }

    /// Dominance order: `self ≥ other` when every partial sum of `self` is at least the
    /// corresponding partial sum of `other` and the sizes agree.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as usize;
            b += other.part(i) as usize;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Whether every part is even and occurs with even multiplicity.
    pub fn is_very_even(&self) -> bool {
        !self.is_empty()
            && self
                .distinct_parts()
                .iter()
                .all(|&(v, m)| v % 2 == 0 && m % 2 == 0)
    }

    /// Zero-padded copy of the parts in increasing order, of length `len`.
    pub(crate) fn increasing_padded(&self, len: usize) -> Vec<u32> {
        let mut v = vec![0; len.saturating_sub(self.len())];
        v.extend(self.parts.iter().rev());
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Parses `3,2,2,1`, the exponent form `3,2^2,1`, or `∅` / the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.is_empty() || s == "∅" || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let value: u32 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part `{token}` in `{s}`")))?;
            let count: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
            if value == 0 {
                return Err(Error::Parse(format!("zero part in partition `{s}`")));
            }
            parts.extend(std::iter::repeat(value).take(count));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

/// A partition with a decoration `κ ∈ {0, 1}`.
///
/// The decoration is only meaningful for very even partitions; for all other partitions
/// it is normalised to `0`, so the two decorations compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecoratedPartition {
    /// Underlying partition.
    pub partition: Partition,
    /// Decoration (0 unless the partition is very even).
    pub kappa: u8,
}

impl DecoratedPartition {
    /// Attaches a decoration, normalising it away when the partition is not very even.
    pub fn new(partition: Partition, kappa: u8) -> DecoratedPartition {
        let kappa = if partition.is_very_even() { kappa % 2 } else { 0 };
        DecoratedPartition { partition, kappa }
    }

    /// An undecorated partition (decoration 0).
    pub fn plain(partition: Partition) -> DecoratedPartition {
        DecoratedPartition::new(partition, 0)
    }

    /// Whether the underlying partition is very even.
    pub fn is_very_even(&self) -> bool {
        self.partition.is_very_even()
    }
}

impl From<Partition> for DecoratedPartition {
    fn from(p: Partition) -> Self {
        DecoratedPartition::plain(p)
    }
}

impl fmt::Display for DecoratedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_very_even() {
            write!(f, "{}:{}", self.partition, self.kappa)
        } else {
            write!(f, "{}", self.partition)
        }
    }
}

impl FromStr for DecoratedPartition {
    type Err = Error;
    /// Parses `λ` or `λ:κ`.
    fn from_str(s: &str) -> Result<Self> {
        let (p, k) = split_decoration(s)?;
        Ok(DecoratedPartition::new(p.parse()?, k))
    }
}

fn split_decoration(s: &str) -> Result<(&str, u8)> {
    match s.rsplit_once(':') {
        Some((body, k)) => {
            let k: u8 = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad decoration in `{s}`")))?;
            if k > 1 {
                return Err(Error::Parse(format!("decoration must be 0 or 1 in `{s}`")));
            }
            Ok((body, k))
        }
        None => Ok((s, 0)),
    }
}

/// An ordered pair of partitions `(λ, μ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    /// First partition.
    pub first: Partition,
    /// Second partition.
    pub second: Partition,
}

impl Bipartition {
    /// Builds `(first, second)`.
    pub fn new(first: Partition, second: Partition) -> Bipartition {
        Bipartition { first, second }
    }

    /// `|λ| + |μ|`.
    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;
    /// Parses `λ;μ`.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("bipartition `{s}` needs the form `λ;μ`")))?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// An unordered pair `{λ, μ}` with a decoration used when `λ = μ`.
///
/// Stored with `first ≥ second` in the lexicographic order of parts; the decoration is
/// normalised to `0` when the two partitions differ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecoratedUnorderedBipartition {
    first: Partition,
    second: Partition,
    kappa: u8,
}

impl DecoratedUnorderedBipartition {
    /// Builds `{a, b}` with decoration `kappa` (ignored unless `a = b`).
    pub fn new(a: Partition, b: Partition, kappa: u8) -> DecoratedUnorderedBipartition {
        let (first, second) = if a >= b { (a, b) } else { (b, a) };
        let kappa = if first == second { kappa % 2 } else { 0 };
        DecoratedUnorderedBipartition { first, second, kappa }
    }

    /// The larger partition of the pair.
    pub fn first(&self) -> &Partition {
        &self.first
    }

    /// The smaller partition of the pair.
    pub fn second(&self) -> &Partition {
        &self.second
    }

    /// Decoration (0 unless the two partitions coincide).
    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    /// Whether both partitions coincide.
    pub fn is_degenerate(&self) -> bool {
        self.first == self.second
    }

    /// `|λ| + |μ|`.
    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }
}

impl fmt::Display for DecoratedUnorderedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{};{}:{}", self.first, self.second, self.kappa)
        } else {
            write!(f, "{};{}", self.first, self.second)
        }
    }
}

impl FromStr for DecoratedUnorderedBipartition {
    type Err = Error;
    /// Parses `λ;μ` or `λ;λ:κ`.
    fn from_str(s: &str) -> Result<Self> {
        let (body, k) = split_decoration(s)?;
        let b: Bipartition = body.parse()?;
        Ok(DecoratedUnorderedBipartition::new(b.first, b.second, k))
    }
}

/// Label of an irreducible Weyl group representation: an ordered bipartition for types
/// B and C, a decorated unordered bipartition for type D.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IrrepLabel {
    /// `(λ, μ)` labelling an irreducible representation of `W(B_n) = W(C_n)`.
    Ordered(Bipartition),
    /// `{λ, μ}^κ` labelling an irreducible representation of `W(D_n)`.
    Unordered(DecoratedUnorderedBipartition),
}

impl IrrepLabel {
    /// The two partitions, in stored order.
    pub fn rows(&self) -> (&Partition, &Partition) {
        match self {
            IrrepLabel::Ordered(b) => (&b.first, &b.second),
            IrrepLabel::Unordered(u) => (u.first(), u.second()),
        }
    }

    /// The decoration (always 0 for ordered labels).
    pub fn kappa(&self) -> u8 {
        match self {
            IrrepLabel::Ordered(_) => 0,
            IrrepLabel::Unordered(u) => u.kappa(),
        }
    }

    /// Total size `|λ| + |μ|`, i.e. the rank.
    pub fn size(&self) -> usize {
        let (a, b) = self.rows();
        a.size() + b.size()
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Ordered(b) => b.fmt(f),
            IrrepLabel::Unordered(u) => u.fmt(f),
        }
    }
}

/// All partitions of `n`, in decreasing lexicographic order (so the regular partition
/// `(n)` comes first and `(1^n)` last; this order refines dominance).
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Whether `λ` indexes a nilpotent orbit of type `X` (ignoring the rank).
///
/// * `B`: odd size, every even part has even multiplicity;
/// * `C`: even size, every odd part has even multiplicity;
/// * `D`: even size, every even part has even multiplicity.
pub fn is_type_partition(lambda: &Partition, x: Letter) -> bool {
    if x.rank_of_size(lambda.size()).is_none() {
        return false;
    }
    let bad = x.restricted_parity();
    lambda
        .distinct_parts()
        .iter()
        .all(|&(v, m)| v % 2 != bad || m % 2 == 0)
}

fn require_type(lambda: &Partition, x: Letter) -> Result<()> {
    if is_type_partition(lambda, x) {
        Ok(())
    } else {
        invalid(format!("{lambda} is not a type-{x} partition"))
    }
}

/// The `X`-collapse `λ_X`: the unique largest type-`X` partition dominated by `λ`.
///
/// Uses the standard iterative rule: repeatedly take the largest part `q` of the wrong
/// parity occurring with odd multiplicity, lower its last occurrence by one and raise the
/// first later part smaller than `q - 1` by one.
pub fn collapse(lambda: &Partition, x: Letter) -> Result<Partition> {
    if x.rank_of_size(lambda.size()).is_none() {
        return invalid(format!(
            "{lambda} has size {} which is not of the form required by type {x}",
            lambda.size()
        ));
    }
    let bad = x.restricted_parity();
    let mut parts = lambda.parts.clone();
    loop {
        let current = Partition { parts: parts.clone() };
        let offending = current
            .distinct_parts()
            .into_iter()
            .find(|&(v, m)| v % 2 == bad && m % 2 == 1)
            .map(|(v, _)| v);
        let Some(q) = offending else { break };
        let last = parts.iter().rposition(|&p| p == q).expect("part present");
        parts[last] -= 1;
        match parts[last + 1..].iter().position(|&p| p + 1 < q) {
            Some(off) => parts[last + 1 + off] += 1,
            None => parts.push(1),
        }
        parts.retain(|&p| p > 0);
    }
    Ok(Partition { parts })
}

/// The order-reversing duality `d` from type-`X` partitions to type-`X∨` partitions:
/// `B → C: ((λ^t)^-)_C`, `C → B: ((λ^t)^+)_B`, `D → D: (λ^t)_D`.
pub fn dual(lambda: &Partition, x: Letter) -> Result<Partition> {
    require_type(lambda, x)?;
    let t = lambda.transpose();
    match x {
        Letter::B => collapse(&t.minus()?, Letter::C),
        Letter::C => collapse(&t.plus(), Letter::B),
        Letter::D => collapse(&t, Letter::D),
    }
}

/// Whether a type-`X` partition is special.
///
/// For `B` (resp. `D`): between consecutive even parts there is an even number of odd
/// parts, and the number of odd parts above the largest even part is odd (resp. even).
/// For `C`: between consecutive odd parts there is an even number of even parts, and the
/// number of even parts above the largest odd part is even.  The clause about the
/// largest part is vacuous when there are no parts of the separating parity.
pub fn is_special(lambda: &Partition, x: Letter) -> Result<bool> {
    require_type(lambda, x)?;
    let (separator, head) = match x {
        Letter::B => (0, 1),
        Letter::C => (1, 0),
        Letter::D => (0, 0),
    };
    let mut count = 0usize;
    let mut seen = false;
    for &p in lambda.parts() {
        if p % 2 == separator {
            let required = if seen { 0 } else { head };
            if count % 2 != required {
                return Ok(false);
            }
            seen = true;
            count = 0;
        } else {
            count += 1;
        }
    }
    Ok(true)
}

/// All orbits of type `lt`, as decorated partitions, in decreasing lexicographic order
/// (regular orbit first).  Very even partitions in type `D` appear twice, with `κ = 0`
/// before `κ = 1`.
pub fn enumerate(lt: LieType) -> Result<Vec<DecoratedPartition>> {
    const BOUND: usize = 16;
    if lt.rank > BOUND {
        return Err(Error::BoundExceeded { what: "orbit enumeration".into(), rank: lt.rank, bound: BOUND });
    }
    let mut out = Vec::new();
    for p in all_partitions(lt.letter.partition_size(lt.rank)) {
        if !is_type_partition(&p, lt.letter) {
            continue;
        }
        if lt.letter == Letter::D && p.is_very_even() {
            out.push(DecoratedPartition::new(p.clone(), 0));
            out.push(DecoratedPartition::new(p, 1));
        } else {
            out.push(DecoratedPartition::plain(p));
        }
    }
    Ok(out)
}

/// Markable parts of a type-`X` partition, in decreasing order.
///
/// A part `x` is markable when: `B`: `x` odd with odd height; `C`: `x` even with even
/// height; `D`: `x` odd with even height.
pub fn markable_parts(lambda: &Partition, x: Letter) -> Result<Vec<u32>> {
    require_type(lambda, x)?;
    let (part_parity, height_parity) = match x {
        Letter::B => (1, 1),
        Letter::C => (0, 0),
        Letter::D => (1, 0),
    };
    Ok(lambda
        .distinct_parts()
        .into_iter()
        .map(|(v, _)| v)
        .filter(|&v| v % 2 == part_parity && lambda.height(v) % 2 == height_parity)
        .collect())
}

/// The reduction `r_λ(μ)` of a partition `μ` (typically a sub-multiset of `λ`).
///
/// With the markable parts `x_k > ⋯ > x_1` of `λ`, the part `x_i` appears in `r_λ(μ)`
/// exactly once when `ht_μ(x_i) - ht_μ(x_{i+1})` is odd (with `ht_μ(x_{k+1}) = 0`).
pub fn reduction(lambda: &Partition, mu: &Partition, x: Letter) -> Result<Partition> {
    let marks = markable_parts(lambda, x)?;
    let mut parts = Vec::new();
    let mut previous = 0usize;
    for &m in &marks {
        let h = mu.height(m);
        if (h - previous) % 2 == 1 {
            parts.push(m);
        }
        previous = h;
    }
    Ok(Partition { parts })
}
