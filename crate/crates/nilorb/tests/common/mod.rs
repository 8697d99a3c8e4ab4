//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls into the combinatorics under test: partitions are generated and
//! classified from first principles, collapses are found by exhaustive search, and
//! restriction multiplicities come from an explicit character table of the
//! hyperoctahedral groups (Murnaghan–Nakayama rule for signed cycle types).

#![allow(dead_code)]

use std::collections::HashMap;

use nilorb::springer::{PseudoLeviShape, WeylIrrep};
use nilorb::{Letter, Partition};

/// All partitions of `n` as weakly decreasing vectors.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn multiplicity(parts: &[u32], x: u32) -> usize {
    parts.iter().filter(|&&p| p == x).count()
}

/// The classical parity rule: in types B and D even parts occur with even multiplicity,
/// in type C odd parts do; the size must be odd for B and even for C and D.
pub fn is_type(parts: &[u32], x: Letter) -> bool {
    let size: u32 = parts.iter().sum();
    let (size_ok, restricted_parity) = match x {
        Letter::B => (size % 2 == 1, 0),
        Letter::C => (size % 2 == 0, 1),
        Letter::D => (size % 2 == 0, 0),
    };
    size_ok && parts.iter().all(|&p| p % 2 != restricted_parity || multiplicity(parts, p) % 2 == 0)
}

/// Dominance order on partitions of the same size.
pub fn dominates(a: &[u32], b: &[u32]) -> bool {
    let (mut sa, mut sb) = (0u32, 0u32);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    sa == sb
}

/// All type-X partitions of `size`.
pub fn type_partitions(size: u32, x: Letter) -> Vec<Vec<u32>> {
    partitions_of(size).into_iter().filter(|p| is_type(p, x)).collect()
}

/// The largest type-X partition dominated by `lambda`, by exhaustive search; `None` if the
/// dominated type-X partitions have no unique maximum.
pub fn brute_collapse(lambda: &[u32], x: Letter) -> Option<Vec<u32>> {
    let size: u32 = lambda.iter().sum();
    let below: Vec<Vec<u32>> = type_partitions(size, x).into_iter().filter(|p| dominates(lambda, p)).collect();
    let maxima: Vec<&Vec<u32>> = below.iter().filter(|p| below.iter().all(|q| q == *p || !dominates(q, p))).collect();
    match maxima.as_slice() {
        [m] => Some((*m).clone()),
        _ => None,
    }
}

/// Converts to the library type.
pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("weakly decreasing")
}

/// A conjugacy class of `W(B_n)`: lengths of the positive and of the negative cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedClass {
    pub positive: Vec<u32>,
    pub negative: Vec<u32>,
}

impl SignedClass {
    fn size(&self) -> u32 {
        self.positive.iter().sum::<u32>() + self.negative.iter().sum::<u32>()
    }

    /// Centraliser order `∏ (2r)^{m} m!` over cycle lengths `r` and signs.
    pub fn centralizer(&self) -> u128 {
        let mut z = 1u128;
        for cycles in [&self.positive, &self.negative] {
            let mut counts: HashMap<u32, u32> = HashMap::new();
            for &r in cycles {
                *counts.entry(r).or_default() += 1;
            }
            for (r, m) in counts {
                z *= (2 * r as u128).pow(m) * factorial(m);
            }
        }
        z
    }

    fn union(&self, other: &SignedClass) -> SignedClass {
        let mut positive = [self.positive.clone(), other.positive.clone()].concat();
        let mut negative = [self.negative.clone(), other.negative.clone()].concat();
        positive.sort_unstable_by(|a, b| b.cmp(a));
        negative.sort_unstable_by(|a, b| b.cmp(a));
        SignedClass { positive, negative }
    }
}

fn factorial(m: u32) -> u128 {
    (1..=m as u128).product()
}

/// `|W(B_n)| = 2^n n!`.
pub fn order_b(n: u32) -> u128 {
    (1u128 << n) * factorial(n)
}

/// All conjugacy classes of `W(B_n)`.
pub fn classes_b(n: u32) -> Vec<SignedClass> {
    let mut out = Vec::new();
    for a in 0..=n {
        for positive in partitions_of(a) {
            for negative in partitions_of(n - a) {
                out.push(SignedClass { positive: positive.clone(), negative });
            }
        }
    }
    out
}

/// Beta-set of a partition with `len` beads.
fn beta_set(p: &[u32], len: usize) -> Vec<u32> {
    (0..len).map(|i| p.get(i).copied().unwrap_or(0) + (len - 1 - i) as u32).collect()
}

fn from_beta(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i) as u32).filter(|&x| x > 0).collect()
}

/// Every way of removing a rim hook of length `r` from `p`, with the sign `(-1)^{height}`.
fn remove_rim_hooks(p: &[u32], r: u32) -> Vec<(Vec<u32>, i128)> {
    let beta = beta_set(p, p.len());
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        out.push((from_beta(next), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// The character of the irreducible representation `(α, β)` of `W(B_n)` at a class, with
/// `((n), ∅)` trivial and `(∅, (1^n))` the sign character: a cycle of length `r` is removed
/// as a rim hook from `α`, or from `β` with an extra factor `-1` when the cycle is negative.
pub fn chi_b(alpha: &[u32], beta: &[u32], class: &SignedClass) -> i128 {
    let mut memo = HashMap::new();
    let mut cycles: Vec<(u32, bool)> = class.positive.iter().map(|&r| (r, false)).collect();
    cycles.extend(class.negative.iter().map(|&r| (r, true)));
    chi_rec(alpha.to_vec(), beta.to_vec(), &cycles, &mut memo)
}

type Memo = HashMap<(Vec<u32>, Vec<u32>, usize), i128>;

fn chi_rec(alpha: Vec<u32>, beta: Vec<u32>, cycles: &[(u32, bool)], memo: &mut Memo) -> i128 {
    let Some(&(r, negative)) = cycles.first() else {
        return i128::from(alpha.is_empty() && beta.is_empty());
    };
    let key = (alpha.clone(), beta.clone(), cycles.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (a, s) in remove_rim_hooks(&alpha, r) {
        total += s * chi_rec(a, beta.clone(), &cycles[1..], memo);
    }
    for (b, s) in remove_rim_hooks(&beta, r) {
        let eps = if negative { -1 } else { 1 };
        total += eps * s * chi_rec(alpha.clone(), b, &cycles[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// The elements of `W(X_m)` inside `W(B_m)`, grouped by `W(B_m)`-class: all classes for B/C,
/// those with an even number of negative cycles for D.
fn factor_classes(letter: Letter, m: u32) -> (Vec<SignedClass>, u128) {
    let all = classes_b(m);
    match letter {
        Letter::B | Letter::C => (all, order_b(m)),
        Letter::D => {
            let kept = all.into_iter().filter(|c| c.negative.len() % 2 == 0).collect();
            (kept, if m == 0 { 1 } else { order_b(m) / 2 })
        }
    }
}

fn rows(e: &WeylIrrep) -> (Vec<u32>, Vec<u32>) {
    let (a, b) = e.label().rows();
    (a.parts().to_vec(), b.parts().to_vec())
}

/// A type-D label with equal non-empty rows: one of the two constituents of the
/// restriction of `(α, α)`.
fn split(letter: Letter, e: &WeylIrrep) -> bool {
    let (a, b) = rows(e);
    letter == Letter::D && a == b && !a.is_empty()
}

/// Result of the character-theoretic restriction oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMultiplicity {
    /// The multiplicity is determined by restricted hyperoctahedral characters.
    Exact(u64),
    /// `E` and both factors are split type-D constituents: only the sum over the
    /// decorations of `E` is determined.
    DecorationDependent { summed_over_e: u64 },
}

/// `dim Hom_{W_J}(F_1 ⊠ F_2, E|_{W_J})` from the character inner product over `W_J`.
///
/// Split type-D constituents are replaced by the restriction of `(α, α)`; conjugation by a
/// sign change permutes the two constituents, so each of them carries an equal share of the
/// total unless `E` and both factors are split.
pub fn restriction_oracle(e: &WeylIrrep, shape: &PseudoLeviShape, f1: &WeylIrrep, f2: &WeylIrrep) -> OracleMultiplicity {
    let (t1, t2) = shape.factors();
    let (c1, o1) = factor_classes(t1.letter, t1.rank as u32);
    let (c2, o2) = factor_classes(t2.letter, t2.rank as u32);
    let (ea, eb) = rows(e);
    let (a1, b1) = rows(f1);
    let (a2, b2) = rows(f2);
    let mut total: i128 = 0;
    for x in &c1 {
        let chi1 = chi_b(&a1, &b1, x);
        if chi1 == 0 {
            continue;
        }
        for y in &c2 {
            let chi2 = chi_b(&a2, &b2, y);
            if chi2 == 0 {
                continue;
            }
            let w = x.union(y);
            let weight = (order_b(x.size()) / x.centralizer()) as i128 * (order_b(y.size()) / y.centralizer()) as i128;
            total += weight * chi_b(&ea, &eb, &w) * chi1 * chi2;
        }
    }
    let order = (o1 * o2) as i128;
    assert_eq!(total % order, 0, "inner product is not an integer");
    let total = (total / order) as u64;
    let splits = [split(shape.letter(), e), split(t1.letter, f1), split(t2.letter, f2)];
    let count = splits.iter().filter(|&&s| s).count() as u32;
    if splits.iter().all(|&s| s) {
        assert_eq!(total % 2, 0);
        return OracleMultiplicity::DecorationDependent { summed_over_e: total / 2 };
    }
    let share = 1u64 << count;
    assert_eq!(total % share, 0, "split constituents do not share the total evenly");
    OracleMultiplicity::Exact(total / share)
}

/// Row-orthogonality of the oracle character table of `W(B_n)`: `Σ |C| χ_i(C) χ_j(C) = δ_ij |W|`.
pub fn check_orthogonality(n: u32) -> bool {
    let classes = classes_b(n);
    let mut labels = Vec::new();
    for a in 0..=n {
        for alpha in partitions_of(a) {
            for beta in partitions_of(n - a) {
                labels.push((alpha.clone(), beta));
            }
        }
    }
    if labels.len() != classes.len() {
        return false;
    }
    let order = order_b(n) as i128;
    for (i, (a1, b1)) in labels.iter().enumerate() {
        for (j, (a2, b2)) in labels.iter().enumerate() {
            let s: i128 = classes
                .iter()
                .map(|c| (order as u128 / c.centralizer()) as i128 * chi_b(a1, b1, c) * chi_b(a2, b2, c))
                .sum();
            if s != if i == j { order } else { 0 } {
                return false;
            }
        }
    }
    true
}
