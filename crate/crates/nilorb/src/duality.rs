//! Sommers and Achar dualities on marked orbits.
//!
//! A *marked orbit* `(λ, r)` is a type-`X` partition together with a sub-partition `r`
//! of its markable parts.  Marked orbits arise from orbits of pseudo-Levi subalgebras
//! `(μ, ν)` through the Sommers map `(μ, ν) ↦ (μ ∪ ν, r_{μ∪ν}(μ))`, carry the Sommers
//! dual `d_S` (a type-`X∨` orbit) and receive the Achar dual `d_A` of dual orbits.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::{
    collapse, dual, is_type_partition, reduction, Bipartition, DecoratedPartition, Letter, Partition,
};
use crate::springer::{
    family_of, j_induce, special_rep, springer_rep, springer_support, PseudoLeviShape, Side, WeylIrrep,
};

/// A nilpotent orbit with a marking: an element of the image of the Sommers map.
///
/// `decoration_undetermined` flags results attached to very even type-D orbits, whose
/// decoration is not tracked; it does not take part in comparisons.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MarkedOrbit {
    /// The orbit partition.
    pub orbit: Partition,
    /// The marking, a sub-partition of the markable parts of `orbit`.
    pub marking: Partition,
    /// Set when a very even decoration could not be determined.
    #[serde(default)]
    pub decoration_undetermined: bool,
}

impl MarkedOrbit {
    /// Builds a marked orbit with a determined decoration.
    pub fn new(orbit: Partition, marking: Partition) -> MarkedOrbit {
        MarkedOrbit { orbit, marking, decoration_undetermined: false }
    }
}

impl PartialEq for MarkedOrbit {
    fn eq(&self, other: &Self) -> bool {
        self.orbit == other.orbit && self.marking == other.marking
    }
}

impl Eq for MarkedOrbit {}

impl Hash for MarkedOrbit {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orbit.hash(state);
        self.marking.hash(state);
    }
}

impl PartialOrd for MarkedOrbit {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkedOrbit {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.orbit, &self.marking).cmp(&(&other.orbit, &other.marking))
    }
}

impl fmt::Display for MarkedOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.orbit, self.marking)?;
        if self.decoration_undetermined {
            f.write_str(" (very even, decoration undetermined)")?;
        }
        Ok(())
    }
}

impl FromStr for MarkedOrbit {
    type Err = Error;
    /// Parses `λ | r`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.split(" (").next().unwrap_or(s);
        let (o, m) = body
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("marked orbit `{s}` needs the form `λ | r`")))?;
        Ok(MarkedOrbit::new(o.parse()?, m.parse()?))
    }
}

/// The pseudo-Levi shape of a bipartition `(μ, ν)` with `μ` of type `Y(X)` and `ν` of
/// type `X`, validating both factors.
pub fn shape_of(b: &Bipartition, x: Letter) -> Result<PseudoLeviShape> {
    let y = x.factor();
    if !is_type_partition(&b.first, y) {
        return invalid(format!("{} is not a type-{y} partition", b.first));
    }
    if !is_type_partition(&b.second, x) {
        return invalid(format!("{} is not a type-{x} partition", b.second));
    }
    let k = y.rank_of_size(b.first.size()).expect("type checked");
    let rest = x.rank_of_size(b.second.size()).expect("type checked");
    let n = k + rest;
    match x {
        Letter::B if k == 1 => return invalid("the factor D_1 does not occur in type B pseudo-Levi subalgebras"),
        Letter::D if k == 1 || (rest == 1 && k > 0) => {
            return invalid("the factor D_1 does not occur in type D pseudo-Levi subalgebras")
        }
        _ => {}
    }
    let shape = PseudoLeviShape::new(x, n, k)?;
    Ok(if shape.k() == k { shape } else { PseudoLeviShape::full(x, n) })
}

/// The Sommers map `(μ, ν) ↦ (μ ∪ ν, r_{μ∪ν}(μ))`.
pub fn sbar(b: &Bipartition, x: Letter) -> Result<MarkedOrbit> {
    shape_of(b, x)?;
    let orbit = b.first.union(&b.second);
    let marking = reduction(&orbit, &b.first, x)?;
    Ok(MarkedOrbit::new(orbit, marking))
}

/// `E(d_LS(μ), 1)` inside a factor of type `letter`: the sign twist of the special member
/// of the family of `E(μ, 1)`.
pub fn dual_rep_in_factor(mu: &Partition, letter: Letter) -> Result<WeylIrrep> {
    let e = springer_rep(&DecoratedPartition::plain(mu.clone()), letter)?;
    Ok(special_rep(&family_of(&e)?)?.twisted())
}

/// The Lusztig–Spaltenstein dual inside one type: `(λ^t)_X`.
pub fn d_ls(lambda: &Partition, x: Letter) -> Result<Partition> {
    if !is_type_partition(lambda, x) {
        return invalid(format!("{lambda} is not a type-{x} partition"));
    }
    collapse(&lambda.transpose(), x)
}

/// The Sommers dual of a pseudo-Levi orbit `(μ, ν)`: the dual-side Springer support of
/// `j_{W_J}^W (E(d_LS μ, 1) ⊗ E(d_LS ν, 1))`.
pub fn d_s(b: &Bipartition, x: Letter) -> Result<Partition> {
    let shape = shape_of(b, x)?;
    let f1 = dual_rep_in_factor(&b.first, x.factor())?;
    let f2 = dual_rep_in_factor(&b.second, x)?;
    let e = j_induce(&shape, &f1, &f2)?;
    Ok(springer_support(&e, Side::Dual)?.partition)
}

/// The sub-partitions `π(λ) ⊆ μ(λ) ⊆ λ^t` built from the parts of `λ^t` of parity `ω_X`:
/// `π` takes such a part once when its multiplicity is odd; `μ` takes it twice when the
/// multiplicity is even and once when it is odd.
pub fn pi_mu(lambda: &Partition, x: Letter) -> Result<(Partition, Partition)> {
    let xd = x.dual();
    if !is_type_partition(lambda, xd) {
        return invalid(format!("{lambda} is not a type-{xd} partition"));
    }
    let t = lambda.transpose();
    let (mut pi, mut mu) = (Vec::new(), Vec::new());
    for (v, m) in t.distinct_parts() {
        if v % 2 != x.omega() {
            continue;
        }
        if m % 2 == 1 {
            pi.push(v);
            mu.push(v);
        } else {
            mu.push(v);
            mu.push(v);
        }
    }
    Ok((Partition::from_unsorted(pi), Partition::from_unsorted(mu)))
}

/// The Achar dual of `(λ, 1)` for a type-`X∨` orbit `λ`: `(d(λ), r_{d(λ)}(π(λ)))`.
///
/// For type D, when `λ` or `d(λ)` is very even the result is reported without a
/// decoration and flagged.
pub fn d_a_triv(lambda: &Partition, x: Letter) -> Result<MarkedOrbit> {
    let d = dual(lambda, x.dual())?;
    let (pi, _) = pi_mu(lambda, x)?;
    let marking = reduction(&d, &pi, x)?;
    let flagged = x == Letter::D && (lambda.is_very_even() || d.is_very_even());
    Ok(MarkedOrbit { orbit: d, marking, decoration_undetermined: flagged })
}

/// Closure order of orbits: `a ≤ b` when `b` dominates `a`; very even orbits with the
/// same partition but different decorations are incomparable.
pub fn closure_le(a: &DecoratedPartition, b: &DecoratedPartition) -> bool {
    if a.partition == b.partition {
        return a.kappa == b.kappa || !a.is_very_even();
    }
    b.partition.dominates(&a.partition)
}

/// Sub-multisets of `λ`, by increasing size and then decreasing lexicographic order.
pub fn sub_multisets(lambda: &Partition) -> Vec<Partition> {
    let distinct = lambda.distinct_parts();
    let mut out = vec![Vec::<u32>::new()];
    for (v, m) in distinct {
        let mut next = Vec::new();
        for base in &out {
            for c in 0..=m {
                let mut b = base.clone();
                b.extend(std::iter::repeat(v).take(c));
                next.push(b);
            }
        }
        out = next;
    }
    let mut parts: Vec<Partition> = out.into_iter().map(Partition::from_unsorted).collect();
    parts.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    parts
}

/// A pseudo-Levi orbit `(μ, ν)` with `sbar(μ, ν) = m`, chosen as the first one in the
/// order of [`sub_multisets`].
pub fn lift(m: &MarkedOrbit, x: Letter) -> Result<Bipartition> {
    if !is_type_partition(&m.orbit, x) {
        return invalid(format!("{} is not a type-{x} partition", m.orbit));
    }
    for mu in sub_multisets(&m.orbit) {
        let nu = m.orbit.subtract(&mu)?;
        let b = Bipartition::new(mu, nu);
        if let Ok(s) = sbar(&b, x) {
            if s.marking == m.marking {
                return Ok(b);
            }
        }
    }
    invalid(format!("{m} is not in the image of the Sommers map for type {x}"))
}

/// `d_S` of a marked orbit, through any lift.
pub fn d_s_marked(m: &MarkedOrbit, x: Letter) -> Result<Partition> {
    d_s(&lift(m, x)?, x)
}

/// Achar's order: `(O, C) ≤_A (O', C')` when `O ≤ O'` and `d_S(O, C) ≥ d_S(O', C')`.
pub fn le_a(a: &MarkedOrbit, b: &MarkedOrbit, x: Letter) -> Result<bool> {
    if !b.orbit.dominates(&a.orbit) {
        return Ok(false);
    }
    Ok(d_s_marked(a, x)?.dominates(&d_s_marked(b, x)?))
}

/// All marked orbits of type `X` and rank `n` (the image of the Sommers map), sorted.
pub fn marked_orbits(x: Letter, n: usize) -> Result<Vec<MarkedOrbit>> {
    let mut out = Vec::new();
    for orbit in crate::partitions::enumerate(crate::LieType::new(x, n))? {
        if orbit.kappa == 1 {
            continue;
        }
        let mut seen = Vec::new();
        for mu in sub_multisets(&orbit.partition) {
            let nu = orbit.partition.subtract(&mu)?;
            if let Ok(s) = sbar(&Bipartition::new(mu, nu), x) {
                if !seen.contains(&s) {
                    seen.push(s);
                }
            }
        }
        out.extend(seen);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn sbar_examples() {
        let m = sbar(&Bipartition::new(p("1,1"), p("1")), Letter::B);
        assert!(m.is_err(), "D_1 factors are rejected");
        let m = sbar(&Bipartition::new(p("1,1,1,1"), p("1")), Letter::B).unwrap();
        assert_eq!(m.to_string(), "1,1,1,1,1 | ∅");
        let m = sbar(&Bipartition::new(p("3,1"), p("1")), Letter::B).unwrap();
        assert_eq!(m, MarkedOrbit::new(p("3,1,1"), p("3,1")));
    }

    #[test]
    fn d_s_of_trivial_marking_is_duality() {
        for (x, lam) in [(Letter::B, "3,1,1"), (Letter::C, "2,2"), (Letter::D, "3,1,1,1")] {
            let b = Bipartition::new(Partition::empty(), p(lam));
            assert_eq!(d_s(&b, x).unwrap(), dual(&p(lam), x).unwrap());
        }
    }

    #[test]
    fn pi_mu_example() {
        let (pi, mu) = pi_mu(&p("2,2"), Letter::B).unwrap();
        assert_eq!(pi, Partition::empty());
        assert_eq!(mu, Partition::empty());
        let (pi, mu) = pi_mu(&p("2,1,1"), Letter::B).unwrap();
        assert_eq!((pi, mu), (p("3,1"), p("3,1")));
    }

    #[test]
    fn marked_orbit_text_round_trip() {
        let m = MarkedOrbit::new(p("3,1,1"), p("3,1"));
        assert_eq!(m.to_string().parse::<MarkedOrbit>().unwrap(), m);
    }
}
