//! Faithful pairs for dual nilpotent orbits.
//!
//! A dual orbit `O∨` (a type-`X∨` partition `λ`) is *faithful* when there is a pseudo-Levi
//! shape `J` and a family `φ` of `W_J` such that
//!
//! 1. the Sommers map sends `(J, O_φ)` to the Achar dual `d_A(O∨, 1)`, and
//! 2. every `E ∈ Irr(W)` with Springer support `O∨` contains some member of `φ ⊗ sgn` in
//!    its restriction to `W_J`.
//!
//! This module builds the standard pair for classical types, verifies both conditions
//! exhaustively, and exposes the recorded pairs for exceptional types.

pub mod exceptional;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::{d_a_triv, sbar, shape_of, MarkedOrbit};
use crate::error::{invalid, Error, Result};
use crate::partitions::{
    dual, enumerate, is_type_partition, Bipartition, DecoratedPartition, Letter, LieType, Partition,
};
use crate::springer::{
    family_members, family_of, restriction_multiplicity, special_rep, springer_rep, springer_support,
    FamilyId, PseudoLeviShape, Side, WeylIrrep,
};
use crate::symbols::{enumerate_class, Symbol, SymbolKind};

pub use crate::duality::pi_mu;

/// Largest rank accepted by [`verify_faithful`].
pub const DEFAULT_VERIFY_MAX_RANK: usize = 6;

/// Why an orbit is treated separately from the general construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeReason {
    /// `μ(λ)` is a partition of 2, which would give a factor `D_1`.
    FirstFactorTooSmall,
    /// Type D with `μ(λ)` a partition of `2n - 2`, which would give a factor `D_{n-1} × D_1`.
    SecondFactorTooSmall,
}

/// Detects the orbits `λ` (type `X∨`, for `X ∈ {B, D}`) for which `(μ(λ), d(λ) ∖ μ(λ))`
/// is not a pseudo-Levi orbit.
///
/// The first case is recognised from the shape of `λ`: `λ = (λ_1, λ_2^{o}, λ_3^{e_3}, …)`
/// with `λ_1 > λ_2 > λ_3 > …`, `λ_1 - λ_2` even, `o` odd and every later multiplicity
/// even, where `λ_2` may be `0` (so `λ = (λ_1)` with `λ_1` even).  The second case, in type
/// D, is `λ ∈ {(1,1), (3,1)}`.  Type C has no edge cases.
pub fn is_edge_case(lambda: &Partition, x: Letter) -> Result<Option<EdgeReason>> {
    let xd = x.dual();
    if !is_type_partition(lambda, xd) {
        return invalid(format!("{lambda} is not a type-{xd} partition"));
    }
    if x == Letter::C {
        return Ok(None);
    }
    let distinct = lambda.distinct_parts();
    let first_case = match distinct.as_slice() {
        [(v1, 1)] => v1 % 2 == 0,
        [(v1, 1), (v2, m2), rest @ ..] => {
            (v1 - v2) % 2 == 0 && m2 % 2 == 1 && rest.iter().all(|(_, m)| m % 2 == 0)
        }
        _ => false,
    };
    if first_case {
        return Ok(Some(EdgeReason::FirstFactorTooSmall));
    }
    if x == Letter::D && (lambda.parts() == [1, 1] || lambda.parts() == [3, 1]) {
        return Ok(Some(EdgeReason::SecondFactorTooSmall));
    }
    Ok(None)
}

/// How a faithful pair was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// The pseudo-Levi orbit `(μ(λ), d(λ) ∖ μ(λ))`.
    GeneralConstruction,
    /// An edge case, handled with the whole Weyl group.
    EdgeCase,
    /// An orbit carrying a single representation (very even orbits in type D).
    UniqueRepresentation,
    /// A recorded pair for an exceptional group.
    ExceptionalTable,
}

/// A pseudo-Levi shape together with a family of each factor of `W_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulPair {
    /// The dual orbit.
    pub lambda: DecoratedPartition,
    /// The type `X` of the group.
    pub letter: Letter,
    /// The pseudo-Levi shape `J`.
    pub shape: PseudoLeviShape,
    /// The pseudo-Levi orbit `O_φ = (O_1, O_2)` of the two factors.
    pub orbit: Bipartition,
    /// The family `φ`, one family per factor.
    pub family: (FamilyId, FamilyId),
    /// The route that produced the pair.
    pub provenance: Provenance,
}

fn letter_rank(lambda: &Partition, x: Letter) -> Result<usize> {
    let xd = x.dual();
    if !is_type_partition(lambda, xd) {
        return invalid(format!("{lambda} is not a type-{xd} partition"));
    }
    Ok(xd.rank_of_size(lambda.size()).expect("type checked"))
}

/// `E(λ, 1)` as a representation of `W(X)`.
fn dual_springer_rep(lambda: &DecoratedPartition, x: Letter) -> Result<WeylIrrep> {
    springer_rep(lambda, x.dual())?.relabel(x)
}

/// The standard faithful pair of a dual orbit `λ` of type `X∨`.
///
/// Very even orbits in type D carry a single representation and use the whole Weyl
/// group, as do the edge cases of [`is_edge_case`]; there `φ` is the sign twist of the
/// family of `E(λ, 1)`.  Otherwise the shape and orbit come from `(μ(λ), d(λ) ∖ μ(λ))` and
/// `φ` is the family of `E(O_φ, 1)` in each factor.
pub fn faithful_pair(lambda: &DecoratedPartition, x: Letter) -> Result<FaithfulPair> {
    let n = letter_rank(&lambda.partition, x)?;
    let d = dual(&lambda.partition, x.dual())?;
    let full = |provenance| -> Result<FaithfulPair> {
        let shape = PseudoLeviShape::full(x, n);
        let (y0, _) = shape.factors();
        let phi2 = family_of(&dual_springer_rep(lambda, x)?.twisted())?;
        let phi1 = family_of(&WeylIrrep::trivial(y0.letter, 0))?;
        let orbit2 = springer_support(&special_rep(&phi2)?, Side::Group)?.partition;
        Ok(FaithfulPair {
            lambda: lambda.clone(),
            letter: x,
            shape,
            orbit: Bipartition::new(Partition::empty(), orbit2),
            family: (phi1, phi2),
            provenance,
        })
    };
    if x == Letter::D && lambda.partition.is_very_even() {
        return full(Provenance::UniqueRepresentation);
    }
    if is_edge_case(&lambda.partition, x)?.is_some() {
        return full(Provenance::EdgeCase);
    }
    let (_, mu) = pi_mu(&lambda.partition, x)?;
    let nu = d.subtract(&mu).map_err(|e| Error::Internal(format!("μ({}) ⊄ d({}): {e}", lambda, lambda)))?;
    let orbit = Bipartition::new(mu, nu);
    let shape = shape_of(&orbit, x)?;
    let (t1, t2) = shape.factors();
    let phi1 = family_of(&springer_rep(&DecoratedPartition::plain(orbit.first.clone()), t1.letter)?)?;
    let phi2 = family_of(&springer_rep(&DecoratedPartition::plain(orbit.second.clone()), t2.letter)?)?;
    Ok(FaithfulPair { lambda: lambda.clone(), letter: x, shape, orbit, family: (phi1, phi2), provenance: Provenance::GeneralConstruction })
}

/// All `E ∈ Irr(W(X_n))` with dual Springer support `λ`, enumerated through the flips of
/// the s-symbol class of `E(λ, 1)`.
pub fn springer_fiber(lambda: &DecoratedPartition, x: Letter) -> Result<Vec<WeylIrrep>> {
    let n = letter_rank(&lambda.partition, x)?;
    let xd = x.dual();
    let e = springer_rep(lambda, xd)?;
    let s = e.ssymbol(xd, Some(n + 1))?;
    let mut out = Vec::new();
    for sym in enumerate_class(&s, n + 1)? {
        let Ok(label) = sym.to_label() else { continue };
        let rep = WeylIrrep::new(xd, label)?.relabel(x)?;
        if !out.contains(&rep) {
            out.push(rep);
        }
    }
    Ok(out)
}

/// One representation `E` of the fiber and the member `F_1 ⊠ F_2` of `φ ⊗ sgn` meeting it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// The representation `E` of `W`.
    pub e: WeylIrrep,
    /// The first factor of `F`.
    pub f1: WeylIrrep,
    /// The second factor of `F`.
    pub f2: WeylIrrep,
    /// `dim Hom_{W_J}(F, E|_{W_J})`.
    pub multiplicity: u64,
}

/// Outcome of checking both faithfulness conditions for one dual orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaithfulReport {
    /// The pair that was checked.
    pub pair: FaithfulPair,
    /// `sbar(J, O_φ)`.
    pub sommers_image: MarkedOrbit,
    /// `d_A(λ, 1)`.
    pub achar_dual: MarkedOrbit,
    /// Condition (i): the two marked orbits agree.
    pub condition_i: bool,
    /// Condition (ii): every representation of the fiber has a witness.
    pub condition_ii: bool,
    /// One witness per representation of the fiber that has one.
    pub witnesses: Vec<Witness>,
    /// Representations of the fiber without a witness.
    pub failures: Vec<WeylIrrep>,
}

impl FaithfulReport {
    /// Whether both conditions hold.
    pub fn passed(&self) -> bool {
        self.condition_i && self.condition_ii
    }
}

/// Which family is tested against the fiber in condition (ii).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTwist {
    /// `φ ⊗ sgn`, as in the definition.
    SignTwisted,
    /// `φ` itself; used as a negative control.
    Untwisted,
}

/// Checks both faithfulness conditions for the standard pair of `λ`, for ranks up to
/// [`DEFAULT_VERIFY_MAX_RANK`].
pub fn verify_faithful(lambda: &DecoratedPartition, x: Letter) -> Result<FaithfulReport> {
    verify_faithful_with(lambda, x, DEFAULT_VERIFY_MAX_RANK, FamilyTwist::SignTwisted)
}

/// Checks both faithfulness conditions with an explicit rank bound and choice of family.
pub fn verify_faithful_with(
    lambda: &DecoratedPartition,
    x: Letter,
    max_rank: usize,
    twist: FamilyTwist,
) -> Result<FaithfulReport> {
    let n = letter_rank(&lambda.partition, x)?;
    if n > max_rank {
        return Err(Error::BoundExceeded { what: "faithfulness verification".into(), rank: n, bound: max_rank });
    }
    let pair = faithful_pair(lambda, x)?;
    let (t1, t2) = pair.shape.factors();
    let support = |f: &FamilyId, letter: Letter| -> Result<Partition> {
        Ok(springer_support(&special_rep(f)?.relabel(letter)?, Side::Group)?.partition)
    };
    let o_phi = Bipartition::new(support(&pair.family.0, t1.letter)?, support(&pair.family.1, t2.letter)?);
    let sommers_image = sbar(&o_phi, x)?;
    let achar_dual = d_a_triv(&lambda.partition, x)?;
    let condition_i = sommers_image == achar_dual;

    let members = |f: &FamilyId| -> Result<Vec<WeylIrrep>> {
        match twist {
            FamilyTwist::SignTwisted => family_members(&family_of(&special_rep(f)?.twisted())?),
            FamilyTwist::Untwisted => family_members(f),
        }
    };
    let (m1, m2) = (members(&pair.family.0)?, members(&pair.family.1)?);
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for e in springer_fiber(lambda, x)? {
        let mut found = None;
        'search: for f1 in &m1 {
            for f2 in &m2 {
                let m = restriction_multiplicity(&e, &pair.shape, f1, f2)?;
                if m > 0 {
                    found = Some(Witness { e: e.clone(), f1: f1.clone(), f2: f2.clone(), multiplicity: m });
                    break 'search;
                }
            }
        }
        match found {
            Some(w) => witnesses.push(w),
            None => failures.push(e),
        }
    }
    Ok(FaithfulReport { pair, sommers_image, achar_dual, condition_i, condition_ii: failures.is_empty(), witnesses, failures })
}

/// Verifies every dual orbit of `W(X_n)`, in parallel; reports are in the order of
/// [`enumerate`] on the dual side.
pub fn verify_all(x: Letter, n: usize, max_rank: usize, twist: FamilyTwist) -> Result<Vec<FaithfulReport>> {
    if n > max_rank {
        return Err(Error::BoundExceeded { what: "faithfulness verification".into(), rank: n, bound: max_rank });
    }
    let orbits = enumerate(LieType::new(x.dual(), n))?;
    orbits.par_iter().map(|lambda| verify_faithful_with(lambda, x, max_rank, twist)).collect()
}

/// The index data attached to a dual orbit `λ`: distinct parts `0 = λ_0 < λ_1 < … < λ_l`
/// with multiplicities `p_i`, partial sums `P_i`, tail sums `Q_i`, and the indices
/// `c_1 < … < c_r` with `Q_c ≡ ω_X (mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitIndices {
    /// `λ_0, …, λ_l`.
    pub parts: Vec<u32>,
    /// `p_0, …, p_l`; `p_0` pads `λ` to odd length in type B and is `0` otherwise.
    pub mults: Vec<usize>,
    /// `c_1, …, c_r`.
    pub c: Vec<usize>,
}

impl OrbitIndices {
    /// Builds the data; `p_0` is the given padding in type B (it must have the parity
    /// opposite to `#λ`) and `0` in types C and D.
    pub fn new(lambda: &Partition, x: Letter, p0: usize) -> Result<OrbitIndices> {
        letter_rank(lambda, x)?;
        let p0 = if x == Letter::B {
            if p0 == 0 || p0 % 2 == lambda.len() % 2 {
                return invalid(format!("padding {p0} must be positive and of parity opposite to #λ = {}", lambda.len()));
            }
            p0
        } else {
            0
        };
        let mut parts = vec![0];
        let mut mults = vec![p0];
        for (v, m) in lambda.distinct_parts().into_iter().rev() {
            parts.push(v);
            mults.push(m);
        }
        let mut out = OrbitIndices { parts, mults, c: Vec::new() };
        out.c = (1..=out.l()).filter(|&c| out.q(c) % 2 == x.omega() as usize).collect();
        Ok(out)
    }

    /// `l`, the number of distinct non-zero parts.
    pub fn l(&self) -> usize {
        self.parts.len() - 1
    }

    /// `P_i = p_0 + … + p_i`, with `P_{-1} = 0` written as `p(-1)`.
    pub fn p(&self, i: isize) -> usize {
        if i < 0 {
            0
        } else {
            self.mults[..=i as usize].iter().sum()
        }
    }

    /// `Q_i = p_i + … + p_l`, with `Q_{l+1} = 0`.
    pub fn q(&self, i: usize) -> usize {
        self.mults.get(i..).map_or(0, |s| s.iter().sum())
    }

    /// `#λ' = p_0 + #λ`.
    pub fn total(&self) -> usize {
        self.q(0)
    }
}

fn chi(x: usize) -> u32 {
    (x % 2) as u32
}

fn run(base: usize, len: usize, plus: u32) -> impl Iterator<Item = u32> {
    (0..len).map(move |j| (base + j) as u32 + plus)
}

/// The a-symbol `α_1` of the first factor of `(μ(λ), d(λ) ∖ μ(λ))`, written down directly
/// from the index data of `λ`: `α(E(d_LS μ, 1))^!` in type B (a defect-one symbol) and
/// `α(E(d_LS μ, 1))` in types C and D.
///
/// In type B, `p_0` is chosen as small as possible.  The constructor checks two parity
/// facts the construction relies on: `λ_{c_i} ≡ λ_{c_{i+1} - 1} (mod 2)` for `1 ≤ i < r`,
/// and `ᾱ_1(Q_i + 1) + 1 = ᾱ_1(Q_i)` (entries counted from the right) for every `i` with
/// `λ_i ≡ λ_{i-1} ≡ ω_{X∨} (mod 2)`.
pub fn alpha_one(lambda: &Partition, x: Letter) -> Result<Symbol> {
    let p0 = if lambda.len() % 2 == 0 { 1 } else { 2 };
    alpha_one_padded(lambda, x, p0)
}

/// [`alpha_one`] with an explicit type-B padding `p_0`.
pub fn alpha_one_padded(lambda: &Partition, x: Letter, p0: usize) -> Result<Symbol> {
    if is_edge_case(lambda, x)?.is_some() {
        return invalid(format!("{lambda} is an edge case for type {x}"));
    }
    let ix = OrbitIndices::new(lambda, x, p0)?;
    let (l, c) = (ix.l(), &ix.c);
    let r = c.len();
    for i in 1..r {
        if ix.parts[c[i - 1]] % 2 != ix.parts[c[i] - 1] % 2 {
            return Err(Error::Internal(format!(
                "parity of λ_{} and λ_{} differ for {lambda} in type {x}",
                c[i - 1],
                c[i] - 1
            )));
        }
    }
    let eta = |i: usize| -> usize { if (ix.parts[i] - ix.parts[i - 1]) % 2 == 1 { 1 } else { 2 } };
    // Index sequences with c_0 = 0, d_i = c_i - 1 and c_{r+1} = l + 1.
    let mut cc = vec![0usize];
    cc.extend_from_slice(c);
    let d = |i: usize| -> isize { cc[i] as isize - 1 };
    let h: Vec<usize> = (0..=r).map(|i| (1..=i).map(|j| eta(cc[j])).sum()).collect();
    let t: Vec<usize> = (0..=r)
        .map(|i| if i < r { ix.p(d(i + 1)) - ix.p(d(i)) } else { ix.p(l as isize) - ix.p(d(r)) })
        .collect();
    let tp = |i: usize| t[i] / 2;
    let base = |i: usize| ix.p(d(i)) / 2 + h[i] / 2;
    let (mut a, mut b): (Vec<u32>, Vec<u32>) = (Vec::new(), Vec::new());
    let symbol = match x {
        Letter::B | Letter::D if r == 0 => {
            return Ok(match x {
                Letter::B => Symbol::new(SymbolKind::A, Letter::B, vec![0], vec![], 0)?,
                _ => Symbol::new(SymbolKind::A, Letter::D, vec![], vec![], 0)?,
            })
        }
        Letter::B | Letter::D => {
            if x == Letter::B {
                a.extend(run(0, tp(0), 0));
                b.extend(run(0, tp(0), 1));
            } else {
                a.extend(run(0, tp(0), 0));
                b.extend(run(0, tp(0) + 1, 0));
            }
            for i in 1..r {
                a.extend(run(base(i), tp(i), chi(h[i])));
                b.extend(run(base(i), tp(i), 1));
            }
            a.extend(run(base(r), tp(r) + 1, chi(h[r])));
            b.extend(run(base(r), tp(r), 1));
            Symbol::new(SymbolKind::A, x, a, b, 0)
        }
        Letter::C => {
            a.extend(run(0, tp(0) + 1, 0));
            b.extend(run(0, tp(0), 0));
            for i in 1..=r {
                a.extend(run(base(i), tp(i), 1));
                b.extend(run(base(i), tp(i), chi(h[i])));
            }
            Symbol::new(SymbolKind::A, Letter::C, a, b, 0)
        }
    }
    .map_err(|e| Error::Internal(format!("α_1 for {lambda} in type {x}: {e}")))?;

    let mut bar = symbol.multiset();
    bar.sort_unstable();
    let from_right = |j: usize| -> Option<u32> { bar.len().checked_sub(j).and_then(|p| bar.get(p).copied()) };
    let w = x.dual().omega();
    for i in 1..=l {
        if ix.parts[i] % 2 != w || ix.parts[i - 1] % 2 != w {
            continue;
        }
        let qi = ix.q(i);
        match (from_right(qi + 1), from_right(qi)) {
            (Some(u), Some(v)) if u + 1 == v => {}
            _ => {
                return Err(Error::Internal(format!(
                    "α_1 = {symbol} for {lambda} in type {x} is not an interval at positions {} and {qi} from the right",
                    qi + 1
                )))
            }
        }
    }
    Ok(symbol)
}
