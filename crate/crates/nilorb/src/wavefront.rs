//! Wavefront sets of Weyl group representations and of Iwahori-spherical
//! representations with real infinitesimal character.
//!
//! The wavefront set of `E ∈ Irr(W)` is the Achar dual `d_A(O∨(E), 1)` of its dual
//! Springer support.  [`wf_by_definition`] recomputes it from first principles: for every
//! maximal pseudo-Levi shape `J`, every constituent `F` of `E|_{W_J}` contributes the
//! Sommers image of the special orbit of the family of `F ⊗ sgn`, and the wavefront set
//! is the set of maximal contributions for Achar's order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duality::{d_a_triv, le_a, sbar, MarkedOrbit};
use crate::error::{Error, Result};
use crate::partitions::{dual, is_type_partition, Bipartition, Letter, Partition};
use crate::springer::{
    family_of, lr_coefficient, restriction_multiplicity, special_rep, springer_support, PseudoLeviShape, Side,
    WeylIrrep,
};

/// The canonical unramified wavefront set and the algebraic wavefront set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WavefrontResult {
    /// The canonical unramified wavefront set, a marked orbit.
    pub canonical_unramified: MarkedOrbit,
    /// The geometric (algebraic) wavefront set: the orbit of the marked orbit.
    pub algebraic: Partition,
}

/// `WF(E) = d_A(O∨(E), 1)`.
pub fn wf_of_wrep(e: &WeylIrrep) -> Result<MarkedOrbit> {
    let support = springer_support(e, Side::Dual)?;
    d_a_triv(&support.partition, e.letter())
}

/// One constituent `F_1 ⊠ F_2` of `E|_{W_J}` and its contribution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contribution {
    /// The shape `J`.
    pub shape: PseudoLeviShape,
    /// First factor of the constituent.
    pub f1: WeylIrrep,
    /// Second factor of the constituent.
    pub f2: WeylIrrep,
    /// Whether the multiplicity was only known summed over the two decorations of `E`.
    pub decoration_summed: bool,
    /// `sbar(J, O(φ(F)))`.
    pub value: MarkedOrbit,
}

/// The definitional computation of `WF(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefinitionalWavefront {
    /// Every constituent over every maximal shape, with its contribution.
    pub contributions: Vec<Contribution>,
    /// The distinct contributions that are maximal for Achar's order.
    pub maxima: Vec<MarkedOrbit>,
}

/// The special orbit of the family of `F ⊗ sgn`, for a representation `F` of a factor.
fn family_orbit(f: &WeylIrrep, letter: Letter) -> Result<Partition> {
    let special = special_rep(&family_of(&f.relabel(letter)?.twisted())?)?;
    Ok(springer_support(&special, Side::Group)?.partition)
}

/// Whether `F_1 ⊠ F_2` occurs in `E|_{W_J}`, and whether the answer had to be read off
/// the sum over both decorations of a degenerate `E`.
fn meets(e: &WeylIrrep, shape: &PseudoLeviShape, f1: &WeylIrrep, f2: &WeylIrrep) -> Result<(bool, bool)> {
    match restriction_multiplicity(e, shape, f1, f2) {
        Ok(m) => Ok((m > 0, false)),
        Err(Error::Ambiguous(_)) => {
            // E^0 ⊕ E^1 is the restriction of the W(B_n)-representation (α, α).
            let (a, b) = e.label().rows();
            let mut total = 0;
            for (m1, n1) in orderings_of(f1) {
                for (m2, n2) in orderings_of(f2) {
                    total += lr_coefficient(&m1, &m2, a) * lr_coefficient(&n1, &n2, b);
                }
            }
            Ok((total > 0, true))
        }
        Err(e) => Err(e),
    }
}

fn orderings_of(f: &WeylIrrep) -> Vec<(Partition, Partition)> {
    let (a, b) = f.label().rows();
    if a == b {
        vec![(a.clone(), b.clone())]
    } else {
        vec![(a.clone(), b.clone()), (b.clone(), a.clone())]
    }
}

/// `WF(E)` computed from the definition: the `≤_A`-maximal values of
/// `sbar(J, O(φ(F)))` over all maximal shapes `J` and all constituents `F` of `E|_{W_J}`.
///
/// When a degenerate type-D representation meets degenerate factors — where symbols do
/// not determine which decoration carries the constituent — the constituent is counted
/// if it occurs in the sum over both decorations.
pub fn wf_by_definition(e: &WeylIrrep) -> Result<DefinitionalWavefront> {
    let x = e.letter();
    let n = e.rank();
    let shapes = PseudoLeviShape::maximal(x, n);
    let per_shape: Vec<Result<Vec<Contribution>>> = shapes
        .par_iter()
        .map(|shape| {
            let (t1, t2) = shape.factors();
            let mut out = Vec::new();
            for f1 in WeylIrrep::all(t1.letter, t1.rank) {
                for f2 in WeylIrrep::all(t2.letter, t2.rank) {
                    let (hit, summed) = meets(e, shape, &f1, &f2)?;
                    if !hit {
                        continue;
                    }
                    let orbit = Bipartition::new(family_orbit(&f1, t1.letter)?, family_orbit(&f2, t2.letter)?);
                    let value = sbar(&orbit, x)?;
                    out.push(Contribution { shape: *shape, f1: f1.clone(), f2, decoration_summed: summed, value });
                }
            }
            Ok(out)
        })
        .collect();
    let mut contributions = Vec::new();
    for c in per_shape {
        contributions.extend(c?);
    }
    let mut distinct: Vec<MarkedOrbit> = Vec::new();
    for c in &contributions {
        if !distinct.contains(&c.value) {
            distinct.push(c.value.clone());
        }
    }
    let mut maxima = Vec::new();
    for a in &distinct {
        let mut dominated = false;
        for b in &distinct {
            if a != b && le_a(a, b, x)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            maxima.push(a.clone());
        }
    }
    maxima.sort();
    Ok(DefinitionalWavefront { contributions, maxima })
}

/// The wavefront set of an Iwahori-spherical representation with real infinitesimal
/// character, given the dual orbit `O∨` attached to its Aubert–Zelevinsky dual:
/// `(d_A(O∨, 1), d(O∨))`.
pub fn wf_iwahori_real(az_dual_orbit: &Partition, x: Letter) -> Result<WavefrontResult> {
    let canonical_unramified = d_a_triv(az_dual_orbit, x)?;
    let algebraic = dual(az_dual_orbit, x.dual())?;
    debug_assert_eq!(algebraic, canonical_unramified.orbit);
    Ok(WavefrontResult { canonical_unramified, algebraic })
}

/// The lower bound `d_A(O∨, 1) ≤_A WF` for a representation with real infinitesimal
/// character `q^{h∨/2}`, where `h∨` is the neutral element of `O∨`.
pub fn wf_lower_bound_holds(h_orbit: &Partition, candidate: &MarkedOrbit, x: Letter) -> Result<bool> {
    if !is_type_partition(&candidate.orbit, x) {
        return Err(Error::Validation(format!("{} is not a type-{x} partition", candidate.orbit)));
    }
    le_a(&d_a_triv(h_orbit, x)?, candidate, x)
}
