//! Springer correspondence, two-sided families, truncated induction and restriction.
//!
//! Irreducible representations of `W(B_n) = W(C_n)` are labelled by ordered
//! bipartitions of `n` and those of `W(D_n)` by decorated unordered bipartitions.  The
//! Springer correspondence with trivial local systems, `λ ↦ E(λ, 1)`, is computed with
//! the parity-splitting recipe on `λ + (0, 1, 2, …)`; its inverse on the image of
//! s-symbol classes gives the Springer support of an arbitrary representation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::{
    all_partitions, enumerate, is_type_partition, Bipartition, DecoratedPartition,
    DecoratedUnorderedBipartition, IrrepLabel, Letter, LieType, Partition,
};
use crate::symbols::{add_rows, asymbol_of, shriek, ssymbol_of, Symbol, SymbolKind};

/// An irreducible representation of the Weyl group of type `letter` and rank `rank`.
///
/// The letter records which Lie algebra the Weyl group is attached to; `W(B_n)` and
/// `W(C_n)` coincide and [`WeylIrrep::relabel`] moves between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylIrrep {
    letter: Letter,
    rank: usize,
    label: IrrepLabel,
}

impl WeylIrrep {
    /// Wraps a label, checking that its shape matches the type.
    pub fn new(letter: Letter, label: IrrepLabel) -> Result<WeylIrrep> {
        match (&label, letter) {
            (IrrepLabel::Ordered(_), Letter::B | Letter::C) | (IrrepLabel::Unordered(_), Letter::D) => {}
            _ => return invalid(format!("label {label} does not label a representation of W({letter})")),
        }
        let rank = label.size();
        let label = match label {
            IrrepLabel::Unordered(u) if rank == 0 => IrrepLabel::Unordered(DecoratedUnorderedBipartition::new(
                u.first().clone(),
                u.second().clone(),
                0,
            )),
            other => other,
        };
        Ok(WeylIrrep { letter, rank, label })
    }

    /// `(λ, μ)` for `W(B_n)` or `W(C_n)`.
    pub fn ordered(letter: Letter, first: Partition, second: Partition) -> Result<WeylIrrep> {
        WeylIrrep::new(letter, IrrepLabel::Ordered(Bipartition::new(first, second)))
    }

    /// `{λ, μ}^κ` for `W(D_n)`.
    pub fn unordered(first: Partition, second: Partition, kappa: u8) -> Result<WeylIrrep> {
        WeylIrrep::new(Letter::D, IrrepLabel::Unordered(DecoratedUnorderedBipartition::new(first, second, kappa)))
    }

    /// Parses `λ;μ` (types B, C) or `λ;μ[:κ]` (type D).
    pub fn parse(letter: Letter, s: &str) -> Result<WeylIrrep> {
        let label = match letter {
            Letter::B | Letter::C => IrrepLabel::Ordered(s.parse()?),
            Letter::D => IrrepLabel::Unordered(s.parse()?),
        };
        WeylIrrep::new(letter, label)
    }

    /// The trivial representation.
    pub fn trivial(letter: Letter, rank: usize) -> WeylIrrep {
        let n = Partition::from_unsorted(vec![rank as u32]);
        match letter {
            Letter::D => WeylIrrep::unordered(n, Partition::empty(), 0),
            _ => WeylIrrep::ordered(letter, n, Partition::empty()),
        }
        .expect("trivial representation")
    }

    /// The sign representation.
    pub fn sign(letter: Letter, rank: usize) -> WeylIrrep {
        WeylIrrep::trivial(letter, rank).twisted()
    }

    /// Type letter.
    pub fn letter(&self) -> Letter {
        self.letter
    }

    /// Rank of the Weyl group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The bipartition label.
    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    /// The same representation viewed for another letter with the same Weyl group
    /// (`B ↔ C`).
    pub fn relabel(&self, letter: Letter) -> Result<WeylIrrep> {
        if letter == self.letter {
            return Ok(self.clone());
        }
        if self.letter == Letter::D || letter == Letter::D {
            return invalid("only W(B_n) and W(C_n) can be identified");
        }
        Ok(WeylIrrep { letter, rank: self.rank, label: self.label.clone() })
    }

    /// `E ⊗ sgn`.
    pub fn twisted(&self) -> WeylIrrep {
        WeylIrrep { letter: self.letter, rank: self.rank, label: crate::symbols::sgn_twist(&self.label) }
    }

    /// Whether the representation has equal rows (type D with `λ = μ`).
    pub fn is_degenerate(&self) -> bool {
        matches!(&self.label, IrrepLabel::Unordered(u) if u.is_degenerate() && self.rank > 0)
    }

    /// The decoration of the label.
    pub fn kappa(&self) -> u8 {
        self.label.kappa()
    }

    /// All irreducible representations of `W(letter_rank)`: for types B/C, ordered by the
    /// size of the first partition (largest first) and then lexicographically
    /// (largest first); type D lists each unordered pair once, degenerate pairs with both
    /// decorations.
    pub fn all(letter: Letter, rank: usize) -> Vec<WeylIrrep> {
        let mut out = Vec::new();
        for i in (0..=rank).rev() {
            for a in all_partitions(i) {
                for b in all_partitions(rank - i) {
                    match letter {
                        Letter::B | Letter::C => out.push(WeylIrrep::ordered(letter, a.clone(), b).expect("label")),
                        Letter::D => {
                            if a > b {
                                out.push(WeylIrrep::unordered(a.clone(), b, 0).expect("label"));
                            } else if a == b {
                                out.push(WeylIrrep::unordered(a.clone(), b.clone(), 0).expect("label"));
                                if rank > 0 {
                                    out.push(WeylIrrep::unordered(a.clone(), b, 1).expect("label"));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// The s-symbol of this representation in the convention of `letter`.
    pub fn ssymbol(&self, letter: Letter, k: Option<usize>) -> Result<Symbol> {
        ssymbol_of(&self.label, letter, k)
    }

    /// The a-symbol of this representation.
    pub fn asymbol(&self, k: Option<usize>) -> Result<Symbol> {
        asymbol_of(&self.label, self.letter, k)
    }

    /// Whether the representation is special (its a-symbol is monotonic).
    pub fn is_special(&self) -> Result<bool> {
        Ok(self.asymbol(None)?.is_monotonic())
    }
}

impl fmt::Display for WeylIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.label.fmt(f)
    }
}

/// Side on which a Springer support is read off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// Orbits of the Lie algebra whose Weyl group is `W` (same letter as the representation).
    Group,
    /// Orbits of the Langlands dual Lie algebra.
    Dual,
}

fn require_orbit(lambda: &DecoratedPartition, letter: Letter) -> Result<usize> {
    if !is_type_partition(&lambda.partition, letter) {
        return invalid(format!("{} is not a type-{letter} partition", lambda.partition));
    }
    Ok(letter.rank_of_size(lambda.partition.size()).expect("size checked"))
}

fn parity_split(padded: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let (mut odd, mut even) = (Vec::new(), Vec::new());
    for (i, &x) in padded.iter().enumerate() {
        let v = x + i as u32;
        if v % 2 == 1 {
            odd.push((v - 1) / 2);
        } else {
            even.push(v / 2);
        }
    }
    (odd, even)
}

/// The a-symbol of `E(λ, 1)` computed with the Springer recipe: pad `λ` with zeros (odd
/// length for B/C, even length for D), add `(0, 1, 2, …)` and split by parity.
pub fn springer_symbol(lambda: &DecoratedPartition, letter: Letter) -> Result<Symbol> {
    require_orbit(lambda, letter)?;
    let p = &lambda.partition;
    let len = match letter {
        Letter::B | Letter::C => p.len() + (1 - p.len() % 2),
        Letter::D => p.len() + p.len() % 2,
    };
    let (xi, eta) = parity_split(&p.increasing_padded(len));
    match letter {
        Letter::B => Symbol::new(SymbolKind::A, letter, xi, eta, 0),
        Letter::C => Symbol::new(SymbolKind::A, letter, eta, xi, 0),
        Letter::D => Symbol::new(SymbolKind::A, letter, xi, eta, lambda.kappa),
    }
    .map_err(|e| Error::Internal(format!("Springer recipe for {lambda} in type {letter}: {e}")))
}

/// `E(λ, 1)`: the representation attached to the orbit `λ` with trivial local system.
pub fn springer_rep(lambda: &DecoratedPartition, letter: Letter) -> Result<WeylIrrep> {
    let sym = springer_symbol(lambda, letter)?;
    WeylIrrep::new(letter, sym.to_label()?)
}

/// The a-symbol class attached to `E((λ_D)^κ, 1)` for `λ` of type C with `λ^t` of type D:
/// pad `λ` to even length, add `(0, 1, 2, …)` and place the halved odd entries on top and
/// the halved even entries below.
pub fn collapse_symbol(lambda: &Partition, kappa: u8) -> Result<Symbol> {
    if !is_type_partition(lambda, Letter::C) || !is_type_partition(&lambda.transpose(), Letter::D) {
        return invalid(format!("{lambda} must be of type C with transpose of type D"));
    }
    let len = lambda.len() + lambda.len() % 2;
    let (xi, eta) = parity_split(&lambda.increasing_padded(len));
    Symbol::new(SymbolKind::A, Letter::D, xi, eta, kappa)
}

struct SpringerTable {
    bottom_len: usize,
    map: HashMap<(Vec<u32>, u8), DecoratedPartition>,
}

fn springer_table(letter: Letter, rank: usize) -> Result<Arc<SpringerTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(Letter, usize), Arc<SpringerTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("springer cache").get(&(letter, rank)) {
        return Ok(Arc::clone(t));
    }
    let bottom_len = rank + 1;
    let mut map = HashMap::new();
    for orbit in enumerate(LieType::new(letter, rank))? {
        let e = springer_rep(&orbit, letter)?;
        let s = e.ssymbol(letter, Some(bottom_len))?;
        if !s.is_monotonic() {
            return Err(Error::Internal(format!("s-symbol of E({orbit},1) is not monotonic")));
        }
        let key = (s.multiset(), if s.has_equal_rows() { s.kappa() } else { 0 });
        if map.insert(key, orbit.clone()).is_some() {
            return Err(Error::Internal(format!("two orbits share the s-symbol class of {orbit}")));
        }
    }
    let table = Arc::new(SpringerTable { bottom_len, map });
    cache.lock().expect("springer cache").insert((letter, rank), Arc::clone(&table));
    Ok(table)
}

/// The Springer support `O(E)` (side [`Side::Group`]) or `O∨(E)` (side [`Side::Dual`]):
/// the orbit whose `E(·, 1)` has an s-symbol `∼`-equivalent to that of `E`.
pub fn springer_support(e: &WeylIrrep, side: Side) -> Result<DecoratedPartition> {
    let letter = match side {
        Side::Group => e.letter,
        Side::Dual => e.letter.dual(),
    };
    let table = springer_table(letter, e.rank)?;
    let s = e.ssymbol(letter, Some(table.bottom_len))?;
    let key = (s.multiset(), if s.has_equal_rows() { s.kappa() } else { 0 });
    table
        .map
        .get(&key)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("no orbit found for the s-symbol {s}")))
}

/// A two-sided family (Lusztig family) of a Weyl group, identified by the normalised
/// monotonic a-symbol of its special member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyId {
    letter: Letter,
    rank: usize,
    symbol: Symbol,
}

impl FamilyId {
    /// Type letter of the Weyl group.
    pub fn letter(&self) -> Letter {
        self.letter
    }

    /// Rank of the Weyl group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The monotonic a-symbol of the special member, in its shortest form.
    pub fn symbol(&self) -> &Symbol {
        &self.symbol
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "family of {} in W({}{})", self.symbol, self.letter, self.rank)
    }
}

/// The family containing `E`.
pub fn family_of(e: &WeylIrrep) -> Result<FamilyId> {
    let symbol = e.asymbol(None)?.monotonic_representative()?.normalize();
    Ok(FamilyId { letter: e.letter, rank: e.rank, symbol })
}

/// The special representation of a family.
pub fn special_rep(f: &FamilyId) -> Result<WeylIrrep> {
    WeylIrrep::new(f.letter, f.symbol.to_label()?)
}

/// Whether two representations lie in the same family.
pub fn same_family(a: &WeylIrrep, b: &WeylIrrep) -> Result<bool> {
    if a.rank != b.rank || (a.letter == Letter::D) != (b.letter == Letter::D) {
        return invalid("representations of different Weyl groups");
    }
    Ok(family_of(a)?.symbol == family_of(&b.relabel(a.letter)?)?.symbol)
}

/// All members of a family, obtained by distributing the entries of multiplicity one of
/// the family's a-symbol between the two rows.
pub fn family_members(f: &FamilyId) -> Result<Vec<WeylIrrep>> {
    let k = f.rank + 1;
    let base = f.symbol.with_bottom_len(k)?;
    let entries = base.multiset();
    let mut pairs = Vec::new();
    let mut singles = Vec::new();
    let mut i = 0;
    while i < entries.len() {
        if i + 1 < entries.len() && entries[i] == entries[i + 1] {
            pairs.push(entries[i]);
            i += 2;
        } else {
            singles.push(entries[i]);
            i += 1;
        }
    }
    let top_len = if f.letter == Letter::D { k } else { k + 1 };
    let on_top = top_len
        .checked_sub(pairs.len())
        .ok_or_else(|| Error::Internal("family symbol has too many pairs".into()))?;
    let mut out: Vec<WeylIrrep> = Vec::new();
    for choice in combinations(singles.len(), on_top) {
        let mut top = pairs.clone();
        let mut bottom = pairs.clone();
        for (j, &s) in singles.iter().enumerate() {
            if choice.contains(&j) {
                top.push(s);
            } else {
                bottom.push(s);
            }
        }
        top.sort_unstable();
        bottom.sort_unstable();
        let sym = Symbol::new(SymbolKind::A, f.letter, top, bottom, base.kappa())?;
        let member = WeylIrrep::new(f.letter, sym.to_label()?)?;
        if !out.contains(&member) {
            out.push(member);
        }
    }
    Ok(out)
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= n {
        rec(0, n, r, &mut Vec::new(), &mut out);
    }
    out
}

/// The shape of a maximal pseudo-Levi subgroup `W_J = W_{Y}(k) × W_X(n - k)` of the
/// affine Weyl group, where `Y = D` for `X ∈ {B, D}` and `Y = C` for `X = C`.
///
/// Shapes whose subgroup is all of `W` are normalised: in type B `k = 1` becomes `0`;
/// in type D `k = 1` becomes `0` and `k = n - 1` becomes `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PseudoLeviShape {
    letter: Letter,
    rank: usize,
    k: usize,
}

impl PseudoLeviShape {
    /// Builds and normalises a shape.
    pub fn new(letter: Letter, rank: usize, k: usize) -> Result<PseudoLeviShape> {
        if k > rank {
            return invalid(format!("pseudo-Levi parameter {k} exceeds the rank {rank}"));
        }
        let k = match letter {
            Letter::B if k == 1 => 0,
            Letter::D if k == 1 => 0,
            Letter::D if rank >= 2 && k + 1 == rank => rank,
            _ => k,
        };
        Ok(PseudoLeviShape { letter, rank, k })
    }

    /// The whole Weyl group (`J = Δ`).
    pub fn full(letter: Letter, rank: usize) -> PseudoLeviShape {
        PseudoLeviShape { letter, rank, k: 0 }
    }

    /// All maximal shapes, after normalisation and without repetition.
    pub fn maximal(letter: Letter, rank: usize) -> Vec<PseudoLeviShape> {
        let mut out: Vec<PseudoLeviShape> = Vec::new();
        for k in 0..=rank {
            let s = PseudoLeviShape::new(letter, rank, k).expect("k in range");
            let dup = out.iter().any(|t| t.k == s.k || (t.is_full() && s.is_full()));
            if !dup {
                out.push(s);
            }
        }
        out
    }

    /// Type letter of the ambient group.
    pub fn letter(&self) -> Letter {
        self.letter
    }

    /// Rank of the ambient group.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank `k` of the first factor.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The two factor types `(Y_k, X_{n-k})`.
    pub fn factors(&self) -> (LieType, LieType) {
        (LieType::new(self.letter.factor(), self.k), LieType::new(self.letter, self.rank - self.k))
    }

    /// Whether `W_J = W`.
    pub fn is_full(&self) -> bool {
        self.k == 0 || (self.letter == Letter::D && self.k == self.rank)
    }
}

impl fmt::Display for PseudoLeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.factors();
        write!(f, "{a} × {b}")
    }
}

fn check_factor(f: &WeylIrrep, expected: LieType, which: &str) -> Result<()> {
    let letter_ok = f.letter == expected.letter
        || (f.letter != Letter::D && expected.letter != Letter::D);
    if !letter_ok || f.rank != expected.rank {
        return invalid(format!(
            "{which} factor {f} is a representation of W({}{}), expected W({expected})",
            f.letter, f.rank
        ));
    }
    Ok(())
}

/// Truncated induction `j_{W_J}^W(F_1 ⊗ F_2)` of a special representation of `W_J`,
/// computed by adding a-symbols and reading the sum as an s-symbol of the dual type.
/// When the sum has equal rows its decoration is taken from `F_2`.
pub fn j_induce(shape: &PseudoLeviShape, f1: &WeylIrrep, f2: &WeylIrrep) -> Result<WeylIrrep> {
    let (t1, t2) = shape.factors();
    check_factor(f1, t1, "first")?;
    check_factor(f2, t2, "second")?;
    let f1 = if f1.letter == t1.letter { f1.clone() } else { f1.relabel(t1.letter)? };
    let f2 = if f2.letter == t2.letter { f2.clone() } else { f2.relabel(t2.letter)? };
    for f in [&f1, &f2] {
        if !f.is_special()? {
            return invalid(format!("{f} is not special; truncated induction needs a special representation"));
        }
    }
    let x = shape.letter;
    let k = f1.asymbol(None)?.bottom_len().max(f2.asymbol(None)?.bottom_len());
    let a1 = f1.asymbol(Some(k))?;
    let a2 = f2.asymbol(Some(k))?;
    let sum = match x {
        Letter::B => {
            let s = shriek(&a1)?;
            add_rows((s.top(), s.bottom()), (a2.top(), a2.bottom()), SymbolKind::S, Letter::C, 0)
        }
        Letter::C => add_rows((a1.top(), a1.bottom()), (a2.top(), a2.bottom()), SymbolKind::S, Letter::B, 0),
        Letter::D => add_rows((a1.top(), a1.bottom()), (a2.top(), a2.bottom()), SymbolKind::S, Letter::D, f2.kappa()),
    }
    .map_err(|e| Error::Internal(format!("truncated induction of {f1} ⊗ {f2}: {e}")))?;
    WeylIrrep::new(x, sum.to_label()?)
}

/// Littlewood–Richardson coefficient `c^ν_{λ μ}`, counted by enumerating LR tableaux of
/// skew shape `ν / λ` and content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !(0..lambda.len()).all(|i| lambda.part(i) <= nu.part(i)) {
        return 0;
    }
    // Cells in reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r) as usize..nu.part(r) as usize).rev() {
            cells.push((r, c));
        }
    }
    let content: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut counts = vec![0usize; content.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        content: &[usize],
        filling: &mut HashMap<(usize, usize), usize>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let max_right = filling.get(&(r, c + 1)).copied().unwrap_or(usize::MAX);
        let min_above = if r > 0 { filling.get(&(r - 1, c)).copied().unwrap_or(0) } else { 0 };
        let mut total = 0;
        for v in (min_above + 1)..=content.len().min(max_right) {
            if counts[v] >= content[v - 1] || (v > 1 && counts[v] >= counts[v - 1]) {
                continue;
            }
            counts[v] += 1;
            filling.insert((r, c), v);
            total += rec(idx + 1, cells, content, filling, counts);
            filling.remove(&(r, c));
            counts[v] -= 1;
        }
        total
    }
    rec(0, &cells, &content, &mut filling, &mut counts)
}

fn orderings(label: &IrrepLabel) -> Vec<(Partition, Partition)> {
    let (a, b) = label.rows();
    if let IrrepLabel::Unordered(_) = label {
        if a != b {
            return vec![(a.clone(), b.clone()), (b.clone(), a.clone())];
        }
    }
    vec![(a.clone(), b.clone())]
}

/// Multiplicity of `F_1 ⊠ F_2` in the restriction of `E` to `W_J`, computed exactly from
/// Littlewood–Richardson coefficients.
///
/// For a degenerate type-D representation `E = {α, α}^κ` the answer is half of the
/// multiplicity in the restriction of `(α, α)` from `W(B_n)`, provided one of the factors
/// is non-degenerate; otherwise the decoration matters and [`Error::Ambiguous`] is returned.
pub fn restriction_multiplicity(e: &WeylIrrep, shape: &PseudoLeviShape, f1: &WeylIrrep, f2: &WeylIrrep) -> Result<u64> {
    let (t1, t2) = shape.factors();
    check_factor(f1, t1, "first")?;
    check_factor(f2, t2, "second")?;
    let ewrong = e.rank != shape.rank
        || (e.letter == Letter::D) != (shape.letter == Letter::D);
    if ewrong {
        return invalid(format!("{e} is not a representation of W({}{})", shape.letter, shape.rank));
    }
    if shape.is_full() {
        let whole = if shape.k == 0 { f2 } else { f1 };
        return Ok(u64::from(whole.label == e.label));
    }
    let (alpha, beta) = (e.label.rows().0.clone(), e.label.rows().1.clone());
    let sum = |firsts: &[(Partition, Partition)], seconds: &[(Partition, Partition)]| -> u64 {
        let mut total = 0;
        for (m1, n1) in firsts {
            for (m2, n2) in seconds {
                total += lr_coefficient(m1, m2, &alpha) * lr_coefficient(n1, n2, &beta);
            }
        }
        total
    };
    match shape.letter {
        Letter::C => Ok(sum(&orderings(&f1.label), &orderings(&f2.label))),
        Letter::B => Ok(sum(&orderings(&f1.label), &[(f2.label.rows().0.clone(), f2.label.rows().1.clone())])),
        Letter::D => {
            let total = sum(&orderings(&f1.label), &orderings(&f2.label));
            if !e.is_degenerate() {
                Ok(total)
            } else if !f1.is_degenerate() || !f2.is_degenerate() {
                Ok(total / 2)
            } else {
                Err(Error::Ambiguous(format!(
                    "the multiplicity of {f1} ⊠ {f2} in {e} depends on decorations that symbols do not determine"
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(s: &str) -> DecoratedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn springer_examples() {
        let e = springer_rep(&dp("3,1,1"), Letter::B).unwrap();
        assert_eq!(e.to_string(), "1;1");
        assert_eq!(springer_rep(&dp("5"), Letter::B).unwrap(), WeylIrrep::trivial(Letter::B, 2));
        assert_eq!(springer_rep(&dp("1,1,1,1,1"), Letter::B).unwrap(), WeylIrrep::sign(Letter::B, 2));
        assert_eq!(springer_rep(&dp("2,2"), Letter::C).unwrap().to_string(), "1;1");
        assert_eq!(springer_rep(&dp("3,1"), Letter::D).unwrap(), WeylIrrep::trivial(Letter::D, 2));
    }

    #[test]
    fn reflection_representation_is_subregular() {
        for n in 2..6 {
            let refl = WeylIrrep::ordered(Letter::B, Partition::from_unsorted(vec![n - 1]), "1".parse().unwrap()).unwrap();
            let b = Partition::from_unsorted(vec![2 * n - 1, 1, 1]);
            let c = Partition::from_unsorted(vec![2 * n - 2, 2]);
            assert_eq!(springer_rep(&b.into(), Letter::B).unwrap(), refl);
            assert_eq!(springer_rep(&c.into(), Letter::C).unwrap(), refl.relabel(Letter::C).unwrap());
        }
    }

    #[test]
    fn support_of_trivial_and_sign() {
        for letter in [Letter::B, Letter::C, Letter::D] {
            for n in 1..5 {
                let triv = springer_support(&WeylIrrep::trivial(letter, n), Side::Group).unwrap();
                assert_eq!(triv, enumerate(LieType::new(letter, n)).unwrap()[0]);
                let sgn = springer_support(&WeylIrrep::sign(letter, n), Side::Group).unwrap();
                assert_eq!(sgn.partition.len(), letter.partition_size(n));
            }
        }
    }

    #[test]
    fn lr_examples() {
        let p = |s: &str| -> Partition { s.parse().unwrap() };
        assert_eq!(lr_coefficient(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr_coefficient(&p("1"), &p("1"), &p("1,1")), 1);
        assert_eq!(lr_coefficient(&p("2"), &p("2"), &p("2,2")), 1);
        assert_eq!(lr_coefficient(&p("2"), &p("1,1"), &p("2,2")), 0);
        assert_eq!(lr_coefficient(&p("∅"), &p("2,1"), &p("2,1")), 1);
    }

    #[test]
    fn shapes_normalise() {
        assert_eq!(PseudoLeviShape::new(Letter::B, 3, 1).unwrap().k(), 0);
        assert_eq!(PseudoLeviShape::new(Letter::D, 4, 3).unwrap().k(), 4);
        let ks: Vec<usize> = PseudoLeviShape::maximal(Letter::D, 5).iter().map(|s| s.k()).collect();
        assert_eq!(ks, vec![0, 2, 3]);
        let ks: Vec<usize> = PseudoLeviShape::maximal(Letter::B, 3).iter().map(|s| s.k()).collect();
        assert_eq!(ks, vec![0, 2, 3]);
    }

    #[test]
    fn families_in_b2() {
        let e = WeylIrrep::parse(Letter::B, "1;1").unwrap();
        let f = family_of(&e).unwrap();
        let members = family_members(&f).unwrap();
        assert_eq!(members.len(), 3);
        assert_eq!(special_rep(&f).unwrap(), e);
    }

    #[test]
    fn induction_from_full_shape_is_identity() {
        for letter in [Letter::B, Letter::C, Letter::D] {
            let shape = PseudoLeviShape::full(letter, 3);
            let (t1, _) = shape.factors();
            let unit = WeylIrrep::trivial(t1.letter, 0);
            for e in WeylIrrep::all(letter, 3) {
                if e.is_special().unwrap() {
                    assert_eq!(j_induce(&shape, &unit, &e).unwrap(), e);
                }
            }
        }
    }
}
