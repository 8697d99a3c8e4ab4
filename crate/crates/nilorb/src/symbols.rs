//! Lusztig's s-symbols and a-symbols, refinements and flips.
//!
//! A *symbol* is a pair of rows `(a; b)` of non-negative integers.  In an s-symbol
//! consecutive entries of a row differ by at least two; in an a-symbol rows are strictly
//! increasing.  Types `B` and `C` use defect one (`#a = #b + 1`), type `D` uses defect
//! zero with unordered rows; an s-symbol of type `C` additionally has `b_1 > 0`.
//!
//! Type-`D` symbols are stored *underlined*: the row with the larger sum (ties broken by
//! the lexicographic order of the rows) is kept on top, so that two representations of
//! the same unordered symbol compare equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::{
    Bipartition, DecoratedUnorderedBipartition, IrrepLabel, Letter, Partition,
};

/// Which of the two kinds of symbol a [`Symbol`] is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymbolKind {
    /// a-symbol: strictly increasing rows, offsets `0, 1, 2, …`.
    A,
    /// s-symbol: rows with gaps of at least two, offsets `0, 2, 4, …`.
    S,
}

/// Row of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Row {
    /// Top row `a`.
    Top,
    /// Bottom row `b`.
    Bottom,
}

/// An s-symbol or a-symbol of type B, C or D.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    kind: SymbolKind,
    letter: Letter,
    top: Vec<u32>,
    bottom: Vec<u32>,
    kappa: u8,
}

fn gap(kind: SymbolKind) -> u32 {
    match kind {
        SymbolKind::A => 1,
        SymbolKind::S => 2,
    }
}

fn check_row(row: &[u32], kind: SymbolKind, name: &str) -> Result<()> {
    let g = gap(kind);
    if row.windows(2).any(|w| w[1] < w[0] + g) {
        return invalid(format!(
            "row {name} = {row:?} must increase by at least {g} between consecutive entries"
        ));
    }
    Ok(())
}

impl Symbol {
    /// Builds and validates a symbol.
    ///
    /// Type-`D` rows are reordered into the underlined form and `kappa` is normalised to
    /// `0` unless both rows coincide; for types `B`/`C` the decoration must be `0`.
    pub fn new(
        kind: SymbolKind,
        letter: Letter,
        top: Vec<u32>,
        bottom: Vec<u32>,
        kappa: u8,
    ) -> Result<Symbol> {
        check_row(&top, kind, "a")?;
        check_row(&bottom, kind, "b")?;
        match letter {
            Letter::B | Letter::C => {
                if top.len() != bottom.len() + 1 {
                    return invalid(format!(
                        "a type-{letter} symbol needs defect 1, got rows of lengths {} and {}",
                        top.len(),
                        bottom.len()
                    ));
                }
                if letter == Letter::C && kind == SymbolKind::S && bottom.first() == Some(&0) {
                    return invalid("a type-C s-symbol needs b_1 > 0");
                }
                Ok(Symbol { kind, letter, top, bottom, kappa: 0 })
            }
            Letter::D => {
                if top.len() != bottom.len() {
                    return invalid(format!(
                        "a type-D symbol needs defect 0, got rows of lengths {} and {}",
                        top.len(),
                        bottom.len()
                    ));
                }
                let key = |r: &Vec<u32>| (r.iter().map(|&x| x as u64).sum::<u64>(), r.clone());
                let (top, bottom) = if key(&top) >= key(&bottom) { (top, bottom) } else { (bottom, top) };
                let kappa = if top == bottom { kappa % 2 } else { 0 };
                Ok(Symbol { kind, letter, top, bottom, kappa })
            }
        }
    }

    /// Kind of the symbol.
    pub fn kind(&self) -> SymbolKind {
        self.kind
    }

    /// Type letter of the symbol.
    pub fn letter(&self) -> Letter {
        self.letter
    }

    /// Top row `a`.
    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// Bottom row `b`.
    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Decoration (type `D` with equal rows only; otherwise 0).
    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    /// Length `#b` of the bottom row.
    pub fn bottom_len(&self) -> usize {
        self.bottom.len()
    }

    /// Defect `#a - #b`.
    pub fn defect(&self) -> i64 {
        self.top.len() as i64 - self.bottom.len() as i64
    }

    /// Whether both rows coincide (type `D` only).
    pub fn has_equal_rows(&self) -> bool {
        self.top == self.bottom
    }

    /// The interleaved sequence `Λ̄` together with the row of each entry:
    /// `(a_1, b_1, a_2, …)` in types `B`/`C`, `(b_1, a_1, b_2, …)` in type `D`.
    pub fn bar_with_rows(&self) -> Vec<(u32, Row)> {
        interleave(&self.top, &self.bottom, self.letter == Letter::D)
    }

    /// The interleaved sequence `Λ̄`.
    pub fn bar(&self) -> Vec<u32> {
        self.bar_with_rows().into_iter().map(|(v, _)| v).collect()
    }

    /// Whether `Λ̄` is non-decreasing.
    pub fn is_monotonic(&self) -> bool {
        self.bar().windows(2).all(|w| w[0] <= w[1])
    }

    /// All entries as a sorted multiset.
    pub fn multiset(&self) -> Vec<u32> {
        let mut v = self.top.clone();
        v.extend_from_slice(&self.bottom);
        v.sort_unstable();
        v
    }

    fn offset(&self, row: Row, i: usize) -> u32 {
        let base = gap(self.kind) * i as u32;
        if self.kind == SymbolKind::S && self.letter == Letter::C && row == Row::Bottom {
            base + 1
        } else {
            base
        }
    }

    /// One step of `≈`: prepend to both rows and shift every entry.
    pub fn shift_up(&self) -> Symbol {
        let g = gap(self.kind);
        let mut top = vec![0];
        top.extend(self.top.iter().map(|&x| x + g));
        let first_bottom = if self.kind == SymbolKind::S && self.letter == Letter::C { 1 } else { 0 };
        let mut bottom = vec![first_bottom];
        bottom.extend(self.bottom.iter().map(|&x| x + g));
        Symbol { kind: self.kind, letter: self.letter, top, bottom, kappa: self.kappa }
    }

    /// Inverse of [`Symbol::shift_up`], when possible.
    pub fn shift_down(&self) -> Option<Symbol> {
        let g = gap(self.kind);
        let first_bottom = if self.kind == SymbolKind::S && self.letter == Letter::C { 1 } else { 0 };
        if self.top.first() != Some(&0) || self.bottom.first() != Some(&first_bottom) {
            return None;
        }
        let top: Vec<u32> = self.top[1..].iter().map(|&x| x - g).collect();
        let bottom: Vec<u32> = self.bottom[1..].iter().map(|&x| x - g).collect();
        Some(Symbol { kind: self.kind, letter: self.letter, top, bottom, kappa: self.kappa })
    }

    /// The unique `≈`-equivalent symbol of smallest length.
    pub fn normalize(&self) -> Symbol {
        let mut s = self.clone();
        while let Some(t) = s.shift_down() {
            s = t;
        }
        s
    }

    /// The `≈`-equivalent symbol whose bottom row has length `k`.
    pub fn with_bottom_len(&self, k: usize) -> Result<Symbol> {
        let mut s = self.normalize();
        if s.bottom_len() > k {
            return invalid(format!(
                "symbol {self} has no representative with bottom row of length {k} (minimum {})",
                s.bottom_len()
            ));
        }
        while s.bottom_len() < k {
            s = s.shift_up();
        }
        Ok(s)
    }

    /// The monotonic symbol with the same multiset of entries and the same row lengths.
    pub fn monotonic_representative(&self) -> Result<Symbol> {
        let entries = self.multiset();
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for (i, v) in entries.into_iter().enumerate() {
            if i % 2 == 0 {
                even.push(v);
            } else {
                odd.push(v);
            }
        }
        let (top, bottom) = if self.letter == Letter::D { (odd, even) } else { (even, odd) };
        Symbol::new(self.kind, self.letter, top, bottom, self.kappa)
    }

    /// The two partitions `(λ, μ)` read off the rows (top row gives `λ`).
    pub fn rows_as_partitions(&self) -> Result<(Partition, Partition)> {
        let read = |row: &[u32], which: Row| -> Result<Partition> {
            let mut parts = Vec::with_capacity(row.len());
            for (i, &x) in row.iter().enumerate() {
                let off = self.offset(which, i);
                if x < off {
                    return invalid(format!("symbol {self} does not come from a bipartition"));
                }
                parts.push(x - off);
            }
            Ok(Partition::from_unsorted(parts))
        };
        Ok((read(&self.top, Row::Top)?, read(&self.bottom, Row::Bottom)?))
    }

    /// The irreducible-representation label encoded by this symbol.
    pub fn to_label(&self) -> Result<IrrepLabel> {
        let (l, m) = self.rows_as_partitions()?;
        Ok(match self.letter {
            Letter::B | Letter::C => IrrepLabel::Ordered(Bipartition::new(l, m)),
            Letter::D => IrrepLabel::Unordered(DecoratedUnorderedBipartition::new(l, m, self.kappa)),
        })
    }

    /// The rank `n` of the symbol.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.to_label()?.size())
    }

    /// `Λ ∼ Λ'`: same multiset of entries (symbols of the same kind, type and lengths).
    pub fn similar(&self, other: &Symbol) -> Result<bool> {
        self.require_compatible(other)?;
        if self.bottom_len() != other.bottom_len() {
            return invalid("similarity compares symbols with rows of the same length");
        }
        if self.letter == Letter::D && self.has_equal_rows() && other.has_equal_rows() {
            return Ok(self == other);
        }
        Ok(self.multiset() == other.multiset())
    }

    /// `[Λ] ∼ [Λ']`: similarity after moving both symbols to a common length.
    pub fn class_similar(&self, other: &Symbol) -> Result<bool> {
        self.require_compatible(other)?;
        let k = self.normalize().bottom_len().max(other.normalize().bottom_len());
        self.with_bottom_len(k)?.similar(&other.with_bottom_len(k)?)
    }

    fn require_compatible(&self, other: &Symbol) -> Result<()> {
        if self.kind != other.kind || self.letter != other.letter {
            return invalid(format!(
                "cannot compare a {:?}-symbol of type {} with a {:?}-symbol of type {}",
                self.kind, self.letter, other.kind, other.letter
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.letter == Letter::D {
            write!(f, "{{({});({})}}", row(&self.top), row(&self.bottom))?;
            if self.has_equal_rows() {
                write!(f, "^{}", self.kappa)?;
            }
            Ok(())
        } else {
            write!(f, "(({});({}))", row(&self.top), row(&self.bottom))
        }
    }
}

fn interleave(top: &[u32], bottom: &[u32], bottom_first: bool) -> Vec<(u32, Row)> {
    let (first, first_row, second, second_row) = if bottom_first {
        (bottom, Row::Bottom, top, Row::Top)
    } else {
        (top, Row::Top, bottom, Row::Bottom)
    };
    let mut out = Vec::with_capacity(top.len() + bottom.len());
    for i in 0..first.len().max(second.len()) {
        if let Some(&x) = first.get(i) {
            out.push((x, first_row));
        }
        if let Some(&x) = second.get(i) {
            out.push((x, second_row));
        }
    }
    out
}

fn minimal_bottom_len(label: &IrrepLabel, letter: Letter) -> usize {
    let (l, m) = label.rows();
    match letter {
        Letter::B | Letter::C => (l.len().saturating_sub(1)).max(m.len()),
        Letter::D => l.len().max(m.len()),
    }
}

fn require_label_matches(label: &IrrepLabel, letter: Letter) -> Result<()> {
    match (label, letter) {
        (IrrepLabel::Ordered(_), Letter::B | Letter::C) | (IrrepLabel::Unordered(_), Letter::D) => Ok(()),
        _ => invalid(format!("label {label} does not match type {letter}")),
    }
}

fn symbol_of(label: &IrrepLabel, letter: Letter, kind: SymbolKind, k: Option<usize>) -> Result<Symbol> {
    require_label_matches(label, letter)?;
    let min = minimal_bottom_len(label, letter);
    let k = match k {
        Some(k) if k < min => {
            return invalid(format!("bottom length {k} is too short for {label} (minimum {min})"))
        }
        Some(k) => k,
        None => min,
    };
    let (l, m) = label.rows();
    let top_len = if letter == Letter::D { k } else { k + 1 };
    let g = gap(kind);
    let c_shift = u32::from(kind == SymbolKind::S && letter == Letter::C);
    let top = l.increasing_padded(top_len).into_iter().enumerate().map(|(i, x)| x + g * i as u32).collect();
    let bottom = m
        .increasing_padded(k)
        .into_iter()
        .enumerate()
        .map(|(i, x)| x + g * i as u32 + c_shift)
        .collect();
    Symbol::new(kind, letter, top, bottom, label.kappa())
}

/// The s-symbol `Λ(E)` of a Weyl group representation label in the convention of type
/// `letter`, with bottom row of length `k` (the minimal length when `k` is `None`).
pub fn ssymbol_of(label: &IrrepLabel, letter: Letter, k: Option<usize>) -> Result<Symbol> {
    symbol_of(label, letter, SymbolKind::S, k)
}

/// The a-symbol `α(E)` of a Weyl group representation label, with bottom row of length
/// `k` (the minimal length when `k` is `None`).
pub fn asymbol_of(label: &IrrepLabel, letter: Letter, k: Option<usize>) -> Result<Symbol> {
    symbol_of(label, letter, SymbolKind::A, k)
}

/// Kind of a block of a refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// Two equal entries, one in each row.
    Pair,
    /// A maximal run of consecutive integers among the remaining entries.
    Interval,
}

/// One block `I_i` of a refinement together with its parts `A_i` and `B_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    /// Pair or interval.
    pub kind: BlockKind,
    /// The entries of `I_i`, in increasing order.
    pub entries: Vec<u32>,
    /// `A_i`: entries coming from the top row.
    pub top: Vec<u32>,
    /// `B_i`: entries coming from the bottom row.
    pub bottom: Vec<u32>,
}

/// Decomposition of a monotonic interleaved sequence into pairs and intervals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Refinement {
    /// Blocks ordered by their entries.
    pub blocks: Vec<Block>,
}

impl Refinement {
    /// Indices (1-based) of the interval blocks.
    pub fn interval_indices(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.kind == BlockKind::Interval)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Refinement of raw rows whose interleaving is non-decreasing.
///
/// `bottom_first` selects the type-`D` interleaving `(b_1, a_1, …)`.  Rows need only be
/// strictly increasing; no gap condition is imposed.
pub fn refine_rows(top: &[u32], bottom: &[u32], bottom_first: bool) -> Result<Refinement> {
    if top.windows(2).any(|w| w[0] >= w[1]) || bottom.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("refinement needs strictly increasing rows");
    }
    let bar = interleave(top, bottom, bottom_first);
    if bar.windows(2).any(|w| w[0].0 > w[1].0) {
        return invalid("refinement needs a monotonic symbol");
    }
    let mut paired = vec![false; bar.len()];
    let mut blocks: Vec<(u32, Block)> = Vec::new();
    for i in 0..bar.len().saturating_sub(1) {
        if !paired[i] && bar[i].0 == bar[i + 1].0 {
            paired[i] = true;
            paired[i + 1] = true;
            let v = bar[i].0;
            blocks.push((v, Block { kind: BlockKind::Pair, entries: vec![v, v], top: vec![v], bottom: vec![v] }));
        }
    }
    let mut current: Option<Block> = None;
    for (i, &(v, row)) in bar.iter().enumerate() {
        if paired[i] {
            continue;
        }
        let extend = matches!(&current, Some(b) if b.entries.last().map(|&l| l + 1) == Some(v));
        if !extend {
            if let Some(b) = current.take() {
                blocks.push((b.entries[0], b));
            }
            current = Some(Block { kind: BlockKind::Interval, entries: Vec::new(), top: Vec::new(), bottom: Vec::new() });
        }
        let b = current.as_mut().expect("block started");
        b.entries.push(v);
        match row {
            Row::Top => b.top.push(v),
            Row::Bottom => b.bottom.push(v),
        }
    }
    if let Some(b) = current.take() {
        blocks.push((b.entries[0], b));
    }
    blocks.sort_by_key(|(v, b)| (*v, b.kind == BlockKind::Interval));
    Ok(Refinement { blocks: blocks.into_iter().map(|(_, b)| b).collect() })
}

/// Refinement of a monotonic symbol.
pub fn refinement(symbol: &Symbol) -> Result<Refinement> {
    refine_rows(&symbol.top, &symbol.bottom, symbol.letter == Letter::D)
}

/// Flips the blocks with the given 1-based indices of a monotonic symbol's refinement,
/// swapping `A_i` and `B_i`, and validates the result as a symbol of the same type.
pub fn flips(symbol: &Symbol, indices: &[usize]) -> Result<Symbol> {
    let refined = refinement(symbol)?;
    for &i in indices {
        if i == 0 || i > refined.blocks.len() {
            return invalid(format!("block index {i} out of range 1..={}", refined.blocks.len()));
        }
    }
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for (i, block) in refined.blocks.iter().enumerate() {
        let (a, b) = if indices.contains(&(i + 1)) { (&block.bottom, &block.top) } else { (&block.top, &block.bottom) };
        top.extend_from_slice(a);
        bottom.extend_from_slice(b);
    }
    top.sort_unstable();
    bottom.sort_unstable();
    if symbol.kind == SymbolKind::S && symbol.letter == Letter::C && bottom.first() == Some(&0) {
        let culprit = refined.blocks.iter().position(|b| b.entries.first() == Some(&0)).map_or(1, |p| p + 1);
        return invalid(format!("block {culprit} cannot be flipped: its top part starts with 0"));
    }
    Symbol::new(symbol.kind, symbol.letter, top, bottom, symbol.kappa).map_err(|e| {
        Error::Validation(format!("flipping blocks {indices:?} of {symbol} is not allowed: {e}"))
    })
}

/// All symbols at bottom length `k` that are `∼`-equivalent to `[Λ]`, obtained by flipping
/// interval blocks of the monotonic representative.  Subsets are visited in the order of
/// their bitmask (block with the smallest index as lowest bit); duplicates are dropped.
pub fn enumerate_class(symbol: &Symbol, k: usize) -> Result<Vec<Symbol>> {
    let base = symbol.with_bottom_len(k)?.monotonic_representative()?;
    let intervals = refinement(&base)?.interval_indices();
    if intervals.len() > 24 {
        return Err(Error::BoundExceeded { what: "flip enumeration".into(), rank: intervals.len(), bound: 24 });
    }
    let mut out: Vec<Symbol> = Vec::new();
    for mask in 0u32..(1u32 << intervals.len()) {
        let chosen: Vec<usize> = intervals
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, &i)| i)
            .collect();
        if let Ok(s) = flips(&base, &chosen) {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Entrywise sum of two symbols with rows of equal lengths, validated as a symbol of the
/// requested kind and type.
pub fn add(a: &Symbol, b: &Symbol, kind: SymbolKind, letter: Letter) -> Result<Symbol> {
    add_rows((&a.top, &a.bottom), (&b.top, &b.bottom), kind, letter, b.kappa)
}

pub(crate) fn add_rows(
    a: (&[u32], &[u32]),
    b: (&[u32], &[u32]),
    kind: SymbolKind,
    letter: Letter,
    kappa: u8,
) -> Result<Symbol> {
    if a.0.len() != b.0.len() || a.1.len() != b.1.len() {
        return invalid("adding symbols needs rows of equal lengths");
    }
    let top = a.0.iter().zip(b.0).map(|(x, y)| x + y).collect();
    let bottom = a.1.iter().zip(b.1).map(|(x, y)| x + y).collect();
    Symbol::new(kind, letter, top, bottom, kappa)
}

/// `α^!` for an ordered defect-0 pair of rows: `((0, a+1); (b+1))`.
pub fn shriek_rows(top: &[u32], bottom: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut t = vec![0];
    t.extend(top.iter().map(|x| x + 1));
    (t, bottom.iter().map(|x| x + 1).collect())
}

/// `α^!` for a type-`D` a-symbol, applied to its underlined form; the result is a
/// defect-1 a-symbol (tagged with type `B`).
pub fn shriek(alpha: &Symbol) -> Result<Symbol> {
    if alpha.kind != SymbolKind::A || alpha.letter != Letter::D {
        return invalid("the shriek operation applies to type-D a-symbols");
    }
    let (t, b) = shriek_rows(&alpha.top, &alpha.bottom);
    Symbol::new(SymbolKind::A, Letter::B, t, b, 0)
}

/// Tensoring with the sign character: `(λ, μ) ↦ (μ^t, λ^t)`; the decoration of a type-`D`
/// label is kept.
pub fn sgn_twist(label: &IrrepLabel) -> IrrepLabel {
    match label {
        IrrepLabel::Ordered(b) => IrrepLabel::Ordered(Bipartition::new(b.second.transpose(), b.first.transpose())),
        IrrepLabel::Unordered(u) => IrrepLabel::Unordered(DecoratedUnorderedBipartition::new(
            u.second().transpose(),
            u.first().transpose(),
            u.kappa(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(a: &str, b: &str) -> IrrepLabel {
        IrrepLabel::Ordered(Bipartition::new(a.parse().unwrap(), b.parse().unwrap()))
    }

    #[test]
    fn ssymbol_examples() {
        let s = ssymbol_of(&ord("∅", "∅"), Letter::B, None).unwrap();
        assert_eq!((s.top(), s.bottom()), (&[0][..], &[][..]));
        let s = ssymbol_of(&ord("1", "1"), Letter::B, None).unwrap();
        assert_eq!((s.top(), s.bottom()), (&[0, 3][..], &[1][..]));
        let a = asymbol_of(&ord("1", "1"), Letter::B, None).unwrap();
        assert_eq!((a.top(), a.bottom()), (&[0, 2][..], &[1][..]));
        let c = ssymbol_of(&ord("1", "1"), Letter::C, None).unwrap();
        assert_eq!((c.top(), c.bottom()), (&[0, 3][..], &[2][..]));
    }

    #[test]
    fn shifts_round_trip() {
        let s = ssymbol_of(&ord("2,1", "1"), Letter::C, None).unwrap();
        let up = s.shift_up().shift_up();
        assert_eq!(up.normalize(), s);
        assert_eq!(up.rows_as_partitions().unwrap(), s.rows_as_partitions().unwrap());
    }

    #[test]
    fn refinement_of_a_mixed_symbol() {
        let r = refine_rows(&[0, 2, 3, 7, 10, 13], &[1, 3, 6, 8, 11], false).unwrap();
        let entries: Vec<Vec<u32>> = r.blocks.iter().map(|b| b.entries.clone()).collect();
        assert_eq!(entries, vec![vec![0, 1, 2], vec![3, 3], vec![6, 7, 8], vec![10, 11], vec![13]]);
        let tops: Vec<Vec<u32>> = r.blocks.iter().map(|b| b.top.clone()).collect();
        assert_eq!(tops, vec![vec![0, 2], vec![3], vec![7], vec![10], vec![13]]);
        let bottoms: Vec<Vec<u32>> = r.blocks.iter().map(|b| b.bottom.clone()).collect();
        assert_eq!(bottoms, vec![vec![1], vec![3], vec![6, 8], vec![11], vec![]]);
    }

    #[test]
    fn shriek_printed_formula() {
        assert_eq!(shriek_rows(&[0, 1], &[1, 2]), (vec![0, 1, 2], vec![2, 3]));
    }

    #[test]
    fn c_flip_of_leading_zero_is_rejected() {
        let s = Symbol::new(SymbolKind::S, Letter::C, vec![0, 3], vec![1], 0).unwrap();
        let err = flips(&s, &[1]).unwrap_err();
        assert!(err.to_string().contains("block 1"));
    }

    #[test]
    fn non_monotonic_refinement_is_rejected() {
        let s = Symbol::new(SymbolKind::S, Letter::B, vec![2, 4], vec![0], 0).unwrap();
        assert!(refinement(&s).is_err());
    }

    #[test]
    fn d_symbols_are_unordered() {
        let a = Symbol::new(SymbolKind::S, Letter::D, vec![0, 2], vec![1, 4], 1).unwrap();
        let b = Symbol::new(SymbolKind::S, Letter::D, vec![1, 4], vec![0, 2], 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.bar(), vec![0, 1, 2, 4]);
    }

    #[test]
    fn twist_examples() {
        assert_eq!(sgn_twist(&ord("2,1", "")), ord("", "2,1"));
        assert_eq!(sgn_twist(&ord("3", "1")), ord("1", "1,1,1"));
    }
}
