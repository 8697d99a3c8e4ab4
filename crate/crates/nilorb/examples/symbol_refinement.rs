//! Refinements and flips of a monotonic symbol: the blocks of the interleaved sequence and
//! every symbol of the same similarity class.
//!
//! Run with `cargo run --example symbol_refinement`.

use nilorb::symbols::{enumerate_class, flips, refinement, Symbol, SymbolKind};
use nilorb::springer::{springer_rep, WeylIrrep};
use nilorb::{DecoratedPartition, Letter};

fn main() -> nilorb::Result<()> {
    let sym = Symbol::new(SymbolKind::A, Letter::B, vec![0, 2, 3, 7, 10, 13], vec![1, 3, 6, 8, 11], 0)?;
    println!("Λ = {sym}");
    println!("Λ̄ = {:?}", sym.bar());
    for (i, b) in refinement(&sym)?.blocks.iter().enumerate() {
        println!("  I_{} = {:?} ({:?}): A = {:?}, B = {:?}", i + 1, b.entries, b.kind, b.top, b.bottom);
    }
    println!("flip block 4: {}", flips(&sym, &[4])?);

    // The similarity class of the s-symbol of E(λ, 1) lists all representations with the
    // same Springer support.
    let lambda: DecoratedPartition = "3,3,1".parse()?;
    let e = springer_rep(&lambda, Letter::B)?;
    let s = e.ssymbol(Letter::B, Some(4))?;
    println!("\nclass of Λ(E({lambda}, 1)) = {s}:");
    for member in enumerate_class(&s, 4)? {
        let label = member.to_label()?;
        println!("  {member}  ↦  {}", WeylIrrep::new(Letter::B, label)?);
    }
    Ok(())
}
