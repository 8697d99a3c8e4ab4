//! Orbits of a classical Lie algebra as partitions: collapses, special orbits and the
//! order-reversing duality between a group and its Langlands dual.
//!
//! Run with `cargo run --example partitions_and_duality`.

use nilorb::partitions::{collapse, dual, enumerate, is_special, markable_parts};
use nilorb::{Letter, LieType, Partition};

fn main() -> nilorb::Result<()> {
    let lambda: Partition = "5,3".parse()?;
    println!("C-collapse of {lambda}: {}", collapse(&lambda, Letter::C)?);

    let lt = LieType::new(Letter::B, 3);
    println!("\nnilpotent orbits of so(7) and their duals in sp(6):");
    for orbit in enumerate(lt)? {
        let p = &orbit.partition;
        let d = dual(p, Letter::B)?;
        println!(
            "  {:<14} special: {:<5}  markable: {:?}  d = {}",
            p.to_string(),
            is_special(p, Letter::B)?,
            markable_parts(p, Letter::B)?,
            d
        );
    }

    // The duality is an involution on special orbits.
    for orbit in enumerate(LieType::new(Letter::C, 3))? {
        let p = &orbit.partition;
        if is_special(p, Letter::C)? {
            assert_eq!(&dual(&dual(p, Letter::C)?, Letter::B)?, p);
        }
    }
    println!("\nd ∘ d = id on the special orbits of sp(6)");
    Ok(())
}
