//! Pseudo-Levi orbits, their Sommers images and duals, and the Achar dual d_A(·, 1)
//! with Achar's partial order.
//!
//! Run with `cargo run --example marked_orbits`.

use nilorb::duality::{d_a_triv, d_s_marked, le_a, marked_orbits, sbar};
use nilorb::partitions::enumerate;
use nilorb::{Bipartition, Letter, LieType};

fn main() -> nilorb::Result<()> {
    let x = Letter::C;
    let b: Bipartition = "2,2;2".parse()?;
    let m = sbar(&b, x)?;
    println!("sbar({b}) = {m}, Sommers dual {}", d_s_marked(&m, x)?);

    println!("\nmarked orbits of sp(6) (the image of the Sommers map):");
    for m in marked_orbits(x, 3)? {
        println!("  {m:<16}  d_S = {}", d_s_marked(&m, x)?);
    }

    println!("\nAchar duals of the orbits of so(7):");
    let duals: Vec<_> = enumerate(LieType::new(x.dual(), 3))?
        .into_iter()
        .map(|o| Ok((o.partition.clone(), d_a_triv(&o.partition, x)?)))
        .collect::<nilorb::Result<_>>()?;
    for (l, d) in &duals {
        println!("  d_A({l}, 1) = {d}");
    }
    // The Achar dual is order-reversing and injective.
    for (l1, d1) in &duals {
        for (l2, d2) in &duals {
            assert_eq!(l2.dominates(l1), le_a(d2, d1, x)?);
        }
    }
    println!("λ ≤ λ' ⟺ d_A(λ', 1) ≤_A d_A(λ, 1) on all {} orbits", duals.len());
    Ok(())
}
