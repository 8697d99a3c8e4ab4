//! The Springer correspondence through Lusztig's symbols: the representation attached to
//! an orbit, its symbols, its family and the orbit recovered from a representation.
//!
//! Run with `cargo run --example springer_symbols`.

use nilorb::springer::{family_members, family_of, springer_rep, springer_support, Side, WeylIrrep};
use nilorb::{DecoratedPartition, Letter};

fn main() -> nilorb::Result<()> {
    let x = Letter::B;
    let n = 2;
    println!("Springer correspondence for so(5):");
    for orbit in nilorb::partitions::enumerate(nilorb::LieType::new(x, n))? {
        let e = springer_rep(&orbit, x)?;
        println!(
            "  {:<10} ↦ E = {:<8} s-symbol {}  a-symbol {}",
            orbit.to_string(),
            e.to_string(),
            e.ssymbol(x, None)?,
            e.asymbol(None)?
        );
    }

    println!("\nfamilies of W(B2) and the orbits supporting each member:");
    let mut seen = Vec::new();
    for e in WeylIrrep::all(x, n) {
        let f = family_of(&e)?;
        if seen.contains(&f) {
            continue;
        }
        let members = family_members(&f)?;
        let described: Vec<String> = members
            .iter()
            .map(|m| Ok(format!("{m} → O = {}", springer_support(m, Side::Group)?)))
            .collect::<nilorb::Result<_>>()?;
        println!("  {}", described.join(", "));
        seen.push(f);
    }

    // A very even orbit of so(8) splits into two orbits with different representations.
    for kappa in [0, 1] {
        let o = DecoratedPartition::new("2,2,2,2".parse()?, kappa);
        println!("so(8): E({o}, 1) = {}", springer_rep(&o, Letter::D)?);
    }
    Ok(())
}
