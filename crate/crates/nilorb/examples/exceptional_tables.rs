//! The recorded faithful pairs of the exceptional groups that differ from the default
//! choice (Δ, φ(E(O∨, 1))).
//!
//! Run with `cargo run --example exceptional_tables`.

use nilorb::faithful::exceptional::{exceptional_lookup, ExceptionalGroup, ExceptionalTable};

fn main() -> nilorb::Result<()> {
    let table = ExceptionalTable::builtin();
    println!("table version {}, sha256 {}", table.version, table.checksum);
    for g in ExceptionalGroup::ALL {
        let rows = table.rows(g);
        println!("{g}: {} recorded orbits", rows.len());
        for row in rows {
            println!("  {row}");
        }
    }
    for (g, label) in [(ExceptionalGroup::E8, "D_7(a_1)"), (ExceptionalGroup::E6, "D_4(a_1)"), (ExceptionalGroup::F4, "A_1")] {
        println!("lookup {g} {label}: {}", exceptional_lookup(g, label)?);
    }
    Ok(())
}
