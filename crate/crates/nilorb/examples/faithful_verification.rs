//! The faithful pair of every orbit of a classical dual group, checked by brute force:
//! the Sommers image of the pair is the Achar dual, and every representation with the
//! given Springer support meets the sign-twisted family.
//!
//! Run with `cargo run --release --example faithful_verification [RANK]`.

use nilorb::faithful::{verify_all, FamilyTwist};
use nilorb::Letter;

fn main() -> nilorb::Result<()> {
    let rank: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for x in [Letter::B, Letter::C, Letter::D] {
        let reports = verify_all(x, rank, rank, FamilyTwist::SignTwisted)?;
        let passed = reports.iter().filter(|r| r.passed()).count();
        println!("type {x}{rank}: {passed}/{} dual orbits faithful", reports.len());
        for r in reports.iter().take(3) {
            let w = &r.witnesses[0];
            println!(
                "  {}: J = {}, O(φ) = {}, e.g. {} ⊠ {} ⊂ {}|_J",
                r.pair.lambda, r.pair.shape, r.pair.orbit, w.f1, w.f2, w.e
            );
        }
        let control = verify_all(x, rank, rank, FamilyTwist::Untwisted)?;
        let failing = control.iter().filter(|r| !r.condition_ii).count();
        println!("  without the sign twist, {failing} orbits fail");
    }
    Ok(())
}
