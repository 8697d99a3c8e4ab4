//! Wavefront sets of Weyl group representations, in closed form and recomputed from
//! their restrictions to maximal pseudo-Levi subgroups; and the wavefront set of an
//! Iwahori-spherical representation with real infinitesimal character.
//!
//! Run with `cargo run --example wavefront_sets`.

use nilorb::springer::WeylIrrep;
use nilorb::wavefront::{wf_by_definition, wf_iwahori_real, wf_of_wrep};
use nilorb::Letter;

fn main() -> nilorb::Result<()> {
    let (x, n) = (Letter::C, 3);
    println!("wavefront sets of the representations of W(C3):");
    for e in WeylIrrep::all(x, n) {
        let closed = wf_of_wrep(&e)?;
        let def = wf_by_definition(&e)?;
        assert_eq!(def.maxima, vec![closed.clone()]);
        println!("  {:<10} WF = {:<14} ({} constituents over maximal pseudo-Levis)", e.to_string(), closed.to_string(), def.contributions.len());
    }

    // Steinberg: its Aubert–Zelevinsky dual is the trivial representation, attached to the
    // zero orbit of the dual group.
    let st = wf_iwahori_real(&"1,1,1,1,1,1,1".parse()?, x)?;
    println!("\nSteinberg of Sp(6): canonical unramified WF {}, algebraic WF {}", st.canonical_unramified, st.algebraic);
    let triv = wf_iwahori_real(&"7".parse()?, x)?;
    println!("trivial of Sp(6): canonical unramified WF {}", triv.canonical_unramified);
    Ok(())
}
