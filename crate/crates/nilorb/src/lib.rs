//! `nilorb` — combinatorics of nilpotent orbits for the classical types B, C and D.
//!
//! The crate implements, on purely combinatorial data (partitions, bipartitions and
//! symbols):
//!
//! * [`partitions`]: type-X partitions, collapses, the Barbasch–Vogan /
//!   Lusztig–Spaltenstein duality, special orbits and Sommers' reduction of markings;
//! * [`symbols`]: Lusztig's s-symbols and a-symbols, their refinements and flips;
//! * [`springer`]: the Springer correspondence, two-sided families, truncated
//!   induction from pseudo-Levi subgroups and restriction multiplicities;
//! * [`duality`]: the Sommers map on pseudo-Levi orbits, the Sommers dual and the
//!   Achar dual together with Achar's partial order;
//! * [`wavefront`]: the closed-form algebraic wavefront set of an irreducible Weyl
//!   group representation, the definitional computation it agrees with, and the
//!   real-infinitesimal-character Iwahori spherical case;
//! * [`faithful`]: faithful pairs for classical duals, their brute-force verification,
//!   and lookup tables for the exceptional groups;
//! * [`cli`]: the command-line front end used by the `nilorb` binary.

pub mod cli;
pub mod duality;
pub mod error;
pub mod faithful;
pub mod partitions;
pub mod springer;
pub mod symbols;
pub mod wavefront;

pub use error::{Error, Result};
pub use partitions::{
    Bipartition, DecoratedPartition, DecoratedUnorderedBipartition, IrrepLabel, Letter, LieType,
    Partition,
};
