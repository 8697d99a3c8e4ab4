//! Command-line front end.
//!
//! Every verb maps onto one library operation.  Results are printed as plain text or,
//! with `--format json`, as one JSON record per line carrying a `kind` field.  Exit codes:
//! `0` success, `1` a faithfulness check failed, `2` invalid input (or a rank bound was
//! exceeded), `64` the command line or an argument could not be parsed, `70` an internal
//! consistency check failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::duality::{d_a_triv, d_s, le_a, sbar, MarkedOrbit};
use crate::error::{Error, Result};
use crate::faithful::exceptional::{ExceptionalGroup, ExceptionalPair, ExceptionalTable};
use crate::faithful::{faithful_pair, verify_all, verify_faithful_with, FaithfulReport, FamilyTwist, DEFAULT_VERIFY_MAX_RANK};
use crate::partitions::{
    collapse, dual, enumerate, is_special, markable_parts, reduction, Bipartition, DecoratedPartition, Letter,
    LieType,
};
use crate::springer::{
    family_members, family_of, j_induce, restriction_multiplicity, special_rep, springer_rep, springer_support,
    PseudoLeviShape, Side, WeylIrrep,
};
use crate::wavefront::{wf_by_definition, wf_iwahori_real, wf_lower_bound_holds, wf_of_wrep};

/// Environment variable holding the largest rank `verify-faithful` accepts.
pub const MAX_RANK_ENV: &str = "NILORB_VERIFY_MAX_RANK";

/// Exit status for a failed faithfulness check.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit status for invalid input.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit status for unparsable input.
pub const EXIT_PARSE: i32 = 64;
/// Exit status for internal errors.
pub const EXIT_INTERNAL: i32 = 70;

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Text,
    /// One JSON record per result.
    Json,
}

/// Which side a Springer support is read on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    /// Orbits of the group's own Lie algebra.
    Group,
    /// Orbits of the Langlands dual Lie algebra.
    Dual,
}

#[derive(Debug, Parser)]
#[command(name = "nilorb", version, about = "Nilpotent orbits, dualities, Springer symbols and wavefront sets for classical types")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for every randomised choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Read the exceptional table from this file instead of the built-in copy.
    #[arg(long, global = true, value_name = "PATH")]
    table_path: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Classical type: B, C or D.
    #[arg(short = 't', long = "type", value_name = "B|C|D")]
    letter: String,
}

impl TypeArg {
    fn letter(&self) -> Result<Letter> {
        self.letter.parse()
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The X-collapse of a partition.
    Collapse {
        #[command(flatten)]
        t: TypeArg,
        /// Partition, e.g. `3,2,2,1` or `3,2^2,1`.
        lambda: String,
    },
    /// The duality d from type-X orbits to type-X∨ orbits.
    Dual {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X partition.
        lambda: String,
    },
    /// Whether a type-X partition is special.
    Special {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X partition.
        lambda: String,
    },
    /// The markable parts of a type-X partition.
    Markable {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X partition.
        lambda: String,
    },
    /// The reduction r_λ(μ) of a marking.
    Reduce {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X partition.
        lambda: String,
        /// The marking.
        mu: String,
    },
    /// E(λ, 1), or with --support the Springer support of a representation.
    Springer {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X partition `λ[:κ]`, or a representation label `α;β` with --support.
        arg: String,
        /// Treat the argument as a representation of W(X) and print its support.
        #[arg(long)]
        support: bool,
        /// Side on which the support is read.
        #[arg(long, value_enum, default_value_t = SideArg::Group)]
        side: SideArg,
    },
    /// The family of a representation of W(X).
    Family {
        #[command(flatten)]
        t: TypeArg,
        /// Representation label `α;β` (type D: `α;β[:κ]`).
        label: String,
    },
    /// Truncated induction from a maximal pseudo-Levi subgroup.
    Jinduce {
        #[command(flatten)]
        t: TypeArg,
        /// Rank of the first factor of the shape.
        #[arg(short = 'k', long)]
        k: usize,
        /// Special representation of the first factor.
        f1: String,
        /// Special representation of the second factor.
        f2: String,
    },
    /// Multiplicity of F1 ⊠ F2 in the restriction of E.
    RestrictMult {
        #[command(flatten)]
        t: TypeArg,
        /// Rank of the first factor of the shape.
        #[arg(short = 'k', long)]
        k: usize,
        /// Representation of W(X).
        e: String,
        /// Representation of the first factor.
        f1: String,
        /// Representation of the second factor.
        f2: String,
    },
    /// The Sommers map on a pseudo-Levi orbit `μ;ν`.
    Sbar {
        #[command(flatten)]
        t: TypeArg,
        /// Pseudo-Levi orbit `μ;ν`.
        orbit: String,
    },
    /// The Sommers dual of a pseudo-Levi orbit `μ;ν`.
    Ds {
        #[command(flatten)]
        t: TypeArg,
        /// Pseudo-Levi orbit `μ;ν`.
        orbit: String,
    },
    /// The Achar dual d_A(λ, 1) of a type-X∨ orbit.
    Da {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X∨ partition.
        lambda: String,
    },
    /// Achar's order on marked orbits `λ | r`.
    Lea {
        #[command(flatten)]
        t: TypeArg,
        /// Left marked orbit.
        a: String,
        /// Right marked orbit.
        b: String,
    },
    /// Wavefront set of an Iwahori-spherical representation with real infinitesimal character.
    Wf {
        #[command(flatten)]
        t: TypeArg,
        /// The dual orbit attached to the Aubert–Zelevinsky dual.
        #[arg(long, value_name = "λ")]
        az_dual_orbit: Option<String>,
        /// Check the lower bound d_A(h, 1) ≤_A CANDIDATE for this dual orbit h.
        #[arg(long, value_name = "h", requires = "candidate")]
        lower_bound: Option<String>,
        /// Candidate marked orbit `λ | r` for --lower-bound.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Wavefront set of a Weyl group representation.
    WfWrep {
        #[command(flatten)]
        t: TypeArg,
        /// Representation label.
        label: String,
        /// Also recompute it from the definition.
        #[arg(long)]
        by_definition: bool,
    },
    /// The standard faithful pair of a type-X∨ orbit.
    Faithful {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X∨ partition `λ[:κ]`.
        lambda: String,
    },
    /// Check both faithfulness conditions.
    VerifyFaithful {
        #[command(flatten)]
        t: TypeArg,
        /// A type-X∨ partition `λ[:κ]`; omit with --all.
        lambda: Option<String>,
        /// Check every orbit of rank --rank.
        #[arg(long, requires = "rank")]
        all: bool,
        /// Rank for --all.
        #[arg(short = 'n', long)]
        rank: Option<usize>,
        /// Use φ instead of φ ⊗ sgn (negative control).
        #[arg(long)]
        untwisted: bool,
        /// Largest accepted rank (default: $NILORB_VERIFY_MAX_RANK or 6).
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Recorded faithful pairs for exceptional groups.
    Exceptional {
        /// G2, F4, E6, E7 or E8.
        group: String,
        /// Bala–Carter label of the dual orbit; omit to list the group's table.
        label: Option<String>,
    },
    /// List the nilpotent orbits of a classical type.
    Enumerate {
        #[command(flatten)]
        t: TypeArg,
        /// Rank.
        #[arg(short = 'n', long)]
        rank: usize,
        /// Print a random sample of this many orbits (chosen with --seed).
        #[arg(long)]
        sample: Option<usize>,
    },
}

struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn emit(&mut self, text: impl std::fmt::Display, record: Value) -> Result<()> {
        let res = match self.format {
            Format::Text => writeln!(self.w, "{text}"),
            Format::Json => writeln!(self.w, "{record}"),
        };
        res.map_err(|e| Error::Internal(format!("cannot write output: {e}")))
    }
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T> {
    s.parse()
}

fn rep(letter: Letter, s: &str) -> Result<WeylIrrep> {
    WeylIrrep::parse(letter, s)
}

fn factor_rep(shape: &PseudoLeviShape, which: usize, s: &str) -> Result<WeylIrrep> {
    let (t1, t2) = shape.factors();
    let t = if which == 1 { t1 } else { t2 };
    let r = rep(t.letter, s)?;
    if r.rank() != t.rank {
        return Err(Error::Validation(format!("{s} is not a representation of W({t})")));
    }
    Ok(r)
}

/// Text rendering of a marked orbit, naming the zero orbit in words.
fn marked_text(m: &MarkedOrbit) -> String {
    if m.orbit.parts().iter().all(|&p| p == 1) {
        let rest = m.to_string();
        let tail = rest.split_once(" | ").map_or("", |(_, t)| t);
        format!("zero orbit | {tail}")
    } else {
        m.to_string()
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::Internal(_) => EXIT_INTERNAL,
        Error::Validation(_) | Error::BoundExceeded { .. } | Error::Ambiguous(_) | Error::Data(_) => EXIT_VALIDATION,
    }
}

fn max_rank_from_env() -> Result<usize> {
    match std::env::var(MAX_RANK_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_RANK_ENV}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_VERIFY_MAX_RANK),
    }
}

fn report_text(r: &FaithfulReport) -> String {
    let mark = |b: bool| if b { "pass" } else { "FAIL" };
    let mut s = format!(
        "{}: condition (i) {} [{} vs {}], condition (ii) {} ({} representations, {} witnessed)",
        r.pair.lambda,
        mark(r.condition_i),
        r.sommers_image,
        r.achar_dual,
        mark(r.condition_ii),
        r.witnesses.len() + r.failures.len(),
        r.witnesses.len()
    );
    for e in &r.failures {
        s.push_str(&format!("\n  no member of the family meets {e} on {}", r.pair.shape));
    }
    s
}

fn report_json(r: &FaithfulReport) -> Value {
    json!({
        "kind": "faithful_report",
        "lambda": r.pair.lambda.to_string(),
        "letter": r.pair.letter,
        "shape": r.pair.shape.to_string(),
        "orbit": r.pair.orbit.to_string(),
        "provenance": r.pair.provenance,
        "condition_i": r.condition_i,
        "condition_ii": r.condition_ii,
        "sommers_image": r.sommers_image.to_string(),
        "achar_dual": r.achar_dual.to_string(),
        "witnesses": r.witnesses.iter().map(|w| json!({
            "e": w.e.to_string(), "f1": w.f1.to_string(), "f2": w.f2.to_string(), "multiplicity": w.multiplicity,
        })).collect::<Vec<_>>(),
        "failures": r.failures.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
    })
}

fn exceptional_json(e: &ExceptionalPair, group: ExceptionalGroup, label: &str) -> Value {
    match e {
        ExceptionalPair::Table(row) => json!({ "kind": "exceptional_entry", "entry": row }),
        ExceptionalPair::UseDefault => json!({ "kind": "exceptional_default", "group": group, "dual_orbit_label": label }),
    }
}

fn execute(cli: Cli, out: &mut Out<'_>) -> Result<i32> {
    match cli.command {
        Command::Collapse { t, lambda } => {
            let r = collapse(&parse(&lambda)?, t.letter()?)?;
            out.emit(&r, json!({ "kind": "partition", "value": r }))?;
        }
        Command::Dual { t, lambda } => {
            let r = dual(&parse(&lambda)?, t.letter()?)?;
            out.emit(&r, json!({ "kind": "partition", "value": r }))?;
        }
        Command::Special { t, lambda } => {
            let r = is_special(&parse(&lambda)?, t.letter()?)?;
            out.emit(r, json!({ "kind": "boolean", "value": r }))?;
        }
        Command::Markable { t, lambda } => {
            let r = markable_parts(&parse(&lambda)?, t.letter()?)?;
            let text = if r.is_empty() { "∅".to_string() } else { r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",") };
            out.emit(text, json!({ "kind": "markable_parts", "value": r }))?;
        }
        Command::Reduce { t, lambda, mu } => {
            let r = reduction(&parse(&lambda)?, &parse(&mu)?, t.letter()?)?;
            out.emit(&r, json!({ "kind": "partition", "value": r }))?;
        }
        Command::Springer { t, arg, support, side } => {
            let x = t.letter()?;
            if support {
                let e = rep(x, &arg)?;
                let side = match side {
                    SideArg::Group => Side::Group,
                    SideArg::Dual => Side::Dual,
                };
                let r = springer_support(&e, side)?;
                out.emit(&r, json!({ "kind": "decorated_partition", "value": r }))?;
            } else {
                let lambda: DecoratedPartition = parse(&arg)?;
                let e = springer_rep(&lambda, x)?;
                let sym = e.asymbol(None)?;
                out.emit(
                    format!("{e}\ta-symbol {sym}"),
                    json!({ "kind": "weyl_irrep", "value": e, "asymbol": sym.to_string() }),
                )?;
            }
        }
        Command::Family { t, label } => {
            let e = rep(t.letter()?, &label)?;
            let f = family_of(&e)?;
            let special = special_rep(&f)?;
            let members = family_members(&f)?;
            let names: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            out.emit(
                format!("special {special}; members {}", names.join(", ")),
                json!({ "kind": "family", "special": special, "members": members, "symbol": f.symbol().to_string() }),
            )?;
        }
        Command::Jinduce { t, k, f1, f2 } => {
            let x = t.letter()?;
            let shape = shape_for(x, &f1, &f2, k)?;
            let r = j_induce(&shape, &factor_rep(&shape, 1, &f1)?, &factor_rep(&shape, 2, &f2)?)?;
            out.emit(&r, json!({ "kind": "weyl_irrep", "shape": shape.to_string(), "value": r }))?;
        }
        Command::RestrictMult { t, k, e, f1, f2 } => {
            let x = t.letter()?;
            let e = rep(x, &e)?;
            let shape = PseudoLeviShape::new(x, e.rank(), k)?;
            if shape.k() != k {
                return Err(Error::Validation(format!("k = {k} gives the whole Weyl group; use k = {}", shape.k())));
            }
            let m = restriction_multiplicity(&e, &shape, &factor_rep(&shape, 1, &f1)?, &factor_rep(&shape, 2, &f2)?)?;
            out.emit(m, json!({ "kind": "multiplicity", "shape": shape.to_string(), "value": m }))?;
        }
        Command::Sbar { t, orbit } => {
            let b: Bipartition = parse(&orbit)?;
            let r = sbar(&b, t.letter()?)?;
            out.emit(marked_text(&r), json!({ "kind": "marked_orbit", "value": r }))?;
        }
        Command::Ds { t, orbit } => {
            let b: Bipartition = parse(&orbit)?;
            let r = d_s(&b, t.letter()?)?;
            out.emit(&r, json!({ "kind": "partition", "value": r }))?;
        }
        Command::Da { t, lambda } => {
            let r = d_a_triv(&parse(&lambda)?, t.letter()?)?;
            out.emit(marked_text(&r), json!({ "kind": "marked_orbit", "value": r }))?;
        }
        Command::Lea { t, a, b } => {
            let (a, b): (MarkedOrbit, MarkedOrbit) = (parse(&a)?, parse(&b)?);
            let r = le_a(&a, &b, t.letter()?)?;
            out.emit(r, json!({ "kind": "boolean", "value": r }))?;
        }
        Command::Wf { t, az_dual_orbit, lower_bound, candidate } => {
            let x = t.letter()?;
            match (az_dual_orbit, lower_bound, candidate) {
                (Some(o), None, None) => {
                    let r = wf_iwahori_real(&parse(&o)?, x)?;
                    out.emit(marked_text(&r.canonical_unramified), json!({ "kind": "wavefront", "value": r }))?;
                }
                (None, Some(h), Some(c)) => {
                    let cand: MarkedOrbit = parse(&c)?;
                    let r = wf_lower_bound_holds(&parse(&h)?, &cand, x)?;
                    out.emit(r, json!({ "kind": "boolean", "value": r }))?;
                }
                _ => return Err(Error::Validation("give either --az-dual-orbit or --lower-bound with --candidate".into())),
            }
        }
        Command::WfWrep { t, label, by_definition } => {
            let e = rep(t.letter()?, &label)?;
            let r = wf_of_wrep(&e)?;
            if by_definition {
                let d = wf_by_definition(&e)?;
                let maxima: Vec<String> = d.maxima.iter().map(marked_text).collect();
                out.emit(
                    format!("{}\tby definition: {}", marked_text(&r), maxima.join(", ")),
                    json!({ "kind": "wavefront_wrep", "value": r, "by_definition": d.maxima, "agree": d.maxima == vec![r.clone()] }),
                )?;
            } else {
                out.emit(marked_text(&r), json!({ "kind": "wavefront_wrep", "value": r }))?;
            }
        }
        Command::Faithful { t, lambda } => {
            let p = faithful_pair(&parse(&lambda)?, t.letter()?)?;
            let prov = serde_json::to_value(p.provenance).unwrap_or(Value::Null);
            out.emit(
                format!("J = {}, O(φ) = {}, provenance {}", p.shape, p.orbit, prov.as_str().unwrap_or("?")),
                json!({ "kind": "faithful_pair", "value": p }),
            )?;
        }
        Command::VerifyFaithful { t, lambda, all, rank, untwisted, max_rank } => {
            let x = t.letter()?;
            let bound = match max_rank {
                Some(b) => b,
                None => max_rank_from_env()?,
            };
            let twist = if untwisted { FamilyTwist::Untwisted } else { FamilyTwist::SignTwisted };
            let reports = match (all, lambda) {
                (true, None) => verify_all(x, rank.expect("required by clap"), bound, twist)?,
                (false, Some(l)) => vec![verify_faithful_with(&parse(&l)?, x, bound, twist)?],
                _ => return Err(Error::Validation("give either an orbit or --all -n RANK".into())),
            };
            let mut failed = false;
            for r in &reports {
                failed |= !r.passed();
                out.emit(report_text(r), report_json(r))?;
            }
            if failed {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Exceptional { group, label } => {
            let group: ExceptionalGroup = group.parse()?;
            let owned;
            let table = match &cli.table_path {
                Some(p) => {
                    owned = ExceptionalTable::load(p)?;
                    &owned
                }
                None => ExceptionalTable::builtin(),
            };
            match label {
                Some(l) => {
                    let r = table.lookup(group, &l)?;
                    out.emit(&r, exceptional_json(&r, group, &l))?;
                }
                None => {
                    for row in table.rows(group) {
                        out.emit(row, json!({ "kind": "exceptional_entry", "entry": row }))?;
                    }
                }
            }
        }
        Command::Enumerate { t, rank, sample } => {
            let mut orbits = enumerate(LieType::new(t.letter()?, rank))?;
            if let Some(k) = sample {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                orbits.shuffle(&mut rng);
                orbits.truncate(k);
            }
            for o in &orbits {
                out.emit(o, json!({ "kind": "decorated_partition", "value": o }))?;
            }
        }
    }
    Ok(0)
}

fn shape_for(x: Letter, f1: &str, f2: &str, k: usize) -> Result<PseudoLeviShape> {
    let r1 = rep(x.factor(), f1)?.rank();
    let r2 = rep(x, f2)?.rank();
    if r1 != k {
        return Err(Error::Validation(format!("the first factor {f1} has rank {r1}, expected k = {k}")));
    }
    let shape = PseudoLeviShape::new(x, r1 + r2, k)?;
    if shape.k() != k {
        return Err(Error::Validation(format!("k = {k} does not give a proper factor in type {x}{}", r1 + r2)));
    }
    Ok(shape)
}

/// Runs the command line `args` (including the program name), writing results to `out`
/// and diagnostics to `err`; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => EXIT_PARSE,
            };
            let rendered = e.render();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let format = cli.format;
    let mut o = Out { format, w: out };
    match execute(cli, &mut o) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
