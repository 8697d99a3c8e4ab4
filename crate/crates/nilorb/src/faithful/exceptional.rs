//! Recorded faithful pairs for exceptional Lie algebras.
//!
//! For an exceptional dual orbit the pair `(Δ, φ(E(O∨, 1)))` works except for a short
//! list of orbits, whose pairs are shipped as data.  The data file is plain text with a
//! version line and a SHA-256 checksum over its record lines, verified at load time.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// The shipped table.
pub const BUILTIN_TABLE: &str = include_str!("../../data/exceptional_tables.txt");

/// Table format version understood by this crate.
pub const TABLE_VERSION: u32 = 1;

/// A simple exceptional Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExceptionalGroup {
    /// `G_2`.
    G2,
    /// `F_4`.
    F4,
    /// `E_6`.
    E6,
    /// `E_7`.
    E7,
    /// `E_8`.
    E8,
}

impl ExceptionalGroup {
    /// All exceptional groups.
    pub const ALL: [ExceptionalGroup; 5] =
        [ExceptionalGroup::G2, ExceptionalGroup::F4, ExceptionalGroup::E6, ExceptionalGroup::E7, ExceptionalGroup::E8];

    /// The rank.
    pub fn rank(self) -> usize {
        match self {
            ExceptionalGroup::G2 => 2,
            ExceptionalGroup::F4 => 4,
            ExceptionalGroup::E6 => 6,
            ExceptionalGroup::E7 => 7,
            ExceptionalGroup::E8 => 8,
        }
    }

    /// Name such as `F4`.
    pub fn name(self) -> &'static str {
        match self {
            ExceptionalGroup::G2 => "G2",
            ExceptionalGroup::F4 => "F4",
            ExceptionalGroup::E6 => "E6",
            ExceptionalGroup::E7 => "E7",
            ExceptionalGroup::E8 => "E8",
        }
    }
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionalGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('_', "");
        ExceptionalGroup::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(&t))
            .ok_or_else(|| Error::Parse(format!("unknown exceptional group `{s}` (expected G2, F4, E6, E7 or E8)")))
    }
}

/// One row of the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalEntry {
    /// The group.
    pub group: ExceptionalGroup,
    /// Bala–Carter label of the dual orbit.
    pub dual_orbit_label: String,
    /// Indices of the nodes of the extended Dynkin diagram lying in `J`.
    pub marked_nodes: Vec<usize>,
    /// Type of the pseudo-Levi subalgebra `J`.
    pub factor_type_label: String,
    /// The orbit of `φ`, one component per simple factor of `J`.
    pub family_orbit_label: String,
}

impl ExceptionalEntry {
    /// The node set as a bit string over `α_0, …, α_n`.
    pub fn node_mask(&self) -> String {
        (0..=self.group.rank()).map(|i| if self.marked_nodes.contains(&i) { '1' } else { '0' }).collect()
    }

    /// The record line of the data file.
    pub fn record(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.group,
            self.dual_orbit_label,
            self.node_mask(),
            self.factor_type_label,
            self.family_orbit_label
        )
    }
}

impl fmt::Display for ExceptionalEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.marked_nodes.iter().map(|i| format!("α{i}")).collect();
        write!(
            f,
            "{} {}: J = {{{}}} ({}), O(φ) = {}",
            self.group,
            self.dual_orbit_label,
            nodes.join(","),
            self.factor_type_label,
            self.family_orbit_label
        )
    }
}

/// Result of a lookup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExceptionalPair {
    /// The orbit is listed; use the recorded pair.
    Table(ExceptionalEntry),
    /// The orbit is not listed; `(Δ, φ(E(O∨, 1)))` is a faithful pair.
    UseDefault,
}

impl fmt::Display for ExceptionalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalPair::Table(e) => e.fmt(f),
            ExceptionalPair::UseDefault => f.write_str("use-default: (Δ, φ(E(O∨,1)))"),
        }
    }
}

/// A parsed and checksum-verified table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalTable {
    /// Format version from the file.
    pub version: u32,
    /// SHA-256 of the record lines.
    pub checksum: String,
    /// The rows, in file order.
    pub entries: Vec<ExceptionalEntry>,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

impl ExceptionalTable {
    /// Parses table text and verifies its version and checksum.
    pub fn parse(text: &str) -> Result<ExceptionalTable> {
        let mut version = None;
        let mut checksum = None;
        let mut hasher = Sha256::new();
        let mut entries = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line_no = no + 1;
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(v) = line.strip_prefix("version ") {
                version = Some(v.trim().parse::<u32>().map_err(|e| Error::Data(format!("line {line_no}: bad version: {e}")))?);
                continue;
            }
            if let Some(s) = line.strip_prefix("sha256 ") {
                checksum = Some(s.trim().to_ascii_lowercase());
                continue;
            }
            hasher.update(line.as_bytes());
            hasher.update(b"\n");
            entries.push(parse_record(line).map_err(|e| Error::Data(format!("line {line_no}: {e}")))?);
        }
        let version = version.ok_or_else(|| Error::Data("missing version line".into()))?;
        if version != TABLE_VERSION {
            return Err(Error::Data(format!("table version {version} is not supported (expected {TABLE_VERSION})")));
        }
        let checksum = checksum.ok_or_else(|| Error::Data("missing sha256 line".into()))?;
        let actual = hex(&hasher.finalize());
        if actual != checksum {
            return Err(Error::Data(format!("checksum mismatch: file says {checksum}, records hash to {actual}")));
        }
        Ok(ExceptionalTable { version, checksum, entries })
    }

    /// Reads and verifies a table file.
    pub fn load(path: &Path) -> Result<ExceptionalTable> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Data(format!("cannot read {}: {e}", path.display())))?;
        ExceptionalTable::parse(&text)
    }

    /// The shipped table, parsed once.
    pub fn builtin() -> &'static ExceptionalTable {
        static TABLE: OnceLock<ExceptionalTable> = OnceLock::new();
        TABLE.get_or_init(|| ExceptionalTable::parse(BUILTIN_TABLE).expect("the shipped exceptional table is valid"))
    }

    /// Rows for one group.
    pub fn rows(&self, group: ExceptionalGroup) -> Vec<&ExceptionalEntry> {
        self.entries.iter().filter(|e| e.group == group).collect()
    }

    /// Looks up a dual orbit given by its Bala–Carter label.
    ///
    /// Well-formed labels that are not listed give [`ExceptionalPair::UseDefault`]; so does
    /// every orbit of `G_2` and `E_6`.  Malformed labels are rejected.
    pub fn lookup(&self, group: ExceptionalGroup, label: &str) -> Result<ExceptionalPair> {
        let label = label.trim();
        if !is_bala_carter_label(label, group) {
            let listed: Vec<&str> = self.rows(group).iter().map(|e| e.dual_orbit_label.as_str()).collect();
            return Err(Error::Validation(format!(
                "`{label}` is not a Bala–Carter label for {group}; labels are sums such as `A_2`, `2A_1`, `E_6(a_3)+A_1` \
                 or `0`; orbits with recorded pairs for {group}: {}",
                if listed.is_empty() { "none".to_string() } else { listed.join(", ") }
            )));
        }
        Ok(self
            .entries
            .iter()
            .find(|e| e.group == group && e.dual_orbit_label == label)
            .map_or(ExceptionalPair::UseDefault, |e| ExceptionalPair::Table(e.clone())))
    }
}

/// Looks up a dual orbit in the shipped table.
pub fn exceptional_lookup(group: ExceptionalGroup, label: &str) -> Result<ExceptionalPair> {
    ExceptionalTable::builtin().lookup(group, label)
}

fn parse_record(line: &str) -> Result<ExceptionalEntry> {
    let fields: Vec<&str> = line.split('\t').collect();
    let [group, label, mask, factor, orbit] = fields.as_slice() else {
        return Err(Error::Data(format!("expected 5 tab-separated fields, found {}", fields.len())));
    };
    let group: ExceptionalGroup = group.parse()?;
    if mask.len() != group.rank() + 1 || !mask.chars().all(|c| c == '0' || c == '1') {
        return Err(Error::Data(format!("node mask `{mask}` must be {} binary digits", group.rank() + 1)));
    }
    if !is_bala_carter_label(label, group) {
        return Err(Error::Data(format!("`{label}` is not a Bala–Carter label")));
    }
    Ok(ExceptionalEntry {
        group,
        dual_orbit_label: label.to_string(),
        marked_nodes: mask.char_indices().filter(|&(_, c)| c == '1').map(|(i, _)| i).collect(),
        factor_type_label: factor.to_string(),
        family_orbit_label: orbit.to_string(),
    })
}

/// Whether `label` is a syntactically valid Bala–Carter label whose components fit in a
/// group of the given rank: `0`, or a `+`-separated sum of components `[m]X_r[(a_i)|(b_i)]`
/// with an optional tilde and primes, such as `2A_1`, `Ã_1`, `(3A_1)''` or `E_7(a_5)`.
pub fn is_bala_carter_label(label: &str, group: ExceptionalGroup) -> bool {
    if label == "0" {
        return true;
    }
    let mut total = 0usize;
    for comp in label.split('+') {
        match component_rank(comp) {
            Some(r) => total += r,
            None => return false,
        }
    }
    total <= group.rank()
}

fn component_rank(comp: &str) -> Option<usize> {
    let mut s = comp.trim();
    s = s.trim_end_matches('\'');
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        s = inner;
    }
    let digits: String = s.chars().take_while(|c| c.is_ascii_digit()).collect();
    let count: usize = if digits.is_empty() { 1 } else { digits.parse().ok()? };
    s = &s[digits.len()..];
    let s = s.strip_prefix('~').unwrap_or(s);
    let mut chars = s.chars();
    let letter = chars.next()?;
    let rest = chars.as_str();
    let rest = rest.strip_prefix('\u{303}').unwrap_or(rest);
    if !matches!(letter, 'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' | 'Ã') {
        return None;
    }
    let rest = rest.strip_prefix('_')?;
    let rank_digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rank: usize = rank_digits.parse().ok()?;
    let tail = &rest[rank_digits.len()..];
    if !tail.is_empty() {
        let inner = tail.strip_prefix('(')?.strip_suffix(')')?;
        let q = inner.strip_prefix("a_").or_else(|| inner.strip_prefix("b_"))?;
        let i: usize = q.parse().ok()?;
        if i == 0 || i >= rank.max(2) {
            return None;
        }
    }
    let valid = match letter {
        'A' | 'Ã' => rank >= 1,
        'B' => rank >= 2,
        'C' => rank >= 3,
        'D' => rank >= 4,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => false,
    };
    (valid && count >= 1).then_some(count * rank)
}
