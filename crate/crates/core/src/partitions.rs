//! Partitions, hook lengths, and the `n`-flush encoding of `n`-cores.
//!
//! A partition is determined by its first-column hook lengths
//! `H = {lambda_i + a - i}`. For a modulus `n`, the vector `S^n(H)` records,
//! per residue class `i`, either `i` (class empty) or `n` plus the largest
//! hook in the class. `lambda` is an `n`-core exactly when `H` is `n`-flush:
//! no hook is a multiple of `n` and every class is an initial run
//! `i, i + n, i + 2n, ...`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive parts. Cells are addressed
/// `(row, col)`, 1-based, row 1 on top.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook length `1 + arm + leg` of the cell `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> Result<u32> {
        if row == 0 || col == 0 || row > self.len() || col > self.parts[row - 1] as usize {
            return Err(Error::CellOutOfShape { row, col });
        }
        let arm = self.parts[row - 1] as usize - col;
        let leg = self.parts[row..]
            .iter()
            .take_while(|&&p| p as usize >= col)
            .count();
        Ok((1 + arm + leg) as u32)
    }

    /// Hook lengths of row `row` (1-based), left to right.
    pub fn row_hooks(&self, row: usize) -> Vec<u32> {
        let conj = self.conjugate();
        let Some(&len) = self.parts.get(row.wrapping_sub(1)) else {
            return Vec::new();
        };
        (1..=len as usize)
            .map(|col| {
                let arm = len as usize - col;
                let leg = conj.parts[col - 1] as usize - row;
                (1 + arm + leg) as u32
            })
            .collect()
    }

    /// Every hook length, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len as usize {
                let arm = len as usize - j - 1;
                let leg = conj.parts[j] as usize - i - 1;
                out.push((1 + arm + leg) as u32);
            }
        }
        out
    }

    pub fn first_column_hooks(&self) -> HookSet {
        let a = self.parts.len() as i64;
        let values = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i64::from(p) + a - 1 - i as i64)
            .collect();
        HookSet { values }
    }

    /// The unique partition whose first-column hooks are `hooks`.
    pub fn from_hooks(hooks: &HookSet) -> Partition {
        let a = hooks.values.len() as i64;
        let parts = hooks
            .values
            .iter()
            .enumerate()
            .map(|(i, &h)| (h - (a - 1 - i as i64)) as u32)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, `-` (or nothing) for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// A finite set of positive integers, held in decreasing order
/// `h_1 > h_2 > ... > h_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HookSet {
    values: Vec<i64>,
}

impl HookSet {
    /// Builds a hook set from distinct positive values in any order.
    pub fn new(values: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut values: Vec<i64> = values.into_iter().collect();
        if values.iter().any(|&h| h <= 0) {
            return Err(Error::InvalidHookSet("hooks must be positive".into()));
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHookSet("hooks must be distinct".into()));
        }
        Ok(HookSet { values })
    }

    /// Values, largest first.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `h_1`, the largest hook.
    pub fn largest(&self) -> Option<i64> {
        self.values.first().copied()
    }

    pub fn contains(&self, h: i64) -> bool {
        self.values.binary_search_by(|v| h.cmp(v)).is_ok()
    }

    pub fn s_vector(&self, n: u32) -> SVector {
        assert!(n >= 1, "modulus must be positive");
        let modulus = i64::from(n);
        let mut entries: Vec<i64> = (0..modulus).collect();
        // values are decreasing, so the first hit per class is its maximum
        let mut seen = vec![false; n as usize];
        for &h in &self.values {
            let i = h.rem_euclid(modulus) as usize;
            if !seen[i] {
                seen[i] = true;
                entries[i] = h + modulus;
            }
        }
        SVector {
            modulus: n,
            entries,
        }
    }

    /// No hook is divisible by `n`, and `h - n` is negative or a hook
    /// whenever `h` is.
    pub fn is_flush(&self, n: u32) -> bool {
        assert!(n >= 1, "modulus must be positive");
        let modulus = i64::from(n);
        self.values
            .iter()
            .all(|&h| h % modulus != 0 && (h < modulus || self.contains(h - modulus)))
    }
}

impl Serialize for HookSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut v = self.values.clone();
        v.reverse();
        v.serialize(serializer)
    }
}

/// `S^n(H)`: entry `i` is `i` when no hook is congruent to `i` mod `n`,
/// otherwise `n` plus the largest such hook.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SVector {
    modulus: u32,
    entries: Vec<i64>,
}

impl SVector {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `s_0, ..., s_{n-1}` in residue order.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn max(&self) -> i64 {
        *self.entries.iter().max().expect("modulus is positive")
    }

    /// The entries as an ascending set.
    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }

    pub fn contains(&self, x: i64) -> bool {
        let i = x.rem_euclid(i64::from(self.modulus)) as usize;
        self.entries[i] == x
    }
}

impl Serialize for SVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.sorted().serialize(serializer)
    }
}

/// `n`-core test through the flush criterion on first-column hooks.
pub fn is_n_core(lambda: &Partition, n: u32) -> bool {
    lambda.first_column_hooks().is_flush(n)
}

/// `n`-core test by scanning every hook length. Reference implementation.
pub fn is_n_core_by_hooks(lambda: &Partition, n: u32) -> bool {
    offending_hook(lambda, n).is_none()
}

/// Some hook length of `lambda` divisible by `n`, if one exists.
pub fn offending_hook(lambda: &Partition, n: u32) -> Option<u32> {
    lambda.hooks().into_iter().find(|h| h % n == 0)
}

pub fn is_mn_core(lambda: &Partition, m: u32, n: u32) -> bool {
    is_n_core(lambda, m) && is_n_core(lambda, n)
}

/// Fails with [`Error::NotCore`] naming a hook divisible by `m` or `n`.
pub(crate) fn require_mn_core(lambda: &Partition, m: u32, n: u32) -> Result<()> {
    for modulus in [m, n] {
        if !is_n_core(lambda, modulus) {
            let hook = offending_hook(lambda, modulus)
                .expect("a partition without n-flush hooks has a hook divisible by n");
            return Err(Error::NotCore { modulus, hook });
        }
    }
    Ok(())
}

/// Checks `S(H_lambda) = h_1 + n - S(H_{lambda^T})` as sets, for a nonempty
/// partition whose first-column hooks are `n`-flush.
pub fn sh_complement_check(lambda: &Partition, n: u32) -> Result<bool> {
    let hooks = lambda.first_column_hooks();
    if !hooks.is_flush(n) {
        return Err(Error::NotFlush { n });
    }
    let h1 = hooks.largest().ok_or(Error::EmptyPartition)?;
    let conj = lambda.conjugate().first_column_hooks();
    if !conj.is_flush(n) {
        return Ok(false);
    }
    let lhs = hooks.s_vector(n).sorted();
    let mut rhs: Vec<i64> = conj
        .s_vector(n)
        .entries()
        .iter()
        .map(|s| h1 + i64::from(n) - s)
        .collect();
    rhs.sort_unstable();
    Ok(lhs == rhs)
}
