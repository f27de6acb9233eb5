//! Lattice paths in the `m x n` rectangle.
//!
//! A lattice point `(a, b)` has rank `m*b - n*a`. Walking a path from the
//! origin, an `N` step adds `m` to the rank and an `E` step subtracts `n`.
//! For coprime dimensions the `m + n` nodes visited before the final corner
//! have pairwise distinct ranks, so a path is recoverable from its rank set.

use std::collections::HashSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{gcd, Error, Result};

mod psi;

pub use psi::{psi, psi_inverse};

/// Width `m` (number of E steps) and height `n` (number of N steps).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dims {
    m: u32,
    n: u32,
}

impl Dims {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::DegenerateDims { m, n });
        }
        Ok(Dims { m, n })
    }

    /// Dimensions of a free grid, where a zero side is allowed. Only the
    /// target grids of [`psi`] are built this way.
    pub fn grid(m: u32, n: u32) -> Self {
        Dims { m, n }
    }

    pub fn coprime(m: u32, n: u32) -> Result<Self> {
        let dims = Dims::new(m, n)?;
        dims.require_coprime()?;
        Ok(dims)
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_coprime(&self) -> bool {
        gcd(u64::from(self.m), u64::from(self.n)) == 1
    }

    pub fn require_coprime(&self) -> Result<()> {
        if self.is_coprime() {
            Ok(())
        } else {
            Err(Error::NonCoprime {
                m: self.m,
                n: self.n,
            })
        }
    }

    pub fn transposed(&self) -> Dims {
        Dims {
            m: self.n,
            n: self.m,
        }
    }

    /// Total number of steps, `m + n`.
    pub fn len(&self) -> usize {
        (self.m + self.n) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rank of the lattice point `(a, b)`.
    #[inline]
    pub fn rank(&self, a: i64, b: i64) -> i64 {
        i64::from(self.m) * b - i64::from(self.n) * a
    }

    /// Rank change of a single step.
    #[inline]
    pub fn delta(&self, step: Step) -> i64 {
        match step {
            Step::N => i64::from(self.m),
            Step::E => -i64::from(self.n),
        }
    }

    /// Number of full boxes above the diagonal, `(m-1)(n-1)/2`. This is the
    /// maximum of area and of dinv when the dimensions are coprime.
    pub fn half_interior(&self) -> u64 {
        u64::from(self.m.saturating_sub(1)) * u64::from(self.n.saturating_sub(1)) / 2
    }
}

impl fmt::Display for Dims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

/// A unit step. `E` sorts before `N`, which fixes the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

impl Step {
    pub fn flipped(self) -> Step {
        match self {
            Step::E => Step::N,
            Step::N => Step::E,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

impl TryFrom<char> for Step {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            other => Err(Error::InvalidStep(other)),
        }
    }
}

/// A free lattice path from `(0, 0)` to `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    dims: Dims,
    steps: Vec<Step>,
}

impl Path {
    pub fn new(dims: Dims, steps: Vec<Step>) -> Result<Self> {
        let found_n = steps.iter().filter(|&&s| s == Step::N).count();
        let found_e = steps.len() - found_n;
        if found_n != dims.n as usize || found_e != dims.m as usize {
            return Err(Error::StepCount {
                m: dims.m,
                n: dims.n,
                found_n,
                found_e,
            });
        }
        Ok(Path { dims, steps })
    }

    /// Parses the text form, an uppercase string over `N` and `E`.
    pub fn parse(dims: Dims, text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .map(Step::try_from)
            .collect::<Result<Vec<_>>>()?;
        Path::new(dims, steps)
    }

    pub(crate) fn from_steps_unchecked(dims: Dims, steps: Vec<Step>) -> Self {
        debug_assert!(Path::new(dims, steps.clone()).is_ok());
        Path { dims, steps }
    }

    #[inline]
    pub fn dims(&self) -> Dims {
        self.dims
    }

    #[inline]
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The rank sequence `r(P_0), ..., r(P_{m+n})`; first and last are 0.
    pub fn ranks(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut r = 0i64;
        out.push(r);
        for &s in &self.steps {
            r += self.dims.delta(s);
            out.push(r);
        }
        out
    }

    /// The ranks of the steps' starting points, `r(P_0), ..., r(P_{m+n-1})`.
    pub(crate) fn start_ranks(&self) -> Vec<i64> {
        let mut ranks = self.ranks();
        ranks.pop();
        ranks
    }

    pub fn rank_set(&self) -> Result<RankSet> {
        self.dims.require_coprime()?;
        let mut ranks = self.start_ranks();
        ranks.sort_unstable();
        debug_assert!(ranks.windows(2).all(|w| w[0] < w[1]));
        Ok(RankSet {
            dims: self.dims,
            ranks,
        })
    }

    /// A path is Dyck iff none of its ranks is negative.
    pub fn is_dyck(&self) -> bool {
        let mut r = 0i64;
        for &s in &self.steps {
            r += self.dims.delta(s);
            if r < 0 {
                return false;
            }
        }
        true
    }

    pub(crate) fn require_dyck(&self) -> Result<()> {
        if self.is_dyck() {
            Ok(())
        } else {
            Err(Error::NotDyck)
        }
    }

    pub fn end_sets(&self) -> Result<EndSets> {
        self.dims.require_coprime()?;
        let ranks = self.ranks();
        let mut sets = EndSets::default();
        for (i, &s) in self.steps.iter().enumerate() {
            let (start, end) = (ranks[i], ranks[i + 1]);
            match s {
                Step::N => {
                    sets.south.push(start);
                    sets.north.push(end);
                }
                Step::E => {
                    sets.west.push(start);
                    sets.east.push(end);
                }
            }
        }
        for v in [
            &mut sets.south,
            &mut sets.east,
            &mut sets.north,
            &mut sets.west,
        ] {
            v.sort_unstable();
        }
        Ok(sets)
    }

    /// The path with its step sequence reversed (rotation by 180 degrees).
    pub fn reverse(&self) -> Path {
        let steps = self.steps.iter().rev().copied().collect();
        Path {
            dims: self.dims,
            steps,
        }
    }

    /// Reverse and swap `N` with `E`; the result lives in the `n x m`
    /// rectangle and has the same rank set.
    pub fn transpose(&self) -> Path {
        let steps = self.steps.iter().rev().map(|s| s.flipped()).collect();
        Path {
            dims: self.dims.transposed(),
            steps,
        }
    }

    /// Index of the node with the highest rank. Unique for coprime dims.
    fn highest_node(&self) -> usize {
        let ranks = self.ranks();
        let (k, &top) = ranks
            .iter()
            .enumerate()
            .max_by_key(|&(_, r)| *r)
            .expect("rank sequence is never empty");
        assert_eq!(
            ranks.iter().filter(|&&r| r == top).count(),
            1,
            "highest rank is not unique"
        );
        k
    }

    /// The rank complement: split the path as `Q1 Q2` at its highest node and
    /// return `rev(Q1) rev(Q2)`. Its rank set is `M - R` with `M = max R`.
    pub fn rank_complement(&self) -> Result<Path> {
        self.dims.require_coprime()?;
        self.require_dyck()?;
        let k = self.highest_node();
        let (head, tail) = self.steps.split_at(k);
        let steps = head
            .iter()
            .rev()
            .chain(tail.iter().rev())
            .copied()
            .collect();
        Ok(Path {
            dims: self.dims,
            steps,
        })
    }

    /// Rebuilds the Dyck path with the given rank set. A rank `r` starts an
    /// N step iff `r + m` is also in the set.
    pub fn from_rank_set(set: &RankSet) -> Result<Path> {
        let dims = set.dims;
        dims.require_coprime()?;
        if set.min() != Some(0) {
            return Err(Error::InvalidRankSet(
                "a Dyck rank set has minimum 0".into(),
            ));
        }
        let m = i64::from(dims.m);
        let mut steps = Vec::with_capacity(dims.len());
        let mut seen = HashSet::with_capacity(dims.len());
        let mut r = 0i64;
        for _ in 0..dims.len() {
            if !set.contains(r) {
                return Err(Error::InvalidRankSet(format!(
                    "walk reaches rank {r}, which is not in the set"
                )));
            }
            if !seen.insert(r) {
                return Err(Error::InvalidRankSet(format!("walk revisits rank {r}")));
            }
            let step = if set.contains(r + m) {
                Step::N
            } else {
                Step::E
            };
            r += dims.delta(step);
            steps.push(step);
        }
        if r != 0 {
            return Err(Error::InvalidRankSet(format!(
                "walk ends at rank {r} instead of returning to 0"
            )));
        }
        Path::new(dims, steps)
            .map_err(|_| Error::InvalidRankSet("walk does not stay inside the rectangle".into()))
    }

    /// `x_b` for each row `b`: the number of E steps before the N step that
    /// leaves height `b`.
    pub(crate) fn row_offsets(&self) -> Vec<u32> {
        let mut offsets = Vec::with_capacity(self.dims.n as usize);
        let mut x = 0u32;
        for &s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::N => offsets.push(x),
            }
        }
        offsets
    }

    /// Number of full boxes lying above the diagonal and below the path.
    pub fn area(&self) -> Result<u64> {
        self.require_dyck()?;
        let (m, n) = (u64::from(self.dims.m), u64::from(self.dims.n));
        // Box (a, b) counts iff its lower-right corner is weakly above the
        // diagonal, i.e. a + 1 <= floor(m b / n), and it is right of the path.
        let total = self
            .row_offsets()
            .iter()
            .enumerate()
            .map(|(b, &x)| (m * b as u64 / n).saturating_sub(u64::from(x)))
            .sum();
        Ok(total)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The `m + n` distinct ranks of a path's nodes, stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankSet {
    dims: Dims,
    ranks: Vec<i64>,
}

impl RankSet {
    pub fn new(dims: Dims, ranks: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut ranks: Vec<i64> = ranks.into_iter().collect();
        ranks.sort_unstable();
        if ranks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRankSet("ranks are not distinct".into()));
        }
        if ranks.len() != dims.len() {
            return Err(Error::InvalidRankSet(format!(
                "expected {} ranks, got {}",
                dims.len(),
                ranks.len()
            )));
        }
        Ok(RankSet { dims, ranks })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.ranks
    }

    pub fn contains(&self, r: i64) -> bool {
        self.ranks.binary_search(&r).is_ok()
    }

    pub fn min(&self) -> Option<i64> {
        self.ranks.first().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.ranks.last().copied()
    }

    /// `M - R` where `M = max R`.
    pub fn complement(&self) -> RankSet {
        let top = self.max().unwrap_or(0);
        let mut ranks: Vec<i64> = self.ranks.iter().map(|r| top - r).collect();
        ranks.reverse();
        RankSet {
            dims: self.dims,
            ranks,
        }
    }

    /// `-R`.
    pub fn negated(&self) -> RankSet {
        let ranks = self.ranks.iter().rev().map(|r| -r).collect();
        RankSet {
            dims: self.dims,
            ranks,
        }
    }
}

impl Serialize for RankSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.ranks.serialize(serializer)
    }
}

/// Ranks of the south, east, north and west ends of a path, each ascending.
///
/// South ends start N steps, north ends finish them; west ends start E steps
/// and east ends finish them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EndSets {
    pub east: Vec<i64>,
    pub north: Vec<i64>,
    pub south: Vec<i64>,
    pub west: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(m: u32, n: u32, s: &str) -> Path {
        Path::parse(Dims::new(m, n).unwrap(), s).unwrap()
    }

    #[test]
    fn degenerate_dims_rejected() {
        assert_eq!(Dims::new(0, 3), Err(Error::DegenerateDims { m: 0, n: 3 }));
        assert!(Dims::new(4, 2).unwrap().require_coprime().is_err());
    }

    #[test]
    fn parse_rejects_bad_input() {
        let d = Dims::new(3, 2).unwrap();
        assert_eq!(Path::parse(d, "NNxEE"), Err(Error::InvalidStep('x')));
        assert_eq!(Path::parse(d, "nneee"), Err(Error::InvalidStep('n')));
        assert!(matches!(
            Path::parse(d, "NNNEE"),
            Err(Error::StepCount { .. })
        ));
    }

    #[test]
    fn ranks_worked_examples() {
        assert_eq!(
            path(7, 5, "NNEENNENEEEE").ranks(),
            vec![0, 7, 14, 9, 4, 11, 18, 13, 20, 15, 10, 5, 0]
        );
        assert_eq!(path(3, 2, "NNEEE").ranks(), vec![0, 3, 6, 4, 2, 0]);
        assert_eq!(path(1, 1, "NE").ranks(), vec![0, 1, 0]);
    }

    #[test]
    fn rank_sets() {
        assert_eq!(
            path(3, 2, "NNEEE").rank_set().unwrap().as_slice(),
            &[0, 2, 3, 4, 6]
        );
        assert_eq!(
            path(7, 5, "NNEENNENEEEE").rank_set().unwrap().as_slice(),
            &[0, 4, 5, 7, 9, 10, 11, 13, 14, 15, 18, 20]
        );
        assert_eq!(path(2, 1, "NEE").rank_set().unwrap().as_slice(), &[0, 1, 2]);
        assert_eq!(
            path(4, 2, "NNEEEE").rank_set(),
            Err(Error::NonCoprime { m: 4, n: 2 })
        );
    }

    #[test]
    fn dyck_predicate() {
        assert!(path(3, 2, "NNEEE").is_dyck());
        assert!(!path(3, 2, "NEENE").is_dyck());
        assert!(path(6, 4, "NNNNEEEEEE").is_dyck());
        // non-coprime dims: touching the diagonal is allowed
        assert!(path(2, 2, "NENE").is_dyck());
        assert!(!path(2, 2, "ENNE").is_dyck());
    }

    #[test]
    fn end_set_examples() {
        let e = path(3, 2, "NNEEE").end_sets().unwrap();
        assert_eq!(e.south, vec![0, 3]);
        assert_eq!(e.west, vec![2, 4, 6]);
        assert_eq!(e.north, vec![3, 6]);
        assert_eq!(e.east, vec![0, 2, 4]);

        let e = path(3, 2, "NENEE").end_sets().unwrap();
        assert_eq!(e.south, vec![0, 1]);
        assert_eq!(e.west, vec![2, 3, 4]);
        assert_eq!(e.north, vec![3, 4]);
        assert_eq!(e.east, vec![0, 1, 2]);
    }

    #[test]
    fn reverse_and_transpose() {
        let p = path(3, 2, "NNEEE");
        let r = p.reverse();
        assert_eq!(r.to_string(), "EEENN");
        assert_eq!(r.reverse(), p);
        // raw recursion for the reversed path yields the negated rank set
        assert_eq!(r.rank_set().unwrap(), p.rank_set().unwrap().negated());
        assert_eq!(r.rank_set().unwrap().as_slice(), &[-6, -4, -3, -2, 0]);

        let t = p.transpose();
        assert_eq!(t.dims(), Dims::new(2, 3).unwrap());
        assert_eq!(t.to_string(), "NNNEE");
        assert_eq!(t.transpose(), p);

        let q = path(3, 2, "NENEE");
        let t = q.transpose();
        assert_eq!(t.to_string(), "NNENE");
        assert_eq!(t.rank_set().unwrap().as_slice(), &[0, 1, 2, 3, 4]);
        assert_eq!(
            t.rank_set().unwrap().as_slice(),
            q.rank_set().unwrap().as_slice()
        );
    }

    #[test]
    fn rank_complement_examples() {
        for s in ["NNEEE", "NENEE"] {
            let p = path(3, 2, s);
            assert_eq!(p.rank_complement().unwrap(), p);
        }
        assert_eq!(path(3, 2, "NEENE").rank_complement(), Err(Error::NotDyck));
        assert_eq!(
            path(4, 2, "NNEEEE").rank_complement(),
            Err(Error::NonCoprime { m: 4, n: 2 })
        );
        let p = path(7, 5, "NNEENNENEEEE");
        let c = p.rank_complement().unwrap();
        assert!(c.is_dyck());
        assert_eq!(c.rank_set().unwrap(), p.rank_set().unwrap().complement());
        assert_eq!(c.rank_complement().unwrap(), p);
    }

    #[test]
    fn rank_set_reconstruction() {
        let d = Dims::new(3, 2).unwrap();
        let set = RankSet::new(d, [0, 2, 3, 4, 6]).unwrap();
        assert_eq!(Path::from_rank_set(&set).unwrap().to_string(), "NNEEE");
        let set = RankSet::new(d, [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(Path::from_rank_set(&set).unwrap().to_string(), "NENEE");
        let set = RankSet::new(d, [0, 1, 2, 3, 7]).unwrap();
        assert!(matches!(
            Path::from_rank_set(&set),
            Err(Error::InvalidRankSet(_))
        ));
        assert!(RankSet::new(d, [0, 1, 2]).is_err());
        assert!(RankSet::new(d, [0, 1, 1, 2, 3]).is_err());
    }

    #[test]
    fn area_examples() {
        assert_eq!(path(3, 2, "NNEEE").area(), Ok(1));
        assert_eq!(path(3, 2, "NENEE").area(), Ok(0));
        assert_eq!(path(7, 5, "NNNNNEEEEEEE").area(), Ok(12));
        assert_eq!(path(3, 2, "NEENE").area(), Err(Error::NotDyck));
        // general dims: the classical 3x3 staircase has area 0, the top one 3
        assert_eq!(path(3, 3, "NENENE").area(), Ok(0));
        assert_eq!(path(3, 3, "NNNEEE").area(), Ok(3));
    }
}
