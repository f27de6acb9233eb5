//! Deterministic generators for every object family.
//!
//! Paths come out in lexicographic order of their step strings with `E < N`;
//! cores in lexicographic order of their parts. Dyck paths are produced by a
//! depth-first walk that never extends a prefix with a negative rank.

use std::fmt;
use std::str::FromStr;

use crate::anderson::anderson;
use crate::partitions::Partition;
use crate::paths::{Dims, Path, Step};
use crate::{binomial, half_binomial, rational_catalan_number, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Free,
    Dyck,
    Cores,
    SelfComplementPaths,
    SelfConjugateCores,
    SelfReversingFree,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Free,
        Family::Dyck,
        Family::Cores,
        Family::SelfComplementPaths,
        Family::SelfConjugateCores,
        Family::SelfReversingFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Free => "free",
            Family::Dyck => "dyck",
            Family::Cores => "cores",
            Family::SelfComplementPaths => "self_complement_paths",
            Family::SelfConjugateCores => "self_conjugate_cores",
            Family::SelfReversingFree => "self_reversing_free",
        }
    }

    pub fn requires_coprime(self) -> bool {
        !matches!(self, Family::Free | Family::SelfReversingFree)
    }

    pub fn yields_cores(self) -> bool {
        matches!(self, Family::Cores | Family::SelfConjugateCores)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub dims: Dims,
    pub family: Family,
    /// Stop after this many objects.
    pub limit: Option<u64>,
}

impl EnumerationSpec {
    pub fn new(dims: Dims, family: Family) -> Self {
        EnumerationSpec {
            dims,
            family,
            limit: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.family.requires_coprime() {
            self.dims.require_coprime()?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Path(Path),
    Core(Partition),
}

/// Lexicographic walk over free or Dyck paths extending a fixed prefix.
#[derive(Clone, Debug)]
pub struct Paths {
    dims: Dims,
    dyck: bool,
    floor: usize,
    steps: Vec<Step>,
    rank: i64,
    east: u32,
    north: u32,
    state: WalkState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl Paths {
    fn new(dims: Dims, dyck: bool, prefix: &[Step]) -> Self {
        let mut walk = Paths {
            dims,
            dyck,
            floor: prefix.len(),
            steps: Vec::with_capacity(dims.len()),
            rank: 0,
            east: 0,
            north: 0,
            state: WalkState::Fresh,
        };
        for &s in prefix {
            if !walk.allowed(s) {
                walk.state = WalkState::Done;
                break;
            }
            walk.push(s);
        }
        walk
    }

    fn allowed(&self, s: Step) -> bool {
        match s {
            Step::E => {
                self.east < self.dims.m() && (!self.dyck || self.rank >= i64::from(self.dims.n()))
            }
            Step::N => self.north < self.dims.n(),
        }
    }

    fn push(&mut self, s: Step) {
        match s {
            Step::E => self.east += 1,
            Step::N => self.north += 1,
        }
        self.rank += self.dims.delta(s);
        self.steps.push(s);
    }

    fn pop(&mut self) -> Step {
        let s = self.steps.pop().expect("pop above the prefix floor");
        match s {
            Step::E => self.east -= 1,
            Step::N => self.north -= 1,
        }
        self.rank -= self.dims.delta(s);
        s
    }

    /// Smallest completion of the current prefix. From a nonnegative rank a
    /// completion always exists (all N steps, then all E steps).
    fn complete(&mut self) {
        while self.steps.len() < self.dims.len() {
            let s = if self.allowed(Step::E) {
                Step::E
            } else {
                Step::N
            };
            debug_assert!(self.allowed(s));
            self.push(s);
        }
    }

    fn current(&self) -> Path {
        Path::from_steps_unchecked(self.dims, self.steps.clone())
    }
}

impl Iterator for Paths {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        match self.state {
            WalkState::Done => return None,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                self.complete();
                return Some(self.current());
            }
            WalkState::Running => {}
        }
        // Backtrack to the last E that can become an N.
        while self.steps.len() > self.floor {
            if self.pop() == Step::E && self.allowed(Step::N) {
                self.push(Step::N);
                self.complete();
                return Some(self.current());
            }
        }
        self.state = WalkState::Done;
        None
    }
}

pub fn free_paths(dims: Dims) -> Paths {
    Paths::new(dims, false, &[])
}

pub fn dyck_paths(dims: Dims) -> Paths {
    Paths::new(dims, true, &[])
}

/// Dyck paths starting with `prefix`; empty if the prefix is not a valid
/// Dyck prefix.
pub fn dyck_paths_with_prefix(dims: Dims, prefix: &[Step]) -> Paths {
    Paths::new(dims, true, prefix)
}

/// All Dyck prefixes of length `min(depth, m + n)`, in lexicographic order.
/// Running [`dyck_paths_with_prefix`] on each and concatenating the results
/// in this order reproduces [`dyck_paths`]; the pieces are independent and
/// can be consumed in parallel.
pub fn dyck_prefixes(dims: Dims, depth: usize) -> Vec<Vec<Step>> {
    fn go(walk: &mut Paths, depth: usize, out: &mut Vec<Vec<Step>>) {
        if walk.steps.len() == depth {
            out.push(walk.steps.clone());
            return;
        }
        for s in [Step::E, Step::N] {
            if walk.allowed(s) {
                walk.push(s);
                go(walk, depth, out);
                walk.pop();
            }
        }
    }
    let mut walk = Paths::new(dims, true, &[]);
    let mut out = Vec::new();
    go(&mut walk, depth.min(dims.len()), &mut out);
    out
}

/// All `(m, n)`-cores, as images of Dyck paths, sorted by parts.
pub fn cores(dims: Dims) -> Result<Vec<Partition>> {
    dims.require_coprime()?;
    let mut out = dyck_paths(dims)
        .map(|p| anderson(&p))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

pub fn self_complement_paths(dims: Dims) -> Result<impl Iterator<Item = Path>> {
    dims.require_coprime()?;
    Ok(dyck_paths(dims).filter(|p| p.rank_complement().as_ref() == Ok(p)))
}

pub fn self_conjugate_cores(dims: Dims) -> Result<impl Iterator<Item = Partition>> {
    Ok(cores(dims)?.into_iter().filter(|l| *l == l.conjugate()))
}

pub fn self_reversing_free(dims: Dims) -> impl Iterator<Item = Path> {
    free_paths(dims).filter(|p| p.reverse() == *p)
}

/// Streams the requested family.
pub fn enumerate(spec: &EnumerationSpec) -> Result<Box<dyn Iterator<Item = Item>>> {
    spec.validate()?;
    let dims = spec.dims;
    let items: Box<dyn Iterator<Item = Item>> = match spec.family {
        Family::Free => Box::new(free_paths(dims).map(Item::Path)),
        Family::Dyck => Box::new(dyck_paths(dims).map(Item::Path)),
        Family::Cores => Box::new(cores(dims)?.into_iter().map(Item::Core)),
        Family::SelfComplementPaths => Box::new(self_complement_paths(dims)?.map(Item::Path)),
        Family::SelfConjugateCores => Box::new(self_conjugate_cores(dims)?.map(Item::Core)),
        Family::SelfReversingFree => Box::new(self_reversing_free(dims).map(Item::Path)),
    };
    Ok(match spec.limit {
        Some(limit) => Box::new(items.take(limit as usize)),
        None => items,
    })
}

pub fn count(spec: &EnumerationSpec) -> Result<u64> {
    Ok(enumerate(spec)?.count() as u64)
}

/// The closed-form size of a family, where one is known.
pub fn closed_form(dims: Dims, family: Family) -> Option<u128> {
    let (m, n) = (dims.m(), dims.n());
    if family.requires_coprime() && !dims.is_coprime() {
        return None;
    }
    Some(match family {
        Family::Free => binomial(u64::from(m + n), u64::from(n)),
        Family::Dyck | Family::Cores => rational_catalan_number(m, n),
        Family::SelfComplementPaths | Family::SelfConjugateCores => half_binomial(m, n),
        Family::SelfReversingFree if m % 2 == 1 && n % 2 == 1 => 0,
        Family::SelfReversingFree => half_binomial(m, n),
    })
}

/// Largest size accepted by [`oracle_partitions_up_to`].
pub const ORACLE_MAX_SIZE: u32 = 30;

/// Every partition of size at most `max_size`: by size, and within one size
/// in reverse lexicographic order (`(3), (2,1), (1,1,1)`).
pub fn oracle_partitions_up_to(max_size: u32) -> Result<PartitionsUpTo> {
    if max_size > ORACLE_MAX_SIZE {
        return Err(Error::LimitExceeded {
            limit: u64::from(ORACLE_MAX_SIZE),
        });
    }
    Ok(PartitionsUpTo {
        max_size,
        next: Some(Vec::new()),
    })
}

#[derive(Clone, Debug)]
pub struct PartitionsUpTo {
    max_size: u32,
    next: Option<Vec<u32>>,
}

impl PartitionsUpTo {
    fn successor(parts: &[u32], max_size: u32) -> Option<Vec<u32>> {
        let size: u32 = parts.iter().sum();
        let Some(i) = parts.iter().rposition(|&p| p > 1) else {
            // all ones (or empty): move on to the next size
            return (size < max_size).then(|| vec![size + 1]);
        };
        let v = parts[i] - 1;
        let mut rest = (parts.len() - i - 1) as u32 + 1;
        let mut out = parts[..i].to_vec();
        out.push(v);
        while rest > 0 {
            let p = rest.min(v);
            out.push(p);
            rest -= p;
        }
        Some(out)
    }
}

impl Iterator for PartitionsUpTo {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        self.next = Self::successor(&cur, self.max_size);
        Some(Partition::new(cur).expect("successor keeps parts weakly decreasing"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: u32, n: u32) -> Dims {
        Dims::new(m, n).unwrap()
    }

    fn strings(it: impl Iterator<Item = Path>) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    /// Brute force: every binary word with n N's, filtered.
    fn brute_force(d: Dims, dyck: bool) -> Vec<String> {
        let len = d.len();
        let mut out: Vec<String> = (0u32..1 << len)
            .filter(|w| w.count_ones() == d.n())
            .map(|w| {
                (0..len)
                    .map(|i| {
                        if w >> (len - 1 - i) & 1 == 1 {
                            'N'
                        } else {
                            'E'
                        }
                    })
                    .collect::<String>()
            })
            .filter(|s| !dyck || Path::parse(d, s).unwrap().is_dyck())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn dyck_three_two() {
        assert_eq!(strings(dyck_paths(dims(3, 2))), vec!["NENEE", "NNEEE"]);
    }

    #[test]
    fn matches_brute_force() {
        for m in 1..=6 {
            for n in 1..=6 {
                let d = dims(m, n);
                assert_eq!(strings(free_paths(d)), brute_force(d, false), "free {d}");
                assert_eq!(strings(dyck_paths(d)), brute_force(d, true), "dyck {d}");
            }
        }
    }

    #[test]
    fn prefix_split_reassembles() {
        for (m, n) in [(5, 3), (7, 4), (4, 7)] {
            let d = dims(m, n);
            let whole: Vec<Path> = dyck_paths(d).collect();
            for depth in [0, 1, 3, 6, 20] {
                let pieces: Vec<Path> = dyck_prefixes(d, depth)
                    .iter()
                    .flat_map(|pre| dyck_paths_with_prefix(d, pre))
                    .collect();
                assert_eq!(pieces, whole, "{d} depth {depth}");
            }
        }
        assert_eq!(dyck_paths_with_prefix(dims(3, 2), &[Step::E]).count(), 0);
    }

    #[test]
    fn family_counts() {
        assert_eq!(free_paths(dims(2, 2)).count(), 6);
        let spec = EnumerationSpec::new(dims(7, 5), Family::Dyck);
        assert_eq!(count(&spec), Ok(66));
        let spec = EnumerationSpec::new(dims(8, 5), Family::SelfConjugateCores);
        assert_eq!(count(&spec), Ok(15));
        let spec = EnumerationSpec::new(dims(3, 3), Family::SelfReversingFree);
        assert_eq!(count(&spec), Ok(0));
        assert_eq!(closed_form(dims(3, 3), Family::SelfReversingFree), Some(0));
        let spec = EnumerationSpec::new(dims(4, 2), Family::Dyck);
        assert_eq!(count(&spec), Err(Error::NonCoprime { m: 4, n: 2 }));
        let spec = EnumerationSpec {
            limit: Some(10),
            ..EnumerationSpec::new(dims(7, 5), Family::Dyck)
        };
        assert_eq!(count(&spec), Ok(10));
    }

    #[test]
    fn cores_three_two() {
        assert_eq!(
            cores(dims(3, 2)).unwrap(),
            vec![Partition::empty(), "1".parse().unwrap()]
        );
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
        assert!("catalan".parse::<Family>().is_err());
    }

    #[test]
    fn partition_oracle() {
        let small: Vec<String> = oracle_partitions_up_to(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(small, vec!["-", "1", "2", "1,1", "3", "2,1", "1,1,1"]);
        assert_eq!(oracle_partitions_up_to(5).unwrap().count(), 19);
        // sum of p(k) for k <= 20
        assert_eq!(oracle_partitions_up_to(20).unwrap().count(), 2714);
        assert_eq!(oracle_partitions_up_to(0).unwrap().count(), 1);
        assert!(matches!(
            oracle_partitions_up_to(31),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
