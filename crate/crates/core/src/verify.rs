//! Exhaustive per-pair identity checks.
//!
//! [`verify_pair`] runs every check in [`CHECK_NAMES`], in that order, over
//! all objects of one coprime pair. Checks of proven identities report
//! `fail` when violated; checks of conjectured statements (sweep
//! injectivity, the Catalan sum formulas, palindromicity) report `finding`.

use std::collections::HashSet;
use std::time::Instant;

use serde::Serialize;

use crate::anderson::{anderson, anderson_inverse, hooks_from_south_ends, hooks_right_of};
use crate::enumerate::{closed_form, dyck_paths, free_paths, Family};
use crate::partitions::{is_n_core, is_n_core_by_hooks, sh_complement_check, Partition};
use crate::paths::{psi, psi_inverse, Dims, Path};
use crate::qpoly::{core_sum_poly, path_sum_poly, rational_catalan_poly};
use crate::stats::{
    coarea, codinv, codinv_by_pairs, dinv, dinv_geometric, dinv_rank, skew_length,
    skew_length_symmetry_check, sweep, sweep_injectivity_report,
};
use crate::{half_binomial, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub m: u32,
    pub n: u32,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Record wall-clock milliseconds per check. Off by default so reports
    /// are byte-identical across runs.
    pub timing: bool,
}

pub const CHECK_NAMES: [&str; 26] = [
    "dyck_count",
    "end_set_identities",
    "transpose_rank_set",
    "rank_set_round_trip",
    "rank_complement_involution",
    "end_set_complement",
    "self_complement_count",
    "psi_bijection",
    "self_reversing_count",
    "anderson_bijection",
    "anderson_hook_routes",
    "area_equals_length",
    "conjugation_correspondence",
    "self_conjugate_count",
    "core_characterizations",
    "dinv_geometric_equals_rank",
    "dinv_transpose_invariance",
    "dinv_equals_swept_area",
    "dinv_rank_complement_invariance",
    "codinv_equals_skew_length",
    "skew_length_symmetry",
    "maximum_statistics",
    "sweep_injective",
    "path_sum_equals_core_sum",
    "path_sum_equals_catalan_poly",
    "catalan_poly_shape",
];

/// Coprime pairs with `m + n <= max_sum`, ordered by `(m + n, m)`.
pub fn coprime_pairs_up_to(max_sum: u32) -> Vec<Dims> {
    let mut out = Vec::new();
    for sum in 2..=max_sum {
        for m in 1..sum {
            if let Ok(d) = Dims::coprime(m, sum - m) {
                out.push(d);
            }
        }
    }
    out
}

/// What a check body reports: `Ok(details)` on success, `Err(details)` on a
/// violation.
type Verdict = std::result::Result<String, String>;

/// First path violating `pred`, as a failure message.
fn for_all<'a>(
    paths: impl IntoIterator<Item = &'a Path>,
    what: &str,
    mut pred: impl FnMut(&Path) -> Result<bool>,
) -> Result<Verdict> {
    let mut count = 0;
    for p in paths {
        if !pred(p)? {
            return Ok(Err(format!("{what} fails at {p}")));
        }
        count += 1;
    }
    Ok(Ok(format!("{count} paths")))
}

fn equal_counts(found: u128, expected: u128) -> Verdict {
    if found == expected {
        Ok(format!("{found}"))
    } else {
        Err(format!("found {found}, expected {expected}"))
    }
}

struct PairData {
    dims: Dims,
    dyck: Vec<Path>,
    cores: Vec<Partition>,
}

pub fn verify_pair(dims: Dims, options: VerifyOptions) -> Result<VerificationReport> {
    dims.require_coprime()?;
    let dyck: Vec<Path> = dyck_paths(dims).collect();
    let cores = dyck.iter().map(anderson).collect::<Result<Vec<_>>>()?;
    let data = PairData { dims, dyck, cores };

    let checks = CHECK_NAMES
        .iter()
        .map(|&name| {
            let start = Instant::now();
            let (conjecture, verdict) = run_check(name, &data);
            let status = match &verdict {
                Ok(Ok(_)) => Status::Pass,
                Ok(Err(_)) if conjecture => Status::Finding,
                _ => Status::Fail,
            };
            let details = match verdict {
                Ok(Ok(d)) | Ok(Err(d)) => d,
                Err(e) => format!("error: {e}"),
            };
            Check {
                name,
                status,
                details,
                millis: options.timing.then(|| start.elapsed().as_millis() as u64),
            }
        })
        .collect();
    Ok(VerificationReport {
        m: dims.m(),
        n: dims.n(),
        checks,
    })
}

/// Returns whether the check concerns a conjecture, and its verdict.
fn run_check(name: &str, d: &PairData) -> (bool, Result<Verdict>) {
    let dims = d.dims;
    let (m, n) = (dims.m(), dims.n());
    let paths = &d.dyck;
    match name {
        "dyck_count" => (
            false,
            Ok(equal_counts(
                paths.len() as u128,
                closed_form(dims, Family::Dyck).unwrap_or_default(),
            )),
        ),
        "end_set_identities" => (
            false,
            for_all(paths, "E = W - n, S = N - m, S+W = E+N = R", |p| {
                let e = p.end_sets()?;
                let r = p.rank_set()?;
                let shift = |v: &[i64], by: i64| v.iter().map(|x| x - by).collect::<Vec<_>>();
                let union = |a: &[i64], b: &[i64]| {
                    let mut u: Vec<i64> = a.iter().chain(b).copied().collect();
                    u.sort_unstable();
                    u
                };
                let residues = |v: &[i64], k: u32| {
                    let mut res: Vec<i64> = v.iter().map(|x| x.rem_euclid(i64::from(k))).collect();
                    res.sort_unstable();
                    res == (0..i64::from(k)).collect::<Vec<_>>()
                };
                Ok(e.east == shift(&e.west, i64::from(n))
                    && e.south == shift(&e.north, i64::from(m))
                    && union(&e.south, &e.west) == r.as_slice()
                    && union(&e.east, &e.north) == r.as_slice()
                    && residues(&e.south, n)
                    && residues(&e.east, m))
            }),
        ),
        "transpose_rank_set" => {
            let free: Vec<Path> = free_paths(dims).collect();
            (
                false,
                for_all(&free, "rank set of the transpose", |p| {
                    let t = p.transpose();
                    Ok(t.rank_set()?.as_slice() == p.rank_set()?.as_slice()
                        && t.is_dyck() == p.is_dyck())
                }),
            )
        }
        "rank_set_round_trip" => (
            false,
            for_all(paths, "path from rank set", |p| {
                Ok(Path::from_rank_set(&p.rank_set()?)? == *p)
            }),
        ),
        "rank_complement_involution" => (
            false,
            for_all(paths, "rank complement", |p| {
                let c = p.rank_complement()?;
                Ok(c.is_dyck()
                    && c.rank_complement()? == *p
                    && c.rank_set()? == p.rank_set()?.complement())
            }),
        ),
        "end_set_complement" => (
            false,
            for_all(paths, "S and E of the rank complement", |p| {
                let e = p.end_sets()?;
                let c = p.rank_complement()?.end_sets()?;
                let flip = |v: &[i64]| {
                    let top = *v.iter().max().unwrap();
                    let mut out: Vec<i64> = v.iter().map(|x| top - x).collect();
                    out.sort_unstable();
                    out
                };
                Ok(c.south == flip(&e.south) && c.east == flip(&e.east))
            }),
        ),
        "self_complement_count" => {
            let found = paths
                .iter()
                .filter(|p| p.rank_complement().as_ref() == Ok(*p))
                .count();
            (false, Ok(equal_counts(found as u128, half_binomial(m, n))))
        }
        "psi_bijection" => (false, psi_bijection(d)),
        "self_reversing_count" => {
            let found = free_paths(dims).filter(|p| p.reverse() == *p).count();
            (
                false,
                Ok(equal_counts(
                    found as u128,
                    closed_form(dims, Family::SelfReversingFree).unwrap_or_default(),
                )),
            )
        }
        "anderson_bijection" => (false, anderson_bijection(d)),
        "anderson_hook_routes" => (
            false,
            for_all(paths, "hooks right of the path vs south ends", |p| {
                let h = hooks_right_of(p)?;
                Ok(h == hooks_from_south_ends(p)?
                    && h.s_vector(n).sorted() == p.end_sets()?.south
                    && h.s_vector(m).sorted() == p.end_sets()?.east)
            }),
        ),
        "area_equals_length" => (
            false,
            for_all(paths, "area = length of the core", |p| {
                Ok(p.area()? == anderson(p)?.len() as u64)
            }),
        ),
        "conjugation_correspondence" => (
            false,
            for_all(paths, "alpha(rank complement) = conjugate", |p| {
                crate::anderson::conjugation_correspondence_check(p)
            }),
        ),
        "self_conjugate_count" => {
            let found = d.cores.iter().filter(|l| **l == l.conjugate()).count();
            (false, Ok(equal_counts(found as u128, half_binomial(m, n))))
        }
        "core_characterizations" => (false, core_characterizations(d)),
        "dinv_geometric_equals_rank" => (
            false,
            for_all(paths, "geometric dinv = rank dinv", |p| {
                Ok(dinv_geometric(p)? == dinv_rank(p)?)
            }),
        ),
        "dinv_transpose_invariance" => (
            false,
            for_all(paths, "dinv(D) = dinv(D^T)", |p| {
                Ok(dinv(p)? == dinv(&p.transpose())?)
            }),
        ),
        "dinv_equals_swept_area" => (
            false,
            for_all(
                paths,
                "dinv = area of sweep, codinv = coarea of sweep",
                |p| {
                    let s = sweep(p)?;
                    Ok(s.is_dyck()
                        && dinv(p)? == s.area()?
                        && codinv(p)? == coarea(&s)?
                        && codinv(p)? == codinv_by_pairs(p)?)
                },
            ),
        ),
        "dinv_rank_complement_invariance" => (
            false,
            for_all(paths, "dinv(D) = dinv(rank complement)", |p| {
                Ok(dinv(p)? == dinv(&p.rank_complement()?)?)
            }),
        ),
        "codinv_equals_skew_length" => (
            false,
            for_all(paths, "codinv = skew-length of the core", |p| {
                Ok(codinv(p)? == skew_length(&anderson(p)?, m, n)?)
            }),
        ),
        "skew_length_symmetry" => {
            let verdict = d
                .cores
                .iter()
                .map(|l| Ok((l, skew_length_symmetry_check(l, m, n)?)))
                .collect::<Result<Vec<_>>>()
                .map(|v| match v.into_iter().find(|(_, ok)| !ok) {
                    None => Ok(format!("{} cores", d.cores.len())),
                    Some((l, _)) => Err(format!("skew-length symmetry fails at {l}")),
                });
            (false, verdict)
        }
        "maximum_statistics" => (false, maximum_statistics(d)),
        "sweep_injective" => (
            true,
            sweep_injectivity_report(dims).map(|r| {
                if r.injective && r.closed {
                    Ok(format!(
                        "{} paths, {} cycles",
                        r.count,
                        r.cycles.unwrap_or_default()
                    ))
                } else {
                    Err(format!(
                        "{} collisions, closed = {}",
                        r.collisions.len(),
                        r.closed
                    ))
                }
            }),
        ),
        "path_sum_equals_core_sum" => (
            false,
            path_sum_poly(m, n).and_then(|a| {
                let b = core_sum_poly(m, n)?;
                Ok(if a == b {
                    Ok(a.to_string())
                } else {
                    Err(format!("path sum {a} != core sum {b}"))
                })
            }),
        ),
        "path_sum_equals_catalan_poly" => (
            true,
            path_sum_poly(m, n).and_then(|a| {
                let c = rational_catalan_poly(m, n)?;
                Ok(if a == c {
                    Ok(c.to_string())
                } else {
                    Err(format!("path sum {a} != Cat(q) {c}"))
                })
            }),
        ),
        "catalan_poly_shape" => (true, catalan_poly_shape(d)),
        other => unreachable!("unknown check {other}"),
    }
}

fn psi_bijection(d: &PairData) -> Result<Verdict> {
    let fixed: Vec<&Path> = d
        .dyck
        .iter()
        .filter(|p| p.rank_complement().as_ref() == Ok(*p))
        .collect();
    let mut images = HashSet::new();
    for p in &fixed {
        let q = psi(p)?;
        if psi_inverse(&q, d.dims)? != **p {
            return Ok(Err(format!("psi_inverse(psi({p})) != {p}")));
        }
        if !images.insert(q.clone()) {
            return Ok(Err(format!("psi is not injective at {p}")));
        }
    }
    let expected = half_binomial(d.dims.m(), d.dims.n());
    if images.len() as u128 != expected {
        return Ok(Err(format!("{} images, expected {expected}", images.len())));
    }
    // the inverse on every small path lands on a fixed point
    let small = Dims::grid(d.dims.m() / 2, d.dims.n() / 2);
    for q in free_paths(small) {
        let p = psi_inverse(&q, d.dims)?;
        if !p.is_dyck() || p.rank_complement()? != p || psi(&p)? != q {
            return Ok(Err(format!("psi(psi_inverse({q})) != {q}")));
        }
    }
    Ok(Ok(format!("{} fixed points", fixed.len())))
}

fn anderson_bijection(d: &PairData) -> Result<Verdict> {
    let distinct: HashSet<&Partition> = d.cores.iter().collect();
    if distinct.len() != d.dyck.len() {
        return Ok(Err("anderson map has collisions".into()));
    }
    for (p, l) in d.dyck.iter().zip(&d.cores) {
        if !(is_n_core(l, d.dims.m()) && is_n_core(l, d.dims.n())) {
            return Ok(Err(format!("alpha({p}) = {l} is not a core")));
        }
        if anderson_inverse(l, d.dims)? != *p {
            return Ok(Err(format!("alpha^-1(alpha({p})) != {p}")));
        }
    }
    Ok(Ok(format!("{} cores", d.cores.len())))
}

fn core_characterizations(d: &PairData) -> Result<Verdict> {
    for l in &d.cores {
        for k in [d.dims.m(), d.dims.n()] {
            if is_n_core(l, k) != is_n_core_by_hooks(l, k) {
                return Ok(Err(format!("flush and hook-scan disagree on {l} for {k}")));
            }
            if !l.is_empty() && !sh_complement_check(l, k)? {
                return Ok(Err(format!("S-vector complement fails on {l} for {k}")));
            }
        }
    }
    Ok(Ok(format!("{} cores", d.cores.len())))
}

fn maximum_statistics(d: &PairData) -> Result<Verdict> {
    let bound = d.dims.half_interior();
    let mut max_area = 0;
    let mut max_dinv = 0;
    for p in &d.dyck {
        max_area = max_area.max(p.area()?);
        max_dinv = max_dinv.max(dinv(p)?);
    }
    Ok(if max_area == bound && max_dinv == bound {
        Ok(format!("max area = max dinv = {bound}"))
    } else {
        Err(format!(
            "max area {max_area}, max dinv {max_dinv}, expected {bound}"
        ))
    })
}

fn catalan_poly_shape(d: &PairData) -> Result<Verdict> {
    let (m, n) = (d.dims.m(), d.dims.n());
    let c = rational_catalan_poly(m, n)?;
    let mut problems = Vec::new();
    if c != rational_catalan_poly(n, m)? {
        problems.push("not symmetric in m and n".to_string());
    }
    if !c.has_nonnegative_coefficients() {
        problems.push("negative coefficient".to_string());
    }
    if c.eval_at_one() != d.dyck.len().into() {
        problems.push(format!("value at 1 is {}", c.eval_at_one()));
    }
    let degree = 2 * d.dims.half_interior();
    if c.degree() != Some(degree as usize) {
        problems.push(format!("degree {:?}, expected {degree}", c.degree()));
    }
    if !c.is_palindromic() {
        problems.push("not palindromic".to_string());
    }
    Ok(if problems.is_empty() {
        Ok(format!("degree {degree}, palindromic"))
    } else {
        Err(problems.join("; "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order() {
        let pairs: Vec<(u32, u32)> = coprime_pairs_up_to(5)
            .iter()
            .map(|d| (d.m(), d.n()))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (1, 1),
                (1, 2),
                (2, 1),
                (1, 3),
                (3, 1),
                (1, 4),
                (2, 3),
                (3, 2),
                (4, 1)
            ]
        );
    }

    #[test]
    fn small_pair_passes() {
        let r = verify_pair(Dims::new(5, 3).unwrap(), VerifyOptions::default()).unwrap();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name).collect();
        assert_eq!(names, CHECK_NAMES);
        for c in &r.checks {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.details);
            assert!(c.millis.is_none());
        }
    }

    #[test]
    fn non_coprime_rejected() {
        assert!(verify_pair(Dims::new(6, 4).unwrap(), VerifyOptions::default()).is_err());
    }
}
