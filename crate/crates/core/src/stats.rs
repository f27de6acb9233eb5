//! Statistics on Dyck paths and cores: dinv, codinv, coarea, the sweep map,
//! and skew-length.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::enumerate::dyck_paths;
use crate::partitions::{require_mn_core, Partition};
use crate::paths::{Dims, Path, Step};
use crate::Result;

/// Cells of the partition above the path (complement of the path inside the
/// rectangle, anchored top-left) whose arm and leg satisfy
/// `arm/(leg+1) <= m/n < (arm+1)/leg`.
///
/// Defined for any dimensions.
pub fn dinv_geometric(path: &Path) -> Result<u64> {
    path.require_dyck()?;
    let (m, n) = (u64::from(path.dims().m()), u64::from(path.dims().n()));
    // Row b (from the bottom) of the region has length x_b; lengths grow
    // upwards, so the leg of cell (a, b) is the number of lower rows longer
    // than a.
    let offsets = path.row_offsets();
    let mut count = 0;
    for (b, &len) in offsets.iter().enumerate() {
        for a in 0..len {
            let arm = u64::from(len - a - 1);
            let leg = offsets[..b].iter().filter(|&&x| x > a).count() as u64;
            if n * arm <= m * (leg + 1) && (leg == 0 || m * leg < n * (arm + 1)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// dinv through ranks: pairs of nodes `i < j` with `P_i` a west end, `P_j`
/// a south end and `0 < r(P_i) - r(P_j) <= m + n`.
pub fn dinv_rank(path: &Path) -> Result<u64> {
    let dims = path.dims();
    dims.require_coprime()?;
    path.require_dyck()?;
    let span = i64::from(dims.m() + dims.n());
    let ranks = path.ranks();
    let steps = path.steps();
    let mut count = 0;
    for i in 0..steps.len() {
        if steps[i] != Step::E {
            continue;
        }
        for j in (i + 1)..steps.len() {
            let gap = ranks[i] - ranks[j];
            if steps[j] == Step::N && 0 < gap && gap <= span {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// dinv; for coprime dimensions the geometric and rank forms agree.
pub fn dinv(path: &Path) -> Result<u64> {
    dinv_geometric(path)
}

/// `(m-1)(n-1)/2 - dinv`.
pub fn codinv(path: &Path) -> Result<u64> {
    path.dims().require_coprime()?;
    Ok(path.dims().half_interior() - dinv(path)?)
}

/// `(m-1)(n-1)/2 - area`.
pub fn coarea(path: &Path) -> Result<u64> {
    path.dims().require_coprime()?;
    Ok(path.dims().half_interior() - path.area()?)
}

/// codinv as a pair count: south ends lying above west ends in rank.
pub fn codinv_by_pairs(path: &Path) -> Result<u64> {
    path.require_dyck()?;
    let ends = path.end_sets()?;
    let count = ends
        .south
        .iter()
        .map(|s| ends.west.partition_point(|w| w < s) as u64)
        .sum();
    Ok(count)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub area: u64,
    pub coarea: u64,
    pub codinv: u64,
    pub dinv: u64,
}

pub fn stat_record(path: &Path) -> Result<StatRecord> {
    Ok(StatRecord {
        area: path.area()?,
        coarea: coarea(path)?,
        codinv: codinv(path)?,
        dinv: dinv(path)?,
    })
}

/// The sweep map: reorder the steps by the rank of their starting points.
pub fn sweep(path: &Path) -> Result<Path> {
    let dims = path.dims();
    dims.require_coprime()?;
    path.require_dyck()?;
    let mut keyed: Vec<(i64, Step)> = path
        .ranks()
        .into_iter()
        .zip(path.steps().iter().copied())
        .collect();
    keyed.sort_unstable_by_key(|&(r, _)| r);
    assert!(
        keyed.windows(2).all(|w| w[0].0 < w[1].0),
        "starting ranks are distinct for coprime dimensions"
    );
    Ok(Path::from_steps_unchecked(
        dims,
        keyed.into_iter().map(|(_, s)| s).collect(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub image: Path,
    pub preimages: Vec<Path>,
}

/// Outcome of applying the sweep map to every Dyck path of a given size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub m: u32,
    pub n: u32,
    pub count: u64,
    pub injective: bool,
    /// Every image is again a Dyck path.
    pub closed: bool,
    pub collisions: Vec<Collision>,
    /// Number of cycles of the induced permutation, when it is one.
    pub cycles: Option<u64>,
}

pub fn sweep_injectivity_report(dims: Dims) -> Result<SweepReport> {
    dims.require_coprime()?;
    let mut images: BTreeMap<Path, Vec<Path>> = BTreeMap::new();
    let mut closed = true;
    let mut count = 0;
    for p in dyck_paths(dims) {
        let q = sweep(&p)?;
        closed &= q.is_dyck();
        images.entry(q).or_default().push(p);
        count += 1;
    }
    let collisions: Vec<Collision> = images
        .iter()
        .filter(|(_, pre)| pre.len() > 1)
        .map(|(image, pre)| Collision {
            image: image.clone(),
            preimages: pre.clone(),
        })
        .collect();
    let injective = collisions.is_empty();
    let cycles = (injective && closed).then(|| {
        let forward: BTreeMap<&Path, &Path> =
            images.iter().map(|(img, pre)| (&pre[0], img)).collect();
        let mut visited = std::collections::BTreeSet::new();
        let mut cycles = 0;
        for start in forward.keys() {
            if visited.contains(start) {
                continue;
            }
            cycles += 1;
            let mut cur = *start;
            while visited.insert(cur) {
                cur = forward[cur];
            }
        }
        cycles
    });
    Ok(SweepReport {
        m: dims.m(),
        n: dims.n(),
        count,
        injective,
        closed,
        collisions,
        cycles,
    })
}

/// Cells lying both in an `n`-row and in the `m`-boundary (hook `< m`).
///
/// Row `i` is an `n`-row when `h_i + n` belongs to `S^n(H)`, i.e. `h_i` is the
/// largest first-column hook in its class mod `n`.
pub fn skew_length(lambda: &Partition, m: u32, n: u32) -> Result<u64> {
    Dims::coprime(m, n)?;
    require_mn_core(lambda, m, n)?;
    let hooks = lambda.first_column_hooks();
    let s = hooks.s_vector(n);
    let mut total = 0;
    for (i, &h) in hooks.values().iter().enumerate() {
        if s.contains(h + i64::from(n)) {
            total += lambda.row_hooks(i + 1).iter().filter(|&&x| x < m).count() as u64;
        }
    }
    Ok(total)
}

/// Whether skew-length is unchanged by conjugating `lambda` and by swapping
/// `m` with `n`.
pub fn skew_length_symmetry_check(lambda: &Partition, m: u32, n: u32) -> Result<bool> {
    let conj = lambda.conjugate();
    let base = skew_length(lambda, m, n)?;
    Ok(skew_length(lambda, n, m)? == base
        && skew_length(&conj, m, n)? == base
        && skew_length(&conj, n, m)? == base)
}
