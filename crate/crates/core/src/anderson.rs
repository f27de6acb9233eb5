//! Anderson's bijection between `(m, n)`-Dyck paths and `(m, n)`-cores.
//!
//! The core attached to a Dyck path has as first-column hooks the positive
//! ranks of the lattice points strictly to the right of the path. Its
//! `S^n`-vector is the set of south-end ranks and its `S^m`-vector the set of
//! east-end ranks, which is how the inverse rebuilds the path.

use crate::partitions::{require_mn_core, HookSet, Partition};
use crate::paths::{Dims, Path, RankSet};
use crate::Result;

/// Positive ranks of lattice points strictly right of the path, read off
/// the rectangle row by row.
pub fn hooks_right_of(path: &Path) -> Result<HookSet> {
    let dims = path.dims();
    dims.require_coprime()?;
    path.require_dyck()?;
    let mut ranks = Vec::new();
    for (b, &x) in path.row_offsets().iter().enumerate() {
        for a in (x + 1)..=dims.m() {
            let r = dims.rank(i64::from(a), b as i64);
            if r > 0 {
                ranks.push(r);
            }
        }
    }
    HookSet::new(ranks)
}

/// The same hook set obtained from the south ends alone: each class mod `n`
/// is the run `s - n, s - 2n, ...` of positive values below its south end.
pub fn hooks_from_south_ends(path: &Path) -> Result<HookSet> {
    path.require_dyck()?;
    let n = i64::from(path.dims().n());
    let south = path.end_sets()?.south;
    let ranks = south
        .into_iter()
        .flat_map(|s| (1..).map(move |k| s - k * n).take_while(|&h| h > 0));
    HookSet::new(ranks)
}

/// `alpha`: Dyck path to `(m, n)`-core.
pub fn anderson(path: &Path) -> Result<Partition> {
    Ok(Partition::from_hooks(&hooks_right_of(path)?))
}

/// `alpha^-1`: the Dyck path whose core is `lambda`.
pub fn anderson_inverse(lambda: &Partition, dims: Dims) -> Result<Path> {
    dims.require_coprime()?;
    let (m, n) = (dims.m(), dims.n());
    require_mn_core(lambda, m, n)?;
    let hooks = lambda.first_column_hooks();
    // ranks = S ⊎ W with S = S^n(H) and W = E + n, E = S^m(H)
    let south = hooks.s_vector(n);
    let west = hooks.s_vector(m);
    let ranks = south
        .entries()
        .iter()
        .copied()
        .chain(west.entries().iter().map(|e| e + i64::from(n)));
    Path::from_rank_set(&RankSet::new(dims, ranks)?)
}

/// Whether `alpha(rank_complement(p)) = alpha(p)^T`.
pub fn conjugation_correspondence_check(path: &Path) -> Result<bool> {
    let lambda = anderson(path)?;
    let mu = anderson(&path.rank_complement()?)?;
    Ok(mu == lambda.conjugate())
}
