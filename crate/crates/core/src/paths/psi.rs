//! The bijection between self-rank-complement `(m, n)`-Dyck paths and free
//! paths in the `floor(m/2) x floor(n/2)` grid.
//!
//! A self-rank-complement path splits at its highest node into two
//! palindromes `A = rev(Q1) Q1` and `B = rev(Q2) Q2`, where an odd-length
//! palindrome contributes its middle step as two half steps. Half steps are
//! handled in a doubled lattice: every full step becomes two half steps and
//! ranks are doubled, so everything stays integral.

use super::{Dims, Path, Step};
use crate::{Error, Result};

/// The half step in the middle of an odd-length palindrome, if any.
fn middle(steps: &[Step]) -> Option<Step> {
    (steps.len() % 2 == 1).then(|| steps[steps.len() / 2])
}

fn is_palindrome(steps: &[Step]) -> bool {
    steps.iter().eq(steps.iter().rev())
}

/// Maps a self-rank-complement Dyck path to a free path with `floor(m/2)`
/// E steps and `floor(n/2)` N steps.
pub fn psi(path: &Path) -> Result<Path> {
    let dims = path.dims();
    dims.require_coprime()?;
    path.require_dyck()?;
    if path.rank_complement()? != *path {
        return Err(Error::NotSelfComplement);
    }

    let k = path.highest_node();
    let (a, b) = path.steps().split_at(k);
    assert!(
        is_palindrome(a) && is_palindrome(b),
        "a self-complement path splits into palindromes"
    );

    // Q1 is the second half of A, Q2^rev the first half of B.
    let lead = middle(a);
    let trail = middle(b);
    let mut body: Vec<Step> = a[a.len().div_ceil(2)..].to_vec();
    body.extend_from_slice(&b[..b.len() / 2]);

    // Keep Q when it starts with E/2 or ends with N/2, otherwise take Q^rev.
    if !(lead == Some(Step::E) || trail == Some(Step::N)) {
        body.reverse();
    }
    Ok(Path::from_steps_unchecked(
        Dims::grid(dims.m() / 2, dims.n() / 2),
        body,
    ))
}

/// Inverse of [`psi`]: rebuilds the self-rank-complement `(m, n)`-Dyck path
/// from a path in the `floor(m/2) x floor(n/2)` grid.
pub fn psi_inverse(small: &Path, target: Dims) -> Result<Path> {
    target.require_coprime()?;
    let expected = Dims::grid(target.m() / 2, target.n() / 2);
    if small.dims() != expected {
        return Err(Error::DimsMismatch {
            expected: (expected.m(), expected.n()),
            found: (small.dims().m(), small.dims().n()),
        });
    }

    // Half-step word: E/2 in front when m is odd, N/2 at the end when n is odd.
    let mut halves: Vec<Step> = Vec::with_capacity(target.len());
    if target.m() % 2 == 1 {
        halves.push(Step::E);
    }
    for &s in small.steps() {
        halves.push(s);
        halves.push(s);
    }
    if target.n() % 2 == 1 {
        halves.push(Step::N);
    }

    // Doubled ranks: a half step moves the rank by m or -n.
    let ranks = |word: &[Step]| -> Vec<i64> {
        let mut out = Vec::with_capacity(word.len() + 1);
        let mut r = 0;
        out.push(r);
        for &s in word {
            r += target.delta(s);
            out.push(r);
        }
        out
    };

    let mut r = ranks(&halves);
    let (lo, hi) = (r.iter().min().unwrap(), r.iter().max().unwrap());
    assert_ne!(lo + hi, 0, "max + min of the half-step word cannot vanish");
    if lo + hi < 0 {
        halves.reverse();
        r = ranks(&halves);
    }

    let top = *r.iter().max().unwrap();
    let k = r.iter().position(|&x| x == top).unwrap();
    let (q1, q2_rev) = halves.split_at(k);

    // D' = rev(Q1') Q1' rev(Q2') Q2' in half steps.
    let doubled: Vec<Step> = q1
        .iter()
        .rev()
        .chain(q1)
        .chain(q2_rev)
        .chain(q2_rev.iter().rev())
        .copied()
        .collect();

    let steps: Vec<Step> = doubled
        .chunks_exact(2)
        .map(|pair| {
            assert_eq!(pair[0], pair[1], "half steps must pair into full steps");
            pair[0]
        })
        .collect();
    Ok(Path::from_steps_unchecked(target, steps))
}
