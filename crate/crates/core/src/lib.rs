//! Exact combinatorics of rational `(m, n)`-Dyck paths and simultaneous
//! `(m, n)`-core partitions.
//!
//! The crate covers:
//!
//! - [`paths`]: lattice paths in the `m x n` rectangle, their rank data, the
//!   reverse / transpose / rank-complement transformations and the `psi`
//!   bijection on self-rank-complement paths.
//! - [`partitions`]: partitions, hook lengths, conjugation, `n`-flush hook
//!   sets and their `S`-vectors.
//! - [`anderson`]: Anderson's bijection between Dyck paths and cores.
//! - [`stats`]: area, dinv, codinv, the sweep map and skew-length.
//! - [`qpoly`]: integer polynomials in `q` and the rational `q`-Catalan
//!   polynomial together with the two combinatorial sums that should equal it.
//! - [`enumerate`]: deterministic generators for every object family.
//! - [`verify`]: the per-pair identity checks behind `rck verify`.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its arguments.

pub mod anderson;
pub mod enumerate;
mod error;
pub mod partitions;
pub mod paths;
pub mod qpoly;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{HookSet, Partition, SVector};
pub use paths::{Dims, EndSets, Path, RankSet, Step};
pub use qpoly::QPoly;
pub use stats::{StatRecord, SweepReport};

/// Greatest common divisor, with `gcd(a, 0) = a`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        // exact at every step: acc * (a - i) is divisible by (i + 1)
        acc = acc * u128::from(a - i) / u128::from(i + 1);
    }
    acc
}

/// The rational Catalan number `(m+n-1)! / (m! n!)` for coprime `m, n`.
pub fn rational_catalan_number(m: u32, n: u32) -> u128 {
    // (m+n-1)!/(m! n!) = C(m+n, n) / (m+n)
    binomial(u64::from(m + n), u64::from(n)) / u128::from(m + n)
}

/// `C(floor(m/2) + floor(n/2), floor(m/2))`, the common count of
/// self-reversing free paths (when `m` or `n` is even), self-rank-complement
/// Dyck paths and self-conjugate cores.
pub fn half_binomial(m: u32, n: u32) -> u128 {
    let (hm, hn) = (u64::from(m / 2), u64::from(n / 2));
    binomial(hm + hn, hm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 5), 1);
        assert_eq!(gcd(3, 0), 3);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(half_binomial(8, 5), 15);
    }

    #[test]
    fn rational_catalan_numbers() {
        assert_eq!(rational_catalan_number(7, 5), 66);
        assert_eq!(rational_catalan_number(8, 5), 99);
        assert_eq!(rational_catalan_number(5, 3), 7);
        assert_eq!(rational_catalan_number(4, 3), 5);
    }
}
