//! Dense polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::anderson::anderson;
use crate::enumerate::dyck_paths;
use crate::paths::Dims;
use crate::stats::{codinv, skew_length};
use crate::{Error, Result};

/// Coefficients in ascending degree, no trailing zeros. The zero polynomial
/// has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// `q^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `coeff * q^degree` in place.
    pub fn add_term(&mut self, degree: usize, coeff: impl Into<BigInt>) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigInt::zero());
        }
        self.coeffs[degree] += coeff.into();
        self.normalize();
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient sequence reads the same both ways.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Classical long division. The quotient is computed over the integers,
    /// so every leading-coefficient division has to be exact.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let lead = divisor.coeffs.last().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                // remainder is not a polynomial with integer coefficients
                return Err(Error::InexactDivision {
                    remainder: QPoly::from_coeffs(rem),
                });
            }
            let c = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Quotient of an exact division; fails carrying the remainder otherwise.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision { remainder: r })
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    /// `1 + 2q + q^3`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match deg {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{deg}")?,
                _ => write!(f, "{mag}q^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    /// Ascending coefficient array. Coefficients beyond `i64` are written as
    /// decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

/// `[a]_q = 1 + q + ... + q^{a-1}`, with `[0]_q = 0`.
pub fn q_int(a: u32) -> QPoly {
    QPoly::from_coeffs(vec![1; a as usize])
}

/// `[a]_q! = [a]_q [a-1]_q ... [1]_q`.
pub fn q_factorial(a: u32) -> QPoly {
    (1..=a).fold(QPoly::one(), |acc, k| &acc * &q_int(k))
}

/// The Gaussian binomial `[a]_q! / ([b]_q! [a-b]_q!)`.
pub fn q_binomial(a: u32, b: u32) -> Result<QPoly> {
    if b > a {
        return Err(Error::InvalidBinomial { a, b });
    }
    let den = &q_factorial(b) * &q_factorial(a - b);
    q_factorial(a).div_exact(&den)
}

/// `Cat_{m,n}(q) = [m+n-1]_q! / ([m]_q! [n]_q!)` for coprime `m, n`.
pub fn rational_catalan_poly(m: u32, n: u32) -> Result<QPoly> {
    Dims::coprime(m, n)?;
    let den = &q_factorial(m) * &q_factorial(n);
    q_factorial(m + n - 1).div_exact(&den)
}

/// `sum over (m, n)-Dyck paths D of q^(area(D) + codinv(D))`.
pub fn path_sum_poly(m: u32, n: u32) -> Result<QPoly> {
    let dims = Dims::coprime(m, n)?;
    let mut counts: Vec<u64> = Vec::new();
    for p in dyck_paths(dims) {
        let deg = (p.area()? + codinv(&p)?) as usize;
        bump(&mut counts, deg);
    }
    Ok(QPoly::from_coeffs(counts))
}

/// `sum over (m, n)-cores lambda of q^(l(lambda) + sl(lambda))`, the cores
/// being produced by Anderson's bijection.
pub fn core_sum_poly(m: u32, n: u32) -> Result<QPoly> {
    let dims = Dims::coprime(m, n)?;
    let mut counts: Vec<u64> = Vec::new();
    for p in dyck_paths(dims) {
        let lambda = anderson(&p)?;
        let deg = lambda.len() + skew_length(&lambda, m, n)? as usize;
        bump(&mut counts, deg);
    }
    Ok(QPoly::from_coeffs(counts))
}

fn bump(counts: &mut Vec<u64>, deg: usize) {
    if counts.len() <= deg {
        counts.resize(deg + 1, 0);
    }
    counts[deg] += 1;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn canonical_form() {
        assert_eq!(poly(&[1, 0, 0]), poly(&[1]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0]).degree(), None);
        assert_eq!(poly(&[3, 0, 1]).degree(), Some(2));
    }

    #[test]
    fn q_integers_and_factorials() {
        assert_eq!(q_int(4), poly(&[1, 1, 1, 1]));
        assert!(q_int(0).is_zero());
        assert_eq!(q_factorial(3), poly(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), QPoly::one());
    }

    #[test]
    fn exact_division() {
        assert_eq!(q_int(4).div_exact(&q_int(2)), Ok(poly(&[1, 0, 1])));
        assert_eq!(
            q_int(4).div_exact(&QPoly::zero()),
            Err(Error::DivisionByZero)
        );
        // [5]_q / [2]_q leaves remainder 1
        assert_eq!(
            q_int(5).div_exact(&q_int(2)),
            Err(Error::InexactDivision {
                remainder: poly(&[1])
            })
        );
        // [5]! / ([4]! [2]!) is the non-coprime (4, 2) quotient
        let den = &q_factorial(4) * &q_factorial(2);
        assert!(matches!(
            q_factorial(5).div_exact(&den),
            Err(Error::InexactDivision { .. })
        ));
        let (q, r) = poly(&[1, 2, 3]).div_rem(&poly(&[1, 1, 1, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, poly(&[1, 2, 3]));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(4, 2), Ok(poly(&[1, 1, 2, 1, 1])));
        assert_eq!(q_binomial(7, 0), Ok(QPoly::one()));
        assert_eq!(q_binomial(5, 1), Ok(q_int(5)));
        assert_eq!(q_binomial(2, 3), Err(Error::InvalidBinomial { a: 2, b: 3 }));
    }

    #[test]
    fn catalan_polys() {
        assert_eq!(rational_catalan_poly(3, 2), Ok(poly(&[1, 0, 1])));
        assert_eq!(rational_catalan_poly(2, 1), Ok(QPoly::one()));
        assert_eq!(
            rational_catalan_poly(5, 3).unwrap().eval_at_one(),
            BigInt::from(7)
        );
        assert_eq!(
            rational_catalan_poly(4, 2),
            Err(Error::NonCoprime { m: 4, n: 2 })
        );
    }

    #[test]
    fn sums_small() {
        assert_eq!(path_sum_poly(3, 2), Ok(poly(&[1, 0, 1])));
        assert_eq!(path_sum_poly(2, 1), Ok(QPoly::one()));
        assert_eq!(core_sum_poly(3, 2), Ok(poly(&[1, 0, 1])));
        assert_eq!(core_sum_poly(2, 1), Ok(QPoly::one()));
        assert_eq!(path_sum_poly(5, 3), rational_catalan_poly(5, 3));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(poly(&[1, 0, 1]).to_string(), "1 + q^2");
        assert_eq!(poly(&[0, 2, -1, 3]).to_string(), "2q - q^2 + 3q^3");
        assert_eq!(poly(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(poly(&[1, 1]).to_string(), "1 + q");
    }

    #[test]
    fn add_and_terms() {
        let mut p = poly(&[1, 2]);
        p.add_term(3, 4);
        assert_eq!(p, poly(&[1, 2, 0, 4]));
        p.add_term(3, -4);
        assert_eq!(p, poly(&[1, 2]));
        assert_eq!(&poly(&[1, 1]) + &poly(&[-1, -1]), QPoly::zero());
        assert!(poly(&[1, 2, 1]).is_palindromic());
    }
}
