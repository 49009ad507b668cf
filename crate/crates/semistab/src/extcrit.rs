//! Dimension of the extension group of `μ_p` by `Z/pZ` over `Z[1/l]`.
//!
//! Three routes compute the same `{0, 1}` answer: the closed form
//! `(l²−1)/24 ≡ 0 (mod p)`, the congruences on `l`, and (for `p ∈ {2, 3}`)
//! the kernel of the explicit map from global generators to local power
//! classes.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::arith;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("l and p must be distinct, both are {0}")]
    SamePrime(u64),
    #[error("local kernel route only covers p = 2 and p = 3, got {0}")]
    UnsupportedPrime(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ClosedForm,
    Congruence,
    LocalKernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExtDimension {
    pub l: u64,
    pub p: u64,
    pub dimension: u8,
    pub route: Route,
}

fn check(l: u64, p: u64) -> Result<(), ExtError> {
    for x in [l, p] {
        if !arith::is_prime(x) {
            return Err(ExtError::NotPrime(x));
        }
    }
    if l == p {
        return Err(ExtError::SamePrime(l));
    }
    Ok(())
}

/// Dimension 1 iff `p` divides the numerator of `(l²−1)/24` in lowest terms.
pub fn ext_dimension(l: u64, p: u64) -> Result<ExtDimension, ExtError> {
    check(l, p)?;
    let num = l as u128 * l as u128 - 1;
    let g = num.gcd(&24);
    let (a, b) = (num / g, 24 / g);
    // p ≠ l keeps (l²−1)/24 p-integral, so p never divides b
    debug_assert!(b % p as u128 != 0);
    let dimension = u8::from(a % p as u128 == 0);
    Ok(ExtDimension { l, p, dimension, route: Route::ClosedForm })
}

/// `l ≡ ±1` modulo 8 (p = 2), 9 (p = 3) or p (p ≥ 5).
pub fn ext_dimension_congruence(l: u64, p: u64) -> Result<ExtDimension, ExtError> {
    check(l, p)?;
    let m = match p {
        2 => 8,
        3 => 9,
        _ => p,
    };
    let r = l % m;
    let dimension = u8::from(r == 1 || r == m - 1);
    Ok(ExtDimension { l, p, dimension, route: Route::Congruence })
}

/// Coordinates of a nonzero rational integer in `Q_2^* / (Q_2^*)^2 ≅ F_2^3`,
/// with unit basis `−1 ↦ (1,0)`, `5 ↦ (0,1)`.
fn two_adic_class(a: i64) -> Vec<u64> {
    let v = arith::valuation(a.unsigned_abs(), 2);
    let u = (a / (1i64 << v)).rem_euclid(8);
    let (x, y) = match u {
        1 => (0, 0),
        5 => (0, 1),
        7 => (1, 0),
        3 => (1, 1),
        _ => unreachable!("odd residue"),
    };
    vec![(v % 2) as u64, x, y]
}

/// Coordinates in `Q_3^* / (Q_3^*)^3 ≅ F_3^2`: valuation and the exponent `k`
/// with unit part `≡ ±4^k (mod 9)`.
fn three_adic_class(a: i64) -> Vec<u64> {
    let v = arith::valuation(a.unsigned_abs(), 3);
    let u = (a / 3i64.pow(v)).rem_euclid(9);
    let k = match u {
        1 | 8 => 0,
        4 | 5 => 1,
        7 | 2 => 2,
        _ => unreachable!("unit residue mod 9"),
    };
    vec![(v % 3) as u64, k]
}

/// Kernel dimension of `⟨global generators⟩ → local p-th power classes`.
///
/// For `p = 2` the generators are `2, −1, l`; for `p = 3` they are `3, l`.
pub fn local_kernel_dimension(l: u64, p: u64) -> Result<ExtDimension, ExtError> {
    check(l, p)?;
    let l = l as i64;
    let rows: Vec<Vec<u64>> = match p {
        2 => [2, -1, l].iter().map(|&a| two_adic_class(a)).collect(),
        3 => [3, l].iter().map(|&a| three_adic_class(a)).collect(),
        _ => return Err(ExtError::UnsupportedPrime(p)),
    };
    let kernel = rows.len() - arith::rank_mod_p(&rows, p);
    Ok(ExtDimension { l: l as u64, p, dimension: kernel as u8, route: Route::LocalKernel })
}
