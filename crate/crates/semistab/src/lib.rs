//! Exact re-verification of the finite computations behind non-existence
//! results for semi-stable abelian varieties over Q with bad reduction at a
//! single prime.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactnum`]: radicals `∏ p^e` with rational exponents, exact comparison
//!   and decimal rendering, p-adic power classes.
//! - [`extcrit`]: the `(l²−1)/24` criterion, its congruence form and the
//!   local-kernel rank computation for `p ∈ {2, 3}`.
//! - [`elliptic`]: long Weierstrass curves, point counts, conductor exponents
//!   at `q ≥ 5`, two-division cubics.
//! - [`discbounds`]: conductor–discriminant and tower formulas, budgets and
//!   degree bounds from a lower-bound table.
//! - [`orders`]: monogenic orders, prime splitting, residue rings, ray class
//!   groups and unit filtrations.
//! - [`groups`]: permutation groups and the catalog of groups of order ≤ 16.
//! - [`certify`]: certificate schema, verification and reports.
//!
//! Scalar-generic types are parameterised over any integer type satisfying
//! [`Scalar`]; the aliases below fix the machine-word instantiation used by
//! the certificates.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::ToBigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub mod arith;
pub mod certify;
pub mod discbounds;
pub mod elliptic;
pub mod exactnum;
pub mod extcrit;
pub mod groups;
pub mod orders;

/// Integer scalars accepted by the generic exact types.
pub trait Scalar:
    Integer + Signed + Clone + Hash + Debug + Display + ToBigInt + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + ToBigInt
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

pub type Radical = exactnum::RadicalNumber<i64>;
pub type BigRadical = exactnum::RadicalNumber<num_bigint::BigInt>;
pub type Curve = elliptic::WeierstrassCurve<i64>;

pub use exactnum::{padic_power_class, radical_cmp, radical_decimal, ExactError, PadicPowerClass, RadicalNumber};
