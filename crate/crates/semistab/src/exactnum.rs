//! Exact radicals `∏ p^e` with rational exponents, and p-adic power classes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith;
use crate::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("radicals are positive; got {0}")]
    NonPositive(String),
    #[error("value {0} does not fit the scalar type")]
    Overflow(String),
    #[error("cannot parse radical {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("{u} is divisible by {p}")]
    NotCoprime { u: String, p: u64 },
    #[error("digit count must lie in 1..=50, got {0}")]
    Digits(usize),
}

/// A positive real `∏ p^e` with `p` prime and `e` rational.
///
/// The factor map is canonical (sorted, no zero exponents), so structural
/// equality coincides with equality of values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RadicalNumber<T: Scalar> {
    factors: BTreeMap<T, Ratio<T>>,
}

fn prime_u64<T: Scalar>(p: &T) -> Result<u64, ExactError> {
    match p.to_u64() {
        Some(v) if arith::is_prime(v) => Ok(v),
        _ => Err(ExactError::NotPrime(p.to_string())),
    }
}

fn from_u64<T: Scalar>(v: u64) -> Result<T, ExactError> {
    T::from_u64(v).ok_or_else(|| ExactError::Overflow(v.to_string()))
}

impl<T: Scalar> RadicalNumber<T> {
    pub fn one() -> Self {
        RadicalNumber { factors: BTreeMap::new() }
    }

    /// Builds `∏ p^e`, merging repeated primes and dropping zero exponents.
    pub fn from_factors<I>(factors: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (T, Ratio<T>)>,
    {
        let mut map: BTreeMap<T, Ratio<T>> = BTreeMap::new();
        for (p, e) in factors {
            prime_u64(&p)?;
            let slot = map.entry(p).or_insert_with(Ratio::zero);
            *slot = slot.clone() + e;
        }
        map.retain(|_, e| !e.is_zero());
        Ok(RadicalNumber { factors: map })
    }

    pub fn prime_power(p: u64, num: i64, den: i64) -> Result<Self, ExactError> {
        let e = Ratio::new(from_i64::<T>(num)?, from_i64::<T>(den)?);
        Self::from_factors([(from_u64(p)?, e)])
    }

    pub fn from_integer(n: u64) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::NonPositive("0".into()));
        }
        let mut fs = Vec::new();
        for (p, k) in arith::factorize(n) {
            fs.push((from_u64::<T>(p)?, Ratio::from_integer(from_u64::<T>(k as u64)?)));
        }
        Self::from_factors(fs)
    }

    pub fn from_fraction(num: u64, den: u64) -> Result<Self, ExactError> {
        Ok(Self::from_integer(num)?.mul(&Self::from_integer(den)?.recip()))
    }

    pub fn factors(&self) -> impl Iterator<Item = (&T, &Ratio<T>)> {
        self.factors.iter()
    }

    pub fn exponent_of(&self, p: &T) -> Ratio<T> {
        self.factors.get(p).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// True when every exponent is a nonnegative integer.
    pub fn is_integer(&self) -> bool {
        self.factors.values().all(|e| e.is_integer() && !e.is_negative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map = self.factors.clone();
        for (p, e) in &other.factors {
            let slot = map.entry(p.clone()).or_insert_with(Ratio::zero);
            *slot = slot.clone() + e.clone();
        }
        map.retain(|_, e| !e.is_zero());
        RadicalNumber { factors: map }
    }

    pub fn recip(&self) -> Self {
        self.pow(&Ratio::from_integer(-T::one()))
    }

    pub fn pow(&self, e: &Ratio<T>) -> Self {
        let mut map: BTreeMap<T, Ratio<T>> =
            self.factors.iter().map(|(p, x)| (p.clone(), x.clone() * e.clone())).collect();
        map.retain(|_, x| !x.is_zero());
        RadicalNumber { factors: map }
    }

    /// The positive `n`-th root.
    pub fn root(&self, n: u64) -> Result<Self, ExactError> {
        let n = from_u64::<T>(n)?;
        Ok(self.pow(&Ratio::new(T::one(), n)))
    }

    /// Least common denominator of the exponents.
    fn common_denominator(&self) -> BigInt {
        self.factors.values().fold(BigInt::one(), |acc, e| acc.lcm(&big(e.denom())))
    }

    /// `(N, D)` with `self^d = N / D`, both positive integers.
    fn integral_power(&self, d: &BigInt) -> (BigInt, BigInt) {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in &self.factors {
            let k = big(e.numer()) * d / big(e.denom());
            let pk = Pow::pow(&big(p), k.magnitude());
            if k.is_negative() {
                den *= pk;
            } else {
                num *= pk;
            }
        }
        (num, den)
    }

    /// Exact comparison against a positive rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if !r.is_positive() {
            return Ordering::Greater;
        }
        let d = self.common_denominator();
        let exp = d.to_u32().expect("exponent denominator fits u32");
        let (n, m) = self.integral_power(&d);
        let lhs = n * Pow::pow(r.denom(), exp);
        let rhs = m * Pow::pow(r.numer(), exp);
        lhs.cmp(&rhs)
    }

    /// `floor(self * scale)` for a positive integer scale.
    fn floor_scaled(&self, scale: &BigInt) -> BigInt {
        let d = self.common_denominator();
        let exp = d.to_u32().expect("exponent denominator fits u32");
        let (n, m) = self.integral_power(&d);
        let radicand = n * Pow::pow(scale, exp) / m;
        radicand.nth_root(exp)
    }

    /// Decimal expansion correctly rounded (half up) to `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> Result<String, ExactError> {
        if digits == 0 || digits > 50 {
            return Err(ExactError::Digits(digits));
        }
        let mut decimals = self.leading_decimals(digits);
        loop {
            let ten = Pow::pow(BigInt::from(10), decimals as u32);
            let twice = self.floor_scaled(&(ten * 2));
            let rounded: BigInt = (twice + 1) / 2;
            let len = rounded.to_string().len();
            // a carry such as 9.996 -> 10.00 adds one digit
            if len > digits && decimals > 0 {
                decimals -= 1;
                continue;
            }
            return Ok(place_point(&rounded, decimals));
        }
    }

    /// Rounded to a fixed number of places after the point.
    pub fn to_fixed(&self, places: usize) -> String {
        let ten = Pow::pow(BigInt::from(10), places as u32);
        let twice = self.floor_scaled(&(ten * 2));
        place_point(&((twice + 1) / 2), places)
    }

    /// Truncated to a fixed number of places: the leading digits of the expansion.
    pub fn truncated(&self, places: usize) -> String {
        let ten = Pow::pow(BigInt::from(10), places as u32);
        place_point(&self.floor_scaled(&ten), places)
    }

    /// Places after the point needed for `digits` significant digits.
    fn leading_decimals(&self, digits: usize) -> usize {
        let int = self.floor_scaled(&BigInt::one());
        if !int.is_zero() {
            return digits.saturating_sub(int.to_string().len());
        }
        let mut s = 1;
        while self.floor_scaled(&Pow::pow(BigInt::from(10), s as u32)).is_zero() {
            s += 1;
        }
        s + digits - 1
    }

    /// Lossy value for diagnostics and random testing.
    pub fn approx_f64(&self) -> f64 {
        self.factors
            .iter()
            .map(|(p, e)| p.to_f64().unwrap().powf(e.numer().to_f64().unwrap() / e.denom().to_f64().unwrap()))
            .product()
    }
}

fn from_i64<T: Scalar>(v: i64) -> Result<T, ExactError> {
    T::from_i64(v).ok_or_else(|| ExactError::Overflow(v.to_string()))
}

fn big<T: Scalar>(x: &T) -> BigInt {
    x.to_bigint().expect("integer scalar converts to BigInt")
}

fn place_point(v: &BigInt, places: usize) -> String {
    let s = v.magnitude().to_string();
    if places == 0 {
        return s;
    }
    let s = format!("{:0>width$}", s, width = places + 1);
    let (a, b) = s.split_at(s.len() - places);
    format!("{a}.{b}")
}

impl<T: Scalar> Ord for RadicalNumber<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        let q = self.mul(&other.recip());
        if q.is_one() {
            return Ordering::Equal;
        }
        let d = q.common_denominator();
        let (n, m) = q.integral_power(&d);
        n.cmp(&m)
    }
}

impl<T: Scalar> PartialOrd for RadicalNumber<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Three-way exact comparison.
pub fn radical_cmp<T: Scalar>(a: &RadicalNumber<T>, b: &RadicalNumber<T>) -> Ordering {
    a.cmp(b)
}

/// Correctly rounded decimal with `digits` significant digits.
pub fn radical_decimal<T: Scalar>(a: &RadicalNumber<T>, digits: usize) -> Result<String, ExactError> {
    a.to_decimal(digits)
}

impl<T: Scalar> fmt::Display for RadicalNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if e.is_one() {
                write!(f, "{p}")?;
            } else if e.is_integer() {
                write!(f, "{p}^{}", e.numer())?;
            } else {
                write!(f, "{p}^{}/{}", e.numer(), e.denom())?;
            }
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for RadicalNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Radical({self})")
    }
}

impl<T: Scalar> FromStr for RadicalNumber<T> {
    type Err = ExactError;

    /// Accepts `p1^e1 * p2^e2 ...` where each base is a positive integer and
    /// each exponent is `a` or `a/b`; composite bases are factored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| ExactError::Parse { input: s.to_string(), reason: reason.to_string() };
        let mut acc = RadicalNumber::one();
        for term in s.split('*') {
            let term = term.trim();
            if term.is_empty() {
                return Err(fail("empty factor"));
            }
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (term, "1"),
            };
            let base: u64 = base.parse().map_err(|_| fail("base is not a positive integer"))?;
            let (num, den) = match exp.split_once('/') {
                Some((a, b)) => (a.trim(), b.trim()),
                None => (exp, "1"),
            };
            let num: i64 = num.parse().map_err(|_| fail("bad exponent numerator"))?;
            let den: i64 = den.parse().map_err(|_| fail("bad exponent denominator"))?;
            if den <= 0 {
                return Err(fail("exponent denominator must be positive"));
            }
            if base == 0 {
                return Err(fail("zero base"));
            }
            let e = Ratio::new(from_i64::<T>(num)?, from_i64::<T>(den)?);
            acc = acc.mul(&RadicalNumber::<T>::from_integer(base)?.pow(&e));
        }
        Ok(acc)
    }
}

impl<T: Scalar> serde::Serialize for RadicalNumber<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de, T: Scalar> serde::Deserialize<'de> for RadicalNumber<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether a unit `u` is a `p`-th power in the p-adic units, decided by
/// `u^{p-1} ≡ 1 (mod p²)` for odd `p` and `u ≡ 1 (mod 8)` for `p = 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicPowerClass<T: Scalar> {
    pub p: u64,
    pub u: T,
    /// `u` reduced modulo the deciding modulus (8 for `p = 2`, `p²` otherwise).
    pub residue: u64,
    pub is_power: bool,
    /// For positive verdicts a residue `w` with `w^p ≡ u` modulo the deciding modulus.
    pub witness: Option<u64>,
}

impl<T: Scalar> PadicPowerClass<T> {
    pub fn modulus(&self) -> u64 {
        deciding_modulus(self.p)
    }
}

fn deciding_modulus(p: u64) -> u64 {
    if p == 2 {
        8
    } else {
        p * p
    }
}

pub fn padic_power_class<T: Scalar>(u: T, p: u64) -> Result<PadicPowerClass<T>, ExactError> {
    if !arith::is_prime(p) {
        return Err(ExactError::NotPrime(p.to_string()));
    }
    let m = deciding_modulus(p);
    let r = big(&u).mod_floor(&BigInt::from(m));
    let residue = r.to_u64().expect("residue below modulus");
    if residue % p == 0 {
        return Err(ExactError::NotCoprime { u: u.to_string(), p });
    }
    let (is_power, witness) = if p == 2 {
        (residue == 1, (residue == 1).then_some(1))
    } else {
        let ok = arith::pow_mod(residue, p - 1, m) == 1;
        // u^p ≡ u when u^{p-1} ≡ 1, so u is its own witness
        (ok, ok.then_some(residue))
    };
    Ok(PadicPowerClass { p, u, residue, is_power, witness })
}

impl<T: Scalar> RadicalNumber<T> {
    /// Exact value as a rational when all exponents are integers.
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.factors.values().all(|e| e.is_integer()) {
            return None;
        }
        let d = BigInt::one();
        let (n, m) = self.integral_power(&d);
        Some(BigRational::new(n, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Radical;

    fn r(s: &str) -> Radical {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_merges_and_drops() {
        let a = r("2^1/2 * 2^1/2 * 3^0");
        assert_eq!(a, r("2"));
        assert_eq!(r("4 * 13^1/2"), r("2^2 * 13^1/2"));
        assert_eq!(r("144^1/4"), r("2 * 3^1/2"));
        assert!(r("1").is_one());
    }

    #[test]
    fn display_round_trips() {
        for s in ["2^7/4 * 5^7/8", "3^25/18 * 7^2/3", "2^2 * 13^1/2", "1", "2^-1/3 * 5"] {
            let a = r(s);
            assert_eq!(r(&a.to_string()), a, "{s}");
        }
        assert_eq!(r("5^7/8*2^7/4").to_string(), "2^7/4 * 5^7/8");
    }

    #[test]
    fn parse_errors() {
        assert!("2^1/0".parse::<Radical>().is_err());
        assert!("0".parse::<Radical>().is_err());
        assert!("x^2".parse::<Radical>().is_err());
        assert!("2 * ".parse::<Radical>().is_err());
        assert!(Radical::from_factors([(4, Ratio::new(1, 2))]).is_err());
    }

    #[test]
    fn comparisons() {
        assert_eq!(radical_cmp(&r("4 * 13^1/2"), &r("4 * 13^1/2")), Ordering::Equal);
        assert_eq!(radical_cmp(&r("2^3/2 * 13^1/2"), &r("4 * 13^1/2")), Ordering::Less);
        assert_eq!(radical_cmp(&r("3^25/18 * 7^2/3"), &r("3^3/2 * 7^2/3")), Ordering::Less);
        assert_eq!(radical_cmp(&r("3^28/18 * 7^2/3"), &r("3^3/2 * 7^2/3")), Ordering::Greater);
        assert_eq!(r("2^1/2").cmp_rational(&BigRational::new(7.into(), 5.into())), Ordering::Greater);
        assert_eq!(r("2^1/2").cmp_rational(&BigRational::new(3.into(), 2.into())), Ordering::Less);
        assert_eq!(r("12").cmp_rational(&BigRational::from_integer(12.into())), Ordering::Equal);
    }

    #[test]
    fn decimals() {
        assert_eq!(radical_decimal(&r("2^2 * 13^1/2"), 5).unwrap(), "14.422");
        assert_eq!(radical_decimal(&r("5^7/8 * 2^7/4"), 4).unwrap(), "13.75");
        assert_eq!(radical_decimal(&r("2 * 3^3/2"), 6).unwrap(), "10.3923");
        assert_eq!(radical_decimal(&r("3^25/18 * 7^2/3"), 4).unwrap(), "16.83");
        assert_eq!(r("3^25/18 * 7^2/3").truncated(2), "16.82");
        assert_eq!(r("4 * 11^1/2").truncated(3), "13.266");
        assert_eq!(radical_decimal(&r("2^1/2"), 10).unwrap(), "1.414213562");
        assert_eq!(radical_decimal(&r("2^-1/2"), 3).unwrap(), "0.707");
        assert_eq!(radical_decimal(&r("10^-3"), 2).unwrap(), "0.0010");
        assert_eq!(radical_decimal(&r("12"), 4).unwrap(), "12.00");
        assert_eq!(radical_decimal(&r("3^1/2"), 1).unwrap(), "2");
        assert!(radical_decimal(&r("2"), 0).is_err());
    }

    #[test]
    fn rounding_carry() {
        // 99.99 ≤ 9999^{1/2} < 100, rounding to 3 significant digits carries
        assert_eq!(radical_decimal(&r("9999^1/2"), 3).unwrap(), "100");
        assert_eq!(radical_decimal(&r("9999^1/2"), 6).unwrap(), "99.9950");
    }

    #[test]
    fn integer_radicals() {
        assert!(r("2^24 * 5^4").is_integer());
        assert!(!r("2^1/2").is_integer());
        assert_eq!(r("2^3 * 5^-1").to_rational(), Some(BigRational::new(8.into(), 5.into())));
    }

    #[test]
    fn generic_over_bigint() {
        let a: RadicalNumber<BigInt> = "2^7/4 * 5^7/8".parse().unwrap();
        assert_eq!(a.to_decimal(6).unwrap(), "13.7531");
        let b: RadicalNumber<i32> = "2^2 * 13^1/2".parse().unwrap();
        assert_eq!(b.truncated(3), "14.422");
    }

    #[test]
    fn padic_examples() {
        let c = padic_power_class(-7i64, 2).unwrap();
        assert!(c.is_power);
        assert_eq!(c.residue, 1);
        assert_eq!(c.witness, Some(1));
        let c = padic_power_class(17i64, 3).unwrap();
        assert!(c.is_power);
        assert_eq!(c.residue, 8);
        let w = c.witness.unwrap();
        assert_eq!(arith::pow_mod(w, 3, 9), 8);
        let c = padic_power_class(1i64, 5).unwrap();
        assert!(c.is_power);
        assert_eq!(c.witness, Some(1));
        assert!(!padic_power_class(2i64, 3).unwrap().is_power);
        assert!(!padic_power_class(3i64, 2).unwrap().is_power);
        assert!(padic_power_class(9i64, 3).is_err());
        assert!(padic_power_class(7i64, 4).is_err());
    }

    #[test]
    fn padic_witness_is_a_pth_root() {
        for p in [3u64, 5, 7, 11] {
            for u in 1..(p * p * 3) as i64 {
                if u as u64 % p == 0 {
                    continue;
                }
                let c = padic_power_class(u, p).unwrap();
                if let Some(w) = c.witness {
                    assert_eq!(arith::pow_mod(w, p, p * p), c.residue);
                }
            }
        }
    }
}
