//! Monogenic orders Z[θ] = Z[t]/(f): prime splitting, residue rings, unit
//! images, ray class groups and unit filtration quotients.
//!
//! Elements are polynomials in `t` with rational coefficients whose
//! denominators must be units at every prime where they are reduced. This
//! lets certificates name elements of the maximal order that lie outside
//! Z[θ] at primes dividing the index.

mod abelian;
mod fpoly;
mod lattice;
mod residue;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{euler_phi, is_prime, mult_order, valuation};

pub use abelian::{FiniteAbelianGroup, Presentation};
pub use fpoly::{Fp, Poly};
pub use lattice::Lattice;
pub use residue::{
    filtration_check, filtration_generated, image_order, ray_class_order, residue_units, FiltrationCheck, ResidueRing,
    ResidueRingUnits, MAX_RING_SIZE,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("defining polynomial must be monic of degree at least 1")]
    NotMonic,
    #[error("defining polynomial {0} is reducible over the rationals")]
    Reducible(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("index-obstructed: {q} divides the index obstruction {obstruction}")]
    IndexObstructed { q: u64, obstruction: u64 },
    #[error("Z[θ] is not maximal at {q}, although {q} does not divide the stated index obstruction")]
    NotMaximal { q: u64 },
    #[error("too-large: residue ring has {size} elements")]
    TooLarge { size: u128 },
    #[error("not-a-unit: element lies in the prime over {q}")]
    NotAUnit { q: u64 },
    #[error("unit-not-coprime: unit #{index} is not invertible modulo the modulus")]
    UnitNotCoprime { index: usize },
    #[error("not-in-level: element is not congruent to 1 modulo the prime power {level}")]
    NotInLevel { level: u32 },
    #[error("filtration levels must satisfy i < j, got {i} and {j}")]
    InvalidLevels { i: u32, j: u32 },
    #[error("denominator {den} is not invertible modulo {modulus}")]
    Denominator { den: String, modulus: String },
    #[error("class number {0} is not supported; only class number 1")]
    ClassNumber(u64),
    #[error("prime factor does not belong to this order")]
    ForeignPrime,
}

/// A prime of Z[θ] over the rational prime `q`, described as (q, φ(θ)).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeFactor {
    pub q: u64,
    pub e: u32,
    pub f: u32,
    pub g: u32,
    /// φ reduced mod q, coefficients low to high.
    pub generator: Vec<u64>,
}

impl PrimeFactor {
    pub fn residue_field_size(&self) -> u64 {
        self.q.pow(self.f)
    }
}

impl fmt::Display for PrimeFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phi: Vec<i64> = self.generator.iter().map(|&c| c as i64).collect();
        write!(f, "({}, {}) e={} f={} g={}", self.q, format_int_poly(&phi), self.e, self.f, self.g)
    }
}

/// An element of Q[t]/(f), stored on the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coeffs: Vec<BigRational>,
}

impl Element {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match k {
                0 => mag.to_string(),
                _ => {
                    let var = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{mag}*{var}")
                    }
                }
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

/// Z[θ] for a monic irreducible f, optionally flagged as Z[ζ_m].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicOrder {
    poly: Vec<i64>,
    label: Option<String>,
    conductor: Option<u64>,
    index_obstruction: u64,
}

impl MonogenicOrder {
    /// A non-cyclotomic order. `index_obstruction` is a multiple of the index
    /// [O_K : Z[θ]]; primes dividing it are refused by [`Self::factor_prime`].
    pub fn new(poly: Vec<i64>, index_obstruction: u64, label: Option<String>) -> Result<Self, OrderError> {
        let poly = trim_int(poly);
        if poly.len() < 2 || *poly.last().unwrap() != 1 {
            return Err(OrderError::NotMonic);
        }
        if !is_irreducible_over_q(&poly) {
            return Err(OrderError::Reducible(format_int_poly(&poly)));
        }
        Ok(MonogenicOrder { poly, label, conductor: None, index_obstruction: index_obstruction.max(1) })
    }

    /// Z[ζ_m], which is the maximal order of Q(ζ_m).
    pub fn cyclotomic(m: u64) -> Self {
        MonogenicOrder {
            poly: cyclotomic_poly(m),
            label: Some(format!("Q(zeta_{m})")),
            conductor: Some(m),
            index_obstruction: 1,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn poly(&self) -> &[i64] {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn conductor(&self) -> Option<u64> {
        self.conductor
    }

    /// True when the field has no real places.
    pub fn is_totally_imaginary(&self) -> bool {
        real_root_count(&self.poly) == 0
    }

    pub fn index_obstruction(&self) -> u64 {
        self.index_obstruction
    }

    pub fn one(&self) -> Element {
        self.from_integers(&[1])
    }

    pub fn theta(&self) -> Element {
        self.from_integers(&[0, 1])
    }

    pub fn from_integers(&self, c: &[i64]) -> Element {
        self.from_rationals(c.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
    }

    pub fn from_rationals(&self, c: Vec<BigRational>) -> Element {
        Element { coeffs: self.reduce_rational(c) }
    }

    /// Parses a polynomial string in `t`, e.g. `1 - t` or `-2/17*t^3 + t`.
    pub fn element(&self, s: &str) -> Result<Element, OrderError> {
        Ok(self.from_rationals(parse_rational_poly(s)?))
    }

    fn reduce_rational(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let n = self.degree();
        while c.len() > n {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - n;
            for (k, &a) in self.poly[..n].iter().enumerate() {
                c[shift + k] -= &top * BigInt::from(a);
            }
        }
        c.resize(n, BigRational::zero());
        c
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        Element { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let n = self.degree();
        let mut c = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Element { coeffs: self.reduce_rational(c) }
    }

    pub fn pow(&self, a: &Element, e: u32) -> Element {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Evaluates an integer polynomial (low to high) at `x`.
    pub fn eval(&self, p: &[i64], x: &Element) -> Element {
        p.iter().rev().fold(self.from_integers(&[0]), |acc, &c| self.add(&self.mul(&acc, x), &self.from_integers(&[c])))
    }

    /// The primes over `q` with their (e, f, g) data.
    pub fn factor_prime(&self, q: u64) -> Result<Vec<PrimeFactor>, OrderError> {
        if !is_prime(q) {
            return Err(OrderError::NotPrime(q));
        }
        if self.conductor.is_none() && self.index_obstruction % q == 0 {
            return Err(OrderError::IndexObstructed { q, obstruction: self.index_obstruction });
        }
        let fp = Fp::new(q);
        let factors = fp.factor(&fp.from_i64(&self.poly));
        if self.conductor.is_none() && !dedekind_maximal(&self.poly, q, &factors) {
            return Err(OrderError::NotMaximal { q });
        }
        let g = factors.len() as u32;
        let out: Vec<PrimeFactor> = factors
            .into_iter()
            .map(|(phi, e)| PrimeFactor { q, e, f: (phi.len() - 1) as u32, g, generator: phi })
            .collect();
        if let Some(m) = self.conductor {
            let (e, f, g) = cyclotomic_splitting(m, q);
            assert!(
                out.iter().all(|p| (p.e, p.f, p.g) == (e, f, g)),
                "cyclotomic splitting law disagrees with factorization of Φ_{m} mod {q}"
            );
        }
        Ok(out)
    }

    /// The unique prime over `q`, or the one whose generator is listed first.
    pub fn prime_over(&self, q: u64, which: usize) -> Result<PrimeFactor, OrderError> {
        self.factor_prime(q)?.into_iter().nth(which).ok_or(OrderError::ForeignPrime)
    }
}

/// (e, f, g) for q in Q(ζ_m).
pub fn cyclotomic_splitting(m: u64, q: u64) -> (u32, u32, u32) {
    let v = valuation(m, q);
    let mp = m / q.pow(v);
    let e = euler_phi(q.pow(v)) as u32;
    let f = mult_order(q % mp.max(1), mp).unwrap_or(1) as u32;
    let g = (euler_phi(m) as u32) / (e * f);
    (e, f, g)
}

/// Φ_m with integer coefficients, low to high.
pub fn cyclotomic_poly(m: u64) -> Vec<i64> {
    assert!(m >= 1);
    // x^m − 1 divided by Φ_d for the proper divisors d
    let mut num: Vec<i128> = vec![0; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in crate::arith::divisors(m) {
        if d == m {
            continue;
        }
        let den: Vec<i128> = cyclotomic_poly(d).into_iter().map(i128::from).collect();
        num = int_divexact_monic(&num, &den).expect("cyclotomic divisibility");
    }
    num.into_iter().map(|c| c as i64).collect()
}

fn trim_int(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Exact quotient by a monic divisor, or `None` when the remainder is nonzero.
fn int_divexact_monic(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return r.iter().all(|&x| x == 0).then(Vec::new);
    }
    let mut q = vec![0i128; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        q[k] = c;
        if c != 0 {
            for (i, &y) in b.iter().enumerate() {
                r[k + i] = r[k + i].checked_sub(c.checked_mul(y)?)?;
            }
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

/// Dedekind's criterion: Z[θ] is maximal at q iff gcd(F̄, ḡ, h̄) = 1.
fn dedekind_maximal(f: &[i64], q: u64, factors: &[(Poly, u32)]) -> bool {
    if factors.iter().all(|(_, e)| *e == 1) {
        return true;
    }
    let fp = Fp::new(q);
    let lift = |p: &Poly| -> Vec<i128> { p.iter().map(|&c| c as i128).collect() };
    let mut g: Vec<i128> = vec![1];
    let mut h: Vec<i128> = vec![1];
    for (phi, e) in factors {
        g = int_mul(&g, &lift(phi));
        for _ in 1..*e {
            h = int_mul(&h, &lift(phi));
        }
    }
    let gh = int_mul(&g, &h);
    let diff: Vec<i128> = (0..gh.len().max(f.len()))
        .map(|i| f.get(i).map_or(0, |&c| c as i128) - gh.get(i).copied().unwrap_or(0))
        .collect();
    debug_assert!(diff.iter().all(|c| c % q as i128 == 0));
    let big_f: Vec<i64> = diff.iter().map(|c| (c / q as i128).rem_euclid(q as i128) as i64).collect();
    let to_fp = |p: &[i128]| fp.trim(p.iter().map(|c| c.rem_euclid(q as i128) as u64).collect());
    let common = fp.gcd(&fp.gcd(&fp.from_i64(&big_f), &to_fp(&g)), &to_fp(&h));
    Fp::is_one(&common)
}

fn int_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut c = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Irreducibility over Q of a monic integer polynomial. Any monic factor of
/// degree k ≤ n/2 has coefficients bounded by C(k, j)·‖f‖₂ (Mignotte), so
/// it is recovered exactly from a factorization modulo a prime above twice
/// that bound.
pub fn is_irreducible_over_q(f: &[i64]) -> bool {
    let n = f.len() - 1;
    if n <= 1 {
        return true;
    }
    let norm2: f64 = f.iter().map(|&c| (c as f64) * (c as f64)).sum::<f64>().sqrt();
    let half = n as u64 / 2;
    let binom = (0..=half).flat_map(|k| (0..=k).map(move |j| binomial(k, j))).max().unwrap_or(1);
    let bound = (binom as f64 * norm2.ceil()) as u64 + 1;
    let mut q = 2 * bound + 1;
    let fp = loop {
        if is_prime(q) {
            let fp = Fp::new(q);
            let fq = fp.from_i64(f);
            if Fp::is_one(&fp.gcd(&fq, &fp.derivative(&fq))) {
                break fp;
            }
        }
        q += 1;
    };
    let factors: Vec<Poly> = fp.factor(&fp.from_i64(f)).into_iter().map(|(p, _)| p).collect();
    if factors.len() == 1 {
        return true;
    }
    let target: Vec<i128> = f.iter().map(|&c| c as i128).collect();
    let s = factors.len();
    for mask in 1u32..(1 << s) - 1 {
        let deg: usize = (0..s).filter(|i| mask >> i & 1 == 1).map(|i| factors[i].len() - 1).sum();
        if deg == 0 || deg > n / 2 {
            continue;
        }
        let prod = (0..s).filter(|i| mask >> i & 1 == 1).fold(vec![1u64], |acc, i| fp.mul(&acc, &factors[i]));
        let lifted: Vec<i128> =
            prod.iter().map(|&c| if c > q / 2 { c as i128 - q as i128 } else { c as i128 }).collect();
        if int_divexact_monic(&target, &lifted).is_some() {
            return false;
        }
    }
    true
}

/// Number of distinct real roots, by a Sturm sequence over the rationals.
pub fn real_root_count(f: &[i64]) -> usize {
    let to_q = |c: &i64| BigRational::from_integer(BigInt::from(*c));
    let f: Vec<BigRational> = trim_int(f.to_vec()).iter().map(to_q).collect();
    if f.len() < 2 {
        return 0;
    }
    let df: Vec<BigRational> = f.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    let mut seq = vec![f, df];
    loop {
        let r = rational_rem(&seq[seq.len() - 2], &seq[seq.len() - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    // signs at +∞ and −∞ are read off the leading terms
    let changes = |at_minus: bool| {
        let signs: Vec<bool> = seq
            .iter()
            .map(|p| {
                let lead = p.last().unwrap().is_positive();
                if at_minus && p.len() % 2 == 0 {
                    !lead
                } else {
                    lead
                }
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(true) - changes(false)
}

fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lead = b.last().unwrap();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / lead;
        let shift = r.len() - b.len();
        for (k, x) in b.iter().enumerate() {
            r[shift + k] -= &c * x;
        }
        r.pop();
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

pub fn format_int_poly(p: &[i64]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match k {
            0 => format!("{c}"),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{k}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

/// Parses `a/b*t^k` style terms joined by `+` and `-`.
pub fn parse_rational_poly(s: &str) -> Result<Vec<BigRational>, OrderError> {
    let err = |reason: &str| OrderError::Parse { input: s.to_string(), reason: reason.to_string() };
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(i > 0 && cur.ends_with('^')) {
            if !cur.is_empty() {
                terms.push((negative, std::mem::take(&mut cur)));
            } else if i > 0 {
                return Err(err("dangling sign"));
            }
            negative = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err("trailing sign"));
    }
    terms.push((negative, cur));
    let mut out: Vec<BigRational> = Vec::new();
    for (neg, body) in terms {
        let (coef_part, var_part) = match body.find('t') {
            Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
            None => (body.as_str(), None),
        };
        let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
        let coef = if coef_part.is_empty() {
            if var_part.is_none() {
                return Err(err("empty term"));
            }
            BigRational::one()
        } else {
            let (a, b) = match coef_part.split_once('/') {
                Some((a, b)) => (a, b),
                None => (coef_part, "1"),
            };
            let a: BigInt = a.parse().map_err(|_| err("bad coefficient"))?;
            let b: BigInt = b.parse().map_err(|_| err("bad denominator"))?;
            if b.is_zero() {
                return Err(err("zero denominator"));
            }
            BigRational::new(a, b)
        };
        let k: usize = match var_part {
            None => 0,
            Some("") => 1,
            Some(rest) => rest
                .strip_prefix('^')
                .ok_or_else(|| err("expected ^ after t"))?
                .parse()
                .map_err(|_| err("bad exponent"))?,
        };
        if out.len() <= k {
            out.resize(k + 1, BigRational::zero());
        }
        out[k] += if neg { -coef } else { coef };
    }
    Ok(out)
}

/// Parses a polynomial with integer coefficients.
pub fn parse_int_poly(s: &str) -> Result<Vec<i64>, OrderError> {
    parse_rational_poly(s)?
        .into_iter()
        .map(|c| if c.is_integer() { c.to_integer().to_i64().ok_or(()) } else { Err(()) })
        .collect::<Result<Vec<i64>, ()>>()
        .map(trim_int)
        .map_err(|_| OrderError::Parse { input: s.to_string(), reason: "coefficients must be machine integers".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_roots() {
        assert_eq!(real_root_count(&[-2, 0, 1]), 2);
        assert_eq!(real_root_count(&[1, 0, 1]), 0);
        assert_eq!(real_root_count(&[-1, -2, 1, 1]), 3);
        assert_eq!(real_root_count(&[-2, 0, 0, 1]), 1);
        assert_eq!(real_root_count(&[17, 4, -3, -2, 1]), 0);
        assert_eq!(real_root_count(&[5]), 0);
        assert_eq!(real_root_count(&cyclotomic_poly(20)), 0);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(20), vec![1, 0, -1, 0, 1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(7), vec![1; 7]);
    }

    #[test]
    fn parsing() {
        let p = parse_rational_poly("-62/847*t^5 + 9/121*t^4 - t + 3").unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p[5], BigRational::new((-62).into(), 847.into()));
        assert_eq!(p[1], BigRational::from_integer((-1).into()));
        assert_eq!(parse_int_poly("t^2 + 1").unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_int_poly("1 - t").unwrap(), vec![1, -1]);
        assert!(parse_int_poly("t/2").is_err());
        assert!(parse_rational_poly("t +").is_err());
        assert!(parse_rational_poly("3x").is_err());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_over_q(&[17, 4, -3, -2, 1]));
        assert!(is_irreducible_over_q(&[5, -8, 9, -2, 1]));
        assert!(is_irreducible_over_q(&[3, -9, 12, -9, 6, -3, 1]));
        assert!(is_irreducible_over_q(&[11, 11, 26, -9, 10, -1, 1]));
        // x⁴ + 4 = (x² + 2x + 2)(x² − 2x + 2)
        assert!(!is_irreducible_over_q(&[4, 0, 0, 0, 1]));
        // (x² + 1)(x² + 3) splits mod every prime into quadratics or worse
        assert!(!is_irreducible_over_q(&[3, 0, 4, 0, 1]));
        assert!(MonogenicOrder::new(vec![1, 0, 0, 1], 1, None).is_err());
    }

    #[test]
    fn cyclotomic_splitting_law() {
        assert_eq!(cyclotomic_splitting(20, 2), (2, 4, 1));
        assert_eq!(cyclotomic_splitting(20, 5), (4, 1, 2));
        assert_eq!(cyclotomic_splitting(12, 2), (2, 2, 1));
        assert_eq!(cyclotomic_splitting(12, 3), (2, 2, 1));
        assert_eq!(cyclotomic_splitting(7, 2), (1, 3, 2));
    }

    #[test]
    fn factor_prime_refuses_obstructed_primes() {
        let o = MonogenicOrder::new(vec![17, 4, -3, -2, 1], 17, None).unwrap();
        assert_eq!(o.factor_prime(17), Err(OrderError::IndexObstructed { q: 17, obstruction: 17 }));
        assert!(o.factor_prime(2).is_ok());
        // Z[√5] is not maximal at 2; a wrong obstruction is caught
        let bad = MonogenicOrder::new(vec![-5, 0, 1], 1, None).unwrap();
        assert_eq!(bad.factor_prime(2), Err(OrderError::NotMaximal { q: 2 }));
    }

    #[test]
    fn element_arithmetic() {
        let o = MonogenicOrder::cyclotomic(4);
        let i = o.theta();
        assert_eq!(o.mul(&i, &i), o.from_integers(&[-1]));
        let x = o.element("1/2 + 1/2*t").unwrap();
        assert_eq!(o.pow(&x, 2), o.element("1/2*t").unwrap());
        assert_eq!(x.to_string(), "1/2*t + 1/2");
        assert_eq!(x.denominator(), BigInt::from(2));
    }
}
