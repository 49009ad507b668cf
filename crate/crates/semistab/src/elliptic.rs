//! Long Weierstrass curves `y² + a1xy + a3y = x³ + a2x² + a4x + a6` over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith;
use crate::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EllipticError {
    #[error("singular curve: discriminant is zero")]
    Singular,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("conductor exponents are only computed at primes q ≥ 5, got {0}")]
    SmallPrime(u64),
    #[error("prime {0} exceeds the counting bound 10^5")]
    TooLarge(u64),
    #[error("cubic {0} is reducible over Q")]
    Reducible(String),
    #[error("leading coefficient is zero")]
    NotCubic,
}

const COUNT_BOUND: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve<T: Scalar> {
    pub a: [T; 5],
    pub b2: BigInt,
    pub b4: BigInt,
    pub b6: BigInt,
    pub b8: BigInt,
    pub c4: BigInt,
    pub c6: BigInt,
    pub discriminant: BigInt,
}

/// Reduction of the given model at a prime, read off from the singular point count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionType {
    Additive,
    SplitMultiplicative,
    NonsplitMultiplicative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reduction", rename_all = "kebab-case")]
pub enum PointCount {
    /// `count` includes the point at infinity; `a = q + 1 − count`.
    Good {
        count: u64,
        a: i64,
    },
    Bad {
        count: u64,
        kind: ReductionType,
    },
}

impl<T: Scalar> WeierstrassCurve<T> {
    pub fn new(a1: T, a2: T, a3: T, a4: T, a6: T) -> Result<Self, EllipticError> {
        let [a1b, a2b, a3b, a4b, a6b] = [&a1, &a2, &a3, &a4, &a6].map(|x| x.to_bigint().unwrap());
        let b2 = &a1b * &a1b + 4 * &a2b;
        let b4 = 2 * &a4b + &a1b * &a3b;
        let b6 = &a3b * &a3b + 4 * &a6b;
        let b8 = &a1b * &a1b * &a6b + 4 * &a2b * &a6b - &a1b * &a3b * &a4b + &a2b * &a3b * &a3b - &a4b * &a4b;
        let c4 = &b2 * &b2 - 24 * &b4;
        let cube: BigInt = &b2 * &b2 * &b2;
        let c6: BigInt = 36 * &b2 * &b4 - 216 * &b6 - cube;
        let b2b2b8: BigInt = &b2 * &b2 * &b8;
        let discriminant: BigInt = 9 * &b2 * &b4 * &b6 - b2b2b8 - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6;
        if discriminant.is_zero() {
            return Err(EllipticError::Singular);
        }
        Ok(WeierstrassCurve { a: [a1, a2, a3, a4, a6], b2, b4, b6, b8, c4, c6, discriminant })
    }

    pub fn from_coeffs(a: [T; 5]) -> Result<Self, EllipticError> {
        let [a1, a2, a3, a4, a6] = a;
        Self::new(a1, a2, a3, a4, a6)
    }

    fn reduced(&self, q: u64) -> [u64; 5] {
        let m = BigInt::from(q);
        self.a.clone().map(|x| x.to_bigint().unwrap().mod_floor(&m).to_u64().unwrap())
    }

    pub fn has_good_reduction(&self, q: u64) -> bool {
        !(&self.discriminant % q).is_zero()
    }

    /// Projective points over F_q by a per-`x` count of solutions in `y`.
    pub fn count_points(&self, q: u64) -> Result<PointCount, EllipticError> {
        check_prime(q)?;
        let count = if q == 2 {
            self.count_points_naive(q)?
        } else {
            // (2y + a1x + a3)² = 4x³ + b2x² + 2b4x + b6
            let m = BigInt::from(q);
            let c = [&self.b6, &(2 * &self.b4), &self.b2].map(|v| v.mod_floor(&m).to_u64().unwrap());
            let mut n = 1u64;
            for x in 0..q {
                let x2 = arith::mul_mod(x, x, q);
                let x3 = arith::mul_mod(x2, x, q);
                let d = (4 * x3 % q + arith::mul_mod(c[2], x2, q) + arith::mul_mod(c[1], x, q) + c[0]) % q;
                n += (1 + arith::legendre(d as i64, q)) as u64;
            }
            n
        };
        Ok(self.classify(q, count))
    }

    /// Exhaustive double loop over `F_q × F_q` plus the point at infinity.
    pub fn count_points_naive(&self, q: u64) -> Result<u64, EllipticError> {
        check_prime(q)?;
        let [a1, a2, a3, a4, a6] = self.reduced(q);
        let mut n = 1u64;
        for x in 0..q {
            let rhs = (arith::mul_mod(arith::mul_mod(x, x, q), x, q)
                + arith::mul_mod(a2, arith::mul_mod(x, x, q), q)
                + arith::mul_mod(a4, x, q)
                + a6)
                % q;
            let lin = (arith::mul_mod(a1, x, q) + a3) % q;
            for y in 0..q {
                let lhs = (arith::mul_mod(y, y, q) + arith::mul_mod(lin, y, q)) % q;
                if lhs == rhs {
                    n += 1;
                }
            }
        }
        Ok(n)
    }

    fn classify(&self, q: u64, count: u64) -> PointCount {
        if self.has_good_reduction(q) {
            return PointCount::Good { count, a: q as i64 + 1 - count as i64 };
        }
        // the singular point plus q, q − 1 or q + 1 nonsingular points
        let kind = match count as i64 - q as i64 {
            1 => ReductionType::Additive,
            0 => ReductionType::SplitMultiplicative,
            _ => ReductionType::NonsplitMultiplicative,
        };
        PointCount::Bad { count, kind }
    }

    /// Trace of Frobenius at a prime of good reduction.
    pub fn a_p(&self, q: u64) -> Result<i64, EllipticError> {
        match self.count_points(q)? {
            PointCount::Good { a, .. } => Ok(a),
            PointCount::Bad { .. } => Err(EllipticError::BadReduction(q)),
        }
    }

    /// Exponent of `q` in the conductor for `q ≥ 5`.
    pub fn conductor_exponent(&self, q: u64) -> Result<u32, EllipticError> {
        check_prime(q)?;
        if q < 5 {
            return Err(EllipticError::SmallPrime(q));
        }
        let qb = BigInt::from(q);
        let (mut c4, mut c6, mut d) = (self.c4.clone(), self.c6.clone(), self.discriminant.clone());
        // at q ≥ 5 a model is non-minimal iff q⁴ | c4, q⁶ | c6, q¹² | Δ
        while val(&c4, &qb) >= 4 && val(&c6, &qb) >= 6 && val(&d, &qb) >= 12 {
            c4 /= qb.pow(4);
            c6 /= qb.pow(6);
            d /= qb.pow(12);
        }
        Ok(if val(&d, &qb) == 0 {
            0
        } else if val(&c4, &qb) == 0 {
            1
        } else {
            2
        })
    }

    /// `a_q ≡ 0 (mod q)` at a prime of good reduction.
    pub fn is_supersingular(&self, q: u64) -> Result<bool, EllipticError> {
        Ok(self.a_p(q)?.rem_euclid(q as i64) == 0)
    }

    /// The cubic `4x³ + b2x² + 2b4x + b6` whose roots are the x-coordinates of
    /// the nontrivial 2-torsion points.
    pub fn two_division_cubic(&self) -> Cubic {
        Cubic::new([BigInt::from(4), self.b2.clone(), 2 * &self.b4, self.b6.clone()]).expect("leading coefficient 4")
    }

    /// The curve in coordinates `x = x' + r`, `y = y' + s x' + t`.
    pub fn change_coordinates(&self, r: T, s: T, t: T) -> Result<Self, EllipticError> {
        let [a1, a2, a3, a4, a6] = self.a.clone();
        let two = T::one() + T::one();
        let three = two.clone() + T::one();
        let n1 = a1.clone() + two.clone() * s.clone();
        let n2 = a2.clone() - s.clone() * a1.clone() + three.clone() * r.clone() - s.clone() * s.clone();
        let n3 = a3.clone() + r.clone() * a1.clone() + two.clone() * t.clone();
        let n4 = a4.clone() - s.clone() * a3.clone() + two.clone() * r.clone() * a2.clone()
            - (t.clone() + r.clone() * s.clone()) * a1.clone()
            + three * r.clone() * r.clone()
            - two * s * t.clone();
        let n6 = a6 + r.clone() * a4 + r.clone() * r.clone() * a2 + r.clone() * r.clone() * r.clone()
            - t.clone() * a3
            - t.clone() * t.clone()
            - r * t * a1;
        Self::new(n1, n2, n3, n4, n6)
    }
}

fn check_prime(q: u64) -> Result<(), EllipticError> {
    if !arith::is_prime(q) {
        return Err(EllipticError::NotPrime(q));
    }
    if q > COUNT_BOUND {
        return Err(EllipticError::TooLarge(q));
    }
    Ok(())
}

fn val(x: &BigInt, q: &BigInt) -> u32 {
    if x.is_zero() {
        return u32::MAX;
    }
    let mut x = x.clone();
    let mut v = 0;
    while (&x % q).is_zero() {
        x /= q;
        v += 1;
    }
    v
}

/// Integer cubic `c3 x³ + c2 x² + c1 x + c0`, coefficients high to low.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub coeffs: [BigInt; 4],
}

impl Cubic {
    pub fn new(coeffs: [BigInt; 4]) -> Result<Self, EllipticError> {
        if coeffs[0].is_zero() {
            return Err(EllipticError::NotCubic);
        }
        Ok(Cubic { coeffs })
    }

    pub fn from_i64(c: [i64; 4]) -> Result<Self, EllipticError> {
        Self::new(c.map(BigInt::from))
    }

    pub fn discriminant(&self) -> BigInt {
        let [a, b, c, d] = &self.coeffs;
        b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
    }

    /// Signed squarefree part of the discriminant.
    pub fn square_class(&self) -> BigInt {
        squarefree_part(&self.discriminant())
    }

    /// Whether some `a/b` with `b | c3`, `a | c0` is a root.
    pub fn has_rational_root(&self) -> bool {
        let [c3, _, _, c0] = &self.coeffs;
        if c0.is_zero() {
            return true;
        }
        let nums = int_divisors(c0);
        let dens = int_divisors(c3);
        for n in &nums {
            for d in &dens {
                for sign in [1, -1] {
                    let n = n * sign;
                    // d³ f(n/d) = c3 n³ + c2 n² d + c1 n d² + c0 d³
                    let [a, b, c, e] = &self.coeffs;
                    let v: BigInt = a * &n * &n * &n + b * &n * &n * d + c * &n * d * d + e * d * d * d;
                    if v.is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Number of roots in F_q (counted without multiplicity).
    pub fn roots_mod(&self, q: u64) -> usize {
        let m = BigInt::from(q);
        let c = self.coeffs.clone().map(|v| v.mod_floor(&m).to_u64().unwrap());
        (0..q)
            .filter(|&x| {
                let v = c.iter().fold(0u64, |acc, &k| (arith::mul_mod(acc, x, q) + k) % q);
                v == 0
            })
            .count()
    }
}

impl std::fmt::Display for Cubic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "{a}x^3 + {b}x^2 + {c}x + {d}")
    }
}

fn int_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs().to_u64().expect("cubic coefficients fit u64");
    arith::divisors(n).into_iter().map(BigInt::from).collect()
}

fn squarefree_part(n: &BigInt) -> BigInt {
    let sign = if n.is_negative() { -1 } else { 1 };
    let m = n.abs().to_u64().expect("discriminant fits u64");
    let core: u64 = arith::factorize(m).into_iter().filter(|&(_, k)| k % 2 == 1).map(|(p, _)| p).product();
    BigInt::from(core) * sign
}

/// Evidence that two irreducible cubics share a splitting field: equal
/// discriminant square classes and equal root counts modulo every good prime
/// up to the bound. Agreement is necessary, not sufficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingEvidence {
    pub square_class_match: bool,
    pub primes_checked: usize,
    /// First prime where the root counts differ, with both counts.
    pub mismatch: Option<(u64, usize, usize)>,
    pub pass: bool,
}

pub fn same_splitting_field_evidence(
    f: &Cubic,
    g: &Cubic,
    prime_bound: u64,
) -> Result<SplittingEvidence, EllipticError> {
    for c in [f, g] {
        if c.has_rational_root() {
            return Err(EllipticError::Reducible(c.to_string()));
        }
    }
    let df = f.discriminant();
    let dg = g.discriminant();
    let square_class_match = f.square_class() == g.square_class();
    let bad = &df * &dg * &f.coeffs[0] * &g.coeffs[0];
    let mut primes_checked = 0;
    let mut mismatch = None;
    for q in arith::primes_up_to(prime_bound) {
        if (&bad % q).is_zero() {
            continue;
        }
        primes_checked += 1;
        let (rf, rg) = (f.roots_mod(q), g.roots_mod(q));
        if rf != rg {
            mismatch = Some((q, rf, rg));
            break;
        }
    }
    let pass = square_class_match && mismatch.is_none();
    Ok(SplittingEvidence { square_class_match, primes_checked, mismatch, pass })
}

/// Sign-aware helper used by certificates: `a ≡ b (mod m)`.
pub fn congruent(a: i64, b: i64, m: i64) -> bool {
    (a - b).rem_euclid(m) == 0
}

impl<T: Scalar> WeierstrassCurve<T> {
    /// Bound `|a_q| ≤ 2√q`, checked exactly as `a_q² ≤ 4q`.
    pub fn hasse_holds(&self, q: u64) -> Result<bool, EllipticError> {
        let a = self.a_p(q)?;
        Ok(BigInt::from(a) * a <= BigInt::from(4u64) * q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Curve;

    fn x011() -> Curve {
        Curve::new(0, -1, 1, -10, -20).unwrap()
    }
    fn c121d() -> Curve {
        Curve::new(0, -1, 1, -7, 10).unwrap()
    }
    fn c49() -> Curve {
        Curve::new(1, -1, 0, -2, -1).unwrap()
    }

    #[test]
    fn derived_quantities() {
        let e = x011();
        assert_eq!(e.b2, BigInt::from(-4));
        assert_eq!(e.b4, BigInt::from(-20));
        assert_eq!(e.b6, BigInt::from(-79));
        assert_eq!(e.c4, BigInt::from(496));
        assert_eq!(e.discriminant, BigInt::from(-161051));
        let f = c49();
        assert_eq!(f.c4, BigInt::from(105));
        assert_eq!(f.discriminant, BigInt::from(-343));
        for e in [x011(), c121d(), c49()] {
            assert_eq!(4 * &e.b8, &e.b2 * &e.b6 - &e.b4 * &e.b4);
            assert_eq!(1728 * &e.discriminant, e.c4.pow(3) - e.c6.pow(2));
        }
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(Curve::new(0, 0, 0, 0, 0), Err(EllipticError::Singular));
    }

    #[test]
    fn traces() {
        let a: Vec<i64> = [2, 3, 5, 7].iter().map(|&q| x011().a_p(q).unwrap()).collect();
        assert_eq!(a, vec![-2, -1, 1, -2]);
        let b: Vec<i64> = [2, 3, 5, 7].iter().map(|&q| c121d().a_p(q).unwrap()).collect();
        assert_eq!(b, vec![0, -1, -3, 0]);
    }

    #[test]
    fn naive_count_agrees() {
        for e in [x011(), c121d(), c49()] {
            for q in arith::primes_up_to(200) {
                let n = e.count_points_naive(q).unwrap();
                let fast = match e.count_points(q).unwrap() {
                    PointCount::Good { count, .. } | PointCount::Bad { count, .. } => count,
                };
                assert_eq!(n, fast, "q = {q}");
            }
        }
    }

    #[test]
    fn bad_reduction_types() {
        assert_eq!(
            x011().count_points(11).unwrap(),
            PointCount::Bad { count: 11, kind: ReductionType::SplitMultiplicative }
        );
        assert!(matches!(c121d().count_points(11).unwrap(), PointCount::Bad { kind: ReductionType::Additive, .. }));
        assert!(matches!(c49().count_points(7).unwrap(), PointCount::Bad { kind: ReductionType::Additive, .. }));
        assert_eq!(x011().a_p(11), Err(EllipticError::BadReduction(11)));
    }

    #[test]
    fn conductors() {
        assert_eq!(x011().conductor_exponent(11).unwrap(), 1);
        assert_eq!(c121d().conductor_exponent(11).unwrap(), 2);
        assert_eq!(c49().conductor_exponent(7).unwrap(), 2);
        assert_eq!(x011().conductor_exponent(5).unwrap(), 0);
        assert_eq!(x011().conductor_exponent(3), Err(EllipticError::SmallPrime(3)));
        // a non-minimal model: scale X₀(11) by u = 5
        let scaled = Curve::new(0, -25, 125, -10 * 5i64.pow(4), -20 * 5i64.pow(6)).unwrap();
        assert_eq!(scaled.conductor_exponent(5).unwrap(), 0);
    }

    #[test]
    fn supersingularity() {
        assert!(x011().is_supersingular(2).unwrap());
        assert!(c121d().is_supersingular(2).unwrap());
        assert!(!x011().is_supersingular(3).unwrap());
        assert!(x011().is_supersingular(11).is_err());
    }

    #[test]
    fn two_division() {
        let c = x011().two_division_cubic();
        assert_eq!(c, Cubic::from_i64([4, -4, -40, -79]).unwrap());
        assert_eq!(c.discriminant(), 16 * &x011().discriminant);
        assert_eq!(c.square_class(), BigInt::from(-11));
        let c = c49().two_division_cubic();
        assert!(c.has_rational_root());
        let v = &c.coeffs;
        let at_two: BigInt = &v[0] * 8 + &v[1] * 4 + &v[2] * 2 + &v[3];
        assert!(at_two.is_zero());
        let toy = Curve::new(0, 0, 0, 1, 0).unwrap().two_division_cubic();
        assert_eq!(toy, Cubic::from_i64([4, 0, 4, 0]).unwrap());
    }

    #[test]
    fn splitting_evidence() {
        let f = x011().two_division_cubic();
        let g = Cubic::from_i64([1, 1, 1, -1]).unwrap();
        assert_eq!(g.discriminant(), BigInt::from(-44));
        let ev = same_splitting_field_evidence(&f, &g, 10_000).unwrap();
        assert!(ev.pass, "{ev:?}");
        assert!(ev.primes_checked > 1000);
        assert!(same_splitting_field_evidence(&g, &g, 100).unwrap().pass);
        let h = Cubic::from_i64([1, 0, 0, -2]).unwrap();
        let k = Cubic::from_i64([1, 0, 0, -3]).unwrap();
        let ev = same_splitting_field_evidence(&h, &k, 1000).unwrap();
        // -108 and -243 lie in the same square class; the root counts differ
        assert!(ev.square_class_match);
        assert!(!ev.pass);
        assert!(ev.mismatch.is_some());
        let red = Cubic::from_i64([4, 0, 4, 0]).unwrap();
        assert!(matches!(same_splitting_field_evidence(&red, &g, 10), Err(EllipticError::Reducible(_))));
    }

    #[test]
    fn generic_over_bigint() {
        let e = WeierstrassCurve::<BigInt>::new(0.into(), (-1).into(), 1.into(), (-10).into(), (-20).into()).unwrap();
        assert_eq!(e.a_p(7).unwrap(), -2);
    }

    #[test]
    fn coordinate_change_preserves_counts() {
        let e = x011().change_coordinates(3, -2, 5).unwrap();
        assert_eq!(e.discriminant, x011().discriminant);
        for q in [2, 3, 5, 7, 13] {
            assert_eq!(e.a_p(q).unwrap(), x011().a_p(q).unwrap());
        }
    }
}
