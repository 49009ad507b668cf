//! Residue rings O/𝔪 by exhaustive enumeration, and the unit-group
//! computations built on them.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{Element, FiniteAbelianGroup, Lattice, MonogenicOrder, OrderError, Presentation, PrimeFactor};
use crate::arith::factorize;

/// Largest ring the enumeration will build.
pub const MAX_RING_SIZE: u128 = 1_000_000;

/// The finite ring O/𝔪 with elements indexed by canonical vectors.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    order: MonogenicOrder,
    modulus: Vec<(PrimeFactor, u32)>,
    ideal: Lattice,
    primes: Vec<Lattice>,
    size: usize,
}

fn mulmod_f(order: &MonogenicOrder, a: &[i128], b: &[i128], m: i128) -> Vec<i128> {
    let f = order.poly();
    let n = order.degree();
    let mut c = vec![0i128; (a.len() + b.len()).max(n + 1) - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % m;
        }
    }
    for k in (n..c.len()).rev() {
        let top = c[k];
        if top == 0 {
            continue;
        }
        for (i, &a) in f[..n].iter().enumerate() {
            c[k - n + i] = (c[k - n + i] - top * a as i128) % m;
        }
    }
    c.truncate(n);
    c
}

fn theta_power_multiples(order: &MonogenicOrder, v: &[i128], m: i128) -> Vec<Vec<i128>> {
    let n = order.degree();
    let mut theta = vec![0i128; n];
    if n > 1 {
        theta[1] = 1;
    } else {
        theta[0] = -(order.poly()[0] as i128);
    }
    let mut cur: Vec<i128> = v.to_vec();
    cur.resize(n, 0);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(cur.clone());
        cur = mulmod_f(order, &cur, &theta, m);
    }
    out
}

/// The ideal (q, φ(θ)) as a lattice.
pub(crate) fn prime_lattice(order: &MonogenicOrder, p: &PrimeFactor) -> Lattice {
    let q = p.q as i128;
    let phi: Vec<i128> = p.generator.iter().map(|&c| c as i128).collect();
    let reduced = mulmod_f(order, &phi, &[1], q.max(2) * q.max(2));
    Lattice::from_generators(order.degree(), &theta_power_multiples(order, &reduced, q), q)
}

fn lattice_product(order: &MonogenicOrder, a: &Lattice, b: &Lattice) -> Lattice {
    let m = a.modulus() * b.modulus();
    let mut gens = Vec::new();
    for x in a.rows() {
        for y in b.rows() {
            gens.push(mulmod_f(order, x, y, m));
        }
    }
    Lattice::from_generators(order.degree(), &gens, m)
}

fn prime_power_lattice(order: &MonogenicOrder, p: &PrimeFactor, k: u32) -> Lattice {
    let base = prime_lattice(order, p);
    let mut acc = Lattice::from_generators(order.degree(), &[], 1);
    for _ in 0..k {
        acc = lattice_product(order, &acc, &base);
    }
    acc
}

impl ResidueRing {
    pub fn new(order: &MonogenicOrder, modulus: &[(PrimeFactor, u32)]) -> Result<Self, OrderError> {
        let n = order.degree();
        let mut ideal = Lattice::from_generators(n, &[], 1);
        let mut primes = Vec::new();
        let mut expected: u128 = 1;
        for (p, k) in modulus {
            let pl = prime_lattice(order, p);
            if pl.index() != p.residue_field_size() as u128 {
                return Err(OrderError::ForeignPrime);
            }
            expected = expected.saturating_mul((p.residue_field_size() as u128).saturating_pow(*k));
            if expected > MAX_RING_SIZE {
                return Err(OrderError::TooLarge { size: expected });
            }
            ideal = lattice_product(order, &ideal, &prime_power_lattice(order, p, *k));
            primes.push(pl);
        }
        debug_assert_eq!(ideal.index(), expected);
        Ok(ResidueRing { order: order.clone(), modulus: modulus.to_vec(), size: ideal.index() as usize, ideal, primes })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> &[(PrimeFactor, u32)] {
        &self.modulus
    }

    pub fn one(&self) -> usize {
        self.reduce_vec(&[1])
    }

    pub fn reduce_vec(&self, v: &[i128]) -> usize {
        let m = self.ideal.modulus();
        let v: Vec<i128> = v.iter().map(|x| x.rem_euclid(m)).collect();
        self.ideal.encode(&self.ideal.reduce(&v))
    }

    /// Canonical coefficient vector of a ring element.
    pub fn vector(&self, x: usize) -> Vec<i128> {
        self.ideal.decode(x)
    }

    /// Reduction map from order elements; denominators must be prime to 𝔪.
    pub fn reduce(&self, e: &Element) -> Result<usize, OrderError> {
        let m = BigInt::from(self.ideal.modulus());
        let mut v = Vec::with_capacity(e.coeffs().len());
        for c in e.coeffs() {
            let den = c.denom();
            let inv = if den.is_one() {
                BigInt::one()
            } else {
                let g = den.extended_gcd(&m);
                if !g.gcd.is_one() {
                    return Err(OrderError::Denominator { den: den.to_string(), modulus: m.to_string() });
                }
                g.x
            };
            let r = (c.numer() * inv).mod_floor(&m);
            v.push(r.to_i128().expect("reduced below the modulus"));
        }
        Ok(self.reduce_vec(&v))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.ideal.modulus();
        self.reduce_vec(&mulmod_f(&self.order, &self.vector(a), &self.vector(b), m))
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, x: usize) -> bool {
        let v = self.vector(x);
        self.primes.iter().all(|p| !p.contains(&v))
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.is_unit(x)).collect()
    }

    /// ∏ (q^f − 1)·q^{f(k−1)} over the prime powers of the modulus.
    pub fn unit_count_formula(&self) -> u64 {
        self.modulus
            .iter()
            .filter(|(_, k)| *k > 0)
            .map(|(p, k)| (p.residue_field_size() - 1) * p.residue_field_size().pow(k - 1))
            .product()
    }
}

/// (O/𝔪)^* with its structure and explicit generators.
#[derive(Clone, Debug)]
pub struct ResidueRingUnits {
    pub ring: ResidueRing,
    pub units: Vec<usize>,
    pub presentation: Presentation,
    pub group: FiniteAbelianGroup,
    pub formula_count: u64,
}

impl ResidueRingUnits {
    /// Generators of the invariant-factor decomposition, as (order, vector).
    pub fn generators(&self) -> Vec<(u64, Vec<i128>)> {
        let exp = self.group.exponent().max(1) as i128;
        self.presentation
            .invariant_basis()
            .into_iter()
            .map(|(d, row)| {
                let x = self.presentation.generators.iter().zip(&row).fold(self.ring.one(), |acc, (&g, &e)| {
                    self.ring.mul(acc, self.ring.pow(g, e.rem_euclid(exp) as u64))
                });
                (d, self.ring.vector(x))
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationCheck {
    pub quotient: FiniteAbelianGroup,
    pub subgroup_order: u64,
    pub generated: bool,
}

pub fn residue_units(order: &MonogenicOrder, modulus: &[(PrimeFactor, u32)]) -> Result<ResidueRingUnits, OrderError> {
    let ring = ResidueRing::new(order, modulus)?;
    let units = ring.units();
    let presentation = Presentation::new(&units, ring.one(), |a, b| ring.mul(a, b));
    let group = presentation.structure();
    let formula_count = ring.unit_count_formula();
    Ok(ResidueRingUnits { ring, units, presentation, group, formula_count })
}

/// Multiplicative order of the image of `u` in O/𝔭.
pub fn image_order(order: &MonogenicOrder, p: &PrimeFactor, u: &Element) -> Result<u64, OrderError> {
    let ring = ResidueRing::new(order, &[(p.clone(), 1)])?;
    let x = ring.reduce(u)?;
    if !ring.is_unit(x) {
        return Err(OrderError::NotAUnit { q: p.q });
    }
    let mut ord = p.residue_field_size() - 1;
    for (r, _) in factorize(ord) {
        while ord % r == 0 && ring.pow(x, ord / r) == ring.one() {
            ord /= r;
        }
    }
    Ok(ord)
}

/// (O/𝔪)^* modulo the images of the global units. With class number 1 and
/// no real places this is the ray class group of conductor dividing 𝔪.
pub fn ray_class_order(
    order: &MonogenicOrder,
    modulus: &[(PrimeFactor, u32)],
    global_units: &[Element],
    class_number: u64,
) -> Result<FiniteAbelianGroup, OrderError> {
    if class_number != 1 {
        return Err(OrderError::ClassNumber(class_number));
    }
    let ru = residue_units(order, modulus)?;
    let mut images = Vec::with_capacity(global_units.len());
    for (index, u) in global_units.iter().enumerate() {
        let x = ru.ring.reduce(u).map_err(|_| OrderError::UnitNotCoprime { index })?;
        if !ru.ring.is_unit(x) {
            return Err(OrderError::UnitNotCoprime { index });
        }
        images.push(x);
    }
    Ok(ru.presentation.quotient(&images).expect("unit images lie in the unit group"))
}

/// Structure of (1+𝔭^i)/(1+𝔭^j) (the full (O/𝔭^j)^* when i = 0) and
/// whether the given units generate it.
pub fn filtration_check(
    order: &MonogenicOrder,
    p: &PrimeFactor,
    units: &[Element],
    i: u32,
    j: u32,
) -> Result<FiltrationCheck, OrderError> {
    if i >= j {
        return Err(OrderError::InvalidLevels { i, j });
    }
    let ring = ResidueRing::new(order, &[(p.clone(), j)])?;
    let level = prime_power_lattice(order, p, i);
    let one = ring.one();
    let in_level = |x: usize| -> bool {
        if i == 0 {
            return ring.is_unit(x);
        }
        let mut v = ring.vector(x);
        v[0] -= 1;
        level.contains(&v)
    };
    let mut images = Vec::with_capacity(units.len());
    for u in units {
        let x = ring.reduce(u)?;
        if !in_level(x) {
            return Err(OrderError::NotInLevel { level: i });
        }
        images.push(x);
    }
    let members: Vec<usize> = (0..ring.size()).filter(|&x| in_level(x)).collect();
    let quotient = Presentation::new(&members, one, |a, b| ring.mul(a, b)).structure();
    let mut seen: HashSet<usize> = HashSet::from([one]);
    let mut frontier = vec![one];
    while let Some(x) = frontier.pop() {
        for &g in &images {
            let y = ring.mul(x, g);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let subgroup_order = seen.len() as u64;
    Ok(FiltrationCheck { generated: subgroup_order == quotient.order(), quotient, subgroup_order })
}

/// Whether the image of `u` generates (1+𝔭^i)/(1+𝔭^j).
pub fn filtration_generated(
    order: &MonogenicOrder,
    p: &PrimeFactor,
    u: &Element,
    i: u32,
    j: u32,
) -> Result<bool, OrderError> {
    Ok(filtration_check(order, p, std::slice::from_ref(u), i, j)?.generated)
}
