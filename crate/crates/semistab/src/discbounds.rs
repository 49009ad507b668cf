//! Root discriminants from character conductors and towers, discriminant
//! budgets, and degree bounds read from a table of lower bounds `b(n)`.

use std::cmp::Ordering;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::Pow;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::exactnum::ExactError;
use crate::Radical;

const FACTOR_BOUND: u64 = 1_000_000_000;
const CYCLOTOMIC_BOUND: u64 = 10_000;

#[derive(Debug, Error)]
pub enum DiscError {
    #[error("conductor {0} exceeds the factoring bound 10^9")]
    NonFactorable(u64),
    #[error("conductor list must be nonempty and contain 1")]
    MissingTrivial,
    #[error("conductor 0 is not allowed")]
    ZeroConductor,
    #[error("cyclotomic conductor must lie in 1..=10^4, got {0}")]
    CyclotomicRange(u64),
    #[error("relative discriminant norm {0} is not a positive integer")]
    NonIntegralNorm(String),
    #[error("degrees must be positive")]
    ZeroDegree,
    #[error("l and p must be distinct primes, got l = {l}, p = {p}")]
    BadPair { l: u64, p: u64 },
    #[error("table line {line}: {reason}")]
    TableParse { line: usize, reason: String },
    #[error("table is empty")]
    EmptyTable,
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Conductors of all characters of an abelian field, one per character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterConductorSet {
    conductors: Vec<u64>,
}

impl CharacterConductorSet {
    pub fn new(mut conductors: Vec<u64>) -> Result<Self, DiscError> {
        if conductors.contains(&0) {
            return Err(DiscError::ZeroConductor);
        }
        if !conductors.contains(&1) {
            return Err(DiscError::MissingTrivial);
        }
        conductors.sort_unstable();
        Ok(CharacterConductorSet { conductors })
    }

    pub fn degree(&self) -> usize {
        self.conductors.len()
    }

    pub fn conductors(&self) -> &[u64] {
        &self.conductors
    }

    /// The character group of a compositum of linearly disjoint abelian
    /// fields: conductors of products `χψ` where the two conductors are coprime.
    pub fn product_coprime(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.degree() * other.degree());
        for a in &self.conductors {
            for b in &other.conductors {
                out.push(a * b);
            }
        }
        CharacterConductorSet::new(out).expect("contains 1 · 1")
    }
}

/// `(∏ f_χ)^{1/n}` as an exact radical.
pub fn rd_from_conductors(c: &CharacterConductorSet) -> Result<Radical, DiscError> {
    let mut acc = Radical::one();
    for &f in c.conductors() {
        if f > FACTOR_BOUND {
            return Err(DiscError::NonFactorable(f));
        }
        acc = acc.mul(&Radical::from_integer(f)?);
    }
    Ok(acc.root(c.degree() as u64)?)
}

/// Characters of `(Z/q^v)^*` as exponent vectors against fixed generators,
/// with a discrete-log table for evaluating them.
struct LocalCharacters {
    q: u64,
    v: u32,
    modulus: u64,
    gens: Vec<(u64, u64)>,
    log: std::collections::HashMap<u64, Vec<u64>>,
}

impl LocalCharacters {
    fn new(q: u64, v: u32) -> Self {
        let modulus = q.pow(v);
        let gens: Vec<(u64, u64)> = if q == 2 {
            match v {
                1 => vec![],
                2 => vec![(modulus - 1, 2)],
                _ => vec![(modulus - 1, 2), (5, 1 << (v - 2))],
            }
        } else {
            let phi = arith::euler_phi(modulus);
            let g = (2..modulus)
                .find(|&g| arith::mult_order(g, modulus) == Some(phi))
                .expect("odd prime powers have primitive roots");
            vec![(g, phi)]
        };
        let mut log = std::collections::HashMap::new();
        let mut frontier = vec![(1u64 % modulus.max(2), vec![0u64; gens.len()])];
        for (i, &(g, n)) in gens.iter().enumerate() {
            let mut next = Vec::new();
            for (x, e) in &frontier {
                let mut y = *x;
                for k in 0..n {
                    let mut ek = e.clone();
                    ek[i] = k;
                    next.push((y, ek));
                    y = arith::mul_mod(y, g, modulus);
                }
            }
            frontier = next;
        }
        for (x, e) in frontier {
            log.insert(x % modulus.max(1), e);
        }
        LocalCharacters { q, v, modulus, gens, log }
    }

    fn characters(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for &(_, n) in &self.gens {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..n).map(move |k| {
                        let mut c = c.clone();
                        c.push(k);
                        c
                    })
                })
                .collect();
        }
        out
    }

    fn is_trivial_at(&self, chi: &[u64], x: u64) -> bool {
        let e = &self.log[&(x % self.modulus)];
        // χ(x) = exp(2πi Σ k_i e_i / n_i)
        let l = self.gens.iter().fold(1u64, |acc, &(_, n)| num_integer::lcm(acc, n));
        let s: u64 = chi.iter().zip(e).zip(&self.gens).map(|((k, e), (_, n))| k * e % n * (l / n)).sum();
        s % l == 0
    }

    /// Least `j` such that `χ` factors through `(Z/q^j)^*`.
    fn conductor_exponent(&self, chi: &[u64]) -> u32 {
        if chi.iter().all(|&k| k == 0) {
            return 0;
        }
        for j in 1..self.v {
            let generators: Vec<u64> = if self.q == 2 && j == 1 {
                vec![self.modulus - 1, 5 % self.modulus]
            } else {
                vec![(1 + self.q.pow(j)) % self.modulus]
            };
            if generators.iter().all(|&h| self.is_trivial_at(chi, h)) {
                return j;
            }
        }
        self.v
    }
}

/// Conductors of all Dirichlet characters modulo `m`, i.e. of the characters
/// of `Gal(Q(ζ_m)/Q)`.
pub fn cyclotomic_conductors(m: u64) -> Result<CharacterConductorSet, DiscError> {
    if m == 0 || m > CYCLOTOMIC_BOUND {
        return Err(DiscError::CyclotomicRange(m));
    }
    let mut conductors = vec![1u64];
    for (q, v) in arith::factorize(m) {
        let local = LocalCharacters::new(q, v);
        let local_conds: Vec<u64> = local.characters().iter().map(|chi| q.pow(local.conductor_exponent(chi))).collect();
        conductors = conductors.iter().flat_map(|a| local_conds.iter().map(move |b| a * b)).collect();
    }
    CharacterConductorSet::new(conductors)
}

/// `m · ∏_{p | m} p^{−1/(p−1)}`.
pub fn cyclotomic_rd_closed_form(m: u64) -> Result<Radical, DiscError> {
    let mut acc = Radical::from_integer(m)?;
    for (p, _) in arith::factorize(m) {
        acc = acc.mul(&Radical::prime_power(p, -1, p as i64 - 1)?);
    }
    Ok(acc)
}

/// `|d_L| = N(d_{L/K}) · |d_K|^m` rewritten for root discriminants:
/// `rd(L) = N(d_{L/K})^{1/(n m)} · rd(K)`.
pub fn rd_tower(base_rd: &Radical, base_deg: u64, rel_deg: u64, norm_rel_disc: &Radical) -> Result<Radical, DiscError> {
    if base_deg == 0 || rel_deg == 0 {
        return Err(DiscError::ZeroDegree);
    }
    if !norm_rel_disc.is_integer() {
        return Err(DiscError::NonIntegralNorm(norm_rel_disc.to_string()));
    }
    Ok(norm_rel_disc.root(base_deg * rel_deg)?.mul(base_rd))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Semistable,
    Tame,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "semistable" => Ok(Mode::Semistable),
            "tame" => Ok(Mode::Tame),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantBudget {
    pub l: u64,
    pub p: u64,
    pub mode: Mode,
    pub value: Radical,
}

/// Semistable: `l^{1−1/p} p^{1+1/(p−1)}`. Tame: `l · p^{1+1/(p−1)}`.
pub fn budget(l: u64, p: u64, mode: Mode) -> Result<DiscriminantBudget, DiscError> {
    if l == p || !arith::is_prime(l) || !arith::is_prime(p) {
        return Err(DiscError::BadPair { l, p });
    }
    let pi = p as i64;
    let p_part = Radical::prime_power(p, pi, pi - 1)?;
    let l_part = match mode {
        Mode::Semistable => Radical::prime_power(l, pi - 1, pi)?,
        Mode::Tame => Radical::prime_power(l, 1, 1)?,
    };
    Ok(DiscriminantBudget { l, p, mode, value: l_part.mul(&p_part) })
}

/// Rows `(n, b(n))`: every number field of degree `≥ n` has root
/// discriminant at least `b(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdlyzkoTable {
    rows: Vec<(u32, BigRational)>,
    /// Places after the decimal point in the source file (largest seen).
    pub precision: usize,
}

const BUNDLED_TABLE: &str = include_str!("../data/odlyzko.txt");

impl OdlyzkoTable {
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_TABLE).expect("bundled table is well formed")
    }

    pub fn load(path: &Path) -> Result<Self, DiscError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| DiscError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, DiscError> {
        let mut rows: Vec<(u32, BigRational)> = Vec::new();
        let mut precision = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |reason: String| DiscError::TableParse { line, reason };
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            let mut parts = s.split_whitespace();
            let (Some(n), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(format!("expected `degree bound`, got {s:?}")));
            };
            let n: u32 = n.parse().map_err(|_| err(format!("bad degree {n:?}")))?;
            let (b, places) = parse_decimal(b).ok_or_else(|| err(format!("bad decimal {b:?}")))?;
            precision = precision.max(places);
            if let Some((pn, pb)) = rows.last() {
                if n <= *pn {
                    return Err(err(format!("degree {n} does not increase past {pn}")));
                }
                if b < *pb {
                    return Err(err(format!("bound for degree {n} decreases")));
                }
            }
            rows.push((n, b));
        }
        if rows.is_empty() {
            return Err(DiscError::EmptyTable);
        }
        Ok(OdlyzkoTable { rows, precision })
    }

    pub fn rows(&self) -> &[(u32, BigRational)] {
        &self.rows
    }

    pub fn bound_at(&self, n: u32) -> Option<&BigRational> {
        self.rows.iter().find(|(m, _)| *m == n).map(|(_, b)| b)
    }
}

fn parse_decimal(s: &str) -> Option<(BigRational, usize)> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() || !int.bytes().all(|c| c.is_ascii_digit()) || !frac.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let den = Pow::pow(BigInt::from(10), frac.len() as u32);
    Some((Ratio::new(digits, den), frac.len()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "degree", rename_all = "kebab-case")]
pub enum DegreeBound {
    /// Every field with root discriminant below `δ` has degree at most this.
    AtMost(u32),
    /// `δ` exceeds the last row, the table proves nothing.
    Exhausted,
}

/// Largest `n` with `b(n) < δ`, decided by exact comparison of the radical
/// against the table's rational entries.
pub fn degree_bound(table: &OdlyzkoTable, delta: &Radical) -> DegreeBound {
    for (n, b) in table.rows() {
        if delta.cmp_rational(b) != Ordering::Greater {
            return DegreeBound::AtMost(n - 1);
        }
    }
    DegreeBound::Exhausted
}

impl DegreeBound {
    pub fn degree(&self) -> Option<u32> {
        match self {
            DegreeBound::AtMost(n) => Some(*n),
            DegreeBound::Exhausted => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Radical {
        s.parse().unwrap()
    }

    fn conductors(m: u64) -> Vec<u64> {
        cyclotomic_conductors(m).unwrap().conductors().to_vec()
    }

    #[test]
    fn cyclotomic_conductor_lists() {
        assert_eq!(conductors(12), vec![1, 3, 4, 12]);
        assert_eq!(conductors(20), vec![1, 4, 5, 5, 5, 20, 20, 20]);
        assert_eq!(conductors(1), vec![1]);
        assert_eq!(conductors(8), vec![1, 4, 8, 8]);
        assert_eq!(conductors(9), vec![1, 3, 9, 9, 9, 9]);
        assert_eq!(conductors(2), vec![1]);
    }

    #[test]
    fn rd_examples() {
        let c = CharacterConductorSet::new(vec![1, 3, 4, 12]).unwrap();
        assert_eq!(rd_from_conductors(&c).unwrap(), r("2 * 3^1/2"));
        let c = CharacterConductorSet::new(vec![1, 4, 8, 8, 13, 52, 104, 104]).unwrap();
        assert_eq!(rd_from_conductors(&c).unwrap(), r("4 * 13^1/2"));
        let c = CharacterConductorSet::new(vec![1]).unwrap();
        assert!(rd_from_conductors(&c).unwrap().is_one());
        assert_eq!(rd_from_conductors(&cyclotomic_conductors(20).unwrap()).unwrap(), r("10 * 5^-1/4"));
    }

    #[test]
    fn conductor_set_validation() {
        assert!(matches!(CharacterConductorSet::new(vec![3, 4]), Err(DiscError::MissingTrivial)));
        assert!(matches!(CharacterConductorSet::new(vec![]), Err(DiscError::MissingTrivial)));
        assert!(matches!(CharacterConductorSet::new(vec![1, 0]), Err(DiscError::ZeroConductor)));
        let big = CharacterConductorSet::new(vec![1, 2_000_000_011]).unwrap();
        assert!(matches!(rd_from_conductors(&big), Err(DiscError::NonFactorable(_))));
        assert!(matches!(cyclotomic_conductors(0), Err(DiscError::CyclotomicRange(0))));
    }

    #[test]
    fn compositum_conductors() {
        let q8 = cyclotomic_conductors(8).unwrap();
        let q13 = CharacterConductorSet::new(vec![1, 13]).unwrap();
        assert_eq!(q8.product_coprime(&q13).conductors(), &[1, 4, 8, 8, 13, 52, 104, 104]);
    }

    #[test]
    fn towers() {
        let base = r("10 * 5^-1/4");
        let l = rd_tower(&base, 8, 4, &r("2^24 * 5^4")).unwrap();
        assert_eq!(l, r("2^7/4 * 5^7/8"));
        assert_eq!(rd_tower(&base, 8, 1, &Radical::one()).unwrap(), base);
        let k = rd_tower(&r("3^1/2"), 2, 9, &r("3^12 * 7^12")).unwrap();
        assert_eq!(k, r("3^7/6 * 7^2/3"));
        let k2 = rd_tower(&k, 18, 3, &r("3^12")).unwrap();
        assert_eq!(k2, r("3^25/18 * 7^2/3"));
        assert!(matches!(rd_tower(&base, 8, 4, &r("2^1/2")), Err(DiscError::NonIntegralNorm(_))));
    }

    #[test]
    fn budgets() {
        assert_eq!(budget(13, 2, Mode::Semistable).unwrap().value, r("2^2 * 13^1/2"));
        assert_eq!(budget(5, 2, Mode::Tame).unwrap().value, r("20"));
        assert_eq!(budget(7, 3, Mode::Semistable).unwrap().value, r("3^3/2 * 7^2/3"));
        assert_eq!(budget(2, 3, Mode::Tame).unwrap().value, r("2 * 3^3/2"));
        assert_eq!(budget(3, 2, Mode::Tame).unwrap().value, r("12"));
        assert_eq!(budget(11, 2, Mode::Semistable).unwrap().value, r("4 * 11^1/2"));
        assert!(budget(3, 3, Mode::Tame).is_err());
    }

    #[test]
    fn table_parsing() {
        let t = OdlyzkoTable::parse("# c\n2 1.72\n3 2.5\n\n10 5.9\n").unwrap();
        assert_eq!(t.rows().len(), 3);
        assert_eq!(t.precision, 2);
        let e = OdlyzkoTable::parse("2 1.7\n3 1.6\n").unwrap_err();
        assert!(matches!(e, DiscError::TableParse { line: 2, .. }), "{e}");
        let e = OdlyzkoTable::parse("# x\n2 1.7\n2 1.8\n").unwrap_err();
        assert!(matches!(e, DiscError::TableParse { line: 3, .. }));
        let e = OdlyzkoTable::parse("2 1,7\n").unwrap_err();
        assert!(matches!(e, DiscError::TableParse { line: 1, .. }));
        assert!(matches!(OdlyzkoTable::parse("# only\n"), Err(DiscError::EmptyTable)));
        assert!(OdlyzkoTable::parse("2 -1.0\n").is_err());
    }

    #[test]
    fn degree_bounds_on_toy_table() {
        let t = OdlyzkoTable::parse("2 1.5\n5 3.0\n9 4.0\n").unwrap();
        assert_eq!(degree_bound(&t, &r("2")), DegreeBound::AtMost(4));
        assert_eq!(degree_bound(&t, &r("3")), DegreeBound::AtMost(4));
        assert_eq!(degree_bound(&t, &r("3^1/2")), DegreeBound::AtMost(4));
        assert_eq!(degree_bound(&t, &r("2^1/2")), DegreeBound::AtMost(1));
        assert_eq!(degree_bound(&t, &r("5")), DegreeBound::Exhausted);
    }

    #[test]
    fn bundled_table_loads() {
        let t = OdlyzkoTable::bundled();
        assert_eq!(t.precision, 4);
        assert_eq!(t.rows()[0].0, 2);
    }
}
