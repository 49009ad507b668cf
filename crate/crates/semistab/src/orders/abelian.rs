//! Finite abelian groups: Smith normal form and presentations of explicit
//! groups given by an element list and a multiplication.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A finite abelian group by invariant factors d₁ | d₂ | … (all > 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct FiniteAbelianGroup {
    invariants: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Normalizes an arbitrary list of cyclic orders into invariant factors.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let m: Vec<Vec<i128>> = orders
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let mut row = vec![0i128; orders.len()];
                row[i] = d as i128;
                row
            })
            .collect();
        Self::from_diagonal(&smith(m, orders.len()).diagonal)
    }

    fn from_diagonal(d: &[i128]) -> Self {
        let mut inv: Vec<u64> = d.iter().map(|x| x.unsigned_abs() as u64).filter(|&x| x > 1).collect();
        inv.sort_unstable();
        FiniteAbelianGroup { invariants: inv }
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariants.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariants.len() <= 1
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.invariants.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub(crate) struct Smith {
    pub diagonal: Vec<i128>,
    /// Rows express the new basis in terms of the old generators.
    pub vinv: Vec<Vec<i128>>,
}

/// Smith normal form of an `r × s` relation matrix (rows are relations).
pub(crate) fn smith(mut a: Vec<Vec<i128>>, s: usize) -> Smith {
    let r = a.len();
    let mut vinv: Vec<Vec<i128>> = (0..s).map(|i| (0..s).map(|j| i128::from(i == j)).collect()).collect();
    let mut diagonal = Vec::new();
    for t in 0..r.min(s) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..s {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                vinv.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..r {
                let q = Integer::div_floor(&a[i][t], &p);
                if q != 0 {
                    for j in t..s {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..s {
                let q = Integer::div_floor(&a[t][j], &p);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                    for k in 0..s {
                        vinv[t][k] += q * vinv[j][k];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..s).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in t..s {
                        let v = a[i][j];
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        if a[t][t] == 0 {
            break;
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal.resize(s, 0);
    Smith { diagonal, vinv }
}

/// An explicit finite abelian group presented on a greedy generating set,
/// with a discrete-log table for every element.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<usize>,
    pub relations: Vec<Vec<i128>>,
    log: HashMap<usize, Vec<i128>>,
}

impl Presentation {
    /// Builds the presentation of the group whose elements are `elements`
    /// (identified by index) under `mul`, with identity `one`.
    pub fn new<F: Fn(usize, usize) -> usize>(elements: &[usize], one: usize, mul: F) -> Self {
        let mut log: HashMap<usize, Vec<i128>> = HashMap::from([(one, Vec::new())]);
        let mut members = vec![one];
        let mut generators = Vec::new();
        let mut relations = Vec::new();
        for &u in elements {
            if log.contains_key(&u) {
                continue;
            }
            let s = generators.len();
            generators.push(u);
            let mut powers = vec![one, u];
            let mut k = 1usize;
            while !log.contains_key(&powers[k]) {
                let next = mul(powers[k], u);
                powers.push(next);
                k += 1;
            }
            let mut rel = vec![0i128; s + 1];
            for (i, &c) in log[&powers[k]].iter().enumerate() {
                rel[i] = -c;
            }
            rel[s] = k as i128;
            relations.push(rel);
            let mut fresh = Vec::with_capacity(members.len() * (k - 1));
            for &h in &members {
                let base = log[&h].clone();
                for (j, &pw) in powers.iter().enumerate().take(k).skip(1) {
                    let mut v = base.clone();
                    v.resize(s + 1, 0);
                    v[s] = j as i128;
                    fresh.push((mul(h, pw), v));
                }
            }
            for (e, v) in fresh {
                log.insert(e, v);
                members.push(e);
            }
        }
        let s = generators.len();
        for r in relations.iter_mut() {
            r.resize(s, 0);
        }
        Presentation { generators, relations, log }
    }

    pub fn order(&self) -> usize {
        self.log.len()
    }

    /// Exponent vector of an element on the generators.
    pub fn log(&self, x: usize) -> Option<Vec<i128>> {
        self.log.get(&x).map(|v| {
            let mut v = v.clone();
            v.resize(self.generators.len(), 0);
            v
        })
    }

    /// Structure of the quotient by the subgroup generated by `extra`.
    pub fn quotient(&self, extra: &[usize]) -> Option<FiniteAbelianGroup> {
        let mut rows = self.relations.clone();
        for &x in extra {
            rows.push(self.log(x)?);
        }
        Some(FiniteAbelianGroup::from_diagonal(&smith(rows, self.generators.len()).diagonal))
    }

    pub fn structure(&self) -> FiniteAbelianGroup {
        self.quotient(&[]).expect("no extra elements")
    }

    /// Invariant factors with matching generator exponent vectors.
    pub fn invariant_basis(&self) -> Vec<(u64, Vec<i128>)> {
        let s = self.generators.len();
        let sm = smith(self.relations.clone(), s);
        let mut out: Vec<(u64, Vec<i128>)> =
            sm.diagonal.iter().zip(sm.vinv).filter(|(d, _)| **d > 1).map(|(&d, row)| (d as u64, row)).collect();
        out.sort_by_key(|(d, _)| *d);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[2, 3]).invariants(), &[6]);
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[4, 6]).invariants(), &[2, 12]);
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[1, 1]), FiniteAbelianGroup::trivial());
        assert_eq!(FiniteAbelianGroup::from_cyclic_orders(&[2, 2]).to_string(), "(2,2)");
        assert_eq!(FiniteAbelianGroup::trivial().to_string(), "trivial");
    }

    #[test]
    fn units_mod_n() {
        // (Z/nZ)^* as an explicit group
        for (n, expect) in [(8u64, vec![2u64, 2]), (15, vec![2, 4]), (7, vec![6]), (24, vec![2, 2, 2]), (1, vec![])] {
            let units: Vec<usize> = (0..n).filter(|&a| a.gcd(&n) == 1).map(|a| a as usize).collect();
            let one = (1 % n) as usize;
            let p = Presentation::new(&units, one, |a, b| (a as u64 * b as u64 % n.max(1)) as usize);
            assert_eq!(p.order(), units.len());
            assert_eq!(p.structure().invariants(), expect.as_slice(), "n={n}");
        }
    }

    #[test]
    fn invariant_generators_have_the_right_orders() {
        let n = 63u64;
        let units: Vec<usize> = (1..n).filter(|&a| a.gcd(&n) == 1).map(|a| a as usize).collect();
        let mul = |a: usize, b: usize| (a as u64 * b as u64 % n) as usize;
        let p = Presentation::new(&units, 1, mul);
        let basis = p.invariant_basis();
        assert_eq!(basis.iter().map(|b| b.0).collect::<Vec<_>>(), vec![6, 6]);
        for (d, v) in basis {
            let mut x = 1u64;
            for (g, e) in p.generators.iter().zip(&v) {
                let e = e.rem_euclid(36) as u64;
                x = x * crate::arith::pow_mod(*g as u64, e, n) % n;
            }
            assert_eq!(crate::arith::mult_order(x, n), Some(d));
        }
    }

    #[test]
    fn quotients() {
        let n = 15u64;
        let units: Vec<usize> = (1..n).filter(|&a| a.gcd(&n) == 1).map(|a| a as usize).collect();
        let p = Presentation::new(&units, 1, |a, b| (a as u64 * b as u64 % n) as usize);
        assert_eq!(p.quotient(&[14]).unwrap().order(), 4);
        assert_eq!(p.quotient(&[2]).unwrap().order(), 2);
        assert!(p.quotient(&[2, 14]).unwrap().is_trivial());
        assert!(p.quotient(&[3]).is_none());
    }
}
