//! Permutation groups, a catalog of all groups of order at most 16, and
//! exhaustive checks of the group-theoretic lemmas used on Galois groups.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orders::{FiniteAbelianGroup, Presentation};

/// Groups larger than this are refused by element enumeration.
pub const MAX_GROUP_ORDER: usize = 10_000;

/// Per-order class counts for orders 1..=16.
pub const CLASS_COUNTS: [usize; 16] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{label}: stated order {stated}, generators give {actual}")]
    OrderMismatch { label: String, stated: usize, actual: usize },
    #[error("order {order}: catalog has {found} classes, expected {expected}")]
    ClassCount { order: usize, found: usize, expected: usize },
    #[error("{a} and {b} have identical fingerprints")]
    DuplicateFingerprint { a: String, b: String },
    #[error("group order exceeds {MAX_GROUP_ORDER}")]
    TooLarge,
    #[error("permutations of different degrees")]
    DegreeMismatch,
    #[error("cannot read catalog: {0}")]
    Io(String),
}

/// A permutation of {0, …, d−1}; composition `(p·q)(i) = p(q(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    /// Parses cycle notation on points 1..=degree, e.g. `(1 2 3)(4 5)`.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self, String> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let s = s.trim();
        if s == "()" {
            return Ok(Perm(images));
        }
        let mut rest = s;
        let mut touched = HashSet::new();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or("expected '('")?;
            let end = body.find(')').ok_or("unclosed cycle")?;
            let points: Vec<usize> = body[..end]
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| format!("bad point {t:?}")))
                .collect::<Result<_, _>>()?;
            for (k, &a) in points.iter().enumerate() {
                if a == 0 || a > degree {
                    return Err(format!("point {a} outside 1..={degree}"));
                }
                if !touched.insert(a) {
                    return Err(format!("point {a} repeated"));
                }
                let b = points[(k + 1) % points.len()];
                images[a - 1] = (b - 1) as u16;
            }
            rest = body[end + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> usize {
        let mut q = self.clone();
        let mut k = 1;
        while !q.is_identity() {
            q = self.compose(&q);
            k += 1;
        }
        k
    }

    /// The commutator p⁻¹q⁻¹pq.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().compose(&other.inverse()).compose(self).compose(other)
    }

    /// The conjugate g·p·g⁻¹.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for i in 0..self.0.len() {
            if seen[i] || self.0[i] as usize == i {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.0[j] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A permutation group with its enumerated elements (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() >= MAX_GROUP_ORDER {
                        return Err(GroupError::TooLarge);
                    }
                    seen.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(PermutationGroup { degree, generators, elements })
    }

    /// A subgroup given by a set already known to be closed.
    fn from_closed_set(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let generators = elements.iter().filter(|p| !p.is_identity()).cloned().collect();
        PermutationGroup { degree, generators, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|a| g.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|p| p.order() == self.order())
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    pub fn is_normal_in(&self, other: &PermutationGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|g| self.generators.iter().all(|h| self.contains(&h.conjugate_by(g))))
    }

    pub fn subgroup(&self, generators: Vec<Perm>) -> PermutationGroup {
        PermutationGroup::new(self.degree, generators).expect("subgroup of an enumerated group")
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure(&self, seeds: Vec<Perm>) -> PermutationGroup {
        let mut gens = seeds;
        loop {
            let h = self.subgroup(gens.clone());
            let extra: Vec<Perm> = gens
                .iter()
                .flat_map(|x| self.generators.iter().map(move |g| x.conjugate_by(g)))
                .filter(|y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            gens.extend(extra);
        }
    }

    pub fn commutator_subgroup(&self) -> PermutationGroup {
        let seeds: Vec<Perm> = self
            .generators
            .iter()
            .flat_map(|a| self.generators.iter().map(move |b| a.commutator(b)))
            .filter(|c| !c.is_identity())
            .collect();
        self.normal_closure(seeds)
    }

    /// G ⊇ G′ ⊇ G″ ⊇ … ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<PermutationGroup> {
        let mut series = vec![self.clone()];
        loop {
            let next = series.last().unwrap().commutator_subgroup();
            if next.order() == series.last().unwrap().order() {
                return series;
            }
            series.push(next);
        }
    }

    /// Number of steps until the series stabilizes (0 for the trivial group).
    pub fn derived_length(&self) -> usize {
        self.derived_series().len() - 1
    }

    pub fn center(&self) -> PermutationGroup {
        let z: Vec<Perm> = self
            .elements
            .iter()
            .filter(|p| self.generators.iter().all(|g| g.compose(p) == p.compose(g)))
            .cloned()
            .collect();
        PermutationGroup::from_closed_set(self.degree, z)
    }

    /// G/N by coset enumeration; `n` must be normal.
    pub fn quotient(&self, n: &PermutationGroup) -> CayleyTable {
        let mut coset_of: HashMap<Perm, usize> = HashMap::new();
        let mut reps: Vec<&Perm> = Vec::new();
        for g in &self.elements {
            if coset_of.contains_key(g) {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for x in &n.elements {
                coset_of.insert(g.compose(x), id);
            }
        }
        let k = reps.len();
        let table = (0..k).map(|a| (0..k).map(|b| coset_of[&reps[a].compose(reps[b])]).collect()).collect();
        let identity = coset_of[&Perm::identity(self.degree)];
        CayleyTable { table, identity }
    }

    pub fn abelianization(&self) -> FiniteAbelianGroup {
        self.quotient(&self.commutator_subgroup()).abelian_structure()
    }

    pub fn element_orders(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for p in &self.elements {
            *m.entry(p.order()).or_insert(0) += 1;
        }
        m
    }

    /// Whether some cyclic normal subgroup has a cyclic quotient.
    pub fn is_metacyclic(&self) -> bool {
        self.elements.iter().any(|g| {
            let n = self.subgroup(vec![g.clone()]);
            n.is_normal_in(self) && self.quotient(&n).is_cyclic()
        })
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order(),
            abelianization: self.abelianization(),
            element_orders: self.element_orders(),
            derived_length: self.derived_length(),
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.table[x][y];
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|x| self.element_order(x) == self.order())
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Invariant factors; meaningful only for abelian tables.
    pub fn abelian_structure(&self) -> FiniteAbelianGroup {
        let all: Vec<usize> = (0..self.order()).collect();
        Presentation::new(&all, self.identity, |a, b| self.table[a][b]).structure()
    }
}

/// Invariants that separate the catalog groups of equal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub abelianization: FiniteAbelianGroup,
    pub element_orders: BTreeMap<usize, usize>,
    pub derived_length: usize,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub order: usize,
    pub index: usize,
    pub label: String,
    pub group: PermutationGroup,
}

/// All isomorphism classes of groups of order ≤ 16.
#[derive(Clone, Debug)]
pub struct GroupCatalog {
    entries: Vec<CatalogEntry>,
}

const BUNDLED: &str = include_str!("../data/groups16.txt");

impl GroupCatalog {
    pub fn bundled() -> Self {
        BUNDLED.parse().expect("bundled catalog is valid")
    }

    pub fn load(path: &Path) -> Result<Self, GroupError> {
        std::fs::read_to_string(path).map_err(|e| GroupError::Io(e.to_string()))?.parse()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, label: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn class_counts(&self) -> Vec<usize> {
        (1..=16).map(|n| self.entries.iter().filter(|e| e.order == n).count()).collect()
    }
}

impl FromStr for GroupCatalog {
    type Err = GroupError;

    fn from_str(text: &str) -> Result<Self, GroupError> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| GroupError::Parse { line: i + 1, reason };
            let fields: Vec<&str> = line.splitn(4, ';').collect();
            if fields.len() != 4 {
                return Err(err("expected order;index;label;generators".into()));
            }
            let order: usize = fields[0].trim().parse().map_err(|_| err("bad order".into()))?;
            let index: usize = fields[1].trim().parse().map_err(|_| err("bad index".into()))?;
            let label = fields[2].trim().to_string();
            let gen_text = fields[3].trim();
            let degree = max_point(gen_text).max(1);
            let gens: Vec<Perm> = split_generators(gen_text)
                .into_iter()
                .map(|g| Perm::parse_cycles(g, degree))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            let group = PermutationGroup::new(degree, gens)?;
            if group.order() != order {
                return Err(GroupError::OrderMismatch { label, stated: order, actual: group.order() });
            }
            entries.push(CatalogEntry { order, index, label, group });
        }
        let catalog = GroupCatalog { entries };
        for (k, &expected) in CLASS_COUNTS.iter().enumerate() {
            let found = catalog.class_counts()[k];
            if found != expected {
                return Err(GroupError::ClassCount { order: k + 1, found, expected });
            }
        }
        let mut seen: HashMap<Fingerprint, String> = HashMap::new();
        for e in &catalog.entries {
            if let Some(prev) = seen.insert(e.group.fingerprint(), e.label.clone()) {
                return Err(GroupError::DuplicateFingerprint { a: prev, b: e.label.clone() });
            }
        }
        Ok(catalog)
    }
}

fn max_point(s: &str) -> usize {
    s.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(0)
}

/// Splits `(1 2)(3 4),(1 3)` at commas outside parentheses.
fn split_generators(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out.retain(|g| !g.is_empty());
    out
}

/// Outcome of a lemma check on one catalog group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupVerdict {
    pub label: String,
    pub order: usize,
    pub applicable: bool,
    pub pass: bool,
}

/// G/Z(G) cyclic ⇒ G abelian, over the whole catalog.
pub fn center_cyclic_implies_abelian_check(catalog: &GroupCatalog) -> Vec<GroupVerdict> {
    catalog
        .entries
        .iter()
        .map(|e| {
            let g = &e.group;
            let applicable = g.quotient(&g.center()).is_cyclic();
            GroupVerdict { label: e.label.clone(), order: e.order, applicable, pass: !applicable || g.is_abelian() }
        })
        .collect()
}

/// For 2-groups with [G : G′] = 4, G′ is cyclic.
pub fn taussky_check(catalog: &GroupCatalog) -> Vec<GroupVerdict> {
    catalog
        .entries
        .iter()
        .filter(|e| e.order.is_power_of_two())
        .map(|e| {
            let d = e.group.commutator_subgroup();
            let applicable = e.order / d.order() == 4;
            GroupVerdict { label: e.label.clone(), order: e.order, applicable, pass: !applicable || d.is_cyclic() }
        })
        .collect()
}

/// A property of a group read off its derived series G⁽⁰⁾ ⊇ G⁽¹⁾ ⊇ ….
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    /// |G⁽ᵏ⁾| ≤ bound.
    OrderAtMost { term: usize, bound: usize },
    /// G⁽ᵏ⁾ is trivial.
    Trivial { term: usize },
    /// G⁽ᵏ⁾ is cyclic.
    Cyclic { term: usize },
    /// G⁽ᵏ⁾ is abelian.
    Abelian { term: usize },
    /// G⁽ᵏ⁾/G⁽ᵏ⁺¹⁾ is cyclic.
    QuotientCyclic { term: usize },
    /// [G⁽ᵏ⁾ : G⁽ᵏ⁺¹⁾] ≤ bound.
    QuotientOrderAtMost { term: usize, bound: usize },
    /// [G⁽ᵏ⁾ : G⁽ᵏ⁺¹⁾] is a power of 2.
    QuotientTwoGroup { term: usize },
    /// G⁽ⁱⁿⁿᵉʳ⁾ lies in the center of G⁽ᵒᵘᵗᵉʳ⁾.
    Central { inner: usize, outer: usize },
    /// G⁽ᵏ⁾ is metacyclic.
    Metacyclic { term: usize },
}

impl Condition {
    pub fn holds(&self, series: &[PermutationGroup]) -> bool {
        let term = |k: usize| &series[k.min(series.len() - 1)];
        match *self {
            Condition::OrderAtMost { term: k, bound } => term(k).order() <= bound,
            Condition::Trivial { term: k } => term(k).is_trivial(),
            Condition::Cyclic { term: k } => term(k).is_cyclic(),
            Condition::Abelian { term: k } => term(k).is_abelian(),
            Condition::QuotientCyclic { term: k } => term(k).quotient(term(k + 1)).is_cyclic(),
            Condition::QuotientOrderAtMost { term: k, bound } => term(k).order() / term(k + 1).order() <= bound,
            Condition::QuotientTwoGroup { term: k } => (term(k).order() / term(k + 1).order()).is_power_of_two(),
            Condition::Central { inner, outer } => term(inner).is_subgroup_of(&term(outer).center()),
            Condition::Metacyclic { term: k } => term(k).is_metacyclic(),
        }
    }
}

/// Hypotheses and conclusion of one deduction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductionConstraints {
    pub name: String,
    pub hypotheses: Vec<Condition>,
    pub conclusion: Vec<Condition>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeductionVerdict {
    pub name: String,
    pub scanned: usize,
    pub satisfying: usize,
    pub counterexample: Option<String>,
}

impl DeductionVerdict {
    pub fn unsatisfiable(&self) -> bool {
        self.satisfying == 0
    }

    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Scans the catalog for a group meeting the hypotheses but not the conclusion.
pub fn deduction_chain_check(catalog: &GroupCatalog, c: &DeductionConstraints) -> DeductionVerdict {
    let mut satisfying = 0;
    let mut counterexample = None;
    for e in &catalog.entries {
        let series = e.group.derived_series();
        if !c.hypotheses.iter().all(|h| h.holds(&series)) {
            continue;
        }
        satisfying += 1;
        if counterexample.is_none() && !c.conclusion.iter().all(|h| h.holds(&series)) {
            counterexample = Some(e.label.clone());
        }
    }
    DeductionVerdict { name: c.name.clone(), scanned: catalog.entries.len(), satisfying, counterexample }
}

/// The order-bounded deductions isolated in the case analyses.
pub fn standard_deductions() -> Vec<DeductionConstraints> {
    vec![
        DeductionConstraints {
            name: "(3,2): |G'| <= 7 and G'/G'' cyclic of order <= 2 imply G'' = 1".into(),
            hypotheses: vec![
                Condition::OrderAtMost { term: 1, bound: 7 },
                Condition::QuotientCyclic { term: 1 },
                Condition::QuotientOrderAtMost { term: 1, bound: 2 },
            ],
            conclusion: vec![Condition::Trivial { term: 2 }],
        },
        DeductionConstraints {
            name: "abelian G has G' = 1".into(),
            hypotheses: vec![Condition::Abelian { term: 0 }],
            conclusion: vec![Condition::Trivial { term: 1 }],
        },
        DeductionConstraints {
            name: "(5,2): |G| <= 14, G' cyclic, G/G' cyclic of order 2 imply G metacyclic".into(),
            hypotheses: vec![
                Condition::OrderAtMost { term: 0, bound: 14 },
                Condition::Cyclic { term: 1 },
                Condition::QuotientCyclic { term: 0 },
                Condition::QuotientOrderAtMost { term: 0, bound: 2 },
            ],
            conclusion: vec![Condition::Metacyclic { term: 0 }],
        },
        DeductionConstraints {
            name: "(5,2): |G| <= 14, G/G' a cyclic 2-group, G' central imply G' = 1".into(),
            hypotheses: vec![
                Condition::OrderAtMost { term: 0, bound: 14 },
                Condition::QuotientCyclic { term: 0 },
                Condition::QuotientTwoGroup { term: 0 },
                Condition::Central { inner: 1, outer: 0 },
            ],
            conclusion: vec![Condition::Trivial { term: 1 }],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn cycles_round_trip() {
        let p = perm("(1 2 3)(5 6)", 6);
        assert_eq!(p.to_string(), "(1 2 3)(5 6)");
        assert_eq!(p.order(), 6);
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse_cycles("(1 7)", 3).is_err());
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn s3_derived_series() {
        let g = PermutationGroup::new(3, vec![perm("(1 2 3)", 3), perm("(1 2)", 3)]).unwrap();
        let orders: Vec<usize> = g.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![6, 3, 1]);
        assert_eq!(g.center().order(), 1);
        assert!(g.is_metacyclic());
    }

    #[test]
    fn quaternion_group() {
        let g = PermutationGroup::new(8, vec![perm("(1 2 3 4)(5 6 7 8)", 8), perm("(1 5 3 7)(2 8 4 6)", 8)]).unwrap();
        assert_eq!(g.order(), 8);
        let orders: Vec<usize> = g.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![8, 2, 1]);
        assert_eq!(g.abelianization().invariants(), &[2, 2]);
        assert_eq!(g.element_orders(), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    }

    #[test]
    fn generator_splitting() {
        assert_eq!(split_generators("(1 2)(3 4),(1 3)"), vec!["(1 2)(3 4)", "(1 3)"]);
        assert_eq!(max_point("(1 12)(3 4)"), 12);
    }
}
