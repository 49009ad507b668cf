//! Proof certificates: typed claims transcribed from one case analysis,
//! their verification against the other modules, and the resulting report.
//!
//! A certificate is a JSON document
//!
//! ```json
//! { "case": "13_2", "l": 13, "p": 2, "mode": "semistable",
//!   "fields": [ ... ], "curves": [ ... ], "claims": [ ... ] }
//! ```
//!
//! Every claim carries a `kind`, a kind-specific payload, an expected value
//! and an `anchor` naming the statement it transcribes. Claims only refer to
//! fields and curves declared in the same file; [`parse_certificate`]
//! rejects anything else. Claims are independent, so [`verify`] checks them
//! in parallel and reports them in file order.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{euler_phi, is_prime};
use crate::discbounds::{
    budget, cyclotomic_conductors, degree_bound, rd_from_conductors, rd_tower, CharacterConductorSet, DegreeBound,
    Mode, OdlyzkoTable,
};
use crate::elliptic::{same_splitting_field_evidence, Cubic};
use crate::extcrit::ext_dimension;
use crate::groups::{
    center_cyclic_implies_abelian_check, deduction_chain_check, taussky_check, DeductionConstraints, GroupCatalog,
    GroupVerdict,
};
use crate::orders::{
    filtration_check, image_order, parse_int_poly, parse_rational_poly, ray_class_order, FiniteAbelianGroup,
    MonogenicOrder, OrderError, PrimeFactor,
};
use crate::{Curve, Radical};

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field #{index} `{name}`: {reason}")]
    Field { index: usize, name: String, reason: String },
    #[error("curve #{index} `{name}`: {reason}")]
    Curve { index: usize, name: String, reason: String },
    #[error("claim #{index} ({kind}): {reason}")]
    Claim { index: usize, kind: &'static str, reason: String },
    #[error("({l}, {p}) is not a pair of distinct primes")]
    BadPair { l: u64, p: u64 },
    #[error("contradiction: degree bound {bound} is below the base degree {base}, no such field exists")]
    Contradiction { base: u64, bound: u64 },
}

/// One proof certificate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub case: String,
    pub l: u64,
    pub p: u64,
    pub mode: Mode,
    #[serde(default)]
    pub fields: Vec<FieldSpec>,
    #[serde(default)]
    pub curves: Vec<CurveSpec>,
    #[serde(default)]
    pub claims: Vec<Claim>,
}

/// A number field given by a monogenic order: either `Z[ζ_m]` or
/// `Z[t]/(poly)` with an index obstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclotomic: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_obstruction: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_number: Option<ClassNumber>,
    /// Named elements, as polynomials in `t`.
    #[serde(default)]
    pub elements: BTreeMap<String, String>,
}

/// A class number taken as input, with the statement that justifies it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassNumber {
    pub value: u64,
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// `[a1, a2, a3, a4, a6]`.
    pub coeffs: [i64; 5],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub anchor: String,
    #[serde(flatten)]
    pub body: ClaimBody,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ClaimBody {
    ExtDim {
        l: u64,
        p: u64,
        expected: u8,
    },
    BudgetValue {
        l: u64,
        p: u64,
        mode: Mode,
        expected: Radical,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        printed: Option<Printed>,
    },
    RdEquals {
        source: RdSource,
        expected: Radical,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        printed: Option<Printed>,
    },
    /// Every field with root discriminant below `delta` has degree at most
    /// `expected`.
    DegreeBound {
        delta: Radical,
        expected: u32,
    },
    BaseFieldDegree {
        l: u64,
        p: u64,
        mode: Mode,
        /// Relative degrees of a declared tower starting at the mandated field.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        chain: Vec<u64>,
        expected: u64,
    },
    DegreeGap {
        base_degree: u64,
        bound: u64,
        expected: u64,
    },
    PrimeSplitting {
        field: String,
        q: u64,
        expected: Splitting,
    },
    ResidueUnitOrder {
        field: String,
        prime: PrimeRef,
        element: String,
        expected: u64,
    },
    RayClass {
        field: String,
        modulus: Vec<ModulusPart>,
        units: Vec<String>,
        /// Invariant factors; empty for the trivial group.
        expected: Vec<u64>,
    },
    UnitFiltration {
        field: String,
        prime: PrimeRef,
        units: Vec<String>,
        from: u32,
        to: u32,
        expected: FiltrationExpectation,
    },
    ApValue {
        curve: String,
        q: u64,
        expected: i64,
    },
    ApCongruence {
        curves: [String; 2],
        primes: Vec<u64>,
        modulus: i64,
        expected: Congruence,
    },
    ConductorExponent {
        curve: String,
        q: u64,
        expected: u32,
    },
    Supersingular {
        curve: String,
        q: u64,
        expected: bool,
    },
    TwoTorsionFieldEvidence {
        curves: Vec<String>,
        /// Leading coefficient first.
        cubic: [i64; 4],
        prime_bound: u64,
        expected: bool,
    },
    GroupLemma {
        lemma: Lemma,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deduction: Option<DeductionConstraints>,
        expected_counterexamples: usize,
    },
}

/// A decimal printed next to an exact value, and whether it is expected to
/// agree with the exact value truncated to the same number of places.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Printed {
    pub digits: String,
    #[serde(default = "yes")]
    pub matches: bool,
}

fn yes() -> bool {
    true
}

/// How a root discriminant is computed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "via", rename_all = "snake_case", deny_unknown_fields)]
pub enum RdSource {
    Conductors {
        conductors: Vec<u64>,
    },
    Cyclotomic {
        m: u64,
    },
    /// Compositum of abelian fields with coprime conductors.
    Compositum {
        parts: Vec<RdSource>,
    },
    Tower {
        base: Box<RdSource>,
        base_degree: u64,
        rel_degree: u64,
        norm: Radical,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Splitting {
    pub e: u32,
    pub f: u32,
    pub g: u32,
}

/// The `index`-th prime over `q`, in the order `factor_prime` lists them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeRef {
    pub q: u64,
    #[serde(default)]
    pub index: usize,
}

/// `𝔭^exponent` for one prime over `q`, or `(q)^exponent` when `index` is
/// absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModulusPart {
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    #[serde(default = "one_u32")]
    pub exponent: u32,
}

fn one_u32() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationExpectation {
    pub quotient: Vec<u64>,
    pub generated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Congruence {
    /// `a_q ≡ b_q` at every listed prime.
    AllCongruent,
    /// `a_q ≢ b_q` at some listed prime.
    SomeIncongruent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    CenterCyclicImpliesAbelian,
    Taussky,
    Deduction,
}

impl ClaimBody {
    pub fn kind(&self) -> &'static str {
        match self {
            ClaimBody::ExtDim { .. } => "ext_dim",
            ClaimBody::BudgetValue { .. } => "budget_value",
            ClaimBody::RdEquals { .. } => "rd_equals",
            ClaimBody::DegreeBound { .. } => "degree_bound",
            ClaimBody::BaseFieldDegree { .. } => "base_field_degree",
            ClaimBody::DegreeGap { .. } => "degree_gap",
            ClaimBody::PrimeSplitting { .. } => "prime_splitting",
            ClaimBody::ResidueUnitOrder { .. } => "residue_unit_order",
            ClaimBody::RayClass { .. } => "ray_class",
            ClaimBody::UnitFiltration { .. } => "unit_filtration",
            ClaimBody::ApValue { .. } => "ap_value",
            ClaimBody::ApCongruence { .. } => "ap_congruence",
            ClaimBody::ConductorExponent { .. } => "conductor_exponent",
            ClaimBody::Supersingular { .. } => "supersingular",
            ClaimBody::TwoTorsionFieldEvidence { .. } => "two_torsion_field_evidence",
            ClaimBody::GroupLemma { .. } => "group_lemma",
        }
    }

    /// Claims that can at best be HEURISTIC-PASS.
    pub fn is_heuristic(&self) -> bool {
        matches!(self, ClaimBody::TwoTorsionFieldEvidence { .. })
    }

    fn expected_string(&self) -> String {
        match self {
            ClaimBody::ExtDim { expected, .. } => format!("dim {expected}"),
            ClaimBody::BudgetValue { expected, printed, .. } | ClaimBody::RdEquals { expected, printed, .. } => {
                match printed {
                    Some(p) if p.matches => format!("{expected} = {}...", p.digits),
                    Some(p) => format!("{expected} (printed {}, a known misprint)", p.digits),
                    None => expected.to_string(),
                }
            }
            ClaimBody::DegreeBound { expected, .. } => format!("degree <= {expected}"),
            ClaimBody::BaseFieldDegree { expected, .. }
            | ClaimBody::DegreeGap { expected, .. }
            | ClaimBody::ResidueUnitOrder { expected, .. } => expected.to_string(),
            ClaimBody::PrimeSplitting { expected: s, .. } => format!("e={} f={} g={}", s.e, s.f, s.g),
            ClaimBody::RayClass { expected, .. } => FiniteAbelianGroup::from_cyclic_orders(expected).to_string(),
            ClaimBody::UnitFiltration { expected, .. } => format!(
                "quotient {}, {}",
                FiniteAbelianGroup::from_cyclic_orders(&expected.quotient),
                if expected.generated { "generated" } else { "not generated" }
            ),
            ClaimBody::ApValue { expected, .. } => expected.to_string(),
            ClaimBody::ApCongruence { modulus, expected, .. } => match expected {
                Congruence::AllCongruent => format!("congruent mod {modulus} at every prime"),
                Congruence::SomeIncongruent => format!("incongruent mod {modulus} at some prime"),
            },
            ClaimBody::ConductorExponent { expected, .. } => expected.to_string(),
            ClaimBody::Supersingular { expected, .. } => {
                if *expected { "supersingular" } else { "ordinary" }.to_string()
            }
            ClaimBody::TwoTorsionFieldEvidence { expected, .. } => {
                if *expected { "same splitting field" } else { "different splitting fields" }.to_string()
            }
            ClaimBody::GroupLemma { expected_counterexamples, .. } => {
                format!("{expected_counterexamples} counterexamples")
            }
        }
    }
}

/// Reads and validates a certificate file.
pub fn parse_certificate(path: &Path) -> Result<Certificate, CertifyError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CertifyError::Io { path: path.display().to_string(), source })?;
    text.parse()
}

impl std::str::FromStr for Certificate {
    type Err = CertifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cert: Certificate = serde_json::from_str(s)?;
        cert.validate()?;
        Ok(cert)
    }
}

impl Certificate {
    /// Checks that every reference resolves against the declarations.
    pub fn validate(&self) -> Result<(), CertifyError> {
        let mut fields: BTreeMap<&str, &FieldSpec> = BTreeMap::new();
        for (index, f) in self.fields.iter().enumerate() {
            let err = |reason: String| CertifyError::Field { index, name: f.name.clone(), reason };
            if fields.insert(&f.name, f).is_some() {
                return Err(err("declared twice".into()));
            }
            match (&f.cyclotomic, &f.poly, &f.index_obstruction) {
                (Some(_), None, None) => {}
                (None, Some(poly), Some(_)) => {
                    parse_int_poly(poly).map_err(|e| err(e.to_string()))?;
                }
                (None, Some(_), None) => return Err(err("a non-cyclotomic field needs an index_obstruction".into())),
                _ => return Err(err("give exactly one of `cyclotomic` and `poly`".into())),
            }
            for (name, value) in &f.elements {
                if parse_rational_poly(name).is_ok() {
                    return Err(err(format!("element name `{name}` reads as a polynomial")));
                }
                parse_rational_poly(value).map_err(|e| err(format!("element `{name}`: {e}")))?;
            }
        }
        let mut curves: BTreeMap<&str, ()> = BTreeMap::new();
        for (index, c) in self.curves.iter().enumerate() {
            if curves.insert(&c.name, ()).is_some() {
                return Err(CertifyError::Curve { index, name: c.name.clone(), reason: "declared twice".into() });
            }
        }
        for (index, claim) in self.claims.iter().enumerate() {
            let kind = claim.body.kind();
            let err = |reason: String| CertifyError::Claim { index, kind, reason };
            if claim.anchor.trim().is_empty() {
                return Err(err("empty anchor".into()));
            }
            let field = |name: &str| fields.get(name).copied().ok_or_else(|| err(format!("undeclared field `{name}`")));
            let element = |f: &FieldSpec, e: &str| {
                if f.elements.contains_key(e) || parse_rational_poly(e).is_ok() {
                    Ok(())
                } else {
                    Err(err(format!("`{e}` is neither an element of field `{}` nor a polynomial in t", f.name)))
                }
            };
            let curve = |name: &str| {
                if curves.contains_key(name) {
                    Ok(())
                } else {
                    Err(err(format!("undeclared curve `{name}`")))
                }
            };
            match &claim.body {
                ClaimBody::PrimeSplitting { field: name, .. } => {
                    field(name)?;
                }
                ClaimBody::ResidueUnitOrder { field: name, element: e, .. } => element(field(name)?, e)?,
                ClaimBody::RayClass { field: name, units, .. }
                | ClaimBody::UnitFiltration { field: name, units, .. } => {
                    let f = field(name)?;
                    for u in units {
                        element(f, u)?;
                    }
                }
                ClaimBody::ApValue { curve: c, .. }
                | ClaimBody::ConductorExponent { curve: c, .. }
                | ClaimBody::Supersingular { curve: c, .. } => curve(c)?,
                ClaimBody::ApCongruence { curves: cs, .. } => {
                    for c in cs {
                        curve(c)?;
                    }
                }
                ClaimBody::TwoTorsionFieldEvidence { curves: cs, .. } => {
                    if cs.is_empty() {
                        return Err(err("no curves listed".into()));
                    }
                    for c in cs {
                        curve(c)?;
                    }
                }
                ClaimBody::GroupLemma { lemma, deduction, .. }
                    if (*lemma == Lemma::Deduction) != deduction.is_some() =>
                {
                    return Err(err("a `deduction` payload goes with lemma `deduction` and only with it".into()));
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Data files that claims are checked against.
#[derive(Clone, Debug)]
pub struct Tables {
    pub odlyzko: OdlyzkoTable,
    pub catalog: GroupCatalog,
}

impl Tables {
    pub fn bundled() -> Self {
        Tables { odlyzko: OdlyzkoTable::bundled(), catalog: GroupCatalog::bundled() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    HeuristicPass,
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::HeuristicPass => write!(f, "HEURISTIC-PASS"),
            Status::Skipped(reason) => write!(f, "SKIPPED({reason})"),
        }
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Overall outcome of one certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every claim passed outright.
    Pass,
    /// Every non-heuristic claim passed and the heuristic ones passed as
    /// heuristics.
    HeuristicPass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::HeuristicPass => "HEURISTIC-PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub kind: &'static str,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub case: String,
    pub l: u64,
    pub p: u64,
    pub mode: Mode,
    pub claims: Vec<ClaimRecord>,
    pub verdict: Verdict,
}

impl Report {
    /// Exit-code semantics: heuristic passes count unless `strict`.
    pub fn accepted(&self, strict: bool) -> bool {
        match self.verdict {
            Verdict::Pass => true,
            Verdict::HeuristicPass => !strict,
            Verdict::Fail => false,
        }
    }

    pub fn count(&self, status: &Status) -> usize {
        self.claims.iter().filter(|c| &c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("case {} (l = {}, p = {}, {:?})\n", self.case, self.l, self.p, self.mode);
        for (i, c) in self.claims.iter().enumerate() {
            out.push_str(&format!("  [{:>2}] {:<15} {}\n", i + 1, c.status.to_string(), c.kind));
            out.push_str(&format!("       anchor:   {}\n", c.anchor));
            out.push_str(&format!("       expected: {}\n", c.expected));
            out.push_str(&format!("       computed: {}\n", c.computed));
            if let Some(note) = &c.note {
                out.push_str(&format!("       note:     {note}\n"));
            }
        }
        let skipped = self.claims.iter().filter(|c| matches!(c.status, Status::Skipped(_))).count();
        out.push_str(&format!(
            "verdict: {} ({} claims: {} pass, {} heuristic, {} fail, {} skipped)\n",
            self.verdict,
            self.claims.len(),
            self.count(&Status::Pass),
            self.count(&Status::HeuristicPass),
            self.count(&Status::Fail),
            skipped
        ));
        out
    }
}

/// Verifies every claim. Failures are report content, never errors.
pub fn verify(cert: &Certificate, tables: &Tables) -> Report {
    let fields: BTreeMap<&str, Result<MonogenicOrder, String>> =
        cert.fields.par_iter().map(|f| (f.name.as_str(), build_field(f))).collect();
    let curves: BTreeMap<&str, Result<Curve, String>> = cert
        .curves
        .iter()
        .map(|c| (c.name.as_str(), Curve::from_coeffs(c.coeffs).map_err(|e| e.to_string())))
        .collect();
    let specs: BTreeMap<&str, &FieldSpec> = cert.fields.iter().map(|f| (f.name.as_str(), f)).collect();
    let ctx = Context { tables, fields, specs, curves };
    let claims: Vec<ClaimRecord> = cert.claims.par_iter().map(|c| ctx.check(c)).collect();
    let verdict = if claims.iter().all(|c| c.status == Status::Pass) {
        Verdict::Pass
    } else if claims.iter().all(|c| matches!(c.status, Status::Pass | Status::HeuristicPass)) {
        Verdict::HeuristicPass
    } else {
        Verdict::Fail
    };
    Report { case: cert.case.clone(), l: cert.l, p: cert.p, mode: cert.mode, claims, verdict }
}

fn build_field(f: &FieldSpec) -> Result<MonogenicOrder, String> {
    let order = match (f.cyclotomic, &f.poly) {
        (Some(m), _) => MonogenicOrder::cyclotomic(m),
        (None, Some(poly)) => {
            let coeffs = parse_int_poly(poly).map_err(|e| e.to_string())?;
            MonogenicOrder::new(coeffs, f.index_obstruction.unwrap_or(1), None).map_err(|e| e.to_string())?
        }
        (None, None) => return Err("no defining data".into()),
    };
    Ok(match &f.label {
        Some(label) => order.with_label(label.clone()),
        None => order,
    })
}

/// Degree over Q of the field the case analysis starts from: `F(ζ_2p, l^{1/p})`
/// in the semistable mode, with `F` the degree-`p` subfield of `Q(ζ_l)` when
/// `p | l−1` and `Q` otherwise, and `Q(ζ_2p, ζ_l, l^{1/p})` in the tame mode.
pub fn base_field_degree(l: u64, p: u64, mode: Mode) -> Result<u64, CertifyError> {
    if l == p || !is_prime(l) || !is_prime(p) {
        return Err(CertifyError::BadPair { l, p });
    }
    Ok(match (mode, p) {
        // Q(i, √l)
        (Mode::Semistable, 2) => 4,
        (Mode::Semistable, _) => {
            let f = if (l - 1) % p == 0 { p } else { 1 };
            f * (p - 1) * p
        }
        // √l already lies in Q(ζ_4l)
        (Mode::Tame, 2) => euler_phi(4.lcm(&l)),
        (Mode::Tame, _) => p * euler_phi((2 * p).lcm(&l)),
    })
}

/// Largest possible `[L:K]` when `[L:Q] ≤ bound` and `[K:Q] = base`.
pub fn degree_gap(base: u64, bound: u64) -> Result<u64, CertifyError> {
    if base == 0 || bound < base {
        return Err(CertifyError::Contradiction { base, bound });
    }
    Ok(bound / base)
}

/// Root discriminant from a certificate-supplied source.
pub fn root_discriminant(source: &RdSource) -> Result<Radical, String> {
    if let Some(chars) = characters(source) {
        return rd_from_conductors(&chars?).map_err(|e| e.to_string());
    }
    let RdSource::Tower { base, base_degree, rel_degree, norm } = source else {
        unreachable!("non-tower sources are character sets")
    };
    if let Some(chars) = characters(base) {
        let n = chars?.degree() as u64;
        if n != *base_degree {
            return Err(format!("base has {n} characters but base_degree is {base_degree}"));
        }
    }
    let base_rd = root_discriminant(base)?;
    rd_tower(&base_rd, *base_degree, *rel_degree, norm).map_err(|e| e.to_string())
}

fn characters(source: &RdSource) -> Option<Result<CharacterConductorSet, String>> {
    match source {
        RdSource::Conductors { conductors } => {
            Some(CharacterConductorSet::new(conductors.clone()).map_err(|e| e.to_string()))
        }
        RdSource::Cyclotomic { m } => Some(cyclotomic_conductors(*m).map_err(|e| e.to_string())),
        RdSource::Compositum { parts } => Some((|| {
            let mut acc = CharacterConductorSet::new(vec![1]).map_err(|e| e.to_string())?;
            for part in parts {
                let c = characters(part).ok_or("a compositum takes abelian parts only")??;
                let (a, b) = (conductor_of(&acc), conductor_of(&c));
                if a.gcd(&b) != 1 {
                    return Err(format!("conductors {a} and {b} are not coprime"));
                }
                acc = acc.product_coprime(&c);
            }
            Ok(acc)
        })()),
        RdSource::Tower { .. } => None,
    }
}

fn conductor_of(c: &CharacterConductorSet) -> u64 {
    c.conductors().iter().fold(1u64, |acc, &f| acc.lcm(&f))
}

fn rational_decimal(r: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let scaled = (r * BigRational::from_integer(scale.clone())).floor().to_integer();
    let (int, frac) = scaled.div_mod_floor(&scale);
    format!("{int}.{:0>width$}", frac.abs(), width = places)
}

struct Context<'a> {
    tables: &'a Tables,
    fields: BTreeMap<&'a str, Result<MonogenicOrder, String>>,
    specs: BTreeMap<&'a str, &'a FieldSpec>,
    curves: BTreeMap<&'a str, Result<Curve, String>>,
}

struct Outcome {
    computed: String,
    status: Status,
    note: Option<String>,
}

impl Outcome {
    fn check(computed: impl fmt::Display, pass: bool) -> Self {
        Outcome { computed: computed.to_string(), status: if pass { Status::Pass } else { Status::Fail }, note: None }
    }

    fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl<'a> Context<'a> {
    fn check(&self, claim: &Claim) -> ClaimRecord {
        let outcome = self.evaluate(&claim.body).unwrap_or_else(|reason| Outcome {
            computed: "-".into(),
            status: Status::Skipped(reason),
            note: None,
        });
        ClaimRecord {
            kind: claim.body.kind(),
            anchor: claim.anchor.clone(),
            expected: claim.body.expected_string(),
            computed: outcome.computed,
            status: outcome.status,
            note: outcome.note,
        }
    }

    fn field(&self, name: &str) -> Result<&MonogenicOrder, String> {
        match self.fields.get(name) {
            Some(Ok(o)) => Ok(o),
            Some(Err(e)) => Err(format!("field `{name}` is invalid: {e}")),
            None => Err(format!("undeclared field `{name}`")),
        }
    }

    fn curve(&self, name: &str) -> Result<&Curve, String> {
        match self.curves.get(name) {
            Some(Ok(c)) => Ok(c),
            Some(Err(e)) => Err(format!("curve `{name}` is invalid: {e}")),
            None => Err(format!("undeclared curve `{name}`")),
        }
    }

    fn element(&self, field: &str, order: &MonogenicOrder, e: &str) -> Result<crate::orders::Element, String> {
        let text = self.specs.get(field).and_then(|s| s.elements.get(e)).map_or(e, |s| s.as_str());
        order.element(text).map_err(|err| err.to_string())
    }

    fn elements(
        &self,
        field: &str,
        order: &MonogenicOrder,
        es: &[String],
    ) -> Result<Vec<crate::orders::Element>, String> {
        es.iter().map(|e| self.element(field, order, e)).collect()
    }

    fn prime(&self, order: &MonogenicOrder, r: PrimeRef) -> Result<PrimeFactor, String> {
        order.prime_over(r.q, r.index).map_err(|e| match e {
            OrderError::ForeignPrime => format!("there is no prime #{} over {}", r.index, r.q),
            e => e.to_string(),
        })
    }

    fn evaluate(&self, body: &ClaimBody) -> Result<Outcome, String> {
        Ok(match body {
            ClaimBody::ExtDim { l, p, expected } => {
                let d = ext_dimension(*l, *p).map_err(|e| e.to_string())?;
                Outcome::check(format!("dim {}", d.dimension), d.dimension == *expected)
            }
            ClaimBody::BudgetValue { l, p, mode, expected, printed } => {
                let value = budget(*l, *p, *mode).map_err(|e| e.to_string())?.value;
                self.radical_outcome(&value, expected, printed.as_ref())
            }
            ClaimBody::RdEquals { source, expected, printed } => {
                let value = root_discriminant(source)?;
                self.radical_outcome(&value, expected, printed.as_ref())
            }
            ClaimBody::DegreeBound { delta, expected } => match degree_bound(&self.tables.odlyzko, delta) {
                DegreeBound::AtMost(d) => {
                    let out = Outcome::check(format!("degree <= {d}"), d <= *expected);
                    if d <= *expected {
                        out
                    } else {
                        let n = expected + 1;
                        let note = match self.tables.odlyzko.bound_at(n) {
                            Some(b) => format!(
                                "the table gives b({n}) = {}, not above delta = {}...",
                                rational_decimal(b, self.tables.odlyzko.precision),
                                delta.truncated(self.tables.odlyzko.precision)
                            ),
                            None => format!("the table has no row for degree {n}"),
                        };
                        out.noted(note)
                    }
                }
                DegreeBound::Exhausted => Outcome::check("table exhausted", false),
            },
            ClaimBody::BaseFieldDegree { l, p, mode, chain, expected } => {
                let d = base_field_degree(*l, *p, *mode).map_err(|e| e.to_string())?;
                if chain.is_empty() {
                    Outcome::check(d, d == *expected)
                } else if chain[0] != d {
                    Outcome::check(format!("chain starts at degree {}", chain[0]), false)
                        .noted(format!("the mandated base field has degree {d}"))
                } else {
                    let total: u64 = chain.iter().product();
                    let steps: Vec<String> = chain.iter().map(|c| c.to_string()).collect();
                    Outcome::check(total, total == *expected).noted(format!(
                        "tower of relative degrees {} over Q, starting at the mandated field of degree {d}",
                        steps.join(" x ")
                    ))
                }
            }
            ClaimBody::DegreeGap { base_degree, bound, expected } => match degree_gap(*base_degree, *bound) {
                Ok(g) => Outcome::check(g, g == *expected),
                Err(e) => Outcome::check(e, false),
            },
            ClaimBody::PrimeSplitting { field, q, expected } => {
                let order = self.field(field)?;
                let primes = order.factor_prime(*q).map_err(|e| e.to_string())?;
                let shape: Vec<Splitting> = primes.iter().map(|p| Splitting { e: p.e, f: p.f, g: p.g }).collect();
                let uniform = shape.iter().all(|s| s == &shape[0]);
                let computed = if uniform {
                    let s = shape[0];
                    format!("e={} f={} g={} (residue field of size {})", s.e, s.f, s.g, primes[0].residue_field_size())
                } else {
                    let parts: Vec<String> = shape.iter().map(|s| format!("(e={} f={})", s.e, s.f)).collect();
                    parts.join(" ")
                };
                Outcome::check(computed, uniform && shape[0] == *expected)
            }
            ClaimBody::ResidueUnitOrder { field, prime, element, expected } => {
                let order = self.field(field)?;
                let p = self.prime(order, *prime)?;
                let u = self.element(field, order, element)?;
                let k = image_order(order, &p, &u).map_err(|e| e.to_string())?;
                Outcome::check(format!("{k} (residue field of size {})", p.residue_field_size()), k == *expected)
            }
            ClaimBody::RayClass { field, modulus, units, expected } => {
                let order = self.field(field)?;
                let h = self
                    .specs
                    .get(field.as_str())
                    .and_then(|s| s.class_number.as_ref())
                    .ok_or_else(|| format!("class number of `{field}` is not declared"))?;
                if !order.is_totally_imaginary() {
                    return Err(format!("`{field}` has real places, units mod the modulus miss the sign data"));
                }
                let m = self.modulus(order, modulus)?;
                let us = self.elements(field, order, units)?;
                let g = ray_class_order(order, &m, &us, h.value).map_err(|e| e.to_string())?;
                let want = FiniteAbelianGroup::from_cyclic_orders(expected);
                Outcome::check(format!("{g} (order {})", g.order()), g == want)
                    .noted(format!("class number {} taken from: {}", h.value, h.anchor))
            }
            ClaimBody::UnitFiltration { field, prime, units, from, to, expected } => {
                let order = self.field(field)?;
                let p = self.prime(order, *prime)?;
                let us = self.elements(field, order, units)?;
                let chk = filtration_check(order, &p, &us, *from, *to).map_err(|e| e.to_string())?;
                let want = FiniteAbelianGroup::from_cyclic_orders(&expected.quotient);
                Outcome::check(
                    format!("quotient {}, units generate a subgroup of order {}", chk.quotient, chk.subgroup_order),
                    chk.quotient == want && chk.generated == expected.generated,
                )
                .noted(format!("prime over {} with e={} f={} g={}", p.q, p.e, p.f, p.g))
            }
            ClaimBody::ApValue { curve, q, expected } => {
                let a = self.curve(curve)?.a_p(*q).map_err(|e| e.to_string())?;
                Outcome::check(a, a == *expected)
            }
            ClaimBody::ApCongruence { curves, primes, modulus, expected } => {
                if *modulus < 1 {
                    return Err(format!("modulus {modulus} must be positive"));
                }
                let (a, b) = (self.curve(&curves[0])?, self.curve(&curves[1])?);
                let mut pairs = Vec::with_capacity(primes.len());
                for &q in primes {
                    pairs.push((q, a.a_p(q).map_err(|e| e.to_string())?, b.a_p(q).map_err(|e| e.to_string())?));
                }
                let bad: Vec<u64> =
                    pairs.iter().filter(|(_, x, y)| (x - y).rem_euclid(*modulus) != 0).map(|t| t.0).collect();
                let listing: Vec<String> = pairs.iter().map(|(q, x, y)| format!("q={q}: {x} vs {y}")).collect();
                let pass = match expected {
                    Congruence::AllCongruent => bad.is_empty(),
                    Congruence::SomeIncongruent => !bad.is_empty(),
                };
                Outcome::check(format!("{}; incongruent at {bad:?}", listing.join(", ")), pass)
            }
            ClaimBody::ConductorExponent { curve, q, expected } => {
                let f = self.curve(curve)?.conductor_exponent(*q).map_err(|e| e.to_string())?;
                Outcome::check(f, f == *expected)
            }
            ClaimBody::Supersingular { curve, q, expected } => {
                let c = self.curve(curve)?;
                let s = c.is_supersingular(*q).map_err(|e| e.to_string())?;
                let a = c.a_p(*q).map_err(|e| e.to_string())?;
                let word = if s { "supersingular" } else { "ordinary" };
                Outcome::check(format!("{word} (a_{q} = {a})"), s == *expected)
            }
            ClaimBody::TwoTorsionFieldEvidence { curves, cubic, prime_bound, expected } => {
                let target = Cubic::from_i64(*cubic).map_err(|e| e.to_string())?;
                let mut all_agree = true;
                let mut parts = Vec::new();
                for name in curves {
                    let f = self.curve(name)?.two_division_cubic();
                    let ev = same_splitting_field_evidence(&f, &target, *prime_bound).map_err(|e| e.to_string())?;
                    all_agree &= ev.pass;
                    parts.push(match ev.mismatch {
                        Some((q, x, y)) => format!("{name}: root counts differ at {q} ({x} vs {y})"),
                        None if !ev.square_class_match => format!("{name}: discriminant square classes differ"),
                        None => format!("{name}: square class and root counts agree at {} primes", ev.primes_checked),
                    });
                }
                let status = match (all_agree, expected) {
                    (true, true) => Status::HeuristicPass,
                    // a mismatch proves the fields differ
                    (false, false) => Status::Pass,
                    _ => Status::Fail,
                };
                Outcome {
                    computed: parts.join("; "),
                    status,
                    note: Some("agreement is necessary evidence, not a proof of equal splitting fields".into()),
                }
            }
            ClaimBody::GroupLemma { lemma, deduction, expected_counterexamples } => {
                let catalog = &self.tables.catalog;
                let max_order = catalog.entries().iter().map(|e| e.order).max().unwrap_or(0);
                let scope = format!("{} groups of order <= {max_order}", catalog.entries().len());
                let (found, applicable): (Vec<String>, usize) = match lemma {
                    Lemma::CenterCyclicImpliesAbelian => summarize(center_cyclic_implies_abelian_check(catalog)),
                    Lemma::Taussky => summarize(taussky_check(catalog)),
                    Lemma::Deduction => {
                        let d = deduction.as_ref().ok_or("missing deduction payload")?;
                        let v = deduction_chain_check(catalog, d);
                        (v.counterexample.into_iter().collect(), v.satisfying)
                    }
                };
                let computed = if found.is_empty() {
                    format!("0 counterexamples; {applicable} groups meet the hypotheses among {scope}")
                } else {
                    format!("counterexample {}", found.join(", "))
                };
                let out = Outcome::check(computed, found.len() == *expected_counterexamples);
                match deduction {
                    Some(d) => out.noted(format!("scanned the catalog only: {}", d.name)),
                    None => out.noted("scanned the catalog only"),
                }
            }
        })
    }

    fn radical_outcome(&self, value: &Radical, expected: &Radical, printed: Option<&Printed>) -> Outcome {
        let equal = value == expected;
        let Some(printed) = printed else {
            return Outcome::check(value, equal);
        };
        let places = printed.digits.split_once('.').map_or(0, |(_, frac)| frac.len());
        let truncated = value.truncated(places);
        let agrees = truncated == printed.digits;
        let out =
            Outcome::check(format!("{value} = {}...", value.truncated(places + 2)), equal && agrees == printed.matches);
        if agrees {
            out
        } else {
            out.noted(format!("printed {} disagrees with the exact value {}...", printed.digits, truncated))
        }
    }

    fn modulus(&self, order: &MonogenicOrder, parts: &[ModulusPart]) -> Result<Vec<(PrimeFactor, u32)>, String> {
        let mut out: Vec<(PrimeFactor, u32)> = Vec::new();
        for part in parts {
            let primes = order.factor_prime(part.q).map_err(|e| e.to_string())?;
            let chosen: Vec<(PrimeFactor, u32)> = match part.index {
                Some(i) => {
                    let p = primes.get(i).cloned().ok_or(format!("there is no prime #{i} over {}", part.q))?;
                    vec![(p, part.exponent)]
                }
                None => primes
                    .into_iter()
                    .map(|p| {
                        let k = p.e * part.exponent;
                        (p, k)
                    })
                    .collect(),
            };
            for (p, k) in chosen {
                match out.iter_mut().find(|(x, _)| *x == p) {
                    Some((_, e)) => *e += k,
                    None => out.push((p, k)),
                }
            }
        }
        Ok(out)
    }
}

fn summarize(verdicts: Vec<GroupVerdict>) -> (Vec<String>, usize) {
    let applicable = verdicts.iter().filter(|v| v.applicable).count();
    (verdicts.into_iter().filter(|v| !v.pass).map(|v| v.label).collect(), applicable)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_field_degrees() {
        assert_eq!(base_field_degree(2, 3, Mode::Tame).unwrap(), 6);
        assert_eq!(base_field_degree(3, 2, Mode::Tame).unwrap(), 4);
        assert_eq!(base_field_degree(5, 2, Mode::Tame).unwrap(), 8);
        assert_eq!(base_field_degree(13, 2, Mode::Semistable).unwrap(), 4);
        assert_eq!(base_field_degree(11, 2, Mode::Semistable).unwrap(), 4);
        assert_eq!(base_field_degree(7, 3, Mode::Semistable).unwrap(), 18);
        assert_eq!(base_field_degree(5, 3, Mode::Semistable).unwrap(), 6);
        assert!(base_field_degree(3, 3, Mode::Tame).is_err());
    }

    #[test]
    fn degree_gaps() {
        assert_eq!(degree_gap(6, 23).unwrap(), 3);
        assert_eq!(degree_gap(12, 43).unwrap(), 3);
        assert_eq!(degree_gap(7, 7).unwrap(), 1);
        assert!(matches!(degree_gap(8, 7), Err(CertifyError::Contradiction { .. })));
    }

    #[test]
    fn decimals_of_rationals() {
        let r = BigRational::new(BigInt::from(119794), BigInt::from(10000));
        assert_eq!(rational_decimal(&r, 4), "11.9794");
        assert_eq!(rational_decimal(&r, 2), "11.97");
        let r = BigRational::new(BigInt::from(1), BigInt::from(20));
        assert_eq!(rational_decimal(&r, 3), "0.050");
    }

    #[test]
    fn status_strings() {
        assert_eq!(Status::Skipped("x".into()).to_string(), "SKIPPED(x)");
        assert_eq!(serde_json::to_string(&Status::HeuristicPass).unwrap(), "\"HEURISTIC-PASS\"");
    }
}
