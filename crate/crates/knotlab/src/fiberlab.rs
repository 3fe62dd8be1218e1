//! The fibering obstruction engine: knot reports, the classical monicity
//! test, verdict composition for adjacency-based obstructions, adjacency
//! bounds, and the symplectic flag.
//!
//! A NOT_FIBERED verdict is only ever emitted along one of two auditable
//! chains: a non-monic Alexander polynomial, or the full hypothesis list
//! (equal Alexander polynomials, fibered target, PASS certificate with
//! n > 1, and a computed distinctness witness). Every verdict carries its
//! chain.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::adjacency::{
    bound_check, rational_serde, AdjacencyCertificate, BoundCheck, GenusInterval,
};
use crate::braid::{alexander_via_burau, braid_to_pd, seifert_from_braid, BraidWord};
use crate::diagram::{alexander_from_pd, kauffman_jones, JonesPoly, PlanarDiagram};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::seifmat::SeifertMatrix;
use crate::table::TableEntry;

/// Abelian invariants as computable from the input route: diagram-only
/// inputs have no Seifert matrix and hence no signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportInvariants {
    pub alexander: LaurentPoly,
    pub degree: u64,
    pub monic: bool,
    pub signature: Option<i64>,
    #[serde(with = "crate::seifmat::bigint_serde")]
    pub determinant: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status")]
pub enum FiberedStatus {
    #[serde(rename = "FIBERED")]
    Fibered { source: String },
    #[serde(rename = "NOT_FIBERED")]
    NotFibered { reason: String },
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl FiberedStatus {
    pub fn is_fibered(&self) -> bool {
        matches!(self, FiberedStatus::Fibered { .. })
    }
}

/// Everything the obstruction logic knows about one knot.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KnotReport {
    pub id: String,
    pub invariants: ReportInvariants,
    pub jones: Option<JonesPoly>,
    pub genus: GenusInterval,
    /// Bounds on m = 2g - degree coming from the genus interval.
    #[serde(with = "rational_serde")]
    pub m_lower: BigRational,
    #[serde(
        serialize_with = "serialize_opt_rational",
        deserialize_with = "deserialize_opt_rational"
    )]
    pub m_upper: Option<BigRational>,
    pub fibered: FiberedStatus,
}

fn serialize_opt_rational<S: serde::Serializer>(
    x: &Option<BigRational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        None => serializer.serialize_none(),
        Some(v) => rational_serde::serialize(v, serializer),
    }
}

fn deserialize_opt_rational<'de, D: serde::Deserializer<'de>>(
    deserializer: D,
) -> std::result::Result<Option<BigRational>, D::Error> {
    use serde::de::Error as _;
    let v: Option<String> = Option::deserialize(deserializer)?;
    match v {
        None => Ok(None),
        Some(s) => rational_serde::parse(&s)
            .map(Some)
            .ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))),
    }
}

impl KnotReport {
    /// m(K) = 0 is certified exactly when the surface genus meets the degree
    /// bound.
    pub fn m_zero_certified(&self) -> bool {
        self.m_upper.as_ref().is_some_and(|u| u.is_zero())
    }
}

fn m_interval(degree: u64, genus: &GenusInterval) -> (BigRational, Option<BigRational>) {
    let deg = BigRational::from(BigInt::from(degree));
    let two = BigRational::from(BigInt::from(2));
    let lower = (&two * &genus.lower - &deg).max(BigRational::zero());
    let upper = genus
        .upper
        .map(|u| &two * &BigRational::from(BigInt::from(u)) - &deg);
    (lower, upper)
}

fn status_from(
    invariants: &ReportInvariants,
    genus: &GenusInterval,
    m_upper: &Option<BigRational>,
    table_hint: Option<&TableEntry>,
) -> FiberedStatus {
    if !invariants.monic {
        return FiberedStatus::NotFibered {
            reason: "non-monic".into(),
        };
    }
    if let Some(entry) = table_hint {
        if entry.fibered {
            return FiberedStatus::Fibered {
                source: "table".into(),
            };
        }
    }
    // Genus <= 1 classification by polynomial plus a certified genus.
    let m_zero = m_upper.as_ref().is_some_and(|u| u.is_zero());
    if genus.upper.is_some_and(|u| u <= 1) && m_zero {
        let trefoil: LaurentPoly = "1 - t + t^2".parse().unwrap();
        let figure_eight: LaurentPoly = "1 - 3*t + t^2".parse().unwrap();
        let a = &invariants.alexander;
        if a.is_one() || *a == trefoil || *a == figure_eight {
            return FiberedStatus::Fibered {
                source: "genus <= 1 classification".into(),
            };
        }
    }
    FiberedStatus::Unknown
}

/// Full report from a braid word: the three Alexander oracles must agree or
/// the call fails loudly.
pub fn report_from_braid(
    id: &str,
    word: &BraidWord,
    cap: usize,
    table_hint: Option<&TableEntry>,
) -> Result<KnotReport> {
    let (v, g_upper) = seifert_from_braid(word)?;
    let abelian = v.abelian_invariants()?;
    let from_burau = alexander_via_burau(word)?;
    let diagram = braid_to_pd(word)?;
    let from_regions = alexander_from_pd(&diagram)?;
    if abelian.alexander != from_burau || from_burau != from_regions {
        return Err(Error::OracleDisagreement {
            id: id.to_string(),
            detail: format!(
                "matrix {} | Burau {} | regions {}",
                abelian.alexander, from_burau, from_regions
            ),
        });
    }
    let jones = kauffman_jones(&diagram, cap)?;
    let genus = GenusInterval::new(
        BigRational::new(BigInt::from(abelian.degree), BigInt::from(2)),
        Some(g_upper as u64),
    );
    let invariants = ReportInvariants {
        alexander: abelian.alexander,
        degree: abelian.degree,
        monic: abelian.monic,
        signature: Some(abelian.signature),
        determinant: abelian.determinant,
    };
    let (m_lower, m_upper) = m_interval(invariants.degree, &genus);
    let fibered = status_from(&invariants, &genus, &m_upper, table_hint);
    Ok(KnotReport {
        id: id.to_string(),
        invariants,
        jones: Some(jones),
        genus,
        m_lower,
        m_upper,
        fibered,
    })
}

/// Report from a bare diagram: region-method Alexander and Jones only; no
/// Seifert matrix, so no signature, and no genus upper bound except for the
/// crossingless unknot diagram.
pub fn report_from_pd(id: &str, diagram: &PlanarDiagram, cap: usize) -> Result<KnotReport> {
    let alexander = alexander_from_pd(diagram)?;
    let (degree, monic) = alexander.span_monic()?;
    let jones = kauffman_jones(diagram, cap)?;
    let determinant = {
        use num_traits::Signed;
        alexander.eval_int(-1).abs()
    };
    let genus_upper = (diagram.crossing_count() == 0).then_some(0);
    let genus = GenusInterval::new(
        BigRational::new(BigInt::from(degree), BigInt::from(2)),
        genus_upper,
    );
    let invariants = ReportInvariants {
        alexander,
        degree,
        monic,
        signature: None,
        determinant,
    };
    let (m_lower, m_upper) = m_interval(degree, &genus);
    let fibered = status_from(&invariants, &genus, &m_upper, None);
    Ok(KnotReport {
        id: id.to_string(),
        invariants,
        jones: Some(jones),
        genus,
        m_lower,
        m_upper,
        fibered,
    })
}

/// Report from a Seifert matrix, e.g. a generated family member. The genus
/// upper bound is the presenting surface's genus; a Jones witness can be
/// attached when a realized diagram supplies one.
pub fn report_from_matrix(
    id: &str,
    matrix: &SeifertMatrix,
    jones: Option<JonesPoly>,
) -> Result<KnotReport> {
    let abelian = matrix.abelian_invariants()?;
    let genus = GenusInterval::new(
        BigRational::new(BigInt::from(abelian.degree), BigInt::from(2)),
        Some(matrix.genus() as u64),
    );
    let invariants = ReportInvariants {
        alexander: abelian.alexander,
        degree: abelian.degree,
        monic: abelian.monic,
        signature: Some(abelian.signature),
        determinant: abelian.determinant,
    };
    let (m_lower, m_upper) = m_interval(invariants.degree, &genus);
    let fibered = status_from(&invariants, &genus, &m_upper, None);
    Ok(KnotReport {
        id: id.to_string(),
        invariants,
        jones,
        genus,
        m_lower,
        m_upper,
        fibered,
    })
}

// ---- Verdict composition ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum FiberingVerdict {
    /// The full obstruction chain fired.
    #[serde(rename = "NOT_FIBERED")]
    NotFibered { chain: Vec<String> },
    /// Hypotheses hold but no computed invariant distinguishes the knots.
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive { reason: String },
    /// A hypothesis failed; it is named.
    #[serde(rename = "INAPPLICABLE")]
    Inapplicable { failed_hypothesis: String },
}

/// Compose the adjacency obstruction: given reports for the knot and a
/// fibered target plus a PASS certificate with n > 1, equal Alexander
/// polynomials and a distinctness witness force the knot to be non-fibered,
/// and its 0-surgery not to fiber over the circle.
pub fn fibering_verdict(
    knot: &KnotReport,
    target: &KnotReport,
    cert: &AdjacencyCertificate,
) -> FiberingVerdict {
    if !cert.passed() {
        return FiberingVerdict::Inapplicable {
            failed_hypothesis: "adjacency certificate did not PASS".into(),
        };
    }
    if cert.n <= 1 {
        return FiberingVerdict::Inapplicable {
            failed_hypothesis: "requires n > 1".into(),
        };
    }
    if !target.fibered.is_fibered() {
        return FiberingVerdict::Inapplicable {
            failed_hypothesis: format!("target {} is not known to be fibered", target.id),
        };
    }
    if knot.invariants.alexander != target.invariants.alexander {
        return FiberingVerdict::Inapplicable {
            failed_hypothesis: "requires equal Alexander polynomials".into(),
        };
    }
    let distinctness = match (&knot.jones, &target.jones) {
        (Some(a), Some(b)) if a.polynomial != b.polynomial => Some("Jones polynomials differ"),
        _ => match (knot.invariants.signature, target.invariants.signature) {
            (Some(a), Some(b)) if a != b => Some("signatures differ"),
            _ => None,
        },
    };
    let Some(witness) = distinctness else {
        return FiberingVerdict::Inconclusive {
            reason: "no distinctness witness among computed invariants".into(),
        };
    };
    let source = match &target.fibered {
        FiberedStatus::Fibered { source } => source.clone(),
        _ => unreachable!(),
    };
    FiberingVerdict::NotFibered {
        chain: vec![
            format!(
                "Alexander polynomials agree: {}",
                knot.invariants.alexander
            ),
            format!("target {} is fibered ({source})", target.id),
            format!(
                "adjacency certificate PASS with n = {} > 1 ({})",
                cert.n, cert.note
            ),
            format!("distinctness witness: {witness}"),
            format!("conclusion: {} is not fibered", knot.id),
            format!(
                "consequence: 0-surgery on {} does not fiber over the circle",
                knot.id
            ),
        ],
    }
}

// ---- Adjacency-degree bounds ----

/// Bounds on the maximal adjacency degree of a knot to fibered knots
/// sharing its Alexander polynomial, together with the symplectic flag.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaBoundsReport {
    pub lower: u64,
    /// 6 g_upper - 3, or 0 when m = 0 is certified; absent when no genus
    /// upper bound is known.
    pub upper: Option<u64>,
    pub witnesses: Vec<AlphaWitness>,
    pub symplectic_flag: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaWitness {
    pub target: String,
    pub n: u64,
    pub accepted: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum AlphaOutcome {
    Report(AlphaBoundsReport),
    /// The invariant is only defined for monic Alexander polynomials.
    Inapplicable { reason: String },
}

/// Bound the adjacency-degree invariant from witnessed certificates: the
/// lower bound is the largest n among witnesses that survive the full
/// obstruction chain; the upper bound is 0 when m = 0 is certified and
/// 6 g_upper - 3 otherwise. A positive lower bound obstructs a symplectic
/// structure on the product of the circle with the 0-surgery manifold.
pub fn alpha_and_symplectic(
    knot: &KnotReport,
    witnesses: &[(KnotReport, AdjacencyCertificate)],
) -> AlphaOutcome {
    if !knot.invariants.monic {
        return AlphaOutcome::Inapplicable {
            reason: "adjacency-degree bounds are defined for monic Alexander polynomials".into(),
        };
    }
    let mut lower = 0u64;
    let mut records = Vec::new();
    for (target, cert) in witnesses {
        let verdict = fibering_verdict(knot, target, cert);
        let chain_ok = matches!(verdict, FiberingVerdict::NotFibered { .. });
        // A witness must also be feasible against the genus bounds, and a
        // knot with certified m = 0 admits no valid witness at all: the
        // obstruction chain forces m > 0.
        let feasible = matches!(
            bound_check(cert.n as u64, &knot.genus),
            BoundCheck::Feasible { .. }
        );
        let consistent = !knot.m_zero_certified();
        let accepted = chain_ok && feasible && consistent;
        if accepted {
            lower = lower.max(cert.n as u64);
        }
        records.push(AlphaWitness {
            target: target.id.clone(),
            n: cert.n as u64,
            accepted,
            detail: match verdict {
                FiberingVerdict::NotFibered { .. } if !consistent => {
                    "rejected: inconsistent with certified m = 0".into()
                }
                FiberingVerdict::NotFibered { .. } if !feasible => {
                    "rejected: exceeds the genus feasibility bound".into()
                }
                FiberingVerdict::NotFibered { .. } => "full obstruction chain holds".into(),
                FiberingVerdict::Inconclusive { reason } => format!("rejected: {reason}"),
                FiberingVerdict::Inapplicable { failed_hypothesis } => {
                    format!("rejected: {failed_hypothesis}")
                }
            },
        });
    }
    let upper = if knot.m_zero_certified() {
        Some(0)
    } else {
        knot.genus.upper.map(|g| 6 * g - 3)
    };
    let symplectic_flag = if lower > 0 {
        format!(
            "OBSTRUCTED: the product of the circle with 0-surgery on {} admits no symplectic \
             structure",
            knot.id
        )
    } else {
        "no obstruction from the adjacency bound".to_string()
    };
    AlphaOutcome::Report(AlphaBoundsReport {
        lower,
        upper,
        witnesses: records,
        symplectic_flag,
    })
}

// ---- Genus-one classification ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Genus1Status {
    Fibered { knot: String },
    Unknown { warning: String },
}

/// The fibered knots of genus at most one are the trefoils, the figure
/// eight and the unknot; classification here is by normalized polynomial
/// plus a certified genus, never by isotopy.
pub fn genus1_fibered_classify(report: &KnotReport) -> Result<Genus1Status> {
    let Some(upper) = report.genus.upper else {
        return Err(Error::BadPresentation(
            "genus-1 classification needs a genus upper bound".into(),
        ));
    };
    if upper > 1 {
        return Err(Error::BadPresentation(format!(
            "genus-1 classification needs genus <= 1, have upper bound {upper}"
        )));
    }
    let a = &report.invariants.alexander;
    let trefoil: LaurentPoly = "1 - t + t^2".parse().unwrap();
    let figure_eight: LaurentPoly = "1 - 3*t + t^2".parse().unwrap();
    let name = if a.is_one() {
        Some("unknot")
    } else if *a == trefoil {
        Some("trefoil")
    } else if *a == figure_eight {
        Some("figure eight")
    } else {
        None
    };
    match name {
        Some(name) if report.m_zero_certified() => Ok(Genus1Status::Fibered {
            knot: name.to_string(),
        }),
        Some(name) => Ok(Genus1Status::Unknown {
            warning: format!(
                "polynomial matches the {name} but the genus certificate is missing; \
                 a polynomial match is not an identification"
            ),
        }),
        None => Ok(Genus1Status::Unknown {
            warning: "no fibered knot of genus <= 1 has this polynomial".into(),
        }),
    }
}
