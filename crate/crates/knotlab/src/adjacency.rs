//! Adjacency presentations and their certificates: the 2^n - 1 subset
//! verifier for marked twist sites, matrix-level family generation, and the
//! genus-feasibility bound.
//!
//! A PASS certificate is an invariant-level necessary condition: every
//! nonempty subset of twist sites was changed and the resulting diagram
//! matched the target on every computed invariant. It is never an isotopy
//! proof, and the certificate says so.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::braid::{alexander_via_burau, braid_to_pd, parse_braid, seifert_from_braid, BraidWord};
use crate::diagram::{
    alexander_from_pd, apply_twist_subset, kauffman_jones, JonesPoly, PlanarDiagram, TwistSite,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::seifmat::{MoveCertificate, SeifertMatrix};
use crate::table;

/// Serialize exact rationals as "n" or "n/d" strings.
pub mod rational_serde {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        x: &BigRational,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let s = if x.denom() == &BigInt::from(1) {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        };
        serializer.serialize_str(&s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }

    pub(crate) fn parse(s: &str) -> Option<BigRational> {
        match s.split_once('/') {
            None => s.trim().parse::<BigInt>().ok().map(BigRational::from),
            Some((n, d)) => {
                let numer = n.trim().parse::<BigInt>().ok()?;
                let denom = d.trim().parse::<BigInt>().ok()?;
                if denom == BigInt::from(0) {
                    None
                } else {
                    Some(BigRational::new(numer, denom))
                }
            }
        }
    }
}

/// Genus bounds for a knot: the degree bound below, a constructed-surface
/// genus above when one is known.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenusInterval {
    #[serde(with = "rational_serde")]
    pub lower: BigRational,
    pub upper: Option<u64>,
}

impl GenusInterval {
    pub fn new(lower: BigRational, upper: Option<u64>) -> Self {
        GenusInterval { lower, upper }
    }
}

/// Input route for a presentation: a braid word or an explicit diagram,
/// with twist sites attached.
#[derive(Clone, Debug)]
pub enum PresentationBase {
    Braid(BraidWord),
    Diagram(PlanarDiagram),
}

/// Reference invariants of the target knot.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TargetInvariants {
    pub alexander: LaurentPoly,
    pub jones: Option<JonesPoly>,
    pub signature: Option<i64>,
    #[serde(with = "crate::seifmat::bigint_serde")]
    pub determinant: BigInt,
    pub fibered: Option<bool>,
}

impl TargetInvariants {
    /// Internal consistency: the determinant is |alexander(-1)|.
    pub fn validate(&self) -> Result<()> {
        let det = self.alexander.eval_int(-1).abs();
        if det != self.determinant {
            return Err(Error::BadPresentation(format!(
                "target determinant {} does not match |alexander(-1)| = {det}",
                self.determinant
            )));
        }
        Ok(())
    }
}

/// A presentation of a knot with `n` marked twist sites and a target knot.
#[derive(Clone, Debug)]
pub struct AdjacencyPresentation {
    pub base: PresentationBase,
    pub twist_sites: Vec<TwistSite>,
    pub target_name: String,
    pub target: TargetInvariants,
    pub n: usize,
}

impl AdjacencyPresentation {
    /// The base diagram with twist sites attached and validated.
    pub fn diagram(&self) -> Result<PlanarDiagram> {
        let d = match &self.base {
            PresentationBase::Braid(word) => braid_to_pd(word)?,
            PresentationBase::Diagram(d) => d.clone(),
        };
        d.with_sites(self.twist_sites.clone())
    }

    pub fn validate(&self) -> Result<()> {
        if self.n != self.twist_sites.len() {
            return Err(Error::BadPresentation(format!(
                "n = {} but {} twist sites are marked",
                self.n,
                self.twist_sites.len()
            )));
        }
        self.target.validate()?;
        self.diagram().map(|_| ())
    }
}

/// One verified subset of twist sites.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubsetRecord {
    /// 1-based site indices.
    pub subset: Vec<usize>,
    pub alexander: LaurentPoly,
    pub jones: Option<JonesPoly>,
    pub matches: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

/// Result of running the subset verifier on a presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdjacencyCertificate {
    pub n: usize,
    pub target: String,
    pub records: Vec<SubsetRecord>,
    pub verdict: Verdict,
    /// An invariant in which the presented knot differs from the target,
    /// when one was found; this backs distinctness claims downstream.
    pub distinctness: Option<String>,
    /// The certificate's epistemic status, stated explicitly.
    pub note: String,
}

impl AdjacencyCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// All nonempty subsets of 0..n, sorted by size then lexicographically.
fn subsets_in_report_order(n: usize) -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (1u64..(1 << n))
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

/// Enumerate every nonempty subset of twist sites, change each subset, and
/// compare the resulting invariants with the target's.
pub fn verify_adjacency(p: &AdjacencyPresentation, cap: usize) -> Result<AdjacencyCertificate> {
    p.validate()?;
    if p.n > 16 {
        return Err(Error::BadPresentation(format!(
            "verification over 2^{} - 1 subsets exceeds the supported size (16 sites)",
            p.n
        )));
    }
    let diagram = p.diagram()?;
    if diagram.crossing_count() > cap {
        return Err(Error::CapExceeded {
            crossings: diagram.crossing_count(),
            cap,
        });
    }
    let base_alexander = alexander_from_pd(&diagram)?;
    let base_jones = kauffman_jones(&diagram, cap)?;
    let distinctness = if p
        .target
        .jones
        .as_ref()
        .is_some_and(|tj| tj.polynomial != base_jones.polynomial)
    {
        Some("jones".to_string())
    } else if base_alexander != p.target.alexander {
        Some("alexander".to_string())
    } else {
        None
    };
    let mut records = Vec::new();
    let mut all_match = true;
    for subset in subsets_in_report_order(p.n) {
        let changed = apply_twist_subset(&diagram, &subset)?;
        let alexander = alexander_from_pd(&changed)?;
        let jones = kauffman_jones(&changed, cap)?;
        let mut matches = alexander == p.target.alexander;
        if let Some(tj) = &p.target.jones {
            matches = matches && jones.polynomial == tj.polynomial;
        }
        all_match = all_match && matches;
        records.push(SubsetRecord {
            subset: subset.iter().map(|i| i + 1).collect(),
            alexander,
            jones: Some(jones),
            matches,
        });
    }
    Ok(AdjacencyCertificate {
        n: p.n,
        target: p.target_name.clone(),
        records,
        verdict: if all_match { Verdict::Pass } else { Verdict::Fail },
        distinctness,
        note: "invariant-level certificate (necessary condition), not an isotopy proof".into(),
    })
}

// ---- Matrix-level families ----

/// One subset check of a matrix-level family: zero the chosen twist orders
/// and reduce every appended block; the replay must return the base matrix
/// exactly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilySubsetRecord {
    pub subset: Vec<usize>,
    pub exact_match: bool,
}

/// Report produced with a block-extended family member.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyReport {
    pub orders: Vec<i64>,
    pub base_genus: u64,
    pub surface_genus: u64,
    pub alexander: LaurentPoly,
    pub invariants_equal: bool,
    pub signature: i64,
    #[serde(with = "crate::seifmat::bigint_serde")]
    pub determinant: BigInt,
    /// Moves reducing the extended matrix back to the base.
    pub reduction: MoveCertificate,
    pub reduction_replays_to_base: bool,
    /// Whether some twist order exceeds 1 in magnitude, the hypothesis that
    /// keeps the family member from being isotopic to the base knot.
    pub distinctness_hypothesis: bool,
    pub subset_checks: Option<Vec<FamilySubsetRecord>>,
    pub rationale: Vec<String>,
}

/// Block-extend a base matrix by the given twist orders and assemble the
/// full family report: invariant equality, reduction certificate, and the
/// per-subset destabilization checks realizing site changes at the matrix
/// level.
pub fn generate_family(
    base: &SeifertMatrix,
    n: usize,
    orders: &[i64],
) -> Result<(SeifertMatrix, FamilyReport)> {
    if n == 0 || orders.len() != n {
        return Err(Error::BadPresentation(format!(
            "family needs n >= 1 twist orders, got n = {n} with {} orders",
            orders.len()
        )));
    }
    let base_inv = base.abelian_invariants()?;
    let extended = base.block_extend(orders)?;
    let ext_inv = extended.abelian_invariants()?;
    let invariants_equal = base_inv.alexander == ext_inv.alexander
        && base_inv.signature == ext_inv.signature
        && base_inv.determinant == ext_inv.determinant;
    let sites: Vec<usize> = (0..n).map(|i| base.size() + 2 * i).collect();
    let reduction = extended.reduce_extension(&sites)?;
    let reduction_replays_to_base = extended.replay(&reduction)? == *base;
    let subset_checks = if n <= 12 {
        Some(family_subset_checks(base, orders)?)
    } else {
        None
    };
    let distinctness_hypothesis = orders.iter().any(|q| q.abs() > 1);
    let mut rationale = vec![
        format!(
            "the extended matrix presents a knot on a genus-{} surface sharing all abelian \
             invariants with the genus-{} base",
            base.genus() + n,
            base.genus()
        ),
        format!(
            "changing any nonempty subset of the {n} twist sites destabilizes the matrix back \
             to the base exactly"
        ),
    ];
    if distinctness_hypothesis {
        rationale.push(
            "some twist order exceeds 1 in magnitude, so the family member is not expected to \
             be isotopic to the base"
                .into(),
        );
        rationale.push(
            "if the base knot is fibered and the member is distinct with equal Alexander \
             polynomial, n-adjacency with n > 1 obstructs fibering of the member and of its \
             0-surgery"
                .into(),
        );
    } else {
        rationale.push(
            "all twist orders are 0 or +-1; the member may be isotopic to the base".into(),
        );
    }
    let report = FamilyReport {
        orders: orders.to_vec(),
        base_genus: base.genus() as u64,
        surface_genus: (base.genus() + n) as u64,
        alexander: ext_inv.alexander,
        invariants_equal,
        signature: ext_inv.signature,
        determinant: ext_inv.determinant,
        reduction,
        reduction_replays_to_base,
        distinctness_hypothesis,
        subset_checks,
        rationale,
    };
    Ok((extended, report))
}

/// For every nonempty subset of sites: zero those twist orders and reduce
/// all blocks; the result must equal the base matrix exactly.
pub fn family_subset_checks(
    base: &SeifertMatrix,
    orders: &[i64],
) -> Result<Vec<FamilySubsetRecord>> {
    let n = orders.len();
    if n > 16 {
        return Err(Error::BadPresentation(format!(
            "subset realization over 2^{n} - 1 cases exceeds the supported size (16 sites)"
        )));
    }
    let sites: Vec<usize> = (0..n).map(|i| base.size() + 2 * i).collect();
    let mut out = Vec::new();
    for subset in subsets_in_report_order(n) {
        let mut zeroed = orders.to_vec();
        for &i in &subset {
            zeroed[i] = 0;
        }
        let changed = base.block_extend(&zeroed)?;
        let cert = changed.reduce_extension(&sites)?;
        let exact_match = changed.replay(&cert)? == *base;
        out.push(FamilySubsetRecord {
            subset: subset.iter().map(|i| i + 1).collect(),
            exact_match,
        });
    }
    Ok(out)
}

// ---- Genus feasibility ----

/// Outcome of checking a claimed adjacency degree against genus bounds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum BoundCheck {
    /// The bound (n+3)/6 <= g is consistent; the lower bound may have risen.
    Feasible { tightened: GenusInterval },
    /// (n+3)/6 exceeds the genus upper bound.
    Infeasible {
        #[serde(with = "rational_serde")]
        required: BigRational,
        upper: u64,
    },
}

/// Check n-adjacency feasibility against a genus interval: infeasible when
/// (n+3)/6 exceeds the upper bound, otherwise raise the lower bound to
/// max(lower, (n+3)/6).
pub fn bound_check(n: u64, interval: &GenusInterval) -> BoundCheck {
    let required = BigRational::new(BigInt::from(n + 3), BigInt::from(6));
    if let Some(upper) = interval.upper {
        if required > BigRational::from(BigInt::from(upper)) {
            return BoundCheck::Infeasible { required, upper };
        }
    }
    let lower = interval.lower.clone().max(required);
    BoundCheck::Feasible {
        tightened: GenusInterval {
            lower,
            upper: interval.upper,
        },
    }
}

// ---- Presentation JSON ----

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    base: BaseRepr,
    #[serde(default)]
    twist_sites: Vec<TwistSite>,
    target: TargetRepr,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct BaseRepr {
    #[serde(skip_serializing_if = "Option::is_none")]
    braid: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pd: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TargetRepr {
    Name(String),
    Inline {
        name: String,
        invariants: TargetInvariants,
    },
}

impl Serialize for AdjacencyPresentation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let base = match &self.base {
            PresentationBase::Braid(w) => BaseRepr {
                braid: Some(w.to_string()),
                pd: None,
            },
            PresentationBase::Diagram(d) => BaseRepr {
                braid: None,
                pd: Some(d.to_string()),
            },
        };
        // Targets resolvable from the bundled table serialize by name.
        let target = if table::lookup(&self.target_name).is_some() {
            TargetRepr::Name(self.target_name.clone())
        } else {
            TargetRepr::Inline {
                name: self.target_name.clone(),
                invariants: self.target.clone(),
            }
        };
        PresentationRepr {
            base,
            twist_sites: self.twist_sites.clone(),
            target,
            n: self.n,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AdjacencyPresentation {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = PresentationRepr::deserialize(deserializer)?;
        let base = match (&repr.base.braid, &repr.base.pd) {
            (Some(text), None) => {
                PresentationBase::Braid(parse_braid(text).map_err(D::Error::custom)?)
            }
            (None, Some(text)) => PresentationBase::Diagram(
                crate::diagram::parse_pd(text).map_err(D::Error::custom)?,
            ),
            _ => {
                return Err(D::Error::custom(
                    "presentation base needs exactly one of \"braid\" or \"pd\"",
                ))
            }
        };
        let (target_name, target) = match repr.target {
            TargetRepr::Name(name) => {
                let inv = target_from_table(&name).map_err(D::Error::custom)?;
                (name, inv)
            }
            TargetRepr::Inline { name, invariants } => (name, invariants),
        };
        Ok(AdjacencyPresentation {
            base,
            twist_sites: repr.twist_sites,
            target_name,
            target,
            n: repr.n,
        })
    }
}

/// Compute target invariants from the bundled knot table.
pub fn target_from_table(name: &str) -> Result<TargetInvariants> {
    let entry = table::lookup(name).ok_or_else(|| Error::UnknownTarget(name.to_string()))?;
    let word = entry.braid()?;
    let (v, _) = seifert_from_braid(&word)?;
    let inv = v.abelian_invariants()?;
    debug_assert_eq!(inv.alexander, alexander_via_burau(&word)?);
    let jones = kauffman_jones(&braid_to_pd(&word)?, crate::diagram::DEFAULT_CROSSING_CAP)?;
    Ok(TargetInvariants {
        alexander: inv.alexander,
        jones: Some(jones),
        signature: Some(inv.signature),
        determinant: inv.determinant,
        fibered: Some(entry.fibered),
    })
}
