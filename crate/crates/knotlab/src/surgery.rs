//! Formal surgery-bracket calculus: admissible-link bookkeeping, the
//! alternating-sum expansion over sublinks, the collapse that adjacency
//! forces, and the order-bound vanishing check.
//!
//! Manifolds exist here only as labels. The module computes the exact
//! linear algebra of sublink expansions; it never builds triangulations or
//! evaluates actual manifold invariants.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A surgery slope a/b in lowest terms with b >= 1; the empty surgery
/// (slope 1/0) is excluded because it returns the ambient manifold.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurgerySlope {
    numerator: i64,
    denominator: u64,
}

impl SurgerySlope {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::BadSlope(
                "denominator 0 denotes the ambient manifold and is excluded".into(),
            ));
        }
        let sign = denominator.signum();
        let (mut a, mut b) = (numerator * sign, (denominator * sign) as u64);
        let g = a.unsigned_abs().gcd(&b);
        if g > 1 {
            a /= g as i64;
            b /= g;
        }
        Ok(SurgerySlope {
            numerator: a,
            denominator: b,
        })
    }

    pub fn zero() -> Self {
        SurgerySlope {
            numerator: 0,
            denominator: 1,
        }
    }
}

impl fmt::Display for SurgerySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// A knot with a surgery slope; its label "knot@a/b" names the surgered
/// manifold.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurgeryDescriptor {
    pub knot: String,
    pub slope: SurgerySlope,
}

impl SurgeryDescriptor {
    pub fn new(knot: impl Into<String>, slope: SurgerySlope) -> Self {
        SurgeryDescriptor {
            knot: knot.into(),
            slope,
        }
    }

    pub fn label(&self) -> String {
        format!("{}@{}", self.knot, self.slope)
    }
}

/// Declared data of one admissible-link component.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdmissibleComponent {
    /// Framing relative to the null-homology longitude; must be +1 or -1.
    pub framing: i8,
    pub null_homologous: bool,
}

/// An n-component framed link declared admissible: null-homologous
/// components, vanishing pairwise linking numbers, framings +-1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdmissibleLinkModel {
    pub components: Vec<AdmissibleComponent>,
    /// Declared pairwise linking numbers, row i listing lk(i, j) for j > i.
    pub linking: Vec<Vec<i64>>,
}

impl AdmissibleLinkModel {
    /// An admissible link of crossing circles: null-homologous, unlinked,
    /// with the given framings.
    pub fn crossing_circles(framings: &[i8]) -> Result<Self> {
        let n = framings.len();
        let model = AdmissibleLinkModel {
            components: framings
                .iter()
                .map(|&f| AdmissibleComponent {
                    framing: f,
                    null_homologous: true,
                })
                .collect(),
            linking: (0..n).map(|i| vec![0; n - i - 1]).collect(),
        };
        model.validate()?;
        Ok(model)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, c) in self.components.iter().enumerate() {
            if c.framing != 1 && c.framing != -1 {
                return Err(Error::NotAdmissible(format!(
                    "component {i} has framing {}, expected +-1",
                    c.framing
                )));
            }
            if !c.null_homologous {
                return Err(Error::NotAdmissible(format!(
                    "component {i} is not declared null-homologous"
                )));
            }
        }
        if self.linking.len() != self.components.len() {
            return Err(Error::NotAdmissible(
                "linking table size does not match component count".into(),
            ));
        }
        for (i, row) in self.linking.iter().enumerate() {
            if row.len() != self.components.len() - i - 1 {
                return Err(Error::NotAdmissible(format!(
                    "linking row {i} has wrong length"
                )));
            }
            for (k, &l) in row.iter().enumerate() {
                if l != 0 {
                    return Err(Error::NotAdmissible(format!(
                        "linking number of components {i} and {} is {l}, expected 0",
                        i + k + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Integer linear combination of manifold labels; no zero coefficients are
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<String, BigInt>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn singleton(label: impl Into<String>) -> Self {
        let mut s = FormalSum::zero();
        s.add(label.into(), BigInt::one());
        s
    }

    pub fn add(&mut self, label: String, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(label).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, label: &str) -> BigInt {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BigInt)> {
        self.terms.iter().map(|(l, c)| (l.as_str(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Apply a label-valued functional linearly.
    pub fn evaluate(&self, f: &BTreeMap<String, BigInt>) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (label, coeff) in &self.terms {
            let value = f
                .get(label)
                .ok_or_else(|| Error::MissingSublink(format!("no value assigned to {label}")))?;
            acc += coeff * value;
        }
        Ok(acc)
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Positive terms first reads naturally for differences.
        let mut ordered: Vec<(&String, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(label, c)| (c.is_negative(), (*label).clone()));
        for (i, (label, c)) in ordered.into_iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FormalSum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<&str, serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| (l.as_str(), crate::laurent::bigint_to_json(c)))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FormalSum {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let map: BTreeMap<String, serde_json::Value> = BTreeMap::deserialize(deserializer)?;
        let mut out = FormalSum::zero();
        for (l, v) in map {
            out.add(l, crate::laurent::bigint_from_json(&v).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}

/// Render a sublink of 0-based component indices as "{1,3}" (1-based).
pub fn sublink_name(subset: &[usize]) -> String {
    let inner: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// The alternating-sum bracket: sum over all sublinks L' of the surgered
/// manifold labels with coefficient (-1)^|L'|. `result_of` must assign a
/// label to every sublink, with the empty sublink mapped to `manifold`.
pub fn bracket_expand(
    manifold: &str,
    link: &AdmissibleLinkModel,
    result_of: &BTreeMap<Vec<usize>, String>,
) -> Result<FormalSum> {
    link.validate()?;
    let n = link.len();
    if n > 20 {
        return Err(Error::NotAdmissible(format!(
            "expansion over 2^{n} sublinks exceeds the supported size (20 components)"
        )));
    }
    match result_of.get(&Vec::new()) {
        None => return Err(Error::MissingSublink(sublink_name(&[]))),
        Some(label) if label != manifold => {
            return Err(Error::MissingSublink(format!(
                "the empty sublink must map to {manifold}, found {label}"
            )))
        }
        Some(_) => {}
    }
    let mut sum = FormalSum::zero();
    for mask in 0u64..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let label = result_of
            .get(&subset)
            .ok_or_else(|| Error::MissingSublink(sublink_name(&subset)))?;
        let sign = if subset.len().is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        sum.add(label.clone(), sign);
    }
    Ok(sum)
}

/// The collapse forced by adjacency: when every nonempty sublink surgery
/// yields the same manifold, the bracket reduces to `manifold - common`.
/// The identity is re-verified against the full expansion through the
/// alternating binomial sum.
pub fn collapse_adjacent(manifold: &str, n: usize, common: &str) -> Result<FormalSum> {
    if n == 0 {
        return Err(Error::NotAdmissible(
            "the collapse needs at least one component".into(),
        ));
    }
    if n > 20 {
        return Err(Error::NotAdmissible(format!(
            "expansion over 2^{n} sublinks exceeds the supported size (20 components)"
        )));
    }
    // Direct form M - Y.
    let mut collapsed = FormalSum::zero();
    collapsed.add(manifold.to_string(), BigInt::one());
    collapsed.add(common.to_string(), -BigInt::one());
    // Cross-check: expansion with the constant nonempty assignment.
    let link = AdmissibleLinkModel::crossing_circles(&vec![1i8; n])?;
    let mut result_of: BTreeMap<Vec<usize>, String> = BTreeMap::new();
    for mask in 0u64..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let label = if subset.is_empty() { manifold } else { common };
        result_of.insert(subset, label.to_string());
    }
    let expanded = bracket_expand(manifold, &link, &result_of)?;
    if expanded != collapsed {
        return Err(Error::NotAdmissible(format!(
            "collapse {collapsed} disagrees with expansion {expanded}"
        )));
    }
    // The coefficient of the common label is the alternating binomial sum.
    let mut alt = BigInt::zero();
    let mut binom = BigInt::one();
    for k in 1..=n {
        binom = binom * BigInt::from(n - k + 1) / BigInt::from(k);
        if k % 2 == 1 {
            alt -= &binom;
        } else {
            alt += &binom;
        }
    }
    if manifold != common && alt != -BigInt::one() {
        return Err(Error::NotAdmissible(format!(
            "alternating binomial sum is {alt}, expected -1"
        )));
    }
    Ok(collapsed)
}

/// Model the order-bound hypothesis: a functional annihilating the
/// n-component bracket must take equal values on the two manifolds. Returns
/// whether the assignment `f` is consistent with that consequence.
pub fn vanishing_check(
    f: &BTreeMap<String, BigInt>,
    manifold: &str,
    n: usize,
    common: &str,
) -> Result<bool> {
    let bracket = collapse_adjacent(manifold, n, common)?;
    Ok(bracket.evaluate(f)?.is_zero())
}
