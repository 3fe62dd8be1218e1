//! Seifert matrices, their abelian invariants, S-equivalence moves with
//! replayable certificates, and block extensions that enlarge a matrix
//! without changing any abelian invariant.
//!
//! A `SeifertMatrix` is a square integer matrix `V` of even size with
//! `det(V - V^T) = 1` (the knot condition). All invariants derived here —
//! Alexander polynomial, signature, determinant — are computed exactly.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{bigint_from_json, bigint_to_json, LaurentPoly};
use crate::matrix;

/// Square integer matrix of even size presenting a knot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeifertMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl SeifertMatrix {
    /// The 0x0 matrix of the unknot.
    pub fn empty() -> Self {
        SeifertMatrix { rows: Vec::new() }
    }

    /// Build from rows; rejects non-square input.
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    bad: i,
                    len: r.len(),
                });
            }
        }
        Ok(SeifertMatrix { rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        SeifertMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Genus of the presenting surface (size / 2).
    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// True iff the matrix has even size and det(V - V^T) = 1.
    pub fn validate(&self) -> Result<bool> {
        let n = self.size();
        if !n.is_multiple_of(2) {
            return Err(Error::OddSize(n));
        }
        let skew: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| &self.rows[i][j] - &self.rows[j][i]).collect())
            .collect();
        Ok(matrix::det_int(&skew).is_one())
    }

    fn require_valid(&self) -> Result<()> {
        if self.validate()? {
            Ok(())
        } else {
            let n = self.size();
            let skew: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| &self.rows[i][j] - &self.rows[j][i]).collect())
                .collect();
            Err(Error::NotUnimodularPairing(
                matrix::det_int(&skew).to_string(),
            ))
        }
    }

    /// Normalized Alexander polynomial det(V - t V^T); the 0x0 matrix gives 1.
    pub fn alexander(&self) -> Result<LaurentPoly> {
        self.require_valid()?;
        let n = self.size();
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let t = LaurentPoly::t();
        let a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let vij = LaurentPoly::term(0, self.rows[i][j].clone());
                        let vji = LaurentPoly::term(0, self.rows[j][i].clone());
                        &vij - &(&t * &vji)
                    })
                    .collect()
            })
            .collect();
        matrix::det_laurent(&a)?.normalize()
    }

    /// Signature of the symmetrized form V + V^T.
    pub fn signature(&self) -> Result<i64> {
        self.require_valid()?;
        let n = self.size();
        let sym: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| &self.rows[i][j] + &self.rows[j][i]).collect())
            .collect();
        matrix::symmetric_signature(&sym)
    }

    /// All abelian invariants at once.
    pub fn abelian_invariants(&self) -> Result<AbelianInvariants> {
        let alexander = self.alexander()?;
        let (degree, monic) = alexander.span_monic()?;
        let at_one = alexander.eval_int(1);
        if !at_one.magnitude().is_one() {
            return Err(Error::NotUnimodularPairing(format!(
                "Alexander polynomial evaluates to {at_one} at t = 1"
            )));
        }
        let determinant = alexander.eval_int(-1).abs();
        Ok(AbelianInvariants {
            alexander,
            degree,
            monic,
            signature: self.signature()?,
            determinant,
        })
    }

    /// Block-diagonal sum, the matrix of a connected sum of knots.
    pub fn connected_sum(&self, other: &SeifertMatrix) -> Result<SeifertMatrix> {
        self.require_valid()?;
        other.require_valid()?;
        let (n, m) = (self.size(), other.size());
        let mut rows = vec![vec![BigInt::zero(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = self.rows[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                rows[n + i][n + j] = other.rows[i][j].clone();
            }
        }
        Ok(SeifertMatrix { rows })
    }

    /// Append one trivial 2x2 block per twist order in `orders`: the first
    /// appended row of each pair is zero, the second has 1 in its first
    /// column and the twist order on the diagonal, with no coupling to the
    /// rest of the matrix. The result presents a knot with the same abelian
    /// invariants on a surface of genus `self.genus() + orders.len()`.
    pub fn block_extend(&self, orders: &[i64]) -> Result<SeifertMatrix> {
        self.require_valid()?;
        if orders.is_empty() {
            return Err(Error::BadMove {
                position: 0,
                reason: "block extension needs at least one twist order".into(),
            });
        }
        let n = self.size();
        let m = n + 2 * orders.len();
        let mut rows = vec![vec![BigInt::zero(); m]; m];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = self.rows[i][j].clone();
            }
        }
        for (k, &q) in orders.iter().enumerate() {
            let r = n + 2 * k;
            rows[r + 1][r] = BigInt::one();
            rows[r + 1][r + 1] = BigInt::from(q);
        }
        Ok(SeifertMatrix { rows })
    }

    /// Positions (first row index of each pair) of a maximal run of trailing
    /// 2x2 extension blocks, in ascending order.
    pub fn detect_trailing_blocks(&self) -> Vec<usize> {
        let mut sites = Vec::new();
        let mut end = self.size();
        while end >= 2 {
            let r = end - 2;
            if self.block_shape_at(r).is_ok() {
                sites.push(r);
                end = r;
            } else {
                break;
            }
        }
        sites.reverse();
        sites
    }

    /// Checks the extension-block pattern at rows/columns (r, r+1): row r is
    /// zero, row r+1 is zero except entries (r+1, r) = 1 and the diagonal
    /// twist, and both columns vanish outside the pair. Returns the twist.
    fn block_shape_at(&self, r: usize) -> Result<BigInt> {
        let n = self.size();
        if r + 2 > n {
            return Err(Error::NotBlockExtension(format!(
                "site {r} out of range for size {n}"
            )));
        }
        for j in 0..n {
            if !self.rows[r][j].is_zero() {
                return Err(Error::NotBlockExtension(format!(
                    "entry ({r},{j}) = {} is nonzero",
                    self.rows[r][j]
                )));
            }
        }
        for j in 0..n {
            if j == r || j == r + 1 {
                continue;
            }
            if !self.rows[r + 1][j].is_zero() {
                return Err(Error::NotBlockExtension(format!(
                    "entry ({},{j}) = {} is nonzero",
                    r + 1,
                    self.rows[r + 1][j]
                )));
            }
        }
        if !self.rows[r + 1][r].is_one() {
            return Err(Error::NotBlockExtension(format!(
                "entry ({},{r}) = {}, expected 1",
                r + 1,
                self.rows[r + 1][r]
            )));
        }
        for i in 0..n {
            if i == r || i == r + 1 {
                continue;
            }
            for j in [r, r + 1] {
                if !self.rows[i][j].is_zero() {
                    return Err(Error::NotBlockExtension(format!(
                        "entry ({i},{j}) = {} is nonzero",
                        self.rows[i][j]
                    )));
                }
            }
        }
        Ok(self.rows[r + 1][r + 1].clone())
    }

    /// Certificate of congruences and destabilizations that reduces a
    /// block-extended matrix back to its base. `sites` lists the first row
    /// index of each appended pair.
    pub fn reduce_extension(&self, sites: &[usize]) -> Result<MoveCertificate> {
        let mut sorted: Vec<usize> = sites.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != sites.len() {
            return Err(Error::NotBlockExtension("duplicate site positions".into()));
        }
        for w in sorted.windows(2) {
            if w[1] < w[0] + 2 {
                return Err(Error::NotBlockExtension(format!(
                    "sites {} and {} overlap",
                    w[0], w[1]
                )));
            }
        }
        // Validate every site against the original matrix, then emit moves
        // from the highest site down so each destabilization removes the
        // current trailing pair.
        let mut twists = Vec::with_capacity(sorted.len());
        for &r in &sorted {
            twists.push(self.block_shape_at(r)?);
        }
        let mut moves = Vec::new();
        let mut current = self.clone();
        for (&r, q) in sorted.iter().zip(twists.iter()).rev() {
            if !q.is_zero() {
                let p = shear_matrix(current.size(), r + 1, r, &-q.clone());
                let mv = Move::Congruence { p };
                current = current.apply_move(&mv)?;
                moves.push(mv);
            }
            let mv = Move::Destabilize { position: r };
            current = current.apply_move(&mv)?;
            moves.push(mv);
        }
        Ok(MoveCertificate { moves })
    }

    /// Apply a single S-equivalence move.
    pub fn apply_move(&self, mv: &Move) -> Result<SeifertMatrix> {
        match mv {
            Move::Congruence { p } => {
                let n = self.size();
                if p.size() != n {
                    return Err(Error::SizeMismatch {
                        have: p.size(),
                        expected: n,
                    });
                }
                let det = matrix::det_int(p.rows());
                if !det.abs().is_one() {
                    return Err(Error::NotUnimodular(det.to_string()));
                }
                Ok(SeifertMatrix {
                    rows: matrix::congruence(p.rows(), &self.rows),
                })
            }
            Move::Enlarge {
                position,
                column,
                transpose,
            } => self.enlarge(*position, column, *transpose),
            Move::Destabilize { position } => self.destabilize(*position),
        }
    }

    /// Elementary enlargement inserting a trivial pair at rows/columns
    /// (position, position+1). In the row variant the extra data `column`
    /// sits in the first new column; the transpose variant mirrors it.
    fn enlarge(&self, position: usize, column: &[BigInt], transpose: bool) -> Result<SeifertMatrix> {
        let n = self.size();
        if position > n {
            return Err(Error::BadMove {
                position,
                reason: format!("insertion point exceeds size {n}"),
            });
        }
        if column.len() != n {
            return Err(Error::BadMove {
                position,
                reason: format!("column data has length {}, expected {n}", column.len()),
            });
        }
        let m = n + 2;
        let old = |i: usize| if i < position { i } else { i + 2 };
        let mut rows = vec![vec![BigInt::zero(); m]; m];
        for i in 0..n {
            for j in 0..n {
                rows[old(i)][old(j)] = self.rows[i][j].clone();
            }
        }
        if transpose {
            for (i, x) in column.iter().enumerate() {
                rows[position][old(i)] = x.clone();
            }
            rows[position][position + 1] = BigInt::one();
        } else {
            for (i, x) in column.iter().enumerate() {
                rows[old(i)][position] = x.clone();
            }
            rows[position + 1][position] = BigInt::one();
        }
        Ok(SeifertMatrix { rows })
    }

    /// Inverse of a trivial enlargement; errors name the violating entry.
    fn destabilize(&self, position: usize) -> Result<SeifertMatrix> {
        let n = self.size();
        if position + 2 > n {
            return Err(Error::BadMove {
                position,
                reason: format!("no row pair at {position} in size {n}"),
            });
        }
        let r = position;
        // Row variant: row r zero, row r+1 = unit at column r; transpose
        // variant: column r zero, column r+1 = unit at row r. Both demand the
        // pair's columns/rows vanish against the rest of the matrix.
        let row_variant = self.rows[r + 1][r].is_one() && self.rows[r][r + 1].is_zero();
        let check = |cond: bool, i: usize, j: usize| -> Result<()> {
            if cond {
                Ok(())
            } else {
                Err(Error::DestabilizePattern {
                    row: i,
                    col: j,
                    value: self.rows[i][j].to_string(),
                })
            }
        };
        let keep_row = if row_variant { r + 1 } else { r };
        let unit_col = if row_variant { r } else { r + 1 };
        let zero_row = r + r + 1 - keep_row;
        for j in 0..n {
            check(self.rows[zero_row][j].is_zero(), zero_row, j)?;
            if j != unit_col {
                check(self.rows[keep_row][j].is_zero(), keep_row, j)?;
            }
        }
        check(self.rows[keep_row][unit_col].is_one(), keep_row, unit_col)?;
        for i in 0..n {
            if i == r || i == r + 1 {
                continue;
            }
            check(self.rows[i][r].is_zero(), i, r)?;
            check(self.rows[i][r + 1].is_zero(), i, r + 1)?;
        }
        let rows: Vec<Vec<BigInt>> = (0..n)
            .filter(|&i| i != r && i != r + 1)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != r && j != r + 1)
                    .map(|j| self.rows[i][j].clone())
                    .collect()
            })
            .collect();
        Ok(SeifertMatrix { rows })
    }

    /// Replay a certificate move by move.
    pub fn replay(&self, cert: &MoveCertificate) -> Result<SeifertMatrix> {
        let mut current = self.clone();
        for mv in &cert.moves {
            current = current.apply_move(mv)?;
        }
        Ok(current)
    }
}

/// I - q E(row, col) style shear: identity with `value` at (row, col).
pub(crate) fn shear_matrix(n: usize, row: usize, col: usize, value: &BigInt) -> SeifertMatrix {
    let mut rows = vec![vec![BigInt::zero(); n]; n];
    for (i, r) in rows.iter_mut().enumerate() {
        r[i] = BigInt::one();
    }
    rows[row][col] = value.clone();
    SeifertMatrix { rows }
}

/// One S-equivalence move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// V -> P V P^T with P unimodular.
    Congruence { p: SeifertMatrix },
    /// Insert a trivial pair at (position, position+1) carrying `column`.
    Enlarge {
        position: usize,
        column: Vec<BigInt>,
        transpose: bool,
    },
    /// Remove the trivial pair at (position, position+1).
    Destabilize { position: usize },
}

/// An ordered, replayable list of moves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveCertificate {
    pub moves: Vec<Move>,
}

/// The abelian invariant package of a Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub alexander: LaurentPoly,
    pub degree: u64,
    pub monic: bool,
    pub signature: i64,
    #[serde(with = "crate::seifmat::bigint_serde")]
    pub determinant: BigInt,
}

// ---- Serialization ----

impl Serialize for SeifertMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            size: usize,
            rows: Vec<Vec<serde_json::Value>>,
        }
        Repr {
            size: self.size(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(bigint_to_json).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SeifertMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            size: usize,
            rows: Vec<Vec<serde_json::Value>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.rows.len() != repr.size {
            return Err(D::Error::custom(format!(
                "size field {} does not match {} rows",
                repr.size,
                repr.rows.len()
            )));
        }
        let mut rows = Vec::with_capacity(repr.size);
        for r in &repr.rows {
            let mut row = Vec::with_capacity(repr.size);
            for v in r {
                row.push(bigint_from_json(v).map_err(D::Error::custom)?);
            }
            rows.push(row);
        }
        SeifertMatrix::new(rows).map_err(D::Error::custom)
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        match self {
            Move::Congruence { p } => {
                map.serialize_entry("move", "congruence")?;
                map.serialize_entry("p", p)?;
            }
            Move::Enlarge {
                position,
                column,
                transpose,
            } => {
                map.serialize_entry("move", "enlarge")?;
                map.serialize_entry("position", position)?;
                let col: Vec<serde_json::Value> = column.iter().map(bigint_to_json).collect();
                map.serialize_entry("column", &col)?;
                map.serialize_entry("transpose", transpose)?;
            }
            Move::Destabilize { position } => {
                map.serialize_entry("move", "destabilize")?;
                map.serialize_entry("position", position)?;
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        let kind = v
            .get("move")
            .and_then(|k| k.as_str())
            .ok_or_else(|| D::Error::custom("move object needs a \"move\" tag"))?;
        match kind {
            "congruence" => {
                let p = v
                    .get("p")
                    .ok_or_else(|| D::Error::custom("congruence needs \"p\""))?;
                Ok(Move::Congruence {
                    p: serde_json::from_value(p.clone()).map_err(D::Error::custom)?,
                })
            }
            "enlarge" => {
                let position = v
                    .get("position")
                    .and_then(|p| p.as_u64())
                    .ok_or_else(|| D::Error::custom("enlarge needs \"position\""))?
                    as usize;
                let column = v
                    .get("column")
                    .and_then(|c| c.as_array())
                    .ok_or_else(|| D::Error::custom("enlarge needs \"column\""))?
                    .iter()
                    .map(bigint_from_json)
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                let transpose = v.get("transpose").and_then(|t| t.as_bool()).unwrap_or(false);
                Ok(Move::Enlarge {
                    position,
                    column,
                    transpose,
                })
            }
            "destabilize" => {
                let position = v
                    .get("position")
                    .and_then(|p| p.as_u64())
                    .ok_or_else(|| D::Error::custom("destabilize needs \"position\""))?
                    as usize;
                Ok(Move::Destabilize { position })
            }
            other => Err(D::Error::custom(format!("unknown move kind {other:?}"))),
        }
    }
}

pub(crate) mod bigint_serde {
    use super::*;

    pub fn serialize<S: Serializer>(
        x: &BigInt,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        bigint_to_json(x).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<BigInt, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        bigint_from_json(&v).map_err(D::Error::custom)
    }
}

/// The right-handed trefoil anchor matrix.
pub fn trefoil_matrix() -> SeifertMatrix {
    SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap()
}

/// The figure-eight anchor matrix.
pub fn figure_eight_matrix() -> SeifertMatrix {
    SeifertMatrix::from_i64(&[&[1, 1], &[0, -1]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(SeifertMatrix::empty().validate().unwrap());
        assert!(trefoil_matrix().validate().unwrap());
        assert!(!SeifertMatrix::from_i64(&[&[1, 0], &[0, 1]])
            .unwrap()
            .validate()
            .unwrap());
        assert!(matches!(
            SeifertMatrix::from_i64(&[&[1]]).unwrap().validate(),
            Err(Error::OddSize(1))
        ));
    }

    #[test]
    fn alexander_anchors() {
        assert_eq!(SeifertMatrix::empty().alexander().unwrap(), poly("1"));
        assert_eq!(trefoil_matrix().alexander().unwrap(), poly("1 - t + t^2"));
        assert_eq!(
            figure_eight_matrix().alexander().unwrap(),
            poly("1 - 3*t + t^2")
        );
    }

    #[test]
    fn abelian_invariant_anchors() {
        let tre = trefoil_matrix().abelian_invariants().unwrap();
        assert_eq!(tre.alexander, poly("1 - t + t^2"));
        assert_eq!((tre.degree, tre.monic), (2, true));
        assert_eq!(tre.signature, -2);
        assert_eq!(tre.determinant, BigInt::from(3));

        let fig8 = figure_eight_matrix().abelian_invariants().unwrap();
        assert_eq!(fig8.alexander, poly("1 - 3*t + t^2"));
        assert_eq!(fig8.signature, 0);
        assert_eq!(fig8.determinant, BigInt::from(5));

        let unknot = SeifertMatrix::empty().abelian_invariants().unwrap();
        assert_eq!(unknot.alexander, poly("1"));
        assert_eq!((unknot.degree, unknot.monic), (0, true));
        assert_eq!(unknot.signature, 0);
        assert_eq!(unknot.determinant, BigInt::one());
    }

    #[test]
    fn congruence_identity_fixes_matrix() {
        let v = trefoil_matrix();
        let id = shear_matrix(2, 1, 0, &BigInt::zero());
        assert_eq!(v.apply_move(&Move::Congruence { p: id }).unwrap(), v);
    }

    #[test]
    fn smallest_enlargement() {
        let out = SeifertMatrix::empty()
            .apply_move(&Move::Enlarge {
                position: 0,
                column: vec![],
                transpose: false,
            })
            .unwrap();
        assert_eq!(out, SeifertMatrix::from_i64(&[&[0, 0], &[1, 0]]).unwrap());
    }

    #[test]
    fn destabilize_pattern_check() {
        let v = SeifertMatrix::from_i64(&[
            &[-1, 1, 0, 0],
            &[0, -1, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 1, 0],
        ])
        .unwrap();
        assert_eq!(
            v.apply_move(&Move::Destabilize { position: 2 }).unwrap(),
            trefoil_matrix()
        );

        // A diagonal twist breaks the pattern and the error names the entry.
        let bad = trefoil_matrix().block_extend(&[2]).unwrap();
        match bad.apply_move(&Move::Destabilize { position: 2 }) {
            Err(Error::DestabilizePattern { row: 3, col: 3, value }) => {
                assert_eq!(value, "2");
            }
            other => panic!("expected pattern violation, got {other:?}"),
        }
    }

    #[test]
    fn block_extend_matches_stated_form() {
        let v = trefoil_matrix().block_extend(&[2]).unwrap();
        assert_eq!(
            v,
            SeifertMatrix::from_i64(&[
                &[-1, 1, 0, 0],
                &[0, -1, 0, 0],
                &[0, 0, 0, 0],
                &[0, 0, 1, 2],
            ])
            .unwrap()
        );

        let w = SeifertMatrix::empty().block_extend(&[3]).unwrap();
        assert_eq!(w, SeifertMatrix::from_i64(&[&[0, 0], &[1, 3]]).unwrap());
        assert_eq!(w.alexander().unwrap(), poly("1"));
    }

    #[test]
    fn block_extend_preserves_invariants() {
        let base = trefoil_matrix();
        let inv0 = base.abelian_invariants().unwrap();
        let ext = base.block_extend(&[2, -3, 5]).unwrap();
        let inv1 = ext.abelian_invariants().unwrap();
        assert_eq!(inv0.alexander, inv1.alexander);
        assert_eq!(inv0.signature, inv1.signature);
        assert_eq!(inv0.determinant, inv1.determinant);
        assert_eq!(ext.genus(), base.genus() + 3);
    }

    #[test]
    fn reduce_extension_replays_to_base() {
        let w = SeifertMatrix::empty().block_extend(&[3]).unwrap();
        let cert = w.reduce_extension(&[0]).unwrap();
        assert_eq!(cert.moves.len(), 2);
        assert_eq!(w.replay(&cert).unwrap(), SeifertMatrix::empty());

        let base = trefoil_matrix();
        let ext = base.block_extend(&[2]).unwrap();
        let cert = ext.reduce_extension(&[2]).unwrap();
        assert_eq!(cert.moves.len(), 2);
        assert_eq!(ext.replay(&cert).unwrap(), base);

        // Order zero needs no congruence.
        let ext0 = base.block_extend(&[0]).unwrap();
        let cert0 = ext0.reduce_extension(&[2]).unwrap();
        assert_eq!(cert0.moves.len(), 1);
        assert_eq!(ext0.replay(&cert0).unwrap(), base);
    }

    #[test]
    fn reduce_extension_rejects_non_blocks() {
        let err = trefoil_matrix().reduce_extension(&[0]).unwrap_err();
        assert!(matches!(err, Error::NotBlockExtension(_)));
    }

    #[test]
    fn detect_trailing_blocks_finds_sites() {
        let ext = trefoil_matrix().block_extend(&[2, 0, -4]).unwrap();
        assert_eq!(ext.detect_trailing_blocks(), vec![2, 4, 6]);
        assert!(trefoil_matrix().detect_trailing_blocks().is_empty());
    }

    #[test]
    fn connected_sum_multiplies_alexander_and_adds_signatures() {
        let t = trefoil_matrix();
        let f = figure_eight_matrix();
        assert_eq!(t.connected_sum(&SeifertMatrix::empty()).unwrap(), t);

        let granny = t.connected_sum(&t).unwrap();
        assert_eq!(
            granny.alexander().unwrap(),
            poly("1 - 2*t + 3*t^2 - 2*t^3 + t^4")
        );
        assert_eq!(granny.signature().unwrap(), -4);

        let mixed = t.connected_sum(&f).unwrap();
        let expect = (&poly("1 - t + t^2") * &poly("1 - 3*t + t^2"))
            .normalize()
            .unwrap();
        assert_eq!(mixed.alexander().unwrap(), expect);
        assert_eq!(mixed.signature().unwrap(), -2);
    }

    #[test]
    fn alexander_symmetry_and_unit_value() {
        for v in [
            trefoil_matrix(),
            figure_eight_matrix(),
            trefoil_matrix().block_extend(&[2, 2]).unwrap(),
            trefoil_matrix().connected_sum(&figure_eight_matrix()).unwrap(),
        ] {
            let d = v.alexander().unwrap();
            assert_eq!(d.reversed().normalize().unwrap(), d, "symmetry of {d}");
            assert!(d.eval_int(1).magnitude().is_one());
        }
    }

    #[test]
    fn determinant_matches_symmetrized_form() {
        // |alexander(-1)| equals |det(V + V^T)|, tying the polynomial route
        // to the symmetric-form route.
        for v in [
            trefoil_matrix(),
            figure_eight_matrix(),
            trefoil_matrix().block_extend(&[2, -3]).unwrap(),
            trefoil_matrix().connected_sum(&figure_eight_matrix()).unwrap(),
        ] {
            let n = v.size();
            let sym: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| v.entry(i, j) + v.entry(j, i)).collect())
                .collect();
            let inv = v.abelian_invariants().unwrap();
            assert_eq!(crate::matrix::det_int(&sym).abs(), inv.determinant);
        }
    }

    #[test]
    fn matrix_json_round_trip() {
        let v = trefoil_matrix().block_extend(&[7]).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains("\"size\":4"));
        let back: SeifertMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn certificate_json_round_trip() {
        let ext = trefoil_matrix().block_extend(&[2]).unwrap();
        let cert = ext.reduce_extension(&[2]).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        let back: MoveCertificate = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cert);
        assert_eq!(ext.replay(&back).unwrap(), trefoil_matrix());
    }
}
