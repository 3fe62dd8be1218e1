//! Braid words as the canonical input route for Seifert matrices.
//!
//! A braid word on `k` strands closes to a link; when the closure is a knot
//! this module builds the disc-band Seifert surface of the closed braid
//! (consecutive band pairs at each generator index) and its Seifert matrix,
//! and independently computes the Alexander polynomial from the reduced
//! Burau representation. The two routes must always agree up to units.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix;
use crate::seifmat::SeifertMatrix;

/// A signed generator sequence on `strands` strands. Letter `e` means the
/// generator crossing strands |e| and |e|+1, with sign(e) the crossing sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::BraidParse {
                input: String::new(),
                reason: "a braid needs at least one strand".into(),
            });
        }
        for &e in &letters {
            let idx = e.unsigned_abs() as usize;
            if e == 0 || idx >= strands {
                return Err(Error::BadGenerator {
                    index: e as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        count
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    fn require_knot(&self) -> Result<()> {
        let components = self.closure_components();
        if components == 1 {
            Ok(())
        } else {
            Err(Error::NotAKnotClosure { components })
        }
    }

    /// The mirror word (all crossings reversed).
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<BraidWord> {
        let bad = |reason: &str| Error::BraidParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let rest = s.trim().strip_prefix("braid").ok_or_else(|| bad("expected \"braid k: ...\""))?;
        let (head, tail) = rest.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| bad("strand count is not a number"))?;
        let mut letters = Vec::new();
        for tok in tail.split_whitespace() {
            let e: i32 = tok
                .parse()
                .map_err(|_| bad(&format!("bad letter {tok:?}")))?;
            letters.push(e);
        }
        BraidWord::new(strands, letters)
    }
}

/// Parse a braid word and require its closure to be a knot.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let word: BraidWord = text.parse()?;
    word.require_knot()?;
    Ok(word)
}

// ---- Reduced Burau representation ----

type LMatrix = Vec<Vec<LaurentPoly>>;

fn identity(n: usize) -> LMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &LMatrix, b: &LMatrix) -> LMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = LaurentPoly::zero();
                    for (k, aik) in a[i].iter().enumerate() {
                        if aik.is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc = &acc + &(aik * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of a single generator on `k` strands.
fn burau_generator(k: usize, letter: i32) -> LMatrix {
    let n = k - 1;
    let i = letter.unsigned_abs() as usize; // 1-based generator index
    let mut m = identity(n);
    let t = LaurentPoly::t;
    let tinv = || LaurentPoly::term(-1, 1);
    let neg = |p: LaurentPoly| -&p;
    if letter > 0 {
        // Rows/columns are 1-based in the classical block formulas.
        if i > 1 {
            m[i - 2][i - 1] = t();
        }
        m[i - 1][i - 1] = neg(t());
        if i < n {
            m[i][i - 1] = LaurentPoly::one();
        }
    } else {
        if i > 1 {
            m[i - 2][i - 1] = LaurentPoly::one();
        }
        m[i - 1][i - 1] = neg(tinv());
        if i < n {
            m[i][i - 1] = tinv();
        }
    }
    m
}

/// Reduced Burau matrix of a whole word.
pub fn burau_matrix(word: &BraidWord) -> LMatrix {
    let mut m = identity(word.strands - 1);
    for &e in &word.letters {
        m = mat_mul(&m, &burau_generator(word.strands, e));
    }
    m
}

/// Alexander polynomial of the closure from the reduced Burau determinant:
/// det(rho(b) - I) * (t - 1) / (t^k - 1), normalized. The division is exact
/// for every knot closure; failure signals an implementation bug.
pub fn alexander_via_burau(word: &BraidWord) -> Result<LaurentPoly> {
    word.require_knot()?;
    let k = word.strands;
    if k == 1 {
        return Ok(LaurentPoly::one());
    }
    let m = burau_matrix(word);
    let n = k - 1;
    let a: LMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        &m[i][j] - &LaurentPoly::one()
                    } else {
                        m[i][j].clone()
                    }
                })
                .collect()
        })
        .collect();
    let det = matrix::det_laurent(&a)?;
    let numer = &det * &(&LaurentPoly::t() - &LaurentPoly::one());
    let denom = &LaurentPoly::term(k as i64, 1) - &LaurentPoly::one();
    let quotient = numer
        .exact_div(&denom)
        .map_err(|e| Error::BurauIdentity(e.to_string()))?;
    quotient
        .normalize()
        .map_err(|_| Error::BurauIdentity("vanishing Alexander polynomial".into()))
}

// ---- Disc-band Seifert matrix ----

/// Linking-number rule table for the disc-band basis loops. The pairs give
/// (lk(x, y+), lk(y, x+)) for the configurations that interact; all other
/// pairs of basis loops have linking number zero.
struct RuleTable {
    /// Consecutive loops at one generator index sharing a band of sign +1 / -1.
    same_pos: (i64, i64),
    same_neg: (i64, i64),
    /// Loops at adjacent indices i (x) and i+1 (y) whose band intervals
    /// interleave: `cross_lower` when x's top band comes first,
    /// `cross_upper` when y's top band comes first.
    cross_lower: (i64, i64),
    cross_upper: (i64, i64),
    /// Sign of the self-linking -(e1 + e2)/2 rule.
    self_sign: i64,
}

/// Convention pinned by the anchor knots: the closure of "braid 2: 1 1 1"
/// has Seifert matrix [[-1,1],[0,-1]], signature -2 and Alexander polynomial
/// 1 - t + t^2, and every table braid agrees with the Burau oracle.
const RULES: RuleTable = RuleTable {
    same_pos: (1, 0),
    same_neg: (0, -1),
    cross_lower: (0, -1),
    cross_upper: (0, 1),
    self_sign: -1,
};

#[derive(Clone, Copy)]
struct Loop {
    /// Generator index (1-based).
    index: usize,
    /// Word positions of the two bands, top < bottom.
    top: usize,
    bottom: usize,
}

fn basis_loops(word: &BraidWord) -> Vec<Loop> {
    let mut loops = Vec::new();
    for index in 1..word.strands {
        let positions: Vec<usize> = word
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &e)| e.unsigned_abs() as usize == index)
            .map(|(p, _)| p)
            .collect();
        for w in positions.windows(2) {
            loops.push(Loop {
                index,
                top: w[0],
                bottom: w[1],
            });
        }
    }
    loops
}

fn seifert_with_table(word: &BraidWord, rules: &RuleTable) -> Result<(SeifertMatrix, usize)> {
    word.require_knot()?;
    let k = word.strands;
    let c = word.letters.len();
    for index in 1..k {
        if !word
            .letters
            .iter()
            .any(|&e| e.unsigned_abs() as usize == index)
        {
            return Err(Error::NotAKnotSurface(c, k));
        }
    }
    if c + 1 < k || !(c + 1 - k).is_multiple_of(2) {
        return Err(Error::NotAKnotSurface(c, k));
    }
    let g_upper = (c + 1 - k) / 2;
    let loops = basis_loops(word);
    debug_assert_eq!(loops.len(), 2 * g_upper);
    let sign = |p: usize| word.letters[p].signum() as i64;
    let n = loops.len();
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for (a, x) in loops.iter().enumerate() {
        for (b, y) in loops.iter().enumerate() {
            if a == b {
                rows[a][b] = BigInt::from(rules.self_sign * (sign(x.top) + sign(x.bottom)) / 2);
                continue;
            }
            if a > b {
                continue; // pairs are filled symmetrically below
            }
            let (vxy, vyx) = pair_linking(x, y, rules, &sign);
            rows[a][b] = BigInt::from(vxy);
            rows[b][a] = BigInt::from(vyx);
        }
    }
    let v = SeifertMatrix::new(rows)?;
    if !v.validate()? {
        return Err(Error::NotUnimodularPairing(format!(
            "disc-band pairing of {word} is not unimodular"
        )));
    }
    Ok((v, g_upper))
}

/// Linking numbers (lk(x, y+), lk(y, x+)) for two distinct basis loops.
fn pair_linking(
    x: &Loop,
    y: &Loop,
    rules: &RuleTable,
    sign: &impl Fn(usize) -> i64,
) -> (i64, i64) {
    if x.index == y.index {
        // Consecutive loops share a band; anything further apart is disjoint.
        if x.bottom == y.top {
            let s = sign(x.bottom);
            return if s > 0 { rules.same_pos } else { rules.same_neg };
        }
        if y.bottom == x.top {
            let s = sign(y.bottom);
            let (p, q) = if s > 0 { rules.same_pos } else { rules.same_neg };
            return (q, p);
        }
        return (0, 0);
    }
    if x.index.abs_diff(y.index) != 1 {
        return (0, 0);
    }
    // Adjacent indices interact only when the band intervals interleave.
    let (left, right, flipped) = if x.index < y.index {
        (x, y, false)
    } else {
        (y, x, true)
    };
    let interleaved_lower = left.top < right.top && right.top < left.bottom && left.bottom < right.bottom;
    let interleaved_upper = right.top < left.top && left.top < right.bottom && right.bottom < left.bottom;
    let pair = if interleaved_lower {
        rules.cross_lower
    } else if interleaved_upper {
        rules.cross_upper
    } else {
        (0, 0)
    };
    if flipped {
        (pair.1, pair.0)
    } else {
        pair
    }
}

/// Seifert matrix and surface-genus upper bound of the closed braid.
pub fn seifert_from_braid(word: &BraidWord) -> Result<(SeifertMatrix, usize)> {
    seifert_with_table(word, &RULES)
}

// ---- Closed-braid diagrams ----

/// Planar diagram of the closed braid with arcs numbered along the knot in
/// walk order. The crossing list follows word order, so twist sites on a
/// braid presentation address crossings by word position.
pub fn braid_to_pd(word: &BraidWord) -> Result<crate::diagram::PlanarDiagram> {
    use crate::diagram::{Crossing, PlanarDiagram};
    word.require_knot()?;
    let c = word.letters.len();
    if c == 0 {
        return Ok(PlanarDiagram::unknot());
    }
    // Walk the knot through the closed braid. Each crossing is passed once
    // entering from the top-left and once from the top-right.
    #[derive(Clone, Copy)]
    struct Passage {
        crossing: usize,
        from_left: bool,
    }
    let mut passages: Vec<Passage> = Vec::with_capacity(2 * c);
    let mut pos = 1usize;
    loop {
        for (j, &e) in word.letters.iter().enumerate() {
            let i = e.unsigned_abs() as usize;
            if pos == i {
                passages.push(Passage {
                    crossing: j,
                    from_left: true,
                });
                pos = i + 1;
            } else if pos == i + 1 {
                passages.push(Passage {
                    crossing: j,
                    from_left: false,
                });
                pos = i;
            }
        }
        if pos == 1 {
            break;
        }
    }
    debug_assert_eq!(passages.len(), 2 * c);
    // Arc between consecutive passages; entry(p_0) wraps to arc 2c.
    let total = 2 * c;
    let entry = |l: usize| if l == 0 { total } else { l };
    let exit = |l: usize| l + 1;
    let mut tl: Vec<(usize, usize)> = vec![(0, 0); c]; // (entry, exit) arcs
    let mut tr: Vec<(usize, usize)> = vec![(0, 0); c];
    for (l, p) in passages.iter().enumerate() {
        let io = (entry(l), exit(l));
        if p.from_left {
            tl[p.crossing] = io;
        } else {
            tr[p.crossing] = io;
        }
    }
    let crossings: Vec<Crossing> = (0..c)
        .map(|j| {
            let (tl_in, tl_out) = tl[j];
            let (tr_in, tr_out) = tr[j];
            if word.letters[j] > 0 {
                // Over-strand runs top-left to bottom-right; the under-strand
                // enters at the top-right.
                Crossing([tr_in, tl_in, tr_out, tl_out])
            } else {
                Crossing([tl_in, tr_out, tl_out, tr_in])
            }
        })
        .collect();
    PlanarDiagram::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn word(s: &str) -> BraidWord {
        parse_braid(s).unwrap()
    }

    #[test]
    fn parse_accepts_knots_and_rejects_links() {
        let trefoil = word("braid 2: 1 1 1");
        assert_eq!(trefoil.strands, 2);
        assert_eq!(trefoil.letters, vec![1, 1, 1]);

        let fig8 = word("braid 3: 1 -2 1 -2");
        assert!(fig8.is_knot());

        assert!(matches!(
            parse_braid("braid 3: 1 1"),
            Err(Error::NotAKnotClosure { .. })
        ));
        assert!(matches!(
            parse_braid("braid 2: 1 -1"),
            Err(Error::NotAKnotClosure { components: 2 })
        ));
        assert!(matches!(
            parse_braid("braid 2: 3"),
            Err(Error::BadGenerator { index: 3, .. })
        ));
        assert!(parse_braid("braid 1:").is_ok());
    }

    #[test]
    fn burau_satisfies_braid_relations() {
        let k = 4;
        let lhs = mat_mul(
            &mat_mul(&burau_generator(k, 1), &burau_generator(k, 2)),
            &burau_generator(k, 1),
        );
        let rhs = mat_mul(
            &mat_mul(&burau_generator(k, 2), &burau_generator(k, 1)),
            &burau_generator(k, 2),
        );
        assert_eq!(lhs, rhs);

        let far = mat_mul(&burau_generator(k, 1), &burau_generator(k, 3));
        let far2 = mat_mul(&burau_generator(k, 3), &burau_generator(k, 1));
        assert_eq!(far, far2);

        for i in 1..k as i32 {
            let inv = mat_mul(&burau_generator(k, i), &burau_generator(k, -i));
            assert_eq!(inv, identity(k - 1), "inverse of generator {i}");
        }
    }

    #[test]
    fn burau_alexander_anchors() {
        assert_eq!(
            alexander_via_burau(&word("braid 2: 1 1 1")).unwrap(),
            poly("1 - t + t^2")
        );
        assert_eq!(alexander_via_burau(&word("braid 1:")).unwrap(), poly("1"));
        assert_eq!(
            alexander_via_burau(&word("braid 3: 1 -2 1 -2")).unwrap(),
            poly("1 - 3*t + t^2")
        );
        // Torus knots from positive 2-braids.
        assert_eq!(
            alexander_via_burau(&word("braid 2: 1 1 1 1 1")).unwrap(),
            poly("1 - t + t^2 - t^3 + t^4")
        );
    }

    #[test]
    fn seifert_anchor_matrices() {
        let (v, g) = seifert_from_braid(&word("braid 2: 1 1 1")).unwrap();
        assert_eq!(g, 1);
        assert_eq!(v, SeifertMatrix::from_i64(&[&[-1, 1], &[0, -1]]).unwrap());
        let inv = v.abelian_invariants().unwrap();
        assert_eq!(inv.alexander, poly("1 - t + t^2"));
        assert_eq!(inv.signature, -2);

        let (v8, g8) = seifert_from_braid(&word("braid 3: 1 -2 1 -2")).unwrap();
        assert_eq!(g8, 1);
        let inv8 = v8.abelian_invariants().unwrap();
        assert_eq!(inv8.alexander, poly("1 - 3*t + t^2"));
        assert_eq!(inv8.signature, 0);

        let (vu, gu) = seifert_from_braid(&word("braid 1:")).unwrap();
        assert_eq!((vu.size(), gu), (0, 0));
    }

    #[test]
    fn seifert_torus_signatures() {
        let (v5, g5) = seifert_from_braid(&word("braid 2: 1 1 1 1 1")).unwrap();
        assert_eq!(g5, 2);
        assert_eq!(v5.signature().unwrap(), -4);
        let (v7, _) = seifert_from_braid(&word("braid 2: 1 1 1 1 1 1 1")).unwrap();
        assert_eq!(v7.signature().unwrap(), -6);
    }

    #[test]
    fn mirror_flips_signature_and_fixes_alexander() {
        for s in ["braid 2: 1 1 1", "braid 3: 1 -2 1 -2", "braid 2: 1 1 1 1 1"] {
            let w = word(s);
            let (v, _) = seifert_from_braid(&w).unwrap();
            let (vm, _) = seifert_from_braid(&w.mirror()).unwrap();
            assert_eq!(v.signature().unwrap(), -vm.signature().unwrap());
            assert_eq!(v.alexander().unwrap(), vm.alexander().unwrap());
        }
    }

    #[test]
    fn seifert_agrees_with_burau_on_fixed_corpus() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5e1f);
        let mut tested = 0;
        while tested < 60 {
            let k = rng.gen_range(2..=5usize);
            let len = rng.gen_range(k..=10usize);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let idx = rng.gen_range(1..k as i32);
                    if rng.gen_bool(0.5) {
                        idx
                    } else {
                        -idx
                    }
                })
                .collect();
            let Ok(w) = BraidWord::new(k, letters) else {
                continue;
            };
            if !w.is_knot() {
                continue;
            }
            let Ok((v, _)) = seifert_from_braid(&w) else {
                continue;
            };
            assert!(v.validate().unwrap(), "unimodularity for {w}");
            assert_eq!(
                v.alexander().unwrap(),
                alexander_via_burau(&w).unwrap(),
                "oracle agreement for {w}"
            );
            tested += 1;
        }
    }

    #[test]
    fn genus_bound_dominates_degree() {
        for s in [
            "braid 2: 1 1 1",
            "braid 3: 1 -2 1 -2",
            "braid 2: 1 1 1 1 1",
            "braid 4: 1 1 2 -1 -3 2 -3",
        ] {
            let w = word(s);
            let (v, g) = seifert_from_braid(&w).unwrap();
            let (degree, _) = v.alexander().unwrap().span_monic().unwrap();
            assert!(2 * g as u64 >= degree, "Seifert bound for {s}");
        }
    }

    #[test]
    fn braid_to_pd_anchors() {
        let d = braid_to_pd(&word("braid 2: 1 1 1")).unwrap();
        assert_eq!(d.to_string(), "X[3,6,4,1] X[1,4,2,5] X[5,2,6,3]");
        assert_eq!(braid_to_pd(&word("braid 1:")).unwrap().crossing_count(), 0);
        // A single positive letter closes to a one-crossing unknot curl.
        let kink = braid_to_pd(&word("braid 2: 1")).unwrap();
        assert_eq!(kink.crossing_count(), 1);
    }

    #[test]
    fn triple_oracle_agreement_on_fixed_corpus() {
        use crate::diagram::alexander_from_pd;
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x07ac1e);
        let mut tested = 0;
        while tested < 40 {
            let k = rng.gen_range(2..=5usize);
            let len = rng.gen_range(k..=9usize);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let idx = rng.gen_range(1..k as i32);
                    if rng.gen_bool(0.5) {
                        idx
                    } else {
                        -idx
                    }
                })
                .collect();
            let Ok(w) = BraidWord::new(k, letters) else {
                continue;
            };
            if !w.is_knot() {
                continue;
            }
            let Ok((v, _)) = seifert_from_braid(&w) else {
                continue;
            };
            let from_matrix = v.alexander().unwrap();
            let from_burau = alexander_via_burau(&w).unwrap();
            let from_regions = alexander_from_pd(&braid_to_pd(&w).unwrap()).unwrap();
            assert_eq!(from_matrix, from_burau, "matrix vs Burau for {w}");
            assert_eq!(from_burau, from_regions, "Burau vs regions for {w}");
            tested += 1;
        }
    }

    #[test]
    fn missing_generator_is_rejected() {
        // Force the surface check directly; such words are already rejected
        // as multi-component closures during parsing.
        let w = BraidWord::new(3, vec![1, 1]).unwrap();
        assert!(seifert_from_braid(&w).is_err());
    }
}
