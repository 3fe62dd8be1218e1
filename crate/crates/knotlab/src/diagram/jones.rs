//! Kauffman-bracket state sum and the writhe-normalized Jones polynomial.

use serde::{Deserialize, Serialize};

use super::PlanarDiagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Default bound on the 2^c state sum.
pub const DEFAULT_CROSSING_CAP: usize = 24;

/// Jones polynomial in the bracket variable A, normalized by (-A^3)^(-w)
/// so the value does not depend on diagram writhe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesPoly {
    pub polynomial: LaurentPoly,
    pub writhe: i64,
}

impl JonesPoly {
    pub fn is_trivial(&self) -> bool {
        self.polynomial.is_one()
    }

    /// The Jones polynomial of the mirror image (A -> A^-1).
    pub fn mirrored(&self) -> JonesPoly {
        JonesPoly {
            polynomial: self.polynomial.reversed(),
            writhe: -self.writhe,
        }
    }
}

/// Raw bracket: sum over all smoothings with loop value (-A^2 - A^-2) and
/// the single-loop state normalized to 1.
pub fn kauffman_bracket(diagram: &PlanarDiagram, cap: usize) -> Result<LaurentPoly> {
    let c = diagram.crossing_count();
    if c > cap {
        return Err(Error::CapExceeded { crossings: c, cap });
    }
    if c == 0 {
        return Ok(LaurentPoly::one());
    }
    let arcs = diagram.arc_count();
    let delta = LaurentPoly::from_pairs([(2i64, -1i64), (-2, -1)]);
    let mut total = LaurentPoly::zero();
    let mut uf = UnionFind::new(arcs + 1);
    for state in 0u64..(1u64 << c) {
        uf.reset();
        let mut weight: i64 = 0;
        for (i, cr) in diagram.crossings().iter().enumerate() {
            let [a, b, cc, d] = cr.0;
            if state >> i & 1 == 0 {
                // A-smoothing joins (a,b) and (c,d).
                weight += 1;
                uf.union(a, b);
                uf.union(cc, d);
            } else {
                // B-smoothing joins (a,d) and (b,c).
                weight -= 1;
                uf.union(a, d);
                uf.union(b, cc);
            }
        }
        let loops = uf.component_count(arcs);
        let term = LaurentPoly::term(weight, 1);
        let mut contrib = term;
        for _ in 1..loops {
            contrib = &contrib * &delta;
        }
        total = &total + &contrib;
    }
    Ok(total)
}

/// Writhe-normalized Jones polynomial in the bracket variable.
pub fn kauffman_jones(diagram: &PlanarDiagram, cap: usize) -> Result<JonesPoly> {
    let bracket = kauffman_bracket(diagram, cap)?;
    let w = diagram.writhe();
    // (-A^3)^(-w) = (-1)^w A^(-3w)
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let polynomial = bracket.mul_term(-3 * w, sign);
    Ok(JonesPoly {
        polynomial,
        writhe: w,
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    /// Components among elements 1..=n.
    fn component_count(&mut self, n: usize) -> usize {
        let mut count = 0;
        for x in 1..=n {
            if self.find(x) == x {
                count += 1;
            }
        }
        count
    }
}
