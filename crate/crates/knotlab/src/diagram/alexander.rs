//! Alexander polynomial from the crossing-region incidence matrix.
//!
//! Rows are crossings, columns are regions of the diagram; each crossing
//! deposits weights 1, -1, t, -t on its four corners. Deleting the two
//! region columns adjacent along an arc leaves a square matrix whose
//! determinant is the Alexander polynomial up to units. The corner weights
//! come from the abelianized region presentation of the knot group.

use super::PlanarDiagram;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::matrix;

/// Normalized Alexander polynomial of a knot diagram; the 0-crossing unknot
/// gives 1.
pub fn alexander_from_pd(diagram: &PlanarDiagram) -> Result<LaurentPoly> {
    let c = diagram.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly::one());
    }
    let faces = diagram.faces();
    // Corner k of a crossing lies between slots k and k+1 (mod 4); relative
    // to the quadruple (a, b, c, d) the weights are
    //   corner (a,b): 1, corner (b,c): -1, corner (c,d): t, corner (d,a): -t.
    let weights = [
        LaurentPoly::one(),
        -&LaurentPoly::one(),
        LaurentPoly::t(),
        -&LaurentPoly::t(),
    ];
    let mut m = vec![vec![LaurentPoly::zero(); faces.len()]; c];
    for (fi, corners) in faces.iter().enumerate() {
        for &(x, corner) in corners {
            m[x][fi] = &m[x][fi] + &weights[corner];
        }
    }
    // Delete two adjacent regions: the pair flanking arc 1.
    let (f1, f2) = diagram.faces_of_arc(1, &faces);
    let reduced: Vec<Vec<LaurentPoly>> = m
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(j, _)| *j != f1 && *j != f2)
                .map(|(_, v)| v)
                .collect()
        })
        .collect();
    matrix::det_laurent(&reduced)?.normalize().map_err(|_| {
        crate::error::Error::OracleDisagreement {
            id: diagram.to_string(),
            detail: "region determinant vanished".into(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn unknot_diagrams_give_one() {
        assert_eq!(alexander_from_pd(&parse_pd("").unwrap()).unwrap(), poly("1"));
        assert_eq!(
            alexander_from_pd(&parse_pd("X[1,2,2,1]").unwrap()).unwrap(),
            poly("1")
        );
        assert_eq!(
            alexander_from_pd(&parse_pd("X[1,1,2,2]").unwrap()).unwrap(),
            poly("1")
        );
    }

    #[test]
    fn trefoil_region_determinant() {
        let d = parse_pd("X[3,6,4,1] X[1,4,2,5] X[5,2,6,3]").unwrap();
        assert_eq!(alexander_from_pd(&d).unwrap(), poly("1 - t + t^2"));
    }
}
