//! Bundled diagram fixtures with marked twist sites.

use super::{parse_pd, PlanarDiagram, TwistSite};

/// The trefoil drawn pretzel-style as three single-crossing twist columns
/// between two antiparallel strands. Each column is a marked order-1 twist
/// site; deleting any nonempty subset of columns yields an unknot diagram.
pub fn pretzel_trefoil() -> PlanarDiagram {
    parse_pd("X[3,1,4,6] X[1,5,2,4] X[5,3,6,2]")
        .expect("fixture parses")
        .with_sites(vec![
            TwistSite {
                crossings: vec![0],
                order: 1,
            },
            TwistSite {
                crossings: vec![1],
                order: 1,
            },
            TwistSite {
                crossings: vec![2],
                order: 1,
            },
        ])
        .expect("fixture sites are valid ladders")
}

/// The same diagram with only the first column marked: the bundled
/// "trefoil to unknot by one order-1 twist site" example.
pub fn pretzel_trefoil_one_site() -> PlanarDiagram {
    parse_pd("X[3,1,4,6] X[1,5,2,4] X[5,3,6,2]")
        .expect("fixture parses")
        .with_sites(vec![TwistSite {
            crossings: vec![0],
            order: 1,
        }])
        .expect("fixture site is a valid ladder")
}
