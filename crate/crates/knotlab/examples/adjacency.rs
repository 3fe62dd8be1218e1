//! Run the subset verifier on the bundled pretzel-trefoil fixtures: every
//! nonempty subset of marked twist sites is changed and the invariants are
//! compared against the target knot.

use knotlab::adjacency::{target_from_table, AdjacencyPresentation, PresentationBase};
use knotlab::diagram::fixtures;
use knotlab::verify_adjacency;

fn main() -> knotlab::Result<()> {
    for (diagram, n) in [
        (fixtures::pretzel_trefoil_one_site(), 1),
        (fixtures::pretzel_trefoil(), 3),
    ] {
        let presentation = AdjacencyPresentation {
            twist_sites: diagram.twist_sites().to_vec(),
            base: PresentationBase::Diagram(diagram),
            target_name: "unknot".into(),
            target: target_from_table("unknot")?,
            n,
        };
        let cert = verify_adjacency(&presentation, 24)?;
        println!(
            "pretzel trefoil with {n} marked column(s) vs {}: {:?}",
            cert.target, cert.verdict
        );
        for record in &cert.records {
            println!(
                "  subset {:?}: alexander {}  jones trivial: {}  match: {}",
                record.subset,
                record.alexander,
                record.jones.as_ref().unwrap().is_trivial(),
                record.matches
            );
        }
        println!(
            "distinctness witness: {:?}\n{}\n",
            cert.distinctness, cert.note
        );
    }
    Ok(())
}
