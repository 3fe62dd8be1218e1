//! Generate a family member over a fibered base knot: block-extend its
//! Seifert matrix, keep every abelian invariant, and certify the reduction.

use knotlab::adjacency::generate_family;
use knotlab::seifmat::trefoil_matrix;

fn main() -> knotlab::Result<()> {
    let base = trefoil_matrix();
    let (extended, report) = generate_family(&base, 3, &[2, 2, 2])?;

    println!("base: trefoil, genus {}", report.base_genus);
    println!(
        "member: {}x{} matrix on a genus-{} surface",
        extended.size(),
        extended.size(),
        report.surface_genus
    );
    println!(
        "alexander {}   signature {}   determinant {}   invariants equal: {}",
        report.alexander, report.signature, report.determinant, report.invariants_equal
    );
    println!(
        "reduction certificate: {} moves, replays to base: {}",
        report.reduction.moves.len(),
        report.reduction_replays_to_base
    );
    for check in report.subset_checks.as_deref().unwrap_or_default() {
        println!(
            "  subset {:?} zeroed and destabilized -> base exactly: {}",
            check.subset, check.exact_match
        );
    }
    println!();
    for line in &report.rationale {
        println!("note: {line}");
    }
    Ok(())
}
