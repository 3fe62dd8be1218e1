//! Knot reports from braid words, with the three Alexander oracles
//! cross-checked against each other.

use knotlab::braid::{alexander_via_burau, braid_to_pd, seifert_from_braid};
use knotlab::diagram::alexander_from_pd;
use knotlab::fiberlab::report_from_braid;
use knotlab::table;

fn main() -> knotlab::Result<()> {
    for name in ["3_1", "4_1", "5_2", "8_20"] {
        let entry = table::lookup(name).expect("bundled knot");
        let word = entry.braid()?;

        // The three independent routes to the Alexander polynomial.
        let (matrix, genus_upper) = seifert_from_braid(&word)?;
        let from_matrix = matrix.alexander()?;
        let from_burau = alexander_via_burau(&word)?;
        let from_regions = alexander_from_pd(&braid_to_pd(&word)?)?;
        assert_eq!(from_matrix, from_burau);
        assert_eq!(from_burau, from_regions);

        let report = report_from_braid(name, &word, 24, Some(entry))?;
        println!("{name} ({word})");
        println!("  alexander   {from_matrix}   [matrix = Burau = regions]");
        println!(
            "  determinant {}   signature {}   surface genus {genus_upper}",
            report.invariants.determinant,
            report.invariants.signature.unwrap(),
        );
        println!("  fibered     {:?}", report.fibered);
        println!();
    }
    Ok(())
}
