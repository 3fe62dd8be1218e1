//! Compose the fibering obstruction end to end: a family member over the
//! trefoil shares every abelian invariant, so the classical monicity test
//! says nothing; the adjacency certificate plus a distinctness witness
//! settles it.

use knotlab::adjacency::{bound_check, generate_family, SubsetRecord, Verdict};
use knotlab::fiberlab::{
    alpha_and_symplectic, fibering_verdict, report_from_braid, report_from_matrix, AlphaOutcome,
};
use knotlab::laurent::LaurentPoly;
use knotlab::seifmat::trefoil_matrix;
use knotlab::table;
use knotlab::AdjacencyCertificate;
use knotlab::JonesPoly;

fn main() -> knotlab::Result<()> {
    let trefoil = table::lookup("3_1").unwrap();
    let target = report_from_braid("3_1", &trefoil.braid()?, 24, Some(trefoil))?;

    let (extended, family) = generate_family(&trefoil_matrix(), 3, &[2, 2, 2])?;
    let records: Vec<SubsetRecord> = family
        .subset_checks
        .clone()
        .unwrap()
        .into_iter()
        .map(|c| SubsetRecord {
            subset: c.subset,
            alexander: family.alexander.clone(),
            jones: None,
            matches: c.exact_match,
        })
        .collect();
    let cert = AdjacencyCertificate {
        n: 3,
        target: "3_1".into(),
        verdict: if records.iter().all(|r| r.matches) {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        records,
        distinctness: None,
        note: "matrix-level subset destabilization".into(),
    };

    // Without any distinguishing invariant the verdict stays inconclusive.
    let member = report_from_matrix("family(3_1; 2,2,2)", &extended, None)?;
    println!("monicity test on the member: monic = {} (inconclusive for fibering)", member.invariants.monic);
    println!("verdict without a witness: {:?}\n", fibering_verdict(&member, &target, &cert));

    // With a Jones value differing from the trefoil's, the full chain runs.
    let witnessed = report_from_matrix(
        "family(3_1; 2,2,2)",
        &extended,
        Some(JonesPoly {
            polynomial: LaurentPoly::one(),
            writhe: 0,
        }),
    )?;
    match fibering_verdict(&witnessed, &target, &cert) {
        knotlab::FiberingVerdict::NotFibered { chain } => {
            println!("verdict with a Jones witness:");
            for line in chain {
                println!("  {line}");
            }
        }
        other => println!("unexpected: {other:?}"),
    }

    // Adjacency-degree bounds and the symplectic flag.
    match alpha_and_symplectic(&witnessed, &[(target, cert)]) {
        AlphaOutcome::Report(alpha) => {
            println!(
                "\nadjacency-degree bounds: [{}, {}]",
                alpha.lower,
                alpha
                    .upper
                    .map(|u| u.to_string())
                    .unwrap_or_else(|| "?".into())
            );
            println!("{}", alpha.symplectic_flag);
        }
        AlphaOutcome::Inapplicable { reason } => println!("{reason}"),
    }

    // The genus-feasibility bound rejects impossible adjacency claims.
    println!(
        "\nbound check, n = 9 against genus upper bound 1: {:?}",
        bound_check(
            9,
            &knotlab::GenusInterval::new(num_rational::BigRational::from(num_bigint::BigInt::from(1)), Some(1))
        )
    );
    Ok(())
}
