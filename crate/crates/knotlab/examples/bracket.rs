//! The formal surgery bracket: alternating-sum expansion over sublinks,
//! the collapse forced by adjacency, and the vanishing bookkeeping for
//! order-bounded functionals.

use std::collections::BTreeMap;

use knotlab::surgery::{
    bracket_expand, collapse_adjacent, sublink_name, vanishing_check, AdmissibleLinkModel,
    SurgeryDescriptor, SurgerySlope,
};
use num_bigint::BigInt;

fn main() -> knotlab::Result<()> {
    let m = SurgeryDescriptor::new("K", SurgerySlope::zero()).label();
    let y = SurgeryDescriptor::new("K'", SurgerySlope::zero()).label();

    // Expansion with distinct labels keeps all 2^n terms.
    let n = 3;
    let link = AdmissibleLinkModel::crossing_circles(&[1, -1, 1])?;
    let mut result_of = BTreeMap::new();
    for mask in 0u64..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let label = if subset.is_empty() {
            m.clone()
        } else {
            format!("M{}", sublink_name(&subset))
        };
        result_of.insert(subset, label);
    }
    let expanded = bracket_expand(&m, &link, &result_of)?;
    println!("free expansion over 3 components:\n  {expanded}");

    // When every nonempty sublink surgery gives the same manifold the
    // bracket collapses to a difference.
    for n in [1usize, 5, 8] {
        let sum = collapse_adjacent(&m, n, &y)?;
        println!("collapse with n = {n}: {sum}");
    }

    // A functional annihilating the bracket must equate the two labels.
    let mut f = BTreeMap::new();
    f.insert(m.clone(), BigInt::from(42));
    f.insert(y.clone(), BigInt::from(42));
    println!(
        "consistent assignment f({m}) = f({y}) = 42: {}",
        vanishing_check(&f, &m, 5, &y)?
    );
    f.insert(y.clone(), BigInt::from(41));
    println!(
        "inconsistent assignment flagged: {}",
        !vanishing_check(&f, &m, 5, &y)?
    );
    Ok(())
}
