//! S-equivalence moves with replayable certificates: congruence,
//! enlargement, destabilization, and the invariance of all abelian
//! invariants along the way.

use knotlab::seifmat::{trefoil_matrix, Move, MoveCertificate, SeifertMatrix};
use num_bigint::BigInt;

fn main() -> knotlab::Result<()> {
    let v = trefoil_matrix();
    let before = v.abelian_invariants()?;
    println!("start: trefoil matrix {:?}", v.rows());
    println!(
        "  alexander {}  signature {}  determinant {}",
        before.alexander, before.signature, before.determinant
    );

    // Enlarge, shear by a unimodular congruence, then undo everything.
    let cert = MoveCertificate {
        moves: vec![
            Move::Enlarge {
                position: 2,
                column: vec![BigInt::from(0), BigInt::from(0)],
                transpose: false,
            },
            Move::Congruence {
                p: SeifertMatrix::from_i64(&[
                    &[1, 0, 0, 0],
                    &[2, 1, 0, 0],
                    &[0, 0, 1, 0],
                    &[0, -1, 3, 1],
                ])?,
            },
        ],
    };
    let moved = v.replay(&cert)?;
    let after = moved.abelian_invariants()?;
    println!("after enlargement and congruence: size {}", moved.size());
    println!(
        "  alexander {}  signature {}  determinant {}",
        after.alexander, after.signature, after.determinant
    );
    assert_eq!(before.alexander, after.alexander);
    assert_eq!(before.signature, after.signature);
    assert_eq!(before.determinant, after.determinant);

    // A block extension reduces back to the base with an explicit
    // certificate.
    let extended = v.block_extend(&[3, -2])?;
    let reduction = extended.reduce_extension(&[2, 4])?;
    println!(
        "block extension by orders (3, -2): size {} -> certificate with {} moves",
        extended.size(),
        reduction.moves.len()
    );
    let reduced = extended.replay(&reduction)?;
    assert_eq!(reduced, v);
    println!("replay returns the trefoil matrix exactly");
    Ok(())
}
