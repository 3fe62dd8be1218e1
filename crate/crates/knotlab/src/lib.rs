//! Exact-arithmetic knot invariants and fibering obstructions.
//!
//! Everything here computes over the integers: Laurent polynomials carry
//! the Alexander polynomial, Seifert matrices carry the abelian invariants
//! and their S-equivalence moves, braid words give disc-band surfaces and
//! the reduced Burau oracle, planar diagrams give the Kauffman bracket and
//! the region-method Alexander polynomial, and twist-site rewrites realize
//! generalized crossing changes. On top of that sit adjacency certificates
//! (the 2^n - 1 subset verifier and block-extended families), the fibering
//! obstruction engine, and a formal surgery-bracket calculus.
//!
//! Three independent routes compute the Alexander polynomial — the Seifert
//! matrix determinant, the reduced Burau identity, and the region method —
//! and every report cross-checks them.
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run -p knotlab --example invariants   # oracle-checked knot reports
//! cargo run -p knotlab --example moves        # S-equivalence certificates
//! cargo run -p knotlab --example family       # block-extended families
//! cargo run -p knotlab --example adjacency    # the subset verifier
//! cargo run -p knotlab --example obstruction  # fibering verdicts and bounds
//! cargo run -p knotlab --example jones        # Kauffman bracket demos
//! cargo run -p knotlab --example bracket      # the surgery-bracket collapse
//! cargo run -p knotlab --example table_scan   # batch over the bundled table
//! ```
//!
//! The `knotlab` binary exposes the same operations as subcommands; see the
//! README for the file formats.

pub mod adjacency;
pub mod braid;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod fiberlab;
pub mod laurent;
mod matrix;
pub mod seifmat;
pub mod surgery;
pub mod table;

pub use adjacency::{
    bound_check, generate_family, verify_adjacency, AdjacencyCertificate, AdjacencyPresentation,
    GenusInterval,
};
pub use braid::{alexander_via_burau, braid_to_pd, parse_braid, seifert_from_braid, BraidWord};
pub use diagram::{
    alexander_from_pd, apply_twist_subset, kauffman_jones, parse_pd, JonesPoly, PlanarDiagram,
    TwistSite,
};
pub use error::{Error, Result};
pub use fiberlab::{
    alpha_and_symplectic, fibering_verdict, genus1_fibered_classify, report_from_braid,
    report_from_matrix, report_from_pd, FiberingVerdict, KnotReport,
};
pub use laurent::LaurentPoly;
pub use seifmat::{AbelianInvariants, Move, MoveCertificate, SeifertMatrix};
pub use surgery::{
    bracket_expand, collapse_adjacent, vanishing_check, AdmissibleLinkModel, FormalSum,
    SurgeryDescriptor, SurgerySlope,
};
