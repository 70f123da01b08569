//! Invariant calculus for involutions on even unimodular lattices.
//!
//! The library covers the lattice-theoretic side of the topological
//! classification of real Enriques surfaces:
//!
//! * [`lattice`] — integral lattices as symmetric Gram matrices, with the
//!   standard building blocks `U`, `E8`, the K3 lattice and the Enriques
//!   lattice, all in exact arbitrary-precision arithmetic.
//! * [`f2`] — linear algebra over GF(2) on quotients `L/2L`, plus quadratic
//!   forms with values mod 4 refining bilinear forms mod 2.
//! * [`involution`] — the invariants of a lattice involution: eigenlattices,
//!   the triple `(r, a, delta)`, the characteristic element, and the
//!   extension invariants relative to an invariant sublattice.
//! * [`topology`] — the algebra of closed-surface topological types: the
//!   fixed-locus type of a K3 involution, Euler characteristics, and the
//!   orientizing double-cover combinatorics.
//! * [`classify`] — the classification calculus for real Enriques surfaces:
//!   admissible theta triples, the relations between the two lifts of a real
//!   structure, the bundled classification table with a full row checker,
//!   and the derivation of the realized/unresolved type lists.

// Index loops mirror the Gram-matrix formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod f2;
pub mod involution;
pub mod lattice;
pub mod topology;

pub use classify::{
    bundled_realized_types, bundled_table, bundled_table_text, bundled_unresolved_types,
    check_row, derive_type_lists, enumerate_candidates, format_row, format_table, parse_table,
    parse_type_list, partner_triple, s_nor_bound, s_nor_formula, theta_triples, verify_table,
    ActionCandidate, Branch, CheckResult, DeltaFlags, RowReport, TableRow, TableSummary,
    ThetaTriple, TypeLists,
};
pub use f2::{intersect, orthogonal_complement_in, span_mod2, F2Subspace, Mod4Quadratic};
pub use involution::{
    characteristic_element, eigenlattice, extension_invariants, k3_triple, validate_involution,
    EigenSign, ExtensionInvariants, K3Triple, LatticeInvolution,
};
pub use lattice::{
    direct_sum, format_lattice_text, format_matrix_text, lattice_properties, parse_int_matrix,
    parse_lattice_text, standard_lattice, twist, IntegerLattice, LatticeProperties, Signature,
};
pub use topology::{
    euler, homology_dim, k3_real_type, nonorientable_count, orientation_cover,
    parse_surface_type, quotient_candidates, triple_from_type, SurfaceComponent, SurfaceType,
};
