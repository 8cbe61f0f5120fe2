//! The five-by-five pattern with zeros at (1,4), (1,5), (2,3), (2,5), (3,4):
//! exact predicates for its bound chain, symbolic replays, the simplex
//! contradiction certificate, and the sub-range `B_min` pipeline with table replay.

mod appendix_c;
pub mod bounds;
mod expressions;
mod identities;
mod params;
mod table_data;
pub mod tables;

pub use appendix_c::{verify_appendix_c, verify_appendix_c_with, H9_GRID_POINTS, H9_GRID_SCALE};
pub use bounds::{
    apply_relations, build_bmin_and_eval, derive_diag_bounds, entry_lower_squares, offdiag_lower_bounds, run_subrange,
    DiagBounds, ImprovedBounds, OffDiagChain, PipelineResult, RawLowerBounds, Selection,
};
pub use expressions::CExpressions;
pub use identities::{verify_c_identities, P_PERM, Q_PERM};
pub use params::{
    build_c, c_predicates, lambda3_certified, symbolic_c, CParams, CParamsText, C_OFF_DIAGONAL, C_PREDICATE_NAMES,
    C_SYMBOLS,
};
pub use tables::{verify_appendix_d, verify_tables, CellRef, ExpectedTables, Mismatch, TableKind, TableVerification};
