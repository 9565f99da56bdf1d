//! Certified computational number theory for Oeljeklaus-Toma manifolds.
//!
//! Given a number field `K = Q[x]/(f)` of signature `(s, 2t)` and a subgroup
//! `U` of totally positive units, this crate decides whether the associated
//! Oeljeklaus-Toma manifold `X(K, U)` admits a locally conformally Kähler
//! metric, and classifies units by the behaviour of their complex-embedding
//! moduli (isometrical / homothetical / neither).
//!
//! Everything downstream of root isolation is exact: algebraic numbers are
//! represented by a squarefree defining polynomial plus an isolating rational
//! interval or box, equalities are decided by gcd and refinement, and the
//! only approximate quantities (logarithms of embedding values) are carried
//! as directed rational intervals with an explicit precision-escalation
//! protocol. Answers that cannot be certified at the precision cap are
//! reported as undecided, never guessed.

pub mod error;
pub mod exactnum;
pub mod kronecker;
pub mod numfield;
pub mod otm;
pub mod search;
pub mod units;

pub use error::Error;
pub use exactnum::{
    alg_equal, composed_product, count_real_roots, isolate_complex_roots, isolate_real_roots,
    ComplexAlgebraic, ComplexBox, Polynomial, Precision, Rat, RatInterval, RealAlgebraic,
};
pub use kronecker::{case1_divisibility, classify_unit, equal_complex_moduli, is_gxk_form, UnitClass, UnitClassKind};
pub use numfield::{FieldElement, NumberField};
pub use otm::{lck_verdict, lemma_obstruction, validate_ot_input, LckReason, LckStatus, LckVerdict};
pub use search::{enumerate_units, find_admissible, partition_by_class, SearchBudget};
pub use units::{
    is_admissible, is_root_of_unity, is_totally_positive, is_unit, log_embedding, subgroup_rank,
    TriState, UnitSubgroup,
};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
