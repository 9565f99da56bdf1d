//! Exact and certified arithmetic kernel.
//!
//! Rational polynomials, Sturm-based real root isolation, certified complex
//! root isolation, precision-escalating refinement, and exact equality of
//! algebraic reals. No floating point enters any value representation; f64 is
//! used only to seed iterations whose results are then certified with
//! rational arithmetic.

mod complex;
mod interval;
mod log;
mod poly;
mod precision;
mod real;
mod sturm;

pub use complex::{isolate_complex_roots, ComplexAlgebraic};
pub use interval::{ComplexBox, Rat, RatInterval};
pub use log::ln_interval;
pub use poly::{composed_product, composed_sum, Polynomial};
pub use precision::Precision;
pub use real::{alg_equal, RealAlgebraic};
pub use sturm::{count_real_roots, isolate_real_roots, SturmChain};
