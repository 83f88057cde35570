//! Exact algebra: polynomials, rational functions in `q`, quantum integers,
//! cyclotomic reduction and dense matrices.

pub mod cyclotomic;
pub mod field;
pub mod intpoly;
pub mod laurent;
pub mod matrix;
pub mod poly;
pub mod qint;
pub mod ratfunc;

pub use cyclotomic::{cyclotomic, eval_at_root, CyclotomicElement};
pub use field::Field;
pub use intpoly::IntPoly;
pub use laurent::Laurent;
pub use matrix::Matrix;
pub use poly::Poly;
pub use qint::{balanced_signed, quantum_int, quantum_int_laurent, Convention};
pub use ratfunc::RatFunc;
