//! Seminormal Hecke representations of rectangular shapes, the cactus group
//! action on standard Young tableaux, and cyclic sieving checks.

pub mod cactus;
pub mod csp;
mod error;
pub mod exactalg;
pub mod heckerep;
pub mod interp;
pub mod latex;
pub mod tableau;

pub use error::{Error, Result};

use exactalg::{Laurent, Matrix, RatFunc};

pub type Rational = num_rational::BigRational;
pub type RationalFunction = RatFunc<Rational>;
pub type LaurentPoly = Laurent<Rational>;
pub type MatrixQ = Matrix<Rational>;
pub type MatrixQq = Matrix<RationalFunction>;
