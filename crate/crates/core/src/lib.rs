//! Exact computation of cyclotomic polynomials and their Gauss and
//! Aurifeuillian factor polynomials, with applications to factoring
//! numbers of the form `m^{2n}·n^n ± 1`.

pub mod bigfloat;
pub mod cyclotomic;
pub mod error;
pub mod factorizer;
pub mod gauss;
pub mod lucas;
pub mod numthy;
pub mod poly;
pub mod series;

pub use bigfloat::BigFloat;
pub use error::{Error, Result};
pub use factorizer::{AurifeuilleResult, FactorList};
pub use gauss::GaussPair;
pub use lucas::LucasPair;
pub use numthy::{ClassNumberData, NumTheoryContext, PellUnit};
pub use poly::{IntPolynomial, Rational, Symmetry};
pub use series::RationalSeries;
