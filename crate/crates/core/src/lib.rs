//! Gröbner-Shirshov bases in free Rota-Baxter algebras of weight λ.
//!
//! The engine is generic over an exact [`Coefficient`] field. The aliases at
//! the crate root fix it to arbitrary-precision rationals, which is what the
//! command-line tool uses.

pub mod algebra;
pub mod error;
pub mod gsb;
pub mod order;
pub mod presets;
pub mod random;
pub mod scalar;
pub mod starwords;
pub mod terms;
pub mod textio;

pub use algebra::{
    multiply, multiply_words, pnm_coefficients, predict_product_leading, AlgebraContext, PnmCoefficients,
};
pub use error::{Error, ParseError, Result};
pub use gsb::RelationSet as GenericRelationSet;
pub use scalar::Coefficient;
pub use starwords::{find_occurrences, proper_overlaps, Overlap, StarWord};
pub use terms::{enumerate_words, generators, Deg, Generator, Prime, Symbol, Word};

/// The default coefficient field.
pub type Rational = num_rational::BigRational;
pub type Poly = algebra::Polynomial<Rational>;
pub type Context = AlgebraContext<Rational>;
pub type Relations = gsb::RelationSet<Rational>;
