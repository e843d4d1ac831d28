//! Coefficient field abstraction.
//!
//! Every algebraic routine is generic over [`Coefficient`]. Triviality of a
//! composition is decided by exact cancellation, so only exact fields are
//! implemented: arbitrary-precision rationals (the default) and `i64`
//! rationals for small, fast experiments.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Signed, ToPrimitive};

pub trait Coefficient: Num + Signed + Clone + Debug + Display + Send + Sync + 'static {
    /// Builds `numer / denom`, or `None` when the value does not fit.
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self>;

    fn from_i64(value: i64) -> Self {
        Self::from_ratio(&BigInt::from(value), &BigInt::from(1)).expect("i64 fits every field")
    }
}

impl Coefficient for BigRational {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        if denom == &BigInt::from(0) {
            return None;
        }
        Some(BigRational::new(numer.clone(), denom.clone()))
    }
}

impl Coefficient for Rational64 {
    fn from_ratio(numer: &BigInt, denom: &BigInt) -> Option<Self> {
        let n = numer.to_i64()?;
        let d = denom.to_i64()?;
        if d == 0 {
            return None;
        }
        Some(Rational64::new(n, d))
    }
}
