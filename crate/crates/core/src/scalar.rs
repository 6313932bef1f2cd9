use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, Signed};

use crate::Rational;

/// Field-like scalar the geometry is generic over.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + Send + Sync
{
    /// True when arithmetic is exact, so equality checks are meaningful.
    const EXACT: bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar represents small integers")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
}

impl Scalar for f64 {
    const EXACT: bool = false;
}

impl Scalar for f32 {
    const EXACT: bool = false;
}
