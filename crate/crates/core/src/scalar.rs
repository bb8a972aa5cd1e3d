use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating point type the index arithmetic runs in: `f32` or `f64`.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Tolerance for equality claims.
    fn eq_tol() -> Self;
    /// Smallest difference counted as a strict increase.
    fn strict_tol() -> Self;

    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("small integers are representable")
    }
}

impl Scalar for f64 {
    fn eq_tol() -> Self {
        1e-9
    }
    fn strict_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn eq_tol() -> Self {
        1e-3
    }
    fn strict_tol() -> Self {
        1e-6
    }
}
