//! Numerical checkers for the inequalities the SO-increasing rewrites rely on.

use crate::{Error, Result, Scalar};

fn s<T: Scalar>(x: usize) -> T {
    T::from_usize_exact(x)
}

/// `f(x) = √((x+a)² + b²) − √(x² + b²)`, evaluated without cancellation.
fn f_value<T: Scalar>(a: usize, b: usize, x: usize) -> T {
    let (a, b, x) = (s::<T>(a), s::<T>(b), s::<T>(x));
    a * (x + x + a) / ((x + a).hypot(b) + x.hypot(b))
}

/// `g(x) = √(a² + x²) − √(b² + x²)`, evaluated without cancellation.
fn g_value<T: Scalar>(a: usize, b: usize, x: usize) -> T {
    let (a, b, x) = (s::<T>(a), s::<T>(b), s::<T>(x));
    (a * a - b * b) / (a.hypot(x) + b.hypot(x))
}

/// `f(x + 1) − f(x)`.
pub fn f_gap<T: Scalar>(a: usize, b: usize, x: usize) -> T {
    f_value::<T>(a, b, x + 1) - f_value::<T>(a, b, x)
}

/// `g(x) − g(x + 1)`.
pub fn g_gap<T: Scalar>(a: usize, b: usize, x: usize) -> T {
    g_value::<T>(a, b, x) - g_value::<T>(a, b, x + 1)
}

/// True iff `f(x + 1) > f(x)` for every integer `x` in `[1, x_max - 1]`.
pub fn check_f_monotone<T: Scalar>(a: usize, b: usize, x_max: usize) -> Result<bool> {
    if a < 1 || b < 1 || x_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "need a, b >= 1 and x_max >= 2 (a={a}, b={b}, x_max={x_max})"
        )));
    }
    Ok((1..x_max).all(|x| f_gap::<T>(a, b, x) > T::strict_tol()))
}

/// True iff `g(x + 1) < g(x)` for every integer `x` in `[1, x_max - 1]`.
pub fn check_g_monotone<T: Scalar>(a: usize, b: usize, x_max: usize) -> Result<bool> {
    if b < 1 || a <= b || x_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "need a > b >= 1 and x_max >= 2 (a={a}, b={b}, x_max={x_max})"
        )));
    }
    Ok((1..x_max).all(|x| g_gap::<T>(a, b, x) > T::strict_tol()))
}

/// How `lhs >= rhs` came out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityOutcome {
    Strict,
    /// Both sides agree within the equality tolerance.
    Equal,
    Violated,
}

impl InequalityOutcome {
    fn classify<T: Scalar>(lhs: T, rhs: T) -> Self {
        let diff = lhs - rhs;
        if diff.abs() <= T::eq_tol() {
            Self::Equal
        } else if diff > T::zero() {
            Self::Strict
        } else {
            Self::Violated
        }
    }

    pub fn holds(self) -> bool {
        self != Self::Violated
    }
}

/// `√(c² + 4) + √(d² + 4)` against `√(c² + d²) + √8`, for `c, d >= 2`.
pub fn compare_ineq_cd<T: Scalar>(c: usize, d: usize) -> Result<InequalityOutcome> {
    if c < 2 || d < 2 {
        return Err(Error::InvalidArgument(format!("need c, d >= 2 (c={c}, d={d})")));
    }
    let (cf, df, two) = (s::<T>(c), s::<T>(d), s::<T>(2));
    let lhs = cf.hypot(two) + df.hypot(two);
    let rhs = cf.hypot(df) + two.hypot(two);
    Ok(InequalityOutcome::classify(lhs, rhs))
}

pub fn check_ineq_cd<T: Scalar>(c: usize, d: usize) -> Result<bool> {
    compare_ineq_cd::<T>(c, d).map(InequalityOutcome::holds)
}

/// The three single-radical inequalities over `m, n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MnVariant {
    /// `√((m+n)² + 4) >= √((m+1)² + (n+1)²)`
    A,
    /// `√((m+n+2)² + 4) >= √((m+1)² + (n+3)²)`
    B,
    /// `√((m+n+2)² + 4) >= √((m+2)² + (n+2)²)`
    C,
}

impl MnVariant {
    pub const ALL: [Self; 3] = [Self::A, Self::B, Self::C];
}

pub fn compare_ineq_mn<T: Scalar>(variant: MnVariant, m: usize, n: usize) -> Result<InequalityOutcome> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidArgument(format!("need m, n >= 1 (m={m}, n={n})")));
    }
    let two = s::<T>(2);
    let (lhs, rhs) = match variant {
        MnVariant::A => (s::<T>(m + n).hypot(two), s::<T>(m + 1).hypot(s(n + 1))),
        MnVariant::B => (s::<T>(m + n + 2).hypot(two), s::<T>(m + 1).hypot(s(n + 3))),
        MnVariant::C => (s::<T>(m + n + 2).hypot(two), s::<T>(m + 2).hypot(s(n + 2))),
    };
    Ok(InequalityOutcome::classify(lhs, rhs))
}

pub fn check_ineq_mn<T: Scalar>(variant: MnVariant, m: usize, n: usize) -> Result<bool> {
    compare_ineq_mn::<T>(variant, m, n).map(InequalityOutcome::holds)
}
