//! The Sombor index and the candidate extremal graph `𝒢(N, k)`.

mod lemmas;

use std::fmt;

pub use lemmas::{
    check_f_monotone, check_g_monotone, check_ineq_cd, check_ineq_mn, compare_ineq_cd,
    compare_ineq_mn, f_gap, g_gap, InequalityOutcome, MnVariant,
};

use crate::graph::Graph;
use crate::{Error, Result, Scalar};

/// A Sombor index value. Non-negative; zero only for edgeless graphs.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SomborValue<T>(pub T);

impl<T: Scalar> SomborValue<T> {
    pub fn value(self) -> T {
        self.0
    }

    pub fn approx_eq(self, other: Self) -> bool {
        (self.0 - other.0).abs() <= T::eq_tol()
    }
}

impl<T: Scalar> fmt::Display for SomborValue<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.0.to_f64().unwrap_or(f64::NAN);
        f.write_str(&format_sig(v, 10))
    }
}

/// `v` with `digits` significant digits, plain decimal notation.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    // rounding can carry into a new leading digit (9.99.. -> 10.0..)
    let carried = s.trim_start_matches('-').split('.').next().map_or(0, str::len) as i64;
    if carried > magnitude + 1 && decimals > 0 {
        let decimals = decimals - 1;
        return format!("{v:.decimals$}");
    }
    s
}

/// `√(du² + dv²)`, the contribution of one edge.
pub fn edge_contribution<T: Scalar>(du: usize, dv: usize) -> Result<T> {
    if du == 0 || dv == 0 {
        return Err(Error::ZeroDegree);
    }
    let (du, dv) = (T::from_usize_exact(du), T::from_usize_exact(dv));
    Ok((du * du + dv * dv).sqrt())
}

/// Summed with Neumaier compensation; large hubs make the terms span
/// several orders of magnitude.
pub fn sombor_index<T: Scalar>(g: &Graph) -> SomborValue<T> {
    let (mut sum, mut comp) = (T::zero(), T::zero());
    // consecutive edges often share a degree pair (long paths, hub fans)
    let mut last: Option<((usize, usize), T)> = None;
    let degrees = g.degrees();
    for &(u, v) in g.edges() {
        let pair = (degrees[u], degrees[v]);
        let x = match last {
            Some((p, x)) if p == pair => x,
            _ => {
                let x = edge_contribution::<T>(pair.0, pair.1).expect("edge endpoints have degree >= 1");
                last = Some((pair, x));
                x
            }
        };
        let t = sum + x;
        comp = comp + if sum.abs() >= x.abs() { (sum - t) + x } else { (x - t) + sum };
        sum = t;
    }
    SomborValue(sum + comp)
}

/// `(N, k)` with `k >= 1` and `N >= k + 3`, naming the class `𝒰(N, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtremalParams {
    n: usize,
    k: usize,
}

impl ExtremalParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 1 || n < k + 3 {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// Every valid `(N, k)` with `N <= n_max`, ordered by `N` then `k`.
    pub fn all_up_to(n_max: usize) -> impl Iterator<Item = Self> {
        (4..=n_max).flat_map(|n| (1..=n - 3).map(move |k| Self { n, k }))
    }
}

impl fmt::Display for ExtremalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(N={}, k={})", self.n, self.k)
    }
}

/// Label of the hub vertex in [`build_extremal`]'s output.
pub const EXTREMAL_HUB: usize = 2;

/// `𝒢(N, k)`: triangle `{0, 1, 2}` with hub 2 carrying `k - 1` pendant
/// edges (vertices `3..k+2`) and a path of `N - k - 2` edges (vertices
/// `k+2..N`, in order).
pub fn build_extremal(p: ExtremalParams) -> Graph {
    let (n, k) = (p.n, p.k);
    // listed in sorted order, which lets Graph::new skip its sort
    let edges = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .chain((3..=k + 2).map(|v| (EXTREMAL_HUB, v)))
        .chain((k + 3..n).map(|v| (v - 1, v)));
    Graph::new(n, edges).expect("valid parameters give a simple graph")
}

/// Value of `SO(𝒢(N, k))` in closed form.
pub fn closed_form_so<T: Scalar>(p: ExtremalParams) -> SomborValue<T> {
    let c = |x: usize| T::from_usize_exact(x);
    let hub = c(p.k + 2);
    let hub_pendant = (hub * hub + T::one()).sqrt();
    let hub_two = (hub * hub + c(4)).sqrt();
    let two_two = c(8).sqrt();
    let two_one = c(5).sqrt();
    let value = if p.n >= p.k + 4 {
        c(p.n - p.k - 3) * two_two + c(p.k - 1) * hub_pendant + c(3) * hub_two + two_one
    } else {
        c(p.k) * hub_pendant + c(2) * hub_two + two_two
    };
    SomborValue(value)
}
