use std::fmt::Write as _;
use std::time::{Duration, Instant};

use super::{enumerate_unicyclic, MAX_N};
use crate::graph::{canonical_form, write_edge_list, CanonicalForm};
use crate::sombor::{build_extremal, closed_form_so, format_sig, sombor_index, ExtremalParams};
use crate::{Error, Result, EQ_TOL};

/// Outcome of an exhaustive search over one class `𝒰(N, k)`.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub params: ExtremalParams,
    /// Non-isomorphic graphs in the class.
    pub class_size: usize,
    pub max_value: f64,
    /// Canonical forms within [`EQ_TOL`] of `max_value`, sorted.
    pub maximizers: Vec<CanonicalForm>,
    /// `maximizers` is exactly `{canonical_form(𝒢(N, k))}`.
    pub matches_extremal: bool,
    /// `SO(𝒢(N, k))` from the closed form.
    pub extremal_value: f64,
    /// `max_value` minus the best value outside the maximizer set; `None`
    /// when every graph in the class is a maximizer.
    pub runner_up_gap: Option<f64>,
    pub runtime: Duration,
}

impl SearchReport {
    /// Single maximizer, isomorphic to `𝒢(N, k)`.
    pub fn passes(&self) -> bool {
        self.matches_extremal && self.maximizers.len() == 1
    }

    /// `max_value` agrees with the closed form within [`EQ_TOL`].
    pub fn max_matches_closed_form(&self) -> bool {
        (self.max_value - self.extremal_value).abs() <= EQ_TOL
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.params.n(),
            self.params.k(),
            self.class_size,
            format_sig(self.max_value, 10),
            self.maximizers.len(),
            self.matches_extremal,
            self.runner_up_gap.map_or_else(String::new, |g| format_sig(g, 10)),
            self.runtime.as_millis()
        )
    }

    /// Structured text record. Runtime is left out so the text is
    /// reproducible; it is in the CSV.
    pub fn to_record(&self) -> String {
        let mut out = String::new();
        writeln!(out, "[class N={} k={}]", self.params.n(), self.params.k()).unwrap();
        writeln!(out, "class_size = {}", self.class_size).unwrap();
        writeln!(out, "max_value = {}", format_sig(self.max_value, 10)).unwrap();
        writeln!(out, "extremal_value = {}", format_sig(self.extremal_value, 10)).unwrap();
        writeln!(out, "maximizers = {}", self.maximizers.len()).unwrap();
        writeln!(out, "matches_extremal = {}", self.matches_extremal).unwrap();
        let gap = self.runner_up_gap.map_or_else(|| "none".into(), |g| format_sig(g, 10));
        writeln!(out, "runner_up_gap = {gap}").unwrap();
        for (i, cf) in self.maximizers.iter().enumerate() {
            writeln!(out, "maximizer {}:", i + 1).unwrap();
            out.push_str(&write_edge_list(&cf.to_graph()));
        }
        out
    }
}

pub const CSV_HEADER: &str =
    "N,k,classSize,maxValue,numMaximizers,matchesExtremal,runnerUpGap,runtimeMs";

pub fn max_so_search(p: ExtremalParams) -> Result<SearchReport> {
    if p.n() > MAX_N {
        return Err(Error::InvalidArgument(format!("N = {} exceeds {MAX_N}", p.n())));
    }
    let started = Instant::now();
    let class = enumerate_unicyclic(p.n(), Some(p.k()))?;
    let scored: Vec<(f64, CanonicalForm)> = class
        .iter()
        .map(|g| Ok((sombor_index::<f64>(g).0, canonical_form(g)?)))
        .collect::<Result<_>>()?;

    let max_value = scored.iter().map(|s| s.0).fold(f64::NEG_INFINITY, f64::max);
    let mut maximizers: Vec<CanonicalForm> =
        scored.iter().filter(|s| s.0 >= max_value - EQ_TOL).map(|s| s.1).collect();
    maximizers.sort();
    let runner_up = scored
        .iter()
        .filter(|s| s.0 < max_value - EQ_TOL)
        .map(|s| s.0)
        .fold(None, |best: Option<f64>, v| Some(best.map_or(v, |b| b.max(v))));

    let extremal = canonical_form(&build_extremal(p))?;
    Ok(SearchReport {
        params: p,
        class_size: class.len(),
        max_value,
        matches_extremal: maximizers == [extremal],
        maximizers,
        extremal_value: closed_form_so::<f64>(p).0,
        runner_up_gap: runner_up.map(|r| max_value - r),
        runtime: started.elapsed(),
    })
}

/// One report per valid `(N, k)` with `N <= n_max`.
pub fn verify_theorem(n_max: usize) -> Result<Vec<SearchReport>> {
    if !(4..=MAX_N).contains(&n_max) {
        return Err(Error::InvalidArgument(format!("n_max must be in 4..={MAX_N}, got {n_max}")));
    }
    ExtremalParams::all_up_to(n_max).map(max_so_search).collect()
}
