//! Machine-readable run reports.
//!
//! Every subcommand produces one [`RunReport`]; sections that do not apply
//! to the command are `null`. Field names are part of the output contract.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub command: String,
    pub code: CodeParams,
    pub info: Option<InfoSection>,
    pub minwt: Option<MinwtSection>,
    pub extension: Option<ExtensionSection>,
    pub verification: Option<Verification>,
    pub timings: Timings,
}

/// `[n,k,d]_q`; `d` is absent for `info`, which does not compute it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeParams {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfoSection {
    /// Number of disjoint information sets.
    pub mu: usize,
    pub relative_ranks: Vec<usize>,
    /// Column indices (0-based) covered by each generator matrix.
    pub sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinwtSection {
    pub d: usize,
    /// Minimum-weight codewords up to scalar multiples.
    pub representatives: usize,
    /// |S_d|, every nonzero multiple counted.
    pub count_full: u64,
    pub encodings: u64,
    pub full_enumeration: bool,
    pub trace: Vec<TraceStep>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceStep {
    pub w: usize,
    pub d_lb: usize,
    pub d_ub: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionSection {
    pub columns: usize,
    pub method_requested: String,
    pub method_used: String,
    pub fell_back: bool,
    /// Information vectors of the minimum-weight codewords.
    pub information_vectors: usize,
    /// True when `solutions` lists every canonical extension.
    pub exhausted: bool,
    pub solution_count: usize,
    /// Canonical solutions as k rows of m symbols.
    pub solutions: Vec<Vec<Vec<u8>>>,
    pub candidates_tested: Option<u64>,
    pub groebner: Option<GroebnerSection>,
    /// One entry per solution, in the same order.
    pub verification: Vec<Verification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroebnerSection {
    pub subset_size: usize,
    pub unit_ideal: bool,
    pub basis_size: usize,
    pub variety_size: usize,
    pub pair_reductions: u64,
    pub product_criterion_skips: u64,
    pub chain_criterion_skips: u64,
    pub basis_size_before_reduction: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Verification {
    pub n: usize,
    pub k: usize,
    pub d_original: usize,
    pub d_extended: usize,
    /// d_extended ≥ d_original + 1.
    pub passes: bool,
}

/// Wall-clock milliseconds per phase; phases that did not run are 0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub minwt: f64,
    pub equations: f64,
    pub groebner: f64,
    pub solutions: f64,
    pub total: f64,
}

impl RunReport {
    /// The report with all timings zeroed, for comparing runs.
    pub fn without_timings(&self) -> RunReport {
        RunReport { timings: Timings::default(), ..self.clone() }
    }
}
