//! Appending columns to a generator matrix so that the minimum distance grows
//! by one.
//!
//! Let `J` be the information vectors of the minimum-weight codewords of an
//! `[n,k,d]_q` code with generator G, normalized and sorted. The code
//! generated by (G | X) has minimum distance d+1 exactly when
//!
//! ```text
//! v·X ≠ 0   for every v ∈ J
//! ```
//!
//! Every codeword of weight > d already has weight ≥ d+1, so only the words in
//! `J` need an extra nonzero position. The condition is unchanged when a
//! column of X is scaled by a nonzero constant or when columns are permuted,
//! so solutions are reported in a canonical form: every nonzero column
//! normalized, columns sorted ascending.

mod double;
mod exhaustive;
mod groebner;
mod linear;

use std::collections::BTreeSet;
use std::fmt;

pub use double::{double_extension_search, DoubleExtensionReport, ExtensionChain};
pub use exhaustive::{canonical_candidate_count, exhaustive_extensions, ExhaustiveOutcome};
pub use groebner::{groebner_extensions, GroebnerOutcome, GroebnerTimings};
pub use linear::binary_linear_extensions;

use crate::code::{GeneratorMatrix, InformationSetCollection};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg;
use crate::minwt::{minimum_weight_words, MinWeightReport};
use crate::polysolve::{GroebnerBudget, MonomialOrder};

/// A code together with everything needed to search for extensions.
#[derive(Clone, Debug)]
pub struct ExtensionProblem {
    pub generator: GeneratorMatrix,
    /// Number of columns to append.
    pub m: usize,
    /// Normalized information vectors of the minimum-weight codewords,
    /// sorted ascending.
    pub jd: Vec<Vec<FieldElement>>,
    pub d: usize,
    pub min_weight: MinWeightReport,
}

impl ExtensionProblem {
    /// Computes the minimum-weight codewords of `generator` and their
    /// information vectors.
    pub fn new(generator: GeneratorMatrix, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoColumns);
        }
        let coll = InformationSetCollection::build(&generator);
        let min_weight = minimum_weight_words(&generator, &coll);
        let jd = information_vectors(&generator, min_weight.reps.iter())?;
        Ok(ExtensionProblem { d: min_weight.d, generator, m, jd, min_weight })
    }

    pub fn field(&self) -> &FieldSpec {
        self.generator.field()
    }

    pub fn k(&self) -> usize {
        self.generator.k()
    }
}

/// The normalized vectors v with vG = c for each codeword c, sorted and
/// without duplicates.
pub fn information_vectors<'a>(
    g: &GeneratorMatrix,
    reps: impl IntoIterator<Item = &'a Vec<FieldElement>>,
) -> Result<Vec<Vec<FieldElement>>> {
    let field = g.field();
    let info_set = g.systematic_on(&[]).info_set;
    let restricted: Vec<Vec<FieldElement>> =
        g.rows().iter().map(|row| info_set.iter().map(|&c| row[c]).collect()).collect();
    let inv = linalg::inverse(field, &restricted).expect("restriction to an information set is invertible");

    let mut out = BTreeSet::new();
    for c in reps {
        if c.len() != g.n() {
            return Err(Error::DimensionMismatch { expected: g.n(), found: c.len() });
        }
        let c_i: Vec<FieldElement> = info_set.iter().map(|&j| c[j]).collect();
        let v = linalg::vec_mat(field, &c_i, &inv);
        if g.encode(&v)?.coords != *c {
            return Err(Error::NotACodeword);
        }
        out.insert(field.normalize_vector(&v).map_err(|_| Error::NotACodeword)?);
    }
    Ok(out.into_iter().collect())
}

/// A k×m matrix stored by columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtensionMatrix {
    k: usize,
    columns: Vec<Vec<FieldElement>>,
}

impl ExtensionMatrix {
    pub fn from_columns(k: usize, columns: Vec<Vec<FieldElement>>) -> Result<Self> {
        if columns.is_empty() {
            return Err(Error::NoColumns);
        }
        if let Some(bad) = columns.iter().find(|c| c.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, found: bad.len() });
        }
        Ok(ExtensionMatrix { k, columns })
    }

    /// Builds the matrix from its k rows of m entries.
    pub fn from_rows(rows: &[Vec<FieldElement>]) -> Result<Self> {
        let k = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch { expected: m, found: bad.len() });
        }
        let columns = (0..m).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        ExtensionMatrix::from_columns(k, columns)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<FieldElement>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.k).map(|i| self.columns.iter().map(|c| c[i]).collect()).collect()
    }

    /// Normalizes every nonzero column and sorts the columns.
    pub fn canonical(&self, field: &FieldSpec) -> ExtensionMatrix {
        let mut columns = self.columns.clone();
        for c in columns.iter_mut() {
            field.normalize_in_place(c);
        }
        columns.sort();
        ExtensionMatrix { k: self.k, columns }
    }

    pub fn is_canonical(&self, field: &FieldSpec) -> bool {
        self.columns.iter().all(|c| c.iter().all(|x| x.is_zero()) || field.is_normalized(c))
            && self.columns.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Debug for ExtensionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "[{}]", cols.join(" | "))
    }
}

/// True when `v·X` is nonzero for every `v` in `jd`.
pub fn check_extension(field: &FieldSpec, jd: &[Vec<FieldElement>], x: &ExtensionMatrix) -> bool {
    jd.iter().all(|v| x.columns.iter().any(|c| !field.dot(v, c).is_zero()))
}

/// Canonical solutions of an extension search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSolutionSet {
    pub m: usize,
    pub solutions: BTreeSet<ExtensionMatrix>,
    /// True when `solutions` is the complete set rather than a sample.
    pub exhausted: bool,
}

impl ExtensionSolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    /// Keeps only the smallest solution when `mode` asks for one.
    fn limit(mut self, mode: SearchMode) -> Self {
        if mode == SearchMode::First && self.solutions.len() > 1 {
            let first = self.solutions.pop_first().unwrap();
            self.solutions = BTreeSet::from([first]);
            self.exhausted = false;
        }
        self
    }
}

/// Whether a search stops at the first canonical solution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchMode {
    /// The smallest canonical solution only.
    #[default]
    First,
    /// Every canonical solution.
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Method {
    /// Linear algebra for one binary column, Gröbner bases otherwise with a
    /// fall back to exhaustive search when the budget runs out.
    #[default]
    Auto,
    Exhaustive,
    Linear,
    Groebner,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Exhaustive => "exhaustive",
            Method::Linear => "linear",
            Method::Groebner => "groebner",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct ExtendOptions {
    pub mode: SearchMode,
    pub budget: GroebnerBudget,
    pub order: MonomialOrder,
    /// Number of information vectors used to build the ideal; `None` means
    /// the first min(|J|, 4k).
    pub subset_limit: Option<usize>,
    /// Exhaustive searches testing more candidates than this fail with
    /// [`Error::ResourceLimit`].
    pub max_candidates: u128,
}

impl Default for ExtendOptions {
    fn default() -> Self {
        ExtendOptions {
            mode: SearchMode::First,
            budget: GroebnerBudget::default(),
            order: MonomialOrder::DegRevLex,
            subset_limit: None,
            max_candidates: 1 << 34,
        }
    }
}

/// Result of [`solve`].
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    /// The method that produced the solutions.
    pub method: Method,
    /// True when a Gröbner attempt ran out of budget and exhaustive search
    /// took over.
    pub fell_back: bool,
    pub solutions: ExtensionSolutionSet,
    /// Candidates tested by exhaustive search.
    pub candidates_tested: Option<u128>,
    pub groebner: Option<GroebnerOutcome>,
}

/// Runs `method` on `problem`.
pub fn solve(problem: &ExtensionProblem, method: Method, opts: &ExtendOptions) -> Result<SolveOutcome> {
    let field = problem.field();
    let (k, m) = (problem.k(), problem.m);
    let outcome = |method, solutions| SolveOutcome {
        method,
        fell_back: false,
        solutions,
        candidates_tested: None,
        groebner: None,
    };
    let exhaustive = |fell_back| -> Result<SolveOutcome> {
        let ex = exhaustive_extensions(field, &problem.jd, k, m, opts.mode, opts.max_candidates)?;
        Ok(SolveOutcome {
            method: Method::Exhaustive,
            fell_back,
            candidates_tested: Some(ex.candidates_tested),
            solutions: ex.solutions,
            groebner: None,
        })
    };
    match method {
        Method::Exhaustive => exhaustive(false),
        Method::Linear => {
            if m != 1 {
                return Err(Error::DimensionMismatch { expected: 1, found: m });
            }
            let sols = binary_linear_extensions(field, &problem.jd, k)?;
            Ok(outcome(Method::Linear, sols.limit(opts.mode)))
        }
        Method::Groebner => {
            let gb = groebner_extensions(field, &problem.jd, k, m, opts)?;
            let solutions = gb.solutions.clone().limit(opts.mode);
            Ok(SolveOutcome { groebner: Some(gb), ..outcome(Method::Groebner, solutions) })
        }
        Method::Auto => {
            if field.order() == 2 && m == 1 {
                return solve(problem, Method::Linear, opts);
            }
            match solve(problem, Method::Groebner, opts) {
                Err(Error::ResourceLimit(_)) => exhaustive(true),
                other => other,
            }
        }
    }
}

/// Verdict of [`hill_lizak_precheck`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precheck {
    /// gcd(d, q) = 1 and every weight is ≡ 0 or d (mod q): the code extends.
    Extendable,
    /// The sufficient condition does not hold; no conclusion.
    Inapplicable,
}

/// Sufficient condition for a single-column extension from the set of
/// nonzero weights of the code.
pub fn hill_lizak_precheck(weights: &BTreeSet<usize>, q: u32, d: usize) -> Precheck {
    let q = q as usize;
    let coprime = gcd(d, q) == 1;
    if coprime && weights.iter().all(|&w| w % q == 0 || w % q == d % q) {
        Precheck::Extendable
    } else {
        Precheck::Inapplicable
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Minimum distances before and after appending X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub k: usize,
    pub d_original: usize,
    pub d_extended: usize,
}

impl VerifyReport {
    /// The extended code has minimum distance at least d+1.
    pub fn passes(&self) -> bool {
        self.d_extended > self.d_original
    }

    /// The extended code has minimum distance exactly d+1.
    pub fn exact(&self) -> bool {
        self.d_extended == self.d_original + 1
    }
}

/// Recomputes the minimum distance of (G | X) from scratch.
pub fn verify_extension(g: &GeneratorMatrix, x: &ExtensionMatrix) -> Result<VerifyReport> {
    if x.k() != g.k() {
        return Err(Error::DimensionMismatch { expected: g.k(), found: x.k() });
    }
    let d_original = minimum_weight_words(g, &InformationSetCollection::build(g)).d;
    let extended = g.append_columns(x.columns())?;
    let d_extended = minimum_weight_words(&extended, &InformationSetCollection::build(&extended)).d;
    Ok(VerifyReport { n: extended.n(), k: g.k(), d_original, d_extended })
}
