//! Extensions as the GF(q)-points of a polynomial ideal.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use super::{check_extension, ExtendOptions, ExtensionMatrix, ExtensionSolutionSet};
use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::polysolve::{build_extension_ideal, buchberger, extension_variable, variety, GroebnerStats};

/// Wall-clock time of the three phases.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerTimings {
    /// Building the generators.
    pub equations: Duration,
    /// Buchberger's algorithm.
    pub groebner: Duration,
    /// Enumerating the variety, filtering and canonicalizing.
    pub solutions: Duration,
}

/// Result of [`groebner_extensions`].
#[derive(Clone, Debug)]
pub struct GroebnerOutcome {
    pub solutions: ExtensionSolutionSet,
    /// Information vectors used for the ideal.
    pub subset_size: usize,
    /// The reduced basis is {1}.
    pub unit_ideal: bool,
    pub basis_size: usize,
    /// Points of the variety before filtering and canonicalization.
    pub variety_size: usize,
    pub stats: GroebnerStats,
    pub timings: GroebnerTimings,
}

/// Solves `v·X ≠ 0` through the reduced Gröbner basis of the extension ideal
/// of the first min(|J|, limit) information vectors (limit 4k unless set in
/// `opts`); the points are then checked against all of `jd`.
pub fn groebner_extensions(
    field: &FieldSpec,
    jd: &[Vec<FieldElement>],
    k: usize,
    m: usize,
    opts: &ExtendOptions,
) -> Result<GroebnerOutcome> {
    let limit = opts.subset_limit.unwrap_or(4 * k).max(1);
    let subset = &jd[..jd.len().min(limit)];

    let t = Instant::now();
    let ideal = build_extension_ideal(field, subset, k, m)?;
    let equations = t.elapsed();

    let t = Instant::now();
    let gb = buchberger(&ideal, opts.order, opts.budget)?;
    let groebner = t.elapsed();

    let t = Instant::now();
    let points = variety(&gb);
    let solutions: BTreeSet<ExtensionMatrix> = points
        .iter()
        .map(|p| {
            let columns = (0..m).map(|j| (0..k).map(|i| p[extension_variable(k, i, j)]).collect()).collect();
            ExtensionMatrix { k, columns }
        })
        .filter(|x| subset.len() == jd.len() || check_extension(field, jd, x))
        .map(|x| x.canonical(field))
        .collect();
    let solutions_time = t.elapsed();

    Ok(GroebnerOutcome {
        solutions: ExtensionSolutionSet { m, solutions, exhausted: true },
        subset_size: subset.len(),
        unit_ideal: gb.is_unit_ideal(),
        basis_size: gb.polys.len(),
        variety_size: points.len(),
        stats: gb.stats,
        timings: GroebnerTimings { equations, groebner, solutions: solutions_time },
    })
}
