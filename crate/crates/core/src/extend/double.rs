use super::{solve, ExtendOptions, ExtensionMatrix, ExtensionProblem, Method, SearchMode};
use crate::code::GeneratorMatrix;
use crate::error::Result;

/// Two successive single-column extensions `[n,k,d] → [n+1,k,d+1] → [n+2,k,d+2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionChain {
    pub first: ExtensionMatrix,
    pub second: ExtensionMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleExtensionReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Every canonical single-column extension of the code.
    pub singles: Vec<ExtensionMatrix>,
    pub chains: Vec<ExtensionChain>,
}

/// Searches the single extensions of every single extension of `g`.
pub fn double_extension_search(g: &GeneratorMatrix, method: Method, opts: &ExtendOptions) -> Result<DoubleExtensionReport> {
    let opts = ExtendOptions { mode: SearchMode::All, ..opts.clone() };
    let first = ExtensionProblem::new(g.clone(), 1)?;
    let singles: Vec<ExtensionMatrix> = solve(&first, method, &opts)?.solutions.solutions.into_iter().collect();

    let mut chains = Vec::new();
    for x in &singles {
        let extended = g.append_columns(x.columns())?;
        let second = ExtensionProblem::new(extended, 1)?;
        for y in solve(&second, method, &opts)?.solutions.solutions {
            chains.push(ExtensionChain { first: x.clone(), second: y });
        }
    }
    Ok(DoubleExtensionReport { n: g.n(), k: g.k(), d: first.d, singles, chains })
}
