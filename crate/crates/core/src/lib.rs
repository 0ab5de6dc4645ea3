//! Minimum-weight codewords of linear codes over small finite fields and the
//! search for columns that raise the minimum distance when appended to the
//! generator matrix.
//!
//! A code `[n,k,d]_q` extends to `[n+m,k,d+1]_q` exactly when some k×m matrix
//! X makes `v·X ≠ 0` for the information vector v of every minimum-weight
//! codeword. The crate computes those codewords ([`minwt`]) and finds every
//! such X by exhaustive search, by solving a linear system (binary, one
//! column) or through a Gröbner basis of the polynomial ideal encoding the
//! condition ([`extend`], [`polysolve`]).

pub mod catalog;
pub mod code;
pub mod combinatorics;
pub mod error;
pub mod extend;
pub mod field;
pub mod linalg;
pub mod minwt;
pub mod polysolve;

#[cfg(test)]
mod testing;

pub use code::{Codeword, GeneratorMatrix, InformationSet, InformationSetCollection, Systematic};
pub use error::{Error, Result};
pub use extend::{
    check_extension, information_vectors, solve, ExtendOptions, ExtensionMatrix, ExtensionProblem,
    ExtensionSolutionSet, Method, SearchMode,
};
pub use field::{ArithOp, FieldElement, FieldSpec};
pub use minwt::{
    enumeration_cost, lower_bound, minimum_weight_words, minimum_weight_words_with, weight_spectrum,
    words_of_weight_at_most,
    BoundState, EnumerationCost, MinWeightReport, Strategy,
};
