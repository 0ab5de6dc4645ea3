//! Small named codes used in tests, benchmarks and documentation.

use crate::code::GeneratorMatrix;
use crate::field::FieldSpec;

fn build(q: u32, rows: &[&[u32]]) -> GeneratorMatrix {
    let field = FieldSpec::new(q).expect("catalog fields are supported");
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    GeneratorMatrix::from_symbols(field, &rows).expect("catalog matrices are full rank")
}

/// Binary Hamming [7,4,3] code in systematic form [I | A].
pub fn hamming74() -> GeneratorMatrix {
    build(
        2,
        &[
            &[1, 0, 0, 0, 1, 1, 0],
            &[0, 1, 0, 0, 1, 0, 1],
            &[0, 0, 1, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 1],
        ],
    )
}

/// Ternary tetracode [4,2,3].
pub fn tetracode() -> GeneratorMatrix {
    build(3, &[&[1, 0, 1, 1], &[0, 1, 1, 2]])
}

/// Ternary [3,2,2] code with generator [[1,0,1],[0,1,1]].
pub fn ternary_322() -> GeneratorMatrix {
    build(3, &[&[1, 0, 1], &[0, 1, 1]])
}

/// Repetition code [n,1,n] over GF(q).
pub fn repetition(q: u32, n: usize) -> GeneratorMatrix {
    let row = vec![1u32; n];
    build(q, &[&row])
}
