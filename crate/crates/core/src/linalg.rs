//! Dense Gaussian elimination over GF(q).

use crate::field::{FieldElement, FieldSpec};

/// Reduced row echelon form produced by [`row_reduce`].
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Nonzero rows; row `i` has a one in column `pivots[i]` and zeros in every other pivot column.
    pub rows: Vec<Vec<FieldElement>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss–Jordan elimination visiting columns in `column_order`.
///
/// For each visited column the first not-yet-used row with a nonzero entry
/// becomes its pivot row. Columns absent from `column_order` are never pivots.
pub fn row_reduce(
    field: &FieldSpec,
    mut rows: Vec<Vec<FieldElement>>,
    column_order: impl IntoIterator<Item = usize>,
) -> Echelon {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in column_order {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = field.inv(rows[rank][col]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = field.mul(inv, *x);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = field.neg(row[col]);
                field.axpy(row, factor, &pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Echelon { rows, pivots }
}

pub fn rank(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    row_reduce(field, rows.to_vec(), 0..ncols).rank()
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn inverse(field: &FieldSpec, a: &[Vec<FieldElement>]) -> Option<Vec<Vec<FieldElement>>> {
    let k = a.len();
    let augmented: Vec<Vec<FieldElement>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }));
            r
        })
        .collect();
    let ech = row_reduce(field, augmented, 0..k);
    if ech.rank() < k {
        return None;
    }
    // pivots are visited in column order, so row i pivots on column i
    Some(ech.rows.into_iter().map(|r| r[k..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn vec_mat(field: &FieldSpec, v: &[FieldElement], m: &[Vec<FieldElement>]) -> Vec<FieldElement> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut out = vec![FieldElement::ZERO; ncols];
    for (&vi, row) in v.iter().zip(m) {
        field.axpy(&mut out, vi, row);
    }
    out
}
