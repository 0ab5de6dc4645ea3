//! Linear codes given by generator matrices, and the collections of
//! systematic generator matrices used for minimum-weight enumeration.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{weight, FieldElement, FieldSpec};
use crate::linalg;

/// A full-rank k×n generator matrix over GF(q).
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: FieldSpec,
    rows: Vec<Vec<FieldElement>>,
}

/// A codeword together with its Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword {
    pub coords: Vec<FieldElement>,
    pub weight: usize,
}

impl Codeword {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        let weight = weight(&coords);
        Codeword { coords, weight }
    }
}

/// Output of [`GeneratorMatrix::systematic_on`].
#[derive(Clone, Debug)]
pub struct Systematic {
    /// Row-equivalent matrix whose restriction to `info_set` is the identity.
    pub matrix: GeneratorMatrix,
    /// Pivot columns, ascending.
    pub info_set: Vec<usize>,
    /// Number of pivots found among the preferred columns.
    pub achieved_rank: usize,
}

impl GeneratorMatrix {
    /// Validates dimensions and full rank.
    pub fn new(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if k == 0 || n < k {
            return Err(Error::InvalidDimensions { n, k });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let q = field.order();
        if let Some(&x) = rows.iter().flatten().find(|x| x.index() as u32 >= q) {
            return Err(Error::SymbolOutOfRange { symbol: x.index() as u32, q });
        }
        let rank = linalg::rank(&field, &rows);
        if rank < k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(GeneratorMatrix { field, rows })
    }

    /// Convenience constructor from integer symbols.
    pub fn from_symbols(field: FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&s| field.element(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, rows)
    }

    /// A uniformly random full-rank k×n generator matrix.
    pub fn random<R: Rng + ?Sized>(field: FieldSpec, k: usize, n: usize, rng: &mut R) -> Result<Self> {
        if k == 0 || n < k {
            return Err(Error::InvalidDimensions { n, k });
        }
        let q = field.order() as u8;
        loop {
            let rows: Vec<Vec<FieldElement>> = (0..k)
                .map(|_| (0..n).map(|_| FieldElement::new(rng.gen_range(0..q))).collect())
                .collect();
            if linalg::rank(&field, &rows) == k {
                return Ok(GeneratorMatrix { field, rows });
            }
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// The codeword vG.
    pub fn encode(&self, v: &[FieldElement]) -> Result<Codeword> {
        if v.len() != self.k() {
            return Err(Error::DimensionMismatch { expected: self.k(), found: v.len() });
        }
        Ok(Codeword::new(linalg::vec_mat(&self.field, v, &self.rows)))
    }

    /// Gaussian elimination pivoting on `preferred` columns first, then on the
    /// remaining columns in ascending order.
    pub fn systematic_on(&self, preferred: &[usize]) -> Systematic {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &c in preferred {
            if c < n && !seen[c] {
                seen[c] = true;
                order.push(c);
            }
        }
        let preferred_len = order.len();
        order.extend((0..n).filter(|&c| !seen[c]));

        let ech = linalg::row_reduce(&self.field, self.rows.clone(), order.iter().copied());
        debug_assert_eq!(ech.rank(), self.k(), "generator matrices are full rank");
        let achieved_rank = ech
            .pivots
            .iter()
            .filter(|p| order[..preferred_len].contains(p))
            .count();

        let mut paired: Vec<(usize, Vec<FieldElement>)> = ech.pivots.into_iter().zip(ech.rows).collect();
        paired.sort_by_key(|(p, _)| *p);
        let (info_set, rows): (Vec<usize>, Vec<_>) = paired.into_iter().unzip();
        Systematic {
            matrix: GeneratorMatrix { field: self.field.clone(), rows },
            info_set,
            achieved_rank,
        }
    }

    /// The generator matrix (G | X) for `columns` given as k-vectors.
    pub fn append_columns(&self, columns: &[Vec<FieldElement>]) -> Result<GeneratorMatrix> {
        if let Some(bad) = columns.iter().find(|c| c.len() != self.k()) {
            return Err(Error::DimensionMismatch { expected: self.k(), found: bad.len() });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend(columns.iter().map(|c| c[i]));
                r
            })
            .collect();
        Ok(GeneratorMatrix { field: self.field.clone(), rows })
    }

    /// Number of nonzero codewords up to scalar multiples, (qᵏ − 1)/(q − 1).
    pub fn projective_size(&self) -> u128 {
        let q = self.field.order() as u128;
        (q.pow(self.k() as u32) - 1) / (q - 1)
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code over {:?}", self.n(), self.k(), self.field)?;
        for row in &self.rows {
            writeln!(f, "  {:?}", row)?;
        }
        Ok(())
    }
}

/// One systematic generator matrix of a collection.
#[derive(Clone, Debug)]
pub struct InformationSet {
    /// Identity positions, ascending.
    pub columns: Vec<usize>,
    pub matrix: GeneratorMatrix,
    /// Positions of `columns` not covered by earlier entries.
    pub relative_rank: usize,
}

/// Ordered list of information sets with their systematic matrices.
#[derive(Clone, Debug)]
pub struct InformationSetCollection {
    pub entries: Vec<InformationSet>,
}

impl InformationSetCollection {
    /// Greedy construction: the first set takes the leftmost pivots, every later
    /// set pivots on the least-covered columns first (lowest index breaking
    /// ties). Stops once every column is covered or a new set would add no
    /// uncovered position.
    pub fn build(g: &GeneratorMatrix) -> Self {
        let n = g.n();
        let k = g.k();
        let mut cover = vec![0usize; n];
        let mut entries: Vec<InformationSet> = Vec::new();

        loop {
            let mut preferred: Vec<usize> = (0..n).collect();
            preferred.sort_by_key(|&c| (cover[c], c));
            let sys = g.systematic_on(&preferred);
            let overlap = sys.info_set.iter().filter(|&&c| cover[c] > 0).count();
            let relative_rank = k - overlap;
            if !entries.is_empty() && relative_rank == 0 {
                break;
            }
            for &c in &sys.info_set {
                cover[c] += 1;
            }
            entries.push(InformationSet { columns: sys.info_set, matrix: sys.matrix, relative_rank });
            if cover.iter().all(|&c| c > 0) {
                break;
            }
        }
        InformationSetCollection { entries }
    }

    pub fn mu(&self) -> usize {
        self.entries.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.relative_rank).collect()
    }
}
