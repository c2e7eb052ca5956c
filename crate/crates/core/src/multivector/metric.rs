use num_rational::BigRational;
use num_traits::{One, Zero};

use super::MAX_DIM;
use crate::error::{Error, Result};

/// Symmetric bilinear form `η_ij` on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    dim: usize,
    entries: Vec<BigRational>,
}

impl Metric {
    pub fn new(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let dim = rows.len();
        if dim > MAX_DIM {
            return Err(Error::TooManyGenerators(dim));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidMetric("matrix is not square".into()));
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidMetric(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(diag: Vec<BigRational>) -> Result<Self> {
        let n = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = vec![BigRational::zero(); n];
                row[i] = d;
                row
            })
            .collect();
        Self::new(rows)
    }

    pub fn euclidean(dim: usize) -> Result<Self> {
        Self::diagonal(vec![BigRational::one(); dim])
    }

    /// All-zero form: the Clifford product reduces to the wedge product.
    pub fn zero(dim: usize) -> Result<Self> {
        Self::diagonal(vec![BigRational::zero(); dim])
    }

    /// `diag(1, 1)` on the phase-space generators `η`, `ρ`.
    pub fn euclidean_plane() -> Self {
        Self::euclidean(2).expect("2 <= MAX_DIM")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }
}
