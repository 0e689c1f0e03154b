use std::collections::HashSet;

use super::poly::{Letter, NcPoly};
use super::tensor::TensorPoly;
use crate::error::{Error, Result};

/// The matrix `∂P`: entry `(j, i)` is `∂_i P_j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivMap {
    output_dim: usize,
    input_dim: usize,
    entries: Vec<TensorPoly>,
}

/// One disagreeing entry of a [`DerivMap`] comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub output: usize,
    pub input: usize,
    pub left: TensorPoly,
    pub right: TensorPoly,
}

impl EntryMismatch {
    /// Number of normal-form terms in which the two sides differ.
    pub fn discrepancy_terms(&self) -> usize {
        self.left.sub(&self.right).len()
    }
}

impl DerivMap {
    pub fn zeros(output_dim: usize, input_dim: usize) -> Self {
        DerivMap {
            output_dim,
            input_dim,
            entries: vec![TensorPoly::zero(); output_dim * input_dim],
        }
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn input_dim(&self) -> usize {
        self.input_dim
    }

    pub fn get(&self, output: usize, input: usize) -> &TensorPoly {
        &self.entries[output * self.input_dim + input]
    }

    pub fn get_mut(&mut self, output: usize, input: usize) -> &mut TensorPoly {
        &mut self.entries[output * self.input_dim + input]
    }

    pub fn nonzero_entries(&self) -> usize {
        self.entries.iter().filter(|t| !t.is_zero()).count()
    }

    /// All entries where `self` and `other` differ, in row-major order.
    pub fn mismatches(&self, other: &DerivMap) -> Result<Vec<EntryMismatch>> {
        if self.output_dim != other.output_dim || self.input_dim != other.input_dim {
            return Err(Error::DimensionMismatch {
                expected: self.output_dim * self.input_dim,
                found: other.output_dim * other.input_dim,
            });
        }
        let mut out = Vec::new();
        for j in 0..self.output_dim {
            for i in 0..self.input_dim {
                let (a, b) = (self.get(j, i), other.get(j, i));
                if a != b {
                    out.push(EntryMismatch {
                        output: j,
                        input: i,
                        left: a.clone(),
                        right: b.clone(),
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Builds `∂F` for the polynomial vector `f` against the ordered generator
/// list `gens`.
pub fn derivative_matrix(f: &[NcPoly], gens: &[Letter]) -> Result<DerivMap> {
    let mut seen = HashSet::with_capacity(gens.len());
    for g in gens {
        if !seen.insert(*g) {
            return Err(Error::DuplicateGenerator(g.to_string()));
        }
    }
    let mut map = DerivMap::zeros(f.len(), gens.len());
    for (j, p) in f.iter().enumerate() {
        for (i, g) in gens.iter().enumerate() {
            *map.get_mut(j, i) = p.free_derive(*g);
        }
    }
    Ok(map)
}
