use crate::graph::Graph;

use super::SpectraError;

/// Dense real symmetric matrix, stored row-major in full.
///
/// Every constructor writes `(i, j)` and `(j, i)` from the same value, so the
/// stored matrix is exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, entries: vec![0.0; order * order] }
    }

    /// Builds a matrix from a function evaluated on the upper triangle
    /// (`i <= j`) and mirrored.
    pub fn from_upper_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from full rows; rejects non-square or asymmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, SpectraError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(SpectraError::NotSquare);
        }
        for i in 0..order {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(SpectraError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { order, entries: rows.concat() })
    }

    pub fn identity(order: usize) -> Self {
        Self::from_upper_fn(order, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Writes `value` at `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// `tr(B^2)`, which for symmetric `B` is the squared Frobenius norm.
    pub fn trace_of_square(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.trace_of_square().sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0.0)
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.order.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub(crate) fn entries(&self) -> &[f64] {
        &self.entries
    }
}

/// The generalized adjacency matrix `alpha * D + (1 - alpha) * A`.
pub fn build_alpha_matrix(g: &Graph, alpha: f64) -> Result<SymMatrix, SpectraError> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(SpectraError::AlphaOutOfRange(alpha));
    }
    let off = 1.0 - alpha;
    Ok(SymMatrix::from_upper_fn(g.order(), |i, j| {
        if i == j {
            alpha * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            off
        } else {
            0.0
        }
    }))
}

/// Plain adjacency matrix `A(G)`.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper_fn(g.order(), |i, j| if i != j && g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// Signless Laplacian `Q(G) = D(G) + A(G)`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper_fn(g.order(), |i, j| {
        if i == j {
            g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    })
}
