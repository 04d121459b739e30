//! Observation matrices and componentwise ranks.

use crate::error::{Error, Result};

/// An n x d matrix of real observations (rows are observations).
///
/// Entries must be finite; `d >= 2` and `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>, // row-major
    n: usize,
    d: usize,
}

impl Sample {
    /// Builds a sample from row-major flat storage.
    pub fn from_flat(values: Vec<f64>, n: usize, d: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidData("sample needs at least one row".into()));
        }
        if d < 2 {
            return Err(Error::InvalidData(format!(
                "sample dimension must be at least 2, got {d}"
            )));
        }
        if values.len() != n * d {
            return Err(Error::InvalidData(format!(
                "expected {} values for a {n}x{d} sample, got {}",
                n * d,
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidData(format!(
                "non-finite entry at row {}, column {}",
                pos / d + 1,
                pos % d + 1
            )));
        }
        Ok(Self { values, n, d })
    }

    /// Builds a sample from rows, validating a rectangular shape.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidData("sample needs at least one row".into()));
        }
        let d = rows[0].len();
        let mut values = Vec::with_capacity(rows.len() * d);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(Error::InvalidData(format!(
                    "row {} has {} entries, expected {d}",
                    i + 1,
                    row.len()
                )));
            }
            values.extend_from_slice(row);
        }
        Self::from_flat(values, rows.len(), d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.d..(i + 1) * self.d]
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.d + j]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.value(i, j))
    }

    /// The rows selected by `indices`, in the given order.
    pub fn subsample(&self, indices: &[usize]) -> Sample {
        let mut values = Vec::with_capacity(indices.len() * self.d);
        for &i in indices {
            values.extend_from_slice(self.row(i));
        }
        Sample {
            values,
            n: indices.len(),
            d: self.d,
        }
    }
}

/// Componentwise ranks of a sample, the sufficient statistic for all
/// rank-based estimators.
///
/// Ranks follow the maximal-rank convention: the rank of an observation is
/// `n` times the marginal ECDF evaluated at it, so tied values share the
/// largest position of their group. Tie-free columns are permutations of
/// `1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankMatrix {
    ranks: Vec<u32>, // row-major
    n: usize,
    d: usize,
    has_ties: Vec<bool>,
}

impl RankMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.ranks[i * self.d + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.ranks[i * self.d..(i + 1) * self.d]
    }

    /// Whether column `j` contains tied observations.
    pub fn has_ties(&self, j: usize) -> bool {
        self.has_ties[j]
    }

    pub fn any_ties(&self) -> bool {
        self.has_ties.iter().any(|&t| t)
    }

    /// Errs with the first tied column if the matrix is not tie-free.
    pub fn require_tie_free(&self) -> Result<()> {
        match self.has_ties.iter().position(|&t| t) {
            Some(j) => Err(Error::TiesPresent { column: j + 1 }),
            None => Ok(()),
        }
    }

    /// Normalized rank `R_ij / n`, the pseudo-observation in (0, 1].
    pub fn pseudo_observation(&self, i: usize, j: usize) -> f64 {
        f64::from(self.rank(i, j)) / self.n as f64
    }
}

/// Computes the rank matrix of a sample.
///
/// `ranks[i][j] = n * F_nj(X_ij)` where `F_nj` is the j-th marginal ECDF, so
/// ties receive the maximal rank of their group.
pub fn compute_ranks(sample: &Sample) -> RankMatrix {
    let (n, d) = (sample.n(), sample.d());
    let mut ranks = vec![0u32; n * d];
    let mut has_ties = vec![false; d];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for j in 0..d {
        order.clear();
        order.extend(0..n);
        order.sort_by(|&a, &b| {
            sample
                .value(a, j)
                .partial_cmp(&sample.value(b, j))
                .expect("sample entries are finite")
        });
        // Walk groups of equal values; every member gets the group's last
        // (1-based) position.
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && sample.value(order[end], j) == sample.value(order[start], j) {
                end += 1;
            }
            if end - start > 1 {
                has_ties[j] = true;
            }
            for &i in &order[start..end] {
                ranks[i * d + j] = end as u32;
            }
            start = end;
        }
    }
    RankMatrix {
        ranks,
        n,
        d,
        has_ties,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_col(first: &[f64]) -> Sample {
        let rows: Vec<Vec<f64>> = first
            .iter()
            .enumerate()
            .map(|(i, &x)| vec![x, i as f64])
            .collect();
        Sample::from_rows(&rows).unwrap()
    }

    #[test]
    fn strict_order_column() {
        let ranks = compute_ranks(&two_col(&[3.1, 0.2, 7.7]));
        assert_eq!(
            (ranks.rank(0, 0), ranks.rank(1, 0), ranks.rank(2, 0)),
            (2, 1, 3)
        );
        assert!(!ranks.has_ties(0));
    }

    #[test]
    fn ties_get_maximal_rank() {
        let ranks = compute_ranks(&two_col(&[5.0, 5.0, 1.0]));
        assert_eq!(
            (ranks.rank(0, 0), ranks.rank(1, 0), ranks.rank(2, 0)),
            (3, 3, 1)
        );
        assert!(ranks.has_ties(0));
        assert!(ranks.require_tie_free().is_err());
    }

    #[test]
    fn ranks_invariant_under_increasing_transform() {
        let raw = [0.3, -1.2, 4.4, 0.9, 2.2];
        let transformed: Vec<f64> = raw.iter().map(|x| (3.0 * x).exp()).collect();
        let r1 = compute_ranks(&two_col(&raw));
        let r2 = compute_ranks(&two_col(&transformed));
        assert_eq!(r1, r2);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(Sample::from_rows(&[vec![1.0, f64::NAN]]).is_err());
        assert!(Sample::from_rows(&[vec![1.0, f64::INFINITY]]).is_err());
    }

    #[test]
    fn rejects_low_dimension() {
        assert!(Sample::from_rows(&[vec![1.0]]).is_err());
    }
}
