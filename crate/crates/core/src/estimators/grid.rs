//! Evaluation grids on the unit hypercube.

use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite set of evaluation points in `[0,1]^d` with nonnegative weights.
///
/// Weights sum to the integration measure the grid represents (1 for the
/// mean approximation of Cramér-von Mises integrals).
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>, // row-major, one d-vector per point
    weights: Vec<f64>,
    d: usize,
}

impl Grid {
    pub fn new(points: Vec<Vec<f64>>, weights: Option<Vec<f64>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let d = points[0].len();
        let len = points.len();
        let mut flat = Vec::with_capacity(len * d);
        for p in &points {
            if p.len() != d {
                return Err(Error::InvalidData("ragged grid point list".into()));
            }
            if p.iter().any(|&u| !(0.0..=1.0).contains(&u)) {
                return Err(Error::InvalidData(format!(
                    "grid point {p:?} outside [0,1]^d"
                )));
            }
            flat.extend_from_slice(p);
        }
        let weights = match weights {
            Some(w) => {
                if w.len() != len {
                    return Err(Error::InvalidData(
                        "weights length differs from point count".into(),
                    ));
                }
                if w.iter().any(|&x| !x.is_finite() || x < 0.0) {
                    return Err(Error::InvalidData("weights must be nonnegative".into()));
                }
                w
            }
            None => vec![1.0 / len as f64; len],
        };
        Ok(Self {
            points: flat,
            weights,
            d,
        })
    }

    /// The product grid `{i/(k+1) : i = 1..=k}^d` with uniform weights.
    ///
    /// Points are ordered lexicographically with the last coordinate varying
    /// fastest.
    pub fn uniform_product(d: usize, k: usize) -> Result<Arc<Self>> {
        if d == 0 || k == 0 {
            return Err(Error::EmptyGrid);
        }
        let len = k.pow(d as u32);
        let mut points = Vec::with_capacity(len * d);
        let mut coord = vec![0usize; d];
        for mut c in 0..len {
            for pos in (0..d).rev() {
                coord[pos] = c % k;
                c /= k;
            }
            points.extend(coord.iter().map(|&i| (i + 1) as f64 / (k + 1) as f64));
        }
        Ok(Arc::new(Self {
            points,
            weights: vec![1.0 / len as f64; len],
            d,
        }))
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn point(&self, k: usize) -> &[f64] {
        &self.points[k * self.d..(k + 1) * self.d]
    }

    pub fn weight(&self, k: usize) -> f64 {
        self.weights[k]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter_points(&self) -> impl Iterator<Item = &[f64]> {
        self.points.chunks_exact(self.d)
    }

    /// Index of a grid point equal to `p` within `1e-12` per coordinate.
    pub fn find_point(&self, p: &[f64]) -> Option<usize> {
        if p.len() != self.d {
            return None;
        }
        self.iter_points()
            .position(|q| q.iter().zip(p).all(|(a, b)| (a - b).abs() <= 1e-12))
    }
}

/// Values of a scalar field evaluated on a shared grid.
#[derive(Debug, Clone)]
pub struct GridEvaluation {
    grid: Arc<Grid>,
    values: Vec<f64>,
}

impl GridEvaluation {
    pub fn new(grid: Arc<Grid>, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::GridMismatch(format!(
                "{} values for a grid of {} points",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidData("NaN in grid evaluation".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Checks that `other` was evaluated on the same grid.
    pub fn same_grid(&self, other: &Grid) -> bool {
        std::ptr::eq(self.grid.as_ref(), other) || self.grid.as_ref() == other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_product_enumerates_lattice() {
        let g = Grid::uniform_product(2, 3).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.point(0), &[0.25, 0.25]);
        assert_eq!(g.point(8), &[0.75, 0.75]);
        let total: f64 = g.weights().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn find_point_matches_exactly() {
        let g = Grid::uniform_product(2, 9).unwrap();
        assert_eq!(g.find_point(&[0.1, 0.2]), Some(1));
        assert_eq!(g.find_point(&[0.15, 0.2]), None);
    }

    #[test]
    fn rejects_points_outside_cube() {
        assert!(Grid::new(vec![vec![0.2, 1.4]], None).is_err());
    }
}
