//! Labeled point sets: the unit of training, validation, and testing.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A set of `d`-dimensional points with binary labels in `{-1, +1}`.
///
/// Construction validates that the set is non-empty, that every point has
/// the same dimension, and that every label is exactly `-1.0` or `+1.0`.
/// Class balance is *not* enforced here; training entry points check that
/// both classes are present.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    points: Vec<Vec<f64>>,
    labels: Vec<f64>,
}

impl Dataset {
    pub fn new(points: Vec<Vec<f64>>, labels: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDataset);
        }
        if points.len() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "{} points but {} labels",
                points.len(),
                labels.len()
            )));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidArgument("zero-dimensional points".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        for &y in &labels {
            if y != 1.0 && y != -1.0 {
                return Err(Error::InvalidLabel(y));
            }
        }
        Ok(Self { points, labels })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn label(&self, i: usize) -> f64 {
        self.labels[i]
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> &[f64] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], f64)> {
        self.points
            .iter()
            .map(Vec::as_slice)
            .zip(self.labels.iter().copied())
    }

    /// Number of points carrying the given label.
    pub fn class_count(&self, label: f64) -> usize {
        self.labels.iter().filter(|&&y| y == label).count()
    }

    /// Indices of points carrying the given label.
    pub fn class_indices(&self, label: f64) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.labels[i] == label).collect()
    }

    /// Errors unless both classes are present.
    pub fn require_both_classes(&self) -> Result<()> {
        for label in [-1.0, 1.0] {
            if self.class_count(label) == 0 {
                return Err(Error::MissingClass(label));
            }
        }
        Ok(())
    }

    /// Returns a copy with one extra labeled point appended.
    pub fn with_point(&self, point: &[f64], label: f64) -> Result<Self> {
        if point.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: point.len(),
            });
        }
        if label != 1.0 && label != -1.0 {
            return Err(Error::InvalidLabel(label));
        }
        let mut points = self.points.clone();
        let mut labels = self.labels.clone();
        points.push(point.to_vec());
        labels.push(label);
        Ok(Self { points, labels })
    }

    /// Returns a copy with the point at `index` removed.
    pub fn without_point(&self, index: usize) -> Result<Self> {
        if index >= self.len() {
            return Err(Error::IndexOutOfBounds {
                index,
                len: self.len(),
            });
        }
        if self.len() == 1 {
            return Err(Error::EmptyDataset);
        }
        let mut points = self.points.clone();
        let mut labels = self.labels.clone();
        points.remove(index);
        labels.remove(index);
        Ok(Self { points, labels })
    }

    pub(crate) fn push(&mut self, point: Vec<f64>, label: f64) {
        debug_assert_eq!(point.len(), self.dim());
        self.points.push(point);
        self.labels.push(label);
    }

    pub(crate) fn remove(&mut self, index: usize) {
        self.points.remove(index);
        self.labels.remove(index);
    }

    /// Mean Euclidean distance over all unordered point pairs.
    ///
    /// Used to pick scale-relative attack step sizes. Returns 0 for a
    /// single-point set.
    pub fn mean_pairwise_distance(&self) -> f64 {
        let n = self.len();
        if n < 2 {
            return 0.0;
        }
        let mut total = 0.0;
        let mut pairs = 0u64;
        for i in 0..n {
            for j in (i + 1)..n {
                let d2: f64 = self.points[i]
                    .iter()
                    .zip(&self.points[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                total += libm::sqrt(d2);
                pairs += 1;
            }
        }
        total / pairs as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_empty() {
        assert_eq!(Dataset::new(vec![], vec![]), Err(Error::EmptyDataset));
    }

    #[test]
    fn rejects_bad_label() {
        let err = Dataset::new(vec![vec![1.0]], vec![0.0]).unwrap_err();
        assert_eq!(err, Error::InvalidLabel(0.0));
    }

    #[test]
    fn rejects_ragged_points() {
        let err = Dataset::new(vec![vec![1.0], vec![1.0, 2.0]], vec![1.0, -1.0]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn class_accounting() {
        let d = Dataset::new(
            vec![vec![0.0], vec![1.0], vec![2.0]],
            vec![-1.0, 1.0, 1.0],
        )
        .unwrap();
        assert_eq!(d.class_count(-1.0), 1);
        assert_eq!(d.class_indices(1.0), vec![1, 2]);
        d.require_both_classes().unwrap();

        let one_class = Dataset::new(vec![vec![0.0]], vec![1.0]).unwrap();
        assert_eq!(
            one_class.require_both_classes(),
            Err(Error::MissingClass(-1.0))
        );
    }

    #[test]
    fn mean_pairwise_distance_triangle() {
        // 3-4-5 triangle: distances 3, 4, 5.
        let d = Dataset::new(
            vec![vec![0.0, 0.0], vec![3.0, 0.0], vec![3.0, 4.0]],
            vec![1.0, -1.0, 1.0],
        )
        .unwrap();
        assert!((d.mean_pairwise_distance() - 4.0).abs() < 1e-12);
    }
}
