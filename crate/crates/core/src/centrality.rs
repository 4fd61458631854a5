//! Centrality vectors and the tolerance used to compare them.

/// Whether each unordered pair `{s, t}` is counted once or as both `(s, t)`
/// and `(t, s)`. Scores are computed in the ordered convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairConvention {
    Ordered,
    Unordered,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    pub scores: Vec<f64>,
    pub convention: PairConvention,
}

impl CentralityVector {
    pub fn ordered(scores: Vec<f64>) -> Self {
        CentralityVector { scores, convention: PairConvention::Ordered }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Converts to the unordered-pair convention (halves every score).
    pub fn into_unordered(mut self) -> Self {
        if self.convention == PairConvention::Ordered {
            self.scores.iter_mut().for_each(|s| *s /= 2.0);
            self.convention = PairConvention::Unordered;
        }
        self
    }

    /// Largest componentwise relative difference, see [`relative_difference`].
    pub fn max_relative_difference(&self, other: &CentralityVector) -> f64 {
        assert_eq!(self.len(), other.len(), "vectors of different length");
        self.scores.iter().zip(&other.scores).map(|(&a, &b)| relative_difference(a, b)).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &CentralityVector, rtol: f64) -> bool {
        self.convention == other.convention && self.max_relative_difference(other) <= rtol
    }
}

/// Values whose absolute difference is at most this are treated as equal
/// regardless of magnitude, so rounding residue around zero does not
/// register as an unbounded relative error.
pub const ABSOLUTE_FLOOR: f64 = 1e-12;

/// `|a - b| / max(|a|, |b|)`, or 0 when `|a - b| <= ABSOLUTE_FLOOR`.
pub fn relative_difference(a: f64, b: f64) -> f64 {
    let diff = (a - b).abs();
    if diff <= ABSOLUTE_FLOOR {
        return 0.0;
    }
    diff / a.abs().max(b.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halving() {
        let c = CentralityVector::ordered(vec![0.0, 2.0, 1.0]).into_unordered();
        assert_eq!(c.scores, [0.0, 1.0, 0.5]);
        assert_eq!(c.convention, PairConvention::Unordered);
        assert_eq!(c.clone().into_unordered(), c);
    }

    #[test]
    fn relative_comparison() {
        assert_eq!(relative_difference(0.0, 1e-15), 0.0);
        assert!((relative_difference(1.0, 1.1) - 0.1 / 1.1).abs() < 1e-15);
        let a = CentralityVector::ordered(vec![1.0, 1e6]);
        let b = CentralityVector::ordered(vec![1.0, 1e6 + 1e-4]);
        assert!(a.approx_eq(&b, 1e-9));
        assert!(!a.approx_eq(&b.clone().into_unordered(), 1.0));
    }
}
