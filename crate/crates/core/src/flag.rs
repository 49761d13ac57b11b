//! Flag-variety dimension arithmetic.
//!
//! The dimension of the variety of flags with successive quotient
//! dimensions `k_1, ..., k_n` is
//!
//! ```text
//! dim Flag(k_1, ..., k_n) = sum_{i=1}^{n-1} k_i (k_{i+1} + ... + k_n)
//! ```
//!
//! equivalently `(r^2 - sum k_i^2) / 2` with `r = sum k_i`. The key
//! inequality is superadditivity under componentwise partition: splitting
//! every part `k_i = s_i + t_i` can only lose dimension.

use crate::datum::ParabolicDatum;
use thiserror::Error;

/// Quotient dimensions of a flag, in order. All parts are positive; the
/// empty shape (the flag of the zero space) is allowed and has dimension 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagShape {
    parts: Vec<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlagError {
    #[error("flag shape part #{0} is zero (parts must be >= 1)")]
    ZeroPart(usize),
    #[error("partition length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
}

impl FlagShape {
    pub fn new(parts: Vec<u64>) -> Result<Self, FlagError> {
        if let Some(i) = parts.iter().position(|&k| k == 0) {
            return Err(FlagError::ZeroPart(i + 1));
        }
        Ok(FlagShape { parts })
    }

    /// Builds a shape from parts that may contain zeros by dropping them.
    /// A zero part is a zero-dimensional step and contributes nothing.
    pub fn from_parts_dropping_zeros(parts: &[u64]) -> Self {
        FlagShape {
            parts: parts.iter().copied().filter(|&k| k > 0).collect(),
        }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Dimension of the ambient space, `r = sum k_i`.
    pub fn rank(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// `sum_{i=1}^{n-1} k_i (k_{i+1} + ... + k_n)`; zero for a single part or
/// the empty shape.
pub fn flag_dimension(shape: &FlagShape) -> u64 {
    let parts = shape.parts();
    let mut suffix: u64 = parts.iter().sum();
    let mut dim = 0;
    for &k in parts {
        suffix -= k;
        dim += k * suffix;
    }
    dim
}

/// Same dimension through the identity `(r^2 - sum k_i^2) / 2`. Kept as an
/// independent route for cross-checking.
pub fn flag_dimension_by_identity(shape: &FlagShape) -> u64 {
    let r = shape.rank();
    let sq: u64 = shape.parts().iter().map(|&k| k * k).sum();
    (r * r - sq) / 2
}

/// Sum of flag dimensions over all points of the datum.
pub fn total_flag_dimension(datum: &ParabolicDatum) -> u64 {
    datum
        .points
        .iter()
        .map(|p| flag_dimension(&FlagShape::from_parts_dropping_zeros(&p.multiplicities)))
        .sum()
}

/// Checks `dim Flag(s) + dim Flag(t) <= dim Flag(s + t)` for a
/// componentwise partition `k_i = s_i + t_i`. Zero parts are dropped
/// before evaluating each side. Always true; exposed as a test oracle.
pub fn check_flag_superadditivity(s_parts: &[u64], t_parts: &[u64]) -> Result<bool, FlagError> {
    if s_parts.len() != t_parts.len() {
        return Err(FlagError::LengthMismatch(s_parts.len(), t_parts.len()));
    }
    let k_parts: Vec<u64> = s_parts.iter().zip(t_parts).map(|(s, t)| s + t).collect();
    let lhs = flag_dimension(&FlagShape::from_parts_dropping_zeros(s_parts))
        + flag_dimension(&FlagShape::from_parts_dropping_zeros(t_parts));
    let rhs = flag_dimension(&FlagShape::from_parts_dropping_zeros(&k_parts));
    Ok(lhs <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[u64]) -> FlagShape {
        FlagShape::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_part_has_dimension_zero() {
        assert_eq!(flag_dimension(&shape(&[5])), 0);
        assert_eq!(flag_dimension(&FlagShape::from_parts_dropping_zeros(&[])), 0);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(flag_dimension(&shape(&[1, 1, 1])), 3); // 1*2 + 1*1 = r(r-1)/2
        assert_eq!(flag_dimension(&shape(&[2, 4])), 8);
        assert_eq!(flag_dimension(&shape(&[2, 4])), flag_dimension(&shape(&[4, 2])));
        assert_eq!(flag_dimension(&shape(&[1, 1, 1, 1])), 6);
    }

    #[test]
    fn full_flag_dimension_is_r_choose_2() {
        for r in 1..=10u64 {
            let parts = vec![1; r as usize];
            assert_eq!(flag_dimension(&shape(&parts)), r * (r - 1) / 2);
        }
    }

    #[test]
    fn zero_part_is_rejected() {
        assert_eq!(FlagShape::new(vec![1, 0, 2]), Err(FlagError::ZeroPart(2)));
    }

    #[test]
    fn total_flag_dimension_sums_over_points() {
        use crate::datum::{ParabolicPoint, Weight};
        assert_eq!(total_flag_dimension(&ParabolicDatum::empty()), 0);
        let datum = ParabolicDatum::new(vec![
            ParabolicPoint::new(
                "a",
                vec![1, 1],
                vec![Weight::from_ratio(0, 1), Weight::from_ratio(1, 2)],
            ),
            ParabolicPoint::new(
                "b",
                vec![1, 1],
                vec![Weight::from_ratio(0, 1), Weight::from_ratio(1, 3)],
            ),
        ]);
        assert_eq!(total_flag_dimension(&datum), 2);
    }

    #[test]
    fn superadditivity_examples() {
        assert_eq!(check_flag_superadditivity(&[1, 0], &[0, 1]), Ok(true)); // 0 + 0 <= 1
        assert_eq!(check_flag_superadditivity(&[1, 1], &[0, 0]), Ok(true)); // 1 + 0 <= 1
        assert_eq!(check_flag_superadditivity(&[1, 2], &[2, 1]), Ok(true)); // 2 + 2 <= 9
        assert_eq!(
            check_flag_superadditivity(&[1], &[1, 2]),
            Err(FlagError::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn summation_form_matches_identity_form() {
        // a couple of fixed shapes; the property suite covers random ones
        for parts in [vec![3u64], vec![2, 4], vec![1, 2, 3], vec![5, 1, 1, 2]] {
            let s = shape(&parts);
            assert_eq!(flag_dimension(&s), flag_dimension_by_identity(&s));
        }
    }
}
