//! Parabolic data model and its elementary numeric invariants.
//!
//! A parabolic datum is a finite set of marked points, each carrying flag
//! multiplicities `k_1..k_n` (positive integers) and strictly increasing
//! rational weights in `[0, 1)`. All the bound formulas downstream consume a
//! datum only through the invariants computed here:
//!
//! - `support_degree`: number of marked points `s = deg|D|`
//! - `weight_lcm`: least common denominator `N(D)` of all weights
//! - `datum_defect`: `M(D) = (1 - 1/N(D)) * deg|D|`
//! - `datum_gcd`: `l(D) = gcd(d, r, all multiplicities)`
//! - `parabolic_degree` / `parabolic_slope`
//!
//! Validation never fails: violations are returned as data so a front end
//! can render every broken clause at once.

use crate::rat;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A parabolic weight: an exact rational, kept in lowest terms.
///
/// The range invariant `0 <= value < 1` is checked by [`validate_datum`],
/// not by construction, so out-of-range input can still be loaded and
/// reported.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn new(value: BigRational) -> Self {
        Weight(value)
    }

    /// Weight `n/d`. Panics if `d == 0`.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Weight(rat::frac(n, d))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn in_range(&self) -> bool {
        !self.0.is_negative() && self.0 < BigRational::one()
    }

    /// Denominator of the reduced weight.
    pub fn denominator(&self) -> u64 {
        rat::denom_u64(&self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rat::render(&self.0))
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat::render(&self.0))
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        rat::parse(&s).map(Weight).map_err(serde::de::Error::custom)
    }
}

/// One marked point: a label, flag multiplicities, and matching weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicPoint {
    pub label: String,
    pub multiplicities: Vec<u64>,
    pub weights: Vec<Weight>,
}

impl ParabolicPoint {
    pub fn new(label: &str, multiplicities: Vec<u64>, weights: Vec<Weight>) -> Self {
        ParabolicPoint {
            label: label.to_string(),
            multiplicities,
            weights,
        }
    }

    /// Sum of the flag multiplicities at this point.
    pub fn multiplicity_sum(&self) -> u64 {
        self.multiplicities.iter().sum()
    }
}

/// A parabolic datum: the full collection of marked points.
///
/// The empty datum is valid and reproduces the non-parabolic
/// specialization of every formula.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ParabolicDatum {
    pub points: Vec<ParabolicPoint>,
}

impl ParabolicDatum {
    pub fn empty() -> Self {
        ParabolicDatum { points: Vec::new() }
    }

    pub fn new(points: Vec<ParabolicPoint>) -> Self {
        ParabolicDatum { points }
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Ambient numeric context: genus, rank, degree, and the two assertions
/// the bound theorems hypothesize about the curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliContext {
    pub genus: u64,
    pub rank: u64,
    /// Degree of the determinant when `fixed_determinant`, otherwise the
    /// degree `d` of the bundles.
    pub degree: i64,
    pub fixed_determinant: bool,
    /// User assertion that the curve has at least three rational points.
    #[serde(rename = "three_rational_points")]
    pub has_three_rational_points: bool,
}

impl ModuliContext {
    pub fn new(genus: u64, rank: u64, degree: i64) -> Self {
        ModuliContext {
            genus,
            rank,
            degree,
            fixed_determinant: false,
            has_three_rational_points: true,
        }
    }

    pub fn with_fixed_determinant(mut self, fixed: bool) -> Self {
        self.fixed_determinant = fixed;
        self
    }

    pub fn with_three_rational_points(mut self, asserted: bool) -> Self {
        self.has_three_rational_points = asserted;
        self
    }
}

/// A violated invariant, reported as data rather than an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroMultiplicity { label: String, index: usize },
    LengthMismatch { label: String, multiplicities: usize, weights: usize },
    WeightOutOfRange { label: String, index: usize, weight: String },
    WeightsNotIncreasing { label: String, index: usize },
    DuplicateLabel { label: String },
    UnequalMultiplicitySums { label: String, sum: u64, expected: u64 },
    RankMismatch { rank: u64, multiplicity_sum: u64 },
    ZeroRank,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroMultiplicity { label, index } => {
                write!(f, "point `{label}`: multiplicity #{index} is zero (must be >= 1)")
            }
            Violation::LengthMismatch { label, multiplicities, weights } => write!(
                f,
                "point `{label}`: {multiplicities} multiplicities but {weights} weights"
            ),
            Violation::WeightOutOfRange { label, index, weight } => {
                write!(f, "point `{label}`: weight #{index} = {weight} outside [0, 1)")
            }
            Violation::WeightsNotIncreasing { label, index } => {
                write!(f, "point `{label}`: weight #{index} not strictly greater than its predecessor")
            }
            Violation::DuplicateLabel { label } => write!(f, "duplicate point label `{label}`"),
            Violation::UnequalMultiplicitySums { label, sum, expected } => write!(
                f,
                "point `{label}`: multiplicity sum {sum} differs from {expected} at earlier points"
            ),
            Violation::RankMismatch { rank, multiplicity_sum } => write!(
                f,
                "common multiplicity sum {multiplicity_sum} does not equal rank {rank}"
            ),
            Violation::ZeroRank => write!(f, "rank must be positive"),
        }
    }
}

/// Check every invariant of the datum and its compatibility with the
/// context. Returns the (possibly empty) list of violated clauses, in a
/// deterministic order that does not depend on anything but the input.
pub fn validate_datum(datum: &ParabolicDatum, ctx: &ModuliContext) -> Vec<Violation> {
    let mut violations = Vec::new();

    if ctx.rank == 0 {
        violations.push(Violation::ZeroRank);
    }

    for point in &datum.points {
        if point.multiplicities.len() != point.weights.len() {
            violations.push(Violation::LengthMismatch {
                label: point.label.clone(),
                multiplicities: point.multiplicities.len(),
                weights: point.weights.len(),
            });
        }
        for (i, &k) in point.multiplicities.iter().enumerate() {
            if k == 0 {
                violations.push(Violation::ZeroMultiplicity {
                    label: point.label.clone(),
                    index: i + 1,
                });
            }
        }
        for (i, w) in point.weights.iter().enumerate() {
            if !w.in_range() {
                violations.push(Violation::WeightOutOfRange {
                    label: point.label.clone(),
                    index: i + 1,
                    weight: w.to_string(),
                });
            }
            if i > 0 && point.weights[i - 1] >= *w {
                violations.push(Violation::WeightsNotIncreasing {
                    label: point.label.clone(),
                    index: i + 1,
                });
            }
        }
    }

    // Pairwise distinct labels, reported once per offending label.
    let mut seen: Vec<&str> = Vec::new();
    for point in &datum.points {
        if seen.contains(&point.label.as_str()) {
            violations.push(Violation::DuplicateLabel {
                label: point.label.clone(),
            });
        } else {
            seen.push(&point.label);
        }
    }

    // The multiplicity sum must be one and the same integer at every point,
    // and when a datum is present it must equal the rank.
    if let Some(first) = datum.points.first() {
        let expected = first.multiplicity_sum();
        for point in &datum.points[1..] {
            let sum = point.multiplicity_sum();
            if sum != expected {
                violations.push(Violation::UnequalMultiplicitySums {
                    label: point.label.clone(),
                    sum,
                    expected,
                });
            }
        }
        if expected != ctx.rank {
            violations.push(Violation::RankMismatch {
                rank: ctx.rank,
                multiplicity_sum: expected,
            });
        }
    }

    violations
}

/// `deg|D|`: the number of marked points (the degree of the reduced
/// support divisor).
pub fn support_degree(datum: &ParabolicDatum) -> u64 {
    datum.points.len() as u64
}

/// `N(D)`: the smallest positive integer such that every weight is an
/// integer multiple of `1/N(D)`. Equals 1 for the empty datum and for
/// all-zero weights.
pub fn weight_lcm(datum: &ParabolicDatum) -> u64 {
    let mut acc: u128 = 1;
    for point in &datum.points {
        for w in &point.weights {
            let d = w.denominator() as u128;
            acc = acc / num::integer::gcd(acc, d) * d;
        }
    }
    acc.try_into().expect("weight denominator lcm out of u64 range")
}

/// `M(D) = (1 - 1/N(D)) * deg|D|`, the parabolic defect. Zero exactly
/// when all weights have denominator 1.
pub fn datum_defect(datum: &ParabolicDatum) -> BigRational {
    let n = weight_lcm(datum) as i64;
    let s = support_degree(datum) as i64;
    (rat::int(1) - rat::frac(1, n)) * rat::int(s)
}

/// `l(D)`: gcd of the degree, the rank, and every multiplicity at every
/// point, with the convention `gcd(0, n) = n`.
pub fn datum_gcd(datum: &ParabolicDatum, ctx: &ModuliContext) -> u64 {
    let mut acc = num::integer::gcd(ctx.degree.unsigned_abs(), ctx.rank);
    for point in &datum.points {
        for &k in &point.multiplicities {
            acc = num::integer::gcd(acc, k);
        }
    }
    acc
}

/// Parabolic degree: underlying degree plus the weighted multiplicity sum
/// over every flag step of every point.
pub fn parabolic_degree(underlying_degree: i64, datum: &ParabolicDatum) -> BigRational {
    let mut total = rat::int(underlying_degree);
    for point in &datum.points {
        for (k, w) in point.multiplicities.iter().zip(&point.weights) {
            total += BigRational::from_integer(BigInt::from(*k)) * w.value();
        }
    }
    total
}

/// Parabolic slope: parabolic degree divided by the rank.
pub fn parabolic_slope(
    underlying_degree: i64,
    datum: &ParabolicDatum,
    rank: u64,
) -> BigRational {
    assert!(rank > 0, "slope requires positive rank");
    parabolic_degree(underlying_degree, datum) / rat::int(rank as i64)
}

/// Largest weight denominator appearing in the datum; used by callers that
/// need per-point granularity rather than the global lcm.
pub fn max_weight_denominator(datum: &ParabolicDatum) -> u64 {
    datum
        .points
        .iter()
        .flat_map(|p| p.weights.iter().map(Weight::denominator))
        .max()
        .unwrap_or(1)
}
