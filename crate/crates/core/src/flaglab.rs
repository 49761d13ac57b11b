//! Exhaustive verification of the generic-flag-triple slope inequalities
//! over small prime fields.
//!
//! A triple consists of two full flags `F_1 ⊃ ... ⊃ F_r ⊃ 0` and a line
//! `l` in `V = F_q^r`, in maximally general position:
//!
//! ```text
//! dim(F_i^x + F_j^y)     = min(r, dim F_i^x + dim F_j^y)
//! dim(l + F_i^x + F_j^y) = min(1 + dim F_i^x + dim F_j^y, r)
//! ```
//!
//! Every subspace `W` then gets a degree and slope:
//!
//! ```text
//! deg_V(W) = sum_{i=2}^r dim(W ∩ F_i^x) + sum_{i=2}^r dim(W ∩ F_i^y)
//! deg(W)   = deg_V(W) + (r-1) dim(l ∩ W)
//! mu(W)    = deg(W) / dim(W)
//! ```
//!
//! The laboratories enumerate all subspaces of `F_q^r` in canonical
//! echelon form and check, with exact arithmetic, that `mu(W) < mu(V) =
//! r - 1/r` for every proper nonzero `W` and that the index-pair degree
//! inequalities hold. The genericity conditions are equalities of
//! intersection dimensions, so a witness over a small prime field
//! exercises exactly the stated combinatorics.

use crate::linalg::{is_prime, PrimeFieldMatrix};
use crate::rat;
use num::rational::BigRational;
use thiserror::Error;

/// Hard cap on exhaustive enumeration size.
pub const SUBSPACE_CAP: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlagLabError {
    #[error("enumeration of {count} subspaces exceeds cap {cap}")]
    CapExceeded { count: u128, cap: u64 },
    #[error("slope of the zero subspace is undefined")]
    ZeroSubspace,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("flag triples need ambient dimension >= 2, got {0}")]
    AmbientTooSmall(u64),
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A subspace of `F_q^r` held as its canonical reduced row-echelon basis,
/// so equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: PrimeFieldMatrix,
}

impl Subspace {
    /// Row space of the given generators (need not be independent).
    pub fn span(q: u64, ambient: usize, generators: Vec<Vec<u64>>) -> Subspace {
        if generators.is_empty() {
            return Subspace {
                basis: PrimeFieldMatrix::zero(q, 0, ambient),
            };
        }
        for g in &generators {
            assert_eq!(g.len(), ambient, "generator length mismatch");
        }
        Subspace {
            basis: PrimeFieldMatrix::from_rows(q, generators).row_space_basis(),
        }
    }

    pub fn zero(q: u64, ambient: usize) -> Subspace {
        Subspace {
            basis: PrimeFieldMatrix::zero(q, 0, ambient),
        }
    }

    pub fn full(q: u64, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut row = vec![0; ambient];
                row[i] = 1;
                row
            })
            .collect();
        Subspace::span(q, ambient, rows)
    }

    fn from_rref(basis: PrimeFieldMatrix) -> Subspace {
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    pub fn basis(&self) -> &PrimeFieldMatrix {
        &self.basis
    }

    /// `dim(self ∩ other) = dim self + dim other - dim(self + other)`.
    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum_dim(other)
    }

    /// `dim(self + other)` as the rank of the stacked bases.
    pub fn sum_dim(&self, other: &Subspace) -> usize {
        self.basis.stacked(&other.basis).rank()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.sum_dim(other) == self.dim()
    }
}

/// `dim(a + b + c)`.
fn triple_sum_dim(a: &Subspace, b: &Subspace, c: &Subspace) -> usize {
    a.basis.stacked(&b.basis).stacked(&c.basis).rank()
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// Gaussian binomial `[n choose k]_q`: the number of `k`-dimensional
/// subspaces of `F_q^n`. Checked `u128` arithmetic.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let q = q as u128;
    let mut value: u128 = 1;
    for i in 0..k {
        // multiply by (q^(n-i) - 1) / (q^(i+1) - 1); prefix products are integral
        let num = q.checked_pow((n - i) as u32)?.checked_sub(1)?;
        let den = q.checked_pow(i as u32 + 1)?.checked_sub(1)?;
        value = value.checked_mul(num)? / den;
    }
    Some(value)
}

/// Total number of subspaces to be enumerated, checked against the cap.
pub fn subspace_count(r: u64, q: u64, dim_filter: Option<usize>) -> Result<u64, FlagLabError> {
    let cap_err = |count| FlagLabError::CapExceeded { count, cap: SUBSPACE_CAP };
    let mut total: u128 = 0;
    let dims: Vec<u64> = match dim_filter {
        Some(k) => vec![k as u64],
        None => (0..=r).collect(),
    };
    for k in dims {
        let c = gaussian_binomial(r, k, q).ok_or(cap_err(u128::MAX))?;
        total += c;
        if total > SUBSPACE_CAP as u128 {
            return Err(cap_err(total));
        }
    }
    Ok(total as u64)
}

fn for_each_pivot_set(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if current.len() == k {
            f(current);
            return;
        }
        let remaining = k - current.len();
        for c in start..=(n - remaining) {
            current.push(c);
            rec(n, k, c + 1, current, f);
            current.pop();
        }
    }
    if k == 0 {
        f(&[]);
    } else if k <= n {
        rec(n, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// Every subspace of `F_q^r` exactly once, each in canonical echelon form,
/// optionally restricted to one dimension. Deterministic order: by
/// dimension, then pivot columns lexicographically, then free entries as a
/// base-`q` odometer.
pub fn enumerate_subspaces(
    r: usize,
    q: u64,
    dim_filter: Option<usize>,
) -> Result<Vec<Subspace>, FlagLabError> {
    if !is_prime(q) {
        return Err(FlagLabError::NotPrime(q));
    }
    let expected = subspace_count(r as u64, q, dim_filter)?;
    let mut out = Vec::with_capacity(expected as usize);
    let dims: Vec<usize> = match dim_filter {
        Some(k) => vec![k],
        None => (0..=r).collect(),
    };
    for k in dims {
        if k > r {
            continue;
        }
        for_each_pivot_set(r, k, &mut |pivots| {
            // free positions: (row i, col j) with j > pivots[i], j not a pivot
            let is_pivot = |j: usize| pivots.contains(&j);
            let mut free: Vec<(usize, usize)> = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for j in p + 1..r {
                    if !is_pivot(j) {
                        free.push((i, j));
                    }
                }
            }
            let mut digits = vec![0u64; free.len()];
            loop {
                let mut m = PrimeFieldMatrix::zero(q, k, r);
                for (i, &p) in pivots.iter().enumerate() {
                    m.set(i, p, 1);
                }
                for (&(i, j), &v) in free.iter().zip(&digits) {
                    m.set(i, j, v);
                }
                out.push(Subspace::from_rref(m));

                // odometer over F_q^{#free}
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        return;
                    }
                    digits[pos] += 1;
                    if digits[pos] < q {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
            }
        });
    }
    debug_assert_eq!(out.len() as u64, expected);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Flag triples
// ---------------------------------------------------------------------------

/// Two full flags and a line. `x_flag[i]` holds `F_{i+1}` of dimension
/// `r - i`, for `i = 0..r`; the trailing zero space is implicit.
#[derive(Debug, Clone)]
pub struct FlagTriple {
    r: usize,
    q: u64,
    x_flag: Vec<Subspace>,
    y_flag: Vec<Subspace>,
    line: Subspace,
}

impl FlagTriple {
    /// The explicit witness: `F_i^x = span(e_1..e_{r-i+1})`,
    /// `F_i^y = span(e_i..e_r)`, `l = span(e_1 + ... + e_r)`. Passes both
    /// genericity checks over every prime field.
    pub fn standard(r: usize, q: u64) -> Result<FlagTriple, FlagLabError> {
        if !is_prime(q) {
            return Err(FlagLabError::NotPrime(q));
        }
        if r < 2 {
            return Err(FlagLabError::AmbientTooSmall(r as u64));
        }
        let basis_vector = |j: usize| {
            let mut v = vec![0u64; r];
            v[j] = 1;
            v
        };
        let x_flag = (1..=r)
            .map(|i| Subspace::span(q, r, (0..r - i + 1).map(basis_vector).collect()))
            .collect();
        let y_flag = (1..=r)
            .map(|i| Subspace::span(q, r, (i - 1..r).map(basis_vector).collect()))
            .collect();
        let line = Subspace::span(q, r, vec![vec![1; r]]);
        Ok(FlagTriple { r, q, x_flag, y_flag, line })
    }

    /// Assembles a triple from explicit flags, checking only shape
    /// (dimensions and nesting); genericity is queried separately.
    pub fn from_parts(
        x_flag: Vec<Subspace>,
        y_flag: Vec<Subspace>,
        line: Subspace,
    ) -> FlagTriple {
        let r = x_flag.len();
        assert!(r >= 2, "need ambient dimension >= 2");
        assert_eq!(y_flag.len(), r, "flags of different lengths");
        let q = line.modulus();
        for (i, flag) in [&x_flag, &y_flag].into_iter().enumerate() {
            for (j, sub) in flag.iter().enumerate() {
                assert_eq!(sub.dim(), r - j, "flag {i} step {j} has wrong dimension");
                if j > 0 {
                    assert!(flag[j - 1].contains(sub), "flag {i} not nested at step {j}");
                }
            }
        }
        assert_eq!(line.dim(), 1, "line must be one-dimensional");
        FlagTriple { r, q, x_flag, y_flag, line }
    }

    /// Same flags, different line.
    pub fn with_line(&self, line: Subspace) -> FlagTriple {
        assert_eq!(line.dim(), 1, "line must be one-dimensional");
        let mut t = self.clone();
        t.line = line;
        t
    }

    pub fn ambient_dim(&self) -> usize {
        self.r
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn line(&self) -> &Subspace {
        &self.line
    }

    /// `F_i^x` for `1 <= i <= r+1` (the last is the zero space).
    pub fn x_subspace(&self, i: usize) -> Subspace {
        if i <= self.r {
            self.x_flag[i - 1].clone()
        } else {
            Subspace::zero(self.q, self.r)
        }
    }

    /// `F_i^y` for `1 <= i <= r+1`.
    pub fn y_subspace(&self, i: usize) -> Subspace {
        if i <= self.r {
            self.y_flag[i - 1].clone()
        } else {
            Subspace::zero(self.q, self.r)
        }
    }

    /// Pair genericity: `dim(F_i^x + F_j^y) = min(r, dim F_i^x + dim F_j^y)`
    /// for all index pairs.
    pub fn is_generic_pair(&self) -> bool {
        for i in 1..=self.r + 1 {
            let fx = self.x_subspace(i);
            for j in 1..=self.r + 1 {
                let fy = self.y_subspace(j);
                let expected = (fx.dim() + fy.dim()).min(self.r);
                if fx.sum_dim(&fy) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Line genericity: `dim(l + F_i^x + F_j^y) = min(1 + dim F_i^x +
    /// dim F_j^y, r)` for all index pairs.
    pub fn is_generic_triple(&self) -> bool {
        for i in 1..=self.r + 1 {
            let fx = self.x_subspace(i);
            for j in 1..=self.r + 1 {
                let fy = self.y_subspace(j);
                let expected = (1 + fx.dim() + fy.dim()).min(self.r);
                if triple_sum_dim(&self.line, &fx, &fy) != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Intersection profile `d_i = dim(W ∩ F_i)`, indices `1..=r+1`,
    /// returned as a vector with `profile[i-1] = d_i` (so the last entry
    /// is always 0).
    fn meet_profile(&self, w: &Subspace, flag: &[Subspace]) -> Vec<usize> {
        let mut profile: Vec<usize> = flag.iter().map(|f| w.intersection_dim(f)).collect();
        profile.push(0);
        profile
    }

    pub fn x_profile(&self, w: &Subspace) -> Vec<usize> {
        self.meet_profile(w, &self.x_flag)
    }

    pub fn y_profile(&self, w: &Subspace) -> Vec<usize> {
        self.meet_profile(w, &self.y_flag)
    }
}

// ---------------------------------------------------------------------------
// Degrees and slopes
// ---------------------------------------------------------------------------

/// Degrees of a subspace with respect to a flag triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceDegree {
    /// `deg_V(W)`: the part depending only on the two flags.
    pub deg_v: u64,
    /// `deg(W) = deg_V(W) + (r-1) dim(l ∩ W)`.
    pub deg: u64,
    /// `dim(l ∩ W)`, either 0 or 1.
    pub line_meet: usize,
}

/// Degrees via the sum-of-intersections form of `deg_V`.
pub fn subspace_degree(w: &Subspace, t: &FlagTriple) -> SubspaceDegree {
    let xs = t.x_profile(w);
    let ys = t.y_profile(w);
    // sums over i = 2..=r, i.e. profile indices 1..r
    let deg_v: u64 = xs[1..t.r].iter().chain(&ys[1..t.r]).map(|&d| d as u64).sum();
    let line_meet = w.intersection_dim(t.line());
    SubspaceDegree {
        deg_v,
        deg: deg_v + (t.r as u64 - 1) * line_meet as u64,
        line_meet,
    }
}

/// `deg_V(W)` via the weighted-difference form
/// `sum_{i=1}^r (i-1)(d_i - d_{i+1})` over both flags; an independent
/// route kept for cross-checking against [`subspace_degree`].
pub fn subspace_deg_v_weighted(w: &Subspace, t: &FlagTriple) -> u64 {
    let mut total: i64 = 0;
    for profile in [t.x_profile(w), t.y_profile(w)] {
        for i in 1..=t.r {
            total += (i as i64 - 1) * (profile[i - 1] as i64 - profile[i] as i64);
        }
    }
    total as u64
}

/// `mu(W) = deg(W) / dim(W)` as an exact rational.
pub fn subspace_slope(w: &Subspace, t: &FlagTriple) -> Result<BigRational, FlagLabError> {
    if w.dim() == 0 {
        return Err(FlagLabError::ZeroSubspace);
    }
    let d = subspace_degree(w, t);
    Ok(rat::frac(d.deg as i64, w.dim() as i64))
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

/// Outcome of one exhaustive laboratory run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabVerdict {
    pub label: String,
    /// Number of subspaces visited.
    pub subspaces: u64,
    /// Number of individual inequality instances checked.
    pub checks: u64,
    /// Counterexamples in enumeration (canonical) order; empty on pass.
    pub violations: Vec<String>,
}

impl LabVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `mu(W) < mu(V) = r - 1/r` for every proper nonzero subspace of
/// the standard triple, along with the two case bounds: `mu(W) <= r - 1`
/// when `l ∩ W = 0` and `mu(W) <= r - 1/dim W` when `l ⊆ W`.
pub fn verify_vstable(r: usize, q: u64) -> Result<LabVerdict, FlagLabError> {
    let triple = FlagTriple::standard(r, q)?;
    let all = enumerate_subspaces(r, q, None)?;
    let full = Subspace::full(q, r);
    let mu_v = subspace_slope(&full, &triple)?;
    debug_assert_eq!(mu_v, rat::int(r as i64) - rat::frac(1, r as i64));

    let mut verdict = LabVerdict {
        label: format!("vstable(r={r},q={q})"),
        subspaces: all.len() as u64,
        checks: 0,
        violations: Vec::new(),
    };
    for w in &all {
        if w.dim() == 0 || w.dim() == r {
            continue;
        }
        let degree = subspace_degree(w, &triple);
        let mu_w = rat::frac(degree.deg as i64, w.dim() as i64);
        verdict.checks += 1;
        if mu_w >= mu_v {
            verdict.violations.push(format!(
                "mu(W) = {} >= mu(V) = {} for W with basis\n{}",
                rat::render(&mu_w),
                rat::render(&mu_v),
                w.basis()
            ));
        }
        let case_bound = if degree.line_meet == 0 {
            rat::int(r as i64 - 1)
        } else {
            rat::int(r as i64) - rat::frac(1, w.dim() as i64)
        };
        verdict.checks += 1;
        if mu_w > case_bound {
            verdict.violations.push(format!(
                "case bound violated: mu(W) = {} > {} (line_meet = {}) for W with basis\n{}",
                rat::render(&mu_w),
                rat::render(&case_bound),
                degree.line_meet,
                w.basis()
            ));
        }
    }
    Ok(verdict)
}

/// Checks the degree inequalities for every subspace of the standard triple:
/// `d_i^x(W) + d_{r+2-i}^y(W) <= dim W` for `2 <= i <= r`, and when
/// `l ⊆ W` also `d_i^x(W) + d_{r+3-i}^y(W) <= dim W - 1` for
/// `2 <= i <= r+1` (with `d_{r+1} = 0`).
pub fn verify_degbound(r: usize, q: u64) -> Result<LabVerdict, FlagLabError> {
    let triple = FlagTriple::standard(r, q)?;
    let all = enumerate_subspaces(r, q, None)?;

    let mut verdict = LabVerdict {
        label: format!("degbound(r={r},q={q})"),
        subspaces: all.len() as u64,
        checks: 0,
        violations: Vec::new(),
    };
    for w in &all {
        let xs = triple.x_profile(w);
        let ys = triple.y_profile(w);
        let dim_w = w.dim();
        for i in 2..=r {
            verdict.checks += 1;
            let lhs = xs[i - 1] + ys[r + 2 - i - 1];
            if lhs > dim_w {
                verdict.violations.push(format!(
                    "d_{i}^x + d_{}^y = {lhs} > dim W = {dim_w} for W with basis\n{}",
                    r + 2 - i,
                    w.basis()
                ));
            }
        }
        if w.contains(triple.line()) {
            for i in 2..=r + 1 {
                verdict.checks += 1;
                let lhs = xs[i - 1] + ys[r + 3 - i - 1];
                if lhs + 1 > dim_w {
                    verdict.violations.push(format!(
                        "line case: d_{i}^x + d_{}^y = {lhs} > dim W - 1 = {} for W with basis\n{}",
                        r + 3 - i,
                        dim_w - 1,
                        w.basis()
                    ));
                }
            }
        }
    }
    Ok(verdict)
}
