//! Exhaustive verification of the cyclic-isotropy character-sum bound.
//!
//! A cyclic group of order `n` (the isotropy group) acts on a space `V`
//! through a generator whose `N`-th power is trivial, so only the weight
//! spaces `V_{(i/N) n}`, `i = 0..N-1`, occur; `m_i` denotes their
//! dimensions. Against a faithful character of weight 1, the invariant of
//! interest is
//!
//! ```text
//! sum = sum_{i=1}^{N-1} n (1 - i/N) m_i
//! ```
//!
//! obtained from the double sum over character twists `d = 0..n-1` by
//! keeping only the pairs `(d, i)` with `i n / N + d ≡ 0 (mod n)`. The
//! bound is `(dim V) n (1 - 1/N)`, attained exactly when all the mass of
//! `V` sits in weight index 1.

use crate::rat;
use num::rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsotropyError {
    #[error("group order must be positive")]
    ZeroGroupOrder,
    #[error("N = {n} does not divide the group order {group_order}")]
    NonDividingN { n: u64, group_order: u64 },
    #[error("expected {expected} weight multiplicities, got {got}")]
    WrongMultiplicityCount { expected: u64, got: usize },
}

/// One instance: cyclic group order, the divisor `N`, and the weight-space
/// dimensions `m_0..m_{N-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyInstance {
    group_order: u64,
    n: u64,
    multiplicities: Vec<u64>,
}

impl IsotropyInstance {
    pub fn new(group_order: u64, n: u64, multiplicities: Vec<u64>) -> Result<Self, IsotropyError> {
        if group_order == 0 {
            return Err(IsotropyError::ZeroGroupOrder);
        }
        if n == 0 || !group_order.is_multiple_of(n) {
            return Err(IsotropyError::NonDividingN { n, group_order });
        }
        if multiplicities.len() as u64 != n {
            return Err(IsotropyError::WrongMultiplicityCount {
                expected: n,
                got: multiplicities.len(),
            });
        }
        Ok(IsotropyInstance { group_order, n, multiplicities })
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn dim(&self) -> u64 {
        self.multiplicities.iter().sum()
    }

    /// True when all mass sits at weight index 1 (for `N >= 2`); these are
    /// exactly the instances attaining the bound.
    pub fn mass_at_one(&self) -> bool {
        self.multiplicities
            .iter()
            .enumerate()
            .all(|(i, &m)| i == 1 || m == 0)
    }
}

/// Closed form: `sum_{i=1}^{N-1} n (1 - i/N) m_i`. Integral because
/// `N` divides the group order.
pub fn isotropy_sum(inst: &IsotropyInstance) -> u64 {
    let step = inst.group_order / inst.n;
    inst.multiplicities
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (inst.group_order - i as u64 * step) * m)
        .sum()
}

/// Literal double loop over `(d, i)`: counts `d * m_i` whenever the twist
/// by `d` kills the action on weight space `i`, i.e. `i n/N + d ≡ 0
/// (mod n)`. Independent route for cross-checking [`isotropy_sum`].
pub fn isotropy_sum_double_loop(inst: &IsotropyInstance) -> u64 {
    let n = inst.group_order;
    let step = n / inst.n;
    let mut total = 0;
    for d in 0..n {
        for (i, &m) in inst.multiplicities.iter().enumerate() {
            let s = i as u64 * step;
            if (s + d).is_multiple_of(n) {
                total += d * m;
            }
        }
    }
    total
}

/// The bound `(dim V) |Γ| (1 - 1/N)`.
pub fn isotropy_bound(inst: &IsotropyInstance) -> BigRational {
    rat::int(inst.dim() as i64)
        * rat::int(inst.group_order as i64)
        * (rat::int(1) - rat::frac(1, inst.n as i64))
}

/// Result of an exhaustive run over all instances within the given caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyVerdict {
    /// Per-`(group_order, N)` lines: instance count and maximal slack
    /// `bound - sum` observed.
    pub lines: Vec<IsotropyLine>,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyLine {
    pub group_order: u64,
    pub n: u64,
    pub instances: u64,
    pub max_slack: BigRational,
    /// Instances attaining the bound exactly.
    pub equality_instances: u64,
}

impl IsotropyVerdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total_instances(&self) -> u64 {
        self.lines.iter().map(|l| l.instances).sum()
    }
}

fn for_each_multiplicity_vector(len: usize, max_sum: u64, f: &mut impl FnMut(&[u64])) {
    fn rec(v: &mut Vec<u64>, len: usize, budget: u64, f: &mut impl FnMut(&[u64])) {
        if v.len() == len {
            f(v);
            return;
        }
        for m in 0..=budget {
            v.push(m);
            rec(v, len, budget - m, f);
            v.pop();
        }
    }
    rec(&mut Vec::with_capacity(len), len, max_sum, f);
}

/// Checks `isotropy_sum <= isotropy_bound` (and the agreement of the two
/// sum implementations, and the equality profile) for every group order up
/// to `max_group_order`, every divisor `N`, and every multiplicity vector
/// of total dimension at most `max_dim`.
pub fn verify_isotropy(max_group_order: u64, max_dim: u64) -> IsotropyVerdict {
    let mut verdict = IsotropyVerdict {
        lines: Vec::new(),
        violations: Vec::new(),
    };
    for group_order in 1..=max_group_order {
        for n in (1..=group_order).filter(|n| group_order % n == 0) {
            let mut line = IsotropyLine {
                group_order,
                n,
                instances: 0,
                max_slack: rat::int(0),
                equality_instances: 0,
            };
            for_each_multiplicity_vector(n as usize, max_dim, &mut |mults| {
                let inst = IsotropyInstance::new(group_order, n, mults.to_vec())
                    .expect("enumeration only produces valid instances");
                let sum = isotropy_sum(&inst);
                let double = isotropy_sum_double_loop(&inst);
                let bound = isotropy_bound(&inst);
                line.instances += 1;
                if sum != double {
                    verdict.violations.push(format!(
                        "closed form {sum} != double loop {double} at |G|={group_order} N={n} m={mults:?}"
                    ));
                }
                let sum_rat = rat::int(sum as i64);
                if sum_rat > bound {
                    verdict.violations.push(format!(
                        "sum {sum} exceeds bound {} at |G|={group_order} N={n} m={mults:?}",
                        rat::render(&bound)
                    ));
                }
                let is_equality = sum_rat == bound;
                // equality profile: for N >= 2 the bound is attained exactly
                // when all mass sits at weight index 1; for N = 1 both sides
                // are always zero
                let expected_equality = if n == 1 { true } else { inst.mass_at_one() };
                if is_equality != expected_equality {
                    verdict.violations.push(format!(
                        "equality profile mismatch at |G|={group_order} N={n} m={mults:?}: \
                         equality={is_equality}, mass_at_one={}",
                        inst.mass_at_one()
                    ));
                }
                if is_equality {
                    line.equality_instances += 1;
                }
                let slack = bound - sum_rat;
                if slack > line.max_slack {
                    line.max_slack = slack;
                }
            });
            verdict.lines.push(line);
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    #[test]
    fn instance_validation() {
        assert!(IsotropyInstance::new(6, 3, vec![1, 1, 1]).is_ok());
        assert_eq!(
            IsotropyInstance::new(6, 4, vec![0, 0, 0, 0]),
            Err(IsotropyError::NonDividingN { n: 4, group_order: 6 })
        );
        assert_eq!(
            IsotropyInstance::new(6, 3, vec![1]),
            Err(IsotropyError::WrongMultiplicityCount { expected: 3, got: 1 })
        );
        assert_eq!(
            IsotropyInstance::new(0, 1, vec![1]),
            Err(IsotropyError::ZeroGroupOrder)
        );
    }

    #[test]
    fn sum_examples() {
        // N = 1: only the d = 0 term survives, contributing nothing
        let trivial = IsotropyInstance::new(4, 1, vec![3]).unwrap();
        assert_eq!(isotropy_sum(&trivial), 0);
        assert_eq!(isotropy_sum_double_loop(&trivial), 0);

        let inst = IsotropyInstance::new(2, 2, vec![0, 1]).unwrap();
        assert_eq!(isotropy_sum(&inst), 1);

        let inst = IsotropyInstance::new(6, 3, vec![1, 1, 1]).unwrap();
        assert_eq!(isotropy_sum(&inst), 6); // 6*(2/3) + 6*(1/3)
        assert_eq!(isotropy_sum_double_loop(&inst), 6);
    }

    #[test]
    fn bound_examples() {
        let trivial = IsotropyInstance::new(4, 1, vec![3]).unwrap();
        assert_eq!(isotropy_bound(&trivial), int(0));

        let inst = IsotropyInstance::new(2, 2, vec![0, 1]).unwrap();
        assert_eq!(isotropy_bound(&inst), int(1)); // met with equality

        let inst = IsotropyInstance::new(6, 3, vec![1, 1, 1]).unwrap();
        assert_eq!(isotropy_bound(&inst), int(12));
    }

    #[test]
    fn zero_dimension_is_trivially_tight() {
        let inst = IsotropyInstance::new(6, 3, vec![0, 0, 0]).unwrap();
        assert_eq!(isotropy_sum(&inst), 0);
        assert_eq!(isotropy_bound(&inst), int(0));
    }

    #[test]
    fn sum_is_linear_in_multiplicities() {
        let a = IsotropyInstance::new(12, 4, vec![1, 2, 0, 3]).unwrap();
        let b = IsotropyInstance::new(12, 4, vec![0, 1, 4, 2]).unwrap();
        let combined = IsotropyInstance::new(12, 4, vec![1, 3, 4, 5]).unwrap();
        assert_eq!(isotropy_sum(&a) + isotropy_sum(&b), isotropy_sum(&combined));
    }

    #[test]
    fn bound_is_attained_exactly_at_mass_one() {
        // fixed dim V = 4, N = 4, |G| = 8: maximum over distributions
        let mut best = 0;
        for_each_multiplicity_vector(4, 4, &mut |m| {
            if m.iter().sum::<u64>() == 4 {
                let inst = IsotropyInstance::new(8, 4, m.to_vec()).unwrap();
                best = best.max(isotropy_sum(&inst));
            }
        });
        let tight = IsotropyInstance::new(8, 4, vec![0, 4, 0, 0]).unwrap();
        assert_eq!(best, isotropy_sum(&tight));
        assert_eq!(int(best as i64), isotropy_bound(&tight));
    }

    #[test]
    fn default_sweep_passes() {
        let verdict = verify_isotropy(8, 4);
        assert!(verdict.passed(), "violations: {:?}", verdict.violations);
        assert!(verdict.total_instances() > 0);
        // lines cover every (group order, divisor) pair
        assert!(verdict.lines.iter().any(|l| l.group_order == 8 && l.n == 4));
    }
}
