//! Upper and lower bounds on the essential dimension of the moduli stacks,
//! assembled into a [`BoundReport`].
//!
//! All bounds are driven by two ingredients computed from the datum: the
//! defect `M(D) = (1 - 1/N(D)) deg|D|` and the gcd `l(D)`. The recursion
//!
//! ```text
//! F(r) = max_{s+t=r, t>0} F(s) + t^2 g + s t (g + M),   F(0) = 0
//! ```
//!
//! bounds the semistable locus; its sibling `G` (same recursion with `F`
//! feeding one side) bounds the full stack, and both collapse to closed
//! forms: `r^2 g` when `g >= M`, else `r(r+1)g/2 + r(r-1)M/2`. The legacy
//! quartic recursion `h_g` is kept for comparison tables.
//!
//! Everything here is exact rational arithmetic; no floating point.

use crate::datum::{datum_defect, datum_gcd, ModuliContext, ParabolicDatum};
use crate::flag::total_flag_dimension;
use crate::rat::{self, serde_rational};
use num::rational::BigRational;
use num::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("t = {t} out of range 0..={max}")]
    SplitOutOfRange { t: u64, max: u64 },
    #[error("rank must be >= 1")]
    ZeroRank,
    #[error("subbundle rank {r_sub} not in 1..{r}")]
    SubRankOutOfRange { r_sub: u64, r: u64 },
}

// ---------------------------------------------------------------------------
// The recursions F, G, H and the legacy quartic h_g
// ---------------------------------------------------------------------------

fn cross_term(g: u64, m: &BigRational, s: u64, t: u64) -> BigRational {
    // s t (g + M)
    rat::int((s * t) as i64) * (rat::int(g as i64) + m)
}

/// Table of `F(0), ..., F(r)` computed bottom-up over all splits.
pub fn f_table(g: u64, m: &BigRational, r: u64) -> Vec<BigRational> {
    let mut table = Vec::with_capacity(r as usize + 1);
    table.push(BigRational::zero());
    for n in 1..=r {
        let mut best: Option<BigRational> = None;
        for t in 1..=n {
            let s = n - t;
            let candidate = table[s as usize].clone()
                + rat::int((t * t) as i64) * rat::int(g as i64)
                + cross_term(g, m, s, t);
            if best.as_ref().is_none_or(|b| candidate > *b) {
                best = Some(candidate);
            }
        }
        table.push(best.expect("n >= 1 has at least the split t = n"));
    }
    table
}

/// `F(r)` by the memoized recursion over integer splits.
pub fn f_value(g: u64, m: &BigRational, r: u64) -> BigRational {
    f_table(g, m, r).pop().expect("table is never empty")
}

/// `F(r)` together with the maximizing split `(s, t)` at the top level
/// (smallest `t` among maximizers; `None` when `r = 0`).
pub fn f_value_with_split(g: u64, m: &BigRational, r: u64) -> (BigRational, Option<(u64, u64)>) {
    if r == 0 {
        return (BigRational::zero(), None);
    }
    let table = f_table(g, m, r - 1);
    let mut best: Option<(BigRational, (u64, u64))> = None;
    for t in 1..=r {
        let s = r - t;
        let candidate = table[s as usize].clone()
            + rat::int((t * t) as i64) * rat::int(g as i64)
            + cross_term(g, m, s, t);
        if best.as_ref().is_none_or(|(b, _)| candidate > *b) {
            best = Some((candidate, (s, t)));
        }
    }
    let (value, split) = best.expect("r >= 1 has at least the split t = r");
    (value, Some(split))
}

/// Closed form for `F`: `r^2 g` when `g >= M`, otherwise
/// `r(r+1)/2 g + r(r-1)/2 M`. The branches agree at `g = M`.
pub fn f_closed_form(g: u64, m: &BigRational, r: u64) -> BigRational {
    let g_rat = rat::int(g as i64);
    if g_rat >= *m {
        rat::int((r * r) as i64) * g_rat
    } else {
        rat::frac((r * (r + 1)) as i64, 2) * g_rat
            + rat::frac((r * r.saturating_sub(1)) as i64, 2) * m
    }
}

/// Table of `G(0), ..., G(r)` by the recursion
/// `G(r) = max F(t) + G(s) + s t (g + M)`, computed independently of the
/// identity `G = F`.
pub fn g_table(g: u64, m: &BigRational, r: u64) -> Vec<BigRational> {
    let f = f_table(g, m, r);
    let mut table: Vec<BigRational> = Vec::with_capacity(r as usize + 1);
    table.push(BigRational::zero());
    for n in 1..=r {
        let mut best: Option<BigRational> = None;
        for t in 1..=n {
            let s = n - t;
            let candidate = f[t as usize].clone() + table[s as usize].clone() + cross_term(g, m, s, t);
            if best.as_ref().is_none_or(|b| candidate > *b) {
                best = Some(candidate);
            }
        }
        table.push(best.expect("n >= 1 has at least the split t = n"));
    }
    table
}

/// `G(r)`, see [`g_table`].
pub fn g_value(g: u64, m: &BigRational, r: u64) -> BigRational {
    g_table(g, m, r).pop().expect("table is never empty")
}

/// `H_r(t) = F(t) + (r-t)^2 g + (g + M) t (r - t)` for `0 <= t <= r-1`.
/// Maximizing over `t` recovers `F(r)`.
pub fn h_value(g: u64, m: &BigRational, r: u64, t: u64) -> Result<BigRational, BoundError> {
    if r == 0 || t > r - 1 {
        return Err(BoundError::SplitOutOfRange { t, max: r.saturating_sub(1) });
    }
    let d = r - t;
    Ok(f_value(g, m, t) + rat::int((d * d) as i64) * rat::int(g as i64) + cross_term(g, m, t, d))
}

/// The superseded quartic recursion:
/// `h_g(1) = 1`, `h_g(r) - h_g(r-1) = r^3 - r^2 + r^4(g-1)/4 + r/2 + r^2 g^2 / 4 + 1/4`.
pub fn h_legacy(g: u64, r: u64) -> Result<BigRational, BoundError> {
    if r == 0 {
        return Err(BoundError::ZeroRank);
    }
    let g = rat::int(g as i64);
    let quarter = rat::frac(1, 4);
    let mut h = rat::int(1);
    for n in 2..=r {
        let n = rat::int(n as i64);
        let n2 = &n * &n;
        h += &n2 * &n - &n2
            + &n2 * &n2 * &quarter * (&g - rat::int(1))
            + &n / rat::int(2)
            + n2 * &g * &g * &quarter
            + &quarter;
    }
    Ok(h)
}

/// Upper bound from the superseded recursion: `floor(h_g(r)) + g`.
pub fn legacy_upper(g: u64, r: u64) -> Result<i64, BoundError> {
    Ok(rat::floor_i64(&h_legacy(g, r)?) + g as i64)
}

// ---------------------------------------------------------------------------
// Dimension of the coarse moduli space and the Ext bounds
// ---------------------------------------------------------------------------

/// `(r^2 - 1)(g - 1) + sum of flag dimensions`. Meaningful for `g >= 2`;
/// the caller records that hypothesis rather than erroring.
pub fn moduli_dimension(ctx: &ModuliContext, datum: &ParabolicDatum) -> i64 {
    let r = ctx.rank as i64;
    (r * r - 1) * (ctx.genus as i64 - 1) + total_flag_dimension(datum) as i64
}

/// Ext-space dimension bound for a semistable tensor product of
/// non-negative parabolic degree: `rF * rG * (g + M(D))`.
pub fn ext_bound_semistable(
    rank_f: u64,
    rank_g: u64,
    g: u64,
    datum: &ParabolicDatum,
) -> BigRational {
    rat::int((rank_f * rank_g) as i64) * (rat::int(g as i64) + datum_defect(datum))
}

/// Ext bound across the last step of a destabilizing filtration:
/// `r'(r - r')(g + M(D))` for `1 <= r' < r`.
pub fn ext_bound_hn(
    r_sub: u64,
    r: u64,
    g: u64,
    datum: &ParabolicDatum,
) -> Result<BigRational, BoundError> {
    if r_sub == 0 || r_sub >= r {
        return Err(BoundError::SubRankOutOfRange { r_sub, r });
    }
    Ok(rat::int((r_sub * (r - r_sub)) as i64) * (rat::int(g as i64) + datum_defect(datum)))
}

// ---------------------------------------------------------------------------
// Prime powers
// ---------------------------------------------------------------------------

/// A prime power `p^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
    pub value: u64,
}

/// The largest prime-power divisor of `n` (the full prime power `p^e`
/// for the prime maximizing `p^e`). `None` when `n = 1`.
pub fn best_prime_power(n: u64) -> Option<PrimePower> {
    assert!(n >= 1, "prime power search needs n >= 1");
    let mut best: Option<PrimePower> = None;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut exponent = 0;
            let mut value = 1;
            while rest.is_multiple_of(p) {
                rest /= p;
                exponent += 1;
                value *= p;
            }
            if best.is_none_or(|b| value > b.value) {
                best = Some(PrimePower { prime: p, exponent, value });
            }
        }
        p += 1;
    }
    if rest > 1 {
        // leftover prime factor, exponent 1
        if best.is_none_or(|b| rest > b.value) {
            best = Some(PrimePower { prime: rest, exponent: 1, value: rest });
        }
    }
    best
}

/// True iff `n = p^l` with `l >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    best_prime_power(n).map(|pp| pp.value == n).unwrap_or(false)
}

// ---------------------------------------------------------------------------
// Report structure
// ---------------------------------------------------------------------------

/// Identifier of the statement a bound entry comes from; these strings are
/// the stable wire vocabulary of the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "t:stable")]
    StableFixedDet,
    #[serde(rename = "c:stable")]
    StableFreeDet,
    #[serde(rename = "t:functorpoly")]
    Polystable,
    #[serde(rename = "p:ssbound")]
    Semistable,
    #[serde(rename = "t:full")]
    Full,
    #[serde(rename = "t:lower")]
    Lower,
    #[serde(rename = "intro-1")]
    Headline,
    #[serde(rename = "intro-2")]
    HeadlineParabolic,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::StableFixedDet => "t:stable",
            TheoremId::StableFreeDet => "c:stable",
            TheoremId::Polystable => "t:functorpoly",
            TheoremId::Semistable => "p:ssbound",
            TheoremId::Full => "t:full",
            TheoremId::Lower => "t:lower",
            TheoremId::Headline => "intro-1",
            TheoremId::HeadlineParabolic => "intro-2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
    /// An upper bound known to be attained.
    Equality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Locus {
    Stable,
    Polystable,
    Semistable,
    Full,
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Locus::Stable => "stable",
            Locus::Polystable => "polystable",
            Locus::Semistable => "semistable",
            Locus::Full => "full",
        };
        f.pad(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub pass: bool,
}

impl Hypothesis {
    fn new(name: &str, pass: bool) -> Self {
        Hypothesis { name: name.to_string(), pass }
    }
}

/// One bound with its origin identifier, hypothesis checks, and notes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub theorem: TheoremId,
    pub kind: BoundKind,
    pub locus: Locus,
    #[serde(with = "serde_rational")]
    pub value: BigRational,
    /// `floor(value)`; essential dimension is an integer, so flooring a
    /// non-integral upper bound keeps it valid. Lower bounds are integral
    /// by construction.
    pub value_floor: i64,
    pub hypotheses: Vec<Hypothesis>,
    pub notes: Vec<String>,
}

impl BoundEntry {
    fn new(theorem: TheoremId, kind: BoundKind, locus: Locus, value: BigRational) -> Self {
        let value_floor = rat::floor_i64(&value);
        BoundEntry {
            theorem,
            kind,
            locus,
            value,
            value_floor,
            hypotheses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn hypothesis(mut self, name: &str, pass: bool) -> Self {
        self.hypotheses.push(Hypothesis::new(name, pass));
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.notes.push(text.to_string());
        self
    }

    pub fn all_hypotheses_pass(&self) -> bool {
        self.hypotheses.iter().all(|h| h.pass)
    }

    pub fn is_lower(&self) -> bool {
        matches!(self.kind, BoundKind::Lower | BoundKind::Equality)
    }

    pub fn is_upper(&self) -> bool {
        matches!(self.kind, BoundKind::Upper | BoundKind::Equality)
    }
}

/// Full report: the input echoed back plus every applicable bound entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub context: ModuliContext,
    pub datum: ParabolicDatum,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    /// Cross-checks the report: within each locus, every lower bound whose
    /// hypotheses pass must not exceed any upper bound whose hypotheses
    /// pass. Returns human-readable descriptions of violations (empty in
    /// a correct engine).
    pub fn locus_consistency_violations(&self) -> Vec<String> {
        let mut violations = Vec::new();
        for locus in [Locus::Stable, Locus::Polystable, Locus::Semistable, Locus::Full] {
            let passing: Vec<&BoundEntry> = self
                .entries
                .iter()
                .filter(|e| e.locus == locus && e.all_hypotheses_pass())
                .collect();
            for lower in passing.iter().filter(|e| e.is_lower()) {
                for upper in passing.iter().filter(|e| e.is_upper()) {
                    if lower.value > upper.value {
                        violations.push(format!(
                            "locus {}: lower {} = {} exceeds upper {} = {}",
                            locus,
                            lower.theorem.as_str(),
                            rat::render(&lower.value),
                            upper.theorem.as_str(),
                            rat::render(&upper.value),
                        ));
                    }
                }
            }
        }
        violations
    }
}

// ---------------------------------------------------------------------------
// Per-theorem entries
// ---------------------------------------------------------------------------

const HYP_GENUS: &str = "g >= 2";
const HYP_GCD: &str = "l(D) > 1";
const HYP_POINTS: &str = "three rational points";
const HYP_PRIME_POWER: &str = "prime power divisor of l(D) exists";

/// Stable-locus upper bound. With fixed determinant:
/// `l(D) + (r^2-1)(g-1) + sum flags` (requires `l(D) > 1`; for `l(D) = 1`
/// the gerbe is neutral and the bound is the moduli dimension itself).
/// With free determinant: `l(D) - 1 + (r^2-1)(g-1) + sum flags + g`.
/// Marked as an equality when `l(D)` is a prime power `> 1`.
pub fn upper_stable(ctx: &ModuliContext, datum: &ParabolicDatum) -> BoundEntry {
    let l = datum_gcd(datum, ctx);
    let dim = moduli_dimension(ctx, datum);
    let attained = l > 1 && is_prime_power(l);
    let kind = if attained { BoundKind::Equality } else { BoundKind::Upper };
    if ctx.fixed_determinant {
        if l > 1 {
            BoundEntry::new(
                TheoremId::StableFixedDet,
                kind,
                Locus::Stable,
                rat::int(l as i64 + dim),
            )
            .hypothesis(HYP_GENUS, ctx.genus >= 2)
            .hypothesis(HYP_GCD, true)
        } else {
            BoundEntry::new(TheoremId::StableFixedDet, BoundKind::Upper, Locus::Stable, rat::int(dim))
                .hypothesis(HYP_GENUS, ctx.genus >= 2)
                .hypothesis(HYP_GCD, false)
                .note("l(D) = 1: neutral gerbe, universal bundle exists; bound is the moduli dimension")
        }
    } else {
        BoundEntry::new(
            TheoremId::StableFreeDet,
            kind,
            Locus::Stable,
            rat::int(l as i64 - 1 + dim + ctx.genus as i64),
        )
        .hypothesis(HYP_GENUS, ctx.genus >= 2)
    }
}

/// Polystable-locus upper bound: `r^2 g + sum flags`.
pub fn upper_polystable(ctx: &ModuliContext, datum: &ParabolicDatum) -> BoundEntry {
    let r = ctx.rank as i64;
    let value = rat::int(r * r * ctx.genus as i64 + total_flag_dimension(datum) as i64);
    BoundEntry::new(TheoremId::Polystable, BoundKind::Upper, Locus::Polystable, value)
        .hypothesis(HYP_GENUS, ctx.genus >= 2)
        .hypothesis(HYP_POINTS, ctx.has_three_rational_points)
}

/// Semistable-locus upper bound: `F(r) + sum flags`.
pub fn upper_semistable(ctx: &ModuliContext, datum: &ParabolicDatum) -> BoundEntry {
    let m = datum_defect(datum);
    let value = f_value(ctx.genus, &m, ctx.rank) + rat::int(total_flag_dimension(datum) as i64);
    BoundEntry::new(TheoremId::Semistable, BoundKind::Upper, Locus::Semistable, value)
        .hypothesis(HYP_GENUS, ctx.genus >= 2)
        .hypothesis(HYP_POINTS, ctx.has_three_rational_points)
}

/// Full-stack upper bound: `G(r) + sum flags`. Valid for every choice of
/// weights, since only `N(D)` enters through `M(D)`.
pub fn upper_full(ctx: &ModuliContext, datum: &ParabolicDatum) -> BoundEntry {
    let m = datum_defect(datum);
    let value = g_value(ctx.genus, &m, ctx.rank) + rat::int(total_flag_dimension(datum) as i64);
    BoundEntry::new(TheoremId::Full, BoundKind::Upper, Locus::Full, value)
        .hypothesis(HYP_GENUS, ctx.genus >= 2)
        .hypothesis(HYP_POINTS, ctx.has_three_rational_points)
}

/// Semistable-locus lower bounds through the largest prime power dividing
/// `l(D)`: `(r^2-1)(g-1) + p^l + sum flags` with fixed determinant and
/// `(r^2-1)(g-1) + p^l - 1 + g + sum flags` with free determinant.
/// No entries when `l(D) = 1` (no prime power exists to instantiate).
pub fn lower_semistable(ctx: &ModuliContext, datum: &ParabolicDatum) -> Vec<BoundEntry> {
    let l = datum_gcd(datum, ctx);
    let Some(pp) = best_prime_power(l.max(1)) else {
        return Vec::new();
    };
    let dim = moduli_dimension(ctx, datum);
    let degenerate = pp.value == ctx.rank;
    let mut fixed = BoundEntry::new(
        TheoremId::Lower,
        BoundKind::Lower,
        Locus::Semistable,
        rat::int(dim + pp.value as i64),
    )
    .hypothesis(HYP_GENUS, ctx.genus >= 2)
    .note("fixed determinant");
    let mut free = BoundEntry::new(
        TheoremId::Lower,
        BoundKind::Lower,
        Locus::Semistable,
        rat::int(dim + pp.value as i64 - 1 + ctx.genus as i64),
    )
    .hypothesis(HYP_GENUS, ctx.genus >= 2)
    .note("free determinant");
    if degenerate {
        // the auxiliary point has multiplicities {p^l, r - p^l}; the second
        // part vanishes when p^l = r and the extra flag is a single step
        fixed = fixed.note("degenerate auxiliary flag: p^l = r");
        free = free.note("degenerate auxiliary flag: p^l = r");
    }
    vec![fixed, free]
}

/// The headline sandwich for the full stack with free determinant:
/// lower `(r^2-1)(g-1) + p^l - 1 + g (+ sum flags)` against upper `r^2 g`
/// for the empty datum, or `G(r) + sum flags` with parabolic structure.
pub fn headline_bounds(ctx: &ModuliContext, datum: &ParabolicDatum) -> Vec<BoundEntry> {
    let l = datum_gcd(datum, ctx);
    let flags = total_flag_dimension(datum) as i64;
    let dim_term = {
        let r = ctx.rank as i64;
        (r * r - 1) * (ctx.genus as i64 - 1)
    };
    let theorem = if datum.is_empty() { TheoremId::Headline } else { TheoremId::HeadlineParabolic };
    let mut entries = Vec::new();

    if let Some(pp) = best_prime_power(l.max(1)) {
        entries.push(
            BoundEntry::new(
                theorem,
                BoundKind::Lower,
                Locus::Full,
                rat::int(dim_term + pp.value as i64 - 1 + ctx.genus as i64 + flags),
            )
            .hypothesis(HYP_GENUS, ctx.genus >= 2)
            .hypothesis(HYP_PRIME_POWER, true)
            .note("free determinant"),
        );
    }

    let upper = if datum.is_empty() {
        let r = ctx.rank as i64;
        BoundEntry::new(theorem, BoundKind::Upper, Locus::Full, rat::int(r * r * ctx.genus as i64))
    } else {
        let m = datum_defect(datum);
        BoundEntry::new(
            theorem,
            BoundKind::Upper,
            Locus::Full,
            g_value(ctx.genus, &m, ctx.rank) + rat::int(flags),
        )
        .note("stated upper omits the flag-dimension sum; reporting the full-stack bound G(r) + sum flags")
    };
    entries.push(
        upper
            .hypothesis(HYP_GENUS, ctx.genus >= 2)
            .hypothesis(HYP_POINTS, ctx.has_three_rational_points),
    );
    entries
}

/// Assembles the complete report in a fixed, deterministic order.
pub fn compute_report(ctx: &ModuliContext, datum: &ParabolicDatum) -> BoundReport {
    let mut entries = vec![
        upper_stable(ctx, datum),
        upper_polystable(ctx, datum),
        upper_semistable(ctx, datum),
        upper_full(ctx, datum),
    ];
    entries.extend(lower_semistable(ctx, datum));
    entries.extend(headline_bounds(ctx, datum));
    BoundReport {
        context: ctx.clone(),
        datum: datum.clone(),
        entries,
    }
}

/// Plain-text rendering of a report: derived invariants followed by one
/// line per entry. Byte-deterministic for a fixed input.
pub fn render_text(report: &BoundReport) -> String {
    use crate::datum::{support_degree, weight_lcm};
    use std::fmt::Write as _;

    let ctx = &report.context;
    let datum = &report.datum;
    let m = datum_defect(datum);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "context: g={} r={} d={} det={} three_points={}",
        ctx.genus,
        ctx.rank,
        ctx.degree,
        if ctx.fixed_determinant { "fixed" } else { "free" },
        ctx.has_three_rational_points,
    );
    let _ = writeln!(
        out,
        "datum: points={} N(D)={} M(D)={} l(D)={} flag_dim_sum={}",
        support_degree(datum),
        weight_lcm(datum),
        rat::render(&m),
        datum_gcd(datum, ctx),
        total_flag_dimension(datum),
    );
    let _ = writeln!(out, "moduli_dimension: {}", moduli_dimension(ctx, datum));
    let (f, split) = f_value_with_split(ctx.genus, &m, ctx.rank);
    let split_str = match split {
        Some((s, t)) => format!("s={s} t={t}"),
        None => "-".to_string(),
    };
    let _ = writeln!(out, "F(r)={} (maximizing split {})", rat::render(&f), split_str);
    let _ = writeln!(out, "entries:");
    for e in &report.entries {
        let hyps: Vec<String> = e
            .hypotheses
            .iter()
            .map(|h| format!("{}: {}", h.name, if h.pass { "pass" } else { "FAIL" }))
            .collect();
        let mut line = format!(
            "  {:<13} {:<8} {:<10} value={} floor={}",
            e.theorem.as_str(),
            match e.kind {
                BoundKind::Upper => "upper",
                BoundKind::Lower => "lower",
                BoundKind::Equality => "equality",
            },
            e.locus,
            rat::render(&e.value),
            e.value_floor,
        );
        if !hyps.is_empty() {
            line.push_str(&format!(" [{}]", hyps.join("; ")));
        }
        for n in &e.notes {
            line.push_str(&format!(" ({n})"));
        }
        let _ = writeln!(out, "{line}");
    }
    out
}
