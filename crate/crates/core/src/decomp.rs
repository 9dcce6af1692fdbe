//! Interval bounds on decomposition numbers `d_{yu} = [Δ_π(y) : L_π(u)]`
//! deduced from the sum formula, and their comparison with the
//! Kazhdan-Lusztig oracle.
//!
//! Rows are processed from the top of the ideal down. For a row `y` the sum
//! formula `S(y)` is rewritten in the L-basis through rows already processed,
//! and three rules apply to each `u > y`:
//!
//! * (a) `d_{yu} ≤ [S(y) : L(u)]`, since every copy of `L(u)` lies in the
//!   radical;
//! * (b) `d_{yt} ≥ d_{vt}` for `y ≤ v`, from the embedding `Δ(v) ⊆ Δ(y)`;
//! * (c) `S(y) = 0` forces the row to vanish, and otherwise some `d_{yu}`
//!   with `u > y` is positive.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::Element;
use crate::grothendieck::{sum_formula_rhs, BruhatIdeal, Valuation};
use crate::hecke::KlCache;
use crate::{Error, Result};

/// A closed interval of nonnegative integers; `hi == u64::MAX` means
/// unbounded. Arithmetic saturates at the unbounded end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub const UNBOUNDED: u64 = u64::MAX;

    pub fn new(lo: u64, hi: u64) -> Self {
        Interval { lo, hi }
    }

    pub fn exact(v: u64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn unbounded() -> Self {
        Interval { lo: 0, hi: Self::UNBOUNDED }
    }

    pub fn is_settled(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.hi != Self::UNBOUNDED
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// `c · [lo, hi]`.
    pub fn scale(self, c: u64) -> Interval {
        Interval { lo: self.lo.saturating_mul(c), hi: if c == 0 { 0 } else { self.hi.saturating_mul(c) } }
    }
}

impl core::ops::Add for Interval {
    type Output = Interval;

    fn add(self, other: Interval) -> Interval {
        Interval { lo: self.lo.saturating_add(other.lo), hi: self.hi.saturating_add(other.hi) }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bounded() {
            write!(f, "[{}, {}]", self.lo, self.hi)
        } else {
            write!(f, "[{}, ∞)", self.lo)
        }
    }
}

/// Bounds on the decomposition matrix of `A_π`.
#[derive(Clone, Debug)]
pub struct DecompositionBounds {
    ideal: BruhatIdeal,
    valuation: Valuation,
    /// Entries for every pair `y ≤ u` in the ideal, diagonal included.
    entries: BTreeMap<(Element, Element), Interval>,
    /// Pairs where the rules produced `lo > hi`. Never expected; the interval
    /// is kept as computed so the contradiction stays visible.
    contradictions: Vec<(Element, Element)>,
}

impl DecompositionBounds {
    pub fn ideal(&self) -> &BruhatIdeal {
        &self.ideal
    }

    pub fn valuation(&self) -> Valuation {
        self.valuation
    }

    /// The interval for `(y, u)`; `[0, 0]` when `y ≰ u`.
    pub fn entry(&self, y: &Element, u: &Element) -> Interval {
        self.entries.get(&(y.clone(), u.clone())).copied().unwrap_or(Interval::exact(0))
    }

    pub fn entries(&self) -> &BTreeMap<(Element, Element), Interval> {
        &self.entries
    }

    pub fn contradictions(&self) -> &[(Element, Element)] {
        &self.contradictions
    }

    pub fn open_entries(&self) -> Vec<(Element, Element)> {
        self.entries.iter().filter(|(_, iv)| !iv.is_settled()).map(|(k, _)| k.clone()).collect()
    }

    /// `(settled, total)` over pairs `y ≤ u`.
    pub fn settled_count(&self) -> (usize, usize) {
        let settled = self.entries.values().filter(|iv| iv.is_settled()).count();
        (settled, self.entries.len())
    }
}

/// Solves with the ideal's default linear extension, maximal elements first.
pub fn solve_bounds(ideal: &BruhatIdeal, val: Valuation) -> Result<DecompositionBounds> {
    let order: Vec<Element> = ideal.members().iter().rev().cloned().collect();
    run(ideal, val, &order, None)
}

/// Solves processing rows in `order`, which must list every member once and
/// never put `v` after `y` when `y < v`.
pub fn solve_bounds_in_order(ideal: &BruhatIdeal, val: Valuation, order: &[Element]) -> Result<DecompositionBounds> {
    check_order(ideal, order)?;
    run(ideal, val, order, None)
}

/// Reapplies the rules starting from existing bounds. A fixed point of the
/// solver is returned unchanged.
pub fn refine(bounds: &DecompositionBounds) -> Result<DecompositionBounds> {
    let order: Vec<Element> = bounds.ideal.members().iter().rev().cloned().collect();
    run(&bounds.ideal, bounds.valuation, &order, Some(&bounds.entries))
}

fn check_order(ideal: &BruhatIdeal, order: &[Element]) -> Result<()> {
    if order.len() != ideal.len() {
        return Err(Error::InvalidOrder);
    }
    let mut position = BTreeMap::new();
    for (i, y) in order.iter().enumerate() {
        if !ideal.contains(y) || position.insert(y.clone(), i).is_some() {
            return Err(Error::InvalidOrder);
        }
    }
    let sys = ideal.system();
    for y in order {
        for v in order {
            if y != v && sys.bruhat_leq(y, v) && position[v] > position[y] {
                return Err(Error::InvalidOrder);
            }
        }
    }
    Ok(())
}

fn run(
    ideal: &BruhatIdeal,
    val: Valuation,
    order: &[Element],
    initial: Option<&BTreeMap<(Element, Element), Interval>>,
) -> Result<DecompositionBounds> {
    let sys = ideal.system();
    let members = ideal.members();
    let mut entries: BTreeMap<(Element, Element), Interval> = BTreeMap::new();
    let mut contradictions = Vec::new();

    for y in order {
        let above: Vec<&Element> = members.iter().filter(|u| *u != y && sys.bruhat_leq(y, u)).collect();

        // S(y) in the L-basis, through rows already processed.
        let s_delta = sum_formula_rhs(ideal, y, val)?;
        let mut s_l: BTreeMap<&Element, Interval> = above.iter().map(|u| (*u, Interval::exact(0))).collect();
        for (z, &c) in s_delta.coeffs() {
            let c = u64::try_from(c).expect("sum formula coefficients are nonnegative");
            for u in &above {
                let d = if z == *u {
                    Interval::exact(1)
                } else {
                    entries.get(&(z.clone(), (*u).clone())).copied().unwrap_or(Interval::exact(0))
                };
                let slot = s_l.get_mut(u).expect("initialized for every u above y");
                *slot = *slot + d.scale(c);
            }
        }

        let mut row: BTreeMap<&Element, Interval> = above
            .iter()
            .map(|u| {
                let start = initial
                    .and_then(|m| m.get(&(y.clone(), (*u).clone())).copied())
                    .unwrap_or(Interval::unbounded());
                (*u, start)
            })
            .collect();

        for u in &above {
            let iv = row.get_mut(u).expect("row has every u above y");
            // (a)
            iv.hi = iv.hi.min(s_l[u].hi);
            // (b): any processed v with y ≤ v, including u itself.
            for v in members.iter().filter(|v| *v != y && sys.bruhat_leq(y, v)) {
                let d_vu = if v == *u {
                    Interval::exact(1)
                } else {
                    entries.get(&(v.clone(), (*u).clone())).copied().unwrap_or(Interval::exact(0))
                };
                iv.lo = iv.lo.max(d_vu.lo);
            }
        }

        // (c)
        if s_delta.is_zero() {
            for iv in row.values_mut() {
                iv.hi = 0;
            }
        } else if !row.is_empty() {
            let his: Vec<u64> = row.values().map(|iv| iv.hi).collect();
            let total = his.iter().fold(0u64, |a, &h| a.saturating_add(h));
            for (iv, &h) in row.values_mut().zip(&his) {
                let others = if total == u64::MAX { u64::MAX } else { total - h };
                if others == 0 {
                    iv.lo = iv.lo.max(1);
                }
            }
        }

        entries.insert((y.clone(), y.clone()), Interval::exact(1));
        for (u, iv) in row {
            if iv.lo > iv.hi {
                contradictions.push((y.clone(), u.clone()));
            }
            entries.insert((y.clone(), u.clone()), iv);
        }
    }

    Ok(DecompositionBounds { ideal: ideal.clone(), valuation: val, entries, contradictions })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleStatus {
    /// Settled, and equal to the oracle.
    ConsistentSettled,
    /// Open, and the interval contains the oracle.
    ConsistentOpen,
    /// The oracle lies outside the interval.
    Conflict,
}

impl OracleStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            OracleStatus::ConsistentSettled => "consistent-settled",
            OracleStatus::ConsistentOpen => "consistent-open",
            OracleStatus::Conflict => "conflict",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRow {
    pub y: Element,
    pub u: Element,
    pub bounds: Interval,
    pub oracle: u64,
    pub status: OracleStatus,
}

/// Compares each pair `y ≤ u` against `h_{y,u}(1)`.
pub fn kl_oracle_compare(bounds: &DecompositionBounds, cache: &mut KlCache) -> Vec<OracleRow> {
    let members = bounds.ideal.members();
    let mut rows = Vec::new();
    for y in members {
        for u in members {
            let Some(&iv) = bounds.entries.get(&(y.clone(), u.clone())) else { continue };
            let oracle = cache.kl_eval_at_one(y, u);
            let status = if !iv.contains(oracle) {
                OracleStatus::Conflict
            } else if iv.is_settled() {
                OracleStatus::ConsistentSettled
            } else {
                OracleStatus::ConsistentOpen
            };
            rows.push(OracleRow { y: y.clone(), u: u.clone(), bounds: iv, oracle, status });
        }
    }
    rows
}
