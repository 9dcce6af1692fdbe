//! Subexpressions of a fixed expression and the data attached to them.
//!
//! For an expression `s_{i_1} … s_{i_k}` and a 0/1 vector `e`, the prefix
//! endpoints are `w_0 = 1` and `w_j = w_{j-1} s_{i_j}^{e_j}`. Position `j` is
//! labelled `U` when `w_{j-1} s_{i_j} > w_{j-1}` and `D` otherwise, followed by
//! the bit `e_j`. These labels index light leaves; `Tab(y)` is the set of `e`
//! with endpoint `y`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::coxeter::{CoxeterSystem, Element, Root};
use crate::{Error, Result};

/// Default bound on the expression length for explicit `Tab(y)` enumeration.
pub const DEFAULT_TAB_GUARD: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    U0,
    U1,
    D0,
    D1,
}

impl Symbol {
    fn new(up: bool, bit: bool) -> Self {
        match (up, bit) {
            (true, false) => Symbol::U0,
            (true, true) => Symbol::U1,
            (false, false) => Symbol::D0,
            (false, true) => Symbol::D1,
        }
    }

    pub fn is_up(self) -> bool {
        matches!(self, Symbol::U0 | Symbol::U1)
    }

    pub fn bit(self) -> bool {
        matches!(self, Symbol::U1 | Symbol::D1)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::U0 => "U0",
            Symbol::U1 => "U1",
            Symbol::D0 => "D0",
            Symbol::D1 => "D1",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "U0" => Some(Symbol::U0),
            "U1" => Some(Symbol::U1),
            "D0" => Some(Symbol::D0),
            "D1" => Some(Symbol::D1),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A word in the generators of a fixed system; not necessarily reduced.
#[derive(Clone, Debug)]
pub struct Expression<'a> {
    system: &'a CoxeterSystem,
    word: Vec<usize>,
}

/// One subexpression together with its symbols and prefix endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubexpressionRecord {
    word: Vec<usize>,
    bits: Vec<bool>,
    symbols: Vec<Symbol>,
    prefix_endpoints: Vec<Element>,
}

impl SubexpressionRecord {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bits_u8(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `w_0 = 1, w_1, …, w_k`.
    pub fn prefix_endpoints(&self) -> &[Element] {
        &self.prefix_endpoints
    }

    pub fn endpoint(&self) -> &Element {
        self.prefix_endpoints.last().expect("w_0 is always present")
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `w_{a-1}·α_{i_a}` for 0-based position `a`: the signed root attached to
    /// that letter.
    pub fn letter_root(&self, a: usize) -> Root {
        self.prefix_endpoints[a].column(self.word[a])
    }

    /// The Jucys-Murphy content vector: zero at `U1/D1`, and the signed root
    /// `w_{a-1}·α_{i_a}` at `U0/D0`.
    pub fn content(&self) -> Vec<ContentEntry> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(a, sym)| {
                if sym.bit() {
                    ContentEntry::Zero
                } else {
                    ContentEntry::Root(self.letter_root(a))
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContentEntry {
    Zero,
    Root(Root),
}

impl fmt::Display for ContentEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContentEntry::Zero => f.write_str("0"),
            ContentEntry::Root(r) => write!(f, "{r}"),
        }
    }
}

impl<'a> Expression<'a> {
    pub fn new(system: &'a CoxeterSystem, word: Vec<usize>) -> Result<Self> {
        system.check_word(&word)?;
        Ok(Expression { system, word })
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.system
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn element(&self) -> Element {
        self.system.word_to_element(&self.word).expect("word was validated")
    }

    /// The expression with its last letter removed.
    pub fn drop_last(&self) -> Option<Expression<'a>> {
        let (_, rest) = self.word.split_last()?;
        Some(Expression { system: self.system, word: rest.to_vec() })
    }

    pub fn symbols(&self, bits: &[u8]) -> Result<SubexpressionRecord> {
        if bits.len() != self.word.len() {
            return Err(Error::DimensionMismatch { expected: self.word.len(), found: bits.len() });
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidBit);
        }
        let bits: Vec<bool> = bits.iter().map(|&b| b == 1).collect();
        Ok(self.record_from_bools(bits))
    }

    fn record_from_bools(&self, bits: Vec<bool>) -> SubexpressionRecord {
        let mut prefix = Vec::with_capacity(bits.len() + 1);
        let mut symbols = Vec::with_capacity(bits.len());
        let mut cur = self.system.identity();
        prefix.push(cur.clone());
        for (&s, &bit) in self.word.iter().zip(&bits) {
            let up = !self.system.is_right_descent(&cur, s);
            symbols.push(Symbol::new(up, bit));
            if bit {
                cur = self.system.mul_generator_right(&cur, s);
            }
            prefix.push(cur.clone());
        }
        SubexpressionRecord { word: self.word.clone(), bits, symbols, prefix_endpoints: prefix }
    }

    /// `Tab(y)`: all subexpressions with endpoint `y`, in lexicographic order
    /// of the bit vector. Refuses expressions longer than `guard`.
    pub fn tab(&self, y: &Element, guard: usize) -> Result<Vec<SubexpressionRecord>> {
        let mut out = Vec::new();
        self.walk_subexpressions(guard, Some(y), |rec| out.push(rec))?;
        Ok(out)
    }

    /// Every subexpression, grouped by endpoint.
    pub fn all_subexpressions(&self, guard: usize) -> Result<BTreeMap<Element, Vec<SubexpressionRecord>>> {
        let mut out: BTreeMap<Element, Vec<SubexpressionRecord>> = BTreeMap::new();
        self.walk_subexpressions(guard, None, |rec| {
            out.entry(rec.endpoint().clone()).or_default().push(rec)
        })?;
        Ok(out)
    }

    // Depth-first, 0 before 1, so leaves come out in lexicographic order.
    // With a target, branches whose length cannot reach it are pruned.
    fn walk_subexpressions(
        &self,
        guard: usize,
        target: Option<&Element>,
        mut visit: impl FnMut(SubexpressionRecord),
    ) -> Result<()> {
        let k = self.word.len();
        if k > guard {
            return Err(Error::GuardExceeded { len: k, guard });
        }
        let target_len = target.map(|y| self.system.length(y));
        let mut bits = Vec::with_capacity(k);
        let mut symbols = Vec::with_capacity(k);
        let mut prefix = alloc::vec![self.system.identity()];
        self.walk(0, 0, target, target_len, &mut bits, &mut symbols, &mut prefix, &mut visit);
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        j: usize,
        cur_len: usize,
        target: Option<&Element>,
        target_len: Option<usize>,
        bits: &mut Vec<bool>,
        symbols: &mut Vec<Symbol>,
        prefix: &mut Vec<Element>,
        visit: &mut impl FnMut(SubexpressionRecord),
    ) {
        let k = self.word.len();
        if let Some(tl) = target_len {
            if cur_len.abs_diff(tl) > k - j {
                return;
            }
        }
        if j == k {
            let cur = prefix.last().unwrap();
            if target.is_none_or(|y| y == cur) {
                visit(SubexpressionRecord {
                    word: self.word.clone(),
                    bits: bits.clone(),
                    symbols: symbols.clone(),
                    prefix_endpoints: prefix.clone(),
                });
            }
            return;
        }
        let s = self.word[j];
        let cur = prefix.last().unwrap().clone();
        let up = !self.system.is_right_descent(&cur, s);
        for bit in [false, true] {
            bits.push(bit);
            symbols.push(Symbol::new(up, bit));
            let (next, next_len) = if bit {
                let n = self.system.mul_generator_right(&cur, s);
                (n, if up { cur_len + 1 } else { cur_len - 1 })
            } else {
                (cur.clone(), cur_len)
            };
            prefix.push(next);
            self.walk(j + 1, next_len, target, target_len, bits, symbols, prefix, visit);
            prefix.pop();
            symbols.pop();
            bits.pop();
        }
    }

    /// Number of subexpressions ending at each reachable element, by a prefix
    /// dynamic program over group elements.
    pub fn endpoint_counts(&self) -> BTreeMap<Element, u64> {
        let mut states: BTreeMap<Element, u64> = BTreeMap::new();
        states.insert(self.system.identity(), 1);
        for &s in &self.word {
            let mut next: BTreeMap<Element, u64> = BTreeMap::new();
            for (w, count) in states {
                let ws = self.system.mul_generator_right(&w, s);
                add_count(&mut next, ws, count);
                add_count(&mut next, w, count);
            }
            states = next;
        }
        states
    }

    /// The rank of the cell module `Δ_w(y)`: the number of subexpressions
    /// expressing `y`. No enumeration guard applies.
    pub fn dim_delta(&self, y: &Element) -> u64 {
        self.endpoint_counts().get(y).copied().unwrap_or(0)
    }
}

fn add_count(map: &mut BTreeMap<Element, u64>, key: Element, count: u64) {
    let slot = map.entry(key).or_insert(0);
    *slot = slot.checked_add(count).expect("subexpression count overflows u64");
}

fn check_same_shape(e: &SubexpressionRecord, f: &SubexpressionRecord) -> Result<()> {
    if e.word != f.word {
        return Err(Error::DimensionMismatch { expected: e.len(), found: f.len() });
    }
    Ok(())
}

/// Path dominance: `e ⪯ f` iff `w_i(e) ≤ w_i(f)` in the Bruhat order for
/// every prefix.
pub fn path_dominance_leq(
    system: &CoxeterSystem,
    e: &SubexpressionRecord,
    f: &SubexpressionRecord,
) -> Result<bool> {
    check_same_shape(e, f)?;
    Ok(e
        .prefix_endpoints
        .iter()
        .zip(&f.prefix_endpoints)
        .skip(1)
        .all(|(a, b)| system.bruhat_leq(a, b)))
}

/// The first (0-based) position where `e` and `f` differ, provided their
/// contents differ there; `None` would contradict the separation property.
pub fn separation_witness(e: &SubexpressionRecord, f: &SubexpressionRecord) -> Result<Option<usize>> {
    check_same_shape(e, f)?;
    let i = e
        .bits
        .iter()
        .zip(&f.bits)
        .position(|(a, b)| a != b)
        .ok_or(Error::IdenticalSubexpressions)?;
    let content_at = |r: &SubexpressionRecord| {
        if r.bits[i] {
            ContentEntry::Zero
        } else {
            ContentEntry::Root(r.letter_root(i))
        }
    };
    Ok((content_at(e) != content_at(f)).then_some(i))
}
