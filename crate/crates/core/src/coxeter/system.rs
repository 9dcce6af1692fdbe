use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Element, Root};
use crate::{Error, Result};

/// Coxeter matrix entry standing for `m_st = ∞`.
pub const INFINITY: u32 = 0;

/// A Coxeter system with an integral (crystallographic) realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    name: String,
    rank: usize,
    orders: Vec<u32>,
    cartan: Vec<i64>,
}

fn default_cartan(s: usize, t: usize, m: u32) -> Result<i64> {
    match m {
        2 => Ok(0),
        3 => Ok(-1),
        _ => Err(Error::CartanRequired { s, t, m }),
    }
}

fn compatible(m: u32, a_st: i64, a_ts: i64) -> bool {
    if a_st > 0 || a_ts > 0 {
        return false;
    }
    let product = a_st * a_ts;
    match m {
        2 => a_st == 0 && a_ts == 0,
        3 => product == 1,
        4 => product == 2,
        6 => product == 3,
        INFINITY => product >= 4,
        _ => false,
    }
}

impl CoxeterSystem {
    /// Validates the data and builds the system. When `cartan_matrix` is
    /// `None` the simply-laced default is used, which only exists for
    /// `m ∈ {2, 3}`.
    pub fn new(
        name: impl Into<String>,
        coxeter_matrix: &[Vec<u32>],
        cartan_matrix: Option<&[Vec<i64>]>,
    ) -> Result<Self> {
        let rank = coxeter_matrix.len();
        if rank == 0 {
            return Err(Error::EmptySystem);
        }
        if coxeter_matrix.iter().any(|row| row.len() != rank) {
            return Err(Error::Shape { what: "coxeter matrix", rank });
        }
        if let Some(c) = cartan_matrix {
            if c.len() != rank || c.iter().any(|row| row.len() != rank) {
                return Err(Error::Shape { what: "cartan matrix", rank });
            }
        }
        let mut orders = Vec::with_capacity(rank * rank);
        let mut cartan = Vec::with_capacity(rank * rank);
        for s in 0..rank {
            for t in 0..rank {
                let m = coxeter_matrix[s][t];
                if s == t {
                    if m != 1 {
                        return Err(Error::DiagonalOrder { s });
                    }
                } else {
                    if m != coxeter_matrix[t][s] {
                        return Err(Error::AsymmetricOrder { s: s.min(t), t: s.max(t) });
                    }
                    if !matches!(m, 2 | 3 | 4 | 6 | INFINITY) {
                        return Err(Error::UnsupportedOrder { s, t, m });
                    }
                }
                orders.push(m);
                let a = match cartan_matrix {
                    Some(c) => c[s][t],
                    None if s == t => 2,
                    None => default_cartan(s.min(t), s.max(t), m)?,
                };
                cartan.push(a);
            }
        }
        for s in 0..rank {
            if cartan[s * rank + s] != 2 {
                return Err(Error::CartanDiagonal { s });
            }
            for t in (s + 1)..rank {
                let m = orders[s * rank + t];
                let (a_st, a_ts) = (cartan[s * rank + t], cartan[t * rank + s]);
                if !compatible(m, a_st, a_ts) {
                    return Err(Error::CartanMismatch { s, t, m, a_st, a_ts });
                }
            }
        }
        Ok(CoxeterSystem { name: name.into(), rank, orders, cartan })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `m_st`, with `None` for infinity.
    pub fn order(&self, s: usize, t: usize) -> Option<u32> {
        match self.orders[s * self.rank + t] {
            INFINITY => None,
            m => Some(m),
        }
    }

    /// `a_st = <α_s^∨, α_t>`.
    pub fn cartan(&self, s: usize, t: usize) -> i64 {
        self.cartan[s * self.rank + t]
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        self.orders.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.cartan.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn check_generator(&self, s: usize) -> Result<()> {
        if s < self.rank {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index: s, rank: self.rank })
        }
    }

    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        word.iter().try_for_each(|&s| self.check_generator(s))
    }

    pub fn identity(&self) -> Element {
        Element::identity(self.rank)
    }

    pub fn generator(&self, s: usize) -> Result<Element> {
        self.check_generator(s)?;
        let mut w = self.identity();
        self.mul_generator_right_in_place(&mut w, s);
        Ok(w)
    }

    /// Product of the generator matrices in word order; the empty word is
    /// the identity.
    pub fn word_to_element(&self, word: &[usize]) -> Result<Element> {
        self.check_word(word)?;
        let mut w = self.identity();
        for &s in word {
            self.mul_generator_right_in_place(&mut w, s);
        }
        Ok(w)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        a.matmul(b)
    }

    /// `w·s`. Panics if `s` is out of range.
    pub fn mul_generator_right(&self, w: &Element, s: usize) -> Element {
        let mut out = w.clone();
        self.mul_generator_right_in_place(&mut out, s);
        out
    }

    /// `s·w`. Panics if `s` is out of range.
    pub fn mul_generator_left(&self, s: usize, w: &Element) -> Element {
        let n = self.rank;
        let mut out = w.clone();
        for j in 0..n {
            let mut pairing = BigInt::zero();
            for t in 0..n {
                let a = self.cartan(s, t);
                if a != 0 {
                    pairing += w.entry(t, j) * a;
                }
            }
            *out.entry_mut(s, j) -= pairing;
        }
        out
    }

    // Column operations: (w·σ_s) α_t = w α_t - a_st w α_s.
    pub(crate) fn mul_generator_right_in_place(&self, w: &mut Element, s: usize) {
        let n = self.rank;
        assert!(s < n, "generator {s} out of range for rank {n}");
        let col_s: Vec<BigInt> = (0..n).map(|i| w.entry(i, s).clone()).collect();
        for t in 0..n {
            if t == s {
                continue;
            }
            let a = self.cartan(s, t);
            if a == 0 {
                continue;
            }
            for (i, c) in col_s.iter().enumerate() {
                *w.entry_mut(i, t) -= c * a;
            }
        }
        for i in 0..n {
            let e = w.entry_mut(i, s);
            *e = -core::mem::take(e);
        }
    }

    pub fn apply(&self, w: &Element, beta: &Root) -> Result<Root> {
        if beta.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: beta.rank() });
        }
        if w.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: w.rank() });
        }
        Ok(Root::new(w.apply_vec(beta.coords())))
    }

    /// `s` is a right descent of `w` iff `w·α_s` is negative iff `ws < w`.
    pub fn is_right_descent(&self, w: &Element, s: usize) -> bool {
        w.column_is_negative(s)
    }

    pub fn right_descents(&self, w: &Element) -> Vec<usize> {
        (0..self.rank).filter(|&s| w.column_is_negative(s)).collect()
    }

    pub fn left_descents(&self, w: &Element) -> Vec<usize> {
        self.right_descents(&self.inverse(w))
    }

    pub fn is_left_descent(&self, s: usize, w: &Element) -> bool {
        self.is_right_descent(&self.inverse(w), s)
    }

    fn first_right_descent(&self, w: &Element) -> Option<usize> {
        (0..self.rank).find(|&s| w.column_is_negative(s))
    }

    // Repeatedly strips the smallest right descent. Returns the stripped
    // letters p with w·p_0·p_1·… = 1, i.e. w^{-1} = p_0 p_1 ….
    fn strip_right(&self, w: &Element) -> Vec<usize> {
        let cap = 10usize
            .saturating_mul(self.rank)
            .saturating_mul(w.abs_mass().saturating_add(1));
        let mut cur = w.clone();
        let mut letters = Vec::new();
        while let Some(s) = self.first_right_descent(&cur) {
            assert!(
                letters.len() < cap,
                "descent stripping did not terminate; the Cartan data is not a Coxeter realization"
            );
            self.mul_generator_right_in_place(&mut cur, s);
            letters.push(s);
        }
        debug_assert!(cur.is_identity(), "no descents but not the identity");
        letters
    }

    pub fn length(&self, w: &Element) -> usize {
        self.strip_right(w).len()
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let letters = self.strip_right(w);
        let mut inv = self.identity();
        for &s in &letters {
            self.mul_generator_right_in_place(&mut inv, s);
        }
        inv
    }

    /// The ShortLex-minimal reduced word for `w` (repeatedly taking the
    /// smallest left descent).
    pub fn reduced_word(&self, w: &Element) -> Vec<usize> {
        let inv = self.inverse(w);
        self.strip_right(&inv)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        let w = self.word_to_element(word)?;
        Ok(self.length(&w) == word.len())
    }

    /// Bruhat order by descent recursion: pick a right descent `s` of `y`;
    /// then `x ≤ y` iff `xs ≤ ys` (when `s` is a descent of `x`) or `x ≤ ys`.
    pub fn bruhat_leq(&self, x: &Element, y: &Element) -> bool {
        let mut x = x.clone();
        let mut y = y.clone();
        let mut lx = self.length(&x);
        let mut ly = self.length(&y);
        loop {
            if lx == 0 {
                return true;
            }
            if lx > ly {
                return false;
            }
            let s = self.first_right_descent(&y).expect("nonidentity element has a descent");
            if self.is_right_descent(&x, s) {
                self.mul_generator_right_in_place(&mut x, s);
                lx -= 1;
            }
            self.mul_generator_right_in_place(&mut y, s);
            ly -= 1;
        }
    }

    fn pairing(&self, s: usize, v: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (t, c) in v.iter().enumerate() {
            let a = self.cartan(s, t);
            if a != 0 && !c.is_zero() {
                acc += c * a;
            }
        }
        acc
    }

    fn simple_index(v: &[BigInt]) -> Option<usize> {
        let mut found = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_one() || found.is_some() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    /// Writes a root as `β = z·α_t`, returning `(word of z, t)`. The word is
    /// found by height descent, so it is as short as the height allows.
    pub fn root_decomposition(&self, beta: &Root) -> Result<(Vec<usize>, usize)> {
        if beta.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: beta.rank() });
        }
        let not_a_root = || Error::NotARoot(beta.to_string());
        let (mut cur, _) = beta.to_positive();
        if !cur.is_positive() {
            return Err(not_a_root());
        }
        let mut path = Vec::new();
        loop {
            if let Some(t) = Self::simple_index(cur.coords()) {
                return Ok((path, t));
            }
            let (s, p) = (0..self.rank)
                .map(|s| (s, self.pairing(s, cur.coords())))
                .find(|(_, p)| p.is_positive())
                .ok_or_else(not_a_root)?;
            let mut next = cur.coords().to_vec();
            next[s] -= p;
            cur = Root::new(next);
            if !cur.is_positive() {
                return Err(not_a_root());
            }
            path.push(s);
        }
    }

    /// The reflection `s_β = z s_t z^{-1}` where `β = ±z·α_t`.
    pub fn reflection_for_root(&self, beta: &Root) -> Result<Element> {
        let (path, t) = self.root_decomposition(beta)?;
        let mut word = path.clone();
        word.push(t);
        word.extend(path.iter().rev());
        self.word_to_element(&word)
    }

    /// If `t` is a reflection, its positive root.
    ///
    /// Every column of `t - 1` is a multiple of the root; the candidate is the
    /// primitive vector on that line, which is then checked by rebuilding its
    /// reflection.
    pub fn root_of_reflection(&self, t: &Element) -> Option<Root> {
        let n = self.rank;
        let col = (0..n).find_map(|j| {
            let mut v: Vec<BigInt> = (0..n).map(|i| t.entry(i, j).clone()).collect();
            v[j] -= 1;
            (!v.iter().all(Zero::is_zero)).then_some(v)
        })?;
        let g = col.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let mut beta = Root::new(col.into_iter().map(|c| c / &g).collect());
        if beta.is_negative() {
            beta = -beta;
        }
        if !beta.is_positive() {
            return None;
        }
        match self.reflection_for_root(&beta) {
            Ok(r) if &r == t => Some(beta),
            _ => None,
        }
    }

    /// All positive roots `u·α_s` with `length(u) < length_bound`, ordered by
    /// height and then with larger leading coordinates first (`α1` before `α2`).
    pub fn enumerate_positive_roots(&self, length_bound: usize) -> Vec<Root> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        for s in 0..self.rank {
            let r = Root::simple(self.rank, s);
            seen.insert(r.clone());
            queue.push_back((r, 0usize));
        }
        while let Some((r, depth)) = queue.pop_front() {
            if depth + 1 >= length_bound {
                continue;
            }
            for s in 0..self.rank {
                let mut v = r.coords().to_vec();
                let p = self.pairing(s, &v);
                if p.is_zero() {
                    continue;
                }
                v[s] -= p;
                let next = Root::new(v);
                if seen.insert(next.clone()) {
                    queue.push_back((next, depth + 1));
                }
            }
        }
        let mut out: Vec<Root> = seen.into_iter().filter(Root::is_positive).collect();
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        out
    }

    /// The full positive system, if it has at most `cap` roots.
    pub fn finite_positive_roots(&self, cap: usize) -> Result<Vec<Root>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        for s in 0..self.rank {
            let r = Root::simple(self.rank, s);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for s in 0..self.rank {
                let mut v = r.coords().to_vec();
                let p = self.pairing(s, &v);
                if p.is_zero() || Self::simple_index(&v) == Some(s) {
                    continue;
                }
                v[s] -= p;
                let next = Root::new(v);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::InfiniteRootSystem(cap));
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<Root> = seen.into_iter().collect();
        out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        Ok(out)
    }

    /// Elements of length at most `max_len`, ordered by length and then by
    /// canonical word.
    pub fn elements_up_to_length(&self, max_len: usize) -> Vec<Element> {
        let mut all = alloc::vec![self.identity()];
        let mut level: BTreeSet<Element> = BTreeSet::new();
        level.insert(self.identity());
        for _ in 0..max_len {
            let mut next = BTreeSet::new();
            for w in &level {
                for s in 0..self.rank {
                    if !self.is_right_descent(w, s) {
                        next.insert(self.mul_generator_right(w, s));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            let mut sorted: Vec<(Vec<usize>, Element)> =
                next.iter().map(|w| (self.reduced_word(w), w.clone())).collect();
            sorted.sort();
            all.extend(sorted.into_iter().map(|(_, w)| w));
            level = next;
        }
        all
    }

    /// All of `W`, provided the root system is finite with at most `cap`
    /// positive roots.
    pub fn finite_elements(&self, cap: usize) -> Result<Vec<Element>> {
        let longest = self.finite_positive_roots(cap)?.len();
        Ok(self.elements_up_to_length(longest))
    }

    /// Pairs `(s, t)` with `m_st < ∞` for which `(σ_s σ_t)^{m_st}` is not the
    /// identity matrix. Empty for a valid realization.
    pub fn braid_relation_failures(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for s in 0..self.rank {
            for t in (s + 1)..self.rank {
                let Some(m) = self.order(s, t) else { continue };
                let mut w = self.identity();
                for _ in 0..m {
                    self.mul_generator_right_in_place(&mut w, s);
                    self.mul_generator_right_in_place(&mut w, t);
                }
                if !w.is_identity() {
                    bad.push((s, t));
                }
            }
        }
        bad
    }
}
