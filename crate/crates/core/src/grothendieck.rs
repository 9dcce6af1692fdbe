//! Bruhat ideals, cell-module dimensions of `A_π`, sum-formula right-hand
//! sides and the dimension map `Φ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::coxeter::{CoxeterSystem, Element, Root};
use crate::lightleaves::Expression;
use crate::{Error, Result};

/// A downward-closed subset of `W`, each member carrying its ShortLex word and
/// the subexpression counts of that word.
#[derive(Clone, Debug)]
pub struct BruhatIdeal {
    system: CoxeterSystem,
    /// Members sorted by length, then by word; a linear extension of Bruhat.
    order: Vec<Element>,
    words: BTreeMap<Element, Vec<usize>>,
    /// `dims[z][y] = dim Δ_z(y)` for the chosen word of `z`.
    dims: BTreeMap<Element, BTreeMap<Element, u64>>,
}

impl BruhatIdeal {
    /// `{z : z ≤ w}` where `w` is the element expressed by `word`. Also
    /// reports whether the word had to be normalized because it was not
    /// reduced.
    pub fn from_word(system: &CoxeterSystem, word: &[usize]) -> Result<(Self, bool)> {
        let w = system.word_to_element(word)?;
        let normalized = !system.is_reduced(word)?;
        Ok((Self::generated_by(system, &[w]), normalized))
    }

    /// `{z : z ≤ w}`.
    pub fn from_element(system: &CoxeterSystem, w: &Element) -> Self {
        Self::generated_by(system, core::slice::from_ref(w))
    }

    /// The smallest ideal containing `gens`.
    pub fn generated_by(system: &CoxeterSystem, gens: &[Element]) -> Self {
        let mut members = BTreeSet::new();
        members.insert(system.identity());
        for g in gens {
            let expr = Expression::new(system, system.reduced_word(g)).expect("reduced words are valid");
            members.extend(expr.endpoint_counts().into_keys());
        }
        Self::build(system, members)
    }

    /// Validates that `members` is nonempty and closed downward.
    pub fn from_members(system: &CoxeterSystem, members: impl IntoIterator<Item = Element>) -> Result<Self> {
        let members: BTreeSet<Element> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::NotAnIdeal);
        }
        for m in &members {
            if m.rank() != system.rank() {
                return Err(Error::DimensionMismatch { expected: system.rank(), found: m.rank() });
            }
            // Closure under covers suffices: every z < m is reached by a chain
            // of covers, and each cover drops one letter of a reduced word.
            for s in system.right_descents(m) {
                let below = system.mul_generator_right(m, s);
                if !members.contains(&below) {
                    return Err(Error::NotAnIdeal);
                }
            }
            let word = system.reduced_word(m);
            let expr = Expression::new(system, word).expect("reduced words are valid");
            if expr.endpoint_counts().keys().any(|z| !members.contains(z)) {
                return Err(Error::NotAnIdeal);
            }
        }
        Ok(Self::build(system, members))
    }

    fn build(system: &CoxeterSystem, members: BTreeSet<Element>) -> Self {
        let mut keyed: Vec<(usize, Vec<usize>, Element)> = members
            .into_iter()
            .map(|m| {
                let w = system.reduced_word(&m);
                (w.len(), w, m)
            })
            .collect();
        keyed.sort();
        let mut words = BTreeMap::new();
        let mut dims = BTreeMap::new();
        let mut order = Vec::with_capacity(keyed.len());
        for (_, word, m) in keyed {
            let expr = Expression::new(system, word.clone()).expect("reduced words are valid");
            dims.insert(m.clone(), expr.endpoint_counts());
            words.insert(m.clone(), word);
            order.push(m);
        }
        BruhatIdeal { system: system.clone(), order, words, dims }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    /// Members by increasing length (ties by word).
    pub fn members(&self) -> &[Element] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, y: &Element) -> bool {
        self.words.contains_key(y)
    }

    /// The chosen (ShortLex) reduced word of a member.
    pub fn word(&self, y: &Element) -> Option<&[usize]> {
        self.words.get(y).map(Vec::as_slice)
    }

    pub fn maximal_elements(&self) -> Vec<Element> {
        self.order
            .iter()
            .filter(|m| !self.order.iter().any(|z| z != *m && self.system.bruhat_leq(m, z)))
            .cloned()
            .collect()
    }

    /// `dim Δ_z(y)` for the chosen word of `z`, zero when `y ≰ z`.
    pub fn dim_delta_word(&self, z: &Element, y: &Element) -> u64 {
        self.dims.get(z).and_then(|d| d.get(y)).copied().unwrap_or(0)
    }

    fn check_member(&self, y: &Element) -> Result<()> {
        if self.contains(y) {
            Ok(())
        } else {
            Err(Error::NotInIdeal(self.system.reduced_word(y)))
        }
    }
}

/// How a positive root `β` is weighted in a sum formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    /// `ν(β) = 1`.
    Char0,
    /// `ν(β) = 1 + ν_p(height β)`, from `φ(α_s) = p`.
    CharP(u64),
}

impl Valuation {
    /// Rejects anything but an odd prime.
    pub fn char_p(p: u64) -> Result<Self> {
        if p <= 2 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Valuation::CharP(p))
    }

    pub fn value(&self, beta: &Root) -> u64 {
        match *self {
            Valuation::Char0 => 1,
            Valuation::CharP(p) => 1 + p_adic_valuation(&beta.height(), p),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn p_adic_valuation(n: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    if n.is_zero() {
        return 0;
    }
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Delta,
    L,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Delta => "Delta",
            Basis::L => "L",
        }
    }
}

/// An element of the Grothendieck group of `A_π`, as integer coefficients on
/// either the cell modules `Δ(y)` or the simples `L(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckVector {
    basis: Basis,
    coeffs: BTreeMap<Element, i64>,
}

impl GrothendieckVector {
    pub fn zero(basis: Basis) -> Self {
        GrothendieckVector { basis, coeffs: BTreeMap::new() }
    }

    pub fn basis_vector(basis: Basis, y: Element) -> Self {
        let mut v = Self::zero(basis);
        v.add_term(y, 1);
        v
    }

    pub fn from_coeffs(basis: Basis, coeffs: impl IntoIterator<Item = (Element, i64)>) -> Self {
        let mut v = Self::zero(basis);
        for (y, c) in coeffs {
            v.add_term(y, c);
        }
        v
    }

    pub fn add_term(&mut self, y: Element, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(y.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&y);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeff(&self, y: &Element) -> i64 {
        self.coeffs.get(y).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<Element, i64> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `dim Δ_π(y) = Σ_{z ∈ π} dim Δ_z(y)`.
pub fn dim_delta_pi(ideal: &BruhatIdeal, y: &Element) -> Result<u64> {
    ideal.check_member(y)?;
    Ok(ideal.order.iter().map(|z| ideal.dim_delta_word(z, y)).sum())
}

/// One summand of a sum formula: `ν(β) [Δ_π(s_β y)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumFormulaTerm {
    pub root: Root,
    pub target: Element,
    pub weight: u64,
}

/// The summands `ν(β) [Δ_π(s_β y)]` with `β > 0`, `s_β y > y` and
/// `s_β y ∈ π`, ordered as the ideal's members.
///
/// Only members of the ideal are scanned: `z = s_β y` must be a member, and
/// `β` is recovered as the root of the reflection `z y^{-1}`. This also works
/// for infinite groups.
pub fn sum_formula_terms(ideal: &BruhatIdeal, y: &Element, val: Valuation) -> Result<Vec<SumFormulaTerm>> {
    ideal.check_member(y)?;
    let sys = &ideal.system;
    let ly = sys.length(y);
    let y_inv = sys.inverse(y);
    let mut out = Vec::new();
    for z in &ideal.order {
        if sys.length(z) <= ly {
            continue;
        }
        if let Some(beta) = sys.root_of_reflection(&sys.multiply(z, &y_inv)) {
            out.push(SumFormulaTerm { weight: val.value(&beta), root: beta, target: z.clone() });
        }
    }
    Ok(out)
}

/// `Σ_{β>0, s_β y>y} ν(β) [Δ_π(s_β y)]` in the Δ-basis.
pub fn sum_formula_rhs(ideal: &BruhatIdeal, y: &Element, val: Valuation) -> Result<GrothendieckVector> {
    let mut v = GrothendieckVector::zero(Basis::Delta);
    for t in sum_formula_terms(ideal, y, val)? {
        v.add_term(t.target, i64::try_from(t.weight).expect("valuation fits in i64"));
    }
    Ok(v)
}

/// `Φ(v)`: the component at `z` is `Σ_y v_y dim Δ_z(y)`. Keys are the ideal's
/// members standing for their chosen words.
pub fn phi_map(ideal: &BruhatIdeal, v: &GrothendieckVector) -> Result<BTreeMap<Element, i64>> {
    if v.basis() != Basis::Delta {
        return Err(Error::BasisMismatch { expected: Basis::Delta.name() });
    }
    for y in v.coeffs().keys() {
        ideal.check_member(y)?;
    }
    Ok(ideal
        .order
        .iter()
        .map(|z| {
            let c = v
                .coeffs()
                .iter()
                .map(|(y, &c)| c * i64::try_from(ideal.dim_delta_word(z, y)).expect("dimension fits in i64"))
                .sum();
            (z.clone(), c)
        })
        .collect())
}

/// The matrix of `Φ` on the Δ-basis: row `y`, column `z`, both in the
/// ideal's member order.
pub fn phi_matrix(ideal: &BruhatIdeal) -> Vec<Vec<i64>> {
    ideal
        .order
        .iter()
        .map(|y| {
            ideal
                .order
                .iter()
                .map(|z| i64::try_from(ideal.dim_delta_word(z, y)).expect("dimension fits in i64"))
                .collect()
        })
        .collect()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn integer_determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::from(1);
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
