//! The Hecke algebra over `ℤ[q, q^{-1}]` and its Kazhdan-Lusztig basis.
//!
//! Conventions: `H_s^2 = 1 + (q^{-1} - q) H_s`, so `H_s^{-1} = H_s + (q - q^{-1})`,
//! the bar involution sends `q ↦ q^{-1}` and `H_w ↦ H_{w^{-1}}^{-1}`, and the
//! self-dual basis element is `H̲_w = H_w + Σ_{y<w} h_{y,w} H_y` with
//! `h_{y,w} ∈ qℤ[q]`. In particular `H̲_s = H_s + q`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::coxeter::{CoxeterSystem, Element};
use crate::{Error, Result};

/// `Σ c_e q^e` with integer coefficients; zero coefficients are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `Σ coeffs[i] q^i`, starting at `q^0`.
    pub fn from_polynomial_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i32::try_from(i).expect("degree fits in i32"), c.clone().into());
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<i32, BigInt> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPolynomial { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Lies in `qℤ[q]`: every exponent is at least 1.
    pub fn in_q_z_q(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 1)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Coefficients `[c_0, c_1, …, c_d]`; fails on negative exponents.
    pub fn to_polynomial_coeffs(&self) -> Result<Vec<BigInt>> {
        match self.min_degree() {
            None => Ok(Vec::new()),
            Some(d) if d < 0 => Err(Error::NotAPolynomial),
            Some(_) => {
                let top = self.max_degree().unwrap_or(0);
                Ok((0..=top).map(|e| self.coeff(e)).collect())
            }
        }
    }

    /// Keeps only the terms with positive exponent.
    pub fn positive_part(&self) -> Self {
        LaurentPolynomial { coeffs: self.coeffs.range(1..).map(|(&e, c)| (e, c.clone())).collect() }
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

/// Highest power first: `q^2 + 2q - 1 + q^-1`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Σ p_w H_w` over the standard basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: BTreeMap<Element, LaurentPolynomial>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `H_w`.
    pub fn standard(w: Element) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &LaurentPolynomial::one());
        h
    }

    pub fn add_term(&mut self, w: Element, p: &LaurentPolynomial) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: &Element) -> LaurentPolynomial {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Element, LaurentPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, p: &LaurentPolynomial) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &(c * p));
        }
        out
    }
}

impl AddAssign<&HeckeElement> for HeckeElement {
    fn add_assign(&mut self, rhs: &HeckeElement) {
        for (w, p) in &rhs.terms {
            self.add_term(w.clone(), p);
        }
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &rhs.scale(&LaurentPolynomial::monomial(-1, 0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `q^{-1} - q`.
fn quadratic_coeff() -> LaurentPolynomial {
    &LaurentPolynomial::q_inv() - &LaurentPolynomial::q()
}

/// `h · H_s` or `H_s · h`.
pub fn multiply_by_generator(system: &CoxeterSystem, h: &HeckeElement, s: usize, side: Side) -> HeckeElement {
    let c = quadratic_coeff();
    let mut out = HeckeElement::zero();
    for (w, p) in &h.terms {
        let (moved, down) = match side {
            Side::Right => (system.mul_generator_right(w, s), system.is_right_descent(w, s)),
            Side::Left => (system.mul_generator_left(s, w), system.is_left_descent(s, w)),
        };
        out.add_term(moved, p);
        if down {
            out.add_term(w.clone(), &(p * &c));
        }
    }
    out
}

/// The product `a · b`.
pub fn multiply(system: &CoxeterSystem, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (w, p) in &b.terms {
        let mut acc = a.scale(p);
        for s in system.reduced_word(w) {
            acc = multiply_by_generator(system, &acc, s, Side::Right);
        }
        out += &acc;
    }
    out
}

/// `Σ p_w H_w ↦ Σ bar(p_w) H_{w^{-1}}^{-1}`.
pub fn bar_involution(system: &CoxeterSystem, h: &HeckeElement) -> HeckeElement {
    // bar(H_{ws}) = bar(H_w)(H_s + q - q^{-1}) when ws > w.
    let shift = -&quadratic_coeff();
    let mut out = HeckeElement::zero();
    for (w, p) in &h.terms {
        let mut acc = HeckeElement::standard(system.identity());
        for s in system.reduced_word(w) {
            let next = multiply_by_generator(system, &acc, s, Side::Right);
            acc = &next + &acc.scale(&shift);
        }
        out += &acc.scale(&p.bar());
    }
    out
}

/// `H̲_s = H_s + q`.
pub fn kl_generator(system: &CoxeterSystem, s: usize) -> Result<HeckeElement> {
    let mut h = HeckeElement::standard(system.generator(s)?);
    h.add_term(system.identity(), &LaurentPolynomial::q());
    Ok(h)
}

/// Memoized Kazhdan-Lusztig basis elements of one system.
#[derive(Clone, Debug)]
pub struct KlCache {
    system: CoxeterSystem,
    basis: BTreeMap<Element, HeckeElement>,
}

impl KlCache {
    pub fn new(system: &CoxeterSystem) -> Self {
        KlCache { system: system.clone(), basis: BTreeMap::new() }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Cached basis elements, keyed by `w`.
    pub fn entries(&self) -> &BTreeMap<Element, HeckeElement> {
        &self.basis
    }

    /// Seeds the cache, e.g. from a file. The caller vouches for `h = H̲_w`.
    pub fn insert(&mut self, w: Element, h: HeckeElement) {
        self.basis.insert(w, h);
    }

    /// `H̲_w`, via `H̲_{x} H̲_s = H̲_{xs} + Σ_{y<x, ys<y} μ(y,x) H̲_y` where
    /// `s` is the last letter of the ShortLex word of `w` and `x = ws`.
    pub fn kl_basis_element(&mut self, w: &Element) -> HeckeElement {
        if let Some(h) = self.basis.get(w) {
            return h.clone();
        }
        let sys = self.system.clone();
        let result = if w.is_identity() {
            HeckeElement::standard(w.clone())
        } else {
            let word = sys.reduced_word(w);
            let s = *word.last().expect("non-identity has a nonempty word");
            let x = sys.mul_generator_right(w, s);
            let cx = self.kl_basis_element(&x);
            let mut prod = &multiply_by_generator(&sys, &cx, s, Side::Right) + &cx.scale(&LaurentPolynomial::q());
            for (y, h_yx) in cx.terms.iter().filter(|(y, _)| *y != &x) {
                if !sys.is_right_descent(y, s) {
                    continue;
                }
                let mu = h_yx.coeff(1);
                if mu.is_zero() {
                    continue;
                }
                let cy = self.kl_basis_element(y);
                prod = &prod - &cy.scale(&LaurentPolynomial::monomial(mu, 0));
            }
            prod
        };
        self.basis.insert(w.clone(), result.clone());
        result
    }

    /// `h_{y,w}`; zero unless `y ≤ w`.
    pub fn kl_polynomial(&mut self, y: &Element, w: &Element) -> LaurentPolynomial {
        self.kl_basis_element(w).coeff(y)
    }

    /// `h_{y,w}(1)`.
    pub fn kl_eval_at_one(&mut self, y: &Element, w: &Element) -> u64 {
        let v = self.kl_polynomial(y, w).eval_at_one();
        u64::try_from(v).expect("KL values at 1 are nonnegative")
    }
}
