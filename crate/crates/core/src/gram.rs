//! Gram determinants of cell modules, as signed monomials in roots.
//!
//! Two routes are provided. [`det_epsilon_product`] multiplies the per-letter
//! factors `ε_e^i` over `Tab(y)`:
//!
//! | symbol | factor             |
//! |--------|--------------------|
//! | `U0`   | `w^{<i} α`         |
//! | `D0`   | `(w^{<i} α)^{-1}`  |
//! | `U1`   | `1`                |
//! | `D1`   | `-1`               |
//!
//! [`det_shapovalov`] instead takes `∏ β^{dim Δ_w(s_β y)}` over positive roots
//! `β` with `s_β y > y`, and only determines the result up to sign.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, MulAssign};

use num_traits::One;

use crate::coxeter::{CoxeterSystem, Element, Root};
use crate::lightleaves::{Expression, SubexpressionRecord, Symbol};
use crate::Result;

/// Root systems with more positive roots than this are treated as infinite.
pub const FINITE_ROOT_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
    /// `±`: the sign is not determined.
    Undetermined,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Undetermined => Sign::Undetermined,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Undetermined => "±",
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Undetermined, _) | (_, Sign::Undetermined) => Sign::Undetermined,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

/// `±∏ β^{n_β}` over positive roots `β`, exponents possibly negative.
/// Zero exponents are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRootMonomial {
    sign: Sign,
    exponents: BTreeMap<Root, i64>,
}

impl SignedRootMonomial {
    pub fn one() -> Self {
        SignedRootMonomial { sign: Sign::Plus, exponents: BTreeMap::new() }
    }

    pub fn minus_one() -> Self {
        SignedRootMonomial { sign: Sign::Minus, exponents: BTreeMap::new() }
    }

    pub fn from_parts(sign: Sign, factors: impl IntoIterator<Item = (Root, i64)>) -> Self {
        let mut m = SignedRootMonomial { sign, exponents: BTreeMap::new() };
        for (r, e) in factors {
            m.mul_root_pow(&r, e);
        }
        m
    }

    /// The monomial `β` for a root of either sign; `-β` is stored as `-1·β`.
    pub fn from_root(root: &Root) -> Self {
        let mut m = Self::one();
        m.mul_root_pow(root, 1);
        m
    }

    /// Multiplies by `root^exp`, normalizing a negative root to its positive
    /// partner with one sign flip per unit of exponent.
    pub fn mul_root_pow(&mut self, root: &Root, exp: i64) {
        if exp == 0 {
            return;
        }
        debug_assert!(root.is_positive() || root.is_negative(), "not a root: {root}");
        let (pos, negated) = root.to_positive();
        if negated && exp % 2 != 0 {
            self.sign = self.sign.flip();
        }
        let slot = self.exponents.entry(pos.clone()).or_insert(0);
        *slot += exp;
        if *slot == 0 {
            self.exponents.remove(&pos);
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn exponents(&self) -> &BTreeMap<Root, i64> {
        &self.exponents
    }

    pub fn exponent(&self, root: &Root) -> i64 {
        self.exponents.get(root).copied().unwrap_or(0)
    }

    /// Total degree `Σ n_β`.
    pub fn degree(&self) -> i64 {
        self.exponents.values().sum()
    }

    /// All exponents are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.exponents.values().all(|&e| e >= 0)
    }

    pub fn inverse(&self) -> Self {
        SignedRootMonomial {
            sign: self.sign,
            exponents: self.exponents.iter().map(|(r, e)| (r.clone(), -e)).collect(),
        }
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    /// Equal up to sign.
    pub fn same_magnitude(&self, other: &Self) -> bool {
        self.exponents == other.exponents
    }
}

impl Default for SignedRootMonomial {
    fn default() -> Self {
        Self::one()
    }
}

impl MulAssign<&SignedRootMonomial> for SignedRootMonomial {
    fn mul_assign(&mut self, rhs: &SignedRootMonomial) {
        self.sign = self.sign * rhs.sign;
        for (r, &e) in &rhs.exponents {
            self.mul_root_pow(r, e);
        }
    }
}

impl Mul for &SignedRootMonomial {
    type Output = SignedRootMonomial;
    fn mul(self, rhs: &SignedRootMonomial) -> SignedRootMonomial {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl core::iter::Product for SignedRootMonomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |mut acc, m| {
            acc *= &m;
            acc
        })
    }
}

/// `+α^4`, `-α1^2·α2·(α1+α2)`, `±1`.
impl fmt::Display for SignedRootMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.sign.symbol())?;
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        // Simple roots first, by height, then α1 before α2.
        let mut factors: Vec<(&Root, i64)> = self.exponents.iter().map(|(r, &e)| (r, e)).collect();
        factors.sort_by(|a, b| a.0.height().cmp(&b.0.height()).then_with(|| b.0.cmp(a.0)));
        for (i, (root, e)) in factors.into_iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            let simple = root.coords().iter().filter(|c| !num_traits::Zero::is_zero(*c)).count() == 1
                && root.coords().iter().all(|c| num_traits::Zero::is_zero(c) || c.is_one());
            if simple {
                write!(f, "{root}")?;
            } else {
                write!(f, "({root})")?;
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The factors `ε_e^i`, one per letter.
pub fn epsilon_factors(rec: &SubexpressionRecord) -> Vec<SignedRootMonomial> {
    rec.symbols()
        .iter()
        .enumerate()
        .map(|(i, sym)| match sym {
            Symbol::U0 => SignedRootMonomial::from_root(&rec.letter_root(i)),
            Symbol::D0 => SignedRootMonomial::from_root(&rec.letter_root(i)).inverse(),
            Symbol::U1 => SignedRootMonomial::one(),
            Symbol::D1 => SignedRootMonomial::minus_one(),
        })
        .collect()
}

/// `γ_e = ∏_i ε_e^i`.
pub fn gamma_of(rec: &SubexpressionRecord) -> SignedRootMonomial {
    epsilon_factors(rec).into_iter().product()
}

/// `det <·,·>_y = ∏_{e ∈ Tab(y)} γ_e`, with an exact sign.
pub fn det_epsilon_product(expr: &Expression<'_>, y: &Element, guard: usize) -> Result<SignedRootMonomial> {
    Ok(expr.tab(y, guard)?.iter().map(gamma_of).product())
}

/// The epsilon-product determinant for every endpoint at once.
pub fn det_epsilon_all(expr: &Expression<'_>, guard: usize) -> Result<BTreeMap<Element, SignedRootMonomial>> {
    Ok(expr
        .all_subexpressions(guard)?
        .into_iter()
        .map(|(y, recs)| (y, recs.iter().map(gamma_of).product()))
        .collect())
}

/// How [`ShapovalovContext`] finds the roots `β` with `s_β y > y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSource {
    /// Scan the whole (finite) positive system.
    FullPositiveSystem,
    /// Scan reachable endpoints `z > y` and keep those with `z y^{-1}` a
    /// reflection. Only these can carry a nonzero exponent.
    ReachableEndpoints,
}

/// Precomputed data for the Shapovalov-type factorization over one system.
#[derive(Clone, Debug)]
pub struct ShapovalovContext<'a> {
    system: &'a CoxeterSystem,
    source: RootSource,
    reflections: Vec<(Root, Element)>,
}

impl<'a> ShapovalovContext<'a> {
    /// Uses the full positive system when it is finite, and reachable
    /// endpoints otherwise.
    pub fn new(system: &'a CoxeterSystem) -> Self {
        Self::with_source(system, RootSource::FullPositiveSystem)
            .unwrap_or_else(|_| ShapovalovContext {
                system,
                source: RootSource::ReachableEndpoints,
                reflections: Vec::new(),
            })
    }

    pub fn with_source(system: &'a CoxeterSystem, source: RootSource) -> Result<Self> {
        let reflections = match source {
            RootSource::FullPositiveSystem => system
                .finite_positive_roots(FINITE_ROOT_CAP)?
                .into_iter()
                .map(|b| {
                    let t = system.reflection_for_root(&b).expect("enumerated roots are roots");
                    (b, t)
                })
                .collect(),
            RootSource::ReachableEndpoints => Vec::new(),
        };
        Ok(ShapovalovContext { system, source, reflections })
    }

    pub fn source(&self) -> RootSource {
        self.source
    }

    /// `±∏ β^{dim Δ_w(s_β y)}` from precomputed endpoint counts of `w`.
    pub fn det_from_counts(&self, counts: &BTreeMap<Element, u64>, y: &Element) -> SignedRootMonomial {
        let sys = self.system;
        let ly = sys.length(y);
        let mut out = SignedRootMonomial::one().with_sign(Sign::Undetermined);
        let mut put = |beta: &Root, dim: u64| {
            let exp = i64::try_from(dim).expect("dimension fits in i64");
            out.mul_root_pow(beta, exp);
        };
        match self.source {
            RootSource::FullPositiveSystem => {
                for (beta, t) in &self.reflections {
                    let z = sys.multiply(t, y);
                    let Some(&dim) = counts.get(&z) else { continue };
                    if dim > 0 && sys.length(&z) > ly {
                        put(beta, dim);
                    }
                }
            }
            RootSource::ReachableEndpoints => {
                let y_inv = sys.inverse(y);
                for (z, &dim) in counts {
                    if dim == 0 || sys.length(z) <= ly {
                        continue;
                    }
                    if let Some(beta) = sys.root_of_reflection(&sys.multiply(z, &y_inv)) {
                        put(&beta, dim);
                    }
                }
            }
        }
        out
    }

    pub fn det(&self, expr: &Expression<'_>, y: &Element) -> SignedRootMonomial {
        self.det_from_counts(&expr.endpoint_counts(), y)
    }
}

/// The Shapovalov-type determinant; the sign is reported as undetermined.
pub fn det_shapovalov(expr: &Expression<'_>, y: &Element) -> SignedRootMonomial {
    ShapovalovContext::new(expr.system()).det(expr, y)
}

/// Both determinant routes agree up to sign.
pub fn check_shapovalov(expr: &Expression<'_>, y: &Element, guard: usize) -> Result<bool> {
    let eps = det_epsilon_product(expr, y, guard)?;
    Ok(eps.same_magnitude(&det_shapovalov(expr, y)))
}
