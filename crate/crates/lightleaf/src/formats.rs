//! JSON shapes for command output. Words are 0-based generator indices.

use lightleaf_core::decomp::{Interval, OracleRow};
use lightleaf_core::gram::{Sign, SignedRootMonomial};
use lightleaf_core::grothendieck::{Basis, GrothendieckVector};
use lightleaf_core::lightleaves::{ContentEntry, SubexpressionRecord};
use lightleaf_core::{CoxeterSystem, Element, Root};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub fn root_json(root: &Root) -> Result<Vec<i64>, CliError> {
    root.to_i64s().ok_or_else(|| CliError::Inconsistent(format!("root {root} does not fit in 64-bit integers")))
}

fn element_json(system: &CoxeterSystem, w: &Element) -> Vec<usize> {
    system.reduced_word(w)
}

fn element_from_json(system: &CoxeterSystem, word: &[usize]) -> Result<Element, CliError> {
    Ok(system.word_to_element(word)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TabRecordJson {
    pub bits: Vec<u8>,
    pub symbols: Vec<String>,
    pub endpoint_word: Vec<usize>,
    /// One entry per letter; `null` for the zero entries of `U1`/`D1`.
    pub content: Vec<Option<Vec<i64>>>,
}

impl TabRecordJson {
    pub fn from_record(system: &CoxeterSystem, rec: &SubexpressionRecord) -> Result<Self, CliError> {
        let content = rec
            .content()
            .iter()
            .map(|c| match c {
                ContentEntry::Zero => Ok(None),
                ContentEntry::Root(r) => root_json(r).map(Some),
            })
            .collect::<Result<_, _>>()?;
        Ok(TabRecordJson {
            bits: rec.bits_u8(),
            symbols: rec.symbols().iter().map(|s| s.as_str().to_string()).collect(),
            endpoint_word: element_json(system, rec.endpoint()),
            content,
        })
    }
}

/// `+1`, `-1` or `"±"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignJson(pub Sign);

impl Serialize for SignJson {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Sign::Plus => serializer.serialize_i64(1),
            Sign::Minus => serializer.serialize_i64(-1),
            Sign::Undetermined => serializer.serialize_str("±"),
        }
    }
}

impl<'de> Deserialize<'de> for SignJson {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(1) => Ok(SignJson(Sign::Plus)),
            Raw::Int(-1) => Ok(SignJson(Sign::Minus)),
            Raw::Text(t) if t == "±" => Ok(SignJson(Sign::Undetermined)),
            _ => Err(de::Error::custom("sign must be 1, -1 or \"±\"")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub root: Vec<i64>,
    pub exp: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub sign: SignJson,
    /// Sorted lexicographically by root coordinates.
    pub factors: Vec<FactorJson>,
}

impl MonomialJson {
    pub fn from_monomial(m: &SignedRootMonomial) -> Result<Self, CliError> {
        let mut factors = m
            .exponents()
            .iter()
            .map(|(r, &exp)| Ok(FactorJson { root: root_json(r)?, exp }))
            .collect::<Result<Vec<_>, CliError>>()?;
        factors.sort_by(|a, b| a.root.cmp(&b.root));
        Ok(MonomialJson { sign: SignJson(m.sign()), factors })
    }

    pub fn to_monomial(&self, rank: usize) -> Result<SignedRootMonomial, CliError> {
        let mut factors = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            if f.root.len() != rank {
                return Err(CliError::Config(format!("root {:?} does not have {rank} coordinates", f.root)));
            }
            let r = Root::from_i64s(&f.root);
            if !r.is_positive() {
                return Err(CliError::Config(format!("factor {:?} is not a positive root", f.root)));
            }
            factors.push((r, f.exp));
        }
        Ok(SignedRootMonomial::from_parts(self.sign.0, factors))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisJson {
    Delta,
    L,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub element: Vec<usize>,
    pub c: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrothendieckJson {
    pub basis: BasisJson,
    /// Ordered by element length, then by word.
    pub coeffs: Vec<CoeffJson>,
}

impl GrothendieckJson {
    pub fn from_vector(system: &CoxeterSystem, v: &GrothendieckVector) -> Self {
        let mut coeffs: Vec<CoeffJson> =
            v.coeffs().iter().map(|(y, &c)| CoeffJson { element: element_json(system, y), c }).collect();
        coeffs.sort_by(|a, b| (a.element.len(), &a.element).cmp(&(b.element.len(), &b.element)));
        GrothendieckJson {
            basis: match v.basis() {
                Basis::Delta => BasisJson::Delta,
                Basis::L => BasisJson::L,
            },
            coeffs,
        }
    }

    pub fn to_vector(&self, system: &CoxeterSystem) -> Result<GrothendieckVector, CliError> {
        let basis = match self.basis {
            BasisJson::Delta => Basis::Delta,
            BasisJson::L => Basis::L,
        };
        let mut v = GrothendieckVector::zero(basis);
        for c in &self.coeffs {
            v.add_term(element_from_json(system, &c.element)?, c.c);
        }
        Ok(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompRowJson {
    pub y: Vec<usize>,
    pub u: Vec<usize>,
    pub lo: u64,
    /// `null` when unbounded.
    pub hi: Option<u64>,
    pub settled: bool,
    pub oracle: Option<u64>,
    pub status: Option<String>,
}

impl DecompRowJson {
    pub fn new(system: &CoxeterSystem, y: &Element, u: &Element, iv: Interval, oracle: Option<&OracleRow>) -> Self {
        DecompRowJson {
            y: element_json(system, y),
            u: element_json(system, u),
            lo: iv.lo,
            hi: iv.is_bounded().then_some(iv.hi),
            settled: iv.is_settled(),
            oracle: oracle.map(|r| r.oracle),
            status: oracle.map(|r| r.status.as_str().to_string()),
        }
    }
}
