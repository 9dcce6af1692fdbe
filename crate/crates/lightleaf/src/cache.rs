//! On-disk Kazhdan-Lusztig cache.
//!
//! ```json
//! {"format_version": 1, "system": "A2",
//!  "pairs": [{"y": [], "w": [0], "coeffs": [0, 1]}, ...]}
//! ```
//!
//! Each pair stores `h_{y,w}` as coefficients of `q^0, q^1, …`. Words are the
//! 0-based ShortLex words of the elements.

use std::collections::BTreeMap;
use std::path::Path;

use lightleaf_core::hecke::{bar_involution, HeckeElement, KlCache, LaurentPolynomial};
use lightleaf_core::{CoxeterSystem, Element};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlPairJson {
    pub y: Vec<usize>,
    pub w: Vec<usize>,
    pub coeffs: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlCacheFile {
    pub format_version: u32,
    pub system: String,
    pub pairs: Vec<KlPairJson>,
}

impl KlCacheFile {
    pub fn from_cache(cache: &KlCache) -> Result<Self, CliError> {
        let sys = cache.system();
        let mut pairs = Vec::new();
        for (w, h) in cache.entries() {
            let w_word = sys.reduced_word(w);
            for (y, p) in h.terms() {
                let coeffs = p
                    .to_polynomial_coeffs()
                    .map_err(|_| CliError::Inconsistent(format!("h_(y,w) for w = {w_word:?} has negative powers")))?
                    .iter()
                    .map(|c| i64::try_from(c).map_err(|_| CliError::Inconsistent("KL coefficient overflow".into())))
                    .collect::<Result<Vec<_>, _>>()?;
                pairs.push(KlPairJson { y: sys.reduced_word(y), w: w_word.clone(), coeffs });
            }
        }
        pairs.sort_by(|a, b| {
            (a.w.len(), &a.w, a.y.len(), &a.y).cmp(&(b.w.len(), &b.w, b.y.len(), &b.y))
        });
        Ok(KlCacheFile { format_version: FORMAT_VERSION, system: sys.name().to_string(), pairs })
    }

    /// Rebuilds the cache, checking the version, the system name, and that
    /// every stored element is bar-invariant with leading term `H_w`.
    pub fn into_cache(self, system: &CoxeterSystem) -> Result<KlCache, CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Config(format!(
                "cache format version {} is not supported (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        if self.system != system.name() {
            return Err(CliError::Config(format!(
                "cache was written for system {:?}, not {:?}",
                self.system,
                system.name()
            )));
        }
        let mut by_w: BTreeMap<Element, HeckeElement> = BTreeMap::new();
        for pair in &self.pairs {
            let w = system.word_to_element(&pair.w)?;
            let y = system.word_to_element(&pair.y)?;
            let p = LaurentPolynomial::from_polynomial_coeffs(
                &pair.coeffs.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
            );
            by_w.entry(w).or_default().add_term(y, &p);
        }
        let mut cache = KlCache::new(system);
        for (w, h) in by_w {
            if h.coeff(&w) != LaurentPolynomial::one() || bar_involution(system, &h) != h {
                return Err(CliError::Config(format!(
                    "cache entry for w = {:?} is not a Kazhdan-Lusztig basis element",
                    system.reduced_word(&w)
                )));
            }
            cache.insert(w, h);
        }
        Ok(cache)
    }
}

/// Reads `path` if it exists, else starts empty.
pub fn load(path: &Path, system: &CoxeterSystem) -> Result<KlCache, CliError> {
    if !path.exists() {
        return Ok(KlCache::new(system));
    }
    let text = std::fs::read_to_string(path)?;
    let file: KlCacheFile =
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    file.into_cache(system)
}

pub fn save(path: &Path, cache: &KlCache) -> Result<(), CliError> {
    let file = KlCacheFile::from_cache(cache)?;
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
