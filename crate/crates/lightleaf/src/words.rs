//! Parsing and printing of words in the generators.
//!
//! Accepted input forms, all 1-based: `s1s2s1`, `s s` or `ss` (a bare `s`
//! means `s1`), `1,2,1` and `1 2 1`. The identity is written `1`, `e`, `id`
//! or as the empty string.

use lightleaf_core::{CoxeterSystem, Element};

use crate::CliError;

pub fn parse_word(input: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let text = input.trim();
    if matches!(text, "" | "1" | "e" | "id") {
        return Ok(Vec::new());
    }
    let bad = || CliError::Config(format!("cannot parse word {input:?}"));
    let mut word = Vec::new();
    if text.starts_with('s') {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        for piece in compact.split('s').skip(1) {
            let index = if piece.is_empty() { 1 } else { piece.parse::<usize>().map_err(|_| bad())? };
            word.push(index);
        }
    } else {
        for piece in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()) {
            word.push(piece.parse::<usize>().map_err(|_| bad())?);
        }
    }
    word.into_iter()
        .map(|i| {
            if i == 0 || i > rank {
                Err(CliError::Config(format!("generator s{i} in {input:?} is out of range for rank {rank}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// `s1s2s1`, or `1` for the empty word.
pub fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect()
}

/// The ShortLex word of `w` in text form.
pub fn element_text(system: &CoxeterSystem, w: &Element) -> String {
    word_text(&system.reduced_word(w))
}
