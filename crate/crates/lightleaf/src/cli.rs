//! Command-line interface. [`run_from_args`] does all the work and returns
//! the exit code with the text for stdout and stderr, so tests can drive it
//! without a subprocess.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lightleaf_core::decomp::{kl_oracle_compare, solve_bounds, OracleRow, OracleStatus};
use lightleaf_core::gram::{det_epsilon_all, ShapovalovContext, SignedRootMonomial, FINITE_ROOT_CAP};
use lightleaf_core::grothendieck::{dim_delta_pi, sum_formula_terms, BruhatIdeal, GrothendieckVector, Valuation};
use lightleaf_core::hecke::KlCache;
use lightleaf_core::lightleaves::{ContentEntry, Expression, DEFAULT_TAB_GUARD};
use lightleaf_core::{CoxeterSystem, Element};
use serde::Serialize;
use serde_json::json;

use crate::cache;
use crate::config::load_system;
use crate::formats::{root_json, DecompRowJson, GrothendieckJson, MonomialJson, TabRecordJson};
use crate::words::{element_text, parse_word, word_text};
use crate::CliError;

#[derive(Parser, Debug)]
#[command(name = "lightleaf", version, about = "Light leaves, Gram determinants and sum formulas for Coxeter groups")]
pub struct Cli {
    /// Preset (A1, A2, A3, B2, B3, G2, A1xA1, affineA1) or path to a JSON system file.
    #[arg(long, global = true)]
    system: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Longest expression accepted for explicit subexpression enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_TAB_GUARD as u64, value_parser = clap::value_parser!(u64).range(1..))]
    max_word_len: u64,
    /// Largest Bruhat ideal or interval accepted.
    #[arg(long, global = true, default_value_t = 5000, value_parser = clap::value_parser!(u64).range(1..))]
    max_ideal_size: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Tab(y) with symbols and contents.
    Tab(TabArgs),
    /// Compare the epsilon-product and Shapovalov determinant formulas.
    Det(DetArgs),
    /// Cell module dimensions dim Δ_w(y), or dim Δ_π(y) with --ideal.
    Dims(DimsArgs),
    /// Right-hand side of the sum formula for Δ_π(y).
    Sumformula(SumArgs),
    /// Decomposition-number bounds over an ideal, with the KL oracle.
    Decomp(DecompArgs),
    /// Kazhdan-Lusztig polynomials h_(y,w).
    Kl(KlArgs),
    /// Validate the system and summarize its realization.
    RealizeCheck,
}

#[derive(Args, Debug)]
struct TabArgs {
    #[arg(long)]
    word: String,
    #[arg(long)]
    target: String,
}

#[derive(Args, Debug)]
struct DetArgs {
    #[arg(long, required_unless_present = "all_words")]
    word: Option<String>,
    /// Only this endpoint; all endpoints when omitted.
    #[arg(long)]
    target: Option<String>,
    /// Check every word of length at most N instead of a single word.
    #[arg(long, value_name = "N", conflicts_with_all = ["word", "target"])]
    all_words: Option<u64>,
}

#[derive(Args, Debug)]
struct DimsArgs {
    #[arg(long)]
    word: String,
    #[arg(long)]
    target: Option<String>,
    /// Report dim Δ_π(y) for the ideal π below the word's element.
    #[arg(long)]
    ideal: bool,
}

#[derive(Args, Debug)]
struct SumArgs {
    /// The ideal is {z ≤ w} for the element w of this word.
    #[arg(long)]
    word: String,
    #[arg(long)]
    target: String,
    /// Odd prime for the characteristic-p formula; characteristic 0 if omitted.
    #[arg(long)]
    prime: Option<u64>,
}

#[derive(Args, Debug)]
struct DecompArgs {
    /// The ideal is {z ≤ w} for the element w of this word.
    #[arg(long)]
    word: String,
    #[arg(long)]
    prime: Option<u64>,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    oracle: Switch,
    /// Kazhdan-Lusztig cache file, read if present and rewritten afterwards.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KlArgs {
    #[arg(long)]
    word: String,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    cache: Option<PathBuf>,
}

/// What a command produced. `failure` is reported after the output is
/// printed, so inconsistent results remain visible.
#[derive(Default)]
struct Output {
    stdout: String,
    warnings: Vec<String>,
    failure: Option<CliError>,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stderr: String = out.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            match out.failure {
                None => (0, out.stdout, stderr),
                Some(err) => {
                    let _ = writeln!(stderr, "error: {err}");
                    (err.exit_code(), out.stdout, stderr)
                }
            }
        }
        Err(err) => (err.exit_code(), String::new(), format!("error: {err}\n")),
    }
}

struct Ctx {
    system: CoxeterSystem,
    json: bool,
    max_word_len: usize,
    max_ideal_size: usize,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<Vec<usize>, CliError> {
        parse_word(text, self.system.rank())
    }

    fn element(&self, text: &str) -> Result<Element, CliError> {
        Ok(self.system.word_to_element(&self.word(text)?)?)
    }

    fn guarded_word(&self, text: &str) -> Result<Vec<usize>, CliError> {
        let word = self.word(text)?;
        if word.len() > self.max_word_len {
            return Err(CliError::Guard(format!(
                "word has {} letters, above --max-word-len {}",
                word.len(),
                self.max_word_len
            )));
        }
        Ok(word)
    }

    fn name(&self, w: &Element) -> String {
        element_text(&self.system, w)
    }

    /// `{z ≤ w}` for the element of `text`, warning when the word was not
    /// reduced.
    fn ideal(&self, text: &str, warnings: &mut Vec<String>) -> Result<BruhatIdeal, CliError> {
        let word = self.word(text)?;
        let w = self.system.word_to_element(&word)?;
        if !self.system.is_reduced(&word)? {
            warnings.push(format!(
                "{} is not reduced; using the ideal below {}",
                word_text(&word),
                self.name(&w)
            ));
        }
        let size = Expression::new(&self.system, self.system.reduced_word(&w))?.endpoint_counts().len();
        if size > self.max_ideal_size {
            return Err(CliError::Guard(format!(
                "ideal has {size} elements, above --max-ideal-size {}",
                self.max_ideal_size
            )));
        }
        Ok(BruhatIdeal::from_element(&self.system, &w))
    }

    fn valuation(&self, prime: Option<u64>) -> Result<Valuation, CliError> {
        let Some(p) = prime else { return Ok(Valuation::Char0) };
        let v = Valuation::char_p(p)?;
        if self.system.finite_positive_roots(FINITE_ROOT_CAP).is_err() {
            return Err(CliError::Config(format!(
                "characteristic {p} needs a finite Weyl group; {} is infinite",
                self.system.name()
            )));
        }
        Ok(v)
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let source = cli
        .system
        .as_deref()
        .ok_or_else(|| CliError::Config("missing --system <preset|file>".into()))?;
    let ctx = Ctx {
        system: load_system(source)?,
        json: cli.format == Format::Json,
        max_word_len: usize::try_from(cli.max_word_len).unwrap_or(usize::MAX),
        max_ideal_size: usize::try_from(cli.max_ideal_size).unwrap_or(usize::MAX),
    };
    match &cli.command {
        Command::Tab(a) => cmd_tab(&ctx, a),
        Command::Det(a) => cmd_det(&ctx, a),
        Command::Dims(a) => cmd_dims(&ctx, a),
        Command::Sumformula(a) => cmd_sumformula(&ctx, a),
        Command::Decomp(a) => cmd_decomp(&ctx, a),
        Command::Kl(a) => cmd_kl(&ctx, a),
        Command::RealizeCheck => cmd_realize_check(&ctx),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn content_text(c: &ContentEntry) -> String {
    match c {
        ContentEntry::Zero => "0".into(),
        ContentEntry::Root(r) => r.to_string(),
    }
}

fn cmd_tab(ctx: &Ctx, a: &TabArgs) -> Result<Output, CliError> {
    let word = ctx.word(&a.word)?;
    let y = ctx.element(&a.target)?;
    let expr = Expression::new(&ctx.system, word.clone())?;
    let recs = expr.tab(&y, ctx.max_word_len)?;
    let mut out = Output::default();
    if ctx.json {
        let records = recs
            .iter()
            .map(|r| TabRecordJson::from_record(&ctx.system, r))
            .collect::<Result<Vec<_>, _>>()?;
        out.stdout = to_json(&json!({
            "system": ctx.system.name(),
            "word": word,
            "target": ctx.system.reduced_word(&y),
            "records": records,
        }))?;
        return Ok(out);
    }
    let s = &mut out.stdout;
    let _ = writeln!(
        s,
        "Tab({}) for w = {} in {}: {} subexpression{}",
        ctx.name(&y),
        word_text(&word),
        ctx.system.name(),
        recs.len(),
        if recs.len() == 1 { "" } else { "s" }
    );
    for r in &recs {
        let bits: Vec<String> = r.bits_u8().iter().map(u8::to_string).collect();
        let syms: Vec<&str> = r.symbols().iter().map(|x| x.as_str()).collect();
        let content: Vec<String> = r.content().iter().map(content_text).collect();
        let _ = writeln!(s, "  ({})  {}  c = ({})", bits.join(","), syms.join(" "), content.join(", "));
    }
    Ok(out)
}

/// Endpoints in a stable order: by length, then by word.
fn sorted_elements<'a>(system: &CoxeterSystem, items: impl Iterator<Item = &'a Element>) -> Vec<Element> {
    let mut v: Vec<(usize, Vec<usize>, Element)> = items
        .map(|e| {
            let w = system.reduced_word(e);
            (w.len(), w, e.clone())
        })
        .collect();
    v.sort();
    v.into_iter().map(|(_, _, e)| e).collect()
}

fn cmd_det(ctx: &Ctx, a: &DetArgs) -> Result<Output, CliError> {
    let shap_ctx = ShapovalovContext::new(&ctx.system);
    if let Some(n) = a.all_words {
        return det_all_words(ctx, &shap_ctx, n);
    }
    let word = ctx.guarded_word(a.word.as_deref().expect("clap requires --word here"))?;
    let expr = Expression::new(&ctx.system, word.clone())?;
    let eps_all = det_epsilon_all(&expr, ctx.max_word_len)?;
    let counts = expr.endpoint_counts();
    let targets = match &a.target {
        Some(t) => vec![ctx.element(t)?],
        None => sorted_elements(&ctx.system, eps_all.keys()),
    };
    let mut out = Output::default();
    let mut results = Vec::new();
    let mut mismatches = Vec::new();
    for y in &targets {
        let eps = eps_all.get(y).cloned().unwrap_or_else(SignedRootMonomial::one);
        let shap = shap_ctx.det_from_counts(&counts, y);
        let matched = eps.same_magnitude(&shap);
        if !matched {
            mismatches.push(ctx.name(y));
        }
        results.push((y.clone(), eps, shap, matched));
    }
    if ctx.json {
        let rows = results
            .iter()
            .map(|(y, eps, shap, m)| {
                Ok(json!({
                    "target": ctx.system.reduced_word(y),
                    "epsilon": MonomialJson::from_monomial(eps)?,
                    "shapovalov": MonomialJson::from_monomial(shap)?,
                    "match": m,
                }))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        out.stdout = to_json(&json!({ "system": ctx.system.name(), "word": word, "results": rows }))?;
    } else {
        let s = &mut out.stdout;
        for (i, (y, eps, shap, m)) in results.iter().enumerate() {
            if i > 0 {
                s.push('\n');
            }
            let _ = writeln!(s, "w = {}, y = {}", word_text(&word), ctx.name(y));
            let _ = writeln!(s, "  epsilon product: {eps}");
            let _ = writeln!(s, "  shapovalov:      {shap}");
            let _ = writeln!(s, "  match: {m}");
        }
    }
    if !mismatches.is_empty() {
        out.failure = Some(CliError::Inconsistent(format!(
            "determinant formulas disagree for y = {}",
            mismatches.join(", ")
        )));
    }
    Ok(out)
}

fn det_all_words(ctx: &Ctx, shap_ctx: &ShapovalovContext<'_>, n: u64) -> Result<Output, CliError> {
    let n = usize::try_from(n).unwrap_or(usize::MAX);
    if n > ctx.max_word_len {
        return Err(CliError::Guard(format!("--all-words {n} is above --max-word-len {}", ctx.max_word_len)));
    }
    let rank = ctx.system.rank();
    let (mut words, mut pairs) = (0u64, 0u64);
    let mut first_bad: Option<String> = None;
    let mut word = Vec::new();
    loop {
        let expr = Expression::new(&ctx.system, word.clone())?;
        let counts = expr.endpoint_counts();
        for (y, eps) in det_epsilon_all(&expr, ctx.max_word_len)? {
            pairs += 1;
            if !eps.same_magnitude(&shap_ctx.det_from_counts(&counts, &y)) && first_bad.is_none() {
                first_bad = Some(format!("w = {}, y = {}", word_text(&word), ctx.name(&y)));
            }
        }
        words += 1;
        if !next_word(&mut word, rank, n) {
            break;
        }
    }
    let mut out = Output::default();
    if ctx.json {
        out.stdout = to_json(&json!({
            "system": ctx.system.name(),
            "max_length": n,
            "words": words,
            "pairs": pairs,
            "all_match": first_bad.is_none(),
        }))?;
    } else {
        let _ = writeln!(
            out.stdout,
            "{}: {words} words of length <= {n}, {pairs} (word, y) pairs, all match: {}",
            ctx.system.name(),
            first_bad.is_none()
        );
    }
    if let Some(bad) = first_bad {
        out.failure = Some(CliError::Inconsistent(format!("determinant formulas disagree at {bad}")));
    }
    Ok(out)
}

/// Steps through all words of length ≤ `max`: shorter words first, each
/// length in lexicographic order.
fn next_word(word: &mut Vec<usize>, rank: usize, max: usize) -> bool {
    for i in (0..word.len()).rev() {
        if word[i] + 1 < rank {
            word[i] += 1;
            for x in &mut word[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    if word.len() == max {
        return false;
    }
    let len = word.len() + 1;
    word.clear();
    word.resize(len, 0);
    true
}

fn cmd_dims(ctx: &Ctx, a: &DimsArgs) -> Result<Output, CliError> {
    let mut out = Output::default();
    let target = a.target.as_deref().map(|t| ctx.element(t)).transpose()?;
    let (rows, label): (Vec<(Element, u64)>, String) = if a.ideal {
        let ideal = ctx.ideal(&a.word, &mut out.warnings)?;
        let ys: Vec<Element> = match &target {
            Some(t) => vec![t.clone()],
            None => ideal.members().to_vec(),
        };
        let rows = ys.iter().map(|y| Ok((y.clone(), dim_delta_pi(&ideal, y)?))).collect::<Result<_, CliError>>()?;
        let top = ideal.maximal_elements().pop().expect("ideals are nonempty");
        (rows, format!("dim Δ_π(y) for π = {{z ≤ {}}}", ctx.name(&top)))
    } else {
        let word = ctx.word(&a.word)?;
        let expr = Expression::new(&ctx.system, word.clone())?;
        let counts = expr.endpoint_counts();
        let ys = match &target {
            Some(t) => vec![t.clone()],
            None => sorted_elements(&ctx.system, counts.keys()),
        };
        let rows = ys.into_iter().map(|y| (y.clone(), counts.get(&y).copied().unwrap_or(0))).collect();
        (rows, format!("dim Δ_w(y) for w = {}", word_text(&word)))
    };
    if ctx.json {
        let dims: Vec<_> =
            rows.iter().map(|(y, d)| json!({ "y": ctx.system.reduced_word(y), "dim": d })).collect();
        out.stdout = to_json(&json!({ "system": ctx.system.name(), "ideal": a.ideal, "dims": dims }))?;
    } else {
        let _ = writeln!(out.stdout, "{label}:");
        let width = rows.iter().map(|(y, _)| ctx.name(y).len()).max().unwrap_or(1);
        for (y, d) in &rows {
            let _ = writeln!(out.stdout, "  {:<width$}  {d}", ctx.name(y));
        }
    }
    Ok(out)
}

fn vector_text(ctx: &Ctx, v: &GrothendieckVector, symbol: &str) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let ys = sorted_elements(&ctx.system, v.coeffs().keys());
    let mut s = String::new();
    for (i, y) in ys.iter().enumerate() {
        let c = v.coeff(y);
        let sep = match (i, c < 0) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        let mag = c.unsigned_abs();
        let coeff = if mag == 1 { String::new() } else { mag.to_string() };
        let _ = write!(s, "{sep}{coeff}[{symbol}({})]", ctx.name(y));
    }
    s
}

fn valuation_text(v: Valuation) -> String {
    match v {
        Valuation::Char0 => "characteristic 0".into(),
        Valuation::CharP(p) => format!("characteristic {p}"),
    }
}

fn cmd_sumformula(ctx: &Ctx, a: &SumArgs) -> Result<Output, CliError> {
    let mut out = Output::default();
    let val = ctx.valuation(a.prime)?;
    let ideal = ctx.ideal(&a.word, &mut out.warnings)?;
    let y = ctx.element(&a.target)?;
    let terms = sum_formula_terms(&ideal, &y, val)?;
    let mut v = GrothendieckVector::zero(lightleaf_core::grothendieck::Basis::Delta);
    for t in &terms {
        v.add_term(t.target.clone(), i64::try_from(t.weight).expect("valuation fits in i64"));
    }
    let top = ideal.maximal_elements().pop().expect("ideals are nonempty");
    if ctx.json {
        let term_json = terms
            .iter()
            .map(|t| {
                Ok(json!({
                    "root": root_json(&t.root)?,
                    "target": ctx.system.reduced_word(&t.target),
                    "weight": t.weight,
                }))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        out.stdout = to_json(&json!({
            "system": ctx.system.name(),
            "ideal_top": ctx.system.reduced_word(&top),
            "target": ctx.system.reduced_word(&y),
            "prime": a.prime,
            "rhs": GrothendieckJson::from_vector(&ctx.system, &v),
            "terms": term_json,
        }))?;
    } else {
        let s = &mut out.stdout;
        let _ = writeln!(
            s,
            "π = {{z ≤ {}}} ({} elements), y = {}, {}",
            ctx.name(&top),
            ideal.len(),
            ctx.name(&y),
            valuation_text(val)
        );
        let _ = writeln!(s, "{}", vector_text(ctx, &v, "Δ"));
        for t in &terms {
            let _ = writeln!(s, "  β = {}  s_β·y = {}  ν = {}", t.root, ctx.name(&t.target), t.weight);
        }
    }
    Ok(out)
}

fn load_cache(path: Option<&PathBuf>, system: &CoxeterSystem) -> Result<KlCache, CliError> {
    match path {
        Some(p) => cache::load(p, system),
        None => Ok(KlCache::new(system)),
    }
}

fn status_text(row: Option<&OracleRow>, settled: bool) -> &'static str {
    match row.map(|r| r.status) {
        Some(OracleStatus::ConsistentSettled) => "settled",
        Some(OracleStatus::ConsistentOpen) => "settled-by-oracle",
        Some(OracleStatus::Conflict) => "CONFLICT",
        None if settled => "settled",
        None => "open",
    }
}

fn cmd_decomp(ctx: &Ctx, a: &DecompArgs) -> Result<Output, CliError> {
    let mut out = Output::default();
    let val = ctx.valuation(a.prime)?;
    let ideal = ctx.ideal(&a.word, &mut out.warnings)?;
    let bounds = solve_bounds(&ideal, val)?;
    let mut oracle_rows: Vec<OracleRow> = Vec::new();
    if a.oracle == Switch::On {
        if val == Valuation::Char0 {
            let mut kl = load_cache(a.cache.as_ref(), &ctx.system)?;
            oracle_rows = kl_oracle_compare(&bounds, &mut kl);
            if let Some(p) = &a.cache {
                cache::save(p, &kl)?;
            }
        } else {
            out.warnings.push("the Kazhdan-Lusztig oracle applies in characteristic 0 only; skipped".into());
        }
    }
    let find = |y: &Element, u: &Element| oracle_rows.iter().find(|r| &r.y == y && &r.u == u);

    let members = ideal.members();
    let mut rows = Vec::new();
    for y in members {
        for u in members {
            if let Some(&iv) = bounds.entries().get(&(y.clone(), u.clone())) {
                rows.push((y, u, iv, find(y, u)));
            }
        }
    }
    let conflicts = oracle_rows.iter().filter(|r| r.status == OracleStatus::Conflict).count();
    let confirmed = oracle_rows.iter().filter(|r| r.status == OracleStatus::ConsistentOpen).count();
    let (settled, total) = bounds.settled_count();
    let top = ideal.maximal_elements().pop().expect("ideals are nonempty");

    if ctx.json {
        let table: Vec<DecompRowJson> =
            rows.iter().map(|(y, u, iv, r)| DecompRowJson::new(&ctx.system, y, u, *iv, *r)).collect();
        out.stdout = to_json(&json!({
            "system": ctx.system.name(),
            "ideal_top": ctx.system.reduced_word(&top),
            "prime": a.prime,
            "rows": table,
            "settled": settled,
            "total": total,
            "oracle_confirmed": confirmed,
            "conflicts": conflicts,
        }))?;
    } else {
        let s = &mut out.stdout;
        let _ = writeln!(
            s,
            "decomposition bounds for π = {{z ≤ {}}} ({} elements), {}",
            ctx.name(&top),
            ideal.len(),
            valuation_text(val)
        );
        let w = members.iter().map(|m| ctx.name(m).len()).max().unwrap_or(1).max(1);
        let _ = writeln!(s, "{:<w$}  {:<w$}  {:<8}  {:<6}  status", "y", "u", "d_yu", "oracle");
        for (y, u, iv, r) in &rows {
            let d = if iv.is_settled() { iv.lo.to_string() } else { iv.to_string() };
            let o = r.map_or("-".to_string(), |r| r.oracle.to_string());
            let _ = writeln!(
                s,
                "{:<w$}  {:<w$}  {:<8}  {:<6}  {}",
                ctx.name(y),
                ctx.name(u),
                d,
                o,
                status_text(*r, iv.is_settled())
            );
        }
        let _ = write!(s, "rules settled {settled} of {total} entries");
        if !oracle_rows.is_empty() {
            let _ = write!(s, "; oracle confirmed {confirmed} open entries; {conflicts} conflicts");
        }
        s.push('\n');
    }
    for r in oracle_rows.iter().filter(|r| r.status == OracleStatus::Conflict) {
        out.warnings.push(format!(
            "oracle value {} for ({}, {}) lies outside {}",
            r.oracle,
            ctx.name(&r.y),
            ctx.name(&r.u),
            r.bounds
        ));
    }
    if let Some((y, u)) = bounds.contradictions().first() {
        out.failure = Some(CliError::Inconsistent(format!(
            "deduction rules gave an empty interval at ({}, {})",
            ctx.name(y),
            ctx.name(u)
        )));
    }
    Ok(out)
}

fn cmd_kl(ctx: &Ctx, a: &KlArgs) -> Result<Output, CliError> {
    let mut out = Output::default();
    let ideal = ctx.ideal(&a.word, &mut out.warnings)?;
    let w = ideal.maximal_elements().pop().expect("ideals are nonempty");
    let mut kl = load_cache(a.cache.as_ref(), &ctx.system)?;
    let basis = kl.kl_basis_element(&w);
    if let Some(p) = &a.cache {
        cache::save(p, &kl)?;
    }
    let ys = match &a.target {
        Some(t) => vec![ctx.element(t)?],
        None => sorted_elements(&ctx.system, basis.terms().keys()),
    };
    if ctx.json {
        let pairs = ys
            .iter()
            .map(|y| {
                let coeffs: Vec<i64> = basis
                    .coeff(y)
                    .to_polynomial_coeffs()
                    .map_err(|_| CliError::Inconsistent("KL polynomial with negative powers".into()))?
                    .iter()
                    .map(|c| i64::try_from(c).map_err(|_| CliError::Inconsistent("KL coefficient overflow".into())))
                    .collect::<Result<_, _>>()?;
                Ok(json!({ "y": ctx.system.reduced_word(y), "coeffs": coeffs }))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        out.stdout = to_json(&json!({
            "system": ctx.system.name(),
            "w": ctx.system.reduced_word(&w),
            "pairs": pairs,
        }))?;
    } else {
        let _ = writeln!(out.stdout, "Kazhdan-Lusztig basis element for w = {} in {}", ctx.name(&w), ctx.system.name());
        for y in &ys {
            let _ = writeln!(out.stdout, "  h({}, w) = {}", ctx.name(y), basis.coeff(y));
        }
    }
    Ok(out)
}

/// Rows of the Coxeter matrix, with `∞` for unbounded orders.
fn coxeter_matrix_text(sys: &CoxeterSystem) -> String {
    let rows: Vec<String> = sys
        .coxeter_matrix()
        .iter()
        .map(|row| {
            let cells: Vec<String> =
                row.iter().map(|&m| if m == 0 { "∞".to_string() } else { m.to_string() }).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

fn cmd_realize_check(ctx: &Ctx) -> Result<Output, CliError> {
    let sys = &ctx.system;
    let mut out = Output::default();
    let failures = sys.braid_relation_failures();
    let roots = sys.finite_positive_roots(FINITE_ROOT_CAP).ok();
    if ctx.json {
        let root_list = match &roots {
            Some(r) => Some(r.iter().map(root_json).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        out.stdout = to_json(&json!({
            "name": sys.name(),
            "rank": sys.rank(),
            "coxeter_matrix": sys.coxeter_matrix(),
            "cartan_matrix": sys.cartan_matrix(),
            "braid_relations_hold": failures.is_empty(),
            "positive_roots": root_list,
        }))?;
    } else {
        let s = &mut out.stdout;
        let _ = writeln!(s, "system {}, rank {}", sys.name(), sys.rank());
        let _ = writeln!(s, "coxeter matrix: {}", coxeter_matrix_text(sys));
        let _ = writeln!(s, "cartan matrix: {:?}", sys.cartan_matrix());
        let _ = writeln!(s, "braid relations: {}", if failures.is_empty() { "ok" } else { "FAILED" });
        match &roots {
            Some(r) => {
                let names: Vec<String> = r.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "positive roots: {} ({})", r.len(), names.join(", "));
            }
            None => {
                let _ = writeln!(s, "positive roots: infinite (more than {FINITE_ROOT_CAP})");
            }
        }
    }
    if !failures.is_empty() {
        let pairs: Vec<String> = failures.iter().map(|(s, t)| format!("(s{}, s{})", s + 1, t + 1)).collect();
        out.failure = Some(CliError::Inconsistent(format!("braid relations fail for {}", pairs.join(", "))));
    }
    Ok(out)
}
