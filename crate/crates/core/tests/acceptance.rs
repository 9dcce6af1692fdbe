//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test -p lightleaf-core --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::{all_ideals, corpus, sys, DenseHecke};
use lightleaf_core::coxeter::{Element, Root};
use lightleaf_core::decomp::{kl_oracle_compare, solve_bounds, OracleStatus};
use lightleaf_core::gram::{
    det_epsilon_product, det_shapovalov, gamma_of, ShapovalovContext, Sign, SignedRootMonomial,
};
use lightleaf_core::grothendieck::{
    integer_determinant, phi_matrix, sum_formula_rhs, Basis, BruhatIdeal, GrothendieckVector, Valuation,
};
use lightleaf_core::hecke::{bar_involution, KlCache};
use lightleaf_core::lightleaves::{separation_witness, Expression, SubexpressionRecord};
use num_bigint::BigInt;
use num_traits::Signed;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Results of the exhaustive pass over the word corpus, one per criterion.
struct CorpusReport {
    shapovalov: Outcome,
    separation: Outcome,
    branching: Outcome,
    exponents: Outcome,
    gamma: Outcome,
}

fn corpus_pass() -> CorpusReport {
    let mut shap_checks = 0u64;
    let mut shap_err: Option<String> = None;
    let mut sep_pairs = 0u64;
    let mut sep_err: Option<String> = None;
    let mut branch_checks = 0u64;
    let mut branch_err: Option<String> = None;
    let mut exp_checks = 0u64;
    let mut exp_err: Option<String> = None;
    let mut gamma_checks = 0u64;
    let mut gamma_err: Option<String> = None;

    for (s, words) in corpus() {
        let ctx = ShapovalovContext::new(&s);
        for word in words {
            let expr = Expression::new(&s, word.clone()).unwrap();
            let groups = expr.all_subexpressions(20).unwrap();
            let counts = expr.endpoint_counts();

            // (3) and (9a): exact exponent maps, nonnegative exponents.
            for (y, recs) in &groups {
                let eps: SignedRootMonomial = recs.iter().map(gamma_of).product();
                let shap = ctx.det_from_counts(&counts, y);
                shap_checks += 1;
                if !eps.same_magnitude(&shap) && shap_err.is_none() {
                    shap_err = Some(format!("{} word {:?}: {} vs {}", s.name(), word, eps, shap));
                }
                exp_checks += 1;
                if !eps.is_polynomial() && exp_err.is_none() {
                    exp_err = Some(format!("{} word {:?}: {}", s.name(), word, eps));
                }
            }

            // (4): every pair of distinct subexpressions.
            let all: Vec<&SubexpressionRecord> = groups.values().flatten().collect();
            let contents: Vec<_> = all.iter().map(|r| r.content()).collect();
            for (i, e) in all.iter().enumerate() {
                for (j, f) in all.iter().enumerate().skip(i + 1) {
                    sep_pairs += 1;
                    let first = e.bits().iter().zip(f.bits()).position(|(a, b)| a != b);
                    let ok = match (separation_witness(e, f), first) {
                        (Ok(Some(w)), Some(k)) => w == k && contents[i][k] != contents[j][k],
                        _ => false,
                    };
                    if !ok && sep_err.is_none() {
                        sep_err = Some(format!("{} word {:?}: {:?} vs {:?}", s.name(), word, e.bits(), f.bits()));
                    }
                }
            }

            // (5): dim Δ_w(y) = dim Δ_{w'}(y) + dim Δ_{w'}(ys).
            if let Some(shorter) = expr.drop_last() {
                let last = *word.last().unwrap();
                let part = shorter.endpoint_counts();
                let keys: BTreeSet<&Element> = counts.keys().chain(part.keys()).collect();
                for y in keys {
                    branch_checks += 1;
                    let ys = s.mul_generator_right(y, last);
                    let lhs = counts.get(y).copied().unwrap_or(0);
                    let rhs = part.get(y).copied().unwrap_or(0) + part.get(&ys).copied().unwrap_or(0);
                    if lhs != rhs && branch_err.is_none() {
                        branch_err = Some(format!("{} word {:?}: {} != {}", s.name(), word, lhs, rhs));
                    }
                }
            }

            // (9c): γ = +1 on the all-ones subexpression of a reduced word.
            if s.is_reduced(&word).unwrap() {
                gamma_checks += 1;
                let rec = expr.symbols(&vec![1; word.len()]).unwrap();
                if gamma_of(&rec) != SignedRootMonomial::one() && gamma_err.is_none() {
                    gamma_err = Some(format!("{} word {:?}: {}", s.name(), word, gamma_of(&rec)));
                }
            }
        }
    }

    let wrap = |err: Option<String>, msg: String| err.map_or(Ok(msg), Err);
    CorpusReport {
        shapovalov: wrap(shap_err, format!("{shap_checks} (word, y) pairs")),
        separation: wrap(sep_err, format!("{sep_pairs} pairs")),
        branching: wrap(branch_err, format!("{branch_checks} (word, y) pairs")),
        exponents: wrap(exp_err, format!("{exp_checks} determinants")),
        gamma: wrap(gamma_err, format!("{gamma_checks} reduced words")),
    }
}

fn criterion_1() -> Outcome {
    let a1 = sys("A1");
    let one = a1.identity();
    let s = a1.generator(0).unwrap();
    let alpha = Root::from_i64s(&[1]);
    let ss = Expression::new(&a1, vec![0, 0]).unwrap();
    let sss = Expression::new(&a1, vec![0, 0, 0]).unwrap();
    let cases = [
        (&ss, &one, SignedRootMonomial::from_parts(Sign::Minus, [(alpha.clone(), 2)])),
        (&sss, &one, SignedRootMonomial::from_parts(Sign::Plus, [(alpha.clone(), 4)])),
        (&ss, &s, SignedRootMonomial::minus_one()),
        (&sss, &s, SignedRootMonomial::one()),
    ];
    let mut shown = Vec::new();
    for (expr, y, expected) in cases {
        let eps = det_epsilon_product(expr, y, 20).unwrap();
        ensure(eps == expected, || format!("{:?} y={:?}: got {eps}, expected {expected}", expr.word(), y))?;
        let shap = det_shapovalov(expr, y);
        ensure(shap.same_magnitude(&eps), || format!("shapovalov {shap} vs {eps}"))?;
        shown.push(eps.to_string());
    }
    Ok(shown.join(", "))
}

fn bit_set(recs: &[SubexpressionRecord]) -> BTreeSet<(Vec<u8>, String)> {
    recs.iter()
        .map(|r| (r.bits_u8(), r.symbols().iter().map(|s| s.as_str()).collect::<Vec<_>>().join(",")))
        .collect()
}

fn listing(entries: &[(&[u8], &str)]) -> BTreeSet<(Vec<u8>, String)> {
    entries.iter().map(|(b, s)| (b.to_vec(), s.to_string())).collect()
}

fn criterion_2() -> Outcome {
    let a1 = sys("A1");
    let a2 = sys("A2");
    let one1 = a1.identity();
    let s = a1.generator(0).unwrap();
    let ss = Expression::new(&a1, vec![0, 0]).unwrap();
    let sss = Expression::new(&a1, vec![0, 0, 0]).unwrap();
    let w = Expression::new(&a2, vec![0, 1, 0]).unwrap();
    let el = |v: &[usize]| a2.word_to_element(v).unwrap();
    let cases: Vec<(&Expression, Element, BTreeSet<(Vec<u8>, String)>)> = vec![
        (&ss, one1.clone(), listing(&[(&[0, 0], "U0,U0"), (&[1, 1], "U1,D1")])),
        (&ss, s.clone(), listing(&[(&[0, 1], "U0,U1"), (&[1, 0], "U1,D0")])),
        (
            &sss,
            one1,
            listing(&[(&[0, 0, 0], "U0,U0,U0"), (&[1, 1, 0], "U1,D1,U0"), (&[0, 1, 1], "U0,U1,D1"), (&[1, 0, 1], "U1,D0,D1")]),
        ),
        (
            &sss,
            s,
            listing(&[(&[0, 0, 1], "U0,U0,U1"), (&[1, 1, 1], "U1,D1,U1"), (&[0, 1, 0], "U0,U1,D0"), (&[1, 0, 0], "U1,D0,D0")]),
        ),
        (&w, a2.identity(), listing(&[(&[0, 0, 0], "U0,U0,U0"), (&[1, 0, 1], "U1,U0,D1")])),
        (&w, el(&[0]), listing(&[(&[1, 0, 0], "U1,U0,D0"), (&[0, 0, 1], "U0,U0,U1")])),
        (&w, el(&[0, 1]), listing(&[(&[1, 1, 0], "U1,U1,U0")])),
        (&w, el(&[0, 1, 0]), listing(&[(&[1, 1, 1], "U1,U1,U1")])),
    ];
    let n = cases.len();
    for (expr, y, expected) in cases {
        let got = bit_set(&expr.tab(&y, 20).unwrap());
        ensure(got == expected, || format!("{:?} y={:?}: got {got:?}", expr.word(), y))?;
    }
    Ok(format!("{n} listings"))
}

fn criterion_6() -> Outcome {
    let a2 = sys("A2");
    let el = |v: &[usize]| a2.word_to_element(v).unwrap();
    let ideal = BruhatIdeal::from_element(&a2, &el(&[0, 1, 0]));
    let at_s2 = sum_formula_rhs(&ideal, &el(&[1]), Valuation::Char0).unwrap();
    let expected = GrothendieckVector::from_coeffs(Basis::Delta, [(el(&[0, 1]), 1), (el(&[1, 0]), 1)]);
    ensure(at_s2 == expected, || format!("y = s2: {at_s2:?}"))?;
    let at_s2s1 = sum_formula_rhs(&ideal, &el(&[1, 0]), Valuation::Char0).unwrap();
    ensure(at_s2s1 == GrothendieckVector::basis_vector(Basis::Delta, el(&[0, 1, 0])), || {
        format!("y = s2s1: {at_s2s1:?}")
    })?;
    for p in [3, 5, 7] {
        let v = Valuation::char_p(p).unwrap();
        for y in ideal.members() {
            let cp = sum_formula_rhs(&ideal, y, v).unwrap();
            let c0 = sum_formula_rhs(&ideal, y, Valuation::Char0).unwrap();
            ensure(cp == c0, || format!("p = {p}, y = {y:?}"))?;
        }
    }
    Ok("y = s2, y = s2s1; p = 3, 5, 7 agree with char 0".into())
}

fn criterion_7() -> Outcome {
    let a2 = sys("A2");
    let el = |v: &[usize]| a2.word_to_element(v).unwrap();
    let w0 = el(&[0, 1, 0]);
    let ideal = BruhatIdeal::from_element(&a2, &w0);
    let bounds = solve_bounds(&ideal, Valuation::Char0).unwrap();
    ensure(bounds.contradictions().is_empty(), || "rule contradiction".into())?;
    let open: BTreeSet<(Element, Element)> = bounds.open_entries().into_iter().collect();
    let mut expected: BTreeSet<(Element, Element)> = [(el(&[1]), w0.clone()), (el(&[0]), w0.clone())].into();
    let row1: Vec<_> = open.iter().filter(|(y, _)| y.is_identity()).cloned().collect();
    ensure(row1.len() == 3, || format!("row 1 has {} open entries", row1.len()))?;
    expected.extend(row1);
    ensure(open == expected, || format!("open entries: {open:?}"))?;
    for (y, u) in &open {
        ensure(bounds.entry(y, u).contains(1), || format!("({y:?}, {u:?}) excludes 1"))?;
    }
    let mut cache = KlCache::new(&a2);
    let report = kl_oracle_compare(&bounds, &mut cache);
    for r in &report {
        ensure(r.oracle == 1 && r.status != OracleStatus::Conflict, || format!("{r:?}"))?;
    }
    let by_oracle = report.iter().filter(|r| r.status == OracleStatus::ConsistentOpen).count();
    for p in [5, 7] {
        let cp = solve_bounds(&ideal, Valuation::char_p(p).unwrap()).unwrap();
        ensure(cp.entries() == bounds.entries(), || format!("p = {p} intervals differ"))?;
    }
    let (settled, total) = bounds.settled_count();
    Ok(format!("{settled}/{total} settled by rules; {by_oracle} open entries confirmed as 1 by the oracle"))
}

fn criterion_8() -> Outcome {
    let mut elements = 0;
    for name in ["A2", "B2", "A3"] {
        let s = sys(name);
        let mut cache = KlCache::new(&s);
        for w in s.elements_up_to_length(6) {
            let c = cache.kl_basis_element(&w);
            ensure(bar_involution(&s, &c) == c, || format!("{name}: {w:?} not self-dual"))?;
            for (y, h) in c.terms() {
                ensure(y == &w || h.in_q_z_q(), || format!("{name}: h = {h} not in qZ[q]"))?;
            }
            elements += 1;
        }
    }
    let a3 = sys("A3");
    let y = a3.word_to_element(&[1]).unwrap();
    let w = a3.word_to_element(&[1, 0, 2, 1]).unwrap();
    let mut cache = KlCache::new(&a3);
    let value = cache.kl_eval_at_one(&y, &w);
    ensure(value == 2, || format!("h(1) = {value}"))?;
    let dense = DenseHecke::new(&a3);
    let bar = dense.bar_table(&a3);
    let column = dense.kl_column(&bar, dense.index_of(&w));
    let solved: i64 = column[dense.index_of(&y)].values().sum();
    ensure(solved == 2, || format!("bar-invariant solve gives {solved}"))?;
    let a2 = sys("A2");
    let all = a2.finite_elements(10).unwrap();
    let mut cache = KlCache::new(&a2);
    for y in &all {
        for w in all.iter().filter(|w| a2.bruhat_leq(y, w)) {
            ensure(cache.kl_eval_at_one(y, w) == 1, || format!("A2 ({y:?}, {w:?})"))?;
        }
    }
    Ok(format!("{elements} basis elements; h_(s2, s2s1s3s2)(1) = 2 by both routes"))
}

fn criterion_9(report: &CorpusReport) -> Outcome {
    let exps = report.exponents.clone()?;
    let gamma = report.gamma.clone()?;
    let mut ideals = 0;
    for name in ["A2", "B2"] {
        let s = sys(name);
        for members in all_ideals(&s) {
            let ideal = BruhatIdeal::from_members(&s, members).unwrap();
            let det = integer_determinant(&phi_matrix(&ideal));
            ensure(det.abs() == BigInt::from(1), || format!("{name} ideal of size {}: det {det}", ideal.len()))?;
            ideals += 1;
        }
    }
    Ok(format!("exponents >= 0 over {exps}; {ideals} unimodular ideals; gamma = +1 over {gamma}"))
}

fn run(n: u32, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => {
            println!("[PASS] {n}. {title} ({detail})");
            true
        }
        Err(why) => {
            println!("[FAIL] {n}. {title}: {why}");
            false
        }
    }
}

fn main() -> ExitCode {
    let report = catch_unwind(corpus_pass).ok();
    let from_report = |pick: fn(&CorpusReport) -> &Outcome| -> Outcome {
        match &report {
            Some(r) => pick(r).clone(),
            None => Err("corpus pass panicked".into()),
        }
    };
    let results = [
        run(1, "determinant pins for ss and sss", criterion_1),
        run(2, "Tab and symbol listings for A1 and A2", criterion_2),
        run(3, "Shapovalov identity over the corpus", || from_report(|r| &r.shapovalov)),
        run(4, "separation at the first differing index", || from_report(|r| &r.separation)),
        run(5, "branching rule for subexpression counts", || from_report(|r| &r.branching)),
        run(6, "A2 sum formulas in characteristic 0 and p", criterion_6),
        run(7, "A2 decomposition bounds and oracle", criterion_7),
        run(8, "Kazhdan-Lusztig oracle", criterion_8),
        run(9, "structural properties", || match &report {
            Some(r) => criterion_9(r),
            None => Err("corpus pass panicked".into()),
        }),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
