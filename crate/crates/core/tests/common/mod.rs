//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use lightleaf_core::coxeter::{preset, CoxeterSystem, Element};

pub fn sys(name: &str) -> CoxeterSystem {
    preset(name).unwrap_or_else(|| panic!("unknown preset {name}"))
}

/// Every word of length at most `max_len` over `rank` generators.
pub fn words_up_to(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..rank {
                let mut v: Vec<usize> = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The exhaustive corpus: words of length ≤ 8 over A1, A2, B2, A1xA1 and of
/// length ≤ 6 over A3.
pub fn corpus() -> Vec<(CoxeterSystem, Vec<Vec<usize>>)> {
    let mut out = Vec::new();
    for name in ["A1", "A2", "B2", "A1xA1"] {
        let s = sys(name);
        let words = words_up_to(s.rank(), 8);
        out.push((s, words));
    }
    let a3 = sys("A3");
    let words = words_up_to(3, 6);
    out.push((a3, words));
    out
}

/// All 0/1 vectors of length `k`, in lexicographic order.
pub fn all_bits(k: usize) -> Vec<Vec<u8>> {
    (0..1u32 << k)
        .map(|m| (0..k).map(|i| ((m >> (k - 1 - i)) & 1) as u8).collect())
        .collect()
}

/// Endpoint of the subexpression `bits` of `word`, by multiplying out.
pub fn endpoint(system: &CoxeterSystem, word: &[usize], bits: &[u8]) -> Element {
    let chosen: Vec<usize> = word.iter().zip(bits).filter(|(_, &b)| b == 1).map(|(&s, _)| s).collect();
    system.word_to_element(&chosen).unwrap()
}

/// `x ≤ y` by the subword criterion against the ShortLex word of `y`.
pub fn subword_leq(system: &CoxeterSystem, x: &Element, y: &Element) -> bool {
    let word = system.reduced_word(y);
    all_bits(word.len()).iter().any(|b| &endpoint(system, &word, b) == x)
}

/// Length by counting inversions among all positive roots.
pub fn inversion_length(system: &CoxeterSystem, w: &Element) -> usize {
    system
        .finite_positive_roots(1000)
        .unwrap()
        .iter()
        .filter(|b| system.apply(w, b).unwrap().is_negative())
        .count()
}

/// Every Bruhat ideal of a finite group, by checking all subsets.
pub fn all_ideals(system: &CoxeterSystem) -> Vec<BTreeSet<Element>> {
    let all = system.finite_elements(1000).unwrap();
    assert!(all.len() <= 16, "subset enumeration only for small groups");
    let mut out = Vec::new();
    for mask in 1u32..(1 << all.len()) {
        let set: BTreeSet<Element> =
            all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e.clone()).collect();
        let closed = set.iter().all(|y| all.iter().all(|x| !subword_leq(system, x, y) || set.contains(x)));
        if closed {
            out.push(set);
        }
    }
    out
}

/// Ideals with at most `max_size` members, grown one element at a time.
pub fn small_ideals(system: &CoxeterSystem, max_size: usize) -> Vec<BTreeSet<Element>> {
    let all = system.finite_elements(1000).unwrap();
    let mut seen: BTreeSet<BTreeSet<Element>> = BTreeSet::new();
    let mut frontier = vec![BTreeSet::from([system.identity()])];
    seen.insert(frontier[0].clone());
    while let Some(ideal) = frontier.pop() {
        if ideal.len() == max_size {
            continue;
        }
        for x in &all {
            if ideal.contains(x) {
                continue;
            }
            let covers_in = system.right_descents(x).iter().all(|&s| ideal.contains(&system.mul_generator_right(x, s)));
            let below_in = all.iter().all(|z| z == x || !system.bruhat_leq(z, x) || ideal.contains(z));
            if covers_in && below_in {
                let mut next = ideal.clone();
                next.insert(x.clone());
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Laurent polynomials for the Hecke oracle: exponent → coefficient.
pub type Poly = BTreeMap<i32, i64>;

pub fn padd(a: &mut Poly, e: i32, c: i64) {
    if c == 0 {
        return;
    }
    let v = a.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        a.remove(&e);
    }
}

pub fn pmul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            padd(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

pub fn pbar(a: &Poly) -> Poly {
    a.iter().map(|(&e, &c)| (-e, c)).collect()
}

/// Dense Hecke algebra of a finite group, independent of the library's
/// Hecke module. Elements are indexed by position in `elements`.
pub struct DenseHecke {
    pub elements: Vec<Element>,
    index: BTreeMap<Element, usize>,
    right: Vec<Vec<usize>>,
    lengths: Vec<usize>,
}

impl DenseHecke {
    pub fn new(system: &CoxeterSystem) -> Self {
        let elements = system.finite_elements(1000).unwrap();
        let index: BTreeMap<Element, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let right = elements
            .iter()
            .map(|w| (0..system.rank()).map(|s| index[&system.mul_generator_right(w, s)]).collect())
            .collect();
        let lengths = elements.iter().map(|w| inversion_length(system, w)).collect();
        DenseHecke { elements, index, right, lengths }
    }

    pub fn index_of(&self, w: &Element) -> usize {
        self.index[w]
    }

    /// `v · H_s` with `H_s^2 = 1 + (q^{-1} - q) H_s`.
    fn times_generator(&self, v: &[Poly], s: usize) -> Vec<Poly> {
        let mut out = vec![Poly::new(); v.len()];
        for (w, p) in v.iter().enumerate() {
            if p.is_empty() {
                continue;
            }
            let ws = self.right[w][s];
            for (&e, &c) in p {
                padd(&mut out[ws], e, c);
                if self.lengths[ws] < self.lengths[w] {
                    padd(&mut out[w], e - 1, c);
                    padd(&mut out[w], e + 1, -c);
                }
            }
        }
        out
    }

    /// `bar(H_y)` in the standard basis, for every `y`.
    pub fn bar_table(&self, system: &CoxeterSystem) -> Vec<Vec<Poly>> {
        let n = self.elements.len();
        let mut table: Vec<Option<Vec<Poly>>> = vec![None; n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.lengths[i]);
        for i in order {
            let v = if self.lengths[i] == 0 {
                let mut v = vec![Poly::new(); n];
                v[i].insert(0, 1);
                v
            } else {
                let s = system.right_descents(&self.elements[i])[0];
                let prev = table[self.right[i][s]].as_ref().unwrap();
                // bar(H_y) = bar(H_{ys}) · (H_s + q - q^{-1}).
                let mut v = self.times_generator(prev, s);
                for (w, p) in prev.iter().enumerate() {
                    for (&e, &c) in p {
                        padd(&mut v[w], e + 1, c);
                        padd(&mut v[w], e - 1, -c);
                    }
                }
                v
            };
            table[i] = Some(v);
        }
        table.into_iter().map(Option::unwrap).collect()
    }

    /// `h_{x,w}` for all `x`, by solving bar-invariance downward from `w`:
    /// `h_x - bar(h_x) = Σ_{y>x} bar(h_y) r_{x,y}` with `h_x ∈ qℤ[q]`.
    pub fn kl_column(&self, bar: &[Vec<Poly>], w: usize) -> Vec<Poly> {
        let n = self.elements.len();
        let mut h = vec![Poly::new(); n];
        h[w].insert(0, 1);
        let mut order: Vec<usize> = (0..n).filter(|&x| self.lengths[x] < self.lengths[w]).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.lengths[x]));
        for x in order {
            let mut rhs = Poly::new();
            for y in 0..n {
                if y == x || h[y].is_empty() {
                    continue;
                }
                for (&e, &c) in &pmul(&pbar(&h[y]), &bar[y][x]) {
                    padd(&mut rhs, e, c);
                }
            }
            h[x] = rhs.into_iter().filter(|&(e, _)| e > 0).collect();
        }
        h
    }
}
