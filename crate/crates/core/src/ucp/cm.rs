//! The generators `X_w` of the Connes–Moscovici subalgebra of the rooted-forest algebra.

use std::collections::BTreeMap;

use super::hck::Hck;
use super::Elem;
use crate::algebra;
use crate::linear::linalg::solve_in;
use crate::linear::tensor::T2;
use crate::linear::{int, LinComb, Rational, Tensor2};
use crate::ptree::{Dec, Label, PForest};
use crate::shuffle::{words, Word};

/// `N_d(x) = x • •_d`: grafts a `d`-leaf on every vertex.
pub fn growth(h: &Hck, x: &Elem, d: &Label) -> Elem {
    algebra::prelie(
        h,
        x,
        &LinComb::basis(PForest::single(Dec::plain(d.as_str()))),
    )
}

/// `X_{i_1…i_k} = N_{i_k} ∘ … ∘ N_{i_2}(•_{i_1})`; `X_∅ = ∅`.
pub fn cm_generator(h: &Hck, w: &Word) -> Elem {
    let Some((first, rest)) = w.0.split_first() else {
        return LinComb::basis(PForest::empty());
    };
    let mut x = LinComb::basis(PForest::single(Dec::plain(first.as_str())));
    for d in rest {
        x = growth(h, &x, d);
    }
    x
}

/// `m(I) = max{i : [i] ⊆ I}` for `I ⊆ [k]` given 1-based; zero when `1 ∉ I`.
pub fn m_of(subset: &[usize]) -> usize {
    let mut m = 0;
    while subset.contains(&(m + 1)) {
        m += 1;
    }
    m
}

/// `Σ_{∅ ≠ I ⊊ [k]} m(I) X_{w_I} ⊗ X_{w_{[k]∖I}}`, written on index words.
pub fn cm_reduced_coproduct(w: &Word) -> Tensor2<Word, Word> {
    let k = w.len();
    let mut out = LinComb::zero();
    if k == 0 {
        return out;
    }
    for mask in 1u32..(1 << k) - 1 {
        let subset: Vec<usize> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let m = m_of(&subset);
        if m == 0 {
            continue;
        }
        let left = Word(
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| w.0[i].clone())
                .collect(),
        );
        let right = Word(
            (0..k)
                .filter(|i| mask >> i & 1 == 0)
                .map(|i| w.0[i].clone())
                .collect(),
        );
        out.add_term(T2(left, right), int(m as i64));
    }
    out
}

/// Multisets of nonempty words with total length `n`, each sorted.
fn monomials(alphabet: &[Label], n: usize) -> Vec<Vec<Word>> {
    let all: Vec<Word> = (1..=n).flat_map(|k| words(alphabet, k)).collect();
    let mut out = Vec::new();
    fn rec(all: &[Word], start: usize, left: usize, cur: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..all.len() {
            if all[i].len() <= left {
                cur.push(all[i].clone());
                rec(all, i, left - all[i].len(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&all, 0, n, &mut Vec::new(), &mut out);
    out
}

fn monomial_value(h: &Hck, m: &[Word]) -> Elem {
    m.iter().fold(LinComb::basis(PForest::empty()), |acc, w| {
        algebra::mul(h, &acc, &cm_generator(h, w))
    })
}

/// `(π_W ⊗ π_W)(Δ(X_w))` computed inside the forest algebra: both tensor legs are rewritten in
/// the basis of monomials in the `X`'s, and only single-generator coefficients are kept.
pub fn cm_direct(h: &Hck, w: &Word) -> Tensor2<Word, Word> {
    let n = w.len();
    let x = cm_generator(h, w);
    let delta = algebra::reduced_coproduct(h, &x);
    let mut by_split: BTreeMap<usize, Tensor2<PForest, PForest>> = BTreeMap::new();
    for (T2(a, b), c) in delta.iter() {
        by_split
            .entry(a.num_vertices())
            .or_default()
            .add_term(T2(a.clone(), b.clone()), c.clone());
    }
    let mut out = LinComb::zero();
    for (p, part) in by_split {
        let q = n - p;
        let left_monos = monomials(h.labels(), p);
        let right_monos = monomials(h.labels(), q);
        let left_vals: Vec<Elem> = left_monos.iter().map(|m| monomial_value(h, m)).collect();
        let right_vals: Vec<Elem> = right_monos.iter().map(|m| monomial_value(h, m)).collect();
        let mut columns: BTreeMap<PForest, Elem> = BTreeMap::new();
        for (T2(a, b), c) in part.iter() {
            columns
                .entry(b.clone())
                .or_default()
                .add_term(a.clone(), c.clone());
        }
        // rows[i] = Σ_G y_{iG} G where column G = Σ_i y_{iG} M_i
        let mut rows: Vec<Elem> = vec![LinComb::zero(); left_monos.len()];
        for (g, col) in &columns {
            let y = solve_in(&left_vals, col).expect("left leg lies in the generated subalgebra");
            for (i, c) in y {
                rows[i].add_term(g.clone(), c);
            }
        }
        for (i, m) in left_monos.iter().enumerate() {
            if m.len() != 1 || rows[i].is_zero() {
                continue;
            }
            let z = solve_in(&right_vals, &rows[i])
                .expect("right leg lies in the generated subalgebra");
            for (j, c) in z {
                if right_monos[j].len() == 1 {
                    out.add_term(T2(m[0].clone(), right_monos[j][0].clone()), c);
                }
            }
        }
    }
    out
}

/// The preLie product on index words dual to the projected coproduct:
/// `u • v = Σ_w ⟨X_u ⊗ X_v, δ X_w⟩ w`, computed from `cm_direct`.
pub fn induced_word_prelie(h: &Hck, u: &Word, v: &Word) -> LinComb<Word> {
    let n = u.len() + v.len();
    let mut out = LinComb::zero();
    if u.is_empty() || v.is_empty() {
        return out;
    }
    for w in words(h.labels(), n) {
        let c: Rational = cm_direct(h, &w).coeff(&T2(u.clone(), v.clone()));
        out.add_term(w, c);
    }
    out
}
