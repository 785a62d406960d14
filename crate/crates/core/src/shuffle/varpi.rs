use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{shuffle, words, Word};
use crate::algebra::{Check, Counterexample};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Rational};
use crate::ptree::Label;
use crate::ucp::FMatrix;

/// A homogeneous map `ϖ : T(V) ⊗ T(V) → V` given by its values on pairs of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarpiSpec {
    alphabet: Vec<Label>,
    values: BTreeMap<(Word, Word), LinComb<Label>>,
    degree: Option<i64>,
}

impl VarpiSpec {
    /// Rejects unknown letters and components of different degrees.
    pub fn new(
        alphabet: Vec<Label>,
        values: BTreeMap<(Word, Word), LinComb<Label>>,
    ) -> Result<Self> {
        let mut degree = None;
        let mut kept = BTreeMap::new();
        for ((u, v), x) in values {
            if x.is_zero() {
                continue;
            }
            let letters = u.0.iter().chain(&v.0).chain(x.keys());
            if let Some(l) = letters.into_iter().find(|l| !alphabet.contains(l)) {
                return Err(Error::Invalid(format!("unknown letter {l}")));
            }
            let n = 1 - (u.len() + v.len()) as i64;
            match degree {
                Some(d) if d != n => {
                    return Err(Error::Invalid(format!(
                        "ϖ is not homogeneous: degrees {d} and {n}"
                    )))
                }
                _ => degree = Some(n),
            }
            kept.insert((u, v), x);
        }
        Ok(VarpiSpec {
            alphabet,
            values: kept,
            degree,
        })
    }

    pub fn zero(alphabet: Vec<Label>) -> Self {
        VarpiSpec {
            alphabet,
            values: BTreeMap::new(),
            degree: None,
        }
    }

    /// The map whose only component is `ϖ_{1,0} = f`.
    pub fn from_f(f: &FMatrix) -> Self {
        let values = f
            .labels()
            .iter()
            .map(|d| ((Word::letter(d.clone()), Word::empty()), f.apply(d)))
            .collect();
        VarpiSpec::new(f.labels().to_vec(), values).expect("letters come from the matrix")
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }

    /// The degree `N` of the induced product; `None` for the zero map.
    pub fn degree(&self) -> Option<i64> {
        self.degree
    }

    pub fn eval(&self, u: &Word, v: &Word) -> LinComb<Label> {
        self.values
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn eval_lc(&self, x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Label> {
        crate::linear::bilinear(x, y, |u, v| self.eval(u, v))
    }

    fn lengths(&self) -> Vec<(usize, usize)> {
        let set: std::collections::BTreeSet<_> = self
            .values
            .keys()
            .map(|(u, v)| (u.len(), v.len()))
            .collect();
        set.into_iter().collect()
    }
}

/// `u • v = Σ u⁽¹⁾ ϖ(u⁽²⁾ ⊗ v⁽¹⁾) (u⁽³⁾ ⧢ v⁽²⁾)`.
pub fn bullet_from_varpi(spec: &VarpiSpec, u: &Word, v: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    let lens = spec.lengths();
    for i in 0..=u.len() {
        for j in i..=u.len() {
            for k in 0..=v.len() {
                if !lens.contains(&(j - i, k)) {
                    continue;
                }
                let val = spec.eval(&u.slice(i, j), &v.slice(0, k));
                if val.is_zero() {
                    continue;
                }
                let tail = shuffle(&u.slice(j, u.len()), &v.slice(k, v.len()));
                let head = u.slice(0, i);
                for (l, c) in val.iter() {
                    let mid = head.concat(&Word::letter(l.clone()));
                    for (t, d) in tail.iter() {
                        out.add_term(mid.concat(t), c * d);
                    }
                }
            }
        }
    }
    out
}

fn bullet_lc(spec: &VarpiSpec, x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
    crate::linear::bilinear(x, y, |u, v| bullet_from_varpi(spec, u, v))
}

/// Length triples `(k, l, n)` with the given sum.
fn triples(sum: i64, cap: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    if sum < 0 {
        return out;
    }
    let s = sum as usize;
    for k in 0..=s.min(cap) {
        for l in 0..=(s - k).min(cap) {
            let n = s - k - l;
            if n <= cap {
                out.push((k, l, n));
            }
        }
    }
    out
}

fn word_triples(a: &[Label], k: usize, l: usize, n: usize) -> Vec<(Word, Word, Word)> {
    let mut out = Vec::new();
    for u in words(a, k) {
        for v in words(a, l) {
            for w in words(a, n) {
                out.push((u.clone(), v.clone(), w.clone()));
            }
        }
    }
    out
}

fn eps(w: &Word) -> Rational {
    Rational::from_integer(if w.is_empty() { 1 } else { 0 }.into())
}

/// `ϖ((u ⧢ v) ⊗ w) = ε(u) ϖ(v ⊗ w) + ε(v) ϖ(u ⊗ w)`, on the lengths `k + l + n = 1 − N` that can
/// contribute.
pub fn check_eq2(spec: &VarpiSpec) -> Check {
    let Some(n) = spec.degree() else {
        return Ok(());
    };
    let cases: Vec<_> = triples(1 - n, usize::MAX)
        .into_iter()
        .flat_map(|(k, l, m)| word_triples(spec.alphabet(), k, l, m))
        .collect();
    cases.par_iter().try_for_each(|(u, v, w)| {
        let lhs = spec.eval_lc(&shuffle(u, v), &LinComb::basis(w.clone()));
        let rhs = &spec.eval(v, w) * &eps(u) + &spec.eval(u, w) * &eps(v);
        if lhs == rhs {
            Ok(())
        } else {
            Err(Counterexample(format!(
                "u={u} v={v} w={w}: lhs {lhs}, rhs {rhs}"
            )))
        }
    })
}

/// `ϖ(u•v ⊗ w) − ϖ(u ⊗ v•w)` symmetric in `v, w`, on the lengths `k + l + n = 1 − 2N` with every
/// word of length at most `maxdeg`.
pub fn check_eq3(spec: &VarpiSpec, maxdeg: usize) -> Check {
    let Some(n) = spec.degree() else {
        return Ok(());
    };
    let cases: Vec<_> = triples(1 - 2 * n, maxdeg)
        .into_iter()
        .flat_map(|(k, l, m)| word_triples(spec.alphabet(), k, l, m))
        .collect();
    let side = |u: &Word, v: &Word, w: &Word| {
        let (u, v, w) = (
            LinComb::basis(u.clone()),
            LinComb::basis(v.clone()),
            LinComb::basis(w.clone()),
        );
        spec.eval_lc(&bullet_lc(spec, &u, &v), &w) - spec.eval_lc(&u, &bullet_lc(spec, &v, &w))
    };
    cases.par_iter().try_for_each(|(u, v, w)| {
        let lhs = side(u, v, w);
        let rhs = side(u, w, v);
        if lhs == rhs {
            Ok(())
        } else {
            Err(Counterexample(format!(
                "u={u} v={v} w={w}: lhs {lhs}, rhs {rhs}"
            )))
        }
    })
}
