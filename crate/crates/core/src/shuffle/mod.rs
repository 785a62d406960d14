//! The tensor coalgebra on a finite alphabet: words, shuffles, deconcatenation, and the
//! Com-PreLie products built from a map `ϖ : T(V) ⊗ T(V) → V`.

mod degneg1;
mod specfile;
mod tvf;
mod varpi;

pub use degneg1::{bullet_degneg1, hyperboloid, DegNeg1, DegNeg1Spec};
pub use specfile::{parse_spec_file, SpecFile};
pub use tvf::{bullet_tvf, bullet_tvf_shuffles, m_k_statistic, shuffles, Tvf};
pub use varpi::{bullet_from_varpi, check_eq2, check_eq3, VarpiSpec};

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linear::tensor::T2;
use crate::linear::{LinComb, Rational, Tensor2};
use crate::ptree::Label;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Label>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Label) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("eps");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "eps" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut pos = 0;
        for part in s.split('.') {
            if part.is_empty() || !part.bytes().all(|c| c.is_ascii_alphanumeric() || c == b'_') {
                return Err(Error::parse(pos, format!("bad letter {part:?}")));
            }
            letters.push(Label::new(part));
            pos += part.len() + 1;
        }
        Ok(Word(letters))
    }
}

/// All words of length `n`, in lexicographic order of letter positions in `alphabet`.
pub fn words(alphabet: &[Label], n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l.clone());
                    Word(v)
                })
            })
            .collect();
    }
    out
}

pub fn words_upto(alphabet: &[Label], n: usize) -> Vec<Word> {
    (0..=n).flat_map(|k| words(alphabet, k)).collect()
}

/// Sum over all interleavings of `u` and `v`.
pub fn shuffle(u: &Word, v: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    fn rec(u: &[Label], v: &[Label], buf: &mut Vec<Label>, out: &mut LinComb<Word>) {
        if u.is_empty() || v.is_empty() {
            let mut w = buf.clone();
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.add_term(Word(w), Rational::one());
            return;
        }
        buf.push(u[0].clone());
        rec(&u[1..], v, buf, out);
        buf.pop();
        buf.push(v[0].clone());
        rec(u, &v[1..], buf, out);
        buf.pop();
    }
    rec(&u.0, &v.0, &mut buf, &mut out);
    out
}

pub fn shuffle_lc(x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
    crate::linear::bilinear(x, y, shuffle)
}

/// Concatenation extended bilinearly.
pub fn concat_lc(x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
    crate::linear::bilinear(x, y, |a, b| LinComb::basis(a.concat(b)))
}

/// `Σ_i w_{<i} ⊗ w_{≥i}`.
pub fn deconcat(w: &Word) -> Tensor2<Word, Word> {
    (0..=w.len())
        .map(|i| (T2(w.slice(0, i), w.slice(i, w.len())), Rational::one()))
        .collect()
}

/// Words of length one as a letter combination; everything else is dropped.
pub fn pi(x: &LinComb<Word>) -> LinComb<Label> {
    let mut out = LinComb::zero();
    for (w, c) in x.iter() {
        if w.len() == 1 {
            out.add_term(w.0[0].clone(), c.clone());
        }
    }
    out
}

pub fn letters_to_words(x: &LinComb<Label>) -> LinComb<Word> {
    x.map_basis(|l| Word::letter(l.clone()))
}
