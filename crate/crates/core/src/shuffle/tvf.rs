use super::{deconcat, shuffle, words, Word};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linear::{LinComb, Tensor2};
use crate::ptree::Label;
use crate::ucp::FMatrix;

/// `x₁…x_m • v = Σ_i x₁…x_{i−1} f(x_i) (x_{i+1}…x_m ⧢ v)`.
pub fn bullet_tvf(f: &FMatrix, u: &Word, v: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for i in 0..u.len() {
        let fx = f.apply(&u.0[i]);
        if fx.is_zero() {
            continue;
        }
        let tail = shuffle(&u.slice(i + 1, u.len()), v);
        let head = u.slice(0, i);
        for (l, c) in fx.iter() {
            let mid = head.concat(&Word::letter(l.clone()));
            for (t, d) in tail.iter() {
                out.add_term(mid.concat(t), c * d);
            }
        }
    }
    out
}

/// The `(k, l)`-shuffles as image lists `[σ(1), …, σ(k+l)]`.
pub fn shuffles(k: usize, l: usize) -> Vec<Vec<usize>> {
    let n = k + l;
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let first: Vec<usize> = (0..n)
            .filter(|p| mask >> p & 1 == 1)
            .map(|p| p + 1)
            .collect();
        let second = (0..n).filter(|p| mask >> p & 1 == 0).map(|p| p + 1);
        out.push(first.into_iter().chain(second).collect());
    }
    out.sort();
    out
}

/// `m_k(σ) = max{i ≤ k : σ(1) = 1, …, σ(i) = i}`.
pub fn m_k_statistic(sigma: &[usize], k: usize) -> Result<usize> {
    let n = sigma.len();
    let mut seen = vec![false; n + 1];
    for &s in sigma {
        if s == 0 || s > n || seen[s] {
            return Err(Error::Invalid(format!("{sigma:?} is not a permutation")));
        }
        seen[s] = true;
    }
    let increasing = |r: &[usize]| r.windows(2).all(|p| p[0] < p[1]);
    if k > n || !increasing(&sigma[..k]) || !increasing(&sigma[k..]) {
        return Err(Error::Invalid(format!(
            "{sigma:?} is not a ({k}, {})-shuffle",
            n - k
        )));
    }
    Ok((0..k).take_while(|&i| sigma[i] == i + 1).count())
}

/// The same product as a sum over shuffles weighted by `m_k(σ)` positions where `f` acts.
pub fn bullet_tvf_shuffles(f: &FMatrix, u: &Word, v: &Word) -> LinComb<Word> {
    let (k, l) = (u.len(), v.len());
    let letters: Vec<&Label> = u.0.iter().chain(&v.0).collect();
    let mut out = LinComb::zero();
    for sigma in shuffles(k, l) {
        let m = m_k_statistic(&sigma, k).expect("generated shuffle");
        if m == 0 {
            continue;
        }
        let mut w: Vec<Label> = vec![letters[0].clone(); k + l];
        for (j, &s) in sigma.iter().enumerate() {
            w[s - 1] = letters[j].clone();
        }
        for i in 0..m {
            for (y, c) in f.apply(&w[i]).iter() {
                let mut x = w.clone();
                x[i] = y.clone();
                out.add_term(Word(x), c.clone());
            }
        }
    }
    out
}

/// The shuffle bialgebra with the degree-zero product induced by `f`.
pub struct Tvf {
    pub f: FMatrix,
}

impl Tvf {
    pub fn new(f: FMatrix) -> Self {
        Tvf { f }
    }
}

impl Algebra for Tvf {
    type B = Word;

    fn name(&self) -> String {
        "tvf".into()
    }

    fn basis(&self, deg: usize) -> Vec<Word> {
        words(self.f.labels(), deg)
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn prelie(&self, a: &Word, b: &Word) -> LinComb<Word> {
        bullet_tvf(&self.f, a, b)
    }

    fn mul(&self, a: &Word, b: &Word) -> Option<LinComb<Word>> {
        Some(shuffle(a, b))
    }

    fn unit(&self) -> Option<Word> {
        Some(Word::empty())
    }

    fn coproduct(&self, a: &Word) -> Option<Tensor2<Word, Word>> {
        Some(deconcat(a))
    }

    fn has_coproduct(&self) -> bool {
        true
    }
}
