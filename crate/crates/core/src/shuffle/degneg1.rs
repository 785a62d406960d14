use std::collections::BTreeMap;

use num_traits::One;

use super::{deconcat, shuffle, words, VarpiSpec, Word};
use crate::algebra::{Algebra, Check, Counterexample};
use crate::error::{Error, Result};
use crate::linear::{bilinear, LinComb, Rational, Tensor2};
use crate::ptree::Label;

/// Structure constants of a product `*` and a bracket `{−,−}` on the span of the letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegNeg1Spec {
    labels: Vec<Label>,
    star: BTreeMap<(Label, Label), LinComb<Label>>,
    bracket: BTreeMap<(Label, Label), LinComb<Label>>,
}

impl DegNeg1Spec {
    pub fn new(labels: Vec<Label>) -> Self {
        DegNeg1Spec {
            labels,
            star: BTreeMap::new(),
            bracket: BTreeMap::new(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    fn check_letters<'a>(&self, it: impl IntoIterator<Item = &'a Label>) -> Result<()> {
        match it.into_iter().find(|l| !self.labels.contains(l)) {
            Some(l) => Err(Error::Invalid(format!("unknown letter {l}"))),
            None => Ok(()),
        }
    }

    pub fn set_star(&mut self, d: &Label, e: &Label, value: LinComb<Label>) -> Result<()> {
        self.check_letters([d, e].into_iter().chain(value.keys()))?;
        self.star.insert((d.clone(), e.clone()), value);
        Ok(())
    }

    pub fn set_bracket(&mut self, d: &Label, e: &Label, value: LinComb<Label>) -> Result<()> {
        self.check_letters([d, e].into_iter().chain(value.keys()))?;
        self.bracket.insert((d.clone(), e.clone()), value);
        Ok(())
    }

    pub fn star(&self, d: &Label, e: &Label) -> LinComb<Label> {
        self.star
            .get(&(d.clone(), e.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn bracket(&self, d: &Label, e: &Label) -> LinComb<Label> {
        self.bracket
            .get(&(d.clone(), e.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn star_lc(&self, x: &LinComb<Label>, y: &LinComb<Label>) -> LinComb<Label> {
        bilinear(x, y, |d, e| self.star(d, e))
    }

    pub fn bracket_lc(&self, x: &LinComb<Label>, y: &LinComb<Label>) -> LinComb<Label> {
        bilinear(x, y, |d, e| self.bracket(d, e))
    }

    /// `ϖ_{1,1}(x ⊗ y) = x * y`, `ϖ_{2,0}(xy ⊗ ∅) = {x, y}`.
    pub fn to_varpi(&self) -> VarpiSpec {
        let mut values = BTreeMap::new();
        for ((d, e), x) in &self.star {
            values.insert(
                (Word::letter(d.clone()), Word::letter(e.clone())),
                x.clone(),
            );
        }
        for ((d, e), x) in &self.bracket {
            values.insert((Word(vec![d.clone(), e.clone()]), Word::empty()), x.clone());
        }
        VarpiSpec::new(self.labels.clone(), values).expect("homogeneous of degree -1")
    }

    /// The four identities on `*` and `{−,−}` under which the induced product is Com-PreLie.
    pub fn check_eq7(&self) -> Check {
        let b = |l: &Label| LinComb::basis(l.clone());
        for x in &self.labels {
            for y in &self.labels {
                let anti = self.bracket(x, y) + self.bracket(y, x);
                if !anti.is_zero() {
                    return Err(Counterexample(format!(
                        "{{{x},{y}}} + {{{y},{x}}} = {anti}"
                    )));
                }
                for z in &self.labels {
                    let (bx, by, bz) = (b(x), b(y), b(z));
                    let assoc = |p: &LinComb<Label>, q: &LinComb<Label>, r: &LinComb<Label>| {
                        self.star_lc(&self.star_lc(p, q), r) - self.star_lc(p, &self.star_lc(q, r))
                    };
                    let d = assoc(&bx, &by, &bz) - assoc(&bx, &bz, &by);
                    if !d.is_zero() {
                        return Err(Counterexample(format!("preLie at {x},{y},{z}: {d}")));
                    }
                    let d = self.star_lc(&bx, &self.bracket(y, z))
                        - self.bracket_lc(&self.star(x, y), &bz);
                    if !d.is_zero() {
                        return Err(Counterexample(format!(
                            "x*{{y,z}} = {{x*y,z}} at {x},{y},{z}: {d}"
                        )));
                    }
                    let d = self.star_lc(&self.bracket(x, y), &bz)
                        - self.bracket_lc(&self.star(x, z), &by)
                        - self.bracket_lc(&bx, &self.star(y, z))
                        - self.bracket_lc(&self.bracket(x, y), &bz);
                    if !d.is_zero() {
                        return Err(Counterexample(format!("{{x,y}}*z at {x},{y},{z}: {d}")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `x₁…x_m • y₁…y_n = Σ_i x₁…x_{i−1}(x_i * y₁)(x_{i+1}…x_m ⧢ y₂…y_n)
///  + Σ_i x₁…x_{i−1}{x_i, x_{i+1}}(x_{i+2}…x_m ⧢ y₁…y_n)`.
pub fn bullet_degneg1(spec: &DegNeg1Spec, u: &Word, v: &Word) -> LinComb<Word> {
    let mut out = LinComb::zero();
    let mut emit = |head: Word, mid: LinComb<Label>, tail: LinComb<Word>| {
        for (l, c) in mid.iter() {
            let h = head.concat(&Word::letter(l.clone()));
            for (t, d) in tail.iter() {
                out.add_term(h.concat(t), c * d);
            }
        }
    };
    let m = u.len();
    if let Some(y1) = v.0.first() {
        let rest = v.slice(1, v.len());
        for i in 0..m {
            let mid = spec.star(&u.0[i], y1);
            if !mid.is_zero() {
                emit(u.slice(0, i), mid, shuffle(&u.slice(i + 1, m), &rest));
            }
        }
    }
    for i in 0..m.saturating_sub(1) {
        let mid = spec.bracket(&u.0[i], &u.0[i + 1]);
        if !mid.is_zero() {
            emit(u.slice(0, i), mid, shuffle(&u.slice(i + 2, m), v));
        }
    }
    out
}

/// Three letters `x, y, z` with `x * x = x`, `x * y = y`, `x * z = z`, other products zero, and
/// `{x, y} = a y + b z`, `{x, z} = c y + (1 − a) z` extended antisymmetrically.
pub fn hyperboloid(a: Rational, b: Rational, c: Rational) -> DegNeg1Spec {
    let l = |s: &str| Label::new(s);
    let (x, y, z) = (l("x"), l("y"), l("z"));
    let mut s = DegNeg1Spec::new(vec![x.clone(), y.clone(), z.clone()]);
    let one = Rational::one();
    let lc = |terms: Vec<(&Label, Rational)>| -> LinComb<Label> {
        terms.into_iter().map(|(l, c)| (l.clone(), c)).collect()
    };
    for e in [&x, &y, &z] {
        s.set_star(&x, e, LinComb::basis(e.clone())).unwrap();
    }
    let xy = lc(vec![(&y, a.clone()), (&z, b)]);
    let xz = lc(vec![(&y, c), (&z, &one - &a)]);
    s.set_bracket(&y, &x, -xy.clone()).unwrap();
    s.set_bracket(&z, &x, -xz.clone()).unwrap();
    s.set_bracket(&x, &y, xy).unwrap();
    s.set_bracket(&x, &z, xz).unwrap();
    s
}

/// The shuffle bialgebra with the degree `−1` product of a [`DegNeg1Spec`].
pub struct DegNeg1 {
    pub spec: DegNeg1Spec,
}

impl Algebra for DegNeg1 {
    type B = Word;

    fn name(&self) -> String {
        "degneg1".into()
    }

    fn basis(&self, deg: usize) -> Vec<Word> {
        words(self.spec.labels(), deg)
    }

    fn degree(&self, b: &Word) -> usize {
        b.len()
    }

    fn prelie(&self, a: &Word, b: &Word) -> LinComb<Word> {
        bullet_degneg1(&self.spec, a, b)
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

#[cfg(test)]
mod tests {
    use super::super::{bullet_from_varpi, check_eq2, check_eq3, words_upto};
    use super::*;
    use crate::linear::{int, rat};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn prelie_only() -> DegNeg1Spec {
        // a * a = a, a * b = b: the preLie algebra of a 2-dimensional example
        let (a, b) = (Label::new("a"), Label::new("b"));
        let mut s = DegNeg1Spec::new(vec![a.clone(), b.clone()]);
        s.set_star(&a, &a, LinComb::basis(a.clone())).unwrap();
        s.set_star(&a, &b, LinComb::basis(b.clone())).unwrap();
        s
    }

    #[test]
    fn letters_multiply_by_star() {
        let s = hyperboloid(int(1), int(0), int(5));
        for x in s.labels() {
            for y in s.labels() {
                let got = bullet_degneg1(&s, &Word::letter(x.clone()), &Word::letter(y.clone()));
                assert_eq!(got, s.star(x, y).map_basis(|l| Word::letter(l.clone())));
            }
        }
    }

    #[test]
    fn right_unit_gives_brackets() {
        let s = hyperboloid(int(1), int(0), int(5));
        let got = bullet_degneg1(&s, &w("x.y.z"), &Word::empty());
        let mut want = LinComb::zero();
        for (l, c) in s.bracket(&Label::new("x"), &Label::new("y")).iter() {
            want.add_term(Word(vec![l.clone(), Label::new("z")]), c.clone());
        }
        for (l, c) in s.bracket(&Label::new("y"), &Label::new("z")).iter() {
            want.add_term(Word(vec![Label::new("x"), l.clone()]), c.clone());
        }
        assert_eq!(got, want);
        assert_eq!(got, LinComb::basis(w("y.z")));
    }

    #[test]
    fn matches_varpi_construction() {
        let s = hyperboloid(rat(1, 2), int(1), rat(1, 4));
        let varpi = s.to_varpi();
        assert_eq!(varpi.degree(), Some(-1));
        for u in words_upto(s.labels(), 3) {
            for v in words_upto(s.labels(), 2) {
                assert_eq!(
                    bullet_degneg1(&s, &u, &v),
                    bullet_from_varpi(&varpi, &u, &v),
                    "{u} {v}"
                );
            }
        }
    }

    #[test]
    fn hyperboloid_condition() {
        // a² − a + bc = 0
        for (a, b, c) in [
            (int(0), int(0), int(0)),
            (int(1), int(0), int(7)),
            (rat(1, 2), int(1), rat(1, 4)),
        ] {
            let s = hyperboloid(a, b, c);
            assert_eq!(s.check_eq7(), Ok(()));
            let v = s.to_varpi();
            assert_eq!(check_eq2(&v), Ok(()));
            assert_eq!(check_eq3(&v, 3), Ok(()));
        }
        for (a, b, c) in [
            (int(1), int(1), int(1)),
            (int(2), int(0), int(0)),
            (rat(1, 2), int(0), int(0)),
        ] {
            let s = hyperboloid(a, b, c);
            assert!(s.check_eq7().is_err());
            let v = s.to_varpi();
            assert_eq!(check_eq2(&v), Ok(()));
            assert!(check_eq3(&v, 3).is_err());
        }
    }

    #[test]
    fn symmetric_bracket_fails() {
        let (x, y) = (Label::new("x"), Label::new("y"));
        let mut s = DegNeg1Spec::new(vec![x.clone(), y.clone()]);
        s.set_bracket(&x, &y, LinComb::basis(x.clone())).unwrap();
        s.set_bracket(&y, &x, LinComb::basis(x.clone())).unwrap();
        assert!(check_eq2(&s.to_varpi()).is_err());
        assert!(s.check_eq7().is_err());
    }

    #[test]
    fn zero_bracket_is_fine() {
        let s = prelie_only();
        assert_eq!(s.check_eq7(), Ok(()));
        assert_eq!(check_eq3(&s.to_varpi(), 3), Ok(()));
    }

    #[test]
    fn lowers_length_by_one() {
        let s = hyperboloid(int(1), int(0), int(2));
        for u in words_upto(s.labels(), 3) {
            for v in words_upto(s.labels(), 2) {
                for (x, _) in bullet_degneg1(&s, &u, &v).iter() {
                    assert_eq!(x.len() + 1, u.len() + v.len());
                }
            }
        }
    }

    #[test]
    fn unknown_letter_rejected() {
        let mut s = DegNeg1Spec::new(vec![Label::new("x")]);
        assert!(s
            .set_star(&Label::new("x"), &Label::new("q"), LinComb::zero())
            .is_err());
    }
}
