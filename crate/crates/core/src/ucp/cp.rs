use std::collections::BTreeMap;

use num_traits::One;

use super::{graft_sum, ucp_coproduct_basis, Elem};
use crate::algebra::{Algebra, Memo};
use crate::error::{Error, Result};
use crate::linear::tensor::T2;
use crate::linear::{LinComb, Rational, Tensor2};
use crate::ptree::{enumerate, Dec, Flat, Label, Mode, PForest};

/// A linear endomorphism of the span of the labels, stored column-wise: `f(d) = Σ_e m[e][d] e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    labels: Vec<Label>,
    images: BTreeMap<Label, LinComb<Label>>,
}

impl FMatrix {
    pub fn from_images(
        labels: Vec<Label>,
        images: BTreeMap<Label, LinComb<Label>>,
    ) -> Result<Self> {
        for (d, img) in &images {
            if !labels.contains(d) {
                return Err(Error::Invalid(format!("unknown label {d}")));
            }
            if let Some(e) = img.keys().find(|e| !labels.contains(e)) {
                return Err(Error::Invalid(format!("unknown label {e}")));
            }
        }
        let images = images.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        Ok(FMatrix { labels, images })
    }

    pub fn identity(labels: Vec<Label>) -> Self {
        let images = labels
            .iter()
            .map(|l| (l.clone(), LinComb::basis(l.clone())))
            .collect();
        FMatrix { labels, images }
    }

    pub fn zero(labels: Vec<Label>) -> Self {
        FMatrix {
            labels,
            images: BTreeMap::new(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn apply(&self, d: &Label) -> LinComb<Label> {
        self.images.get(d).cloned().unwrap_or_default()
    }

    pub fn apply_lc(&self, x: &LinComb<Label>) -> LinComb<Label> {
        x.map(|d| self.apply(d))
    }

    /// `f^k(d)`.
    pub fn power(&self, d: &Label, k: u32) -> LinComb<Label> {
        let mut x = LinComb::basis(d.clone());
        for _ in 0..k {
            x = self.apply_lc(&x);
        }
        x
    }

    pub fn entry(&self, e: &Label, d: &Label) -> Rational {
        self.apply(d).coeff(e)
    }

    pub fn is_identity(&self) -> bool {
        *self == FMatrix::identity(self.labels.clone())
    }
}

/// Expands every vertex through `choices(vertex)` multilinearly.
fn expand_vertices(f: &Flat, mut choices: impl FnMut(usize) -> LinComb<Label>) -> Elem {
    let mut partial: Vec<(Flat, Rational)> = vec![(f.clone(), Rational::one())];
    for v in 0..f.len() {
        let opts = choices(v);
        let mut next = Vec::new();
        for (g, c) in &partial {
            for (e, x) in opts.iter() {
                let mut h = g.clone();
                h.dec[v] = Dec {
                    label: e.clone(),
                    counter: 0,
                };
                next.push((h, c * x));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(g, c)| (g.to_forest(), c))
        .collect()
}

/// Image in the quotient by `I_f`, written in the counter-zero basis: each decoration `(k, d)`
/// becomes `f^k(d)`.
pub fn quotient_to_cp(x: &Elem, f: &FMatrix) -> Elem {
    x.map(|t| {
        let flat = Flat::from_forest(t);
        expand_vertices(&flat, |v| f.power(&flat.dec[v].label, flat.dec[v].counter))
    })
}

/// The quotient algebra `UCP(D)/I_f`, with basis the counter-zero trees. `Cp::new` fixes
/// `f = Id`, so that `T • ∅ = |T| T`.
pub struct Cp {
    pub f: FMatrix,
    bases: Memo<usize, Vec<PForest>>,
    coproducts: Memo<PForest, Tensor2<PForest, PForest>>,
}

impl Cp {
    pub fn new(labels: Vec<Label>) -> Self {
        Cp::with_f(FMatrix::identity(labels))
    }

    pub fn with_f(f: FMatrix) -> Self {
        Cp {
            f,
            bases: Memo::default(),
            coproducts: Memo::default(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        self.f.labels()
    }

    fn decorations(&self) -> Vec<Dec> {
        self.labels()
            .iter()
            .map(|l| Dec::plain(l.as_str()))
            .collect()
    }
}

/// `T • T'` in the quotient: grafting, or `Σ_s` (apply `f` at `s`) when `T' = ∅`.
pub fn cp_prelie_basis(t: &PForest, t2: &PForest, f: &FMatrix) -> Elem {
    if t.is_empty() {
        return LinComb::zero();
    }
    if !t2.is_empty() {
        return graft_sum(t, t2);
    }
    if f.is_identity() {
        return LinComb::term(t.clone(), Rational::from_integer(t.num_vertices().into()));
    }
    let flat = Flat::from_forest(t);
    let mut out = LinComb::zero();
    for s in 0..flat.len() {
        out += expand_vertices(&flat, |v| {
            if v == s {
                f.apply(&flat.dec[v].label)
            } else {
                LinComb::basis(flat.dec[v].label.clone())
            }
        });
    }
    out
}

pub fn cp_coproduct_basis(t: &PForest, f: &FMatrix) -> Tensor2<PForest, PForest> {
    let mut out = LinComb::zero();
    for (T2(r, p), c) in ucp_coproduct_basis(t).iter() {
        let r = if f.is_identity() {
            LinComb::basis(r.zero_counters())
        } else {
            quotient_to_cp(&LinComb::basis(r.clone()), f)
        };
        for (r, x) in r.iter() {
            out.add_term(T2(r.clone(), p.clone()), c * x);
        }
    }
    out
}

impl Algebra for Cp {
    type B = PForest;

    fn name(&self) -> String {
        "cp".into()
    }

    fn basis(&self, deg: usize) -> Vec<PForest> {
        self.bases
            .get_or(&deg, || {
                enumerate(deg, &self.decorations(), Mode::Partitioned)
            })
            .as_ref()
            .clone()
    }

    fn degree(&self, b: &PForest) -> usize {
        b.num_vertices()
    }

    fn prelie(&self, a: &PForest, b: &PForest) -> Elem {
        cp_prelie_basis(a, b, &self.f)
    }

    fn mul(&self, a: &PForest, b: &PForest) -> Option<Elem> {
        Some(LinComb::basis(a.mul(b)))
    }

    fn unit(&self) -> Option<PForest> {
        Some(PForest::empty())
    }

    fn coproduct(&self, a: &PForest) -> Option<Tensor2<PForest, PForest>> {
        Some(
            self.coproducts
                .get_or(a, || cp_coproduct_basis(a, &self.f))
                .as_ref()
                .clone(),
        )
    }

    fn has_coproduct(&self) -> bool {
        true
    }
}

impl FMatrix {
    /// Matrix entries as rows indexed by image label, columns by argument label.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.labels
            .iter()
            .map(|e| self.labels.iter().map(|d| self.entry(e, d)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{self, Algebra};
    use crate::linear::int;
    use crate::oudom_guin::{extend_single, SymWord};
    use crate::ucp::{labels_from, Ucp};

    fn p(s: &str) -> PForest {
        s.parse().unwrap()
    }

    fn fmat(labels: &[&str], entries: &[(&str, &str, i64)]) -> FMatrix {
        let mut images: BTreeMap<Label, LinComb<Label>> = BTreeMap::new();
        for (d, e, c) in entries {
            images
                .entry(Label::new(d))
                .or_default()
                .add_term(Label::new(e), int(*c));
        }
        FMatrix::from_images(labels_from(labels), images).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let id = FMatrix::identity(labels_from(&["d", "e"]));
        let t = LinComb::basis(p("{[d([e])]}"));
        assert_eq!(quotient_to_cp(&t, &id), t);
        assert_eq!(
            quotient_to_cp(&LinComb::basis(p("{[d:3]}")), &id),
            LinComb::basis(p("{[d]}"))
        );
        let nil = FMatrix::zero(labels_from(&["d"]));
        assert!(quotient_to_cp(&LinComb::basis(p("{[d:1]}")), &nil).is_zero());
    }

    #[test]
    fn cp_examples() {
        let cp = Cp::new(labels_from(&["d", "e", "f"]));
        assert_eq!(
            cp.prelie(&p("{[d]}"), &PForest::empty()),
            LinComb::basis(p("{[d]}"))
        );
        assert_eq!(
            cp.prelie(&p("{[d([e])]}"), &PForest::empty()),
            LinComb::term(p("{[d([e])]}"), int(2))
        );
        let d = cp.coproduct(&p("{[d([e],[f])]}")).unwrap();
        assert_eq!(d.len(), 5);
        for (l, r) in [
            ("{[d([e],[f])]}", "{}"),
            ("{}", "{[d([e],[f])]}"),
            ("{[d([e])]}", "{[f]}"),
            ("{[d([f])]}", "{[e]}"),
            ("{[d]}", "{[e,f]}"),
        ] {
            assert_eq!(d.coeff(&T2(p(l), p(r))), int(1), "{l} (x) {r}");
        }
        let d = cp.coproduct(&p("{[d([e,f])]}")).unwrap();
        assert_eq!(d.len(), 5);
        assert_eq!(d.coeff(&T2(p("{[d]}"), p("{[e,f]}"))), int(1));
        assert_eq!(d.coeff(&T2(p("{[d([e])]}"), p("{[f]}"))), int(1));
    }

    // Oracle for the per-vertex quotient rule: φ(B_{(k,d)}(T_1, …, T_m)) = f^k(•_d) • (φ(T_1) × … × φ(T_m))
    // evaluated through the symmetric-word extension in the quotient algebra, and φ
    // multiplicative on root blocks.
    fn phi(cp: &Cp, t: &PForest) -> Elem {
        if t.is_empty() {
            return LinComb::basis(PForest::empty());
        }
        let roots = &t.blocks()[0];
        let mut out = LinComb::basis(PForest::empty());
        for n in roots {
            let root = cp.f.power(&n.dec.label, n.dec.counter);
            let root: Elem = root.map_basis(|l| PForest::single(Dec::plain(l.as_str())));
            let mut args: Vec<Elem> = Vec::new();
            for b in &n.children {
                args.push(phi(cp, &PForest::from_blocks(vec![b.clone()]).unwrap()));
            }
            // expand the product of combinations into symmetric words
            let mut words: LinComb<SymWord<PForest>> = LinComb::basis(SymWord::unit());
            for a in &args {
                let mut next = LinComb::zero();
                for (w, c) in words.iter() {
                    for (x, d) in a.iter() {
                        next.add_term(w.with(x.clone()), c * d);
                    }
                }
                words = next;
            }
            let mut value = LinComb::zero();
            for (r, c) in root.iter() {
                for (w, d) in words.iter() {
                    value.add_scaled(&extend_single(cp, r, w).unwrap(), &(c * d));
                }
            }
            out = algebra::mul(cp, &out, &value);
        }
        out
    }

    #[test]
    fn quotient_rule_matches_recursive_oracle() {
        let labels = &["d", "e"];
        let fs = [
            FMatrix::identity(labels_from(labels)),
            FMatrix::zero(labels_from(labels)),
            fmat(labels, &[("d", "e", 1)]),
            fmat(labels, &[("d", "d", 2), ("d", "e", -1), ("e", "d", 3)]),
        ];
        let ucp = Ucp::new(labels_from(labels), 2);
        for f in fs {
            let cp = Cp::with_f(f.clone());
            for n in 1..=3 {
                for t in ucp.basis(n) {
                    let x = LinComb::basis(t.clone());
                    assert_eq!(
                        quotient_to_cp(&x, &f),
                        phi(&cp, &t),
                        "{t} with {:?}",
                        f.rows()
                    );
                }
            }
        }
    }

    #[test]
    fn general_f_is_comprelie_quotient() {
        // The quotient map is a morphism for both products on small pairs.
        let labels = &["d", "e"];
        let f = fmat(labels, &[("d", "d", 2), ("d", "e", -1), ("e", "d", 3)]);
        let ucp = Ucp::new(labels_from(labels), 1);
        let cp = Cp::with_f(f.clone());
        for n in 0..=2 {
            for m in 0..=2 {
                for a in ucp.basis(n) {
                    for b in ucp.basis(m) {
                        let lhs = quotient_to_cp(&ucp.prelie(&a, &b), &f);
                        let qa = quotient_to_cp(&LinComb::basis(a.clone()), &f);
                        let qb = quotient_to_cp(&LinComb::basis(b.clone()), &f);
                        assert_eq!(lhs, algebra::prelie(&cp, &qa, &qb), "{a} • {b}");
                    }
                }
            }
        }
    }
}
