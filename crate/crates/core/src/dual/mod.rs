//! The preLie products `◇` dual to the coproducts of the free algebras, the statistic `ς`, and
//! the isomorphisms `Θ` and `Ψ`.

mod iso;

pub use iso::{psi, psi_basis, psi_inverse, theta, theta_basis};

use num_traits::One;

use crate::algebra::{Algebra, Memo};
use crate::linear::tensor::T2;
use crate::linear::{LinComb, Rational, Tensor2};
use crate::ptree::{enumerate, varsigma, Dec, Flat, GraftTarget, Label, Mode, PForest};
use crate::ucp::Elem;

/// Every `T •_{s,b} T'` with `b` a child block of `s` or a new block, paired with `s`.
fn block_grafts(t: &PForest, t2: &PForest) -> Vec<(usize, Flat)> {
    if t.is_empty() || t2.is_empty() {
        return Vec::new();
    }
    let f = Flat::from_forest(t);
    let g = Flat::from_forest(t2);
    let mut out = Vec::new();
    for s in 0..f.len() {
        let nb = f.child_blocks(s).len();
        let targets = (0..nb).map(GraftTarget::Child).chain([GraftTarget::Star]);
        for target in targets {
            out.push((s, f.graft(s, target, &g).expect("vertex and block exist")));
        }
    }
    out
}

/// `T ◇ T' = Σ_{s, b} (T •_{s,b} T')[−1]_s`; summands whose counter would turn negative vanish.
pub fn diamond_ucp(t: &PForest, t2: &PForest) -> Elem {
    block_grafts(t, t2)
        .into_iter()
        .filter_map(|(s, h)| h.shifted(s, -1))
        .map(|h| (h.to_forest(), Rational::one()))
        .collect()
}

/// `T ◇ T' = Σ_{s, b} T •_{s,b} T'`, on one-rooted trees.
pub fn diamond_cp(t: &PForest, t2: &PForest) -> Elem {
    diamond_ext(t, t2)
}

/// The same sum on arbitrary partitioned trees; `∅` is absorbing on both sides.
pub fn diamond_ext(t: &PForest, t2: &PForest) -> Elem {
    block_grafts(t, t2)
        .into_iter()
        .map(|(_, h)| (h.to_forest(), Rational::one()))
        .collect()
}

/// `T ∘ T' = Σ_s T •_{s,*} T'`, zero when either side is empty.
pub fn star_graft(t: &PForest, t2: &PForest) -> Elem {
    if t.is_empty() || t2.is_empty() {
        return LinComb::zero();
    }
    crate::ucp::graft_sum(t, t2)
}

/// One-rooted trees with `n` vertices and `ς = 0`.
pub fn free_generators_cp(labels: &[Label], n: usize) -> Vec<PForest> {
    let decs: Vec<Dec> = labels.iter().map(|l| Dec::plain(l.as_str())).collect();
    enumerate(n, &decs, Mode::OneRooted)
        .into_iter()
        .filter(|t| !t.is_empty() && varsigma(t) == 0)
        .collect()
}

/// `δ(B_d(T₁ … T_k)) = Σ_{i ≤ ς} B_d(T₁ … T̂_i … T_k) ⊗ T_i` over the one-rooted `T_i`.
pub fn gcp_delta(t: &PForest) -> Tensor2<PForest, PForest> {
    let mut out = LinComb::zero();
    let Some(root) = t.root() else { return out };
    if !t.is_one_rooted() {
        return out;
    }
    for (i, b) in root.children.iter().enumerate() {
        if b.len() != 1 {
            continue;
        }
        let mut rest = root.children.clone();
        let removed = rest.remove(i);
        let left = PForest::rooted(root.dec.clone(), rest);
        let right = PForest::from_blocks(vec![removed]).expect("nonempty block");
        out.add_term(T2(left, right), Rational::one());
    }
    out
}

/// `Υ(T ⊗ T') = T •_{r(T),*} T'`.
pub fn upsilon(t: &PForest, t2: &PForest) -> PForest {
    let root = t.root().expect("nonempty tree");
    let mut children = root.children.clone();
    children.push(t2.blocks()[0].clone());
    PForest::rooted(root.dec.clone(), children)
}

fn one_rooted_basis(decs: &[Dec], deg: usize) -> Vec<PForest> {
    enumerate(deg, decs, Mode::OneRooted)
        .into_iter()
        .filter(|t| !t.is_empty())
        .collect()
}

/// The preLie algebra spanned by one-rooted trees with counters, under [`diamond_ucp`]. Bases
/// are truncated to counters `≤ max_counter`.
pub struct DualUcp {
    pub labels: Vec<Label>,
    pub max_counter: u32,
    bases: Memo<usize, Vec<PForest>>,
}

impl DualUcp {
    pub fn new(labels: Vec<Label>, max_counter: u32) -> Self {
        DualUcp {
            labels,
            max_counter,
            bases: Memo::default(),
        }
    }
}

impl Algebra for DualUcp {
    type B = PForest;

    fn name(&self) -> String {
        "gucp".into()
    }

    fn basis(&self, deg: usize) -> Vec<PForest> {
        self.bases
            .get_or(&deg, || {
                let decs: Vec<Dec> = (0..=self.max_counter)
                    .flat_map(|k| self.labels.iter().map(move |l| Dec::new(l.as_str(), k)))
                    .collect();
                one_rooted_basis(&decs, deg)
            })
            .as_ref()
            .clone()
    }

    fn degree(&self, b: &PForest) -> usize {
        b.num_vertices()
    }

    fn prelie(&self, a: &PForest, b: &PForest) -> Elem {
        diamond_ucp(a, b)
    }
}

/// One-rooted trees without counters under [`diamond_cp`].
pub struct DualCp {
    pub labels: Vec<Label>,
}

impl Algebra for DualCp {
    type B = PForest;

    fn name(&self) -> String {
        "gcp".into()
    }

    fn basis(&self, deg: usize) -> Vec<PForest> {
        let decs: Vec<Dec> = self.labels.iter().map(|l| Dec::plain(l.as_str())).collect();
        one_rooted_basis(&decs, deg)
    }

    fn degree(&self, b: &PForest) -> usize {
        b.num_vertices()
    }

    fn prelie(&self, a: &PForest, b: &PForest) -> Elem {
        diamond_cp(a, b)
    }
}

/// All partitioned trees without counters, with the merged-root product and [`diamond_ext`].
pub struct DualExt {
    pub labels: Vec<Label>,
}

impl Algebra for DualExt {
    type B = PForest;

    fn name(&self) -> String {
        "cp-diamond".into()
    }

    fn basis(&self, deg: usize) -> Vec<PForest> {
        let decs: Vec<Dec> = self.labels.iter().map(|l| Dec::plain(l.as_str())).collect();
        enumerate(deg, &decs, Mode::Partitioned)
    }

    fn degree(&self, b: &PForest) -> usize {
        b.num_vertices()
    }

    fn prelie(&self, a: &PForest, b: &PForest) -> Elem {
        diamond_ext(a, b)
    }

    fn mul(&self, a: &PForest, b: &PForest) -> Option<Elem> {
        Some(LinComb::basis(a.mul(b)))
    }

    fn unit(&self) -> Option<PForest> {
        Some(PForest::empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra;
    use crate::linear::int;
    use crate::linear::linalg::kernel_of;
    use crate::linear::tensor::{expand_left, swap23, tensor};
    use crate::ucp::labels_from;

    fn p(s: &str) -> PForest {
        s.parse().unwrap()
    }

    fn lc(terms: &[&str]) -> Elem {
        let mut out = LinComb::zero();
        for s in terms {
            out.add_term(p(s), int(1));
        }
        out
    }

    fn prelie_defect<A: Algebra>(alg: &A, x: &A::B, y: &A::B, z: &A::B) -> LinComb<A::B> {
        let (x, y, z) = (
            LinComb::basis(x.clone()),
            LinComb::basis(y.clone()),
            LinComb::basis(z.clone()),
        );
        let assoc = |a: &LinComb<A::B>, b: &LinComb<A::B>, c: &LinComb<A::B>| {
            algebra::prelie(alg, &algebra::prelie(alg, a, b), c)
                - algebra::prelie(alg, a, &algebra::prelie(alg, b, c))
        };
        assoc(&x, &y, &z) - assoc(&x, &z, &y)
    }

    fn sweep_prelie<A: Algebra>(alg: &A, total: usize) {
        for n1 in 1..total {
            for n2 in 1..total - n1 {
                for n3 in 1..=total - n1 - n2 {
                    for x in alg.basis(n1) {
                        for y in alg.basis(n2) {
                            for z in alg.basis(n3) {
                                assert!(prelie_defect(alg, &x, &y, &z).is_zero(), "{x} {y} {z}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ucp_examples() {
        for (i, j) in [(0, 0), (0, 2), (1, 0), (3, 1)] {
            let got = diamond_ucp(&p(&format!("{{[d:{i}]}}")), &p(&format!("{{[d:{j}]}}")));
            let want = if i == 0 {
                LinComb::zero()
            } else {
                lc(&[&format!("{{[d:{}([d:{j}])]}}", i - 1)])
            };
            assert_eq!(got, want, "{i} {j}");
        }
        for (i, j, k) in [(0, 0, 0), (1, 0, 2), (0, 1, 0), (2, 3, 1)] {
            let got = diamond_ucp(
                &p(&format!("{{[d:{i}([d:{j}])]}}")),
                &p(&format!("{{[d:{k}]}}")),
            );
            let mut want = LinComb::zero();
            if j > 0 {
                want += lc(&[&format!("{{[d:{i}([d:{}([d:{k}])])]}}", j - 1)]);
            }
            if i > 0 {
                want += lc(&[
                    &format!("{{[d:{}([d:{k}],[d:{j}])]}}", i - 1),
                    &format!("{{[d:{}([d:{k},d:{j}])]}}", i - 1),
                ]);
            }
            assert_eq!(got, want, "{i} {j} {k}");
        }
        assert!(diamond_ucp(&p("{[d]}"), &p("{[d:4([d:1])]}")).is_zero());
    }

    #[test]
    fn cp_examples() {
        assert_eq!(diamond_cp(&p("{[d]}"), &p("{[d]}")), lc(&["{[d([d])]}"]));
        assert_eq!(
            diamond_cp(&p("{[d([d])]}"), &p("{[d]}")),
            lc(&["{[d([d([d])])]}", "{[d([d],[d])]}", "{[d([d,d])]}"])
        );
        assert!(diamond_ext(&p("{[d]}"), &PForest::empty()).is_zero());
        assert!(diamond_ext(&PForest::empty(), &p("{[d]}")).is_zero());
    }

    #[test]
    fn prelie_sweeps() {
        sweep_prelie(&DualUcp::new(labels_from(&["a", "b"]), 1), 4);
        sweep_prelie(&DualUcp::new(labels_from(&["a"]), 1), 5);
        sweep_prelie(
            &DualCp {
                labels: labels_from(&["a", "b"]),
            },
            5,
        );
        sweep_prelie(
            &DualExt {
                labels: labels_from(&["a", "b"]),
            },
            4,
        );
    }

    #[test]
    fn ext_leibniz() {
        let e = DualExt {
            labels: labels_from(&["a", "b"]),
        };
        for n1 in 0..=2 {
            for n2 in 0..=2 {
                for n3 in 0..=2 {
                    if n1 + n2 + n3 > 4 {
                        continue;
                    }
                    for x in e.basis(n1) {
                        for y in e.basis(n2) {
                            for z in e.basis(n3) {
                                let l = |t: &PForest| LinComb::basis(t.clone());
                                let lhs = diamond_lc(&algebra::mul(&e, &l(&x), &l(&y)), &l(&z));
                                let rhs = algebra::mul(&e, &diamond_lc(&l(&x), &l(&z)), &l(&y))
                                    + algebra::mul(&e, &l(&x), &diamond_lc(&l(&y), &l(&z)));
                                assert_eq!(lhs, rhs, "{x} {y} {z}");
                            }
                        }
                    }
                }
            }
        }
    }

    fn diamond_lc(x: &Elem, y: &Elem) -> Elem {
        crate::linear::bilinear(x, y, diamond_ext)
    }

    #[test]
    fn varsigma_examples() {
        assert_eq!(varsigma(&p("{[d]}")), 0);
        assert_eq!(varsigma(&p("{[d([d])]}")), 1);
        assert_eq!(varsigma(&p("{[d([d,d])]}")), 0);
    }

    #[test]
    fn generators() {
        let a = labels_from(&["d"]);
        assert_eq!(free_generators_cp(&a, 1), vec![p("{[d]}")]);
        assert!(free_generators_cp(&a, 2).is_empty());
        assert_eq!(free_generators_cp(&a, 3), vec![p("{[d([d,d])]}")]);
    }

    #[test]
    fn kernel_of_delta_is_spanned_by_generators() {
        for labels in [labels_from(&["a"]), labels_from(&["a", "b"])] {
            let g = DualCp {
                labels: labels.clone(),
            };
            for n in 1..=4 {
                let basis = g.basis(n);
                for t in &basis {
                    let back: Elem = gcp_delta(t)
                        .iter()
                        .map(|(T2(l, r), c)| (upsilon(l, r), c.clone()))
                        .collect();
                    assert_eq!(back, LinComb::term(t.clone(), int(varsigma(t) as i64)));
                }
                let images: Vec<_> = basis.iter().map(gcp_delta).collect();
                let kernel = kernel_of(&images);
                assert_eq!(kernel.len(), free_generators_cp(&labels, n).len(), "n={n}");
                for v in kernel {
                    for (i, _) in v {
                        assert_eq!(varsigma(&basis[i]), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn delta_is_permutative_and_compatible() {
        let g = DualCp {
            labels: labels_from(&["a", "b"]),
        };
        let d = |x: &Elem| -> Tensor2<PForest, PForest> {
            let mut out = LinComb::zero();
            for (t, c) in x.iter() {
                out.add_scaled(&gcp_delta(t), c);
            }
            out
        };
        for n in 1..=4 {
            for t in g.basis(n) {
                let dd = expand_left(&gcp_delta(&t), gcp_delta);
                assert_eq!(swap23(&dd), dd);
            }
        }
        for n1 in 1..=3 {
            for n2 in 1..=4 - n1 {
                for t in g.basis(n1) {
                    for t2 in g.basis(n2) {
                        let lhs = d(&diamond_cp(&t, &t2));
                        let l2 = LinComb::basis(t2.clone());
                        let mut rhs = tensor(&LinComb::basis(t.clone()), &l2);
                        for (T2(a, b), c) in gcp_delta(&t).iter() {
                            rhs += tensor(&diamond_cp(a, &t2), &LinComb::basis(b.clone())).scale(c);
                            rhs += tensor(&LinComb::basis(a.clone()), &diamond_cp(b, &t2)).scale(c);
                        }
                        assert_eq!(lhs, rhs, "{t} {t2}");
                    }
                }
            }
        }
    }
}
