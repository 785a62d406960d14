//! The free unitary Com-PreLie algebra on partitioned trees and its quotients.

mod cm;
mod cp;
mod delta;
mod hck;

pub use cm::{cm_direct, cm_generator, cm_reduced_coproduct, growth, induced_word_prelie, m_of};
pub use cp::{quotient_to_cp, Cp, FMatrix};
pub use delta::{delta_perm, kernel_delta_dims, DEFAULT_MAX_DEGREE};
pub use hck::{lift, Hck};

use crate::algebra::{Algebra, Memo};
use crate::linear::tensor::T2;
use crate::linear::{LinComb, Rational, Tensor2};
use crate::ptree::{enumerate, Dec, Flat, GraftTarget, Label, Mode, PForest};

pub type Elem = LinComb<PForest>;

/// Decoration alphabet `d1, …, dk`.
pub fn alphabet(k: usize) -> Vec<Label> {
    (1..=k).map(|i| Label::new(&format!("d{i}"))).collect()
}

pub fn labels_from(names: &[&str]) -> Vec<Label> {
    names.iter().map(|s| Label::new(s)).collect()
}

/// `Σ_s T •_{s,*} T'` for nonempty `T'`.
pub fn graft_sum(t: &PForest, t2: &PForest) -> Elem {
    let f = Flat::from_forest(t);
    let g = Flat::from_forest(t2);
    (0..f.len())
        .map(|s| {
            let h = f.graft(s, GraftTarget::Star, &g).expect("vertex exists");
            (h.to_forest(), Rational::from_integer(1.into()))
        })
        .collect()
}

pub fn ucp_mul_basis(t: &PForest, t2: &PForest) -> Elem {
    LinComb::basis(t.mul(t2))
}

/// Preorder product of the free algebra: grafting on every vertex, or a counter increment on
/// every vertex when the right factor is `∅`.
pub fn ucp_prelie_basis(t: &PForest, t2: &PForest) -> Elem {
    if t.is_empty() {
        return LinComb::zero();
    }
    if !t2.is_empty() {
        return graft_sum(t, t2);
    }
    let f = Flat::from_forest(t);
    (0..f.len())
        .filter_map(|s| f.shifted(s, 1))
        .map(|g| (g.to_forest(), Rational::from_integer(1.into())))
        .collect()
}

/// `Δ(T) = Σ_{I ideal} R^I ⊗ P^I`.
pub fn ucp_coproduct_basis(t: &PForest) -> Tensor2<PForest, PForest> {
    let f = Flat::from_forest(t);
    f.ideals()
        .into_iter()
        .map(|m| {
            let (r, p, _) = f.split_ideal(m).expect("mask is an ideal");
            (T2(r, p), Rational::from_integer(1.into()))
        })
        .collect()
}

/// The free unitary algebra on decorations `(k, d)` with `d` in `labels`. Bases are truncated to
/// counters `≤ max_counter`; the products themselves are not truncated.
pub struct Ucp {
    pub labels: Vec<Label>,
    pub max_counter: u32,
    bases: Memo<usize, Vec<PForest>>,
    coproducts: Memo<PForest, Tensor2<PForest, PForest>>,
}

impl Ucp {
    pub fn new(labels: Vec<Label>, max_counter: u32) -> Self {
        Ucp {
            labels,
            max_counter,
            bases: Memo::default(),
            coproducts: Memo::default(),
        }
    }

    pub fn decorations(&self) -> Vec<Dec> {
        (0..=self.max_counter)
            .flat_map(|k| {
                self.labels.iter().map(move |l| Dec {
                    label: l.clone(),
                    counter: k,
                })
            })
            .collect()
    }
}

impl Algebra for Ucp {
    type B = PForest;

    fn name(&self) -> String {
        "ucp".into()
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
        ucp_prelie_basis(a, b)
    }

    fn mul(&self, a: &PForest, b: &PForest) -> Option<Elem> {
        Some(ucp_mul_basis(a, b))
    }

    fn unit(&self) -> Option<PForest> {
        Some(PForest::empty())
    }

    fn coproduct(&self, a: &PForest) -> Option<Tensor2<PForest, PForest>> {
        Some(
            self.coproducts
                .get_or(a, || ucp_coproduct_basis(a))
                .as_ref()
                .clone(),
        )
    }

    fn has_coproduct(&self) -> bool {
        true
    }
}
