use super::cp::{cp_coproduct_basis, cp_prelie_basis, FMatrix};
use super::Elem;
use crate::algebra::{Algebra, Memo};
use crate::linear::tensor::T2;
use crate::linear::{LinComb, Tensor2};
use crate::ptree::{enumerate, Dec, Label, Mode, PForest};

/// Representative of a plain forest in the partitioned algebra: roots in one block, every other
/// block a singleton.
pub fn lift(f: &PForest) -> PForest {
    f.merge_roots()
}

/// The quotient of the partitioned algebra that forgets blocks: decorated rooted forests with
/// concatenation, grafting, and the cut coproduct.
pub struct Hck {
    id: FMatrix,
    bases: Memo<usize, Vec<PForest>>,
    coproducts: Memo<PForest, Tensor2<PForest, PForest>>,
}

impl Hck {
    pub fn new(labels: Vec<Label>) -> Self {
        Hck {
            id: FMatrix::identity(labels),
            bases: Memo::default(),
            coproducts: Memo::default(),
        }
    }

    pub fn labels(&self) -> &[Label] {
        self.id.labels()
    }

    /// Image of a partitioned-tree combination.
    pub fn project(x: &Elem) -> Elem {
        x.map_basis(PForest::forget_blocks)
    }
}

impl Algebra for Hck {
    type B = PForest;

    fn name(&self) -> String {
        "hck".into()
    }

    fn basis(&self, deg: usize) -> Vec<PForest> {
        self.bases
            .get_or(&deg, || {
                let decs: Vec<Dec> = self
                    .labels()
                    .iter()
                    .map(|l| Dec::plain(l.as_str()))
                    .collect();
                enumerate(deg, &decs, Mode::PlainForest)
            })
            .as_ref()
            .clone()
    }

    fn degree(&self, b: &PForest) -> usize {
        b.num_vertices()
    }

    fn prelie(&self, a: &PForest, b: &PForest) -> Elem {
        Hck::project(&cp_prelie_basis(&lift(a), &lift(b), &self.id))
    }

    fn mul(&self, a: &PForest, b: &PForest) -> Option<Elem> {
        Some(LinComb::basis(a.concat(b)))
    }

    fn unit(&self) -> Option<PForest> {
        Some(PForest::empty())
    }

    fn coproduct(&self, a: &PForest) -> Option<Tensor2<PForest, PForest>> {
        Some(
            self.coproducts
                .get_or(a, || {
                    cp_coproduct_basis(&lift(a), &self.id)
                        .map_basis(|T2(l, r)| T2(l.forget_blocks(), r.forget_blocks()))
                })
                .as_ref()
                .clone(),
        )
    }

    fn has_coproduct(&self) -> bool {
        true
    }
}
