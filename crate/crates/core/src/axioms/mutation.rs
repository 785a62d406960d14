//! Deliberately broken structure maps, used to show that every law check can fail.

use crate::algebra::Algebra;
use crate::linear::tensor::T2;
use crate::linear::{int, LinComb, Rational, Tensor2};

use super::{check_law, Law, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// `a•b` loses its last term whenever it has at least two.
    DropGraft,
    /// `ab` is doubled when `a < b` in the basis order.
    SkewMul,
    /// `ab` is scaled by `1 + deg a`.
    WeightedMul,
    /// `1•a = a`.
    UnitGraft,
    /// `a•b` gains the unit when both sides are nonempty.
    LeakUnit,
    /// `Δ(a)` loses its last term when `deg a ≥ 2`.
    DropCoproductTerm,
    /// The `a⊗1` term of `Δ(a)` is doubled.
    ScaleCounitTerm,
}

impl Corruption {
    pub const ALL: [Corruption; 7] = [
        Corruption::DropGraft,
        Corruption::SkewMul,
        Corruption::WeightedMul,
        Corruption::UnitGraft,
        Corruption::LeakUnit,
        Corruption::DropCoproductTerm,
        Corruption::ScaleCounitTerm,
    ];
}

pub struct Corrupted<'a, A: Algebra> {
    pub inner: &'a A,
    pub kind: Corruption,
}

impl<'a, A: Algebra> Corrupted<'a, A> {
    fn is_unit(&self, b: &A::B) -> bool {
        self.inner.unit().as_ref() == Some(b)
    }
}

fn drop_last<B: crate::linear::BasisKey>(x: LinComb<B>) -> LinComb<B> {
    if x.len() < 2 {
        return x;
    }
    let last = x.keys().last().cloned().expect("nonempty");
    x.filter(|b| b != &last)
}

impl<'a, A: Algebra> Algebra for Corrupted<'a, A> {
    type B = A::B;

    fn name(&self) -> String {
        format!("{}~{:?}", self.inner.name(), self.kind)
    }

    fn basis(&self, deg: usize) -> Vec<A::B> {
        self.inner.basis(deg)
    }

    fn degree(&self, b: &A::B) -> usize {
        self.inner.degree(b)
    }

    fn prelie(&self, a: &A::B, b: &A::B) -> LinComb<A::B> {
        let x = self.inner.prelie(a, b);
        match self.kind {
            Corruption::DropGraft => drop_last(x),
            Corruption::UnitGraft if self.is_unit(a) => LinComb::basis(b.clone()),
            Corruption::LeakUnit if !self.is_unit(a) && !self.is_unit(b) => {
                let mut x = x;
                x.add_term(self.inner.unit().expect("unit"), int(1));
                x
            }
            _ => x,
        }
    }

    fn mul(&self, a: &A::B, b: &A::B) -> Option<LinComb<A::B>> {
        let x = self.inner.mul(a, b)?;
        Some(match self.kind {
            Corruption::SkewMul if a < b => x.scale(&int(2)),
            Corruption::WeightedMul => x.scale(&int(1 + self.inner.degree(a) as i64)),
            _ => x,
        })
    }

    fn unit(&self) -> Option<A::B> {
        self.inner.unit()
    }

    fn coproduct(&self, a: &A::B) -> Option<Tensor2<A::B, A::B>> {
        let x = self.inner.coproduct(a)?;
        Some(match self.kind {
            Corruption::DropCoproductTerm if self.inner.degree(a) >= 2 => {
                let unit = self.inner.unit();
                let inner: Vec<_> = x
                    .keys()
                    .filter(|T2(l, r)| Some(l) != unit.as_ref() && Some(r) != unit.as_ref())
                    .cloned()
                    .collect();
                match inner.last() {
                    Some(k) => x.filter(|t| t != k),
                    None => x,
                }
            }
            Corruption::ScaleCounitTerm => {
                let mut x = x;
                if let Some(u) = self.inner.unit() {
                    x.add_term(T2(a.clone(), u), int(1));
                }
                x
            }
            _ => x,
        })
    }

    fn counit(&self, a: &A::B) -> Rational {
        self.inner.counit(a)
    }

    fn has_mul(&self) -> bool {
        self.inner.has_mul()
    }

    fn has_coproduct(&self) -> bool {
        self.inner.has_coproduct()
    }
}

/// For every law that applies to `alg`, the corruptions under which the law check fails.
pub fn mutation_self_test<A: Algebra>(alg: &A, maxdeg: usize) -> Vec<(Law, Vec<Corruption>)> {
    Law::all()
        .filter(|l| l.applies(alg))
        .map(|law| {
            let caught = Corruption::ALL
                .into_iter()
                .filter(|&kind| {
                    let broken = Corrupted { inner: alg, kind };
                    !check_law(&broken, law, maxdeg, Mode::Exhaustive).passed()
                })
                .collect();
            (law, caught)
        })
        .collect()
}
