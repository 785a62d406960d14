use std::fmt;

use num_traits::One;

use super::lincomb::{BasisKey, LinComb};
use super::rational::Rational;

/// Basis key of a two-fold tensor product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct T2<A, B>(pub A, pub B);

/// Basis key of a three-fold tensor product.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct T3<A, B, C>(pub A, pub B, pub C);

pub type Tensor2<A, B> = LinComb<T2<A, B>>;
pub type Tensor3<A, B, C> = LinComb<T3<A, B, C>>;

impl<A: fmt::Display, B: fmt::Display> fmt::Display for T2<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for T3<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {} (x) {}", self.0, self.1, self.2)
    }
}

pub fn tensor<A: BasisKey, B: BasisKey>(x: &LinComb<A>, y: &LinComb<B>) -> Tensor2<A, B> {
    super::lincomb::bilinear(x, y, |a, b| LinComb::basis(T2(a.clone(), b.clone())))
}

/// Applies `f` to the left leg and `g` to the right leg.
pub fn tensor_apply<A, B, C, D>(
    t: &Tensor2<A, B>,
    mut f: impl FnMut(&A) -> LinComb<C>,
    mut g: impl FnMut(&B) -> LinComb<D>,
) -> Tensor2<C, D>
where
    A: BasisKey,
    B: BasisKey,
    C: BasisKey,
    D: BasisKey,
{
    let mut out = LinComb::zero();
    for (T2(a, b), c) in t.iter() {
        out.add_scaled(&tensor(&f(a), &g(b)), c);
    }
    out
}

pub fn swap<A: BasisKey, B: BasisKey>(t: &Tensor2<A, B>) -> Tensor2<B, A> {
    t.map_basis(|T2(a, b)| T2(b.clone(), a.clone()))
}

/// `(f (x) Id)` where `f` lands in a tensor square: the `(Δ (x) Id)∘Δ` half of coassociativity.
pub fn expand_left<A, B, C, D>(
    t: &Tensor2<A, B>,
    mut f: impl FnMut(&A) -> Tensor2<C, D>,
) -> Tensor3<C, D, B>
where
    A: BasisKey,
    B: BasisKey,
    C: BasisKey,
    D: BasisKey,
{
    let mut out = LinComb::zero();
    for (T2(a, b), c) in t.iter() {
        for (T2(x, y), d) in f(a).iter() {
            out.add_term(T3(x.clone(), y.clone(), b.clone()), c * d);
        }
    }
    out
}

pub fn expand_right<A, B, C, D>(
    t: &Tensor2<A, B>,
    mut g: impl FnMut(&B) -> Tensor2<C, D>,
) -> Tensor3<A, C, D>
where
    A: BasisKey,
    B: BasisKey,
    C: BasisKey,
    D: BasisKey,
{
    let mut out = LinComb::zero();
    for (T2(a, b), c) in t.iter() {
        for (T2(x, y), d) in g(b).iter() {
            out.add_term(T3(a.clone(), x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// `(φ (x) Id)` for a linear functional `φ`.
pub fn contract_left<A: BasisKey, B: BasisKey>(
    t: &Tensor2<A, B>,
    mut phi: impl FnMut(&A) -> Rational,
) -> LinComb<B> {
    let mut out = LinComb::zero();
    for (T2(a, b), c) in t.iter() {
        out.add_term(b.clone(), c * phi(a));
    }
    out
}

pub fn contract_right<A: BasisKey, B: BasisKey>(
    t: &Tensor2<A, B>,
    mut phi: impl FnMut(&B) -> Rational,
) -> LinComb<A> {
    let mut out = LinComb::zero();
    for (T2(a, b), c) in t.iter() {
        out.add_term(a.clone(), c * phi(b));
    }
    out
}

/// Product in a tensor square of algebras: `(a (x) b)(c (x) d) = ac (x) bd`.
pub fn tensor_mul<A: BasisKey, B: BasisKey>(
    x: &Tensor2<A, B>,
    y: &Tensor2<A, B>,
    mut m1: impl FnMut(&A, &A) -> LinComb<A>,
    mut m2: impl FnMut(&B, &B) -> LinComb<B>,
) -> Tensor2<A, B> {
    let mut out = LinComb::zero();
    for (T2(a, b), c) in x.iter() {
        for (T2(p, q), d) in y.iter() {
            out.add_scaled(&tensor(&m1(a, p), &m2(b, q)), &(c * d));
        }
    }
    out
}

/// The permutation `(23)` of tensor legs.
pub fn swap23<A: BasisKey, B: BasisKey, C: BasisKey>(t: &Tensor3<A, B, C>) -> Tensor3<A, C, B> {
    t.map_basis(|T3(a, b, c)| T3(a.clone(), c.clone(), b.clone()))
}

pub fn identity<A: BasisKey>(a: &A) -> LinComb<A> {
    LinComb::term(a.clone(), Rational::one())
}
