//! The Com-PreLie structure on `A₁⊗A₂` twisted by a functional `ε` on `A₁`:
//! `(a₁⊗a₂)•(b₁⊗b₂) = a₁•b₁⊗a₂b₂ + ε(b₁) a₁⊗a₂•b₂`.

use std::sync::Arc;

use rayon::prelude::*;

use super::basis_tuples;
use crate::algebra::{self, Algebra, Check, Counterexample};
use crate::linear::tensor::{tensor, T2};
use crate::linear::{LinComb, Rational, Tensor2};

pub type Functional<'a, B> = Arc<dyn Fn(&B) -> Rational + Send + Sync + 'a>;

pub struct TensorComPreLie<'a, A1: Algebra, A2: Algebra> {
    pub left: &'a A1,
    pub right: &'a A2,
    pub eps: Functional<'a, A1::B>,
}

impl<'a, A1: Algebra, A2: Algebra> TensorComPreLie<'a, A1, A2> {
    pub fn new(left: &'a A1, right: &'a A2, eps: Functional<'a, A1::B>) -> Self {
        TensorComPreLie { left, right, eps }
    }

    /// Twisted by the counit of `left`.
    pub fn with_counit(left: &'a A1, right: &'a A2) -> Self {
        Self::new(left, right, Arc::new(move |b| left.counit(b)))
    }

    /// `ε₁⊗ε₂`, the functional used when this algebra is itself the left factor.
    pub fn product_functional(
        &self,
        eps2: Functional<'a, A2::B>,
    ) -> Functional<'a, T2<A1::B, A2::B>> {
        let eps1 = self.eps.clone();
        Arc::new(move |T2(a, b)| eps1(a) * eps2(b))
    }
}

impl<'a, A1: Algebra, A2: Algebra> Algebra for TensorComPreLie<'a, A1, A2> {
    type B = T2<A1::B, A2::B>;

    fn name(&self) -> String {
        format!("{}(x){}", self.left.name(), self.right.name())
    }

    fn basis(&self, deg: usize) -> Vec<Self::B> {
        let mut out = Vec::new();
        for i in 0..=deg {
            let right = self.right.basis(deg - i);
            for a in self.left.basis(i) {
                out.extend(right.iter().map(|b| T2(a.clone(), b.clone())));
            }
        }
        out
    }

    fn degree(&self, T2(a, b): &Self::B) -> usize {
        self.left.degree(a) + self.right.degree(b)
    }

    fn prelie(&self, T2(a1, a2): &Self::B, T2(b1, b2): &Self::B) -> LinComb<Self::B> {
        let mul2 = self.right.mul(a2, b2).expect("right factor has a product");
        let mut out = tensor(&self.left.prelie(a1, b1), &mul2);
        let e = (self.eps)(b1);
        out.add_scaled(
            &tensor(&LinComb::basis(a1.clone()), &self.right.prelie(a2, b2)),
            &e,
        );
        out
    }

    fn mul(&self, T2(a1, a2): &Self::B, T2(b1, b2): &Self::B) -> Option<LinComb<Self::B>> {
        Some(tensor(&self.left.mul(a1, b1)?, &self.right.mul(a2, b2)?))
    }

    fn unit(&self) -> Option<Self::B> {
        Some(T2(self.left.unit()?, self.right.unit()?))
    }
}

fn pairs<A: Algebra>(alg: &A, maxdeg: usize) -> Vec<(A::B, A::B)> {
    basis_tuples(alg, 2, maxdeg)
        .into_iter()
        .map(|mut t| {
            let y = t.pop().expect("pair");
            (t.pop().expect("pair"), y)
        })
        .collect()
}

/// `ε(a•b) = ε(b•a)` on basis pairs of total degree `≤ maxdeg`.
pub fn check_eps_condition<A: Algebra>(
    alg: &A,
    eps: &Functional<'_, A::B>,
    maxdeg: usize,
) -> Check {
    pairs(alg, maxdeg).par_iter().try_for_each(|(a, b)| {
        let (x, y) = (
            alg.prelie(a, b).eval(|t| eps(t)),
            alg.prelie(b, a).eval(|t| eps(t)),
        );
        if x == y {
            Ok(())
        } else {
            Err(Counterexample(format!(
                "eps({a} o {b}) = {x}, eps({b} o {a}) = {y}"
            )))
        }
    })
}

/// `f` preserves both products on basis pairs of `src` of total degree `≤ maxdeg`.
fn check_morphism<S: Algebra, D: Algebra>(
    src: &S,
    dst: &D,
    f: impl Fn(&S::B) -> LinComb<D::B> + Sync,
    maxdeg: usize,
) -> Check {
    let fl = |x: &LinComb<S::B>| x.map(&f);
    pairs(src, maxdeg).par_iter().try_for_each(|(a, b)| {
        let (fa, fb) = (f(a), f(b));
        let lhs = fl(&src.prelie(a, b));
        let rhs = algebra::prelie(dst, &fa, &fb);
        if lhs != rhs {
            return Err(Counterexample(format!("prelie on {a}, {b}: {}", lhs - rhs)));
        }
        if let (Some(m), true) = (src.mul(a, b), dst.has_mul()) {
            let d = fl(&m) - algebra::mul(dst, &fa, &fb);
            if !d.is_zero() {
                return Err(Counterexample(format!("product on {a}, {b}: {d}")));
            }
        }
        Ok(())
    })
}

/// `(A⊗B)⊗C` and `A⊗(B⊗C)` carry the same products under the reassociation of legs.
pub fn check_reassociation<'a, A: Algebra, B: Algebra, C: Algebra>(
    a: &'a A,
    b: &'a B,
    c: &'a C,
    eps_a: Functional<'a, A::B>,
    eps_b: Functional<'a, B::B>,
    maxdeg: usize,
) -> Check {
    let ab = TensorComPreLie::new(a, b, eps_a.clone());
    let eps_ab = ab.product_functional(eps_b.clone());
    check_eps_condition(&ab, &eps_ab, maxdeg)?;
    let left = TensorComPreLie::new(&ab, c, eps_ab);
    let bc = TensorComPreLie::new(b, c, eps_b);
    let right = TensorComPreLie::new(a, &bc, eps_a);
    let reassoc = |T2(T2(x, y), z): &T2<T2<A::B, B::B>, C::B>| {
        LinComb::basis(T2(x.clone(), T2(y.clone(), z.clone())))
    };
    check_morphism(&left, &right, reassoc, maxdeg)
}

/// `ε⊗Id : A⊗B → B` is a morphism when `ε` is multiplicative and kills `•`.
pub fn check_eps_id_morphism<'a, A: Algebra, B: Algebra>(
    a: &'a A,
    b: &'a B,
    eps: Functional<'a, A::B>,
    maxdeg: usize,
) -> Check {
    let t = TensorComPreLie::new(a, b, eps.clone());
    check_morphism(&t, b, |T2(x, y)| LinComb::term(y.clone(), eps(x)), maxdeg)
}

/// `f⊗g : A⊗B → A'⊗B'` is a morphism for morphisms `f`, `g` with `ε'∘f = ε`.
pub fn check_tensor_morphism<A: Algebra, B: Algebra, A2: Algebra, B2: Algebra>(
    src: &TensorComPreLie<'_, A, B>,
    dst: &TensorComPreLie<'_, A2, B2>,
    f: impl Fn(&A::B) -> LinComb<A2::B> + Sync,
    g: impl Fn(&B::B) -> LinComb<B2::B> + Sync,
    maxdeg: usize,
) -> Check {
    for n in 0..=maxdeg {
        for x in src.left.basis(n) {
            let (e, e2) = ((src.eps)(&x), f(&x).eval(|y| (dst.eps)(y)));
            if e != e2 {
                return Err(Counterexample(format!(
                    "eps'(f({x})) = {e2}, eps({x}) = {e}"
                )));
            }
        }
    }
    check_morphism(src, dst, |T2(x, y)| tensor(&f(x), &g(y)), maxdeg)
}

/// `Δ : A → A⊗A` is a morphism onto the counit-twisted tensor square.
pub fn check_coproduct_morphism<A: Algebra>(alg: &A, maxdeg: usize) -> Check {
    let square = TensorComPreLie::with_counit(alg, alg);
    let cop =
        |x: &A::B| -> Tensor2<A::B, A::B> { alg.coproduct(x).expect("algebra has a coproduct") };
    check_morphism(alg, &square, cop, maxdeg)
}
