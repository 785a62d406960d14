//! The interface shared by every concrete algebra, and generic operations on top of it.

use std::collections::HashMap;
use std::fmt::Display;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::linear::linalg::kernel_of;
use crate::linear::tensor::{tensor, T2};
use crate::linear::{bilinear, BasisKey, LinComb, Rational, Tensor2};

/// A graded algebra with a right preLie product and, optionally, a commutative product, a unit
/// and a coproduct. Every structure map is given on basis elements and extended bilinearly.
pub trait Algebra: Sync + Send {
    type B: BasisKey + Display;

    fn name(&self) -> String;

    /// Basis of the homogeneous component of degree `deg`.
    fn basis(&self, deg: usize) -> Vec<Self::B>;

    fn degree(&self, b: &Self::B) -> usize;

    fn prelie(&self, a: &Self::B, b: &Self::B) -> LinComb<Self::B>;

    fn mul(&self, _a: &Self::B, _b: &Self::B) -> Option<LinComb<Self::B>> {
        None
    }

    fn unit(&self) -> Option<Self::B> {
        None
    }

    fn coproduct(&self, _a: &Self::B) -> Option<Tensor2<Self::B, Self::B>> {
        None
    }

    fn counit(&self, a: &Self::B) -> Rational {
        match self.unit() {
            Some(u) if &u == a => Rational::one(),
            _ => Rational::zero(),
        }
    }

    fn has_mul(&self) -> bool {
        self.unit().is_some()
    }

    fn has_coproduct(&self) -> bool {
        false
    }
}

pub fn prelie<A: Algebra>(alg: &A, x: &LinComb<A::B>, y: &LinComb<A::B>) -> LinComb<A::B> {
    bilinear(x, y, |a, b| alg.prelie(a, b))
}

pub fn mul<A: Algebra>(alg: &A, x: &LinComb<A::B>, y: &LinComb<A::B>) -> LinComb<A::B> {
    bilinear(x, y, |a, b| alg.mul(a, b).expect("algebra has a product"))
}

pub fn coproduct<A: Algebra>(alg: &A, x: &LinComb<A::B>) -> Tensor2<A::B, A::B> {
    let mut out = LinComb::zero();
    for (b, c) in x.iter() {
        out.add_scaled(&alg.coproduct(b).expect("algebra has a coproduct"), c);
    }
    out
}

pub fn counit<A: Algebra>(alg: &A, x: &LinComb<A::B>) -> Rational {
    x.eval(|b| alg.counit(b))
}

pub fn unit_lc<A: Algebra>(alg: &A) -> LinComb<A::B> {
    LinComb::basis(alg.unit().expect("algebra has a unit"))
}

/// `Δ(x) − x⊗1 − 1⊗x + ε(x) 1⊗1`.
pub fn reduced_coproduct<A: Algebra>(alg: &A, x: &LinComb<A::B>) -> Tensor2<A::B, A::B> {
    let one = unit_lc(alg);
    let mut out = coproduct(alg, x);
    out -= &tensor(x, &one);
    out -= &tensor(&one, x);
    out.add_scaled(&tensor(&one, &one), &counit(alg, x));
    out
}

/// Basis of the primitive elements of degree `deg ≥ 1`, as a kernel of the reduced coproduct.
pub fn primitive_basis<A: Algebra>(alg: &A, deg: usize) -> Vec<LinComb<A::B>> {
    let basis = alg.basis(deg);
    let images: Vec<Tensor2<A::B, A::B>> = basis
        .iter()
        .map(|b| reduced_coproduct(alg, &LinComb::basis(b.clone())))
        .collect();
    kernel_of(&images)
        .into_iter()
        .map(|v| v.into_iter().map(|(i, c)| (basis[i].clone(), c)).collect())
        .collect()
}

/// Splits a combination by degree.
pub fn homogeneous_parts<A: Algebra>(alg: &A, x: &LinComb<A::B>) -> HashMap<usize, LinComb<A::B>> {
    let mut out: HashMap<usize, LinComb<A::B>> = HashMap::new();
    for (b, c) in x.iter() {
        out.entry(alg.degree(b))
            .or_default()
            .add_term(b.clone(), c.clone());
    }
    out
}

/// `a ⊗ b ↦ a b` on a tensor square.
pub fn multiply_legs<A: Algebra>(alg: &A, t: &Tensor2<A::B, A::B>) -> LinComb<A::B> {
    let mut out = LinComb::zero();
    for (T2(a, b), c) in t.iter() {
        out.add_scaled(&alg.mul(a, b).expect("algebra has a product"), c);
    }
    out
}

/// Thread-safe memo table for basis-level structure maps.
pub struct Memo<K, V> {
    map: Mutex<HashMap<K, Arc<V>>>,
}

impl<K, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo {
            map: Mutex::new(HashMap::new()),
        }
    }
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub fn get_or(&self, k: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.lock().unwrap().get(k) {
            return v.clone();
        }
        let v = Arc::new(f());
        self.map
            .lock()
            .unwrap()
            .entry(k.clone())
            .or_insert(v)
            .clone()
    }
}

/// A failed identity, described by its arguments and the nonzero defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample(pub String);

impl Display for Counterexample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Check = std::result::Result<(), Counterexample>;
