//! Extension of the preLie product to symmetric-word arguments `a • (b₁ × … × b_k)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_traits::One;

use crate::algebra::{self, Algebra, Check, Counterexample};
use crate::error::{guard, Result};
use crate::linear::tensor::{tensor, T2};
use crate::linear::{BasisKey, LinComb, Rational, Tensor2};

/// A monomial `a₁ × … × a_k` of the symmetric algebra; the empty word is its unit `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymWord<B>(Vec<B>);

impl<B: Ord + Clone> SymWord<B> {
    pub fn unit() -> Self {
        SymWord(Vec::new())
    }

    pub fn new(mut items: Vec<B>) -> Self {
        items.sort();
        SymWord(items)
    }

    pub fn with(&self, x: B) -> Self {
        let mut v = self.0.clone();
        let at = v.partition_point(|y| y <= &x);
        v.insert(at, x);
        SymWord(v)
    }

    pub fn items(&self) -> &[B] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sub-multiset at the positions selected by `mask`.
    pub fn select(&self, mask: u64) -> Self {
        SymWord(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect(),
        )
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        SymWord::new(v)
    }
}

impl<B: fmt::Display> fmt::Display for SymWord<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// `Δ(w) = Σ_{I} w_I ⊗ w_{I^c}` over subsets of positions.
pub fn sym_coproduct<B: BasisKey>(w: &SymWord<B>) -> Tensor2<SymWord<B>, SymWord<B>> {
    let n = w.len();
    let full = (1u64 << n) - 1;
    (0..=full)
        .map(|m| (T2(w.select(m), w.select(full & !m)), Rational::one()))
        .collect()
}

pub fn sym_times<B: BasisKey>(
    x: &LinComb<SymWord<B>>,
    y: &LinComb<SymWord<B>>,
) -> LinComb<SymWord<B>> {
    crate::linear::bilinear(x, y, |a, b| LinComb::basis(a.times(b)))
}

/// Which element rule 2 peels off first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Peel {
    First,
    Last,
}

pub const DEFAULT_DEPTH: usize = 16;

type Key<B> = (B, SymWord<B>);

/// Memoized evaluator of the extended product over one algebra.
pub struct OudomGuin<'a, A: Algebra> {
    alg: &'a A,
    peel: Peel,
    depth: usize,
    memo: Mutex<HashMap<Key<A::B>, LinComb<A::B>>>,
}

impl<'a, A: Algebra> OudomGuin<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        OudomGuin {
            alg,
            peel: Peel::Last,
            depth: DEFAULT_DEPTH,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_peel(mut self, peel: Peel) -> Self {
        self.peel = peel;
        self
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self
    }

    /// `a • (a₁ × … × a_k)` for a single basis element `a`.
    pub fn single(&self, a: &A::B, w: &SymWord<A::B>) -> Result<LinComb<A::B>> {
        guard("symmetric word size", w.len(), self.depth)?;
        if w.is_empty() {
            return Ok(LinComb::basis(a.clone()));
        }
        let key = (a.clone(), w.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let k = w.len();
        let p = match self.peel {
            Peel::First => 0,
            Peel::Last => k - 1,
        };
        let last = &w.0[p];
        let mut rest = w.0.clone();
        rest.remove(p);
        // (a • rest) • a_p
        let mut out = LinComb::zero();
        for (x, c) in self.single(a, &SymWord(rest.clone()))?.iter() {
            out.add_scaled(&self.alg.prelie(x, last), c);
        }
        // − Σ_i a • (… × (a_i • a_p) × …)
        for i in 0..rest.len() {
            let mut others = rest.clone();
            let ai = others.remove(i);
            let base = SymWord(others);
            for (y, c) in self.alg.prelie(&ai, last).iter() {
                let v = self.single(a, &base.with(y.clone()))?;
                out.add_scaled(&v, &-c);
            }
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    pub fn single_lc(&self, a: &LinComb<A::B>, w: &SymWord<A::B>) -> Result<LinComb<A::B>> {
        let mut out = LinComb::zero();
        for (x, c) in a.iter() {
            out.add_scaled(&self.single(x, w)?, c);
        }
        Ok(out)
    }

    /// `(x₁ × … × x_m) • z = Σ (x₁ • z⁽¹⁾) × … × (x_m • z⁽ᵐ⁾)`, with `1 • z = ε(z)`.
    pub fn extend(&self, x: &SymWord<A::B>, z: &SymWord<A::B>) -> Result<LinComb<SymWord<A::B>>> {
        let m = x.len();
        if m == 0 {
            return Ok(if z.is_empty() {
                LinComb::basis(SymWord::unit())
            } else {
                LinComb::zero()
            });
        }
        let n = z.len();
        let mut out = LinComb::zero();
        let total = m.pow(n as u32);
        for code in 0..total {
            let mut slots = vec![Vec::new(); m];
            let mut c = code;
            for j in 0..n {
                slots[c % m].push(z.0[j].clone());
                c /= m;
            }
            let mut acc: LinComb<SymWord<A::B>> = LinComb::basis(SymWord::unit());
            for (i, s) in slots.into_iter().enumerate() {
                let v = self.single(&x.0[i], &SymWord::new(s))?;
                let v = v.map_basis(|b| SymWord(vec![b.clone()]));
                acc = sym_times(&acc, &v);
                if acc.is_zero() {
                    break;
                }
            }
            out += acc;
        }
        Ok(out)
    }

    pub fn extend_lc(
        &self,
        x: &LinComb<SymWord<A::B>>,
        z: &LinComb<SymWord<A::B>>,
    ) -> Result<LinComb<SymWord<A::B>>> {
        let mut out = LinComb::zero();
        for (a, c) in x.iter() {
            for (b, d) in z.iter() {
                out.add_scaled(&self.extend(a, b)?, &(c * d));
            }
        }
        Ok(out)
    }
}

/// `a • w` with a fresh evaluator.
pub fn extend_single<A: Algebra>(alg: &A, a: &A::B, w: &SymWord<A::B>) -> Result<LinComb<A::B>> {
    OudomGuin::new(alg).single(a, w)
}

/// Multisets of size `n` drawn from `items`, as sorted index lists.
fn multisets(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(len: usize, start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(len, i, n, cur, out);
            cur.pop();
        }
    }
    rec(len, 0, n, &mut Vec::new(), &mut out);
    out
}

fn basis_upto<A: Algebra>(alg: &A, maxdeg: usize) -> Vec<A::B> {
    (0..=maxdeg).flat_map(|d| alg.basis(d)).collect()
}

/// Symmetric words of at most `maxn` basis elements of degree `≤ maxdeg`.
fn sym_words<A: Algebra>(alg: &A, maxdeg: usize, maxn: usize) -> Vec<SymWord<A::B>> {
    let items = basis_upto(alg, maxdeg);
    (0..=maxn)
        .flat_map(|n| {
            multisets(items.len(), n)
                .into_iter()
                .map(|ix| SymWord::new(ix.into_iter().map(|i| items[i].clone()).collect()))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn size<A: Algebra>(alg: &A, w: &SymWord<A::B>) -> usize {
    w.items().iter().map(|b| alg.degree(b)).sum()
}

/// `(a·b) • (c₁ × … × c_n) = Σ_I (a • c_I)·(b • c_{I^c})` and
/// `Δ(a • (b₁ × … × b_n)) = Σ_I a⁽¹⁾ • Π_{i∈I} b_i⁽¹⁾ ⊗ (Π_{i∈I} b_i⁽²⁾)·(a⁽²⁾ • Π_{i∉I} b_i)`,
/// for `a`, `b` of degree `≤ maxarg` and symmetric words `c` of total degree `≤ maxword` with at
/// most `maxword` factors.
pub fn check_prop6<A: Algebra>(alg: &A, maxarg: usize, maxword: usize) -> Result<Check> {
    let og = OudomGuin::new(alg);
    let elems = basis_upto(alg, maxarg);
    let ws: Vec<SymWord<A::B>> = sym_words(alg, maxword, maxword)
        .into_iter()
        .filter(|w| size(alg, w) <= maxword)
        .collect();
    for a in &elems {
        for b in &elems {
            for w in &ws {
                let lhs = og.single_lc(
                    &algebra::mul(alg, &LinComb::basis(a.clone()), &LinComb::basis(b.clone())),
                    w,
                )?;
                let mut rhs = LinComb::zero();
                for (T2(i, j), c) in sym_coproduct(w).iter() {
                    rhs.add_scaled(&algebra::mul(alg, &og.single(a, i)?, &og.single(b, j)?), c);
                }
                if lhs != rhs {
                    return Ok(Err(Counterexample(format!(
                        "product rule at a={a} b={b} c={w}: {}",
                        lhs - rhs
                    ))));
                }
            }
        }
    }
    if !alg.has_coproduct() {
        return Ok(Ok(()));
    }
    for a in &elems {
        for w in &ws {
            let lhs = algebra::coproduct(alg, &og.single(a, w)?);
            let rhs = prop6_coproduct_rhs(alg, &og, a, w)?;
            if lhs != rhs {
                return Ok(Err(Counterexample(format!(
                    "coproduct rule at a={a} b={w}: {}",
                    lhs - rhs
                ))));
            }
        }
    }
    Ok(Ok(()))
}

fn prop6_coproduct_rhs<A: Algebra>(
    alg: &A,
    og: &OudomGuin<A>,
    a: &A::B,
    w: &SymWord<A::B>,
) -> Result<Tensor2<A::B, A::B>> {
    let da = alg.coproduct(a).expect("algebra has a coproduct");
    let n = w.len();
    let full = (1u64 << n) - 1;
    let mut out = LinComb::zero();
    for mask in 0..=full {
        let inside = w.select(mask);
        let outside = w.select(full & !mask);
        // Π_{i∈I} b_i⁽¹⁾ ⊗ Π_{i∈I} b_i⁽²⁾, left as a symmetric word, right multiplied in A
        let mut legs: Tensor2<SymWord<A::B>, A::B> =
            LinComb::basis(T2(SymWord::unit(), alg.unit().expect("unital")));
        for b in inside.items() {
            let mut next = LinComb::zero();
            for (T2(l, r), c) in legs.iter() {
                for (T2(b1, b2), d) in alg.coproduct(b).expect("coproduct").iter() {
                    let prod = alg.mul(r, b2).expect("product");
                    next += tensor(&LinComb::basis(l.with(b1.clone())), &prod).scale(&(c * d));
                }
            }
            legs = next;
        }
        for (T2(a1, a2), c) in da.iter() {
            let right_tail = og.single(a2, &outside)?;
            for (T2(l, r), d) in legs.iter() {
                let left = og.single(a1, l)?;
                let right = algebra::mul(alg, &LinComb::basis(r.clone()), &right_tail);
                out.add_scaled(&tensor(&left, &right), &(c * d));
            }
        }
    }
    Ok(out)
}

/// `a • (1^{×k} × b₁ × … × b_l) = f_A^k(a) • (b₁ × … × b_l)` for primitive `a` of degree
/// `≤ maxdeg`, `k ≤ maxk`, with `f_A(a) = a • 1` and nonempty `b_i` of total degree `≤ maxword`.
pub fn check_lemma7<A: Algebra>(
    alg: &A,
    maxk: usize,
    maxdeg: usize,
    maxword: usize,
) -> Result<Check> {
    let og = OudomGuin::new(alg);
    let one = alg.unit().expect("unital algebra");
    let bs: Vec<SymWord<A::B>> = sym_words(alg, maxword, maxword)
        .into_iter()
        .filter(|w| w.items().iter().all(|b| alg.degree(b) >= 1) && size(alg, w) <= maxword)
        .collect();
    for deg in 1..=maxdeg {
        for a in algebra::primitive_basis(alg, deg) {
            let mut fa = a.clone();
            for k in 0..=maxk {
                for w in &bs {
                    let mut units = w.clone();
                    for _ in 0..k {
                        units = units.with(one.clone());
                    }
                    let lhs = og.single_lc(&a, &units)?;
                    let rhs = og.single_lc(&fa, w)?;
                    if lhs != rhs {
                        return Ok(Err(Counterexample(format!(
                            "a={a} k={k} b={w}: {}",
                            lhs - rhs
                        ))));
                    }
                }
                fa = algebra::prelie(alg, &fa, &LinComb::basis(one.clone()));
            }
        }
    }
    Ok(Ok(()))
}
