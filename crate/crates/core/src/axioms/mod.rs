//! Exhaustive and sampled verification of the Com-PreLie (bi)algebra laws.

mod mutation;
mod tensor;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{self, Algebra, Check, Counterexample};
use crate::linear::tensor::{
    contract_left, contract_right, expand_left, expand_right, tensor, tensor_mul, T2,
};
use crate::linear::{bilinear, int, LinComb};

pub use mutation::{mutation_self_test, Corrupted, Corruption};
pub use tensor::{
    check_coproduct_morphism, check_eps_condition, check_eps_id_morphism, check_reassociation,
    check_tensor_morphism, Functional, TensorComPreLie,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    Comm,
    Assoc,
    PreLie,
    Leibniz,
    /// `1•a = 0`.
    UnitPreLie,
    Compat,
    /// `ε(a•b) = 0`.
    EpsPreLie,
    Coassoc,
    Counit,
    /// `Δ(ab) = Δ(a)Δ(b)`.
    Bialgebra,
}

impl Law {
    pub const ALGEBRA: [Law; 5] = [
        Law::Comm,
        Law::Assoc,
        Law::PreLie,
        Law::Leibniz,
        Law::UnitPreLie,
    ];
    pub const BIALGEBRA: [Law; 5] = [
        Law::Compat,
        Law::EpsPreLie,
        Law::Coassoc,
        Law::Counit,
        Law::Bialgebra,
    ];

    pub fn all() -> impl Iterator<Item = Law> {
        Law::ALGEBRA.into_iter().chain(Law::BIALGEBRA)
    }

    pub fn name(self) -> &'static str {
        match self {
            Law::Comm => "comm",
            Law::Assoc => "assoc",
            Law::PreLie => "prelie",
            Law::Leibniz => "leibniz",
            Law::UnitPreLie => "unit-prelie",
            Law::Compat => "compat",
            Law::EpsPreLie => "eps-prelie",
            Law::Coassoc => "coassoc",
            Law::Counit => "counit",
            Law::Bialgebra => "bialgebra",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Law::UnitPreLie | Law::Coassoc | Law::Counit => 1,
            Law::Comm | Law::Compat | Law::EpsPreLie | Law::Bialgebra => 2,
            Law::Assoc | Law::PreLie | Law::Leibniz => 3,
        }
    }

    /// Whether `alg` carries the structure the law talks about.
    pub fn applies<A: Algebra>(self, alg: &A) -> bool {
        match self {
            Law::PreLie => true,
            Law::Comm | Law::Assoc | Law::Leibniz | Law::UnitPreLie => alg.has_mul(),
            Law::EpsPreLie | Law::Coassoc | Law::Counit => alg.has_coproduct(),
            Law::Compat | Law::Bialgebra => alg.has_coproduct() && alg.has_mul(),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Law {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Law> {
        Law::all()
            .find(|l| l.name() == s)
            .ok_or_else(|| crate::Error::parse(0, format!("unknown law {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// Random combinations with coefficients in `−2..=2`, reproducible from the seed.
    Sampled {
        samples: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub law: Law,
    pub algebra: String,
    pub maxdeg: usize,
    pub outcome: Check,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for LawResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = format!(
            "{} {} {}",
            self.law.name().to_uppercase(),
            self.algebra,
            self.maxdeg
        );
        match &self.outcome {
            Ok(()) => write!(f, "{head} PASS"),
            Err(w) => write!(f, "{head} FAIL {w}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report(pub Vec<LawResult>);

impl Report {
    pub fn passed(&self) -> bool {
        self.0.iter().all(LawResult::passed)
    }

    pub fn get(&self, law: Law) -> Option<&LawResult> {
        self.0.iter().find(|r| r.law == law)
    }

    pub fn extend(&mut self, other: Report) {
        self.0.extend(other.0);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.0 {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

type Elem<A> = LinComb<<A as Algebra>::B>;

fn show<B: crate::linear::BasisKey + fmt::Display>(args: &[LinComb<B>]) -> String {
    args.iter()
        .map(|a| format!("({a})"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The defect of `law` on `args`, or `None` when the identity holds.
pub fn defect<A: Algebra>(alg: &A, law: Law, args: &[Elem<A>]) -> Option<String> {
    let pl = |x: &Elem<A>, y: &Elem<A>| algebra::prelie(alg, x, y);
    let m = |x: &Elem<A>, y: &Elem<A>| algebra::mul(alg, x, y);
    let cop = |x: &Elem<A>| algebra::coproduct(alg, x);
    let basis_cop = |b: &A::B| alg.coproduct(b).expect("algebra has a coproduct");
    let nonzero = |d: Elem<A>| (!d.is_zero()).then(|| d.to_string());
    match law {
        Law::Comm => nonzero(m(&args[0], &args[1]) - m(&args[1], &args[0])),
        Law::Assoc => {
            nonzero(m(&m(&args[0], &args[1]), &args[2]) - m(&args[0], &m(&args[1], &args[2])))
        }
        Law::PreLie => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            let assoc = |b: &Elem<A>, c: &Elem<A>| pl(&pl(a, b), c) - pl(a, &pl(b, c));
            nonzero(assoc(b, c) - assoc(c, b))
        }
        Law::Leibniz => {
            let (a, b, c) = (&args[0], &args[1], &args[2]);
            nonzero(pl(&m(a, b), c) - m(&pl(a, c), b) - m(a, &pl(b, c)))
        }
        Law::UnitPreLie => nonzero(pl(&algebra::unit_lc(alg), &args[0])),
        Law::Compat => {
            let (a, b) = (&args[0], &args[1]);
            let (da, db) = (cop(a), cop(b));
            let mut rhs = LinComb::zero();
            for (T2(a1, a2), c) in da.iter() {
                let (a1, a2) = (LinComb::basis(a1.clone()), LinComb::basis(a2.clone()));
                rhs.add_scaled(&tensor(&a1, &pl(&a2, b)), c);
                for (T2(b1, b2), d) in db.iter() {
                    let (b1, b2) = (LinComb::basis(b1.clone()), LinComb::basis(b2.clone()));
                    rhs.add_scaled(&tensor(&pl(&a1, &b1), &m(&a2, &b2)), &(c * d));
                }
            }
            let d = cop(&pl(a, b)) - rhs;
            (!d.is_zero()).then(|| d.to_string())
        }
        Law::EpsPreLie => {
            let e = algebra::counit(alg, &pl(&args[0], &args[1]));
            (e != int(0)).then(|| format!("counit = {e}"))
        }
        Law::Coassoc => {
            let d = cop(&args[0]);
            let diff = expand_left(&d, basis_cop) - expand_right(&d, basis_cop);
            (!diff.is_zero()).then(|| diff.to_string())
        }
        Law::Counit => {
            let d = cop(&args[0]);
            let eps = |b: &A::B| alg.counit(b);
            let left = contract_left(&d, eps) - args[0].clone();
            let right = contract_right(&d, eps) - args[0].clone();
            (!left.is_zero() || !right.is_zero()).then(|| format!("left {left}, right {right}"))
        }
        Law::Bialgebra => {
            let mb = |x: &A::B, y: &A::B| alg.mul(x, y).expect("algebra has a product");
            let lhs = cop(&m(&args[0], &args[1]));
            let rhs = tensor_mul(&cop(&args[0]), &cop(&args[1]), mb, mb);
            let d = lhs - rhs;
            (!d.is_zero()).then(|| d.to_string())
        }
    }
}

/// Every composition `(d₁, …, d_k)` with `Σ dᵢ ≤ maxdeg`.
fn degree_tuples(k: usize, maxdeg: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in 0..=maxdeg {
        for mut rest in degree_tuples(k - 1, maxdeg - d) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

/// All basis tuples of total degree `≤ maxdeg`, in a deterministic order.
pub fn basis_tuples<A: Algebra>(alg: &A, k: usize, maxdeg: usize) -> Vec<Vec<A::B>> {
    let bases: Vec<Vec<A::B>> = (0..=maxdeg).map(|d| alg.basis(d)).collect();
    let mut out = Vec::new();
    for degs in degree_tuples(k, maxdeg) {
        let mut acc: Vec<Vec<A::B>> = vec![Vec::new()];
        for d in degs {
            acc = acc
                .into_iter()
                .flat_map(|t| {
                    bases[d].iter().map(move |b| {
                        let mut t = t.clone();
                        t.push(b.clone());
                        t
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

fn sample_tuples<A: Algebra>(
    alg: &A,
    k: usize,
    maxdeg: usize,
    samples: usize,
    seed: u64,
) -> Vec<Vec<Elem<A>>> {
    let bases: Vec<Vec<A::B>> = (0..=maxdeg).map(|d| alg.basis(d)).collect();
    let shapes: Vec<Vec<usize>> = degree_tuples(k, maxdeg)
        .into_iter()
        .filter(|t| t.iter().all(|d| !bases[*d].is_empty()))
        .collect();
    if shapes.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let shape = &shapes[rng.gen_range(0..shapes.len())];
            shape
                .iter()
                .map(|d| {
                    let terms = rng.gen_range(1..=3);
                    let mut x = LinComb::zero();
                    for _ in 0..terms {
                        let b = bases[*d][rng.gen_range(0..bases[*d].len())].clone();
                        x.add_term(b, int(rng.gen_range(-2..=2)));
                    }
                    x
                })
                .collect()
        })
        .collect()
}

pub fn check_law<A: Algebra>(alg: &A, law: Law, maxdeg: usize, mode: Mode) -> LawResult {
    let k = law.arity();
    let outcome = match mode {
        Mode::Exhaustive => basis_tuples(alg, k, maxdeg).par_iter().try_for_each(|t| {
            let args: Vec<Elem<A>> = t.iter().map(|b| LinComb::basis(b.clone())).collect();
            match defect(alg, law, &args) {
                None => Ok(()),
                Some(d) => Err(Counterexample(format!("{} -> {d}", show(&args)))),
            }
        }),
        Mode::Sampled { samples, seed } => sample_tuples(alg, k, maxdeg, samples, seed)
            .par_iter()
            .try_for_each(|args| match defect(alg, law, args) {
                None => Ok(()),
                Some(d) => Err(Counterexample(format!("{} -> {d}", show(args)))),
            }),
    };
    LawResult {
        law,
        algebra: alg.name(),
        maxdeg,
        outcome,
    }
}

/// Runs `laws` in order, skipping those that do not apply to `alg`.
pub fn check_laws<A: Algebra>(alg: &A, laws: &[Law], maxdeg: usize, mode: Mode) -> Report {
    Report(
        laws.iter()
            .filter(|l| l.applies(alg))
            .map(|l| check_law(alg, *l, maxdeg, mode))
            .collect(),
    )
}

/// Commutativity, associativity, preLie, Leibniz and `1•a = 0`, as far as `alg` has the structure.
pub fn check_comprelie<A: Algebra>(alg: &A, maxdeg: usize, mode: Mode) -> Report {
    check_laws(alg, &Law::ALGEBRA, maxdeg, mode)
}

/// Compatibility of `•` with `Δ`, and `ε(a•b) = 0`.
pub fn check_bialgebra_compat<A: Algebra>(alg: &A, maxdeg: usize) -> Report {
    check_laws(
        alg,
        &[Law::Compat, Law::EpsPreLie],
        maxdeg,
        Mode::Exhaustive,
    )
}

/// Coassociativity, counit and multiplicativity of `Δ`.
pub fn check_coalgebra<A: Algebra>(alg: &A, maxdeg: usize) -> Report {
    check_laws(
        alg,
        &[Law::Coassoc, Law::Counit, Law::Bialgebra],
        maxdeg,
        Mode::Exhaustive,
    )
}

pub fn check_all<A: Algebra>(alg: &A, maxdeg: usize, mode: Mode) -> Report {
    let laws: Vec<Law> = Law::all().collect();
    check_laws(alg, &laws, maxdeg, mode)
}

/// `Δ(a•b) = 1⊗a•b + a•b⁽¹⁾⊗b⁽²⁾` for primitive `a`.
pub fn check_cocycle<A: Algebra>(alg: &A, maxdeg: usize) -> Check {
    let one = algebra::unit_lc(alg);
    for n in 1..=maxdeg {
        for a in algebra::primitive_basis(alg, n) {
            for m in 0..=(maxdeg - n) {
                for b in alg.basis(m) {
                    let b = LinComb::basis(b);
                    let ab = algebra::prelie(alg, &a, &b);
                    let mut rhs = tensor(&one, &ab);
                    for (T2(b1, b2), c) in algebra::coproduct(alg, &b).iter() {
                        let left = algebra::prelie(alg, &a, &LinComb::basis(b1.clone()));
                        rhs.add_scaled(&tensor(&left, &LinComb::basis(b2.clone())), c);
                    }
                    let d = algebra::coproduct(alg, &ab) - rhs;
                    if !d.is_zero() {
                        return Err(Counterexample(format!("({a}) ({b}) -> {d}")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Bilinear extension check: the law on a sampled combination equals the combination of basis
/// defects, which catches evaluators that are not linear.
pub fn check_linearity<A: Algebra>(alg: &A, maxdeg: usize, seed: u64) -> Check {
    for args in sample_tuples(alg, 2, maxdeg, 50, seed) {
        let direct = algebra::prelie(alg, &args[0], &args[1]);
        let expanded = bilinear(&args[0], &args[1], |a, b| alg.prelie(a, b));
        if direct != expanded {
            return Err(Counterexample(show(&args)));
        }
    }
    Ok(())
}
