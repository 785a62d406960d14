//! Truncated rigidity for connected Com-PreLie bialgebras: the coalgebra isomorphism
//! `ω : T(Prim) → A`, the Eulerian projection and the Hopf isomorphism onto a shuffle algebra.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{self, Algebra, Check, Counterexample};
use crate::error::{guard, Error, Result};
use crate::linear::linalg::{rank_of, solve_in};
use crate::linear::tensor::{tensor, tensor_apply, T2};
use crate::linear::{rat, LinComb, Rational, Tensor2};
use crate::ptree::{Dec, Label, PForest};
use crate::shuffle::{deconcat, shuffle_lc, Word};
use crate::ucp::Ucp;

pub const DEFAULT_DEGREE: usize = 4;

fn require_bialgebra<A: Algebra>(alg: &A) -> Result<()> {
    if alg.has_mul() && alg.has_coproduct() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{} is not a bialgebra",
            alg.name()
        )))
    }
}

fn reduced_basis<A: Algebra>(alg: &A, b: &A::B) -> Tensor2<A::B, A::B> {
    algebra::reduced_coproduct(alg, &LinComb::basis(b.clone()))
}

/// `ρ^{⋆n}(b)` for a basis element of positive degree.
fn rho_power<A: Algebra>(alg: &A, n: usize, b: &A::B) -> LinComb<A::B> {
    if n == 1 {
        return LinComb::basis(b.clone());
    }
    let mut out = LinComb::zero();
    for (T2(l, r), c) in reduced_basis(alg, b).iter() {
        let left = rho_power(alg, n - 1, l);
        out.add_scaled(&algebra::mul(alg, &left, &LinComb::basis(r.clone())), c);
    }
    out
}

/// `ψ = Σ_{n≥1} (−1)^{n+1}/n ρ^{⋆n}` with `ρ = Id − ηε`; the series stops at the degree.
pub fn eulerian_psi<A: Algebra>(alg: &A, x: &LinComb<A::B>) -> LinComb<A::B> {
    x.map(|b| {
        let deg = alg.degree(b);
        let mut out = LinComb::zero();
        for n in 1..=deg {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            out.add_scaled(&rho_power(alg, n, b), &rat(sign, n as i64));
        }
        out
    })
}

/// Checks `ψ∘ψ = ψ` on every basis element of degree `≤ maxdeg`.
pub fn check_psi_idempotent<A: Algebra>(alg: &A, maxdeg: usize) -> Check {
    for n in 0..=maxdeg {
        for b in alg.basis(n) {
            let once = eulerian_psi(alg, &LinComb::basis(b.clone()));
            let defect = eulerian_psi(alg, &once) - once;
            if !defect.is_zero() {
                return Err(Counterexample(format!(
                    "psi(psi({b})) - psi({b}) = {defect}"
                )));
            }
        }
    }
    Ok(())
}

/// Checks that `ψ` takes values in the primitive elements up to `maxdeg`. This holds in low degree
/// only; for a commutative, non-cocommutative bialgebra the image of `ψ` is a complement of the
/// decomposables rather than the primitives.
pub fn check_psi_primitive<A: Algebra>(alg: &A, maxdeg: usize) -> Check {
    for n in 1..=maxdeg {
        for b in alg.basis(n) {
            let image = eulerian_psi(alg, &LinComb::basis(b.clone()));
            let defect = algebra::reduced_coproduct(alg, &image);
            if !defect.is_zero() {
                return Err(Counterexample(format!(
                    "reduced coproduct of psi({b}) = {defect}"
                )));
            }
        }
    }
    Ok(())
}

/// A letter of `T(Prim)`: a basis vector of the primitives of some degree.
#[derive(Clone, Debug)]
pub struct Letter<B: crate::linear::BasisKey + std::fmt::Display> {
    pub label: Label,
    pub degree: usize,
    pub elem: LinComb<B>,
    /// A preimage of `elem` under `f_A : x ↦ x•∅`.
    pub g: LinComb<B>,
}

/// The coalgebra isomorphism `ω(x₁…xₙ) = g(x₁)•ω(x₂…xₙ)` truncated at `maxdeg`.
pub struct Omega<'a, A: Algebra> {
    alg: &'a A,
    maxdeg: usize,
    letters: Vec<Letter<A::B>>,
    degrees: HashMap<Label, usize>,
    words: Vec<Vec<Word>>,
    images: HashMap<Word, LinComb<A::B>>,
    inverse: HashMap<A::B, LinComb<Word>>,
}

/// Right inverse of `f_A` on the primitives of one degree, one preimage per basis vector.
fn right_inverse<A: Algebra>(
    alg: &A,
    prims: &[LinComb<A::B>],
    deg: usize,
) -> Result<Vec<LinComb<A::B>>> {
    let unit = algebra::unit_lc(alg);
    let images: Vec<LinComb<A::B>> = prims
        .iter()
        .map(|p| algebra::prelie(alg, p, &unit))
        .collect();
    prims
        .iter()
        .map(|p| {
            let coeffs = solve_in(&images, p).ok_or_else(|| {
                Error::Invalid(format!(
                    "f_A is not surjective on primitives of degree {deg}"
                ))
            })?;
            let mut g = LinComb::zero();
            for (j, c) in coeffs {
                g.add_scaled(&prims[j], &c);
            }
            Ok(g)
        })
        .collect()
}

fn graded_words(letters: &[(Label, usize)], n: usize) -> Vec<Word> {
    if n == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    for (l, d) in letters {
        if *d <= n {
            for rest in graded_words(letters, n - d) {
                out.push(Word::letter(l.clone()).concat(&rest));
            }
        }
    }
    out
}

pub fn build_omega<A: Algebra>(alg: &A, maxdeg: usize) -> Result<Omega<'_, A>> {
    require_bialgebra(alg)?;
    let mut letters = Vec::new();
    for n in 1..=maxdeg {
        let prims = algebra::primitive_basis(alg, n);
        let gs = right_inverse(alg, &prims, n)?;
        for (i, (elem, g)) in prims.into_iter().zip(gs).enumerate() {
            letters.push(Letter {
                label: Label::new(&format!("v{n}_{}", i + 1)),
                degree: n,
                elem,
                g,
            });
        }
    }
    let graded: Vec<(Label, usize)> = letters
        .iter()
        .map(|l| (l.label.clone(), l.degree))
        .collect();
    let degrees = graded.iter().cloned().collect();
    let words: Vec<Vec<Word>> = (0..=maxdeg).map(|n| graded_words(&graded, n)).collect();
    let mut omega = Omega {
        alg,
        maxdeg,
        letters,
        degrees,
        words,
        images: HashMap::new(),
        inverse: HashMap::new(),
    };
    for n in 0..=maxdeg {
        for w in omega.words[n].clone() {
            let image = omega.compute(&w);
            omega.images.insert(w, image);
        }
        omega.invert_slice(n)?;
    }
    Ok(omega)
}

impl<'a, A: Algebra> Omega<'a, A> {
    fn compute(&self, w: &Word) -> LinComb<A::B> {
        if w.is_empty() {
            return algebra::unit_lc(self.alg);
        }
        let head = self.letter(&w.0[0]);
        let rest = &self.images[&w.slice(1, w.len())];
        algebra::prelie(self.alg, &head.g, rest)
    }

    fn invert_slice(&mut self, n: usize) -> Result<()> {
        let images: Vec<LinComb<A::B>> = self.words[n]
            .iter()
            .map(|w| self.images[w].clone())
            .collect();
        for b in self.alg.basis(n) {
            let coeffs = solve_in(&images, &LinComb::basis(b.clone())).ok_or_else(|| {
                Error::Invalid(format!(
                    "omega is not surjective in degree {n}: {b} is missed"
                ))
            })?;
            let pre = coeffs
                .into_iter()
                .map(|(j, c)| (self.words[n][j].clone(), c))
                .collect();
            self.inverse.insert(b, pre);
        }
        Ok(())
    }

    fn letter(&self, l: &Label) -> &Letter<A::B> {
        self.letters
            .iter()
            .find(|x| &x.label == l)
            .expect("known letter")
    }

    pub fn algebra(&self) -> &'a A {
        self.alg
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    pub fn letters(&self) -> &[Letter<A::B>] {
        &self.letters
    }

    pub fn word_degree(&self, w: &Word) -> usize {
        w.0.iter().map(|l| self.degrees[l]).sum()
    }

    /// Words of degree `n` in the primitive letters.
    pub fn words(&self, n: usize) -> &[Word] {
        &self.words[n]
    }

    pub fn apply(&self, w: &Word) -> Result<LinComb<A::B>> {
        self.images
            .get(w)
            .cloned()
            .ok_or_else(|| Error::Invalid(format!("word {w} is not in the truncation")))
    }

    pub fn apply_lc(&self, x: &LinComb<Word>) -> Result<LinComb<A::B>> {
        let mut out = LinComb::zero();
        for (w, c) in x.iter() {
            out.add_scaled(&self.apply(w)?, c);
        }
        Ok(out)
    }

    pub fn inverse(&self, x: &LinComb<A::B>) -> Result<LinComb<Word>> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            guard("degree", self.alg.degree(b), self.maxdeg)?;
            out.add_scaled(&self.inverse[b], c);
        }
        Ok(out)
    }

    /// `(words, dim A_n, rank of ω)` for each degree `n ≤ maxdeg`.
    pub fn slice_ranks(&self) -> Vec<(usize, usize, usize)> {
        (0..=self.maxdeg)
            .map(|n| {
                let images: Vec<LinComb<A::B>> = self.words[n]
                    .iter()
                    .map(|w| self.images[w].clone())
                    .collect();
                (
                    self.words[n].len(),
                    self.alg.basis(n).len(),
                    rank_of(&images),
                )
            })
            .collect()
    }

    /// Bijective on each slice: as many words as basis elements, and full rank.
    pub fn check_isomorphism(&self) -> Check {
        for (n, (words, dim, rank)) in self.slice_ranks().into_iter().enumerate() {
            if words != dim || rank != dim {
                return Err(Counterexample(format!(
                    "degree {n}: {words} words, dimension {dim}, rank {rank}"
                )));
            }
        }
        Ok(())
    }

    /// `Δ∘ω = (ω⊗ω)∘Δ` on every word of the truncation.
    pub fn check_coalgebra(&self) -> Check {
        let all: Vec<&Word> = self.words.iter().flatten().collect();
        all.par_iter().try_for_each(|w| {
            let lhs = algebra::coproduct(self.alg, &self.images[*w]);
            let rhs = tensor_apply(
                &deconcat(w),
                |u| self.images[u].clone(),
                |v| self.images[v].clone(),
            );
            if lhs == rhs {
                Ok(())
            } else {
                Err(Counterexample(format!(
                    "coproduct of omega({w}): {}",
                    lhs - rhs
                )))
            }
        })
    }

    /// Matrix of `ω` in degree `n`: one row per word, columns indexed by the basis of `A_n`.
    pub fn matrix(&self, n: usize) -> Vec<Vec<Rational>> {
        let basis = self.alg.basis(n);
        self.words[n]
            .iter()
            .map(|w| basis.iter().map(|b| self.images[w].coeff(b)).collect())
            .collect()
    }
}

/// The Hopf isomorphism `F_ϖ : A → Sh(Prim)`, `F = Σ_k ϖ^{⊗k}∘Δ̃^{(k−1)}`, where `ϖ` is the
/// length-one part of `ω⁻¹∘ψ`.
pub struct HopfIso<'o, 'a, A: Algebra> {
    omega: &'o Omega<'a, A>,
    varpi: HashMap<A::B, LinComb<Label>>,
    images: HashMap<A::B, LinComb<Word>>,
}

pub fn build_hopf_iso<'o, 'a, A: Algebra>(omega: &'o Omega<'a, A>) -> Result<HopfIso<'o, 'a, A>> {
    let alg = omega.alg;
    let mut varpi = HashMap::new();
    for n in 1..=omega.maxdeg {
        for b in alg.basis(n) {
            let w = omega.inverse(&eulerian_psi(alg, &LinComb::basis(b.clone())))?;
            let v: LinComb<Label> = w
                .iter()
                .filter(|(w, _)| w.len() == 1)
                .map(|(w, c)| (w.0[0].clone(), c.clone()))
                .collect();
            varpi.insert(b, v);
        }
    }
    let mut iso = HopfIso {
        omega,
        varpi,
        images: HashMap::new(),
    };
    for n in 0..=omega.maxdeg {
        for b in alg.basis(n) {
            let image = iso.compute(&b);
            iso.images.insert(b, image);
        }
    }
    for l in &omega.letters {
        let v = iso.varpi_lc(&l.elem);
        if v != LinComb::basis(l.label.clone()) {
            return Err(Error::Invalid(format!(
                "varpi is not the identity on {}: {v}",
                l.label
            )));
        }
    }
    Ok(iso)
}

impl<'o, 'a, A: Algebra> HopfIso<'o, 'a, A> {
    /// `F(b) = ϖ(b) + Σ F(b')·ϖ(b'')` over the reduced coproduct, which unfolds the sum over
    /// iterated reduced coproducts.
    fn compute(&self, b: &A::B) -> LinComb<Word> {
        let alg = self.omega.alg;
        if alg.degree(b) == 0 {
            return LinComb::term(
                Word::empty(),
                algebra::counit(alg, &LinComb::basis(b.clone())),
            );
        }
        let mut out: LinComb<Word> = self.varpi[b].map_basis(|l| Word::letter(l.clone()));
        for (T2(l, r), c) in reduced_basis(alg, b).iter() {
            let left = &self.images[l];
            for (u, cu) in left.iter() {
                for (x, cx) in self.varpi[r].iter() {
                    out.add_term(u.concat(&Word::letter(x.clone())), c * &(cu * cx));
                }
            }
        }
        out
    }

    pub fn varpi(&self, b: &A::B) -> LinComb<Label> {
        self.varpi.get(b).cloned().unwrap_or_default()
    }

    pub fn varpi_lc(&self, x: &LinComb<A::B>) -> LinComb<Label> {
        x.map(|b| self.varpi(b))
    }

    pub fn apply(&self, b: &A::B) -> Result<LinComb<Word>> {
        guard("degree", self.omega.alg.degree(b), self.omega.maxdeg)?;
        Ok(self.images[b].clone())
    }

    pub fn apply_lc(&self, x: &LinComb<A::B>) -> Result<LinComb<Word>> {
        let mut out = LinComb::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.apply(b)?, c);
        }
        Ok(out)
    }

    /// `F(x·y) = F(x)⧢F(y)` for basis pairs of total degree `≤ maxdeg`.
    pub fn check_multiplicative(&self) -> Check {
        let alg = self.omega.alg;
        let n = self.omega.maxdeg;
        let pairs: Vec<(A::B, A::B)> = (0..=n)
            .flat_map(|i| (0..=n - i).map(move |j| (i, j)))
            .flat_map(|(i, j)| {
                let right = alg.basis(j);
                alg.basis(i)
                    .into_iter()
                    .flat_map(move |x| right.clone().into_iter().map(move |y| (x.clone(), y)))
            })
            .collect();
        pairs.par_iter().try_for_each(|(x, y)| {
            let prod = alg.mul(x, y).expect("algebra has a product");
            let lhs = self
                .apply_lc(&prod)
                .map_err(|e| Counterexample(e.to_string()))?;
            let rhs = shuffle_lc(&self.images[x], &self.images[y]);
            if lhs == rhs {
                Ok(())
            } else {
                Err(Counterexample(format!(
                    "F({x} * {y}) - F({x}) sh F({y}) = {}",
                    lhs - rhs
                )))
            }
        })
    }

    /// `Δ∘F = (F⊗F)∘Δ`, and `F` is bijective on every slice.
    pub fn check_coalgebra(&self) -> Check {
        let alg = self.omega.alg;
        for n in 0..=self.omega.maxdeg {
            let basis = alg.basis(n);
            let images: Vec<LinComb<Word>> = basis.iter().map(|b| self.images[b].clone()).collect();
            if rank_of(&images) != basis.len() || self.omega.words(n).len() != basis.len() {
                return Err(Counterexample(format!("F is not bijective in degree {n}")));
            }
            for b in &basis {
                let lhs: Tensor2<Word, Word> = self.images[b].map(deconcat);
                let rhs = tensor_apply(
                    alg.coproduct(b).as_ref().unwrap(),
                    |u| self.images[u].clone(),
                    |v| self.images[v].clone(),
                );
                if lhs != rhs {
                    return Err(Counterexample(format!(
                        "coproduct of F({b}): {}",
                        lhs - rhs
                    )));
                }
            }
        }
        Ok(())
    }

    /// `π∘F = ϖ`, where `π` keeps the length-one words.
    pub fn check_projection(&self) -> Check {
        for (b, image) in &self.images {
            if crate::shuffle::pi(image) != self.varpi(b) {
                return Err(Counterexample(format!(
                    "pi(F({b})) differs from varpi({b})"
                )));
            }
        }
        Ok(())
    }

    /// Matrix of `F` in degree `n`: one row per basis element of `A_n`, one column per word.
    pub fn matrix(&self, n: usize) -> Vec<Vec<Rational>> {
        let words = self.omega.words(n);
        self.omega
            .alg
            .basis(n)
            .iter()
            .map(|b| words.iter().map(|w| self.images[b].coeff(w)).collect())
            .collect()
    }
}

/// Looks for `x` of degree 2 in the partitioned algebra on `{d, e}` with
/// `Δ̃(x) = •_{(0,d)} ⊗ •_{(0,e)}`. Counters are carried unchanged by the coproduct, so searching
/// among counter-zero trees is complete. Returns a solution if one exists.
pub fn ucp_obstruction(d: &str, e: &str) -> Option<LinComb<PForest>> {
    let ucp = Ucp::new(vec![Label::new(d), Label::new(e)], 0);
    let basis = ucp.basis(2);
    let images: Vec<Tensor2<PForest, PForest>> =
        basis.iter().map(|b| reduced_basis(&ucp, b)).collect();
    let target = tensor(
        &LinComb::basis(PForest::single(Dec::new(d, 0))),
        &LinComb::basis(PForest::single(Dec::new(e, 0))),
    );
    solve_in(&images, &target).map(|v| v.into_iter().map(|(j, c)| (basis[j].clone(), c)).collect())
}

/// The scalars `λ` with `f_A(x) = λ x` on each letter, when `f_A` is diagonal on the chosen basis.
pub fn f_a_eigenvalues<A: Algebra>(omega: &Omega<'_, A>) -> Vec<(Label, Option<Rational>)> {
    let unit = algebra::unit_lc(omega.alg);
    omega
        .letters
        .iter()
        .map(|l| {
            let image = algebra::prelie(omega.alg, &l.elem, &unit);
            let (b, c) = l.elem.iter().next().expect("nonzero primitive");
            let lambda = image.coeff(b) / c;
            (
                l.label.clone(),
                (image == l.elem.scale(&lambda)).then_some(lambda),
            )
        })
        .collect()
}
