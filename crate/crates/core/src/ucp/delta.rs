use rayon::prelude::*;

use super::alphabet;
use crate::error::{guard, Error, Result};
use crate::linear::linalg::{rank, Indexer};
use crate::linear::tensor::T2;
use crate::linear::{int, LinComb, Tensor2};
use crate::ptree::{enumerate, Dec, Flat, Mode, PForest};

/// Largest degree any slice computation accepts unless the caller raises it.
pub const DEFAULT_MAX_DEGREE: usize = 7;

/// The permutative coproduct on nonempty trees: for every root and every child block of that
/// root, the tree with the block's subtrees removed, tensored with the removed block.
pub fn delta_perm(t: &PForest) -> Result<Tensor2<PForest, PForest>> {
    if t.is_empty() {
        return Err(Error::Invalid("δ is defined on nonempty trees only".into()));
    }
    let f = Flat::from_forest(t);
    let n = f.len();
    let mut out = LinComb::zero();
    for r in f.roots() {
        for b in f.child_blocks(r) {
            let mut cut = 0u64;
            for v in 0..n {
                // preorder: a vertex is below the block iff its parent is
                let inside = f.block[v] == b && f.parent[v] == Some(r)
                    || f.parent[v].is_some_and(|p| cut >> p & 1 == 1);
                if inside {
                    cut |= 1 << v;
                }
            }
            let full = (1u64 << n) - 1;
            let left = f.restrict(full & !cut, false).to_forest();
            let right = f.restrict(cut, true).to_forest();
            out.add_term(T2(left, right), int(1));
        }
    }
    Ok(out)
}

/// `dim Ker(δ)` on the degree-`n` slice over `k` labels, by exact rank.
pub fn kernel_delta_dims(n: usize, k: usize, max_degree: usize) -> Result<usize> {
    guard("degree", n, max_degree)?;
    if n == 0 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let labels = alphabet(k);
    let decs: Vec<Dec> = labels.iter().map(|l| Dec::plain(l.as_str())).collect();
    let basis = enumerate(n, &decs, Mode::Partitioned);
    let images: Vec<Tensor2<PForest, PForest>> = basis
        .par_iter()
        .map(|t| delta_perm(t).expect("nonempty"))
        .collect();
    let mut ix = Indexer::new();
    let cols: Vec<_> = images.iter().map(|x| ix.vector(x)).collect();
    Ok(basis.len() - rank(cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::tensor::{expand_left, swap23};
    use crate::linear::{rat, Rational};

    fn p(s: &str) -> PForest {
        s.parse().unwrap()
    }

    // The closed forms for dim Ker(δ)_n as polynomials in the number of labels.
    pub(crate) fn remark_polynomial(n: usize, d: i64) -> Rational {
        let d = Rational::from_integer(d.into());
        let pw = |k: u32| -> Rational {
            (0..k).fold(Rational::from_integer(1.into()), |acc, _| acc * &d)
        };
        match n {
            1 => d.clone(),
            2 => &d * (&d + rat(1, 1)) * rat(1, 2),
            3 => &d * (pw(2) * rat(2, 1) + rat(1, 1)) * rat(1, 3),
            4 => &d * (pw(3) * rat(11, 1) + pw(2) * rat(2, 1) + &d + rat(2, 1)) * rat(1, 8),
            5 => {
                &d * (pw(4) * rat(203, 1) + pw(3) * rat(60, 1)
                    - pw(2) * rat(5, 1)
                    - &d * rat(30, 1)
                    + rat(12, 1))
                    * rat(1, 60)
            }
            6 => {
                &d * (pw(5) * rat(220, 1)
                    + pw(4) * rat(89, 1)
                    + pw(3) * rat(16, 1)
                    + pw(2) * rat(3, 1)
                    + &d * rat(4, 1)
                    + rat(4, 1))
                    * rat(1, 24)
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn delta_examples() {
        assert!(delta_perm(&p("{[d]}")).unwrap().is_zero());
        let d = delta_perm(&p("{[d([e])]}")).unwrap();
        assert_eq!(d, LinComb::basis(T2(p("{[d]}"), p("{[e]}"))));
        let d = delta_perm(&p("{[d([e,f([g])],[h]),k]}")).unwrap();
        assert_eq!(d.coeff(&T2(p("{[d([h]),k]}"), p("{[e,f([g])]}"))), int(1));
        assert_eq!(d.coeff(&T2(p("{[d([e,f([g])]),k]}"), p("{[h]}"))), int(1));
        assert_eq!(d.len(), 2);
        assert!(delta_perm(&PForest::empty()).is_err());
    }

    #[test]
    fn permutative() {
        let decs = [Dec::plain("a"), Dec::plain("b")];
        for n in 1..=4 {
            for t in enumerate(n, &decs, Mode::Partitioned) {
                let d = delta_perm(&t).unwrap();
                let lhs = expand_left(&d, |x| delta_perm(x).unwrap());
                assert_eq!(swap23(&lhs), lhs, "{t}");
            }
        }
    }

    #[test]
    fn polynomial_spot_values() {
        assert_eq!(remark_polynomial(2, 2), int(3));
        assert_eq!(remark_polynomial(5, 1), int(4));
        assert_eq!(remark_polynomial(4, 2), int(25));
    }

    #[test]
    fn small_kernel_dims() {
        for n in 1..=4 {
            for d in 1..=2 {
                let got = kernel_delta_dims(n, d, DEFAULT_MAX_DEGREE).unwrap();
                assert_eq!(
                    int(got as i64),
                    remark_polynomial(n, d as i64),
                    "n={n} d={d}"
                );
            }
        }
        assert!(matches!(
            kernel_delta_dims(8, 1, DEFAULT_MAX_DEGREE),
            Err(Error::Resource { .. })
        ));
    }
}
