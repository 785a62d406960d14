use std::collections::HashMap;
use std::sync::Mutex;

use crate::linear::{int, LinComb};
use crate::ptree::{admissible_partitions, coarsenings, PForest};
use crate::ucp::Elem;

/// `Θ(T) = Σ_{π ◁ T} T/π`, a forest whose vertices are decorated by generator trees.
pub fn theta_basis(t: &PForest) -> Elem {
    if t.is_empty() {
        return LinComb::basis(PForest::empty());
    }
    let mut out = LinComb::zero();
    for a in admissible_partitions(t) {
        out.add_term(a.contracted, int(1));
    }
    out
}

pub fn theta(x: &Elem) -> Elem {
    x.map(theta_basis)
}

/// `Ψ(T) = Σ_{T' ≤ T} T'`: every way of merging sibling blocks of `T`.
pub fn psi_basis(t: &PForest) -> Elem {
    coarsenings(t)
        .into_iter()
        .map(|(u, m)| (u, int(m as i64)))
        .collect()
}

pub fn psi(x: &Elem) -> Elem {
    x.map(psi_basis)
}

/// `Ψ⁻¹` by Möbius recursion: `Ψ⁻¹(T) = T − Σ_{T' < T} m(T') Ψ⁻¹(T')`.
pub fn psi_inverse(x: &Elem) -> Elem {
    let memo = Mutex::new(HashMap::new());
    x.map(|t| inverse_basis(t, &memo))
}

fn inverse_basis(t: &PForest, memo: &Mutex<HashMap<PForest, Elem>>) -> Elem {
    if let Some(v) = memo.lock().unwrap().get(t) {
        return v.clone();
    }
    let mut out = LinComb::basis(t.clone());
    for (u, m) in coarsenings(t) {
        if &u == t {
            continue;
        }
        out.add_scaled(&inverse_basis(&u, memo), &int(-(m as i64)));
    }
    memo.lock().unwrap().insert(t.clone(), out.clone());
    out
}
