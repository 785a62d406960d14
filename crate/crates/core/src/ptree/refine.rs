use std::collections::BTreeMap;

use super::{varsigma, Dec, Flat, Label, PForest};

/// Block assignments of `n` items as restricted growth strings (one per set partition).
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=used {
            cur.push(b);
            rec(n, cur, used.max(b + 1), out);
            cur.pop();
        }
    }
    rec(n, &mut cur, 0, &mut out);
    out
}

/// Every tree obtained from `t` by merging sibling child blocks, with the number of ways each
/// one arises. These are exactly the `T' ≤ T` of the refinement order (the partition of `T`
/// refines that of `T'`); `t` itself appears once.
pub fn coarsenings(t: &PForest) -> BTreeMap<PForest, usize> {
    let f = Flat::from_forest(t);
    let groups: Vec<Vec<usize>> = (0..f.len())
        .map(|v| f.child_blocks(v))
        .filter(|bs| bs.len() >= 2)
        .collect();
    let choices: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| set_partitions(g.len())).collect();
    let mut out = BTreeMap::new();
    let mut idx = vec![0usize; groups.len()];
    loop {
        let mut g = f.clone();
        for (gi, blocks) in groups.iter().enumerate() {
            let assign = &choices[gi][idx[gi]];
            for w in 0..g.len() {
                if let Some(k) = blocks.iter().position(|&b| b == f.block[w]) {
                    g.block[w] = blocks[assign[k]];
                }
            }
        }
        *out.entry(g.to_forest()).or_insert(0) += 1;
        let mut i = 0;
        loop {
            if i == idx.len() {
                return out;
            }
            idx[i] += 1;
            if idx[i] < choices[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

/// `a ≤ b` in the refinement order.
pub fn leq(a: &PForest, b: &PForest) -> bool {
    a.num_vertices() == b.num_vertices() && coarsenings(b).contains_key(a)
}

/// An admissible partition `π ◁ T` and the contracted forest `T/π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissible {
    /// Part index of every vertex, in preorder.
    pub parts: Vec<usize>,
    /// The restricted pieces, indexed by part.
    pub pieces: Vec<PForest>,
    /// Plain forest whose vertices are the parts, decorated by `d<piece>`.
    pub contracted: PForest,
}

/// Decoration label naming a generator tree.
pub fn piece_label(piece: &PForest) -> Label {
    Label::new(&format!("d<{piece}>"))
}

/// All partitions of `t` into connected pieces, each a one-rooted tree with `ς = 0`.
pub fn admissible_partitions(t: &PForest) -> Vec<Admissible> {
    let f = Flat::from_forest(t);
    let n = f.len();
    let edges: Vec<usize> = (0..n).filter(|&v| f.parent[v].is_some()).collect();
    assert!(edges.len() < 32, "tree too large for partition enumeration");
    let mut out = Vec::new();
    for keep in 0u32..(1u32 << edges.len()) {
        // component representative = topmost vertex; preorder puts parents first
        let mut top = (0..n).collect::<Vec<usize>>();
        for (i, &v) in edges.iter().enumerate() {
            if keep >> i & 1 == 1 {
                top[v] = top[f.parent[v].unwrap()];
            }
        }
        let tops: Vec<usize> = (0..n).filter(|&v| top[v] == v).collect();
        let mut pieces = Vec::new();
        let mut ok = true;
        for &r in &tops {
            let mask = (0..n)
                .filter(|&v| top[v] == r)
                .fold(0u64, |m, v| m | 1 << v);
            let piece = f.restrict(mask, true).to_forest();
            if varsigma(&piece) != 0 {
                ok = false;
                break;
            }
            pieces.push(piece);
        }
        if !ok {
            continue;
        }
        let parts: Vec<usize> = (0..n)
            .map(|v| tops.iter().position(|&r| r == top[v]).unwrap())
            .collect();
        let contracted = Flat {
            dec: pieces
                .iter()
                .map(|p| Dec {
                    label: piece_label(p),
                    counter: 0,
                })
                .collect(),
            parent: tops
                .iter()
                .map(|&r| f.parent[r].map(|p| parts[p]))
                .collect(),
            block: (0..tops.len()).collect(),
        };
        out.push(Admissible {
            parts,
            pieces,
            contracted: contracted.to_forest(),
        });
    }
    out
}
