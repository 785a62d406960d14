use std::collections::HashSet;

use rayon::prelude::*;

use super::{Dec, Flat, PForest};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Partitioned trees: all roots in one block.
    Partitioned,
    /// Partitioned trees with exactly one root.
    OneRooted,
    /// Partitioned forests, any number of root blocks.
    Forest,
    /// Plain rooted trees (every block a singleton, one root).
    Plain,
    /// Plain rooted forests.
    PlainForest,
}

/// Every way of attaching one new leaf decorated by `dec`, before mode filtering.
fn extensions(f: &Flat, dec: &Dec, mode: Mode) -> Vec<Flat> {
    let mut out = Vec::new();
    let fresh = f.block.iter().max().map_or(0, |m| m + 1);
    let push = |out: &mut Vec<Flat>, parent: Option<usize>, block: usize| {
        let mut g = f.clone();
        g.dec.push(dec.clone());
        g.parent.push(parent);
        g.block.push(block);
        out.push(g);
    };
    let singletons = matches!(mode, Mode::Plain | Mode::PlainForest);
    let single_root = matches!(mode, Mode::Partitioned | Mode::OneRooted | Mode::Plain);
    let roots = f.roots();
    if roots.is_empty() || !single_root || mode == Mode::Partitioned {
        let mut root_blocks: Vec<usize> = roots.iter().map(|&r| f.block[r]).collect();
        root_blocks.dedup();
        if !singletons {
            for b in root_blocks.iter() {
                push(&mut out, None, *b);
            }
        }
        if roots.is_empty() || !single_root {
            push(&mut out, None, fresh);
        }
    }
    for v in 0..f.len() {
        if !singletons {
            for b in f.child_blocks(v) {
                push(&mut out, Some(v), b);
            }
        }
        push(&mut out, Some(v), fresh);
    }
    out
}

/// All isoclasses with exactly `n` vertices whose decorations are drawn from `decs`, in sorted
/// canonical order.
pub fn enumerate(n: usize, decs: &[Dec], mode: Mode) -> Vec<PForest> {
    let mut level: Vec<PForest> = vec![PForest::empty()];
    for _ in 0..n {
        let next: HashSet<PForest> = level
            .par_iter()
            .flat_map_iter(|t| {
                let f = Flat::from_forest(t);
                decs.iter()
                    .flat_map(|d| extensions(&f, d, mode))
                    .map(|g| g.to_forest())
                    .collect::<Vec<_>>()
            })
            .collect();
        level = next.into_iter().collect();
    }
    level.sort();
    level
}

/// Concatenation of `enumerate(k, ..)` for `k = 0..=n`.
pub fn enumerate_upto(n: usize, decs: &[Dec], mode: Mode) -> Vec<PForest> {
    (0..=n).flat_map(|k| enumerate(k, decs, mode)).collect()
}
