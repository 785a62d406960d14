use std::collections::BTreeMap;

use super::{Block, Dec, Node, PForest};
use crate::error::{Error, Result};

/// Where a grafted tree's roots go: a fresh block, or an existing child block of the target
/// vertex (index into its canonical child-block list).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraftTarget {
    Star,
    Child(usize),
}

/// Array form of a forest used for surgery. Vertices are in preorder; `block[v]` is a block id,
/// shared by siblings of the same block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    pub dec: Vec<Dec>,
    pub parent: Vec<Option<usize>>,
    pub block: Vec<usize>,
}

impl Flat {
    pub fn from_forest(t: &PForest) -> Flat {
        fn walk(blocks: &[Block], parent: Option<usize>, f: &mut Flat, next_block: &mut usize) {
            for b in blocks {
                let id = *next_block;
                *next_block += 1;
                for n in b {
                    let v = f.dec.len();
                    f.dec.push(n.dec.clone());
                    f.parent.push(parent);
                    f.block.push(id);
                    walk(&n.children, Some(v), f, next_block);
                }
            }
        }
        let mut f = Flat {
            dec: Vec::new(),
            parent: Vec::new(),
            block: Vec::new(),
        };
        let mut next = 0;
        walk(t.blocks(), None, &mut f, &mut next);
        f
    }

    pub fn len(&self) -> usize {
        self.dec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dec.is_empty()
    }

    fn fresh_block(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    /// Child block ids of `v`, in first-occurrence order.
    pub fn child_blocks(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for w in 0..self.len() {
            if self.parent[w] == Some(v) && !out.contains(&self.block[w]) {
                out.push(self.block[w]);
            }
        }
        out
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.parent[w] == Some(v))
            .collect()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&w| self.parent[w].is_none())
            .collect()
    }

    pub fn block_members(&self, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&w| self.block[w] == b).collect()
    }

    /// Rebuilds the canonical nested form. Fails if a block mixes vertices of distinct parents.
    pub fn try_to_forest(&self) -> Result<PForest> {
        let mut groups: BTreeMap<usize, (Option<usize>, Vec<usize>)> = BTreeMap::new();
        for v in 0..self.len() {
            let e = groups
                .entry(self.block[v])
                .or_insert((self.parent[v], Vec::new()));
            if e.0 != self.parent[v] {
                return Err(Error::Invalid(format!(
                    "block {} contains vertices with different parents",
                    self.block[v]
                )));
            }
            e.1.push(v);
        }
        let mut child_groups: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        let mut root_groups = Vec::new();
        for (b, (p, _)) in &groups {
            match p {
                Some(p) => child_groups[*p].push(*b),
                None => root_groups.push(*b),
            }
        }
        fn build(
            v: usize,
            f: &Flat,
            groups: &BTreeMap<usize, (Option<usize>, Vec<usize>)>,
            child_groups: &[Vec<usize>],
        ) -> Node {
            Node {
                dec: f.dec[v].clone(),
                children: child_groups[v]
                    .iter()
                    .map(|b| {
                        groups[b]
                            .1
                            .iter()
                            .map(|&w| build(w, f, groups, child_groups))
                            .collect()
                    })
                    .collect(),
            }
        }
        let blocks = root_groups
            .iter()
            .map(|b| {
                groups[b]
                    .1
                    .iter()
                    .map(|&w| build(w, self, &groups, &child_groups))
                    .collect()
            })
            .collect();
        PForest::from_blocks(blocks)
    }

    pub fn to_forest(&self) -> PForest {
        self.try_to_forest()
            .expect("flat forest satisfies the block condition")
    }

    /// Adds edges from `s` to every root of `other`, whose roots must form a single block.
    pub fn graft(&self, s: usize, target: GraftTarget, other: &Flat) -> Result<Flat> {
        if s >= self.len() {
            return Err(Error::BadVertex(format!("{s}")));
        }
        let dest = match target {
            GraftTarget::Star => None,
            GraftTarget::Child(k) => Some(
                *self
                    .child_blocks(s)
                    .get(k)
                    .ok_or_else(|| Error::BadBlock(format!("{k}")))?,
            ),
        };
        let offset = self.len();
        let block_offset = self.fresh_block();
        let mut out = self.clone();
        for v in 0..other.len() {
            out.dec.push(other.dec[v].clone());
            match other.parent[v] {
                Some(p) => {
                    out.parent.push(Some(p + offset));
                    out.block.push(other.block[v] + block_offset);
                }
                None => {
                    out.parent.push(Some(s));
                    out.block
                        .push(dest.unwrap_or(other.block[v] + block_offset));
                }
            }
        }
        Ok(out)
    }

    /// Counter at `v` moved by `k`; `None` when it would become negative.
    pub fn shifted(&self, v: usize, k: i64) -> Option<Flat> {
        let c = self.dec[v].counter as i64 + k;
        if c < 0 {
            return None;
        }
        let mut out = self.clone();
        out.dec[v].counter = c as u32;
        Some(out)
    }

    /// Upward-closed vertex sets (closed under taking children), as bit masks.
    pub fn ideals(&self) -> Vec<u64> {
        assert!(self.len() <= 64, "forest too large for ideal enumeration");
        let mut out = vec![0u64];
        for v in 0..self.len() {
            let mut next = Vec::with_capacity(out.len() * 2);
            for m in out {
                match self.parent[v] {
                    Some(p) if m >> p & 1 == 1 => next.push(m | 1 << v),
                    _ => {
                        next.push(m);
                        next.push(m | 1 << v);
                    }
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    pub fn is_ideal(&self, mask: u64) -> bool {
        (0..self.len()).all(|v| match self.parent[v] {
            Some(p) if mask >> p & 1 == 1 => mask >> v & 1 == 1,
            _ => true,
        })
    }

    /// Induced sub-forest on `mask`. With `merge_roots`, all roots of the result share a block.
    pub fn restrict(&self, mask: u64, merge_roots: bool) -> Flat {
        let mut map = vec![usize::MAX; self.len()];
        let root_block = self.fresh_block();
        let mut out = Flat {
            dec: Vec::new(),
            parent: Vec::new(),
            block: Vec::new(),
        };
        for v in 0..self.len() {
            if mask >> v & 1 == 0 {
                continue;
            }
            map[v] = out.len();
            out.dec.push(self.dec[v].clone());
            let p = self.parent[v].filter(|p| mask >> p & 1 == 1);
            out.parent.push(p.map(|p| map[p]));
            out.block.push(if p.is_none() && merge_roots {
                root_block
            } else {
                self.block[v]
            });
        }
        out
    }

    /// `ι_I(v)`: number of child blocks of `v` contained in `mask`.
    pub fn iota(&self, mask: u64, v: usize) -> u32 {
        self.child_blocks(v)
            .into_iter()
            .filter(|&b| self.block_members(b).iter().all(|&w| mask >> w & 1 == 1))
            .count() as u32
    }

    /// `(R^I, P^I, ι_I)` for an ideal `I`.
    pub fn split_ideal(&self, mask: u64) -> Result<(PForest, PForest, Vec<u32>)> {
        if !self.is_ideal(mask) {
            return Err(Error::Invalid("vertex set is not an ideal".into()));
        }
        let iota: Vec<u32> = (0..self.len())
            .map(|v| {
                if mask >> v & 1 == 1 {
                    0
                } else {
                    self.iota(mask, v)
                }
            })
            .collect();
        let full = if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        };
        let mut r = self.restrict(full & !mask, false);
        let kept: Vec<usize> = (0..self.len()).filter(|v| mask >> v & 1 == 0).collect();
        for (i, v) in kept.iter().enumerate() {
            r.dec[i].counter += iota[*v];
        }
        let p = self.restrict(mask, true);
        Ok((r.to_forest(), p.to_forest(), iota))
    }
}

impl PForest {
    /// `T •_{s,b} T'` with `s` given in preorder.
    pub fn graft(&self, s: usize, target: GraftTarget, other: &PForest) -> Result<PForest> {
        if other.is_empty() {
            return Err(Error::Invalid("cannot graft the empty tree".into()));
        }
        if !other.is_tree() {
            return Err(Error::Invalid(
                "grafted forest must have one root block".into(),
            ));
        }
        Ok(Flat::from_forest(self)
            .graft(s, target, &Flat::from_forest(other))?
            .to_forest())
    }

    /// `T[k]_s`, or `None` for the zero element.
    pub fn shift(&self, s: usize, k: i64) -> Result<Option<PForest>> {
        let f = Flat::from_forest(self);
        if s >= f.len() {
            return Err(Error::BadVertex(format!("{s}")));
        }
        Ok(f.shifted(s, k).map(|g| g.to_forest()))
    }

    pub fn ideals(&self) -> Vec<u64> {
        Flat::from_forest(self).ideals()
    }

    pub fn split_ideal(&self, mask: u64) -> Result<(PForest, PForest, Vec<u32>)> {
        Flat::from_forest(self).split_ideal(mask)
    }
}
