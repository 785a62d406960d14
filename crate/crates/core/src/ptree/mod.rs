//! Decorated partitioned rooted forests.
//!
//! A forest is a list of root blocks; every node carries a decoration and a list of child
//! blocks. Values are always kept in canonical form, so structural equality is isomorphism.

mod enumerate;
mod flat;
mod parse;
mod refine;

use std::fmt;
use std::sync::Arc;

pub use enumerate::{enumerate, enumerate_upto, Mode};
pub use flat::{Flat, GraftTarget};
pub use parse::{parse_forest, parse_vertex_ref};
pub use refine::{admissible_partitions, coarsenings, leq, piece_label, Admissible};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(s: &str) -> Self {
        Label(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Vertex decoration `(counter, label)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dec {
    pub label: Label,
    pub counter: u32,
}

impl Dec {
    pub fn new(label: &str, counter: u32) -> Self {
        Dec {
            label: Label::new(label),
            counter,
        }
    }

    pub fn plain(label: &str) -> Self {
        Dec::new(label, 0)
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counter == 0 {
            write!(f, "{}", self.label)
        } else {
            write!(f, "{}:{}", self.label, self.counter)
        }
    }
}

impl fmt::Debug for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Node {
    pub dec: Dec,
    pub children: Vec<Block>,
}

pub type Block = Vec<Node>;

/// Canonical decorated partitioned rooted forest. The empty forest is the unit `∅`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PForest {
    blocks: Vec<Block>,
}

/// Path from the root level to a vertex: at each level, (block index, node index) in canonical
/// coordinates.
pub type VertexRef = Vec<(usize, usize)>;

fn canon_node(n: &mut Node) {
    for b in &mut n.children {
        canon_block(b);
    }
    n.children.sort();
}

fn canon_block(b: &mut Block) {
    for n in b.iter_mut() {
        canon_node(n);
    }
    b.sort();
}

fn node_size(n: &Node) -> usize {
    1 + n.children.iter().flatten().map(node_size).sum::<usize>()
}

impl PForest {
    pub fn empty() -> Self {
        PForest::default()
    }

    /// Canonicalizes a raw nested structure. Empty blocks are rejected.
    pub fn from_blocks(mut blocks: Vec<Block>) -> Result<Self> {
        fn check(b: &Block) -> Result<()> {
            if b.is_empty() {
                return Err(Error::Invalid("empty block".into()));
            }
            b.iter().flat_map(|n| n.children.iter()).try_for_each(check)
        }
        blocks.iter().try_for_each(check)?;
        for b in &mut blocks {
            canon_block(b);
        }
        blocks.sort();
        Ok(PForest { blocks })
    }

    pub(crate) fn from_canonical_parts(blocks: Vec<Block>) -> Self {
        PForest::from_blocks(blocks).expect("blocks are nonempty")
    }

    /// The one-vertex tree.
    pub fn single(dec: Dec) -> Self {
        PForest {
            blocks: vec![vec![Node {
                dec,
                children: Vec::new(),
            }]],
        }
    }

    /// `B_d` applied to a list of child blocks.
    pub fn rooted(dec: Dec, children: Vec<Block>) -> Self {
        PForest::from_canonical_parts(vec![vec![Node { dec, children }]])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn num_vertices(&self) -> usize {
        self.blocks.iter().flatten().map(node_size).sum()
    }

    pub fn num_roots(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// All roots lie in one block (or the forest is empty).
    pub fn is_tree(&self) -> bool {
        self.blocks.len() <= 1
    }

    pub fn is_one_rooted(&self) -> bool {
        self.blocks.len() == 1 && self.blocks[0].len() == 1
    }

    /// Every block is a singleton.
    pub fn is_plain(&self) -> bool {
        fn plain(b: &Block) -> bool {
            b.len() == 1 && b[0].children.iter().all(plain)
        }
        self.blocks.iter().all(plain)
    }

    pub fn decorations(&self) -> Vec<Dec> {
        let f = Flat::from_forest(self);
        f.dec
    }

    pub fn has_zero_counters(&self) -> bool {
        self.decorations().iter().all(|d| d.counter == 0)
    }

    /// The root node of a one-rooted tree.
    pub fn root(&self) -> Option<&Node> {
        if self.is_one_rooted() {
            Some(&self.blocks[0][0])
        } else {
            None
        }
    }

    /// The product `·`: disjoint union with all root blocks merged into one.
    pub fn mul(&self, other: &PForest) -> PForest {
        let roots: Block = self
            .blocks
            .iter()
            .chain(other.blocks.iter())
            .flatten()
            .cloned()
            .collect();
        if roots.is_empty() {
            return PForest::empty();
        }
        PForest::from_canonical_parts(vec![roots])
    }

    /// Merges all root blocks into one.
    pub fn merge_roots(&self) -> PForest {
        self.mul(&PForest::empty())
    }

    /// Forest concatenation keeping root blocks apart.
    pub fn concat(&self, other: &PForest) -> PForest {
        let blocks = self
            .blocks
            .iter()
            .chain(other.blocks.iter())
            .cloned()
            .collect();
        PForest::from_canonical_parts(blocks)
    }

    /// Underlying plain rooted forest: every block split into singletons.
    pub fn forget_blocks(&self) -> PForest {
        fn node(n: &Node) -> Node {
            Node {
                dec: n.dec.clone(),
                children: n.children.iter().flatten().map(|c| vec![node(c)]).collect(),
            }
        }
        PForest::from_canonical_parts(
            self.blocks
                .iter()
                .flatten()
                .map(|n| vec![node(n)])
                .collect(),
        )
    }

    /// Resets every counter to zero.
    pub fn zero_counters(&self) -> PForest {
        self.map_decs(|d| Dec {
            label: d.label.clone(),
            counter: 0,
        })
    }

    pub fn map_decs(&self, mut f: impl FnMut(&Dec) -> Dec) -> PForest {
        fn node(n: &Node, f: &mut dyn FnMut(&Dec) -> Dec) -> Node {
            Node {
                dec: f(&n.dec),
                children: n
                    .children
                    .iter()
                    .map(|b| b.iter().map(|c| node(c, f)).collect())
                    .collect(),
            }
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|n| node(n, &mut f)).collect())
            .collect();
        PForest::from_canonical_parts(blocks)
    }

    /// The trees of the forest that are grafted in each root block, one forest per block.
    pub fn root_block_forests(&self) -> Vec<PForest> {
        self.blocks
            .iter()
            .map(|b| PForest::from_canonical_parts(vec![b.clone()]))
            .collect()
    }

    /// Vertex paths in the same preorder as [`Flat::from_forest`].
    pub fn vertex_refs(&self) -> Vec<VertexRef> {
        fn walk(blocks: &[Block], prefix: &VertexRef, out: &mut Vec<VertexRef>) {
            for (bi, b) in blocks.iter().enumerate() {
                for (ni, n) in b.iter().enumerate() {
                    let mut p = prefix.clone();
                    p.push((bi, ni));
                    out.push(p.clone());
                    walk(&n.children, &p, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.blocks, &Vec::new(), &mut out);
        out
    }

    /// Preorder index of a vertex path.
    pub fn resolve(&self, r: &[(usize, usize)]) -> Result<usize> {
        self.vertex_refs()
            .iter()
            .position(|p| p.as_slice() == r)
            .ok_or_else(|| Error::BadVertex(format!("{r:?}")))
    }

    pub fn node_at(&self, r: &[(usize, usize)]) -> Result<&Node> {
        let bad = || Error::BadVertex(format!("{r:?}"));
        let mut blocks = &self.blocks;
        let mut cur = None;
        for &(bi, ni) in r {
            let n = blocks.get(bi).and_then(|b| b.get(ni)).ok_or_else(bad)?;
            blocks = &n.children;
            cur = Some(n);
        }
        cur.ok_or_else(bad)
    }
}

/// `ς(T)`: number of child blocks of the root that contain exactly one vertex.
pub fn varsigma(t: &PForest) -> usize {
    t.root()
        .map(|r| r.children.iter().filter(|b| b.len() == 1).count())
        .unwrap_or(0)
}

fn fmt_node(n: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}", n.dec)?;
    if !n.children.is_empty() {
        write!(f, "(")?;
        for (i, b) in n.children.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            fmt_block(b, f)?;
        }
        write!(f, ")")?;
    }
    Ok(())
}

fn fmt_block(b: &Block, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for (i, n) in b.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        fmt_node(n, f)?;
    }
    write!(f, "]")
}

impl fmt::Display for PForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            fmt_block(b, f)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for PForest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_forest(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PForest {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(PForest::single(Dec::plain("d")).to_string(), "{[d]}");
        assert_eq!(p("{[d([f],[e])]}"), p("{[d([e],[f])]}"));
        assert_eq!(p("{[d([f,e])]}").to_string(), "{[d([e,f])]}");
        // Two roots in one block, one of them with a child, presented both ways.
        assert_eq!(p("{[a([a]),a]}"), p("{[a,a([a])]}"));
        assert_eq!(p("{[d:2]}").decorations()[0], Dec::new("d", 2));
    }

    #[test]
    fn product_merges_root_blocks() {
        let one = p("{[a]}");
        assert_eq!(one.mul(&one), p("{[a,a]}"));
        assert_eq!(one.mul(&PForest::empty()), one);
        assert_eq!(p("{[a([b])]}").mul(&p("{[c,d]}")), p("{[a([b]),c,d]}"));
        assert_eq!(one.concat(&one), p("{[a],[a]}"));
    }

    #[test]
    fn forgetting_blocks() {
        assert_eq!(p("{[d([e,f])]}").forget_blocks(), p("{[d([e],[f])]}"));
        assert_eq!(p("{[a,b]}").forget_blocks(), p("{[a],[b]}"));
        assert!(p("{[a],[b([c])]}").is_plain());
    }

    #[test]
    fn varsigma_values() {
        assert_eq!(varsigma(&p("{[a]}")), 0);
        assert_eq!(varsigma(&p("{[a([a])]}")), 1);
        assert_eq!(varsigma(&p("{[a([a,a])]}")), 0);
        assert_eq!(varsigma(&p("{[a([a],[a])]}")), 2);
    }

    #[test]
    fn vertex_paths() {
        let t = p("{[d([e],[f([g])])]}");
        let refs = t.vertex_refs();
        assert_eq!(refs.len(), 4);
        assert_eq!(t.node_at(&refs[3]).unwrap().dec, Dec::plain("g"));
        assert_eq!(t.resolve(&refs[2]).unwrap(), 2);
        assert!(t.resolve(&[(0, 1)]).is_err());
    }
}
